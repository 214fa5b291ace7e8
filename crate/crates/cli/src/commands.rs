use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Value};
use taukit::algebra::Algebra;
use taukit::exactlin::Field;
use taukit::homological::{ext1_dim, is_tau_rigid, tau, tau_inv};
use taukit::repmod::{hom_dim, Module};
use taukit::splitext::{load_scenario, check_statement, CheckReport, SplitExtension, Verdict};
use taukit::tautilt::{bongartz_complement, decompose_grouped, describe, Catalogue, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM};

use crate::error::{code, CliError};
use crate::load::{self, CatalogueSource, ModuleArg};
use crate::{
    AlgebraCmd, AlgebraOpts, CatalogueCmd, Cli, CliResult, Command, Global, ModuleCmd, ModuleOpts, PairOpts,
    ScenarioCmd, ScenarioOpts, SplitCmd, SplitModuleOpts,
};

pub fn run(cli: &Cli) -> CliResult {
    let g = &cli.global;
    match &cli.command {
        Command::Algebra(AlgebraCmd::Info(o)) => algebra_info(g, o),
        Command::Algebra(AlgebraCmd::Basis(o)) => algebra_basis(g, o),
        Command::Module(cmd) => module_cmd(g, cmd),
        Command::Catalogue(CatalogueCmd::Build(o)) => catalogue_build(g, o),
        Command::Catalogue(CatalogueCmd::ExportDot(o)) => catalogue_dot(g, o),
        Command::Bongartz(o) => bongartz(g, o),
        Command::Split(cmd) => split_cmd(g, cmd),
        Command::Scenario(ScenarioCmd::Run(o)) => scenario_run(g, o),
    }
}

fn field(g: &Global) -> Result<Option<Field>, CliError> {
    g.field
        .as_deref()
        .map(|s| s.parse::<Field>().map_err(|e| CliError::Input(format!("bad --field: {e}"))))
        .transpose()
}

fn source(g: &Global, max_dim: usize, max_count: usize) -> CatalogueSource {
    let cache_dir = if g.no_cache { None } else { Some(g.cache_dir.clone().unwrap_or_else(load::default_cache_dir)) };
    CatalogueSource {
        cache_dir,
        max_dim: g.max_dim.unwrap_or(max_dim),
        max_count: g.max_count.unwrap_or(max_count),
    }
}

fn default_source(g: &Global) -> CatalogueSource {
    source(g, DEFAULT_MAX_DIM, DEFAULT_MAX_COUNT)
}

/// Prints either the text or the JSON form, or writes it to `--out`.
fn emit(g: &Global, text: &str, value: &Value) -> Result<(), CliError> {
    let body = if g.json { serde_json::to_string_pretty(value).expect("plain JSON") + "\n" } else { text.to_string() };
    match &g.out {
        Some(path) => fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn module_value(m: &Module) -> Result<Value, CliError> {
    let summands: Vec<Value> = decompose_grouped(m)?
        .iter()
        .map(|(x, k)| json!({"label": x.layer_label(), "dims": x.dims(), "multiplicity": k}))
        .collect();
    Ok(json!({
        "dims": m.dims(),
        "decomposition": describe(m),
        "summands": summands,
        "module": m.to_json(),
    }))
}

fn algebra_for(explicit: Option<&Path>, arg: &ModuleArg, f: Option<Field>) -> Result<Arc<Algebra>, CliError> {
    let path = match explicit {
        Some(p) => p.to_path_buf(),
        None => arg
            .algebra_path()
            .ok_or_else(|| CliError::Input("no --algebra given and the module names none".into()))?,
    };
    load::algebra(&path, f)
}

fn load_module(g: &Global, o: &ModuleOpts) -> Result<(Arc<Algebra>, Module), CliError> {
    let arg = load::module_arg(&o.module)?;
    let alg = algebra_for(o.algebra.as_deref(), &arg, field(g)?)?;
    let m = arg.build(&alg)?;
    Ok((alg, m))
}

fn load_pair(g: &Global, o: &PairOpts) -> Result<(Module, Module), CliError> {
    if o.module.len() != 2 {
        return Err(CliError::Input("give exactly two --module arguments".into()));
    }
    let a = load::module_arg(&o.module[0])?;
    let b = load::module_arg(&o.module[1])?;
    let alg = algebra_for(o.algebra.as_deref(), &a, field(g)?)?;
    Ok((a.build(&alg)?, b.build(&alg)?))
}

fn algebra_info(g: &Global, o: &AlgebraOpts) -> CliResult {
    let alg = load::algebra(&o.algebra, field(g)?)?;
    let q = alg.quiver();
    let arrows: Vec<String> = q
        .arrows()
        .iter()
        .map(|a| format!("{}: {} -> {}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)))
        .collect();
    let relations: Vec<String> = alg
        .relations()
        .iter()
        .map(|r| {
            r.terms
                .iter()
                .map(|(c, p)| if c.is_one() { q.path_name(p) } else { format!("{c}·{}", q.path_name(p)) })
                .collect::<Vec<_>>()
                .join(" + ")
        })
        .collect();
    let projectives: Vec<String> = Module::projectives(&alg).iter().map(Module::layer_label).collect();
    let injectives: Vec<String> = Module::injectives(&alg).iter().map(Module::layer_label).collect();
    let mut text = String::new();
    text += &format!("field: {}\n", alg.field());
    text += &format!("vertices: {}\n", q.vertices().join(" "));
    text += &format!("arrows: {}\n", arrows.join(", "));
    text += &format!("relations: {}\n", relations.join(", "));
    text += &format!("dimension: {}\n", alg.dim());
    text += &format!("nilpotency bound: {}\n", alg.nilpotency_bound());
    text += &format!("projectives: {}\n", projectives.join(", "));
    text += &format!("injectives: {}\n", injectives.join(", "));
    text += &format!("fingerprint: {}\n", alg.fingerprint());
    let value = json!({
        "field": alg.field().to_string(),
        "vertices": q.vertices(),
        "arrows": arrows,
        "relations": relations,
        "dimension": alg.dim(),
        "nilpotencyBound": alg.nilpotency_bound(),
        "projectives": projectives,
        "injectives": injectives,
        "fingerprint": alg.fingerprint(),
    });
    emit(g, &text, &value)?;
    Ok(code::OK)
}

fn algebra_basis(g: &Global, o: &AlgebraOpts) -> CliResult {
    let alg = load::algebra(&o.algebra, field(g)?)?;
    let q = alg.quiver();
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, p) in alg.basis().iter().enumerate() {
        let (s, t) = (q.vertex_name(p.source), q.vertex_name(p.target));
        text += &format!("{i:>3}  {:<20} {s} -> {t}\n", alg.path_name(i));
        rows.push(json!({"index": i, "path": alg.path_name(i), "source": s, "target": t}));
    }
    emit(g, &text, &Value::Array(rows))?;
    Ok(code::OK)
}

fn module_cmd(g: &Global, cmd: &ModuleCmd) -> CliResult {
    match cmd {
        ModuleCmd::Tau(o) | ModuleCmd::Tauinv(o) => {
            let (_, m) = load_module(g, o)?;
            let t = if matches!(cmd, ModuleCmd::Tau(_)) { tau(&m) } else { tau_inv(&m) };
            emit(g, &format!("{}\n", describe(&t)), &module_value(&t)?)?;
        }
        ModuleCmd::Hom(o) => {
            let (m, n) = load_pair(g, o)?;
            let d = hom_dim(&m, &n);
            emit(g, &format!("{d}\n"), &json!({"homDim": d}))?;
        }
        ModuleCmd::Ext(o) => {
            let (m, n) = load_pair(g, o)?;
            let d = ext1_dim(&m, &n);
            emit(g, &format!("{d}\n"), &json!({"ext1Dim": d}))?;
        }
        ModuleCmd::Decompose(o) => {
            let (_, m) = load_module(g, o)?;
            let mut text = String::new();
            for (x, k) in decompose_grouped(&m)? {
                text += &format!("{:<14} {:?} x{k}\n", x.layer_label(), x.dims());
            }
            emit(g, &text, &module_value(&m)?)?;
        }
        ModuleCmd::CheckRigid(o) => {
            let (_, m) = load_module(g, o)?;
            let h = hom_dim(&m, &tau(&m));
            let text = if h == 0 {
                "τ-rigid\n".to_string()
            } else {
                format!("not τ-rigid: dim Hom(M, τM) = {h}\n")
            };
            emit(g, &text, &json!({"tauRigid": h == 0, "homToTau": h}))?;
            return Ok(if h == 0 { code::OK } else { code::CHECK_FAILED });
        }
    }
    Ok(code::OK)
}

fn catalogue_text(cat: &Catalogue) -> String {
    let mut text = format!("{} indecomposables{}\n", cat.len(), if cat.is_complete() { "" } else { " (incomplete)" });
    for (i, it) in cat.items().iter().enumerate() {
        let kind = match (it.projective, it.injective) {
            (true, true) => "P I",
            (true, false) => "P",
            (false, true) => "I",
            _ => "",
        };
        let tau = it.tau.map(|t| format!("τ = #{t}")).unwrap_or_default();
        text += &format!("{i:>4}  {:<14} {:<18} {kind:<4} {tau}\n", it.label, format!("{:?}", it.module.dims()));
    }
    text
}

fn catalogue_build(g: &Global, o: &AlgebraOpts) -> CliResult {
    let alg = load::algebra(&o.algebra, field(g)?)?;
    let cat = default_source(g).get(&alg)?;
    let value = serde_json::to_value(cat.to_json()).expect("catalogue serializes");
    match &g.out {
        Some(path) => {
            fs::write(path, serde_json::to_string_pretty(&value).expect("plain JSON"))?;
            print!("{}", catalogue_text(&cat));
        }
        None => emit(g, &catalogue_text(&cat), &value)?,
    }
    Ok(code::OK)
}

fn catalogue_dot(g: &Global, o: &AlgebraOpts) -> CliResult {
    let alg = load::algebra(&o.algebra, field(g)?)?;
    let cat = default_source(g).get(&alg)?;
    let dot = cat.to_dot();
    match &g.out {
        Some(path) => fs::write(path, dot)?,
        None => print!("{dot}"),
    }
    Ok(code::OK)
}

fn bongartz(g: &Global, o: &ModuleOpts) -> CliResult {
    let (alg, m) = load_module(g, o)?;
    if !is_tau_rigid(&m) {
        return Err(CliError::CheckFailed("module is not τ-rigid".into()));
    }
    let cat = default_source(g).get(&alg)?;
    let (u, _) = bongartz_complement(&m, &cat)?;
    emit(g, &format!("{}\n", describe(&u)), &module_value(&u)?)?;
    Ok(code::OK)
}

fn load_split(g: &Global, path: &Path) -> Result<SplitExtension, CliError> {
    Ok(SplitExtension::from_file(path, field(g)?)?)
}

fn split_module(g: &Global, o: &SplitModuleOpts, over_b: bool) -> Result<(SplitExtension, Module), CliError> {
    let s = load_split(g, &o.split)?;
    let arg = load::module_arg(&o.module)?;
    let alg = if over_b { s.b().clone() } else { s.c().clone() };
    let m = arg.build(&alg)?;
    Ok((s, m))
}

fn split_cmd(g: &Global, cmd: &SplitCmd) -> CliResult {
    match cmd {
        SplitCmd::Validate(o) => {
            let s = load_split(g, &o.split)?;
            let q = s.b().quiver();
            let ext: Vec<&str> = s.extension_arrows().iter().map(|&a| q.arrow(a).name.as_str()).collect();
            let text = format!(
                "valid split extension: dim B = {}, dim C = {}, dim E = {}\nextension arrows: {}\n",
                s.b().dim(),
                s.c().dim(),
                s.e_dim(),
                ext.join(", ")
            );
            let value = json!({
                "valid": true,
                "dimB": s.b().dim(),
                "dimC": s.c().dim(),
                "dimE": s.e_dim(),
                "extensionArrows": ext,
            });
            emit(g, &text, &value)?;
        }
        SplitCmd::Induce(o) => {
            let (s, m) = split_module(g, o, false)?;
            let x = s.induce(&m)?;
            emit(g, &format!("{}\n", describe(&x)), &module_value(&x)?)?;
        }
        SplitCmd::Restrict(o) => {
            let (s, x) = split_module(g, o, true)?;
            let m = s.restrict(&x)?;
            emit(g, &format!("{}\n", describe(&m)), &module_value(&m)?)?;
        }
        SplitCmd::TensorE(o) => {
            let (s, m) = split_module(g, o, false)?;
            let e = s.tensor_with_e(&m)?.e_part;
            emit(g, &format!("{}\n", describe(&e)), &module_value(&e)?)?;
        }
        SplitCmd::Check(o) => {
            let (report, ..) = run_scenario(g, &o.scenario)?;
            emit(g, &format!("{report}\n"), &report_value(&report))?;
            return Ok(verdict_code(&report));
        }
    }
    Ok(code::OK)
}

fn report_value(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn verdict_code(r: &CheckReport) -> i32 {
    match r.verdict {
        Verdict::Holds => code::OK,
        Verdict::Fails => code::CHECK_FAILED,
        Verdict::HypothesisFailed => code::HYPOTHESIS_FAILED,
    }
}

fn run_scenario(g: &Global, path: &Path) -> Result<(CheckReport, Catalogue, Catalogue, bool), CliError> {
    let sc = load_scenario(path, field(g)?)?;
    let src = source(g, sc.limits.max_dim, sc.limits.max_count);
    let cat_c = src.get(sc.split.c())?;
    let cat_b = src.get(sc.split.b())?;
    let report = check_statement(&sc.split, sc.statement, &sc.inputs, &cat_c, &cat_b)?;
    Ok((report, cat_c, cat_b, sc.dot))
}

fn scenario_run(g: &Global, o: &ScenarioOpts) -> CliResult {
    let (report, cat_c, cat_b, dot) = run_scenario(g, &o.scenario)?;
    let text = format!("{report}\n");
    let value = report_value(&report);
    match &g.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let report_path: PathBuf = dir.join("report.json");
            fs::write(&report_path, serde_json::to_string_pretty(&value).expect("plain JSON") + "\n")?;
            if dot {
                fs::write(dir.join("ar-quiver-C.dot"), cat_c.to_dot())?;
                fs::write(dir.join("ar-quiver-B.dot"), cat_b.to_dot())?;
            }
            if g.json {
                println!("{}", serde_json::to_string_pretty(&value).expect("plain JSON"));
            } else {
                print!("{text}");
            }
        }
        None => emit(g, &text, &value)?,
    }
    Ok(verdict_code(&report))
}
