//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{bongartz_oracle, interval_modules, nonzero_paths, raw_quiver};
use taukit::algebra::Algebra;
use taukit::fixtures::{catalogue_b, catalogue_c, cluster_split, cluster_tilted_b, tilted_c, B_JSON, C_JSON};
use taukit::homological::{ext1_dim, is_tau_rigid, tau};
use taukit::repmod::{gen_membership, hom_dim, Module};
use taukit::schema::AlgebraJson;
use taukit::splitext::{check_statement, CheckInputs, Statement};
use taukit::tautilt::{
    bongartz_complement, is_isomorphic, is_tau_tilting, prop222_check, torsion_view, Catalogue, RigidityTable,
    DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM,
};

type Outcome = Result<String, String>;
type Criterion = (u8, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn iso(a: &Module, b: &Module) -> bool {
    is_isomorphic(a, b).unwrap_or(false)
}

fn iv_c(s: &str) -> Module {
    Module::from_interval(&tilted_c(), s).unwrap()
}

fn iv_b(s: &str) -> Module {
    Module::from_interval(&cluster_tilted_b(), s).unwrap()
}

fn sum_c(parts: &[&str]) -> Module {
    Module::direct_sum(&tilted_c(), &parts.iter().map(|p| iv_c(p)).collect::<Vec<_>>())
}

fn rigid_modules(cat: &Catalogue) -> Vec<(Vec<usize>, Module)> {
    RigidityTable::new(cat)
        .rigid_sets()
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| {
            let parts: Vec<Module> = s.iter().map(|&i| cat.module(i).clone()).collect();
            let m = Module::direct_sum(cat.algebra(), &parts);
            (s, m)
        })
        .collect()
}

fn dimensions() -> Outcome {
    let parse = |src: &str| {
        let spec: AlgebraJson = serde_json::from_str(src).unwrap();
        Algebra::from_json(&spec).unwrap()
    };
    let (c, b) = (parse(C_JSON), parse(B_JSON));
    let (pc, pb) = (nonzero_paths(&raw_quiver(C_JSON)).len(), nonzero_paths(&raw_quiver(B_JSON)).len());
    ensure!(c.dim() == 13 && pc == 13, "dim C = {}, oracle {pc}", c.dim());
    ensure!(b.dim() == 16 && pb == 16, "dim B = {}, oracle {pb}", b.dim());
    let e = cluster_split().e_dim();
    ensure!(e == 3 && pb - pc == 3, "dim E = {e}");
    Ok("dim C = 13, dim B = 16, dim E = 3".into())
}

const B_DISPLAYED: [[usize; 5]; 20] = [
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1],
    [0, 0, 1, 1, 0],
    [0, 1, 1, 0, 0],
    [1, 0, 0, 1, 0],
    [1, 1, 0, 0, 0],
    [0, 0, 1, 1, 1],
    [0, 1, 1, 1, 0],
    [1, 0, 0, 1, 1],
    [1, 0, 1, 1, 0],
    [1, 1, 0, 1, 0],
    [1, 1, 1, 0, 0],
    [0, 1, 1, 1, 1],
    [1, 0, 1, 1, 1],
    [1, 1, 0, 1, 1],
    [1, 0, 1, 2, 1],
];

fn catalogues() -> Outcome {
    let cat_c = Catalogue::build(&tilted_c(), DEFAULT_MAX_DIM, DEFAULT_MAX_COUNT).map_err(|e| e.to_string())?;
    let intervals = interval_modules(&tilted_c(), &raw_quiver(C_JSON));
    ensure!(cat_c.is_complete() && cat_c.len() == 13, "C catalogue has {} items", cat_c.len());
    let mut seen = BTreeSet::new();
    for x in &intervals {
        let i = cat_c.find(x).ok_or_else(|| format!("interval {} missing", x.layer_label()))?;
        seen.insert(i);
    }
    ensure!(seen.len() == 13, "intervals hit {} items", seen.len());
    let cat_b = Catalogue::build(&cluster_tilted_b(), DEFAULT_MAX_DIM, DEFAULT_MAX_COUNT).map_err(|e| e.to_string())?;
    ensure!(cat_b.is_complete() && cat_b.len() <= 2000, "B catalogue incomplete ({} items)", cat_b.len());
    for d in B_DISPLAYED {
        ensure!(cat_b.modules().any(|m| m.dims() == d), "no B item with dims {d:?}");
    }
    ensure!(cat_b.len() == 20, "B catalogue has {} items", cat_b.len());
    Ok("13 C items = intervals, 20 B items".into())
}

fn example_one() -> Outcome {
    let s = cluster_split();
    let m1 = sum_c(&["2/3/4/5", "2/3/4", "3"]);
    let u1 = sum_c(&["1/2/3", "3/4"]);
    ensure!(is_tau_rigid(&m1), "M1 is not τ-rigid");
    ensure!(iso(&tau(&m1), &sum_c(&["3/4/5", "4"])), "τM1 = {}", tau(&m1).layer_label());
    let (u, _) = bongartz_complement(&m1, catalogue_c()).map_err(|e| e.to_string())?;
    ensure!(iso(&u, &u1), "Bongartz complement of M1 is {}", u.layer_label());
    ensure!(s.tensor_with_e(&m1).unwrap().e_part.is_zero(), "M1⊗E ≠ 0");
    ensure!(iso(&s.tensor_with_e(&u1).unwrap().e_part, &iv_c("1")), "U1⊗E ≠ S1");
    ensure!(iso(&s.induce(&u1).unwrap(), &iv_b("1/2/3").oplus(&iv_b("3/4/1"))), "U1⊗B mismatch");
    let r = check_statement(s, Statement::ThmMain, &CheckInputs::new(m1), catalogue_c(), catalogue_b())
        .map_err(|e| e.to_string())?;
    ensure!(r.holds() && r.left == Some(true) && r.right == Some(true), "THM-MAIN report:\n{r}");
    Ok("THM-MAIN holds, both sides true".into())
}

fn example_two() -> Outcome {
    let s = cluster_split();
    let m = iv_c("3/4/5");
    let (u, _) = bongartz_complement(&m, catalogue_c()).map_err(|e| e.to_string())?;
    let expected = sum_c(&["5", "4/5", "2/3/4/5", "1/2/3"]);
    ensure!(iso(&u, &expected), "Bongartz complement of 3/4/5 is {}", u.layer_label());
    ensure!(iso(&s.tensor_with_e(&m).unwrap().e_part, &iv_c("1")), "(3/4/5)⊗E ≠ S1");
    let inputs = CheckInputs::new(m.clone());
    let run = |st| check_statement(s, st, &inputs, catalogue_c(), catalogue_b()).map_err(|e| e.to_string());
    let r = run(Statement::PropResult)?;
    ensure!(r.hypotheses.iter().all(|h| h.holds) && r.holds(), "PROP-RESULT report:\n{r}");
    let viewed = s.view_as_b(&m).unwrap();
    ensure!(is_tau_rigid(&viewed), "3/4/5 is not τ_B-rigid");
    let tb = tau(&viewed);
    ensure!(tb.dims() == [1, 0, 0, 1, 0], "τ_B dims {:?}", tb.dims());
    ensure!(iso(&s.restrict(&tb).unwrap(), &sum_c(&["4", "1"])), "restriction of τ_B is not S4 ⊕ S1");
    let r = run(Statement::PropResult2)?;
    ensure!(r.left == Some(true) && r.right == Some(true), "PROP-RESULT2 report:\n{r}");
    let r = run(Statement::ThmMain3)?;
    ensure!(r.left == Some(false) && r.right == Some(false), "THM-MAIN3 report:\n{r}");
    for label in ["5", "2/3/4/5"] {
        ensure!(r.summands.iter().any(|row| row.label == label && row.in_target), "{label} not confirmed");
    }
    Ok("PROP-RESULT, PROP-RESULT2 true; THM-MAIN3 both sides false".into())
}

fn properties() -> Outcome {
    let s = cluster_split();
    let (cat_c, cat_b) = (catalogue_c(), catalogue_b());
    let (c, b) = (tilted_c(), cluster_tilted_b());
    let mut checks = 0usize;
    for m in cat_c.modules() {
        let t = s.tensor_with_e(m).unwrap();
        let back = s.restrict(&t.induced).unwrap();
        let sum: Vec<usize> = m.dims().iter().zip(t.e_part.dims()).map(|(x, y)| x + y).collect();
        ensure!(back.dims() == sum, "induction sequence dims at {}", m.layer_label());
        ensure!(iso(&back, &m.oplus(&t.e_part)), "induction splitting at {}", m.layer_label());
        let co = s.coinduce(m).unwrap();
        let rest = s.coinduce_e_part(m).unwrap();
        let sum: Vec<usize> = m.dims().iter().zip(rest.dims()).map(|(x, y)| x + y).collect();
        ensure!(co.dims() == sum, "coinduction sequence dims at {}", m.layer_label());
        checks += 2;
    }
    ensure!(c.vertex_count() == b.vertex_count(), "simple counts differ");
    for v in 0..c.vertex_count() {
        ensure!(iso(&s.induce(&Module::projective(&c, v)).unwrap(), &Module::projective(&b, v)), "P({v})");
        ensure!(iso(&s.coinduce(&Module::injective(&c, v)).unwrap(), &Module::injective(&b, v)), "I({v})");
        checks += 2;
    }
    for m in cat_c.modules() {
        for x in cat_b.modules() {
            let [a, h] = s.adjunction_dims(m, x).unwrap();
            ensure!(a.0 == a.1 && h.0 == h.1, "adjunction at ({}, {})", m.layer_label(), x.layer_label());
            checks += 1;
        }
    }
    let rigid_c = rigid_modules(cat_c);
    for (_, m) in &rigid_c {
        ensure!(s.tau_induced_embeds(m).unwrap(), "no embedding for {}", m.layer_label());
        torsion_view(m, cat_c).map_err(|e| format!("{}: {e}", m.layer_label()))?;
        checks += 2;
    }
    for m in cat_c.modules() {
        for n in cat_c.modules() {
            let left = hom_dim(m, &tau(n)) == 0;
            let right = cat_c.modules().filter(|x| gen_membership(x, m)).all(|x| ext1_dim(n, x) == 0);
            ensure!(left == right, "Hom/Ext criterion at ({}, {})", m.layer_label(), n.layer_label());
            checks += 1;
        }
    }
    for cat in [cat_c, cat_b] {
        let n = cat.algebra().vertex_count();
        let sets = rigid_modules(cat);
        ensure!(sets.iter().all(|(s, _)| s.len() <= n), "a basic τ-rigid module is too large");
        for (set, m) in sets.iter().filter(|(s, _)| s.len() == n) {
            ensure!(is_tau_tilting(m, Some(cat)).map_err(|e| e.to_string())?, "{} not τ-tilting", m.layer_label());
            for &i in set {
                let rest: Vec<Module> = set.iter().filter(|&&j| j != i).map(|&j| cat.module(j).clone()).collect();
                let u = Module::direct_sum(cat.algebra(), &rest);
                prop222_check(cat.module(i), &u, cat).map_err(|e| format!("{}: {e}", m.layer_label()))?;
                checks += 1;
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} exhaustive checks"))
}

fn oracle_equivalence() -> Outcome {
    let cat = catalogue_c();
    let sets = rigid_modules(cat);
    for (set, m) in &sets {
        let (_, picked) = bongartz_complement(m, cat).map_err(|e| e.to_string())?;
        let oracle = bongartz_oracle(cat, set).ok_or_else(|| format!("oracle found no maximum for {}", m.layer_label()))?;
        let (p, o): (BTreeSet<_>, BTreeSet<_>) = (picked.into_iter().collect(), oracle.into_iter().collect());
        ensure!(p == o, "Bongartz of {} disagrees: {p:?} vs {o:?}", m.layer_label());
    }
    Ok(format!("{} τ-rigid modules agree", sets.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        (1, dimensions, Duration::from_secs(1)),
        (2, catalogues, Duration::from_secs(30)),
        (3, example_one, Duration::from_secs(60)),
        (4, example_two, Duration::from_secs(60)),
        (5, properties, Duration::from_secs(600)),
        (6, oracle_equivalence, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (n, run, budget) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > budget => Err(format!("over budget ({:.2?} > {budget:?})", took)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS ({took:.2?}) {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({took:.2?}) {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
