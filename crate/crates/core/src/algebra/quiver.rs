use std::collections::HashMap;

use crate::exactlin::Scalar;

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with named vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_lookup: HashMap<String, usize>,
    arrow_lookup: HashMap<String, usize>,
}

impl Quiver {
    pub fn new<V: AsRef<str>, S: AsRef<str>>(
        vertices: &[V],
        arrows: &[(S, S, S)],
    ) -> Result<Self, AlgebraError> {
        let mut vertex_lookup = HashMap::new();
        let mut vs = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref().to_string();
            if vertex_lookup.insert(v.clone(), vs.len()).is_some() {
                return Err(AlgebraError::Quiver(format!("duplicate vertex {v}")));
            }
            vs.push(v);
        }
        let mut arrow_lookup = HashMap::new();
        let mut arr = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            let name = name.as_ref().to_string();
            let source = *vertex_lookup
                .get(from.as_ref())
                .ok_or_else(|| AlgebraError::Quiver(format!("arrow {name}: unknown vertex {}", from.as_ref())))?;
            let target = *vertex_lookup
                .get(to.as_ref())
                .ok_or_else(|| AlgebraError::Quiver(format!("arrow {name}: unknown vertex {}", to.as_ref())))?;
            if arrow_lookup.insert(name.clone(), arr.len()).is_some() {
                return Err(AlgebraError::Quiver(format!("duplicate arrow {name}")));
            }
            arr.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices: vs, arrows: arr, vertex_lookup, arrow_lookup })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrow_lookup.get(name).copied()
    }

    /// Arrows from `s` to `t`, in declaration order.
    pub fn arrows_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].source == s && self.arrows[a].target == t)
            .collect()
    }

    /// The same vertices with every arrow reversed (names kept).
    pub fn opposite(&self) -> Quiver {
        let arrows: Vec<(String, String, String)> = self
            .arrows
            .iter()
            .map(|a| (a.name.clone(), self.vertices[a.target].clone(), self.vertices[a.source].clone()))
            .collect();
        Quiver::new(&self.vertices, &arrows).expect("opposite of a valid quiver")
    }

    /// Checks composability of an arrow word and returns its endpoints.
    pub fn path_from_arrows(&self, arrows: &[usize]) -> Option<Path> {
        let first = arrows.first()?;
        let source = self.arrows[*first].source;
        let mut at = source;
        for &a in arrows {
            if self.arrows[a].source != at {
                return None;
            }
            at = self.arrows[a].target;
        }
        Some(Path { source, target: at, arrows: arrows.to_vec() })
    }

    pub fn path_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path, AlgebraError> {
        let idx = names
            .iter()
            .map(|n| {
                self.arrow_index(n.as_ref())
                    .ok_or_else(|| AlgebraError::Quiver(format!("unknown arrow {}", n.as_ref())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if idx.is_empty() {
            return Err(AlgebraError::Quiver("empty arrow word".into()));
        }
        self.path_from_arrows(&idx).ok_or_else(|| {
            let joined: Vec<&str> = names.iter().map(|n| n.as_ref()).collect();
            AlgebraError::Quiver(format!("arrows {} do not compose", joined.join("")))
        })
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("")
        }
    }
}

/// A path, composed left to right: `ab` means `a` then `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Result<Self, AlgebraError> {
        let Some((_, first)) = terms.first() else {
            return Err(AlgebraError::MalformedRelation("empty relation".into()));
        };
        let (s, t) = (first.source, first.target);
        for (_, p) in &terms {
            if p.source != s || p.target != t {
                return Err(AlgebraError::MalformedRelation("paths are not parallel".into()));
            }
            if p.len() < 2 {
                return Err(AlgebraError::MalformedRelation(
                    "relation paths must have length at least 2".into(),
                ));
            }
        }
        Ok(Relation { terms })
    }

    pub fn reversed(&self) -> Relation {
        Relation { terms: self.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect() }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}
