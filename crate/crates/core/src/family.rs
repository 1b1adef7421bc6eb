//! Forbidden families and the named built-in patterns.

use std::path::Path;

use crate::constructions::{cospan, suspension};
use crate::error::{Error, Result};
use crate::hypergraph::{PairGraph, TriSystem};
use crate::steiner::SteinerSystem;

/// Classic 7-point plane as a fixed difference-set labelling {i, i+1, i+3}.
pub fn fano() -> TriSystem {
    let triples = (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]);
    TriSystem::new(7, triples).expect("the Fano plane is a valid 3-graph")
}

pub fn fano_system() -> SteinerSystem {
    SteinerSystem::new(fano()).expect("the Fano plane covers every pair once")
}

/// Resolves a built-in pattern name: K3..K9, K4-, F32, F7, SKs:<s>, FKs:<s>.
pub fn builtin(name: &str) -> Result<TriSystem> {
    if let Some(rest) = name.strip_prefix("SKs:") {
        let s: usize = rest
            .parse()
            .map_err(|_| Error::UnknownFamily(name.to_string()))?;
        if s < 3 {
            return Err(Error::invalid("SKs:<s> needs s >= 3"));
        }
        return Ok(suspension(&PairGraph::complete(s)));
    }
    if let Some(rest) = name.strip_prefix("FKs:") {
        let s: usize = rest
            .parse()
            .map_err(|_| Error::UnknownFamily(name.to_string()))?;
        if s < 3 {
            return Err(Error::invalid("FKs:<s> needs s >= 3"));
        }
        return Ok(cospan(&TriSystem::complete(s)));
    }
    match name {
        "K3" | "K4" | "K5" | "K6" | "K7" | "K8" | "K9" => {
            let s: usize = name[1..].parse().expect("digit");
            Ok(TriSystem::complete(s))
        }
        "K4-" => Ok(suspension(&PairGraph::triangle())),
        "F32" => Ok(cospan(&TriSystem::complete(3))),
        "F7" => Ok(fano()),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

/// A finite list of named forbidden patterns, each with at least one edge.
#[derive(Clone, Debug)]
pub struct ForbiddenFamily {
    names: Vec<String>,
    members: Vec<TriSystem>,
}

impl ForbiddenFamily {
    pub fn new(members: Vec<(String, TriSystem)>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::invalid("a forbidden family must not be empty"));
        }
        if let Some((name, _)) = members.iter().find(|(_, m)| m.edge_count() == 0) {
            return Err(Error::invalid(format!(
                "family member '{name}' has no edges; members must be non-empty 3-graphs"
            )));
        }
        let (names, members) = members.into_iter().unzip();
        Ok(ForbiddenFamily { names, members })
    }

    /// Parses a comma-separated list of built-in names, or a path to a
    /// 3-graph file which becomes a single member.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let path = Path::new(spec);
        if path.exists() {
            let system = crate::io::read_tri_file(path)?;
            return ForbiddenFamily::new(vec![(spec.to_string(), system)]);
        }
        let members = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| Ok((name.to_string(), builtin(name)?)))
            .collect::<Result<Vec<_>>>()?;
        ForbiddenFamily::new(members)
    }

    pub fn members(&self) -> &[TriSystem] {
        &self.members
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn merged(&self, other: &ForbiddenFamily) -> ForbiddenFamily {
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        ForbiddenFamily { names, members }
    }
}
