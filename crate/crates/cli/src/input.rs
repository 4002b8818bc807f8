use std::path::Path;

use anyhow::{Context, Result};
use xclab_core::polyhedra::parse_inequalities;
use xclab_core::reductions::Cnf3;
use xclab_core::{Graph, LinIneq, RatMatrix, VPolytope, XcError};

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| XcError::input(format!("cannot read {}: {e}", path.display())))
        .map_err(anyhow::Error::from)
}

pub fn graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?).with_context(|| format!("in graph file {}", path.display()))
}

pub fn polytope(path: &Path) -> Result<VPolytope> {
    VPolytope::parse(&read(path)?).with_context(|| format!("in polytope file {}", path.display()))
}

pub fn matrix(path: &Path) -> Result<RatMatrix> {
    RatMatrix::parse(&read(path)?).with_context(|| format!("in matrix file {}", path.display()))
}

pub fn inequalities(path: &Path) -> Result<Vec<LinIneq>> {
    parse_inequalities(&read(path)?).with_context(|| format!("in inequality file {}", path.display()))
}

pub fn cnf(path: &Path) -> Result<Cnf3> {
    Cnf3::parse_dimacs(&read(path)?).with_context(|| format!("in CNF file {}", path.display()))
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| XcError::input(format!("cannot write {}: {e}", path.display())).into())
}
