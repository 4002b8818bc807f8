//! Stable sets of a graph as a face of the cut polytope of its suspension.

use super::stab::stab_polytope;
use super::witness::{ReductionWitness, TargetPolytope};
use crate::budget::Budget;
use crate::cutpoly::{cut_polytope, cut_vector};
use crate::error::Result;
use crate::graphs::{suspension, Graph};
use crate::polyhedra::{AffineMap, FaceSpec, LinIneq};
use crate::ratmath::int;

/// Face `x_{0i} + x_{0j} = x_{ij}` per edge `ij` of `g`, projected onto the
/// apex edges. A stable set `S` lifts to the cut with shore `S`.
pub fn suspension_reduction(g: &Graph, budget: &Budget) -> Result<ReductionWitness> {
    let n = g.vertex_count();
    let s = suspension(g);
    let target = cut_polytope(&s, budget)?;
    let index = s.edge_index();
    let dim = s.edge_count();
    let apex_edge = |i: usize| index[&(i, n)];
    let equalities = g
        .edges()
        .into_iter()
        .map(|(i, j)| {
            let mut a = vec![int(0); dim];
            a[apex_edge(i)] = int(-1);
            a[apex_edge(j)] = int(-1);
            a[index[&(i, j)]] = int(1);
            LinIneq::new(a, int(0))
        })
        .collect();
    let keep: Vec<usize> = (0..n).map(apex_edge).collect();
    let mut projection = AffineMap::coordinate_projection(target.coord_names(), &keep)?;
    projection.out_names = g.labels().to_vec();
    let source = stab_polytope(g, budget)?;
    let lifts = source
        .points()
        .iter()
        .map(|x| {
            let side: Vec<usize> = (0..n).filter(|&i| x[i] == int(1)).collect();
            cut_vector(&s, &side)
        })
        .collect();
    Ok(ReductionWitness {
        name: "suspension".into(),
        source,
        target: TargetPolytope::Explicit(target),
        face: FaceSpec::new(equalities),
        projection,
        lifts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cycle_graph, empty_graph, path_graph};
    use crate::polyhedra::{face_vertices, point_label};

    #[test]
    fn single_edge() {
        let b = Budget::default();
        let w = suspension_reduction(&path_graph(2).unwrap(), &b).unwrap();
        let TargetPolytope::Explicit(t) = &w.target else { panic!() };
        assert_eq!(face_vertices(t, &w.face).unwrap().len(), 3);
        let report = w.verify(&b).unwrap();
        assert!(report.verified());
        let labels: Vec<String> = w.source.points().iter().map(|x| point_label(x)).collect();
        assert_eq!(labels, ["00", "01", "10"]);
    }

    #[test]
    fn edgeless_and_cycle() {
        let b = Budget::default();
        let w = suspension_reduction(&empty_graph(2), &b).unwrap();
        assert!(w.face.is_empty());
        assert_eq!(w.source.len(), 4);
        assert!(w.verify(&b).unwrap().verified());
        assert!(suspension_reduction(&cycle_graph(4).unwrap(), &b).unwrap().verify(&b).unwrap().verified());
    }
}
