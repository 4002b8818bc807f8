//! Local vertex replacements that turn any graph into a 3-regular one while
//! keeping its stable-set polytope a projection of a face.

use std::fmt;

use num_traits::{One, Zero};

use super::stab::stab_polytope;
use super::witness::{ReductionWitness, TargetPolytope};
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::graphs::Graph;
use crate::polyhedra::{AffineMap, FaceSpec, LinIneq, Point};
use crate::ratmath::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubicStepKind {
    /// Degree `δ >= 4`: a `2δ`-cycle with the old neighbours on every other
    /// cycle vertex.
    ReduceDegree,
    /// Degree 2: a 4-cycle `b1 b2 b3 b4` with chord `b2 b4`, `b1` and `b3`
    /// taking the two neighbours.
    RemoveBridge,
    /// Degree at most 1: a triangle, one corner taking the neighbour.
    RemoveTerminal,
}

impl fmt::Display for CubicStepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CubicStepKind::ReduceDegree => "reduce-degree",
            CubicStepKind::RemoveBridge => "remove-bridge",
            CubicStepKind::RemoveTerminal => "remove-terminal",
        })
    }
}

/// One replacement. New vertices are appended after the survivors of the
/// old graph, whose relative order is kept.
#[derive(Debug, Clone)]
struct Step {
    graph: Graph,
    kind: CubicStepKind,
    /// Old index of the replaced vertex.
    v: usize,
    /// New indices of the gadget vertices, in gadget order.
    added: Vec<usize>,
}

impl Step {
    fn apply(g: &Graph, kind: CubicStepKind, v: usize) -> Result<Step> {
        if v >= g.vertex_count() {
            return Err(XcError::input(format!("vertex {v} out of range")));
        }
        let d = g.degree(v);
        let ok = match kind {
            CubicStepKind::ReduceDegree => d >= 4,
            CubicStepKind::RemoveBridge => d == 2,
            CubicStepKind::RemoveTerminal => d <= 1,
        };
        if !ok {
            return Err(XcError::input(format!("{kind} does not apply to {} of degree {d}", g.label(v))));
        }
        let nbrs: Vec<usize> = g.neighbors(v).map(|u| u - usize::from(u > v)).collect();
        let name = g.label(v).to_string();
        let mut h = g.without_vertex(v);
        let fresh = |h: &mut Graph, suffix: &str| -> Result<usize> {
            let label = h.fresh_label(&format!("{name}:{suffix}"));
            h.add_vertex(label)
        };
        let mut added = Vec::new();
        match kind {
            CubicStepKind::ReduceDegree => {
                for i in 1..=d {
                    added.push(fresh(&mut h, &format!("c{i}"))?);
                    added.push(fresh(&mut h, &format!("c{i}'"))?);
                }
                for k in 0..2 * d {
                    h.add_edge(added[k], added[(k + 1) % (2 * d)])?;
                }
                for (i, &u) in nbrs.iter().enumerate() {
                    h.add_edge(added[2 * i], u)?;
                }
            }
            CubicStepKind::RemoveBridge => {
                for i in 1..=4 {
                    added.push(fresh(&mut h, &format!("b{i}"))?);
                }
                for k in 0..4 {
                    h.add_edge(added[k], added[(k + 1) % 4])?;
                }
                h.add_edge(added[1], added[3])?;
                h.add_edge(nbrs[0], added[0])?;
                h.add_edge(added[2], nbrs[1])?;
            }
            CubicStepKind::RemoveTerminal => {
                for i in 1..=3 {
                    added.push(fresh(&mut h, &format!("t{i}"))?);
                }
                h.add_edge(added[0], added[1])?;
                h.add_edge(added[1], added[2])?;
                h.add_edge(added[0], added[2])?;
                if let Some(&u) = nbrs.first() {
                    h.add_edge(added[0], u)?;
                }
            }
        }
        Ok(Step { graph: h, kind, v, added })
    }

    /// New coordinates to old: survivors map to themselves, the replaced
    /// vertex reads the first gadget vertex.
    fn projection(&self, old: &Graph) -> Result<AffineMap> {
        let keep: Vec<usize> =
            (0..old.vertex_count()).map(|u| if u == self.v { self.added[0] } else { u - usize::from(u > self.v) }).collect();
        let mut m = AffineMap::coordinate_projection(self.graph.labels(), &keep)?;
        m.out_names = old.labels().to_vec();
        Ok(m)
    }

    fn face(&self) -> Vec<LinIneq> {
        let n = self.graph.vertex_count();
        let (weights, rhs): (Vec<i64>, i64) = match self.kind {
            CubicStepKind::ReduceDegree => (vec![1; self.added.len()], (self.added.len() / 2) as i64),
            CubicStepKind::RemoveBridge => (vec![1, 2, 1, 2], 2),
            CubicStepKind::RemoveTerminal => return Vec::new(),
        };
        let mut a = vec![int(0); n];
        for (&v, &w) in self.added.iter().zip(&weights) {
            a[v] = int(w);
        }
        vec![LinIneq::new(a, int(rhs))]
    }

    fn lift(&self, x: &[Rational]) -> Point {
        let mut y: Point = x.iter().enumerate().filter(|&(u, _)| u != self.v).map(|(_, c)| c.clone()).collect();
        y.resize(self.graph.vertex_count(), Rational::zero());
        let inside = x[self.v].is_one();
        let chosen: Vec<usize> = match (self.kind, inside) {
            (CubicStepKind::ReduceDegree, true) => self.added.iter().copied().step_by(2).collect(),
            (CubicStepKind::ReduceDegree, false) => self.added.iter().copied().skip(1).step_by(2).collect(),
            (CubicStepKind::RemoveBridge, true) => vec![self.added[0], self.added[2]],
            (CubicStepKind::RemoveBridge, false) => vec![self.added[1]],
            (CubicStepKind::RemoveTerminal, true) => vec![self.added[0]],
            (CubicStepKind::RemoveTerminal, false) => vec![],
        };
        for u in chosen {
            y[u] = Rational::one();
        }
        y
    }
}

/// Rewrites an equality on the output space of `m` over its input space.
fn pull_back(h: &LinIneq, m: &AffineMap) -> LinIneq {
    let mut coeffs = vec![Rational::zero(); m.in_dim()];
    let mut rhs = h.rhs.clone();
    for (r, a) in h.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (c, v) in m.matrix.row(r).iter().enumerate() {
            coeffs[c] += a * v;
        }
        rhs -= a * &m.offset[r];
    }
    LinIneq::new(coeffs, rhs)
}

/// One replacement of vertex `v`, with its witness.
pub fn cubic_step(g: &Graph, kind: CubicStepKind, v: usize, budget: &Budget) -> Result<(Graph, ReductionWitness)> {
    let step = Step::apply(g, kind, v)?;
    let source = stab_polytope(g, budget)?;
    let lifts = source.points().iter().map(|x| step.lift(x)).collect();
    let witness = ReductionWitness {
        name: format!("cubic-step {kind} {}", g.label(v)),
        source,
        target: TargetPolytope::StableSets(step.graph.clone()),
        face: FaceSpec::new(step.face()),
        projection: step.projection(g)?,
        lifts,
    };
    Ok((step.graph, witness))
}

#[derive(Debug, Clone)]
pub struct CubicReport {
    pub graph: Graph,
    pub witness: ReductionWitness,
    /// `(kind, label of the replaced vertex)` in application order.
    pub steps: Vec<(CubicStepKind, String)>,
    pub input_size: (usize, usize),
    pub output_size: (usize, usize),
}

/// Next replacement of the fixed schedule: lowest-indexed vertex of degree
/// at least 4, else lowest of degree at most 1, else lowest of degree 2.
fn next_step(g: &Graph) -> Option<(CubicStepKind, usize)> {
    let n = g.vertex_count();
    let first = |p: &dyn Fn(usize) -> bool| (0..n).find(|&v| p(g.degree(v)));
    first(&|d| d >= 4)
        .map(|v| (CubicStepKind::ReduceDegree, v))
        .or_else(|| first(&|d| d <= 1).map(|v| (CubicStepKind::RemoveTerminal, v)))
        .or_else(|| first(&|d| d == 2).map(|v| (CubicStepKind::RemoveBridge, v)))
}

/// Applies replacements until the graph is 3-regular. The composed witness
/// carries every step's face equalities pulled back to the final graph,
/// latest step first, so each one is valid on the face cut out by those
/// before it.
pub fn make_cubic(g: &Graph, budget: &Budget) -> Result<CubicReport> {
    if g.vertex_count() == 0 {
        return Err(XcError::input("make_cubic needs at least one vertex"));
    }
    let source = stab_polytope(g, budget)?;
    let mut current = g.clone();
    let mut steps = Vec::new();
    let mut maps = Vec::new();
    let mut faces = Vec::new();
    let mut lifts: Vec<Point> = source.points().to_vec();
    while let Some((kind, v)) = next_step(&current) {
        let step = Step::apply(&current, kind, v)?;
        maps.push(step.projection(&current)?);
        faces.push(step.face());
        lifts = lifts.iter().map(|x| step.lift(x)).collect();
        steps.push((kind, current.label(v).to_string()));
        current = step.graph;
        if current.vertex_count() > budget.enumerated_points as usize {
            return Err(XcError::refused("make_cubic", format!("{} vertices", current.vertex_count()), budget.enumerated_points));
        }
    }

    // to_final[i] maps final coordinates onto the graph after step i.
    let mut projection = AffineMap::identity(current.labels());
    let mut equalities = Vec::new();
    for (map, face) in maps.iter().zip(&faces).rev() {
        equalities.extend(face.iter().map(|h| pull_back(h, &projection)));
        projection = projection.then(map)?;
    }
    let witness = ReductionWitness {
        name: "make-cubic".into(),
        source,
        target: TargetPolytope::StableSets(current.clone()),
        face: FaceSpec::new(equalities),
        projection,
        lifts,
    };
    Ok(CubicReport {
        input_size: (g.vertex_count(), g.edge_count()),
        output_size: (current.vertex_count(), current.edge_count()),
        graph: current,
        witness,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, empty_graph, path_graph, star_graph};

    fn cubic(g: &Graph) -> bool {
        (0..g.vertex_count()).all(|v| g.degree(v) == 3)
    }

    #[test]
    fn single_steps_verify() {
        let b = Budget::default();
        let star = star_graph(4).unwrap();
        let c = star.index_of("c").unwrap();
        let (h, w) = cubic_step(&star, CubicStepKind::ReduceDegree, c, &b).unwrap();
        assert_eq!(h.vertex_count(), 12);
        assert!(w.verify(&b).unwrap().verified());

        let p = path_graph(3).unwrap();
        let (h, w) = cubic_step(&p, CubicStepKind::RemoveBridge, 1, &b).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (6, 7));
        assert!(w.verify(&b).unwrap().verified());

        let e = path_graph(2).unwrap();
        let (h, w) = cubic_step(&e, CubicStepKind::RemoveTerminal, 0, &b).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (4, 4));
        assert!(w.verify(&b).unwrap().verified());
    }

    #[test]
    fn degree_mismatch() {
        let p = path_graph(3).unwrap();
        assert!(matches!(cubic_step(&p, CubicStepKind::RemoveBridge, 0, &Budget::default()), Err(XcError::Input(_))));
    }

    #[test]
    fn schedules_end_cubic() {
        let b = Budget::default();
        let single = make_cubic(&empty_graph(1), &b).unwrap();
        assert_eq!(single.output_size, (12, 18));
        assert!(cubic(&single.graph));
        assert!(single.witness.verify(&b).unwrap().verified());

        let tri = make_cubic(&complete_graph(3).unwrap(), &b).unwrap();
        assert!(cubic(&tri.graph));
        assert!(tri.witness.verify(&b).unwrap().verified());
    }

    #[test]
    fn star_composed_witness() {
        let b = Budget::default();
        let r = make_cubic(&star_graph(4).unwrap(), &b).unwrap();
        assert!(cubic(&r.graph));
        assert_eq!(r.output_size.0, 56);
        assert!(r.witness.verify(&b).unwrap().verified());
    }
}
