//! Replacing edge crossings of a drawing with a 22-vertex stable-set gadget.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::{One, Zero};

use super::stab::{stab_polytope, IntFace, StableSearch};
use super::witness::{ReductionWitness, TargetPolytope};
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::graphs::{circular_crossings, content_lines, Graph};
use crate::polyhedra::{AffineMap, FaceSpec, LinIneq};
use crate::ratmath::{int, Rational};

/// Shipped gadget, in the format read by [`CrossingGadget::parse`].
pub const DEFAULT_GADGET: &str = include_str!("../../data/crossing_gadget.txt");

/// Environment variable naming a gadget file to use instead of the shipped one.
pub const GADGET_ENV: &str = "XCLAB_GADGET";

/// Maximum stable-set size every gadget copy must reach inside the face.
pub const GADGET_FACE_RHS: i64 = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingGadget {
    pub graph: Graph,
    /// `v1, v1', v2, v2'` as vertex indices of `graph`.
    pub boundary: [usize; 4],
}

impl CrossingGadget {
    /// A `boundary A A' B B'` line naming the two boundary pairs, then a
    /// graph in the usual text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let head = lines.next().ok_or_else(|| XcError::input("empty gadget file"))?;
        let parts: Vec<&str> = head.split_whitespace().collect();
        let ["boundary", a, b, c, d] = parts[..] else {
            return Err(XcError::input(format!("expected 'boundary v1 v1' v2 v2'', got {head:?}")));
        };
        let graph = Graph::parse_lines(&mut lines, true)?;
        let find = |l: &str| graph.index_of(l).ok_or_else(|| XcError::input(format!("boundary vertex {l} is not in the gadget")));
        let boundary = [find(a)?, find(b)?, find(c)?, find(d)?];
        for i in 0..4 {
            if boundary[..i].contains(&boundary[i]) {
                return Err(XcError::input("boundary vertices must be distinct"));
            }
        }
        Ok(CrossingGadget { graph, boundary })
    }

    pub fn shipped() -> Self {
        Self::parse(DEFAULT_GADGET).expect("shipped gadget parses")
    }

    /// The file named by [`GADGET_ENV`] if set, else the shipped gadget.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(GADGET_ENV) {
            Some(p) => Self::load(Path::new(&p)),
            None => Ok(Self::shipped()),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| XcError::input(format!("cannot read gadget {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_text(&self) -> String {
        let b: Vec<&str> = self.boundary.iter().map(|&v| self.graph.label(v)).collect();
        format!("boundary {}\n{}", b.join(" "), self.graph.to_text())
    }

    /// Largest stable set containing exactly the boundary vertices in
    /// `inside` (bit `k` for `boundary[k]`) and none of the others.
    fn best_with_boundary(&self, inside: u8, budget: &Budget) -> Result<Option<Vec<bool>>> {
        let n = self.graph.vertex_count();
        let mut fixed = vec![None; n];
        for (k, &v) in self.boundary.iter().enumerate() {
            fixed[v] = Some(inside >> k & 1 == 1);
        }
        let face = IntFace::default();
        let mut best: Option<Vec<bool>> = None;
        let mut best_size = 0;
        let mut search = StableSearch::new(&self.graph, &face, fixed, budget).maximize(vec![1; n]).free_tail();
        search.run(&mut |s| {
            let size = s.iter().filter(|&&b| b).count();
            if best.is_none() || size > best_size {
                best = Some(s.to_vec());
                best_size = size;
            }
            true
        })?;
        Ok(best)
    }
}

/// `s[i][j]`: largest stable set of the gadget holding exactly `i` of
/// `{v1, v1'}` and `j` of `{v2, v2'}`; `None` when no such set exists.
pub fn gadget_table(g: &CrossingGadget, budget: &Budget) -> Result<[[Option<usize>; 3]; 3]> {
    let mut s = [[None; 3]; 3];
    for inside in 0u8..16 {
        let i = (inside & 1) + (inside >> 1 & 1);
        let j = (inside >> 2 & 1) + (inside >> 3 & 1);
        if let Some(set) = g.best_with_boundary(inside, budget)? {
            let size = set.iter().filter(|&&b| b).count();
            let cell: &mut Option<usize> = &mut s[i as usize][j as usize];
            *cell = Some(cell.map_or(size, |c| c.max(size)));
        }
    }
    Ok(s)
}

/// Rows `i = 2, 1, 0`, columns `j = 2, 1, 0`, as printed in the usual layout.
pub fn gadget_table_text(s: &[[Option<usize>; 3]; 3]) -> String {
    let mut out = String::from("i\\j 2 1 0\n");
    for i in (0..3).rev() {
        let cells: Vec<String> = (0..3).rev().map(|j| s[i][j].map_or("-".to_string(), |v| v.to_string())).collect();
        out.push_str(&format!("{i} {}\n", cells.join(" ")));
    }
    out
}

#[derive(Debug, Clone)]
pub struct Planarized {
    pub graph: Graph,
    pub crossings: usize,
    pub witness: ReductionWitness,
}

/// Draws `g` with vertices on a circle, replaces each crossing by a gadget
/// copy `g{k}` and splices both crossing edges through it. Original vertices
/// keep their indices; gadget copies follow in crossing order.
pub fn planarize(g: &Graph, gadget: &CrossingGadget, budget: &Budget) -> Result<Planarized> {
    let crossings = circular_crossings(g);
    if crossings.len() > budget.gadgets {
        return Err(XcError::refused("planarize", format!("{} gadgets", crossings.len()), budget.gadgets));
    }
    let n = g.vertex_count();
    let source = stab_polytope(g, budget)?;
    if crossings.is_empty() {
        let witness = ReductionWitness {
            name: "planarize".into(),
            source: source.clone(),
            target: TargetPolytope::StableSets(g.clone()),
            face: FaceSpec::default(),
            projection: AffineMap::identity(g.labels()),
            lifts: source.points().to_vec(),
        };
        return Ok(Planarized { graph: g.clone(), crossings: 0, witness });
    }

    // Gadget sets for each (prime on pair 1, prime on pair 2).
    let mut fills = Vec::with_capacity(4);
    for combo in 0u8..4 {
        let (p1, p2) = (combo & 1 == 1, combo >> 1 & 1 == 1);
        let inside = if p1 { 0b10 } else { 0b01 } | if p2 { 0b1000 } else { 0b0100 };
        let set = gadget.best_with_boundary(inside, budget)?;
        match set {
            Some(s) if s.iter().filter(|&&b| b).count() as i64 == GADGET_FACE_RHS => fills.push(s),
            _ => {
                return Err(XcError::verification(format!(
                    "gadget has no stable set of size {GADGET_FACE_RHS} with boundary pattern {inside:04b}"
                )))
            }
        }
    }

    let mut h = Graph::new(g.labels().iter().cloned())?;
    let gsize = gadget.graph.vertex_count();
    let mut base = Vec::with_capacity(crossings.len());
    for k in 0..crossings.len() {
        base.push(h.vertex_count());
        for v in 0..gsize {
            h.add_vertex(format!("g{}:{}", k + 1, gadget.graph.label(v)))?;
        }
        for (u, v) in gadget.graph.edges() {
            h.add_edge(base[k] + u, base[k] + v)?;
        }
    }
    // Per crossed edge: (order along the edge, gadget, which boundary pair).
    let mut along: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for (k, c) in crossings.iter().enumerate() {
        along.entry(c.edge_a).or_default().push((c.order_on_a, k, 0));
        along.entry(c.edge_b).or_default().push((c.order_on_b, k, 2));
    }
    for (a, b) in g.edges() {
        let Some(list) = along.get_mut(&(a, b)) else {
            h.add_edge(a, b)?;
            continue;
        };
        list.sort_unstable();
        let mut prev = a;
        for &(_, k, pair) in list.iter() {
            h.add_edge(prev, base[k] + gadget.boundary[pair])?;
            prev = base[k] + gadget.boundary[pair + 1];
        }
        h.add_edge(prev, b)?;
    }

    let total = h.vertex_count();
    let equalities = base
        .iter()
        .map(|&b0| {
            let mut a = vec![int(0); total];
            for c in a.iter_mut().skip(b0).take(gsize) {
                *c = int(1);
            }
            LinIneq::new(a, int(GADGET_FACE_RHS))
        })
        .collect();
    let keep: Vec<usize> = (0..n).collect();
    let projection = AffineMap::coordinate_projection(h.labels(), &keep)?;

    let lifts = source
        .points()
        .iter()
        .map(|x| {
            let inside = |v: usize| x[v].is_one();
            // The prime side is taken unless the far endpoint alone is in S.
            let prime = |(a, b): (usize, usize)| inside(a) || !inside(b);
            let mut y = x.clone();
            y.resize(total, Rational::zero());
            for (k, c) in crossings.iter().enumerate() {
                let combo = usize::from(prime(c.edge_a)) | usize::from(prime(c.edge_b)) << 1;
                for (v, &t) in fills[combo].iter().enumerate() {
                    if t {
                        y[base[k] + v] = Rational::one();
                    }
                }
            }
            y
        })
        .collect();
    let witness = ReductionWitness {
        name: "planarize".into(),
        source,
        target: TargetPolytope::StableSets(h.clone()),
        face: FaceSpec::new(equalities),
        projection,
        lifts,
    };
    Ok(Planarized { graph: h, crossings: crossings.len(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::complete_graph;

    #[test]
    fn shipped_table() {
        let s = gadget_table(&CrossingGadget::shipped(), &Budget::default()).unwrap();
        assert_eq!(gadget_table_text(&s), "i\\j 2 1 0\n2 9 8 7\n1 9 9 8\n0 8 8 7\n");
    }

    #[test]
    fn gadget_round_trip() {
        let g = CrossingGadget::shipped();
        assert_eq!(CrossingGadget::parse(&g.to_text()).unwrap(), g);
        assert!(CrossingGadget::parse("boundary a b c\n1 0\na\n").is_err());
    }

    #[test]
    fn single_crossing() {
        let b = Budget::default();
        let g = Graph::from_edges(["1", "2", "3", "4"], &[("1", "3"), ("2", "4")]).unwrap();
        let p = planarize(&g, &CrossingGadget::shipped(), &b).unwrap();
        assert_eq!((p.crossings, p.graph.vertex_count()), (1, 26));
        assert!(p.witness.verify(&b).unwrap().verified());
    }

    #[test]
    fn k4_and_uncrossed() {
        let b = Budget::default();
        let p = planarize(&complete_graph(4).unwrap(), &CrossingGadget::shipped(), &b).unwrap();
        assert!(p.witness.verify(&b).unwrap().verified());
        let c4 = crate::graphs::cycle_graph(4).unwrap();
        let p = planarize(&c4, &CrossingGadget::shipped(), &b).unwrap();
        assert_eq!((p.crossings, p.graph.clone()), (0, c4));
        assert!(p.witness.verify(&b).unwrap().verified());
    }
}
