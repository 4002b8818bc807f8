//! Stable-set enumeration and search, optionally restricted to a face given
//! by integer equalities.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bits::Bits;
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::graphs::Graph;
use crate::polyhedra::{FaceSpec, LinIneq, VPolytope};
use crate::ratmath::Rational;

/// Face equalities as dense integer rows over the vertices.
#[derive(Debug, Clone, Default)]
pub(crate) struct IntFace {
    pub coeffs: Vec<Vec<i64>>,
    pub rhs: Vec<i64>,
}

impl IntFace {
    pub fn from_equalities(eqs: &[LinIneq], n: usize) -> Result<Self> {
        let mut face = IntFace::default();
        for (k, h) in eqs.iter().enumerate() {
            if h.dim() != n {
                return Err(XcError::input(format!("face equality {k} has length {}, graph has {n} vertices", h.dim())));
            }
            let c = h.canonical();
            let conv = |x: &Rational| x.to_integer().to_i64().ok_or_else(|| XcError::input(format!("face equality {k} has huge coefficients")));
            face.coeffs.push(c.coeffs.iter().map(conv).collect::<Result<_>>()?);
            face.rhs.push(conv(&c.rhs)?);
        }
        Ok(face)
    }

    pub fn from_face(face: &FaceSpec, n: usize) -> Result<Self> {
        Self::from_equalities(&face.equalities, n)
    }

    fn len(&self) -> usize {
        self.rhs.len()
    }
}

/// Depth-first search over stable sets. Partial sums of each equality are
/// bounded by what the undecided vertices could still add. With
/// [`StableSearch::free_tail`] only vertices touched by the face, the fixed
/// values or the objective are branched on; the rest stay out.
pub(crate) struct StableSearch<'a> {
    adj: Vec<Bits>,
    face: &'a IntFace,
    fixed: Vec<Option<bool>>,
    weights: Option<Vec<i64>>,
    free_tail: bool,
    order: Vec<usize>,
    hi: Vec<Vec<i64>>,
    lo: Vec<Vec<i64>>,
    suffix: Vec<i64>,
    best: Option<i64>,
    nodes: u64,
    node_limit: u64,
}

impl<'a> StableSearch<'a> {
    pub fn new(g: &Graph, face: &'a IntFace, fixed: Vec<Option<bool>>, budget: &Budget) -> Self {
        StableSearch {
            adj: g.adjacency_bits(),
            face,
            fixed,
            weights: None,
            free_tail: false,
            order: Vec::new(),
            hi: Vec::new(),
            lo: Vec::new(),
            suffix: Vec::new(),
            best: None,
            nodes: 0,
            node_limit: budget.enumerated_points.saturating_mul(16),
        }
    }

    /// Search maximises `weights` instead of visiting every leaf.
    pub fn maximize(mut self, weights: Vec<i64>) -> Self {
        self.weights = Some(weights);
        self
    }

    pub fn free_tail(mut self) -> Self {
        self.free_tail = true;
        self
    }

    fn prepare(&mut self) {
        let n = self.adj.len();
        let touched = |v: usize| {
            self.fixed[v].is_some()
                || self.face.coeffs.iter().any(|c| c[v] != 0)
                || self.weights.as_ref().is_some_and(|w| w[v] != 0)
        };
        self.order = if self.free_tail { (0..n).filter(|&v| touched(v)).collect() } else { (0..n).collect() };
        let depth = self.order.len();
        self.hi = vec![vec![0i64; depth + 1]; self.face.len()];
        self.lo = vec![vec![0i64; depth + 1]; self.face.len()];
        for c in 0..self.face.len() {
            for i in (0..depth).rev() {
                let v = self.order[i];
                let a = self.face.coeffs[c][v];
                let (h, l) = match self.fixed[v] {
                    Some(true) => (a, a),
                    Some(false) => (0, 0),
                    None => (a.max(0), a.min(0)),
                };
                self.hi[c][i] = self.hi[c][i + 1] + h;
                self.lo[c][i] = self.lo[c][i + 1] + l;
            }
        }
        self.suffix = vec![0i64; depth + 1];
        if let Some(w) = &self.weights {
            for i in (0..depth).rev() {
                let v = self.order[i];
                self.suffix[i] = self.suffix[i + 1]
                    + match self.fixed[v] {
                        Some(true) => w[v],
                        Some(false) => 0,
                        None => w[v].max(0),
                    };
            }
        }
    }

    /// Calls `visit` on each stable set satisfying the face (each improving
    /// one, when maximising); `visit` returns `false` to stop early.
    /// Returns whether the search stopped.
    pub fn run(&mut self, visit: &mut dyn FnMut(&[bool]) -> bool) -> Result<bool> {
        self.prepare();
        let n = self.adj.len();
        let mut state = vec![false; n];
        let mut blocked = vec![0u32; n];
        let mut sums = vec![0i64; self.face.len()];
        self.dfs(0, &mut state, &mut blocked, &mut sums, 0, visit)
    }

    pub fn best(&self) -> Option<i64> {
        self.best
    }

    fn dfs(
        &mut self,
        i: usize,
        state: &mut Vec<bool>,
        blocked: &mut Vec<u32>,
        sums: &mut Vec<i64>,
        value: i64,
        visit: &mut dyn FnMut(&[bool]) -> bool,
    ) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(XcError::refused("stable set search", format!("more than {} nodes", self.node_limit), self.node_limit));
        }
        for c in 0..sums.len() {
            let r = self.face.rhs[c];
            if sums[c] + self.lo[c][i] > r || sums[c] + self.hi[c][i] < r {
                return Ok(false);
            }
        }
        if let (true, Some(best)) = (self.weights.is_some(), self.best) {
            if value + self.suffix[i] <= best {
                return Ok(false);
            }
        }
        if i == self.order.len() {
            if self.weights.is_some() {
                self.best = Some(self.best.map_or(value, |b| b.max(value)));
            }
            return Ok(!visit(state));
        }
        let v = self.order[i];
        let can_take = blocked[v] == 0 && self.fixed[v] != Some(false);
        let can_skip = self.fixed[v] != Some(true);
        if can_take {
            state[v] = true;
            for u in self.adj[v].iter() {
                blocked[u] += 1;
            }
            for c in 0..sums.len() {
                sums[c] += self.face.coeffs[c][v];
            }
            let gain = self.weights.as_ref().map_or(0, |w| w[v]);
            let stop = self.dfs(i + 1, state, blocked, sums, value + gain, visit)?;
            for c in 0..sums.len() {
                sums[c] -= self.face.coeffs[c][v];
            }
            for u in self.adj[v].iter() {
                blocked[u] -= 1;
            }
            state[v] = false;
            if stop {
                return Ok(true);
            }
        }
        if can_skip {
            return self.dfs(i + 1, state, blocked, sums, value, visit);
        }
        Ok(false)
    }
}

/// All stable sets satisfying the face equalities, as indicator vectors.
pub(crate) fn face_stable_sets(g: &Graph, face: &IntFace, budget: &Budget) -> Result<Vec<Vec<bool>>> {
    let mut out = Vec::new();
    let limit = budget.enumerated_points;
    let mut over = false;
    let mut search = StableSearch::new(g, face, vec![None; g.vertex_count()], budget);
    search.run(&mut |s| {
        if out.len() as u64 >= limit {
            over = true;
            return false;
        }
        out.push(s.to_vec());
        true
    })?;
    if over {
        return Err(XcError::refused("stable set enumeration", format!("more than {limit} sets"), limit));
    }
    Ok(out)
}

pub(crate) fn indicator(s: &[bool]) -> Vec<Rational> {
    s.iter().map(|&b| if b { Rational::one() } else { Rational::zero() }).collect()
}

pub(crate) fn from_indicator(x: &[Rational]) -> Option<Vec<bool>> {
    x.iter()
        .map(|v| {
            if v.is_zero() {
                Some(false)
            } else if v.is_one() {
                Some(true)
            } else {
                None
            }
        })
        .collect()
}

pub fn is_stable(g: &Graph, s: &[bool]) -> bool {
    g.edges().into_iter().all(|(u, v)| !(s[u] && s[v]))
}

/// Indicator vectors of all stable sets (the empty set included), in
/// lexicographic order. Coordinates are named by vertex label.
pub fn stab_polytope(g: &Graph, budget: &Budget) -> Result<VPolytope> {
    let sets = face_stable_sets(g, &IntFace::default(), budget)?;
    Ok(VPolytope::new(g.labels().to_vec(), sets.iter().map(|s| indicator(s)).collect())?.sorted())
}

/// Largest `weights · x` over stable sets satisfying the face, or `None`
/// when the face is empty.
pub(crate) fn max_weight(g: &Graph, face: &IntFace, weights: Vec<i64>, budget: &Budget) -> Result<Option<i64>> {
    let mut search = StableSearch::new(g, face, vec![None; g.vertex_count()], budget).maximize(weights).free_tail();
    search.run(&mut |_| true)?;
    Ok(search.best())
}

/// Some stable set satisfying the face and the fixed values, if any.
pub(crate) fn find_extension(g: &Graph, face: &IntFace, fixed: Vec<Option<bool>>, budget: &Budget) -> Result<Option<Vec<bool>>> {
    let mut found = None;
    let mut search = StableSearch::new(g, face, fixed, budget).free_tail();
    search.run(&mut |s| {
        found = Some(s.to_vec());
        false
    })?;
    Ok(found)
}

/// Checks that every equality is valid, in order: equality `k` may not be
/// exceeded by any stable set meeting equalities `0..k` with equality. This
/// describes a face of a face, which is again a face.
pub(crate) fn check_nested_validity(g: &Graph, eqs: &[LinIneq], budget: &Budget) -> Result<()> {
    let n = g.vertex_count();
    for k in 0..eqs.len() {
        let before = IntFace::from_equalities(&eqs[..k], n)?;
        let this = IntFace::from_equalities(&eqs[k..=k], n)?;
        if let Some(best) = max_weight(g, &before, this.coeffs[0].clone(), budget)? {
            if best > this.rhs[0] {
                return Err(XcError::Validity {
                    row: format!("face equality {k} ({})", eqs[k]),
                    col: "some stable set".into(),
                    slack: (this.rhs[0] - best).to_string(),
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn weights_nonnegative(h: &LinIneq) -> bool {
    h.coeffs.iter().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, cycle_graph, empty_graph};
    use crate::ratmath::int;

    #[test]
    fn stab_examples() {
        let b = Budget::default();
        assert_eq!(stab_polytope(&complete_graph(3).unwrap(), &b).unwrap().len(), 4);
        assert_eq!(stab_polytope(&empty_graph(2), &b).unwrap().len(), 4);
        assert_eq!(stab_polytope(&cycle_graph(5).unwrap(), &b).unwrap().len(), 11);
    }

    #[test]
    fn face_restricted_enumeration() {
        let b = Budget::default();
        let c6 = cycle_graph(6).unwrap();
        let eq = LinIneq::new(vec![int(1); 6], int(3));
        let face = IntFace::from_equalities(&[eq], 6).unwrap();
        assert_eq!(face_stable_sets(&c6, &face, &b).unwrap().len(), 2);
        assert_eq!(max_weight(&c6, &IntFace::default(), vec![1; 6], &b).unwrap(), Some(3));
        let fixed = vec![Some(true), Some(true), None, None, None, None];
        assert_eq!(find_extension(&c6, &IntFace::default(), fixed, &b).unwrap(), None);
    }

    #[test]
    fn nested_validity() {
        let b = Budget::default();
        let c4 = cycle_graph(4).unwrap();
        let ok = LinIneq::new(vec![int(1); 4], int(2));
        assert!(check_nested_validity(&c4, &[ok], &b).is_ok());
        let bad = LinIneq::new(vec![int(1); 4], int(1));
        assert!(matches!(check_nested_validity(&c4, &[bad], &b), Err(XcError::Validity { .. })));
    }

    #[test]
    fn refuses_past_budget() {
        let tiny = Budget { enumerated_points: 3, ..Budget::default() };
        assert!(matches!(stab_polytope(&empty_graph(3), &tiny), Err(XcError::Refused { .. })));
    }
}
