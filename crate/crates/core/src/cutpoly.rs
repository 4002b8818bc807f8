//! Cut and correlation polytopes, hypermetric and negative-type
//! inequalities, the matrix `M*(n)`, and the polytope `P_n` whose membership
//! problem encodes clique.
//!
//! Edge coordinates of a graph follow [`Graph::edges`]. For `K_n` with the
//! default labels that is `x12, x13, ..., x(n-1)n`. Subsets of `[m]` are
//! passed as 1-based index lists; bit strings put `a_1` in the most
//! significant position so that row and column order is lexicographic.

use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::graphs::{complete_graph, minor_step, Graph, MinorOp};
use crate::polyhedra::{face_vertices, verify_projection_equality, AffineMap, FaceSpec, LinIneq, ProjectionReport, VPolytope};
use crate::ratmath::{format_rational, frac, int, RatMatrix, Rational};

/// Coordinate name of edge `uv`: `x12` for one-character labels,
/// `x{u}_{v}` otherwise.
pub fn edge_coord_name(g: &Graph, (u, v): (usize, usize)) -> String {
    let (a, b) = (g.label(u), g.label(v));
    if a.chars().count() == 1 && b.chars().count() == 1 {
        format!("x{a}{b}")
    } else {
        format!("x{a}_{b}")
    }
}

pub fn edge_coord_names(g: &Graph) -> Vec<String> {
    g.edges().into_iter().map(|e| edge_coord_name(g, e)).collect()
}

/// `δ(S)`: coordinate `uv` is 1 iff exactly one endpoint lies in `side`
/// (vertex indices).
pub fn cut_vector(g: &Graph, side: &[usize]) -> Vec<Rational> {
    let s: HashSet<usize> = side.iter().copied().collect();
    g.edges()
        .into_iter()
        .map(|(u, v)| if s.contains(&u) != s.contains(&v) { Rational::one() } else { Rational::zero() })
        .collect()
}

/// One cut per subset of the vertices other than the anchor (the last
/// declared vertex), in bitmask order; repeated vectors are dropped.
pub fn cut_polytope(g: &Graph, budget: &Budget) -> Result<VPolytope> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(XcError::input("cut polytope of a graph without vertices"));
    }
    budget.check_subsets("cut polytope", n - 1)?;
    let points = (0u64..1 << (n - 1))
        .map(|mask| {
            let side: Vec<usize> = (0..n - 1).filter(|i| mask >> i & 1 == 1).collect();
            cut_vector(g, &side)
        })
        .collect();
    VPolytope::new(edge_coord_names(g), points)
}

/// Coordinates `p{i}{j}` for `1 <= i <= j <= n`.
pub fn correlation_coord_names(n: usize) -> Vec<String> {
    let sep = if n >= 10 { "_" } else { "" };
    let mut names = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        for j in i..=n {
            names.push(format!("p{i}{sep}{j}"));
        }
    }
    names
}

pub fn correlation_vector(n: usize, side: &[usize]) -> Vec<Rational> {
    let s: HashSet<usize> = side.iter().copied().collect();
    let mut v = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        for j in i..=n {
            v.push(if s.contains(&i) && s.contains(&j) { Rational::one() } else { Rational::zero() });
        }
    }
    v
}

pub fn correlation_polytope(n: usize, budget: &Budget) -> Result<VPolytope> {
    if n == 0 {
        return Err(XcError::input("correlation polytope needs n >= 1"));
    }
    budget.check_subsets("correlation polytope", n)?;
    let points = (0u64..1 << n)
        .map(|mask| {
            let side: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            correlation_vector(n, &side)
        })
        .collect();
    VPolytope::new(correlation_coord_names(n), points)
}

/// Linear map from the edge coordinates of `K_{n+1}` to correlation
/// coordinates: `p_ii = x_{i,n+1}`, `p_ij = (x_{i,n+1} + x_{j,n+1} - x_ij) / 2`.
pub fn covariance_map(n: usize) -> Result<AffineMap> {
    if n == 0 {
        return Err(XcError::input("covariance map needs n >= 1"));
    }
    let k = complete_graph(n + 1)?;
    let index = k.edge_index();
    let mut m = RatMatrix::zeros(n * (n + 1) / 2, k.edge_count());
    let mut row = 0;
    for i in 0..n {
        for j in i..n {
            if i == j {
                m.set(row, index[&(i, n)], Rational::one());
            } else {
                m.set(row, index[&(i, n)], frac(1, 2));
                m.set(row, index[&(j, n)], frac(1, 2));
                m.set(row, index[&(i, j)], frac(-1, 2));
            }
            row += 1;
        }
    }
    AffineMap::linear(m, correlation_coord_names(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovarianceReport {
    pub n: usize,
    pub cut_vertices: usize,
    pub correlation_vertices: usize,
    pub injective: bool,
    pub projection: ProjectionReport,
}

impl CovarianceReport {
    pub fn bijective(&self) -> bool {
        self.injective && self.projection.equal
    }
}

/// Maps every cut of `K_{n+1}` and compares with the correlation polytope.
pub fn covariance_check(n: usize, budget: &Budget) -> Result<CovarianceReport> {
    let cut = cut_polytope(&complete_graph(n + 1)?, budget)?;
    let cor = correlation_polytope(n, budget)?;
    let map = covariance_map(n)?;
    let images: BTreeSet<Vec<Rational>> = cut.points().iter().map(|x| map.apply(x)).collect::<Result<_>>()?;
    let projection = verify_projection_equality(&cut, &map, &cor)?;
    Ok(CovarianceReport {
        n,
        cut_vertices: cut.len(),
        correlation_vertices: cor.len(),
        injective: images.len() == cut.len(),
        projection,
    })
}

/// How the entries of `b` split into two parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BClass {
    /// Part sums can differ by exactly one.
    Hypermetric,
    /// Part sums can be equal.
    NegativeType,
    Neither,
}

/// A partition of `b` with part sums differing by at most one, as the
/// (0-based) indices of one part, if such a partition exists.
pub fn balanced_partition(b: &[i64]) -> Option<Vec<usize>> {
    let total: i64 = b.iter().sum();
    // Reachable subset sums with one witness subset each.
    let mut reach: std::collections::HashMap<i64, Vec<usize>> = std::collections::HashMap::new();
    reach.insert(0, Vec::new());
    for (i, &v) in b.iter().enumerate() {
        let snapshot: Vec<(i64, Vec<usize>)> = reach.iter().map(|(s, w)| (*s, w.clone())).collect();
        for (s, mut w) in snapshot {
            reach.entry(s + v).or_insert_with(|| {
                w.push(i);
                w
            });
        }
    }
    let mut targets = vec![total.div_euclid(2)];
    if total % 2 != 0 {
        targets.push(total.div_euclid(2) + 1);
    }
    targets.into_iter().find_map(|t| reach.get(&t).cloned())
}

pub fn classify_b(b: &[i64]) -> BClass {
    match balanced_partition(b) {
        None => BClass::Neither,
        Some(_) if b.iter().sum::<i64>() % 2 == 0 => BClass::NegativeType,
        Some(_) => BClass::Hypermetric,
    }
}

/// `sum_{i<j} b_i b_j x_ij <= floor((sum b)^2 / 4)` over `K_n`.
pub fn hypermetric_ineq(b: &[i64]) -> Result<(LinIneq, BClass)> {
    let n = b.len();
    if n < 2 {
        return Err(XcError::input("b-vector needs at least two entries"));
    }
    let mut coeffs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            coeffs.push(int(b[i] * b[j]));
        }
    }
    let sigma: i64 = b.iter().sum();
    let rhs = int((sigma * sigma).div_euclid(4));
    Ok((LinIneq::new(coeffs, rhs), classify_b(b)))
}

/// `sum b_i b_j δ(S)_ij` for `S` given as 1-based indices, checked against
/// `(sum_{i in S} b_i) (sum_{i not in S} b_i)`.
pub fn lhs_product_identity(b: &[i64], side: &[usize]) -> Result<Rational> {
    let n = b.len();
    if side.iter().any(|&i| i == 0 || i > n) {
        return Err(XcError::input(format!("subset {side:?} not within 1..={n}")));
    }
    let g = complete_graph(n.max(1))?;
    let zero_based: Vec<usize> = side.iter().map(|i| i - 1).collect();
    let x = cut_vector(&g, &zero_based);
    let (h, _) = hypermetric_ineq(b)?;
    let lhs: Rational = h.coeffs.iter().zip(&x).map(|(c, v)| c * v).sum();
    let inside: i64 = zero_based.iter().map(|&i| b[i]).sum();
    let outside: i64 = b.iter().sum::<i64>() - inside;
    if lhs != int(inside * outside) {
        return Err(XcError::verification(format!(
            "product identity fails for b={b:?}, S={side:?}: {} vs {}",
            format_rational(&lhs),
            inside * outside
        )));
    }
    Ok(lhs)
}

fn check_row_family(n: usize, t: &[usize]) -> Result<()> {
    if n < 2 {
        return Err(XcError::input("row family needs n >= 2"));
    }
    if let Some(bad) = t.iter().find(|&&i| i == 0 || i >= n) {
        return Err(XcError::input(format!("element {bad} of T outside 1..={}", n - 1)));
    }
    Ok(())
}

/// `sum_{i<j in T} x_ij - (|T| - 2) sum_{i in T} x_in <= 1` over `K_n`, from
/// the b-vector with ones on `T` and `b_n = 2 - |T|`. An empty `T` gives the
/// trivial row `0 <= 1`.
pub fn negtype_row(n: usize, t: &[usize]) -> Result<LinIneq> {
    check_row_family(n, t)?;
    let set: BTreeSet<usize> = t.iter().copied().collect();
    if set.is_empty() {
        return Ok(LinIneq::new(vec![Rational::zero(); n * (n - 1) / 2], Rational::one()));
    }
    let mut b = vec![0i64; n];
    for &i in &set {
        b[i - 1] = 1;
    }
    b[n - 1] = 2 - set.len() as i64;
    let (h, _) = hypermetric_ineq(&b)?;
    Ok(h)
}

/// Bit string of `T ⊆ [m]` as an index with `a_1` most significant.
pub fn subset_to_index(m: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &i| acc | 1 << (m - i))
}

pub fn index_to_subset(m: usize, idx: usize) -> Vec<usize> {
    (1..=m).filter(|&i| idx >> (m - i) & 1 == 1).collect()
}

/// Cut of `K_n` whose shore is `S ⊆ [n-1]` (1-based).
fn kn_cut(g: &Graph, side: &[usize]) -> Vec<Rational> {
    cut_vector(g, &side.iter().map(|i| i - 1).collect::<Vec<_>>())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlackReport {
    pub n: usize,
    pub checked: usize,
}

/// Slack of every `δ(S)`, `S ⊆ [n-1]`, against the row `T = [n-1]` equals
/// `(|S| - 1)^2`.
pub fn slack_formula_check(n: usize, budget: &Budget) -> Result<SlackReport> {
    if n < 3 || n > budget.slack_n {
        return Err(XcError::refused("slack check", format!("n = {n}"), format!("3..={}", budget.slack_n)));
    }
    let g = complete_graph(n)?;
    let all: Vec<usize> = (1..n).collect();
    let row = negtype_row(n, &all)?;
    for idx in 0..1usize << (n - 1) {
        let s = index_to_subset(n - 1, idx);
        let slack = row.slack(&kn_cut(&g, &s));
        let want = int((s.len() as i64 - 1).pow(2));
        if slack != want {
            return Err(XcError::verification(format!(
                "slack of S={s:?} is {}, expected {}",
                format_rational(&slack),
                format_rational(&want)
            )));
        }
    }
    Ok(SlackReport { n, checked: 1 << (n - 1) })
}

/// `M*(n)`: rows and columns are the `n`-bit strings, entry `(a·b - 1)^2`.
pub fn mstar(n: usize, budget: &Budget) -> Result<RatMatrix> {
    budget.check_subsets("M*", 2 * n)?;
    let size = 1usize << n;
    let mut m = RatMatrix::zeros(size, size);
    for a in 0..size {
        for b in 0..size {
            let ip = (a & b).count_ones() as i64;
            m.set(a, b, int((ip - 1) * (ip - 1)));
        }
    }
    Ok(m)
}

/// Slack matrix of the row family `negtype_row(T)`, `T ⊆ [n-1]`, against the
/// cuts `δ(S)`, `S ⊆ [n-1]`, in bit-string order.
pub fn row_family_slack(n: usize, budget: &Budget) -> Result<RatMatrix> {
    if n < 2 || n > budget.slack_n {
        return Err(XcError::refused("row family slack", format!("n = {n}"), format!("2..={}", budget.slack_n)));
    }
    let g = complete_graph(n)?;
    let m = n - 1;
    let size = 1usize << m;
    let cuts: Vec<Vec<Rational>> = (0..size).map(|j| kn_cut(&g, &index_to_subset(m, j))).collect();
    let mut out = RatMatrix::zeros(size, size);
    for i in 0..size {
        let row = negtype_row(n, &index_to_subset(m, i))?;
        for (j, x) in cuts.iter().enumerate() {
            out.set(i, j, row.slack(x));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub n: usize,
    pub size: usize,
}

/// The row-family slack matrix for `K_n` equals `M*(n-1)` entry by entry.
pub fn mstar_embedding(n: usize, budget: &Budget) -> Result<EmbeddingReport> {
    let slack = row_family_slack(n, budget)?;
    let target = mstar(n - 1, budget)?;
    for i in 0..slack.rows() {
        for j in 0..slack.cols() {
            if slack.get(i, j) != target.get(i, j) {
                return Err(XcError::verification(format!(
                    "entry T={:?}, S={:?}: slack {} but M* has {}",
                    index_to_subset(n - 1, i),
                    index_to_subset(n - 1, j),
                    format_rational(slack.get(i, j)),
                    format_rational(target.get(i, j))
                )));
            }
        }
    }
    Ok(EmbeddingReport { n, size: slack.rows() })
}

/// True when the last declared vertex is adjacent to every other vertex.
pub fn is_suspension(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 2 && g.degree(n - 1) == n - 1
}

/// The point `x` with `x_in = 1/k` (apex `n`), `x_ij = 2/k` on edges of the
/// base graph, and `-n^2` on non-edges.
pub fn clique_point(g: &Graph, k: usize) -> Result<Vec<Rational>> {
    if !is_suspension(g) {
        return Err(XcError::input("clique point needs a suspension: the last vertex must be adjacent to all others"));
    }
    if k < 2 {
        return Err(XcError::input("clique point needs k >= 2"));
    }
    let n = g.vertex_count();
    let k = k as i64;
    let far = -((n * n) as i64);
    let mut x = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            x.push(if j == n - 1 {
                frac(1, k)
            } else if g.has_edge(i, j) {
                frac(2, k)
            } else {
                int(far)
            });
        }
    }
    Ok(x)
}

/// First `T` (in bit-string order) whose row is violated by `x`, or `None`
/// when `x` lies in `P_n`.
pub fn pn_membership(x: &[Rational], n: usize, budget: &Budget) -> Result<Option<Vec<usize>>> {
    if n < 2 || x.len() != n * (n - 1) / 2 {
        return Err(XcError::input(format!("point of length {} does not match K_{n}", x.len())));
    }
    budget.check_subsets("P_n membership", n - 1)?;
    for idx in 1..1usize << (n - 1) {
        let t = index_to_subset(n - 1, idx);
        if negtype_row(n, &t)?.slack(x).is_negative() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Projection data showing `CUT(minor)` is a projection of (a face of)
/// `CUT(g)`: deletions drop coordinates, contraction additionally restricts
/// to the face `x_e = 0`.
#[derive(Debug, Clone)]
pub struct MinorWitness {
    pub minor: Graph,
    pub source: VPolytope,
    pub target: VPolytope,
    pub face: FaceSpec,
    pub projection: AffineMap,
}

pub fn minor_witness(g: &Graph, op: &MinorOp, budget: &Budget) -> Result<MinorWitness> {
    let minor = minor_step(g, op)?;
    let target = cut_polytope(g, budget)?;
    let source = cut_polytope(&minor, budget)?;
    let index = g.edge_index();
    let find = |a: &str, b: &str| -> Option<usize> {
        let (u, v) = (g.index_of(a)?, g.index_of(b)?);
        index.get(&(u.min(v), u.max(v))).copied()
    };
    let mut keep = Vec::with_capacity(minor.edge_count());
    for (a, b) in minor.edges() {
        let (la, lb) = (minor.label(a), minor.label(b));
        let coord = match (find(la, lb), op) {
            (Some(c), _) => c,
            (None, MinorOp::ContractEdge(u, v)) => {
                // Edge inherited from the merged-away endpoint.
                let other = if la == u { lb } else { la };
                find(v, other).ok_or_else(|| XcError::verification("contracted edge has no preimage"))?
            }
            (None, _) => return Err(XcError::verification("minor edge has no preimage")),
        };
        keep.push(coord);
    }
    let face = match op {
        MinorOp::ContractEdge(u, v) => {
            let e = find(u, v).expect("contracted edge exists");
            let mut coeffs = vec![Rational::zero(); g.edge_count()];
            coeffs[e] = -Rational::one();
            FaceSpec::new(vec![LinIneq::new(coeffs, Rational::zero())])
        }
        _ => FaceSpec::default(),
    };
    let mut projection = AffineMap::coordinate_projection(target.coord_names(), &keep)?;
    projection.out_names = source.coord_names().to_vec();
    Ok(MinorWitness { minor, source, target, face, projection })
}

impl MinorWitness {
    pub fn verify(&self) -> Result<ProjectionReport> {
        let face = face_vertices(&self.target, &self.face)?;
        verify_projection_equality(&face, &self.projection, &self.source)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{path_graph, suspension};

    fn pts(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn cut_polytope_examples() {
        let b = Budget::default();
        let k3 = cut_polytope(&complete_graph(3).unwrap(), &b).unwrap();
        assert_eq!(k3.points(), &pts(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])[..]);
        assert_eq!(k3.coord_names(), ["x12", "x13", "x23"]);
        let k2 = cut_polytope(&complete_graph(2).unwrap(), &b).unwrap();
        assert_eq!(k2.points(), &pts(&[&[0], &[1]])[..]);
        let p3 = cut_polytope(&path_graph(3).unwrap(), &b).unwrap();
        assert_eq!((p3.dim(), p3.len()), (2, 4));
        let tiny = Budget { subsets: 4, ..Budget::default() };
        assert!(matches!(cut_polytope(&complete_graph(4).unwrap(), &tiny), Err(XcError::Refused { .. })));
    }

    #[test]
    fn correlation_examples() {
        let b = Budget::default();
        assert_eq!(correlation_polytope(1, &b).unwrap().points(), &pts(&[&[0], &[1]])[..]);
        assert_eq!(correlation_vector(2, &[1]), pts(&[&[1, 0, 0]])[0]);
        assert_eq!(correlation_polytope(2, &b).unwrap().len(), 4);
    }

    #[test]
    fn covariance_examples() {
        let m = covariance_map(2).unwrap();
        assert_eq!(m.apply(&pts(&[&[1, 1, 0]])[0]).unwrap(), pts(&[&[1, 0, 0]])[0]);
        assert_eq!(m.apply(&pts(&[&[0, 0, 0]])[0]).unwrap(), pts(&[&[0, 0, 0]])[0]);
        for n in 1..=4 {
            assert!(covariance_check(n, &Budget::default()).unwrap().bijective());
        }
    }

    #[test]
    fn hypermetric_examples() {
        let (h, c) = hypermetric_ineq(&[1, 1, -1]).unwrap();
        assert_eq!(h, LinIneq::from_i64(&[1, -1, -1], 0));
        assert_eq!(c, BClass::Hypermetric);
        let (h, _) = hypermetric_ineq(&[1, 1, 1]).unwrap();
        assert_eq!(h, LinIneq::from_i64(&[1, 1, 1], 2));
        let (h, c) = hypermetric_ineq(&[1, -1, 0, 0]).unwrap();
        assert_eq!(h, LinIneq::from_i64(&[-1, 0, 0, 0, 0, 0], 0));
        assert_eq!(c, BClass::NegativeType);
        assert_eq!(classify_b(&[3, 1]), BClass::Neither);
        assert!(hypermetric_ineq(&[1]).is_err());
    }

    #[test]
    fn product_identity_examples() {
        assert_eq!(lhs_product_identity(&[1, 1, 1], &[1]).unwrap(), int(2));
        assert_eq!(lhs_product_identity(&[4, -2, 7], &[]).unwrap(), int(0));
        assert_eq!(lhs_product_identity(&[2, -1, 3], &[2]).unwrap(), int(-5));
    }

    #[test]
    fn negtype_rows() {
        assert_eq!(negtype_row(4, &[1, 2, 3]).unwrap(), LinIneq::from_i64(&[1, 1, -1, 1, -1, -1], 1));
        assert_eq!(negtype_row(4, &[1]).unwrap(), LinIneq::from_i64(&[0, 0, 1, 0, 0, 0], 1));
        assert!(negtype_row(4, &[4]).is_err());
        assert!(negtype_row(4, &[]).unwrap().is_trivial());
    }

    #[test]
    fn slack_formula() {
        let g = complete_graph(5).unwrap();
        let row = negtype_row(5, &[1, 2, 3, 4]).unwrap();
        assert_eq!(row.slack(&kn_cut(&g, &[1, 2])), int(1));
        assert_eq!(row.slack(&kn_cut(&g, &[])), int(1));
        let g6 = complete_graph(6).unwrap();
        let row6 = negtype_row(6, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(row6.slack(&kn_cut(&g6, &[1, 2, 3, 4])), int(9));
        for n in 3..=7 {
            assert_eq!(slack_formula_check(n, &Budget::default()).unwrap().checked, 1 << (n - 1));
        }
    }

    #[test]
    fn mstar_examples() {
        let b = Budget::default();
        assert_eq!(mstar(1, &b).unwrap(), RatMatrix::from_i64(&[vec![1, 1], vec![1, 0]]));
        let m2 = RatMatrix::from_i64(&[vec![1, 1, 1, 1], vec![1, 0, 1, 0], vec![1, 1, 0, 0], vec![1, 0, 0, 1]]);
        assert_eq!(mstar(2, &b).unwrap(), m2);
        assert_eq!(mstar(2, &b).unwrap().rank(), 4);
        assert_eq!(mstar(3, &b).unwrap().rank(), 7);
    }

    #[test]
    fn embedding_small() {
        for n in 3..=5 {
            assert_eq!(mstar_embedding(n, &Budget::default()).unwrap().size, 1 << (n - 1));
        }
    }

    #[test]
    fn subset_indices() {
        assert_eq!(subset_to_index(3, &[1]), 0b100);
        assert_eq!(index_to_subset(3, 0b011), vec![2, 3]);
    }

    #[test]
    fn clique_point_examples() {
        let k4 = complete_graph(4).unwrap();
        let x = clique_point(&k4, 2).unwrap();
        assert_eq!(x, vec![int(1), int(1), frac(1, 2), int(1), frac(1, 2), frac(1, 2)]);
        let s = suspension(&path_graph(3).unwrap());
        let x = clique_point(&s, 3).unwrap();
        // edges 12 13 14 23 24 34 with apex 4; 13 is a non-edge
        assert_eq!(x[1], int(-16));
        assert!(clique_point(&path_graph(3).unwrap(), 2).is_err());
    }

    #[test]
    fn membership_examples() {
        let b = Budget::default();
        let g = complete_graph(5).unwrap();
        for mask in 0..16usize {
            let side: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
            assert_eq!(pn_membership(&cut_vector(&g, &side), 5, &b).unwrap(), None);
        }
        assert_eq!(pn_membership(&vec![int(0); 10], 5, &b).unwrap(), None);
        // base K4 has a clique of size 4 = k + 1 for k = 3
        let x = clique_point(&suspension(&complete_graph(4).unwrap()), 3).unwrap();
        assert!(pn_membership(&x, 5, &b).unwrap().is_some());
        let x = clique_point(&suspension(&complete_graph(4).unwrap()), 4).unwrap();
        assert!(pn_membership(&x, 5, &b).unwrap().is_none());
    }

    #[test]
    fn minor_witnesses() {
        let b = Budget::default();
        let k4 = complete_graph(4).unwrap();
        for op in [
            MinorOp::DeleteEdge("1".into(), "3".into()),
            MinorOp::DeleteVertex("2".into()),
            MinorOp::ContractEdge("2".into(), "4".into()),
        ] {
            assert!(minor_witness(&k4, &op, &b).unwrap().verify().unwrap().equal, "{op:?}");
        }
    }
}
