//! Polytopes given by their points, valid inequalities, faces, affine maps,
//! and slack matrices.

mod extension;
mod facets;

pub use extension::{ef_from_factorization, ExtensionReport};
pub use facets::{facet_enumeration, FacetReport};

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Result, XcError};
use crate::graphs::content_lines;
use crate::ratmath::{dot, format_rational, int, nonnegative_solution, parse_rational, primitive_integer_vector, RatMatrix, Rational};

pub type Point = Vec<Rational>;

/// Finite point set with named coordinates. Points are kept distinct and in
/// insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    coord_names: Vec<String>,
    points: Vec<Point>,
}

impl VPolytope {
    /// Builds a polytope, silently dropping repeated points.
    pub fn new(coord_names: Vec<String>, points: Vec<Point>) -> Result<Self> {
        let dim = coord_names.len();
        let mut seen = BTreeSet::new();
        let mut kept = Vec::with_capacity(points.len());
        for (i, p) in points.into_iter().enumerate() {
            if p.len() != dim {
                return Err(XcError::input(format!("point {i} has length {}, expected {dim}", p.len())));
            }
            if seen.insert(p.clone()) {
                kept.push(p);
            }
        }
        Ok(VPolytope { coord_names, points: kept })
    }

    /// Coordinates named `x1..x{dim}`.
    pub fn unnamed(dim: usize, points: Vec<Point>) -> Result<Self> {
        Self::new((1..=dim).map(|i| format!("x{i}")).collect(), points)
    }

    pub fn dim(&self) -> usize {
        self.coord_names.len()
    }

    pub fn coord_names(&self) -> &[String] {
        &self.coord_names
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point_set(&self) -> BTreeSet<Point> {
        self.points.iter().cloned().collect()
    }

    /// Same points in lexicographic order.
    pub fn sorted(&self) -> VPolytope {
        VPolytope { coord_names: self.coord_names.clone(), points: self.point_set().into_iter().collect() }
    }

    pub fn is_zero_one(&self) -> bool {
        self.points.iter().flatten().all(|x| x.is_zero() || x.is_one())
    }

    /// Polytope file: `dim k`, a line of coordinate names, then `k` rows.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let header = lines.next().ok_or_else(|| XcError::input("empty polytope file"))?;
        let (dim, k) = crate::graphs::two_counts(header)?;
        let names: Vec<String> = match dim {
            0 => Vec::new(),
            _ => lines
                .next()
                .ok_or_else(|| XcError::input("missing coordinate names"))?
                .split_whitespace()
                .map(String::from)
                .collect(),
        };
        if names.len() != dim {
            return Err(XcError::input(format!("{} coordinate names for dimension {dim}", names.len())));
        }
        let mut points = Vec::with_capacity(k);
        for i in 0..k {
            let line = lines.next().ok_or_else(|| XcError::input(format!("missing point {i}")))?;
            points.push(line.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>()?);
        }
        if lines.next().is_some() {
            return Err(XcError::input("trailing data after polytope points"));
        }
        Self::new(names, points)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n{}\n", self.dim(), self.len(), self.coord_names.join(" "));
        for p in &self.points {
            s.push_str(&format_point(p));
            s.push('\n');
        }
        s
    }
}

pub fn format_point(p: &[Rational]) -> String {
    p.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

/// Compact name for a 0/1 point (`"0110"`), falling back to the full text.
pub fn point_label(p: &[Rational]) -> String {
    if p.iter().all(|x| x.is_zero() || x.is_one()) {
        p.iter().map(|x| if x.is_zero() { '0' } else { '1' }).collect()
    } else {
        format!("({})", p.iter().map(format_rational).collect::<Vec<_>>().join(","))
    }
}

/// `coeffs · x <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinIneq {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl LinIneq {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        LinIneq { coeffs, rhs }
    }

    pub fn from_i64(coeffs: &[i64], rhs: i64) -> Self {
        LinIneq { coeffs: coeffs.iter().map(|&c| int(c)).collect(), rhs: int(rhs) }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.rhs - dot(&self.coeffs, x)
    }

    /// All coefficients zero; such a row is valid iff `rhs >= 0`.
    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Positive multiple with coprime integer entries.
    pub fn canonical(&self) -> LinIneq {
        let mut all = self.coeffs.clone();
        all.push(self.rhs.clone());
        let ints = primitive_integer_vector(&all);
        let mut v: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
        let rhs = v.pop().expect("rhs entry");
        LinIneq { coeffs: v, rhs }
    }

    /// `c1 ... cd | rhs`.
    pub fn parse(line: &str) -> Result<Self> {
        let (lhs, rhs) = line.split_once('|').ok_or_else(|| XcError::input(format!("inequality {line:?} lacks '|'")))?;
        let coeffs = lhs.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>()?;
        Ok(LinIneq { coeffs, rhs: parse_rational(rhs)? })
    }

    /// Human-readable `2 x12 - x13 <= 1` form using the given names.
    pub fn pretty(&self, names: &[String]) -> String {
        let mut s = String::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                s.push_str(&format_rational(&mag));
                s.push(' ');
            }
            s.push_str(name);
        }
        if s.is_empty() {
            s.push('0');
        }
        format!("{s} <= {}", format_rational(&self.rhs))
    }
}

impl fmt::Display for LinIneq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", format_point(&self.coeffs), format_rational(&self.rhs))
    }
}

pub fn parse_inequalities(text: &str) -> Result<Vec<LinIneq>> {
    let ineqs: Vec<LinIneq> = content_lines(text).map(LinIneq::parse).collect::<Result<_>>()?;
    if let Some(first) = ineqs.first() {
        if let Some(bad) = ineqs.iter().position(|h| h.dim() != first.dim()) {
            return Err(XcError::input(format!("inequality {bad} has a different length")));
        }
    }
    Ok(ineqs)
}

pub fn inequalities_to_text(ineqs: &[LinIneq]) -> String {
    ineqs.iter().map(|h| format!("{h}\n")).collect()
}

/// Inequalities tightened to equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FaceSpec {
    pub equalities: Vec<LinIneq>,
}

impl FaceSpec {
    pub fn new(equalities: Vec<LinIneq>) -> Self {
        FaceSpec { equalities }
    }

    pub fn is_empty(&self) -> bool {
        self.equalities.is_empty()
    }

    /// Every equality holds with zero slack at `x`.
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|h| h.slack(x).is_zero())
    }
}

/// `x -> matrix * x + offset`, with names for the output coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: RatMatrix,
    pub offset: Vec<Rational>,
    pub out_names: Vec<String>,
}

impl AffineMap {
    pub fn new(matrix: RatMatrix, offset: Vec<Rational>, out_names: Vec<String>) -> Result<Self> {
        if offset.len() != matrix.rows() || out_names.len() != matrix.rows() {
            return Err(XcError::input(format!(
                "affine map with {} rows needs as many offsets and names, got {} and {}",
                matrix.rows(),
                offset.len(),
                out_names.len()
            )));
        }
        Ok(AffineMap { matrix, offset, out_names })
    }

    /// Linear map with zero offset.
    pub fn linear(matrix: RatMatrix, out_names: Vec<String>) -> Result<Self> {
        let zero = vec![Rational::zero(); matrix.rows()];
        Self::new(matrix, zero, out_names)
    }

    pub fn identity(names: &[String]) -> Self {
        Self::linear(RatMatrix::identity(names.len()), names.to_vec()).expect("square identity")
    }

    /// Keeps the listed input coordinates, in the given order.
    pub fn coordinate_projection(in_names: &[String], keep: &[usize]) -> Result<Self> {
        let mut m = RatMatrix::zeros(keep.len(), in_names.len());
        let mut names = Vec::with_capacity(keep.len());
        for (r, &c) in keep.iter().enumerate() {
            if c >= in_names.len() {
                return Err(XcError::input(format!("coordinate {c} out of range")));
            }
            m.set(r, c, Rational::one());
            names.push(in_names[c].clone());
        }
        Self::linear(m, names)
    }

    pub fn in_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn out_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Point> {
        let mut y = self.matrix.mul_vec(x)?;
        for (v, o) in y.iter_mut().zip(&self.offset) {
            *v += o;
        }
        Ok(y)
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &AffineMap) -> Result<AffineMap> {
        let matrix = outer.matrix.mul(&self.matrix)?;
        let offset = outer.apply(&self.offset)?;
        AffineMap::new(matrix, offset, outer.out_names.clone())
    }
}

/// Slack matrix with labels for rows (inequalities) and columns (points).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlackMatrix {
    pub matrix: RatMatrix,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

pub fn is_valid_inequality(p: &VPolytope, h: &LinIneq) -> bool {
    p.points.iter().all(|x| !h.slack(x).is_negative())
}

/// Entry `(i, j)` is `rhs_i - coeffs_i · point_j`; any negative entry is a
/// validity error naming the pair.
pub fn slack_matrix(ineqs: &[LinIneq], p: &VPolytope) -> Result<SlackMatrix> {
    let mut entries = Vec::with_capacity(ineqs.len() * p.len());
    for (i, h) in ineqs.iter().enumerate() {
        if h.dim() != p.dim() {
            return Err(XcError::input(format!("inequality {i} has length {}, polytope dimension {}", h.dim(), p.dim())));
        }
        for x in &p.points {
            let s = h.slack(x);
            if s.is_negative() {
                return Err(XcError::Validity {
                    row: format!("{i} ({h})"),
                    col: point_label(x),
                    slack: format_rational(&s),
                });
            }
            entries.push(s);
        }
    }
    Ok(SlackMatrix {
        matrix: RatMatrix::new(ineqs.len(), p.len(), entries)?,
        row_labels: ineqs.iter().map(ToString::to_string).collect(),
        col_labels: p.points.iter().map(|x| point_label(x)).collect(),
    })
}

/// Points with zero slack on every equality of the face.
pub fn face_vertices(p: &VPolytope, face: &FaceSpec) -> Result<VPolytope> {
    for (i, h) in face.equalities.iter().enumerate() {
        if h.dim() != p.dim() {
            return Err(XcError::input(format!("face equality {i} has length {}, polytope dimension {}", h.dim(), p.dim())));
        }
        if let Some(x) = p.points.iter().find(|x| h.slack(x).is_negative()) {
            return Err(XcError::Validity {
                row: format!("face equality {i} ({h})"),
                col: point_label(x),
                slack: format_rational(&h.slack(x)),
            });
        }
    }
    let points = p.points.iter().filter(|x| face.contains(x)).cloned().collect();
    Ok(VPolytope { coord_names: p.coord_names.clone(), points })
}

/// Drops repeated and non-extreme points. A point is extreme iff it is not
/// a convex combination of the remaining points, which is decided exactly by
/// a phase-one feasibility problem. Distinct 0/1 points are always extreme.
pub fn canonicalize(p: &VPolytope) -> VPolytope {
    if p.is_zero_one() || p.len() <= 2 {
        return p.clone();
    }
    let mut kept: Vec<Point> = Vec::with_capacity(p.len());
    for (i, x) in p.points.iter().enumerate() {
        let others: Vec<&Point> = p.points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, y)| y).collect();
        if !is_convex_combination(x, &others) {
            kept.push(x.clone());
        }
    }
    VPolytope { coord_names: p.coord_names.clone(), points: kept }
}

fn is_convex_combination(x: &[Rational], others: &[&Point]) -> bool {
    if others.is_empty() {
        return false;
    }
    let d = x.len();
    let mut a = RatMatrix::zeros(d + 1, others.len());
    for (j, y) in others.iter().enumerate() {
        for (i, v) in y.iter().enumerate() {
            a.set(i, j, v.clone());
        }
        a.set(d, j, Rational::one());
    }
    let mut b = x.to_vec();
    b.push(Rational::one());
    nonnegative_solution(&a, &b).is_some()
}

/// Image of every point, canonicalized, in lexicographic order.
pub fn project(p: &VPolytope, m: &AffineMap) -> Result<VPolytope> {
    if m.in_dim() != p.dim() {
        return Err(XcError::input(format!("map expects dimension {}, polytope has {}", m.in_dim(), p.dim())));
    }
    let image = p.points.iter().map(|x| m.apply(x)).collect::<Result<Vec<_>>>()?;
    Ok(canonicalize(&VPolytope::new(m.out_names.clone(), image)?).sorted())
}

/// Outcome of comparing a projected polytope with an expected one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionReport {
    pub equal: bool,
    /// Vertices of the expected polytope that the image lacks.
    pub missing: Vec<Point>,
    /// Vertices of the image that the expected polytope lacks.
    pub extra: Vec<Point>,
    pub image_vertices: usize,
    pub expected_vertices: usize,
}

impl fmt::Display for ProjectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal {
            return write!(f, "image equals expected polytope ({} vertices)", self.expected_vertices);
        }
        write!(f, "image has {} vertices, expected {}", self.image_vertices, self.expected_vertices)?;
        if let Some(p) = self.missing.first() {
            write!(f, "; {} missing, first {}", self.missing.len(), point_label(p))?;
        }
        if let Some(p) = self.extra.first() {
            write!(f, "; {} extra, first {}", self.extra.len(), point_label(p))?;
        }
        Ok(())
    }
}

pub fn verify_projection_equality(q: &VPolytope, m: &AffineMap, p: &VPolytope) -> Result<ProjectionReport> {
    if m.out_dim() != p.dim() {
        return Err(XcError::input(format!("map has output dimension {}, expected polytope {}", m.out_dim(), p.dim())));
    }
    let image = project(q, m)?.point_set();
    let expected = canonicalize(p).point_set();
    let missing: Vec<Point> = expected.difference(&image).cloned().collect();
    let extra: Vec<Point> = image.difference(&expected).cloned().collect();
    Ok(ProjectionReport {
        equal: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
        image_vertices: image.len(),
        expected_vertices: expected.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmath::frac;

    fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    fn square() -> VPolytope {
        VPolytope::unnamed(2, pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap()
    }

    fn cut3() -> VPolytope {
        VPolytope::new(
            vec!["x12".into(), "x13".into(), "x23".into()],
            pts(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
        )
        .unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let mut p = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        p.push(vec![frac(1, 2), frac(1, 2)]);
        let c = canonicalize(&VPolytope::unnamed(2, p).unwrap());
        assert_eq!(c.point_set(), square().point_set());

        let line = VPolytope::unnamed(1, vec![vec![int(0)], vec![frac(1, 3)], vec![int(2)]]).unwrap();
        assert_eq!(canonicalize(&line).points(), &[vec![int(0)], vec![int(2)]]);
        let tri = VPolytope::unnamed(2, vec![vec![int(0), int(0)], vec![int(3), int(1)], vec![int(1), int(3)]]).unwrap();
        assert_eq!(canonicalize(&tri), tri);
    }

    #[test]
    fn duplicates_are_dropped() {
        let p = VPolytope::unnamed(1, pts(&[&[1], &[1], &[0]])).unwrap();
        assert_eq!(p.len(), 2);
        assert!(VPolytope::unnamed(2, pts(&[&[1]])).is_err());
    }

    #[test]
    fn slack_examples() {
        let per = LinIneq::from_i64(&[1, 1, 1], 2);
        let s = slack_matrix(std::slice::from_ref(&per), &cut3()).unwrap();
        assert_eq!(s.matrix, RatMatrix::from_i64(&[vec![2, 0, 0, 0]]));
        assert_eq!(s.col_labels, ["000", "110", "101", "011"]);
        let seg = VPolytope::unnamed(1, pts(&[&[0], &[1]])).unwrap();
        let s = slack_matrix(&[LinIneq::from_i64(&[1], 1)], &seg).unwrap();
        assert_eq!(s.matrix, RatMatrix::from_i64(&[vec![1, 0]]));
        let bad = slack_matrix(&[LinIneq::from_i64(&[1, 1, 1], 1)], &cut3());
        assert!(matches!(bad, Err(XcError::Validity { .. })));
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_inequality(&cut3(), &LinIneq::from_i64(&[1, 1, 1], 2)));
        assert!(!is_valid_inequality(&cut3(), &LinIneq::from_i64(&[1, 1, 1], 1)));
        assert!(is_valid_inequality(&cut3(), &LinIneq::from_i64(&[0, 0, 0], 0)));
    }

    #[test]
    fn face_examples() {
        let f = FaceSpec::new(vec![LinIneq::from_i64(&[0, 0, 1], 0)]);
        // x23 <= 0 is not valid, x23 >= 0 written as -x23 <= 0 is
        assert!(face_vertices(&cut3(), &f).is_err());
        let f = FaceSpec::new(vec![LinIneq::from_i64(&[0, 0, -1], 0)]);
        assert_eq!(face_vertices(&cut3(), &f).unwrap().points(), &pts(&[&[0, 0, 0], &[1, 1, 0]])[..]);
        assert_eq!(face_vertices(&cut3(), &FaceSpec::default()).unwrap(), cut3());
        let f = FaceSpec::new(vec![LinIneq::from_i64(&[1, 1, 1], 2)]);
        assert_eq!(face_vertices(&cut3(), &f).unwrap().len(), 3);
    }

    #[test]
    fn projection_examples() {
        let names = square().coord_names().to_vec();
        let drop_y = AffineMap::coordinate_projection(&names, &[0]).unwrap();
        let seg = VPolytope::unnamed(1, pts(&[&[0], &[1]])).unwrap();
        assert_eq!(project(&square(), &drop_y).unwrap().point_set(), seg.point_set());
        assert!(verify_projection_equality(&square(), &drop_y, &VPolytope::new(vec!["x1".into()], seg.points().to_vec()).unwrap()).unwrap().equal);

        let id = AffineMap::identity(seg.coord_names());
        let r = verify_projection_equality(&seg, &id, &square());
        assert!(r.is_err());
        let lift = AffineMap::linear(RatMatrix::from_i64(&[vec![1], vec![0]]), names).unwrap();
        let r = verify_projection_equality(&seg, &lift, &square()).unwrap();
        assert!(!r.equal);
        assert_eq!(r.missing, pts(&[&[0, 1], &[1, 1]]));
        assert!(r.extra.is_empty());
    }

    #[test]
    fn maps_compose() {
        let names: Vec<String> = vec!["a".into(), "b".into()];
        let m1 = AffineMap::new(RatMatrix::from_i64(&[vec![1, 1], vec![0, 2]]), vec![int(1), int(0)], names.clone()).unwrap();
        let m2 = AffineMap::new(RatMatrix::from_i64(&[vec![3, -1]]), vec![int(5)], vec!["c".into()]).unwrap();
        let both = m1.then(&m2).unwrap();
        let x = vec![frac(1, 2), int(4)];
        assert_eq!(both.apply(&x).unwrap(), m2.apply(&m1.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn text_formats() {
        let p = cut3();
        assert_eq!(VPolytope::parse(&p.to_text()).unwrap(), p);
        let h = LinIneq::parse("1 -1/2 0 | 3").unwrap();
        assert_eq!(h.to_string(), "1 -1/2 0 | 3");
        assert_eq!(h.canonical(), LinIneq::from_i64(&[2, -1, 0], 6));
        assert_eq!(parse_inequalities("# c\n1 0 | 1\n0 1 | 1\n").unwrap().len(), 2);
        assert!(parse_inequalities("1 0 | 1\n1 | 1\n").is_err());
        assert!(LinIneq::parse("1 2 3").is_err());
        let names: Vec<String> = vec!["x12".into(), "x13".into(), "x23".into()];
        assert_eq!(LinIneq::from_i64(&[1, -1, -2], 0).pretty(&names), "x12 - x13 - 2 x23 <= 0");
    }
}
