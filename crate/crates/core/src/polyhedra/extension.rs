//! Extended formulations from nonnegative factorizations of slack matrices.

use num_traits::{One, Signed, Zero};

use super::{slack_matrix, verify_projection_equality, AffineMap, LinIneq, ProjectionReport, VPolytope};
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::ratmath::{format_rational, RatMatrix, Rational};

/// The system `A x + Q y = b, E x = e, y >= 0` and the outcome of checking it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionReport {
    /// Extra variables kept (zero columns of `Q` are dropped).
    pub columns: usize,
    /// Rows `[A | Q | b]` followed by the hull equalities `[E | 0 | e]`.
    pub system: RatMatrix,
    /// Every point lifts through the matching column of `R`.
    pub lifts_ok: bool,
    pub extension_vertices: usize,
    pub projection: ProjectionReport,
}

impl ExtensionReport {
    pub fn verified(&self) -> bool {
        self.lifts_ok && self.projection.equal
    }
}

/// Checks `Q R = S` for the slack matrix `S` of `(ineqs, p)`, builds the
/// extension, lifts each point of `p` by the corresponding column of `R`, and
/// enumerates the extension's vertices to compare their projection with `p`.
///
/// `equalities` are hull equalities (as from facet enumeration) that must
/// accompany the inequalities when `p` is not full-dimensional.
pub fn ef_from_factorization(
    ineqs: &[LinIneq],
    equalities: &[LinIneq],
    q: &RatMatrix,
    r: &RatMatrix,
    p: &VPolytope,
    budget: &Budget,
) -> Result<ExtensionReport> {
    if q.rows() != ineqs.len() || r.cols() != p.len() || q.cols() != r.rows() {
        return Err(XcError::input(format!(
            "shapes do not chain: {} inequalities, Q is {}x{}, R is {}x{}, {} points",
            ineqs.len(),
            q.rows(),
            q.cols(),
            r.rows(),
            r.cols(),
            p.len()
        )));
    }
    if !q.is_nonnegative() || !r.is_nonnegative() {
        return Err(XcError::verification("factorization has a negative entry"));
    }
    let slack = slack_matrix(ineqs, p)?.matrix;
    let product = q.mul(r)?;
    if let Some((i, j)) = first_difference(&product, &slack) {
        return Err(XcError::verification(format!(
            "factorization mismatch at ({i},{j}): product {} but slack {}",
            format_rational(product.get(i, j)),
            format_rational(slack.get(i, j))
        )));
    }

    let keep: Vec<usize> = (0..q.cols()).filter(|&c| (0..q.rows()).any(|i| !q.get(i, c).is_zero())).collect();
    if keep.len() > budget.extension_columns {
        return Err(XcError::refused("extension vertex enumeration", format!("{} columns", keep.len()), budget.extension_columns));
    }
    let d = p.dim();
    let rc = keep.len();
    let width = d + rc;

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(ineqs.len() + equalities.len());
    let mut rhs: Vec<Rational> = Vec::with_capacity(rows.capacity());
    for (i, h) in ineqs.iter().enumerate() {
        let mut row = h.coeffs.clone();
        row.extend(keep.iter().map(|&c| q.get(i, c).clone()));
        rows.push(row);
        rhs.push(h.rhs.clone());
    }
    for e in equalities {
        if e.dim() != d {
            return Err(XcError::input("hull equality has the wrong length"));
        }
        let mut row = e.coeffs.clone();
        row.extend(std::iter::repeat_n(Rational::zero(), rc));
        rows.push(row);
        rhs.push(e.rhs.clone());
    }

    // Lifts: y_j = column j of R, restricted to the kept columns. Dropped
    // columns multiply a zero column of Q, so they do not matter.
    let system_a = RatMatrix::from_rows(width, rows.clone())?;
    let mut lifts_ok = true;
    for (j, x) in p.points().iter().enumerate() {
        let mut z = x.clone();
        z.extend(keep.iter().map(|&c| r.get(c, j).clone()));
        if system_a.mul_vec(&z)? != rhs {
            lifts_ok = false;
        }
    }

    let mut vertices: Vec<Vec<Rational>> = Vec::new();
    for mask in 0u64..(1u64 << rc) {
        let mut sys = rows.clone();
        let mut b = rhs.clone();
        for k in (0..rc).filter(|k| mask >> k & 1 == 1) {
            let mut unit = vec![Rational::zero(); width];
            unit[d + k] = Rational::one();
            sys.push(unit);
            b.push(Rational::zero());
        }
        let m = RatMatrix::from_rows(width, sys)?;
        if m.rank() != width {
            continue;
        }
        if let Some(z) = m.solve_affine(&b) {
            if z[d..].iter().all(|v| !v.is_negative()) {
                vertices.push(z);
            }
        }
    }
    let mut names: Vec<String> = p.coord_names().to_vec();
    names.extend((1..=rc).map(|k| format!("y{k}")));
    let ext = VPolytope::new(names.clone(), vertices)?;
    let proj = AffineMap::coordinate_projection(&names, &(0..d).collect::<Vec<_>>())?;
    let projection = verify_projection_equality(&ext, &proj, p)?;

    let mut full = rows;
    for (row, b) in full.iter_mut().zip(rhs) {
        row.push(b);
    }
    Ok(ExtensionReport {
        columns: rc,
        system: RatMatrix::from_rows(width + 1, full)?,
        lifts_ok,
        extension_vertices: ext.len(),
        projection,
    })
}

fn first_difference(a: &RatMatrix, b: &RatMatrix) -> Option<(usize, usize)> {
    (0..a.rows()).flat_map(|i| (0..a.cols()).map(move |j| (i, j))).find(|&(i, j)| a.get(i, j) != b.get(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::facet_enumeration;
    use crate::ratmath::int;

    fn cut3() -> VPolytope {
        let rows = [[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]];
        VPolytope::unnamed(3, rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_factorizations_verify() {
        let p = cut3();
        let f = facet_enumeration(&p, &Budget::default()).unwrap();
        let s = slack_matrix(&f.facets, &p).unwrap().matrix;
        let rep = ef_from_factorization(&f.facets, &f.equalities, &s, &RatMatrix::identity(4), &p, &Budget::default()).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.columns, 4);
        let rep = ef_from_factorization(&f.facets, &f.equalities, &RatMatrix::identity(4), &s, &p, &Budget::default()).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.extension_vertices, 4);
    }

    #[test]
    fn corrupted_factor_is_rejected() {
        let p = cut3();
        let f = facet_enumeration(&p, &Budget::default()).unwrap();
        let mut s = slack_matrix(&f.facets, &p).unwrap().matrix;
        let bumped = s.get(0, 1) + int(1);
        s.set(0, 1, bumped);
        let e = ef_from_factorization(&f.facets, &[], &s, &RatMatrix::identity(4), &p, &Budget::default());
        assert!(matches!(e, Err(XcError::Verification(_))));
        let mut neg = RatMatrix::identity(4);
        neg.set(0, 1, int(-1));
        let e = ef_from_factorization(&f.facets, &[], &neg, &RatMatrix::identity(4), &p, &Budget::default());
        assert!(matches!(e, Err(XcError::Verification(_))));
    }

    #[test]
    fn low_dimensional_needs_equalities() {
        let p = VPolytope::unnamed(2, vec![vec![int(1), int(0)], vec![int(0), int(1)]]).unwrap();
        let f = facet_enumeration(&p, &Budget::default()).unwrap();
        let s = slack_matrix(&f.facets, &p).unwrap().matrix;
        let n = s.rows();
        let rep = ef_from_factorization(&f.facets, &f.equalities, &RatMatrix::identity(n), &s, &p, &Budget::default()).unwrap();
        assert!(rep.verified());
    }
}
