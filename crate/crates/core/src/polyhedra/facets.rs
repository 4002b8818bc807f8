//! Facet enumeration by the double description method.
//!
//! The hull is first reduced to full dimension: equalities of the affine hull
//! are reported separately, and the points are projected onto the
//! lexicographically first coordinate set that is injective on the hull.
//! The facets are then the extreme rays of the cone
//! `{(a, t) : a·w_j <= t for all j}`, built by inserting one point
//! constraint at a time and combining adjacent rays.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{LinIneq, VPolytope};
use crate::bits::Bits;
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::ratmath::{primitive_integer_vector, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetReport {
    /// Irredundant facets in canonical scaling, sorted lexicographically.
    pub facets: Vec<LinIneq>,
    /// Equalities `a·x = rhs` spanning the affine hull, in reduced form.
    pub equalities: Vec<LinIneq>,
    /// Dimension of the affine hull.
    pub dimension: usize,
}

struct Ray {
    v: Vec<BigInt>,
    zeros: Bits,
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

pub fn facet_enumeration(p: &VPolytope, budget: &Budget) -> Result<FacetReport> {
    if p.is_empty() {
        return Err(XcError::input("facet enumeration of an empty point set"));
    }
    if p.len() > budget.hull_points {
        return Err(XcError::refused("facet enumeration", format!("{} points", p.len()), budget.hull_points));
    }
    if p.dim() > budget.hull_dim {
        return Err(XcError::refused("facet enumeration", format!("dimension {}", p.dim()), budget.hull_dim));
    }
    let d = p.dim();
    let pts = p.points();

    let equalities = hull_equalities(pts, d);

    let base = &pts[0];
    let diffs: Vec<Vec<Rational>> = pts.iter().map(|x| x.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    let diff_matrix = RatMatrix::from_rows(d, diffs.clone())?;
    let r = diff_matrix.rank();
    if r == 0 {
        return Ok(FacetReport { facets: Vec::new(), equalities, dimension: 0 });
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    for c in 0..d {
        if chosen.len() == r {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(c);
        let sub: Vec<Vec<Rational>> = diffs.iter().map(|row| trial.iter().map(|&j| row[j].clone()).collect()).collect();
        if RatMatrix::from_rows(trial.len(), sub)?.rank() == trial.len() {
            chosen = trial;
        }
    }

    // Constraint rows (w_j, -1), scaled to integers.
    let rows: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|x| {
            let mut g: Vec<Rational> = chosen.iter().map(|&j| x[j].clone()).collect();
            g.push(-Rational::one());
            primitive_integer_vector(&g)
        })
        .collect();

    let rays = double_description(&rows, r + 1)?;

    let mut facets: Vec<LinIneq> = rays
        .into_iter()
        .filter(|y| y[..r].iter().any(|c| !c.is_zero()))
        .map(|y| {
            let mut coeffs = vec![Rational::zero(); d];
            for (k, &j) in chosen.iter().enumerate() {
                coeffs[j] = Rational::from_integer(y[k].clone());
            }
            LinIneq::new(coeffs, Rational::from_integer(y[r].clone())).canonical()
        })
        .collect();
    facets.sort();
    facets.dedup();
    Ok(FacetReport { facets, equalities, dimension: r })
}

fn hull_equalities(pts: &[Vec<Rational>], d: usize) -> Vec<LinIneq> {
    let rows: Vec<Vec<Rational>> = pts
        .iter()
        .map(|x| {
            let mut row = x.clone();
            row.push(-Rational::one());
            row
        })
        .collect();
    let null = RatMatrix::from_rows(d + 1, rows).expect("rows of equal length").nullspace();
    if null.is_empty() {
        return Vec::new();
    }
    let (red, pivots) = RatMatrix::from_rows(d + 1, null).expect("rows of equal length").rref();
    (0..pivots.len())
        .map(|i| {
            let row = red.row(i);
            LinIneq::new(row[..d].to_vec(), row[d].clone()).canonical()
        })
        .collect()
}

/// Extreme rays of `{y : row·y <= 0 for every row}`, assuming the rows span
/// the whole space so the cone is pointed.
fn double_description(rows: &[Vec<BigInt>], width: usize) -> Result<Vec<Vec<BigInt>>> {
    let k = rows.len();

    // Start from a basis of constraint rows: the cone they cut out is
    // simplicial and its rays are the columns of the negated inverse.
    let mut basis: Vec<usize> = Vec::with_capacity(width);
    for j in 0..k {
        let mut trial = basis.clone();
        trial.push(j);
        if int_rows(rows, &trial).rank() == trial.len() {
            basis = trial;
            if basis.len() == width {
                break;
            }
        }
    }
    if basis.len() != width {
        return Err(XcError::verification("point constraints do not span the lifted space"));
    }
    let b = int_rows(rows, &basis);
    let mut processed = Bits::new(k);
    basis.iter().for_each(|&j| processed.insert(j));

    let mut rays: Vec<Ray> = Vec::with_capacity(width);
    for col in 0..width {
        let mut e = vec![Rational::zero(); width];
        e[col] = Rational::one();
        let x = b.solve_affine(&e).expect("basis rows are independent");
        let neg: Vec<Rational> = x.iter().map(|v| -v).collect();
        let v = primitive_integer_vector(&neg);
        rays.push(Ray { zeros: zero_set(rows, &v, &processed, k), v });
    }

    for j in 0..k {
        if processed.contains(j) {
            continue;
        }
        let g = &rows[j];
        let vals: Vec<BigInt> = rays.iter().map(|ray| int_dot(g, &ray.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for &pi in &pos {
            for &ni in &neg {
                let common = rays[pi].zeros.and(&rays[ni].zeros);
                if common.count() + 2 < width {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, ray)| t == pi || t == ni || !common.is_subset(&ray.zeros));
                if !adjacent {
                    continue;
                }
                let sp = &vals[pi];
                let sn = -&vals[ni];
                let v: Vec<BigInt> = rays[ni].v.iter().zip(&rays[pi].v).map(|(n, p)| sp * n + &sn * p).collect();
                let mut zeros = common;
                zeros.insert(j);
                next.push(Ray { v: primitive(v), zeros });
            }
        }
        for (i, mut ray) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                ray.zeros.insert(j);
                next.push(ray);
            } else if vals[i].is_negative() {
                next.push(ray);
            }
        }
        rays = next;
        processed.insert(j);
    }
    Ok(rays.into_iter().map(|r| r.v).collect())
}

fn zero_set(rows: &[Vec<BigInt>], v: &[BigInt], within: &Bits, k: usize) -> Bits {
    let mut z = Bits::new(k);
    for j in within.iter() {
        if int_dot(&rows[j], v).is_zero() {
            z.insert(j);
        }
    }
    z
}

fn int_rows(rows: &[Vec<BigInt>], pick: &[usize]) -> RatMatrix {
    let width = rows[0].len();
    let data = pick
        .iter()
        .map(|&j| rows[j].iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    RatMatrix::from_rows(width, data).expect("rows of equal length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmath::int;

    fn poly(rows: &[&[i64]]) -> VPolytope {
        let d = rows[0].len();
        VPolytope::unnamed(d, rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn unit_segment() {
        let r = facet_enumeration(&poly(&[&[0], &[1]]), &Budget::default()).unwrap();
        assert_eq!(r.facets, vec![LinIneq::from_i64(&[-1], 0), LinIneq::from_i64(&[1], 1)]);
        assert!(r.equalities.is_empty());
        assert_eq!(r.dimension, 1);
    }

    #[test]
    fn cut_triangle() {
        let p = poly(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let r = facet_enumeration(&p, &Budget::default()).unwrap();
        let want = vec![
            LinIneq::from_i64(&[-1, -1, 1], 0),
            LinIneq::from_i64(&[-1, 1, -1], 0),
            LinIneq::from_i64(&[1, -1, -1], 0),
            LinIneq::from_i64(&[1, 1, 1], 2),
        ];
        assert_eq!(r.facets, want);
    }

    #[test]
    fn cube_and_interior_point() {
        let mut rows: Vec<Vec<i64>> = (0..8).map(|m| (0..3).map(|b| (m >> b) & 1).collect()).collect();
        rows.push(vec![0, 0, 0]);
        let mut p: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        p.push(vec![Rational::new(1.into(), 2.into()); 3]);
        let r = facet_enumeration(&VPolytope::unnamed(3, p).unwrap(), &Budget::default()).unwrap();
        assert_eq!(r.facets.len(), 6);
    }

    #[test]
    fn low_dimensional_simplex() {
        let p = poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let r = facet_enumeration(&p, &Budget::default()).unwrap();
        assert_eq!(r.dimension, 2);
        assert_eq!(r.equalities, vec![LinIneq::from_i64(&[1, 1, 1], 1)]);
        assert_eq!(r.facets.len(), 3);
        for h in &r.facets {
            assert_eq!(p.points().iter().filter(|x| h.slack(x).is_zero()).count(), 2);
        }
    }

    #[test]
    fn single_point() {
        let r = facet_enumeration(&poly(&[&[2, 3]]), &Budget::default()).unwrap();
        assert!(r.facets.is_empty());
        assert_eq!(r.equalities.len(), 2);
    }

    #[test]
    fn budget_refusal() {
        let b = Budget { hull_points: 2, ..Budget::default() };
        let e = facet_enumeration(&poly(&[&[0], &[1], &[2]]), &b);
        assert!(matches!(e, Err(XcError::Refused { .. })));
    }
}
