//! 3SAT to subset sum, with numbers written as base-10 digit strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::cnf::{literal_true, point_assignment, sat_polytope, Cnf3};
use super::witness::{ReductionWitness, TargetPolytope};
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::polyhedra::{AffineMap, FaceSpec, VPolytope};
use crate::ratmath::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetSumInstance {
    pub names: Vec<String>,
    /// One digit string per number, `digit_count` long, leading zeros kept.
    pub digits: Vec<String>,
    pub target_digits: String,
    pub digit_count: usize,
}

impl SubsetSumInstance {
    pub fn numbers(&self) -> Vec<BigInt> {
        self.digits.iter().map(|d| d.parse().expect("digit strings are decimal")).collect()
    }

    pub fn target(&self) -> BigInt {
        self.target_digits.parse().expect("digit strings are decimal")
    }

    /// One `name digits` line per number, then the target as `b`.
    pub fn table_text(&self) -> String {
        let mut s = String::new();
        for (n, d) in self.names.iter().zip(&self.digits) {
            let _ = writeln!(s, "{n} {d}");
        }
        let _ = writeln!(s, "b {}", self.target_digits);
        s
    }

    /// Largest digit-column sum over all numbers.
    pub fn max_column_sum(&self) -> u32 {
        (0..self.digit_count)
            .map(|c| self.digits.iter().map(|d| (d.as_bytes()[c] - b'0') as u32).sum())
            .max()
            .unwrap_or(0)
    }
}

/// Numbers in the order `v1, v1', v2, v2', …, s1, s1', …`. Digit columns
/// are the variables followed by the clauses.
pub fn sat_to_subsetsum(f: &Cnf3, budget: &Budget) -> Result<(SubsetSumInstance, ReductionWitness)> {
    f.require_all_variables_used()?;
    let (n, m) = (f.var_count(), f.clauses().len());
    let width = n + m;
    let mut names = Vec::with_capacity(2 * (n + m));
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(2 * (n + m));
    for i in 1..=n as i64 {
        for (suffix, lit) in [("", i), ("'", -i)] {
            let mut row = vec![0u8; width];
            row[i as usize - 1] = 1;
            for (j, c) in f.clauses().iter().enumerate() {
                if c.contains(&lit) {
                    row[n + j] = 1;
                }
            }
            names.push(format!("v{i}{suffix}"));
            rows.push(row);
        }
    }
    for j in 0..m {
        for (suffix, d) in [("", 1u8), ("'", 2u8)] {
            let mut row = vec![0u8; width];
            row[n + j] = d;
            names.push(format!("s{}{suffix}", j + 1));
            rows.push(row);
        }
    }
    let to_string = |r: &[u8]| r.iter().map(|d| char::from(b'0' + d)).collect::<String>();
    let target: Vec<u8> = (0..width).map(|c| if c < n { 1 } else { 4 }).collect();
    let inst = SubsetSumInstance {
        names,
        digits: rows.iter().map(|r| to_string(r)).collect(),
        target_digits: to_string(&target),
        digit_count: width,
    };
    let worst = inst.max_column_sum();
    assert!(worst <= 6, "digit column sum {worst} would carry");

    let source = sat_polytope(f, budget)?;
    let target = subsetsum_polytope(&inst, budget)?;
    let keep: Vec<usize> = (0..n).map(|i| 2 * i).collect();
    let mut projection = AffineMap::coordinate_projection(&inst.names, &keep)?;
    projection.out_names = f.var_names().to_vec();
    let lifts = source.points().iter().map(|x| subset_lift(f, point_assignment(x))).collect();
    let witness = ReductionWitness {
        name: "sat-to-subset-sum".into(),
        source,
        target: TargetPolytope::Explicit(target),
        face: FaceSpec::default(),
        projection,
        lifts,
    };
    Ok((inst, witness))
}

/// `v_i` or `v_i'` by the assignment, then per clause the unique `s/s'`
/// completion of its digit to 4.
fn subset_lift(f: &Cnf3, assignment: u64) -> Vec<Rational> {
    let n = f.var_count();
    let mut x = Vec::with_capacity(2 * (n + f.clauses().len()));
    let bit = |b: bool| if b { Rational::one() } else { Rational::zero() };
    for i in 0..n {
        let t = assignment >> i & 1 == 1;
        x.push(bit(t));
        x.push(bit(!t));
    }
    for c in f.clauses() {
        let t = c.iter().filter(|&&l| literal_true(l, assignment)).count();
        x.push(bit(t == 1 || t == 3));
        x.push(bit(t == 1 || t == 2));
    }
    x
}

/// Characteristic vectors of the subsets summing exactly to the target.
pub fn subsetsum_polytope(inst: &SubsetSumInstance, budget: &Budget) -> Result<VPolytope> {
    subset_sum_points(inst.names.clone(), &inst.numbers(), &inst.target(), budget)
}

/// Same, for plain numbers and target.
pub fn subset_sum_points(names: Vec<String>, numbers: &[BigInt], target: &BigInt, budget: &Budget) -> Result<VPolytope> {
    let k = numbers.len();
    if names.len() != k {
        return Err(XcError::input(format!("{} names for {k} numbers", names.len())));
    }
    budget.check_subsets("subset sum enumeration", k)?;
    let mut points = Vec::new();
    for mask in 0u64..1 << k {
        let sum: BigInt = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &numbers[i]).sum();
        if &sum == target {
            points.push((0..k).map(|i| if mask >> i & 1 == 1 { Rational::one() } else { Rational::zero() }).collect());
        }
    }
    Ok(VPolytope::new(names, points)?.sorted())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmath::int;

    fn example() -> Cnf3 {
        Cnf3::new(3, vec![vec![1, -2, 3], vec![-1, 2, 3], vec![1, 2, -3], vec![-1, -2, -3]]).unwrap()
    }

    #[test]
    fn table_one() {
        let (inst, w) = sat_to_subsetsum(&example(), &Budget::default()).unwrap();
        assert_eq!(&inst.digits[..6], ["1001010", "1000101", "0100110", "0101001", "0011100", "0010011"]);
        assert_eq!(inst.digits[6..8], ["0001000", "0002000"]);
        assert_eq!(inst.target_digits, "1114444");
        assert!(w.verify(&Budget::default()).unwrap().verified());
        let TargetPolytope::Explicit(t) = &w.target else { panic!() };
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn single_clause() {
        let f = Cnf3::new(1, vec![vec![1]]).unwrap();
        let (inst, w) = sat_to_subsetsum(&f, &Budget::default()).unwrap();
        assert_eq!(inst.table_text(), "v1 11\nv1' 10\ns1 01\ns1' 02\nb 14\n");
        assert!(w.verify(&Budget::default()).unwrap().verified());
    }

    #[test]
    fn unused_variable_rejected() {
        let f = Cnf3::new(2, vec![vec![1]]).unwrap();
        assert!(matches!(sat_to_subsetsum(&f, &Budget::default()), Err(XcError::Input(_))));
    }

    #[test]
    fn plain_subset_sums() {
        let b = Budget::default();
        let names = vec!["a".to_string(), "b".to_string()];
        let p = subset_sum_points(names, &[BigInt::from(1), BigInt::from(1)], &BigInt::from(1), &b).unwrap();
        assert_eq!(p.points(), &[vec![int(0), int(1)], vec![int(1), int(0)]]);
        let p = subset_sum_points(vec!["a".into()], &[BigInt::from(2)], &BigInt::from(1), &b).unwrap();
        assert!(p.is_empty());
    }
}
