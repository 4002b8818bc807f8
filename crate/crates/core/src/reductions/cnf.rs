use std::fmt::Write as _;

use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::polyhedra::VPolytope;
use crate::ratmath::Rational;
use num_traits::{One, Zero};

/// CNF formula with at most three literals per clause. Literals are signed
/// 1-based variable indices, as in DIMACS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf3 {
    var_names: Vec<String>,
    clauses: Vec<Vec<i64>>,
}

impl Cnf3 {
    /// Variables named `x1..x{var_count}`.
    pub fn new(var_count: usize, clauses: Vec<Vec<i64>>) -> Result<Self> {
        Self::with_names((1..=var_count).map(|i| format!("x{i}")).collect(), clauses)
    }

    pub fn with_names(var_names: Vec<String>, clauses: Vec<Vec<i64>>) -> Result<Self> {
        let n = var_names.len() as i64;
        for (j, c) in clauses.iter().enumerate() {
            if c.is_empty() || c.len() > 3 {
                return Err(XcError::input(format!("clause {} has {} literals, expected 1 to 3", j + 1, c.len())));
            }
            for (k, &l) in c.iter().enumerate() {
                if l == 0 || l.abs() > n {
                    return Err(XcError::input(format!("literal {l} in clause {} out of range", j + 1)));
                }
                if c[..k].contains(&l) {
                    return Err(XcError::input(format!("literal {l} repeated in clause {}", j + 1)));
                }
                if c[..k].contains(&-l) {
                    return Err(XcError::input(format!("clause {} contains a literal and its negation", j + 1)));
                }
            }
        }
        Ok(Cnf3 { var_names, clauses })
    }

    pub fn var_count(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    /// Bit `i - 1` of `assignment` is the value of variable `i`.
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| literal_true(l, assignment)))
    }

    /// Number of clauses each variable occurs in (either sign).
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.var_count()];
        for c in &self.clauses {
            for &l in c {
                occ[l.unsigned_abs() as usize - 1] += 1;
            }
        }
        occ
    }

    pub(crate) fn require_all_variables_used(&self) -> Result<()> {
        match self.occurrences().iter().position(|&k| k == 0) {
            Some(i) => Err(XcError::input(format!("variable {} occurs in no clause", self.var_names[i]))),
            None => Ok(()),
        }
    }

    /// DIMACS text: `c` comment lines, a `p cnf V C` header, clauses ending
    /// in `0`.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i64> = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let bad = || XcError::input(format!("bad problem line {line:?}"));
                let ["p", "cnf", v, c] = parts[..] else { return Err(bad()) };
                header = Some((v.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?));
                continue;
            }
            if header.is_none() {
                return Err(XcError::input("clause before the 'p cnf' line"));
            }
            for tok in line.split_whitespace() {
                let l: i64 = tok.parse().map_err(|_| XcError::input(format!("bad literal {tok:?}")))?;
                if l == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(l);
                }
            }
        }
        let (v, c) = header.ok_or_else(|| XcError::input("missing 'p cnf' line"))?;
        if !current.is_empty() {
            return Err(XcError::input("last clause is not terminated by 0"));
        }
        if clauses.len() != c {
            return Err(XcError::input(format!("header announces {c} clauses, found {}", clauses.len())));
        }
        Self::new(v, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.var_count(), self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let _ = write!(s, "{l} ");
            }
            s.push_str("0\n");
        }
        s
    }
}

pub(crate) fn literal_true(l: i64, assignment: u64) -> bool {
    let v = assignment >> (l.unsigned_abs() - 1) & 1 == 1;
    if l > 0 {
        v
    } else {
        !v
    }
}

pub(crate) fn assignment_point(n: usize, assignment: u64) -> Vec<Rational> {
    (0..n).map(|i| if assignment >> i & 1 == 1 { Rational::one() } else { Rational::zero() }).collect()
}

pub(crate) fn point_assignment(x: &[Rational]) -> u64 {
    x.iter().enumerate().filter(|(_, v)| v.is_one()).fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Convex hull of the satisfying assignments, one 0/1 point each, in
/// lexicographic order.
pub fn sat_polytope(f: &Cnf3, budget: &Budget) -> Result<VPolytope> {
    let n = f.var_count();
    budget.check_subsets("satisfying assignments", n)?;
    let points = (0u64..1 << n).filter(|&a| f.satisfied_by(a)).map(|a| assignment_point(n, a)).collect();
    Ok(VPolytope::new(f.var_names.clone(), points)?.sorted())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example() -> Cnf3 {
        Cnf3::new(3, vec![vec![1, -2, 3], vec![-1, 2, 3], vec![1, 2, -3], vec![-1, -2, -3]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Cnf3::new(2, vec![vec![]]).is_err());
        assert!(Cnf3::new(2, vec![vec![1, -1]]).is_err());
        assert!(Cnf3::new(2, vec![vec![3]]).is_err());
        assert!(Cnf3::new(4, vec![vec![1, 2, 3, 4]]).is_err());
        assert!(Cnf3::new(2, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn sat_examples() {
        let b = Budget::default();
        let single = Cnf3::new(1, vec![vec![1]]).unwrap();
        assert_eq!(sat_polytope(&single, &b).unwrap().points(), &[vec![Rational::one()]]);
        let unsat = Cnf3::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(sat_polytope(&unsat, &b).unwrap().is_empty());
        let p = sat_polytope(&example(), &b).unwrap();
        let labels: Vec<String> = p.points().iter().map(|x| crate::polyhedra::point_label(x)).collect();
        assert_eq!(labels, ["000", "011", "101", "110"]);
    }

    #[test]
    fn dimacs_round_trip() {
        let f = example();
        assert_eq!(Cnf3::parse_dimacs(&f.to_dimacs()).unwrap(), f);
        let multi = "c hi\np cnf 2 2\n1 -2\n0 2 0\n";
        assert_eq!(Cnf3::parse_dimacs(multi).unwrap().clauses(), &[vec![1, -2], vec![2]]);
        assert!(Cnf3::parse_dimacs("p cnf 2 2\n1 0\n").is_err());
        assert!(Cnf3::parse_dimacs("1 0\n").is_err());
        assert!(Cnf3::parse_dimacs("p cnf 2 1\n1 2\n").is_err());
    }
}
