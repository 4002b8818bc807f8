//! Exact rational scalars and dense matrices.
//!
//! Scalars are `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator. Everything here is plain Gaussian elimination
//! or a textbook phase-one simplex; matrices stay small enough that no
//! fraction-free tricks are needed.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, XcError};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Parses `[+-]digits[/digits]` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || XcError::input(format!("malformed rational {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    if d.is_zero() {
        return Err(XcError::input(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(n, d))
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scales `v` by a positive factor so that all entries become coprime
/// integers. The zero vector is returned unchanged.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(XcError::input(format!(
                "matrix {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(XcError::input(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            entries.extend(r);
        }
        Ok(RatMatrix { rows: n, cols, entries })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(cols, data).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(XcError::input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(XcError::input(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).recip();
            for j in c..m.cols {
                let v = m.get(lead, j) * &inv;
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c).clone();
                for j in c..m.cols {
                    let v = m.get(r, j) - &f * m.get(lead, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One exact solution of `self * x = b`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve_affine(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of the right null space, one vector per free column, read off
    /// the reduced echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (red, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Text form: `rows cols` on the first line, then one line per row.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| XcError::input("empty matrix text"))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let [r, c] = dims[..] else {
            return Err(XcError::input(format!("bad matrix header {header:?}")));
        };
        let rows: usize = r.parse().map_err(|_| XcError::input(format!("bad row count {r:?}")))?;
        let cols: usize = c.parse().map_err(|_| XcError::input(format!("bad column count {c:?}")))?;
        let mut data = Vec::with_capacity(rows);
        for i in 0..rows {
            let line = lines.next().ok_or_else(|| XcError::input(format!("missing matrix row {i}")))?;
            data.push(line.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>()?);
        }
        if lines.next().is_some() {
            return Err(XcError::input("trailing data after matrix rows"));
        }
        Self::from_rows(cols, data)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Finds some `x >= 0` with `a * x = b`, or proves there is none.
///
/// Phase one of the simplex method on a dense exact tableau, with Bland's
/// rule so degenerate pivots cannot cycle.
pub fn nonnegative_solution(a: &RatMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.rows();
    let n = a.cols();
    if b.len() != m {
        return None;
    }
    // Columns: n originals, m artificials, then the right-hand side.
    let width = n + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for r in 0..m {
        let flip = b[r].is_negative();
        let mut row = vec![Rational::zero(); width];
        for c in 0..n {
            row[c] = if flip { -a.get(r, c).clone() } else { a.get(r, c).clone() };
        }
        row[n + r] = Rational::one();
        row[width - 1] = if flip { -b[r].clone() } else { b[r].clone() };
        tab.push(row);
    }
    // Reduced costs of "minimise the sum of artificials".
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for c in 0..n {
            cost[c] -= &row[c];
        }
        cost[width - 1] -= &row[width - 1];
    }
    tab.push(cost);
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&c| tab[m][c].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if tab[r][enter].is_positive() {
                let ratio = &tab[r][width - 1] / &tab[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so an entering column always
        // has a positive entry somewhere.
        let (pr, _) = leave?;
        let inv = tab[pr][enter].recip();
        for v in tab[pr].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = tab[pr].clone();
        for (r, row) in tab.iter_mut().enumerate() {
            if r == pr || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        basis[pr] = enter;
    }

    if !tab[m][width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = tab[r][width - 1].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_rational("3/2").unwrap(), frac(3, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        let z = parse_rational("0").unwrap();
        assert!(z.numer().is_zero() && z.denom().is_one());
        assert_eq!(parse_rational("+7").unwrap(), int(7));
        for bad in ["", "/", "3/", "/4", "1.5", "3/-2", "a", "1/0", "- 3", "--3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn parse_large() {
        let r = parse_rational("100000000000000000000000000000/3").unwrap();
        assert_eq!(format_rational(&r), "100000000000000000000000000000/3");
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zeros(3, 4).rank(), 0);
        let m = RatMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let x = RatMatrix::identity(2).solve_affine(&[frac(1, 2), int(3)]).unwrap();
        assert_eq!(x, vec![frac(1, 2), int(3)]);
        let a = RatMatrix::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert!(a.solve_affine(&[int(0), int(1)]).is_none());
        let a = RatMatrix::from_i64(&[vec![2]]);
        assert_eq!(a.solve_affine(&[int(1)]).unwrap(), vec![frac(1, 2)]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = RatMatrix::from_i64(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 4 - a.rank());
        for v in ns {
            assert!(a.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = RatMatrix::new(2, 2, vec![frac(1, 2), int(-3), int(0), frac(7, 9)]).unwrap();
        let text = m.to_string();
        assert_eq!(text, "2 2\n1/2 -3\n0 7/9\n");
        assert_eq!(RatMatrix::parse(&text).unwrap(), m);
        assert!(RatMatrix::parse("2 2\n1 2\n").is_err());
        assert!(RatMatrix::parse("1 2\n1 2 3\n").is_err());
    }

    #[test]
    fn primitive_scaling() {
        let v = primitive_integer_vector(&[frac(1, 2), frac(3, 4), int(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(3), BigInt::from(0)]);
        let v = primitive_integer_vector(&[int(-4), int(6)]);
        assert_eq!(v, vec![BigInt::from(-2), BigInt::from(3)]);
    }

    #[test]
    fn simplex_feasibility() {
        // x + y = 1, x - y = 0  ->  (1/2, 1/2)
        let a = RatMatrix::from_i64(&[vec![1, 1], vec![1, -1]]);
        let x = nonnegative_solution(&a, &[int(1), int(0)]).unwrap();
        assert_eq!(x, vec![frac(1, 2), frac(1, 2)]);
        // x - y = -1 with x,y >= 0 is feasible (0, 1)
        let a = RatMatrix::from_i64(&[vec![1, -1]]);
        let x = nonnegative_solution(&a, &[int(-1)]).unwrap();
        assert_eq!(dot(a.row(0), &x), int(-1));
        // x + y = -1 is not
        let a = RatMatrix::from_i64(&[vec![1, 1]]);
        assert!(nonnegative_solution(&a, &[int(-1)]).is_none());
    }

    #[test]
    fn simplex_degenerate_redundant_rows() {
        let a = RatMatrix::from_i64(&[vec![1, 1, 1], vec![2, 2, 2], vec![1, 0, 0]]);
        let x = nonnegative_solution(&a, &[int(1), int(2), int(0)]).unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![int(1), int(2), int(0)]);
        assert!(x.iter().all(|v| !v.is_negative()));
    }
}
