//! Combinatorial lower bounds on nonnegative rank: support matrices,
//! rectangle covers, fooling sets, and checks of supplied factorizations.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bits::{self, Bits};
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::ratmath::{format_rational, RatMatrix};

/// 0/1 pattern of a matrix, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportMatrix {
    rows: usize,
    cols: usize,
    row_bits: Vec<Bits>,
}

impl SupportMatrix {
    pub fn from_rows(cols: usize, rows: &[Vec<bool>]) -> Result<Self> {
        let mut row_bits = Vec::with_capacity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(XcError::input(format!("support row {i} has {} entries, expected {cols}", r.len())));
            }
            let mut b = Bits::new(cols);
            r.iter().enumerate().filter(|(_, &v)| v).for_each(|(j, _)| b.insert(j));
            row_bits.push(b);
        }
        Ok(SupportMatrix { rows: rows.len(), cols, row_bits })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row_bits[r].contains(c)
    }

    pub fn ones(&self) -> Vec<(usize, usize)> {
        (0..self.rows).flat_map(|r| self.row_bits[r].iter().map(move |c| (r, c))).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<&str> = (0..self.cols).map(|c| if self.get(r, c) { "1" } else { "0" }).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Support of a nonnegative matrix.
pub fn suppmat(m: &RatMatrix) -> Result<SupportMatrix> {
    let mut rows = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if v.is_negative() {
                return Err(XcError::input(format!("negative entry {} at ({r},{c})", format_rational(v))));
            }
            row.push(!v.is_zero());
        }
        rows.push(row);
    }
    SupportMatrix::from_rows(m.cols(), &rows)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Rectangle {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectangleCover {
    pub rectangles: Vec<Rectangle>,
}

impl RectangleCover {
    pub fn size(&self) -> usize {
        self.rectangles.len()
    }

    /// Every rectangle is all ones and together they cover every one.
    pub fn validate(&self, s: &SupportMatrix) -> Result<()> {
        let mut covered = vec![Bits::new(s.cols); s.rows];
        for (k, rect) in self.rectangles.iter().enumerate() {
            for &r in &rect.rows {
                for &c in &rect.cols {
                    if r >= s.rows || c >= s.cols || !s.get(r, c) {
                        return Err(XcError::verification(format!("rectangle {k} contains zero cell ({r},{c})")));
                    }
                    covered[r].insert(c);
                }
            }
        }
        match s.ones().into_iter().find(|&(r, c)| !covered[r].contains(c)) {
            Some((r, c)) => Err(XcError::verification(format!("cell ({r},{c}) is not covered"))),
            None => Ok(()),
        }
    }
}

fn check_cover_budget(s: &SupportMatrix, budget: &Budget) -> Result<()> {
    if s.rows > budget.cover_rows || s.cols > budget.cover_cols {
        return Err(XcError::refused(
            "rectangle cover",
            format!("{}x{}", s.rows, s.cols),
            format!("{}x{}", budget.cover_rows, budget.cover_cols),
        ));
    }
    Ok(())
}

/// Rows whose support contains `cols`.
fn rows_containing(s: &SupportMatrix, cols: &Bits) -> Bits {
    let mut r = Bits::new(s.rows);
    for (i, row) in s.row_bits.iter().enumerate() {
        if cols.is_subset(row) {
            r.insert(i);
        }
    }
    r
}

fn to_rectangle(rows: &Bits, cols: &Bits) -> Rectangle {
    Rectangle { rows: rows.iter().collect(), cols: cols.iter().collect() }
}

/// All maximal all-ones rectangles, sorted. Their column sets are exactly
/// the nonempty intersections of row supports.
pub fn maximal_rectangles(s: &SupportMatrix, budget: &Budget) -> Result<Vec<Rectangle>> {
    check_cover_budget(s, budget)?;
    let mut family: BTreeSet<Bits> = BTreeSet::new();
    let mut work: Vec<Bits> = Vec::new();
    for row in &s.row_bits {
        if !row.is_empty() && family.insert(row.clone()) {
            work.push(row.clone());
        }
    }
    while let Some(c) = work.pop() {
        for row in &s.row_bits {
            let d = c.and(row);
            if !d.is_empty() && !family.contains(&d) {
                if family.len() >= budget.max_rectangles {
                    return Err(XcError::refused("maximal rectangle enumeration", format!("more than {}", family.len()), budget.max_rectangles));
                }
                family.insert(d.clone());
                work.push(d);
            }
        }
    }
    let mut rects: Vec<Rectangle> = family.iter().map(|c| to_rectangle(&rows_containing(s, c), c)).collect();
    rects.sort();
    Ok(rects)
}

/// Minimum rectangle cover by branch and bound over maximal rectangles.
pub fn rect_cover_exact(s: &SupportMatrix, budget: &Budget) -> Result<RectangleCover> {
    let rects = maximal_rectangles(s, budget)?;
    let ones = s.ones();
    if ones.is_empty() {
        return Ok(RectangleCover { rectangles: Vec::new() });
    }
    let cell_index = |r: usize, c: usize| ones.binary_search(&(r, c)).expect("one-cell");
    let covers: Vec<Bits> = rects
        .iter()
        .map(|rect| {
            let mut b = Bits::new(ones.len());
            for &r in &rect.rows {
                for &c in &rect.cols {
                    b.insert(cell_index(r, c));
                }
            }
            b
        })
        .collect();
    // For each cell, the rectangles containing it.
    let mut by_cell: Vec<Vec<usize>> = vec![Vec::new(); ones.len()];
    let mut by_cell_bits: Vec<Bits> = vec![Bits::new(rects.len()); ones.len()];
    for (k, cov) in covers.iter().enumerate() {
        for cell in cov.iter() {
            by_cell[cell].push(k);
            by_cell_bits[cell].insert(k);
        }
    }

    let greedy = rect_cover_greedy(s);
    let mut search = CoverSearch {
        covers: &covers,
        by_cell: &by_cell,
        by_cell_bits: &by_cell_bits,
        best: None,
        best_size: greedy.size() + 1,
    };
    search.run(Bits::full(ones.len()), &mut Vec::new());
    let chosen = search.best.expect("maximal rectangles cover every one");
    let mut rectangles: Vec<Rectangle> = chosen.into_iter().map(|k| rects[k].clone()).collect();
    rectangles.sort();
    Ok(RectangleCover { rectangles })
}

struct CoverSearch<'a> {
    covers: &'a [Bits],
    by_cell: &'a [Vec<usize>],
    by_cell_bits: &'a [Bits],
    best: Option<Vec<usize>>,
    best_size: usize,
}

impl CoverSearch<'_> {
    /// Cells no two of which share a rectangle; each needs its own.
    fn packing_bound(&self, uncovered: &Bits) -> usize {
        let mut cells: Vec<usize> = uncovered.iter().collect();
        cells.sort_by_key(|&c| (self.by_cell[c].len(), c));
        let mut used = Bits::new(self.covers.len());
        let mut count = 0;
        for c in cells {
            if self.by_cell_bits[c].and(&used).is_empty() {
                for k in &self.by_cell[c] {
                    used.insert(*k);
                }
                count += 1;
            }
        }
        count
    }

    fn run(&mut self, uncovered: Bits, chosen: &mut Vec<usize>) {
        if uncovered.is_empty() {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                self.best = Some(chosen.clone());
            }
            return;
        }
        if chosen.len() + self.packing_bound(&uncovered) >= self.best_size {
            return;
        }
        let cell = uncovered
            .iter()
            .min_by_key(|&c| (self.by_cell[c].len(), c))
            .expect("nonempty");
        let mut options: Vec<usize> = self.by_cell[cell].clone();
        options.sort_by_key(|&k| (std::cmp::Reverse(self.covers[k].and(&uncovered).count()), k));
        for k in options {
            chosen.push(k);
            self.run(uncovered.and_not(&self.covers[k]), chosen);
            chosen.pop();
        }
    }
}

/// Greedy cover: repeatedly take the row or column closure covering the
/// most uncovered ones, ties broken by the smaller rectangle in
/// lexicographic order.
pub fn rect_cover_greedy(s: &SupportMatrix) -> RectangleCover {
    let mut candidates: BTreeSet<Rectangle> = BTreeSet::new();
    for row in &s.row_bits {
        if !row.is_empty() {
            candidates.insert(to_rectangle(&rows_containing(s, row), row));
        }
    }
    for c in 0..s.cols {
        let holders: Vec<&Bits> = s.row_bits.iter().filter(|r| r.contains(c)).collect();
        if let Some((first, rest)) = holders.split_first() {
            let cols = rest.iter().fold((*first).clone(), |acc, r| acc.and(r));
            candidates.insert(to_rectangle(&rows_containing(s, &cols), &cols));
        }
    }
    let mut uncovered: BTreeSet<(usize, usize)> = s.ones().into_iter().collect();
    let mut rectangles = Vec::new();
    while !uncovered.is_empty() {
        let gain = |rect: &Rectangle| {
            rect.rows.iter().map(|r| rect.cols.iter().filter(|&&c| uncovered.contains(&(*r, c))).count()).sum::<usize>()
        };
        let best = candidates
            .iter()
            .map(|rect| (gain(rect), rect))
            .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)))
            .map(|(_, rect)| rect.clone())
            .expect("candidates cover every one");
        for &r in &best.rows {
            for &c in &best.cols {
                uncovered.remove(&(r, c));
            }
        }
        candidates.remove(&best);
        rectangles.push(best);
    }
    RectangleCover { rectangles }
}

/// Largest set of one-cells no two of which fit in a common all-ones
/// rectangle, with the cells themselves.
pub fn fooling_set(s: &SupportMatrix, budget: &Budget) -> Result<Vec<(usize, usize)>> {
    let ones = s.ones();
    if ones.len() > budget.fooling_cells {
        return Err(XcError::refused("fooling set", format!("{} one-cells", ones.len()), budget.fooling_cells));
    }
    let mut adj = vec![Bits::new(ones.len()); ones.len()];
    for (i, &(r1, c1)) in ones.iter().enumerate() {
        for (j, &(r2, c2)) in ones.iter().enumerate().skip(i + 1) {
            if !s.get(r1, c2) || !s.get(r2, c1) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Ok(bits::max_clique(&adj).into_iter().map(|k| ones[k]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub ok: bool,
    /// First problem found, if any.
    pub problem: Option<String>,
}

/// `Q, R >= 0` entrywise and `Q R = M` exactly.
pub fn verify_factorization(m: &RatMatrix, q: &RatMatrix, r: &RatMatrix) -> FactorizationReport {
    let fail = |msg: String| FactorizationReport { ok: false, problem: Some(msg) };
    if q.rows() != m.rows() || r.cols() != m.cols() || q.cols() != r.rows() {
        return fail(format!(
            "shape mismatch: M {}x{}, Q {}x{}, R {}x{}",
            m.rows(),
            m.cols(),
            q.rows(),
            q.cols(),
            r.rows(),
            r.cols()
        ));
    }
    for (name, f) in [("Q", q), ("R", r)] {
        for i in 0..f.rows() {
            for j in 0..f.cols() {
                if f.get(i, j).is_negative() {
                    return fail(format!("{name} has negative entry {} at ({i},{j})", format_rational(f.get(i, j))));
                }
            }
        }
    }
    let p = q.mul(r).expect("shapes checked");
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if p.get(i, j) != m.get(i, j) {
                return fail(format!(
                    "product differs at ({i},{j}): {} vs {}",
                    format_rational(p.get(i, j)),
                    format_rational(m.get(i, j))
                ));
            }
        }
    }
    FactorizationReport { ok: true, problem: None }
}

/// Lower and upper bounds on the nonnegative rank of a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub rank: usize,
    /// `None` when the exact search was refused by the budget.
    pub rect_cover_exact: Option<usize>,
    /// Informational; a greedy cover is not a lower bound.
    pub rect_cover_greedy: usize,
    pub fooling_set: Option<usize>,
    pub factorization_rank: Option<usize>,
    pub lower: usize,
    pub upper: usize,
}

pub fn nnr_bounds_report(m: &RatMatrix, factorization: Option<(&RatMatrix, &RatMatrix)>, budget: &Budget) -> Result<BoundsReport> {
    let s = suppmat(m)?;
    let rank = m.rank();
    let exact = match rect_cover_exact(&s, budget) {
        Ok(c) => Some(c.size()),
        Err(XcError::Refused { .. }) => None,
        Err(e) => return Err(e),
    };
    let fooling = match fooling_set(&s, budget) {
        Ok(f) => Some(f.len()),
        Err(XcError::Refused { .. }) => None,
        Err(e) => return Err(e),
    };
    let factorization_rank = match factorization {
        Some((q, r)) => {
            let rep = verify_factorization(m, q, r);
            if !rep.ok {
                return Err(XcError::verification(rep.problem.unwrap_or_default()));
            }
            Some(q.cols())
        }
        None => None,
    };
    let lower = rank.max(exact.unwrap_or(0)).max(fooling.unwrap_or(0));
    // Nonnegative matrices of rank at most two have equal nonnegative rank.
    let small_rank = (rank <= 2).then_some(rank);
    let upper = [Some(m.rows()), Some(m.cols()), factorization_rank, small_rank].into_iter().flatten().min().expect("rows present");
    if lower > upper {
        return Err(XcError::verification(format!("lower bound {lower} exceeds upper bound {upper}")));
    }
    Ok(BoundsReport {
        rank,
        rect_cover_exact: exact,
        rect_cover_greedy: rect_cover_greedy(&s).size(),
        fooling_set: fooling,
        factorization_rank,
        lower,
        upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutpoly::mstar;

    fn supp(rows: &[&[u8]]) -> SupportMatrix {
        let r: Vec<Vec<bool>> = rows.iter().map(|r| r.iter().map(|&v| v == 1).collect()).collect();
        SupportMatrix::from_rows(rows[0].len(), &r).unwrap()
    }

    fn identity(n: usize) -> SupportMatrix {
        let rows: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        SupportMatrix::from_rows(n, &rows).unwrap()
    }

    #[test]
    fn suppmat_examples() {
        let b = Budget::default();
        assert_eq!(suppmat(&mstar(1, &b).unwrap()).unwrap(), supp(&[&[1, 1], &[1, 0]]));
        assert!(suppmat(&RatMatrix::zeros(2, 3)).unwrap().ones().is_empty());
        assert!(suppmat(&RatMatrix::from_i64(&[vec![-1]])).is_err());
    }

    #[test]
    fn exact_cover_examples() {
        let b = Budget::default();
        let m1 = suppmat(&mstar(1, &b).unwrap()).unwrap();
        let c = rect_cover_exact(&m1, &b).unwrap();
        assert_eq!(c.size(), 2);
        c.validate(&m1).unwrap();
        assert_eq!(rect_cover_exact(&supp(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]), &b).unwrap().size(), 1);
        assert_eq!(rect_cover_exact(&identity(3), &b).unwrap().size(), 3);
        let sizes: Vec<usize> =
            (1..=3).map(|n| rect_cover_exact(&suppmat(&mstar(n, &b).unwrap()).unwrap(), &b).unwrap().size()).collect();
        assert_eq!(sizes, vec![2, 3, 7]);
    }

    #[test]
    fn maximal_rectangle_counts() {
        let b = Budget::default();
        let counts: Vec<usize> =
            (1..=3).map(|n| maximal_rectangles(&suppmat(&mstar(n, &b).unwrap()).unwrap(), &b).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 5, 19]);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(rect_cover_greedy(&supp(&[&[1, 1], &[1, 1]])).size(), 1);
        assert_eq!(rect_cover_greedy(&identity(4)).size(), 4);
        let s = suppmat(&mstar(2, &Budget::default()).unwrap()).unwrap();
        let g = rect_cover_greedy(&s);
        g.validate(&s).unwrap();
        assert!(g.size() >= 3);
    }

    #[test]
    fn fooling_examples() {
        let b = Budget::default();
        assert_eq!(fooling_set(&identity(3), &b).unwrap().len(), 3);
        assert_eq!(fooling_set(&supp(&[&[1, 1], &[1, 1]]), &b).unwrap().len(), 1);
        let sizes: Vec<usize> =
            (1..=3).map(|n| fooling_set(&suppmat(&mstar(n, &b).unwrap()).unwrap(), &b).unwrap().len()).collect();
        assert_eq!(sizes, vec![2, 3, 7]);
    }

    #[test]
    fn factorization_checks() {
        let m = mstar(2, &Budget::default()).unwrap();
        assert!(verify_factorization(&m, &m, &RatMatrix::identity(4)).ok);
        let mut q = m.clone();
        q.set(0, 0, crate::ratmath::int(-1));
        let rep = verify_factorization(&m, &q, &RatMatrix::identity(4));
        assert!(!rep.ok && rep.problem.unwrap().contains("negative"));
        let mut q = m.clone();
        q.set(1, 2, crate::ratmath::int(5));
        let rep = verify_factorization(&m, &q, &RatMatrix::identity(4));
        assert!(rep.problem.unwrap().contains("(1,2)"));
    }

    #[test]
    fn bounds_examples() {
        let b = Budget::default();
        let ones = RatMatrix::from_i64(&vec![vec![1; 4]; 4]);
        let r = nnr_bounds_report(&ones, None, &b).unwrap();
        assert_eq!((r.lower, r.upper), (1, 1));
        let m2 = mstar(2, &b).unwrap();
        let r = nnr_bounds_report(&m2, Some((&m2, &RatMatrix::identity(4))), &b).unwrap();
        assert_eq!(r.rect_cover_exact, Some(3));
        assert_eq!((r.lower, r.upper), (4, 4));
    }
}
