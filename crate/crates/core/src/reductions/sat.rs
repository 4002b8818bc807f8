//! The formula family `Φ_m` whose satisfying assignments project onto the
//! cuts of `K_m`.

use super::cnf::{assignment_point, sat_polytope, Cnf3};
use super::witness::{ReductionWitness, TargetPolytope};
use crate::budget::Budget;
use crate::cutpoly::cut_polytope;
use crate::error::{Result, XcError};
use crate::graphs::complete_graph;
use crate::polyhedra::{AffineMap, FaceSpec};
use crate::ratmath::Rational;

/// Variables `x_ii` (indices `1..=m`) then `x_ij` for `i < j` in
/// lexicographic order; four clauses per pair force
/// `x_ij = x_ii xor x_jj`.
pub fn phi_m(m: usize, budget: &Budget) -> Result<(Cnf3, ReductionWitness)> {
    if m < 2 {
        return Err(XcError::input("Φ_m needs m >= 2"));
    }
    let sep = if m >= 10 { "_" } else { "" };
    let mut names: Vec<String> = (1..=m).map(|i| format!("x{i}{sep}{i}")).collect();
    let mut pair_var = vec![vec![0i64; m + 1]; m + 1];
    for i in 1..=m {
        for j in i + 1..=m {
            names.push(format!("x{i}{sep}{j}"));
            pair_var[i][j] = names.len() as i64;
        }
    }
    let mut clauses = Vec::with_capacity(4 * m * (m - 1) / 2);
    for i in 1..=m {
        for j in i + 1..=m {
            let (a, b, c) = (i as i64, j as i64, pair_var[i][j]);
            clauses.push(vec![a, b, -c]);
            clauses.push(vec![a, -b, c]);
            clauses.push(vec![-a, b, c]);
            clauses.push(vec![-a, -b, -c]);
        }
    }
    let f = Cnf3::with_names(names, clauses)?;

    let kn = complete_graph(m)?;
    let source = cut_polytope(&kn, budget)?;
    let target = sat_polytope(&f, budget)?;
    let keep: Vec<usize> = (m..f.var_count()).collect();
    let mut projection = AffineMap::coordinate_projection(f.var_names(), &keep)?;
    projection.out_names = source.coord_names().to_vec();

    // The cut's shore avoids the anchor m, so x_ii = [i in S].
    let lifts = (0u64..1 << (m - 1))
        .map(|mask| {
            let mut assignment = mask;
            for i in 1..=m {
                for j in i + 1..=m {
                    let bit = ((mask >> (i - 1)) ^ (mask >> (j - 1))) & 1;
                    assignment |= bit << (pair_var[i][j] - 1);
                }
            }
            assignment_point(f.var_count(), assignment)
        })
        .collect();
    let witness = ReductionWitness {
        name: format!("phi-m m={m}"),
        source,
        target: TargetPolytope::Explicit(target),
        face: FaceSpec::default(),
        projection,
        lifts,
    };
    Ok((f, witness))
}

/// Number of satisfying assignments of `Φ_m` above each cut; the reduction
/// has exactly two (a shore and its complement).
pub fn phi_m_lift_counts(w: &ReductionWitness) -> Result<Vec<usize>> {
    let TargetPolytope::Explicit(target) = &w.target else {
        return Err(XcError::input("Φ_m witness has an explicit target"));
    };
    let images: Vec<Vec<Rational>> = target.points().iter().map(|x| w.projection.apply(x)).collect::<Result<_>>()?;
    Ok(w.source.points().iter().map(|s| images.iter().filter(|x| *x == s).count()).collect())
}
