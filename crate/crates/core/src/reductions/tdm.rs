//! 3SAT to 3-dimensional matching via ring gadgets.

use num_traits::{One, Zero};

use super::cnf::{literal_true, point_assignment, sat_polytope, Cnf3};
use super::witness::{ReductionWitness, TargetPolytope};
use crate::budget::Budget;
use crate::error::Result;
use crate::graphs::Hypergraph3;
use crate::polyhedra::{AffineMap, FaceSpec, LinIneq, VPolytope};
use crate::ratmath::{int, Rational};

/// Ring of one variable. Triple and vertex fields are indices into the
/// hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableGadget3DM {
    pub variable: usize,
    pub occurrences: usize,
    pub light: Vec<usize>,
    pub dark: Vec<usize>,
    pub tips: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct TdmReduction {
    pub hypergraph: Hypergraph3,
    pub gadgets: Vec<VariableGadget3DM>,
    /// Triple indices of each clause, one per literal.
    pub clause_triples: Vec<Vec<usize>>,
    pub witness: ReductionWitness,
}

/// Light triple `i` is `(t_{2i-1}, u_{2i-1}, u_{2i})`, dark triple `i` is
/// `(t_{2i}, u_{2i}, u_{2i+1})` around the ring. The `r`-th occurrence of a
/// variable takes tip `t_{2r}` when positive and `t_{2r-1}` when negated,
/// so a true variable (light triples) frees its positive tips.
pub fn sat_to_3dm(f: &Cnf3, budget: &Budget) -> Result<TdmReduction> {
    f.require_all_variables_used()?;
    let occ = f.occurrences();
    let mut labels = Vec::new();
    let mut ring_u = Vec::new();
    let mut ring_t = Vec::new();
    for (x, name) in f.var_names().iter().enumerate() {
        let len = 2 * occ[x];
        let base = labels.len();
        labels.extend((1..=len).map(|i| format!("{name}u{i}")));
        labels.extend((1..=len).map(|i| format!("{name}t{i}")));
        ring_u.push((base..base + len).collect::<Vec<_>>());
        ring_t.push((base + len..base + 2 * len).collect::<Vec<_>>());
    }
    let mut private = Vec::new();
    for j in 1..=f.clauses().len() {
        private.push([labels.len(), labels.len() + 1]);
        labels.push(format!("c{j}p1"));
        labels.push(format!("c{j}p2"));
    }

    let mut h = Hypergraph3::new(labels);
    let mut coord_names = Vec::new();
    let mut gadgets = Vec::new();
    for (x, name) in f.var_names().iter().enumerate() {
        let (u, t, k) = (&ring_u[x], &ring_t[x], occ[x]);
        let mut g = VariableGadget3DM { variable: x + 1, occurrences: k, light: vec![], dark: vec![], tips: t.clone() };
        for i in 0..k {
            g.light.push(h.add_triple([t[2 * i], u[2 * i], u[2 * i + 1]])?);
            coord_names.push(format!("{name}L{}", i + 1));
            g.dark.push(h.add_triple([t[2 * i + 1], u[2 * i + 1], u[(2 * i + 2) % (2 * k)]])?);
            coord_names.push(format!("{name}D{}", i + 1));
        }
        gadgets.push(g);
    }
    let mut seen = vec![0usize; f.var_count()];
    let mut clause_triples = Vec::new();
    for (j, c) in f.clauses().iter().enumerate() {
        let mut ids = Vec::new();
        for &l in c {
            let x = l.unsigned_abs() as usize - 1;
            let r = seen[x];
            seen[x] += 1;
            let tip = ring_t[x][if l > 0 { 2 * r + 1 } else { 2 * r }];
            ids.push(h.add_triple([tip, private[j][0], private[j][1]])?);
            coord_names.push(format!("c{}:{l}", j + 1));
        }
        clause_triples.push(ids);
    }

    let e = h.triples().len();
    let mut equalities = Vec::new();
    for g in &gadgets {
        let mut a = vec![int(0); e];
        for &k in g.light.iter().chain(&g.dark) {
            a[k] = int(1);
        }
        equalities.push(LinIneq::new(a, int(g.occurrences as i64)));
    }
    for ids in &clause_triples {
        let mut a = vec![int(0); e];
        for &k in ids {
            a[k] = int(1);
        }
        equalities.push(LinIneq::new(a, int(1)));
    }

    let source = sat_polytope(f, budget)?;
    let target = VPolytope::new(coord_names.clone(), tdm_points(&h, budget)?)?.sorted();
    let keep: Vec<usize> = gadgets.iter().map(|g| g.light[0]).collect();
    let mut projection = AffineMap::coordinate_projection(&coord_names, &keep)?;
    projection.out_names = f.var_names().to_vec();
    let lifts = source
        .points()
        .iter()
        .map(|x| {
            let a = point_assignment(x);
            let mut y = vec![Rational::zero(); e];
            for g in &gadgets {
                let chosen = if a >> (g.variable - 1) & 1 == 1 { &g.light } else { &g.dark };
                for &k in chosen {
                    y[k] = Rational::one();
                }
            }
            for (c, ids) in f.clauses().iter().zip(&clause_triples) {
                if let Some(p) = c.iter().position(|&l| literal_true(l, a)) {
                    y[ids[p]] = Rational::one();
                }
            }
            y
        })
        .collect();
    let witness = ReductionWitness {
        name: "sat-to-3dm".into(),
        source,
        target: TargetPolytope::Explicit(target),
        face: FaceSpec::new(equalities),
        projection,
        lifts,
    };
    Ok(TdmReduction { hypergraph: h, gadgets, clause_triples, witness })
}

/// Indicator vectors of all matchings (pairwise disjoint triple sets), the
/// empty matching included, in lexicographic order.
pub fn tdm_polytope(h: &Hypergraph3, budget: &Budget) -> Result<VPolytope> {
    let names = (0..h.triples().len()).map(|k| h.triple_name(k)).collect();
    Ok(VPolytope::new(names, tdm_points(h, budget)?)?.sorted())
}

fn tdm_points(h: &Hypergraph3, budget: &Budget) -> Result<Vec<Vec<Rational>>> {
    let e = h.triples().len();
    budget.check_subsets("3d-matching enumeration", e)?;
    let mut out = Vec::new();
    let mut used = vec![false; h.vertex_count()];
    let mut chosen = vec![false; e];
    extend_matching(h, 0, &mut used, &mut chosen, &mut out);
    Ok(out)
}

fn extend_matching(h: &Hypergraph3, k: usize, used: &mut [bool], chosen: &mut [bool], out: &mut Vec<Vec<Rational>>) {
    if k == chosen.len() {
        out.push(chosen.iter().map(|&c| if c { Rational::one() } else { Rational::zero() }).collect());
        return;
    }
    extend_matching(h, k + 1, used, chosen, out);
    let t = h.triples()[k];
    if t.iter().all(|&v| !used[v]) {
        t.iter().for_each(|&v| used[v] = true);
        chosen[k] = true;
        extend_matching(h, k + 1, used, chosen, out);
        chosen[k] = false;
        t.iter().for_each(|&v| used[v] = false);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::face_vertices;

    fn hyper(n: usize, triples: &[[usize; 3]]) -> Hypergraph3 {
        let mut h = Hypergraph3::new((1..=n).map(|i| i.to_string()).collect());
        for &t in triples {
            h.add_triple(t).unwrap();
        }
        h
    }

    #[test]
    fn matchings() {
        let b = Budget::default();
        assert_eq!(tdm_polytope(&hyper(3, &[[0, 1, 2]]), &b).unwrap().len(), 2);
        assert_eq!(tdm_polytope(&hyper(6, &[[0, 1, 2], [3, 4, 5]]), &b).unwrap().len(), 4);
        assert_eq!(tdm_polytope(&hyper(5, &[[0, 1, 2], [2, 3, 4]]), &b).unwrap().len(), 3);
    }

    #[test]
    fn single_clause() {
        let b = Budget::default();
        let r = sat_to_3dm(&Cnf3::new(1, vec![vec![1]]).unwrap(), &b).unwrap();
        assert_eq!(r.gadgets[0].light.len(), 1);
        assert_eq!(r.hypergraph.triples().len(), 3);
        assert!(r.witness.verify(&b).unwrap().verified());
    }

    #[test]
    fn contradiction_has_empty_face() {
        let b = Budget::default();
        let r = sat_to_3dm(&Cnf3::new(1, vec![vec![1], vec![-1]]).unwrap(), &b).unwrap();
        let TargetPolytope::Explicit(t) = &r.witness.target else { panic!() };
        assert!(face_vertices(t, &r.witness.face).unwrap().is_empty());
        assert!(r.witness.verify(&b).unwrap().verified());
    }

    #[test]
    fn two_clauses() {
        let b = Budget::default();
        let f = Cnf3::new(3, vec![vec![1, -2, 3], vec![-1, 2, -3]]).unwrap();
        assert!(sat_to_3dm(&f, &b).unwrap().witness.verify(&b).unwrap().verified());
    }
}
