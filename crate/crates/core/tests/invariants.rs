use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use xclab_core::acceptance::random_cnf;
use xclab_core::cutpoly::{cut_polytope, cut_vector, hypermetric_ineq, lhs_product_identity, negtype_row};
use xclab_core::graphs::complete_graph;
use xclab_core::ratmath::{format_rational, frac, parse_rational};
use xclab_core::reductions::{is_stable, make_cubic, sat_to_subsetsum, stab_polytope, suspension_reduction, ReductionWitness};
use xclab_core::{Budget, Graph, RatMatrix};

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut g = Graph::with_vertices(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

fn components(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            p[x] = find(p, p[x]);
        }
        p[x]
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u32>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(num in -10_000i64..10_000, den in 1i64..500) {
        let r = frac(num, den);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn rank_is_transpose_invariant(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-3i64..=3, 25)) {
        let data: Vec<Vec<i64>> = (0..rows).map(|r| seed[r * 5..r * 5 + cols].to_vec()).collect();
        let m = RatMatrix::from_i64(&data);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert!(m.rank() <= rows.min(cols));
    }

    #[test]
    fn hypermetric_lhs_is_product_of_part_sums(b in proptest::collection::vec(-3i64..=3, 2..=7), mask in any::<u8>()) {
        let side: Vec<usize> = (1..=b.len()).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        prop_assert!(lhs_product_identity(&b, &side).is_ok());
        let (h, _) = hypermetric_ineq(&b).unwrap();
        let g = complete_graph(b.len()).unwrap();
        let zero_based: Vec<usize> = side.iter().map(|i| i - 1).collect();
        prop_assert!(!h.slack(&cut_vector(&g, &zero_based)).is_negative());
    }

    #[test]
    fn negtype_rows_are_valid_on_cuts(n in 2usize..=6, t_mask in any::<u8>(), s_mask in any::<u8>()) {
        let t: Vec<usize> = (1..n).filter(|i| t_mask >> (i - 1) & 1 == 1).collect();
        let row = negtype_row(n, &t).unwrap();
        let side: Vec<usize> = (0..n).filter(|i| s_mask >> i & 1 == 1).collect();
        let g = complete_graph(n).unwrap();
        prop_assert!(!row.slack(&cut_vector(&g, &side)).is_negative());
    }

    #[test]
    fn cut_count_follows_components(g in small_graph(6)) {
        let p = cut_polytope(&g, &Budget::default()).unwrap();
        prop_assert_eq!(p.len(), 1usize << (g.vertex_count() - components(&g)));
        prop_assert!(p.is_zero_one());
    }

    #[test]
    fn stab_vertices_are_exactly_stable_sets(g in small_graph(6)) {
        let p = stab_polytope(&g, &Budget::default()).unwrap();
        let n = g.vertex_count();
        let brute = (0u32..1 << n)
            .filter(|m| is_stable(&g, &(0..n).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()))
            .count();
        prop_assert_eq!(p.len(), brute);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn suspension_witness_survives_json(g in small_graph(4)) {
        let budget = Budget::default();
        let w = suspension_reduction(&g, &budget).unwrap();
        let back = ReductionWitness::from_json(&w.to_json()).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert!(back.verify(&budget).unwrap().verified());
    }

    #[test]
    fn subset_sum_digits_never_carry(seed in any::<u64>(), (vars, clauses) in (3usize..=4).prop_flat_map(|v| (Just(v), 2usize..=4))) {
        let budget = Budget::default();
        let f = random_cnf(&mut ChaCha8Rng::seed_from_u64(seed), vars, clauses);
        let (inst, w) = sat_to_subsetsum(&f, &budget).unwrap();
        prop_assert!(inst.max_column_sum() <= 6);
        prop_assert!(w.verify(&budget).unwrap().verified());
    }

    #[test]
    fn make_cubic_is_three_regular(g in small_graph(4)) {
        let budget = Budget::default();
        let r = make_cubic(&g, &budget).unwrap();
        prop_assert!((0..r.graph.vertex_count()).all(|v| r.graph.degree(v) == 3));
        prop_assert!(r.witness.verify(&budget).unwrap().verified());
    }
}
