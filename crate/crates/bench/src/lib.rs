//! Fixed inputs shared by the benchmarks.

use xclab_core::reductions::Cnf3;
use xclab_core::Graph;

/// `(x1 | ~x2 | x3)(~x1 | x2 | x3)(x1 | x2 | ~x3)(~x1 | ~x2 | ~x3)`.
pub fn example_cnf() -> Cnf3 {
    Cnf3::new(3, vec![vec![1, -2, 3], vec![-1, 2, 3], vec![1, 2, -3], vec![-1, -2, -3]]).expect("valid formula")
}

/// Cycle `C_n` with labels `1..=n`.
pub fn cycle(n: usize) -> Graph {
    xclab_core::graphs::cycle_graph(n).expect("n >= 3")
}

/// Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::with_vertices(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, 5 + i).unwrap();
    }
    g
}
