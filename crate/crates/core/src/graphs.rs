//! Simple labelled graphs, 3-uniform hypergraphs, and the handful of graph
//! operations the polytope constructions need: named families, minors,
//! suspension, a fixed convex-position drawing, and maximum clique.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::bits::{self, Bits};
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::ratmath::{frac, Rational};

/// Simple undirected graph. Vertices are identified by position in the
/// declared label order; edges are reported in lexicographic index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(XcError::input(format!("vertex label {l:?} must be non-empty without whitespace")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(XcError::input(format!("duplicate vertex label {l:?}")));
            }
        }
        let n = labels.len();
        Ok(Graph { labels, index, adj: vec![BTreeSet::new(); n] })
    }

    /// Vertices labelled `1..=n`.
    pub fn with_vertices(n: usize) -> Self {
        Graph::new((1..=n).map(|i| i.to_string())).expect("numeric labels are distinct")
    }

    pub fn from_edges<S: Into<String>>(labels: impl IntoIterator<Item = S>, edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = Graph::new(labels)?;
        for &(u, v) in edges {
            g.add_edge_by_label(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| XcError::input(format!("no vertex labelled {label:?}")))
    }

    /// Adds `uv`; adding an existing edge is a no-op, loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(XcError::input(format!("edge ({u},{v}) out of range for {n} vertices")));
        }
        if u == v {
            return Err(XcError::input(format!("loop at vertex {:?}", self.labels[u])));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, u: &str, v: &str) -> Result<()> {
        let (a, b) = (self.require(u)?, self.require(v)?);
        self.add_edge(a, b)
    }

    /// Appends a vertex and returns its index.
    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(XcError::input(format!("vertex label {label:?} must be non-empty without whitespace")));
        }
        if self.index.contains_key(&label) {
            return Err(XcError::input(format!("duplicate vertex label {label:?}")));
        }
        self.index.insert(label.clone(), self.labels.len());
        self.labels.push(label);
        self.adj.push(BTreeSet::new());
        Ok(self.labels.len() - 1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    /// Position of edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self) -> HashMap<(usize, usize), usize> {
        self.edges().into_iter().enumerate().map(|(k, e)| (e, k)).collect()
    }

    pub fn edge_name(&self, (u, v): (usize, usize)) -> String {
        format!("{}-{}", self.labels[u], self.labels[v])
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|ns| ns.len() + 1 == n)
    }

    pub(crate) fn adjacency_bits(&self) -> Vec<Bits> {
        let n = self.vertex_count();
        self.adj
            .iter()
            .map(|ns| {
                let mut b = Bits::new(n);
                ns.iter().for_each(|&v| b.insert(v));
                b
            })
            .collect()
    }

    /// A label not yet in use: `base`, else `base'`, `base''`, ...
    pub fn fresh_label(&self, base: &str) -> String {
        let mut l = base.to_string();
        while self.index.contains_key(&l) {
            l.push('\'');
        }
        l
    }

    /// Copy without vertex `v`; the remaining vertices keep their order.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let labels = self.labels.iter().enumerate().filter(|&(i, _)| i != v).map(|(_, l)| l.clone());
        let mut g = Graph::new(labels).expect("labels already distinct");
        let shift = |x: usize| if x > v { x - 1 } else { x };
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(shift(a), shift(b)).expect("edge of a simple graph");
            }
        }
        g
    }

    /// Graph file: `n m`, then `n` labels, then `m` lines `labelU labelV`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = content_lines(text);
        Self::parse_lines(&mut lines, true)
    }

    pub(crate) fn parse_lines<'a>(lines: &mut impl Iterator<Item = &'a str>, exhaust: bool) -> Result<Graph> {
        let header = lines.next().ok_or_else(|| XcError::input("empty graph file"))?;
        let (n, m) = two_counts(header)?;
        let mut labels = Vec::with_capacity(n);
        for i in 0..n {
            labels.push(lines.next().ok_or_else(|| XcError::input(format!("missing label {i}")))?.to_string());
        }
        let mut g = Graph::new(labels)?;
        for i in 0..m {
            let line = lines.next().ok_or_else(|| XcError::input(format!("missing edge {i}")))?;
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = parts[..] else {
                return Err(XcError::input(format!("bad edge line {line:?}")));
            };
            let (a, b) = (g.require(u)?, g.require(v)?);
            if g.has_edge(a, b) {
                return Err(XcError::input(format!("parallel edge {u} {v}")));
            }
            g.add_edge(a, b)?;
        }
        if exhaust && lines.next().is_some() {
            return Err(XcError::input("trailing data after graph edges"));
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for l in &self.labels {
            s.push_str(l);
            s.push('\n');
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{} {}", self.labels[u], self.labels[v]);
        }
        s
    }
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn two_counts(header: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = header.split_whitespace().collect();
    let bad = || XcError::input(format!("bad header {header:?}"));
    let [a, b] = parts[..] else { return Err(bad()) };
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(XcError::input("complete graph needs n >= 1"));
    }
    let mut g = Graph::with_vertices(n);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// `K_{1,n,n}` with parts `{r}`, `{a1..an}`, `{b1..bn}`.
pub fn complete_tripartite_1nn(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(XcError::input("K_{1,n,n} needs n >= 1"));
    }
    let labels = std::iter::once("r".to_string())
        .chain((1..=n).map(|i| format!("a{i}")))
        .chain((1..=n).map(|i| format!("b{i}")));
    let mut g = Graph::new(labels)?;
    for i in 1..=2 * n {
        g.add_edge(0, i)?;
    }
    for i in 1..=n {
        for j in n + 1..=2 * n {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(XcError::input("cycle needs n >= 3"));
    }
    let mut g = Graph::with_vertices(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
    }
    Ok(g)
}

pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(XcError::input("path needs n >= 1"));
    }
    let mut g = Graph::with_vertices(n);
    for i in 1..n {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

pub fn empty_graph(n: usize) -> Graph {
    Graph::with_vertices(n)
}

/// `K_{1,k}` with centre `c` declared first and leaves `1..=k`.
pub fn star_graph(k: usize) -> Result<Graph> {
    let labels = std::iter::once("c".to_string()).chain((1..=k).map(|i| i.to_string()));
    let mut g = Graph::new(labels)?;
    for i in 1..=k {
        g.add_edge(0, i)?;
    }
    Ok(g)
}

/// Adds an apex labelled `0` (primed if taken) after the existing vertices.
pub fn suspension(g: &Graph) -> Graph {
    let mut s = g.clone();
    let apex = s.add_vertex(g.fresh_label("0")).expect("fresh label");
    for v in 0..g.vertex_count() {
        s.add_edge(apex, v).expect("apex edges are simple");
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorOp {
    DeleteEdge(String, String),
    DeleteVertex(String),
    /// Merge the second endpoint into the first; the merged vertex keeps
    /// the first label and position.
    ContractEdge(String, String),
}

pub fn minor_step(g: &Graph, op: &MinorOp) -> Result<Graph> {
    match op {
        MinorOp::DeleteEdge(u, v) => {
            let (a, b) = (g.require(u)?, g.require(v)?);
            if !g.has_edge(a, b) {
                return Err(XcError::input(format!("no edge {u}-{v}")));
            }
            let mut h = g.clone();
            h.adj[a].remove(&b);
            h.adj[b].remove(&a);
            Ok(h)
        }
        MinorOp::DeleteVertex(v) => Ok(g.without_vertex(g.require(v)?)),
        MinorOp::ContractEdge(u, v) => {
            let (a, b) = (g.require(u)?, g.require(v)?);
            if !g.has_edge(a, b) {
                return Err(XcError::input(format!("no edge {u}-{v}")));
            }
            let mut h = g.clone();
            let moved: Vec<usize> = g.neighbors(b).filter(|&w| w != a).collect();
            for w in moved {
                h.adj[a].insert(w);
                h.adj[w].insert(a);
            }
            Ok(h.without_vertex(b))
        }
    }
}

/// A crossing of two chords in the convex-position drawing. Edges are index
/// pairs with `edge_a < edge_b`; the orders count crossings along each edge
/// starting from its smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edge_a: (usize, usize),
    pub edge_b: (usize, usize),
    pub order_on_a: usize,
    pub order_on_b: usize,
}

/// Rational point on the unit circle; angle grows with `i`.
fn circle_point(i: usize) -> (Rational, Rational) {
    let t = i as i64;
    let d = 1 + t * t;
    (frac(1 - t * t, d), frac(2 * t, d))
}

type Edge = (usize, usize);

fn cross2(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn sub2(a: &(Rational, Rational), b: &(Rational, Rational)) -> (Rational, Rational) {
    (&a.0 - &b.0, &a.1 - &b.1)
}

/// Vertices on a circle in declared order, edges as straight chords; every
/// pair of crossing chords, ordered by `(edge_a, edge_b)`.
pub fn circular_crossings(g: &Graph) -> Vec<Crossing> {
    let edges = g.edges();
    let pts: Vec<_> = (0..g.vertex_count()).map(circle_point).collect();
    let mut pairs = Vec::new();
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[x + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                pairs.push(((a, b), (c, d)));
            }
        }
    }
    // Parameter of the crossing point along chord e, measured from e.0.
    let param = |e: Edge, f: Edge| -> Rational {
        let r = sub2(&pts[e.1], &pts[e.0]);
        let s = sub2(&pts[f.1], &pts[f.0]);
        cross2(&sub2(&pts[f.0], &pts[e.0]), &s) / cross2(&r, &s)
    };
    let mut along: HashMap<Edge, Vec<(Rational, Edge)>> = HashMap::new();
    for &(e, f) in &pairs {
        along.entry(e).or_default().push((param(e, f), f));
        along.entry(f).or_default().push((param(f, e), e));
    }
    let mut order: HashMap<(Edge, Edge), usize> = HashMap::new();
    for (e, mut list) in along {
        list.sort();
        for (k, (_, f)) in list.into_iter().enumerate() {
            order.insert((e, f), k);
        }
    }
    pairs
        .into_iter()
        .map(|(e, f)| Crossing { edge_a: e, edge_b: f, order_on_a: order[&(e, f)], order_on_b: order[&(f, e)] })
        .collect()
}

pub fn max_clique(g: &Graph, budget: &Budget) -> Result<usize> {
    if g.vertex_count() > budget.clique_vertices {
        return Err(XcError::refused("max_clique", format!("{} vertices", g.vertex_count()), budget.clique_vertices));
    }
    Ok(bits::max_clique(&g.adjacency_bits()).len())
}

/// 3-uniform hypergraph; each triple is stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    labels: Vec<String>,
    triples: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(labels: Vec<String>) -> Self {
        Hypergraph3 { labels, triples: Vec::new() }
    }

    pub fn add_triple(&mut self, t: [usize; 3]) -> Result<usize> {
        let n = self.labels.len();
        let mut s = t;
        s.sort_unstable();
        if s[2] >= n || s[0] == s[1] || s[1] == s[2] {
            return Err(XcError::input(format!("bad triple {t:?} for {n} vertices")));
        }
        self.triples.push(s);
        Ok(self.triples.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn triple_name(&self, k: usize) -> String {
        let [a, b, c] = self.triples[k];
        format!("{}|{}|{}", self.labels[a], self.labels[b], self.labels[c])
    }

    /// `n t`, then `t` lines of three 1-based vertex numbers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (n, t) = two_counts(lines.next().ok_or_else(|| XcError::input("empty hypergraph file"))?)?;
        let mut h = Hypergraph3::new((1..=n).map(|i| i.to_string()).collect());
        for _ in 0..t {
            let line = lines.next().ok_or_else(|| XcError::input("missing triple"))?;
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|s| s.parse::<usize>().map_err(|_| XcError::input(format!("bad triple line {line:?}"))))
                .collect::<Result<_>>()?;
            let [a, b, c] = nums[..] else {
                return Err(XcError::input(format!("bad triple line {line:?}")));
            };
            if a == 0 || b == 0 || c == 0 {
                return Err(XcError::input("hypergraph vertices are numbered from 1"));
            }
            h.add_triple([a - 1, b - 1, c - 1])?;
        }
        Ok(h)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count(), self.triples.len());
        for [a, b, c] in &self.triples {
            let _ = writeln!(s, "{} {} {}", a + 1, b + 1, c + 1);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(complete_graph(3).unwrap().edge_count(), 3);
        let k1 = complete_graph(1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert_eq!(complete_graph(5).unwrap().edge_count(), 10);
        let t1 = complete_tripartite_1nn(1).unwrap();
        assert!(t1.is_complete() && t1.vertex_count() == 3);
        let t2 = complete_tripartite_1nn(2).unwrap();
        assert_eq!((t2.vertex_count(), t2.edge_count()), (5, 8));
        let t3 = complete_tripartite_1nn(3).unwrap();
        assert_eq!((t3.vertex_count(), t3.edge_count()), (7, 15));
    }

    #[test]
    fn suspension_examples() {
        let e = Graph::from_edges(["1", "2"], &[("1", "2")]).unwrap();
        assert!(suspension(&e).is_complete());
        let w = suspension(&cycle_graph(4).unwrap());
        assert_eq!((w.vertex_count(), w.edge_count()), (5, 8));
        let s = suspension(&empty_graph(3));
        assert_eq!(s.edge_count(), 3);
        assert_eq!(s.label(3), "0");
        assert_eq!(s.degree(3), 3);
        let named = Graph::new(["0", "1"]).unwrap();
        assert_eq!(suspension(&named).label(2), "0'");
    }

    #[test]
    fn minor_examples() {
        let k3 = complete_graph(3).unwrap();
        let h = minor_step(&k3, &MinorOp::ContractEdge("1".into(), "2".into())).unwrap();
        assert!(h.is_complete() && h.vertex_count() == 2);
        let k4 = complete_graph(4).unwrap();
        let h = minor_step(&k4, &MinorOp::DeleteEdge("1".into(), "4".into())).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (4, 5));
        let h = minor_step(&k4, &MinorOp::DeleteVertex("2".into())).unwrap();
        assert!(h.is_complete() && h.vertex_count() == 3);
        assert_eq!(h.labels(), ["1", "3", "4"]);
        assert!(minor_step(&k4, &MinorOp::DeleteVertex("9".into())).is_err());
        let p = path_graph(3).unwrap();
        assert!(minor_step(&p, &MinorOp::ContractEdge("1".into(), "3".into())).is_err());
    }

    #[test]
    fn tripartite_matching_contraction() {
        for n in 1..=4 {
            let mut g = complete_tripartite_1nn(n).unwrap();
            for i in 1..=n {
                g = minor_step(&g, &MinorOp::ContractEdge(format!("a{i}"), format!("b{i}"))).unwrap();
            }
            assert_eq!(g.vertex_count(), n + 1);
            assert!(g.is_complete());
        }
    }

    #[test]
    fn crossings_examples() {
        assert!(circular_crossings(&path_graph(3).unwrap()).is_empty());
        let k4 = circular_crossings(&complete_graph(4).unwrap());
        assert_eq!(k4, vec![Crossing { edge_a: (0, 2), edge_b: (1, 3), order_on_a: 0, order_on_b: 0 }]);
        assert_eq!(circular_crossings(&complete_graph(5).unwrap()).len(), 5);
    }

    #[test]
    fn crossing_orders_are_consistent() {
        let k6 = complete_graph(6).unwrap();
        let cr = circular_crossings(&k6);
        assert_eq!(cr.len(), 15);
        // every edge's orders form 0..count
        let mut per: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for c in &cr {
            per.entry(c.edge_a).or_default().push(c.order_on_a);
            per.entry(c.edge_b).or_default().push(c.order_on_b);
        }
        for (_, mut v) in per {
            v.sort();
            assert_eq!(v, (0..v.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn clique_examples() {
        let b = Budget::default();
        assert_eq!(max_clique(&complete_graph(5).unwrap(), &b).unwrap(), 5);
        assert_eq!(max_clique(&cycle_graph(5).unwrap(), &b).unwrap(), 2);
        assert_eq!(max_clique(&empty_graph(4), &b).unwrap(), 1);
        assert!(matches!(max_clique(&empty_graph(21), &b), Err(XcError::Refused { .. })));
    }

    #[test]
    fn graph_text_round_trip() {
        let g = complete_tripartite_1nn(2).unwrap();
        let back = Graph::parse(&g.to_text()).unwrap();
        assert_eq!(back, g);
        assert!(Graph::parse("2 1\na\nb\na a\n").is_err());
        assert!(Graph::parse("2 1\na\nb\na c\n").is_err());
        assert!(Graph::parse("2 2\na\nb\na b\nb a\n").is_err());
    }

    #[test]
    fn hypergraph_parse() {
        let h = Hypergraph3::parse("4 2\n1 2 3\n4 3 2\n").unwrap();
        assert_eq!(h.triples(), &[[0, 1, 2], [1, 2, 3]]);
        assert!(Hypergraph3::parse("3 1\n1 1 2\n").is_err());
        assert_eq!(Hypergraph3::parse(&h.to_text()).unwrap(), h);
    }
}
