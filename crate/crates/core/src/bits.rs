//! Fixed-width bitsets for the branch-and-bound searches.

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits { words: vec![0; len.div_ceil(64).max(1)] }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn and_not(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

/// Size and members of a maximum clique, `adj[v]` being the neighbourhood of
/// `v`. Plain Carraghan–Pardalos style branching with a colour-free size bound.
pub fn max_clique(adj: &[Bits]) -> Vec<usize> {
    fn grow(adj: &[Bits], cand: Bits, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cand.is_empty() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            return;
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            if cur.len() + cand.count() <= best.len() {
                return;
            }
            cand.remove(v);
            cur.push(v);
            grow(adj, cand.and(&adj[v]), cur, best);
            cur.pop();
        }
    }
    let mut best = Vec::new();
    grow(adj, Bits::full(adj.len()), &mut Vec::new(), &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let mut a = Bits::new(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(a.count(), 3);
        let mut b = Bits::new(130);
        b.insert(64);
        assert!(b.is_subset(&a));
        assert_eq!(a.and_not(&b).iter().collect::<Vec<_>>(), vec![0, 129]);
        assert_eq!(a.first(), Some(0));
        assert!(Bits::new(5).is_empty());
    }

    #[test]
    fn clique_of_two_triangles() {
        // triangle 0-1-2 and edge 3-4
        let edges = [(0, 1), (0, 2), (1, 2), (3, 4), (2, 3)];
        let mut adj = vec![Bits::new(5); 5];
        for (u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        assert_eq!(max_clique(&adj), vec![0, 1, 2]);
    }
}
