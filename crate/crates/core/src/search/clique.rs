//! Maximum clique by branch and bound with a greedy colouring bound.

use std::time::Instant;

#[derive(Clone)]
pub(crate) struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(n: usize) -> Self {
        Self { words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut b = Self::new(n);
        for i in 0..n {
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

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Self) -> Self {
        Self { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    fn and_not(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

pub(crate) struct Graph {
    n: usize,
    adj: Vec<Bitset>,
}

impl Graph {
    pub fn from_predicate(n: usize, edge: impl Fn(usize, usize) -> bool) -> Self {
        let mut adj = vec![Bitset::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if edge(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Self { n, adj }
    }
}

pub(crate) struct CliqueResult {
    pub clique: Vec<usize>,
    /// False when the deadline cut the search short.
    pub complete: bool,
}

struct Solver<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    stop_at: usize,
    deadline: Option<(Instant, f64)>,
    nodes: u64,
    aborted: bool,
}

impl Solver<'_> {
    fn colour(&self, cand: &Bitset) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncoloured.remove(v);
                q.and_not(&self.g.adj[v]);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: Bitset) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some((start, secs)) = self.deadline {
                if start.elapsed().as_secs_f64() > secs {
                    self.aborted = true;
                }
            }
        }
        let order = self.colour(&cand);
        for &(v, colour) in order.iter().rev() {
            if self.aborted || self.best.len() >= self.stop_at || current.len() + colour <= self.best.len() {
                return;
            }
            current.push(v);
            let next = cand.and(&self.g.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand.remove(v);
        }
    }
}

/// Maximum clique, stopping early once one of size `stop_at` is found.
/// Sequential and deterministic for a given graph.
pub(crate) fn max_clique(g: &Graph, stop_at: usize, deadline: Option<(Instant, f64)>) -> CliqueResult {
    let mut s = Solver { g, best: Vec::new(), stop_at, deadline, nodes: 0, aborted: false };
    if g.n > 0 {
        s.expand(&mut Vec::new(), Bitset::full(g.n));
    }
    let mut clique = s.best;
    clique.sort_unstable();
    CliqueResult { clique, complete: !s.aborted }
}
