//! Exact maximum average degree.
//!
//! `mad(G)` is the largest `2|E(H)| / |V(H)|` over nonempty subgraphs `H`;
//! the maximum is always attained by an induced subgraph. Deciding whether
//! some subgraph reaches density `p/q` is a max-closure problem: select edges
//! (profit `2q` each) and pay `p` for every endpoint they pull in. The closure
//! is solved as a minimum cut, and the exact optimum is reached by iterating
//! the density of the best set found (Dinkelbach), all in integer arithmetic.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// An exact average degree `numerator / denominator`, normally `2|E(H)|` over
/// `|V(H)|` for the subgraph `H` that realises it. Comparisons are by value.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Density {
    pub numerator: u64,
    pub denominator: u64,
}

impl Density {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0, "density denominator must be positive");
        Density {
            numerator,
            denominator,
        }
    }

    /// Lowest-terms form.
    pub fn reduced(self) -> Self {
        let g = gcd(self.numerator, self.denominator);
        Density::new(self.numerator / g, self.denominator / g)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl PartialEq for Density {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Density {}

impl PartialOrd for Density {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Density {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as u128 * other.denominator as u128;
        let rhs = other.numerator as u128 * self.denominator as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        write!(f, "{}/{}", r.numerator, r.denominator)
    }
}

/// Maximum average degree of `g` (which must have at least one vertex).
pub fn mad(g: &Graph) -> Density {
    mad_with_witness(g).0
}

/// Maximum average degree together with a vertex set whose induced subgraph
/// attains it.
pub fn mad_with_witness(g: &Graph) -> (Density, Vec<usize>) {
    assert!(g.n() > 0, "mad of the empty graph is undefined");
    let mut best_set: Vec<usize> = (0..g.n()).collect();
    let mut best = Density::new(2 * g.edge_count() as u64, g.n() as u64);
    loop {
        let (gain, set) = max_weighted_closure(g, best.numerator, best.denominator);
        if gain <= 0 || set.is_empty() {
            return (best, best_set);
        }
        let found = induced_density(g, &set);
        debug_assert!(found > best);
        best = found;
        best_set = set;
    }
}

/// Whether some nonempty subgraph has average degree at least `threshold`.
pub fn has_subgraph_with_density_at_least(g: &Graph, threshold: Density) -> bool {
    g.n() > 0 && mad(g) >= threshold
}

fn induced_density(g: &Graph, set: &[usize]) -> Density {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let edges = g.edges().filter(|&(u, v)| inside[u] && inside[v]).count();
    Density::new(2 * edges as u64, set.len() as u64)
}

/// Maximises `2q|E(S)| - p|S|` over vertex sets `S`; returns the optimum and
/// the minimal optimal set.
fn max_weighted_closure(g: &Graph, p: u64, q: u64) -> (i128, Vec<usize>) {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    let m = edges.len();
    // nodes: source, sink, one per edge, one per vertex
    let source = 0;
    let sink = 1;
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + m + v;
    let mut net = FlowNetwork::new(2 + m + n);
    let infinite = u64::MAX / 4;
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_arc(source, edge_node(i), 2 * q);
        net.add_arc(edge_node(i), vertex_node(u), infinite);
        net.add_arc(edge_node(i), vertex_node(v), infinite);
    }
    for v in 0..n {
        net.add_arc(vertex_node(v), sink, p);
    }
    let cut = net.max_flow(source, sink);
    let gain = (2 * q as i128) * m as i128 - cut as i128;
    let reach = net.reachable_from(source);
    let set = (0..n).filter(|&v| reach[vertex_node(v)]).collect();
    (gain, set)
}

/// Dinic's algorithm on an adjacency-list residual network.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    fn levels(&self, source: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.head.len()];
        level[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && level[v].is_none() {
                    level[v] = Some(level[u].unwrap() + 1);
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn reachable_from(&self, source: usize) -> Vec<bool> {
        self.levels(source).into_iter().map(|l| l.is_some()).collect()
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let mut total = 0;
        loop {
            let level = self.levels(source);
            if level[sink].is_none() {
                return total;
            }
            let mut next_arc = vec![0usize; self.head.len()];
            loop {
                let pushed = self.augment(source, sink, u64::MAX, &level, &mut next_arc);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn augment(
        &mut self,
        u: usize,
        sink: usize,
        limit: u64,
        level: &[Option<usize>],
        next_arc: &mut [usize],
    ) -> u64 {
        if u == sink {
            return limit;
        }
        while next_arc[u] < self.head[u].len() {
            let a = self.head[u][next_arc[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && level[v] == level[u].map(|l| l + 1) {
                let pushed = self.augment(v, sink, limit.min(self.cap[a]), level, next_arc);
                if pushed > 0 {
                    self.cap[a] -= pushed;
                    self.cap[a ^ 1] += pushed;
                    return pushed;
                }
            }
            next_arc[u] += 1;
        }
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_mad(g: &Graph) -> Density {
        let n = g.n();
        let mut best = Density::new(0, 1);
        for mask in 1u32..(1 << n) {
            let set: Vec<_> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            best = best.max(induced_density(g, &set));
        }
        best
    }

    #[test]
    fn small_examples() {
        let tree = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(mad(&tree), Density::new(8, 5));
        assert_eq!(mad(&Graph::cycle(6).unwrap()), Density::new(2, 1));
        let c4_pendant = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert_eq!(mad(&c4_pendant), brute_force_mad(&c4_pendant));
        assert_eq!(mad(&c4_pendant), Density::new(2, 1));
        assert_eq!(mad(&Graph::empty(3)), Density::new(0, 1));
        // K4 plus a long tail: the dense part wins.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend((3..9).map(|i| (i, i + 1)));
        let g = Graph::new(10, &edges).unwrap();
        let (d, set) = mad_with_witness(&g);
        assert_eq!(d, Density::new(3, 1));
        assert_eq!(set, vec![0, 1, 2, 3]);
    }

    #[test]
    fn density_ordering_and_display() {
        assert!(Density::new(12, 5) > Density::new(2, 1));
        assert_eq!(Density::new(24, 10), Density::new(12, 5));
        assert_eq!(Density::new(24, 10).to_string(), "12/5");
        assert_eq!(Density::new(0, 7).to_string(), "0/1");
    }

    #[test]
    fn threshold_decision() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(has_subgraph_with_density_at_least(&c5, Density::new(2, 1)));
        assert!(!has_subgraph_with_density_at_least(&c5, Density::new(12, 5)));
    }
}
