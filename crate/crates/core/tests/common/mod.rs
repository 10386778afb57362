//! Brute-force reference implementations used as independent oracles.
//! Nothing here calls the library's search, verifier or flow code.

#![allow(dead_code)]

use ttone::Graph;

pub const INF: usize = usize::MAX;

/// All-pairs distances by Floyd–Warshall; `INF` across components.
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn shared(a: &[u32], b: &[u32]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// Checks the t-tone condition on every assigned pair.
pub fn brute_valid(dist: &[Vec<usize>], labels: &[Option<Vec<u32>>]) -> bool {
    let n = labels.len();
    for u in 0..n {
        for v in u + 1..n {
            if let (Some(a), Some(b)) = (&labels[u], &labels[v]) {
                let d = dist[u][v];
                if d != INF && shared(a, b) >= d {
                    return false;
                }
            }
        }
    }
    true
}

/// Every `t`-subset of `1..=k`, lexicographically.
pub fn all_labels(k: u32, t: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, k: u32, t: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for c in start..=k {
            cur.push(c);
            rec(c + 1, k, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, k, t, &mut Vec::new(), &mut out);
    out
}

/// Plain backtracking over all labels in vertex order 0..n, no symmetry
/// breaking. Only for tiny instances.
pub fn brute_colorable(g: &Graph, t: usize, k: u32) -> bool {
    let dist = floyd(g);
    let labels = all_labels(k, t);
    let mut assigned: Vec<Option<Vec<u32>>> = vec![None; g.n()];
    fn rec(v: usize, dist: &[Vec<usize>], labels: &[Vec<u32>], assigned: &mut Vec<Option<Vec<u32>>>) -> bool {
        if v == assigned.len() {
            return true;
        }
        for l in labels {
            let ok = (0..v).all(|u| {
                let d = dist[u][v];
                d == INF || shared(assigned[u].as_ref().unwrap(), l) < d
            });
            if ok {
                assigned[v] = Some(l.clone());
                if rec(v + 1, dist, labels, assigned) {
                    return true;
                }
            }
        }
        assigned[v] = None;
        false
    }
    rec(0, &dist, &labels, &mut assigned)
}

pub fn brute_tau(g: &Graph, t: usize) -> u32 {
    (t as u32..).find(|&k| brute_colorable(g, t, k)).unwrap()
}

/// Maximum over nonempty vertex subsets of `2|E|/|V|`, as a reduced pair.
pub fn brute_mad(g: &Graph) -> (u64, u64) {
    let n = g.n();
    let mut best = (0u64, 1u64);
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as u64;
        let e = g.edges().filter(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count() as u64;
        if 2 * e * best.1 > best.0 * size {
            best = (2 * e, size);
        }
    }
    let g = gcd(best.0, best.1);
    (best.0 / g, best.1 / g)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Canonical form: lexicographically least sorted edge list over all vertex
/// permutations.
pub fn canonical(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut mapped: Vec<_> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (n, best.unwrap_or_default())
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The graph on `n` vertices whose edges are the set bits of `mask` over
/// the pairs `(u, v)`, `u < v`, in lexicographic order (pairs past bit 63
/// get no edge).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bit < 64 && mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn labels_of(c: &ttone::Coloring) -> Vec<Option<Vec<u32>>> {
    c.labels().iter().map(|l| l.as_ref().map(|l| l.colors().to_vec())).collect()
}
