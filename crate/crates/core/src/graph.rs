//! Simple undirected graphs on vertex ids `0..n`, the standard families used
//! throughout the crate, distances, and edge contraction.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("{what} must be at least {min}, got {value}")]
    BelowMinimum {
        what: &'static str,
        value: usize,
        min: usize,
    },
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A finite simple undirected graph. Adjacency lists are sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// An unordered vertex pair `u < v` at distance `distance`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstraintPair {
    pub u: usize,
    pub v: usize,
    pub distance: usize,
}

/// Result of contracting an edge: the smaller graph and, for every vertex of
/// the original graph, its id in the contracted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    pub map: Vec<usize>,
}

fn check_min(what: &'static str, value: usize, min: usize) -> Result<(), GraphError> {
    if value < min {
        Err(GraphError::BelowMinimum { what, value, min })
    } else {
        Ok(())
    }
}

impl Graph {
    /// Builds a simple graph, collapsing duplicate edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        check_min("path length", n, 1)?;
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        check_min("cycle length", n, 3)?;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    /// The `m x n` grid. Vertex `(i, j)` with `1 <= i <= m`, `1 <= j <= n`
    /// has id `(i - 1) * n + (j - 1)`; see [`grid_id`].
    pub fn grid(m: usize, n: usize) -> Result<Self, GraphError> {
        check_min("grid rows", m, 1)?;
        check_min("grid columns", n, 1)?;
        let mut edges = Vec::with_capacity(2 * m * n);
        for i in 1..=m {
            for j in 1..=n {
                if i < m {
                    edges.push((grid_id(n, i, j), grid_id(n, i + 1, j)));
                }
                if j < n {
                    edges.push((grid_id(n, i, j), grid_id(n, i, j + 1)));
                }
            }
        }
        Graph::new(m * n, &edges)
    }

    /// `K_{1,d}` with the center at id 0.
    pub fn star(d: usize) -> Result<Self, GraphError> {
        check_min("star degree", d, 1)?;
        let edges: Vec<_> = (1..=d).map(|i| (0, i)).collect();
        Graph::new(d + 1, &edges)
    }

    /// `K_3` with every edge replaced by `K_{2,t}`.
    ///
    /// Hubs are `0, 1, 2`. The `t` vertices joining hubs 0 and 1 come next,
    /// then the `t` joining 0 and 2, then the `t` joining 1 and 2.
    pub fn fat_triangle(t: usize) -> Result<Self, GraphError> {
        check_min("fat triangle multiplicity", t, 1)?;
        let mut edges = Vec::with_capacity(6 * t);
        for (group, (a, b)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            for i in 0..t {
                let v = 3 + group * t + i;
                edges.push((a, v));
                edges.push((b, v));
            }
        }
        Graph::new(3 * t + 3, &edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Shortest-path distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices other than `source` within distance `limit`, with their
    /// distances, in BFS order.
    pub fn ball(&self, source: usize, limit: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if limit == 0 {
            return out;
        }
        let mut seen = vec![false; self.n()];
        seen[source] = true;
        let mut frontier = vec![source];
        for d in 1..=limit {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        next.push(w);
                        out.push((w, d));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        out
    }

    /// Every unordered pair at distance `1..=t`, each listed once with `u < v`,
    /// sorted by `(u, v)`.
    pub fn constraint_pairs(&self, t: usize) -> Vec<ConstraintPair> {
        let mut pairs = Vec::new();
        for u in 0..self.n() {
            let mut near: Vec<_> = self
                .ball(u, t)
                .into_iter()
                .filter(|&(v, _)| v > u)
                .map(|(v, distance)| ConstraintPair { u, v, distance })
                .collect();
            near.sort_unstable();
            pairs.extend(near);
        }
        pairs
    }

    /// Largest finite distance between two vertices (0 for edgeless graphs).
    pub fn longest_geodesic(&self) -> usize {
        (0..self.n())
            .map(|v| self.bfs_distances(v).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// A shortest path realising [`Graph::longest_geodesic`].
    pub fn longest_geodesic_path(&self) -> Vec<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for s in 0..self.n() {
            let dist = self.bfs_distances(s);
            for (v, d) in dist.iter().enumerate() {
                if let Some(d) = *d {
                    if best.is_none_or(|(_, _, bd)| d > bd) {
                        best = Some((s, v, d));
                    }
                }
            }
        }
        let Some((s, mut v, _)) = best else {
            return Vec::new();
        };
        let dist = self.bfs_distances(s);
        let mut path = vec![v];
        while v != s {
            let dv = dist[v].unwrap();
            v = *self.adj[v]
                .iter()
                .find(|&&w| dist[w] == Some(dv - 1))
                .expect("BFS predecessor");
            path.push(v);
        }
        path.reverse();
        path
    }

    /// Whether some two vertices share at least two neighbors, i.e. the graph
    /// contains `C_4` as a subgraph.
    pub fn has_four_cycle(&self) -> bool {
        let mut common = vec![0usize; self.n()];
        for u in 0..self.n() {
            common.iter_mut().for_each(|c| *c = 0);
            for &m in &self.adj[u] {
                for &w in &self.adj[m] {
                    if w > u {
                        common[w] += 1;
                        if common[w] >= 2 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// If the graph is a single cycle, its vertices in cyclic order starting
    /// from 0 and heading to the smaller neighbor.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if n < 3 || self.adj.iter().any(|l| l.len() != 2) {
            return None;
        }
        let order = self.walk_from(0, self.adj[0][1], n);
        (order.len() == n).then_some(order)
    }

    /// If the graph is a single path, its vertices from the smaller-id end.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        match n {
            0 => return None,
            1 => return Some(vec![0]),
            _ => {}
        }
        if self.edge_count() != n - 1 || self.adj.iter().any(|l| l.is_empty() || l.len() > 2) {
            return None;
        }
        let start = (0..n).find(|&v| self.degree(v) == 1)?;
        let mut order = vec![start];
        order.extend(self.walk_from(self.adj[start][0], start, n).into_iter().take(n - 1));
        (order.len() == n).then_some(order)
    }

    // Walks along degree-2 vertices starting at `start`, having arrived from
    // `prev`, for at most `limit` steps.
    fn walk_from(&self, start: usize, prev: usize, limit: usize) -> Vec<usize> {
        let mut order = vec![start];
        let (mut prev, mut cur) = (prev, start);
        while order.len() < limit {
            let Some(&next) = self.adj[cur].iter().find(|&&w| w != prev) else {
                break;
            };
            if next == start {
                break;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        order
    }

    /// Contracts the edge `vw`. The merged vertex keeps `min(v, w)` and ids
    /// above `max(v, w)` shift down by one. Parallel edges collapse.
    pub fn contract(&self, v: usize, w: usize) -> Result<Contraction, GraphError> {
        if !self.has_edge(v, w) {
            return Err(GraphError::NotAnEdge(v, w));
        }
        let (keep, gone) = (v.min(w), v.max(w));
        let map: Vec<usize> = (0..self.n())
            .map(|x| match x.cmp(&gone) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut adj = vec![Vec::new(); self.n() - 1];
        for (a, b) in self.edges() {
            let (ma, mb) = (map[a], map[b]);
            if ma != mb {
                adj[ma].push(mb);
                adj[mb].push(ma);
            }
        }
        Ok(Contraction {
            graph: Graph::from_adjacency(adj),
            map,
        })
    }

    /// Deletes the given vertices. Returns the remaining graph (ids compacted
    /// in order) and the old-to-new id map.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![Some(0); self.n()];
        for &r in removed {
            map[r] = None;
        }
        let mut next = 0;
        for slot in map.iter_mut().flatten() {
            *slot = next;
            next += 1;
        }
        let mut adj = vec![Vec::new(); next];
        for (a, b) in self.edges() {
            if let (Some(ma), Some(mb)) = (map[a], map[b]) {
                adj[ma].push(mb);
                adj[mb].push(ma);
            }
        }
        (Graph::from_adjacency(adj), map)
    }

    /// The subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![None; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = Some(i);
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            adj[i] = self.adj[v].iter().filter_map(|&w| pos[w]).collect();
        }
        Graph::from_adjacency(adj)
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
    /// Blank lines and lines starting with `c` are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'));
        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
            let fields: Vec<_> = l.split_whitespace().collect();
            let bad = |message: String| GraphError::Parse { line, message };
            if fields.len() != 2 {
                return Err(bad(format!("expected two integers, found {:?}", l)));
            }
            let a = fields[0]
                .parse()
                .map_err(|e| bad(format!("{:?}: {}", fields[0], e)))?;
            let b = fields[1]
                .parse()
                .map_err(|e| bad(format!("{:?}: {}", fields[1], e)))?;
            Ok((a, b))
        };
        let (line, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 1,
                message: format!("header announces {} edges, found {}", m, edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    /// Writes the edge-list format with edges sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", u, v).unwrap();
        }
        out
    }
}

/// Id of grid vertex `(i, j)` (1-based) in a grid with `cols` columns.
pub fn grid_id(cols: usize, i: usize, j: usize) -> usize {
    (i - 1) * cols + (j - 1)
}
