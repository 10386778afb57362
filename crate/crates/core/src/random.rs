//! Seeded random instance generators for tests, benchmarks and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// The generator used everywhere a seed is accepted.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Uniformly random recursive tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::new(n.max(1), &edges).unwrap()
}

/// Random maximal outerplanar graph on `n >= 3` vertices, grown by gluing a
/// triangle onto a random edge of the outer cycle.
pub fn random_maximal_outerplanar<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let mut edges = vec![(0, 1), (1, 2), (2, 0)];
    let mut boundary = vec![0, 1, 2];
    for v in 3..n {
        let i = rng.gen_range(0..boundary.len());
        let a = boundary[i];
        let b = boundary[(i + 1) % boundary.len()];
        edges.push((a, v));
        edges.push((b, v));
        boundary.insert(i + 1, v);
    }
    Graph::new(n, &edges).unwrap()
}

/// Random Apollonian network (stacked triangulation) on `n >= 3` vertices.
///
/// With probability `hub_bias` the new vertex goes into a face incident to
/// vertex 0, which drives up the maximum degree.
pub fn random_apollonian<R: Rng + ?Sized>(n: usize, hub_bias: f64, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let mut edges = vec![(0, 1), (1, 2), (2, 0)];
    // both sides of the initial triangle are faces
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let hub_faces: Vec<usize> = (0..faces.len()).filter(|&f| faces[f].contains(&0)).collect();
        let f = if !hub_faces.is_empty() && rng.gen_bool(hub_bias) {
            *hub_faces.choose(rng).unwrap()
        } else {
            rng.gen_range(0..faces.len())
        };
        let [a, b, c] = faces.swap_remove(f);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    Graph::new(n, &edges).unwrap()
}

/// Replaces every edge of `g` by a path with `counts[i]` new internal
/// vertices, `i` indexing [`Graph::edges`].
pub fn subdivide(g: &Graph, counts: &[usize]) -> Graph {
    let base: Vec<_> = g.edges().collect();
    assert_eq!(base.len(), counts.len());
    let mut n = g.n();
    let mut edges = Vec::new();
    for (&(u, v), &c) in base.iter().zip(counts) {
        let mut prev = u;
        for _ in 0..c {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
    }
    Graph::new(n, &edges).unwrap()
}

/// A random graph with many long threads: a random connected base graph on
/// `base_n` vertices whose edges are each subdivided `1..=max_subdivisions`
/// times, plus up to `pendants` hanging leaves.
pub fn random_subdivided<R: Rng + ?Sized>(
    base_n: usize,
    extra_edges: usize,
    max_subdivisions: usize,
    pendants: usize,
    rng: &mut R,
) -> Graph {
    let tree = random_tree(base_n, rng);
    let mut edges: Vec<_> = tree.edges().collect();
    for _ in 0..extra_edges {
        if base_n < 2 {
            break;
        }
        let u = rng.gen_range(0..base_n);
        let v = rng.gen_range(0..base_n);
        if u != v {
            edges.push((u, v));
        }
    }
    let base = Graph::new(base_n, &edges).unwrap();
    let counts: Vec<_> = (0..base.edge_count())
        .map(|_| rng.gen_range(1..=max_subdivisions.max(1)))
        .collect();
    let g = subdivide(&base, &counts);
    let mut edges: Vec<_> = g.edges().collect();
    let mut n = g.n();
    for _ in 0..pendants {
        edges.push((rng.gen_range(0..n), n));
        n += 1;
    }
    Graph::new(n, &edges).unwrap()
}
