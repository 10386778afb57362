//! Finders for the reducible configurations that sparse, outerplanar and
//! planar graphs are guaranteed to contain.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ThreadKind {
    /// A 4-thread.
    FourThread,
    /// A 3-thread whose second endpoint has degree at most 5.
    ThreeThread,
    /// A 2-thread whose first endpoint has degree at most 3 and whose second
    /// endpoint has degree at most 5.
    TwoThread,
}

impl ThreadKind {
    pub fn internal_len(self) -> usize {
        match self {
            ThreadKind::FourThread => 4,
            ThreadKind::ThreeThread => 3,
            ThreadKind::TwoThread => 2,
        }
    }
}

/// A trail `x, internal[0], ..., internal[l-1], y` whose internal vertices
/// have degree 2. `endpoints = (x, y)`; `x` and `y` may coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThreadConfig {
    pub kind: ThreadKind,
    pub internal: Vec<usize>,
    pub endpoints: (usize, usize),
}

impl ThreadConfig {
    /// Re-checks every defining condition against `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let (x, y) = self.endpoints;
        let len = self.kind.internal_len();
        if self.internal.len() != len || x >= g.n() || y >= g.n() {
            return false;
        }
        if self.internal.iter().any(|&v| v >= g.n() || g.degree(v) != 2) {
            return false;
        }
        let mut distinct = self.internal.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != len || distinct.contains(&x) || distinct.contains(&y) {
            return false;
        }
        let mut walk = vec![x];
        walk.extend(&self.internal);
        walk.push(y);
        if !walk.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        match self.kind {
            ThreadKind::FourThread => true,
            ThreadKind::ThreeThread => g.degree(y) <= 5,
            ThreadKind::TwoThread => g.degree(x) <= 3 && g.degree(y) <= 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertex {vertex} has degree {degree}; thread search needs minimum degree 2")]
    LowDegree { vertex: usize, degree: usize },
}

/// Finds a 4-thread, a 3-thread with a 5⁻ endpoint, or a 2-thread with a 3⁻
/// and a 5⁻ endpoint.
///
/// Threads hanging off vertices of degree at least 3 are examined first, all
/// sub-threads of every maximal thread included; the first kind in the order
/// above wins, then the lexicographically smallest internal tuple. Only when
/// none exists does a 2-regular component contribute, always as a 2-thread.
pub fn find_thread_config(g: &Graph) -> Result<Option<ThreadConfig>, StructureError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < 2) {
        return Err(StructureError::LowDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let mut best: Option<ThreadConfig> = None;
    let mut offer = |cand: ThreadConfig| {
        let better = match &best {
            None => true,
            Some(b) => (cand.kind, &cand.internal) < (b.kind, &b.internal),
        };
        if better {
            best = Some(cand);
        }
    };
    for a in (0..g.n()).filter(|&a| g.degree(a) >= 3) {
        for &first in g.neighbors(a) {
            if g.degree(first) != 2 {
                continue;
            }
            // walk the maximal thread a, first, ..., end
            let mut seq = vec![a, first];
            let (mut prev, mut cur) = (a, first);
            while g.degree(cur) == 2 {
                let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
                seq.push(next);
                prev = cur;
                cur = next;
            }
            let internal_count = seq.len() - 2;
            for kind in [ThreadKind::FourThread, ThreadKind::ThreeThread, ThreadKind::TwoThread] {
                let len = kind.internal_len();
                if internal_count < len {
                    continue;
                }
                for start in 0..=internal_count - len {
                    let cand = ThreadConfig {
                        kind,
                        internal: seq[start + 1..start + 1 + len].to_vec(),
                        endpoints: (seq[start], seq[start + len + 1]),
                    };
                    if cand.is_valid_in(g) {
                        offer(cand);
                    }
                }
            }
        }
    }
    if best.is_some() {
        return Ok(best);
    }
    Ok(two_regular_component_thread(g))
}

// In a 2-regular component the smallest vertex and its smaller neighbor form
// a 2-thread; every endpoint has degree 2.
fn two_regular_component_thread(g: &Graph) -> Option<ThreadConfig> {
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        if comp.iter().all(|&v| g.degree(v) == 2) {
            let v1 = s;
            let v2 = g.neighbors(v1)[0];
            let x = g.neighbors(v1)[1];
            let y = g.neighbors(v2).iter().copied().find(|&w| w != v1).unwrap();
            return Some(ThreadConfig {
                kind: ThreadKind::TwoThread,
                internal: vec![v1, v2],
                endpoints: (x, y),
            });
        }
    }
    None
}

/// A vertex of degree at most 5 with at most two neighbors of degree at least
/// 11, and the neighbor to contract it into.
///
/// When `d(v) >= 3` the partner has degree at most 10; otherwise it is the
/// smallest neighbor. An isolated vertex comes back with no partner. `None`
/// means no such vertex exists, so the input cannot be planar.
pub fn find_planar_reducible(g: &Graph) -> Option<(usize, Option<usize>)> {
    let v = (0..g.n()).find(|&v| {
        g.degree(v) <= 5 && g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 11).count() <= 2
    })?;
    let w = if g.degree(v) >= 3 {
        g.neighbors(v).iter().copied().find(|&w| g.degree(w) <= 10)
    } else {
        g.neighbors(v).first().copied()
    };
    Some((v, w))
}

/// An edge `xy` with `d(x) = 1`, or `d(x) = 2` and `d(y) <= 4`. `None` means
/// the input cannot be outerplanar (or has no edges).
pub fn find_outerplanar_edge(g: &Graph) -> Option<(usize, usize)> {
    for x in 0..g.n() {
        match g.degree(x) {
            1 => return Some((x, g.neighbors(x)[0])),
            2 => {
                if let Some(&y) = g.neighbors(x).iter().find(|&&y| g.degree(y) <= 4) {
                    return Some((x, y));
                }
            }
            _ => {}
        }
    }
    None
}
