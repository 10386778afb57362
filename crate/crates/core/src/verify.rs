//! The t-tone condition: labels of distinct vertices at distance `d` share
//! fewer than `d` colors.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, ColoringError};
use crate::graph::Graph;

/// Two vertices at distance `distance` whose labels share `shared >= distance`
/// colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub distance: usize,
    pub shared: usize,
}

/// Checks a total coloring. `Ok(vec![])` means valid; structural problems
/// (missing labels, vertices outside the graph) are errors.
pub fn verify(g: &Graph, c: &Coloring) -> Result<Vec<Violation>, ColoringError> {
    check_structure(g, c)?;
    if let Some(v) = (0..g.n()).find(|&v| c.get(v).is_none()) {
        return Err(ColoringError::Unassigned(v));
    }
    Ok(violations(g, c))
}

/// Checks only pairs whose endpoints are both labelled.
pub fn verify_partial(g: &Graph, c: &Coloring) -> Result<Vec<Violation>, ColoringError> {
    check_structure(g, c)?;
    Ok(violations(g, c))
}

/// Convenience wrapper: total, structurally sound and violation-free.
pub fn is_valid(g: &Graph, c: &Coloring) -> bool {
    matches!(verify(g, c), Ok(v) if v.is_empty())
}

fn check_structure(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if let Some(v) = (g.n()..c.n()).find(|&v| c.get(v).is_some()) {
        return Err(ColoringError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

fn violations(g: &Graph, c: &Coloring) -> Vec<Violation> {
    let t = c.t();
    (0..g.n())
        .into_par_iter()
        .flat_map_iter(|u| {
            let mut found = Vec::new();
            if let Some(lu) = c.get(u) {
                for (v, distance) in g.ball(u, t) {
                    if v <= u {
                        continue;
                    }
                    if let Some(lv) = c.get(v) {
                        let shared = lu.shared(lv);
                        if shared >= distance {
                            found.push(Violation { u, v, distance, shared });
                        }
                    }
                }
            }
            found.sort_unstable_by_key(|x| x.v);
            found
        })
        .collect()
}
