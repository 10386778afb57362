use std::ops::ControlFlow;

use crate::bounds::sparse_upper;
use crate::coloring::Coloring;
use crate::density::{mad, Density};
use crate::graph::Graph;
use crate::greedy::{available_labels, first_available, for_each_available, greedy_extend};
use crate::structure::{find_thread_config, ThreadKind};

use super::ConstructionError;

enum Step {
    /// `removed[i]` are re-added in the listed order.
    Delete { graph: Graph, map: Vec<Option<usize>>, removed: Vec<usize> },
    /// 2-thread `x v1 v2 y`: `v1` was deleted; `v2` may need a new label.
    TwoThread { graph: Graph, map: Vec<Option<usize>>, v1: usize, v2: usize },
}

/// 2-tone coloring with `max(7, ⌈√(2Δ + 1/4) + 5/2⌉)` colors for graphs with
/// `mad < 12/5`.
///
/// Deletes a vertex of degree at most 1, or the middle of a thread
/// configuration (two middle vertices of a 4-thread, the two internal
/// vertices nearest the low-degree end of a 3-thread, or the vertex next to
/// the degree-3 end of a 2-thread), until nothing is left, then adds the
/// vertices back greedily. In the 2-thread case the surviving internal vertex
/// is relabelled when needed so that the deleted one has a label.
pub fn color_sparse(g: &Graph) -> Result<Coloring, ConstructionError> {
    if g.n() > 0 {
        let m = mad(g);
        if m >= Density::new(12, 5) {
            return Err(ConstructionError::MadTooLarge(m));
        }
    }
    let k = sparse_upper(g.max_degree() as u64) as usize;
    let mut steps = Vec::new();
    let mut current = g.clone();
    while current.n() > 0 {
        let step = if let Some(v) = (0..current.n()).find(|&v| current.degree(v) <= 1) {
            let (rest, map) = current.remove_vertices(&[v]);
            let graph = std::mem::replace(&mut current, rest);
            Step::Delete { graph, map, removed: vec![v] }
        } else {
            let config = find_thread_config(&current)
                .expect("minimum degree is at least 2")
                .ok_or(ConstructionError::Stuck(0))?;
            let internal = &config.internal;
            match config.kind {
                ThreadKind::FourThread | ThreadKind::ThreeThread => {
                    let removed = if config.kind == ThreadKind::FourThread {
                        vec![internal[1], internal[2]]
                    } else {
                        // internal[2] is next to the endpoint of degree at most 5
                        vec![internal[2], internal[1]]
                    };
                    let (rest, map) = current.remove_vertices(&removed);
                    let graph = std::mem::replace(&mut current, rest);
                    Step::Delete { graph, map, removed }
                }
                ThreadKind::TwoThread => {
                    let (v1, v2) = (internal[0], internal[1]);
                    let (rest, map) = current.remove_vertices(&[v1]);
                    let graph = std::mem::replace(&mut current, rest);
                    Step::TwoThread { graph, map, v1, v2 }
                }
            }
        };
        steps.push(step);
    }
    let mut c = Coloring::new(2, k, 0)?;
    while let Some(step) = steps.pop() {
        match step {
            Step::Delete { graph, map, removed } => {
                c = c.pull_back(graph.n(), |u| map[u]);
                for v in removed {
                    greedy_extend(&graph, &mut c, v).map_err(|_| ConstructionError::Stuck(v))?;
                }
            }
            Step::TwoThread { graph, map, v1, v2 } => {
                c = c.pull_back(graph.n(), |u| map[u]);
                extend_two_thread(&graph, &mut c, v1, v2)?;
            }
        }
    }
    Ok(c)
}

// Tries v2's current label first, then its other valid labels in order,
// until v1 can be labelled.
fn extend_two_thread(g: &Graph, c: &mut Coloring, v1: usize, v2: usize) -> Result<(), ConstructionError> {
    let current = c.unassign(v2).expect("v2 survives the deletion");
    let mut options = available_labels(g, c, v2);
    if let Some(pos) = options.iter().position(|l| *l == current) {
        let l = options.remove(pos);
        options.insert(0, l);
    }
    for label in options {
        c.assign(v2, label)?;
        let mut any = false;
        for_each_available(g, c, v1, |_| {
            any = true;
            ControlFlow::Break(())
        });
        if any {
            let l = first_available(g, c, v1).expect("checked above");
            c.assign(v1, l)?;
            return Ok(());
        }
        c.unassign(v2);
    }
    Err(ConstructionError::Stuck(v1))
}
