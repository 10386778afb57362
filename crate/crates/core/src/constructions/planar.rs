use crate::bounds::{greedy_2tone_upper, planar_upper};
use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::greedy::{degeneracy_order, greedy_extend};
use crate::structure::find_planar_reducible;

use super::ConstructionError;

enum Step {
    Contract { graph: Graph, v: usize, map: Vec<usize> },
    Delete { graph: Graph, v: usize, map: Vec<Option<usize>> },
}

/// 2-tone coloring of a planar graph with
/// `max(41, ⌊√(4Δ + 50.25) + 11.5⌋)` colors.
///
/// While `Δ > 12`, contracts a vertex `v` of degree at most 5 with at most
/// two neighbors of degree 11 or more into a suitable neighbor (isolated
/// vertices are deleted). Once `Δ <= 12`, colors greedily, which never gets
/// stuck with `⌈(2+√2)Δ⌉ <= 41` colors. Unwinding, `v` takes its least
/// available label.
pub fn color_planar(g: &Graph) -> Result<Coloring, ConstructionError> {
    let k = planar_upper(g.max_degree() as u64) as usize;
    let mut steps = Vec::new();
    let mut current = g.clone();
    while current.max_degree() > 12 {
        let (v, partner) = find_planar_reducible(&current).ok_or(ConstructionError::NotPlanar)?;
        let step = match partner {
            Some(w) => {
                let contraction = current.contract(v, w)?;
                let graph = std::mem::replace(&mut current, contraction.graph);
                Step::Contract { graph, v, map: contraction.map }
            }
            None => {
                let (rest, map) = current.remove_vertices(&[v]);
                let graph = std::mem::replace(&mut current, rest);
                Step::Delete { graph, v, map }
            }
        };
        steps.push(step);
    }
    debug_assert!(greedy_2tone_upper(current.max_degree() as u64) as usize <= k);
    let mut c = Coloring::new(2, k, current.n())?;
    let (order, _) = degeneracy_order(&current);
    for v in order {
        greedy_extend(&current, &mut c, v).map_err(|_| ConstructionError::Stuck(v))?;
    }
    while let Some(step) = steps.pop() {
        let (graph, v, lifted) = match step {
            Step::Contract { graph, v, map } => {
                let lifted = c.pull_back(graph.n(), |u| (u != v).then(|| map[u]));
                (graph, v, lifted)
            }
            Step::Delete { graph, v, map } => {
                let lifted = c.pull_back(graph.n(), |u| map[u]);
                (graph, v, lifted)
            }
        };
        c = lifted;
        greedy_extend(&graph, &mut c, v).map_err(|_| ConstructionError::Stuck(v))?;
    }
    Ok(c)
}
