use crate::bounds::outerplanar_upper;
use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::greedy::greedy_extend;
use crate::structure::find_outerplanar_edge;

use super::ConstructionError;

/// 2-tone coloring of an outerplanar graph with `⌊√(2Δ + 4.25) + 5.5⌋`
/// colors.
///
/// Repeatedly contracts an edge `xy` with `d(x) = 1`, or `d(x) = 2` and
/// `d(y) <= 4`, until no edges remain. Unwinding, `y` keeps the merged
/// vertex's label and `x` takes its least available label. Fails with
/// [`ConstructionError::NotOuterplanar`] when no such edge exists.
pub fn color_outerplanar(g: &Graph) -> Result<Coloring, ConstructionError> {
    let k = outerplanar_upper(g.max_degree() as u64) as usize;
    let mut steps: Vec<(Graph, usize, Vec<usize>)> = Vec::new();
    let mut current = g.clone();
    while current.edge_count() > 0 {
        let (x, y) = find_outerplanar_edge(&current).ok_or(ConstructionError::NotOuterplanar)?;
        let contraction = current.contract(x, y)?;
        let next = contraction.graph;
        steps.push((std::mem::replace(&mut current, next), x, contraction.map));
    }
    let mut c = Coloring::new(2, k, current.n())?;
    for v in 0..current.n() {
        greedy_extend(&current, &mut c, v).map_err(|_| ConstructionError::Stuck(v))?;
    }
    while let Some((graph, x, map)) = steps.pop() {
        let mut lifted = c.pull_back(graph.n(), |v| (v != x).then(|| map[v]));
        greedy_extend(&graph, &mut lifted, x).map_err(|_| ConstructionError::Stuck(x))?;
        c = lifted;
    }
    Ok(c)
}
