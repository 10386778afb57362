use crate::bounds::h_t_bounds;
use crate::coloring::{Color, Coloring, Label};
use crate::graph::Graph;
use crate::verify::is_valid;

use super::cycle::color_cycle;
use super::{at_least, ConstructionError};

/// 2-tone coloring of the fat triangle `H_t` (ids as in
/// [`Graph::fat_triangle`]) with the upper bound of
/// [`h_t_bounds`](crate::bounds::h_t_bounds) as palette.
///
/// Hubs get `{1,2}`, `{3,4}`, `{5,6}`. Every other vertex gets its own
/// 2-set not inside `1..=6`. A set holding one hub color goes to the group of
/// vertices not adjacent to that hub, so the only constraint left, between
/// a vertex and its two hubs, holds. `H_1` is `C_6` and uses the cycle
/// coloring instead.
pub fn color_fat_triangle(t: usize) -> Result<Coloring, ConstructionError> {
    at_least("t", t, 1)?;
    let g = Graph::fat_triangle(t)?;
    let k = h_t_bounds(t as u64).1 as usize;
    if t == 1 {
        let cyc = color_cycle(6, 2)?;
        let order = g.cycle_order().expect("H_1 is a 6-cycle");
        let mut c = Coloring::new(2, k, 6)?;
        for (i, &v) in order.iter().enumerate() {
            c.assign(v, cyc.get(i).expect("total").clone())?;
        }
        return Ok(c);
    }
    let mut c = Coloring::new(2, k, g.n())?;
    for (hub, first) in [(0, 1), (1, 3), (2, 5)] {
        c.assign(hub, Label::range(first, 2))?;
    }
    let k = k as Color;
    let mut free: Vec<Label> = Vec::new();
    for a in 7..=k {
        for b in a + 1..=k {
            free.push(Label::new(vec![a, b], 0)?);
        }
    }
    let mut free = free.into_iter();
    // group joining hubs (p, q) may use the third hub's colors
    for (group, third_colors) in [[5, 6], [3, 4], [1, 2]].into_iter().enumerate() {
        let mut restricted = third_colors
            .into_iter()
            .flat_map(|h| (7..=k).map(move |c| Label::new(vec![h, c], 0)))
            .collect::<Result<Vec<_>, _>>()?;
        restricted.sort();
        let mut restricted = restricted.into_iter();
        for i in 0..t {
            let v = 3 + group * t + i;
            let label = restricted.next().or_else(|| free.next()).ok_or(ConstructionError::Stuck(v))?;
            c.assign(v, label)?;
        }
    }
    if !is_valid(&g, &c) {
        return Err(ConstructionError::Stuck(0));
    }
    Ok(c)
}
