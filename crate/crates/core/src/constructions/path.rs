use crate::bounds::path_tau;
use crate::coloring::{Color, Coloring, Label};

use super::{at_least, ConstructionError};

/// Colors `P_n` (vertices `0..n` in order) with exactly `path_tau(n, t)`
/// colors.
///
/// Vertex `i` reuses colors of the vertices at distance `2..=t+2`, farthest
/// first, taking a color only if no vertex closer to `i` has it and every
/// pair within distance `t` stays legal. Whatever is still missing is filled
/// with fresh colors.
pub fn color_path(n: usize, t: usize) -> Result<Coloring, ConstructionError> {
    at_least("path length", n, 1)?;
    at_least("t", t, 1)?;
    let k = path_tau(n as u64, t as u64) as usize;
    let mut labels: Vec<Vec<Color>> = Vec::with_capacity(n);
    let mut next_fresh: Color = 1;
    for i in 0..n {
        let mut chosen: Vec<Color> = Vec::with_capacity(t);
        for src in i.saturating_sub(t + 2)..i.saturating_sub(1) {
            if chosen.len() == t {
                break;
            }
            for &c in &labels[src] {
                if chosen.len() == t {
                    break;
                }
                let closer = labels[src + 1..i].iter().any(|l| l.contains(&c));
                if !closer && !chosen.contains(&c) && fits(&labels, i, t, &chosen, c) {
                    chosen.push(c);
                }
            }
        }
        while chosen.len() < t {
            chosen.push(next_fresh);
            next_fresh += 1;
        }
        labels.push(chosen);
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| Label::new(l, v))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coloring::from_labels(t, k, labels)?)
}

// Can `c` join `chosen` as (part of) the label of vertex `i`?
fn fits(labels: &[Vec<Color>], i: usize, t: usize, chosen: &[Color], c: Color) -> bool {
    (1..=t.min(i)).all(|d| {
        let other = &labels[i - d];
        let shared = chosen.iter().filter(|x| other.contains(x)).count() + other.contains(&c) as usize;
        shared < d
    })
}
