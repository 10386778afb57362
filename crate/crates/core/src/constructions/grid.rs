use crate::coloring::{Color, Coloring, Label};
use crate::graph::grid_id;

use super::{at_least, ConstructionError};

/// Palette size of [`color_grid`] for tone `t`.
pub fn grid_palette(t: usize) -> Option<usize> {
    match t {
        2 => Some(6),
        3 => Some(10),
        4 => Some(14),
        5 => Some(22),
        _ => None,
    }
}

/// Label of grid vertex `(i, j)` (1-based) under the modular formulas:
/// colors are constant along diagonals of slope 1 and -1, then along lines
/// of slope 2 and -1/2, with a second slope-1 family for `t = 5`.
pub fn grid_label(i: usize, j: usize, t: usize) -> Option<Label> {
    let (i, j) = (i as i64, j as i64);
    let residues: Vec<i64> = match t {
        2 => vec![(i - j).rem_euclid(3), (i + j).rem_euclid(3) + 3],
        3..=5 => {
            let mut r = vec![
                (i - j).rem_euclid(3),
                (i + j).rem_euclid(3) + 3,
                (2 * i + j).rem_euclid(4) + 6,
            ];
            if t >= 4 {
                r.push((i + 2 * j).rem_euclid(4) + 10);
            }
            if t == 5 {
                r.push((i + 3 * j).rem_euclid(8) + 14);
            }
            r
        }
        _ => return None,
    };
    let colors = residues.into_iter().map(|r| r as Color + 1).collect();
    Some(Label::new(colors, 0).expect("residue families use disjoint color ranges"))
}

/// Colors `P_m □ P_n` (vertex `(i, j)` is `(i-1)·n + (j-1)`) with 6, 10, 14
/// or 22 colors for `t = 2, 3, 4, 5`.
///
/// For `t = 5` the formulas are only claimed for `m < n`; square grids are
/// accepted since the verifier confirms them.
pub fn color_grid(m: usize, n: usize, t: usize) -> Result<Coloring, ConstructionError> {
    at_least("grid rows", m, 2)?;
    at_least("grid columns", n, 2)?;
    let k = grid_palette(t).ok_or(ConstructionError::UnsupportedTone(t))?;
    let mut c = Coloring::new(t, k, m * n)?;
    for i in 1..=m {
        for j in 1..=n {
            c.assign(grid_id(n, i, j), grid_label(i, j, t).expect("tone checked"))?;
        }
    }
    Ok(c)
}
