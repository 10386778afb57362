//! Label availability and greedy extension of partial colorings.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::coloring::{Color, Coloring, ColoringError, Label};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("no label available for vertex {0}")]
    Blocked(usize),
    #[error("vertex order is not a permutation of 0..{0}")]
    BadOrder(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Calls `visit` on each label that `v` could take without violating the
/// t-tone condition against an already-labelled vertex, in lexicographic
/// order, until `visit` breaks.
pub fn for_each_available<F>(g: &Graph, c: &Coloring, v: usize, mut visit: F)
where
    F: FnMut(&[Color]) -> ControlFlow<()>,
{
    let (t, k) = (c.t(), c.k());
    let mut forbidden = vec![false; k + 1];
    let mut caps = Vec::new();
    let mut members: Vec<&Label> = Vec::new();
    for (u, d) in g.ball(v, t) {
        if let Some(l) = c.get(u) {
            if d == 1 {
                for &col in l.colors() {
                    forbidden[col as usize] = true;
                }
            } else {
                caps.push(d - 1);
                members.push(l);
            }
        }
    }
    let pool: Vec<Color> = (1..=k as Color).filter(|&col| !forbidden[col as usize]).collect();
    let hits: Vec<Vec<usize>> = pool
        .iter()
        .map(|&col| (0..members.len()).filter(|&i| members[i].contains(col)).collect())
        .collect();
    let mut search = Availability {
        t,
        pool: &pool,
        hits: &hits,
        caps: &caps,
        counts: vec![0; caps.len()],
        chosen: Vec::with_capacity(t),
    };
    let _ = search.run(0, &mut visit);
}

struct Availability<'a> {
    t: usize,
    pool: &'a [Color],
    hits: &'a [Vec<usize>],
    caps: &'a [usize],
    counts: Vec<usize>,
    chosen: Vec<Color>,
}

impl Availability<'_> {
    fn run<F>(&mut self, from: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        if self.chosen.len() == self.t {
            return visit(&self.chosen);
        }
        let need = self.t - self.chosen.len();
        for i in from..self.pool.len() {
            if self.pool.len() - i < need {
                break;
            }
            if self.hits[i].iter().any(|&m| self.counts[m] >= self.caps[m]) {
                continue;
            }
            for &m in &self.hits[i] {
                self.counts[m] += 1;
            }
            self.chosen.push(self.pool[i]);
            let flow = self.run(i + 1, visit);
            self.chosen.pop();
            for &m in &self.hits[i] {
                self.counts[m] -= 1;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// All labels available to the unlabelled vertex `v`, lexicographically.
pub fn available_labels(g: &Graph, c: &Coloring, v: usize) -> Vec<Label> {
    let mut out = Vec::new();
    for_each_available(g, c, v, |l| {
        out.push(Label::from_sorted(l.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// The lexicographically least available label, if any.
pub fn first_available(g: &Graph, c: &Coloring, v: usize) -> Option<Label> {
    let mut out = None;
    for_each_available(g, c, v, |l| {
        out = Some(Label::from_sorted(l.to_vec()));
        ControlFlow::Break(())
    });
    out
}

/// Labels `v` with its least available label.
pub fn greedy_extend(g: &Graph, c: &mut Coloring, v: usize) -> Result<Label, GreedyError> {
    let label = first_available(g, c, v).ok_or(GreedyError::Blocked(v))?;
    c.assign(v, label.clone())?;
    Ok(label)
}

/// Colors the vertices of `g` in `order`, each with its least available label.
pub fn greedy_color(g: &Graph, t: usize, k: usize, order: &[usize]) -> Result<Coloring, GreedyError> {
    let mut seen = vec![false; g.n()];
    if order.len() != g.n() || order.iter().any(|&v| v >= g.n() || std::mem::replace(&mut seen[v], true)) {
        return Err(GreedyError::BadOrder(g.n()));
    }
    let mut c = Coloring::new(t, k, g.n())?;
    for &v in order {
        greedy_extend(g, &mut c, v)?;
    }
    Ok(c)
}

/// Smallest-last ordering: repeatedly delete a minimum-degree vertex (ties to
/// the smaller id) and list vertices in reverse deletion order. Also returns
/// the degeneracy.
pub fn degeneracy_order(g: &Graph) -> (Vec<usize>, usize) {
    let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..g.n()).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    order.reverse();
    (order, degeneracy)
}

/// `C(k - 2 deg, 2) > second`: the counting condition under which a 2-tone
/// partial coloring always extends to a vertex with `deg` neighbors and
/// `second` vertices at distance 2.
pub fn can_extend_2tone(k: u64, deg: u64, second: u64) -> bool {
    let free = k.saturating_sub(2 * deg);
    free * free.saturating_sub(1) / 2 > second
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_valid;

    fn l(c: &[Color]) -> Label {
        Label::new(c.to_vec(), 0).unwrap()
    }

    #[test]
    fn availability_on_p3() {
        let p3 = Graph::path(3).unwrap();
        let mut c = Coloring::new(2, 5, 3).unwrap();
        c.assign(1, l(&[1, 2])).unwrap();
        c.assign(2, l(&[3, 4])).unwrap();
        assert_eq!(available_labels(&p3, &c, 0), vec![l(&[3, 5]), l(&[4, 5])]);
        assert_eq!(greedy_extend(&p3, &mut c, 0).unwrap(), l(&[3, 5]));
    }

    #[test]
    fn isolated_and_blocked() {
        let g = Graph::empty(1);
        let c = Coloring::new(2, 4, 1).unwrap();
        assert_eq!(available_labels(&g, &c, 0).len(), 6);
        let mut c = Coloring::new(2, 4, 1).unwrap();
        assert_eq!(greedy_extend(&g, &mut c, 0).unwrap(), l(&[1, 2]));

        let p2 = Graph::path(2).unwrap();
        let mut c = Coloring::new(3, 3, 2).unwrap();
        c.assign(0, Label::range(1, 3)).unwrap();
        assert!(available_labels(&p2, &c, 1).is_empty());
        assert_eq!(greedy_extend(&p2, &mut c, 1), Err(GreedyError::Blocked(1)));
    }

    #[test]
    fn extension_condition() {
        assert!(!can_extend_2tone(7, 2, 5));
        assert!(can_extend_2tone(7, 1, 5));
        assert!(!can_extend_2tone(13, 5, 51));
        assert!(can_extend_2tone(21, 5, 51));
        assert!(!can_extend_2tone(3, 2, 0));
    }

    #[test]
    fn greedy_examples() {
        let p4 = Graph::path(4).unwrap();
        let c = greedy_color(&p4, 2, 5, &[0, 1, 2, 3]).unwrap();
        assert!(is_valid(&p4, &c));
        assert_eq!(c.colors_used(), 5);
        let k1 = Graph::empty(1);
        let c = greedy_color(&k1, 4, 4, &[0]).unwrap();
        assert_eq!(c.get(0), Some(&Label::range(1, 4)));
        assert_eq!(greedy_color(&p4, 2, 5, &[0, 1, 2]), Err(GreedyError::BadOrder(4)));
        assert_eq!(greedy_color(&p4, 2, 5, &[0, 1, 2, 2]), Err(GreedyError::BadOrder(4)));
    }

    #[test]
    fn degeneracy_examples() {
        let tree = Graph::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(degeneracy_order(&tree).1, 1);
        assert_eq!(degeneracy_order(&Graph::cycle(9).unwrap()).1, 2);
        let (order, d) = degeneracy_order(&Graph::grid(3, 3).unwrap());
        assert_eq!(d, 2);
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..9).collect::<Vec<_>>());
    }
}
