//! Cycles: stored colorings for small exceptional lengths, and concatenation
//! of fixed block colorings for everything else.
//!
//! Two blocks `φ_a`, `φ_b` glue when the last `t` labels of `φ_a` followed by
//! the first `t` labels of `φ_b` form a valid coloring of the path on `2t`
//! vertices. If every ordered pair glues, the label sequences of any list of
//! blocks can be laid around a cycle one after another.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::coloring::{Coloring, Label};
use crate::graph::Graph;
use crate::verify::is_valid;

use super::cycle_data::{RawLabels, BLOCKS_T2, BLOCKS_T3, BLOCKS_T4, BLOCKS_T5, EXCEPTIONAL};
use super::{at_least, ConstructionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockTableError {
    #[error("block of length {0} is not a valid coloring of its cycle")]
    InvalidBlock(usize),
    #[error("block {first} followed by block {second} does not glue")]
    Glue { first: usize, second: usize },
    #[error("block of length {0} is shorter than t")]
    TooShort(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTable {
    t: usize,
    k: usize,
    blocks: BTreeMap<usize, Vec<Label>>,
    shared_prefix: Vec<Label>,
}

impl BlockTable {
    /// Builds a table; does not validate.
    pub fn new(t: usize, k: usize, blocks: Vec<Vec<Label>>) -> Self {
        let mut shared_prefix: Vec<Label> = blocks.first().cloned().unwrap_or_default();
        for b in &blocks {
            let common = shared_prefix.iter().zip(b).take_while(|(x, y)| x == y).count();
            shared_prefix.truncate(common);
        }
        let blocks = blocks.into_iter().map(|b| (b.len(), b)).collect();
        BlockTable { t, k, blocks, shared_prefix }
    }

    fn from_raw(t: usize, k: usize, raw: &[RawLabels]) -> Self {
        let blocks = raw
            .iter()
            .map(|b| b.iter().map(|l| Label::new(l.to_vec(), 0).expect("stored label")).collect())
            .collect();
        BlockTable::new(t, k, blocks)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The block lengths, increasing.
    pub fn lengths(&self) -> Vec<usize> {
        self.blocks.keys().copied().collect()
    }

    pub fn block(&self, len: usize) -> Option<&[Label]> {
        self.blocks.get(&len).map(Vec::as_slice)
    }

    /// Longest run of leading labels common to every block.
    pub fn shared_prefix(&self) -> &[Label] {
        &self.shared_prefix
    }

    /// Last `t` labels of block `first`, then the first `t` of block `second`.
    pub fn glue_window(&self, first: usize, second: usize) -> Option<Vec<Label>> {
        let a = self.block(first)?;
        let b = self.block(second)?;
        let t = self.t;
        if a.len() < t || b.len() < t {
            return None;
        }
        Some(a[a.len() - t..].iter().chain(&b[..t]).cloned().collect())
    }

    pub fn glues(&self, first: usize, second: usize) -> bool {
        self.glue_window(first, second).is_some_and(|w| {
            let path = Graph::path(w.len()).expect("nonempty window");
            Coloring::from_labels(self.t, self.k, w).is_ok_and(|c| is_valid(&path, &c))
        })
    }

    /// Every block colors its cycle and every ordered pair glues.
    pub fn validate(&self) -> Result<(), BlockTableError> {
        for (&len, labels) in &self.blocks {
            if len < self.t {
                return Err(BlockTableError::TooShort(len));
            }
            let ok = Graph::cycle(len).is_ok_and(|g| {
                Coloring::from_labels(self.t, self.k, labels.clone()).is_ok_and(|c| is_valid(&g, &c))
            });
            if !ok {
                return Err(BlockTableError::InvalidBlock(len));
            }
        }
        for &first in self.blocks.keys() {
            for &second in self.blocks.keys() {
                if !self.glues(first, second) {
                    return Err(BlockTableError::Glue { first, second });
                }
            }
        }
        Ok(())
    }

    /// Labels of the blocks in `lengths`, one after another.
    pub fn concatenate(&self, lengths: &[usize]) -> Option<Vec<Label>> {
        let mut out = Vec::new();
        for len in lengths {
            out.extend_from_slice(self.block(*len)?);
        }
        Some(out)
    }
}

/// The validated block table for `t in 2..=5`. Panics if the stored data
/// fails validation.
pub fn block_table(t: usize) -> Option<&'static BlockTable> {
    static TABLES: OnceLock<Vec<BlockTable>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        let tables = vec![
            BlockTable::from_raw(2, 5, BLOCKS_T2),
            BlockTable::from_raw(3, 8, BLOCKS_T3),
            BlockTable::from_raw(4, 12, BLOCKS_T4),
            BlockTable::from_raw(5, 16, BLOCKS_T5),
        ];
        for table in &tables {
            if let Err(e) = table.validate() {
                panic!("stored block table for t = {} is invalid: {}", table.t, e);
            }
        }
        tables
    });
    (2..=5).contains(&t).then(|| &tables[t - 2])
}

/// Writes `n` as a sum of `lengths` with as few terms as possible; among
/// those, the lexicographically least sorted list.
pub fn decompose(n: usize, lengths: &[usize]) -> Option<Vec<usize>> {
    let mut lengths: Vec<usize> = lengths.iter().copied().filter(|&l| l > 0).collect();
    lengths.sort_unstable();
    lengths.dedup();
    let mut best: Vec<Option<usize>> = vec![None; n + 1];
    best[0] = Some(0);
    for m in 1..=n {
        best[m] = lengths
            .iter()
            .filter(|&&l| l <= m)
            .filter_map(|&l| best[m - l])
            .min()
            .map(|c| c + 1);
    }
    let mut left = n;
    let mut out = Vec::with_capacity(best[n]?);
    while left > 0 {
        let need = best[left]? - 1;
        let l = *lengths.iter().find(|&&l| l <= left && best[left - l] == Some(need))?;
        out.push(l);
        left -= l;
    }
    Some(out)
}

/// `τ_t(C_n)` for `t in 2..=5`, `n >= 3`.
pub fn cycle_tau(n: usize, t: usize) -> Option<usize> {
    if n < 3 {
        return None;
    }
    let value = match t {
        2 => match n {
            3 | 4 | 7 => 6,
            _ => 5,
        },
        3 => match n {
            4 | 5 => 10,
            3 | 7 | 10 | 13 => 9,
            _ => 8,
        },
        4 => match n {
            5 => 15,
            4 => 14,
            7 => 13,
            _ => 12,
        },
        5 => match n {
            5 => 20,
            4 | 6 => 18,
            7 | 9 => 17,
            3 => 15,
            _ => 16,
        },
        _ => return None,
    };
    Some(value)
}

/// The stored coloring of `C_n`, if `n` is one of the lengths handled
/// outside the block decomposition.
pub fn stored_cycle(n: usize, t: usize) -> Option<Coloring> {
    EXCEPTIONAL.iter().find(|e| e.t == t && e.n == n).map(|e| {
        let labels = e.labels.iter().enumerate().map(|(v, l)| Label::new(l.to_vec(), v).expect("stored label")).collect();
        Coloring::from_labels(e.t, e.k, labels).expect("stored coloring fits its palette")
    })
}

/// A coloring of `C_n` (vertex `i` adjacent to `i ± 1 mod n`) with exactly
/// `τ_t(C_n)` colors.
pub fn color_cycle(n: usize, t: usize) -> Result<Coloring, ConstructionError> {
    at_least("cycle length", n, 3)?;
    let table = block_table(t).ok_or(ConstructionError::UnsupportedTone(t))?;
    let coloring = match stored_cycle(n, t) {
        Some(c) => c,
        None => {
            let parts = decompose(n, &table.lengths()).ok_or(ConstructionError::Stuck(0))?;
            let labels = table.concatenate(&parts).expect("decomposition uses table lengths");
            Coloring::from_labels(t, table.k(), labels)?
        }
    };
    let g = Graph::cycle(n)?;
    if !is_valid(&g, &coloring) {
        return Err(ConstructionError::Stuck(0));
    }
    Ok(coloring)
}
