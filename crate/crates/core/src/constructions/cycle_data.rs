//! Cycle colorings stored as data: the concatenation blocks and the cycles
//! no block decomposition covers.
//!
//! Blocks for t = 3, 4, 5 and the colorings of C10, C13 (t = 3) and C9 (t = 5)
//! are published tables. The t = 2 blocks and the remaining small cycles come
//! from `examples/derive_fixtures.rs`. Everything here is re-verified on first
//! use.

use crate::coloring::Color;

pub(super) type RawLabels = &'static [&'static [Color]];

pub(super) struct Exceptional {
    pub t: usize,
    pub n: usize,
    pub k: usize,
    pub labels: RawLabels,
}

pub(super) const EXCEPTIONAL: &[Exceptional] = &[
    Exceptional { t: 2, n: 3, k: 6, labels: &[&[1, 2], &[3, 4], &[5, 6]] },
    Exceptional { t: 2, n: 4, k: 6, labels: &[&[1, 2], &[3, 4], &[1, 6], &[3, 5]] },
    Exceptional { t: 2, n: 7, k: 6, labels: &[&[1, 2], &[3, 4], &[1, 5], &[2, 3], &[5, 6], &[1, 4], &[3, 5]] },
    Exceptional { t: 3, n: 3, k: 9, labels: &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]] },
    Exceptional { t: 3, n: 4, k: 10, labels: &[&[1, 2, 3], &[4, 5, 6], &[1, 9, 10], &[4, 7, 8]] },
    Exceptional { t: 3, n: 5, k: 10, labels: &[&[1, 2, 3], &[4, 5, 6], &[1, 7, 9], &[2, 5, 10], &[4, 7, 8]] },
    Exceptional { t: 3, n: 7, k: 9, labels: &[&[1, 2, 3], &[4, 5, 6], &[1, 7, 8], &[2, 4, 9], &[3, 6, 7], &[1, 5, 9], &[4, 7, 8]] },
    Exceptional { t: 3, n: 10, k: 9, labels: &[&[1, 2, 3], &[4, 5, 6], &[1, 7, 8], &[3, 6, 9], &[4, 5, 8], &[2, 7, 9], &[3, 6, 8], &[2, 4, 5], &[1, 6, 9], &[5, 7, 8]] },
    Exceptional { t: 3, n: 13, k: 9, labels: &[&[1, 2, 3], &[4, 5, 6], &[1, 7, 8], &[3, 6, 9], &[4, 5, 8], &[2, 7, 9], &[3, 6, 8], &[4, 5, 9], &[2, 7, 8], &[3, 6, 9], &[2, 4, 5], &[1, 6, 8], &[5, 7, 9]] },
    Exceptional { t: 4, n: 3, k: 12, labels: &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[9, 10, 11, 12]] },
    Exceptional { t: 4, n: 4, k: 14, labels: &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 12, 13, 14], &[5, 9, 10, 11]] },
    Exceptional { t: 4, n: 5, k: 15, labels: &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 9, 12, 13], &[2, 6, 14, 15], &[5, 9, 10, 11]] },
    Exceptional { t: 4, n: 7, k: 13, labels: &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 9, 10, 12], &[2, 3, 5, 11], &[4, 8, 9, 13], &[1, 6, 7, 12], &[5, 9, 10, 11]] },
    Exceptional { t: 5, n: 3, k: 15, labels: &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[11, 12, 13, 14, 15]] },
    Exceptional { t: 5, n: 4, k: 18, labels: &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 15, 16, 17, 18], &[6, 11, 12, 13, 14]] },
    Exceptional { t: 5, n: 5, k: 20, labels: &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 15, 16, 17], &[2, 7, 18, 19, 20], &[6, 11, 12, 13, 14]] },
    Exceptional { t: 5, n: 6, k: 18, labels: &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 15, 16], &[3, 4, 9, 13, 18], &[2, 7, 8, 15, 17], &[6, 11, 12, 13, 14]] },
    Exceptional { t: 5, n: 7, k: 17, labels: &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 15, 16], &[2, 3, 6, 13, 17], &[4, 5, 9, 10, 11], &[1, 7, 8, 15, 17], &[6, 11, 12, 13, 14]] },
    Exceptional { t: 5, n: 9, k: 17, labels: &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[4, 5, 7, 9, 12], &[1, 8, 10, 11, 15], &[2, 4, 6, 13, 14], &[3, 7, 8, 12, 16], &[9, 11, 13, 15, 17]] },
];

pub(super) const BLOCKS_T2: &[RawLabels] = &[
    &[&[1, 2], &[3, 4], &[1, 5], &[2, 3], &[4, 5]],
    &[&[1, 2], &[3, 4], &[1, 5], &[2, 3], &[1, 4], &[3, 5]],
    &[&[1, 2], &[3, 4], &[1, 5], &[2, 3], &[1, 4], &[2, 5], &[1, 3], &[4, 5]],
    &[&[1, 2], &[3, 4], &[1, 5], &[2, 3], &[1, 4], &[2, 5], &[1, 3], &[2, 4], &[3, 5]],
];

pub(super) const BLOCKS_T3: &[RawLabels] = &[
    &[&[1, 2, 3], &[4, 5, 6], &[1, 7, 8], &[2, 3, 4], &[1, 5, 6], &[4, 7, 8]],
    &[&[1, 2, 3], &[4, 5, 6], &[1, 7, 8], &[2, 3, 4], &[5, 6, 8], &[1, 2, 7], &[3, 4, 5], &[6, 7, 8]],
    &[&[1, 2, 3], &[4, 5, 6], &[1, 7, 8], &[2, 3, 4], &[5, 6, 8], &[1, 4, 7], &[2, 3, 8], &[1, 5, 6], &[4, 7, 8]],
    &[&[1, 2, 3], &[4, 5, 6], &[1, 7, 8], &[2, 3, 4], &[5, 6, 8], &[1, 2, 7], &[3, 4, 6], &[5, 7, 8], &[1, 2, 6], &[3, 4, 5], &[6, 7, 8]],
];

pub(super) const BLOCKS_T4: &[RawLabels] = &[
    &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 9, 10, 11], &[2, 3, 5, 12], &[4, 6, 7, 9], &[8, 10, 11, 12]],
    &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 9, 10, 11], &[2, 3, 5, 12], &[4, 7, 8, 11], &[1, 3, 6, 10], &[2, 5, 8, 9], &[7, 10, 11, 12]],
    &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 9, 10, 11], &[2, 3, 5, 12], &[4, 7, 8, 11], &[3, 6, 9, 10], &[1, 4, 5, 12], &[2, 7, 8, 10], &[6, 9, 11, 12]],
    &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 9, 10, 11], &[2, 3, 5, 12], &[4, 7, 8, 11], &[6, 9, 10, 12], &[1, 3, 5, 11], &[2, 4, 8, 12], &[3, 6, 7, 10], &[5, 9, 11, 12]],
    &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 9, 10, 11], &[2, 3, 5, 12], &[1, 4, 6, 7], &[5, 8, 9, 10], &[2, 3, 7, 11], &[4, 6, 8, 12], &[1, 3, 5, 10], &[2, 6, 7, 9], &[8, 10, 11, 12]],
    &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[1, 9, 10, 11], &[2, 3, 5, 12], &[4, 7, 8, 11], &[6, 9, 10, 12], &[1, 3, 5, 11], &[2, 7, 8, 12], &[4, 9, 10, 11], &[3, 5, 6, 12], &[1, 2, 8, 11], &[4, 6, 7, 10], &[5, 9, 11, 12]],
];

pub(super) const BLOCKS_T5: &[RawLabels] = &[
    &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[4, 5, 9, 10, 14], &[1, 3, 7, 8, 13], &[2, 6, 10, 11, 12], &[9, 13, 14, 15, 16]],
    &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[4, 5, 9, 10, 14], &[7, 8, 12, 13, 16], &[1, 5, 6, 11, 15], &[2, 3, 9, 10, 16], &[4, 7, 8, 11, 14], &[6, 12, 13, 15, 16]],
    &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[4, 5, 7, 8, 11], &[1, 6, 9, 10, 14], &[7, 12, 13, 15, 16], &[2, 3, 5, 8, 14], &[1, 4, 7, 10, 11], &[2, 6, 9, 12, 13], &[8, 11, 14, 15, 16]],
    &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[1, 4, 5, 7, 8], &[6, 9, 10, 11, 12], &[1, 2, 3, 13, 14], &[6, 7, 8, 15, 16], &[1, 4, 5, 11, 12], &[2, 3, 6, 9, 10], &[1, 7, 8, 13, 14], &[6, 11, 12, 15, 16]],
    &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[4, 5, 9, 10, 13], &[1, 7, 8, 11, 15], &[2, 6, 10, 12, 14], &[3, 4, 7, 13, 16], &[5, 9, 10, 11, 15], &[1, 2, 8, 12, 16], &[4, 5, 6, 7, 14], &[3, 8, 10, 11, 13], &[9, 12, 14, 15, 16]],
    &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[4, 5, 9, 10, 13], &[1, 7, 8, 11, 15], &[2, 6, 10, 12, 14], &[3, 4, 7, 13, 16], &[5, 9, 10, 11, 15], &[1, 2, 8, 12, 16], &[3, 5, 6, 13, 14], &[1, 4, 7, 10, 15], &[2, 8, 9, 11, 14], &[6, 12, 13, 15, 16]],
    &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[4, 5, 9, 10, 14], &[7, 8, 12, 13, 16], &[1, 6, 11, 14, 15], &[2, 3, 9, 10, 16], &[4, 5, 12, 13, 15], &[7, 8, 11, 14, 16], &[1, 6, 9, 10, 15], &[2, 3, 12, 13, 16], &[4, 5, 8, 10, 14], &[1, 7, 9, 11, 13], &[6, 12, 14, 15, 16]],
    &[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10], &[1, 11, 12, 13, 14], &[2, 3, 6, 15, 16], &[4, 5, 9, 10, 13], &[1, 7, 8, 11, 15], &[2, 6, 10, 12, 14], &[3, 4, 7, 13, 16], &[5, 9, 10, 11, 15], &[1, 2, 8, 12, 16], &[3, 5, 6, 13, 14], &[1, 4, 7, 10, 15], &[3, 8, 9, 11, 16], &[2, 5, 12, 14, 15], &[1, 3, 6, 10, 13], &[4, 7, 9, 11, 14], &[8, 12, 13, 15, 16]],
];
