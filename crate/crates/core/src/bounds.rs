//! Closed-form lower and upper bounds on the t-tone chromatic number, and
//! machine-checkable lower-bound certificates.
//!
//! Every "ceiling of a square root" bound is computed as the least integer
//! satisfying the binomial inequality it comes from, so no floating point is
//! involved anywhere.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CertificateKind {
    /// `K_{1,Δ}` needs `C(k-2, 2) >= Δ` (2-tone only).
    Star,
    /// A 4-cycle subgraph forces `4t - 2`.
    C4Subgraph,
    /// A geodesic path on `n` vertices forces the path formula.
    PathFormula,
    /// Color-multiplicity counting on `C_n`, `t = 3`, `n - 1 = 3s` with `s in {3, 4}`.
    CycleCountingT3,
    /// Integer-infeasibility of the color-multiplicity system for `C_9`, `t = 5`, `k = 16`.
    C9T5Counting,
}

/// A lower bound `bound <= τ_t(G)` together with the parameters that
/// determine it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub parameters: BTreeMap<String, u64>,
    pub bound: u64,
}

impl Certificate {
    fn new(kind: CertificateKind, parameters: &[(&str, u64)], bound: u64) -> Self {
        Certificate {
            kind,
            parameters: parameters.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            bound,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("the P2 x P3 formula 6t - 10 holds only for t >= 5, got t = {0}")]
    ToneTooSmall(u64),
}

/// `C(x, 2)`, zero below 2.
pub fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn least_k(from: u64, pred: impl Fn(u64) -> bool) -> u64 {
    let mut k = from;
    while !pred(k) {
        k += 1;
    }
    k
}

/// `⌈√(2Δ + 1/4) + 5/2⌉`, the least `k` with `C(k-2, 2) >= Δ`.
pub fn star_lower(max_degree: u64) -> u64 {
    // binary search keeps this fast for huge Δ
    let (mut lo, mut hi) = (2u64, 4 + 2 * (max_degree as f64).sqrt() as u64 + 2);
    while !(binom2(hi - 2) >= max_degree) {
        hi *= 2;
    }
    while lo < hi {
        let mid = (lo + hi) / 2;
        if binom2(mid - 2) >= max_degree {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// `τ_t(P_n) = Σ_{i<n} max(0, t - C(i, 2))`.
pub fn path_tau(n: u64, t: u64) -> u64 {
    (0..n).map(|i| t.saturating_sub(binom2(i))).sum()
}

/// `τ_t(C_4) = 4t - 2`.
pub fn c4_lower(t: u64) -> u64 {
    4 * t - 2
}

/// `τ_t(P_2 □ P_3) = 6t - 10`, valid for `t >= 5`.
pub fn p2p3_lower(t: u64) -> Result<u64, BoundsError> {
    if t < 5 {
        return Err(BoundsError::ToneTooSmall(t));
    }
    Ok(6 * t - 10)
}

/// Counting certificate that `τ_3(C_n) >= 9`.
///
/// With `n = 3s + 1` and eight colors, the `3n` color slots force at least
/// `2s + 6` same-color pairs at distance 2, but `C_n` has only `n = 3s + 1`
/// such pairs and each may share one color. Applies for `s in {3, 4}`; the
/// distance-2 pair count `n` needs `n >= 5`, and `n = 4, 7` are settled by
/// direct search instead.
pub fn cycle_counting_t3(n: u64) -> Option<Certificate> {
    if n < 8 || !(n - 1).is_multiple_of(3) {
        return None;
    }
    let s = (n - 1) / 3;
    let forced = 2 * s + 6;
    let pairs = 3 * s + 1;
    (forced > pairs).then(|| {
        Certificate::new(
            CertificateKind::CycleCountingT3,
            &[("n", n), ("t", 3), ("s", s), ("forced_pairs", forced), ("distance2_pairs", pairs)],
            9,
        )
    })
}

/// Nonnegative `(s1, s2, s3', s3'', s4)` with
/// `s1+s2+s3'+s3''+s4 = 16`, `s1+2s2+3(s3'+s3'')+4s4 = 45`,
/// `3s4+s3' <= distance2_cap` and `s3'+3s3'' <= 18`.
///
/// `s_i` counts colors used on exactly `i` vertices of a 5-tone 16-coloring
/// of `C_9`; `s3'` (resp. `s3''`) those used on three vertices with (resp.
/// without) a pair at distance 2. The genuine cap is 9, one shared color per
/// distance-2 pair.
pub fn c9_t5_tuples(distance2_cap: u64) -> Vec<[u64; 5]> {
    let mut out = Vec::new();
    for s1 in 0..=16u64 {
        for s2 in 0..=16 - s1 {
            for s3a in 0..=16 - s1 - s2 {
                for s3b in 0..=16 - s1 - s2 - s3a {
                    let s4 = 16 - s1 - s2 - s3a - s3b;
                    let slots = s1 + 2 * s2 + 3 * (s3a + s3b) + 4 * s4;
                    if slots == 45 && 3 * s4 + s3a <= distance2_cap && s3a + 3 * s3b <= 18 {
                        out.push([s1, s2, s3a, s3b, s4]);
                    }
                }
            }
        }
    }
    out
}

/// Certificate that `τ_5(C_9) >= 17`, established by exhausting
/// [`c9_t5_tuples`] with the true cap.
pub fn c9_t5_counting() -> Certificate {
    let feasible = c9_t5_tuples(9);
    assert!(feasible.is_empty(), "C9 counting system unexpectedly feasible: {:?}", feasible);
    Certificate::new(
        CertificateKind::C9T5Counting,
        &[("n", 9), ("t", 5), ("k", 16), ("color_slots", 45), ("feasible_tuples", 0)],
        17,
    )
}

/// Lower and upper bounds on `τ_2(H_t)`: the least `k` with `C(k,2) >= 3t`,
/// and the least `k` with `C(k,2) - C(6,2) >= 3t`.
pub fn h_t_bounds(t: u64) -> (u64, u64) {
    let lower = least_k(2, |k| binom2(k) >= 3 * t);
    let upper = least_k(2, |k| binom2(k) >= 3 * t + 15);
    (lower, upper)
}

/// `⌈(2 + √2)Δ⌉`: greedy 2-tone coloring never gets stuck with this many colors.
pub fn greedy_2tone_upper(max_degree: u64) -> u64 {
    // least c >= 2Δ with (c - 2Δ)^2 >= 2Δ^2
    let d = max_degree as u128;
    let mut extra = ((2.0f64).sqrt() * max_degree as f64) as u128;
    extra = extra.saturating_sub(2);
    while extra * extra < 2 * d * d {
        extra += 1;
    }
    (2 * d + extra) as u64
}

/// `k t + ⌈k t² Δ^{1 - 1/t}⌉` for a `k`-degenerate graph, `k >= 2`.
pub fn degenerate_upper(degeneracy: u64, t: u64, max_degree: u64) -> u64 {
    assert!(t >= 1);
    // c = least integer with c^t >= (k t^2)^t Δ^(t-1)
    let base = (degeneracy * t * t) as u128;
    let target = base.pow(t as u32) * (max_degree as u128).pow(t as u32 - 1);
    let mut c: u128 = 0;
    while c.pow(t as u32) < target {
        c += 1;
    }
    degeneracy * t + c as u64
}

/// `max(7, ⌈√(2Δ + 1/4) + 5/2⌉)`, the palette for graphs with `mad < 12/5`.
pub fn sparse_upper(max_degree: u64) -> u64 {
    star_lower(max_degree).max(7)
}

/// `⌊√(2Δ + 4.25) + 5.5⌋`, the least `k` with `C(k-4, 2) > Δ + 2`.
pub fn outerplanar_upper(max_degree: u64) -> u64 {
    least_k(4, |k| binom2(k - 4) > max_degree + 2)
}

/// `max(41, ⌊√(4Δ + 50.25) + 11.5⌋)`; the second term is the least `k` with
/// `C(k-10, 2) > 2Δ + 25`.
pub fn planar_upper(max_degree: u64) -> u64 {
    least_k(10, |k| binom2(k - 10) > 2 * max_degree + 25).max(41)
}

/// Every certificate that applies to `g` for tone `t`.
pub fn applicable_certificates(g: &Graph, t: u64) -> Vec<Certificate> {
    let mut out = Vec::new();
    let delta = g.max_degree() as u64;
    if t == 2 {
        out.push(Certificate::new(
            CertificateKind::Star,
            &[("max_degree", delta)],
            star_lower(delta),
        ));
    }
    if g.has_four_cycle() {
        out.push(Certificate::new(CertificateKind::C4Subgraph, &[("t", t)], c4_lower(t)));
    }
    let path_n = if g.n() == 0 { 0 } else { g.longest_geodesic() as u64 + 1 };
    out.push(Certificate::new(
        CertificateKind::PathFormula,
        &[("n", path_n), ("t", t)],
        path_tau(path_n, t),
    ));
    if let Some(order) = g.cycle_order() {
        let n = order.len() as u64;
        if t == 3 {
            out.extend(cycle_counting_t3(n));
        }
        if t == 5 && n == 9 {
            out.push(c9_t5_counting());
        }
    }
    out
}

/// The strongest applicable certificate (earliest kind on ties).
pub fn best_lower_bound(g: &Graph, t: u64) -> Certificate {
    applicable_certificates(g, t)
        .into_iter()
        .rev()
        .max_by_key(|c| c.bound)
        .expect("path certificate always applies")
}
