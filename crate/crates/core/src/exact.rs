//! Exact t-tone colorability by backtracking, and exact `τ_t`.
//!
//! Labels are `u128` bit sets (bit `c - 1` for color `c`), so palettes are
//! limited to 128 colors. Colors are introduced canonically: a label may use
//! any color already seen earlier in the search order, plus the next
//! `j` unused colors `M+1..=M+j`. This removes all palette symmetry, and in
//! particular pins the first vertex to `{1..t}`.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{best_lower_bound, Certificate};
use crate::coloring::{Color, Coloring, Label};
use crate::graph::Graph;

/// Largest palette the bit-set representation supports.
pub const MAX_PALETTE: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Search-tree nodes (label assignments) before giving up.
    pub max_nodes: u64,
    pub wall_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes, wall_limit: None }
    }

    pub fn with_wall_limit(mut self, limit: Duration) -> Self {
        self.wall_limit = Some(limit);
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::nodes(200_000_000)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("need 1 <= t <= k, got t = {t}, k = {k}")]
    BadParameters { t: usize, k: usize },
    #[error("palette {0} exceeds the supported maximum of 128 colors")]
    PaletteTooLarge(usize),
    #[error("the empty graph has no t-tone chromatic number to search for")]
    EmptyGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Colorable(Coloring),
    /// The search space was exhausted.
    Infeasible,
    Timeout,
}

/// Decides whether `g` has a `t`-tone `k`-coloring.
///
/// The witness is the first coloring in the canonical search order, so it
/// does not depend on the number of worker threads.
pub fn exact_decide(g: &Graph, t: usize, k: usize, budget: SearchBudget) -> Result<Decision, ExactError> {
    if t == 0 || k < t {
        return Err(ExactError::BadParameters { t, k });
    }
    if k > MAX_PALETTE {
        return Err(ExactError::PaletteTooLarge(k));
    }
    let problem = Problem::new(g, t, k);
    let control = Control::new(budget);
    let outcome = problem.solve(&control);
    Ok(match outcome {
        Outcome::Found(masks) => Decision::Colorable(problem.to_coloring(&masks)),
        Outcome::Exhausted => Decision::Infeasible,
        Outcome::Timeout | Outcome::Aborted => Decision::Timeout,
    })
}

/// Why `τ_t(G) > value - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LowerCertificate {
    /// A closed-form bound already excludes `value - 1`.
    Bound { certificate: Certificate },
    /// Exhaustive search found no `k`-coloring.
    Exhausted { k: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TauStatus {
    Resolved,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauResult {
    pub t: u64,
    /// `τ_t(G)`, when resolved.
    pub value: Option<u64>,
    /// Largest palette size not excluded; equals `value` when resolved.
    pub lower: u64,
    pub lower_certificate: LowerCertificate,
    pub status: TauStatus,
    /// A `value`-coloring witness, when resolved.
    pub coloring: Option<Coloring>,
}

impl TauResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tau result serializes")
    }
}

/// Exact `τ_t(G)`: starts at the best certified lower bound and increments
/// `k` until a coloring is found. The budget applies to each `k` separately.
pub fn tau(g: &Graph, t: usize, budget: SearchBudget) -> Result<TauResult, ExactError> {
    if g.n() == 0 {
        return Err(ExactError::EmptyGraph);
    }
    if t == 0 {
        return Err(ExactError::BadParameters { t, k: 0 });
    }
    let certificate = best_lower_bound(g, t as u64);
    let start = (certificate.bound as usize).max(t);
    let mut lower_certificate = LowerCertificate::Bound { certificate };
    let mut k = start;
    loop {
        match exact_decide(g, t, k, budget)? {
            Decision::Colorable(c) => {
                return Ok(TauResult {
                    t: t as u64,
                    value: Some(k as u64),
                    lower: k as u64,
                    lower_certificate,
                    status: TauStatus::Resolved,
                    coloring: Some(c),
                })
            }
            Decision::Infeasible => {
                lower_certificate = LowerCertificate::Exhausted { k: k as u64 };
                k += 1;
            }
            Decision::Timeout => {
                return Ok(TauResult {
                    t: t as u64,
                    value: None,
                    lower: k as u64,
                    lower_certificate,
                    status: TauStatus::Timeout,
                    coloring: None,
                })
            }
        }
    }
}

enum Outcome {
    Found(Vec<u128>),
    Exhausted,
    Timeout,
    /// Cut off because an earlier sibling subtree already succeeded.
    Aborted,
}

struct Control {
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    timed_out: AtomicBool,
    best: AtomicUsize,
}

impl Control {
    fn new(budget: SearchBudget) -> Self {
        Control {
            nodes: AtomicU64::new(0),
            max_nodes: budget.max_nodes,
            deadline: budget.wall_limit.map(|d| Instant::now() + d),
            timed_out: AtomicBool::new(false),
            best: AtomicUsize::new(usize::MAX),
        }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.timed_out.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over = used > self.max_nodes
            || (used.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d));
        if over {
            self.timed_out.store(true, Ordering::Relaxed);
        }
        !over
    }
}

struct Problem {
    t: usize,
    k: usize,
    /// Vertices in search order.
    order: Vec<usize>,
    /// Per position: earlier positions at distance 1.
    adjacent: Vec<Vec<usize>>,
    /// Per position: earlier positions at distance `2..=t` with cap `d - 1`.
    capped: Vec<Vec<(usize, u32)>>,
    /// Per position: later positions at distance 1 (for forward checking).
    later_adjacent: Vec<Vec<usize>>,
}

impl Problem {
    fn new(g: &Graph, t: usize, k: usize) -> Self {
        let order = search_order(g);
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let n = g.n();
        let mut adjacent = vec![Vec::new(); n];
        let mut capped = vec![Vec::new(); n];
        let mut later_adjacent = vec![Vec::new(); n];
        for (i, &v) in order.iter().enumerate() {
            for (w, d) in g.ball(v, t) {
                let j = pos[w];
                if j < i {
                    if d == 1 {
                        adjacent[i].push(j);
                    } else {
                        capped[i].push((j, d as u32 - 1));
                    }
                } else if d == 1 {
                    later_adjacent[i].push(j);
                }
            }
            adjacent[i].sort_unstable();
            capped[i].sort_unstable();
            later_adjacent[i].sort_unstable();
        }
        Problem { t, k, order, adjacent, capped, later_adjacent }
    }

    fn to_coloring(&self, masks: &[u128]) -> Coloring {
        let mut c = Coloring::new(self.t, self.k, self.order.len()).expect("parameters checked");
        for (i, &mask) in masks.iter().enumerate() {
            let colors: Vec<Color> = (0..128).filter(|b| mask >> b & 1 == 1).map(|b| b as Color + 1).collect();
            c.assign(self.order[i], Label::new(colors, self.order[i]).expect("distinct colors"))
                .expect("label fits palette");
        }
        c
    }

    fn solve(&self, control: &Control) -> Outcome {
        let n = self.order.len();
        if n == 0 {
            return Outcome::Found(Vec::new());
        }
        let mut state = State { masks: vec![0; n], max_used: vec![0; n + 1] };
        let first = self.candidates(&state, 0);
        debug_assert_eq!(first.len(), 1);
        if !control.tick() {
            return Outcome::Timeout;
        }
        state.place(0, first[0]);
        if n == 1 {
            return Outcome::Found(state.masks);
        }
        let second = self.candidates(&state, 1);
        let results: Vec<Outcome> = second
            .par_iter()
            .enumerate()
            .map(|(index, &label)| {
                if control.best.load(Ordering::Relaxed) < index {
                    return Outcome::Aborted;
                }
                if !control.tick() {
                    return Outcome::Timeout;
                }
                let mut local = state.clone();
                local.place(1, label);
                if !self.forward_ok(&local, 1) {
                    return Outcome::Exhausted;
                }
                let out = self.descend(&mut local, 2, index, control);
                if let Outcome::Found(_) = out {
                    control.best.fetch_min(index, Ordering::Relaxed);
                }
                out
            })
            .collect();
        let mut any_timeout = false;
        for out in results {
            match out {
                Outcome::Found(masks) => return Outcome::Found(masks),
                Outcome::Timeout => any_timeout = true,
                // an aborted subtree always follows a successful one
                Outcome::Exhausted | Outcome::Aborted => {}
            }
        }
        if any_timeout {
            Outcome::Timeout
        } else {
            Outcome::Exhausted
        }
    }

    fn descend(&self, state: &mut State, i: usize, branch: usize, control: &Control) -> Outcome {
        if i == self.order.len() {
            return Outcome::Found(state.masks.clone());
        }
        if control.best.load(Ordering::Relaxed) < branch {
            return Outcome::Aborted;
        }
        let mut result = Outcome::Exhausted;
        self.for_each_candidate(state, i, &mut |label, state: &mut State| {
            if !control.tick() {
                result = Outcome::Timeout;
                return false;
            }
            state.place(i, label);
            if self.forward_ok(state, i) {
                match self.descend(state, i + 1, branch, control) {
                    Outcome::Exhausted => {}
                    other => {
                        result = other;
                        return false;
                    }
                }
            }
            true
        });
        state.masks[i] = 0;
        result
    }

    fn candidates(&self, state: &State, i: usize) -> Vec<u128> {
        let mut out = Vec::new();
        let mut scratch = state.clone();
        self.for_each_candidate(&mut scratch, i, &mut |label, _| {
            out.push(label);
            true
        });
        out
    }

    /// Enumerates canonical labels for position `i` in lexicographic order.
    /// `visit` returns false to stop.
    fn for_each_candidate(&self, state: &mut State, i: usize, visit: &mut dyn FnMut(u128, &mut State) -> bool) {
        let used = state.max_used[i];
        let mut forbidden = 0u128;
        for &j in &self.adjacent[i] {
            forbidden |= state.masks[j];
        }
        let old: Vec<u32> = (0..used).filter(|&b| forbidden >> b & 1 == 0).collect();
        let caps = &self.capped[i];
        let others: Vec<u128> = caps.iter().map(|&(j, _)| state.masks[j]).collect();
        let mut counts = vec![0u32; caps.len()];
        let mut frame = CandidateFrame {
            t: self.t,
            k: self.k as u32,
            used,
            old: &old,
            caps,
            others: &others,
            counts: &mut counts,
        };
        frame.run(0, 0, 0, state, visit);
    }

    /// Every later neighbor still has `t` colors not used on its labelled
    /// neighbors.
    fn forward_ok(&self, state: &State, i: usize) -> bool {
        for &u in &self.later_adjacent[i] {
            let mut blocked = 0u128;
            for &j in &self.adjacent[u] {
                if j <= i {
                    blocked |= state.masks[j];
                }
            }
            if (self.k as u32).saturating_sub(blocked.count_ones()) < self.t as u32 {
                return false;
            }
        }
        true
    }
}

struct CandidateFrame<'a> {
    t: usize,
    k: u32,
    used: u32,
    old: &'a [u32],
    caps: &'a [(usize, u32)],
    others: &'a [u128],
    counts: &'a mut [u32],
}

impl CandidateFrame<'_> {
    /// Returns false when `visit` asked to stop.
    fn run(
        &mut self,
        from: usize,
        chosen: usize,
        mask: u128,
        state: &mut State,
        visit: &mut dyn FnMut(u128, &mut State) -> bool,
    ) -> bool {
        if chosen == self.t {
            return visit(mask, state);
        }
        let need = self.t - chosen;
        for idx in from..self.old.len() {
            let b = self.old[idx];
            let bit = 1u128 << b;
            let mut ok = true;
            let mut touched = 0;
            for (m, other) in self.others.iter().enumerate() {
                if other & bit != 0 {
                    self.counts[m] += 1;
                    touched = m + 1;
                    if self.counts[m] > self.caps[m].1 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && !self.run(idx + 1, chosen + 1, mask | bit, state, visit) {
                self.undo(bit, touched);
                return false;
            }
            self.undo(bit, touched);
        }
        // fresh colors used..used+need, which no earlier label contains
        if self.used + need as u32 <= self.k {
            let fresh = ((1u128 << need) - 1) << self.used;
            return visit(mask | fresh, state);
        }
        true
    }

    fn undo(&mut self, bit: u128, touched: usize) {
        for m in 0..touched {
            if self.others[m] & bit != 0 {
                self.counts[m] -= 1;
            }
        }
    }
}

#[derive(Clone)]
struct State {
    masks: Vec<u128>,
    /// `max_used[i]`: number of colors introduced before position `i`.
    max_used: Vec<u32>,
}

impl State {
    fn place(&mut self, i: usize, label: u128) {
        self.masks[i] = label;
        let top = 128 - label.leading_zeros();
        self.max_used[i + 1] = self.max_used[i].max(top);
    }
}

/// Breadth-first order from a maximum-degree vertex (smallest id on ties),
/// restarted the same way in each further component.
pub fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}
