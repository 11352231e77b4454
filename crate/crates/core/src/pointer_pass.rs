//! Forward and backward pointer passes.
//!
//! `r_down(u, v)` is the largest `u*` such that `(u, v)` is reachable from
//! `(u*, 0)` by a monotone path; on the bottom side it is the identity.
//! `r_up(u, v)` is the largest `u*` such that `(u, v)` is reachable from
//! `(u*, n)`.
//!
//! On a horizontal edge `r_down` is piecewise constant except for at most one
//! piece where it is the identity; on a vertical edge it is constant. For
//! `r_up` the roles flip: constant on horizontal edges, piecewise constant on
//! vertical ones. Each piecewise function is held in a [`ReachDeque`] and
//! updated cell by cell with pushes at either end and cuts. Every step pushes
//! at most three triples, so a pass over the `2mn` cells pushes at most `6mn`.
//!
//! Pieces are closed intervals; neighbouring pieces share their endpoint. At a
//! shared endpoint the larger of the two values is the true one and the other
//! is an underestimate, which the final test tolerates because it only asks
//! whether *some* piece admits a shift.

use std::collections::VecDeque;

use serde::Serialize;

use crate::freespace::{column_buffers, row_buffers, ReachSource};
use crate::geometry::Interval;

/// One piece `(beg, end, val)` of a reach function.
///
/// Forward pieces live on the `u` axis: `val == end` encodes the identity
/// `r(u) = u`, otherwise `val <= beg` is a constant. Backward pieces have
/// `beg`/`end` on the `v` axis and a constant `u` value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReachTriple {
    pub beg: f64,
    pub end: f64,
    pub val: f64,
}

impl ReachTriple {
    pub fn new(beg: f64, end: f64, val: f64) -> Self {
        debug_assert!(beg <= end, "triple ({beg}, {end}, {val}) is reversed");
        Self { beg, end, val }
    }

    /// Whether a forward triple encodes the identity.
    pub fn is_identity(&self) -> bool {
        self.val == self.end
    }

    /// Value of a forward triple at `u`.
    pub fn forward_value(&self, u: f64) -> f64 {
        if self.is_identity() {
            u
        } else {
            self.val
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// `u` intervals, identity pieces allowed, values non-decreasing.
    Forward,
    /// `v` intervals, constants only, values non-increasing.
    Backward,
}

/// Sorted deque of [`ReachTriple`]s with push/pop instrumentation.
#[derive(Debug, Clone)]
pub struct ReachDeque {
    triples: VecDeque<ReachTriple>,
    mode: Mode,
    pushes: u64,
    pops: u64,
    seeds: u64,
}

impl ReachDeque {
    pub fn forward() -> Self {
        Self::with_mode(Mode::Forward)
    }

    pub fn backward() -> Self {
        Self::with_mode(Mode::Backward)
    }

    fn with_mode(mode: Mode) -> Self {
        Self {
            triples: VecDeque::new(),
            mode,
            pushes: 0,
            pops: 0,
            seeds: 0,
        }
    }

    /// Deque built from `triples` without touching the counters.
    pub fn forward_from(triples: &[ReachTriple]) -> Self {
        let mut q = Self::forward();
        q.triples.extend(triples.iter().copied());
        debug_assert!(q.is_well_formed());
        q
    }

    pub fn backward_from(triples: &[ReachTriple]) -> Self {
        let mut q = Self::backward();
        q.triples.extend(triples.iter().copied());
        debug_assert!(q.is_well_formed());
        q
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn pushes(&self) -> u64 {
        self.pushes
    }

    pub fn pops(&self) -> u64 {
        self.pops
    }

    /// Initial pushes made before any cell step.
    pub fn seeds(&self) -> u64 {
        self.seeds
    }

    pub fn iter(&self) -> impl Iterator<Item = &ReachTriple> {
        self.triples.iter()
    }

    pub fn to_vec(&self) -> Vec<ReachTriple> {
        self.triples.iter().copied().collect()
    }

    /// `(beg of first, end of last)`.
    pub fn span(&self) -> Option<(f64, f64)> {
        Some((self.triples.front()?.beg, self.triples.back()?.end))
    }

    fn seed(&mut self, t: ReachTriple) {
        debug_assert!(self.triples.is_empty());
        self.triples.push_back(t);
        self.seeds += 1;
    }

    pub fn push_front(&mut self, t: ReachTriple) {
        if let Some(first) = self.triples.front() {
            debug_assert!(t.end <= first.beg, "{t:?} overlaps {first:?}");
            debug_assert!(self.ordered(&t, first), "{t:?} then {first:?}");
        }
        self.triples.push_front(t);
        self.pushes += 1;
    }

    pub fn push_back(&mut self, t: ReachTriple) {
        if let Some(last) = self.triples.back() {
            debug_assert!(last.end <= t.beg, "{last:?} overlaps {t:?}");
            debug_assert!(self.ordered(last, &t), "{last:?} then {t:?}");
        }
        self.triples.push_back(t);
        self.pushes += 1;
    }

    /// Reads the first triple. Accounted as remove and re-insert.
    pub fn peek_front(&mut self) -> Option<ReachTriple> {
        let t = *self.triples.front()?;
        self.pops += 1;
        self.pushes += 1;
        Some(t)
    }

    /// Reads the last triple. Accounted as remove and re-insert.
    pub fn peek_back(&mut self) -> Option<ReachTriple> {
        let t = *self.triples.back()?;
        self.pops += 1;
        self.pushes += 1;
        Some(t)
    }

    pub fn clear(&mut self) {
        self.pops += self.triples.len() as u64;
        self.triples.clear();
    }

    /// Drops everything left of `x` and truncates a straddling triple to
    /// `(x, end, val)`.
    ///
    /// A forward triple ending exactly at `x` is dropped when its successor
    /// starts at `x`: the successor carries the larger value there.
    pub fn cut_left(&mut self, x: f64) {
        while let Some(first) = self.triples.front() {
            let covered_by_next = self.mode == Mode::Forward
                && first.end <= x
                && self.triples.get(1).is_some_and(|next| next.beg <= x);
            if first.end < x || covered_by_next {
                self.triples.pop_front();
                self.pops += 1;
            } else {
                break;
            }
        }
        if let Some(first) = self.triples.front_mut() {
            if first.beg < x {
                first.beg = x;
                self.pops += 1;
                self.pushes += 1;
            }
        }
    }

    /// Drops everything right of `x` and truncates a straddling triple to
    /// `(beg, x, val)`, or to `(beg, x, x)` when it is a forward identity.
    ///
    /// A backward triple starting exactly at `x` is dropped when its
    /// predecessor ends at `x`: on vertical edges the lower piece carries the
    /// larger value there.
    pub fn cut_right(&mut self, x: f64) {
        while let Some(last) = self.triples.back() {
            let len = self.triples.len();
            let covered_by_prev = self.mode == Mode::Backward
                && last.beg >= x
                && len >= 2
                && self.triples[len - 2].end >= x;
            if last.beg > x || covered_by_prev {
                self.triples.pop_back();
                self.pops += 1;
            } else {
                break;
            }
        }
        let mode = self.mode;
        if let Some(last) = self.triples.back_mut() {
            if last.end > x {
                if mode == Mode::Forward && last.is_identity() {
                    last.val = x;
                }
                last.end = x;
                self.pops += 1;
                self.pushes += 1;
            }
        }
    }

    fn ordered(&self, left: &ReachTriple, right: &ReachTriple) -> bool {
        match self.mode {
            Mode::Forward => left.forward_value(left.end) <= right.forward_value(right.beg),
            Mode::Backward => left.val >= right.val,
        }
    }

    /// Full structural check: sorted, interiors disjoint, values monotone,
    /// forward triples identity or `val <= beg`. Linear in the length.
    pub fn is_well_formed(&self) -> bool {
        let shape_ok = self.triples.iter().all(|t| {
            t.beg <= t.end && (self.mode == Mode::Backward || t.is_identity() || t.val <= t.beg)
        });
        let order_ok = self
            .triples
            .iter()
            .zip(self.triples.iter().skip(1))
            .all(|(a, b)| a.end <= b.beg && self.ordered(a, b));
        shape_ok && order_ok
    }
}

/// Instrumentation for one pass.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PassStats {
    /// Pushes made during cell steps, truncations and peeks included.
    pub pushes: u64,
    /// Triples placed before the first step.
    pub seeds: u64,
    pub pops: u64,
    /// Cells processed.
    pub steps: u64,
    /// Largest deque length seen after any step.
    pub max_len: usize,
    /// Steps after which the deque exceeded its per-step length bound.
    pub bound_violations: u64,
}

impl PassStats {
    fn absorb(&mut self, q: &ReachDeque) {
        self.pushes += q.pushes;
        self.pops += q.pops;
        self.seeds += q.seeds;
    }

    fn record_len(&mut self, len: usize, bound: usize) {
        self.max_len = self.max_len.max(len);
        if len > bound {
            self.bound_violations += 1;
        }
    }
}

/// `r_down` on the top side: one partition per column `i in 1..=2m`.
#[derive(Debug, Clone)]
pub struct ForwardResult {
    /// `partitions[i - 1]` covers `g_down ∩ T(i, n)`.
    pub partitions: Vec<Vec<ReachTriple>>,
    pub stats: PassStats,
}

impl ForwardResult {
    /// `r_down(u, n)` for `u` on top edge `i`, if `(u, n)` is in `g_down`.
    pub fn value_at(&self, i: usize, u: f64) -> Option<f64> {
        self.partitions[i - 1]
            .iter()
            .filter(|t| t.beg <= u && u <= t.end)
            .map(|t| t.forward_value(u))
            .reduce(f64::max)
    }
}

/// `r_up` on the bottom side: one constant per column `i in 1..=2m`.
#[derive(Debug, Clone)]
pub struct BackwardResult {
    /// `bottom_values[i - 1]` is `r_up` on `g_up ∩ T(i, 0)`, `None` when that set is empty.
    pub bottom_values: Vec<Option<f64>>,
    /// `bottom_reach[i - 1]` is `g_up ∩ T(i, 0)`.
    pub bottom_reach: Vec<Interval>,
    pub stats: PassStats,
}

/// The four reachable edge sets of one cell.
#[derive(Debug, Clone, Copy)]
struct CellReach {
    bottom: Interval,
    left: Interval,
    top: Interval,
    right: Interval,
}

/// Left-to-right, bottom-to-top pass computing `r_down` on every top edge.
///
/// Columns are processed one at a time; `left_vals[j]` holds the constant
/// value of `r_down` on the right edge of the previous column in row `j`.
pub fn forward_pass(mut reach: impl ReachSource) -> ForwardResult {
    let (cols, rows) = (reach.cols(), reach.rows());
    let mut stats = PassStats::default();
    let mut partitions = Vec::with_capacity(cols);
    let (mut t, mut left_r) = column_buffers(rows);
    let mut right_r = left_r.clone();

    // Left side points are reachable only from (0, 0).
    reach.down_column(0, &mut t, &mut left_r);
    let mut left_vals: Vec<Option<f64>> = (0..=rows)
        .map(|j| (j >= 1 && !left_r[j].is_empty()).then_some(0.0))
        .collect();

    for i in 1..=cols {
        reach.down_column(i, &mut t, &mut right_r);
        let mut q = ReachDeque::forward();
        if let Some((a, b)) = t[0].bounds() {
            q.seed(ReachTriple::new(a, b, b));
        }
        for j in 1..=rows {
            let cell = CellReach {
                bottom: t[j - 1],
                left: left_r[j],
                top: t[j],
                right: right_r[j],
            };
            left_vals[j] = forward_step(&mut q, cell, left_vals[j]);
            stats.steps += 1;
            stats.record_len(q.len(), 2 * j + 1);
        }
        stats.absorb(&q);
        partitions.push(q.to_vec());
        std::mem::swap(&mut left_r, &mut right_r);
    }

    ForwardResult { partitions, stats }
}

/// Updates `q` from `r_down` on the bottom edge of a cell to `r_down` on its
/// top edge and returns the value on its right edge.
fn forward_step(q: &mut ReachDeque, cell: CellReach, left_val: Option<f64>) -> Option<f64> {
    let CellReach {
        bottom,
        left,
        top,
        right,
    } = cell;
    let left_val = || {
        debug_assert!(!left.is_empty());
        left_val.expect("left edge value consumed while the left edge is unreachable")
    };

    let Some((a, b)) = bottom.bounds() else {
        debug_assert!(q.is_empty());
        q.clear();
        if let Some((c, d)) = top.bounds() {
            q.push_back(ReachTriple::new(c, d, left_val()));
        }
        return (!right.is_empty()).then(left_val);
    };

    debug_assert_eq!(q.span(), Some((a, b)), "deque out of sync");
    // The value at b is the last triple's val, identity or not.
    let at_b = q.peek_back().expect("non-empty bottom edge").val;

    match top.bounds() {
        None => q.clear(),
        Some((c, d)) if c > b => {
            q.clear();
            q.push_back(ReachTriple::new(c, d, at_b));
        }
        Some((c, d)) if d < a => {
            q.clear();
            q.push_back(ReachTriple::new(c, d, left_val()));
        }
        Some((c, d)) => {
            if c < a {
                q.push_front(ReachTriple::new(c, a, left_val()));
            } else {
                q.cut_left(c);
            }
            if b < d {
                q.push_back(ReachTriple::new(b, d, at_b));
            } else {
                q.cut_right(d);
            }
            debug_assert_eq!(q.span(), Some((c, d)));
        }
    }

    (!right.is_empty()).then_some(at_b)
}

/// `r_up` on the top side from `top[i] = g_up ∩ T(i, n)`: the right end of the
/// maximal free run of the top side containing each point. `None` where the
/// top edge is not free. Indexed `1..=cols`.
pub fn top_side_values(top: &[Interval]) -> Vec<Option<f64>> {
    let cols = top.len() - 1;
    let mut vals = vec![None; cols + 2];
    for i in (1..=cols).rev() {
        let Some((_, hi)) = top[i].bounds() else {
            continue;
        };
        let continues = hi == i as f64 && i < cols && top[i + 1].lo() == Some(i as f64);
        vals[i] = if continues { vals[i + 1] } else { Some(hi) };
    }
    vals
}

/// Right-to-left, top-to-bottom pass computing `r_up` on every bottom edge.
///
/// Rows are processed one at a time; `top_vals[i]` holds the constant value
/// of `r_up` on the top edge of cell `(i, j)` for the current row `j`.
pub fn backward_pass(mut reach: impl ReachSource) -> BackwardResult {
    let (cols, rows) = (reach.cols(), reach.rows());
    let mut stats = PassStats::default();
    let (mut above, mut r) = row_buffers(cols);
    let mut below = above.clone();
    reach.up_top(&mut above);
    let mut top_vals = top_side_values(&above);

    for j in (1..=rows).rev() {
        reach.up_row(j, &mut below, &mut r);
        let mut q = ReachDeque::backward();
        // Right side points reach the top only along u = 2m.
        if let Some((a, b)) = r[cols].bounds() {
            q.seed(ReachTriple::new(a, b, cols as f64));
        }
        for i in (1..=cols).rev() {
            let cell = CellReach {
                bottom: below[i],
                left: r[i - 1],
                top: above[i],
                right: r[i],
            };
            top_vals[i] = backward_step(&mut q, cell, top_vals[i]);
            stats.steps += 1;
            stats.record_len(q.len(), 2 * (cols - i) + 3);
        }
        stats.absorb(&q);
        std::mem::swap(&mut above, &mut below);
    }

    BackwardResult {
        bottom_values: top_vals[1..=cols].to_vec(),
        bottom_reach: above[1..=cols].to_vec(),
        stats,
    }
}

/// Updates `q` from `r_up` on the right edge of a cell to `r_up` on its left
/// edge and returns the value on its bottom edge.
fn backward_step(q: &mut ReachDeque, cell: CellReach, top_val: Option<f64>) -> Option<f64> {
    let CellReach {
        bottom,
        left,
        top,
        right,
    } = cell;
    let top_val = || {
        debug_assert!(!top.is_empty());
        top_val.expect("top edge value consumed while the top edge is unreachable")
    };

    let Some((a, b)) = right.bounds() else {
        debug_assert!(q.is_empty());
        q.clear();
        if let Some((c, d)) = left.bounds() {
            q.push_back(ReachTriple::new(c, d, top_val()));
        }
        return (!bottom.is_empty()).then(top_val);
    };

    debug_assert_eq!(q.span(), Some((a, b)), "deque out of sync");
    let at_a = q.peek_front().expect("non-empty right edge").val;

    match left.bounds() {
        None => q.clear(),
        Some((c, d)) if c > b => {
            q.clear();
            q.push_back(ReachTriple::new(c, d, top_val()));
        }
        Some((c, d)) if d < a => {
            q.clear();
            q.push_back(ReachTriple::new(c, d, at_a));
        }
        Some((c, d)) => {
            if b < d {
                q.push_back(ReachTriple::new(b, d, top_val()));
            } else {
                q.cut_right(d);
            }
            if c < a {
                q.push_front(ReachTriple::new(c, a, at_a));
            } else {
                q.cut_left(c);
            }
            debug_assert_eq!(q.span(), Some((c, d)));
        }
    }

    (!bottom.is_empty()).then_some(at_a)
}
