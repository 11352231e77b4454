//! The final feasibility test, the witness shift, and bisection on `eps`.

use serde::Serialize;

use crate::error::{FrechetError, Result};
use crate::freespace::{build_boundary_grid, propagate_reach, BoundaryGrid, ReachGrid, ReachSweep};
use crate::geometry::{eps_upper_bound, ClosedCurve};
use crate::pointer_pass::{backward_pass, forward_pass, BackwardResult, ForwardResult, PassStats};

const MAX_BISECTION_STEPS: u32 = 200;

/// Outcome of one `δ(X, Y) <= eps` query.
#[derive(Debug, Clone, Serialize)]
pub struct DecisionReport {
    pub answer: bool,
    /// A shift `u in [0, m]` such that `(u, 0)` and `(u + m, n)` are mutually
    /// reachable. Present iff `answer`.
    pub witness_u: Option<f64>,
    pub eps: f64,
    pub m: usize,
    pub n: usize,
    pub forward: PassStats,
    pub backward: PassStats,
}

impl DecisionReport {
    pub fn pushes(&self) -> u64 {
        self.forward.pushes + self.backward.pushes
    }

    pub fn pops(&self) -> u64 {
        self.forward.pops + self.backward.pops
    }

    pub fn cells(&self) -> u64 {
        self.forward.steps + self.backward.steps
    }
}

/// Every intermediate structure of a decision, for rendering and debugging.
pub struct Analysis {
    pub grid: BoundaryGrid,
    pub reach: ReachGrid,
    pub forward: ForwardResult,
    pub backward: BackwardResult,
    pub report: DecisionReport,
}

/// Decides `δ(x, y) <= eps` in `O(mn)` time.
pub fn decide(x: &ClosedCurve, y: &ClosedCurve, eps: f64) -> Result<DecisionReport> {
    let grid = build_boundary_grid(x, y, eps)?;
    let (m, n) = (x.len(), y.len());
    if !grid.bottom_has_free_point() || !grid.top_has_free_point() {
        return Ok(DecisionReport {
            answer: false,
            witness_u: None,
            eps,
            m,
            n,
            forward: PassStats::default(),
            backward: PassStats::default(),
        });
    }
    // Reachable sets are streamed through both passes rather than stored.
    let forward = forward_pass(ReachSweep::new(&grid));
    let backward = backward_pass(ReachSweep::new(&grid));
    let witness_u = find_shift(m, &forward, &backward);
    Ok(DecisionReport {
        answer: witness_u.is_some(),
        witness_u,
        eps,
        m,
        n,
        forward: forward.stats,
        backward: backward.stats,
    })
}

/// Like [`decide`] but keeps the grids and pass results, and never exits early.
pub fn analyze(x: &ClosedCurve, y: &ClosedCurve, eps: f64) -> Result<Analysis> {
    let grid = build_boundary_grid(x, y, eps)?;
    let reach = propagate_reach(&grid);
    let forward = forward_pass(&reach);
    let backward = backward_pass(&reach);
    let m = x.len();
    let witness_u = find_shift(m, &forward, &backward);
    let report = DecisionReport {
        answer: witness_u.is_some(),
        witness_u,
        eps,
        m,
        n: y.len(),
        forward: forward.stats,
        backward: backward.stats,
    };
    Ok(Analysis {
        grid,
        reach,
        forward,
        backward,
        report,
    })
}

/// Looks for a column `i in 1..=m` and a piece of `r_down` on `T(i + m, n)`
/// admitting a shift `u` with
///
/// ```text
/// max(c_i, beg - m) <= min(d_i, end - m, r_up_i - m, val)
/// ```
///
/// where `[c_i, d_i] = g_up ∩ T(i, 0)` and `r_up_i` is `r_up` there, both
/// taken from the backward pass. For an
/// identity piece `val == end`, so `u <= val` holds automatically. Returns the
/// smallest admissible `u` of the first matching pair.
pub fn find_shift(m: usize, forward: &ForwardResult, backward: &BackwardResult) -> Option<f64> {
    let mf = m as f64;
    for i in 1..=m {
        let Some((c, d)) = backward.bottom_reach[i - 1].bounds() else {
            continue;
        };
        let r_up = backward.bottom_values[i - 1].expect("reachable bottom edge without r_up");
        for piece in &forward.partitions[i + m - 1] {
            let lo = c.max(piece.beg - mf);
            let hi = d.min(piece.end - mf).min(r_up - mf).min(piece.val);
            if lo <= hi {
                return Some(lo);
            }
        }
    }
    None
}

/// Result of [`distance`].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DistanceEstimate {
    /// Smallest `eps` found with a positive decision.
    pub distance: f64,
    /// Largest `eps` found with a negative decision (0 if none).
    pub lower: f64,
    pub iterations: u32,
}

/// `δ(x, y)` within `tol`, by bisection on `[0, eps_upper_bound(x, y)]`.
pub fn distance(x: &ClosedCurve, y: &ClosedCurve, tol: f64) -> Result<DistanceEstimate> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(FrechetError::InvalidTolerance(tol));
    }
    let mut hi = eps_upper_bound(x, y)?;
    let mut lo = 0.0;
    let steps = if hi > tol {
        ((hi / tol).log2().ceil() as u32).min(MAX_BISECTION_STEPS)
    } else {
        0
    };
    for _ in 0..steps {
        let mid = 0.5 * (lo + hi);
        if decide(x, y, mid)?.answer {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(DistanceEstimate {
        distance: hi,
        lower: lo,
        iterations: steps,
    })
}
