//! Slow reference implementations for validating the main algorithm.
//!
//! Nothing here is used by [`crate::decide`]. The reachability routines below
//! propagate from a *single* start point and never look at reach functions,
//! so they give an independent check of the pointer passes.

use crate::error::{FrechetError, Result};
use crate::freespace::{build_boundary_grid, BoundaryGrid};
use crate::geometry::{check_dim, curve_point, dist2, ClosedCurve, Interval};

/// Points sampled uniformly in parameter along a closed curve.
#[derive(Debug, Clone)]
pub struct SampledCurve {
    points: Vec<Vec<f64>>,
    spacing: f64,
}

impl SampledCurve {
    /// `samples_per_edge` points per edge at parameters `k / samples_per_edge`,
    /// so every vertex is sampled. Consecutive samples are at most
    /// `max_edge_length / samples_per_edge` apart.
    pub fn from_curve(curve: &ClosedCurve, samples_per_edge: usize) -> Result<Self> {
        if samples_per_edge == 0 {
            return Err(FrechetError::EmptyInput("samples per edge"));
        }
        let total = curve.len() * samples_per_edge;
        let points = (0..total)
            .map(|k| {
                let t = k as f64 / samples_per_edge as f64;
                curve_point(curve, t).map(|p| p.coords().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            points,
            spacing: curve.max_edge_length() / samples_per_edge as f64,
        })
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Upper bound on the distance between consecutive samples.
    pub fn spacing(&self) -> f64 {
        self.spacing
    }
}

/// Discrete Fréchet distance between the closed sample sequences, minimized
/// over all cyclic shifts of `q`.
///
/// For shift `s` the sequences `p_0 .. p_{S-1}, p_0` and
/// `q_s .. q_{s+T-1}, q_s` are coupled by the usual dynamic program.
/// `O(S * T^2)` time.
pub fn discrete_frechet_cyclic(p: &SampledCurve, q: &SampledCurve) -> Result<f64> {
    if p.is_empty() || q.is_empty() {
        return Err(FrechetError::EmptyInput("sampled curve"));
    }
    check_dim(p.points[0].len(), q.points[0].len())?;
    let (s_len, t_len) = (p.len(), q.len());
    let dist: Vec<f64> = p
        .points
        .iter()
        .flat_map(|a| q.points.iter().map(move |b| dist2(a, b).sqrt()))
        .collect();
    let d = |l: usize, k: usize| dist[(l % s_len) * t_len + (k % t_len)];

    let mut best = f64::INFINITY;
    let mut prev = vec![0.0; t_len + 1];
    let mut cur = vec![0.0; t_len + 1];
    for shift in 0..t_len {
        let start = d(0, shift);
        if start >= best {
            continue;
        }
        prev[0] = start;
        for k in 1..=t_len {
            prev[k] = prev[k - 1].max(d(0, shift + k));
        }
        let mut pruned = false;
        for l in 1..=s_len {
            cur[0] = prev[0].max(d(l, shift));
            let mut row_min = cur[0];
            for k in 1..=t_len {
                let reach = prev[k].min(cur[k - 1]).min(prev[k - 1]);
                cur[k] = reach.max(d(l, shift + k));
                row_min = row_min.min(cur[k]);
            }
            std::mem::swap(&mut prev, &mut cur);
            if row_min >= best {
                pruned = true;
                break;
            }
        }
        if !pruned {
            best = best.min(prev[t_len]);
        }
    }
    Ok(best)
}

/// Top-edge reach (`T(i, n)` for `i in 1..=cols`, index `i - 1`) of the set of
/// points reachable by a monotone path from the single point `(u, 0)`.
#[allow(clippy::needless_range_loop)]
pub fn reach_from_bottom_point(grid: &BoundaryGrid, u: f64) -> Vec<Interval> {
    let (cols, rows) = (grid.cols(), grid.rows());
    // below[i] is the reachable part of the horizontal edge under the current row.
    let mut below = vec![Interval::EMPTY; cols + 1];

    // Along the bottom side the path can only move right through free points.
    let mut started = false;
    let mut alive = false;
    for i in 1..=cols {
        let left_end = (i - 1) as f64;
        if !started && left_end <= u && u <= i as f64 {
            started = true;
            alive = true;
        }
        if !alive {
            continue;
        }
        let from = u.max(left_end);
        let free = grid.free_t(i, 0);
        if free.contains(from) {
            below[i] = free.at_least(from);
            alive = free.hi() == Some(i as f64);
        } else {
            alive = false;
        }
    }

    // Left side: only from (0, 0) straight up.
    let mut left_side = vec![Interval::EMPTY; rows + 1];
    if u == 0.0 && grid.free_t(1, 0).contains(0.0) {
        for (j, slot) in left_side.iter_mut().enumerate().skip(1) {
            let free = grid.free_r(0, j);
            if !free.contains((j - 1) as f64) {
                break;
            }
            *slot = free;
            if !free.contains(j as f64) {
                break;
            }
        }
    }

    for j in 1..=rows {
        let mut left = left_side[j];
        for i in 1..=cols {
            let bottom = below[i];
            let mut top = Interval::EMPTY;
            let mut right = Interval::EMPTY;
            if !left.is_empty() {
                top = grid.free_t(i, j);
            } else if let Some(a) = bottom.lo() {
                top = grid.free_t(i, j).at_least(a);
            }
            if !bottom.is_empty() {
                right = grid.free_r(i, j);
            } else if let Some(c) = left.lo() {
                right = grid.free_r(i, j).at_least(c);
            }
            below[i] = top;
            left = right;
        }
    }
    below.split_off(1)
}

/// Bottom-edge reach (`T(i, 0)`, index `i - 1`) of the set of points from
/// which the single point `(u, n)` is reachable, i.e. reachable from it by a
/// path going down and left.
pub fn reach_from_top_point(grid: &BoundaryGrid, u: f64) -> Vec<Interval> {
    let (cols, rows) = (grid.cols(), grid.rows());
    let mut above = vec![Interval::EMPTY; cols + 2];

    let mut started = false;
    let mut alive = false;
    for i in (1..=cols).rev() {
        let right_end = i as f64;
        if !started && (i - 1) as f64 <= u && u <= right_end {
            started = true;
            alive = true;
        }
        if !alive {
            continue;
        }
        let to = u.min(right_end);
        let free = grid.free_t(i, rows);
        if free.contains(to) {
            above[i] = free.at_most(to);
            alive = free.lo() == Some((i - 1) as f64);
        } else {
            alive = false;
        }
    }

    let mut right_side = vec![Interval::EMPTY; rows + 1];
    if u == cols as f64 && grid.free_t(cols, rows).contains(u) {
        for j in (1..=rows).rev() {
            let free = grid.free_r(cols, j);
            if !free.contains(j as f64) {
                break;
            }
            right_side[j] = free;
            if !free.contains((j - 1) as f64) {
                break;
            }
        }
    }

    for j in (1..=rows).rev() {
        let mut right = right_side[j];
        for i in (1..=cols).rev() {
            let top = above[i];
            let mut bottom = Interval::EMPTY;
            let mut left = Interval::EMPTY;
            if !right.is_empty() {
                bottom = grid.free_t(i, j - 1);
            } else if let Some(b) = top.hi() {
                bottom = grid.free_t(i, j - 1).at_most(b);
            }
            if !top.is_empty() {
                left = grid.free_r(i - 1, j);
            } else if let Some(d) = right.hi() {
                left = grid.free_r(i - 1, j).at_most(d);
            }
            above[i] = bottom;
            right = left;
        }
    }
    above[1..=cols].to_vec()
}

/// Whether `(u_bottom, 0)` and `(u_top, n)` are joined by a monotone path.
pub fn mutually_reachable(grid: &BoundaryGrid, u_bottom: f64, u_top: f64) -> bool {
    reach_from_bottom_point(grid, u_bottom)
        .iter()
        .any(|iv| iv.contains(u_top))
}

/// Largest `u*` with `(u*, 0)` reachable from `(u, n)`; `None` if none is.
pub fn naive_r_down_top(grid: &BoundaryGrid, u: f64) -> Option<f64> {
    reach_from_top_point(grid, u)
        .iter()
        .filter_map(|iv| iv.hi())
        .reduce(f64::max)
}

/// Largest `u*` with `(u*, n)` reachable from `(u, 0)`; `None` if none is.
pub fn naive_r_up_bottom(grid: &BoundaryGrid, u: f64) -> Option<f64> {
    reach_from_bottom_point(grid, u)
        .iter()
        .filter_map(|iv| iv.hi())
        .reduce(f64::max)
}

/// Candidate shifts for [`naive_closed_decide`]: every endpoint of a free
/// interval on a horizontal edge folded into `[0, m]`, the integers, the
/// midpoints between consecutive such values, and `grid_points + 1` uniform
/// points.
///
/// The set of valid shifts is a finite union of closed intervals whose
/// endpoints are among the folded endpoints, so a midpoint lands strictly
/// inside any component of positive length.
pub fn default_candidates(grid: &BoundaryGrid, grid_points: usize) -> Vec<f64> {
    let m = grid.period();
    let mf = m as f64;
    let mut vals: Vec<f64> = (0..=m).map(|k| k as f64).collect();
    for j in 0..=grid.rows() {
        for i in 1..=grid.cols() {
            if let Some((lo, hi)) = grid.free_t(i, j).bounds() {
                for e in [lo, hi] {
                    vals.push(if e > mf { e - mf } else { e });
                }
            }
        }
    }
    vals.retain(|v| (0.0..=mf).contains(v));
    vals.sort_by(f64::total_cmp);
    vals.dedup();
    let mids: Vec<f64> = vals.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    vals.extend(mids);
    if grid_points > 0 {
        vals.extend((0..=grid_points).map(|k| mf * k as f64 / grid_points as f64));
    }
    vals.sort_by(f64::total_cmp);
    vals.dedup();
    vals
}

/// Whether some candidate shift `u` has `(u, 0)` and `(u + m, n)` mutually
/// reachable. Exact up to the candidate set.
pub fn naive_closed_decide(
    x: &ClosedCurve,
    y: &ClosedCurve,
    eps: f64,
    candidates: &[f64],
) -> Result<bool> {
    let grid = build_boundary_grid(x, y, eps)?;
    naive_closed_decide_grid(&grid, candidates)
}

/// [`naive_closed_decide`] on a prebuilt doubled grid.
pub fn naive_closed_decide_grid(grid: &BoundaryGrid, candidates: &[f64]) -> Result<bool> {
    let mf = grid.period() as f64;
    if let Some(&bad) = candidates.iter().find(|u| !(0.0..=mf).contains(*u)) {
        return Err(FrechetError::ParameterOutOfRange { t: bad, max: mf });
    }
    Ok(candidates
        .iter()
        .any(|&u| mutually_reachable(grid, u, u + mf)))
}

/// [`naive_closed_decide`] with [`default_candidates`] (128 uniform points).
pub fn naive_decide(x: &ClosedCurve, y: &ClosedCurve, eps: f64) -> Result<bool> {
    let grid = build_boundary_grid(x, y, eps)?;
    let candidates = default_candidates(&grid, 128);
    naive_closed_decide_grid(&grid, &candidates)
}
