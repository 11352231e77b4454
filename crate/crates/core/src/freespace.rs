//! The doubled free-space diagram and its reachable sets.
//!
//! The diagram is `D = [0, 2m] x [0, n]`: the curve `X` is traversed twice
//! along the `u` axis so that every cyclic shift of `X` is a straight
//! sub-rectangle. Cell `(i, j)` is `[i-1, i] x [j-1, j]` for
//! `i in 1..=2m`, `j in 1..=n`. Edges are addressed as
//!
//! * `T(i, j)`: horizontal edge `[i-1, i] x {j}`, `i in 1..=2m`, `j in 0..=n`.
//!   `T(i, 0)` lies on the bottom side, `T(i, n)` on the top side.
//! * `R(i, j)`: vertical edge `{i} x [j-1, j]`, `i in 0..=2m`, `j in 1..=n`.
//!   `R(0, j)` lies on the left side, `R(2m, j)` on the right side.
//!
//! Intervals on `T` edges are absolute `u` coordinates, intervals on `R`
//! edges absolute `v` coordinates.

use crate::error::Result;
use crate::geometry::{check_dim, check_eps, segment_ball_params, ClosedCurve, Interval};

/// Dense table indexed by `(i, j)`, stored either column by column or row by
/// row so that the pass reading it walks memory sequentially.
#[derive(Clone)]
pub(crate) struct Table<T> {
    width: usize,
    height: usize,
    column_major: bool,
    data: Vec<T>,
}

impl<T: Copy> Table<T> {
    pub(crate) fn by_columns(width: usize, height: usize, fill: T) -> Self {
        Self {
            width,
            height,
            column_major: true,
            data: vec![fill; width * height],
        }
    }

    pub(crate) fn by_rows(width: usize, height: usize, fill: T) -> Self {
        Self {
            column_major: false,
            ..Self::by_columns(width, height, fill)
        }
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.width && j < self.height);
        if self.column_major {
            i * self.height + j
        } else {
            j * self.width + i
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> T {
        self.data[self.index(i, j)]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, value: T) {
        let k = self.index(i, j);
        self.data[k] = value;
    }
}

/// Free intervals on every cell edge of the diagram.
///
/// When built from curves the diagram has period `m`: columns `i` and `i + m`
/// carry the same free space (shifted by `m` on `T` edges). Only one period
/// is stored. Hand-built grids have no periodicity (`period == cols`).
#[derive(Clone)]
pub struct BoundaryGrid {
    cols: usize,
    rows: usize,
    period: usize,
    /// `T(i, j)` for `i in 1..=period` (index 0 unused), `j in 0..=rows`.
    free_t: Table<Interval>,
    /// `T` intervals for the mirrored columns `period+1..=2*period`, when periodic.
    free_t_mirror: Option<Table<Interval>>,
    /// `R(i, j)` for `i in 0..=period`, `j in 1..=rows` (row 0 unused).
    free_r: Table<Interval>,
}

impl BoundaryGrid {
    /// A grid with `cols` cell columns and `rows` cell rows, every edge empty.
    pub fn empty(cols: usize, rows: usize) -> Self {
        assert!(cols >= 1 && rows >= 1, "grid needs at least one cell");
        Self {
            cols,
            rows,
            period: cols,
            free_t: Table::by_columns(cols + 1, rows + 1, Interval::EMPTY),
            free_t_mirror: None,
            free_r: Table::by_columns(cols + 1, rows + 1, Interval::EMPTY),
        }
    }

    /// A grid where every edge is completely free.
    pub fn full(cols: usize, rows: usize) -> Self {
        let mut g = Self::empty(cols, rows);
        for j in 0..=rows {
            for i in 1..=cols {
                g.set_free_t(i, j, Interval::new((i - 1) as f64, i as f64));
            }
        }
        for j in 1..=rows {
            for i in 0..=cols {
                g.set_free_r(i, j, Interval::new((j - 1) as f64, j as f64));
            }
        }
        g
    }

    /// Number of cell columns (`2m` for a curve pair).
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of cell rows (`n`).
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Column period: `m` for a curve pair, `cols` for hand-built grids.
    pub fn period(&self) -> usize {
        self.period
    }

    #[inline]
    pub fn free_t(&self, i: usize, j: usize) -> Interval {
        debug_assert!((1..=self.cols).contains(&i) && j <= self.rows);
        if i > self.period {
            match &self.free_t_mirror {
                Some(t) => t.get(i - self.period, j),
                None => unreachable!("periodic grid without mirror"),
            }
        } else {
            self.free_t.get(i, j)
        }
    }

    #[inline]
    pub fn free_r(&self, i: usize, j: usize) -> Interval {
        debug_assert!(i <= self.cols && (1..=self.rows).contains(&j));
        if i > self.period {
            self.free_r.get(i - self.period, j)
        } else {
            self.free_r.get(i, j)
        }
    }

    /// Overwrites `T(i, j)`. Only valid on non-periodic (hand-built) grids.
    pub fn set_free_t(&mut self, i: usize, j: usize, iv: Interval) {
        assert!(self.period == self.cols, "periodic grids are immutable");
        assert!((1..=self.cols).contains(&i) && j <= self.rows);
        debug_assert!(iv.is_subset_of(&Interval::new((i - 1) as f64, i as f64)));
        self.free_t.set(i, j, iv);
    }

    /// Overwrites `R(i, j)`. Only valid on non-periodic (hand-built) grids.
    pub fn set_free_r(&mut self, i: usize, j: usize, iv: Interval) {
        assert!(self.period == self.cols, "periodic grids are immutable");
        assert!(i <= self.cols && (1..=self.rows).contains(&j));
        debug_assert!(iv.is_subset_of(&Interval::new((j - 1) as f64, j as f64)));
        self.free_r.set(i, j, iv);
    }

    /// Whether any point of the bottom side is free.
    pub fn bottom_has_free_point(&self) -> bool {
        (1..=self.cols).any(|i| !self.free_t(i, 0).is_empty())
    }

    /// Whether any point of the top side is free.
    pub fn top_has_free_point(&self) -> bool {
        (1..=self.cols).any(|i| !self.free_t(i, self.rows).is_empty())
    }
}

/// Maps a parameter interval on `[0, 1]` to absolute coordinates on
/// `[base, base + 1]`, keeping strictly interior parameters strictly interior
/// so that corner membership is decided only by the vertex test.
fn to_absolute(base: f64, iv: Interval) -> Interval {
    let Some((lo, hi)) = iv.bounds() else {
        return Interval::EMPTY;
    };
    let top = base + 1.0;
    let place = |t: f64| {
        if t <= 0.0 {
            return base;
        }
        if t >= 1.0 {
            return top;
        }
        (base + t).clamp(base.next_up(), top.next_down())
    };
    Interval::new(place(lo), place(hi))
}

/// Free intervals of the doubled diagram for `x` (along `u`) and `y` (along `v`).
///
/// `T(i, j)` is the `X` edge `x_{i-1} -> x_i` (indices mod `m`) against the
/// vertex `y_j`; `R(i, j)` is the `Y` edge `y_{j-1} -> y_j` against `x_i`.
pub fn build_boundary_grid(x: &ClosedCurve, y: &ClosedCurve, eps: f64) -> Result<BoundaryGrid> {
    check_dim(x.dim(), y.dim())?;
    check_eps(eps)?;
    let m = x.len();
    let n = y.len();

    let mut free_t = Table::by_columns(m + 1, n + 1, Interval::EMPTY);
    let mut mirror = Table::by_columns(m + 1, n + 1, Interval::EMPTY);
    for i in 1..=m {
        let (a, b) = (x.vertex(i - 1).coords(), x.vertex(i).coords());
        for j in 0..=n {
            let t = segment_ball_params(a, b, y.vertex(j).coords(), eps);
            free_t.set(i, j, to_absolute((i - 1) as f64, t));
            mirror.set(i, j, to_absolute((i - 1 + m) as f64, t));
        }
    }

    let mut free_r = Table::by_columns(m + 1, n + 1, Interval::EMPTY);
    for i in 0..=m {
        let c = x.vertex(i).coords();
        for j in 1..=n {
            let t = segment_ball_params(y.vertex(j - 1).coords(), y.vertex(j).coords(), c, eps);
            free_r.set(i, j, to_absolute((j - 1) as f64, t));
        }
    }

    Ok(BoundaryGrid {
        cols: 2 * m,
        rows: n,
        period: m,
        free_t,
        free_t_mirror: Some(mirror),
        free_r,
    })
}

/// Reachable parts of every edge: `g_down` (reachable from the bottom side)
/// and `g_up` (reachable from the top side). Same index ranges as
/// [`BoundaryGrid`].
#[derive(Clone)]
pub struct ReachGrid {
    cols: usize,
    rows: usize,
    down_t: Table<Interval>,
    down_r: Table<Interval>,
    up_t: Table<Interval>,
    up_r: Table<Interval>,
}

impl ReachGrid {
    fn new(cols: usize, rows: usize) -> Self {
        Self {
            cols,
            rows,
            down_t: Table::by_columns(cols + 1, rows + 1, Interval::EMPTY),
            down_r: Table::by_columns(cols + 1, rows + 1, Interval::EMPTY),
            up_t: Table::by_rows(cols + 1, rows + 1, Interval::EMPTY),
            up_r: Table::by_rows(cols + 1, rows + 1, Interval::EMPTY),
        }
    }

    /// A reach grid with every set empty, for assembling hand-built cases.
    pub fn empty(cols: usize, rows: usize) -> Self {
        Self::new(cols, rows)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `g_down ∩ T(i, j)`.
    #[inline]
    pub fn down_t(&self, i: usize, j: usize) -> Interval {
        self.down_t.get(i, j)
    }

    /// `g_down ∩ R(i, j)`.
    #[inline]
    pub fn down_r(&self, i: usize, j: usize) -> Interval {
        self.down_r.get(i, j)
    }

    /// `g_up ∩ T(i, j)`.
    #[inline]
    pub fn up_t(&self, i: usize, j: usize) -> Interval {
        self.up_t.get(i, j)
    }

    /// `g_up ∩ R(i, j)`.
    #[inline]
    pub fn up_r(&self, i: usize, j: usize) -> Interval {
        self.up_r.get(i, j)
    }

    pub fn set_down_t(&mut self, i: usize, j: usize, iv: Interval) {
        self.down_t.set(i, j, iv);
    }

    pub fn set_down_r(&mut self, i: usize, j: usize, iv: Interval) {
        self.down_r.set(i, j, iv);
    }

    pub fn set_up_t(&mut self, i: usize, j: usize, iv: Interval) {
        self.up_t.set(i, j, iv);
    }

    pub fn set_up_r(&mut self, i: usize, j: usize, iv: Interval) {
        self.up_r.set(i, j, iv);
    }
}

/// Both reachable sets.
pub fn propagate_reach(g: &BoundaryGrid) -> ReachGrid {
    let mut reach = ReachGrid::new(g.cols(), g.rows());
    propagate_reach_down(g, &mut reach);
    propagate_reach_up(g, &mut reach);
    reach
}

/// Fills `down_t` / `down_r`.
pub fn propagate_reach_down(g: &BoundaryGrid, reach: &mut ReachGrid) {
    let mut sweep = ReachSweep::new(g);
    let (mut t, mut r) = column_buffers(g.rows());
    for i in 0..=g.cols() {
        sweep.down_column(i, &mut t, &mut r);
        for j in 0..=g.rows() {
            if i > 0 {
                reach.down_t.set(i, j, t[j]);
            }
            if j > 0 {
                reach.down_r.set(i, j, r[j]);
            }
        }
    }
}

/// Fills `up_t` / `up_r`.
#[allow(clippy::needless_range_loop)]
pub fn propagate_reach_up(g: &BoundaryGrid, reach: &mut ReachGrid) {
    let mut sweep = ReachSweep::new(g);
    let (mut t, mut r) = row_buffers(g.cols());
    sweep.up_top(&mut t);
    for i in 1..=g.cols() {
        reach.up_t.set(i, g.rows(), t[i]);
    }
    for j in (1..=g.rows()).rev() {
        sweep.up_row(j, &mut t, &mut r);
        for i in 0..=g.cols() {
            if i > 0 {
                reach.up_t.set(i, j - 1, t[i]);
            }
            reach.up_r.set(i, j, r[i]);
        }
    }
}

/// Buffers for one column: `T` edges indexed by `j in 0..=rows`, `R` edges by
/// `j in 1..=rows` (index 0 unused).
pub fn column_buffers(rows: usize) -> (Vec<Interval>, Vec<Interval>) {
    (
        vec![Interval::EMPTY; rows + 1],
        vec![Interval::EMPTY; rows + 1],
    )
}

/// Buffers for one row: `T` edges indexed by `i in 1..=cols` (index 0
/// unused), `R` edges by `i in 0..=cols`.
pub fn row_buffers(cols: usize) -> (Vec<Interval>, Vec<Interval>) {
    (
        vec![Interval::EMPTY; cols + 1],
        vec![Interval::EMPTY; cols + 1],
    )
}

/// Reachable sets delivered one column (`g_down`, left to right) or one row
/// (`g_up`, top to bottom) at a time.
///
/// Consumers call [`down_column`](Self::down_column) for `i = 0, 1, ..., cols`
/// in order, and [`up_top`](Self::up_top) followed by
/// [`up_row`](Self::up_row) for `j = rows, ..., 1`. Implementations may rely
/// on that order.
pub trait ReachSource {
    fn cols(&self) -> usize;
    fn rows(&self) -> usize;

    /// `t[j] = g_down ∩ T(i, j)` for `j in 0..=rows` (untouched when `i == 0`)
    /// and `r[j] = g_down ∩ R(i, j)` for `j in 1..=rows`.
    fn down_column(&mut self, i: usize, t: &mut [Interval], r: &mut [Interval]);

    /// `t[i] = g_up ∩ T(i, rows)` for `i in 1..=cols`.
    fn up_top(&mut self, t: &mut [Interval]);

    /// `t[i] = g_up ∩ T(i, j - 1)` for `i in 1..=cols` and
    /// `r[i] = g_up ∩ R(i, j)` for `i in 0..=cols`.
    fn up_row(&mut self, j: usize, t: &mut [Interval], r: &mut [Interval]);
}

impl ReachSource for &ReachGrid {
    fn cols(&self) -> usize {
        self.cols
    }

    fn rows(&self) -> usize {
        self.rows
    }

    fn down_column(&mut self, i: usize, t: &mut [Interval], r: &mut [Interval]) {
        for j in 0..=self.rows {
            if i > 0 {
                t[j] = self.down_t.get(i, j);
            }
            if j > 0 {
                r[j] = self.down_r.get(i, j);
            }
        }
    }

    fn up_top(&mut self, t: &mut [Interval]) {
        for (i, slot) in t.iter_mut().enumerate().skip(1) {
            *slot = self.up_t.get(i, self.rows);
        }
    }

    fn up_row(&mut self, j: usize, t: &mut [Interval], r: &mut [Interval]) {
        for i in 0..=self.cols {
            if i > 0 {
                t[i] = self.up_t.get(i, j - 1);
            }
            r[i] = self.up_r.get(i, j);
        }
    }
}

/// Computes the reachable sets on demand from a [`BoundaryGrid`], keeping only
/// the previous column and the previous row.
///
/// Inside a cell the free space is convex, so from any free point of the left
/// edge every free point of the top edge is reachable, and from a bottom point
/// at `u = a` every free top point with `u >= a`. A point `(0, v)` on the left
/// side is reachable from the bottom only through the segment from `(0, 0)`,
/// which must be entirely free. `g_up` is the mirror image under a half-turn
/// of the diagram, seeded from the top side and from the free run of the right
/// side ending at `(2m, n)`.
pub struct ReachSweep<'g> {
    g: &'g BoundaryGrid,
    /// `g_down ∩ R(i - 1, j)` for the last column delivered.
    prev_r: Vec<Interval>,
    /// `g_up ∩ T(i, j)` for the last row delivered.
    prev_t: Vec<Interval>,
    /// `g_up ∩ R(2m, j)`.
    right_side: Vec<Interval>,
}

impl<'g> ReachSweep<'g> {
    pub fn new(g: &'g BoundaryGrid) -> Self {
        let (cols, rows) = (g.cols(), g.rows());
        let mut right_side = vec![Interval::EMPTY; rows + 1];
        let mut running = true;
        for j in (1..=rows).rev() {
            let free = g.free_r(cols, j);
            let iv = match free.bounds() {
                Some((_, hi)) if running && hi == j as f64 => free,
                _ => Interval::EMPTY,
            };
            running = iv.lo() == Some((j - 1) as f64);
            right_side[j] = iv;
        }
        Self {
            g,
            prev_r: vec![Interval::EMPTY; rows + 1],
            prev_t: vec![Interval::EMPTY; cols + 1],
            right_side,
        }
    }
}

impl ReachSource for ReachSweep<'_> {
    fn cols(&self) -> usize {
        self.g.cols()
    }

    fn rows(&self) -> usize {
        self.g.rows()
    }

    #[allow(clippy::needless_range_loop)]
    fn down_column(&mut self, i: usize, t: &mut [Interval], r: &mut [Interval]) {
        let g = self.g;
        let rows = g.rows();
        if i == 0 {
            let mut running = true;
            for j in 1..=rows {
                let free = g.free_r(0, j);
                let iv = match free.bounds() {
                    Some((lo, _)) if running && lo == (j - 1) as f64 => free,
                    _ => Interval::EMPTY,
                };
                running = iv.hi() == Some(j as f64);
                r[j] = iv;
            }
        } else {
            t[0] = g.free_t(i, 0);
            for j in 1..=rows {
                let bottom = t[j - 1];
                let left = self.prev_r[j];
                t[j] = match (left.is_empty(), bottom.lo()) {
                    (false, _) => g.free_t(i, j),
                    (true, Some(a)) => g.free_t(i, j).at_least(a),
                    (true, None) => Interval::EMPTY,
                };
                r[j] = match (bottom.is_empty(), left.lo()) {
                    (false, _) => g.free_r(i, j),
                    (true, Some(c)) => g.free_r(i, j).at_least(c),
                    (true, None) => Interval::EMPTY,
                };
            }
        }
        self.prev_r.copy_from_slice(&r[..=rows]);
    }

    fn up_top(&mut self, t: &mut [Interval]) {
        let rows = self.g.rows();
        for (i, slot) in t.iter_mut().enumerate().skip(1) {
            *slot = self.g.free_t(i, rows);
        }
        self.prev_t.copy_from_slice(&t[..=self.g.cols()]);
    }

    fn up_row(&mut self, j: usize, t: &mut [Interval], r: &mut [Interval]) {
        let g = self.g;
        let cols = g.cols();
        r[cols] = self.right_side[j];
        for i in (1..=cols).rev() {
            let top = self.prev_t[i];
            let right = r[i];
            t[i] = match (right.is_empty(), top.hi()) {
                (false, _) => g.free_t(i, j - 1),
                (true, Some(b)) => g.free_t(i, j - 1).at_most(b),
                (true, None) => Interval::EMPTY,
            };
            r[i - 1] = match (top.is_empty(), right.hi()) {
                (false, _) => g.free_r(i - 1, j),
                (true, Some(d)) => g.free_r(i - 1, j).at_most(d),
                (true, None) => Interval::EMPTY,
            };
        }
        self.prev_t.copy_from_slice(&t[..=cols]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ClosedCurve;

    fn origin() -> ClosedCurve {
        ClosedCurve::from_xy(&[(0.0, 0.0)]).unwrap()
    }

    fn corners() -> ClosedCurve {
        ClosedCurve::from_xy(&[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]).unwrap()
    }

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi)
    }

    #[test]
    fn point_vs_square_fully_free_above_sqrt2() {
        let g = build_boundary_grid(&origin(), &corners(), 1.5).unwrap();
        assert_eq!((g.cols(), g.rows(), g.period()), (2, 4, 1));
        for j in 0..=4 {
            for i in 1..=2 {
                assert_eq!(g.free_t(i, j), iv((i - 1) as f64, i as f64));
            }
        }
        for j in 1..=4 {
            for i in 0..=2 {
                assert_eq!(g.free_r(i, j), iv((j - 1) as f64, j as f64));
            }
        }
    }

    #[test]
    fn point_vs_square_empty_below_one() {
        let g = build_boundary_grid(&origin(), &corners(), 0.9).unwrap();
        for j in 0..=4 {
            for i in 1..=2 {
                assert!(g.free_t(i, j).is_empty());
            }
        }
        for j in 1..=4 {
            for i in 0..=2 {
                assert!(g.free_r(i, j).is_empty());
            }
        }
        assert!(!g.bottom_has_free_point() && !g.top_has_free_point());
    }

    #[test]
    fn point_vs_square_partial_edge() {
        // Y edge (1,1) -> (-1,1) is R(i, 1). Points (1 - 2t, 1) with
        // (1 - 2t)^2 + 1 <= 1.44, i.e. |t - 0.5| <= sqrt(0.44) / 2.
        let g = build_boundary_grid(&origin(), &corners(), 1.2).unwrap();
        let half = (1.2f64 * 1.2 - 1.0).sqrt() / 2.0;
        assert!((half - 0.33166).abs() < 1e-5);
        for i in 0..=2 {
            let (lo, hi) = g.free_r(i, 1).bounds().unwrap();
            assert!((lo - (0.5 - half)).abs() < 1e-12 && (hi - (0.5 + half)).abs() < 1e-12);
        }
        // Vertices are at distance sqrt(2) > 1.2: the bottom side is blocked.
        assert!(g.free_t(1, 0).is_empty());
    }

    #[test]
    fn mirrored_columns_are_shifted_copies() {
        let x = ClosedCurve::from_xy(&[(0.0, 0.0), (2.0, 0.3), (1.0, 1.7)]).unwrap();
        let y = ClosedCurve::from_xy(&[(0.1, 0.1), (1.8, 0.0), (1.9, 1.1), (0.2, 1.4)]).unwrap();
        let g = build_boundary_grid(&x, &y, 0.8).unwrap();
        let m = 3;
        for j in 0..=4 {
            for i in 1..=m {
                let a = g.free_t(i, j);
                let b = g.free_t(i + m, j);
                assert_eq!(a.is_empty(), b.is_empty());
                if let (Some((l1, h1)), Some((l2, h2))) = (a.bounds(), b.bounds()) {
                    assert!((l1 + 3.0 - l2).abs() < 1e-12 && (h1 + 3.0 - h2).abs() < 1e-12);
                }
            }
        }
        for j in 1..=4 {
            for i in 0..=m {
                assert_eq!(g.free_r(i, j), g.free_r(i + m, j));
            }
        }
    }

    #[test]
    fn corners_agree_across_edges() {
        // eps equal to a vertex distance: the four edges at that corner agree.
        let x = ClosedCurve::from_xy(&[(0.0, 0.0), (3.0, 0.0), (3.0, 4.0)]).unwrap();
        let y = ClosedCurve::from_xy(&[(0.0, 0.0), (0.0, 4.0)]).unwrap();
        // |x_1 - y_1| = |(3,0) - (0,4)| = 5.
        let g = build_boundary_grid(&x, &y, 5.0).unwrap();
        assert_eq!(g.free_t(1, 1).hi(), Some(1.0));
        assert_eq!(g.free_t(2, 1).lo(), Some(1.0));
        assert_eq!(g.free_r(1, 1).hi(), Some(1.0));
        assert_eq!(g.free_r(1, 2).lo(), Some(1.0));
    }

    #[test]
    fn reach_on_full_grid() {
        let g = BoundaryGrid::full(3, 2);
        let r = propagate_reach(&g);
        for j in 0..=2 {
            for i in 1..=3 {
                assert_eq!(r.down_t(i, j), iv((i - 1) as f64, i as f64));
                assert_eq!(r.up_t(i, j), iv((i - 1) as f64, i as f64));
            }
        }
        for j in 1..=2 {
            for i in 0..=3 {
                assert_eq!(r.down_r(i, j), iv((j - 1) as f64, j as f64));
                assert_eq!(r.up_r(i, j), iv((j - 1) as f64, j as f64));
            }
        }
    }

    #[test]
    fn blocked_seam_stops_down_reach() {
        let mut g = BoundaryGrid::full(3, 3);
        for i in 1..=3 {
            g.set_free_t(i, 1, Interval::EMPTY);
        }
        // The left side must be cut as well, or the side run leaks past the seam.
        g.set_free_r(0, 2, Interval::EMPTY);
        for i in 1..=3 {
            g.set_free_r(i, 2, Interval::EMPTY);
        }
        let r = propagate_reach(&g);
        for j in 2..=3 {
            for i in 1..=3 {
                assert!(r.down_t(i, j).is_empty(), "T({i},{j})");
            }
            for i in 0..=3 {
                assert!(r.down_r(i, j).is_empty(), "R({i},{j})");
            }
        }
    }

    #[test]
    fn horizontal_seam_alone_blocks_down_reach() {
        // Only the horizontal seam is blocked; vertical edges crossing row 2 are
        // free but nothing below can get into row 2.
        let mut g = BoundaryGrid::full(3, 3);
        for i in 1..=3 {
            g.set_free_t(i, 1, Interval::EMPTY);
        }
        g.set_free_r(0, 1, iv(0.0, 0.5));
        let r = propagate_reach(&g);
        for j in 2..=3 {
            for i in 1..=3 {
                assert!(r.down_t(i, j).is_empty());
                assert!(r.down_r(i, j).is_empty());
            }
        }
    }

    #[test]
    fn single_cell_bottom_entry_misses_top() {
        let mut g = BoundaryGrid::empty(1, 1);
        g.set_free_t(1, 0, iv(0.4, 1.0));
        g.set_free_t(1, 1, iv(0.0, 0.2));
        let r = propagate_reach(&g);
        assert!(r.down_t(1, 1).is_empty());
        assert!(r.down_r(0, 1).is_empty());
    }

    #[test]
    fn left_side_seed_is_contiguous_run() {
        let mut g = BoundaryGrid::full(1, 3);
        g.set_free_r(0, 2, iv(1.0, 1.5));
        let r = propagate_reach(&g);
        assert_eq!(r.down_r(0, 1), iv(0.0, 1.0));
        assert_eq!(r.down_r(0, 2), iv(1.0, 1.5));
        assert!(r.down_r(0, 3).is_empty());

        let mut g = BoundaryGrid::full(1, 2);
        g.set_free_t(1, 0, iv(0.2, 1.0));
        g.set_free_r(0, 1, iv(0.1, 1.0));
        let r = propagate_reach(&g);
        assert!(r.down_r(0, 1).is_empty() && r.down_r(0, 2).is_empty());
    }

    #[test]
    fn right_side_seed_is_contiguous_run() {
        let mut g = BoundaryGrid::full(1, 1);
        g.set_free_r(1, 1, iv(0.5, 1.0));
        let r = propagate_reach(&g);
        assert_eq!(r.up_r(1, 1), iv(0.5, 1.0));

        let mut g = BoundaryGrid::full(1, 2);
        g.set_free_r(1, 2, iv(1.0, 1.6));
        let r = propagate_reach(&g);
        assert!(r.up_r(1, 2).is_empty() && r.up_r(1, 1).is_empty());
    }

    #[test]
    fn blocked_top_and_right_kill_up_reach() {
        let mut g = BoundaryGrid::full(2, 2);
        for i in 1..=2 {
            g.set_free_t(i, 2, Interval::EMPTY);
        }
        for j in 1..=2 {
            g.set_free_r(2, j, Interval::EMPTY);
        }
        let r = propagate_reach(&g);
        for j in 0..=2 {
            for i in 1..=2 {
                assert!(r.up_t(i, j).is_empty());
            }
        }
        for j in 1..=2 {
            for i in 0..=2 {
                assert!(r.up_r(i, j).is_empty());
            }
        }
    }

    #[test]
    fn reach_is_subset_of_free() {
        let x = ClosedCurve::from_xy(&[(0.0, 0.0), (2.0, 0.3), (1.0, 1.7), (0.4, 0.9)]).unwrap();
        let y = ClosedCurve::from_xy(&[(0.1, 0.1), (1.8, 0.0), (1.9, 1.1)]).unwrap();
        let g = build_boundary_grid(&x, &y, 0.7).unwrap();
        let r = propagate_reach(&g);
        for j in 0..=3 {
            for i in 1..=8 {
                assert!(r.down_t(i, j).is_subset_of(&g.free_t(i, j)));
                assert!(r.up_t(i, j).is_subset_of(&g.free_t(i, j)));
            }
        }
        for j in 1..=3 {
            for i in 0..=8 {
                assert!(r.down_r(i, j).is_subset_of(&g.free_r(i, j)));
                assert!(r.up_r(i, j).is_subset_of(&g.free_r(i, j)));
            }
        }
    }
}
