//! Points, closed polygonal curves and the per-edge free-interval solver.
//!
//! This is the only module that does floating-point root finding. Every
//! other module treats the intervals produced here as exact.

use serde::{Deserialize, Serialize};

use crate::error::{FrechetError, Result};

/// Relative width of the band in which a slightly negative discriminant is
/// treated as a tangency.
const DISCRIMINANT_TOL: f64 = 1e-12;

/// A point in `R^k`, `k >= 1`, with finite coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(FrechetError::ZeroDimension);
        }
        if let Some((index, &value)) = coords.iter().enumerate().find(|(_, c)| !c.is_finite()) {
            return Err(FrechetError::NonFinite { index, value });
        }
        Ok(Self { coords })
    }

    pub fn xy(x: f64, y: f64) -> Result<Self> {
        Self::new(vec![x, y])
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn distance(&self, other: &Point) -> Result<f64> {
        check_dim(self.dim(), other.dim())?;
        Ok(dist2(&self.coords, &other.coords).sqrt())
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = FrechetError;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Point::new(coords)
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.coords
    }
}

/// A closed polygonal curve `x_0, ..., x_{m-1}` with implicit closing edge
/// `x_{m-1} -> x_0`. Parameter domain is `[0, m]`.
///
/// Zero-length edges are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedCurve {
    vertices: Vec<Point>,
    dim: usize,
}

impl ClosedCurve {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let dim = vertices.first().ok_or(FrechetError::EmptyCurve)?.dim();
        if let Some(p) = vertices.iter().find(|p| p.dim() != dim) {
            return Err(FrechetError::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(Self { vertices, dim })
    }

    /// Planar curve from `(x, y)` pairs.
    pub fn from_xy(points: &[(f64, f64)]) -> Result<Self> {
        let vertices = points
            .iter()
            .map(|&(x, y)| Point::xy(x, y))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Number of vertices, which is also the number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertex with cyclic indexing, so `vertex(m) == vertex(0)`.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.vertices.len()]
    }

    pub fn max_edge_length(&self) -> f64 {
        (0..self.len())
            .map(|i| dist2(self.vertex(i).coords(), self.vertex(i + 1).coords()).sqrt())
            .fold(0.0, f64::max)
    }

    /// Same curve with the vertex list rotated left by `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut vertices = self.vertices.clone();
        let len = vertices.len();
        vertices.rotate_left(k % len);
        Self {
            vertices,
            dim: self.dim,
        }
    }

    /// Applies `f` to every vertex.
    pub fn map_points(&self, mut f: impl FnMut(&[f64]) -> Vec<f64>) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|p| Point::new(f(p.coords())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }
}

/// Closed real interval `[lo, hi]` or the empty set.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub const EMPTY: Interval = Interval {
        lo: f64::INFINITY,
        hi: f64::NEG_INFINITY,
    };

    /// `[lo, hi]`, or empty when `lo > hi`.
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(!lo.is_nan() && !hi.is_nan());
        if lo <= hi {
            Self { lo, hi }
        } else {
            Self::EMPTY
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn bounds(&self) -> Option<(f64, f64)> {
        (!self.is_empty()).then_some((self.lo, self.hi))
    }

    pub fn lo(&self) -> Option<f64> {
        self.bounds().map(|b| b.0)
    }

    pub fn hi(&self) -> Option<f64> {
        self.bounds().map(|b| b.1)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// `self ∩ [x, +inf)`.
    pub fn at_least(&self, x: f64) -> Self {
        if self.is_empty() {
            return *self;
        }
        Self::new(self.lo.max(x), self.hi)
    }

    /// `self ∩ (-inf, x]`.
    pub fn at_most(&self, x: f64) -> Self {
        if self.is_empty() {
            return *self;
        }
        Self::new(self.lo, self.hi.min(x))
    }

    pub fn intersect(&self, other: &Interval) -> Self {
        if self.is_empty() || other.is_empty() {
            return Self::EMPTY;
        }
        Self::new(self.lo.max(other.lo), self.hi.min(other.hi))
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        self.is_empty() || (!other.is_empty() && other.lo <= self.lo && self.hi <= other.hi)
    }

    pub fn shifted(&self, dx: f64) -> Self {
        if self.is_empty() {
            return *self;
        }
        Self::new(self.lo + dx, self.hi + dx)
    }

    pub fn length(&self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            self.hi - self.lo
        }
    }
}

impl Default for Interval {
    fn default() -> Self {
        Self::EMPTY
    }
}

impl std::fmt::Debug for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.bounds() {
            None => write!(f, "∅"),
            Some((lo, hi)) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// `f_X(t)`: the point at parameter `t` in `[0, m]` on the piecewise-linear
/// parametrization, with `f_X(m) = x_0`.
pub fn curve_point(curve: &ClosedCurve, t: f64) -> Result<Point> {
    let m = curve.len() as f64;
    if !(0.0..=m).contains(&t) {
        return Err(FrechetError::ParameterOutOfRange { t, max: m });
    }
    let i = (t.floor() as usize).min(curve.len() - 1);
    let alpha = t - i as f64;
    let a = curve.vertex(i).coords();
    let b = curve.vertex(i + 1).coords();
    let coords = a
        .iter()
        .zip(b)
        .map(|(&p, &q)| (1.0 - alpha) * p + alpha * q)
        .collect();
    Point::new(coords)
}

/// `{ t in [0, 1] : |a + t (b - a) - c| <= eps }`.
///
/// The set is always a single closed interval. Endpoint membership follows
/// the direct vertex test `|a - c| <= eps` (resp. `|b - c| <= eps`), so two
/// edges meeting at a corner of the diagram agree on that corner.
pub fn edge_free_interval(a: &Point, b: &Point, c: &Point, eps: f64) -> Result<Interval> {
    check_eps(eps)?;
    check_dim(a.dim(), b.dim())?;
    check_dim(a.dim(), c.dim())?;
    Ok(segment_ball_params(a.coords(), b.coords(), c.coords(), eps))
}

/// Unchecked core of [`edge_free_interval`].
pub(crate) fn segment_ball_params(a: &[f64], b: &[f64], c: &[f64], eps: f64) -> Interval {
    let eps2 = eps * eps;
    let mut dd = 0.0;
    let mut wd = 0.0;
    let mut ww = 0.0;
    let mut end2 = 0.0;
    for k in 0..a.len() {
        let d = b[k] - a[k];
        let w = a[k] - c[k];
        let e = b[k] - c[k];
        dd += d * d;
        wd += w * d;
        ww += w * w;
        end2 += e * e;
    }
    let start_free = ww <= eps2;
    let end_free = end2 <= eps2;
    if start_free && end_free {
        return Interval::new(0.0, 1.0);
    }
    if dd == 0.0 {
        // Degenerate edge: the distance does not depend on t.
        return if start_free {
            Interval::new(0.0, 1.0)
        } else {
            Interval::EMPTY
        };
    }

    let t_mid = -wd / dd;
    let mut dmin2 = 0.0;
    for k in 0..a.len() {
        let p = a[k] - c[k] + t_mid * (b[k] - a[k]);
        dmin2 += p * p;
    }
    let mut disc = eps2 - dmin2;
    let scale2 = dd.max(ww).max(eps2);
    if disc < 0.0 && disc >= -DISCRIMINANT_TOL * scale2 {
        disc = 0.0;
    }

    let (mut lo, mut hi) = if disc < 0.0 {
        (f64::INFINITY, f64::NEG_INFINITY)
    } else {
        let half = (disc / dd).sqrt();
        ((t_mid - half).max(0.0), (t_mid + half).min(1.0))
    };

    // The vertex tests are authoritative for the endpoints.
    if start_free {
        lo = 0.0;
        hi = hi.max(0.0);
    } else if lo <= 0.0 {
        lo = f64::MIN_POSITIVE;
    }
    if end_free {
        hi = 1.0;
        lo = lo.min(1.0);
    } else if hi >= 1.0 {
        hi = 1.0 - f64::EPSILON / 2.0;
    }
    Interval::new(lo, hi)
}

/// Maximum distance over all vertex pairs.
///
/// Distance between two segments attains its maximum at endpoints, so every
/// cell of the diagram is fully free at this value and `δ(X, Y)` is at most
/// this much. The result `e` satisfies `e * e >= |p - q|^2` in floating point,
/// so the vertex tests accept every pair at `e`.
pub fn eps_upper_bound(x: &ClosedCurve, y: &ClosedCurve) -> Result<f64> {
    check_dim(x.dim(), y.dim())?;
    let mut best: f64 = 0.0;
    for p in x.vertices() {
        for q in y.vertices() {
            best = best.max(dist2(p.coords(), q.coords()));
        }
    }
    let mut e = best.sqrt();
    while e * e < best {
        e = e.next_up();
    }
    Ok(e)
}

pub(crate) fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum()
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(FrechetError::DimensionMismatch { expected, found })
    }
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && eps >= 0.0 {
        Ok(())
    } else {
        Err(FrechetError::InvalidEps(eps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_bound_passes_vertex_test() {
        let x = ClosedCurve::from_xy(&[(0.22780217598482233, 0.43413457343295964)]).unwrap();
        let y = ClosedCurve::from_xy(&[(0.3186658304911969, 0.6922875353438905)]).unwrap();
        let ub = eps_upper_bound(&x, &y).unwrap();
        let (p, q) = (x.vertex(0), y.vertex(0));
        assert_eq!(
            edge_free_interval(p, p, q, ub).unwrap(),
            Interval::new(0.0, 1.0)
        );
    }
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point {
        Point::xy(x, y).unwrap()
    }

    fn unit_square() -> ClosedCurve {
        ClosedCurve::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn curve_point_on_square() {
        let sq = unit_square();
        assert_eq!(curve_point(&sq, 0.5).unwrap(), p(0.5, 0.0));
        assert_eq!(curve_point(&sq, 0.0).unwrap(), p(0.0, 0.0));
        assert_eq!(curve_point(&sq, 4.0).unwrap(), p(0.0, 0.0));
        assert_eq!(curve_point(&sq, 2.25).unwrap(), p(0.75, 1.0));
    }

    #[test]
    fn curve_point_rejects_out_of_range() {
        let sq = unit_square();
        assert!(matches!(
            curve_point(&sq, 4.5),
            Err(FrechetError::ParameterOutOfRange { .. })
        ));
        assert!(curve_point(&sq, -1e-12).is_err());
        assert!(curve_point(&sq, f64::NAN).is_err());
    }

    #[test]
    fn free_interval_examples() {
        // (t - 0.5)^2 + 0.09 <= 0.25  <=>  |t - 0.5| <= 0.4
        let iv = edge_free_interval(&p(0.0, 0.0), &p(1.0, 0.0), &p(0.5, 0.3), 0.5).unwrap();
        let (lo, hi) = iv.bounds().unwrap();
        assert!(close(lo, 0.1, 1e-12) && close(hi, 0.9, 1e-12), "{iv:?}");

        let iv = edge_free_interval(&p(0.0, 0.0), &p(1.0, 0.0), &p(0.5, 0.3), 0.2).unwrap();
        assert!(iv.is_empty());

        let o = p(0.0, 0.0);
        let iv = edge_free_interval(&o, &o, &o, 0.0).unwrap();
        assert_eq!(iv.bounds(), Some((0.0, 1.0)));
    }

    #[test]
    fn free_interval_errors() {
        let o = p(0.0, 0.0);
        assert_eq!(
            edge_free_interval(&o, &o, &o, -1.0),
            Err(FrechetError::InvalidEps(-1.0))
        );
        let o3 = Point::new(vec![0.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            edge_free_interval(&o, &o, &o3, 1.0),
            Err(FrechetError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn free_interval_tangent_is_a_point() {
        // Circle of radius 0.3 touching the segment at t = 0.5.
        let iv = edge_free_interval(&p(0.0, 0.0), &p(1.0, 0.0), &p(0.5, 0.3), 0.3).unwrap();
        let (lo, hi) = iv.bounds().expect("grazing contact must not be empty");
        assert!(close(lo, 0.5, 1e-5) && close(hi, 0.5, 1e-5));
    }

    #[test]
    fn free_interval_endpoint_follows_vertex_test() {
        // |b - c| = 1 exactly.
        let iv = edge_free_interval(&p(0.0, 0.0), &p(1.0, 0.0), &p(1.0, 1.0), 1.0).unwrap();
        assert_eq!(iv.hi(), Some(1.0));
        let iv = edge_free_interval(&p(0.0, 0.0), &p(1.0, 0.0), &p(1.0, 1.0), 0.999).unwrap();
        assert!(iv.is_empty());
    }

    #[test]
    fn free_interval_degenerate_edge() {
        let a = p(1.0, 1.0);
        assert_eq!(
            edge_free_interval(&a, &a, &p(1.0, 2.0), 1.0)
                .unwrap()
                .bounds(),
            Some((0.0, 1.0))
        );
        assert!(edge_free_interval(&a, &a, &p(1.0, 2.0), 0.5)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn free_interval_higher_dimensions() {
        let a = Point::new(vec![0.0, 0.0, 0.0]).unwrap();
        let b = Point::new(vec![0.0, 0.0, 2.0]).unwrap();
        let c = Point::new(vec![0.6, 0.0, 1.0]).unwrap();
        // (2t - 1)^2 + 0.36 <= 1  <=>  |t - 0.5| <= 0.4
        let (lo, hi) = edge_free_interval(&a, &b, &c, 1.0)
            .unwrap()
            .bounds()
            .unwrap();
        assert!(close(lo, 0.1, 1e-12) && close(hi, 0.9, 1e-12));

        let a = Point::new(vec![0.0]).unwrap();
        let b = Point::new(vec![4.0]).unwrap();
        let c = Point::new(vec![3.0]).unwrap();
        let (lo, hi) = edge_free_interval(&a, &b, &c, 0.5)
            .unwrap()
            .bounds()
            .unwrap();
        assert!(close(lo, 0.625, 1e-12) && close(hi, 0.875, 1e-12));
    }

    #[test]
    fn upper_bound_examples() {
        let sq = unit_square();
        assert!(close(
            eps_upper_bound(&sq, &sq).unwrap(),
            2f64.sqrt(),
            1e-12
        ));

        let origin = ClosedCurve::from_xy(&[(0.0, 0.0)]).unwrap();
        let corners =
            ClosedCurve::from_xy(&[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]).unwrap();
        assert!(close(
            eps_upper_bound(&origin, &corners).unwrap(),
            2f64.sqrt(),
            1e-12
        ));
        assert_eq!(eps_upper_bound(&origin, &origin).unwrap(), 0.0);
    }

    #[test]
    fn curve_construction_errors() {
        assert_eq!(ClosedCurve::new(vec![]), Err(FrechetError::EmptyCurve));
        let mixed = vec![p(0.0, 0.0), Point::new(vec![1.0]).unwrap()];
        assert!(matches!(
            ClosedCurve::new(mixed),
            Err(FrechetError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            Point::new(vec![0.0, f64::NAN]),
            Err(FrechetError::NonFinite { index: 1, .. })
        ));
        assert_eq!(Point::new(vec![]), Err(FrechetError::ZeroDimension));
    }

    #[test]
    fn interval_ops() {
        let iv = Interval::new(1.0, 3.0);
        assert_eq!(iv.at_least(2.0).bounds(), Some((2.0, 3.0)));
        assert_eq!(iv.at_most(2.0).bounds(), Some((1.0, 2.0)));
        assert!(iv.at_least(3.5).is_empty());
        assert!(iv.intersect(&Interval::new(4.0, 5.0)).is_empty());
        assert!(Interval::EMPTY.is_subset_of(&Interval::EMPTY));
        assert!(!iv.is_subset_of(&Interval::EMPTY));
        assert!(Interval::new(2.0, 2.0).is_subset_of(&iv));
        assert_eq!(iv.shifted(1.0).bounds(), Some((2.0, 4.0)));
    }

    fn coord() -> impl Strategy<Value = f64> {
        -10.0..10.0f64
    }

    fn pt() -> impl Strategy<Value = Point> {
        (coord(), coord()).prop_map(|(x, y)| Point::xy(x, y).unwrap())
    }

    proptest! {
        #[test]
        fn free_interval_matches_sampling(a in pt(), b in pt(), c in pt(), eps in 0.0..15.0f64) {
            let iv = edge_free_interval(&a, &b, &c, eps).unwrap();
            for k in 0..=200 {
                let t = k as f64 / 200.0;
                let q: Vec<f64> = a.coords().iter().zip(b.coords())
                    .map(|(x, y)| x + t * (y - x)).collect();
                let d = dist2(&q, c.coords()).sqrt();
                // Points clearly inside or outside the ball must be classified correctly.
                if d < eps - 1e-9 {
                    prop_assert!(iv.contains(t), "t={t} d={d} eps={eps} iv={iv:?}");
                } else if d > eps + 1e-9 {
                    prop_assert!(!iv.contains(t), "t={t} d={d} eps={eps} iv={iv:?}");
                }
            }
        }

        #[test]
        fn free_interval_monotone_in_eps(a in pt(), b in pt(), c in pt(), e1 in 0.0..15.0f64, e2 in 0.0..15.0f64) {
            let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
            let small = edge_free_interval(&a, &b, &c, lo).unwrap();
            let big = edge_free_interval(&a, &b, &c, hi).unwrap();
            prop_assert!(small.is_subset_of(&big), "{small:?} vs {big:?}");
        }

        #[test]
        fn free_interval_rigid_motion(a in pt(), b in pt(), c in pt(), eps in 0.0..15.0f64,
                                      theta in 0.0..std::f64::consts::TAU, tx in coord(), ty in coord()) {
            let (s, co) = theta.sin_cos();
            let mv = |p: &Point| {
                let [x, y] = [p.coords()[0], p.coords()[1]];
                Point::xy(co * x - s * y + tx, s * x + co * y + ty).unwrap()
            };
            let base = edge_free_interval(&a, &b, &c, eps).unwrap();
            let moved = edge_free_interval(&mv(&a), &mv(&b), &mv(&c), eps).unwrap();
            match (base.bounds(), moved.bounds()) {
                (Some((l1, h1)), Some((l2, h2))) => {
                    // Endpoints move by O(sqrt(rounding)) near tangency; compare away from it.
                    if h1 - l1 > 1e-3 {
                        prop_assert!((l1 - l2).abs() <= 1e-9 && (h1 - h2).abs() <= 1e-9,
                            "{base:?} vs {moved:?}");
                    }
                }
                (None, None) => {}
                (x, y) => {
                    // Only allowed in the grazing band.
                    let len = x.or(y).map(|(l, h)| h - l).unwrap();
                    prop_assert!(len < 1e-3, "{base:?} vs {moved:?}");
                }
            }
        }

        #[test]
        fn curve_point_lipschitz(t1 in 0.0..4.0f64, t2 in 0.0..4.0f64,
                                 pts in proptest::collection::vec((coord(), coord()), 4)) {
            let curve = ClosedCurve::from_xy(&pts).unwrap();
            let l = curve.max_edge_length();
            let p1 = curve_point(&curve, t1).unwrap();
            let p2 = curve_point(&curve, t2).unwrap();
            prop_assert!(p1.distance(&p2).unwrap() <= l * (t1 - t2).abs() + 1e-9);
        }
    }
}
