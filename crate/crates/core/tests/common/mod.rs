//! Instance generators shared by the integration tests.
#![allow(dead_code)]

use closed_frechet::{ClosedCurve, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` vertices i.i.d. uniform in the unit square.
pub fn random_curve(rng: &mut impl Rng, m: usize) -> ClosedCurve {
    let pts: Vec<(f64, f64)> = (0..m).map(|_| (rng.random(), rng.random())).collect();
    ClosedCurve::from_xy(&pts).unwrap()
}

/// Vertices on a coarse lattice, so tangencies and shared corners are common.
pub fn lattice_curve(rng: &mut impl Rng, m: usize) -> ClosedCurve {
    let pts: Vec<(f64, f64)> = (0..m)
        .map(|_| {
            (
                rng.random_range(0..4) as f64 * 0.5,
                rng.random_range(0..4) as f64 * 0.5,
            )
        })
        .collect();
    ClosedCurve::from_xy(&pts).unwrap()
}

/// Median of all `m * n` vertex-to-vertex distances.
pub fn median_pair_distance(x: &ClosedCurve, y: &ClosedCurve) -> f64 {
    let mut d: Vec<f64> = x
        .vertices()
        .iter()
        .flat_map(|a| y.vertices().iter().map(move |b| a.distance(b).unwrap()))
        .collect();
    d.sort_by(f64::total_cmp);
    d[d.len() / 2]
}

pub fn square() -> ClosedCurve {
    ClosedCurve::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
}

pub fn point(x: f64, y: f64) -> Point {
    Point::xy(x, y).unwrap()
}
