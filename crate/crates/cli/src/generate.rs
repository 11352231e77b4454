//! Deterministic synthetic closed curves.

use std::f64::consts::TAU;

use anyhow::{ensure, Result};
use clap::ValueEnum;
use closed_frechet::ClosedCurve;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Convex polygon with vertices at sorted random angles on the unit circle.
    Polygon,
    /// Alternating outer and inner radii around the origin.
    Star,
    /// Unit circle with radial and angular jitter.
    NoisyCircle,
}

pub fn generate(kind: Kind, m: usize, seed: u64) -> Result<ClosedCurve> {
    ensure!(m >= 1, "a curve needs at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polar: Vec<(f64, f64)> = match kind {
        Kind::Polygon => {
            let mut angles: Vec<f64> = (0..m).map(|_| rng.random_range(0.0..TAU)).collect();
            angles.sort_by(f64::total_cmp);
            angles.into_iter().map(|a| (1.0, a)).collect()
        }
        Kind::Star => {
            let phase = rng.random_range(0.0..TAU);
            let inner = rng.random_range(0.3..0.6);
            (0..m)
                .map(|k| {
                    let r = if k % 2 == 0 { 1.0 } else { inner };
                    (r, phase + TAU * k as f64 / m as f64)
                })
                .collect()
        }
        Kind::NoisyCircle => {
            let step = TAU / m as f64;
            (0..m)
                .map(|k| {
                    let r = 1.0 + rng.random_range(-0.1..0.1);
                    let a = step * (k as f64 + rng.random_range(-0.25..0.25));
                    (r, a)
                })
                .collect()
        }
    };
    let points: Vec<(f64, f64)> = polar
        .into_iter()
        .map(|(r, a)| (r * a.cos(), r * a.sin()))
        .collect();
    Ok(ClosedCurve::from_xy(&points)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_determinism() {
        for kind in [Kind::Polygon, Kind::Star, Kind::NoisyCircle] {
            for m in [1, 3, 17] {
                let a = generate(kind, m, 9).unwrap();
                assert_eq!(a.len(), m);
                assert_eq!(a, generate(kind, m, 9).unwrap());
            }
        }
        assert_ne!(
            generate(Kind::Polygon, 5, 1).unwrap(),
            generate(Kind::Polygon, 5, 2).unwrap()
        );
    }

    #[test]
    fn rejects_zero_vertices() {
        assert!(generate(Kind::Star, 0, 0).is_err());
    }
}
