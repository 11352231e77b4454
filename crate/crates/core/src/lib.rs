//! Fréchet distance between closed polygonal curves.
//!
//! The crate decides whether `δ(X, Y) <= eps` in `O(mn)` time for closed
//! curves with `m` and `n` vertices, and estimates `δ` itself by bisection
//! over that decision.
//!
//! The pipeline is:
//!
//! 1. [`freespace::BoundaryGrid`]: free intervals on every cell edge of the
//!    doubled free-space diagram `[0, 2m] x [0, n]`.
//! 2. [`freespace::ReachGrid`]: the parts of those edges reachable by a
//!    monotone path from the bottom side and from the top side.
//! 3. [`pointer_pass`]: deque-based forward and backward passes that carry the
//!    rightmost-origin reach functions across the diagram.
//! 4. [`decision`]: the final per-column test and the witness shift.
//!
//! [`oracle`] holds slow reference implementations used by the test suites.
//!
//! ```
//! use closed_frechet::{decide, distance, ClosedCurve};
//!
//! let square = ClosedCurve::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
//! let shifted = ClosedCurve::from_xy(&[(0.5, 0.0), (1.5, 0.0), (1.5, 1.0), (0.5, 1.0)]).unwrap();
//!
//! assert!(decide(&square, &shifted, 0.500001).unwrap().answer);
//! assert!(!decide(&square, &shifted, 0.499999).unwrap().answer);
//!
//! let d = distance(&square, &shifted, 1e-6).unwrap();
//! assert!((d.distance - 0.5).abs() <= 1e-6);
//! ```

pub mod curve_file;
pub mod decision;
pub mod error;
pub mod freespace;
pub mod geometry;
pub mod oracle;
pub mod pointer_pass;

pub use decision::{decide, distance, DecisionReport, DistanceEstimate};
pub use error::{FrechetError, Result};
pub use freespace::{build_boundary_grid, propagate_reach, BoundaryGrid, ReachGrid, ReachSweep};
pub use geometry::{
    curve_point, edge_free_interval, eps_upper_bound, ClosedCurve, Interval, Point,
};
