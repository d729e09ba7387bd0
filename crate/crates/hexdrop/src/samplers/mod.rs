//! Exact inverse-transform samplers for uniform points over the cell shapes,
//! their analytic marginal densities and CDFs, and a rejection-sampling
//! oracle used for cross-validation.
//!
//! A point is drawn in two stages: the x-coordinate comes from the closed-form
//! inverse of the marginal CDF of X; the y-coordinate is then uniform on the
//! vertical chord of the shape at that x. Both stages consume exactly one
//! standard-uniform draw, so a sample costs exactly two draws.
//!
//! Marginal inverse CDFs (side length L):
//!
//! hexagon, support [−L, L], branch points u = 1/6, 5/6:
//!   u ≤ 1/6:        x = L(√(3u/2) − 1)
//!   1/6 ≤ u ≤ 5/6:  x = (3L/4)(2u − 1)
//!   u ≥ 5/6:        x = L(1 − √(3(1−u)/2))
//!
//! rhombus, support [−L/2, L], branch points u = 1/4, 3/4:
//!   u ≤ 1/4:        x = (L/2)(2√u − 1)
//!   1/4 ≤ u ≤ 3/4:  x = L(u − 1/4)
//!   u ≥ 3/4:        x = L(1 − √(1−u))
//!
//! triangle, support [0, L], branch point u = 1/2:
//!   u ≤ 1/2:        x = L√(u/2)
//!   u ≥ 1/2:        x = L(1 − √((1−u)/2))
//!
//! At a branch point the meeting formulas agree, so taking the lower branch
//! is observationally irrelevant.

mod rng;

pub use rng::{mix64, RandomStream, UnitSource};

use crate::geometry::{CellShape, Point, ShapeKind, SQRT3};
use thiserror::Error;

/// Argument outside the open domain of a sampler operation.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum DomainError {
    #[error("uniform variate {0} outside the open interval (0, 1)")]
    UnitInterval(f64),
    #[error("x = {x} outside the open x-support ({lo}, {hi})")]
    XSupport { x: f64, lo: f64, hi: f64 },
}

/// Inverse of the marginal CDF of X, evaluated at `u` ∈ (0, 1).
///
/// Strictly increasing in `u`; the result lies strictly inside the x-support.
pub fn inv_cdf_x(shape: CellShape, u: f64) -> Result<f64, DomainError> {
    if !(u > 0.0 && u < 1.0) {
        return Err(DomainError::UnitInterval(u));
    }
    let l = shape.side();
    Ok(match shape.kind() {
        ShapeKind::Hexagon => {
            if u <= 1.0 / 6.0 {
                l * ((1.5 * u).sqrt() - 1.0)
            } else if u <= 5.0 / 6.0 {
                0.75 * l * (2.0 * u - 1.0)
            } else {
                l * (1.0 - (1.5 * (1.0 - u)).sqrt())
            }
        }
        ShapeKind::Rhombus => {
            if u <= 0.25 {
                0.5 * l * (2.0 * u.sqrt() - 1.0)
            } else if u <= 0.75 {
                l * (u - 0.25)
            } else {
                l * (1.0 - (1.0 - u).sqrt())
            }
        }
        ShapeKind::Triangle => {
            if u <= 0.5 {
                l * (0.5 * u).sqrt()
            } else {
                l * (1.0 - (0.5 * (1.0 - u)).sqrt())
            }
        }
    })
}

/// Marginal CDF of X. Clamped to 0 below the support and 1 above it.
pub fn cdf_x(shape: CellShape, x: f64) -> f64 {
    let l = shape.side();
    match shape.kind() {
        ShapeKind::Hexagon => {
            if x <= -l {
                0.0
            } else if x <= -0.5 * l {
                let t = (l + x) / l;
                (2.0 / 3.0) * t * t
            } else if x <= 0.5 * l {
                0.5 + 2.0 * x / (3.0 * l)
            } else if x < l {
                let t = (l - x) / l;
                1.0 - (2.0 / 3.0) * t * t
            } else {
                1.0
            }
        }
        ShapeKind::Rhombus => {
            if x <= -0.5 * l {
                0.0
            } else if x <= 0.0 {
                let t = (x + 0.5 * l) / l;
                t * t
            } else if x <= 0.5 * l {
                0.25 + x / l
            } else if x < l {
                let t = (l - x) / l;
                1.0 - t * t
            } else {
                1.0
            }
        }
        ShapeKind::Triangle => {
            if x <= 0.0 {
                0.0
            } else if x <= 0.5 * l {
                let t = x / l;
                2.0 * t * t
            } else if x < l {
                let t = (l - x) / l;
                1.0 - 2.0 * t * t
            } else {
                1.0
            }
        }
    }
}

/// Marginal density of X (zero outside the support).
pub fn pdf_x(shape: CellShape, x: f64) -> f64 {
    let l = shape.side();
    match shape.kind() {
        ShapeKind::Hexagon => {
            let ax = x.abs();
            if ax <= 0.5 * l {
                2.0 / (3.0 * l)
            } else if ax <= l {
                4.0 * (l - ax) / (3.0 * l * l)
            } else {
                0.0
            }
        }
        ShapeKind::Rhombus => {
            if (-0.5 * l..=0.0).contains(&x) {
                (2.0 * x + l) / (l * l)
            } else if (0.0..=0.5 * l).contains(&x) {
                1.0 / l
            } else if (0.5 * l..=l).contains(&x) {
                2.0 * (l - x) / (l * l)
            } else {
                0.0
            }
        }
        ShapeKind::Triangle => {
            if (0.0..=0.5 * l).contains(&x) {
                4.0 * x / (l * l)
            } else if (0.5 * l..=l).contains(&x) {
                4.0 * (l - x) / (l * l)
            } else {
                0.0
            }
        }
    }
}

/// Marginal CDF of Y. Clamped outside the support.
///
/// The hexagon's y-marginal is the trapezoid 1/2 + 4y/(3√3L) − 2y²/(9L²) for
/// y ≥ 0 (mirrored below); the rhombus is a parallelogram so Y is uniform on
/// (0, √3L/2); the triangle gives 4y/(√3L) − 4y²/(3L²).
pub fn cdf_y(shape: CellShape, y: f64) -> f64 {
    let l = shape.side();
    let top = 0.5 * SQRT3 * l;
    match shape.kind() {
        ShapeKind::Hexagon => {
            if y <= -top {
                0.0
            } else if y >= top {
                1.0
            } else if y >= 0.0 {
                0.5 + 4.0 * y / (3.0 * SQRT3 * l) - 2.0 * y * y / (9.0 * l * l)
            } else {
                1.0 - cdf_y(shape, -y)
            }
        }
        ShapeKind::Rhombus => (y / top).clamp(0.0, 1.0),
        ShapeKind::Triangle => {
            if y <= 0.0 {
                0.0
            } else if y >= top {
                1.0
            } else {
                4.0 * y / (SQRT3 * l) - 4.0 * y * y / (3.0 * l * l)
            }
        }
    }
}

/// Joint density: the reciprocal shape area inside the region, 0 outside.
pub fn joint_pdf(shape: CellShape, p: Point) -> f64 {
    if shape.contains(p, 0.0) {
        1.0 / shape.area()
    } else {
        0.0
    }
}

/// Support of Y conditioned on X = `x0`: Y | X=x0 is uniform on (lo, hi).
///
/// `x0` must lie strictly inside the open x-support; at the endpoints the
/// chord degenerates to a point. Inverse-transform x-draws never land there.
pub fn cond_y_bounds(shape: CellShape, x0: f64) -> Result<(f64, f64), DomainError> {
    let l = shape.side();
    let (lo, hi) = shape.x_support();
    if !(x0 > lo && x0 < hi) {
        return Err(DomainError::XSupport { x: x0, lo, hi });
    }
    Ok(match shape.kind() {
        ShapeKind::Hexagon => {
            let half = if x0 <= -0.5 * l {
                SQRT3 * (x0 + l)
            } else if x0 <= 0.5 * l {
                0.5 * SQRT3 * l
            } else {
                SQRT3 * (l - x0)
            };
            (-half, half)
        }
        ShapeKind::Rhombus => {
            if x0 <= 0.0 {
                (-SQRT3 * x0, 0.5 * SQRT3 * l)
            } else if x0 <= 0.5 * l {
                (0.0, 0.5 * SQRT3 * l)
            } else {
                (0.0, SQRT3 * (l - x0))
            }
        }
        ShapeKind::Triangle => {
            if x0 <= 0.5 * l {
                (0.0, SQRT3 * x0)
            } else {
                (0.0, SQRT3 * (l - x0))
            }
        }
    })
}

/// Draw one point uniformly over `shape`, consuming exactly two stream draws:
/// the first selects x through the inverse marginal CDF, the second places y
/// uniformly on the conditional chord.
pub fn sample_point<R: UnitSource>(shape: CellShape, rng: &mut R) -> Point {
    let u1 = rng.next_unit();
    let u2 = rng.next_unit();
    let x = inv_cdf_x(shape, u1).expect("unit source must stay in (0, 1)");
    let (lo, hi) = cond_y_bounds(shape, x).expect("inverse CDF stays in the open support");
    Point::new(x, lo + u2 * (hi - lo))
}

/// Independent oracle: draw uniformly from the shape's bounding box and keep
/// the first point that lands inside. Uniform over the shape by construction;
/// draw count varies (two per attempt).
pub fn sample_point_rejection<R: UnitSource>(shape: CellShape, rng: &mut R) -> Point {
    let (lo, hi) = shape.bounding_box();
    loop {
        let p = Point::new(
            lo.x + rng.next_unit() * (hi.x - lo.x),
            lo.y + rng.next_unit() * (hi.y - lo.y),
        );
        if shape.contains(p, 0.0) {
            return p;
        }
    }
}
