//! Cell shapes, membership predicates, rotation, and the hex-lattice grid.
//!
//! Canonical frame: every shape sits with its base station at the origin.
//! The hexagon of side `L` has vertices on the x-axis at (±L, 0) and flat
//! edges at y = ±√3·L/2. The rhombus (one 120° sector) spans the vertices
//! (0,0), (L,0), (L/2, √3L/2), (−L/2, √3L/2); the equilateral triangle
//! (one 60° sector) spans (0,0), (L,0), (L/2, √3L/2). Rotating the sector
//! shapes by multiples of their opening angle tiles the full hexagon.
//!
//! Cell centers live on a triangular lattice indexed by (m, n) with
//! x = (3L₀/2)·m, y = (√3L₀/2)·n, where m and n must share parity; indices
//! of mismatched parity fall between lattice rows and are rejected.

use thiserror::Error;

pub(crate) const SQRT3: f64 = 1.732_050_807_568_877_2;

/// A 2-D position in length units. Coordinates are always finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(
            x.is_finite() && y.is_finite(),
            "non-finite point ({x}, {y})"
        );
        Point { x, y }
    }

    /// Rotate counterclockwise about the origin by `phi` radians.
    pub fn rotated(self, phi: f64) -> Point {
        let (sin, cos) = phi.sin_cos();
        Point::new(self.x * cos - self.y * sin, self.x * sin + self.y * cos)
    }

    pub fn translated(self, by: Point) -> Point {
        Point::new(self.x + by.x, self.y + by.y)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
}

/// The three cell geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// Whole omni-directional cell.
    Hexagon,
    /// One 120° sector.
    Rhombus,
    /// One 60° sector.
    Triangle,
}

/// A cell region: shape kind plus side length (hexagon circumradius).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellShape {
    kind: ShapeKind,
    side: f64,
}

impl CellShape {
    pub fn new(kind: ShapeKind, side: f64) -> Self {
        assert!(
            side.is_finite() && side > 0.0,
            "cell side must be positive and finite, got {side}"
        );
        CellShape { kind, side }
    }

    pub fn hexagon(side: f64) -> Self {
        CellShape::new(ShapeKind::Hexagon, side)
    }

    pub fn rhombus(side: f64) -> Self {
        CellShape::new(ShapeKind::Rhombus, side)
    }

    pub fn triangle(side: f64) -> Self {
        CellShape::new(ShapeKind::Triangle, side)
    }

    pub fn kind(self) -> ShapeKind {
        self.kind
    }

    pub fn side(self) -> f64 {
        self.side
    }

    /// Exact region area: hexagon 3√3L²/2, rhombus √3L²/2, triangle √3L²/4.
    pub fn area(self) -> f64 {
        let l2 = self.side * self.side;
        match self.kind {
            ShapeKind::Hexagon => 1.5 * SQRT3 * l2,
            ShapeKind::Rhombus => 0.5 * SQRT3 * l2,
            ShapeKind::Triangle => 0.25 * SQRT3 * l2,
        }
    }

    /// Vertices in counterclockwise order.
    pub fn vertices(self) -> Vec<Point> {
        let l = self.side;
        let h = 0.5 * SQRT3 * l;
        match self.kind {
            ShapeKind::Hexagon => vec![
                Point::new(l, 0.0),
                Point::new(0.5 * l, h),
                Point::new(-0.5 * l, h),
                Point::new(-l, 0.0),
                Point::new(-0.5 * l, -h),
                Point::new(0.5 * l, -h),
            ],
            ShapeKind::Rhombus => vec![
                Point::ORIGIN,
                Point::new(l, 0.0),
                Point::new(0.5 * l, h),
                Point::new(-0.5 * l, h),
            ],
            ShapeKind::Triangle => vec![Point::ORIGIN, Point::new(l, 0.0), Point::new(0.5 * l, h)],
        }
    }

    /// Closed range of the marginal x support.
    pub fn x_support(self) -> (f64, f64) {
        let l = self.side;
        match self.kind {
            ShapeKind::Hexagon => (-l, l),
            ShapeKind::Rhombus => (-0.5 * l, l),
            ShapeKind::Triangle => (0.0, l),
        }
    }

    /// Axis-aligned bounding box as (lower-left, upper-right).
    pub fn bounding_box(self) -> (Point, Point) {
        let l = self.side;
        let h = 0.5 * SQRT3 * l;
        match self.kind {
            ShapeKind::Hexagon => (Point::new(-l, -h), Point::new(l, h)),
            ShapeKind::Rhombus => (Point::new(-0.5 * l, 0.0), Point::new(l, h)),
            ShapeKind::Triangle => (Point::new(0.0, 0.0), Point::new(l, h)),
        }
    }

    /// Closed-region membership: true iff `p` lies inside the shape or within
    /// Euclidean distance `tol` of one of its bounding edges. With `tol = 0`
    /// boundary points (vertices included) are inside.
    ///
    /// Each test below is a signed distance to an edge line, so `tol` is a
    /// length regardless of the edge's slope.
    pub fn contains(self, p: Point, tol: f64) -> bool {
        debug_assert!(tol >= 0.0);
        let l = self.side;
        match self.kind {
            ShapeKind::Hexagon => {
                let (ax, ay) = (p.x.abs(), p.y.abs());
                let top = 0.5 * SQRT3 * l - ay;
                let slant = 0.5 * (SQRT3 * l - SQRT3 * ax - ay);
                top >= -tol && slant >= -tol
            }
            ShapeKind::Rhombus => {
                let bottom = p.y;
                let top = 0.5 * SQRT3 * l - p.y;
                let right = 0.5 * (SQRT3 * l - SQRT3 * p.x - p.y);
                let left = 0.5 * (p.y + SQRT3 * p.x);
                bottom >= -tol && top >= -tol && right >= -tol && left >= -tol
            }
            ShapeKind::Triangle => {
                let bottom = p.y;
                let right = 0.5 * (SQRT3 * l - SQRT3 * p.x - p.y);
                let left = 0.5 * (SQRT3 * p.x - p.y);
                bottom >= -tol && right >= -tol && left >= -tol
            }
        }
    }
}

/// Lattice position of a cell. Valid indices satisfy n ≡ m (mod 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeIndex {
    pub m: i64,
    pub n: i64,
}

/// Raised when a lattice index has mismatched parity and therefore does not
/// name a cell center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("lattice index ({m}, {n}) violates the parity rule n \u{2261} m (mod 2)")]
pub struct ParityError {
    pub m: i64,
    pub n: i64,
}

impl LatticeIndex {
    pub fn new(m: i64, n: i64) -> Self {
        LatticeIndex { m, n }
    }

    /// True iff the index lies on the lattice (m and n share parity).
    pub fn is_valid(self) -> bool {
        (self.m & 1) == (self.n & 1)
    }

    /// Center of this cell for reference size `l0`: ((3l0/2)·m, (√3l0/2)·n).
    pub fn cell_center(self, l0: f64) -> Result<Point, ParityError> {
        assert!(
            l0.is_finite() && l0 > 0.0,
            "reference size must be positive"
        );
        if !self.is_valid() {
            return Err(ParityError {
                m: self.m,
                n: self.n,
            });
        }
        Ok(Point::new(
            1.5 * l0 * self.m as f64,
            0.5 * SQRT3 * l0 * self.n as f64,
        ))
    }

    /// Hexagon-adjacency distance from the origin cell.
    ///
    /// Uses cube coordinates: q = m, r = (n − m)/2, s = −q − r; the graph
    /// distance is max(|q|, |r|, |s|).
    pub fn ring_radius(self) -> Result<u64, ParityError> {
        if !self.is_valid() {
            return Err(ParityError {
                m: self.m,
                n: self.n,
            });
        }
        let q = self.m;
        let r = (self.n - self.m) / 2;
        let s = -q - r;
        Ok(q.unsigned_abs().max(r.unsigned_abs()).max(s.unsigned_abs()))
    }
}

/// All lattice indices exactly `radius` adjacency steps from the origin,
/// sorted by (m, n). Ring 0 is the origin cell; ring r ≥ 1 has 6r cells.
pub fn ring_indices(radius: u64) -> Vec<LatticeIndex> {
    let r = radius as i64;
    let mut out = Vec::with_capacity(if radius == 0 { 1 } else { 6 * radius as usize });
    for m in -r..=r {
        // n shares parity with m and |(n - m)/2| ≤ r bounds the scan.
        let mut n = m - 2 * r;
        while n <= m + 2 * r {
            let idx = LatticeIndex::new(m, n);
            if idx.ring_radius() == Ok(radius) {
                out.push(idx);
            }
            n += 2;
        }
    }
    out.sort();
    out
}
