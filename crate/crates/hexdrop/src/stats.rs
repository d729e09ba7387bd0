//! Statistical validation battery: equal-area binning with a chi-square
//! uniformity test, one- and two-sample Kolmogorov–Smirnov tests, and the
//! chi-square quantile machinery they need.
//!
//! All tests run at significance α = 0.001 so that, at the committed seeds,
//! the battery is deterministic in CI while retaining statistical power.

use crate::geometry::{CellShape, Point, ShapeKind};
use crate::samplers::{cdf_x, cdf_y, sample_point, sample_point_rejection, RandomStream};
use serde::Serialize;
use thiserror::Error;

/// Significance level shared by every test in the battery.
pub const ALPHA: f64 = 0.001;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("need at least {required} samples, got {got}")]
    TooFewSamples { got: usize, required: usize },
    #[error("point ({x}, {y}) fell outside every bin")]
    OutsideBins { x: f64, y: f64 },
}

/// Outcome of one goodness-of-fit test. `pass` holds exactly when
/// `statistic <= threshold`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GofReport {
    pub test: String,
    pub statistic: f64,
    pub threshold: f64,
    /// Degrees of freedom for chi-square style tests.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dof: Option<u64>,
    /// Sample count behind the statistic.
    pub n: u64,
    pub pass: bool,
}

impl GofReport {
    fn new(
        test: impl Into<String>,
        statistic: f64,
        threshold: f64,
        dof: Option<u64>,
        n: u64,
    ) -> Self {
        GofReport {
            test: test.into(),
            statistic,
            threshold,
            dof,
            n,
            pass: statistic <= threshold,
        }
    }
}

impl std::fmt::Display for GofReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:<28} stat={:<12.6} threshold={:<12.6} n={:<8}{} {}",
            self.test,
            self.statistic,
            self.threshold,
            self.n,
            match self.dof {
                Some(d) => format!(" dof={d}"),
                None => String::new(),
            },
            if self.pass { "PASS" } else { "FAIL" },
        )
    }
}

/// One triangular bin of an equal-area partition, vertices counterclockwise.
#[derive(Debug, Clone, Copy)]
pub struct TriangleBin {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl TriangleBin {
    fn new(a: Point, b: Point, c: Point) -> Self {
        TriangleBin { a, b, c }
    }

    pub fn area(&self) -> f64 {
        0.5 * ((self.b.x - self.a.x) * (self.c.y - self.a.y)
            - (self.b.y - self.a.y) * (self.c.x - self.a.x))
            .abs()
    }

    /// Membership with `tol` as a Euclidean edge distance; edges count as in.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let edge = |a: Point, b: Point| -> f64 {
            let cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            cross / Point::new(b.x - a.x, b.y - a.y).norm()
        };
        edge(self.a, self.b) >= -tol && edge(self.b, self.c) >= -tol && edge(self.c, self.a) >= -tol
    }

    fn subdivide(&self) -> [TriangleBin; 4] {
        let mid = |p: Point, q: Point| Point::new(0.5 * (p.x + q.x), 0.5 * (p.y + q.y));
        let (ab, bc, ca) = (
            mid(self.a, self.b),
            mid(self.b, self.c),
            mid(self.c, self.a),
        );
        [
            TriangleBin::new(self.a, ab, ca),
            TriangleBin::new(ab, self.b, bc),
            TriangleBin::new(ca, bc, self.c),
            TriangleBin::new(ab, bc, ca),
        ]
    }
}

/// Partition a shape into congruent equal-area triangles.
///
/// Depth 1 splits the hexagon into its 6 center triangles, the rhombus into
/// 2 along the short diagonal, and leaves the triangle whole. Depth 2 splits
/// each of those 4-ways at the edge midpoints (24 / 8 / 4 bins).
pub fn equal_area_partition(shape: CellShape, depth: u32) -> Vec<TriangleBin> {
    assert!(
        depth == 1 || depth == 2,
        "depth must be 1 or 2, got {depth}"
    );
    let v = shape.vertices();
    let base: Vec<TriangleBin> = match shape.kind() {
        ShapeKind::Hexagon => (0..6)
            .map(|i| TriangleBin::new(Point::ORIGIN, v[i], v[(i + 1) % 6]))
            .collect(),
        ShapeKind::Rhombus => vec![
            TriangleBin::new(v[0], v[1], v[2]),
            TriangleBin::new(v[0], v[2], v[3]),
        ],
        ShapeKind::Triangle => vec![TriangleBin::new(v[0], v[1], v[2])],
    };
    if depth == 1 {
        base
    } else {
        base.iter().flat_map(|t| t.subdivide()).collect()
    }
}

/// Chi-square uniformity test over the equal-area partition at `depth`.
///
/// Expected count per bin is N / bins; the threshold is the chi-square
/// 1 − α quantile at (bins − 1) degrees of freedom. Needs N ≥ 10 × bins.
pub fn chi_square_uniformity(
    points: &[Point],
    shape: CellShape,
    depth: u32,
) -> Result<GofReport, StatsError> {
    let bins = equal_area_partition(shape, depth);
    let required = 10 * bins.len();
    if points.len() < required {
        return Err(StatsError::TooFewSamples {
            got: points.len(),
            required,
        });
    }
    let tol = 1e-9 * shape.side();
    let mut counts = vec![0u64; bins.len()];
    for p in points {
        match bins.iter().position(|b| b.contains(*p, tol)) {
            Some(i) => counts[i] += 1,
            None => return Err(StatsError::OutsideBins { x: p.x, y: p.y }),
        }
    }
    let expected = points.len() as f64 / bins.len() as f64;
    let statistic: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    let dof = bins.len() as u64 - 1;
    let threshold = chi_square_quantile(1.0 - ALPHA, dof as f64);
    Ok(GofReport::new(
        format!("chi_square({:?}, {} bins)", shape.kind(), bins.len()),
        statistic,
        threshold,
        Some(dof),
        points.len() as u64,
    ))
}

/// One-sample Kolmogorov–Smirnov statistic sup |F̂(x) − F(x)|.
fn ks_statistic<F: Fn(f64) -> f64>(values: &[f64], cdf: F) -> f64 {
    let mut xs = values.to_vec();
    xs.sort_unstable_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in xs.iter().enumerate() {
        let f = cdf(x);
        d = d.max((f - i as f64 / n).abs());
        d = d.max(((i + 1) as f64 / n - f).abs());
    }
    d
}

/// Asymptotic one-sample KS critical value c(α) = √(−ln(α/2)/2).
fn ks_critical(alpha: f64) -> f64 {
    (-(alpha / 2.0).ln() / 2.0).sqrt()
}

const KS_MIN_SAMPLES: usize = 100;

fn ks_marginal<F: Fn(f64) -> f64>(
    label: String,
    values: Vec<f64>,
    cdf: F,
) -> Result<GofReport, StatsError> {
    if values.len() < KS_MIN_SAMPLES {
        return Err(StatsError::TooFewSamples {
            got: values.len(),
            required: KS_MIN_SAMPLES,
        });
    }
    let n = values.len();
    let d = ks_statistic(&values, cdf);
    let threshold = ks_critical(ALPHA) / (n as f64).sqrt();
    Ok(GofReport::new(label, d, threshold, None, n as u64))
}

/// KS test of the sample x-coordinates against the marginal CDF of X.
pub fn ks_marginal_x(points: &[Point], shape: CellShape) -> Result<GofReport, StatsError> {
    ks_marginal(
        format!("ks_marginal_x({:?})", shape.kind()),
        points.iter().map(|p| p.x).collect(),
        |x| cdf_x(shape, x),
    )
}

/// KS test of the sample y-coordinates against the marginal CDF of Y.
pub fn ks_marginal_y(points: &[Point], shape: CellShape) -> Result<GofReport, StatsError> {
    ks_marginal(
        format!("ks_marginal_y({:?})", shape.kind()),
        points.iter().map(|p| p.y).collect(),
        |y| cdf_y(shape, y),
    )
}

/// Two-sample KS test: sup |F̂_a − F̂_b| against c(α)·√((n+m)/(nm)).
pub fn ks_two_sample(a: &[f64], b: &[f64], label: &str) -> Result<GofReport, StatsError> {
    for s in [a, b] {
        if s.len() < KS_MIN_SAMPLES {
            return Err(StatsError::TooFewSamples {
                got: s.len(),
                required: KS_MIN_SAMPLES,
            });
        }
    }
    let mut xs = a.to_vec();
    let mut ys = b.to_vec();
    xs.sort_unstable_by(f64::total_cmp);
    ys.sort_unstable_by(f64::total_cmp);
    let (n, m) = (xs.len(), ys.len());
    let (nf, mf) = (n as f64, m as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < n || j < m {
        // step past one value, ties on both sides together
        let v = match (xs.get(i), ys.get(j)) {
            (Some(&x), Some(&y)) => x.min(y),
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => break,
        };
        while i < n && xs[i] == v {
            i += 1;
        }
        while j < m && ys[j] == v {
            j += 1;
        }
        d = d.max((i as f64 / nf - j as f64 / mf).abs());
    }
    let threshold = ks_critical(ALPHA) * ((nf + mf) / (nf * mf)).sqrt();
    Ok(GofReport::new(
        format!("ks_two_sample({label})"),
        d,
        threshold,
        None,
        (n + m) as u64,
    ))
}

/// Run the full self-validation battery for one shape: chi-square uniformity
/// over the equal-area bins, KS of both marginals against their closed-form
/// CDFs, and two-sample KS of each coordinate against the rejection oracle.
///
/// The inverse-transform and rejection streams are independent substreams of
/// `seed`, so the whole battery is a pure function of its arguments.
pub fn validation_battery(
    shape: CellShape,
    n: usize,
    seed: u64,
    depth: u32,
) -> Result<Vec<GofReport>, StatsError> {
    let mut inv_rng = RandomStream::substream(seed, 0, shape.kind() as u64);
    let mut rej_rng = RandomStream::substream(seed, 1, shape.kind() as u64);
    let inv: Vec<Point> = (0..n).map(|_| sample_point(shape, &mut inv_rng)).collect();
    let rej: Vec<Point> = (0..n)
        .map(|_| sample_point_rejection(shape, &mut rej_rng))
        .collect();

    let inv_x: Vec<f64> = inv.iter().map(|p| p.x).collect();
    let inv_y: Vec<f64> = inv.iter().map(|p| p.y).collect();
    let rej_x: Vec<f64> = rej.iter().map(|p| p.x).collect();
    let rej_y: Vec<f64> = rej.iter().map(|p| p.y).collect();

    Ok(vec![
        chi_square_uniformity(&inv, shape, depth)?,
        ks_marginal_x(&inv, shape)?,
        ks_marginal_y(&inv, shape)?,
        ks_two_sample(&inv_x, &rej_x, &format!("x, {:?}", shape.kind()))?,
        ks_two_sample(&inv_y, &rej_y, &format!("y, {:?}", shape.kind()))?,
    ])
}

// ---------------------------------------------------------------------------
// chi-square quantiles via the regularized incomplete gamma function
// ---------------------------------------------------------------------------

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function (Lanczos approximation, g = 7).
pub fn ln_gamma(z: f64) -> f64 {
    use std::f64::consts::PI;
    if z < 0.5 {
        // reflection: Γ(z)Γ(1−z) = π / sin(πz)
        (PI / (PI * z).sin()).ln() - ln_gamma(1.0 - z)
    } else {
        let z = z - 1.0;
        let mut x = LANCZOS[0];
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            x += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
    }
}

/// Regularized lower incomplete gamma P(a, x): series for x < a + 1, Lentz
/// continued fraction for the complement otherwise.
pub fn reg_lower_gamma(a: f64, x: f64) -> f64 {
    assert!(a > 0.0 && x.is_finite());
    if x <= 0.0 {
        return 0.0;
    }
    let log_prefix = a * x.ln() - x - ln_gamma(a);
    if x < a + 1.0 {
        let mut term = 1.0 / a;
        let mut sum = term;
        let mut ap = a;
        for _ in 0..500 {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if term.abs() < sum.abs() * 1e-16 {
                break;
            }
        }
        (sum.ln() + log_prefix).exp()
    } else {
        let tiny = 1e-300;
        let mut b = x + 1.0 - a;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..500 {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if d.abs() < tiny {
                d = tiny;
            }
            c = b + an / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let del = d * c;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                break;
            }
        }
        1.0 - (log_prefix.exp()) * h
    }
}

/// Chi-square CDF with `dof` degrees of freedom.
pub fn chi_square_cdf(x: f64, dof: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        reg_lower_gamma(0.5 * dof, 0.5 * x)
    }
}

/// Chi-square quantile: the x with CDF(x) = p, found by bisection (the CDF
/// is strictly increasing on x > 0).
pub fn chi_square_quantile(p: f64, dof: f64) -> f64 {
    assert!((0.0..1.0).contains(&p) && dof > 0.0);
    if p == 0.0 {
        return 0.0;
    }
    let mut hi = dof + 10.0 * (2.0 * dof).sqrt() + 20.0;
    while chi_square_cdf(hi, dof) < p {
        hi *= 2.0;
    }
    let mut lo = 0.0f64;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if chi_square_cdf(mid, dof) < p {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-12 * hi.max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}
