//! The `(ψ₃, Ψ₃)` plane: boundary curves `σ±` and the three signature regions.
//!
//! `σ±(t) = (±4t² ± 1/t² + 2, 4t⁴ ± 4t² + 2)` for `t > 0`. `σ₊` is a single arc
//! with `x ≥ 6` and `y > 2` increasing in `t`. `σ₋` lives in `x ≤ −2`, has
//! `y = (2t² − 1)² + 1`, and a cusp at `σ₋(1/√2) = (−2, 1)`, the image of `Γ₀`.
//!
//! Regions are decided by ray crossing against sampled polylines, refined on the
//! exact parametrization:
//!
//! * `D20`: a rightward horizontal ray crosses `σ₋` an odd number of times
//!   (between the two branches, left of the cusp);
//! * `D02`: a leftward horizontal ray crosses `σ₊` an odd number of times;
//! * `D11`: everything else.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_traits::Num;
use serde::{Deserialize, Serialize};

use crate::algebra::{Christoffel, Signature};
use crate::error::{Error, Result};
use crate::invariants;

/// Default curve tolerance for boundary and cusp labels, relative to `1 + |x| + |y|`.
pub const CURVE_TOL: f64 = 1e-9;

/// Default polyline size per curve.
pub const DEFAULT_SAMPLES: usize = 2000;

/// Base sampling window in `t`.
pub const T_WINDOW: (f64, f64) = (1e-3, 1e3);

/// `t` at the cusp of `σ₋`.
pub const T_CUSP: f64 = FRAC_1_SQRT_2;

pub const CUSP: PlanePoint = PlanePoint { x: -2.0, y: 1.0 };

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    fn scale(&self) -> f64 {
        1.0 + self.x.abs() + self.y.abs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> i8 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RegionLabel {
    D20,
    D11,
    D02,
    BoundarySigmaPlus,
    BoundarySigmaMinus,
    Cusp,
    Outside,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 7] = [
        RegionLabel::D20,
        RegionLabel::D11,
        RegionLabel::D02,
        RegionLabel::BoundarySigmaPlus,
        RegionLabel::BoundarySigmaMinus,
        RegionLabel::Cusp,
        RegionLabel::Outside,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionLabel::D20 => "D20",
            RegionLabel::D11 => "D11",
            RegionLabel::D02 => "D02",
            RegionLabel::BoundarySigmaPlus => "BoundarySigmaPlus",
            RegionLabel::BoundarySigmaMinus => "BoundarySigmaMinus",
            RegionLabel::Cusp => "Cusp",
            RegionLabel::Outside => "Outside",
        }
    }

    /// The open region of a signature class.
    pub fn open_region(sig: Signature) -> Option<RegionLabel> {
        match (sig.negative, sig.positive) {
            (2, 0) => Some(RegionLabel::D20),
            (1, 1) => Some(RegionLabel::D11),
            (0, 2) => Some(RegionLabel::D02),
            _ => None,
        }
    }

    /// Whether the label lies in the closure of the region of `sig`.
    pub fn in_closure_of(self, sig: Signature) -> bool {
        use RegionLabel::*;
        match (sig.negative, sig.positive) {
            (2, 0) => matches!(self, D20 | BoundarySigmaMinus | Cusp),
            (1, 1) => matches!(self, D11 | BoundarySigmaPlus | BoundarySigmaMinus | Cusp),
            (0, 2) => matches!(self, D02 | BoundarySigmaPlus),
            _ => false,
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RegionLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RegionLabel::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown region label {s:?}")))
    }
}

/// `σ±` as a function of `s = t²`, in any number type (exact for rationals).
pub fn sigma_sq<T: Num + Copy>(branch: Branch, s: T) -> (T, T) {
    let one = T::one();
    let two = one + one;
    let four = two + two;
    match branch {
        Branch::Plus => (four * s + one / s + two, four * s * s + four * s + two),
        Branch::Minus => (two - four * s - one / s, four * s * s - four * s + two),
    }
}

pub fn sigma(branch: Branch, t: f64) -> Result<PlanePoint> {
    if t == 0.0 || !t.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "curve parameter must be finite and nonzero, got {t}"
        )));
    }
    let (x, y) = sigma_sq(branch, t * t);
    Ok(PlanePoint { x, y })
}

/// `dσ±/dt = (±(8t − 2/t³), 16t³ ± 8t)`.
pub fn sigma_derivative(branch: Branch, t: f64) -> Result<PlanePoint> {
    if t == 0.0 || !t.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "curve parameter must be finite and nonzero, got {t}"
        )));
    }
    let s = f64::from(branch.sign());
    Ok(PlanePoint {
        x: s * (8.0 * t - 2.0 / (t * t * t)),
        y: 16.0 * t * t * t + s * 8.0 * t,
    })
}

/// `n` points with `t` evenly spaced over `[t0, t1]`, endpoints included.
pub fn emit_curve(branch: Branch, t_range: (f64, f64), n: usize) -> Result<Vec<(f64, PlanePoint)>> {
    let (t0, t1) = t_range;
    if n < 2 {
        return Err(Error::InvalidParameter("need at least two samples".into()));
    }
    if !(t0.is_finite() && t1.is_finite()) || t0 >= t1 || (t0 <= 0.0 && t1 >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "t range [{t0}, {t1}] must be increasing and exclude 0"
        )));
    }
    (0..n)
        .map(|k| {
            let t = if k == n - 1 {
                t1
            } else {
                t0 + (t1 - t0) * k as f64 / (n - 1) as f64
            };
            sigma(branch, t).map(|p| (t, p))
        })
        .collect()
}

/// `n` log-spaced values over `[lo, hi]`, endpoints exact.
fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|k| match k {
            0 => lo,
            _ if k == n - 1 => hi,
            _ => (a + (b - a) * k as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

/// Log-spaced samples of a curve over `t_window`; `σ₋` always gets its cusp.
///
/// The cusp row is evaluated at `t² = ½` so it is exactly `(−2, 1)`.
pub fn sample_curve(branch: Branch, t_window: (f64, f64), n: usize) -> Result<Vec<(f64, PlanePoint)>> {
    let (lo, hi) = t_window;
    if n < 2 || !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "invalid sampling window [{lo}, {hi}] with {n} samples"
        )));
    }
    let mut ts = log_grid(lo, hi, n);
    let mut out = Vec::with_capacity(n + 1);
    if branch == Branch::Minus && lo < T_CUSP && T_CUSP < hi {
        ts.retain(|t| *t != T_CUSP);
        let at = ts.partition_point(|t| *t < T_CUSP);
        ts.insert(at, T_CUSP);
    }
    for t in ts {
        let p = if branch == Branch::Minus && t == T_CUSP {
            let (x, y) = sigma_sq(Branch::Minus, 0.5);
            PlanePoint { x, y }
        } else {
            sigma(branch, t)?
        };
        out.push((t, p));
    }
    Ok(out)
}

/// Polyline data for both curves, reused across many point queries.
#[derive(Clone, Debug)]
pub struct RegionClassifier {
    samples: usize,
    tol: f64,
    plus: Vec<(f64, PlanePoint)>,
    minus: Vec<(f64, PlanePoint)>,
}

impl RegionClassifier {
    pub fn new(tol: f64) -> Self {
        Self::with_samples(DEFAULT_SAMPLES, tol)
    }

    pub fn with_samples(samples: usize, tol: f64) -> Self {
        let samples = samples.max(16);
        Self {
            samples,
            tol,
            plus: sample_curve(Branch::Plus, T_WINDOW, samples).expect("valid window"),
            minus: sample_curve(Branch::Minus, T_WINDOW, samples).expect("valid window"),
        }
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn classify(&self, p: PlanePoint) -> RegionLabel {
        if !p.is_finite() {
            return RegionLabel::Outside;
        }
        let eps = self.tol * p.scale();
        if p.distance(&CUSP) <= eps {
            return RegionLabel::Cusp;
        }
        // Far points need a wider parameter window to see every crossing.
        let t_lo = 1.0 / (2.0 * (p.x.abs() + 1.0).sqrt());
        let t_hi = 2.0 * p.x.abs().sqrt() + p.y.abs().sqrt().sqrt() + 1.0;
        let widened;
        let (plus, minus) = if t_lo < T_WINDOW.0 || t_hi > T_WINDOW.1 {
            let window = (t_lo.min(T_WINDOW.0), t_hi.max(T_WINDOW.1));
            widened = (
                sample_curve(Branch::Plus, window, self.samples).expect("valid window"),
                sample_curve(Branch::Minus, window, self.samples).expect("valid window"),
            );
            (&widened.0, &widened.1)
        } else {
            (&self.plus, &self.minus)
        };

        let minus_hits = crossings(Branch::Minus, minus, p.y);
        let plus_hits = crossings(Branch::Plus, plus, p.y);
        let near = |xs: &[f64]| xs.iter().any(|x| (x - p.x).abs() <= eps);
        if near(&minus_hits) || curve_distance(Branch::Minus, minus, p) <= eps {
            return RegionLabel::BoundarySigmaMinus;
        }
        if near(&plus_hits) || curve_distance(Branch::Plus, plus, p) <= eps {
            return RegionLabel::BoundarySigmaPlus;
        }
        if minus_hits.iter().filter(|x| **x > p.x).count() % 2 == 1 {
            RegionLabel::D20
        } else if plus_hits.iter().filter(|x| **x < p.x).count() % 2 == 1 {
            RegionLabel::D02
        } else {
            RegionLabel::D11
        }
    }
}

/// x-coordinates where the curve meets the horizontal line `y = y0`.
///
/// Half-open brackets on each polyline segment avoid double counting at
/// vertices; each bracket is bisected on the exact parametrization.
fn crossings(branch: Branch, poly: &[(f64, PlanePoint)], y0: f64) -> Vec<f64> {
    let mut out = Vec::new();
    for w in poly.windows(2) {
        let (ta, pa) = w[0];
        let (tb, pb) = w[1];
        let (fa, fb) = (pa.y - y0, pb.y - y0);
        let up = fa <= 0.0 && fb > 0.0;
        let down = fa > 0.0 && fb <= 0.0;
        if !(up || down) {
            continue;
        }
        let (mut lo, mut hi) = (ta, tb);
        let f = |t: f64| sigma(branch, t).map(|q| q.y - y0).unwrap_or(f64::NAN);
        let flo_neg = fa <= 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if (f(mid) <= 0.0) == flo_neg {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // The endpoint with y exactly y0 (if any) is the crossing.
        let t = if fa == 0.0 {
            ta
        } else if fb == 0.0 {
            tb
        } else {
            0.5 * (lo + hi)
        };
        let x = if branch == Branch::Minus && t == T_CUSP {
            CUSP.x
        } else {
            sigma(branch, t).map(|q| q.x).unwrap_or(f64::NAN)
        };
        out.push(x);
    }
    out
}

fn segment_distance(a: PlanePoint, b: PlanePoint, p: PlanePoint) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let s = if len2 > 0.0 {
        (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    PlanePoint::new(a.x + s * dx, a.y + s * dy).distance(&p)
}

/// Distance from `p` to the curve: nearest polyline segment, then a
/// ternary search on the exact curve around it.
fn curve_distance(branch: Branch, poly: &[(f64, PlanePoint)], p: PlanePoint) -> f64 {
    let Some((k, coarse)) = poly
        .windows(2)
        .enumerate()
        .map(|(k, w)| (k, segment_distance(w[0].1, w[1].1, p)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
    else {
        return f64::INFINITY;
    };
    let lo_idx = k.saturating_sub(1);
    let hi_idx = (k + 2).min(poly.len() - 1);
    let d = |t: f64| sigma(branch, t).map(|q| q.distance(&p)).unwrap_or(f64::INFINITY);
    let mut best = coarse.min(poly[k].1.distance(&p)).min(poly[k + 1].1.distance(&p));
    // Refine on each side of the cusp separately: the distance is unimodal there.
    let mut pieces = vec![(poly[lo_idx].0, poly[hi_idx].0)];
    if branch == Branch::Minus && pieces[0].0 < T_CUSP && T_CUSP < pieces[0].1 {
        pieces = vec![(pieces[0].0, T_CUSP), (T_CUSP, pieces[0].1)];
    }
    for (mut lo, mut hi) in pieces {
        for _ in 0..200 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if m1 <= lo || m2 >= hi {
                break;
            }
            if d(m1) < d(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        best = best.min(d(0.5 * (lo + hi)));
    }
    best
}

/// One-shot classification with a freshly sampled classifier.
pub fn classify_point(p: PlanePoint, tol: f64) -> RegionLabel {
    RegionClassifier::new(tol).classify(p)
}

/// `Θ(Γ) = (ψ₃, Ψ₃)` as a plane point.
pub fn plane_point(gamma: &Christoffel) -> Result<PlanePoint> {
    invariants::theta(gamma).map(|(x, y)| PlanePoint { x, y })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Bounds {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        let ok = [x_min, x_max, y_min, y_max].iter().all(|v| v.is_finite())
            && x_min < x_max
            && y_min < y_max;
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "bounds [{x_min},{x_max}]×[{y_min},{y_max}] must be finite and increasing"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }
}

impl FromStr for Bounds {
    type Err = Error;

    /// `xmin,xmax,ymin,ymax`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|v| v.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidParameter(format!("bounds {s:?}: {e}")))?;
        match parts[..] {
            [a, b, c, d] => Bounds::new(a, b, c, d),
            _ => Err(Error::InvalidParameter(format!(
                "bounds {s:?}: expected xmin,xmax,ymin,ymax"
            ))),
        }
    }
}

/// Labels on the nodes of a `(resolution+1)²` grid, row-major in `y` then `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionGrid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    /// `labels[row][col]` is the label at `(xs[col], ys[row])`.
    pub labels: Vec<Vec<RegionLabel>>,
}

impl RegionGrid {
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64, RegionLabel)> + '_ {
        self.ys.iter().enumerate().flat_map(move |(r, &y)| {
            self.xs
                .iter()
                .enumerate()
                .map(move |(c, &x)| (x, y, self.labels[r][c]))
        })
    }

    pub fn contains(&self, label: RegionLabel) -> bool {
        self.labels.iter().flatten().any(|l| *l == label)
    }
}

/// Grid nodes `x_min + (x_max − x_min)·k/resolution`; doubling the resolution
/// reproduces every node exactly.
fn axis(lo: f64, hi: f64, resolution: usize) -> Vec<f64> {
    (0..=resolution)
        .map(|k| lo + ((hi - lo) * k as f64) / resolution as f64)
        .collect()
}

pub fn region_grid(bounds: Bounds, resolution: usize, tol: f64) -> Result<RegionGrid> {
    if resolution == 0 {
        return Err(Error::InvalidParameter("resolution must be positive".into()));
    }
    let classifier = RegionClassifier::new(tol);
    let xs = axis(bounds.x_min, bounds.x_max, resolution);
    let ys = axis(bounds.y_min, bounds.y_max, resolution);
    let labels = ys
        .iter()
        .map(|&y| xs.iter().map(|&x| classifier.classify(PlanePoint { x, y })).collect())
        .collect();
    Ok(RegionGrid { xs, ys, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gamma0;
    use crate::sampling::Sampler;
    use num_rational::Rational64;

    /// Analytic crossings of `y = y0`, independent of the polylines.
    fn analytic_crossings(branch: Branch, y0: f64) -> Vec<f64> {
        let mut s_values = Vec::new();
        match branch {
            // 4s² + 4s + 2 = y0  ⇒  s = (√(y0 − 1) − 1)/2
            Branch::Plus if y0 > 2.0 => s_values.push(((y0 - 1.0).sqrt() - 1.0) / 2.0),
            // (2s − 1)² + 1 = y0  ⇒  s = (1 ± √(y0 − 1))/2
            Branch::Minus if y0 > 1.0 => {
                let r = (y0 - 1.0).sqrt();
                s_values.push((1.0 + r) / 2.0);
                if r < 1.0 {
                    s_values.push((1.0 - r) / 2.0);
                }
            }
            _ => {}
        }
        s_values.into_iter().map(|s| sigma_sq(branch, s).0).collect()
    }

    fn analytic_label(p: PlanePoint) -> RegionLabel {
        let right = analytic_crossings(Branch::Minus, p.y).iter().filter(|x| **x > p.x).count();
        let left = analytic_crossings(Branch::Plus, p.y).iter().filter(|x| **x < p.x).count();
        if right % 2 == 1 {
            RegionLabel::D20
        } else if left % 2 == 1 {
            RegionLabel::D02
        } else {
            RegionLabel::D11
        }
    }

    #[test]
    fn curve_values() {
        let p = sigma(Branch::Plus, 1.0).unwrap();
        assert_eq!((p.x, p.y), (7.0, 10.0));
        let p = sigma(Branch::Plus, 0.5).unwrap();
        assert_eq!((p.x, p.y), (7.0, 3.25));
        let p = sigma(Branch::Minus, T_CUSP).unwrap();
        assert!(p.distance(&CUSP) < 1e-14);
        assert!(sigma(Branch::Minus, 0.0).is_err());
    }

    #[test]
    fn cusp_exact_in_rationals() {
        let (x, y) = sigma_sq(Branch::Minus, Rational64::new(1, 2));
        assert_eq!(x, Rational64::from_integer(-2));
        assert_eq!(y, Rational64::from_integer(1));
    }

    #[test]
    fn cusp_derivative_vanishes() {
        let d = sigma_derivative(Branch::Minus, T_CUSP).unwrap();
        assert!(d.x.abs() < 1e-12 && d.y.abs() < 1e-12);
        let h = 1e-6;
        let a = sigma(Branch::Minus, T_CUSP + h).unwrap();
        let b = sigma(Branch::Minus, T_CUSP - h).unwrap();
        assert!(((a.x - b.x) / (2.0 * h)).abs() < 1e-6);
        assert!(((a.y - b.y) / (2.0 * h)).abs() < 1e-6);
        // and it does not vanish elsewhere
        let d = sigma_derivative(Branch::Minus, 1.0).unwrap();
        assert!(d.x.hypot(d.y) > 1.0);
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        for branch in [Branch::Plus, Branch::Minus] {
            for t in [0.3, 0.9, 1.7] {
                let h = 1e-6;
                let a = sigma(branch, t + h).unwrap();
                let b = sigma(branch, t - h).unwrap();
                let d = sigma_derivative(branch, t).unwrap();
                assert!(((a.x - b.x) / (2.0 * h) - d.x).abs() < 1e-5);
                assert!(((a.y - b.y) / (2.0 * h) - d.y).abs() < 1e-5);
            }
        }
    }

    #[test]
    fn emit_curve_contract() {
        let pts = emit_curve(Branch::Plus, (1.0, 2.0), 100).unwrap();
        assert_eq!(pts.len(), 100);
        assert_eq!(pts[0].1, sigma(Branch::Plus, 1.0).unwrap());
        assert_eq!(pts[99].1, sigma(Branch::Plus, 2.0).unwrap());
        assert!(pts.iter().all(|(_, p)| p.y >= 10.0));
        assert!(pts.windows(2).all(|w| w[0].0 < w[1].0));
        let pts = emit_curve(Branch::Minus, (0.5, 0.9), 3).unwrap();
        assert_eq!(pts[0].1, sigma(Branch::Minus, 0.5).unwrap());
        assert_eq!(pts[2].1, sigma(Branch::Minus, 0.9).unwrap());
        assert!(emit_curve(Branch::Plus, (-1.0, 1.0), 10).is_err());
        assert!(emit_curve(Branch::Plus, (1.0, 2.0), 1).is_err());
    }

    #[test]
    fn sampled_minus_has_exact_cusp_row() {
        let pts = sample_curve(Branch::Minus, T_WINDOW, 50).unwrap();
        assert!(pts.iter().any(|(t, p)| *t == T_CUSP && *p == CUSP));
    }

    #[test]
    fn labelled_points() {
        let c = RegionClassifier::new(CURVE_TOL);
        assert_eq!(c.classify(CUSP), RegionLabel::Cusp);
        assert_eq!(c.classify(PlanePoint::new(0.0, 1e6)), RegionLabel::D11);
        assert_eq!(c.classify(PlanePoint::new(8.0, 6.0)), RegionLabel::D02);
        assert_eq!(c.classify(PlanePoint::new(-3.0, 1.5)), RegionLabel::D20);
        let d = 1e-3;
        // Directly left of the cusp is below both branches of σ₋.
        assert_eq!(c.classify(PlanePoint::new(-2.0 - d, 1.0)), RegionLabel::D11);
        assert_eq!(c.classify(PlanePoint::new(-2.0 - d, 1.0 + d / 2.0)), RegionLabel::D20);
        assert_eq!(c.classify(PlanePoint::new(f64::NAN, 0.0)), RegionLabel::Outside);
        let on_plus = sigma(Branch::Plus, 1.3).unwrap();
        assert_eq!(c.classify(on_plus), RegionLabel::BoundarySigmaPlus);
        let on_minus = sigma(Branch::Minus, 0.4).unwrap();
        assert_eq!(c.classify(on_minus), RegionLabel::BoundarySigmaMinus);
        assert_eq!(c.classify(plane_point(&gamma0()).unwrap()), RegionLabel::Cusp);
    }

    #[test]
    fn far_points() {
        let c = RegionClassifier::new(CURVE_TOL);
        // Lower branch of σ₋ tends to y = 2 from above as x → −∞.
        assert_eq!(c.classify(PlanePoint::new(-1e8, 2.5)), RegionLabel::D20);
        assert_eq!(c.classify(PlanePoint::new(-1e8, 1.5)), RegionLabel::D11);
        assert_eq!(c.classify(PlanePoint::new(1e8, 10.0)), RegionLabel::D02);
    }

    #[test]
    fn matches_analytic_crossings() {
        let c = RegionClassifier::new(CURVE_TOL);
        let mut s = Sampler::new(71);
        for _ in 0..2000 {
            let p = PlanePoint::new(s.uniform(-30.0, 30.0), s.uniform(-2.0, 30.0));
            let got = c.classify(p);
            if matches!(got, RegionLabel::D20 | RegionLabel::D11 | RegionLabel::D02) {
                assert_eq!(got, analytic_label(p), "{p:?}");
            }
        }
    }

    #[test]
    fn stable_under_refinement() {
        let coarse = RegionClassifier::with_samples(500, CURVE_TOL);
        let fine = RegionClassifier::with_samples(5000, CURVE_TOL);
        let mut s = Sampler::new(73);
        for _ in 0..1000 {
            let p = PlanePoint::new(s.uniform(-20.0, 20.0), s.uniform(-1.0, 20.0));
            assert_eq!(coarse.classify(p), fine.classify(p), "{p:?}");
        }
    }

    #[test]
    fn grid_contains_three_regions_and_is_nested() {
        let b = Bounds::new(-10.0, 10.0, 0.0, 10.0).unwrap();
        let g = region_grid(b, 20, CURVE_TOL).unwrap();
        for l in [RegionLabel::D20, RegionLabel::D11, RegionLabel::D02] {
            assert!(g.contains(l), "{l}");
        }
        let g2 = region_grid(b, 40, CURVE_TOL).unwrap();
        for (r, row) in g.labels.iter().enumerate() {
            for (c, l) in row.iter().enumerate() {
                assert_eq!(g2.xs[2 * c], g.xs[c]);
                assert_eq!(g2.ys[2 * r], g.ys[r]);
                assert_eq!(g2.labels[2 * r][2 * c], *l);
            }
        }
        assert!(region_grid(b, 0, CURVE_TOL).is_err());
    }

    #[test]
    fn bounds_parse() {
        let b: Bounds = "-10,10,0,10".parse().unwrap();
        assert_eq!(b, Bounds::new(-10.0, 10.0, 0.0, 10.0).unwrap());
        assert!("1,0,0,1".parse::<Bounds>().is_err());
        assert!("1,2,3".parse::<Bounds>().is_err());
    }

    #[test]
    fn label_names_round_trip() {
        for l in RegionLabel::ALL {
            assert_eq!(l.name().parse::<RegionLabel>().unwrap(), l);
        }
    }

    #[test]
    fn signature_classes_land_in_their_regions() {
        let c = RegionClassifier::new(CURVE_TOL);
        let mut s = Sampler::new(79);
        for sig in Signature::NONDEGENERATE {
            for _ in 0..200 {
                let g = s.in_class(sig, true);
                let label = c.classify(plane_point(&g).unwrap());
                assert!(label.in_closure_of(sig), "{sig} → {label}");
            }
        }
    }
}
