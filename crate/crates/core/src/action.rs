//! The change-of-basis action of `GL(2,ℝ)` on Christoffel symbols.
//!
//! `act(g, Γ)_ij^k = g_i^a g_j^b (g⁻¹)_c^k Γ_ab^c`: the symbols of the same
//! connection in the basis `e'_i = g_i^a e_a`. With this convention
//! `act(g₁, act(g₂, Γ)) = act(g₁g₂, Γ)`, `act(s·id, Γ) = sΓ`, and for
//! `g = diag(a, 1/a)` every slot is scaled by `a^ε_ijk` (see [`weight_exponent`]).
//! The Ricci tensor transforms by congruence, `ρ(gΓ) = g ρ(Γ) gᵀ`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::Mul;

use nalgebra::{SMatrix, SVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{BilinearForm2, Christoffel, Signature, DEGENERACY_TOL};
use crate::error::{Error, Result};
use crate::invariants;
use crate::orbifold::ComplexChristoffel;

/// Default relative residual tolerance for orbit questions.
pub const ORBIT_TOL: f64 = 1e-8;

/// Invariant differences above this (relative) count as a separation certificate.
pub const INVARIANT_SCREEN_TOL: f64 = 1e-6;

/// Grid size for the rotation-angle fallback search.
pub const ANGLE_GRID: usize = 10_000;

/// An invertible real 2×2 matrix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[[f64; 2]; 2]", into = "[[f64; 2]; 2]")]
pub struct GroupElement {
    a: [[f64; 2]; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Preserving,
    Reversing,
}

/// Which group an orbit question is posed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    /// `GL⁺(2,ℝ)`, the oriented moduli problem.
    GlPlus,
    /// `GL(2,ℝ)`, the unoriented moduli problem.
    Gl,
}

impl GroupElement {
    pub fn new(a: [[f64; 2]; 2]) -> Result<Self> {
        if !a.iter().flatten().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("group element"));
        }
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        let scale = a.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()));
        if scale == 0.0 || det.abs() <= 1e-14 * scale * scale {
            return Err(Error::Singular { det });
        }
        Ok(Self { a })
    }

    pub const fn identity() -> Self {
        Self {
            a: [[1.0, 0.0], [0.0, 1.0]],
        }
    }

    pub fn diag(x: f64, y: f64) -> Result<Self> {
        Self::new([[x, 0.0], [0.0, y]])
    }

    pub fn scalar(s: f64) -> Result<Self> {
        Self::diag(s, s)
    }

    /// `[[cos θ, −sin θ], [sin θ, cos θ]]`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            a: [[c, -s], [s, c]],
        }
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        self.a
    }

    pub fn det(&self) -> f64 {
        self.a[0][0] * self.a[1][1] - self.a[0][1] * self.a[1][0]
    }

    pub fn orientation(&self) -> Orientation {
        if self.det() > 0.0 {
            Orientation::Preserving
        } else {
            Orientation::Reversing
        }
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        Self {
            a: [
                [self.a[1][1] / d, -self.a[0][1] / d],
                [-self.a[1][0] / d, self.a[0][0] / d],
            ],
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            a: [[self.a[0][0], self.a[1][0]], [self.a[0][1], self.a[1][1]]],
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((self.a[i][j] - other.a[i][j]).abs());
            }
        }
        m
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.max_abs_diff(&Self::identity()) <= tol
    }
}

impl TryFrom<[[f64; 2]; 2]> for GroupElement {
    type Error = Error;
    fn try_from(a: [[f64; 2]; 2]) -> Result<Self> {
        Self::new(a)
    }
}

impl From<GroupElement> for [[f64; 2]; 2] {
    fn from(g: GroupElement) -> Self {
        g.a
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: Self) -> Self {
        let mut a = [[0.0; 2]; 2];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.a[i][0] * rhs.a[0][j] + self.a[i][1] * rhs.a[1][j];
            }
        }
        Self { a }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{:.6}, {:.6}], [{:.6}, {:.6}]]",
            self.a[0][0], self.a[0][1], self.a[1][0], self.a[1][1]
        )
    }
}

/// `ε_ijk = δ₁ᵢ − δ₂ᵢ + δ₁ⱼ − δ₂ⱼ − δ₁ₖ + δ₂ₖ` for 0-based indices; always odd, `|ε| ≤ 3`.
pub const fn weight_exponent(i: usize, j: usize, k: usize) -> i32 {
    const fn s(x: usize) -> i32 {
        if x == 0 {
            1
        } else {
            -1
        }
    }
    s(i) + s(j) - s(k)
}

pub fn act(g: &GroupElement, gamma: &Christoffel) -> Christoffel {
    let a = g.a;
    let inv = g.inverse().a;
    Christoffel::from_fn(|i, j, k| {
        let mut acc = 0.0;
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    acc += a[i][x] * a[j][y] * inv[z][k] * gamma.get(x, y, z);
                }
            }
        }
        acc
    })
}

/// Finds `h ∈ GL⁺` with `ρ_s(act(h, Γ)) = target` by signature-aware Gram–Schmidt.
///
/// `target` must be the standard form of the signature of `ρ_s(Γ)`; see
/// [`BilinearForm2::standard`].
pub fn normalize_ricci(gamma: &Christoffel, target: &BilinearForm2) -> Result<GroupElement> {
    let rho = gamma.ricci_symmetric();
    let sig = rho.signature(DEGENERACY_TOL)?;
    if sig.is_degenerate() {
        return Err(Error::Degenerate("symmetric Ricci tensor"));
    }
    let target_sig = target.signature(DEGENERACY_TOL)?;
    if target_sig != sig {
        return Err(Error::SignatureMismatch {
            expected: target_sig,
            found: sig,
        });
    }
    if *target != BilinearForm2::standard(sig)? {
        return Err(Error::InvalidParameter(
            "normalization target must be a standard form".into(),
        ));
    }
    let rows = if sig.is_definite() {
        definite_frame(&rho, sig == Signature::NEGATIVE_DEFINITE)
    } else {
        null_frame(&rho)
    };
    let mut h = GroupElement::new(rows)?;
    if h.det() < 0.0 {
        h = if sig.is_definite() {
            GroupElement::new([rows[0], [-rows[1][0], -rows[1][1]]])?
        } else {
            GroupElement::new([rows[1], rows[0]])?
        };
    }
    Ok(h)
}

/// Normalizes `ρ_s` to the standard form of its own signature.
pub fn normalize_to_standard(gamma: &Christoffel) -> Result<(GroupElement, Signature)> {
    let sig = gamma.ricci_symmetric().signature(DEGENERACY_TOL)?;
    if sig.is_degenerate() {
        return Err(Error::Degenerate("symmetric Ricci tensor"));
    }
    let h = normalize_ricci(gamma, &BilinearForm2::standard(sig)?)?;
    Ok((h, sig))
}

fn definite_frame(rho: &BilinearForm2, negative: bool) -> [[f64; 2]; 2] {
    let q = if negative { rho.scaled(-1.0) } else { *rho };
    let e1 = [1.0, 0.0];
    let v1 = scale(e1, 1.0 / q.eval(e1, e1).sqrt());
    let e2 = [0.0, 1.0];
    let proj = q.eval(e2, v1);
    let w = [e2[0] - proj * v1[0], e2[1] - proj * v1[1]];
    let v2 = scale(w, 1.0 / q.eval(w, w).sqrt());
    [v1, v2]
}

fn null_frame(rho: &BilinearForm2) -> [[f64; 2]; 2] {
    let probes = [[1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, -1.0]];
    let x = probes
        .into_iter()
        .max_by(|a, b| {
            let na = rho.eval(*a, *a).abs() / (a[0] * a[0] + a[1] * a[1]);
            let nb = rho.eval(*b, *b).abs() / (b[0] * b[0] + b[1] * b[1]);
            na.total_cmp(&nb)
        })
        .expect("probe list is non-empty");
    let x = scale(x, 1.0 / rho.eval(x, x).abs().sqrt());
    let rx = [
        rho.m[0][0] * x[0] + rho.m[0][1] * x[1],
        rho.m[1][0] * x[0] + rho.m[1][1] * x[1],
    ];
    let y = [-rx[1], rx[0]];
    let y = scale(y, 1.0 / rho.eval(y, y).abs().sqrt());
    let (p, n) = if rho.eval(x, x) > 0.0 { (x, y) } else { (y, x) };
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [
        [r * (p[0] + n[0]), r * (p[1] + n[1])],
        [r * (p[0] - n[0]), r * (p[1] - n[1])],
    ]
}

fn scale(v: [f64; 2], s: f64) -> [f64; 2] {
    [s * v[0], s * v[1]]
}

/// Residual isometries of a normalized `ρ_s`, as candidate parameters.
#[derive(Clone, Copy, Debug)]
enum Residual {
    /// Rotation by this angle (definite signatures).
    Rotation(f64),
    /// `diag(a, 1/a)` (signature (1,1)).
    Boost(f64),
}

impl Residual {
    fn element(self) -> GroupElement {
        match self {
            Residual::Rotation(theta) => GroupElement::rotation(theta),
            Residual::Boost(a) => GroupElement {
                a: [[a, 0.0], [0.0, 1.0 / a]],
            },
        }
    }

    fn is_trivial(self) -> bool {
        match self {
            Residual::Rotation(theta) => {
                let t = theta.rem_euclid(TAU);
                t < 1e-9 || TAU - t < 1e-9
            }
            Residual::Boost(a) => (a - 1.0).abs() < 1e-12,
        }
    }
}

/// Candidates `g` in the residual isometry group with `act(g, from) = to`.
///
/// Every slot of significant magnitude pins `g` to a finite set: `e^{iεθ} = r` has
/// `|ε|` solutions and `a^ε = r` exactly one real one. The returned flag is false
/// when no slot was significant.
fn residual_candidates(
    from: &Christoffel,
    to: &Christoffel,
    definite: bool,
    tol: f64,
) -> (Vec<Residual>, bool) {
    let mut out = Vec::new();
    if definite {
        let a = ComplexChristoffel::from_real(from);
        let b = ComplexChristoffel::from_real(to);
        let floor = tol * a.max_abs();
        for (slot, eps) in ComplexChristoffel::SLOT_WEIGHTS.iter().enumerate() {
            let src = a.alpha[slot];
            if src.norm() <= floor || src.norm() == 0.0 {
                continue;
            }
            let ratio: Complex64 = b.alpha[slot] / src;
            let n = eps.unsigned_abs() as i32;
            for m in 0..n {
                out.push(Residual::Rotation(
                    (ratio.arg() + TAU * f64::from(m)) / f64::from(*eps),
                ));
            }
        }
    } else {
        let floor = tol * from.norm();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let src = from.get(i, j, k);
                    if src.abs() <= floor || src == 0.0 {
                        continue;
                    }
                    let ratio = to.get(i, j, k) / src;
                    if ratio == 0.0 || !ratio.is_finite() {
                        continue;
                    }
                    let eps = f64::from(weight_exponent(i, j, k));
                    out.push(Residual::Boost(ratio.signum() * ratio.abs().powf(1.0 / eps)));
                }
            }
        }
    }
    let any = !out.is_empty();
    (out, any)
}

/// Whether `Γ` has a non-identity stabilizer in `GL⁺`, with a witness if so.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isotropy {
    pub witness: Option<GroupElement>,
}

impl Isotropy {
    pub fn is_nontrivial(&self) -> bool {
        self.witness.is_some()
    }
}

/// Searches the `ρ_s`-isometries for a non-identity `g ∈ GL⁺` with `act(g, Γ) = Γ`.
///
/// Only the exceptional orbit has a hit: there the stabilizer is the ℤ₃ of
/// rotations by `2π/3` in a `ρ_s`-orthonormal frame. The witness returned is the
/// smallest positive rotation angle found.
pub fn isotropy(gamma: &Christoffel, tol: f64) -> Result<Isotropy> {
    let (h, sig) = normalize_to_standard(gamma)?;
    let normal = act(&h, gamma);
    let (mut candidates, _) = residual_candidates(&normal, &normal, sig.is_definite(), tol);
    candidates.retain(|c| !c.is_trivial());
    if let Some(Residual::Rotation(_)) = candidates.first() {
        candidates.sort_by(|x, y| match (x, y) {
            (Residual::Rotation(a), Residual::Rotation(b)) => {
                a.rem_euclid(TAU).total_cmp(&b.rem_euclid(TAU))
            }
            _ => std::cmp::Ordering::Equal,
        });
    }
    let h_inv = h.inverse();
    for c in candidates {
        let g = h_inv * c.element() * h;
        if act(&g, gamma).relative_distance(gamma) <= tol && !g.is_identity(1e-9) {
            return Ok(Isotropy { witness: Some(g) });
        }
    }
    Ok(Isotropy { witness: None })
}

/// Membership in the exceptional orbit `C₀ = GL⁺·Γ₀`.
///
/// Characterized as: torsion free, `ρ_s` of signature (2,0), and non-trivial
/// isotropy. Degenerate `ρ_s` returns false.
pub fn in_exceptional_orbit(gamma: &Christoffel, tol: f64) -> bool {
    if !gamma.is_torsion_free(tol) {
        return false;
    }
    match gamma.ricci_symmetric().signature(DEGENERACY_TOL) {
        Ok(sig) if sig == Signature::NEGATIVE_DEFINITE => {}
        _ => return false,
    }
    isotropy(gamma, tol).is_ok_and(|iso| iso.is_nontrivial())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitStatus {
    /// A witness was found and verified.
    Equivalent,
    /// `ρ_s` signatures differ.
    SignatureMismatch,
    /// One structure is torsion free and the other is not.
    TorsionMismatch,
    /// Both torsion free and their invariants differ.
    InvariantSeparation,
    /// Exhaustive candidate enumeration found no witness.
    NoWitness,
    /// Only the angle-grid fallback ran and it found nothing.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitVerdict {
    pub status: OrbitStatus,
    pub witness: Option<GroupElement>,
    /// Relative residual `‖act(g,Γ₁) − Γ₂‖/‖Γ₂‖` of the witness.
    pub residual: Option<f64>,
}

impl OrbitVerdict {
    fn without_witness(status: OrbitStatus) -> Self {
        Self {
            status,
            witness: None,
            residual: None,
        }
    }

    /// `Some(true)` / `Some(false)`, or `None` when inconclusive.
    pub fn equivalent(&self) -> Option<bool> {
        match self.status {
            OrbitStatus::Equivalent => Some(true),
            OrbitStatus::Inconclusive => None,
            _ => Some(false),
        }
    }
}

/// Numerical decider for `∃ g ∈ group: act(g, Γ₁) = Γ₂`.
#[derive(Clone, Copy, Debug)]
pub struct OrbitDecider {
    pub group: Group,
    pub tol: f64,
    /// Short-circuit torsion-free pairs whose invariants differ.
    pub invariant_screen: bool,
}

impl Default for OrbitDecider {
    fn default() -> Self {
        Self {
            group: Group::GlPlus,
            tol: ORBIT_TOL,
            invariant_screen: true,
        }
    }
}

impl OrbitDecider {
    pub fn new(group: Group, tol: f64) -> Self {
        Self {
            group,
            tol,
            ..Self::default()
        }
    }

    pub fn without_invariant_screen(mut self) -> Self {
        self.invariant_screen = false;
        self
    }

    pub fn decide(&self, a: &Christoffel, b: &Christoffel) -> Result<OrbitVerdict> {
        let (ha, sa) = normalize_to_standard(a)?;
        let (hb, sb) = normalize_to_standard(b)?;
        if sa != sb {
            return Ok(OrbitVerdict::without_witness(OrbitStatus::SignatureMismatch));
        }
        let (tfa, tfb) = (a.is_torsion_free(self.tol), b.is_torsion_free(self.tol));
        if tfa != tfb {
            return Ok(OrbitVerdict::without_witness(OrbitStatus::TorsionMismatch));
        }
        if self.invariant_screen && tfa && self.invariants_separate(a, b) {
            return Ok(OrbitVerdict::without_witness(OrbitStatus::InvariantSeparation));
        }

        let direct = self.search_oriented(a, ha, b, hb, sa)?;
        if direct.status == OrbitStatus::Equivalent || self.group == Group::GlPlus {
            return Ok(direct);
        }

        let t = crate::fixed_points::reflection_t();
        let tb = act(&t, b);
        let (htb, _) = normalize_to_standard(&tb)?;
        let flipped = self.search_oriented(a, ha, &tb, htb, sa)?;
        if let Some(g) = flipped.witness {
            let w = t * g;
            return Ok(OrbitVerdict {
                status: OrbitStatus::Equivalent,
                witness: Some(w),
                residual: Some(act(&w, a).relative_distance(b)),
            });
        }
        let status = if direct.status == OrbitStatus::Inconclusive
            || flipped.status == OrbitStatus::Inconclusive
        {
            OrbitStatus::Inconclusive
        } else {
            OrbitStatus::NoWitness
        };
        Ok(OrbitVerdict::without_witness(status))
    }

    fn invariants_separate(&self, a: &Christoffel, b: &Christoffel) -> bool {
        let (Ok(ia), Ok(ib)) = (invariants::xi(a), invariants::xi(b)) else {
            return false;
        };
        let differs = |x: f64, y: f64| {
            (x - y).abs() > INVARIANT_SCREEN_TOL * (1.0 + x.abs().max(y.abs()))
        };
        let theta_differs = differs(ia.psi3, ib.psi3) || differs(ia.big_psi3, ib.big_psi3);
        match self.group {
            Group::Gl => theta_differs,
            Group::GlPlus => theta_differs || differs(ia.chi, ib.chi),
        }
    }

    fn search_oriented(
        &self,
        a: &Christoffel,
        ha: GroupElement,
        b: &Christoffel,
        hb: GroupElement,
        sig: Signature,
    ) -> Result<OrbitVerdict> {
        let na = act(&ha, a);
        let nb = act(&hb, b);
        let hb_inv = hb.inverse();
        let lift = |r: GroupElement| hb_inv * r * ha;
        let check = |g: GroupElement| {
            let res = act(&g, a).relative_distance(b);
            if res > POLISH_WINDOW {
                return None;
            }
            let (g, res) = polish(g, a, b, res);
            (res <= self.tol).then_some((g, res))
        };

        let (candidates, any_significant) =
            residual_candidates(&na, &nb, sig.is_definite(), self.tol);
        let best = candidates
            .into_iter()
            .filter_map(|c| check(lift(c.element())))
            .min_by(|x, y| x.1.total_cmp(&y.1));
        if let Some((g, res)) = best {
            return Ok(OrbitVerdict {
                status: OrbitStatus::Equivalent,
                witness: Some(g),
                residual: Some(res),
            });
        }
        if any_significant {
            return Ok(OrbitVerdict::without_witness(OrbitStatus::NoWitness));
        }
        if sig.is_definite() {
            if let Some((g, res)) = angle_grid_search(&na, &nb, self.tol)
                .and_then(|theta| check(lift(GroupElement::rotation(theta))))
            {
                return Ok(OrbitVerdict {
                    status: OrbitStatus::Equivalent,
                    witness: Some(g),
                    residual: Some(res),
                });
            }
        }
        Ok(OrbitVerdict::without_witness(OrbitStatus::Inconclusive))
    }
}

/// Candidates with a relative residual above this are not polished.
const POLISH_WINDOW: f64 = 1e-4;

/// A few Gauss–Newton steps on the four entries of `g` for `act(g, a) = b`.
///
/// Candidates come out of the normalized frame, so their residual carries the
/// conditioning of the normalizing matrices; polishing recovers the lost digits.
fn polish(g: GroupElement, a: &Christoffel, b: &Christoffel, residual: f64) -> (GroupElement, f64) {
    let residual_vec = |m: [[f64; 2]; 2]| -> Option<SVector<f64, 8>> {
        let g = GroupElement::new(m).ok()?;
        Some(SVector::from((act(&g, a) - *b).to_array()))
    };
    let (mut best, mut best_res) = (g, residual);
    for _ in 0..4 {
        if best_res <= 1e-14 {
            break;
        }
        let m = best.matrix();
        let Some(r0) = residual_vec(m) else { break };
        let step = 1e-7 * m.iter().flatten().fold(0.0_f64, |x, v| x.max(v.abs()));
        let mut jac = SMatrix::<f64, 8, 4>::zeros();
        for p in 0..4 {
            let (i, j) = (p / 2, p % 2);
            let (mut up, mut down) = (m, m);
            up[i][j] += step;
            down[i][j] -= step;
            let (Some(ru), Some(rd)) = (residual_vec(up), residual_vec(down)) else {
                return (best, best_res);
            };
            jac.set_column(p, &((ru - rd) / (2.0 * step)));
        }
        let Ok(delta) = jac.svd(true, true).solve(&r0, 1e-12) else { break };
        let mut next = m;
        for p in 0..4 {
            next[p / 2][p % 2] -= delta[p];
        }
        let Ok(candidate) = GroupElement::new(next) else { break };
        if candidate.det().signum() != best.det().signum() {
            break;
        }
        let res = act(&candidate, a).relative_distance(b);
        if res >= best_res {
            break;
        }
        best = candidate;
        best_res = res;
    }
    (best, best_res)
}

/// Uniform-grid search for a rotation taking `from` to `to`.
pub(crate) fn angle_grid_search(from: &Christoffel, to: &Christoffel, tol: f64) -> Option<f64> {
    let scale = to.norm().max(from.norm()).max(f64::MIN_POSITIVE);
    (0..ANGLE_GRID)
        .map(|n| TAU * n as f64 / ANGLE_GRID as f64)
        .map(|theta| {
            let d = (act(&GroupElement::rotation(theta), from) - *to).norm() / scale;
            (theta, d)
        })
        .filter(|(_, d)| *d <= tol.max(PI / ANGLE_GRID as f64))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .map(|(theta, _)| theta)
}

/// [`OrbitDecider::decide`] with the invariant screen on.
pub fn orbit_equivalent(
    a: &Christoffel,
    b: &Christoffel,
    group: Group,
    tol: f64,
) -> Result<OrbitVerdict> {
    OrbitDecider::new(group, tol).decide(a, b)
}
