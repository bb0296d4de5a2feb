//! Complex coordinates near the exceptional orbit and the ℤ₃ / S₃ slices.
//!
//! In the frame `f₁ = e₁ + i e₂`, `f₂ = e₁ − i e₂` a real structure is
//! determined by four complex numbers
//! `α = (Γ̃_11^1, Γ̃_11^2, Γ̃_12^1, Γ̃_12^2)`; the other four slots are their
//! conjugates with every index swapped `1 ↔ 2`. A rotation by `θ` multiplies
//! each slot by `e^{iεθ}` with `ε` from [`ComplexChristoffel::SLOT_WEIGHTS`].
//!
//! `Γ₀` becomes `α = (0, −2, 0, 0)`. The slice through `α = (0, 1, 0, 0)`,
//! `s_W(α₁, α₂) = (0, 1, ᾱ₂, α₁)`, is transversal to the orbit there; rotation
//! by `2π/3` acts on it as `(α₁, α₂) ↦ (λα₁, λα₂)` and the reflection
//! `diag(1, −1)` as complex conjugation. On the torsion-free slice
//! `s_Z(α) = s_W(α, α)`.
//!
//! The group element attached to `(β₁, β₂) ∈ ℂ²` is the transpose of
//! `[[Re u, Im w], [−Im u, Re w]]` with `u = β₁ + β̄₂`, `w = β₁ − β̄₂`;
//! its determinant is `|β₁|² − |β₂|²` and `(e^{iθ}, 0)` is the rotation by `θ`.

use std::f64::consts::TAU;

use nalgebra::SMatrix;
use num_complex::Complex64;

use crate::action::{act, GroupElement};
use crate::algebra::Christoffel;
use crate::error::{Error, Result};

type ComplexSlots = [[[Complex64; 2]; 2]; 2];

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const HALF: Complex64 = Complex64::new(0.5, 0.0);

/// `f_i` in terms of `e_a`.
const F: [[Complex64; 2]; 2] = [[ONE, I], [ONE, Complex64::new(0.0, -1.0)]];
/// `f^k(e_c)`.
const F_DUAL: [[Complex64; 2]; 2] = [
    [HALF, Complex64::new(0.0, -0.5)],
    [HALF, Complex64::new(0.0, 0.5)],
];
/// `e_a` in terms of `f_i`.
const E: [[Complex64; 2]; 2] = [[HALF, HALF], [Complex64::new(0.0, -0.5), Complex64::new(0.0, 0.5)]];
/// `e^c(f_k)`.
const E_DUAL: [[Complex64; 2]; 2] = [[ONE, ONE], [I, Complex64::new(0.0, -1.0)]];

/// The four independent complex slots of a real structure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexChristoffel {
    pub alpha: [Complex64; 4],
}

impl ComplexChristoffel {
    /// Rotation weights of `Γ̃_11^1, Γ̃_11^2, Γ̃_12^1, Γ̃_12^2`.
    pub const SLOT_WEIGHTS: [i32; 4] = [1, 3, -1, 1];

    pub const fn new(alpha: [Complex64; 4]) -> Self {
        Self { alpha }
    }

    pub fn from_real(gamma: &Christoffel) -> Self {
        let mut full: ComplexSlots = [[[Complex64::new(0.0, 0.0); 2]; 2]; 2];
        for (i, plane) in full.iter_mut().enumerate() {
            for (j, row) in plane.iter_mut().enumerate() {
                for (k, out) in row.iter_mut().enumerate() {
                    for a in 0..2 {
                        for b in 0..2 {
                            for c in 0..2 {
                                *out += F[i][a] * F[j][b] * F_DUAL[k][c] * gamma.get(a, b, c);
                            }
                        }
                    }
                }
            }
        }
        Self {
            alpha: [full[0][0][0], full[0][0][1], full[0][1][0], full[0][1][1]],
        }
    }

    /// All eight complex slots, the last four recovered by conjugation.
    pub fn full(&self) -> ComplexSlots {
        let mut out = [[[Complex64::new(0.0, 0.0); 2]; 2]; 2];
        for j in 0..2 {
            for k in 0..2 {
                let a = self.alpha[2 * j + k];
                out[0][j][k] = a;
                out[1][1 - j][1 - k] = a.conj();
            }
        }
        out
    }

    pub fn to_real(&self) -> Christoffel {
        let full = self.full();
        Christoffel::from_fn(|a, b, c| {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        acc += E[a][i] * E[b][j] * E_DUAL[c][k] * full[i][j][k];
                    }
                }
            }
            acc.re
        })
    }

    /// `(Re α₁, Im α₁, …, Re α₄, Im α₄)`.
    pub fn to_reals(&self) -> [f64; 8] {
        let mut out = [0.0; 8];
        for (s, a) in self.alpha.iter().enumerate() {
            out[2 * s] = a.re;
            out[2 * s + 1] = a.im;
        }
        out
    }

    pub fn from_reals(v: [f64; 8]) -> Self {
        let mut alpha = [Complex64::new(0.0, 0.0); 4];
        for (s, a) in alpha.iter_mut().enumerate() {
            *a = Complex64::new(v[2 * s], v[2 * s + 1]);
        }
        Self { alpha }
    }

    pub fn max_abs(&self) -> f64 {
        self.alpha.iter().fold(0.0_f64, |m, a| m.max(a.norm()))
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.alpha
            .iter()
            .zip(&other.alpha)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).norm()))
    }
}

/// Real 8×8 matrix taking `Γ.to_array()` to `ComplexChristoffel::to_reals`.
pub fn complexification_matrix() -> [[f64; 8]; 8] {
    let mut m = [[0.0; 8]; 8];
    for col in 0..8 {
        let mut e = [0.0; 8];
        e[col] = 1.0;
        let image = ComplexChristoffel::from_real(
            &Christoffel::from_array(e).expect("unit vector is finite"),
        )
        .to_reals();
        for (row, v) in image.into_iter().enumerate() {
            m[row][col] = v;
        }
    }
    m
}

/// Real 8×8 matrix taking `to_reals` coordinates back to `Γ.to_array()`.
pub fn realification_matrix() -> [[f64; 8]; 8] {
    let mut m = [[0.0; 8]; 8];
    for col in 0..8 {
        let mut e = [0.0; 8];
        e[col] = 1.0;
        let image = ComplexChristoffel::from_reals(e).to_real().to_array();
        for (row, v) in image.into_iter().enumerate() {
            m[row][col] = v;
        }
    }
    m
}

/// The group element attached to `(β₁, β₂)`; see the module docs.
pub fn linear_map(beta1: Complex64, beta2: Complex64) -> Result<GroupElement> {
    GroupElement::new(generator(beta1, beta2))
}

/// The same matrix without an invertibility requirement, used as a tangent direction.
pub fn generator(beta1: Complex64, beta2: Complex64) -> [[f64; 2]; 2] {
    let u = beta1 + beta2.conj();
    let w = beta1 - beta2.conj();
    // transpose of [[Re u, Im w], [−Im u, Re w]]
    [[u.re, -u.im], [w.im, w.re]]
}

/// Rotation by `2π/3`: the generator of the isotropy of `Γ₀`.
pub fn t_lambda() -> GroupElement {
    GroupElement::rotation(TAU / 3.0)
}

/// `λ = e^{2πi/3}`.
pub fn lambda() -> Complex64 {
    Complex64::from_polar(1.0, TAU / 3.0)
}

/// `s_W(α₁, α₂)`: complex coordinates `(0, 1, ᾱ₂, α₁)`.
pub fn slice_w(alpha1: Complex64, alpha2: Complex64) -> Christoffel {
    ComplexChristoffel::new([Complex64::new(0.0, 0.0), ONE, alpha2.conj(), alpha1]).to_real()
}

/// `s_Z(α) = s_W(α, α)`, torsion free.
pub fn slice_z(alpha: Complex64) -> Christoffel {
    slice_w(alpha, alpha)
}

/// Slice coordinates of a point known to lie on `s_W`, if it does (within `tol`).
pub fn slice_coordinates(gamma: &Christoffel, tol: f64) -> Option<(Complex64, Complex64)> {
    let c = ComplexChristoffel::from_real(gamma);
    let on_slice = c.alpha[0].norm() <= tol && (c.alpha[1] - ONE).norm() <= tol;
    on_slice.then(|| (c.alpha[3], c.alpha[2].conj()))
}

/// The reflection `diag(1, −1)`, acting on the slice as complex conjugation.
pub fn conjugation() -> GroupElement {
    GroupElement::diag(1.0, -1.0).expect("invertible")
}

/// An element of S₃ = ⟨T_λ, conjugation⟩: `T_λ^k` or `T_λ^k ∘ conjugation`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct S3Element {
    pub rotation: u8,
    pub conjugate: bool,
}

impl S3Element {
    pub fn all() -> [S3Element; 6] {
        let mut out = [S3Element {
            rotation: 0,
            conjugate: false,
        }; 6];
        for (n, e) in out.iter_mut().enumerate() {
            e.rotation = (n % 3) as u8;
            e.conjugate = n >= 3;
        }
        out
    }

    pub fn group_element(&self) -> GroupElement {
        let r = GroupElement::rotation(TAU * f64::from(self.rotation) / 3.0);
        if self.conjugate {
            r * conjugation()
        } else {
            r
        }
    }

    /// The induced map on slice coordinates.
    pub fn on_slice(&self, a: Complex64) -> Complex64 {
        let a = if self.conjugate { a.conj() } else { a };
        lambda().powu(u32::from(self.rotation)) * a
    }
}

/// Orbit tangent `d/dt act(exp(tX), Γ̃(0,κ,0,0))` at `t = 0`, `X` from [`generator`].
///
/// Components in slot order `(11¹, 11², 12¹, 12²)`:
/// `(−κβ̄₂, κ(2β₁ − β̄₁), κβ₂, κβ̄₂)`.
pub fn orbit_tangent(kappa: f64, beta1: Complex64, beta2: Complex64) -> [Complex64; 4] {
    [
        -kappa * beta2.conj(),
        kappa * (2.0 * beta1 - beta1.conj()),
        kappa * beta2,
        kappa * beta2.conj(),
    ]
}

/// Central finite-difference orbit tangent along `I + tX` at `base`.
pub fn orbit_tangent_fd(
    base: &Christoffel,
    beta1: Complex64,
    beta2: Complex64,
    h: f64,
) -> Result<[Complex64; 4]> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidParameter(format!("step {h} must be positive")));
    }
    let x = generator(beta1, beta2);
    let curve = |t: f64| -> Result<ComplexChristoffel> {
        let g = GroupElement::new([
            [1.0 + t * x[0][0], t * x[0][1]],
            [t * x[1][0], 1.0 + t * x[1][1]],
        ])?;
        Ok(ComplexChristoffel::from_real(&act(&g, base)))
    };
    let plus = curve(h)?;
    let minus = curve(-h)?;
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (s, v) in out.iter_mut().enumerate() {
        *v = (plus.alpha[s] - minus.alpha[s]) / (2.0 * h);
    }
    Ok(out)
}

/// Columns: orbit tangents for `β₁ ∈ {1, i}`, `β₂ ∈ {1, i}`, then the slice
/// directions `∂/∂Re α₁, ∂/∂Im α₁, ∂/∂Re α₂, ∂/∂Im α₂`, all at `s_W(α₁, α₂)`,
/// in `to_reals` coordinates.
pub fn transversality_matrix(alpha1: Complex64, alpha2: Complex64) -> Result<[[f64; 8]; 8]> {
    let base = slice_w(alpha1, alpha2);
    let h = 1e-6;
    let mut cols: Vec<[f64; 8]> = Vec::with_capacity(8);
    for (b1, b2) in [(ONE, 0.0 * ONE), (I, 0.0 * ONE), (0.0 * ONE, ONE), (0.0 * ONE, I)] {
        cols.push(ComplexChristoffel::new(orbit_tangent_fd(&base, b1, b2, h)?).to_reals());
    }
    // s_W is affine in (α₁, ᾱ₂); its partials are constant.
    let zero = Complex64::new(0.0, 0.0);
    for d in [
        [zero, zero, zero, ONE],
        [zero, zero, zero, I],
        [zero, zero, ONE, zero],
        [zero, zero, -I, zero],
    ] {
        cols.push(ComplexChristoffel::new(d).to_reals());
    }
    let mut m = [[0.0; 8]; 8];
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            m[r][c] = *v;
        }
    }
    Ok(m)
}

/// Numerical rank: singular values above `rel_tol·σ_max`.
pub fn numerical_rank(m: &[[f64; 8]; 8], rel_tol: f64) -> usize {
    let mat = SMatrix::<f64, 8, 8>::from_fn(|r, c| m[r][c]);
    let sv = mat.singular_values();
    let max = sv.max();
    sv.iter().filter(|s| **s > rel_tol * max).count()
}

/// Rank of [`transversality_matrix`]; 8 means the slice is transversal there.
pub fn slice_transversality_rank(alpha1: Complex64, alpha2: Complex64) -> Result<usize> {
    Ok(numerical_rank(&transversality_matrix(alpha1, alpha2)?, 1e-8))
}
