//! Tensor algebra for Type-𝒜 structures.
//!
//! A Type-𝒜 structure is an affine connection on a surface whose Christoffel
//! symbols `Γ_ij^k` are constant. Derivative terms drop out of every curvature
//! formula, so torsion, curvature, Ricci and the auxiliary `ρ³` contraction are
//! all polynomial in the eight entries:
//!
//! ```text
//! T_ij^k  = Γ_ij^k − Γ_ji^k
//! R_ijk^l = Γ_in^l Γ_jk^n − Γ_jn^l Γ_ik^n
//! ρ_jk    = Γ_in^i Γ_jk^n − Γ_jn^i Γ_ik^n      (= Σ_i R_ijk^i)
//! ρ³_ij   = Γ_ik^l Γ_jl^k
//! ```
//!
//! Indices are 0-based in code; `gamma[0][1][1]` is `Γ_12^2`.
//!
//! # Signature convention
//!
//! [`Signature`] stores `(p, q)` with **`p` = number of negative eigenvalues**
//! and `q` = number of positive eigenvalues. The exceptional structure
//! [`gamma0`] has `ρ_s = diag(−2, −2)` and signature `(2, 0)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Raw `Γ_ij^k` storage, indexed `[i][j][k]`.
pub type Slots<T = f64> = [[[T; 2]; 2]; 2];

/// Default relative tolerance for degeneracy of a bilinear form.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Relative tolerance for the symmetry precondition of [`BilinearForm2::signature`].
pub const SYMMETRY_TOL: f64 = 1e-12;

/// `R_ijk^l = Γ_in^l Γ_jk^n − Γ_jn^l Γ_ik^n`, generic so it can run on exact rationals.
pub fn curvature_kernel<T: Num + Copy>(g: &Slots<T>) -> [[[[T; 2]; 2]; 2]; 2] {
    let mut r = [[[[T::zero(); 2]; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let mut acc = T::zero();
                    for n in 0..2 {
                        acc = acc + g[i][n][l] * g[j][k][n] - g[j][n][l] * g[i][k][n];
                    }
                    r[i][j][k][l] = acc;
                }
            }
        }
    }
    r
}

/// `ρ_jk = Γ_in^i Γ_jk^n − Γ_jn^i Γ_ik^n`.
pub fn ricci_kernel<T: Num + Copy>(g: &Slots<T>) -> [[T; 2]; 2] {
    let mut rho = [[T::zero(); 2]; 2];
    for j in 0..2 {
        for k in 0..2 {
            let mut acc = T::zero();
            for i in 0..2 {
                for n in 0..2 {
                    acc = acc + g[i][n][i] * g[j][k][n] - g[j][n][i] * g[i][k][n];
                }
            }
            rho[j][k] = if cfg!(feature = "mutant-ricci-sign") {
                T::zero() - acc
            } else {
                acc
            };
        }
    }
    rho
}

/// `ρ³_ij = Γ_ik^l Γ_jl^k`.
pub fn rho3_kernel<T: Num + Copy>(g: &Slots<T>) -> [[T; 2]; 2] {
    let mut out = [[T::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = T::zero();
            for k in 0..2 {
                for l in 0..2 {
                    acc = acc + g[i][k][l] * g[j][l][k];
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Constant Christoffel symbols of a Type-𝒜 connection.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Christoffel {
    gamma: Slots,
}

impl Christoffel {
    pub fn new(gamma: Slots) -> Result<Self> {
        if gamma.iter().flatten().flatten().all(|v| v.is_finite()) {
            Ok(Self { gamma })
        } else {
            Err(Error::NonFinite("Christoffel symbols"))
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a structure from `f(i, j, k)`, 0-based.
    ///
    /// # Panics
    ///
    /// Panics if `f` yields a non-finite value.
    pub fn from_fn(mut f: impl FnMut(usize, usize, usize) -> f64) -> Self {
        let mut gamma = [[[0.0; 2]; 2]; 2];
        for (i, plane) in gamma.iter_mut().enumerate() {
            for (j, row) in plane.iter_mut().enumerate() {
                for (k, v) in row.iter_mut().enumerate() {
                    *v = f(i, j, k);
                }
            }
        }
        Self::new(gamma).expect("Christoffel::from_fn produced a non-finite entry")
    }

    /// Entries in lexicographic `(i, j, k)` order: `Γ_11^1, Γ_11^2, Γ_12^1, …, Γ_22^2`.
    pub fn from_array(v: [f64; 8]) -> Result<Self> {
        let mut gamma = [[[0.0; 2]; 2]; 2];
        for (idx, x) in v.into_iter().enumerate() {
            gamma[idx >> 2][(idx >> 1) & 1][idx & 1] = x;
        }
        Self::new(gamma)
    }

    pub fn to_array(&self) -> [f64; 8] {
        let mut out = [0.0; 8];
        for (idx, x) in out.iter_mut().enumerate() {
            *x = self.gamma[idx >> 2][(idx >> 1) & 1][idx & 1];
        }
        out
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.gamma[i][j][k]
    }

    pub fn slots(&self) -> &Slots {
        &self.gamma
    }

    /// Max-abs entry.
    pub fn norm(&self) -> f64 {
        self.gamma
            .iter()
            .flatten()
            .flatten()
            .fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::from_fn(|i, j, k| s * self.gamma[i][j][k])
    }

    /// Max-abs entrywise difference divided by `max(‖other‖, tiny)`.
    pub fn relative_distance(&self, other: &Self) -> f64 {
        let diff = (*self - *other).norm();
        diff / other.norm().max(f64::MIN_POSITIVE)
    }

    /// `T_ij^k = Γ_ij^k − Γ_ji^k`.
    pub fn torsion(&self) -> Slots {
        let mut t = [[[0.0; 2]; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    t[i][j][k] = self.gamma[i][j][k] - self.gamma[j][i][k];
                }
            }
        }
        t
    }

    /// `|Γ_12^k − Γ_21^k| ≤ tol·‖Γ‖` for both `k`. `tol = 0` asks for exact symmetry.
    pub fn is_torsion_free(&self, tol: f64) -> bool {
        let scale = self.norm();
        (0..2).all(|k| (self.gamma[0][1][k] - self.gamma[1][0][k]).abs() <= tol * scale)
    }

    pub fn curvature(&self) -> CurvatureTensor {
        CurvatureTensor {
            r: curvature_kernel(&self.gamma),
        }
    }

    /// The Ricci tensor `ρ`; not symmetric in general when torsion is present.
    pub fn ricci(&self) -> BilinearForm2 {
        BilinearForm2::new(ricci_kernel(&self.gamma))
    }

    /// `ρ_s = ½(ρ + ρᵀ)`.
    pub fn ricci_symmetric(&self) -> BilinearForm2 {
        self.ricci().symmetrized()
    }

    pub fn rho3(&self) -> BilinearForm2 {
        BilinearForm2::new(rho3_kernel(&self.gamma))
    }

    /// `Γ_ab^b`, the contraction that feeds `χ`.
    pub fn trace_form(&self) -> [f64; 2] {
        [
            self.gamma[0][0][0] + self.gamma[0][1][1],
            self.gamma[1][0][0] + self.gamma[1][1][1],
        ]
    }
}

impl Add for Christoffel {
    type Output = Christoffel;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j, k| self.gamma[i][j][k] + rhs.gamma[i][j][k])
    }
}

impl Sub for Christoffel {
    type Output = Christoffel;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j, k| self.gamma[i][j][k] - rhs.gamma[i][j][k])
    }
}

impl Neg for Christoffel {
    type Output = Christoffel;
    fn neg(self) -> Self {
        self.scaled(-1.0)
    }
}

impl Mul<Christoffel> for f64 {
    type Output = Christoffel;
    fn mul(self, rhs: Christoffel) -> Christoffel {
        rhs.scaled(self)
    }
}

/// The exceptional structure: `Γ_11^1 = −1`, `Γ_12^2 = Γ_21^2 = Γ_22^1 = 1`, all else 0.
///
/// It is torsion free, has `ρ = diag(−2, −2)`, and its orbit is the only one
/// with non-trivial orientation-preserving isotropy (a ℤ₃ of rotations).
pub fn gamma0() -> Christoffel {
    let mut g = [[[0.0; 2]; 2]; 2];
    g[0][0][0] = -1.0;
    g[0][1][1] = 1.0;
    g[1][0][1] = 1.0;
    g[1][1][0] = 1.0;
    Christoffel { gamma: g }
}

/// `R_ijk^l`, indexed `[i][j][k][l]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvatureTensor {
    pub r: [[[[f64; 2]; 2]; 2]; 2],
}

impl CurvatureTensor {
    /// `Σ_i R_ijk^i`; agrees with [`Christoffel::ricci`] by construction of the formulas.
    pub fn ricci_trace(&self) -> BilinearForm2 {
        let mut m = [[0.0; 2]; 2];
        for (j, row) in m.iter_mut().enumerate() {
            for (k, v) in row.iter_mut().enumerate() {
                *v = (0..2).map(|i| self.r[i][j][k][i]).sum();
            }
        }
        BilinearForm2::new(m)
    }

    pub fn max_abs(&self) -> f64 {
        self.r
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

/// A real 2×2 matrix read as a bilinear form `b(e_j, e_k) = m[j][k]`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BilinearForm2 {
    pub m: [[f64; 2]; 2],
}

impl BilinearForm2 {
    pub const fn new(m: [[f64; 2]; 2]) -> Self {
        Self { m }
    }

    pub const fn diag(a: f64, b: f64) -> Self {
        Self::new([[a, 0.0], [0.0, b]])
    }

    /// Standard form of each nondegenerate signature:
    /// `diag(−1,−1)`, `dx¹⊗dx² + dx²⊗dx¹`, `diag(1,1)`.
    pub fn standard(sig: Signature) -> Result<Self> {
        match (sig.negative, sig.positive) {
            (2, 0) => Ok(Self::diag(-1.0, -1.0)),
            (1, 1) => Ok(Self::new([[0.0, 1.0], [1.0, 0.0]])),
            (0, 2) => Ok(Self::diag(1.0, 1.0)),
            _ => Err(Error::Degenerate("requested signature")),
        }
    }

    pub fn det(&self) -> f64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn transpose(&self) -> Self {
        Self::new([[self.m[0][0], self.m[1][0]], [self.m[0][1], self.m[1][1]]])
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().fold(0.0_f64, |a, v| a.max(v.abs()))
    }

    pub fn symmetrized(&self) -> Self {
        let off = 0.5 * (self.m[0][1] + self.m[1][0]);
        Self::new([[self.m[0][0], off], [off, self.m[1][1]]])
    }

    pub fn is_symmetric(&self, rel_tol: f64) -> bool {
        (self.m[0][1] - self.m[1][0]).abs() <= rel_tol * self.max_abs()
    }

    /// `|det| ≤ tol·‖b‖²` with `‖·‖` the max-abs entry; scale invariant.
    pub fn is_degenerate(&self, tol: f64) -> bool {
        let n = self.max_abs();
        n == 0.0 || self.det().abs() <= tol * n * n
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if self.is_degenerate(DEGENERACY_TOL) {
            return Err(Error::Singular { det });
        }
        Ok(Self::new([
            [self.m[1][1] / det, -self.m[0][1] / det],
            [-self.m[1][0] / det, self.m[0][0] / det],
        ]))
    }

    /// `a · b · aᵀ`: the form in the basis whose `i`-th vector is row `i` of `a`.
    pub fn congruence(&self, a: &[[f64; 2]; 2]) -> Self {
        let mut out = [[0.0; 2]; 2];
        for (j, row) in out.iter_mut().enumerate() {
            for (k, v) in row.iter_mut().enumerate() {
                let mut acc = 0.0;
                for x in 0..2 {
                    for y in 0..2 {
                        acc += a[j][x] * a[k][y] * self.m[x][y];
                    }
                }
                *v = acc;
            }
        }
        Self::new(out)
    }

    /// `b(u, v)`.
    pub fn eval(&self, u: [f64; 2], v: [f64; 2]) -> f64 {
        let mut acc = 0.0;
        for x in 0..2 {
            for y in 0..2 {
                acc += u[x] * self.m[x][y] * v[y];
            }
        }
        acc
    }

    /// Full contraction `Σ m[i][j]·other[i][j]`.
    pub fn contract(&self, other: &Self) -> f64 {
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| self.m[i][j] * other.m[i][j])
            .sum()
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new([
            [self.m[0][0] - other.m[0][0], self.m[0][1] - other.m[0][1]],
            [self.m[1][0] - other.m[1][0], self.m[1][1] - other.m[1][1]],
        ])
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::new([
            [s * self.m[0][0], s * self.m[0][1]],
            [s * self.m[1][0], s * self.m[1][1]],
        ])
    }

    /// Eigenvalues of a symmetric form, ascending, from the trace/determinant quadratic.
    pub fn symmetric_eigenvalues(&self) -> [f64; 2] {
        let mean = 0.5 * self.trace();
        let half_gap = 0.5 * (self.m[0][0] - self.m[1][1]);
        let off = 0.5 * (self.m[0][1] + self.m[1][0]);
        let r = half_gap.hypot(off);
        [mean - r, mean + r]
    }

    /// Signature `(#negative, #positive)` of a symmetric form.
    ///
    /// The form counts as degenerate when `|det| ≤ tol·‖b‖²`; its single
    /// surviving eigenvalue (if any) is then the larger-magnitude one.
    pub fn signature(&self, tol: f64) -> Result<Signature> {
        if !self.is_symmetric(SYMMETRY_TOL) {
            return Err(Error::NotSymmetric {
                asymmetry: (self.m[0][1] - self.m[1][0]).abs(),
            });
        }
        if self.max_abs() == 0.0 {
            return Ok(Signature::new(0, 0));
        }
        if self.is_degenerate(tol) {
            let [lo, hi] = self.symmetric_eigenvalues();
            let dominant = if lo.abs() > hi.abs() { lo } else { hi };
            return Ok(if dominant < 0.0 {
                Signature::new(1, 0)
            } else {
                Signature::new(0, 1)
            });
        }
        let det = self.det();
        Ok(if det < 0.0 {
            Signature::INDEFINITE
        } else if self.trace() < 0.0 {
            Signature::NEGATIVE_DEFINITE
        } else {
            Signature::POSITIVE_DEFINITE
        })
    }
}

/// `(p, q)` with `p` negative and `q` positive eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    #[serde(rename = "p")]
    pub negative: u8,
    #[serde(rename = "q")]
    pub positive: u8,
}

impl Signature {
    pub const NEGATIVE_DEFINITE: Signature = Signature::new(2, 0);
    pub const INDEFINITE: Signature = Signature::new(1, 1);
    pub const POSITIVE_DEFINITE: Signature = Signature::new(0, 2);

    /// The three nondegenerate classes.
    pub const NONDEGENERATE: [Signature; 3] = [
        Self::NEGATIVE_DEFINITE,
        Self::INDEFINITE,
        Self::POSITIVE_DEFINITE,
    ];

    pub const fn new(negative: u8, positive: u8) -> Self {
        Self { negative, positive }
    }

    pub fn is_degenerate(&self) -> bool {
        self.negative + self.positive < 2
    }

    pub fn is_definite(&self) -> bool {
        !self.is_degenerate() && (self.negative == 0 || self.positive == 0)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.negative, self.positive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent route: `R(∂_i, ∂_j) = [A_i, A_j]` with `(A_i)_{lk} = Γ_ik^l`,
    /// then `ρ_jk = Σ_i ([A_i, A_j])_{ik}`.
    fn ricci_by_commutators(g: &Christoffel) -> [[f64; 2]; 2] {
        let a = |i: usize| {
            let mut m = [[0.0; 2]; 2];
            for l in 0..2 {
                for k in 0..2 {
                    m[l][k] = g.get(i, k, l);
                }
            }
            m
        };
        let mul = |x: [[f64; 2]; 2], y: [[f64; 2]; 2]| {
            let mut out = [[0.0; 2]; 2];
            for r in 0..2 {
                for c in 0..2 {
                    out[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
                }
            }
            out
        };
        let mut rho = [[0.0; 2]; 2];
        for j in 0..2 {
            for k in 0..2 {
                for i in 0..2 {
                    let ab = mul(a(i), a(j));
                    let ba = mul(a(j), a(i));
                    rho[j][k] += ab[i][k] - ba[i][k];
                }
            }
        }
        rho
    }

    fn arb_gamma() -> impl Strategy<Value = Christoffel> {
        prop::array::uniform8(-2.0f64..2.0).prop_map(|v| Christoffel::from_array(v).unwrap())
    }

    #[test]
    fn torsion_of_gamma0_vanishes() {
        assert!(gamma0().torsion().iter().flatten().flatten().all(|&t| t == 0.0));
        assert!(gamma0().is_torsion_free(0.0));
    }

    #[test]
    fn torsion_single_slot() {
        let mut s = [[[0.0; 2]; 2]; 2];
        s[0][1][0] = 1.0;
        let t = Christoffel::new(s).unwrap().torsion();
        assert_eq!(t[0][1][0], 1.0);
        assert_eq!(t[1][0][0], -1.0);
        assert_eq!(t[0][1][1], 0.0);
        assert_eq!(t[0][0][0], 0.0);
    }

    #[test]
    fn zero_is_flat() {
        assert_eq!(Christoffel::zero().curvature().max_abs(), 0.0);
    }

    #[test]
    fn gamma0_curvature_matches_commutator_route() {
        let g = gamma0();
        let r = g.curvature();
        // R_12k^l = ([A_1, A_2])_{lk}; A_1 = [[-1,0],[0,1]], A_2 = [[0,1],[1,0]].
        // [A_1, A_2] = [[0,-2],[2,0]].
        assert_eq!(r.r[0][1][0][1], 2.0);
        assert_eq!(r.r[0][1][1][0], -2.0);
        assert_eq!(r.r[0][1][0][0], 0.0);
        assert_eq!(r.r[1][0][0][1], -2.0);
        assert_eq!(g.ricci().m, ricci_by_commutators(&g));
    }

    #[test]
    fn gamma0_ricci() {
        assert_eq!(gamma0().ricci(), BilinearForm2::diag(-2.0, -2.0));
        assert_eq!(gamma0().ricci_symmetric(), BilinearForm2::diag(-2.0, -2.0));
        assert_eq!(gamma0().rho3(), BilinearForm2::diag(2.0, 2.0));
    }

    #[test]
    fn scaled_gamma0_has_unit_ricci() {
        let rho = gamma0().scaled(std::f64::consts::FRAC_1_SQRT_2).ricci_symmetric();
        let want = BilinearForm2::diag(-1.0, -1.0);
        assert!(rho.sub(&want).max_abs() < 1e-15);
        assert_eq!(rho.signature(DEGENERACY_TOL).unwrap(), Signature::NEGATIVE_DEFINITE);
    }

    #[test]
    fn gamma0_has_four_nonzero_slots() {
        assert_eq!(gamma0().to_array().iter().filter(|v| **v != 0.0).count(), 4);
    }

    #[test]
    fn signature_examples() {
        let sig = |m| BilinearForm2::new(m).signature(DEGENERACY_TOL).unwrap();
        assert_eq!(sig([[-1.0, 0.0], [0.0, -1.0]]), Signature::new(2, 0));
        assert_eq!(sig([[1.0, 0.0], [0.0, -1.0]]), Signature::new(1, 1));
        assert_eq!(sig([[0.0, 1.0], [1.0, 0.0]]), Signature::new(1, 1));
        assert_eq!(sig([[3.0, 0.0], [0.0, 0.0]]), Signature::new(0, 1));
        assert!(sig([[0.0, 0.0], [0.0, 0.0]]).is_degenerate());
    }

    #[test]
    fn signature_rejects_asymmetric() {
        let err = BilinearForm2::new([[0.0, 1.0], [-1.0, 0.0]]).signature(DEGENERACY_TOL);
        assert!(matches!(err, Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn antisymmetric_form_symmetrizes_to_zero() {
        let b = BilinearForm2::new([[0.0, 1.0], [-1.0, 0.0]]);
        assert_eq!(b.symmetrized().max_abs(), 0.0);
    }

    #[test]
    fn array_round_trip_order() {
        let v = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
        let g = Christoffel::from_array(v).unwrap();
        assert_eq!(g.get(0, 1, 0), 3.0);
        assert_eq!(g.get(1, 0, 1), 6.0);
        assert_eq!(g.to_array(), v);
        assert!(Christoffel::from_array([f64::NAN; 8]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn curvature_antisymmetric(g in arb_gamma()) {
            let r = g.curvature().r;
            for i in 0..2 { for j in 0..2 { for k in 0..2 { for l in 0..2 {
                let (x, y) = (r[i][j][k][l], r[j][i][k][l]);
                prop_assert!((x + y).abs() <= 1e-14 * (1.0 + x.abs()));
            }}}}
        }

        #[test]
        fn ricci_is_curvature_trace(g in arb_gamma()) {
            let a = g.ricci();
            let b = g.curvature().ricci_trace();
            prop_assert!(a.sub(&b).max_abs() <= 1e-14 * (1.0 + a.max_abs()));
            let c = ricci_by_commutators(&g);
            prop_assert!(a.sub(&BilinearForm2::new(c)).max_abs() <= 1e-14 * (1.0 + a.max_abs()));
        }

        #[test]
        fn ricci_quadratic(g in arb_gamma(), s in -3.0f64..3.0) {
            let lhs = g.scaled(s).ricci();
            let rhs = g.ricci().scaled(s * s);
            prop_assert!(lhs.sub(&rhs).max_abs() <= 1e-13 * (1.0 + rhs.max_abs()));
        }

        #[test]
        fn symmetric_ricci_exactly_symmetric(g in arb_gamma()) {
            let m = g.ricci_symmetric().m;
            prop_assert_eq!(m[0][1], m[1][0]);
        }

        #[test]
        fn sylvester_congruence(
            d in prop::array::uniform2(prop_oneof![-3.0f64..-0.2, 0.2f64..3.0]),
            a in prop::array::uniform4(-2.0f64..2.0),
        ) {
            let a = [[a[0], a[1]], [a[2], a[3]]];
            let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            prop_assume!(det.abs() > 0.1);
            let b = BilinearForm2::diag(d[0], d[1]);
            let c = b.congruence(&a);
            prop_assert_eq!(
                c.signature(DEGENERACY_TOL).unwrap(),
                b.signature(DEGENERACY_TOL).unwrap()
            );
        }
    }
}
