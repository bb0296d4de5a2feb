//! Scalar invariants of torsion-free structures with nondegenerate Ricci tensor.
//!
//! With `ρ` the (symmetric) Ricci tensor, `ρ^{ij}` its inverse and
//! `ρ³_ij = Γ_ik^l Γ_jl^k`:
//!
//! * `ψ₃ = ρ^{ij} ρ³_ij`
//! * `Ψ₃ = det ρ³ / det ρ`
//! * `χ = (τ_1 v_2 − τ_2 v_1)·√|det ρ| / det ρ`, where `τ_a = Γ_ab^b` and
//!   `v_l = Γ_ij^k ρ^{ij} ρ³_kl`.
//!
//! `ψ₃` and `Ψ₃` are `GL(2,ℝ)`-invariant; `χ` picks up `sign(det g)`.
//! `Θ = (ψ₃, Ψ₃)` and `Ξ = (ψ₃, Ψ₃, χ)`.

use serde::{Deserialize, Serialize};

use crate::algebra::{BilinearForm2, Christoffel, DEGENERACY_TOL};
use crate::error::{Error, Result};

/// Relative tolerance for treating a structure as torsion free.
pub const TORSION_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantTriple {
    pub psi3: f64,
    #[serde(rename = "Psi3")]
    pub big_psi3: f64,
    pub chi: f64,
}

impl InvariantTriple {
    pub fn theta(&self) -> (f64, f64) {
        (self.psi3, self.big_psi3)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Refuse structures with torsion.
    Strict,
    /// Evaluate the formulas with `ρ_s` in place of `ρ` even when torsion is
    /// present. The result is not an invariant of anything in that case.
    Permissive,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub values: InvariantTriple,
    /// False when the input had torsion (permissive mode only).
    pub guaranteed: bool,
}

struct Ingredients {
    rho: BilinearForm2,
    rho_inv: BilinearForm2,
    rho3: BilinearForm2,
}

fn ingredients(gamma: &Christoffel, mode: Mode) -> Result<(Ingredients, bool)> {
    let torsion_free = gamma.is_torsion_free(TORSION_TOL);
    if !torsion_free && mode == Mode::Strict {
        return Err(Error::Torsion);
    }
    let rho = gamma.ricci_symmetric();
    if rho.is_degenerate(DEGENERACY_TOL) {
        return Err(Error::Degenerate("Ricci tensor"));
    }
    let rho_inv = rho.inverse()?;
    Ok((
        Ingredients {
            rho,
            rho_inv,
            rho3: gamma.rho3(),
        },
        torsion_free,
    ))
}

fn triple(gamma: &Christoffel, ing: &Ingredients) -> InvariantTriple {
    let psi3 = ing.rho_inv.contract(&ing.rho3);
    let det = ing.rho.det();
    let big_psi3 = ing.rho3.det() / det;

    let mut v = [0.0; 2];
    for (l, vl) in v.iter_mut().enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    *vl += gamma.get(i, j, k) * ing.rho_inv.m[i][j] * ing.rho3.m[k][l];
                }
            }
        }
    }
    let tau = gamma.trace_form();
    let c = tau[0] * v[1] - tau[1] * v[0];
    let chi = c * det.abs().sqrt() / det;
    InvariantTriple {
        psi3,
        big_psi3,
        chi,
    }
}

/// All three invariants under the given mode.
pub fn evaluate(gamma: &Christoffel, mode: Mode) -> Result<Evaluation> {
    let (ing, torsion_free) = ingredients(gamma, mode)?;
    Ok(Evaluation {
        values: triple(gamma, &ing),
        guaranteed: torsion_free,
    })
}

/// `Ξ = (ψ₃, Ψ₃, χ)`, strict mode.
pub fn xi(gamma: &Christoffel) -> Result<InvariantTriple> {
    evaluate(gamma, Mode::Strict).map(|e| e.values)
}

/// `Θ = (ψ₃, Ψ₃)`, strict mode.
pub fn theta(gamma: &Christoffel) -> Result<(f64, f64)> {
    xi(gamma).map(|t| t.theta())
}

pub fn psi3(gamma: &Christoffel) -> Result<f64> {
    xi(gamma).map(|t| t.psi3)
}

#[allow(non_snake_case)]
pub fn Psi3(gamma: &Christoffel) -> Result<f64> {
    xi(gamma).map(|t| t.big_psi3)
}

pub fn chi(gamma: &Christoffel) -> Result<f64> {
    xi(gamma).map(|t| t.chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{act, GroupElement};
    use crate::algebra::gamma0;
    use crate::sampling::Sampler;
    use proptest::prelude::*;

    /// Straight index loops over the definitions, with the Ricci tensor taken
    /// from the full curvature tensor and its inverse by cofactors.
    fn naive(g: &Christoffel) -> (f64, f64, f64) {
        let r = g.curvature().r;
        let mut rho = [[0.0; 2]; 2];
        let mut rho3 = [[0.0; 2]; 2];
        for j in 0..2 {
            for k in 0..2 {
                for i in 0..2 {
                    rho[j][k] += r[i][j][k][i];
                }
                for a in 0..2 {
                    for b in 0..2 {
                        rho3[j][k] += g.get(j, a, b) * g.get(k, b, a);
                    }
                }
            }
        }
        let det = rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0];
        let inv = [
            [rho[1][1] / det, -rho[0][1] / det],
            [-rho[1][0] / det, rho[0][0] / det],
        ];
        let mut psi = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                psi += inv[i][j] * rho3[i][j];
            }
        }
        let big = (rho3[0][0] * rho3[1][1] - rho3[0][1] * rho3[1][0]) / det;
        let mut tau = [0.0; 2];
        let mut v = [0.0; 2];
        for a in 0..2 {
            for b in 0..2 {
                tau[a] += g.get(a, b, b);
            }
        }
        for l in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        v[l] += g.get(i, j, k) * inv[i][j] * rho3[k][l];
                    }
                }
            }
        }
        let chi = (tau[0] * v[1] - tau[1] * v[0]) * det.abs().sqrt() / det;
        (psi, big, chi)
    }

    #[test]
    fn gamma0_values() {
        let t = xi(&gamma0()).unwrap();
        assert!((t.psi3 + 2.0).abs() < 1e-12);
        assert!((t.big_psi3 - 1.0).abs() < 1e-12);
        assert_eq!(t.chi, 0.0);
    }

    #[test]
    fn strict_refuses_torsion() {
        let mut a = [0.0; 8];
        a[2] = 1.0; // Γ_12^1
        a[0] = 1.0;
        let g = Christoffel::from_array(a).unwrap();
        assert_eq!(xi(&g), Err(Error::Torsion));
    }

    #[test]
    fn permissive_flags_torsion() {
        let mut s = Sampler::new(41);
        let g = s.nondegenerate(false);
        let e = evaluate(&g, Mode::Permissive).unwrap();
        assert!(!e.guaranteed);
        let tf = s.nondegenerate(true);
        assert!(evaluate(&tf, Mode::Permissive).unwrap().guaranteed);
    }

    #[test]
    fn degenerate_is_rank_error() {
        assert_eq!(
            xi(&Christoffel::zero()),
            Err(Error::Degenerate("Ricci tensor"))
        );
    }

    #[test]
    fn matches_naive_loops() {
        let mut s = Sampler::new(43);
        for _ in 0..500 {
            let g = s.nondegenerate(true);
            let t = xi(&g).unwrap();
            let (p, b, c) = naive(&g);
            let close = |x: f64, y: f64| (x - y).abs() <= 1e-9 * (1.0 + y.abs());
            assert!(close(t.psi3, p) && close(t.big_psi3, b) && close(t.chi, c));
        }
    }

    #[test]
    fn chi_flips_under_reflection() {
        let mut s = Sampler::new(47);
        let t = GroupElement::diag(-1.0, 1.0).unwrap();
        let mut nonzero = 0;
        for _ in 0..200 {
            let g = s.nondegenerate(true);
            let a = chi(&g).unwrap();
            let b = chi(&act(&t, &g)).unwrap();
            assert!((a + b).abs() <= 1e-9 * (1.0 + a.abs()));
            if a.abs() > 1e-3 {
                nonzero += 1;
            }
        }
        assert!(nonzero > 100);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn invariant_under_change_of_basis(seed in any::<u64>()) {
            let mut s = Sampler::new(seed);
            let g = s.nondegenerate(true);
            let h = s.gl(None);
            let before = xi(&g).unwrap();
            let after = xi(&act(&h, &g)).unwrap();
            let tol = |x: f64| 1e-7 * (1.0 + x.abs());
            prop_assert!((before.psi3 - after.psi3).abs() <= tol(before.psi3));
            prop_assert!((before.big_psi3 - after.big_psi3).abs() <= tol(before.big_psi3));
            let sign = h.det().signum();
            prop_assert!((sign * before.chi - after.chi).abs() <= tol(before.chi));
        }

        #[test]
        fn scale_invariant(seed in any::<u64>(), s in prop_oneof![-5.0..-0.2f64, 0.2..5.0f64]) {
            let mut rng = Sampler::new(seed);
            let g = rng.nondegenerate(true);
            let a = xi(&g).unwrap();
            let b = xi(&g.scaled(s)).unwrap();
            prop_assert!((a.psi3 - b.psi3).abs() <= 1e-9 * (1.0 + a.psi3.abs()));
            prop_assert!((a.big_psi3 - b.big_psi3).abs() <= 1e-9 * (1.0 + a.big_psi3.abs()));
        }
    }
}
