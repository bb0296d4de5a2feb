//! Structures fixed by the reflection `T = diag(−1, 1)` and the components of
//! their nondegenerate locus.
//!
//! `act(T, Γ) = Γ` forces every slot with an odd number of `1` indices to
//! vanish, leaving `Γ(a, b, c, d)`: `Γ_11^2 = a`, `Γ_12^1 = b`, `Γ_21^1 = c`,
//! `Γ_22^2 = d`. Its Ricci tensor is `diag(a(d − c), b(d − c))`.
//!
//! The diagonal matrices `diag(x, y)` with `xy > 0` preserve the family and send
//! `(a, b, c, d)` to `(x²a/y, yb, yc, yd)`: every sign is kept (`y > 0`) or
//! every sign flips (`y < 0`).

use std::collections::BTreeMap;

use num_traits::Num;
use serde::{Deserialize, Serialize};

use crate::action::{act, GroupElement};
use crate::algebra::{BilinearForm2, Christoffel, Signature, DEGENERACY_TOL};
use crate::error::Result;

/// `T = diag(−1, 1)`.
pub fn reflection_t() -> GroupElement {
    GroupElement::diag(-1.0, 1.0).expect("invertible")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedPointParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl From<(f64, f64, f64, f64)> for FixedPointParams {
    fn from((a, b, c, d): (f64, f64, f64, f64)) -> Self {
        Self { a, b, c, d }
    }
}

/// `Γ(a, b, c, d)` in any number type, as lexicographic slots.
pub fn fixed_family_slots<T: Num + Copy>(a: T, b: T, c: T, d: T) -> [[[T; 2]; 2]; 2] {
    let z = T::zero();
    let mut g = [[[z; 2]; 2]; 2];
    g[0][0][1] = a;
    g[0][1][0] = b;
    g[1][0][0] = c;
    g[1][1][1] = d;
    g
}

pub fn fixed_family(p: FixedPointParams) -> Christoffel {
    Christoffel::new(fixed_family_slots(p.a, p.b, p.c, p.d))
        .expect("fixed-family parameters must be finite")
}

/// `diag(a(d − c), b(d − c))`, the Ricci tensor of `Γ(a, b, c, d)`.
pub fn family_ricci<T: Num + Copy>(a: T, b: T, c: T, d: T) -> [[T; 2]; 2] {
    let z = T::zero();
    [[a * (d - c), z], [z, b * (d - c)]]
}

/// Whether `act(T, Γ) = Γ` within `tol` (relative).
pub fn is_fixed_by_t(gamma: &Christoffel, tol: f64) -> bool {
    (act(&reflection_t(), gamma) - *gamma).norm() <= tol * gamma.norm()
}

/// Projection onto the fixed family (drops the odd slots).
pub fn fixed_part(gamma: &Christoffel) -> FixedPointParams {
    FixedPointParams {
        a: gamma.get(0, 0, 1),
        b: gamma.get(0, 1, 0),
        c: gamma.get(1, 0, 0),
        d: gamma.get(1, 1, 1),
    }
}

/// Sign pattern `(sign a, sign b, sign(d − b))` of a torsion-free fixed point.
pub type SignPattern = [i8; 3];

/// One component of the torsion-free fixed points with nondegenerate Ricci tensor,
/// modulo the diagonal group: an orthant of sign patterns and its negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryComponent {
    pub patterns: [SignPattern; 2],
    pub signature: Signature,
}

/// Representative `(a, b, c, d)` with `c = b` realizing a sign pattern.
pub fn pattern_representative(p: SignPattern) -> FixedPointParams {
    let (a, b, w) = (f64::from(p[0]), f64::from(p[1]), f64::from(p[2]));
    FixedPointParams {
        a,
        b,
        c: b,
        d: b + w,
    }
}

/// Enumerates the components of `{c = b, ρ nondegenerate}` modulo the diagonal
/// group, with the signature of each.
///
/// The locus is cut by `a ≠ 0`, `b ≠ 0`, `d ≠ b` into eight open orthants, and
/// `diag(x, y)` with `y < 0` exchanges each orthant with its negative.
pub fn boundary_components() -> Result<Vec<BoundaryComponent>> {
    let mut out = Vec::new();
    for code in 0..8u8 {
        let s = |bit: u8| if code & (1 << bit) != 0 { -1 } else { 1 };
        let p: SignPattern = [s(2), s(1), s(0)];
        let neg = [-p[0], -p[1], -p[2]];
        if neg < p {
            continue;
        }
        let rho = fixed_family(pattern_representative(p)).ricci_symmetric();
        out.push(BoundaryComponent {
            patterns: [p, neg],
            signature: rho.signature(DEGENERACY_TOL)?,
        });
    }
    Ok(out)
}

/// Number of components per signature.
pub fn component_counts() -> Result<BTreeMap<Signature, usize>> {
    let mut counts = BTreeMap::new();
    for c in boundary_components()? {
        *counts.entry(c.signature).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Ricci tensor of a fixed point, via the closed form.
pub fn fixed_ricci(p: FixedPointParams) -> BilinearForm2 {
    BilinearForm2::new(family_ricci(p.a, p.b, p.c, p.d))
}
