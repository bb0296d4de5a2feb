//! Curvature, Ricci tensor and moduli invariants of locally homogeneous affine
//! surfaces of Type 𝒜: connections on ℝ² with constant Christoffel symbols,
//! torsion allowed.
//!
//! * [`algebra`]: Christoffel symbols, curvature, Ricci tensors, signatures.
//! * [`action`]: the `GL(2,ℝ)` change-of-basis action, Ricci normalization,
//!   isotropy and an orbit-equivalence decider.
//! * [`invariants`]: `ψ₃`, `Ψ₃`, `χ` for torsion-free structures.
//! * [`moduli_map`]: the curves `σ±` and the signature regions of the
//!   `(ψ₃, Ψ₃)` plane.
//! * [`fixed_points`]: structures fixed by `diag(−1, 1)` and their components.
//! * [`orbifold`]: complex coordinates and the ℤ₃/S₃ slices near the
//!   exceptional orbit.
//! * [`io`] and [`verify`]: document formats and the property suites behind
//!   the command-line tool.
//!
//! ```
//! use affine_moduli::{algebra::gamma0, invariants, moduli_map};
//!
//! let g = gamma0();
//! let (psi3, big_psi3) = invariants::theta(&g).unwrap();
//! assert!((psi3 + 2.0).abs() < 1e-12 && (big_psi3 - 1.0).abs() < 1e-12);
//! let p = moduli_map::plane_point(&g).unwrap();
//! assert_eq!(
//!     moduli_map::classify_point(p, moduli_map::CURVE_TOL),
//!     moduli_map::RegionLabel::Cusp
//! );
//! ```

#![allow(clippy::needless_range_loop)]

pub mod action;
pub mod algebra;
pub mod error;
pub mod fixed_points;
pub mod invariants;
pub mod io;
pub mod moduli_map;
pub mod orbifold;
pub mod sampling;
pub mod verify;

pub use action::{act, GroupElement, Group};
pub use algebra::{gamma0, BilinearForm2, Christoffel, Signature};
pub use error::{Error, Result};
