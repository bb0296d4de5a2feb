//! Seeded random structures and group elements for property checks.
//!
//! Everything is drawn from a `ChaCha8Rng`, so a seed reproduces a run exactly
//! on every platform.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{GroupElement, Orientation};
use crate::algebra::{Christoffel, Signature, DEGENERACY_TOL};

/// Entries are drawn uniformly from `[-ENTRY_RANGE, ENTRY_RANGE]`.
pub const ENTRY_RANGE: f64 = 2.0;

/// Samples with `|det ρ_s| ≤ NONDEGENERACY_MARGIN·‖ρ_s‖²` are rejected.
pub const NONDEGENERACY_MARGIN: f64 = 1e-6;

/// Group elements with `|det g| < MIN_GROUP_DET` are rejected.
pub const MIN_GROUP_DET: f64 = 0.1;

const MAX_ATTEMPTS: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn complex(&mut self, radius: f64) -> Complex64 {
        Complex64::new(self.uniform(-radius, radius), self.uniform(-radius, radius))
    }

    /// Uniform entries; with `torsion_free` the `12` and `21` slots are tied.
    pub fn christoffel(&mut self, torsion_free: bool) -> Christoffel {
        let mut v = [0.0; 8];
        for x in &mut v {
            *x = self.uniform(-ENTRY_RANGE, ENTRY_RANGE);
        }
        if torsion_free {
            // Γ_21^k := Γ_12^k
            v[4] = v[2];
            v[5] = v[3];
        }
        Christoffel::from_array(v).expect("finite by construction")
    }

    /// A structure whose `ρ_s` clears the nondegeneracy margin.
    pub fn nondegenerate(&mut self, torsion_free: bool) -> Christoffel {
        for _ in 0..MAX_ATTEMPTS {
            let g = self.christoffel(torsion_free);
            let rho = g.ricci_symmetric();
            let scale = rho.max_abs();
            if rho.det().abs() > NONDEGENERACY_MARGIN * scale * scale && scale > 0.0 {
                return g;
            }
        }
        unreachable!("nondegenerate samples are generic")
    }

    /// A nondegenerate structure whose `ρ_s` has the given signature.
    pub fn in_class(&mut self, sig: Signature, torsion_free: bool) -> Christoffel {
        assert!(!sig.is_degenerate(), "signature class must be nondegenerate");
        for _ in 0..MAX_ATTEMPTS {
            let g = self.nondegenerate(torsion_free);
            if g.ricci_symmetric().signature(DEGENERACY_TOL) == Ok(sig) {
                return g;
            }
        }
        panic!("no sample of signature {sig} in {MAX_ATTEMPTS} attempts");
    }

    /// Uniform entries with `|det| ≥ MIN_GROUP_DET`; `orientation` forces the sign of `det`.
    pub fn gl(&mut self, orientation: Option<Orientation>) -> GroupElement {
        loop {
            let mut a = [[0.0; 2]; 2];
            for x in a.iter_mut().flatten() {
                *x = self.uniform(-ENTRY_RANGE, ENTRY_RANGE);
            }
            let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            if det.abs() < MIN_GROUP_DET {
                continue;
            }
            let flip = match orientation {
                Some(Orientation::Preserving) => det < 0.0,
                Some(Orientation::Reversing) => det > 0.0,
                None => false,
            };
            if flip {
                a.swap(0, 1);
            }
            return GroupElement::new(a).expect("determinant bounded away from zero");
        }
    }
}
