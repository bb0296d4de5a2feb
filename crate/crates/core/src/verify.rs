//! Seeded property suites run by `affine-moduli verify`.
//!
//! Each property draws its samples from its own [`Sampler`] seeded from the run
//! seed and the property's position in the table, so a single property can be
//! replayed in isolation.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::Ratio;

use crate::action::{self, act, GroupElement, Orientation, OrbitDecider, OrbitStatus};
use crate::algebra::{ricci_kernel, BilinearForm2, Christoffel, Signature, DEGENERACY_TOL};
use crate::error::Error;
use crate::fixed_points::{self, family_ricci, fixed_family_slots};
use crate::invariants;
use crate::moduli_map::{self, Branch, PlanePoint, RegionClassifier, CURVE_TOL};
use crate::orbifold::{self, ComplexChristoffel, S3Element};
use crate::sampling::Sampler;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Core,
    Action,
    Invariants,
    Map,
    Fixed,
    Orbifold,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["all", "core", "action", "invariants", "map", "fixed", "orbifold"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Core => "core",
            Suite::Action => "action",
            Suite::Invariants => "invariants",
            Suite::Map => "map",
            Suite::Fixed => "fixed",
            Suite::Orbifold => "orbifold",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        [
            Suite::All,
            Suite::Core,
            Suite::Action,
            Suite::Invariants,
            Suite::Map,
            Suite::Fixed,
            Suite::Orbifold,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Ok(n)`: `n` samples checked. `Err(msg)`: the first falsifying sample.
type Outcome = Result<usize, String>;

struct Property {
    suite: Suite,
    name: &'static str,
    run: fn(&mut Sampler, usize) -> Outcome,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyResult {
    pub suite: Suite,
    pub name: &'static str,
    pub checked: usize,
    pub failure: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub results: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    /// One line per property, then a summary line.
    pub fn table(&self) -> String {
        let width = self.results.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for r in &self.results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status}  {:<width$}  {:>6} checked", r.name, r.checked);
            if let Some(f) = &r.failure {
                let _ = write!(out, "  falsified by: {f}");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "suite={} samples={} seed={}: {} properties, {} failed",
            self.suite,
            self.samples,
            self.seed,
            self.results.len(),
            failed
        );
        out
    }
}

/// Runs every property of `suite` on `samples` random draws.
pub fn run(suite: Suite, samples: usize, seed: u64) -> VerifyReport {
    let results = PROPERTIES
        .iter()
        .enumerate()
        .filter(|(_, p)| suite.includes(p.suite))
        .map(|(idx, p)| {
            let mut sampler = Sampler::new(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(idx as u64));
            let outcome = (p.run)(&mut sampler, samples);
            PropertyResult {
                suite: p.suite,
                name: p.name,
                checked: *outcome.as_ref().unwrap_or(&0),
                failure: outcome.err(),
            }
        })
        .collect();
    VerifyReport {
        suite,
        samples,
        seed,
        results,
    }
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}

fn show(g: &Christoffel) -> String {
    format!("{:?}", g.to_array())
}

const PROPERTIES: &[Property] = &[
    Property {
        suite: Suite::Core,
        name: "core.ricci-is-curvature-trace",
        run: |s, n| {
            for k in 0..n {
                let g = s.christoffel(false);
                let direct = g.ricci();
                let traced = g.curvature().ricci_trace();
                if direct.sub(&traced).max_abs() > 1e-12 * (1.0 + traced.max_abs()) {
                    return Err(format!("#{k} {}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Core,
        name: "core.ricci-quadratic-homogeneity",
        run: |s, n| {
            for k in 0..n {
                let g = s.christoffel(false);
                let c = s.uniform(-3.0, 3.0);
                let lhs = g.scaled(c).ricci();
                let rhs = g.ricci().scaled(c * c);
                if lhs.sub(&rhs).max_abs() > 1e-12 * (1.0 + rhs.max_abs()) {
                    return Err(format!("#{k} c={c} {}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Core,
        name: "core.torsion-free-ricci-symmetric",
        run: |s, n| {
            for k in 0..n {
                let g = s.christoffel(true);
                if !g.ricci().is_symmetric(1e-12) {
                    return Err(format!("#{k} {}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Core,
        name: "core.signature-congruence-invariant",
        run: |s, n| {
            for k in 0..n {
                let g = s.nondegenerate(false);
                let h = s.gl(None);
                let rho = g.ricci_symmetric();
                let moved = rho.congruence(&h.matrix()).symmetrized();
                if rho.signature(DEGENERACY_TOL) != moved.signature(DEGENERACY_TOL) {
                    return Err(format!("#{k} {} g={h}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Action,
        name: "action.composition",
        run: |s, n| {
            for k in 0..n {
                let g = s.christoffel(false);
                let (a, b) = (s.gl(None), s.gl(None));
                if act(&a, &act(&b, &g)).relative_distance(&act(&(a * b), &g)) > 1e-12 {
                    return Err(format!("#{k} {} g1={a} g2={b}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Action,
        name: "action.diagonal-weight-law",
        run: |s, n| {
            for k in 0..n {
                let g = s.christoffel(false);
                let a = s.uniform(0.25, 4.0) * if s.coin() { 1.0 } else { -1.0 };
                let out = act(&GroupElement::diag(a, 1.0 / a).expect("a ≠ 0"), &g);
                for (i, j, l) in slot_indices() {
                    let want = a.powi(action::weight_exponent(i, j, l)) * g.get(i, j, l);
                    if (out.get(i, j, l) - want).abs() > 1e-12 * (1.0 + want.abs()) {
                        return Err(format!("#{k} a={a} {}", show(&g)));
                    }
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Action,
        name: "action.ricci-naturality",
        run: |s, n| {
            for k in 0..n {
                let g = s.christoffel(false);
                let h = s.gl(None);
                let lhs = act(&h, &g).ricci();
                let rhs = g.ricci().congruence(&h.matrix());
                if lhs.sub(&rhs).max_abs() > 1e-11 * (1.0 + rhs.max_abs()) {
                    return Err(format!("#{k} {} g={h}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Action,
        name: "action.ricci-normalization",
        run: |s, n| {
            for k in 0..n {
                let g = s.nondegenerate(s_coin_torsion(k));
                let (h, sig) = match action::normalize_to_standard(&g) {
                    Ok(v) => v,
                    Err(e) => return Err(format!("#{k} {}: {e}", show(&g))),
                };
                let target = BilinearForm2::standard(sig).expect("nondegenerate");
                let got = act(&h, &g).ricci_symmetric();
                if h.det() <= 0.0 || got.sub(&target).max_abs() > 1e-8 {
                    return Err(format!("#{k} {}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Action,
        name: "action.orbit-round-trip",
        run: |s, n| {
            let n = n.div_ceil(5);
            for k in 0..n {
                let g = s.nondegenerate(s_coin_torsion(k));
                let h = s.gl(Some(Orientation::Preserving));
                let v = OrbitDecider::default()
                    .without_invariant_screen()
                    .decide(&g, &act(&h, &g))
                    .map_err(|e| format!("#{k} {}: {e}", show(&g)))?;
                if v.status != OrbitStatus::Equivalent {
                    return Err(format!("#{k} {} g={h}: {:?}", show(&g), v.status));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Action,
        name: "action.gamma0-isotropy",
        run: |s, n| {
            let base = crate::algebra::gamma0();
            for k in 0..n.div_ceil(10) {
                let h = s.gl(None);
                let g = act(&h, &base);
                if !action::in_exceptional_orbit(&g, action::ORBIT_TOL) {
                    return Err(format!("#{k} g·Γ₀ with g={h}"));
                }
            }
            for k in 0..n.div_ceil(10) {
                let sig = Signature::NONDEGENERATE[k % 3];
                let g = s.in_class(sig, k % 2 == 0);
                if action::isotropy(&g, action::ORBIT_TOL).is_ok_and(|i| i.is_nontrivial()) {
                    return Err(format!("#{k} {}", show(&g)));
                }
            }
            Ok(2 * n.div_ceil(10))
        },
    },
    Property {
        suite: Suite::Invariants,
        name: "invariants.gl-invariance",
        run: |s, n| {
            for k in 0..n {
                let g = s.nondegenerate(true);
                let h = s.gl(None);
                let (a, b) = match (invariants::xi(&g), invariants::xi(&act(&h, &g))) {
                    (Ok(a), Ok(b)) => (a, b),
                    _ => return Err(format!("#{k} {} g={h}: evaluation failed", show(&g))),
                };
                let sign = h.det().signum();
                if !(close(a.psi3, b.psi3, 1e-8)
                    && close(a.big_psi3, b.big_psi3, 1e-8)
                    && close(sign * a.chi, b.chi, 1e-8))
                {
                    return Err(format!("#{k} {} g={h}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Invariants,
        name: "invariants.strict-refuses-torsion",
        run: |s, n| {
            for k in 0..n {
                let g = s.nondegenerate(false);
                if !g.is_torsion_free(invariants::TORSION_TOL) && invariants::xi(&g) != Err(Error::Torsion) {
                    return Err(format!("#{k} {}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Invariants,
        name: "invariants.gamma0-values",
        run: |_, _| {
            let t = invariants::xi(&crate::algebra::gamma0()).map_err(|e| e.to_string())?;
            if close(t.psi3, -2.0, 1e-12) && close(t.big_psi3, 1.0, 1e-12) && t.chi.abs() < 1e-12 {
                Ok(1)
            } else {
                Err(format!("{t:?}"))
            }
        },
    },
    Property {
        suite: Suite::Map,
        name: "map.cusp-exact",
        run: |_, _| {
            let (x, y) = moduli_map::sigma_sq(Branch::Minus, Ratio::<i64>::new(1, 2));
            if x == Ratio::from_integer(-2) && y == Ratio::from_integer(1) {
                Ok(1)
            } else {
                Err(format!("σ₋(t²=½) = ({x}, {y})"))
            }
        },
    },
    Property {
        suite: Suite::Map,
        name: "map.cusp-derivative-vanishes",
        run: |_, _| {
            let t = moduli_map::T_CUSP;
            let d = moduli_map::sigma_derivative(Branch::Minus, t).map_err(|e| e.to_string())?;
            let h = 1e-6;
            let (a, b) = (
                moduli_map::sigma(Branch::Minus, t + h).map_err(|e| e.to_string())?,
                moduli_map::sigma(Branch::Minus, t - h).map_err(|e| e.to_string())?,
            );
            let fd = ((a.x - b.x) / (2.0 * h), (a.y - b.y) / (2.0 * h));
            if d.x.abs() < 1e-12 && d.y.abs() < 1e-12 && fd.0.abs() < 1e-6 && fd.1.abs() < 1e-6 {
                Ok(1)
            } else {
                Err(format!("closed form {d:?}, difference quotient {fd:?}"))
            }
        },
    },
    Property {
        suite: Suite::Map,
        name: "map.region-matches-signature",
        run: |s, n| {
            let classifier = RegionClassifier::new(CURVE_TOL);
            for k in 0..n {
                let sig = Signature::NONDEGENERATE[k % 3];
                let g = s.in_class(sig, true);
                let p = moduli_map::plane_point(&g).map_err(|e| format!("#{k} {}: {e}", show(&g)))?;
                let label = classifier.classify(p);
                if !label.in_closure_of(sig) {
                    return Err(format!("#{k} {} signature {sig} → {label} at {p:?}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Map,
        name: "map.refinement-stability",
        run: |s, n| {
            let coarse = RegionClassifier::with_samples(moduli_map::DEFAULT_SAMPLES, CURVE_TOL);
            let fine = RegionClassifier::with_samples(10 * moduli_map::DEFAULT_SAMPLES, CURVE_TOL);
            let n = n.div_ceil(4);
            for k in 0..n {
                let p = PlanePoint::new(s.uniform(-20.0, 20.0), s.uniform(-1.0, 20.0));
                if coarse.classify(p) != fine.classify(p) {
                    return Err(format!("#{k} {p:?}"));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Fixed,
        name: "fixed.family-ricci-agreement",
        run: |s, n| {
            for k in 0..n {
                let v: Vec<Ratio<i64>> = (0..4).map(|_| Ratio::from_integer(s.int(-100, 100))).collect();
                let slots = fixed_family_slots(v[0], v[1], v[2], v[3]);
                if ricci_kernel(&slots) != family_ricci(v[0], v[1], v[2], v[3]) {
                    return Err(format!("#{k} (a,b,c,d)=({},{},{},{})", v[0], v[1], v[2], v[3]));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Fixed,
        name: "fixed.component-counts",
        run: |_, _| {
            let counts = fixed_points::component_counts().map_err(|e| e.to_string())?;
            let get = |sig| counts.get(&sig).copied().unwrap_or(0);
            let got = (
                get(Signature::POSITIVE_DEFINITE),
                get(Signature::INDEFINITE),
                get(Signature::NEGATIVE_DEFINITE),
            );
            if got == (1, 2, 1) {
                Ok(1)
            } else {
                Err(format!("counts (0,2)/(1,1)/(2,0) = {got:?}"))
            }
        },
    },
    Property {
        suite: Suite::Fixed,
        name: "fixed.torsion-free-on-boundary-curves",
        run: |s, n| {
            for k in 0..n {
                let b = s.uniform(0.3, 2.0) * if s.coin() { 1.0 } else { -1.0 };
                let a = s.uniform(0.3, 2.0) * if s.coin() { 1.0 } else { -1.0 };
                let t = s.uniform(0.3, 3.0);
                let branch = if s.coin() { Branch::Plus } else { Branch::Minus };
                let w = f64::from(branch.sign()) / (t * t);
                let g = fixed_points::fixed_family((a, b, b, b * (1.0 + w)).into());
                let (x, y) = invariants::theta(&g).map_err(|e| format!("#{k}: {e}"))?;
                let want = moduli_map::sigma(branch, t).map_err(|e| e.to_string())?;
                if !(close(x, want.x, 1e-9) && close(y, want.y, 1e-9)) {
                    return Err(format!("#{k} (a,b,w)=({a},{b},{w})"));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Orbifold,
        name: "orbifold.frame-round-trip",
        run: |s, n| {
            for k in 0..n {
                let g = s.christoffel(false);
                if ComplexChristoffel::from_real(&g).to_real().relative_distance(&g) > 1e-14 {
                    return Err(format!("#{k} {}", show(&g)));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Orbifold,
        name: "orbifold.s3-slice-equivariance",
        run: |s, n| {
            for k in 0..n {
                let (a1, a2) = (s.complex(1.0), s.complex(1.0));
                for e in S3Element::all() {
                    let moved = act(&e.group_element(), &orbifold::slice_w(a1, a2));
                    let want = orbifold::slice_w(e.on_slice(a1), e.on_slice(a2));
                    if (moved - want).norm() > 1e-12 {
                        return Err(format!("#{k} α=({a1}, {a2}) element {e:?}"));
                    }
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Orbifold,
        name: "orbifold.orbit-tangent",
        run: |s, n| {
            for k in 0..n {
                let kappa = s.uniform(0.5, 3.0) * if s.coin() { 1.0 } else { -1.0 };
                let (b1, b2) = (s.complex(2.0), s.complex(2.0));
                let base = ComplexChristoffel::new([
                    Complex64::new(0.0, 0.0),
                    Complex64::new(kappa, 0.0),
                    Complex64::new(0.0, 0.0),
                    Complex64::new(0.0, 0.0),
                ])
                .to_real();
                let fd = orbifold::orbit_tangent_fd(&base, b1, b2, 1e-5).map_err(|e| e.to_string())?;
                let exact = orbifold::orbit_tangent(kappa, b1, b2);
                if fd.iter().zip(&exact).any(|(a, b)| (a - b).norm() > 1e-7) {
                    return Err(format!("#{k} κ={kappa} β=({b1}, {b2})"));
                }
            }
            Ok(n)
        },
    },
    Property {
        suite: Suite::Orbifold,
        name: "orbifold.slice-transversality",
        run: |_, _| {
            let z = Complex64::new(0.0, 0.0);
            match orbifold::slice_transversality_rank(z, z) {
                Ok(8) => Ok(1),
                Ok(r) => Err(format!("rank {r}")),
                Err(e) => Err(e.to_string()),
            }
        },
    },
];

fn slot_indices() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..8).map(|idx| (idx >> 2, (idx >> 1) & 1, idx & 1))
}

/// Alternates torsion-free and general draws.
fn s_coin_torsion(k: usize) -> bool {
    k.is_multiple_of(2)
}
