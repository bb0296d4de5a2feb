//! JSON documents read and written by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::action::{self, GroupElement, OrbitStatus, OrbitVerdict};
use crate::algebra::{BilinearForm2, Christoffel, DEGENERACY_TOL};
use crate::error::{Error, Result};
use crate::invariants::{self, InvariantTriple};
use crate::moduli_map::{self, RegionLabel};

/// The eight entries of a structure keyed by slot name.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedSlots {
    #[serde(rename = "G11_1")]
    pub g11_1: f64,
    #[serde(rename = "G11_2")]
    pub g11_2: f64,
    #[serde(rename = "G12_1")]
    pub g12_1: f64,
    #[serde(rename = "G12_2")]
    pub g12_2: f64,
    #[serde(rename = "G21_1")]
    pub g21_1: f64,
    #[serde(rename = "G21_2")]
    pub g21_2: f64,
    #[serde(rename = "G22_1")]
    pub g22_1: f64,
    #[serde(rename = "G22_2")]
    pub g22_2: f64,
}

impl From<&Christoffel> for NamedSlots {
    fn from(g: &Christoffel) -> Self {
        let v = g.to_array();
        Self {
            g11_1: v[0],
            g11_2: v[1],
            g12_1: v[2],
            g12_2: v[3],
            g21_1: v[4],
            g21_2: v[5],
            g22_1: v[6],
            g22_2: v[7],
        }
    }
}

impl TryFrom<NamedSlots> for Christoffel {
    type Error = Error;
    fn try_from(s: NamedSlots) -> Result<Self> {
        Christoffel::from_array([
            s.g11_1, s.g11_2, s.g12_1, s.g12_2, s.g21_1, s.g21_2, s.g22_1, s.g22_2,
        ])
    }
}

/// `{"label": …, "gamma": {"G11_1": …, …}}`. A bare slot object is accepted too.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConnectionDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub gamma: NamedSlots,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DocumentShape {
    Nested(ConnectionDocument),
    Flat(NamedSlots),
}

impl ConnectionDocument {
    pub fn new(gamma: &Christoffel, label: Option<&str>) -> Self {
        Self {
            label: label.map(str::to_owned),
            gamma: gamma.into(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let shape: DocumentShape = serde_json::from_str(text)
            .map_err(|e| Error::InvalidParameter(format!("malformed connection document: {e}")))?;
        let doc = match shape {
            DocumentShape::Nested(d) => d,
            DocumentShape::Flat(gamma) => Self { label: None, gamma },
        };
        doc.christoffel()?;
        Ok(doc)
    }

    pub fn christoffel(&self) -> Result<Christoffel> {
        self.gamma.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SignatureField {
    Nondegenerate(crate::algebra::Signature),
    Other(&'static str),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum InvariantsField {
    Values(InvariantTriple),
    NotAvailable(&'static str),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum IsotropyField {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "Z3")]
    Z3 { witness: GroupElement },
    /// Non-identity stabilizer element that is not of order three.
    #[serde(rename = "nontrivial")]
    Other { witness: GroupElement },
    #[serde(rename = "n/a (degenerate)")]
    NotAvailable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub torsion_free: bool,
    pub ricci: BilinearForm2,
    pub ricci_symmetric: BilinearForm2,
    pub signature: SignatureField,
    pub invariants: InvariantsField,
    pub region: Option<RegionLabel>,
    pub exceptional_orbit: bool,
    pub isotropy: IsotropyField,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Everything the `classify` subcommand reports about one structure.
pub fn classify(gamma: &Christoffel, label: Option<String>, tol: f64) -> Result<ClassificationReport> {
    let torsion_free = gamma.is_torsion_free(invariants::TORSION_TOL);
    let rho_s = gamma.ricci_symmetric();
    let sig = rho_s.signature(DEGENERACY_TOL)?;
    let degenerate = sig.is_degenerate();

    let invariants = if degenerate {
        InvariantsField::NotAvailable("n/a (degenerate)")
    } else if !torsion_free {
        InvariantsField::NotAvailable("n/a (torsion)")
    } else {
        InvariantsField::Values(invariants::xi(gamma)?)
    };
    let region = match &invariants {
        InvariantsField::Values(t) => Some(moduli_map::classify_point(
            moduli_map::PlanePoint::new(t.psi3, t.big_psi3),
            moduli_map::CURVE_TOL,
        )),
        InvariantsField::NotAvailable(_) => None,
    };
    let isotropy = if degenerate {
        IsotropyField::NotAvailable
    } else {
        match action::isotropy(gamma, tol)?.witness {
            None => IsotropyField::Trivial,
            Some(w) => {
                let cube = w * w * w;
                let scale = w.matrix().iter().flatten().fold(1.0_f64, |m, v| m.max(v.abs()));
                if cube.is_identity(1e-9 * scale * scale * scale) {
                    IsotropyField::Z3 { witness: w }
                } else {
                    IsotropyField::Other { witness: w }
                }
            }
        }
    };
    Ok(ClassificationReport {
        label,
        torsion_free,
        ricci: gamma.ricci(),
        ricci_symmetric: rho_s,
        signature: if degenerate {
            SignatureField::Other("degenerate")
        } else {
            SignatureField::Nondegenerate(sig)
        },
        invariants,
        region,
        exceptional_orbit: action::in_exceptional_orbit(gamma, tol),
        isotropy,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitReport {
    /// `null` when inconclusive.
    pub equivalent: Option<bool>,
    pub status: OrbitStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<GroupElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

impl From<OrbitVerdict> for OrbitReport {
    fn from(v: OrbitVerdict) -> Self {
        Self {
            equivalent: v.equivalent(),
            status: v.status,
            witness: v.witness,
            residual: v.residual,
        }
    }
}

impl OrbitReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `{:.16e}`: 17 significant digits, enough to round-trip any double.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV text with header `t,x,y`.
pub fn curve_csv(points: &[(f64, moduli_map::PlanePoint)]) -> String {
    let mut out = String::from("t,x,y\n");
    for (t, p) in points {
        out.push_str(&format!("{},{},{}\n", format_float(*t), format_float(p.x), format_float(p.y)));
    }
    out
}

/// CSV text with header `x,y,label`.
pub fn grid_csv(grid: &moduli_map::RegionGrid) -> String {
    let mut out = String::from("x,y,label\n");
    for (x, y, l) in grid.iter() {
        out.push_str(&format!("{},{},{}\n", format_float(x), format_float(y), l));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gamma0, Signature};
    use crate::fixed_points::fixed_family;

    #[test]
    fn document_round_trip() {
        let doc = ConnectionDocument::new(&gamma0(), Some("gamma0"));
        let back = ConnectionDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.christoffel().unwrap(), gamma0());
    }

    #[test]
    fn flat_document_accepted() {
        let text = r#"{"G11_1":-1,"G11_2":0,"G12_1":0,"G12_2":1,"G21_1":0,"G21_2":1,"G22_1":1,"G22_2":0}"#;
        assert_eq!(ConnectionDocument::parse(text).unwrap().christoffel().unwrap(), gamma0());
    }

    #[test]
    fn malformed_documents_rejected() {
        assert!(ConnectionDocument::parse("{").is_err());
        assert!(ConnectionDocument::parse(r#"{"gamma":{"G11_1":1}}"#).is_err());
        let huge = r#"{"G11_1":1e999,"G11_2":0,"G12_1":0,"G12_2":1,"G21_1":0,"G21_2":1,"G22_1":1,"G22_2":0}"#;
        assert!(ConnectionDocument::parse(huge).is_err());
    }

    #[test]
    fn gamma0_report() {
        let r = classify(&gamma0(), None, action::ORBIT_TOL).unwrap();
        assert_eq!(r.signature, SignatureField::Nondegenerate(Signature::NEGATIVE_DEFINITE));
        assert_eq!(r.region, Some(RegionLabel::Cusp));
        assert!(r.exceptional_orbit);
        assert!(matches!(r.isotropy, IsotropyField::Z3 { .. }));
        let InvariantsField::Values(t) = r.invariants else { panic!() };
        assert!((t.psi3 + 2.0).abs() < 1e-12 && (t.big_psi3 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_report() {
        let r = classify(&Christoffel::zero(), None, action::ORBIT_TOL).unwrap();
        assert_eq!(r.signature, SignatureField::Other("degenerate"));
        assert_eq!(r.invariants, InvariantsField::NotAvailable("n/a (degenerate)"));
        assert_eq!(r.region, None);
        assert!(!r.exceptional_orbit);
    }

    #[test]
    fn fixed_family_report() {
        let r = classify(&fixed_family((1.0, 1.0, 1.0, 2.0).into()), None, action::ORBIT_TOL).unwrap();
        assert_eq!(r.signature, SignatureField::Nondegenerate(Signature::POSITIVE_DEFINITE));
        assert!(!r.exceptional_orbit);
        assert_eq!(r.isotropy, IsotropyField::Trivial);
    }

    #[test]
    fn csv_floats_round_trip() {
        for v in [0.1, -2.0, 1.0 / 3.0, std::f64::consts::FRAC_1_SQRT_2, 1e300] {
            assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
        }
    }
}
