// Deciding orbit equivalence, with witnesses and the reasons for "no".

use affine_moduli::action::{act, Group, OrbitDecider, Orientation, ORBIT_TOL};
use affine_moduli::algebra::{gamma0, Signature};
use affine_moduli::fixed_points::reflection_t;
use affine_moduli::sampling::Sampler;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = Sampler::new(99);
    let decider = OrbitDecider::new(Group::GlPlus, ORBIT_TOL);

    let g = rng.gl(Some(Orientation::Preserving));
    let v = decider.decide(&gamma0(), &act(&g, &gamma0()))?;
    println!("Γ₀ vs gΓ₀: {:?}, witness {}", v.status, v.witness.map(|w| w.to_string()).unwrap_or_default());

    let a = rng.nondegenerate(false);
    let b = act(&rng.gl(Some(Orientation::Preserving)), &a);
    let v = decider.decide(&a, &b)?;
    println!("torsion pair: {:?}, residual {:.1e}", v.status, v.residual.unwrap_or(f64::NAN));

    let mirrored = act(&reflection_t(), &a);
    let plus = decider.without_invariant_screen().decide(&a, &mirrored)?;
    let full = OrbitDecider::new(Group::Gl, ORBIT_TOL).decide(&a, &mirrored)?;
    println!("mirror image under GL⁺: {:?}; under GL: {:?}", plus.status, full.status);

    let p = rng.in_class(Signature::NEGATIVE_DEFINITE, true);
    let q = rng.in_class(Signature::NEGATIVE_DEFINITE, true);
    println!("two random (2,0) structures: {:?}", decider.decide(&p, &q)?.status);
    let r = rng.in_class(Signature::INDEFINITE, true);
    println!("(2,0) vs (1,1): {:?}", decider.decide(&p, &r)?.status);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
