// ψ₃, Ψ₃ and χ: values, invariance, and the orientation sign of χ.

use affine_moduli::action::{act, GroupElement, Orientation};
use affine_moduli::algebra::{gamma0, Signature};
use affine_moduli::invariants::{self, Mode};
use affine_moduli::sampling::Sampler;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = invariants::xi(&gamma0())?;
    println!("Γ₀: ψ₃ = {}, Ψ₃ = {}, χ = {}", t.psi3, t.big_psi3, t.chi);

    let mut rng = Sampler::new(7);
    for sig in Signature::NONDEGENERATE {
        let g = rng.in_class(sig, true);
        let before = invariants::xi(&g)?;
        let h = rng.gl(Some(Orientation::Preserving));
        let after = invariants::xi(&act(&h, &g))?;
        let mirrored = invariants::xi(&act(&GroupElement::diag(-1.0, 1.0)?, &g))?;
        println!("signature {sig}");
        println!("  Ξ(Γ)      = ({:.6}, {:.6}, {:.6})", before.psi3, before.big_psi3, before.chi);
        println!("  Ξ(gΓ)     = ({:.6}, {:.6}, {:.6})", after.psi3, after.big_psi3, after.chi);
        println!("  Ξ(TΓ)     = ({:.6}, {:.6}, {:.6})", mirrored.psi3, mirrored.big_psi3, mirrored.chi);
    }

    let with_torsion = rng.nondegenerate(false);
    println!("strict mode with torsion: {:?}", invariants::xi(&with_torsion).err());
    let loose = invariants::evaluate(&with_torsion, Mode::Permissive)?;
    println!("permissive mode: {:?} (guaranteed: {})", loose.values, loose.guaranteed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
