// The GL(2,ℝ) action: composition, the diagonal weight law, and bringing the
// symmetric Ricci tensor to standard form.

use affine_moduli::action::{act, normalize_to_standard, weight_exponent, GroupElement};
use affine_moduli::algebra::gamma0;
use affine_moduli::sampling::Sampler;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = Sampler::new(2024);
    let g = rng.nondegenerate(true);
    let (a, b) = (rng.gl(None), rng.gl(None));

    let lhs = act(&a, &act(&b, &g));
    let rhs = act(&(a * b), &g);
    println!("act(a, act(b, Γ)) vs act(ab, Γ): {:.1e}", lhs.relative_distance(&rhs));

    let t = 1.7;
    let scaled = act(&GroupElement::diag(t, 1.0 / t)?, &g);
    println!("diag({t}, 1/{t}) scales each slot by t^ε:");
    for idx in 0..8 {
        let (i, j, k) = (idx >> 2, (idx >> 1) & 1, idx & 1);
        let eps = weight_exponent(i, j, k);
        println!(
            "  Γ_{}{}^{}  ε = {eps:+}  ratio {:.6}  t^ε {:.6}",
            i + 1,
            j + 1,
            k + 1,
            scaled.get(i, j, k) / g.get(i, j, k),
            t.powi(eps)
        );
    }

    for gamma in [gamma0(), g] {
        let (h, sig) = normalize_to_standard(&gamma)?;
        let normal = act(&h, &gamma).ricci_symmetric();
        println!("signature {sig}: h = {h}, ρ_s(hΓ) = {:?}", normal.m);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
