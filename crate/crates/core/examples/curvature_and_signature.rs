// Curvature, Ricci tensor and signature of a few structures.

use affine_moduli::algebra::{gamma0, Christoffel, DEGENERACY_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let samples = [
        ("Γ₀", gamma0()),
        ("Γ₀/√2", gamma0().scaled(std::f64::consts::FRAC_1_SQRT_2)),
        ("with torsion", Christoffel::from_array([0.5, -1.0, 1.5, 0.0, -0.5, 2.0, 1.0, 0.25])?),
        ("flat", Christoffel::zero()),
    ];
    for (name, g) in samples {
        let rho = g.ricci();
        let rho_s = g.ricci_symmetric();
        let sig = rho_s.signature(DEGENERACY_TOL)?;
        println!("{name}");
        println!("  torsion free  {}", g.is_torsion_free(1e-12));
        println!("  ρ             {:?}", rho.m);
        println!("  ρ_s           {:?}", rho_s.m);
        println!(
            "  signature     {}",
            if sig.is_degenerate() { "degenerate".to_string() } else { sig.to_string() }
        );
        println!("  max |R|       {:.3}", g.curvature().max_abs());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
