// Structures fixed by T = diag(−1, 1): the four-parameter family, its Ricci
// tensor, and the components of its nondegenerate torsion-free part.

use affine_moduli::algebra::DEGENERACY_TOL;
use affine_moduli::fixed_points::{boundary_components, fixed_family, fixed_ricci, is_fixed_by_t};
use affine_moduli::invariants;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for params in [(2.0, 3.0, 5.0, 7.0), (1.0, 1.0, 1.0, 2.0), (1.0, -1.0, -1.0, 0.0)] {
        let g = fixed_family(params.into());
        let rho = g.ricci();
        println!(
            "Γ{params:?}: fixed {}, ρ = {:?}, closed form {:?}, signature {}",
            is_fixed_by_t(&g, 0.0),
            rho.m,
            fixed_ricci(params.into()).m,
            rho.signature(DEGENERACY_TOL)?
        );
    }

    for c in boundary_components()? {
        println!("component {:?} ∪ {:?}: signature {}", c.patterns[0], c.patterns[1], c.signature);
    }

    // With c = b the invariants trace out σ±: w = d/b − 1 = ±1/t².
    for w in [0.25_f64, 1.0, 4.0, -0.5, -2.0] {
        let (x, y) = invariants::theta(&fixed_family((1.0, 1.0, 1.0, 1.0 + w).into()))?;
        println!("w = {w:+}: Θ = ({x:.4}, {y:.4})");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
