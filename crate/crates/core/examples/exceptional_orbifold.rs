// Around the exceptional orbit: isotropy of Γ₀, complex coordinates, the
// ℤ₃/S₃-equivariant slices, orbit tangents and transversality.

use affine_moduli::action::{act, isotropy, ORBIT_TOL};
use affine_moduli::algebra::gamma0;
use affine_moduli::orbifold::{
    lambda, orbit_tangent, orbit_tangent_fd, slice_transversality_rank, slice_w, t_lambda,
    ComplexChristoffel, S3Element,
};
use num_complex::Complex64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let iso = isotropy(&gamma0(), ORBIT_TOL)?;
    println!("isotropy witness of Γ₀: {:?}", iso.witness.map(|w| w.to_string()));
    println!("complex coordinates of Γ₀: {:?}", ComplexChristoffel::from_real(&gamma0()).alpha);

    let (a1, a2) = (Complex64::new(0.3, -0.2), Complex64::new(-0.1, 0.4));
    let moved = act(&t_lambda(), &slice_w(a1, a2));
    println!(
        "T_λ s_W(α) vs s_W(λα): {:.1e}",
        (moved - slice_w(lambda() * a1, lambda() * a2)).norm()
    );
    for e in S3Element::all() {
        let moved = act(&e.group_element(), &slice_w(a1, a2));
        let want = slice_w(e.on_slice(a1), e.on_slice(a2));
        println!("  {e:?}: residual {:.1e}", (moved - want).norm());
    }

    let kappa = 1.0;
    let base = slice_w(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    let (b1, b2) = (Complex64::new(0.7, 0.2), Complex64::new(-0.4, 0.9));
    let exact = orbit_tangent(kappa, b1, b2);
    for h in [1e-1, 1e-2, 1e-3] {
        let fd = orbit_tangent_fd(&base, b1, b2, h)?;
        let err = fd.iter().zip(&exact).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        println!("h = {h:.0e}: |difference quotient − tangent| = {err:.2e}");
    }
    let z = Complex64::new(0.0, 0.0);
    println!("rank of [orbit tangents | slice directions] = {}", slice_transversality_rank(z, z)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
