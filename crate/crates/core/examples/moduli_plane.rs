// The (ψ₃, Ψ₃) plane: boundary curves, point classification and a coarse
// character rendering of the three regions.

use affine_moduli::moduli_map::{
    region_grid, sigma, Bounds, Branch, PlanePoint, RegionClassifier, RegionLabel, CURVE_TOL, T_CUSP,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for t in [0.5, T_CUSP, 1.0, 2.0] {
        let (p, m) = (sigma(Branch::Plus, t)?, sigma(Branch::Minus, t)?);
        println!("t = {t:.4}: σ₊ = ({:.4}, {:.4})  σ₋ = ({:.4}, {:.4})", p.x, p.y, m.x, m.y);
    }

    let classifier = RegionClassifier::new(CURVE_TOL);
    for (x, y) in [(-2.0, 1.0), (-4.0, 3.0), (0.0, 1e6), (8.0, 6.0), (-2.001, 1.0)] {
        println!("({x}, {y}) → {}", classifier.classify(PlanePoint::new(x, y)));
    }

    let grid = region_grid(Bounds::new(-10.0, 10.0, 0.0, 10.0)?, 40, CURVE_TOL)?;
    for row in grid.labels.iter().rev().step_by(2) {
        let line: String = row
            .iter()
            .map(|l| match l {
                RegionLabel::D20 => 'N',
                RegionLabel::D11 => '.',
                RegionLabel::D02 => 'P',
                RegionLabel::Cusp => '*',
                RegionLabel::BoundarySigmaPlus | RegionLabel::BoundarySigmaMinus => '|',
                RegionLabel::Outside => ' ',
            })
            .collect();
        println!("{line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
