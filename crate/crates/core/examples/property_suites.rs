// The seeded property suites behind `affine-moduli verify`.

use affine_moduli::verify::{run, Suite};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = run(Suite::All, 50, 42);
    print!("{}", report.table());
    if !report.passed() {
        return Err("property failure".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
