mod curvature_and_signature {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/curvature_and_signature.rs"));
}

mod change_of_basis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/change_of_basis.rs"));
}

mod invariants_tour {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/invariants_tour.rs"));
}

mod moduli_plane {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/moduli_plane.rs"));
}

mod orbit_equivalence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/orbit_equivalence.rs"));
}

mod reflection_fixed_points {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reflection_fixed_points.rs"));
}

mod exceptional_orbifold {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exceptional_orbifold.rs"));
}

mod property_suites {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/property_suites.rs"));
}

#[test]
fn curvature_and_signature_runs() {
    curvature_and_signature::run_example().expect("curvature_and_signature example should run");
}

#[test]
fn change_of_basis_runs() {
    change_of_basis::run_example().expect("change_of_basis example should run");
}

#[test]
fn invariants_tour_runs() {
    invariants_tour::run_example().expect("invariants_tour example should run");
}

#[test]
fn moduli_plane_runs() {
    moduli_plane::run_example().expect("moduli_plane example should run");
}

#[test]
fn orbit_equivalence_runs() {
    orbit_equivalence::run_example().expect("orbit_equivalence example should run");
}

#[test]
fn reflection_fixed_points_runs() {
    reflection_fixed_points::run_example().expect("reflection_fixed_points example should run");
}

#[test]
fn exceptional_orbifold_runs() {
    exceptional_orbifold::run_example().expect("exceptional_orbifold example should run");
}

#[test]
fn property_suites_runs() {
    property_suites::run_example().expect("property_suites example should run");
}
