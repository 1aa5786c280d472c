use singtraj::poly::{eliminate, parse_poly, Limits, VarSet};
use std::time::Instant;

fn main() {
    let vs = VarSet::new(vec!["rho1", "rho2", "rho3", "x", "y", "z"]);
    let f1 = parse_poly("(x - rho1)^2 + y^2 + z^2 - 4", &vs).unwrap();
    let f2 = parse_poly("x^2 + (y - rho2)^2 + z^2 - 4", &vs).unwrap();
    let f3 = parse_poly("x^2 + y^2 + (z - rho3)^2 - 4", &vs).unwrap();
    let det_a = parse_poly(
        "-8*rho1*rho2*rho3 + 8*rho1*rho2*z + 8*rho1*rho3*y + 8*rho2*rho3*x",
        &vs,
    )
    .unwrap();
    let gens = vec![f1, f2, f3, det_a];
    let limits = Limits::default();

    let t0 = Instant::now();
    let eps = eliminate(&gens, &["x", "y", "z"], &limits).unwrap();
    println!(
        "eps: {} gens, degree {}, {:?}",
        eps.len(),
        eps.iter().map(|p| p.total_degree()).max().unwrap(),
        t0.elapsed()
    );
    println!("eps = {}", eps[0]);

    let t0 = Instant::now();
    let xi = eliminate(&gens, &["rho1", "rho2", "rho3"], &limits).unwrap();
    println!(
        "xi: {} gens, degree {}, terms {}, {:?}",
        xi.len(),
        xi.iter().map(|p| p.total_degree()).max().unwrap(),
        xi.iter().map(|p| p.num_terms()).max().unwrap(),
        t0.elapsed()
    );
}
