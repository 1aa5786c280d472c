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
    let s1 = eliminate(&gens, &["rho1"], &limits).unwrap();
    println!("step1: {} gens, max deg {}, max terms {}, {:?}",
        s1.len(),
        s1.iter().map(|p| p.total_degree()).max().unwrap(),
        s1.iter().map(|p| p.num_terms()).max().unwrap(),
        t0.elapsed());
    let t1 = Instant::now();
    let s2 = eliminate(&s1, &["rho2"], &limits).unwrap();
    println!("step2: {} gens, max deg {}, max terms {}, {:?}",
        s2.len(),
        s2.iter().map(|p| p.total_degree()).max().unwrap(),
        s2.iter().map(|p| p.num_terms()).max().unwrap(),
        t1.elapsed());
    let t2 = Instant::now();
    let s3 = eliminate(&s2, &["rho3"], &limits).unwrap();
    println!("step3: {} gens, max deg {}, max terms {}, {:?}",
        s3.len(),
        s3.iter().map(|p| p.total_degree()).max().unwrap(),
        s3.iter().map(|p| p.num_terms()).max().unwrap(),
        t2.elapsed());
    println!("total {:?}", t0.elapsed());
}
