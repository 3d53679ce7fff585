//! Smoothness by the Jacobian criterion, certified degree by degree: a
//! projective complete intersection is smooth iff the ideal of its partial
//! derivatives together with the forms themselves contains a power of the
//! irrelevant maximal ideal — and the degree at which to test is bounded
//! once and for all by the shape (n, degrees).

use frobthick::graded::{is_smooth_projective_ci, jacobian_ideal, HomogIdeal};
use frobthick::linalg::PrimeModulus;
use frobthick::parse::parse;
use frobthick::poly::RingSpec;

fn main() {
    let r3 = RingSpec::new(3, PrimeModulus::new(7).unwrap());

    // A smooth curve and a singular one.
    let fermat = parse(r3, "x0^3 + x1^3 + x2^3").unwrap();
    let cusp = parse(r3, "x0^3 - x1^2*x2").unwrap();
    println!(
        "Fermat cubic over F_7 smooth: {}",
        is_smooth_projective_ci(std::slice::from_ref(&fermat)).unwrap()
    );
    println!(
        "cuspidal cubic over F_7 smooth: {}",
        is_smooth_projective_ci(std::slice::from_ref(&cusp)).unwrap()
    );

    // The cusp fails because J + fS never absorbs a power of m: the
    // Hilbert function of the quotient stays positive forever.
    let jac = jacobian_ideal(std::slice::from_ref(&cusp)).unwrap();
    let mut gens = jac.generators().to_vec();
    gens.push(cusp);
    let full = HomogIdeal::new(r3, gens).unwrap();
    print!("cusp J + fS, quotient dimensions in degrees 1..8:");
    for d in 1..=8u64 {
        print!(" {}", full.hilbert_function(d));
    }
    println!();

    // Characteristic matters: over F_5 every partial of the Fermat quintic
    // is zero, so the Jacobian criterion (correctly) calls it singular.
    let r5 = RingSpec::new(3, PrimeModulus::new(5).unwrap());
    let quintic = parse(r5, "x0^5 + x1^5 + x2^5").unwrap();
    println!(
        "Fermat quintic over F_5 smooth: {}",
        is_smooth_projective_ci(std::slice::from_ref(&quintic)).unwrap()
    );

    // Codimension two: the quadric pencil is smooth, but degenerate pairs
    // are caught.
    let r4 = RingSpec::new(4, PrimeModulus::new(7).unwrap());
    let good = vec![
        parse(r4, "x0^2 + x1^2 + x2^2 + x3^2").unwrap(),
        parse(r4, "x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2").unwrap(),
    ];
    println!("quadric pencil in P^3 smooth: {}", is_smooth_projective_ci(&good).unwrap());
    let degenerate = vec![
        parse(r4, "x0^2 + x1^2 + x2^2 + x3^2").unwrap(),
        parse(r4, "2*x0^2 + 2*x1^2 + 2*x2^2 + 2*x3^2").unwrap(),
    ];
    println!(
        "proportional pair smooth: {}",
        is_smooth_projective_ci(&degenerate).unwrap()
    );
}
