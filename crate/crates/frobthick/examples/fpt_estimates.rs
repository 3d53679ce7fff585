//! Frobenius membership orders. nu(f, p^e) is the largest k with f^k
//! outside the bracket ideal (x0^q, ..., xn^q); the ratio nu / p^e is a
//! lower bound for the F-pure threshold. For curves of degree n+1 the
//! order at e = 1 also pins the injectivity threshold: least t = p - nu.

use frobthick::linalg::PrimeModulus;
use frobthick::parse::parse;
use frobthick::poly::RingSpec;
use frobthick::thickening::{fpt_estimate, minimal_t, nu, ThickeningMode, Variety};

fn main() {
    println!("{:<28} {:>3} {:>2} {:>6} {:>8} {:>10}", "curve", "p", "e", "nu", "bound", "decimal");
    let cases: [(&str, u64, u32); 6] = [
        ("x0^3 + x1^3 + x2^3", 5, 1),
        ("x0^3 + x1^3 + x2^3", 5, 2),
        ("x0^3 + x1^3 + x2^3", 7, 1),
        ("x0^3 + x1^3 + x2^3", 7, 2),
        ("x0^3 - x1^2*x2", 7, 1),
        ("x0^3 - x1^2*x2", 13, 1),
    ];
    for (text, p, e) in cases {
        let ring = RingSpec::new(3, PrimeModulus::new(p).unwrap());
        let f = parse(ring, text).unwrap();
        let order = nu(&f, e).unwrap();
        let bound = fpt_estimate(&f, e).unwrap();
        println!(
            "{text:<28} {p:>3} {e:>2} {order:>6} {:>8} {:>10.6}",
            bound.to_string(),
            bound.as_f64()
        );
    }

    // The supersingular Fermat cubic at p = 5 has nu = p - 2; the ordinary
    // one at p = 7 has nu = p - 1. Deeper Frobenius powers refine the
    // bound: 19/25 for the supersingular curve, 48/49 for the ordinary one.
    println!();
    for p in [5u64, 7, 11, 13] {
        let ring = RingSpec::new(3, PrimeModulus::new(p).unwrap());
        let f = parse(ring, "x0^3 + x1^3 + x2^3").unwrap();
        let order = nu(&f, 1).unwrap();
        let threshold =
            minimal_t(&Variety::hypersurface(f).unwrap(), 0, ThickeningMode::Bracket).unwrap();
        println!("p = {p:>2}: nu = {order:>2}, least t = {threshold}, p - nu = {}", p - order);
        assert_eq!(threshold, p - order);
    }
}
