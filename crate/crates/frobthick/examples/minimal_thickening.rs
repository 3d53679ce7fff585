//! Threshold search: the least t such that Frobenius into the t-th
//! thickening is injective, across a range of primes. Injectivity is
//! upward closed in t, so the search is a binary search; here we also show
//! the closed forms the computed thresholds reproduce.

use frobthick::linalg::PrimeModulus;
use frobthick::parse::parse;
use frobthick::poly::RingSpec;
use frobthick::thickening::{minimal_t, ThickeningMode, Variety};

fn main() {
    // The cuspidal cubic: its threshold grows linearly with p.
    println!("cuspidal cubic x0^3 - x1^2*x2, twist 0:");
    println!("{:>4} {:>8} {:>12}", "p", "least t", "closed form");
    for p in [5u64, 7, 11, 13, 17, 19] {
        let ring = RingSpec::new(3, PrimeModulus::new(p).unwrap());
        let curve =
            Variety::hypersurface(parse(ring, "x0^3 - x1^2*x2").unwrap()).unwrap();
        let got = minimal_t(&curve, 0, ThickeningMode::Bracket).unwrap();
        #[allow(clippy::manual_div_ceil)] // spell the closed form
        let formula = if p % 6 == 1 { (p + 5) / 6 } else { (p + 7) / 6 };
        assert_eq!(got, formula);
        println!("{p:>4} {got:>8} {formula:>12}");
    }

    // The Fermat cubic: an elliptic curve whose threshold detects the
    // supersingular/ordinary dichotomy. Ordinary primes (p = 1 mod 3) are
    // injective already at t = 1; supersingular ones need t = 2.
    println!("\nFermat cubic x0^3 + x1^3 + x2^3, twist 0:");
    for p in [5u64, 7, 11, 13] {
        let ring = RingSpec::new(3, PrimeModulus::new(p).unwrap());
        let curve =
            Variety::hypersurface(parse(ring, "x0^3 + x1^3 + x2^3").unwrap()).unwrap();
        let got = minimal_t(&curve, 0, ThickeningMode::Bracket).unwrap();
        let kind = if p % 3 == 1 { "ordinary" } else { "supersingular" };
        println!("p = {p:>2}: least t = {got}  ({kind})");
        assert_eq!(got, if p % 3 == 1 { 1 } else { 2 });
    }
}
