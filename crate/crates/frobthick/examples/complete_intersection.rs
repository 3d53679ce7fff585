//! Codimension two: a pencil of quadrics cutting out an elliptic curve in
//! P^3. Bracket thickenings (f1^t, f2^t) are computed directly; ordinary
//! powers I^t are reached through a pigeonhole containment, because
//! I^(c(t0-1)+1) lies inside the bracket ideal at t0.

use frobthick::graded::{is_smooth_projective_ci, regular_sequence_probe, HomogIdeal};
use frobthick::linalg::PrimeModulus;
use frobthick::parse::parse;
use frobthick::poly::RingSpec;
use frobthick::thickening::{
    ci_bracket_bound, is_injective, ordinary_power_bound, ThickeningMode, ThickeningQuery,
    Variety,
};

fn main() {
    let p = 7u64;
    let ring = RingSpec::new(4, PrimeModulus::new(p).unwrap());
    let f1 = parse(ring, "x0^2 + x1^2 + x2^2 + x3^2").unwrap();
    let f2 = parse(ring, "x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2").unwrap();
    let curve = Variety::new(ring, vec![f1.clone(), f2.clone()]).unwrap();

    // Sanity first: the pair really is a smooth complete intersection.
    assert!(regular_sequence_probe(curve.generators()).unwrap());
    assert!(is_smooth_projective_ci(curve.generators()).unwrap());
    println!("two quadrics in P^3 over F_{p}: smooth, regular sequence");

    // The uniform bound: t0 * min(d_i) must reach (n+1-c)(d-c)+1.
    let t0 = ci_bracket_bound(curve.ambient_dim(), &curve.degrees()).unwrap();
    println!("bracket bound t0 = {t0}");

    let report = is_injective(
        &curve,
        &ThickeningQuery { t: t0, twist: 0, mode: ThickeningMode::Bracket },
    )
    .unwrap();
    println!(
        "bracket thickening at t = {t0}: domain dim {} (elliptic socle), injective: {}",
        report.domain_dim, report.injective
    );
    assert!(report.injective);
    assert_eq!(report.domain_dim, 1);

    // Ordinary powers are not computed directly for c >= 2 ...
    let power = is_injective(
        &curve,
        &ThickeningQuery { t: 2, twist: 0, mode: ThickeningMode::Power },
    );
    println!("power mode for c = 2 is refused: {}", power.unwrap_err());

    // ... but from t = c(t0-1)+1 on, every generator of I^t lies in the
    // bracket ideal (some factor repeats t0 times), so the power-thickening
    // map factors through the injective bracket one.
    let t_ord = ordinary_power_bound(curve.codim(), t0);
    println!("ordinary powers covered from t = {t_ord} via I^{t_ord} <= (f1^{t0}, f2^{t0}):");
    let bracket = HomogIdeal::new(ring, vec![f1.pow(t0, None), f2.pow(t0, None)]).unwrap();
    for a in 0..=t_ord {
        let b = t_ord - a;
        let gen = f1.pow(a, None).mul(&f2.pow(b, None), None).unwrap();
        let inside = bracket.membership(&gen).unwrap();
        println!("  f1^{a} f2^{b} in bracket ideal: {inside}");
        assert!(inside);
    }
}
