//! Thickenings at a nonzero Serre twist. For the Fermat quartic at twist 1
//! the codomain piece vanishes for small t — the map is the zero map out
//! of a nonzero space, decidedly not injective — and the threshold lands
//! exactly where a closed form predicts.

use frobthick::linalg::PrimeModulus;
use frobthick::parse::parse;
use frobthick::poly::RingSpec;
use frobthick::thickening::{
    codomain_dim, domain_subspace, is_injective, minimal_t, ThickeningMode, ThickeningQuery,
    Variety,
};

fn main() {
    for p in [5u64, 7, 11, 13] {
        let ring = RingSpec::new(3, PrimeModulus::new(p).unwrap());
        let quartic =
            Variety::hypersurface(parse(ring, "x0^4 + x1^4 + x2^4").unwrap()).unwrap();
        let domain = domain_subspace(&quartic, 1).unwrap();
        println!("p = {p}: twist-1 domain dimension {}", domain.dim());

        for t in 1..=p {
            let query = ThickeningQuery { t, twist: 1, mode: ThickeningMode::Bracket };
            let cod = codomain_dim(&quartic, &query).unwrap();
            let verdict = is_injective(&quartic, &query).unwrap();
            let note = if cod == 0 { " (codomain vanishes)" } else { "" };
            println!(
                "  t = {t:>2}: codomain dim {cod:>3}, injective: {}{note}",
                verdict.injective
            );
            if verdict.injective {
                break;
            }
        }

        let got = minimal_t(&quartic, 1, ThickeningMode::Bracket).unwrap();
        #[allow(clippy::manual_div_ceil)] // spell the closed form
        let formula = if p % 4 == 1 { (p + 3) / 4 } else { (p + 9) / 4 };
        assert_eq!(got, formula);
        println!("  least injective t = {got}, closed form {formula}\n");
    }
}
