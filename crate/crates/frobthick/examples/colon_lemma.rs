//! The colon identity the membership machinery leans on:
//!
//!   (x0^q, ..., xn^q) : m^N  =  m^((n+1)q - n - N) + (x0^q, ..., xn^q).
//!
//! The left side is computed from first principles (per-generator colon,
//! then intersection over all degree-N monomials via a lattice sweep); the
//! right side is assembled directly. They must agree for every N.

use frobthick::monomial::{colon_bracket_sweep, MonomialIdeal};

fn main() {
    let num_vars = 3usize; // projective plane
    let q = 4u64;
    let n_max = 2 * num_vars as u64 * q;
    let sweep = colon_bracket_sweep(num_vars, q, n_max).unwrap();

    println!("(x^{q}) : m^N in {num_vars} variables, N = 0..{n_max}");
    println!("{:>3} {:>10} {:>24}", "N", "generators", "matches m^k + (x^q), k =");
    for (n_exp, got) in sweep.iter().enumerate() {
        let drop = num_vars as u64 * q - (num_vars as u64 - 1);
        let k = drop.saturating_sub(n_exp as u64);
        let expected = MonomialIdeal::bracket(num_vars, q)
            .add(&MonomialIdeal::max_ideal_power(num_vars, k));
        assert_eq!(*got, expected, "mismatch at N = {n_exp}");
        println!("{:>3} {:>10} {:>24}", n_exp, got.minimal_generators().len(), k);
    }

    // Once N reaches (n+1)q - n the colon is the whole ring: by then every
    // degree-N monomial has some exponent at least q... pigeonhole. The
    // table shows k hitting 0 exactly there.
    let saturation = num_vars as u64 * q - (num_vars as u64 - 1);
    println!("\ncolon saturates (k = 0, unit ideal) from N = {saturation} on");
    assert!(sweep[saturation as usize].contains(&frobthick::poly::Exponent::zeros(num_vars)));
    assert!(!sweep[saturation as usize - 1].contains(&frobthick::poly::Exponent::zeros(num_vars)));
}
