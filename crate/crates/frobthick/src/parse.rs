//! Text form of homogeneous polynomials.
//!
//! Grammar (whitespace insignificant, one optional unary minus at the head):
//!
//! ```text
//! expr   := '-'? term (('+'|'-') term)*
//! term   := coeff? ('*'? factor)*
//! factor := var ('^' nat)?
//! var    := 'x' nat
//! coeff  := nat
//! ```
//!
//! Coefficients of any length are accepted and folded modulo p digit by
//! digit. Every written term must have the same total degree; the common
//! value becomes the declared degree, so `x0 - x0` parses to the zero
//! polynomial of degree 1.

use crate::error::{Error, Result};
use crate::poly::{Exponent, HomogPoly, RingSpec};
use std::fmt;

pub fn parse(ring: RingSpec, text: &str) -> Result<HomogPoly> {
    Parser { ring, bytes: text.as_bytes(), pos: 0 }.parse_expr()
}

struct Parser<'a> {
    ring: RingSpec,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    /// Digit string folded modulo p.
    fn nat_mod_p(&mut self) -> Result<u64> {
        let p = self.ring.char();
        let mut seen = false;
        let mut acc: u64 = 0;
        while let Some(b) = self.bytes.get(self.pos).copied() {
            if !b.is_ascii_digit() {
                break;
            }
            seen = true;
            acc = (acc * 10 + (b - b'0') as u64) % p;
            self.pos += 1;
        }
        if !seen {
            return Err(self.error("expected a number"));
        }
        Ok(acc)
    }

    /// Digit string as an exact small integer (variable indices, exponents).
    fn nat_exact(&mut self, what: &str) -> Result<u64> {
        let mut seen = false;
        let mut acc: u64 = 0;
        while let Some(b) = self.bytes.get(self.pos).copied() {
            if !b.is_ascii_digit() {
                break;
            }
            seen = true;
            acc = acc
                .checked_mul(10)
                .and_then(|a| a.checked_add((b - b'0') as u64))
                .ok_or_else(|| self.error(format!("{what} is too large")))?;
            self.pos += 1;
        }
        if !seen {
            return Err(self.error(format!("expected {what}")));
        }
        Ok(acc)
    }

    fn parse_expr(&mut self) -> Result<HomogPoly> {
        let mut terms: Vec<(Exponent, u64)> = Vec::new();
        let mut degrees: Vec<u64> = Vec::new();
        let p = self.ring.char();
        let negate_first = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let (e, c) = self.parse_term()?;
        degrees.push(e.degree());
        terms.push((e, if negate_first { (p - c) % p } else { c }));
        loop {
            match self.peek() {
                None => break,
                Some(b'+') | Some(b'-') => {
                    let op = self.bump().unwrap();
                    let (e, c) = self.parse_term()?;
                    degrees.push(e.degree());
                    terms.push((e, if op == b'-' { (p - c) % p } else { c }));
                }
                Some(b) => {
                    return Err(self.error(format!(
                        "unexpected character '{}' (expected '+' or '-')",
                        b as char
                    )))
                }
            }
        }
        degrees.sort_unstable();
        degrees.dedup();
        if degrees.len() > 1 {
            return Err(Error::DegreeMixture { degrees });
        }
        HomogPoly::from_terms(self.ring, degrees[0], terms)
    }

    fn parse_term(&mut self) -> Result<(Exponent, u64)> {
        let mut coeff: u64 = 1 % self.ring.char();
        let mut exps = vec![0u32; self.ring.num_vars()];
        let mut any = false;
        if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            coeff = self.nat_mod_p()?;
            any = true;
        }
        loop {
            let star = if self.peek() == Some(b'*') {
                self.pos += 1;
                true
            } else {
                false
            };
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    self.skip_ws();
                    let idx_pos = self.pos;
                    let idx = self.nat_exact("a variable index")? as usize;
                    if idx >= self.ring.num_vars() {
                        return Err(Error::Parse {
                            pos: idx_pos,
                            msg: format!(
                                "unknown variable x{idx} in a {}-variable ring (x0..x{})",
                                self.ring.num_vars(),
                                self.ring.num_vars() - 1
                            ),
                        });
                    }
                    let mut e: u64 = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self.nat_exact("an exponent")?;
                    }
                    let total = exps[idx] as u64 + e;
                    exps[idx] = u32::try_from(total)
                        .map_err(|_| self.error("exponent exceeds the supported range"))?;
                    any = true;
                }
                _ if star => return Err(self.error("expected a variable after '*'")),
                _ => break,
            }
        }
        if !any {
            return Err(self.error("expected a term"));
        }
        Ok((Exponent::new(&exps), coeff))
    }
}

/// Canonical text form: terms in descending graded-lex order, coefficients
/// as canonical residues joined with " + ", unit coefficients omitted,
/// exponent 1 omitted. The zero polynomial prints as "0".
pub fn format(f: &HomogPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut pieces = Vec::with_capacity(f.num_terms());
    for (e, c) in f.terms_desc() {
        let mut factors: Vec<String> = Vec::new();
        for (i, a) in e.iter().enumerate() {
            match a {
                0 => {}
                1 => factors.push(format!("x{i}")),
                _ => factors.push(format!("x{i}^{a}")),
            }
        }
        let piece = if factors.is_empty() {
            format!("{c}")
        } else if c == 1 {
            factors.join("*")
        } else {
            format!("{c}*{}", factors.join("*"))
        };
        pieces.push(piece);
    }
    pieces.join(" + ")
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeModulus;

    fn ring(n_plus_1: usize, p: u64) -> RingSpec {
        RingSpec::new(n_plus_1, PrimeModulus::new(p).unwrap())
    }

    #[test]
    fn parses_fermat_cubic() {
        let r = ring(3, 5);
        let f = parse(r, "x0^3 + x1^3 + x2^3").unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.coeff(&Exponent::new(&[3, 0, 0])), 1);
    }

    #[test]
    fn binary_minus_reduces_to_canonical_residue() {
        let r = ring(3, 7);
        let f = parse(r, "x0^3 - x1^2*x2").unwrap();
        assert_eq!(f.coeff(&Exponent::new(&[0, 2, 1])), 6);
    }

    #[test]
    fn unary_minus_at_head_only() {
        let r = ring(2, 5);
        let f = parse(r, "-x0^2 + x1^2").unwrap();
        assert_eq!(f.coeff(&Exponent::new(&[2, 0])), 4);
        assert!(parse(r, "x0^2 + -x1^2").is_err());
    }

    #[test]
    fn implicit_multiplication_and_repeated_variables() {
        let r = ring(2, 5);
        assert_eq!(parse(r, "2x0").unwrap(), parse(r, "2*x0").unwrap());
        assert_eq!(parse(r, "x0*x0").unwrap(), parse(r, "x0^2").unwrap());
        assert_eq!(parse(r, "3x0x1").unwrap(), parse(r, "3*x0*x1").unwrap());
    }

    #[test]
    fn cancellation_keeps_the_declared_degree() {
        let r = ring(2, 5);
        let z = parse(r, "x0 - x0").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 1);
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let r = ring(2, 5);
        match parse(r, "x0 + x1^2") {
            Err(Error::DegreeMixture { degrees }) => assert_eq!(degrees, vec![1, 2]),
            other => panic!("expected degree mixture, got {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_variables_with_position() {
        let r = ring(3, 5);
        match parse(r, "x0^2 + x3^2") {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 8);
                assert!(msg.contains("x3"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn huge_coefficients_fold_mod_p() {
        let r = ring(1, 7);
        let f = parse(r, "99999999999999999999999999999999999999999999999*x0").unwrap();
        // 10^k mod 7 cycles; folding digit by digit gives the exact residue.
        // 999...9 (47 nines) = 10^47 - 1; 10^47 mod 7 = 10^(47 mod 6) mod 7 =
        // 10^5 mod 7 = 5; so the coefficient is 4.
        assert_eq!(f.coeff(&Exponent::new(&[1])), 4);
    }

    #[test]
    fn rejects_malformed_input() {
        let r = ring(2, 5);
        for bad in ["", "x0 +", "+x0", "x0**x1", "(x0)", "x0^", "y0", "x^2", "3^2", "x0 x1 +"] {
            assert!(parse(r, bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn format_examples() {
        let r = ring(2, 5);
        let f = parse(r, "x0^2 + 4*x1^2").unwrap();
        assert_eq!(format(&f), "x0^2 + 4*x1^2");
        assert_eq!(format(&parse(r, "7*x0*x1").unwrap()), "2*x0*x1");
        assert_eq!(format(&HomogPoly::zero(r, 3)), "0");
        assert_eq!(format(&parse(r, "3").unwrap()), "3");
        // Descending graded-lex puts higher x0 powers first.
        let g = parse(r, "x1^2 + x0*x1").unwrap();
        assert_eq!(format(&g), "x0*x1 + x1^2");
    }

    mod properties {
        use super::*;
        use crate::poly::monomials_of_degree;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]

            #[test]
            fn format_then_parse_is_identity(
                p in prop::sample::select(vec![2u64, 3, 5, 13]),
                num_vars in 1usize..4,
                degree in 0u64..5,
                seed in prop::collection::vec(0u64..1000, 16),
            ) {
                let r = ring(num_vars, p);
                let monos = monomials_of_degree(num_vars, degree);
                let f = HomogPoly::from_terms(
                    r,
                    degree,
                    monos.iter().enumerate().map(|(i, m)| {
                        (m.clone(), seed[i % seed.len()] % p)
                    }),
                ).unwrap();
                prop_assume!(!f.is_zero());
                let text = format(&f);
                let back = parse(r, &text).unwrap();
                prop_assert_eq!(back, f);
            }

            #[test]
            fn parser_never_panics_on_arbitrary_input(text in "[ -~]{0,40}") {
                let r = ring(3, 5);
                let _ = parse(r, &text);
            }

            #[test]
            fn parser_rejects_parenthesized_or_trailing_operator_input(
                core in "[x0-9+* ^-]{0,20}",
                kind in 0usize..3,
            ) {
                let r = ring(3, 5);
                let text = match kind {
                    0 => format!("({core})"),
                    1 => format!("{core}+"),
                    _ => format!("{core}-"),
                };
                prop_assert!(parse(r, &text).is_err());
            }
        }
    }
}
