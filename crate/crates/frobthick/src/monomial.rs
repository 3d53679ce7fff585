//! Monomial ideal arithmetic.
//!
//! Generators are exponent vectors kept minimal and sorted, so structural
//! equality is ideal equality. The bracket ideal (x_0^q, ..., x_n^q) and its
//! colon ideals by powers of the maximal ideal get dedicated support: every
//! ideal between the bracket and the whole ring is determined by its
//! membership table on the exponent box [0, q]^{n+1}, and colon by the
//! maximal ideal is a single sweep over that table. Iterating the sweep
//! computes (x_0^q, ..., x_n^q) : m^N from first principles, with no closed
//! form assumed.

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Exponent, HomogPoly};

/// Ceiling on box cells for the lattice colon computation.
const BOX_CELL_LIMIT: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    num_vars: usize,
    /// Minimal generators, sorted ascending graded-lex.
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn new(num_vars: usize, gens: Vec<Exponent>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), num_vars, "generator width mismatch");
        }
        let gens = minimalize(gens);
        MonomialIdeal { num_vars, gens }
    }

    /// The zero ideal (no generators).
    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal { num_vars, gens: Vec::new() }
    }

    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal { num_vars, gens: vec![Exponent::zeros(num_vars)] }
    }

    /// (x_0^q, ..., x_n^q)
    pub fn bracket(num_vars: usize, q: u64) -> Self {
        assert!(q >= 1, "bracket power must be at least 1");
        let q32 = u32::try_from(q).expect("bracket power exceeds exponent range");
        let gens = (0..num_vars)
            .map(|i| {
                let mut e = vec![0u32; num_vars];
                e[i] = q32;
                Exponent::new(&e)
            })
            .collect();
        MonomialIdeal::new(num_vars, gens)
    }

    /// m^k, the k-th power of the maximal ideal; k = 0 gives the unit ideal.
    pub fn max_ideal_power(num_vars: usize, k: u64) -> Self {
        MonomialIdeal { num_vars, gens: monomials_of_degree(num_vars, k) }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn minimal_generators(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.gens.iter().any(|g| g.divides(e))
    }

    /// Ideal sum: union of generators, minimalized.
    pub fn add(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.num_vars, other.num_vars);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.num_vars, gens)
    }

    /// Intersection via pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.num_vars, other.num_vars);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.num_vars, gens)
    }

    /// I : x^m, computed per generator: g maps to g / gcd(g, x^m).
    pub fn colon_by_monomial(&self, m: &Exponent) -> MonomialIdeal {
        assert_eq!(m.len(), self.num_vars);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let e: Vec<u32> =
                    g.iter().zip(m.iter()).map(|(a, b)| a.saturating_sub(b)).collect();
                Exponent::new(&e)
            })
            .collect();
        MonomialIdeal::new(self.num_vars, gens)
    }

    /// Number of degree-d monomials outside the ideal, i.e. the dimension of
    /// the degree-d piece of the quotient ring.
    pub fn graded_dim_complement(&self, degree: u64) -> u64 {
        monomials_of_degree(self.num_vars, degree)
            .iter()
            .filter(|m| !self.contains(m))
            .count() as u64
    }
}

fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
    // Ascending graded-lex means potential divisors come earlier.
    'cand: for g in gens {
        for k in &kept {
            if k.divides(&g) {
                continue 'cand;
            }
        }
        kept.push(g);
    }
    kept
}

/// Is the monomial x^e in (x_0^q, ..., x_n^q)?
pub fn in_bracket(e: &Exponent, q: u64) -> bool {
    e.iter().any(|x| x as u64 >= q)
}

/// Drop the terms of f lying in the bracket ideal.
pub fn reduce_mod_bracket(f: &HomogPoly, q: u64) -> HomogPoly {
    f.reduce_mod_bracket(q)
}

/// Membership table of an ideal J with (x_0^q,...,x_n^q) <= J <= S on the
/// exponent box [0, q]^{num_vars}. Such a J is determined by the table:
/// coordinates clamp to q because any exponent >= q already lies in the
/// bracket part.
struct BoxTable {
    num_vars: usize,
    q: usize,
    strides: Vec<usize>,
    cells: Vec<bool>,
}

impl BoxTable {
    fn bracket(num_vars: usize, q: u64) -> Result<Self> {
        let side = q as u128 + 1;
        let total = side.checked_pow(num_vars as u32).unwrap_or(u128::MAX);
        if total > BOX_CELL_LIMIT {
            return Err(Error::Guardrail {
                estimate: total,
                limit: BOX_CELL_LIMIT,
                what: format!("a lattice colon over a (q+1)^{num_vars} box with q = {q}"),
            });
        }
        let q = q as usize;
        let side = q + 1;
        let mut strides = vec![1usize; num_vars];
        for i in 1..num_vars {
            strides[i] = strides[i - 1] * side;
        }
        let total = total as usize;
        let mut cells = vec![false; total];
        let mut coords = vec![0usize; num_vars];
        for (idx, cell) in cells.iter_mut().enumerate() {
            *cell = coords.contains(&q);
            bump(&mut coords, side);
            let _ = idx;
        }
        Ok(BoxTable { num_vars, q, strides, cells })
    }

    /// Replace J by J : m = intersection over i of J : x_i. A monomial is in
    /// the new table when every single-variable bump stays inside the old
    /// one; bumping a coordinate already at q is a no-op since that region
    /// is the always-contained bracket part.
    fn colon_by_max_ideal(&mut self) {
        let side = self.q + 1;
        let mut next = vec![false; self.cells.len()];
        let mut coords = vec![0usize; self.num_vars];
        for (idx, out) in next.iter_mut().enumerate() {
            let mut all = true;
            for (&c, &stride) in coords.iter().zip(&self.strides) {
                let nb = if c == self.q { idx } else { idx + stride };
                if !self.cells[nb] {
                    all = false;
                    break;
                }
            }
            *out = all;
            bump(&mut coords, side);
        }
        self.cells = next;
    }

    /// Minimal generators: contained cells all of whose predecessors are
    /// outside. Generators of any ideal containing the bracket have all
    /// exponents <= q, so the box sees every one of them.
    fn minimal_generators(&self) -> Vec<Exponent> {
        let side = self.q + 1;
        let mut out = Vec::new();
        let mut coords = vec![0usize; self.num_vars];
        for (idx, &cell) in self.cells.iter().enumerate() {
            if cell {
                let minimal = (0..self.num_vars).all(|i| {
                    coords[i] == 0 || !self.cells[idx - self.strides[i]]
                });
                if minimal {
                    let e: Vec<u32> = coords.iter().map(|&c| c as u32).collect();
                    out.push(Exponent::new(&e));
                }
            }
            bump(&mut coords, side);
        }
        out
    }
}

fn bump(coords: &mut [usize], side: usize) {
    for c in coords.iter_mut() {
        *c += 1;
        if *c < side {
            return;
        }
        *c = 0;
    }
}

/// (x_0^q, ..., x_n^q) : m^N, computed by iterating colon-by-the-maximal-
/// ideal N times on the membership table. Fails with a guardrail error when
/// the box (q+1)^num_vars is too large.
pub fn colon_bracket_by_power(num_vars: usize, q: u64, n_pow: u64) -> Result<MonomialIdeal> {
    let mut table = BoxTable::bracket(num_vars, q)?;
    for _ in 0..n_pow {
        table.colon_by_max_ideal();
        if table.cells.iter().all(|&c| c) {
            // Unit ideal; further colons are fixed points.
            break;
        }
    }
    Ok(MonomialIdeal::new(num_vars, table.minimal_generators()))
}

/// All of (x_0^q, ..., x_n^q) : m^N for N = 0..=n_max, sharing one table
/// sweep. Entry N of the result is the colon by m^N.
pub fn colon_bracket_sweep(num_vars: usize, q: u64, n_max: u64) -> Result<Vec<MonomialIdeal>> {
    let mut table = BoxTable::bracket(num_vars, q)?;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(MonomialIdeal::new(num_vars, table.minimal_generators()));
    for _ in 1..=n_max {
        table.colon_by_max_ideal();
        out.push(MonomialIdeal::new(num_vars, table.minimal_generators()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeModulus;
    use crate::poly::RingSpec;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v)
    }

    #[test]
    fn minimal_generator_normalization() {
        // x0^2 is absorbed by x0; order of input does not matter.
        let i = MonomialIdeal::new(2, vec![e(&[2, 0]), e(&[1, 0]), e(&[0, 3]), e(&[1, 2])]);
        assert_eq!(i.minimal_generators(), &[e(&[1, 0]), e(&[0, 3])]);
        let j = MonomialIdeal::new(2, vec![e(&[0, 3]), e(&[1, 2]), e(&[1, 0]), e(&[2, 0])]);
        assert_eq!(i, j);
    }

    #[test]
    fn membership_is_divisibility() {
        let i = MonomialIdeal::bracket(2, 3);
        assert!(i.contains(&e(&[3, 0])));
        assert!(i.contains(&e(&[4, 2])));
        assert!(!i.contains(&e(&[2, 2])));
        assert!(!MonomialIdeal::zero(2).contains(&e(&[0, 0])));
        assert!(MonomialIdeal::unit(2).contains(&e(&[0, 0])));
    }

    #[test]
    fn in_bracket_matches_ideal_membership_exhaustively() {
        let q = 3u64;
        for num_vars in 1..=3usize {
            let ideal = MonomialIdeal::bracket(num_vars, q);
            for d in 0..=3 * num_vars as u64 {
                for m in monomials_of_degree(num_vars, d) {
                    assert_eq!(in_bracket(&m, q), ideal.contains(&m));
                }
            }
        }
    }

    #[test]
    fn pigeonhole_degree_forces_bracket_membership() {
        // Every monomial of degree (n+1)(q-1) + 1 has an exponent >= q.
        for num_vars in 1..=3usize {
            for q in 1..=4u64 {
                let d = num_vars as u64 * (q - 1) + 1;
                for m in monomials_of_degree(num_vars, d) {
                    assert!(in_bracket(&m, q));
                }
                // And the bound is sharp: degree (n+1)(q-1) has a survivor.
                if q > 1 {
                    let all_q_minus_1 = Exponent::constant(num_vars, (q - 1) as u32);
                    assert!(!in_bracket(&all_q_minus_1, q));
                }
            }
        }
    }

    #[test]
    fn reduce_mod_bracket_keeps_declared_degree() {
        let r = RingSpec::new(3, PrimeModulus::new(5).unwrap());
        let f = crate::parse::parse(r, "x0^5*x1 + x0^2*x1^4 + x2^6").unwrap();
        let red = reduce_mod_bracket(&f, 5);
        assert_eq!(red.num_terms(), 1);
        assert_eq!(red.coeff(&e(&[2, 4, 0])), 1);
        assert_eq!(red.degree(), 6);
    }

    #[test]
    fn colon_of_bracket_three_by_maximal_ideal() {
        // (x0^3, x1^3) : m = (x0^3, x1^3, x0^2*x1^2).
        let c = colon_bracket_by_power(2, 3, 1).unwrap();
        let expected =
            MonomialIdeal::new(2, vec![e(&[3, 0]), e(&[0, 3]), e(&[2, 2])]);
        assert_eq!(c, expected);
    }

    #[test]
    fn colon_by_zeroth_power_is_identity() {
        let c = colon_bracket_by_power(3, 4, 0).unwrap();
        assert_eq!(c, MonomialIdeal::bracket(3, 4));
    }

    #[test]
    fn colon_by_huge_power_is_unit() {
        // N >= (n+1)q - n clears everything: even 1 * m^N lies in the bracket.
        let num_vars = 3usize;
        let q = 3u64;
        let n = num_vars as u64 * q - (num_vars as u64 - 1);
        let c = colon_bracket_by_power(num_vars, q, n).unwrap();
        assert!(c.is_unit());
        let c_prev = colon_bracket_by_power(num_vars, q, n - 1).unwrap();
        assert!(!c_prev.is_unit());
    }

    /// Definition-level oracle: x^a is in I : m^N when x^a * x^b is in I for
    /// every monomial x^b of degree N.
    fn colon_membership_oracle(a: &Exponent, q: u64, n_pow: u64) -> bool {
        monomials_of_degree(a.len(), n_pow)
            .iter()
            .all(|b| in_bracket(&a.checked_add(b), q))
    }

    #[test]
    fn lattice_colon_matches_definition_oracle() {
        for num_vars in 1..=3usize {
            for q in 1..=3u64 {
                for n_pow in 0..=(num_vars as u64 * q) {
                    let c = colon_bracket_by_power(num_vars, q, n_pow).unwrap();
                    for d in 0..=(q + 1) * num_vars as u64 {
                        for m in monomials_of_degree(num_vars, d) {
                            assert_eq!(
                                c.contains(&m),
                                colon_membership_oracle(&m, q, n_pow),
                                "num_vars={num_vars} q={q} N={n_pow} m={m:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_colon_matches_generatorwise_intersection() {
        // The literal route: intersect I : x^b over all degree-N monomials b.
        for num_vars in 2..=3usize {
            for q in 2..=3u64 {
                for n_pow in 1..=4u64 {
                    let bracket = MonomialIdeal::bracket(num_vars, q);
                    let by_gens = monomials_of_degree(num_vars, n_pow)
                        .iter()
                        .map(|b| bracket.colon_by_monomial(b))
                        .reduce(|a, b| a.intersect(&b))
                        .unwrap();
                    let by_lattice = colon_bracket_by_power(num_vars, q, n_pow).unwrap();
                    assert_eq!(by_gens, by_lattice, "num_vars={num_vars} q={q} N={n_pow}");
                }
            }
        }
    }

    #[test]
    fn sweep_agrees_with_individual_colons() {
        let sweep = colon_bracket_sweep(2, 4, 8).unwrap();
        for (n_pow, ideal) in sweep.iter().enumerate() {
            assert_eq!(*ideal, colon_bracket_by_power(2, 4, n_pow as u64).unwrap());
        }
    }

    #[test]
    fn graded_dim_complement_examples() {
        // Zero ideal: all C(3+2,2) = 10 monomials of degree 3 in 3 variables.
        assert_eq!(MonomialIdeal::zero(3).graded_dim_complement(3), 10);
        // Bracket q=2: only (1,1,1) survives at degree 3.
        assert_eq!(MonomialIdeal::bracket(3, 2).graded_dim_complement(3), 1);
        // Unit ideal: nothing survives.
        assert_eq!(MonomialIdeal::unit(3).graded_dim_complement(0), 0);
    }

    #[test]
    fn intersection_and_sum_sanity() {
        let a = MonomialIdeal::new(2, vec![e(&[2, 0])]);
        let b = MonomialIdeal::new(2, vec![e(&[0, 2])]);
        let meet = a.intersect(&b);
        assert_eq!(meet.minimal_generators(), &[e(&[2, 2])]);
        let join = a.add(&b);
        assert_eq!(join.minimal_generators().len(), 2);
    }

    #[test]
    fn guardrail_rejects_oversized_boxes() {
        match colon_bracket_by_power(6, 100_000, 1) {
            Err(Error::Guardrail { .. }) => {}
            other => panic!("expected guardrail, got {other:?}"),
        }
    }
}
