//! Homogeneous multivariate polynomials over F_p.
//!
//! Polynomials are sparse term maps keyed by exponent vectors in graded
//! lexicographic order. A zero polynomial still carries a declared degree so
//! graded shape checks stay meaningful after cancellation.
//!
//! The characteristic-p structure does real work here: `pow` decomposes the
//! exponent in base p and applies the Frobenius termwise for each digit
//! position, and every product accepts an optional truncation modulo the
//! bracket ideal (x_0^q, ..., x_n^q), which is sound because dropped terms
//! generate an ideal.

use crate::error::{Error, Result};
use crate::linalg::{PrimeModulus, Scalar};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

type ExpVec = SmallVec<[u32; 6]>;

/// The ambient polynomial ring F_p[x_0, ..., x_{num_vars-1}].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct RingSpec {
    num_vars: usize,
    modulus: PrimeModulus,
}

impl RingSpec {
    pub fn new(num_vars: usize, modulus: PrimeModulus) -> Self {
        assert!(num_vars >= 1, "ring needs at least one variable");
        RingSpec { num_vars, modulus }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn char(&self) -> u64 {
        self.modulus.get()
    }
}

impl std::fmt::Display for RingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F_{}[x0..x{}]", self.modulus.get(), self.num_vars - 1)
    }
}

/// An exponent vector. Ordering is graded lexicographic: total degree first,
/// then lexicographic with earlier variables weighted higher, so iterating a
/// term map in reverse yields the conventional display order (x0 powers
/// first).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent(ExpVec);

impl Exponent {
    pub fn new(exps: &[u32]) -> Self {
        Exponent(ExpVec::from_slice(exps))
    }

    pub fn zeros(num_vars: usize) -> Self {
        Exponent(smallvec::smallvec![0; num_vars])
    }

    /// Standard basis exponent: x_i.
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = Self::zeros(num_vars);
        e.0[i] = 1;
        e
    }

    pub fn constant(num_vars: usize, each: u32) -> Self {
        Exponent(smallvec::smallvec![each; num_vars])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn checked_add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = ExpVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Exponent(out))
    }

    pub fn scaled(&self, factor: u64) -> Exponent {
        Exponent(
            self.0
                .iter()
                .map(|&e| {
                    u32::try_from(e as u64 * factor).expect("exponent overflow under scaling")
                })
                .collect(),
        )
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len(), other.len());
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A homogeneous polynomial: a term map plus a declared degree. The map
/// holds only nonzero canonical residues, and every key has the declared
/// total degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogPoly {
    ring: RingSpec,
    degree: u64,
    terms: BTreeMap<Exponent, u64>,
}

impl HomogPoly {
    pub fn zero(ring: RingSpec, degree: u64) -> Self {
        HomogPoly { ring, degree, terms: BTreeMap::new() }
    }

    pub fn one(ring: RingSpec) -> Self {
        Self::monomial(ring, Exponent::zeros(ring.num_vars()), 1)
    }

    pub fn monomial(ring: RingSpec, exp: Exponent, coeff: u64) -> Self {
        assert_eq!(exp.len(), ring.num_vars(), "exponent width mismatch");
        let degree = exp.degree();
        let c = coeff % ring.char();
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exp, c);
        }
        HomogPoly { ring, degree, terms }
    }

    pub fn from_terms<I>(ring: RingSpec, degree: u64, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, u64)>,
    {
        let p = ring.char();
        let mut terms = BTreeMap::new();
        for (e, c) in iter {
            if e.len() != ring.num_vars() {
                return Err(Error::ShapeMismatch(format!(
                    "exponent of width {} in a {}-variable ring",
                    e.len(),
                    ring.num_vars()
                )));
            }
            if e.degree() != degree {
                return Err(Error::DegreeMixture { degrees: vec![degree, e.degree()] });
            }
            let entry = terms.entry(e).or_insert(0u64);
            *entry = (*entry + c % p) % p;
        }
        terms.retain(|_, c| *c != 0);
        Ok(HomogPoly { ring, degree, terms })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exponent) -> u64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn coeff_scalar(&self, e: &Exponent) -> Scalar {
        Scalar::new(self.coeff(e), self.ring.modulus())
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, u64)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    /// Terms in display order: descending graded-lex, x0 powers first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Exponent, u64)> {
        self.terms.iter().rev().map(|(e, c)| (e, *c))
    }

    pub fn leading_exponent(&self) -> Option<&Exponent> {
        self.terms.keys().next_back()
    }

    fn check_ring(&self, other: &HomogPoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::ShapeMismatch(format!(
                "rings differ: {} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &HomogPoly) -> Result<HomogPoly> {
        self.check_ring(other)?;
        if self.degree != other.degree {
            return Err(Error::ShapeMismatch(format!(
                "adding degree {} to degree {}",
                self.degree, other.degree
            )));
        }
        let p = self.ring.char();
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert(0);
            *entry = (*entry + c) % p;
        }
        terms.retain(|_, c| *c != 0);
        Ok(HomogPoly { ring: self.ring, degree: self.degree, terms })
    }

    pub fn sub(&self, other: &HomogPoly) -> Result<HomogPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HomogPoly {
        let m = self.ring.modulus();
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), m.neg(*c))).collect();
        HomogPoly { ring: self.ring, degree: self.degree, terms }
    }

    pub fn scale(&self, coeff: u64) -> HomogPoly {
        let p = self.ring.char();
        let c = coeff % p;
        if c == 0 {
            return HomogPoly::zero(self.ring, self.degree);
        }
        let m = self.ring.modulus();
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), m.mul(*a, c))).collect();
        HomogPoly { ring: self.ring, degree: self.degree, terms }
    }

    /// Product, optionally truncated modulo the bracket ideal
    /// (x_0^q, ..., x_n^q): monomials with any exponent >= q are dropped as
    /// they arise. Truncation commutes with multiplication because the
    /// dropped monomials form an ideal.
    pub fn mul(&self, other: &HomogPoly, trunc: Option<u64>) -> Result<HomogPoly> {
        self.check_ring(other)?;
        let degree = self.degree + other.degree;
        let m = self.ring.modulus();
        let p = m.get();
        let mut acc: HashMap<Exponent, u64> =
            HashMap::with_capacity(self.terms.len().max(other.terms.len()) * 2);
        // Iterate the smaller factor outside: fewer clone-heavy outer rounds.
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ea, ca) in &small.terms {
            for (eb, cb) in &big.terms {
                let e = ea.checked_add(eb);
                if let Some(q) = trunc {
                    if e.iter().any(|x| x as u64 >= q) {
                        continue;
                    }
                }
                let prod = m.mul(*ca, *cb);
                let entry = acc.entry(e).or_insert(0);
                *entry = (*entry + prod) % p;
            }
        }
        let mut terms = BTreeMap::new();
        for (e, c) in acc {
            if c != 0 {
                terms.insert(e, c);
            }
        }
        Ok(HomogPoly { ring: self.ring, degree, terms })
    }

    /// Fast path: multiply by a single monomial.
    pub fn mul_monomial(&self, exp: &Exponent, coeff: u64, trunc: Option<u64>) -> HomogPoly {
        assert_eq!(exp.len(), self.ring.num_vars());
        let m = self.ring.modulus();
        let c0 = coeff % m.get();
        let degree = self.degree + exp.degree();
        if c0 == 0 {
            return HomogPoly::zero(self.ring, degree);
        }
        let mut terms = BTreeMap::new();
        'term: for (e, c) in &self.terms {
            let en = e.checked_add(exp);
            if let Some(q) = trunc {
                for x in en.iter() {
                    if x as u64 >= q {
                        continue 'term;
                    }
                }
            }
            terms.insert(en, m.mul(*c, c0));
        }
        HomogPoly { ring: self.ring, degree, terms }
    }

    /// Drop every monomial lying in (x_0^q, ..., x_n^q).
    pub fn reduce_mod_bracket(&self, q: u64) -> HomogPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().all(|x| (x as u64) < q))
            .map(|(e, c)| (e.clone(), *c))
            .collect();
        HomogPoly { ring: self.ring, degree: self.degree, terms }
    }

    /// The image under Frobenius: every exponent multiplied by p. The
    /// coefficients are fixed because c^p = c in F_p, so this really is the
    /// p-th power of the polynomial.
    pub fn frobenius(&self) -> HomogPoly {
        self.scale_exponents(self.ring.char())
    }

    /// Termwise q-th power map for q a power of p (the caller guarantees
    /// that; the map below is only multiplicative on terms).
    fn scale_exponents(&self, factor: u64) -> HomogPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.scaled(factor), *c)).collect();
        HomogPoly { ring: self.ring, degree: self.degree * factor, terms }
    }

    /// k-th power using the base-p digits of k: f^k is the product over
    /// digits k_i of (f^{k_i}) with exponents scaled by p^i. Inner powers
    /// use repeated multiplication (best for sparse inputs), and when a
    /// truncation bound q is given each inner power is truncated at
    /// ceil(q / p^i), which is exactly what survives the later scaling.
    pub fn pow(&self, k: u64, trunc: Option<u64>) -> HomogPoly {
        if k == 0 {
            return HomogPoly::one(self.ring);
        }
        let p = self.ring.char();
        let target_degree = self.degree * k;
        let mut result = HomogPoly::one(self.ring);
        let mut rem = k;
        let mut pexp: u64 = 1;
        loop {
            let digit = rem % p;
            rem /= p;
            if digit > 0 {
                let inner_trunc = trunc.map(|q| q.div_ceil(pexp));
                let small = self.repeated_mul(digit, inner_trunc);
                let scaled = small.scale_exponents(pexp);
                result = result.mul(&scaled, trunc).expect("same ring");
            }
            if rem == 0 {
                break;
            }
            pexp = pexp.checked_mul(p).expect("p^i overflow in pow");
        }
        result.degree = target_degree;
        result
    }

    /// Reference power: k-1 successive multiplications, no base-p structure.
    /// Quadratic and only sensible at small sizes; kept public so tests and
    /// examples can cross-check `pow` against an independent route.
    pub fn pow_naive(&self, k: u64, trunc: Option<u64>) -> HomogPoly {
        if k == 0 {
            return HomogPoly::one(self.ring);
        }
        let mut result = match trunc {
            Some(q) => self.reduce_mod_bracket(q),
            None => self.clone(),
        };
        for _ in 1..k {
            result = result.mul(self, trunc).expect("same ring");
        }
        result
    }

    fn repeated_mul(&self, k: u64, trunc: Option<u64>) -> HomogPoly {
        debug_assert!(k >= 1);
        let mut result = match trunc {
            Some(q) => self.reduce_mod_bracket(q),
            None => self.clone(),
        };
        for _ in 1..k {
            result = result.mul(self, trunc).expect("same ring");
        }
        result
    }

    /// Formal partial derivative with respect to x_i.
    pub fn partial_derivative(&self, i: usize) -> HomogPoly {
        assert!(i < self.ring.num_vars(), "variable index out of range");
        assert!(self.degree >= 1, "derivative of a degree-0 polynomial");
        let m = self.ring.modulus();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let a = e.get(i);
            if a == 0 {
                continue;
            }
            let coeff = m.mul(*c, a as u64 % m.get());
            if coeff == 0 {
                continue;
            }
            let mut exps = ExpVec::from_slice(&e.0);
            exps[i] -= 1;
            terms.insert(Exponent(exps), coeff);
        }
        HomogPoly { ring: self.ring, degree: self.degree - 1, terms }
    }
}

/// All exponent vectors of the given total degree, descending graded-lex.
pub fn monomials_of_degree(num_vars: usize, degree: u64) -> Vec<Exponent> {
    bounded_monomials(num_vars, degree, u64::MAX)
}

/// All exponent vectors of the given total degree with every entry < bound,
/// in descending graded-lex order. This is the monomial basis of the degree-d
/// piece of S/(x_0^bound, ..., x_n^bound).
pub fn bounded_monomials(num_vars: usize, degree: u64, bound: u64) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fn rec(
        out: &mut Vec<Exponent>,
        current: &mut Vec<u32>,
        var: usize,
        remaining: u64,
        bound: u64,
    ) {
        let num_vars = current.len();
        if var + 1 == num_vars {
            if remaining < bound && remaining <= u32::MAX as u64 {
                current[var] = remaining as u32;
                out.push(Exponent(ExpVec::from_slice(current)));
                current[var] = 0;
            }
            return;
        }
        // Descending so the overall order is descending graded-lex.
        let top = remaining.min(bound.saturating_sub(1)).min(u32::MAX as u64);
        let mut e = top as i64;
        while e >= 0 {
            current[var] = e as u32;
            rec(out, current, var + 1, remaining - e as u64, bound);
            e -= 1;
        }
        current[var] = 0;
    }
    if bound == 0 {
        return out;
    }
    rec(&mut out, &mut current, 0, degree, bound);
    out
}

/// Number of monomials of the given degree: C(degree + num_vars - 1, num_vars - 1).
/// Saturates at u128::MAX.
pub fn monomial_count(num_vars: usize, degree: u64) -> u128 {
    binomial_saturating(degree + num_vars as u64 - 1, num_vars as u64 - 1)
}

pub fn binomial_saturating(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Uniformly random homogeneous polynomial of the given degree (all
/// coefficients drawn independently from F_p).
pub fn random_homogeneous<R: rand::Rng>(ring: RingSpec, degree: u64, rng: &mut R) -> HomogPoly {
    let p = ring.char();
    let mut terms = BTreeMap::new();
    for e in monomials_of_degree(ring.num_vars(), degree) {
        let c = rng.gen_range(0..p);
        if c != 0 {
            terms.insert(e, c);
        }
    }
    HomogPoly { ring, degree, terms }
}
