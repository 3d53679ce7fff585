//! Top local cohomology of the polynomial ring, computed on the Čech
//! complex of the variables.
//!
//! A class in H^{n+1}_m(S) is written [s / (x_0 ... x_n)^e]; it vanishes
//! exactly when the numerator lies in (x_0^e, ..., x_n^e). Exactness at
//! every level e — not just for e large — is what makes the representation
//! usable: ((x_0^{e+k}, ..., x_n^{e+k}) : (x_0...x_n)^k) = (x_0^e, ..., x_n^e)
//! since the variable powers form a regular sequence, so no cancellation
//! appears later that is invisible now.

use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, RowEchelon};
use crate::monomial::{in_bracket, reduce_mod_bracket};
use crate::poly::{binomial_saturating, bounded_monomials, Exponent, HomogPoly, RingSpec};
use std::collections::HashMap;

/// The internal-degree-m graded piece of H^{n+1}_m(S), S = F_p[x_0..x_n].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyPiece {
    ring: RingSpec,
    degree: i64,
}

impl CohomologyPiece {
    pub fn new(ring: RingSpec, degree: i64) -> Self {
        CohomologyPiece { ring, degree }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// dim [H^{n+1}_m(S)]_m = C(-m-1, n), zero unless m <= -(n+1).
    pub fn dim(&self) -> u64 {
        let n = self.ring.num_vars() as i64 - 1;
        if self.degree > -(n + 1) {
            return 0;
        }
        let top = (-self.degree - 1) as u64;
        binomial_saturating(top, n as u64).min(u64::MAX as u128) as u64
    }

    /// Smallest level at which every class of this piece is representable:
    /// the fraction 1/(x_0^{a_0} ... x_n^{a_n}) with sum(a) = -m and every
    /// a_i >= 1 forces e >= max(a_i), which can reach -m - n.
    pub fn min_level(&self) -> u64 {
        let n = self.ring.num_vars() as i64 - 1;
        (-self.degree - n).max(1) as u64
    }

    /// Degree of numerators representing this piece at the given level.
    pub fn numerator_degree(&self, level: u64) -> i64 {
        self.degree + (level * self.ring.num_vars() as u64) as i64
    }

    /// Monomial basis of S_D / (x_0^e, ..., x_n^e)_D at the numerator degree
    /// D for this level: exponent vectors with every entry < level. For
    /// level >= min_level these biject with the classes of the piece, so
    /// they serve as coordinates.
    pub fn monomial_basis(&self, level: u64) -> Vec<Exponent> {
        let d = self.numerator_degree(level);
        if d < 0 {
            return Vec::new();
        }
        bounded_monomials(self.ring.num_vars(), d as u64, level)
    }

    /// The standard basis: classes [x^b / (x_0...x_n)^e] at the minimal
    /// level, one per monomial in `monomial_basis(min_level)`.
    pub fn std_basis(&self) -> Vec<CechClass> {
        let e = self.min_level();
        self.monomial_basis(e)
            .into_iter()
            .map(|b| {
                CechClass::new(HomogPoly::monomial(self.ring, b, 1), e)
                    .expect("min_level is positive")
            })
            .collect()
    }
}

/// A Čech cohomology class [numerator / (x_0 ... x_n)^level].
#[derive(Clone, Debug)]
pub struct CechClass {
    numerator: HomogPoly,
    level: u64,
}

impl CechClass {
    pub fn new(numerator: HomogPoly, level: u64) -> Result<Self> {
        if level == 0 {
            return Err(Error::Precondition("Čech class at level zero".into()));
        }
        Ok(CechClass { numerator, level })
    }

    pub fn ring(&self) -> RingSpec {
        self.numerator.ring()
    }

    pub fn numerator(&self) -> &HomogPoly {
        &self.numerator
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn internal_degree(&self) -> i64 {
        self.numerator.degree() as i64
            - (self.level * self.ring().num_vars() as u64) as i64
    }

    pub fn piece(&self) -> CohomologyPiece {
        CohomologyPiece::new(self.ring(), self.internal_degree())
    }

    /// Zero exactly when the numerator lies in (x_0^level, ..., x_n^level).
    pub fn is_zero(&self) -> bool {
        reduce_mod_bracket(&self.numerator, self.level).is_zero()
    }

    /// Canonical representative: numerator reduced modulo the bracket.
    pub fn reduce(&self) -> CechClass {
        CechClass {
            numerator: reduce_mod_bracket(&self.numerator, self.level),
            level: self.level,
        }
    }

    /// Same class, re-expressed at a higher level by multiplying the
    /// numerator with (x_0 ... x_n)^(new - old).
    pub fn raise_level(&self, new_level: u64) -> Result<CechClass> {
        if new_level < self.level {
            return Err(Error::Precondition("levels only go up".into()));
        }
        if new_level == self.level {
            return Ok(self.clone());
        }
        let delta = new_level - self.level;
        if delta > u32::MAX as u64 {
            return Err(Error::Precondition("level jump overflows exponents".into()));
        }
        let shift = Exponent::constant(self.ring().num_vars(), delta as u32);
        Ok(CechClass {
            numerator: self.numerator.mul_monomial(&shift, 1, Some(new_level)),
            level: new_level,
        })
    }

    /// The Frobenius image: [s/x^e] to [s^p / x^(ep)]. Injective on
    /// H^{n+1}_m(S) itself — a numerator outside (x_0^e,...,x_n^e) has a
    /// term with all exponents < e, and its p-th power stays below ep.
    pub fn frobenius(&self) -> CechClass {
        CechClass {
            numerator: self.numerator.frobenius(),
            level: self.level * self.ring().modulus().get(),
        }
    }

    /// Multiplication by a ring element, truncated: numerator terms inside
    /// (x_0^level, ..., x_n^level) die in the class, so they are dropped
    /// during the product.
    pub fn multiply(&self, g: &HomogPoly) -> Result<CechClass> {
        Ok(CechClass {
            numerator: self.numerator.mul(g, Some(self.level))?,
            level: self.level,
        })
    }

    pub fn scale(&self, c: u64) -> CechClass {
        CechClass { numerator: self.numerator.scale(c), level: self.level }
    }

    /// Sum of classes at a common level.
    pub fn add(&self, other: &CechClass) -> Result<CechClass> {
        let level = self.level.max(other.level);
        let a = self.raise_level(level)?;
        let b = other.raise_level(level)?;
        Ok(CechClass { numerator: a.numerator.add(&b.numerator)?, level })
    }

    /// Mathematical equality of classes, independent of representation.
    pub fn eq_class(&self, other: &CechClass) -> Result<bool> {
        if self.ring() != other.ring() {
            return Err(Error::ShapeMismatch("classes from different rings".into()));
        }
        if self.internal_degree() != other.internal_degree() {
            return Ok(self.is_zero() && other.is_zero());
        }
        let level = self.level.max(other.level);
        let a = self.raise_level(level)?;
        let b = other.raise_level(level)?;
        Ok(a.numerator.sub(&b.numerator)?.is_zero())
    }
}

/// A subspace of one graded piece of H^{n+1}_m(S), carried as coordinate
/// columns over the monomial basis of the piece at a fixed level.
#[derive(Clone, Debug)]
pub struct Subspace {
    piece: CohomologyPiece,
    level: u64,
    basis: Vec<Exponent>,
    coords: FpMatrix,
}

impl Subspace {
    /// The whole piece.
    pub fn full(piece: CohomologyPiece, level: u64) -> Result<Self> {
        Self::check_level(&piece, level)?;
        let basis = piece.monomial_basis(level);
        let coords = FpMatrix::identity(basis.len(), piece.ring().modulus());
        Ok(Subspace { piece, level, basis, coords })
    }

    fn check_level(piece: &CohomologyPiece, level: u64) -> Result<()> {
        if piece.dim() > 0 && level < piece.min_level() {
            return Err(Error::Precondition(format!(
                "level {level} cannot represent a piece needing {}",
                piece.min_level()
            )));
        }
        if level == 0 {
            return Err(Error::Precondition("Čech level zero".into()));
        }
        Ok(())
    }

    pub fn piece(&self) -> CohomologyPiece {
        self.piece
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coords.cols()
    }

    pub fn coordinate_basis(&self) -> &[Exponent] {
        &self.basis
    }

    pub fn coords(&self) -> &FpMatrix {
        &self.coords
    }

    /// Materialize the columns as classes.
    pub fn classes(&self) -> Vec<CechClass> {
        (0..self.coords.cols())
            .map(|j| {
                let ring = self.piece.ring();
                let deg = self.piece.numerator_degree(self.level).max(0) as u64;
                let terms = (0..self.coords.rows())
                    .map(|i| (self.basis[i].clone(), self.coords.get(i, j)));
                let numerator =
                    HomogPoly::from_terms(ring, deg, terms).expect("basis is homogeneous");
                CechClass::new(numerator, self.level).expect("level checked on construction")
            })
            .collect()
    }
}

/// Rows of the stacked multiplication maps f_i : piece -> shifted piece in
/// the level-e monomial coordinates, together with the domain basis.
fn multiplication_rows(
    f_list: &[HomogPoly],
    piece: CohomologyPiece,
    level: u64,
) -> Result<(Vec<Exponent>, Vec<Vec<u64>>)> {
    Subspace::check_level(&piece, level)?;
    let ring = piece.ring();
    for f in f_list {
        if f.ring() != ring {
            return Err(Error::ShapeMismatch("annihilator across rings".into()));
        }
        if f.is_zero() {
            return Err(Error::Precondition("annihilator of a zero form".into()));
        }
    }
    let basis = piece.monomial_basis(level);
    let n_cols = basis.len();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for f in f_list {
        let target = CohomologyPiece::new(ring, piece.degree() + f.degree() as i64);
        let target_basis = target.monomial_basis(level);
        if target_basis.is_empty() {
            // Multiplication into a zero piece kills everything for free.
            continue;
        }
        let index: HashMap<&Exponent, usize> =
            target_basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        // Build the map column by column, then transpose into rows.
        let mut block = vec![vec![0u64; n_cols]; target_basis.len()];
        for (j, b) in basis.iter().enumerate() {
            let prod = f.mul_monomial(b, 1, Some(level));
            for (e, c) in prod.terms() {
                if in_bracket(e, level) {
                    continue;
                }
                block[index[e]][j] = c;
            }
        }
        rows.extend(block);
    }
    Ok((basis, rows))
}

/// The joint annihilator of f_1, ..., f_c inside one piece of H^{n+1}_m(S):
/// the kernel of the stacked multiplication maps into the shifted pieces.
/// With an empty list this is the full piece.
pub fn annihilator_subspace(
    f_list: &[HomogPoly],
    piece: CohomologyPiece,
    level: u64,
) -> Result<Subspace> {
    let (basis, rows) = multiplication_rows(f_list, piece, level)?;
    let stacked = FpMatrix::from_rows(&rows, basis.len(), piece.ring().modulus())?;
    let kernel = stacked.rref().kernel;
    Ok(Subspace { piece, level, basis, coords: kernel })
}

/// Dimension of the joint annihilator, without materializing kernel
/// vectors; rank accumulates in an echelon instead of a full reduction.
pub fn annihilator_dim(
    f_list: &[HomogPoly],
    piece: CohomologyPiece,
    level: u64,
) -> Result<u64> {
    let (basis, rows) = multiplication_rows(f_list, piece, level)?;
    let mut ech = RowEchelon::new(basis.len(), piece.ring().modulus());
    for row in rows {
        ech.insert(row);
        if ech.is_full() {
            break;
        }
    }
    Ok((basis.len() - ech.rank()) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeModulus;
    use crate::parse::parse;
    use crate::poly::monomial_count;

    fn ring(n_plus_1: usize, p: u64) -> RingSpec {
        RingSpec::new(n_plus_1, PrimeModulus::new(p).unwrap())
    }

    fn class(r: RingSpec, s: &str, level: u64) -> CechClass {
        CechClass::new(parse(r, s).unwrap(), level).unwrap()
    }

    #[test]
    fn piece_dimensions_count_compositions() {
        let r = ring(3, 5);
        // dim [H^3]_m = C(-m-1, 2): compositions of -m into three parts >= 1.
        for (m, want) in [(-3i64, 1u64), (-4, 3), (-5, 6), (-6, 10), (-2, 0), (-1, 0), (0, 0), (5, 0)] {
            assert_eq!(CohomologyPiece::new(r, m).dim(), want, "degree {m}");
        }
        // Cross-check against the stars-and-bars count in poly.
        for m in 3..=9i64 {
            let piece = CohomologyPiece::new(r, -m);
            assert_eq!(
                piece.dim() as u128,
                monomial_count(3, (m - 3) as u64),
                "degree {}",
                -m
            );
        }
    }

    #[test]
    fn std_basis_matches_dim_and_is_nonzero() {
        let r = ring(3, 5);
        for m in [-3i64, -4, -5, -7] {
            let piece = CohomologyPiece::new(r, m);
            let basis = piece.std_basis();
            assert_eq!(basis.len() as u64, piece.dim());
            for b in &basis {
                assert!(!b.is_zero());
                assert_eq!(b.internal_degree(), m);
                assert_eq!(b.level(), piece.min_level());
            }
        }
        // The socle piece is spanned by [1/(x0 x1 x2)].
        let socle = CohomologyPiece::new(r, -3);
        assert_eq!(socle.min_level(), 1);
        let b = socle.std_basis();
        assert_eq!(b[0].numerator().num_terms(), 1);
        assert_eq!(b[0].numerator().degree(), 0);
    }

    #[test]
    fn vanishing_is_bracket_membership_at_the_same_level() {
        let r = ring(3, 7);
        assert!(class(r, "x0^2", 2).is_zero());
        assert!(!class(r, "x0*x1*x2", 2).is_zero());
        assert!(class(r, "x0^2*x1*x2", 2).is_zero());
        assert!(!class(r, "x0*x1*x2 + x0^2*x1", 2).is_zero());
        // A cancellation visible only after reduction.
        let s = parse(r, "x0*x1*x2 + x0^2*x1").unwrap();
        let t = parse(r, "x0^2*x1").unwrap();
        let diff = s.sub(&t).unwrap();
        assert!(CechClass::new(diff, 2).unwrap().eq_class(&class(r, "x0*x1*x2", 2)).unwrap());
    }

    #[test]
    fn raising_the_level_does_not_change_the_class() {
        let r = ring(3, 5);
        let c = class(r, "x0*x1^2", 3); // degree 3 - 9 = -6 piece
        for lvl in 4..=8u64 {
            let raised = c.raise_level(lvl).unwrap();
            assert_eq!(raised.internal_degree(), c.internal_degree());
            assert!(!raised.is_zero(), "level {lvl}");
            assert!(raised.eq_class(&c).unwrap());
        }
        // And zero stays zero.
        let z = class(r, "x0^3", 3);
        assert!(z.is_zero());
        assert!(z.raise_level(7).unwrap().is_zero());
    }

    #[test]
    fn frobenius_is_injective_on_the_standard_basis() {
        let r = ring(3, 5);
        for m in [-3i64, -4, -6] {
            for b in CohomologyPiece::new(r, m).std_basis() {
                let fb = b.frobenius();
                assert!(!fb.is_zero(), "piece {m}");
                assert_eq!(fb.internal_degree(), 5 * m);
                assert_eq!(fb.level(), b.level() * 5);
            }
        }
    }

    #[test]
    fn multiplication_truncates_consistently() {
        let r = ring(3, 7);
        let eta = class(r, "x0^2*x1*x2^3", 4); // degree 6 - 12 = -6
        let f = parse(r, "x0^3 + x1^3 + x2^3").unwrap();
        let g = parse(r, "x0 + 2*x1").unwrap();
        let chained = eta.multiply(&f).unwrap().multiply(&g).unwrap();
        let product = eta.multiply(&f.mul(&g, None).unwrap()).unwrap();
        assert!(chained.eq_class(&product).unwrap());
        // Linearity over addition of ring elements of the same degree.
        let h = g.pow(3, None);
        let split = eta
            .multiply(&f)
            .unwrap()
            .add(&eta.multiply(&h).unwrap())
            .unwrap();
        let joint = eta.multiply(&f.add(&h).unwrap()).unwrap();
        assert!(split.eq_class(&joint).unwrap());
    }

    #[test]
    fn annihilator_of_a_variable_power() {
        // In the degree -6 piece over 3 variables (dim 10, level 4),
        // multiplication by x0^3 kills exactly the numerators whose every
        // term is divisible by x0: only x1^3 x2^3 survives, so the kernel
        // has dimension 9.
        let r = ring(3, 5);
        let piece = CohomologyPiece::new(r, -6);
        let f = parse(r, "x0^3").unwrap();
        let ann = annihilator_subspace(std::slice::from_ref(&f), piece, piece.min_level()).unwrap();
        assert_eq!(ann.dim(), 9);
        for c in ann.classes() {
            assert!(c.multiply(&f).unwrap().is_zero());
            assert!(!c.is_zero());
        }
        // The surviving direction really multiplies to something nonzero.
        let survivor = class(r, "x1^3*x2^3", 4);
        assert!(!survivor.multiply(&f).unwrap().is_zero());
    }

    #[test]
    fn joint_annihilator_is_the_intersection() {
        let r = ring(3, 5);
        let piece = CohomologyPiece::new(r, -6);
        let f0 = parse(r, "x0^3").unwrap();
        let f1 = parse(r, "x1^3").unwrap();
        let joint = annihilator_subspace(
            &[f0.clone(), f1.clone()],
            piece,
            piece.min_level(),
        )
        .unwrap();
        assert_eq!(joint.dim(), 8);
        for c in joint.classes() {
            assert!(c.multiply(&f0).unwrap().is_zero());
            assert!(c.multiply(&f1).unwrap().is_zero());
        }
    }

    #[test]
    fn annihilator_into_a_vanishing_piece_is_everything() {
        // Two quadrics in P^3: the twist-0 domain sits in degree -4, the
        // socle of H^4, and multiplication lands in the zero piece at -2,
        // so the annihilator is the full one-dimensional socle.
        let r = ring(4, 7);
        let f1 = parse(r, "x0^2 + x1^2 + x2^2 + x3^2").unwrap();
        let f2 = parse(r, "x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2").unwrap();
        let piece = CohomologyPiece::new(r, -4);
        assert_eq!(piece.dim(), 1);
        let ann = annihilator_subspace(&[f1, f2], piece, piece.min_level()).unwrap();
        assert_eq!(ann.dim(), 1);
        let full = Subspace::full(piece, piece.min_level()).unwrap();
        assert_eq!(ann.dim(), full.dim());
    }

    #[test]
    fn empty_annihilator_list_gives_the_full_piece() {
        let r = ring(3, 5);
        let piece = CohomologyPiece::new(r, -5);
        let ann = annihilator_subspace(&[], piece, piece.min_level()).unwrap();
        assert_eq!(ann.dim() as u64, piece.dim());
        let classes = ann.classes();
        // Identity coordinates mean the classes are the standard basis.
        let std = piece.std_basis();
        for (a, b) in classes.iter().zip(&std) {
            assert!(a.eq_class(b).unwrap());
        }
    }

    #[test]
    fn degenerate_pieces_are_empty() {
        let r = ring(3, 5);
        for m in [-2i64, -1, 0, 3] {
            let piece = CohomologyPiece::new(r, m);
            assert_eq!(piece.dim(), 0);
            assert!(piece.std_basis().is_empty());
            assert!(piece.monomial_basis(4).is_empty());
        }
    }

    #[test]
    fn level_zero_is_rejected() {
        let r = ring(3, 5);
        assert!(CechClass::new(parse(r, "x0").unwrap(), 0).is_err());
    }
}
