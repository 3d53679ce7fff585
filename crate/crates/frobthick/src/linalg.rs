//! Exact linear algebra over prime fields F_p.
//!
//! Everything here is integer arithmetic on residues; there is no floating
//! point anywhere in the crate. Matrices are dense and row-major, which is
//! the right trade-off for the graded pieces this crate works with (hundreds
//! to a few hundred thousand entries).

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A validated prime modulus fitting a machine word.
///
/// Construction runs a deterministic Miller-Rabin test, so holding a
/// `PrimeModulus` is proof that the value is prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    /// Canonical residue of a signed integer.
    pub fn reduce_i64(self, v: i64) -> u64 {
        let m = self.0 as i128;
        let r = (v as i128).rem_euclid(m);
        r as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: a^(p-2).
    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.0) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.0 - 2))
    }
}

impl fmt::Debug for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0)
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set below decides primality for
/// every u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An element of F_p carrying its modulus.
///
/// Arithmetic between scalars of different moduli is a caller bug and panics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Scalar {
    value: u64,
    modulus: PrimeModulus,
}

impl Scalar {
    pub fn new(value: u64, modulus: PrimeModulus) -> Self {
        Scalar { value: value % modulus.get(), modulus }
    }

    pub fn from_i64(value: i64, modulus: PrimeModulus) -> Self {
        Scalar { value: modulus.reduce_i64(value), modulus }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Scalar { value: 0, modulus }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Scalar { value: 1 % modulus.get(), modulus }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Scalar> {
        Ok(Scalar { value: self.modulus.inv(self.value)?, modulus: self.modulus })
    }

    pub fn pow(self, exp: u64) -> Scalar {
        Scalar { value: self.modulus.pow(self.value, exp), modulus: self.modulus }
    }

    fn check(self, other: Scalar) {
        assert!(
            self.modulus == other.modulus,
            "scalar moduli differ: {:?} vs {:?}",
            self.modulus,
            other.modulus
        );
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.check(rhs);
        Scalar { value: self.modulus.add(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.check(rhs);
        Scalar { value: self.modulus.sub(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.check(rhs);
        Scalar { value: self.modulus.mul(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { value: self.modulus.neg(self.value), modulus: self.modulus }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over F_p. Entries are canonical residues.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    modulus: PrimeModulus,
    entries: Vec<u64>,
}

/// Result of row reduction: the reduced matrix, its rank, the pivot columns,
/// and a basis of the right kernel (one column per free variable).
pub struct Rref {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub reduced: FpMatrix,
    pub kernel: FpMatrix,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: PrimeModulus) -> Self {
        FpMatrix { rows, cols, modulus, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, modulus: PrimeModulus) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1 % modulus.get());
        }
        m
    }

    /// Rows given as slices of canonical residues.
    pub fn from_rows(rows: &[Vec<u64>], cols: usize, modulus: PrimeModulus) -> Result<Self> {
        let p = modulus.get();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in a {}-column matrix",
                    r.len(),
                    cols
                )));
            }
            for &v in r {
                entries.push(v % p);
            }
        }
        Ok(FpMatrix { rows: rows.len(), cols, modulus, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v % self.modulus.get();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn mat_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                v.len()
            )));
        }
        let m = self.modulus;
        let mut out = vec![0u64; self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            let row = self.row(r);
            let mut acc = 0u64;
            for (a, b) in row.iter().zip(v) {
                acc = m.add(acc, m.mul(*a, *b));
            }
            *slot = acc;
        }
        Ok(out)
    }

    pub fn mat_mul(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.modulus != rhs.modulus {
            return Err(Error::ShapeMismatch("matrix moduli differ".into()));
        }
        let m = self.modulus;
        let mut out = FpMatrix::zeros(self.rows, rhs.cols, m);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = m.add(out.get(r, c), m.mul(a, rhs.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: u64) {
        let m = self.modulus;
        for c in 0..self.cols {
            let v = m.mul(self.get(r, c), factor);
            self.entries[r * self.cols + c] = v;
        }
    }

    /// row[dst] -= factor * row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, factor: u64) {
        let m = self.modulus;
        for c in 0..self.cols {
            let v = m.sub(self.get(dst, c), m.mul(factor, self.get(src, c)));
            self.entries[dst * self.cols + c] = v;
        }
    }

    /// Reduced row echelon form with first-nonzero pivoting: columns are
    /// processed left to right and the first row with a nonzero entry below
    /// the current pivot row is chosen. Deterministic for a given input.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let modulus = self.modulus;
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(r) = found else { continue };
            m.swap_rows(pivot_row, r);
            let inv = modulus
                .inv(m.get(pivot_row, col))
                .expect("pivot is nonzero by selection");
            m.scale_row(pivot_row, inv);
            for other in 0..m.rows {
                if other != pivot_row {
                    let f = m.get(other, col);
                    if f != 0 {
                        m.add_scaled_row(other, pivot_row, f);
                    }
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let rank = pivot_cols.len();
        let kernel = kernel_from_rref(&m, &pivot_cols);
        Rref { rank, pivot_cols, reduced: m, kernel }
    }

    /// Rank only; avoids building the kernel.
    pub fn rank(&self) -> usize {
        let mut ech = RowEchelon::new(self.cols, self.modulus);
        for r in 0..self.rows {
            ech.insert(self.row(r).to_vec());
        }
        ech.rank()
    }
}

/// Kernel basis read off the reduced form: one column per free column f,
/// with a 1 in position f and -reduced[i][f] in each pivot position.
fn kernel_from_rref(reduced: &FpMatrix, pivot_cols: &[usize]) -> FpMatrix {
    let modulus = reduced.modulus;
    let cols = reduced.cols;
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut kernel = FpMatrix::zeros(cols, free.len(), modulus);
    for (k, &f) in free.iter().enumerate() {
        kernel.set(f, k, 1);
        for (i, &pc) in pivot_cols.iter().enumerate() {
            kernel.set(pc, k, modulus.neg(reduced.get(i, f)));
        }
    }
    kernel
}

/// Incremental row space with normalized pivots, used where generator sets
/// are large and only rank or span membership is needed. Supports early exit
/// when full rank is reached.
pub struct RowEchelon {
    width: usize,
    modulus: PrimeModulus,
    /// Sorted by pivot column; each row is normalized to pivot 1 and reduced
    /// against the others above its pivot only lazily (enough for rank and
    /// membership).
    rows: Vec<(usize, Vec<u64>)>,
}

impl RowEchelon {
    pub fn new(width: usize, modulus: PrimeModulus) -> Self {
        RowEchelon { width, modulus, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Reduces `v` against the current rows in place.
    pub fn reduce(&self, v: &mut [u64]) {
        let m = self.modulus;
        for (pc, row) in &self.rows {
            let f = v[*pc];
            if f != 0 {
                for (x, r) in v.iter_mut().zip(row).skip(*pc) {
                    *x = m.sub(*x, m.mul(f, *r));
                }
            }
        }
    }

    /// Returns true when the vector enlarged the span.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.modulus.inv(v[pc]).expect("leading entry nonzero");
        for x in v.iter_mut() {
            *x = self.modulus.mul(*x, inv);
        }
        let at = self.rows.partition_point(|(c, _)| *c < pc);
        self.rows.insert(at, (pc, v));
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}
