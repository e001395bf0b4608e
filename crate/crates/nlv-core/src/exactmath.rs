//! Exact arithmetic over rationals and Gaussian rationals, plus the dense
//! rational matrix kernel (RREF, rank, nullspace) everything downstream
//! builds on.
//!
//! Every verdict-bearing computation in this crate runs on these types;
//! floating point never enters (the test suites use an SVD oracle for
//! cross-checking, but that lives in test code only).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always held in canonical form
/// (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Error raised when a rational string does not match
/// `-?[0-9]+(/[1-9][0-9]*)?`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    pub input: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal `{}`", self.input)
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<BigInt>().ok()
}

/// Parses the text form `-?[0-9]+(/[1-9][0-9]*)?`, e.g. `-3/2` or `7`.
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError {
        input: String::from(input),
    };
    let (num_str, den_str) = match input.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (input, None),
    };
    let unsigned = num_str.strip_prefix('-').unwrap_or(num_str);
    let mut numer = parse_digits(unsigned).ok_or_else(err)?;
    if num_str.starts_with('-') {
        numer = -numer;
    }
    let denom = match den_str {
        Some(d) => {
            if !d.starts_with(|c: char| ('1'..='9').contains(&c)) {
                return Err(err());
            }
            parse_digits(d).ok_or_else(err)?
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(numer, denom))
}

/// Renders a rational in the same text form `parse_rational` accepts.
pub fn format_rational(value: &Rational) -> String {
    use alloc::format;
    if value.denom().is_one() {
        format!("{}", value.numer())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// A complex number with rational real and imaginary parts.
///
/// Gaussian rationals are closed under all arithmetic used here, so inner
/// products, constraint coefficients and branch probabilities stay exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 = re^2 + im^2, a nonnegative rational, zero iff z = 0.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GaussianRational {
            re: &self.re * c,
            im: &self.im * c,
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rational(&self.re))
        } else {
            write!(
                f,
                "({},{})",
                format_rational(&self.re),
                format_rational(&self.im)
            )
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.iter_rows()
            .map(|row| {
                let mut acc = Rational::zero();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// True when `m * v = 0` exactly.
    pub fn annihilates(&self, v: &[Rational]) -> bool {
        self.mul_vec(v).iter().all(Rational::is_zero)
    }

    /// Exact reduced row echelon form together with the ascending list of
    /// pivot columns. The RREF of a matrix is unique, so the output is
    /// deterministic regardless of pivoting strategy.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut data: Vec<Vec<Rational>> = self.iter_rows().map(|r| r.to_vec()).collect();
        let pivots = rref_in_place(&mut data, self.cols);
        let reduced = if data.is_empty() {
            RationalMatrix::zeros(self.rows, self.cols)
        } else {
            RationalMatrix::from_rows(data)
        };
        (reduced, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut data: Vec<Vec<Rational>> = self.iter_rows().map(|r| r.to_vec()).collect();
        rref_in_place(&mut data, self.cols).len()
    }

    /// Canonical free-variable basis of the nullspace: one vector per
    /// non-pivot column `f`, with entry 1 at `f` and `-rref[r][f]` at each
    /// pivot column. Returns exactly `cols - rank` vectors.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        // Duplicate and all-zero rows do not change the row space, so they
        // are dropped up front; elimination on the big constraint systems
        // gets much cheaper.
        let mut uniq: Vec<Vec<Rational>> = Vec::new();
        for row in self.iter_rows() {
            if row.iter().all(Rational::is_zero) {
                continue;
            }
            if !uniq.iter().any(|u| u.as_slice() == row) {
                uniq.push(row.to_vec());
            }
        }
        let pivots = rref_in_place(&mut uniq, self.cols);
        nullspace_from_rref(&uniq, self.cols, &pivots)
    }
}

/// In-place RREF over `cols` columns; returns pivot columns ascending.
fn rref_in_place(data: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let nrows = data.len();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row >= nrows {
            break;
        }
        let Some(sel) = (pivot_row..nrows).find(|&r| !data[r][col].is_zero()) else {
            continue;
        };
        data.swap(pivot_row, sel);
        let inv = data[pivot_row][col].clone();
        if !inv.is_one() {
            for v in data[pivot_row].iter_mut().skip(col) {
                if !v.is_zero() {
                    *v /= &inv;
                }
            }
        }
        // Nonzero columns of the pivot row; row updates below touch only these.
        let support: Vec<usize> = (col..cols)
            .filter(|&c| !data[pivot_row][c].is_zero())
            .collect();
        for r in 0..nrows {
            if r == pivot_row || data[r][col].is_zero() {
                continue;
            }
            let factor = core::mem::replace(&mut data[r][col], Rational::zero());
            for &c in &support[1..] {
                let delta = &factor * &data[pivot_row][c];
                data[r][c] -= delta;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

fn nullspace_from_rref(
    rref: &[Vec<Rational>],
    cols: usize,
    pivots: &[usize],
) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::with_capacity(cols - pivots.len());
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            if !rref[row][free].is_zero() {
                v[pc] = -rref[row][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(v: &Rational) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["-3/2", "7", "0", "12/35", "-1"] {
            let v = parse_rational(s).unwrap();
            assert_eq!(format_rational(&v), s);
        }
        // canonicalization happens on parse
        assert_eq!(format_rational(&parse_rational("4/8").unwrap()), "1/2");
    }

    #[test]
    fn parse_rejects_bad_forms() {
        for s in [
            "", "/2", "3/", "3/0", "3/02", "1/-2", "+3", "a", "1.5", "3 /2", "--1",
        ] {
            assert!(parse_rational(s).is_err(), "accepted `{s}`");
        }
    }

    #[test]
    fn gaussian_conj_and_norm() {
        let z = GaussianRational::new(ratio(3, 2), rat(-2));
        assert_eq!(z.conj().conj(), z);
        assert_eq!(z.norm_sqr(), ratio(9, 4) + rat(4));
        assert!(GaussianRational::zero().norm_sqr().is_zero());
    }

    #[test]
    fn rref_identity_is_fixed_point() {
        let id = RationalMatrix::identity(2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = m(&[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, m(&[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_idempotent() {
        let a = m(&[&[2, 4, 1], &[0, 3, 5], &[2, 7, 6]]);
        let (r1, p1) = a.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        assert!(RationalMatrix::identity(3).nullspace_basis().is_empty());
    }

    #[test]
    fn nullspace_of_zero_matrix_is_standard_basis() {
        let basis = RationalMatrix::zeros(1, 3).nullspace_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn empty_matrix_is_harmless() {
        let e = RationalMatrix::zeros(0, 0);
        let (r, p) = e.rref();
        assert_eq!(r.rows(), 0);
        assert!(p.is_empty());
        assert!(e.nullspace_basis().is_empty());
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_annihilated(
            rows in proptest::collection::vec(
                proptest::collection::vec(-4i64..=4, 5), 1..6)
        ) {
            let a = RationalMatrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect());
            let basis = a.nullspace_basis();
            prop_assert_eq!(a.rank() + basis.len(), a.cols());
            for v in &basis {
                prop_assert!(a.annihilates(v));
            }
        }

        #[test]
        fn exact_addition_round_trips(n1 in -50i64..50, d1 in 1i64..20, n2 in -50i64..50, d2 in 1i64..20) {
            let a = ratio(n1, d1);
            let b = ratio(n2, d2);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
