//! The prime field F_p, its quadratic extension F_p^2, and dense univariate
//! polynomials over either.
//!
//! F_p^2 is realised concretely as F_p[w]/(w^2 - d) with d the least
//! quadratic non-residue mod p, so every element is an explicit pair
//! c0 + c1*w and the arithmetic Frobenius x -> x^p is just w -> -w. Elements
//! are Copy and carry their field context, which keeps curve code free of
//! lifetimes while still catching cross-field arithmetic in debug builds.
//!
//! Everything is exhaustive-friendly: fields know how to iterate themselves
//! in a canonical order (by value, and by (c0, c1) in the extension), and
//! [`roots_in`] finds polynomial roots by scanning the whole field under an
//! explicit budget. No randomness, no factoring algorithms.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::primes;

/// Largest field an exhaustive scan (root finding, point counting) accepts.
pub const SCAN_BUDGET: u64 = 1_000_000;

/// Common surface of F_p and F_p^2 elements, enough for polynomial
/// arithmetic over either. Elements carry their field, so the "constructor"
/// methods take a witness element.
pub trait FieldElem:
    Copy
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(self) -> Self;
    fn one_like(self) -> Self;
    /// The image of an ordinary integer in this field.
    fn embed_u64(self, k: u64) -> Self;
    fn is_zero(self) -> bool;
    fn inverse(self) -> Result<Self>;
}

/// Fields small enough to walk element by element, in a canonical order.
pub trait FiniteField {
    type Elem: FieldElem;
    fn size(&self) -> u64;
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_>;
}

/// The prime field F_p for an odd prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::NotOddPrime(p));
        }
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> PrimeFieldElem {
        PrimeFieldElem {
            value: v % self.p,
            p: self.p,
        }
    }

    pub fn elem_signed(&self, v: i64) -> PrimeFieldElem {
        let p = self.p as i64;
        self.elem(v.rem_euclid(p) as u64)
    }

    pub fn zero(&self) -> PrimeFieldElem {
        self.elem(0)
    }

    pub fn one(&self) -> PrimeFieldElem {
        self.elem(1)
    }

    /// The least quadratic non-residue, the d used to present F_p^2.
    pub fn least_non_residue(&self) -> PrimeFieldElem {
        (2..self.p)
            .map(|v| self.elem(v))
            .find(|e| !e.is_square())
            .expect("every odd prime field has a non-residue >= 2")
    }
}

impl FiniteField for PrimeField {
    type Elem = PrimeFieldElem;

    fn size(&self) -> u64 {
        self.p
    }

    fn elements(&self) -> Box<dyn Iterator<Item = PrimeFieldElem> + '_> {
        Box::new((0..self.p).map(|v| self.elem(v)))
    }
}

/// An element of F_p, reduced to 0 <= value < p.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    value: u64,
    p: u64,
}

impl PrimeFieldElem {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn pow(self, mut e: u64) -> PrimeFieldElem {
        let mut base = self;
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(self) -> bool {
        self.is_zero() || self.pow((self.p - 1) / 2).value == 1
    }
}

impl FieldElem for PrimeFieldElem {
    fn zero_like(self) -> Self {
        PrimeFieldElem {
            value: 0,
            p: self.p,
        }
    }

    fn one_like(self) -> Self {
        PrimeFieldElem {
            value: 1,
            p: self.p,
        }
    }

    fn embed_u64(self, k: u64) -> Self {
        PrimeFieldElem {
            value: k % self.p,
            p: self.p,
        }
    }

    fn is_zero(self) -> bool {
        self.value == 0
    }

    /// By Fermat: a^(p-2). Zero has no inverse.
    fn inverse(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.p - 2))
    }
}

impl PartialOrd for PrimeFieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PrimeFieldElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.p, self.value).cmp(&(other.p, other.value))
    }
}

impl Add for PrimeFieldElem {
    type Output = PrimeFieldElem;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p, "elements of different prime fields");
        PrimeFieldElem {
            value: ((u128::from(self.value) + u128::from(rhs.value)) % u128::from(self.p)) as u64,
            p: self.p,
        }
    }
}

impl Sub for PrimeFieldElem {
    type Output = PrimeFieldElem;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for PrimeFieldElem {
    type Output = PrimeFieldElem;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p, "elements of different prime fields");
        PrimeFieldElem {
            value: ((u128::from(self.value) * u128::from(rhs.value)) % u128::from(self.p)) as u64,
            p: self.p,
        }
    }
}

impl Neg for PrimeFieldElem {
    type Output = PrimeFieldElem;
    fn neg(self) -> Self {
        PrimeFieldElem {
            value: if self.value == 0 {
                0
            } else {
                self.p - self.value
            },
            p: self.p,
        }
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in F_{}", self.value, self.p)
    }
}

/// F_p^2 presented as F_p[w]/(w^2 - d), d the least non-residue mod p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadExtField {
    base: PrimeField,
    d: u64,
}

impl QuadExtField {
    /// Requires p odd prime and p^2 within u64 range (the Euler exponent
    /// (p^2-1)/2 must be exact).
    pub fn new(p: u64) -> Result<QuadExtField> {
        let base = PrimeField::new(p)?;
        if p >= 1 << 32 {
            return Err(Error::Overflow(format!("p^2 for p = {p}")));
        }
        let d = base.least_non_residue().value();
        Ok(QuadExtField { base, d })
    }

    pub fn p(&self) -> u64 {
        self.base.p()
    }

    /// The chosen non-residue: w^2 = d.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn elem(&self, c0: u64, c1: u64) -> QuadExtElem {
        QuadExtElem {
            c0: self.base.elem(c0),
            c1: self.base.elem(c1),
            d: self.d,
        }
    }

    pub fn embed(&self, a: PrimeFieldElem) -> QuadExtElem {
        debug_assert_eq!(a.p(), self.p(), "embedding from the wrong prime field");
        QuadExtElem {
            c0: a,
            c1: self.base.zero(),
            d: self.d,
        }
    }

    pub fn w(&self) -> QuadExtElem {
        self.elem(0, 1)
    }

    pub fn zero(&self) -> QuadExtElem {
        self.elem(0, 0)
    }

    pub fn one(&self) -> QuadExtElem {
        self.elem(1, 0)
    }

    /// Parses the text encoding: `"c0"` or `"c0+c1*w"`, plain decimal digits
    /// with 0 <= ci < p. Exactly inverse to the `Display` form.
    pub fn parse_elem(&self, input: &str) -> Result<QuadExtElem> {
        let bad = || Error::ParseElem {
            input: input.to_string(),
        };
        let parse_part = |s: &str| -> Result<u64> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || s.len() > 19 {
                return Err(bad());
            }
            let v: u64 = s.parse().map_err(|_| bad())?;
            if v >= self.p() {
                return Err(bad());
            }
            Ok(v)
        };
        match input.split_once('+') {
            None => Ok(self.embed(self.base.elem(parse_part(input)?))),
            Some((c0, rest)) => {
                let c1 = rest.strip_suffix("*w").ok_or_else(bad)?;
                Ok(self.elem(parse_part(c0)?, parse_part(c1)?))
            }
        }
    }

    /// Lifts a polynomial over F_p coefficientwise.
    pub fn lift_poly(&self, f: &Poly<PrimeFieldElem>) -> Poly<QuadExtElem> {
        Poly::new(f.coeffs().iter().map(|&c| self.embed(c)).collect())
    }
}

impl FiniteField for QuadExtField {
    type Elem = QuadExtElem;

    fn size(&self) -> u64 {
        self.p() * self.p()
    }

    /// Ascending by (c0, c1).
    fn elements(&self) -> Box<dyn Iterator<Item = QuadExtElem> + '_> {
        let p = self.p();
        Box::new((0..p).flat_map(move |c0| (0..p).map(move |c1| self.elem(c0, c1))))
    }
}

/// c0 + c1*w in F_p^2, with w^2 = d.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadExtElem {
    c0: PrimeFieldElem,
    c1: PrimeFieldElem,
    d: u64,
}

impl QuadExtElem {
    pub fn c0(self) -> PrimeFieldElem {
        self.c0
    }

    pub fn c1(self) -> PrimeFieldElem {
        self.c1
    }

    pub fn p(self) -> u64 {
        self.c0.p()
    }

    /// Lies in the prime subfield, i.e. is fixed by Frobenius.
    pub fn in_prime_field(self) -> bool {
        self.c1.is_zero()
    }

    /// The arithmetic Frobenius x -> x^p. Since d is a non-residue,
    /// w^p = d^((p-1)/2) * w = -w, so conjugation just flips c1.
    pub fn frobenius(self) -> QuadExtElem {
        QuadExtElem {
            c0: self.c0,
            c1: -self.c1,
            d: self.d,
        }
    }

    /// The norm to F_p: z * frobenius(z) = c0^2 - d*c1^2.
    pub fn norm(self) -> PrimeFieldElem {
        self.c0 * self.c0 - self.c0.embed_u64(self.d) * self.c1 * self.c1
    }

    pub fn pow(self, mut e: u64) -> QuadExtElem {
        let mut base = self;
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// Euler's criterion in F_q, q = p^2; zero counts as a square.
    pub fn is_square(self) -> bool {
        if self.is_zero() {
            return true;
        }
        let q = self.p() * self.p();
        self.pow((q - 1) / 2) == self.one_like()
    }
}

impl FieldElem for QuadExtElem {
    fn zero_like(self) -> Self {
        QuadExtElem {
            c0: self.c0.zero_like(),
            c1: self.c1.zero_like(),
            d: self.d,
        }
    }

    fn one_like(self) -> Self {
        QuadExtElem {
            c0: self.c0.one_like(),
            c1: self.c1.zero_like(),
            d: self.d,
        }
    }

    fn embed_u64(self, k: u64) -> Self {
        QuadExtElem {
            c0: self.c0.embed_u64(k),
            c1: self.c1.zero_like(),
            d: self.d,
        }
    }

    fn is_zero(self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// 1/z = frobenius(z) / norm(z); the norm of a nonzero element is a
    /// nonzero element of F_p.
    fn inverse(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n_inv = self.norm().inverse()?;
        let conj = self.frobenius();
        Ok(QuadExtElem {
            c0: conj.c0 * n_inv,
            c1: conj.c1 * n_inv,
            d: self.d,
        })
    }
}

impl PartialOrd for QuadExtElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExtElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.c0, self.c1).cmp(&(other.c0, other.c1))
    }
}

impl Add for QuadExtElem {
    type Output = QuadExtElem;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.d, rhs.d, "elements of different extensions");
        QuadExtElem {
            c0: self.c0 + rhs.c0,
            c1: self.c1 + rhs.c1,
            d: self.d,
        }
    }
}

impl Sub for QuadExtElem {
    type Output = QuadExtElem;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for QuadExtElem {
    type Output = QuadExtElem;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.d, rhs.d, "elements of different extensions");
        let d = self.c0.embed_u64(self.d);
        QuadExtElem {
            c0: self.c0 * rhs.c0 + d * self.c1 * rhs.c1,
            c1: self.c0 * rhs.c1 + self.c1 * rhs.c0,
            d: self.d,
        }
    }
}

impl Neg for QuadExtElem {
    type Output = QuadExtElem;
    fn neg(self) -> Self {
        QuadExtElem {
            c0: -self.c0,
            c1: -self.c1,
            d: self.d,
        }
    }
}

impl fmt::Display for QuadExtElem {
    /// `"c0"` for prime-subfield elements, `"c0+c1*w"` otherwise; the exact
    /// encoding [`QuadExtField::parse_elem`] reads back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{}+{}*w", self.c0, self.c1)
        }
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in F_{}^2", self.p())
    }
}

/// Dense polynomial, coefficients low to high, no trailing zeros. The empty
/// vector is the zero polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T: FieldElem> {
    coeffs: Vec<T>,
}

impl<T: FieldElem> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Poly<T> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<T> {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<T> {
        self.coeffs.last().copied()
    }

    /// Horner evaluation; the zero polynomial evaluates to x's zero.
    pub fn eval(&self, x: T) -> T {
        let mut acc = x.zero_like();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative; the integer factors land in the field, so this is
    /// characteristic-aware (d/dt of t^p is 0 over F_p).
    pub fn derivative(&self) -> Poly<T> {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * c.embed_u64(i as u64 + 1))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (&self.coeffs, &rhs.coeffs)
        } else {
            (&rhs.coeffs, &self.coeffs)
        };
        let mut out = long.clone();
        for (i, &c) in short.iter().enumerate() {
            out[i] = out[i] + c;
        }
        Poly::new(out)
    }

    pub fn mul(&self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }

    /// Long division by a nonzero divisor: (quotient, remainder) with
    /// deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Poly<T>) -> Result<(Poly<T>, Poly<T>)> {
        let Some(dlead) = divisor.lead() else {
            return Err(Error::ZeroPolynomial);
        };
        let dinv = dlead.inverse()?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Poly::zero(), Poly::new(rem)));
        }
        let zero = dlead.zero_like();
        let mut quot = vec![zero; rem.len() - ddeg];
        for k in (ddeg..rem.len()).rev() {
            let factor = rem[k] * dinv;
            quot[k - ddeg] = factor;
            if factor.is_zero() {
                continue;
            }
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k - ddeg + j] = rem[k - ddeg + j] - factor * dc;
            }
        }
        rem.truncate(ddeg);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic gcd by Euclid's algorithm. Defined unless both inputs are zero.
    pub fn gcd(&self, rhs: &Poly<T>) -> Result<Poly<T>> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        let lead_inv = a.lead().expect("nonzero by loop invariant").inverse()?;
        Ok(Poly::new(a.coeffs.iter().map(|&c| c * lead_inv).collect()))
    }

    /// Separable means no repeated roots in any extension: gcd(f, f') is
    /// constant. The zero polynomial is rejected.
    pub fn is_separable(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.degree() == Some(0))
    }
}

impl<T: FieldElem> fmt::Display for Poly<T> {
    /// Sparse, high degree first: `t^3 + 2*t^2 + 2*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = i == 0 || c != c.one_like();
            if show_coeff {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{}", if show_coeff { "*" } else { "" }, i)?,
            }
        }
        Ok(())
    }
}

impl<T: FieldElem> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// All roots of f in the given field, ascending in the field's canonical
/// order, found by exhaustive scan. Rejects the zero polynomial (everything
/// would be a root) and fields over [`SCAN_BUDGET`].
pub fn roots_in<F: FiniteField>(f: &Poly<F::Elem>, field: &F) -> Result<Vec<F::Elem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if field.size() > SCAN_BUDGET {
        return Err(Error::FieldTooLarge {
            size: field.size(),
            budget: SCAN_BUDGET,
        });
    }
    Ok(field.elements().filter(|&x| f.eval(x).is_zero()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn prime_field_validation() {
        assert!(matches!(PrimeField::new(2), Err(Error::NotOddPrime(2))));
        assert!(matches!(PrimeField::new(9), Err(Error::NotPrime(9))));
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(65537).is_ok());
    }

    #[test]
    fn arithmetic_in_f7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.elem(3) + f.elem(5), f.elem(1));
        assert_eq!(f.elem(3) * f.elem(5), f.elem(1));
        assert_eq!(f.elem(3) - f.elem(5), f.elem(5));
        assert_eq!(-f.elem(3), f.elem(4));
        assert_eq!(f.elem(3).inverse().unwrap(), f.elem(5));
        assert_eq!(f.elem_signed(-1), f.elem(6));
        assert!(matches!(f.zero().inverse(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn inverses_exhaustive_small_primes() {
        for p in [3u64, 5, 7, 11, 97] {
            let f = PrimeField::new(p).unwrap();
            for v in 1..p {
                let e = f.elem(v);
                assert_eq!(e * e.inverse().unwrap(), f.one(), "p={p} v={v}");
            }
        }
    }

    #[test]
    fn squares_match_exhaustive_squaring() {
        for p in [5u64, 7, 13, 31] {
            let f = PrimeField::new(p).unwrap();
            let squares: BTreeSet<u64> = (0..p).map(|v| (f.elem(v) * f.elem(v)).value()).collect();
            for v in 0..p {
                assert_eq!(f.elem(v).is_square(), squares.contains(&v), "p={p} v={v}");
            }
        }
    }

    #[test]
    fn least_non_residues() {
        // 2 is a QR mod 7 (3^2 = 2) but not mod 5; 3 is the least for p = 7.
        assert_eq!(PrimeField::new(5).unwrap().least_non_residue().value(), 2);
        assert_eq!(PrimeField::new(7).unwrap().least_non_residue().value(), 3);
        assert_eq!(PrimeField::new(13).unwrap().least_non_residue().value(), 2);
    }

    #[test]
    fn quad_ext_construction() {
        let k = QuadExtField::new(7).unwrap();
        assert_eq!(k.p(), 7);
        assert_eq!(k.d(), 3);
        assert_eq!(k.size(), 49);
        let w = k.w();
        assert_eq!(w * w, k.elem(3, 0));
    }

    #[test]
    fn quad_ext_arithmetic_known_values() {
        let k = QuadExtField::new(5).unwrap();
        // (6+3w) reduces to (1+3w); its square is 54 + 36w = 4 + w mod 5.
        let z = k.elem(6 % 5, 3);
        assert_eq!(z * z, k.elem(4, 1));
        let k7 = QuadExtField::new(7).unwrap();
        // (6+3w)^2 = 36 + 27 + 36w = 63 + 36w = 0 + w: w is a square in F_49.
        let y = k7.elem(6, 3);
        assert_eq!(y * y, k7.w());
    }

    #[test]
    fn frobenius_is_the_p_power_map() {
        for p in [5u64, 7, 13] {
            let k = QuadExtField::new(p).unwrap();
            for z in k.elements() {
                assert_eq!(z.frobenius(), z.pow(p), "p={p} z={z}");
                assert_eq!(z.frobenius().frobenius(), z);
                assert_eq!(z.frobenius() == z, z.in_prime_field());
            }
        }
    }

    #[test]
    fn norms_are_multiplicative_and_land_in_f_p() {
        let k = QuadExtField::new(7).unwrap();
        for z in k.elements() {
            let viaconj = z * z.frobenius();
            assert!(viaconj.in_prime_field());
            assert_eq!(viaconj.c0(), z.norm());
        }
        let a = k.elem(2, 5);
        let b = k.elem(6, 1);
        assert_eq!((a * b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn quad_ext_inverses_exhaustive() {
        let k = QuadExtField::new(7).unwrap();
        for z in k.elements() {
            if z.is_zero() {
                assert!(matches!(z.inverse(), Err(Error::DivisionByZero)));
            } else {
                assert_eq!(z * z.inverse().unwrap(), k.one());
            }
        }
    }

    #[test]
    fn quad_ext_squares_match_exhaustive_squaring() {
        for p in [5u64, 7, 13] {
            let k = QuadExtField::new(p).unwrap();
            let squares: BTreeSet<QuadExtElem> = k.elements().map(|z| z * z).collect();
            for z in k.elements() {
                assert_eq!(z.is_square(), squares.contains(&z), "p={p} z={z}");
            }
            // In particular w itself: d is a non-square in F_p but becomes
            // a square in F_p^2 exactly when (q-1)/2 kills it.
            let w = k.w();
            assert_eq!(w.is_square(), squares.contains(&w));
        }
        // Concrete witness in F_49: (6+3w)^2 = w.
        let k7 = QuadExtField::new(7).unwrap();
        assert!(k7.w().is_square());
    }

    #[test]
    fn element_text_round_trips() {
        let k = QuadExtField::new(7).unwrap();
        for z in k.elements() {
            assert_eq!(k.parse_elem(&z.to_string()).unwrap(), z);
        }
        assert_eq!(k.parse_elem("6").unwrap(), k.elem(6, 0));
        assert_eq!(k.parse_elem("3+2*w").unwrap(), k.elem(3, 2));
        assert_eq!(k.elem(0, 1).to_string(), "0+1*w");
        for bad in [
            "", "7", "3+7*w", "w", "1+w", "-1", "3+2w", "3 + 2*w", "1+2*w+3", "++",
        ] {
            assert!(k.parse_elem(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn element_order_is_by_coordinate_pair() {
        let k = QuadExtField::new(5).unwrap();
        let all: Vec<QuadExtElem> = k.elements().collect();
        assert_eq!(all.len(), 25);
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(all[0], k.zero());
        assert_eq!(all[1], k.w());
        assert_eq!(all[5], k.one());
    }

    #[test]
    fn poly_eval_and_display() {
        let f = PrimeField::new(7).unwrap();
        let h = Poly::new(vec![f.elem(1), f.elem(2), f.elem(2), f.elem(1)]);
        assert_eq!(h.to_string(), "t^3 + 2*t^2 + 2*t + 1");
        assert_eq!(h.degree(), Some(3));
        assert_eq!(h.eval(f.elem(2)), f.zero());
        assert_eq!(h.eval(f.elem(1)), f.elem(6));
        assert_eq!(Poly::<PrimeFieldElem>::zero().eval(f.elem(3)), f.zero());
        assert_eq!(Poly::<PrimeFieldElem>::zero().to_string(), "0");
    }

    #[test]
    fn poly_trims_trailing_zeros() {
        let f = PrimeField::new(5).unwrap();
        let p = Poly::new(vec![f.elem(1), f.elem(0), f.elem(0)]);
        assert_eq!(p.degree(), Some(0));
        let z = Poly::new(vec![f.elem(0), f.elem(0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn division_property_over_f13() {
        let f = PrimeField::new(13).unwrap();
        let mk = |cs: &[u64]| Poly::new(cs.iter().map(|&c| f.elem(c)).collect());
        let cases = [
            (vec![1u64, 0, 3, 7, 1], vec![2u64, 1]),
            (vec![5, 12, 0, 0, 0, 1], vec![1, 0, 1]),
            (vec![3], vec![1, 1, 1, 1]),
            (vec![0, 0, 0, 0, 0, 0, 1], vec![12, 1]),
        ];
        for (fc, dc) in cases {
            let a = mk(&fc);
            let d = mk(&dc);
            let (q, r) = a.div_rem(&d).unwrap();
            assert_eq!(q.mul(&d).add(&r), a);
            assert!(r.degree().is_none_or(|rd| rd < d.degree().unwrap()));
        }
        assert!(matches!(
            mk(&[1, 2]).div_rem(&Poly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn hasse_like_cubic_factors_and_roots() {
        // t^3 + 2t^2 + 2t + 1 = (t - 2)(t - 4)(t - 6) over F_7.
        let f = PrimeField::new(7).unwrap();
        let h = Poly::new(vec![f.elem(1), f.elem(2), f.elem(2), f.elem(1)]);
        let roots = roots_in(&h, &f).unwrap();
        assert_eq!(
            roots.iter().map(|r| r.value()).collect::<Vec<_>>(),
            [2, 4, 6]
        );
        assert!(h.is_separable().unwrap());
    }

    #[test]
    fn separability_detects_repeated_and_inseparable_factors() {
        let f = PrimeField::new(7).unwrap();
        let mk = |cs: &[i64]| Poly::new(cs.iter().map(|&c| f.elem_signed(c)).collect());
        // (t - 1)^2 = t^2 - 2t + 1.
        assert!(!mk(&[1, -2, 1]).is_separable().unwrap());
        // t^7 - 1 = (t - 1)^7 over F_7; derivative vanishes identically.
        let frob_minus_one = mk(&[-1, 0, 0, 0, 0, 0, 0, 1]);
        assert!(frob_minus_one.derivative().is_zero());
        assert!(!frob_minus_one.is_separable().unwrap());
        assert!(mk(&[1, 1]).is_separable().unwrap());
        assert!(matches!(
            Poly::<PrimeFieldElem>::zero().is_separable(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn gcd_known_factor() {
        let f = PrimeField::new(7).unwrap();
        let mk = |cs: &[i64]| Poly::new(cs.iter().map(|&c| f.elem_signed(c)).collect());
        // gcd((t-2)(t-4)(t-6), (t-2)(t-3)) = t - 2, monic.
        let a = mk(&[1, 2, 2, 1]);
        let b = mk(&[6, -5, 1]);
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, mk(&[-2, 1]));
        assert!(matches!(
            Poly::<PrimeFieldElem>::zero().gcd(&Poly::zero()),
            Err(Error::ZeroPolynomial)
        ));
        // gcd with zero is the monic normalisation of the other side.
        let g2 = mk(&[2, 4]).gcd(&Poly::zero()).unwrap();
        assert_eq!(g2, mk(&[4, 1]));
    }

    #[test]
    fn roots_in_extension_field() {
        // t^2 - d has no roots in F_p but two in F_p^2, namely +-w.
        let f = PrimeField::new(5).unwrap();
        let k = QuadExtField::new(5).unwrap();
        let t2_minus_d = Poly::new(vec![f.elem_signed(-(k.d() as i64)), f.zero(), f.one()]);
        assert!(roots_in(&t2_minus_d, &f).unwrap().is_empty());
        let lifted = k.lift_poly(&t2_minus_d);
        let roots = roots_in(&lifted, &k).unwrap();
        assert_eq!(roots, vec![k.w(), k.elem(0, 4)]);
    }

    #[test]
    fn root_scan_budget() {
        let k = QuadExtField::new(1009).unwrap();
        let f = Poly::new(vec![k.one(), k.one()]);
        assert!(matches!(
            roots_in(&f, &k),
            Err(Error::FieldTooLarge { size: 1018081, .. })
        ));
        assert!(matches!(
            roots_in(&Poly::<QuadExtElem>::zero(), &QuadExtField::new(5).unwrap()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn derivative_known_values() {
        let f = PrimeField::new(5).unwrap();
        // d/dt (t^4 + 3t^2 + 2t + 1) = 4t^3 + 6t + 2 = 4t^3 + t + 2.
        let p = Poly::new(vec![f.elem(1), f.elem(2), f.elem(3), f.elem(0), f.elem(1)]);
        let dp = p.derivative();
        assert_eq!(
            dp,
            Poly::new(vec![f.elem(2), f.elem(1), f.elem(0), f.elem(4)])
        );
        // d/dt (t^5) = 5 t^4 = 0 over F_5.
        let t5 = Poly::new(vec![
            f.zero(),
            f.zero(),
            f.zero(),
            f.zero(),
            f.zero(),
            f.one(),
        ]);
        assert!(t5.derivative().is_zero());
    }
}
