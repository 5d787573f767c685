//! Arithmetic in the coefficient rings Z/l^n for an odd prime l.
//!
//! A [`Modulus`] pins down the ring once (l, the level n, and the value l^n);
//! every [`Residue`] carries a cheap handle to its modulus, so mixed-ring
//! arithmetic is caught instead of silently wrapping at the wrong modulus.
//! Values are arbitrary precision: l = 7, n = 25 works the same as 3^1.
//!
//! The ring is local: a residue is invertible exactly when l does not divide
//! it, and everything else is killed by some power of l. [`Residue::is_unit`],
//! [`Residue::valuation`] and [`Residue::inverse`] expose that structure.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes;

#[derive(Debug)]
struct ModulusRepr {
    ell: u64,
    level: u32,
    value: BigUint,
}

/// The ring Z/l^n for an odd prime l >= 3 and a level n >= 1.
///
/// Clones share one allocation, so passing a `Modulus` around (or storing one
/// per residue) costs a reference count, not a bignum copy.
#[derive(Clone)]
pub struct Modulus(Arc<ModulusRepr>);

impl Modulus {
    /// Builds Z/l^n. Rejects l = 2 (the tame theory needs an odd prime),
    /// composite l, and level 0.
    pub fn new(ell: u64, level: u32) -> Result<Self> {
        if ell < 3 || ell.is_multiple_of(2) {
            return Err(Error::NotOddPrime(ell));
        }
        if !primes::is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        let value = BigUint::from(ell).pow(level);
        Ok(Modulus(Arc::new(ModulusRepr { ell, level, value })))
    }

    pub fn ell(&self) -> u64 {
        self.0.ell
    }

    pub fn level(&self) -> u32 {
        self.0.level
    }

    /// The ring size l^n.
    pub fn value(&self) -> &BigUint {
        &self.0.value
    }

    /// The ring size as u64, when it fits. Enumeration code guards its
    /// budgets before calling this.
    pub fn value_u64(&self) -> Option<u64> {
        self.0.value.to_u64()
    }

    /// Z/l^(n-1), the next ring down the tower.
    pub fn lower(&self) -> Result<Modulus> {
        if self.0.level == 1 {
            return Err(Error::NoLowerLevel);
        }
        Modulus::new(self.0.ell, self.0.level - 1)
    }

    /// The residue of `v`.
    pub fn residue(&self, v: u64) -> Residue {
        self.residue_big(BigUint::from(v))
    }

    /// The residue of an arbitrary-precision integer.
    pub fn residue_big(&self, v: BigUint) -> Residue {
        Residue {
            value: v % &self.0.value,
            modulus: self.clone(),
        }
    }

    /// The residue of a signed integer; negative inputs wrap, so
    /// `residue_signed(-7)` in Z/25 is 18.
    pub fn residue_signed(&self, v: i64) -> Residue {
        let m = BigInt::from(self.0.value.clone());
        let r = BigInt::from(v).mod_floor(&m);
        self.residue_big(r.to_biguint().expect("mod_floor of positive modulus"))
    }

    pub fn zero(&self) -> Residue {
        self.residue_big(BigUint::zero())
    }

    pub fn one(&self) -> Residue {
        self.residue_big(BigUint::one())
    }
}

impl PartialEq for Modulus {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ell == other.0.ell && self.0.level == other.0.level)
    }
}

impl Eq for Modulus {}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.0.ell, self.0.level)
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({}^{})", self.0.ell, self.0.level)
    }
}

/// An element of Z/l^n, stored as its least nonnegative representative.
#[derive(Clone)]
pub struct Residue {
    value: BigUint,
    modulus: Modulus,
}

impl Residue {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// Units of Z/l^n are exactly the residues not divisible by l;
    /// equivalently the residues that survive multiplication by l^(n-1).
    pub fn is_unit(&self) -> bool {
        !(&self.value % self.modulus.ell()).is_zero()
    }

    /// The l-adic valuation, capped at the level: v(0) = n, v(unit) = 0.
    pub fn valuation(&self) -> u32 {
        let ell = BigUint::from(self.modulus.ell());
        let mut v = 0;
        let mut rem = self.value.clone();
        while v < self.modulus.level() {
            if rem.is_zero() {
                return self.modulus.level();
            }
            if !(&rem % &ell).is_zero() {
                break;
            }
            rem /= &ell;
            v += 1;
        }
        v
    }

    /// Multiplicative inverse, defined only for units.
    pub fn inverse(&self) -> Result<Residue> {
        if !self.is_unit() {
            return Err(Error::NotAUnit {
                value: self.value.to_string(),
                modulus: self.modulus.to_string(),
            });
        }
        let a = BigInt::from(self.value.clone());
        let m = BigInt::from(self.modulus.value().clone());
        let eg = a.extended_gcd(&m);
        debug_assert!(eg.gcd.is_one(), "unit with non-trivial gcd");
        let inv = eg.x.mod_floor(&m);
        Ok(self
            .modulus
            .residue_big(inv.to_biguint().expect("mod_floor of positive modulus")))
    }

    /// Exponentiation by squaring (modular the whole way).
    pub fn pow(&self, exp: u64) -> Residue {
        let r = self.value.modpow(&BigUint::from(exp), self.modulus.value());
        self.modulus.residue_big(r)
    }

    /// Image under the reduction map Z/l^n -> Z/l^(n-1). Fails at level 1.
    pub fn reduce_level(&self) -> Result<Residue> {
        let below = self.modulus.lower()?;
        Ok(below.residue_big(self.value.clone()))
    }

    /// Checked addition: errors if the operands live in different rings.
    pub fn try_add(&self, rhs: &Residue) -> Result<Residue> {
        self.check_modulus(rhs)?;
        Ok(self.modulus.residue_big(&self.value + &rhs.value))
    }

    pub fn try_sub(&self, rhs: &Residue) -> Result<Residue> {
        self.check_modulus(rhs)?;
        let m = self.modulus.value();
        Ok(self.modulus.residue_big(&self.value + (m - &rhs.value)))
    }

    pub fn try_mul(&self, rhs: &Residue) -> Result<Residue> {
        self.check_modulus(rhs)?;
        Ok(self.modulus.residue_big(&self.value * &rhs.value))
    }

    fn check_modulus(&self, rhs: &Residue) -> Result<()> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.to_string(),
                right: rhs.modulus.to_string(),
            });
        }
        Ok(())
    }
}

impl PartialEq for Residue {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.value == other.value
    }
}

impl Eq for Residue {}

impl Hash for Residue {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.modulus.ell().hash(state);
        self.modulus.level().hash(state);
        self.value.hash(state);
    }
}

impl PartialOrd for Residue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Residue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.modulus.ell(), self.modulus.level())
            .cmp(&(other.modulus.ell(), other.modulus.level()))
            .then_with(|| self.value.cmp(&other.value))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

// The operators panic on a modulus mismatch. Structured code (matrices,
// projective points) validates moduli once at construction and then uses
// these; code handling loose user input goes through the try_* methods.
macro_rules! residue_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Residue> for &Residue {
            type Output = Residue;
            fn $method(self, rhs: &Residue) -> Residue {
                self.$checked(rhs).expect("residue moduli must agree")
            }
        }

        impl $trait<Residue> for Residue {
            type Output = Residue;
            fn $method(self, rhs: Residue) -> Residue {
                (&self).$method(&rhs)
            }
        }
    };
}

residue_binop!(Add, add, try_add);
residue_binop!(Sub, sub, try_sub);
residue_binop!(Mul, mul, try_mul);

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let m = self.modulus.value();
        self.modulus.residue_big(m - &self.value)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        -&self
    }
}
