//! Projectivisation of the free module (Z/l^n)^b.
//!
//! The points are the orbits, under the unit group of Z/l^n, of the vectors
//! that survive multiplication by l^(n-1) (equivalently: vectors with at
//! least one unit coordinate). Each orbit contains exactly one vector whose
//! first unit coordinate equals 1; that vector is the canonical
//! representative, and [`ProjPoint`] stores nothing else.
//!
//! Writing `pivot` for the index of that leading 1, a canonical vector looks
//! like
//!
//! ```text
//! (l*a_0, ..., l*a_{pivot-1}, 1, c_{pivot+1}, ..., c_{b-1})
//! ```
//!
//! with the early coordinates divisible by l and the late ones free. Counting
//! these tuples gives the cardinality
//!
//! ```text
//! |P| = (1 + l + ... + l^(b-1)) * l^((b-1)(n-1))
//! ```
//!
//! and also yields a direct enumeration: [`ProjSpace::points`] walks the
//! canonical vectors in increasing (pivot, coordinates) order without ever
//! generating a duplicate, so no sorting or dedup pass happens anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::residue::{Modulus, Residue};

/// Ceiling on how many points an exhaustive enumeration may produce.
/// Cardinalities are exact integers at any size; only walking the points is
/// gated.
pub const ENUMERATION_BUDGET: u64 = 10_000_000;

/// A point of the projectivised module, held as its canonical representative.
///
/// Ordering is by (pivot, coordinates), the same order the enumerator
/// produces, so `enumerate()[k]` is the k-th smallest point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<Residue>,
    pivot: usize,
}

impl ProjPoint {
    /// Canonicalises a coordinate vector: scales by the inverse of the first
    /// unit coordinate. Fails if no coordinate is a unit (the vector is
    /// killed by l^(n-1) and has no image in the projectivisation), if fewer
    /// than two coordinates are given, or if the coordinates live in
    /// different rings.
    pub fn canonicalize(coords: Vec<Residue>) -> Result<ProjPoint> {
        if coords.len() < 2 {
            return Err(Error::RankTooSmall(coords.len() as u32));
        }
        let modulus = coords[0].modulus().clone();
        for c in &coords[1..] {
            if *c.modulus() != modulus {
                return Err(Error::ModulusMismatch {
                    left: modulus.to_string(),
                    right: c.modulus().to_string(),
                });
            }
        }
        let pivot = coords
            .iter()
            .position(Residue::is_unit)
            .ok_or(Error::NotProjectivisable)?;
        let scale = coords[pivot].inverse()?;
        let coords = coords.iter().map(|c| c * &scale).collect::<Vec<_>>();
        debug_assert!(coords[pivot].is_one());
        Ok(ProjPoint { coords, pivot })
    }

    pub fn coords(&self) -> &[Residue] {
        &self.coords
    }

    /// Index of the leading 1 in the canonical representative.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn modulus(&self) -> &Modulus {
        self.coords[0].modulus()
    }

    /// Image under the reduction Z/l^n -> Z/l^(n-1), applied coordinatewise.
    /// The canonical shape survives reduction, so the pivot never moves.
    pub fn reduce_level(&self) -> Result<ProjPoint> {
        let coords = self
            .coords
            .iter()
            .map(Residue::reduce_level)
            .collect::<Result<Vec<_>>>()?;
        ProjPoint::canonicalize(coords)
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pivot
            .cmp(&other.pivot)
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} mod {}", self.modulus())
    }
}

/// The projectivisation of (Z/l^n)^b for a fixed modulus and rank b >= 2.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjSpace {
    modulus: Modulus,
    rank: u32,
}

impl ProjSpace {
    pub fn new(modulus: Modulus, rank: u32) -> Result<ProjSpace> {
        if rank < 2 {
            return Err(Error::RankTooSmall(rank));
        }
        Ok(ProjSpace { modulus, rank })
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Exact point count: (1 + l + ... + l^(b-1)) * l^((b-1)(n-1)).
    pub fn cardinality(&self) -> BigUint {
        let ell = BigUint::from(self.modulus.ell());
        let mut geometric = BigUint::one();
        let mut power = BigUint::one();
        for _ in 1..self.rank {
            power *= &ell;
            geometric += &power;
        }
        let b1 = self.rank - 1;
        let n1 = self.modulus.level() - 1;
        geometric * ell.pow(b1 * n1)
    }

    /// Streaming enumeration in increasing (pivot, coordinates) order.
    /// Refuses spaces larger than [`ENUMERATION_BUDGET`].
    pub fn points(&self) -> Result<Points> {
        let cardinality = self.cardinality();
        if cardinality > BigUint::from(ENUMERATION_BUDGET) {
            return Err(Error::SpaceTooLarge {
                cardinality: cardinality.to_string(),
                budget: ENUMERATION_BUDGET,
            });
        }
        // Cardinality >= (l^n)^(b-1) >= l^n, so the modulus fits u64 here.
        let m = self
            .modulus
            .value_u64()
            .expect("modulus bounded by enumeration budget");
        let rank = self.rank as usize;
        let mut iter = Points {
            modulus: self.modulus.clone(),
            m,
            ell: self.modulus.ell(),
            rank,
            pivot: 0,
            cur: vec![0; rank],
            done: false,
        };
        iter.reset_block();
        Ok(iter)
    }

    /// The whole space as a sorted vector. Same budget as [`Self::points`].
    pub fn enumerate(&self) -> Result<Vec<ProjPoint>> {
        Ok(self.points()?.collect())
    }

    /// Canonicalises an explicit coordinate tuple into a point of this space.
    pub fn point(&self, coords: &[u64]) -> Result<ProjPoint> {
        if coords.len() != self.rank as usize {
            return Err(Error::CoordCountMismatch {
                expected: self.rank as usize,
                got: coords.len(),
            });
        }
        ProjPoint::canonicalize(coords.iter().map(|&v| self.modulus.residue(v)).collect())
    }

    /// The projectivisation one level down, the target of point reduction.
    pub fn lower(&self) -> Result<ProjSpace> {
        ProjSpace::new(self.modulus.lower()?, self.rank)
    }
}

impl fmt::Debug for ProjSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P_{}((Z/{})^{})",
            self.modulus.level(),
            self.modulus,
            self.rank
        )
    }
}

/// Iterator over canonical representatives; see [`ProjSpace::points`].
///
/// For each pivot i in 0..b the canonical vectors form a block: coordinates
/// before i run over multiples of l, coordinate i is pinned to 1, coordinates
/// after i are free. The iterator is an odometer over that block (rightmost
/// coordinate fastest), moving to the next pivot when the block is spent.
pub struct Points {
    modulus: Modulus,
    m: u64,
    ell: u64,
    rank: usize,
    pivot: usize,
    cur: Vec<u64>,
    done: bool,
}

impl Points {
    fn reset_block(&mut self) {
        self.cur.fill(0);
        self.cur[self.pivot] = 1;
    }
}

impl Iterator for Points {
    type Item = ProjPoint;

    fn next(&mut self) -> Option<ProjPoint> {
        if self.done {
            return None;
        }
        let coords = self
            .cur
            .iter()
            .map(|&v| self.modulus.residue(v))
            .collect::<Vec<_>>();
        let out = ProjPoint {
            coords,
            pivot: self.pivot,
        };
        let mut idx = self.rank;
        loop {
            if idx == 0 {
                self.pivot += 1;
                if self.pivot == self.rank {
                    self.done = true;
                } else {
                    self.reset_block();
                }
                break;
            }
            idx -= 1;
            if idx == self.pivot {
                continue;
            }
            let step = if idx < self.pivot { self.ell } else { 1 };
            self.cur[idx] += step;
            if self.cur[idx] < self.m {
                break;
            }
            self.cur[idx] = 0;
        }
        Some(out)
    }
}
