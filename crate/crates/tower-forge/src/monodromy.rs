//! Monodromy action on projectivised torsion: invertible matrices over
//! Z/l^n, their orbit decomposition on [`ProjSpace`], and the closed-form
//! orbit census for the standard unipotent generator at even levels.
//!
//! Orbit lengths are what feed the Hurwitz formula downstream: an orbit of
//! length e is a point of ramification index e in the corresponding covering,
//! so everything here reports multisets of orbit lengths
//! ([`OrbitTypeSummary`]).

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::primes;
use crate::projective::{ProjPoint, ProjSpace, ENUMERATION_BUDGET};
use crate::residue::{Modulus, Residue};

/// An element of GL_b(Z/l^n), stored row-major. Construction enforces a unit
/// determinant, so every value of this type acts invertibly on points.
#[derive(Clone, PartialEq, Eq)]
pub struct MonodromyMatrix {
    modulus: Modulus,
    dim: usize,
    entries: Vec<Residue>,
}

impl MonodromyMatrix {
    pub fn new(modulus: Modulus, dim: usize, entries: Vec<Residue>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimTooSmall(dim));
        }
        if entries.len() != dim * dim {
            return Err(Error::NotSquare {
                dim,
                len: entries.len(),
            });
        }
        for e in &entries {
            if *e.modulus() != modulus {
                return Err(Error::ModulusMismatch {
                    left: modulus.to_string(),
                    right: e.modulus().to_string(),
                });
            }
        }
        let m = MonodromyMatrix {
            modulus,
            dim,
            entries,
        };
        let det = m.det();
        if !det.is_unit() {
            return Err(Error::SingularMatrix {
                det: det.to_string(),
            });
        }
        Ok(m)
    }

    /// Builds from signed integers, row-major; negatives wrap mod l^n.
    pub fn from_values(modulus: &Modulus, dim: usize, values: &[i64]) -> Result<Self> {
        let entries = values.iter().map(|&v| modulus.residue_signed(v)).collect();
        MonodromyMatrix::new(modulus.clone(), dim, entries)
    }

    /// The tame monodromy generator of the Legendre family on 2-dimensional
    /// torsion: [[1, 2], [0, 1]].
    pub fn legendre(modulus: &Modulus) -> Self {
        MonodromyMatrix::from_values(modulus, 2, &[1, 2, 0, 1])
            .expect("unipotent matrix is invertible")
    }

    /// Parses the text form used on the command line: the name `legendre`,
    /// or a row-major comma list like `1,2,0,1` whose length is a perfect
    /// square. Entries may be negative; they wrap mod l^n.
    pub fn parse(modulus: &Modulus, input: &str) -> Result<Self> {
        if input == "legendre" {
            return Ok(MonodromyMatrix::legendre(modulus));
        }
        let values: Vec<i64> = input
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::ParseMatrix {
                input: input.to_string(),
            })?;
        let dim = values.len().isqrt();
        if dim * dim != values.len() {
            return Err(Error::NotSquare {
                dim,
                len: values.len(),
            });
        }
        MonodromyMatrix::from_values(modulus, dim, &values)
    }

    pub fn identity(modulus: &Modulus, dim: usize) -> Result<Self> {
        let mut values = vec![0i64; dim * dim];
        for i in 0..dim {
            values[i * dim + i] = 1;
        }
        MonodromyMatrix::from_values(modulus, dim, &values)
    }

    /// c times the identity; requires c to be a unit.
    pub fn scalar(modulus: &Modulus, dim: usize, c: &Residue) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimTooSmall(dim));
        }
        let mut entries = vec![modulus.zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = c.clone();
        }
        MonodromyMatrix::new(modulus.clone(), dim, entries)
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Residue {
        &self.entries[row * self.dim + col]
    }

    /// Determinant by Laplace expansion; fine at the 2x2 and 3x3 sizes this
    /// crate works with.
    pub fn det(&self) -> Residue {
        let cols: Vec<usize> = (0..self.dim).collect();
        self.det_rec(0, &cols)
    }

    fn det_rec(&self, row: usize, cols: &[usize]) -> Residue {
        if cols.len() == 1 {
            return self.entry(row, cols[0]).clone();
        }
        let mut acc = self.modulus.zero();
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det_rec(row + 1, &rest);
            let term = self.entry(row, c) * &minor;
            acc = if k % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    fn check_compatible(&self, rhs: &MonodromyMatrix) -> Result<()> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                dim: self.dim,
                rank: rhs.dim,
            });
        }
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.to_string(),
                right: rhs.modulus.to_string(),
            });
        }
        Ok(())
    }

    pub fn matmul(&self, rhs: &MonodromyMatrix) -> Result<MonodromyMatrix> {
        self.check_compatible(rhs)?;
        let mut entries = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = self.modulus.zero();
                for k in 0..self.dim {
                    acc = &acc + &(self.entry(i, k) * rhs.entry(k, j));
                }
                entries.push(acc);
            }
        }
        MonodromyMatrix::new(self.modulus.clone(), self.dim, entries)
    }

    /// Gauss-Jordan over the local ring Z/l^n: pivots must be units, and a
    /// unit pivot always exists in some row when the matrix is invertible.
    pub fn inverse(&self) -> Result<MonodromyMatrix> {
        let d = self.dim;
        let mut a: Vec<Residue> = self.entries.clone();
        let mut inv: Vec<Residue> = MonodromyMatrix::identity(&self.modulus, d)?.entries;
        for col in 0..d {
            let pivot_row = (col..d)
                .find(|&r| a[r * d + col].is_unit())
                .ok_or_else(|| Error::SingularMatrix {
                    det: self.det().to_string(),
                })?;
            if pivot_row != col {
                for j in 0..d {
                    a.swap(col * d + j, pivot_row * d + j);
                    inv.swap(col * d + j, pivot_row * d + j);
                }
            }
            let scale = a[col * d + col].inverse()?;
            for j in 0..d {
                a[col * d + j] = &a[col * d + j] * &scale;
                inv[col * d + j] = &inv[col * d + j] * &scale;
            }
            for r in 0..d {
                if r == col || a[r * d + col].is_zero() {
                    continue;
                }
                let factor = a[r * d + col].clone();
                for j in 0..d {
                    a[r * d + j] = &a[r * d + j] - &(&factor * &a[col * d + j]);
                    inv[r * d + j] = &inv[r * d + j] - &(&factor * &inv[col * d + j]);
                }
            }
        }
        MonodromyMatrix::new(self.modulus.clone(), d, inv)
    }

    /// k-th power by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Result<MonodromyMatrix> {
        let mut base = self.clone();
        let mut acc = MonodromyMatrix::identity(&self.modulus, self.dim)?;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.matmul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.matmul(&base)?;
            }
        }
        Ok(acc)
    }

    /// True when the matrix is c times the identity; scalar matrices act
    /// trivially on the projectivisation.
    pub fn is_scalar(&self) -> bool {
        let c = self.entry(0, 0);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.entry(i, j);
                if i == j {
                    if e != c {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Applies the matrix to a point's representative and re-canonicalises.
    /// Invertibility keeps the image inside the projectivisation.
    pub fn act(&self, point: &ProjPoint) -> Result<ProjPoint> {
        if self.dim != point.rank() {
            return Err(Error::DimensionMismatch {
                dim: self.dim,
                rank: point.rank(),
            });
        }
        if *point.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.to_string(),
                right: point.modulus().to_string(),
            });
        }
        let v = point.coords();
        let coords = (0..self.dim)
            .map(|i| {
                let mut acc = self.modulus.zero();
                for (k, vk) in v.iter().enumerate() {
                    acc = &acc + &(self.entry(i, k) * vk);
                }
                acc
            })
            .collect();
        ProjPoint::canonicalize(coords)
    }

    /// The space this matrix acts on.
    pub fn space(&self) -> ProjSpace {
        ProjSpace::new(self.modulus.clone(), self.dim as u32)
            .expect("dim >= 2 enforced at construction")
    }
}

impl Neg for &MonodromyMatrix {
    type Output = MonodromyMatrix;
    fn neg(self) -> MonodromyMatrix {
        let entries = self.entries.iter().map(|e| -e).collect();
        MonodromyMatrix::new(self.modulus.clone(), self.dim, entries)
            .expect("negation preserves invertibility")
    }
}

impl fmt::Debug for MonodromyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        write!(f, "] mod {}", self.modulus)
    }
}

/// Multiset of orbit lengths, the shape datum consumed by the Hurwitz
/// formula. Stored as length -> number of orbits of that length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTypeSummary {
    counts: BTreeMap<u64, u64>,
}

impl OrbitTypeSummary {
    pub fn new(counts: BTreeMap<u64, u64>) -> Self {
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        OrbitTypeSummary { counts }
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn orbit_count(&self) -> u128 {
        self.counts.values().map(|&c| u128::from(c)).sum()
    }

    /// Total number of points covered: sum of length * multiplicity.
    pub fn total_mass(&self) -> u128 {
        self.counts
            .iter()
            .map(|(&len, &c)| u128::from(len) * u128::from(c))
            .sum()
    }

    /// Sum of (length - 1) over all orbits, the local term this summary
    /// contributes to 2g - 2 in a tame covering.
    pub fn ramification_contribution(&self) -> u128 {
        self.total_mass() - self.orbit_count()
    }
}

impl fmt::Display for OrbitTypeSummary {
    /// Longest orbits first: `{81:1, 9:2, 1:9}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (len, count)) in self.counts.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{len}:{count}")?;
        }
        write!(f, "}}")
    }
}

/// Full orbit decomposition of a matrix acting on its projectivised module.
pub struct OrbitDecomposition {
    matrix: MonodromyMatrix,
    orbits: Vec<Vec<ProjPoint>>,
}

impl OrbitDecomposition {
    /// Walks every orbit. Seeds are taken in enumeration order, so each
    /// orbit's first element is its lexicographically least point: when the
    /// walk reaches an unvisited point, every smaller point is already
    /// visited, and a visited point can never share an orbit with an
    /// unvisited one. Orbits are then sorted by (length, least element).
    ///
    /// Subject to the same size budget as enumeration.
    pub fn compute(matrix: &MonodromyMatrix) -> Result<OrbitDecomposition> {
        let space = matrix.space();
        let mut visited: HashSet<ProjPoint> = HashSet::new();
        let mut orbits: Vec<Vec<ProjPoint>> = Vec::new();
        for seed in space.points()? {
            if visited.contains(&seed) {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = seed.clone();
            loop {
                visited.insert(cur.clone());
                orbit.push(cur.clone());
                cur = matrix.act(&cur)?;
                if cur == seed {
                    break;
                }
                debug_assert!(
                    !visited.contains(&cur) || cur == seed,
                    "walk ran into a different orbit"
                );
            }
            orbits.push(orbit);
        }
        orbits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a[0].cmp(&b[0])));
        Ok(OrbitDecomposition {
            matrix: matrix.clone(),
            orbits,
        })
    }

    pub fn matrix(&self) -> &MonodromyMatrix {
        &self.matrix
    }

    /// Orbits sorted by (length, least element); each orbit starts at its
    /// least point and follows the action.
    pub fn orbits(&self) -> &[Vec<ProjPoint>] {
        &self.orbits
    }

    pub fn summary(&self) -> OrbitTypeSummary {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for orbit in &self.orbits {
            *counts.entry(orbit.len() as u64).or_insert(0) += 1;
        }
        OrbitTypeSummary::new(counts)
    }

    pub fn point_total(&self) -> u64 {
        self.orbits.iter().map(|o| o.len() as u64).sum()
    }
}

/// Length of the orbit of one point, without decomposing the whole space.
pub fn projective_order(matrix: &MonodromyMatrix, point: &ProjPoint) -> Result<u64> {
    let mut cur = matrix.act(point)?;
    let mut len = 1u64;
    while &cur != point {
        cur = matrix.act(&cur)?;
        len += 1;
        if len > ENUMERATION_BUDGET {
            return Err(Error::CrossCheck(format!(
                "orbit of {point} did not close within {ENUMERATION_BUDGET} steps"
            )));
        }
    }
    Ok(len)
}

/// Closed-form orbit census for the unipotent generator [[1,2],[0,1]] on the
/// rank-2 projectivisation at an even level n >= 2:
///
/// ```text
/// one orbit of length l^n,
/// (l-1) * l^(i-1) orbits of length l^(n-2i)   for i = 1 .. n/2 - 1,
/// l^(n/2) fixed points.
/// ```
///
/// The masses tie out to the space's cardinality (l+1) * l^(n-1); that
/// identity is re-checked here and brute-force-verified in the tests.
pub fn classify_even_level(ell: u64, level: u32) -> Result<OrbitTypeSummary> {
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(Error::NotOddPrime(ell));
    }
    if !primes::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    if !level.is_multiple_of(2) {
        return Err(Error::OddLevel(level));
    }
    let pow = |e: u32| -> Result<u64> {
        ell.checked_pow(e)
            .ok_or_else(|| Error::Overflow(format!("{ell}^{e}")))
    };
    let mut counts = BTreeMap::new();
    counts.insert(pow(level)?, 1);
    for i in 1..level / 2 {
        let len = pow(level - 2 * i)?;
        let count = (ell - 1)
            .checked_mul(pow(i - 1)?)
            .ok_or_else(|| Error::Overflow(format!("(l-1) l^{}", i - 1)))?;
        counts.insert(len, count);
    }
    *counts.entry(1).or_insert(0) += pow(level / 2)?;
    let summary = OrbitTypeSummary::new(counts);
    debug_assert_eq!(
        summary.total_mass(),
        u128::from(ell + 1) * u128::from(pow(level - 1)?),
        "orbit masses must cover the space"
    );
    Ok(summary)
}
