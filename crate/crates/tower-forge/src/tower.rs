//! The numerical profile of the tower of curves C_n lying over the
//! projective line, with C_n -> C_0 the covering whose fibre is the rank-2
//! projectivisation at level n.
//!
//! Per even level this module produces four numbers: the covering degree
//! (the cardinality of the projectivised fibre), the genus (via the tame
//! Hurwitz formula over three branch points, or its closed form), a floor on
//! the number of rational points over F_p^2 (the split supersingular torsion
//! sections), and the ratio points/genus. The ratio converges to p - 1,
//! which meets the general asymptotic ceiling sqrt(q) - 1 for q = p^2, so
//! the tower is optimal. All of it is exact integer and rational arithmetic;
//! nothing here is floating point.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monodromy::{
    classify_even_level, MonodromyMatrix, OrbitDecomposition, OrbitTypeSummary,
};
use crate::primes;
use crate::projective::ProjSpace;
use crate::residue::Modulus;

/// The command-line front end only re-derives genus from brute-force orbit
/// walks when the fibre has at most this many points.
pub const CROSS_CHECK_BUDGET: u64 = 100_000;

fn check_odd_prime(ell: u64) -> Result<()> {
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(Error::NotOddPrime(ell));
    }
    if !primes::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    Ok(())
}

/// Degree of C_n -> C_0: the fibre cardinality (l+1) * l^(n-1).
pub fn level_degree(ell: u64, level: u32) -> Result<BigUint> {
    check_odd_prime(ell)?;
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    Ok(BigUint::from(ell + 1) * BigUint::from(ell).pow(level - 1))
}

/// Tame Hurwitz formula: for a degree-N covering of a genus-g0 base,
/// branched over the points whose orbit profiles are given,
///
/// ```text
/// 2g - 2 = N (2 g0 - 2) + sum over profiles of sum over orbits of (e - 1).
/// ```
///
/// Fails when a profile's mass disagrees with N, or when the resulting Euler
/// characteristic is not an even integer >= -2 (inconsistent input data).
pub fn hurwitz_genus(
    degree: &BigUint,
    base_genus: u64,
    profiles: &[OrbitTypeSummary],
) -> Result<BigUint> {
    let n = BigInt::from(degree.clone());
    for p in profiles {
        if BigUint::from(p.total_mass()) != *degree {
            return Err(Error::ProfileMassMismatch {
                mass: p.total_mass().to_string(),
                degree: degree.to_string(),
            });
        }
    }
    let mut chi = &n * (BigInt::from(2u64) * BigInt::from(base_genus) - BigInt::from(2u64));
    for p in profiles {
        chi += BigInt::from(p.ramification_contribution());
    }
    if chi.is_odd() || chi < BigInt::from(-2) {
        return Err(Error::BadEulerCharacteristic(chi.to_string()));
    }
    let g2 = chi + BigInt::from(2u64);
    Ok((g2 / BigInt::from(2u64))
        .to_biguint()
        .expect("2g is nonnegative here"))
}

/// Genus of C_n at an even level, in closed form:
///
/// ```text
/// g = ((l+1) l^(n-1) - 3 (l+1) l^(n/2 - 1)) / 2 + 1.
/// ```
///
/// This is exactly what [`hurwitz_genus`] returns for the degree and the
/// three branch-point orbit profiles of the tower; the tests and the
/// cross-check path re-derive it from orbit walks.
pub fn genus_closed_form(ell: u64, level: u32) -> Result<BigUint> {
    check_odd_prime(ell)?;
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    if !level.is_multiple_of(2) {
        return Err(Error::OddLevel(level));
    }
    let l = BigUint::from(ell);
    let lp1 = BigUint::from(ell + 1);
    let big = &lp1 * l.pow(level - 1);
    let small = BigUint::from(3u64) * &lp1 * l.pow(level / 2 - 1);
    debug_assert!(big >= small, "genus formula is nonnegative for l >= 3");
    Ok((big - small) / BigUint::from(2u64) + BigUint::one())
}

/// Floor on |C_n(F_p^2)| from the split torsion sections:
/// ((p-1)/2) * (l+1) * l^(n-1).
pub fn points_lower_bound(p: u64, ell: u64, level: u32) -> Result<BigUint> {
    check_base_prime(p)?;
    Ok(BigUint::from((p - 1) / 2) * level_degree(ell, level)?)
}

fn check_base_prime(p: u64) -> Result<()> {
    if p <= 3 || p.is_multiple_of(2) || !primes::is_prime(p) {
        return Err(Error::BadBasePrime(p));
    }
    Ok(())
}

/// One even level of the tower: degree, genus, point floor, and their ratio.
#[derive(Clone, Debug)]
pub struct LevelReport {
    pub level: u32,
    pub degree: BigUint,
    pub genus: BigUint,
    pub points_lower_bound: BigUint,
    pub ratio: BigRational,
}

/// The whole tower profile for one (p, l) pair.
#[derive(Clone, Debug)]
pub struct TowerReport {
    pub p: u64,
    pub ell: u64,
    /// The asymptotic ceiling sqrt(q) - 1 = p - 1 for curves over F_q, q = p^2.
    pub dv_bound: u64,
    /// Exact limit of the ratio as the level grows.
    pub limit: BigRational,
    /// Whether the limit meets the ceiling.
    pub optimal: bool,
    pub levels: Vec<LevelReport>,
}

/// Brute-force versus closed-form comparison at one level.
#[derive(Clone, Debug)]
pub struct LevelCheck {
    pub level: u32,
    pub closed_summary: OrbitTypeSummary,
    pub walked_summary: OrbitTypeSummary,
    pub closed_genus: BigUint,
    pub walked_genus: BigUint,
}

impl LevelCheck {
    pub fn passed(&self) -> bool {
        self.closed_summary == self.walked_summary && self.closed_genus == self.walked_genus
    }
}

/// Parameters of one tower: the base prime p (curves live over F_p^2) and
/// the torsion prime l driving the level structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TowerParams {
    p: u64,
    ell: u64,
}

impl TowerParams {
    pub fn new(p: u64, ell: u64) -> Result<TowerParams> {
        check_base_prime(p)?;
        check_odd_prime(ell)?;
        if p == ell {
            return Err(Error::EllEqualsP { ell, p });
        }
        Ok(TowerParams { p, ell })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// sqrt(q) - 1 over F_q with q = p^2: exactly p - 1.
    pub fn dv_bound(&self) -> u64 {
        self.p - 1
    }

    /// The tame monodromy generator acting on the level-n fibre.
    pub fn monodromy_generator(&self, level: u32) -> Result<MonodromyMatrix> {
        Ok(MonodromyMatrix::legendre(&Modulus::new(self.ell, level)?))
    }

    /// The level-n fibre as a projectivised module.
    pub fn fibre_space(&self, level: u32) -> Result<ProjSpace> {
        ProjSpace::new(Modulus::new(self.ell, level)?, 2)
    }

    /// Orbit profiles at the three branch points of the base line. The three
    /// local monodromies are conjugates of the same generator up to sign, and
    /// orbit types are blind to both, so the profiles coincide.
    pub fn branch_profiles(&self, level: u32) -> Result<Vec<OrbitTypeSummary>> {
        let s = classify_even_level(self.ell, level)?;
        Ok(vec![s.clone(), s.clone(), s])
    }

    /// Exact limit of points/genus down the tower, as the ratio of the
    /// leading coefficients of the floor and the genus in l^n.
    pub fn limit_ratio(&self) -> BigRational {
        let two_ell = BigInt::from(2 * self.ell);
        let floor_lead =
            BigRational::new(BigInt::from((self.p - 1) * (self.ell + 1)), two_ell.clone());
        let genus_lead = BigRational::new(BigInt::from(self.ell + 1), two_ell);
        floor_lead / genus_lead
    }

    /// Degree, genus, floor and ratio at one even level.
    pub fn level_report(&self, level: u32) -> Result<LevelReport> {
        let degree = level_degree(self.ell, level)?;
        let genus = genus_closed_form(self.ell, level)?;
        let floor = points_lower_bound(self.p, self.ell, level)?;
        if genus.is_zero() {
            // Cannot happen for l >= 3 at even levels; guard the division.
            return Err(Error::CrossCheck(format!(
                "genus 0 at level {level} of the (p={}, l={}) tower",
                self.p, self.ell
            )));
        }
        let ratio = BigRational::new(BigInt::from(floor.clone()), BigInt::from(genus.clone()));
        Ok(LevelReport {
            level,
            degree,
            genus,
            points_lower_bound: floor,
            ratio,
        })
    }

    /// Reports every even level 2, 4, ..., max_level.
    pub fn tower_report(&self, max_level: u32) -> Result<TowerReport> {
        if max_level < 2 {
            return Err(Error::OddLevel(max_level));
        }
        let levels = (1..=max_level / 2)
            .map(|k| self.level_report(2 * k))
            .collect::<Result<Vec<_>>>()?;
        let limit = self.limit_ratio();
        let optimal = limit == BigRational::from(BigInt::from(self.dv_bound()));
        Ok(TowerReport {
            p: self.p,
            ell: self.ell,
            dv_bound: self.dv_bound(),
            limit,
            optimal,
            levels,
        })
    }

    /// Re-derives one level without closed forms: walks the orbits of the
    /// generator, feeds the walked profiles through the Hurwitz formula, and
    /// lines both up against the closed-form answers.
    pub fn cross_check_level(&self, level: u32) -> Result<LevelCheck> {
        let closed_summary = classify_even_level(self.ell, level)?;
        let generator = self.monodromy_generator(level)?;
        let walked_summary = OrbitDecomposition::compute(&generator)?.summary();
        let degree = level_degree(self.ell, level)?;
        let walked_profiles = vec![
            walked_summary.clone(),
            walked_summary.clone(),
            walked_summary.clone(),
        ];
        let walked_genus = hurwitz_genus(&degree, 0, &walked_profiles)?;
        let closed_genus = genus_closed_form(self.ell, level)?;
        Ok(LevelCheck {
            level,
            closed_summary,
            walked_summary,
            closed_genus,
            walked_genus,
        })
    }
}

/// Convergence gap |ratio - limit| at the top reported level, as an exact
/// rational; used to show the ratios actually approach the limit.
pub fn convergence_gap(report: &TowerReport) -> Option<BigRational> {
    report
        .levels
        .last()
        .map(|lv| (&lv.ratio - &report.limit).abs())
}
