//! The Legendre family y^2 = x(x-1)(x-a) over F_q, q = p^2, and its
//! supersingular locus.
//!
//! The supersingular parameters are the roots of the Hasse polynomial
//! H(t) = sum of binom((p-1)/2, i)^2 t^i; there are (p-1)/2 of them in F_q.
//! Because every Legendre curve carries full rational 2-torsion, each
//! supersingular member is *strongly* supersingular: its Frobenius trace is
//! +-2p, so the q-power Frobenius acts on all torsion as the integer scalar
//! c = trace/2. That scalar is the hinge the tower construction turns on:
//! on l-power torsion prime to p, Frobenius then acts through a scalar
//! matrix, fixing the projectivised fibre pointwise.
//!
//! Everything is verified by exhaustive computation over the finite field:
//! point counts by quadratic-character scan, group structure by orders of
//! all points, certificates by checking the claimed kernel kills every
//! rational point.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{
    roots_in, FieldElem, FiniteField, Poly, PrimeField, PrimeFieldElem, QuadExtElem, QuadExtField,
    SCAN_BUDGET,
};
use crate::monodromy::MonodromyMatrix;
use crate::primes;
use crate::projective::ProjSpace;
use crate::residue::{Modulus, Residue};

/// Group-structure work enumerates every rational point; this caps the field
/// size it will do that for.
pub const GROUP_BUDGET: u64 = 10_000;

/// Default ceiling for the census, which scans all q - 2 parameters.
pub const CENSUS_DEFAULT_CAP: u64 = 31;

fn check_legendre_prime(p: u64) -> Result<()> {
    if p <= 3 || p.is_multiple_of(2) || !primes::is_prime(p) {
        return Err(Error::BadBasePrime(p));
    }
    Ok(())
}

/// The Hasse polynomial H(t) = sum_{i=0}^{m} binom(m, i)^2 t^i over F_p,
/// with m = (p-1)/2. Its roots cut out the supersingular Legendre
/// parameters. Coefficients come from the multiplicative Pascal recurrence
/// binom(m, i) = binom(m, i-1) (m - i + 1) / i, all mod p.
pub fn hasse_polynomial(p: u64) -> Result<Poly<PrimeFieldElem>> {
    let field = PrimeField::new(p)?;
    let m = (p - 1) / 2;
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut binom = field.one();
    coeffs.push(binom * binom);
    for i in 1..=m {
        binom = binom * field.elem(m - i + 1) * field.elem(i).inverse()?;
        coeffs.push(binom * binom);
    }
    Ok(Poly::new(coeffs))
}

/// All supersingular Legendre parameters over F_p^2: the roots of the Hasse
/// polynomial in the quadratic extension, ascending by (c0, c1).
///
/// Three classical facts are re-checked on every call, and a violation
/// reports as a cross-check failure: H is separable, it has exactly
/// (p-1)/2 roots in F_p^2 (it splits there), and no root is 0 or 1.
pub fn supersingular_locus(p: u64) -> Result<Vec<QuadExtElem>> {
    check_legendre_prime(p)?;
    let field = QuadExtField::new(p)?;
    let h = hasse_polynomial(p)?;
    if !h.is_separable()? {
        return Err(Error::CrossCheck(format!(
            "Hasse polynomial for p = {p} is not separable"
        )));
    }
    let roots = roots_in(&field.lift_poly(&h), &field)?;
    if roots.len() as u64 != (p - 1) / 2 {
        return Err(Error::CrossCheck(format!(
            "Hasse polynomial for p = {p} has {} roots in F_p^2, expected {}",
            roots.len(),
            (p - 1) / 2
        )));
    }
    if roots.iter().any(|r| r.is_zero() || *r == field.one()) {
        return Err(Error::CrossCheck(format!(
            "Hasse polynomial for p = {p} vanishes at a degenerate parameter"
        )));
    }
    Ok(roots)
}

/// A point of a Legendre curve: the one at infinity, or an affine (x, y).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Infinity,
    Affine(QuadExtElem, QuadExtElem),
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "infinity"),
            CurvePoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Point count and the derived Frobenius data of one curve over F_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeilData {
    pub q: u64,
    pub point_count: u64,
    /// a_q = q + 1 - N; Weil's bound gives |a_q| <= 2p here, exactly.
    pub trace: i64,
    /// p divides the trace.
    pub supersingular: bool,
    /// trace = +-2p: Frobenius is literally an integer scalar.
    pub strongly_supersingular: bool,
    /// The scalar c with trace = 2c, present exactly in the strong case.
    pub frobenius_scalar: Option<i64>,
}

impl WeilData {
    /// The characteristic polynomial of Frobenius, t^2 - trace*t + q,
    /// rendered as `(t+7)^2` when it is a perfect square.
    pub fn weil_polynomial(&self) -> String {
        if let Some(c) = self.frobenius_scalar {
            return format!("(t{:+})^2", -c);
        }
        let mut s = String::from("t^2");
        if self.trace != 0 {
            s.push_str(&format!(
                " {} {}*t",
                if self.trace > 0 { "-" } else { "+" },
                self.trace.unsigned_abs()
            ));
        }
        s.push_str(&format!(" + {}", self.q));
        s
    }
}

/// Certificate that the q-power Frobenius acts as the scalar c: the group of
/// rational points is checked to be exactly ker(c - 1) = (Z/|1-c|)^2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrobeniusCertificate {
    pub scalar: i64,
    /// |1 - c|, the expected exponent of the rational point group.
    pub kernel_order: u64,
    pub group: (u64, u64),
}

/// Which of the three sufficient conditions for the strong form hold, next
/// to what the point count actually said.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupersingularityCriteria {
    pub supersingular: bool,
    /// (1) p = -1 mod 12.
    pub residue_minus_one_mod_twelve: bool,
    /// (2) the parameter lies in the prime field (and p > 3 throughout).
    pub parameter_in_prime_field: bool,
    /// (3) full rational 2-torsion; structural for the Legendre form, but
    /// re-verified from the points rather than assumed.
    pub full_two_torsion: bool,
    pub strongly_supersingular: bool,
}

impl SupersingularityCriteria {
    /// The satisfied criteria as compact tags, e.g. `(1)(3)`.
    pub fn tags(&self) -> String {
        let mut s = String::new();
        if self.residue_minus_one_mod_twelve {
            s.push_str("(1)");
        }
        if self.parameter_in_prime_field {
            s.push_str("(2)");
        }
        if self.full_two_torsion {
            s.push_str("(3)");
        }
        s
    }
}

/// The split fibre model at one tower level: Frobenius restricted to the
/// projectivised l^n-torsion of a strongly supersingular curve. The action
/// is by the scalar c mod l^n, hence trivial on the projectivisation: every
/// fibre point is rational.
#[derive(Clone, Debug)]
pub struct FiberModel {
    space: ProjSpace,
    scalar: Residue,
}

impl FiberModel {
    pub fn space(&self) -> &ProjSpace {
        &self.space
    }

    /// The Frobenius scalar reduced to Z/l^n.
    pub fn frobenius_scalar(&self) -> &Residue {
        &self.scalar
    }

    /// Frobenius as a matrix on the torsion module: c times the identity.
    pub fn frobenius_matrix(&self) -> Result<MonodromyMatrix> {
        MonodromyMatrix::scalar(self.space.modulus(), 2, &self.scalar)
    }

    /// Scalar matrices fix the projectivisation pointwise, so the rational
    /// fibre is the whole space.
    pub fn fixed_point_count(&self) -> num_bigint::BigUint {
        self.space.cardinality()
    }
}

/// y^2 = x(x-1)(x-a) over F_q = F_p^2, with a outside {0, 1}.
#[derive(Clone, Copy, Debug)]
pub struct LegendreCurve {
    field: QuadExtField,
    a: QuadExtElem,
}

impl LegendreCurve {
    pub fn new(field: QuadExtField, a: QuadExtElem) -> Result<LegendreCurve> {
        check_legendre_prime(field.p())?;
        debug_assert_eq!(a.p(), field.p(), "parameter from the wrong field");
        if a.is_zero() || a == field.one() {
            return Err(Error::DegenerateParameter(a.to_string()));
        }
        Ok(LegendreCurve { field, a })
    }

    pub fn field(&self) -> &QuadExtField {
        &self.field
    }

    pub fn a(&self) -> QuadExtElem {
        self.a
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn q(&self) -> u64 {
        self.field.size()
    }

    /// The right-hand side x(x-1)(x-a).
    pub fn rhs(&self, x: QuadExtElem) -> QuadExtElem {
        x * (x - self.field.one()) * (x - self.a)
    }

    pub fn is_on_curve(&self, point: &CurvePoint) -> bool {
        match point {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => *y * *y == self.rhs(*x),
        }
    }

    /// |E(F_q)| by quadratic-character scan: 1 point at infinity, plus per
    /// x one point when the cubic vanishes and two when it is a nonzero
    /// square. Budgeted by [`SCAN_BUDGET`].
    pub fn count_points(&self) -> Result<u64> {
        if self.q() > SCAN_BUDGET {
            return Err(Error::FieldTooLarge {
                size: self.q(),
                budget: SCAN_BUDGET,
            });
        }
        let squares = square_table(&self.field);
        Ok(self.count_with_table(&squares))
    }

    fn count_with_table(&self, squares: &[bool]) -> u64 {
        let p = self.p();
        let mut n = 1u64;
        for x in self.field.elements() {
            let r = self.rhs(x);
            if r.is_zero() {
                n += 1;
            } else if squares[elem_index(r, p)] {
                n += 2;
            }
        }
        n
    }

    /// Point count plus the Frobenius data derived from it. The Weil bound
    /// |trace| <= 2p and the 2-torsion divisibility 4 | N are re-checked;
    /// either failing means the arithmetic itself is broken.
    pub fn weil_data(&self) -> Result<WeilData> {
        let squares = square_table_checked(&self.field)?;
        self.weil_with_table(&squares)
    }

    fn weil_with_table(&self, squares: &[bool]) -> Result<WeilData> {
        self.weil_from_count(self.count_with_table(squares))
    }

    /// [`WeilData`] from an externally supplied point count (e.g. a cache
    /// hit). The same invariants are enforced, so an impossible count is
    /// rejected here rather than poisoning downstream arithmetic.
    pub fn weil_from_count(&self, n: u64) -> Result<WeilData> {
        let q = self.q();
        let p = self.p();
        let trace = q as i64 + 1 - n as i64;
        if trace.unsigned_abs() > 2 * p {
            return Err(Error::CrossCheck(format!(
                "curve a = {} over F_{q}: trace {trace} breaks the Weil bound 2p = {}",
                self.a,
                2 * p
            )));
        }
        if !n.is_multiple_of(4) {
            return Err(Error::CrossCheck(format!(
                "curve a = {} over F_{q}: point count {n} not divisible by 4 \
                 despite full rational 2-torsion",
                self.a
            )));
        }
        let strongly = trace.unsigned_abs() == 2 * p;
        Ok(WeilData {
            q,
            point_count: n,
            trace,
            supersingular: trace.rem_euclid(p as i64) == 0,
            strongly_supersingular: strongly,
            frobenius_scalar: strongly.then_some(trace / 2),
        })
    }

    /// Every rational point, infinity first, affine points ascending by
    /// (x, y). Enumerating points is gated by [`GROUP_BUDGET`].
    pub fn points(&self) -> Result<Vec<CurvePoint>> {
        if self.q() > GROUP_BUDGET {
            return Err(Error::FieldTooLarge {
                size: self.q(),
                budget: GROUP_BUDGET,
            });
        }
        // Square roots by one pass of squaring: sqrt[z^2] = {z, -z}.
        let p = self.p();
        let mut sqrt: Vec<Option<QuadExtElem>> = vec![None; (p * p) as usize];
        for z in self.field.elements() {
            let idx = elem_index(z * z, p);
            // Keep the smaller root so the listing is canonical.
            match &mut sqrt[idx] {
                slot @ None => *slot = Some(z),
                Some(cur) => {
                    if z < *cur {
                        *cur = z;
                    }
                }
            }
        }
        let mut pts = vec![CurvePoint::Infinity];
        for x in self.field.elements() {
            let r = self.rhs(x);
            if r.is_zero() {
                pts.push(CurvePoint::Affine(x, self.field.zero()));
            } else if let Some(y) = sqrt[elem_index(r, p)] {
                let (lo, hi) = if y < -y { (y, -y) } else { (-y, y) };
                pts.push(CurvePoint::Affine(x, lo));
                pts.push(CurvePoint::Affine(x, hi));
            }
        }
        Ok(pts)
    }

    /// Chord-and-tangent addition on y^2 = x^3 + Ax^2 + Bx with
    /// A = -(1 + a), B = a.
    pub fn add_points(&self, lhs: &CurvePoint, rhs: &CurvePoint) -> CurvePoint {
        debug_assert!(self.is_on_curve(lhs), "left addend off curve");
        debug_assert!(self.is_on_curve(rhs), "right addend off curve");
        let (x1, y1, x2, y2) = match (lhs, rhs) {
            (CurvePoint::Infinity, _) => return *rhs,
            (_, CurvePoint::Infinity) => return *lhs,
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (*x1, *y1, *x2, *y2),
        };
        let one = self.field.one();
        let big_a = -(one + self.a);
        let lambda = if x1 == x2 {
            if y1 == -y2 {
                return CurvePoint::Infinity;
            }
            // Tangent: (3x^2 + 2Ax + B) / (2y).
            let num = x1 * x1 * one.embed_u64(3) + big_a * x1 * one.embed_u64(2) + self.a;
            let den = y1 + y1;
            num * den.inverse().expect("y != 0 since P != -P")
        } else {
            (y2 - y1) * (x2 - x1).inverse().expect("x1 != x2")
        };
        let x3 = lambda * lambda - big_a - x1 - x2;
        // lambda*(x1 - x3) - y1 is already the reflected y-coordinate.
        let out = CurvePoint::Affine(x3, lambda * (x1 - x3) - y1);
        debug_assert!(self.is_on_curve(&out), "group law left the curve");
        out
    }

    pub fn negate_point(&self, point: &CurvePoint) -> CurvePoint {
        match point {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(*x, -*y),
        }
    }

    pub fn scalar_mul(&self, k: u64, point: &CurvePoint) -> CurvePoint {
        let mut acc = CurvePoint::Infinity;
        let mut base = *point;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_points(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_points(&base, &base);
            }
        }
        acc
    }

    /// Order of a point inside a group of known size: start from the group
    /// order and strip prime factors while the point survives.
    fn point_order(&self, point: &CurvePoint, group_order: u64) -> u64 {
        let mut ord = group_order;
        for (prime, _) in primes::factorize(group_order) {
            while ord.is_multiple_of(prime)
                && self.scalar_mul(ord / prime, point) == CurvePoint::Infinity
            {
                ord /= prime;
            }
        }
        ord
    }

    /// Invariant factors (n1, n2) with n1 | n2 and n1 * n2 = N: n2 is the
    /// group exponent (the lcm of all point orders), n1 the cofactor. The
    /// divisibility n1 | n2 is verified, not assumed.
    pub fn group_structure(&self) -> Result<(u64, u64)> {
        let pts = self.points()?;
        let n = pts.len() as u64;
        let mut exponent = 1u64;
        for pt in &pts {
            let ord = self.point_order(pt, n);
            exponent = num_integer::lcm(exponent, ord);
            if exponent * exponent == n {
                // Cannot grow further: exponent^2 divides N for rank-2 groups.
                break;
            }
        }
        if !n.is_multiple_of(exponent) {
            return Err(Error::CrossCheck(format!(
                "curve a = {}: exponent {exponent} does not divide group order {n}",
                self.a
            )));
        }
        let n1 = n / exponent;
        if !exponent.is_multiple_of(n1) {
            return Err(Error::CrossCheck(format!(
                "curve a = {}: invariant factors ({n1}, {exponent}) fail n1 | n2",
                self.a
            )));
        }
        Ok((n1, exponent))
    }

    /// For a strongly supersingular curve, certify that Frobenius really is
    /// the scalar c on rational points: the group must be exactly
    /// (Z/|1-c|)^2, i.e. ker(c - 1) on the full torsion. A mismatch is a
    /// cross-check failure, never silently ignored.
    pub fn verify_scalar_frobenius(&self) -> Result<FrobeniusCertificate> {
        let weil = self.weil_data()?;
        let Some(c) = weil.frobenius_scalar else {
            return Err(Error::NotStronglySupersingular {
                a: self.a.to_string(),
                trace: weil.trace,
            });
        };
        let kernel_order = (1 - c).unsigned_abs();
        let group = self.group_structure()?;
        if group != (kernel_order, kernel_order) {
            return Err(Error::CrossCheck(format!(
                "curve a = {}: Frobenius scalar {c} demands group ({kernel_order}, \
                 {kernel_order}) but the points say ({}, {})",
                self.a, group.0, group.1
            )));
        }
        Ok(FrobeniusCertificate {
            scalar: c,
            kernel_order,
            group,
        })
    }

    /// The three sufficient conditions, each established from the data
    /// rather than asserted: (3) is confirmed by locating all four
    /// 2-torsion points among the rational ones.
    pub fn criteria(&self) -> Result<SupersingularityCriteria> {
        let weil = self.weil_data()?;
        Ok(self.criteria_from_weil(&weil))
    }

    /// [`Self::criteria`] against Weil data already in hand (say, derived
    /// from a cached count), avoiding a recount.
    pub fn criteria_from_weil(&self, weil: &WeilData) -> SupersingularityCriteria {
        // x(x-1)(x-a) has the three distinct rational roots 0, 1, a, so the
        // four 2-torsion points are rational. Confirm by evaluation.
        let zero = self.field.zero();
        let one = self.field.one();
        let full_two_torsion = self.rhs(zero).is_zero()
            && self.rhs(one).is_zero()
            && self.rhs(self.a).is_zero()
            && weil.point_count.is_multiple_of(4);
        SupersingularityCriteria {
            supersingular: weil.supersingular,
            residue_minus_one_mod_twelve: self.p() % 12 == 11,
            parameter_in_prime_field: self.a.in_prime_field(),
            full_two_torsion,
            strongly_supersingular: weil.strongly_supersingular,
        }
    }

    /// Frobenius on the projectivised l^n-torsion of a strongly
    /// supersingular curve: the scalar c mod l^n. Requires l != p (torsion
    /// at p is radically different) and the strong form (otherwise no
    /// scalar exists).
    pub fn split_fiber_model(&self, ell: u64, level: u32) -> Result<FiberModel> {
        let modulus = Modulus::new(ell, level)?;
        if ell == self.p() {
            return Err(Error::EllEqualsP { ell, p: self.p() });
        }
        let weil = self.weil_data()?;
        let Some(c) = weil.frobenius_scalar else {
            return Err(Error::NotStronglySupersingular {
                a: self.a.to_string(),
                trace: weil.trace,
            });
        };
        let space = ProjSpace::new(modulus.clone(), 2)?;
        Ok(FiberModel {
            space,
            scalar: modulus.residue_signed(c),
        })
    }
}

fn elem_index(z: QuadExtElem, p: u64) -> usize {
    (z.c0().value() * p + z.c1().value()) as usize
}

fn square_table(field: &QuadExtField) -> Vec<bool> {
    let p = field.p();
    let mut table = vec![false; (p * p) as usize];
    for z in field.elements() {
        table[elem_index(z * z, p)] = true;
    }
    table
}

fn square_table_checked(field: &QuadExtField) -> Result<Vec<bool>> {
    if field.size() > SCAN_BUDGET {
        return Err(Error::FieldTooLarge {
            size: field.size(),
            budget: SCAN_BUDGET,
        });
    }
    Ok(square_table(field))
}

/// One parameter's worth of census data.
#[derive(Clone, Debug)]
pub struct CensusRow {
    pub a: QuadExtElem,
    pub weil: WeilData,
    /// Invariant factors, for strongly supersingular rows within
    /// [`GROUP_BUDGET`].
    pub group: Option<(u64, u64)>,
    /// Criteria, evaluated for supersingular rows.
    pub criteria: Option<SupersingularityCriteria>,
}

/// Census of every parameter a in F_q minus {0, 1}.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub p: u64,
    pub rows: Vec<CensusRow>,
    pub hasse_roots: Vec<QuadExtElem>,
}

impl CensusReport {
    pub fn supersingular_params(&self) -> Vec<QuadExtElem> {
        self.rows
            .iter()
            .filter(|r| r.weil.supersingular)
            .map(|r| r.a)
            .collect()
    }

    pub fn strongly_rows(&self) -> impl Iterator<Item = &CensusRow> {
        self.rows.iter().filter(|r| r.weil.strongly_supersingular)
    }
}

/// The primes inside a range, ascending; handy for running a census over
/// every prime up to a bound.
pub fn primes_in(range: std::ops::RangeInclusive<u64>) -> impl Iterator<Item = u64> {
    range.filter(|&n| crate::primes::is_prime(n))
}

/// Counts points of every Legendre curve over F_p^2 and cross-checks the
/// whole picture: the supersingular parameters found by counting must equal
/// the Hasse locus exactly, there must be (p-1)/2 of them, and each must be
/// strongly supersingular (full 2-torsion forces the strong form). Any
/// disagreement is an [`Error::CrossCheck`].
pub fn ss_census(p: u64) -> Result<CensusReport> {
    ss_census_with(p, CENSUS_DEFAULT_CAP, 1)
}

/// [`ss_census`] with an explicit prime ceiling and worker-thread count.
/// Rows are computed in deterministic parameter order regardless of
/// threading; any thread count produces identical reports.
pub fn ss_census_with(p: u64, cap: u64, threads: usize) -> Result<CensusReport> {
    check_legendre_prime(p)?;
    if p > cap {
        return Err(Error::CensusBudget { p, cap });
    }
    let field = QuadExtField::new(p)?;
    let squares = square_table_checked(&field)?;
    let params: Vec<QuadExtElem> = field
        .elements()
        .filter(|z| !z.is_zero() && *z != field.one())
        .collect();

    let census_row = |a: QuadExtElem| -> Result<CensusRow> {
        let curve = LegendreCurve::new(field, a)?;
        let weil = curve.weil_with_table(&squares)?;
        let group = if weil.strongly_supersingular && field.size() <= GROUP_BUDGET {
            Some(curve.group_structure()?)
        } else {
            None
        };
        let criteria = weil.supersingular.then(|| curve.criteria_from_weil(&weil));
        Ok(CensusRow {
            a,
            weil,
            group,
            criteria,
        })
    };

    let threads = threads.max(1).min(params.len().max(1));
    let rows: Vec<CensusRow> = if threads == 1 {
        params
            .iter()
            .map(|&a| census_row(a))
            .collect::<Result<_>>()?
    } else {
        let chunk = params.len().div_ceil(threads);
        let mut out: Vec<Vec<CensusRow>> = Vec::new();
        let results: Vec<Result<Vec<CensusRow>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = params
                .chunks(chunk)
                .map(|part| scope.spawn(|| part.iter().map(|&a| census_row(a)).collect()))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("census worker panicked"))
                .collect()
        });
        for r in results {
            out.push(r?);
        }
        out.into_iter().flatten().collect()
    };

    let report = CensusReport {
        p,
        rows,
        hasse_roots: supersingular_locus(p)?,
    };

    let found = report.supersingular_params();
    if found != report.hasse_roots {
        return Err(Error::CrossCheck(format!(
            "p = {p}: census found supersingular parameters {:?} but the Hasse locus is {:?}",
            found, report.hasse_roots
        )));
    }
    if found.len() as u64 != (p - 1) / 2 {
        return Err(Error::CrossCheck(format!(
            "p = {p}: {} supersingular parameters, expected (p-1)/2 = {}",
            found.len(),
            (p - 1) / 2
        )));
    }
    for row in report.rows.iter().filter(|r| r.weil.supersingular) {
        if !row.weil.strongly_supersingular {
            return Err(Error::CrossCheck(format!(
                "p = {p}, a = {}: supersingular with full 2-torsion yet trace {} != +-2p",
                row.a, row.weil.trace
            )));
        }
    }
    Ok(report)
}

/// Orbit summary of traces seen in a census: trace -> how many parameters.
pub fn trace_histogram(report: &CensusReport) -> BTreeMap<i64, u64> {
    let mut h = BTreeMap::new();
    for row in &report.rows {
        *h.entry(row.weil.trace).or_insert(0) += 1;
    }
    h
}
