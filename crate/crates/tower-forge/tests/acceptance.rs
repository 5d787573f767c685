//! Acceptance gate: the ten headline guarantees, one test and one
//! pass/fail line each. Run with
//!
//! ```text
//! cargo test --test acceptance -- --nocapture
//! ```
//!
//! Every test prints `[PASS] criterion k: ...` on success; a failure prints
//! the matching `[FAIL]` line and then panics with the detail.

use std::collections::{HashMap, HashSet};
use std::panic::AssertUnwindSafe;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use tower_forge::field::{roots_in, FieldElem, PrimeField, QuadExtField};
use tower_forge::legendre::{hasse_polynomial, ss_census, supersingular_locus, LegendreCurve};
use tower_forge::monodromy::{classify_even_level, MonodromyMatrix, OrbitDecomposition};
use tower_forge::projective::ProjSpace;
use tower_forge::residue::Modulus;
use tower_forge::tower::{convergence_gap, genus_closed_form, TowerParams};

fn criterion(number: u32, name: &str, body: impl FnOnce()) {
    match std::panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("[PASS] criterion {number}: {name}"),
        Err(e) => {
            println!("[FAIL] criterion {number}: {name}");
            std::panic::resume_unwind(e);
        }
    }
}

fn space(ell: u64, level: u32, rank: u32) -> ProjSpace {
    ProjSpace::new(Modulus::new(ell, level).unwrap(), rank).unwrap()
}

/// Independent cardinality oracle: (1 + l + ... + l^(b-1)) * l^((b-1)(n-1)),
/// evaluated in plain u128 arithmetic.
fn cardinality_oracle(ell: u64, level: u32, rank: u32) -> u128 {
    let ell = u128::from(ell);
    let projective_line_part: u128 = (0..rank).map(|i| ell.pow(i)).sum();
    projective_line_part * ell.pow((rank - 1) * (level - 1))
}

#[test]
fn criterion_01_cardinality_and_enumeration() {
    criterion(
        1,
        "projective cardinalities match enumeration across the (l, n, b) grid in under 10 s",
        || {
            let start = Instant::now();
            for ell in [3u64, 5, 7] {
                for level in 1..=4u32 {
                    for rank in [2u32, 3] {
                        let s = space(ell, level, rank);
                        let want = cardinality_oracle(ell, level, rank);
                        assert_eq!(
                            s.cardinality(),
                            BigUint::from(want),
                            "closed form vs oracle at l={ell} n={level} b={rank}"
                        );
                        if want <= 200_000 {
                            let pts = s.enumerate().unwrap();
                            assert_eq!(pts.len() as u128, want, "enumerated count");
                            let distinct: HashSet<_> = pts.iter().collect();
                            assert_eq!(distinct.len(), pts.len(), "duplicate points");
                            for p in &pts {
                                let pivot = p.pivot();
                                assert!(p.coords()[pivot].is_one(), "pivot not scaled to 1");
                                assert!(
                                    p.coords()[..pivot].iter().all(|c| !c.is_unit()),
                                    "unit before the pivot"
                                );
                            }
                        } else {
                            // The largest space on the grid, l=7 n=4 b=3 with
                            // 6,705,993 points, is counted without being
                            // materialised.
                            let counted = s.points().unwrap().count() as u128;
                            assert_eq!(
                                counted, want,
                                "streamed count at l={ell} n={level} b={rank}"
                            );
                        }
                    }
                }
            }
            assert_eq!(cardinality_oracle(7, 4, 3), 6_705_993);
            let elapsed = start.elapsed();
            assert!(
                elapsed < Duration::from_secs(10),
                "grid took {elapsed:?}, budget is 10 s"
            );
        },
    );
}

#[test]
fn criterion_02_reduction_fibres() {
    criterion(
        2,
        "level reduction P_n -> P_(n-1) is onto with every fibre of size l^(b-1)",
        || {
            for (ell, level, rank) in [(3u64, 3u32, 2u32), (5, 2, 2), (3, 2, 3), (5, 3, 2)] {
                let upstairs = space(ell, level, rank);
                let downstairs = space(ell, level - 1, rank);
                let mut fibre_sizes: HashMap<_, u64> = HashMap::new();
                for p in upstairs.points().unwrap() {
                    *fibre_sizes.entry(p.reduce_level().unwrap()).or_insert(0) += 1;
                }
                let expected_fibre = ell.pow(rank - 1);
                assert_eq!(
                    BigUint::from(fibre_sizes.len() as u64),
                    downstairs.cardinality(),
                    "reduction not onto at l={ell} n={level} b={rank}"
                );
                for (image, size) in &fibre_sizes {
                    assert_eq!(
                        *size, expected_fibre,
                        "fibre over {image:?} has the wrong size"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_03_orbit_decomposition_matches_closed_form() {
    criterion(
        3,
        "walked orbit decompositions equal the closed form for l in {3,5,7}, n in {2,4} in under 30 s",
        || {
            let start = Instant::now();
            for ell in [3u64, 5, 7] {
                for level in [2u32, 4] {
                    let modulus = Modulus::new(ell, level).unwrap();
                    let matrix = MonodromyMatrix::legendre(&modulus);
                    let summary = OrbitDecomposition::compute(&matrix).unwrap().summary();
                    // Independent oracles in plain integer arithmetic.
                    let mass = u128::from(ell + 1) * u128::from(ell).pow(level - 1);
                    let orbit_count = u128::from(ell + 1) * u128::from(ell).pow(level / 2 - 1);
                    assert_eq!(summary.total_mass(), mass, "mass at l={ell} n={level}");
                    assert_eq!(
                        summary.orbit_count(),
                        orbit_count,
                        "orbit count at l={ell} n={level}"
                    );
                    assert_eq!(
                        summary,
                        classify_even_level(ell, level).unwrap(),
                        "full orbit type at l={ell} n={level}"
                    );
                }
            }
            let elapsed = start.elapsed();
            assert!(
                elapsed < Duration::from_secs(30),
                "orbit sweep took {elapsed:?}, budget is 30 s"
            );
        },
    );
}

#[test]
fn criterion_04_orbit_type_invariance() {
    criterion(
        4,
        "orbit type is unchanged by inverting or conjugating the monodromy generator",
        || {
            for (ell, level) in [(3u64, 2u32), (3, 4), (5, 2), (5, 4), (7, 2)] {
                let modulus = Modulus::new(ell, level).unwrap();
                let m = MonodromyMatrix::legendre(&modulus);
                let reference = OrbitDecomposition::compute(&m).unwrap().summary();

                let inverse = m.inverse().unwrap();
                assert_eq!(
                    OrbitDecomposition::compute(&inverse).unwrap().summary(),
                    reference,
                    "inverse changed the orbit type at l={ell} n={level}"
                );

                // Two unimodular conjugators; det 1 and det 1 - l are units.
                for g_vals in [[2i64, 1, 1, 1], [1, 1, ell as i64, 1]] {
                    let g = MonodromyMatrix::from_values(&modulus, 2, &g_vals).unwrap();
                    let conj = g.matmul(&m).unwrap().matmul(&g.inverse().unwrap()).unwrap();
                    assert_eq!(
                        OrbitDecomposition::compute(&conj).unwrap().summary(),
                        reference,
                        "conjugation by {g_vals:?} changed the orbit type at l={ell} n={level}"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_05_genus_closed_form_and_spot_values() {
    criterion(
        5,
        "closed-form genus equals the Hurwitz evaluation of walked orbits, with the stated spot values",
        || {
            // Spot values, exact.
            for (ell, level, want) in [
                (3u64, 2u32, 1u64),
                (3, 4, 37),
                (5, 2, 7),
                (5, 4, 331),
                (5, 6, 9151),
                (5, 8, 233_251),
                (7, 2, 17),
            ] {
                assert_eq!(
                    genus_closed_form(ell, level).unwrap(),
                    BigUint::from(want),
                    "genus at l={ell} n={level}"
                );
            }
            // Independent check: walk the orbits, feed the Hurwitz formula.
            for (ell, level) in [(3u64, 2u32), (3, 4), (5, 2), (5, 4), (7, 2)] {
                let params = TowerParams::new(if ell == 7 { 11 } else { 7 }, ell).unwrap();
                let check = params.cross_check_level(level).unwrap();
                assert!(
                    check.passed(),
                    "walked Hurwitz genus disagrees with the closed form at l={ell} n={level}"
                );
            }
        },
    );
}

#[test]
fn criterion_06_hasse_polynomial_roots() {
    criterion(
        6,
        "the Hasse polynomial is separable for p <= 31 with exactly (p-1)/2 roots in F_p^2, none degenerate",
        || {
            for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31] {
                let h = hasse_polynomial(p).unwrap();
                assert_eq!(h.degree(), Some(((p - 1) / 2) as usize), "degree at p={p}");
                assert!(h.is_separable().unwrap(), "H_{p} not separable");
                let locus = supersingular_locus(p).unwrap();
                assert_eq!(locus.len() as u64, (p - 1) / 2, "root count at p={p}");
                let field = QuadExtField::new(p).unwrap();
                for z in &locus {
                    assert!(!z.is_zero() && *z != field.one(), "degenerate root at p={p}");
                }
            }
            // p = 13: all six roots live strictly in the quadratic extension.
            let h13 = hasse_polynomial(13).unwrap();
            let in_prime = roots_in(&h13, &PrimeField::new(13).unwrap()).unwrap();
            assert!(in_prime.is_empty(), "H_13 has no roots in F_13");
            let ext = QuadExtField::new(13).unwrap();
            let in_ext = roots_in(&ext.lift_poly(&h13), &ext).unwrap();
            assert_eq!(in_ext.len(), 6);
            assert!(in_ext.iter().all(|z| !z.in_prime_field()));
        },
    );
}

#[test]
fn criterion_07_census_equals_hasse_locus() {
    criterion(
        7,
        "for p in {5,7,11,13} the curves found supersingular by counting are exactly the Hasse locus",
        || {
            for p in [5u64, 7, 11, 13] {
                // ss_census cross-checks internally and fails loudly on any
                // disagreement; re-assert the equality here explicitly.
                let report = ss_census(p).unwrap();
                assert_eq!(
                    report.supersingular_params(),
                    report.hasse_roots,
                    "census/locus disagreement at p={p}"
                );
                assert_eq!(report.supersingular_params().len() as u64, (p - 1) / 2);
                assert_eq!(
                    report.rows.len() as u64,
                    p * p - 2,
                    "census must cover all of F_q minus {{0,1}}"
                );
            }
        },
    );
}

#[test]
fn criterion_08_strong_supersingularity() {
    criterion(
        8,
        "for p in {11,23} every supersingular parameter is strongly supersingular with trace +-2p",
        || {
            for p in [11u64, 23] {
                let report = ss_census(p).unwrap();
                let mut seen = 0u64;
                for row in &report.rows {
                    if !row.weil.supersingular {
                        continue;
                    }
                    seen += 1;
                    assert!(
                        row.weil.strongly_supersingular,
                        "a = {} at p={p} is supersingular but not strongly",
                        row.a
                    );
                    assert_eq!(
                        row.weil.trace.unsigned_abs(),
                        2 * p,
                        "trace at a = {}",
                        row.a
                    );
                    let c = row
                        .weil
                        .frobenius_scalar
                        .expect("strong rows carry the scalar");
                    assert_eq!(c.unsigned_abs(), p);
                    let k = (1 - c).unsigned_abs();
                    assert_eq!(row.group, Some((k, k)), "group shape at a = {}", row.a);
                }
                assert_eq!(seen, (p - 1) / 2);
            }
        },
    );
}

#[test]
fn criterion_09_optimal_tower_ratios() {
    criterion(
        9,
        "the (p,l) = (7,5) tower achieves the exact stated ratios with limit 6, the optimality bound p-1",
        || {
            let report = TowerParams::new(7, 5).unwrap().tower_report(8).unwrap();
            let ratios: Vec<String> = report.levels.iter().map(|l| l.ratio.to_string()).collect();
            assert_eq!(
                ratios,
                ["90/7", "2250/331", "56250/9151", "1406250/233251"],
                "exact ratio sequence"
            );
            assert_eq!(report.limit.to_string(), "6");
            assert_eq!(report.dv_bound, 6);
            assert_eq!(report.dv_bound, report.p - 1);
            assert!(report.optimal, "limit must meet the bound");
            // Convergence is geometric: at top level n the gap to the limit
            // stays under 4(p-1)/l^(n/2) = 24/625 for n = 8.
            let gap = convergence_gap(&report).unwrap();
            let bound = BigRational::new(BigInt::from(24), BigInt::from(625));
            assert!(gap < bound, "gap {gap} exceeds {bound}");
            assert!(gap.to_f64().unwrap() > 0.0, "ratios approach the limit from above");
        },
    );
}

#[test]
fn criterion_10_reference_curve_certificate_chain() {
    criterion(
        10,
        "the reference curve p=7, a=6 passes the whole certificate chain down to the split fibre model",
        || {
            let field = QuadExtField::new(7).unwrap();
            let curve = LegendreCurve::new(field, field.elem(6, 0)).unwrap();

            let weil = curve.weil_data().unwrap();
            assert_eq!(weil.point_count, 64);
            assert_eq!(weil.trace, -14);
            assert!(weil.supersingular && weil.strongly_supersingular);
            assert_eq!(weil.frobenius_scalar, Some(-7));
            assert_eq!(weil.weil_polynomial(), "(t+7)^2");

            assert_eq!(curve.group_structure().unwrap(), (8, 8));
            let cert = curve.verify_scalar_frobenius().unwrap();
            assert_eq!(cert.scalar, -7);
            assert_eq!(cert.kernel_order, 8);
            assert_eq!(cert.group, (8, 8));

            let criteria = curve.criteria().unwrap();
            assert_eq!(criteria.tags(), "(2)(3)");

            let model = curve.split_fiber_model(5, 2).unwrap();
            assert_eq!(model.frobenius_scalar().to_string(), "18");
            assert_eq!(model.fixed_point_count(), BigUint::from(30u32));
            let matrix = model.frobenius_matrix().unwrap();
            assert!(matrix.is_scalar());
            // Exhaustive: the scalar acts trivially on all 30 fibre points.
            let fibre = model.space().enumerate().unwrap();
            assert_eq!(fibre.len(), 30);
            for point in &fibre {
                assert_eq!(matrix.act(point).unwrap(), *point, "moved {point}");
            }
        },
    );
}
