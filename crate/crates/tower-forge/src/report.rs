//! Deterministic renderings of every command-line result.
//!
//! Each subcommand has a report type here that owns everything the output
//! needs, pre-stringified where values are unbounded (big integers and exact
//! rationals render as decimal strings and `num/den`). Reports serialize to
//! JSON in declaration order, print a stable text layout, and the tabular
//! ones also emit CSV. Identical inputs produce identical bytes: there are
//! no timestamps, no machine-dependent values, and no hash-ordered maps
//! anywhere in the pipeline.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cache::{count_with_cache, PointCountCache};
use crate::error::{Error, Result};
use crate::field::{roots_in, PrimeField, QuadExtField};
use crate::legendre::{
    hasse_polynomial, ss_census_with, LegendreCurve, CENSUS_DEFAULT_CAP, GROUP_BUDGET,
};
use crate::monodromy::{classify_even_level, MonodromyMatrix, OrbitDecomposition};
use crate::projective::ProjSpace;
use crate::residue::Modulus;
use crate::tower::TowerParams;

/// Output encodings of the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A report that knows its text form, and optionally a CSV form.
pub trait Render: Serialize {
    /// Subcommand name, for error messages.
    const COMMAND: &'static str;

    fn text(&self) -> String;

    fn csv(&self) -> Result<String> {
        Err(Error::UnsupportedFormat {
            command: Self::COMMAND,
            format: "csv",
            supported: "text, json",
        })
    }
}

/// The report in the requested format, newline-terminated.
pub fn render<R: Render>(report: &R, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(report.text()),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => report.csv(),
    }
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(header)
        .and_then(|()| rows.iter().try_for_each(|row| writer.write_record(row)))
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(std::io::Error::other(e)))
}

/// Left-aligned plain-text table with two spaces between columns.
fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            if i + 1 == cells.len() {
                out.push_str(cell);
            } else {
                let _ = write!(out, "{cell:<w$}");
            }
        }
        out.push('\n');
    };
    emit(
        &mut out,
        &header.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
    );
    for row in rows {
        emit(&mut out, row);
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `projspace`: the size of P(Lambda_n^b), and the points themselves on
/// request.
#[derive(Serialize)]
pub struct ProjspaceReport {
    pub ell: u64,
    pub level: u32,
    pub rank: u32,
    pub cardinality: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    #[serde(skip)]
    coord_rows: Vec<Vec<String>>,
}

impl ProjspaceReport {
    pub fn build(ell: u64, level: u32, rank: u32, list: bool) -> Result<ProjspaceReport> {
        let space = ProjSpace::new(Modulus::new(ell, level)?, rank)?;
        let cardinality = space.cardinality().to_string();
        let (points, coord_rows) = if list {
            let pts = space.enumerate()?;
            let coord_rows = pts
                .iter()
                .map(|p| p.coords().iter().map(|c| c.to_string()).collect())
                .collect();
            (
                Some(pts.iter().map(|p| p.to_string()).collect()),
                coord_rows,
            )
        } else {
            (None, Vec::new())
        };
        Ok(ProjspaceReport {
            ell,
            level,
            rank,
            cardinality,
            points,
            coord_rows,
        })
    }
}

impl Render for ProjspaceReport {
    const COMMAND: &'static str = "projspace";

    fn text(&self) -> String {
        match &self.points {
            None => format!("{}\n", self.cardinality),
            Some(points) => {
                let mut out = String::new();
                for p in points {
                    out.push_str(p);
                    out.push('\n');
                }
                out
            }
        }
    }

    fn csv(&self) -> Result<String> {
        if self.points.is_none() {
            return csv_table(
                &["ell", "level", "rank", "cardinality"],
                &[vec![
                    self.ell.to_string(),
                    self.level.to_string(),
                    self.rank.to_string(),
                    self.cardinality.clone(),
                ]],
            );
        }
        let header: Vec<String> = (0..self.rank).map(|i| format!("c{i}")).collect();
        csv_table(
            &header.iter().map(String::as_str).collect::<Vec<_>>(),
            &self.coord_rows,
        )
    }
}

#[derive(Serialize)]
struct OrbitLine {
    length: u64,
    count: u64,
}

/// `orbits`: the orbit decomposition of one matrix on one fibre.
#[derive(Serialize)]
pub struct OrbitsReport {
    pub ell: u64,
    pub level: u32,
    pub matrix: String,
    pub points: u64,
    pub orbit_count: u64,
    orbits: Vec<OrbitLine>,
    pub ramification_contribution: u64,
    /// None when no closed form applies (a custom matrix, or an odd level).
    pub matches_closed_form: Option<bool>,
    #[serde(skip)]
    orbit_type: String,
}

impl OrbitsReport {
    pub fn build(ell: u64, level: u32, matrix_text: &str) -> Result<OrbitsReport> {
        let modulus = Modulus::new(ell, level)?;
        let matrix = MonodromyMatrix::parse(&modulus, matrix_text)?;
        let decomposition = OrbitDecomposition::compute(&matrix)?;
        let summary = decomposition.summary();
        let matches_closed_form =
            if matrix == MonodromyMatrix::legendre(&modulus) && level.is_multiple_of(2) {
                Some(classify_even_level(ell, level)? == summary)
            } else {
                None
            };
        let orbits = summary
            .counts()
            .iter()
            .rev()
            .map(|(&length, &count)| OrbitLine { length, count })
            .collect();
        Ok(OrbitsReport {
            ell,
            level,
            matrix: format!("{matrix:?}"),
            points: decomposition.point_total(),
            orbit_count: summary.orbit_count() as u64,
            orbits,
            ramification_contribution: summary.ramification_contribution() as u64,
            matches_closed_form,
            orbit_type: summary.to_string(),
        })
    }
}

impl Render for OrbitsReport {
    const COMMAND: &'static str = "orbits";

    fn text(&self) -> String {
        let closed = match self.matches_closed_form {
            Some(b) => yes_no(b),
            None => "n/a",
        };
        format!(
            "matrix: {}\npoints: {}\norbits: {}\norbit type: {}\n\
             ramification contribution: {}\nmatches closed form: {closed}\n",
            self.matrix,
            self.points,
            self.orbit_count,
            self.orbit_type,
            self.ramification_contribution,
        )
    }

    fn csv(&self) -> Result<String> {
        csv_table(
            &["length", "count"],
            &self
                .orbits
                .iter()
                .map(|o| vec![o.length.to_string(), o.count.to_string()])
                .collect::<Vec<_>>(),
        )
    }
}

#[derive(Serialize)]
struct TowerLevelJson {
    n: u32,
    degree: String,
    genus: String,
    points_lower_bound: String,
    ratio: String,
}

/// `tower`: degree, genus, point floor and ratio per even level, plus the
/// limit and the optimality verdict.
#[derive(Serialize)]
pub struct TowerCliReport {
    pub p: u64,
    pub ell: u64,
    pub dv_bound: u64,
    pub optimal: bool,
    levels: Vec<TowerLevelJson>,
    /// Exact limit of the ratio column; equals dv_bound exactly when
    /// `optimal` is true.
    pub limit: String,
}

impl TowerCliReport {
    pub fn build(p: u64, ell: u64, max_level: u32) -> Result<TowerCliReport> {
        let report = TowerParams::new(p, ell)?.tower_report(max_level)?;
        Ok(TowerCliReport {
            p: report.p,
            ell: report.ell,
            dv_bound: report.dv_bound,
            optimal: report.optimal,
            levels: report
                .levels
                .iter()
                .map(|lv| TowerLevelJson {
                    n: lv.level,
                    degree: lv.degree.to_string(),
                    genus: lv.genus.to_string(),
                    points_lower_bound: lv.points_lower_bound.to_string(),
                    ratio: lv.ratio.to_string(),
                })
                .collect(),
            limit: report.limit.to_string(),
        })
    }

    fn level_rows(&self) -> Vec<Vec<String>> {
        self.levels
            .iter()
            .map(|lv| {
                vec![
                    lv.n.to_string(),
                    lv.degree.clone(),
                    lv.genus.clone(),
                    lv.points_lower_bound.clone(),
                    lv.ratio.clone(),
                ]
            })
            .collect()
    }
}

const TOWER_HEADER: [&str; 5] = ["n", "degree", "genus", "points_lower_bound", "ratio"];

impl Render for TowerCliReport {
    const COMMAND: &'static str = "tower";

    fn text(&self) -> String {
        let mut out = format!(
            "tower for p = {}, ell = {} (curves over F_{})\n\
             dv bound sqrt(q) - 1: {}\n",
            self.p,
            self.ell,
            self.p * self.p,
            self.dv_bound
        );
        out.push_str(&text_table(&TOWER_HEADER, &self.level_rows()));
        let _ = writeln!(out, "limit of ratios: {}", self.limit);
        let _ = writeln!(out, "optimal: {}", yes_no(self.optimal));
        out
    }

    fn csv(&self) -> Result<String> {
        csv_table(&TOWER_HEADER, &self.level_rows())
    }
}

#[derive(Serialize)]
struct CertificateJson {
    scalar: i64,
    kernel_order: u64,
    group: (u64, u64),
}

#[derive(Serialize)]
struct CriteriaJson {
    tags: String,
    residue_minus_one_mod_twelve: bool,
    parameter_in_prime_field: bool,
    full_two_torsion: bool,
}

#[derive(Serialize)]
struct FiberJson {
    ell: u64,
    level: u32,
    scalar: String,
    fixed_points: String,
}

/// `curve`: the certificate chain for one Legendre curve.
#[derive(Serialize)]
pub struct CurveCliReport {
    pub p: u64,
    pub a: String,
    pub q: u64,
    pub point_count: u64,
    pub count_source: &'static str,
    pub trace: i64,
    pub weil_polynomial: String,
    pub supersingular: bool,
    pub strongly_supersingular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frobenius_scalar: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateJson>,
    criteria: CriteriaJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    fiber: Option<FiberJson>,
    #[serde(skip)]
    field_desc: String,
}

impl CurveCliReport {
    pub fn build(
        p: u64,
        a_text: &str,
        fiber: Option<(u64, u32)>,
        cache: Option<&PointCountCache>,
        verify: bool,
    ) -> Result<CurveCliReport> {
        let field = QuadExtField::new(p)?;
        let a = field.parse_elem(a_text)?;
        let curve = LegendreCurve::new(field, a)?;

        let (count, source) = match cache {
            Some(cache) => {
                let (count, outcome) = count_with_cache(&curve, cache, verify)?;
                (count, outcome.describe())
            }
            None => (curve.count_points()?, "computed"),
        };
        let weil = curve.weil_from_count(count)?;
        let criteria = curve.criteria_from_weil(&weil);

        let group = if curve.q() <= GROUP_BUDGET {
            Some(curve.group_structure()?)
        } else {
            None
        };
        let certificate = if weil.strongly_supersingular && group.is_some() {
            let cert = curve.verify_scalar_frobenius()?;
            Some(CertificateJson {
                scalar: cert.scalar,
                kernel_order: cert.kernel_order,
                group: cert.group,
            })
        } else {
            None
        };
        let fiber = fiber
            .map(|(ell, level)| -> Result<FiberJson> {
                let model = curve.split_fiber_model(ell, level)?;
                Ok(FiberJson {
                    ell,
                    level,
                    scalar: model.frobenius_scalar().to_string(),
                    fixed_points: model.fixed_point_count().to_string(),
                })
            })
            .transpose()?;

        Ok(CurveCliReport {
            p,
            a: a.to_string(),
            q: curve.q(),
            point_count: count,
            count_source: source,
            trace: weil.trace,
            weil_polynomial: weil.weil_polynomial(),
            supersingular: weil.supersingular,
            strongly_supersingular: weil.strongly_supersingular,
            frobenius_scalar: weil.frobenius_scalar,
            group,
            certificate,
            criteria: CriteriaJson {
                tags: criteria.tags(),
                residue_minus_one_mod_twelve: criteria.residue_minus_one_mod_twelve,
                parameter_in_prime_field: criteria.parameter_in_prime_field,
                full_two_torsion: criteria.full_two_torsion,
            },
            fiber,
            field_desc: format!("F_{} (p = {p}, w^2 = {})", curve.q(), field.d()),
        })
    }
}

impl Render for CurveCliReport {
    const COMMAND: &'static str = "curve";

    fn text(&self) -> String {
        let mut out = format!(
            "curve: y^2 = x(x-1)(x-a), a = {} over {}\n\
             points: {} ({})\ntrace: {}\nweil polynomial: {}\n\
             supersingular: {}\nstrongly supersingular: {}\n",
            self.a,
            self.field_desc,
            self.point_count,
            self.count_source,
            self.trace,
            self.weil_polynomial,
            yes_no(self.supersingular),
            yes_no(self.strongly_supersingular),
        );
        if let Some(c) = self.frobenius_scalar {
            let _ = writeln!(out, "frobenius scalar: {c}");
        }
        if let Some((n1, n2)) = self.group {
            let _ = writeln!(out, "group structure: Z/{n1} x Z/{n2}");
        }
        if let Some(cert) = &self.certificate {
            let _ = writeln!(
                out,
                "scalar certificate: group ({}, {}) = ker(c - 1) with |1 - c| = {}: verified",
                cert.group.0, cert.group.1, cert.kernel_order
            );
        }
        let _ = writeln!(out, "criteria: {}", self.criteria.tags);
        if let Some(fiber) = &self.fiber {
            let _ = writeln!(
                out,
                "fiber model at {}^{}: scalar {} mod {}^{}, all {} points fixed",
                fiber.ell, fiber.level, fiber.scalar, fiber.ell, fiber.level, fiber.fixed_points
            );
        }
        out
    }
}

#[derive(Serialize)]
struct CensusRowJson {
    a: String,
    point_count: u64,
    trace: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    group: Option<(u64, u64)>,
    criteria: String,
}

/// `census`: every supersingular parameter over F_p^2, with the locus
/// cross-check already enforced by the library.
#[derive(Serialize)]
pub struct CensusCliReport {
    pub p: u64,
    pub q: u64,
    pub parameters: u64,
    pub supersingular_count: u64,
    pub all_strongly_supersingular: bool,
    rows: Vec<CensusRowJson>,
    hasse_locus: Vec<String>,
    pub locus_agrees: bool,
}

impl CensusCliReport {
    pub fn build(p: u64, cap: Option<u64>, threads: usize) -> Result<CensusCliReport> {
        let report = ss_census_with(p, cap.unwrap_or(CENSUS_DEFAULT_CAP), threads)?;
        let rows: Vec<CensusRowJson> = report
            .rows
            .iter()
            .filter(|r| r.weil.supersingular)
            .map(|r| CensusRowJson {
                a: r.a.to_string(),
                point_count: r.weil.point_count,
                trace: r.weil.trace,
                group: r.group,
                criteria: r.criteria.map(|c| c.tags()).unwrap_or_default(),
            })
            .collect();
        let hasse_locus: Vec<String> = report.hasse_roots.iter().map(|z| z.to_string()).collect();
        // ss_census would have failed otherwise; state it explicitly anyway.
        let locus_agrees = rows.iter().map(|r| &r.a).eq(hasse_locus.iter());
        let all_strongly = report
            .rows
            .iter()
            .all(|r| !r.weil.supersingular || r.weil.strongly_supersingular);
        Ok(CensusCliReport {
            p,
            q: p * p,
            parameters: report.rows.len() as u64,
            supersingular_count: rows.len() as u64,
            all_strongly_supersingular: all_strongly,
            rows,
            hasse_locus,
            locus_agrees,
        })
    }

    fn table_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                let (n1, n2) = match r.group {
                    Some((n1, n2)) => (n1.to_string(), n2.to_string()),
                    None => (String::new(), String::new()),
                };
                vec![
                    r.a.clone(),
                    r.point_count.to_string(),
                    r.trace.to_string(),
                    n1,
                    n2,
                    r.criteria.clone(),
                ]
            })
            .collect()
    }
}

const CENSUS_HEADER: [&str; 6] = ["a", "points", "trace", "group_n1", "group_n2", "criteria"];

impl Render for CensusCliReport {
    const COMMAND: &'static str = "census";

    fn text(&self) -> String {
        let mut out = format!(
            "census for p = {} over F_{}: {} parameters, {} supersingular\n",
            self.p, self.q, self.parameters, self.supersingular_count
        );
        out.push_str(&text_table(&CENSUS_HEADER, &self.table_rows()));
        let _ = writeln!(
            out,
            "all supersingular parameters strongly supersingular: {}",
            yes_no(self.all_strongly_supersingular)
        );
        let _ = writeln!(out, "hasse locus agrees: {}", yes_no(self.locus_agrees));
        out
    }

    fn csv(&self) -> Result<String> {
        csv_table(&CENSUS_HEADER, &self.table_rows())
    }
}

/// `hasse`: the polynomial itself, separability, and its roots in F_p and
/// F_p^2.
#[derive(Serialize)]
pub struct HasseCliReport {
    pub p: u64,
    pub polynomial: String,
    pub degree: u64,
    pub separable: bool,
    roots_in_prime_field: Vec<String>,
    roots_in_quadratic_extension: Vec<String>,
}

impl HasseCliReport {
    pub fn build(p: u64) -> Result<HasseCliReport> {
        let h = hasse_polynomial(p)?;
        let base = PrimeField::new(p)?;
        let ext = QuadExtField::new(p)?;
        let prime_roots = roots_in(&h, &base)?;
        let ext_roots = roots_in(&ext.lift_poly(&h), &ext)?;
        Ok(HasseCliReport {
            p,
            polynomial: h.to_string(),
            degree: h.degree().unwrap_or(0) as u64,
            separable: h.is_separable()?,
            roots_in_prime_field: prime_roots.iter().map(|r| r.to_string()).collect(),
            roots_in_quadratic_extension: ext_roots.iter().map(|r| r.to_string()).collect(),
        })
    }
}

impl Render for HasseCliReport {
    const COMMAND: &'static str = "hasse";

    fn text(&self) -> String {
        let join = |roots: &[String]| -> String {
            if roots.is_empty() {
                "none".to_string()
            } else {
                roots.join(", ")
            }
        };
        format!(
            "hasse polynomial for p = {}: {}\ndegree: {}\nseparable: {}\n\
             roots in F_{}: {}\nroots in F_{}: {}\nroot count in F_{}: {} of expected {}\n",
            self.p,
            self.polynomial,
            self.degree,
            yes_no(self.separable),
            self.p,
            join(&self.roots_in_prime_field),
            self.p * self.p,
            join(&self.roots_in_quadratic_extension),
            self.p * self.p,
            self.roots_in_quadratic_extension.len(),
            (self.p - 1) / 2,
        )
    }
}

#[derive(Serialize)]
pub struct ReplayCheck {
    pub name: &'static str,
    pub detail: String,
    pub passed: bool,
}

/// `replay-paper`: the reference computations, re-run end to end. Every
/// check carries a human-readable detail line; any failure flips `passed`
/// (the command then exits with the cross-check code).
#[derive(Serialize)]
pub struct ReplayCliReport {
    pub checks: Vec<ReplayCheck>,
    pub passed: bool,
}

fn run_check(
    checks: &mut Vec<ReplayCheck>,
    name: &'static str,
    f: impl FnOnce() -> Result<String>,
) {
    let (detail, passed) = match f() {
        Ok(detail) => (detail, true),
        Err(e) => (e.to_string(), false),
    };
    checks.push(ReplayCheck {
        name,
        detail,
        passed,
    });
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Result<()> {
    if got != want {
        return Err(Error::CrossCheck(format!(
            "{what}: got {got}, expected {want}"
        )));
    }
    Ok(())
}

impl ReplayCliReport {
    pub fn build() -> Result<ReplayCliReport> {
        let mut checks = Vec::new();

        run_check(&mut checks, "projective fibre cardinalities", || {
            for (ell, level, want) in [(5u64, 2u32, 30u64), (3, 4, 108), (5, 4, 750)] {
                let space = ProjSpace::new(Modulus::new(ell, level)?, 2)?;
                expect_eq(
                    &format!("|P| at ell={ell} n={level}"),
                    space.cardinality().to_u64().unwrap_or(u64::MAX),
                    want,
                )?;
                if space.cardinality().to_u64() <= Some(200) {
                    expect_eq(
                        &format!("enumerated count at ell={ell} n={level}"),
                        space.enumerate()?.len() as u64,
                        want,
                    )?;
                }
            }
            Ok("30, 108, 750 at (5,2), (3,4), (5,4); small ones re-enumerated".into())
        });

        run_check(&mut checks, "orbit walks match the closed form", || {
            for (ell, level) in [(3u64, 2u32), (3, 4), (5, 2), (5, 4), (7, 2)] {
                let p = if ell == 7 { 11 } else { 7 };
                let check = TowerParams::new(p, ell)?.cross_check_level(level)?;
                if !check.passed() {
                    return Err(Error::CrossCheck(format!(
                        "orbit/genus mismatch at ell={ell} n={level}"
                    )));
                }
            }
            Ok("walked orbits and Hurwitz genus equal closed forms at 5 levels".into())
        });

        run_check(&mut checks, "genus spot values", || {
            for (ell, level, want) in [
                (3u64, 2u32, 1u64),
                (3, 4, 37),
                (5, 2, 7),
                (5, 4, 331),
                (7, 2, 17),
            ] {
                expect_eq(
                    &format!("g(ell={ell}, n={level})"),
                    crate::tower::genus_closed_form(ell, level)?.to_string(),
                    want.to_string(),
                )?;
            }
            Ok("g = 1, 37, 7, 331, 17 at the reference levels".into())
        });

        run_check(&mut checks, "tower ratios for p=7, ell=5", || {
            let report = TowerCliReport::build(7, 5, 8)?;
            let ratios: Vec<&str> = report.levels.iter().map(|l| l.ratio.as_str()).collect();
            expect_eq(
                "ratio sequence",
                format!("{ratios:?}"),
                format!("{:?}", ["90/7", "2250/331", "56250/9151", "1406250/233251"]),
            )?;
            expect_eq("limit", report.limit.clone(), "6".to_string())?;
            expect_eq("dv bound", report.dv_bound, 6)?;
            expect_eq("optimal", report.optimal, true)?;
            Ok("ratios 90/7 .. 1406250/233251 with limit 6 = dv bound".into())
        });

        run_check(&mut checks, "census equals hasse locus", || {
            for p in [5u64, 7, 11, 13] {
                let census = CensusCliReport::build(p, None, 1)?;
                expect_eq(
                    &format!("locus agreement at p={p}"),
                    census.locus_agrees,
                    true,
                )?;
                expect_eq(
                    &format!("supersingular count at p={p}"),
                    census.supersingular_count,
                    (p - 1) / 2,
                )?;
            }
            Ok("supersingular sets match the hasse roots for p = 5, 7, 11, 13".into())
        });

        run_check(
            &mut checks,
            "strong supersingularity for p=11 and p=23",
            || {
                for p in [11u64, 23] {
                    let census = CensusCliReport::build(p, None, 1)?;
                    expect_eq(
                        &format!("all strongly supersingular at p={p}"),
                        census.all_strongly_supersingular,
                        true,
                    )?;
                }
                Ok("every supersingular parameter has trace +-2p".into())
            },
        );

        run_check(&mut checks, "reference curve p=7, a=6", || {
            let report = CurveCliReport::build(7, "6", Some((5, 2)), None, false)?;
            expect_eq("point count", report.point_count, 64)?;
            expect_eq("trace", report.trace, -14)?;
            expect_eq(
                "weil polynomial",
                report.weil_polynomial.clone(),
                "(t+7)^2".to_string(),
            )?;
            expect_eq(
                "group",
                format!("{:?}", report.group),
                "Some((8, 8))".to_string(),
            )?;
            let fiber = report.fiber.as_ref().expect("fiber model requested");
            expect_eq("fiber scalar", fiber.scalar.clone(), "18".to_string())?;
            expect_eq("fixed points", fiber.fixed_points.clone(), "30".to_string())?;
            Ok("N = 64, (t+7)^2, group (8, 8), fiber scalar 18 mod 25 fixing all 30".into())
        });

        run_check(&mut checks, "hasse polynomial for p=13", || {
            let report = HasseCliReport::build(13)?;
            expect_eq("separable", report.separable, true)?;
            expect_eq("roots in F_13", report.roots_in_prime_field.len(), 0)?;
            expect_eq(
                "roots in F_169",
                report.roots_in_quadratic_extension.len(),
                6,
            )?;
            Ok("separable, no roots in F_13, all 6 in F_169".into())
        });

        let passed = checks.iter().all(|c| c.passed);
        Ok(ReplayCliReport { checks, passed })
    }
}

impl Render for ReplayCliReport {
    const COMMAND: &'static str = "replay-paper";

    fn text(&self) -> String {
        let mut out = String::from("replaying the reference computations\n");
        for check in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {}: {}",
                if check.passed { "ok" } else { "FAILED" },
                check.name,
                check.detail
            );
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            let _ = writeln!(out, "all {} checks passed", self.checks.len());
        } else {
            let _ = writeln!(out, "{failed} of {} checks failed", self.checks.len());
        }
        out
    }
}
