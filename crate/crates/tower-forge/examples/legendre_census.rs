//! A census of every supersingular Legendre curve over one F_p^2.
//!
//! For each parameter a in F_q minus {0, 1} the census counts the points of
//! y^2 = x(x-1)(x-a) over F_q, flags the supersingular curves (trace 0 mod
//! p), and cross-checks the whole picture: the parameters found by counting
//! must be exactly the roots of the Hasse polynomial, and every one of them
//! must be *strongly* supersingular — trace exactly +-2p, Frobenius a
//! scalar integer c, and the rational points a full (Z/|1-c|)^2.
//!
//! ```text
//! cargo run --example legendre_census
//! ```

use tower_forge::legendre::{ss_census, trace_histogram};
use tower_forge::Result;

fn main() -> Result<()> {
    let p = 11u64;
    let report = ss_census(p)?;
    println!(
        "census for p = {p}: {} parameters over F_{}",
        report.rows.len(),
        p * p
    );

    println!(
        "\nsupersingular rows (criteria: (1) p = -1 mod 12, (2) a in F_p, (3) full 2-torsion):"
    );
    for row in &report.rows {
        if !row.weil.supersingular {
            continue;
        }
        let (n1, n2) = row.group.expect("within group budget");
        let tags = row.criteria.expect("criteria evaluated").tags();
        println!(
            "  a = {:<8} points = {:<4} trace = {:<4} group = Z/{n1} x Z/{n2}  {tags}",
            row.a.to_string(),
            row.weil.point_count,
            row.weil.trace
        );
        assert!(row.weil.strongly_supersingular);
    }

    // The same parameters, straight from the polynomial side.
    let roots: Vec<String> = report.hasse_roots.iter().map(|z| z.to_string()).collect();
    println!("\nhasse locus: {}", roots.join(", "));
    assert_eq!(report.supersingular_params(), report.hasse_roots);

    // The trace spectrum of the whole family: supersingular mass sits at
    // +-2p, everything else spreads over the ordinary traces (all = q + 1
    // mod 4, since a Legendre curve carries full 2-torsion).
    println!(
        "\ntrace histogram over all {} parameters:",
        report.rows.len()
    );
    for (trace, count) in trace_histogram(&report) {
        println!("  t = {trace:>4}: {count} curves");
        assert_eq!(trace.rem_euclid(4), ((p * p + 1) % 4) as i64);
    }
    Ok(())
}
