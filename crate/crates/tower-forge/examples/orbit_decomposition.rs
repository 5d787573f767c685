//! Orbit decomposition of a monodromy matrix acting on P((Z/l^n)^2).
//!
//! The tame monodromy of the Legendre family acts on torsion through
//! [1 2; 0 1]; its orbit type at even levels has a closed form, and this
//! example recomputes it by walking every orbit.
//!
//! ```text
//! cargo run --example orbit_decomposition
//! ```

use tower_forge::monodromy::{classify_even_level, MonodromyMatrix, OrbitDecomposition};
use tower_forge::residue::Modulus;
use tower_forge::Result;

fn main() -> Result<()> {
    // Small enough to print in full: l = 3, n = 2.
    let modulus = Modulus::new(3, 2)?;
    let matrix = MonodromyMatrix::legendre(&modulus);
    let decomposition = OrbitDecomposition::compute(&matrix)?;
    println!("orbits of {matrix:?} on P((Z/9)^2):");
    for orbit in decomposition.orbits() {
        let walk: Vec<String> = orbit.iter().map(|p| p.to_string()).collect();
        println!("  length {:>2}: {}", orbit.len(), walk.join(" -> "));
    }

    // The summary is the multiset of orbit lengths — exactly the datum the
    // Hurwitz formula consumes.
    let summary = decomposition.summary();
    println!("orbit type: {summary}");
    println!(
        "mass {} = (l+1) l^(n-1), orbits {}, ramification contribution {}",
        summary.total_mass(),
        summary.orbit_count(),
        summary.ramification_contribution()
    );

    // At every even level the type matches the closed form.
    for (ell, level) in [(3u64, 2u32), (3, 4), (5, 2), (5, 4), (7, 2), (7, 4)] {
        let modulus = Modulus::new(ell, level)?;
        let walked = OrbitDecomposition::compute(&MonodromyMatrix::legendre(&modulus))?.summary();
        let closed = classify_even_level(ell, level)?;
        println!(
            "l = {ell}, n = {level}: walked {walked}, closed form {closed}, equal: {}",
            walked == closed
        );
        assert_eq!(walked, closed);
    }

    // Any invertible matrix works, not just the Legendre generator; a
    // scalar matrix acts trivially, so every orbit has length 1.
    let modulus = Modulus::new(5, 2)?;
    let custom = MonodromyMatrix::parse(&modulus, "2,0,0,2")?;
    let trivial = OrbitDecomposition::compute(&custom)?.summary();
    println!("scalar matrix {custom:?} has orbit type {trivial}");
    Ok(())
}
