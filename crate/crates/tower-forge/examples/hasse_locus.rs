//! The Hasse polynomial and the supersingular locus it cuts out.
//!
//! H_p(t) is the degree-(p-1)/2 polynomial whose coefficients are the
//! squared binomial coefficients binom((p-1)/2, i)^2 mod p. A Legendre
//! parameter a gives a supersingular curve exactly when H_p(a) = 0, so its
//! roots in F_p^2 are the supersingular locus. The polynomial is separable
//! and avoids the degenerate parameters 0 and 1, so the locus always has
//! exactly (p-1)/2 points.
//!
//! ```text
//! cargo run --example hasse_locus
//! ```

use tower_forge::field::{roots_in, FieldElem, PrimeField, QuadExtField};
use tower_forge::legendre::{hasse_polynomial, supersingular_locus};
use tower_forge::Result;

fn main() -> Result<()> {
    for p in [5u64, 7, 11, 13, 17, 19, 23] {
        let h = hasse_polynomial(p)?;
        println!("p = {p}: H(t) = {h}");

        let base = PrimeField::new(p)?;
        let prime_roots = roots_in(&h, &base)?;
        let locus = supersingular_locus(p)?;
        let shown: Vec<String> = locus.iter().map(|z| z.to_string()).collect();
        println!(
            "  separable: {}, roots in F_{p}: {}, locus in F_{}: {}",
            h.is_separable()?,
            prime_roots.len(),
            p * p,
            shown.join(", ")
        );

        // The locus is closed under the Frobenius x -> x^p: roots outside
        // F_p come in conjugate pairs.
        let ext = QuadExtField::new(p)?;
        for z in &locus {
            assert!(locus.contains(&z.frobenius()), "locus not Frobenius-stable");
            assert!(!z.is_zero() && *z != ext.one(), "degenerate parameter");
        }
        let conjugate_pairs = locus.iter().filter(|z| !z.in_prime_field()).count() / 2;
        println!(
            "  {} rational roots, {} conjugate pairs, {} total = (p-1)/2",
            prime_roots.len(),
            conjugate_pairs,
            locus.len()
        );
        assert_eq!(locus.len() as u64, (p - 1) / 2);
    }

    // p = 13 is the smallest prime where the locus avoids F_13 entirely.
    let locus13 = supersingular_locus(13)?;
    assert!(locus13.iter().all(|z| !z.in_prime_field()));
    println!("\nfor p = 13 every supersingular parameter lies strictly in F_169.");
    Ok(())
}
