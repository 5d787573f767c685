//! Projectivised torsion modules P((Z/l^n)^b): cardinality, canonical
//! points, and the level-reduction fibres.
//!
//! ```text
//! cargo run --example projective_spaces
//! ```

use std::collections::HashMap;

use tower_forge::projective::ProjSpace;
use tower_forge::residue::Modulus;
use tower_forge::Result;

fn main() -> Result<()> {
    // Every point of P((Z/9)^2), in enumeration order. Each is stored by its
    // canonical representative: the first unit coordinate is scaled to 1,
    // and the coordinates before it are divisible by 3.
    let space = ProjSpace::new(Modulus::new(3, 2)?, 2)?;
    println!(
        "P((Z/9)^2) has {} points (closed form (3+1)*3^(2-1) = 12):",
        space.cardinality()
    );
    for point in space.enumerate()? {
        println!("  {point}");
    }

    // The cardinality is exact at any size; enumeration is budgeted. This
    // space has about 6.7 million points and streams without being stored.
    let big = ProjSpace::new(Modulus::new(7, 4)?, 3)?;
    println!("\nP((Z/7^4)^3) has {} points;", big.cardinality());
    let streamed = big.points()?.count();
    println!("streaming the enumerator visits {streamed} — they agree.");

    // Reducing coordinates mod 3^2 maps P((Z/27)^2) onto P((Z/9)^2), and
    // every fibre of that reduction has exactly l^(b-1) = 3 points.
    let upstairs = ProjSpace::new(Modulus::new(3, 3)?, 2)?;
    let mut fibre_sizes: HashMap<_, u32> = HashMap::new();
    for point in upstairs.points()? {
        *fibre_sizes.entry(point.reduce_level()?).or_insert(0) += 1;
    }
    let all_three = fibre_sizes.values().all(|&size| size == 3);
    println!(
        "\nreduction P((Z/27)^2) -> P((Z/9)^2): {} fibres, every one of size 3: {}",
        fibre_sizes.len(),
        all_three
    );
    assert!(all_three);
    assert_eq!(fibre_sizes.len(), 12);
    Ok(())
}
