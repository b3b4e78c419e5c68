//! The nine-column family in the plane and its visible points.
//!
//! cargo run --example column_family

use griddraw::io::to_json;
use griddraw::locator::{
    build_column_family, build_complete_family, cross_gcd_bound, max_cross_gcd,
    select_visible_points,
};

fn main() -> griddraw::Result<()> {
    let bare = build_column_family(9, 2, &[])?;
    let ranks: Vec<String> = bare.ranks.iter().map(|r| r[0].to_string()).collect();
    println!("ranks: [{}]  modulus {}", ranks.join(", "), bare.modulus);
    for c in &bare.last[2].constraints {
        println!("column 2: x = {} (mod {})", c.residue, c.modulus);
    }

    let fam = build_complete_family(9, 2)?;
    println!("fixup primes: {:?}", fam.fixups.keys().collect::<Vec<_>>());
    let cols = select_visible_points(&fam, 3);
    println!(
        "largest cross-column gcd {} (bound {})",
        max_cross_gcd(&cols),
        cross_gcd_bound(9, 2)
    );
    print!("{}", to_json(&bare)?);
    Ok(())
}
