//! Bounded-degree vertex partitions and linear-forest splits.
//!
//! cargo run --example degree_partition

use griddraw::columns::{degree_partition, embed_on_columns, lovasz_partition};
use griddraw::corpus;
use griddraw::verify::is_valid_drawing;

fn main() -> griddraw::Result<()> {
    let mut rng = corpus::rng(5);
    let g = corpus::random_bounded_degree(40, 7, &mut rng);
    let r = lovasz_partition(&g, &[3, 3])?;
    for (i, part) in r.parts.iter().enumerate() {
        let (h, _) = g.induced(part);
        println!(
            "part {i}: {} vertices, induced max degree {}",
            part.len(),
            h.max_degree()
        );
    }
    println!(
        "{} moves, potential {} -> {} (floor {})",
        r.moves, r.initial_potential, r.final_potential, r.potential_floor
    );

    let p = degree_partition(&g, 2)?;
    println!(
        "max degree {} -> {} linear forests",
        g.max_degree(),
        p.len()
    );
    let dr = embed_on_columns(&g, &p)?;
    println!("column drawing valid: {}", is_valid_drawing(&dr));

    let pet = degree_partition(&corpus::petersen(), 1)?;
    for c in &pet.classes {
        println!("Petersen forest {:?}", c.vertices);
    }
    Ok(())
}
