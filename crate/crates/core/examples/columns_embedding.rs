//! Drawings on few columns: a planar graph on three columns, K5 on three
//! columns in space, and the transfer back to the plane.
//!
//! cargo run --example columns_embedding

use griddraw::columns::{
    column_count, embed_on_columns, locate_on_columns, partition_from_located, transfer_to_plane,
};
use griddraw::corpus;
use griddraw::graph::{ClassKind, VertexPartition};
use griddraw::mixed::{mixed_color, MixedSpec};
use griddraw::verify::{gp, is_valid_drawing};
use griddraw::Budget;

fn main() -> griddraw::Result<()> {
    let mut rng = corpus::rng(3);
    let g = corpus::random_planar(12, 0.2, &mut rng);
    let c = mixed_color(&g, MixedSpec::new(0, 3)?, &Budget::default())?
        .expect("planar graphs split into three linear forests");
    let p = VertexPartition::all_of_kind(ClassKind::Path, c.classes());
    let dr = embed_on_columns(&g, &p)?;
    println!(
        "planar graph, {} vertices: valid {} on {} columns",
        g.n(),
        is_valid_drawing(&dr),
        column_count(&dr)
    );

    let k5 = corpus::complete(5);
    let p = VertexPartition::all_of_kind(ClassKind::Path, vec![vec![0, 1], vec![2, 3], vec![4]]);
    let located = locate_on_columns(&k5, &p, 3)?;
    println!(
        "K5 in Z^3: gp {} on {} columns",
        gp(&located),
        column_count(&located)
    );
    for (v, pt) in located.points().iter().enumerate() {
        println!("  vertex {v} at {pt}");
    }
    let back = partition_from_located(&located, 3, 3)?;
    for c in &back.classes {
        println!("  recovered {} class {:?}", c.kind, c.vertices);
    }
    let flat = transfer_to_plane(&located)?;
    println!(
        "transferred: valid {} on {} columns",
        is_valid_drawing(&flat),
        column_count(&flat)
    );
    Ok(())
}
