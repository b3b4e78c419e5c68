//! Checking hand-written drawings and searching a small box for the least gp.
//!
//! cargo run --example verify_drawing

use griddraw::corpus;
use griddraw::lattice::GridPoint;
use griddraw::verify::{drawing_defect, gp, is_planar_drawing, min_gp_bruteforce, GridDrawing};
use griddraw::Budget;

fn main() -> griddraw::Result<()> {
    let k4 = corpus::complete(4);
    let good = GridDrawing::new(
        k4.clone(),
        [[0, 0], [2, 1], [1, 2], [1, 1]]
            .iter()
            .map(|p| GridPoint::from_i64(p))
            .collect(),
    )?;
    println!(
        "K4 nested: defect {:?}, gp {}, planar {}",
        drawing_defect(&good),
        gp(&good),
        is_planar_drawing(&good)?
    );

    let bad = GridDrawing::new(
        corpus::path(3),
        [[0, 0], [2, 2], [1, 1]]
            .iter()
            .map(|p| GridPoint::from_i64(p))
            .collect(),
    )?;
    println!("path through its own vertex: {:?}", drawing_defect(&bad));

    for n in [3, 4, 5] {
        let g = corpus::complete(n);
        let best = min_gp_bruteforce(&g, 4, &Budget::default())?;
        println!("K{n}: least gp in a 4x4 box {best:?}");
    }
    Ok(())
}
