//! Lattice points on segments and a small Chinese-remainder system.
//!
//! cargo run --example segment_points

use griddraw::lattice::{
    crt_solve, segment_lattice_points, segment_point_count, Congruence, GridPoint, ResidueSystem,
};

fn main() -> griddraw::Result<()> {
    let a = GridPoint::from_i64(&[0, 0]);
    let b = GridPoint::from_i64(&[6, 4]);
    let pts = segment_lattice_points(&a, &b)?;
    println!(
        "segment {a} - {b}: {} lattice points",
        segment_point_count(&a, &b)?
    );
    for p in &pts {
        println!("  {p}");
    }

    let c = GridPoint::from_i64(&[1, -2, 5]);
    let d = GridPoint::from_i64(&[4, 7, -1]);
    println!(
        "segment {c} - {d}: {} lattice points",
        segment_point_count(&c, &d)?
    );

    let rs = ResidueSystem::new(vec![
        Congruence::new(4, 0)?,
        Congruence::new(3, 1)?,
        Congruence::new(5, 0)?,
        Congruence::new(7, 0)?,
    ]);
    let sol = crt_solve(&rs)?;
    println!("x = {} (mod {})", sol.value, sol.modulus);

    let clash = ResidueSystem::new(vec![Congruence::new(4, 1)?, Congruence::new(6, 2)?]);
    println!("inconsistent system: {}", crt_solve(&clash).unwrap_err());
    Ok(())
}
