//! A planar, primitive grid drawing whose coordinates encode an optimal
//! coloring. Writes `proper.svg` to the system temp directory.
//!
//! cargo run --example proper_planar

use griddraw::corpus;
use griddraw::planar::{parity_coloring, proper_drawing};
use griddraw::svg::render_svg;
use griddraw::verify::is_proper;
use griddraw::Budget;

fn main() -> griddraw::Result<()> {
    let mut rng = corpus::rng(11);
    let g = corpus::random_planar(10, 0.3, &mut rng);
    let (dr, c, report) = proper_drawing(&g, &Budget::default())?;
    let parity = parity_coloring(&dr)?;
    println!(
        "{} vertices, {} edges, {} colors",
        g.n(),
        g.edge_count(),
        c.num_colors()
    );
    println!("proper: {}", is_proper(&dr)?);
    println!("parity colors match: {}", parity == c);
    println!(
        "shear {}, scales {} x {}, primes {:?}, modulus {}, box {} x {}",
        report.shear,
        report.x_scale,
        report.y_scale,
        report.primes,
        report.modulus,
        report.width,
        report.height
    );
    let path = std::env::temp_dir().join("proper.svg");
    std::fs::write(&path, render_svg(&dr)?)?;
    println!("wrote {}", path.display());
    Ok(())
}
