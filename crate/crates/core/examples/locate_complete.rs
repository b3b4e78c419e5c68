//! Locating complete graphs from colorings, and reading a coloring back off
//! the coordinates.
//!
//! cargo run --example locate_complete

use griddraw::corpus;
use griddraw::graph::Coloring;
use griddraw::locator::{locate_from_coloring, modular_coloring};
use griddraw::verify::{gp, is_valid_drawing};

fn main() -> griddraw::Result<()> {
    for (n, q, d) in [(5, 3, 2), (9, 3, 2), (4, 2, 2), (8, 2, 3)] {
        let g = corpus::complete(n);
        let c = Coloring::new((0..n).collect());
        let dr = locate_from_coloring(&g, &c, q, d)?;
        let back = modular_coloring(&dr, q)?;
        println!(
            "K{n} in Z^{d}, q = {q}: valid {}, gp {}, coordinate coloring proper {}",
            is_valid_drawing(&dr),
            gp(&dr),
            back.is_proper(&g)
        );
        if n == 5 {
            for (v, p) in dr.points().iter().enumerate() {
                println!("  vertex {v} at {p}");
            }
        }
    }
    Ok(())
}
