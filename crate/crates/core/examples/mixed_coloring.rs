//! Mixed colorings with normal and path colors, and the clique reduction.
//!
//! cargo run --example mixed_coloring

use griddraw::corpus;
use griddraw::graph::chromatic_number;
use griddraw::mixed::{mixed_color, reduce_add_cliques, MixedSpec};
use griddraw::Budget;

fn main() -> griddraw::Result<()> {
    let budget = Budget::default();
    for (name, g) in [
        ("K3", corpus::complete(3)),
        ("K4", corpus::complete(4)),
        ("K5", corpus::complete(5)),
        ("Petersen", corpus::petersen()),
    ] {
        for (a, b) in [(1, 1), (0, 2), (2, 1)] {
            let spec = MixedSpec::new(a, b)?;
            match mixed_color(&g, spec, &budget)? {
                Some(c) => println!("{name} {spec}: {:?}", c.colors),
                None => println!("{name} {spec}: none"),
            }
        }
    }

    let g = corpus::cycle(5);
    let spec = MixedSpec::new(1, 1)?;
    let h = reduce_add_cliques(&g, spec)?;
    let (chi, _) = chromatic_number(&g, &budget)?;
    let ok = mixed_color(&h, spec, &budget)?.is_some();
    println!(
        "C5: chromatic number {chi}; reduced graph on {} vertices is {spec}-colorable: {ok}",
        h.n()
    );
    Ok(())
}
