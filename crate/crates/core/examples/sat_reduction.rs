//! From a 3-CNF formula to a graph whose mixed colorings encode assignments.
//!
//! cargo run --example sat_reduction

use griddraw::mixed::{build_formula_graph, decode_assignment, mixed_color, parse_dimacs, Variant};
use griddraw::Budget;

const CNF: &str = "c variant: one-in-three
p cnf 4 3
1 2 -3 0
-1 3 4 0
2 -4 3 0
";

fn main() -> griddraw::Result<()> {
    let (f, named) = parse_dimacs(CNF)?;
    for variant in [named.unwrap_or(Variant::OneInThree), Variant::Nae] {
        let fg = build_formula_graph(&f, variant);
        let c = mixed_color(&fg.graph, variant.spec(), &Budget::default())?;
        println!(
            "{variant}: graph on {} vertices, {} edges, {} coloring",
            fg.graph.n(),
            fg.graph.edge_count(),
            variant.spec()
        );
        match c {
            Some(c) => {
                let a = decode_assignment(&c, &fg)?;
                println!(
                    "  decoded {a:?}, satisfies: {}",
                    f.satisfied_by(&a, variant)
                );
            }
            None => println!(
                "  no coloring; brute force agrees: {}",
                f.brute_force(variant).is_none()
            ),
        }
    }
    Ok(())
}
