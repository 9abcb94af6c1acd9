//! Exact clique and chromatic numbers.

use recolour::construction::{build_family, cycle_power};
use recolour::graph::{max_clique, ChromaticSearch};
use recolour::Graph;

fn main() -> recolour::Result<()> {
    let graphs = [
        ("C5", Graph::cycle(5)?),
        ("C16^4", cycle_power()),
        ("G", build_family(1)?.graph),
        ("C5 + C16^4", Graph::cycle(5)?.join(&cycle_power())),
    ];
    for (name, g) in &graphs {
        let s = ChromaticSearch::run(g, 64)?;
        println!("{name}: omega = {}, chi = {}", s.clique.len(), s.chromatic_number);
        println!("  clique {:?}", s.clique);
        println!("  colouring {}", s.colouring);
    }

    let g2 = build_family(2)?.graph;
    println!("G_2: omega = {}", max_clique(&g2, 64)?.len());
    Ok(())
}
