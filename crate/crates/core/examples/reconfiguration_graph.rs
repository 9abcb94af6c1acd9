//! Explicit reconfiguration graphs and the mixing question on small graphs.

use recolour::reconfig::{build_reconfig, is_mixing, neighbours};
use recolour::{Colouring, Graph, Limits};

fn main() -> recolour::Result<()> {
    let limits = Limits::default();
    let cases = [
        ("K2", Graph::complete(2), 3),
        ("K3", Graph::complete(3), 3),
        ("K3", Graph::complete(3), 4),
        ("C4", Graph::cycle(4)?, 2),
        ("C4", Graph::cycle(4)?, 3),
        ("C5", Graph::cycle(5)?, 3),
        ("P4", Graph::path(4), 3),
    ];
    println!("{:<4} {:>2} {:>6} {:>6} {:>8} {:>6}", "G", "k", "nodes", "edges", "isolated", "comps");
    for (name, g, k) in &cases {
        let r = build_reconfig(g, *k, &limits)?;
        let v = is_mixing(g, *k, &limits)?;
        println!(
            "{:<4} {:>2} {:>6} {:>6} {:>8} {:>6}",
            name,
            k,
            r.node_count(),
            r.edge_count(),
            r.isolated_nodes().len(),
            v.components.unwrap_or(0)
        );
    }

    let c5 = Graph::cycle(5)?;
    let verdict = is_mixing(&c5, 3, &limits)?;
    println!("\nC5 with 3 colours:\n{}", serde_json::to_string_pretty(&verdict)?);

    let c = Colouring::parse("12123", 4)?;
    let next: Vec<String> = neighbours(&c5, &c)?.map(|d| d.to_string()).collect();
    println!("neighbours of {c} in R_4(C5): {}", next.join(" "));
    Ok(())
}
