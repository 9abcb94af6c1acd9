//! Induced path and 2K2 detection.

use recolour::construction::build_base;
use recolour::graph::find_induced;
use recolour::{Graph, PatternKind};

fn report(name: &str, g: &Graph, pattern: &PatternKind) -> recolour::Result<()> {
    match find_induced(g, pattern)? {
        Some(w) => println!("{name}: induced {pattern:?} at {w:?}"),
        None => println!("{name}: no induced {pattern:?}"),
    }
    Ok(())
}

fn main() -> recolour::Result<()> {
    let g = build_base().graph;
    let two_k2: PatternKind = "2k2".parse()?;
    let p5: PatternKind = "p5".parse()?;
    report("G", &g, &two_k2)?;
    report("G", &g, &p5)?;
    report("G", &g, &PatternKind::PathP(4))?;

    // one missing edge is enough to break both properties
    let broken = g.without_edge(0, 5)?;
    report("G - 05", &broken, &two_k2)?;
    report("G - 05", &broken, &p5)?;

    let c6 = Graph::cycle(6)?;
    report("C6", &c6, &two_k2)?;
    report("C6", &c6, &PatternKind::Custom(Graph::path(3).complement()))?;
    Ok(())
}
