//! Frozen colourings: every colour is seen from every vertex, so no single
//! vertex can be recoloured.

use recolour::construction::build_base;
use recolour::reconfig::{component_of, find_frozen, ComponentExploration};
use recolour::Graph;

fn main() -> recolour::Result<()> {
    // the 6-cycle has a frozen 3-colouring for each ordering of the colours
    let c6 = Graph::cycle(6)?;
    let s = find_frozen(&c6, 3, usize::MAX, 1_000_000)?;
    println!("C6, k=3: {} frozen, exhaustive={}", s.frozen.len(), s.exhaustive);
    for c in &s.frozen {
        println!("  {c}");
    }

    let g = build_base().graph;
    let first = find_frozen(&g, 8, 1, 10_000_000)?;
    println!("G, k=8: first frozen colouring {} after {} nodes", first.witness.as_ref().unwrap(), first.nodes);

    let all = find_frozen(&g, 8, usize::MAX, 10_000_000)?;
    println!("G, k=8: {} frozen colourings (exhaustive={}, {} nodes)", all.frozen.len(), all.exhaustive, all.nodes);

    let none = find_frozen(&g, 7, 1, 10_000_000)?;
    println!("G, k=7: {} frozen colourings (exhaustive={})", none.frozen.len(), none.exhaustive);

    // an isolated node of R_8(G)
    if let ComponentExploration::ExploredFully { size, frozen } = component_of(&g, &build_base().beta, 10)? {
        println!("component of beta: size {size}, frozen {frozen}");
    }
    Ok(())
}
