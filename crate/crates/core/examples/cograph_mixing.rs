//! P4-free graphs are (k+1)-mixing, while complete graphs are not k-mixing.

use recolour::graph::{chromatic_number, find_induced};
use recolour::reconfig::is_mixing;
use recolour::{Graph, Limits, PatternKind};

fn main() -> recolour::Result<()> {
    let limits = Limits::default();
    let n = 5;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let (mut cographs, mut mixing) = (0, 0);
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges)?;
        if find_induced(&g, &PatternKind::PathP(4))?.is_some() {
            continue;
        }
        let k = chromatic_number(&g, 64)?;
        cographs += 1;
        if is_mixing(&g, k as u32 + 1, &limits)?.connected {
            mixing += 1;
        }
    }
    println!("labelled P4-free graphs on {n} vertices: {cographs}, (chi+1)-mixing: {mixing}");

    for n in 2..=5 {
        let v = is_mixing(&Graph::complete(n), n as u32, &limits)?;
        println!("K{n} with {n} colours: connected={} components={:?}", v.connected, v.components);
    }
    Ok(())
}
