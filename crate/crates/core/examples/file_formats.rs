//! Reading and writing edge lists, DIMACS and JSON.

use recolour::construction::build_base;
use recolour::io::{parse_dimacs, parse_edge_list, parse_graph, write_dimacs, write_dot, write_edge_list, GraphFormat};

fn main() -> recolour::Result<()> {
    let base = build_base();
    let g = &base.graph;

    let el = write_edge_list(g);
    println!("edge list, first lines:\n{}", el.lines().take(4).collect::<Vec<_>>().join("\n"));
    assert_eq!(&parse_edge_list(&el)?, g);

    let col = write_dimacs(g);
    println!("\nDIMACS header: {}", col.lines().find(|l| l.starts_with('p')).unwrap());
    assert_eq!(&parse_dimacs(&col)?, g);

    let json = base.to_json()?;
    let back = parse_graph(&json, GraphFormat::Json)?;
    assert_eq!(back.graph(), g);
    println!("\nJSON bundle: {} bytes", json.len());

    let dot = write_dot(g, Some(&base.beta));
    println!("\nDOT, first lines:\n{}", dot.lines().take(4).collect::<Vec<_>>().join("\n"));

    match parse_edge_list("3 2\n0 1\n1 1\n") {
        Err(e) => println!("\nrejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
