//! Build the 16p-vertex construction and check every claim about it.
//!
//!     cargo run --release --example construct_and_verify -- 2

use recolour::construction::{build_family, verify};
use recolour::{Error, Limits};

fn main() -> recolour::Result<()> {
    let p: usize = match std::env::args().nth(1) {
        Some(arg) => arg.parse().map_err(|_| Error::InvalidInput(format!("p must be a positive integer, got {arg:?}")))?,
        None => 1,
    };
    let instance = build_family(p)?;
    println!("G_{p}: {} vertices, {} edges", instance.graph.n(), instance.graph.m());
    println!("alpha = {}", instance.alpha);
    println!("beta  = {}", instance.beta);

    let report = verify(&instance, &Limits::default());
    println!("{report}");
    if !report.passed {
        std::process::exit(3);
    }
    Ok(())
}
