//! Read a graph in the plain edge-list format and print both distributions.
//!
//! cargo run --example graph_file -- path/to/graph.txt

use embdist::graph::io::{graph_to_text, load_graph, parse_graph};
use embdist::graph::Oracle;

const THETA: &str = "v 2\ne 0 1\ne 0 1\ne 0 1\n";

fn main() -> embdist::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => load_graph(path)?,
        None => parse_graph(THETA)?,
    };
    print!("{}", graph_to_text(&g));
    let oracle = Oracle::default();
    println!("genus  {}", oracle.genus(&g)?.to_poly());
    println!("euler  {}", oracle.euler(&g)?.euler.to_poly());
    Ok(())
}
