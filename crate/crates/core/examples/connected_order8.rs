//! Writes every connected graph on eight vertices as graph6, one per line.
//!
//! Regenerates `data/connected8.g6`:
//!
//!     cargo run --release -p gvcrit --example connected_order8 > crates/core/data/connected8.g6

use std::io::{BufWriter, Write};

use gvcrit::enumeration::{enumerate_graphs, extend_by_vertex, MAX_GENERATED_ORDER};
use gvcrit::graph6;

fn main() -> std::io::Result<()> {
    let seven = enumerate_graphs(MAX_GENERATED_ORDER, false).expect("within the generator cap");
    let out = std::io::stdout();
    let mut out = BufWriter::new(out.lock());
    for g in extend_by_vertex(&seven).iter().filter(|g| g.is_connected()) {
        writeln!(out, "{}", graph6::emit(g))?;
    }
    out.flush()
}
