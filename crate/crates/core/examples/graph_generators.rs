//! Build the three graph families and write one as an edge list.

use kuramoto_landscape::graph::{read_edge_list, write_edge_list, GeneratorSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in ["complete:12", "circulant:100,30", "random:60,0.79,1"] {
        let spec: GeneratorSpec = spec.parse()?;
        let g = spec.build()?;
        println!(
            "{spec:<18} n={:<4} edges={:<5} min degree {:<3} mu={:.4} connected={}",
            g.n(),
            g.edge_count(),
            g.min_degree(),
            g.min_degree_fraction(),
            g.is_connected()
        );
    }
    let g: GeneratorSpec = "circulant:8,2".parse()?;
    let text = write_edge_list(&g.build()?);
    print!("{text}");
    assert_eq!(read_edge_list(&text)?, g.build()?);
    Ok(())
}
