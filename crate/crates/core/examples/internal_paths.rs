// Internal paths of a small graph, and what subdividing each edge does to
// the adjacency radius.

use hoffman_limits::graph::{edges_on_internal_paths, internal_paths, Graph};
use hoffman_limits::spectral::{alpha_radius, DEFAULT_TOL};

pub fn run_example() -> hoffman_limits::Result<()> {
    // two triangles joined by a path of length 3, with a pendant vertex
    let g: Graph = "9; 0-1,1-2,2-0,2-3,3-4,4-5,5-6,6-7,7-5,0-8".parse()?;
    for p in internal_paths(&g) {
        println!("{:?} path {:?}, length {}", p.kind, p.vertices, p.len());
    }
    let internal = edges_on_internal_paths(&g);
    let rho = alpha_radius(&g, 0.0, DEFAULT_TOL)?;
    println!("rho = {rho:.15}");
    for e in g.edges() {
        let s = alpha_radius(&g.subdivide_edge(e)?, 0.0, DEFAULT_TOL)?;
        let on = if internal.contains(&e) { "internal" } else { "other" };
        println!("  subdivide {}-{} ({on:>8}): {s:.15}  change {:+.3e}", e.0, e.1, s - rho);
    }
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
