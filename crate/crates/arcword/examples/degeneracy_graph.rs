//! The degeneracy graph on six points: 57 vertices, the cyclic orbit
//! decomposition, and the trivial-submodule dimension at each vertex.

use arcword::degeneracy;

fn main() {
    let g = degeneracy::degeneracy_graph(3, false).unwrap();
    println!("DG(6): {} vertices, {} edges", g.vertices.len(), g.edges.len());
    for (dim, sizes) in g.orbit_sizes_by_dim().iter().rev() {
        println!("dim {dim}: orbit sizes {sizes:?}");
    }
    let mut seen = std::collections::BTreeSet::new();
    for k in 0..g.vertices.len() {
        if g.vertices[k].dim() == 1 && seen.insert(g.orbits[k]) {
            println!(
                "one-dimensional orbit of {}: h = {}",
                g.vertices[k].generic_word(),
                g.h_labels[k]
            );
        }
    }
}
