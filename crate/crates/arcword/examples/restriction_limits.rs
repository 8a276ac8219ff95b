//! Generic singular vectors and hyperplane restriction: different chain
//! orders degenerate to different lines of the trivial-submodule space.

use arcword::degeneracy;
use arcword::rep::CatalanBasis;
use arcword::{arc, Word};

fn main() {
    let w: Word = "020242".parse().unwrap();
    let c = arc::standard_config(&w).unwrap();
    println!("standard configuration of {w}: {c}");
    let v = degeneracy::generic_vector(&c);
    let basis = CatalanBasis::new(3);
    println!("generic vector coordinates (Catalan basis):");
    for (k, p) in v.in_basis(&basis).iter().enumerate() {
        println!("  [{k}] {p}");
    }
    let r1 = degeneracy::restrict(&v, 2, 1, 2).unwrap();
    println!("after u2 = q^2 u1: nonzero coordinates at {:?}",
        r1.in_basis(&basis).iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(k, _)| k).collect::<Vec<_>>());
    let r2 = degeneracy::restrict(&v, 3, 1, 0).unwrap();
    println!("after u3 = u1:     nonzero coordinates at {:?}",
        r2.in_basis(&basis).iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(k, _)| k).collect::<Vec<_>>());
    let span = degeneracy::restriction_chain_span(&w, &c).unwrap();
    println!("span of all chain limits: {span} = h({w})");
}
