//! Arc configurations of a word by class: all, Catalan, irreducible,
//! steady, standard, with the intersection polynomial.

use arcword::{arc, Word};

fn main() {
    let w: Word = "0220420422".parse().unwrap();
    println!("word {w}");
    let all = arc::all_configs(&w);
    println!("|Conf| = {}", all.len());
    println!("catalan: {:?}", arc::catalan_configs(&w));
    println!("irreducible:");
    for c in arc::irreducible_configs(&w) {
        println!("  {c}   left ends {}", arc::left_end_map(&c));
    }
    println!("steady:");
    for c in arc::steady_configs(&w) {
        println!("  {c}");
    }
    println!("standard: {}", arc::standard_config(&w).unwrap());
    println!(
        "intersection polynomial: {}",
        arc::poly_to_string(&arc::intersection_polynomial(&w))
    );
    for b in [1i64, 3, 5] {
        println!("arcs of color {b}: {}", arc::arc_count_by_color(&w, b));
    }
}
