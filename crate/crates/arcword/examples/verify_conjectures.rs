//! Exhaustive verification runs: theorem-backed invariants must come back
//! clean; conjectures report counterexample counts.

use arcword::table;

fn main() {
    let r = table::verify_sandwich(6);
    println!("{}: {} checked, {} counterexamples", r.id, r.checked, r.counterexamples.len());
    let r = table::verify_slide_invariance(6);
    println!("{}: {} checked, {} counterexamples", r.id, r.checked, r.counterexamples.len());
    let r = table::verify_vertex_over(8);
    println!("{}: {} checked, {} counterexamples", r.id, r.checked, r.counterexamples.len());
    let r = table::verify_pivots_steady(6).unwrap();
    println!("{}: {} checked, {} counterexamples", r.id, r.checked, r.counterexamples.len());
    let r = table::verify_deg_std_onto(6).unwrap();
    println!("{}: {} checked, {} counterexamples", r.id, r.checked, r.counterexamples.len());
}
