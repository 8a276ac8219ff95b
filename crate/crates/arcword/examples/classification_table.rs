//! Reproduce the length-6 classification table: one row per class of
//! conf-connected words under shifts, slides, reversal, and commutations.

use arcword::table;

fn main() {
    for len in [4usize, 6] {
        let rows = table::build_table(len, true);
        println!("-- length {len}: {} classes", rows.len());
        print!("{}", table::rows_to_csv(&rows));
    }
}
