//! q-characters: the trivial-factor count two ways, composition-factor
//! peeling, and the overpartition count of two-letter word classes.

use arcword::{qchar, Word};

fn main() {
    for s in ["0022", "0224", "00222244"] {
        let w: Word = s.parse().unwrap();
        println!(
            "h_char({w}) = {} (coefficient) = {} (closed form)",
            qchar::h_char_coeff(&w),
            qchar::h_char_closed(&w)
        );
    }
    let w: Word = "0246".parse().unwrap();
    println!("composition factors of {w}:");
    for f in qchar::peel_composition_factors(&w).unwrap() {
        println!("  {f}");
    }
    let m = qchar::EllMonomial::var(0, 1).mul(&qchar::EllMonomial::var(2, 2)).mul(&qchar::EllMonomial::var(4, 1));
    println!("dominant factorization of {m}: {}", qchar::dominant_factorize(&m).unwrap());
    let counts: Vec<u64> = (0..=8).map(qchar::overpartition_class_count).collect();
    println!("two-letter class counts by degree: {counts:?}");
}
