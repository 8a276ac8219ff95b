//! Exact trivial-submodule dimensions with bounds, methods, and rule traces.

use arcword::rep::{self, HOptions};
use arcword::Word;

fn main() {
    for s in ["02", "0022", "020242", "22402464", "0220420422", "0202024242"] {
        let w: Word = s.parse().unwrap();
        let report = rep::h_report(&w, &HOptions::default()).unwrap();
        let rule = rep::h_rules(&w)
            .map(|(_, r)| r)
            .unwrap_or("needs linear algebra");
        println!(
            "h({w}) = {}   bounds [{}, {}]   |Conf| = {}   fast rule: {rule}",
            report.h, report.lower, report.upper, report.conf_count
        );
    }
    // dimensions of homomorphism spaces between words reduce to h
    let e = "0220".parse::<Word>().unwrap();
    println!("dim End(0220) = {}", rep::hom_dim(&e, &e));
    println!(
        "dim Hom(2002, 0220) = {}",
        rep::hom_dim(&"2002".parse().unwrap(), &e)
    );
}
