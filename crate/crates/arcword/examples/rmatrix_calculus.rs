//! R-matrix calculus: the 4x4 intertwiner, its eigenvalues on products of
//! strings, and singular vectors built from irreducible configurations.

use arcword::rep;
use arcword::{arc, QRat, Word};

fn main() {
    let m = rep::rmatrix_2dim(4, 2);
    println!("R(4,2) corner entry: {}", m[0][0]);
    let ev = rep::rmatrix_eigenvalues(0, 2, 0, 0, &QRat::one()).unwrap();
    println!("eigenvalues on [0,2][0,0]: {ev:?}");
    let w: Word = "0220420422".parse().unwrap();
    for c in arc::irreducible_configs(&w) {
        let v = rep::sigma_vector(&w, &c).unwrap();
        let (lead, _) = v.leading_term().unwrap();
        println!("sigma vector for {c}: leading term {lead}, {} monomials", v.terms().count());
        assert!(rep::act_f0(&w, &v).unwrap().is_zero());
    }
    println!("both singular vectors are annihilated by f0");
    let piv = rep::pivots(&"020242".parse().unwrap()).unwrap();
    println!("pivots of 020242: {piv:?}");
}
