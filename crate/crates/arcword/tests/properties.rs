//! Property-based invariants over randomly generated inputs.

use proptest::prelude::*;

use arcword::scalar::{QRat, ZPoly};
use arcword::word::Word;
use arcword::{arc, qchar};

fn small_poly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| ZPoly::from_coeffs(&c))
}

fn small_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(-3i64..=4, 0..9)
        .prop_map(|v| Word::new(v.into_iter().map(|a| 2 * a).collect()).unwrap())
}

proptest! {
    #[test]
    fn qrat_inverse_roundtrip(a in small_poly(), b in small_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let x = QRat::new(a, b);
        prop_assert!( (&x * &x.inv()).is_one());
        prop_assert!( (&(&x * &x.inv()) * &QRat::one()).is_one());
    }

    #[test]
    fn qrat_field_identities(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let x = QRat::new(a, b.clone());
        let y = &QRat::q_pow(2) + &QRat::from_int(3);
        // distributivity against a fixed nonzero scalar
        let lhs = &(&x + &y) * &y;
        let rhs = &(&x * &y) + &(&y * &y);
        prop_assert_eq!(lhs, rhs);
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn slides_compose_to_a_shift(w in small_word()) {
        prop_assume!(!w.is_empty());
        let mut v = w.clone();
        for _ in 0..w.len() {
            v = v.slide().unwrap();
        }
        prop_assert_eq!(v, w.shifted(4));
    }

    #[test]
    fn omega_is_an_involution_mod_shift(w in small_word()) {
        prop_assert_eq!(w.omega().omega().normalize_shift(), w.normalize_shift());
    }

    #[test]
    fn intersection_polynomial_is_slide_invariant(w in small_word()) {
        prop_assume!(w.len() % 2 == 0 && !w.is_empty());
        let p = arc::intersection_polynomial(&w);
        prop_assert_eq!(&arc::intersection_polynomial(&w.slide().unwrap()), &p);
        // reversal also preserves it
        prop_assert_eq!(&arc::intersection_polynomial(&w.omega()), &p);
        // p(1) counts configurations, p(0) the irreducible ones
        prop_assert_eq!(p.iter().sum::<i64>(), arc::all_configs(&w).len() as i64);
        if !p.is_empty() {
            prop_assert_eq!(p[0], arc::irreducible_configs(&w).len() as i64);
        }
    }

    #[test]
    fn character_bound_is_permutation_invariant(w in small_word(), seed in 0u64..1000) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut letters = w.letters().to_vec();
        letters.shuffle(&mut rng);
        let shuffled = Word::new(letters).unwrap();
        prop_assert_eq!(qchar::h_char_coeff(&w), qchar::h_char_coeff(&shuffled));
        prop_assert_eq!(qchar::h_char_coeff(&w), qchar::h_char_closed(&w));
    }

    #[test]
    fn gap_parts_partition_the_content(w in small_word()) {
        let parts = w.gap_factorize();
        let mut merged: Vec<i64> = parts.iter().flat_map(|p| p.letters().to_vec()).collect();
        merged.sort_unstable();
        let mut expect = w.letters().to_vec();
        expect.sort_unstable();
        prop_assert_eq!(merged, expect);
    }

    #[test]
    fn standard_config_decides_nonemptiness(w in small_word()) {
        prop_assume!(w.len() % 2 == 0);
        let all = arc::all_configs(&w);
        prop_assert_eq!(arc::standard_config(&w).is_some(), !all.is_empty());
        if let Some(std) = arc::standard_config(&w) {
            prop_assert!(all.contains(&std));
        }
    }
}
