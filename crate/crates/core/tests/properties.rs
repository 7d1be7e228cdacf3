mod common;

use num_bigint::BigInt;
use num_rational::BigRational;

use common::*;
use negbase::admissibility::alt_compare_prefix;
use negbase::coding::{code_window, extract_antimorphism};
use negbase::expansion::{alphabet, expand, expand_prefix, ref_string_r};
use negbase::integers::{enumerate_s, zbeta_window, GapStructure};
use negbase::FieldElement;

fn common_prefix(a: &[i64], b: &[i64]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

#[test]
fn right_reference_is_the_left_limit() {
    for nb in [closing(), silver_balanced(), silver_ito_sadahiro(), two()] {
        let b = &nb.base;
        let r = ref_string_r(b, 500).unwrap().periodic().unwrap().prefix(40);
        let mut last = 0;
        for e in 1..=6 {
            let eps = BigRational::new(BigInt::from(1), BigInt::from(10).pow(e));
            let x = b.l_plus_one() - &FieldElement::from_rational(b.field(), eps);
            let (digits, _) = expand_prefix(b, &x, 40).unwrap();
            let n = common_prefix(&digits, &r);
            assert!(n >= last, "{}: agreement shrank at eps = 1e-{e}", nb.name);
            last = n;
        }
        assert!(last >= 5, "{}: only {last} digits agree", nb.name);
    }
}

#[test]
fn expansion_digits_lie_in_the_alphabet() {
    for nb in [closing(), cubic_odd_period(), golden_ito_sadahiro()] {
        let b = &nb.base;
        let a = alphabet(b);
        for i in 0..50 {
            let q = BigRational::new(BigInt::from(i), BigInt::from(50));
            let x = b.l() + &FieldElement::from_rational(b.field(), q);
            let s = expand(b, &x, 5000).unwrap();
            let s = s.periodic().expect("periodic");
            assert!(s.preperiod().iter().chain(s.period()).all(|d| a.contains(d)), "{}: {s}", nb.name);
        }
    }
}

#[test]
fn extremes_bound_every_word_of_s() {
    for nb in [closing(), silver_ito_sadahiro(), two(), cubic_odd_period()] {
        let g = GapStructure::new(&nb.base, &nb.refs, 6);
        for k in 0..=6 {
            for w in enumerate_s(&nb.base, k, &nb.refs) {
                assert_ne!(alt_compare_prefix(&w.0, g.min(k)), Some(std::cmp::Ordering::Less));
                assert_ne!(alt_compare_prefix(&w.0, g.max(k)), Some(std::cmp::Ordering::Greater));
            }
            assert!(g.delta(k).is_positive(), "{}: Delta_{k}", nb.name);
            assert!(g.shapes(k).is_some(), "{}: k = {k}", nb.name);
        }
    }
}

#[test]
fn labels_recover_positions() {
    for (nb, bound) in [(closing(), 25), (silver_balanced(), 25), (silver_ito_sadahiro(), 25)] {
        let b = &nb.base;
        let (window, structure, word) = code_window(b, &nb.refs, &b.int(bound)).unwrap();
        assert_eq!(word.positions(&structure), window.values(), "{}", nb.name);
        for (k, cands) in word.letters().iter().zip(word.candidates()) {
            assert!(cands.contains(k));
        }
    }
}

#[test]
fn antimorphism_reverses_concatenation() {
    let nb = closing();
    let table = extract_antimorphism(&nb.base, &nb.refs, 4).unwrap();
    let (_, _, word) = code_window(&nb.base, &nb.refs, &nb.base.int(20)).unwrap();
    let letters: Vec<usize> = word.letters().iter().copied().filter(|&a| a <= 4).collect();
    for i in 0..letters.len().saturating_sub(6) {
        let (u, v) = (&letters[i..i + 3], &letters[i + 3..i + 6]);
        let uv: Vec<usize> = u.iter().chain(v).copied().collect();
        let mut expect = table.apply(v).unwrap();
        expect.extend(table.apply(u).unwrap());
        assert_eq!(table.apply(&uv).unwrap(), expect);
    }
    assert!(table.images().values().all(|img| !img.is_empty()));
}

#[test]
fn trivial_window_is_the_origin() {
    let nb = plastic();
    let w = zbeta_window(&nb.base, &nb.base.int(100), &nb.refs).unwrap();
    assert_eq!(w.points.len(), 1);
    assert!(w.points[0].value.is_zero());
}
