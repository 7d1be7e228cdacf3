#![allow(dead_code)]

use std::collections::BTreeSet;

use negbase::admissibility::{is_admissible, RefStrings};
use negbase::digits::{Digit, DigitString};
use negbase::expansion::alphabet;
use negbase::integers::gamma;
use negbase::serial::parse_base;
use negbase::{Base, FieldElement};

pub struct NamedBase {
    pub name: &'static str,
    pub base: Base,
    pub refs: RefStrings,
}

pub fn named(name: &'static str, minpoly: &str, iso: &str, l: &str) -> NamedBase {
    let base = parse_base(minpoly, iso, l).unwrap_or_else(|e| panic!("{name}: {e}"));
    let refs = RefStrings::compute(&base, 500).unwrap_or_else(|e| panic!("{name}: {e}"));
    NamedBase { name, base, refs }
}

pub fn closing() -> NamedBase {
    named("cubic x^3-3x^2-4x-2", "-2,-4,-3,1", "4,5", "-1/2")
}

pub fn two() -> NamedBase {
    named("beta=2", "-2,1", "1,3", "-1/2")
}

pub fn three() -> NamedBase {
    named("beta=3", "-3,1", "2,4", "-1/2")
}

pub fn silver_balanced() -> NamedBase {
    named("silver, l=-1/2", "-1,-2,1", "2,3", "-1/2")
}

pub fn silver_ito_sadahiro() -> NamedBase {
    named("silver, l=-b/(b+1)", "-1,-2,1", "2,3", "-b/(b+1)")
}

pub fn golden_ito_sadahiro() -> NamedBase {
    named("golden, l=-b/(b+1)", "-1,-1,1", "1,2", "-b/(b+1)")
}

pub fn cubic_odd_period() -> NamedBase {
    named("cubic x^3-6x^2-3", "-3,0,-6,1", "6,7", "-1/2")
}

pub fn plastic() -> NamedBase {
    named("plastic, l=-1/2", "-1,-1,0,1", "1,2", "-1/2")
}

/// Every word of length `k` over the alphabet, in odometer order.
pub fn all_words(digits: &[Digit], k: usize) -> Vec<Vec<Digit>> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        out.push(idx.iter().map(|&i| digits[i]).collect());
        let mut j = k;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < digits.len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// `S(k)` by filtering every word of length `k`.
pub fn exhaustive_s(b: &Base, k: usize, refs: &RefStrings) -> BTreeSet<Vec<Digit>> {
    let digits: Vec<Digit> = alphabet(b).collect();
    all_words(&digits, k)
        .into_iter()
        .filter(|w| is_admissible(&DigitString(w.clone()).then_zeros(), refs))
        .collect()
}

/// `{gamma(w) : 0 w 0^omega admissible, |w| <= max_len} ∩ [lo, hi]`.
pub fn exhaustive_zbeta(
    b: &Base,
    refs: &RefStrings,
    lo: &FieldElement,
    hi: &FieldElement,
    max_len: usize,
) -> BTreeSet<String> {
    let digits: Vec<Digit> = alphabet(b).collect();
    let mut out = BTreeSet::new();
    for len in 0..=max_len {
        for w in all_words(&digits, len) {
            let s = DigitString(w.clone()).then_zeros().prepend(&[0]);
            if !is_admissible(&s, refs) {
                continue;
            }
            let v = gamma(b, &w);
            if &v >= lo && &v <= hi {
                out.insert(key(&v));
            }
        }
    }
    out
}

/// Exact, order-free key for a field element.
pub fn key(x: &FieldElement) -> String {
    x.coeff_strings().join(",")
}
