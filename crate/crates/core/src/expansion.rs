//! The generalized `(-beta)`-transformation and the expansions it produces.
//!
//! For `x` in `[l, l+1)` the transformation is `T(x) = -beta x - floor(-beta x - l)`
//! and the emitted digit is `floor(-beta x - l)`. Orbits are followed exactly in
//! Q(beta); an expansion is reported periodic only when an orbit point recurs.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebraic::{Base, FieldElement};
use crate::digits::{Digit, DigitString, EventuallyPeriodicString};
use crate::error::{Error, Result};

/// Result of following an orbit for at most a fixed number of steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpansionOutcome {
    /// An orbit point recurred; the string is exact.
    Periodic {
        string: EventuallyPeriodicString,
        iterations: usize,
    },
    /// No recurrence within the budget; only these leading digits are known.
    PrefixOnly { digits: DigitString, iterations: usize },
}

impl ExpansionOutcome {
    pub fn is_periodic(&self) -> bool {
        matches!(self, ExpansionOutcome::Periodic { .. })
    }

    pub fn periodic(&self) -> Option<&EventuallyPeriodicString> {
        match self {
            ExpansionOutcome::Periodic { string, .. } => Some(string),
            ExpansionOutcome::PrefixOnly { .. } => None,
        }
    }

    pub fn iterations(&self) -> usize {
        match self {
            ExpansionOutcome::Periodic { iterations, .. } | ExpansionOutcome::PrefixOnly { iterations, .. } => {
                *iterations
            }
        }
    }

    /// The first `n` digits when known.
    pub fn prefix(&self, n: usize) -> Option<Vec<Digit>> {
        match self {
            ExpansionOutcome::Periodic { string, .. } => Some(string.prefix(n)),
            ExpansionOutcome::PrefixOnly { digits, .. } => (n <= digits.len()).then(|| digits.0[..n].to_vec()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ExpansionOutcome::Periodic { .. } => "Periodic",
            ExpansionOutcome::PrefixOnly { .. } => "PrefixOnly",
        }
    }

    /// Text form: `"pre|period"` when periodic, `"d1,d2,...,..."` otherwise.
    pub fn render(&self) -> String {
        match self {
            ExpansionOutcome::Periodic { string, .. } => string.to_string(),
            ExpansionOutcome::PrefixOnly { digits, .. } => format!("{digits},..."),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            ExpansionOutcome::Periodic { string, iterations } => serde_json::json!({
                "kind": "Periodic",
                "preperiod": string.preperiod(),
                "period": string.period(),
                "string": string.to_string(),
                "iterations": iterations,
            }),
            ExpansionOutcome::PrefixOnly { digits, iterations } => serde_json::json!({
                "kind": "PrefixOnly",
                "digits": digits.0,
                "iterations": iterations,
            }),
        }
    }
}

fn to_digit(n: num_bigint::BigInt) -> Digit {
    n.to_i64().expect("digit fits in i64")
}

/// One step of the transformation: `(floor(-beta x - l), -beta x - digit)`.
pub fn transform_step(b: &Base, x: &FieldElement) -> Result<(Digit, FieldElement)> {
    if !b.in_domain(x) {
        return Err(Error::OutOfDomain);
    }
    Ok(step_unchecked(b, x))
}

fn step_unchecked(b: &Base, x: &FieldElement) -> (Digit, FieldElement) {
    let y = b.neg_beta() * x;
    let digit = to_digit((&y - b.l()).floor());
    let next = y.add_int(-digit);
    (digit, next)
}

/// First `n` digits of `d(x)` together with the tail point `T^n(x)`.
pub fn expand_prefix(b: &Base, x: &FieldElement, n: usize) -> Result<(Vec<Digit>, FieldElement)> {
    if !b.in_domain(x) {
        return Err(Error::OutOfDomain);
    }
    let mut digits = Vec::with_capacity(n);
    let mut cur = x.clone();
    for _ in 0..n {
        let (d, next) = step_unchecked(b, &cur);
        digits.push(d);
        cur = next;
    }
    Ok((digits, cur))
}

/// Follows an orbit until a state repeats or `max_iter` steps have been taken.
fn follow<S, F>(start: S, max_iter: usize, mut step: F) -> ExpansionOutcome
where
    S: std::hash::Hash + Eq + Clone,
    F: FnMut(&S) -> (Digit, S),
{
    let mut seen: HashMap<S, usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut cur = start;
    for it in 0..=max_iter {
        if let Some(&j) = seen.get(&cur) {
            let string = EventuallyPeriodicString::new(digits[..j].to_vec(), digits[j..].to_vec())
                .expect("recurrence gives a nonempty period");
            return ExpansionOutcome::Periodic { string, iterations: it };
        }
        if it == max_iter {
            break;
        }
        seen.insert(cur.clone(), it);
        let (d, next) = step(&cur);
        digits.push(d);
        cur = next;
    }
    ExpansionOutcome::PrefixOnly {
        digits: DigitString(digits),
        iterations: max_iter,
    }
}

/// The `(-beta)`-expansion `d(x)` of `x` in `[l, l+1)`.
pub fn expand(b: &Base, x: &FieldElement, max_iter: usize) -> Result<ExpansionOutcome> {
    if max_iter == 0 {
        return Err(Error::InvalidArgument("max_iter must be positive".into()));
    }
    if !b.in_domain(x) {
        return Err(Error::OutOfDomain);
    }
    Ok(follow(x.clone(), max_iter, |p| step_unchecked(b, p)))
}

/// `d(l)`, the expansion of the left endpoint.
pub fn ref_string_l(b: &Base, max_iter: usize) -> Result<ExpansionOutcome> {
    expand(b, b.l(), max_iter)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Side {
    /// The point is approached from below; the map acts on `(l, l+1]`.
    Below,
    /// The point is approached from above; the map acts on `[l, l+1)`.
    Above,
}

/// `d*(l+1)`, the limit of `d(l + 1 - eps)` as `eps -> 0+`.
///
/// The orbit of `l + 1 - eps` is tracked as an exact point plus the side from
/// which the perturbed orbit approaches it. Multiplication by `-beta` swaps
/// the side, so the left-continuous digit `ceil(v) - 1` and the ordinary
/// `floor(v)` alternate along the orbit.
pub fn ref_string_r(b: &Base, max_iter: usize) -> Result<ExpansionOutcome> {
    if max_iter == 0 {
        return Err(Error::InvalidArgument("max_iter must be positive".into()));
    }
    let start = (b.l_plus_one().clone(), Side::Below);
    Ok(follow(start, max_iter, |(x, side)| {
        let y = b.neg_beta() * x;
        let v = &y - b.l();
        match side {
            Side::Below => {
                // -beta x - l approached from above: floor is right-continuous
                let d = to_digit(v.floor());
                (d, (y.add_int(-d), Side::Above))
            }
            Side::Above => {
                let d = to_digit(v.ceil()) - 1;
                (d, (y.add_int(-d), Side::Below))
            }
        }
    }))
}

/// The digit alphabet `{floor(-l(beta+1) - beta), ..., floor(-l(beta+1))}`.
pub fn alphabet(b: &Base) -> RangeInclusive<Digit> {
    let top = -(b.l() * &b.beta().add_int(1));
    let lo = to_digit((&top - b.beta()).floor());
    let hi = to_digit(top.floor());
    lo..=hi
}

/// Which of the classical endpoint windows contain `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EndpointWindow {
    /// `l` in `(-1, 0]`: zero is a digit.
    pub zero_digit: bool,
    /// `l` in `(-(floor(beta)+1)/(beta+1), -beta/(beta+1)]`: alphabet `{0, ..., floor(beta)}`.
    pub renyi_alphabet: bool,
    /// `l` in `(-beta/(beta+1), -1/(beta+1)]`: every real has a unique expansion.
    pub unique_expansions: bool,
}

pub fn endpoint_window(b: &Base) -> EndpointWindow {
    let l = b.l();
    let bp1 = b.beta().add_int(1);
    let frac = |num: &FieldElement| num.checked_div(&bp1).expect("beta + 1 is nonzero");
    let floor_beta = b.int(to_digit(b.beta().floor()));
    let renyi_lo = -frac(&floor_beta.add_int(1));
    let is_point = -frac(b.beta());
    let unique_hi = -frac(&b.int(1));
    let in_half_open = |lo: &FieldElement, hi: &FieldElement| l > lo && l <= hi;
    EndpointWindow {
        zero_digit: in_half_open(&b.int(-1), &b.int(0)),
        renyi_alphabet: in_half_open(&renyi_lo, &is_point),
        unique_expansions: in_half_open(&is_point, &unique_hi),
    }
}

/// Exact value `sum_i s_i (-beta)^(-i)` of an eventually periodic string.
pub fn string_value(b: &Base, s: &EventuallyPeriodicString) -> FieldElement {
    let inv = b.neg_beta().recip().expect("beta is nonzero");
    // Horner evaluation of sum_{i=1..n} w_i t^i with t = 1/(-beta)
    let finite = |w: &[Digit]| {
        w.iter()
            .rev()
            .fold(b.int(0), |acc, &d| &(&acc + &b.int(d)) * &inv)
    };
    let pre = finite(s.preperiod());
    let q = s.period().len();
    let per = finite(s.period());
    let tq = inv.pow(q as i64).expect("nonzero");
    let geometric = per
        .checked_div(&(-&tq).add_int(1))
        .expect("|(-beta)^-q| < 1 so the denominator is nonzero");
    let tp = inv.pow(s.preperiod().len() as i64).expect("nonzero");
    &pre + &(&tp * &geometric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::serial::parse_base;

    fn closing() -> Base {
        parse_base("-2,-4,-3,1", "4,5", "-1/2").unwrap()
    }

    fn silver_is() -> Base {
        parse_base("-1,-2,1", "2,3", "-b/(b+1)").unwrap()
    }

    #[test]
    fn zero_is_fixed() {
        for b in [closing(), silver_is()] {
            let (d, n) = transform_step(&b, &b.int(0)).unwrap();
            assert_eq!(d, 0);
            assert!(n.is_zero());
            let e = expand(&b, &b.int(0), 5).unwrap();
            assert_eq!(e.periodic().unwrap(), &EventuallyPeriodicString::zeros());
        }
    }

    #[test]
    fn closing_example_reference_strings() {
        let b = closing();
        let (d, _) = transform_step(&b, b.l()).unwrap();
        assert_eq!(d, 2);
        let l = ref_string_l(&b, 100).unwrap();
        assert_eq!(l.render(), "2,0|1");
        let r = ref_string_r(&b, 100).unwrap();
        assert_eq!(r.render(), "-2,0|-1");
    }

    #[test]
    fn out_of_domain() {
        let b = closing();
        assert_eq!(transform_step(&b, &b.int(1)).unwrap_err(), Error::OutOfDomain);
        assert_eq!(transform_step(&b, b.l_plus_one()).unwrap_err(), Error::OutOfDomain);
        assert!(expand(&b, &b.int(0), 0).is_err());
    }

    #[test]
    fn integer_base_reference_strings() {
        // beta = 2, l = -1/2: T(-1/2) = 1 - 1 = 0
        let b = parse_base("-2,1", "1,3", "-1/2").unwrap();
        assert_eq!(ref_string_l(&b, 10).unwrap().render(), "1|0");
        assert_eq!(ref_string_r(&b, 10).unwrap().render(), "-1|0");
        // l = 0 gives 0^omega
        let b = parse_base("-2,1", "1,3", "0").unwrap();
        assert_eq!(ref_string_l(&b, 10).unwrap().render(), "|0");
    }

    #[test]
    fn left_limit_on_boundary_orbit() {
        // beta = 2, l = -2/3: the orbit of 1/3 hits the digit boundary exactly
        let b = parse_base("-2,1", "1,3", "-2/3").unwrap();
        assert_eq!(ref_string_l(&b, 10).unwrap().render(), "|2");
        assert_eq!(ref_string_r(&b, 10).unwrap().render(), "|0,1");
    }

    #[test]
    fn alphabets() {
        assert_eq!(alphabet(&closing()), -2..=2);
        assert_eq!(alphabet(&silver_is()), 0..=2);
        assert_eq!(alphabet(&parse_base("-2,1", "1,3", "-1/2").unwrap()), -1..=1);
    }

    #[test]
    fn windows() {
        let w = endpoint_window(&silver_is());
        assert!(w.zero_digit && w.renyi_alphabet && !w.unique_expansions);
        let b = parse_base("-1,-2,1", "2,3", "-1/(b+1)").unwrap();
        assert!(endpoint_window(&b).unique_expansions);
        let b = parse_base("-1,-2,1", "2,3", "-b^9/(b^9+1)").unwrap();
        let w = endpoint_window(&b);
        assert!(w.zero_digit && !w.unique_expansions);
    }

    #[test]
    fn periodic_value_recovers_endpoint() {
        let b = closing();
        let s = ref_string_l(&b, 100).unwrap();
        assert_eq!(string_value(&b, s.periodic().unwrap()), b.l().clone());
        let r = ref_string_r(&b, 100).unwrap();
        assert_eq!(string_value(&b, r.periodic().unwrap()), b.l_plus_one().clone());
    }

    #[test]
    fn example_one_expansion_of_inverse_beta() {
        let b = parse_base("-1,-2,1", "2,3", "-b^9/(b^9+1)").unwrap();
        let x = b.neg_beta().recip().unwrap();
        let e = expand(&b, &x, 50).unwrap();
        assert_eq!(e.periodic().unwrap().to_string(), "1|0");
    }
}
