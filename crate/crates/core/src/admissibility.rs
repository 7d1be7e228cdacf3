//! Alternate order on digit strings and the admissibility test.
//!
//! `u <_alt v` when, at the first index `m >= 1` where they differ,
//! `u_m (-1)^m < v_m (-1)^m`. A string `s` is admissible iff every shift
//! satisfies `d(l) <=_alt sigma^i(s) <_alt d*(l+1)`.

use std::cmp::Ordering;

use num_integer::Integer;
use serde::Serialize;

use crate::algebraic::Base;
use crate::digits::{Digit, EventuallyPeriodicString};
use crate::error::{Error, Result};
use crate::expansion::{ref_string_l, ref_string_r, ExpansionOutcome};

/// Digit weight at 0-based index `i` (1-based position `i + 1`).
#[inline]
pub(crate) fn alt_sign(i: usize) -> Digit {
    if i.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// Compares digits `a`, `b` sitting at 0-based index `i`.
#[inline]
pub(crate) fn alt_cmp_digit(i: usize, a: Digit, b: Digit) -> Ordering {
    (a * alt_sign(i)).cmp(&(b * alt_sign(i)))
}

/// Alternate-order comparison of two eventually periodic strings.
///
/// Past the longer preperiod both strings are periodic with a common period
/// dividing the lcm of their periods, so that horizon decides equality.
pub fn alt_compare(u: &EventuallyPeriodicString, v: &EventuallyPeriodicString) -> Ordering {
    let horizon = u.preperiod().len().max(v.preperiod().len()) + u.period().len().lcm(&v.period().len());
    for i in 0..horizon {
        let (a, b) = (u.digit(i), v.digit(i));
        if a != b {
            return alt_cmp_digit(i, a, b);
        }
    }
    Ordering::Equal
}

/// Alternate-order comparison on the common length of two finite prefixes;
/// `None` when they agree there.
pub fn alt_compare_prefix(u: &[Digit], v: &[Digit]) -> Option<Ordering> {
    u.iter()
        .zip(v)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(i, (a, b))| alt_cmp_digit(i, *a, *b))
}

/// The two exact reference strings `d(l)` and `d*(l+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefStrings {
    left: EventuallyPeriodicString,
    right: EventuallyPeriodicString,
}

impl RefStrings {
    pub fn new(left: EventuallyPeriodicString, right: EventuallyPeriodicString) -> Self {
        RefStrings { left, right }
    }

    /// Computes both reference strings, failing unless both orbits recur
    /// within `max_iter` steps.
    pub fn compute(b: &Base, max_iter: usize) -> Result<Self> {
        let l = ref_string_l(b, max_iter)?;
        let r = ref_string_r(b, max_iter)?;
        match (l, r) {
            (ExpansionOutcome::Periodic { string: left, .. }, ExpansionOutcome::Periodic { string: right, .. }) => {
                Ok(RefStrings { left, right })
            }
            _ => Err(Error::RefsNotPeriodic { budget: max_iter }),
        }
    }

    /// `d(l)`.
    pub fn left(&self) -> &EventuallyPeriodicString {
        &self.left
    }

    /// `d*(l+1)`.
    pub fn right(&self) -> &EventuallyPeriodicString {
        &self.right
    }
}

/// Which side of the admissibility condition fails, and at which shift
/// (`shift = i` means the suffix starting at 1-based position `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "bound", rename_all = "lowercase")]
pub enum Violation {
    /// `sigma^i(s) <_alt d(l)`.
    Left { shift: usize },
    /// `sigma^i(s) >=_alt d*(l+1)`.
    Right { shift: usize },
}

/// Exact admissibility check, reporting the first failing shift.
pub fn check_admissible(s: &EventuallyPeriodicString, refs: &RefStrings) -> std::result::Result<(), Violation> {
    for i in 0..s.distinct_shifts() {
        let t = s.shift(i);
        if alt_compare(&t, &refs.left) == Ordering::Less {
            return Err(Violation::Left { shift: i + 1 });
        }
        if alt_compare(&t, &refs.right) != Ordering::Less {
            return Err(Violation::Right { shift: i + 1 });
        }
    }
    Ok(())
}

pub fn is_admissible(s: &EventuallyPeriodicString, refs: &RefStrings) -> bool {
    check_admissible(s, refs).is_ok()
}

/// `0 s` is admissible.
pub fn is_strongly_admissible(s: &EventuallyPeriodicString, refs: &RefStrings) -> bool {
    is_admissible(&s.prepend(&[0]), refs)
}

/// Verdict of the bounded-horizon check used when reference strings are
/// only known as prefixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum BoundedVerdict {
    /// No shift is decided to violate the bounds within the first `horizon` digits.
    AdmissibleUpTo { horizon: usize },
    Violated(Violation),
}

/// Admissibility checked only on the first `horizon` digits of every shift.
/// Ties at the horizon are not violations.
pub fn check_admissible_bounded(
    s: &EventuallyPeriodicString,
    left: &ExpansionOutcome,
    right: &ExpansionOutcome,
    horizon: usize,
) -> Result<BoundedVerdict> {
    let known = |o: &ExpansionOutcome| {
        (1..=horizon)
            .rev()
            .find_map(|n| o.prefix(n))
            .unwrap_or_default()
    };
    let (lp, rp) = (known(left), known(right));
    let h = horizon.min(lp.len()).min(rp.len());
    for i in 0..s.distinct_shifts() {
        let t = s.shift(i).prefix(h);
        if alt_compare_prefix(&t, &lp[..h]) == Some(Ordering::Less) {
            return Ok(BoundedVerdict::Violated(Violation::Left { shift: i + 1 }));
        }
        if alt_compare_prefix(&t, &rp[..h]) == Some(Ordering::Greater) {
            return Ok(BoundedVerdict::Violated(Violation::Right { shift: i + 1 }));
        }
    }
    Ok(BoundedVerdict::AdmissibleUpTo { horizon: h })
}

/// Incremental prefix filter: rejects a finite prefix as soon as some suffix
/// of it is already decided to fall outside `[d(l), d*(l+1))`.
///
/// Sound but not complete: a surviving prefix may still fail once its tail
/// is fixed, so callers confirm leaves with [`check_admissible`].
#[derive(Debug, Clone)]
pub(crate) struct PrefixFilter<'a> {
    refs: &'a RefStrings,
    len: usize,
    /// `(start, tied_with_left, tied_with_right)` for undecided suffixes.
    open: Vec<(usize, bool, bool)>,
}

impl<'a> PrefixFilter<'a> {
    pub(crate) fn new(refs: &'a RefStrings) -> Self {
        PrefixFilter {
            refs,
            len: 0,
            open: Vec::new(),
        }
    }

    pub(crate) fn push(&self, d: Digit) -> Option<Self> {
        let p = self.len;
        let mut open = Vec::with_capacity(self.open.len() + 1);
        for &(start, tl, tr) in self.open.iter().chain(std::iter::once(&(p, true, true))) {
            let j = p - start;
            let mut tl = tl;
            let mut tr = tr;
            if tl {
                match alt_cmp_digit(j, d, self.refs.left.digit(j)) {
                    Ordering::Less => return None,
                    Ordering::Greater => tl = false,
                    Ordering::Equal => {}
                }
            }
            if tr {
                match alt_cmp_digit(j, d, self.refs.right.digit(j)) {
                    Ordering::Greater => return None,
                    Ordering::Less => tr = false,
                    Ordering::Equal => {}
                }
            }
            if tl || tr {
                open.push((start, tl, tr));
            }
        }
        Some(PrefixFilter {
            refs: self.refs,
            len: p + 1,
            open,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::{expand, ref_string_l};
    use crate::serial::parse_base;

    fn eps(s: &str) -> EventuallyPeriodicString {
        s.parse().unwrap()
    }

    #[test]
    fn alternate_order_examples() {
        assert_eq!(alt_compare(&eps("|0"), &eps("|0")), Ordering::Equal);
        // first difference at position 1 (odd): 2 * (-1) < -2 * (-1)
        assert_eq!(alt_compare(&eps("2,0|1"), &eps("-2,0|-1")), Ordering::Less);
        // first difference at position 2 (even): 0 < 1
        assert_eq!(alt_compare(&eps("1|0"), &eps("1,1|0")), Ordering::Less);
        assert_eq!(alt_compare(&eps("|1,2"), &eps("1|2,1")), Ordering::Equal);
    }

    #[test]
    fn alternate_order_matches_real_order() {
        // 1 0^w = -1/beta < 1 1 0^w = -1/beta + 1/beta^2 for every beta > 1
        let b = parse_base("-1,-2,1", "2,3", "-1/2").unwrap();
        let u = crate::expansion::string_value(&b, &eps("1|0"));
        let v = crate::expansion::string_value(&b, &eps("1,1|0"));
        assert!(u < v);
    }

    #[test]
    fn closing_example_bounds() {
        let b = parse_base("-2,-4,-3,1", "4,5", "-1/2").unwrap();
        let refs = RefStrings::compute(&b, 100).unwrap();
        assert!(is_admissible(&eps("|0"), &refs));
        assert!(is_admissible(&eps("2,0|1"), &refs));
        assert_eq!(check_admissible(&eps("-2,0|-1"), &refs), Err(Violation::Right { shift: 1 }));
        assert_eq!(check_admissible(&eps("2,-1|0"), &refs), Err(Violation::Left { shift: 1 }));
        assert!(is_admissible(&eps("2,1|0"), &refs));
        // the suffix 2 -1 0^w falls below 2 0 1^w
        assert_eq!(check_admissible(&eps("1,2,-1|0"), &refs), Err(Violation::Left { shift: 2 }));
    }

    #[test]
    fn ito_sadahiro_strong_admissibility() {
        let b = parse_base("-1,-2,1", "2,3", "-b/(b+1)").unwrap();
        let refs = RefStrings::compute(&b, 200).unwrap();
        let dl = refs.left().clone();
        assert!(is_admissible(&dl, &refs));
        assert!(!is_strongly_admissible(&dl, &refs));
        assert!(is_strongly_admissible(&dl.prepend(&[1]), &refs));
        assert!(is_strongly_admissible(&eps("|0"), &refs));
    }

    #[test]
    fn refs_not_periodic() {
        // beta^2 = beta + 3 is not Pisot; the orbit of l does not recur quickly
        let b = parse_base("-3,-1,1", "2,3", "-1/2").unwrap();
        let e = RefStrings::compute(&b, 30).unwrap_err();
        assert_eq!(e, Error::RefsNotPeriodic { budget: 30 });
        let l = ref_string_l(&b, 30).unwrap();
        let r = crate::expansion::ref_string_r(&b, 30).unwrap();
        let v = check_admissible_bounded(&eps("|0"), &l, &r, 20).unwrap();
        assert_eq!(v, BoundedVerdict::AdmissibleUpTo { horizon: 20 });
        let x = b.int(0);
        assert!(expand(&b, &x, 3).unwrap().is_periodic());
    }

    #[test]
    fn prefix_filter_rejects_decided_prefixes() {
        let b = parse_base("-2,-4,-3,1", "4,5", "-1/2").unwrap();
        let refs = RefStrings::compute(&b, 100).unwrap();
        let f = PrefixFilter::new(&refs);
        assert!(f.push(2).is_some());
        assert!(f.push(-2).is_some());
        assert!(f.push(3).is_none());
        let f2 = f.push(2).unwrap();
        assert!(f2.push(-1).is_none());
        assert!(f2.push(1).is_some());
        assert!(f2.push(0).is_some());
    }
}
