//! The set of `(-beta)`-integers and the lengths of the gaps between them.
//!
//! A `(-beta)`-integer is `gamma(w) = sum_i w_i (-beta)^i` for a finite word
//! `w = w_{k-1} ... w_0` such that `0 w 0^omega` is admissible. Consecutive
//! points are separated by one of the lengths
//! `Delta_k = |(-beta)^k + gamma(min(k)) - gamma(max(k))|`, where `min(k)` and
//! `max(k)` are the alternate-order extremes of the length-`k` words `w` with
//! `w 0^omega` admissible.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::admissibility::{alt_sign, is_admissible, PrefixFilter, RefStrings};
use crate::algebraic::{Base, FieldElement};
use crate::digits::{Digit, DigitString, EventuallyPeriodicString};
use crate::error::{Error, Result};
use crate::expansion::{alphabet, expand, ExpansionOutcome};

/// `gamma(w) = sum_i w_i (-beta)^i`, with `w` written most significant first.
pub fn gamma(b: &Base, w: &[Digit]) -> FieldElement {
    w.iter()
        .fold(b.int(0), |acc, &d| (&acc * b.neg_beta()).add_int(d))
}

fn digits_of(b: &Base) -> Vec<Digit> {
    alphabet(b).collect()
}

/// All words `w` of length `k` with `w 0^omega` admissible (the set `S(k)`),
/// in increasing alternate order.
pub fn enumerate_s(b: &Base, k: usize, refs: &RefStrings) -> Vec<DigitString> {
    let digits = digits_of(b);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(k);
    collect_s(&digits, k, refs, &PrefixFilter::new(refs), &mut word, &mut out);
    out.sort_by(|u, v| alt_cmp_words(&u.0, &v.0));
    out
}

fn collect_s(
    digits: &[Digit],
    k: usize,
    refs: &RefStrings,
    filter: &PrefixFilter<'_>,
    word: &mut Vec<Digit>,
    out: &mut Vec<DigitString>,
) {
    if word.len() == k {
        if is_admissible(&DigitString(word.clone()).then_zeros(), refs) {
            out.push(DigitString(word.clone()));
        }
        return;
    }
    for &d in digits {
        if let Some(next) = filter.push(d) {
            word.push(d);
            collect_s(digits, k, refs, &next, word, out);
            word.pop();
        }
    }
}

/// Alternate order on words of equal length.
pub fn alt_cmp_words(u: &[Digit], v: &[Digit]) -> Ordering {
    crate::admissibility::alt_compare_prefix(u, v).unwrap_or(Ordering::Equal)
}

/// `min(k)` and `max(k)`: the alternate-order extremes of `S(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalStrings {
    pub k: usize,
    pub min: DigitString,
    pub max: DigitString,
}

/// Depth-first search visiting digits in order of preference; the first
/// admissible leaf is the extreme.
fn extremal(digits: &[Digit], k: usize, refs: &RefStrings, minimize: bool) -> Option<DigitString> {
    fn go(
        digits: &[Digit],
        k: usize,
        refs: &RefStrings,
        minimize: bool,
        filter: &PrefixFilter<'_>,
        word: &mut Vec<Digit>,
    ) -> bool {
        if word.len() == k {
            return is_admissible(&DigitString(word.clone()).then_zeros(), refs);
        }
        let i = word.len();
        let mut order = digits.to_vec();
        order.sort_by_key(|&d| if minimize { d * alt_sign(i) } else { -d * alt_sign(i) });
        for d in order {
            if let Some(next) = filter.push(d) {
                word.push(d);
                if go(digits, k, refs, minimize, &next, word) {
                    return true;
                }
                word.pop();
            }
        }
        false
    }
    let mut word = Vec::with_capacity(k);
    go(digits, k, refs, minimize, &PrefixFilter::new(refs), &mut word).then_some(DigitString(word))
}

pub fn minmax(b: &Base, k: usize, refs: &RefStrings) -> ExtremalStrings {
    let digits = digits_of(b);
    // 0^k is always in S(k), so both searches succeed
    ExtremalStrings {
        k,
        min: extremal(&digits, k, refs, true).expect("0^k lies in S(k)"),
        max: extremal(&digits, k, refs, false).expect("0^k lies in S(k)"),
    }
}

/// `Delta_k = |(-beta)^k + gamma(min(k)) - gamma(max(k))|`.
pub fn delta_from(b: &Base, ext: &ExtremalStrings) -> FieldElement {
    let pk = b.neg_beta().pow(ext.k as i64).expect("nonzero");
    (&(&pk + &gamma(b, &ext.min.0)) - &gamma(b, &ext.max.0)).abs()
}

pub fn delta(b: &Base, k: usize, refs: &RefStrings) -> FieldElement {
    delta_from(b, &minmax(b, k, refs))
}

/// How `min(k)` (or `max(k)`) is built from the reference strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ExtremalShape {
    /// The length-`k` prefix of the reference string.
    Prefix,
    /// Reference prefix of length `k - m` with its last digit moved by one,
    /// followed by `min(m)` or `max(m)`.
    Recursive { m: usize },
}

/// Extremal strings and gap lengths for `k = 0 ..= max_k`, all computed
/// against one pair of reference strings.
#[derive(Debug, Clone)]
pub struct GapStructure {
    base: Base,
    refs: RefStrings,
    extremal: Vec<ExtremalStrings>,
    deltas: Vec<FieldElement>,
}

impl GapStructure {
    pub fn new(base: &Base, refs: &RefStrings, max_k: usize) -> Self {
        let extremal: Vec<ExtremalStrings> = (0..=max_k).map(|k| minmax(base, k, refs)).collect();
        let deltas = extremal.iter().map(|e| delta_from(base, e)).collect();
        GapStructure {
            base: base.clone(),
            refs: refs.clone(),
            extremal,
            deltas,
        }
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn refs(&self) -> &RefStrings {
        &self.refs
    }

    pub fn max_k(&self) -> usize {
        self.extremal.len() - 1
    }

    pub fn extremal(&self, k: usize) -> &ExtremalStrings {
        &self.extremal[k]
    }

    pub fn min(&self, k: usize) -> &[Digit] {
        &self.extremal[k].min.0
    }

    pub fn max(&self, k: usize) -> &[Digit] {
        &self.extremal[k].max.0
    }

    pub fn delta(&self, k: usize) -> &FieldElement {
        &self.deltas[k]
    }

    /// Every `k` whose `Delta_k` equals `gap` exactly.
    pub fn labels_matching(&self, gap: &FieldElement) -> Vec<usize> {
        (0..self.deltas.len()).filter(|&k| &self.deltas[k] == gap).collect()
    }

    /// Matches `min(k)` and `max(k)` against the three admissible shapes.
    /// Returns `None` for a string fitting none of them.
    pub fn shapes(&self, k: usize) -> Option<(ExtremalShape, ExtremalShape)> {
        if k == 0 {
            return (self.min(0).is_empty() && self.max(0).is_empty())
                .then_some((ExtremalShape::Prefix, ExtremalShape::Prefix));
        }
        let min_shape = self.shape_of(k, true)?;
        let max_shape = self.shape_of(k, false)?;
        Some((min_shape, max_shape))
    }

    fn shape_of(&self, k: usize, is_min: bool) -> Option<ExtremalShape> {
        let (word, reference) = if is_min {
            (self.min(k), self.refs.left())
        } else {
            (self.max(k), self.refs.right())
        };
        if word == reference.prefix(k).as_slice() {
            return Some(ExtremalShape::Prefix);
        }
        for m in 0..k {
            let j = k - m;
            let mut head = reference.prefix(j);
            // for min: +1 then min(m) when j even, -1 then max(m) when j odd;
            // for max the roles of min/max and the sign are swapped
            let (delta, tail) = match (is_min, j.is_multiple_of(2)) {
                (true, true) => (1, self.min(m)),
                (true, false) => (-1, self.max(m)),
                (false, true) => (-1, self.max(m)),
                (false, false) => (1, self.min(m)),
            };
            head[j - 1] += delta;
            head.extend_from_slice(tail);
            if head == word {
                return Some(ExtremalShape::Recursive { m });
            }
        }
        None
    }

    /// Recovers `(w, d, k)` for adjacent `(-beta)`-integers `x < y` from their
    /// digit strings: for even `k`, `x = gamma(w (d-1) max(k))` and
    /// `y = gamma(w d min(k))`; for odd `k` the roles swap.
    pub fn factor_gap(&self, x: &[Digit], y: &[Digit]) -> Option<GapFactor> {
        let n = x.len().max(y.len()) + 1;
        let pad = |s: &[Digit]| {
            let mut v = vec![0; n - s.len()];
            v.extend_from_slice(s);
            v
        };
        let (px, py) = (pad(x), pad(y));
        let i = (0..n).find(|&i| px[i] != py[i])?;
        let k = n - i - 1;
        if k > self.max_k() {
            return None;
        }
        let (lower, upper, lower_tail, upper_tail) = if k.is_multiple_of(2) {
            (&px, &py, self.max(k), self.min(k))
        } else {
            (&py, &px, self.max(k), self.min(k))
        };
        // `lower` carries d - 1 followed by max(k), `upper` carries d then min(k)
        let d = upper[i];
        if lower[i] != d - 1 || &lower[i + 1..] != lower_tail || &upper[i + 1..] != upper_tail {
            return None;
        }
        Some(GapFactor {
            w: DigitString(px[..i].to_vec()),
            d,
            k,
        })
    }
}

/// The factorization of a gap between consecutive `(-beta)`-integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapFactor {
    pub w: DigitString,
    pub d: Digit,
    pub k: usize,
}

/// A `(-beta)`-integer with its shortest strongly admissible word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPoint {
    pub value: FieldElement,
    pub digits: DigitString,
}

/// All `(-beta)`-integers in `[lo, hi]`, in increasing order.
#[derive(Debug, Clone)]
pub struct ZbetaWindow {
    pub points: Vec<ZPoint>,
    pub lo: FieldElement,
    pub hi: FieldElement,
}

impl ZbetaWindow {
    /// Index of the point `0`, if covered.
    pub fn origin(&self) -> Option<usize> {
        self.points.iter().position(|p| p.value.is_zero())
    }

    pub fn values(&self) -> Vec<FieldElement> {
        self.points.iter().map(|p| p.value.clone()).collect()
    }
}

/// `l` in `[-beta/(beta+1), -1/(beta+1)]`.
pub fn in_restricted_window(b: &Base) -> bool {
    let bp1 = b.beta().add_int(1);
    let lo = -(b.beta().checked_div(&bp1).expect("nonzero"));
    let hi = -(bp1.recip().expect("nonzero"));
    b.l() >= &lo && b.l() <= &hi
}

/// Every point whose shortest word has length `k` satisfies
/// `|x| >= c beta^(k-1)` with `c = min(1 + l, -l)`; returns the largest
/// length that can still reach `[-bound, bound]`.
pub fn length_bound(b: &Base, bound: &FieldElement) -> usize {
    let c = std::cmp::min(b.l_plus_one().clone(), -b.l());
    debug_assert!(c.is_positive());
    let mut k = 0;
    let mut reach = c;
    // reach = c beta^k is the lower bound for words of length k + 1
    while &reach <= bound {
        k += 1;
        reach = &reach * b.beta();
    }
    k
}

/// All `(-beta)`-integers in `[lo, hi]`.
// hashing uses the coefficients only; the enclosure cache does not affect it
#[allow(clippy::mutable_key_type)]
pub fn zbeta_between(b: &Base, lo: &FieldElement, hi: &FieldElement, refs: &RefStrings) -> Result<ZbetaWindow> {
    if !in_restricted_window(b) {
        return Err(Error::EndpointOutsideRestriction);
    }
    if lo > hi {
        return Err(Error::InvalidArgument("empty interval".into()));
    }
    let bound = std::cmp::max(lo.abs(), hi.abs());
    let max_len = length_bound(b, &bound);
    let digits = digits_of(b);
    let powers: Vec<FieldElement> = (0..=max_len)
        .map(|r| b.neg_beta().pow(r as i64).expect("nonzero"))
        .collect();
    let mut found: HashMap<FieldElement, DigitString> = HashMap::new();
    let zero = b.int(0);
    if lo <= &zero && &zero <= hi {
        found.insert(zero.clone(), DigitString::empty());
    }
    let root = PrefixFilter::new(refs).push(0).expect("0 0^omega is admissible");
    let search = Search {
        b,
        refs,
        lo,
        hi,
        digits: &digits,
        powers: &powers,
    };
    for len in 1..=max_len {
        let mut word = Vec::with_capacity(len);
        search.run(len, &root, &zero, &mut word, &mut found);
    }
    let mut points: Vec<ZPoint> = found
        .into_iter()
        .map(|(value, digits)| ZPoint { value, digits })
        .collect();
    points.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(ZbetaWindow {
        points,
        lo: lo.clone(),
        hi: hi.clone(),
    })
}

struct Search<'a> {
    b: &'a Base,
    refs: &'a RefStrings,
    lo: &'a FieldElement,
    hi: &'a FieldElement,
    digits: &'a [Digit],
    powers: &'a [FieldElement],
}

impl Search<'_> {
    #[allow(clippy::mutable_key_type)]
    fn run(
        &self,
        len: usize,
        filter: &PrefixFilter<'_>,
        value: &FieldElement,
        word: &mut Vec<Digit>,
        found: &mut HashMap<FieldElement, DigitString>,
    ) {
        let j = word.len();
        if j == len {
            if value >= self.lo
                && value <= self.hi
                && is_admissible(&DigitString(word.clone()).then_zeros().prepend(&[0]), self.refs)
            {
                let entry = found.entry(value.clone()).or_insert_with(|| DigitString(word.clone()));
                if entry.len() > word.len() {
                    *entry = DigitString(word.clone());
                }
            }
            return;
        }
        for &d in self.digits {
            if j == 0 && d == 0 {
                continue;
            }
            let Some(next) = filter.push(d) else { continue };
            let v = (value * self.b.neg_beta()).add_int(d);
            // completions lie in (-beta)^r [v + l, v + l + 1]
            let r = len - j - 1;
            let a = &self.powers[r] * &(&v + self.b.l());
            let c = &a + &self.powers[r];
            let (low, high) = if a <= c { (a, c) } else { (c, a) };
            if &high < self.lo || &low > self.hi {
                continue;
            }
            word.push(d);
            self.run(len, &next, &v, word, found);
            word.pop();
        }
    }
}

/// All `(-beta)`-integers in `[-bound, bound]`.
pub fn zbeta_window(b: &Base, bound: &FieldElement, refs: &RefStrings) -> Result<ZbetaWindow> {
    if !bound.is_positive() {
        return Err(Error::InvalidArgument("bound must be positive".into()));
    }
    zbeta_between(b, &-bound, bound, refs)
}

/// The set of `(-beta)`-integers is `{0}` exactly when both `1/beta` and
/// `-1/beta` fall outside `[l, l+1)`.
pub fn is_trivial(b: &Base) -> bool {
    let inv = b.beta().recip().expect("nonzero");
    !b.in_domain(&inv) && !b.in_domain(&-&inv)
}

/// One way of writing `x` obtained by expanding `x / (-beta)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub k: usize,
    /// Digits before the point, leading zeros removed.
    pub integer_part: DigitString,
    /// Digits after the point; `None` if no recurrence was found in budget.
    pub fraction: Option<EventuallyPeriodicString>,
}

impl Representation {
    /// `int•frac` with `0` for an empty integer part.
    pub fn render(&self) -> String {
        let int = if self.integer_part.is_empty() {
            "0".to_string()
        } else {
            self.integer_part.0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
        };
        match &self.fraction {
            Some(f) => format!("{int}.{f}"),
            None => format!("{int}.?"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Representations {
    /// `(k, x / (-beta)^k lies in [l, l+1))` for every scaling tried.
    pub scalings: Vec<(usize, bool)>,
    /// Distinct representations in order of first appearance.
    pub strings: Vec<Representation>,
}

pub fn representations_of(b: &Base, x: &FieldElement, max_k: usize, max_iter: usize) -> Result<Representations> {
    let mut scalings = Vec::new();
    let mut strings: Vec<Representation> = Vec::new();
    let mut scaled = x.clone();
    let inv = b.neg_beta().recip().expect("nonzero");
    for k in 0..=max_k {
        let inside = b.in_domain(&scaled);
        scalings.push((k, inside));
        if inside {
            let outcome = expand(b, &scaled, max_iter + k)?;
            let rep = match &outcome {
                ExpansionOutcome::Periodic { string, .. } => Representation {
                    k,
                    integer_part: DigitString(string.prefix(k)).strip_leading_zeros(),
                    fraction: Some(string.shift(k)),
                },
                ExpansionOutcome::PrefixOnly { digits, .. } => Representation {
                    k,
                    integer_part: DigitString(digits.0[..k.min(digits.len())].to_vec()).strip_leading_zeros(),
                    fraction: None,
                },
            };
            if !strings
                .iter()
                .any(|r| r.integer_part == rep.integer_part && r.fraction == rep.fraction)
            {
                strings.push(rep);
            }
        }
        scaled = &scaled * &inv;
    }
    if strings.is_empty() {
        return Err(Error::NoRepresentationFound { max_k });
    }
    Ok(Representations { scalings, strings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::serial::parse_base;

    fn closing() -> (Base, RefStrings) {
        let b = parse_base("-2,-4,-3,1", "4,5", "-1/2").unwrap();
        let r = RefStrings::compute(&b, 100).unwrap();
        (b, r)
    }

    #[test]
    fn gamma_values() {
        let b = parse_base("-1,-2,1", "2,3", "-b^9/(b^9+1)").unwrap();
        assert!(gamma(&b, &[]).is_zero());
        assert_eq!(gamma(&b, &[1, 2, 0]), b.int(1));
        assert_eq!(gamma(&b, &[1, 3, 2, 1, 0]), b.int(1));
    }

    #[test]
    fn s_of_zero_and_one() {
        let (b, r) = closing();
        assert_eq!(enumerate_s(&b, 0, &r), vec![DigitString::empty()]);
        let s1 = enumerate_s(&b, 1, &r);
        assert_eq!(s1.first().unwrap().0, vec![2]);
        assert_eq!(s1.last().unwrap().0, vec![-2]);
    }

    #[test]
    fn closing_example_extremes() {
        let (b, r) = closing();
        let g = GapStructure::new(&b, &r, 6);
        assert!(g.min(0).is_empty() && g.max(0).is_empty());
        assert_eq!(g.min(1), &[2]);
        assert_eq!(g.min(2), &[2, 0]);
        assert_eq!(g.min(3), &[2, 0, 0]);
        assert_eq!(g.min(4), &[2, 0, 1, 1]);
        assert_eq!(g.max(4), &[-2, 0, -1, -1]);
        assert_eq!(g.delta(0), &b.int(1));
        for k in 0..=6 {
            assert!(g.shapes(k).is_some(), "shape of k = {k}");
        }
    }

    #[test]
    fn triviality() {
        let b = parse_base("-3,2", "1,2", "-1/2").unwrap();
        assert!(is_trivial(&b));
        // smallest Pisot number, with periodic reference strings
        let b = parse_base("-1,-1,0,1", "1,2", "-1/2").unwrap();
        assert!(is_trivial(&b));
        let r = RefStrings::compute(&b, 200).unwrap();
        let w = zbeta_window(&b, &b.int(10), &r).unwrap();
        assert_eq!(w.points.len(), 1);
        assert!(!is_trivial(&closing().0));
        let b = parse_base("-3,2", "1,2", "0").unwrap();
        assert!(!is_trivial(&b));
    }

    #[test]
    fn integer_base_window() {
        let b = parse_base("-2,1", "1,3", "-1/2").unwrap();
        let r = RefStrings::compute(&b, 50).unwrap();
        let w = zbeta_window(&b, &b.int(5), &r).unwrap();
        let want: Vec<FieldElement> = (-5..=5).map(|n| b.int(n)).collect();
        assert_eq!(w.values(), want);
        assert_eq!(w.origin(), Some(5));
    }

    #[test]
    fn restriction_enforced() {
        let b = parse_base("-1,-2,1", "2,3", "-b^9/(b^9+1)").unwrap();
        let r = RefStrings::compute(&b, 200).unwrap();
        assert_eq!(
            zbeta_window(&b, &b.int(3), &r).unwrap_err(),
            Error::EndpointOutsideRestriction
        );
    }

    #[test]
    fn zero_has_one_representation() {
        let (b, _) = closing();
        let reps = representations_of(&b, &b.int(0), 5, 50).unwrap();
        assert_eq!(reps.strings.len(), 1);
        assert_eq!(reps.strings[0].render(), "0.|0");
    }

    #[test]
    fn gaps_factor() {
        let (b, r) = closing();
        let g = GapStructure::new(&b, &r, 6);
        let w = zbeta_window(&b, &b.int(30), &r).unwrap();
        for pair in w.points.windows(2) {
            let f = g.factor_gap(&pair[0].digits.0, &pair[1].digits.0).expect("factorization");
            let gap = &pair[1].value - &pair[0].value;
            assert_eq!(&gap, g.delta(f.k));
        }
    }
}
