//! The gap word of the `(-beta)`-integers and its antimorphism.
//!
//! Letter `v_n` of the gap word is the label `k` of the gap between the
//! consecutive points `z_n < z_{n+1}`, with `z_0 = 0`. Multiplying a gap by
//! `-beta` reverses it and subdivides it into gaps, which defines an
//! antimorphism `Phi` with `Phi(uv) = Phi(v) Phi(u)`; `Psi = Phi^2` fixes
//! the gap word.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::admissibility::{is_strongly_admissible, RefStrings};
use crate::algebraic::{Base, FieldElement};
use crate::digits::{Digit, DigitString};
use crate::error::{Error, Result};
use crate::expansion::alphabet;
use crate::integers::{gamma, zbeta_between, GapStructure, ZbetaWindow};

/// A finite window of the gap word. `letters[origin]` is `v_0`, the gap
/// starting at the point `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapWord {
    letters: Vec<usize>,
    origin: usize,
    #[serde(skip)]
    candidates: Vec<Vec<usize>>,
}

impl GapWord {
    pub fn new(letters: Vec<usize>, origin: usize) -> Result<Self> {
        if origin > letters.len() {
            return Err(Error::InvalidArgument("origin outside the word".into()));
        }
        let candidates = letters.iter().map(|&k| vec![k]).collect();
        Ok(GapWord {
            letters,
            origin,
            candidates,
        })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `v_n`, if inside the window.
    pub fn letter(&self, n: i64) -> Option<usize> {
        let i = self.origin as i64 + n;
        (0..self.letters.len() as i64)
            .contains(&i)
            .then(|| self.letters[i as usize])
    }

    /// `v_0 v_1 ...`
    pub fn right(&self) -> &[usize] {
        &self.letters[self.origin..]
    }

    /// `v_{-1} v_{-2} ...`, read away from the origin.
    pub fn left_outward(&self) -> Vec<usize> {
        self.letters[..self.origin].iter().rev().copied().collect()
    }

    pub fn alphabet(&self) -> BTreeSet<usize> {
        self.letters.iter().copied().collect()
    }

    /// Every label whose gap length equals the observed gap, per position.
    pub fn candidates(&self) -> &[Vec<usize>] {
        &self.candidates
    }

    /// Points `z_n` recovered by summing gap lengths from `z_0 = 0`.
    pub fn positions(&self, structure: &GapStructure) -> Vec<FieldElement> {
        let b = structure.base();
        let mut left = vec![b.int(0)];
        for &k in self.letters[..self.origin].iter().rev() {
            let next = left.last().expect("nonempty") - structure.delta(k);
            left.push(next);
        }
        left.reverse();
        let mut acc = b.int(0);
        for &k in self.right() {
            acc = &acc + structure.delta(k);
            left.push(acc.clone());
        }
        left
    }

    pub fn to_json(&self) -> Value {
        json!({ "letters": self.letters, "origin": self.origin })
    }
}

/// Labels every gap of `window` by its factorization.
pub fn code_word(window: &ZbetaWindow, structure: &GapStructure) -> Result<GapWord> {
    let origin = window
        .origin()
        .ok_or_else(|| Error::InvalidArgument("window does not contain 0".into()))?;
    let mut letters = Vec::with_capacity(window.points.len().saturating_sub(1));
    let mut candidates = Vec::with_capacity(letters.capacity());
    for (i, pair) in window.points.windows(2).enumerate() {
        let unlabeled = || Error::UnlabeledGap {
            index: i as i64 - origin as i64,
            next: i as i64 + 1 - origin as i64,
        };
        let f = structure
            .factor_gap(&pair[0].digits.0, &pair[1].digits.0)
            .ok_or_else(unlabeled)?;
        let gap = &pair[1].value - &pair[0].value;
        if &gap != structure.delta(f.k) {
            return Err(unlabeled());
        }
        letters.push(f.k);
        candidates.push(structure.labels_matching(&gap));
    }
    Ok(GapWord {
        letters,
        origin,
        candidates,
    })
}

/// The largest digit-string length in the window; gap labels never exceed it.
pub fn max_label(window: &ZbetaWindow) -> usize {
    window.points.iter().map(|p| p.digits.len()).max().unwrap_or(0)
}

/// All `(-beta)`-integers in `[-bound, bound]` together with their gap word.
pub fn code_window(
    b: &Base,
    refs: &RefStrings,
    bound: &FieldElement,
) -> Result<(ZbetaWindow, GapStructure, GapWord)> {
    let window = crate::integers::zbeta_window(b, bound, refs)?;
    let structure = GapStructure::new(b, refs, max_label(&window) + 1);
    let word = code_word(&window, &structure)?;
    Ok((window, structure, word))
}

/// One record per point: exact and approximate value, gap to the next point
/// and its label.
pub fn window_records(window: &ZbetaWindow, structure: &GapStructure, digits: usize) -> Vec<Value> {
    let n = window.points.len();
    (0..n)
        .map(|i| {
            let p = &window.points[i];
            let next = window.points.get(i + 1);
            let gap = next.map(|q| (&q.value - &p.value).coeff_strings());
            let label = next
                .and_then(|q| structure.factor_gap(&p.digits.0, &q.digits.0))
                .map(|f| f.k);
            json!({
                "value_exact": p.value.coeff_strings(),
                "value_approx": p.value.to_decimal(digits),
                "digits": p.digits,
                "gap_to_next_exact": gap,
                "gap_label_k": label,
            })
        })
        .collect()
}

/// Parts of an image: `Phi(k) = S (k+1) ~R` for even `k` and
/// `Phi(k) = R (k+1) ~S` for odd `k`. When `Delta_{k+1} = 0` the middle gap
/// is degenerate and `middle` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RsWords {
    pub r: Vec<usize>,
    pub s: Vec<usize>,
    pub middle: bool,
}

/// Images of the antimorphism on letters `0 ..= budget`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MorphismTable {
    images: BTreeMap<usize, Vec<usize>>,
    rs_words: BTreeMap<usize, RsWords>,
}

impl MorphismTable {
    pub fn from_images(images: BTreeMap<usize, Vec<usize>>) -> Result<Self> {
        if let Some((&letter, _)) = images.iter().find(|(_, v)| v.is_empty()) {
            return Err(Error::InconsistentImage {
                letter,
                detail: "empty image".into(),
            });
        }
        Ok(MorphismTable {
            images,
            rs_words: BTreeMap::new(),
        })
    }

    pub fn images(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.images
    }

    pub fn rs_words(&self) -> &BTreeMap<usize, RsWords> {
        &self.rs_words
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.keys().copied()
    }

    pub fn image(&self, letter: usize) -> Result<&[usize]> {
        self.images
            .get(&letter)
            .map(Vec::as_slice)
            .ok_or(Error::LetterNotTabulated { letter })
    }

    /// Replaces one image; for experiments with modified tables.
    pub fn set_image(&mut self, letter: usize, image: Vec<usize>) {
        self.images.insert(letter, image);
        self.rs_words.remove(&letter);
    }

    /// `Phi(u)` for a finite word, reversing the order of the factors.
    pub fn apply(&self, word: &[usize]) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for &a in word.iter().rev() {
            out.extend_from_slice(self.image(a)?);
        }
        Ok(out)
    }

    /// `Psi(u) = Phi(Phi(u))`.
    pub fn apply_square(&self, word: &[usize]) -> Result<Vec<usize>> {
        self.apply(&self.apply(word)?)
    }

    /// `Psi` differs from the identity on some tabulated letter.
    pub fn square_is_non_identical(&self) -> Result<bool> {
        for a in self.letters() {
            if self.apply_square(&[a])? != [a] {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `{"0": [...], "1": [...], ..., "antimorphism": true}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (k, v) in &self.images {
            m.insert(k.to_string(), json!(v));
        }
        m.insert("antimorphism".into(), Value::Bool(true));
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("morphism table must be an object".into()))?;
        let mut images = BTreeMap::new();
        for (key, val) in obj {
            if key == "antimorphism" {
                if val != &Value::Bool(true) {
                    return Err(Error::Parse("only antimorphisms are supported".into()));
                }
                continue;
            }
            let letter: usize = key
                .parse()
                .map_err(|_| Error::Parse(format!("invalid letter {key:?}")))?;
            let image: Vec<usize> = serde_json::from_value(val.clone())
                .map_err(|e| Error::Parse(format!("image of {letter}: {e}")))?;
            images.insert(letter, image);
        }
        Self::from_images(images)
    }
}

/// An adjacent pair `x < y` of `(-beta)`-integers whose gap has label `k`,
/// written `x, y = gamma(w (d-1) max(k)), gamma(w d min(k))` (swapped for odd `k`).
#[derive(Debug, Clone)]
struct Occurrence {
    w: Vec<Digit>,
    d: Digit,
    x: FieldElement,
    y: FieldElement,
}

fn find_occurrences(structure: &GapStructure, k: usize, max_w: usize) -> Result<Vec<Occurrence>> {
    let b = structure.base();
    let refs = structure.refs();
    let digits: Vec<Digit> = alphabet(b).collect();
    let mut ws: Vec<Vec<Digit>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<Digit>> = vec![Vec::new()];
    for _ in 0..max_w {
        let mut next = Vec::new();
        for w in &frontier {
            for &a in &digits {
                if w.is_empty() && a == 0 {
                    continue;
                }
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        ws.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    for w in &ws {
        for &d in &digits {
            if !digits.contains(&(d - 1)) {
                continue;
            }
            let mut lower = w.clone();
            lower.push(d - 1);
            lower.extend_from_slice(structure.max(k));
            let mut upper = w.clone();
            upper.push(d);
            upper.extend_from_slice(structure.min(k));
            let (xs, ys) = if k.is_multiple_of(2) { (lower, upper) } else { (upper, lower) };
            let strong = |s: &Vec<Digit>| is_strongly_admissible(&DigitString(s.clone()).then_zeros(), refs);
            if !strong(&xs) || !strong(&ys) {
                continue;
            }
            let (x, y) = (gamma(b, &xs), gamma(b, &ys));
            if x >= y {
                continue;
            }
            if zbeta_between(b, &x, &y, refs)?.points.len() != 2 {
                continue;
            }
            out.push(Occurrence { w: w.clone(), d, x, y });
        }
    }
    Ok(out)
}

fn image_of(structure: &GapStructure, k: usize, occ: &Occurrence) -> Result<(Vec<usize>, RsWords)> {
    let b = structure.base();
    let inconsistent = |detail: String| Error::InconsistentImage { letter: k, detail };
    let lo = &occ.y * b.neg_beta();
    let hi = &occ.x * b.neg_beta();
    let window = zbeta_between(b, &lo, &hi, structure.refs())?;
    let mut labels = Vec::with_capacity(window.points.len());
    for pair in window.points.windows(2) {
        let f = structure
            .factor_gap(&pair[0].digits.0, &pair[1].digits.0)
            .ok_or_else(|| inconsistent("unfactorizable gap in image".into()))?;
        labels.push(f.k);
    }
    // the gap k+1 sits between gamma(w d min(k+1)) and gamma(w (d-1) max(k+1))
    let with = |d: Digit, tail: &[Digit]| {
        let mut s = occ.w.clone();
        s.push(d);
        s.extend_from_slice(tail);
        gamma(b, &s)
    };
    let a = with(occ.d, structure.min(k + 1));
    let c = with(occ.d - 1, structure.max(k + 1));
    let (left, right) = if k.is_multiple_of(2) { (a, c) } else { (c, a) };
    let i = window
        .points
        .iter()
        .position(|p| p.value == left)
        .ok_or_else(|| inconsistent("middle gap not found".into()))?;
    let (before, after, middle) = if left == right {
        (labels[..i].to_vec(), labels[i..].to_vec(), false)
    } else {
        if window.points.get(i + 1).map(|p| &p.value) != Some(&right) || labels[i] != k + 1 {
            return Err(inconsistent(format!("middle gap is not labelled {}", k + 1)));
        }
        (labels[..i].to_vec(), labels[i + 1..].to_vec(), true)
    };
    let rev = |v: Vec<usize>| v.into_iter().rev().collect::<Vec<_>>();
    let rs = if k.is_multiple_of(2) {
        RsWords {
            s: before,
            r: rev(after),
            middle,
        }
    } else {
        RsWords {
            r: before,
            s: rev(after),
            middle,
        }
    };
    Ok((labels, rs))
}

/// Tabulates the antimorphism on letters `0 ..= letter_budget`. Each image is
/// read off every adjacent pair realizing the letter whose prefix `w` has at
/// most two digits; all of them must agree.
pub fn extract_antimorphism(b: &Base, refs: &RefStrings, letter_budget: usize) -> Result<MorphismTable> {
    let structure = GapStructure::new(b, refs, letter_budget + 5);
    extract_with(&structure, letter_budget)
}

pub fn extract_with(structure: &GapStructure, letter_budget: usize) -> Result<MorphismTable> {
    if structure.max_k() < letter_budget + 4 {
        return Err(Error::InvalidArgument("gap structure too short for the letter budget".into()));
    }
    let mut table = MorphismTable::default();
    for k in 0..=letter_budget {
        let occurrences = find_occurrences(structure, k, 2)?;
        let mut found: Option<(Vec<usize>, RsWords)> = None;
        for occ in &occurrences {
            let got = image_of(structure, k, occ)?;
            match &found {
                None => found = Some(got),
                Some(prev) if prev != &got => {
                    return Err(Error::InconsistentImage {
                        letter: k,
                        detail: format!("{:?} vs {:?}", prev.0, got.0),
                    })
                }
                Some(_) => {}
            }
        }
        let (image, rs) = found.ok_or(Error::GapNotRealized { letter: k })?;
        if image.is_empty() {
            return Err(Error::InconsistentImage {
                letter: k,
                detail: "empty image".into(),
            });
        }
        table.images.insert(k, image);
        table.rs_words.insert(k, rs);
    }
    Ok(table)
}

/// Checks `Psi(v) = v` on the `horizon` letters on each side of the origin.
pub fn verify_fixed_point(word: &GapWord, table: &MorphismTable, horizon: usize) -> Result<bool> {
    let right = word.right();
    let left = word.left_outward();
    if horizon == 0 || right.len() < horizon || left.len() < horizon {
        return Err(Error::HorizonTooShort { horizon });
    }
    let step = |(l, r): (Vec<usize>, Vec<usize>)| -> Result<(Vec<usize>, Vec<usize>)> {
        let mut new_right = Vec::new();
        for &a in &l {
            new_right.extend_from_slice(table.image(a)?);
        }
        let mut new_left = Vec::new();
        for &a in &r {
            new_left.extend(table.image(a)?.iter().rev());
        }
        Ok((new_left, new_right))
    };
    // images are nonempty, so the first `horizon` letters of an image depend
    // only on the first `horizon` letters of its argument
    let (mut l1, mut r1) = step((left[..horizon].to_vec(), right[..horizon].to_vec()))?;
    l1.truncate(horizon);
    r1.truncate(horizon);
    let (l2, r2) = step((l1, r1))?;
    if l2.len() < horizon || r2.len() < horizon {
        return Err(Error::HorizonTooShort { horizon });
    }
    Ok(l2[..horizon] == left[..horizon] && r2[..horizon] == right[..horizon])
}

/// Letter-to-letter projection onto a finite alphabet, with the induced
/// antimorphism `phi` satisfying `Pi(Phi(a)) = phi(Pi(a))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub alphabet: Vec<usize>,
    pub map: BTreeMap<usize, usize>,
    pub images: BTreeMap<usize, Vec<usize>>,
}

impl Projection {
    pub fn project(&self, letter: usize) -> Option<usize> {
        self.map.get(&letter).copied()
    }

    pub fn project_word(&self, word: &GapWord) -> Result<GapWord> {
        let letters = word
            .letters()
            .iter()
            .map(|&a| self.project(a).ok_or(Error::LetterNotTabulated { letter: a }))
            .collect::<Result<Vec<_>>>()?;
        GapWord::new(letters, word.origin())
    }

    pub fn table(&self) -> MorphismTable {
        MorphismTable {
            images: self.images.clone(),
            rs_words: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alphabet": self.alphabet,
            "map": self.map.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>(),
            "phi": self.table().to_json(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectionOutcome {
    Found(Projection),
    NotFound { letter_budget: usize, reason: String },
}

impl ProjectionOutcome {
    pub fn found(&self) -> Option<&Projection> {
        match self {
            ProjectionOutcome::Found(p) => Some(p),
            ProjectionOutcome::NotFound { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ProjectionOutcome::Found(p) => json!({ "found": true, "projection": p.to_json() }),
            ProjectionOutcome::NotFound { letter_budget, reason } => {
                json!({ "found": false, "letter_budget": letter_budget, "reason": reason })
            }
        }
    }
}

/// Coarsest identification of tabulated letters with equal gap lengths whose
/// projected images agree. A letter occurring in some image but lacking its
/// own image joins the class of the first tabulated letter with the same gap
/// length, and that class must hold at least two tabulated letters.
pub fn project_finite(table: &MorphismTable, structure: &GapStructure, word: &GapWord) -> Result<ProjectionOutcome> {
    let tab: Vec<usize> = table.letters().collect();
    let budget = tab.last().copied().unwrap_or(0);
    let not_found = |reason: String| {
        Ok(ProjectionOutcome::NotFound {
            letter_budget: budget,
            reason,
        })
    };
    let extras: BTreeSet<usize> = table
        .images
        .values()
        .flatten()
        .copied()
        .filter(|a| !table.images.contains_key(a))
        .collect();
    if let Some(&top) = extras.iter().chain(tab.iter()).max() {
        if top > structure.max_k() {
            return Err(Error::InvalidArgument("gap structure too short for the table".into()));
        }
    }
    for &a in word.letters() {
        table.image(a)?;
    }
    // class id = smallest member
    let mut class: BTreeMap<usize, usize> = BTreeMap::new();
    for &a in &tab {
        let rep = tab
            .iter()
            .copied()
            .find(|&c| structure.delta(c) == structure.delta(a))
            .expect("a itself");
        class.insert(a, rep);
    }
    let extra_class = |class: &BTreeMap<usize, usize>, e: usize| {
        tab.iter()
            .copied()
            .find(|&c| structure.delta(c) == structure.delta(e))
            .map(|c| class[&c])
            .unwrap_or(e)
    };
    loop {
        let cls = |a: usize| class.get(&a).copied().unwrap_or_else(|| extra_class(&class, a));
        let signature = |a: usize| {
            (
                class[&a],
                table.images[&a].iter().map(|&x| cls(x)).collect::<Vec<_>>(),
            )
        };
        let mut first: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut next = BTreeMap::new();
        for &a in &tab {
            let rep = *first.entry(signature(a)).or_insert(a);
            next.insert(a, rep);
        }
        if next == class {
            break;
        }
        class = next;
    }
    let pi = |a: usize| class.get(&a).copied().unwrap_or_else(|| extra_class(&class, a));
    for &e in &extras {
        let c = pi(e);
        let members = tab.iter().filter(|&&a| class[&a] == c).count();
        if members < 2 {
            return not_found(format!("letter {e} is not identified with a confirmed class"));
        }
    }
    let mut images = BTreeMap::new();
    let mut queue: VecDeque<usize> = word.letters().iter().map(|&a| pi(a)).collect();
    if queue.is_empty() {
        queue.push_back(pi(0));
    }
    while let Some(r) = queue.pop_front() {
        if images.contains_key(&r) {
            continue;
        }
        let Some(img) = table.images.get(&r) else {
            return not_found(format!("letter {r} has no image"));
        };
        let projected: Vec<usize> = img.iter().map(|&x| pi(x)).collect();
        queue.extend(projected.iter().copied());
        images.insert(r, projected);
    }
    let alphabet: Vec<usize> = images.keys().copied().collect();
    let map = tab.iter().chain(extras.iter()).map(|&a| (a, pi(a))).collect();
    Ok(ProjectionOutcome::Found(Projection { alphabet, map, images }))
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
    fn integer_base_projects_to_one_letter() {
        let b = parse_base("-2,1", "1,3", "-1/2").unwrap();
        let r = RefStrings::compute(&b, 50).unwrap();
        let (window, _structure, word) = code_window(&b, &r, &b.int(8)).unwrap();
        assert_eq!(window.values(), (-8..=8).map(|n| b.int(n)).collect::<Vec<_>>());
        // every gap has length 1, but the labels still follow the factorization
        assert!(word.candidates().iter().all(|c| c.contains(&0)));
        assert!(word.letters().iter().any(|&k| k > 0));
        let budget = *word.alphabet().iter().max().unwrap();
        let table = extract_with(&structure_for(&b, &r, budget), budget).unwrap();
        assert!(verify_fixed_point(&word, &table, 8).unwrap());
        let p = project_finite(&table, &structure_for(&b, &r, budget), &word).unwrap();
        let p = p.found().unwrap();
        assert_eq!(p.alphabet, vec![0]);
        assert!(p.project_word(&word).unwrap().letters().iter().all(|&a| a == 0));
    }

    fn structure_for(b: &Base, r: &RefStrings, budget: usize) -> GapStructure {
        GapStructure::new(b, r, budget + 5)
    }

    #[test]
    fn closing_example_images() {
        let (b, r) = closing();
        let table = extract_antimorphism(&b, &r, 5).unwrap();
        assert_eq!(table.image(0).unwrap(), &[0, 0, 1, 0, 0]);
        assert_eq!(table.image(1).unwrap(), &[2]);
        assert_eq!(table.image(2).unwrap(), &[3]);
        assert_eq!(table.image(3).unwrap(), &[0, 0, 1, 0, 4, 0, 1, 0, 0]);
        assert_eq!(table.image(4).unwrap(), &[5]);
        assert_eq!(table.image(5).unwrap(), &[0, 0, 1, 0, 6, 0, 1, 0, 0]);
        assert_eq!(
            table.rs_words()[&3],
            RsWords {
                r: vec![0, 0, 1, 0],
                s: vec![0, 0, 1, 0],
                middle: true
            }
        );
    }

    #[test]
    fn fixed_point_and_mutation() {
        let (b, r) = closing();
        let (window, structure, word) = code_window(&b, &r, &b.int(40)).unwrap();
        assert_eq!(word.positions(&structure), window.values());
        let budget = *word.alphabet().iter().max().unwrap();
        let mut table = extract_antimorphism(&b, &r, budget).unwrap();
        let h = word.origin().min(word.len() - word.origin());
        assert!(verify_fixed_point(&word, &table, h).unwrap());
        assert!(table.square_is_non_identical().unwrap());
        table.set_image(0, vec![0, 0, 1, 0, 1]);
        assert!(!verify_fixed_point(&word, &table, h).unwrap());
        assert_eq!(
            verify_fixed_point(&word, &table, word.len()).unwrap_err(),
            Error::HorizonTooShort { horizon: word.len() }
        );
    }

    #[test]
    fn table_json_round_trip() {
        let mut images = BTreeMap::new();
        images.insert(0, vec![0, 0, 1]);
        images.insert(1, vec![2]);
        let t = MorphismTable::from_images(images).unwrap();
        let v = t.to_json();
        assert_eq!(v.to_string(), r#"{"0":[0,0,1],"1":[2],"antimorphism":true}"#);
        assert_eq!(MorphismTable::from_json(&v).unwrap(), t);
        assert_eq!(t.apply(&[0, 1]).unwrap(), vec![2, 0, 0, 1]);
        assert_eq!(t.image(2).unwrap_err(), Error::LetterNotTabulated { letter: 2 });
    }
}
