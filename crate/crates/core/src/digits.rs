//! Finite and eventually periodic digit strings.
//!
//! Text form: finite strings are comma-separated integers (`"1,-2,0"`);
//! eventually periodic strings are `"pre|period"` (`"2,0|1"` is `2 0 1 1 1 ...`,
//! `"|0"` is the zero string). Negative digits are plain negative integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Digit = i64;

/// A finite word of integer digits, most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DigitString(pub Vec<Digit>);

impl DigitString {
    pub fn new(digits: Vec<Digit>) -> Self {
        DigitString(digits)
    }

    pub fn empty() -> Self {
        DigitString(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        DigitString(self.0.iter().map(|d| -d).collect())
    }

    /// Drops leading zeros.
    pub fn strip_leading_zeros(&self) -> Self {
        let start = self.0.iter().position(|&d| d != 0).unwrap_or(self.0.len());
        DigitString(self.0[start..].to_vec())
    }

    /// The infinite string `self 0^omega`.
    pub fn then_zeros(&self) -> EventuallyPeriodicString {
        EventuallyPeriodicString::new(self.0.clone(), vec![0]).expect("nonempty period")
    }

    /// Compact rendering with the overline convention spelled `~d` for `-d`.
    pub fn overline(&self) -> String {
        overline(&self.0)
    }
}

fn overline(d: &[Digit]) -> String {
    d.iter()
        .map(|&x| if x < 0 { format!("~{}", -x) } else { x.to_string() })
        .collect::<Vec<_>>()
        .join("")
}

fn join(d: &[Digit]) -> String {
    d.iter().map(Digit::to_string).collect::<Vec<_>>().join(",")
}

fn parse_list(s: &str) -> Result<Vec<Digit>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Digit>()
                .map_err(|_| Error::Parse(format!("invalid digit {t:?}")))
        })
        .collect()
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl FromStr for DigitString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(DigitString(parse_list(s)?))
    }
}

impl From<Vec<Digit>> for DigitString {
    fn from(v: Vec<Digit>) -> Self {
        DigitString(v)
    }
}

/// An infinite digit string `preperiod · period^omega` in canonical form:
/// the period is primitive and the preperiod is as short as possible.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EventuallyPeriodicString {
    preperiod: Vec<Digit>,
    period: Vec<Digit>,
}

impl EventuallyPeriodicString {
    pub fn new(preperiod: Vec<Digit>, period: Vec<Digit>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidArgument("period must be nonempty".into()));
        }
        let mut period = primitive_root(period);
        let mut preperiod = preperiod;
        while let (Some(&a), Some(&b)) = (preperiod.last(), period.last()) {
            if a != b {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(EventuallyPeriodicString { preperiod, period })
    }

    /// `0^omega`.
    pub fn zeros() -> Self {
        EventuallyPeriodicString {
            preperiod: Vec::new(),
            period: vec![0],
        }
    }

    pub fn purely_periodic(period: Vec<Digit>) -> Result<Self> {
        Self::new(Vec::new(), period)
    }

    pub fn preperiod(&self) -> &[Digit] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Digit] {
        &self.period
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    /// True when the string ends in `0^omega`.
    pub fn is_finite(&self) -> bool {
        self.period == [0]
    }

    /// Digit at 0-based position `i` (position `i + 1` in 1-based indexing).
    pub fn digit(&self, i: usize) -> Digit {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<Digit> {
        (0..n).map(|i| self.digit(i)).collect()
    }

    /// Number of distinct shifts `sigma^0, sigma^1, ...` of this string.
    pub fn distinct_shifts(&self) -> usize {
        self.preperiod.len() + self.period.len()
    }

    /// The shifted string `s_{n+1} s_{n+2} ...`.
    pub fn shift(&self, n: usize) -> Self {
        if n <= self.preperiod.len() {
            return EventuallyPeriodicString {
                preperiod: self.preperiod[n..].to_vec(),
                period: self.period.clone(),
            };
        }
        let mut period = self.period.clone();
        period.rotate_left((n - self.preperiod.len()) % self.period.len());
        EventuallyPeriodicString {
            preperiod: Vec::new(),
            period,
        }
    }

    /// `word · self`.
    pub fn prepend(&self, word: &[Digit]) -> Self {
        let mut pre = word.to_vec();
        pre.extend_from_slice(&self.preperiod);
        Self::new(pre, self.period.clone()).expect("nonempty period")
    }

    pub fn negated(&self) -> Self {
        EventuallyPeriodicString {
            preperiod: self.preperiod.iter().map(|d| -d).collect(),
            period: self.period.iter().map(|d| -d).collect(),
        }
    }

    /// Digits of the finite part when the string ends in zeros.
    pub fn finite_part(&self) -> Option<DigitString> {
        self.is_finite().then(|| DigitString(self.preperiod.clone()))
    }

    pub fn overline(&self) -> String {
        format!("{}({})^w", overline(&self.preperiod), overline(&self.period))
    }
}

fn primitive_root(period: Vec<Digit>) -> Vec<Digit> {
    let n = period.len();
    for p in 1..n {
        if n.is_multiple_of(p) && (p..n).all(|i| period[i] == period[i - p]) {
            return period[..p].to_vec();
        }
    }
    period
}

impl fmt::Display for EventuallyPeriodicString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", join(&self.preperiod), join(&self.period))
    }
}

/// Accepts `"pre|period"`, or a bare finite list meaning `list · 0^omega`.
impl FromStr for EventuallyPeriodicString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('|') {
            Some((pre, per)) => Self::new(parse_list(pre)?, parse_list(per)?),
            None => Self::new(parse_list(s)?, vec![0]),
        }
    }
}
