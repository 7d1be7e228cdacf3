//! Exact arithmetic in the real number field Q(beta).
//!
//! Elements are coefficient vectors in the power basis `1, beta, ..., beta^(d-1)`,
//! always reduced modulo the minimal polynomial, so structural equality is
//! numeric equality. Signs are decided by evaluating the element on a dyadic
//! enclosure of beta, doubling the working precision until zero is excluded.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly;
use super::real::AlgebraicReal;
use crate::error::{Error, Result};

const BASE_BITS: u64 = 64;
const LEVELS: usize = 24;

/// Fixed-point enclosure of the powers `beta^0 .. beta^(d-1)` scaled by `2^bits`.
#[derive(Debug)]
struct Enclosure {
    bits: u64,
    lo: BigRational,
    hi: BigRational,
    powers: Vec<(BigInt, BigInt)>,
}

/// The field Q(beta) for a fixed real algebraic `beta`.
pub struct NumberField {
    generator: AlgebraicReal,
    /// Monic minimal polynomial, constant first.
    modulus: Vec<BigRational>,
    /// `beta^(d+k)` reduced into the power basis, for `k = 0 .. d-2`.
    high_powers: Vec<Vec<BigRational>>,
    levels: Vec<OnceLock<Enclosure>>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumberField")
            .field("minpoly", &self.generator.minpoly())
            .field("interval", &self.generator.interval())
            .finish()
    }
}

impl NumberField {
    pub fn new(generator: AlgebraicReal) -> Arc<Self> {
        let p = generator.minpoly();
        let d = p.len() - 1;
        let lead = BigRational::from_integer(p[d].clone());
        let modulus: Vec<BigRational> = poly::to_rational(p).into_iter().map(|c| c / &lead).collect();
        // beta^d = -(m_0 + m_1 beta + ... + m_{d-1} beta^{d-1})
        let mut high_powers = Vec::new();
        let mut cur: Vec<BigRational> = modulus[..d].iter().map(|c| -c).collect();
        for _ in 0..d.saturating_sub(1) {
            high_powers.push(cur.clone());
            // multiply by beta
            let top = cur[d - 1].clone();
            let mut next = vec![BigRational::zero(); d];
            next[1..d].clone_from_slice(&cur[..d - 1]);
            for i in 0..d {
                next[i] -= &top * &modulus[i];
            }
            cur = next;
        }
        let levels = (0..LEVELS).map(|_| OnceLock::new()).collect();
        Arc::new(NumberField {
            generator,
            modulus,
            high_powers,
            levels,
        })
    }

    pub fn generator(&self) -> &AlgebraicReal {
        &self.generator
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn enclosure(&self, level: usize) -> &Enclosure {
        self.levels[level].get_or_init(|| {
            let bits = BASE_BITS << level;
            let (lo, hi) = if level == 0 {
                let (lo, hi) = self.generator.interval();
                (lo.clone(), hi.clone())
            } else {
                let prev = self.enclosure(level - 1);
                (prev.lo.clone(), prev.hi.clone())
            };
            let width = BigRational::new(BigInt::one(), BigInt::one() << (bits + 4));
            let (lo, hi) = self.generator.refine_from(lo, hi, &width);
            let scale = BigRational::from_integer(BigInt::one() << bits);
            let mut powers = Vec::with_capacity(self.degree());
            let mut plo = BigRational::one();
            let mut phi = BigRational::one();
            for _ in 0..self.degree() {
                let a = (&plo * &scale).floor().to_integer();
                let b = (&phi * &scale).ceil().to_integer();
                powers.push((a, b));
                plo *= &lo;
                phi *= &hi;
            }
            Enclosure { bits, lo, hi, powers }
        })
    }
}

/// An element of Q(beta).
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

/// Renders the element as a polynomial in `b` (standing for beta).
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "b")?,
                _ => write!(f, "b^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FieldElement {
    /// Builds an element from power-basis coefficients of any length, reducing
    /// modulo the minimal polynomial.
    pub fn from_coeffs(field: &Arc<NumberField>, coeffs: Vec<BigRational>) -> Self {
        let d = field.degree();
        let mut c = coeffs;
        if c.len() > d {
            let (_, r) = poly::div_rem(&c, &field.modulus);
            c = r;
        }
        c.resize(d, BigRational::zero());
        FieldElement {
            field: field.clone(),
            coeffs: c,
        }
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(n.into()))
    }

    pub fn from_rational(field: &Arc<NumberField>, q: BigRational) -> Self {
        Self::from_coeffs(field, vec![q])
    }

    /// The generator beta itself.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_coeffs(field, vec![BigRational::zero(), BigRational::one()])
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn same_field(&self, other: &Self) {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.modulus == other.field.modulus,
            "mixing elements of different fields"
        );
    }

    fn map(&self, f: impl Fn(&BigRational) -> BigRational) -> Self {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        self.map(|c| c * q)
    }

    pub fn add_int(&self, n: i64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += BigRational::from_integer(n.into());
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.same_field(other);
        let d = self.field.degree();
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = prod[..d].to_vec();
        for (k, c) in prod[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.field.high_powers[k]) {
                *o += c * r;
            }
        }
        FieldElement {
            field: self.field.clone(),
            coeffs: out,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, q.recip()));
        }
        let mut a = self.coeffs.clone();
        poly::trim(&mut a);
        let mut r0 = self.field.modulus.clone();
        let mut r1 = a;
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while poly::degree(&r1).unwrap_or(0) > 0 {
            let (q, r) = poly::div_rem(&r0, &r1);
            let s2 = poly::sub(&s0, &poly::mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant because the modulus is irreducible
        let g = r1[0].clone();
        let inv: Vec<BigRational> = s1.iter().map(|c| c / &g).collect();
        Ok(Self::from_coeffs(&self.field, inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.recip()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Fixed-point enclosure of the value at the given precision level.
    fn enclose(&self, level: usize) -> (BigInt, BigInt, u64) {
        let enc = self.field.enclosure(level);
        let mut lo = BigInt::zero();
        let mut hi = BigInt::zero();
        for (c, (plo, phi)) in self.coeffs.iter().zip(&enc.powers) {
            if c.is_zero() {
                continue;
            }
            let (n, d) = (c.numer(), c.denom());
            if c.is_positive() {
                lo += (n * plo).div_floor(d);
                hi += Integer::div_ceil(&(n * phi), d);
            } else {
                lo += (n * phi).div_floor(d);
                hi += Integer::div_ceil(&(n * plo), d);
            }
        }
        (lo, hi, enc.bits)
    }

    /// Exact sign: -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if let Some(q) = self.as_rational() {
            return sign_of(q);
        }
        for level in 0..LEVELS {
            let (lo, hi, _) = self.enclose(level);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
        }
        panic!("sign undecided at maximum precision")
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// The unique integer `n` with `n <= self < n + 1`.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        for level in 0..LEVELS {
            let (lo, hi, bits) = self.enclose(level);
            let a = lo >> bits;
            let b = hi >> bits;
            if a == b {
                return a;
            }
        }
        panic!("floor undecided at maximum precision");
    }

    /// Smallest integer `n` with `self <= n`.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Decimal string with `digits` digits after the point, rounded to
    /// nearest with ties away from zero.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigRational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let v = self.scale(&scale);
        let half = BigRational::new(1.into(), 2.into());
        let n = if v.is_negative() {
            -((-&v).add_rational(&half)).floor()
        } else {
            v.add_rational(&half).floor()
        };
        let neg = n.is_negative();
        let mut s = n.abs().to_string();
        if digits > 0 {
            if s.len() <= digits {
                s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
            }
            s.insert(s.len() - digits, '.');
        }
        if neg {
            s.insert(0, '-');
        }
        s
    }

    fn add_rational(&self, q: &BigRational) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += q;
        out
    }

    /// Floating-point approximation, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(17).parse().unwrap_or(f64::NAN)
    }

    /// Coefficients rendered as `p/q` strings (integers without a slash).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn sign_of(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.same_field(rhs);
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.same_field(rhs);
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.mul_impl(rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.map(|c| -c)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
