//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficient vectors are stored constant term first and kept trimmed
//! (no trailing zeros). The empty vector is the zero polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree<T>(p: &[T]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn to_rational(p: &[BigInt]) -> Vec<BigRational> {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

pub(crate) fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub(crate) fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

pub(crate) fn sign_at(p: &[BigRational], x: &BigRational) -> i32 {
    let v = eval(p, x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn derivative(p: &[BigRational]) -> Vec<BigRational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

pub(crate) fn add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x + y
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigRational]) -> Vec<BigRational> {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    add(a, &neg(b))
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let factor = rem.last().unwrap() / &lead;
        for (j, c) in b.iter().enumerate() {
            rem[shift + j] -= &factor * c;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Sturm chain of a squarefree polynomial.
pub(crate) fn sturm_chain(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut chain = vec![p.to_vec(), derivative(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(neg(&r));
    }
    chain
}

fn sign_changes(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for q in chain {
        let s = sign_at(q, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub(crate) fn count_roots(p: &[BigRational], lo: &BigRational, hi: &BigRational) -> usize {
    let chain = sturm_chain(p);
    sign_changes(&chain, lo).saturating_sub(sign_changes(&chain, hi))
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let small = n.to_u64()?;
    if small == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d != small / d {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
        if d > 5_000_000 {
            return None;
        }
    }
    Some(out)
}

fn format_poly(p: &[BigRational]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}*x"),
            _ => format!("{c}*x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

/// Exact test of whether integer polynomial `q` divides `p` over the rationals.
fn divides(q: &[BigRational], p: &[BigRational]) -> bool {
    div_rem(p, q).1.is_empty()
}

fn rational_root_factor(p: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = p.len() - 1;
    if p[0].is_zero() {
        return Some(vec![BigRational::zero(), BigRational::one()]);
    }
    let lead_divs = divisors(&p[n])?;
    let const_divs = divisors(&p[0])?;
    for num in &const_divs {
        for den in &lead_divs {
            for s in [1, -1] {
                let r = BigRational::new(num * s, den.clone());
                if eval(&to_rational(p), &r).is_zero() {
                    return Some(vec![-r, BigRational::one()]);
                }
            }
        }
    }
    None
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let mut out = Vec::new();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(xj.clone());
            basis = mul(&basis, &[-xj.clone(), BigRational::one()]);
            denom *= BigRational::from_integer(xi.clone()) - xj;
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        out = add(&out, &basis.iter().map(|c| c * &scale).collect::<Vec<_>>());
    }
    out
}

const KRONECKER_BUDGET: u64 = 400_000;

/// Checks irreducibility over the rationals of a primitive integer polynomial
/// of degree at least one.
///
/// Linear factors are found by the rational root test; factors of degree
/// `2..=n/2` by Kronecker's interpolation method.
pub(crate) fn check_irreducible(p: &[BigInt]) -> Result<()> {
    let n = p.len() - 1;
    if n <= 1 {
        return Ok(());
    }
    let pr = to_rational(p);
    match rational_root_factor(p) {
        Some(f) => {
            return Err(Error::NotIrreducible {
                factor: format_poly(&f),
            })
        }
        None if divisors(&p[0]).is_none() || divisors(&p[n]).is_none() => {
            return Err(Error::IrreducibilityUnverified)
        }
        None => {}
    }
    if n <= 3 {
        return Ok(());
    }
    // Sample points with few divisors keep the Kronecker search small.
    let mut samples: Vec<(usize, BigInt, Vec<BigInt>)> = Vec::new();
    for x in -30i64..=30 {
        let x = BigInt::from(x);
        let v = eval_int(p, &x);
        if let Some(d) = divisors(&v) {
            samples.push((d.len(), x, d));
        }
    }
    samples.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.abs().cmp(&b.1.abs())));
    for m in 2..=n / 2 {
        if samples.len() < m + 1 {
            return Err(Error::IrreducibilityUnverified);
        }
        let pts = &samples[..=m];
        let combos: u64 = pts
            .iter()
            .enumerate()
            .map(|(i, s)| s.0 as u64 * if i == 0 { 1 } else { 2 })
            .product();
        if combos > KRONECKER_BUDGET {
            return Err(Error::IrreducibilityUnverified);
        }
        let xs: Vec<BigInt> = pts.iter().map(|s| s.1.clone()).collect();
        let mut idx = vec![0usize; m + 1];
        let mut signs = vec![1i32; m + 1];
        loop {
            let ys: Vec<BigInt> = (0..=m)
                .map(|i| &pts[i].2[idx[i]] * BigInt::from(signs[i]))
                .collect();
            let q = interpolate(&xs, &ys);
            if degree(&q) == Some(m) && q.iter().all(|c| c.is_integer()) && divides(&q, &pr) {
                return Err(Error::NotIrreducible {
                    factor: format_poly(&q),
                });
            }
            // advance the mixed-radix counter; the first point keeps a positive sign
            let mut i = 0;
            loop {
                if i > m {
                    break;
                }
                if i > 0 && signs[i] == 1 {
                    signs[i] = -1;
                    break;
                }
                signs[i] = 1;
                idx[i] += 1;
                if idx[i] < pts[i].2.len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i > m {
                break;
            }
        }
    }
    Ok(())
}
