use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly;
use crate::error::{Error, Result};

/// A real algebraic number: the unique root of an irreducible integer
/// polynomial inside a rational isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicReal {
    minpoly: Vec<BigInt>,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicReal {
    /// Validates `minpoly` (constant term first) and the interval `[lo, hi]`.
    ///
    /// The polynomial is normalized to be primitive with positive leading
    /// coefficient. For a linear polynomial the interval collapses to the
    /// exact rational root.
    pub fn new(minpoly: &[BigInt], lo: BigRational, hi: BigRational) -> Result<Self> {
        let mut p = minpoly.to_vec();
        poly::trim(&mut p);
        if p.len() < 2 {
            return Err(Error::DegeneratePolynomial);
        }
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        let c = poly::content(&p);
        let c = if p.last().unwrap().is_negative() { -c } else { c };
        for x in &mut p {
            *x = &*x / &c;
        }
        poly::check_irreducible(&p)?;
        let pr = poly::to_rational(&p);
        let at_lo = poly::sign_at(&pr, &lo) == 0;
        let count = poly::count_roots(&pr, &lo, &hi) + usize::from(at_lo);
        if count != 1 {
            return Err(Error::NoRootIsolated { count });
        }
        if p.len() == 2 {
            let root = BigRational::new(-p[0].clone(), p[1].clone());
            return Ok(AlgebraicReal {
                minpoly: p,
                lo: root.clone(),
                hi: root,
            });
        }
        // Irreducible of degree >= 2: no rational roots, so the endpoints are
        // not roots and the signs at lo and hi differ.
        Ok(AlgebraicReal { minpoly: p, lo, hi })
    }

    /// Minimal polynomial, primitive, positive leading coefficient, constant first.
    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    /// The exact value when the number is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// Bisects `[lo, hi]` (an enclosure of this root) until its width is at most
    /// `width`. Returns the new enclosure; `self` is untouched.
    pub(crate) fn refine_from(
        &self,
        mut lo: BigRational,
        mut hi: BigRational,
        width: &BigRational,
    ) -> (BigRational, BigRational) {
        if self.lo == self.hi {
            return (self.lo.clone(), self.hi.clone());
        }
        let p = poly::to_rational(&self.minpoly);
        let s_lo = poly::sign_at(&p, &lo);
        let two = BigRational::from_integer(2.into());
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) / &two;
            let s = poly::sign_at(&p, &mid);
            if s == 0 {
                return (mid.clone(), mid);
            }
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo, hi)
    }

    /// Compares the root with a rational by refinement.
    pub fn cmp_rational(&self, q: &BigRational) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if let Some(r) = self.as_rational() {
            return r.cmp(q);
        }
        let p = poly::to_rational(&self.minpoly);
        if poly::sign_at(&p, q).is_zero() {
            return Equal;
        }
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let s_lo = poly::sign_at(&p, &lo);
        let two = BigRational::from_integer(2.into());
        loop {
            if &hi < q {
                return Less;
            }
            if &lo > q {
                return Greater;
            }
            let mid = (&lo + &hi) / &two;
            if poly::sign_at(&p, &mid) == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// True when the root exceeds one.
    pub fn greater_than_one(&self) -> bool {
        self.cmp_rational(&BigRational::one()) == std::cmp::Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }
    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn silver_ratio_isolated() {
        let a = AlgebraicReal::new(&ints(&[-1, -2, 1]), q(2), q(3)).unwrap();
        assert_eq!(a.degree(), 2);
        assert!(a.greater_than_one());
        assert_eq!(a.cmp_rational(&BigRational::new(12.into(), 5.into())), std::cmp::Ordering::Greater);
        assert_eq!(a.cmp_rational(&BigRational::new(29.into(), 12.into())), std::cmp::Ordering::Less);
    }

    #[test]
    fn interval_with_two_roots_is_rejected() {
        // roots of x^2 - 2x - 1 are 1 +- sqrt 2
        let e = AlgebraicReal::new(&ints(&[-1, -2, 1]), q(-1), q(3)).unwrap_err();
        assert_eq!(e, Error::NoRootIsolated { count: 2 });
        let e = AlgebraicReal::new(&ints(&[-1, -2, 1]), q(3), q(4)).unwrap_err();
        assert_eq!(e, Error::NoRootIsolated { count: 0 });
    }

    #[test]
    fn linear_root_is_exact() {
        let a = AlgebraicReal::new(&ints(&[-3, 2]), q(1), q(2)).unwrap();
        assert_eq!(a.as_rational(), Some(&BigRational::new(3.into(), 2.into())));
        let a = AlgebraicReal::new(&ints(&[-2, 1]), q(1), q(3)).unwrap();
        assert_eq!(a.as_rational(), Some(&q(2)));
        // root at the closed left endpoint is still isolated
        assert!(AlgebraicReal::new(&ints(&[-2, 1]), q(2), q(3)).is_ok());
    }

    #[test]
    fn negative_leading_coefficient_is_normalized() {
        let a = AlgebraicReal::new(&ints(&[2, 4, 3, -1]), q(4), q(5)).unwrap();
        assert_eq!(a.minpoly(), &ints(&[-2, -4, -3, 1])[..]);
    }

    #[test]
    fn reducible_rejected() {
        let e = AlgebraicReal::new(&ints(&[-4, 0, 1]), q(1), q(3)).unwrap_err();
        assert!(matches!(e, Error::NotIrreducible { .. }));
    }
}
