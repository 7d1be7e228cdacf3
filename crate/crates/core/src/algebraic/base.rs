use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{AlgebraicReal, FieldElement, NumberField};
use crate::error::{Error, Result};

/// A negative base `-beta` together with the left endpoint `l` of the
/// expansion interval `[l, l+1)`.
///
/// Invariants: `beta > 1` and `-1 < l <= 0`.
#[derive(Debug, Clone)]
pub struct Base {
    field: Arc<NumberField>,
    beta: FieldElement,
    neg_beta: FieldElement,
    l: FieldElement,
    l_plus_one: FieldElement,
}

impl Base {
    /// Validates a base from its raw description: minimal polynomial (constant
    /// term first), an isolating interval for beta and the power-basis
    /// coefficients of `l`.
    pub fn new(minpoly: &[BigInt], iso: (BigRational, BigRational), l_coeffs: &[BigRational]) -> Result<Self> {
        let field = Self::field_for(minpoly, iso)?;
        let l = FieldElement::from_coeffs(&field, l_coeffs.to_vec());
        Self::with_endpoint(l)
    }

    /// Builds the field Q(beta) after checking `beta > 1`.
    pub fn field_for(minpoly: &[BigInt], iso: (BigRational, BigRational)) -> Result<Arc<NumberField>> {
        let beta = AlgebraicReal::new(minpoly, iso.0, iso.1)?;
        if !beta.greater_than_one() {
            return Err(Error::BetaNotGreaterThanOne);
        }
        Ok(NumberField::new(beta))
    }

    /// Attaches an endpoint already living in Q(beta).
    pub fn with_endpoint(l: FieldElement) -> Result<Self> {
        let field = l.field().clone();
        if !field.generator().greater_than_one() {
            return Err(Error::BetaNotGreaterThanOne);
        }
        let minus_one = FieldElement::from_int(&field, -1);
        if l <= minus_one || l.is_positive() {
            return Err(Error::EndpointOutOfRange);
        }
        let beta = FieldElement::generator(&field);
        Ok(Base {
            neg_beta: -&beta,
            l_plus_one: l.add_int(1),
            field,
            beta,
            l,
        })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }

    pub fn neg_beta(&self) -> &FieldElement {
        &self.neg_beta
    }

    /// Left endpoint `l`.
    pub fn l(&self) -> &FieldElement {
        &self.l
    }

    pub fn l_plus_one(&self) -> &FieldElement {
        &self.l_plus_one
    }

    pub fn int(&self, n: i64) -> FieldElement {
        FieldElement::from_int(&self.field, n)
    }

    /// `l <= x < l + 1`.
    pub fn in_domain(&self, x: &FieldElement) -> bool {
        x >= &self.l && x < &self.l_plus_one
    }

    /// The Ito–Sadahiro endpoint `-beta/(beta+1)` in the given field.
    pub fn ito_sadahiro_endpoint(field: &Arc<NumberField>) -> FieldElement {
        let beta = FieldElement::generator(field);
        -(beta.checked_div(&beta.add_int(1)).expect("beta + 1 is nonzero"))
    }
}
