//! Dense univariate polynomials over a finite field.

use thiserror::Error;

use crate::gf::{Field, GfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("argument scale must be nonzero")]
    ZeroScale,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("interpolation points are not distinct")]
    DuplicatePoint,
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Polynomial with coefficients stored low-to-high; `coeffs[i]` is the
/// coefficient of x^i. Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Poly { field, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from canonical integer coefficients.
    pub fn from_canonical(field: F, coeffs: &[u64]) -> Result<Self, PolyError> {
        let coeffs = coeffs
            .iter()
            .map(|&c| field.from_canonical(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(field, coeffs))
    }

    pub fn zero(field: F) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Poly {
            field,
            coeffs: vec![one],
        }
    }

    /// c·x^deg
    pub fn monomial(field: F, c: F::Elem, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(field, coeffs)
    }

    /// Monic polynomial vanishing on the given multiset of roots.
    pub fn from_roots(field: F, roots: &[F::Elem]) -> Self {
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(field.one());
        for &r in roots {
            // multiply in place by (x - r)
            let neg_r = field.neg(r);
            coeffs.push(field.zero());
            for i in (0..coeffs.len()).rev() {
                let shifted = if i > 0 { coeffs[i - 1] } else { field.zero() };
                coeffs[i] = field.add(shifted, field.mul(neg_r, coeffs[i]));
            }
        }
        Self::new(field, coeffs)
    }

    /// Lagrange interpolation through `(x_i, y_i)`.
    pub fn interpolate(field: F, points: &[(F::Elem, F::Elem)]) -> Result<Self, PolyError> {
        let xs: Vec<F::Elem> = points.iter().map(|&(x, _)| x).collect();
        let mut sorted = xs.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != xs.len() {
            return Err(PolyError::DuplicatePoint);
        }
        let full = Self::from_roots(field.clone(), &xs);
        let mut acc = vec![field.zero(); points.len()];
        for (i, &(xi, yi)) in points.iter().enumerate() {
            if field.is_zero(yi) {
                continue;
            }
            // full / (x - xi) by synthetic division
            let basis = full.deflate(xi);
            let denom = xs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(field.one(), |d, (_, &xj)| field.mul(d, field.sub(xi, xj)));
            let scale = field.div(yi, denom)?;
            for (a, &c) in acc.iter_mut().zip(&basis.coeffs) {
                *a = field.add(*a, field.mul(scale, c));
            }
        }
        Ok(Self::new(field, acc))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    /// Coefficient of x^i, zero past the degree.
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<F::Elem> {
        let mut out = self.coeffs.clone();
        out.resize(len.max(out.len()), self.field.zero());
        out
    }

    pub fn to_canonical(&self) -> Vec<u64> {
        self.coeffs
            .iter()
            .map(|&c| self.field.to_canonical(c))
            .collect()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<F::Elem> {
        self.coeffs.last().copied()
    }

    pub fn count_nonzero(&self) -> usize {
        self.coeffs
            .iter()
            .filter(|&&c| !self.field.is_zero(c))
            .count()
    }

    pub fn eval(&self, x: F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::new(f.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::new(f.clone(), coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f.clone()));
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::new(f.clone(), out))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: F::Elem) -> Self {
        let f = &self.field;
        Self::new(
            f.clone(),
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    /// Returns q(x) = p(c·x): coefficient i is multiplied by c^i.
    pub fn scale_argument(&self, c: F::Elem) -> Result<Self, PolyError> {
        let f = &self.field;
        if f.is_zero(c) {
            return Err(PolyError::ZeroScale);
        }
        let mut power = f.one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let out = f.mul(a, power);
                power = f.mul(power, c);
                out
            })
            .collect();
        Ok(Self::new(f.clone(), coeffs))
    }

    /// Euclidean division: `self = quotient * divisor + remainder`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if f.is_zero(c) {
                continue;
            }
            quot[top - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        Self::new(f.clone(), coeffs)
    }

    /// Quotient of self by (x - r), discarding the remainder.
    fn deflate(&self, r: F::Elem) -> Self {
        let f = &self.field;
        let n = self.coeffs.len();
        if n <= 1 {
            return Self::zero(f.clone());
        }
        let mut out = vec![f.zero(); n - 1];
        let mut carry = f.zero();
        for i in (1..n).rev() {
            carry = f.add(self.coeffs[i], f.mul(carry, r));
            out[i - 1] = carry;
        }
        Self::new(f.clone(), out)
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch);
        }
        Ok(())
    }

    fn normalize(&mut self) {
        while let Some(&c) = self.coeffs.last() {
            if !self.field.is_zero(c) {
                break;
            }
            self.coeffs.pop();
        }
    }
}
