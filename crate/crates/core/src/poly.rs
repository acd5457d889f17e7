//! Integer polynomials in one variable `t` with overflow-checked arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// `c * t^k`.
    pub fn monomial(c: i128, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Result<Self> {
        let mut coeffs = vec![0i128; k + 1];
        let mut binom: i128 = 1;
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = if i % 2 == 0 { binom } else { -binom };
            // C(k, i+1) = C(k, i) * (k - i) / (i + 1)
            binom = binom.checked_mul((k - i) as i128).ok_or(Error::Overflow)? / (i as i128 + 1);
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Zero for the zero polynomial.
    pub fn leading_coefficient(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).checked_add(other.coeff(i)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    pub fn checked_scale(&self, c: i128) -> Result<Self> {
        let coeffs =
            self.coeffs.iter().map(|&a| a.checked_mul(c).ok_or(Error::Overflow)).collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// `self * (1 - t)^k`.
    pub fn mul_one_minus_t_pow(&self, k: usize) -> Result<Self> {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..k {
            coeffs.push(0);
            for i in (1..coeffs.len()).rev() {
                coeffs[i] = coeffs[i].checked_sub(coeffs[i - 1]).ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// Exact division by `(1 - t)`; `None` unless the value at 1 is zero.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() || self.eval_at_one().ok()? != 0 {
            return None;
        }
        // p(t) = (1 - t) q(t)  ==>  q_i = sum_{j <= i} p_j
        let mut q = Vec::with_capacity(self.coeffs.len() - 1);
        let mut acc: i128 = 0;
        for &c in &self.coeffs[..self.coeffs.len() - 1] {
            acc = acc.checked_add(c)?;
            q.push(acc);
        }
        Some(IntPolynomial::from_coeffs(q))
    }

    pub fn eval_at_one(&self) -> Result<i128> {
        self.coeffs.iter().try_fold(0i128, |acc, &c| acc.checked_add(c)).ok_or(Error::Overflow)
    }

    pub fn eval(&self, t: i128) -> Result<i128> {
        self.coeffs.iter().rev().try_fold(0i128, |acc, &c| acc.checked_mul(t)?.checked_add(c)).ok_or(Error::Overflow)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Renders as `c0 + c1*t + c2*t^2`, skipping zero terms; zero prints as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
