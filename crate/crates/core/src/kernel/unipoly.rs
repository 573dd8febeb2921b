//! Univariate polynomials in `t` with coefficients in ℚ[x1..xm].

use std::fmt;

use super::multipoly::{write_term, x_name, MultiPoly};
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::factor::RatUniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPolyOverRing {
    num_vars: usize,
    /// `coeffs[i]` multiplies `t^i`; the last entry is nonzero.
    coeffs: Vec<MultiPoly>,
}

impl UniPolyOverRing {
    pub fn new(num_vars: usize, mut coeffs: Vec<MultiPoly>) -> Self {
        assert!(coeffs.iter().all(|c| c.num_vars() == num_vars));
        while coeffs.last().is_some_and(MultiPoly::is_zero) {
            coeffs.pop();
        }
        UniPolyOverRing { num_vars, coeffs }
    }

    pub fn zero(num_vars: usize) -> Self {
        UniPolyOverRing {
            num_vars,
            coeffs: Vec::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::new(num_vars, vec![MultiPoly::one(num_vars)])
    }

    /// `t - a`.
    pub fn linear(a: &MultiPoly) -> Self {
        let n = a.num_vars();
        Self::new(n, vec![-a, MultiPoly::one(n)])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> MultiPoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.num_vars))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(MultiPoly::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.num_vars);
        }
        let mut out = vec![MultiPoly::zero(self.num_vars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(self.num_vars, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.num_vars), |acc, _| acc.mul(self))
    }

    /// Division by a monic polynomial: returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        if !divisor.is_monic() {
            return Err(Error::internal("div_rem_monic: divisor is not monic"));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.num_vars), self.clone()));
        }
        let mut quot = vec![MultiPoly::zero(self.num_vars); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let lead = std::mem::replace(&mut rem[i], MultiPoly::zero(self.num_vars));
            if lead.is_zero() {
                continue;
            }
            for j in 0..dd {
                rem[i - dd + j] = &rem[i - dd + j] - &(&lead * &divisor.coeffs[j]);
            }
            quot[i - dd] = lead;
        }
        rem.truncate(dd);
        Ok((Self::new(self.num_vars, quot), Self::new(self.num_vars, rem)))
    }

    /// Exact quotient by a monic divisor, or `None` if the remainder is nonzero.
    pub fn exact_div_monic(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_monic(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Specializes every coefficient at `x = point`.
    pub fn specialize(&self, point: &[Rational]) -> Result<RatUniPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.evaluate(point))
            .collect::<Result<Vec<_>>>()?;
        Ok(RatUniPoly::new(coeffs))
    }

    /// No coefficient carries a rational denominator.
    pub fn is_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.terms().iter().all(|(_, q)| q.is_integer()))
    }

    pub fn constant_term(&self) -> MultiPoly {
        self.coeff(0)
    }
}

impl fmt::Display for UniPolyOverRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            for (m, q) in c.terms() {
                let mut factors = m.factors(x_name);
                if i > 0 {
                    factors.push(("t".to_string(), i as u32));
                }
                write_term(&mut out, first, q, &factors);
                first = false;
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;

    #[test]
    fn renders_dual_number_minimal_polynomial() {
        let x1 = MultiPoly::var(2, 0);
        let p = UniPolyOverRing::linear(&x1).pow(2);
        assert_eq!(p.to_string(), "t^2 - 2*x1*t + x1^2");
        assert!(p.is_monic());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn monic_division() {
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        let a = UniPolyOverRing::linear(&x1);
        let b = UniPolyOverRing::linear(&x2);
        let ab = a.mul(&b);
        assert_eq!(ab.exact_div_monic(&a).unwrap(), b);
        let (_, r) = ab.div_rem_monic(&UniPolyOverRing::linear(&(&x1 + &x2))).unwrap();
        assert!(!r.is_zero());
        let s = ab.specialize(&[rat(1), rat(2)]).unwrap();
        assert_eq!(s.to_string(), "t^2 - 3*t + 2");
    }
}
