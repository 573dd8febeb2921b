//! Sparse multivariate polynomials over ℚ.
//!
//! Terms are kept sorted in descending graded-lexicographic order
//! (x1 > x2 > ... > xm) with no zero coefficients, so structural equality is
//! polynomial equality and the leading term is always `terms[0]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, is_one_abs, Rational};
use crate::error::{Error, Result};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; num_vars],
        }
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Monomial { degree: 1, exps }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            exps,
        })
    }

    pub(crate) fn factors(&self, name: impl Fn(usize) -> String) -> Vec<(String, u32)> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (name(i), e))
            .collect()
    }
}

/// Result of a homogeneity test. The zero polynomial is homogeneous of every
/// degree and reports degree 0 through [`Homogeneity::degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Degree(u32),
    Zero,
    Mixed,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            Homogeneity::Zero => Some(0),
            Homogeneity::Mixed => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    num_vars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: Vec::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rational::one())
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(num_vars), c)]
        };
        MultiPoly { num_vars, terms }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable index {i} out of range for {num_vars} variables");
        MultiPoly {
            num_vars,
            terms: vec![(Monomial::var(num_vars, i), Rational::one())],
        }
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let num_vars = exps.len();
        Self::from_terms(num_vars, vec![(Monomial::new(exps), c)])
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(num_vars: usize, mut terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.iter().all(|(m, _)| m.exps.len() == num_vars));
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        MultiPoly {
            num_vars,
            terms: out,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree)
    }

    /// Degree in the single variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exps[i]).max().unwrap_or(0)
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        MultiPoly {
            num_vars: self.num_vars,
            terms: out,
        }
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(self.num_vars);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|v| *v += &c)
                    .or_insert(c);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly {
            num_vars: self.num_vars,
            terms,
        }
    }

    /// Multiplies by the single term `c * m`; order is preserved.
    fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.num_vars);
        }
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        self.mul_term(&Monomial::one(self.num_vars), c)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.num_vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in ℚ[x]. Panics if `d` is zero.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "exact_div by zero polynomial");
        assert_eq!(self.num_vars, d.num_vars, "exact_div variable count mismatch");
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                terms.push((m.div(dm)?, c * &inv));
            }
            return Some(MultiPoly {
                num_vars: self.num_vars,
                terms,
            });
        }
        let (dm, dc) = &d.terms[0];
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            rem = rem.merge(&d.mul_term(&qm, &qc), true);
            quot.push((qm, qc));
        }
        // Leading monomials of the quotient are produced in strictly decreasing order.
        Some(MultiPoly {
            num_vars: self.num_vars,
            terms: quot,
        })
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.num_vars {
            return Err(Error::ArityMismatch {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes `x_i ↦ forms[i]`. All forms must share one variable set,
    /// which becomes the variable set of the result. Used with linear forms
    /// for pullbacks along linear maps and with bilinear forms for products
    /// of generic elements.
    pub fn substitute(&self, forms: &[MultiPoly]) -> Result<MultiPoly> {
        if forms.len() != self.num_vars {
            return Err(Error::ArityMismatch {
                expected: self.num_vars,
                got: forms.len(),
            });
        }
        let target = match forms.first() {
            Some(f) => f.num_vars,
            None => {
                return Ok(MultiPoly::constant(0, self.constant_term()));
            }
        };
        for f in forms {
            if f.num_vars != target {
                return Err(Error::VarCountMismatch {
                    left: target,
                    right: f.num_vars,
                });
            }
        }
        // powers[i][e] = forms[i]^e, filled lazily
        let mut powers: Vec<Vec<MultiPoly>> = forms
            .iter()
            .map(|_| vec![MultiPoly::one(target)])
            .collect();
        let mut all_terms = Vec::new();
        for (m, c) in &self.terms {
            let mut v = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().product(&forms[i]);
                    powers[i].push(next);
                }
                v = v.product(&powers[i][e as usize]);
                if v.is_zero() {
                    break;
                }
            }
            all_terms.extend(v.terms);
        }
        Ok(MultiPoly::from_terms(target, all_terms))
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let Some((first, _)) = self.terms.first() else {
            return Homogeneity::Zero;
        };
        if self.terms.iter().all(|(m, _)| m.degree == first.degree) {
            Homogeneity::Degree(first.degree)
        } else {
            Homogeneity::Mixed
        }
    }

    /// Re-embeds into `num_vars` variables, placing variable `i` at `offset + i`.
    pub fn embed(&self, num_vars: usize, offset: usize) -> MultiPoly {
        assert!(offset + self.num_vars <= num_vars, "embedding does not fit");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; num_vars];
                exps[offset..offset + self.num_vars].copy_from_slice(&m.exps);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        MultiPoly::from_terms(num_vars, terms)
    }

    /// Canonical text with a custom variable naming.
    pub fn render_with(&self, name: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            write_term(&mut out, idx == 0, c, &m.factors(&name));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Appends one signed term to a canonical polynomial rendering.
pub(crate) fn write_term(out: &mut String, first: bool, c: &Rational, factors: &[(String, u32)]) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag = c.abs();
    let body = factors
        .iter()
        .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*");
    if body.is_empty() {
        out.push_str(&format_rational(&mag));
    } else if is_one_abs(&mag) {
        out.push_str(&body);
    } else {
        out.push_str(&format_rational(&mag));
        out.push('*');
        out.push_str(&body);
    }
}

pub(crate) fn x_name(i: usize) -> String {
    format!("x{}", i + 1)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(x_name))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("MultiPoly + MultiPoly")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("MultiPoly - MultiPoly")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("MultiPoly * MultiPoly")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{rat, ratio};

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i - 1)
    }

    fn c(n: usize, v: i64) -> MultiPoly {
        MultiPoly::constant(n, rat(v))
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1, 1) + &c(1, 1)) * &(&x(1, 1) - &c(1, 1));
        assert_eq!(p.to_string(), "x1^2 - 1");
    }

    #[test]
    fn zero_absorbs() {
        let p = &x(2, 1) + &x(2, 2);
        assert!((&p * &MultiPoly::zero(2)).is_zero());
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn binomial_square() {
        let p = &x(2, 1) + &x(2, 2);
        assert_eq!(p.pow(2).to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn mismatched_vars_rejected() {
        assert!(matches!(
            x(2, 1).checked_add(&x(3, 1)),
            Err(Error::VarCountMismatch { left: 2, right: 3 })
        ));
        assert!(x(2, 1).checked_mul(&x(3, 1)).is_err());
    }

    #[test]
    fn exact_division_cases() {
        let (a, b) = (x(2, 1), x(2, 2));
        let p = &a.pow(2) - &b.pow(2);
        assert_eq!(p.exact_div(&(&a - &b)).unwrap().to_string(), "x1 + x2");
        assert!(a.exact_div(&b).is_none());

        let det = &(&x(4, 1) * &x(4, 4)) - &(&x(4, 2) * &x(4, 3));
        assert_eq!(det.pow(2).exact_div(&det).unwrap(), det);
        assert!((&det + &c(4, 1)).exact_div(&det).is_none());
    }

    #[test]
    fn evaluation() {
        assert_eq!(x(1, 1).pow(2).evaluate(&[rat(3)]).unwrap(), rat(9));
        let det = &(&x(4, 1) * &x(4, 4)) - &(&x(4, 2) * &x(4, 3));
        let id = [rat(1), rat(0), rat(0), rat(1)];
        assert_eq!(det.evaluate(&id).unwrap(), rat(1));
        assert!(det.evaluate(&[rat(1)]).is_err());
    }

    #[test]
    fn quaternion_norm_at_all_ones() {
        // oracle: q = 1+i+j+k, q * conj(q) = 1 + 1 + 1 + 1
        let n = (1..=4).fold(MultiPoly::zero(4), |acc, i| &acc + &x(4, i).pow(2));
        let q = [rat(1), rat(1), rat(1), rat(1)];
        let oracle: Rational = q.iter().map(|v| v * v).sum();
        assert_eq!(n.evaluate(&q).unwrap(), oracle);
        assert_eq!(oracle, rat(4));
    }

    #[test]
    fn substitution() {
        // x1 -> x1 + λ, with λ as the second variable
        let sq = x(1, 1).pow(2);
        let shifted = sq.substitute(&[&x(2, 1) + &x(2, 2)]).unwrap();
        assert_eq!(shifted.to_string(), "x1^2 + 2*x1*x2 + x2^2");

        let p = &(&x(3, 1) * &x(3, 3)) + &x(3, 2).scale(&ratio(1, 2));
        let ident: Vec<_> = (1..=3).map(|i| x(3, i)).collect();
        assert_eq!(p.substitute(&ident).unwrap(), p);

        // restriction of the upper-triangular norm to the diagonal: x2 -> 0
        let ut = &x(3, 1) * &x(3, 3);
        let forms = [x(3, 1), MultiPoly::zero(3), x(3, 3)];
        assert_eq!(ut.substitute(&forms).unwrap(), ut);
        assert!(ut.substitute(&forms[..2]).is_err());
    }

    #[test]
    fn homogeneity_cases() {
        let det = &(&x(4, 1) * &x(4, 4)) - &(&x(4, 2) * &x(4, 3));
        assert_eq!(det.homogeneity(), Homogeneity::Degree(2));
        assert_eq!((&x(1, 1) + &c(1, 1)).homogeneity(), Homogeneity::Mixed);
        assert_eq!(MultiPoly::zero(2).homogeneity(), Homogeneity::Zero);
        assert_eq!(MultiPoly::zero(2).homogeneity().degree(), Some(0));
        assert_eq!(Homogeneity::Mixed.degree(), None);
    }

    #[test]
    fn rendering_signs_and_fractions() {
        let p = &(&x(2, 1).scale(&ratio(-3, 2)) + &c(2, -1)) + &x(2, 2).pow(3);
        assert_eq!(p.to_string(), "x2^3 - 3/2*x1 - 1");
        assert_eq!(c(2, -5).to_string(), "-5");
    }

    #[test]
    fn embedding_shifts_variables() {
        let p = &x(2, 1) * &x(2, 2);
        assert_eq!(p.embed(4, 2).to_string(), "x3*x4");
    }
}
