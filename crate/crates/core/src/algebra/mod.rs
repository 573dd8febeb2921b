//! Finite-dimensional unital associative algebras over ℚ given by
//! structure constants `a_i · a_j = Σ_k c_ij^k a_k`.

mod builders;
pub mod catalog;
pub mod format;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::RatUniPoly;
use crate::kernel::{
    independent_subset, rational::format_rational, MultiPoly, PolyMatrix, RatMatrix, Rational,
};

pub use builders::{
    cyclic_group_table, direct_sum, dual_numbers, group_algebra, matrix_algebra, quadratic_extension,
    quaternion, rationals, subalgebra, symmetric_group_table, truncated_poly, upper_triangular,
    Subalgebra,
};

/// One structure constant: `a_i · a_j` has coefficient `c` on `a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    unit: Vec<Rational>,
    /// Sorted by `(i, j, k)`, no zero coefficients, no duplicates.
    table: Vec<StructureConstant>,
    /// `products[i * dim + j]` lists `(k, c)` for `a_i · a_j`.
    products: Vec<Vec<(usize, Rational)>>,
}

/// A vector of coordinates on the basis of some algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(pub Vec<Rational>);

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); dim];
        v[i] = Rational::one();
        Element(v)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Element(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element(self.0.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Scalars that algebra coordinates can live in: ℚ for concrete elements,
/// ℚ[x] for generic ones.
pub trait Coefficient: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Coefficient for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.num_vars())
    }
    fn is_zero_coeff(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        MultiPoly::scale(self, c)
    }
}

/// A failed axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationFailure {
    /// `(a_i a_j) a_k ≠ a_i (a_j a_k)`
    Associativity { i: usize, j: usize, k: usize },
    /// `u · a_i ≠ a_i`
    LeftUnit { i: usize },
    /// `a_i · u ≠ a_i`
    RightUnit { i: usize },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::Associativity { i, j, k } => {
                write!(f, "associativity fails on basis triple ({i}, {j}, {k})")
            }
            ValidationFailure::LeftUnit { i } => write!(f, "unit fails on the left of basis element {i}"),
            ValidationFailure::RightUnit { i } => write!(f, "unit fails on the right of basis element {i}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Algebra {
    /// Checks table indices, zero coefficients and duplicates. The algebra
    /// axioms are checked separately by [`Algebra::validate`].
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        unit: Vec<Rational>,
        table: Vec<StructureConstant>,
    ) -> Result<Algebra> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::parse("dim", "algebra must have positive dimension"));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                what: "unit",
                expected: dim,
                got: unit.len(),
            });
        }
        let mut table = table;
        table.sort_by_key(|e| (e.i, e.j, e.k));
        let mut products = vec![Vec::new(); dim * dim];
        for (n, e) in table.iter().enumerate() {
            if e.i >= dim || e.j >= dim || e.k >= dim {
                return Err(Error::parse(format!("table[{n}]"), format!("index out of range for dim {dim}")));
            }
            if e.c.is_zero() {
                return Err(Error::parse(format!("table[{n}].c"), "zero coefficient"));
            }
            if n > 0 {
                let p = &table[n - 1];
                if (p.i, p.j, p.k) == (e.i, e.j, e.k) {
                    return Err(Error::parse(
                        format!("table[{n}]"),
                        format!("duplicate entry ({}, {}, {})", e.i, e.j, e.k),
                    ));
                }
            }
            products[e.i * dim + e.j].push((e.k, e.c.clone()));
        }
        Ok(Algebra {
            name: name.into(),
            basis,
            unit,
            table,
            products,
        })
    }

    /// Builds an algebra from a dense product rule `a_i a_j ↦ coordinates`.
    pub fn from_products(
        name: impl Into<String>,
        basis: Vec<String>,
        unit: Vec<Rational>,
        product: impl Fn(usize, usize) -> Vec<Rational>,
    ) -> Result<Algebra> {
        let dim = basis.len();
        let mut table = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in product(i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        table.push(StructureConstant { i, j, k, c });
                    }
                }
            }
        }
        Algebra::new(name, basis, unit, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn unit(&self) -> Element {
        Element(self.unit.clone())
    }

    pub fn table(&self) -> &[StructureConstant] {
        &self.table
    }

    pub fn products(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    /// Bilinear extension of the table to coordinates over any coefficient ring.
    pub fn mul_coords<T: Coefficient>(&self, a: &[T], b: &[T]) -> Vec<T> {
        let dim = self.dim();
        debug_assert!(a.len() == dim && b.len() == dim);
        let zero = a[0].zero_like();
        let mut out = vec![zero; dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero_coeff() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero_coeff() {
                    continue;
                }
                let entries = &self.products[i * dim + j];
                if entries.is_empty() {
                    continue;
                }
                let prod = ai.mul(bj);
                for (k, c) in entries {
                    out[*k] = out[*k].add(&prod.scale(c));
                }
            }
        }
        out
    }

    fn check_dim(&self, a: &Element) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                what: "element",
                expected: self.dim(),
                got: a.dim(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(Element(self.mul_coords(&a.0, &b.0)))
    }

    pub(crate) fn mul(&self, a: &Element, b: &Element) -> Element {
        Element(self.mul_coords(&a.0, &b.0))
    }

    pub fn power(&self, a: &Element, n: u32) -> Element {
        (0..n).fold(self.unit(), |acc, _| self.mul(&acc, a))
    }

    /// `f(a)` by Horner's rule.
    pub fn eval_poly(&self, f: &RatUniPoly, a: &Element) -> Element {
        let unit = self.unit();
        f.coeffs()
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.mul(&acc, a).add(&unit.scale(c)))
    }

    /// Matrix of `v ↦ a·v`; column `j` holds the coordinates of `a·a_j`.
    pub fn left_mult_matrix(&self, a: &Element) -> Result<RatMatrix> {
        self.check_dim(a)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|j| self.mul(a, &self.basis_element(j)).0)
            .collect();
        Ok(RatMatrix::from_columns(self.dim(), &cols))
    }

    /// Matrix of `v ↦ v·a`.
    pub fn right_mult_matrix(&self, a: &Element) -> Result<RatMatrix> {
        self.check_dim(a)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|j| self.mul(&self.basis_element(j), a).0)
            .collect();
        Ok(RatMatrix::from_columns(self.dim(), &cols))
    }

    /// Coordinates `x_{offset+1}, ..., x_{offset+m}` in a ring of `num_vars` variables.
    pub fn generic_element(&self, num_vars: usize, offset: usize) -> Vec<MultiPoly> {
        (0..self.dim()).map(|i| MultiPoly::var(num_vars, offset + i)).collect()
    }

    /// Left regular representation of the generic element: entry `(k, j)`
    /// is `Σ_i x_i c_ij^k`.
    pub fn regular_rep_generic(&self) -> PolyMatrix {
        let m = self.dim();
        let mut entries: Vec<Vec<(crate::kernel::Monomial, Rational)>> = vec![Vec::new(); m * m];
        for e in &self.table {
            entries[e.k * m + e.j].push((crate::kernel::Monomial::var(m, e.i), e.c.clone()));
        }
        let entries = entries
            .into_iter()
            .map(|terms| MultiPoly::from_terms(m, terms))
            .collect();
        PolyMatrix::new(m, m, m, entries).expect("square by construction")
    }

    pub fn validate(&self) -> ValidationReport {
        let m = self.dim();
        let mut failures = Vec::new();
        let basis: Vec<Element> = (0..m).map(|i| self.basis_element(i)).collect();
        let unit = self.unit();
        for (i, b) in basis.iter().enumerate() {
            if self.mul(&unit, b) != *b {
                failures.push(ValidationFailure::LeftUnit { i });
            }
            if self.mul(b, &unit) != *b {
                failures.push(ValidationFailure::RightUnit { i });
            }
        }
        let pairs: Vec<Element> = (0..m * m)
            .map(|n| self.mul(&basis[n / m], &basis[n % m]))
            .collect();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let left = self.mul(&pairs[i * m + j], &basis[k]);
                    let right = self.mul(&basis[i], &pairs[j * m + k]);
                    if left != right {
                        failures.push(ValidationFailure::Associativity { i, j, k });
                    }
                }
            }
        }
        ValidationReport { failures }
    }

    /// Errors with the first failure unless the algebra is valid.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().failures.first() {
            None => Ok(()),
            Some(f) => Err(Error::Invalid(format!("{}: {f}", self.name))),
        }
    }

    /// Expresses `vectors` (assumed independent) as a new algebra with the
    /// given unit. Fails if the span is not closed or does not contain `unit`.
    /// Returns the algebra and the inclusion matrix (columns = vectors).
    pub fn span_algebra(
        &self,
        name: impl Into<String>,
        labels: Vec<String>,
        vectors: &[Element],
        unit: &Element,
    ) -> Result<(Algebra, RatMatrix)> {
        let m = self.dim();
        let d = vectors.len();
        let cols: Vec<Vec<Rational>> = vectors.iter().map(|v| v.0.clone()).collect();
        let inclusion = RatMatrix::from_columns(m, &cols);
        if independent_subset(&cols, m).len() != d {
            return Err(Error::internal("span_algebra: vectors are dependent"));
        }
        let unit_coords = inclusion
            .solve(&unit.0)
            .ok_or_else(|| Error::NotClosed("unit is not in the span".into()))?;
        let mut table = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let prod = self.mul(&vectors[i], &vectors[j]);
                let coords = inclusion.solve(&prod.0).ok_or_else(|| {
                    Error::NotClosed(format!("product of spanning vectors {i} and {j} leaves the span"))
                })?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        table.push(StructureConstant { i, j, k, c });
                    }
                }
            }
        }
        let alg = Algebra::new(name, labels, unit_coords, table)?;
        Ok((alg, inclusion))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;
    use proptest::prelude::*;

    fn all_catalog() -> Vec<Algebra> {
        catalog::NAMES.iter().map(|n| catalog::get(n).unwrap()).collect()
    }

    #[test]
    fn catalog_outputs_validate() {
        for alg in all_catalog() {
            let report = alg.validate();
            assert!(report.is_valid(), "{}: {:?}", alg.name(), report.failures);
        }
    }

    #[test]
    fn bad_unit_reported() {
        // e·e = 2e with e claimed as unit
        let alg = Algebra::new(
            "bad",
            vec!["e".into()],
            vec![rat(1)],
            vec![StructureConstant { i: 0, j: 0, k: 0, c: rat(2) }],
        )
        .unwrap();
        let r = alg.validate();
        assert!(r.failures.contains(&ValidationFailure::LeftUnit { i: 0 }));
        assert!(r.failures.contains(&ValidationFailure::RightUnit { i: 0 }));
    }

    /// Octonion multiplication via the Fano-plane triples; non-associative.
    fn octonions() -> Algebra {
        let triples = [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)];
        let basis: Vec<String> = (0..8).map(|i| format!("e{i}")).collect();
        let mut unit = vec![rat(0); 8];
        unit[0] = rat(1);
        let product = move |i: usize, j: usize| {
            let mut v = vec![rat(0); 8];
            if i == 0 {
                v[j] = rat(1);
            } else if j == 0 {
                v[i] = rat(1);
            } else if i == j {
                v[0] = rat(-1);
            } else {
                for &(a, b, c) in &triples {
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        if (i, j) == (x, y) {
                            v[z] = rat(1);
                        } else if (i, j) == (y, x) {
                            v[z] = rat(-1);
                        }
                    }
                }
            }
            v
        };
        Algebra::from_products("octonions", basis, unit, product).unwrap()
    }

    #[test]
    fn octonion_associativity_failures_match_brute_force() {
        let alg = octonions();
        let report = alg.validate();
        assert!(!report.is_valid());
        // independent oracle: recompute every triple with dense vectors
        let dense = |i: usize, j: usize| -> Vec<Rational> {
            let mut v = vec![rat(0); 8];
            for (k, c) in alg.products(i, j) {
                v[*k] = c.clone();
            }
            v
        };
        let times = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            let mut out = vec![rat(0); 8];
            for i in 0..8 {
                for j in 0..8 {
                    let d = dense(i, j);
                    for k in 0..8 {
                        out[k] += &a[i] * &b[j] * &d[k];
                    }
                }
            }
            out
        };
        let mut expected = Vec::new();
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let (ei, ej, ek) = (alg.basis_element(i).0, alg.basis_element(j).0, alg.basis_element(k).0);
                    if times(&times(&ei, &ej), &ek) != times(&ei, &times(&ej, &ek)) {
                        expected.push(ValidationFailure::Associativity { i, j, k });
                    }
                }
            }
        }
        assert!(!expected.is_empty());
        assert_eq!(report.failures, expected);
    }

    #[test]
    fn multiply_examples() {
        let dual = dual_numbers();
        let eps = dual.basis_element(1);
        assert!(dual.multiply(&eps, &eps).unwrap().is_zero());
        let a = Element::from_ints(&[3, 5]);
        assert_eq!(dual.multiply(&dual.unit(), &a).unwrap(), a);
        assert!(dual.multiply(&a, &Element::from_ints(&[1])).is_err());

        let x = dual.generic_element(2, 0);
        let sq = dual.mul_coords(&x, &x);
        assert_eq!(sq[0].to_string(), "x1^2");
        assert_eq!(sq[1].to_string(), "2*x1*x2");
    }

    #[test]
    fn regular_representations() {
        let m2 = matrix_algebra(2);
        assert_eq!(m2.left_mult_matrix(&m2.unit()).unwrap(), RatMatrix::identity(4));

        let x = dual_numbers().regular_rep_generic();
        assert_eq!(x.row(0).iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["x1", "0"]);
        assert_eq!(x.row(1).iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["x2", "x1"]);
    }

    #[test]
    fn m2_regular_char_poly_is_square_of_standard() {
        let m2 = matrix_algebra(2);
        let q = m2.regular_rep_generic().char_poly().unwrap();
        let std = crate::kernel::matrix::tests::generic_matrix(2).char_poly().unwrap();
        assert_eq!(q, std.mul(&std));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn multiply_is_associative_and_bilinear(
            idx in 0usize..catalog::NAMES.len(),
            raw in proptest::collection::vec(-4i64..=4, 48),
        ) {
            let alg = catalog::get(catalog::NAMES[idx]).unwrap();
            let m = alg.dim();
            let a = Element::from_ints(&raw[..m]);
            let b = Element::from_ints(&raw[16..16 + m]);
            let c = Element::from_ints(&raw[32..32 + m]);
            let ab_c = alg.mul(&alg.mul(&a, &b), &c);
            let a_bc = alg.mul(&a, &alg.mul(&b, &c));
            prop_assert_eq!(ab_c, a_bc);
            let lhs = alg.mul(&a.add(&b.scale(&rat(3))), &c);
            let rhs = alg.mul(&a, &c).add(&alg.mul(&b, &c).scale(&rat(3)));
            prop_assert_eq!(lhs, rhs);

            // L_{ab} = L_a L_b
            let lab = alg.left_mult_matrix(&alg.mul(&a, &b)).unwrap();
            let la_lb = alg.left_mult_matrix(&a).unwrap().mul(&alg.left_mult_matrix(&b).unwrap());
            prop_assert_eq!(lab, la_lb);

            // generic regular representation specialises to L_a
            let x = alg.regular_rep_generic();
            prop_assert_eq!(x.evaluate(a.coords()).unwrap(), alg.left_mult_matrix(&a).unwrap());
        }
    }
}
