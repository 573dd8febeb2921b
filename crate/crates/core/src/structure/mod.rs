//! Jacobson radical, semisimple quotient, center, and the block
//! decomposition of `R/J` used to split `N₀` into reduced norms.

mod decompose;


use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::factor::RatUniPoly;
use crate::kernel::{independent_subset, RatMatrix, Rational};

pub use decompose::{
    central_idempotents, decompose, irreducible_multiplicative_maps, radical_invariance_check,
    simple_factors, Block, DecompositionReport, Factor, NilpotencyObservation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalBasis {
    pub vectors: Vec<Element>,
    /// Smallest `s` with `J^s = 0`; 1 when `J = 0`.
    pub nilpotency_index: usize,
}

impl RadicalBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }
}

fn coords(vs: &[Element]) -> Vec<Vec<Rational>> {
    vs.iter().map(|v| v.0.clone()).collect()
}

fn in_span(span: &[Element], dim: usize, v: &Element) -> bool {
    if v.is_zero() {
        return true;
    }
    if span.is_empty() {
        return false;
    }
    RatMatrix::from_columns(dim, &coords(span)).solve(&v.0).is_some()
}

/// A basis of the span of `vs`, keeping the first independent vectors.
fn span_basis(vs: &[Element], dim: usize) -> Vec<Element> {
    independent_subset(&coords(vs), dim).into_iter().map(|i| vs[i].clone()).collect()
}

/// The Gram matrix `T_ij = tr(L_{a_i a_j})` of the regular trace form.
pub fn trace_form(alg: &Algebra) -> RatMatrix {
    let m = alg.dim();
    // tr(L_{a_k}) = Σ_l (coefficient of a_l in a_k·a_l)
    let traces: Vec<Rational> = (0..m)
        .map(|k| {
            (0..m)
                .flat_map(|l| alg.products(k, l).iter().filter(move |(kk, _)| *kk == l))
                .map(|(_, c)| c.clone())
                .sum()
        })
        .collect();
    let mut t = RatMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            t[(i, j)] = alg.products(i, j).iter().map(|(k, c)| c * &traces[*k]).sum();
        }
    }
    t
}

/// `J` as the kernel of the trace form (valid in characteristic 0), with
/// the ideal property and nilpotency checked exactly.
pub fn radical(alg: &Algebra) -> Result<RadicalBasis> {
    let m = alg.dim();
    let vectors: Vec<Element> = trace_form(alg).nullspace().into_iter().map(Element).collect();
    for j in &vectors {
        for i in 0..m {
            let a = alg.basis_element(i);
            if !in_span(&vectors, m, &alg.mul(&a, j)) || !in_span(&vectors, m, &alg.mul(j, &a)) {
                return Err(Error::internal("trace-form kernel is not a two-sided ideal"));
            }
        }
    }
    // J^s spanned by products of s radical vectors
    let mut power = vectors.clone();
    let mut s = 1;
    while !power.is_empty() {
        if s > m {
            return Err(Error::internal("trace-form kernel is not nilpotent"));
        }
        let products: Vec<Element> = power
            .iter()
            .flat_map(|p| vectors.iter().map(move |j| (p, j)))
            .map(|(p, j)| alg.mul(p, j))
            .filter(|v| !v.is_zero())
            .collect();
        power = span_basis(&products, m);
        s += 1;
    }
    Ok(RadicalBasis { vectors, nilpotency_index: s })
}

/// `R/J` with the projection `R → R/J` and a linear section `R/J → R`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    /// `(dim R/J) × m`
    pub projection: RatMatrix,
    /// `m × (dim R/J)`; columns are the complement basis in `R`.
    pub lift: RatMatrix,
}

impl Quotient {
    pub fn project(&self, a: &Element) -> Element {
        Element(self.projection.mul_vec(&a.0))
    }

    pub fn lift_element(&self, a: &Element) -> Element {
        Element(self.lift.mul_vec(&a.0))
    }
}

/// Builds `R/J` on a complement of `J` spanned by standard basis vectors.
/// The projection is checked to be a unital homomorphism and the quotient
/// to have zero radical.
pub fn quotient(alg: &Algebra, rad: &RadicalBasis) -> Result<Quotient> {
    let m = alg.dim();
    let mut candidates = coords(&rad.vectors);
    candidates.extend((0..m).map(|i| alg.basis_element(i).0));
    let kept = independent_subset(&candidates, m);
    let complement: Vec<usize> = kept.iter().filter(|&&i| i >= rad.dim()).map(|i| i - rad.dim()).collect();
    let d = complement.len();
    // columns: complement vectors, then the radical basis
    let mut cols: Vec<Vec<Rational>> = complement.iter().map(|&i| alg.basis_element(i).0).collect();
    cols.extend(coords(&rad.vectors));
    let change = RatMatrix::from_columns(m, &cols);
    let inverse = change.inverse().ok_or_else(|| Error::internal("complement does not span"))?;
    let mut projection = RatMatrix::zeros(d, m);
    for r in 0..d {
        for c in 0..m {
            projection[(r, c)] = inverse[(r, c)].clone();
        }
    }
    let lift = RatMatrix::from_columns(m, &cols[..d]);
    let project = |v: &Element| Element(projection.mul_vec(&v.0));
    let labels: Vec<String> = complement.iter().map(|&i| alg.basis()[i].clone()).collect();
    let algebra = Algebra::from_products(
        format!("{}/J", alg.name()),
        labels,
        project(&alg.unit()).0,
        |a, b| project(&alg.mul(&alg.basis_element(complement[a]), &alg.basis_element(complement[b]))).0,
    )?;
    let q = Quotient { algebra, projection, lift };
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (alg.basis_element(i), alg.basis_element(j));
            if q.project(&alg.mul(&a, &b)) != q.algebra.mul(&q.project(&a), &q.project(&b)) {
                return Err(Error::internal(format!("projection fails on basis product ({i}, {j})")));
            }
        }
    }
    q.algebra.ensure_valid().map_err(|e| Error::internal(format!("quotient: {e}")))?;
    if !radical(&q.algebra)?.is_zero() {
        return Err(Error::internal("quotient by the radical is not semisimple"));
    }
    Ok(q)
}

/// Basis of `{a : a·a_i = a_i·a for all i}`.
pub fn center(alg: &Algebra) -> Vec<Element> {
    let m = alg.dim();
    // row block i: coordinates of a·a_i − a_i·a as a linear function of a
    let mut sys = RatMatrix::zeros(m * m, m);
    for i in 0..m {
        let ai = alg.basis_element(i);
        for l in 0..m {
            let al = alg.basis_element(l);
            let comm = alg.mul(&al, &ai).sub(&alg.mul(&ai, &al));
            for k in 0..m {
                sys[(i * m + k, l)] = comm.0[k].clone();
            }
        }
    }
    sys.nullspace().into_iter().map(Element).collect()
}

/// Monic minimal polynomial of a concrete element over ℚ.
pub fn element_min_poly(alg: &Algebra, a: &Element) -> RatUniPoly {
    let m = alg.dim();
    let mut powers = vec![alg.unit()];
    loop {
        let next = alg.mul(powers.last().unwrap(), a);
        let basis = RatMatrix::from_columns(m, &coords(&powers));
        if let Some(sol) = basis.solve(&next.0) {
            let mut c: Vec<Rational> = sol.into_iter().map(|x| -x).collect();
            c.push(Rational::from_integer(1.into()));
            return RatUniPoly::new(c);
        }
        powers.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        catalog, direct_sum, dual_numbers, group_algebra, matrix_algebra, rationals,
        symmetric_group_table, upper_triangular,
    };

    #[test]
    fn radicals() {
        assert!(radical(&matrix_algebra(2)).unwrap().is_zero());
        let d = radical(&dual_numbers()).unwrap();
        assert_eq!(d.vectors, [Element::from_ints(&[0, 1])]);
        assert_eq!(d.nilpotency_index, 2);
        let ut = radical(&upper_triangular(2)).unwrap();
        assert_eq!(ut.vectors, [Element::from_ints(&[0, 1, 0])]);
        assert_eq!(ut.nilpotency_index, 2);
        assert_eq!(radical(&upper_triangular(3)).unwrap().nilpotency_index, 3);
        assert_eq!(radical(&matrix_algebra(2)).unwrap().nilpotency_index, 1);
    }

    #[test]
    fn radical_is_strictly_upper_part() {
        // oracle: strictly upper-triangular matrices in UT3 (e12, e13, e23)
        let ut3 = upper_triangular(3);
        let rad = radical(&ut3).unwrap();
        let strict: Vec<Element> = ["e12", "e13", "e23"]
            .iter()
            .map(|l| ut3.basis_element(ut3.basis().iter().position(|b| b == l).unwrap()))
            .collect();
        assert_eq!(rad.dim(), 3);
        for v in &strict {
            assert!(in_span(&rad.vectors, 6, v));
        }
    }

    #[test]
    fn quotients() {
        let dual = dual_numbers();
        let q = quotient(&dual, &radical(&dual).unwrap()).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.project(&Element::from_ints(&[3, 5])), Element::from_ints(&[3]));

        let ut = upper_triangular(2);
        let q = quotient(&ut, &radical(&ut).unwrap()).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert_eq!(center(&q.algebra).len(), 2);

        let m2 = matrix_algebra(2);
        let q = quotient(&m2, &radical(&m2).unwrap()).unwrap();
        assert_eq!(q.projection, RatMatrix::identity(4));

        for name in catalog::NAMES {
            let alg = catalog::get(name).unwrap();
            let q = quotient(&alg, &radical(&alg).unwrap()).unwrap();
            assert!(radical(&q.algebra).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn centers() {
        assert_eq!(center(&matrix_algebra(2)), [matrix_algebra(2).unit()]);
        assert_eq!(center(&direct_sum(&rationals(), &rationals())).len(), 2);
        // S3 has three conjugacy classes
        let (table, _) = symmetric_group_table(3);
        assert_eq!(center(&group_algebra("qs3", &table).unwrap()).len(), 3);
    }

    #[test]
    fn element_min_polys() {
        let m2 = matrix_algebra(2);
        assert_eq!(element_min_poly(&m2, &m2.unit()).to_string(), "t - 1");
        assert_eq!(element_min_poly(&m2, &Element::from_ints(&[1, 2, 3, 4])).to_string(), "t^2 - 5*t - 2");
        assert_eq!(element_min_poly(&m2, &m2.basis_element(1)).to_string(), "t^2");
    }
}
