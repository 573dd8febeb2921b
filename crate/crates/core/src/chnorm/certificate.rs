use num_traits::Zero;

use super::multiplicative::sample_elements;
use super::{generic_min_poly, powers_upto};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::kernel::{independent_subset, MultiPoly, PolyMatrix, RatMatrix};

/// Smallest `d` such that `1, a, …, a^d` are linearly dependent over ℚ.
pub fn element_degree(alg: &Algebra, a: &Element) -> Result<usize> {
    if a.dim() != alg.dim() {
        return Err(Error::DimensionMismatch { what: "element", expected: alg.dim(), got: a.dim() });
    }
    let mut powers = vec![alg.unit().0];
    loop {
        let next = alg.mul(&Element(powers.last().unwrap().clone()), a).0;
        powers.push(next);
        if independent_subset(&powers, alg.dim()).len() < powers.len() {
            return Ok(powers.len() - 1);
        }
    }
}

/// A nonzero `k×k` minor of the first `k` generic powers, plus every
/// nonzero `k×k` minor. Elements where all of them vanish have degree `< k`.
#[derive(Clone, Debug)]
pub struct DegreeCertificate {
    /// 0-based column indices of the certifying minor.
    pub columns: Vec<usize>,
    pub minor: MultiPoly,
    /// `(columns, minor)` for every nonzero minor, columns in lexicographic order.
    pub locus: Vec<(Vec<usize>, MultiPoly)>,
}

impl DegreeCertificate {
    /// True when some minor is a nonzero constant, so no element has
    /// smaller degree.
    pub fn locus_is_empty(&self) -> bool {
        self.locus.iter().any(|(_, p)| p.is_constant())
    }
}

fn column_sets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..m {
            if m - c < k - cur.len() {
                break;
            }
            cur.push(c);
            go(c + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Certifies the generic degree `k`: minors are first evaluated at seeded
/// random points to shortlist candidates, then the first shortlisted minor
/// in lexicographic column order is confirmed symbolically.
pub fn degree_certificate(alg: &Algebra, seed: u64) -> Result<DegreeCertificate> {
    let m = alg.dim();
    let k = generic_min_poly(alg)?.degree();
    let rows = powers_upto(alg, k - 1);
    let mat = PolyMatrix::from_rows(m, rows)?;
    let all_rows: Vec<usize> = (0..k).collect();
    let sets = column_sets(m, k);
    let points = sample_elements(m, 3, seed, 10);
    let evaluated: Vec<RatMatrix> =
        points.iter().map(|p| mat.evaluate(p.coords())).collect::<Result<_>>()?;
    let shortlisted = |cols: &Vec<usize>| {
        evaluated.iter().any(|e| {
            let sub: Vec<Vec<_>> = all_rows.iter().map(|&r| cols.iter().map(|&c| e[(r, c)].clone()).collect()).collect();
            !RatMatrix::from_rows(&sub).det().is_zero()
        })
    };

    let mut locus = Vec::new();
    for cols in &sets {
        let minor = mat.submatrix(&all_rows, cols).det()?;
        if !minor.is_zero() {
            locus.push((cols.clone(), minor));
        }
    }
    let (columns, minor) = sets
        .iter()
        .filter(|c| shortlisted(c))
        .find_map(|c| locus.iter().find(|(lc, _)| lc == c).cloned())
        .or_else(|| locus.first().cloned())
        .ok_or_else(|| Error::internal("no nonzero minor of full size"))?;
    Ok(DegreeCertificate { columns, minor, locus })
}

fn check_inclusion(alg: &Algebra, sub: &Algebra, inclusion: &RatMatrix) -> Result<()> {
    if inclusion.rows() != alg.dim() || inclusion.cols() != sub.dim() {
        return Err(Error::DimensionMismatch {
            what: "inclusion matrix",
            expected: alg.dim() * sub.dim(),
            got: inclusion.rows() * inclusion.cols(),
        });
    }
    let image = |e: &Element| Element(inclusion.mul_vec(e.coords()));
    if image(&sub.unit()) != alg.unit() {
        return Err(Error::NotHomomorphism("unit is not sent to the unit".into()));
    }
    for i in 0..sub.dim() {
        for j in 0..sub.dim() {
            let (a, b) = (sub.basis_element(i), sub.basis_element(j));
            if image(&sub.mul(&a, &b)) != alg.mul(&image(&a), &image(&b)) {
                return Err(Error::NotHomomorphism(format!("product of basis elements {i} and {j}")));
            }
        }
    }
    Ok(())
}

/// Pulls `N₀` of `alg` back along `inclusion : sub → alg` (columns are the
/// images of the basis of `sub`).
pub fn restrict_norm(alg: &Algebra, sub: &Algebra, inclusion: &RatMatrix) -> Result<MultiPoly> {
    check_inclusion(alg, sub, inclusion)?;
    let n0 = generic_min_poly(alg)?.norm();
    n0.substitute(&pullback_forms(inclusion))
}

/// `x_i ↦ Σ_j M_ij y_j` for a linear map with matrix `M`.
pub(crate) fn pullback_forms(map: &RatMatrix) -> Vec<MultiPoly> {
    let n = map.cols();
    (0..map.rows())
        .map(|i| {
            let terms = (0..n)
                .filter(|&j| !map[(i, j)].is_zero())
                .map(|j| (crate::kernel::Monomial::var(n, j), map[(i, j)].clone()))
                .collect();
            MultiPoly::from_terms(n, terms)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub restricted: MultiPoly,
    pub sub_norm: MultiPoly,
    pub degree: usize,
    pub sub_degree: usize,
    /// `Some(equal)` when the degrees agree, `None` otherwise.
    pub equal: Option<bool>,
}

/// [`restrict_norm`] together with the subalgebra's own `N₀`; equality is
/// only expected, and only reported, when both degrees agree.
pub fn restriction_report(alg: &Algebra, sub: &Algebra, inclusion: &RatMatrix) -> Result<RestrictionReport> {
    let restricted = restrict_norm(alg, sub, inclusion)?;
    let degree = generic_min_poly(alg)?.degree();
    let sub_mp = generic_min_poly(sub)?;
    let sub_norm = sub_mp.norm();
    let sub_degree = sub_mp.degree();
    let equal = (degree == sub_degree).then(|| restricted == sub_norm);
    Ok(RestrictionReport { restricted, sub_norm, degree, sub_degree, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, dual_numbers, matrix_algebra, rationals, subalgebra};
    use crate::chnorm::{DEFAULT_SEED};

    #[test]
    fn element_degrees() {
        let dual = dual_numbers();
        assert_eq!(element_degree(&dual, &dual.unit()).unwrap(), 1);
        assert_eq!(element_degree(&dual, &dual.basis_element(1)).unwrap(), 2);
        let m2 = matrix_algebra(2);
        let a = Element::from_ints(&[1, 2, 3, 4]);
        assert_eq!(element_degree(&m2, &a).unwrap(), 2);
        // rank oracle: 1 and a independent, a² = 5a + 2·1
        let a2 = m2.mul(&a, &a);
        assert_eq!(a2, a.scale(&crate::kernel::rational::rat(5)).add(&m2.unit().scale(&crate::kernel::rational::rat(2))));
    }

    #[test]
    fn certificates() {
        let c = degree_certificate(&dual_numbers(), DEFAULT_SEED).unwrap();
        assert_eq!(c.columns, [0, 1]);
        assert_eq!(c.minor.to_string(), "x2");
        assert_eq!(c.locus.len(), 1);
        assert!(!c.locus_is_empty());

        let c = degree_certificate(&rationals(), DEFAULT_SEED).unwrap();
        assert_eq!(c.minor.to_string(), "1");
        assert!(c.locus_is_empty());

        // every minor vanishes on scalar matrices, which have degree 1
        let m2 = matrix_algebra(2);
        let c = degree_certificate(&m2, DEFAULT_SEED).unwrap();
        assert!(!c.minor.is_zero());
        for s in [-3i64, 0, 5] {
            let scalar = Element::from_ints(&[s, 0, 0, s]);
            assert_eq!(element_degree(&m2, &scalar).unwrap(), 1);
            for (_, p) in &c.locus {
                assert!(p.evaluate(scalar.coords()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn restrictions() {
        let m2 = matrix_algebra(2);
        let diag = subalgebra(&m2, &[m2.basis_element(0), m2.basis_element(3)]).unwrap();
        let r = restriction_report(&m2, &diag.algebra, &diag.inclusion).unwrap();
        assert_eq!(r.restricted.to_string(), "x1*x2");
        assert_eq!(r.equal, Some(true));

        let scalars = subalgebra(&m2, &[m2.unit()]).unwrap();
        let r = restriction_report(&m2, &scalars.algebra, &scalars.inclusion).unwrap();
        assert_eq!(r.restricted.to_string(), "x1^2");
        assert_eq!((r.degree, r.sub_degree, r.equal), (2, 1, None));

        let id = RatMatrix::identity(4);
        assert_eq!(restrict_norm(&m2, &m2, &id).unwrap().to_string(), "x1*x4 - x2*x3");

        // a non-unital embedding is rejected
        let q = catalog::get("q").unwrap();
        let corner = RatMatrix::from_columns(4, &[m2.basis_element(0).0]);
        assert!(matches!(restrict_norm(&m2, &q, &corner), Err(Error::NotHomomorphism(_))));
    }
}
