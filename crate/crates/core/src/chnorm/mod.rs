//! Minimal polynomial of the generic element and the minimal
//! Cayley–Hamilton norm `N₀ = (−1)^k P(0)`.

mod certificate;
mod multiplicative;

use num_traits::One;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::factor::RatUniPoly;
use crate::kernel::{Homogeneity, MultiPoly, PolyMatrix, UniPolyOverRing};

pub use certificate::{
    degree_certificate, element_degree, restrict_norm, restriction_report, DegreeCertificate,
    RestrictionReport,
};
pub(crate) use certificate::pullback_forms;
pub use multiplicative::{verify_multiplicative, Mode, MultVerdict, DEFAULT_BOUND, DEFAULT_TRIALS};

/// Seed used for every randomized step unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 20240601;

/// Rows `0..=n` of the generic powers: row `i` holds the coordinates of `x^i`.
fn powers_upto(alg: &Algebra, n: usize) -> Vec<Vec<MultiPoly>> {
    let m = alg.dim();
    let x = alg.generic_element(m, 0);
    let mut rows = vec![alg.unit().0.iter().map(|c| MultiPoly::constant(m, c.clone())).collect::<Vec<_>>()];
    for _ in 0..n {
        let next = alg.mul_coords(rows.last().unwrap(), &x);
        rows.push(next);
    }
    rows
}

/// Coordinates of `x^0, …, x^m` for the generic element `x`.
pub fn generic_powers(alg: &Algebra) -> PolyMatrix {
    let m = alg.dim();
    PolyMatrix::from_rows(m, powers_upto(alg, m)).expect("rectangular by construction")
}

/// `P(t)`, the monic minimal polynomial of the generic element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomial {
    pub poly: UniPolyOverRing,
    /// Rows `0..=k` of the generic powers, kept for re-verification.
    powers: Vec<Vec<MultiPoly>>,
}

impl MinimalPolynomial {
    pub fn degree(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }

    /// `(−1)^k P(0)`.
    pub fn norm(&self) -> MultiPoly {
        let c = self.poly.constant_term();
        if self.degree() % 2 == 1 {
            -c
        } else {
            c
        }
    }

    /// `P(x) = 0`, checked coordinate by coordinate.
    pub fn annihilates_generic(&self) -> bool {
        let m = self.powers[0].len();
        let nv = self.poly.num_vars();
        (0..m).all(|col| {
            self.poly
                .coeffs()
                .iter()
                .zip(&self.powers)
                .fold(MultiPoly::zero(nv), |acc, (c, row)| &acc + &(c * &row[col]))
                .is_zero()
        })
    }
}

/// Finds the first power of the generic element that depends on the
/// previous ones and normalizes the dependence to a monic polynomial. The
/// normalization divides by the leading coefficient exactly; failure to do
/// so, or a nonzero `P(x)`, is an internal error.
pub fn generic_min_poly(alg: &Algebra) -> Result<MinimalPolynomial> {
    let m = alg.dim();
    let x = alg.generic_element(m, 0);
    let mut rows = powers_upto(alg, 0);
    loop {
        let next = alg.mul_coords(rows.last().unwrap(), &x);
        rows.push(next);
        let mat = PolyMatrix::from_rows(m, rows.clone())?;
        let Some(dep) = mat.minimal_dependence()? else {
            if rows.len() > m + 1 {
                return Err(Error::internal("no dependence among m+1 powers"));
            }
            continue;
        };
        rows.truncate(dep.index + 1);
        let lead = dep.coeffs.last().unwrap().clone();
        let coeffs = dep
            .coeffs
            .iter()
            .map(|c| {
                c.exact_div(&lead).ok_or_else(|| {
                    Error::internal(format!("minimal polynomial: {lead} does not divide {c}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mp = MinimalPolynomial {
            poly: UniPolyOverRing::new(m, coeffs),
            powers: rows,
        };
        if !mp.poly.is_monic() || !mp.annihilates_generic() {
            return Err(Error::internal("minimal polynomial does not annihilate the generic element"));
        }
        return Ok(mp);
    }
}

pub fn degree(alg: &Algebra) -> Result<usize> {
    Ok(generic_min_poly(alg)?.degree())
}

/// Re-derives `P` and checks it annihilates the generic element.
pub fn verify_ch(alg: &Algebra) -> Result<bool> {
    Ok(generic_min_poly(alg)?.annihilates_generic())
}

/// Characteristic polynomial of a concrete element: `P` specialized at its
/// coordinates. Checked to annihilate the element.
pub fn char_poly_of(alg: &Algebra, a: &Element) -> Result<RatUniPoly> {
    char_poly_from(alg, &generic_min_poly(alg)?, a)
}

pub fn char_poly_from(alg: &Algebra, mp: &MinimalPolynomial, a: &Element) -> Result<RatUniPoly> {
    if a.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            what: "element",
            expected: alg.dim(),
            got: a.dim(),
        });
    }
    let chi = mp.poly.specialize(a.coords())?;
    if !alg.eval_poly(&chi, a).is_zero() {
        return Err(Error::internal(format!("characteristic polynomial does not annihilate {a}")));
    }
    Ok(chi)
}

/// `N(t·1 − x) = P(t)` as an identity in `x_1..x_m, t` (the Cayley–Hamilton
/// axiom for the generic element).
fn norm_recovers_min_poly(alg: &Algebra, mp: &MinimalPolynomial, n0: &MultiPoly) -> Result<bool> {
    let m = alg.dim();
    let t = MultiPoly::var(m + 1, m);
    let unit = alg.unit();
    let forms: Vec<MultiPoly> = (0..m)
        .map(|i| &t.scale(&unit.0[i]) - &MultiPoly::var(m + 1, i))
        .collect();
    let lhs = n0.substitute(&forms)?;
    let rhs = mp
        .poly
        .coeffs()
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(m + 1), |acc, (i, c)| &acc + &(&c.embed(m + 1, 0) * &t.pow(i as u32)));
    Ok(lhs == rhs)
}

/// Options for [`minimal_norm`].
#[derive(Clone, Copy, Debug)]
pub struct NormOptions {
    pub mode: Mode,
    pub seed: u64,
    pub trials: usize,
    pub bound: i64,
}

impl Default for NormOptions {
    fn default() -> Self {
        NormOptions {
            mode: Mode::Auto,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_BOUND,
        }
    }
}

#[derive(Clone, Debug)]
pub struct NormFlags {
    /// `P(x) = 0` and `N₀(t − x) = P(t)`.
    pub ch_verified: bool,
    /// Every coefficient of `P` came out of exact polynomial division.
    pub denominator_free: bool,
    /// `Q = P·cofactor` exactly.
    pub cofactor_exact: bool,
    /// `N₀ | det X` exactly, with `det X = N₀·g`.
    pub norm_divides_regular: bool,
    pub norm_of_unit_is_one: bool,
    pub homogeneous_of_degree_k: bool,
    pub multiplicative: MultVerdict,
    /// The complementary factor `g` of the regular norm is multiplicative.
    pub cofactor_multiplicative: MultVerdict,
}

impl NormFlags {
    pub fn all_hold(&self) -> bool {
        self.ch_verified
            && self.denominator_free
            && self.cofactor_exact
            && self.norm_divides_regular
            && self.norm_of_unit_is_one
            && self.homogeneous_of_degree_k
            && self.multiplicative.holds
            && self.cofactor_multiplicative.holds
    }
}

#[derive(Clone, Debug)]
pub struct NormReport {
    pub min_poly: MinimalPolynomial,
    /// `N₀`
    pub minimal_norm: MultiPoly,
    pub degree: usize,
    /// `det X` for the generic left regular representation `X`.
    pub regular_norm: MultiPoly,
    /// `Q(t) = det(t − X)`
    pub regular_char_poly: UniPolyOverRing,
    /// `Q / P`
    pub cofactor: UniPolyOverRing,
    /// `g` with `det X = N₀·g`.
    pub regular_cofactor_norm: MultiPoly,
    pub flags: NormFlags,
    pub seed: u64,
}

/// Computes `P`, `N₀`, the regular data `X`, `Q`, `det X`, and runs every
/// verification. Verification failures are reported through the flags;
/// only kernel-level contradictions are errors.
pub fn minimal_norm(alg: &Algebra, opts: &NormOptions) -> Result<NormReport> {
    let m = alg.dim();
    let mp = generic_min_poly(alg)?;
    let k = mp.degree();
    let n0 = mp.norm();

    let x = alg.regular_rep_generic();
    let q = x.char_poly()?;
    let regular_norm = if m % 2 == 1 { -q.constant_term() } else { q.constant_term() };
    let cofactor = q.exact_div_monic(&mp.poly);
    let cofactor_exact = cofactor.as_ref().is_some_and(|c| c.mul(&mp.poly) == q);
    let cofactor = cofactor.unwrap_or_else(|| UniPolyOverRing::zero(m));
    let g = {
        let c0 = cofactor.constant_term();
        if (m - k) % 2 == 1 {
            -c0
        } else {
            c0
        }
    };
    let norm_divides_regular =
        regular_norm.exact_div(&n0).is_some_and(|quot| quot == g) && &n0 * &g == regular_norm;

    let unit_value = n0.evaluate(alg.unit().coords())?;
    let homogeneous = n0.homogeneity() == Homogeneity::Degree(k as u32);
    let ch_verified = mp.annihilates_generic() && norm_recovers_min_poly(alg, &mp, &n0)?;

    let multiplicative = verify_multiplicative(&n0, alg, opts.mode, opts.seed, opts.trials, opts.bound)?;
    let cofactor_multiplicative =
        verify_multiplicative(&g, alg, opts.mode, opts.seed, opts.trials, opts.bound)?;

    Ok(NormReport {
        flags: NormFlags {
            ch_verified,
            denominator_free: true,
            cofactor_exact,
            norm_divides_regular,
            norm_of_unit_is_one: unit_value.is_one(),
            homogeneous_of_degree_k: homogeneous,
            multiplicative,
            cofactor_multiplicative,
        },
        minimal_norm: n0,
        degree: k,
        regular_norm,
        regular_char_poly: q,
        cofactor,
        regular_cofactor_norm: g,
        min_poly: mp,
        seed: opts.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, direct_sum, dual_numbers, matrix_algebra, quaternion, rationals};
    use crate::kernel::matrix::tests::{generic_matrix, leibniz_det};
    use crate::kernel::rational::rat;

    fn strings(row: &[MultiPoly]) -> Vec<String> {
        row.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn generic_powers_examples() {
        let d = generic_powers(&dual_numbers());
        assert_eq!(strings(d.row(0)), ["1", "0"]);
        assert_eq!(strings(d.row(1)), ["x1", "x2"]);
        assert_eq!(strings(d.row(2)), ["x1^2", "2*x1*x2"]);
        let q = generic_powers(&rationals());
        assert_eq!(q.rows(), 2);
        assert_eq!(strings(q.row(1)), ["x1"]);

        // M2: row 2 is the square of the generic matrix, computed directly
        let m2 = generic_powers(&matrix_algebra(2));
        let a = generic_matrix(2);
        let sq = a.mul(&a).unwrap();
        let flat: Vec<MultiPoly> = (0..2).flat_map(|i| sq.row(i).to_vec()).collect();
        assert_eq!(m2.row(2), flat.as_slice());
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(generic_min_poly(&dual_numbers()).unwrap().poly.to_string(), "t^2 - 2*x1*t + x1^2");
        assert_eq!(generic_min_poly(&rationals()).unwrap().poly.to_string(), "t - x1");
        // 2×2 Cayley–Hamilton: t² − tr·t + det
        let p = generic_min_poly(&matrix_algebra(2)).unwrap().poly;
        assert_eq!(p.to_string(), "t^2 - x1*t - x4*t + x1*x4 - x2*x3");
    }

    #[test]
    fn norms_of_catalog_examples() {
        let opts = NormOptions::default();
        let check = |alg: &Algebra, n0: &str, k: usize| {
            let r = minimal_norm(alg, &opts).unwrap();
            assert_eq!(r.minimal_norm.to_string(), n0, "{}", alg.name());
            assert_eq!(r.degree, k);
            assert!(r.flags.all_hold(), "{}: {:?}", alg.name(), r.flags);
        };
        check(&dual_numbers(), "x1^2", 2);
        check(&matrix_algebra(2), "x1*x4 - x2*x3", 2);
        check(&quaternion(rat(-1), rat(-1)), "x1^2 + x2^2 + x3^2 + x4^2", 2);
        check(&catalog::get("truncated-poly-2").unwrap(), "x1^2", 2);
    }

    #[test]
    fn m2_norm_is_leibniz_determinant() {
        let r = minimal_norm(&matrix_algebra(2), &NormOptions::default()).unwrap();
        assert_eq!(r.minimal_norm, leibniz_det(&generic_matrix(2)));
        assert_eq!(r.regular_char_poly, r.min_poly.poly.pow(2));
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&matrix_algebra(3)).unwrap(), 3);
        assert_eq!(degree(&dual_numbers()).unwrap(), 2);
        assert_eq!(degree(&direct_sum(&matrix_algebra(2), &rationals())).unwrap(), 3);
    }

    #[test]
    fn element_char_polys() {
        let dual = dual_numbers();
        assert_eq!(char_poly_of(&dual, &dual.unit()).unwrap().to_string(), "t^2 - 2*t + 1");
        let m2 = matrix_algebra(2);
        assert_eq!(char_poly_of(&m2, &m2.unit()).unwrap().to_string(), "t^2 - 2*t + 1");
        assert_eq!(char_poly_of(&m2, &m2.basis_element(1)).unwrap().to_string(), "t^2");
        assert!(char_poly_of(&m2, &Element::from_ints(&[1, 2])).is_err());
    }

    #[test]
    fn block_pair_degree_matches_lcm_oracle() {
        // min poly of (A, c) in M2 ⊕ ℚ is lcm(min poly of A, t − c): degree 3
        // whenever c is not an eigenvalue of A
        let alg = direct_sum(&matrix_algebra(2), &rationals());
        let a = Element::from_ints(&[1, 2, 3, 4, 7]);
        assert_eq!(element_degree(&alg, &a).unwrap(), 3);
        let chi = char_poly_of(&alg, &a).unwrap();
        assert_eq!(chi.to_string(), "t^3 - 12*t^2 + 33*t + 14");
    }
}
