use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{center, element_min_poly, quotient, radical, Quotient, RadicalBasis};
use crate::algebra::{Algebra, Element};
use crate::chnorm::{generic_min_poly, pullback_forms, verify_multiplicative, Mode, MultVerdict};
use crate::error::{Error, Result};
use crate::factor::{factor_rational, RatUniPoly};
use crate::kernel::{independent_subset, Homogeneity, Monomial, MultiPoly, RatMatrix, Rational};

const SEARCH_LIMIT: usize = 100;

/// Central elements to try as separators: the center basis, then small
/// integer combinations, then seeded random combinations.
fn separator_candidates(basis: &[Element], seed: u64) -> Vec<Element> {
    let z = basis.len();
    let combine = |coeffs: &[i64]| {
        coeffs
            .iter()
            .zip(basis)
            .fold(Element::zero(basis[0].dim()), |acc, (&c, b)| acc.add(&b.scale(&Rational::from_integer(c.into()))))
    };
    let mut out: Vec<Element> = basis.to_vec();
    // (1, 2, 3, …), (1, −1, 2, −2, …) and shifts of them
    for shift in 0..z as i64 {
        out.push(combine(&(0..z as i64).map(|i| (i + shift) % (z as i64) + 1).collect::<Vec<_>>()));
        out.push(combine(&(0..z as i64).map(|i| if i % 2 == 0 { i / 2 + 1 + shift } else { -(i / 2 + 1) }).collect::<Vec<_>>()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < SEARCH_LIMIT {
        let coeffs: Vec<i64> = (0..z).map(|_| rng.gen_range(-20..=20)).collect();
        out.push(combine(&coeffs));
    }
    out.truncate(SEARCH_LIMIT);
    out
}

/// Central primitive idempotents of a semisimple algebra, from a central
/// element whose minimal polynomial has degree `dim Z`, its factorization
/// over ℚ, and CRT interpolation.
pub fn central_idempotents(ss: &Algebra, seed: u64) -> Result<Vec<Element>> {
    let z = center(ss);
    if z.len() == 1 {
        return Ok(vec![ss.unit()]);
    }
    let mut tried = 0;
    for c in separator_candidates(&z, seed) {
        tried += 1;
        let mu = element_min_poly(ss, &c);
        if mu.degree() != Some(z.len()) {
            continue;
        }
        let fact = factor_rational(&mu)?;
        if fact.factors.iter().any(|(_, e)| *e != 1) {
            return Err(Error::internal("central element of a semisimple algebra has a repeated factor"));
        }
        let irreducibles: Vec<RatUniPoly> = fact.factors.iter().map(|(f, _)| f.clone()).collect();
        let mut idempotents = Vec::with_capacity(irreducibles.len());
        for (i, u) in irreducibles.iter().enumerate() {
            let others = irreducibles
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(RatUniPoly::one(), |acc, (_, f)| acc.mul(f));
            // s·others + t·u = 1, so s·others ≡ 1 mod u and ≡ 0 mod the rest
            let (g, s, _) = others.xgcd(u);
            if g != RatUniPoly::one() {
                return Err(Error::internal("irreducible factors are not coprime"));
            }
            let interp = s.mul(&others).rem(&mu);
            idempotents.push(ss.eval_poly(&interp, &c));
        }
        check_idempotents(ss, &idempotents)?;
        return Ok(idempotents);
    }
    Err(Error::RetryLimit {
        attempts: tried,
        detail: format!("no central element with minimal polynomial of degree {}", z.len()),
    })
}

fn check_idempotents(ss: &Algebra, es: &[Element]) -> Result<()> {
    let sum = es.iter().fold(ss.zero(), |acc, e| acc.add(e));
    if sum != ss.unit() {
        return Err(Error::internal("idempotents do not sum to 1"));
    }
    for (i, e) in es.iter().enumerate() {
        if e.is_zero() || ss.mul(e, e) != *e {
            return Err(Error::internal(format!("element {i} is not a nonzero idempotent")));
        }
        for (j, f) in es.iter().enumerate() {
            if i != j && !ss.mul(e, f).is_zero() {
                return Err(Error::internal(format!("idempotents {i} and {j} are not orthogonal")));
            }
        }
        for k in 0..ss.dim() {
            let a = ss.basis_element(k);
            if ss.mul(e, &a) != ss.mul(&a, e) {
                return Err(Error::internal(format!("idempotent {i} is not central")));
            }
        }
    }
    Ok(())
}

/// One simple block `S = ss·e` of a semisimple algebra.
#[derive(Clone, Debug)]
pub struct Block {
    pub algebra: Algebra,
    pub idempotent: Element,
    /// `dim S × dim ss`, `a ↦ e·a` in block coordinates.
    pub projection: RatMatrix,
    /// `dim ss × dim S`
    pub inclusion: RatMatrix,
}

pub fn simple_factors(ss: &Algebra, idempotents: &[Element]) -> Result<Vec<Block>> {
    let n = ss.dim();
    let mut blocks = Vec::with_capacity(idempotents.len());
    for (b, e) in idempotents.iter().enumerate() {
        let images: Vec<Vec<Rational>> = (0..n).map(|j| ss.mul(e, &ss.basis_element(j)).0).collect();
        let kept = independent_subset(&images, n);
        let vectors: Vec<Element> = kept.iter().map(|&j| Element(images[j].clone())).collect();
        let labels = (1..=vectors.len()).map(|i| format!("b{}_{i}", b + 1)).collect();
        let (algebra, inclusion) = ss.span_algebra(format!("block{}", b + 1), labels, &vectors, e)?;
        let mut projection = RatMatrix::zeros(vectors.len(), n);
        for (j, img) in images.iter().enumerate() {
            let c = inclusion
                .solve(img)
                .ok_or_else(|| Error::internal("block image outside its span"))?;
            for (r, v) in c.into_iter().enumerate() {
                projection[(r, j)] = v;
            }
        }
        blocks.push(Block { algebra, idempotent: e.clone(), projection, inclusion });
    }
    if blocks.iter().map(|b| b.algebra.dim()).sum::<usize>() != n {
        return Err(Error::internal("block dimensions do not add up"));
    }
    Ok(blocks)
}

/// A simple factor of `R/J` with its reduced norm pulled back to `R`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub block: Block,
    /// `N_i` in the variables of `R`.
    pub norm: MultiPoly,
    /// `N_i` in the block's own variables.
    pub block_norm: MultiPoly,
    /// `n_i = deg N_i`
    pub degree: usize,
    /// `e_i`; zero until [`decompose`] fills it in.
    pub exponent: usize,
    /// A preimage in `R` of the block identity.
    pub lifted_idempotent: Element,
    pub multiplicative: MultVerdict,
    pub homogeneous: bool,
    pub unit_value_one: bool,
}

struct Split {
    radical: RadicalBasis,
    quotient: Quotient,
    idempotents: Vec<Element>,
    factors: Vec<Factor>,
}

fn split(alg: &Algebra, mode: Mode, seed: u64) -> Result<Split> {
    let m = alg.dim();
    let rad = radical(alg)?;
    let q = quotient(alg, &rad)?;
    let idempotents = central_idempotents(&q.algebra, seed)?;
    let blocks = simple_factors(&q.algebra, &idempotents)?;
    let mut factors = Vec::with_capacity(blocks.len());
    for block in blocks {
        let mp = generic_min_poly(&block.algebra)?;
        let block_norm = mp.norm();
        let to_block = block.projection.mul(&q.projection);
        let norm = block_norm.substitute(&pullback_forms(&to_block))?;
        let degree = mp.degree();
        let multiplicative = verify_multiplicative(
            &norm,
            alg,
            mode,
            seed,
            crate::chnorm::DEFAULT_TRIALS,
            crate::chnorm::DEFAULT_BOUND,
        )?;
        factors.push(Factor {
            lifted_idempotent: q.lift_element(&block.idempotent),
            homogeneous: norm.homogeneity() == Homogeneity::Degree(degree as u32),
            unit_value_one: norm.evaluate(alg.unit().coords())?.is_one(),
            block,
            norm,
            block_norm,
            degree,
            exponent: 0,
            multiplicative,
        });
        debug_assert_eq!(factors.last().unwrap().norm.num_vars(), m);
    }
    factors.sort_by(|a, b| {
        (a.block.algebra.dim(), a.norm.to_string()).cmp(&(b.block.algebra.dim(), b.norm.to_string()))
    });
    let idempotents = factors.iter().map(|f| f.block.idempotent.clone()).collect();
    Ok(Split { radical: rad, quotient: q, idempotents, factors })
}

/// The irreducible multiplicative maps of `R`: reduced norms of the simple
/// factors of `R/J`, pulled back to `R`, with their degrees.
pub fn irreducible_multiplicative_maps(alg: &Algebra, seed: u64) -> Result<Vec<(MultiPoly, usize)>> {
    Ok(split(alg, Mode::Auto, seed)?
        .factors
        .into_iter()
        .map(|f| (f.norm, f.degree))
        .collect())
}

/// `N₀(x + λj) = N₀(x)` for every radical basis vector `j`.
pub fn radical_invariance_check(alg: &Algebra, n0: &MultiPoly, rad: &RadicalBasis) -> Result<bool> {
    let m = alg.dim();
    let lambda = MultiPoly::var(m + 1, m);
    let base = n0.embed(m + 1, 0);
    for j in &rad.vectors {
        let forms: Vec<MultiPoly> = (0..m)
            .map(|i| &MultiPoly::var(m + 1, i) + &lambda.scale(&j.0[i]))
            .collect();
        if n0.substitute(&forms)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// When `R/J = ℚ`: the exponent of the single factor next to the largest
/// nilpotency order of an element of `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyObservation {
    pub exponent: usize,
    pub max_element_nilpotency: usize,
}

impl NilpotencyObservation {
    pub fn matches(&self) -> bool {
        self.exponent == self.max_element_nilpotency
    }
}

/// Smallest `d` with `y^d = 0` for the generic element `y` of `J`.
fn generic_radical_nilpotency(alg: &Algebra, rad: &RadicalBasis) -> usize {
    let r = rad.dim();
    let y: Vec<MultiPoly> = (0..alg.dim())
        .map(|i| {
            let terms = rad
                .vectors
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.0[i].is_zero())
                .map(|(s, v)| (Monomial::var(r, s), v.0[i].clone()))
                .collect();
            MultiPoly::from_terms(r, terms)
        })
        .collect();
    let mut power = y.clone();
    let mut d = 1;
    while power.iter().any(|p| !p.is_zero()) {
        power = alg.mul_coords(&power, &y);
        d += 1;
    }
    d
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub radical: RadicalBasis,
    pub quotient: Quotient,
    pub idempotents: Vec<Element>,
    pub factors: Vec<Factor>,
    pub minimal_norm: MultiPoly,
    pub degree: usize,
    /// `N₀ = Π N_i^{e_i}` exactly.
    pub product_identity: bool,
    /// `Σ e_i n_i = deg N₀`.
    pub degree_sum: bool,
    pub radical_invariance: bool,
    pub nilpotency: Option<NilpotencyObservation>,
    pub seed: u64,
}

impl DecompositionReport {
    pub fn exponents(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.exponent).collect()
    }

    pub fn all_verified(&self) -> bool {
        self.product_identity
            && self.degree_sum
            && self.radical_invariance
            && self
                .factors
                .iter()
                .all(|f| f.multiplicative.holds && f.homogeneous && f.unit_value_one)
    }
}

/// Full decomposition: radical, `R/J`, blocks, reduced norms, and the
/// exponents `e_i` read off from `N₀(λu_i + Σ_{j≠i} u_j) = λ^{e_i n_i}`.
pub fn decompose(alg: &Algebra, mode: Mode, seed: u64) -> Result<DecompositionReport> {
    let m = alg.dim();
    let Split { radical: rad, quotient: q, idempotents, mut factors } = split(alg, mode, seed)?;
    let mp = generic_min_poly(alg)?;
    let n0 = mp.norm();
    let k = mp.degree();

    let lambda = MultiPoly::var(1, 0);
    let lifts: Vec<Element> = factors.iter().map(|f| f.lifted_idempotent.clone()).collect();
    for i in 0..factors.len() {
        let forms: Vec<MultiPoly> = (0..m)
            .map(|l| {
                let rest: Rational = lifts.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, u)| u.0[l].clone()).sum();
                &lambda.scale(&lifts[i].0[l]) + &MultiPoly::constant(1, rest)
            })
            .collect();
        let value = n0.substitute(&forms)?;
        let total = match value.terms() {
            [(mono, c)] if c.is_one() => mono.degree() as usize,
            _ => {
                return Err(Error::internal(format!(
                    "N0 on the lifted idempotent family is {value}, not a power of the variable"
                )))
            }
        };
        let n = factors[i].degree;
        if total % n != 0 {
            return Err(Error::internal(format!("block degree {n} does not divide {total}")));
        }
        factors[i].exponent = total / n;
    }

    let product = factors
        .iter()
        .fold(MultiPoly::one(m), |acc, f| &acc * &f.norm.pow(f.exponent as u32));
    let degree_sum = factors.iter().map(|f| f.exponent * f.degree).sum::<usize>() == k;
    let radical_invariance = radical_invariance_check(alg, &n0, &rad)?;
    let nilpotency = (q.algebra.dim() == 1).then(|| NilpotencyObservation {
        exponent: factors[0].exponent,
        max_element_nilpotency: generic_radical_nilpotency(alg, &rad),
    });
    Ok(DecompositionReport {
        product_identity: product == n0,
        degree_sum,
        radical_invariance,
        nilpotency,
        radical: rad,
        quotient: q,
        idempotents,
        factors,
        minimal_norm: n0,
        degree: k,
        seed,
    })
}
