//! Factorization of univariate polynomials over ℚ.
//!
//! Squarefree parts are factored by the Zassenhaus method: factor modulo a
//! small prime, Hensel-lift to a coefficient bound, recombine subsets by
//! trial division over ℤ. Every result is multiplied back before returning.

mod modp;
mod ratpoly;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use ratpoly::RatUniPoly;

use crate::error::{Error, Result};
use crate::kernel::rational::Rational;
use modp::{small_primes, Field, Poly};

/// `unit · Π factor^multiplicity`, factors monic and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(RatUniPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> RatUniPoly {
        self.factors
            .iter()
            .fold(RatUniPoly::constant(self.unit.clone()), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }
}

/// Degree patterns of a factor modulo several good primes. `certified` is
/// set when the patterns alone rule out every proper factor degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityEvidence {
    pub patterns: Vec<(u64, Vec<usize>)>,
    pub certified: bool,
}

/// Yun's algorithm. Factors are monic, squarefree and pairwise coprime;
/// `unit` is the leading coefficient of `u`.
pub fn squarefree_decomposition(u: &RatUniPoly) -> Factorization {
    assert!(!u.is_zero(), "squarefree decomposition of zero");
    let unit = u.leading();
    let a = u.monic();
    let mut factors = Vec::new();
    if a.degree() == Some(0) {
        return Factorization { unit, factors };
    }
    let b = a.derivative();
    let c = a.gcd(&b);
    let mut w = a.div_rem(&c).0;
    let mut y = b.div_rem(&c).0;
    let mut z = y.sub(&w.derivative());
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let g = w.gcd(&z);
        if g.degree().unwrap_or(0) > 0 {
            factors.push((g.clone(), i));
        }
        w = w.div_rem(&g).0;
        y = z.div_rem(&g).0;
        z = y.sub(&w.derivative());
        i += 1;
    }
    Factorization { unit, factors }
}

/// Complete factorization into monic irreducibles over ℚ.
pub fn factor_rational(u: &RatUniPoly) -> Result<Factorization> {
    if u.is_zero() {
        return Err(Error::internal("factor_rational: zero polynomial"));
    }
    let sqf = squarefree_decomposition(u);
    let mut factors = Vec::new();
    for (s, m) in &sqf.factors {
        let (_, prim) = s.primitive_integer_form();
        for f in factor_squarefree_primitive(&prim) {
            factors.push((RatUniPoly::from_bigints(&f).monic(), *m));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    let fz = Factorization {
        unit: sqf.unit,
        factors,
    };
    if fz.expand() != *u {
        return Err(Error::internal(format!("factorization of {u} does not multiply back")));
    }
    Ok(fz)
}

/// Distinct-degree patterns of `f` modulo the first `count` good primes.
pub fn irreducibility_evidence(f: &RatUniPoly, count: usize) -> IrreducibilityEvidence {
    let n = f.degree().unwrap_or(0);
    let (_, prim) = f.primitive_integer_form();
    let mut patterns = Vec::new();
    let mut possible: Option<BTreeSet<usize>> = None;
    for p in small_primes(200) {
        if patterns.len() == count {
            break;
        }
        let field = Field::new(p);
        let fp = reduce(&prim, p);
        if fp.len() != prim.len() || !field.is_squarefree(&fp) {
            continue;
        }
        let mut degs: Vec<usize> = Vec::new();
        for (g, d) in field.distinct_degree(&fp) {
            degs.extend(std::iter::repeat_n(d, (g.len() - 1) / d));
        }
        degs.sort_unstable();
        let sums = subset_sums(&degs);
        possible = Some(match possible {
            None => sums,
            Some(prev) => prev.intersection(&sums).copied().collect(),
        });
        patterns.push((p, degs));
    }
    let certified = n <= 1
        || possible
            .as_ref()
            .is_some_and(|s| s.iter().all(|&d| d == 0 || d == n));
    IrreducibilityEvidence { patterns, certified }
}

fn subset_sums(degs: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &d in degs {
        let next: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(next);
    }
    sums
}

fn reduce(f: &[BigInt], p: u64) -> Poly {
    let pb = BigInt::from(p);
    Field::trim(
        f.iter()
            .map(|c| {
                let r = ((c % &pb) + &pb) % &pb;
                r.to_u64().unwrap()
            })
            .collect(),
    )
}

fn to_bigints(f: &Poly) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn ztrim(mut f: Vec<BigInt>) -> Vec<BigInt> {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    ztrim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

/// Exact quotient by a monic divisor over ℤ, or `None`.
fn zdiv_monic(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = d.len() - 1;
    if a.len() <= dd {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for i in (dd..rem.len()).rev() {
        let q = rem[i].clone();
        if q.is_zero() {
            continue;
        }
        for j in 0..=dd {
            rem[i - dd + j] -= &q * &d[j];
        }
        quot[i - dd] = q;
    }
    rem[..dd].iter().all(Zero::is_zero).then(|| ztrim(quot))
}

fn smod(a: &BigInt, m: &BigInt) -> BigInt {
    let mut r = ((a % m) + m) % m;
    if &r * 2 > *m {
        r -= m;
    }
    r
}

/// Factors a squarefree primitive integer polynomial into primitive
/// irreducibles with positive leading coefficients.
fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // monic companion g(y) = lc^(n-1) f(y / lc)
    let lc = f[n].clone();
    let mut g = Vec::with_capacity(n + 1);
    let mut power = BigInt::one();
    let mut powers = vec![BigInt::one(); n];
    for slot in powers.iter_mut().take(n).skip(1) {
        power *= &lc;
        *slot = power.clone();
    }
    for i in 0..n {
        g.push(&f[i] * &powers[n - 1 - i]);
    }
    g.push(BigInt::one());

    let monic_factors = factor_monic_squarefree(&g);
    monic_factors
        .into_iter()
        .map(|h| {
            // h(lc·x), then primitive part
            let mut scale = BigInt::one();
            let scaled: Vec<BigInt> = h
                .iter()
                .map(|c| {
                    let v = c * &scale;
                    scale *= &lc;
                    v
                })
                .collect();
            primitive(&scaled)
        })
        .collect()
}

fn primitive(f: &[BigInt]) -> Vec<BigInt> {
    let mut content = f.iter().fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
    if f.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    f.iter().map(|c| c / &content).collect()
}

fn factor_monic_squarefree(g: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = g.len() - 1;
    let (p, field) = small_primes(400)
        .into_iter()
        .map(|p| (p, Field::new(p)))
        .find(|(p, field)| field.is_squarefree(&reduce(g, *p)))
        .expect("no good prime below bound");
    let gp = reduce(g, p);
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut modular: Vec<Poly> = Vec::new();
    for (part, d) in field.distinct_degree(&gp) {
        modular.extend(field.equal_degree(&part, d, &mut rng));
    }
    if modular.len() == 1 {
        return vec![g.to_vec()];
    }
    modular.sort();

    // Mignotte-style bound on factor coefficients: 2^n · ‖g‖₂
    let norm2: BigInt = g.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2.sqrt() + 1u32);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(g, &modular, field, k);

    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut current = g.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        for subset in combinations(remaining.len(), size) {
            let cand = subset.iter().fold(vec![BigInt::one()], |acc, &i| {
                zmul(&acc, &remaining[i]).iter().map(|c| smod(c, &modulus)).collect()
            });
            if let Some(q) = zdiv_monic(&current, &cand) {
                found.push(cand);
                current = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f)| f)
                    .collect();
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.len() > 1 {
        found.push(current);
    }
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Lifts `g ≡ Π factors (mod p)` to a factorization modulo `p^k`.
fn hensel_lift(g: &[BigInt], factors: &[Poly], field: Field, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let m = BigInt::from(field.p).pow(k);
        return vec![g.iter().map(|c| ((c % &m) + &m) % &m).collect()];
    }
    let first = &factors[0];
    let rest = factors[1..]
        .iter()
        .fold(vec![1u64], |acc, f| field.mul_poly(&acc, f));
    let (big_first, big_rest) = lift_pair(g, first, &rest, field, k);
    let mut out = vec![big_first];
    out.extend(hensel_lift(&big_rest, &factors[1..], field, k));
    out
}

/// Linear Hensel lifting of `f ≡ g·h (mod p)` with monic `g`, `h`.
fn lift_pair(f: &[BigInt], g: &Poly, h: &Poly, field: Field, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, s, t) = field.xgcd(g, h);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(field.p);
    let mut big_g = to_bigints(g);
    let mut big_h = to_bigints(h);
    let mut pk = pb.clone();
    for _ in 1..k {
        let err = zsub(f, &zmul(&big_g, &big_h));
        let e: Vec<BigInt> = err
            .iter()
            .map(|c| {
                debug_assert!((c % &pk).is_zero());
                c / &pk
            })
            .collect();
        let ep = reduce(&e, field.p);
        let tau = field.rem(&field.mul_poly(&t, &ep), g);
        let sigma = field.rem(&field.mul_poly(&s, &ep), h);
        let next = &pk * &pb;
        big_g = add_scaled(&big_g, &tau, &pk, &next);
        big_h = add_scaled(&big_h, &sigma, &pk, &next);
        pk = next;
    }
    (big_g, big_h)
}

fn add_scaled(a: &[BigInt], corr: &Poly, scale: &BigInt, modulus: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(corr.len());
    (0..n)
        .map(|i| {
            let base = a.get(i).cloned().unwrap_or_else(BigInt::zero);
            let c = corr.get(i).copied().unwrap_or(0);
            let v = base + scale * BigInt::from(c);
            ((v % modulus) + modulus) % modulus
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{rat, ratio};

    fn p(c: &[i64]) -> RatUniPoly {
        RatUniPoly::from_ints(c)
    }

    fn rendered(fz: &Factorization) -> Vec<(String, u32)> {
        fz.factors.iter().map(|(f, m)| (f.to_string(), *m)).collect()
    }

    #[test]
    fn squarefree_examples() {
        // (t-1)^2 (t+2)
        let u = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        let sq = squarefree_decomposition(&u);
        assert_eq!(rendered(&sq), vec![("t + 2".into(), 1), ("t - 1".into(), 2)]);
        assert_eq!(sq.expand(), u);

        let sq = squarefree_decomposition(&p(&[1, 0, 1]));
        assert_eq!(rendered(&sq), vec![("t^2 + 1".into(), 1)]);

        let sq = squarefree_decomposition(&p(&[0, 0, 0, 1]));
        assert_eq!(rendered(&sq), vec![("t".into(), 3)]);

        for (f, _) in &sq.factors {
            assert_eq!(f.gcd(&f.derivative()), RatUniPoly::one());
        }
    }

    #[test]
    fn t4_minus_1() {
        let fz = factor_rational(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            rendered(&fz),
            vec![("t + 1".into(), 1), ("t - 1".into(), 1), ("t^2 + 1".into(), 1)]
        );
    }

    #[test]
    fn irreducible_quartic() {
        let u = p(&[1, 0, -10, 0, 1]);
        let fz = factor_rational(&u).unwrap();
        assert_eq!(fz.factors.len(), 1);
        assert_eq!(fz.factors[0].0, u);
        // every prime splits this one, so the patterns never certify it alone
        let ev = irreducibility_evidence(&u, 3);
        assert_eq!(ev.patterns.len(), 3);
        assert!(!ev.certified);
        assert!(irreducibility_evidence(&p(&[1, 0, 1]), 3).certified);
    }

    #[test]
    fn non_monic_with_content() {
        // 6 (t - 1/2)(t^2 + 1/3) · 5/7
        let u = p(&[-1, 2]).mul(&p(&[1, 0, 3])).scale(&ratio(5, 7));
        let fz = factor_rational(&u).unwrap();
        assert_eq!(fz.unit, ratio(30, 7));
        assert_eq!(fz.factors.len(), 2);
        assert_eq!(fz.factors[0].0, RatUniPoly::new(vec![ratio(-1, 2), rat(1)]));
        assert_eq!(fz.expand(), u);
    }

    #[test]
    fn recombination_needed() {
        // (t^2 - 2)(t^2 - 3): splits into more factors modulo many primes
        let u = p(&[-2, 0, 1]).mul(&p(&[-3, 0, 1]));
        let fz = factor_rational(&u).unwrap();
        assert_eq!(rendered(&fz), vec![("t^2 - 2".into(), 1), ("t^2 - 3".into(), 1)]);
    }

    #[test]
    fn brute_force_no_rational_quadratic_factor() {
        // oracle for t^4 - 10t^2 + 1: no rational root (±1 fail) and no
        // factorization (t^2 + a t + b)(t^2 - a t + c) with integer a, b, c
        let f = |t: i64| t.pow(4) - 10 * t * t + 1;
        assert!(f(1) != 0 && f(-1) != 0);
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                for c in -12i64..=12 {
                    // (t^2+at+b)(t^2-at+c) = t^4 + (b+c-a^2)t^2 + a(c-b)t + bc
                    let ok = b + c - a * a == -10 && a * (c - b) == 0 && b * c == 1;
                    assert!(!ok, "found {a} {b} {c}");
                }
            }
        }
        assert_eq!(factor_rational(&p(&[1, 0, -10, 0, 1])).unwrap().factors.len(), 1);
    }
}
