//! Polynomials over a small prime field F_p (p odd, p < 2^31).

use num_bigint::BigUint;
use rand::Rng;

pub(crate) type Poly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        Field { p }
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub_poly(self, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn mul_poly(self, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    pub fn div_rem(self, a: &Poly, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_empty(), "division by zero mod p");
        let dd = d.len() - 1;
        if a.len() <= dd {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(d[dd]);
        let mut rem = a.clone();
        let mut quot = vec![0u64; a.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let q = self.mul(rem[i], inv);
            for j in 0..=dd {
                rem[i - dd + j] = self.sub(rem[i - dd + j], self.mul(q, d[j]));
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        (Self::trim(quot), Self::trim(rem))
    }

    pub fn rem(self, a: &Poly, d: &Poly) -> Poly {
        self.div_rem(a, d).1
    }

    pub fn monic(self, a: &Poly) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    pub fn gcd(self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s·a + t·b = g` monic.
    pub fn xgcd(self, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1): (Poly, Poly) = (vec![1], Vec::new());
        let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().expect("xgcd of zero polynomials"));
        let sc = |v: &Poly| v.iter().map(|&c| self.mul(c, inv)).collect::<Poly>();
        (sc(&r0), Self::trim(sc(&s0)), Self::trim(sc(&t0)))
    }

    pub fn derivative(self, a: &Poly) -> Poly {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn pow_mod(self, base: &Poly, exp: &BigUint, modulus: &Poly) -> Poly {
        let mut result: Poly = vec![1];
        let base = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            result = self.rem(&self.mul_poly(&result, &result), modulus);
            if exp.bit(i) {
                result = self.rem(&self.mul_poly(&result, &base), modulus);
            }
        }
        self.rem(&result, modulus)
    }

    pub fn is_squarefree(self, a: &Poly) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(self, f: &Poly) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x: Poly = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest, deg));
                break;
            }
            h = self.pow_mod(&h, &p, &rest);
            let g = self.gcd(&self.sub_poly(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Splits a monic product of distinct irreducibles of common degree `d`.
    pub fn equal_degree(self, f: &Poly, d: usize, rng: &mut impl Rng) -> Vec<Poly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.clone()];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: Poly = Self::trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub_poly(&self.pow_mod(&a, &exp, f), &vec![1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let other = self.monic(&self.div_rem(f, &g).0);
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }
}

pub(crate) fn small_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut n = 3u64;
    while primes.len() < count {
        if (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0) {
            primes.push(n);
        }
        n += 2;
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factors_x4_minus_1_mod_5() {
        let f = Field::new(5);
        let poly: Poly = vec![4, 0, 0, 0, 1];
        let dd = f.distinct_degree(&poly);
        assert_eq!(dd.len(), 1);
        assert_eq!(dd[0].1, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut lin = f.equal_degree(&dd[0].0, 1, &mut rng);
        lin.sort();
        assert_eq!(lin.len(), 4);
    }

    #[test]
    fn x2_plus_1_irreducible_mod_3() {
        let f = Field::new(3);
        let dd = f.distinct_degree(&vec![1, 0, 1]);
        assert_eq!(dd, vec![(vec![1, 0, 1], 2)]);
    }

    #[test]
    fn primes() {
        assert_eq!(small_primes(5), vec![3, 5, 7, 11, 13]);
    }
}
