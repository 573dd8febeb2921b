use std::collections::HashSet;

use num_traits::{One, Zero};

use super::{Algebra, Element, StructureConstant};
use crate::error::{Error, Result};
use crate::kernel::{independent_subset, RatMatrix, Rational};

fn one() -> Rational {
    Rational::one()
}

fn unit_vector(dim: usize, i: usize) -> Vec<Rational> {
    Element::basis(dim, i).0
}

/// ℚ itself.
pub fn rationals() -> Algebra {
    Algebra::new(
        "q",
        vec!["1".into()],
        vec![one()],
        vec![StructureConstant { i: 0, j: 0, k: 0, c: one() }],
    )
    .expect("static table")
}

/// `ℚ[ε]/(ε²)` on the basis `1, ε`.
pub fn dual_numbers() -> Algebra {
    truncated_poly(1).with_name("dual-numbers").relabel(&["1", "eps"])
}

/// `M_n(ℚ)` on matrix units `e_ab`, row-major.
pub fn matrix_algebra(n: usize) -> Algebra {
    assert!(n >= 1);
    let label = |a: usize, b: usize| {
        if n < 10 {
            format!("e{}{}", a + 1, b + 1)
        } else {
            format!("e{}_{}", a + 1, b + 1)
        }
    };
    let basis = (0..n * n).map(|i| label(i / n, i % n)).collect();
    let mut unit = vec![Rational::zero(); n * n];
    for a in 0..n {
        unit[a * n + a] = one();
    }
    let mut table = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                // e_ab e_bd = e_ad
                table.push(StructureConstant {
                    i: a * n + b,
                    j: b * n + d,
                    k: a * n + d,
                    c: one(),
                });
            }
        }
    }
    Algebra::new(format!("m{n}"), basis, unit, table).expect("matrix units")
}

/// Quaternion algebra `(a, b)_ℚ`: `i² = a`, `j² = b`, `ij = −ji = k`.
pub fn quaternion(a: Rational, b: Rational) -> Algebra {
    let ab = &a * &b;
    // (left, right) -> (coefficient, index) on the basis 1, i, j, k
    let rule = |l: usize, r: usize| -> (Rational, usize) {
        match (l, r) {
            (0, x) | (x, 0) => (one(), x),
            (1, 1) => (a.clone(), 0),
            (2, 2) => (b.clone(), 0),
            (3, 3) => (-ab.clone(), 0),
            (1, 2) => (one(), 3),
            (2, 1) => (-one(), 3),
            (1, 3) => (a.clone(), 2),
            (3, 1) => (-a.clone(), 2),
            (2, 3) => (-b.clone(), 1),
            (3, 2) => (b.clone(), 1),
            _ => unreachable!(),
        }
    };
    let mut table = Vec::new();
    for l in 0..4 {
        for r in 0..4 {
            let (c, k) = rule(l, r);
            if !c.is_zero() {
                table.push(StructureConstant { i: l, j: r, k, c });
            }
        }
    }
    Algebra::new(
        "quaternion",
        ["1", "i", "j", "k"].map(String::from).to_vec(),
        unit_vector(4, 0),
        table,
    )
    .expect("quaternion table")
}

/// Upper-triangular `n×n` matrices on `e_ab` (`a ≤ b`), row-major.
pub fn upper_triangular(n: usize) -> Algebra {
    assert!(n >= 1);
    let units: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| units.iter().position(|&u| u == (a, b)).unwrap();
    let basis = units.iter().map(|(a, b)| format!("e{}{}", a + 1, b + 1)).collect();
    let mut unit = vec![Rational::zero(); units.len()];
    for a in 0..n {
        unit[index(a, a)] = one();
    }
    let mut table = Vec::new();
    for &(a, b) in &units {
        for &(c, d) in &units {
            if b == c {
                table.push(StructureConstant {
                    i: index(a, b),
                    j: index(c, d),
                    k: index(a, d),
                    c: one(),
                });
            }
        }
    }
    Algebra::new(format!("upper-triangular-{n}"), basis, unit, table).expect("upper triangular")
}

/// Polynomials in `n` variables truncated at degree 1: basis `1, y1..yn`,
/// all products `y_i y_j = 0`.
pub fn truncated_poly(n: usize) -> Algebra {
    let dim = n + 1;
    let mut basis = vec!["1".to_string()];
    basis.extend((1..=n).map(|i| format!("y{i}")));
    let mut table = Vec::new();
    for i in 0..dim {
        table.push(StructureConstant { i: 0, j: i, k: i, c: one() });
        if i > 0 {
            table.push(StructureConstant { i, j: 0, k: i, c: one() });
        }
    }
    Algebra::new(format!("truncated-poly-{n}"), basis, unit_vector(dim, 0), table).expect("truncated")
}

/// `ℚ[y]/(y² − d)` on the basis `1, y`.
pub fn quadratic_extension(d: Rational) -> Algebra {
    let mut table = vec![
        StructureConstant { i: 0, j: 0, k: 0, c: one() },
        StructureConstant { i: 0, j: 1, k: 1, c: one() },
        StructureConstant { i: 1, j: 0, k: 1, c: one() },
    ];
    if !d.is_zero() {
        table.push(StructureConstant { i: 1, j: 1, k: 0, c: d });
    }
    Algebra::new("quadratic", vec!["1".into(), "y".into()], unit_vector(2, 0), table).expect("quadratic")
}

/// Group algebra from a multiplication table `table[g][h] = gh`.
pub fn group_algebra(name: &str, table: &[Vec<usize>]) -> Result<Algebra> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if let Some(row) = table.iter().find(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return Err(Error::NotAGroup(format!("malformed row {row:?}")));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                if table[table[g][h]][k] != table[g][table[h][k]] {
                    return Err(Error::NotAGroup(format!("not associative on ({g}, {h}, {k})")));
                }
            }
        }
        if !(0..n).any(|h| table[g][h] == identity && table[h][g] == identity) {
            return Err(Error::NotAGroup(format!("element {g} has no inverse")));
        }
    }
    let basis = (0..n).map(|g| format!("g{g}")).collect();
    let entries = (0..n)
        .flat_map(|g| (0..n).map(move |h| (g, h)))
        .map(|(g, h)| StructureConstant { i: g, j: h, k: table[g][h], c: one() })
        .collect();
    Algebra::new(name, basis, unit_vector(n, identity), entries)
}

/// Multiplication table of `S_n` on permutations listed lexicographically;
/// `(σ·τ)(x) = σ(τ(x))`. Also returns the permutations.
pub fn symmetric_group_table(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&(0..n).map(|x| s[t[x]]).collect()))
                .collect()
        })
        .collect();
    (table, perms)
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect()
}

/// `A ⊕ B` with concatenated bases and unit `(1_A, 1_B)`.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let shift = a.dim();
    let mut seen: HashSet<String> = HashSet::new();
    let mut basis = Vec::with_capacity(a.dim() + b.dim());
    for label in a.basis().iter().chain(b.basis()) {
        let mut l = label.clone();
        while !seen.insert(l.clone()) {
            l.push('\'');
        }
        basis.push(l);
    }
    let mut unit = a.unit().0;
    unit.extend(b.unit().0);
    let mut table = a.table().to_vec();
    table.extend(b.table().iter().map(|e| StructureConstant {
        i: e.i + shift,
        j: e.j + shift,
        k: e.k + shift,
        c: e.c.clone(),
    }));
    Algebra::new(format!("{}+{}", a.name(), b.name()), basis, unit, table).expect("direct sum")
}

/// A subalgebra together with its inclusion matrix (columns are the chosen
/// basis vectors in the coordinates of the ambient algebra).
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: Algebra,
    pub inclusion: RatMatrix,
}

/// The subalgebra spanned by `spanning`. The span must contain the unit and
/// be closed under multiplication; redundant vectors are dropped.
pub fn subalgebra(alg: &Algebra, spanning: &[Element]) -> Result<Subalgebra> {
    let vectors: Vec<Vec<Rational>> = spanning.iter().map(|e| e.0.clone()).collect();
    if let Some(v) = vectors.iter().find(|v| v.len() != alg.dim()) {
        return Err(Error::DimensionMismatch {
            what: "spanning vector",
            expected: alg.dim(),
            got: v.len(),
        });
    }
    let kept = independent_subset(&vectors, alg.dim());
    if kept.is_empty() {
        return Err(Error::NotClosed("empty span".into()));
    }
    let chosen: Vec<Element> = kept.iter().map(|&i| spanning[i].clone()).collect();
    let labels = chosen
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let nonzero: Vec<usize> = (0..v.dim()).filter(|&i| !v.0[i].is_zero()).collect();
            match nonzero.as_slice() {
                [i] if v.0[*i].is_one() => alg.basis()[*i].clone(),
                _ => format!("s{}", n + 1),
            }
        })
        .collect();
    let (algebra, inclusion) =
        alg.span_algebra(format!("sub({})", alg.name()), labels, &chosen, &alg.unit())?;
    Ok(Subalgebra { algebra, inclusion })
}

impl Algebra {
    pub(crate) fn relabel(mut self, labels: &[&str]) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.basis = labels.iter().map(|s| s.to_string()).collect();
        self
    }
}
