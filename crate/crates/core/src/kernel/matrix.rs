//! Matrices over ℚ[x1..xm] and fraction-free linear algebra.
//!
//! Nothing here ever forms a rational function. Dependence over the function
//! field is found by Bareiss-style Gauss-Jordan elimination whose divisions
//! by the previous pivot are exact in the polynomial ring.

use num_traits::One;

use super::multipoly::MultiPoly;
use super::ratmat::RatMatrix;
use super::rational::Rational;
use super::unipoly::UniPolyOverRing;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    num_vars: usize,
    entries: Vec<MultiPoly>,
}

/// A linear dependence `Σ coeffs[i] · row_i = 0` among rows `0..=index`
/// with `coeffs[index] ≠ 0` and `index` minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dependence {
    pub index: usize,
    pub coeffs: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, num_vars: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                what: "matrix entries",
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if let Some(e) = entries.iter().find(|e| e.num_vars() != num_vars) {
            return Err(Error::VarCountMismatch {
                left: num_vars,
                right: e.num_vars(),
            });
        }
        Ok(PolyMatrix {
            rows,
            cols,
            num_vars,
            entries,
        })
    }

    pub fn from_rows(num_vars: usize, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                what: "matrix row",
                expected: cols,
                got: r.len(),
            });
        }
        let n = rows.len();
        Self::new(n, cols, num_vars, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize, num_vars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            num_vars,
            entries: vec![MultiPoly::zero(num_vars); rows * cols],
        }
    }

    pub fn identity(n: usize, num_vars: usize) -> Self {
        let mut m = Self::zeros(n, n, num_vars);
        for i in 0..n {
            m.entries[i * n + i] = MultiPoly::one(num_vars);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                what: "matrix product",
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.num_vars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> MultiPoly {
        (0..self.rows.min(self.cols)).fold(MultiPoly::zero(self.num_vars), |acc, i| &acc + self.get(i, i))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<RatMatrix> {
        let mut m = RatMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self.get(i, j).evaluate(point)?;
            }
        }
        Ok(m)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix {
            rows: rows.len(),
            cols: cols.len(),
            num_vars: self.num_vars,
            entries,
        }
    }

    /// `det(t·I − M)` by the Faddeev–LeVerrier recursion. The only divisions
    /// are by the integers `1..=n`.
    pub fn char_poly(&self) -> Result<UniPolyOverRing> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let nv = self.num_vars;
        let mut coeffs = vec![MultiPoly::zero(nv); n + 1];
        coeffs[n] = MultiPoly::one(nv);
        // a_m holds A·M_{k-1}; M_0 = 0
        let mut a_m = Self::zeros(n, n, nv);
        for k in 1..=n {
            let mut m_k = a_m;
            for i in 0..n {
                let idx = i * n + i;
                m_k.entries[idx] = &m_k.entries[idx] + &coeffs[n - k + 1];
            }
            a_m = self.mul(&m_k)?;
            let scale = -Rational::new(One::one(), (k as i64).into());
            coeffs[n - k] = a_m.trace().scale(&scale);
        }
        Ok(UniPolyOverRing::new(nv, coeffs))
    }

    /// Determinant by Bareiss elimination (exact divisions only).
    pub fn det(&self) -> Result<MultiPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(MultiPoly::one(self.num_vars));
        }
        let mut a: Vec<Vec<MultiPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = MultiPoly::one(self.num_vars);
        let mut negate = false;
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(MultiPoly::zero(self.num_vars));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .exact_div(&prev)
                        .ok_or_else(|| Error::internal("Bareiss division not exact"))?;
                }
                a[i][k] = MultiPoly::zero(self.num_vars);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Finds the first row that is linearly dependent on its predecessors over
    /// the fraction field of ℚ[x], together with a polynomial dependence.
    ///
    /// Works on the transpose column by column with fraction-free
    /// Gauss-Jordan steps, so after `c` pivots every pivot row carries the
    /// same pivot value `d` on its diagonal. A column without a pivot then
    /// satisfies `d·col_c = Σ v_j·col_j`.
    pub fn minimal_dependence(&self) -> Result<Option<Dependence>> {
        let nv = self.num_vars;
        // a[i][c] = entry i of row c of self
        let mut a: Vec<Vec<MultiPoly>> = (0..self.cols)
            .map(|i| (0..self.rows).map(|c| self.get(c, i).clone()).collect())
            .collect();
        let mut pivot_rows: Vec<usize> = Vec::new();
        let mut used = vec![false; self.cols];
        let mut prev = MultiPoly::one(nv);
        for c in 0..self.rows {
            let pick = (0..self.cols)
                .filter(|&i| !used[i] && !a[i][c].is_zero())
                .min_by_key(|&i| a[i][c].len());
            let Some(p) = pick else {
                let d = if pivot_rows.is_empty() {
                    MultiPoly::one(nv)
                } else {
                    prev.clone()
                };
                let mut coeffs: Vec<MultiPoly> = pivot_rows.iter().map(|&r| -&a[r][c]).collect();
                coeffs.push(d);
                let dep = Dependence { index: c, coeffs };
                self.check_dependence(&dep)?;
                return Ok(Some(dep));
            };
            used[p] = true;
            let piv = a[p][c].clone();
            for i in 0..self.cols {
                if i == p {
                    continue;
                }
                let factor = a[i][c].clone();
                for j in 0..self.rows {
                    // columns < c are already settled for non-pivot rows (zero),
                    // and pivot rows only need rescaling there
                    if j < c && !used[i] {
                        continue;
                    }
                    let num = if factor.is_zero() {
                        &piv * &a[i][j]
                    } else {
                        &(&piv * &a[i][j]) - &(&factor * &a[p][j])
                    };
                    a[i][j] = num
                        .exact_div(&prev)
                        .ok_or_else(|| Error::internal("fraction-free elimination: inexact division"))?;
                }
            }
            prev = piv;
            pivot_rows.push(p);
        }
        Ok(None)
    }

    fn check_dependence(&self, dep: &Dependence) -> Result<()> {
        for col in 0..self.cols {
            let s = dep
                .coeffs
                .iter()
                .enumerate()
                .fold(MultiPoly::zero(self.num_vars), |acc, (i, c)| &acc + &(c * self.get(i, col)));
            if !s.is_zero() {
                return Err(Error::internal(format!(
                    "dependence does not annihilate column {col}"
                )));
            }
        }
        if dep.coeffs.last().is_none_or(MultiPoly::is_zero) {
            return Err(Error::internal("dependence has zero leading coefficient"));
        }
        Ok(())
    }
}
