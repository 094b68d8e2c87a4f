//! Exact integer linear algebra: the signed adjacency matrix, fraction-free
//! rank (the ground-truth nullity oracle), and exact characteristic
//! polynomials for the cycle-spectrum checks.
//!
//! Rank runs Bareiss elimination on `i64` with checked arithmetic and
//! escalates to big integers if a product would overflow; intermediates are
//! minors, which can outgrow any fixed width even for ±1 matrices.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Default dimension bound for [`char_poly`].
pub const CHAR_POLY_BOUND: usize = 16;

/// Dense square matrix of exact integers (row-major).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn from_entries(n: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n*n");
        IntMatrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        IntMatrix { n, entries: vec![0; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.n + j] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over the rationals via fraction-free Bareiss elimination with
    /// full pivoting.
    pub fn rank_exact(&self) -> usize {
        match bareiss_rank_i64(self.n, &self.entries) {
            Some(rank) => rank,
            None => bareiss_rank_big(self.n, &self.entries),
        }
    }
}

/// Signed adjacency matrix: entry (i, j) is the sign of edge ij, 0 otherwise.
pub fn adjacency_matrix(g: &SignedGraph) -> IntMatrix {
    let mut m = IntMatrix::zero(g.order());
    for &(u, v, s) in g.edges() {
        m.set(u, v, s.value());
        m.set(v, u, s.value());
    }
    m
}

/// Nullity of the signed graph: `n - rank(A)`, the multiplicity of the
/// eigenvalue zero.
pub fn nullity_oracle(g: &SignedGraph) -> usize {
    g.order() - adjacency_matrix(g).rank_exact()
}

fn bareiss_rank_i64(n: usize, entries: &[i64]) -> Option<usize> {
    let mut a = entries.to_vec();
    let mut prev: i64 = 1;
    let mut rank = 0;
    for step in 0..n {
        // Full pivoting: any nonzero in the trailing submatrix.
        let pivot = (step..n)
            .flat_map(|i| (step..n).map(move |j| (i, j)))
            .find(|&(i, j)| a[i * n + j] != 0);
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        if pi != step {
            for j in 0..n {
                a.swap(step * n + j, pi * n + j);
            }
        }
        if pj != step {
            for i in 0..n {
                a.swap(i * n + step, i * n + pj);
            }
        }
        let piv = a[step * n + step];
        for i in (step + 1)..n {
            for j in (step + 1)..n {
                let num = a[i * n + j]
                    .checked_mul(piv)?
                    .checked_sub(a[i * n + step].checked_mul(a[step * n + j])?)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                a[i * n + j] = num / prev;
            }
            a[i * n + step] = 0;
        }
        prev = piv;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(n: usize, entries: &[i64]) -> usize {
    let mut a: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for step in 0..n {
        let pivot = (step..n)
            .flat_map(|i| (step..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i * n + j].is_zero());
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        if pi != step {
            for j in 0..n {
                a.swap(step * n + j, pi * n + j);
            }
        }
        if pj != step {
            for i in 0..n {
                a.swap(i * n + step, i * n + pj);
            }
        }
        let piv = a[step * n + step].clone();
        for i in (step + 1)..n {
            for j in (step + 1)..n {
                let num = &a[i * n + j] * &piv - &a[i * n + step] * &a[step * n + j];
                debug_assert!((&num % &prev).is_zero());
                a[i * n + j] = num / &prev;
            }
            a[i * n + step] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
    }
    rank
}

/// Exact characteristic polynomial `det(xI - M)`, monic, coefficients stored
/// ascending (`coeffs[k]` multiplies `x^k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// Multiplicity of the root 0: the number of leading zero coefficients.
    pub fn root_zero_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len().saturating_sub(1))
    }

    /// Horner evaluation in floating point, for residual checks only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().expect("coefficient fits f64"))
    }
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one = mag == BigInt::from(1);
            match (k, one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial with the default dimension bound.
pub fn char_poly(m: &IntMatrix) -> Result<CharPoly> {
    char_poly_with_bound(m, CHAR_POLY_BOUND)
}

/// Faddeev–LeVerrier over big integers; all divisions are exact.
pub fn char_poly_with_bound(m: &IntMatrix, bound: usize) -> Result<CharPoly> {
    let n = m.dim();
    if n > bound {
        return Err(Error::OrderAboveBound { order: n, bound });
    }
    let a: Vec<BigInt> = m.entries.iter().map(|&x| BigInt::from(x)).collect();
    // p(x) = x^n + c[1] x^{n-1} + ... + c[n]
    let mut c = vec![BigInt::zero(); n + 1];
    let mut work = a.clone();
    for k in 1..=n {
        if k > 1 {
            // work = A * (work + c[k-1] * I)
            let mut shifted = work.clone();
            for i in 0..n {
                shifted[i * n + i] += &c[k - 1];
            }
            let mut next = vec![BigInt::zero(); n * n];
            for i in 0..n {
                for l in 0..n {
                    let aval = &a[i * n + l];
                    if aval.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let prod = aval * &shifted[l * n + j];
                        next[i * n + j] += prod;
                    }
                }
            }
            work = next;
        }
        let trace: BigInt = (0..n).map(|i| work[i * n + i].clone()).sum();
        debug_assert!((&trace % BigInt::from(k as i64)).is_zero());
        c[k] = -trace / BigInt::from(k as i64);
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = c[k].clone();
    }
    coeffs[n] = BigInt::from(1);
    Ok(CharPoly { coeffs })
}

/// Closed-form eigenvalues of a signed cycle of length `l`, listed for
/// k = 1..=l: `2cos(2kπ/l)` when balanced, `2cos((2k-1)π/l)` when unbalanced.
pub fn cycle_eigenvalues(l: usize, balanced: bool) -> Result<Vec<f64>> {
    if l < 3 {
        return Err(Error::CycleTooShort(l));
    }
    let lf = l as f64;
    Ok((1..=l)
        .map(|k| {
            let angle = if balanced {
                2.0 * k as f64 * std::f64::consts::PI / lf
            } else {
                (2.0 * k as f64 - 1.0) * std::f64::consts::PI / lf
            };
            2.0 * angle.cos()
        })
        .collect())
}
