//! The six bases and the dense change-of-basis matrices between them.
//!
//! Convention: for `A = change_of_basis_matrix(n, f, g)`,
//! `f_λ = Σ_μ A[λ][μ] g_μ`. Rows and columns are indexed by the partitions of
//! `n` in reverse lexicographic order. A coefficient row vector `c` in basis
//! `f` becomes `c·A` in basis `g`, and `A^{f→k} = A^{f→g} A^{g→k}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::coeffs::{
    brick_count, brick_weight, character, contingency_count, kostka, ordered_brick_count, sign, z_rational,
};
use crate::error::{Error, Result};
use crate::limits;
use crate::partition::{partitions_of, Partition};
use crate::qt::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "p/z")]
    PZ,
    #[serde(rename = "s")]
    S,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::S, Basis::H, Basis::E, Basis::P, Basis::PZ];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::PZ => "p/z",
            Basis::S => "s",
        }
    }

    /// The Hall-dual basis, if it is one of the six.
    pub fn dual(self) -> Option<Basis> {
        match self {
            Basis::M => Some(Basis::H),
            Basis::H => Some(Basis::M),
            Basis::P => Some(Basis::PZ),
            Basis::PZ => Some(Basis::P),
            Basis::S => Some(Basis::S),
            Basis::E => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "p/z" | "pz" => Ok(Basis::PZ),
            "s" => Ok(Basis::S),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CoefficientMatrix {
    pub degree: usize,
    pub from: Basis,
    pub to: Basis,
    pub index: Vec<Partition>,
    pub entries: Vec<Vec<Rational>>,
    position: HashMap<Partition, usize>,
}

impl CoefficientMatrix {
    fn build(degree: usize, from: Basis, to: Basis, entries: Vec<Vec<Rational>>) -> Self {
        let index = partitions_of(degree);
        let position = index.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CoefficientMatrix { degree, from, to, index, entries, position }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn position(&self, lam: &Partition) -> Option<usize> {
        self.position.get(lam).copied()
    }

    /// `A[λ][μ]`; panics if either partition is not of this degree.
    pub fn entry(&self, lam: &Partition, mu: &Partition) -> &Rational {
        let i = self.position(lam).expect("row partition of matrix degree");
        let j = self.position(mu).expect("column partition of matrix degree");
        &self.entries[i][j]
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }
}

/// Plain matrix product of square matrices.
pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i][k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k][j];
                if !y.is_zero() {
                    out[i][j] += x * y;
                }
            }
        }
    }
    out
}

pub fn transpose(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

/// Exact Gauss–Jordan inversion.
pub fn invert(a: &[Vec<Rational>], what: &str) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).ok_or_else(|| Error::Singular(what.to_string()))?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].clone();
        if !p.is_one() {
            let pinv = p.recip();
            for x in m[col].iter_mut() {
                *x *= &pinv;
            }
            for x in inv[col].iter_mut() {
                *x *= &pinv;
            }
        }
        let prow = m[col].clone();
        let pinv_row = inv[col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                if !prow[j].is_zero() {
                    let d = &f * &prow[j];
                    m[r][j] -= d;
                }
                if !pinv_row[j].is_zero() {
                    let d = &f * &pinv_row[j];
                    inv[r][j] -= d;
                }
            }
        }
    }
    Ok(inv)
}

type Key = (usize, Basis, Basis);

fn cache() -> &'static RwLock<HashMap<Key, Arc<CoefficientMatrix>>> {
    static C: OnceLock<RwLock<HashMap<Key, Arc<CoefficientMatrix>>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The matrix `A^{from→to}` of degree `n`, subject to the degree cap.
pub fn change_of_basis_matrix(n: usize, from: Basis, to: Basis) -> Result<Arc<CoefficientMatrix>> {
    limits::check_degree(n)?;
    matrix_uncapped(n, from, to)
}

/// As [`change_of_basis_matrix`] but ignoring the degree cap.
pub(crate) fn matrix_uncapped(n: usize, from: Basis, to: Basis) -> Result<Arc<CoefficientMatrix>> {
    if let Some(m) = cache().read().get(&(n, from, to)) {
        return Ok(m.clone());
    }
    let entries = assemble(n, from, to)?;
    let m = Arc::new(CoefficientMatrix::build(n, from, to, entries));
    cache().write().insert((n, from, to), m.clone());
    Ok(m)
}

fn fill(n: usize, f: impl Fn(&Partition, &Partition) -> Rational + Sync) -> Vec<Vec<Rational>> {
    use rayon::prelude::*;
    let parts = partitions_of(n);
    parts.par_iter().map(|lam| parts.iter().map(|mu| f(lam, mu)).collect()).collect()
}

fn u(x: u128) -> Rational {
    Rational::from_integer(x.into())
}

fn i(x: i128) -> Rational {
    Rational::from_integer(x.into())
}

fn entries_of(n: usize, from: Basis, to: Basis) -> Result<Vec<Vec<Rational>>> {
    Ok(matrix_uncapped(n, from, to)?.entries.clone())
}

fn assemble(n: usize, from: Basis, to: Basis) -> Result<Vec<Vec<Rational>>> {
    use Basis::*;
    let len = |p: &Partition| p.len();
    let eps = move |mu: &Partition| sign(n - mu.len());
    let m = match (from, to) {
        (a, b) if a == b => fill(n, |l, m| if l == m { rat(1) } else { rat(0) }),

        (S, M) => fill(n, |l, m| u(kostka(l, m))),
        (H, M) => fill(n, |l, m| u(contingency_count(l, m, false))),
        (E, M) => fill(n, |l, m| u(contingency_count(l, m, true))),
        (P, M) => fill(n, |l, m| u(ordered_brick_count(l, m))),
        (PZ, M) => fill(n, |l, m| u(ordered_brick_count(l, m)) / z_rational(l)),

        (M, S) => invert(&entries_of(n, S, M)?, "Kostka matrix")?,
        (H, S) => fill(n, |l, m| u(kostka(m, l))),
        (E, S) => fill(n, |l, m| u(kostka(&m.conjugate(), l))),
        (P, S) => fill(n, |l, m| i(character(m, l))),
        (PZ, S) => fill(n, |l, m| i(character(m, l)) / z_rational(l)),

        (M, H) => invert(&entries_of(n, H, M)?, "IM matrix")?,
        (S, H) => transpose(&entries_of(n, M, S)?),
        (E, H) | (H, E) => fill(n, |l, m| eps(m) * u(brick_count(m, l))),
        (P, H) => fill(n, |l, m| sign(len(l) + len(m)) * u(brick_weight(m, l))),
        (PZ, H) => fill(n, |l, m| sign(len(l) + len(m)) * u(brick_weight(m, l)) / z_rational(l)),

        (M, E) => invert(&entries_of(n, E, M)?, "BM matrix")?,
        (S, E) => {
            let minv = matrix_uncapped(n, M, S)?;
            fill(n, |l, m| minv.entry(m, &l.conjugate()).clone())
        }
        (P, E) => fill(n, |l, m| eps(m) * u(brick_weight(m, l))),
        (PZ, E) => fill(n, |l, m| eps(m) * u(brick_weight(m, l)) / z_rational(l)),

        (M, P) => fill(n, |l, m| sign(len(l) + len(m)) * u(brick_weight(l, m)) / z_rational(m)),
        (S, P) => fill(n, |l, m| i(character(l, m)) / z_rational(m)),
        (H, P) => fill(n, |l, m| u(ordered_brick_count(m, l)) / z_rational(m)),
        (E, P) => fill(n, |l, m| eps(m) * u(ordered_brick_count(m, l)) / z_rational(m)),
        (PZ, P) => fill(n, |l, m| if l == m { z_rational(l).recip() } else { rat(0) }),

        (M, PZ) => fill(n, |l, m| sign(len(l) + len(m)) * u(brick_weight(l, m))),
        (S, PZ) => fill(n, |l, m| i(character(l, m))),
        (H, PZ) => fill(n, |l, m| u(ordered_brick_count(m, l))),
        (E, PZ) => fill(n, |l, m| eps(m) * u(ordered_brick_count(m, l))),
        (P, PZ) => fill(n, |l, m| if l == m { z_rational(l) } else { rat(0) }),

        _ => unreachable!("all 36 pairs are covered"),
    };
    Ok(m)
}

/// A single entry `A^{from→to}[λ][μ]`; zero when the sizes differ.
pub fn coefficient(from: Basis, to: Basis, lam: &Partition, mu: &Partition) -> Result<Rational> {
    if lam.size() != mu.size() {
        return Ok(Rational::zero());
    }
    Ok(change_of_basis_matrix(lam.size(), from, to)?.entry(lam, mu).clone())
}
