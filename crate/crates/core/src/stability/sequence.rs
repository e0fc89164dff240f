//! Sequences `n ↦ F_n ∈ Λ^(n)` with a per-sequence term cache.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::frobenius::macdonald::filling_statistics;
use crate::frobenius::{coinvariant_component, dr_component};
use crate::matrix::Basis;
use crate::partition::{partitions_of, Partition};
use crate::qt::{rat, QtPoly};
use crate::symfunc::SymFunc;

type Generator = dyn Fn(usize) -> Result<Option<SymFunc>> + Send + Sync;
type Bound = dyn Fn(&Partition) -> usize + Send + Sync;

/// A sequence of symmetric functions, `F_n` of degree `n`.
///
/// The generator may return `None` for a zero term. Terms are computed once;
/// concurrent first requests may both compute, and the first insert wins.
pub struct SymFuncSequence {
    label: String,
    generator: Arc<Generator>,
    terms: RwLock<BTreeMap<usize, Option<SymFunc>>>,
    schur: RwLock<BTreeMap<usize, Option<SymFunc>>>,
    weight_bound: Option<usize>,
    monomial_bound: Option<Arc<Bound>>,
}

impl fmt::Debug for SymFuncSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymFuncSequence")
            .field("label", &self.label)
            .field("weight_bound", &self.weight_bound)
            .finish_non_exhaustive()
    }
}

impl SymFuncSequence {
    pub fn new(
        label: impl Into<String>,
        generator: impl Fn(usize) -> Result<Option<SymFunc>> + Send + Sync + 'static,
    ) -> Self {
        SymFuncSequence {
            label: label.into(),
            generator: Arc::new(generator),
            terms: RwLock::new(BTreeMap::new()),
            schur: RwLock::new(BTreeMap::new()),
            weight_bound: None,
            monomial_bound: None,
        }
    }

    /// A proven upper bound on the Schur weight.
    pub fn with_weight_bound(mut self, w: usize) -> Self {
        self.weight_bound = Some(w);
        self
    }

    /// A proven upper bound `μ ↦ b(μ)` on the monomial range `rg^m_μ`.
    pub fn with_monomial_bound(mut self, f: impl Fn(&Partition) -> usize + Send + Sync + 'static) -> Self {
        self.monomial_bound = Some(Arc::new(f));
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn weight_bound(&self) -> Option<usize> {
        self.weight_bound
    }

    pub fn monomial_bound(&self, mu: &Partition) -> Option<usize> {
        self.monomial_bound.as_ref().map(|f| f(mu))
    }

    /// `F_n`, or `None` when it is zero.
    pub fn term(&self, n: usize) -> Result<Option<SymFunc>> {
        if let Some(t) = self.terms.read().get(&n) {
            return Ok(t.clone());
        }
        let t = (self.generator)(n)?.filter(|f| !f.is_zero());
        if let Some(f) = &t {
            if f.degree() != n {
                return Err(Error::Invariant(format!("{}: term {n} has degree {}", self.label, f.degree())));
            }
        }
        self.terms.write().entry(n).or_insert(t.clone());
        Ok(t)
    }

    /// `F_n` in the Schur basis, computed coefficient by coefficient so that
    /// no matrix of degree `n` is needed.
    pub fn schur_term(&self, n: usize) -> Result<Option<SymFunc>> {
        if let Some(t) = self.schur.read().get(&n) {
            return Ok(t.clone());
        }
        let t = match self.term(n)? {
            None => None,
            Some(f) if f.basis() == Basis::S => Some(f),
            Some(f) => {
                let mut terms = Vec::new();
                for nu in partitions_of(n) {
                    let c = f.schur_coefficient(&nu)?;
                    if !c.is_zero() {
                        terms.push((nu, c));
                    }
                }
                Some(SymFunc::from_terms(n, Basis::S, terms)?)
            }
        };
        self.schur.write().entry(n).or_insert(t.clone());
        Ok(t)
    }

    /// The coefficient of `b_{λ[n]}` in `F_n`; zero when `λ[n]` is undefined.
    pub fn coefficient(&self, n: usize, basis: Basis, lam: &Partition) -> Result<QtPoly> {
        let Some(padded) = lam.pad(n) else { return Ok(QtPoly::zero()) };
        if basis == Basis::S {
            return Ok(self.schur_term(n)?.map(|f| f.coeff(&padded)).unwrap_or_default());
        }
        match self.term(n)? {
            None => Ok(QtPoly::zero()),
            Some(f) => Ok(f.convert(basis)?.coeff(&padded)),
        }
    }

    /// `F_n` expanded in `basis`.
    pub fn term_in(&self, n: usize, basis: Basis) -> Result<Option<SymFunc>> {
        if basis == Basis::S {
            return self.schur_term(n);
        }
        self.term(n)?.map(|f| f.convert(basis)).transpose()
    }
}

/// `F_n = s_{λ[n]}` wherever defined.
pub fn padded_schur(lam: &Partition) -> SymFuncSequence {
    let lam = lam.clone();
    let w = lam.size();
    SymFuncSequence::new(format!("s_{lam}[n]"), move |n| Ok(lam.pad(n).map(|p| SymFunc::basis_element(Basis::S, p))))
        .with_weight_bound(w)
}

/// `F_n = (-1)^n s_(n)`.
pub fn alternating_row() -> SymFuncSequence {
    SymFuncSequence::new("(-1)^n s_(n)", |n| {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        Ok(Some(SymFunc::basis_element(Basis::S, Partition::row(n)).scale(&QtPoly::integer(sign))))
    })
}

/// `F_n = h_{λ[n]}`.
pub fn padded_h(lam: &Partition) -> SymFuncSequence {
    let lam = lam.clone();
    SymFuncSequence::new(format!("h_{lam}[n]"), move |n| Ok(lam.pad(n).map(|p| SymFunc::basis_element(Basis::H, p))))
}

/// The degree-`i` piece of the coinvariant algebra, in `m`.
pub fn coinvariant(i: usize) -> SymFuncSequence {
    SymFuncSequence::new(format!("[R_n]_{i}"), move |n| Ok(Some(coinvariant_component(n, i))))
        .with_weight_bound(i)
        .with_monomial_bound(move |mu| mu.size() + i.max(mu.first()))
}

/// The `(i, j)` piece of the diagonal coinvariants, in `m`.
pub fn diagonal(i: usize, j: usize) -> SymFuncSequence {
    SymFuncSequence::new(format!("[DR_n]_({i},{j})"), move |n| Ok(Some(dr_component(n, i, j))))
        .with_weight_bound(i + j)
        .with_monomial_bound(move |mu| mu.size() + (i + j).max(mu.first()))
}

/// `[q^i t^j] H̃_{μ[n]}` in `m`, by fillings with `inv ≤ i`, `maj ≤ j`.
pub fn macdonald(mu: &Partition, i: usize, j: usize) -> SymFuncSequence {
    let shape = mu.clone();
    let (a, a1) = (mu.size(), mu.first());
    SymFuncSequence::new(format!("[H_{mu}[n]]_({i},{j})"), move |n| {
        let Some(nu) = shape.pad(n) else { return Ok(None) };
        Ok(Some(macdonald_bidegree(&nu, i, j)?))
    })
    .with_weight_bound(i + j)
    .with_monomial_bound(move |eta| (a + a1 + eta.size() + i).max(eta.size() + eta.first()))
}

/// `[q^i t^j] H̃_ν` in `m`, with constant coefficients like
/// [`SymFunc::component`]. No cap: the search is bounded by `(i, j)`.
pub fn macdonald_bidegree(nu: &Partition, i: usize, j: usize) -> Result<SymFunc> {
    use rayon::prelude::*;
    let n = nu.size();
    let terms: Vec<(Partition, QtPoly)> = partitions_of(n)
        .into_par_iter()
        .filter_map(|kappa| {
            let c = filling_statistics(nu, kappa.parts(), i, j).get(&(i, j)).copied().unwrap_or(0);
            (c > 0).then(|| (kappa, QtPoly::constant(rat(c as i64))))
        })
        .collect();
    SymFunc::from_terms(n, Basis::M, terms)
}

/// The counterexample sequence: zero below 4,
/// `V_4 = S^(2,2) + S^(3,1) + S^(4) + 2 S^(2,1,1)` and
/// `V_n = 2 S^(n-2,1,1)` afterwards. Its character values at `μ[n]`,
/// `|μ| ≤ 2`, agree from `n = 4` on, while its Schur multiplicities only
/// settle at `n = 5`.
pub fn fixture_v() -> SymFuncSequence {
    SymFuncSequence::new("V_n", |n| {
        let p = |v: &[usize]| Partition::new(v.to_vec()).expect("partition");
        Ok(match n {
            0..=3 => None,
            4 => Some(SymFunc::from_terms(
                4,
                Basis::S,
                [
                    (p(&[2, 2]), QtPoly::one()),
                    (p(&[3, 1]), QtPoly::one()),
                    (p(&[4]), QtPoly::one()),
                    (p(&[2, 1, 1]), QtPoly::integer(2)),
                ],
            )?),
            _ => Some(SymFunc::from_terms(n, Basis::S, [(p(&[n - 2, 1, 1]), QtPoly::integer(2))])?),
        })
    })
    .with_weight_bound(2)
}

/// The zero sequence.
pub fn zero() -> SymFuncSequence {
    SymFuncSequence::new("0", |_| Ok(None)).with_weight_bound(0)
}
