//! The consecutive-degree comparison lemma: for Schur-positive `F_n`,
//! `F_{n+1}`, if the monomial coefficients at `μ[n]` and `μ[n+1]` agree for
//! all `|μ| ≤ a`, then so do the Schur coefficients at `λ[n]`, `λ[n+1]` for
//! all `|λ| ≤ a`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Basis;
use crate::partition::{partitions_up_to, Partition};
use crate::qt::QtPoly;
use crate::symfunc::SymFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KvecOutcome {
    /// Monomial coefficients agree for every `|μ| ≤ a`.
    pub hypothesis: bool,
    /// Schur coefficients agree for every `|λ| ≤ a`.
    pub conclusion: bool,
}

impl KvecOutcome {
    /// False exactly when the hypothesis holds and the conclusion does not,
    /// which would be a defect in this library.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

fn padded_coeff(f: &SymFunc, lam: &Partition) -> QtPoly {
    lam.pad(f.degree()).map(|p| f.coeff(&p)).unwrap_or_default()
}

fn agree(f: &SymFunc, g: &SymFunc, a: usize) -> bool {
    partitions_up_to(a).iter().all(|lam| padded_coeff(f, lam) == padded_coeff(g, lam))
}

pub fn kvec_lemma_check(f_n: &SymFunc, f_n1: &SymFunc, a: usize) -> Result<KvecOutcome> {
    if f_n1.degree() != f_n.degree() + 1 {
        return Err(Error::DegreeMismatch(f_n.degree(), f_n1.degree()));
    }
    let (s0, s1) = (f_n.convert(Basis::S)?, f_n1.convert(Basis::S)?);
    for s in [&s0, &s1] {
        if let Some((lam, c)) = s.terms().find(|(_, c)| !c.is_nonnegative()) {
            return Err(Error::NotSchurPositive(format!("coefficient of s{lam} is {c}")));
        }
    }
    let (m0, m1) = (f_n.convert(Basis::M)?, f_n1.convert(Basis::M)?);
    Ok(KvecOutcome { hypothesis: agree(&m0, &m1, a), conclusion: agree(&s0, &s1, a) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::coinvariant_component;

    #[test]
    fn zero_pair() {
        let out = kvec_lemma_check(&SymFunc::zero(4, Basis::S), &SymFunc::zero(5, Basis::S), 2).unwrap();
        assert_eq!(out, KvecOutcome { hypothesis: true, conclusion: true });
    }

    #[test]
    fn coinvariant_pair() {
        let out = kvec_lemma_check(&coinvariant_component(6, 2), &coinvariant_component(7, 2), 2).unwrap();
        assert!(out.hypothesis && out.conclusion);
    }

    #[test]
    fn guards() {
        let f = SymFunc::basis_element(Basis::S, Partition::row(3));
        assert!(kvec_lemma_check(&f, &f, 1).is_err());
        let neg = SymFunc::basis_element(Basis::M, Partition::new(vec![2, 1, 1]).unwrap());
        assert!(matches!(kvec_lemma_check(&f, &neg, 1), Err(Error::NotSchurPositive(_))));
    }
}
