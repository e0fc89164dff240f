//! Graded Frobenius characteristic of the classical coinvariant algebra.

use crate::coeffs::Memo;
use crate::error::Result;
use crate::matrix::Basis;
use crate::partition::{partitions_of, Partition};
use crate::qt::QtPoly;
use crate::symfunc::SymFunc;

/// `Σ_μ [n; μ]_q m_μ`
pub fn coinvariant_frobenius(n: usize) -> SymFunc {
    let terms = partitions_of(n).into_iter().map(|mu| {
        let c = crate::qt::q_multinomial(mu.parts());
        (mu, c)
    });
    SymFunc::from_terms(n, Basis::M, terms).expect("degree n terms")
}

/// `Σ_λ (Σ_{T ∈ SYT(λ)} q^{maj T}) s_λ`
pub fn coinvariant_frobenius_schur(n: usize) -> SymFunc {
    let terms = partitions_of(n).into_iter().map(|lam| {
        let c = syt_maj_generating(&lam);
        (lam, c)
    });
    SymFunc::from_terms(n, Basis::S, terms).expect("degree n terms")
}

/// The degree-`i` piece `[R_n]_i`, in the monomial basis.
pub fn coinvariant_component(n: usize, i: usize) -> SymFunc {
    coinvariant_frobenius(n).component(i as i32, 0)
}

static SYT_MAJ: Memo<(Partition, usize), QtPoly> = Memo::new();

/// `Σ_T q^{maj T}` over standard tableaux of shape `λ`, where `j` is a descent
/// when `j + 1` sits in a strictly higher row than `j`.
pub fn syt_maj_generating(lam: &Partition) -> QtPoly {
    if lam.is_empty() {
        return QtPoly::one();
    }
    (0..lam.len()).filter(|&r| is_corner(lam, r)).fold(QtPoly::zero(), |acc, r| &acc + &syt_maj_ending(lam, r))
}

fn is_corner(lam: &Partition, r: usize) -> bool {
    lam.part(r) > lam.part(r + 1)
}

fn remove_from_row(lam: &Partition, r: usize) -> Partition {
    let mut parts = lam.parts().to_vec();
    parts[r] -= 1;
    Partition::from_unsorted(parts)
}

// tableaux of shape λ whose largest entry sits at the end of row r (0-based)
fn syt_maj_ending(lam: &Partition, r: usize) -> QtPoly {
    let n = lam.size();
    if n == 1 {
        return QtPoly::one();
    }
    SYT_MAJ.get_or((lam.clone(), r), || {
        let smaller = remove_from_row(lam, r);
        let mut acc = QtPoly::zero();
        for r2 in (0..smaller.len()).filter(|&r2| is_corner(&smaller, r2)) {
            let sub = syt_maj_ending(&smaller, r2);
            if r > r2 {
                acc += &(&sub * &QtPoly::monomial((n - 1) as i32, 0, crate::qt::rat(1)));
            } else {
                acc += &sub;
            }
        }
        acc
    })
}

/// Sequence generator for `n ↦ [R_n]_i`.
pub fn coinvariant_sequence_term(i: usize) -> impl Fn(usize) -> Result<SymFunc> + Send + Sync {
    move |n| Ok(coinvariant_component(n, i))
}
