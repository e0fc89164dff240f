//! Observed and certified stable ranges.
//!
//! Every verdict here is relative to a horizon: "stable from `n0`" means the
//! value did not change on `[n0, horizon]`, nothing more. A range is
//! certified only when a proven bound `b` is available, `b ≤ horizon`, and the
//! observed range does not exceed `b`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{change_of_basis_matrix, Basis};
use crate::partition::{partitions_up_to, Partition};
use crate::qt::{QtPoly, Rational};
use crate::stability::sequence::SymFuncSequence;
use crate::stability::table::Table;

/// A value scanned over `n ≤ horizon`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Observed<V> {
    /// Least `n0 < horizon` with the value constant on `[n0, horizon]`;
    /// `None` means unstable at this horizon.
    pub stable_from: Option<usize>,
    /// The value at the horizon.
    pub value: V,
    pub horizon: usize,
}

impl<V> Observed<V> {
    pub fn is_stable(&self) -> bool {
        self.stable_from.is_some()
    }

    /// Whether the value is constant on `[bound, horizon]`.
    pub fn constant_from(&self, bound: usize) -> bool {
        bound <= self.horizon && self.stable_from.is_some_and(|n0| n0 <= bound)
    }
}

/// Scans `f(horizon), f(horizon - 1), ...` down to `lowest` and stops at the
/// first change.
pub fn observe<V: PartialEq>(lowest: usize, horizon: usize, f: impl Fn(usize) -> Result<V>) -> Result<Observed<V>> {
    let value = f(horizon)?;
    let mut n0 = horizon;
    while n0 > lowest {
        if f(n0 - 1)? != value {
            break;
        }
        n0 -= 1;
    }
    Ok(Observed { stable_from: (n0 < horizon).then_some(n0), value, horizon })
}

fn need(horizon: usize, needed: usize) -> Result<()> {
    if horizon < needed {
        Err(Error::HorizonTooSmall { horizon, needed })
    } else {
        Ok(())
    }
}

/// `rg^b_λ(F)` as observed up to `horizon`.
pub fn observed_range(
    seq: &SymFuncSequence,
    basis: Basis,
    lam: &Partition,
    horizon: usize,
) -> Result<Observed<QtPoly>> {
    need(horizon, lam.pad_threshold())?;
    observe(0, horizon, |n| seq.coefficient(n, basis, lam))
}

/// `N^{from→to}_{λ,μ}`: where `A_{λ[n],μ[n]}` settles, with undefined
/// entries read as zero.
pub fn coefficient_stab_n(
    from: Basis,
    to: Basis,
    lam: &Partition,
    mu: &Partition,
    horizon: usize,
) -> Result<Observed<Rational>> {
    need(horizon, lam.pad_threshold().max(mu.pad_threshold()))?;
    observe(0, horizon, |n| padded_entry(from, to, lam, mu, n))
}

/// `A^{from→to}_{λ[n],μ[n]}`, zero when either padding is undefined.
pub fn padded_entry(from: Basis, to: Basis, lam: &Partition, mu: &Partition, n: usize) -> Result<Rational> {
    match (lam.pad(n), mu.pad(n)) {
        (Some(a), Some(b)) => Ok(change_of_basis_matrix(n, from, to)?.entry(&a, &b).clone()),
        _ => Ok(Rational::default()),
    }
}

/// Largest `|λ|` with `b_{λ[n]}` in the support of some `F_n`, `n ≤ horizon`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightObservation {
    pub weight: usize,
    /// Where the weight is attained: `(n, λ)`.
    pub witness: Option<(usize, Partition)>,
    pub horizon: usize,
}

pub fn weight(seq: &SymFuncSequence, basis: Basis, horizon: usize) -> Result<WeightObservation> {
    let mut best: Option<(usize, Partition)> = None;
    for n in 0..=horizon {
        if let Some(f) = seq.term_in(n, basis)? {
            for (kappa, _) in f.terms() {
                let lam = kappa.unpad();
                if best.as_ref().is_none_or(|(_, b)| lam.size() > b.size()) {
                    best = Some((n, lam));
                }
            }
        }
    }
    Ok(WeightObservation { weight: best.as_ref().map_or(0, |(_, l)| l.size()), witness: best, horizon })
}

/// One row of a [`StabilityReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RangeEntry {
    pub partition: Partition,
    /// `None`: unstable at the horizon.
    pub observed_range: Option<usize>,
    pub stable_value: QtPoly,
    pub proven_bound: Option<usize>,
    pub certified: bool,
    /// For Schur entries: the bound without the `2|λ|` term.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub improved_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub improved_certified: Option<bool>,
}

impl RangeEntry {
    fn new(partition: Partition, obs: Observed<QtPoly>, proven_bound: Option<usize>) -> Self {
        let certified = proven_bound.is_some_and(|b| obs.constant_from(b));
        RangeEntry {
            partition,
            observed_range: obs.stable_from,
            stable_value: obs.value,
            proven_bound,
            certified,
            improved_bound: None,
            improved_certified: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniformRange {
    /// Proven uniform bound `max(2w, max_{|μ|≤w} b(μ))`.
    pub proven_bound: Option<usize>,
    /// The same without `2w`.
    pub improved_bound: Option<usize>,
    /// Largest observed range over the rows; `None` if some row is unstable.
    pub observed: Option<usize>,
    pub certified: bool,
    pub improved_certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub label: String,
    pub basis: Basis,
    pub horizon: usize,
    pub entries: Vec<RangeEntry>,
    pub observed_weight: usize,
    /// The observed weight is only a lower bound for the true weight.
    pub weight_horizon_limited: bool,
    pub weight_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uniform: Option<UniformRange>,
}

fn show_opt(x: Option<usize>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

impl StabilityReport {
    pub fn entry(&self, lam: &Partition) -> Option<&RangeEntry> {
        self.entries.iter().find(|e| &e.partition == lam)
    }

    pub fn all_certified(&self) -> bool {
        self.entries.iter().all(|e| e.certified)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn to_table(&self) -> Table {
        let schur = self.entries.iter().any(|e| e.improved_bound.is_some());
        let mut headers = vec!["partition", "observed range", "proven bound", "certified"];
        if schur {
            headers.extend(["improved bound", "improved certified"]);
        }
        headers.push("stable value");
        let mut t = Table::new(&headers).with_title(format!(
            "{} in {} up to n = {}; observed weight {}{}",
            self.label,
            self.basis,
            self.horizon,
            self.observed_weight,
            match self.weight_bound {
                Some(w) => format!(" (proven bound {w})"),
                None => " (horizon-limited)".into(),
            }
        ));
        for e in &self.entries {
            let mut row = vec![
                e.partition.to_string(),
                e.observed_range.map_or(format!("unstable@{}", self.horizon), |n| n.to_string()),
                show_opt(e.proven_bound),
                yes_no(e.certified),
            ];
            if schur {
                row.push(show_opt(e.improved_bound));
                row.push(e.improved_certified.map_or("-".into(), yes_no));
            }
            row.push(e.stable_value.to_string());
            t.push(row);
        }
        if let Some(u) = &self.uniform {
            let mut row = vec!["uniform".into(), show_opt(u.observed), show_opt(u.proven_bound), yes_no(u.certified)];
            if schur {
                row.push(show_opt(u.improved_bound));
                row.push(yes_no(u.improved_certified));
            }
            row.push(String::new());
            t.push(row);
        }
        t
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

/// Observed and certified monomial ranges for every `|μ| ≤ size_bound`
/// whose padding exists at the horizon.
pub fn monomial_report(seq: &SymFuncSequence, horizon: usize, size_bound: usize) -> Result<StabilityReport> {
    basis_report(seq, Basis::M, horizon, size_bound, |mu| seq.monomial_bound(mu))
}

/// Observed ranges in any basis. Proven bounds are only known for `m`.
pub fn coefficient_report(
    seq: &SymFuncSequence,
    basis: Basis,
    horizon: usize,
    size_bound: usize,
) -> Result<StabilityReport> {
    if basis == Basis::M {
        return monomial_report(seq, horizon, size_bound);
    }
    basis_report(seq, basis, horizon, size_bound, |_| None)
}

fn basis_report(
    seq: &SymFuncSequence,
    basis: Basis,
    horizon: usize,
    size_bound: usize,
    bound: impl Fn(&Partition) -> Option<usize>,
) -> Result<StabilityReport> {
    let mut entries = Vec::new();
    for mu in partitions_up_to(size_bound) {
        if mu.pad_threshold() > horizon {
            continue;
        }
        let obs = observed_range(seq, basis, &mu, horizon)?;
        entries.push(RangeEntry::new(mu.clone(), obs, bound(&mu)));
    }
    let w = weight(seq, basis, horizon)?;
    Ok(StabilityReport {
        label: seq.label().to_string(),
        basis,
        horizon,
        entries,
        observed_weight: w.weight,
        weight_horizon_limited: true,
        weight_bound: None,
        uniform: None,
    })
}

/// Checks every `F_n`, `n ≤ horizon`, for Schur positivity.
pub fn check_schur_positive(seq: &SymFuncSequence, horizon: usize) -> Result<()> {
    for n in 0..=horizon {
        if let Some(f) = seq.schur_term(n)? {
            for (lam, c) in f.terms() {
                if !c.is_nonnegative() {
                    return Err(Error::NotSchurPositive(format!(
                        "{}: coefficient of s{lam} at n = {n} is {c}",
                        seq.label()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// `max_{|μ| ≤ k} b(μ)` for the sequence's proven monomial bound `b`.
fn max_monomial_bound(seq: &SymFuncSequence, k: usize) -> Option<usize> {
    partitions_up_to(k).iter().map(|mu| seq.monomial_bound(mu)).try_fold(0, |acc, b| b.map(|b| acc.max(b)))
}

/// The Schur range at `λ` certified from monomial data:
/// `max(2|λ|, max_{|μ|≤|λ|} rg^m_μ)`, with the sequence's proven monomial
/// bounds standing in for `rg^m_μ`, and the improved bound without `2|λ|`.
/// Both are checked against the directly observed Schur range.
pub fn schur_range_from_monomial(
    seq: &SymFuncSequence,
    lam: &Partition,
    horizon: usize,
    weight_bound: Option<usize>,
) -> Result<RangeEntry> {
    check_schur_positive(seq, horizon)?;
    schur_entry(seq, lam, horizon, weight_bound)
}

fn schur_entry(
    seq: &SymFuncSequence,
    lam: &Partition,
    horizon: usize,
    weight_bound: Option<usize>,
) -> Result<RangeEntry> {
    let obs = observed_range(seq, Basis::S, lam, horizon)?;
    let w = weight_bound.or(seq.weight_bound());
    // beyond the weight the coefficient is zero for every n
    let (proven, improved) = match (w, max_monomial_bound(seq, lam.size())) {
        (Some(w), _) if lam.size() > w => (Some(0), Some(0)),
        (_, Some(m)) => (Some(m.max(2 * lam.size())), Some(m)),
        _ => (None, None),
    };
    let mut e = RangeEntry::new(lam.clone(), obs.clone(), proven);
    e.improved_bound = improved;
    e.improved_certified = improved.map(|b| obs.constant_from(b));
    Ok(e)
}

/// Schur ranges for every `|λ| ≤ w`, where `w` is the given or built-in weight
/// bound (or else the observed weight), plus the uniform range.
pub fn schur_report(seq: &SymFuncSequence, horizon: usize, weight_bound: Option<usize>) -> Result<StabilityReport> {
    check_schur_positive(seq, horizon)?;
    let observed = weight(seq, Basis::S, horizon)?;
    let bound = weight_bound.or(seq.weight_bound());
    let w = bound.unwrap_or(observed.weight);
    let mut entries = Vec::new();
    for lam in partitions_up_to(w) {
        if lam.pad_threshold() > horizon {
            return Err(Error::HorizonTooSmall { horizon, needed: lam.pad_threshold() });
        }
        entries.push(schur_entry(seq, &lam, horizon, bound)?);
    }
    let monomial = max_monomial_bound(seq, w);
    let proven = monomial.map(|m| m.max(2 * w));
    let observed_uniform = entries.iter().map(|e| e.observed_range).try_fold(0, |acc, r| r.map(|r| acc.max(r)));
    let weight_ok = bound.is_some_and(|b| observed.weight <= b);
    let all =
        |b: Option<usize>| weight_ok && b.is_some_and(|b| b <= horizon && observed_uniform.is_some_and(|o| o <= b));
    let uniform = UniformRange {
        proven_bound: proven,
        improved_bound: monomial,
        observed: observed_uniform,
        certified: all(proven),
        improved_certified: all(monomial),
    };
    Ok(StabilityReport {
        label: seq.label().to_string(),
        basis: Basis::S,
        horizon,
        entries,
        observed_weight: observed.weight,
        weight_horizon_limited: bound.is_none(),
        weight_bound: bound,
        uniform: Some(uniform),
    })
}

/// `rg^{p/z}_μ`: where the character value at cycle type `μ[n]` settles.
pub fn char_stability(seq: &SymFuncSequence, mu: &Partition, horizon: usize) -> Result<Observed<QtPoly>> {
    observed_range(seq, Basis::PZ, mu, horizon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::rat;
    use crate::stability::sequence::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn padded_schur_range_is_first_definition() {
        for lam in partitions_up_to(4) {
            let seq = padded_schur(&lam);
            let obs = observed_range(&seq, Basis::S, &lam, 12).unwrap();
            assert_eq!(obs.stable_from, Some(lam.pad_threshold()), "{lam}");
            assert_eq!(obs.value, QtPoly::one());
        }
    }

    #[test]
    fn alternating_is_unstable() {
        let obs = observed_range(&alternating_row(), Basis::S, &Partition::empty(), 9).unwrap();
        assert_eq!(obs.stable_from, None);
    }

    #[test]
    fn horizon_guard() {
        let e = observed_range(&zero(), Basis::S, &p(&[3]), 5).unwrap_err();
        assert_eq!(e, Error::HorizonTooSmall { horizon: 5, needed: 6 });
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&padded_schur(&p(&[2, 1])), Basis::S, 10).unwrap().weight, 3);
        assert_eq!(weight(&zero(), Basis::S, 10).unwrap().weight, 0);
        for (i, j) in [(1, 0), (1, 1), (2, 1)] {
            assert!(weight(&diagonal(i, j), Basis::S, 7).unwrap().weight <= i + j);
        }
    }

    #[test]
    fn weight_of_s_and_h_agree_and_m_and_p_agree() {
        for seq in [coinvariant(2), coinvariant(3), padded_h(&p(&[2, 1])), diagonal(1, 1)] {
            let ws = weight(&seq, Basis::S, 8).unwrap().weight;
            let wh = weight(&seq, Basis::H, 8).unwrap().weight;
            let wm = weight(&seq, Basis::M, 8).unwrap().weight;
            let wp = weight(&seq, Basis::P, 8).unwrap().weight;
            assert_eq!(ws, wh, "{}", seq.label());
            assert_eq!(wm, wp, "{}", seq.label());
        }
    }

    #[test]
    fn coinvariant_monomial_bounds() {
        let seq = coinvariant(3);
        let r = monomial_report(&seq, 12, 3).unwrap();
        assert!(r.all_certified(), "{}", r.to_table().to_text());
    }

    #[test]
    fn h_11_attains_stable_value_early() {
        // s-coefficient of (1,1)[n] in h_{(1,1)[n]} is stable from 3, while
        // the Schur bound gives 4
        let seq = padded_h(&p(&[1, 1]));
        let obs = observed_range(&seq, Basis::S, &p(&[1, 1]), 10).unwrap();
        assert_eq!(obs.stable_from, Some(3));
        assert_eq!(obs.value, QtPoly::one());
    }

    #[test]
    fn stab_n_examples() {
        // p/z → h at ((k),(k)): 1/2 at n = 2k, then 1
        for k in 1..=3 {
            let lam = Partition::row(k);
            let obs = coefficient_stab_n(Basis::PZ, Basis::H, &lam, &lam, 2 * k + 4).unwrap();
            assert_eq!(obs.stable_from, Some(2 * k + 1));
            assert_eq!(obs.value, rat(1));
        }
        let e = Partition::empty();
        assert_eq!(coefficient_stab_n(Basis::S, Basis::E, &e, &e, 9).unwrap().stable_from, None);
    }

    #[test]
    fn fixture_v_characters_and_schur() {
        let v = fixture_v();
        for mu in partitions_up_to(2) {
            let c4 = v.coefficient(4, Basis::PZ, &mu).unwrap();
            for n in 5..=8 {
                assert_eq!(v.coefficient(n, Basis::PZ, &mu).unwrap(), c4, "{mu} n={n}");
            }
        }
        assert_eq!(v.coefficient(4, Basis::S, &p(&[2])).unwrap(), QtPoly::one());
        assert!(v.coefficient(5, Basis::S, &p(&[2])).unwrap().is_zero());
        let r = schur_report(&v, 9, None).unwrap();
        assert_eq!(r.uniform.as_ref().unwrap().observed, Some(5));
    }

    #[test]
    fn report_renders() {
        let r = schur_report(&coinvariant(2), 9, None).unwrap();
        let json = r.to_json();
        assert_eq!(json["basis"], "s");
        assert!(r.to_table().to_text().contains("uniform"));
        let u = r.uniform.unwrap();
        assert_eq!(u.proven_bound, Some(4));
        assert!(u.certified);
    }
}
