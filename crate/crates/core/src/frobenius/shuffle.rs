//! Labeled Dyck paths and the shuffle formula for `⟨∇e_n, h_α⟩`.
//!
//! A path of size `n` is a word in `N`/`E` from `(0,0)` to `(n,n)` staying
//! weakly above the diagonal. North step `i` (counted from 0) occupies row
//! `i`; the cell to its right lies on diagonal `a_i = i - x_i`, where `x_i` is
//! the number of east steps before it. Labels are attached to north steps,
//! must be a permutation of `1..=n`, and increase up each column run.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits;
use crate::matrix::Basis;
use crate::partition::{partitions_of, Composition, Partition};
use crate::qt::{rat, QtPoly, Rational};
use crate::symfunc::SymFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    N,
    E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDyckPath {
    steps: Vec<Step>,
    labels: Vec<usize>,
}

impl LabeledDyckPath {
    pub fn new(steps: Vec<Step>, labels: Vec<usize>) -> Result<Self> {
        let n = steps.iter().filter(|&&s| s == Step::N).count();
        if steps.len() != 2 * n {
            return Err(Error::MalformedPath("unequal north and east counts".into()));
        }
        let mut height = 0i64;
        for s in &steps {
            height += if *s == Step::N { 1 } else { -1 };
            if height < 0 {
                return Err(Error::MalformedPath("path dips below the diagonal".into()));
            }
        }
        if labels.len() != n {
            return Err(Error::MalformedPath(format!("{} labels for {n} north steps", labels.len())));
        }
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n || seen[l] {
                return Err(Error::MalformedPath(format!("labels {labels:?} are not a permutation of 1..={n}")));
            }
            seen[l] = true;
        }
        let path = LabeledDyckPath { steps, labels };
        let a = path.area_sequence();
        for i in 1..n {
            if a[i] == a[i - 1] + 1 && path.labels[i] < path.labels[i - 1] {
                return Err(Error::MalformedPath("labels decrease up a column".into()));
            }
        }
        Ok(path)
    }

    /// From an `N`/`E` string and labels listed bottom to top.
    pub fn parse(steps: &str, labels: &[usize]) -> Result<Self> {
        let steps = steps
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                other => Err(Error::MalformedPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledDyckPath::new(steps, labels.to_vec())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Labels of the north steps, bottom to top.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `a_i`: the diagonal of the cell right of north step `i`.
    pub fn area_sequence(&self) -> Vec<usize> {
        let mut east = 0;
        let mut out = Vec::with_capacity(self.size());
        for s in &self.steps {
            match s {
                Step::N => out.push(out.len() - east),
                Step::E => east += 1,
            }
        }
        out
    }

    /// Full cells between the path and the diagonal.
    pub fn area(&self) -> usize {
        self.area_sequence().iter().sum()
    }

    /// Label pairs `(smaller, larger)` counted by dinv.
    pub fn dinv_pairs(&self) -> Vec<(usize, usize)> {
        let a = self.area_sequence();
        let l = &self.labels;
        let mut out = Vec::new();
        for j in 0..a.len() {
            for i in 0..j {
                if dinv_pair(a[i], l[i], a[j], l[j]) {
                    out.push((l[i].min(l[j]), l[i].max(l[j])));
                }
            }
        }
        out
    }

    pub fn dinv(&self) -> usize {
        self.dinv_pairs().len()
    }

    /// Labels read along diagonals from the highest down, each southwest.
    pub fn reading_word(&self) -> Vec<usize> {
        reading_word(&self.area_sequence(), &self.labels)
    }

    /// Prepends `NE` carrying the new label `n + 1`.
    pub fn psi(&self) -> LabeledDyckPath {
        let mut steps = vec![Step::N, Step::E];
        steps.extend_from_slice(&self.steps);
        let mut labels = vec![self.size() + 1];
        labels.extend_from_slice(&self.labels);
        LabeledDyckPath { steps, labels }
    }
}

impl fmt::Display for LabeledDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::N { 'N' } else { 'E' })?;
        }
        write!(f, " {:?}", self.labels)
    }
}

impl FromStr for LabeledDyckPath {
    type Err = Error;

    /// `NNEE [2,1]`-style text, labels bottom to top.
    fn from_str(s: &str) -> Result<Self> {
        let (steps, labels) = s
            .trim()
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::MalformedPath(format!("expected `STEPS [labels]`, got {s:?}")))?;
        let labels = crate::partition::parse_bracketed(labels)?;
        LabeledDyckPath::parse(steps, &labels)
    }
}

/// Row `i < j`: either the same diagonal with the larger label further north,
/// or `j` one diagonal lower with the larger label further south (at `i`).
fn dinv_pair(ai: usize, li: usize, aj: usize, lj: usize) -> bool {
    (ai == aj && li < lj) || (ai == aj + 1 && li > lj)
}

fn reading_word(a: &[usize], labels: &[usize]) -> Vec<usize> {
    let top = a.iter().copied().max().unwrap_or(0);
    let mut out = Vec::with_capacity(a.len());
    for d in (0..=top).rev() {
        for i in (0..a.len()).rev() {
            if a[i] == d {
                out.push(labels[i]);
            }
        }
    }
    out
}

/// Whether `word` is a shuffle of the increasing runs `1..α1`, `α1+1..α1+α2`, ...
pub fn is_alpha_shuffle(word: &[usize], alpha: &[usize]) -> bool {
    let n: usize = alpha.iter().sum();
    if word.len() != n {
        return false;
    }
    let mut block = vec![0usize; n + 1];
    let mut start = 1;
    for (b, &len) in alpha.iter().enumerate() {
        for v in start..start + len {
            block[v] = b;
        }
        start += len;
    }
    let mut last = vec![0usize; alpha.len()];
    for &v in word {
        let b = block[v];
        if v < last[b] {
            return false;
        }
        last[b] = v;
    }
    true
}

/// One enumerated path: area sequence, labels, area, dinv.
pub struct PathRecord<'a> {
    pub area_seq: &'a [usize],
    pub labels: &'a [usize],
    pub area: usize,
    pub dinv: usize,
}

impl PathRecord<'_> {
    pub fn reading_word(&self) -> Vec<usize> {
        reading_word(self.area_seq, self.labels)
    }
}

/// Visits every labeled Dyck path of size `n` with `area ≤ max_area` and
/// `dinv ≤ max_dinv`. Area sequences are generated first (pruned on area),
/// then labels row by row with dinv accumulated as each row is placed.
pub fn for_each_labeled_path(n: usize, max_area: usize, max_dinv: usize, visit: &mut dyn FnMut(&PathRecord)) {
    let mut a = Vec::with_capacity(n);
    area_sequences(n, max_area, &mut a, 0, &mut |seq, area| {
        let mut labels = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        label_rows(seq, &mut labels, &mut used, 0, max_dinv, &mut |labels, dinv| {
            visit(&PathRecord { area_seq: seq, labels, area, dinv });
        });
    });
}

fn area_sequences(n: usize, max_area: usize, a: &mut Vec<usize>, area: usize, f: &mut dyn FnMut(&[usize], usize)) {
    if a.len() == n {
        f(a, area);
        return;
    }
    let hi = a.last().map_or(0, |&x| x + 1);
    for v in 0..=hi {
        if area + v > max_area {
            break;
        }
        a.push(v);
        area_sequences(n, max_area, a, area + v, f);
        a.pop();
    }
}

fn label_rows(
    a: &[usize],
    labels: &mut Vec<usize>,
    used: &mut [bool],
    dinv: usize,
    max_dinv: usize,
    f: &mut dyn FnMut(&[usize], usize),
) {
    let j = labels.len();
    let n = a.len();
    if j == n {
        f(labels, dinv);
        return;
    }
    let lower = if j > 0 && a[j] == a[j - 1] + 1 { labels[j - 1] + 1 } else { 1 };
    for l in lower..=n {
        if used[l] {
            continue;
        }
        let added = (0..j).filter(|&i| dinv_pair(a[i], labels[i], a[j], l)).count();
        if dinv + added > max_dinv {
            continue;
        }
        used[l] = true;
        labels.push(l);
        label_rows(a, labels, used, dinv + added, max_dinv, f);
        labels.pop();
        used[l] = false;
    }
}

/// `⟨∇e_n, h_α⟩ = Σ q^{dinv} t^{area}` over paths whose reading word is an
/// `α`-shuffle. Subject to the enumeration cap.
pub fn shuffle_h_polynomial(alpha: &Composition) -> Result<QtPoly> {
    let n = alpha.size();
    limits::check_enumeration(n)?;
    let max = n * (n.saturating_sub(1)) / 2;
    let mut out = QtPoly::zero();
    let one = rat(1);
    for_each_labeled_path(n, max, max, &mut |p| {
        if is_alpha_shuffle(&p.reading_word(), alpha.parts()) {
            out.add_term(p.dinv as i32, p.area as i32, &one);
        }
    });
    Ok(out)
}

/// `[q^i t^j]⟨∇e_n, h_α⟩`. Only paths with `dinv ≤ i`, `area ≤ j` are visited,
/// so the enumeration cap is not applied.
pub fn shuffle_h_coefficient(alpha: &Composition, i: usize, j: usize) -> Rational {
    let n = alpha.size();
    let mut count = 0u64;
    for_each_labeled_path(n, j, i, &mut |p| {
        if p.dinv == i && p.area == j && is_alpha_shuffle(&p.reading_word(), alpha.parts()) {
            count += 1;
        }
    });
    rat(count as i64)
}

/// `α^{(n)} = (μ1, ..., μl, n - |μ|)`.
pub fn alpha_padded(mu: &Partition, n: usize) -> Result<Composition> {
    if n < mu.size() {
        return Err(Error::SizeMismatch(format!("n = {n} < |{mu}|")));
    }
    let mut parts = mu.parts().to_vec();
    if n > mu.size() {
        parts.push(n - mu.size());
    }
    Composition::new(parts)
}

/// `[DR_n]_{(i,j)}` in the monomial basis: the coefficient of `m_κ` is
/// `[q^i t^j]⟨∇e_n, h_κ⟩`. One pruned enumeration serves every `κ`.
pub fn dr_component(n: usize, i: usize, j: usize) -> SymFunc {
    let parts = partitions_of(n);
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for_each_labeled_path(n, j, i, &mut |p| {
        if p.dinv != i || p.area != j {
            return;
        }
        let w = p.reading_word();
        for kappa in &parts {
            if is_alpha_shuffle(&w, kappa.parts()) {
                *counts.entry(kappa.clone()).or_default() += 1;
            }
        }
    });
    SymFunc::from_terms(n, Basis::M, counts.into_iter().map(|(k, c)| (k, QtPoly::integer(c)))).expect("degree n")
}

/// The full `∇e_n` in the monomial basis. Subject to the enumeration cap.
pub fn nabla_en(n: usize) -> Result<SymFunc> {
    limits::check_enumeration(n)?;
    let parts = partitions_of(n);
    let max = n * n.saturating_sub(1) / 2;
    let mut acc: BTreeMap<Partition, QtPoly> = BTreeMap::new();
    let one = rat(1);
    for_each_labeled_path(n, max, max, &mut |p| {
        let w = p.reading_word();
        for kappa in &parts {
            if is_alpha_shuffle(&w, kappa.parts()) {
                acc.entry(kappa.clone()).or_default().add_term(p.dinv as i32, p.area as i32, &one);
            }
        }
    });
    SymFunc::from_terms(n, Basis::M, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::compositions_of;

    fn fig3() -> LabeledDyckPath {
        LabeledDyckPath::parse("NNEENNENEENE", &[2, 3, 1, 4, 5, 6]).unwrap()
    }

    // all labelings by permutations, checked against the column condition
    fn oracle_polynomial(alpha: &[usize]) -> QtPoly {
        let n: usize = alpha.iter().sum();
        let mut out = QtPoly::zero();
        let mut seqs = Vec::new();
        area_sequences(n, usize::MAX, &mut Vec::new(), 0, &mut |s, _| seqs.push(s.to_vec()));
        let mut perm: Vec<usize> = (1..=n).collect();
        fn perms(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == p.len() {
                out.push(p.clone());
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                perms(k + 1, p, out);
                p.swap(k, i);
            }
        }
        let mut all = Vec::new();
        perms(0, &mut perm, &mut all);
        for a in &seqs {
            let mut steps = Vec::new();
            // rebuild steps from the area sequence
            let mut x = 0;
            for (i, &ai) in a.iter().enumerate() {
                let target_x = i - ai;
                while x < target_x {
                    steps.push(Step::E);
                    x += 1;
                }
                steps.push(Step::N);
            }
            while x < n {
                steps.push(Step::E);
                x += 1;
            }
            for labels in &all {
                if let Ok(p) = LabeledDyckPath::new(steps.clone(), labels.clone()) {
                    // brute-force dinv straight from the definition
                    let aa = p.area_sequence();
                    let mut d = 0;
                    for i in 0..n {
                        for j in i + 1..n {
                            if aa[i] == aa[j] && labels[i] < labels[j] {
                                d += 1;
                            }
                            if aa[i] == aa[j] + 1 && labels[i] > labels[j] {
                                d += 1;
                            }
                        }
                    }
                    if is_alpha_shuffle(&p.reading_word(), alpha) {
                        out.add_term(d, p.area() as i32, &rat(1));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn fig3_statistics() {
        let p = fig3();
        assert_eq!(p.reading_word(), vec![5, 4, 3, 6, 1, 2]);
        assert_eq!(p.area(), 3);
        let pairs = p.dinv_pairs();
        for pair in [(1, 6), (3, 4), (4, 5), (3, 5), (1, 3)] {
            assert!(pairs.contains(&pair), "{pair:?} missing from {pairs:?}");
        }
        // (2,6): both on the main diagonal, 6 is further north
        assert!(pairs.contains(&(2, 6)));
        assert_eq!(p.dinv(), 6);
        for alpha in [vec![2, 1, 1, 2], vec![1, 1, 1, 1, 2], vec![2, 1, 1, 1, 1], vec![1; 6]] {
            assert!(is_alpha_shuffle(&p.reading_word(), &alpha), "{alpha:?}");
        }
        assert!(!is_alpha_shuffle(&p.reading_word(), &[2, 2, 2]));
    }

    #[test]
    fn psi_preserves_statistics() {
        let p = fig3();
        let q = p.psi();
        assert_eq!(q.labels()[0], 7);
        assert_eq!(q.area(), p.area());
        assert_eq!(q.dinv(), p.dinv());
        let mut w = p.reading_word();
        w.push(7);
        assert_eq!(q.reading_word(), w);
        assert!(LabeledDyckPath::new(q.steps().to_vec(), q.labels().to_vec()).is_ok());
    }

    #[test]
    fn validation() {
        assert!(LabeledDyckPath::parse("EN", &[1]).is_err());
        assert!(LabeledDyckPath::parse("NNEE", &[2, 1]).is_err());
        assert!(LabeledDyckPath::parse("NNEE", &[1, 2]).is_ok());
        assert!(LabeledDyckPath::parse("NENE", &[2, 1]).is_ok());
        assert!(LabeledDyckPath::parse("NENE", &[1, 1]).is_err());
        assert!("NENE [2,1]".parse::<LabeledDyckPath>().is_ok());
    }

    #[test]
    fn pruned_enumeration_matches_brute_force() {
        for n in 1..=5 {
            for alpha in compositions_of(n) {
                assert_eq!(shuffle_h_polynomial(&alpha).unwrap(), oracle_polynomial(alpha.parts()), "{alpha}");
            }
        }
    }

    #[test]
    fn small_values() {
        // ∇e_2 = s_2 + (q + t) s_11: ⟨·, h_11⟩ = 2 + q + t... plus the s_2 part
        let a = Composition::new(vec![1, 1]).unwrap();
        assert_eq!(shuffle_h_polynomial(&a).unwrap(), "1 + t + q".parse().unwrap());
        let b = Composition::new(vec![2]).unwrap();
        assert_eq!(shuffle_h_polynomial(&b).unwrap(), QtPoly::one());
    }

    #[test]
    fn coefficient_matches_polynomial() {
        let alpha = Composition::new(vec![2, 1, 2]).unwrap();
        let poly = shuffle_h_polynomial(&alpha).unwrap();
        for (i, j, c) in poly.terms() {
            assert_eq!(&shuffle_h_coefficient(&alpha, i as usize, j as usize), c);
        }
    }

    #[test]
    fn dr_component_matches_full_expansion() {
        let full = nabla_en(4).unwrap();
        for (i, j) in [(0, 0), (1, 0), (0, 2), (1, 1), (2, 1)] {
            let comp = dr_component(4, i, j);
            assert_eq!(
                comp.terms().collect::<Vec<_>>(),
                full.component(i as i32, j as i32).terms().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn cap_enforced() {
        crate::limits::with_limits(crate::limits::Limits { degree: 12, enumeration: 3 }, || {
            assert!(shuffle_h_polynomial(&Composition::new(vec![4]).unwrap()).is_err());
        });
    }
}
