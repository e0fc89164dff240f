//! Integer partitions, compositions and Young diagram cells.
//!
//! Diagrams use French convention: row 1 is the bottom (longest) row, and
//! cells are addressed as `(row, col)` with both coordinates starting at 1.
//!
//! The padding operation `λ[n] = (n - |λ|, λ1, λ2, ...)` is the bridge between
//! a fixed partition `λ` and the sequence of partitions of growing `n` used by
//! the stability analysis.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so structural equality is
/// equality of partitions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`, the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Smallest `n` for which `λ[n]` is a partition: `|λ| + λ1`.
    pub fn pad_threshold(&self) -> usize {
        self.size() + self.first()
    }

    /// `λ[n]`, or `None` when `n < |λ| + λ1`.
    pub fn pad(&self, n: usize) -> Option<Partition> {
        if n < self.pad_threshold() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        let head = n - self.size();
        if head > 0 {
            parts.push(head);
        }
        parts.extend_from_slice(&self.parts);
        Some(Partition { parts })
    }

    /// Inverse of [`Partition::pad`]: drops the first part.
    pub fn unpad(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// Multiplicity `m_i` of each part size, indexed by size (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`
    pub fn z(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                acc *= BigUint::from(i) * BigUint::from(k);
            }
        }
        acc
    }

    /// Number of distinct orderings of the parts: `l(λ)! / Π m_i!`.
    pub fn rearrangement_count(&self) -> BigUint {
        let mut num = factorial(self.len());
        for &m in self.multiplicities().iter().skip(1) {
            num /= factorial(m);
        }
        num
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.first());
        for c in 1..=self.first() {
            parts.push(self.parts.iter().take_while(|&&p| p >= c).count());
        }
        Partition { parts }
    }

    /// Cells in row-major order, bottom row first.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                out.push(Cell { row: r + 1, col: c });
            }
        }
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.part(cell.row - 1) >= cell.col
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains_cell(cell) {
            Ok(())
        } else {
            Err(Error::CellOutOfDiagram { row: cell.row, col: cell.col, shape: self.to_string() })
        }
    }

    /// Cells strictly to the right in the same row.
    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.part(cell.row - 1) - cell.col)
    }

    /// Cells strictly above in the same column.
    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        let height = self.parts.iter().take_while(|&&p| p >= cell.col).count();
        Ok(height - cell.row)
    }

    /// Cells strictly to the left in the same row.
    pub fn coarm(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(cell.col - 1)
    }

    /// Cells strictly below in the same column.
    pub fn coleg(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(cell.row - 1)
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm(cell)? + self.leg(cell)? + 1)
    }

    /// Dominance order `self ⊵ other` (same size required for `true`).
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Containment of diagrams `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Removes one part equal to `k`, if present.
    pub fn remove_part(&self, k: usize) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// All distinct sub-multisets of the parts.
    pub fn sub_multisets(&self) -> Vec<Partition> {
        let mult = self.multiplicities();
        let sizes: Vec<usize> = (1..mult.len()).rev().filter(|&i| mult[i] > 0).collect();
        let mut out = vec![Vec::new()];
        for &s in &sizes {
            let mut next = Vec::new();
            for base in &out {
                for k in 0..=mult[s] {
                    let mut v: Vec<usize> = base.clone();
                    v.extend(std::iter::repeat_n(s, k));
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(|parts| Partition { parts }).collect()
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Canonical order: by size, then reverse lexicographic within a size.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_bracketed(s)?;
        Partition::new(parts)
    }
}

/// Parses `[a,b,c]` (whitespace tolerated) into a vector.
pub(crate) fn parse_bracketed(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..], got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}"))))
        .collect()
}

impl From<&[usize]> for Partition {
    /// Panics if the slice is not a partition; intended for literals.
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("not a partition")
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec()).expect("not a partition")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A cell `(row, col)` of a diagram, 1-based, row 1 at the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// A sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition obtained by sorting.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Partition { parts: self.parts.clone() };
        fmt::Display::fmt(&p, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_bracketed(s)?)
    }
}

/// Partitions of `n` in reverse lexicographic order, starting with `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    PartitionIter::new(n).collect()
}

/// All partitions of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Iterator over partitions of `n` in reverse lexicographic order.
pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl PartitionIter {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        PartitionIter { next: Some(first) }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // successor: find the last part > 1, decrement it, refill greedily
        let mut v = cur.clone();
        let mut ones = 0;
        while v.last() == Some(&1) {
            v.pop();
            ones += 1;
        }
        if let Some(last) = v.pop() {
            let k = last - 1;
            let mut rest = ones + 1;
            v.push(k);
            while rest > 0 {
                let take = rest.min(k);
                v.push(take);
                rest -= take;
            }
            self.next = Some(v);
        }
        Some(Partition { parts: cur })
    }
}

/// All compositions of `n`, ordered lexicographically from the largest first part.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition { parts: prefix.clone() });
            return;
        }
        for k in (1..=n).rev() {
            prefix.push(k);
            go(n - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    // brute force: all weakly decreasing sequences, sorted descending lexicographically
    fn oracle_partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(n: usize, max: usize, pre: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(pre.clone());
                return;
            }
            for k in 1..=n.min(max) {
                pre.push(k);
                go(n - k, k, pre, out);
                pre.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    #[test]
    fn pad_examples() {
        assert_eq!(p(&[2, 1]).pad(6), Some(p(&[3, 2, 1])));
        assert_eq!(p(&[2, 1]).pad(4), None);
        assert_eq!(p(&[2, 1]).pad(5), Some(p(&[2, 2, 1])));
        assert_eq!(Partition::empty().pad(3), Some(p(&[3])));
        assert_eq!(Partition::empty().pad(0), Some(Partition::empty()));
        assert_eq!(p(&[1]).pad(2), Some(p(&[1, 1])));
    }

    #[test]
    fn z_examples() {
        assert_eq!(p(&[2, 2, 1]).z(), BigUint::from(8u32));
        assert_eq!(Partition::empty().z(), BigUint::from(1u32));
        assert_eq!(p(&[1, 1, 1]).z(), BigUint::from(6u32));
        assert_eq!(p(&[3]).z(), BigUint::from(3u32));
    }

    #[test]
    fn rearrangements() {
        assert_eq!(p(&[2, 1, 1]).rearrangement_count(), BigUint::from(3u32));
        assert_eq!(Partition::empty().rearrangement_count(), BigUint::from(1u32));
        assert_eq!(p(&[3, 2, 1]).rearrangement_count(), BigUint::from(6u32));
    }

    #[test]
    fn cells_and_statistics() {
        let lam = p(&[3, 2]);
        assert_eq!(lam.coleg(Cell::new(2, 1)).unwrap(), 1);
        assert_eq!(lam.coarm(Cell::new(2, 1)).unwrap(), 0);
        assert_eq!(lam.leg(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(lam.leg(Cell::new(1, 3)).unwrap(), 0);
        assert_eq!(lam.arm(Cell::new(1, 1)).unwrap(), 2);
        assert_eq!(lam.hook_length(Cell::new(1, 1)).unwrap(), 4);
        assert!(lam.coleg(Cell::new(2, 3)).is_err());
        assert_eq!(lam.cells().len(), 5);
    }

    #[test]
    fn enumeration_order() {
        let got: Vec<Vec<usize>> = partitions_of(5).into_iter().map(|x| x.into_parts()).collect();
        assert_eq!(
            got,
            vec![vec![5], vec![4, 1], vec![3, 2], vec![3, 1, 1], vec![2, 2, 1], vec![2, 1, 1, 1], vec![1, 1, 1, 1, 1]]
        );
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        for n in 0..=12 {
            let got: Vec<Vec<usize>> = partitions_of(n).into_iter().map(|x| x.into_parts()).collect();
            assert_eq!(got, oracle_partitions(n), "n = {n}");
        }
    }

    #[test]
    fn canonical_ord_matches_enumeration() {
        let all = partitions_up_to(8);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn text_round_trip() {
        for lam in partitions_up_to(6) {
            let s = lam.to_string();
            assert_eq!(s.parse::<Partition>().unwrap(), lam);
        }
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [ 3, 1 ] ".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance_small() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
    }

    #[test]
    fn sub_multisets_count() {
        // (2,2,1): choose 0..2 twos and 0..1 ones
        assert_eq!(p(&[2, 2, 1]).sub_multisets().len(), 6);
    }

    #[test]
    fn compositions_count() {
        for n in 1..=8 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1..=max, 0..=max).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn pad_unpad_inverse(lam in arb_partition(6), extra in 0usize..6) {
            let n = lam.pad_threshold() + extra;
            let padded = lam.pad(n).unwrap();
            prop_assert_eq!(padded.size(), n);
            prop_assert_eq!(padded.unpad(), lam);
        }

        #[test]
        fn conjugate_involution(lam in arb_partition(7)) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn z_counts_centralizer(lam in arb_partition(5)) {
            // n!/z_λ is the size of the conjugacy class: sum over λ ⊢ n is n!
            let n = lam.size();
            let total: BigUint = partitions_of(n).iter().map(|m| factorial(n) / m.z()).sum();
            prop_assert_eq!(total, factorial(n));
        }

        #[test]
        fn hook_sum_over_cells(lam in arb_partition(6)) {
            for c in lam.cells() {
                let h = lam.hook_length(c).unwrap();
                let conj = lam.conjugate();
                let swapped = Cell::new(c.col, c.row);
                prop_assert_eq!(conj.hook_length(swapped).unwrap(), h);
            }
        }
    }
}
