//! Combinatorial coefficients behind the change-of-basis matrices.
//!
//! Every function here is memoized in a process-wide table, so repeated
//! lookups across degrees are cheap. Counts are exact; overflow of the
//! 128-bit accumulators is treated as an invariant violation.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::matrix::{change_of_basis_matrix, Basis};
use crate::partition::{partitions_of, Partition};
use crate::qt::{rat, rat_big, Rational};

/// A concurrent memo table.
pub(crate) struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, V>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { map: OnceLock::new() }
    }

    fn table(&self) -> &RwLock<HashMap<K, V>> {
        self.map.get_or_init(|| RwLock::new(HashMap::new()))
    }

    pub(crate) fn get_or(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.table().read().get(&key) {
            return v.clone();
        }
        let v = f();
        self.table().write().insert(key, v.clone());
        v
    }
}

fn checked_add(a: u128, b: u128) -> u128 {
    a.checked_add(b).expect("coefficient overflow")
}

fn checked_mul(a: u128, b: u128) -> u128 {
    a.checked_mul(b).expect("coefficient overflow")
}

// ---- Kostka numbers ----

/// Every `ν ⊆ λ` with `λ/ν` a horizontal strip of size `k`.
pub fn remove_horizontal_strips(lam: &Partition, k: usize) -> Vec<Partition> {
    fn go(lam: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lam.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let lower = lam.get(i + 1).copied().unwrap_or(0);
        let max_remove = (lam[i] - lower).min(left);
        for r in 0..=max_remove {
            cur.push(lam[i] - r);
            go(lam, i + 1, left - r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lam.parts(), 0, k, &mut Vec::new(), &mut out);
    out
}

/// Every `ν ⊇ λ` with `ν/λ` a horizontal strip of size `k` (Pieri rule).
pub fn add_horizontal_strips(lam: &Partition, k: usize) -> Vec<Partition> {
    let l = lam.len();
    fn go(lam: &Partition, i: usize, l: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > l {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let base = lam.part(i);
        let max_add = if i == 0 { left } else { (lam.part(i - 1) - base).min(left) };
        for a in 0..=max_add {
            cur.push(base + a);
            go(lam, i + 1, l, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lam, 0, l, k, &mut Vec::new(), &mut out);
    out
}

static KOSTKA: Memo<(Partition, Partition), u128> = Memo::new();

/// `K_{λ,μ}`: semistandard tableaux of shape `λ` and content `μ`.
///
/// Peels off the horizontal strip holding the largest letter; the content
/// order does not matter, so the smallest part of `μ` is removed first.
pub fn kostka(lam: &Partition, mu: &Partition) -> u128 {
    if lam.size() != mu.size() {
        return 0;
    }
    kostka_rec(lam, mu)
}

fn kostka_rec(lam: &Partition, mu: &Partition) -> u128 {
    if mu.is_empty() {
        return u128::from(lam.is_empty());
    }
    if !lam.dominates(mu) {
        return 0;
    }
    if mu.len() == 1 || lam.len() == 1 {
        return 1;
    }
    KOSTKA.get_or((lam.clone(), mu.clone()), || {
        let parts = mu.parts();
        let k = parts[parts.len() - 1];
        let rest = Partition::new(parts[..parts.len() - 1].to_vec()).expect("prefix");
        remove_horizontal_strips(lam, k).iter().fold(0u128, |acc, nu| checked_add(acc, kostka_rec(nu, &rest)))
    })
}

/// `⟨s_λ h_{|μ|-|λ|}, h_μ⟩`, the eventual value of `K_{λ[n],μ[n]}`.
pub fn stable_kostka(lam: &Partition, mu: &Partition) -> u128 {
    if lam.size() > mu.size() {
        return 0;
    }
    add_horizontal_strips(lam, mu.size() - lam.size()).iter().fold(0u128, |acc, nu| checked_add(acc, kostka(nu, mu)))
}

// ---- inverse Kostka ----

/// `K^{-1}_{μ,λ}`, the coefficient of `s_λ` in `m_μ`, read from the inverted
/// Kostka matrix (the primary backend).
pub fn inverse_kostka(mu: &Partition, lam: &Partition) -> Result<Rational> {
    if mu.size() != lam.size() {
        return Err(Error::SizeMismatch(format!("{mu} vs {lam}")));
    }
    let m = change_of_basis_matrix(mu.size(), Basis::M, Basis::S)?;
    Ok(m.entry(mu, lam).clone())
}

static SRHT: Memo<(Partition, Partition), i128> = Memo::new();

/// `K^{-1}_{μ,λ}` as a signed count of special rim hook tabloids of shape `λ`
/// whose hook lengths are the parts of `μ`.
///
/// Each special rim hook meets the first column. Removing one from the
/// bottom of the first column, the hook starting in row `r` has length
/// `λ_r + l(λ) - r` and sign `(-1)^{l(λ) - r}`.
pub fn inverse_kostka_srht(mu: &Partition, lam: &Partition) -> i128 {
    if mu.size() != lam.size() {
        return 0;
    }
    srht_rec(lam, mu)
}

fn srht_rec(lam: &Partition, content: &Partition) -> i128 {
    if lam.is_empty() {
        return i128::from(content.is_empty());
    }
    SRHT.get_or((lam.clone(), content.clone()), || {
        let l = lam.len();
        let parts = lam.parts();
        let mut total = 0i128;
        for r in 0..l {
            let len = parts[r] + (l - 1 - r);
            let Some(rest_content) = content.remove_part(len) else { continue };
            let mut nu: Vec<usize> = parts[..r].to_vec();
            nu.extend(parts[r + 1..].iter().map(|&p| p - 1));
            let nu = Partition::from_unsorted(nu);
            let sign = if (l - 1 - r).is_multiple_of(2) { 1 } else { -1 };
            total += sign * srht_rec(&nu, &rest_content);
        }
        total
    })
}

// ---- characters ----

static CHARACTER: Memo<(Partition, Partition), i128> = Memo::new();

/// `χ^λ_μ` by Murnaghan–Nakayama, removing the largest part of `μ` first.
pub fn character(lam: &Partition, mu: &Partition) -> i128 {
    if lam.size() != mu.size() {
        return 0;
    }
    character_rec(lam, mu)
}

fn character_rec(lam: &Partition, mu: &Partition) -> i128 {
    if mu.is_empty() {
        return i128::from(lam.is_empty());
    }
    if mu.parts().iter().all(|&p| p == 1) {
        return i128::try_from(standard_tableaux_count(lam)).expect("fits");
    }
    CHARACTER.get_or((lam.clone(), mu.clone()), || {
        let k = mu.first();
        let rest = mu.unpad();
        rim_hooks_removed(lam, k)
            .into_iter()
            .map(|(nu, height)| {
                let s = if height % 2 == 0 { 1 } else { -1 };
                s * character_rec(&nu, &rest)
            })
            .sum()
    })
}

/// All `(λ minus a k-rim-hook, leg length)` via beta-numbers.
pub fn rim_hooks_removed(lam: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let l = lam.len();
    let beta: Vec<usize> = (0..l).map(|i| lam.part(i) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let nb = b - k;
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut newbeta = beta.clone();
        newbeta[idx] = nb;
        newbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = newbeta.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).collect();
        out.push((Partition::from_unsorted(parts), height));
    }
    out
}

/// `f^λ` by the hook length formula.
pub fn standard_tableaux_count(lam: &Partition) -> u128 {
    let n = lam.size();
    let mut num = crate::partition::factorial(n);
    let mut den = num_bigint::BigUint::one();
    for c in lam.cells() {
        den *= num_bigint::BigUint::from(lam.hook_length(c).expect("cell"));
    }
    num /= den;
    u128::try_from(num).expect("f^λ overflow")
}

// ---- bricks ----

static BRICKS: Memo<(Vec<usize>, Partition), (u128, u128)> = Memo::new();

/// `|B_{μ,λ}|`: tilings of the rows of `λ` by ordered rows of bricks whose
/// lengths, as a multiset, are the parts of `μ`.
pub fn brick_count(content: &Partition, shape: &Partition) -> u128 {
    bricks(content, shape).0
}

/// `w(B_{μ,λ})`: sum over those tilings of the product, over rows, of the
/// length of the rightmost brick.
pub fn brick_weight(content: &Partition, shape: &Partition) -> u128 {
    bricks(content, shape).1
}

fn bricks(content: &Partition, shape: &Partition) -> (u128, u128) {
    if content.size() != shape.size() {
        return (0, 0);
    }
    bricks_rec(shape.parts(), content)
}

fn bricks_rec(rows: &[usize], content: &Partition) -> (u128, u128) {
    if rows.is_empty() {
        let e = u128::from(content.is_empty());
        return (e, e);
    }
    BRICKS.get_or((rows.to_vec(), content.clone()), || {
        let mut count = 0u128;
        let mut weight = 0u128;
        // fill row 0 left to right; `last` is the most recent brick
        fn fill(left: usize, last: usize, avail: &Partition, rows: &[usize], count: &mut u128, weight: &mut u128) {
            if left == 0 {
                let (c, w) = bricks_rec(&rows[1..], avail);
                *count = checked_add(*count, c);
                *weight = checked_add(*weight, checked_mul(w, last as u128));
                return;
            }
            let mut seen = Vec::new();
            for &b in avail.parts() {
                if b > left || seen.contains(&b) {
                    continue;
                }
                seen.push(b);
                let rest = avail.remove_part(b).expect("present");
                fill(left - b, b, &rest, rows, count, weight);
            }
        }
        fill(rows[0], 0, content, rows, &mut count, &mut weight);
        (count, weight)
    })
}

// ---- ordered bricks ----

static ORDERED: Memo<(Vec<usize>, Vec<usize>), u128> = Memo::new();

/// `|OB_{μ,λ}|`: maps from the index-distinguished parts of `μ` to those of
/// `λ` such that the parts sent to each `λ_j` sum to `λ_j`. This is the
/// coefficient of `m_λ` in `p_μ`.
pub fn ordered_brick_count(mu: &Partition, lam: &Partition) -> u128 {
    if mu.size() != lam.size() {
        return 0;
    }
    ordered_rec(mu.parts(), lam.parts().to_vec())
}

fn ordered_rec(items: &[usize], mut caps: Vec<usize>) -> u128 {
    if items.is_empty() {
        return u128::from(caps.iter().all(|&c| c == 0));
    }
    caps.sort_unstable();
    ORDERED.get_or((items.to_vec(), caps.clone()), || {
        let x = items[0];
        let mut total = 0u128;
        let mut j = 0;
        while j < caps.len() {
            let c = caps[j];
            let mult = caps[j..].iter().take_while(|&&y| y == c).count();
            if c >= x {
                let mut next = caps.clone();
                next[j] -= x;
                total = checked_add(total, checked_mul(mult as u128, ordered_rec(&items[1..], next)));
            }
            j += mult;
        }
        total
    })
}

// ---- contingency tables ----

static CONTINGENCY: Memo<(Vec<usize>, Vec<usize>, bool), u128> = Memo::new();

/// Nonnegative integer matrices (or 0/1 matrices when `boolean`) with row
/// sums `rows` and column sums `cols`. `IM_{λμ}` and `BM_{λμ}`.
pub fn contingency_count(rows: &Partition, cols: &Partition, boolean: bool) -> u128 {
    if rows.size() != cols.size() {
        return 0;
    }
    contingency_rec(rows.parts().to_vec(), cols.parts(), boolean)
}

fn contingency_rec(mut rows: Vec<usize>, cols: &[usize], boolean: bool) -> u128 {
    rows.retain(|&r| r > 0);
    if cols.is_empty() {
        return u128::from(rows.is_empty());
    }
    if rows.is_empty() {
        return 0;
    }
    rows.sort_unstable_by(|a, b| b.cmp(a));
    if boolean && rows.len() < cols[0] {
        return 0;
    }
    CONTINGENCY.get_or((rows.clone(), cols.to_vec(), boolean), || {
        let mut total = 0u128;
        let mut col = vec![0usize; rows.len()];
        fn place(
            i: usize,
            left: usize,
            rows: &[usize],
            col: &mut Vec<usize>,
            cols: &[usize],
            boolean: bool,
            total: &mut u128,
        ) {
            if i == rows.len() {
                if left == 0 {
                    let next: Vec<usize> = rows.iter().zip(col.iter()).map(|(r, c)| r - c).collect();
                    *total = checked_add(*total, contingency_rec(next, &cols[1..], boolean));
                }
                return;
            }
            let cap = if boolean { rows[i].min(1) } else { rows[i] }.min(left);
            let room: usize = rows[i + 1..].iter().map(|&r| if boolean { r.min(1) } else { r }).sum();
            let lo = left.saturating_sub(room);
            for v in lo..=cap {
                col[i] = v;
                place(i + 1, left - v, rows, col, cols, boolean, total);
            }
            col[i] = 0;
        }
        place(0, cols[0], &rows, &mut col, cols, boolean, &mut total);
        total
    })
}

// ---- stable p/z → h ----

/// The eventual value of the `p/z → h` coefficient at `(λ[n], μ[n])`:
/// `(-1)^{l(μ)-l(λ)} / z_λ · Σ_ν w(B_{μ∖ν, λ}) |R(ν)|`, the sum over
/// sub-multisets `ν` of the parts of `μ` with `|ν| = |μ| - |λ|`.
pub fn stable_pz_to_h(lam: &Partition, mu: &Partition) -> Rational {
    if lam.size() > mu.size() {
        return Rational::zero();
    }
    let target = mu.size() - lam.size();
    let mut acc = BigInt::zero();
    for nu in mu.sub_multisets() {
        if nu.size() != target {
            continue;
        }
        let mut rest = mu.clone();
        for &p in nu.parts() {
            rest = rest.remove_part(p).expect("sub-multiset");
        }
        let w = brick_weight(&rest, lam);
        acc += BigInt::from(w) * BigInt::from(nu.rearrangement_count());
    }
    let sign = if (mu.len() + lam.len()).is_multiple_of(2) { 1 } else { -1 };
    Rational::new(acc * sign, BigInt::from(lam.z()))
}

/// `z_λ` as a rational.
pub fn z_rational(lam: &Partition) -> Rational {
    rat_big(lam.z())
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Every Kostka number of degree `n`, for warming the memo in parallel.
pub fn kostka_table(n: usize) -> Vec<Vec<u128>> {
    use rayon::prelude::*;
    let parts = partitions_of(n);
    parts.par_iter().map(|l| parts.iter().map(|m| kostka(l, m)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    // brute force SSYT count: fill cells in row-major order
    fn oracle_kostka(lam: &Partition, mu: &Partition) -> u128 {
        if lam.size() != mu.size() {
            return 0;
        }
        let rows: Vec<usize> = lam.parts().to_vec();
        let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();
        let mut used = vec![0usize; mu.len()];
        fn go(
            r: usize,
            c: usize,
            rows: &[usize],
            grid: &mut Vec<Vec<usize>>,
            mu: &Partition,
            used: &mut Vec<usize>,
        ) -> u128 {
            if r == rows.len() {
                return 1;
            }
            let (nr, nc) = if c + 1 == rows[r] { (r + 1, 0) } else { (r, c + 1) };
            let mut total = 0;
            for v in 0..mu.len() {
                if used[v] == mu.part(v) {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                grid[r][c] = v;
                used[v] += 1;
                total += go(nr, nc, rows, grid, mu, used);
                used[v] -= 1;
            }
            total
        }
        if rows.is_empty() {
            return u128::from(mu.is_empty());
        }
        go(0, 0, &rows, &mut grid, mu, &mut used)
    }

    // brute force: enumerate ordered brick rows per shape row by all words
    fn oracle_bricks(content: &Partition, shape: &Partition) -> (u128, u128) {
        fn go(rows: &[usize], avail: Vec<usize>) -> (u128, u128) {
            if rows.is_empty() {
                let e = u128::from(avail.is_empty());
                return (e, e);
            }
            let mut out = (0, 0);
            // choose an ordered subsequence of distinct indices filling row 0
            let mut seqs = Vec::new();
            fn seq(
                left: usize,
                avail: &[usize],
                used: &mut Vec<bool>,
                cur: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if left == 0 {
                    out.push(cur.clone());
                    return;
                }
                for i in 0..avail.len() {
                    if !used[i] && avail[i] <= left {
                        used[i] = true;
                        cur.push(i);
                        seq(left - avail[i], avail, used, cur, out);
                        cur.pop();
                        used[i] = false;
                    }
                }
            }
            seq(rows[0], &avail, &mut vec![false; avail.len()], &mut Vec::new(), &mut seqs);
            // dedupe sequences of equal lengths (bricks of equal size are alike)
            let mut seen = std::collections::HashSet::new();
            for s in seqs {
                let lens: Vec<usize> = s.iter().map(|&i| avail[i]).collect();
                if !seen.insert(lens.clone()) {
                    continue;
                }
                let mut rest = avail.clone();
                for l in &lens {
                    let pos = rest.iter().position(|x| x == l).unwrap();
                    rest.remove(pos);
                }
                let (c, w) = go(&rows[1..], rest);
                out.0 += c;
                out.1 += w * *lens.last().unwrap() as u128;
            }
            out
        }
        go(shape.parts(), content.parts().to_vec())
    }

    // brute force: all functions from parts of μ to indices of λ
    fn oracle_ordered(mu: &Partition, lam: &Partition) -> u128 {
        let k = lam.len();
        let l = mu.len();
        if k == 0 {
            return u128::from(l == 0);
        }
        let mut count = 0;
        let total = k.pow(l as u32);
        for code in 0..total {
            let mut sums = vec![0; k];
            let mut c = code;
            for i in 0..l {
                sums[c % k] += mu.part(i);
                c /= k;
            }
            if sums == lam.parts() {
                count += 1;
            }
        }
        count
    }

    // brute force: all matrices with bounded entries
    // every matrix row by row: each row is any weak composition of its sum
    fn oracle_contingency(rows: &Partition, cols: &Partition, boolean: bool) -> u128 {
        fn weak(sum: usize, len: usize, max: usize) -> Vec<Vec<usize>> {
            if len == 0 {
                return if sum == 0 { vec![vec![]] } else { vec![] };
            }
            let mut out = Vec::new();
            for v in 0..=sum.min(max) {
                for mut rest in weak(sum - v, len - 1, max) {
                    rest.insert(0, v);
                    out.push(rest);
                }
            }
            out
        }
        fn go(i: usize, rows: &Partition, cols: &Partition, acc: &mut Vec<usize>, max: usize) -> u128 {
            if i == rows.len() {
                return u128::from((0..cols.len()).all(|j| acc[j] == cols.part(j)));
            }
            let mut n = 0;
            for row in weak(rows.part(i), cols.len(), max) {
                for j in 0..row.len() {
                    acc[j] += row[j];
                }
                n += go(i + 1, rows, cols, acc, max);
                for j in 0..row.len() {
                    acc[j] -= row[j];
                }
            }
            n
        }
        let max = if boolean { 1 } else { usize::MAX };
        go(0, rows, cols, &mut vec![0; cols.len()], max)
    }

    // brute force MN: sum over all sequences of rim hook removals by diagram cells
    fn oracle_character(lam: &Partition, mu: &Partition) -> i128 {
        if mu.is_empty() {
            return i128::from(lam.is_empty());
        }
        let k = mu.part(mu.len() - 1);
        let rest = Partition::new(mu.parts()[..mu.len() - 1].to_vec()).unwrap();
        let mut total = 0;
        // any ν ⊆ λ with λ/ν a connected skew shape of size k without 2x2 block
        for nu in partitions_of(lam.size() - k) {
            if !lam.contains(&nu) {
                continue;
            }
            let cells: Vec<_> = lam.cells().into_iter().filter(|c| !nu.contains_cell(*c)).collect();
            let has_square = cells.iter().any(|c| {
                cells.contains(&crate::partition::Cell::new(c.row + 1, c.col))
                    && cells.contains(&crate::partition::Cell::new(c.row, c.col + 1))
                    && cells.contains(&crate::partition::Cell::new(c.row + 1, c.col + 1))
            });
            let rows: std::collections::BTreeSet<usize> = cells.iter().map(|c| c.row).collect();
            let rmin = *rows.iter().next().unwrap();
            let rmax = *rows.iter().last().unwrap();
            let connected = (rmin..=rmax).all(|r| rows.contains(&r)) && {
                // consecutive rows must share a column
                (rmin..rmax)
                    .all(|r| cells.iter().any(|a| a.row == r && cells.iter().any(|b| b.row == r + 1 && b.col == a.col)))
            };
            if has_square || !connected {
                continue;
            }
            let s = if (rmax - rmin).is_multiple_of(2) { 1 } else { -1 };
            total += s * oracle_character(&nu, &rest);
        }
        total
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[3, 2]), &p(&[2, 2, 1])), 2);
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])), 0);
        assert_eq!(kostka(&Partition::empty(), &Partition::empty()), 1);
    }

    #[test]
    fn kostka_against_brute_force() {
        for n in 0..=7 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(kostka(&lam, &mu), oracle_kostka(&lam, &mu), "{lam} {mu}");
                }
            }
        }
    }

    #[test]
    fn stable_kostka_matches_padding() {
        for mu in partitions_up_to(4) {
            for lam in partitions_up_to(mu.size()) {
                let s = stable_kostka(&lam, &mu);
                for n in 2 * mu.size()..=2 * mu.size() + 3 {
                    let (Some(a), Some(b)) = (lam.pad(n), mu.pad(n)) else { continue };
                    assert_eq!(kostka(&a, &b), s, "{lam} {mu} n={n}");
                }
            }
        }
    }

    #[test]
    fn srht_examples() {
        // shape (5,3,3), content (6,4,1): one tabloid, sign +1
        assert_eq!(inverse_kostka_srht(&p(&[6, 4, 1]), &p(&[5, 3, 3])), 1);
        for n in 1..=8 {
            let expected = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(inverse_kostka_srht(&Partition::row(n), &Partition::column(n)), expected);
        }
        assert_eq!(inverse_kostka_srht(&p(&[1, 1]), &p(&[2])), 0);
    }

    #[test]
    fn srht_inverts_kostka() {
        for n in 0..=7 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    // Σ_ν K^{-1}_{a,ν} K_{ν,b} = δ
                    let s: i128 = parts.iter().map(|nu| inverse_kostka_srht(a, nu) * kostka(nu, b) as i128).sum();
                    assert_eq!(s, i128::from(a == b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn character_examples() {
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])), -1);
        for n in 1..=8 {
            let expected = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(character(&Partition::column(n), &Partition::row(n)), expected);
            assert_eq!(character(&Partition::row(n), &Partition::column(n)), 1);
        }
    }

    #[test]
    fn character_against_brute_force() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(character(&lam, &mu), oracle_character(&lam, &mu), "{lam} {mu}");
                }
            }
        }
    }

    #[test]
    fn brick_examples() {
        assert!(brick_weight(&p(&[3, 2, 2, 2, 1, 1]), &p(&[5, 3, 3])) > 0);
        for k in 1..=5 {
            let kk = p(&[k, k]);
            assert_eq!(brick_weight(&kk, &kk), (k * k) as u128);
            assert_eq!(ordered_brick_count(&kk, &kk), 2);
            let k1 = p(&[k + 1, k]);
            assert_eq!(brick_weight(&k1, &k1), (k * (k + 1)) as u128);
            assert_eq!(ordered_brick_count(&k1, &k1), 1);
        }
        assert_eq!(brick_count(&p(&[2, 1]), &p(&[3])), 2);
        assert_eq!(ordered_brick_count(&p(&[1, 1]), &p(&[2])), 1);
    }

    #[test]
    fn bricks_against_brute_force() {
        for n in 0..=7 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    assert_eq!(bricks(&a, &b), oracle_bricks(&a, &b), "{a} {b}");
                    assert_eq!(ordered_brick_count(&a, &b), oracle_ordered(&a, &b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn contingency_against_brute_force() {
        assert_eq!(contingency_count(&p(&[2, 1]), &p(&[2, 1]), false), 2);
        assert_eq!(contingency_count(&p(&[2, 1]), &p(&[2, 1]), true), 1);
        for n in 0..=5 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    for boolean in [false, true] {
                        assert_eq!(
                            contingency_count(&a, &b, boolean),
                            oracle_contingency(&a, &b, boolean),
                            "{a} {b} {boolean}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn stable_pz_to_h_small() {
        // λ = ∅: (-1)^{l(μ)} |R(μ)|
        assert_eq!(stable_pz_to_h(&Partition::empty(), &p(&[2, 1])), rat(2));
        assert_eq!(stable_pz_to_h(&p(&[1]), &p(&[1])), rat(1));
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1..=max, 0..=max).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn kostka_conjugate_symmetry_of_characters(lam in arb_partition(4)) {
            // χ^{λ'}_μ = ε_μ χ^λ_μ
            for mu in partitions_of(lam.size()) {
                let eps = if (lam.size() - mu.len()) % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(character(&lam.conjugate(), &mu), eps * character(&lam, &mu));
            }
        }

        #[test]
        fn kostka_diagonal_and_dominance(lam in arb_partition(4)) {
            prop_assert_eq!(kostka(&lam, &lam), 1);
            for mu in partitions_of(lam.size()) {
                if kostka(&lam, &mu) > 0 {
                    prop_assert!(lam.dominates(&mu));
                }
            }
        }

        #[test]
        fn contingency_symmetric(a in arb_partition(4), b in arb_partition(4)) {
            if a.size() == b.size() {
                prop_assert_eq!(contingency_count(&a, &b, false), contingency_count(&b, &a, false));
                prop_assert_eq!(contingency_count(&a, &b, true), contingency_count(&b, &a, true));
            }
        }
    }
}
