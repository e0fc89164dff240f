//! Single brick tableaux and special rim hook tableaux, for checking the
//! combinatorial counts in [`crate::coeffs`] one object at a time.
//!
//! Rows are listed bottom row first unless a constructor says otherwise.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Each row of a shape tiled left to right by bricks of the given lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrickTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl BrickTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().flatten().any(|&b| b == 0) {
            return Err(Error::MalformedFilling("brick of length 0".into()));
        }
        let lens: Vec<usize> = rows.iter().map(|r| r.iter().sum()).collect();
        let shape = Partition::new(lens.clone())
            .map_err(|_| Error::MalformedFilling(format!("row lengths {lens:?} do not form a partition")))?;
        if shape.len() != rows.len() {
            return Err(Error::MalformedFilling("empty row".into()));
        }
        Ok(BrickTableau { shape, rows })
    }

    pub fn from_top_rows(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        rows.reverse();
        BrickTableau::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// The brick lengths as a partition.
    pub fn content(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().flatten().copied().collect())
    }

    /// Product over rows of the rightmost brick.
    pub fn weight(&self) -> u128 {
        self.rows.iter().map(|r| *r.last().expect("nonempty row") as u128).product()
    }
}

/// Every brick tableau of `shape` whose bricks are the parts of `content`.
pub fn brick_tableaux(content: &Partition, shape: &Partition) -> Vec<BrickTableau> {
    let mut out = Vec::new();
    if content.size() != shape.size() {
        return out;
    }
    if shape.is_empty() {
        out.push(BrickTableau { shape: Partition::empty(), rows: Vec::new() });
        return out;
    }
    let mut pool = content.parts().to_vec();
    fill(shape.parts(), &mut pool, &mut vec![Vec::new()], &mut out);
    out
}

// fills the last row of `rows`, then opens the next one
fn fill(shape: &[usize], pool: &mut Vec<usize>, rows: &mut Vec<Vec<usize>>, out: &mut Vec<BrickTableau>) {
    let r = rows.len() - 1;
    let left = shape[r] - rows[r].iter().sum::<usize>();
    if left == 0 {
        if r + 1 == shape.len() {
            if pool.is_empty() {
                out.push(BrickTableau::new(rows.clone()).expect("valid tiling"));
            }
            return;
        }
        rows.push(Vec::new());
        fill(shape, pool, rows, out);
        rows.pop();
        return;
    }
    let sizes: BTreeSet<usize> = pool.iter().copied().filter(|&b| b <= left).collect();
    for b in sizes {
        let k = pool.iter().position(|&x| x == b).expect("in pool");
        pool.swap_remove(k);
        rows[r].push(b);
        fill(shape, pool, rows, out);
        rows[r].pop();
        pool.push(b);
    }
}

impl fmt::Display for BrickTableau {
    /// Top row first, one row of brick lengths per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> =
            self.rows.iter().rev().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

/// A special rim hook tableau: cell labels `1..=k` name the hooks in the
/// order they are removed. Each hook must be a rim hook of what remains and
/// must meet the first column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    // (size, rows spanned) per hook, in removal order
    hooks: Vec<(usize, usize)>,
}

impl RimHookTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Error::MalformedFilling(msg);
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape =
            Partition::new(lens.clone()).map_err(|_| bad(format!("row lengths {lens:?} do not form a partition")))?;
        if shape.len() != rows.len() {
            return Err(bad("empty row".into()));
        }
        let k = rows.iter().flatten().copied().max().unwrap_or(0);
        let mut remaining: Vec<usize> = lens;
        let mut hooks = Vec::with_capacity(k);
        for h in 1..=k {
            let cells: Vec<(usize, usize)> = rows
                .iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().filter(|&(_, &v)| v == h).map(move |(c, _)| (r, c)))
                .collect();
            if cells.is_empty() {
                return Err(bad(format!("no cells labeled {h}")));
            }
            // the hook takes a suffix of each row it meets within what remains
            let mut next = remaining.clone();
            for &(r, c) in &cells {
                if c >= remaining[r] {
                    return Err(bad(format!("hook {h} uses a cell already removed")));
                }
                next[r] = next[r].min(c);
            }
            let taken: usize = remaining.iter().zip(&next).map(|(a, b)| a - b).sum();
            if taken != cells.len() {
                return Err(bad(format!("hook {h} is not a suffix of its rows")));
            }
            if next.windows(2).any(|w| w[0] < w[1]) {
                return Err(bad(format!("removing hook {h} does not leave a partition")));
            }
            let set: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
            if set
                .iter()
                .any(|&(r, c)| set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1)))
            {
                return Err(bad(format!("hook {h} contains a 2x2 square")));
            }
            if !connected(&set) {
                return Err(bad(format!("hook {h} is not connected")));
            }
            if !set.iter().any(|&(_, c)| c == 0) {
                return Err(bad(format!("hook {h} does not meet the first column")));
            }
            let spanned = set.iter().map(|&(r, _)| r).collect::<BTreeSet<_>>().len();
            hooks.push((cells.len(), spanned));
            remaining = next;
        }
        if remaining.iter().any(|&x| x > 0) {
            return Err(bad("unlabeled cells".into()));
        }
        Ok(RimHookTableau { shape, rows, hooks })
    }

    pub fn from_top_rows(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        rows.reverse();
        RimHookTableau::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Hook sizes as a partition.
    pub fn content(&self) -> Partition {
        Partition::from_unsorted(self.hooks.iter().map(|h| h.0).collect())
    }

    /// Number of south steps over all hooks.
    pub fn south_steps(&self) -> usize {
        self.hooks.iter().map(|h| h.1 - 1).sum()
    }

    pub fn sign(&self) -> i32 {
        if self.south_steps().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for RimHookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> =
            self.rows.iter().rev().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

fn connected(set: &BTreeSet<(usize, usize)>) -> bool {
    let Some(&start) = set.iter().next() else { return true };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((r, c)) = stack.pop() {
        let nbrs = [(r + 1, c), (r, c + 1), (r.wrapping_sub(1), c), (r, c.wrapping_sub(1))];
        for nb in nbrs {
            if set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == set.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{brick_count, brick_weight, inverse_kostka_srht};
    use crate::partition::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn brick_example() {
        let t = BrickTableau::from_top_rows(vec![vec![2, 1], vec![3], vec![1, 2, 2]]).unwrap();
        assert_eq!(t.shape(), &p(&[5, 3, 3]));
        assert_eq!(t.content(), p(&[3, 2, 2, 2, 1, 1]));
        assert_eq!(t.weight(), 6);
    }

    #[test]
    fn brick_enumeration_matches_counts() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                for lam in partitions_of(n) {
                    let all = brick_tableaux(&mu, &lam);
                    assert_eq!(all.len() as u128, brick_count(&mu, &lam), "{mu} {lam}");
                    assert_eq!(
                        all.iter().map(BrickTableau::weight).sum::<u128>(),
                        brick_weight(&mu, &lam),
                        "{mu} {lam}"
                    );
                    assert!(all.iter().all(|t| t.content() == mu && t.shape() == &lam));
                }
            }
        }
    }

    #[test]
    fn rim_hook_example() {
        let t = RimHookTableau::from_top_rows(vec![vec![1, 1, 1], vec![2, 2, 1], vec![3, 2, 2, 2, 2]]).unwrap();
        assert_eq!(t.shape(), &p(&[5, 3, 3]));
        assert_eq!(t.content(), p(&[6, 4, 1]));
        assert_eq!(t.south_steps(), 2);
        assert_eq!(t.sign(), 1);
    }

    #[test]
    fn rim_hook_rejections() {
        // 2x2 block
        assert!(RimHookTableau::new(vec![vec![1, 1], vec![1, 1]]).is_err());
        // removes a cell from the middle of a row
        assert!(RimHookTableau::new(vec![vec![2, 1, 2]]).is_err());
        // misses the first column
        assert!(RimHookTableau::new(vec![vec![2, 1]]).is_err());
        assert!(RimHookTableau::new(vec![vec![2, 1], vec![1]]).is_err());
        assert!(RimHookTableau::new(vec![vec![1, 1], vec![1]]).is_ok());
    }

    // every labeling of the cells, validated, against the signed count
    #[test]
    fn signed_counts_match_inverse_kostka() {
        for n in 1..=5 {
            for lam in partitions_of(n) {
                let cells = lam.size();
                for mu in partitions_of(n) {
                    let k = mu.len();
                    let mut total = 0i128;
                    let mut labels = vec![1usize; cells];
                    loop {
                        let mut rows = Vec::new();
                        let mut it = labels.iter();
                        for &len in lam.parts() {
                            rows.push(it.by_ref().take(len).copied().collect::<Vec<_>>());
                        }
                        if let Ok(t) = RimHookTableau::new(rows) {
                            if t.content() == mu {
                                total += i128::from(t.sign());
                            }
                        }
                        let mut i = 0;
                        while i < cells && labels[i] == k {
                            labels[i] = 1;
                            i += 1;
                        }
                        if i == cells {
                            break;
                        }
                        labels[i] += 1;
                    }
                    assert_eq!(total, inverse_kostka_srht(&mu, &lam), "shape {lam} content {mu}");
                }
            }
        }
    }
}
