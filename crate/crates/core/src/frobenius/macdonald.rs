//! Modified Macdonald polynomials from `inv`/`maj` statistics on fillings.
//!
//! Cells are `(row, col)`, 1-based, row 1 at the bottom. The reading order
//! runs left to right along rows, starting from the top row. Equal labels are
//! standardized in reading order, so of two equal labels the one read first
//! is the smaller.

use std::collections::HashMap;
use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::coeffs::{inverse_kostka_srht, Memo};
use crate::error::{Error, Result};
use crate::limits;
use crate::matrix::Basis;
use crate::partition::{partitions_of, Cell, Partition};
use crate::qt::{rat, QtPoly};
use crate::symfunc::SymFunc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldFilling {
    shape: Partition,
    // rows[r][c]: label of cell (r + 1, c + 1)
    rows: Vec<Vec<usize>>,
}

impl MacdonaldFilling {
    /// Rows listed bottom row first.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lens.clone())
            .map_err(|_| Error::MalformedFilling(format!("row lengths {lens:?} do not form a partition")))?;
        if shape.len() != rows.len() {
            return Err(Error::MalformedFilling("empty row".into()));
        }
        Ok(MacdonaldFilling { shape, rows })
    }

    /// Rows listed top row first, the way a diagram is drawn.
    pub fn from_top_rows(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        rows.reverse();
        MacdonaldFilling::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn label(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    /// Label multiplicities: entry `k` counts the cells labeled `k`.
    pub fn content(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &v in self.rows.iter().flatten() {
            if out.len() <= v {
                out.resize(v + 1, 0);
            }
            out[v] += 1;
        }
        out
    }

    /// Cells in reading order.
    pub fn reading_order(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.shape.size());
        for r in (0..self.rows.len()).rev() {
            for c in 0..self.rows[r].len() {
                out.push(Cell::new(r + 1, c + 1));
            }
        }
        out
    }

    /// The standardized filling: labels `1..=n`, ties broken by reading order.
    pub fn standardize(&self) -> MacdonaldFilling {
        let order = self.reading_order();
        let mut keyed: Vec<(usize, usize, Cell)> =
            order.iter().enumerate().map(|(k, &c)| (self.label(c).expect("cell"), k, c)).collect();
        keyed.sort();
        let mut rows: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for (st, (_, _, c)) in keyed.iter().enumerate() {
            rows[c.row - 1][c.col - 1] = st + 1;
        }
        MacdonaldFilling { shape: self.shape.clone(), rows }
    }

    /// Cells `u` with `σ(u) > σ(v)` for the cell `v` directly below.
    pub fn descents(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r][c] > self.rows[r - 1][c] {
                    out.push(Cell::new(r + 1, c + 1));
                }
            }
        }
        out
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().map(|&u| self.shape.leg(u).expect("cell") + 1).sum()
    }

    /// Inversion triples `(u, w, v)`: `u` and `w = u + (0, k)` in one row,
    /// `v` directly below `u` (`None` below the bottom row, read as `-∞`).
    /// A triple counts when the standardized labels of `u, w, v` decrease
    /// going clockwise.
    pub fn inversion_triples(&self) -> Vec<(Cell, Cell, Option<Cell>)> {
        let st = self.standardize();
        let mut out = Vec::new();
        for r in 0..self.rows.len() {
            let len = self.rows[r].len();
            for c in 0..len {
                for c2 in c + 1..len {
                    let a = st.rows[r][c];
                    let b = st.rows[r][c2];
                    let (counts, v) = if r == 0 {
                        (a > b, None)
                    } else {
                        (cyclically_decreasing(a, b, st.rows[r - 1][c]), Some(Cell::new(r, c + 1)))
                    };
                    if counts {
                        out.push((Cell::new(r + 1, c + 1), Cell::new(r + 1, c2 + 1), v));
                    }
                }
            }
        }
        out
    }

    pub fn inv(&self) -> usize {
        self.inversion_triples().len()
    }
}

impl fmt::Display for MacdonaldFilling {
    /// Top row first, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().rev().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn cyclically_decreasing(a: usize, b: usize, c: usize) -> bool {
    (a > b && b > c) || (b > c && c > a) || (c > a && a > b)
}

/// Fillings of `shape` with `content[k]` cells labeled `k`, grouped by
/// `(inv, maj)`, keeping only `inv ≤ max_inv` and `maj ≤ max_maj`.
///
/// Cells are filled in reading order. Each statistic only grows as cells are
/// added: a descent is charged when its lower cell is filled, a triple when
/// its last cell in reading order is filled.
pub fn filling_statistics(
    shape: &Partition,
    content: &[usize],
    max_inv: usize,
    max_maj: usize,
) -> HashMap<(usize, usize), u64> {
    let mut out = HashMap::new();
    if content.iter().sum::<usize>() != shape.size() {
        return out;
    }
    let mut state = FillState::new(shape, content);
    state.run(0, 0, 0, max_inv, max_maj, &mut out);
    out
}

struct FillState {
    // cells in reading order as (row, col), 0-based
    order: Vec<(usize, usize)>,
    rank: Vec<Vec<usize>>,
    labels: Vec<Vec<usize>>,
    leg: Vec<Vec<usize>>,
    remaining: Vec<usize>,
}

impl FillState {
    fn new(shape: &Partition, content: &[usize]) -> Self {
        let parts = shape.parts();
        let mut order = Vec::new();
        let mut rank: Vec<Vec<usize>> = parts.iter().map(|&p| vec![0; p]).collect();
        for r in (0..parts.len()).rev() {
            for c in 0..parts[r] {
                rank[r][c] = order.len();
                order.push((r, c));
            }
        }
        let leg = parts
            .iter()
            .enumerate()
            .map(|(r, &p)| (0..p).map(|c| shape.leg(Cell::new(r + 1, c + 1)).expect("cell")).collect())
            .collect();
        FillState { order, rank, labels: parts.iter().map(|&p| vec![0; p]).collect(), leg, remaining: content.to_vec() }
    }

    // standardized comparison of two filled cells
    fn gt(&self, x: (usize, usize), y: (usize, usize)) -> bool {
        let (a, b) = (self.labels[x.0][x.1], self.labels[y.0][y.1]);
        a > b || (a == b && self.rank[x.0][x.1] > self.rank[y.0][y.1])
    }

    fn run(
        &mut self,
        k: usize,
        inv: usize,
        maj: usize,
        max_inv: usize,
        max_maj: usize,
        out: &mut HashMap<(usize, usize), u64>,
    ) {
        if k == self.order.len() {
            *out.entry((inv, maj)).or_default() += 1;
            return;
        }
        let (r, c) = self.order[k];
        for v in 0..self.remaining.len() {
            if self.remaining[v] == 0 {
                continue;
            }
            self.labels[r][c] = v;
            let x = (r, c);
            let mut d_maj = 0;
            let mut d_inv = 0;
            if r + 1 < self.labels.len() && c < self.labels[r + 1].len() {
                let u = (r + 1, c);
                if self.labels[u.0][u.1] > v {
                    d_maj = self.leg[u.0][u.1] + 1;
                }
                // x is the lower cell of triples (u, w, x)
                for c2 in c + 1..self.labels[r + 1].len() {
                    let w = (r + 1, c2);
                    let (uw, wx, xu) = (self.gt(u, w), self.gt(w, x), self.gt(x, u));
                    // u > w > x, w > x > u, x > u > w
                    if (uw && wx) || (wx && xu) || (xu && uw) {
                        d_inv += 1;
                    }
                }
            }
            if r == 0 {
                for c0 in 0..c {
                    if self.gt((0, c0), x) {
                        d_inv += 1;
                    }
                }
            }
            if inv + d_inv <= max_inv && maj + d_maj <= max_maj {
                self.remaining[v] -= 1;
                self.run(k + 1, inv + d_inv, maj + d_maj, max_inv, max_maj, out);
                self.remaining[v] += 1;
            }
        }
    }
}

fn stats_to_poly(stats: &HashMap<(usize, usize), u64>) -> QtPoly {
    let mut out = QtPoly::zero();
    for (&(i, j), &c) in stats {
        out.add_term(i as i32, j as i32, &rat(c as i64));
    }
    out
}

/// `Σ q^{inv} t^{maj}` over fillings of `ν` with the given label multiplicities.
/// Subject to the enumeration cap.
pub fn content_polynomial(nu: &Partition, content: &[usize]) -> Result<QtPoly> {
    limits::check_enumeration(nu.size())?;
    Ok(stats_to_poly(&filling_statistics(nu, content, usize::MAX, usize::MAX)))
}

fn padded_content(nu: &Partition, eta: &Partition) -> Result<Vec<usize>> {
    if eta.size() > nu.size() {
        return Err(Error::SizeMismatch(format!("|{eta}| > |{nu}|")));
    }
    let mut content = vec![nu.size() - eta.size()];
    content.extend_from_slice(eta.parts());
    Ok(content)
}

/// `[q^i t^j]⟨H̃_ν, h_{η̂}⟩` where `η̂` adds a part `|ν| - |η|` to `η`: the
/// number of fillings with content `0^{|ν|-|η|} 1^{η_1} 2^{η_2} ...` and the
/// given statistics. The search is bounded by `(i, j)`, so no cap applies.
pub fn macdonald_monomial_coefficient(nu: &Partition, eta: &Partition, i: usize, j: usize) -> Result<u64> {
    let content = padded_content(nu, eta)?;
    Ok(filling_statistics(nu, &content, i, j).get(&(i, j)).copied().unwrap_or(0))
}

/// `[q^i]⟨H̃_ν, h_{η̂}⟩`: the terms of q-degree `i`. Bounded by `inv ≤ i` only.
pub fn macdonald_q_slice(nu: &Partition, eta: &Partition, i: usize) -> Result<QtPoly> {
    let content = padded_content(nu, eta)?;
    let mut out = QtPoly::zero();
    for (&(a, b), &c) in &filling_statistics(nu, &content, i, usize::MAX) {
        if a == i {
            out.add_term(a as i32, b as i32, &rat(c as i64));
        }
    }
    Ok(out)
}

static MONOMIAL: Memo<(Partition, Partition), QtPoly> = Memo::new();

/// `⟨H̃_ν, h_κ⟩` for `κ ⊢ |ν|`, memoized. Callers check the cap.
fn monomial_coefficient_poly(nu: &Partition, kappa: &Partition) -> QtPoly {
    MONOMIAL.get_or((nu.clone(), kappa.clone()), || {
        stats_to_poly(&filling_statistics(nu, kappa.parts(), usize::MAX, usize::MAX))
    })
}

/// `H̃_ν` in the monomial basis. Subject to the enumeration cap.
pub fn macdonald_polynomial(nu: &Partition) -> Result<SymFunc> {
    let n = nu.size();
    limits::check_enumeration(n)?;
    let terms: Vec<(Partition, QtPoly)> = partitions_of(n)
        .into_par_iter()
        .map(|kappa| {
            let c = monomial_coefficient_poly(nu, &kappa);
            (kappa, c)
        })
        .collect();
    SymFunc::from_terms(n, Basis::M, terms)
}

/// The modified q,t-Kostka number `K̃_{λ,ν}`: the coefficient of `s_λ` in
/// `H̃_ν`. Only monomial coefficients at `κ ⊵ λ` are enumerated. A negative
/// coefficient is reported as an invariant violation.
pub fn qt_kostka(lam: &Partition, nu: &Partition) -> Result<QtPoly> {
    if lam.size() != nu.size() {
        return Err(Error::SizeMismatch(format!("|{lam}| != |{nu}|")));
    }
    limits::check_enumeration(nu.size())?;
    let kappas: Vec<Partition> = partitions_of(nu.size()).into_iter().filter(|k| k.dominates(lam)).collect();
    let pieces: Vec<QtPoly> = kappas
        .par_iter()
        .map(|kappa| {
            let k = inverse_kostka_srht(kappa, lam);
            if k == 0 {
                QtPoly::zero()
            } else {
                monomial_coefficient_poly(nu, kappa).scale(&rat(k as i64))
            }
        })
        .collect();
    let out = pieces.iter().fold(QtPoly::zero(), |acc, p| &acc + p);
    if !out.is_nonnegative() {
        return Err(Error::Invariant(format!("K̃_{{{lam},{nu}}} = {out} has a negative coefficient")));
    }
    Ok(out)
}

/// `B_ν = Σ_c q^{a'(c)} t^{l'(c)}`, coarm and coleg of each cell.
pub fn b_mu(nu: &Partition) -> QtPoly {
    let mut out = QtPoly::zero();
    for c in nu.cells() {
        out.add_term((c.col - 1) as i32, (c.row - 1) as i32, &rat(1));
    }
    out
}

/// `e_k` of the multiset of monomials in `values`, each repeated by its
/// (nonnegative integer) coefficient.
pub fn elementary_eval(k: usize, values: &QtPoly) -> Result<QtPoly> {
    let mut monomials = Vec::new();
    for (i, j, c) in values.terms() {
        let reps = Some(c)
            .filter(|c| c.is_integer())
            .and_then(|c| c.to_integer().to_usize())
            .ok_or_else(|| Error::Invariant(format!("coefficient {c} is not a multiplicity")))?;
        for _ in 0..reps {
            monomials.push((i, j));
        }
    }
    // e_0..e_k by the product Π (1 + x z)
    let mut e = vec![QtPoly::zero(); k + 1];
    e[0] = QtPoly::one();
    for (i, j) in monomials {
        let x = QtPoly::monomial(i, j, rat(1));
        for d in (1..=k).rev() {
            let add = &e[d - 1] * &x;
            e[d] += &add;
        }
    }
    Ok(e.swap_remove(k))
}

/// `e_k[B_ν - 1]`, the hook coefficient `K̃_{(|ν|-k, 1^k), ν}`.
pub fn hook_formula(nu: &Partition, k: usize) -> Result<QtPoly> {
    elementary_eval(k, &(&b_mu(nu) - &QtPoly::one()))
}

/// Sequence generator for `n ↦ [q^i t^j]H̃_{μ[n]}` in `m` (empty before `μ[n]`
/// is defined). Subject to the enumeration cap.
pub fn macdonald_component(mu: &Partition, n: usize, i: usize, j: usize) -> Result<Option<SymFunc>> {
    let Some(nu) = mu.pad(n) else { return Ok(None) };
    Ok(Some(macdonald_polynomial(&nu)?.component(i as i32, j as i32)))
}

/// All monomial coefficients of `H̃_ν` by grouping every filling with labels
/// `< n` by its sorted content. Exponential; test oracle only.
#[cfg(test)]
fn brute_force(nu: &Partition) -> std::collections::BTreeMap<Partition, QtPoly> {
    let n = nu.size();
    let mut out: std::collections::BTreeMap<Partition, QtPoly> = std::collections::BTreeMap::new();
    let total = n.pow(n as u32);
    for code in 0..total {
        let mut x = code;
        let mut labels = Vec::with_capacity(n);
        for _ in 0..n {
            labels.push(x % n);
            x /= n;
        }
        let mut rows = Vec::new();
        let mut it = labels.into_iter();
        for &p in nu.parts() {
            rows.push(it.by_ref().take(p).collect());
        }
        let f = MacdonaldFilling::new(rows).unwrap();
        // only fillings whose content, in label order, is a partition
        let Ok(kappa) = Partition::new(f.content()) else { continue };
        if kappa.parts() != f.content() {
            continue;
        }
        out.entry(kappa).or_default().add_term(f.inv() as i32, f.maj() as i32, &rat(1));
    }
    out
}
