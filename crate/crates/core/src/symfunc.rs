//! Homogeneous symmetric functions with `Q(q,t)` coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{change_of_basis_matrix, matrix_uncapped, Basis, CoefficientMatrix};
use crate::partition::{parse_bracketed, Partition};
use crate::qt::{parse_rational, QtPoly, Rational};

/// A homogeneous symmetric function of a fixed degree, stored sparsely in
/// one of the six bases.
///
/// `==` compares after converting both sides to the monomial basis.
#[derive(Clone)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, QtPoly>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The basis element `b_λ`.
    pub fn basis_element(basis: Basis, lam: Partition) -> Self {
        let mut f = SymFunc::zero(lam.size(), basis);
        f.coeffs.insert(lam, QtPoly::one());
        f
    }

    pub fn from_terms(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, QtPoly)>,
    ) -> Result<Self> {
        let mut f = SymFunc::zero(degree, basis);
        for (lam, c) in terms {
            f.add_term(lam, &c)?;
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `b_λ` in the stored basis.
    pub fn coeff(&self, lam: &Partition) -> QtPoly {
        self.coeffs.get(lam).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QtPoly)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, lam: Partition, c: &QtPoly) -> Result<()> {
        if lam.size() != self.degree {
            return Err(Error::SizeMismatch(format!("{lam} in degree {}", self.degree)));
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.coeffs.entry(lam.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&lam);
        }
        Ok(())
    }

    pub fn scale(&self, c: &QtPoly) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, v) in &self.coeffs {
            let x = v * c;
            if !x.is_zero() {
                out.coeffs.insert(lam.clone(), x);
            }
        }
        out
    }

    /// Applies `f` to each coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&QtPoly) -> QtPoly) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, v) in &self.coeffs {
            let x = f(v);
            if !x.is_zero() {
                out.coeffs.insert(lam.clone(), x);
            }
        }
        out
    }

    /// The `q^i t^j` component.
    pub fn component(&self, i: i32, j: i32) -> SymFunc {
        self.map_coeffs(|c| c.component(i, j))
    }

    /// Sum; the right operand is converted to the left operand's basis.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let other = other.convert(self.basis)?;
        let mut out = self.clone();
        for (lam, c) in other.coeffs {
            out.add_term(lam, &c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&QtPoly::integer(-1)))
    }

    /// Product, computed in the power-sum basis.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        let a = self.convert(Basis::P)?;
        let b = other.convert(Basis::P)?;
        let mut out = SymFunc::zero(self.degree + other.degree, Basis::P);
        for (l, x) in &a.coeffs {
            for (m, y) in &b.coeffs {
                out.add_term(l.union(m), &(x * y))?;
            }
        }
        Ok(out)
    }

    /// Change of basis, subject to the degree cap.
    pub fn convert(&self, to: Basis) -> Result<SymFunc> {
        if to == self.basis {
            return Ok(self.clone());
        }
        let a = change_of_basis_matrix(self.degree, self.basis, to)?;
        Ok(self.apply(&a))
    }

    pub(crate) fn convert_uncapped(&self, to: Basis) -> Result<SymFunc> {
        if to == self.basis {
            return Ok(self.clone());
        }
        let a = matrix_uncapped(self.degree, self.basis, to)?;
        Ok(self.apply(&a))
    }

    fn apply(&self, a: &CoefficientMatrix) -> SymFunc {
        let mut acc = vec![QtPoly::zero(); a.dim()];
        for (lam, c) in &self.coeffs {
            let row = &a.entries[a.position(lam).expect("partition of this degree")];
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    acc[j].add_scaled(c, x);
                }
            }
        }
        let mut out = SymFunc::zero(self.degree, a.to);
        for (mu, c) in a.index.iter().zip(acc) {
            if !c.is_zero() {
                out.coeffs.insert(mu.clone(), c);
            }
        }
        out
    }

    /// Every coefficient in the Schur expansion is coefficientwise nonnegative.
    pub fn is_schur_positive(&self) -> Result<bool> {
        Ok(self.convert(Basis::S)?.coeffs.values().all(QtPoly::is_nonnegative))
    }

    /// The single Schur coefficient at `ν`, without assembling a matrix when
    /// `self` is in `m` or `s`: only `κ ⊵ ν` contribute `K^{-1}_{κ,ν}`.
    pub fn schur_coefficient(&self, nu: &Partition) -> Result<QtPoly> {
        if nu.size() != self.degree {
            return Err(Error::SizeMismatch(format!("{nu} in degree {}", self.degree)));
        }
        let m = match self.basis {
            Basis::S => return Ok(self.coeff(nu)),
            Basis::M => std::borrow::Cow::Borrowed(self),
            _ => std::borrow::Cow::Owned(self.convert_uncapped(Basis::M)?),
        };
        let mut acc = QtPoly::zero();
        for (kappa, c) in &m.coeffs {
            if kappa.dominates(nu) {
                let k = crate::coeffs::inverse_kostka_srht(kappa, nu);
                if k != 0 {
                    acc.add_scaled(c, &Rational::from_integer(k.into()));
                }
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SymFuncJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SymFunc> {
        let j: SymFuncJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        SymFunc::from_terms(j.degree, j.basis, j.terms.into_iter().map(|t| (t.partition, t.coeff)))
    }

    /// Parses `2 [2,1] - 3/2 s[1,1,1] + (1 + q) [3]` in `basis`. A basis prefix
    /// on a term, when present, must match `basis`. The degree is taken from
    /// the first term; an empty sum needs [`SymFunc::zero`].
    pub fn parse(expr: &str, basis: Basis) -> Result<SymFunc> {
        let terms = split_terms(expr)?;
        let mut out: Option<SymFunc> = None;
        for (negative, body) in terms {
            let (coeff, lam) = parse_term(body, basis)?;
            let coeff = if negative { -coeff } else { coeff };
            let f = out.get_or_insert_with(|| SymFunc::zero(lam.size(), basis));
            f.add_term(lam, &coeff)?;
        }
        out.ok_or_else(|| Error::Parse("empty expression".into()))
    }

    /// Hall inner product `⟨F, G⟩`, via `F` in `h` against `G` in `m`.
    pub fn hall_inner(&self, other: &SymFunc) -> Result<QtPoly> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let a = self.convert(Basis::H)?;
        let b = other.convert(Basis::M)?;
        let mut acc = QtPoly::zero();
        for (lam, x) in &a.coeffs {
            if let Some(y) = b.coeffs.get(lam) {
                acc += &(x * y);
            }
        }
        Ok(acc)
    }
}

/// `⟨F, G⟩`
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<QtPoly> {
    f.hall_inner(g)
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        if self.degree != other.degree {
            return false;
        }
        match (self.convert_uncapped(Basis::M), other.convert_uncapped(Basis::M)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (lam, c)) in self.coeffs.iter().enumerate() {
            let (neg, body) = match c.as_constant() {
                Some(r) => {
                    let neg = r.is_negative();
                    let a = r.abs();
                    (neg, if a.is_one() { String::new() } else { format!("{a} ") })
                }
                None => (false, format!("({c}) ")),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{body}{}{lam}", self.basis)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc(deg {}: {})", self.degree, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: QtPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    degree: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl From<&SymFunc> for SymFuncJson {
    fn from(f: &SymFunc) -> Self {
        SymFuncJson {
            degree: f.degree,
            basis: f.basis,
            terms: f.coeffs.iter().map(|(p, c)| TermJson { partition: p.clone(), coeff: c.clone() }).collect(),
        }
    }
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        SymFunc::from_terms(j.degree, j.basis, j.terms.into_iter().map(|t| (t.partition, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// Splits on top-level `+`/`-` (outside parentheses and brackets).
fn split_terms(expr: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let bytes = expr.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' | b'-' if depth == 0 && expr[..k].trim_end().as_bytes().last() != Some(&b'^') => {
                let chunk = expr[start..k].trim();
                if !chunk.is_empty() {
                    out.push((negative, chunk));
                } else if start != 0 {
                    return Err(Error::Parse(format!("dangling sign in {expr:?}")));
                }
                negative = b == b'-';
                start = k + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {expr:?}")));
        }
    }
    let chunk = expr[start..].trim();
    if chunk.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {expr:?}")));
    }
    out.push((negative, chunk));
    Ok(out)
}

fn parse_term(body: &str, basis: Basis) -> Result<(QtPoly, Partition)> {
    let open = body.rfind('[').ok_or_else(|| Error::Parse(format!("term {body:?} has no partition")))?;
    let lam = Partition::new(parse_bracketed(&body[open..])?)?;
    let head = body[..open].trim_end();
    let (coeff_text, prefix) =
        match Basis::ALL.iter().map(|b| b.name()).filter(|name| head.ends_with(name)).max_by_key(|name| name.len()) {
            Some(name) => (head[..head.len() - name.len()].trim(), Some(name)),
            None => (head, None),
        };
    if let Some(name) = prefix {
        if name.parse::<Basis>()? != basis {
            return Err(Error::Parse(format!("term {body:?} is not in basis {basis}")));
        }
    }
    let coeff_text = coeff_text.trim_end_matches('*').trim();
    let coeff = if coeff_text.is_empty() {
        QtPoly::one()
    } else if let Some(inner) = coeff_text.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        inner.parse::<QtPoly>()?
    } else if coeff_text.contains('q') || coeff_text.contains('t') {
        coeff_text.parse::<QtPoly>()?
    } else {
        QtPoly::constant(parse_rational(coeff_text)?)
    };
    Ok((coeff, lam))
}

/// `Σ_λ c_λ b_λ` from rational coefficients.
pub fn from_rational_terms(degree: usize, basis: Basis, terms: &[(Partition, Rational)]) -> Result<SymFunc> {
    SymFunc::from_terms(degree, basis, terms.iter().map(|(p, c)| (p.clone(), QtPoly::constant(c.clone()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::qt::rat;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn convert_example() {
        let f = SymFunc::parse("[2,1]", Basis::S).unwrap();
        let g = f.convert(Basis::M).unwrap();
        assert_eq!(g.to_string(), "m[2,1] + 2 m[1,1,1]");
        assert_eq!(g.convert(Basis::S).unwrap().to_string(), "s[2,1]");
    }

    #[test]
    fn inner_examples() {
        let s21 = SymFunc::parse("s[2,1]", Basis::S).unwrap();
        assert_eq!(s21.hall_inner(&s21).unwrap(), QtPoly::one());
        let h = SymFunc::basis_element(Basis::H, p(&[2, 1]));
        let m = SymFunc::basis_element(Basis::M, p(&[2, 1]));
        assert_eq!(h.hall_inner(&m).unwrap(), QtPoly::one());
        let pz = SymFunc::basis_element(Basis::P, p(&[2, 1]));
        assert_eq!(pz.hall_inner(&pz).unwrap(), QtPoly::integer(2));
    }

    #[test]
    fn parse_forms() {
        let f = SymFunc::parse("2 [2,1] - 3/2 m[1,1,1] + (1 + q) [3]", Basis::M).unwrap();
        assert_eq!(f.coeff(&p(&[2, 1])), QtPoly::integer(2));
        assert_eq!(f.coeff(&p(&[1, 1, 1])), QtPoly::constant(crate::qt::rat_frac(-3, 2)));
        assert_eq!(f.coeff(&p(&[3])), "1 + q".parse().unwrap());
        assert!(SymFunc::parse("s[2,1]", Basis::M).is_err());
        assert!(SymFunc::parse("[2] + [1]", Basis::M).is_err());
        assert!(SymFunc::parse("[1,2]", Basis::M).is_err());
        let back = SymFunc::parse(&f.to_string(), Basis::M).unwrap();
        assert_eq!(back.coeffs, f.coeffs);
    }

    #[test]
    fn json_schema() {
        let f = SymFunc::parse("(q + t) [3,1] - [2,2]", Basis::S).unwrap();
        let v = f.to_json();
        assert_eq!(v["degree"], 4);
        assert_eq!(v["basis"], "s");
        let back = SymFunc::from_json(&v).unwrap();
        assert_eq!(back.coeffs, f.coeffs);
    }

    #[test]
    fn equality_is_basis_independent() {
        let e2 = SymFunc::basis_element(Basis::E, p(&[2]));
        let via = SymFunc::parse("[1,1]", Basis::M).unwrap();
        assert_eq!(e2, via);
        assert_ne!(e2, SymFunc::parse("[2]", Basis::M).unwrap());
    }

    #[test]
    fn product_pieri() {
        // s_1 * s_1 = s_2 + s_11
        let s1 = SymFunc::basis_element(Basis::S, p(&[1]));
        let prod = s1.mul(&s1).unwrap().convert(Basis::S).unwrap();
        assert_eq!(prod.to_string(), "s[2] + s[1,1]");
    }

    #[test]
    fn schur_positivity() {
        assert!(SymFunc::basis_element(Basis::H, p(&[2, 1])).is_schur_positive().unwrap());
        assert!(!SymFunc::basis_element(Basis::M, p(&[2])).is_schur_positive().unwrap());
    }

    fn arb_symfunc(n: usize, basis: Basis) -> impl Strategy<Value = SymFunc> {
        let parts = partitions_of(n);
        let k = parts.len();
        proptest::collection::vec(-4i64..5, k).prop_map(move |cs| {
            let terms: Vec<_> = parts.iter().cloned().zip(cs.into_iter().map(rat)).collect();
            from_rational_terms(n, basis, &terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn convert_round_trip(f in arb_symfunc(4, Basis::E)) {
            for g in Basis::ALL {
                let back = f.convert(g).unwrap().convert(Basis::E).unwrap();
                prop_assert_eq!(&back.coeffs, &f.coeffs);
            }
        }

        #[test]
        fn inner_symmetric_and_bilinear(a in arb_symfunc(3, Basis::S), b in arb_symfunc(3, Basis::P)) {
            prop_assert_eq!(a.hall_inner(&b).unwrap(), b.hall_inner(&a).unwrap());
            let two = QtPoly::integer(2);
            prop_assert_eq!(a.scale(&two).hall_inner(&b).unwrap(), &a.hall_inner(&b).unwrap() * &two);
        }

        #[test]
        fn json_round_trip(a in arb_symfunc(4, Basis::H)) {
            let back = SymFunc::from_json(&a.to_json()).unwrap();
            prop_assert_eq!(back.coeffs, a.coeffs);
        }
    }
}
