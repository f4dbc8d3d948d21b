//! Bivariate F- and Schur-expansions, the filling sums and their Yamanouchi formulas.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fillings::{descent_mask, fold_standard_fillings, inv_of, maj_of_mask, FillingFilter};
use crate::limits;
use crate::rsk_yam::{generate_yam, standard_tableaux, YamFilters};
use crate::shapes::{Diagram, Partition};
use crate::words::{signature_of, Signature};

/// Integer polynomial in `q`, `t`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(q: u32, t: u32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(q, t, c);
        p
    }

    pub fn add_term(&mut self, q: u32, t: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((q, t)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(q, t));
        }
    }

    pub fn add(&mut self, other: &BivariatePoly) {
        for (&(q, t), &c) in &other.terms {
            self.add_term(q, t, c);
        }
    }

    pub fn add_scaled(&mut self, other: &BivariatePoly, k: i64) {
        for (&(q, t), &c) in &other.terms {
            self.add_term(q, t, c * k);
        }
    }

    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut out = Self::zero();
        for (&(q1, t1), &a) in &self.terms {
            for (&(q2, t2), &b) in &other.terms {
                out.add_term(q1 + q2, t1 + t2, a * b);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q: u32, t: u32) -> i64 {
        self.terms.get(&(q, t)).copied().unwrap_or(0)
    }

    /// Terms `(q exponent, t exponent, coefficient)` in lex order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.terms.iter().map(|(&(q, t), &c)| (q, t, c))
    }

    /// The constant term as an integer, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&(0, 0)).copied(),
            _ => None,
        }
    }

    /// Coefficient of `q^k`, as a polynomial in `t`.
    pub fn q_slice(&self, k: u32) -> BivariatePoly {
        let mut out = Self::zero();
        for (&(q, t), &c) in &self.terms {
            if q == k {
                out.add_term(0, t, c);
            }
        }
        out
    }

    pub fn swap_qt(&self) -> BivariatePoly {
        let mut out = Self::zero();
        for (&(q, t), &c) in &self.terms {
            out.add_term(t, q, c);
        }
        out
    }

    pub fn max_q(&self) -> Option<u32> {
        self.terms.keys().map(|&(q, _)| q).max()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    fn to_json(&self) -> Value {
        Value::Array(self.terms().map(|(q, t, c)| json!([q, t, c])).collect())
    }

    fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("bad polynomial term".into());
        let mut p = Self::zero();
        for term in v.as_array().ok_or_else(bad)? {
            let a = term.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
            let q = a[0].as_u64().ok_or_else(bad)? as u32;
            let t = a[1].as_u64().ok_or_else(bad)? as u32;
            p.add_term(q, t, a[2].as_i64().ok_or_else(bad)?);
        }
        Ok(p)
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (q, t, c) in self.terms() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                f.write_str(" ")?;
            }
            let mut vars = Vec::new();
            for (name, e) in [("q", q), ("t", t)] {
                match e {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            let mag = c.unsigned_abs();
            let body = match (mag, vars.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => vars.join("*"),
                (_, false) => format!("{mag}*{}", vars.join("*")),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// `Σ_σ c_σ(q,t) F_σ` in degree `n`; every signature has length `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymPolynomial {
    degree: usize,
    terms: BTreeMap<Signature, BivariatePoly>,
}

impl QSymPolynomial {
    pub fn zero(degree: usize) -> Self {
        QSymPolynomial { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, sigma: Signature, poly: &BivariatePoly) {
        debug_assert_eq!(sigma.len(), self.degree.saturating_sub(1));
        let slot = self.terms.entry(sigma).or_default();
        slot.add(poly);
        if slot.is_zero() {
            self.terms.remove(&sigma);
        }
    }

    pub fn add(&mut self, other: &QSymPolynomial) {
        for (&s, p) in &other.terms {
            self.add_term(s, p);
        }
    }

    pub fn get(&self, sigma: &Signature) -> BivariatePoly {
        self.terms.get(sigma).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Signature, &BivariatePoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map_coeffs(&self, f: impl Fn(&BivariatePoly) -> BivariatePoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (&s, p) in &self.terms {
            out.add_term(s, &f(p));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(s, p)| json!({"index": s.to_string(), "poly": p.to_json()}))
            .collect();
        json!({"degree": self.degree, "basis": "fundamental", "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (degree, terms) = json_frame(v, "fundamental")?;
        let mut out = Self::zero(degree);
        for term in terms {
            let sigma: Signature = term["index"]
                .as_str()
                .ok_or_else(|| Error::Parse("fundamental index must be a sign string".into()))?
                .parse()?;
            if sigma.len() != degree.saturating_sub(1) {
                return Err(Error::Parse(format!("signature {sigma} has the wrong length")));
            }
            out.add_term(sigma, &BivariatePoly::from_json(&term["poly"])?);
        }
        Ok(out)
    }
}

/// `Σ_λ c_λ(q,t) s_λ`; every partition has size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurPolynomial {
    degree: usize,
    terms: BTreeMap<Partition, BivariatePoly>,
}

impl SchurPolynomial {
    pub fn zero(degree: usize) -> Self {
        SchurPolynomial { degree, terms: BTreeMap::new() }
    }

    pub fn single(lambda: &Partition) -> Self {
        let mut s = Self::zero(lambda.size());
        s.add_term(lambda.clone(), &BivariatePoly::one());
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, lambda: Partition, poly: &BivariatePoly) {
        debug_assert_eq!(lambda.size(), self.degree);
        let slot = self.terms.entry(lambda.clone()).or_default();
        slot.add(poly);
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&mut self, other: &SchurPolynomial) {
        for (l, p) in &other.terms {
            self.add_term(l.clone(), p);
        }
    }

    pub fn get(&self, lambda: &Partition) -> BivariatePoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms with partitions in decreasing lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BivariatePoly)> {
        self.terms.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lexicographically largest partition with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&Partition, &BivariatePoly)> {
        self.terms.iter().next_back()
    }

    pub fn map_coeffs(&self, f: impl Fn(&BivariatePoly) -> BivariatePoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (l, p) in &self.terms {
            out.add_term(l.clone(), &f(p));
        }
        out
    }

    /// Every coefficient is a nonnegative integer polynomial.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(BivariatePoly::is_nonnegative)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(l, p)| json!({"index": l.parts(), "poly": p.to_json()}))
            .collect();
        json!({"degree": self.degree, "basis": "schur", "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (degree, terms) = json_frame(v, "schur")?;
        let mut out = Self::zero(degree);
        for term in terms {
            let parts: Vec<usize> = serde_json::from_value(term["index"].clone())
                .map_err(|e| Error::Parse(format!("schur index: {e}")))?;
            let lambda = Partition::new(parts)?;
            if lambda.size() != degree {
                return Err(Error::Parse(format!("partition {lambda} has the wrong size")));
            }
            out.add_term(lambda, &BivariatePoly::from_json(&term["poly"])?);
        }
        Ok(out)
    }
}

fn json_frame<'a>(v: &'a Value, basis: &str) -> Result<(usize, &'a Vec<Value>)> {
    if v["basis"] != basis {
        return Err(Error::Parse(format!("expected basis {basis:?}")));
    }
    let degree = v["degree"].as_u64().ok_or_else(|| Error::Parse("missing degree".into()))? as usize;
    let terms = v["terms"].as_array().ok_or_else(|| Error::Parse("missing terms".into()))?;
    Ok((degree, terms))
}

impl fmt::Display for SchurPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|(l, p)| format!("({p})*s{l}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

type Tally = HashMap<(u64, u32, u32), i64>;

fn filling_sum(delta: &Diagram, filter: FillingFilter, weigh_q: bool, weigh_t: bool) -> Result<QSymPolynomial> {
    let n = delta.len();
    let tally: Tally = fold_standard_fillings(
        delta,
        &filter,
        Tally::new,
        |acc, w| {
            let sigma = signature_of(w).minus_bits();
            let q = if weigh_q { inv_of(delta, w) as u32 } else { 0 };
            let t = if weigh_t { maj_of_mask(delta, descent_mask(delta, w)) as u32 } else { 0 };
            *acc.entry((sigma, q, t)).or_insert(0) += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )?;
    let mut out = QSymPolynomial::zero(n);
    let len = n.saturating_sub(1);
    for ((sigma, q, t), c) in tally {
        out.add_term(Signature::from_bits(len, sigma), &BivariatePoly::monomial(q, t, c));
    }
    Ok(out)
}

/// `Σ_T q^inv(T) t^maj(T) F_σ(rw T)` over all standard fillings of `delta`.
pub fn macdonald_f(delta: &Diagram) -> Result<QSymPolynomial> {
    filling_sum(delta, FillingFilter::All, true, true)
}

/// The `q = 0` specialization: only inversion-free fillings contribute.
pub fn hall_littlewood_f(delta: &Diagram) -> Result<QSymPolynomial> {
    filling_sum(delta, FillingFilter::InvZero, false, true)
}

/// `Σ F_σ` over inversion-free standard fillings with descent set exactly `gamma`.
pub fn r_polynomial_f(gamma: &Diagram, delta: &Diagram) -> Result<QSymPolynomial> {
    if !gamma.is_subset_of(delta) {
        return Err(Error::NotSubdiagram);
    }
    filling_sum(delta, FillingFilter::InvZeroDescents(gamma.clone()), false, false)
}

/// Signatures of the SYT of shape `λ`, cached.
pub fn syt_signatures(lambda: &Partition) -> Arc<Vec<Signature>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<Vec<Signature>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let sigs: Arc<Vec<Signature>> =
        Arc::new(standard_tableaux(lambda).iter().map(|t| signature_of(&t.reading_word())).collect());
    cache.lock().unwrap().insert(lambda.clone(), sigs.clone());
    sigs
}

/// Replace each `s_λ` by `Σ_{T ∈ SYT(λ)} F_σ(T)`.
pub fn schur_to_f(s: &SchurPolynomial) -> QSymPolynomial {
    let mut out = QSymPolynomial::zero(s.degree);
    for (lambda, poly) in &s.terms {
        for &sigma in syt_signatures(lambda).iter() {
            out.add_term(sigma, poly);
        }
    }
    out
}

/// Partial sums of `μ`, excluding the total.
fn partial_sums_mask(mu: &Partition) -> u64 {
    let mut mask = 0u64;
    let mut acc = 0;
    for &p in &mu.parts()[..mu.len().saturating_sub(1)] {
        acc += p;
        mask |= 1 << (acc - 1);
    }
    mask
}

/// The unique Schur expansion of `f`, or an error when `f` is not Schur-expandable.
pub fn schur_from_f(f: &QSymPolynomial) -> Result<SchurPolynomial> {
    let n = f.degree;
    let mut out = SchurPolynomial::zero(n);
    if f.is_zero() {
        return Ok(out);
    }
    limits::check_filling(n)?;
    let partitions = Partition::all(n);
    for (k, lambda) in partitions.iter().enumerate() {
        // Coefficient of x^λ: F_σ contributes iff every descent of σ is a partial sum of λ.
        let allowed = partial_sums_mask(lambda);
        let mut c = BivariatePoly::zero();
        for (sigma, poly) in &f.terms {
            if sigma.minus_bits() & !allowed == 0 {
                c.add(poly);
            }
        }
        for nu in &partitions[..k] {
            let kk = kostka(nu, lambda)? as i64;
            if kk != 0 {
                c.add_scaled(&out.get(nu), -kk);
            }
        }
        if !c.is_zero() {
            out.add_term(lambda.clone(), &c);
        }
    }
    if schur_to_f(&out) != *f {
        return Err(Error::NotSchurSpan("no Schur combination reproduces the F-expansion".into()));
    }
    Ok(out)
}

/// Number of semistandard tableaux of shape `λ` and content `μ`, cached.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::LengthMismatch { expected: lambda.size(), actual: mu.size() });
    }
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), mu.clone());
    if let Some(&hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit);
    }
    let mut filled = vec![0usize; lambda.len()];
    let count = count_ssyt(lambda.parts(), mu.parts(), &mut filled);
    cache.lock().unwrap().insert(key, count);
    Ok(count)
}

/// Add each letter's cells as a horizontal strip, rows filled bottom-up.
fn count_ssyt(shape: &[usize], content: &[usize], filled: &mut Vec<usize>) -> u64 {
    let Some((&m, rest)) = content.split_first() else {
        return u64::from(filled.iter().zip(shape).all(|(a, b)| a == b));
    };
    let mut total = 0;
    let before = filled.clone();
    strip(shape, &before, filled, 0, m, &mut |f| total += count_ssyt(shape, rest, f));
    total
}

fn strip(shape: &[usize], before: &[usize], cur: &mut Vec<usize>, row: usize, left: usize, k: &mut impl FnMut(&mut Vec<usize>)) {
    if left == 0 {
        k(cur);
        return;
    }
    if row == shape.len() {
        return;
    }
    // The new cells in row r sit above old cells of row r-1.
    let cap = if row == 0 { shape[0] } else { shape[row].min(before[row - 1]) };
    let room = cap.saturating_sub(before[row]);
    for add in (0..=room.min(left)).rev() {
        cur[row] = before[row] + add;
        strip(shape, before, cur, row + 1, left - add, k);
    }
    cur[row] = before[row];
}

fn yam_sum(delta: &Diagram, filters: &YamFilters, weigh_q: bool, weigh_t: bool) -> Result<SchurPolynomial> {
    limits::check_filling(delta.len())?;
    let n = delta.len();
    let mut out = SchurPolynomial::zero(n);
    for lambda in Partition::all(n) {
        let mut poly = BivariatePoly::zero();
        for w in generate_yam(&lambda, Some(delta), filters)? {
            let q = if weigh_q { inv_of(delta, &w) as u32 } else { 0 };
            let t = if weigh_t { maj_of_mask(delta, descent_mask(delta, &w)) as u32 } else { 0 };
            poly.add_term(q, t, 1);
        }
        if !poly.is_zero() {
            out.add_term(lambda, &poly);
        }
    }
    Ok(out)
}

/// `Σ_λ Σ t^maj(w) s_λ` over non-jamming, inversion-free `w ∈ Yam(λ)`.
pub fn hl_schur(delta: &Diagram) -> Result<SchurPolynomial> {
    let filters = YamFilters { no_jam: true, inv_zero: true, ..Default::default() };
    yam_sum(delta, &filters, false, true)
}

/// `Σ_λ #{w ∈ Yam(λ) : no jam, inv = 0, Des = γ} s_λ`.
pub fn r_schur(gamma: &Diagram, delta: &Diagram) -> Result<SchurPolynomial> {
    if !gamma.is_subset_of(delta) {
        return Err(Error::NotSubdiagram);
    }
    let filters = YamFilters { no_jam: true, inv_zero: true, descents: Some(gamma.clone()), ..Default::default() };
    yam_sum(delta, &filters, false, false)
}

/// Yamanouchi sum without the jamming filter. With `include_q` every word
/// counts with `q^inv t^maj`; without it only inversion-free words count, with `t^maj`.
pub fn naive_yam_schur(delta: &Diagram, include_q: bool) -> Result<SchurPolynomial> {
    let filters = YamFilters { inv_zero: !include_q, ..Default::default() };
    yam_sum(delta, &filters, include_q, true)
}

/// Swap `q` and `t` in every coefficient.
pub fn swap_qt(f: &QSymPolynomial) -> QSymPolynomial {
    f.map_coeffs(BivariatePoly::swap_qt)
}

/// Coefficient of `q^k` in each Schur coefficient.
pub fn q_slice(s: &SchurPolynomial, k: u32) -> SchurPolynomial {
    s.map_coeffs(|p| p.q_slice(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Cell;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn pd(p: &[usize]) -> Diagram {
        Diagram::from_partition(&part(p))
    }

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn fpoly(n: usize, terms: &[(&str, BivariatePoly)]) -> QSymPolynomial {
        let mut f = QSymPolynomial::zero(n);
        for (s, p) in terms {
            f.add_term(sig(s), p);
        }
        f
    }

    fn m(q: u32, t: u32) -> BivariatePoly {
        BivariatePoly::monomial(q, t, 1)
    }

    #[test]
    fn small_filling_sums() {
        assert_eq!(macdonald_f(&pd(&[1])).unwrap(), fpoly(1, &[("", m(0, 0))]));
        assert_eq!(macdonald_f(&pd(&[2])).unwrap(), fpoly(2, &[("+", m(0, 0)), ("-", m(1, 0))]));
        assert_eq!(macdonald_f(&pd(&[1, 1])).unwrap(), fpoly(2, &[("+", m(0, 0)), ("-", m(0, 1))]));
        assert_eq!(hall_littlewood_f(&pd(&[1, 1])).unwrap(), fpoly(2, &[("+", m(0, 0)), ("-", m(0, 1))]));
        assert_eq!(hall_littlewood_f(&pd(&[2])).unwrap(), fpoly(2, &[("+", m(0, 0))]));
        assert_eq!(hall_littlewood_f(&pd(&[1])).unwrap(), fpoly(1, &[("", m(0, 0))]));
    }

    #[test]
    fn r_polynomial_examples() {
        let row = pd(&[2]);
        assert_eq!(r_polynomial_f(&Diagram::empty(), &row).unwrap(), fpoly(2, &[("+", m(0, 0))]));
        let col = pd(&[1, 1]);
        let top = Diagram::new([Cell::new(0, 1)]).unwrap();
        assert_eq!(r_polynomial_f(&top, &col).unwrap(), fpoly(2, &[("-", m(0, 0))]));
        let bottom = Diagram::new([Cell::new(0, 0)]).unwrap();
        assert!(r_polynomial_f(&bottom, &col).unwrap().is_zero());
        let outside = Diagram::new([Cell::new(5, 5)]).unwrap();
        assert_eq!(r_polynomial_f(&outside, &col), Err(Error::NotSubdiagram));
    }

    #[test]
    fn schur_to_f_examples() {
        assert_eq!(schur_to_f(&SchurPolynomial::single(&part(&[4]))), fpoly(4, &[("+++", m(0, 0))]));
        assert_eq!(schur_to_f(&SchurPolynomial::single(&part(&[1, 1, 1, 1]))), fpoly(4, &[("---", m(0, 0))]));
        assert_eq!(
            schur_to_f(&SchurPolynomial::single(&part(&[2, 2]))),
            fpoly(4, &[("+-+", m(0, 0)), ("-+-", m(0, 0))])
        );
    }

    #[test]
    fn schur_from_f_examples() {
        let s = SchurPolynomial::single(&part(&[2, 2]));
        assert_eq!(schur_from_f(&schur_to_f(&s)).unwrap(), s);
        assert!(matches!(schur_from_f(&fpoly(3, &[("+-", m(0, 0))])), Err(Error::NotSchurSpan(_))));
        assert_eq!(schur_from_f(&QSymPolynomial::zero(3)).unwrap(), SchurPolynomial::zero(3));
    }

    #[test]
    fn schur_round_trip_with_polynomial_coefficients() {
        for n in 1..=6 {
            let mut s = SchurPolynomial::zero(n);
            for (k, lambda) in Partition::all(n).into_iter().enumerate() {
                let mut p = BivariatePoly::zero();
                p.add_term(k as u32 % 3, k as u32 % 2, k as i64 - 2);
                s.add_term(lambda, &p);
            }
            assert_eq!(schur_from_f(&schur_to_f(&s)).unwrap(), s);
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&part(&[3, 2]), &part(&[3, 2])).unwrap(), 1);
        assert_eq!(kostka(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&part(&[2, 2, 2]), &part(&[3, 3])).unwrap(), 0);
        assert_eq!(kostka(&part(&[3, 2, 1]), &part(&[1; 6])).unwrap(), 16);
        assert_eq!(kostka(&part(&[3, 2]), &part(&[2, 2, 1])).unwrap(), 2);
        assert!(kostka(&part(&[2]), &part(&[1])).is_err());
    }

    #[test]
    fn hl_schur_small() {
        let col = hl_schur(&pd(&[1, 1])).unwrap();
        let mut want = SchurPolynomial::zero(2);
        want.add_term(part(&[2]), &m(0, 0));
        want.add_term(part(&[1, 1]), &m(0, 1));
        assert_eq!(col, want);
        assert_eq!(hl_schur(&pd(&[2])).unwrap(), SchurPolynomial::single(&part(&[2])));
        let s33 = hl_schur(&pd(&[3, 3])).unwrap();
        assert!(s33.get(&part(&[2, 2, 2])).is_zero());
        assert_eq!(schur_to_f(&s33), hall_littlewood_f(&pd(&[3, 3])).unwrap());
    }

    #[test]
    fn naive_expansions_split_on_long_pistols() {
        let d = pd(&[2, 2]);
        assert_eq!(schur_to_f(&naive_yam_schur(&d, true).unwrap()), macdonald_f(&d).unwrap());
        let d = pd(&[4]);
        let naive = schur_to_f(&naive_yam_schur(&d, true).unwrap());
        let mac = macdonald_f(&d).unwrap();
        assert_ne!(naive, mac);
        let diff = |f: &QSymPolynomial| f.terms().map(|(s, p)| (*s, p.coeff(2, 0))).collect::<Vec<_>>();
        assert_ne!(diff(&naive), diff(&mac));
    }

    #[test]
    fn symmetry_fails_on_the_diagonal_pair() {
        let d = Diagram::new([Cell::new(0, 0), Cell::new(1, 1)]).unwrap();
        let h = macdonald_f(&d).unwrap();
        assert_eq!(h, fpoly(2, &[("+", m(0, 0)), ("-", m(1, 0))]));
        assert_eq!(d.conjugate(), d);
        assert_ne!(h, swap_qt(&macdonald_f(&d.conjugate()).unwrap()));
    }

    #[test]
    fn json_round_trip_and_order() {
        let mut s = SchurPolynomial::zero(3);
        s.add_term(part(&[2, 1]), &m(0, 1));
        s.add_term(part(&[3]), &BivariatePoly::constant(2));
        let v = s.to_json();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"basis":"schur","degree":3,"terms":[{"index":[3],"poly":[[0,0,2]]},{"index":[2,1],"poly":[[0,1,1]]}]}"#
        );
        assert_eq!(SchurPolynomial::from_json(&v).unwrap(), s);
        let f = schur_to_f(&s);
        assert_eq!(QSymPolynomial::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn poly_display() {
        let mut p = BivariatePoly::one();
        p.add_term(1, 2, -3);
        p.add_term(0, 1, 1);
        assert_eq!(p.to_string(), "1 + t - 3*q*t^2");
    }
}
