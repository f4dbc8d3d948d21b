//! Row insertion, superstandard tableaux, Yamanouchi words and jamming.

use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Diagram, Partition};
use crate::words::{standardize, unstandardize, Permutation, Word};

/// A tableau in French notation: `rows[0]` is the bottom row.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Rows listed bottom first; empty rows are dropped.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        Tableau { rows: rows.into_iter().filter(|r| !r.is_empty()).collect() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect::<Vec<_>>()).expect("tableau rows weakly decrease")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row reading word: top row first, each row left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Rows weakly increase and columns strictly increase upward.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let shape_ok = self.rows.windows(2).all(|p| p[0].len() >= p[1].len());
        let cols_ok = self.rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(up, down)| up > down));
        rows_ok && shape_ok && cols_ok
    }

    pub fn is_standard(&self) -> bool {
        self.is_semistandard() && crate::words::is_permutation(&self.reading_word())
    }

    /// Row bump: each later letter is treated as larger than an equal earlier one.
    fn insert(&mut self, mut a: u32) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&b| b > a) {
                Some(k) => a = std::mem::replace(&mut row[k], a),
                None => {
                    row.push(a);
                    return r;
                }
            }
        }
        self.rows.push(vec![a]);
        self.rows.len() - 1
    }

    /// Remove the largest entry if it sits at the end of its row.
    pub fn without_max(&self) -> Tableau {
        let max = self.rows.iter().flatten().copied().max();
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&v| Some(v) != max).collect())
            .collect();
        Tableau::from_rows(rows)
    }
}

impl fmt::Display for Tableau {
    /// Rows top first, separated by `/`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().rev().map(|r| Word::new(r.clone()).map(|w| w.to_string()).unwrap_or_default()).collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Insertion and recording tableaux of `w`.
pub fn rsk(w: &[u32]) -> (Tableau, Tableau) {
    let mut p = Tableau::default();
    let mut q = Tableau::default();
    for (k, &a) in w.iter().enumerate() {
        let r = p.insert(a);
        if r == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(k as u32 + 1);
    }
    (p, q)
}

/// `U_λ`: `1..=n` filled consecutively along the rows, bottom row first.
pub fn superstandard(lambda: &Partition) -> Tableau {
    let mut next = 1;
    let rows = lambda
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<u32> = (next..next + len as u32).collect();
            next += len as u32;
            row
        })
        .collect();
    Tableau::from_rows(rows)
}

/// Content of `w` when every suffix has at least as many `i`s as `i+1`s.
pub fn is_yamanouchi(w: &[u32]) -> Option<Partition> {
    let top = w.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; top + 1];
    for &a in w.iter().rev() {
        let a = a as usize;
        if a == 0 {
            return None;
        }
        counts[a] += 1;
        if a > 1 && counts[a] > counts[a - 1] {
            return None;
        }
    }
    Partition::new(counts[1..].to_vec()).ok()
}

/// Whether the Yamanouchi word `w` jams `delta`. Non-Yamanouchi input is
/// replaced by `unst(st(w))` first.
pub fn jams(w: &[u32], delta: &Diagram) -> Result<bool> {
    if w.len() != delta.len() {
        return Err(Error::LengthMismatch { expected: delta.len(), actual: w.len() });
    }
    if w.contains(&0) {
        return Err(Error::InvalidWord);
    }
    let owned;
    let w = if is_yamanouchi(w).is_some() {
        w
    } else {
        owned = unstandardize(&standardize(w));
        &owned[..]
    };
    Ok(jams_yamanouchi(w, delta))
}

fn jams_yamanouchi(w: &[u32], delta: &Diagram) -> bool {
    let top = w.iter().copied().max().unwrap_or(0) as usize;
    // from_last[a][j] is the index of the (j+1)-th-from-last `a`.
    let mut from_last = vec![Vec::new(); top + 1];
    for (k, &a) in w.iter().enumerate().rev() {
        from_last[a as usize].push(k);
    }
    (1..top).any(|i| {
        from_last[i + 1]
            .iter()
            .enumerate()
            .skip(1)
            .filter_map(|(j, &hi_letter)| from_last[i].get(j - 1).map(|&lo_letter| (hi_letter, lo_letter)))
            .any(|(a, b)| delta.span_pistoled(a.min(b), a.max(b)))
    })
}

/// A permutation jams `delta` when its unstandardization does.
pub fn permutation_jams(pi: &Permutation, delta: &Diagram) -> Result<bool> {
    jams(&unstandardize(pi), delta)
}

/// Restrictions applied while growing Yamanouchi words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YamFilters {
    pub no_jam: bool,
    pub inv_zero: bool,
    /// Keep only words whose filling has exactly this descent set.
    pub descents: Option<Diagram>,
    /// Restrict the bottom three rows of partition shapes to their forced forms.
    /// Only used with `no_jam` and `inv_zero` on a partition diagram.
    pub prune_bottom_rows: bool,
}

struct YamBuilder<'a> {
    lambda: Vec<usize>,
    delta: Option<&'a Diagram>,
    no_jam: bool,
    inv_zero: bool,
    descents: Option<u64>,
    row_of: Option<Vec<usize>>,
    word: Vec<u32>,
    counts: Vec<usize>,
    from_last: Vec<Vec<usize>>,
    out: Vec<Vec<u32>>,
}

impl YamBuilder<'_> {
    fn admissible(&self, p: usize, a: usize) -> bool {
        let Some(delta) = self.delta else {
            return true;
        };
        if self.no_jam && a > 1 {
            let j = self.counts[a] - 1;
            if j >= 1 {
                let q = self.from_last[a - 1][j - 1];
                if delta.span_pistoled(p, q) {
                    return false;
                }
            }
        }
        if self.inv_zero && delta.templates_opening_at(p).any(|t| t.is_inversion(&self.word)) {
            return false;
        }
        if let (Some(gamma), Some(b)) = (self.descents, delta.below_index(p)) {
            if (self.word[p] > self.word[b]) != (gamma >> p & 1 == 1) {
                return false;
            }
        }
        if let Some(rows) = &self.row_of {
            if !self.row_shape_ok(p, rows[p]) {
                return false;
            }
        }
        true
    }

    /// Forced forms of the bottom rows of an inversion-free Yamanouchi filling
    /// of a partition: row 0 is all 1s, row 1 is `2^k 1^*`, row 2 is `3^j` then 1s and 2s.
    fn row_shape_ok(&self, p: usize, row: usize) -> bool {
        let a = self.word[p];
        let rows = self.row_of.as_deref().unwrap_or_default();
        let right = (rows.get(p + 1) == Some(&row)).then(|| self.word[p + 1]);
        match row {
            0 => a == 1,
            1 => a <= 2 && !(a == 1 && right == Some(2)),
            2 => a <= 3 && !(a != 3 && right == Some(3)),
            _ => true,
        }
    }

    fn grow(&mut self, p: usize) {
        if p == 0 {
            self.out.push(self.word.clone());
            return;
        }
        let p = p - 1;
        for a in 1..self.lambda.len() + 1 {
            if self.counts[a] >= self.lambda[a - 1] || (a > 1 && self.counts[a] + 1 > self.counts[a - 1]) {
                continue;
            }
            self.word[p] = a as u32;
            self.counts[a] += 1;
            self.from_last[a].push(p);
            if self.admissible(p, a) {
                self.grow(p);
            }
            self.from_last[a].pop();
            self.counts[a] -= 1;
        }
        self.word[p] = 0;
    }
}

/// `Yam(λ)` restricted by `filters`, in lexicographic order.
pub fn generate_yam(lambda: &Partition, delta: Option<&Diagram>, filters: &YamFilters) -> Result<Vec<Word>> {
    let n = lambda.size();
    if delta.is_none() {
        if filters.no_jam {
            return Err(Error::DiagramRequired("no-jam"));
        }
        if filters.inv_zero {
            return Err(Error::DiagramRequired("inv-zero"));
        }
        if filters.descents.is_some() {
            return Err(Error::DiagramRequired("descent"));
        }
    }
    if let Some(d) = delta {
        if d.len() != n {
            return Err(Error::LengthMismatch { expected: d.len(), actual: n });
        }
    }
    let descents = match (&filters.descents, delta) {
        (Some(gamma), Some(d)) => {
            let mask = d.mask_of(gamma)?;
            if mask & !d.mask_of(&d.descent_capable())? != 0 {
                return Ok(Vec::new());
            }
            Some(mask)
        }
        _ => None,
    };
    let row_of = match delta {
        Some(d) if filters.prune_bottom_rows && filters.inv_zero && filters.no_jam && d.as_partition().is_some() => {
            Some(d.cells().iter().map(|c| c.row as usize).collect())
        }
        _ => None,
    };
    let k = lambda.len();
    let mut builder = YamBuilder {
        lambda: lambda.parts().to_vec(),
        delta,
        no_jam: filters.no_jam,
        inv_zero: filters.inv_zero,
        descents,
        row_of,
        word: vec![0; n],
        counts: vec![0; k + 1],
        from_last: vec![Vec::new(); k + 1],
        out: Vec::new(),
    };
    builder.grow(n);
    let mut out = builder.out;
    out.sort_unstable();
    Ok(out.into_iter().map(|w| Word::new(w).expect("letters are positive")).collect())
}

/// `π ∈ SYam_δ(λ)`: `P(π) = U_λ` and `π` does not jam `δ`.
pub fn syam_member(pi: &Permutation, lambda: &Partition, delta: &Diagram) -> Result<bool> {
    if pi.len() != lambda.size() {
        return Err(Error::LengthMismatch { expected: lambda.size(), actual: pi.len() });
    }
    if pi.len() != delta.len() {
        return Err(Error::LengthMismatch { expected: delta.len(), actual: pi.len() });
    }
    Ok(rsk(pi).0 == superstandard(lambda) && !permutation_jams(pi, delta)?)
}

/// `SYam_δ(λ)`, sorted.
pub fn syam(lambda: &Partition, delta: &Diagram) -> Result<Vec<Permutation>> {
    let filters = YamFilters { no_jam: true, ..Default::default() };
    let mut out: Vec<Permutation> = generate_yam(lambda, Some(delta), &filters)?
        .iter()
        .map(|w| standardize(w))
        .collect();
    out.sort();
    Ok(out)
}

/// All standard Young tableaux of shape `λ`, sorted by reading word.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); lambda.len()];
    fill_syt(lambda.parts(), &mut rows, 1, lambda.size() as u32, &mut out);
    out.sort_by_cached_key(|t: &Tableau| t.reading_word());
    out
}

fn fill_syt(shape: &[usize], rows: &mut Vec<Vec<u32>>, v: u32, n: u32, out: &mut Vec<Tableau>) {
    if v > n {
        out.push(Tableau::from_rows(rows.clone()));
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
            rows[r].push(v);
            fill_syt(shape, rows, v + 1, n, out);
            rows[r].pop();
        }
    }
}

/// Number of SYT of shape `λ` by the hook-length formula.
pub fn hook_length_count(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut num: u128 = (1..=lambda.size() as u128).product();
    let mut den: u128 = 1;
    for (y, &len) in lambda.parts().iter().enumerate() {
        for x in 0..len {
            let arm = len - x - 1;
            let leg = conj.part(x) - y - 1;
            den *= (arm + leg + 1) as u128;
        }
    }
    num /= den;
    num
}
