//! Fillings of diagrams and the `inv`, `maj`, and descent statistics.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits;
use crate::shapes::{Cell, Diagram};
use crate::words::{Permutation, Word};

/// Values attached to a diagram's cells, stored in reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling {
    diagram: Diagram,
    values: Vec<u32>,
}

/// `T_δ(w)`: the filling of `delta` whose reading word is `w`.
pub fn fill(delta: &Diagram, w: &[u32]) -> Result<Filling> {
    if w.len() != delta.len() {
        return Err(Error::LengthMismatch { expected: delta.len(), actual: w.len() });
    }
    if w.contains(&0) {
        return Err(Error::InvalidWord);
    }
    Ok(Filling { diagram: delta.clone(), values: w.to_vec() })
}

impl Filling {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    /// Reading word.
    pub fn word(&self) -> Word {
        Word::new(self.values.clone()).expect("fillings hold positive values")
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, cell: Cell) -> Option<u32> {
        self.diagram.position(cell).map(|i| self.values[i])
    }

    pub fn is_standard(&self) -> bool {
        crate::words::is_permutation(&self.values)
    }

    pub fn descent_cells(&self) -> Diagram {
        self.diagram.submask(descent_mask(&self.diagram, &self.values))
    }

    pub fn maj(&self) -> usize {
        maj_of_mask(&self.diagram, descent_mask(&self.diagram, &self.values))
    }

    pub fn inv(&self) -> usize {
        inv_of(&self.diagram, &self.values)
    }
}

/// Descents as a bitmask over reading positions. Strict: equal letters never descend.
#[inline]
pub(crate) fn descent_mask(delta: &Diagram, w: &[u32]) -> u64 {
    let mut mask = 0;
    for i in 0..w.len() {
        if let Some(b) = delta.below_index(i) {
            if w[i] > w[b] {
                mask |= 1 << i;
            }
        }
    }
    mask
}

#[inline]
pub(crate) fn maj_of_mask(delta: &Diagram, mask: u64) -> usize {
    (0..delta.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| 1 + delta.leg_at(i))
        .sum()
}

#[inline]
pub(crate) fn inv_of(delta: &Diagram, w: &[u32]) -> usize {
    delta.templates().iter().filter(|t| t.is_inversion(w)).count()
}

pub fn descent_cells(delta: &Diagram, w: &[u32]) -> Diagram {
    delta.submask(descent_mask(delta, w))
}

/// `Σ (1 + leg(c))` over `c ∈ γ`; depends only on `(δ, γ)`.
pub fn maj_of_descents(delta: &Diagram, gamma: &Diagram) -> Result<usize> {
    Ok(maj_of_mask(delta, delta.mask_of(gamma)?))
}

pub fn maj(delta: &Diagram, w: &[u32]) -> usize {
    maj_of_mask(delta, descent_mask(delta, w))
}

pub fn inv(delta: &Diagram, w: &[u32]) -> usize {
    inv_of(delta, w)
}

/// Which standard fillings an enumeration keeps. The restrictions are
/// pushed into the search so rejected prefixes are never extended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FillingFilter {
    All,
    InvZero,
    /// `inv = 0` and descent set exactly `γ`.
    InvZeroDescents(Diagram),
}

struct Walker<'a> {
    delta: &'a Diagram,
    inv_zero: bool,
    descents: Option<u64>,
    word: Vec<u32>,
    used: u64,
}

impl<'a> Walker<'a> {
    fn new(delta: &'a Diagram, filter: &FillingFilter) -> Result<Option<Self>> {
        let (inv_zero, descents) = match filter {
            FillingFilter::All => (false, None),
            FillingFilter::InvZero => (true, None),
            FillingFilter::InvZeroDescents(gamma) => {
                let mask = delta.mask_of(gamma)?;
                let capable = delta.mask_of(&delta.descent_capable())?;
                if mask & !capable != 0 {
                    return Ok(None);
                }
                (true, Some(mask))
            }
        };
        Ok(Some(Walker { delta, inv_zero, descents, word: vec![0; delta.len()], used: 0 }))
    }

    #[inline]
    fn admissible(&self, p: usize) -> bool {
        if let (Some(gamma), Some(a)) = (self.descents, self.delta.above_index(p)) {
            let descends = self.word[a] > self.word[p];
            if descends != (gamma >> a & 1 == 1) {
                return false;
            }
        }
        !self.inv_zero || !self.delta.templates_closing_at(p).any(|t| t.is_inversion(&self.word))
    }

    fn walk(&mut self, p: usize, visit: &mut impl FnMut(&[u32])) {
        let n = self.delta.len();
        if p == n {
            visit(&self.word);
            return;
        }
        for v in 1..=n as u32 {
            let bit = 1u64 << (v - 1);
            if self.used & bit != 0 {
                continue;
            }
            self.word[p] = v;
            if self.admissible(p) {
                self.used |= bit;
                self.walk(p + 1, visit);
                self.used &= !bit;
            }
        }
    }
}

/// Visit every standard filling passing `filter`, in lexicographic reading-word order.
pub fn for_each_standard_filling(
    delta: &Diagram,
    filter: &FillingFilter,
    mut visit: impl FnMut(&[u32]),
) -> Result<()> {
    limits::check_filling(delta.len())?;
    if let Some(mut walker) = Walker::new(delta, filter)? {
        walker.walk(0, &mut visit);
    }
    Ok(())
}

/// Parallel fold over the filtered standard fillings, split on the first letter.
/// `merge` must be associative and commutative.
pub fn fold_standard_fillings<A, I, F, M>(
    delta: &Diagram,
    filter: &FillingFilter,
    init: I,
    fold: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[u32]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    limits::check_filling(delta.len())?;
    let n = delta.len();
    if n == 0 || Walker::new(delta, filter)?.is_none() {
        let mut acc = init();
        if n == 0 {
            fold(&mut acc, &[]);
        }
        return Ok(acc);
    }
    let acc = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut walker = Walker::new(delta, filter).ok().flatten().expect("checked above");
            walker.word[0] = first;
            if walker.admissible(0) {
                walker.used = 1 << (first - 1);
                walker.walk(1, &mut |w| fold(&mut acc, w));
            }
            acc
        })
        .reduce(&init, &merge);
    Ok(acc)
}

/// All standard fillings passing `filter`, as reading words in lexicographic order.
pub fn enumerate_standard_fillings(delta: &Diagram, filter: &FillingFilter) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for_each_standard_filling(delta, filter, |w| out.push(Permutation::from_vec_unchecked(w.to_vec())))?;
    Ok(out)
}
