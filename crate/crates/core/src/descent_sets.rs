//! Realizable descent sets and the leading Yamanouchi word.

use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, Partition};
use crate::words::Word;

/// Whether some inversion-free filling of `delta` has descent set exactly `gamma`.
///
/// Rejects `gamma` when a cell of it has nothing below it in `delta`, or when
/// some columns `x1 < x2` and rows `lo < hi` have `(x1, lo) ∈ δ∖γ`,
/// `(x1, hi) ∉ γ`, `(x1, lo+1..hi) ⊆ γ` strictly inside, and `(x2, lo+1..=hi) ⊆ γ`.
pub fn is_realizable(gamma: &Diagram, delta: &Diagram) -> Result<bool> {
    if !gamma.is_subset_of(delta) {
        return Err(Error::NotSubdiagram);
    }
    if gamma.cells().iter().any(|c| !delta.contains(c.below())) {
        return Ok(false);
    }
    let Some(rows) = delta.rows() else {
        return Ok(true);
    };
    let cols: Vec<i32> = delta.columns().into_iter().collect();
    let in_gamma = |x: i32, y: i32| gamma.contains(Cell::new(x, y));
    for (k, &x1) in cols.iter().enumerate() {
        for lo in rows.clone() {
            if !delta.contains(Cell::new(x1, lo)) || in_gamma(x1, lo) {
                continue;
            }
            // Grow hi while the column-x1 interior stays inside γ.
            let mut hi = lo + 1;
            while hi <= *rows.end() + 1 {
                if !in_gamma(x1, hi) {
                    let blocked = cols[k + 1..]
                        .iter()
                        .any(|&x2| (lo + 1..=hi).all(|y| in_gamma(x2, y)));
                    if blocked {
                        return Ok(false);
                    }
                    break;
                }
                hi += 1;
            }
        }
    }
    Ok(true)
}

/// `w_{γ,δ}`: 1 on `δ∖γ`, and on `γ` one more than the value directly below,
/// filled from the bottom row up.
pub fn leading_yam_word(gamma: &Diagram, delta: &Diagram) -> Result<Word> {
    if !is_realizable(gamma, delta)? {
        return Err(Error::NotRealizable);
    }
    let mut values = vec![1u32; delta.len()];
    let mut order: Vec<usize> = (0..delta.len()).collect();
    order.sort_by_key(|&i| delta.cells()[i].row);
    for i in order {
        let c = delta.cells()[i];
        if gamma.contains(c) {
            let b = delta.position(c.below()).expect("realizable descents sit on cells");
            values[i] = values[b] + 1;
        }
    }
    Word::new(values)
}

/// Content of the leading Yamanouchi word: the lexicographically largest
/// Schur index of `R_{γ,δ}`, which has coefficient 1.
pub fn leading_term(gamma: &Diagram, delta: &Diagram) -> Result<Partition> {
    let w = leading_yam_word(gamma, delta)?;
    Partition::new(w.content())
}
