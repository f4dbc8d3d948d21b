//! Words, permutations, signatures, standardization and strict patterns.
//!
//! Reported index tuples are 1-based.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

/// A word using each of `1..=n` exactly once.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Word {
    pub fn new(letters: impl Into<Vec<u32>>) -> Result<Self> {
        let letters = letters.into();
        if letters.contains(&0) {
            return Err(Error::InvalidWord);
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// Letter multiplicities: entry `i` counts occurrences of `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let top = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0; top];
        for &a in &self.0 {
            counts[a as usize - 1] += 1;
        }
        counts
    }
}

impl Permutation {
    pub fn new(letters: impl Into<Vec<u32>>) -> Result<Self> {
        let letters = letters.into();
        if !is_permutation(&letters) {
            return Err(Error::NotPermutation(letters));
        }
        Ok(Permutation(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(is_permutation(&letters));
        Permutation(letters)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    /// 0-based position of each value: `positions()[v - 1]` is where `v` sits.
    pub fn positions(&self) -> Vec<usize> {
        positions_of(&self.0)
    }
}

pub(crate) fn is_permutation(letters: &[u32]) -> bool {
    let n = letters.len();
    let mut seen = vec![false; n];
    letters.iter().all(|&a| {
        let i = a as usize;
        (1..=n).contains(&i) && !std::mem::replace(&mut seen[i - 1], true)
    })
}

pub(crate) fn positions_of(perm: &[u32]) -> Vec<usize> {
    let mut pos = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        pos[v as usize - 1] = i;
    }
    pos
}

impl Deref for Word {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl Deref for Permutation {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

fn fmt_letters(letters: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.iter().all(|&a| a <= 9) {
        for a in letters {
            write!(f, "{a}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = letters.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn parse_letters(s: &str) -> Result<Vec<u32>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::Parse(format!("bad word literal {s:?}"));
    if s.contains(',') {
        s.split(',').map(|t| t.parse::<u32>().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}

/// A string of signs; bit `j` of `minus` set means position `j + 1` is `-`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    len: u8,
    minus: u64,
}

impl Signature {
    pub fn from_signs(signs: &[i8]) -> Self {
        let mut minus = 0;
        for (j, &s) in signs.iter().enumerate() {
            if s < 0 {
                minus |= 1 << j;
            }
        }
        Signature { len: signs.len() as u8, minus }
    }

    pub(crate) fn from_bits(len: usize, minus: u64) -> Self {
        Signature { len: len as u8, minus }
    }

    pub fn all_plus(len: usize) -> Self {
        Signature { len: len as u8, minus: 0 }
    }

    pub fn all_minus(len: usize) -> Self {
        Signature { len: len as u8, minus: mask(len) }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub(crate) fn minus_bits(&self) -> u64 {
        self.minus
    }

    /// Sign at 1-based position `i`: `+1` or `-1`.
    pub fn get(&self, i: usize) -> Option<i8> {
        (1..=self.len()).contains(&i).then(|| {
            if self.minus >> (i - 1) & 1 == 1 {
                -1
            } else {
                1
            }
        })
    }

    pub fn signs(&self) -> Vec<i8> {
        (1..=self.len()).map(|i| self.get(i).unwrap()).collect()
    }

    /// 1-based positions holding `-`.
    pub fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|j| self.minus >> j & 1 == 1).map(|j| j + 1)
    }

    pub fn negate(&self) -> Self {
        Signature { len: self.len, minus: !self.minus & mask(self.len()) }
    }

    pub fn reverse(&self) -> Self {
        let n = self.len();
        let mut minus = 0;
        for j in 0..n {
            if self.minus >> j & 1 == 1 {
                minus |= 1 << (n - 1 - j);
            }
        }
        Signature { len: self.len, minus }
    }

    /// Window `start..start+len` (1-based start), clipped to what exists.
    pub fn window(&self, start: usize, len: usize) -> Self {
        let start0 = start.saturating_sub(1);
        let end = (start0 + len).min(self.len());
        let len = end.saturating_sub(start0);
        Signature {
            len: len as u8,
            minus: (self.minus >> start0.min(63)) & mask(len),
        }
    }
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Ord for Signature {
    /// String order on the `+`/`-` rendering, `+` before `-`.
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len) as usize;
        for j in 0..common {
            let a = self.minus >> j & 1;
            let b = other.minus >> j & 1;
            if a != b {
                return a.cmp(&b);
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len() {
            f.write_str(if self.minus >> j & 1 == 1 { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<i8> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '−' => Ok(-1),
                _ => Err(Error::Parse(format!("bad signature {s:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(Signature::from_signs(&signs))
    }
}

/// Inverse-descent signature of a permutation slice (no validation).
#[inline]
pub(crate) fn signature_of(perm: &[u32]) -> Signature {
    let n = perm.len();
    let mut pos = [0usize; 64];
    for (i, &v) in perm.iter().enumerate() {
        pos[v as usize - 1] = i;
    }
    let mut minus = 0u64;
    for i in 0..n.saturating_sub(1) {
        if pos[i] > pos[i + 1] {
            minus |= 1 << i;
        }
    }
    Signature::from_bits(n.saturating_sub(1), minus)
}

/// `+` at `i` iff `i` appears before `i + 1`.
pub fn signature(pi: &Permutation) -> Result<Signature> {
    if pi.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    if pi.len() > 64 {
        return Err(Error::BoundExceeded { n: pi.len(), bound: 64 });
    }
    Ok(signature_of(pi))
}

/// Relabel with `1..=n`, smaller letters first, equal letters left to right.
pub fn standardize(w: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0u32; w.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation(out)
}

/// Collapse `st(w)` so that `i + 1` shares the letter of `i` whenever `i` comes first.
pub fn unstandardize(w: &[u32]) -> Word {
    let pi = standardize(w);
    let pos = positions_of(&pi);
    let mut value = vec![0u32; pi.len()];
    for v in 0..pi.len() {
        value[v] = match v {
            0 => 1,
            _ => value[v - 1] + u32::from(pos[v] < pos[v - 1]),
        };
    }
    Word(pi.iter().map(|&v| value[v as usize - 1]).collect())
}

/// Subword of letters in `set`, in order.
pub fn restrict(w: &[u32], set: &BTreeSet<u32>) -> Word {
    Word(w.iter().copied().filter(|a| set.contains(a)).collect())
}

/// `i ↦ n + 1 - i`.
pub fn reverse_values(pi: &Permutation) -> Permutation {
    let n = pi.len() as u32;
    Permutation(pi.iter().map(|&v| n + 1 - v).collect())
}

/// One strict occurrence of a pattern: letters `p_j + shift` at 1-based `indices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternOccurrence {
    pub shift: u32,
    pub indices: Vec<usize>,
}

/// All strict occurrences of `pattern` in `pi`, ordered by shift.
///
/// The occurring values are `{shift+1, …, shift+m}`, so each shift admits at
/// most one occurrence: the positions of those values, which must increase.
pub fn strict_pattern_find(pi: &[u32], pattern: &[u32]) -> Vec<PatternOccurrence> {
    let (n, m) = (pi.len(), pattern.len());
    if m == 0 || m > n {
        return Vec::new();
    }
    let pos = positions_of(pi);
    (0..=(n - m) as u32)
        .filter_map(|k| {
            let idx: Vec<usize> = pattern.iter().map(|&p| pos[(p + k) as usize - 1]).collect();
            idx.windows(2).all(|w| w[0] < w[1]).then(|| PatternOccurrence {
                shift: k,
                indices: idx.into_iter().map(|i| i + 1).collect(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn signatures_of_figure_words() {
        assert_eq!(signature(&perm("483691257")).unwrap().to_string(), "+--+-+-+");
        assert_eq!(signature(&perm("3214")).unwrap().to_string(), "--+");
        assert_eq!(signature(&Permutation::identity(5)).unwrap(), Signature::all_plus(4));
        assert_eq!(signature(&Permutation::identity(0)), Err(Error::EmptyPermutation));
    }

    #[test]
    fn standardization_examples() {
        assert_eq!(standardize(&word("38631242")), perm("48751263"));
        assert_eq!(standardize(&word("17215")), perm("15324"));
        assert_eq!(standardize(&perm("53482617")), perm("53482617"));
    }

    #[test]
    fn unstandardization_examples() {
        assert_eq!(unstandardize(&perm("48751263")), word("24321121"));
        assert_eq!(unstandardize(&word("17215")), word("13212"));
        assert_eq!(unstandardize(&Permutation::identity(4)), word("1111"));
    }

    #[test]
    fn restriction() {
        let set: BTreeSet<u32> = [6, 7, 8, 9].into();
        assert_eq!(restrict(&perm("483691257"), &set), word("8697"));
        let all: BTreeSet<u32> = (1..=9).collect();
        assert_eq!(restrict(&perm("483691257"), &all).letters(), perm("483691257").letters());
        assert!(restrict(&perm("483691257"), &BTreeSet::new()).is_empty());
    }

    #[test]
    fn strict_patterns() {
        let occ = strict_pattern_find(&perm("53482617"), &[2, 3, 1]);
        assert!(occ.contains(&PatternOccurrence { shift: 1, indices: vec![2, 3, 5] }));
        let pi = perm("12543");
        assert_eq!(
            strict_pattern_find(&pi, &pi),
            vec![PatternOccurrence { shift: 0, indices: vec![1, 2, 3, 4, 5] }]
        );
        assert!(strict_pattern_find(&perm("12"), &[1, 2, 3]).is_empty());
    }

    #[test]
    fn value_reversal() {
        assert_eq!(reverse_values(&perm("2143")), perm("3412"));
        assert_eq!(reverse_values(&perm("53482617")), perm("46517382"));
        let pi = perm("53482617");
        assert_eq!(reverse_values(&reverse_values(&pi)), pi);
    }

    #[test]
    fn word_literals() {
        assert_eq!(word("323121").letters(), &[3, 2, 3, 1, 2, 1]);
        assert_eq!(word("10,2,1").letters(), &[10, 2, 1]);
        assert_eq!(Word::new(vec![10, 2, 1]).unwrap().to_string(), "10,2,1");
        assert!("1a2".parse::<Word>().is_err());
        assert!("1,0".parse::<Word>().is_err());
        assert!("112".parse::<Permutation>().is_err());
    }

    #[test]
    fn signature_helpers() {
        let s: Signature = "+--+".parse().unwrap();
        assert_eq!(s.negate().to_string(), "-++-");
        assert_eq!(s.reverse().to_string(), "+--+");
        assert_eq!(s.window(2, 2).to_string(), "--");
        assert_eq!(s.window(3, 5).to_string(), "-+");
        assert_eq!(s.descents().collect::<Vec<_>>(), vec![2, 3]);
        let a: Signature = "+-".parse().unwrap();
        let b: Signature = "-+".parse().unwrap();
        assert!(a < b);
    }
}
