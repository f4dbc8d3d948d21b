//! The elementary dual equivalences `d_i`, their cyclic variants `d̃_i`, and `D_i^δ`.

use crate::error::{Error, Result};
use crate::shapes::Diagram;
use crate::words::Permutation;

fn check_color(i: usize, n: usize) -> Result<()> {
    if i < 2 || i + 1 > n {
        return Err(Error::ColorOutOfRange { color: i, degree: n });
    }
    Ok(())
}

/// Positions of `i-1`, `i`, `i+1` (0-based), and the values met in position order.
#[inline]
fn locate(w: &[u32], i: usize) -> ([usize; 3], [u32; 3]) {
    let v = i as u32;
    let mut found = [0usize; 3];
    for (k, &a) in w.iter().enumerate() {
        if a + 1 >= v && a <= v + 1 {
            found[(a + 1 - v) as usize] = k;
        }
    }
    let mut pos = found;
    pos.sort_unstable();
    let vals = pos.map(|p| w[p]);
    (pos, vals)
}

#[inline]
pub(crate) fn d_slice(w: &mut [u32], i: usize) {
    let v = i as u32;
    let (pos, vals) = locate(w, i);
    let middle = vals[1];
    let (a, b) = if middle == v - 1 {
        (v, v + 1)
    } else if middle == v + 1 {
        (v, v - 1)
    } else {
        return;
    };
    for p in pos {
        if w[p] == a {
            w[p] = b;
        } else if w[p] == b {
            w[p] = a;
        }
    }
}

#[inline]
pub(crate) fn d_tilde_slice(w: &mut [u32], i: usize) {
    let v = i as u32;
    let (pos, vals) = locate(w, i);
    let new = match vals {
        // `i` first: rotate it to the end.
        [x, y, z] if x == v => [y, z, x],
        // `i` last: rotate it to the front.
        [x, y, z] if z == v => [z, x, y],
        _ => return,
    };
    for (p, a) in pos.into_iter().zip(new) {
        w[p] = a;
    }
}

#[inline]
pub(crate) fn big_d_slice(w: &mut [u32], i: usize, delta: &Diagram) {
    let (pos, _) = locate(w, i);
    if delta.span_pistoled(pos[0], pos[2]) {
        d_tilde_slice(w, i);
    } else {
        d_slice(w, i);
    }
}

/// Haiman's `d_i`: fixes `π` when `i` lies between `i-1` and `i+1`, otherwise
/// swaps `i` with whichever neighbour value is not in the middle.
pub fn d(i: usize, pi: &Permutation) -> Result<Permutation> {
    check_color(i, pi.len())?;
    let mut w = pi.to_vec();
    d_slice(&mut w, i);
    Ok(Permutation::from_vec_unchecked(w))
}

/// `d̃_i`: cyclically rotates `i-1, i, i+1` when `i` is first or last among them.
pub fn d_tilde(i: usize, pi: &Permutation) -> Result<Permutation> {
    check_color(i, pi.len())?;
    let mut w = pi.to_vec();
    d_tilde_slice(&mut w, i);
    Ok(Permutation::from_vec_unchecked(w))
}

/// `D_i^δ`: `d̃_i` when `i-1, i, i+1` sit in one pistol of `T_δ(π)`, otherwise `d_i`.
pub fn big_d(i: usize, delta: &Diagram, pi: &Permutation) -> Result<Permutation> {
    if pi.len() != delta.len() {
        return Err(Error::LengthMismatch { expected: delta.len(), actual: pi.len() });
    }
    check_color(i, pi.len())?;
    let mut w = pi.to_vec();
    big_d_slice(&mut w, i, delta);
    Ok(Permutation::from_vec_unchecked(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Cell;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn fig7() -> Diagram {
        Diagram::new(
            [(0, 2), (1, 2), (2, 2), (0, 1), (1, 1), (2, 1), (2, 0), (3, 0)]
                .map(|(x, y)| Cell::new(x, y)),
        )
        .unwrap()
    }

    #[test]
    fn d_examples() {
        assert_eq!(d(2, &p("21345")).unwrap(), p("31245"));
        assert_eq!(d(3, &p("31245")).unwrap(), p("41235"));
        assert_eq!(d(2, &p("123")).unwrap(), p("123"));
        assert_eq!(d(1, &p("123")), Err(Error::ColorOutOfRange { color: 1, degree: 3 }));
        assert!(d(3, &p("123")).is_err());
    }

    #[test]
    fn d_tilde_examples() {
        assert_eq!(d_tilde(3, &p("4123")).unwrap(), p("3142"));
        assert_eq!(d_tilde(2, &p("4123")).unwrap(), p("4123"));
        assert_eq!(d_tilde(3, &p("3142")).unwrap(), p("4123"));
    }

    #[test]
    fn big_d_examples() {
        let delta = fig7();
        let pi = p("53482617");
        assert_eq!(big_d(3, &delta, &pi).unwrap(), p("54283617"));
        assert_eq!(big_d(5, &delta, &pi).unwrap(), p("63482517"));
        assert!(big_d(3, &Diagram::empty(), &pi).is_err());
    }

    #[test]
    fn involutions_on_s5() {
        let delta = fig7();
        let mut w: Vec<u32> = (1..=8).collect();
        let mut seen = 0;
        loop {
            let pi = Permutation::new(w.clone()).unwrap();
            for i in 2..8 {
                assert_eq!(d(i, &d(i, &pi).unwrap()).unwrap(), pi);
                assert_eq!(d_tilde(i, &d_tilde(i, &pi).unwrap()).unwrap(), pi);
                assert_eq!(big_d(i, &delta, &big_d(i, &delta, &pi).unwrap()).unwrap(), pi);
            }
            seen += 1;
            if seen > 3000 || !next_permutation(&mut w) {
                break;
            }
        }
    }

    fn next_permutation(w: &mut [u32]) -> bool {
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
            return false;
        };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
        w.swap(i - 1, j);
        w[i..].reverse();
        true
    }
}
