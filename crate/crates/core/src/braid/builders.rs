//! The named braids used when braiding a torus-covering-link over the sphere.
//!
//! All builders emit positive words in `B_{2m}` except [`garside_delta`],
//! which lives in `B_m`.

use super::word::{BraidWord, Letter};
use crate::error::{Error, Result};

/// `Π^m_i = σ_{m+1} ⋯ σ_{m+i}` (ascending), or when `primed`,
/// `Π′^m_i = σ_{m-1} ⋯ σ_{m-i}` (descending).
pub fn build_pi(m: usize, i: usize, primed: bool) -> Result<BraidWord> {
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    if i == 0 || i >= m {
        return Err(Error::RangeError { m, i });
    }
    let letters = (1..=i)
        .map(|k| Letter::pos(if primed { m - k } else { m + k }))
        .collect();
    Ok(BraidWord::from_letters_unchecked(2 * m, letters))
}

/// `Δ_m = Π^m_{m-1} ⋯ Π^m_1`, or the primed analogue. Empty for `m = 1`.
pub fn build_delta(m: usize, primed: bool) -> BraidWord {
    assert!(m >= 1, "m must be positive");
    let mut letters = Vec::with_capacity(m * (m - 1) / 2);
    for i in (1..m).rev() {
        letters.extend_from_slice(pi_unchecked(m, i, primed).letters());
    }
    BraidWord::from_letters_unchecked(2 * m, letters)
}

/// `Θ_m = σ_m Π′_{m-1} Π_{m-1} σ_m ⋯ σ_m Π′_1 Π_1 σ_m`.
pub fn build_theta(m: usize) -> BraidWord {
    assert!(m >= 1, "m must be positive");
    let mut letters = Vec::with_capacity(m * m);
    for i in (1..m).rev() {
        letters.push(Letter::pos(m));
        letters.extend_from_slice(pi_unchecked(m, i, true).letters());
        letters.extend_from_slice(pi_unchecked(m, i, false).letters());
    }
    letters.push(Letter::pos(m));
    BraidWord::from_letters_unchecked(2 * m, letters)
}

/// `Π′_{m-1} Π_{m-1} ⋯ Π′_1 Π_1`: `Θ_m` with its `σ_m` letters removed.
///
/// Equal in the braid group to `Δ′_m Δ_m` since the two factors act on
/// disjoint strands.
pub fn interleaved_deltas(m: usize) -> BraidWord {
    assert!(m >= 1, "m must be positive");
    let mut letters = Vec::with_capacity(m * (m - 1));
    for i in (1..m).rev() {
        letters.extend_from_slice(pi_unchecked(m, i, true).letters());
        letters.extend_from_slice(pi_unchecked(m, i, false).letters());
    }
    BraidWord::from_letters_unchecked(2 * m, letters)
}

/// Garside's half twist of `B_m`: `(σ_1 ⋯ σ_{m-1})(σ_1 ⋯ σ_{m-2}) ⋯ σ_1`.
pub fn garside_delta(m: usize) -> BraidWord {
    assert!(m >= 1, "m must be positive");
    let mut letters = Vec::with_capacity(m * (m - 1) / 2);
    for top in (1..m).rev() {
        letters.extend((1..=top).map(Letter::pos));
    }
    BraidWord::from_letters_unchecked(m, letters)
}

fn pi_unchecked(m: usize, i: usize, primed: bool) -> BraidWord {
    build_pi(m, i, primed).expect("block index checked by caller")
}
