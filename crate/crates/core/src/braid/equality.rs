use super::artin::try_is_equal_artin;
use super::garside::is_equal_garside;
use super::permutation::permutation;
use super::word::{check_degree, BraidWord};
use crate::error::Result;

/// Decides whether `u` and `v` are the same element of `B_n`.
///
/// Both words are freely reduced and a shared literal prefix and suffix is
/// cancelled (the braid group is cancellative). What remains is rejected
/// early on a differing exponent sum or permutation, and otherwise settled by
/// the free-group action. Free-group images of pseudo-Anosov braids grow
/// exponentially, so once an image passes [`ARTIN_IMAGE_BUDGET`] letters the
/// question goes to the Garside normal form instead.
pub const ARTIN_IMAGE_BUDGET: usize = 1 << 20;

pub fn is_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    check_degree(u, v)?;
    let u = u.free_reduce();
    let v = v.free_reduce();
    let (a, b) = (u.letters(), v.letters());
    let prefix = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    let (a, b) = (&a[prefix..], &b[prefix..]);
    let suffix = a
        .iter()
        .rev()
        .zip(b.iter().rev())
        .take_while(|(x, y)| x == y)
        .count();
    let a = BraidWord::from_letters_unchecked(u.degree(), a[..a.len() - suffix].to_vec());
    let b = BraidWord::from_letters_unchecked(v.degree(), b[..b.len() - suffix].to_vec());
    if a == b {
        return Ok(true);
    }
    if a.exponent_sum() != b.exponent_sum() || permutation(&a) != permutation(&b) {
        return Ok(false);
    }
    match try_is_equal_artin(&a, &b, ARTIN_IMAGE_BUDGET) {
        Some(answer) => Ok(answer),
        None => is_equal_garside(&a, &b),
    }
}

pub fn commute(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    check_degree(u, v)?;
    is_equal(&u.compose(v)?, &v.compose(u)?)
}
