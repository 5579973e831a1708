//! Artin's faithful action of the braid group on the free group.
//!
//! Free generators are `1..=n`, inverses are negated. `σ_i` acts by
//! `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`. Two braids are equal exactly
//! when they send every free generator to the same reduced word.

use super::word::{check_degree, BraidWord, Sign};
use crate::error::Result;

/// A freely reduced word in the free group.
pub type FreeWord = Vec<i32>;

fn append(out: &mut FreeWord, w: &[i32]) {
    let mut k = 0;
    while k < w.len() && out.last() == Some(&-w[k]) {
        out.pop();
        k += 1;
    }
    out.extend_from_slice(&w[k..]);
}

fn append_inverse(out: &mut FreeWord, w: &[i32]) {
    let mut k = w.len();
    while k > 0 && out.last() == Some(&w[k - 1]) {
        out.pop();
        k -= 1;
    }
    out.extend(w[..k].iter().rev().map(|x| -x));
}

/// Images of the free generators under the automorphism induced by `u`.
///
/// Image length can grow exponentially in `u.len()`; see
/// [`artin_images_bounded`].
pub fn artin_images(u: &BraidWord) -> Vec<FreeWord> {
    artin_images_bounded(u, usize::MAX).expect("unbounded")
}

/// Like [`artin_images`], but gives up once any image is longer than `budget`.
pub fn artin_images_bounded(u: &BraidWord, budget: usize) -> Option<Vec<FreeWord>> {
    let mut images: Vec<FreeWord> = (1..=u.degree() as i32).map(|g| vec![g]).collect();
    for l in u.letters() {
        let i = l.index - 1;
        let a = std::mem::take(&mut images[i]);
        let b = std::mem::take(&mut images[i + 1]);
        let mut conj = Vec::with_capacity(2 * a.len().max(b.len()) + a.len().min(b.len()));
        match l.sign {
            Sign::Pos => {
                // (a b a⁻¹, a)
                append(&mut conj, &a);
                append(&mut conj, &b);
                append_inverse(&mut conj, &a);
                images[i] = conj;
                images[i + 1] = a;
            }
            Sign::Neg => {
                // (b, b⁻¹ a b)
                append_inverse(&mut conj, &b);
                append(&mut conj, &a);
                append(&mut conj, &b);
                images[i] = b;
                images[i + 1] = conj;
            }
        }
        if images[i].len().max(images[i + 1].len()) > budget {
            return None;
        }
    }
    Some(images)
}

/// Decides `u = v` in the braid group by comparing free-group actions.
pub fn is_equal_artin(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    check_degree(u, v)?;
    Ok(artin_images(u) == artin_images(v))
}

/// Compares free-group actions unless an image outgrows `budget`.
pub(crate) fn try_is_equal_artin(u: &BraidWord, v: &BraidWord, budget: usize) -> Option<bool> {
    Some(artin_images_bounded(u, budget)? == artin_images_bounded(v, budget)?)
}
