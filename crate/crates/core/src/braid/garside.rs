//! Left normal form in the Garside structure of `B_n`.
//!
//! Used only as an independent second decision procedure for braid equality;
//! the normal form itself is not part of the public surface.
//!
//! A simple (permutation) braid is stored by its permutation, `perm[p]` being
//! the final position of the strand starting at `p`.

use super::word::{check_degree, BraidWord, Sign};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Simple(Vec<usize>);

impl Simple {
    fn identity(n: usize) -> Simple {
        Simple((0..n).collect())
    }

    fn delta(n: usize) -> Simple {
        Simple((0..n).map(|p| n - 1 - p).collect())
    }

    fn generator(n: usize, p: usize) -> Simple {
        let mut s = Simple::identity(n);
        s.0.swap(p, p + 1);
        s
    }

    /// `σ_p⁻¹ Δ`, the complement making `σ_p⁻¹ = (σ_p⁻¹ Δ) Δ⁻¹`.
    fn left_complement_of_generator(n: usize, p: usize) -> Simple {
        let mut s = Simple::delta(n);
        s.0.swap(p, p + 1);
        s
    }

    /// Conjugation by the half twist.
    fn tau(&self) -> Simple {
        let n = self.0.len();
        Simple((0..n).map(|p| n - 1 - self.0[n - 1 - p]).collect())
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(p, &q)| p == q)
    }

    fn is_delta(&self) -> bool {
        let n = self.0.len();
        self.0.iter().enumerate().all(|(p, &q)| q == n - 1 - p)
    }

    fn inverse_images(&self) -> Vec<usize> {
        let mut inv = vec![0; self.0.len()];
        for (p, &q) in self.0.iter().enumerate() {
            inv[q] = p;
        }
        inv
    }
}

/// Moves crossings from the front of `b` to the back of `a` until the pair is
/// left-weighted: every generator starting `b` already finishes `a`.
fn left_weight(mut a: Simple, mut b: Simple) -> (Simple, Simple) {
    let n = a.0.len();
    let mut a_inv = a.inverse_images();
    loop {
        let movable = (0..n.saturating_sub(1))
            .find(|&p| b.0[p] > b.0[p + 1] && a_inv[p] < a_inv[p + 1]);
        let Some(p) = movable else { break };
        // a ← a σ_p
        let (s, t) = (a_inv[p], a_inv[p + 1]);
        a.0[s] = p + 1;
        a.0[t] = p;
        a_inv.swap(p, p + 1);
        // b ← σ_p⁻¹ b
        b.0.swap(p, p + 1);
    }
    (a, b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct NormalForm {
    delta_power: i64,
    factors: Vec<Simple>,
}

fn normal_form(u: &BraidWord) -> NormalForm {
    let n = u.degree();
    if n == 1 {
        return NormalForm {
            delta_power: 0,
            factors: Vec::new(),
        };
    }

    // Rewrite as Δ^{-k} P with P a product of simples. Each stored factor is
    // τ^{k at push time} of its value; the true value is τ^{k final} of that.
    let mut k: i64 = 0;
    let mut stored: Vec<Simple> = Vec::with_capacity(u.len());
    for l in u.letters() {
        let p = l.index - 1;
        let (f, neg) = match l.sign {
            Sign::Pos => (Simple::generator(n, p), false),
            Sign::Neg => (Simple::left_complement_of_generator(n, p), true),
        };
        stored.push(if k % 2 == 0 { f } else { f.tau() });
        if neg {
            k += 1;
        }
    }

    let mut factors: Vec<Simple> = Vec::with_capacity(stored.len());
    for s in stored {
        let f = if k % 2 == 0 { s } else { s.tau() };
        if f.is_identity() {
            continue;
        }
        factors.push(Simple::identity(n));
        let mut carry = f;
        for j in (0..factors.len() - 1).rev() {
            let (a, b) = left_weight(factors[j].clone(), carry);
            factors[j + 1] = b;
            carry = a;
        }
        factors[0] = carry;
        while factors.last().is_some_and(Simple::is_identity) {
            factors.pop();
        }
    }

    let leading = factors.iter().take_while(|f| f.is_delta()).count();
    factors.drain(..leading);
    NormalForm {
        delta_power: leading as i64 - k,
        factors,
    }
}

/// Decides `u = v` by comparing left normal forms.
pub fn is_equal_garside(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    check_degree(u, v)?;
    Ok(normal_form(u) == normal_form(v))
}
