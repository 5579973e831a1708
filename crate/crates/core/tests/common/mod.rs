#![allow(dead_code)]

pub mod cover_oracle;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tckit_core::braid::{make_word, BraidWord};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut ChaCha8Rng, degree: usize, len: usize) -> BraidWord {
    if degree < 2 {
        return BraidWord::identity(degree.max(1));
    }
    let letters: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..degree as i64);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    make_word(degree, &letters).unwrap()
}

/// Applies `moves` random braid-group relations to `w`, producing a word that
/// represents the same element by construction.
pub fn rewrite(rng: &mut ChaCha8Rng, w: &BraidWord, moves: usize) -> BraidWord {
    let n = w.degree() as i64;
    let mut l = w.to_signed();
    if n < 2 {
        return w.clone();
    }
    for _ in 0..moves {
        match rng.gen_range(0..5) {
            0 => {
                // insert a cancelling pair
                let p = rng.gen_range(0..=l.len());
                let g = rng.gen_range(1..n) * if rng.gen_bool(0.5) { 1 } else { -1 };
                l.splice(p..p, [g, -g]);
            }
            1 => {
                // delete a cancelling pair
                if let Some(p) = (0..l.len().saturating_sub(1)).find(|&p| l[p] == -l[p + 1]) {
                    l.drain(p..p + 2);
                }
            }
            2 => {
                // far commutation
                let cands: Vec<usize> = (0..l.len().saturating_sub(1))
                    .filter(|&p| (l[p].abs() - l[p + 1].abs()).abs() >= 2)
                    .collect();
                if !cands.is_empty() {
                    let p = cands[rng.gen_range(0..cands.len())];
                    l.swap(p, p + 1);
                }
            }
            3 => {
                // braid relation on same-signed triples, either sign
                let cands: Vec<usize> = (0..l.len().saturating_sub(2))
                    .filter(|&p| {
                        l[p] == l[p + 2]
                            && (l[p].abs() - l[p + 1].abs()).abs() == 1
                            && l[p].signum() == l[p + 1].signum()
                    })
                    .collect();
                if !cands.is_empty() {
                    let p = cands[rng.gen_range(0..cands.len())];
                    let (x, y) = (l[p], l[p + 1]);
                    l[p] = y;
                    l[p + 1] = x;
                    l[p + 2] = y;
                }
            }
            _ => {
                // insert σ_i σ_j σ_i σ_j⁻¹ σ_i⁻¹ σ_j⁻¹ (a relator)
                let i = rng.gen_range(1..n);
                let j = if i + 1 < n && (i == 1 || rng.gen_bool(0.5)) { i + 1 } else { i - 1 };
                if j >= 1 {
                    let p = rng.gen_range(0..=l.len());
                    l.splice(p..p, [i, j, i, -j, -i, -j]);
                }
            }
        }
    }
    make_word(w.degree(), &l).unwrap()
}
