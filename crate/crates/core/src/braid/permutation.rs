use std::fmt;

use super::word::BraidWord;

/// A permutation of strands `0..degree`; `images[s]` is where strand `s` ends up.
///
/// Strands are stored 0-based; [`fmt::Display`] and [`Permutation::image`] use
/// the 1-based numbering of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Returns `None` unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based image of the 1-based strand `strand`.
    pub fn image(&self, strand: usize) -> usize {
        self.images[strand - 1] + 1
    }

    pub fn apply(&self, strand: usize) -> usize {
        self.images[strand]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (s, &t) in self.images.iter().enumerate() {
            inv[t] = s;
        }
        Permutation { images: inv }
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&t| next.images[t]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(s, &t)| s == t)
    }

    /// Swaps whatever sits at positions `p` and `p + 1` (0-based).
    pub(crate) fn swap_positions(&mut self, p: usize) {
        for t in self.images.iter_mut() {
            if *t == p {
                *t = p + 1;
            } else if *t == p + 1 {
                *t = p;
            }
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, t) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", t + 1)?;
        }
        write!(f, "]")
    }
}

/// Symmetric-group image of a braid word: each letter swaps two adjacent
/// strand positions, regardless of sign.
pub fn permutation(u: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(u.degree());
    for l in u.letters() {
        p.swap_positions(l.index - 1);
    }
    p
}
