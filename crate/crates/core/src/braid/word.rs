use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// One Artin generator `σ_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(index: usize) -> Letter {
        Letter {
            index,
            sign: Sign::Pos,
        }
    }

    pub fn neg(index: usize) -> Letter {
        Letter {
            index,
            sign: Sign::Neg,
        }
    }

    /// `2` is `σ₂`, `-2` is `σ₂⁻¹`. Zero has no letter.
    pub fn from_signed(value: i64) -> Option<Letter> {
        match value {
            0 => None,
            v if v > 0 => Some(Letter::pos(v as usize)),
            v => Some(Letter::neg(v.unsigned_abs() as usize)),
        }
    }

    pub fn to_signed(self) -> i64 {
        self.index as i64 * self.sign.value()
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// A word in the Artin generators of the braid group on `degree` strands.
///
/// Words are never reduced implicitly; [`BraidWord::free_reduce`] is the only
/// normalization and must be asked for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    degree: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(degree: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= degree) {
            return Err(Error::IndexOutOfRange {
                index: bad.to_signed(),
                degree,
            });
        }
        Ok(BraidWord { degree, letters })
    }

    /// The empty word `e` in `B_degree`.
    pub fn identity(degree: usize) -> BraidWord {
        assert!(degree >= 1, "braid degree must be positive");
        BraidWord {
            degree,
            letters: Vec::new(),
        }
    }

    pub(crate) fn from_letters_unchecked(degree: usize, letters: Vec<Letter>) -> BraidWord {
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index < degree));
        BraidWord { degree, letters }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        check_degree(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_letters_unchecked(self.degree, letters))
    }

    pub fn invert(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord::from_letters_unchecked(self.degree, letters)
    }

    /// `self` repeated `exponent` times, using the inverse for negative exponents.
    pub fn pow(&self, exponent: i64) -> BraidWord {
        let base = if exponent < 0 { self.invert() } else { self.clone() };
        let n = exponent.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_letters_unchecked(self.degree, letters)
    }

    /// Deletes adjacent pairs `σ_i^ε σ_i^{-ε}` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord::from_letters_unchecked(self.degree, out)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    /// Adds `before` trivial strands on the left and `after` on the right.
    pub fn iota(&self, before: usize, after: usize) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .map(|l| Letter {
                index: l.index + before,
                sign: l.sign,
            })
            .collect();
        BraidWord::from_letters_unchecked(self.degree + before + after, letters)
    }

    /// Mirror image with every crossing reversed: `σ_i^ε ↦ σ_{n-i}^ε`, order kept.
    ///
    /// This is conjugation by the half twist, so it is an involutive
    /// automorphism of the braid group.
    pub fn flip_star(&self) -> BraidWord {
        let n = self.degree;
        let letters = self
            .letters
            .iter()
            .map(|l| Letter {
                index: n - l.index,
                sign: l.sign,
            })
            .collect();
        BraidWord::from_letters_unchecked(n, letters)
    }

    /// Largest and smallest generator index used, if any.
    pub fn index_range(&self) -> Option<(usize, usize)> {
        let min = self.letters.iter().map(|l| l.index).min()?;
        let max = self.letters.iter().map(|l| l.index).max()?;
        Some((min, max))
    }

    pub(crate) fn insert(&mut self, position: usize, letter: Letter) {
        self.letters.insert(position, letter);
    }

    pub(crate) fn remove(&mut self, position: usize) -> Letter {
        self.letters.remove(position)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match l.sign {
                Sign::Pos => write!(f, "s{}", l.index)?,
                Sign::Neg => write!(f, "S{}", l.index)?,
            }
        }
        Ok(())
    }
}

pub(crate) fn check_degree(u: &BraidWord, v: &BraidWord) -> Result<()> {
    if u.degree != v.degree {
        return Err(Error::DegreeMismatch {
            left: u.degree,
            right: v.degree,
        });
    }
    Ok(())
}

/// Builds a word from signed indices (`-2` is `σ₂⁻¹`).
pub fn make_word(degree: usize, letters: &[i64]) -> Result<BraidWord> {
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut out = Vec::with_capacity(letters.len());
    for &v in letters {
        match Letter::from_signed(v) {
            Some(l) if l.index < degree => out.push(l),
            _ => return Err(Error::IndexOutOfRange { index: v, degree }),
        }
    }
    Ok(BraidWord::from_letters_unchecked(degree, out))
}

pub fn compose(u: &BraidWord, v: &BraidWord) -> Result<BraidWord> {
    u.compose(v)
}

pub fn invert(u: &BraidWord) -> BraidWord {
    u.invert()
}

pub fn free_reduce(u: &BraidWord) -> BraidWord {
    u.free_reduce()
}

pub fn exponent_sum(u: &BraidWord) -> i64 {
    u.exponent_sum()
}

pub fn iota(u: &BraidWord, before: usize, after: usize) -> BraidWord {
    u.iota(before, after)
}

pub fn flip_star(u: &BraidWord) -> BraidWord {
    u.flip_star()
}
