use crate::braid::{commute, permutation, BraidWord};
use crate::error::{Error, Result};
use crate::union_find::DisjointSets;

/// A torus-covering-chart without black vertices: degree `m` and the two
/// boundary braids. `a` is the monodromy along the first circle direction,
/// `b` along the second. They must commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusCoveringChart {
    a: BraidWord,
    b: BraidWord,
}

impl TorusCoveringChart {
    pub fn new(a: BraidWord, b: BraidWord) -> Result<TorusCoveringChart> {
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch {
                left: a.degree(),
                right: b.degree(),
            });
        }
        if !commute(&a, &b)? {
            return Err(Error::NonCommutingBoundary);
        }
        Ok(TorusCoveringChart { a, b })
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn a(&self) -> &BraidWord {
        &self.a
    }

    pub fn b(&self) -> &BraidWord {
        &self.b
    }

    /// Always zero: only the black-vertex-free case is representable.
    pub fn black_vertices(&self) -> usize {
        0
    }

    /// Orbits (1-based, sorted) of `⟨perm(a), perm(b)⟩` on the `m` sheets.
    pub fn sheet_orbits(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut sets = DisjointSets::new(m);
        for p in [permutation(&self.a), permutation(&self.b)] {
            for s in 0..m {
                sets.merge(s, p.apply(s));
            }
        }
        sets.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|s| s + 1).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::make_word;

    #[test]
    fn rejects_non_commuting() {
        let a = make_word(3, &[1]).unwrap();
        let b = make_word(3, &[2]).unwrap();
        assert_eq!(TorusCoveringChart::new(a, b), Err(Error::NonCommutingBoundary));
    }

    #[test]
    fn rejects_degree_mismatch() {
        let a = make_word(3, &[1]).unwrap();
        let b = make_word(2, &[1]).unwrap();
        assert!(matches!(
            TorusCoveringChart::new(a, b),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn orbits() {
        let t = TorusCoveringChart::new(make_word(4, &[1, 1, 1]).unwrap(), BraidWord::identity(4)).unwrap();
        assert_eq!(t.sheet_orbits(), vec![vec![1, 2], vec![3], vec![4]]);
        let t = TorusCoveringChart::new(make_word(3, &[1, 2]).unwrap(), BraidWord::identity(3)).unwrap();
        assert_eq!(t.sheet_orbits(), vec![vec![1, 2, 3]]);
        assert_eq!(t.black_vertices(), 0);
    }
}
