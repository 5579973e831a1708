//! Branched-cover bookkeeping for a closed movie of degree `n`.
//!
//! The movie describes a simple `n`-fold branched cover of the 2-sphere with
//! one branch point per band, so `χ = 2n − #bands`. Sheets are named by strand
//! position at the start of each slice; a band at position `p` with generator
//! `i` joins the two sheets that the prefix `W[0..p)` carries to positions `i`
//! and `i + 1`.

use crate::braid::{permutation, BraidWord};
use crate::error::{Error, Result};
use crate::union_find::DisjointSets;

use super::movie::{require_valid, ChartMovie};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGenus {
    /// 1-based sheets, sorted.
    pub sheets: Vec<usize>,
    pub chi: i64,
    pub genus: i64,
}

/// Everything the invariants report needs, computed from one validation pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSummary {
    pub degree: usize,
    pub black_vertices: usize,
    pub euler_characteristic: i64,
    pub components: Vec<ComponentGenus>,
}

impl CoverSummary {
    pub fn genus_list(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.genus).collect()
    }
}

/// The two 0-based sheets each band joins, in event order.
pub fn band_sheet_pairs(m: &ChartMovie) -> Vec<(usize, usize)> {
    m.bands()
        .map(|(i, band)| {
            let slice = &m.slices()[i];
            let prefix = BraidWord::from_letters_unchecked(
                slice.degree(),
                slice.letters()[..band.position.min(slice.len())].to_vec(),
            );
            let at = permutation(&prefix).inverse();
            (at.apply(band.generator - 1), at.apply(band.generator))
        })
        .collect()
}

fn components_unchecked(m: &ChartMovie) -> Vec<Vec<usize>> {
    let mut sets = DisjointSets::new(m.degree());
    for (x, y) in band_sheet_pairs(m) {
        sets.merge(x, y);
    }
    sets.classes()
}

pub fn black_count(m: &ChartMovie) -> Result<usize> {
    Ok(require_valid(m)?.black_vertices)
}

/// Partition of the sheets `1..=n` into closed-surface components.
pub fn closure_components(m: &ChartMovie) -> Result<Vec<Vec<usize>>> {
    require_valid(m)?;
    Ok(components_unchecked(m)
        .into_iter()
        .map(|c| c.into_iter().map(|s| s + 1).collect())
        .collect())
}

pub fn euler_characteristic(m: &ChartMovie) -> Result<i64> {
    let blacks = black_count(m)?;
    Ok(2 * m.degree() as i64 - blacks as i64)
}

pub fn genus_per_component(m: &ChartMovie) -> Result<Vec<ComponentGenus>> {
    Ok(analyze(m)?.components)
}

/// Validates `m` once and computes black count, χ, components and genera.
pub fn analyze(m: &ChartMovie) -> Result<CoverSummary> {
    let report = require_valid(m)?;
    let components = genera_from_bands(m.degree(), &band_sheet_pairs(m))?;
    let euler_characteristic = 2 * m.degree() as i64 - report.black_vertices as i64;
    debug_assert_eq!(
        euler_characteristic,
        components.iter().map(|c| c.chi).sum::<i64>()
    );
    Ok(CoverSummary {
        degree: m.degree(),
        black_vertices: report.black_vertices,
        euler_characteristic,
        components,
    })
}

/// Per-component `χ_c = 2·|sheets| − |bands|` and genus from 0-based band
/// sheet pairs.
fn genera_from_bands(degree: usize, pairs: &[(usize, usize)]) -> Result<Vec<ComponentGenus>> {
    let mut sets = DisjointSets::new(degree);
    for &(x, y) in pairs {
        sets.merge(x, y);
    }
    let classes = sets.classes();
    let mut comp_of = vec![0usize; degree];
    for (c, class) in classes.iter().enumerate() {
        for &s in class {
            comp_of[s] = c;
        }
    }
    let mut bands_in = vec![0i64; classes.len()];
    for &(x, _) in pairs {
        bands_in[comp_of[x]] += 1;
    }
    classes
        .into_iter()
        .enumerate()
        .map(|(c, class)| {
            let chi = 2 * class.len() as i64 - bands_in[c];
            if chi % 2 != 0 {
                return Err(Error::OddEulerCharacteristic { component: c, chi });
            }
            Ok(ComponentGenus {
                sheets: class.into_iter().map(|s| s + 1).collect(),
                chi,
                genus: (2 - chi) / 2,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{make_word, Letter};
    use crate::chart::movie::Event;

    fn e(n: usize) -> BraidWord {
        BraidWord::identity(n)
    }

    fn sigma_loop(times: usize) -> ChartMovie {
        let mut m = ChartMovie::starting_at(e(2));
        for _ in 0..times {
            m.push_insert(0, Letter::pos(1));
            m.push_delete(0);
        }
        m
    }

    #[test]
    fn single_handle() {
        let m = sigma_loop(1);
        assert_eq!(black_count(&m).unwrap(), 2);
        assert_eq!(closure_components(&m).unwrap(), vec![vec![1, 2]]);
        assert_eq!(euler_characteristic(&m).unwrap(), 2);
    }

    #[test]
    fn no_events() {
        let m = ChartMovie::new(2, vec![e(2), e(2)], vec![Event::Eq]).unwrap();
        assert_eq!(black_count(&m).unwrap(), 0);
        assert_eq!(closure_components(&m).unwrap(), vec![vec![1], vec![2]]);
        assert_eq!(euler_characteristic(&m).unwrap(), 4);
        let g = genus_per_component(&m).unwrap();
        assert_eq!(g.iter().map(|c| c.genus).collect::<Vec<_>>(), vec![0, 0]);
    }

    #[test]
    fn trivial_torus_of_degree_two() {
        let m = sigma_loop(2);
        let s = analyze(&m).unwrap();
        assert_eq!(s.euler_characteristic, 0);
        assert_eq!(s.genus_list(), vec![1]);
    }

    #[test]
    fn odd_component_chi_is_an_error() {
        assert_eq!(
            genera_from_bands(2, &[(0, 1)]),
            Err(Error::OddEulerCharacteristic { component: 0, chi: 3 })
        );
        let g = genera_from_bands(3, &[(0, 2), (2, 0)]).unwrap();
        assert_eq!(g[0].sheets, vec![1, 3]);
        assert_eq!(g[0].genus, 0);
    }

    #[test]
    fn invalid_movie_is_refused() {
        let m = ChartMovie::new(2, vec![e(2), make_word(2, &[1]).unwrap()], vec![Event::Eq]).unwrap();
        assert!(matches!(analyze(&m), Err(Error::InvalidMovie(_))));
        assert!(matches!(black_count(&m), Err(Error::InvalidMovie(_))));
    }

    #[test]
    fn band_sheets_follow_prefix_permutation() {
        let mut m = ChartMovie::starting_at(make_word(3, &[1]).unwrap());
        m.push_insert(1, Letter::pos(2));
        // after σ1, position 2 holds sheet 1 and position 3 holds sheet 3
        assert_eq!(band_sheet_pairs(&m), vec![(0, 2)]);
    }
}
