//! Builtin torus-covering-charts.

use tckit_core::braid::{make_word, BraidWord};
use tckit_core::chart::TorusCoveringChart;
use tckit_core::Result;

pub const DEFAULT_TORUS_P: i64 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub chart: TorusCoveringChart,
    pub provenance: &'static str,
}

/// Parameters for the two parametrised entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    /// β for `symmetry-spun-beta`; `σ1σ2` in `B_3` when unset.
    pub beta: Option<BraidWord>,
    /// p for `torus-2p`.
    pub p: i64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            beta: None,
            p: DEFAULT_TORUS_P,
        }
    }
}

pub const NAMES: [&str; 6] = [
    "spun-trefoil",
    "turned-spun-trefoil",
    "turned-spun-trefoil-neg",
    "symmetry-spun-beta",
    "torus-2p",
    "trivial-torus",
];

fn sigma1_power(p: i64) -> BraidWord {
    make_word(2, &vec![p.signum(); p.unsigned_abs() as usize]).unwrap()
}

/// Builds the named entry, or `None` for an unknown name.
pub fn entry(name: &str, params: &Params) -> Option<Result<CatalogEntry>> {
    let trefoil = sigma1_power(3);
    let (a, b, provenance) = match name {
        "spun-trefoil" => (trefoil, BraidWord::identity(2), "spun knot of the trefoil"),
        "turned-spun-trefoil" => (trefoil.clone(), trefoil, "turned spun knot of the trefoil"),
        "turned-spun-trefoil-neg" => {
            let inv = trefoil.invert();
            (trefoil, inv, "turned spun knot of the trefoil, inverse boundary")
        }
        "symmetry-spun-beta" => {
            let beta = params
                .beta
                .clone()
                .unwrap_or_else(|| make_word(3, &[1, 2]).unwrap());
            (beta.pow(2), beta, "symmetry-spun torus of beta")
        }
        "torus-2p" => (
            sigma1_power(params.p),
            sigma1_power(params.p),
            "turned spun torus of the (2,p) torus knot",
        ),
        "trivial-torus" => (
            BraidWord::identity(1),
            BraidWord::identity(1),
            "trivial torus of degree one",
        ),
        _ => return None,
    };
    let name = NAMES.iter().find(|n| **n == name).unwrap();
    Some(TorusCoveringChart::new(a, b).map(|chart| CatalogEntry {
        name,
        chart,
        provenance,
    }))
}

pub fn all(params: &Params) -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|n| entry(n, params).unwrap().expect("builtin entries are valid"))
        .collect()
}
