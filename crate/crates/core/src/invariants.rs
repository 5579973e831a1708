//! Classification of torus-covering-charts into the spun families and the
//! braid-index bounds that follow from the compiled degree.

use std::fmt;

use crate::braid::{is_equal, make_word, permutation, BraidWord};
use crate::chart::{analyze, ComponentGenus, TorusCoveringChart};
use crate::compile::compile;
use crate::error::Result;

/// Default bound on `|j|`, `|k|` in the symmetry-spun power search.
pub const DEFAULT_SEARCH_BOUND: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    TrivialFamily,
    Spun,
    TurnedSpun,
    SymmetrySpun,
    Unknown,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::TrivialFamily => "trivial-family",
            Kind::Spun => "spun",
            Kind::TurnedSpun => "turned-spun",
            Kind::SymmetrySpun => "symmetry-spun",
            Kind::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Both boundary braids are trivial.
    Trivial,
    /// `b = e`; `a` is the spun classical braid.
    Spun { knot: BraidWord },
    /// `b = a` or `b = a⁻¹`.
    TurnedSpun { knot: BraidWord, inverted: bool },
    /// `a = β^j`, `b = β^k`.
    SymmetrySpun { beta: BraidWord, j: i64, k: i64 },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub witness: Witness,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind={}", self.kind.name())?;
        let signed = |w: &BraidWord| {
            w.to_signed().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        match &self.witness {
            Witness::Trivial | Witness::None => writeln!(f, "witness=none"),
            Witness::Spun { knot } => writeln!(f, "witness=a={}", signed(knot)),
            Witness::TurnedSpun { knot, inverted } => {
                writeln!(f, "witness=a={} b={}", signed(knot), if *inverted { "a^-1" } else { "a" })
            }
            Witness::SymmetrySpun { beta, j, k } => {
                writeln!(f, "witness=beta={} j={j} k={k}", signed(beta))
            }
        }
    }
}

fn equal(u: &BraidWord, v: &BraidWord) -> bool {
    is_equal(u, v).expect("degrees agree inside one chart")
}

/// Finds `β`, `j`, `k` with `a = β^j` and `b = β^k`, `|j|, |k| ≤ bound`.
///
/// Candidates are `a^x b^y`: if `a = β^j` and `b = β^k` then some such product
/// is `β^{gcd(j,k)}`, of which both are again powers. Only equality tests
/// are used, so the answer does not depend on how `a` and `b` are spelled.
fn power_witness(a: &BraidWord, b: &BraidWord, bound: u32) -> Option<(BraidWord, i64, i64)> {
    let bound = bound as i64;
    let e = BraidWord::identity(a.degree());
    let mut pairs: Vec<(i64, i64)> = (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| (x, y)))
        .filter(|&(x, y)| (x, y) != (0, 0))
        .collect();
    pairs.sort_by_key(|&(x, y)| (x.abs() + y.abs(), x.abs(), y.abs(), -x, -y));

    let (pa, pb) = (permutation(a), permutation(b));
    for (x, y) in pairs {
        let beta = a.pow(x).compose(&b.pow(y)).unwrap().free_reduce();
        if equal(&beta, &e) {
            continue;
        }
        let beta_exp = beta.exponent_sum();
        let beta_perm = permutation(&beta);
        let find = |target: &BraidWord, target_perm: &crate::braid::Permutation| {
            (-bound..=bound).find(|&j| {
                if beta_exp * j != target.exponent_sum() {
                    return false;
                }
                let mut p = crate::braid::Permutation::identity(a.degree());
                for _ in 0..j.unsigned_abs() {
                    p = p.then(&beta_perm);
                }
                if j < 0 {
                    p = p.inverse();
                }
                &p == target_perm && equal(&beta.pow(j), target)
            })
        };
        if let (Some(j), Some(k)) = (find(a, &pa), find(b, &pb)) {
            if j <= 0 && k <= 0 {
                return Some((beta.invert(), -j, -k));
            }
            return Some((beta, j, k));
        }
    }
    None
}

/// Tries trivial, spun, turned-spun, then symmetry-spun, in that order.
pub fn classify(t: &TorusCoveringChart, bound: u32) -> Classification {
    let (a, b) = (t.a(), t.b());
    let e = BraidWord::identity(t.degree());
    let a_trivial = equal(a, &e);
    let b_trivial = equal(b, &e);
    if a_trivial && b_trivial {
        return Classification {
            kind: Kind::TrivialFamily,
            witness: Witness::Trivial,
        };
    }
    if b_trivial {
        return Classification {
            kind: Kind::Spun,
            witness: Witness::Spun { knot: a.clone() },
        };
    }
    for inverted in [false, true] {
        let target = if inverted { a.invert() } else { a.clone() };
        if equal(b, &target) {
            return Classification {
                kind: Kind::TurnedSpun,
                witness: Witness::TurnedSpun {
                    knot: a.clone(),
                    inverted,
                },
            };
        }
    }
    match power_witness(a, b, bound) {
        Some((beta, j, k)) => Classification {
            kind: Kind::SymmetrySpun,
            witness: Witness::SymmetrySpun { beta, j, k },
        },
        None => Classification {
            kind: Kind::Unknown,
            witness: Witness::None,
        },
    }
}

pub mod facts {
    /// The compiled chart has degree `2m`.
    pub const UPPER_2M: &str = "upper-2m";
    /// Surface links of braid index at most three are ribbon.
    pub const INDEX_LE_3_RIBBON: &str = "index-le-3-is-ribbon";
    /// The turned spun torus of a nontrivial classical knot is not ribbon.
    pub const TURNED_SPUN_NOT_RIBBON: &str = "turned-spun-nontrivial-not-ribbon";
    /// Turned spun torus links of a closed m-braid have braid index at most 3m.
    pub const TURNED_SPUN_LE_3M: &str = "turned-spun-le-3m";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidIndexReport {
    pub upper: usize,
    pub lower: usize,
    pub exact: Option<usize>,
    /// The weaker bound known for turned spun links, kept for comparison.
    pub comparative_upper: Option<usize>,
    pub facts: Vec<&'static str>,
}

impl fmt::Display for BraidIndexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
        writeln!(f, "upper={}", self.upper)?;
        writeln!(f, "lower={}", self.lower)?;
        writeln!(f, "exact={}", opt(self.exact))?;
        writeln!(f, "comparative_upper={}", opt(self.comparative_upper))?;
        writeln!(f, "facts={}", self.facts.join(","))
    }
}

/// If `t` is the turned spun torus of the `(2, p)` torus knot, returns `p`.
fn turned_spun_torus_2p(t: &TorusCoveringChart, class: &Classification) -> Option<i64> {
    if t.degree() != 2 || class.kind != Kind::TurnedSpun {
        return None;
    }
    // B_2 is infinite cyclic, so a = σ1^p with p its exponent sum
    let p = t.a().exponent_sum();
    debug_assert!(equal(t.a(), &make_word(2, &vec![p.signum(); p.unsigned_abs() as usize]).unwrap()));
    (p % 2 != 0 && p.abs() >= 3).then_some(p)
}

pub fn braid_index_report(t: &TorusCoveringChart) -> BraidIndexReport {
    let m = t.degree();
    let class = classify(t, DEFAULT_SEARCH_BOUND);
    let mut report = BraidIndexReport {
        upper: 2 * m,
        lower: 1,
        exact: None,
        comparative_upper: None,
        facts: vec![facts::UPPER_2M],
    };
    if class.kind == Kind::TurnedSpun {
        report.comparative_upper = Some(3 * m);
        report.facts.push(facts::TURNED_SPUN_LE_3M);
    }
    if turned_spun_torus_2p(t, &class).is_some() {
        // not ribbon, so the index exceeds three; the compiled degree is four
        report.lower = 4;
        report.facts.push(facts::INDEX_LE_3_RIBBON);
        report.facts.push(facts::TURNED_SPUN_NOT_RIBBON);
    }
    if report.lower == report.upper {
        report.exact = Some(report.upper);
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusCheck {
    /// Every component has genus exactly one and the component count matches
    /// the sheet orbits of `⟨perm(a), perm(b)⟩`.
    pub holds: bool,
    pub components: Vec<ComponentGenus>,
    pub orbits: Vec<Vec<usize>>,
}

pub fn genus_theorem_check(t: &TorusCoveringChart) -> Result<GenusCheck> {
    let compiled = compile(t)?;
    let summary = analyze(&compiled.movie)?;
    let orbits = t.sheet_orbits();
    let holds = summary.components.iter().all(|c| c.genus == 1)
        && summary.components.len() == orbits.len();
    Ok(GenusCheck {
        holds,
        components: summary.components,
        orbits,
    })
}
