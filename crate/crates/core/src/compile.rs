//! Compiles a torus-covering-chart of degree `m` into a closed chart movie of
//! degree `2m`.
//!
//! Notation below: `B = ι^m_0(b)` and `A = ι^m_0(a)` act on strands `1..m`,
//! `B* = ι^0_m(b̄*)` on strands `m+1..2m`, `D = (Δ′_m)⁻¹ Δ_m⁻¹`.
//!
//! The assembled movie is
//!
//! ```text
//! e ─EQ→ B·B⁻¹ ─(H_b)·B⁻¹→ B*·B⁻¹ ─EQ→ B*·A·B⁻¹·A⁻¹
//!   ─B*·A·(−H_b*)·A⁻¹→ B*·A·B*⁻¹·A⁻¹ ─EQ→ e
//! ```
//!
//! The second EQ holds exactly because `a` and `b` commute; the last because
//! `A` and `B*` use disjoint generators.

use std::fmt;

use crate::braid::{
    build_delta, build_theta, commute, interleaved_deltas, is_equal, BraidWord, Letter,
};
use crate::chart::{Band, BandOp, ChartMovie, Event, Location, TorusCoveringChart, ValidationReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    BLoops,
    Handle,
    ALoops,
    MirrorHandle,
    Closing,
}

impl BlockKind {
    pub const ALL: [BlockKind; 5] = [
        BlockKind::BLoops,
        BlockKind::Handle,
        BlockKind::ALoops,
        BlockKind::MirrorHandle,
        BlockKind::Closing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BlockKind::BLoops => "b-loops",
            BlockKind::Handle => "h-b",
            BlockKind::ALoops => "a-loops",
            BlockKind::MirrorHandle => "mirror-h-b",
            BlockKind::Closing => "closing",
        }
    }

    pub fn from_name(name: &str) -> Option<BlockKind> {
        BlockKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A contiguous, inclusive range of event indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub first_event: usize,
    pub last_event: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledChart {
    pub source: TorusCoveringChart,
    pub movie: ChartMovie,
    pub blocks: Vec<Block>,
}

/// The 1-handle chart `H_b` as an open segment from `ι^m_0(b)` to
/// `ι^0_m(b̄*)`, with `2m` bands all on generator `m`.
pub fn handle_movie(b: &BraidWord) -> ChartMovie {
    let m = b.degree();
    let lifted = b.iota(0, m);
    let d = build_delta(m, true).invert().compose(&build_delta(m, false).invert()).unwrap();
    let deltas = build_delta(m, true).compose(&build_delta(m, false)).unwrap();
    let theta = build_theta(m);
    let star = b.flip_star();
    let cat = |parts: &[&BraidWord]| -> BraidWord {
        parts
            .iter()
            .fold(BraidWord::identity(2 * m), |acc, w| acc.compose(w).unwrap())
    };

    let mut movie = ChartMovie::starting_at(lifted.clone());
    movie.push_eq(cat(&[&lifted, &d, &deltas]));
    movie.push_eq(cat(&[&lifted, &d, &interleaved_deltas(m)]));

    // grow Π′_{m-1}Π_{m-1} ⋯ Π′_1Π_1 into Θ_m one σ_m at a time
    let mut pos = lifted.len() + d.len();
    for i in (1..m).rev() {
        movie.push_insert(pos, Letter::pos(m));
        pos += 1 + 2 * i;
    }
    movie.push_insert(pos, Letter::pos(m));
    debug_assert_eq!(movie.last(), &cat(&[&lifted, &d, &theta]));

    movie.push_eq(cat(&[&d, &star.iota(0, m), &theta]));
    movie.push_eq(cat(&[&d, &theta, &star.iota(m, 0)]));

    let mut pos = d.len();
    for i in (1..m).rev() {
        movie.push_delete(pos);
        pos += 2 * i;
    }
    movie.push_delete(pos);
    movie.push_eq(star.iota(m, 0));
    movie
}

/// The orientation-reversed mirror `−(H)*` of a segment: every slice is
/// inverted, event order is kept, and each band's letter is inverted at the
/// mirrored position.
pub fn reverse_mirror(segment: &ChartMovie) -> ChartMovie {
    let slices: Vec<BraidWord> = segment.slices().iter().map(BraidWord::invert).collect();
    let events = segment
        .events()
        .iter()
        .enumerate()
        .map(|(i, e)| match *e {
            Event::Eq => Event::Eq,
            Event::Band(b) => {
                let len = segment.slices()[i].len();
                let position = match b.op {
                    BandOp::Insert => len - b.position,
                    BandOp::Delete => len - 1 - b.position,
                };
                Event::Band(Band {
                    position,
                    sign: b.sign.flip(),
                    ..b
                })
            }
        })
        .collect();
    ChartMovie::new(segment.degree(), slices, events).expect("mirroring keeps the movie shape")
}

pub fn compile(chart: &TorusCoveringChart) -> Result<CompiledChart> {
    let (a, b) = (chart.a(), chart.b());
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    if !commute(a, b)? {
        return Err(Error::NonCommutingBoundary);
    }
    let m = chart.degree();
    let e = BraidWord::identity(2 * m);
    let big_a = a.iota(0, m);
    let big_b = b.iota(0, m);
    let star = b.flip_star().iota(m, 0);
    let cat = |parts: &[&BraidWord]| -> BraidWord {
        parts.iter().fold(e.clone(), |acc, w| acc.compose(w).unwrap())
    };

    let handle = handle_movie(b);
    let mut movie = ChartMovie::starting_at(e.clone());
    let mut blocks = Vec::with_capacity(BlockKind::ALL.len());
    let mut mark = |movie: &ChartMovie, kind: BlockKind, start: usize| {
        blocks.push(Block {
            kind,
            first_event: start,
            last_event: movie.events().len() - 1,
        });
    };

    let start = movie.events().len();
    movie.push_eq_always(cat(&[&big_b, &big_b.invert()]));
    mark(&movie, BlockKind::BLoops, start);

    let start = movie.events().len();
    movie.extend(handle.embed(&e, &big_b.invert())?);
    mark(&movie, BlockKind::Handle, start);

    let start = movie.events().len();
    movie.push_eq_always(cat(&[&star, &big_a, &big_b.invert(), &big_a.invert()]));
    mark(&movie, BlockKind::ALoops, start);

    let start = movie.events().len();
    movie.extend(reverse_mirror(&handle).embed(&cat(&[&star, &big_a]), &big_a.invert())?);
    mark(&movie, BlockKind::MirrorHandle, start);

    let start = movie.events().len();
    movie.push_eq_always(e);
    mark(&movie, BlockKind::Closing, start);

    Ok(CompiledChart {
        source: chart.clone(),
        movie,
        blocks,
    })
}

/// Certifies the isotopy arrows of the handle chain as braid identities in
/// `B_{2m}`:
///
/// 1. `(Δ′_m)⁻¹ Δ_m⁻¹ Δ′_m Δ_m = e`
/// 2. `Θ_m` without its `σ_m` letters equals `Δ′_m Δ_m`
/// 3. `ι^m_0(b) (Δ′_m)⁻¹ Δ_m⁻¹ = (Δ′_m)⁻¹ Δ_m⁻¹ ι^m_0(b̄*)`
/// 4. `ι^m_0(b̄*) Θ_m = Θ_m ι^0_m(b̄*)`
pub fn verify_theorem_steps(b: &BraidWord, m: usize) -> ValidationReport {
    let mut report = ValidationReport::default();
    if b.degree() != m || m == 0 {
        report.fail(
            Location::Movie,
            format!("b has degree {}, expected m = {m}", b.degree()),
        );
        return report;
    }
    let e = BraidWord::identity(2 * m);
    let cat = |parts: &[&BraidWord]| -> BraidWord {
        parts.iter().fold(e.clone(), |acc, w| acc.compose(w).unwrap())
    };
    let dp = build_delta(m, true);
    let dd = build_delta(m, false);
    let d = cat(&[&dp.invert(), &dd.invert()]);
    let theta = build_theta(m);
    let erased = BraidWord::new(
        2 * m,
        theta.letters().iter().copied().filter(|l| l.index != m).collect(),
    )
    .unwrap();
    let star = b.flip_star();

    let checks: [(BraidWord, BraidWord, &str); 4] = [
        (cat(&[&d, &dp, &dd]), e.clone(), "cancellation of the half twists"),
        (erased, cat(&[&dp, &dd]), "erasing sigma_m from Theta_m"),
        (
            cat(&[&b.iota(0, m), &d]),
            cat(&[&d, &star.iota(0, m)]),
            "moving b through the half twists",
        ),
        (
            cat(&[&star.iota(0, m), &theta]),
            cat(&[&theta, &star.iota(m, 0)]),
            "moving b-bar-star through Theta_m",
        ),
    ];
    for (k, (lhs, rhs, what)) in checks.iter().enumerate() {
        report.eq_events += 1;
        if !is_equal(lhs, rhs).unwrap_or(false) {
            report.fail(Location::Step(k + 1), format!("{what} is not a braid identity"));
        }
    }
    report
}
