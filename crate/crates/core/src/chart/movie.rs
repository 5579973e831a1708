use crate::braid::{is_equal, BraidWord, Letter, Sign};
use crate::error::{Error, Result};

use super::report::{Location, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BandOp {
    Insert,
    Delete,
}

/// A hyperbolic transformation: one letter inserted into or deleted from a
/// slice. Each band is one black vertex of the chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Band {
    pub op: BandOp,
    pub position: usize,
    pub generator: usize,
    pub sign: Sign,
}

impl Band {
    pub fn letter(&self) -> Letter {
        Letter {
            index: self.generator,
            sign: self.sign,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    /// The two slices are equal braids.
    Eq,
    Band(Band),
}

/// A chart encoded as a sequence of braid-word slices joined by events.
///
/// A closed movie starts and ends at the empty word; open segments (as built
/// for the handle blocks) need not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartMovie {
    degree: usize,
    slices: Vec<BraidWord>,
    events: Vec<Event>,
}

impl ChartMovie {
    /// Checks only the shape: at least one slice, one event between each pair
    /// of slices, every slice of degree `degree`.
    pub fn new(degree: usize, slices: Vec<BraidWord>, events: Vec<Event>) -> Result<ChartMovie> {
        if slices.is_empty() {
            return Err(Error::InvalidMovie("a movie needs at least one slice".into()));
        }
        if events.len() + 1 != slices.len() {
            return Err(Error::InvalidMovie(format!(
                "{} slices need {} events, found {}",
                slices.len(),
                slices.len() - 1,
                events.len()
            )));
        }
        if let Some(s) = slices.iter().find(|s| s.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: s.degree(),
            });
        }
        Ok(ChartMovie {
            degree,
            slices,
            events,
        })
    }

    /// A single-slice segment.
    pub fn starting_at(start: BraidWord) -> ChartMovie {
        ChartMovie {
            degree: start.degree(),
            slices: vec![start],
            events: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn slices(&self) -> &[BraidWord] {
        &self.slices
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn first(&self) -> &BraidWord {
        &self.slices[0]
    }

    pub fn last(&self) -> &BraidWord {
        self.slices.last().expect("movies are never empty")
    }

    pub fn bands(&self) -> impl Iterator<Item = (usize, &Band)> {
        self.events.iter().enumerate().filter_map(|(i, e)| match e {
            Event::Band(b) => Some((i, b)),
            Event::Eq => None,
        })
    }

    /// Appends an EQ step to `next`, unless `next` is literally the current
    /// last slice.
    pub(crate) fn push_eq(&mut self, next: BraidWord) {
        if &next != self.last() {
            self.push_eq_always(next);
        }
    }

    pub(crate) fn push_eq_always(&mut self, next: BraidWord) {
        debug_assert_eq!(next.degree(), self.degree);
        self.slices.push(next);
        self.events.push(Event::Eq);
    }

    pub(crate) fn push_insert(&mut self, position: usize, letter: Letter) {
        let mut next = self.last().clone();
        next.insert(position, letter);
        self.slices.push(next);
        self.events.push(Event::Band(Band {
            op: BandOp::Insert,
            position,
            generator: letter.index,
            sign: letter.sign,
        }));
    }

    pub(crate) fn push_delete(&mut self, position: usize) {
        let mut next = self.last().clone();
        let letter = next.remove(position);
        self.slices.push(next);
        self.events.push(Event::Band(Band {
            op: BandOp::Delete,
            position,
            generator: letter.index,
            sign: letter.sign,
        }));
    }

    /// Appends `other`, whose first slice must equal this movie's last slice.
    pub(crate) fn extend(&mut self, other: ChartMovie) {
        assert_eq!(self.last(), other.first(), "segments do not meet");
        let mut slices = other.slices.into_iter();
        slices.next();
        self.slices.extend(slices);
        self.events.extend(other.events);
    }

    /// Multiplies every slice by `left` and `right`; band positions shift by
    /// `left.len()`. Slice equalities and single-letter edits are preserved.
    pub fn embed(&self, left: &BraidWord, right: &BraidWord) -> Result<ChartMovie> {
        let slices = self
            .slices
            .iter()
            .map(|s| left.compose(s)?.compose(right))
            .collect::<Result<Vec<_>>>()?;
        let events = self
            .events
            .iter()
            .map(|e| match *e {
                Event::Eq => Event::Eq,
                Event::Band(b) => Event::Band(Band {
                    position: b.position + left.len(),
                    ..b
                }),
            })
            .collect();
        ChartMovie::new(self.degree, slices, events)
    }

    /// The movie played backwards: slices reversed, inserts and deletes swapped.
    pub fn reversed(&self) -> ChartMovie {
        let slices = self.slices.iter().rev().cloned().collect();
        let events = self
            .events
            .iter()
            .rev()
            .map(|e| match *e {
                Event::Eq => Event::Eq,
                Event::Band(b) => Event::Band(Band {
                    op: match b.op {
                        BandOp::Insert => BandOp::Delete,
                        BandOp::Delete => BandOp::Insert,
                    },
                    ..b
                }),
            })
            .collect();
        ChartMovie {
            degree: self.degree,
            slices,
            events,
        }
    }
}

/// Checks every event of an open segment; endpoints are unconstrained.
pub fn validate_segment(m: &ChartMovie) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = m.degree;
    for (i, event) in m.events.iter().enumerate() {
        let (cur, next) = (&m.slices[i], &m.slices[i + 1]);
        match event {
            Event::Eq => {
                report.eq_events += 1;
                match is_equal(cur, next) {
                    Ok(true) => {}
                    Ok(false) => report.fail(Location::Event(i), "slices are not equal braids"),
                    Err(e) => report.fail(Location::Event(i), e.to_string()),
                }
            }
            Event::Band(band) => {
                report.black_vertices += 1;
                if let Some(reason) = check_band(n, band, cur, next) {
                    report.fail(Location::Event(i), reason);
                }
            }
        }
    }
    report
}

fn check_band(n: usize, band: &Band, cur: &BraidWord, next: &BraidWord) -> Option<String> {
    if band.generator == 0 || band.generator >= n {
        return Some(format!("band generator {} out of range for degree {n}", band.generator));
    }
    let letter = band.letter();
    let expected = match band.op {
        BandOp::Insert => {
            if band.position > cur.len() {
                return Some(format!(
                    "insert position {} beyond slice length {}",
                    band.position,
                    cur.len()
                ));
            }
            let mut w = cur.clone();
            w.insert(band.position, letter);
            w
        }
        BandOp::Delete => {
            if band.position >= cur.len() {
                return Some(format!(
                    "delete position {} beyond slice length {}",
                    band.position,
                    cur.len()
                ));
            }
            if cur.letters()[band.position] != letter {
                return Some(format!(
                    "letter at position {} is {}, band names {}",
                    band.position,
                    cur.letters()[band.position],
                    letter
                ));
            }
            let mut w = cur.clone();
            w.remove(band.position);
            w
        }
    };
    if &expected != next {
        return Some("next slice is not a single-letter edit of the previous one".into());
    }
    None
}

/// Checks a closed movie: every event plus empty first and last slices.
pub fn validate_movie(m: &ChartMovie) -> ValidationReport {
    let mut report = validate_segment(m);
    if !m.first().is_empty() {
        report.fail(Location::Slice(0), "first slice must be the empty word");
    }
    if !m.last().is_empty() {
        report.fail(
            Location::Slice(m.slices.len() - 1),
            "last slice must be the empty word",
        );
    }
    report
}

pub(crate) fn require_valid(m: &ChartMovie) -> Result<ValidationReport> {
    let report = validate_movie(m);
    match report.failures.first() {
        None => Ok(report),
        Some(f) => Err(Error::InvalidMovie(format!("{}: {}", f.location, f.reason))),
    }
}
