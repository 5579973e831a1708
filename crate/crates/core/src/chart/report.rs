use std::fmt;

/// Where a validation failure was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Movie,
    Event(usize),
    Slice(usize),
    Vertex(String),
    Edge(String),
    Step(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Movie => write!(f, "movie"),
            Location::Event(i) => write!(f, "event {i}"),
            Location::Slice(i) => write!(f, "slice {i}"),
            Location::Vertex(id) => write!(f, "vertex {id}"),
            Location::Edge(id) => write!(f, "edge {id}"),
            Location::Step(i) => write!(f, "step {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub location: Location,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<Failure>,
    pub black_vertices: usize,
    pub eq_events: usize,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn fail(&mut self, location: Location, reason: impl Into<String>) {
        self.failures.push(Failure {
            location,
            reason: reason.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ok={}", self.ok())?;
        writeln!(f, "blacks={}", self.black_vertices)?;
        writeln!(f, "eq_events={}", self.eq_events)?;
        for x in &self.failures {
            writeln!(f, "failure={}: {}", x.location, x.reason)?;
        }
        Ok(())
    }
}
