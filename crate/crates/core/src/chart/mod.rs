//! Chart encodings: the movie form used for computation, the planar graph
//! form used for checking the chart conditions, and the torus-covering-chart
//! input type.

mod cover;
mod graph;
mod movie;
mod report;
mod torus;

pub use cover::{
    analyze, band_sheet_pairs, black_count, closure_components, euler_characteristic,
    genus_per_component, ComponentGenus, CoverSummary,
};
pub use graph::{
    recognize_syntactic, validate_chart_graph, ChartGraph, Edge, Orientation, SyntacticKind, Vertex,
};
pub use movie::{validate_movie, validate_segment, Band, BandOp, ChartMovie, Event};
pub use report::{Failure, Location, ValidationReport};
pub use torus::TorusCoveringChart;
