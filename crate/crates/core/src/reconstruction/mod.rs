//! Recovering the gauge potential and connection form from a holonomy map, and checking
//! the result against the connection it came from.

mod curve;
mod fd;
mod frames;
mod potential;
mod roundtrip;

pub use curve::{connection_form_action, TrivializedCurve};
pub use fd::FdConfig;
pub use frames::{curvature, gauge_transform_potential, horizontal_transport, transition_function};
pub use potential::{reconstruct_potential, PotentialField};
pub use roundtrip::{
    frame_gauge, round_trip_report, Grid, RoundTripConfig, RoundTripReport, RoundTripTolerances,
};
