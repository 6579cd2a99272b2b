//! Syndrome-extraction circuits for capped color codes: flagged and
//! unflagged measurement circuits, CNOT orderings, full-round schedules,
//! Pauli fault propagation, and circuit export.

pub mod circuit;
pub mod diagram;
pub mod orderings;
pub mod schedule;

pub use circuit::{Basis, FaultEffect, FlagStyle, MeasurementCircuit, Op, Wire};
pub use diagram::{render_diagram, CircuitDoc};
pub use orderings::{sawtooth, Orderings};
pub use schedule::{build_schedule, ScheduleError};
