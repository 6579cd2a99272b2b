//! Color-code constructions: triangular 2D lattices, capped and
//! recursive capped color codes, gauge fixing between the H and T forms,
//! transversality certificates, qubit-count formulas, and a JSON code
//! format.

pub mod ccc;
pub mod counts;
pub mod lattice;
pub mod rccc;
pub mod serialize;
pub mod transversal;
pub mod two_d;

pub use ccc::{CappedCode, CccError, Form, SwitchDirection};
pub use counts::{qubit_counts, CodeFamily, QubitCounts};
pub use lattice::{ColorLattice, FaceColor, LatticeError, Plaquette, QubitClass};
pub use rccc::{rccc_qubits, RecursiveCappedCode};
pub use serialize::CodeDoc;
pub use transversal::{check_rp_transversality, RpViolation};
pub use two_d::build_2d_color_code;
