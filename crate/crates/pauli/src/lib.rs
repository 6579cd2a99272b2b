//! Phase-free Pauli algebra for stabilizer-code verification.
//!
//! Everything downstream — code construction, measurement-circuit fault
//! enumeration, and protocol simulation — runs on three primitives from
//! this crate:
//!
//! * [`PauliOperator`]: an n-qubit Pauli stored as paired X/Z bit vectors
//!   with the global phase dropped. Products are bitwise XOR and
//!   commutation is the symplectic inner product.
//! * [`StabilizerCode`]: an ordered, tagged generator list with syndrome
//!   extraction and GF(2) stabilizer-membership classification
//!   ([`StabilizerCode::classify`]), backed by a cached row-echelon form.
//! * [`distance_brute_force`]: exhaustive, parallel minimum-distance
//!   search used as the oracle for every distance claim in the test suite.
//!
//! The [`gf2`] module exposes the underlying dense GF(2) linear algebra
//! (echelon forms and linear-system solving) for reuse by gauge-fixing and
//! decoder construction.
//!
//! Phases are dropped deliberately: every protocol decision made by the
//! toolkit depends only on commutation relations and GF(2) syndromes.

pub mod bits;
pub mod code;
pub mod distance;
pub mod gf2;
pub mod pauli;

pub use bits::BitVec;
pub use code::{
    equivalent_by_weight_parity, CodeError, ErrorClass, GenCategory, GenTag, ParityEquivError,
    PauliKind, StabilizerCode, Syndrome,
};
pub use distance::{distance_brute_force, Distance, DistanceType};
pub use pauli::{Pauli, PauliOperator};
