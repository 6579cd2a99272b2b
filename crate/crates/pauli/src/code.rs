//! Stabilizer codes: generator lists with category tags, syndrome
//! computation, and stabilizer/logical classification of errors.

use crate::bits::BitVec;
use crate::gf2::Echelon;
use crate::pauli::PauliOperator;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

/// Structural category of a stabilizer/gauge generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenCategory {
    /// Cap generator: top qubit plus the full center plane.
    Cap,
    /// Volume generator: one face on both planes.
    V,
    /// Face generator on the center plane.
    F,
    /// Vertical face between center and bottom planes.
    E,
    Other,
}

/// X or Z side of a CSS generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PauliKind {
    X,
    Z,
}

/// Category label attached to each declared generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenTag {
    pub category: GenCategory,
    pub kind: PauliKind,
    /// Index within the category (e.g. which face), purely descriptive.
    pub label: usize,
}

impl GenTag {
    pub fn new(category: GenCategory, kind: PauliKind, label: usize) -> Self {
        GenTag { category, kind, label }
    }
}

impl fmt::Display for GenTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cat = match self.category {
            GenCategory::Cap => "cap",
            GenCategory::V => "v",
            GenCategory::F => "f",
            GenCategory::E => "e",
            GenCategory::Other => "g",
        };
        let kind = match self.kind {
            PauliKind::X => "x",
            PauliKind::Z => "z",
        };
        write!(f, "{cat}{}_{kind}", self.label)
    }
}

/// One bit per stabilizer generator, in the code's declared generator
/// order. Bit i is 1 iff the error anticommutes with generator i.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syndrome {
    pub bits: BitVec,
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({})", self.bits)
    }
}

/// Classification of an error relative to a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorClass {
    /// Zero syndrome and inside the stabilizer group: harmless.
    TrivialSyndromeStabilizer,
    /// Zero syndrome but outside the stabilizer group: a logical error.
    TrivialSyndromeLogical,
    /// Nonzero syndrome.
    Detectable,
}

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("generators {0} and {1} anticommute")]
    NonCommutingGenerators(usize, usize),
    #[error("logical operator {0} anticommutes with stabilizer generator {1}")]
    LogicalVsStabilizer(usize, usize),
    #[error("logical_x[{0}] and logical_z[{1}] have the wrong commutation relation")]
    BadLogicalPairing(usize, usize),
    #[error("expected {expected} generator tags, got {got}")]
    TagCount { expected: usize, got: usize },
    #[error("operator acts on {got} qubits, code has {expected}")]
    Dimension { expected: usize, got: usize },
}

/// A stabilizer code given by an ordered list of commuting generators,
/// logical representatives, and optionally a set of gauge generators.
///
/// The declared generator order defines the syndrome bit order and is part
/// of the public contract. The row-echelon form of the stabilizer group is
/// cached on first use, since membership testing is the hot inner call of
/// distinguishability checking.
#[derive(Debug)]
pub struct StabilizerCode {
    n: usize,
    stab_gens: Vec<PauliOperator>,
    gen_tags: Vec<GenTag>,
    logical_x: Vec<PauliOperator>,
    logical_z: Vec<PauliOperator>,
    gauge_gens: Vec<PauliOperator>,
    echelon: OnceLock<Echelon>,
}

impl StabilizerCode {
    pub fn new(
        n: usize,
        stab_gens: Vec<PauliOperator>,
        gen_tags: Vec<GenTag>,
        logical_x: Vec<PauliOperator>,
        logical_z: Vec<PauliOperator>,
        gauge_gens: Vec<PauliOperator>,
    ) -> Result<Self, CodeError> {
        if gen_tags.len() != stab_gens.len() {
            return Err(CodeError::TagCount {
                expected: stab_gens.len(),
                got: gen_tags.len(),
            });
        }
        for (i, g) in stab_gens.iter().enumerate() {
            if g.n() != n {
                return Err(CodeError::Dimension { expected: n, got: g.n() });
            }
            for (j, h) in stab_gens.iter().enumerate().skip(i + 1) {
                if !g.commutes(h) {
                    return Err(CodeError::NonCommutingGenerators(i, j));
                }
            }
        }
        for (li, l) in logical_x.iter().chain(&logical_z).enumerate() {
            for (gi, g) in stab_gens.iter().enumerate() {
                if !l.commutes(g) {
                    return Err(CodeError::LogicalVsStabilizer(li, gi));
                }
            }
        }
        for (i, lx) in logical_x.iter().enumerate() {
            for (j, lz) in logical_z.iter().enumerate() {
                let want_anticommute = i == j;
                if lx.commutes(lz) == want_anticommute {
                    return Err(CodeError::BadLogicalPairing(i, j));
                }
            }
        }
        Ok(StabilizerCode {
            n,
            stab_gens,
            gen_tags,
            logical_x,
            logical_z,
            gauge_gens,
            echelon: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn stab_gens(&self) -> &[PauliOperator] {
        &self.stab_gens
    }

    pub fn gen_tags(&self) -> &[GenTag] {
        &self.gen_tags
    }

    pub fn logical_x(&self) -> &[PauliOperator] {
        &self.logical_x
    }

    pub fn logical_z(&self) -> &[PauliOperator] {
        &self.logical_z
    }

    pub fn gauge_gens(&self) -> &[PauliOperator] {
        &self.gauge_gens
    }

    /// Number of independent stabilizer generators.
    pub fn rank(&self) -> usize {
        self.stab_echelon().rank()
    }

    /// Number of logical qubits, n minus rank.
    pub fn k(&self) -> usize {
        self.n - self.rank()
    }

    pub fn is_css(&self) -> bool {
        self.stab_gens.iter().all(|g| g.is_x_type() || g.is_z_type())
    }

    fn stab_echelon(&self) -> &Echelon {
        self.echelon.get_or_init(|| {
            Echelon::from_rows(
                2 * self.n,
                self.stab_gens
                    .iter()
                    .map(|g| g.to_symplectic())
                    .collect::<Vec<_>>()
                    .iter(),
            )
        })
    }

    /// The syndrome of an error: one anticommutation bit per generator.
    ///
    /// # Panics
    /// Panics on qubit-count mismatch.
    pub fn syndrome(&self, e: &PauliOperator) -> Syndrome {
        assert_eq!(e.n(), self.n, "qubit count mismatch");
        let mut bits = BitVec::zeros(self.stab_gens.len());
        for (i, g) in self.stab_gens.iter().enumerate() {
            bits.set(i, !g.commutes(e));
        }
        Syndrome { bits }
    }

    /// True iff `e` lies in the group generated by the stabilizer
    /// generators.
    pub fn in_stabilizer_group(&self, e: &PauliOperator) -> bool {
        self.stab_echelon().contains(&e.to_symplectic())
    }

    /// Classifies an error as detectable, trivial (stabilizer), or a
    /// nontrivial logical.
    pub fn classify(&self, e: &PauliOperator) -> ErrorClass {
        if !self.syndrome(e).bits.is_zero() {
            ErrorClass::Detectable
        } else if self.in_stabilizer_group(e) {
            ErrorClass::TrivialSyndromeStabilizer
        } else {
            ErrorClass::TrivialSyndromeLogical
        }
    }

    /// Logical charge of a zero-syndrome error: bit 0 set iff it
    /// anticommutes with the logical Z (i.e. carries logical X content),
    /// bit 1 set iff it anticommutes with the logical X. Only meaningful
    /// for k = 1 codes.
    pub fn logical_charge(&self, e: &PauliOperator) -> (bool, bool) {
        (
            !self.logical_z[0].commutes(e),
            !self.logical_x[0].commutes(e),
        )
    }
}

#[derive(Debug, Error)]
pub enum ParityEquivError {
    #[error("code violates the weight-parity hypotheses: {0}")]
    Hypothesis(&'static str),
    #[error("errors must both be X-type or both be Z-type")]
    MixedType,
    #[error("errors have different syndromes")]
    SyndromeMismatch,
}

/// Decides logical equivalence of two same-type, same-syndrome errors by
/// weight parity alone.
///
/// Valid on codes with an odd qubit count, a single logical qubit,
/// even-weight generators, and all-qubit X/Z logical representatives; on
/// such codes two Z-type errors with equal syndrome are equal up to a
/// Z-type stabilizer exactly when their weights have the same parity (and
/// symmetrically for X-type).
pub fn equivalent_by_weight_parity(
    code: &StabilizerCode,
    e1: &PauliOperator,
    e2: &PauliOperator,
) -> Result<bool, ParityEquivError> {
    if code.n() % 2 == 0 {
        return Err(ParityEquivError::Hypothesis("qubit count must be odd"));
    }
    if code.k() != 1 {
        return Err(ParityEquivError::Hypothesis("code must encode exactly one qubit"));
    }
    if code.stab_gens().iter().any(|g| g.weight() % 2 != 0) {
        return Err(ParityEquivError::Hypothesis("all generators must have even weight"));
    }
    let all_x = PauliOperator::x_error(code.n(), 0..code.n());
    let all_z = PauliOperator::z_error(code.n(), 0..code.n());
    if code.classify(&all_x) != ErrorClass::TrivialSyndromeLogical
        || code.classify(&all_z) != ErrorClass::TrivialSyndromeLogical
    {
        return Err(ParityEquivError::Hypothesis(
            "all-qubit X and Z operators must be nontrivial logicals",
        ));
    }
    let same_type =
        (e1.is_x_type() && e2.is_x_type()) || (e1.is_z_type() && e2.is_z_type());
    if !same_type {
        return Err(ParityEquivError::MixedType);
    }
    if code.syndrome(e1) != code.syndrome(e2) {
        return Err(ParityEquivError::SyndromeMismatch);
    }
    Ok(e1.weight_parity() == e2.weight_parity())
}
