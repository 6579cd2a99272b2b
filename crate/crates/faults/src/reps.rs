//! Enumeration of reduced single-fault representatives.
//!
//! A fault is a Pauli inserted after one location of one measurement
//! circuit (or an idle error on a data qubit between circuits). Its
//! reduced representative is the pair (residual data error, flag
//! pattern): in-round outcome corruption is repaired by outcome
//! repetition, so two faults with the same representative are
//! interchangeable for distinguishability purposes.

use ccv_circuits::{MeasurementCircuit, Op, Wire};
use ccv_pauli::{BitVec, Pauli, PauliKind, PauliOperator};
use std::collections::HashMap;

/// Restriction of the enumerated fault Paulis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultSector {
    /// All Pauli faults.
    Full,
    /// Only X components (X errors on data, X-type flips on ancillas).
    X,
    /// Only Z components.
    Z,
}

impl FaultSector {
    fn letters(self) -> &'static [Pauli] {
        match self {
            FaultSector::Full => &[Pauli::X, Pauli::Y, Pauli::Z],
            FaultSector::X => &[Pauli::X],
            FaultSector::Z => &[Pauli::Z],
        }
    }

    fn pairs(self) -> Vec<(Pauli, Pauli)> {
        match self {
            FaultSector::Full => Pauli::nontrivial_pairs().collect(),
            FaultSector::X => vec![
                (Pauli::X, Pauli::I),
                (Pauli::I, Pauli::X),
                (Pauli::X, Pauli::X),
            ],
            FaultSector::Z => vec![
                (Pauli::Z, Pauli::I),
                (Pauli::I, Pauli::Z),
                (Pauli::Z, Pauli::Z),
            ],
        }
    }
}

/// A reduced single-fault representative.
#[derive(Debug, Clone)]
pub struct FaultRep {
    /// Residual error on the data qubits.
    pub error: PauliOperator,
    /// Flag bits over the whole schedule (one per flag qubit, circuits
    /// concatenated in schedule order).
    pub flags: BitVec,
    /// Human-readable provenance of one fault producing this rep.
    pub origin: String,
}

impl FaultRep {
    pub fn is_trivial(&self) -> bool {
        self.error.is_identity() && self.flags.is_zero()
    }
}

/// Total number of flag bits in a schedule.
pub fn schedule_flag_count(schedule: &[MeasurementCircuit]) -> usize {
    schedule.iter().map(|c| c.n_flags).sum()
}

/// Enumerates every distinct reduced single-fault representative of a
/// schedule, including idle data-qubit errors. Trivial representatives
/// (no residual error, no flags) are dropped.
pub fn enumerate_single_faults(
    schedule: &[MeasurementCircuit],
    sector: FaultSector,
) -> Vec<FaultRep> {
    let n = schedule
        .first()
        .map(|c| c.n_data)
        .expect("schedule must contain at least one circuit");
    let total_flags = schedule_flag_count(schedule).max(1);
    let mut seen: HashMap<(BitVec, BitVec), FaultRep> = HashMap::new();
    let mut record = |error: PauliOperator, flags: BitVec, origin: String| {
        let rep = FaultRep {
            error,
            flags,
            origin,
        };
        if rep.is_trivial() {
            return;
        }
        seen.entry((rep.error.to_symplectic(), rep.flags.clone()))
            .or_insert(rep);
    };

    // idle faults on data qubits
    for q in 0..n {
        for &p in sector.letters() {
            record(
                PauliOperator::single(n, q, p),
                BitVec::zeros(total_flags),
                format!("idle {p:?} on q{q}"),
            );
        }
    }

    let mut flag_base = 0usize;
    for circuit in schedule {
        for (pos, op) in circuit.ops.iter().enumerate() {
            let wires: Vec<Wire> = match *op {
                Op::Prep { wire, .. } => vec![wire],
                Op::Meas { .. } => continue,
                Op::Cnot { control, target } => vec![control, target],
            };
            let faults: Vec<Vec<(Wire, Pauli)>> = if wires.len() == 1 {
                sector
                    .letters()
                    .iter()
                    .map(|&p| vec![(wires[0], p)])
                    .collect()
            } else {
                sector
                    .pairs()
                    .into_iter()
                    .map(|(a, b)| vec![(wires[0], a), (wires[1], b)])
                    .collect()
            };
            for fault in faults {
                let eff = circuit.propagate(pos, &fault);
                let mut flags = BitVec::zeros(total_flags);
                for k in 0..circuit.n_flags {
                    flags.set(flag_base + k, eff.flags.get(k));
                }
                record(
                    eff.data,
                    flags,
                    format!("{} op {pos}: {fault:?}", circuit.tag),
                );
            }
        }
        flag_base += circuit.n_flags;
    }
    seen.into_values().collect()
}

/// The Z-sector representatives split out per originating circuit, with
/// idle errors under origin `None`.
pub fn sector_universe(
    schedule: &[MeasurementCircuit],
    kind: PauliKind,
) -> Vec<FaultRep> {
    let sector = match kind {
        PauliKind::X => FaultSector::X,
        PauliKind::Z => FaultSector::Z,
    };
    enumerate_single_faults(schedule, sector)
}
