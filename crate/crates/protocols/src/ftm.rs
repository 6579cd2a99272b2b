//! Fault-tolerant logical measurement and state preparation.
//!
//! The logical operator is measured by a plain (non-flag) circuit
//! before each generator round; the bundle (m, s⃗, f⃗) must repeat t+1
//! times in a row. After correction, m is flipped when the correction
//! anticommutes with the logical operator.

use crate::decoder::Decoder;
use crate::ftec::{run_round, InjectedFault, RoundRecord};
use ccv_circuits::MeasurementCircuit;
use ccv_pauli::{
    BitVec, GenCategory, GenTag, PauliKind, PauliOperator, StabilizerCode,
};

#[derive(Debug, Clone)]
pub struct FtmOutcome {
    pub m: bool,
    pub frame: PauliOperator,
    pub converged: bool,
    pub rounds: usize,
    pub trace: Vec<RoundRecord>,
}

/// The plain measurement circuit for a logical operator (arbitrary
/// qubit order is allowed; ascending is used).
pub fn logical_circuit(l: &PauliOperator) -> MeasurementCircuit {
    let kind = if l.is_x_type() {
        PauliKind::X
    } else {
        PauliKind::Z
    };
    MeasurementCircuit::non_flag(
        GenTag::new(GenCategory::Other, kind, 0),
        l.support(),
        l.n(),
    )
}

/// Measures the logical operator `l` fault tolerantly. Fault round
/// indices address the combined schedule: circuit 0 is the logical
/// measurement, circuits 1.. are the generator circuits.
pub fn run_ftm(
    code: &StabilizerCode,
    l: &PauliOperator,
    schedule: &[MeasurementCircuit],
    decoder: &Decoder,
    mut frame: PauliOperator,
    faults: &[InjectedFault],
    t: usize,
    overflow_allowance: usize,
) -> FtmOutcome {
    let mut combined = vec![logical_circuit(l)];
    combined.extend(schedule.iter().cloned());
    let max_rounds = (t + 1) * (t + 1) + overflow_allowance;
    let total_flags: usize = combined.iter().map(|c| c.n_flags).sum::<usize>().max(1);
    let mut cumulative_flags = BitVec::zeros(total_flags);
    let mut last: Option<(BitVec, BitVec)> = None;
    let mut repeat = 0usize;
    let mut rounds = 0usize;
    let mut converged = false;
    let mut trace = Vec::new();
    while rounds < max_rounds {
        let round_faults: Vec<_> = faults
            .iter()
            .filter(|f| f.round == rounds)
            .map(|f| &f.fault)
            .collect();
        let (outcomes, round_flags) = run_round(&combined, &mut frame, &round_faults);
        cumulative_flags.xor_assign(&round_flags);
        let bundle = (outcomes, cumulative_flags.clone());
        repeat = match &last {
            Some(prev) if *prev == bundle => repeat + 1,
            _ => 1,
        };
        trace.push(RoundRecord {
            round: rounds,
            syndromes: bundle.0.to_string(),
            flags: bundle.1.to_string(),
            repeat,
            correction: None,
        });
        last = Some(bundle);
        rounds += 1;
        if repeat == t + 1 {
            converged = true;
            break;
        }
    }
    let (outcomes, flags) = last.expect("at least one round always runs");
    let mut m = outcomes.get(0);
    let syndrome = outcomes.slice(1, outcomes.len());
    let correction = decoder.decode(code, &syndrome, &flags);
    frame.multiply_assign(&correction);
    if !correction.commutes(l) {
        m = !m;
    }
    if let Some(rec) = trace.last_mut() {
        rec.correction = Some(correction.to_string());
    }
    FtmOutcome {
        m,
        frame,
        converged,
        rounds,
        trace,
    }
}

/// Requested computational basis for fault-tolerant preparation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrepBasis {
    Zero,
    Plus,
}

/// Fault-tolerant preparation: measure the basis logical and apply the
/// conjugate logical when the outcome is 1.
pub fn run_ftp(
    code: &StabilizerCode,
    basis: PrepBasis,
    schedule: &[MeasurementCircuit],
    decoder: &Decoder,
    frame: PauliOperator,
    faults: &[InjectedFault],
    t: usize,
    overflow_allowance: usize,
) -> FtmOutcome {
    let (l, flip) = match basis {
        PrepBasis::Zero => (&code.logical_z()[0], &code.logical_x()[0]),
        PrepBasis::Plus => (&code.logical_x()[0], &code.logical_z()[0]),
    };
    let mut out = run_ftm(
        code, l, schedule, decoder, frame, faults, t, overflow_allowance,
    );
    if out.m {
        out.frame.multiply_assign(flip);
        out.m = false;
    }
    out
}
