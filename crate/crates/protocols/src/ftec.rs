//! Flag error correction with outcome-bundle repetition.
//!
//! One round measures every generator in schedule order. The round's
//! outcome bundle is (syndrome bits, cumulative flag bits); rounds
//! repeat until the same bundle is seen t+1 times in a row, bounded by
//! (t+1)² rounds plus a configurable overflow allowance. The stabilized
//! bundle is decoded to a correction.

use crate::decoder::Decoder;
use ccv_circuits::{MeasurementCircuit, Wire};
use ccv_pauli::{BitVec, Pauli, PauliOperator, StabilizerCode};
use serde::Serialize;

/// A fault injected into one protocol round.
#[derive(Debug, Clone)]
pub enum RoundFault {
    /// Pauli applied to the data before the round's circuits run.
    Idle(PauliOperator),
    /// Pauli inserted after op `after` of circuit `circuit`.
    Circuit {
        circuit: usize,
        after: usize,
        fault: Vec<(Wire, Pauli)>,
    },
    /// Classical flip of the syndrome outcome of one circuit.
    MeasFlip(usize),
    /// Classical flip of one flag outcome of one circuit.
    FlagFlip { circuit: usize, flag: usize },
}

/// A fault scheduled at an absolute round index.
#[derive(Debug, Clone)]
pub struct InjectedFault {
    pub round: usize,
    pub fault: RoundFault,
}

/// One round's record for the JSONL trace.
#[derive(Debug, Clone, Serialize)]
pub struct RoundRecord {
    pub round: usize,
    pub syndromes: String,
    pub flags: String,
    pub repeat: usize,
    pub correction: Option<String>,
}

#[derive(Debug, Clone)]
pub struct FtecOutcome {
    pub frame: PauliOperator,
    pub converged: bool,
    pub rounds: usize,
    pub correction: PauliOperator,
    /// Final stabilized bundle.
    pub syndrome: BitVec,
    pub flags: BitVec,
    pub trace: Vec<RoundRecord>,
}

/// Executes one round of syndrome extraction: mutates the frame with
/// every injected fault's residual and returns (outcomes, round flags).
pub fn run_round(
    schedule: &[MeasurementCircuit],
    frame: &mut PauliOperator,
    faults: &[&RoundFault],
) -> (BitVec, BitVec) {
    let total_flags: usize = schedule.iter().map(|c| c.n_flags).sum::<usize>().max(1);
    let mut outcomes = BitVec::zeros(schedule.len());
    let mut flags = BitVec::zeros(total_flags);
    for f in faults {
        if let RoundFault::Idle(p) = f {
            frame.multiply_assign(p);
        }
    }
    let mut flag_base = 0;
    for (ci, circuit) in schedule.iter().enumerate() {
        let response = circuit.respond(frame);
        let mut out = response.outcome_flip;
        for f in faults {
            match f {
                RoundFault::Circuit {
                    circuit: fc,
                    after,
                    fault,
                } if *fc == ci => {
                    let eff = circuit.propagate(*after, fault);
                    frame.multiply_assign(&eff.data);
                    out ^= eff.outcome_flip;
                    for k in 0..circuit.n_flags {
                        if eff.flags.get(k) {
                            flags.flip(flag_base + k);
                        }
                    }
                }
                RoundFault::MeasFlip(fc) if *fc == ci => out = !out,
                RoundFault::FlagFlip { circuit: fc, flag } if *fc == ci => {
                    flags.flip(flag_base + flag);
                }
                _ => {}
            }
        }
        outcomes.set(ci, out);
        flag_base += circuit.n_flags;
    }
    (outcomes, flags)
}

/// Runs the repetition protocol and decodes the stabilized bundle.
pub fn run_ftec(
    code: &StabilizerCode,
    schedule: &[MeasurementCircuit],
    decoder: &Decoder,
    frame: PauliOperator,
    faults: &[InjectedFault],
    t: usize,
    overflow_allowance: usize,
) -> FtecOutcome {
    run_ftec_keyed(
        code,
        schedule,
        decoder,
        frame,
        faults,
        t,
        overflow_allowance,
        &[],
    )
}

/// `run_ftec` with extra flag segments prepended to the decode key,
/// for decoders whose tables also cover circuits executed before this
/// error-correction step (e.g. gauge-switching circuits whose flags
/// were already collected).
#[allow(clippy::too_many_arguments)]
pub fn run_ftec_keyed(
    code: &StabilizerCode,
    schedule: &[MeasurementCircuit],
    decoder: &Decoder,
    mut frame: PauliOperator,
    faults: &[InjectedFault],
    t: usize,
    overflow_allowance: usize,
    flag_prefix: &[&BitVec],
) -> FtecOutcome {
    let max_rounds = (t + 1) * (t + 1) + overflow_allowance;
    let total_flags: usize = schedule.iter().map(|c| c.n_flags).sum::<usize>().max(1);
    let mut cumulative_flags = BitVec::zeros(total_flags);
    let mut trace = Vec::new();
    let mut last: Option<(BitVec, BitVec)> = None;
    let mut repeat = 0usize;
    let mut rounds = 0usize;
    let mut converged = false;
    while rounds < max_rounds {
        let round_faults: Vec<&RoundFault> = faults
            .iter()
            .filter(|f| f.round == rounds)
            .map(|f| &f.fault)
            .collect();
        let (outcomes, round_flags) = run_round(schedule, &mut frame, &round_faults);
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
    let (syndrome, flags) = last.expect("at least one round always runs");
    let key_flags = flag_prefix
        .iter()
        .fold(BitVec::zeros(0), |acc, seg| acc.concat(seg))
        .concat(&flags);
    let correction = decoder.decode(code, &syndrome, &key_flags);
    frame.multiply_assign(&correction);
    if let Some(rec) = trace.last_mut() {
        rec.correction = Some(correction.to_string());
    }
    FtecOutcome {
        frame,
        converged,
        rounds,
        correction,
        syndrome,
        flags,
        trace,
    }
}

/// All fault locations of one schedule round: (circuit, op index).
/// Prep/CNOT locations admit Pauli faults after the op; measurement
/// locations admit classical flips.
pub fn round_locations(schedule: &[MeasurementCircuit]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (ci, c) in schedule.iter().enumerate() {
        for pos in 0..c.ops.len() {
            out.push((ci, pos));
        }
    }
    out
}

/// Every distinct single-fault `RoundFault` of one round, including
/// idle data errors and classical measurement flips. Used by the
/// exhaustive audits.
pub fn enumerate_round_faults(
    schedule: &[MeasurementCircuit],
    n: usize,
) -> Vec<RoundFault> {
    use ccv_circuits::Op;
    let mut out = Vec::new();
    for q in 0..n {
        for p in [Pauli::X, Pauli::Y, Pauli::Z] {
            out.push(RoundFault::Idle(PauliOperator::single(n, q, p)));
        }
    }
    for (ci, c) in schedule.iter().enumerate() {
        for (pos, op) in c.ops.iter().enumerate() {
            match *op {
                Op::Prep { wire, .. } => {
                    for p in [Pauli::X, Pauli::Y, Pauli::Z] {
                        out.push(RoundFault::Circuit {
                            circuit: ci,
                            after: pos,
                            fault: vec![(wire, p)],
                        });
                    }
                }
                Op::Cnot { control, target } => {
                    for (a, b) in Pauli::nontrivial_pairs() {
                        out.push(RoundFault::Circuit {
                            circuit: ci,
                            after: pos,
                            fault: vec![(control, a), (target, b)],
                        });
                    }
                }
                Op::Meas { wire, .. } => match wire {
                    Wire::Synd => out.push(RoundFault::MeasFlip(ci)),
                    Wire::Flag(k) => out.push(RoundFault::FlagFlip { circuit: ci, flag: k }),
                    Wire::Data(_) => unreachable!(),
                },
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ccv_circuits::{build_schedule, FlagStyle, Orderings};
    use ccv_codes::{CappedCode, Form};

    #[test]
    fn fault_free_run_converges_immediately_with_identity_correction() {
        let ccc = CappedCode::build(3).unwrap();
        let code = ccc.fix_gauge(Form::H).unwrap();
        let schedule =
            build_schedule(&ccc, Form::H, &Orderings::builtin_d3(), FlagStyle::OneFlag)
                .unwrap();
        let decoder = Decoder::build_css(&code, &schedule, 1).unwrap();
        let out = run_ftec(
            &code,
            &schedule,
            &decoder,
            PauliOperator::identity(15),
            &[],
            1,
            0,
        );
        assert!(out.converged);
        assert_eq!(out.rounds, 2);
        assert!(out.frame.is_identity());
        assert!(out.correction.is_identity());
    }

    #[test]
    fn clean_input_error_is_removed() {
        let ccc = CappedCode::build(3).unwrap();
        let code = ccc.fix_gauge(Form::H).unwrap();
        let schedule =
            build_schedule(&ccc, Form::H, &Orderings::builtin_d3(), FlagStyle::OneFlag)
                .unwrap();
        let decoder = Decoder::build_css(&code, &schedule, 1).unwrap();
        for e in [
            PauliOperator::x_error(15, [9]),
            PauliOperator::z_error(15, [0]),
            PauliOperator::single(15, 5, Pauli::Y),
        ] {
            let out = run_ftec(&code, &schedule, &decoder, e, &[], 1, 0);
            assert!(out.converged);
            assert_eq!(
                code.classify(&out.frame),
                ccv_pauli::ErrorClass::TrivialSyndromeStabilizer
            );
        }
    }

    #[test]
    fn measurement_flip_is_absorbed_by_repetition() {
        let ccc = CappedCode::build(3).unwrap();
        let code = ccc.fix_gauge(Form::H).unwrap();
        let schedule =
            build_schedule(&ccc, Form::H, &Orderings::builtin_d3(), FlagStyle::OneFlag)
                .unwrap();
        let decoder = Decoder::build_css(&code, &schedule, 1).unwrap();
        let faults = vec![InjectedFault {
            round: 0,
            fault: RoundFault::MeasFlip(3),
        }];
        let out = run_ftec(
            &code,
            &schedule,
            &decoder,
            PauliOperator::identity(15),
            &faults,
            1,
            0,
        );
        assert!(out.converged);
        assert!(out.rounds <= 4);
        assert!(out.frame.is_identity());
    }
}
