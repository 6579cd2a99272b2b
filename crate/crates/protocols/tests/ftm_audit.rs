//! Fault-tolerance audit of logical measurement (FTM) and preparation
//! (FTP) on the distance-3 capped code.
//!
//! The logical operator is measured by a plain circuit alongside the
//! generator schedule; the whole bundle must repeat t+1 times. With the
//! frame taken relative to the +1 eigenstate of the measured logical:
//!
//! - any input error in E_1 and no faults → outcome 0, error removed;
//! - any single fault anywhere (including in the logical-measurement
//!   circuit) → outcome 0, and the output error is in E_1 up to a
//!   possible multiple of the measured logical (which stabilizes the
//!   post-measurement state).

use ccv_circuits::{build_schedule, FlagStyle, MeasurementCircuit, Orderings};
use ccv_codes::{CappedCode, Form};
use ccv_faults::{enumerate_single_faults, FaultSector};
use ccv_pauli::{PauliOperator, StabilizerCode};
use ccv_protocols::{
    enumerate_round_faults, logical_circuit, run_ftm, run_ftp, zero_flag_reps, CssErrorOracle,
    Decoder, IdealDecoder, InjectedFault, PrepBasis,
};

struct Fixture {
    code: StabilizerCode,
    schedule: Vec<MeasurementCircuit>,
    decoder: Decoder,
    ideal: IdealDecoder,
    oracle: CssErrorOracle,
}

fn fixture() -> Fixture {
    let ccc = CappedCode::build(3).unwrap();
    let code = ccc.fix_gauge(Form::H).unwrap();
    let schedule =
        build_schedule(&ccc, Form::H, &Orderings::builtin_d3(), FlagStyle::OneFlag).unwrap();
    let decoder = Decoder::build_css(&code, &schedule, 1).unwrap();
    let ideal = IdealDecoder::for_css_schedule(&code, &schedule, 1).unwrap();
    let oracle = CssErrorOracle::for_schedule(&code, &schedule, 1);
    Fixture {
        code,
        schedule,
        decoder,
        ideal,
        oracle,
    }
}

fn in_e1_up_to_l(fx: &Fixture, frame: &PauliOperator, l: &PauliOperator) -> bool {
    fx.oracle.contains(frame) || fx.oracle.contains(&frame.multiply(l))
}

#[test]
fn clean_inputs_measure_zero_and_are_corrected() {
    let fx = fixture();
    let reps = zero_flag_reps(&enumerate_single_faults(&fx.schedule, FaultSector::Full));
    for l in [&fx.code.logical_z()[0], &fx.code.logical_x()[0]] {
        // identity input plus every zero-flag single residual
        let mut inputs = vec![("I".to_string(), PauliOperator::identity(fx.code.n()))];
        inputs.extend(reps.iter().map(|r| (r.origin.clone(), r.error.clone())));
        for (origin, input) in &inputs {
            let out = run_ftm(
                &fx.code,
                l,
                &fx.schedule,
                &fx.decoder,
                input.clone(),
                &[],
                1,
                0,
            );
            assert!(out.converged, "{origin}");
            assert!(!out.m, "input {origin} corrupts the outcome");
            assert!(
                in_e1_up_to_l(&fx, &out.frame, l),
                "input {origin} leaves {}",
                out.frame
            );
        }
    }
}

#[test]
fn every_single_fault_keeps_the_outcome_and_output_consistent() {
    let fx = fixture();
    let t = 1usize;
    let max_rounds = (t + 1) * (t + 1);
    for l in [&fx.code.logical_z()[0], &fx.code.logical_x()[0]] {
        let mut combined = vec![logical_circuit(l)];
        combined.extend(fx.schedule.iter().cloned());
        let faults = enumerate_round_faults(&combined, fx.code.n());
        let mut audited = 0u64;
        for round in 0..max_rounds {
            for fault in &faults {
                let injected = [InjectedFault {
                    round,
                    fault: fault.clone(),
                }];
                let out = run_ftm(
                    &fx.code,
                    l,
                    &fx.schedule,
                    &fx.decoder,
                    PauliOperator::identity(fx.code.n()),
                    &injected,
                    t,
                    0,
                );
                if round >= out.rounds {
                    continue;
                }
                audited += 1;
                assert!(out.converged, "round {round} fault {fault:?}");
                assert!(!out.m, "round {round} fault {fault:?} corrupts the outcome");
                assert!(
                    in_e1_up_to_l(&fx, &out.frame, l),
                    "round {round} fault {fault:?} leaves {}",
                    out.frame
                );
            }
        }
        assert!(audited >= 2 * faults.len() as u64);
    }
}

#[test]
fn preparation_yields_the_requested_basis_state_under_any_single_fault() {
    let fx = fixture();
    let t = 1usize;
    let max_rounds = (t + 1) * (t + 1);
    for (basis, l, flip) in [
        (PrepBasis::Zero, &fx.code.logical_z()[0], &fx.code.logical_x()[0]),
        (PrepBasis::Plus, &fx.code.logical_x()[0], &fx.code.logical_z()[0]),
    ] {
        let mut combined = vec![logical_circuit(l)];
        combined.extend(fx.schedule.iter().cloned());
        let faults = enumerate_round_faults(&combined, fx.code.n());
        for round in 0..max_rounds {
            for fault in &faults {
                let injected = [InjectedFault {
                    round,
                    fault: fault.clone(),
                }];
                let out = run_ftp(
                    &fx.code,
                    basis,
                    &fx.schedule,
                    &fx.decoder,
                    PauliOperator::identity(fx.code.n()),
                    &injected,
                    t,
                    0,
                );
                if round >= out.rounds {
                    continue;
                }
                assert!(out.converged);
                assert!(!out.m, "preparation always reports the corrected outcome 0");
                // ideal decoding must not find a logical that moves the
                // prepared state off the requested basis state
                let correction = fx.ideal.correction(&fx.code, &out.frame);
                let residual = out.frame.multiply(&correction);
                assert!(
                    residual.commutes(l),
                    "round {round} fault {fault:?}: prepared state flipped, residual {residual}"
                );
                assert!(
                    in_e1_up_to_l(&fx, &out.frame, l),
                    "round {round} fault {fault:?} leaves {}",
                    out.frame
                );
                let _ = flip;
            }
        }
    }
}
