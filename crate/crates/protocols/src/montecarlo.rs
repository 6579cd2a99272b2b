//! Monte Carlo estimation of logical failure rates under circuit-level
//! depolarizing noise.
//!
//! Every location (preparation, CNOT, measurement, per-round data
//! idling) fails independently with probability p; a failing CNOT draws
//! one of the 15 nontrivial two-qubit Paulis uniformly, other locations
//! draw uniformly from {X, Y, Z} (measurements flip classically).
//! All randomness derives from one seed with one RNG stream per shot,
//! so the worker count never changes the results.

use crate::decoder::{Decoder, IdealDecoder};
use crate::ftec::{run_ftec, InjectedFault, RoundFault};
use ccv_circuits::{MeasurementCircuit, Op, Wire};
use ccv_pauli::{Pauli, PauliOperator, StabilizerCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy)]
pub struct NoiseModel {
    pub p: f64,
    pub seed: u64,
}

/// One Monte Carlo summary row, serialized to CSV.
#[derive(Debug, Clone, Serialize)]
pub struct McResult {
    pub p: f64,
    pub shots: u64,
    pub failures: u64,
    pub rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
}

/// 95% Wilson score interval for a binomial proportion.
pub fn wilson_interval(failures: u64, shots: u64) -> (f64, f64) {
    if shots == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054f64;
    let n = shots as f64;
    let phat = failures as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = (z / denom) * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

const SINGLE: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

/// Samples this shot's faults for up to `max_rounds` rounds.
pub fn sample_shot_faults<R: Rng>(
    schedule: &[MeasurementCircuit],
    n: usize,
    p: f64,
    max_rounds: usize,
    rng: &mut R,
) -> Vec<InjectedFault> {
    let mut out = Vec::new();
    let pairs: Vec<(Pauli, Pauli)> = Pauli::nontrivial_pairs().collect();
    for round in 0..max_rounds {
        for q in 0..n {
            if rng.gen_bool(p) {
                let letter = SINGLE[rng.gen_range(0..3)];
                out.push(InjectedFault {
                    round,
                    fault: RoundFault::Idle(PauliOperator::single(n, q, letter)),
                });
            }
        }
        for (ci, c) in schedule.iter().enumerate() {
            for (pos, op) in c.ops.iter().enumerate() {
                if !rng.gen_bool(p) {
                    continue;
                }
                let fault = match *op {
                    Op::Prep { wire, .. } => RoundFault::Circuit {
                        circuit: ci,
                        after: pos,
                        fault: vec![(wire, SINGLE[rng.gen_range(0..3)])],
                    },
                    Op::Cnot { control, target } => {
                        let (a, b) = pairs[rng.gen_range(0..pairs.len())];
                        RoundFault::Circuit {
                            circuit: ci,
                            after: pos,
                            fault: vec![(control, a), (target, b)],
                        }
                    }
                    Op::Meas { wire, .. } => match wire {
                        Wire::Synd => RoundFault::MeasFlip(ci),
                        Wire::Flag(k) => RoundFault::FlagFlip { circuit: ci, flag: k },
                        Wire::Data(_) => unreachable!(),
                    },
                };
                out.push(InjectedFault { round, fault });
            }
        }
    }
    out
}

/// Estimates the FTEC logical failure rate. Failure = non-convergence
/// (overflow) or a logical charge after ideal decoding of the output
/// frame.
#[allow(clippy::too_many_arguments)]
pub fn monte_carlo_logical_rate(
    code: &StabilizerCode,
    schedule: &[MeasurementCircuit],
    decoder: &Decoder,
    ideal: &IdealDecoder,
    noise: NoiseModel,
    shots: u64,
    t: usize,
    overflow_allowance: usize,
) -> McResult {
    let n = code.n();
    let max_rounds = (t + 1) * (t + 1) + overflow_allowance;
    let failures: u64 = (0..shots)
        .into_par_iter()
        .map(|shot| {
            let mut rng = ChaCha8Rng::seed_from_u64(noise.seed);
            rng.set_stream(shot);
            let faults = sample_shot_faults(schedule, n, noise.p, max_rounds, &mut rng);
            if faults.is_empty() {
                // a fault-free shot converges to a clean frame
                return 0u64;
            }
            let out = run_ftec(
                code,
                schedule,
                decoder,
                PauliOperator::identity(n),
                &faults,
                t,
                overflow_allowance,
            );
            let failed = !out.converged || ideal.decode(code, &out.frame) != (false, false);
            failed as u64
        })
        .sum();
    let rate = if shots == 0 {
        0.0
    } else {
        failures as f64 / shots as f64
    };
    let (ci_low, ci_high) = wilson_interval(failures, shots);
    McResult {
        p: noise.p,
        shots,
        failures,
        rate,
        ci_low,
        ci_high,
        seed: noise.seed,
    }
}

/// CSV header matching `mc_result_row`.
pub const MC_CSV_HEADER: &str = "p,shots,failures,rate,ci_low,ci_high,seed";

pub fn mc_result_row(r: &McResult) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        r.p, r.shots, r.failures, r.rate, r.ci_low, r.ci_high, r.seed
    )
}
