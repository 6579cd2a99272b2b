//! Distinguishability of bounded fault sets.
//!
//! A fault set F_t (all combinations of at most t single faults) is
//! distinguishable when any two combinations sharing the same
//! (syndrome, flags) outcome have residual errors that differ only by a
//! stabilizer. Equivalently, no combination of at most 2t faults has
//! trivial syndrome and flags while implementing a logical operator;
//! both checkers are provided and must agree.

use crate::reps::FaultRep;
use ccv_pauli::{BitVec, ErrorClass, PauliOperator, StabilizerCode};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashMap;

/// Witness of an indistinguishable pair of fault combinations.
#[derive(Debug, Clone)]
pub struct Indistinguishable {
    pub combo_a: Vec<String>,
    pub combo_b: Vec<String>,
    pub error_a: PauliOperator,
    pub error_b: PauliOperator,
}

fn combo_effect(reps: &[FaultRep], combo: &[usize], n: usize, n_flags: usize) -> (PauliOperator, BitVec) {
    let mut error = PauliOperator::identity(n);
    let mut flags = BitVec::zeros(n_flags);
    for &i in combo {
        error.multiply_assign(&reps[i].error);
        flags.xor_assign(&reps[i].flags);
    }
    (error, flags)
}

fn origins(reps: &[FaultRep], combo: &[usize]) -> Vec<String> {
    combo.iter().map(|&i| reps[i].origin.clone()).collect()
}

/// Direct checker: buckets every combination of ≤ t faults by
/// (syndrome, flags) and verifies each bucket is a single stabilizer
/// equivalence class.
pub fn is_distinguishable(
    code: &StabilizerCode,
    reps: &[FaultRep],
    t: usize,
) -> Result<(), Indistinguishable> {
    let n = code.n();
    let n_flags = reps.first().map_or(1, |r| r.flags.len());
    let mut buckets: HashMap<(BitVec, BitVec), (PauliOperator, Vec<usize>)> = HashMap::new();
    let check = |combo: &[usize],
                     buckets: &mut HashMap<(BitVec, BitVec), (PauliOperator, Vec<usize>)>|
     -> Result<(), Indistinguishable> {
        let (error, flags) = combo_effect(reps, combo, n, n_flags);
        let key = (code.syndrome(&error).bits, flags);
        match buckets.get(&key) {
            None => {
                buckets.insert(key, (error, combo.to_vec()));
                Ok(())
            }
            Some((rep_error, rep_combo)) => {
                let product = rep_error.multiply(&error);
                if code.classify(&product) == ErrorClass::TrivialSyndromeLogical {
                    Err(Indistinguishable {
                        combo_a: origins(reps, rep_combo),
                        combo_b: origins(reps, combo),
                        error_a: rep_error.clone(),
                        error_b: error,
                    })
                } else {
                    Ok(())
                }
            }
        }
    };
    for size in 0..=t {
        for combo in (0..reps.len()).combinations(size) {
            check(&combo, &mut buckets)?;
        }
    }
    Ok(())
}

/// Product checker: F_t is distinguishable iff no combination of ≤ 2t
/// faults is flag-free, syndrome-free, and logical.
pub fn is_distinguishable_via_2t(
    code: &StabilizerCode,
    reps: &[FaultRep],
    t: usize,
) -> Result<(), Indistinguishable> {
    let n = code.n();
    let n_flags = reps.first().map_or(1, |r| r.flags.len());
    for size in 1..=2 * t {
        let found = (0..reps.len())
            .combinations(size)
            .par_bridge()
            .find_map_any(|combo| {
                let (error, flags) = combo_effect(reps, &combo, n, n_flags);
                if flags.is_zero()
                    && code.classify(&error) == ErrorClass::TrivialSyndromeLogical
                {
                    Some(combo)
                } else {
                    None
                }
            });
        if let Some(combo) = found {
            let half = combo.len() / 2;
            let (a, b) = combo.split_at(half);
            let (error_a, _) = combo_effect(reps, a, n, n_flags);
            let (error_b, _) = combo_effect(reps, b, n, n_flags);
            return Err(Indistinguishable {
                combo_a: origins(reps, a),
                combo_b: origins(reps, b),
                error_a,
                error_b,
            });
        }
    }
    Ok(())
}

/// Randomized audit: samples `samples` combinations of exactly `size`
/// faults and reports any flag-free, syndrome-free logical combination.
/// Deterministic for a fixed seed.
pub fn sampled_product_audit(
    code: &StabilizerCode,
    reps: &[FaultRep],
    size: usize,
    samples: usize,
    seed: u64,
) -> Result<(), Indistinguishable> {
    let n = code.n();
    let n_flags = reps.first().map_or(1, |r| r.flags.len());
    let indices: Vec<usize> = (0..reps.len()).collect();
    let found = (0..samples as u64).into_par_iter().find_map_any(|shot| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(shot);
        let combo: Vec<usize> = indices
            .choose_multiple(&mut rng, size)
            .copied()
            .collect();
        let (error, flags) = combo_effect(reps, &combo, n, n_flags);
        if flags.is_zero() && code.classify(&error) == ErrorClass::TrivialSyndromeLogical {
            Some(combo)
        } else {
            None
        }
    });
    match found {
        None => Ok(()),
        Some(combo) => {
            let half = combo.len() / 2;
            let (a, b) = combo.split_at(half);
            let (error_a, _) = combo_effect(reps, a, n, n_flags);
            let (error_b, _) = combo_effect(reps, b, n, n_flags);
            Err(Indistinguishable {
                combo_a: origins(reps, a),
                combo_b: origins(reps, b),
                error_a,
                error_b,
            })
        }
    }
}
