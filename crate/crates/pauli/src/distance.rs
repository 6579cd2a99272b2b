//! Brute-force minimum distance by exhaustive weight-class enumeration.

use crate::code::{ErrorClass, StabilizerCode};
use crate::pauli::{Pauli, PauliOperator};
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering};

/// Which error type to search over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceType {
    X,
    Z,
    Any,
}

/// Result of a bounded brute-force distance search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// No logical of weight ≤ w_max exists; the distance is at least this.
    AtLeast(usize),
}

/// Minimum weight of a zero-syndrome nontrivial logical of the given type,
/// searching weights 1..=w_max exhaustively. Weight classes are scanned in
/// ascending order and each class is parallelized over its first support
/// qubit.
///
/// For `DistanceType::Any` on a CSS code the search restricts to pure
/// X-type and pure Z-type errors per weight class, which is exact because
/// a CSS code detects the two components independently.
pub fn distance_brute_force(
    code: &StabilizerCode,
    ty: DistanceType,
    w_max: usize,
) -> Distance {
    for w in 1..=w_max {
        let found = match ty {
            DistanceType::X => weight_class_has_logical(code, w, &[Pauli::X]),
            DistanceType::Z => weight_class_has_logical(code, w, &[Pauli::Z]),
            DistanceType::Any => {
                if code.is_css() {
                    weight_class_has_logical(code, w, &[Pauli::X])
                        || weight_class_has_logical(code, w, &[Pauli::Z])
                } else {
                    weight_class_has_logical(code, w, &[Pauli::X, Pauli::Y, Pauli::Z])
                }
            }
        };
        if found {
            return Distance::Exact(w);
        }
    }
    Distance::AtLeast(w_max + 1)
}

fn weight_class_has_logical(code: &StabilizerCode, w: usize, letters: &[Pauli]) -> bool {
    let n = code.n();
    if w > n {
        return false;
    }
    let found = AtomicBool::new(false);
    (0..n).into_par_iter().for_each(|first| {
        if found.load(Ordering::Relaxed) {
            return;
        }
        let mut support = Vec::with_capacity(w);
        support.push(first);
        if search_support(code, n, w, letters, &mut support, &found) {
            found.store(true, Ordering::Relaxed);
        }
    });
    found.load(Ordering::Relaxed)
}

fn search_support(
    code: &StabilizerCode,
    n: usize,
    w: usize,
    letters: &[Pauli],
    support: &mut Vec<usize>,
    found: &AtomicBool,
) -> bool {
    if support.len() == w {
        return assignments_have_logical(code, letters, support);
    }
    if found.load(Ordering::Relaxed) {
        return false;
    }
    let lo = support.last().unwrap() + 1;
    // not enough qubits left to reach weight w from here
    for next in lo..=(n - (w - support.len())) {
        support.push(next);
        if search_support(code, n, w, letters, support, found) {
            support.pop();
            return true;
        }
        support.pop();
    }
    false
}

fn assignments_have_logical(
    code: &StabilizerCode,
    letters: &[Pauli],
    support: &[usize],
) -> bool {
    let w = support.len();
    let base: usize = letters.len();
    let total = base.pow(w as u32);
    for mut idx in 0..total {
        let mut op = PauliOperator::identity(code.n());
        for &q in support {
            op.apply(q, letters[idx % base]);
            idx /= base;
        }
        if code.classify(&op) == ErrorClass::TrivialSyndromeLogical {
            return true;
        }
    }
    false
}
