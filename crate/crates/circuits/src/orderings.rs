//! CNOT orderings for capped-color-code syndrome extraction.
//!
//! The X and Z circuit of a generator pair always share one ordering.
//! Face (f) orderings are permutations of the face's center-plane
//! support; the v ordering of a face is its f ordering doubled into a
//! sawtooth that alternates center and bottom partners; the cap
//! ordering covers the top qubit and the whole center plane.

use ccv_codes::CappedCode;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// A full ordering assignment for one capped code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orderings {
    pub d: usize,
    /// Data-CNOT order per face, center-plane labels (1-based).
    pub faces: Vec<Vec<usize>>,
    /// Data-CNOT order of the cap generators (0 is the top qubit).
    pub cap: Vec<usize>,
}

impl Orderings {
    /// The distance-3 orderings that make every single fault
    /// distinguishable even without flags.
    pub fn builtin_d3() -> Self {
        Orderings {
            d: 3,
            faces: vec![vec![2, 5, 3, 1], vec![3, 6, 4, 1], vec![4, 7, 2, 1]],
            cap: (0..=7).collect(),
        }
    }

    /// The distance-5 orderings found by the condition-driven search:
    /// counterclockwise boundary cycles with faces 5 and 7 rotated.
    pub fn builtin_d5() -> Self {
        Orderings {
            d: 5,
            faces: vec![
                vec![2, 5, 6, 7, 3, 1],
                vec![3, 7, 14, 8],
                vec![9, 8, 14, 17],
                vec![4, 1, 3, 8, 9, 10],
                vec![15, 11, 4, 10],
                vec![11, 15, 18, 12],
                vec![12, 13, 2, 1, 4, 11],
                vec![5, 2, 13, 16],
                vec![16, 19, 6, 5],
            ],
            cap: (0..=19).collect(),
        }
    }

    /// Uniformly random face permutations and cap permutation (the
    /// one-flag guarantees must hold for any of these).
    pub fn random<R: Rng>(ccc: &CappedCode, rng: &mut R) -> Self {
        let faces = ccc
            .faces()
            .iter()
            .map(|f| {
                let mut o = f.clone();
                o.shuffle(rng);
                o
            })
            .collect();
        let mut cap: Vec<usize> = (0..=ccc.n_2d()).collect();
        cap.shuffle(rng);
        Orderings {
            d: ccc.d(),
            faces,
            cap,
        }
    }

    /// Natural default: faces in counterclockwise cycle order, cap in
    /// numerical order.
    pub fn natural(ccc: &CappedCode) -> Self {
        Orderings {
            d: ccc.d(),
            faces: ccc.face_cycles().to_vec(),
            cap: (0..=ccc.n_2d()).collect(),
        }
    }

    /// The v ordering of face j: the f ordering doubled into a sawtooth
    /// over both planes.
    pub fn v_order(&self, j: usize, n_2d: usize) -> Vec<usize> {
        sawtooth(&self.faces[j], n_2d)
    }

    /// The e ordering of a vertical face over edge (a, b).
    pub fn e_order(edge: (usize, usize), n_2d: usize) -> Vec<usize> {
        vec![edge.0, edge.0 + n_2d, edge.1, edge.1 + n_2d]
    }
}

/// Doubles a center-plane ordering into (q₁, q₁+offset, q₂, q₂+offset, …).
pub fn sawtooth(order: &[usize], offset: usize) -> Vec<usize> {
    order.iter().flat_map(|&q| [q, q + offset]).collect()
}
