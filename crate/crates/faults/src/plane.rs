//! Per-fault data on the 2D plane used by the ordering conditions.
//!
//! Every Z-sector single fault of a capped-code schedule reduces, up to
//! the measured generator, to one of a few shapes: an idle error on one
//! qubit (top, center, or bottom plane), a contiguous tail of a face
//! circuit (f), a tail of a volume circuit that hits both planes
//! equally (v) or with one extra bottom qubit (v*), or a tail of the
//! cap circuit. The ordering conditions only consume each shape's
//! center-plane face syndrome, weight parities, and flag bit, so those
//! are precomputed here as packed integers.

use ccv_circuits::{FlagStyle, Orderings};
use ccv_codes::CappedCode;

/// An f-class or cap-class representative: face syndrome of the
/// residual, its weight parity, and whether the circuit flag is raised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneElem {
    /// Originating circuit (face index, or 0 for the cap).
    pub circuit: usize,
    /// Face syndrome bits of the residual, bit j = face j.
    pub p: u32,
    /// Weight parity of the residual.
    pub wp: bool,
    pub flag: bool,
}

/// A v*-class representative: the center tail σ plus a bottom tail that
/// exceeds it by exactly one qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VStarElem {
    pub circuit: usize,
    pub p_cen: u32,
    pub wp_cen: bool,
    pub p_bot: u32,
    pub wp_bot: bool,
    pub flag: bool,
}

/// All condition inputs for one orderings assignment.
#[derive(Debug, Clone)]
pub struct PlaneData {
    pub d: usize,
    pub r: usize,
    /// Face syndrome of a single error on center qubit with label q+1.
    pub q_syn: Vec<u32>,
    pub f_elems: Vec<PlaneElem>,
    pub vstar_elems: Vec<VStarElem>,
    pub cap_elems: Vec<PlaneElem>,
}

/// Face syndrome of a set of center-plane labels.
fn syndrome_of(faces: &[Vec<usize>], labels: &[usize]) -> u32 {
    let mut p = 0u32;
    for (j, f) in faces.iter().enumerate() {
        let overlap = labels.iter().filter(|q| f.contains(q)).count();
        if overlap % 2 == 1 {
            p |= 1 << j;
        }
    }
    p
}

/// The (residual, flag) pairs reachable from single faults of one
/// circuit, as tails of its CNOT ordering. `order` is the full data
/// ordering; entries are (start index into `order`, flag). A start of
/// `order.len()` means an empty residual.
fn tail_reps(w: usize, style: FlagStyle) -> Vec<(usize, bool)> {
    let mut reps = Vec::new();
    match style {
        FlagStyle::NonFlag => {
            // a fault after data CNOT k leaves the tail from k+1; the
            // two-qubit fault on CNOT k leaves the tail from k. The
            // full-generator tail (start 0) is trivial and skipped.
            for start in 1..w {
                reps.push((start, false));
            }
        }
        FlagStyle::OneFlag => {
            // faults between the flag CNOTs raise the flag; the two
            // silent residues are the near-full tail (≡ one qubit up to
            // the generator) and the final single qubit
            reps.push((1, false));
            reps.push((w - 1, false));
            for start in 1..=w {
                reps.push((start, true));
            }
        }
    }
    reps
}

impl PlaneData {
    pub fn build(ccc: &CappedCode, orderings: &Orderings, style: FlagStyle) -> Self {
        let mut data = Self::base(ccc, &orderings.cap, style);
        for j in 0..ccc.r() {
            data.add_face(ccc.faces(), j, &orderings.faces[j], style);
        }
        data
    }

    /// The face-independent part: idle-error syndromes and the cap
    /// representatives. Faces are added one at a time during the
    /// ordering search.
    pub fn base(ccc: &CappedCode, cap_order: &[usize], style: FlagStyle) -> Self {
        let faces = ccc.faces();
        let n_2d = ccc.n_2d();
        let q_syn: Vec<u32> = (1..=n_2d)
            .map(|q| syndrome_of(faces, &[q]))
            .collect();
        let mut data = PlaneData {
            d: ccc.d(),
            r: ccc.r(),
            q_syn,
            f_elems: Vec::new(),
            vstar_elems: Vec::new(),
            cap_elems: Vec::new(),
        };
        data.add_cap(faces, cap_order, style);
        data
    }

    /// Adds the f and v/v* representatives of face `j` with the given
    /// data-CNOT ordering.
    pub fn add_face(
        &mut self,
        faces: &[Vec<usize>],
        j: usize,
        order: &[usize],
        style: FlagStyle,
    ) {
        let w = order.len();
        for (start, flag) in tail_reps(w, style) {
            let tail = &order[start..];
            self.f_elems.push(PlaneElem {
                circuit: j,
                p: syndrome_of(faces, tail),
                wp: tail.len() % 2 == 1,
                flag,
            });
        }
        // the v circuit runs the sawtooth-doubled ordering; tails with
        // an odd start have one extra bottom qubit (v*), even starts
        // cover both planes equally (v)
        for (start, flag) in tail_reps(2 * w, style) {
            if start % 2 == 0 {
                continue; // v-class: handled by parity bookkeeping alone
            }
            // start = 2k-1: center tail is order[k..], bottom tail is
            // order[k-1..]
            let k = (start + 1) / 2;
            let cen = &order[k..];
            let bot = &order[k - 1..];
            self.vstar_elems.push(VStarElem {
                circuit: j,
                p_cen: syndrome_of(faces, cen),
                wp_cen: cen.len() % 2 == 1,
                p_bot: syndrome_of(faces, bot),
                wp_bot: bot.len() % 2 == 1,
                flag,
            });
        }
        if style == FlagStyle::OneFlag {
            // flagged v-class tails enter the v* pool as flag carriers
            // with equal center/bottom data so flag cancellation within
            // a circuit stays visible to the checkers
            for (start, flag) in tail_reps(2 * w, style) {
                if start % 2 == 1 || !flag {
                    continue;
                }
                let k = start / 2;
                let cen = &order[k..];
                self.vstar_elems.push(VStarElem {
                    circuit: j,
                    p_cen: syndrome_of(faces, cen),
                    wp_cen: cen.len() % 2 == 1,
                    p_bot: syndrome_of(faces, cen),
                    wp_bot: cen.len() % 2 == 1,
                    flag,
                });
            }
        }
    }

    fn add_cap(&mut self, faces: &[Vec<usize>], order: &[usize], style: FlagStyle) {
        let w = order.len();
        for (start, flag) in tail_reps(w, style) {
            let tail = &order[start..];
            // the top qubit contributes to the weight parity but to no
            // face syndrome
            let centers: Vec<usize> = tail.iter().copied().filter(|&q| q != 0).collect();
            self.cap_elems.push(PlaneElem {
                circuit: 0,
                p: syndrome_of(faces, &centers),
                wp: tail.len() % 2 == 1,
                flag,
            });
        }
    }
}
