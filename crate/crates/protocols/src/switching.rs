//! Gauge switching between the H and T forms, and the full T-gate
//! protocol built on top of it.
//!
//! Switching measures the fixing generators of the target form with
//! one-flag circuits, repeats the outcome bundle t+1 times in a row,
//! and applies the GF(2)-solved fix operator. The state's intrinsic
//! gauge outcomes are sticky random bits supplied by the caller; the
//! frame is updated by the applied fix times the ideal fix so that it
//! stays relative to the target-form codeword.

use crate::decoder::Decoder;
use crate::ftec::{run_round, FtecOutcome, InjectedFault};
use ccv_circuits::{MeasurementCircuit, Orderings};
use ccv_codes::{CappedCode, SwitchDirection};
use ccv_pauli::{BitVec, GenCategory, GenTag, Pauli, PauliKind, PauliOperator, StabilizerCode};

/// The one-flag measurement circuits of the fixing generators.
pub fn gauge_schedule(
    ccc: &CappedCode,
    orderings: &Orderings,
    direction: SwitchDirection,
) -> Vec<MeasurementCircuit> {
    let n = ccc.n();
    let n_2d = ccc.n_2d();
    match direction {
        SwitchDirection::HToT => (0..ccc.r())
            .map(|j| {
                MeasurementCircuit::one_flag(
                    GenTag::new(GenCategory::E, PauliKind::Z, j),
                    Orderings::e_order(ccc.e_edges()[j], n_2d),
                    n,
                )
            })
            .collect(),
        SwitchDirection::TToH => (0..ccc.r())
            .map(|j| {
                MeasurementCircuit::one_flag(
                    GenTag::new(GenCategory::F, PauliKind::X, j),
                    orderings.faces[j].clone(),
                    n,
                )
            })
            .collect(),
    }
}

#[derive(Debug, Clone)]
pub struct SwitchOutcome {
    pub frame: PauliOperator,
    pub converged: bool,
    pub rounds: usize,
    /// Observed stabilized gauge outcomes.
    pub outcomes: BitVec,
    /// Cumulative flag bits of the gauge circuits.
    pub flags: BitVec,
}

/// Runs one switching direction.
///
/// The state's intrinsic gauge values are sticky random bits, but in
/// the Pauli-frame picture they cancel exactly: the applied fix for the
/// observed bits times the ideal fix for the intrinsic bits equals the
/// fix solved from the relative outcome flips, which is what
/// `run_round` reports. `outcomes` in the result is that relative
/// vector (zero on a clean run).
pub fn run_code_switch(
    ccc: &CappedCode,
    mut frame: PauliOperator,
    direction: SwitchDirection,
    orderings: &Orderings,
    faults: &[InjectedFault],
    t: usize,
    overflow_allowance: usize,
) -> SwitchOutcome {
    let schedule = gauge_schedule(ccc, orderings, direction);
    let max_rounds = (t + 1) * (t + 1) + overflow_allowance;
    let total_flags: usize = schedule.iter().map(|c| c.n_flags).sum::<usize>().max(1);
    let mut cumulative_flags = BitVec::zeros(total_flags);
    let mut last: Option<(BitVec, BitVec)> = None;
    let mut repeat = 0usize;
    let mut rounds = 0usize;
    let mut converged = false;
    while rounds < max_rounds {
        let round_faults: Vec<_> = faults
            .iter()
            .filter(|f| f.round == rounds)
            .map(|f| &f.fault)
            .collect();
        let (outcomes, round_flags) = run_round(&schedule, &mut frame, &round_faults);
        cumulative_flags.xor_assign(&round_flags);
        let bundle = (outcomes, cumulative_flags.clone());
        repeat = match &last {
            Some(prev) if *prev == bundle => repeat + 1,
            _ => 1,
        };
        last = Some(bundle);
        rounds += 1;
        if repeat == t + 1 {
            converged = true;
            break;
        }
    }
    let (outcomes, flags) = last.expect("at least one round always runs");
    // `outcomes` is relative to the intrinsic bits, so the fix solved
    // from it is (applied fix for the observed bits) × (ideal fix for a
    // clean state) — exactly the frame update relative to the
    // target-form codeword. The fix is linear in its outcome vector.
    let fix = ccc
        .switch_fix_operator(&outcomes, direction)
        .expect("fix system is always solvable");
    frame.multiply_assign(&fix);
    SwitchOutcome {
        frame,
        converged,
        rounds,
        outcomes,
        flags,
    }
}

/// Where a fault lands inside the T-gate protocol.
#[derive(Debug, Clone)]
pub enum TGatePhase {
    /// During the H→T switch (round-addressed gauge circuits).
    SwitchToT(InjectedFault),
    /// A Pauli on one data qubit during the transversal T layer.
    TLayer(PauliOperator),
    /// During the T→H switch.
    SwitchBack(InjectedFault),
    /// During the final extended error correction.
    Ftec(InjectedFault),
}

#[derive(Debug, Clone)]
pub struct TGateReport {
    pub frame: PauliOperator,
    pub converged: bool,
    pub t1_flags: BitVec,
    pub t3_flags: BitVec,
    pub ftec: FtecOutcome,
}

/// The full T-gate protocol: switch to the T form, apply the
/// transversal T layer (fault locations only; the frame passes through
/// unchanged), switch back, then run the extended error correction
/// whose decoder also knows the switching circuits' fault residuals.
///
/// `ext_decoder` must be built over the extended schedule
/// [gauge H→T circuits, gauge T→H circuits, FTEC schedule] so its flag
/// space matches the concatenated flags assembled here.
#[allow(clippy::too_many_arguments)]
pub fn run_t_gate(
    ccc: &CappedCode,
    code_h: &StabilizerCode,
    orderings: &Orderings,
    ftec_schedule: &[MeasurementCircuit],
    ext_decoder: &Decoder,
    mut frame: PauliOperator,
    faults: &[TGatePhase],
    t: usize,
    overflow_allowance: usize,
) -> TGateReport {
    let t1_faults: Vec<InjectedFault> = faults
        .iter()
        .filter_map(|f| match f {
            TGatePhase::SwitchToT(x) => Some(x.clone()),
            _ => None,
        })
        .collect();
    let t1 = run_code_switch(
        ccc,
        frame,
        SwitchDirection::HToT,
        orderings,
        &t1_faults,
        t,
        overflow_allowance,
    );
    frame = t1.frame;
    for f in faults {
        if let TGatePhase::TLayer(p) = f {
            frame.multiply_assign(p);
        }
    }
    let t3_faults: Vec<InjectedFault> = faults
        .iter()
        .filter_map(|f| match f {
            TGatePhase::SwitchBack(x) => Some(x.clone()),
            _ => None,
        })
        .collect();
    let t3 = run_code_switch(
        ccc,
        frame,
        SwitchDirection::TToH,
        orderings,
        &t3_faults,
        t,
        overflow_allowance,
    );
    frame = t3.frame;
    let ftec_faults: Vec<InjectedFault> = faults
        .iter()
        .filter_map(|f| match f {
            TGatePhase::Ftec(x) => Some(x.clone()),
            _ => None,
        })
        .collect();
    // run the final EC, then decode with the switching flags prepended
    let base = crate::ftec::run_ftec_keyed(
        code_h,
        ftec_schedule,
        ext_decoder,
        frame,
        &ftec_faults,
        t,
        overflow_allowance,
        &[&t1.flags, &t3.flags],
    );
    TGateReport {
        frame: base.frame.clone(),
        converged: t1.converged && t3.converged && base.converged,
        t1_flags: t1.flags,
        t3_flags: t3.flags,
        ftec: base,
    }
}

/// The extended schedule whose flag layout the T-gate decoder uses:
/// both switching directions' gauge circuits followed by the regular
/// extraction schedule.
pub fn t_gate_extended_schedule(
    ccc: &CappedCode,
    orderings: &Orderings,
    ftec_schedule: &[MeasurementCircuit],
) -> Vec<MeasurementCircuit> {
    let mut combined = gauge_schedule(ccc, orderings, SwitchDirection::HToT);
    combined.extend(gauge_schedule(ccc, orderings, SwitchDirection::TToH));
    combined.extend(ftec_schedule.iter().cloned());
    combined
}

/// Single-fault representatives of the whole T-gate pipeline, split by
/// sector, with flags in the extended layout (switch-to-T flags,
/// switch-back flags, extraction flags). Faults during the switching
/// phases are simulated through the remaining pipeline so that the
/// recorded residual includes the gauge-fix response; faults during the
/// final extraction reuse the schedule's own representatives.
pub fn t_gate_extended_reps(
    ccc: &CappedCode,
    orderings: &Orderings,
    ftec_schedule: &[MeasurementCircuit],
    t: usize,
) -> (Vec<ccv_faults::FaultRep>, Vec<ccv_faults::FaultRep>) {
    use crate::ftec::enumerate_round_faults;
    use ccv_faults::{enumerate_single_faults, schedule_flag_count, FaultRep, FaultSector};
    let n = ccc.n();
    let h2t = gauge_schedule(ccc, orderings, SwitchDirection::HToT);
    let t2h = gauge_schedule(ccc, orderings, SwitchDirection::TToH);
    let n1 = schedule_flag_count(&h2t);
    let n2 = schedule_flag_count(&t2h);
    let n4 = schedule_flag_count(ftec_schedule);
    let identity = PauliOperator::identity(n);
    let max_rounds = (t + 1) * (t + 1);

    // raw (residual at extraction entry, extended flags, origin)
    let mut raw: Vec<(PauliOperator, BitVec, String)> = Vec::new();
    // phase 1: faults during the switch to the T form
    for round in 0..max_rounds {
        for fault in enumerate_round_faults(&h2t, n) {
            let injected = [InjectedFault {
                round,
                fault: fault.clone(),
            }];
            let s1 = run_code_switch(
                ccc,
                identity.clone(),
                SwitchDirection::HToT,
                orderings,
                &injected,
                t,
                0,
            );
            if round >= s1.rounds {
                continue;
            }
            let s2 = run_code_switch(
                ccc,
                s1.frame,
                SwitchDirection::TToH,
                orderings,
                &[],
                t,
                0,
            );
            let flags = s1.flags.concat(&BitVec::zeros(n2)).concat(&BitVec::zeros(n4));
            raw.push((s2.frame, flags, format!("switch-to-T r{round} {fault:?}")));
        }
    }
    // phase 2: Pauli faults at the transversal-T locations
    for q in 0..n {
        for p in [Pauli::X, Pauli::Y, Pauli::Z] {
            let s2 = run_code_switch(
                ccc,
                PauliOperator::single(n, q, p),
                SwitchDirection::TToH,
                orderings,
                &[],
                t,
                0,
            );
            let flags = BitVec::zeros(n1 + n2 + n4);
            raw.push((s2.frame, flags, format!("T-layer {p:?}{q}")));
        }
    }
    // phase 3: faults during the switch back
    for round in 0..max_rounds {
        for fault in enumerate_round_faults(&t2h, n) {
            let injected = [InjectedFault {
                round,
                fault: fault.clone(),
            }];
            let s2 = run_code_switch(
                ccc,
                identity.clone(),
                SwitchDirection::TToH,
                orderings,
                &injected,
                t,
                0,
            );
            if round >= s2.rounds {
                continue;
            }
            let flags = BitVec::zeros(n1).concat(&s2.flags).concat(&BitVec::zeros(n4));
            raw.push((s2.frame, flags, format!("switch-back r{round} {fault:?}")));
        }
    }

    // split the simulated residuals by sector; flags of X-kind circuits
    // respond only to X-sector components and vice versa, so the sector
    // masks separate the flag vector
    let ext = t_gate_extended_schedule(ccc, orderings, ftec_schedule);
    let (x_mask, z_mask) = crate::decoder::flag_masks(&ext);
    let mut x_reps = Vec::new();
    let mut z_reps = Vec::new();
    for (error, flags, origin) in raw {
        let ex = PauliOperator::from_xz(error.x_bits().clone(), BitVec::zeros(n));
        let ez = PauliOperator::from_xz(BitVec::zeros(n), error.z_bits().clone());
        let mut fx = flags.clone();
        let mut fz = flags.clone();
        for k in 0..flags.len() {
            if !x_mask.get(k) {
                fx.set(k, false);
            }
            if !z_mask.get(k) {
                fz.set(k, false);
            }
        }
        if !ex.is_identity() || !fx.is_zero() {
            x_reps.push(FaultRep {
                error: ex,
                flags: fx,
                origin: origin.clone(),
            });
        }
        if !ez.is_identity() || !fz.is_zero() {
            z_reps.push(FaultRep {
                error: ez,
                flags: fz,
                origin,
            });
        }
    }
    // phase 4: faults during the final extraction (native reps, flags
    // shifted into the extended layout)
    let prefix = BitVec::zeros(n1 + n2);
    for rep in enumerate_single_faults(ftec_schedule, FaultSector::X) {
        x_reps.push(FaultRep {
            error: rep.error,
            flags: prefix.concat(&rep.flags),
            origin: rep.origin,
        });
    }
    for rep in enumerate_single_faults(ftec_schedule, FaultSector::Z) {
        z_reps.push(FaultRep {
            error: rep.error,
            flags: prefix.concat(&rep.flags),
            origin: rep.origin,
        });
    }
    (x_reps, z_reps)
}

