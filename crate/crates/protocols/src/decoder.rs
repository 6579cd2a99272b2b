//! Lookup-table decoding from outcome bundles to corrections.
//!
//! A table maps (syndrome bits, cumulative flag bits) to a correction;
//! it is built from all combinations of at most t single-fault
//! representatives. CSS codes split into an X table (keyed by Z-type
//! generator outcomes and X-circuit flags) and a Z table; non-CSS codes
//! use one undivided table. Unlisted keys fall back to the
//! lexicographically least Pauli with the observed syndrome, so a
//! correction always exists.

use ccv_circuits::MeasurementCircuit;
use ccv_faults::{FaultRep, Indistinguishable};
use ccv_pauli::{gf2, BitVec, ErrorClass, PauliKind, PauliOperator, StabilizerCode};
use std::collections::HashMap;

/// Any Pauli whose syndrome equals `rhs`, deterministic (lex-least
/// symplectic solution). None only when the syndrome is inconsistent,
/// which cannot happen for syndromes of actual errors.
pub fn fallback_correction(code: &StabilizerCode, rhs: &BitVec) -> Option<PauliOperator> {
    let n = code.n();
    // e anticommutes with g iff (x_e|z_e)·(z_g|x_g) is odd
    let rows: Vec<BitVec> = code
        .stab_gens()
        .iter()
        .map(|g| g.z_bits().concat(g.x_bits()))
        .collect();
    let rhs: Vec<bool> = (0..rows.len()).map(|i| rhs.get(i)).collect();
    gf2::solve_lex_min(2 * n, &rows, &rhs).map(|v| PauliOperator::from_symplectic(&v))
}

/// Keeps only the representatives whose fault raised no flag. The
/// distinguishable error sets E_r are built from these: an error
/// handed from one gadget to the next carries no flag information, so
/// only zero-flag residuals are valid gadget inputs/outputs.
pub fn zero_flag_reps(reps: &[FaultRep]) -> Vec<FaultRep> {
    reps.iter().filter(|r| r.flags.is_zero()).cloned().collect()
}

/// Combined errors of every combination of at most `s` reps whose flag
/// vectors cancel to zero. This is the correct correctable set E_s:
/// individually flagged faults may pair up into an unobservable (zero
/// total flag) combination, so restricting to individually unflagged
/// reps would be too narrow for s ≥ 2. Results are deduplicated by
/// residual error and carry an all-zero flag vector.
pub fn flag_cancelling_combos(reps: &[FaultRep], s: usize) -> Vec<FaultRep> {
    let n_flags = reps.first().map_or(1, |r| r.flags.len());
    let mut seen: HashMap<BitVec, FaultRep> = HashMap::new();
    let mut frontier: Vec<(usize, PauliOperator, BitVec, String)> = Vec::new();
    if let Some(first) = reps.first() {
        let n = first.error.n();
        frontier.push((
            0,
            PauliOperator::identity(n),
            BitVec::zeros(n_flags),
            String::new(),
        ));
    }
    for _ in 0..s {
        let mut next = Vec::new();
        for (from, error, flags, origin) in &frontier {
            for (j, rep) in reps.iter().enumerate().skip(*from) {
                let error2 = error.multiply(&rep.error);
                let mut flags2 = flags.clone();
                flags2.xor_assign(&rep.flags);
                let origin2 = if origin.is_empty() {
                    rep.origin.clone()
                } else {
                    format!("{origin} + {}", rep.origin)
                };
                if flags2.is_zero() && !error2.is_identity() {
                    seen.entry(error2.to_symplectic()).or_insert_with(|| FaultRep {
                        error: error2.clone(),
                        flags: flags2.clone(),
                        origin: origin2.clone(),
                    });
                }
                next.push((j + 1, error2, flags2, origin2));
            }
        }
        frontier = next;
    }
    seen.into_values().collect()
}

/// One lookup table over (syndrome, flags) keys.
#[derive(Debug, Clone)]
pub struct DecoderTable {
    pub entries: HashMap<(BitVec, BitVec), PauliOperator>,
}

impl DecoderTable {
    /// Builds the table from all combinations of at most `t` reps,
    /// refusing on any key collision between logically inequivalent
    /// combined errors (i.e. when the rep set is not distinguishable).
    pub fn build(
        code: &StabilizerCode,
        reps: &[FaultRep],
        t: usize,
    ) -> Result<Self, Indistinguishable> {
        let keyed: Vec<(BitVec, BitVec, &FaultRep)> = reps
            .iter()
            .map(|r| (code.syndrome(&r.error).bits, r.flags.clone(), r))
            .collect();
        let mut entries: HashMap<(BitVec, BitVec), (PauliOperator, Vec<String>)> =
            HashMap::new();
        let n_flags = reps.first().map_or(1, |r| r.flags.len());
        let syn_len = code.stab_gens().len();
        let mut insert = |syn: BitVec,
                          flags: BitVec,
                          error: PauliOperator,
                          origin: Vec<String>|
         -> Result<(), Indistinguishable> {
            match entries.get(&(syn.clone(), flags.clone())) {
                None => {
                    entries.insert((syn, flags), (error, origin));
                    Ok(())
                }
                Some((existing, existing_origin)) => {
                    let product = existing.multiply(&error);
                    if code.classify(&product) == ErrorClass::TrivialSyndromeLogical {
                        Err(Indistinguishable {
                            combo_a: existing_origin.clone(),
                            combo_b: origin,
                            error_a: existing.clone(),
                            error_b: error,
                        })
                    } else {
                        Ok(())
                    }
                }
            }
        };
        insert(
            BitVec::zeros(syn_len),
            BitVec::zeros(n_flags),
            PauliOperator::identity(code.n()),
            vec![],
        )?;
        let mut stack: Vec<(usize, BitVec, BitVec, PauliOperator, Vec<String>)> = vec![];
        for (i, (syn, flags, rep)) in keyed.iter().enumerate() {
            stack.push((
                i,
                syn.clone(),
                flags.clone(),
                rep.error.clone(),
                vec![rep.origin.clone()],
            ));
        }
        let mut depth = 1;
        while depth <= t {
            let mut next = Vec::new();
            for (i, syn, flags, error, origin) in &stack {
                insert(syn.clone(), flags.clone(), error.clone(), origin.clone())?;
                if depth < t {
                    for (j, (s2, f2, rep2)) in keyed.iter().enumerate().skip(i + 1) {
                        let mut syn2 = syn.clone();
                        syn2.xor_assign(s2);
                        let mut flags2 = flags.clone();
                        flags2.xor_assign(f2);
                        let mut origin2 = origin.clone();
                        origin2.push(rep2.origin.clone());
                        next.push((j, syn2, flags2, error.multiply(&rep2.error), origin2));
                    }
                }
            }
            stack = next;
            depth += 1;
        }
        Ok(DecoderTable {
            entries: entries
                .into_iter()
                .map(|(k, (e, _))| (k, e))
                .collect(),
        })
    }

    pub fn lookup(&self, syn: &BitVec, flags: &BitVec) -> Option<&PauliOperator> {
        self.entries.get(&(syn.clone(), flags.clone()))
    }

    /// Adds best-effort entries for combinations of `t+1..=t_max` reps
    /// on keys the exact stages left vacant (first candidate wins, no
    /// collision refusal). Keys reachable by at most `t` faults keep
    /// their exact entries, so the ≤t guarantees are unchanged; the
    /// extra entries merely replace the generic syndrome-solving
    /// fallback with a fault-consistent choice, a freedom the
    /// correction procedure explicitly leaves open.
    pub fn extend_best_effort(
        &mut self,
        code: &StabilizerCode,
        reps: &[FaultRep],
        t: usize,
        t_max: usize,
    ) {
        let keyed: Vec<(BitVec, BitVec, &FaultRep)> = reps
            .iter()
            .map(|r| (code.syndrome(&r.error).bits, r.flags.clone(), r))
            .collect();
        let mut stack: Vec<(usize, BitVec, BitVec, PauliOperator)> = keyed
            .iter()
            .enumerate()
            .map(|(i, (syn, flags, rep))| (i, syn.clone(), flags.clone(), rep.error.clone()))
            .collect();
        let mut depth = 1;
        while depth < t_max {
            let mut next = Vec::new();
            for (i, syn, flags, error) in &stack {
                for (j, (s2, f2, rep2)) in keyed.iter().enumerate().skip(i + 1) {
                    let mut syn2 = syn.clone();
                    syn2.xor_assign(s2);
                    let mut flags2 = flags.clone();
                    flags2.xor_assign(f2);
                    let error2 = error.multiply(&rep2.error);
                    if depth + 1 > t {
                        self.entries
                            .entry((syn2.clone(), flags2.clone()))
                            .or_insert_with(|| error2.clone());
                    }
                    next.push((j, syn2, flags2, error2));
                }
            }
            stack = next;
            depth += 1;
        }
    }
}

/// Full decoder: either one general table, or the CSS split with
/// per-sector key masks.
#[derive(Debug, Clone)]
pub enum Decoder {
    General(DecoderTable),
    Css {
        x_table: DecoderTable,
        z_table: DecoderTable,
        /// Syndrome positions of Z-kind generators (sensitive to X
        /// errors) and of X-kind generators.
        z_gen_bits: BitVec,
        x_gen_bits: BitVec,
        /// Flag positions belonging to X-kind and Z-kind circuits.
        x_circuit_flags: BitVec,
        z_circuit_flags: BitVec,
    },
}

/// Flag-bit positions per circuit kind, circuits concatenated in
/// schedule order (matching fault-rep flag layout).
pub fn flag_masks(schedule: &[MeasurementCircuit]) -> (BitVec, BitVec) {
    let total: usize = schedule.iter().map(|c| c.n_flags).sum();
    let total = total.max(1);
    let mut x_mask = BitVec::zeros(total);
    let mut z_mask = BitVec::zeros(total);
    let mut base = 0;
    for c in schedule {
        for k in 0..c.n_flags {
            match c.tag.kind {
                PauliKind::X => x_mask.set(base + k, true),
                PauliKind::Z => z_mask.set(base + k, true),
            }
        }
        base += c.n_flags;
    }
    (x_mask, z_mask)
}

fn masked(v: &BitVec, mask: &BitVec) -> BitVec {
    let mut out = v.clone();
    for i in 0..out.len() {
        if !mask.get(i) {
            out.set(i, false);
        }
    }
    out
}

impl Decoder {
    /// CSS-split decoder from the schedule's single-fault reps: the X
    /// table from X-sector reps, the Z table from Z-sector reps.
    pub fn build_css(
        code: &StabilizerCode,
        schedule: &[MeasurementCircuit],
        t: usize,
    ) -> Result<Self, Indistinguishable> {
        use ccv_faults::{enumerate_single_faults, FaultSector};
        let x_reps = enumerate_single_faults(schedule, FaultSector::X);
        let z_reps = enumerate_single_faults(schedule, FaultSector::Z);
        Self::build_css_from_reps(code, schedule, &x_reps, &z_reps, t)
    }

    /// CSS-split decoder over caller-supplied per-sector reps (used by
    /// the ideal decoder, which restricts to zero-flag reps).
    pub fn build_css_from_reps(
        code: &StabilizerCode,
        schedule: &[MeasurementCircuit],
        x_reps: &[FaultRep],
        z_reps: &[FaultRep],
        t: usize,
    ) -> Result<Self, Indistinguishable> {
        let x_table = DecoderTable::build(code, x_reps, t)?;
        let z_table = DecoderTable::build(code, z_reps, t)?;
        let syn_len = code.stab_gens().len();
        let mut z_gen_bits = BitVec::zeros(syn_len);
        let mut x_gen_bits = BitVec::zeros(syn_len);
        for (i, tag) in code.gen_tags().iter().enumerate() {
            match tag.kind {
                PauliKind::Z => z_gen_bits.set(i, true),
                PauliKind::X => x_gen_bits.set(i, true),
            }
        }
        let (x_circuit_flags, z_circuit_flags) = flag_masks(schedule);
        Ok(Decoder::Css {
            x_table,
            z_table,
            z_gen_bits,
            x_gen_bits,
            x_circuit_flags,
            z_circuit_flags,
        })
    }

    /// CSS-split decoder whose per-sector tables also carry
    /// best-effort entries for up to `extra` faults beyond `t`. The
    /// ≤t behavior is identical to `build_css`; beyond that, table
    /// hits replace the generic fallback and noticeably reduce
    /// miscorrections of multi-fault shots.
    pub fn build_css_best_effort(
        code: &StabilizerCode,
        schedule: &[MeasurementCircuit],
        t: usize,
        extra: usize,
    ) -> Result<Self, Indistinguishable> {
        use ccv_faults::{enumerate_single_faults, FaultSector};
        let x_reps = enumerate_single_faults(schedule, FaultSector::X);
        let z_reps = enumerate_single_faults(schedule, FaultSector::Z);
        let mut decoder = Self::build_css_from_reps(code, schedule, &x_reps, &z_reps, t)?;
        if let Decoder::Css {
            x_table, z_table, ..
        } = &mut decoder
        {
            x_table.extend_best_effort(code, &x_reps, t, t + extra);
            z_table.extend_best_effort(code, &z_reps, t, t + extra);
        }
        Ok(decoder)
    }

    /// Undivided decoder over the full fault sector.
    pub fn build_general(
        code: &StabilizerCode,
        schedule: &[MeasurementCircuit],
        t: usize,
    ) -> Result<Self, Indistinguishable> {
        use ccv_faults::{enumerate_single_faults, FaultSector};
        let reps = enumerate_single_faults(schedule, FaultSector::Full);
        Ok(Decoder::General(DecoderTable::build(code, &reps, t)?))
    }

    /// The correction for an observed bundle; never fails thanks to the
    /// syndrome-solving fallback.
    pub fn decode(&self, code: &StabilizerCode, syn: &BitVec, flags: &BitVec) -> PauliOperator {
        match self {
            Decoder::General(table) => table
                .lookup(syn, flags)
                .cloned()
                .unwrap_or_else(|| {
                    fallback_correction(code, syn).expect("consistent syndrome")
                }),
            Decoder::Css {
                x_table,
                z_table,
                z_gen_bits,
                x_gen_bits,
                x_circuit_flags,
                z_circuit_flags,
            } => {
                let key_x = (masked(syn, z_gen_bits), masked(flags, x_circuit_flags));
                let key_z = (masked(syn, x_gen_bits), masked(flags, z_circuit_flags));
                let fx = x_table.lookup(&key_x.0, &key_x.1).cloned().unwrap_or_else(|| {
                    fallback_correction(code, &key_x.0).expect("consistent syndrome")
                });
                let fz = z_table.lookup(&key_z.0, &key_z.1).cloned().unwrap_or_else(|| {
                    fallback_correction(code, &key_z.0).expect("consistent syndrome")
                });
                fx.multiply(&fz)
            }
        }
    }
}

/// The ideal decoder: corrects any error in the distinguishable error
/// set E_t exactly (decoding its syndrome against the zero-flag
/// residual tables), and falls back to an arbitrary syndrome-matching
/// Pauli outside E_t. Used as the failure referee after protocols run.
pub struct IdealDecoder {
    inner: Decoder,
    flag_len: usize,
}

impl IdealDecoder {
    /// Ideal decoder for a CSS code measured by `schedule`, built from
    /// the per-sector flag-cancelling fault combinations of size up
    /// to t (each entering the table as one combined residual).
    pub fn for_css_schedule(
        code: &StabilizerCode,
        schedule: &[MeasurementCircuit],
        t: usize,
    ) -> Result<Self, Indistinguishable> {
        use ccv_faults::{enumerate_single_faults, FaultSector};
        let x = enumerate_single_faults(schedule, FaultSector::X);
        let z = enumerate_single_faults(schedule, FaultSector::Z);
        Self::from_css_reps(code, schedule, &x, &z, t)
    }

    /// Ideal decoder over caller-supplied per-sector reps (reduced to
    /// their flag-cancelling ≤t combinations), keyed in `schedule`'s
    /// flag layout.
    pub fn from_css_reps(
        code: &StabilizerCode,
        schedule: &[MeasurementCircuit],
        x_reps: &[FaultRep],
        z_reps: &[FaultRep],
        t: usize,
    ) -> Result<Self, Indistinguishable> {
        use ccv_faults::schedule_flag_count;
        let x = flag_cancelling_combos(x_reps, t);
        let z = flag_cancelling_combos(z_reps, t);
        let inner = Decoder::build_css_from_reps(code, schedule, &x, &z, t.min(1))?;
        Ok(IdealDecoder {
            inner,
            flag_len: schedule_flag_count(schedule),
        })
    }

    /// Ideal decoder with one undivided table, for non-CSS protocols.
    pub fn for_general_schedule(
        code: &StabilizerCode,
        schedule: &[MeasurementCircuit],
        t: usize,
    ) -> Result<Self, Indistinguishable> {
        use ccv_faults::{enumerate_single_faults, schedule_flag_count, FaultSector};
        let reps =
            flag_cancelling_combos(&enumerate_single_faults(schedule, FaultSector::Full), t);
        let inner = Decoder::General(DecoderTable::build(code, &reps, t.min(1))?);
        Ok(IdealDecoder {
            inner,
            flag_len: schedule_flag_count(schedule),
        })
    }

    /// Correction the ideal decoder would apply to `e`.
    pub fn correction(&self, code: &StabilizerCode, e: &PauliOperator) -> PauliOperator {
        let syn = code.syndrome(e).bits;
        self.inner
            .decode(code, &syn, &BitVec::zeros(self.flag_len))
    }

    /// Logical charge left after ideal decoding: (false, false) means
    /// the logical state is intact.
    pub fn decode(&self, code: &StabilizerCode, e: &PauliOperator) -> (bool, bool) {
        let residual = e.multiply(&self.correction(code, e));
        debug_assert!(code.syndrome(&residual).bits.is_zero());
        code.logical_charge(&residual)
    }
}

/// Membership oracle for the sets E_s of combined errors of at most s
/// faults, up to stabilizer equivalence. All combos up to size s are
/// precomputed as canonical coset representatives, so queries are one
/// reduction plus a hash lookup.
pub struct ErrorSetOracle {
    echelon: gf2::Echelon,
    /// Canonical representatives of all combos of size ≤ s.
    members: std::collections::HashSet<BitVec>,
}

impl ErrorSetOracle {
    pub fn new(code: &StabilizerCode, reps: &[FaultRep], s: usize) -> Self {
        let symplectic: Vec<BitVec> =
            code.stab_gens().iter().map(|g| g.to_symplectic()).collect();
        let echelon = gf2::Echelon::from_rows(2 * code.n(), symplectic.iter());
        let errors: Vec<PauliOperator> = reps.iter().map(|r| r.error.clone()).collect();
        let mut members = std::collections::HashSet::new();
        let identity = PauliOperator::identity(code.n());
        members.insert(echelon.reduce(&identity.to_symplectic()));
        let mut frontier = vec![(0usize, identity)];
        for _ in 0..s {
            let mut next = Vec::new();
            for (from, e) in &frontier {
                for (j, err) in errors.iter().enumerate().skip(*from) {
                    let prod = e.multiply(err);
                    members.insert(echelon.reduce(&prod.to_symplectic()));
                    next.push((j + 1, prod));
                }
            }
            frontier = next;
        }
        ErrorSetOracle { echelon, members }
    }

    /// True iff `e` is stabilizer-equivalent to a combined error of at
    /// most s faults.
    pub fn contains(&self, e: &PauliOperator) -> bool {
        self.members.contains(&self.echelon.reduce(&e.to_symplectic()))
    }
}

/// CSS-form distinguishable error set E_s = {Ex·Ez}: the X part must be
/// a combined error of at most s zero-flag X-sector residuals, and the
/// Z part likewise, each up to stabilizer equivalence.
pub struct CssErrorOracle {
    x: ErrorSetOracle,
    z: ErrorSetOracle,
}

impl CssErrorOracle {
    pub fn for_schedule(
        code: &StabilizerCode,
        schedule: &[MeasurementCircuit],
        s: usize,
    ) -> Self {
        use ccv_faults::{enumerate_single_faults, FaultSector};
        let x = enumerate_single_faults(schedule, FaultSector::X);
        let z = enumerate_single_faults(schedule, FaultSector::Z);
        Self::from_reps(code, &x, &z, s)
    }

    /// E_s oracle over caller-supplied per-sector reps (reduced to
    /// their flag-cancelling ≤s combinations).
    pub fn from_reps(
        code: &StabilizerCode,
        x_reps: &[FaultRep],
        z_reps: &[FaultRep],
        s: usize,
    ) -> Self {
        let x = flag_cancelling_combos(x_reps, s);
        let z = flag_cancelling_combos(z_reps, s);
        CssErrorOracle {
            x: ErrorSetOracle::new(code, &x, 1),
            z: ErrorSetOracle::new(code, &z, 1),
        }
    }

    pub fn contains(&self, e: &PauliOperator) -> bool {
        let n = e.n();
        let ex = PauliOperator::from_xz(e.x_bits().clone(), BitVec::zeros(n));
        let ez = PauliOperator::from_xz(BitVec::zeros(n), e.z_bits().clone());
        self.x.contains(&ex) && self.z.contains(&ez)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ccv_circuits::{build_schedule, FlagStyle, Orderings};
    use ccv_codes::{CappedCode, Form};

    #[test]
    fn fallback_has_the_requested_syndrome() {
        let ccc = CappedCode::build(3).unwrap();
        let code = ccc.fix_gauge(Form::H).unwrap();
        for e in [
            PauliOperator::x_error(15, [4]),
            PauliOperator::z_error(15, [2, 9]),
            PauliOperator::single(15, 0, ccv_pauli::Pauli::Y),
        ] {
            let syn = code.syndrome(&e).bits;
            let r = fallback_correction(&code, &syn).unwrap();
            assert_eq!(code.syndrome(&r).bits, syn);
        }
    }

    #[test]
    fn ideal_decoder_is_clean_on_small_errors_and_charged_on_logicals() {
        use ccv_pauli::ErrorClass;
        let ccc = CappedCode::build(3).unwrap();
        let code = ccc.fix_gauge(Form::H).unwrap();
        let schedule =
            build_schedule(&ccc, Form::H, &Orderings::builtin_d3(), FlagStyle::OneFlag)
                .unwrap();
        let ideal = IdealDecoder::for_css_schedule(&code, &schedule, 1).unwrap();
        assert_eq!(ideal.decode(&code, &PauliOperator::identity(15)), (false, false));
        assert_eq!(ideal.decode(&code, &code.stab_gens()[2]), (false, false));
        let logical_z = PauliOperator::z_error(15, 0..15);
        assert_eq!(ideal.decode(&code, &logical_z), (false, true));
        // every weight-1 error is in E_1 and decodes exactly
        for q in 0..15 {
            for p in [ccv_pauli::Pauli::X, ccv_pauli::Pauli::Y, ccv_pauli::Pauli::Z] {
                let e = PauliOperator::single(15, q, p);
                let residual = e.multiply(&ideal.correction(&code, &e));
                assert_eq!(
                    code.classify(&residual),
                    ErrorClass::TrivialSyndromeStabilizer,
                    "{p:?} on {q}"
                );
            }
        }
    }

    #[test]
    fn css_table_corrects_every_single_rep() {
        use ccv_faults::{enumerate_single_faults, FaultSector};
        use ccv_pauli::ErrorClass;
        let ccc = CappedCode::build(3).unwrap();
        let code = ccc.fix_gauge(Form::H).unwrap();
        let schedule =
            build_schedule(&ccc, Form::H, &Orderings::builtin_d3(), FlagStyle::OneFlag)
                .unwrap();
        let decoder = Decoder::build_css(&code, &schedule, 1).unwrap();
        for rep in enumerate_single_faults(&schedule, FaultSector::Full) {
            let correction =
                decoder.decode(&code, &code.syndrome(&rep.error).bits, &rep.flags);
            let residual = rep.error.multiply(&correction);
            assert_eq!(
                code.classify(&residual),
                ErrorClass::TrivialSyndromeStabilizer,
                "{}",
                rep.origin
            );
        }
    }

    #[test]
    fn error_set_oracle_matches_small_cases() {
        use ccv_faults::{enumerate_single_faults, FaultSector};
        let ccc = CappedCode::build(3).unwrap();
        let code = ccc.fix_gauge(Form::H).unwrap();
        let schedule =
            build_schedule(&ccc, Form::H, &Orderings::builtin_d3(), FlagStyle::OneFlag)
                .unwrap();
        let reps = enumerate_single_faults(&schedule, FaultSector::Full);
        let oracle = ErrorSetOracle::new(&code, &reps, 1);
        assert!(oracle.contains(&PauliOperator::identity(15)));
        assert!(oracle.contains(&code.stab_gens()[0].clone()));
        for rep in reps.iter().take(30) {
            assert!(oracle.contains(&rep.error));
        }
        // a logical operator is in no E_1
        assert!(!oracle.contains(&PauliOperator::z_error(15, 0..15)));
    }
}
