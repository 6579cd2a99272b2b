//! Fault-tolerant protocol simulation on capped color codes: lookup
//! decoding, repeated flag syndrome extraction, logical measurement and
//! preparation, transversal Cliffords, gauge switching with the T-gate
//! protocol, a stabilizer-tableau oracle, and Monte Carlo rate
//! estimation.

pub mod decoder;
pub mod ftec;
pub mod ftm;
pub mod gates;
pub mod montecarlo;
pub mod switching;
pub mod tableau;

pub use decoder::{
    fallback_correction, flag_cancelling_combos, zero_flag_reps, CssErrorOracle, Decoder,
    DecoderTable, ErrorSetOracle, IdealDecoder,
};
pub use ftec::{
    enumerate_round_faults, run_ftec, run_ftec_keyed, run_round, FtecOutcome, InjectedFault,
    RoundFault, RoundRecord,
};
pub use ftm::{logical_circuit, run_ftm, run_ftp, FtmOutcome, PrepBasis};
pub use gates::{
    apply_transversal, frame_through_h, frame_through_s, frames_through_cnot,
    transversal_preserves_code, GateError, TransversalGate,
};
pub use montecarlo::{
    mc_result_row, monte_carlo_logical_rate, sample_shot_faults, wilson_interval, McResult,
    NoiseModel, MC_CSV_HEADER,
};
pub use switching::{
    gauge_schedule, run_code_switch, run_t_gate, t_gate_extended_reps, t_gate_extended_schedule,
    SwitchOutcome, TGatePhase, TGateReport,
};
pub use tableau::TableauSim;
