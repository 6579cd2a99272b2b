//! Fault enumeration and distinguishability analysis for syndrome
//! extraction circuits, ordering conditions on the 2D plane, and the
//! CNOT-ordering search.

pub mod conditions;
pub mod distinguish;
pub mod plane;
pub mod reps;
pub mod search;
pub mod table1;

pub use conditions::{
    check_condition_1, check_condition_2, check_condition_3, check_condition_4,
    check_condition_5, check_condition_6, check_conditions, ConditionViolation,
};
pub use distinguish::{
    is_distinguishable, is_distinguishable_via_2t, sampled_product_audit, Indistinguishable,
};
pub use plane::{PlaneData, PlaneElem, VStarElem};
pub use reps::{enumerate_single_faults, schedule_flag_count, FaultRep, FaultSector};
pub use search::{face_candidates, search_orderings, validate_orderings};
pub use table1::{single_fault_table, table_to_csv, FaultTableRow};
