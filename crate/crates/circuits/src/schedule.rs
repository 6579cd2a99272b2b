//! Full syndrome-extraction schedules: one measurement circuit per
//! stabilizer generator, in exactly the generator order of the
//! gauge-fixed code, so the outcome vector lines up with the code's
//! syndrome bit order.

use crate::circuit::{FlagStyle, MeasurementCircuit};
use crate::orderings::{sawtooth, Orderings};
use ccv_codes::{CappedCode, Form};
use ccv_pauli::{GenCategory, GenTag, PauliKind};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScheduleError {
    #[error("orderings are for d={got}, code has d={want}")]
    DistanceMismatch { want: usize, got: usize },
}

/// Builds the measurement circuits for one full round of syndrome
/// extraction of the given form.
pub fn build_schedule(
    ccc: &CappedCode,
    form: Form,
    orderings: &Orderings,
    style: FlagStyle,
) -> Result<Vec<MeasurementCircuit>, ScheduleError> {
    if orderings.d != ccc.d() {
        return Err(ScheduleError::DistanceMismatch {
            want: ccc.d(),
            got: orderings.d,
        });
    }
    let n = ccc.n();
    let n_2d = ccc.n_2d();
    let order_for = |tag: &GenTag| -> Vec<usize> {
        match tag.category {
            GenCategory::Cap => orderings.cap.clone(),
            GenCategory::F => orderings.faces[tag.label].clone(),
            GenCategory::V => sawtooth(&orderings.faces[tag.label], n_2d),
            GenCategory::E => Orderings::e_order(ccc.e_edges()[tag.label], n_2d),
            GenCategory::Other => unreachable!("capped codes have no untagged generators"),
        }
    };
    let build = |tag: GenTag| {
        let order = order_for(&tag);
        match style {
            FlagStyle::NonFlag => MeasurementCircuit::non_flag(tag, order, n),
            FlagStyle::OneFlag => MeasurementCircuit::one_flag(tag, order, n),
        }
    };
    let mut circuits = Vec::new();
    for kind in [PauliKind::X, PauliKind::Z] {
        circuits.push(build(GenTag::new(GenCategory::Cap, kind, 0)));
        if kind == PauliKind::Z && form == Form::T {
            for j in 0..ccc.r() {
                circuits.push(build(GenTag::new(GenCategory::E, kind, j)));
            }
        }
        let fixed_faces = matches!((form, kind), (Form::H, _) | (Form::T, PauliKind::Z));
        if fixed_faces {
            for j in 0..ccc.r() {
                circuits.push(build(GenTag::new(GenCategory::F, kind, j)));
            }
        }
        for j in 0..ccc.r() {
            circuits.push(build(GenTag::new(GenCategory::V, kind, j)));
        }
    }
    Ok(circuits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ccv_pauli::PauliOperator;

    #[test]
    fn schedule_matches_generator_order() {
        let ccc = CappedCode::build(3).unwrap();
        for form in [Form::H, Form::T] {
            let code = ccc.fix_gauge(form).unwrap();
            let circuits = build_schedule(
                &ccc,
                form,
                &Orderings::builtin_d3(),
                FlagStyle::NonFlag,
            )
            .unwrap();
            let tags: Vec<_> = circuits.iter().map(|c| c.tag).collect();
            assert_eq!(tags, code.gen_tags());
        }
    }

    #[test]
    fn circuit_outcomes_reproduce_syndromes() {
        let ccc = CappedCode::build(3).unwrap();
        let code = ccc.fix_gauge(Form::H).unwrap();
        let circuits =
            build_schedule(&ccc, Form::H, &Orderings::builtin_d3(), FlagStyle::OneFlag)
                .unwrap();
        for e in [
            PauliOperator::x_error(15, [3]),
            PauliOperator::z_error(15, [1, 8]),
            PauliOperator::x_error(15, [0, 2, 9]).multiply(&PauliOperator::z_error(15, [2])),
        ] {
            let syndrome = code.syndrome(&e);
            for (i, c) in circuits.iter().enumerate() {
                let out = c.respond(&e);
                assert_eq!(out.outcome_flip, syndrome.bits.get(i), "gen {i}");
                assert_eq!(out.data, e, "incoming errors pass through unchanged");
                assert!(out.flags.is_zero());
            }
        }
    }

    #[test]
    fn circuit_orders_cover_generator_supports() {
        let ccc = CappedCode::build(5).unwrap();
        let code = ccc.fix_gauge(Form::T).unwrap();
        let circuits =
            build_schedule(&ccc, Form::T, &Orderings::natural(&ccc), FlagStyle::OneFlag)
                .unwrap();
        for (c, g) in circuits.iter().zip(code.stab_gens()) {
            let mut sorted = c.order.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, g.support(), "{:?}", c.tag);
        }
    }
}
