//! 2D triangular color codes as CSS stabilizer codes.

use crate::lattice::{ColorLattice, LatticeError};
use ccv_pauli::{GenCategory, GenTag, PauliKind, PauliOperator, StabilizerCode};

/// For d = 3 the crate's spiral numbering and the customary published
/// 7-qubit labeling differ; this permutation (0-based, spiral index →
/// code index) converts between them so that the d = 3 generators come
/// out in the standard presentation X4X5X6X7, X2X3X6X7, X1X3X5X7.
const D3_LABEL_PERM: [usize; 7] = [6, 2, 5, 4, 1, 3, 0];
/// Face order rearrangement that accompanies the d = 3 relabeling.
const D3_FACE_PERM: [usize; 3] = [1, 0, 2];

/// Builds the distance-d 2D color code: one X and one Z generator per
/// plaquette, X generators first, logicals acting on every qubit.
pub fn build_2d_color_code(d: usize) -> Result<(ColorLattice, StabilizerCode), LatticeError> {
    let lattice = ColorLattice::build(d)?;
    let n = lattice.n_qubits();
    let (qubit_map, face_order): (Vec<usize>, Vec<usize>) = if d == 3 {
        (D3_LABEL_PERM.to_vec(), D3_FACE_PERM.to_vec())
    } else {
        ((0..n).collect(), (0..lattice.n_plaquettes()).collect())
    };

    let face_supports: Vec<Vec<usize>> = face_order
        .iter()
        .map(|&f| {
            let mut s: Vec<usize> = lattice.plaquettes()[f]
                .support
                .iter()
                .map(|&q| qubit_map[q])
                .collect();
            s.sort_unstable();
            s
        })
        .collect();

    let mut gens = Vec::new();
    let mut tags = Vec::new();
    for kind in [PauliKind::X, PauliKind::Z] {
        for (i, s) in face_supports.iter().enumerate() {
            gens.push(match kind {
                PauliKind::X => PauliOperator::x_error(n, s.iter().copied()),
                PauliKind::Z => PauliOperator::z_error(n, s.iter().copied()),
            });
            tags.push(GenTag::new(GenCategory::F, kind, i));
        }
    }
    let code = StabilizerCode::new(
        n,
        gens,
        tags,
        vec![PauliOperator::x_error(n, 0..n)],
        vec![PauliOperator::z_error(n, 0..n)],
        vec![],
    )
    .expect("color-code plaquette generators always commute");
    Ok((lattice, code))
}
