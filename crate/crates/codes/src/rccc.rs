//! Recursive capped color codes: the top qubit of a capped color code is
//! itself encoded in a smaller recursive capped color code.
//!
//! Qubit layout for RCCC(d): the qubits of RCCC(d-2) come first (so every
//! RCCC(j) in the recursion is an index prefix), then the distance-d
//! center plane, then the distance-d bottom plane. The base level is the
//! capped color code of distance 3 itself, whose "inner code" is the bare
//! top qubit; every level is handled by the same formulas with that
//! convention.

use crate::ccc::{CappedCode, CccError, Form};
use ccv_pauli::{GenCategory, GenTag, PauliKind, PauliOperator, StabilizerCode};

/// Number of data qubits of RCCC(d): (d³ + 3d² + 3d - 3)/4.
pub fn rccc_qubits(d: usize) -> usize {
    (d * d * d + 3 * d * d + 3 * d - 3) / 4
}

#[derive(Debug)]
pub struct RecursiveCappedCode {
    d: usize,
    n: usize,
    /// Per-level geometry, innermost (distance 3) first.
    levels: Vec<CappedCode>,
    /// Qubit count strictly inside each level (1 for the base level).
    inner_ns: Vec<usize>,
}

impl RecursiveCappedCode {
    pub fn build(d: usize) -> Result<Self, CccError> {
        let mut levels = Vec::new();
        let mut inner_ns = Vec::new();
        let mut inner_n = 1usize;
        for j in (3..=d).step_by(2) {
            let ccc = CappedCode::build(j)?;
            inner_ns.push(inner_n);
            inner_n += 2 * ccc.n_2d();
            levels.push(ccc);
        }
        let code = RecursiveCappedCode {
            d,
            n: inner_n,
            levels,
            inner_ns,
        };
        debug_assert_eq!(code.n, rccc_qubits(d));
        Ok(code)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[CappedCode] {
        &self.levels
    }

    pub fn n_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn inner_n(&self, level: usize) -> usize {
        self.inner_ns[level]
    }

    /// Global index of center-plane qubit q (1..=n_2d) of a level.
    pub fn center_qubit(&self, level: usize, q: usize) -> usize {
        debug_assert!((1..=self.levels[level].n_2d()).contains(&q));
        self.inner_ns[level] + q - 1
    }

    /// Global index of the bottom partner of center-plane qubit q.
    pub fn bottom_qubit(&self, level: usize, q: usize) -> usize {
        self.center_qubit(level, q) + self.levels[level].n_2d()
    }

    /// Cap support of a level: all inner qubits plus its center plane.
    pub fn cap_support(&self, level: usize) -> Vec<usize> {
        let n2d = self.levels[level].n_2d();
        (0..self.inner_ns[level] + n2d).collect()
    }

    pub fn v_support(&self, level: usize, face: usize) -> Vec<usize> {
        self.levels[level].faces()[face]
            .iter()
            .flat_map(|&q| [self.center_qubit(level, q), self.bottom_qubit(level, q)])
            .collect()
    }

    pub fn f_support(&self, level: usize, face: usize) -> Vec<usize> {
        self.levels[level].faces()[face]
            .iter()
            .map(|&q| self.center_qubit(level, q))
            .collect()
    }

    pub fn e_support(&self, level: usize, face: usize) -> Vec<usize> {
        let (a, b) = self.levels[level].e_edges()[face];
        vec![
            self.center_qubit(level, a),
            self.bottom_qubit(level, a),
            self.center_qubit(level, b),
            self.bottom_qubit(level, b),
        ]
    }

    /// Layer (1..=d) of a qubit: layer 1 is the innermost top qubit, the
    /// center plane of the level with distance j is layer j-1 and its
    /// bottom plane is layer j.
    pub fn layer_of(&self, qubit: usize) -> usize {
        if qubit == 0 {
            return 1;
        }
        for (li, ccc) in self.levels.iter().enumerate() {
            let lo = self.inner_ns[li];
            let n2d = ccc.n_2d();
            if qubit < lo + n2d {
                return ccc.d() - 1;
            }
            if qubit < lo + 2 * n2d {
                return ccc.d();
            }
        }
        panic!("qubit {qubit} out of range");
    }

    /// The gauge-fixed stabilizer code with every level in the given
    /// form. Generator order: X side then Z side; within each side the
    /// levels go innermost to outermost with the same per-level order as
    /// the capped code.
    pub fn code(&self, form: Form) -> Result<StabilizerCode, CccError> {
        let n = self.n;
        let mut gens = Vec::new();
        let mut tags = Vec::new();
        for kind in [PauliKind::X, PauliKind::Z] {
            for (li, ccc) in self.levels.iter().enumerate() {
                let on = |s: &[usize]| match kind {
                    PauliKind::X => PauliOperator::x_error(n, s.iter().copied()),
                    PauliKind::Z => PauliOperator::z_error(n, s.iter().copied()),
                };
                gens.push(on(&self.cap_support(li)));
                tags.push(GenTag::new(GenCategory::Cap, kind, li));
                if kind == PauliKind::Z && form == Form::T {
                    for j in 0..ccc.r() {
                        gens.push(on(&self.e_support(li, j)));
                        tags.push(GenTag::new(GenCategory::E, kind, j));
                    }
                }
                let fixed_faces = matches!(
                    (form, kind),
                    (Form::H, _) | (Form::T, PauliKind::Z)
                );
                if fixed_faces {
                    for j in 0..ccc.r() {
                        gens.push(on(&self.f_support(li, j)));
                        tags.push(GenTag::new(GenCategory::F, kind, j));
                    }
                }
                for j in 0..ccc.r() {
                    gens.push(on(&self.v_support(li, j)));
                    tags.push(GenTag::new(GenCategory::V, kind, j));
                }
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
        .expect("recursive capped-code generators always commute");
        let expected = match form {
            Form::Subsystem => code.rank(),
            Form::H | Form::T => n - 1,
        };
        if code.rank() != expected {
            return Err(CccError::RankDeficient {
                expected,
                got: code.rank(),
            });
        }
        Ok(code)
    }
}
