//! Capped color codes: two stacked 2D color-code planes plus a top qubit.
//!
//! Qubit indexing: 0 is the top qubit, 1..=n_2d the center plane in
//! spiral order, and n_2d+i the bottom partner of center qubit i.
//!
//! Generator families:
//! * cap: the top qubit together with the whole center plane;
//! * v_i: face i on both planes;
//! * f_i: face i on the center plane only (gauge);
//! * e_i: a weight-4 vertical face pairing two adjacent center qubits
//!   with their bottom partners (gauge), chosen so that e_i^z
//!   anticommutes with f_j^x exactly when i = j.

use crate::lattice::{ColorLattice, LatticeError, QubitClass};
use ccv_pauli::{
    gf2, BitVec, GenCategory, GenTag, PauliKind, PauliOperator, StabilizerCode,
};
use thiserror::Error;

/// Gauge fixing target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Form {
    /// Stabilizers ⟨cap, v_i⟩ only; f and e remain gauge.
    Subsystem,
    /// Center faces fixed both-type: supports transversal H, S, CNOT.
    H,
    /// All Z-type faces fixed: supports transversal T on a bipartition.
    T,
}

#[derive(Debug, Error)]
pub enum CccError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("no valid vertical edge for face {0}")]
    NoVerticalEdge(usize),
    #[error("gauge-fixed generator set has rank {got}, expected {expected}")]
    RankDeficient { expected: usize, got: usize },
    #[error("fix-operator system is infeasible (corrupted outcome input?)")]
    InfeasibleFix,
}

/// Direction of a gauge switch between the two fixed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchDirection {
    /// Measure the vertical faces e_j^z; fix with an X-type operator.
    HToT,
    /// Measure the center faces f_j^x; fix with a Z-type operator.
    TToH,
}

/// A capped color code in subsystem form, with all the structure needed
/// to fix either gauge, build measurement schedules, and switch forms.
#[derive(Debug)]
pub struct CappedCode {
    d: usize,
    n: usize,
    n_2d: usize,
    r: usize,
    lattice: ColorLattice,
    /// Center-plane supports per face (qubit indices 1..=n_2d, sorted).
    faces: Vec<Vec<usize>>,
    /// Counterclockwise cycles of the same faces (for ordering searches).
    face_cycles: Vec<Vec<usize>>,
    /// Chosen vertical edge (a, b) per face, a < b, center-plane indices.
    e_edges: Vec<(usize, usize)>,
}

impl CappedCode {
    pub fn build(d: usize) -> Result<Self, CccError> {
        let lattice = ColorLattice::build(d)?;
        let n_2d = lattice.n_qubits();
        let n = 2 * n_2d + 1;
        let r = lattice.n_plaquettes();
        let faces: Vec<Vec<usize>> = lattice
            .plaquettes()
            .iter()
            .map(|p| p.support.iter().map(|&q| q + 1).collect())
            .collect();
        let face_cycles: Vec<Vec<usize>> = lattice
            .plaquettes()
            .iter()
            .map(|p| p.cycle.iter().map(|&q| q + 1).collect())
            .collect();

        // vertical edges: one adjacent qubit pair per face. Where
        // possible (always near the boundary, and everywhere for d = 3),
        // e_j is the lexicographically least edge whose overlap with
        // face i is odd exactly for i = j, pairing e_j^z with f_j^x as
        // anticommuting partners. Interior faces have no such edge, so
        // the leftovers are completed greedily with the least edge whose
        // face-overlap parity row is independent of the rows chosen so
        // far — which is exactly what the gauge-fixed generator rank
        // requires of the e set.
        let edges: Vec<(usize, usize)> = lattice
            .qubit_edges()
            .into_iter()
            .map(|(a, b)| (a + 1, b + 1))
            .collect();
        let parity_row = |&(a, b): &(usize, usize)| {
            BitVec::from_indices(
                r,
                faces.iter().enumerate().filter_map(|(i, f)| {
                    let overlap = f.contains(&a) as usize + f.contains(&b) as usize;
                    (overlap % 2 == 1).then_some(i)
                }),
            )
        };
        let mut e_edges: Vec<Option<(usize, usize)>> = (0..r)
            .map(|j| {
                edges
                    .iter()
                    .find(|e| {
                        let row = parity_row(e);
                        row.get(j) && row.count_ones() == 1
                    })
                    .copied()
            })
            .collect();
        let mut echelon = gf2::Echelon::new(r);
        for e in e_edges.iter().flatten() {
            echelon.insert(&parity_row(e));
        }
        for j in 0..r {
            if e_edges[j].is_some() {
                continue;
            }
            let edge = edges
                .iter()
                .find(|e| echelon.insert(&parity_row(e)))
                .copied()
                .ok_or(CccError::NoVerticalEdge(j))?;
            e_edges[j] = Some(edge);
        }
        let e_edges: Vec<(usize, usize)> = e_edges.into_iter().flatten().collect();

        Ok(CappedCode {
            d,
            n,
            n_2d,
            r,
            lattice,
            faces,
            face_cycles,
            e_edges,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_2d(&self) -> usize {
        self.n_2d
    }

    /// Number of faces per plane.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn lattice(&self) -> &ColorLattice {
        &self.lattice
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_cycles(&self) -> &[Vec<usize>] {
        &self.face_cycles
    }

    pub fn e_edges(&self) -> &[(usize, usize)] {
        &self.e_edges
    }

    /// Bottom-plane partner of a center-plane qubit.
    pub fn bottom(&self, center_index: usize) -> usize {
        debug_assert!((1..=self.n_2d).contains(&center_index));
        center_index + self.n_2d
    }

    pub fn cap_support(&self) -> Vec<usize> {
        (0..=self.n_2d).collect()
    }

    pub fn v_support(&self, j: usize) -> Vec<usize> {
        let mut s: Vec<usize> = self.faces[j]
            .iter()
            .flat_map(|&q| [q, self.bottom(q)])
            .collect();
        s.sort_unstable();
        s
    }

    pub fn f_support(&self, j: usize) -> Vec<usize> {
        self.faces[j].clone()
    }

    pub fn e_support(&self, j: usize) -> Vec<usize> {
        let (a, b) = self.e_edges[j];
        vec![a, b, self.bottom(a), self.bottom(b)]
    }

    fn x_on(&self, support: &[usize]) -> PauliOperator {
        PauliOperator::x_error(self.n, support.iter().copied())
    }

    fn z_on(&self, support: &[usize]) -> PauliOperator {
        PauliOperator::z_error(self.n, support.iter().copied())
    }

    /// The full gauge-group generating set beyond the subsystem
    /// stabilizers: f faces and vertical faces, both types.
    fn gauge_extras(&self) -> Vec<PauliOperator> {
        let mut out = Vec::new();
        for j in 0..self.r {
            out.push(self.x_on(&self.f_support(j)));
        }
        for j in 0..self.r {
            out.push(self.z_on(&self.f_support(j)));
        }
        for j in 0..self.r {
            out.push(self.x_on(&self.e_support(j)));
        }
        for j in 0..self.r {
            out.push(self.z_on(&self.e_support(j)));
        }
        out
    }

    /// The gauge-fixed stabilizer code for the requested form.
    ///
    /// Generator order (and therefore syndrome order) is:
    /// * H: cap^x, f_j^x, v_i^x, then cap^z, f_j^z, v_i^z;
    /// * T: cap^x, v_i^x, then cap^z, e_j^z, f_j^z, v_i^z;
    /// * Subsystem: cap^x, v_i^x, cap^z, v_i^z.
    pub fn fix_gauge(&self, form: Form) -> Result<StabilizerCode, CccError> {
        let mut gens = Vec::new();
        let mut tags = Vec::new();
        let push = |g: PauliOperator, t: GenTag, gens: &mut Vec<PauliOperator>, tags: &mut Vec<GenTag>| {
            gens.push(g);
            tags.push(t);
        };
        let cap = self.cap_support();
        for kind in [PauliKind::X, PauliKind::Z] {
            let on = |s: &[usize]| match kind {
                PauliKind::X => self.x_on(s),
                PauliKind::Z => self.z_on(s),
            };
            push(on(&cap), GenTag::new(GenCategory::Cap, kind, 0), &mut gens, &mut tags);
            if kind == PauliKind::Z && form == Form::T {
                for j in 0..self.r {
                    push(on(&self.e_support(j)), GenTag::new(GenCategory::E, kind, j), &mut gens, &mut tags);
                }
            }
            let fixed_faces = match (form, kind) {
                (Form::H, _) | (Form::T, PauliKind::Z) => true,
                _ => false,
            };
            if fixed_faces {
                for j in 0..self.r {
                    push(on(&self.f_support(j)), GenTag::new(GenCategory::F, kind, j), &mut gens, &mut tags);
                }
            }
            for j in 0..self.r {
                push(on(&self.v_support(j)), GenTag::new(GenCategory::V, kind, j), &mut gens, &mut tags);
            }
        }
        let code = StabilizerCode::new(
            self.n,
            gens,
            tags,
            vec![PauliOperator::x_error(self.n, 0..self.n)],
            vec![PauliOperator::z_error(self.n, 0..self.n)],
            self.gauge_extras(),
        )
        .expect("capped-code generators always commute");
        let expected = match form {
            Form::Subsystem => 2 * (self.r + 1),
            Form::H | Form::T => self.n - 1,
        };
        if code.rank() != expected {
            return Err(CccError::RankDeficient {
                expected,
                got: code.rank(),
            });
        }
        Ok(code)
    }

    /// Splits the qubits into the two transversal-T classes: V is the
    /// class containing the central qubit (center-plane class A plus its
    /// bottom partners); the top qubit joins the complementary side.
    /// Every generator support splits evenly between the two sets.
    pub fn bipartition(&self) -> (Vec<usize>, Vec<usize>) {
        let mut v = Vec::new();
        let mut vc = vec![0usize];
        for q in 1..=self.n_2d {
            match self.lattice.qubit_class(q - 1) {
                QubitClass::A => {
                    v.push(q);
                    v.push(self.bottom(q));
                }
                QubitClass::B => {
                    vc.push(q);
                    vc.push(self.bottom(q));
                }
            }
        }
        vc.sort_unstable();
        v.sort_unstable();
        (v, vc)
    }

    /// Solves for the Pauli operator that returns the state to the target
    /// code space after a gauge switch, given the measured outcomes (one
    /// bit per measured gauge generator, in face order).
    ///
    /// The operator is found inside the gauge group, so it can never act
    /// on the logical qubit; it anticommutes with measured generator j
    /// exactly when `outcomes[j]` is set and commutes with every other
    /// stabilizer of the target form. The solution is linear in the
    /// outcome bits.
    pub fn switch_fix_operator(
        &self,
        outcomes: &BitVec,
        direction: SwitchDirection,
    ) -> Result<PauliOperator, CccError> {
        assert_eq!(outcomes.len(), self.r, "one outcome bit per face required");
        // unknowns: coefficients over the non-stabilizer gauge generators
        // of the fixing type
        let basis: Vec<PauliOperator> = match direction {
            SwitchDirection::HToT => (0..self.r)
                .map(|j| self.x_on(&self.f_support(j)))
                .chain((0..self.r).map(|j| self.x_on(&self.e_support(j))))
                .collect(),
            SwitchDirection::TToH => (0..self.r)
                .map(|j| self.z_on(&self.f_support(j)))
                .chain((0..self.r).map(|j| self.z_on(&self.e_support(j))))
                .collect(),
        };
        // constraints: anticommute with measured generator j per outcome
        // bit, commute with everything else that must stay fixed
        let mut constraints: Vec<PauliOperator> = Vec::new();
        let mut rhs: Vec<bool> = Vec::new();
        match direction {
            SwitchDirection::HToT => {
                for j in 0..self.r {
                    constraints.push(self.z_on(&self.e_support(j)));
                    rhs.push(outcomes.get(j));
                }
                for j in 0..self.r {
                    constraints.push(self.z_on(&self.f_support(j)));
                    rhs.push(false);
                }
                for j in 0..self.r {
                    constraints.push(self.z_on(&self.v_support(j)));
                    rhs.push(false);
                }
                constraints.push(self.z_on(&self.cap_support()));
                rhs.push(false);
            }
            SwitchDirection::TToH => {
                for j in 0..self.r {
                    constraints.push(self.x_on(&self.f_support(j)));
                    rhs.push(outcomes.get(j));
                }
                for j in 0..self.r {
                    constraints.push(self.x_on(&self.v_support(j)));
                    rhs.push(false);
                }
                constraints.push(self.x_on(&self.cap_support()));
                rhs.push(false);
            }
        }
        let rows: Vec<BitVec> = constraints
            .iter()
            .map(|c| {
                BitVec::from_indices(
                    basis.len(),
                    basis
                        .iter()
                        .enumerate()
                        .filter(|(_, g)| !g.commutes(c))
                        .map(|(k, _)| k),
                )
            })
            .collect();
        let coeffs =
            gf2::solve(basis.len(), &rows, &rhs).ok_or(CccError::InfeasibleFix)?;
        let mut p = PauliOperator::identity(self.n);
        for k in coeffs.ones() {
            p.multiply_assign(&basis[k]);
        }
        Ok(p)
    }
}
