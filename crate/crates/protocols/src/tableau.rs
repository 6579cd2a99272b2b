//! Dense stabilizer-tableau simulator, used as an independent oracle
//! for the Pauli-frame engine.
//!
//! Standard binary (de)stabilizer tableau: row i < m is the i-th
//! destabilizer, row m + i the i-th stabilizer; phases track the sign
//! of each row. Supports H, S, CNOT, Pauli injection, and measurement
//! of arbitrary Pauli observables with optional postselection.

use ccv_pauli::PauliOperator;

#[derive(Clone)]
pub struct TableauSim {
    m: usize,
    /// x[row][qubit], z[row][qubit] packed as Vec<bool> for clarity;
    /// sizes here (≤ ~50 qubits) never make this the bottleneck.
    x: Vec<Vec<bool>>,
    z: Vec<Vec<bool>>,
    /// Phase of each row: 0 => +1, 1 => -1 (i phases never survive
    /// because rows stay Hermitian).
    sign: Vec<bool>,
}

impl TableauSim {
    /// All qubits in |0⟩.
    pub fn new(m: usize) -> Self {
        let mut sim = TableauSim {
            m,
            x: vec![vec![false; m]; 2 * m],
            z: vec![vec![false; m]; 2 * m],
            sign: vec![false; 2 * m],
        };
        for q in 0..m {
            sim.x[q][q] = true; // destabilizer X_q
            sim.z[m + q][q] = true; // stabilizer Z_q
        }
        sim
    }

    pub fn h(&mut self, q: usize) {
        for r in 0..2 * self.m {
            if self.x[r][q] && self.z[r][q] {
                self.sign[r] = !self.sign[r];
            }
            let t = self.x[r][q];
            self.x[r][q] = self.z[r][q];
            self.z[r][q] = t;
        }
    }

    pub fn s(&mut self, q: usize) {
        for r in 0..2 * self.m {
            if self.x[r][q] && self.z[r][q] {
                self.sign[r] = !self.sign[r];
            }
            self.z[r][q] ^= self.x[r][q];
        }
    }

    pub fn cnot(&mut self, c: usize, t: usize) {
        for r in 0..2 * self.m {
            if self.x[r][c] && self.z[r][t] && (self.x[r][t] == self.z[r][c]) {
                self.sign[r] = !self.sign[r];
            }
            self.x[r][t] ^= self.x[r][c];
            self.z[r][c] ^= self.z[r][t];
        }
    }

    /// Injects a Pauli error: flips the sign of every row it
    /// anticommutes with.
    pub fn inject(&mut self, qubit: usize, x: bool, z: bool) {
        for r in 0..2 * self.m {
            // X error anticommutes with Z content, Z error with X content
            let anti = (x && self.z[r][qubit]) ^ (z && self.x[r][qubit]);
            if anti {
                self.sign[r] = !self.sign[r];
            }
        }
    }

    /// Left-multiplies row `h` by row `i`, with sign arithmetic.
    fn rowmult(&mut self, h: usize, i: usize) {
        let mut phase = 0i32; // exponent of i, mod 4
        for q in 0..self.m {
            phase += g(
                self.x[i][q],
                self.z[i][q],
                self.x[h][q],
                self.z[h][q],
            );
            self.x[h][q] ^= self.x[i][q];
            self.z[h][q] ^= self.z[i][q];
        }
        let total = phase.rem_euclid(4) + 2 * (self.sign[h] as i32 + self.sign[i] as i32);
        debug_assert_eq!(total % 2, 0, "hermitian rows compose to ±1");
        self.sign[h] = total.rem_euclid(4) == 2;
    }

    /// Measures a Pauli observable (given by x/z masks over the qubits).
    /// Returns (outcome, was_deterministic). `force` postselects a
    /// random outcome to the given bit.
    pub fn measure_pauli(
        &mut self,
        obs_x: &[bool],
        obs_z: &[bool],
        obs_sign: bool,
        force: Option<bool>,
    ) -> (bool, bool) {
        let m = self.m;
        let anticommutes = |xr: &[bool], zr: &[bool]| -> bool {
            let mut a = false;
            for q in 0..m {
                a ^= (obs_x[q] && zr[q]) ^ (obs_z[q] && xr[q]);
            }
            a
        };
        let pivot = (m..2 * m).find(|&r| anticommutes(&self.x[r], &self.z[r]));
        match pivot {
            Some(p) => {
                // random outcome: replace the pivot stabilizer with the
                // observable and fix all other anticommuting rows
                for r in 0..2 * self.m {
                    if r != p && anticommutes(&self.x[r], &self.z[r]) {
                        self.rowmult(r, p);
                    }
                }
                // the old pivot stabilizer becomes the destabilizer
                let (xs, zs, sg) = (self.x[p].clone(), self.z[p].clone(), self.sign[p]);
                self.x[p - m] = xs;
                self.z[p - m] = zs;
                self.sign[p - m] = sg;
                let outcome = force.unwrap_or(false);
                self.x[p] = obs_x.to_vec();
                self.z[p] = obs_z.to_vec();
                self.sign[p] = outcome ^ obs_sign;
                (outcome, false)
            }
            None => {
                // deterministic: accumulate the stabilizer product whose
                // destabilizer partners anticommute with the observable
                let mut acc_x = vec![false; m];
                let mut acc_z = vec![false; m];
                let mut phase = 0i32;
                let mut sign = false;
                for r in 0..m {
                    if anticommutes(&self.x[r], &self.z[r]) {
                        let i = r + m;
                        for q in 0..m {
                            phase += g(self.x[i][q], self.z[i][q], acc_x[q], acc_z[q]);
                            acc_x[q] ^= self.x[i][q];
                            acc_z[q] ^= self.z[i][q];
                        }
                        sign ^= self.sign[i];
                    }
                }
                debug_assert_eq!(phase.rem_euclid(2), 0);
                debug_assert_eq!(acc_x, obs_x);
                debug_assert_eq!(acc_z, obs_z);
                let outcome = sign ^ (phase.rem_euclid(4) == 2) ^ obs_sign;
                (outcome, true)
            }
        }
    }

    /// Measures Z on one qubit.
    pub fn measure_z(&mut self, q: usize, force: Option<bool>) -> (bool, bool) {
        let ox = vec![false; self.m];
        let mut oz = vec![false; self.m];
        oz[q] = true;
        self.measure_pauli(&ox, &oz, false, force)
    }

    /// Measures X on one qubit.
    pub fn measure_x(&mut self, q: usize, force: Option<bool>) -> (bool, bool) {
        let mut ox = vec![false; self.m];
        let oz = vec![false; self.m];
        ox[q] = true;
        self.measure_pauli(&ox, &oz, false, force)
    }

    /// Measures a PauliOperator living on the first qubits of the
    /// register.
    pub fn measure_operator(
        &mut self,
        op: &PauliOperator,
        force: Option<bool>,
    ) -> (bool, bool) {
        let mut ox = vec![false; self.m];
        let mut oz = vec![false; self.m];
        for q in op.support() {
            let p = op.letter(q);
            ox[q] = p.has_x();
            oz[q] = p.has_z();
        }
        self.measure_pauli(&ox, &oz, false, force)
    }
}

/// Sign exponent contribution of multiplying single-qubit Paulis
/// (x1,z1)·(x2,z2), as in the standard tableau algorithm.
fn g(x1: bool, z1: bool, x2: bool, z2: bool) -> i32 {
    match (x1, z1) {
        (false, false) => 0,
        (true, true) => z2 as i32 - x2 as i32,
        (true, false) => (z2 as i32) * (2 * (x2 as i32) - 1),
        (false, true) => (x2 as i32) * (1 - 2 * (z2 as i32)),
    }
}
