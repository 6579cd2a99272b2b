//! Phase-free n-qubit Pauli operators in binary-symplectic form.

use crate::bits::BitVec;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn has_x(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    pub fn has_z(self) -> bool {
        matches!(self, Pauli::Z | Pauli::Y)
    }

    /// The 15 nontrivial two-qubit Pauli pairs (II excluded).
    pub fn nontrivial_pairs() -> impl Iterator<Item = (Pauli, Pauli)> {
        const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
        ALL.into_iter()
            .flat_map(|a| ALL.into_iter().map(move |b| (a, b)))
            .filter(|&(a, b)| !(a == Pauli::I && b == Pauli::I))
    }
}

/// An n-qubit Pauli operator with the global phase dropped.
///
/// The operator is stored as paired X/Z support vectors: qubit `i` carries
/// X iff `x[i]`, Z iff `z[i]`, and Y iff both. Multiplication is bitwise
/// XOR and commutation is the symplectic inner product, which is all the
/// error-correction protocols here ever need.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliOperator {
    x: BitVec,
    z: BitVec,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        }
    }

    /// # Panics
    /// Panics if the two vectors have different lengths.
    pub fn from_xz(x: BitVec, z: BitVec) -> Self {
        assert_eq!(x.len(), z.len(), "X and Z supports must have equal length");
        PauliOperator { x, z }
    }

    /// X error on the listed qubits.
    pub fn x_error<I: IntoIterator<Item = usize>>(n: usize, qubits: I) -> Self {
        PauliOperator {
            x: BitVec::from_indices(n, qubits),
            z: BitVec::zeros(n),
        }
    }

    /// Z error on the listed qubits.
    pub fn z_error<I: IntoIterator<Item = usize>>(n: usize, qubits: I) -> Self {
        PauliOperator {
            x: BitVec::zeros(n),
            z: BitVec::from_indices(n, qubits),
        }
    }

    pub fn single(n: usize, qubit: usize, p: Pauli) -> Self {
        let mut op = Self::identity(n);
        op.apply(qubit, p);
        op
    }

    /// Multiplies the given letter onto one qubit.
    pub fn apply(&mut self, qubit: usize, p: Pauli) {
        if p.has_x() {
            self.x.flip(qubit);
        }
        if p.has_z() {
            self.z.flip(qubit);
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn letter(&self, qubit: usize) -> Pauli {
        match (self.x.get(qubit), self.z.get(qubit)) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    /// The phase-free product, i.e. the bitwise XOR of supports.
    ///
    /// # Panics
    /// Panics if the operators act on different numbers of qubits.
    #[must_use]
    pub fn multiply(&self, other: &PauliOperator) -> PauliOperator {
        let mut out = self.clone();
        out.multiply_assign(other);
        out
    }

    pub fn multiply_assign(&mut self, other: &PauliOperator) {
        assert_eq!(self.n(), other.n(), "qubit count mismatch");
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// True iff the operators commute (symplectic inner product is zero).
    ///
    /// # Panics
    /// Panics on qubit-count mismatch.
    pub fn commutes(&self, other: &PauliOperator) -> bool {
        assert_eq!(self.n(), other.n(), "qubit count mismatch");
        !(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    /// Number of qubits acted on nontrivially.
    pub fn weight(&self) -> usize {
        let mut or = self.x.clone();
        // weight counts X, Y, and Z alike, so OR the supports
        for i in self.z.ones() {
            or.set(i, true);
        }
        or.count_ones()
    }

    pub fn weight_parity(&self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// True iff the operator contains no Z or Y letters.
    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    /// True iff the operator contains no X or Y letters.
    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// Qubit indices acted on nontrivially, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.letter(i) != Pauli::I).collect()
    }

    /// The length-2n concatenated (x|z) vector used by GF(2) row reduction.
    pub fn to_symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    pub fn from_symplectic(v: &BitVec) -> Self {
        let n = v.len() / 2;
        PauliOperator {
            x: v.slice(0, n),
            z: v.slice(n, 2 * n),
        }
    }

    /// Restriction to a qubit subset, re-indexed by position in `qubits`.
    pub fn restrict(&self, qubits: &[usize]) -> PauliOperator {
        let mut out = PauliOperator::identity(qubits.len());
        for (new, &old) in qubits.iter().enumerate() {
            if self.x.get(old) {
                out.x.set(new, true);
            }
            if self.z.get(old) {
                out.z.set(new, true);
            }
        }
        out
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "I");
        }
        let mut first = true;
        for i in 0..self.n() {
            let p = self.letter(i);
            if p == Pauli::I {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{p:?}{i}")?;
            first = false;
        }
        Ok(())
    }
}
