//! Syndrome-extraction circuits and Pauli fault propagation.
//!
//! A circuit measures one stabilizer generator with a bare syndrome
//! ancilla, optionally protected by a single flag qubit. Z-type
//! generators use a |0⟩ ancilla as the target of data CNOTs, with the
//! flag prepared in |+⟩, coupled into the ancilla, and measured in the
//! X basis; X-type circuits are the Hadamard conjugate (ancilla |+⟩
//! controlling the data, flag |0⟩ measured in Z).

use ccv_pauli::{BitVec, GenTag, Pauli, PauliKind, PauliOperator};
use serde::{Deserialize, Serialize};

/// A wire the circuit acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Wire {
    Data(usize),
    Synd,
    Flag(usize),
}

/// Preparation/measurement basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    Z,
    X,
}

/// One circuit step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Op {
    Prep { wire: Wire, basis: Basis },
    Cnot { control: Wire, target: Wire },
    Meas { wire: Wire, basis: Basis },
}

/// Whether a circuit carries a flag qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FlagStyle {
    NonFlag,
    OneFlag,
}

/// A single-generator measurement circuit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasurementCircuit {
    pub tag: GenTag,
    /// Data qubits in CNOT order.
    pub order: Vec<usize>,
    pub n_data: usize,
    pub n_flags: usize,
    pub ops: Vec<Op>,
}

/// Net effect of a fault (or of fault-free execution) on one circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaultEffect {
    /// Residual Pauli on the data qubits after the circuit completes.
    pub data: PauliOperator,
    /// Whether the syndrome-ancilla outcome is flipped.
    pub outcome_flip: bool,
    /// Flag-measurement flips, one bit per flag.
    pub flags: BitVec,
}

impl MeasurementCircuit {
    /// Unflagged circuit: prepare, couple each data qubit in order,
    /// measure.
    pub fn non_flag(tag: GenTag, order: Vec<usize>, n_data: usize) -> Self {
        let mut ops = vec![Op::Prep {
            wire: Wire::Synd,
            basis: synd_basis(tag.kind),
        }];
        for &q in &order {
            ops.push(data_cnot(tag.kind, q));
        }
        ops.push(Op::Meas {
            wire: Wire::Synd,
            basis: synd_basis(tag.kind),
        });
        MeasurementCircuit {
            tag,
            order,
            n_data,
            n_flags: 0,
            ops,
        }
    }

    /// One-flag circuit: the flag couples in after the first data CNOT
    /// and out before the last, so any single ancilla fault that could
    /// spread to more than one data qubit raises the flag.
    pub fn one_flag(tag: GenTag, order: Vec<usize>, n_data: usize) -> Self {
        let w = order.len();
        assert!(w >= 2, "a flagged circuit needs at least two data CNOTs");
        let mut ops = vec![
            Op::Prep {
                wire: Wire::Synd,
                basis: synd_basis(tag.kind),
            },
            Op::Prep {
                wire: Wire::Flag(0),
                basis: flag_basis(tag.kind),
            },
            data_cnot(tag.kind, order[0]),
            flag_cnot(tag.kind, 0),
        ];
        for &q in &order[1..w - 1] {
            ops.push(data_cnot(tag.kind, q));
        }
        ops.push(flag_cnot(tag.kind, 0));
        ops.push(data_cnot(tag.kind, order[w - 1]));
        ops.push(Op::Meas {
            wire: Wire::Flag(0),
            basis: flag_basis(tag.kind),
        });
        ops.push(Op::Meas {
            wire: Wire::Synd,
            basis: synd_basis(tag.kind),
        });
        MeasurementCircuit {
            tag,
            order,
            n_data,
            n_flags: 1,
            ops,
        }
    }

    pub fn style(&self) -> FlagStyle {
        if self.n_flags == 0 {
            FlagStyle::NonFlag
        } else {
            FlagStyle::OneFlag
        }
    }

    /// Positions of CNOT ops, in order.
    pub fn cnot_positions(&self) -> Vec<usize> {
        self.ops
            .iter()
            .enumerate()
            .filter(|(_, op)| matches!(op, Op::Cnot { .. }))
            .map(|(i, _)| i)
            .collect()
    }

    /// Propagates a Pauli inserted after op `after` through the rest of
    /// the circuit. `fault` lists (wire, letter) pairs.
    pub fn propagate(&self, after: usize, fault: &[(Wire, Pauli)]) -> FaultEffect {
        let mut frame = Frame::new(self.n_data, self.n_flags);
        for &(wire, p) in fault {
            frame.insert(wire, p);
        }
        let mut outcome_flip = false;
        let mut flags = BitVec::zeros(self.n_flags.max(1));
        for op in &self.ops[after + 1..] {
            match *op {
                Op::Prep { wire, .. } => frame.reset(wire),
                Op::Cnot { control, target } => frame.cnot(control, target),
                Op::Meas { wire, basis } => {
                    let flip = match basis {
                        Basis::Z => frame.x(wire),
                        Basis::X => frame.z(wire),
                    };
                    match wire {
                        Wire::Synd => outcome_flip = flip,
                        Wire::Flag(k) => flags.set(k, flip),
                        Wire::Data(_) => unreachable!("data qubits are never measured"),
                    }
                }
            }
        }
        FaultEffect {
            data: frame.data_pauli(),
            outcome_flip,
            flags,
        }
    }

    /// Runs the circuit on an incoming data-qubit Pauli frame and
    /// returns its measurement response (the incoming error commutes
    /// through unchanged, flipping the outcome per anticommutation).
    pub fn respond(&self, incoming: &PauliOperator) -> FaultEffect {
        assert_eq!(incoming.n(), self.n_data);
        let fault: Vec<(Wire, Pauli)> = incoming
            .support()
            .into_iter()
            .map(|q| (Wire::Data(q), incoming.letter(q)))
            .collect();
        // insert before everything: position "after op -1" is expressed
        // by propagating from the start
        let mut frame = Frame::new(self.n_data, self.n_flags);
        for &(wire, p) in &fault {
            frame.insert(wire, p);
        }
        let mut outcome_flip = false;
        let mut flags = BitVec::zeros(self.n_flags.max(1));
        for op in &self.ops {
            match *op {
                Op::Prep { wire, .. } => frame.reset(wire),
                Op::Cnot { control, target } => frame.cnot(control, target),
                Op::Meas { wire, basis } => {
                    let flip = match basis {
                        Basis::Z => frame.x(wire),
                        Basis::X => frame.z(wire),
                    };
                    match wire {
                        Wire::Synd => outcome_flip = flip,
                        Wire::Flag(k) => flags.set(k, flip),
                        Wire::Data(_) => unreachable!(),
                    }
                }
            }
        }
        FaultEffect {
            data: frame.data_pauli(),
            outcome_flip,
            flags,
        }
    }

    /// All fault locations: one per op (fault inserted after the op).
    pub fn n_locations(&self) -> usize {
        self.ops.len()
    }
}

fn synd_basis(kind: PauliKind) -> Basis {
    match kind {
        PauliKind::Z => Basis::Z,
        PauliKind::X => Basis::X,
    }
}

fn flag_basis(kind: PauliKind) -> Basis {
    match kind {
        PauliKind::Z => Basis::X,
        PauliKind::X => Basis::Z,
    }
}

fn data_cnot(kind: PauliKind, q: usize) -> Op {
    match kind {
        PauliKind::Z => Op::Cnot {
            control: Wire::Data(q),
            target: Wire::Synd,
        },
        PauliKind::X => Op::Cnot {
            control: Wire::Synd,
            target: Wire::Data(q),
        },
    }
}

fn flag_cnot(kind: PauliKind, k: usize) -> Op {
    match kind {
        PauliKind::Z => Op::Cnot {
            control: Wire::Flag(k),
            target: Wire::Synd,
        },
        PauliKind::X => Op::Cnot {
            control: Wire::Synd,
            target: Wire::Flag(k),
        },
    }
}

/// X/Z frame bits over data + ancilla + flag wires.
struct Frame {
    n_data: usize,
    x: BitVec,
    z: BitVec,
}

impl Frame {
    fn new(n_data: usize, n_flags: usize) -> Self {
        let total = n_data + 1 + n_flags;
        Frame {
            n_data,
            x: BitVec::zeros(total),
            z: BitVec::zeros(total),
        }
    }

    fn index(&self, wire: Wire) -> usize {
        match wire {
            Wire::Data(q) => q,
            Wire::Synd => self.n_data,
            Wire::Flag(k) => self.n_data + 1 + k,
        }
    }

    fn insert(&mut self, wire: Wire, p: Pauli) {
        let i = self.index(wire);
        if p.has_x() {
            self.x.flip(i);
        }
        if p.has_z() {
            self.z.flip(i);
        }
    }

    fn reset(&mut self, wire: Wire) {
        let i = self.index(wire);
        self.x.set(i, false);
        self.z.set(i, false);
    }

    fn cnot(&mut self, control: Wire, target: Wire) {
        let (c, t) = (self.index(control), self.index(target));
        let xc = self.x.get(c);
        let zt = self.z.get(t);
        if xc {
            self.x.flip(t);
        }
        if zt {
            self.z.flip(c);
        }
    }

    fn x(&self, wire: Wire) -> bool {
        self.x.get(self.index(wire))
    }

    fn z(&self, wire: Wire) -> bool {
        self.z.get(self.index(wire))
    }

    fn data_pauli(&self) -> PauliOperator {
        let mut p = PauliOperator::identity(self.n_data);
        for q in 0..self.n_data {
            match (self.x.get(q), self.z.get(q)) {
                (false, false) => {}
                (true, false) => p.apply(q, Pauli::X),
                (false, true) => p.apply(q, Pauli::Z),
                (true, true) => p.apply(q, Pauli::Y),
            }
        }
        p
    }
}
