//! Circuit export: a JSON document per circuit and a plain-text wire
//! diagram for documentation.

use crate::circuit::{Basis, MeasurementCircuit, Op, Wire};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocationDoc {
    pub step: usize,
    pub kind: String,
    pub args: Vec<String>,
}

/// Serializable description of one measurement circuit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CircuitDoc {
    /// Generator tag, e.g. "v1_z".
    pub generator: String,
    /// Ancilla wires used (syndrome ancilla plus flags).
    pub ancillas: usize,
    pub locations: Vec<LocationDoc>,
}

fn wire_name(w: Wire) -> String {
    match w {
        Wire::Data(q) => format!("q{q}"),
        Wire::Synd => "synd".into(),
        Wire::Flag(k) => format!("flag{k}"),
    }
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Z => "z",
        Basis::X => "x",
    }
}

impl CircuitDoc {
    pub fn from_circuit(c: &MeasurementCircuit) -> Self {
        let locations = c
            .ops
            .iter()
            .enumerate()
            .map(|(step, op)| match *op {
                Op::Prep { wire, basis } => LocationDoc {
                    step,
                    kind: "prep".into(),
                    args: vec![wire_name(wire), basis_name(basis).into()],
                },
                Op::Cnot { control, target } => LocationDoc {
                    step,
                    kind: "cnot".into(),
                    args: vec![wire_name(control), wire_name(target)],
                },
                Op::Meas { wire, basis } => LocationDoc {
                    step,
                    kind: "meas".into(),
                    args: vec![wire_name(wire), basis_name(basis).into()],
                },
            })
            .collect();
        CircuitDoc {
            generator: format!("{}", c.tag),
            ancillas: 1 + c.n_flags,
            locations,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit documents always serialize")
    }
}

/// Renders a circuit as one text row per wire; columns are time steps.
/// Data wires that never participate are omitted.
pub fn render_diagram(c: &MeasurementCircuit) -> String {
    let mut wires: Vec<Wire> = c.order.iter().map(|&q| Wire::Data(q)).collect();
    wires.sort_by_key(|w| match *w {
        Wire::Data(q) => q,
        _ => usize::MAX,
    });
    wires.dedup();
    wires.push(Wire::Synd);
    for k in 0..c.n_flags {
        wires.push(Wire::Flag(k));
    }
    let row_of = |w: Wire| wires.iter().position(|&x| x == w).unwrap();

    let mut cells: Vec<Vec<String>> = vec![Vec::new(); wires.len()];
    for op in &c.ops {
        for row in cells.iter_mut() {
            row.push("--".into());
        }
        match *op {
            Op::Prep { wire, basis } => {
                let sym = match basis {
                    Basis::Z => "|0",
                    Basis::X => "|+",
                };
                cells[row_of(wire)].pop();
                cells[row_of(wire)].push(sym.into());
            }
            Op::Cnot { control, target } => {
                cells[row_of(control)].pop();
                cells[row_of(control)].push("-*".into());
                cells[row_of(target)].pop();
                cells[row_of(target)].push("-+".into());
            }
            Op::Meas { wire, basis } => {
                let sym = match basis {
                    Basis::Z => "Mz",
                    Basis::X => "Mx",
                };
                cells[row_of(wire)].pop();
                cells[row_of(wire)].push(sym.into());
            }
        }
    }

    let mut out = String::new();
    for (w, row) in wires.iter().zip(&cells) {
        let name = wire_name(*w);
        out.push_str(&format!("{name:>6}: {}\n", row.join("-")));
    }
    out
}
