//! The single-fault Z-error table of the distance-3 capped code: every
//! residual Z error reachable from one fault, with its syndrome split
//! into the cap bit (u), face bits (v) and volume bits (w).

use ccv_circuits::{MeasurementCircuit, Orderings, Wire};
use ccv_codes::CappedCode;
use ccv_pauli::{GenCategory, GenTag, Pauli, PauliKind, PauliOperator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaultTableRow {
    pub origin: String,
    /// Residual error, factors in circuit order (e.g. "Z10Z1Z8").
    pub error: String,
    pub u: u8,
    /// Face-generator syndrome bits as a string, e.g. "101".
    pub v: String,
    /// Volume-generator syndrome bits.
    pub w: String,
}

struct Signatures {
    cap: PauliOperator,
    faces: Vec<PauliOperator>,
    volumes: Vec<PauliOperator>,
}

impl Signatures {
    fn new(ccc: &CappedCode) -> Self {
        let n = ccc.n();
        Signatures {
            cap: PauliOperator::x_error(n, ccc.cap_support()),
            faces: (0..ccc.r())
                .map(|j| PauliOperator::x_error(n, ccc.f_support(j)))
                .collect(),
            volumes: (0..ccc.r())
                .map(|j| PauliOperator::x_error(n, ccc.v_support(j)))
                .collect(),
        }
    }

    fn row(&self, origin: &str, support_in_order: &[usize], n: usize) -> FaultTableRow {
        let e = PauliOperator::z_error(n, support_in_order.iter().copied());
        let bit = |g: &PauliOperator| u8::from(!e.commutes(g));
        FaultTableRow {
            origin: origin.to_string(),
            error: support_in_order
                .iter()
                .map(|q| format!("Z{q}"))
                .collect::<String>(),
            u: bit(&self.cap),
            v: self.faces.iter().map(|g| bit(g).to_string()).collect(),
            w: self.volumes.iter().map(|g| bit(g).to_string()).collect(),
        }
    }
}

/// Emits one row per fault: idle Z on each qubit, then each Z-type
/// measurement circuit's ancilla faults after every data CNOT, reduced
/// to whichever of head/tail is shorter (ties keep the head, i.e. the
/// qubits already coupled).
pub fn single_fault_table(ccc: &CappedCode, orderings: &Orderings) -> Vec<FaultTableRow> {
    let n = ccc.n();
    let sig = Signatures::new(ccc);
    let mut rows = Vec::new();
    for q in 0..n {
        rows.push(sig.row(&format!("q{q}"), &[q], n));
    }
    // face circuits first (f{r+1}z ..), then cap (v0z) and volumes
    let mut circuits: Vec<(String, Vec<usize>)> = Vec::new();
    for j in 0..ccc.r() {
        circuits.push((
            format!("f{}z", ccc.r() + j + 1),
            orderings.faces[j].clone(),
        ));
    }
    circuits.push(("v0z".into(), orderings.cap.clone()));
    for j in 0..ccc.r() {
        circuits.push((
            format!("v{}z", j + 1),
            orderings.v_order(j, ccc.n_2d()),
        ));
    }
    for (name, order) in circuits {
        let tag = GenTag::new(GenCategory::Other, PauliKind::Z, 0);
        let circuit = MeasurementCircuit::non_flag(tag, order.clone(), n);
        let pos = circuit.cnot_positions();
        let w = order.len();
        for k in 1..w {
            let eff = circuit.propagate(pos[k - 1], &[(Wire::Synd, Pauli::Z)]);
            let tail = &order[k..];
            debug_assert_eq!(
                eff.data,
                PauliOperator::z_error(n, tail.iter().copied()),
                "{name} fault after CNOT {k}"
            );
            let head = &order[..k];
            let rep = if k <= w - k { head } else { tail };
            rows.push(sig.row(&name, rep, n));
        }
    }
    rows
}

/// Renders the table as CSV with columns origin,error,u,v,w.
pub fn table_to_csv(rows: &[FaultTableRow]) -> String {
    let mut out = String::from("origin,error,u,v,w\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{},{}\n", r.origin, r.error, r.u, r.v, r.w));
    }
    out
}
