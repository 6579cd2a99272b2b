//! JSON serialization of built codes.
//!
//! The document is self-contained: every generator is spelled out as a
//! sorted support list in the canonical qubit numbering, so downstream
//! tools can consume a code without rebuilding the lattice.

use crate::ccc::{CappedCode, Form};
use crate::rccc::RecursiveCappedCode;
use crate::two_d::build_2d_color_code;
use ccv_pauli::{GenCategory, PauliKind, StabilizerCode};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorDoc {
    /// Family label, e.g. "cap0", "v2", "f1", "e0".
    pub tag: String,
    /// "x" or "z".
    #[serde(rename = "type")]
    pub pauli_type: String,
    /// Sorted qubit indices.
    pub support: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LogicalsDoc {
    pub x: Vec<usize>,
    pub z: Vec<usize>,
}

/// Serializable description of a built code.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeDoc {
    pub n: usize,
    pub d: usize,
    /// "2d", "subsystem", "h", or "t".
    pub form: String,
    pub generators: Vec<GeneratorDoc>,
    pub logicals: LogicalsDoc,
    /// Layer index (1-based, top down) per qubit.
    pub layers: Vec<usize>,
    /// Qubit sets receiving R_p and its inverse under the transversal
    /// non-Clifford gate; absent for the plain 2D code.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

fn category_prefix(cat: GenCategory) -> &'static str {
    match cat {
        GenCategory::Cap => "cap",
        GenCategory::V => "v",
        GenCategory::F => "f",
        GenCategory::E => "e",
        GenCategory::Other => "g",
    }
}

fn generator_docs(code: &StabilizerCode) -> Vec<GeneratorDoc> {
    code.stab_gens()
        .iter()
        .zip(code.gen_tags())
        .map(|(g, tag)| GeneratorDoc {
            tag: format!("{}{}", category_prefix(tag.category), tag.label),
            pauli_type: match tag.kind {
                PauliKind::X => "x".into(),
                PauliKind::Z => "z".into(),
            },
            support: g.support(),
        })
        .collect()
}

fn logicals_doc(code: &StabilizerCode) -> LogicalsDoc {
    LogicalsDoc {
        x: code.logical_x()[0].support(),
        z: code.logical_z()[0].support(),
    }
}

fn form_name(form: Form) -> &'static str {
    match form {
        Form::Subsystem => "subsystem",
        Form::H => "h",
        Form::T => "t",
    }
}

impl CodeDoc {
    pub fn two_d(d: usize) -> Result<Self, crate::lattice::LatticeError> {
        let (_, code) = build_2d_color_code(d)?;
        Ok(CodeDoc {
            n: code.n(),
            d,
            form: "2d".into(),
            generators: generator_docs(&code),
            logicals: logicals_doc(&code),
            layers: vec![1; code.n()],
            bipartition: None,
        })
    }

    pub fn capped(d: usize, form: Form) -> Result<Self, crate::ccc::CccError> {
        let ccc = CappedCode::build(d)?;
        let code = ccc.fix_gauge(form)?;
        let mut layers = vec![1usize];
        layers.extend(std::iter::repeat(2).take(ccc.n_2d()));
        layers.extend(std::iter::repeat(3).take(ccc.n_2d()));
        Ok(CodeDoc {
            n: code.n(),
            d,
            form: form_name(form).into(),
            generators: generator_docs(&code),
            logicals: logicals_doc(&code),
            layers,
            bipartition: Some(ccc.bipartition()),
        })
    }

    pub fn recursive(d: usize, form: Form) -> Result<Self, crate::ccc::CccError> {
        let rccc = RecursiveCappedCode::build(d)?;
        let code = rccc.code(form)?;
        let layers = (0..rccc.n()).map(|q| rccc.layer_of(q)).collect();
        // the transversal gate bipartition of the outermost level
        let outer = rccc.n_levels() - 1;
        let ccc = &rccc.levels()[outer];
        let (mut v, mut vc) = (Vec::new(), Vec::new());
        let (v2d, _) = ccc.bipartition();
        for q in 1..=ccc.n_2d() {
            let side = if v2d.contains(&q) { &mut v } else { &mut vc };
            side.push(rccc.center_qubit(outer, q));
            side.push(rccc.bottom_qubit(outer, q));
        }
        for q in 0..rccc.inner_n(outer) {
            vc.push(q);
        }
        v.sort_unstable();
        vc.sort_unstable();
        Ok(CodeDoc {
            n: code.n(),
            d,
            form: form_name(form).into(),
            generators: generator_docs(&code),
            logicals: logicals_doc(&code),
            layers,
            bipartition: Some((v, vc)),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Rebuilds the stabilizer code described by the document.
    pub fn to_code(&self) -> Result<StabilizerCode, ccv_pauli::CodeError> {
        use ccv_pauli::{GenTag, PauliOperator};
        let n = self.n;
        let mut gens = Vec::new();
        let mut tags = Vec::new();
        for g in &self.generators {
            let kind = if g.pauli_type == "x" {
                PauliKind::X
            } else {
                PauliKind::Z
            };
            gens.push(match kind {
                PauliKind::X => PauliOperator::x_error(n, g.support.iter().copied()),
                PauliKind::Z => PauliOperator::z_error(n, g.support.iter().copied()),
            });
            let category = match g.tag.chars().next() {
                Some('c') => GenCategory::Cap,
                Some('v') => GenCategory::V,
                Some('f') => GenCategory::F,
                Some('e') => GenCategory::E,
                _ => GenCategory::Other,
            };
            let label: usize = g
                .tag
                .trim_start_matches(|c: char| c.is_alphabetic())
                .parse()
                .unwrap_or(0);
            tags.push(GenTag::new(category, kind, label));
        }
        StabilizerCode::new(
            n,
            gens,
            tags,
            vec![PauliOperator::x_error(n, self.logicals.x.iter().copied())],
            vec![PauliOperator::z_error(n, self.logicals.z.iter().copied())],
            vec![],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_json() {
        let doc = CodeDoc::capped(3, Form::H).unwrap();
        let back = CodeDoc::from_json(&doc.to_json()).unwrap();
        assert_eq!(back.n, 15);
        assert_eq!(back.generators.len(), doc.generators.len());
        let code = back.to_code().unwrap();
        assert_eq!(code.rank(), 14);
        assert_eq!(code.k(), 1);
    }

    #[test]
    fn layers_partition_the_qubits() {
        let doc = CodeDoc::recursive(5, Form::H).unwrap();
        assert_eq!(doc.layers.len(), 53);
        assert_eq!(doc.layers.iter().filter(|&&l| l == 1).count(), 1);
        for l in 2..=5 {
            assert!(doc.layers.iter().any(|&x| x == l), "layer {l} missing");
        }
        let (v, vc) = doc.bipartition.unwrap();
        assert_eq!(v.len() + vc.len(), 53);
    }
}
