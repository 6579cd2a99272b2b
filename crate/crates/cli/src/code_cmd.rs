//! `ccv code build`: construct a code, report its parameters, check
//! the closed-form qubit count, and optionally serialize it to JSON.

use crate::config::JobConfig;
use crate::{EXIT_FAIL, EXIT_PASS};
use anyhow::{bail, Result};
use ccv_codes::{qubit_counts, CodeDoc, CodeFamily, Form};
use clap::{Args, Subcommand, ValueEnum};

#[derive(Args)]
pub struct CodeArgs {
    #[command(subcommand)]
    action: CodeAction,
}

#[derive(Subcommand)]
enum CodeAction {
    /// Build the requested code family at a given distance.
    Build(BuildArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    /// Triangular 2D color code.
    #[value(name = "2d")]
    TwoD,
    /// Capped color code.
    Ccc,
    /// Recursive capped color code.
    Rccc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormArg {
    H,
    T,
}

impl FormArg {
    pub fn to_form(self) -> Form {
        match self {
            FormArg::H => Form::H,
            FormArg::T => Form::T,
        }
    }
}

#[derive(Args)]
struct BuildArgs {
    /// Code family.
    #[arg(long, value_enum)]
    family: Family,
    /// Code distance (odd, ≥ 3).
    #[arg(long)]
    d: Option<usize>,
    /// Gauge form for capped families.
    #[arg(long, value_enum, default_value = "h")]
    form: FormArg,
    /// Write the serialized code JSON here.
    #[arg(long)]
    out: Option<String>,
}

pub fn run(args: CodeArgs, cfg: &JobConfig) -> Result<u8> {
    let CodeAction::Build(b) = args.action;
    let d = crate::config::require(b.d, cfg.d, "d")?;
    if d < 3 || d % 2 == 0 {
        bail!("distance must be odd and >= 3, got {d}");
    }
    let form = b.form.to_form();
    let (doc, family) = match b.family {
        Family::TwoD => (CodeDoc::two_d(d)?, CodeFamily::TwoD),
        Family::Ccc => (CodeDoc::capped(d, form)?, CodeFamily::Capped),
        Family::Rccc => (CodeDoc::recursive(d, form)?, CodeFamily::RecursiveCapped),
    };
    let expected = qubit_counts(family, d);
    println!("family={} d={d} form={}", family.name(), doc.form);
    println!("n={} k=1 generators={}", doc.n, doc.generators.len());
    println!(
        "counts: data={} shared-ancilla={} per-generator-ancilla={}",
        expected.data, expected.with_shared_ancillas, expected.with_per_generator_ancillas
    );
    let ok = expected.data == doc.n;
    println!(
        "formula check: {}",
        if ok { "ok" } else { "MISMATCH" }
    );
    if let Some(path) = &b.out {
        std::fs::write(path, doc.to_json())?;
        println!("wrote {path}");
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}
