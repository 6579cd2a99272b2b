//! `ccv table`: reference-table emitters with CSV/JSON output.
//!
//! `one`   — every Z-type error reachable from one fault at d=3, with
//!           its syndrome split into cap / face / volume bits.
//! `two`   — symbolic fault-class audit: the reduced residual classes
//!           (idle q, face tails f, volume tails v*, cap tails) with
//!           their face syndromes, weight parities, and flag bits.
//! `three` — closed-form qubit counts per family and distance.

use crate::config::JobConfig;
use crate::EXIT_PASS;
use anyhow::Result;
use ccv_circuits::{FlagStyle, Orderings};
use ccv_codes::{qubit_counts, CappedCode, CodeFamily};
use ccv_faults::{single_fault_table, table_to_csv, PlaneData};
use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct TableArgs {
    #[command(subcommand)]
    which: Which,
}

#[derive(Subcommand)]
enum Which {
    /// Single-fault Z-error table of the distance-3 capped code.
    One(CommonArgs),
    /// Fault-class symbolic audit of the plane representatives.
    Two(CommonArgs),
    /// Qubit-count formulas per family for d = 3..=d_max.
    Three(ThreeArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Capped-code distance.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ThreeArgs {
    /// Largest (odd) distance to tabulate.
    #[arg(long, default_value_t = 11)]
    d_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<String>,
}

pub fn run(args: TableArgs, cfg: &JobConfig) -> Result<u8> {
    let (text, out) = match args.which {
        Which::One(a) => {
            let d = a.d.or(cfg.d).unwrap_or(3);
            (table_one(d, a.format)?, a.out)
        }
        Which::Two(a) => {
            let d = a.d.or(cfg.d).unwrap_or(3);
            (table_two(d, a.format)?, a.out)
        }
        Which::Three(a) => (table_three(a.d_max, a.format), a.out),
    };
    match out {
        Some(path) => {
            std::fs::write(&path, text)?;
            println!("wrote {path}");
        }
        None => print!("{text}"),
    }
    Ok(EXIT_PASS)
}

fn builtin_orderings(d: usize) -> Result<Orderings> {
    match d {
        3 => Ok(Orderings::builtin_d3()),
        5 => Ok(Orderings::builtin_d5()),
        _ => anyhow::bail!("builtin orderings exist only for d in {{3, 5}}"),
    }
}

fn table_one(d: usize, format: Format) -> Result<String> {
    let ccc = CappedCode::build(d).map_err(|e| anyhow::anyhow!("{e:?}"))?;
    let rows = single_fault_table(&ccc, &builtin_orderings(d)?);
    Ok(match format {
        Format::Csv => table_to_csv(&rows),
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "origin": r.origin,
                        "error": r.error,
                        "u": r.u,
                        "v": r.v,
                        "w": r.w,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
    })
}

fn table_two(d: usize, format: Format) -> Result<String> {
    let ccc = CappedCode::build(d).map_err(|e| anyhow::anyhow!("{e:?}"))?;
    let data = PlaneData::build(&ccc, &builtin_orderings(d)?, FlagStyle::OneFlag);
    let bits = |p: u32| -> String {
        (0..data.r)
            .map(|j| if p >> j & 1 == 1 { '1' } else { '0' })
            .collect()
    };
    // (class, circuit, face syndrome, weight parity, flag)
    let mut rows: Vec<(String, String, String, u8, u8)> = Vec::new();
    for (q, &p) in data.q_syn.iter().enumerate() {
        rows.push(("q".into(), format!("{}", q + 1), bits(p), 1, 0));
    }
    for e in &data.f_elems {
        rows.push((
            "f".into(),
            format!("{}", e.circuit),
            bits(e.p),
            e.wp as u8,
            e.flag as u8,
        ));
    }
    for e in &data.vstar_elems {
        rows.push((
            "v*".into(),
            format!("{}", e.circuit),
            format!("{}|{}", bits(e.p_cen), bits(e.p_bot)),
            (e.wp_cen ^ e.wp_bot) as u8,
            e.flag as u8,
        ));
    }
    for e in &data.cap_elems {
        rows.push((
            "cap".into(),
            format!("{}", e.circuit),
            bits(e.p),
            e.wp as u8,
            e.flag as u8,
        ));
    }
    Ok(match format {
        Format::Csv => {
            let mut s = String::from("class,circuit,face_syndrome,weight_parity,flag\n");
            for (c, i, p, w, f) in &rows {
                s.push_str(&format!("{c},{i},{p},{w},{f}\n"));
            }
            s
        }
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(c, i, p, w, f)| {
                    json!({
                        "class": c,
                        "circuit": i,
                        "face_syndrome": p,
                        "weight_parity": w,
                        "flag": f,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
    })
}

fn table_three(d_max: usize, format: Format) -> String {
    let ds = (3..=d_max).step_by(2);
    match format {
        Format::Csv => {
            let mut s =
                String::from("family,d,data,with_shared_ancillas,with_per_generator_ancillas\n");
            for d in ds {
                for family in CodeFamily::ALL {
                    let c = qubit_counts(family, d);
                    s.push_str(&format!(
                        "{},{d},{},{},{}\n",
                        family.name(),
                        c.data,
                        c.with_shared_ancillas,
                        c.with_per_generator_ancillas
                    ));
                }
            }
            s
        }
        Format::Json => {
            let v: Vec<_> = ds
                .flat_map(|d| {
                    CodeFamily::ALL.into_iter().map(move |family| {
                        let c = qubit_counts(family, d);
                        json!({
                            "family": family.name(),
                            "d": d,
                            "data": c.data,
                            "with_shared_ancillas": c.with_shared_ancillas,
                            "with_per_generator_ancillas": c.with_per_generator_ancillas,
                        })
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    }
}
