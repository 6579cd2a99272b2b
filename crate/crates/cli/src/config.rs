//! Optional TOML job configuration: values here act as defaults for
//! flags the user omitted, keeping batch invocations reproducible from
//! a single file. The worker count may additionally be overridden by
//! the `CCV_WORKERS` environment variable (the only env knob).

use anyhow::{Context, Result};
use serde::Deserialize;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub d: Option<usize>,
    pub t: Option<usize>,
    pub seed: Option<u64>,
    pub shots: Option<u64>,
    pub p: Option<f64>,
    pub workers: Option<usize>,
    pub orderings: Option<String>,
    pub budget: Option<u64>,
}

impl JobConfig {
    pub fn load(path: Option<&str>) -> Result<Self> {
        match path {
            None => Ok(JobConfig::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .with_context(|| format!("reading config file {p}"))?;
                toml::from_str(&text).with_context(|| format!("parsing config file {p}"))
            }
        }
    }
}

/// Worker precedence: CCV_WORKERS env var, then config, then rayon's
/// default. Worker count never changes results, only wall time.
pub fn init_workers(cfg: &JobConfig) {
    let from_env = std::env::var("CCV_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    if let Some(w) = from_env.or(cfg.workers) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
}

/// Flag value, else config value, else an error naming the flag.
pub fn require<T: Copy>(flag: Option<T>, cfg: Option<T>, name: &str) -> Result<T> {
    flag.or(cfg)
        .with_context(|| format!("--{name} is required (flag or config file)"))
}
