use std::fmt;

use nodal_core::normal_form::QuadForm;
use nodal_core::series::Series2;
use nodal_core::{Elem, Ring, RingDescriptor};
use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    NormalForm,
    Division,
    Factorize,
    Dual,
    Exactness,
    Charts,
    Fiber,
    CheckAll,
}

impl Command {
    pub const PIPELINES: [Command; 7] = [
        Command::NormalForm,
        Command::Division,
        Command::Factorize,
        Command::Dual,
        Command::Exactness,
        Command::Charts,
        Command::Fiber,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::NormalForm => "normal-form",
            Command::Division => "division",
            Command::Factorize => "factorize",
            Command::Dual => "dual",
            Command::Exactness => "exactness",
            Command::Charts => "charts",
            Command::Fiber => "fiber",
            Command::CheckAll => "check-all",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub ring: String,
    pub gamma: String,
    pub delta: String,
    pub s: String,
    pub t: String,
    pub precision: usize,
    pub degree: usize,
    pub cushion: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<String>,
    #[serde(skip)]
    pub timings: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            ring: "q".into(),
            gamma: "1".into(),
            delta: "0".into(),
            s: "0".into(),
            t: "0".into(),
            precision: 6,
            degree: 6,
            cushion: 2,
            seed: 42,
            series: None,
            timings: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("ring: {0}")]
    Ring(nodal_core::Error),
    #[error("{field}: {source}")]
    Literal {
        field: &'static str,
        source: nodal_core::Error,
    },
    #[error("{0}")]
    Precondition(String),
}

/// A validated configuration with every literal parsed in its ring.
#[derive(Clone, Debug)]
pub struct Context {
    pub config: RunConfig,
    pub ring: Ring,
    pub q: QuadForm,
    pub s: Elem,
    pub t: Elem,
    pub series: Option<Series2>,
}

impl Context {
    pub fn new(config: &RunConfig) -> Result<Context, ConfigError> {
        let descriptor: RingDescriptor = config.ring.parse().map_err(ConfigError::Ring)?;
        let ring = Ring::new(&descriptor).map_err(ConfigError::Ring)?;
        let lit = |field: &'static str, s: &str| ring.parse(s).map_err(|source| ConfigError::Literal { field, source });
        let gamma = lit("gamma", &config.gamma)?;
        let delta = lit("delta", &config.delta)?;
        let s = lit("s", &config.s)?;
        let t = lit("t", &config.t)?;
        let q = QuadForm::new(&ring, gamma, delta);
        if !q.is_nondegenerate() {
            return Err(ConfigError::Precondition(format!(
                "gamma^2 - 4 delta = {} is not a unit",
                ring.format(q.discriminant())
            )));
        }
        if config.precision < 1 {
            return Err(ConfigError::Precondition("precision must be at least 1".into()));
        }
        if config.command == Command::NormalForm && config.series.is_none() {
            return Err(ConfigError::Precondition("normal-form needs --series".into()));
        }
        let series = match &config.series {
            Some(lit) => Some(
                Series2::from_literal(&ring, config.precision + 1, lit).map_err(|source| ConfigError::Literal {
                    field: "series",
                    source,
                })?,
            ),
            None => None,
        };
        Ok(Context {
            config: config.clone(),
            ring,
            q,
            s,
            t,
            series,
        })
    }
}
