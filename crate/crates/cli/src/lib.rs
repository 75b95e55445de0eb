//! Verification pipelines over `nodal-core` with deterministic reports.

pub mod checks;
pub mod config;
pub mod report;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use config::{Command, ConfigError, Context, RunConfig};
pub use report::{emit, CheckRecord, Format, Report, Status};

use checks::{Check, Problem, CHECKS};

/// Stable per-check stream so results do not depend on scheduling.
fn check_rng(seed: u64, name: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stream = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    });
    rng.set_stream(stream);
    rng
}

fn parameters(ctx: &Context, check: &Check) -> BTreeMap<String, String> {
    let c = &ctx.config;
    let mut out = BTreeMap::from([
        ("ring".to_string(), c.ring.clone()),
        ("gamma".to_string(), ctx.ring.format(ctx.q.gamma())),
        ("delta".to_string(), ctx.ring.format(ctx.q.delta())),
        ("s".to_string(), ctx.ring.format(&ctx.s)),
        ("t".to_string(), ctx.ring.format(&ctx.t)),
    ]);
    for &key in check.uses {
        let value = match key {
            "precision" => c.precision.to_string(),
            "degree" => c.degree.to_string(),
            "cushion" => c.cushion.to_string(),
            "seed" => c.seed.to_string(),
            _ => continue,
        };
        out.insert(key.to_string(), value);
    }
    if check.command == Command::NormalForm {
        if let Some(series) = &c.series {
            out.insert("series".into(), series.clone());
        }
    }
    out
}

fn run_check(ctx: &Context, check: &Check) -> CheckRecord {
    let start = Instant::now();
    let mut rng = check_rng(ctx.config.seed, check.name);
    let outcome = (check.run)(ctx, &mut rng);
    let elapsed_ms = ctx.config.timings.then(|| start.elapsed().as_millis() as u64);
    let (status, summary, certificate, counterexample) = match outcome {
        Ok(p) => (Status::Pass, p.summary, p.certificate, None),
        Err(Problem::Fail {
            summary,
            counterexample,
        }) => (Status::Fail, summary, serde_json::Value::Null, Some(counterexample)),
        Err(Problem::Skip(reason)) => (Status::Skipped, reason, serde_json::Value::Null, None),
    };
    CheckRecord {
        name: check.name.to_string(),
        parameters: parameters(ctx, check),
        status,
        summary,
        certificate,
        counterexample,
        elapsed_ms,
    }
}

/// Validates the configuration and runs the selected pipeline.
pub fn run(config: &RunConfig) -> Result<Report, ConfigError> {
    let ctx = Context::new(config)?;
    let selected: Vec<&Check> = CHECKS
        .iter()
        .filter(|c| config.command == Command::CheckAll || c.command == config.command)
        .collect();
    let records: Vec<CheckRecord> = selected.par_iter().map(|c| run_check(&ctx, c)).collect();
    Ok(Report::new(config.clone(), records))
}
