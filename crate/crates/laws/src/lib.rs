//! Executable registry of program laws, with exhaustive and randomized model
//! checking over small state spaces.

pub mod engine;
pub mod error;
pub mod registry;
pub mod slots;

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tp_core::{Program, StateSpace};

pub use engine::{check, Config, Counterexample, Expected, Law, LawReport, Mode, Outcome, Source, Verdict};
pub use error::LawError;
pub use registry::registry;
pub use slots::{enumerate_programs, Domain, Slot, Value, MAX_ENUMERABLE_ATOMS};

/// Laws matching any of `ids`, either exactly or by base id (`P32` selects
/// every `P32.*`). An empty selection means every law.
pub fn select(ids: &[String]) -> Result<Vec<&'static Law>, LawError> {
    let laws = registry();
    if ids.is_empty() {
        return Ok(laws.iter().collect());
    }
    let mut chosen: Vec<&'static Law> = Vec::new();
    for id in ids {
        let matching: Vec<&'static Law> = laws
            .iter()
            .filter(|l| l.id == id.as_str() || l.base_id() == id.as_str())
            .collect();
        if matching.is_empty() {
            let known: Vec<&str> = laws.iter().map(|l| l.id).collect();
            return Err(LawError::UnknownLaw {
                id: id.clone(),
                known: known.join(", "),
            });
        }
        for l in matching {
            if !chosen.iter().any(|c| c.id == l.id) {
                chosen.push(l);
            }
        }
    }
    Ok(chosen)
}

pub fn find(id: &str) -> Result<&'static Law, LawError> {
    let laws = registry();
    laws.iter().find(|l| l.id == id).ok_or_else(|| LawError::UnknownLaw {
        id: id.to_string(),
        known: laws.iter().map(|l| l.id).collect::<Vec<_>>().join(", "),
    })
}

/// `check` by id.
pub fn check_law(id: &str, cfg: &Config) -> Result<LawReport, LawError> {
    check(find(id)?, cfg)
}

/// Reports of every selected law under every configuration, ordered by law
/// then configuration.
pub fn run_suite(laws: &[&Law], configs: &[Config]) -> Result<Vec<LawReport>, LawError> {
    let mut reports = Vec::new();
    for law in laws {
        for cfg in configs {
            reports.push(check(law, cfg)?);
        }
    }
    Ok(reports)
}

/// Exhaustive at two atoms plus 1000 samples at four.
pub fn default_configs(seed: u64) -> Vec<Config> {
    vec![Config::exhaustive(2), Config::random(4, 1000, seed)]
}

/// A uniformly random program; the same seed gives the same program.
pub fn random_program(space: &Arc<StateSpace>, seed: u64) -> Program {
    slots::random_any(&mut ChaCha8Rng::seed_from_u64(seed), space)
}

/// Like `random_program` but only feasible programs.
pub fn random_feasible_program(space: &Arc<StateSpace>, seed: u64) -> Program {
    slots::random_in(&mut ChaCha8Rng::seed_from_u64(seed), space, Domain::Feasible)
}
