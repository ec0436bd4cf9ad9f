//! Running laws: exhaustive and sampled instantiation, witness replay and
//! reports.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tp_core::StateSpace;

use crate::error::LawError;
use crate::slots::{sample_slot, slot_choices, tuple_bound, Domain, Slot, Value};

/// Result of one instance of a law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// The antecedent of a conditional law is false.
    Vacuous,
    Fails(String),
}

pub type Checker = fn(&[Value]) -> Outcome;
pub type Sampler = fn(&mut ChaCha8Rng, &Arc<StateSpace>) -> Vec<Value>;
pub type Witness = fn() -> Vec<Value>;

/// Where a refuting witness comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// A counterexample given with the statement itself.
    Stated,
    /// Found by exhaustive search and frozen.
    Found,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Stated => "stated",
            Source::Found => "found",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Expected {
    Holds,
    Refuted { source: Source, witness: Witness },
}

pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    pub slots: &'static [Slot],
    /// Programs are drawn from this domain, on every program slot.
    pub domain: Domain,
    pub check: Checker,
    pub expected: Expected,
    /// Targeted generator for random mode, used when uniform sampling would
    /// almost never satisfy an antecedent.
    pub sampler: Option<Sampler>,
    pub note: &'static str,
}

impl Law {
    /// `P32` for `P32.assoc`.
    pub fn base_id(&self) -> &'static str {
        base_id(self.id)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.slots.iter().flat_map(|s| s.names()).collect()
    }

    pub fn expects_holds(&self) -> bool {
        matches!(self.expected, Expected::Holds)
    }

    /// Whether `values` is a legal instance: right kinds, program domain and
    /// pairing constraints.
    pub fn admits(&self, values: &[Value]) -> bool {
        let mut i = 0;
        for slot in self.slots {
            let ok = match slot {
                Slot::Prog(_) => matches!(values.get(i), Some(Value::Prog(p)) if self.domain.admits(p)),
                Slot::Cond(_) => matches!(values.get(i), Some(Value::Cond(_))),
                Slot::Rel(_) => matches!(values.get(i), Some(Value::Rel(_))),
                Slot::Refining(..) => match (values.get(i), values.get(i + 1)) {
                    (Some(Value::Prog(q)), Some(Value::Prog(p))) => {
                        self.domain.admits(q) && self.domain.admits(p) && q.refines(p)
                    }
                    _ => false,
                },
                Slot::SubCond(..) => match (values.get(i), values.get(i + 1)) {
                    (Some(Value::Cond(d)), Some(Value::Cond(c))) => d.implies(c).unwrap_or(false),
                    _ => false,
                },
                Slot::SubRel(..) => match (values.get(i), values.get(i + 1)) {
                    (Some(Value::Rel(r)), Some(Value::Rel(s))) => r.is_subset(s).unwrap_or(false),
                    _ => false,
                },
            };
            if !ok {
                return false;
            }
            i += slot.names().len();
        }
        i == values.len()
    }
}

pub fn base_id(id: &str) -> &str {
    id.split('.').next().unwrap_or(id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { samples: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub size: usize,
    pub mode: Mode,
    pub seed: u64,
    /// Exhaustive runs above this many tuples are refused.
    pub max_tuples: f64,
    /// Counterexamples kept per report; all failures are counted.
    pub keep_failures: usize,
}

impl Config {
    pub fn exhaustive(size: usize) -> Config {
        Config {
            size,
            mode: Mode::Exhaustive,
            seed: 0,
            max_tuples: 5e7,
            keep_failures: 3,
        }
    }

    pub fn random(size: usize, samples: usize, seed: u64) -> Config {
        Config {
            size,
            mode: Mode::Random { samples },
            seed,
            max_tuples: 5e7,
            keep_failures: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub bindings: Vec<(&'static str, String)>,
    pub detail: String,
}

impl Counterexample {
    fn new(law: &Law, values: &[Value], detail: String) -> Counterexample {
        Counterexample {
            bindings: law
                .names()
                .into_iter()
                .zip(values.iter().map(|v| v.to_string()))
                .collect(),
            detail,
        }
    }

    pub fn render(&self) -> String {
        let binds: Vec<String> = self.bindings.iter().map(|(n, v)| format!("{n} = {v}")).collect();
        format!("{}: {}", binds.join(", "), self.detail)
    }
}

/// Replay of a frozen witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub source: Source,
    pub admissible: bool,
    /// The witness violates the law, as expected.
    pub refutes: bool,
    pub counterexample: Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Outcome as registered.
    Confirmed,
    Unexpected(String),
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub id: &'static str,
    pub statement: &'static str,
    pub domain: Domain,
    pub mode: Mode,
    pub size: usize,
    pub cases: u64,
    pub vacuous: u64,
    pub failure_count: u64,
    pub failures: Vec<Counterexample>,
    pub replay: Option<Replay>,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

impl LawReport {
    pub fn confirmed(&self) -> bool {
        self.verdict == Verdict::Confirmed
    }

    pub fn mode_name(&self) -> &'static str {
        match self.mode {
            Mode::Exhaustive => "exhaustive",
            Mode::Random { .. } => "random",
        }
    }
}

/// Exhaustively instantiates every slot. Returns the number of cases and
/// vacuous cases, calling `on_fail` for each failure.
fn run_exhaustive(
    law: &Law,
    space: &Arc<StateSpace>,
    cfg: &Config,
    mut on_fail: impl FnMut(&[Value], String),
) -> Result<(u64, u64), LawError> {
    let too_large = |bound: f64| {
        LawError::TooLarge(format!(
            "law {} needs up to {bound:.0} cases over {} atoms (limit {:.0}); use random mode",
            law.id,
            space.len(),
            cfg.max_tuples
        ))
    };
    // paired slots are filtered, so their real size is only known once built
    for slot in law.slots {
        let bound = tuple_bound(std::slice::from_ref(slot), space.len());
        if bound > cfg.max_tuples {
            return Err(too_large(tuple_bound(law.slots, space.len())));
        }
    }
    let choices = law
        .slots
        .iter()
        .map(|s| slot_choices(s, space, law.domain))
        .collect::<Result<Vec<_>, _>>()?;
    let exact: f64 = choices.iter().map(|c| c.len() as f64).product();
    if exact > cfg.max_tuples {
        return Err(too_large(exact));
    }
    if choices.iter().any(|c| c.is_empty()) {
        return Ok((0, 0));
    }
    let mut digits = vec![0usize; choices.len()];
    let mut buffer: Vec<Value> = choices.iter().flat_map(|c| c[0].iter().cloned()).collect();
    let offsets: Vec<usize> = choices
        .iter()
        .scan(0, |acc, c| {
            let at = *acc;
            *acc += c[0].len();
            Some(at)
        })
        .collect();
    let (mut cases, mut vacuous) = (0u64, 0u64);
    loop {
        cases += 1;
        match (law.check)(&buffer) {
            Outcome::Holds => {}
            Outcome::Vacuous => vacuous += 1,
            Outcome::Fails(detail) => on_fail(&buffer, detail),
        }
        // odometer, last slot fastest
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok((cases, vacuous));
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < choices[k].len() {
                break;
            }
            digits[k] = 0;
        }
        for j in k..choices.len() {
            for (m, v) in choices[j][digits[j]].iter().enumerate() {
                buffer[offsets[j] + m] = v.clone();
            }
        }
    }
}

fn run_random(
    law: &Law,
    space: &Arc<StateSpace>,
    samples: usize,
    seed: u64,
    mut on_fail: impl FnMut(&[Value], String),
) -> (u64, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fingerprint(law.id));
    let mut vacuous = 0;
    for _ in 0..samples {
        let values = match law.sampler {
            Some(sample) => sample(&mut rng, space),
            None => law
                .slots
                .iter()
                .flat_map(|s| sample_slot(&mut rng, s, space, law.domain))
                .collect(),
        };
        debug_assert!(law.admits(&values), "sampler for {} left the domain", law.id);
        match (law.check)(&values) {
            Outcome::Holds => {}
            Outcome::Vacuous => vacuous += 1,
            Outcome::Fails(detail) => on_fail(&values, detail),
        }
    }
    (samples as u64, vacuous)
}

/// Stable per-law stream separation, so adding a law does not shift the
/// samples of the others.
fn fingerprint(id: &str) -> u64 {
    id.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x1000_0000_01b3))
}

pub fn replay_witness(law: &Law) -> Option<Replay> {
    let Expected::Refuted { source, witness } = law.expected else {
        return None;
    };
    let values = witness();
    if !law.admits(&values) {
        return Some(Replay {
            source,
            admissible: false,
            refutes: false,
            counterexample: Counterexample::new(law, &values, "witness does not fit the law's slots".into()),
        });
    }
    let outcome = (law.check)(&values);
    let detail = match &outcome {
        Outcome::Fails(d) => d.clone(),
        Outcome::Holds => "law holds on the witness".to_string(),
        Outcome::Vacuous => "antecedent is false on the witness".to_string(),
    };
    Some(Replay {
        source,
        admissible: true,
        refutes: matches!(outcome, Outcome::Fails(_)),
        counterexample: Counterexample::new(law, &values, detail),
    })
}

pub fn check(law: &Law, cfg: &Config) -> Result<LawReport, LawError> {
    let space = StateSpace::numbered(cfg.size)?;
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut failure_count = 0u64;
    let on_fail = |values: &[Value], detail: String| {
        failure_count += 1;
        if failures.len() < cfg.keep_failures {
            failures.push(Counterexample::new(law, values, detail));
        }
    };
    let (cases, vacuous) = match cfg.mode {
        Mode::Exhaustive => run_exhaustive(law, &space, cfg, on_fail)?,
        Mode::Random { samples } => run_random(law, &space, samples, cfg.seed, on_fail),
    };
    let replay = replay_witness(law);
    let verdict = match (&law.expected, &replay) {
        (Expected::Holds, _) if failure_count > 0 => {
            Verdict::Unexpected(format!("{failure_count} of {cases} cases fail"))
        }
        (Expected::Holds, _) if cases > 0 && vacuous == cases => {
            Verdict::Unexpected("antecedent never satisfied; nothing was checked".to_string())
        }
        (Expected::Holds, _) => Verdict::Confirmed,
        (Expected::Refuted { .. }, Some(r)) if !r.admissible => {
            Verdict::Unexpected("recorded witness is outside the law's domain".to_string())
        }
        (Expected::Refuted { .. }, Some(r)) if !r.refutes => {
            Verdict::Unexpected(format!("recorded witness does not refute: {}", r.counterexample.detail))
        }
        (Expected::Refuted { .. }, _) => Verdict::Confirmed,
    };
    Ok(LawReport {
        id: law.id,
        statement: law.statement,
        domain: law.domain,
        mode: cfg.mode,
        size: cfg.size,
        cases,
        vacuous,
        failure_count,
        failures,
        replay,
        verdict,
        elapsed: start.elapsed(),
    })
}

/// Whether some program of a domain admits a failing instance at `size`,
/// searching exhaustively. Used to show a law's domain hypothesis is needed.
pub fn fails_on_domain(law: &Law, domain: Domain, size: usize) -> Result<Option<Counterexample>, LawError> {
    let widened = Law {
        id: law.id,
        statement: law.statement,
        slots: law.slots,
        domain,
        check: law.check,
        expected: law.expected,
        sampler: None,
        note: law.note,
    };
    let space = StateSpace::numbered(size)?;
    let mut first = None;
    run_exhaustive(&widened, &space, &Config::exhaustive(size), |values, detail| {
        if first.is_none() {
            first = Some(Counterexample::new(&widened, values, detail));
        }
    })?;
    Ok(first)
}
