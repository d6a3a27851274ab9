//! Sweeps the catalog over parameter ranges and reports per-instance
//! verdicts together with the results of the independent cross-checks.

use std::time::Instant;

use serde::Serialize;

use crate::arith64::primes_in;
use crate::congruence::{
    check_congruence_reduced, classical_check, modular_oracle, phi_reduce, q_limit_check,
    OraclePrimes, Verdict,
};
use crate::error::Error;
use crate::polyring::{IntPoly, RatFunc};
use crate::qkit::q_int;
use crate::theorems::catalog::{
    self, build_q, classical_sides, q1_expected, Axis, Statement, StatementId, StatementKind,
};

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    /// Statements to run; empty means the whole catalog.
    pub statements: Vec<StatementId>,
    pub prime_lo: u64,
    pub prime_hi: u64,
    pub m_lo: u64,
    pub m_hi: u64,
    pub oracle: bool,
    /// Admissible oracle primes that must agree per q-congruence instance.
    pub oracle_count: u32,
    pub limit_checks: bool,
    /// Self-test mode: perturb every q-congruence right side by
    /// `(1-q) [p]_q^(k-1)`, which must flip every verdict to violated.
    pub mutate: bool,
    pub fail_fast: bool,
    pub seed: u64,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    /// Witnesses are normalized and kept on the record only when both
    /// degrees stay at or under this bound.
    pub normalize_threshold: usize,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            statements: Vec::new(),
            prime_lo: 3,
            prime_hi: 31,
            m_lo: 1,
            m_hi: 6,
            oracle: false,
            oracle_count: 3,
            limit_checks: true,
            mutate: false,
            fail_fast: false,
            seed: 1,
            jobs: 0,
            normalize_threshold: 64,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceRecord {
    pub id: StatementId,
    /// Prime (or integer base); 0 for single-parameter identities.
    pub p: u64,
    /// Second parameter when the statement takes one.
    pub m: Option<u64>,
    pub kind: &'static str,
    pub verdict: &'static str,
    pub oracle: &'static str,
    pub limit_check: &'static str,
    pub millis: u64,
    #[serde(skip)]
    pub witness: Option<String>,
    #[serde(skip)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub errors: usize,
    pub oracle_disagreements: usize,
    pub limit_disagreements: usize,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub config: RunConfig,
    pub records: Vec<InstanceRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// 1 when any instance is violated, else 2 when any errored, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.violated > 0 {
            1
        } else if self.summary.errors > 0 {
            2
        } else {
            0
        }
    }

    /// Clears the timing fields, leaving the report a pure function of the
    /// configuration.
    pub fn zero_millis(&mut self) {
        for r in &mut self.records {
            r.millis = 0;
        }
    }
}

fn not_applicable(st: &Statement, p: u64, m: Option<u64>) -> InstanceRecord {
    InstanceRecord {
        id: st.id,
        p,
        m,
        kind: st.kind.label(),
        verdict: "not_applicable",
        oracle: "skipped",
        limit_check: "skipped",
        millis: 0,
        witness: None,
        detail: None,
    }
}

fn error_record(st: &Statement, p: u64, m: Option<u64>, err: &Error) -> InstanceRecord {
    InstanceRecord {
        id: st.id,
        p,
        m,
        kind: st.kind.label(),
        verdict: "error",
        oracle: "skipped",
        limit_check: "skipped",
        millis: 0,
        witness: None,
        detail: Some(err.to_string()),
    }
}

/// Verifies one applicable instance.
pub fn verify_statement(
    st: &Statement,
    p: u64,
    m: Option<u64>,
    cfg: &RunConfig,
) -> InstanceRecord {
    let started = Instant::now();
    let mut record = match st.kind {
        StatementKind::QCongruence { k } => verify_q_congruence(st, k, p, m, cfg),
        StatementKind::QIdentity => verify_q_identity(st, p, m),
        StatementKind::Classical { k } => verify_classical(st, k, p, m),
    };
    record.millis = started.elapsed().as_millis() as u64;
    record
}

fn verify_q_congruence(
    st: &Statement,
    k: u32,
    p: u64,
    m: Option<u64>,
    cfg: &RunConfig,
) -> InstanceRecord {
    let (lhs, mut rhs, modulus) = match build_q(st.id, p, m) {
        Ok(sides) => sides,
        Err(err) => return error_record(st, p, m, &err),
    };
    if cfg.mutate {
        let bump = &IntPoly::one_minus_q_pow(1) * &q_int(p).pow(k - 1);
        rhs = &rhs + &RatFunc::from_poly(bump);
    }

    let reduced = phi_reduce(&lhs, &modulus)
        .and_then(|l| phi_reduce(&rhs, &modulus).map(|r| (l, r)));
    let (l, r) = match reduced {
        Ok(pair) => pair,
        Err(err) => return error_record(st, p, m, &err),
    };
    let verdict = match check_congruence_reduced(&l, &r, &modulus) {
        Ok(v) => v,
        Err(err) => return error_record(st, p, m, &err),
    };

    let mut record = InstanceRecord {
        id: st.id,
        p,
        m,
        kind: st.kind.label(),
        verdict: if verdict.holds() { "holds" } else { "violated" },
        oracle: "skipped",
        limit_check: "skipped",
        millis: 0,
        witness: None,
        detail: None,
    };
    if let Verdict::Holds { witness } = &verdict {
        let small = |f: &RatFunc| {
            f.num().degree().unwrap_or(0) <= cfg.normalize_threshold
                && f.den().degree().unwrap_or(0) <= cfg.normalize_threshold
        };
        if small(witness) {
            record.witness = Some(witness.normalized().to_string());
        }
    }

    if cfg.oracle {
        let tag = format!("{}:{}:{}", st.id, p, m.unwrap_or(0));
        let mut primes = OraclePrimes::new(cfg.seed, &tag);
        let mut agreed = 0;
        let mut attempts = cfg.oracle_count + 16;
        record.oracle = "agree";
        while agreed < cfg.oracle_count && attempts > 0 {
            attempts -= 1;
            let ell = primes.next().expect("prime stream is endless");
            match modular_oracle(&l, &r, &modulus, verdict.holds(), ell) {
                Ok(true) => agreed += 1,
                Ok(false) => {
                    record.oracle = "disagree";
                    break;
                }
                Err(_) => continue,
            }
        }
        if record.oracle == "agree" && agreed < cfg.oracle_count {
            record.verdict = "error";
            record.oracle = "skipped";
            record.detail = Some("no admissible oracle primes found".into());
        }
    }

    if cfg.limit_checks {
        if let Some(expected) = q1_expected(st.id, p, m) {
            match q_limit_check(&l, &r, &expected) {
                Ok(true) => record.limit_check = "agree",
                Ok(false) => record.limit_check = "disagree",
                Err(err) => {
                    record.verdict = "error";
                    record.detail = Some(err.to_string());
                }
            }
        }
    }
    record
}

fn verify_q_identity(st: &Statement, p: u64, m: Option<u64>) -> InstanceRecord {
    let param = m.expect("identity instances carry their parameter");
    InstanceRecord {
        id: st.id,
        p,
        m,
        kind: st.kind.label(),
        verdict: if catalog::verify_identity(st.id, p, param) {
            "holds"
        } else {
            "violated"
        },
        oracle: "skipped",
        limit_check: "skipped",
        millis: 0,
        witness: None,
        detail: None,
    }
}

fn verify_classical(st: &Statement, k: u32, p: u64, m: Option<u64>) -> InstanceRecord {
    let (lhs, rhs) = classical_sides(st.id, p, m);
    match classical_check(&lhs, &rhs, p, k) {
        Ok(ok) => InstanceRecord {
            id: st.id,
            p,
            m,
            kind: st.kind.label(),
            verdict: if ok { "holds" } else { "violated" },
            oracle: "skipped",
            limit_check: "skipped",
            millis: 0,
            witness: None,
            detail: None,
        },
        Err(err) => error_record(st, p, m, &err),
    }
}

enum Job {
    Skip(InstanceRecord),
    Run(u64, Option<u64>),
}

fn enumerate(st: &'static Statement, cfg: &RunConfig) -> Vec<(&'static Statement, Job)> {
    let mut jobs = Vec::new();
    match st.axis {
        Axis::Primes => {
            for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
                if p < st.min_p {
                    jobs.push((st, Job::Skip(not_applicable(st, p, None))));
                } else {
                    jobs.push((st, Job::Run(p, None)));
                }
            }
        }
        Axis::PrimesTimesM { min_m } => {
            for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
                for m in cfg.m_lo..=cfg.m_hi {
                    if m % p == 0 {
                        continue;
                    }
                    if p < st.min_p || m < min_m {
                        jobs.push((st, Job::Skip(not_applicable(st, p, Some(m)))));
                    } else {
                        jobs.push((st, Job::Run(p, Some(m))));
                    }
                }
            }
        }
        Axis::IntegerBases => {
            for base in cfg.prime_lo..=cfg.prime_hi {
                for k in cfg.m_lo..=cfg.m_hi {
                    if base < st.min_p || k < 1 {
                        jobs.push((st, Job::Skip(not_applicable(st, base, Some(k)))));
                    } else {
                        jobs.push((st, Job::Run(base, Some(k))));
                    }
                }
            }
        }
        Axis::PrimesTimesK => {
            for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
                for k in cfg.m_lo..=cfg.m_hi {
                    if p < st.min_p || k < 1 {
                        jobs.push((st, Job::Skip(not_applicable(st, p, Some(k)))));
                    } else {
                        jobs.push((st, Job::Run(p, Some(k))));
                    }
                }
            }
        }
        Axis::ParamOnly => {
            for n in cfg.m_lo..=cfg.m_hi {
                if n < st.min_p {
                    jobs.push((st, Job::Skip(not_applicable(st, 0, Some(n)))));
                } else {
                    jobs.push((st, Job::Run(0, Some(n))));
                }
            }
        }
    }
    jobs
}

/// Runs every selected statement over the configured ranges. Record order
/// is deterministic: catalog order, then ascending p, then ascending m.
pub fn verify_range(cfg: &RunConfig) -> Report {
    let selected: Vec<&'static Statement> = catalog::all()
        .iter()
        .filter(|st| cfg.statements.is_empty() || cfg.statements.contains(&st.id))
        .collect();

    let jobs: Vec<(&'static Statement, Job)> = selected
        .iter()
        .flat_map(|st| enumerate(st, cfg))
        .collect();

    let records: Vec<InstanceRecord> = if cfg.fail_fast {
        let mut out = Vec::with_capacity(jobs.len());
        for (st, job) in &jobs {
            let record = match job {
                Job::Skip(r) => r.clone(),
                Job::Run(p, m) => verify_statement(st, *p, *m, cfg),
            };
            let stop = record.verdict == "violated" || record.verdict == "error";
            out.push(record);
            if stop {
                break;
            }
        }
        out
    } else {
        let run = || {
            use rayon::prelude::*;
            jobs.par_iter()
                .map(|(st, job)| match job {
                    Job::Skip(r) => r.clone(),
                    Job::Run(p, m) => verify_statement(st, *p, *m, cfg),
                })
                .collect()
        };
        if cfg.jobs > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.jobs)
                .build()
                .expect("worker pool")
                .install(run)
        } else {
            run()
        }
    };

    let mut summary = Summary {
        total: records.len(),
        ..Summary::default()
    };
    for r in &records {
        match r.verdict {
            "holds" => summary.holds += 1,
            "violated" => summary.violated += 1,
            "not_applicable" => summary.not_applicable += 1,
            "error" => summary.errors += 1,
            other => unreachable!("verdict {}", other),
        }
        if r.oracle == "disagree" {
            summary.oracle_disagreements += 1;
        }
        if r.limit_check == "disagree" {
            summary.limit_disagreements += 1;
        }
        if r.verdict == "error" {
            if let Some(detail) = &r.detail {
                summary.notes.push(match r.m {
                    Some(m) => format!("{} p={} m={}: {}", r.id, r.p, m, detail),
                    None => format!("{} p={}: {}", r.id, r.p, detail),
                });
            }
        }
    }
    for st in &selected {
        if let Some(note) = st.note {
            if records.iter().any(|r| r.id == st.id) {
                summary.notes.push(format!("{}: {}", st.id, note));
            }
        }
    }
    if cfg.fail_fast && (summary.violated > 0 || summary.errors > 0) {
        summary.notes.push("stopped at the first failure".into());
    }

    Report {
        version: "1",
        config: cfg.clone(),
        records,
        summary,
    }
}
