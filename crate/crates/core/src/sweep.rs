//! Batch verification of the constructed values against the exact oracles
//! over a range of `n` or a grid of signatures.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_forms::all_formulas;
use crate::edge_class::classify;
use crate::error::{Error, Result};
use crate::family::{build_coloring, omega, validate};
use crate::lattice::build_graph_capped;
use crate::number::{Signature, MAX_COMPONENTS};
use crate::oracles::{
    chromatic_exact, edge_class_exact, max_clique_exact, OracleBudget, Outcome, Undecided,
};
use crate::report::{
    analyze, edge_class_agrees, AnalysisReport, AnalyzeOptions, Instance, VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    WeaklyPerfect,
    Formulas,
    EdgeClass,
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "weakly-perfect" => Ok(Check::WeaklyPerfect),
            "formulas" => Ok(Check::Formulas),
            "edge-class" => Ok(Check::EdgeClass),
            other => Err(Error::Parse(format!(
                "unknown check {other:?}; expected weakly-perfect, formulas or edge-class"
            ))),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::WeaklyPerfect => "weakly-perfect",
            Check::Formulas => "formulas",
            Check::EdgeClass => "edge-class",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepInstances {
    /// Every `n` in `2..=N`.
    UpTo(u64),
    /// Every signature with `1..=max_m` components and exponents in
    /// `1..=max_exp`.
    Signatures { max_m: usize, max_exp: u32 },
}

/// Parses `m<=4,exp<=3`. Either order, arbitrary whitespace, and `≤` are
/// accepted.
impl FromStr for SweepInstances {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `m<=M,exp<=E`, got {s:?}"));
        let (mut max_m, mut max_exp) = (None, None);
        for part in s.split(',') {
            let part = part.replace('≤', "<=");
            let (key, value) = part.split_once("<=").ok_or_else(bad)?;
            let value: u64 = value.trim().parse().map_err(|_| bad())?;
            let slot = match key.trim() {
                "m" => &mut max_m,
                "exp" => &mut max_exp,
                _ => return Err(bad()),
            };
            if slot.replace(value).is_some() {
                return Err(bad());
            }
        }
        let (Some(m), Some(e)) = (max_m, max_exp) else {
            return Err(bad());
        };
        if m == 0 || m > MAX_COMPONENTS as u64 {
            return Err(Error::Parse(format!(
                "m must be in 1..={MAX_COMPONENTS}, got {m}"
            )));
        }
        let max_exp = u32::try_from(e).ok().filter(|&e| e > 0).ok_or_else(|| {
            Error::Parse(format!("exp must be a positive 32-bit integer, got {e}"))
        })?;
        Ok(SweepInstances::Signatures {
            max_m: m as usize,
            max_exp,
        })
    }
}

impl fmt::Display for SweepInstances {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepInstances::UpTo(n) => write!(f, "n<={n}"),
            SweepInstances::Signatures { max_m, max_exp } => write!(f, "m<={max_m},exp<={max_exp}"),
        }
    }
}

impl SweepInstances {
    pub fn expand(&self) -> Vec<Instance> {
        match *self {
            SweepInstances::UpTo(n) => (2..=n).map(Instance::N).collect(),
            SweepInstances::Signatures { max_m, max_exp } => {
                let mut out = vec![];
                let mut current = vec![];
                nondecreasing(&mut current, 1, max_m, max_exp, &mut out);
                out
            }
        }
    }
}

fn nondecreasing(
    cur: &mut Vec<u32>,
    from: u32,
    max_m: usize,
    max_exp: u32,
    out: &mut Vec<Instance>,
) {
    if !cur.is_empty() {
        // signatures whose ideal count overflows are skipped
        if let Ok(s) = Signature::new(cur.clone()) {
            out.push(Instance::Signature(s));
        }
    }
    if cur.len() == max_m {
        return;
    }
    for e in from..=max_exp {
        cur.push(e);
        nondecreasing(cur, e, max_m, max_exp, out);
        cur.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub instances: SweepInstances,
    pub check: Check,
    pub clique_budget: OracleBudget,
    pub edge_budget: OracleBudget,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Undecided(Undecided),
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub instance: String,
    pub reason: String,
    /// The full report with oracle section, replayable through `analyze`.
    pub report: Option<AnalysisReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub version: String,
    pub instances: String,
    pub check: Check,
    pub total: usize,
    pub verified: usize,
    pub undecided: usize,
    pub failed: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

fn vertex_limit(sig: &Signature, budget: &OracleBudget) -> Option<Undecided> {
    let vertices = sig.vertex_count();
    (vertices > budget.max_vertices as u64).then(|| Undecided::TooManyVertices {
        vertices: usize::try_from(vertices).unwrap_or(usize::MAX),
        limit: budget.max_vertices,
    })
}

/// Runs one check on one instance.
pub fn check_instance(instance: &Instance, check: Check, config: &SweepConfig) -> Verdict {
    let sig = match instance.resolve() {
        Ok((_, s)) => s,
        Err(e) => return Verdict::Failed(e.to_string()),
    };
    match check {
        Check::WeaklyPerfect => weakly_perfect(&sig, &config.clique_budget),
        Check::Formulas => formulas(&sig, &config.clique_budget),
        Check::EdgeClass => edge_class(&sig, &config.edge_budget),
    }
}

macro_rules! decided {
    ($outcome:expr) => {
        match $outcome {
            Outcome::Decided(v) => v,
            Outcome::Undecided(u) => return Verdict::Undecided(u),
        }
    };
}

fn weakly_perfect(sig: &Signature, budget: &OracleBudget) -> Verdict {
    if let Some(u) = vertex_limit(sig, budget) {
        return Verdict::Undecided(u);
    }
    let graph = match build_graph_capped(sig, budget.max_vertices) {
        Ok(g) => g,
        Err(e) => return Verdict::Failed(e.to_string()),
    };
    let cert = match build_coloring(&graph) {
        Ok(c) => c,
        Err(e) => return Verdict::Failed(e.to_string()),
    };
    if !validate(&cert, &graph) {
        return Verdict::Failed("constructed certificate failed validation".into());
    }
    let adj = graph.adjacency();
    let clique = decided!(max_clique_exact(adj, budget));
    if clique.omega != cert.omega {
        return Verdict::Failed(format!(
            "exact omega {} vs constructed {}",
            clique.omega, cert.omega
        ));
    }
    let chi = decided!(chromatic_exact(adj, clique.omega, cert.chi, budget));
    if chi.chi != cert.chi || !adj.is_proper_coloring(&chi.colors) {
        return Verdict::Failed(format!("exact chi {} vs constructed {}", chi.chi, cert.chi));
    }
    Verdict::Verified
}

fn formulas(sig: &Signature, budget: &OracleBudget) -> Verdict {
    let value = omega(sig);
    for f in all_formulas(sig).iter().filter(|f| f.applicable) {
        if f.value != Some(value) {
            return Verdict::Failed(format!(
                "formula {} gives {:?}, construction {value}",
                f.name, f.value
            ));
        }
    }
    if let Some(u) = vertex_limit(sig, budget) {
        return Verdict::Undecided(u);
    }
    let graph = match build_graph_capped(sig, budget.max_vertices) {
        Ok(g) => g,
        Err(e) => return Verdict::Failed(e.to_string()),
    };
    let clique = decided!(max_clique_exact(graph.adjacency(), budget));
    if clique.omega as u64 != value {
        return Verdict::Failed(format!(
            "exact omega {} vs construction {value}",
            clique.omega
        ));
    }
    Verdict::Verified
}

fn edge_class(sig: &Signature, budget: &OracleBudget) -> Verdict {
    if let Some(u) = vertex_limit(sig, budget) {
        return Verdict::Undecided(u);
    }
    let graph = match build_graph_capped(sig, budget.max_vertices) {
        Ok(g) => g,
        Err(e) => return Verdict::Failed(e.to_string()),
    };
    let report = classify(sig);
    let exact = decided!(edge_class_exact(graph.adjacency(), budget));
    if !edge_class_agrees(&report, &exact) {
        return Verdict::Failed(format!(
            "classified {:?} with chi' = {}, exact search {:?} with chi' = {}",
            report.classification, report.chromatic_index, exact.class, exact.chromatic_index
        ));
    }
    Verdict::Verified
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    let instances = config.instances.expand();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let verdicts: Vec<Verdict> = pool.install(|| {
        instances
            .par_iter()
            .map(|inst| check_instance(inst, config.check, config))
            .collect()
    });

    let mut summary = SweepSummary {
        version: VERSION.to_owned(),
        instances: config.instances.to_string(),
        check: config.check,
        total: instances.len(),
        verified: 0,
        undecided: 0,
        failed: 0,
        failures: vec![],
    };
    let opts = AnalyzeOptions {
        oracle: true,
        clique_budget: config.clique_budget,
        edge_budget: config.edge_budget,
    };
    for (inst, verdict) in instances.iter().zip(verdicts) {
        match verdict {
            Verdict::Verified => summary.verified += 1,
            Verdict::Undecided(_) => summary.undecided += 1,
            Verdict::Failed(reason) => {
                summary.failed += 1;
                summary.failures.push(SweepFailure {
                    instance: inst.to_string(),
                    reason,
                    report: analyze(inst, &opts).ok(),
                });
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(instances: SweepInstances, check: Check) -> SweepConfig {
        SweepConfig {
            instances,
            check,
            clique_budget: OracleBudget::VERTEX_DEFAULT,
            edge_budget: OracleBudget::EDGE_DEFAULT,
            jobs: 2,
        }
    }

    #[test]
    fn parse_signature_grid() {
        let want = SweepInstances::Signatures {
            max_m: 4,
            max_exp: 3,
        };
        for s in ["m<=4,exp<=3", " exp <= 3 , m<=4 ", "m≤4,exp≤3"] {
            assert_eq!(s.parse::<SweepInstances>().unwrap(), want, "{s}");
        }
        for s in [
            "",
            "m<=4",
            "m<=4,m<=4",
            "m<=0,exp<=3",
            "m<=4,exp<=0",
            "m<=21,exp<=1",
            "k<=1,exp<=1",
            "m=4,exp=3",
        ] {
            assert!(s.parse::<SweepInstances>().is_err(), "{s}");
        }
        assert_eq!(want.to_string(), "m<=4,exp<=3");
    }

    #[test]
    fn grid_expansion_counts_multisets() {
        // multisets of size 1..=2 from {1,2,3}: 3 + 6
        let grid = SweepInstances::Signatures {
            max_m: 2,
            max_exp: 3,
        }
        .expand();
        assert_eq!(grid.len(), 9);
        assert_eq!(SweepInstances::UpTo(10).expand().len(), 9);
    }

    #[test]
    fn small_sweeps_pass() {
        let s = run_sweep(&config(SweepInstances::UpTo(200), Check::WeaklyPerfect)).unwrap();
        assert_eq!((s.total, s.failed), (199, 0));
        assert_eq!(s.verified + s.undecided, s.total);
        let s = run_sweep(&config("m<=3,exp<=3".parse().unwrap(), Check::Formulas)).unwrap();
        assert_eq!(s.failed, 0);
        let s = run_sweep(&config(SweepInstances::UpTo(100), Check::EdgeClass)).unwrap();
        assert_eq!(s.failed, 0);
        assert!(s.verified > 50);
    }

    #[test]
    fn results_are_ordered_and_deterministic() {
        let a = run_sweep(&config(SweepInstances::UpTo(60), Check::EdgeClass)).unwrap();
        let mut c = config(SweepInstances::UpTo(60), Check::EdgeClass);
        c.jobs = 1;
        assert_eq!(run_sweep(&c).unwrap(), a);
    }

    #[test]
    fn check_names_round_trip() {
        for c in [Check::WeaklyPerfect, Check::Formulas, Check::EdgeClass] {
            assert_eq!(c.to_string().parse::<Check>().unwrap(), c);
        }
        assert!("perfect".parse::<Check>().is_err());
    }
}
