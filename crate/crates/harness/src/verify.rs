//! Runs one claim over a stream of graphs and collects what fails.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use roman_core::{emit_graph6, parse_graph6, Family, Graph};
use serde::Serialize;

use crate::claims::{check, ClaimId, Finding, FindingKind, Outcome};
use crate::enumerate::{check_order, graph_count};
use crate::error::HarnessError;

/// Masks per enumeration block. Fixed so that the split does not depend on
/// the worker count.
pub const BLOCK_SIZE: u64 = 4096;

/// Environment variable holding the worker count.
pub const WORKERS_VAR: &str = "ROMAN_WORKERS";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Enumerate {
        n: usize,
        #[serde(skip)]
        allow_large: bool,
    },
    Input {
        path: PathBuf,
    },
    Families {
        #[serde(serialize_with = "family_names")]
        members: Vec<Family>,
    },
}

fn family_names<S: serde::Serializer>(fs: &[Family], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(fs.iter().map(|f| f.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub diagnostic: String,
    pub kind: FindingKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub source: Source,
    pub graphs_scanned: u64,
    pub graphs_in_hypothesis: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Default)]
struct Partial {
    scanned: u64,
    in_hypothesis: u64,
    found: Vec<Counterexample>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.scanned += other.scanned;
        self.in_hypothesis += other.in_hypothesis;
        self.found.extend(other.found);
        self
    }
}

fn order_key(c: &Counterexample) -> (&str, FindingKind, &str) {
    (&c.graph6, c.kind, &c.diagnostic)
}

fn solver_error(graph6: String, e: impl std::fmt::Display) -> Counterexample {
    Counterexample {
        graph6,
        diagnostic: e.to_string(),
        kind: FindingKind::SolverError,
    }
}

/// Re-runs the claim on the graph6 encoding of a reported graph and keeps
/// only findings that reproduce.
fn reverify(id: ClaimId, graph6: &str, finding: &Finding) -> Counterexample {
    let again = parse_graph6(graph6).map_err(|e| e.to_string()).and_then(|h| {
        check(id, &h).map_err(|e| e.to_string())
    });
    match again {
        Ok(out) if out.findings().contains(finding) => Counterexample {
            graph6: graph6.to_string(),
            diagnostic: finding.diagnostic.clone(),
            kind: finding.kind,
        },
        Ok(_) => Counterexample {
            graph6: graph6.to_string(),
            diagnostic: format!("not reproduced after graph6 round trip: {}", finding.diagnostic),
            kind: FindingKind::PathDisagreement,
        },
        Err(e) => solver_error(graph6.to_string(), e),
    }
}

fn scan_graph(id: ClaimId, g: &Graph, acc: &mut Partial) {
    acc.scanned += 1;
    let graph6 = match emit_graph6(g) {
        Ok(s) => s,
        Err(e) => {
            acc.found.push(solver_error(format!("{g:?}"), e));
            return;
        }
    };
    match check(id, g) {
        Ok(Outcome::OutOfHypothesis) => {}
        Ok(Outcome::Checked(findings)) => {
            acc.in_hypothesis += 1;
            acc.found
                .extend(findings.iter().map(|f| reverify(id, &graph6, f)));
        }
        Err(e) => acc.found.push(solver_error(graph6, e)),
    }
}

/// Worker count from [`WORKERS_VAR`], else the available parallelism.
pub fn worker_count() -> Result<usize, HarnessError> {
    match std::env::var(WORKERS_VAR) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(k),
            _ => Err(HarnessError::Workers(s)),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |k| k.get())),
    }
}

fn scan_enumeration(id: ClaimId, n: usize, workers: usize) -> Result<Partial, HarnessError> {
    let total = graph_count(n) as u64;
    let blocks = total.div_ceil(BLOCK_SIZE);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let parts: Vec<Result<Partial, HarnessError>> = pool.install(|| {
        (0..blocks)
            .into_par_iter()
            .map(|b| {
                let mut acc = Partial::default();
                for mask in b * BLOCK_SIZE..((b + 1) * BLOCK_SIZE).min(total) {
                    scan_graph(id, &Graph::from_pair_mask(n, mask)?, &mut acc);
                }
                Ok(acc)
            })
            .collect()
    });
    let mut merged = Partial::default();
    for p in parts {
        merged = merged.merge(p?);
    }
    assert_eq!(merged.scanned, total, "enumeration count");
    Ok(merged)
}

fn scan_lines(id: ClaimId, text: &str) -> Partial {
    let mut acc = Partial::default();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line.starts_with(">>graph6<<") && line.len() == 10 {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => scan_graph(id, &g, &mut acc),
            Err(e) => {
                acc.scanned += 1;
                acc.found.push(solver_error(line.to_string(), e));
            }
        }
    }
    acc
}

/// Checks `id` on every graph of `source` using `workers` threads for
/// enumerations. The report does not depend on `workers`.
pub fn verify_claim_with(
    id: ClaimId,
    source: &Source,
    workers: usize,
) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    let mut part = match source {
        Source::Enumerate { n, allow_large } => {
            check_order(*n, *allow_large)?;
            scan_enumeration(id, *n, workers.max(1))?
        }
        Source::Input { path } => {
            let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
                path: path.clone(),
                source,
            })?;
            scan_lines(id, &text)
        }
        Source::Families { members } => {
            let mut acc = Partial::default();
            for f in members {
                scan_graph(id, &f.generate()?, &mut acc);
            }
            acc
        }
    };
    part.found.sort_by(|a, b| order_key(a).cmp(&order_key(b)));
    Ok(VerificationReport {
        claim: id,
        source: source.clone(),
        graphs_scanned: part.scanned,
        graphs_in_hypothesis: part.in_hypothesis,
        counterexamples: part.found,
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// [`verify_claim_with`] using [`worker_count`].
pub fn verify_claim(id: ClaimId, source: &Source) -> Result<VerificationReport, HarnessError> {
    verify_claim_with(id, source, worker_count()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(n: usize) -> Source {
        Source::Enumerate { n, allow_large: false }
    }

    #[test]
    fn worker_count_does_not_change_report() {
        for id in [ClaimId::GammaLe3Degree, ClaimId::CutvertexLemma] {
            let mut one = verify_claim_with(id, &enumerate(5), 1).unwrap();
            let mut four = verify_claim_with(id, &enumerate(5), 4).unwrap();
            one.wall_time_ms = None;
            four.wall_time_ms = None;
            assert_eq!(one, four);
            assert_eq!(one.graphs_scanned, 1024);
        }
    }

    #[test]
    fn empty_triple_is_the_degree_rule_counterexample() {
        let r = verify_claim_with(ClaimId::GammaLe3Degree, &enumerate(3), 2).unwrap();
        assert_eq!(r.graphs_scanned, 8);
        assert_eq!(r.graphs_in_hypothesis, 8);
        assert_eq!(r.counterexamples.len(), 1);
        assert_eq!(r.counterexamples[0].graph6, "B?");
    }

    #[test]
    fn families_source() {
        let members = vec![Family::Dn(6), Family::Dn(8)];
        let r = verify_claim_with(ClaimId::DnProperties, &Source::Families { members }, 1).unwrap();
        assert_eq!((r.graphs_scanned, r.graphs_in_hypothesis), (2, 2));
        assert!(r.passed());
    }

    #[test]
    fn bad_lines_become_solver_errors() {
        let p = scan_lines(ClaimId::GammaLe3Degree, ">>graph6<<\nDhc\n\nnot graph6\n");
        assert_eq!(p.scanned, 2);
        assert_eq!(p.found.len(), 1);
        assert_eq!(p.found[0].kind, FindingKind::SolverError);
    }

    #[test]
    fn json_field_order() {
        let r = VerificationReport {
            claim: ClaimId::HalfBound,
            source: enumerate(3),
            graphs_scanned: 8,
            graphs_in_hypothesis: 0,
            counterexamples: vec![],
            wall_time_ms: None,
        };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"claim":"half-bound","source":{"enumerate":{"n":3}},"graphs_scanned":8,"graphs_in_hypothesis":0,"counterexamples":[]}"#
        );
    }
}
