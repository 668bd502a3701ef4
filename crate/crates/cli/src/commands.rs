use anyhow::anyhow;
use serde::Serialize;

use polyloc::experiments::{run_table1, run_table2, SetSpec, Table1Stats, Table2Stats};
use polyloc::localize::{bound, matrix_pellet, pellet_classic, tgp, tgp_enhance_a2, tmgp};
use polyloc::oracle::all_roots_with_tol;
use polyloc::{BoundMethod, BoundResult, IsolationCase, IsolationReport, Polynomial, RootSet};

use crate::{BoundArg, CliResult, Failure, IsolateArg};

/// Bounds may undercut the oracle by this relative amount.
const BOUND_SLACK: f64 = 1e-9;

#[derive(Serialize)]
struct OracleSummary {
    max_modulus: f64,
    min_modulus: f64,
    max_residual: f64,
    converged: bool,
}

impl OracleSummary {
    fn of(rs: &RootSet) -> Self {
        OracleSummary {
            max_modulus: rs.max_modulus(),
            min_modulus: rs.min_modulus(),
            max_residual: rs.max_residual(),
            converged: rs.converged,
        }
    }
}

#[derive(Serialize)]
struct BoundsOutput {
    degree: usize,
    lower: bool,
    bounds: Vec<BoundResult>,
    oracle: OracleSummary,
}

fn to_json<T: Serialize>(v: &T) -> CliResult<String> {
    serde_json::to_string_pretty(v).map_err(|e| Failure::Internal(e.into()))
}

pub fn bounds(p: &Polynomial, method: BoundArg, lower: bool, tol: f64) -> CliResult<String> {
    let methods: Vec<BoundMethod> = match method {
        BoundArg::Cauchy => vec![BoundMethod::Cauchy],
        BoundArg::MatrixCauchy => vec![BoundMethod::MatrixCauchy],
        BoundArg::TgcA => vec![BoundMethod::TgcA],
        BoundArg::TgcB => vec![BoundMethod::TgcB],
        BoundArg::All => BoundMethod::ALL.to_vec(),
    };
    let results = methods.into_iter().map(|m| bound(p, m, lower)).collect::<Result<Vec<_>, _>>()?;
    let rs = all_roots_with_tol(p, tol);
    for r in &results {
        let ok = if lower {
            r.bound <= rs.min_modulus() * (1.0 + BOUND_SLACK)
        } else {
            r.bound >= rs.max_modulus() * (1.0 - BOUND_SLACK)
        };
        if !ok {
            return Err(Failure::Internal(anyhow!(
                "{} bound {} contradicts the oracle",
                r.method.name(),
                r.bound
            )));
        }
    }
    to_json(&BoundsOutput { degree: p.degree(), lower, bounds: results, oracle: OracleSummary::of(&rs) })
}

#[derive(Serialize)]
struct Entry {
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<IsolationReport>,
    /// Claim counts with the zero added for odd degree removed.
    #[serde(skip_serializing_if = "Option::is_none")]
    counts_for_original: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

impl Entry {
    fn report(method: &'static str, k: Option<usize>, r: IsolationReport) -> Self {
        let counts = r.is_success().then(|| r.counts_for_original());
        Entry { method, k, report: Some(r), counts_for_original: counts, error: None }
    }

    fn error(method: &'static str, k: Option<usize>, e: polyloc::Error) -> Self {
        Entry { method, k, report: None, counts_for_original: None, error: Some(e.to_string()) }
    }
}

#[derive(Serialize)]
struct IsolateOutput {
    degree: usize,
    entries: Vec<Entry>,
    oracle: OracleSummary,
}

/// Runs a Pellet method at `k`, or at every index when `k` is `None`
/// (keeping only the successes).
fn pellet_entries(
    name: &'static str,
    k: Option<usize>,
    max: usize,
    f: impl Fn(usize) -> polyloc::Result<Option<IsolationReport>>,
) -> CliResult<Vec<Entry>> {
    if let Some(k) = k {
        let entry = match f(k) {
            Ok(Some(r)) => Entry::report(name, Some(k), r),
            Ok(None) => Entry { method: name, k: Some(k), report: None, counts_for_original: None, error: None },
            Err(e @ polyloc::Error::InvalidIndex { .. }) => return Err(e.into()),
            Err(e) => Entry::error(name, Some(k), e),
        };
        return Ok(vec![entry]);
    }
    Ok((1..=max)
        .filter_map(|k| match f(k) {
            Ok(Some(r)) => Some(Entry::report(name, Some(k), r)),
            _ => None,
        })
        .collect())
}

pub fn isolate(p: &Polynomial, method: IsolateArg, enhance: bool, k: Option<usize>, tol: f64) -> CliResult<String> {
    let pp = p.prepare_even()?;
    let all = method == IsolateArg::All;
    let mut entries = Vec::new();
    if all || method == IsolateArg::Pellet {
        entries.extend(pellet_entries("pellet", k, p.degree() - 1, |k| pellet_classic(p, k))?);
    }
    if all || method == IsolateArg::MatrixPellet {
        entries.extend(pellet_entries("matrix-pellet", k, pp.m() - 1, |k| matrix_pellet(&pp, k))?);
    }
    if all || method == IsolateArg::Tgp {
        let r = tgp(&pp);
        let enhanced = (enhance && r.case == IsolationCase::A2Second).then(|| tgp_enhance_a2(&pp, &r));
        entries.push(Entry::report("tgp", None, r));
        match enhanced {
            Some(Ok(e)) => entries.push(Entry::report("tgp-enhanced", None, e)),
            Some(Err(e)) => return Err(Failure::Internal(e.into())),
            None => {}
        }
    }
    if all || method == IsolateArg::Tmgp {
        entries.push(match tmgp(&pp) {
            Ok(r) => Entry::report("tmgp", None, r),
            Err(e) => Entry::error("tmgp", None, e),
        });
    }

    let rs = all_roots_with_tol(p, tol);
    for e in &entries {
        if let Some(r) = &e.report {
            r.check_against(&rs).map_err(|err| Failure::Internal(anyhow!("{}: {err}", e.method)))?;
        }
    }
    to_json(&IsolateOutput { degree: p.degree(), entries, oracle: OracleSummary::of(&rs) })
}

#[derive(Serialize)]
struct BenchOutput {
    table1: Table1Stats,
    table2: Table2Stats,
}

pub fn bench(set: u8, count: usize, seed: u64, table: Option<u8>) -> CliResult<String> {
    let spec = SetSpec::standard(set).ok_or_else(|| Failure::Input(anyhow!("unknown set {set}")))?;
    match table {
        Some(1) => to_json(&run_table1(&spec, seed, count)?),
        Some(_) => to_json(&run_table2(&spec, seed, count)?),
        None => to_json(&BenchOutput {
            table1: run_table1(&spec, seed, count)?,
            table2: run_table2(&spec, seed, count)?,
        }),
    }
}
