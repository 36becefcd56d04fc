//! The four subcommands.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use leapfrog_core::ear::{build_ear_decomposition, find_nice_decomposition, lexbfs_dual_order, EarError};
use leapfrog_core::enumerator::{enumerate, EnumError, Enumeration, EnumerationOptions, Subcase};
use leapfrog_core::fullerene::{leapfrog, validate_fullerene, verify_two_factor, FullereneGraph};
use leapfrog_core::hamilton::{cycles_for_decomposition, dedup, HamiltonCycle};
use leapfrog_core::oracle::{enumerate_decompositions, enumerate_hamilton_cycles, HamiltonLimits, KindFilter};
use leapfrog_core::planar_map::{FaceId, PlanarMap};
use leapfrog_core::stable_tree::DecompositionKind;

use crate::args::{CertifyArgs, Cli, Command, ExportArgs, ExportWhat, Format, IoArgs, KindArg, OracleArgs, OracleMode};
use crate::input::{check_output, read_maps, write_output};
use crate::json::{AuditJson, CertifyReport, CycleJson, DecompositionJson, LeapfrogJson, MapJson, OracleReport};
use crate::{dot, exit, CliError};

pub fn dispatch(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Certify(a) => cmd_certify(a, cli.verbose),
        Command::Leapfrog(a) => cmd_leapfrog(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Export(a) => cmd_export(a),
    }
}

fn in_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.unwrap_or(0)).build();
    match pool {
        Ok(p) => p.install(f),
        Err(_) => f(),
    }
}

fn load(io: &IoArgs) -> Result<Vec<PlanarMap>, CliError> {
    let maps = read_maps(&io.input)?;
    check_output(io.out.as_deref())?;
    Ok(maps)
}

/// The most severe code is the one from the earliest pipeline stage.
fn combine(codes: impl IntoIterator<Item = u8>) -> u8 {
    codes.into_iter().filter(|&c| c != exit::OK).min().unwrap_or(exit::OK)
}

fn json_line<T: serde::Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string(value).expect("reports serialize"));
    out.push('\n');
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CertifyOptions {
    pub seed: Option<(u32, u32)>,
    pub materialize_tree: bool,
}

fn digest(cycles: &[HamiltonCycle]) -> String {
    let mut h = Sha256::new();
    for c in cycles {
        for &(a, b) in c.edges() {
            h.update(a.0.to_le_bytes());
            h.update(b.0.to_le_bytes());
        }
        h.update(u32::MAX.to_le_bytes());
    }
    hex::encode(h.finalize())
}

fn audit_json(r: &Enumeration) -> AuditJson {
    use leapfrog_core::enumerator::Finding as F;
    let a = &r.audit;
    AuditJson {
        propagation_steps: a.propagation_steps,
        finalizations: a.finalizations,
        leaves: a.leaves,
        branching_violations: a.count(|f| matches!(f, F::Branching { .. })),
        component_split_violations: a.count(|f| matches!(f, F::ComponentSplit { .. })),
        white_neighborhood_violations: a.count(|f| matches!(f, F::WhiteNeighborhood { .. })),
        white_formula_violations: a.count(|f| matches!(f, F::WhiteFormula { .. })),
        leaf_collisions: a.count(|f| matches!(f, F::LeafCollision { .. })),
        white_count_violations: a.count(|f| matches!(f, F::WhiteCount { .. })),
    }
}

/// Full pipeline on one graph. Returns the report and its exit code.
pub fn certify_graph(index: usize, map: PlanarMap, opts: &CertifyOptions) -> (CertifyReport, u8) {
    let mut report = CertifyReport {
        graph: index,
        n: map.vertex_count(),
        ..CertifyReport::default()
    };
    let g = match validate_fullerene(map) {
        Ok(g) => g,
        Err(e) => {
            report.error = Some(format!("not a fullerene: {e}"));
            return (report, exit::VALIDATION);
        }
    };
    let Some(k) = g.k() else {
        report.error = Some(EnumError::WrongResidue(g.n()).to_string());
        return (report, exit::WRONG_RESIDUE);
    };
    report.k = Some(k);
    report.bound = 1u128 << k;

    let ed = match opts.seed {
        Some((h, p)) => lexbfs_dual_order(&g, FaceId(h), FaceId(p)).and_then(|o| build_ear_decomposition(&g, &o)),
        None => find_nice_decomposition(&g),
    };
    let ed = match ed {
        Ok(ed) => ed,
        Err(e @ (EarError::NotHexagon(_) | EarError::NotPentagon(_) | EarError::NotAdjacent(..))) => {
            report.error = Some(format!("bad seed: {e}"));
            return (report, exit::VALIDATION);
        }
        Err(e) => {
            report.findings.push(format!("ear decomposition: {e}"));
            return (report, exit::VERIFICATION);
        }
    };
    let order = ed.source_order.faces();
    report.seed = Some([order[0].0, order[1].0]);
    report.ears = ed.ears.len();

    let options = EnumerationOptions {
        materialize_tree: opts.materialize_tree,
    };
    let r = match enumerate(&g, &ed, options) {
        Ok(r) => r,
        Err(e) => {
            report.findings.push(format!("enumeration: {e}"));
            return (report, exit::VERIFICATION);
        }
    };
    report.proper = r.count.proper_count;
    report.improper = r.count.improper_count;
    report.cycles = r.count.hamilton_cycle_count;
    report.audit = audit_json(&r);
    report.tree_nodes = r.tree.as_ref().map(|t| t.nodes.len());
    for f in &r.finalizations {
        let s = &mut report.subcases;
        *match f.subcase {
            Subcase::OnePair => &mut s.one_pair,
            Subcase::SingleComponent => &mut s.single_component,
            Subcase::FourOneOne => &mut s.four_one_one,
            Subcase::ThreeTwoOne => &mut s.three_two_one,
            Subcase::TwoTwoTwo => &mut s.two_two_two,
        } += 1;
    }
    report.findings.extend(r.audit.findings.iter().map(|f| format!("claim: {f:?}")));

    let lf = leapfrog(&g);
    if !verify_two_factor(&lf) {
        report.findings.push("face images of G are not a 2-factor of H".to_string());
    }
    let mut cycles = Vec::with_capacity(report.cycles);
    for (i, leaf) in r.leaves.iter().enumerate() {
        let d = &leaf.decomposition;
        if d.kind == DecompositionKind::Improper {
            report.unused_connectors += (d.graceful_hexagons.len() + d.graceful_vertices.len()).saturating_sub(2);
        }
        match cycles_for_decomposition(d, &lf) {
            Ok(cs) => cycles.extend(cs),
            Err(e) => report.findings.push(format!("leaf {i}: {e}")),
        }
    }
    let dd = dedup(&cycles);
    report.verified_cycles = dd.unique.len();
    report.collisions = dd.collisions.len();
    for c in &dd.collisions {
        report.findings.push(format!("cycle collision at positions {:?}", c.positions));
    }
    report.cycle_digest = digest(&dd.unique);
    report.bound_met = report.verified_cycles as u128 >= report.bound;
    if !report.bound_met {
        report.findings.push(format!(
            "{} verified cycles, fewer than 2^{k} = {}",
            report.verified_cycles, report.bound
        ));
    }
    let code = if report.findings.is_empty() { exit::OK } else { exit::VERIFICATION };
    (report, code)
}

/// Certify reports for every graph, in input order.
pub fn certify_all(maps: Vec<PlanarMap>, opts: &CertifyOptions, workers: Option<usize>) -> Vec<(CertifyReport, u8)> {
    in_pool(workers, || {
        maps.into_par_iter()
            .enumerate()
            .map(|(i, m)| certify_graph(i, m, opts))
            .collect()
    })
}

fn cmd_certify(a: &CertifyArgs, verbose: u8) -> Result<u8, CliError> {
    let maps = load(&a.io)?;
    let opts = CertifyOptions {
        seed: a.seed_hexagon.zip(a.seed_pentagon),
        materialize_tree: a.materialize_tree,
    };
    let results = certify_all(maps, &opts, a.io.workers);
    let mut out = String::new();
    for (report, code) in &results {
        json_line(&mut out, report);
        if verbose > 0 || *code != exit::OK {
            let status = match (&report.error, report.findings.first()) {
                (Some(e), _) => e.clone(),
                (None, Some(f)) => format!("{} finding(s), first: {f}", report.findings.len()),
                (None, None) => format!("{} verified cycles, bound {}", report.verified_cycles, report.bound),
            };
            eprintln!("graph {} (n = {}): {status}", report.graph, report.n);
        }
    }
    write_output(a.io.out.as_deref(), &out)?;
    Ok(combine(results.iter().map(|(_, c)| *c)))
}

fn fullerene(index: usize, map: PlanarMap) -> Result<FullereneGraph, CliError> {
    validate_fullerene(map).map_err(|e| CliError::Invalid {
        index,
        message: format!("not a fullerene: {e}"),
    })
}

fn cmd_leapfrog(a: &IoArgs) -> Result<u8, CliError> {
    let maps = load(a)?;
    let docs: Vec<Result<LeapfrogJson, CliError>> = in_pool(a.workers, || {
        maps.into_par_iter()
            .enumerate()
            .map(|(i, m)| {
                let g = fullerene(i, m)?;
                Ok(LeapfrogJson::new(i, g.map(), &leapfrog(&g)))
            })
            .collect()
    });
    let mut out = String::new();
    let mut codes = Vec::new();
    for d in docs {
        match d {
            Ok(doc) => json_line(&mut out, &doc),
            Err(e) => {
                eprintln!("leapfrog: {e}");
                codes.push(e.exit_code());
            }
        }
    }
    write_output(a.out.as_deref(), &out)?;
    Ok(combine(codes))
}

fn oracle_one(index: usize, map: PlanarMap, a: &OracleArgs) -> (OracleReport, u8) {
    let start = Instant::now();
    let mut report = OracleReport {
        instance: if a.leapfrog {
            format!("leapfrog of graph {index}")
        } else {
            format!("graph {index}")
        },
        mode: match a.mode {
            OracleMode::Hamilton => "hamilton",
            OracleMode::Decompositions => "decompositions",
        }
        .to_string(),
        count: 0,
        complete: false,
        elapsed_ms: 0,
        proper: None,
        improper: None,
        error: None,
    };
    let target = if a.leapfrog {
        match fullerene(index, map) {
            Ok(g) => leapfrog(&g).h,
            Err(e) => {
                report.error = Some(e.to_string());
                return (report, exit::VALIDATION);
            }
        }
    } else {
        map
    };
    let code = match a.mode {
        OracleMode::Hamilton => {
            let deadline = start + Duration::from_millis(a.time_budget_ms);
            let limits = HamiltonLimits {
                cap: Some(a.cap_cycles),
                collect: false,
            };
            let r = enumerate_hamilton_cycles(&target, limits, || Instant::now() >= deadline);
            report.count = r.count;
            report.complete = r.complete;
            exit::OK
        }
        OracleMode::Decompositions => {
            let filter = match a.kind {
                KindArg::All => KindFilter::All,
                KindArg::Proper => KindFilter::Proper,
                KindArg::Improper => KindFilter::Improper,
            };
            match enumerate_decompositions(&target, filter, a.max_vertices) {
                Ok(ds) => {
                    let proper = ds.iter().filter(|d| d.kind == DecompositionKind::Proper).count() as u64;
                    report.count = ds.len() as u64;
                    report.proper = Some(proper);
                    report.improper = Some(report.count - proper);
                    report.complete = true;
                    exit::OK
                }
                Err(e) => {
                    report.error = Some(e.to_string());
                    exit::VALIDATION
                }
            }
        }
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    (report, code)
}

fn cmd_oracle(a: &OracleArgs) -> Result<u8, CliError> {
    let maps = load(&a.io)?;
    let results: Vec<(OracleReport, u8)> = in_pool(a.io.workers, || {
        maps.into_par_iter()
            .enumerate()
            .map(|(i, m)| oracle_one(i, m, a))
            .collect()
    });
    let mut out = String::new();
    for (r, _) in &results {
        json_line(&mut out, r);
        if let Some(e) = &r.error {
            eprintln!("oracle: {}: {e}", r.instance);
        } else if !r.complete {
            eprintln!("warning: {}: search stopped early after {} results", r.instance, r.count);
        }
    }
    write_output(a.io.out.as_deref(), &out)?;
    Ok(combine(results.iter().map(|(_, c)| *c)))
}

/// Enumerator leaves of one graph, for export.
fn leaves_of(index: usize, map: PlanarMap) -> Result<(FullereneGraph, Enumeration), (CliError, u8)> {
    let g = fullerene(index, map).map_err(|e| (e, exit::VALIDATION))?;
    let fail = |code: u8, message: String| (CliError::Invalid { index, message }, code);
    let ed = find_nice_decomposition(&g).map_err(|e| fail(exit::VERIFICATION, e.to_string()))?;
    let r = enumerate(&g, &ed, EnumerationOptions::default()).map_err(|e| match e {
        EnumError::WrongResidue(_) => fail(exit::WRONG_RESIDUE, e.to_string()),
        _ => fail(exit::VERIFICATION, e.to_string()),
    })?;
    Ok((g, r))
}

fn select<T>(items: Vec<T>, index: Option<usize>) -> Result<Vec<(usize, T)>, CliError> {
    let len = items.len();
    let all = items.into_iter().enumerate();
    match index {
        None => Ok(all.collect()),
        Some(i) if i < len => Ok(all.filter(|(j, _)| *j == i).collect()),
        Some(i) => Err(CliError::Usage(format!("index {i} out of range, {len} available"))),
    }
}

fn export_one(i: usize, map: PlanarMap, a: &ExportArgs) -> Result<String, (CliError, u8)> {
    let mut out = String::new();
    let usage = |e: CliError| {
        let code = e.exit_code();
        (e, code)
    };
    match a.what {
        ExportWhat::Graph => match a.format {
            Format::Json => json_line(&mut out, &MapJson::from_map(&map)),
            Format::Dot => out.push_str(&dot::plain(&map, &format!("g{i}"))),
        },
        ExportWhat::Leapfrog => {
            let g = fullerene(i, map).map_err(|e| (e, exit::VALIDATION))?;
            let lf = leapfrog(&g);
            match a.format {
                Format::Json => json_line(&mut out, &LeapfrogJson::new(i, g.map(), &lf)),
                Format::Dot => out.push_str(&dot::plain(&lf.h, &format!("h{i}"))),
            }
        }
        ExportWhat::Decomposition => {
            let (g, r) = leaves_of(i, map)?;
            let ds: Vec<_> = r.leaves.into_iter().map(|l| l.decomposition).collect();
            for (j, d) in select(ds, a.index).map_err(usage)? {
                match a.format {
                    Format::Json => json_line(&mut out, &DecompositionJson::from(&d)),
                    Format::Dot => out.push_str(&dot::decomposition(g.map(), &format!("g{i}_d{j}"), &d)),
                }
            }
        }
        ExportWhat::Cycle => {
            let (g, r) = leaves_of(i, map)?;
            let lf = leapfrog(&g);
            let mut cycles = Vec::new();
            for leaf in &r.leaves {
                let cs = cycles_for_decomposition(&leaf.decomposition, &lf).map_err(|e| {
                    (
                        CliError::Invalid {
                            index: i,
                            message: e.to_string(),
                        },
                        exit::VERIFICATION,
                    )
                })?;
                cycles.extend(cs);
            }
            for (j, c) in select(cycles, a.index).map_err(usage)? {
                match a.format {
                    Format::Json => json_line(&mut out, &CycleJson::from(&c)),
                    Format::Dot => out.push_str(&dot::cycle(&lf.h, &format!("h{i}_c{j}"), &c)),
                }
            }
        }
    }
    Ok(out)
}

fn cmd_export(a: &ExportArgs) -> Result<u8, CliError> {
    let maps = load(&a.io)?;
    let parts: Vec<Result<String, (CliError, u8)>> = in_pool(a.io.workers, || {
        maps.into_par_iter()
            .enumerate()
            .map(|(i, m)| export_one(i, m, a))
            .collect()
    });
    let mut out = String::new();
    let mut codes = Vec::new();
    for p in parts {
        match p {
            Ok(s) => out.push_str(&s),
            Err((e, code)) => {
                eprintln!("export: {e}");
                codes.push(code);
            }
        }
    }
    write_output(a.io.out.as_deref(), &out)?;
    Ok(combine(codes))
}
