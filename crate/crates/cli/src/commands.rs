use std::io::Write;
use std::path::Path;

use indigraph_core::analysis::{analyze, AnalysisOptions, GraphReport, HamiltonResult, PlanarityCertificate};
use indigraph_core::context::ContextOptions;
use indigraph_core::indigraph::{build_swap_graph, DEFAULT_EDGE_BUDGET};
use indigraph_core::verify::{run_suite, CheckId, GroupSource, Limits, Status};
use indigraph_core::{Error, FiniteGroup, GraphKind, GroupContext, IndependenceGraph, Recipe};

use crate::args::{AnalyzeArgs, Format, GraphArgs, GroupArgs, ImportArgs, Kind, VerifyArgs};
use crate::cayley::{import_cayley, write_cayley};
use crate::catalog_file::load_catalog;
use crate::error::{CliError, CliResult};
use crate::export::{export_dot, JsonGraph};

pub fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e)),
    }
}

/// `@file`, a catalog name, or a recipe, in that order.
pub fn resolve_group(spec: &str, catalog: &str, max_order: usize) -> CliResult<(String, FiniteGroup)> {
    if let Some(path) = spec.strip_prefix('@') {
        let path = Path::new(path);
        let g = import_cayley(path)?;
        if g.order() > max_order {
            return Err(Error::OrderTooLarge {
                order: g.order(),
                cap: max_order,
            }
            .into());
        }
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        return Ok((name, g));
    }
    let cat = load_catalog(catalog)?;
    if let Some(e) = cat.get(spec) {
        return Ok((e.name.clone(), e.build(max_order)?));
    }
    Ok((spec.to_string(), Recipe::parse(spec)?.build(max_order)?))
}

fn context(args: &GroupArgs) -> CliResult<GroupContext> {
    let (name, group) = resolve_group(&args.group, &args.catalog, args.max_order)?;
    Ok(GroupContext::with_options(
        name,
        group,
        ContextOptions {
            node_budget: args.budget_nodes,
            ..ContextOptions::default()
        },
    ))
}

fn build_graph(ctx: &GroupContext, args: &GroupArgs) -> CliResult<IndependenceGraph> {
    let kind = match (args.kind, args.u) {
        (Kind::Full, None) => GraphKind::Full,
        (Kind::Full, Some(_)) => return Err(CliError::Usage("--u applies only to --kind rank or swap".into())),
        (Kind::Rank, Some(u)) => GraphKind::Rank(u),
        (Kind::Rank, None) => return Err(CliError::Usage("--kind rank needs --u <U>".into())),
        (Kind::Swap, u) => {
            let d = match u {
                Some(d) => d,
                None => ctx.d()?,
            };
            let mut g = build_swap_graph(ctx.group(), ctx.lattice()?, d, args.budget_tuples, DEFAULT_EDGE_BUDGET)?;
            g.group = ctx.name().to_string();
            return Ok(g);
        }
    };
    Ok(ctx.graph(kind, args.induced)?)
}

pub fn graph(args: &GraphArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = match (args.format, &args.out) {
        (Some(Format::Dot | Format::Json), _) => args.format.expect("matched"),
        (Some(f), _) => return Err(CliError::Usage(format!("graph output is dot or json, not {f:?}").to_lowercase())),
        (None, Some(p)) if p.extension().is_some_and(|e| e == "json") => Format::Json,
        (None, _) => Format::Dot,
    };
    let ctx = context(&args.group)?;
    let ig = build_graph(&ctx, &args.group)?;
    let text = match format {
        Format::Json => JsonGraph::from_graph(&ig, ctx.group()).to_json(),
        _ => export_dot(&ig, ctx.group(), args.classes.then(|| ctx.classes())),
    };
    emit(out, args.out.as_deref(), &text)?;
    Ok(0)
}

fn hamilton_word(h: &Option<HamiltonResult>) -> &'static str {
    match h {
        None => "n/a",
        Some(HamiltonResult::Yes(_)) => "yes",
        Some(HamiltonResult::No) => "no",
        Some(HamiltonResult::Unknown) => "unknown",
    }
}

pub fn report_text(r: &GraphReport) -> String {
    let cert = match &r.planarity {
        PlanarityCertificate::Embedding { .. } => "embedding".to_string(),
        PlanarityCertificate::Kuratowski(k) => format!("{:?}-subdivision", k.kind),
    };
    let parts = match &r.multipartite {
        Some(p) => format!("{{{}}}", p.iter().map(usize::to_string).collect::<Vec<_>>().join(",")),
        None => "none".to_string(),
    };
    let mut s = format!(
        "group={}\nkind={} induced={}\nvertices={} edges={}\ncomponents={}\nplanar={} certificate={cert}\nomega={} alpha={}\nhamiltonian={}\nparts {parts}\n",
        r.group,
        r.kind,
        r.induced,
        r.vertex_count,
        r.edge_count,
        r.components.len(),
        r.planar,
        r.clique_number,
        r.independence_number,
        hamilton_word(&r.hamiltonian),
    );
    // all-singleton classes would just repeat the degree list
    if let Some(cd) = r.class_degrees.as_ref().filter(|cd| cd.iter().any(|c| c.size > 1)) {
        let row: Vec<String> = cd.iter().map(|c| format!("{}:{}:{}", c.representative, c.size, c.degree)).collect();
        s.push_str(&format!("class_degrees {}\n", row.join(" ")));
    }
    s
}

pub fn analyze_cmd(args: &AnalyzeArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = args.format.unwrap_or(Format::Text);
    if !matches!(format, Format::Text | Format::Json) {
        return Err(CliError::Usage("analyze output is text or json".into()));
    }
    let ctx = context(&args.group)?;
    let ig = build_graph(&ctx, &args.group)?;
    let opts = AnalysisOptions {
        clique_budget: args.budget_clique,
        hamilton_budget: args.budget_hamilton,
    };
    let r = analyze(&ig, Some(ctx.classes()), &opts)?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
        _ => report_text(&r),
    };
    emit(out, args.out.as_deref(), &text)?;
    Ok(0)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let checks = CheckId::parse_list(&args.suite).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut catalog = load_catalog(&args.catalog)?;
    if let Some(names) = &args.groups {
        let names: Vec<&str> = names.split(',').map(str::trim).collect();
        catalog = catalog.select(&names)?;
    }
    let defaults = Limits::default();
    let limits = Limits {
        max_order: args.max_order,
        cyclic_max_order: args.cyclic_max_order,
        probe_max_order: args.probe_max_order,
        node_budget: args.budget_nodes,
        tuple_budget: args.budget_tuples,
        seed: args.seed.unwrap_or(defaults.seed),
        ..defaults
    };
    let mut report = run_suite(&catalog, &checks, &limits);
    if args.no_timing {
        report.strip_timing();
    }
    if let Some(path) = &args.report {
        let csv = match args.format {
            Some(Format::Csv) => true,
            Some(Format::Json) => false,
            Some(f) => return Err(CliError::Usage(format!("report format is json or csv, not {f:?}").to_lowercase())),
            None => path.extension().is_some_and(|e| e == "csv"),
        };
        let text = if csv { report.to_csv() } else { report.to_json() + "\n" };
        emit(out, (path != Path::new("-")).then_some(path.as_path()), &text)?;
    }
    // keep stdout parseable when the report is written there
    let summary_to: &mut dyn Write = if args.report.as_deref() == Some(Path::new("-")) { err } else { out };
    let mut summary = format!("entries={}", report.entries.len());
    for s in [
        Status::Pass,
        Status::Fail,
        Status::SkippedNotApplicable,
        Status::SkippedBudget,
        Status::Observation,
    ] {
        summary.push_str(&format!(" {}={}", s.as_str(), report.count(s)));
    }
    summary.push('\n');
    for e in report.failures() {
        summary.push_str(&format!("fail {} {}\n", e.group, e.check));
    }
    for e in report.entries.iter().filter(|e| e.status == Status::SkippedBudget) {
        summary.push_str(&format!("skipped-budget {} {}\n", e.group, e.check));
    }
    emit(summary_to, None, &summary)?;
    Ok(if report.has_failures() { 1 } else { 0 })
}

pub fn catalog_list(catalog: &str, max_order: Option<usize>, out: &mut dyn Write) -> CliResult<i32> {
    let cat = load_catalog(catalog)?;
    let mut text = String::new();
    for e in cat.entries() {
        if max_order.is_some_and(|m| e.order() > m) {
            continue;
        }
        let source = match &e.source {
            GroupSource::Recipe(r) => r.to_string(),
            GroupSource::Table(_) => "table".to_string(),
        };
        text.push_str(&format!("{}\t{}\t{}\n", e.name, e.order(), source));
    }
    emit(out, None, &text)?;
    Ok(0)
}

pub fn import(args: &ImportArgs, out: &mut dyn Write) -> CliResult<i32> {
    let g = import_cayley(&args.file)?;
    let name = args.file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let ctx = GroupContext::with_options(
        name.clone(),
        g,
        ContextOptions {
            node_budget: args.budget_nodes,
            ..ContextOptions::default()
        },
    );
    let f = ctx.flags();
    let text = format!(
        "group={name}\norder={}\nabelian={} cyclic={} nilpotent={} soluble={}\nd={} m={}\n",
        ctx.order(),
        f.is_abelian,
        f.is_cyclic,
        f.is_nilpotent,
        f.is_soluble,
        ctx.d()?,
        ctx.m()?,
    );
    if let Some(p) = &args.out {
        write_file(p, &write_cayley(ctx.group()))?;
    }
    emit(out, None, &text)?;
    Ok(0)
}
