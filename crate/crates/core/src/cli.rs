//! Command-line front end: `schubert <command> ...`.
//!
//! Exit codes: 0 on success, 1 for bad input, 2 when the request is outside
//! what the engine covers (unsupported kind or degeneration, enumeration cap).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chow::{is_zero_product, pairing, product_indices, ChowClass};
use crate::error::{Error, Result};
use crate::index::{
    default_cap, dimension, dual, enumerate_indices, parse_index, parse_index_unchecked,
    parse_space, validate, Schubert, SpaceKind,
};
use crate::multirigidity::{
    gamma_bottom, gamma_mid, gamma_top, multirigid_report, og_pushforward_leading, IndexFamily,
};
use crate::projections::{fiber_class_mid, fiber_class_orth, pushforward};
use crate::restriction::{expand, og_to_grass, parse_sequence, schubert_to_sequence, Expansion};
use crate::rigidity::{parse_selector, rigid_class, RefVerdict, RelationMode, RigidityVerdict, Side, SubIndexRef};
use crate::selftest::{checks, run_checks, Scope};

#[derive(Parser, Debug)]
#[command(name = "schubert", version, about = "Rigidity of Schubert classes")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use the smaller block label as the level bound in the link relations.
    #[arg(long, global = true)]
    paper_literal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an index literal against every invariant.
    Validate { index: String },
    /// Dimension of a type A Schubert variety.
    Dim { index: String },
    /// Poincare dual of a type A index.
    Dual { index: String },
    /// Image under the t-th projection.
    Push {
        index: String,
        #[arg(long)]
        t: u32,
    },
    /// Class of a general fiber of the t-th projection.
    Fiber {
        index: String,
        #[arg(long)]
        t: u32,
    },
    /// List essential sub-indices.
    Essential { index: String },
    /// Rigidity verdict for the class, or one sub-index with --sub.
    Rigid {
        index: String,
        /// Sub-index selector such as a2 or b1.
        #[arg(long)]
        sub: Option<String>,
    },
    /// Multi-rigidity for G(k,n) and OG(k,n) indices.
    Multirigid {
        index: String,
        #[arg(long)]
        sub: Option<String>,
    },
    /// Common-span values for a sum of Grassmannian classes.
    Gamma {
        /// Position for the middle criterion.
        #[arg(long)]
        i: Option<u32>,
        /// A summand as coeff:index, repeatable.
        #[arg(long = "term", required = true)]
        terms: Vec<String>,
    },
    /// Product and pairing of two Grassmannian classes.
    Product { left: String, right: String },
    /// Degenerate a restriction sequence, or an OG class with the flags below.
    Expand {
        input: String,
        /// Read the input as an OG index and expand its ladder.
        #[arg(long, conflicts_with = "to_grass")]
        from_schubert: bool,
        /// Push an OG index forward to G(k,n).
        #[arg(long)]
        to_grass: bool,
        /// Emit the degeneration steps as JSON lines.
        #[arg(long)]
        trace: bool,
    },
    /// Classify every index of a space.
    Census {
        space: String,
        /// Write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write one CSV row per class to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the built-in regression checks.
    Selftest {
        #[arg(long, value_enum, default_value = "quick")]
        scope: ScopeArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScopeArg {
    Quick,
    Full,
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, code: 0 }
    }
}

/// Runs the CLI on `args` (program name first), writing results to `out`
/// and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{}", e);
            return code;
        }
    };
    let mode = if cli.paper_literal {
        RelationMode::PaperLiteral
    } else {
        RelationMode::Max
    };
    match dispatch(&cli, mode, out) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).unwrap_or_default())
            } else {
                writeln!(out, "{}", o.text)
            };
            o.code
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(err, "{}", error_json(&e));
            } else {
                let _ = writeln!(err, "error: {}", e);
            }
            e.exit_code()
        }
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut v = json!({
        "kind": e.kind(),
        "message": e.to_string(),
        "location": e.location(),
    });
    match e {
        Error::Invalid(list) => {
            v["errors"] = list
                .iter()
                .map(|x| json!({"rule": x.rule, "message": x.message}))
                .collect();
        }
        Error::UnsupportedDegeneration { state, trace } => {
            v["state"] = json!(state);
            v["trace"] = serde_json::to_value(trace).unwrap_or(Value::Null);
        }
        _ => {}
    }
    json!({ "error": v })
}

/// The stable JSON shape of an index.
pub fn index_json(s: &Schubert) -> Value {
    let mut v = json!({
        "space": s.space.to_string(),
        "index": s.index.to_string(),
        "a": s.index.a_values(),
        "alpha": s.index.a_blocks(),
    });
    if s.index.is_pair() {
        v["b"] = json!(s.index.b_values());
        v["beta"] = json!(s.index.b_blocks());
    }
    v
}

fn dispatch(cli: &Cli, mode: RelationMode, out: &mut dyn Write) -> Result<Output> {
    match &cli.command {
        Command::Validate { index } => cmd_validate(index),
        Command::Dim { index } => {
            let s = parse_index(index)?;
            let d = dimension(&s)?;
            Ok(Output::ok(d.to_string(), json!({"index": index_json(&s), "dimension": d})))
        }
        Command::Dual { index } => {
            let s = parse_index(index)?;
            let d = dual(&s)?;
            Ok(Output::ok(
                d.to_string(),
                json!({"index": index_json(&s), "dual": index_json(&d)}),
            ))
        }
        Command::Push { index, t } => {
            let s = parse_index(index)?;
            let p = pushforward(&s, *t)?;
            Ok(Output::ok(
                p.to_string(),
                json!({"index": index_json(&s), "t": t, "image": index_json(&p)}),
            ))
        }
        Command::Fiber { index, t } => {
            let s = parse_index(index)?;
            let f = match s.space.kind {
                SpaceKind::Flag => fiber_class_mid(&s, *t)?,
                SpaceKind::OrthFlag => fiber_class_orth(&s, *t)?,
                _ => {
                    return Err(Error::UnsupportedKind(format!(
                        "fiber classes need an F or OF index, got {}",
                        s.space
                    )))
                }
            };
            Ok(Output::ok(
                f.to_string(),
                json!({"index": index_json(&s), "t": t, "fiber": index_json(&f)}),
            ))
        }
        Command::Essential { index } => {
            let s = parse_index(index)?;
            let v = rigid_class(&s, mode);
            let ess: Vec<SubIndexRef> = v.essential_refs();
            let text = ess.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ");
            Ok(Output::ok(
                text,
                json!({
                    "index": index_json(&s),
                    "essential": ess,
                    "refs": v.refs.iter().map(|r| json!({"sub": r.sub, "essential": r.essential})).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Rigid { index, sub } => cmd_rigid(index, sub.as_deref(), mode),
        Command::Multirigid { index, sub } => cmd_multirigid(index, sub.as_deref()),
        Command::Gamma { i, terms } => cmd_gamma(*i, terms),
        Command::Product { left, right } => {
            let x = parse_index(left)?;
            let y = parse_index(right)?;
            let class = product_indices(&x, &y)?;
            let zero = is_zero_product(&x, &y)?;
            let p = pairing(&x, &y)?;
            Ok(Output::ok(
                class.to_string(),
                json!({
                    "left": index_json(&x),
                    "right": index_json(&y),
                    "zero": zero,
                    "pairing": p.value,
                    "terms": class_terms(&class),
                    "class": class.to_string(),
                }),
            ))
        }
        Command::Expand {
            input,
            from_schubert,
            to_grass,
            trace,
        } => cmd_expand(input, *from_schubert, *to_grass, *trace, out),
        Command::Census { space, out: path, csv } => {
            cmd_census(space, path.as_ref(), csv.as_ref(), cli.paper_literal)
        }
        Command::Selftest { scope } => {
            let scope = match scope {
                ScopeArg::Quick => Scope::Quick,
                ScopeArg::Full => Scope::Full,
            };
            let results = run_checks(&checks(), scope);
            let failed = results.iter().filter(|r| !r.passed).count();
            let text = results
                .iter()
                .map(|r| match &r.detail {
                    None => format!("PASS {}", r.name),
                    Some(d) => format!("FAIL {}: {}", r.name, d),
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output {
                text,
                json: json!({"checks": results, "failed": failed}),
                code: if failed == 0 { 0 } else { 1 },
            })
        }
    }
}

fn cmd_validate(text: &str) -> Result<Output> {
    let s = parse_index_unchecked(text)?;
    let errors = validate(&s.space, &s.index);
    let mut v = index_json(&s);
    v["valid"] = json!(errors.is_empty());
    v["errors"] = errors
        .iter()
        .map(|x| json!({"rule": x.rule, "message": x.message}))
        .collect();
    let text = if errors.is_empty() {
        format!("valid: {}", s)
    } else {
        let lines: Vec<String> = errors.iter().map(|e| format!("  {}", e)).collect();
        format!("invalid: {}\n{}", s, lines.join("\n"))
    };
    Ok(Output {
        text,
        json: v,
        code: if errors.is_empty() { 0 } else { 1 },
    })
}

fn describe(r: &RefVerdict) -> String {
    let rigid = match (r.essential, r.rigid) {
        (false, _) => "-",
        (true, Some(true)) => "rigid",
        (true, Some(false)) => "not rigid",
        (true, None) => "undecided",
    };
    let witness = match &r.witness {
        None => String::new(),
        Some(w) => format!("  {}", serde_json::to_string(w).unwrap_or_default()),
    };
    format!(
        "  {:<10} {:<13} {}{}",
        r.sub.to_string(),
        if r.essential { "essential" } else { "inessential" },
        rigid,
        witness
    )
}

fn verdict_word(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "rigid",
        Some(false) => "not rigid",
        None => "undecided",
    }
}

pub fn verdict_json(s: &Schubert, v: &RigidityVerdict) -> Value {
    let ess = v.essential_refs();
    let rigid: Vec<SubIndexRef> = v
        .refs
        .iter()
        .filter(|r| r.essential && r.rigid == Some(true))
        .map(|r| r.sub)
        .collect();
    let witness: Vec<Value> = v
        .refs
        .iter()
        .filter_map(|r| r.witness.as_ref().map(|w| json!({"sub": r.sub, "witness": w})))
        .collect();
    json!({
        "index": index_json(s),
        "mode": v.mode,
        "class_rigid": v.class_rigid,
        "essential": ess,
        "rigid": rigid,
        "witness": witness,
        "refs": v.refs,
        "relation": v.relation,
        "implication": v.implication,
    })
}

fn cmd_rigid(text: &str, sub: Option<&str>, mode: RelationMode) -> Result<Output> {
    let s = parse_index(text)?;
    if let Some(sel) = sub {
        let (side, pos) = parse_selector(sel)?;
        let r = crate::rigidity::rigid_subindex(&s, side, pos, mode)?;
        return Ok(Output::ok(
            describe(&r).trim().to_string(),
            json!({"index": index_json(&s), "mode": mode, "sub": r}),
        ));
    }
    let v = rigid_class(&s, mode);
    let mut lines = vec![s.to_string()];
    lines.extend(v.refs.iter().map(describe));
    if let Some(rel) = &v.relation {
        let edges: Vec<String> = rel
            .edges
            .iter()
            .map(|e| format!("{} -> {}", e.from, e.to))
            .collect();
        lines.push(format!(
            "relation: {} [{}]",
            if rel.totally_ordered { "totally ordered" } else { "not totally ordered" },
            edges.join(", ")
        ));
        if let Some(d) = &rel.discrepancy {
            lines.push(format!("note: {}", d));
        }
    }
    lines.push(format!("class: {}", verdict_word(v.class_rigid)));
    Ok(Output::ok(lines.join("\n"), verdict_json(&s, &v)))
}

fn cmd_multirigid(text: &str, sub: Option<&str>) -> Result<Output> {
    let s = parse_index(text)?;
    let report = multirigid_report(&s)?;
    if let Some(sel) = sub {
        let (side, pos) = parse_selector(sel)?;
        let r = report
            .refs
            .iter()
            .find(|r| r.sub.side == side && r.sub.position == pos)
            .ok_or_else(|| Error::InvalidArgument(format!("no sub-index {}", sel)))?;
        if !r.essential {
            return Err(Error::NotEssential(r.sub.to_string()));
        }
        return Ok(Output::ok(
            format!("{} {}", r.sub, if r.multirigid { "multi-rigid" } else { "not multi-rigid" }),
            json!({"index": index_json(&s), "sub": r}),
        ));
    }
    let mut lines = vec![s.to_string()];
    for r in &report.refs {
        let mut line = format!(
            "  {:<10} {:<13} {}",
            r.sub.to_string(),
            if r.essential { "essential" } else { "inessential" },
            if !r.essential {
                "-"
            } else if r.multirigid {
                "multi-rigid"
            } else {
                "not multi-rigid"
            }
        );
        if let Some(h) = r.hypothesis.as_ref().filter(|h| !h.holds()) {
            let js: Vec<String> = h.failures.iter().map(|f| format!("b{}", f.j)).collect();
            line.push_str(&format!("  (count hypothesis fails at {})", js.join(", ")));
        }
        lines.push(line);
    }
    lines.push(format!(
        "class: {}",
        if report.class_multirigid { "multi-rigid" } else { "not multi-rigid" }
    ));
    let mut v = json!({
        "index": index_json(&s),
        "refs": report.refs,
        "class_multirigid": report.class_multirigid,
    });
    if s.space.kind == SpaceKind::OrthGrass {
        let leading: Vec<Value> = report
            .refs
            .iter()
            .filter(|r| r.sub.side == Side::A && r.essential)
            .filter_map(|r| og_pushforward_leading(&s, r.sub.position).ok())
            .map(|l| json!(l))
            .collect();
        v["leading"] = json!(leading);
    }
    Ok(Output::ok(lines.join("\n"), v))
}

/// Reads `coeff:index`; a bare index counts once.
pub fn parse_term(text: &str) -> Result<(u64, Schubert)> {
    match text.split_once(':') {
        Some((c, rest)) if c.trim().chars().all(|ch| ch.is_ascii_digit()) && !c.trim().is_empty() => {
            let coeff = c
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient in '{}'", text)))?;
            Ok((coeff, parse_index(rest)?))
        }
        _ => Ok((1, parse_index(text)?)),
    }
}

fn cmd_gamma(i: Option<u32>, terms: &[String]) -> Result<Output> {
    let parsed = terms.iter().map(|t| parse_term(t)).collect::<Result<Vec<_>>>()?;
    let fam = IndexFamily::from_terms(&parsed)?;
    let top = gamma_top(&fam);
    let bottom = gamma_bottom(&fam);
    let mid = match i {
        Some(i) => Some(gamma_mid(&fam, i)?),
        None => None,
    };
    let show = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_else(|| "undetermined".into());
    let mut lines = vec![
        format!("top: {}", show(top)),
        format!(
            "bottom: d = {} ({})",
            bottom.d,
            if bottom.determined { "determined" } else { "undetermined" }
        ),
    ];
    if let (Some(i), Some(m)) = (i, mid) {
        lines.push(format!("position {}: {}", i, show(m)));
    }
    Ok(Output::ok(
        lines.join("\n"),
        json!({
            "space": fam.space.to_string(),
            "members": fam.members.iter().map(|(c, a)| json!({"coefficient": c, "a": a})).collect::<Vec<_>>(),
            "top": top,
            "bottom": bottom,
            "i": i,
            "mid": mid.flatten(),
        }),
    ))
}

fn class_terms(c: &ChowClass) -> Vec<Value> {
    c.terms
        .iter()
        .map(|(x, k)| json!({"coefficient": k, "index": x.to_string()}))
        .collect()
}

fn cmd_expand(
    input: &str,
    from_schubert: bool,
    to_grass: bool,
    trace: bool,
    out: &mut dyn Write,
) -> Result<Output> {
    let result: Result<Expansion> = if to_grass {
        og_to_grass(&parse_index(input)?)
    } else if from_schubert {
        expand(&schubert_to_sequence(&parse_index(input)?)?)
    } else {
        expand(&parse_sequence(input)?)
    };
    let emit = |steps: &[crate::restriction::TraceStep], out: &mut dyn Write| {
        for st in steps {
            let _ = writeln!(out, "{}", serde_json::to_string(st).unwrap_or_default());
        }
    };
    let exp = match result {
        Ok(e) => e,
        Err(e) => {
            if let (true, Error::UnsupportedDegeneration { trace: steps, .. }) = (trace, &e) {
                emit(steps, out);
            }
            return Err(e);
        }
    };
    if trace {
        emit(&exp.trace, out);
    }
    Ok(Output::ok(
        exp.class.to_string(),
        json!({
            "input": input,
            "space": exp.class.space.to_string(),
            "terms": class_terms(&exp.class),
            "class": exp.class.to_string(),
        }),
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub index: String,
    pub class_rigid: Option<bool>,
    pub essential: usize,
    pub rigid: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub space: String,
    pub total: usize,
    pub rigid: usize,
    pub non_rigid: usize,
    pub unknown: usize,
    pub rows: Vec<CensusRow>,
    pub generated_at: String,
    pub engine_version: String,
    pub paper_literal: bool,
}

pub fn census(space_text: &str, paper_literal: bool) -> Result<CensusReport> {
    let space = parse_space(space_text)?;
    let v = space.violations();
    if !v.is_empty() {
        return Err(Error::Invalid(v));
    }
    let mode = if paper_literal {
        RelationMode::PaperLiteral
    } else {
        RelationMode::Max
    };
    let all = enumerate_indices(&space, default_cap())?;
    let rows: Vec<CensusRow> = all
        .into_iter()
        .map(|index| {
            let s = Schubert {
                space: space.clone(),
                index,
            };
            let v = rigid_class(&s, mode);
            CensusRow {
                index: s.index.to_string(),
                class_rigid: v.class_rigid,
                essential: v.refs.iter().filter(|r| r.essential).count(),
                rigid: v.refs.iter().filter(|r| r.essential && r.rigid == Some(true)).count(),
            }
        })
        .collect();
    let count = |x: Option<bool>| rows.iter().filter(|r| r.class_rigid == x).count();
    Ok(CensusReport {
        space: space.to_string(),
        total: rows.len(),
        rigid: count(Some(true)),
        non_rigid: count(Some(false)),
        unknown: count(None),
        generated_at: chrono::Utc::now().to_rfc3339(),
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        paper_literal,
        rows,
    })
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::InvalidArgument(format!("cannot write output: {}", e))
}

fn cmd_census(
    space: &str,
    path: Option<&PathBuf>,
    csv_path: Option<&PathBuf>,
    paper_literal: bool,
) -> Result<Output> {
    let report = census(space, paper_literal)?;
    let v = serde_json::to_value(&report).map_err(io_error)?;
    if let Some(p) = path {
        let body = serde_json::to_string_pretty(&v).map_err(io_error)?;
        std::fs::write(p, body + "\n").map_err(io_error)?;
    }
    if let Some(p) = csv_path {
        let mut w = csv::Writer::from_path(p).map_err(io_error)?;
        w.write_record(["index", "class_rigid", "essential", "rigid"])
            .map_err(io_error)?;
        for r in &report.rows {
            w.write_record([
                r.index.clone(),
                verdict_word(r.class_rigid).to_string(),
                r.essential.to_string(),
                r.rigid.to_string(),
            ])
            .map_err(io_error)?;
        }
        w.flush().map_err(io_error)?;
    }
    let mut lines = vec![format!(
        "{}: {} classes, {} rigid, {} not rigid, {} undecided",
        report.space, report.total, report.rigid, report.non_rigid, report.unknown
    )];
    lines.extend(
        report
            .rows
            .iter()
            .map(|r| format!("  {:<24} {}", r.index, verdict_word(r.class_rigid))),
    );
    Ok(Output::ok(lines.join("\n"), v))
}
