//! `gcl` — build general concept lattices from formal contexts, answer
//! implication queries and export the structure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gcl_core::{
    cgrsl_intent, degeneracy_report, fcl_concepts, gfcl_intent, grsl_intent, implication,
    irreducible_covers, lattice_dot, lattice_json, referential_context, restrict, rsl_concepts,
    verify, AttrSpace, ClassicalConcept, ClauseRole, ContextFormat, ExtentMask, FormalContext, Gcl,
    GeneralizedIntent, ImplicationVerdict, OracleOptions, ParseOptions, S2Method,
};

mod exits {
    pub const REFUTED: u8 = 1;
    pub const ERROR: u8 = 2;
}

const MAX_ATTRS_ENV: &str = "GCL_MAX_ATTRS";

#[derive(Parser)]
#[command(
    name = "gcl",
    version,
    about = "General concept lattice analysis of formal contexts"
)]
struct Cli {
    /// Context file (Burmeister .cxt or CSV)
    #[arg(long, global = true)]
    context: Option<PathBuf>,

    /// Input format; `auto` sniffs the extension and header
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,

    /// Forbidden-minterm declarations: one expression or minterm index per
    /// line, `#` comments
    #[arg(long, global = true)]
    constraints: Option<PathBuf>,

    /// Attribute cap override (also via GCL_MAX_ATTRS)
    #[arg(long, global = true)]
    max_attrs: Option<usize>,

    /// Output style for analysis commands
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Burmeister,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the lattice structure read off the context
    Build,
    /// Decode one mask, or enumerate every general concept
    Concepts(ConceptsArgs),
    /// Decide `LHS -> RHS` or `LHS <-> RHS` rules
    Query(QueryArgs),
    /// Recover the formal-concept lattice nodes
    Fcl,
    /// Recover the rough-set lattice nodes
    Rsl,
    /// Generalized intent of one node
    Gintent(GintentArgs),
    /// Irreducible covers of one node
    Covers(CoversArgs),
    /// Report the four degeneracy statements
    Degenerate,
    /// Append fictitious objects realizing every free admissible row
    Refcontext(RefcontextArgs),
    /// Project the context onto selected attributes
    Restrict(RestrictArgs),
    /// Brute-force verification of the lattice laws (small alphabets)
    Oracle(OracleArgs),
    /// Covering diagram in DOT form
    ExportDot(OutArgs),
    /// Full lattice as JSON
    ExportJson(OutArgs),
}

#[derive(Args)]
struct ConceptsArgs {
    /// Mask string, leftmost character = first class
    #[arg(long)]
    mask: Option<String>,
}

#[derive(Args)]
struct QueryArgs {
    /// A single rule, e.g. "c -> a"
    rule: Option<String>,
    /// Batch file: one rule per line, `#` comments
    #[arg(long, conflicts_with = "rule")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct GintentArgs {
    #[arg(long)]
    mask: String,
    #[arg(long, value_enum)]
    kind: GintentKind,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GintentKind {
    Gfcl,
    Grsl,
    Cgrsl,
}

#[derive(Args)]
struct CoversArgs {
    #[arg(long)]
    mask: String,
    #[arg(long, value_enum)]
    mode: CoverModeArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoverModeArg {
    Disjunction,
    Conjunction,
}

#[derive(Args)]
struct RefcontextArgs {
    /// Destination file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also report degeneracy of the completed context
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct RestrictArgs {
    /// Comma-separated attributes to keep
    #[arg(long, value_delimiter = ',')]
    keep: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Refuse alphabets above this size
    #[arg(long, default_value_t = 3)]
    max_m: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Sampled pair count for four-attribute alphabets
    #[arg(long, default_value_t = 100_000)]
    pairs: u64,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(exits::ERROR)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let ctx = load_context(cli)?;
    let forbidden = load_constraints(cli, &ctx)?;
    let gcl = Gcl::build_with_constraints(ctx, forbidden.as_ref()).map_err(|e| e.to_string())?;
    let json_mode = cli.output == OutputArg::Json;

    match &cli.command {
        Command::Build => cmd_build(&gcl, json_mode),
        Command::Concepts(args) => cmd_concepts(&gcl, args, json_mode),
        Command::Query(args) => cmd_query(&gcl, args, json_mode),
        Command::Fcl => cmd_classical(fcl_concepts(&gcl), json_mode),
        Command::Rsl => cmd_classical(rsl_concepts(&gcl), json_mode),
        Command::Gintent(args) => cmd_gintent(&gcl, args, json_mode),
        Command::Covers(args) => cmd_covers(&gcl, args, json_mode),
        Command::Degenerate => cmd_degenerate(&gcl, json_mode),
        Command::Refcontext(args) => cmd_refcontext(&gcl, forbidden.as_ref(), args, json_mode),
        Command::Restrict(args) => cmd_restrict(&gcl, args),
        Command::Oracle(args) => cmd_oracle(&gcl, args, json_mode),
        Command::ExportDot(args) => emit(
            &lattice_dot(&gcl).map_err(|e| e.to_string())?,
            args.out.as_deref(),
        ),
        Command::ExportJson(args) => emit(
            &lattice_json(&gcl).map_err(|e| e.to_string())?,
            args.out.as_deref(),
        ),
    }
}

fn load_context(cli: &Cli) -> Result<FormalContext, String> {
    let path = cli
        .context
        .as_ref()
        .ok_or_else(|| "missing --context <file>".to_string())?;
    let source =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let format = match cli.format {
        FormatArg::Burmeister => ContextFormat::Burmeister,
        FormatArg::Csv => ContextFormat::Csv,
        FormatArg::Auto => sniff_format(path, &source),
    };
    let max_attrs = resolve_attr_cap(cli)?;
    FormalContext::parse(&source, format, &ParseOptions { max_attrs }).map_err(|e| e.to_string())
}

fn sniff_format(path: &Path, source: &str) -> ContextFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("cxt") => ContextFormat::Burmeister,
        Some("csv") => ContextFormat::Csv,
        _ => {
            let first = source.lines().find(|l| !l.trim().is_empty());
            if first.map(str::trim) == Some("B") {
                ContextFormat::Burmeister
            } else {
                ContextFormat::Csv
            }
        }
    }
}

fn resolve_attr_cap(cli: &Cli) -> Result<usize, String> {
    if let Some(cap) = cli.max_attrs {
        return Ok(cap);
    }
    match std::env::var(MAX_ATTRS_ENV) {
        Ok(text) => text
            .parse()
            .map_err(|_| format!("{MAX_ATTRS_ENV} must be an integer, got `{text}`")),
        Err(_) => Ok(ParseOptions::default().max_attrs),
    }
}

/// Reads the forbidden-minterm file against the context's alphabet: each
/// line is an expression whose satisfied minterms become forbidden, or a
/// bare minterm index.
fn load_constraints(
    cli: &Cli,
    ctx: &FormalContext,
) -> Result<Option<gcl_core::bits::Bits>, String> {
    let Some(path) = cli.constraints.as_ref() else {
        return Ok(None);
    };
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let space = AttrSpace::new(ctx.attributes()).map_err(|e| e.to_string())?;
    let mut forbidden = gcl_core::bits::Bits::zeros(space.size());
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Ok(index) = line.parse::<usize>() {
            if index >= space.size() {
                return Err(format!(
                    "constraints line {}: minterm {index} out of range 0..{}",
                    line_no + 1,
                    space.size()
                ));
            }
            forbidden.set(index, true);
            continue;
        }
        let f = space
            .parse_fn(line)
            .map_err(|e| format!("constraints line {}: {e}", line_no + 1))?;
        forbidden = forbidden.or(f.table());
    }
    Ok(Some(forbidden))
}

fn emit(text: &str, out: Option<&Path>) -> Result<ExitCode, String> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_value(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("valid json")
    );
}

fn cmd_build(gcl: &Gcl, json_mode: bool) -> Result<ExitCode, String> {
    let space = gcl.space();
    let report = degeneracy_report(gcl);
    let upsilon_eta: Vec<String> = gcl
        .eta_atoms()
        .iter()
        .map(|f| space.dnf_string(f))
        .collect();
    let upsilon_rho: Vec<String> = gcl
        .rho_atoms()
        .iter()
        .map(|f| space.cnf_string(f))
        .collect();
    if json_mode {
        let classes: Vec<Value> = gcl
            .quotient()
            .classes()
            .iter()
            .map(|c| {
                json!({
                    "members": c.members(),
                    "minterm": c.minterm(),
                    "signature": space.dnf_string(&space.minterm(c.minterm())),
                })
            })
            .collect();
        print_value(&json!({
            "objects": gcl.context().num_objects(),
            "attributes": gcl.context().attributes(),
            "n_f": gcl.n_f(),
            "rank": gcl.rank(),
            "intent_size_exponent": gcl.intent_size_exponent(),
            "degenerate": report.degenerate(),
            "classes": classes,
            "upsilon_eta": upsilon_eta,
            "upsilon_rho": upsilon_rho,
            "one_eta_dnf": space.dnf_string(gcl.one_eta()),
            "zero_rho_cnf": space.cnf_string(gcl.zero_rho()),
        }));
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "objects: {}, attributes: {}",
        gcl.context().num_objects(),
        gcl.context().num_attrs()
    );
    println!("n_F: {}", gcl.n_f());
    println!(
        "rank: {} (intent size 2^{})",
        gcl.rank(),
        gcl.intent_size_exponent()
    );
    println!("degenerate: {}", report.degenerate());
    println!("classes:");
    for (k, class) in gcl.quotient().classes().iter().enumerate() {
        println!("  D{} {{{}}}", k + 1, class.members().join(","));
    }
    println!("upsilon_eta:");
    for (k, entry) in upsilon_eta.iter().enumerate() {
        println!("  eta_{} = {}", k + 1, entry);
    }
    println!("upsilon_rho:");
    for (k, entry) in upsilon_rho.iter().enumerate() {
        println!("  rho(G\\D{}) = {}", k + 1, entry);
    }
    println!("one_eta = {}", space.dnf_string(gcl.one_eta()));
    println!("zero_rho = {}", space.cnf_string(gcl.zero_rho()));
    Ok(ExitCode::SUCCESS)
}

fn parse_mask(gcl: &Gcl, text: &str) -> Result<ExtentMask, String> {
    ExtentMask::parse(text, gcl.n_f()).map_err(|e| e.to_string())
}

fn concept_value(gcl: &Gcl, mask: &ExtentMask) -> Result<Value, String> {
    let space = gcl.space();
    let concept = gcl.concept_of_mask(mask).map_err(|e| e.to_string())?;
    let candidates = gcl_core::classical_candidates(gcl, mask).map_err(|e| e.to_string())?;
    Ok(json!({
        "mask": mask.to_string(),
        "extent": concept.extent,
        "eta_dnf": space.dnf_string(&concept.eta),
        "rho_cnf": space.cnf_string(&concept.rho),
        "fcl_candidate": {"intent": candidates.fcl_intent, "accepted": candidates.fcl_accepted},
        "rsl_candidate": {"intent": candidates.rsl_intent, "accepted": candidates.rsl_accepted},
    }))
}

fn print_concept(gcl: &Gcl, mask: &ExtentMask) -> Result<(), String> {
    let space = gcl.space();
    let concept = gcl.concept_of_mask(mask).map_err(|e| e.to_string())?;
    let candidates = gcl_core::classical_candidates(gcl, mask).map_err(|e| e.to_string())?;
    let status = |ok: bool| if ok { "accepted" } else { "rejected" };
    println!("mask: {}", mask);
    println!("extent: {{{}}}", concept.extent.join(","));
    println!("eta: {}", space.dnf_string(&concept.eta));
    println!("rho: {}", space.cnf_string(&concept.rho));
    println!(
        "fcl candidate: {{{}}} ({})",
        candidates.fcl_intent.join(","),
        status(candidates.fcl_accepted)
    );
    println!(
        "rsl candidate: {{{}}} ({})",
        candidates.rsl_intent.join(","),
        status(candidates.rsl_accepted)
    );
    Ok(())
}

fn cmd_concepts(gcl: &Gcl, args: &ConceptsArgs, json_mode: bool) -> Result<ExitCode, String> {
    match &args.mask {
        Some(text) => {
            let mask = parse_mask(gcl, text)?;
            if json_mode {
                print_value(&concept_value(gcl, &mask)?);
            } else {
                print_concept(gcl, &mask)?;
            }
        }
        None => {
            let masks = gcl.enumerate_masks().map_err(|e| e.to_string())?;
            if json_mode {
                let nodes = masks
                    .iter()
                    .map(|m| concept_value(gcl, m))
                    .collect::<Result<Vec<_>, _>>()?;
                print_value(&Value::Array(nodes));
            } else {
                for mask in masks {
                    print_concept(gcl, &mask)?;
                    println!();
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_value(gcl: &Gcl, v: &ImplicationVerdict) -> Value {
    json!({
        "allowed": v.allowed,
        "t_class": v.t_class.map(|t| t.to_string()),
        "informative": v.informative.map(|i| i.to_string()),
        "witness_class": if v.allowed { Value::Null } else { json!(v.witness_class) },
        "lhs_closure_dnf": gcl.space().dnf_string(&v.lhs_closure),
        "lhs_extent": v.lhs_extent.to_string(),
        "rhs_extent": v.rhs_extent.to_string(),
    })
}

fn verdict_line(verdict: &implication::RuleVerdict) -> String {
    let fwd = &verdict.forward;
    if verdict.allowed() {
        let mut text = format!(
            "ALLOWED ({}, {})",
            fwd.t_class.expect("allowed verdicts carry a class"),
            fwd.informative.expect("allowed verdicts carry a class")
        );
        if let Some(back) = &verdict.backward {
            text.push_str(&format!(
                "; reverse {}",
                back.informative.expect("allowed verdicts carry a class")
            ));
        }
        text
    } else {
        let refuting = if fwd.allowed {
            verdict
                .backward
                .as_ref()
                .expect("some direction refused the rule")
        } else {
            fwd
        };
        format!(
            "REFUTED, witness class {{{}}}",
            refuting.witness_class.join(",")
        )
    }
}

fn rule_value(gcl: &Gcl, verdict: &implication::RuleVerdict) -> Value {
    let mut value = json!({
        "rule": verdict.rule.text,
        "allowed": verdict.allowed(),
        "forward": verdict_value(gcl, &verdict.forward),
    });
    if let Some(back) = &verdict.backward {
        value["backward"] = verdict_value(gcl, back);
    }
    value
}

fn cmd_query(gcl: &Gcl, args: &QueryArgs, json_mode: bool) -> Result<ExitCode, String> {
    let lines: Vec<String> = match (&args.rule, &args.file) {
        (Some(rule), None) => vec![rule.clone()],
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect(),
        _ => return Err("provide a rule or --file".into()),
    };
    let mut any_refuted = false;
    let mut values = Vec::new();
    for line in &lines {
        let verdict = implication::judge(gcl, line).map_err(|e| e.to_string())?;
        any_refuted |= !verdict.allowed();
        if json_mode {
            values.push(rule_value(gcl, &verdict));
        } else {
            println!("{line} :: {}", verdict_line(&verdict));
            println!(
                "  closure: {}",
                gcl.space().dnf_string(&verdict.forward.lhs_closure)
            );
        }
    }
    if json_mode {
        print_value(&if values.len() == 1 {
            values.pop().expect("one verdict")
        } else {
            Value::Array(values)
        });
    }
    Ok(if any_refuted {
        ExitCode::from(exits::REFUTED)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_classical(concepts: Vec<ClassicalConcept>, json_mode: bool) -> Result<ExitCode, String> {
    if json_mode {
        let values: Vec<Value> = concepts
            .iter()
            .map(|c| {
                json!({
                    "extent": c.extent,
                    "intent": c.intent,
                    "kind": c.kind.to_string(),
                    "appended": c.appended,
                })
            })
            .collect();
        print_value(&Value::Array(values));
    } else {
        for c in &concepts {
            println!(
                "({{{}}}, {{{}}}){}",
                c.extent.join(","),
                c.intent.join(","),
                if c.appended { " [appended]" } else { "" }
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gintent(gcl: &Gcl, args: &GintentArgs, json_mode: bool) -> Result<ExitCode, String> {
    let mask = parse_mask(gcl, &args.mask)?;
    let intent: GeneralizedIntent = match args.kind {
        GintentKind::Gfcl => gfcl_intent(gcl, &mask),
        GintentKind::Grsl => grsl_intent(gcl, &mask),
        GintentKind::Cgrsl => cgrsl_intent(gcl, &mask),
    }
    .map_err(|e| e.to_string())?;
    let (count, exponent) = intent.cardinality();
    if json_mode {
        print_value(&json!({
            "mask": mask.to_string(),
            "kind": match args.kind {
                GintentKind::Gfcl => "gfcl",
                GintentKind::Grsl => "grsl",
                GintentKind::Cgrsl => "cgrsl",
            },
            "complemented": intent.complemented,
            "masks": intent.masks.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "cardinality": {"count": count, "exponent": exponent},
        }));
    } else {
        println!("mask: {mask}");
        let masks: Vec<String> = intent.masks.iter().map(|m| m.to_string()).collect();
        if intent.complemented {
            println!(
                "intent: complement of the union over [{}]",
                masks.join(", ")
            );
        } else {
            println!("intent: union over [{}]", masks.join(", "));
        }
        println!("members: {count} * 2^{exponent}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_covers(gcl: &Gcl, args: &CoversArgs, json_mode: bool) -> Result<ExitCode, String> {
    let mask = parse_mask(gcl, &args.mask)?;
    let mode = match args.mode {
        CoverModeArg::Disjunction => ClauseRole::Disjunction,
        CoverModeArg::Conjunction => ClauseRole::Conjunction,
    };
    let covers = irreducible_covers(gcl.space(), &gcl.quotient().class_minterms(), &mask, mode)
        .map_err(|e| e.to_string())?;
    let rendered: Vec<String> = covers.iter().map(|c| c.display(gcl.space())).collect();
    if json_mode {
        print_value(&json!({"mask": mask.to_string(), "covers": rendered}));
    } else {
        for clause in &rendered {
            println!("{clause}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn s2_method_name(method: S2Method) -> &'static str {
    match method {
        S2Method::Exhaustive => "exhaustive",
        S2Method::InferredFromS3 => "inferred-from-s3",
    }
}

fn cmd_degenerate(gcl: &Gcl, json_mode: bool) -> Result<ExitCode, String> {
    let report = degeneracy_report(gcl);
    if json_mode {
        print_value(&json!({
            "s1": report.s1,
            "s2": report.s2,
            "s3": report.s3,
            "s4": report.s4,
            "consistent": report.consistent,
            "degenerate": report.degenerate(),
            "s2_method": s2_method_name(report.s2_method),
        }));
    } else {
        println!("S1 (n_F = rank): {}", report.s1);
        println!(
            "S2 (rho = eta on every mask): {} [{}]",
            report.s2,
            s2_method_name(report.s2_method)
        );
        println!("S3 (contextual truth is 1): {}", report.s3);
        println!("S4 (singleton intents): {}", report.s4);
        println!("degenerate: {}", report.degenerate());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_refcontext(
    gcl: &Gcl,
    forbidden: Option<&gcl_core::bits::Bits>,
    args: &RefcontextArgs,
    json_mode: bool,
) -> Result<ExitCode, String> {
    let completed = referential_context(gcl.context(), forbidden).map_err(|e| e.to_string())?;
    let appended = completed.num_objects() - gcl.context().num_objects();
    let text = completed.to_burmeister();
    if args.check {
        let checked =
            Gcl::build_with_constraints(completed, forbidden).map_err(|e| e.to_string())?;
        let report = degeneracy_report(&checked);
        if json_mode {
            print_value(&json!({
                "appended": appended,
                "n_f": checked.n_f(),
                "degenerate": report.degenerate(),
                "s_flags": [report.s1, report.s2, report.s3, report.s4],
                "s2_method": s2_method_name(report.s2_method),
            }));
        } else {
            println!(
                "appended {appended} fictitious objects, n_F = {}",
                checked.n_f()
            );
            println!("degenerate: {}", report.degenerate());
        }
        if let Some(path) = &args.out {
            fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    emit(&text, args.out.as_deref())
}

fn cmd_restrict(gcl: &Gcl, args: &RestrictArgs) -> Result<ExitCode, String> {
    let keep: Vec<&str> = args.keep.iter().map(String::as_str).collect();
    let projected = restrict(gcl.context(), &keep).map_err(|e| e.to_string())?;
    emit(&projected.to_burmeister(), args.out.as_deref())
}

fn cmd_oracle(gcl: &Gcl, args: &OracleArgs, json_mode: bool) -> Result<ExitCode, String> {
    let width = gcl.context().num_attrs();
    if width > args.max_m {
        return Err(format!(
            "alphabet has {width} attributes, above --max-m {}; restrict the context first",
            args.max_m
        ));
    }
    let report = verify(
        gcl,
        &OracleOptions {
            pair_samples: args.pairs,
            seed: args.seed,
        },
    )
    .map_err(|e| e.to_string())?;
    if json_mode {
        let violations: Vec<Value> = report
            .violations
            .iter()
            .map(|v| json!({"law": v.law, "detail": v.detail}))
            .collect();
        print_value(&json!({
            "alphabet_size": report.alphabet_size,
            "functions_checked": report.functions_checked,
            "pairs_checked": report.pairs_checked,
            "sampling_seed": report.sampling_seed,
            "passed": report.passed(),
            "violations": violations,
        }));
    } else {
        println!(
            "checked {} functions and {} pairs over {} attributes",
            report.functions_checked, report.pairs_checked, report.alphabet_size
        );
        if let Some(seed) = report.sampling_seed {
            println!("pair sampling seed: {seed}");
        }
        if report.passed() {
            println!("all laws hold");
        } else {
            for v in &report.violations {
                println!("violation [{}]: {}", v.law, v.detail);
            }
        }
    }
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(exits::REFUTED))
    }
}
