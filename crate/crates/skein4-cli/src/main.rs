//! Command line frontend: evaluate invariants, cross-check them against
//! the brute-force oracles, tabulate censuses, and vet specialization
//! homomorphisms against the module relations.

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skein4::diagram::braid::braid_closure;
use skein4::diagram::parse::{parse_diagram, render_code};
use skein4::diagram::TraversalContext;
use skein4::oracle::{jones_from_bracket, q_oracle};
use skein4::ring::{relations, Homomorphism, LaurentPoly};
use skein4::skein::{
    check_order_independence, check_reidemeister, invariant_b1, invariant_b1_writhe,
    invariant_b2, invariant_b2_writhe, jones, writhe_normalized, EvalError,
};
use skein4::{EvalConfig, LinkDiagram, MemoPolicy, Presentation, RingElement};
use skein4_cli::census::{self, CensusEntry};
use skein4_cli::report::{CheckLine, ComputeReport};
use skein4_cli::{homs, sample};

#[derive(Parser)]
#[command(
    name = "skein4",
    version,
    about = "Unoriented link invariants valued in presented ring modules",
    after_help = "Jones polynomials are reported in the variable q with t = q^-4, \
normalized to 1 on the unknot."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one invariant of one diagram.
    Compute(ComputeArgs),
    /// Cross-check evaluators, oracles, move invariance, and rewriting.
    Verify(VerifyArgs),
    /// Tabulate invariants over a census.
    Table(TableArgs),
    /// Check a specialization against the defining module relations.
    CheckSpec(CheckSpecArgs),
    /// Print the defining relations of a presentation.
    Relations(RelationsArgs),
}

fn diagram_from_file(path: &str) -> Result<(String, LinkDiagram)> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading diagram file {path}"))?;
    let code: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    let code = code.split_whitespace().collect::<Vec<_>>().join(" ");
    let d = parse_diagram(&code).with_context(|| format!("diagram file {path}"))?;
    Ok((code, d))
}

fn diagram_from_braid(word: &str) -> Result<(String, LinkDiagram)> {
    let (strands, letters) = word
        .split_once(':')
        .ok_or_else(|| anyhow::anyhow!("braid must look like \"3: -1 2 -1 2\""))?;
    let strands: usize = strands.trim().parse().context("strand count")?;
    let letters = letters.replace(',', " ");
    let word: Vec<i32> = letters
        .split_whitespace()
        .map(|t| t.parse::<i32>().with_context(|| format!("braid letter '{t}'")))
        .collect::<Result<_>>()?;
    let d = braid_closure(strands, &word)?;
    Ok((render_code(&d), d))
}

#[derive(Args)]
#[group(multiple = false)]
struct SourceArgs {
    /// Diagram code, e.g. "C(1,4,2,3) C(4,1,3,2)".
    #[arg(long)]
    code: Option<String>,
    /// File containing a diagram code (may span lines; # starts a comment).
    #[arg(long)]
    file: Option<String>,
    /// Name of a bundled census entry (list them with `table`).
    #[arg(long)]
    census: Option<String>,
    /// Braid word given as "strands: letters", e.g. "3: -1 2 -1 2".
    #[arg(long)]
    braid: Option<String>,
}

impl SourceArgs {
    fn require(&self) -> Result<(Option<String>, String, LinkDiagram)> {
        if let Some(code) = &self.code {
            let d = parse_diagram(code)?;
            return Ok((None, code.clone(), d));
        }
        if let Some(path) = &self.file {
            let (code, d) = diagram_from_file(path)?;
            return Ok((None, code, d));
        }
        if let Some(name) = &self.census {
            let entry = census::find_builtin(name)?;
            return Ok((Some(entry.name), entry.code, entry.diagram));
        }
        if let Some(word) = &self.braid {
            let (code, d) = diagram_from_braid(word)?;
            return Ok((None, code, d));
        }
        bail!("give one of --code, --file, --census, --braid")
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Refuse diagrams with more crossings than this.
    #[arg(long, default_value_t = 16)]
    max_crossings: usize,
    /// Memoization policy.
    #[arg(long, value_enum, default_value_t = MemoArg::Auto)]
    memo: MemoArg,
}

impl EvalArgs {
    fn config(&self) -> EvalConfig {
        EvalConfig {
            max_crossings: self.max_crossings,
            memo: match self.memo {
                MemoArg::Auto => MemoPolicy::Auto,
                MemoArg::On => MemoPolicy::On,
                MemoArg::Off => MemoPolicy::Off,
            },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MemoArg {
    Auto,
    On,
    Off,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Invariant {
    /// Module element over the four-generator involutive presentation.
    B1,
    /// The same with an invertible writhe weight adjoined.
    B1w,
    /// Module element over the two-generator presentation.
    B2,
    /// Writhe-corrected polynomial through a specialization (see --spec).
    B2w,
    /// Jones polynomial in q.
    Jones,
    /// Q polynomial in x.
    Q,
}

impl Invariant {
    fn name(self) -> &'static str {
        match self {
            Invariant::B1 => "b1",
            Invariant::B1w => "b1w",
            Invariant::B2 => "b2",
            Invariant::B2w => "b2w",
            Invariant::Jones => "jones",
            Invariant::Q => "q",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Which invariant to evaluate.
    #[arg(long, value_enum)]
    invariant: Invariant,
    /// Specialization for b2w: builtin name (jones, q, dubrovnik) or a
    /// JSON file.
    #[arg(long, default_value = "jones")]
    spec: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    eval: EvalArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Census CSV to check entry by entry; defaults to the bundled census
    /// when no single diagram is given.
    #[arg(long, conflicts_with_all = ["code", "file", "braid"])]
    census: Option<String>,
    /// Single diagram code to check.
    #[arg(long, conflicts_with_all = ["file", "braid"])]
    code: Option<String>,
    /// File containing one diagram code.
    #[arg(long, conflicts_with = "braid")]
    file: Option<String>,
    /// Braid word "strands: letters".
    #[arg(long)]
    braid: Option<String>,
    /// Random move walks per diagram.
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Module relation depth for the specialization checks.
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    eval: EvalArgs,
}

#[derive(Args)]
struct TableArgs {
    /// Census CSV to tabulate instead of the bundled one.
    #[arg(long)]
    census: Option<String>,
    /// Invariants to list, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Invariant::Jones, Invariant::Q])]
    invariant: Vec<Invariant>,
    /// Specialization used by b2w columns.
    #[arg(long, default_value = "jones")]
    spec: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    #[command(flatten)]
    eval: EvalArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct CheckSpecArgs {
    /// Builtin name (jones, q, dubrovnik) or JSON file.
    #[arg(long)]
    spec: String,
    /// Check the module relation family for v_1 through v_n.
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RelationsArgs {
    /// Presentation: b1, b1a, or b2.
    #[arg(long)]
    presentation: String,
    /// Use the writhe-weighted module relations (b2 only).
    #[arg(long)]
    writhe_module: bool,
    #[arg(long, default_value_t = 3)]
    n_max: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let cap = e.chain().any(|c| {
                matches!(
                    c.downcast_ref::<EvalError>(),
                    Some(EvalError::TooManyCrossings { .. })
                )
            });
            ExitCode::from(if cap { 3 } else { 2 })
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Compute(args) => run_compute(args).map(|()| true),
        Cmd::Verify(args) => run_verify(args),
        Cmd::Table(args) => run_table(args).map(|()| true),
        Cmd::CheckSpec(args) => run_check_spec(args),
        Cmd::Relations(args) => run_relations(args),
    }
}

/// Value, writhe-normalized form (b1w only), Laurent variables (polynomial
/// invariants only).
fn eval_value(
    inv: Invariant,
    d: &LinkDiagram,
    spec_arg: &str,
    cfg: &EvalConfig,
) -> Result<(String, Option<String>, Option<Vec<String>>)> {
    match inv {
        Invariant::B1 => {
            let v = invariant_b1(d, cfg)?;
            Ok((v.element.render(), None, None))
        }
        Invariant::B1w => {
            let v = invariant_b1_writhe(d, cfg)?;
            let norm = writhe_normalized(&v);
            Ok((v.element.render(), Some(norm.render()), None))
        }
        Invariant::B2 => {
            let v = invariant_b2(d, cfg)?;
            Ok((v.element.render(), None, None))
        }
        Invariant::B2w => {
            let hom = homs::load(spec_arg)?;
            if hom.pres != Presentation::B2 || !hom.writhe_module {
                bail!(
                    "b2w needs a specialization declared for presentation b2 \
                     with writhe_module true; '{}' is not",
                    hom.name
                );
            }
            let vars = hom.vars().iter().map(|s| s.to_string()).collect();
            let value = invariant_b2_writhe(d, &hom, cfg)?;
            Ok((value.render(), None, Some(vars)))
        }
        Invariant::Jones => {
            let value = jones(d, cfg)?;
            Ok((value.render(), None, Some(vec!["q".into()])))
        }
        Invariant::Q => {
            let hom = Homomorphism::q_poly();
            let element = invariant_b1(d, cfg)?.element;
            let value = hom.specialize(&element).map_err(EvalError::from)?;
            Ok((value.render(), None, Some(vec!["x".into()])))
        }
    }
}

fn run_compute(args: ComputeArgs) -> Result<()> {
    let (name, code, d) = args.source.require()?;
    let cfg = args.eval.config();
    let classified = d.classify(&TraversalContext::canonical(&d))?;
    let (value, normalized, vars) = eval_value(args.invariant, &d, &args.spec, &cfg)?;
    let report = ComputeReport {
        name,
        code,
        invariant: args.invariant.name().to_string(),
        crossings: d.crossing_count(),
        bad: classified.bad_count,
        mu: d.mu(),
        writhe: classified.writhe,
        value,
        normalized,
        vars,
    };
    match args.format {
        Format::Text => print!("{}", report.text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(())
}

fn diagram_checks(
    subject: &str,
    d: &LinkDiagram,
    trials: usize,
    seed: u64,
    cfg: &EvalConfig,
    out: &mut Vec<CheckLine>,
) -> Result<()> {
    let push = |out: &mut Vec<CheckLine>, check: &str, ok: bool, detail: Option<String>| {
        out.push(CheckLine {
            subject: subject.to_string(),
            check: check.to_string(),
            ok,
            detail,
        });
    };

    let j = jones(d, cfg)?;
    let oracle = jones_from_bracket(d, cfg)?;
    push(
        out,
        "jones matches the state-sum oracle",
        j == oracle,
        (j != oracle).then(|| format!("{} vs {}", j.render(), oracle.render())),
    );

    let q_hom = Homomorphism::q_poly();
    let b1 = invariant_b1(d, cfg)?;
    let via_module = q_hom.specialize(&b1.element).map_err(EvalError::from)?;
    let direct = q_oracle(d, cfg)?;
    push(
        out,
        "q specialization matches the recursion oracle",
        via_module == direct,
        (via_module != direct).then(|| format!("{} vs {}", via_module.render(), direct.render())),
    );

    let reparsed = RingElement::parse(&b1.element.render()).map_err(anyhow::Error::msg)?;
    let laurent_back = LaurentPoly::parse(&["q"], &j.render()).map_err(anyhow::Error::msg)?;
    push(
        out,
        "rendered values parse back unchanged",
        reparsed == b1.element && laurent_back == j,
        None,
    );

    let on = EvalConfig {
        memo: MemoPolicy::On,
        ..*cfg
    };
    let off = EvalConfig {
        memo: MemoPolicy::Off,
        ..*cfg
    };
    let memo_ok = invariant_b1(d, &on)?.element == invariant_b1(d, &off)?.element
        && invariant_b2(d, &on)?.element == invariant_b2(d, &off)?.element
        && jones(d, &on)? == jones(d, &off)?;
    push(out, "memoized and direct evaluation agree", memo_ok, None);

    push(
        out,
        "values do not depend on traversal choices",
        check_order_independence(d, cfg)?,
        None,
    );

    if trials > 0 {
        let walk_cfg = EvalConfig {
            max_crossings: cfg.max_crossings.min(d.crossing_count() + 4),
            ..*cfg
        };
        push(
            out,
            "random move walks keep all four invariants",
            check_reidemeister(d, trials, seed, &walk_cfg)?,
            None,
        );
    }
    Ok(())
}

fn census_cross_checks(
    entries: &[CensusEntry],
    cfg: &EvalConfig,
    out: &mut Vec<CheckLine>,
) -> Result<()> {
    let get = |name: &str| entries.iter().find(|e| e.name == name);
    let mut push = |check: &str, ok: bool| {
        out.push(CheckLine {
            subject: "census".to_string(),
            check: check.to_string(),
            ok,
            detail: None,
        });
    };

    if let (Some(t), Some(m)) = (get("trefoil"), get("trefoil_mirror")) {
        let jt = jones(&t.diagram, cfg)?;
        let jm = jones(&m.diagram, cfg)?;
        push("jones separates the trefoil chiralities", jt != jm);
        push("mirroring inverts jones of the trefoil", jm == jt.invert_var(0));
    }
    if let Some(f) = get("figure_eight") {
        let jf = jones(&f.diagram, cfg)?;
        push("figure eight jones is palindromic", jf == jf.invert_var(0));
    }
    if let (Some(g), Some(t)) = (get("granny"), get("trefoil")) {
        let jt = jones(&t.diagram, cfg)?;
        push(
            "granny jones factors as trefoil squared",
            jones(&g.diagram, cfg)? == jt.mul(&jt),
        );
        let q_hom = Homomorphism::q_poly();
        let qt = q_hom
            .specialize(&invariant_b1(&t.diagram, cfg)?.element)
            .map_err(EvalError::from)?;
        let qg = q_hom
            .specialize(&invariant_b1(&g.diagram, cfg)?.element)
            .map_err(EvalError::from)?;
        push("granny q factors as trefoil squared", qg == qt.mul(&qt));
    }
    if let (Some(s), Some(t), Some(m)) = (get("square"), get("trefoil"), get("trefoil_mirror")) {
        let js = jones(&s.diagram, cfg)?;
        let jt = jones(&t.diagram, cfg)?;
        let jm = jones(&m.diagram, cfg)?;
        push(
            "square jones factors as trefoil times mirror",
            js == jt.mul(&jm),
        );
    }
    if let (Some(a), Some(b)) = (get("trefoil"), get("trefoil_3strand")) {
        push(
            "both trefoil presentations agree",
            jones(&a.diagram, cfg)? == jones(&b.diagram, cfg)?
                && invariant_b1(&a.diagram, cfg)?.element
                    == invariant_b1(&b.diagram, cfg)?.element,
        );
    }
    if let (Some(h), Some(u)) = (get("hopf"), get("unlink2")) {
        push(
            "the module element separates hopf from the unlink",
            invariant_b1(&h.diagram, cfg)?.element != invariant_b1(&u.diagram, cfg)?.element,
        );
    }
    if let (Some(p), Some(u)) = (get("unknot_poked"), get("unknot")) {
        push(
            "reducible unknot matches the unknot",
            invariant_b1(&p.diagram, cfg)?.element == invariant_b1(&u.diagram, cfg)?.element,
        );
    }
    if let (Some(p), Some(u)) = (get("unlink2_poked"), get("unlink2")) {
        push(
            "reducible unlink matches the unlink",
            invariant_b1(&p.diagram, cfg)?.element == invariant_b1(&u.diagram, cfg)?.element,
        );
    }
    Ok(())
}

fn rewrite_checks(seed: u64, out: &mut Vec<CheckLine>) {
    for (pres, label) in [
        (Presentation::B1, "b1"),
        (Presentation::B1A, "b1a"),
        (Presentation::B2, "b2"),
    ] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = true;
        for _ in 0..40 {
            let x = sample::random_element(&mut rng, pres);
            let nf = x.normalize(pres);
            ok &= nf.normalize(pres) == nf;
            for shuffle in 0..6 {
                ok &= x.normalize_shuffled(pres, shuffle) == nf;
            }
        }
        for rel in relations(pres, false, 4) {
            ok &= rel.lhs.normalize(pres) == rel.rhs.normalize(pres);
        }
        out.push(CheckLine {
            subject: "rewrite".to_string(),
            check: format!("{label} normal forms are unique and honor the relations"),
            ok,
            detail: None,
        });
    }
}

fn spec_checks(n_max: u32, out: &mut Vec<CheckLine>) -> Result<()> {
    for hom in [Homomorphism::jones(), Homomorphism::q_poly()] {
        let residuals = hom.check(n_max).map_err(EvalError::from)?;
        let bad: Vec<&str> = residuals
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(label, _)| label.as_str())
            .collect();
        out.push(CheckLine {
            subject: "specialization".to_string(),
            check: format!("{} kills every relation through v_{n_max}", hom.name),
            ok: bad.is_empty(),
            detail: (!bad.is_empty()).then(|| bad.join(", ")),
        });
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<bool> {
    let cfg = args.eval.config();
    let mut lines = Vec::new();

    let single = if let Some(code) = &args.code {
        Some((code.clone(), parse_diagram(code)?))
    } else if let Some(path) = &args.file {
        Some(diagram_from_file(path)?)
    } else if let Some(word) = &args.braid {
        Some(diagram_from_braid(word)?)
    } else {
        None
    };

    if let Some((subject, d)) = single {
        diagram_checks(&subject, &d, args.trials, args.seed, &cfg, &mut lines)?;
    } else {
        let entries = match &args.census {
            Some(path) => census::load_file(path)?,
            None => census::load_builtin()?,
        };
        for entry in &entries {
            diagram_checks(
                &entry.name,
                &entry.diagram,
                args.trials,
                args.seed,
                &cfg,
                &mut lines,
            )?;
        }
        census_cross_checks(&entries, &cfg, &mut lines)?;
        rewrite_checks(args.seed, &mut lines);
        spec_checks(args.n_max, &mut lines)?;
    }

    let failed = lines.iter().filter(|l| !l.ok).count();
    match args.format {
        Format::Text => {
            for line in &lines {
                println!("{}", line.text());
            }
            println!("{} checks, {} failed", lines.len(), failed);
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&lines)?),
    }
    Ok(failed == 0)
}

fn run_table(args: TableArgs) -> Result<()> {
    let entries = match &args.census {
        Some(path) => census::load_file(path)?,
        None => census::load_builtin()?,
    };
    let cfg = args.eval.config();

    let mut rows: Vec<(String, usize, usize, Vec<String>)> = Vec::new();
    for entry in &entries {
        let mut values = Vec::new();
        for &inv in &args.invariant {
            let (value, _, _) = eval_value(inv, &entry.diagram, &args.spec, &cfg)
                .with_context(|| format!("entry '{}'", entry.name))?;
            values.push(value);
        }
        rows.push((
            entry.name.clone(),
            entry.diagram.crossing_count(),
            entry.diagram.mu(),
            values,
        ));
    }

    let headers: Vec<&str> = args.invariant.iter().map(|i| i.name()).collect();
    match args.format {
        TableFormat::Text => {
            let name_width = rows
                .iter()
                .map(|r| r.0.len())
                .chain(["name".len()])
                .max()
                .unwrap();
            println!("{:name_width$}  cr  mu  {}", "name", headers.join("  "));
            for (name, crossings, mu, values) in &rows {
                println!("{name:name_width$}  {crossings:>2}  {mu:>2}  {}", values.join("  "));
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let mut head = vec!["name", "crossings", "mu"];
            head.extend(&headers);
            w.write_record(&head)?;
            for (name, crossings, mu, values) in &rows {
                let mut rec = vec![name.clone(), crossings.to_string(), mu.to_string()];
                rec.extend(values.iter().cloned());
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            #[derive(serde::Serialize)]
            struct Row<'a> {
                name: &'a str,
                crossings: usize,
                mu: usize,
                values: std::collections::BTreeMap<&'a str, &'a str>,
            }
            let out: Vec<Row> = rows
                .iter()
                .map(|(name, crossings, mu, values)| Row {
                    name,
                    crossings: *crossings,
                    mu: *mu,
                    values: headers
                        .iter()
                        .copied()
                        .zip(values.iter().map(|v| v.as_str()))
                        .collect(),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(())
}

fn run_check_spec(args: CheckSpecArgs) -> Result<bool> {
    let hom = homs::load(&args.spec)?;
    let residuals = hom.check(args.n_max).map_err(EvalError::from)?;
    let lines: Vec<CheckLine> = residuals
        .iter()
        .map(|(label, residual)| CheckLine {
            subject: hom.name.clone(),
            check: label.clone(),
            ok: residual.is_zero(),
            detail: (!residual.is_zero()).then(|| format!("residual {}", residual.render())),
        })
        .collect();
    let failed = lines.iter().filter(|l| !l.ok).count();
    match args.format {
        Format::Text => {
            for line in &lines {
                println!("{}", line.text());
            }
            println!("{} relations, {} violated", lines.len(), failed);
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&lines)?),
    }
    Ok(failed == 0)
}

fn run_relations(args: RelationsArgs) -> Result<bool> {
    let pres = match args.presentation.as_str() {
        "b1" => Presentation::B1,
        "b1a" => Presentation::B1A,
        "b2" => Presentation::B2,
        other => bail!("unknown presentation '{other}' (expected b1, b1a, or b2)"),
    };
    if args.writhe_module && pres != Presentation::B2 {
        bail!("--writhe-module applies to presentation b2 only");
    }
    let mut ok = true;
    for rel in relations(pres, args.writhe_module, args.n_max) {
        let status = if args.writhe_module {
            // The rewrite system targets the plain module, so these are
            // only printed, not reduced.
            String::new()
        } else if rel.lhs.normalize(pres) == rel.rhs.normalize(pres) {
            "  [reduces]".to_string()
        } else {
            ok = false;
            "  [MISMATCH]".to_string()
        };
        println!(
            "{}: {} = {}{status}",
            rel.label,
            rel.lhs.render(),
            rel.rhs.render()
        );
    }
    Ok(ok)
}
