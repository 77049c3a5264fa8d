//! Argument parsing and command execution for the `normord` binary. Kept in a
//! library so the integration tests can drive it without spawning processes.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use normord::bijections::{
    contraction_to_seq_p, contraction_to_seq_stirling, seq_to_contraction_p, seq_to_contraction_stirling,
};
use normord::grammar::{derive_chain, generate, shift_apply, GenSequence, Semantics};
use normord::numbers::{rook_numbers, Family, FerrersBoard, Params, Triangle};
use normord::verify::{run_suite, Budget, Report, Suite};
use normord::weyl::{contraction_stats, enumerate_contractions, normal_order, normal_order_p, Contraction};
use normord::{Error, Grammar, Monomial, Polynomial, Symbol, WeylWord};

#[derive(Debug, Parser)]
#[command(name = "normord", version, about = "Grammars, normal ordering and Stirling-type numbers, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rows of a number triangle.
    Triangle(TriangleArgs),
    /// Iterated grammar derivative D^steps(start).
    Derive(DeriveArgs),
    /// A product of indexed grammar derivatives applied to start.
    DeriveChain(ChainArgs),
    /// Normal form of a word in c (creation) and a (annihilation).
    NormalOrder(WordArgs),
    /// Every contraction of a word.
    Contractions(WordArgs),
    /// Generation sequence to contraction of (ca)^n, or the whole table.
    Bijection(BijectionArgs),
    /// Rook numbers of a Ferrers board.
    Rook(RookArgs),
    /// Run verification suites; exits 1 if any case fails.
    Verify(VerifyArgs),
    /// The shift operator exp(lambda D) applied to start, truncated.
    Shift(ShiftArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    #[arg(long)]
    pub family: String,
    /// Largest row index.
    #[arg(long)]
    pub n: u32,
    /// Print only column k of row n.
    #[arg(long)]
    pub k: Option<u32>,
    /// `key=value`, value an integer, a polynomial, or `sym`.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, Polynomial)>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct GrammarSource {
    /// Rules such as `x -> x*y; y -> y`. Defaults to the Stirling grammar.
    #[arg(long, conflicts_with = "grammar_file")]
    pub grammar: Option<String>,
    #[arg(long)]
    pub grammar_file: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct DeriveArgs {
    #[command(flatten)]
    pub grammar: GrammarSource,
    #[arg(long, default_value = "x")]
    pub start: String,
    #[arg(long, default_value_t = 1)]
    pub steps: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    /// Operator order, rightmost acts first: `D5 D3 D1`, `5,3,1`, `Dq2 Dq1`.
    #[arg(long)]
    pub chain: String,
    #[arg(long, default_value = "x")]
    pub start: String,
    /// `q=value` for the q-indexed grammars; symbolic by default.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, Polynomial)>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Letters `c`, `a` (or `x`, `d`) with `(..)^n` repetition.
    #[arg(long)]
    pub word: String,
    /// `p=value` selects the p-deformed normal form.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, Polynomial)>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    /// Comma-separated generation sequence, e.g. `1,2,1,3`.
    #[arg(long, conflicts_with = "word")]
    pub seq: Option<String>,
    /// A word `(ca)^n`: list every contraction with both labels.
    #[arg(long)]
    pub word: Option<String>,
    /// `stirling` or `p`.
    #[arg(long, default_value = "p")]
    pub family: String,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct RookArgs {
    /// Column heights `h1,h2,...`, nondecreasing.
    #[arg(long, conflicts_with = "n")]
    pub board: Option<String>,
    /// The board `F(1,1,3,3,...,2n-1,2n-1)`.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A suite name or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 8)]
    pub max_n: u32,
    /// Shift-operator order; defaults to `max_n`.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct ShiftArgs {
    #[command(flatten)]
    pub grammar: GrammarSource,
    #[arg(long, default_value = "x")]
    pub start: String,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn error(message: String, code: i32) -> Self {
        Outcome { stdout: String::new(), stderr: message, code }
    }
}

/// Usage problems are exit code 2, everything else that stops a command is 1.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge(_) | Error::Inconsistent(_) => Failure::Compute(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_param(s: &str) -> Result<(String, Polynomial), String> {
    let (key, value) = s.split_once('=').ok_or_else(|| format!("expected key=value, got `{s}`"))?;
    let key = key.trim();
    if key.is_empty() {
        return Err(format!("empty parameter name in `{s}`"));
    }
    let value = value.trim();
    let poly = if value == "sym" {
        Polynomial::var(key)
    } else {
        value.parse().map_err(|e: Error| e.to_string())?
    };
    Ok((key.to_string(), poly))
}

pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

/// Parses and executes; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::error(text, 2)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Triangle(a) => triangle(a),
        Command::Derive(a) => derive(a),
        Command::DeriveChain(a) => derive_chain_cmd(a),
        Command::NormalOrder(a) => normal_order_cmd(a),
        Command::Contractions(a) => contractions(a),
        Command::Bijection(a) => bijection(a),
        Command::Rook(a) => rook(a),
        Command::Verify(a) => verify(a),
        Command::Shift(a) => shift(a),
    };
    match result {
        Ok(mut out) => {
            if !out.stdout.ends_with('\n') {
                out.stdout.push('\n');
            }
            out
        }
        Err(Failure::Usage(msg)) => Outcome::error(format!("error: {msg}\n"), 2),
        Err(Failure::Compute(msg)) => Outcome::error(format!("error: {msg}\n"), 1),
    }
}

fn format_or(f: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = f.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(format!("--format {} is not available for this command", format_name(f))))
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Plain => "plain",
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable value")
}

fn parse<T: FromStr<Err = Error>>(what: &str, text: &str) -> Result<T, Failure> {
    text.parse().map_err(|e: Error| usage(format!("{what}: {e}")))
}

fn load_grammar(src: &GrammarSource) -> Result<Grammar, Failure> {
    let text = match (&src.grammar, &src.grammar_file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Ok(Grammar::stirling()),
    };
    parse("--grammar", &text)
}

fn triangle(a: &TriangleArgs) -> CmdResult {
    let format = format_or(a.format, Format::Plain, &[Format::Json, Format::Csv, Format::Plain])?;
    let family: Family = parse("--family", &a.family)?;
    let mut params = Params::new();
    for (k, v) in &a.params {
        if params.insert(k.clone(), v.clone()).is_some() {
            return Err(usage(format!("parameter `{k}` given twice")));
        }
    }
    if a.n > 60 {
        return Err(Failure::Compute(Error::TooLarge(format!("triangle rows up to n = 60, got {}", a.n)).to_string()));
    }
    let t = Triangle::build(family, a.n, &params)?;
    if let Some(k) = a.k {
        let value = t.entry(a.n, k);
        let text = match format {
            Format::Json => pretty(&json!({
                "family": family.name(),
                "params": t.params(),
                "n": a.n,
                "k": k,
                "value": value,
            })),
            Format::Csv => format!("n,k,value\n{},{k},{value}", a.n),
            Format::Plain => value.to_string(),
        };
        return Ok(Outcome::ok(text));
    }
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&serde_json::to_value(&t).expect("serializable triangle")),
        Format::Csv => t.to_csv(),
        Format::Plain => t.to_plain(),
    }))
}

fn render_for(g: &Grammar, p: &Polynomial) -> String {
    let vars: BTreeSet<Symbol> = g.variables();
    p.render_grouped(&vars)
}

fn derive(a: &DeriveArgs) -> CmdResult {
    let format = format_or(a.format, Format::Plain, &[Format::Json, Format::Plain])?;
    let g = load_grammar(&a.grammar)?;
    let start: Polynomial = parse("--start", &a.start)?;
    if a.steps > 64 {
        return Err(Failure::Compute(format!("instance too large: at most 64 steps, got {}", a.steps)));
    }
    let result = g.derive_n(&start, a.steps);
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&json!({
            "grammar": g.to_string(),
            "start": start,
            "steps": a.steps,
            "result": result,
        })),
        _ => render_for(&g, &result),
    }))
}

/// `D5`, `5`, `D_5`, `q2`, `Dq2`.
fn parse_chain(text: &str, q: &Symbol) -> Result<Vec<Grammar>, Failure> {
    let items: Vec<&str> = text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
    if items.is_empty() {
        return Err(usage("--chain is empty"));
    }
    items
        .iter()
        .map(|item| {
            let rest = item.strip_prefix('D').unwrap_or(item);
            let rest = rest.strip_prefix('_').unwrap_or(rest);
            let bad = || usage(format!("bad chain item `{item}`; expected e.g. D3 or Dq2"));
            match rest.strip_prefix('q') {
                Some(i) => i.parse::<u32>().map(|i| Grammar::q_indexed(i, q)).map_err(|_| bad()),
                None => rest.parse::<i64>().map(Grammar::indexed).map_err(|_| bad()),
            }
        })
        .collect()
}

fn derive_chain_cmd(a: &ChainArgs) -> CmdResult {
    let format = format_or(a.format, Format::Plain, &[Format::Json, Format::Plain])?;
    let q = Symbol::new("q");
    let chain = parse_chain(&a.chain, &q)?;
    let start: Polynomial = parse("--start", &a.start)?;
    let mut result = derive_chain(&chain, &start)?;
    for (k, v) in &a.params {
        if k != "q" {
            return Err(usage(format!("derive-chain takes only `q`, got `{k}`")));
        }
        result = result.substitute(&q, v);
    }
    let vars = BTreeSet::from([Symbol::new("x"), Symbol::new("y")]);
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&json!({
            "chain": a.chain,
            "start": start,
            "result": result,
        })),
        _ => result.render_grouped(&vars),
    }))
}

fn normal_order_cmd(a: &WordArgs) -> CmdResult {
    let format = format_or(a.format, Format::Plain, &[Format::Json, Format::Plain])?;
    let word: WeylWord = parse("--word", &a.word)?;
    if word.len() > 24 {
        return Err(Failure::Compute(format!("instance too large: words up to 24 letters, got {}", word.len())));
    }
    let nf = match a.params.as_slice() {
        [] => normal_order(&word),
        [(k, v)] if k == "p" => {
            let p = Symbol::new("p");
            normal_order_p(&word, &p).substitute(&p, v)
        }
        _ => return Err(usage("normal-order takes at most the parameter `p`")),
    };
    Ok(Outcome::ok(match format {
        Format::Json => {
            let terms: Vec<Value> = nf
                .terms()
                .map(|(i, j, c)| json!({"c": i, "a": j, "coefficient": c}))
                .collect();
            pretty(&json!({"word": word, "normal_form": nf.to_string(), "terms": terms}))
        }
        _ => nf.to_string(),
    }))
}

fn contraction_json(c: &Contraction) -> Value {
    json!({
        "contraction": c.to_string(),
        "edges": c.edges_one_based(),
        "stats": contraction_stats(c),
    })
}

fn contractions(a: &WordArgs) -> CmdResult {
    let format = format_or(a.format, Format::Plain, &[Format::Json, Format::Csv, Format::Plain])?;
    if !a.params.is_empty() {
        return Err(usage("contractions takes no parameters"));
    }
    let word: WeylWord = parse("--word", &a.word)?;
    if word.len() > 16 {
        return Err(Failure::Compute(format!("instance too large: words up to 16 letters, got {}", word.len())));
    }
    let all = enumerate_contractions(&word);
    let text = match format {
        Format::Json => pretty(&Value::Array(all.iter().map(contraction_json).collect())),
        Format::Csv => {
            let mut out = String::from("contraction,edge_count,adjacent_edge_count,degree0_black_count,degree0_white_count\n");
            for c in &all {
                let s = contraction_stats(c);
                writeln!(
                    out,
                    "\"{c}\",{},{},{},{}",
                    s.edge_count, s.adjacent_edge_count, s.degree0_black_count, s.degree0_white_count
                )
                .unwrap();
            }
            out
        }
        Format::Plain => {
            let mut out = format!("{} contractions of {word}\n", all.len());
            for c in &all {
                writeln!(out, "{c}").unwrap();
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BijectionFamily {
    Stirling,
    P,
}

fn bijection(a: &BijectionArgs) -> CmdResult {
    let format = format_or(a.format, Format::Plain, &[Format::Json, Format::Plain])?;
    let family = match a.family.as_str() {
        "stirling" => BijectionFamily::Stirling,
        "p" => BijectionFamily::P,
        other => return Err(usage(format!("--family for bijection is `stirling` or `p`, got `{other}`"))),
    };
    match (&a.seq, &a.word) {
        (Some(seq), None) => bijection_seq(seq, family, format),
        (None, Some(word)) => bijection_table(word, format),
        _ => Err(usage("bijection needs --seq or --word")),
    }
}

fn bijection_seq(text: &str, family: BijectionFamily, format: Format) -> CmdResult {
    let entries: Vec<u32> = text
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("--seq: expected comma-separated positive integers, got `{text}`")))?;
    if entries.len() > 12 {
        return Err(Failure::Compute(format!("instance too large: sequences up to length 12, got {}", entries.len())));
    }
    let (semantics, name) = match family {
        BijectionFamily::Stirling => (Semantics::Stirling, "stirling"),
        BijectionFamily::P => (Semantics::PGrammar, "p"),
    };
    let seq = GenSequence::new(entries, semantics)?;
    let (contraction, generated) = match family {
        BijectionFamily::Stirling => {
            let c = seq_to_contraction_stirling(&seq)?;
            let start = Monomial::from_exponents([(Symbol::new("x"), 1), (Symbol::new("y"), 1)]);
            let g = generate(&Grammar::stirling(), &start, &seq)?;
            (c, g.value())
        }
        BijectionFamily::P => {
            let c = seq_to_contraction_p(&seq)?;
            let g = generate(&Grammar::shifted_stirling(&Polynomial::var("p")), &Monomial::var(Symbol::new("x")), &seq)?;
            (c, g.value())
        }
    };
    Ok(Outcome::ok(match format {
        Format::Json => {
            pretty(&json!({
                "sequence": seq.to_string(),
                "family": name,
                "contraction": contraction_json(&contraction),
                "generated": generated,
            }))
        }
        _ => {
            format!("sequence: {seq} ({name})\ncontraction: {contraction}\ngenerated: {generated}")
        }
    }))
}

fn bijection_table(text: &str, format: Format) -> CmdResult {
    let word: WeylWord = parse("--word", text)?;
    let n = word
        .number_power_exponent()
        .ok_or_else(|| usage(format!("--word must be (ca)^n, got `{word}`")))?;
    if n > 8 {
        return Err(Failure::Compute(format!("instance too large: (ca)^n with n <= 8, got {n}")));
    }
    let mut rows = Vec::new();
    for c in enumerate_contractions(&word) {
        let s = contraction_to_seq_stirling(&c)?;
        let p = contraction_to_seq_p(&c)?;
        rows.push((c, s, p));
    }
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(c, s, p)| json!({"contraction": c.to_string(), "stirling": s.to_string(), "p": p.to_string()}))
                .collect(),
        )),
        _ => {
            let mut out = String::from("stirling  p  contraction\n");
            for (c, s, p) in &rows {
                writeln!(out, "{s}  {p}  {c}").unwrap();
            }
            out
        }
    }))
}

fn rook(a: &RookArgs) -> CmdResult {
    let format = format_or(a.format, Format::Plain, &[Format::Json, Format::Csv, Format::Plain])?;
    let board = match (&a.board, a.n) {
        (Some(text), None) => parse::<FerrersBoard>("--board", text)?,
        (None, Some(n)) if n <= 32 => FerrersBoard::doubled_odd(n, false),
        (None, Some(n)) => return Err(Failure::Compute(format!("instance too large: n <= 32, got {n}"))),
        _ => return Err(usage("rook needs --board or --n")),
    };
    if board.columns() > 24 {
        return Err(Failure::Compute(format!("instance too large: at most 24 columns, got {}", board.columns())));
    }
    let numbers = rook_numbers(&board);
    let cells: Vec<String> = numbers.iter().map(|v| v.to_string()).collect();
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&json!({"board": board.to_string(), "heights": board.heights(), "rook_numbers": cells})),
        Format::Csv => {
            let mut out = String::from("k,r_k\n");
            for (k, v) in cells.iter().enumerate() {
                writeln!(out, "{k},{v}").unwrap();
            }
            out
        }
        Format::Plain => format!("{board}: {}", cells.join(", ")),
    }))
}

fn verify(a: &VerifyArgs) -> CmdResult {
    let format = format_or(a.format, Format::Json, &[Format::Json, Format::Plain])?;
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![parse("--suite", &a.suite)?]
    };
    let mut budget = Budget::for_max_n(a.max_n);
    if let Some(order) = a.order {
        budget.shift_order = order;
    }
    budget.validate()?;

    // suites are independent; run them side by side and keep the listed order
    let reports: Vec<Report> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_suite(s, &budget))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect::<Result<_, _>>()
    })?;
    let pass = reports.iter().all(Report::pass);
    let text = match format {
        Format::Json if reports.len() == 1 => pretty(&serde_json::to_value(&reports[0]).expect("serializable report")),
        Format::Json => pretty(&json!({"pass": pass, "reports": reports})),
        _ => reports.iter().map(Report::to_table).collect::<Vec<_>>().join("\n"),
    };
    Ok(Outcome {
        stdout: text,
        stderr: String::new(),
        code: if pass { 0 } else { 1 },
    })
}

fn shift(a: &ShiftArgs) -> CmdResult {
    let format = format_or(a.format, Format::Plain, &[Format::Json, Format::Plain])?;
    let g = load_grammar(&a.grammar)?;
    let start: Polynomial = parse("--start", &a.start)?;
    if a.order > 32 {
        return Err(Failure::Compute(format!("instance too large: order <= 32, got {}", a.order)));
    }
    let series = shift_apply(&g, &start, a.order)?;
    Ok(Outcome::ok(match format {
        Format::Json => {
            let egf: Vec<Polynomial> = (0..=a.order).map(|n| series.egf_coefficient(n)).collect();
            pretty(&json!({
                "grammar": g.to_string(),
                "start": start,
                "variable": series.variable().name(),
                "order": a.order,
                "coefficients": series.coefficients(),
                "egf_coefficients": egf,
            }))
        }
        _ => series.to_string(),
    }))
}
