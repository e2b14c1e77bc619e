//! Command-line front end for `seifert-fill`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 time limit reached, 3 the
//! classifier and the embedding search disagree (an internal bug).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::BufRead;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use seifert_fill::classify::{classify_with, ClassifyOptions, Evidence, Reason, Verdict};
use seifert_fill::embedding::{completeness_bound, find_embedding, SearchCertificate, SearchLimits};
use seifert_fill::farey::{find_config1, find_config3, ExtraArc};
use seifert_fill::gompf::{GompfReport, TBranch};
use seifert_fill::plumbing::{build_plumbing, determinant, intersection_form, is_negative_definite, StarGraph};
use seifert_fill::seifert::{parse_manifold, realizability_certificate, RealizabilityCertificate};
use seifert_fill::{neg_cf_expand, riemenschneider_dual, Error, IntersectionLattice, NegCf, Rational, SeifertInvariants};

/// Default time limit, in seconds, for `embed`, `crosscheck` and embedding
/// searches started by `classify` and `batch`.
pub const MAX_SECONDS_ENV: &str = "SEIFERT_FILL_MAX_SECONDS";

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID_INPUT: u8 = 1;
pub const EXIT_TIMEOUT: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(name = "seifert-fill", version, about = "Decide Stein fillability of Seifert fibered 3-manifolds")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Command {
    /// Classify `<e0>;<r1>,<r2>,...` as fillable or not, with evidence.
    Classify {
        #[arg(allow_hyphen_values = true)]
        manifold: String,
        /// Run the embedding search on the plumbing of -Y for special-type
        /// verdicts.
        #[arg(long)]
        embedding: bool,
        #[arg(long, env = MAX_SECONDS_ENV)]
        max_seconds: Option<f64>,
    },
    /// Search for a realizability witness (n, h).
    Realizable {
        #[arg(allow_hyphen_values = true)]
        manifold: String,
    },
    /// Print the Gompf witness map and its derived quantities.
    Witness {
        #[arg(allow_hyphen_values = true)]
        manifold: String,
    },
    /// Print the star-shaped plumbing graph and its intersection form.
    Plumbing {
        #[arg(allow_hyphen_values = true)]
        manifold: String,
    },
    /// Search for an embedding into a negative diagonal lattice. The file
    /// (or `-` for stdin) holds a star graph `{"central":..,"legs":..}` or a
    /// matrix `{"form":[[..],..]}`.
    Embed {
        graph: PathBuf,
        #[arg(long, env = MAX_SECONDS_ENV)]
        max_seconds: Option<f64>,
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Negative continued fraction of a rational below -1.
    Cf {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Riemenschneider dual of a string like `-2,-2,-3`.
    Dual {
        #[arg(allow_hyphen_values = true)]
        cf: String,
    },
    /// Farey tessellation configurations.
    #[command(subcommand)]
    Farey(FareyCommand),
    /// Classify and, for special-type verdicts, confirm that the plumbing of
    /// -Y does not embed.
    Crosscheck {
        #[arg(allow_hyphen_values = true)]
        manifold: String,
        #[arg(long, env = MAX_SECONDS_ENV)]
        max_seconds: Option<f64>,
    },
    /// Classify one manifold per stdin line, printing JSON lines in order.
    Batch {
        #[arg(long)]
        embedding: bool,
        #[arg(long, env = MAX_SECONDS_ENV)]
        max_seconds: Option<f64>,
    },
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum FareyCommand {
    /// Arc (alpha, gamma) with middle point beta between s and r'_2.
    Config1 {
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        r2p: String,
    },
    /// Four-point configuration with its extra arc.
    Config3 {
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        r2p: String,
    },
}

impl Cli {
    /// Arguments that parse back to `self`, program name included.
    pub fn render(&self) -> Vec<String> {
        let mut out = vec!["seifert-fill".to_string()];
        if self.json {
            out.push("--json".into());
        }
        let seconds = |out: &mut Vec<String>, s: &Option<f64>| {
            if let Some(s) = s {
                out.push("--max-seconds".into());
                out.push(s.to_string());
            }
        };
        match &self.command {
            Command::Classify {
                manifold,
                embedding,
                max_seconds,
            } => {
                out.extend(["classify".into(), manifold.clone()]);
                if *embedding {
                    out.push("--embedding".into());
                }
                seconds(&mut out, max_seconds);
            }
            Command::Realizable { manifold } => out.extend(["realizable".into(), manifold.clone()]),
            Command::Witness { manifold } => out.extend(["witness".into(), manifold.clone()]),
            Command::Plumbing { manifold } => out.extend(["plumbing".into(), manifold.clone()]),
            Command::Embed {
                graph,
                max_seconds,
                max_rank,
            } => {
                out.extend(["embed".into(), graph.display().to_string()]);
                seconds(&mut out, max_seconds);
                if let Some(r) = max_rank {
                    out.extend(["--max-rank".into(), r.to_string()]);
                }
            }
            Command::Cf { value } => out.extend(["cf".into(), value.clone()]),
            Command::Dual { cf } => out.extend(["dual".into(), cf.clone()]),
            Command::Farey(FareyCommand::Config1 { s, r2p }) => {
                out.extend(["farey".into(), "config1".into(), s.clone(), r2p.clone()])
            }
            Command::Farey(FareyCommand::Config3 { s, r2p }) => {
                out.extend(["farey".into(), "config3".into(), s.clone(), r2p.clone()])
            }
            Command::Crosscheck { manifold, max_seconds } => {
                out.extend(["crosscheck".into(), manifold.clone()]);
                seconds(&mut out, max_seconds);
            }
            Command::Batch { embedding, max_seconds } => {
                out.push("batch".into());
                if *embedding {
                    out.push("--embedding".into());
                }
                seconds(&mut out, max_seconds);
            }
        }
        out
    }
}

/// What the process prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    pub fn emit(&self) -> ExitCode {
        print!("{}", self.stdout);
        eprint!("{}", self.stderr);
        ExitCode::from(self.code)
    }
}

/// Parses process arguments. Help and version requests come back as a
/// successful [`Outcome`]; usage errors exit with code 1.
pub fn parse_args<I, T>(args: I) -> Result<Cli, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(args).map_err(|e| {
        let text = e.render().to_string();
        if e.use_stderr() {
            Outcome {
                stdout: String::new(),
                stderr: text,
                code: EXIT_INVALID_INPUT,
            }
        } else {
            Outcome::ok(text)
        }
    })
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::input(describe(&e))
    }
}

/// Error message with a caret under the offending position.
fn describe(e: &Error) -> String {
    match e {
        Error::Parse { input, position, .. } => {
            let col = input.chars().take(*position).count();
            format!("{e}\n  {input}\n  {}^", " ".repeat(col))
        }
        _ => e.to_string(),
    }
}

/// One command's result: text and JSON renderings plus the exit code.
struct Report {
    text: String,
    json: Value,
    code: u8,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn BufRead) -> Outcome {
    if let Command::Batch { embedding, max_seconds } = &cli.command {
        return batch(stdin, *embedding, *max_seconds);
    }
    let result = match &cli.command {
        Command::Classify {
            manifold,
            embedding,
            max_seconds,
        } => cmd_classify(manifold, *embedding, *max_seconds),
        Command::Realizable { manifold } => cmd_realizable(manifold),
        Command::Witness { manifold } => cmd_witness(manifold),
        Command::Plumbing { manifold } => cmd_plumbing(manifold),
        Command::Embed {
            graph,
            max_seconds,
            max_rank,
        } => cmd_embed(graph, *max_seconds, *max_rank, stdin),
        Command::Cf { value } => cmd_cf(value),
        Command::Dual { cf } => cmd_dual(cf),
        Command::Farey(FareyCommand::Config1 { s, r2p }) => cmd_config1(s, r2p),
        Command::Farey(FareyCommand::Config3 { s, r2p }) => cmd_config3(s, r2p),
        Command::Crosscheck { manifold, max_seconds } => cmd_crosscheck(manifold, *max_seconds),
        Command::Batch { .. } => unreachable!(),
    };
    match result {
        Ok(report) => {
            let mut stdout = if cli.json {
                serde_json::to_string(&report.json).expect("JSON values serialize")
            } else {
                report.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            let stderr = if report.code == EXIT_TIMEOUT {
                "error: time limit reached before the search finished\n".to_string()
            } else {
                String::new()
            };
            Outcome {
                stdout,
                stderr,
                code: report.code,
            }
        }
        Err(f) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
            code: f.code,
        },
    }
}

fn manifold(text: &str) -> Result<SeifertInvariants, Failure> {
    Ok(parse_manifold(text)?)
}

fn rational(text: &str) -> Result<Rational, Failure> {
    Ok(text.parse::<Rational>()?)
}

fn limits(max_seconds: Option<f64>, max_rank: Option<usize>) -> Result<SearchLimits, Failure> {
    if let Some(s) = max_seconds {
        if !(s.is_finite() && s >= 0.0) {
            return Err(Failure::input(format!("--max-seconds must be a non-negative number, got {s}")));
        }
    }
    Ok(SearchLimits { max_seconds, max_rank })
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    manifold: String,
    #[serde(flatten)]
    verdict: &'a Verdict,
}

pub fn verdict_json(y: &SeifertInvariants, v: &Verdict) -> Value {
    serde_json::to_value(VerdictJson {
        manifold: y.to_string(),
        verdict: v,
    })
    .expect("verdicts serialize")
}

fn map_text(r: &GompfReport) -> String {
    format!("A(r) = {}, n_A = {}", r.map, r.n_a)
}

fn realizability_text(c: &RealizabilityCertificate) -> String {
    match c {
        RealizabilityCertificate::Witness(w) => format!("witness (n, h) = ({}, {})", w.n, w.h),
        RealizabilityCertificate::Exhausted { n_bound } => {
            format!("none: every n < {n_bound} checked, and 1/n > r_3 fails for n >= {n_bound}")
        }
        RealizabilityCertificate::PairSumAtLeastOne => "none: r_1 + r_2 >= 1".into(),
    }
}

fn certificate_text(c: &SearchCertificate) -> String {
    match c {
        SearchCertificate::Found(e) => {
            let mut s = format!("embedding found in rank {}", e.rank);
            for (v, x) in e.vectors.iter().enumerate() {
                let coords: Vec<String> = x.iter().map(i64::to_string).collect();
                write!(s, "\n  x_{v} = ({})", coords.join(", ")).unwrap();
            }
            s
        }
        SearchCertificate::ExhaustedNoEmbedding { searched_rank } => {
            format!("no embedding: every canonical assignment up to rank {searched_rank} exhausted")
        }
        SearchCertificate::Timeout { max_seconds } => format!("timeout after {max_seconds} s: undecided"),
    }
}

pub fn verdict_text(y: &SeifertInvariants, v: &Verdict) -> String {
    let mut s = format!(
        "Y({}; {})\nfillable: {}\nreason: {}",
        y.e0(),
        y.coefficients().iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","),
        if v.fillable { "yes" } else { "no" },
        v.reason.as_str()
    );
    match &v.evidence {
        Some(Evidence::Realizable(w)) => {
            write!(s, "\nrealizability witness (n, h) = ({}, {})", w.seed.n, w.seed.h).unwrap();
            write!(s, "\nGompf map {}", map_text(&w.report)).unwrap();
        }
        Some(Evidence::PairSum(p)) => {
            write!(s, "\nr_1 + r_2 = 1, so s = r'_2 = {}", p.s).unwrap();
        }
        Some(Evidence::Farey(w)) => {
            let c = &w.configuration;
            write!(
                s,
                "\nFarey configuration ({}, {}, {}, {}), extra arc {}",
                c.alpha,
                c.beta,
                c.gamma,
                c.delta,
                extra_arc_name(c.extra_arc)
            )
            .unwrap();
            write!(s, "\nGompf map {}", map_text(&w.report)).unwrap();
        }
        Some(Evidence::SpecialType(e)) => {
            if let Some(c) = &e.report.realizability {
                write!(s, "\nrealizability: {}", realizability_text(c)).unwrap();
            }
            if let Some(c) = &e.embedding {
                write!(s, "\nplumbing of -Y: {}", certificate_text(c)).unwrap();
            }
        }
        None => {}
    }
    s
}

fn extra_arc_name(a: ExtraArc) -> &'static str {
    match a {
        ExtraArc::AlphaGamma => "alpha-gamma",
        ExtraArc::BetaDelta => "beta-delta",
    }
}

fn classify_report(y: &SeifertInvariants, embedding: bool, max_seconds: Option<f64>) -> Result<(Verdict, u8), Failure> {
    let options = ClassifyOptions {
        embedding_search: if embedding { Some(limits(max_seconds, None)?) } else { None },
    };
    let v = classify_with(y, &options);
    let timed_out = matches!(&v.evidence, Some(Evidence::SpecialType(e)) if e.embedding.as_ref().is_some_and(SearchCertificate::is_timeout));
    Ok((v, if timed_out { EXIT_TIMEOUT } else { EXIT_OK }))
}

fn cmd_classify(text: &str, embedding: bool, max_seconds: Option<f64>) -> Result<Report, Failure> {
    let y = manifold(text)?;
    let (v, code) = classify_report(&y, embedding, max_seconds)?;
    Ok(Report {
        text: verdict_text(&y, &v),
        json: verdict_json(&y, &v),
        code,
    })
}

fn cmd_realizable(text: &str) -> Result<Report, Failure> {
    let y = manifold(text)?;
    let rs = y.coefficients();
    let cert = realizability_certificate(rs)?;
    let verified = cert.check(rs);
    let realizable = cert.witness().is_some();
    let text = format!(
        "realizable: {}\n{}\ncertificate re-checked: {}",
        if realizable { "yes" } else { "no" },
        realizability_text(&cert),
        if verified { "ok" } else { "FAILED" }
    );
    let json = json!({
        "manifold": y.to_string(),
        "realizable": realizable,
        "certificate": cert,
        "verified": verified,
    });
    Ok(Report::new(text, json))
}

fn cmd_witness(text: &str) -> Result<Report, Failure> {
    let y = manifold(text)?;
    let v = classify_with(&y, &ClassifyOptions::default());
    let Some(r) = v.gompf_report() else {
        return Err(Failure::input(format!(
            "{y} has no Gompf witness map (verdict: {})",
            v.reason.as_str()
        )));
    };
    let branch = match r.t_branch {
        TBranch::Zero => "A(0) >= 0, t = 0",
        TBranch::ReciprocalAtS => "A(0) in [-1, 0), t = 1/A(s)",
        TBranch::AtR2Prime => "A(0) < -1, t = A(r'_2)",
    };
    let mut text = format!(
        "map: {}  (a, b, c, d) = ({}, {}, {}, {})\nr'_1 = {}, r'_2 = {}, s = {}\nA(0) = {}: {}\nt = {}{}\nm = {}, M = {}\nn_A = {}\ncondition n_A > r'_j for j >= 3: {}",
        r.map,
        r.map.a(),
        r.map.b(),
        r.map.c(),
        r.map.d(),
        r.r1_prime,
        r.r2_prime,
        r.s,
        r.a_at_zero,
        branch,
        r.t,
        if r.boundary_floor { " (floor taken at the boundary value of A(0))" } else { "" },
        r.small_m,
        r.big_m,
        r.n_a,
        if r.condition_holds { "holds" } else { "fails" }
    );
    if v.reason == Reason::FareyWitness {
        text.push_str("\nsource: Farey configuration");
    }
    Ok(Report::new(text, serde_json::to_value(r).expect("reports serialize")))
}

fn form_json(l: &IntersectionLattice) -> Value {
    let mut v = serde_json::to_value(l).expect("lattices serialize");
    v["form"].take()
}

fn cmd_plumbing(text: &str) -> Result<Report, Failure> {
    let y = manifold(text)?;
    let g = build_plumbing(&y);
    let l = intersection_form(&g);
    let det = determinant(&l);
    let definite = is_negative_definite(&l);
    let mut s = format!("central {}\n", g.central);
    for (i, leg) in g.legs.iter().enumerate() {
        writeln!(s, "leg {}: {}", i + 1, leg).unwrap();
    }
    s.push_str("form:\n");
    for i in 0..l.dim() {
        let row: Vec<String> = (0..l.dim()).map(|j| format!("{:>3}", l.entry(i, j))).collect();
        writeln!(s, " {}", row.join("")).unwrap();
    }
    write!(s, "determinant {det}, negative definite: {}", if definite { "yes" } else { "no" }).unwrap();
    let json = json!({
        "manifold": y.to_string(),
        "graph": g,
        "form": form_json(&l),
        "determinant": serde_json::to_value(DetJson(&det)).unwrap(),
        "negative_definite": definite,
    });
    Ok(Report::new(s, json))
}

struct DetJson<'a>(&'a num_bigint::BigInt);

impl Serialize for DetJson<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        seifert_fill::rational::bigint_serde::serialize(self.0, s)
    }
}

/// A star graph or an explicit form.
pub fn parse_lattice(text: &str) -> Result<IntersectionLattice, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    if value.get("form").is_some() {
        serde_json::from_value::<IntersectionLattice>(value).map_err(|e| format!("invalid form: {e}"))
    } else {
        let g: StarGraph = serde_json::from_value(value).map_err(|e| format!("invalid star graph: {e}"))?;
        Ok(intersection_form(&g))
    }
}

fn cmd_embed(
    path: &PathBuf,
    max_seconds: Option<f64>,
    max_rank: Option<usize>,
    stdin: &mut dyn BufRead,
) -> Result<Report, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?
    };
    let l = parse_lattice(&text).map_err(Failure::input)?;
    let cert = find_embedding(&l, &limits(max_seconds, max_rank)?)?;
    let code = if cert.is_timeout() { EXIT_TIMEOUT } else { EXIT_OK };
    Ok(Report {
        text: certificate_text(&cert),
        json: serde_json::to_value(&cert).expect("certificates serialize"),
        code,
    })
}

fn cmd_cf(text: &str) -> Result<Report, Failure> {
    let x = rational(text)?;
    let cf = neg_cf_expand(&x)?;
    Ok(Report::new(cf.to_string(), json!({ "value": x, "cf": cf })))
}

fn cmd_dual(text: &str) -> Result<Report, Failure> {
    let cf: NegCf = text.parse()?;
    let dual = riemenschneider_dual(&cf);
    Ok(Report::new(dual.to_string(), json!({ "cf": cf, "dual": dual })))
}

fn cmd_config1(s: &str, r2p: &str) -> Result<Report, Failure> {
    let (alpha, beta, gamma) = find_config1(&rational(s)?, &rational(r2p)?)?;
    let text = format!("alpha = {alpha}, beta = {beta}, gamma = {gamma}");
    Ok(Report::new(text, json!({ "alpha": alpha, "beta": beta, "gamma": gamma })))
}

fn cmd_config3(s: &str, r2p: &str) -> Result<Report, Failure> {
    let c = find_config3(&rational(s)?, &rational(r2p)?)?;
    let text = format!(
        "alpha = {}, beta = {}, gamma = {}, delta = {}, extra arc {}",
        c.alpha,
        c.beta,
        c.gamma,
        c.delta,
        extra_arc_name(c.extra_arc)
    );
    Ok(Report::new(text, serde_json::to_value(&c).expect("configurations serialize")))
}

fn cmd_crosscheck(text: &str, max_seconds: Option<f64>) -> Result<Report, Failure> {
    let y = manifold(text)?;
    let limits = limits(max_seconds, None)?;
    let v = classify_with(&y, &ClassifyOptions::default());
    let mut out = verdict_text(&y, &v);
    let (cert, agreement, code) = if v.reason == Reason::SpecialType {
        let l = intersection_form(&build_plumbing(&y.reverse_orientation()));
        let cert = find_embedding(&l, &limits)?;
        let full = completeness_bound(&l);
        let (agreement, code) = match &cert {
            SearchCertificate::ExhaustedNoEmbedding { searched_rank } => {
                let ok = num_bigint::BigInt::from(*searched_rank) == full;
                (Some(ok), if ok { EXIT_OK } else { EXIT_DISAGREEMENT })
            }
            SearchCertificate::Found(_) => (Some(false), EXIT_DISAGREEMENT),
            SearchCertificate::Timeout { .. } => (None, EXIT_TIMEOUT),
        };
        write!(out, "\nplumbing of -Y (D = {full}): {}", certificate_text(&cert)).unwrap();
        (Some(cert), agreement, code)
    } else {
        (None, Some(true), EXIT_OK)
    };
    write!(
        out,
        "\nagreement: {}",
        match agreement {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "undecided",
        }
    )
    .unwrap();
    let json = json!({
        "manifold": y.to_string(),
        "verdict": verdict_json(&y, &v),
        "embedding": cert,
        "agreement": agreement,
    });
    Ok(Report { text: out, json, code })
}

fn batch(stdin: &mut dyn BufRead, embedding: bool, max_seconds: Option<f64>) -> Outcome {
    let mut text = String::new();
    if let Err(e) = stdin.read_to_string(&mut text) {
        return Outcome {
            stdout: String::new(),
            stderr: format!("error: cannot read stdin: {e}\n"),
            code: EXIT_INVALID_INPUT,
        };
    }
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let results: Vec<(Value, u8)> = lines
        .par_iter()
        .map(|line| {
            let run = || -> Result<(Value, u8), Failure> {
                let y = manifold(line)?;
                let (v, code) = classify_report(&y, embedding, max_seconds)?;
                Ok((verdict_json(&y, &v), code))
            };
            run().unwrap_or_else(|f| (json!({ "input": line, "error": f.message }), f.code))
        })
        .collect();
    let mut stdout = String::new();
    for (value, _) in &results {
        stdout.push_str(&serde_json::to_string(value).expect("JSON values serialize"));
        stdout.push('\n');
    }
    let code = if results.iter().any(|(_, c)| *c == EXIT_INVALID_INPUT) {
        EXIT_INVALID_INPUT
    } else if results.iter().any(|(_, c)| *c == EXIT_TIMEOUT) {
        EXIT_TIMEOUT
    } else {
        EXIT_OK
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}
