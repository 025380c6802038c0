//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification or check failure, 2 invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{format_rational, parse_rational, q, Context, Q};
use crate::error::{Error, Result};
use crate::factorizations::{
    ar_partner, ar_translate, check_ar_pairings, det_profile, make_factorization_with,
    Factorization, MarkConvention,
};
use crate::families::build_x;
use crate::relations::{eliminate_traced, presentation_from_ext, relation_matrix};
use crate::serial::{
    factorization_to_doc, factorizations_from_json, matrix_to_doc, to_json, MatrixDoc,
    WordSpecDoc,
};
use crate::sweep::{check_all, compare_pipelines, CheckOptions, Golden, PipelineAgreement};
use crate::words::{enumerate_words, word_string, Marks, WordKind, WordSpec};

#[derive(Parser, Debug)]
#[command(
    name = "t44",
    version,
    about = "Matrix factorizations for the four-line curve singularity T44"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form Phi for a word, its partner Psi and the verification report.
    Generate(JobConfig),
    /// Ext matrix, presentation, elimination steps and the derived Phi.
    Derive(JobConfig),
    /// Re-verify factorizations read from JSON.
    Verify(JobConfig),
    /// Translate one factorization, or check every pairing rule.
    Ar(JobConfig),
    /// List the admissible words up to a size.
    Words(JobConfig),
    /// Run every acceptance check.
    CheckAll(JobConfig),
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    #[default]
    Stripe,
    Literal,
}

impl From<ConventionArg> for MarkConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Stripe => MarkConvention::Stripe,
            ConventionArg::Literal => MarkConvention::Literal,
        }
    }
}

#[derive(Args, Clone, Debug, Default)]
pub struct JobConfig {
    /// Word kind: w0 .. w10.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    /// "+" or "-" for W2..W5, two signs such as "+-" for W1.
    #[arg(long = "mark", visible_alias = "marks", default_value = "", allow_hyphen_values = true)]
    pub marks: String,
    #[arg(long)]
    pub transpose: bool,
    /// Exact rational "p" or "p/q"; repeat for several values.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub degree_bound: Option<u32>,
    /// Render entries in x, y instead of z-form.
    #[arg(long)]
    pub expanded: bool,
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Golden matrices replacing the embedded ones.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub convention: ConventionArg,
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// 1 for failed checks, 2 for bad input.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_)
        | Error::NoPolynomialSolution(_)
        | Error::Singular
        | Error::NotZMonomial
        | Error::NonSquareResult { .. }
        | Error::NotDivisible(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (program name first) and runs the command. `stdin` is
/// read only when a command needs input and `--in` is absent.
pub fn run<I, T>(args: I, stdin: impl FnOnce() -> std::io::Result<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Generate(c) => cmd_generate(c),
        Command::Derive(c) => cmd_derive(c),
        Command::Verify(c) => read_input(c, stdin).and_then(|s| cmd_verify(c, &s)),
        Command::Ar(c) => cmd_ar(c),
        Command::Words(c) => cmd_words(c),
        Command::CheckAll(c) => cmd_check_all(c),
    };
    let cfg = match &cli.command {
        Command::Generate(c)
        | Command::Derive(c)
        | Command::Verify(c)
        | Command::Ar(c)
        | Command::Words(c)
        | Command::CheckAll(c) => c,
    };
    match result {
        Ok((code, text)) => match &cfg.out {
            Some(path) => match fs::write(path, &text) {
                Ok(()) => Outcome {
                    code,
                    ..Outcome::default()
                },
                Err(e) => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
            None => Outcome {
                code,
                stdout: text,
                stderr: String::new(),
            },
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_input(c: &JobConfig, stdin: impl FnOnce() -> std::io::Result<String>) -> Result<String> {
    match &c.input {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display()))),
        None => stdin().map_err(|e| Error::Parse(format!("cannot read stdin: {e}"))),
    }
}

/// Reads all of standard input.
pub fn read_stdin() -> std::io::Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

impl JobConfig {
    fn lambdas(&self) -> Result<Vec<Q>> {
        if self.lambda.is_empty() {
            return Ok(vec![q(2)]);
        }
        self.lambda.iter().map(|s| parse_rational(s)).collect()
    }

    fn mu(&self) -> Result<Q> {
        self.mu
            .as_deref()
            .map(parse_rational)
            .transpose()
            .map(|m| m.unwrap_or_else(|| q(3)))
    }

    fn contexts(&self) -> Result<Vec<Context>> {
        let mu = self.mu()?;
        self.lambdas()?
            .into_iter()
            .map(|l| Context::new(l, Some(mu.clone())))
            .collect()
    }

    fn spec(&self) -> Result<WordSpec> {
        let family = self
            .family
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter("--family is required".into()))?;
        let kind: WordKind = family.parse()?;
        let marks: Marks = self.marks.parse()?;
        let n = if kind.has_size() {
            Some(self.n.ok_or_else(|| {
                Error::InvalidSize(format!("{kind} needs --n"))
            })?)
        } else {
            if self.n.is_some() {
                return Err(Error::InvalidSize(format!("{kind} takes no size")));
            }
            None
        };
        let mu = if kind == WordKind::W0 {
            Some(self.mu()?)
        } else {
            None
        };
        WordSpec::new(kind, n, self.transpose, marks, mu)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn render_factorization(f: &Factorization, expanded: bool) -> Result<String> {
    let ctx = f.context()?;
    let r = f.report();
    let label = f.spec().map(|w| w.label()).unwrap_or_else(|| "(Phi, Psi)".into());
    let profile = |p: Option<&crate::arith::ZMonomial>| {
        p.map(|z| z.to_string()).unwrap_or_else(|| "0".into())
    };
    let mut out = format!(
        "{label}  lambda={}  mu={}  d={}\n",
        format_rational(f.lambda()),
        f.mu().map(format_rational).unwrap_or_else(|| "-".into()),
        f.d()
    );
    out.push_str("Phi =\n");
    out.push_str(&f.phi().render(&ctx, expanded));
    out.push_str("Psi =\n");
    out.push_str(&f.psi().render(&ctx, expanded));
    out.push_str(&format!("det Phi = {}\n", profile(f.det_phi())));
    out.push_str(&format!("det Psi = {}\n", profile(f.det_psi())));
    out.push_str(&format!(
        "Phi*Psi = F*I: {}  Psi*Phi = F*I: {}  det Phi*det Psi = F^{}: {}  Phi reduced: {}  Psi reduced: {}\n",
        yes(r.phi_psi_is_f),
        yes(r.psi_phi_is_f),
        f.d(),
        yes(r.det_product_is_f_power),
        yes(r.phi_reduced),
        yes(r.psi_reduced)
    ));
    Ok(out)
}

fn emit_factorizations(c: &JobConfig, fs: &[Factorization]) -> Result<String> {
    Ok(match c.format {
        Format::Json if fs.len() == 1 => to_json(&factorization_to_doc(&fs[0])),
        Format::Json => to_json(&fs.iter().map(factorization_to_doc).collect::<Vec<_>>()),
        Format::Text => {
            let blocks = fs
                .iter()
                .map(|f| render_factorization(f, c.expanded))
                .collect::<Result<Vec<_>>>()?;
            blocks.join("\n")
        }
    })
}

fn factorize(c: &JobConfig, spec: &WordSpec, ctx: &Context) -> Result<Factorization> {
    let f = make_factorization_with(spec, ctx, c.convention.into())?;
    if let Some(bound) = c.degree_bound {
        // A user bound re-solves for Psi; the partner is unique, so only
        // solvability can change.
        let psi = crate::matrix::solve_psi(&f.context()?, f.phi(), bound)?;
        let g = Factorization::new(&f.context()?, f.phi().clone(), psi)?;
        return Ok(g.with_spec(f.spec().cloned().expect("spec attached")));
    }
    Ok(f)
}

pub fn cmd_generate(c: &JobConfig) -> Result<(i32, String)> {
    let spec = c.spec()?;
    let fs = c
        .contexts()?
        .iter()
        .map(|ctx| factorize(c, &spec, ctx))
        .collect::<Result<Vec<_>>>()?;
    Ok((0, emit_factorizations(c, &fs)?))
}

#[derive(Serialize)]
struct ExtDoc {
    row_stripes: [usize; 3],
    col_stripes: [usize; 3],
    entries: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct DeriveDoc {
    word: WordSpecDoc,
    lambda: String,
    x: ExtDoc,
    presentation: Vec<String>,
    steps: Vec<String>,
    phi: MatrixDoc,
    comparison: String,
}

pub fn cmd_derive(c: &JobConfig) -> Result<(i32, String)> {
    let spec = c.spec()?;
    let mut text = String::new();
    let mut docs = Vec::new();
    let mut code = 0;
    for ctx in c.contexts()? {
        let x = build_x(&spec, &ctx)?;
        let p = presentation_from_ext(&x, &ctx);
        let (reduced, steps) = eliminate_traced(&p)?;
        let phi = relation_matrix(&reduced, None)?;
        let comparison = match compare_pipelines(&spec, &ctx)? {
            PipelineAgreement::Permutation { rows, cols } => {
                let id = |v: &[usize]| v.iter().enumerate().all(|(i, &j)| i == j);
                if id(&rows) && id(&cols) {
                    "matches Table 2 (identity permutation)".to_string()
                } else {
                    format!("matches Table 2 up to permutation: rows {rows:?}, columns {cols:?}")
                }
            }
            PipelineAgreement::Profile => format!(
                "agrees with Table 2 in size {} and det profile {}",
                phi.rows(),
                det_profile(&ctx, &phi)?
            ),
            PipelineAgreement::Differs(why) => {
                code = 1;
                format!("differs from Table 2: {why}")
            }
        };
        match c.format {
            Format::Text => {
                text.push_str(&format!(
                    "{}  lambda={}\nword: {}\nX =\n{}\npresentation:\n{}elimination:\n",
                    spec.label(),
                    format_rational(ctx.lambda()),
                    word_string(&spec),
                    x,
                    p.dump(&ctx)
                ));
                for s in &steps {
                    text.push_str(&format!("  {s}\n"));
                }
                text.push_str("minimal presentation:\n");
                text.push_str(&reduced.dump(&ctx));
                text.push_str("Phi =\n");
                text.push_str(&phi.render(&ctx, c.expanded));
                text.push_str(&comparison);
                text.push('\n');
            }
            Format::Json => docs.push(DeriveDoc {
                word: WordSpecDoc::from(&spec),
                lambda: format_rational(ctx.lambda()),
                x: ExtDoc {
                    row_stripes: x.row_stripes(),
                    col_stripes: x.col_stripes(),
                    entries: (0..x.rows())
                        .map(|r| (0..x.cols()).map(|k| format_rational(x.get(r, k))).collect())
                        .collect(),
                },
                presentation: p.dump(&ctx).lines().map(String::from).collect(),
                steps: steps.iter().map(|s| s.to_string()).collect(),
                phi: matrix_to_doc(&phi),
                comparison,
            }),
        }
    }
    let out = match c.format {
        Format::Text => text,
        Format::Json if docs.len() == 1 => to_json(&docs[0]),
        Format::Json => to_json(&docs),
    };
    Ok((code, out))
}

pub fn cmd_verify(c: &JobConfig, input: &str) -> Result<(i32, String)> {
    let fs = factorizations_from_json(input)?;
    let mut out = String::new();
    for f in &fs {
        let label = f.spec().map(|w| w.label()).unwrap_or_else(|| "(Phi, Psi)".into());
        out.push_str(&format!(
            "{label} lambda={} d={}: verified\n",
            format_rational(f.lambda()),
            f.d()
        ));
    }
    if c.format == Format::Json {
        out = emit_factorizations(c, &fs)?;
    }
    Ok((0, out))
}

pub fn cmd_ar(c: &JobConfig) -> Result<(i32, String)> {
    if c.family.is_none() {
        let max_n = c.max_n.unwrap_or(4);
        let mut out = String::new();
        let mut ok = true;
        for ctx in c.contexts()? {
            let r = check_ar_pairings(&ctx, max_n)?;
            ok &= r.passed();
            out.push_str(&r.render());
        }
        return Ok((if ok { 0 } else { 1 }, out));
    }
    let spec = c.spec()?;
    let mut translated = Vec::new();
    let mut notes = String::new();
    let mut code = 0;
    for ctx in c.contexts()? {
        let f = factorize(c, &spec, &ctx)?;
        let t = ar_translate(&f);
        let w = f.spec().expect("spec attached");
        let mu = f.mu().cloned().unwrap_or_else(|| q(3));
        match ar_partner(w, &mu) {
            Some((rule, partner)) => {
                let target = make_factorization_with(&partner, &ctx, c.convention.into())?;
                let (a, b) = (t.det_phi().map(|p| p.z), target.det_phi().map(|p| p.z));
                if a != b {
                    code = 1;
                }
                notes.push_str(&format!(
                    "tau {} ~ {} by {}: det profile {:?} vs {:?} [{}]\n",
                    w.label(),
                    partner.label(),
                    rule.describe(),
                    a.unwrap_or_default(),
                    b.unwrap_or_default(),
                    if a == b { "match" } else { "differ" }
                ));
            }
            None => notes.push_str(&format!("no pairing rule mentions {}\n", w.label())),
        }
        translated.push(t);
    }
    Ok(match c.format {
        Format::Json => (code, emit_factorizations(c, &translated)?),
        Format::Text => (code, format!("{}{}", emit_factorizations(c, &translated)?, notes)),
    })
}

#[derive(Serialize)]
struct WordDoc {
    #[serde(flatten)]
    spec: WordSpecDoc,
    label: String,
    word: String,
}

pub fn cmd_words(c: &JobConfig) -> Result<(i32, String)> {
    let words = enumerate_words(c.max_n.unwrap_or(2));
    Ok((
        0,
        match c.format {
            Format::Text => {
                let w = words.iter().map(|s| s.label().len()).max().unwrap_or(0);
                words
                    .iter()
                    .map(|s| format!("{:<w$}  {}\n", s.label(), word_string(s)))
                    .collect()
            }
            Format::Json => to_json(
                &words
                    .iter()
                    .map(|s| WordDoc {
                        spec: WordSpecDoc::from(s),
                        label: s.label(),
                        word: word_string(s),
                    })
                    .collect::<Vec<_>>(),
            ),
        },
    ))
}

pub fn cmd_check_all(c: &JobConfig) -> Result<(i32, String)> {
    let mut opts = CheckOptions::default();
    if let Some(path) = &c.golden {
        let s = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        opts.golden = Golden::from_json(&s)?;
    }
    if let Some(n) = c.max_n {
        opts.max_n = n;
    }
    if !c.lambda.is_empty() {
        opts.lambdas = c.lambdas()?;
        for l in &opts.lambdas {
            Context::new(l.clone(), None)?;
        }
    }
    if let Some(m) = &c.mu {
        let m = parse_rational(m)?;
        crate::words::check_eigenvalue(&m)?;
        opts.mus = vec![m];
    }
    if let Some(s) = c.seed {
        opts.seed = s;
    }
    let outcomes = check_all(&opts);
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut out: String = outcomes.iter().map(|o| o.line() + "\n").collect();
    if failed == 0 {
        out.push_str(&format!("all {} criteria passed\n", outcomes.len()));
        Ok((0, out))
    } else {
        out.push_str(&format!("{failed} of {} criteria failed\n", outcomes.len()));
        Ok((1, out))
    }
}
