//! Command-line front end for the `fpp` library.

use clap::{Parser, Subcommand, ValueEnum};
use fpp::gln::{self, Example41Report, FppScanReport};
use fpp::io::{self, CertificateFile, DatumSpec, OrbitsInput, ParamFile};
use fpp::lparam::{self, ExponentParam};
use fpp::scalar::serde_rational;
use fpp::vogan_a::{self, GradedDims, Multisegment, OrbitPoset};
use fpp::{weyl, ExponentVector, RootDatum, Scalar, Q};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "fpp", version, about = "Exact checks of the fundamental parallelepiped bound")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input file (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Recorded in the report; every command is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest rank for Weyl group searches.
    #[arg(long, global = true, default_value_t = weyl::DEFAULT_RANK_CAP)]
    pub rank_cap: usize,
    /// Largest n for orbit enumeration.
    #[arg(long, global = true, default_value_t = vogan_a::DEFAULT_N_CAP)]
    pub n_cap: usize,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Test the infinitesimal-character exponent of a parameter.
    CheckFpp,
    /// Compute M_{<=1} and check the Levi containment and the nilradical bound.
    LeviLeq1,
    /// Search for a Hermitian Weyl witness.
    Hermitian,
    /// Emit a non-unitarity certificate when one exists.
    Certify,
    /// Enumerate the orbits of a type-A graded space.
    Orbits,
    /// Scan the unramified unitary dual of GL_n.
    GlnScan {
        #[arg(long)]
        n: usize,
        /// Comma-separated rationals in [0, 1/2).
        #[arg(long, default_value = "1/10,1/5,3/10,2/5")]
        grid: String,
    },
    /// rho x tau|.|^b x tau|.|^-b on GL_{3d}.
    #[command(name = "example-4-1")]
    Example41 {
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_pass(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub summary: String,
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Body {
    CheckFpp(CheckFppBody),
    LeviLeq1(LeviLeq1Body),
    Hermitian(HermitianBody),
    Certify(CertifyBody),
    Orbits(OrbitsBody),
    GlnScan(FppScanReport<Q>),
    Example41(Example41Report<Q>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckFppBody {
    pub datum: String,
    pub nu_lambda: ExponentVector<Q>,
    pub m_lambda: Vec<usize>,
    pub in_fpp: bool,
    pub violated: Vec<usize>,
    pub boundary: Vec<usize>,
    #[serde(with = "serde_rational::option")]
    pub max_pairing: Option<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviLeq1Body {
    pub datum: String,
    pub levi: Vec<usize>,
    pub nu_lambda: ExponentVector<Q>,
    pub m_lambda: Vec<usize>,
    pub m_leq1: Vec<usize>,
    pub levi_contained: bool,
    pub nilradical_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermitianBody {
    pub datum: String,
    pub levi: Vec<usize>,
    pub nu: ExponentVector<Q>,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyBody {
    pub datum: String,
    pub nu_lambda: ExponentVector<Q>,
    pub in_fpp: bool,
    pub certificate: Option<CertificateFile<Q>>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub multisegment: Multisegment,
    pub dimension: usize,
    #[serde(with = "serde_rational::vec")]
    pub infchar: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsBody {
    pub dims: GradedDims,
    pub vogan_dimension: usize,
    pub orbits: Vec<OrbitEntry>,
    /// Pairs `(a, b)` of orbit indices with `a` in the closure of `b`, `a != b`.
    pub closure: Vec<(usize, usize)>,
}

/// Input or usage problem; maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<fpp::Error> for InputError {
    fn from(e: fpp::Error) -> Self {
        InputError(e.to_string())
    }
}

fn read_input<T: for<'de> Deserialize<'de>>(cli: &Cli) -> Result<T, InputError> {
    let path = cli.input.as_ref().ok_or_else(|| InputError("--input is required".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(io::from_json(&text)?)
}

fn parse_q(s: &str) -> Result<Q, InputError> {
    Q::parse_str(s).ok_or_else(|| InputError(format!("not a rational: {s:?}")))
}

fn load_param(cli: &Cli) -> Result<(RootDatum, ExponentParam<Q>, DatumSpec), InputError> {
    let file: ParamFile<Q> = read_input(cli)?;
    let (d, p) = file.build()?;
    Ok((d, p, file.datum))
}

pub fn run(cli: &Cli) -> Result<Report, InputError> {
    let (name, verdict, summary, body) = match &cli.command {
        Command::CheckFpp => {
            let (d, p, _) = load_param(cli)?;
            let ic = lparam::infchar_exponent(&d, &p)?;
            let v = lparam::fpp_check(&d, &ic);
            let summary = if v.in_fpp {
                format!("in FPP; {}/{} pairings at boundary", v.boundary.len(), d.rank())
            } else {
                format!("not in FPP; violated coroots {}", v.violated)
            };
            let body = CheckFppBody {
                datum: d.label().to_string(),
                nu_lambda: ic.nu_lambda().clone(),
                m_lambda: ic.m_lambda().to_one_based(),
                in_fpp: v.in_fpp,
                violated: v.violated.to_one_based(),
                boundary: v.boundary.to_one_based(),
                max_pairing: v.max_pairing().cloned(),
            };
            ("check-fpp", Verdict::from_pass(v.in_fpp), summary, Body::CheckFpp(body))
        }
        Command::LeviLeq1 => {
            let (d, p, _) = load_param(cli)?;
            let ic = lparam::infchar_exponent(&d, &p)?;
            let m_leq1 = lparam::levi_leq1(&d, &ic);
            let levi_contained = p.levi().is_subset(&m_leq1);
            let nilradical_bound = lparam::claim_inequality(&d, &m_leq1, &ic, &lparam::transported_h(&d, &p)?);
            let summary = format!(
                "M_<=1 = {m_leq1}; Levi contained: {levi_contained}; nilradical weights above 1: {nilradical_bound}"
            );
            let body = LeviLeq1Body {
                datum: d.label().to_string(),
                levi: p.levi().to_one_based(),
                nu_lambda: ic.nu_lambda().clone(),
                m_lambda: ic.m_lambda().to_one_based(),
                m_leq1: m_leq1.to_one_based(),
                levi_contained,
                nilradical_bound,
            };
            ("levi-leq1", Verdict::from_pass(levi_contained && nilradical_bound), summary, Body::LeviLeq1(body))
        }
        Command::Hermitian => {
            let (d, p, _) = load_param(cli)?;
            let w = lparam::param_hermitian_witness(&d, &p, cli.rank_cap)?;
            let summary = match &w {
                Some(w) => format!("Hermitian; witness {w}"),
                None => "no Hermitian witness".to_string(),
            };
            let body = HermitianBody {
                datum: d.label().to_string(),
                levi: p.levi().to_one_based(),
                nu: p.nu().clone(),
                witness: w.as_ref().map(|w| w.word_one_based()),
            };
            ("hermitian", Verdict::from_pass(w.is_some()), summary, Body::Hermitian(body))
        }
        Command::Certify => {
            let (d, p, spec) = load_param(cli)?;
            let ic = lparam::infchar_exponent(&d, &p)?;
            let in_fpp = lparam::fpp_check(&d, &ic).in_fpp;
            let cert = lparam::non_unitarity_certificate_capped(&d, &p, cli.rank_cap)?;
            let note = match (&cert, in_fpp) {
                (Some(c), _) => format!("certificate emitted: violated {}, witness {}", c.violated, c.witness),
                (None, true) => "exponent lies in FPP; nothing to certify".to_string(),
                (None, false) => "exponent leaves FPP but no Hermitian witness exists".to_string(),
            };
            let body = CertifyBody {
                datum: d.label().to_string(),
                nu_lambda: ic.nu_lambda().clone(),
                in_fpp,
                certificate: cert.as_ref().map(|c| CertificateFile::from_certificate(spec, c)),
                note: note.clone(),
            };
            ("certify", Verdict::from_pass(cert.is_none()), note, Body::Certify(body))
        }
        Command::Orbits => {
            let input: OrbitsInput = read_input(cli)?;
            let poset = OrbitPoset::of(&input.dims, cli.n_cap)?;
            let n = poset.orbits.len();
            let closure = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b && poset.leq[a][b])
                .collect();
            let orbits = poset
                .orbits
                .iter()
                .zip(&poset.dims)
                .map(|(m, dim)| OrbitEntry {
                    multisegment: m.clone(),
                    dimension: *dim,
                    infchar: vogan_a::infchar_of_multisegment(m),
                })
                .collect();
            let body = OrbitsBody { vogan_dimension: input.dims.vogan_dimension(), dims: input.dims, orbits, closure };
            let summary = format!("{n} orbits on {}", body.dims);
            ("orbits", Verdict::Pass, summary, Body::Orbits(body))
        }
        Command::GlnScan { n, grid } => {
            let grid = grid
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(parse_q)
                .collect::<Result<Vec<_>, _>>()?;
            let r = gln::fpp_scan(*n, &grid)?;
            let summary = format!(
                "{} points, {} violations, {} saturating",
                r.entries.len(),
                r.violations,
                r.saturating
            );
            ("gln-scan", Verdict::from_pass(r.all_pass()), summary, Body::GlnScan(r))
        }
        Command::Example41 { b, d } => {
            let b = parse_q(b)?;
            let r = gln::example_4_1(&b, *d)?;
            let ok = r.ambient.in_fpp && r.reduced_in_fpp && !r.non_unitary;
            let summary = format!(
                "b = {}, d = {}: ambient FPP {}, reduced FPP {}, {}",
                r.b,
                r.d,
                pass_word(r.ambient.in_fpp),
                pass_word(r.reduced_in_fpp),
                if r.non_unitary { "non-unitary" } else { "no obstruction" }
            );
            ("example-4-1", Verdict::from_pass(ok), summary, Body::Example41(r))
        }
    };
    Ok(Report { command: name.to_string(), verdict, seed: cli.seed, summary, body })
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn set(v: &[usize]) -> String {
    format!("{{{}}}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}: {}", r.command, pass_word(r.verdict == Verdict::Pass));
    let _ = writeln!(out, "{}", r.summary);
    if let Some(seed) = r.seed {
        let _ = writeln!(out, "seed: {seed}");
    }
    match &r.body {
        Body::CheckFpp(b) => {
            let _ = writeln!(out, "datum: {}", b.datum);
            let _ = writeln!(out, "nu_lambda: {}", b.nu_lambda);
            let _ = writeln!(out, "M_lambda: {}", set(&b.m_lambda));
            let _ = writeln!(out, "violated: {}", set(&b.violated));
        }
        Body::LeviLeq1(b) => {
            let _ = writeln!(out, "datum: {}", b.datum);
            let _ = writeln!(out, "nu_lambda: {}", b.nu_lambda);
            let _ = writeln!(out, "M: {}  M_lambda: {}  M_<=1: {}", set(&b.levi), set(&b.m_lambda), set(&b.m_leq1));
        }
        Body::Hermitian(b) => {
            let _ = writeln!(out, "datum: {}  M: {}  nu: {}", b.datum, set(&b.levi), b.nu);
            if let Some(w) = &b.witness {
                let _ = writeln!(out, "witness word: {}", join(w));
            }
        }
        Body::Certify(b) => {
            let _ = writeln!(out, "datum: {}", b.datum);
            let _ = writeln!(out, "nu_lambda: {}", b.nu_lambda);
            if let Some(c) = &b.certificate {
                let _ = writeln!(out, "violated: {}", set(&c.violated));
                let _ = writeln!(out, "M_<=1: {}", set(&c.m_leq1));
                let _ = writeln!(out, "witness word: {}", join(&c.witness));
                let _ = writeln!(out, "family: {}", c.family);
                for a in &c.assumptions {
                    let _ = writeln!(out, "assumes: {a}");
                }
            }
        }
        Body::Orbits(b) => {
            let _ = writeln!(out, "dim V = {}", b.vogan_dimension);
            for (i, o) in b.orbits.iter().enumerate() {
                let _ = writeln!(out, "{i}: {}  dim {}  infchar ({})", o.multisegment, o.dimension, join(&o.infchar));
            }
            for (a, c) in &b.closure {
                let _ = writeln!(out, "{a} < {c}");
            }
        }
        Body::GlnScan(s) => {
            for e in &s.entries {
                let max = e.verdict.max_pairing.map_or("-".to_string(), |m| m.to_string());
                let tag = if !e.verdict.in_fpp {
                    "FAIL"
                } else if e.saturated {
                    "pass (saturated)"
                } else {
                    "pass"
                };
                let _ = writeln!(out, "{}  ({})  max {}  {}", e.label, join(&e.verdict.values), max, tag);
            }
        }
        Body::Example41(e) => {
            let _ = writeln!(out, "exponent: {}", e.exponent);
            let _ = writeln!(out, "Hermitian: {}", e.hermitian);
            let _ = writeln!(out, "irreducible: {}", e.irreducible);
            let _ = writeln!(
                out,
                "ambient GL_{}: coords {}  {}",
                e.ambient.n,
                e.ambient.coords,
                pass_word(e.ambient.in_fpp)
            );
            let _ = writeln!(out, "unramified: {}", e.unramified_label);
            for (f, v) in e.factors.iter().zip(&e.reduced) {
                let _ = writeln!(out, "  GL_{} [{}]: ({})  {}", f.m, f.tag, join(&f.exponents), pass_word(v.in_fpp));
            }
            if let Some(reason) = &e.non_unitary_reason {
                let _ = writeln!(out, "non-unitary: {reason}");
            }
            if let Some(c) = &e.certificate {
                let _ = writeln!(out, "certificate: violated {}, witness of length {}", set(&c.violated), c.witness.len());
            }
        }
    }
    out
}

pub fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Text => render_text(r),
        Format::Json => io::to_json(r) + "\n",
    }
}

/// Run and write the report; returns the process exit code.
pub fn main_with(cli: &Cli) -> i32 {
    let report = match run(cli) {
        Ok(r) => r,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let text = render(&report, cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    report.verdict.exit_code()
}
