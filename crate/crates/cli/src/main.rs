//! `iwahori` — exact computations in the four Iwahori-Hecke algebras and
//! their Coxeter systems: word arithmetic, basis products, presentation and
//! isomorphism verification, type dimensions, growth series, and truncated
//! formal degrees.
//!
//! Every subcommand emits either stable JSON (default) or a plain table via
//! `--format table`; both carry the same numeric payload. Exit status is 0
//! when all requested checks pass, 1 when a check fails (the JSON then
//! contains the witness), and 2 on usage errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational, ToPrimitive};
use serde_json::{json, Value};

use iwahori_core::plancherel::{compare_fd, poincare, poincare_for_algebra, steinberg_fd};
use iwahori_core::presentations::{
    build, iso_minus, iso_plus, verify_iso, verify_presentation, AlgebraName, VerifyReport,
};
use iwahori_core::specdims::{dim_tau_symbolic, Sign};
use iwahori_core::{CoxeterSystem, Error, Result};

#[derive(Parser)]
#[command(
    name = "iwahori",
    version,
    about = "Exact Iwahori-Hecke algebra computations: presentations, isomorphisms, \
             type dimensions, growth series, and formal degrees",
    after_help = "Environment:\n  IWAHORI_BALL_CAP  override the default radius cap for ball enumerations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    #[value(name = "AffineC", alias = "affine-c")]
    AffineC,
    #[value(name = "AffineB", alias = "affine-b")]
    AffineB,
    #[value(name = "FiniteC", alias = "finite-c")]
    FiniteC,
    #[value(name = "InfiniteDihedral", alias = "infinite-dihedral")]
    InfiniteDihedral,
}

impl SystemArg {
    fn label(self) -> &'static str {
        match self {
            SystemArg::AffineC => "AffineC",
            SystemArg::AffineB => "AffineB",
            SystemArg::FiniteC => "FiniteC",
            SystemArg::InfiniteDihedral => "InfiniteDihedral",
        }
    }

    fn build(self, n: usize) -> Result<CoxeterSystem> {
        match self {
            SystemArg::AffineC => CoxeterSystem::affine_c(n),
            SystemArg::AffineB => CoxeterSystem::affine_b(n),
            SystemArg::FiniteC => CoxeterSystem::finite_c(n),
            SystemArg::InfiniteDihedral => Ok(CoxeterSystem::infinite_dihedral()),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WordOp {
    /// Length of the element the word spells
    Length,
    /// A canonical reduced word
    Reduced,
    /// Signed one-line notation and translation vector
    Element,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairArg {
    Plus,
    Minus,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a word in a Coxeter system (length, reduced form, or matrix)
    Word {
        #[arg(long, value_enum)]
        system: SystemArg,
        /// Rank parameter of the system (ignored for infinite-dihedral)
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Comma-separated generator indices, e.g. "1,0,1"
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value_t = WordOp::Length)]
        op: WordOp,
    },

    /// Multiply two basis elements T_{w1} T_{w2} of a named algebra
    Mul {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        /// Word for the left factor, in Coxeter generator indices; an
        /// extended algebra accepts a leading "sigma" token
        #[arg(long)]
        w1: String,
        /// Word for the right factor
        #[arg(long)]
        w2: String,
    },

    /// Re-derive the defining relations of an algebra ("all" additionally
    /// runs both isomorphism checks)
    Verify {
        /// Hplus | HpsiPlus | Hminus | HpsiMinus | all
        #[arg(long)]
        algebra: String,
        /// Rank or inclusive range, e.g. "3" or "2..4"
        #[arg(long)]
        n: String,
        /// Ball radius for the isomorphism part
        #[arg(long, default_value_t = 6)]
        max_length: usize,
    },

    /// Verify a structural isomorphism on a ball of basis elements
    Iso {
        #[arg(long, value_enum, default_value_t = PairArg::All)]
        pair: PairArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_length: usize,
    },

    /// Minimal type dimensions for given (n, e) at numeric or symbolic q
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        e: u32,
        /// Integer >= 2, or "symbolic"
        #[arg(long, default_value = "symbolic")]
        q: String,
        /// Restrict to one row index (0 is the undivided bottom type)
        #[arg(long)]
        i: Option<usize>,
    },

    /// Weighted growth layers of an algebra, or plain layers of a system
    Poincare {
        #[arg(long, conflicts_with = "system", required_unless_present = "system")]
        algebra: Option<String>,
        #[arg(long, value_enum)]
        system: Option<SystemArg>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_layer: usize,
    },

    /// Truncated formal degree of the sign character
    Fd {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        /// Integer >= 2 ("symbolic" is not meaningful here)
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 12)]
        max_layer: usize,
        /// Convergence threshold, e.g. "1e-12", "0.001", or "1/4096"
        #[arg(long, default_value = "1e-12")]
        tol: String,
        /// Also compare against the partner algebra's formal degree
        #[arg(long)]
        versus: bool,
    },
}

struct Output {
    value: Value,
    table: String,
    pass: bool,
}

impl Output {
    fn new(value: Value, table: String) -> Self {
        Output {
            value,
            table,
            pass: true,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&out.value).expect("serializable output")
                }
                Format::Table => out.table,
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    std::process::exit(2);
                }
            } else {
                println!("{text}");
            }
            std::process::exit(if out.pass { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn run(cmd: &Cmd) -> Result<Output> {
    match cmd {
        Cmd::Word { system, n, w, op } => word_cmd(*system, *n, w, *op),
        Cmd::Mul { algebra, n, w1, w2 } => mul_cmd(algebra, *n, w1, w2),
        Cmd::Verify {
            algebra,
            n,
            max_length,
        } => verify_cmd(algebra, n, *max_length),
        Cmd::Iso {
            pair,
            n,
            max_length,
        } => iso_cmd(*pair, *n, *max_length),
        Cmd::Dims { n, e, q, i } => dims_cmd(*n, *e, q, *i),
        Cmd::Poincare {
            algebra,
            system,
            n,
            max_layer,
        } => poincare_cmd(algebra.as_deref(), *system, *n, *max_layer),
        Cmd::Fd {
            algebra,
            n,
            q,
            max_layer,
            tol,
            versus,
        } => fd_cmd(algebra, *n, q, *max_layer, tol, *versus),
    }
}

/// `IWAHORI_BALL_CAP`, validated, as the cap to pass down to enumerations.
fn env_cap() -> Result<Option<usize>> {
    match std::env::var("IWAHORI_BALL_CAP") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("bad IWAHORI_BALL_CAP '{v}'"))),
        Err(_) => Ok(None),
    }
}

/// "1,0,1" (optionally led by "sigma") into an extension flag plus indices.
fn parse_word(s: &str) -> Result<(bool, Vec<usize>)> {
    let s = s.trim();
    let mut eps = false;
    let mut word = Vec::new();
    if s.is_empty() {
        return Ok((eps, word));
    }
    for (k, tok) in s.split(',').enumerate() {
        let tok = tok.trim();
        if tok.eq_ignore_ascii_case("sigma") {
            if k != 0 {
                return Err(Error::InvalidArgument(
                    "'sigma' is only allowed as the leading token".into(),
                ));
            }
            eps = true;
        } else {
            let i = tok.parse::<usize>().map_err(|_| {
                Error::InvalidArgument(format!("bad generator index '{tok}'"))
            })?;
            word.push(i);
        }
    }
    Ok((eps, word))
}

/// "3" or an inclusive range "2..4".
fn parse_rank_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidArgument(format!("bad rank '{t}'")))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty range '{s}'")));
        }
        Ok((lo..=hi).collect())
    } else {
        Ok(vec![parse(s)?])
    }
}

/// An integer >= 2, or None for "symbolic".
fn parse_q(s: &str) -> Result<Option<BigRational>> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("symbolic") {
        return Ok(None);
    }
    let v = s
        .parse::<i64>()
        .map_err(|_| Error::InvalidArgument(format!("bad q '{s}' (integer >= 2 or 'symbolic')")))?;
    if v < 2 {
        return Err(Error::InvalidArgument(format!("q must be >= 2, got {v}")));
    }
    Ok(Some(BigRational::from(BigInt::from(v))))
}

/// Positive rationals in the forms "1e-12", "0.001", "3", or "1/4096".
fn parse_tol(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("bad tolerance '{s}'"));
    let value = if let Some((num, den)) = s.split_once('/') {
        let num = num.trim().parse::<i64>().map_err(|_| bad())?;
        let den = den.trim().parse::<i64>().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        BigRational::new(BigInt::from(num), BigInt::from(den))
    } else if let Some((mant, exp)) = s.split_once(['e', 'E']) {
        let mant = if mant.is_empty() { "1" } else { mant };
        let base = parse_decimal(mant).ok_or_else(bad)?;
        let exp = exp.parse::<i32>().map_err(|_| bad())?;
        let ten = BigRational::from(BigInt::from(10));
        let scale = num::pow::pow(ten, exp.unsigned_abs() as usize);
        if exp < 0 {
            base / scale
        } else {
            base * scale
        }
    } else {
        parse_decimal(s).ok_or_else(bad)?
    };
    if value <= num::Zero::zero() {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got '{s}'"
        )));
    }
    Ok(value)
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    let numer = digits.parse::<BigInt>().ok()?;
    let denom = num::pow::pow(BigInt::from(10), frac_part.len());
    Some(BigRational::new(numer, denom))
}

fn rational_str(r: &BigRational) -> String {
    r.to_string()
}

fn poly_value<C: iwahori_core::laurent::Coeff>(p: &iwahori_core::LaurentPoly<C>) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

fn report_value(r: &VerifyReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn report_table(out: &mut String, r: &VerifyReport) {
    let status = if r.pass() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{:<28} n={:<2} {:>4} checks  {status}",
        r.algebra,
        r.n,
        r.checks.len()
    );
    for c in r.checks.iter().filter(|c| !c.pass) {
        let _ = writeln!(
            out,
            "    FAIL {} {:?}: {}",
            c.kind,
            c.indices,
            c.witness.as_deref().unwrap_or("(no witness)")
        );
    }
}

fn word_cmd(system: SystemArg, n: usize, w: &str, op: WordOp) -> Result<Output> {
    let sys = system.build(n)?;
    let (eps, word) = parse_word(w)?;
    if eps {
        return Err(Error::InvalidArgument(
            "'sigma' only makes sense for an extended algebra; use `mul`".into(),
        ));
    }
    let elt = sys.from_word(&word)?;
    let (op_name, result, shown) = match op {
        WordOp::Length => {
            let l = sys.length(&elt)?;
            ("length", json!(l), l.to_string())
        }
        WordOp::Reduced => {
            let r = sys.reduced_word(&elt)?;
            let shown = r
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            ("reduced", json!(r), shown)
        }
        WordOp::Element => {
            let perm = elt.linear_part().one_line().to_vec();
            let trans = elt.translation_part().to_vec();
            let shown = format!("one-line {perm:?}, translation {trans:?}");
            ("element", json!({"one_line": perm, "translation": trans}), shown)
        }
    };
    let value = json!({
        "system": system.label(),
        "n": sys.dim(),
        "word": word,
        "op": op_name,
        "result": result,
    });
    Ok(Output::new(value, format!("{op_name}: {shown}")))
}

fn mul_cmd(algebra: &str, n: usize, w1: &str, w2: &str) -> Result<Output> {
    let name = AlgebraName::from_str(algebra)?;
    let spec = build(name, n)?;
    let alg = spec.algebra();
    let (e1, v1) = parse_word(w1)?;
    let (e2, v2) = parse_word(w2)?;
    let t1 = alg.basis_from_word(e1, &v1)?;
    let t2 = alg.basis_from_word(e2, &v2)?;
    let prod = t1.mul(&t2)?;
    let terms = prod.term_views()?;
    let mut table = String::new();
    for t in &terms {
        let label = if t.word.is_empty() {
            "1".to_string()
        } else {
            format!("T[{}]", t.word)
        };
        let _ = writeln!(table, "{label} : {}", t.coeff);
    }
    let value = json!({
        "algebra": name.to_string(),
        "n": n,
        "w1": w1,
        "w2": w2,
        "terms": serde_json::to_value(&terms).expect("terms serialize"),
    });
    Ok(Output::new(value, table.trim_end().to_string()))
}

fn verify_cmd(algebra: &str, n: &str, max_length: usize) -> Result<Output> {
    let cap = env_cap()?;
    let ranks = parse_rank_list(n)?;
    let all = algebra.trim().eq_ignore_ascii_case("all");
    let names: Vec<AlgebraName> = if all {
        AlgebraName::all().to_vec()
    } else {
        vec![AlgebraName::from_str(algebra)?]
    };

    let mut reports: Vec<VerifyReport> = Vec::new();
    for &n in &ranks {
        for &name in &names {
            if n < name.min_rank() {
                continue;
            }
            reports.push(verify_presentation(&build(name, n)?)?);
        }
        if all {
            reports.push(verify_iso(&iso_plus(n)?, max_length, cap)?);
            if n >= 2 {
                reports.push(verify_iso(&iso_minus(n)?, max_length, cap)?);
            }
        }
    }
    if reports.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no algebra in the selection admits rank {n}"
        )));
    }

    let pass = reports.iter().all(|r| r.pass());
    let mut table = String::new();
    for r in &reports {
        report_table(&mut table, r);
    }
    let _ = writeln!(table, "overall: {}", if pass { "PASS" } else { "FAIL" });
    let value = json!({
        "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
        "pass": pass,
    });
    Ok(Output {
        value,
        table: table.trim_end().to_string(),
        pass,
    })
}

fn iso_cmd(pair: PairArg, n: usize, max_length: usize) -> Result<Output> {
    let cap = env_cap()?;
    let mut reports = Vec::new();
    if matches!(pair, PairArg::Plus | PairArg::All) {
        reports.push(verify_iso(&iso_plus(n)?, max_length, cap)?);
    }
    if matches!(pair, PairArg::Minus | PairArg::All) {
        reports.push(verify_iso(&iso_minus(n)?, max_length, cap)?);
    }
    let pass = reports.iter().all(|r| r.pass());
    let mut table = String::new();
    for r in &reports {
        report_table(&mut table, r);
    }
    let value = json!({
        "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
        "pass": pass,
    });
    Ok(Output {
        value,
        table: table.trim_end().to_string(),
        pass,
    })
}

fn dims_cmd(n: usize, e: u32, q: &str, i: Option<usize>) -> Result<Output> {
    let qv = parse_q(q)?;
    let rows: Vec<(usize, Sign)> = match i {
        Some(0) => vec![(0, Sign::Full)],
        Some(i) => vec![(i, Sign::Plus), (i, Sign::Minus)],
        None => {
            let mut rows = vec![(0, Sign::Full)];
            for i in 1..=n {
                rows.push((i, Sign::Plus));
                rows.push((i, Sign::Minus));
            }
            rows
        }
    };

    let mut out_rows = Vec::new();
    let mut table = String::new();
    let _ = writeln!(table, "{:>3} {:>5} dim", "i", "sign");
    for (i, sign) in rows {
        let dim = dim_tau_symbolic(n, e, i, sign)?;
        let (dim_value, shown) = match &qv {
            Some(q) => {
                let v = dim.eval(q)?;
                (json!(rational_str(&v)), rational_str(&v))
            }
            None => (poly_value(&dim), dim.to_string()),
        };
        let _ = writeln!(table, "{i:>3} {:>5} {shown}", sign.as_str());
        out_rows.push(json!({"i": i, "sign": sign.as_str(), "dim": dim_value}));
    }
    let value = json!({
        "n": n,
        "e": e,
        "q": if qv.is_some() { json!(q.trim()) } else { json!("symbolic") },
        "rows": out_rows,
    });
    Ok(Output::new(value, table.trim_end().to_string()))
}

fn poincare_cmd(
    algebra: Option<&str>,
    system: Option<SystemArg>,
    n: usize,
    max_layer: usize,
) -> Result<Output> {
    let cap = env_cap()?;
    let (label, series) = match (algebra, system) {
        (Some(a), None) => {
            let name = AlgebraName::from_str(a)?;
            (
                name.to_string(),
                poincare_for_algebra(name, n, max_layer, cap)?,
            )
        }
        (None, Some(s)) => {
            let sys = s.build(n)?;
            let weights: BTreeMap<usize, u64> =
                sys.gen_indices().into_iter().map(|i| (i, 1)).collect();
            (label_of(s, n), poincare(&sys, &weights, max_layer, cap)?)
        }
        _ => {
            return Err(Error::InvalidArgument(
                "pass exactly one of --algebra or --system".into(),
            ))
        }
    };
    let layers = series.layer_counts().to_vec();
    let mut table = String::new();
    let _ = writeln!(table, "{label}, layers 0..={max_layer}");
    let _ = writeln!(table, "{:>4} N_k", "k");
    for (k, c) in layers.iter().enumerate() {
        let _ = writeln!(table, "{k:>4} {c}");
    }
    let value = json!({
        "target": label,
        "n": n,
        "max_layer": max_layer,
        "layers": layers,
    });
    Ok(Output::new(value, table.trim_end().to_string()))
}

fn label_of(s: SystemArg, n: usize) -> String {
    match s {
        SystemArg::InfiniteDihedral => s.label().to_string(),
        _ => format!("{}({n})", s.label()),
    }
}

fn fd_cmd(
    algebra: &str,
    n: usize,
    q: &str,
    max_layer: usize,
    tol: &str,
    versus: bool,
) -> Result<Output> {
    let cap = env_cap()?;
    let name = AlgebraName::from_str(algebra)?;
    let q = parse_q(q)?.ok_or_else(|| {
        Error::InvalidArgument("fd needs a numeric q; symbolic mode is not available here".into())
    })?;
    let tol = parse_tol(tol)?;

    if versus {
        let partner = name.partner();
        let rep = compare_fd(name, n, partner, n, 1, max_layer, &q, &tol, cap)?;
        let pass = rep.pass();
        let mut table = String::new();
        let _ = writeln!(table, "{} vs {}, n={n}, q={q}", rep.pair.0, rep.pair.1);
        let _ = writeln!(table, "layers a: {:?}", rep.counts_a);
        let _ = writeln!(table, "layers b: {:?}", rep.counts_b);
        let _ = writeln!(
            table,
            "fd a: {}   fd b: {}   |ratio*fd_a - fd_b| = {}",
            rational_str(&rep.fd_a),
            rational_str(&rep.fd_b),
            rational_str(&rep.fd_difference)
        );
        let _ = writeln!(table, "match: {}", if pass { "PASS" } else { "FAIL" });
        let value = json!({
            "pair": [rep.pair.0, rep.pair.1],
            "n": n,
            "q": rational_str(&q),
            "layers_a": rep.counts_a,
            "layers_b": rep.counts_b,
            "first_mismatch": rep.first_mismatch,
            "fd_a": rational_str(&rep.fd_a),
            "fd_b": rational_str(&rep.fd_b),
            "normalization_ratio": rational_str(&rep.normalization_ratio),
            "fd_difference": rational_str(&rep.fd_difference),
            "converged": rep.converged,
            "pass": pass,
        });
        return Ok(Output {
            value,
            table: table.trim_end().to_string(),
            pass,
        });
    }

    let series = poincare_for_algebra(name, n, max_layer, cap)?;
    let fd = steinberg_fd(&series, &q, &tol)?;
    let mut table = String::new();
    let _ = writeln!(table, "{name}, n={n}, q={q}, layers 0..={max_layer}");
    let _ = writeln!(table, "layers: {:?}", fd.counts);
    let _ = writeln!(
        table,
        "fd = {}  (~{:.12})  converged: {}",
        rational_str(&fd.fd),
        fd.fd.to_f64().unwrap_or(f64::NAN),
        fd.converged
    );
    let value = json!({
        "algebra": name.to_string(),
        "n": n,
        "q": rational_str(&q),
        "max_layer": max_layer,
        "layers": fd.counts,
        "partial_sums": fd.partial_sums.iter().map(rational_str).collect::<Vec<_>>(),
        "fd": rational_str(&fd.fd),
        "fd_approx": fd.fd.to_f64(),
        "converged": fd.converged,
        "diverging": fd.diverging,
    });
    Ok(Output::new(value, table.trim_end().to_string()))
}
