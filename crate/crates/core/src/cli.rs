//! Command-line front end.
//!
//! Exit status: 0 when every requested check holds, 1 on a verification
//! mismatch, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::abacus::{self, hook_product_one_minus};
use crate::identities::{self, content, IdentityId, IdentityReport};
use crate::partitions::{count_t_cores, hook_lengths, hook_lengths_mod_t, is_t_core, Partition};
use crate::quotient::{decompose, encode_word};
use crate::series::{parse_rational, rational_to_string};
use crate::{Polynomial, Rational, Var};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Degrees above this need `--allow-large`.
pub const DEGREE_CEILING: usize = 40;

#[derive(Debug, Parser)]
#[command(name = "hookseries", version, about = "Exact hook-length identities for integer partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check identities coefficient by coefficient.
    Verify(VerifyArgs),
    /// Show hooks, codings and the core/quotient of a partition.
    Inspect(InspectArgs),
    /// Print individual exact values.
    Coeff {
        #[command(subcommand)]
        what: CoeffCommand,
        #[arg(long, value_enum, default_value_t, global = true)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity name, or `all`.
    #[arg(long, default_value = "all")]
    id: String,
    /// Truncation degree (size bound for scalar checks). Defaults: 12 for
    /// symbolic identities, 20-30 for rational ones, 9 for marked-hook,
    /// 6 for core-hook-sums.
    #[arg(long)]
    degree: Option<usize>,
    /// Restrict to a single t (identities that take one).
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Worker threads; output order does not depend on it.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Permit degrees above 40.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Debug, Args)]
struct InspectArgs {
    /// Comma-separated weakly decreasing parts; empty for the empty partition.
    #[arg(long, allow_hyphen_values = true)]
    partition: String,
    #[arg(long)]
    t: Option<u32>,
    /// Fail unless this coding exists for (partition, t).
    #[arg(long, value_enum)]
    coding: Option<CodingKind>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CodingKind {
    U,
    V,
    N,
}

#[derive(Debug, Subcommand)]
enum CoeffCommand {
    /// f_k(s), the coefficient of x^k in ∏(1 − x^n)^s.
    EulerPower {
        #[arg(long)]
        k: usize,
        /// Evaluate at this rational instead of printing the polynomial.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
    },
    /// Coefficients of the compositional inverse of x∏(1 − x^n).
    Revert {
        #[arg(long, default_value_t = 12)]
        degree: usize,
    },
    /// Numbers of t-cores of 0..=max.
    Tcores {
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 20)]
        max: u32,
    },
    /// Σ_{λ⊢n} ∏(1 + k/h²).
    HookSum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: i64,
    },
}

/// Parses `args` (program name first), writes results to `out` and
/// diagnostics to stderr, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Inspect(a) => cmd_inspect(&a, out),
        Command::Coeff { what, format } => cmd_coeff(&what, format, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

type CmdResult = std::result::Result<i32, String>;

fn io_err(e: std::io::Error) -> String {
    e.to_string()
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let ids: Vec<IdentityId> = if a.id == "all" {
        IdentityId::ALL.to_vec()
    } else {
        vec![a.id.parse::<IdentityId>().map_err(|e| e.to_string())?]
    };
    if let Some(d) = a.degree {
        if d > DEGREE_CEILING && !a.allow_large {
            return Err(format!("degree {d} exceeds {DEGREE_CEILING}; pass --allow-large to run anyway"));
        }
    }
    if a.jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    let mut tasks: Vec<(IdentityId, Option<u32>)> = Vec::new();
    for id in ids {
        match a.t {
            Some(t) if id.takes_t() => tasks.push((id, Some(t))),
            Some(_) if a.id != "all" => return Err(format!("{id} does not take --t")),
            _ if id.takes_t() => tasks.extend(id.default_ts().iter().map(|&t| (id, Some(t)))),
            _ => tasks.push((id, None)),
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let results: Vec<crate::Result<Vec<IdentityReport>>> = pool.install(|| {
        use rayon::prelude::*;
        tasks
            .par_iter()
            .map(|&(id, t)| identities::verify(id, a.degree.unwrap_or_else(|| id.default_degree()), t))
            .collect()
    });
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r.map_err(|e| e.to_string())?);
    }
    match a.format {
        Format::Text => {
            for r in &reports {
                writeln!(out, "{r}").map_err(io_err)?;
            }
        }
        Format::Json => {
            let s = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
            writeln!(out, "{s}").map_err(io_err)?;
        }
    }
    Ok(if reports.iter().all(|r| r.verified) { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Debug, Serialize)]
struct Inspection {
    partition: Partition,
    size: u32,
    word: String,
    hooks: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hooks_t: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_t_core: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h_set: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u_coding: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v_coding: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_coding: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    core: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient: Option<Vec<Partition>>,
}

fn descending(mut v: Vec<u32>) -> Vec<u32> {
    v.reverse();
    v
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn tuple(v: &[i64]) -> String {
    format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

fn cmd_inspect(a: &InspectArgs, out: &mut dyn Write) -> CmdResult {
    let p: Partition = a.partition.parse().map_err(|e: crate::Error| e.to_string())?;
    let mut info = Inspection {
        size: p.size(),
        word: encode_word(&p).to_string(),
        hooks: descending(hook_lengths(&p).to_sorted_vec()),
        partition: p.clone(),
        t: a.t,
        hooks_t: None,
        is_t_core: None,
        h_set: None,
        u_coding: None,
        v_coding: None,
        n_coding: None,
        core: None,
        quotient: None,
    };
    if a.coding.is_some() && a.t.is_none() {
        return Err("--coding needs --t".into());
    }
    if let Some(t) = a.t {
        let e = |e: crate::Error| e.to_string();
        info.hooks_t = Some(descending(hook_lengths_mod_t(&p, t).map_err(e)?.to_sorted_vec()));
        let core = is_t_core(&p, t).map_err(e)?;
        info.is_t_core = Some(core);
        let cq = decompose(&p, t).map_err(e)?;
        info.core = Some(cq.core);
        info.quotient = Some(cq.quotient);
        if core {
            info.n_coding = Some(abacus::phi_n(&p, t).map_err(e)?.values().to_vec());
            if t % 2 == 1 {
                info.h_set = Some(abacus::h_set(&p, t).map_err(e)?.descending());
                info.u_coding = Some(abacus::u_coding(&p, t).map_err(e)?.values().to_vec());
                info.v_coding = Some(abacus::phi_v(&p, t).map_err(e)?.values().to_vec());
            }
        }
        match a.coding {
            Some(CodingKind::N) if !core => return Err(abacus::phi_n(&p, t).unwrap_err().to_string()),
            Some(CodingKind::U) | Some(CodingKind::V) if info.v_coding.is_none() => {
                return Err(abacus::phi_v(&p, t).unwrap_err().to_string())
            }
            _ => {}
        }
    }
    match a.format {
        Format::Json => {
            let s = serde_json::to_string_pretty(&info).map_err(|e| e.to_string())?;
            writeln!(out, "{s}").map_err(io_err)?;
        }
        Format::Text => write_inspection(&info, out).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

fn write_inspection(info: &Inspection, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "partition: {}", info.partition)?;
    writeln!(out, "size: {}", info.size)?;
    writeln!(out, "word: {}", info.word)?;
    writeln!(out, "hooks: {}", join(&info.hooks))?;
    if let Some(t) = info.t {
        writeln!(out, "t: {t}")?;
    }
    if let Some(h) = &info.hooks_t {
        writeln!(out, "hooks divisible by t: {}", join(h))?;
    }
    if let Some(c) = info.is_t_core {
        writeln!(out, "t-core: {}", if c { "yes" } else { "no" })?;
    }
    if let Some(h) = &info.h_set {
        writeln!(out, "H-set: {}", join(h))?;
    }
    if let Some(u) = &info.u_coding {
        writeln!(out, "U-coding: {}", tuple(u))?;
    }
    if let Some(v) = &info.v_coding {
        writeln!(out, "V-coding: {}", tuple(v))?;
    }
    if let Some(n) = &info.n_coding {
        writeln!(out, "N-coding: {}", tuple(n))?;
    }
    if let Some(c) = &info.core {
        writeln!(out, "core: {c}")?;
    }
    if let Some(q) = &info.quotient {
        let parts: Vec<String> = q.iter().map(Partition::to_string).collect();
        writeln!(out, "quotient: {}", parts.join(" "))?;
    }
    Ok(())
}

/// Integer coefficients of a univariate polynomial in `v`, lowest degree first.
fn integer_coeffs(p: &Polynomial, v: Var) -> Option<Vec<BigInt>> {
    let deg = p.degree_in(v)? as usize;
    let mut c = vec![BigInt::zero(); deg + 1];
    for (e, a) in p.terms() {
        let k = Var::ALL.iter().position(|&w| w == v)?;
        if e.iter().enumerate().any(|(i, &x)| i != k && x != 0) || !a.is_integer() {
            return None;
        }
        c[e[k] as usize] = a.to_integer();
    }
    Some(c)
}

fn eval_int(c: &[BigInt], r: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * r + a)
}

/// Divides by `(v − r)`; `c` lowest degree first and `r` a root.
fn deflate(c: &[BigInt], r: &BigInt) -> Vec<BigInt> {
    let n = c.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (1..=n).rev() {
        carry = &c[i] + carry * r;
        q[i - 1] = carry.clone();
    }
    q
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Writes `p` as `content · ∏(v − r) · rest` with integer roots pulled out,
/// e.g. `s(s - 1)(s - 3)(s - 14)/24`.
pub fn factor_univariate(p: &Polynomial, v: Var) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut c0 = content(p);
    let primitive = p.scale(&c0.recip());
    let Some(mut c) = integer_coeffs(&primitive, v) else {
        return p.to_string();
    };
    if c.last().is_some_and(|a| a.is_negative()) {
        c0 = -c0;
        c.iter_mut().for_each(|a| *a = -a.clone());
    }
    let mut roots: Vec<BigInt> = Vec::new();
    while c.len() > 1 && c[0].is_zero() {
        roots.push(BigInt::zero());
        c.remove(0);
    }
    'outer: while c.len() > 1 {
        for d in divisors(&c[0]) {
            for r in [d.clone(), -d] {
                if eval_int(&c, &r).is_zero() {
                    c = deflate(&c, &r);
                    roots.push(r);
                    continue 'outer;
                }
            }
        }
        break;
    }
    roots.sort();
    let name = v.name();
    let mut body = String::new();
    for r in &roots {
        if r.is_zero() {
            body.push_str(name);
        } else if r.is_negative() {
            body.push_str(&format!("({name} + {})", -r));
        } else {
            body.push_str(&format!("({name} - {r})"));
        }
    }
    if c.len() > 1 || body.is_empty() {
        let rest: Polynomial = c
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut e = [0u32; 4];
                e[Var::ALL.iter().position(|&w| w == v).unwrap_or(0)] = i as u32;
                Polynomial::monomial(e, Rational::from_integer(a.clone()))
            })
            .fold(Polynomial::zero(), |acc, m| &acc + &m);
        if body.is_empty() && c.len() == 1 {
            body = rest.to_string();
        } else {
            body.push_str(&format!("({rest})"));
        }
    }
    let sign = if c0.is_negative() { "-" } else { "" };
    let abs = c0.abs();
    let numer = abs.numer();
    let lead = if numer.is_one() { String::new() } else { format!("{numer}*") };
    let tail = if abs.denom().is_one() { String::new() } else { format!("/{}", abs.denom()) };
    format!("{sign}{lead}{body}{tail}")
}

#[derive(Serialize)]
struct CoeffOutput<'a> {
    quantity: &'a str,
    values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<Polynomial>,
}

fn cmd_coeff(what: &CoeffCommand, format: Format, out: &mut dyn Write) -> CmdResult {
    let (quantity, values, polynomial, text) = match what {
        CoeffCommand::EulerPower { k, s } => {
            if *k > DEGREE_CEILING {
                return Err(format!("k = {k} exceeds {DEGREE_CEILING}"));
            }
            let f = identities::euler_power_coefficient(*k);
            match s {
                Some(s) => {
                    let value = parse_rational(s).ok_or_else(|| format!("bad rational {s:?}"))?;
                    let r = f.evaluate(Var::S, &value).as_constant().unwrap_or_default();
                    let v = rational_to_string(&r);
                    ("f_k(s)", vec![v.clone()], None, v)
                }
                None => {
                    let text = factor_univariate(&f, Var::S);
                    ("f_k(s)", vec![text.clone()], Some(f), text)
                }
            }
        }
        CoeffCommand::Revert { degree } => {
            if *degree == 0 || *degree > DEGREE_CEILING {
                return Err(format!("degree must lie in 1..={DEGREE_CEILING}"));
            }
            let (y, _) = identities::euler_reversion_terms(*degree).map_err(|e| e.to_string())?;
            let values: Vec<String> = y.coeffs()[1..]
                .iter()
                .map(|a| a.as_constant().map(|r| r.to_string()).unwrap_or_else(|| a.to_string()))
                .collect();
            let text = values.join(" ");
            ("reversion", values, None, text)
        }
        CoeffCommand::Tcores { t, max } => {
            let values = (0..=*max)
                .map(|m| count_t_cores(m, *t).map(|c| c.to_string()))
                .collect::<crate::Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            let text = values.join(" ");
            ("t-cores", values, None, text)
        }
        CoeffCommand::HookSum { n, k } => {
            if *n as usize > DEGREE_CEILING {
                return Err(format!("n = {n} exceeds {DEGREE_CEILING}"));
            }
            let sum: Rational = crate::partitions::enumerate_partitions(*n)
                .map(|p| hook_product_one_minus(&p, &-Rational::from_integer(BigInt::from(*k))))
                .sum();
            let v = sum.to_string();
            ("hook-sum", vec![v.clone()], None, v)
        }
    };
    match format {
        Format::Text => writeln!(out, "{text}").map_err(io_err)?,
        Format::Json => {
            let s = serde_json::to_string_pretty(&CoeffOutput { quantity, values, polynomial })
                .map_err(|e| e.to_string())?;
            writeln!(out, "{s}").map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("hookseries").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn factored_kostant_polynomials() {
        let f = |k| factor_univariate(&identities::euler_power_coefficient(k), Var::S);
        assert_eq!(f(1), "-s");
        assert_eq!(f(2), "s(s - 3)/2");
        assert_eq!(f(3), "-s(s - 1)(s - 8)/6");
        assert_eq!(f(4), "s(s - 1)(s - 3)(s - 14)/24");
        assert_eq!(factor_univariate(&Polynomial::one(), Var::S), "1");
    }

    #[test]
    fn inspect_worked_examples() {
        let (code, out) = run_capture(&["inspect", "--partition", "6,3,3,2", "--t", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("hooks: 9 8 6 5 4 4 3 3 2 2 2 1 1 1"), "{out}");
        assert!(out.contains("hooks divisible by t: 8 6 4 4 2 2 2"), "{out}");
        let (_, out) = run_capture(&["inspect", "--partition", "14,10,6,6,4,4,4,2,2,2", "--t", "5"]);
        assert!(out.contains("V-coding: (5,16,2,-12,-11)"), "{out}");
        assert!(out.contains("N-coding: (-2,-2,1,3,0)"), "{out}");
        let (_, out) = run_capture(&["inspect", "--partition", "6,5,3,3", "--t", "2"]);
        assert!(out.contains("core: (2,1)"), "{out}");
        assert!(out.contains("quotient: (2) (2,2,1)"), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["verify", "--degree", "-1"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--id", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--id", "pentagonal", "--degree", "41"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["inspect", "--partition", "1,2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["inspect", "--partition", "3", "--t", "3", "--coding", "v"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["inspect", "--partition", "2", "--t", "2", "--coding", "v"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["inspect", "--partition", "1", "--t", "2", "--coding", "n"]).0, EXIT_OK);
        assert_eq!(run_capture(&["verify", "--id", "macdonald", "--t", "4", "--degree", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn coeff_outputs() {
        assert_eq!(run_capture(&["coeff", "revert", "--degree", "7"]).1, "1 1 3 10 38 153 646\n");
        assert_eq!(run_capture(&["coeff", "euler-power", "--k", "3", "--s", "8"]).1, "0/1\n");
        assert_eq!(run_capture(&["coeff", "tcores", "--t", "2", "--max", "6"]).1, "1 1 0 1 0 0 1\n");
        assert_eq!(run_capture(&["coeff", "hook-sum", "--n", "3", "--k", "2"]).1, "22\n");
    }

    #[test]
    fn verify_json_round_trips() {
        let (code, out) = run_capture(&["verify", "--id", "nekrasov-okounkov", "--degree", "6", "--format", "json"]);
        assert_eq!(code, 0);
        let reports: Vec<IdentityReport> = serde_json::from_str(&out).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].verified);
        assert_eq!(serde_json::to_string_pretty(&reports).unwrap() + "\n", out);
    }
}
