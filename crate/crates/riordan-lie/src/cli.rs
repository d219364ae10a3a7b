//! Text/JSON input grammars and the `rlie` command-line front end.
//!
//! Series are written as comma-separated coefficients (rationals `p/q`
//! or parameter polynomials like `1+2*s`), optionally prefixed by
//! `val=v;` for Laurent jets, or as `preset:NAME@N` for the built-in
//! series. All numbers are serialized back as exact `p/q` strings, never
//! floats, and printing then parsing is the identity.
//!
//! Exit codes: 0 success, 2 parse/validation error, 3 domain
//! precondition error, 4 internal consistency failure.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coef::Coef;
use crate::error::{Error, Result};
use crate::group::{gmul, ginv, interp_inverse, phi, GroupElem, InterpVariant};
use crate::lie::{
    algebraic_residual, exp_spoly, exp_strict, f_invariant_residual, ode_residual_main,
    ode_residual_spoly,
};
use crate::poly::{Param, Poly};
use crate::polymat::{pm_exp, pm_log, pm_mul, tau_lambda, PolyMat};
use crate::rat::{rati, Rat};
use crate::riordan::{aseq_extract, rho, toeplitz_d, TriMat};
use crate::series::Series;
use crate::solve::{group_log, solve_alpha, solve_beta};

// ---------------------------------------------------------------- parsing

pub fn parse_rat(text: &str) -> Result<Rat> {
    Rat::from_str(text.trim()).map_err(|e| Error::parse(format!("bad rational '{text}': {e}")))
}

/// One coefficient: a rational or a polynomial in s, t or u
/// (`1`, `-1/2`, `s`, `2*t^3-1`, ...).
pub fn parse_coef(text: &str) -> Result<Coef> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::parse("empty coefficient"));
    }
    if !t.contains(['s', 't', 'u']) {
        return Ok(Coef::Rat(parse_rat(t)?));
    }
    Ok(Coef::Poly(parse_poly(t)?))
}

/// Polynomial grammar: signed terms `c`, `c*p^k`, `p^k`, `p` joined by
/// `+`/`-`, for a single parameter p in {s, t, u}.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    // split into signed terms
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = 1i64;
    let mut started = false;
    for c in t.chars() {
        if (c == '+' || c == '-') && started && !cur.is_empty() && !cur.ends_with('/') {
            terms.push((sign, std::mem::take(&mut cur)));
            sign = if c == '-' { -1 } else { 1 };
        } else if (c == '+' || c == '-') && cur.is_empty() {
            sign = if c == '-' { -sign } else { sign };
            started = true;
        } else {
            cur.push(c);
            started = true;
        }
    }
    if cur.is_empty() {
        return Err(Error::parse(format!("dangling sign in '{text}'")));
    }
    terms.push((sign, cur));

    let mut param: Option<Param> = None;
    let mut acc: Vec<(Rat, usize)> = Vec::new();
    for (sgn, term) in terms {
        let (coef_part, var_part) = match term.find(['s', 't', 'u']) {
            None => (term.as_str(), None),
            Some(pos) => (&term[..pos], Some(&term[pos..])),
        };
        let mut coef = if coef_part.is_empty() {
            rati(1)
        } else {
            parse_rat(coef_part.trim_end_matches('*'))?
        };
        if sgn < 0 {
            coef = -coef;
        }
        let mut deg = 0usize;
        if let Some(v) = var_part {
            let p = Param::parse(&v[..1]).expect("matched by find");
            match param {
                None => param = Some(p),
                Some(q) if q == p => {}
                Some(q) => {
                    return Err(Error::parse(format!(
                        "mixed parameters {q} and {p} in '{text}'"
                    )))
                }
            }
            deg = match &v[1..] {
                "" => 1,
                rest => {
                    let r = rest.strip_prefix('^').ok_or_else(|| {
                        Error::parse(format!("expected '^' after parameter in '{term}'"))
                    })?;
                    r.parse::<usize>()
                        .map_err(|e| Error::parse(format!("bad exponent in '{term}': {e}")))?
                }
            };
        }
        acc.push((coef, deg));
    }
    let param = param.ok_or_else(|| Error::parse("polynomial without parameter"))?;
    let maxdeg = acc.iter().map(|(_, d)| *d).max().unwrap_or(0);
    let mut coeffs = vec![Rat::from_integer(0.into()); maxdeg + 1];
    for (c, d) in acc {
        coeffs[d] += c;
    }
    Ok(Poly::new(param, coeffs))
}

/// The series grammar: `preset:NAME@N` with NAME in
/// {geom, id, one, expx, xe, xsq}, or `[val=v;]c0,c1,...`.
pub fn parse_series(text: &str) -> Result<Series> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::parse("empty series"));
    }
    if let Some(rest) = t.strip_prefix("preset:") {
        let (name, order) = rest
            .split_once('@')
            .ok_or_else(|| Error::parse(format!("preset needs '@order': '{t}'")))?;
        let n: i64 = order
            .parse()
            .map_err(|e| Error::parse(format!("bad preset order '{order}': {e}")))?;
        if n < 0 {
            return Err(Error::parse("preset order must be >= 0"));
        }
        return match name {
            "geom" => Ok(Series::geometric(n)),
            "id" => Ok(Series::x(n)),
            "one" => Ok(Series::one(n)),
            "expx" => Ok(Series::exp_x(n)),
            "xe" => Ok(Series::x_over_one_minus_x(n)),
            "xsq" => Ok(Series::x_plus_x2(n)),
            _ => Err(Error::parse(format!("unknown preset '{name}'"))),
        };
    }
    let (val, body) = match t.strip_prefix("val=") {
        Some(rest) => {
            let (v, body) = rest
                .split_once(';')
                .ok_or_else(|| Error::parse("expected ';' after val=v"))?;
            let v: i64 = v.parse().map_err(|e| Error::parse(format!("bad val '{v}': {e}")))?;
            (v, body)
        }
        None => (0, t),
    };
    let coeffs = body
        .split(',')
        .map(parse_coef)
        .collect::<Result<Vec<Coef>>>()?;
    if coeffs.is_empty() {
        return Err(Error::parse("series needs at least one coefficient"));
    }
    let order = val + coeffs.len() as i64 - 1;
    Ok(Series::new(val, order, coeffs))
}

/// Matrix JSON form `{"n": N, "rows": [["1"], ["1","1"], ...]}`.
pub fn parse_trimat_json(text: &str) -> Result<TriMat> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("bad matrix JSON: {e}")))?;
    let n = v["n"]
        .as_u64()
        .ok_or_else(|| Error::parse("matrix JSON needs an integer field 'n'"))? as usize;
    let rows = v["rows"]
        .as_array()
        .ok_or_else(|| Error::parse("matrix JSON needs an array field 'rows'"))?;
    if rows.len() != n {
        return Err(Error::parse(format!("expected {n} rows, got {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::parse(format!("row {i} is not an array")))?;
        out.push(
            row.iter()
                .map(|e| {
                    e.as_str()
                        .ok_or_else(|| Error::parse("matrix entries must be strings"))
                        .and_then(parse_coef)
                })
                .collect::<Result<Vec<Coef>>>()?,
        );
    }
    TriMat::from_rows(out)
}

/// PolyMat JSON form `{"K": k, "polys": [["1"], ["0","1"], ...]}` where
/// the inner lists are coefficients in `u`.
pub fn parse_polymat_json(text: &str) -> Result<PolyMat> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("bad polymat JSON: {e}")))?;
    let k = v["K"]
        .as_u64()
        .ok_or_else(|| Error::parse("polymat JSON needs an integer field 'K'"))? as usize;
    let polys = v["polys"]
        .as_array()
        .ok_or_else(|| Error::parse("polymat JSON needs an array field 'polys'"))?;
    if polys.len() != k + 1 {
        return Err(Error::parse(format!("expected {} polynomials, got {}", k + 1, polys.len())));
    }
    let mut out = Vec::with_capacity(k + 1);
    for p in polys {
        let arr = p.as_array().ok_or_else(|| Error::parse("each polynomial is an array"))?;
        let coeffs = arr
            .iter()
            .map(|e| {
                e.as_str()
                    .ok_or_else(|| Error::parse("polynomial coefficients must be strings"))
                    .and_then(parse_rat)
            })
            .collect::<Result<Vec<Rat>>>()?;
        out.push(Poly::new(Param::U, coeffs));
    }
    PolyMat::new(out)
}

// ------------------------------------------------------------- formatting

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

fn coef_string(c: &Coef) -> String {
    c.to_string()
}

fn series_json(s: &Series) -> Value {
    let param = match s.ring() {
        crate::coef::Ring::Rat => Value::Null,
        crate::coef::Ring::Poly(p) => Value::String(p.as_str().to_string()),
    };
    json!({
        "val": s.val(),
        "order": s.order(),
        "coeffs": (s.val()..=s.order()).map(|k| coef_string(&s.coeff(k))).collect::<Vec<_>>(),
        "param": param,
    })
}

fn series_csv(s: &Series) -> String {
    let coeffs: Vec<String> = (s.val()..=s.order()).map(|k| coef_string(&s.coeff(k))).collect();
    if s.val() == 0 {
        coeffs.join(",")
    } else {
        format!("val={};{}", s.val(), coeffs.join(","))
    }
}

pub fn fmt_series(s: &Series, f: Format) -> String {
    match f {
        Format::Pretty => s.to_string(),
        Format::Json => series_json(s).to_string(),
        Format::Csv => series_csv(s),
    }
}

fn trimat_json(m: &TriMat) -> Value {
    json!({
        "n": m.dim(),
        "rows": m.rows().iter().map(|r| r.iter().map(coef_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn fmt_trimat(m: &TriMat, f: Format) -> String {
    match f {
        Format::Json => trimat_json(m).to_string(),
        Format::Csv => m
            .rows()
            .iter()
            .map(|r| r.iter().map(coef_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Pretty => {
            let cells: Vec<Vec<String>> =
                m.rows().iter().map(|r| r.iter().map(coef_string).collect()).collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            cells
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| format!("{c:>width$}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}

fn polymat_json(p: &PolyMat) -> Value {
    json!({
        "K": p.cutoff(),
        "polys": p.polys().iter().map(|q| {
            (0..=q.degree().map_or(0, |d| d)).map(|k| q.coeff(k).to_string()).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

pub fn fmt_polymat(p: &PolyMat, f: Format) -> String {
    match f {
        Format::Json => polymat_json(p).to_string(),
        Format::Csv => p
            .polys()
            .iter()
            .map(|q| {
                (0..=q.degree().map_or(0, |d| d))
                    .map(|k| q.coeff(k).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Pretty => {
            let mut out = String::new();
            for (k, q) in p.polys().iter().enumerate() {
                let _ = writeln!(out, "p_{k}(u) = {q}");
            }
            out.pop();
            out
        }
    }
}

fn pair(label_a: &str, a: &Series, label_b: &str, b: &Series, f: Format) -> String {
    match f {
        Format::Json => json!({ label_a: series_json(a), label_b: series_json(b) }).to_string(),
        Format::Csv => format!("{}\n{}", series_csv(a), series_csv(b)),
        Format::Pretty => format!("{label_a} = {a}\n{label_b} = {b}"),
    }
}

// ------------------------------------------------------------------- CLI

#[derive(Parser, Debug)]
#[command(
    name = "rlie",
    about = "Exact arithmetic in the Riordan (interpolation) group, its Lie algebra, \
             and the two-variable exponential",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct PairArg {
    /// First component A (unit series)
    #[arg(long)]
    pub a: String,
    /// Second component alpha (zero constant term, unit linear term)
    #[arg(long)]
    pub alpha: String,
}

impl PairArg {
    fn elem(&self) -> Result<GroupElem> {
        let a = parse_series(&self.a)?;
        let alpha = parse_series(&self.alpha)?;
        let n = a.order().min(alpha.order());
        GroupElem::new(a.truncate(n), alpha.truncate(n))
    }
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Group product (A,alpha)(B,beta) = (A*(B o alpha), beta o alpha)
    Mul {
        #[command(flatten)]
        g: PairArg,
        /// First component B of the right factor
        #[arg(long)]
        b: String,
        /// Second component beta of the right factor
        #[arg(long)]
        beta: String,
    },
    /// Group inverse (1/(A o rev(alpha)), rev(alpha))
    Inv {
        #[command(flatten)]
        g: PairArg,
    },
    /// Endomorphism phi_{kappa,lambda,mu}(A,alpha) = (A^k (alpha/x)^l (alpha')^m, alpha)
    Phi {
        #[command(flatten)]
        g: PairArg,
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Interpolation between 1/A (tau=0) and the reversion (tau=1)
    Interp {
        /// The series A with constant term 1
        #[arg(long)]
        a: String,
        #[arg(long)]
        tau: String,
        /// Family: g uses x A^tau, gprime uses integral_0 A^tau
        #[arg(long, value_enum, default_value = "g")]
        variant: Variant,
    },
    /// Matrix representation rho(A, alpha) at dimension n
    Rho {
        #[command(flatten)]
        g: PairArg,
        /// Dimension (defaults to order + 1)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Rogers A-sequence of a Riordan matrix
    Aseq {
        /// Matrix as JSON {"n":N,"rows":[["1"],["1","1"],...]}
        #[arg(long, conflicts_with_all = ["a", "alpha"])]
        matrix: Option<String>,
        #[arg(long, requires = "alpha")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        alpha: Option<String>,
        /// Dimension when building from (a, alpha)
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Toeplitz determinant polynomials d_0..d_count of an A-sequence
    Toeplitz {
        /// Comma-separated A-sequence, e.g. "1,1,1"
        #[arg(long)]
        aseq: String,
        #[arg(long, default_value_t = 6)]
        count: usize,
    },
    /// Exp(alpha; beta) for alpha, beta without constant term
    Exp {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        order: Option<i64>,
    },
    /// s-jet of Exp(s alpha; s beta) (handles constant terms)
    ExpSpoly {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        order: Option<i64>,
        /// Truncation degree in s
        #[arg(long, default_value_t = 8)]
        sdeg: usize,
    },
    /// Residuals of the ODE system for y = Exp(a;b), z = Exp(b;b)
    OdeCheck {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        order: Option<i64>,
        /// Use the s-jet engine (required when constant terms are present)
        #[arg(long)]
        spoly: bool,
        #[arg(long, default_value_t = 8)]
        sdeg: usize,
    },
    /// Residual of F(x Exp(s b; s b)) - F(x) - s for F a primitive of 1/(xb)
    FCheck {
        #[arg(long)]
        beta: String,
        #[arg(long)]
        order: i64,
        #[arg(long, default_value_t = 6)]
        sdeg: usize,
    },
    /// Residual of the algebraic equation for Z = x Exp(s b_k; s b_k),
    /// b_k = x(1+x^2)^k/(1-x^{2(k+1)})
    AlgCheck {
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 10)]
        order: i64,
        #[arg(long, default_value_t = 6)]
        sdeg: usize,
    },
    /// Solve Exp(alpha; beta) = gamma for alpha
    SolveAlpha {
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        order: Option<i64>,
    },
    /// Solve Exp(beta; beta) = gamma for beta
    SolveBeta {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        order: Option<i64>,
    },
    /// Lie-algebra logarithm of a special group element
    GroupLog {
        #[command(flatten)]
        g: PairArg,
    },
    /// Partition series Z_0 of an EGF weight list
    Z0 {
        /// EGF weights W_0,W_1,... e.g. "1,1,1"
        #[arg(long)]
        w: String,
        #[arg(long, default_value_t = 8)]
        sdeg: i64,
    },
    /// Brute-force n! [s^n] Z_0 over admissible functions
    Z0Brute {
        #[arg(long)]
        w: String,
        #[arg(long)]
        n: usize,
    },
    /// The Andre polynomial A_n(t)
    Andre {
        #[arg(long)]
        n: usize,
    },
    /// Tree-class histograms: leaves (degrees <= 2) or internal vertices
    /// (even degrees)
    Trees {
        #[arg(long)]
        vertices: usize,
        #[arg(long, value_enum, default_value = "s")]
        class: TreeClass,
    },
    /// Exhaustively verify count_S(2n,k) = count_E(2n+1,k) for all k
    Idcomben {
        #[arg(long)]
        n: usize,
    },
    /// Residual of the reciprocal ODE W_0 U' = W o (W_0 U)
    UOde {
        /// EGF weights W_0,W_1,...
        #[arg(long)]
        w: String,
        #[arg(long, default_value_t = 8)]
        sdeg: i64,
    },
    /// Product of polynomial matrices (diagonal-wise interpolation)
    PolymatMul {
        /// JSON {"K":k,"polys":[["1"],["0","1"],...]}
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Exponential (or with --log the logarithm) of a polynomial matrix
    PolymatExp {
        #[arg(long)]
        p: String,
        /// Take the logarithm of a unipotent matrix instead
        #[arg(long)]
        log: bool,
    },
    /// Diagonal shift tau_lambda: p_k(u) -> p_k(u + lambda)
    PolymatTau {
        #[arg(long)]
        p: String,
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Variant {
    G,
    Gprime,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TreeClass {
    S,
    E,
}

fn egf_weights(text: &str, order: i64) -> Result<Series> {
    let w = text.split(',').map(parse_coef).collect::<Result<Vec<Coef>>>()?;
    Ok(crate::comb::series_from_egf(&w, order))
}

/// `beta_k = x (1+x^2)^k / (1 - x^{2(k+1)})` at the given order.
pub fn beta_family(k: u32, order: i64) -> Result<Series> {
    let mut num = vec![0i64; (order + 1) as usize];
    num[0] = 1;
    if (order as usize) >= 2 {
        num[2] = 1;
    }
    let one_plus_x2 = Series::from_ints(0, order, &num);
    let period = 2 * (k as i64 + 1);
    let den = Series::from_fn(0, order, |j| {
        if j == 0 {
            Coef::one()
        } else if j == period {
            Coef::from_i64(-1)
        } else {
            Coef::zero()
        }
    });
    Ok((&one_plus_x2.powi(k as i64)?.shift_up(1).truncate(order) * &den.inverse()?)
        .truncate(order))
}

/// Run one parsed command, producing the rendered output.
pub fn run(cmd: &Cmd, format: Format) -> Result<String> {
    match cmd {
        Cmd::Mul { g, b, beta } => {
            let left = g.elem()?;
            let bs = parse_series(b)?;
            let betas = parse_series(beta)?;
            let n = left.order().min(bs.order()).min(betas.order());
            let right = GroupElem::new(bs.truncate(n), betas.truncate(n))?;
            let prod = gmul(&left.truncate(n), &right)?;
            Ok(pair("a", prod.a(), "alpha", prod.alpha(), format))
        }
        Cmd::Inv { g } => {
            let gi = ginv(&g.elem()?)?;
            Ok(pair("a", gi.a(), "alpha", gi.alpha(), format))
        }
        Cmd::Phi { g, kappa, lambda, mu } => {
            let out = phi(&g.elem()?, &parse_rat(kappa)?, &parse_rat(lambda)?, &parse_rat(mu)?)?;
            Ok(pair("a", out.a(), "alpha", out.alpha(), format))
        }
        Cmd::Interp { a, tau, variant } => {
            let v = match variant {
                Variant::G => InterpVariant::G,
                Variant::Gprime => InterpVariant::Gprime,
            };
            let out = interp_inverse(&parse_series(a)?, &parse_rat(tau)?, v)?;
            Ok(fmt_series(&out, format))
        }
        Cmd::Rho { g, n } => {
            let e = g.elem()?;
            let dim = n.unwrap_or((e.order() + 1) as usize);
            Ok(fmt_trimat(&rho(&e, dim)?, format))
        }
        Cmd::Aseq { matrix, a, alpha, n } => {
            let m = match (matrix, a, alpha) {
                (Some(mj), _, _) => parse_trimat_json(mj)?,
                (None, Some(a), Some(alpha)) => {
                    let g = PairArg { a: a.clone(), alpha: alpha.clone() }.elem()?;
                    rho(&g, *n)?
                }
                _ => {
                    return Err(Error::parse(
                        "aseq needs either --matrix or both --a and --alpha",
                    ))
                }
            };
            let seq = aseq_extract(&m)?;
            let joined: Vec<String> = seq.iter().map(coef_string).collect();
            Ok(match format {
                Format::Json => json!({ "aseq": joined }).to_string(),
                _ => joined.join(","),
            })
        }
        Cmd::Toeplitz { aseq, count } => {
            let a = aseq.split(',').map(parse_coef).collect::<Result<Vec<Coef>>>()?;
            let d = toeplitz_d(&a, *count);
            Ok(match format {
                Format::Json => {
                    json!({ "d": d.iter().map(series_json).collect::<Vec<_>>() }).to_string()
                }
                Format::Csv => d.iter().map(series_csv).collect::<Vec<_>>().join("\n"),
                Format::Pretty => d
                    .iter()
                    .enumerate()
                    .map(|(i, s)| format!("d_{i} = {s}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Cmd::Exp { alpha, beta, order } => {
            let a = parse_series(alpha)?;
            let b = parse_series(beta)?;
            let n = order.unwrap_or_else(|| a.order().min(b.order()));
            Ok(fmt_series(&exp_strict(&a, &b, n)?, format))
        }
        Cmd::ExpSpoly { alpha, beta, order, sdeg } => {
            let a = parse_series(alpha)?;
            let b = parse_series(beta)?;
            let n = order.unwrap_or_else(|| a.order().min(b.order()));
            Ok(fmt_series(&exp_spoly(&a, &b, n, *sdeg)?, format))
        }
        Cmd::OdeCheck { alpha, beta, order, spoly, sdeg } => {
            let a = parse_series(alpha)?;
            let b = parse_series(beta)?;
            let n = order.unwrap_or_else(|| a.order().min(b.order()));
            let (r1, r2) = if *spoly {
                ode_residual_spoly(&a, &b, n, *sdeg)?
            } else {
                ode_residual_main(&a, &b, n)?
            };
            Ok(pair("residual_y", &r1, "residual_z", &r2, format))
        }
        Cmd::FCheck { beta, order, sdeg } => {
            let b = parse_series(beta)?;
            Ok(fmt_series(&f_invariant_residual(&b, *order, *sdeg)?, format))
        }
        Cmd::AlgCheck { k, order, sdeg } => {
            if *k > 3 {
                return Err(Error::domain("the algebraic family is stated for k <= 3"));
            }
            let head = *order + 4;
            let b = beta_family(*k, head)?;
            let y = exp_spoly(&b, &b, head, *sdeg)?;
            let n = *order;
            // polynomial jets in x are exact, so they carry the full
            // working order
            let s = Poly::var(Param::S);
            let atk = |k: i64, c: Coef| Series::monomial(c, k, head);
            let resid = if *k <= 1 {
                // (1 - sx + x^2 - 2x^2 y)^2 = 1 - 2sx + (s^2-2)x^2 - 2sx^3 + x^4
                let lhs_lin = &(&Series::one(head) - &atk(1, Coef::Poly(s.clone())))
                    + &atk(2, Coef::one());
                let two_x2_y = y.scale(&Coef::from_i64(2)).shift_up(2).truncate(head);
                let lin = &lhs_lin - &two_x2_y;
                let sq = (&lin * &lin).truncate(head);
                let s2m2 = s.mul(&s).sub(&Poly::constant(Param::S, rati(2)));
                let rhs = [
                    atk(0, Coef::one()),
                    atk(1, Coef::Poly(s.scale(&rati(-2)))),
                    atk(2, Coef::Poly(s2m2)),
                    atk(3, Coef::Poly(s.scale(&rati(-2)))),
                    atk(4, Coef::one()),
                ]
                .iter()
                .fold(Series::zero(head), |acc, t| &acc + t);
                (&sq - &rhs).truncate(n)
            } else {
                // x(1+x^2)(1 + (k+1)Z^2 + Z^4) - (1 - sx + (k+1)x^2 - sx^3 + x^4) Z (1+Z^2)
                let z = (&y * &Series::x(head + 1)).truncate(head);
                let kp1 = rati(*k as i64 + 1);
                let c0 = &atk(1, Coef::one()) + &atk(3, Coef::one());
                let quart = [
                    atk(0, Coef::one()),
                    atk(1, Coef::Poly(s.neg())),
                    atk(2, Coef::Rat(kp1.clone())),
                    atk(3, Coef::Poly(s.neg())),
                    atk(4, Coef::one()),
                ]
                .iter()
                .fold(Series::zero(head), |acc, t| &acc + t);
                let relation = vec![
                    (c0.clone(), 0u32),
                    (c0.scale_rat(&kp1), 2),
                    (c0.clone(), 4),
                    (-&quart, 1),
                    (-&quart, 3),
                ];
                algebraic_residual(&relation, &z)?.truncate(n)
            };
            Ok(fmt_series(&resid.truncate_param_degree(*sdeg), format))
        }
        Cmd::SolveAlpha { beta, gamma, order } => {
            let b = parse_series(beta)?;
            let g = parse_series(gamma)?;
            let n = order.unwrap_or_else(|| b.order().min(g.order()));
            Ok(fmt_series(&solve_alpha(&b, &g, n)?, format))
        }
        Cmd::SolveBeta { gamma, order } => {
            let g = parse_series(gamma)?;
            let n = order.unwrap_or_else(|| g.order());
            Ok(fmt_series(&solve_beta(&g, n)?, format))
        }
        Cmd::GroupLog { g } => {
            let l = group_log(&g.elem()?)?;
            Ok(pair("alpha", l.a(), "beta", l.b(), format))
        }
        Cmd::Z0 { w, sdeg } => {
            let ws = egf_weights(w, *sdeg)?;
            Ok(fmt_series(&crate::comb::z0_series(&ws, *sdeg)?, format))
        }
        Cmd::Z0Brute { w, n } => {
            let weights = w.split(',').map(parse_coef).collect::<Result<Vec<Coef>>>()?;
            if weights.len() <= *n {
                return Err(Error::parse(format!("need at least {} weights", n + 1)));
            }
            let c = crate::comb::z0_bruteforce(&weights, *n)?;
            Ok(match format {
                Format::Json => json!({ "n": n, "value": coef_string(&c) }).to_string(),
                _ => coef_string(&c),
            })
        }
        Cmd::Andre { n } => {
            let a = crate::comb::andre_poly(*n);
            Ok(match format {
                Format::Json => json!({
                    "n": n,
                    "coeffs": (0..=a.degree().unwrap_or(0)).map(|k| a.coeff(k).to_string()).collect::<Vec<_>>(),
                })
                .to_string(),
                _ => a.to_string(),
            })
        }
        Cmd::Trees { vertices, class } => {
            let hist = match class {
                TreeClass::S => crate::comb::count_s_histogram(*vertices)?,
                TreeClass::E => crate::comb::count_e_histogram(*vertices)?,
            };
            Ok(match format {
                Format::Json => {
                    let map: serde_json::Map<String, Value> = hist
                        .iter()
                        .map(|(k, v)| (k.to_string(), Value::from(*v)))
                        .collect();
                    Value::Object(map).to_string()
                }
                _ => hist
                    .iter()
                    .map(|(k, v)| format!("{k},{v}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Cmd::Idcomben { n } => {
            let ok = crate::comb::idcomben_check(*n)?;
            Ok(match format {
                Format::Json => json!({ "n": n, "equal": ok }).to_string(),
                _ => ok.to_string(),
            })
        }
        Cmd::UOde { w, sdeg } => {
            let ws = egf_weights(w, *sdeg + 1)?;
            Ok(fmt_series(&crate::comb::u_ode_residual(&ws, *sdeg)?, format))
        }
        Cmd::PolymatMul { p, q } => {
            let a = parse_polymat_json(p)?;
            let b = parse_polymat_json(q)?;
            Ok(fmt_polymat(&pm_mul(&a, &b)?, format))
        }
        Cmd::PolymatExp { p, log } => {
            let a = parse_polymat_json(p)?;
            let out = if *log { pm_log(&a)? } else { pm_exp(&a)? };
            Ok(fmt_polymat(&out, format))
        }
        Cmd::PolymatTau { p, lambda } => {
            let a = parse_polymat_json(p)?;
            Ok(fmt_polymat(&tau_lambda(&a, &parse_rat(lambda)?), format))
        }
    }
}

/// Entry point for the `rlie` binary: parse, dispatch, print, exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli.cmd, cli.format) {
        Ok(out) => {
            println!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
