//! Plain-text, LaTeX and JSON renderings.
//!
//! Monomials are always listed in graded-lexicographic order (increasing
//! total degree; within a degree `q_1` before `q_2`), so output is stable.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use weylgen::{EulerRational, Poly, Rational, Reduced, UniPoly, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

/// Rendered command output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputDocument {
    pub format: Format,
    pub body: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

fn exponent(style: Style, e: u32) -> String {
    match style {
        Style::Latex if e >= 10 => format!("^{{{e}}}"),
        _ => format!("^{e}"),
    }
}

fn monomial(style: Style, exps: &[u32], names: &[String]) -> String {
    let mut out = String::new();
    for (e, name) in exps.iter().zip(names) {
        match e {
            0 => {}
            1 => out.push_str(name),
            _ => {
                out.push_str(name);
                out.push_str(&exponent(style, *e));
            }
        }
    }
    out
}

fn coefficient(style: Style, c: &Rational) -> String {
    if c.is_integer() {
        return c.to_integer().to_string();
    }
    let sign = if c < &Rational::zero() { "-" } else { "" };
    let (n, d) = (c.numer().magnitude(), c.denom());
    match style {
        Style::Text => format!("{sign}({n}/{d})"),
        Style::Latex => format!("{sign}\\frac{{{n}}}{{{d}}}"),
    }
}

fn terms_string<'a, I>(style: Style, terms: I, names: &[String]) -> String
where
    I: IntoIterator<Item = (&'a [u32], &'a Rational)>,
{
    let mut out = String::new();
    for (exps, c) in terms {
        let m = monomial(style, exps, names);
        let piece = if m.is_empty() {
            coefficient(style, c)
        } else if c.is_one() {
            m
        } else if *c == -Rational::one() {
            format!("-{m}")
        } else {
            format!("{}{m}", coefficient(style, c))
        };
        if !out.is_empty() && !piece.starts_with('-') {
            out.push('+');
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn var_names(k: usize) -> Vec<String> {
    (1..=k).map(|j| format!("q_{j}")).collect()
}

fn poly_string(style: Style, p: &Poly) -> String {
    let names = var_names(p.nvars());
    terms_string(style, p.grlex_terms().into_iter().map(|(m, c)| (m.as_slice(), c)), &names)
}

fn unipoly_string(style: Style, p: &UniPoly) -> String {
    let names = vec!["q".to_string()];
    let terms: Vec<(Vec<u32>, &Rational)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (vec![i as u32], c))
        .collect();
    terms_string(style, terms.iter().map(|(m, c)| (m.as_slice(), *c)), &names)
}

/// Denominator factors `(1-x)^e`, skipping zero exponents.
fn one_minus_factors(style: Style, names: &[String], exps: &[u32]) -> Vec<String> {
    names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { format!("(1-{n})") } else { format!("(1-{n}){}", exponent(style, e)) })
        .collect()
}

fn fraction(style: Style, num: String, num_terms: usize, den_factors: Vec<String>) -> String {
    if den_factors.is_empty() {
        return num;
    }
    let den = den_factors.concat();
    match style {
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
        Style::Text => {
            let num = if num_terms > 1 { format!("({num})") } else { num };
            let den = if den_factors.len() > 1 { format!("({den})") } else { den };
            format!("{num}/{den}")
        }
    }
}

pub fn numerator_text(f: &EulerRational) -> String {
    poly_string(Style::Text, f.numerator())
}

pub fn numerator_latex(f: &EulerRational) -> String {
    poly_string(Style::Latex, f.numerator())
}

pub fn series_text(f: &EulerRational) -> String {
    render_series(Style::Text, f)
}

pub fn series_latex(f: &EulerRational) -> String {
    render_series(Style::Latex, f)
}

fn render_series(style: Style, f: &EulerRational) -> String {
    let names = var_names(f.nvars());
    fraction(
        style,
        poly_string(style, f.numerator()),
        f.numerator().num_terms(),
        one_minus_factors(style, &names, f.den_exps()),
    )
}

fn render_reduced(style: Style, r: &Reduced) -> String {
    let num = r.series.numerator();
    let num_terms = num.coeffs().iter().filter(|c| !c.is_zero()).count();
    let factors = match r.standard_exponent {
        Some(d) => one_minus_factors(style, &["q".to_string()], &[d]),
        None if r.series.denominator() == &UniPoly::one() => Vec::new(),
        None => vec![format!("({})", unipoly_string(style, r.series.denominator()))],
    };
    fraction(style, unipoly_string(style, num), num_terms, factors)
}

pub fn reduced_text(r: &Reduced) -> String {
    let mut out = render_reduced(Style::Text, r);
    match r.standard_exponent {
        Some(d) => out.push_str(&format!("\nD = {d}")),
        None => out.push_str("\ndenominator is not a power of (1-q)"),
    }
    out
}

pub fn reduced_latex(r: &Reduced) -> String {
    render_reduced(Style::Latex, r)
}

pub fn report_text(report: &VerificationReport) -> String {
    let mut out = format!("{} checked, {} mismatches", report.checked, report.mismatches.len());
    for m in &report.mismatches {
        let idx: Vec<String> = m.index.iter().map(|a| a.to_string()).collect();
        out.push_str(&format!("\n  a=({}): expected {}, got {}", idx.join(","), m.expected, m.got));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

/// `{"vars": k, "numerator": [...], "den_exps": [...]}`; specialized series
/// whose denominator is not a power of `(1-q)` carry `denominator` instead
/// of `den_exps`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub vars: usize,
    pub numerator: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<Vec<TermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den_exps: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub exp: Vec<usize>,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub checked: usize,
    pub mismatches: Vec<MismatchJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimJson {
    pub dim: String,
}

fn poly_terms_json(p: &Poly) -> Vec<TermJson> {
    p.grlex_terms()
        .into_iter()
        .map(|(m, c)| TermJson { exp: m.clone(), coeff: c.to_string() })
        .collect()
}

fn unipoly_terms_json(p: &UniPoly) -> Vec<TermJson> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| TermJson { exp: vec![i as u32], coeff: c.to_string() })
        .collect()
}

pub fn series_json(f: &EulerRational) -> SeriesJson {
    SeriesJson {
        vars: f.nvars(),
        numerator: poly_terms_json(f.numerator()),
        denominator: None,
        den_exps: Some(f.den_exps().to_vec()),
    }
}

pub fn reduced_json(r: &Reduced) -> SeriesJson {
    let numerator = unipoly_terms_json(r.series.numerator());
    match r.standard_exponent {
        Some(d) => SeriesJson { vars: 1, numerator, denominator: None, den_exps: Some(vec![d]) },
        None => SeriesJson {
            vars: 1,
            numerator,
            denominator: Some(unipoly_terms_json(r.series.denominator())),
            den_exps: None,
        },
    }
}

pub fn report_json(report: &VerificationReport) -> ReportJson {
    ReportJson {
        checked: report.checked,
        mismatches: report
            .mismatches
            .iter()
            .map(|m| MismatchJson {
                exp: m.index.clone(),
                expected: m.expected.to_string(),
                got: m.got.to_string(),
            })
            .collect(),
    }
}

pub fn dim_json(d: &BigInt) -> DimJson {
    DimJson { dim: d.to_string() }
}

/// Rebuild a multi-variate series from its JSON document.
pub fn series_from_json(doc: &SeriesJson) -> Result<EulerRational, String> {
    let den_exps = doc
        .den_exps
        .clone()
        .ok_or_else(|| "series document has no `den_exps`".to_string())?;
    if den_exps.len() != doc.vars {
        return Err(format!("`den_exps` has {} entries, expected {}", den_exps.len(), doc.vars));
    }
    let mut terms = Vec::with_capacity(doc.numerator.len());
    for t in &doc.numerator {
        if t.exp.len() != doc.vars {
            return Err(format!("exponent {:?} does not have {} entries", t.exp, doc.vars));
        }
        let c: Rational = t.coeff.trim().parse().map_err(|_| format!("bad coefficient `{}`", t.coeff))?;
        terms.push((t.exp.clone(), c));
    }
    let p = Poly::from_terms(doc.vars, terms).map_err(|e| e.to_string())?;
    EulerRational::new(p, den_exps).map_err(|e| e.to_string())
}
