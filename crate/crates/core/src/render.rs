//! Text, LaTeX and JSON renderings, and the decoders that read them back.
//!
//! Text and LaTeX list terms by strictly descending exponent. A coefficient
//! of `+1` or `-1` on a non-constant monomial is written without the numeral.
//! Half-integer exponents appear as `t^(3/2)` in text and `t^{3/2}` in LaTeX.
//!
//! JSON carries exponents doubled (`exp2`) and coefficients as decimal
//! strings, so arbitrarily large values survive the round trip.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chebyshev::{Basis, ChebKind, Expansion};
use crate::poly::{HalfExp, LaurentPoly, Poly};
use crate::qcalc::QBase;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = DecodeError;

    fn from_str(s: &str) -> Result<Self, DecodeError> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            _ => Err(DecodeError::Invalid(format!("unknown output format `{s}`"))),
        }
    }
}

/// Failure to read a rendered value back.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("parse error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("invalid value: {0}")]
    Invalid(String),
}

impl From<serde_json::Error> for DecodeError {
    fn from(e: serde_json::Error) -> Self {
        DecodeError::Json(e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

/// Joins `(coefficient, monomial)` pairs into `a - b + c`; an empty monomial
/// marks the constant term.
fn join_terms<'a>(terms: impl Iterator<Item = (&'a BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if mono.is_empty() || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn power(var: &str, exp: HalfExp, style: Style) -> String {
    let k = exp.twice();
    match (k, k % 2 == 0, style) {
        (0, _, _) => String::new(),
        (2, _, _) => var.to_string(),
        (_, true, Style::Text) => format!("{var}^{}", k / 2),
        (_, true, Style::Latex) => format!("{var}^{{{}}}", k / 2),
        (_, false, Style::Text) => format!("{var}^({k}/2)"),
        (_, false, Style::Latex) => format!("{var}^{{{k}/2}}"),
    }
}

pub fn laurent_text(p: &LaurentPoly) -> String {
    join_terms(p.terms_desc().map(|(e, c)| (c, power("t", e, Style::Text))))
}

pub fn laurent_latex(p: &LaurentPoly) -> String {
    join_terms(
        p.terms_desc()
            .map(|(e, c)| (c, power("t", e, Style::Latex))),
    )
}

fn poly_terms<'a>(
    p: &'a Poly,
    var: &'a str,
    style: Style,
) -> impl Iterator<Item = (&'a BigInt, String)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(move |(d, c)| (c, power(var, HalfExp::integer(d as i64), style)))
}

pub fn poly_text(p: &Poly, var: &str) -> String {
    join_terms(poly_terms(p, var, Style::Text))
}

pub fn poly_latex(p: &Poly, var: &str) -> String {
    join_terms(poly_terms(p, var, Style::Latex))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&laurent_text(self))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_text(self, "x"))
    }
}

fn q_subscript(base: QBase, style: Style) -> String {
    let s = base.s();
    match (s, s % 2 == 0, style) {
        (2, _, _) => "t".into(),
        (_, true, Style::Text) => format!("t^{}", s / 2),
        (_, true, Style::Latex) => format!("t^{{{}}}", s / 2),
        (_, false, Style::Text) => format!("t^({s}/2)"),
        (_, false, Style::Latex) => format!("t^{{{s}/2}}"),
    }
}

fn basis_element(basis: Basis, index: u64, style: Style) -> String {
    match (basis, style) {
        (Basis::Chebyshev(kind), Style::Text) => format!("{}{index}", kind.symbol()),
        (Basis::Chebyshev(kind), Style::Latex) => format!("{}_{{{index}}}(x)", kind.symbol()),
        (Basis::AlexanderN2, Style::Text) => format!("D({index},2)"),
        (Basis::AlexanderN2, Style::Latex) => format!("\\Delta_{{{index},2}}(t)"),
        (Basis::QNumber(b), Style::Text) => format!("[{index}]_{}", q_subscript(b, style)),
        (Basis::QNumber(b), Style::Latex) => format!("[{index}]_{{{}}}", q_subscript(b, style)),
        (Basis::QFraction { denom, base }, Style::Text) => {
            format!("[{index}/{denom}]_{}", q_subscript(base, style))
        }
        (Basis::QFraction { denom, base }, Style::Latex) => {
            format!(
                "[\\tfrac{{{index}}}{{{denom}}}]_{{{}}}",
                q_subscript(base, style)
            )
        }
    }
}

/// Signed term list, e.g. `+T2 -T1 +1` or `+D(7,2) -D(3,2) +D(1,2)`.
pub fn expansion_text(e: &Expansion) -> String {
    let mut parts: Vec<String> = e
        .terms()
        .iter()
        .map(|&(index, c)| {
            let sign = if c < 0 { '-' } else { '+' };
            let mag = c.unsigned_abs();
            let num = if mag == 1 {
                String::new()
            } else {
                mag.to_string()
            };
            format!(
                "{sign}{num}{}",
                basis_element(e.basis(), index, Style::Text)
            )
        })
        .collect();
    if e.constant() != 0 {
        parts.push(format!("{:+}", e.constant()));
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" ")
}

pub fn expansion_latex(e: &Expansion) -> String {
    let consts = [BigInt::from(e.constant())];
    let coeffs: Vec<BigInt> = e.terms().iter().map(|&(_, c)| c.into()).collect();
    let terms = e
        .terms()
        .iter()
        .zip(&coeffs)
        .map(|(&(index, _), c)| (c, basis_element(e.basis(), index, Style::Latex)))
        .chain(
            consts
                .iter()
                .filter(|c| !c.is_zero())
                .map(|c| (c, String::new())),
        );
    join_terms(terms)
}

/// Parses the text or LaTeX rendering of a Laurent polynomial.
///
/// Accepts `2t^3`, `2*t^3`, `t^-2`, `t^(3/2)`, `t^{-3/2}`; whitespace is
/// ignored and repeated exponents are summed.
pub fn parse_laurent(input: &str) -> Result<LaurentPoly, DecodeError> {
    Parser::new(input).polynomial()
}

struct Parser<'a> {
    // (offset, byte) of each non-whitespace byte
    bytes: Vec<(usize, u8)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let bytes = src
            .bytes()
            .enumerate()
            .filter(|(_, b)| !b.is_ascii_whitespace())
            .collect();
        Parser { bytes, pos: 0, src }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).map(|&(_, b)| b)
    }

    fn offset(&self) -> usize {
        self.bytes.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, DecodeError> {
        Err(DecodeError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
            let split = self.pos > start
                && self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|&(i, _)| i != self.bytes[self.pos - 1].0 + 1);
            if split {
                break;
            }
        }
        (self.pos > start).then(|| {
            self.bytes[start..self.pos]
                .iter()
                .map(|&(_, b)| b as char)
                .collect()
        })
    }

    fn polynomial(&mut self) -> Result<LaurentPoly, DecodeError> {
        if self.peek().is_none() {
            return self.err("empty input");
        }
        let mut out = LaurentPoly::zero();
        let mut first = true;
        while self.peek().is_some() {
            let negative = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else {
                return self.err("expected `+` or `-` between terms");
            };
            first = false;
            let (exp, coeff) = self.term()?;
            let coeff = if negative { -coeff } else { coeff };
            out += &LaurentPoly::monomial(exp, coeff);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(HalfExp, BigInt), DecodeError> {
        let coeff = self.digits();
        let has_var = if coeff.is_some() && self.eat(b'*') {
            if self.peek() != Some(b't') {
                return self.err("expected `t` after `*`");
            }
            true
        } else {
            self.peek() == Some(b't')
        };
        if coeff.is_none() && !has_var {
            return self.err("expected a coefficient or `t`");
        }
        let coeff = match coeff {
            Some(d) => d
                .parse::<BigInt>()
                .or_else(|_| self.err("bad coefficient"))?,
            None => BigInt::one(),
        };
        if !has_var {
            return Ok((HalfExp::ZERO, coeff));
        }
        self.pos += 1;
        if !self.eat(b'^') {
            return Ok((HalfExp::integer(1), coeff));
        }
        let exp = self.exponent()?;
        Ok((exp, coeff))
    }

    fn signed_int(&mut self) -> Result<i64, DecodeError> {
        let negative = self.eat(b'-');
        let Some(d) = self.digits() else {
            return self.err("expected an integer exponent");
        };
        let v: i64 = d.parse().or_else(|_| self.err("exponent out of range"))?;
        Ok(if negative { -v } else { v })
    }

    fn exponent(&mut self) -> Result<HalfExp, DecodeError> {
        let close = if self.eat(b'(') {
            Some(b')')
        } else if self.eat(b'{') {
            Some(b'}')
        } else {
            None
        };
        let num = self.signed_int()?;
        let mut den = 1;
        if close.is_some() && self.eat(b'/') {
            den = self.signed_int()?;
        }
        if let Some(c) = close {
            if !self.eat(c) {
                return self.err(format!("expected `{}`", c as char));
            }
        }
        let twice = match den {
            1 => num.checked_mul(2),
            2 => Some(num),
            _ => return self.err("exponent denominator must be 1 or 2"),
        };
        match twice {
            Some(k) => Ok(HalfExp::from_twice(k)),
            None => self.err("exponent out of range"),
        }
    }
}

/// One `(exp2, coef)` pair of the JSON term list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp2: i64,
    pub coef: String,
}

/// Terms sorted by descending exponent.
pub fn terms_to_json(p: &LaurentPoly) -> Vec<TermJson> {
    p.terms_desc()
        .map(|(e, c)| TermJson {
            exp2: e.twice(),
            coef: c.to_string(),
        })
        .collect()
}

/// Inverse of [`terms_to_json`]. Exponents must be strictly descending and
/// coefficients nonzero decimal integers.
pub fn terms_from_json(terms: &[TermJson]) -> Result<LaurentPoly, DecodeError> {
    let mut prev: Option<i64> = None;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        if prev.is_some_and(|p| t.exp2 >= p) {
            return Err(DecodeError::Invalid(format!(
                "exponents must be strictly descending at exp2={}",
                t.exp2
            )));
        }
        prev = Some(t.exp2);
        let c = parse_coef(&t.coef)?;
        if c.is_zero() {
            return Err(DecodeError::Invalid(format!(
                "zero coefficient at exp2={}",
                t.exp2
            )));
        }
        out.push((HalfExp::from_twice(t.exp2), c));
    }
    Ok(LaurentPoly::from_terms(out))
}

fn parse_coef(s: &str) -> Result<BigInt, DecodeError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(DecodeError::Invalid(format!("bad coefficient `{s}`")));
    }
    s.parse()
        .map_err(|_| DecodeError::Invalid(format!("bad coefficient `{s}`")))
}

fn write_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize infallibly")
}

/// A Laurent polynomial tagged with the knot and the form it was computed by.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub n: u64,
    pub l: u64,
    pub form: String,
    pub terms: Vec<TermJson>,
}

impl PolyReport {
    pub fn new(n: u64, l: u64, form: impl Into<String>, p: &LaurentPoly) -> Self {
        PolyReport {
            n,
            l,
            form: form.into(),
            terms: terms_to_json(p),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, DecodeError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn polynomial(&self) -> Result<LaurentPoly, DecodeError> {
        terms_from_json(&self.terms)
    }

    pub fn render(&self, fmt: OutputFormat) -> Result<String, DecodeError> {
        Ok(match fmt {
            OutputFormat::Text => laurent_text(&self.polynomial()?),
            OutputFormat::Latex => laurent_latex(&self.polynomial()?),
            OutputFormat::Json => write_json(self),
        })
    }
}

/// `[n]_q` with `q = t^(s/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QnumReport {
    pub n: u64,
    pub s: u64,
    pub terms: Vec<TermJson>,
}

impl QnumReport {
    pub fn from_json(s: &str) -> Result<Self, DecodeError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn render(&self, fmt: OutputFormat) -> Result<String, DecodeError> {
        let p = terms_from_json(&self.terms)?;
        Ok(match fmt {
            OutputFormat::Text => laurent_text(&p),
            OutputFormat::Latex => laurent_latex(&p),
            OutputFormat::Json => write_json(self),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTermJson {
    pub degree: u64,
    pub coef: String,
}

/// `T_n(x)` or `V_n(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChebyshevReport {
    pub kind: String,
    pub n: u64,
    pub terms: Vec<DegreeTermJson>,
}

impl ChebyshevReport {
    pub fn new(kind: ChebKind, n: u64, p: &Poly) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| DegreeTermJson {
                degree: d as u64,
                coef: c.to_string(),
            })
            .collect();
        ChebyshevReport {
            kind: kind.symbol().into(),
            n,
            terms,
        }
    }

    pub fn from_json(s: &str) -> Result<Self, DecodeError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn polynomial(&self) -> Result<Poly, DecodeError> {
        let laurent = terms_from_json(
            &self
                .terms
                .iter()
                .map(|t| {
                    let exp2 = i64::try_from(t.degree)
                        .ok()
                        .and_then(|d| d.checked_mul(2))
                        .ok_or_else(|| DecodeError::Invalid("degree out of range".into()))?;
                    Ok(TermJson {
                        exp2,
                        coef: t.coef.clone(),
                    })
                })
                .collect::<Result<Vec<_>, DecodeError>>()?,
        )?;
        if laurent.max_exp().is_some_and(|e| e.twice() > 2 * 100_000) {
            return Err(DecodeError::Invalid("degree too large".into()));
        }
        Poly::from_laurent(&laurent).ok_or_else(|| DecodeError::Invalid("negative degree".into()))
    }

    pub fn render(&self, fmt: OutputFormat) -> Result<String, DecodeError> {
        Ok(match fmt {
            OutputFormat::Text => poly_text(&self.polynomial()?, "x"),
            OutputFormat::Latex => poly_latex(&self.polynomial()?, "x"),
            OutputFormat::Json => write_json(self),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTermJson {
    pub index: u64,
    pub coef: i64,
}

/// A signed basis expansion of `D(n, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub n: u64,
    pub l: u64,
    pub basis: String,
    pub terms: Vec<ExpansionTermJson>,
    pub constant: i64,
}

impl ExpansionReport {
    pub fn new(n: u64, l: u64, e: &Expansion) -> Self {
        ExpansionReport {
            n,
            l,
            basis: e.basis().to_string(),
            terms: e
                .terms()
                .iter()
                .map(|&(index, coef)| ExpansionTermJson { index, coef })
                .collect(),
            constant: e.constant(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, DecodeError> {
        Ok(serde_json::from_str(s)?)
    }

    /// Rebuilds the expansion; the term list must already be canonical.
    pub fn expansion(&self) -> Result<Expansion, DecodeError> {
        let basis: Basis = self
            .basis
            .parse()
            .map_err(|e: crate::Error| DecodeError::Invalid(e.to_string()))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let index = i64::try_from(t.index)
                .map_err(|_| DecodeError::Invalid(format!("index {} out of range", t.index)))?;
            terms.push((index, t.coef));
        }
        let e = Expansion::new(basis, terms, self.constant);
        let canonical = e.terms().len() == self.terms.len()
            && e.terms()
                .iter()
                .zip(&self.terms)
                .all(|(&(i, c), t)| i == t.index && c == t.coef);
        if !canonical {
            return Err(DecodeError::Invalid(
                "terms must have nonzero coefficients and strictly descending indices".into(),
            ));
        }
        Ok(e)
    }

    pub fn render(&self, fmt: OutputFormat) -> Result<String, DecodeError> {
        Ok(match fmt {
            OutputFormat::Text => expansion_text(&self.expansion()?),
            OutputFormat::Latex => expansion_latex(&self.expansion()?),
            OutputFormat::Json => write_json(self),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::{alexander_laurent, alexander_standard, TorusKnotId};
    use crate::chebyshev::cheb_t;
    use crate::expansions::{decompose_n3, n2_to_t, n3_to_v, q_expansion};
    use proptest::prelude::*;

    fn knot(n: u64, l: u64) -> TorusKnotId {
        TorusKnotId::new(n, l).unwrap()
    }

    #[test]
    fn laurent_renderings() {
        let d43 = alexander_laurent(knot(4, 3));
        assert_eq!(laurent_text(&d43), "t^3 - t^2 + 1 - t^-2 + t^-3");
        assert_eq!(laurent_latex(&d43), "t^{3} - t^{2} + 1 - t^{-2} + t^{-3}");
        let std32 = alexander_standard(knot(3, 2));
        assert_eq!(poly_text(&std32, "t"), "t^2 - t + 1");
        let y = &LaurentPoly::t_half_pow(3) - &LaurentPoly::t_half_pow(-1).scale(&2.into());
        assert_eq!(laurent_text(&y), "t^(3/2) - 2t^(-1/2)");
        assert_eq!(laurent_latex(&y), "t^{3/2} - 2t^{-1/2}");
        assert_eq!(laurent_text(&LaurentPoly::zero()), "0");
        assert_eq!(laurent_text(&LaurentPoly::constant(-3)), "-3");
        assert_eq!(laurent_text(&-&LaurentPoly::t_pow(-1)), "-t^-1");
        assert_eq!(cheb_t(5).to_string(), "x^5 - 5x^3 + 5x");
    }

    #[test]
    fn expansion_renderings() {
        assert_eq!(
            expansion_text(&decompose_n3(7).unwrap()),
            "+D(13,2) -D(9,2) +D(7,2) -D(3,2) +D(1,2)"
        );
        assert_eq!(expansion_text(&n2_to_t(5).unwrap()), "+T2 -T1 +1");
        assert_eq!(expansion_text(&n3_to_v(4).unwrap()), "+V3 -V2 -V1 +2V0");
        assert_eq!(
            expansion_latex(&n2_to_t(5).unwrap()),
            "T_{2}(x) - T_{1}(x) + 1"
        );
        assert_eq!(
            expansion_latex(&decompose_n3(4).unwrap()),
            "\\Delta_{7,2}(t) - \\Delta_{3,2}(t) + \\Delta_{1,2}(t)"
        );
        assert_eq!(expansion_text(&q_expansion(5, 2).unwrap()), "+[3]_t -[2]_t");
        assert_eq!(
            expansion_text(&q_expansion(2, 3).unwrap()),
            "+[5/3]_t^(3/2) -[3/3]_t^(3/2) +[1/3]_t^(3/2)"
        );
        assert_eq!(
            expansion_text(&Expansion::new(Basis::AlexanderN2, [], 0)),
            "0"
        );
    }

    #[test]
    fn parser_accepts_both_styles() {
        let d43 = alexander_laurent(knot(4, 3));
        assert_eq!(parse_laurent("t^3 - t^2 + 1 - t^-2 + t^-3").unwrap(), d43);
        assert_eq!(
            parse_laurent("t^{3} - t^{2} + 1 - t^{-2} + t^{-3}").unwrap(),
            d43
        );
        assert_eq!(
            parse_laurent("2*t^(3/2)+t^{-1/2}").unwrap(),
            LaurentPoly::from_terms([(HalfExp::from_twice(3), 2), (HalfExp::from_twice(-1), 1)])
        );
        assert_eq!(parse_laurent("0").unwrap(), LaurentPoly::zero());
        assert_eq!(parse_laurent("t - t").unwrap(), LaurentPoly::zero());
        assert_eq!(parse_laurent("-t").unwrap(), -&LaurentPoly::t_pow(1));
    }

    #[test]
    fn parser_rejects_garbage() {
        for bad in [
            "",
            "t^",
            "t^(1/3)",
            "2 3",
            "x",
            "t^(3/2",
            "1 +",
            "2*",
            "t^99999999999999999999",
        ] {
            assert!(parse_laurent(bad).is_err(), "{bad:?}");
        }
        assert!(parse_laurent(&format!("t^{}", i64::MAX)).is_err());
    }

    #[test]
    fn json_decoding_is_strict() {
        let ok = r#"{"n":3,"l":2,"form":"laurent","terms":[{"exp2":2,"coef":"1"},{"exp2":0,"coef":"-1"},{"exp2":-2,"coef":"1"}]}"#;
        let r = PolyReport::from_json(ok).unwrap();
        assert_eq!(r.polynomial().unwrap(), alexander_laurent(knot(3, 2)));
        let unsorted = r#"{"n":3,"l":2,"form":"laurent","terms":[{"exp2":0,"coef":"1"},{"exp2":2,"coef":"1"}]}"#;
        assert!(PolyReport::from_json(unsorted)
            .unwrap()
            .polynomial()
            .is_err());
        let zero = r#"{"n":3,"l":2,"form":"laurent","terms":[{"exp2":0,"coef":"0"}]}"#;
        assert!(PolyReport::from_json(zero).unwrap().polynomial().is_err());
        let junk = r#"{"n":3,"l":2,"form":"laurent","terms":[{"exp2":0,"coef":"+1"}]}"#;
        assert!(PolyReport::from_json(junk).unwrap().polynomial().is_err());
        assert!(PolyReport::from_json("{").is_err());
    }

    #[test]
    fn report_round_trips() {
        let p = alexander_laurent(knot(7, 5));
        let r = PolyReport::new(7, 5, "laurent", &p);
        let json = r.render(OutputFormat::Json).unwrap();
        let back = PolyReport::from_json(&json).unwrap();
        assert_eq!(
            back.render(OutputFormat::Text).unwrap(),
            r.render(OutputFormat::Text).unwrap()
        );
        let e = ExpansionReport::new(7, 3, &decompose_n3(7).unwrap());
        let back = ExpansionReport::from_json(&e.render(OutputFormat::Json).unwrap()).unwrap();
        assert_eq!(back, e);
        assert_eq!(
            back.render(OutputFormat::Text).unwrap(),
            "+D(13,2) -D(9,2) +D(7,2) -D(3,2) +D(1,2)"
        );
        let c = ChebyshevReport::new(ChebKind::FirstKind, 5, &cheb_t(5));
        let back = ChebyshevReport::from_json(&c.render(OutputFormat::Json).unwrap()).unwrap();
        assert_eq!(back.render(OutputFormat::Text).unwrap(), "x^5 - 5x^3 + 5x");
    }

    #[test]
    fn expansion_report_rejects_non_canonical_terms() {
        let e = ExpansionReport {
            n: 4,
            l: 3,
            basis: "V".into(),
            terms: vec![
                ExpansionTermJson { index: 0, coef: 1 },
                ExpansionTermJson { index: 3, coef: 1 },
            ],
            constant: 0,
        };
        assert!(e.expansion().is_err());
        let e = ExpansionReport {
            basis: "qfrac(d=2,s=3)".into(),
            terms: vec![],
            ..e
        };
        assert!(e.expansion().is_err());
    }

    fn arb_lp() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-40i64..40, -1000i64..1000), 0..10).prop_map(|v| {
            LaurentPoly::from_terms(v.into_iter().map(|(k, c)| (HalfExp::from_twice(k), c)))
        })
    }

    proptest! {
        #[test]
        fn text_and_latex_reparse(p in arb_lp()) {
            prop_assert_eq!(parse_laurent(&laurent_text(&p)).unwrap(), p.clone());
            prop_assert_eq!(parse_laurent(&laurent_latex(&p)).unwrap(), p.clone());
            prop_assert_eq!(terms_from_json(&terms_to_json(&p)).unwrap(), p);
        }

        #[test]
        fn parser_never_panics(s in "[-+0-9t^(){}/* ]{0,24}") {
            let _ = parse_laurent(&s);
        }
    }
}
