//! Monic Chebyshev polynomials with `T_0 = 2`, and signed expansions over
//! polynomial bases.
//!
//! Both kinds obey `P_{n+1} = x P_n - P_{n-1}`; the first kind starts from
//! `T_0 = 2, T_1 = x` and the second kind from `V_0 = 1, V_1 = x`. Under
//! `x = 2 cos θ` they satisfy `T_n = 2 cos nθ` and `V_n = sin((n+1)θ) / sin θ`.

use std::fmt;
use std::sync::{PoisonError, RwLock};

use crate::alexander::alexander_n2;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Poly, RationalLaurent};
use crate::qcalc::{q_bracket_ratio, q_number, QBase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChebKind {
    FirstKind,
    SecondKind,
}

impl ChebKind {
    pub fn symbol(self) -> &'static str {
        match self {
            ChebKind::FirstKind => "T",
            ChebKind::SecondKind => "V",
        }
    }
}

static FIRST_KIND: RwLock<Vec<Poly>> = RwLock::new(Vec::new());
static SECOND_KIND: RwLock<Vec<Poly>> = RwLock::new(Vec::new());

/// `T_n` or `V_n`, generated by the three-term recurrence and memoized.
pub fn chebyshev(kind: ChebKind, n: usize) -> Poly {
    let table = match kind {
        ChebKind::FirstKind => &FIRST_KIND,
        ChebKind::SecondKind => &SECOND_KIND,
    };
    if let Some(p) = table.read().unwrap_or_else(PoisonError::into_inner).get(n) {
        return p.clone();
    }
    let mut seq = table.write().unwrap_or_else(PoisonError::into_inner);
    if seq.is_empty() {
        let p0 = match kind {
            ChebKind::FirstKind => Poly::constant(2),
            ChebKind::SecondKind => Poly::constant(1),
        };
        seq.push(p0);
        seq.push(Poly::x());
    }
    while seq.len() <= n {
        let k = seq.len();
        let next = &seq[k - 1].mul_x() - &seq[k - 2];
        seq.push(next);
    }
    seq[n].clone()
}

pub fn cheb_t(n: usize) -> Poly {
    chebyshev(ChebKind::FirstKind, n)
}

pub fn cheb_v(n: usize) -> Poly {
    chebyshev(ChebKind::SecondKind, n)
}

/// `x = t + t^-1`.
pub fn x_var() -> LaurentPoly {
    &LaurentPoly::t_pow(1) + &LaurentPoly::t_pow(-1)
}

/// `y = t^(1/2) + t^(-1/2)`.
pub fn y_var() -> LaurentPoly {
    &LaurentPoly::t_half_pow(1) + &LaurentPoly::t_half_pow(-1)
}

/// The basis an [`Expansion`] is written over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `T_k(x)` or `V_k(x)` with `x = t + t^-1`.
    Chebyshev(ChebKind),
    /// Laurent-form Alexander polynomials of `T(k, 2)`.
    AlexanderN2,
    /// q-numbers `[k]_q`.
    QNumber(QBase),
    /// Fractional q-brackets `[k/denom]_q`.
    QFraction { denom: u64, base: QBase },
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Chebyshev(kind) => f.write_str(kind.symbol()),
            Basis::AlexanderN2 => f.write_str("delta2"),
            Basis::QNumber(base) => write!(f, "qnum(s={})", base.s()),
            Basis::QFraction { denom, base } => write!(f, "qfrac(d={denom},s={})", base.s()),
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown basis `{s}`"));
        let num = |v: &str| v.parse::<u64>().map_err(|_| bad());
        match s {
            "T" => return Ok(Basis::Chebyshev(ChebKind::FirstKind)),
            "V" => return Ok(Basis::Chebyshev(ChebKind::SecondKind)),
            "delta2" => return Ok(Basis::AlexanderN2),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("qnum(s=").and_then(|r| r.strip_suffix(')')) {
            return Ok(Basis::QNumber(QBase::new(num(rest)?)?));
        }
        if let Some(rest) = s.strip_prefix("qfrac(d=").and_then(|r| r.strip_suffix(')')) {
            let (d, base) = rest.split_once(",s=").ok_or_else(bad)?;
            let (denom, base) = (num(d)?, QBase::new(num(base)?)?);
            if denom == 0 || base.s() % denom != 0 {
                return Err(Error::InvalidBase {
                    s: base.s(),
                    d: denom,
                });
            }
            return Ok(Basis::QFraction { denom, base });
        }
        Err(bad())
    }
}

/// Signed integer combination of basis elements plus a basis-free constant.
///
/// Terms are kept with strictly decreasing index and nonzero coefficients.
/// Negative indices are dropped at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expansion {
    basis: Basis,
    terms: Vec<(u64, i64)>,
    constant: i64,
}

impl Expansion {
    pub fn new(basis: Basis, terms: impl IntoIterator<Item = (i64, i64)>, constant: i64) -> Self {
        let mut combined = std::collections::BTreeMap::<u64, i64>::new();
        for (index, coeff) in terms {
            if let Ok(index) = u64::try_from(index) {
                *combined.entry(index).or_default() += coeff;
            }
        }
        let terms = combined
            .into_iter()
            .rev()
            .filter(|&(_, c)| c != 0)
            .collect();
        Expansion {
            basis,
            terms,
            constant,
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// `(index, coefficient)` pairs by descending index.
    pub fn terms(&self) -> &[(u64, i64)] {
        &self.terms
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty() && self.constant == 0
    }

    pub fn element(&self, index: u64) -> Result<LaurentPoly> {
        match self.basis {
            Basis::Chebyshev(kind) => Ok(chebyshev(kind, index as usize).compose(&x_var())),
            Basis::AlexanderN2 => alexander_n2(index),
            Basis::QNumber(base) => Ok(q_number(index, base)),
            Basis::QFraction { denom, base } => q_bracket_ratio(index, denom, base)?.finalize(),
        }
    }

    /// Sums the expansion into a single Laurent polynomial.
    pub fn eval(&self) -> Result<LaurentPoly> {
        if let Basis::QFraction { denom, base } = self.basis {
            // fractional brackets need not be polynomials individually
            let mut acc = RationalLaurent::from(LaurentPoly::constant(self.constant));
            for &(index, coeff) in &self.terms {
                let r = q_bracket_ratio(index, denom, base)?;
                let scaled = RationalLaurent::new(r.num().scale(&coeff.into()), r.den().clone())?;
                acc = &acc + &scaled;
            }
            return acc.finalize();
        }
        let mut acc = LaurentPoly::constant(self.constant);
        for &(index, coeff) in &self.terms {
            acc += &self.element(index)?.scale(&coeff.into());
        }
        Ok(acc)
    }
}
