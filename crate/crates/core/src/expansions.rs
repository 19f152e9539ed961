//! Re-expressions of torus-knot Alexander polynomials.
//!
//! * `T(n, 3)` as a signed sum of `T(k, 2)` polynomials ([`decompose_n3`]).
//! * `T(n, 2)` and `T(n, 3)` over the Chebyshev bases with `x = t + t^-1`
//!   ([`n2_to_v`], [`n2_to_t`], [`n3_to_v`], [`n3_to_t`]).
//! * A catalog of closed forms in `x`, `y = t^(1/2) + t^(-1/2)` and
//!   q-numbers, each computed by exact division ([`compute_form`]).
//! * The numeric reduction of `T(n, l)` to `T(n, 2)` through the root of a
//!   quadratic ([`functional_dependence_eval`]).
//!
//! Throughout, basis elements with a negative index are omitted.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::alexander::{alexander_n2, alexander_n3, TorusKnotId};
use crate::chebyshev::{cheb_t, cheb_v, x_var, y_var, Basis, ChebKind, Expansion};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, RationalLaurent};
use crate::qcalc::{q_bracket_ratio, q_number, QBase};

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn require_odd(n: u64) -> Result<()> {
    if n % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "n must be odd for l = 2 (got {n})"
        )));
    }
    Ok(())
}

fn require_coprime_to_3(n: u64) -> Result<()> {
    if n == 0 || n % 3 == 0 {
        return Err(Error::InvalidInput(format!(
            "n must be positive and coprime to 3 for l = 3 (got {n})"
        )));
    }
    Ok(())
}

/// `T(n, 3)` as `sum_{j=0}^{d} (D(2n-1-6j, 2) - D(2n-5-6j, 2))`, `d = floor((2n-1)/6)`.
pub fn decompose_n3(n: u64) -> Result<Expansion> {
    require_coprime_to_3(n)?;
    let n = n as i64;
    let d = (2 * n - 1) / 6;
    let terms = (0..=d).flat_map(|j| [(2 * n - 1 - 6 * j, 1), (2 * n - 5 - 6 * j, -1)]);
    Ok(Expansion::new(Basis::AlexanderN2, terms, 0))
}

/// Unrolls the three-step recurrence
/// `D(n,3) = D(2n-1,2) - D(2n-5,2) + D(n-3,3)` down to `D(1,3) = D(1,2)` or
/// `D(2,3) = D(3,2)`.
pub fn telescope_n3(n: u64) -> Result<Expansion> {
    require_coprime_to_3(n)?;
    let mut terms = Vec::new();
    let mut k = n as i64;
    while k >= 4 {
        terms.push((2 * k - 1, 1));
        terms.push((2 * k - 5, -1));
        k -= 3;
    }
    terms.push((if k == 2 { 3 } else { 1 }, 1));
    Ok(Expansion::new(Basis::AlexanderN2, terms, 0))
}

/// Checks `D(n,3) - D(n-3,3) = D(2n-1,2) - D(2n-5,2)` exactly.
pub fn check_prop1(n: u64) -> Result<bool> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "n must be at least 4 (got {n})"
        )));
    }
    require_coprime_to_3(n)?;
    let lhs = alexander_n3(n)? - alexander_n3(n - 3)?;
    let rhs = alexander_n2(2 * n - 1)? - alexander_n2(2 * n - 5)?;
    Ok(lhs == rhs)
}

/// `D(2m+1, 2) = V_m - V_{m-1}`.
pub fn n2_to_v(n: u64) -> Result<Expansion> {
    require_odd(n)?;
    let m = (n as i64 - 1) / 2;
    Ok(Expansion::new(
        Basis::Chebyshev(ChebKind::SecondKind),
        [(m, 1), (m - 1, -1)],
        0,
    ))
}

/// `D(2m+1, 2) = sum_{k=0}^{m-1} (-1)^k T_{m-k} + (-1)^m`.
pub fn n2_to_t(n: u64) -> Result<Expansion> {
    require_odd(n)?;
    let m = (n as i64 - 1) / 2;
    Ok(Expansion::new(
        Basis::Chebyshev(ChebKind::FirstKind),
        (0..m).map(|k| (m - k, sign(k))),
        sign(m),
    ))
}

/// `D(n, 3) = V_{n-1} + sum_{k=0}^{d} (-V_{n-2-3k} - V_{n-3-3k} + 2 V_{n-4-3k})`,
/// `d = floor((n-2)/3)`.
pub fn n3_to_v(n: u64) -> Result<Expansion> {
    require_coprime_to_3(n)?;
    let n = n as i64;
    let d = Integer::div_floor(&(n - 2), &3);
    let tail = (0..=d).flat_map(|k| [(n - 2 - 3 * k, -1), (n - 3 - 3 * k, -1), (n - 4 - 3 * k, 2)]);
    Ok(Expansion::new(
        Basis::Chebyshev(ChebKind::SecondKind),
        std::iter::once((n - 1, 1)).chain(tail),
        0,
    ))
}

/// `D(n, 3) = sum_{k=0}^{d} (T_{n-1-3k} - T_{n-2-3k}) + (-1)^{n-d}`,
/// `d = floor((n-1)/3)`.
pub fn n3_to_t(n: u64) -> Result<Expansion> {
    require_coprime_to_3(n)?;
    let n = n as i64;
    let d = (n - 1) / 3;
    Ok(Expansion::new(
        Basis::Chebyshev(ChebKind::FirstKind),
        (0..=d).flat_map(|k| [(n - 1 - 3 * k, 1), (n - 2 - 3 * k, -1)]),
        sign(n - d),
    ))
}

/// q-number expansion: `[(n+1)/2]_t - [(n-1)/2]_t` for `l = 2`, and
/// `[(2n+1)/3] - [(2n-1)/3] + [1/3]` at `q = t^(3/2)` for `l = 3`.
pub fn q_expansion(n: u64, l: u64) -> Result<Expansion> {
    TorusKnotId::new(n, l)?;
    let n = n as i64;
    match l {
        2 => Ok(Expansion::new(
            Basis::QNumber(QBase::T),
            [((n + 1) / 2, 1), ((n - 1) / 2, -1)],
            0,
        )),
        3 => Ok(Expansion::new(
            Basis::QFraction {
                denom: 3,
                base: QBase::new(3)?,
            },
            [(2 * n + 1, 1), (2 * n - 1, -1), (1, 1)],
            0,
        )),
        _ => Err(Error::InvalidInput(format!(
            "q-number expansion needs l = 2 or l = 3 (got l={l})"
        ))),
    }
}

/// Closed-form identities for `D(n, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    /// `D(n,2)^2 = (T_n(x) + 2) / (x + 2)`, solved by a square root.
    Eq34,
    /// `D(n,2) = V_{2n-1}(y) / (y V_{n-1}(y))`.
    Eq35,
    /// `D(n,2) = T_n(y) / y`.
    Eq37,
    /// `D(n,3) = (T_n(y)^2 - 1) / (y^2 - 1)`.
    EqN3Tsq,
    /// `D(n,3) = (T_n(x) + 1) / (x + 1)`.
    EqN3Tx,
    /// `D(n,2) = [(n+1)/2]_t - [(n-1)/2]_t`.
    Eq42,
    /// `D(n,3) = ([2n+1] - [2n-1] + 1) / [3]` at `q = t^(1/2)`.
    Eq44,
    /// Fractional q-brackets at `q = t^(l/2)`.
    Eq45,
    /// The same sum with every bracket at `q = t^(1/2)`.
    Eq46,
    /// `D(n,3) = (V_{2n}(y) - V_{2n-2}(y) + 1) / V_2(y)`.
    Eq47,
    Eq48,
    /// `D(n,l) = V_{nl-1}(y) / (V_{n-1}(y) V_{l-1}(y))`.
    Eq49,
    /// `V_{n-1}(z) / V_{n-1}(y)`, `z = t^(l/2) + t^(-l/2)`.
    Eq50,
    /// `V_{l-1}(z) / V_{l-1}(y)`, `z = t^(n/2) + t^(-n/2)`.
    Eq51,
    /// `V_{n-1}(T_l(y)) / V_{n-1}(y)`.
    Eq52,
    /// `V_{l-1}(T_n(y)) / V_{l-1}(y)`.
    Eq53,
    /// `V_{l-1}(z) / V_{l-1}(y)` with `z = y D(n,2)`.
    Eq54K2,
    /// `V_{l-1}(z) / V_{l-1}(y)` with `z = sqrt((t + 1 + 1/t) D(n,3) + 1)`.
    Eq54K3,
}

impl FormulaId {
    pub const ALL: [FormulaId; 18] = [
        FormulaId::Eq34,
        FormulaId::Eq35,
        FormulaId::Eq37,
        FormulaId::EqN3Tsq,
        FormulaId::EqN3Tx,
        FormulaId::Eq42,
        FormulaId::Eq44,
        FormulaId::Eq45,
        FormulaId::Eq46,
        FormulaId::Eq47,
        FormulaId::Eq48,
        FormulaId::Eq49,
        FormulaId::Eq50,
        FormulaId::Eq51,
        FormulaId::Eq52,
        FormulaId::Eq53,
        FormulaId::Eq54K2,
        FormulaId::Eq54K3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::Eq34 => "EQ34",
            FormulaId::Eq35 => "EQ35",
            FormulaId::Eq37 => "EQ37",
            FormulaId::EqN3Tsq => "EQ_N3_TSQ",
            FormulaId::EqN3Tx => "EQ_N3_TX",
            FormulaId::Eq42 => "EQ42",
            FormulaId::Eq44 => "EQ44",
            FormulaId::Eq45 => "EQ45",
            FormulaId::Eq46 => "EQ46",
            FormulaId::Eq47 => "EQ47",
            FormulaId::Eq48 => "EQ48",
            FormulaId::Eq49 => "EQ49",
            FormulaId::Eq50 => "EQ50",
            FormulaId::Eq51 => "EQ51",
            FormulaId::Eq52 => "EQ52",
            FormulaId::Eq53 => "EQ53",
            FormulaId::Eq54K2 => "EQ54_K2",
            FormulaId::Eq54K3 => "EQ54_K3",
        }
    }

    /// Validates the ordered pair `(n, l)` against this formula's domain.
    pub fn check_domain(self, n: u64, l: u64) -> Result<()> {
        TorusKnotId::new(n, l)?;
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!(
                    "{} requires {what} (got n={n}, l={l})",
                    self.name()
                )))
            }
        };
        match self {
            FormulaId::Eq34 | FormulaId::Eq35 | FormulaId::Eq37 | FormulaId::Eq42 => {
                need(l == 2, "l = 2")
            }
            FormulaId::EqN3Tsq | FormulaId::EqN3Tx | FormulaId::Eq44 | FormulaId::Eq47 => {
                need(l == 3, "l = 3")
            }
            FormulaId::Eq45 | FormulaId::Eq46 | FormulaId::Eq48 => need(l >= 2, "l >= 2"),
            FormulaId::Eq49
            | FormulaId::Eq50
            | FormulaId::Eq51
            | FormulaId::Eq52
            | FormulaId::Eq53 => Ok(()),
            FormulaId::Eq54K2 => need(n % 2 == 1, "odd n"),
            FormulaId::Eq54K3 => need(n % 3 != 0, "n coprime to 3"),
        }
    }

    pub fn admits(self, n: u64, l: u64) -> bool {
        self.check_domain(n, l).is_ok()
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidInput(format!("unknown formula `{s}`")))
    }
}

/// `V_k(arg)`, zero for negative `k`.
fn v_at(k: i64, arg: &LaurentPoly) -> LaurentPoly {
    match usize::try_from(k) {
        Ok(k) => cheb_v(k).compose(arg),
        Err(_) => LaurentPoly::zero(),
    }
}

fn ratio(num: LaurentPoly, den: LaurentPoly) -> Result<RationalLaurent> {
    RationalLaurent::new(num, den)
}

/// `V_{l-1}(z) / V_{l-1}(y)`.
fn second_kind_ratio(index: i64, z: &LaurentPoly) -> Result<LaurentPoly> {
    v_at(index, z).exact_div(&v_at(index, &y_var()))
}

/// Evaluates the closed form `f` for the ordered pair `(n, l)`.
///
/// Every division is exact; the result equals the Laurent-form Alexander
/// polynomial of `T(n, l)`.
pub fn compute_form(n: u64, l: u64, f: FormulaId) -> Result<LaurentPoly> {
    f.check_domain(n, l)?;
    let (ni, li) = (n as i64, l as i64);
    let half = QBase::HALF;
    let x = x_var();
    let y = y_var();
    let one = LaurentPoly::one();
    match f {
        FormulaId::Eq34 => {
            let num = &cheb_t(n as usize).compose(&x) + &LaurentPoly::constant(2);
            let den = &x + &LaurentPoly::constant(2);
            num.exact_div(&den)?.sqrt_perfect()
        }
        FormulaId::Eq35 => v_at(2 * ni - 1, &y).exact_div(&(&y * &v_at(ni - 1, &y))),
        FormulaId::Eq37 => cheb_t(n as usize).compose(&y).exact_div(&y),
        FormulaId::EqN3Tsq => {
            let tn = cheb_t(n as usize).compose(&y);
            (&(&tn * &tn) - &one).exact_div(&(&(&y * &y) - &one))
        }
        FormulaId::EqN3Tx => (&cheb_t(n as usize).compose(&x) + &one).exact_div(&(&x + &one)),
        FormulaId::Eq42 => Ok(&q_number((n + 1) / 2, QBase::T) - &q_number((n - 1) / 2, QBase::T)),
        FormulaId::Eq44 => {
            let num = &(&q_number(2 * n + 1, half) - &q_number(2 * n - 1, half)) + &one;
            num.exact_div(&q_number(3, half))
        }
        FormulaId::Eq45 => {
            let base = QBase::new(l)?;
            let head = q_bracket_ratio(n * (l - 1) + 1, l, base)?;
            let next = q_bracket_ratio(n * (l - 1) - 1, l, base)?;
            let tail = ratio(q_number(l - 2, QBase::new(n)?), q_number(l, half))?;
            (&(&head - &next) + &tail).finalize()
        }
        FormulaId::Eq46 => {
            let ql = q_number(l, half);
            let head = ratio(q_number(n * (l - 1) + 1, half), ql.clone())?;
            let next = ratio(q_number(n * (l - 1) - 1, half), ql.clone())?;
            let tail =
                &ratio(q_number(n * (l - 2), half), q_number(n, half))? * &ratio(one.clone(), ql)?;
            (&(&head - &next) + &tail).finalize()
        }
        FormulaId::Eq47 => {
            let num = &(&v_at(2 * ni, &y) - &v_at(2 * ni - 2, &y)) + &one;
            num.exact_div(&v_at(2, &y))
        }
        FormulaId::Eq48 => {
            let k = ni * (li - 1);
            let vl = v_at(li - 1, &y);
            let head = ratio(&v_at(k, &y) - &v_at(k - 2, &y), vl.clone())?;
            let tail = ratio(v_at(ni * (li - 2) - 1, &y), &vl * &v_at(ni - 1, &y))?;
            (&head + &tail).finalize()
        }
        FormulaId::Eq49 => {
            v_at(ni * li - 1, &y).exact_div(&(&v_at(ni - 1, &y) * &v_at(li - 1, &y)))
        }
        FormulaId::Eq50 => second_kind_ratio(ni - 1, &QBase::new(l)?.q_plus_inverse()),
        FormulaId::Eq51 => second_kind_ratio(li - 1, &QBase::new(n)?.q_plus_inverse()),
        FormulaId::Eq52 => second_kind_ratio(ni - 1, &cheb_t(l as usize).compose(&y)),
        FormulaId::Eq53 => second_kind_ratio(li - 1, &cheb_t(n as usize).compose(&y)),
        FormulaId::Eq54K2 => second_kind_ratio(li - 1, &(&y * &alexander_n2(n)?)),
        FormulaId::Eq54K3 => {
            let x_plus_one = &x + &one;
            let z = (&(&x_plus_one * &alexander_n3(n)?) + &one).sqrt_perfect()?;
            second_kind_ratio(li - 1, &z)
        }
    }
}

/// Which root of `Z^2 - y D(n,2) Z + 1 = 0` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadraticRoot {
    /// `|Z| >= 1`.
    Outer,
    /// `|Z| <= 1`, the reciprocal of the outer root.
    Inner,
}

/// Evaluates `D(n, l)` at `t` using only the numeric value of `D(n, 2)`.
///
/// Solves `Z^2 - (t^(1/2) + t^(-1/2)) D(n,2) Z + 1 = 0` and returns
/// `((Z^l - Z^-l) / (Z - Z^-1)) * ((t^(1/2) - t^(-1/2)) / (t^(l/2) - t^(-l/2)))`.
pub fn functional_dependence_eval(n: u64, l: u64, t: f64) -> Result<f64> {
    functional_dependence_eval_with(n, l, t, QuadraticRoot::Outer)
}

pub fn functional_dependence_eval_with(n: u64, l: u64, t: f64, root: QuadraticRoot) -> Result<f64> {
    if !(t.is_finite() && t > 0.0) || t == 1.0 {
        return Err(Error::Domain(format!(
            "t must be positive and not 1 (got {t})"
        )));
    }
    require_odd(n)?;
    TorusKnotId::new(n, l)?;
    let l = i32::try_from(l).map_err(|_| Error::InvalidInput(format!("l = {l} too large")))?;

    let delta = alexander_n2(n)?.eval_f64(t)?;
    let st = t.sqrt();
    let b = (st + 1.0 / st) * delta;
    let disc = (b * b - 4.0).max(0.0).sqrt();
    let outer = (b + disc) / 2.0;
    let z = match root {
        QuadraticRoot::Outer => outer,
        QuadraticRoot::Inner => 1.0 / outer,
    };
    let ratio_z = (z.powi(l) - z.powi(-l)) / (z - 1.0 / z);
    let ratio_t = (st - 1.0 / st) / (st.powi(l) - st.powi(-l));
    Ok(ratio_z * ratio_t)
}
