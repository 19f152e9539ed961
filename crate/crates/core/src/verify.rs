//! Independent oracles and the identity sweep.
//!
//! [`oracle_division`] recomputes the standard-form Alexander polynomial by
//! schoolbook division on machine integers, sharing nothing with the
//! polynomial kernel. [`trig_spot_check`] compares Chebyshev expansions with
//! their cosine forms in floating point. [`run_identity_suite`] runs every
//! exact identity over a parameter range and collects the mismatches.

use std::f64::consts::E;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alexander::{
    alexander_laurent, alexander_n2, alexander_n3, alexander_standard, degree_m, TorusKnotId,
};
use crate::chebyshev::{cheb_t, cheb_v, chebyshev, x_var, Basis, Expansion};
use crate::error::{Error, Result};
use crate::expansions::{
    check_prop1, compute_form, decompose_n3, functional_dependence_eval, n2_to_t, n2_to_v, n3_to_t,
    n3_to_v, q_expansion, telescope_n3, FormulaId,
};
use crate::poly::{HalfExp, LaurentPoly, Poly, RationalLaurent};
use crate::qcalc::{q_number, QBase};
use crate::render::{laurent_text, poly_text, OutputFormat};

/// Absolute tolerance of the trigonometric checks.
pub const TRIG_TOLERANCE: f64 = 1e-9;
/// Relative tolerance of the quadratic-root reduction checks.
pub const REDUCTION_TOLERANCE: f64 = 1e-9;

/// One failed check, with enough parameters to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub params: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub checked: u64,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_ms", with = "millis")]
    pub elapsed: Duration,
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis().try_into().unwrap_or(u64::MAX))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        u64::deserialize(d).map(Duration::from_millis)
    }
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Equality ignoring wall-clock time.
    pub fn same_outcome(&self, other: &SweepReport) -> bool {
        self.checked == other.checked && self.failures == other.failures
    }

    pub fn from_json(s: &str) -> Result<Self, crate::render::DecodeError> {
        Ok(serde_json::from_str(s)?)
    }

    /// Text and LaTeX both give the plain summary; elapsed time is left out
    /// so that the output is reproducible.
    pub fn render(&self, fmt: OutputFormat) -> String {
        match fmt {
            OutputFormat::Json => {
                serde_json::to_string(self).expect("report types serialize infallibly")
            }
            OutputFormat::Text | OutputFormat::Latex => {
                let mut out = format!(
                    "checked: {}\nfailures: {}\n",
                    self.checked,
                    self.failures.len()
                );
                for f in &self.failures {
                    out.push_str(&format!(
                        "FAIL {} [{}]\n  expected: {}\n  actual:   {}\n",
                        f.identity, f.params, f.expected, f.actual
                    ));
                }
                out
            }
        }
    }
}

/// Standard-form Alexander polynomial of `T(n, l)` by long division of
/// `t^(nl+1) - t^(nl) - t + 1` by `t^(n+l) - t^n - t^l + 1`.
pub fn oracle_division(n: u64, l: u64) -> Result<Poly> {
    TorusKnotId::new(n, l)?;
    let overflow = || Error::Domain(format!("oracle overflow for n={n}, l={l}"));
    let nl = n.checked_mul(l).ok_or_else(overflow)? as usize;
    let (n, l) = (n as usize, l as usize);

    let mut rem = vec![0i128; nl + 2];
    rem[nl + 1] += 1;
    rem[nl] -= 1;
    rem[1] -= 1;
    rem[0] += 1;

    let mut div = vec![0i128; n + l + 1];
    div[n + l] += 1;
    div[n] -= 1;
    div[l] -= 1;
    div[0] += 1;
    let dd = n + l;

    let mut quot = vec![0i128; nl + 2 - dd];
    for top in (dd..nl + 2).rev() {
        let q = rem[top];
        if q == 0 {
            continue;
        }
        quot[top - dd] = q;
        for (j, &d) in div.iter().enumerate() {
            if d != 0 {
                let slot = &mut rem[top - dd + j];
                let prod = q.checked_mul(d).ok_or_else(overflow)?;
                *slot = slot.checked_sub(prod).ok_or_else(overflow)?;
            }
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Err(Error::NotDivisible);
    }
    Ok(Poly::from_coeffs(
        quot.into_iter().map(BigInt::from).collect(),
    ))
}

/// Evaluates `p` at the exact binary value of `x` and rounds once.
///
/// Horner in `f64` loses digits near `|x| = 2`, where the monomial
/// coefficients of `T_n` and `V_n` cancel heavily.
fn eval_exact(p: &Poly, x: f64) -> f64 {
    let Some(x) = BigRational::from_float(x) else {
        return f64::NAN;
    };
    p.coeffs()
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| {
            acc * &x + BigRational::from_integer(c.clone())
        })
        .to_f64()
        .unwrap_or(f64::NAN)
}

fn eval_expansion_at_x(e: &Expansion, x: f64) -> Option<f64> {
    let Basis::Chebyshev(kind) = e.basis() else {
        return None;
    };
    let mut sum = Poly::constant(e.constant());
    for &(k, c) in e.terms() {
        sum = &sum + &(&Poly::constant(c) * &chebyshev(kind, k as usize));
    }
    Some(eval_exact(&sum, x))
}

fn float_failure(identity: &str, params: String, expected: f64, actual: f64) -> Failure {
    Failure {
        identity: identity.into(),
        params,
        expected: format!("{expected:.17e}"),
        actual: format!("{actual:.17e}"),
    }
}

/// Compares the V- and T-expansions of `D(n, 2)` at `x = 2 cos(theta)` with
/// `cos(n theta / 2) / cos(theta / 2)`, and `T_n`, `V_n` with their cosine
/// and sine forms. Mismatches are reported, never raised.
pub fn trig_spot_check(n: u64, thetas: &[f64]) -> SweepReport {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    let expansions = n2_to_v(n).and_then(|v| Ok((v, n2_to_t(n)?)));
    let (v_exp, t_exp) = match expansions {
        Ok(pair) => pair,
        Err(e) => {
            return SweepReport {
                checked: 1,
                failures: vec![Failure {
                    identity: "trig.precondition".into(),
                    params: format!("n={n}"),
                    expected: "odd n".into(),
                    actual: e.to_string(),
                }],
                elapsed: start.elapsed(),
            }
        }
    };
    let nf = n as f64;
    let m = (nf - 1.0) / 2.0;
    let idx = n as usize;
    for &theta in thetas {
        let x = 2.0 * theta.cos();
        let half = (theta / 2.0).cos();
        let params = format!("n={n}, theta={theta}");
        let checks = [
            (
                "trig.cos_ratio_v",
                (nf * theta / 2.0).cos() / half,
                eval_expansion_at_x(&v_exp, x).unwrap_or(f64::NAN),
            ),
            (
                "trig.cos_ratio_half_index",
                ((m + 0.5) * theta).cos() / half,
                eval_expansion_at_x(&v_exp, x).unwrap_or(f64::NAN),
            ),
            (
                "trig.cos_ratio_t",
                (nf * theta / 2.0).cos() / half,
                eval_expansion_at_x(&t_exp, x).unwrap_or(f64::NAN),
            ),
            (
                "trig.first_kind",
                2.0 * (nf * theta).cos(),
                eval_exact(&cheb_t(idx), x),
            ),
            (
                "trig.second_kind",
                ((nf + 1.0) * theta).sin() / theta.sin(),
                eval_exact(&cheb_v(idx), x),
            ),
        ];
        for (identity, expected, actual) in checks {
            checked += 1;
            // written negated so that NaN counts as a failure
            if !((expected - actual).abs() <= TRIG_TOLERANCE) {
                failures.push(float_failure(identity, params.clone(), expected, actual));
            }
        }
    }
    SweepReport {
        checked,
        failures,
        elapsed: start.elapsed(),
    }
}

/// `Ok(None)` on agreement, `Ok(Some((expected, actual)))` on mismatch.
type Outcome = Result<Option<(String, String)>>;
type Probe = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Task {
    identity: String,
    params: String,
    probe: Probe,
}

struct Tasks(Vec<Task>);

impl Tasks {
    fn push(
        &mut self,
        identity: impl Into<String>,
        params: String,
        probe: impl Fn() -> Outcome + Send + Sync + 'static,
    ) {
        self.0.push(Task {
            identity: identity.into(),
            params,
            probe: Box::new(probe),
        });
    }
}

fn same(expected: LaurentPoly, actual: LaurentPoly) -> Outcome {
    Ok((expected != actual).then(|| (laurent_text(&expected), laurent_text(&actual))))
}

fn same_poly(expected: Poly, actual: Poly) -> Outcome {
    Ok((expected != actual).then(|| (poly_text(&expected, "t"), poly_text(&actual, "t"))))
}

fn holds(ok: bool, what: &str) -> Outcome {
    Ok((!ok).then(|| (what.to_string(), "violated".to_string())))
}

fn knot(n: u64, l: u64) -> Result<TorusKnotId> {
    TorusKnotId::new(n, l)
}

fn coprime_pairs(max_n: u64, max_l: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=max_n).flat_map(move |n| {
        (1..=max_l)
            .filter(move |l| n.gcd(l) == 1)
            .map(move |l| (n, l))
    })
}

fn chebyshev_tasks(t: &mut Tasks, max_index: usize) {
    for n in 0..=max_index {
        let p = format!("n={n}");
        if n >= 1 {
            t.push("cheb.connection", p.clone(), move || {
                let rhs = if n >= 2 {
                    cheb_v(n) - cheb_v(n - 2)
                } else {
                    cheb_v(n)
                };
                Ok((cheb_t(n) != rhs).then(|| (cheb_t(n).to_string(), rhs.to_string())))
            });
            t.push("cheb.monic", p.clone(), move || {
                holds(
                    cheb_t(n).leading_coeff().is_some_and(|c| c.is_one())
                        && cheb_v(n).leading_coeff().is_some_and(|c| c.is_one()),
                    "leading coefficient 1",
                )
            });
        }
        t.push("cheb.first_kind_closed", p.clone(), move || {
            let ni = n as i64;
            let expected = &LaurentPoly::t_pow(ni) + &LaurentPoly::t_pow(-ni);
            same(expected, cheb_t(n).compose(&x_var()))
        });
        t.push("cheb.second_kind_closed", p.clone(), move || {
            let ni = n as i64;
            let num = &LaurentPoly::t_pow(ni + 1) - &LaurentPoly::t_pow(-ni - 1);
            let den = &LaurentPoly::t_pow(1) - &LaurentPoly::t_pow(-1);
            same(num.exact_div(&den)?, cheb_v(n).compose(&x_var()))
        });
        t.push("cheb.parity", p, move || {
            let parity_ok = |q: &Poly| {
                q.coeffs()
                    .iter()
                    .enumerate()
                    .all(|(d, c)| c.is_zero() || d % 2 == n % 2)
            };
            holds(
                parity_ok(&cheb_t(n)) && parity_ok(&cheb_v(n)),
                "single parity",
            )
        });
    }
}

fn qcalc_tasks(t: &mut Tasks, max_n: u64, max_l: u64) {
    let max_index = 3 * max_n;
    for s in 1..=max_l {
        let base = QBase::new(s).expect("s >= 1");
        for n in 0..=max_index {
            let p = format!("n={n}, s={s}");
            t.push("q.classical_limit", p.clone(), move || {
                let q = q_number(n, base);
                holds(q.coefficient_sum() == BigInt::from(n), "coefficient sum n")
            });
            t.push("q.palindrome", p.clone(), move || {
                holds(q_number(n, base).is_palindromic(), "palindromic")
            });
            t.push("q.chebyshev_bridge", p, move || {
                same(
                    q_number(n + 1, base),
                    cheb_v(n as usize).compose(&base.q_plus_inverse()),
                )
            });
        }
    }
    for n in 1..=max_n {
        for l in 1..=max_l {
            let p = format!("n={n}, l={l}");
            t.push("q.multiplicativity", p, move || {
                let lhs = q_number(n * l, QBase::HALF);
                let rhs = &q_number(n, QBase::new(l)?) * &q_number(l, QBase::HALF);
                same(lhs, rhs)
            });
        }
    }
    for (n, l) in coprime_pairs(max_n, max_l) {
        let p = format!("n={n}, l={l}");
        t.push("q.ratio_product", p.clone(), move || {
            let den = &q_number(n, QBase::HALF) * &q_number(l, QBase::HALF);
            let r = RationalLaurent::new(q_number(n * l, QBase::HALF), den)?.finalize()?;
            same(alexander_laurent(knot(n, l)?), r)
        });
        t.push("q.ratio_rescaled", p, move || {
            let r = RationalLaurent::new(q_number(l, QBase::new(n)?), q_number(l, QBase::HALF))?
                .finalize()?;
            same(alexander_laurent(knot(n, l)?), r)
        });
    }
}

fn alexander_tasks(t: &mut Tasks, max_n: u64, max_l: u64) {
    for (n, l) in coprime_pairs(max_n, max_l) {
        let p = format!("n={n}, l={l}");
        t.push("alexander.structure", p.clone(), move || {
            let k = knot(n, l)?;
            let lp = alexander_laurent(k);
            let m = degree_m(k).0 as i64;
            let ok = lp.is_palindromic()
                && lp.coefficient_sum().is_one()
                && lp.max_exp() == Some(HalfExp::integer(m))
                && lp.min_exp() == Some(HalfExp::integer(-m));
            holds(ok, "palindromic, sum 1, span -m..=m")
        });
        t.push("alexander.symmetry", p.clone(), move || {
            same(
                alexander_laurent(knot(n, l)?),
                alexander_laurent(knot(l, n)?),
            )
        });
        t.push("alexander.unit_coefficients", p.clone(), move || {
            let std = alexander_standard(knot(n, l)?);
            let one = BigInt::one();
            let ok = std
                .coeffs()
                .iter()
                .all(|c| c.is_zero() || c == &one || c == &-&one);
            holds(ok, "coefficients in {-1, 0, 1}")
        });
        t.push("alexander.oracle", p, move || {
            same_poly(oracle_division(n, l)?, alexander_standard(knot(n, l)?))
        });
    }
    let top = 2 * max_n + 1;
    for n in 1..=top {
        let p = format!("n={n}");
        if n % 2 == 1 {
            t.push("alexander.n2", p.clone(), move || {
                same(alexander_laurent(knot(n, 2)?), alexander_n2(n)?)
            });
        }
        if n % 3 != 0 {
            t.push("alexander.n3", p, move || {
                same(alexander_laurent(knot(n, 3)?), alexander_n3(n)?)
            });
        }
    }
}

fn expansion_tasks(t: &mut Tasks, max_n: u64, max_l: u64) {
    let top = 2 * max_n + 1;
    for n in 1..=top {
        let p = format!("n={n}");
        if n % 3 != 0 {
            if n >= 4 {
                t.push("n3.step_difference", p.clone(), move || {
                    holds(check_prop1(n)?, "difference identity")
                });
            }
            t.push("decompose_n3", p.clone(), move || {
                same(alexander_n3(n)?, decompose_n3(n)?.eval()?)
            });
            t.push("telescope_n3", p.clone(), move || {
                let (a, b) = (decompose_n3(n)?, telescope_n3(n)?);
                Ok((a != b).then(|| {
                    (
                        crate::render::expansion_text(&a),
                        crate::render::expansion_text(&b),
                    )
                }))
            });
            t.push("n3_to_v", p.clone(), move || {
                same(alexander_n3(n)?, n3_to_v(n)?.eval()?)
            });
            t.push("n3_to_t", p.clone(), move || {
                same(alexander_n3(n)?, n3_to_t(n)?.eval()?)
            });
            t.push("q_expansion.l3", p.clone(), move || {
                same(alexander_n3(n)?, q_expansion(n, 3)?.eval()?)
            });
            t.push("q_expansion.l3_vs_eq44", p.clone(), move || {
                same(
                    compute_form(n, 3, FormulaId::Eq44)?,
                    q_expansion(n, 3)?.eval()?,
                )
            });
            if n >= 8 {
                t.push("n3_to_v.prefix", p.clone(), move || {
                    let e = n3_to_v(n)?;
                    let pattern = [1, -1, -1, 2, -1, -1, 2];
                    let ni = n as i64;
                    let ok = e
                        .terms()
                        .iter()
                        .zip(pattern)
                        .enumerate()
                        .all(|(i, (&(k, c), want))| k as i64 == ni - 1 - i as i64 && c == want)
                        && e.terms().len() >= pattern.len();
                    holds(ok, "+1 -1 -1 +2 -1 -1 +2 from V_{n-1} down")
                });
            }
        }
        if n % 2 == 1 {
            t.push("n2_to_v", p.clone(), move || {
                same(alexander_n2(n)?, n2_to_v(n)?.eval()?)
            });
            t.push("n2_to_t", p.clone(), move || {
                same(alexander_n2(n)?, n2_to_t(n)?.eval()?)
            });
            t.push("q_expansion.l2", p.clone(), move || {
                same(alexander_n2(n)?, q_expansion(n, 2)?.eval()?)
            });
            if n >= 3 {
                t.push("n2_to_v.indices", p.clone(), move || {
                    let e = n2_to_v(n)?;
                    let want = [((n - 1) / 2, 1), ((n - 3) / 2, -1)];
                    holds(e.terms() == want, "indices (n-1)/2 and (n-3)/2")
                });
            }
            t.push("eq34.squared", p, move || {
                let d = alexander_n2(n)?;
                let x = x_var();
                let two = LaurentPoly::constant(2);
                let lhs = &(&d * &d) * &(&x + &two);
                let rhs = &cheb_t(n as usize).compose(&x) + &two;
                same(rhs, lhs)
            });
        }
    }
    for m in 1..=top {
        t.push("t_sum", format!("m={m}"), move || {
            let rhs = alexander_n2(2 * m + 1)? + alexander_n2(2 * m - 1)?;
            same(cheb_t(m as usize).compose(&x_var()), rhs)
        });
    }
    for f in FormulaId::ALL {
        for (n, l) in coprime_pairs(max_n, max_l) {
            if !f.admits(n, l) {
                continue;
            }
            t.push(
                format!("form.{}", f.name()),
                format!("n={n}, l={l}"),
                move || same(alexander_laurent(knot(n, l)?), compute_form(n, l, f)?),
            );
        }
    }
    for (n, l) in coprime_pairs(max_n.min(9), max_l.min(9)) {
        if n % 2 == 0 {
            continue;
        }
        for tv in [0.5, 2.0, E] {
            t.push("reduction", format!("n={n}, l={l}, t={tv}"), move || {
                let exact = alexander_laurent(knot(n, l)?).eval_f64(tv)?;
                let approx = functional_dependence_eval(n, l, tv)?;
                let ok = (exact - approx).abs() <= REDUCTION_TOLERANCE * exact.abs();
                Ok((!ok).then(|| (format!("{exact:.17e}"), format!("{approx:.17e}"))))
            });
        }
    }
}

/// Runs every exact identity over `n <= max_n`, `l <= max_l` (Chebyshev and
/// single-parameter families reach a few multiples further). Tasks run in
/// parallel; the failure list keeps enumeration order.
pub fn run_identity_suite(max_n: u64, max_l: u64) -> Result<SweepReport> {
    if max_n < 2 || max_l < 2 {
        return Err(Error::InvalidInput(format!(
            "max_n and max_l must be at least 2 (got max_n={max_n}, max_l={max_l})"
        )));
    }
    let start = Instant::now();
    let mut tasks = Tasks(Vec::new());
    chebyshev_tasks(&mut tasks, 3 * max_n as usize);
    qcalc_tasks(&mut tasks, max_n, max_l);
    alexander_tasks(&mut tasks, max_n, max_l);
    expansion_tasks(&mut tasks, max_n, max_l);

    let failures: Vec<Failure> = tasks
        .0
        .par_iter()
        .filter_map(|task| {
            let (expected, actual) = match (task.probe)() {
                Ok(None) => return None,
                Ok(Some(pair)) => pair,
                Err(e) => ("a value".to_string(), format!("error: {e}")),
            };
            Some(Failure {
                identity: task.identity.clone(),
                params: task.params.clone(),
                expected,
                actual,
            })
        })
        .collect();
    Ok(SweepReport {
        checked: tasks.0.len() as u64,
        failures,
        elapsed: start.elapsed(),
    })
}
