//! Alexander polynomials of torus knots `T(n, l)` in closed form.
//!
//! The standard form is `(t^{nl} - 1)(t - 1) / ((t^n - 1)(t^l - 1))`, a
//! polynomial of degree `(n-1)(l-1)` with constant term 1. The Laurent form
//! shifts it by `t^{-(n-1)(l-1)/2}` so that it is symmetric under `t -> 1/t`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::{HalfExp, LaurentPoly, Poly};

/// A torus knot `T(n, l)` with `gcd(n, l) = 1`, stored with `n >= l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnotId {
    n: u64,
    l: u64,
}

impl TorusKnotId {
    /// `T(a, b)` and `T(b, a)` are the same knot and produce equal ids.
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidInput(format!(
                "n and l must be positive (got n={a}, l={b})"
            )));
        }
        if a.gcd(&b) != 1 {
            return Err(Error::NotCoprime { n: a, l: b });
        }
        Ok(TorusKnotId {
            n: a.max(b),
            l: a.min(b),
        })
    }

    pub fn n(self) -> u64 {
        self.n
    }

    pub fn l(self) -> u64 {
        self.l
    }
}

impl fmt::Display for TorusKnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}, {})", self.n, self.l)
    }
}

/// Top exponent `m = (n-1)(l-1)/2` of the Laurent form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeM(pub u64);

pub fn degree_m(k: TorusKnotId) -> DegreeM {
    DegreeM((k.n - 1) * (k.l - 1) / 2)
}

fn t_pow_minus_one(e: u64) -> LaurentPoly {
    &LaurentPoly::t_pow(e as i64) - &LaurentPoly::one()
}

fn standard_laurent(k: TorusKnotId) -> LaurentPoly {
    let num = &t_pow_minus_one(k.n * k.l) * &t_pow_minus_one(1);
    num.exact_div(&t_pow_minus_one(k.n))
        .and_then(|q| q.exact_div(&t_pow_minus_one(k.l)))
        .unwrap_or_else(|e| panic!("closed form for {k} is not a polynomial: {e}"))
}

/// Standard form with non-negative exponents and constant term 1.
pub fn alexander_standard(k: TorusKnotId) -> Poly {
    Poly::from_laurent(&standard_laurent(k)).expect("standard form has non-negative exponents")
}

/// Symmetric Laurent form, spanning exponents `-m..=m`.
pub fn alexander_laurent(k: TorusKnotId) -> LaurentPoly {
    let m = degree_m(k).0 as i64;
    standard_laurent(k).shift(HalfExp::integer(-m))
}

/// `T(n, 2)` via `(t^{n/2} + t^{-n/2}) / (t^{1/2} + t^{-1/2})`, for odd `n`.
pub fn alexander_n2(n: u64) -> Result<LaurentPoly> {
    if n % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "n must be odd for l = 2 (got {n})"
        )));
    }
    let n = n as i64;
    let num = &LaurentPoly::t_half_pow(n) + &LaurentPoly::t_half_pow(-n);
    let den = &LaurentPoly::t_half_pow(1) + &LaurentPoly::t_half_pow(-1);
    num.exact_div(&den)
}

/// `T(n, 3)` via `(t^n + 1 + t^-n) / (t + 1 + t^-1)`, for `n` coprime to 3.
pub fn alexander_n3(n: u64) -> Result<LaurentPoly> {
    if n == 0 || n % 3 == 0 {
        return Err(Error::InvalidInput(format!(
            "n must be positive and coprime to 3 for l = 3 (got {n})"
        )));
    }
    let n = n as i64;
    let num = &(&LaurentPoly::t_pow(n) + &LaurentPoly::one()) + &LaurentPoly::t_pow(-n);
    let den = &(&LaurentPoly::t_pow(1) + &LaurentPoly::one()) + &LaurentPoly::t_pow(-1);
    num.exact_div(&den)
}
