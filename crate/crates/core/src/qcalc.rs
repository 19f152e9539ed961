//! Symmetric q-numbers `[n]_q = (q^n - q^-n) / (q - q^-1)` with `q` a
//! power of `t^(1/2)`.

use crate::error::{Error, Result};
use crate::poly::{HalfExp, LaurentPoly, RationalLaurent};

/// `q = t^(s/2)` for a positive integer `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QBase(u64);

impl QBase {
    pub fn new(s: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidInput(
                "q-base exponent must be positive".into(),
            ));
        }
        Ok(QBase(s))
    }

    /// `q = t^(1/2)`.
    pub const HALF: QBase = QBase(1);
    /// `q = t`.
    pub const T: QBase = QBase(2);

    pub fn s(self) -> u64 {
        self.0
    }

    /// `q + q^-1`.
    pub fn q_plus_inverse(self) -> LaurentPoly {
        let s = self.0 as i64;
        &LaurentPoly::t_half_pow(s) + &LaurentPoly::t_half_pow(-s)
    }
}

/// `[n]_q`, expanded as the geometric sum `q^(n-1) + q^(n-3) + ... + q^(1-n)`.
/// `[0]_q = 0`.
pub fn q_number(n: u64, base: QBase) -> LaurentPoly {
    let (n, s) = (n as i64, base.s() as i64);
    LaurentPoly::from_terms((0..n).map(|i| (HalfExp::from_twice(s * (n - 1 - 2 * i)), 1)))
}

/// The fractional bracket `[x/d]_q` with `q = t^(s/2)`, stored as
/// `[x]_{q'} / [d]_{q'}` where `q' = t^(s/(2d))`.
pub fn q_bracket_ratio(x: u64, d: u64, base: QBase) -> Result<RationalLaurent> {
    if d == 0 || base.s() % d != 0 {
        return Err(Error::InvalidBase { s: base.s(), d });
    }
    let inner = QBase(base.s() / d);
    RationalLaurent::new(q_number(x, inner), q_number(d, inner))
}
