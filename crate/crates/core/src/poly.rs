//! Exact polynomial kernel.
//!
//! [`LaurentPoly`] is a sparse polynomial in `t` whose exponents live on the
//! half-integer lattice: every monomial is `t^(k/2)` for some integer `k`,
//! stored as the [`HalfExp`] `k`. Coefficients are arbitrary-precision
//! integers. [`Poly`] is the dense counterpart with non-negative integer
//! degrees, used for Chebyshev polynomials in an abstract variable and for
//! the standard (non-symmetric) form of Alexander polynomials.
//!
//! All values are normalized: no stored coefficient is zero, and the zero
//! polynomial is the empty term set. Equality is exact term-by-term equality.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent on the half-integer lattice; the stored value `k` stands for `t^(k/2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfExp(i64);

impl HalfExp {
    pub const ZERO: HalfExp = HalfExp(0);

    pub const fn from_twice(twice: i64) -> Self {
        HalfExp(twice)
    }

    /// The exponent `e` as a lattice point, i.e. `t^e`.
    pub const fn integer(e: i64) -> Self {
        HalfExp(2 * e)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }
}

impl Add for HalfExp {
    type Output = HalfExp;
    fn add(self, rhs: HalfExp) -> HalfExp {
        HalfExp(self.0 + rhs.0)
    }
}

impl Sub for HalfExp {
    type Output = HalfExp;
    fn sub(self, rhs: HalfExp) -> HalfExp {
        HalfExp(self.0 - rhs.0)
    }
}

impl Neg for HalfExp {
    type Output = HalfExp;
    fn neg(self) -> HalfExp {
        HalfExp(-self.0)
    }
}

/// Sparse Laurent polynomial in `t^(1/2)` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<HalfExp, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(HalfExp::ZERO, c)
    }

    pub fn monomial(exp: HalfExp, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `t^e` for an integer exponent `e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(HalfExp::integer(e), 1)
    }

    /// `t^(k/2)`.
    pub fn t_half_pow(twice: i64) -> Self {
        Self::monomial(HalfExp::from_twice(twice), 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (HalfExp, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, exp: HalfExp, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &LaurentPoly, shift: HalfExp, scale: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(*e + shift, c * scale);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(HalfExp::ZERO).is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (HalfExp, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Terms in descending exponent order, the canonical rendering order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (HalfExp, &BigInt)> + '_ {
        self.terms().rev()
    }

    pub fn coeff(&self, exp: HalfExp) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn max_exp(&self) -> Option<HalfExp> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<HalfExp> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Value at `t = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `t^(shift/2)`.
    pub fn shift(&self, shift: HalfExp) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Substitutes `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect(),
        }
    }

    /// True iff the polynomial is unchanged by `t -> t^-1`.
    pub fn is_palindromic(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-*e) == Some(c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Long division from the top exponent down; any remainder is an error.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(d_top), Some(d_bottom)) = (divisor.max_exp(), divisor.min_exp()) else {
            return Err(Error::DivisionByZero);
        };
        let Some(bottom) = self.min_exp() else {
            return Ok(LaurentPoly::zero());
        };
        let d_lead = divisor.terms[&d_top].clone();
        // lowest exponent a quotient term can have
        let floor = bottom - d_bottom;

        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((&e, c)) = rem.terms.iter().next_back() {
            let qe = e - d_top;
            if qe < floor {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = c.div_rem(&d_lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            rem.add_scaled(divisor, qe, &-&qc);
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// The square root `r` with `r * r == self` and positive leading coefficient.
    pub fn sqrt_perfect(&self) -> Result<LaurentPoly> {
        let (Some(top), Some(bottom)) = (self.max_exp(), self.min_exp()) else {
            return Err(Error::NotPerfectSquare);
        };
        if top.twice() % 2 != 0 || bottom.twice() % 2 != 0 {
            return Err(Error::NotPerfectSquare);
        }
        let lead = &self.terms[&top];
        if lead.is_negative() {
            return Err(Error::NotPerfectSquare);
        }
        let root_lead = lead.sqrt();
        if &(&root_lead * &root_lead) != lead {
            return Err(Error::NotPerfectSquare);
        }
        let root_top = HalfExp::from_twice(top.twice() / 2);
        let root_bottom = HalfExp::from_twice(bottom.twice() / 2);
        let two_lead = &root_lead * 2;

        let mut root = LaurentPoly::monomial(root_top, root_lead);
        let mut rem = self - &(&root * &root);
        while let Some((&e, c)) = rem.terms.iter().next_back() {
            // 2 * lead * t^(top + b) must cancel the remainder's top term
            let b = e - root_top;
            if b < root_bottom {
                return Err(Error::NotPerfectSquare);
            }
            let (q, r) = c.div_rem(&two_lead);
            if !r.is_zero() {
                return Err(Error::NotPerfectSquare);
            }
            let term = LaurentPoly::monomial(b, q);
            let twice_root = root.scale(&BigInt::from(2));
            rem = &rem - &(&term * &(&twice_root + &term));
            root = &root + &term;
        }
        Ok(root)
    }

    /// Floating-point evaluation at `t`.
    pub fn eval_f64(&self, t: f64) -> Result<f64> {
        if t == 0.0 || !t.is_finite() {
            return Err(Error::Domain(format!("cannot evaluate at t = {t}")));
        }
        let has_half = self.terms.keys().any(|e| !e.is_integral());
        if has_half && t < 0.0 {
            return Err(Error::Domain(format!(
                "half-integer exponents need t > 0, got t = {t}"
            )));
        }
        let root = t.abs().sqrt();
        let mut sum = 0.0;
        for (e, c) in &self.terms {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let k = e.twice();
            let power = if k % 2 == 0 {
                t.powi(i32::try_from(k / 2).map_err(|_| exponent_overflow(k))?)
            } else {
                root.powi(i32::try_from(k).map_err(|_| exponent_overflow(k))?)
            };
            sum += c * power;
        }
        Ok(sum)
    }

    /// Exact evaluation at a rational `t`. Half-integer exponents require
    /// `t` to be the square of a positive rational.
    pub fn eval_rational(&self, t: &BigRational) -> Result<BigRational> {
        if t.is_zero() {
            return Err(Error::Domain("cannot evaluate at t = 0".into()));
        }
        let has_half = self.terms.keys().any(|e| !e.is_integral());
        let (base, halve) = if has_half {
            let root = rational_sqrt(t).ok_or_else(|| {
                Error::Domain(format!(
                    "t = {t} is not a rational square; use the float path"
                ))
            })?;
            (root, false)
        } else {
            (t.clone(), true)
        };
        let mut sum = BigRational::zero();
        for (e, c) in &self.terms {
            let k = if halve { e.twice() / 2 } else { e.twice() };
            let k = i32::try_from(k).map_err(|_| exponent_overflow(e.twice()))?;
            sum += base.pow(k) * BigRational::from_integer(c.clone());
        }
        Ok(sum)
    }
}

fn exponent_overflow(k: i64) -> Error {
    Error::Domain(format!("exponent {k}/2 too large for numeric evaluation"))
}

fn rational_sqrt(t: &BigRational) -> Option<BigRational> {
    if t.is_negative() {
        return None;
    }
    let (n, d) = (t.numer(), t.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&(&rn * &rn) == n && &(&rd * &rd) == d).then(|| BigRational::new(rn, rd))
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            out.add_scaled(rhs, *e, c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(LaurentPoly, Add, add);
forward_owned_binop!(LaurentPoly, Sub, sub);
forward_owned_binop!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Dense polynomial with non-negative integer degrees, coefficients in
/// ascending degree order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// Coefficients in ascending degree order; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by the variable.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// The same polynomial read as a Laurent polynomial in `t`.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| (HalfExp::integer(d as i64), c.clone())),
        )
    }

    /// Inverse of [`Poly::to_laurent`]; `None` if any exponent is negative or
    /// not an integer.
    pub fn from_laurent(p: &LaurentPoly) -> Option<Poly> {
        let Some(top) = p.max_exp() else {
            return Some(Poly::zero());
        };
        if p.min_exp()? < HalfExp::ZERO || p.terms().any(|(e, _)| !e.is_integral()) {
            return None;
        }
        let mut coeffs = vec![BigInt::zero(); (top.twice() / 2) as usize + 1];
        for (e, c) in p.terms() {
            coeffs[(e.twice() / 2) as usize] = c.clone();
        }
        Some(Poly::from_coeffs(coeffs))
    }

    /// Evaluates this polynomial at a Laurent-polynomial argument by Horner's
    /// rule, on a dense buffer spanning every exponent the result can reach.
    pub fn compose(&self, arg: &LaurentPoly) -> LaurentPoly {
        let Some(deg) = self.degree() else {
            return LaurentPoly::zero();
        };
        let (Some(amin), Some(amax)) = (arg.min_exp(), arg.max_exp()) else {
            return LaurentPoly::constant(self.coeffs[0].clone());
        };
        if deg == 0 {
            return LaurentPoly::constant(self.coeffs[0].clone());
        }
        let (amin, amax) = (amin.twice(), amax.twice());
        let lo = (amin * deg as i64).min(0);
        let hi = (amax * deg as i64).max(0);
        let width = (hi - lo + 1) as usize;
        let idx = |e: i64| (e - lo) as usize;

        enum Factor<'a> {
            Plus,
            Minus,
            Other(&'a BigInt),
        }
        let arg_terms: Vec<(i64, Factor<'_>)> = arg
            .terms()
            .map(|(e, c)| {
                let f = if c.is_one() {
                    Factor::Plus
                } else if (-c).is_one() {
                    Factor::Minus
                } else {
                    Factor::Other(c)
                };
                (e.twice(), f)
            })
            .collect();

        let mut acc = vec![BigInt::zero(); width];
        let mut next = vec![BigInt::zero(); width];
        acc[idx(0)] = self.coeffs[deg].clone();
        let (mut acc_lo, mut acc_hi) = (0i64, 0i64);

        for c in self.coeffs[..deg].iter().rev() {
            let new_lo = (acc_lo + amin).min(0);
            let new_hi = (acc_hi + amax).max(0);
            for v in &mut next[idx(new_lo)..=idx(new_hi)] {
                v.set_zero();
            }
            for e in acc_lo..=acc_hi {
                let v = &acc[idx(e)];
                if v.is_zero() {
                    continue;
                }
                for (ae, f) in &arg_terms {
                    let slot = &mut next[idx(e + ae)];
                    match f {
                        Factor::Plus => *slot += v,
                        Factor::Minus => *slot -= v,
                        Factor::Other(k) => *slot += v * *k,
                    }
                }
            }
            next[idx(0)] += c;
            std::mem::swap(&mut acc, &mut next);
            acc_lo = new_lo;
            acc_hi = new_hi;
        }

        LaurentPoly::from_terms(
            (acc_lo..=acc_hi)
                .zip(acc[idx(acc_lo)..=idx(acc_hi)].iter_mut())
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (HalfExp::from_twice(e), std::mem::take(c))),
        )
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(Poly, Add, add);
forward_owned_binop!(Poly, Sub, sub);
forward_owned_binop!(Poly, Mul, mul);

/// A quotient of Laurent polynomials awaiting exact division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLaurent {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalLaurent {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalLaurent { num, den })
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// Collapses to a Laurent polynomial; fails unless the denominator
    /// divides the numerator exactly.
    pub fn finalize(&self) -> Result<LaurentPoly> {
        self.num.exact_div(&self.den)
    }

    fn combine(&self, rhs: &RationalLaurent, negate: bool) -> RationalLaurent {
        let sign = |p: LaurentPoly| if negate { -p } else { p };
        if self.den == rhs.den {
            return RationalLaurent {
                num: &self.num + &sign(rhs.num.clone()),
                den: self.den.clone(),
            };
        }
        RationalLaurent {
            num: &(&self.num * &rhs.den) + &sign(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl From<LaurentPoly> for RationalLaurent {
    fn from(num: LaurentPoly) -> Self {
        RationalLaurent {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl<'a> Add<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn add(self, rhs: &'a RationalLaurent) -> RationalLaurent {
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn sub(self, rhs: &'a RationalLaurent) -> RationalLaurent {
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn mul(self, rhs: &'a RationalLaurent) -> RationalLaurent {
        RationalLaurent {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

forward_owned_binop!(RationalLaurent, Add, add);
forward_owned_binop!(RationalLaurent, Sub, sub);
forward_owned_binop!(RationalLaurent, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (HalfExp::from_twice(k), c)))
    }

    // t - 1 + t^-1
    fn d32() -> LaurentPoly {
        lp(&[(2, 1), (0, -1), (-2, 1)])
    }

    #[test]
    fn additive_identity_and_inverse() {
        assert_eq!(&d32() + &LaurentPoly::zero(), d32());
        let y = lp(&[(1, 1), (-1, 1)]);
        assert!((&y + &(-&y)).is_zero());
    }

    #[test]
    fn sum_of_consecutive_n2_knots_is_t2() {
        let d52 = lp(&[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)]);
        assert_eq!(d52 + d32(), lp(&[(4, 1), (-4, 1)]));
    }

    #[test]
    fn products() {
        let y = lp(&[(1, 1), (-1, 1)]);
        let w = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&y * &w, lp(&[(2, 1), (-2, -1)]));
        let plus = lp(&[(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(&d32() * &plus, lp(&[(4, 1), (0, 1), (-4, 1)]));
        assert_eq!(&LaurentPoly::one() * &d32(), d32());
    }

    #[test]
    fn exact_division_examples() {
        let num = lp(&[(10, 1), (0, 1)]);
        let den = lp(&[(2, 1), (0, 1)]);
        assert_eq!(
            num.exact_div(&den).unwrap(),
            lp(&[(8, 1), (6, -1), (4, 1), (2, -1), (0, 1)])
        );
        let num = lp(&[(16, 1), (8, 1), (0, 1)]);
        let den = lp(&[(4, 1), (2, 1), (0, 1)]);
        assert_eq!(
            num.exact_div(&den).unwrap(),
            lp(&[(12, 1), (10, -1), (6, 1), (2, -1), (0, 1)])
        );
        assert_eq!(d32().exact_div(&d32()).unwrap(), LaurentPoly::one());
        let bad = lp(&[(2, 1), (0, 1)]).exact_div(&lp(&[(2, 1), (0, -1)]));
        assert_eq!(bad, Err(Error::NotDivisible));
        assert_eq!(
            d32().exact_div(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn division_needs_divisible_leading_coefficient() {
        let r = lp(&[(2, 3)]).exact_div(&lp(&[(0, 2)]));
        assert_eq!(r, Err(Error::NotDivisible));
    }

    #[test]
    fn compose_examples() {
        let t2 = Poly::from_i64s(&[-2, 0, 1]);
        let x = lp(&[(2, 1), (-2, 1)]);
        assert_eq!(t2.compose(&x), lp(&[(4, 1), (-4, 1)]));
        let t3 = Poly::from_i64s(&[0, -3, 0, 1]);
        let y = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(t3.compose(&y), lp(&[(3, 1), (-3, 1)]));
        assert_eq!(Poly::constant(2).compose(&y), LaurentPoly::constant(2));
        assert_eq!(Poly::zero().compose(&y), LaurentPoly::zero());
        assert_eq!(t2.compose(&LaurentPoly::zero()), LaurentPoly::constant(-2));
    }

    #[test]
    fn compose_with_offset_argument() {
        // (x + 1)^2 at x = 2t^2 + t^3
        let p = Poly::from_i64s(&[1, 2, 1]);
        let arg = lp(&[(4, 2), (6, 1)]);
        let expected = (&arg + &LaurentPoly::one()).pow(2);
        assert_eq!(p.compose(&arg), expected);
    }

    #[test]
    fn sqrt_examples() {
        let p = lp(&[(2, 1), (0, 2), (-2, 1)]);
        assert_eq!(p.sqrt_perfect().unwrap(), lp(&[(1, 1), (-1, 1)]));
        let q = lp(&[(8, 1), (0, 2), (-8, 1)]);
        assert_eq!(q.sqrt_perfect().unwrap(), lp(&[(4, 1), (-4, 1)]));
        let bad = lp(&[(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(bad.sqrt_perfect(), Err(Error::NotPerfectSquare));
        assert_eq!(lp(&[(0, -4)]).sqrt_perfect(), Err(Error::NotPerfectSquare));
        assert_eq!(lp(&[(1, 1)]).sqrt_perfect(), Err(Error::NotPerfectSquare));
        assert_eq!(
            LaurentPoly::zero().sqrt_perfect(),
            Err(Error::NotPerfectSquare)
        );
        assert_eq!(lp(&[(0, 9)]).sqrt_perfect().unwrap(), lp(&[(0, 3)]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(d32().eval_f64(1.0).unwrap(), 1.0);
        let y = lp(&[(1, 1), (-1, 1)]);
        assert!((y.eval_f64(4.0).unwrap() - 2.5).abs() < 1e-15);
        let four = BigRational::from_integer(4.into());
        assert_eq!(
            y.eval_rational(&four).unwrap(),
            BigRational::new(5.into(), 2.into())
        );
        let two = BigRational::from_integer(2.into());
        assert!(matches!(y.eval_rational(&two), Err(Error::Domain(_))));
        assert_eq!(
            d32().eval_rational(&two).unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert!(matches!(d32().eval_f64(0.0), Err(Error::Domain(_))));
        assert!(matches!(y.eval_f64(-1.0), Err(Error::Domain(_))));
        assert!(matches!(
            d32().eval_rational(&BigRational::zero()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn palindromes() {
        let d52 = lp(&[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)]);
        assert!(d52.is_palindromic());
        assert!(!lp(&[(4, 1), (2, -1), (0, 1)]).is_palindromic());
        assert!(LaurentPoly::zero().is_palindromic());
    }

    #[test]
    fn rational_finalize() {
        let r = RationalLaurent::new(lp(&[(2, 1), (-2, -1)]), lp(&[(1, 1), (-1, -1)])).unwrap();
        assert_eq!(r.finalize().unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(RationalLaurent::from(d32()).finalize().unwrap(), d32());
        assert!(RationalLaurent::new(d32(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn poly_laurent_round_trip() {
        let p = Poly::from_i64s(&[1, -1, 1]);
        assert_eq!(Poly::from_laurent(&p.to_laurent()), Some(p));
        assert_eq!(Poly::from_laurent(&lp(&[(1, 1)])), None);
        assert_eq!(Poly::from_laurent(&lp(&[(-2, 1)])), None);
    }

    fn arb_lp() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-12i64..12, -6i64..6), 0..8).prop_map(|v| lp(&v))
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-5i64..5, 0..6).prop_map(|v| Poly::from_i64s(&v))
    }

    fn is_normalized(p: &LaurentPoly) -> bool {
        p.terms().all(|(_, c)| !c.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_lp(), b in arb_lp(), c in arb_lp()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(is_normalized(&(&a * &b)));
            prop_assert!(is_normalized(&(&a - &a)));
        }

        #[test]
        fn division_round_trip(a in arb_lp(), b in arb_lp()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn sqrt_recovers_root(r in arb_lp()) {
            prop_assume!(!r.is_zero());
            let root = (&r * &r).sqrt_perfect().unwrap();
            prop_assert!(root == r || root == -&r);
            prop_assert!(root.leading_coeff().unwrap().is_positive());
        }

        #[test]
        fn compose_is_multiplicative(p in arb_poly(), q in arb_poly(), a in arb_lp()) {
            prop_assert_eq!((&p * &q).compose(&a), &p.compose(&a) * &q.compose(&a));
        }

        #[test]
        fn eval_is_ring_morphism(a in arb_lp(), b in arb_lp(), t in 0.5f64..2.0) {
            let lhs = (&a * &b).eval_f64(t).unwrap();
            let rhs = a.eval_f64(t).unwrap() * b.eval_f64(t).unwrap();
            let abs = |p: &LaurentPoly| LaurentPoly::from_terms(p.terms().map(|(e, c)| (e, c.abs())));
            let scale = (&abs(&a) * &abs(&b)).eval_f64(t).unwrap().max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }
    }
}
