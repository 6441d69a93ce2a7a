//! Exact coefficients: rational functions in `s = q^(1/2)`, polynomial in the
//! formal symbol `Λ = ln q`, times formal square roots of K-brackets.

pub mod brackets;
pub mod cyclo;
pub mod limit;
pub mod poly;
pub mod ratfunc;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use brackets::{bracket, factorial, Bracket};
pub use limit::limit_q1;
pub use poly::Poly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// Largest K-bracket argument that may appear under a radical.
pub const MAX_RADICAL: i64 = 127;

/// Term key: power of `Λ` and the set of K-bracket arguments under an odd
/// square root (bit `n` set means a factor `√{n}_K`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    pub l: u32,
    pub rad: u128,
}

impl Key {
    pub const ONE: Key = Key { l: 0, rad: 0 };

    pub fn radicals(&self) -> Vec<u32> {
        (0..128).filter(|n| self.rad >> n & 1 == 1).collect()
    }
}

/// An exact coefficient. Equality is structural on the canonical form.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    terms: BTreeMap<Key, RatFunc>,
}

/// `{n}_K = Σ_{j<n} (-1)^j s^{2j+1-n}` as a Laurent polynomial, `n >= 0`.
pub fn kbr_poly(n: u32) -> Poly {
    let coeffs: Vec<BigInt> =
        (0..2 * n as usize).map(|i| if i % 2 == 1 { BigInt::zero() } else if i % 4 == 0 { BigInt::one() } else { -BigInt::one() }).collect();
    Poly::from_coeffs(1 - n as i32, coeffs)
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Scalar::from_ratfunc(RatFunc::one())
    }

    pub fn from_int(c: i64) -> Self {
        Scalar::from_ratfunc(RatFunc::from_int(c))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Scalar::from_ratfunc(RatFunc::from_rational(r))
    }

    /// `a / b` for integers, `b != 0`.
    pub fn frac(a: i64, b: i64) -> Self {
        Scalar::from_rational(&BigRational::new(BigInt::from(a), BigInt::from(b)))
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        Scalar::from_term(Key::ONE, r)
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar::from_ratfunc(RatFunc::from_poly(p))
    }

    pub fn from_term(key: Key, r: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(key, r);
        }
        Scalar { terms }
    }

    /// `q^(k/2) = s^k`.
    pub fn s_pow(k: i32) -> Self {
        Scalar::from_ratfunc(RatFunc::s_pow(k))
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Scalar::s_pow(2 * k)
    }

    /// `(-1)^e`.
    pub fn sign(e: i64) -> Self {
        Scalar::from_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// The formal symbol `Λ = ln q`.
    pub fn lambda() -> Self {
        Scalar::from_term(Key { l: 1, rad: 0 }, RatFunc::one())
    }

    /// `Λ^k`.
    pub fn lambda_pow(k: u32) -> Self {
        Scalar::from_term(Key { l: k, rad: 0 }, RatFunc::one())
    }

    /// `√{n}_K` for `n >= 1`.
    pub fn sqrt_kbracket(n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(Error::NegativeArgument(n));
        }
        if n == 1 {
            return Ok(Scalar::one());
        }
        if n > MAX_RADICAL {
            return Err(Error::RadicalOutOfRange(n));
        }
        Ok(Scalar::from_term(Key { l: 0, rad: 1u128 << n }, RatFunc::one()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Key::ONE).is_some_and(|r| r.is_one())
    }

    /// True when no term carries `Λ`.
    pub fn is_lambda_free(&self) -> bool {
        self.terms.keys().all(|k| k.l == 0)
    }

    /// True when no term carries a radical.
    pub fn is_radical_free(&self) -> bool {
        self.terms.keys().all(|k| k.rad == 0)
    }

    /// The `Λ^0`, radical-free part.
    pub fn plain(&self) -> RatFunc {
        self.terms.get(&Key::ONE).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Highest power of `Λ` present (0 for zero).
    pub fn lambda_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.l).max().unwrap_or(0)
    }

    /// Coefficient of `Λ^l` (radicals kept).
    pub fn lambda_coeff(&self, l: u32) -> Scalar {
        let terms = self.terms.iter().filter(|(k, _)| k.l == l).map(|(k, r)| (Key { l: 0, rad: k.rad }, r.clone())).collect();
        Scalar { terms }
    }

    fn insert_add(terms: &mut BTreeMap<Key, RatFunc>, key: Key, r: RatFunc) {
        if r.is_zero() {
            return;
        }
        match terms.get_mut(&key) {
            Some(slot) => {
                let v = slot.add(&r);
                if v.is_zero() {
                    terms.remove(&key);
                } else {
                    *slot = v;
                }
            }
            None => {
                terms.insert(key, r);
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        let mut terms = self.terms.clone();
        for (k, r) in &other.terms {
            Scalar::insert_add(&mut terms, *k, r.clone());
        }
        Scalar { terms }
    }

    pub fn add_assign(&mut self, other: &Scalar) {
        for (k, r) in &other.terms {
            Scalar::insert_add(&mut self.terms, *k, r.clone());
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(k, r)| (*k, r.neg())).collect() }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut terms = BTreeMap::new();
        for (ka, ra) in &self.terms {
            for (kb, rb) in &other.terms {
                let mut r = ra.mul(rb);
                let both = ka.rad & kb.rad;
                if both != 0 {
                    for n in 0..128u32 {
                        if both >> n & 1 == 1 {
                            r = r.mul_poly(&kbr_poly(n));
                        }
                    }
                }
                Scalar::insert_add(&mut terms, Key { l: ka.l + kb.l, rad: ka.rad ^ kb.rad }, r);
            }
        }
        Scalar { terms }
    }

    pub fn mul_ratfunc(&self, r: &RatFunc) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(k, v)| (*k, v.mul(r))).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Scalar {
        self.mul_ratfunc(&RatFunc::from_int(c))
    }

    pub fn scale_rational(&self, c: &BigRational) -> Scalar {
        self.mul_ratfunc(&RatFunc::from_rational(c))
    }

    /// Multiply by `s^k = q^(k/2)`.
    pub fn shift(&self, k: i32) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(key, v)| (*key, v.shift(k))).collect() }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse. The divisor must be `Λ`-free and carry a
    /// single radical monomial, so that conjugation by that monomial leaves a
    /// radical-free rational function.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_lambda_free() {
            return Err(Error::LambdaDivisor);
        }
        if self.terms.len() != 1 {
            return Err(Error::MixedRadicalDivisor);
        }
        let (key, r) = self.terms.iter().next().unwrap();
        // 1/(r √R) = √R / (r Π_{n∈R} {n})
        let mut den = r.clone();
        for n in key.radicals() {
            den = den.mul_poly(&kbr_poly(n));
        }
        Ok(Scalar::from_term(*key, den.inv()?))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn powi(&self, n: i32) -> Result<Scalar> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow(n.unsigned_abs()))
        }
    }

    /// Positive square root (at `q ∈ (0,1)`) of a `Λ`-free scalar with a
    /// single radical-free term whose factorisation over cyclotomic
    /// polynomials is a K-bracket monomial times a square.
    pub fn sqrt(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        if !self.is_lambda_free() || !self.is_radical_free() {
            return Err(Error::NotASquare);
        }
        let r = self.plain();
        let num = cyclo::factor(r.numer()).ok_or(Error::NotASquare)?;
        // Combined exponent vector: numerator minus denominator.
        let mut exps: BTreeMap<u32, i64> = BTreeMap::new();
        for (&d, &e) in &num.factors {
            *exps.entry(d).or_insert(0) += e as i64;
        }
        for (&d, &e) in r.den_factors() {
            *exps.entry(d).or_insert(0) -= e as i64;
        }
        let mut shift = num.shift as i64;
        let mut c = BigRational::new(num.c.clone(), r.den_const().clone());
        // Strip K-brackets with odd multiplicity, largest owner first.
        let mut rad: u128 = 0;
        let max_d = exps.keys().copied().max().unwrap_or(0);
        for n in (2..=MAX_RADICAL as u32).rev() {
            let owner = brackets::kbr_owner(n);
            if owner > max_d {
                continue;
            }
            if exps.get(&owner).is_some_and(|e| e.rem_euclid(2) == 1) {
                let f = brackets::kbr_factors(n);
                for (&d, &e) in &f.factors {
                    *exps.entry(d).or_insert(0) -= e as i64;
                }
                shift -= f.shift as i64;
                c /= BigRational::from_integer(f.c.clone());
                rad |= 1u128 << n;
            }
        }
        if exps.values().any(|e| e.rem_euclid(2) == 1) || shift.rem_euclid(2) == 1 {
            return Err(Error::NotASquare);
        }
        if c.is_negative() {
            return Err(Error::NotASquare);
        }
        let cn = num_integer::Roots::sqrt(c.numer());
        let cd = num_integer::Roots::sqrt(c.denom());
        if &cn * &cn != *c.numer() || &cd * &cd != *c.denom() {
            return Err(Error::NotASquare);
        }
        let mut top = BTreeMap::new();
        let mut bottom = BTreeMap::new();
        for (&d, &e) in &exps {
            if e > 0 {
                top.insert(d, (e / 2) as u32);
            } else if e < 0 {
                bottom.insert(d, (-e / 2) as u32);
            }
        }
        let numer = cyclo::expand(&top).scale(&cn).shift((shift / 2) as i32);
        let root = RatFunc::from_parts(numer, cd, bottom);
        let mut out = Scalar::from_term(Key { l: 0, rad }, root);
        if out.eval(0.5)? < 0.0 {
            out = out.neg();
        }
        if out.mul(&out) != *self {
            return Err(Error::NotASquare);
        }
        Ok(out)
    }

    /// Numeric value at `q = q_val ∈ (0,1)`, with `Λ = ln q_val`.
    pub fn eval(&self, q_val: f64) -> Result<f64> {
        if !(q_val > 0.0 && q_val < 1.0) {
            return Err(Error::SampleOutOfRange(q_val));
        }
        let s = libm::sqrt(q_val);
        let lam = libm::log(q_val);
        let mut acc = 0.0;
        for (k, r) in &self.terms {
            let mut v = r.eval_f64(s) * libm::pow(lam, k.l as f64);
            for n in k.radicals() {
                v *= libm::sqrt(kbr_poly(n).eval_f64(s));
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Value as an exact rational if this is a constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(r) = self.terms.get(&Key::ONE) {
                return r.as_rational();
            }
        }
        None
    }

    /// Substitute `q -> q^-1` in the rational-function parts. `Λ` maps to
    /// `-Λ` and `√{n}_K` is invariant (`{n}_K` is symmetric up to the sign
    /// `(-1)^(n-1)`, so radicals of even `n` pick up no real value); only used
    /// on radical-free, `Λ`-free scalars.
    pub fn invert_q(&self) -> Result<Scalar> {
        if !self.is_radical_free() || !self.is_lambda_free() {
            return Err(Error::InvalidIndex("invert_q needs a plain rational function"));
        }
        Ok(Scalar::from_ratfunc(self.plain().invert_var()))
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::from_int(c)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fmt_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (c, e) in p.terms() {
        if !first {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        } else if c.is_negative() {
            f.write_str("-")?;
        }
        first = false;
        let a = c.abs();
        match (a.is_one(), e) {
            (_, 0) => write!(f, "{a}")?,
            (true, 1) => f.write_str("s")?,
            (true, _) => write!(f, "s^{e}")?,
            (false, 1) => write!(f, "{a}*s")?,
            (false, _) => write!(f, "{a}*s^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, r) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str("(")?;
            fmt_poly(r.numer(), f)?;
            f.write_str(")")?;
            if !r.is_polynomial() || !r.den_const().is_one() {
                f.write_str("/(")?;
                fmt_poly(&r.denom_poly(), f)?;
                f.write_str(")")?;
            }
            if k.l > 0 {
                write!(f, "*L^{}", k.l)?;
            }
            for n in k.radicals() {
                write!(f, "*sqrt{{{n}}}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_monomials() {
        assert!(Scalar::s_pow(1).mul(&Scalar::s_pow(-1)).is_one());
    }

    #[test]
    fn radical_fold() {
        let r2 = Scalar::sqrt_kbracket(2).unwrap();
        let expect = Scalar::from_poly(Poly::from_i64(-1, &[1, 0, -1]));
        assert_eq!(r2.mul(&r2), expect);
        let r3 = Scalar::sqrt_kbracket(3).unwrap();
        let prod = r2.mul(&r3);
        assert_eq!(prod.num_terms(), 1);
        assert_eq!(prod.terms().next().unwrap().0.radicals(), [2, 3]);
    }

    #[test]
    fn reciprocal_radical_folds_even_part() {
        // {2}^(-3/2) = {2}^(-2) √{2}
        let r2 = Scalar::sqrt_kbracket(2).unwrap();
        let x = r2.pow(3).inv().unwrap();
        let (k, _) = x.terms().next().unwrap();
        assert_eq!(k.radicals(), [2]);
        assert!(x.mul(&r2.pow(3)).is_one());
    }

    #[test]
    fn lambda_divisor_rejected() {
        assert_eq!(Scalar::lambda().inv(), Err(Error::LambdaDivisor));
        let mixed = Scalar::one().add(&Scalar::sqrt_kbracket(2).unwrap());
        assert_eq!(mixed.inv(), Err(Error::MixedRadicalDivisor));
    }

    #[test]
    fn square_roots() {
        let k = |n| Scalar::from_poly(kbr_poly(n));
        let x = k(2).mul(&k(3)).mul(&k(3)).mul(&k(5)).div(&k(4)).unwrap();
        let r = x.sqrt().unwrap();
        assert_eq!(r.mul(&r), x);
        assert!(r.eval(0.3).unwrap() > 0.0);
        let six = k(6).sqrt().unwrap();
        assert_eq!(six, Scalar::sqrt_kbracket(6).unwrap());
        assert_eq!(Scalar::from_int(2).sqrt(), Err(Error::NotASquare));
        assert_eq!(Scalar::frac(9, 4).sqrt().unwrap(), Scalar::frac(3, 2));
    }

    #[test]
    fn numeric_values() {
        let k2 = Scalar::from_poly(kbr_poly(2));
        assert!((k2.eval(0.25).unwrap() - 1.5).abs() < 1e-15);
        assert!((Scalar::lambda().eval(0.5).unwrap() - libm::log(0.5)).abs() < 1e-15);
        let r2 = Scalar::sqrt_kbracket(2).unwrap();
        let z = r2.mul(&r2).sub(&k2);
        assert!(z.is_zero());
        assert!(Scalar::one().eval(1.5).is_err());
    }
}
