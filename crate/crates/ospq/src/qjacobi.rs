//! Basic hypergeometric series with a signed base, little Q-Jacobi
//! polynomials at `Q = -q`, and their identification with the ζ-polynomials
//! of the representation matrices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::{Error, Result};
use crate::report::{Checkable, Report};
use crate::scalar::Scalar;
use crate::tmat;

/// `±q^{e/2}`, kept structurally so that powers of `-q` stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QPow {
    pub negative: bool,
    /// Exponent of `s = q^{1/2}`.
    pub s_exp: i32,
}

impl QPow {
    pub const ONE: QPow = QPow { negative: false, s_exp: 0 };

    pub const fn new(negative: bool, s_exp: i32) -> Self {
        QPow { negative, s_exp }
    }

    /// `q`.
    pub const fn q() -> Self {
        QPow::new(false, 2)
    }

    /// `-q`, the base of the supergroup polynomials.
    pub const fn minus_q() -> Self {
        QPow::new(true, 2)
    }

    pub fn pow(self, k: i32) -> Self {
        QPow { negative: self.negative && k.rem_euclid(2) == 1, s_exp: self.s_exp * k }
    }

    pub fn to_scalar(self) -> Scalar {
        let s = Scalar::s_pow(self.s_exp);
        if self.negative {
            s.neg()
        } else {
            s
        }
    }

    /// The `m >= 0` with `self = base^{-m}`, if any.
    pub fn termination_index(self, base: QPow) -> Option<u32> {
        if base.s_exp == 0 {
            return None;
        }
        if self.s_exp % base.s_exp != 0 {
            return None;
        }
        let k = self.s_exp / base.s_exp;
        (k <= 0 && base.pow(k) == self).then_some((-k) as u32)
    }
}

impl Mul for QPow {
    type Output = QPow;

    fn mul(self, other: QPow) -> QPow {
        QPow { negative: self.negative != other.negative, s_exp: self.s_exp + other.s_exp }
    }
}

impl fmt::Display for QPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        if self.s_exp % 2 == 0 {
            write!(f, "{sign}q^{}", self.s_exp / 2)
        } else {
            write!(f, "{sign}q^({}/2)", self.s_exp)
        }
    }
}

/// `(x; Q)_n = Π_{k<n} (1 - x Q^k)`.
pub fn shifted_factorial(x: &Scalar, base: QPow, n: i64) -> Result<Scalar> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    let mut out = Scalar::one();
    for k in 0..n {
        out = out.mul(&Scalar::one().sub(&x.mul(&base.pow(k as i32).to_scalar())));
    }
    Ok(out)
}

/// [`shifted_factorial`] with `x` itself a signed power.
pub fn shifted_factorial_pow(x: QPow, base: QPow, n: i64) -> Result<Scalar> {
    shifted_factorial(&x.to_scalar(), base, n)
}

/// Polynomial in one central variable, coefficients in ascending degree,
/// trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct QPolynomial {
    pub coeffs: Vec<Scalar>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn one() -> Self {
        QPolynomial::new(vec![Scalar::one()])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> Scalar {
        self.coeffs.get(n).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, q: f64, t: f64) -> Result<f64> {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c.eval(q)?;
        }
        Ok(acc)
    }
}

impl Checkable for QPolynomial {
    fn exact_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn numeric_dev(&self, other: &Self, q: f64) -> Option<f64> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let a: Vec<Scalar> = (0..n).map(|i| self.coeff(i)).collect();
        let b: Vec<Scalar> = (0..n).map(|i| other.coeff(i)).collect();
        a.numeric_dev(&b, q)
    }

    fn render(&self) -> String {
        self.coeffs.render()
    }
}

/// Terminating `₂φ₁(a₁, a₂; b; Q; z·t)` as a polynomial in `t`; `a₁` must be
/// `Q^{-m}` with `m >= 0`.
pub fn hyper_2phi1(a1: QPow, a2: QPow, b: QPow, base: QPow, z: &Scalar) -> Result<QPolynomial> {
    let m = a1.termination_index(base).ok_or(Error::NonTerminating)?;
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut zn = Scalar::one();
    for n in 0..=m as i64 {
        let den = shifted_factorial_pow(b, base, n)?.mul(&shifted_factorial_pow(base, base, n)?);
        if den.is_zero() {
            return Err(Error::SeriesPole(n as u32));
        }
        let num = shifted_factorial_pow(a1, base, n)?.mul(&shifted_factorial_pow(a2, base, n)?);
        coeffs.push(num.mul(&zn).div(&den)?);
        zn = zn.mul(z);
    }
    Ok(QPolynomial::new(coeffs))
}

/// `p^{(α,β)}_m(t) = ₂φ₁(Q^{-m}, Q^{α+β+m+1}; Q^{α+1}; Q; Q t)`.
pub fn little_q_jacobi(m: u32, alpha: i32, beta: i32, base: QPow) -> Result<QPolynomial> {
    let m = m as i32;
    hyper_2phi1(base.pow(-m), base.pow(alpha + beta + m + 1), base.pow(alpha + 1), base, &base.to_scalar())
}

/// The explicit shifted-factorial sum written out for `P^ℓ_{m'm}` at `Q = -q`,
/// with `(m', m)` ordered so that the first index is the larger one.
pub fn jacobi_sum(ell: i64, mp: i64, m: i64) -> Result<QPolynomial> {
    let base = QPow::minus_q();
    let (hi, lo) = if mp >= m { (mp, m) } else { (m, mp) };
    let p = |k: i64| base.pow(k as i32);
    let mut coeffs = Vec::new();
    for a in 0..=(ell + lo) {
        let num = shifted_factorial_pow(p(-ell - lo), base, a)?.mul(&shifted_factorial_pow(p(ell - lo + 1), base, a)?);
        let den = shifted_factorial_pow(p(hi - lo + 1), base, a)?.mul(&shifted_factorial_pow(base, base, a)?);
        coeffs.push(num.mul(&base.to_scalar().pow(a as u32)).div(&den)?);
    }
    Ok(QPolynomial::new(coeffs))
}

/// Jacobi labels `(m, α, β)` attached to `P^ℓ_{m'm}`.
pub fn jacobi_labels(ell: i64, mp: i64, m: i64) -> (u32, i32, i32) {
    if mp >= m {
        ((ell + m) as u32, (mp - m) as i32, (-mp - m) as i32)
    } else {
        ((ell + mp) as u32, (m - mp) as i32, (-mp - m) as i32)
    }
}

/// `P^ℓ_{m'm}` from the representation matrices against the little
/// Q-Jacobi polynomial at `Q = -q` and against the explicit sum.
/// Case ids: `jacobi{1|2} ({ℓ}) [{m'},{m}]` and `sum ...`.
pub fn identification_check(ell: i64, mp: i64, m: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("qjacobi");
    identify_into(&mut rep, ell, mp, m, samples)?;
    Ok(rep)
}

fn identify_into(rep: &mut Report, ell: i64, mp: i64, m: i64, samples: &[f64]) -> Result<()> {
    let p = QPolynomial::new(tmat::p_polynomial(ell, mp, m)?);
    let (deg, alpha, beta) = jacobi_labels(ell, mp, m);
    let j = little_q_jacobi(deg, alpha, beta, QPow::minus_q())?;
    let which = if mp >= m { 1 } else { 2 };
    rep.check(format!("jacobi{which} ({ell}) [{mp},{m}]"), &p, &j, samples);
    rep.check(format!("sum ({ell}) [{mp},{m}]"), &jacobi_sum(ell, mp, m)?, &j, samples);
    Ok(())
}

/// [`identification_check`] for every `(m', m)` and `ℓ <= max_l`.
pub fn suite_identification(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("qjacobi");
    for l in 0..=max_l {
        for mp in (-l..=l).rev() {
            for m in (-l..=l).rev() {
                identify_into(&mut rep, l, mp, m, samples)?;
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{Status, DEFAULT_SAMPLES};

    #[test]
    fn shifted_factorial_examples() {
        let x = Scalar::frac(3, 7);
        assert_eq!(shifted_factorial(&x, QPow::q(), 0).unwrap(), Scalar::one());
        let q = QPow::q();
        let qq = q.to_scalar();
        let expect = Scalar::one().sub(&qq).mul(&Scalar::one().sub(&qq.mul(&qq)));
        assert_eq!(shifted_factorial_pow(q, q, 2).unwrap(), expect);
        let mq = QPow::minus_q();
        assert_eq!(shifted_factorial_pow(mq, mq, 1).unwrap(), Scalar::one().add(&qq));
        assert_eq!(shifted_factorial(&x, q, -1), Err(Error::NegativeArgument(-1)));
    }

    #[test]
    fn two_phi_one_examples() {
        let mq = QPow::minus_q();
        let t = Scalar::frac(2, 5);
        assert_eq!(hyper_2phi1(QPow::ONE, mq.pow(3), mq, mq, &t).unwrap(), QPolynomial::one());
        // ₂φ₁(Q⁻¹, Q²; Q; Q; Qt) = 1 - (1 + Q) t.
        let p = hyper_2phi1(mq.pow(-1), mq.pow(2), mq, mq, &mq.to_scalar()).unwrap();
        let one_plus_q = Scalar::one().add(&mq.to_scalar());
        assert_eq!(p, QPolynomial::new(vec![Scalar::one(), one_plus_q.neg()]));
        assert_eq!(little_q_jacobi(0, 3, -2, mq).unwrap(), QPolynomial::one());
        assert_eq!(hyper_2phi1(mq.pow(2), mq, mq, mq, &t), Err(Error::NonTerminating));
        assert_eq!(hyper_2phi1(QPow::q().pow(-1), mq, mq, mq, &t), Err(Error::NonTerminating));
        assert_eq!(hyper_2phi1(mq.pow(-2), mq, mq.pow(-1), mq, &t), Err(Error::SeriesPole(2)));
    }

    #[test]
    fn identification_examples() {
        for (l, mp, m) in [(1, -1, 0), (2, 1, 1), (2, 0, 1), (2, 1, 0)] {
            let r = identification_check(l, mp, m, &DEFAULT_SAMPLES).unwrap();
            assert!(r.cases.iter().all(|c| c.status == Status::Pass), "{:?}", r.cases);
        }
        assert_eq!(QPolynomial::new(tmat::p_polynomial(1, -1, 0).unwrap()), QPolynomial::one());
        assert_eq!(tmat::p_polynomial(2, 0, 1).unwrap(), tmat::p_polynomial(2, 1, 0).unwrap());
    }
}
