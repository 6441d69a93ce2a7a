//! Laurent polynomials in `s = q^(1/2)` with integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `Σ coeffs[i] · s^(low + i)`.
///
/// Trimmed: either empty (the zero polynomial, `low == 0`) or both the first
/// and the last coefficient are non-zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, exp: i32) -> Self {
        Poly::from_coeffs(exp, vec![c])
    }

    /// `s^exp`.
    pub fn s_pow(exp: i32) -> Self {
        Poly::monomial(BigInt::one(), exp)
    }

    pub fn from_coeffs(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(low: i32, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent present (`low - 1` for the zero polynomial).
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Non-zero `(coefficient, exponent)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, i32)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (c, self.low + i as i32))
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let i = exp - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Width of the exponent span, `high - low`.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn shift(&self, k: i32) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        Poly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn neg(&self) -> Poly {
        Poly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut out = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[(other.low - low) as usize + i] += c;
        }
        Poly::from_coeffs(low, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(self.low + other.low, out)
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { low: self.low, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Divide every coefficient by `k`, which must divide all of them.
    pub fn div_exact_int(&self, k: &BigInt) -> Poly {
        Poly { low: self.low, coeffs: self.coeffs.iter().map(|c| c / k).collect() }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Substitute `s -> -s`.
    pub fn negate_var(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.low + i as i32).rem_euclid(2) == 1 { -c } else { c.clone() })
            .collect();
        Poly { low: self.low, coeffs }
    }

    /// Substitute `s -> s^-1`.
    pub fn invert_var(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly { low: -self.high(), coeffs }
    }

    /// Exact quotient by an ordinary integer polynomial `d(s)` (ascending
    /// coefficients) that is monic and has non-zero constant term, or `None`
    /// if `d` does not divide `self`.
    pub fn div_by_monic(&self, d: &[i64]) -> Option<Poly> {
        let dn = d.len() - 1;
        debug_assert!(d[dn] == 1 && d[0] != 0);
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.coeffs.len() <= dn {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qn = rem.len() - dn;
        let mut quot = vec![BigInt::zero(); qn];
        for i in (0..qn).rev() {
            let c = core::mem::take(&mut rem[i + dn]);
            if c.is_zero() {
                continue;
            }
            for (j, &dj) in d.iter().enumerate().take(dn) {
                if dj != 0 {
                    rem[i + j] -= &c * dj;
                }
            }
            quot[i] = c;
        }
        if rem.iter().take(dn).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::from_coeffs(self.low, quot))
    }

    /// Multiply by an ordinary integer polynomial given in ascending order.
    pub fn mul_small(&self, d: &[i64]) -> Poly {
        self.mul(&Poly::from_i64(0, d))
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * s + big_to_f64(c);
        }
        acc * libm::pow(s, self.low as f64)
    }

    /// Sign of the lowest-degree coefficient.
    pub fn low_sign(&self) -> Ordering {
        match self.coeffs.first() {
            None => Ordering::Equal,
            Some(c) if c.is_negative() => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }

    /// Value and multiplicity of the root `s = r` for `r = ±1`: returns
    /// `(k, p)` with `self = (s - r)^k · p` and `p(r) != 0`.
    pub fn split_root(&self, r: i64) -> (u32, Poly) {
        let d = [-r, 1];
        let mut k = 0;
        let mut p = self.clone();
        while let Some(q) = p.div_by_monic(&d) {
            p = q;
            k += 1;
        }
        (k, p)
    }

    /// Exact value at `s = r` for integer `r = ±1`.
    pub fn value_at_unit(&self, r: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for (c, e) in self.terms() {
            if r == -1 && e.rem_euclid(2) == 1 {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i32, c: &[i64]) -> Poly {
        Poly::from_i64(low, c)
    }

    #[test]
    fn trimming_and_shift() {
        let a = p(-2, &[0, 0, 3, 0]);
        assert_eq!(a, p(0, &[3]));
        assert_eq!(a.low(), 0);
        assert!(p(5, &[0, 0]).is_zero());
        assert_eq!(p(1, &[1, 2]).shift(-3), p(-2, &[1, 2]));
    }

    #[test]
    fn arithmetic() {
        let a = p(-1, &[1, 1]);
        let b = p(0, &[1, -1]);
        assert_eq!(a.mul(&b), p(-1, &[1, 0, -1]));
        assert_eq!(a.add(&a.neg()), Poly::zero());
        assert_eq!(a.sub(&b), p(-1, &[1, 0, 1]));
    }

    #[test]
    fn monic_division() {
        let a = p(3, &[-1, 0, 0, 1]);
        let q = a.div_by_monic(&[-1, 1]).unwrap();
        assert_eq!(q, p(3, &[1, 1, 1]));
        assert!(a.div_by_monic(&[1, 1]).is_none());
    }

    #[test]
    fn variable_substitutions() {
        let a = p(-1, &[2, 0, 5]);
        assert_eq!(a.negate_var(), p(-1, &[-2, 0, -5]));
        assert_eq!(a.invert_var(), p(-1, &[5, 0, 2]));
    }

    #[test]
    fn roots_at_units() {
        let a = p(0, &[-1, 0, 1]).mul(&p(0, &[-1, 1]));
        let (k, rest) = a.split_root(1);
        assert_eq!(k, 2);
        assert_eq!(rest, p(0, &[1, 1]));
        assert_eq!(rest.value_at_unit(1), BigInt::from(2));
        assert_eq!(rest.value_at_unit(-1), BigInt::zero());
    }
}
