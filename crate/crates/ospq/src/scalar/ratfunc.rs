//! Rational functions in `s` whose denominators split over cyclotomic
//! polynomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::{self, cyclotomic};
use super::poly::{big_to_f64, Poly};
use crate::error::{Error, Result};

/// `num(s) / (den_c · Π Φ_d(s)^{den[d]})`.
///
/// Canonical: `den_c > 0`, `gcd(content(num), den_c) = 1`, no `Φ_d` listed in
/// `den` divides `num`, zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den_c: BigInt,
    den: BTreeMap<u32, u32>,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den_c: BigInt::one(), den: BTreeMap::new() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        RatFunc::from_parts(num, BigInt::one(), BTreeMap::new())
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_poly(Poly::constant(BigInt::from(c)))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::from_parts(Poly::constant(r.numer().clone()), r.denom().clone(), BTreeMap::new())
    }

    /// `s^k`.
    pub fn s_pow(k: i32) -> Self {
        RatFunc::from_poly(Poly::s_pow(k))
    }

    /// Build from a numerator and a factored denominator, normalising.
    pub fn from_parts(num: Poly, den_c: BigInt, den: BTreeMap<u32, u32>) -> Self {
        let mut r = RatFunc { num, den_c, den };
        r.normalize();
        r
    }

    /// `num / den` for arbitrary polynomials; fails if `den` has a
    /// non-cyclotomic factor.
    pub fn from_polys(num: Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = cyclo::factor(den).ok_or(Error::NonCyclotomicDivisor)?;
        let mut num = num.shift(-f.shift);
        let mut c = f.c;
        if c.is_negative() {
            num = num.neg();
            c = -c;
        }
        Ok(RatFunc::from_parts(num, c, f.factors))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            *self = RatFunc { num: Poly::zero(), den_c: BigInt::one(), den: BTreeMap::new() };
            return;
        }
        if self.den_c.is_negative() {
            self.den_c = -self.den_c.clone();
            self.num = self.num.neg();
        }
        let ds: Vec<u32> = self.den.keys().copied().collect();
        for d in ds {
            let phi = cyclotomic(d);
            loop {
                let e = self.den[&d];
                if e == 0 {
                    break;
                }
                match self.num.div_by_monic(phi) {
                    Some(q) => {
                        self.num = q;
                        self.den.insert(d, e - 1);
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, e| *e > 0);
        let g = self.num.content().gcd(&self.den_c);
        if !g.is_one() {
            self.num = self.num.div_exact_int(&g);
            self.den_c = &self.den_c / &g;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den_c.is_one() && self.den.is_empty()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn den_const(&self) -> &BigInt {
        &self.den_c
    }

    pub fn den_factors(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    /// Denominator polynomial `den_c · Π Φ_d^{e_d}`.
    pub fn denom_poly(&self) -> Poly {
        cyclo::expand(&self.den).scale(&self.den_c)
    }

    /// True when the denominator is a positive integer constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den_c: self.den_c.clone(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (&d, &e) in &other.den {
            let slot = den.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |r: &RatFunc| {
            let mut n = r.num.clone();
            for (&d, &e) in &den {
                let have = r.den.get(&d).copied().unwrap_or(0);
                for _ in have..e {
                    n = n.mul_small(cyclotomic(d));
                }
            }
            n
        };
        let l = self.den_c.lcm(&other.den_c);
        let a = lift(self).scale(&(&l / &self.den_c));
        let b = lift(other).scale(&(&l / &other.den_c));
        RatFunc::from_parts(a.add(&b), l, den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        // Cancel cross factors before multiplying out.
        let mut a = self.num.clone();
        let mut b = other.num.clone();
        let mut den_a = self.den.clone();
        let mut den_b = other.den.clone();
        cancel(&mut a, &mut den_b);
        cancel(&mut b, &mut den_a);
        let mut den = den_a;
        for (d, e) in den_b {
            *den.entry(d).or_insert(0) += e;
        }
        den.retain(|_, e| *e > 0);
        let g1 = a.content().gcd(&other.den_c);
        let g2 = b.content().gcd(&self.den_c);
        let a = a.div_exact_int(&g1);
        let b = b.div_exact_int(&g2);
        let dc = (&self.den_c / &g2) * (&other.den_c / &g1);
        RatFunc { num: a.mul(&b), den_c: dc, den }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    pub fn scale_int(&self, k: i64) -> RatFunc {
        self.mul(&RatFunc::from_int(k))
    }

    pub fn shift(&self, k: i32) -> RatFunc {
        RatFunc { num: self.num.shift(k), den_c: self.den_c.clone(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = cyclo::factor(&self.num).ok_or(Error::NonCyclotomicDivisor)?;
        let mut num = cyclo::expand(&self.den).scale(&self.den_c).shift(-f.shift);
        let mut c = f.c;
        if c.is_negative() {
            c = -c;
            num = num.neg();
        }
        Ok(RatFunc::from_parts(num, c, f.factors))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        let mut acc = RatFunc::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn powi(&self, n: i32) -> Result<RatFunc> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow(n.unsigned_abs()))
        }
    }

    /// Substitute `s -> s^-1`.
    pub fn invert_var(&self) -> RatFunc {
        // Φ_d(1/s) = s^{-φ(d)} Φ_d(s) for d >= 2; Φ_1(1/s) = -s^{-1} Φ_1(s).
        let mut num = self.num.invert_var();
        let mut shift = 0i32;
        let mut sign = false;
        for (&d, &e) in &self.den {
            shift += (cyclo::totient(d) * e) as i32;
            if d == 1 && e % 2 == 1 {
                sign = !sign;
            }
        }
        num = num.shift(shift);
        if sign {
            num = num.neg();
        }
        RatFunc::from_parts(num, self.den_c.clone(), self.den.clone())
    }

    /// Substitute `s -> -s`.
    pub fn negate_var(&self) -> RatFunc {
        let num = self.num.negate_var();
        let den = self.denom_poly().negate_var();
        RatFunc::from_polys(num, &den).expect("cyclotomic denominators stay cyclotomic under s -> -s")
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        let mut d = big_to_f64(&self.den_c);
        for (&k, &e) in &self.den {
            let phi = cyclotomic(k);
            let mut v = 0.0;
            for c in phi.iter().rev() {
                v = v * s + *c as f64;
            }
            d *= libm::pow(v, e as f64);
        }
        self.num.eval_f64(s) / d
    }

    /// Constant value if this is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.den.is_empty() && self.num.low() == 0 && self.num.span() == 0 {
            return Some(BigRational::new(self.num.coeff(0), self.den_c.clone()));
        }
        None
    }
}

fn cancel(num: &mut Poly, den: &mut BTreeMap<u32, u32>) {
    for (&d, e) in den.iter_mut() {
        let phi = cyclotomic(d);
        while *e > 0 {
            match num.div_by_monic(phi) {
                Some(q) => {
                    *num = q;
                    *e -= 1;
                }
                None => break,
            }
        }
    }
    den.retain(|_, e| *e > 0);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i32, c: &[i64]) -> Poly {
        Poly::from_i64(low, c)
    }

    #[test]
    fn gcd_reduction() {
        // (1 - q^2)/(1 + q) = 1 - q, with q = s^2
        let r = RatFunc::from_polys(p(0, &[1, 0, 0, 0, -1]), &p(0, &[1, 0, 1])).unwrap();
        assert_eq!(r, RatFunc::from_poly(p(0, &[1, 0, -1])));
    }

    #[test]
    fn add_with_common_factor() {
        let a = RatFunc::from_polys(Poly::one(), &p(0, &[-1, 1])).unwrap();
        let b = RatFunc::from_polys(p(0, &[-1]), &p(0, &[-1, 1])).unwrap();
        assert!(a.add(&b).is_zero());
        let c = RatFunc::from_polys(p(1, &[1]), &p(0, &[-1, 0, 1])).unwrap();
        let d = RatFunc::from_polys(Poly::one(), &p(0, &[-1, 0, 1])).unwrap();
        // (s + 1)/(s^2 - 1) = 1/(s - 1)
        assert_eq!(c.add(&d), a);
    }

    #[test]
    fn inverse_and_division() {
        let a = RatFunc::from_polys(p(0, &[2, 0, 2]), &p(0, &[1, 1])).unwrap();
        let i = a.inv().unwrap();
        assert!(a.mul(&i).is_one());
        let nc = RatFunc::from_poly(p(0, &[1, 3]));
        assert_eq!(nc.inv(), Err(Error::NonCyclotomicDivisor));
    }

    #[test]
    fn invert_variable() {
        let a = RatFunc::from_polys(p(0, &[1, 2]), &p(0, &[-1, 1])).unwrap();
        let b = a.invert_var();
        let s = 0.3f64;
        assert!((b.eval_f64(s) - a.eval_f64(1.0 / s)).abs() < 1e-12);
        assert_eq!(b.invert_var(), a);
    }

    #[test]
    fn rational_constants() {
        let r = BigRational::new(BigInt::from(-6), BigInt::from(4));
        let f = RatFunc::from_rational(&r);
        assert_eq!(f.as_rational(), Some(r));
        assert_eq!(f.den_const(), &BigInt::from(2));
    }
}
