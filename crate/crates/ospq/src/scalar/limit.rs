//! Exact limits at `q = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclo;
use super::Scalar;
use crate::error::{Error, Result};

/// `lim_{q -> 1} (1 - q)^order · a` for a `Λ`-free, radical-free scalar.
///
/// `order` may be negative, which divides by powers of `1 - q`. The limit is
/// taken along `s = q^(1/2) -> 1`, where `1 - q = (1 - s)(1 + s)`.
pub fn limit_q1(a: &Scalar, order: i64) -> Result<BigRational> {
    if !a.is_lambda_free() || !a.is_radical_free() {
        return Err(Error::NotRational);
    }
    if a.is_zero() {
        return Ok(BigRational::zero());
    }
    let r = a.plain();
    let (num_ord, rest) = r.numer().split_root(1);
    let den_ord = r.den_factors().get(&1).copied().unwrap_or(0);
    let mut den_val = r.den_const().clone();
    for (&d, &e) in r.den_factors() {
        if d != 1 {
            let at_one: i64 = cyclo::cyclotomic(d).iter().sum();
            den_val *= BigInt::from(at_one).pow(e);
        }
    }
    // a ~ c (s - 1)^ord, (1 - q)^order ~ (-2)^order (s - 1)^order
    let ord = num_ord as i64 - den_ord as i64 + order;
    if ord < 0 {
        return Err(Error::ResidualPole(-ord));
    }
    if ord > 0 {
        return Ok(BigRational::zero());
    }
    let c = BigRational::new(rest.value_at_unit(1), den_val);
    let m2 = BigRational::from_integer(BigInt::from(-2));
    let factor = if order >= 0 { pow(&m2, order as u32) } else { BigRational::one() / pow(&m2, (-order) as u32) };
    Ok(c * factor)
}

fn pow(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::brackets::{sq, sq_fact};
    use super::*;

    fn one() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn super_brackets() {
        assert_eq!(limit_q1(&sq(3), 0).unwrap(), one());
        assert_eq!(limit_q1(&sq(2), -1).unwrap(), one());
        assert_eq!(limit_q1(&sq(6), -1).unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(limit_q1(&Scalar::one(), 0).unwrap(), one());
        assert_eq!(limit_q1(&sq(2), 0).unwrap(), BigRational::zero());
        assert_eq!(limit_q1(&sq(2).inv().unwrap(), 0), Err(Error::ResidualPole(1)));
    }

    #[test]
    fn even_factorial() {
        let mut nfact = 1i64;
        for n in 1..=8 {
            nfact *= n;
            let x = sq_fact(2 * n).scale_rational(&BigRational::new(1.into(), nfact.into()));
            assert_eq!(limit_q1(&x, -n).unwrap(), one(), "n = {n}");
        }
    }
}
