//! Deformed integers, their factorials, super-binomials and σ_m.

use num_bigint::BigInt;
use num_traits::One;

use super::cyclo::{self, Factored};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::{kbr_poly, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bracket {
    /// `[n] = (q^n - q^-n)/(q - q^-1)`
    Qnum,
    /// `⟦n⟧ = (1 - (-1)^n q^n)/(1 + q)`
    Super,
    /// `⟦n⟧` with `q -> q^-1`
    SuperInv,
    /// `{n}_K = (q^(-n/2) - (-1)^n q^(n/2))/(q^(-1/2) + q^(1/2))`
    Kbr,
    /// `⟨n⟩ = {n}_K` with `q -> q^-1`
    Bra,
    /// `⟦n⟧!/(⟦k⟧!⟦n-k⟧!)`
    Sbinom,
    /// `σ_m`
    Sigma,
    /// Factorial of one of the five deformed integers above.
    Factorial(Base),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Qnum,
    Super,
    SuperInv,
    Kbr,
    Bra,
}

fn b(c: i64) -> BigInt {
    BigInt::from(c)
}

fn sgn(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `s^a - c s^b` as a polynomial.
fn binom(a: i64, c: i64, bexp: i64) -> Poly {
    Poly::monomial(b(1), a as i32).add(&Poly::monomial(b(-c), bexp as i32))
}

pub(crate) fn base_value(base: Base, n: i64) -> RatFunc {
    let one_plus_s2 = Poly::from_i64(0, &[1, 0, 1]);
    match base {
        Base::Qnum => {
            if n == 0 {
                return RatFunc::zero();
            }
            // s^{2-2n}(s^{4n} - 1) / (s^4 - 1)
            let num = binom(4 * n, 1, 0).shift((2 - 2 * n) as i32);
            RatFunc::from_polys(num, &Poly::from_i64(0, &[-1, 0, 0, 0, 1])).expect("cyclotomic")
        }
        Base::Super => RatFunc::from_polys(binom(0, sgn(n), 2 * n), &one_plus_s2).expect("cyclotomic"),
        Base::Bra => base_value(Base::Kbr, n).invert_var(),
        Base::SuperInv => {
            let num = binom(0, sgn(n), -2 * n).shift(2);
            RatFunc::from_polys(num, &one_plus_s2).expect("cyclotomic")
        }
        Base::Kbr => {
            if n >= 0 {
                RatFunc::from_poly(kbr_poly(n as u32))
            } else {
                let num = binom(-n, sgn(n), n).shift(1);
                RatFunc::from_polys(num, &one_plus_s2).expect("cyclotomic")
            }
        }
    }
}

fn base_factorial(base: Base, n: i64) -> Result<RatFunc> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    let mut acc = RatFunc::one();
    for i in 1..=n {
        acc = acc.mul(&base_value(base, i));
    }
    Ok(acc)
}

/// `σ_m = Π_{k=1}^{m-1} Σ_{l=0}^{k-1} (-1)^l [k-l]`; `σ_0 = σ_1 = 1`.
pub fn sigma(m: i64) -> Result<RatFunc> {
    if m < 0 {
        return Err(Error::NegativeArgument(m));
    }
    let mut acc = RatFunc::one();
    for k in 1..m {
        let mut inner = RatFunc::zero();
        for l in 0..k {
            inner = inner.add(&base_value(Base::Qnum, k - l).scale_int(sgn(l)));
        }
        acc = acc.mul(&inner);
    }
    Ok(acc)
}

/// Super-binomial `⟦n⟧!/(⟦k⟧!⟦n-k⟧!)`, `0 <= k <= n`.
pub fn sbinom(n: i64, k: i64) -> Result<RatFunc> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::InvalidIndex("sbinom needs 0 <= k <= n"));
    }
    let top = base_factorial(Base::Super, n)?;
    let bot = base_factorial(Base::Super, k)?.mul(&base_factorial(Base::Super, n - k)?);
    top.div(&bot)
}

/// Evaluate a bracket. `k` is the lower index of `Sbinom` and ignored
/// otherwise.
pub fn bracket(kind: Bracket, n: i64, k: Option<i64>) -> Result<Scalar> {
    let r = match kind {
        Bracket::Qnum => base_value(Base::Qnum, n),
        Bracket::Super => base_value(Base::Super, n),
        Bracket::SuperInv => base_value(Base::SuperInv, n),
        Bracket::Kbr => base_value(Base::Kbr, n),
        Bracket::Bra => base_value(Base::Bra, n),
        Bracket::Sbinom => sbinom(n, k.ok_or(Error::InvalidIndex("sbinom needs a lower index"))?)?,
        Bracket::Sigma => sigma(n)?,
        Bracket::Factorial(base) => base_factorial(base, n)?,
    };
    Ok(Scalar::from_ratfunc(r))
}

/// Shorthand for `bracket(Factorial(base), n, None)`.
pub fn factorial(base: Base, n: i64) -> Result<Scalar> {
    bracket(Bracket::Factorial(base), n, None)
}

/// Convenience constructors returning scalars directly.
pub fn qnum(n: i64) -> Scalar {
    Scalar::from_ratfunc(base_value(Base::Qnum, n))
}

pub fn sq(n: i64) -> Scalar {
    Scalar::from_ratfunc(base_value(Base::Super, n))
}

pub fn sq_inv(n: i64) -> Scalar {
    Scalar::from_ratfunc(base_value(Base::SuperInv, n))
}

pub fn kbr(n: i64) -> Scalar {
    Scalar::from_ratfunc(base_value(Base::Kbr, n))
}

pub fn bra(n: i64) -> Scalar {
    Scalar::from_ratfunc(base_value(Base::Bra, n))
}

pub fn sq_fact(n: i64) -> Scalar {
    factorial(Base::Super, n).expect("non-negative")
}

pub fn sq_inv_fact(n: i64) -> Scalar {
    factorial(Base::SuperInv, n).expect("non-negative")
}

pub fn kbr_fact(n: i64) -> Scalar {
    factorial(Base::Kbr, n).expect("non-negative")
}

pub fn bra_fact(n: i64) -> Scalar {
    factorial(Base::Bra, n).expect("non-negative")
}

/// A cyclotomic index that occurs in `{n}_K` but in no `{m}_K` with `m < n`.
pub(crate) fn kbr_owner(n: u32) -> u32 {
    if n % 2 == 1 {
        4 * n
    } else if n % 4 == 2 {
        n
    } else {
        2 * n
    }
}

pub(crate) fn kbr_factors(n: u32) -> Factored {
    cyclo::factor(&kbr_poly(n)).expect("K-brackets split over cyclotomics")
}

/// `q - q^-1`.
pub fn q_minus_qinv() -> Scalar {
    Scalar::from_poly(Poly::from_i64(-2, &[-1, 0, 0, 0, 1]))
}

/// `q^(1/2) + q^(-1/2)`.
pub fn s_plus_sinv() -> Scalar {
    Scalar::from_poly(Poly::from_i64(-1, &[1, 0, 1]))
}

/// `1 + q^-1`.
pub fn one_plus_qinv() -> Scalar {
    Scalar::from_poly(Poly::from_i64(-2, &[1, 0, 1]))
}

/// `1 + q`.
pub fn one_plus_q() -> Scalar {
    Scalar::from_poly(Poly::from_i64(0, &[1, 0, 1]))
}

/// Ordinary binomial coefficient as a scalar.
pub fn binomial(n: u32, k: u32) -> Scalar {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Scalar::from_poly(Poly::constant(acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i32, c: &[i64]) -> Scalar {
        Scalar::from_poly(Poly::from_i64(low, c))
    }

    #[test]
    fn examples() {
        assert_eq!(sq(2), p(0, &[1, 0, -1]));
        assert_eq!(kbr(3), p(-2, &[1, 0, -1, 0, 1]));
        assert_eq!(bracket(Bracket::Sigma, 1, None).unwrap(), Scalar::one());
        assert!(kbr(0).is_zero());
        assert_eq!(qnum(2), p(-2, &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn bra_is_kbracket_with_inverted_q() {
        for n in 0..8 {
            assert_eq!(bra(n), kbr(n).invert_q().unwrap());
            let sign = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(bra(n), kbr(n).scale_int(sign));
            assert_eq!(sq_inv(n), sq(n).invert_q().unwrap());
        }
        // ⟨2⟩ = q^{1/2} - q^{-1/2}
        assert_eq!(bra(2), Scalar::s_pow(1).sub(&Scalar::s_pow(-1)));
    }

    #[test]
    fn negative_kbracket_consistent() {
        // {-n} = -(-1)^n {n}
        for n in 1..6 {
            let expect = kbr(n).scale_int(-sgn(n));
            assert_eq!(kbr(-n), expect);
        }
    }

    #[test]
    fn factorial_errors() {
        assert!(factorial(Base::Super, -1).is_err());
        assert!(sigma(-2).is_err());
        assert!(sbinom(3, 4).is_err());
    }

    #[test]
    fn owners_are_unique() {
        for n in 2..40u32 {
            let own = kbr_owner(n);
            assert!(kbr_factors(n).factors.contains_key(&own));
            for m in 2..n {
                assert!(!kbr_factors(m).factors.contains_key(&own), "{n} {m}");
            }
        }
    }
}
