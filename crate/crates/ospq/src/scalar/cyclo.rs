//! Cyclotomic polynomials in `s` and factorisation over them.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ptr;
use core::sync::atomic::{AtomicPtr, Ordering};

use num_bigint::BigInt;

use super::poly::Poly;

const TABLE_MAX: usize = 512;

static TABLE: AtomicPtr<Vec<Vec<i64>>> = AtomicPtr::new(ptr::null_mut());

fn build_table() -> Vec<Vec<i64>> {
    let mut table: Vec<Vec<i64>> = vec![Vec::new(); TABLE_MAX + 1];
    for d in 1..=TABLE_MAX {
        // s^d - 1 divided by every Φ_e with e | d, e < d.
        let mut p = vec![0i64; d + 1];
        p[0] = -1;
        p[d] = 1;
        for (e, phi) in table.iter().enumerate().take(d).skip(1) {
            if d % e == 0 {
                p = div_small(&p, phi);
            }
        }
        table[d] = p;
    }
    table
}

fn div_small(p: &[i64], d: &[i64]) -> Vec<i64> {
    let dn = d.len() - 1;
    let mut rem = p.to_vec();
    let qn = rem.len() - dn;
    let mut q = vec![0i64; qn];
    for i in (0..qn).rev() {
        let c = rem[i + dn];
        rem[i + dn] = 0;
        for j in 0..dn {
            rem[i + j] -= c * d[j];
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

fn table() -> &'static Vec<Vec<i64>> {
    let p = TABLE.load(Ordering::Acquire);
    if !p.is_null() {
        // SAFETY: the pointer is only ever set to a leaked, never-freed box.
        return unsafe { &*p };
    }
    let fresh = Box::into_raw(Box::new(build_table()));
    match TABLE.compare_exchange(ptr::null_mut(), fresh, Ordering::AcqRel, Ordering::Acquire) {
        // SAFETY: we just published `fresh`; it is never freed.
        Ok(_) => unsafe { &*fresh },
        Err(existing) => {
            // SAFETY: `fresh` was never shared; `existing` is a published leak.
            unsafe {
                drop(Box::from_raw(fresh));
                &*existing
            }
        }
    }
}

/// Coefficients of Φ_d(s) in ascending order, `1 <= d <= 512`.
pub fn cyclotomic(d: u32) -> &'static [i64] {
    assert!(d >= 1 && d as usize <= TABLE_MAX, "cyclotomic index out of range: {d}");
    &table()[d as usize]
}

pub fn totient(d: u32) -> u32 {
    let mut n = d;
    let mut r = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

/// Product `Π Φ_d(s)^{e_d}` as a polynomial.
pub fn expand(factors: &BTreeMap<u32, u32>) -> Poly {
    let mut acc = Poly::one();
    for (&d, &e) in factors {
        for _ in 0..e {
            acc = acc.mul_small(cyclotomic(d));
        }
    }
    acc
}

/// `p = c · s^shift · Π Φ_d(s)^{e_d}` with `c` an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub c: BigInt,
    pub shift: i32,
    pub factors: BTreeMap<u32, u32>,
}

/// Factor a non-zero Laurent polynomial over cyclotomic polynomials, or
/// `None` if it has a non-cyclotomic irreducible factor.
pub fn factor(p: &Poly) -> Option<Factored> {
    if p.is_zero() {
        return None;
    }
    let shift = p.low();
    let mut rest = p.shift(-shift);
    let mut deg = rest.span() as u32;
    let mut factors = BTreeMap::new();
    let bound = 6 * deg + 6;
    let mut d = 1;
    while deg > 0 && d <= bound.min(TABLE_MAX as u32) {
        if totient(d) <= deg {
            let phi = cyclotomic(d);
            while let Some(q) = rest.div_by_monic(phi) {
                rest = q;
                *factors.entry(d).or_insert(0) += 1;
                deg -= totient(d);
                if deg < totient(d) {
                    break;
                }
            }
        }
        d += 1;
    }
    if deg != 0 {
        return None;
    }
    Some(Factored { c: rest.coeff(0), shift, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), &[-1, 1]);
        assert_eq!(cyclotomic(2), &[1, 1]);
        assert_eq!(cyclotomic(4), &[1, 0, 1]);
        assert_eq!(cyclotomic(6), &[1, -1, 1]);
        assert_eq!(cyclotomic(12), &[1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic(105).iter().filter(|&&c| c == -2).count(), 2);
    }

    #[test]
    fn totients() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(105), 48);
    }

    #[test]
    fn factor_round_trip() {
        // 3 s^-2 (s^8 - 1)
        let p = Poly::from_i64(-2, &[-3, 0, 0, 0, 0, 0, 0, 0, 3]);
        let f = factor(&p).unwrap();
        assert_eq!(f.c, BigInt::from(3));
        assert_eq!(f.shift, -2);
        assert_eq!(f.factors.keys().copied().collect::<Vec<_>>(), [1, 2, 4, 8]);
        let back = expand(&f.factors).scale(&f.c).shift(f.shift);
        assert_eq!(back, p);
    }

    #[test]
    fn non_cyclotomic_rejected() {
        assert!(factor(&Poly::from_i64(0, &[1, 1, 1, 1, 1, 1, 1, 2])).is_none());
        assert!(factor(&Poly::from_i64(0, &[2, 1])).is_none());
    }
}
