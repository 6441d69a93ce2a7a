//! Generic finite linear combinations of normal-ordered monomials over
//! [`Scalar`], with graded tensor products encoded as tuple keys.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::Scalar;

/// A normal-ordered monomial of a `Z_2`-graded algebra.
pub trait Monomial: Clone + Ord + fmt::Debug {
    fn unit() -> Self;
    /// Parity, 0 or 1.
    fn parity(&self) -> u32;
    /// Product of two monomials, normal ordered.
    fn mono_mul(&self, other: &Self) -> Elem<Self>;
    /// Truncation grading, additive under multiplication.
    fn degree(&self) -> u32 {
        0
    }
}

/// Finite sum `Σ c_M M`, zero coefficients never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem<M: Monomial> {
    terms: BTreeMap<M, Scalar>,
}

impl<M: Monomial> Default for Elem<M> {
    fn default() -> Self {
        Elem { terms: BTreeMap::new() }
    }
}

impl<M: Monomial> Elem<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mono(M::unit())
    }

    pub fn mono(m: M) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn term(m: M, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Elem { terms }
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(M::unit(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_assign(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Elem { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca.mul(cb);
                for (m, v) in ma.mono_mul(mb).terms {
                    out.add_term(m, v.mul(&c));
                }
            }
        }
        out
    }

    /// Product with every term of degree above `max_deg` dropped.
    pub fn mul_trunc(&self, other: &Self, max_deg: u32) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > max_deg {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree() > max_deg {
                    continue;
                }
                let c = ca.mul(cb);
                for (m, v) in ma.mono_mul(mb).terms {
                    out.add_term(m, v.mul(&c));
                }
            }
        }
        out
    }

    pub fn pow_trunc(&self, n: u32, max_deg: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul_trunc(self, max_deg);
        }
        acc
    }

    /// Drop every term of degree above `max_deg`.
    pub fn truncate(&self, max_deg: u32) -> Self {
        self.filter(|m| m.degree() <= max_deg)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Graded commutator `ab - (-1)^{p(a)p(b)} ba` for homogeneous inputs.
    pub fn supercommutator(&self, other: &Self) -> Self {
        let pa = self.parity().unwrap_or(0);
        let pb = other.parity().unwrap_or(0);
        let ab = self.mul(other);
        let ba = other.mul(self);
        if pa * pb == 1 {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// Common parity of all terms, `None` if mixed; zero is even.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.parity());
        match it.next() {
            None => Some(0),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }

    /// Keep only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&M) -> bool) -> Self {
        Elem { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Apply a linear map given on monomials.
    pub fn map_linear<N: Monomial>(&self, mut f: impl FnMut(&M) -> Elem<N>) -> Elem<N> {
        let mut out = Elem::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    /// Apply a fallible map on coefficients.
    pub fn try_map_coeffs<E>(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar, E>) -> Result<Self, E> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Largest absolute numeric coefficient at `q`.
    pub fn max_abs_at(&self, q: f64) -> crate::Result<f64> {
        let mut best = 0.0f64;
        for c in self.terms.values() {
            best = best.max(libm::fabs(c.eval(q)?));
        }
        Ok(best)
    }
}

impl<M: Monomial> fmt::Debug for Elem<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "[{c}] {m:?}")?;
        }
        Ok(())
    }
}

fn sign(e: u32) -> Scalar {
    Scalar::sign(e as i64)
}

fn outer2<A: Monomial, B: Monomial>(a: &Elem<A>, b: &Elem<B>, c: &Scalar, out: &mut Elem<(A, B)>) {
    for (ma, ca) in &a.terms {
        let cac = ca.mul(c);
        for (mb, cb) in &b.terms {
            out.add_term((ma.clone(), mb.clone()), cac.mul(cb));
        }
    }
}

impl<A: Monomial, B: Monomial> Monomial for (A, B) {
    fn unit() -> Self {
        (A::unit(), B::unit())
    }

    fn parity(&self) -> u32 {
        (self.0.parity() + self.1.parity()) % 2
    }

    fn degree(&self) -> u32 {
        self.0.degree() + self.1.degree()
    }

    fn mono_mul(&self, other: &Self) -> Elem<Self> {
        // (a⊗b)(c⊗d) = (-1)^{p(b)p(c)} ac⊗bd
        let s = sign(self.1.parity() * other.0.parity());
        let mut out = Elem::zero();
        outer2(&self.0.mono_mul(&other.0), &self.1.mono_mul(&other.1), &s, &mut out);
        out
    }
}

impl<A: Monomial, B: Monomial, C: Monomial> Monomial for (A, B, C) {
    fn unit() -> Self {
        (A::unit(), B::unit(), C::unit())
    }

    fn parity(&self) -> u32 {
        (self.0.parity() + self.1.parity() + self.2.parity()) % 2
    }

    fn degree(&self) -> u32 {
        self.0.degree() + self.1.degree() + self.2.degree()
    }

    fn mono_mul(&self, other: &Self) -> Elem<Self> {
        let e = self.1.parity() * other.0.parity() + self.2.parity() * (other.0.parity() + other.1.parity());
        let s = sign(e);
        let ab = self.0.mono_mul(&other.0);
        let bb = self.1.mono_mul(&other.1);
        let cb = self.2.mono_mul(&other.2);
        let mut out = Elem::zero();
        for (ma, ca) in &ab.terms {
            for (mb, cbv) in &bb.terms {
                let c1 = ca.mul(cbv).mul(&s);
                for (mc, cc) in &cb.terms {
                    out.add_term((ma.clone(), mb.clone(), mc.clone()), c1.mul(cc));
                }
            }
        }
        out
    }
}

/// `a ⊗ b`.
pub fn tensor<A: Monomial, B: Monomial>(a: &Elem<A>, b: &Elem<B>) -> Elem<(A, B)> {
    let mut out = Elem::zero();
    outer2(a, b, &Scalar::one(), &mut out);
    out
}

/// `a ⊗ b ⊗ c`.
pub fn tensor3<A: Monomial, B: Monomial, C: Monomial>(a: &Elem<A>, b: &Elem<B>, c: &Elem<C>) -> Elem<(A, B, C)> {
    let mut out = Elem::zero();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let c1 = ca.mul(cb);
            for (mc, cc) in &c.terms {
                out.add_term((ma.clone(), mb.clone(), mc.clone()), c1.mul(cc));
            }
        }
    }
    out
}

/// `(f ⊗ g)` applied to a two-fold tensor, with the graded sign
/// `(-1)^{p(g) p(a)}` on `a ⊗ b` when `g` is odd (`g_parity = 1`).
pub fn map_tensor2<A, B, C, D>(
    t: &Elem<(A, B)>,
    mut f: impl FnMut(&A) -> Elem<C>,
    mut g: impl FnMut(&B) -> Elem<D>,
    g_parity: u32,
) -> Elem<(C, D)>
where
    A: Monomial,
    B: Monomial,
    C: Monomial,
    D: Monomial,
{
    let mut out = Elem::zero();
    for ((a, b), c) in &t.terms {
        let s = sign(g_parity * a.parity()).mul(c);
        outer2(&f(a), &g(b), &s, &mut out);
    }
    out
}

/// Multiply the two factors of a tensor in the same algebra.
pub fn mu<M: Monomial>(t: &Elem<(M, M)>) -> Elem<M> {
    let mut out = Elem::zero();
    for ((a, b), c) in &t.terms {
        out.add_scaled(&a.mono_mul(b), c);
    }
    out
}

/// Graded flip `σ(a⊗b) = (-1)^{p(a)p(b)} b⊗a`.
pub fn flip<A: Monomial, B: Monomial>(t: &Elem<(A, B)>) -> Elem<(B, A)> {
    let mut out = Elem::zero();
    for ((a, b), c) in &t.terms {
        out.add_term((b.clone(), a.clone()), c.mul(&sign(a.parity() * b.parity())));
    }
    out
}

/// Collect the monomials of an element into a vector (sorted).
pub fn monomials<M: Monomial>(e: &Elem<M>) -> Vec<M> {
    e.terms.keys().cloned().collect()
}
