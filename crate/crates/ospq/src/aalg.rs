//! The dual quantum supergroup algebra `A = OSp_q(1/2)` in the normal order
//! `x^a z^b k^m y^c`, `k = e^{z/2}`, with truncated coalgebra maps.
//!
//! Truncation is by the total `x, y` degree of a (tensor) monomial; the
//! generator series are exact in every retained degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Elem, Monomial};
use crate::error::{Error, Result};
use crate::scalar::brackets::{binomial, bra, bra_fact, kbr_fact, one_plus_q, one_plus_qinv, q_minus_qinv, qnum, s_plus_sinv};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AMono {
    pub a: u32,
    pub b: u32,
    pub m: i32,
    pub c: u32,
}

impl AMono {
    pub const fn new(a: u32, b: u32, m: i32, c: u32) -> Self {
        AMono { a, b, m, c }
    }
}

impl fmt::Debug for AMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} z^{} k^{} y^{}", self.a, self.b, self.m, self.c)
    }
}

pub type AElement = Elem<AMono>;
pub type ATensor = Elem<(AMono, AMono)>;

/// `(z + α)^b` as coefficients of `z^i`.
fn z_shift(alpha: &Scalar, b: u32) -> Vec<Scalar> {
    (0..=b).map(|i| binomial(b, i).mul(&alpha.pow(b - i))).collect()
}

impl Monomial for AMono {
    fn unit() -> Self {
        AMono::new(0, 0, 0, 0)
    }

    fn parity(&self) -> u32 {
        (self.a + self.c) % 2
    }

    fn degree(&self) -> u32 {
        self.a + self.c
    }

    fn mono_mul(&self, o: &Self) -> AElement {
        // (-1)^{c a'} q^{m a' - c m'} x^{a+a'} (z + 2a'Λ)^b (z - 2cΛ)^{b'} k^{m+m'} y^{c+c'}
        let sg = Scalar::sign((self.c * o.a) as i64);
        let qp = Scalar::q_pow(self.m * o.a as i32 - self.c as i32 * o.m);
        let lead = sg.mul(&qp);
        let p1 = z_shift(&Scalar::lambda().scale_int(2 * o.a as i64), self.b);
        let p2 = z_shift(&Scalar::lambda().scale_int(-2 * self.c as i64), o.b);
        let mut out = AElement::zero();
        for (i, u) in p1.iter().enumerate() {
            for (j, v) in p2.iter().enumerate() {
                let mono = AMono::new(self.a + o.a, (i + j) as u32, self.m + o.m, self.c + o.c);
                out.add_term(mono, u.mul(v).mul(&lead));
            }
        }
        out
    }
}

pub fn x() -> AElement {
    AElement::mono(AMono::new(1, 0, 0, 0))
}

pub fn y() -> AElement {
    AElement::mono(AMono::new(0, 0, 0, 1))
}

pub fn z() -> AElement {
    AElement::mono(AMono::new(0, 1, 0, 0))
}

/// `k^j = e^{jz/2}`.
pub fn k(j: i32) -> AElement {
    AElement::mono(AMono::new(0, 0, j, 0))
}

fn rat(n: i64, d: BigInt) -> BigRational {
    BigRational::new(BigInt::from(n), d)
}

fn factorial_int(r: u32) -> BigInt {
    (1..=r).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Dual basis element `e^{nrs} = x^n/{n}! · (z + (n-s)Λ)^r/r! · y^s/⟨s⟩!`.
pub fn dual_basis(n: i64, r: i64, s: i64) -> Result<AElement> {
    if n < 0 || r < 0 || s < 0 {
        return Err(Error::NegativeArgument(n.min(r).min(s)));
    }
    let pre = kbr_fact(n).mul(&bra_fact(s)).inv()?.scale_rational(&rat(1, factorial_int(r as u32)));
    let alpha = Scalar::lambda().scale_int(n - s);
    let mut out = AElement::zero();
    for (i, c) in z_shift(&alpha, r as u32).into_iter().enumerate() {
        out.add_term(AMono::new(n as u32, i as u32, 0, s as u32), c.mul(&pre));
    }
    Ok(out)
}

/// Expansion of a `k`-free element in the dual basis.
pub fn to_dual_basis(el: &AElement) -> Result<BTreeMap<(u32, u32, u32), Scalar>> {
    let mut out: BTreeMap<(u32, u32, u32), Scalar> = BTreeMap::new();
    for (mono, c) in el.terms() {
        if mono.m != 0 {
            return Err(Error::NotInDualSpan);
        }
        let (n, r, s) = (mono.a, mono.b, mono.c);
        // z^r = Σ_j C(r,j) j! (-(n-s)Λ)^{r-j} · w^j/j!, w = z + (n-s)Λ
        let pre = kbr_fact(n as i64).mul(&bra_fact(s as i64)).mul(c);
        let alpha = Scalar::lambda().scale_int(-(n as i64 - s as i64));
        for j in 0..=r {
            let v = binomial(r, j)
                .scale_rational(&BigRational::from_integer(factorial_int(j)))
                .mul(&alpha.pow(r - j))
                .mul(&pre);
            let slot = out.entry((n, j, s)).or_insert_with(Scalar::zero);
            slot.add_assign(&v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// `ε` on `A`: `ε(x) = ε(y) = ε(z) = 0`, `ε(k) = 1`.
pub fn counit(el: &AElement) -> Scalar {
    let mut acc = Scalar::zero();
    for (mono, c) in el.terms() {
        if mono.a == 0 && mono.b == 0 && mono.c == 0 {
            acc.add_assign(c);
        }
    }
    acc
}

/// `(-1)^{m(m+1)/2}/⟨m⟩ · ((q^{1/2} + q^{-1/2})/(q - q^{-1}))^{m-1}`, `m >= 1`.
pub fn kappa(m: u32) -> Scalar {
    let ratio = s_plus_sinv().div(&q_minus_qinv()).expect("nonzero");
    let mi = m as i64;
    Scalar::sign(mi * (mi + 1) / 2).mul(&ratio.pow(m - 1)).div(&bra(mi)).expect("nonzero")
}

/// `4Λ/(q - q^{-1})`.
fn four_lambda_over() -> Scalar {
    Scalar::lambda().scale_int(4).div(&q_minus_qinv()).expect("nonzero")
}

/// The succinct generator series in their printed form, truncated at total
/// `x, y` degree `n`: `Δ(y)` with sign `(-1)^{m(m-1)/2}`, and `S(x)`,
/// `S(z)`, `S(y)`.
pub struct PrintedSeries {
    pub delta_y: ATensor,
    pub sx: AElement,
    pub sz: AElement,
    pub sy: AElement,
}

pub fn printed_series(n: u32) -> PrintedSeries {
    let one = AMono::unit();
    let rx = one_plus_qinv().div(&q_minus_qinv()).expect("nonzero");
    let ry = one_plus_q().div(&q_minus_qinv()).expect("nonzero");
    let mut delta_y = ATensor::mono(t2(one, AMono::new(0, 0, 0, 1)));
    let mut sx = AElement::zero();
    let mut sy = AElement::zero();
    let mut sz = z().neg();
    let mut m = 0u32;
    while 2 * m < n {
        let mi = m as i64;
        let sg = Scalar::sign(mi * (mi - 1) / 2);
        delta_y.add_term(t2(AMono::new(0, 0, 0, m + 1), AMono::new(m, 0, 1, 0)), sg.mul(&ry.pow(m)));
        let cx = sg.mul(&Scalar::q_pow(-1)).mul(&rx.pow(m)).neg();
        sx.add_term(AMono::new(m + 1, 0, -(m as i32 + 1), m), cx);
        let cy = Scalar::sign(mi * (mi + 1) / 2).mul(&Scalar::q_pow(1)).mul(&ry.pow(m)).neg();
        sy.add_term(AMono::new(m, 0, -(m as i32 + 1), m + 1), cy);
        m += 1;
    }
    let fl = four_lambda_over();
    let mut m = 1u32;
    while 2 * m <= n {
        sz.add_term(AMono::new(m, 0, -(m as i32), m), fl.mul(&kappa(m)));
        m += 1;
    }
    PrintedSeries { delta_y, sx, sz, sy }
}

/// Truncated Hopf structure of `A`: coproduct, counit and antipode exact in
/// every total `x, y` degree up to `n`.
pub struct Coalgebra {
    n: u32,
    dx: ATensor,
    dy: ATensor,
    dz: ATensor,
    dk: BTreeMap<i32, ATensor>,
    sx: AElement,
    sy: AElement,
    sz: AElement,
    sk: BTreeMap<i32, AElement>,
    mono_cache: BTreeMap<AMono, ATensor>,
    anti_cache: BTreeMap<AMono, AElement>,
}

fn t2(a: AMono, b: AMono) -> (AMono, AMono) {
    (a, b)
}

impl Coalgebra {
    pub fn new(n: u32) -> Self {
        let one = AMono::unit();
        let mut dx = ATensor::term(t2(AMono::new(1, 0, 0, 0), one), Scalar::one());
        let mut dy = ATensor::term(t2(one, AMono::new(0, 0, 0, 1)), Scalar::one());
        let mut dz = ATensor::zero();
        dz.add_term(t2(AMono::new(0, 1, 0, 0), one), Scalar::one());
        dz.add_term(t2(one, AMono::new(0, 1, 0, 0)), Scalar::one());
        let rx = one_plus_qinv().div(&q_minus_qinv()).expect("nonzero");
        let ry = one_plus_q().div(&q_minus_qinv()).expect("nonzero");
        let mut m = 0u32;
        while 2 * m < n {
            let mi = m as i64;
            let sx = Scalar::sign(mi * (mi - 1) / 2);
            let sy = Scalar::sign(mi * (mi + 1) / 2);
            dx.add_term(t2(AMono::new(0, 0, 1, m), AMono::new(m + 1, 0, 0, 0)), sx.mul(&rx.pow(m)));
            dy.add_term(t2(AMono::new(0, 0, 0, m + 1), AMono::new(m, 0, 1, 0)), sy.mul(&ry.pow(m)));
            m += 1;
        }
        let fl = four_lambda_over();
        let mut m = 1u32;
        while 2 * m <= n {
            dz.add_term(t2(AMono::new(0, 0, 0, m), AMono::new(m, 0, 0, 0)), fl.mul(&kappa(m)));
            m += 1;
        }
        let mut co = Coalgebra {
            n,
            dx,
            dy,
            dz,
            dk: BTreeMap::new(),
            sx: AElement::zero(),
            sy: AElement::zero(),
            sz: AElement::zero(),
            sk: BTreeMap::new(),
            mono_cache: BTreeMap::new(),
            anti_cache: BTreeMap::new(),
        };
        co.solve_antipodes();
        co
    }

    /// `S(y^p)` for the current `S(y)`.
    fn s_y_pow(&self, p: u32) -> AElement {
        let sg = Scalar::sign((p as i64) * (p as i64 - 1) / 2);
        self.sy.pow_trunc(p, self.n).scale(&sg)
    }

    /// Solve `μ(S ⊗ id)Δ = ε` on `y`, `x` and `z`. `S(y)` is a fixed point
    /// gaining two degrees per step; `S(x)` and `S(z)` then follow directly.
    fn solve_antipodes(&mut self) {
        let n = self.n;
        let kinv = k(-1);
        // y + S(y) k + Σ_{m>=1} d_m S(y^{m+1}) x^m k = 0
        let higher: Vec<(u32, Scalar)> = self
            .dy
            .terms()
            .filter(|((l, _), _)| l.c >= 2)
            .map(|((l, _), c)| (l.c, c.clone()))
            .collect();
        let base = y().mul(&kinv).neg();
        self.sy = base.clone();
        for _ in 0..=n / 2 {
            let mut next = base.clone();
            for (p, c) in &higher {
                let term = self.s_y_pow(*p).mul_trunc(&AElement::mono(AMono::new(p - 1, 0, 0, 0)), n);
                next.add_scaled(&term, &c.neg());
            }
            let next = next.truncate(n);
            if next == self.sy {
                break;
            }
            self.sy = next;
        }
        // S(x) = -Σ_m c_m S(k y^m) x^{m+1}
        let mut sx = AElement::zero();
        let dx: Vec<((AMono, AMono), Scalar)> = self.dx.terms().map(|(m, c)| (*m, c.clone())).collect();
        for ((l, r), c) in dx {
            if l.m == 0 {
                continue;
            }
            let sl = self.antipode_mono(&l);
            let term = sl.mul_trunc(&AElement::mono(r), n);
            sx.add_scaled(&term, &c.neg());
        }
        self.sx = sx;
        // S(z) = -z - Σ_m f_m S(y^m) x^m
        let mut sz = z().neg();
        let dz: Vec<((AMono, AMono), Scalar)> = self.dz.terms().map(|(m, c)| (*m, c.clone())).collect();
        for ((l, r), c) in dz {
            if l.c == 0 {
                continue;
            }
            let term = self.s_y_pow(l.c).mul_trunc(&AElement::mono(r), n);
            sz.add_scaled(&term, &c.neg());
        }
        self.sz = sz;
        self.anti_cache.clear();
    }

    pub fn antipode_x(&self) -> &AElement {
        &self.sx
    }

    pub fn antipode_y(&self) -> &AElement {
        &self.sy
    }

    pub fn antipode_z(&self) -> &AElement {
        &self.sz
    }

    pub fn trunc(&self) -> u32 {
        self.n
    }

    pub fn delta_x(&self) -> &ATensor {
        &self.dx
    }

    pub fn delta_y(&self) -> &ATensor {
        &self.dy
    }

    pub fn delta_z(&self) -> &ATensor {
        &self.dz
    }

    /// `exp(Σ_m κ_m [jm]/m · y^m ⊗ x^m)` truncated.
    fn k_series(&self, j: i32) -> ATensor {
        let mut gen = ATensor::zero();
        let mut m = 1u32;
        while 2 * m <= self.n {
            let c = kappa(m).mul(&qnum(j as i64 * m as i64)).mul(&Scalar::frac(1, m as i64));
            gen.add_term(t2(AMono::new(0, 0, 0, m), AMono::new(m, 0, 0, 0)), c);
            m += 1;
        }
        let mut out = ATensor::one();
        let mut p = ATensor::one();
        let mut t = 1u32;
        while 2 * t <= self.n {
            p = p.mul_trunc(&gen, self.n).scale(&Scalar::frac(1, t as i64));
            out.add_assign(&p);
            t += 1;
        }
        out
    }

    /// `Δ(k^j) = (k^j ⊗ 1) exp(Σ_m κ_m [jm]/m · y^m ⊗ x^m) (1 ⊗ k^j)`.
    pub fn delta_k(&mut self, j: i32) -> ATensor {
        if let Some(t) = self.dk.get(&j) {
            return t.clone();
        }
        let left = ATensor::mono(t2(AMono::new(0, 0, j, 0), AMono::unit()));
        let right = ATensor::mono(t2(AMono::unit(), AMono::new(0, 0, j, 0)));
        let t = left.mul(&self.k_series(j)).mul(&right);
        self.dk.insert(j, t.clone());
        t
    }

    /// Truncated coproduct of a monomial.
    pub fn delta_mono(&mut self, mono: &AMono) -> ATensor {
        if let Some(t) = self.mono_cache.get(mono) {
            return t.clone();
        }
        let n = self.n;
        let mut acc = ATensor::one();
        for _ in 0..mono.a {
            acc = acc.mul_trunc(&self.dx, n);
        }
        for _ in 0..mono.b {
            acc = acc.mul_trunc(&self.dz, n);
        }
        if mono.m != 0 {
            let dk = self.delta_k(mono.m);
            acc = acc.mul_trunc(&dk, n);
        }
        for _ in 0..mono.c {
            acc = acc.mul_trunc(&self.dy, n);
        }
        self.mono_cache.insert(*mono, acc.clone());
        acc
    }

    pub fn delta(&mut self, el: &AElement) -> ATensor {
        let mut out = ATensor::zero();
        for (mono, c) in el.terms() {
            let d = self.delta_mono(mono);
            out.add_scaled(&d, c);
        }
        out.truncate(self.n)
    }

    /// `S(k^j)` from the antipode axiom `Σ_n E_n S(y^n) S(k^j) x^n = k^{-j}`,
    /// where `Δ(k^j) = Σ_n E_n k^j y^n ⊗ x^n k^j`, solved by fixed-point
    /// iteration (each step gains two degrees).
    pub fn antipode_k(&mut self, j: i32) -> AElement {
        if let Some(s) = self.sk.get(&j) {
            return s.clone();
        }
        let n = self.n;
        let series = self.k_series(j);
        let mut e_n: Vec<(u32, Scalar)> = Vec::new();
        for ((l, r), c) in series.terms() {
            if l.c >= 1 {
                debug_assert!(l.a == 0 && l.b == 0 && r.a == l.c);
                e_n.push((l.c, c.clone()));
            }
        }
        let mut s_y_pows: Vec<AElement> = Vec::new();
        for (p, _) in &e_n {
            let sg = Scalar::sign((*p as i64) * (*p as i64 - 1) / 2);
            s_y_pows.push(self.sy.pow_trunc(*p, n).scale(&sg));
        }
        let target = k(-j);
        let mut sigma = target.clone();
        for _ in 0..=n / 2 {
            let mut next = target.clone();
            for ((p, c), sy) in e_n.iter().zip(&s_y_pows) {
                let term = sy.mul_trunc(&sigma, n).mul_trunc(&AElement::mono(AMono::new(*p, 0, 0, 0)), n);
                next.add_scaled(&term, &c.neg());
            }
            if next == sigma {
                break;
            }
            sigma = next;
        }
        self.sk.insert(j, sigma.clone());
        sigma
    }

    /// Truncated antipode of a monomial (graded anti-automorphism).
    pub fn antipode_mono(&mut self, mono: &AMono) -> AElement {
        if let Some(s) = self.anti_cache.get(mono) {
            return s.clone();
        }
        let n = self.n;
        let odd = (mono.a + mono.c) as i64;
        let mut acc = AElement::scalar(Scalar::sign(odd * (odd - 1) / 2));
        for _ in 0..mono.c {
            acc = acc.mul_trunc(&self.sy, n);
        }
        if mono.m != 0 {
            let sk = self.antipode_k(mono.m);
            acc = acc.mul_trunc(&sk, n);
        }
        for _ in 0..mono.b {
            acc = acc.mul_trunc(&self.sz, n);
        }
        for _ in 0..mono.a {
            acc = acc.mul_trunc(&self.sx, n);
        }
        self.anti_cache.insert(*mono, acc.clone());
        acc
    }

    pub fn antipode(&mut self, el: &AElement) -> AElement {
        let mut out = AElement::zero();
        for (mono, c) in el.terms() {
            let s = self.antipode_mono(mono);
            out.add_scaled(&s, c);
        }
        out.truncate(self.n)
    }

    /// `(Δ ⊗ id)` on a two-fold tensor.
    pub fn delta_left(&mut self, t: &ATensor) -> Elem<(AMono, AMono, AMono)> {
        let mut out = Elem::zero();
        for ((a, b), c) in t.terms() {
            let d = self.delta_mono(a);
            for ((a1, a2), v) in d.terms() {
                if a1.degree() + a2.degree() + b.degree() <= self.n {
                    out.add_term((*a1, *a2, *b), v.mul(c));
                }
            }
        }
        out
    }

    /// `(id ⊗ Δ)` on a two-fold tensor.
    pub fn delta_right(&mut self, t: &ATensor) -> Elem<(AMono, AMono, AMono)> {
        let mut out = Elem::zero();
        for ((a, b), c) in t.terms() {
            let d = self.delta_mono(b);
            for ((b1, b2), v) in d.terms() {
                if a.degree() + b1.degree() + b2.degree() <= self.n {
                    out.add_term((*a, *b1, *b2), v.mul(c));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tensor;

    #[test]
    fn relations() {
        assert_eq!(y().mul(&x()), x().mul(&y()).neg());
        assert_eq!(z().mul(&x()), x().mul(&z()).add(&x().scale(&Scalar::lambda().scale_int(2))));
        assert_eq!(z().mul(&y()), y().mul(&z()).add(&y().scale(&Scalar::lambda().scale_int(2))));
        assert_eq!(k(1).mul(&x()), x().mul(&k(1)).scale(&Scalar::q_pow(1)));
        assert_eq!(k(1).mul(&y()), y().mul(&k(1)).scale(&Scalar::q_pow(1)));
        assert_eq!(k(1).mul(&z()), z().mul(&k(1)));
    }

    #[test]
    fn k_matches_z_series() {
        // k x k^{-1} = q x against Σ_{n<=8} (z/2)^n/n! · x · Σ (-z/2)^n/n!, compared on Λ-degree
        let half_z = z().scale(&Scalar::frac(1, 2));
        let mut ek = AElement::zero();
        let mut eki = AElement::zero();
        let mut p = AElement::one();
        let mut pi = AElement::one();
        let mut fact = 1i64;
        for n in 0..=8i64 {
            if n > 0 {
                fact *= n;
                p = p.mul(&half_z);
                pi = pi.mul(&half_z.neg());
            }
            ek.add_assign(&p.scale(&Scalar::frac(1, fact)));
            eki.add_assign(&pi.scale(&Scalar::frac(1, fact)));
        }
        let conj = ek.mul(&x()).mul(&eki);
        // coefficient of x Λ^i must be 1/i! for i <= 8 (q = e^Λ)
        let c = conj.coeff(&AMono::new(1, 0, 0, 0));
        for i in 0..=4u32 {
            let li = c.lambda_coeff(i);
            let f: i64 = (1..=i as i64).product();
            assert_eq!(li, Scalar::frac(1, f), "Λ^{i}");
        }
    }

    #[test]
    fn dual_basis_examples() {
        assert_eq!(dual_basis(1, 0, 0).unwrap(), x());
        assert_eq!(dual_basis(0, 1, 1).unwrap(), z().sub(&AElement::scalar(Scalar::lambda())).mul(&y()));
        let back = to_dual_basis(&dual_basis(2, 1, 1).unwrap()).unwrap();
        assert_eq!(back.len(), 1);
        assert!(back[&(2, 1, 1)].is_one());
        let xz = to_dual_basis(&x().mul(&z())).unwrap();
        assert!(xz[&(1, 1, 0)].is_one());
        assert_eq!(xz[&(1, 0, 0)], Scalar::lambda().neg());
        assert_eq!(to_dual_basis(&k(1)), Err(Error::NotInDualSpan));
    }

    #[test]
    fn coproduct_low_degree() {
        let mut co = Coalgebra::new(1);
        assert_eq!(co.delta(&z()), tensor(&z(), &AElement::one()).add(&tensor(&AElement::one(), &z())));
        assert_eq!(co.delta(&x()), tensor(&x(), &AElement::one()).add(&tensor(&k(1), &x())));
        assert_eq!(co.delta(&AElement::one()), ATensor::one());
        let mut co0 = Coalgebra::new(0);
        assert_eq!(co0.antipode(&z()), z().neg());
        assert_eq!(co.antipode(&x()), x().mul(&k(-1)).scale(&Scalar::q_pow(-1).neg()));
        assert!(counit(&k(1)).is_one());
    }
}
