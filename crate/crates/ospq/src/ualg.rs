//! The quantum superalgebra `U = U_q[osp(1/2)]` in the normal order
//! `V₊^a H^b g^m V₋^d`, `g = q^H`.

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Elem, Monomial};
use crate::error::{Error, Result};
use crate::scalar::brackets::{binomial, q_minus_qinv, sbinom};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UMono {
    pub a: u32,
    pub b: u32,
    pub m: i32,
    pub d: u32,
}

impl UMono {
    pub const fn new(a: u32, b: u32, m: i32, d: u32) -> Self {
        UMono { a, b, m, d }
    }

    /// `E_{klm} = V₊^k H^l V₋^m`.
    pub const fn e(k: u32, l: u32, m: u32) -> Self {
        UMono { a: k, b: l, m: 0, d: m }
    }
}

impl fmt::Debug for UMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V+^{} H^{} g^{} V-^{}", self.a, self.b, self.m, self.d)
    }
}

pub type UElement = Elem<UMono>;

fn half() -> Scalar {
    Scalar::frac(1, 2)
}

/// `(H + c)^b` applied in place of `H^b` on the monomial `V₊^a H^b g^m V₋^d`.
fn shift_h(out: &mut UElement, base: UMono, c: &Scalar, coef: &Scalar) {
    for i in 0..=base.b {
        let k = binomial(base.b, i).mul(&c.pow(base.b - i)).mul(coef);
        out.add_term(UMono { b: i, ..base }, k);
    }
}

/// Right multiplication of a monomial by `V₊`.
fn mul_vplus(x: UMono) -> UElement {
    let mut out = UElement::zero();
    // s^m (-1)^d V₊^{a+1} (H + 1/2)^b g^m V₋^d
    let lead = Scalar::s_pow(x.m).mul(&Scalar::sign(x.d as i64));
    shift_h(&mut out, UMono { a: x.a + 1, ..x }, &half(), &lead);
    if x.d > 0 {
        // - Σ_i (-1)^i [2H](s^{d-1-i} g) V₋^{d-1}
        let qq = q_minus_qinv().inv().expect("nonzero");
        for i in 0..x.d {
            let j = (x.d - 1 - i) as i32;
            let sg = Scalar::sign(i as i64 + 1).mul(&qq);
            let dm = x.d - 1;
            out.add_term(UMono { m: x.m + 2, d: dm, ..x }, Scalar::s_pow(2 * j).mul(&sg));
            out.add_term(UMono { m: x.m - 2, d: dm, ..x }, Scalar::s_pow(-2 * j).mul(&sg).neg());
        }
    }
    out
}

/// Right multiplication of a monomial by `H`.
fn mul_h(x: UMono) -> UElement {
    let mut out = UElement::term(UMono { b: x.b + 1, ..x }, Scalar::one());
    if x.d > 0 {
        out.add_term(x, Scalar::frac(x.d as i64, 2));
    }
    out
}

/// Right multiplication of a monomial by `g^j`.
fn mul_g(x: UMono, j: i32) -> UElement {
    UElement::term(UMono { m: x.m + j, ..x }, Scalar::s_pow(x.d as i32 * j))
}

fn apply(e: &UElement, f: impl Fn(UMono) -> UElement) -> UElement {
    let mut out = UElement::zero();
    for (m, c) in e.terms() {
        out.add_scaled(&f(*m), c);
    }
    out
}

impl Monomial for UMono {
    fn unit() -> Self {
        UMono::new(0, 0, 0, 0)
    }

    fn parity(&self) -> u32 {
        (self.a + self.d) % 2
    }

    fn mono_mul(&self, o: &Self) -> UElement {
        let mut acc = UElement::mono(*self);
        for _ in 0..o.a {
            acc = apply(&acc, mul_vplus);
        }
        for _ in 0..o.b {
            acc = apply(&acc, mul_h);
        }
        if o.m != 0 {
            acc = apply(&acc, |x| mul_g(x, o.m));
        }
        if o.d > 0 {
            acc = apply(&acc, |x| UElement::mono(UMono { d: x.d + o.d, ..x }));
        }
        acc
    }
}

pub fn vplus() -> UElement {
    UElement::mono(UMono::new(1, 0, 0, 0))
}

pub fn vminus() -> UElement {
    UElement::mono(UMono::new(0, 0, 0, 1))
}

pub fn h() -> UElement {
    UElement::mono(UMono::new(0, 1, 0, 0))
}

/// `g^j = q^{jH}`.
pub fn g(j: i32) -> UElement {
    UElement::mono(UMono::new(0, 0, j, 0))
}

/// `⟦2H⟧ = (g² - g⁻²)/(q - q⁻¹)`.
pub fn bracket_2h() -> UElement {
    let c = q_minus_qinv().inv().expect("nonzero");
    g(2).sub(&g(-2)).scale(&c)
}

pub type UTensor = Elem<(UMono, UMono)>;

fn delta_gen_vplus() -> UTensor {
    let mut t = UTensor::zero();
    t.add_term((UMono::new(1, 0, 0, 0), UMono::new(0, 0, -1, 0)), Scalar::one());
    t.add_term((UMono::new(0, 0, 1, 0), UMono::new(1, 0, 0, 0)), Scalar::one());
    t
}

fn delta_gen_vminus() -> UTensor {
    let mut t = UTensor::zero();
    t.add_term((UMono::new(0, 0, 0, 1), UMono::new(0, 0, -1, 0)), Scalar::one());
    t.add_term((UMono::new(0, 0, 1, 0), UMono::new(0, 0, 0, 1)), Scalar::one());
    t
}

fn delta_gen_h() -> UTensor {
    let mut t = UTensor::zero();
    t.add_term((UMono::new(0, 1, 0, 0), UMono::unit()), Scalar::one());
    t.add_term((UMono::unit(), UMono::new(0, 1, 0, 0)), Scalar::one());
    t
}

/// Coproduct of a single monomial, as a product of generator coproducts.
pub fn coproduct_mono(x: &UMono) -> UTensor {
    let mut acc = UTensor::one();
    if x.a > 0 {
        acc = acc.mul(&delta_gen_vplus().pow(x.a));
    }
    if x.b > 0 {
        acc = acc.mul(&delta_gen_h().pow(x.b));
    }
    if x.m != 0 {
        acc = acc.mul(&UTensor::mono((UMono::new(0, 0, x.m, 0), UMono::new(0, 0, x.m, 0))));
    }
    if x.d > 0 {
        acc = acc.mul(&delta_gen_vminus().pow(x.d));
    }
    acc
}

/// `Δ(u)` with the graded tensor product.
pub fn coproduct(u: &UElement) -> UTensor {
    u.map_linear(coproduct_mono)
}

/// Memoizing wrapper around [`coproduct_mono`].
#[derive(Default)]
pub struct CoproductCache {
    memo: BTreeMap<UMono, UTensor>,
}

impl CoproductCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, x: &UMono) -> &UTensor {
        self.memo.entry(*x).or_insert_with(|| coproduct_mono(x))
    }
}

/// Counit.
pub fn counit(u: &UElement) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in u.terms() {
        if m.a == 0 && m.b == 0 && m.d == 0 {
            acc.add_assign(c);
        }
    }
    acc
}

/// Antipode on a monomial: the graded anti-automorphism with `S(H) = -H`,
/// `S(V±) = -q^{∓1/2} V±`, `S(g) = g⁻¹`.
pub fn antipode_mono(x: &UMono) -> UElement {
    let s_vp = vplus().scale(&Scalar::s_pow(-1).neg());
    let s_vm = vminus().scale(&Scalar::s_pow(1).neg());
    let k = x.a + x.d;
    let sg = Scalar::sign((k as i64) * (k as i64 - 1) / 2);
    let out = s_vm
        .pow(x.d)
        .mul(&g(-x.m))
        .mul(&h().neg().pow(x.b))
        .mul(&s_vp.pow(x.a));
    out.scale(&sg)
}

pub fn antipode(u: &UElement) -> UElement {
    u.map_linear(antipode_mono)
}

/// Coefficients of `E_{prt}` after expanding every `g^m = Σ (mΛ)^i H^i / i!`
/// up to `H`-degree `max_h`.
pub fn e_basis_expand(u: &UElement, max_h: u32) -> BTreeMap<(u32, u32, u32), Scalar> {
    let mut out: BTreeMap<(u32, u32, u32), Scalar> = BTreeMap::new();
    for (x, c) in u.terms() {
        let ml = Scalar::lambda().scale_int(x.m as i64);
        let mut pw = Scalar::one();
        let mut fact = BigInt::from(1);
        for i in 0..=max_h.saturating_sub(x.b) {
            if x.b + i > max_h {
                break;
            }
            if i > 0 {
                pw = pw.mul(&ml);
                fact *= i;
            }
            if pw.is_zero() {
                break;
            }
            let v = pw.scale_rational(&BigRational::new(1.into(), fact.clone())).mul(c);
            let key = (x.a, x.b + i, x.d);
            let slot = out.entry(key).or_insert_with(Scalar::zero);
            slot.add_assign(&v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Coefficient of `E_{prt}` in `E_{klm} E_{k'l'm'}`.
pub fn e_basis_coeff(lhs: (u32, u32, u32), rhs: (u32, u32, u32), target: (u32, u32, u32)) -> Scalar {
    let u = UElement::mono(UMono::e(lhs.0, lhs.1, lhs.2)).mul(&UElement::mono(UMono::e(rhs.0, rhs.1, rhs.2)));
    e_basis_expand(&u, target.1).remove(&target).unwrap_or_else(Scalar::zero)
}

/// Closed-form triple sum for `Δ(E_{klm})` built from super-binomials.
pub fn expand_delta_e(k: i64, l: i64, m: i64) -> Result<UTensor> {
    if k < 0 || l < 0 || m < 0 {
        return Err(Error::NegativeArgument(k.min(l).min(m)));
    }
    let mut out = UTensor::zero();
    for a in 0..=k {
        let ba = Scalar::from_ratfunc(sbinom(k, a)?);
        for b in 0..=l {
            let bb = binomial(l as u32, b as u32);
            for c in 0..=m {
                let bc = Scalar::from_ratfunc(sbinom(m, c)?);
                let sg = Scalar::sign((m - c) * (a + c));
                // q^{-a(k-a)/2 - c(m-c)/2} = s^{-a(k-a) - c(m-c)}
                let qp = Scalar::s_pow((-a * (k - a) - c * (m - c)) as i32);
                let coef = ba.mul(&bb).mul(&bc).mul(&sg).mul(&qp);
                let left = UMono::new((k - a) as u32, (l - b) as u32, (a + c) as i32, (m - c) as u32);
                let right = UMono::new(a as u32, b as u32, -((k + m - a - c) as i32), c as u32);
                out.add_term((left, right), coef);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{mu, tensor};

    #[test]
    fn defining_relations() {
        let vp = vplus();
        let vm = vminus();
        assert_eq!(vm.mul(&vp), vp.mul(&vm).neg().sub(&bracket_2h()));
        assert_eq!(h().mul(&vp), vp.mul(&h()).add(&vp.scale(&half())));
        assert_eq!(h().mul(&vm), vm.mul(&h()).sub(&vm.scale(&half())));
        assert_eq!(vp.mul(&vp), UElement::mono(UMono::new(2, 0, 0, 0)));
        assert_eq!(g(1).mul(&vp), vp.mul(&g(1)).scale(&Scalar::s_pow(1)));
        assert_eq!(g(1).mul(&vm), vm.mul(&g(1)).scale(&Scalar::s_pow(-1)));
        assert!(g(3).mul(&g(-3)).sub(&UElement::one()).is_zero());
    }

    #[test]
    fn associativity_small() {
        let xs = [UMono::new(1, 1, 0, 1), UMono::new(0, 0, 1, 2), UMono::new(2, 0, -1, 1), UMono::new(0, 2, 0, 0)];
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    let (a, b, c) = (UElement::mono(*a), UElement::mono(*b), UElement::mono(*c));
                    assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                }
            }
        }
    }

    #[test]
    fn coproduct_generators() {
        let dvp = coproduct(&vplus());
        assert_eq!(dvp, tensor(&vplus(), &g(-1)).add(&tensor(&g(1), &vplus())));
        assert_eq!(coproduct(&UElement::one()), tensor(&UElement::one(), &UElement::one()));
    }

    #[test]
    fn antipode_axiom_generators() {
        for u in [vplus(), vminus(), h(), g(1), g(-2)] {
            let lhs = mu(&crate::algebra::map_tensor2(&coproduct(&u), antipode_mono, |x| UElement::mono(*x), 0));
            assert_eq!(lhs, UElement::scalar(counit(&u)), "{u:?}");
        }
        assert_eq!(antipode(&vplus()), vplus().scale(&Scalar::s_pow(-1).neg()));
    }

    #[test]
    fn expand_delta_matches_generic() {
        for k in 0..3 {
            for l in 0..2 {
                for m in 0..3 {
                    let lhs = expand_delta_e(k, l, m).unwrap();
                    let rhs = coproduct_mono(&UMono::e(k as u32, l as u32, m as u32));
                    assert_eq!(lhs, rhs, "({k},{l},{m})");
                }
            }
        }
    }

    #[test]
    fn e_basis_examples() {
        assert!(e_basis_coeff((1, 0, 0), (0, 1, 0), (1, 1, 0)).is_one());
        assert_eq!(e_basis_coeff((0, 1, 0), (1, 0, 0), (1, 0, 0)), Scalar::frac(1, 2));
        assert!(e_basis_coeff((0, 0, 0), (0, 0, 0), (0, 0, 0)).is_one());
    }
}
