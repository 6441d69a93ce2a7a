//! The Hopf pairing `A ⊗ U -> K`, the universal T-matrix and the checks of
//! the dual structure constants.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::aalg::{self, AElement, AMono, ATensor, Coalgebra};
use crate::algebra::{Elem, Monomial};
use crate::report::Report;
use crate::scalar::brackets::{bra_fact, kbr, kbr_fact, q_minus_qinv, sigma, sq, sq_fact, sq_inv_fact};
use crate::scalar::{limit_q1, Scalar};
use crate::ualg::{self, CoproductCache, UElement, UMono, UTensor};

/// Sign attached to `⟨a ⊗ b, u ⊗ v⟩ = ± ⟨a, u⟩⟨b, v⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSign {
    /// No sign.
    Plain,
    /// `(-1)^{p(b) p(u)}`.
    Graded,
}

/// Memoized pairing context.
pub struct Pairing {
    sign: PairSign,
    memo: BTreeMap<(AMono, UMono), Scalar>,
    cop: CoproductCache,
}

impl Default for Pairing {
    fn default() -> Self {
        Pairing::new(PairSign::Plain)
    }
}

/// Pairing of a single generator with a `U`-monomial.
enum Gen {
    X,
    Z,
    K(i32),
    Y,
}

fn pair_gen(gen: &Gen, u: &UMono) -> Scalar {
    match gen {
        Gen::X => Scalar::from_int((u.a == 1 && u.b == 0 && u.d == 0) as i64),
        Gen::Y => Scalar::from_int((u.a == 0 && u.b == 0 && u.d == 1) as i64),
        Gen::Z => {
            if u.a != 0 || u.d != 0 {
                Scalar::zero()
            } else if u.b == 1 {
                Scalar::one()
            } else if u.b == 0 {
                Scalar::lambda().scale_int(u.m as i64)
            } else {
                Scalar::zero()
            }
        }
        Gen::K(j) => {
            if u.a != 0 || u.d != 0 {
                Scalar::zero()
            } else {
                // (j/2)^b q^{jm/2}
                Scalar::frac(*j as i64, 2).pow(u.b).mul(&Scalar::s_pow(j * u.m))
            }
        }
    }
}

impl Pairing {
    pub fn new(sign: PairSign) -> Self {
        Pairing { sign, memo: BTreeMap::new(), cop: CoproductCache::new() }
    }

    pub fn sign_convention(&self) -> PairSign {
        self.sign
    }

    fn tsign(&self, p_right_a: u32, p_left_u: u32) -> i64 {
        match self.sign {
            PairSign::Plain => 1,
            PairSign::Graded => {
                if p_right_a * p_left_u == 1 {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn pair_mono(&mut self, a: &AMono, u: &UMono) -> Scalar {
        if a.a != u.a || a.c != u.d {
            return Scalar::zero();
        }
        if *a == AMono::unit() {
            return Scalar::from_int((u.b == 0) as i64);
        }
        if let Some(v) = self.memo.get(&(*a, *u)) {
            return v.clone();
        }
        let (gen, rest) = if a.a > 0 {
            (Gen::X, AMono { a: a.a - 1, ..*a })
        } else if a.b > 0 {
            (Gen::Z, AMono { b: a.b - 1, ..*a })
        } else if a.m != 0 {
            (Gen::K(a.m), AMono { m: 0, ..*a })
        } else {
            (Gen::Y, AMono { c: a.c - 1, ..*a })
        };
        let terms: Vec<((UMono, UMono), Scalar)> = self.cop.get(u).terms().map(|(k, v)| (*k, v.clone())).collect();
        let mut acc = Scalar::zero();
        for ((u1, u2), c) in terms {
            let g = pair_gen(&gen, &u1);
            if g.is_zero() {
                continue;
            }
            let r = self.pair_mono(&rest, &u2);
            if r.is_zero() {
                continue;
            }
            let s = self.tsign(rest.parity(), u1.parity());
            acc.add_assign(&g.mul(&r).mul(&c).scale_int(s));
        }
        self.memo.insert((*a, *u), acc.clone());
        acc
    }

    pub fn pair(&mut self, a: &AElement, u: &UElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (ma, ca) in a.terms() {
            for (mu, cu) in u.terms() {
                let v = self.pair_mono(ma, mu);
                if !v.is_zero() {
                    acc.add_assign(&v.mul(ca).mul(cu));
                }
            }
        }
        acc
    }

    /// `⟨a₁ ⊗ a₂, u₁ ⊗ u₂⟩` with the context's sign convention.
    pub fn pair2(&mut self, t: &ATensor, s: &UTensor) -> Scalar {
        let mut acc = Scalar::zero();
        for ((a1, a2), ca) in t.terms() {
            for ((u1, u2), cu) in s.terms() {
                let l = self.pair_mono(a1, u1);
                if l.is_zero() {
                    continue;
                }
                let r = self.pair_mono(a2, u2);
                if r.is_zero() {
                    continue;
                }
                let sg = self.tsign(a2.parity(), u1.parity());
                acc.add_assign(&l.mul(&r).mul(ca).mul(cu).scale_int(sg));
            }
        }
        acc
    }
}

pub type AUElement = Elem<(AMono, UMono)>;

/// Expand every `g^j` on the `U` side into `Σ (jΛ)^i H^i / i!`, keeping
/// `H`-degree at most `max_h`. The result uses only `E_{klm}` monomials.
pub fn project_e(t: &AUElement, max_h: u32) -> AUElement {
    let mut out = AUElement::zero();
    for ((a, u), c) in t.terms() {
        let single = UElement::term(*u, c.clone());
        for ((k, l, m), v) in ualg::e_basis_expand(&single, max_h) {
            out.add_term((*a, UMono::e(k, l, m)), v);
        }
    }
    out
}

/// Basis-sum form `Σ (-1)^{p(p-1)/2} e^{klm} ⊗ E_{klm}`, `k + m <= n`,
/// `l <= lz`.
pub fn universal_t_basis(n: u32, lz: u32) -> AUElement {
    let mut out = AUElement::zero();
    for k in 0..=n {
        for m in 0..=(n - k) {
            let p = (k + m) as i64;
            let sg = Scalar::sign(p * (p - 1) / 2);
            for l in 0..=lz {
                let e = aalg::dual_basis(k as i64, l as i64, m as i64).expect("non-negative");
                for (am, c) in e.terms() {
                    out.add_term((*am, UMono::e(k, l, m)), c.mul(&sg));
                }
            }
        }
    }
    out
}

/// Closed form `Exp_q(x ⊗ V₊g) exp(z ⊗ H) Exp_{q⁻¹}(y ⊗ g⁻¹V₋)`, truncated
/// at total `x, y` degree `n` and `z`-order `lz`.
pub fn universal_t_closed(n: u32, lz: u32) -> AUElement {
    let xv = AUElement::mono((AMono::new(1, 0, 0, 0), UMono::new(1, 0, 1, 0)));
    let yv = AUElement::mono((AMono::new(0, 0, 0, 1), UMono::new(0, 0, -1, 1)));
    let zh = AUElement::mono((AMono::new(0, 1, 0, 0), UMono::new(0, 1, 0, 0)));
    let mut ex = AUElement::zero();
    let mut ey = AUElement::zero();
    let mut ez = AUElement::zero();
    let mut px = AUElement::one();
    let mut py = AUElement::one();
    let mut pz = AUElement::one();
    for k in 0..=n {
        if k > 0 {
            px = px.mul(&xv);
            py = py.mul(&yv);
        }
        ex.add_assign(&px.scale(&sq_fact(k as i64).inv().expect("nonzero")));
        ey.add_assign(&py.scale(&sq_inv_fact(k as i64).inv().expect("nonzero")));
    }
    let mut fact = BigInt::from(1);
    for l in 0..=lz {
        if l > 0 {
            pz = pz.mul(&zh);
            fact *= l;
        }
        ez.add_assign(&pz.scale(&Scalar::from_rational(&BigRational::new(1.into(), fact.clone()))));
    }
    ex.mul_trunc(&ez, n).mul_trunc(&ey, n)
}

fn e_triples(b: (u32, u32, u32)) -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for k in 0..=b.0 {
        for l in 0..=b.1 {
            for m in 0..=b.2 {
                v.push((k, l, m));
            }
        }
    }
    v
}

/// `⟨e^{nrs}, E_{klm}⟩ = δ` for all indices within `bounds`.
pub fn suite_pairing_delta(ctx: &mut Pairing, bounds: (u32, u32, u32), samples: &[f64]) -> Report {
    let mut rep = Report::new("pairing_delta");
    let idx = e_triples(bounds);
    for &(n, r, s) in &idx {
        let e = aalg::dual_basis(n as i64, r as i64, s as i64).expect("non-negative");
        for &(k, l, m) in &idx {
            let v = ctx.pair(&e, &UElement::mono(UMono::e(k, l, m)));
            let want = Scalar::from_int(((n, r, s) == (k, l, m)) as i64);
            rep.check(format!("e^{{{n}{r}{s}}} E_{{{k}{l}{m}}}"), &v, &want, samples);
        }
    }
    rep
}

/// Pair of `E`-basis labels `(a, b)` for `E_a ⊗ E_b`.
pub type LabelPair = ((u32, u32, u32), (u32, u32, u32));

/// Coefficients of `E_a ⊗ E_b` in `Δ(E_{klm})`, with `g` expanded to
/// `H`-degree `max_h` in each factor.
pub fn g_constants_u(klm: (u32, u32, u32), max_h: u32) -> BTreeMap<LabelPair, Scalar> {
    let d = ualg::expand_delta_e(klm.0 as i64, klm.1 as i64, klm.2 as i64).expect("non-negative");
    let mut out: BTreeMap<LabelPair, Scalar> = BTreeMap::new();
    for ((u1, u2), c) in d.terms() {
        let l = ualg::e_basis_expand(&UElement::mono(*u1), max_h);
        let r = ualg::e_basis_expand(&UElement::mono(*u2), max_h);
        for (ka, va) in &l {
            for (kb, vb) in &r {
                let slot = out.entry((*ka, *kb)).or_insert_with(Scalar::zero);
                slot.add_assign(&va.mul(vb).mul(c));
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

type Triple = (u32, u32, u32);

fn delta3(t: Triple, k: u32, l: u32, m: u32) -> bool {
    t == (k, l, m)
}

/// The listed g-constants `g^{pqr p'q'r'}_{klm}` as functions of `klm`.
fn listed_g(pair: (Triple, Triple), klm: Triple) -> Option<Scalar> {
    let lam = Scalar::lambda();
    let one = |b: bool| Scalar::from_int(b as i64);
    let v = match pair {
        ((1, 0, 0), (0, 0, 1)) => one(delta3(klm, 1, 0, 1)),
        ((0, 0, 1), (1, 0, 0)) => one(delta3(klm, 1, 0, 1)).neg(),
        ((1, 0, 0), (0, 1, 0)) => lam.neg().mul(&one(delta3(klm, 1, 0, 0))).add(&one(delta3(klm, 1, 1, 0))),
        ((0, 1, 0), (1, 0, 0)) => lam.mul(&one(delta3(klm, 1, 0, 0))).add(&one(delta3(klm, 1, 1, 0))),
        ((0, 1, 0), (0, 0, 1)) => lam.mul(&one(delta3(klm, 0, 0, 1))).add(&one(delta3(klm, 0, 1, 1))),
        ((0, 0, 1), (0, 1, 0)) => lam.neg().mul(&one(delta3(klm, 0, 0, 1))).add(&one(delta3(klm, 0, 1, 1))),
        ((1, 0, 0), (n, 0, 0)) => {
            if delta3(klm, n + 1, 0, 0) {
                kbr(n as i64 + 1)
            } else {
                Scalar::zero()
            }
        }
        ((n, r, 0), (0, 1, 0)) => {
            let a = if delta3(klm, n, r, 0) { lam.scale_int(-(n as i64)) } else { Scalar::zero() };
            let b = if delta3(klm, n, r + 1, 0) { Scalar::from_int(r as i64 + 1) } else { Scalar::zero() };
            a.add(&b)
        }
        ((n, r, s), (0, 0, 1)) => {
            if klm.0 == n && klm.2 == s + 1 && klm.1 <= r {
                let j = r - klm.1;
                let f: i64 = (1..=j as i64).product();
                crate::scalar::brackets::bra(s as i64 + 1).mul(&lam.pow(j)).mul(&Scalar::frac(1, f))
            } else {
                Scalar::zero()
            }
        }
        _ => return None,
    };
    Some(v)
}

/// g-constants: the listed values, the `A`-side product expanded in the dual
/// basis, and the `U`-side coproduct coefficients must agree.
pub fn suite_gconst(max_n: u32, samples: &[f64]) -> Report {
    let mut rep = Report::new("gconst");
    let mut pairs: Vec<(Triple, Triple)> = alloc::vec![
        ((1, 0, 0), (0, 0, 1)),
        ((0, 0, 1), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 0)),
        ((0, 1, 0), (1, 0, 0)),
        ((0, 1, 0), (0, 0, 1)),
        ((0, 0, 1), (0, 1, 0)),
    ];
    for n in 1..=max_n {
        pairs.push(((1, 0, 0), (n, 0, 0)));
    }
    for n in 0..=2 {
        for r in 0..=2 {
            pairs.push(((n, r, 0), (0, 1, 0)));
            for s in 0..=2 {
                pairs.push(((n, r, s), (0, 0, 1)));
            }
        }
    }
    pairs.sort();
    pairs.dedup();
    for (p1, p2) in pairs {
        let e1 = aalg::dual_basis(p1.0 as i64, p1.1 as i64, p1.2 as i64).expect("ok");
        let e2 = aalg::dual_basis(p2.0 as i64, p2.1 as i64, p2.2 as i64).expect("ok");
        let prod = aalg::to_dual_basis(&e1.mul(&e2)).expect("k-free");
        let kmax = p1.0 + p2.0;
        let lmax = p1.1 + p2.1;
        let mmax = p1.2 + p2.2;
        for klm in e_triples((kmax, lmax, mmax)) {
            if klm.0 != kmax || klm.2 != mmax {
                continue;
            }
            let a_side = prod.get(&klm).cloned().unwrap_or_else(Scalar::zero);
            let u_side = g_constants_u(klm, lmax).get(&(p1, p2)).cloned().unwrap_or_else(Scalar::zero);
            let id = format!("g^{{{}{}{} {}{}{}}}_{{{}{}{}}}", p1.0, p1.1, p1.2, p2.0, p2.1, p2.2, klm.0, klm.1, klm.2);
            rep.check(format!("{id} A-vs-U"), &a_side, &u_side, samples);
            if let Some(listed) = listed_g((p1, p2), klm) {
                rep.check(format!("{id} listed"), &a_side, &listed, samples);
            }
        }
    }
    rep
}

/// The listed f-constants `f^{pqr}_{klm k'l'm'}` for `pqr` a generator.
pub fn listed_f(gen: Triple, lhs: Triple, rhs: Triple) -> Scalar {
    let (k, l, m) = lhs;
    let (kp, lp, mp) = rhs;
    let one = |b: bool| Scalar::from_int(b as i64);
    let sig = |n: u32| Scalar::from_ratfunc(sigma(n as i64).expect("non-negative"));
    let two_pow = |n: u32| Scalar::frac(1, 1i64 << n);
    match gen {
        (1, 0, 0) => {
            let a = one(lhs == (1, 0, 0) && rhs == (0, 0, 0));
            let b = if k == 0 && kp == m + 1 && lp == 0 && mp == 0 {
                Scalar::sign(m as i64).mul(&two_pow(l)).mul(&sig(m + 1))
            } else {
                Scalar::zero()
            };
            a.add(&b)
        }
        (0, 1, 0) => {
            let a = one(k == 0 && m == 0 && kp == 0 && mp == 0 && ((l, lp) == (1, 0) || (l, lp) == (0, 1)));
            let b = if k == 0 && l == 0 && kp == m && lp == 0 && mp == 0 && m >= 1 {
                let c = Scalar::lambda().scale_int(4).div(&q_minus_qinv()).expect("nonzero");
                Scalar::sign(m as i64).mul(&c).mul(&sig(m))
            } else {
                Scalar::zero()
            };
            a.add(&b)
        }
        (0, 0, 1) => {
            let a = one(lhs == (0, 0, 0) && rhs == (0, 0, 1));
            let b = if k == 0 && l == 0 && m == kp + 1 && mp == 0 {
                Scalar::sign(kp as i64).mul(&two_pow(lp)).mul(&sig(kp + 1))
            } else {
                Scalar::zero()
            };
            a.add(&b)
        }
        _ => Scalar::zero(),
    }
}

/// f-constants: listed formula vs `U`-side product coefficient vs
/// `⟨Δ_A(e), E ⊗ E'⟩`, plus the σ-form and succinct-form coproduct
/// coefficients against each other.
pub fn suite_fconst(ctx: &mut Pairing, bound: Triple, samples: &[f64]) -> Report {
    let mut rep = Report::new("fconst");
    let idx = e_triples(bound);
    let gens = [(1u32, 0u32, 0u32), (0, 1, 0), (0, 0, 1)];
    let trunc = 2 * (bound.0 + bound.2) + 2;
    let mut co = Coalgebra::new(trunc);
    for gen in gens {
        let e = aalg::dual_basis(gen.0 as i64, gen.1 as i64, gen.2 as i64).expect("ok");
        let de = co.delta(&e);
        for &lhs in &idx {
            for &rhs in &idx {
                // grading: V₊ count and V₋ count are conserved
                if lhs.0 + rhs.0 < gen.0 || lhs.2 + rhs.2 < gen.2 {
                    continue;
                }
                let listed = listed_f(gen, lhs, rhs);
                let u_side = ualg::e_basis_coeff(lhs, rhs, gen);
                let a_side = ctx.pair2(&de, &UTensor::mono((UMono::e(lhs.0, lhs.1, lhs.2), UMono::e(rhs.0, rhs.1, rhs.2))));
                let id = format!("f^{{{}{}{}}}_{{{}{}{} {}{}{}}}", gen.0, gen.1, gen.2, lhs.0, lhs.1, lhs.2, rhs.0, rhs.1, rhs.2);
                rep.check(format!("{id} listed-vs-U"), &listed, &u_side, samples);
                rep.check(format!("{id} U-vs-pairing"), &u_side, &a_side, samples);
            }
        }
    }
    // σ-form coefficients against the succinct ones
    let co = Coalgebra::new(9);
    let sig = |n: u32| Scalar::from_ratfunc(sigma(n as i64).expect("non-negative"));
    for m in 0..=4u32 {
        let mi = m as i64;
        let sform = Scalar::sign(mi).mul(&sig(m + 1)).mul(&Scalar::s_pow(-(m as i32))).div(&bra_fact(mi).mul(&kbr_fact(mi + 1))).expect("nonzero");
        let succ = co.delta_x().coeff(&(AMono::new(0, 0, 1, m), AMono::new(m + 1, 0, 0, 0)));
        rep.check(format!("Delta(x) coefficient m={m}"), &sform, &succ, samples);
        let sform = Scalar::sign(mi).mul(&sig(m + 1)).mul(&Scalar::s_pow(m as i32)).div(&bra_fact(mi + 1).mul(&kbr_fact(mi))).expect("nonzero");
        let succ = co.delta_y().coeff(&(AMono::new(0, 0, 0, m + 1), AMono::new(m, 0, 1, 0)));
        rep.check(format!("Delta(y) coefficient m={m}"), &sform, &succ, samples);
        if m >= 1 {
            let sform = Scalar::sign(mi).mul(&sig(m)).div(&bra_fact(mi).mul(&kbr_fact(mi))).expect("nonzero");
            rep.check(format!("Delta(z) coefficient m={m}"), &sform, &aalg::kappa(m), samples);
        }
    }
    rep
}

/// The printed succinct `Δ(y)` and the printed antipode series against the
/// ones derived from the coproduct and the antipode axiom.
pub fn suite_printed_series(n: u32, samples: &[f64]) -> Report {
    let mut rep = Report::new("printed_series");
    let co = Coalgebra::new(n);
    let printed = aalg::printed_series(n);
    rep.check("Delta(y)".into(), &printed.delta_y, co.delta_y(), samples);
    rep.check("S(x)".into(), &printed.sx, co.antipode_x(), samples);
    rep.check("S(z)".into(), &printed.sz, co.antipode_z(), samples);
    rep.check("S(y)".into(), &printed.sy, co.antipode_y(), samples);
    rep
}

fn mul_t(a: &ATensor, b: &ATensor, n: u32) -> ATensor {
    a.mul_trunc(b, n)
}

fn a_monomial_samples() -> Vec<(&'static str, AElement)> {
    alloc::vec![
        ("x", aalg::x()),
        ("y", aalg::y()),
        ("z", aalg::z()),
        ("k", aalg::k(1)),
        ("k^-1", aalg::k(-1)),
        ("k^2", aalg::k(2)),
        ("xy", aalg::x().mul(&aalg::y())),
        ("x^2", aalg::x().pow(2)),
        ("y^2", aalg::y().pow(2)),
        ("zk", aalg::z().mul(&aalg::k(1))),
        ("xzy", aalg::x().mul(&aalg::z()).mul(&aalg::y())),
        ("x^2k^-1y", aalg::x().pow(2).mul(&aalg::k(-1)).mul(&aalg::y())),
    ]
}

/// Hopf structure of `A` at truncation `n`: `Δ` respects the defining
/// relations, coassociativity, counit and antipode axioms.
pub fn suite_hopf_a(n: u32, samples: &[f64]) -> Report {
    let mut rep = Report::new("hopf_a");
    let mut co = Coalgebra::new(n);
    let dx = co.delta_x().clone();
    let dy = co.delta_y().clone();
    let dz = co.delta_z().clone();
    let dk = co.delta_k(1);
    let dki = co.delta_k(-1);
    let lam2 = Scalar::lambda().scale_int(2);
    let q = Scalar::q_pow(1);
    rep.check(
        "{D(x), D(y)} = 0".into(),
        &mul_t(&dx, &dy, n).add(&mul_t(&dy, &dx, n)),
        &ATensor::zero(),
        samples,
    );
    rep.check("[D(z), D(x)] = 2 ln q D(x)".into(), &mul_t(&dz, &dx, n).sub(&mul_t(&dx, &dz, n)), &dx.scale(&lam2), samples);
    rep.check("[D(z), D(y)] = 2 ln q D(y)".into(), &mul_t(&dz, &dy, n).sub(&mul_t(&dy, &dz, n)), &dy.scale(&lam2), samples);
    rep.check("[D(z), D(k)] = 0".into(), &mul_t(&dz, &dk, n), &mul_t(&dk, &dz, n), samples);
    rep.check("D(k) D(x) = q D(x) D(k)".into(), &mul_t(&dk, &dx, n), &mul_t(&dx, &dk, n).scale(&q), samples);
    rep.check("D(k) D(y) = q D(y) D(k)".into(), &mul_t(&dk, &dy, n), &mul_t(&dy, &dk, n).scale(&q), samples);
    rep.check("D(k) D(k^-1) = 1".into(), &mul_t(&dk, &dki, n), &ATensor::one(), samples);
    rep.check("D(k)^2 = D(k^2)".into(), &mul_t(&dk, &dk, n), &co.delta_k(2), samples);
    rep.check(
        "D(x)^2 = D(x^2)".into(),
        &mul_t(&dx, &dx, n),
        &co.delta(&aalg::x().pow(2)),
        samples,
    );
    for (name, a) in a_monomial_samples() {
        let d = co.delta(&a);
        rep.check(format!("coassociativity {name}"), &co.delta_left(&d), &co.delta_right(&d), samples);
        let mut left_counit = AElement::zero();
        let mut right_counit = AElement::zero();
        let mut left_anti = AElement::zero();
        let mut right_anti = AElement::zero();
        for ((a1, a2), c) in d.terms() {
            let e1 = aalg::counit(&AElement::mono(*a1));
            if !e1.is_zero() {
                left_counit.add_term(*a2, e1.mul(c));
            }
            let e2 = aalg::counit(&AElement::mono(*a2));
            if !e2.is_zero() {
                right_counit.add_term(*a1, e2.mul(c));
            }
            let s1 = co.antipode_mono(a1);
            left_anti.add_scaled(&s1.mul_trunc(&AElement::mono(*a2), n), c);
            let s2 = co.antipode_mono(a2);
            right_anti.add_scaled(&AElement::mono(*a1).mul_trunc(&s2, n), c);
        }
        let a_t = a.truncate(n);
        let eps = AElement::scalar(aalg::counit(&a));
        rep.check(format!("(eps (x) id) D({name}) = {name}"), &left_counit, &a_t, samples);
        rep.check(format!("(id (x) eps) D({name}) = {name}"), &right_counit, &a_t, samples);
        rep.check(format!("mu (S (x) id) D({name}) = eps"), &left_anti.truncate(n), &eps, samples);
        rep.check(format!("mu (id (x) S) D({name}) = eps"), &right_anti.truncate(n), &eps, samples);
    }
    rep
}

fn sample_a() -> Vec<(&'static str, AElement)> {
    alloc::vec![
        ("1", AElement::one()),
        ("x", aalg::x()),
        ("y", aalg::y()),
        ("z", aalg::z()),
        ("k", aalg::k(1)),
        ("k^-1", aalg::k(-1)),
        ("xy", aalg::x().mul(&aalg::y())),
        ("xz", aalg::x().mul(&aalg::z())),
        ("zy", aalg::z().mul(&aalg::y())),
        ("x^2", aalg::x().pow(2)),
        ("y^2", aalg::y().pow(2)),
        ("kx", aalg::k(1).mul(&aalg::x())),
        ("xky", aalg::x().mul(&aalg::k(1)).mul(&aalg::y())),
        ("x^2y", aalg::x().pow(2).mul(&aalg::y())),
        ("xzy", aalg::x().mul(&aalg::z()).mul(&aalg::y())),
    ]
}

fn sample_u() -> Vec<(&'static str, UElement)> {
    alloc::vec![
        ("1", UElement::one()),
        ("V+", ualg::vplus()),
        ("V-", ualg::vminus()),
        ("H", ualg::h()),
        ("g", ualg::g(1)),
        ("V+V-", ualg::vplus().mul(&ualg::vminus())),
        ("V-V+", ualg::vminus().mul(&ualg::vplus())),
        ("HV+", ualg::h().mul(&ualg::vplus())),
        ("V+^2", ualg::vplus().pow(2)),
        ("V-^2", ualg::vminus().pow(2)),
        ("H^2", ualg::h().pow(2)),
        ("V+HV-", ualg::vplus().mul(&ualg::h()).mul(&ualg::vminus())),
        ("V+^2V-", ualg::vplus().pow(2).mul(&ualg::vminus())),
    ]
}

/// The five defining relations of a Hopf pairing on sampled elements.
pub fn suite_hopf_pairing_axioms(ctx: &mut Pairing, samples: &[f64]) -> Report {
    let mut rep = Report::new("hopf_pairing_axioms");
    let aa = sample_a();
    let uu = sample_u();
    let mut co = Coalgebra::new(6);
    // ⟨a, uv⟩ = ⟨Δa, u ⊗ v⟩
    for (an, a) in &aa {
        let da = co.delta(a);
        for (un, u) in &uu {
            for (vn, v) in &uu {
                let lhs = ctx.pair(a, &u.mul(v));
                let rhs = ctx.pair2(&da, &crate::algebra::tensor(u, v));
                rep.check(format!("<{an}, {un}*{vn}> = <D({an}), {un} (x) {vn}>"), &lhs, &rhs, samples);
            }
        }
    }
    // ⟨ab, u⟩ = ⟨a ⊗ b, Δu⟩
    for (an, a) in &aa {
        for (bn, b) in &aa {
            for (un, u) in &uu {
                let lhs = ctx.pair(&a.mul(b), u);
                let rhs = ctx.pair2(&crate::algebra::tensor(a, b), &ualg::coproduct(u));
                rep.check(format!("<{an}*{bn}, {un}> = <{an} (x) {bn}, D({un})>"), &lhs, &rhs, samples);
            }
        }
    }
    // counits
    for (an, a) in &aa {
        let lhs = ctx.pair(a, &UElement::one());
        rep.check(format!("<{an}, 1> = eps({an})"), &lhs, &aalg::counit(a), samples);
    }
    for (un, u) in &uu {
        let lhs = ctx.pair(&AElement::one(), u);
        rep.check(format!("<1, {un}> = eps({un})"), &lhs, &ualg::counit(u), samples);
    }
    // antipodes
    for (an, a) in &aa {
        let sa = co.antipode(a);
        for (un, u) in &uu {
            let lhs = ctx.pair(a, &ualg::antipode(u));
            let rhs = ctx.pair(&sa, u);
            rep.check(format!("<{an}, S({un})> = <S({an}), {un}>"), &lhs, &rhs, samples);
        }
    }
    rep
}

/// Universal T: basis-sum form against the closed form.
pub fn suite_universal_t(n: u32, lz: u32, samples: &[f64]) -> Report {
    let mut rep = Report::new("universal_t");
    let basis = universal_t_basis(n, lz);
    let closed = project_e(&universal_t_closed(n, lz), lz);
    for k in 0..=n {
        for m in 0..=(n - k) {
            for l in 0..=lz {
                let e = UMono::e(k, l, m);
                let pick = |t: &AUElement| -> AElement {
                    let mut out = AElement::zero();
                    for ((a, u), c) in t.terms() {
                        if *u == e {
                            out.add_term(*a, c.clone());
                        }
                    }
                    out
                };
                rep.check(format!("coefficient of E_{{{k}{l}{m}}}"), &pick(&basis), &pick(&closed), samples);
            }
        }
    }
    rep
}

/// `lim_{q->1} ⟦2n+1⟧ = 1`, `⟦2n⟧/(1-q) -> n`, `⟦2n⟧!/(n!(1-q)^n) -> 1`.
pub fn suite_classical_limit(max_n: u32) -> Report {
    let mut rep = Report::new("classical_limit");
    let mut nfact = BigInt::from(1);
    for n in 0..=max_n as i64 {
        let odd = limit_q1(&sq(2 * n + 1), 0);
        rep.assert(
            format!("[[{}]] -> 1", 2 * n + 1),
            odd.as_ref().ok() == Some(&BigRational::from_integer(1.into())),
            format!("{odd:?}"),
        );
        if n >= 1 {
            nfact *= n;
            let even = limit_q1(&sq(2 * n), -1);
            rep.assert(
                format!("[[{}]]/(1-q) -> {n}", 2 * n),
                even.as_ref().ok() == Some(&BigRational::from_integer(n.into())),
                format!("{even:?}"),
            );
            let f = sq_fact(2 * n).scale_rational(&BigRational::new(1.into(), nfact.clone()));
            let lim = limit_q1(&f, -n);
            rep.assert(
                format!("[[{}]]!/({n}!(1-q)^{n}) -> 1", 2 * n),
                lim.as_ref().ok() == Some(&BigRational::from_integer(1.into())),
                format!("{lim:?}"),
            );
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::DEFAULT_SAMPLES;

    #[test]
    fn generator_pairings() {
        let mut p = Pairing::default();
        assert!(p.pair(&aalg::x(), &ualg::vplus()).is_one());
        assert!(p.pair(&aalg::x(), &ualg::vminus()).is_zero());
        assert_eq!(p.pair(&aalg::k(1), &ualg::g(1)), Scalar::s_pow(1));
        assert!(p.pair(&AElement::one(), &UElement::one()).is_one());
    }

    #[test]
    fn pairing_delta_small() {
        let mut p = Pairing::default();
        let r = suite_pairing_delta(&mut p, (2, 1, 2), &DEFAULT_SAMPLES);
        let bad: Vec<_> = r.cases.iter().filter(|c| c.status != crate::report::Status::Pass).map(|c| &c.id).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn graded_sign_fails_delta() {
        let mut p = Pairing::new(PairSign::Graded);
        let r = suite_pairing_delta(&mut p, (1, 0, 1), &DEFAULT_SAMPLES);
        assert!(!r.passed());
    }

    #[test]
    fn classical() {
        assert!(suite_classical_limit(5).passed());
    }

    #[test]
    fn universal_t_low() {
        let r = suite_universal_t(2, 2, &[0.5]);
        let bad: Vec<_> = r.cases.iter().filter(|c| c.status != crate::report::Status::Pass).map(|c| (&c.id, &c.details)).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
