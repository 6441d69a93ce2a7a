//! Representation matrices `T^ℓ(λ)` of the quantum supergroup: entries are
//! elements of `A`, rows and columns indexed by `m = ℓ, …, -ℓ`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aalg::{self, AElement, AMono, Coalgebra};
use crate::algebra::{tensor, Elem};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::report::Report;
use crate::repth::{self, CgcTable, Irrep};
use crate::scalar::brackets::{kbr, kbr_fact, sq_fact, sq_inv_fact};
use crate::scalar::Scalar;
use crate::ualg::{UElement, UMono};

pub type AMat = Mat<AElement>;

fn sign(e: i64) -> Scalar {
    Scalar::sign(e.rem_euclid(2))
}

fn kf(n: i64) -> Scalar {
    kbr_fact(n)
}

fn inv(s: &Scalar) -> Scalar {
    s.inv().expect("nonzero bracket")
}

fn mono(a: u32, b: u32, m: i32, c: u32) -> AElement {
    AElement::mono(AMono::new(a, b, m, c))
}

/// `√({a₁}{a₂}…)`, zero when any argument vanishes.
fn root(args: &[i64]) -> Result<Scalar> {
    if args.contains(&0) {
        return Ok(Scalar::zero());
    }
    let mut out = Scalar::one();
    for &a in args {
        if a < 0 {
            return Err(Error::NegativeArgument(a));
        }
        out = out.mul(&Scalar::sqrt_kbracket(a)?);
    }
    Ok(out)
}

/// `T^ℓ(λ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TMatrix {
    pub ell: u32,
    pub lambda: u32,
    pub entries: AMat,
}

impl TMatrix {
    pub fn dim(&self) -> usize {
        2 * self.ell as usize + 1
    }

    fn idx(&self, m: i64) -> Option<usize> {
        (m.abs() <= self.ell as i64).then(|| (self.ell as i64 - m) as usize)
    }

    /// `T^ℓ_{m'm}`, zero outside the index range.
    pub fn get(&self, mp: i64, m: i64) -> AElement {
        match (self.idx(mp), self.idx(m)) {
            (Some(i), Some(j)) => self.entries.get(i, j),
            _ => AElement::zero(),
        }
    }

    pub fn ms(&self) -> impl Iterator<Item = i64> {
        let l = self.ell as i64;
        (-l..=l).rev()
    }
}

/// Entry `T^ℓ_{m'm}(λ)` from the closed finite sum over `c`.
pub fn t_entry(ell: i64, lambda: u32, mp: i64, m: i64) -> Result<AElement> {
    if ell < 0 {
        return Err(Error::NegativeArgument(ell));
    }
    if mp.abs() > ell || m.abs() > ell {
        return Err(Error::IndexOutOfRange(format!("({mp},{m}) at l = {ell}")));
    }
    let l = ell;
    let d = mp - m;
    let lead = sign(d * (d - 1) / 2 + d * (l - mp + lambda as i64)).mul(&Scalar::s_pow((m * d) as i32));
    let under = kbr(2).powi(-d as i32)?.mul(&kf(l + m)).mul(&kf(l + mp)).div(&kf(l - m).mul(&kf(l - mp)))?;
    let lead = lead.mul(&under.sqrt()?);
    let mut out = AElement::zero();
    for c in 0.max(-d)..=(l + m) {
        let coeff = sign(c * (l - m))
            .mul(&Scalar::s_pow((-c * d) as i32))
            .mul(&inv(&kbr(2).pow(c as u32)))
            .mul(&kf(l - m + c))
            .mul(&inv(&kf(l + m - c)))
            .mul(&inv(&kf(d + c)))
            .mul(&inv(&kf(c)));
        out.add_term(AMono::new((d + c) as u32, 0, (m - c) as i32, c as u32), coeff.mul(&lead));
    }
    Ok(out)
}

pub fn t_matrix(ell: i64, lambda: u32) -> Result<TMatrix> {
    if ell < 0 {
        return Err(Error::NegativeArgument(ell));
    }
    let n = 2 * ell as usize + 1;
    let mut entries = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            entries.set(i, j, t_entry(ell, lambda, ell - i as i64, ell - j as i64)?);
        }
    }
    Ok(TMatrix { ell: ell as u32, lambda: lambda % 2, entries })
}

/// `a ⊗ u ↦ ((-1)^{p(a) p_i} a ρ(u)_{ij})`, a homomorphism `A ⊗ U -> Mat(A)`
/// carrying the universal T-matrix to the graded matrix elements.
fn phi(a: &AElement, u: &UElement, rho: &Irrep) -> AMat {
    let m = repth::rep_apply(u, rho);
    let pa = a.parity().unwrap_or(0);
    let mut out = Mat::zeros(m.rows(), m.cols());
    for (&(i, j), c) in m.nonzero() {
        let s = if pa * rho.parity(i) % 2 == 1 { c.neg() } else { c.clone() };
        out.set(i, j, a.scale(&s));
    }
    out
}

/// `T^ℓ(λ)` from the closed universal T-matrix, `Exp_q(x⊗V₊g) exp(z⊗H)
/// Exp_{q⁻¹}(y⊗g⁻¹V₋)`, pushed through the graded matrix-element map.
pub fn t_matrix_universal(ell: i64, lambda: u32) -> Result<TMatrix> {
    let rho = repth::irrep(ell, lambda)?;
    let n = rho.dim();
    let xv = phi(&aalg::x(), &UElement::mono(UMono::new(1, 0, 1, 0)), &rho);
    let yv = phi(&aalg::y(), &UElement::mono(UMono::new(0, 0, -1, 1)), &rho);
    // exp(z ⊗ H) acts as e^{mz/2} = k^m on e_m.
    let ez = Mat::diag((0..n).map(|i| aalg::k(rho.m_of(i) as i32)).collect());
    let mut ex = Mat::zeros(n, n);
    let mut ey = Mat::zeros(n, n);
    for k in 0..n as u32 {
        ex = ex.add(&xv.pow(k).scale(&inv(&sq_fact(k as i64))));
        ey = ey.add(&yv.pow(k).scale(&inv(&sq_inv_fact(k as i64))));
    }
    Ok(TMatrix { ell: ell as u32, lambda: lambda % 2, entries: ex.mul(&ez).mul(&ey) })
}

/// The nine fundamental entries written in terms of `x, e^{±z/2}, y`, in the
/// order `[[a, α, b], [γ, e, β], [c, δ, d]]`.
pub fn fundamental_entries() -> AMat {
    let k2 = inv(&kbr(2));
    let (x, y) = (aalg::x(), aalg::y());
    let (kp, km) = (aalg::k(1), aalg::k(-1));
    let x2y2 = x.pow(2).mul(&km).mul(&y.pow(2));
    let a = x.mul(&y).add(&kp).add(&x2y2.scale(&k2.pow(2)));
    let alpha = x.sub(&x.pow(2).mul(&km).mul(&y).scale(&Scalar::s_pow(-1).mul(&k2)));
    let b = x.pow(2).mul(&km).scale(&Scalar::q_pow(-1).mul(&k2).neg());
    let gamma = y.add(&x.mul(&km).mul(&y.pow(2)).scale(&Scalar::s_pow(1).mul(&k2)));
    let e = AElement::one().sub(&x.mul(&km).mul(&y));
    let beta = x.mul(&km).scale(&Scalar::s_pow(-1).neg());
    let c = km.mul(&y.pow(2)).scale(&Scalar::q_pow(1).mul(&k2).neg());
    let delta = km.mul(&y).scale(&Scalar::s_pow(1));
    let d = km;
    let mut m = Mat::zeros(3, 3);
    for (i, row) in [[a, alpha, b], [gamma, e, beta], [c, delta, d]].into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

/// Lower, diagonal and upper Gauss factors of the fundamental matrix.
pub fn gauss_factors() -> (AMat, AMat, AMat) {
    let k2 = inv(&kbr(2));
    let (x, y) = (aalg::x(), aalg::y());
    let mut lower = Mat::identity(3);
    lower.set(1, 0, x.scale(&Scalar::s_pow(-1).neg()));
    lower.set(2, 0, x.pow(2).scale(&Scalar::q_pow(-1).mul(&k2).neg()));
    lower.set(2, 1, x.clone());
    let diag = Mat::diag(alloc::vec![aalg::k(-1), AElement::one(), aalg::k(1)]);
    let mut upper = Mat::identity(3);
    upper.set(0, 1, y.scale(&Scalar::s_pow(1)));
    upper.set(0, 2, y.pow(2).scale(&Scalar::q_pow(1).mul(&k2).neg()));
    upper.set(1, 2, y.clone());
    (lower, diag, upper)
}

fn reversal(n: usize) -> AMat {
    let mut c = Mat::zeros(n, n);
    for i in 0..n {
        c.set(i, n - 1 - i, AElement::one());
    }
    c
}

/// `ζ = q^{-1/2}/{2} · x e^{-z/2} y`.
pub fn zeta() -> AElement {
    mono(1, 0, -1, 1).scale(&Scalar::s_pow(-1).mul(&inv(&kbr(2))))
}

/// Coefficients of `P^ℓ_{m'm}(ζ)` in powers of `ζ`.
pub fn p_polynomial(ell: i64, mp: i64, m: i64) -> Result<Vec<Scalar>> {
    if ell < 0 {
        return Err(Error::NegativeArgument(ell));
    }
    if mp.abs() > ell || m.abs() > ell {
        return Err(Error::IndexOutOfRange(format!("({mp},{m}) at l = {ell}")));
    }
    let l = ell;
    // For m' <= m the roles of m and m' swap.
    let (lo, d) = if mp >= m { (m, mp - m) } else { (mp, m - mp) };
    let mut out = Vec::new();
    for c in 0..=(l + lo) {
        let v = sign(c * (l - lo) + c * (c - 1) / 2)
            .mul(&Scalar::s_pow((-c * (mp + m - 1)) as i32))
            .mul(&kf(d))
            .mul(&kf(l + lo))
            .mul(&kf(l - lo + c))
            .div(&kf(d + c).mul(&kf(l + lo - c)).mul(&kf(l - lo)).mul(&kf(c)))?;
        out.push(v);
    }
    Ok(out)
}

fn eval_poly(coeffs: &[Scalar], z: &AElement) -> AElement {
    let mut out = AElement::zero();
    let mut p = AElement::one();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            p = p.mul(z);
        }
        out.add_scaled(&p, c);
    }
    out
}

/// `T^ℓ_{m'm}` reassembled from `P^ℓ_{m'm}(ζ)`: `x^{m'-m} e^{mz/2} P` for
/// `m' >= m`, `e^{m'z/2} y^{m-m'} P` for `m' <= m`.
pub fn t_entry_from_p(ell: i64, lambda: u32, mp: i64, m: i64) -> Result<AElement> {
    let l = ell;
    let lam = lambda as i64;
    let p = eval_poly(&p_polynomial(l, mp, m)?, &zeta());
    if mp >= m {
        let d = mp - m;
        let c = sign(d * (d - 1) / 2 + d * (l - mp + lam))
            .mul(&Scalar::s_pow((m * d) as i32))
            .mul(&inv(&kf(d)))
            .mul(&kbr(2).powi(-d as i32)?.mul(&kf(l - m)).mul(&kf(l + mp)).div(&kf(l + m).mul(&kf(l - mp)))?.sqrt()?);
        Ok(mono(d as u32, 0, m as i32, 0).mul(&p).scale(&c))
    } else {
        let d = m - mp;
        let c = sign(d * (d + 1) / 2 - d * (lam - 1))
            .mul(&Scalar::s_pow((-mp * d) as i32))
            .mul(&inv(&kf(d)))
            .mul(&kbr(2).powi(-d as i32)?.mul(&kf(l + m)).mul(&kf(l - mp)).div(&kf(l - m).mul(&kf(l + mp)))?.sqrt()?);
        Ok(mono(0, 0, mp as i32, d as u32).mul(&p).scale(&c))
    }
}

/// Fundamental matrix, construction, Gauss decomposition.
pub fn suite_fundamental(samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("fundamental");
    let t = t_matrix(1, 0)?;
    let f = fundamental_entries();
    let names = [["a", "alpha", "b"], ["gamma", "e", "beta"], ["c", "delta", "d"]];
    for (i, row) in names.iter().enumerate() {
        for (j, name) in row.iter().enumerate() {
            rep.check(format!("T^1_{{{},{}}} = {name}", 1 - i as i64, 1 - j as i64), &t.entries.get(i, j), &f.get(i, j), samples);
        }
    }
    let (lo, di, up) = gauss_factors();
    let c = reversal(3);
    rep.check("gauss L D U = C T C".into(), &lo.mul(&di).mul(&up), &c.mul(&t.entries).mul(&c), samples);
    Ok(rep)
}

/// Construction against the universal T-matrix, entry parity, counit and
/// the `ζ`-polynomial forms.
pub fn suite_construction(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("construction");
    for l in 0..=max_l {
        for lam in 0..2u32 {
            let t = t_matrix(l, lam)?;
            let tag = format!("({l};{lam})");
            rep.check(format!("closed sum = universal T {tag}"), &t.entries, &t_matrix_universal(l, lam)?.entries, samples);
            let eps = t.entries.map(|a| AElement::scalar(aalg::counit(a)));
            rep.check(format!("counit {tag}"), &eps, &Mat::identity(t.dim()), samples);
            let mut parity_ok = true;
            let mut poly_ok = true;
            for mp in t.ms() {
                for m in t.ms() {
                    let e = t.get(mp, m);
                    parity_ok &= e.terms().all(|(mo, _)| (mo.a as i64 + mo.c as i64 - (mp - m)).rem_euclid(2) == 0);
                    poly_ok &= t_entry_from_p(l, lam, mp, m)? == e;
                }
            }
            rep.assert(format!("entry parity {tag}"), parity_ok, String::new());
            rep.assert(format!("zeta-polynomial form {tag}"), poly_ok, String::new());
        }
    }
    Ok(rep)
}

/// `Δ(T_{m'm}) = Σ_k T_{m'k} ⊗ T_{km}` in every bidegree `<= n`.
pub fn suite_comodule(max_l: i64, n: u32, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("comodule");
    let mut co = Coalgebra::new(n);
    for l in 0..=max_l {
        for lam in 0..2u32 {
            let t = t_matrix(l, lam)?;
            for mp in t.ms() {
                for m in t.ms() {
                    let lhs = co.delta(&t.get(mp, m));
                    let mut rhs = Elem::zero();
                    for k in t.ms() {
                        rhs.add_assign(&tensor(&t.get(mp, k), &t.get(k, m)));
                    }
                    rep.check(format!("comodule ({l};{lam}) [{mp},{m}] N={n}"), &lhs, &rhs.truncate(n), samples);
                }
            }
        }
    }
    Ok(rep)
}

/// `T^ℓ` with the sign `(-1)^{d(d-1)/2 + d p(m')}` removed from every monomial
/// of `x,y`-degree `d`: the plain matrix elements `Σ_J e^J ρ(E_J)_{m'm}`.
pub fn t_matrix_unsigned(ell: i64, lambda: u32) -> Result<TMatrix> {
    let mut t = t_matrix(ell, lambda)?;
    for mp in t.ms().collect::<Vec<_>>() {
        let i = (ell - mp) as usize;
        let pi = (ell - mp + lambda as i64).rem_euclid(2);
        for j in 0..t.dim() {
            let e = t.entries.get(i, j).map_linear(|mo| {
                let d = (mo.a + mo.c) as i64;
                AElement::term(*mo, sign(d * (d - 1) / 2 + d * pi))
            });
            t.entries.set(i, j, e);
        }
    }
    Ok(t)
}

/// Comodule law for the unsigned matrix elements of [`t_matrix_unsigned`].
pub fn suite_comodule_unsigned(max_l: i64, n: u32, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("comodule_unsigned");
    let mut co = Coalgebra::new(n);
    for l in 0..=max_l {
        for lam in 0..2u32 {
            let t = t_matrix_unsigned(l, lam)?;
            for mp in t.ms() {
                for m in t.ms() {
                    let lhs = co.delta(&t.get(mp, m));
                    let mut rhs = Elem::zero();
                    for k in t.ms() {
                        rhs.add_assign(&tensor(&t.get(mp, k), &t.get(k, m)));
                    }
                    rep.check(format!("comodule-unsigned ({l};{lam}) [{mp},{m}] N={n}"), &lhs, &rhs.truncate(n), samples);
                }
            }
        }
    }
    Ok(rep)
}

fn cgc_get(t: &CgcTable, l: i64, m1: i64, m2: i64, m: i64) -> Scalar {
    t.get(l, m1, m2, m)
}

fn range(l: i64) -> impl Iterator<Item = i64> + Clone {
    -l..=l
}

/// Highest-weight parity of `V^{(ℓ)} ⊂ V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`.
pub fn coupled_parity(l1: i64, l2: i64, l: i64) -> u32 {
    (l1 + l2 - l).rem_euclid(2) as u32
}

/// Product law and its two alternate forms for `ℓ₁, ℓ₂ <= max_l`.
pub fn suite_product_law(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("product_law");
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for lam in 0..2u32 {
                let lm = lam as i64;
                let tab = repth::cgc(l1, l2, lam)?;
                let t1 = t_matrix(l1, lam)?;
                let t2 = t_matrix(l2, lam)?;
                let ls: Vec<i64> = tab.ls().collect();
                let big: Vec<TMatrix> = ls.iter().map(|&l| t_matrix(l, coupled_parity(l1, l2, l))).collect::<Result<_>>()?;
                for (li, &l) in ls.iter().enumerate() {
                    let tl = &big[li];
                    for &lp in &ls {
                        for mp in range(lp) {
                            for m in range(l) {
                                let mut rhs = AElement::zero();
                                for m1p in range(l1) {
                                    let m2p = mp - m1p;
                                    let cp = cgc_get(&tab, lp, m1p, m2p, mp);
                                    if m2p.abs() > l2 || cp.is_zero() {
                                        continue;
                                    }
                                    for m1 in range(l1) {
                                        let m2 = m - m1;
                                        let c = cgc_get(&tab, l, m1, m2, m);
                                        if m2.abs() > l2 || c.is_zero() {
                                            continue;
                                        }
                                        let s = sign((l1 - m1 + lm) * (l2 - m2p + lm)).mul(&cp).mul(&c);
                                        rhs.add_scaled(&t1.get(m1p, m1).mul(&t2.get(m2p, m2)), &s);
                                    }
                                }
                                let rhs = rhs.scale(&sign((lp - mp + lm) * (l1 + l2 + lp + lm)));
                                let lhs = if lp == l { tl.get(mp, m) } else { AElement::zero() };
                                rep.check(format!("product-law ({l1},{l2};{lam}) l'={lp} l={l} [{mp},{m}]"), &lhs, &rhs, samples);
                            }
                        }
                    }
                    // First alternate: Σ_{m'} C(n₁ n₂ m') T^ℓ_{m'm}.
                    for n1 in range(l1) {
                        for n2 in range(l2) {
                            for m in range(l) {
                                let mut lhs = AElement::zero();
                                for mp in range(l) {
                                    lhs.add_scaled(&tl.get(mp, m), &cgc_get(&tab, l, n1, n2, mp));
                                }
                                let mut rhs = AElement::zero();
                                for m1 in range(l1) {
                                    let m2 = m - m1;
                                    if m2.abs() > l2 {
                                        continue;
                                    }
                                    let s = sign((n1 + m1) * (l2 - n2 + lm)).mul(&cgc_get(&tab, l, m1, m2, m));
                                    rhs.add_scaled(&t1.get(n1, m1).mul(&t2.get(n2, m2)), &s);
                                }
                                rep.check(format!("product-alt1 ({l1},{l2};{lam}) l={l} n=({n1},{n2}) m={m}"), &lhs, &rhs, samples);
                            }
                        }
                    }
                    // Second alternate.
                    for n1 in range(l1) {
                        for n2 in range(l2) {
                            for mp in range(l) {
                                let mut lhs = AElement::zero();
                                for m in range(l) {
                                    let s = sign((mp + m) * (l1 + l2 + l + lm)).mul(&cgc_get(&tab, l, n1, n2, m));
                                    lhs.add_scaled(&tl.get(mp, m), &s);
                                }
                                let mut rhs = AElement::zero();
                                for m1p in range(l1) {
                                    let m2p = mp - m1p;
                                    if m2p.abs() > l2 {
                                        continue;
                                    }
                                    let s = sign((n2 + m2p) * (l1 - n1 + lm)).mul(&cgc_get(&tab, l, m1p, m2p, mp));
                                    rhs.add_scaled(&t1.get(m1p, n1).mul(&t2.get(m2p, n2)), &s);
                                }
                                rep.check(format!("product-alt2 ({l1},{l2};{lam}) l'={l} n=({n1},{n2}) m'={mp}"), &lhs, &rhs, samples);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Both orthogonality relations. Case ids `ortho1` use the stated sign
/// `m₁(m₁+m)`, `ortho1-corrected` use `m₂(m₁+m)`; `ortho2` is as stated.
pub fn suite_ortho(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("ortho");
    for l in 0..=max_l {
        for lam in 0..2u32 {
            let t = t_matrix(l, lam)?;
            for m1 in range(l) {
                for m2 in range(l) {
                    let delta = if m1 == m2 { AElement::one() } else { AElement::zero() };
                    let mut printed = AElement::zero();
                    let mut corrected = AElement::zero();
                    let mut second = AElement::zero();
                    for m in range(l) {
                        let tail = m1 * (m1 - 1) / 2 + m * (m - 1) / 2;
                        let qf = Scalar::s_pow((m1 - m) as i32);
                        let p0 = t.get(m1, m).mul(&t.get(-m2, -m));
                        printed.add_scaled(&p0, &sign(m1 * (m1 + m) + tail).mul(&qf));
                        corrected.add_scaled(&p0, &sign(m2 * (m1 + m) + tail).mul(&qf));
                        let p1 = t.get(m, m1).mul(&t.get(-m, -m2));
                        second.add_scaled(&p1, &sign((m1 + m) * m1 + tail).mul(&qf));
                    }
                    let tag = format!("({l};{lam}) [{m1},{m2}]");
                    rep.check(format!("ortho1 {tag}"), &printed, &delta, samples);
                    rep.check(format!("ortho1-corrected {tag}"), &corrected, &delta, samples);
                    rep.check(format!("ortho2 {tag}"), &second, &delta, samples);
                }
            }
        }
    }
    Ok(rep)
}

/// Which reading of the recurrence relations to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// As stated, with the ambiguous `b`-term index of the third set read
    /// as `m`.
    Printed,
    /// As stated, with that index read as `m + 1`.
    PrintedAlt,
    /// Coefficients re-derived from the first alternate product law.
    Corrected,
}

struct RecCtx<'a> {
    l: i64,
    lam: i64,
    low: &'a TMatrix,
    fund: &'a TMatrix,
}

impl RecCtx<'_> {
    fn f(&self, m: i64, a: i64, b: i64) -> Result<Scalar> {
        root(&[self.l + m + a, self.l + m + b])
    }

    fn g(&self, m: i64, a: i64, b: i64) -> Result<Scalar> {
        root(&[2, self.l + m + a, self.l - m + b])
    }

    fn h(&self, m: i64) -> Scalar {
        let l = self.l;
        Scalar::s_pow(-l as i32).mul(&kbr(l + m + 1)).sub(&sign(l - m).mul(&Scalar::s_pow(l as i32)).mul(&kbr(l - m + 1)))
    }

    /// `coeff · T^{low}_{r,c} · T^1_{fr,fc}`.
    fn term(&self, coeff: Scalar, r: i64, c: i64, fr: i64, fc: i64) -> AElement {
        self.low.get(r, c).mul(&self.fund.get(fr, fc)).scale(&coeff)
    }
}

/// One recurrence relation: returns `(lhs coefficient, rhs element)`, the
/// relation reading `lhs · T^ℓ_{nm}(Λ) = rhs`.
fn recurrence(set: u8, n2: i64, rd: Reading, cx: &RecCtx, n: i64, m: i64) -> Result<(Scalar, AElement)> {
    let (l, lam) = (cx.l, cx.lam);
    let fixed = rd == Reading::Corrected;
    let s = |k: i64| Scalar::s_pow(k as i32);
    let r2 = inv(&kbr(2)).sqrt()?;
    let mut rhs = AElement::zero();
    let lhs;
    match (set, n2) {
        (1, 1) => {
            lhs = sign((n + m) * lam).mul(&s(-(l - n))).mul(&cx.f(n, 0, -1)?);
            let alpha_sign = if fixed { Scalar::one() } else { sign(lam).neg() };
            rhs.add_assign(&cx.term(s(-(l - m)).mul(&cx.f(m, 0, -1)?), n - 1, m - 1, 1, 1));
            rhs.add_assign(&cx.term(alpha_sign.mul(&s(m)).mul(&cx.g(m, 0, 0)?), n - 1, m, 1, 0));
            rhs.add_assign(&cx.term(s(l + m).mul(&cx.f(-m, 0, -1)?), n - 1, m + 1, 1, -1));
        }
        (1, 0) => {
            lhs = sign((n + m) * (1 + lam)).mul(&s(n)).mul(&cx.g(n, 0, 0)?);
            rhs.add_assign(&cx.term(s(-(l - m)).mul(&cx.f(m, 0, -1)?).neg(), n, m - 1, 0, 1));
            rhs.add_assign(&cx.term(s(m).mul(&cx.g(m, 0, 0)?), n, m, 0, 0));
            rhs.add_assign(&cx.term(s(l + m).mul(&cx.f(-m, 0, -1)?).neg(), n, m + 1, 0, -1));
        }
        (1, -1) => {
            let ls = if fixed { sign((n + m) * lam) } else { sign((n + m) * (1 + lam)) };
            lhs = ls.mul(&s(l + n)).mul(&cx.f(-n, 0, -1)?);
            // The printed last factor is β = T^1_{0,-1}; the corrected one is d.
            let last = if fixed { (-1, -1) } else { (0, -1) };
            rhs.add_assign(&cx.term(s(-(l - m)).mul(&cx.f(m, 0, -1)?), n + 1, m - 1, -1, 1));
            rhs.add_assign(&cx.term(s(m).mul(&cx.g(m, 0, 0)?), n + 1, m, -1, 0));
            rhs.add_assign(&cx.term(s(l + m).mul(&cx.f(-m, 0, -1)?), n + 1, m + 1, last.0, last.1));
        }
        (2, 1) => {
            lhs = sign(l - n + lam + (n + m + 1) * lam).mul(&s(n - m)).mul(&cx.g(n, 0, 1)?);
            let third = if fixed { Scalar::one() } else { r2.clone() };
            rhs.add_assign(&cx.term(sign(l - m).mul(&cx.g(m, 0, 1)?), n - 1, m - 1, 1, 1));
            rhs.add_assign(&cx.term(cx.h(m).neg(), n - 1, m, 1, 0));
            rhs.add_assign(&cx.term(third.mul(&cx.g(m, 1, 0)?), n - 1, m + 1, 1, -1));
        }
        (2, 0) => {
            lhs = sign((n + m) * (1 + lam)).mul(&s(n - m)).mul(&cx.h(n));
            let third = if fixed { Scalar::one() } else { r2.clone() };
            rhs.add_assign(&cx.term(sign(l - m).mul(&cx.g(m, 0, 1)?), n, m - 1, 0, 1));
            rhs.add_assign(&cx.term(cx.h(m), n, m, 0, 0));
            rhs.add_assign(&cx.term(third.mul(&cx.g(m, 1, 0)?), n, m + 1, 0, -1));
        }
        (2, -1) => {
            lhs = if fixed {
                sign((n + m) * lam).mul(&s(n - m)).mul(&cx.g(n, 1, 0)?)
            } else {
                sign((n + m) * lam).mul(&s(n - m)).mul(&r2).mul(&cx.g(n, 0, 1)?)
            };
            let third = if fixed { Scalar::one() } else { r2.clone() };
            rhs.add_assign(&cx.term(sign(l - m).mul(&cx.g(m, 0, 1)?), n + 1, m - 1, -1, 1));
            rhs.add_assign(&cx.term(cx.h(m).neg(), n + 1, m, -1, 0));
            rhs.add_assign(&cx.term(third.mul(&cx.g(m, 1, 0)?), n + 1, m + 1, -1, -1));
        }
        (3, 1) => {
            let base = s(l - m + n + 1).mul(&cx.f(-n, 1, 2)?);
            lhs = if fixed { base.mul(&sign((n + m) * lam)) } else { base };
            let alpha_sign = if fixed { sign(l - m) } else { sign(l - m + lam) };
            let b_col = if rd == Reading::Printed { m } else { m + 1 };
            rhs.add_assign(&cx.term(s(l + 1).mul(&cx.f(-m, 1, 2)?), n - 1, m - 1, 1, 1));
            rhs.add_assign(&cx.term(alpha_sign.mul(&cx.g(m, 1, 1)?), n - 1, m, 1, 0));
            rhs.add_assign(&cx.term(s(-(l + 1)).mul(&cx.f(m, 1, 2)?).neg(), n - 1, b_col, 1, -1));
        }
        (3, 0) => {
            let ls = if fixed { sign(l - n + (n + m) * (1 + lam)).neg() } else { sign(l - n + lam) };
            lhs = ls.mul(&s(n - m)).mul(&cx.g(n, 1, 1)?);
            let e_sign = if fixed { sign(l - m).neg() } else { sign(l - m + lam) };
            rhs.add_assign(&cx.term(s(l + 1).mul(&cx.f(-m, 1, 2)?), n, m - 1, 0, 1));
            rhs.add_assign(&cx.term(e_sign.mul(&cx.g(m, 1, 1)?), n, m, 0, 0));
            rhs.add_assign(&cx.term(s(-(l + 1)).mul(&cx.f(m, 1, 2)?).neg(), n, m + 1, 0, -1));
        }
        (3, -1) => {
            let base = s(-(l - n + m + 1)).mul(&cx.f(n, 1, 2)?);
            lhs = if fixed { base.mul(&sign((n + m) * lam)) } else { base };
            let delta_sign = if fixed { sign(l - m).neg() } else { sign(l - m + lam).neg() };
            rhs.add_assign(&cx.term(s(l + 1).mul(&cx.f(-m, 1, 2)?).neg(), n + 1, m - 1, -1, 1));
            rhs.add_assign(&cx.term(delta_sign.mul(&cx.g(m, 1, 1)?), n + 1, m, -1, 0));
            rhs.add_assign(&cx.term(s(-(l + 1)).mul(&cx.f(m, 1, 2)?), n + 1, m + 1, -1, -1));
        }
        _ => return Err(Error::IndexOutOfRange(format!("recurrence set {set}, n2 = {n2}"))),
    }
    Ok((lhs, rhs))
}

/// All nine recurrence relations for `ℓ₁ <= max_l1` in the given reading.
/// Case ids: `recurrence{set} n2={n2} ({ℓ₁};{λ}) [n,m]`.
pub fn suite_recurrence(max_l1: i64, rd: Reading, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("recurrence");
    for lam in 0..2u32 {
        let fund = t_matrix(1, lam)?;
        for l1 in 0..=max_l1 {
            let low = t_matrix(l1, lam)?;
            for set in 1..=3u8 {
                let l = match set {
                    1 => l1 + 1,
                    2 => l1,
                    _ => l1 - 1,
                };
                if l < 0 {
                    continue;
                }
                let big = t_matrix(l, coupled_parity(l1, 1, l))?;
                let cx = RecCtx { l, lam: lam as i64, low: &low, fund: &fund };
                for n2 in [1i64, 0, -1] {
                    for n in range(l) {
                        for m in range(l) {
                            let (c, rhs) = recurrence(set, n2, rd, &cx, n, m)?;
                            let lhs = big.get(n, m).scale(&c);
                            rep.check(format!("recurrence{set} n2={n2} ({l1};{lam}) [{n},{m}]"), &lhs, &rhs, samples);
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{Status, DEFAULT_SAMPLES};

    fn ok(r: &Report) {
        let bad: Vec<_> = r.cases.iter().filter(|c| c.status == Status::Fail).map(|c| (&c.id, &c.details)).collect();
        assert!(bad.is_empty(), "{} failures: {:?}", bad.len(), &bad[..bad.len().min(3)]);
    }

    #[test]
    fn trivial_and_corner_entries() {
        let t0 = t_matrix(0, 0).unwrap();
        assert_eq!(t0.get(0, 0), AElement::one());
        let t = t_matrix(1, 0).unwrap();
        assert_eq!(t.get(-1, -1), aalg::k(-1));
        let b = mono(2, 0, -1, 0).scale(&Scalar::q_pow(-1).mul(&inv(&kbr(2))).neg());
        assert_eq!(t.get(1, -1), b);
        assert!(t_matrix(-1, 0).is_err());
    }

    #[test]
    fn p_polynomial_examples() {
        for l in 0..=3 {
            for m in -l..=l {
                assert_eq!(p_polynomial(l, -l, m).unwrap(), alloc::vec![Scalar::one()]);
                assert_eq!(p_polynomial(l, m, -l).unwrap(), alloc::vec![Scalar::one()]);
            }
        }
        assert_eq!(p_polynomial(2, 1, 0).unwrap(), p_polynomial(2, 0, 1).unwrap());
        assert_eq!(p_polynomial(1, 0, 0).unwrap().len(), 2);
    }

    #[test]
    fn fundamental_and_construction() {
        ok(&suite_fundamental(&DEFAULT_SAMPLES).unwrap());
        ok(&suite_construction(2, &DEFAULT_SAMPLES).unwrap());
    }
}
