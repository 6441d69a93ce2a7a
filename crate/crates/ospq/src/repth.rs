//! Finite-dimensional irreducible representations of `U`, Clebsch-Gordan
//! coefficients and the universal R-matrix on tensor products.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{flip, Monomial};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::report::Report;
use crate::scalar::brackets::{kbr, q_minus_qinv, sq_fact, sq_inv_fact};
use crate::scalar::Scalar;
use crate::ualg::{self, UElement, UMono, UTensor};

pub type SMat = Mat<Scalar>;

fn odd(p: u32) -> bool {
    p % 2 == 1
}

fn sign_of(e: i64) -> Scalar {
    Scalar::sign(e)
}

/// The irrep `V^{(ℓ)}` with highest-weight parity `λ`, basis ordered
/// `m = ℓ, ℓ-1, …, -ℓ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Irrep {
    pub ell: u32,
    pub lambda: u32,
    pub h: SMat,
    pub vp: SMat,
    pub vm: SMat,
}

impl Irrep {
    pub fn dim(&self) -> usize {
        2 * self.ell as usize + 1
    }

    pub fn m_of(&self, i: usize) -> i64 {
        self.ell as i64 - i as i64
    }

    pub fn index_of(&self, m: i64) -> usize {
        (self.ell as i64 - m) as usize
    }

    /// Parity `ℓ - m + λ` of the `i`-th basis vector.
    pub fn parity(&self, i: usize) -> u32 {
        (i as u32 + self.lambda) % 2
    }

    pub fn parities(&self) -> Vec<u32> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    /// `q^{jH} = diag(q^{jm/2})`.
    pub fn g(&self, j: i32) -> SMat {
        Mat::diag((0..self.dim()).map(|i| Scalar::s_pow(j * self.m_of(i) as i32)).collect())
    }
}

/// `√({a}{b}/{2})`.
fn root_entry(a: i64, b: i64) -> Result<Scalar> {
    kbr(a).mul(&kbr(b)).div(&kbr(2))?.sqrt()
}

pub fn irrep(ell: i64, lambda: u32) -> Result<Irrep> {
    if ell < 0 {
        return Err(Error::NegativeArgument(ell));
    }
    let n = 2 * ell as usize + 1;
    let l = ell;
    let mut h = Mat::zeros(n, n);
    let mut vp = Mat::zeros(n, n);
    let mut vm = Mat::zeros(n, n);
    for i in 0..n {
        let m = l - i as i64;
        h.set(i, i, Scalar::frac(m, 2));
        if m < l {
            vp.set(i - 1, i, root_entry(l - m, l + m + 1)?);
        }
        if m > -l {
            vm.set(i + 1, i, sign_of(l - m - 1).mul(&root_entry(l + m, l - m + 1)?));
        }
    }
    Ok(Irrep { ell: ell as u32, lambda: lambda % 2, h, vp, vm })
}

/// Evaluation homomorphism `U -> End(V^{(ℓ)})`.
pub fn rep_apply(u: &UElement, rho: &Irrep) -> SMat {
    let n = rho.dim();
    let mut out = Mat::zeros(n, n);
    for (mono, c) in u.terms() {
        let m = rho.vp.pow(mono.a).mul(&rho.h.pow(mono.b)).mul(&rho.g(mono.m)).mul(&rho.vm.pow(mono.d));
        out = out.add(&m.scale(c));
    }
    out
}

/// Graded tensor product of operators: `(A ⊗ B)(v ⊗ w) = (-1)^{p(B)p(v)} Av ⊗ Bw`,
/// with `par_v` the parities of the first space.
pub fn graded_kron(a: &SMat, b: &SMat, p_b: u32, par_v: &[u32]) -> SMat {
    a.kron_signed(b, |j1, _, _| odd(p_b * par_v[j1]))
}

/// Parities of a tensor product space.
pub fn tensor_parities(p1: &[u32], p2: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(p1.len() * p2.len());
    for a in p1 {
        for b in p2 {
            out.push((a + b) % 2);
        }
    }
    out
}

/// Operator `X₁ ⊗ X₂ ⊗ …` on a graded tensor product; `None` is the identity.
pub fn embed(factors: &[(Option<(&SMat, u32)>, &Irrep)]) -> SMat {
    let mut acc: Option<(SMat, Vec<u32>)> = None;
    for (op, rho) in factors {
        let (m, p) = match op {
            Some((m, p)) => ((*m).clone(), *p),
            None => (Mat::identity(rho.dim()), 0),
        };
        acc = Some(match acc {
            None => (m, rho.parities()),
            Some((prev, par)) => {
                let next = graded_kron(&prev, &m, p, &par);
                let par2 = tensor_parities(&par, &rho.parities());
                (next, par2)
            }
        });
    }
    acc.map(|(m, _)| m).unwrap_or_else(|| Mat::identity(1))
}

/// `ρ₁ ⊗ ρ₂` on an element of `U ⊗ U`.
pub fn rep_apply2(t: &UTensor, r1: &Irrep, r2: &Irrep) -> SMat {
    let mut out = Mat::zeros(r1.dim() * r2.dim(), r1.dim() * r2.dim());
    let par = r1.parities();
    for ((u1, u2), c) in t.terms() {
        let a = rep_apply(&UElement::mono(*u1), r1);
        let b = rep_apply(&UElement::mono(*u2), r2);
        out = out.add(&graded_kron(&a, &b, u2.parity(), &par).scale(c));
    }
    out
}

/// `q^{4H⊗H}` on the factors `i < j` of a tensor product: `q^{m_i m_j}`.
fn hh_diag(reps: &[&Irrep], i: usize, j: usize, sign: i32) -> SMat {
    let dims: Vec<usize> = reps.iter().map(|r| r.dim()).collect();
    let total: usize = dims.iter().product();
    let mut d = Vec::with_capacity(total);
    for idx in 0..total {
        let mut rest = idx;
        let mut ms = vec![0i64; reps.len()];
        for k in (0..reps.len()).rev() {
            ms[k] = reps[k].m_of(rest % dims[k]);
            rest /= dims[k];
        }
        d.push(Scalar::s_pow(sign * 2 * (ms[i] * ms[j]) as i32));
    }
    Mat::diag(d)
}

/// The non-Cartan part `Σ_k c_k (q^H V₊ ⊗ q^{-H} V₋)^k` of the universal
/// R-matrix up to `k <= kmax`; with `inverse_q` the same with `q -> q^-1`.
pub fn r_series(kmax: u32, inverse_q: bool) -> UTensor {
    let (gp, gm) = if inverse_q { (-1, 1) } else { (1, -1) };
    let x = crate::algebra::tensor(&ualg::g(gp).mul(&ualg::vplus()), &ualg::g(gm).mul(&ualg::vminus()));
    let mut out = UTensor::zero();
    let mut p = UTensor::one();
    for k in 0..=kmax {
        if k > 0 {
            p = p.mul(&x);
        }
        let ki = k as i32;
        let c = if inverse_q {
            // (q^-1 - q)^k q^{k/2} / ⟦k⟧!
            q_minus_qinv().neg().pow(k).mul(&Scalar::s_pow(ki)).div(&sq_fact(k as i64)).expect("nonzero")
        } else {
            q_minus_qinv().pow(k).mul(&Scalar::s_pow(-ki)).div(&sq_inv_fact(k as i64)).expect("nonzero")
        };
        out.add_assign(&p.scale(&c));
    }
    out
}

fn kmax(r1: &Irrep, r2: &Irrep) -> u32 {
    (2 * r1.ell).min(2 * r2.ell)
}

/// `R` on `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`.
pub fn r_matrix(r1: &Irrep, r2: &Irrep) -> SMat {
    hh_diag(&[r1, r2], 0, 1, 1).mul(&rep_apply2(&r_series(kmax(r1, r2), false), r1, r2))
}

/// `R` with `q -> q^{-1}` (including `q^H -> q^{-H}`) on `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`.
pub fn r_matrix_inv_q(r1: &Irrep, r2: &Irrep) -> SMat {
    hh_diag(&[r1, r2], 0, 1, -1).mul(&rep_apply2(&r_series(kmax(r1, r2), true), r1, r2))
}

/// Which tensor factor of `R` the antipode acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

fn antipode_rep(u: &UMono, inverse: bool, r: &Irrep) -> SMat {
    let el = UElement::mono(*u);
    // S^2 = Ad(g^-2), so S^-1(u) = S(g^2 u g^-2).
    let el = if inverse { ualg::g(2).mul(&el).mul(&ualg::g(-2)) } else { el };
    rep_apply(&ualg::antipode(&el), r)
}

/// `(S^{±1} ⊗ id)R` or `(id ⊗ S^{±1})R`, from `R = q^{4H⊗H} Σ a_j ⊗ b_j`.
pub fn r_matrix_antipode_on(r1: &Irrep, r2: &Irrep, factor: Factor, inverse: bool) -> SMat {
    let dinv = hh_diag(&[r1, r2], 0, 1, -1);
    let n = r1.dim() * r2.dim();
    let mut out = Mat::zeros(n, n);
    for ((a, b), c) in r_series(kmax(r1, r2), false).terms() {
        let term = match factor {
            // Σ (S(a) ⊗ 1) q^{-4H⊗H} (1 ⊗ b)
            Factor::First => {
                let sa = antipode_rep(a, inverse, r1);
                let rb = rep_apply(&UElement::mono(*b), r2);
                let left = embed(&[(Some((&sa, a.parity())), r1), (None, r2)]);
                let right = embed(&[(None, r1), (Some((&rb, b.parity())), r2)]);
                left.mul(&dinv).mul(&right)
            }
            // Σ ± (1 ⊗ S(b)) q^{-4H⊗H} (a ⊗ 1)
            Factor::Second => {
                let ra = rep_apply(&UElement::mono(*a), r1);
                let sb = antipode_rep(b, inverse, r2);
                let left = embed(&[(None, r1), (Some((&sb, b.parity())), r2)]);
                let right = embed(&[(Some((&ra, a.parity())), r1), (None, r2)]);
                let t = left.mul(&dinv).mul(&right);
                if odd(a.parity()) && odd(b.parity()) {
                    t.neg()
                } else {
                    t
                }
            }
        };
        out = out.add(&term.scale(c));
    }
    out
}

/// `(S ⊗ id)R`.
pub fn r_matrix_antipode(r1: &Irrep, r2: &Irrep) -> SMat {
    r_matrix_antipode_on(r1, r2, Factor::First, false)
}

/// Graded swap `V_a ⊗ V_b -> V_b ⊗ V_a`, `v ⊗ w -> (-1)^{p(v)p(w)} w ⊗ v`.
pub fn graded_swap(ra: &Irrep, rb: &Irrep) -> SMat {
    let (da, db) = (ra.dim(), rb.dim());
    let mut out = Mat::zeros(da * db, da * db);
    for i in 0..da {
        for j in 0..db {
            let s = if odd(ra.parity(i) * rb.parity(j)) { -1 } else { 1 };
            out.set(j * da + i, i * db + j, Scalar::from_int(s));
        }
    }
    out
}

/// `R₂₁` on `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`.
pub fn r21_matrix(r1: &Irrep, r2: &Irrep) -> SMat {
    graded_swap(r2, r1).mul(&r_matrix(r2, r1)).mul(&graded_swap(r1, r2))
}

/// `R_{ij}` on a triple tensor product.
pub fn r_embedded(reps: [&Irrep; 3], i: usize, j: usize) -> SMat {
    let d = hh_diag(&reps, i, j, 1);
    let total: usize = reps.iter().map(|r| r.dim()).product();
    let mut sum = Mat::zeros(total, total);
    for ((a, b), c) in r_series(kmax(reps[i], reps[j]), false).terms() {
        let ra = rep_apply(&UElement::mono(*a), reps[i]);
        let rb = rep_apply(&UElement::mono(*b), reps[j]);
        let mut f: [(Option<(&SMat, u32)>, &Irrep); 3] = [(None, reps[0]), (None, reps[1]), (None, reps[2])];
        f[i].0 = Some((&ra, a.parity()));
        f[j].0 = Some((&rb, b.parity()));
        sum = sum.add(&embed(&f).scale(c));
    }
    d.mul(&sum)
}

/// Clebsch-Gordan table for `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}` at parity `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct CgcTable {
    pub l1: u32,
    pub l2: u32,
    pub lambda: u32,
    /// `(ℓ, m₁, m₂) -> C`, `m = m₁ + m₂`.
    pub coeffs: BTreeMap<(i64, i64, i64), Scalar>,
    /// Norm of the unnormalised highest-weight vector, per `ℓ`.
    pub norms: BTreeMap<i64, Scalar>,
}

impl CgcTable {
    pub fn get(&self, l: i64, m1: i64, m2: i64, m: i64) -> Scalar {
        if m1 + m2 != m {
            return Scalar::zero();
        }
        self.coeffs.get(&(l, m1, m2)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn ls(&self) -> core::ops::RangeInclusive<i64> {
        (self.l1 as i64 - self.l2 as i64).abs()..=(self.l1 + self.l2) as i64
    }
}

/// `Δ(u)` for `u ∈ {H, V±, g}` represented on a tensor product.
fn delta_rep(u: &UElement, r1: &Irrep, r2: &Irrep) -> SMat {
    rep_apply2(&ualg::coproduct(u), r1, r2)
}

fn column(n: usize, entries: &[(usize, Scalar)]) -> SMat {
    let mut v = Mat::zeros(n, 1);
    for (i, c) in entries {
        v.set(*i, 0, c.clone());
    }
    v
}

/// CGCs for all `ℓ` in `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`: highest-weight vector from
/// `Δ(V₊) v = 0`, pseudo-norm `±1`, phase `C(ℓ₁ ℓ₂ ℓ; ℓ₁, ℓ-ℓ₁) > 0` at
/// `q ∈ (0,1)`, then lowering with `Δ(V₋)`.
pub fn cgc(l1: i64, l2: i64, lambda: u32) -> Result<CgcTable> {
    let r1 = irrep(l1, lambda)?;
    let r2 = irrep(l2, lambda)?;
    let n2 = r2.dim();
    let n = r1.dim() * n2;
    let idx = |m1: i64, m2: i64| r1.index_of(m1) * n2 + r2.index_of(m2);
    let sgn = |m1: i64, m2: i64| ((l1 - m1 + lambda as i64) * (l2 - m2 + lambda as i64)).rem_euclid(2);
    let p = delta_rep(&ualg::vplus(), &r1, &r2);
    let mm = delta_rep(&ualg::vminus(), &r1, &r2);
    let mut coeffs = BTreeMap::new();
    let mut norms = BTreeMap::new();
    let lo = (l1 - l2).abs();
    for l in lo..=(l1 + l2) {
        // c(m1) on e_{m1} ⊗ e_{l - m1}
        let mut c: BTreeMap<i64, Scalar> = BTreeMap::new();
        c.insert(l1, Scalar::one());
        let mut n1 = l1;
        while l - (n1 - 1) <= l2 && n1 > -l1 {
            let row = idx(n1, l + 1 - n1);
            let from_right = p.get(row, idx(n1, l - n1));
            let from_left = p.get(row, idx(n1 - 1, l + 1 - n1));
            let next = from_right.mul(&c[&n1]).neg().div(&from_left)?;
            c.insert(n1 - 1, next);
            n1 -= 1;
        }
        let mut norm = Scalar::zero();
        for (&m1, v) in &c {
            let t = v.mul(v);
            norm.add_assign(&if sgn(m1, l - m1) == 1 { t.neg() } else { t });
        }
        let positive = norm.eval(0.5)? > 0.0;
        let abs = if positive { norm.clone() } else { norm.neg() };
        let mut root = abs.sqrt()?;
        if root.eval(0.5)? < 0.0 {
            root = root.neg();
        }
        let inv = root.inv()?;
        let entries: Vec<(usize, Scalar)> = c.iter().map(|(&m1, v)| (idx(m1, l - m1), v.mul(&inv))).collect();
        let mut vec = column(n, &entries);
        norms.insert(l, norm);
        let rl = irrep(l, 0)?;
        let mut m = l;
        loop {
            for m1 in -l1..=l1 {
                let m2 = m - m1;
                if m2.abs() <= l2 {
                    let v = vec.get(idx(m1, m2), 0);
                    if !v.is_zero() {
                        coeffs.insert((l, m1, m2), v);
                    }
                }
            }
            if m == -l {
                break;
            }
            let co = rl.vm.get(rl.index_of(m - 1), rl.index_of(m));
            vec = mm.mul(&vec).scale(&co.inv()?);
            m -= 1;
        }
    }
    Ok(CgcTable { l1: l1 as u32, l2: l2 as u32, lambda, coeffs, norms })
}

/// R-matrix properties on `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`, `ℓᵢ <= max_l`.
///
/// Case ids: `inverse`, `antipode` and `intertwine` are the stated
/// properties; `intertwine-rev`, `antipode-alt` and `r21` are diagnostics
/// locating the convention in which the formula for `R` is quasitriangular.
pub fn suite_r_properties(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("r_matrix");
    let gens: [(&str, UElement); 4] = [("H", ualg::h()), ("V+", ualg::vplus()), ("V-", ualg::vminus()), ("g", ualg::g(1))];
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for lam in 0..2u32 {
                let r1 = irrep(l1, lam)?;
                let r2 = irrep(l2, lam)?;
                let tag = format!("({l1},{l2};{lam})");
                let r = r_matrix(&r1, &r2);
                let rinv = r_matrix_inv_q(&r1, &r2);
                let id = Mat::identity(r1.dim() * r2.dim());
                rep.check(format!("inverse R R(q^-1) = 1 {tag}"), &r.mul(&rinv), &id, samples);
                rep.check(format!("inverse R(q^-1) R = 1 {tag}"), &rinv.mul(&r), &id, samples);
                let rs = r_matrix_antipode(&r1, &r2);
                rep.check(format!("antipode R (S(x)id)R = 1 {tag}"), &r.mul(&rs), &id, samples);
                rep.check(format!("antipode (S(x)id)R = R(q^-1) {tag}"), &rs, &rinv, samples);
                let r21 = r21_matrix(&r1, &r2);
                for (name, u) in &gens {
                    let d = rep_apply2(&ualg::coproduct(u), &r1, &r2);
                    let dp = rep_apply2(&flip(&ualg::coproduct(u)), &r1, &r2);
                    rep.check(format!("intertwine R D({name}) = D'({name}) R {tag}"), &r.mul(&d), &dp.mul(&r), samples);
                    rep.check(format!("intertwine-rev D({name}) R = R D'({name}) {tag}"), &d.mul(&r), &r.mul(&dp), samples);
                    rep.check(format!("r21 R21 D({name}) = D'({name}) R21 {tag}"), &r21.mul(&d), &dp.mul(&r21), samples);
                }
                let alt = [("S^-1(x)id", Factor::First, true), ("id(x)S", Factor::Second, false), ("id(x)S^-1", Factor::Second, true)];
                for (name, f, inv) in alt {
                    let m = r_matrix_antipode_on(&r1, &r2, f, inv);
                    rep.check(format!("antipode-alt R ({name})R = 1 {tag}"), &r.mul(&m), &id, samples);
                }
                let r21s = graded_swap(&r2, &r1).mul(&r_matrix_antipode_on(&r2, &r1, Factor::Second, false)).mul(&graded_swap(&r1, &r2));
                rep.check(format!("r21 R21 (S(x)id)R21 = 1 {tag}"), &r21.mul(&r21s), &id, samples);
            }
        }
    }
    Ok(rep)
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on all triples with `ℓᵢ <= max_l`.
pub fn suite_ybe(max_l: i64, lambdas: &[u32], samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("ybe");
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for l3 in 0..=max_l {
                for &lam in lambdas {
                    let (a, b, c) = (irrep(l1, lam)?, irrep(l2, lam)?, irrep(l3, lam)?);
                    let reps = [&a, &b, &c];
                    let r12 = r_embedded(reps, 0, 1);
                    let r13 = r_embedded(reps, 0, 2);
                    let r23 = r_embedded(reps, 1, 2);
                    let lhs = r12.mul(&r13).mul(&r23);
                    let rhs = r23.mul(&r13).mul(&r12);
                    rep.check(format!("YBE ({l1},{l2},{l3};{lam})"), &lhs, &rhs, samples);
                }
            }
        }
    }
    Ok(rep)
}

/// `[H, V±] = ±V±/2`, `{V₊, V₋} = -[2H]` in each irrep.
pub fn suite_relations(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("relations");
    for l in 0..=max_l {
        for lam in 0..2u32 {
            let r = irrep(l, lam)?;
            let tag = format!("({l};{lam})");
            let half = Scalar::frac(1, 2);
            rep.check(format!("[H,V+] = V+/2 {tag}"), &r.h.mul(&r.vp).sub(&r.vp.mul(&r.h)), &r.vp.scale(&half), samples);
            rep.check(format!("[H,V-] = -V-/2 {tag}"), &r.h.mul(&r.vm).sub(&r.vm.mul(&r.h)), &r.vm.scale(&half.neg()), samples);
            let anti = r.vp.mul(&r.vm).add(&r.vm.mul(&r.vp));
            // -[2H] = -(q^{2H} - q^{-2H})/(q - q^{-1})
            let br = r.g(2).sub(&r.g(-2)).scale(&q_minus_qinv().inv()?).neg();
            rep.check(format!("{{V+,V-}} = -[2H] {tag}"), &anti, &br, samples);
            let via_u = rep_apply(&ualg::bracket_2h(), &r);
            rep.check(format!("rep_apply([2H]) {tag}"), &via_u, &br.neg(), samples);
        }
    }
    Ok(rep)
}

fn pm1(e: i64) -> Scalar {
    Scalar::sign(e.rem_euclid(2))
}

/// Pseudo-orthogonality, reversal and norm relations of the CGCs.
pub fn suite_cgc(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("cgc");
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for lam in 0..2u32 {
                let t = cgc(l1, l2, lam)?;
                let la = lam as i64;
                let tag = format!("({l1},{l2};{lam})");
                let ls: Vec<i64> = t.ls().collect();
                let sg12 = |m1: i64, m2: i64| pm1((l1 - m1 + la) * (l2 - m2 + la));
                let sgl = |l: i64, m: i64| pm1((l - m + la) * (l1 + l2 + l + la));
                // first orthogonality
                for &l in &ls {
                    for &lp in &ls {
                        for m in -l..=l {
                            for mp in -lp..=lp {
                                let mut acc = Scalar::zero();
                                for m1 in -l1..=l1 {
                                    let m2 = m - m1;
                                    if m2.abs() > l2 {
                                        continue;
                                    }
                                    acc.add_assign(&sg12(m1, m2).mul(&t.get(l, m1, m2, m)).mul(&t.get(lp, m1, m2, mp)));
                                }
                                let want = if (l, m) == (lp, mp) { sgl(l, m) } else { Scalar::zero() };
                                rep.check(format!("cgc-ortho1 {tag} l={l} m={m} l'={lp} m'={mp}"), &acc, &want, samples);
                            }
                        }
                    }
                }
                // second orthogonality and reversal
                for m1 in -l1..=l1 {
                    for m2 in -l2..=l2 {
                        for m1p in -l1..=l1 {
                            for m2p in -l2..=l2 {
                                if m1 + m2 != m1p + m2p {
                                    continue;
                                }
                                let m = m1 + m2;
                                let mut acc = Scalar::zero();
                                let mut rev = Scalar::zero();
                                for &l in &ls {
                                    if m.abs() > l {
                                        continue;
                                    }
                                    let cc = t.get(l, m1, m2, m).mul(&t.get(l, m1p, m2p, m));
                                    acc.add_assign(&sgl(l, m).mul(&cc));
                                    rev.add_assign(&pm1((l - m) * (l1 + l2 + l)).mul(&cc));
                                }
                                let rev = pm1((l1 - m1) * (l2 - m2)).mul(&rev);
                                let diag = (m1, m2) == (m1p, m2p);
                                let want = if diag { sg12(m1, m2) } else { Scalar::zero() };
                                rep.check(format!("cgc-ortho2 {tag} ({m1},{m2}) ({m1p},{m2p})"), &acc, &want, samples);
                                let want = if diag { Scalar::one() } else { Scalar::zero() };
                                rep.check(format!("cgc-reverse {tag} ({m1},{m2}) ({m1p},{m2p})"), &rev, &want, samples);
                            }
                        }
                    }
                }
                // cgc-norm: graded inner product of the coupled vectors
                let r1 = irrep(l1, lam)?;
                let r2 = irrep(l2, lam)?;
                let n2 = r2.dim();
                let mut gram = Mat::zeros(r1.dim() * n2, r1.dim() * n2);
                for i1 in 0..r1.dim() {
                    for i2 in 0..n2 {
                        gram.set(i1 * n2 + i2, i1 * n2 + i2, pm1((r1.parity(i1) * r2.parity(i2)) as i64));
                    }
                }
                let mut cols: Vec<(i64, i64)> = Vec::new();
                let mut w = Mat::zeros(r1.dim() * n2, (r1.dim() * n2).max(1));
                for &l in &ls {
                    for m in -l..=l {
                        let k = cols.len();
                        cols.push((l, m));
                        for m1 in -l1..=l1 {
                            let m2 = m - m1;
                            if m2.abs() <= l2 {
                                w.set(r1.index_of(m1) * n2 + r2.index_of(m2), k, t.get(l, m1, m2, m));
                            }
                        }
                    }
                }
                let g = w.transpose().mul(&gram).mul(&w);
                let mut want = Mat::zeros(cols.len(), cols.len());
                for (k, &(l, m)) in cols.iter().enumerate() {
                    want.set(k, k, sgl(l, m));
                }
                rep.check(format!("cgc-norm {tag}"), &g, &want, samples);
                // parity-even coefficients
                let even = t.coeffs.iter().all(|(&(l, m1, m2), _)| {
                    let pv = (l1 - m1 + l2 - m2 + 2 * la).rem_euclid(2);
                    let pl = (l - (m1 + m2) + l1 + l2 + l).rem_euclid(2);
                    pv == pl
                });
                rep.assert(format!("parity-even {tag}"), even, alloc::string::String::new());
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use crate::report::{Status, DEFAULT_SAMPLES};

    fn ok(r: &Report) {
        let bad: Vec<_> = r.cases.iter().filter(|c| c.status == Status::Fail).map(|c| (&c.id, &c.details)).collect();
        assert!(bad.is_empty(), "{} failures: {:?}", bad.len(), &bad[..bad.len().min(4)]);
    }

    #[test]
    fn spin_one_matrices() {
        let r = irrep(1, 0).unwrap();
        assert_eq!(r.h, Mat::diag(vec![Scalar::frac(1, 2), Scalar::zero(), Scalar::frac(-1, 2)]));
        assert!(r.vp.get(0, 1).is_one());
        assert!(r.vp.get(1, 2).is_one());
        assert_eq!(rep_apply(&ualg::g(1), &r), Mat::diag(vec![Scalar::s_pow(1), Scalar::one(), Scalar::s_pow(-1)]));
        assert!(irrep(0, 0).unwrap().vp.is_zero());
        assert!(irrep(-1, 0).is_err());
    }

    #[test]
    fn r_matrix_corner() {
        let r = irrep(1, 0).unwrap();
        let m = r_matrix(&r, &r);
        assert_eq!(m.get(0, 0), Scalar::q_pow(1));
        let t = irrep(0, 0).unwrap();
        assert_eq!(r_matrix(&t, &r), Mat::identity(3));
    }

    #[test]
    fn relations_small() {
        ok(&suite_relations(3, &DEFAULT_SAMPLES).unwrap());
    }

    #[test]
    fn cgc_small() {
        let t = cgc(1, 1, 0).unwrap();
        assert!(t.get(2, 1, 1, 2).is_one());
        let t = cgc(0, 2, 0).unwrap();
        for m in -2..=2 {
            assert!(t.get(2, 0, m, m).is_one());
        }
        ok(&suite_cgc(1, &DEFAULT_SAMPLES).unwrap());
    }

    #[test]
    fn r_small() {
        let rep = suite_r_properties(1, &DEFAULT_SAMPLES).unwrap();
        for c in &rep.cases {
            std::println!("{:?} {}", c.status, c.id);
        }
        ok(&suite_ybe(1, &[0, 1], &DEFAULT_SAMPLES).unwrap());
    }
}
