//! The singular algebra maps `Φ, Ψ: A -> U` that collapse the universal
//! T-matrix onto the universal R-matrix, and the RTT and Yang-Baxter
//! relations at representation level.

use alloc::format;
use alloc::vec::Vec;

use crate::aalg::{self, AElement, AMono, Coalgebra};
use crate::algebra::{map_tensor2, tensor};
use crate::error::Result;
use crate::matrix::Mat;
use crate::report::Report;
use crate::repth::{self, irrep, rep_apply, Irrep, SMat};
use crate::scalar::brackets::{q_minus_qinv, sq_inv_fact};
use crate::scalar::Scalar;
use crate::tmat::{self, AMat};
use crate::ualg::{self, UElement, UTensor};

/// An algebra map `A -> U`, fixed by the images of the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgMap {
    pub x: UElement,
    pub z: UElement,
    /// Image of `k = e^{z/2}`; `k^j` goes to `g^{j·g_per_k}`.
    pub g_per_k: i32,
    pub y: UElement,
}

impl AlgMap {
    /// `Φ`: `x -> 0`, `z -> 4ΛH`, `k -> g²`, `y -> q^{-1/2}(q - q^{-1}) g V₊`.
    pub fn phi() -> Self {
        AlgMap {
            x: UElement::zero(),
            z: ualg::h().scale(&Scalar::lambda().scale_int(4)),
            g_per_k: 2,
            y: ualg::g(1).mul(&ualg::vplus()).scale(&Scalar::s_pow(-1).mul(&q_minus_qinv())),
        }
    }

    /// `Ψ`: `x -> (q^{-1} - q) g^{-1} V₋`, `z -> -4ΛH`, `k -> g^{-2}`, `y -> 0`.
    pub fn psi() -> Self {
        AlgMap {
            x: ualg::g(-1).mul(&ualg::vminus()).scale(&q_minus_qinv().neg()),
            z: ualg::h().scale(&Scalar::lambda().scale_int(-4)),
            g_per_k: -2,
            y: UElement::zero(),
        }
    }

    pub fn k(&self, j: i32) -> UElement {
        ualg::g(self.g_per_k * j)
    }

    pub fn apply_mono(&self, mono: &AMono) -> UElement {
        if (mono.a > 0 && self.x.is_zero()) || (mono.c > 0 && self.y.is_zero()) {
            return UElement::zero();
        }
        self.x.pow(mono.a).mul(&self.z.pow(mono.b)).mul(&self.k(mono.m)).mul(&self.y.pow(mono.c))
    }

    pub fn apply(&self, el: &AElement) -> UElement {
        el.map_linear(|m| self.apply_mono(m))
    }
}

pub fn phi_map(el: &AElement) -> UElement {
    AlgMap::phi().apply(el)
}

pub fn psi_map(el: &AElement) -> UElement {
    AlgMap::psi().apply(el)
}

fn sign(e: u32) -> Scalar {
    Scalar::sign(e as i64)
}

/// Relations of `A` on the images, multiplicativity on a grid of monomials,
/// and a witness that the coproduct is not preserved.
pub fn suite_hom(samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("rmap_hom");
    let two_l = Scalar::lambda().scale_int(2);
    let q = Scalar::q_pow(1);
    for (name, f) in [("Phi", AlgMap::phi()), ("Psi", AlgMap::psi())] {
        let (x, z, y, k) = (&f.x, &f.z, &f.y, f.k(1));
        rep.check(format!("hom {name} {{x,y}} = 0"), &x.mul(y).add(&y.mul(x)), &UElement::zero(), samples);
        rep.check(format!("hom {name} [z,x] = 2Lx"), &z.mul(x).sub(&x.mul(z)), &x.scale(&two_l), samples);
        rep.check(format!("hom {name} [z,y] = 2Ly"), &z.mul(y).sub(&y.mul(z)), &y.scale(&two_l), samples);
        rep.check(format!("hom {name} kx = q xk"), &k.mul(x), &x.mul(&k).scale(&q), samples);
        rep.check(format!("hom {name} ky = q yk"), &k.mul(y), &y.mul(&k).scale(&q), samples);
        rep.check(format!("hom {name} [z,k] = 0"), &z.mul(&k), &k.mul(z), samples);
        rep.check(format!("hom {name} k k^-1 = 1"), &k.mul(&f.k(-1)), &UElement::one(), samples);
        let monos = grid();
        for u in &monos {
            for v in &monos {
                let prod = AElement::mono(*u).mul(&AElement::mono(*v));
                let lhs = f.apply(&prod);
                let rhs = f.apply_mono(u).mul(&f.apply_mono(v));
                rep.check(format!("hom {name} mult {u:?} * {v:?}"), &lhs, &rhs, samples);
            }
        }
    }
    // Not coalgebra maps: Δ_U(Φ(y)) against (Φ⊗Φ)Δ_A(y), likewise Ψ on x.
    let co = Coalgebra::new(2);
    for (name, f, gen, delta) in [("Phi", AlgMap::phi(), aalg::y(), co.delta_y().clone()), ("Psi", AlgMap::psi(), aalg::x(), co.delta_x().clone())] {
        let lhs = ualg::coproduct(&f.apply(&gen));
        let rhs: UTensor = map_tensor2(&delta, |a| f.apply_mono(a), |b| f.apply_mono(b), 0);
        let differ = lhs != rhs;
        rep.assert(format!("coalgebra-witness {name}"), differ, format!("Delta(map) = {lhs:?}; (map x map)Delta = {rhs:?}"));
    }
    Ok(rep)
}

fn grid() -> Vec<AMono> {
    let mut out = Vec::new();
    for a in 0..=1 {
        for b in 0..=1 {
            for m in -1..=1 {
                for c in 0..=1 {
                    out.push(AMono::new(a, b, m, c));
                }
            }
        }
    }
    out
}

fn t_entries(ell: i64, lambda: u32) -> Result<AMat> {
    Ok(tmat::t_matrix(ell, lambda)?.entries)
}

/// `(ρ₁ ⊗ ρ₂)((Φ ⊗ id)T)` from the representation matrix `T^{ℓ₂}`.
pub fn phi_collapse(r1: &Irrep, r2: &Irrep) -> Result<SMat> {
    let t = t_entries(r2.ell as i64, r2.lambda)?;
    let (d1, d2) = (r1.dim(), r2.dim());
    let mut out = Mat::zeros(d1 * d2, d1 * d2);
    for i2 in 0..d2 {
        for j2 in 0..d2 {
            let e = t.get(i2, j2);
            if e.is_zero() {
                continue;
            }
            let m = rep_apply(&phi_map(&e), r1);
            let pj = r2.parity(i2) + r2.parity(j2);
            for ((i1, j1), v) in m.nonzero() {
                let s = sign(pj * (r1.parity(*j1) + r2.parity(i2)));
                out.set(i1 * d2 + i2, j1 * d2 + j2, v.mul(&s));
            }
        }
    }
    Ok(out)
}

/// `(ρ₁ ⊗ ρ₂)((id ⊗ Ψ)T_{E,e})` from the representation matrix `T^{ℓ₁}`.
pub fn psi_collapse(r1: &Irrep, r2: &Irrep) -> Result<SMat> {
    let t = t_entries(r1.ell as i64, r1.lambda)?;
    let (d1, d2) = (r1.dim(), r2.dim());
    let mut out = Mat::zeros(d1 * d2, d1 * d2);
    for i1 in 0..d1 {
        for j1 in 0..d1 {
            let e = t.get(i1, j1);
            if e.is_zero() {
                continue;
            }
            let m = rep_apply(&psi_map(&e), r2);
            let s = sign(r1.parity(i1) + r1.parity(j1));
            for ((i2, j2), v) in m.nonzero() {
                out.set(i1 * d2 + i2, j1 * d2 + j2, v.mul(&s));
            }
        }
    }
    Ok(out)
}

/// `R` in the rewritten order `Σ_k (q - q^{-1})^k/⟨k⟩! (V₊g^{-1} ⊗ gV₋)^k q^{4H⊗H}`.
pub fn r_matrix_reordered(r1: &Irrep, r2: &Irrep) -> SMat {
    let kmax = (2 * r1.ell).min(2 * r2.ell);
    let x = tensor(&ualg::vplus().mul(&ualg::g(-1)), &ualg::g(1).mul(&ualg::vminus()));
    let mut series = UTensor::zero();
    let mut p = UTensor::one();
    for k in 0..=kmax {
        if k > 0 {
            p = p.mul(&x);
        }
        let c = q_minus_qinv().pow(k).div(&sq_inv_fact(k as i64)).expect("nonzero");
        series.add_assign(&p.scale(&c));
    }
    let d1 = r1.dim();
    let d2 = r2.dim();
    let hh = Mat::diag((0..d1 * d2).map(|i| Scalar::s_pow(2 * (r1.m_of(i / d2) * r2.m_of(i % d2)) as i32)).collect());
    repth::rep_apply2(&series, r1, r2).mul(&hh)
}

/// Collapse identities for `ℓᵢ <= max_l` and every pair of parities.
pub fn suite_collapse(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("rmap_collapse");
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for lam1 in 0..2u32 {
                for lam2 in 0..2u32 {
                    let (r1, r2) = (irrep(l1, lam1)?, irrep(l2, lam2)?);
                    let tag = format!("({l1},{l2};{lam1},{lam2})");
                    let r = repth::r_matrix(&r1, &r2);
                    let id = Mat::identity(r1.dim() * r2.dim());
                    rep.check(format!("reordered R {tag}"), &r_matrix_reordered(&r1, &r2), &r, samples);
                    let phi = phi_collapse(&r1, &r2)?;
                    rep.check(format!("phi_T_is_R {tag}"), &phi, &r, samples);
                    let psi = psi_collapse(&r1, &r2)?;
                    rep.check(format!("psi_T_is_Rinv {tag}"), &psi.mul(&r), &id, samples);
                    rep.check(format!("psi_T_is_Rinv right {tag}"), &r.mul(&psi), &id, samples);
                    let s_r = repth::r_matrix_antipode(&r1, &r2);
                    rep.check(format!("consistency (S(x)id)R = Psi-collapse {tag}"), &s_r, &psi, samples);
                }
            }
        }
    }
    Ok(rep)
}

fn scalar_to_a(m: &SMat) -> AMat {
    m.map(|c| AElement::scalar(c.clone()))
}

/// `T^{(1)}` and `T^{(2)}` of the first RTT relation as matrices over `A`
/// on `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`; entry `(i, j)` carries `(-1)^{p(a) p_i} a`.
pub fn rtt1_factors(r1: &Irrep, r2: &Irrep) -> Result<(AMat, AMat)> {
    let (t1, t2) = (t_entries(r1.ell as i64, r1.lambda)?, t_entries(r2.ell as i64, r2.lambda)?);
    let (d1, d2) = (r1.dim(), r2.dim());
    let n = d1 * d2;
    let (mut a, mut b) = (Mat::zeros(n, n), Mat::zeros(n, n));
    for i1 in 0..d1 {
        for j1 in 0..d1 {
            let e = t1.get(i1, j1);
            let p = r1.parity(i1) + r1.parity(j1);
            for i2 in 0..d2 {
                a.set(i1 * d2 + i2, j1 * d2 + i2, e.scale(&sign(p * r2.parity(i2))));
            }
        }
    }
    for i2 in 0..d2 {
        for j2 in 0..d2 {
            let e = t2.get(i2, j2);
            for i1 in 0..d1 {
                b.set(i1 * d2 + i2, i1 * d2 + j2, e.clone());
            }
        }
    }
    Ok((a, b))
}

/// `T^{(1)}_{E,e}` and `T^{(2)}_{E,e}` of the second RTT relation; entry
/// `(i, j)` carries `(-1)^{p(a) p_j} a`.
pub fn rtt2_factors(r1: &Irrep, r2: &Irrep) -> Result<(AMat, AMat)> {
    let (t1, t2) = (t_entries(r1.ell as i64, r1.lambda)?, t_entries(r2.ell as i64, r2.lambda)?);
    let (d1, d2) = (r1.dim(), r2.dim());
    let n = d1 * d2;
    let (mut a, mut b) = (Mat::zeros(n, n), Mat::zeros(n, n));
    for i1 in 0..d1 {
        for j1 in 0..d1 {
            let e = t1.get(i1, j1);
            let p = r1.parity(i1) + r1.parity(j1);
            for i2 in 0..d2 {
                a.set(i1 * d2 + i2, j1 * d2 + i2, e.scale(&sign(p * (1 + r2.parity(i2)))));
            }
        }
    }
    for i2 in 0..d2 {
        for j2 in 0..d2 {
            let e = t2.get(i2, j2);
            let p = r2.parity(i2) + r2.parity(j2);
            for i1 in 0..d1 {
                b.set(i1 * d2 + i2, i1 * d2 + j2, e.scale(&sign(p)));
            }
        }
    }
    Ok((a, b))
}

/// Both RTT relations as stated, plus the reversed-order forms
/// `T T R = R T T` as diagnostics (`rtt1-rev`, `rtt2-rev`).
pub fn suite_rtt(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("rtt");
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for lam1 in 0..2u32 {
                for lam2 in 0..2u32 {
                    let (r1, r2) = (irrep(l1, lam1)?, irrep(l2, lam2)?);
                    let tag = format!("({l1},{l2};{lam1},{lam2})");
                    let r = scalar_to_a(&repth::r_matrix(&r1, &r2));
                    let (a, b) = rtt1_factors(&r1, &r2)?;
                    let (ab, ba) = (a.mul(&b), b.mul(&a));
                    rep.check(format!("rtt1 {tag}"), &r.mul(&ab), &ba.mul(&r), samples);
                    rep.check(format!("rtt1-rev {tag}"), &ab.mul(&r), &r.mul(&ba), samples);
                    let (a, b) = rtt2_factors(&r1, &r2)?;
                    let (ab, ba) = (a.mul(&b), b.mul(&a));
                    rep.check(format!("rtt2 {tag}"), &r.mul(&ab), &ba.mul(&r), samples);
                    rep.check(format!("rtt2-rev {tag}"), &ab.mul(&r), &r.mul(&ba), samples);
                }
            }
        }
    }
    Ok(rep)
}

/// `R₂₃R₁₂R₁₃ = R₁₃R₁₂R₂₃` and `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on triples with
/// `ℓᵢ <= max_l`; the second is cross-checked against the `repth` suite.
pub fn suite_yb_forms(max_l: i64, samples: &[f64]) -> Result<Report> {
    let mut rep = Report::new("yb_forms");
    let ybe = repth::suite_ybe(max_l, &[0, 1], samples)?;
    let mut idx = 0;
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for l3 in 0..=max_l {
                for lam in 0..2u32 {
                    let (a, b, c) = (irrep(l1, lam)?, irrep(l2, lam)?, irrep(l3, lam)?);
                    let reps = [&a, &b, &c];
                    let r12 = repth::r_embedded(reps, 0, 1);
                    let r13 = repth::r_embedded(reps, 0, 2);
                    let r23 = repth::r_embedded(reps, 1, 2);
                    let tag = format!("({l1},{l2},{l3};{lam})");
                    rep.check(format!("YB1 {tag}"), &r23.mul(&r12).mul(&r13), &r13.mul(&r12).mul(&r23), samples);
                    let ok = rep.check(format!("YB2 {tag}"), &r12.mul(&r13).mul(&r23), &r23.mul(&r13).mul(&r12), samples);
                    let agree = ybe.cases[idx].id == format!("YBE {tag}") && (ybe.cases[idx].status == crate::report::Status::Pass) == ok;
                    rep.assert(format!("YB2 agrees with repth {tag}"), agree, format!("{:?}", ybe.cases[idx].id));
                    idx += 1;
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

    #[test]
    fn generator_images() {
        assert!(phi_map(&aalg::x()).is_zero());
        assert_eq!(phi_map(&aalg::z()), ualg::h().scale(&Scalar::lambda().scale_int(4)));
        assert!(psi_map(&aalg::y()).is_zero());
        assert!(phi_map(&aalg::x().mul(&aalg::k(1))).is_zero());
        assert_eq!(phi_map(&aalg::k(-1)), ualg::g(-2));
    }

    #[test]
    fn small_collapse() {
        let r = suite_collapse(1, &DEFAULT_SAMPLES).unwrap();
        for c in r.cases.iter().filter(|c| !c.id.starts_with("consistency")) {
            assert_eq!(c.status, Status::Pass, "{} {}", c.id, c.details);
        }
    }
}
