use ospq::aalg::{AElement, AMono, Coalgebra};
use ospq::algebra::{map_tensor2, mu, tensor, Elem, Monomial};
use ospq::repth;
use ospq::scalar::brackets::{kbr, sbinom};
use ospq::scalar::{bracket, limit_q1, Bracket, RatFunc};
use ospq::tmat;
use ospq::ualg::{self, UElement, UMono};
use ospq::Scalar;
use num_rational::BigRational;
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

/// `c s^e Λ^l √{n}_K` summed over a few terms.
fn scalar() -> impl Strategy<Value = Scalar> {
    let term = (-6i64..=6, 1i64..=4, -4i32..=4, 0u32..=1, prop::option::of(1i64..=4)).prop_map(|(c, d, e, l, rad)| {
        let mut t = Scalar::frac(c, d).mul(&Scalar::s_pow(e)).mul(&Scalar::lambda_pow(l));
        if let Some(n) = rad {
            t = t.mul(&Scalar::sqrt_kbracket(n).unwrap());
        }
        t
    });
    prop::collection::vec(term, 1..=3).prop_map(|ts| ts.iter().fold(Scalar::zero(), |acc, t| acc.add(t)))
}

/// Non-zero divisor with cyclotomic factors: `c s^e {n}_K (1 + s^f)`.
fn divisor() -> impl Strategy<Value = Scalar> {
    (1i64..=5, -3i32..=3, 1i64..=5, 1i32..=4)
        .prop_map(|(c, e, n, f)| Scalar::from_int(c).mul(&Scalar::s_pow(e)).mul(&kbr(n)).mul(&Scalar::one().add(&Scalar::s_pow(f))))
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()))
}

fn u_mono() -> impl Strategy<Value = UMono> {
    (0u32..=2, 0u32..=2, -2i32..=2, 0u32..=2).prop_map(|(a, b, m, d)| UMono::new(a, b, m, d))
}

fn a_mono() -> impl Strategy<Value = AMono> {
    (0u32..=1, 0u32..=1, -2i32..=2, 0u32..=1).prop_map(|(a, b, m, c)| AMono::new(a, b, m, c))
}

type T3<M> = Elem<(M, M, M)>;

fn left_flat<M: Monomial>(t: &Elem<((M, M), M)>) -> T3<M> {
    let mut out = Elem::zero();
    for (((a, b), c), s) in t.terms() {
        out.add_term((a.clone(), b.clone(), c.clone()), s.clone());
    }
    out
}

fn right_flat<M: Monomial>(t: &Elem<(M, (M, M))>) -> T3<M> {
    let mut out = Elem::zero();
    for ((a, (b, c)), s) in t.terms() {
        out.add_term((a.clone(), b.clone(), c.clone()), s.clone());
    }
    out
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn scalar_ring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn scalar_division_round_trip(a in scalar(), d in divisor()) {
        prop_assert_eq!(a.div(&d).unwrap().mul(&d), a);
    }

    #[test]
    fn evaluation_commutes_with_ring_ops(a in scalar(), b in scalar(), qi in 0usize..3) {
        let q = ospq::report::DEFAULT_SAMPLES[qi];
        let (x, y) = (a.eval(q).unwrap(), b.eval(q).unwrap());
        prop_assert!(close(a.add(&b).eval(q).unwrap(), x + y));
        prop_assert!(close(a.mul(&b).eval(q).unwrap(), x * y));
    }

    #[test]
    fn super_bracket_bridges_to_k_bracket(n in 1i64..=12) {
        let sup = bracket(Bracket::Super, n, None).unwrap();
        prop_assert_eq!(sup, Scalar::s_pow((n - 1) as i32).mul(&kbr(n)));
    }

    #[test]
    fn super_factorial_limit(n in 1i64..=8) {
        let f = bracket(Bracket::Factorial(ospq::scalar::brackets::Base::Super), 2 * n, None).unwrap();
        let nf: i64 = (1..=n).product();
        let one_minus_q = Scalar::one().sub(&Scalar::q_pow(1));
        let x = f.div(&one_minus_q.pow(n as u32).mul(&Scalar::from_int(nf))).unwrap();
        prop_assert_eq!(limit_q1(&x, 0).unwrap(), BigRational::from_integer(1.into()));
    }
}

/// Coefficient of `A^k B^{n-k}` in `(A + B)^n` with `BA = -q AB`, by
/// multiplying out one factor at a time.
fn binomial_by_expansion(n: usize) -> Vec<RatFunc> {
    let mq = RatFunc::s_pow(2).neg();
    let mut c = vec![RatFunc::one()];
    for step in 1..=n {
        let mut next = vec![RatFunc::zero(); step + 1];
        for (k, ck) in c.iter().enumerate() {
            // A^k B^{step-1-k} · B
            next[k] = next[k].add(ck);
            // A^k B^{step-1-k} · A = (-q)^{step-1-k} A^{k+1} B^{step-1-k}
            next[k + 1] = next[k + 1].add(&ck.mul(&mq.pow((step - 1 - k) as u32)));
        }
        c = next;
    }
    c
}

#[test]
fn super_binomial_matches_expansion() {
    for n in 0..=8 {
        for (k, c) in binomial_by_expansion(n).iter().enumerate() {
            assert_eq!(&sbinom(n as i64, k as i64).unwrap(), c, "n={n} k={k}");
        }
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn u_coproduct_is_homomorphism(x in u_mono(), y in u_mono()) {
        let (u, v) = (UElement::mono(x), UElement::mono(y));
        prop_assert_eq!(ualg::coproduct(&u.mul(&v)), ualg::coproduct(&u).mul(&ualg::coproduct(&v)));
    }

    #[test]
    fn u_counit_is_homomorphism(x in u_mono(), y in u_mono()) {
        let (u, v) = (UElement::mono(x), UElement::mono(y));
        prop_assert_eq!(ualg::counit(&u.mul(&v)), ualg::counit(&u).mul(&ualg::counit(&v)));
    }

    #[test]
    fn u_antipode_is_graded_antihomomorphism(x in u_mono(), y in u_mono()) {
        let (u, v) = (UElement::mono(x), UElement::mono(y));
        let sign = Scalar::sign((x.parity() * y.parity()) as i64);
        let rhs = ualg::antipode(&v).mul(&ualg::antipode(&u)).scale(&sign);
        prop_assert_eq!(ualg::antipode(&u.mul(&v)), rhs);
    }

    #[test]
    fn u_coassociative(x in u_mono()) {
        let d = ualg::coproduct(&UElement::mono(x));
        let left = left_flat(&map_tensor2(&d, ualg::coproduct_mono, |b| UElement::mono(*b), 0));
        let right = right_flat(&map_tensor2(&d, |a| UElement::mono(*a), ualg::coproduct_mono, 0));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn u_antipode_axiom(x in u_mono()) {
        let u = UElement::mono(x);
        let d = ualg::coproduct(&u);
        let left = mu(&map_tensor2(&d, ualg::antipode_mono, |b| UElement::mono(*b), 0));
        prop_assert_eq!(left, UElement::scalar(ualg::counit(&u)));
    }

    #[test]
    fn a_multiplication_associative(x in a_mono(), y in a_mono(), z in a_mono()) {
        let (a, b, c) = (AElement::mono(x), AElement::mono(y), AElement::mono(z));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        if let (Some(p), Some(q)) = (a.mul(&b).parity(), Some((x.parity() + y.parity()) % 2)) {
            prop_assert_eq!(p, q);
        }
    }

    #[test]
    fn rep_is_algebra_homomorphism(x in u_mono(), y in u_mono(), ell in 0i64..=3, lambda in 0u32..=1) {
        let r = repth::irrep(ell, lambda).unwrap();
        let (u, v) = (UElement::mono(x), UElement::mono(y));
        prop_assert_eq!(repth::rep_apply(&u.mul(&v), &r), repth::rep_apply(&u, &r).mul(&repth::rep_apply(&v, &r)));
    }

    #[test]
    fn t_entries_parity_and_normal_order(ell in 0i64..=3, lambda in 0u32..=1, i in 0i64..7, j in 0i64..7) {
        let (mp, m) = (ell - i % (2 * ell + 1), ell - j % (2 * ell + 1));
        let t = tmat::t_entry(ell, lambda, mp, m).unwrap();
        for (mono, _) in t.terms() {
            prop_assert_eq!((mono.a + mono.c) as i64 % 2, (mp - m).rem_euclid(2));
        }
        prop_assert_eq!(t, tmat::t_entry_from_p(ell, lambda, mp, m).unwrap());
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn a_coproduct_homomorphism_in_truncation(x in a_mono(), y in a_mono(), n in 2u32..=4) {
        let mut co = Coalgebra::new(n);
        let (a, b) = (AElement::mono(x), AElement::mono(y));
        let lhs = co.delta(&a.mul(&b));
        let rhs = co.delta(&a).mul_trunc(&co.delta(&b), n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn a_coassociative_in_truncation(x in a_mono(), n in 2u32..=4) {
        let mut co = Coalgebra::new(n);
        let d = co.delta(&AElement::mono(x));
        prop_assert_eq!(co.delta_left(&d).truncate(n), co.delta_right(&d).truncate(n));
    }

    #[test]
    fn comodule_failures_vanish_once_truncation_suffices(ell in 0i64..=2, extra in 0u32..=2) {
        let n = 2 * ell as u32 + extra;
        let r = tmat::suite_comodule_unsigned(ell, n, &ospq::report::DEFAULT_SAMPLES).unwrap();
        let at_ell = r.subset(&format!("comodule-unsigned ({ell};"));
        prop_assert!(at_ell.passed());
    }
}

#[test]
fn tensor_of_units_is_unit() {
    let one = UElement::one();
    assert_eq!(tensor(&one, &one), Elem::one());
}
