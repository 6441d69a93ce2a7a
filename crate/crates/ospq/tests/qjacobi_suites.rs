use std::time::Instant;

use ospq::qjacobi::{self, hyper_2phi1, shifted_factorial_pow, QPow};
use ospq::report::{Status, DEFAULT_SAMPLES};
use proptest::prelude::*;

#[test]
fn identification_to_four() {
    let t = Instant::now();
    let r = qjacobi::suite_identification(4, &DEFAULT_SAMPLES).unwrap();
    eprintln!("qjacobi: {} cases in {:?}", r.cases.len(), t.elapsed());
    let bad: Vec<_> = r.cases.iter().filter(|c| c.status != Status::Pass).map(|c| &c.id).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(r.cases.len(), 2 * (1 + 9 + 25 + 49 + 81));
}

fn base() -> impl Strategy<Value = QPow> {
    prop_oneof![Just(QPow::q()), Just(QPow::minus_q()), (any::<bool>(), 1..4i32).prop_map(|(n, e)| QPow::new(n, e))]
}

/// Term-by-term numeric sum of the defining series, run well past termination.
fn brute(a1: QPow, a2: QPow, b: QPow, base: QPow, z: f64, q: f64) -> f64 {
    let v = |p: QPow| p.to_scalar().eval(q).unwrap();
    let sf = |x: f64, n: usize| (0..n).map(|k| 1.0 - x * v(base).powi(k as i32)).product::<f64>();
    (0..12).map(|n| sf(v(a1), n) * sf(v(a2), n) / (sf(v(b), n) * sf(v(base), n)) * z.powi(n as i32)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn shifted_factorial_splits(neg in any::<bool>(), e in -4..5i32, bq in base(), n in 0..5i64, m in 0..4i64) {
        let x = QPow::new(neg, e);
        let whole = shifted_factorial_pow(x, bq, n + m).unwrap();
        let split = shifted_factorial_pow(x, bq, n).unwrap().mul(&shifted_factorial_pow(x * bq.pow(n as i32), bq, m).unwrap());
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn two_phi_one_terminates(bq in base(), m in 0..5i32, a2 in -3..4i32, b in 1..4i32, z in -2.0..2.0f64) {
        let p = hyper_2phi1(bq.pow(-m), bq.pow(a2), bq.pow(b), bq, &ospq::Scalar::one()).unwrap();
        prop_assert!(p.degree().unwrap_or(0) <= m as usize);
        for q in DEFAULT_SAMPLES {
            let exact = p.eval(q, z).unwrap();
            let num = brute(bq.pow(-m), bq.pow(a2), bq.pow(b), bq, z, q);
            prop_assert!((exact - num).abs() <= 1e-9 * num.abs().max(1.0), "{} vs {}", exact, num);
        }
    }
}
