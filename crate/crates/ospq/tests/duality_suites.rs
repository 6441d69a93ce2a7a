use ospq::duality::{self, Pairing};
use ospq::report::{Report, Status, DEFAULT_SAMPLES};

fn assert_passed(r: &Report) {
    let bad: Vec<_> = r.cases.iter().filter(|c| c.status == Status::Fail).map(|c| (&c.id, &c.details)).collect();
    assert!(bad.is_empty(), "{}: {} failures: {:#?}", r.suite, bad.len(), bad);
}

#[test]
fn pairing_delta() {
    let mut p = Pairing::default();
    assert_passed(&duality::suite_pairing_delta(&mut p, (3, 2, 3), &DEFAULT_SAMPLES));
}

#[test]
fn gconst() {
    assert_passed(&duality::suite_gconst(4, &DEFAULT_SAMPLES));
}

#[test]
fn fconst() {
    let mut p = Pairing::default();
    assert_passed(&duality::suite_fconst(&mut p, (2, 1, 2), &DEFAULT_SAMPLES));
}

#[test]
fn hopf_pairing_axioms() {
    let mut p = Pairing::default();
    assert_passed(&duality::suite_hopf_pairing_axioms(&mut p, &DEFAULT_SAMPLES));
}

#[test]
fn universal_t() {
    assert_passed(&duality::suite_universal_t(4, 3, &DEFAULT_SAMPLES));
}

#[test]
fn printed_series_report() {
    let r = duality::suite_printed_series(7, &DEFAULT_SAMPLES);
    for c in &r.cases {
        println!("{} {:?} {}", c.id, c.status, c.details);
    }
}

#[test]
fn hopf_a() {
    assert_passed(&duality::suite_hopf_a(6, &DEFAULT_SAMPLES));
}
