use std::collections::BTreeMap;
use std::time::Instant;

use ospq::report::{Report, Status, DEFAULT_SAMPLES};
use ospq::tmat::{self, Reading};

fn tally(r: &Report, key: impl Fn(&str) -> String) -> BTreeMap<String, (usize, usize)> {
    let mut out: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for c in &r.cases {
        let e = out.entry(key(&c.id)).or_default();
        if c.status == Status::Pass {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    out
}

fn first_word(id: &str) -> String {
    id.split(' ').next().unwrap_or("").to_string()
}

fn relation(id: &str) -> String {
    id.split(' ').take(2).collect::<Vec<_>>().join(" ")
}

fn assert_passed(r: &Report) {
    let bad: Vec<_> = r.cases.iter().filter(|c| c.status == Status::Fail).map(|c| (&c.id, &c.details)).collect();
    assert!(bad.is_empty(), "{}: {} failures: {:#?}", r.suite, bad.len(), &bad[..bad.len().min(5)]);
}

#[test]
fn construction_to_four() {
    assert_passed(&tmat::suite_construction(4, &DEFAULT_SAMPLES).unwrap());
}

#[test]
fn comodule_to_two() {
    let t = Instant::now();
    let r = tmat::suite_comodule(2, 6, &DEFAULT_SAMPLES).unwrap();
    eprintln!("comodule: {:?}", t.elapsed());
    // The signed entries break the law on every entry with l >= 1.
    for c in &r.cases {
        let trivial = c.id.starts_with("comodule (0;");
        assert_eq!(c.status == Status::Pass, trivial, "{}", c.id);
    }
    assert_eq!(r.num_failed(), 68);
    assert_passed(&tmat::suite_comodule_unsigned(2, 6, &DEFAULT_SAMPLES).unwrap());
}

#[test]
fn product_law_to_two() {
    let t = Instant::now();
    let r = tmat::suite_product_law(2, &DEFAULT_SAMPLES).unwrap();
    eprintln!("product law: {:?} {:?}", t.elapsed(), tally(&r, first_word));
    assert_passed(&r);
}

#[test]
fn ortho_to_three() {
    let r = tmat::suite_ortho(3, &DEFAULT_SAMPLES).unwrap();
    eprintln!("{:?}", tally(&r, first_word));
    assert_passed(&r.subset("ortho1-corrected"));
    assert_passed(&r.subset("ortho2 "));
}

#[test]
fn recurrences_to_three() {
    let printed = tmat::suite_recurrence(3, Reading::Printed, &DEFAULT_SAMPLES).unwrap();
    let t = tally(&printed, relation);
    eprintln!("Printed: {t:?}");
    // Only the second relation of the first set closes as printed.
    for (rel, (_, fail)) in &t {
        assert_eq!(*fail == 0, rel == "recurrence1 n2=0", "{rel}");
    }
    let alt = tmat::suite_recurrence(3, Reading::PrintedAlt, &DEFAULT_SAMPLES).unwrap();
    assert_eq!(tally(&alt, relation)["recurrence3 n2=1"], (35, 35));
    let corrected = tmat::suite_recurrence(3, Reading::Corrected, &DEFAULT_SAMPLES).unwrap();
    assert_passed(&corrected);
    assert_eq!(corrected.cases.len(), printed.cases.len());
}
