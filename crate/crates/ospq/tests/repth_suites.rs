use std::time::Instant;

use ospq::report::{Report, Status, DEFAULT_SAMPLES};
use ospq::repth;

fn failures(r: &Report) -> Vec<&str> {
    r.cases.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect()
}

fn assert_passed(r: &Report) {
    let bad = failures(r);
    assert!(bad.is_empty(), "{}: {} failures: {:#?}", r.suite, bad.len(), bad);
}

#[test]
fn relations_to_six() {
    let t = Instant::now();
    assert_passed(&repth::suite_relations(6, &DEFAULT_SAMPLES).unwrap());
    eprintln!("relations: {:?}", t.elapsed());
}

#[test]
fn cgc_to_three() {
    let t = Instant::now();
    assert_passed(&repth::suite_cgc(3, &DEFAULT_SAMPLES).unwrap());
    eprintln!("cgc: {:?}", t.elapsed());
}

#[test]
fn ybe_to_two() {
    let t = Instant::now();
    assert_passed(&repth::suite_ybe(2, &[0, 1], &DEFAULT_SAMPLES).unwrap());
    eprintln!("ybe: {:?}", t.elapsed());
}

#[test]
fn r_properties_to_two() {
    let r = repth::suite_r_properties(2, &DEFAULT_SAMPLES).unwrap();
    // The formula is quasitriangular in the reverse convention.
    for prefix in ["inverse", "intertwine-rev", "r21"] {
        assert_passed(&r.subset(prefix));
    }
    let alt = r.subset("antipode-alt");
    assert!(alt.cases.iter().filter(|c| c.id.contains("S^-1(x)id") || c.id.contains("id(x)S)")).all(|c| c.status == Status::Pass));
    // The stated direction fails exactly when both factors carry V±.
    for c in r.subset("intertwine ").cases.iter().chain(r.subset("antipode ").cases.iter()) {
        let trivial = c.id.contains("(0,") || c.id.contains(",0;");
        let diagonal = c.id.contains("D(H)") || c.id.contains("D(g)");
        assert_eq!(c.status == Status::Pass, trivial || diagonal, "{}", c.id);
    }
}
