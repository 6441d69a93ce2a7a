use std::collections::BTreeMap;
use std::time::Instant;

use ospq::report::{Report, Status, DEFAULT_SAMPLES};
use ospq::rmaps;

fn tally(r: &Report) -> BTreeMap<String, (usize, usize)> {
    let mut out: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for c in &r.cases {
        let key = c.id.split(" (").next().unwrap_or("").to_string();
        let key = if key.starts_with("hom ") && key.contains(" mult ") { key.split(" mult ").next().unwrap().to_string() + " mult" } else { key };
        let e = out.entry(key).or_default();
        if c.status == Status::Pass {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    out
}

fn failing(r: &Report) -> Vec<&str> {
    r.cases.iter().filter(|c| c.status != Status::Pass).map(|c| c.id.as_str()).collect()
}

#[test]
fn hom_checks() {
    let r = rmaps::suite_hom(&DEFAULT_SAMPLES).unwrap();
    eprintln!("{:?}", tally(&r));
    assert!(failing(&r).is_empty(), "{:?}", failing(&r));
}

#[test]
fn collapse_to_two() {
    let t = Instant::now();
    let r = rmaps::suite_collapse(2, &DEFAULT_SAMPLES).unwrap();
    eprintln!("collapse {:?} {:?}", t.elapsed(), tally(&r));
    for c in &r.cases {
        // (S(x)id)R differs from R^-1 once both labels are nonzero.
        let expect = !c.id.starts_with("consistency") || c.id.contains("(0,") || c.id.contains(",0;");
        assert_eq!(c.status == Status::Pass, expect, "{}", c.id);
    }
}

#[test]
fn rtt_to_one() {
    let t = Instant::now();
    let r = rmaps::suite_rtt(1, &DEFAULT_SAMPLES).unwrap();
    eprintln!("rtt {:?} {:?}", t.elapsed(), tally(&r));
    // The stated order fails exactly where R intertwines the other way round.
    for c in &r.cases {
        let expect = c.id.contains("-rev") || !c.id.contains("(1,1;");
        assert_eq!(c.status == Status::Pass, expect, "{}", c.id);
    }
}

#[test]
fn yb_forms_to_one() {
    let t = Instant::now();
    let r = rmaps::suite_yb_forms(1, &DEFAULT_SAMPLES).unwrap();
    eprintln!("yb {:?} {:?}", t.elapsed(), tally(&r));
    assert_eq!(failing(&r), ["YB1 (1,1,1;0)", "YB1 (1,1,1;1)"]);
}
