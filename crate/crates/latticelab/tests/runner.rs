use latticelab::config::Config;
use latticelab::report::{RecordDetail, Verdict};
use latticelab::runner::{run, select};

#[test]
fn selection() {
    assert_eq!(select(&[]).unwrap().len(), 34);
    assert_eq!(select(&["all".into()]).unwrap().len(), 34);
    let two = select(&["conductor17".into(), "somos-4term".into()]).unwrap();
    assert_eq!(two.iter().map(|r| r.id).collect::<Vec<_>>(), ["conductor17", "somos-4term"]);
    assert!(select(&["no-such-record".into()]).is_err());
}

#[test]
fn conjectures_never_gate() {
    let records = select(&["conductor17".into(), "somos-3term".into()]).unwrap();
    let cfg = Config { precision: 40, guard_digits: 14, parallelism: 2, timeout_secs: 600 };
    let mut r = run(&records, &cfg, None, None);
    assert_eq!(r.records[0].verdict, Verdict::ConjectureConsistent);
    assert_eq!(r.exit_code(), 0);
    // the residual holds far past any reachable tolerance, so flip it by hand
    r.records[0].verdict = Verdict::ConjectureInconsistent;
    assert_eq!(r.exit_code(), 0);
    r.records[0].verdict = Verdict::Timeout;
    assert_eq!(r.exit_code(), 0);
    r.records[1].verdict = Verdict::Error;
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn timeouts_are_distinct_from_failures() {
    let records = select(&["F29-theorem".into(), "somos-3term".into()]).unwrap();
    let cfg = Config { precision: 400, guard_digits: 50, parallelism: 2, timeout_secs: 1 };
    let r = run(&records, &cfg, None, None);
    assert_eq!(r.records[0].verdict, Verdict::Timeout);
    assert!(matches!(r.records[0].detail, RecordDetail::Timeout { after_secs: 1 }));
    assert_eq!(r.records[1].verdict, Verdict::Pass);
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn term_override_below_sturm_is_an_error() {
    let records = select(&["somos-3term".into()]).unwrap();
    let cfg = Config { precision: 40, guard_digits: 14, parallelism: 1, timeout_secs: 600 };
    assert_eq!(run(&records, &cfg, Some(50), None).records[0].verdict, Verdict::Pass);
    let r = run(&records, &cfg, Some(20), None);
    assert_eq!(r.records[0].verdict, Verdict::Error);
    assert_eq!(r.exit_code(), 1);
}
