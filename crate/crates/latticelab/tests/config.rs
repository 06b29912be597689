use latticelab::config::*;
use std::io::Write;

#[test]
fn layers_apply_in_order() {
    let base = Config::default();
    assert_eq!(base.precision, 40);
    let file = Layer::from_toml("precision = 60\nparallelism = 3\n", "inline").unwrap();
    let env = Layer::from_env([("LATTICELAB_PARALLELISM", "5"), ("PATH", "/bin"), ("LATTICELAB_TIMEOUT_SECS", "7")]).unwrap();
    let flags = Layer { timeout_secs: Some(9), ..Default::default() };
    let c = base.apply(&file).apply(&env).apply(&flags);
    assert_eq!(c.precision, 60);
    assert_eq!(c.guard_digits, 16, "guard follows precision unless set");
    assert_eq!(c.parallelism, 5);
    assert_eq!(c.timeout_secs, 9);
    let g = Config::default().apply(&Layer { precision: Some(60), guard_digits: Some(3), ..Default::default() });
    assert_eq!(g.guard_digits, 3);
}

#[test]
fn bad_inputs() {
    assert!(Layer::from_toml("precison = 3", "typo").is_err());
    assert!(Layer::from_toml("precision = \"high\"", "type").is_err());
    assert!(Layer::from_env([("LATTICELAB_PRECISION", "lots")]).is_err());
    let zero = Config::default().apply(&Layer { parallelism: Some(0), ..Default::default() });
    assert!(zero.validate().is_err());
}

#[test]
fn file_loading() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "guard_digits = 12\ntimeout_secs = 30").unwrap();
    let l = Layer::from_file(f.path()).unwrap();
    assert_eq!(l.guard_digits, Some(12));
    assert_eq!(l.timeout_secs, Some(30));
    assert!(Layer::from_file(std::path::Path::new("/nonexistent/latticelab.toml")).is_err());
}
