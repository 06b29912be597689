use latticelab::config::Config;
use latticelab::report::*;
use latticelab::runner::{run, select};

fn config() -> Config {
    Config { precision: 30, guard_digits: 13, parallelism: 4, timeout_secs: 600 }
}

fn small_report() -> VerificationReport {
    let ids: Vec<String> = ["somos-3term", "F59-linear", "conj-F215"].map(String::from).to_vec();
    let mut records = select(&ids).unwrap();
    records.push(records[0].mutated().unwrap());
    run(&records, &config(), None, None)
}

#[test]
fn json_round_trips() {
    let r = small_report();
    let text = emit(&r, Format::Json);
    let back = from_json(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.schema, SCHEMA);
}

#[test]
fn csv_has_one_row_per_record() {
    let r = small_report();
    let text = emit(&r, Format::Csv);
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), ["id", "kind", "verdict", "digits", "seconds"]);
    let rows: Vec<csv::StringRecord> = rd.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), r.records.len());
    assert_eq!(&rows[0][2], "PASS");
    assert_eq!(&rows[2][2], "CONJECTURE-CONSISTENT");
    assert_eq!(&rows[3][2], "FAIL");
}

#[test]
fn human_groups_conjectures() {
    let r = small_report();
    let text = emit(&r, Format::Human);
    let conj_heading = text.find("Conjectures").unwrap();
    let conj_row = text.find("conj-F215").unwrap();
    let theorem_row = text.find("F59-linear").unwrap();
    assert!(theorem_row < conj_heading && conj_heading < conj_row);
    assert!(text.contains("first mismatch at q^"));
}

#[test]
fn mutated_record_fails_the_run() {
    let r = small_report();
    assert_eq!(r.failures(), 1);
    assert_eq!(r.exit_code(), 1);
    assert!(matches!(r.records[3].detail, RecordDetail::Coefficients { mismatch: Some(_), .. }));
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let strip = |mut r: VerificationReport| {
        for x in &mut r.records {
            x.seconds = 0.0;
        }
        r
    };
    assert_eq!(strip(small_report()), strip(small_report()));
}

#[test]
fn unknown_format_is_rejected() {
    assert!("xml".parse::<Format>().is_err());
    assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
}
