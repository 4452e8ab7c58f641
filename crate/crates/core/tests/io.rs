mod common;

use std::sync::Arc;

use common::{d, example_path, gifss_strategy, load_example, relation, rng, universe};
use gifss::decision::{self, comparison_table};
use gifss::emit::{emit_report, emit_table, Format};
use gifss::io::{self, LoadOptions};
use gifss::{Error, Gifsr, NormContext, Precision};
use proptest::prelude::*;

const POOL: &[&str] = &["p", "q", "r"];

#[test]
fn shipped_decision_dataset() {
    let set = load_example("ranking.json");
    let params: Vec<&str> = set.params().map(|p| p.as_str()).collect();
    assert_eq!(params, ["e3", "e4", "e7", "e9"]);
    for (p, alpha) in [("e3", "0.1"), ("e4", "0.5"), ("e7", "0.4"), ("e9", "0.3")] {
        assert_eq!(set.preference(p), Some(d(alpha)));
    }
    assert_eq!(set.universe().len(), 6);
    assert!(set.is_valid());
}

#[test]
fn shipped_relation_loads() {
    let r = io::load_gifsr(example_path("rel_f_g.json"), &LoadOptions::default(), &NormContext::min_max()).unwrap();
    // the file names its own norm pair
    assert_eq!(r.context().pair.name(), "product");
    assert_eq!(r.source(), &load_example("students_f.json"));
    assert_eq!(r.get("r", "r").unwrap().degree, d("0.2625"));
}

#[test]
fn invalid_cell_is_named() {
    let text = r#"{"universe": ["a"], "parameters": [{"name": "p", "preference": "1"}],
                   "values": {"p": {"a": {"mu": "0.7", "nu": "0.4"}}}}"#;
    let err = io::parse_gifss(text, &LoadOptions::default()).unwrap_err();
    let message = err.to_string();
    assert!(message.contains("\"p\"") && message.contains("\"a\""), "{message}");
    assert!(matches!(err.domain(), Some(Error::InvalidIfs { .. })));
    let lenient = LoadOptions { allow_invalid_ifs: true, ..LoadOptions::default() };
    assert!(!io::parse_gifss(text, &lenient).unwrap().is_valid());
}

#[test]
fn empty_universe_is_rejected() {
    let text = r#"{"universe": [], "parameters": [], "values": {}}"#;
    let err = io::parse_gifss(text, &LoadOptions::default()).unwrap_err();
    assert_eq!(err.domain(), Some(&Error::EmptyUniverse));
}

#[test]
fn precision_limits_input_digits() {
    let text = r#"{"universe": ["a"], "parameters": [{"name": "p", "preference": "0.1234567"}],
                   "values": {"p": {"a": {"mu": "0", "nu": "0"}}}}"#;
    assert!(matches!(
        io::parse_gifss(text, &LoadOptions::default()).unwrap_err().domain(),
        Some(Error::TooManyDigits { .. })
    ));
    let wide = LoadOptions { precision: Precision::digits(8).unwrap(), ..LoadOptions::default() };
    assert_eq!(io::parse_gifss(text, &wide).unwrap().preference("p"), Some(d("0.1234567")));
}

#[test]
fn missing_file_is_an_io_error() {
    let err = io::load_gifss("/nonexistent/set.json", &LoadOptions::default()).unwrap_err();
    assert!(matches!(err, io::LoadError::Io { .. }));
    assert!(err.domain().is_none());
}

#[test]
fn saved_files_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("set.json");
    let set = load_example("ranking.json");
    io::save_gifss(&path, &set).unwrap();
    assert_eq!(io::load_gifss(&path, &LoadOptions::default()).unwrap(), set);
}

#[test]
fn relation_round_trip() {
    let ctx = NormContext::lukasiewicz();
    let f = Arc::new(load_example("students_f.json"));
    let g = Arc::new(load_example("students_g.json"));
    let r = relation(&mut rng(1), f, g, &ctx, 6);
    let text = io::gifsr_to_json(&r);
    let back = io::parse_gifsr(&text, std::path::Path::new("."), &LoadOptions::default(), &NormContext::product()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn comparison_table_as_json_is_the_matrix() {
    let report = decision::rank(&load_example("ranking.json"), Precision::DEFAULT);
    let value: serde_json::Value = serde_json::from_str(&emit_table(&report.membership_comparison, Format::Json)).unwrap();
    assert_eq!(
        value["counts"],
        serde_json::json!([
            [4, 2, 2, 2, 2, 2],
            [2, 4, 2, 1, 2, 2],
            [4, 2, 4, 2, 2, 2],
            [4, 3, 2, 4, 4, 2],
            [4, 2, 2, 3, 4, 2],
            [3, 2, 2, 3, 3, 4]
        ])
    );
}

#[test]
fn reduced_values_print_trimmed() {
    let report = decision::rank(&load_example("ranking.json"), Precision::DEFAULT);
    let csv = emit_table(&report.reduced.non_membership, Format::Csv);
    assert_eq!(csv.lines().next(), Some("element,e3,e4,e7,e9"));
    assert!(csv.lines().any(|l| l == "b6,0.04,0.015,0.008,0.057"));
    assert!(csv.lines().any(|l| l == "b2,0.03,0,0.16,0.09"));
    let csv = emit_table(&report.reduced.membership, Format::Csv);
    assert!(csv.lines().any(|l| l == "b2,0.55,1,0.7,0.58"));
}

#[test]
fn report_ends_with_the_decision() {
    let report = decision::rank(&load_example("ranking.json"), Precision::DEFAULT);
    for format in [Format::Plain, Format::Csv] {
        let text = emit_report(&report, format, false);
        assert_eq!(text.lines().last(), Some("decision: b6 with final score 12"));
        assert!(text.contains("Non-membership comparison table"));
        let quiet = emit_report(&report, format, true);
        assert!(!quiet.contains("comparison table"));
        assert_eq!(quiet.lines().last(), Some("decision: b6 with final score 12"));
    }
    let json: serde_json::Value = serde_json::from_str(&emit_report(&report, Format::Json, false)).unwrap();
    assert_eq!(json["decision"], "decision: b6 with final score 12");
    assert_eq!(json["ranking"]["final_score"], serde_json::json!([-19, 0, -5, 8, 4, 12]));
}

#[test]
fn emission_is_deterministic() {
    let set = load_example("ranking.json");
    let first = emit_report(&decision::rank(&set, Precision::DEFAULT), Format::Plain, false);
    for _ in 0..5 {
        let again = emit_report(&decision::rank(&io::parse_gifss(&io::gifss_to_json(&set), &LoadOptions::default()).unwrap(), Precision::DEFAULT), Format::Plain, false);
        assert_eq!(again, first);
    }
    let table = comparison_table(&decision::reduce(&set, Precision::DEFAULT).membership);
    assert_eq!(emit_table(&table, Format::Csv), emit_table(&table.clone(), Format::Csv));
}

#[test]
fn relation_tables_render() {
    let f = Arc::new(load_example("students_f.json"));
    let r = Gifsr::maximal(f.clone(), f, NormContext::min_max()).unwrap();
    let csv = emit_table(&r, Format::Csv);
    assert_eq!(csv.lines().next(), Some("source_param,target_param,degree,element,mu,nu"));
    assert_eq!(csv.lines().nth(1), Some("r,r,0.7,s1,0.8,0.1"));
    assert_eq!(csv.lines().count(), 1 + 9 * 4);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn datasets_round_trip(set in gifss_strategy(3, POOL, 6)) {
        let text = io::gifss_to_json(&set);
        let back = io::parse_gifss(&text, &LoadOptions::default()).unwrap();
        prop_assert_eq!(&back, &set);
        prop_assert_eq!(io::gifss_to_json(&back), text);
    }

    #[test]
    fn set_tables_are_stable(set in gifss_strategy(2, POOL, 6)) {
        for format in [Format::Plain, Format::Csv, Format::Json] {
            prop_assert_eq!(emit_table(&set, format), emit_table(&set.clone(), format));
        }
        let universe_len = universe(2).len();
        let rows = emit_table(&set, Format::Csv).lines().count();
        prop_assert_eq!(rows, 1 + set.len() * universe_len);
    }
}
