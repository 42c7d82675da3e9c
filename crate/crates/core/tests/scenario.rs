use hodge_core::algebra::parse_polynomial;
use hodge_core::algebra::rational::{int, rat};
use hodge_core::pairing::Verdict;
use hodge_core::scenario::*;
use hodge_core::Error;

#[test]
fn x26_polynomial_and_planes() {
    let b = build_scenario(&ScenarioConfig::new(Family::XKd, 2, 6)).unwrap();
    let f = parse_polynomial("x0*x1*(x0^4+x1^4+x2^2*x3^2)+x4*x2^5+x4^6+x5*x3^5+x5^6", Some(6)).unwrap();
    assert_eq!(b.f, f);
    assert_eq!(b.plane1.to_string(), "V(x0, x4, x5)");
    assert_eq!(b.plane2.to_string(), "V(x1, x4, x5)");
    assert!(b.smoothness.smooth);
    assert!(b.notes.iter().any(|n| n.contains("second plane")));
}

#[test]
fn x36_adds_the_last_pair() {
    let b = build_scenario(&ScenarioConfig::new(Family::XKd, 3, 6)).unwrap();
    assert_eq!(b.f.nvars(), 8);
    assert_eq!(b.plane1.to_string(), "V(x0, x4, x5, x7)");
    let m = parse_polynomial("x6^5*x7", Some(8)).unwrap();
    assert_eq!(b.f.coeff(m.terms().next().unwrap().0), int(1));
}

#[test]
fn config_validation() {
    let bad = [
        ScenarioConfig::new(Family::XKd, 2, 5),
        ScenarioConfig::new(Family::XKd, 1, 6),
        ScenarioConfig::new(Family::XKd, 2, 3),
        ScenarioConfig::new(Family::DanK1, 1, 4),
        ScenarioConfig::new(Family::DanK1, 2, 6),
        ScenarioConfig::new(Family::LowdegD4K3, 3, 5),
        ScenarioConfig::new(Family::Custom, 1, 5),
    ];
    for cfg in bad {
        let e = build_scenario(&cfg).unwrap_err();
        assert!(e.is_precondition(), "{e}");
    }
    assert!("nope".parse::<Family>().is_err());
    assert_eq!("lowdeg-d3k5".parse::<Family>().unwrap(), Family::LowdegD3K5);
    assert_eq!(parse_nu_list("-1, 0,1/3").unwrap(), vec![int(-1), int(0), rat(1, 3)]);
    assert!(parse_nu_list("1/0").is_err());
}

#[test]
fn singular_custom_input_is_fatal() {
    let cfg = ScenarioConfig::custom(CustomInput {
        f: "x0*x1*x2^3 + x3*x0^4".into(),
        plane1: "x0, x3".into(),
        plane2: "x1, x3".into(),
    });
    match run_scenario(&cfg).unwrap_err().root() {
        Error::Singular(_) => {}
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn dan_report_values() {
    let doc = run_scenario(&ScenarioConfig::new(Family::DanK1, 1, 5)).unwrap();
    assert!(doc.passed, "{:?}", doc.failed_checks());
    assert_eq!(doc.hilbert_table[1].intersection, 3);
    assert_eq!(doc.hilbert_table[5].intersection, 4);
    let x = doc.excess.as_ref().unwrap();
    assert_eq!(x.samples.len(), default_nu_samples().len());
    assert!(x.samples.iter().all(|s| s.verdict == Verdict::Excess));
    assert!(doc.check("dan-sum-ideal").unwrap().passed);
    let r = doc.remarks.iter().find(|r| r.starts_with("I2 equals")).unwrap();
    assert!(r.contains("x3, x0*g, h>: true") && r.contains("x2, x0*g, h>: false"), "{r}");
}

#[test]
fn x26_sampled_verdicts() {
    let cfg = ScenarioConfig::new(Family::XKd, 2, 6).with_nus(vec![int(2), int(-1), int(0), rat(1, 3)]);
    let doc = run_scenario(&cfg).unwrap();
    let v: Vec<Verdict> = doc.excess.as_ref().unwrap().samples.iter().map(|s| s.verdict).collect();
    assert_eq!(v, [Verdict::NoExcess, Verdict::Excess, Verdict::Excess, Verdict::NoExcess]);
    let mut crit = doc.critical_values();
    crit.sort();
    assert_eq!(crit, [int(-1), int(0)]);
    let csv = render_report(&doc, ReportFormat::Csv).unwrap();
    let i1: Vec<u64> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(i1.len(), 13);
    assert_eq!(i1.iter().sum::<u64>(), 125);
}

#[test]
fn json_roundtrip_and_determinism() {
    let cfg = ScenarioConfig::new(Family::DanK1, 1, 6).with_seed(5);
    let doc = run_scenario(&cfg).unwrap();
    let a = render_report(&doc, ReportFormat::Json).unwrap();
    let b = render_report(&run_scenario(&cfg).unwrap(), ReportFormat::Json).unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v, serde_json::to_value(&doc).unwrap());
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["config"]["seed"], 5);
    assert_eq!(v["config"]["nu_samples"][4], "1");
}

#[test]
fn markdown_and_file_output() {
    let doc = run_scenario(&ScenarioConfig::new(Family::XKd, 2, 7)).unwrap();
    let dir = tempfile_dir();
    let path = dir.join("x27.md");
    let text = emit_report(&doc, ReportFormat::Markdown, Some(&path)).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
    for needle in ["## Hilbert functions", "(1 nu)", "3x3 nu(nu+1)", "(nu)", "| (1) |"] {
        assert!(text.contains(needle), "missing {needle}");
    }
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("hodge-core-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn low_degree_criterion_in_report() {
    let doc = run_scenario(&ScenarioConfig::fixed(Family::LowdegD4K3)).unwrap();
    assert!(doc.tsp.holds());
    assert!(doc.passed);
    assert!(doc.gram.is_some());
}

#[test]
fn oracle_flags_agree() {
    let doc = run_scenario(&ScenarioConfig::new(Family::DanK1, 1, 5).with_oracle(true)).unwrap();
    let names: Vec<&str> = doc.oracle.iter().map(|c| c.name.as_str()).collect();
    assert!(names.contains(&"general-construction-I1"));
    assert!(doc.oracle.iter().all(|c| c.status == OracleStatus::Agree), "{:?}", doc.oracle);
    let doc = run_scenario(&ScenarioConfig::new(Family::XKd, 2, 6).with_oracle(true)).unwrap();
    let general = doc.oracle.iter().find(|c| c.name == "general-construction").unwrap();
    assert_eq!(general.status, OracleStatus::Skipped);
}
