use std::process::{Command, Output};

use knotpoly::render::{ChebyshevReport, ExpansionReport, OutputFormat, PolyReport, QnumReport};
use knotpoly::{parse_laurent, SweepReport};

fn knotpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn ok(args: &[&str]) -> String {
    let out = knotpoly(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn with_fmt(args: &[&str], fmt: &str) -> String {
    let mut v = args.to_vec();
    v.extend(["--fmt", fmt]);
    ok(&v)
}

#[test]
fn alexander_examples() {
    assert_eq!(
        ok(&["alexander", "--n", "3", "--l", "2", "--form", "standard"]),
        "t^2 - t + 1"
    );
    assert_eq!(
        ok(&[
            "alexander",
            "--n",
            "4",
            "--l",
            "3",
            "--form",
            "laurent",
            "--fmt",
            "latex"
        ]),
        "t^{3} - t^{2} + 1 - t^{-2} + t^{-3}"
    );
    let out = knotpoly(&["alexander", "--n", "4", "--l", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n and l must be coprime"));
    assert_eq!(
        knotpoly(&["alexander", "--n", "0", "--l", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn expand_examples() {
    assert_eq!(
        ok(&["expand", "--n", "7", "--l", "3", "--basis", "delta2"]),
        "+D(13,2) -D(9,2) +D(7,2) -D(3,2) +D(1,2)"
    );
    assert_eq!(
        ok(&["expand", "--n", "5", "--l", "2", "--basis", "T", "--check"]),
        "+T2 -T1 +1"
    );
    assert_eq!(
        knotpoly(&["expand", "--n", "9", "--l", "3", "--basis", "V"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        knotpoly(&["expand", "--n", "5", "--l", "2", "--basis", "delta2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        knotpoly(&["expand", "--n", "5", "--l", "4", "--basis", "T"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ok(&["decompose", "--n", "4"]), "+D(7,2) -D(3,2) +D(1,2)");
}

#[test]
fn verify_exit_codes() {
    let out = knotpoly(&["verify", "--max-n", "20", "--max-l", "20", "--fmt", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = SweepReport::from_json(&stdout(&out)).unwrap();
    assert!(report.checked > 0);
    assert!(report.failures.is_empty());
    assert!(stdout(&out).contains("\"failures\":[]"));

    let out = knotpoly(&["verify", "--max-n", "2", "--max-l", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("elapsed"));
    assert!(!stdout(&out).contains("elapsed"));

    assert_eq!(knotpoly(&["verify", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(knotpoly(&["verify", "--max-n", "x"]).status.code(), Some(2));
    assert_eq!(knotpoly(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn trig_check_runs() {
    assert!(ok(&["trig-check", "--n", "11", "--theta", "0.3,1.1,2.0"]).contains("failures: 0"));
    assert_eq!(knotpoly(&["trig-check", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn compose_form_checks_against_closed_form() {
    assert_eq!(
        ok(&[
            "compose-form",
            "--n",
            "5",
            "--l",
            "2",
            "--formula",
            "EQ37",
            "--check"
        ]),
        "t^2 - t + 1 - t^-1 + t^-2"
    );
    assert_eq!(
        ok(&["compose-form", "--n", "4", "--l", "3", "--formula", "eq49"]),
        "t^3 - t^2 + 1 - t^-2 + t^-3"
    );
    assert_eq!(
        knotpoly(&["compose-form", "--n", "4", "--l", "3", "--formula", "EQ37"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        knotpoly(&["compose-form", "--n", "4", "--l", "3", "--formula", "EQ99"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_round_trips_to_text() {
    let poly_cmds: [&[&str]; 4] = [
        &["alexander", "--n", "7", "--l", "5"],
        &["alexander", "--n", "7", "--l", "5", "--form", "laurent"],
        &[
            "compose-form",
            "--n",
            "8",
            "--l",
            "5",
            "--formula",
            "EQ54_K3",
        ],
        &["compose-form", "--n", "5", "--l", "2", "--formula", "EQ35"],
    ];
    for cmd in poly_cmds {
        let back = PolyReport::from_json(&with_fmt(cmd, "json")).unwrap();
        let text = with_fmt(cmd, "text");
        assert_eq!(back.render(OutputFormat::Text).unwrap(), text, "{cmd:?}");
        // the text and LaTeX renderings denote the same polynomial
        let latex = with_fmt(cmd, "latex");
        assert_eq!(
            parse_laurent(&text).unwrap(),
            parse_laurent(&latex).unwrap()
        );
        assert_eq!(parse_laurent(&text).unwrap(), back.polynomial().unwrap());
    }

    let exp_cmds: [&[&str]; 5] = [
        &["expand", "--n", "7", "--l", "3", "--basis", "V"],
        &["expand", "--n", "7", "--l", "3", "--basis", "T"],
        &["expand", "--n", "7", "--l", "3", "--basis", "q"],
        &["expand", "--n", "9", "--l", "2", "--basis", "q"],
        &["decompose", "--n", "10"],
    ];
    for cmd in exp_cmds {
        let back = ExpansionReport::from_json(&with_fmt(cmd, "json")).unwrap();
        assert_eq!(
            back.render(OutputFormat::Text).unwrap(),
            with_fmt(cmd, "text"),
            "{cmd:?}"
        );
    }

    let q = ["qnum", "--n", "5", "--s", "3"];
    let back = QnumReport::from_json(&with_fmt(&q, "json")).unwrap();
    assert_eq!(
        back.render(OutputFormat::Text).unwrap(),
        with_fmt(&q, "text")
    );

    let c = ["chebyshev", "--kind", "T", "--n", "9"];
    let back = ChebyshevReport::from_json(&with_fmt(&c, "json")).unwrap();
    assert_eq!(
        back.render(OutputFormat::Text).unwrap(),
        with_fmt(&c, "text")
    );

    let v = ["verify", "--max-n", "3", "--max-l", "3"];
    let back = SweepReport::from_json(&with_fmt(&v, "json")).unwrap();
    assert_eq!(
        back.render(OutputFormat::Text).trim_end(),
        with_fmt(&v, "text")
    );
}

#[test]
fn qnum_and_chebyshev() {
    assert_eq!(ok(&["qnum", "--n", "3", "--check"]), "t + 1 + t^-1");
    assert_eq!(
        ok(&["qnum", "--n", "4"]),
        "t^(3/2) + t^(1/2) + t^(-1/2) + t^(-3/2)"
    );
    assert_eq!(
        knotpoly(&["qnum", "--n", "3", "--s", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ok(&["chebyshev", "--kind", "T", "--n", "5", "--check"]),
        "x^5 - 5x^3 + 5x"
    );
    assert_eq!(ok(&["chebyshev", "--kind", "V", "--n", "0"]), "1");
    assert_eq!(ok(&["chebyshev", "--kind", "T", "--n", "0"]), "2");
}
