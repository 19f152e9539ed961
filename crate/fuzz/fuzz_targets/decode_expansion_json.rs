#![no_main]

use knotpoly::render::{ExpansionReport, OutputFormat};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let Ok(report) = ExpansionReport::from_json(data) else { return };
    let Ok(e) = report.expansion() else { return };
    let _ = report.render(OutputFormat::Latex).unwrap();
    let again = ExpansionReport::new(report.n, report.l, &e);
    assert_eq!(again.terms, report.terms);
    assert_eq!(again.constant, report.constant);
});
