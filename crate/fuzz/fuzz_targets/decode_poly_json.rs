#![no_main]

use knotpoly::render::{parse_laurent, OutputFormat, PolyReport};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let Ok(report) = PolyReport::from_json(data) else { return };
    let Ok(p) = report.polynomial() else { return };
    let text = report.render(OutputFormat::Text).unwrap();
    assert_eq!(parse_laurent(&text).unwrap(), p);
    let json = report.render(OutputFormat::Json).unwrap();
    assert_eq!(PolyReport::from_json(&json).unwrap(), report);
});
