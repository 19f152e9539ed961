#![no_main]

use knotpoly::render::OutputFormat;
use knotpoly::SweepReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let Ok(report) = SweepReport::from_json(data) else { return };
    let json = report.render(OutputFormat::Json);
    let back = SweepReport::from_json(&json).unwrap();
    assert!(back.same_outcome(&report));
    let _ = report.render(OutputFormat::Text);
});
