#![no_main]

use knotpoly::render::{OutputFormat, QnumReport};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(report) = QnumReport::from_json(data) {
        let _ = report.render(OutputFormat::Text);
        let _ = report.render(OutputFormat::Latex);
    }
});
