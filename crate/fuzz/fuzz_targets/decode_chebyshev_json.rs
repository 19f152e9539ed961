#![no_main]

use knotpoly::render::{ChebyshevReport, OutputFormat};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let Ok(report) = ChebyshevReport::from_json(data) else { return };
    if let Ok(text) = report.render(OutputFormat::Text) {
        assert!(!text.is_empty());
    }
});
