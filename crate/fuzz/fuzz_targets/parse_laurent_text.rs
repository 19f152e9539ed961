#![no_main]

use knotpoly::render::{laurent_latex, laurent_text, parse_laurent};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if data.len() > 4096 {
        return;
    }
    if let Ok(p) = parse_laurent(data) {
        assert_eq!(parse_laurent(&laurent_text(&p)).unwrap(), p);
        assert_eq!(parse_laurent(&laurent_latex(&p)).unwrap(), p);
    }
});
