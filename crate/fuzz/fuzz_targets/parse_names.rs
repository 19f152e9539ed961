#![no_main]

use knotpoly::render::OutputFormat;
use knotpoly::{Basis, FormulaId};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(b) = data.parse::<Basis>() {
        assert_eq!(b.to_string().parse::<Basis>().unwrap(), b);
    }
    if let Ok(f) = data.parse::<FormulaId>() {
        assert_eq!(f.name().parse::<FormulaId>().unwrap(), f);
    }
    let _ = data.parse::<OutputFormat>();
});
