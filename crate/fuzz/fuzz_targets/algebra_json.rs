#![no_main]
//! The JSON algebra decoder must reject malformed input with an error,
//! never a panic, and anything it accepts must survive the validator.
//! Validation is skipped for large dimensions to keep iterations fast.

use libfuzzer_sys::fuzz_target;
use superpi::algebras::from_json;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = from_json(text) {
        if a.dim() <= 16 {
            let _ = a.validate();
        }
    }
});
