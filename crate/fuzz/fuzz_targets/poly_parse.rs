#![no_main]
//! Round trip for the polynomial text format: anything that parses must
//! print to a string that reparses to the same polynomial, and printing
//! must be a fixed point.

use libfuzzer_sys::fuzz_target;
use superpi::freealg::{parse, Mode};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for mode in [Mode::Superinvolution, Mode::GradedInvolution] {
        if let Ok(p) = parse(text, mode) {
            let printed = p.to_string();
            let reparsed = parse(&printed, mode).expect("printed form must reparse");
            assert_eq!(reparsed, p, "reparse changed the polynomial");
            assert_eq!(reparsed.to_string(), printed, "printing is not a fixed point");
        }
    }
});
