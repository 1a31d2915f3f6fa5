//! Weight parsing must never panic: any byte string either parses to a
//! weight or reports an error. Parsed weights must survive a display
//! round-trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use modtensor::rootdata::Weight;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = Weight::parse_arg(s) {
        let rendered = format!("{},{}", w.a, w.b);
        let back = Weight::parse_arg(&rendered).expect("rendered weights parse");
        assert_eq!(back, w);
    }
});
