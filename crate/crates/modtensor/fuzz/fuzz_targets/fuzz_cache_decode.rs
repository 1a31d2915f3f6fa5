//! Cache decoding must be total: arbitrary bytes either decode to a cache
//! file or fail with an error, and every decoded table either revalidates
//! into a usable context or is rejected, without panicking anywhere.

#![no_main]

use libfuzzer_sys::fuzz_target;
use modtensor::cache;

fuzz_target!(|data: &[u8]| {
    let Ok(file) = cache::from_json_bytes(data) else { return };
    for table in &file.tables {
        let _ = cache::context_from_table(table);
    }
});
