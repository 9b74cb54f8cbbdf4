#![no_main]

use libfuzzer_sys::fuzz_target;
use nbcount::verify::{load_identity, load_table};

fuzz_target!(|text: &str| {
    let _ = load_table(text);
    let _ = load_identity(text);
});
