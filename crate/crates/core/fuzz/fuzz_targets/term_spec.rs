#![no_main]

use libfuzzer_sys::fuzz_target;
use nbcount::counting::TermSpec;

fuzz_target!(|text: &str| {
    if let Ok(t) = text.parse::<TermSpec>() {
        assert_eq!(t.to_string().parse::<TermSpec>().unwrap(), t);
    }
});
