#![no_main]

use libfuzzer_sys::fuzz_target;
use nbcount::verify::CatalogAssignment;

fuzz_target!(|text: &str| {
    if let Ok(a) = CatalogAssignment::from_golden(text) {
        let again = CatalogAssignment::from_golden(&a.to_golden()).unwrap();
        assert_eq!(again, a);
    }
});
