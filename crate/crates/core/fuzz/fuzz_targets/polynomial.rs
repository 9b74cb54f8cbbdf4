#![no_main]

use libfuzzer_sys::fuzz_target;
use nbcount::polynom::RationalPoly;

fuzz_target!(|text: &str| {
    if let Ok(p) = text.parse::<RationalPoly>() {
        assert_eq!(p.to_string().parse::<RationalPoly>().unwrap(), p);
        assert_eq!(p.display_falling().parse::<RationalPoly>().unwrap(), p);
    }
});
