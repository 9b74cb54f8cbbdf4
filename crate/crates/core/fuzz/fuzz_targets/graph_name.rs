#![no_main]

use libfuzzer_sys::fuzz_target;
use nbcount::graph::{Canonize, GraphName};

fuzz_target!(|text: &str| {
    if let Ok(name) = text.parse::<GraphName>() {
        if let Ok(g) = name.build() {
            // the printed name must describe the same graph
            let again: GraphName = name.to_string().parse().unwrap();
            assert_eq!(again.build().unwrap().canonical_key(), g.canonical_key());
        }
    }
});
