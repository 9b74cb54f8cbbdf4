#![no_main]

use libfuzzer_sys::fuzz_target;
use nbcount::graph::{emit_graph6, parse_graph6, parse_graph6_lines};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6(data) {
        let text = emit_graph6(&g);
        assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_graph6_lines(text);
    }
});
