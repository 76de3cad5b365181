// SPDX-License-Identifier: Apache-2.0

#![no_main]

use dualctl::parse_value;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = parse_value(text) {
        assert_eq!(parse_value(&v.to_string()).expect("rendered value parses"), v);
    }
});
