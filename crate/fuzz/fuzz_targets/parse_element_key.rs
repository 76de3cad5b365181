// SPDX-License-Identifier: Apache-2.0

#![no_main]

use dualctl::parse_element_key;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&split, rest)) = data.split_first() else {
        return;
    };
    let moduli: Vec<u64> = rest
        .iter()
        .take(usize::from(split % 5))
        .map(|&b| u64::from(b) + 1)
        .collect();
    let Ok(key) = std::str::from_utf8(&rest[moduli.len()..]) else {
        return;
    };
    if let Ok(v) = parse_element_key(key, &moduli) {
        assert_eq!(v.len(), moduli.len());
        assert!(v.iter().zip(&moduli).all(|(r, n)| r < n));
    }
});
