// SPDX-License-Identifier: Apache-2.0

#![no_main]

use dualctl::NormDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = NormDocument::parse(text) else {
        return;
    };
    // Keep group construction cheap.
    if doc.group.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n)).is_none_or(|n| n > 256) {
        return;
    }
    if let Ok(q) = doc.build() {
        let back = NormDocument::from_quasinorm(&q).expect("full-group table");
        assert_eq!(back.build().expect("round trip validates"), q);
    }
});
