// SPDX-License-Identifier: Apache-2.0

#![no_main]

use dualctl::RealNormDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = RealNormDocument::parse(text) {
        let norm = doc.to_norm();
        let _ = norm.validate(&Default::default());
    }
});
