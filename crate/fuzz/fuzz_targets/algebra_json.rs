#![no_main]

use libfuzzer_sys::fuzz_target;
use transrad::io::{algebra_from_json, algebra_json, from_json_str, AlgebraJson};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(j) = from_json_str::<AlgebraJson>(text) else { return };
    if let Ok(a) = algebra_from_json(&j) {
        // whatever was accepted must read back to the same algebra
        let b = algebra_from_json(&algebra_json(&a)).expect("re-reading an accepted algebra");
        assert_eq!(a.dim(), b.dim());
    }
});
