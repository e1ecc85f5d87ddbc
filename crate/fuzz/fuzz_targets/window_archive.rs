#![no_main]

use libfuzzer_sys::fuzz_target;
use transrad::ideal::radical_ideal;
use transrad::io::{from_json_str, window_from_archive, WindowArchive};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(ar) = from_json_str::<WindowArchive>(text) else { return };
    if let Ok(w) = window_from_archive(&ar) {
        if w.len() <= 8 {
            let _ = radical_ideal(&w);
        }
    }
});
