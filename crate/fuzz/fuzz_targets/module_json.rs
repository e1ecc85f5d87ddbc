#![no_main]

use libfuzzer_sys::fuzz_target;
use transrad::io::{from_json_str, module_file, module_from_file, ModuleFile};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(f) = from_json_str::<ModuleFile>(text) else { return };
    if let Ok(m) = module_from_file(&f) {
        let back = module_from_file(&module_file(&m)).expect("re-reading an accepted module");
        assert_eq!(back.dims(), m.dims());
        assert_eq!(back.maps(), m.maps());
    }
});
