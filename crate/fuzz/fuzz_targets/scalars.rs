#![no_main]

use libfuzzer_sys::fuzz_target;
use transrad::strings::P1Point;
use transrad::{FieldSpec, Scalar};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = text.parse::<Scalar>() {
        assert_eq!(s.to_string().parse::<Scalar>().unwrap(), s);
        let _ = FieldSpec::Prime { p: 7 }.element(&s);
    }
    if let Ok(points) = P1Point::parse_list(text) {
        for p in points {
            assert_eq!(p.to_string().parse::<P1Point>().unwrap(), p);
        }
    }
    if let Ok(f) = text.parse::<FieldSpec>() {
        let _ = f.parse("3/2");
    }
});
