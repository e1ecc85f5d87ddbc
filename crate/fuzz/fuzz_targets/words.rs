#![no_main]

use libfuzzer_sys::fuzz_target;
use transrad::strings::{band_module, string_module, BandWord, P1Point, StringWord};
use transrad::{FieldSpec, Preset};

// First byte picks the algebra, the rest is a string or band word.
fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(word) = std::str::from_utf8(rest) else { return };
    if word.len() > 256 {
        return;
    }
    let preset = match pick % 3 {
        0 => Preset::Lambda2,
        1 => Preset::GelfandPonomarev { m: 2, n: 3 },
        _ => Preset::Kronecker,
    };
    let a = preset.build(FieldSpec::Rationals).unwrap();
    if let Ok(w) = StringWord::parse(&a, word) {
        if let Ok(m) = string_module(&a, &w) {
            assert_eq!(m.dim(), w.len() + 1);
            assert_eq!(StringWord::parse(&a, &w.format(&a)).unwrap(), w);
        }
    }
    if let Ok(b) = BandWord::parse(&a, word) {
        assert_eq!(BandWord::parse(&a, &b.format(&a)).unwrap(), b);
        let m = band_module(&a, &b, &P1Point::Infinity, 1).unwrap();
        assert_eq!(m.dim(), b.len());
    }
});
