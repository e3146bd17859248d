#![no_main]

use libfuzzer_sys::fuzz_target;
use permquot::classifier::classify;
use permquot::permgroup::GroupPreset;
use permquot::Characteristic;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(name) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(n % 7);
    let Ok(preset) = GroupPreset::parse(name, n) else {
        return;
    };
    if let Ok(group) = preset.build(n) {
        for p in [0, 2, 3, 5] {
            classify(&group, Characteristic::new(p).unwrap()).unwrap();
        }
    }
});
