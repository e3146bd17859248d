#![no_main]

use libfuzzer_sys::fuzz_target;
use permquot::permgroup::{parse_generators, PermutationGroup};

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(n % 8);
    if let Ok(gens) = parse_generators(text, n) {
        let group = PermutationGroup::closure(gens.clone(), n).unwrap();
        assert!(gens.iter().all(|g| group.contains(g)));
    }
});
