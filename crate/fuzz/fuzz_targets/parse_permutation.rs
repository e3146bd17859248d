#![no_main]

use libfuzzer_sys::fuzz_target;
use permquot::permgroup::parse_permutation;

// First byte picks the degree, the rest is the cycle string.
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(n % 16);
    if let Ok(g) = parse_permutation(text, n) {
        assert_eq!(g.degree(), n);
        assert_eq!(parse_permutation(&g.to_string(), n).unwrap(), g);
    }
});
