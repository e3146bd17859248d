#![no_main]

use libfuzzer_sys::fuzz_target;
use permquot::{ExtHalf, HalfInt};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(h) = text.parse::<HalfInt>() {
        assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
    }
    if let Ok(x) = text.parse::<ExtHalf>() {
        assert_eq!(x.to_string().parse::<ExtHalf>().unwrap(), x);
    }
    if let Ok(x) = serde_json::from_str::<ExtHalf>(text) {
        let again = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<ExtHalf>(&again).unwrap(), x);
    }
});
