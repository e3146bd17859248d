#![no_main]

use libfuzzer_sys::fuzz_target;
use permquot::classifier::ClassificationReport;

fuzz_target!(|data: &[u8]| {
    if let Ok(report) = serde_json::from_slice::<ClassificationReport>(data) {
        let text = serde_json::to_string(&report).unwrap();
        let again: ClassificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(again, report);
    }
});
