#![no_main]
use libfuzzer_sys::fuzz_target;

use idealgraph::sweep::SweepInstances;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(spec) = s.parse::<SweepInstances>() {
            assert_eq!(spec.to_string().parse::<SweepInstances>().unwrap(), spec);
        }
    }
});
