#![no_main]
use libfuzzer_sys::fuzz_target;

use idealgraph::Signature;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(sig) = s.parse::<Signature>() {
        let again: Signature = sig.to_string().parse().expect("display output parses");
        assert_eq!(again, sig);
        assert!(sig.exponents().windows(2).all(|w| w[0] <= w[1]));
        let _ = sig.vertex_count();
    }
});
