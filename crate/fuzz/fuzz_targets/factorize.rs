#![no_main]
use libfuzzer_sys::fuzz_target;

use idealgraph::number::is_prime;

fuzz_target!(|data: [u8; 8]| {
    let n = u64::from_le_bytes(data);
    let Ok(f) = idealgraph::factorize(n) else {
        return;
    };
    let mut product = 1u64;
    for &(p, e) in f.factors() {
        assert!(is_prime(p), "{p} is not prime");
        product = product
            .checked_mul(p.pow(e))
            .expect("factors multiply back to n");
    }
    assert_eq!(product, n);
});
