#![no_main]
use libfuzzer_sys::fuzz_target;

use idealgraph::certificate::CertificateFile;

// Decoding and verification must reject bad input without panicking.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cert) = CertificateFile::from_json(text) {
        let _ = cert.verify();
    }
});
