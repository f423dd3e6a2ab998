//! Replays the checked-in fuzz corpus, and byte-level mutations of it,
//! through the same entry points the fuzz targets drive. Runs on stable.

use std::fs;
use std::path::PathBuf;

use idealgraph::certificate::CertificateFile;
use idealgraph::number::is_prime;
use idealgraph::sweep::SweepInstances;
use idealgraph::{factorize, Signature};
use proptest::prelude::*;

fn corpus(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files.iter().map(|p| fs::read(p).unwrap()).collect()
}

fn signature(data: &[u8]) {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(sig) = s.parse::<Signature>() {
        assert_eq!(sig.to_string().parse::<Signature>().unwrap(), sig);
    }
}

fn sweep_spec(data: &[u8]) {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = s.parse::<SweepInstances>() {
        assert_eq!(spec.to_string().parse::<SweepInstances>().unwrap(), spec);
    }
}

fn certificate(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else {
        return false;
    };
    CertificateFile::from_json(text)
        .map(|c| c.verify().is_ok())
        .unwrap_or(false)
}

fn factor(data: &[u8]) {
    let Ok(bytes) = <[u8; 8]>::try_from(data) else {
        return;
    };
    let n = u64::from_le_bytes(bytes);
    let Ok(f) = factorize(n) else { return };
    let product = f.factors().iter().fold(1u64, |acc, &(p, e)| {
        assert!(is_prime(p));
        acc * p.pow(e)
    });
    assert_eq!(product, n);
}

#[test]
fn seeds_replay() {
    corpus("parse_signature").iter().for_each(|d| signature(d));
    corpus("parse_sweep_spec")
        .iter()
        .for_each(|d| sweep_spec(d));
    corpus("factorize").iter().for_each(|d| factor(d));
    let verified = corpus("decode_certificate")
        .iter()
        .filter(|d| certificate(d))
        .count();
    // every seed but the truncated one is a genuine certificate
    assert_eq!(verified, corpus("decode_certificate").len() - 1);
}

fn mutate(mut data: Vec<u8>, edits: &[(usize, u8)]) -> Vec<u8> {
    for &(at, byte) in edits {
        if !data.is_empty() {
            let i = at % data.len();
            data[i] = byte;
        }
    }
    data
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mutated_certificates_do_not_panic(seed in 0usize..4, edits in prop::collection::vec((any::<usize>(), any::<u8>()), 1..4)) {
        let seeds = corpus("decode_certificate");
        certificate(&mutate(seeds[seed % seeds.len()].clone(), &edits));
    }

    #[test]
    fn arbitrary_text_does_not_panic(s in "\\PC{0,40}") {
        signature(s.as_bytes());
        sweep_spec(s.as_bytes());
        certificate(s.as_bytes());
    }
}
