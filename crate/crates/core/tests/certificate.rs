use scf_core::generator::alpha;
use scf_core::profile::profile;
use scf_core::scan::{certify_n, scan};
use scf_core::verify::{certify, verify};
use scf_core::{Case, Error, FieldElement, GeneratorCertificate};

#[test]
fn certificates_round_trip_through_json() {
    for n in [-500, -9, 0, 1, 2, 3, 12, 54, 90, 237, 1_000_000] {
        let cert = certify_n(n).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: GeneratorCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert, "n = {n}");
        assert_eq!(verify(&back), cert.checks);
    }
}

#[test]
fn large_parameters_certify() {
    for n in [999_999_999, -1_000_000_000, 123_456_789, 387_420_489] {
        let cert = certify_n(n).unwrap();
        assert!(cert.all_passed(), "n = {n}: {:?}", cert.failed_checks());
    }
    assert!(matches!(certify_n(1_000_000_001), Err(Error::ParameterOutOfRange { .. })));
}

#[test]
fn certify_is_idempotent() {
    let p = profile(237).unwrap();
    let once = certify(alpha(&p).unwrap());
    assert_eq!(certify(once.clone()), once);
}

#[test]
fn wrong_field_alpha_fails_verification() {
    let mut cert = alpha(&profile(90).unwrap()).unwrap();
    cert.alpha = FieldElement::from_integers(90, [0, 1, 0], 2);
    let cert = certify(cert);
    assert!(!cert.all_passed());
    assert!(cert.failed_checks().contains(&"integral"));
}

#[test]
fn scan_summary_counts() {
    let s = scan(1, 300, 2).unwrap();
    assert_eq!(s.total, 300);
    assert!(s.all_passed());
    assert_eq!(s.counts.values().sum::<usize>(), 300);
    let wild_ii = s.counts[&Case::WildII];
    assert_eq!(wild_ii, 23);
}
