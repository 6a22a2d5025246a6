mod common;

#[test]
fn membership_agrees_with_linear_algebra() {
    let a = common::membership_agreement();
    assert_eq!(a.agree, a.total);
    assert!(a.members >= 20 && a.total - a.members >= 20, "both outcomes should occur");
}

#[test]
fn staircase_length_matches_groebner_count() {
    let a = common::staircase_agreement();
    assert_eq!(a.agree, a.total);
}
