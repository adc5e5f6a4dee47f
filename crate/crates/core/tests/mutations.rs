//! Every axiom family must catch some single-entry mutation of a builtin, and
//! its witness must name an entry touched by the mutation.

mod support;

use freeperm::multicat::functor::MULTIFUNCTOR_FAMILIES;
use freeperm::multicat::transformation::MULTINAT_FAMILIES;
use freeperm::multicat::validate::MULTICATEGORY_FAMILIES;
use freeperm::multicat::{terminal_multicategory, validate_multicategory};
use freeperm::permcat::functor::SMFUNCTOR_FAMILIES;
use freeperm::permcat::transformation::MONOIDAL_NAT_FAMILIES;
use freeperm::permcat::validate::PERMCAT_FAMILIES;
use support::mutation::{self, Coverage, B};

fn assert_covers(cov: Coverage, families: &[&str]) {
    let missing = cov.missing(families);
    assert!(missing.is_empty(), "uncaught families: {missing:?}");
}

#[test]
fn multicategory_families() {
    assert_covers(mutation::multicategory_coverage(), MULTICATEGORY_FAMILIES);
}

#[test]
fn permcat_families() {
    assert_covers(mutation::permcat_coverage(), PERMCAT_FAMILIES);
}

#[test]
fn multifunctor_families() {
    assert_covers(mutation::multifunctor_coverage(), MULTIFUNCTOR_FAMILIES);
}

#[test]
fn multinat_families() {
    assert_covers(mutation::multinat_coverage(), MULTINAT_FAMILIES);
}

#[test]
fn smfunctor_families() {
    assert_covers(mutation::smfunctor_coverage(), SMFUNCTOR_FAMILIES);
}

#[test]
fn monoidal_nat_families() {
    assert_covers(mutation::monoidal_nat_coverage(), MONOIDAL_NAT_FAMILIES);
}

#[test]
fn redirected_gamma_in_terminal_multicategory() {
    let m = terminal_multicategory(3);
    let iota1 = m.op_id("iota1").unwrap();
    let iota2 = m.op_id("iota2").unwrap();
    let bad = m.with_composition(iota2, &[iota2, iota1], iota2).unwrap();
    let r = validate_multicategory(&bad, &B);
    assert!(!r.passed());
    let w = r.witness("associativity").or_else(|| r.witness("right-unity")).expect("detected");
    assert!(w.mentions("iota2"));
}
