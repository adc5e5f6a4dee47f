//! Unit, associativity and interchange laws for multinatural transformations.

mod support;

use freeperm::multicat::fixtures::{parity_operad, two_object_example};
use freeperm::multicat::{enumerate_multifunctors, initial_operad, terminal_multicategory};
use support::two_cell::{all_nats, laws, B};

#[test]
fn laws_into_terminal() {
    let mterm = terminal_multicategory(3);
    assert!(laws(&initial_operad(), &mterm, &mterm) > 0);
    assert!(laws(&two_object_example(3), &mterm, &mterm) > 0);
}

#[test]
fn at_most_two_multifunctors_into_terminal() {
    let mterm = terminal_multicategory(3);
    for m in [initial_operad(), two_object_example(3)] {
        let fs = enumerate_multifunctors(&m, &mterm, &B).unwrap();
        assert!((1..=2).contains(&fs.len()));
    }
}

#[test]
fn laws_with_nontrivial_components() {
    let parity = parity_operad(3);
    let mtu = initial_operad();
    let fs = enumerate_multifunctors(&mtu, &parity, &B).unwrap();
    assert!(all_nats(&fs).len() > 1);
    assert!(laws(&mtu, &parity, &parity) > 0);
}
