//! The triangle identities and `ε ⊣ ρ` on every builtin, plus the corrupted counit.

mod support;

use freeperm::adjunction::{
    check_adjunction, check_adjunction_corrupted, check_end_triangle, check_free_triangle,
    check_free_triangle_corrupted, check_right_adjoint,
};
use freeperm::multicat::fixtures::two_object_example;
use freeperm::multicat::{initial_operad, terminal_multicategory};
use freeperm::permcat::sign_category;
use freeperm::{Bounds, VerificationReport};
use support::{builtin_multicategories, builtin_permcats};

const B: Bounds = Bounds {
    arity: 3,
    profile: 3,
    parallel: 1,
};

fn assert_passed(r: &VerificationReport) {
    assert!(r.passed(), "{}", r.render_text());
    assert!(r.total_checked() > 0);
}

#[test]
fn free_triangle_on_builtins() {
    for m in builtin_multicategories() {
        assert_passed(&check_free_triangle(m, &B));
    }
}

#[test]
fn end_triangle_on_builtins() {
    for c in builtin_permcats() {
        assert_passed(&check_end_triangle(c, &B));
    }
}

#[test]
fn right_adjoint_on_builtins() {
    for c in builtin_permcats() {
        let r = check_right_adjoint(c, &B);
        assert_passed(&r);
        for fam in ["epsilon-rho", "alpha-epsilon", "alpha-rho"] {
            assert!(r.families.iter().any(|f| f.name == fam && f.checked > 0), "{fam}");
        }
    }
}

#[test]
fn whole_adjunction_on_small_pair() {
    let w = check_adjunction(two_object_example(3), sign_category(), &B);
    assert!(w.passed(), "{}", w.consolidated().render_text());
}

#[test]
fn counit_without_symmetry_is_caught() {
    let r = check_free_triangle_corrupted(terminal_multicategory(3), &B);
    assert!(!r.passed());
    let w = r.witness("free-triangle").expect("witness");
    assert!(w.get("f").is_some());

    let w = check_adjunction_corrupted(initial_operad(), sign_category(), &B);
    assert!(!w.passed());
}
