//! The builtin documents emitted by `freeperm examples`.

use freeperm::monoid::FiniteMonoid;
use freeperm::multicat::fixtures::two_object_example;
use freeperm::multicat::{empty_multicategory, initial_operad, terminal_multicategory, Multicategory};
use freeperm::permcat::{discrete_commutative_monoid, group_enriched, sign_category, CObj, MorId};

use crate::document::{Document, MonoidalNatData, MultifunctorData, MultinatData, SmFunctorData};

/// `(file stem, document)` for every builtin, in a fixed order.
pub fn builtin_documents() -> Vec<(String, Document)> {
    let mut out = Vec::new();
    let mut push = |stem: &str, doc: Document| out.push((stem.to_string(), doc));

    push("initial_operad", Document::Multicategory(initial_operad()));
    push("terminal_multicategory_3", Document::Multicategory(terminal_multicategory(3)));
    push("terminal_multicategory_4", Document::Multicategory(terminal_multicategory(4)));
    push("empty_multicategory", Document::Multicategory(empty_multicategory()));
    push("two_object_example_3", Document::Multicategory(two_object_example(3)));

    let z2 = FiniteMonoid::cyclic(2);
    let z3 = FiniteMonoid::cyclic(3);
    let discrete_z2 = discrete_commutative_monoid(&z2).expect("Z/2 is commutative");
    push("discrete_z2", Document::Permcat(discrete_z2.clone()));
    push(
        "discrete_max",
        Document::Permcat(discrete_commutative_monoid(&FiniteMonoid::boolean_or()).expect("max is commutative")),
    );
    push("group_enriched_1_z2", Document::Permcat(group_enriched(1, &z2).expect("abelian group")));
    push("group_enriched_2_z3", Document::Permcat(group_enriched(2, &z3).expect("abelian group")));
    push("sign_category", Document::Permcat(sign_category()));

    let mtu = initial_operad();
    let mterm = terminal_multicategory(3);
    let iota1 = mterm.op_id("iota1").expect("builtin names");
    let star = mterm.object_id("*").expect("builtin names");
    let to_terminal = (vec![star], vec![iota1]);
    push(
        "initial_to_terminal",
        Document::Multifunctor(MultifunctorData {
            name: "initial_to_terminal".into(),
            source: mtu.clone(),
            target: mterm.clone(),
            object_map: to_terminal.0.clone(),
            op_map: to_terminal.1.clone(),
        }),
    );
    push(
        "initial_to_terminal_identity",
        Document::Multinat(MultinatData {
            name: "initial_to_terminal_identity".into(),
            components: vec![mterm.unit(&star)],
            source: mtu,
            target: mterm,
            from: to_terminal.clone(),
            to: to_terminal,
        }),
    );

    let zero = discrete_z2.object_id("0").expect("builtin names");
    let id0 = discrete_z2.mor_id("1_0").expect("builtin names");
    push(
        "discrete_z2_collapse",
        Document::SmFunctor(SmFunctorData {
            name: "discrete_z2_collapse".into(),
            source: discrete_z2.clone(),
            target: discrete_z2,
            object_map: vec![zero, zero],
            mor_map: vec![id0, id0],
        }),
    );

    // α_x = x@x on group_enriched(3, ℤ/3)
    let c3 = group_enriched(3, &z3).expect("abelian group");
    let objects: Vec<CObj> = (0..3).map(CObj).collect();
    let mors: Vec<MorId> = (0..9).map(MorId).collect();
    push(
        "group_enriched_3_z3_character",
        Document::MonoidalNat(MonoidalNatData {
            name: "group_enriched_3_z3_character".into(),
            components: objects.iter().map(|x| MorId(x.0 * 3 + x.0)).collect(),
            source: c3.clone(),
            target: c3,
            from: (objects.clone(), mors.clone()),
            to: (objects, mors),
        }),
    );
    out
}
