//! Single-entry mutations of builtins, recording which axiom families catch
//! them with a witness naming an entry the mutation touched.

use std::collections::BTreeMap;

use freeperm::combinatorics::Permutation;
use freeperm::monoid::FiniteMonoid;
use freeperm::multicat::fixtures::{parity_operad, two_object_example};
use freeperm::multicat::{
    terminal_multicategory, validate_multicategory, validate_multifunctor, validate_multinat, Multicategory,
    MulticategoryPresentation, MultinatTransformation, ObjId, OpId, TableMultifunctor,
};
use freeperm::permcat::functor::TableFunctor;
use freeperm::permcat::transformation::MonoidalNat;
use freeperm::permcat::{
    group_enriched, sign_category, validate_monoidal_nat, validate_permcat, validate_smfunctor, CObj, MorId,
    PermCatPresentation, PermutativeCategory,
};
use freeperm::{Bounds, Result, VerificationReport};

pub const B: Bounds = Bounds {
    arity: 3,
    profile: 3,
    parallel: 1,
};

/// Family name → first mutation it caught with a witness naming `touched`.
#[derive(Default)]
pub struct Coverage(pub BTreeMap<String, String>);

impl Coverage {
    fn record(&mut self, label: &str, touched: &[String], report: &VerificationReport) {
        for fam in &report.families {
            if fam.failed == 0 || self.0.contains_key(&fam.name) {
                continue;
            }
            let named = fam
                .witnesses
                .iter()
                .any(|w| touched.iter().any(|t| w.mentions(t)));
            if named {
                self.0.insert(fam.name.clone(), label.to_string());
            }
        }
    }

    /// Families in `families` that no mutation has caught.
    pub fn missing<'a>(&self, families: &[&'a str]) -> Vec<&'a str> {
        families.iter().copied().filter(|f| !self.0.contains_key(*f)).collect()
    }
}

fn op_name(m: &MulticategoryPresentation, op: OpId) -> String {
    m.describe_op(&op)
}

fn multicategory_mutations(m: &MulticategoryPresentation, cov: &mut Coverage) {
    let ops: Vec<OpId> = m.op_ids().collect();
    for c in m.object_ids() {
        for &op in &ops {
            if op == m.unit(&c) {
                continue;
            }
            let bad = m.with_unit(c, op).unwrap();
            let touched = [op_name(m, op), m.describe_obj(&c)];
            cov.record(&format!("unit of {:?}", c), &touched, &validate_multicategory(&bad, &B));
        }
    }
    for &op in &ops {
        for sigma in Permutation::all(m.arity(&op)) {
            let current = m.act(&op, &sigma).unwrap();
            for &r in ops.iter().filter(|r| **r != current) {
                let bad = m.with_action(op, &sigma, r).unwrap();
                let touched = [op_name(m, op), op_name(m, r)];
                cov.record(&format!("action {op:?}·{sigma:?}"), &touched, &validate_multicategory(&bad, &B));
            }
        }
    }
    let entries: Vec<(OpId, Vec<OpId>, OpId)> = m
        .composition_entries()
        .map(|(o, i, r)| (o, i.to_vec(), r))
        .collect();
    for (outer, inner, current) in entries {
        for &r in ops.iter().filter(|r| **r != current) {
            let bad = m.with_composition(outer, &inner, r).unwrap();
            let mut touched = vec![op_name(m, outer), op_name(m, r)];
            touched.extend(inner.iter().map(|&i| op_name(m, i)));
            cov.record(&format!("gamma {outer:?}{inner:?}"), &touched, &validate_multicategory(&bad, &B));
        }
    }
}

/// A presentation whose listing for one signature carries an extra operation.
#[derive(Debug, PartialEq)]
struct Misfiled {
    base: MulticategoryPresentation,
    output: ObjId,
    inputs: Vec<ObjId>,
    extra: OpId,
}

impl Multicategory for Misfiled {
    type Obj = ObjId;
    type Op = OpId;

    fn objects(&self) -> Vec<ObjId> {
        self.base.objects()
    }
    fn arity_bound(&self) -> Option<usize> {
        self.base.arity_bound()
    }
    fn ops(&self, output: &ObjId, inputs: &[ObjId]) -> Result<Vec<OpId>> {
        let mut v = self.base.ops(output, inputs)?;
        if *output == self.output && inputs == self.inputs.as_slice() {
            v.push(self.extra);
        }
        Ok(v)
    }
    fn output(&self, op: &OpId) -> ObjId {
        self.base.output(op)
    }
    fn inputs(&self, op: &OpId) -> Vec<ObjId> {
        self.base.inputs(op)
    }
    fn act(&self, op: &OpId, sigma: &Permutation) -> Result<OpId> {
        self.base.act(op, sigma)
    }
    fn unit(&self, c: &ObjId) -> OpId {
        self.base.unit(c)
    }
    fn gamma(&self, outer: &OpId, inner: &[OpId]) -> Result<OpId> {
        self.base.gamma(outer, inner)
    }
    fn describe_obj(&self, c: &ObjId) -> String {
        self.base.describe_obj(c)
    }
    fn describe_op(&self, op: &OpId) -> String {
        self.base.describe_op(op)
    }
}

pub fn multicategory_coverage() -> Coverage {
    let mut cov = Coverage::default();
    for m in [two_object_example(3), parity_operad(3), terminal_multicategory(3)] {
        multicategory_mutations(&m, &mut cov);
    }
    let m = terminal_multicategory(3);
    let star = m.object_ids().next().unwrap();
    let iota2 = m.op_id("iota2").unwrap();
    let bad = Misfiled {
        base: m.clone(),
        output: star,
        inputs: vec![star],
        extra: iota2,
    };
    cov.record("misfiled iota2", &["iota2".into()], &validate_multicategory(&bad, &B));
    cov
}

fn mor_name(c: &PermCatPresentation, m: MorId) -> String {
    c.describe_mor(&m)
}

fn permcat_mutations(c: &PermCatPresentation, cov: &mut Coverage) {
    let objects: Vec<CObj> = c.object_ids().collect();
    let mors: Vec<MorId> = c.mor_ids().collect();
    let mut check = |label: String, touched: Vec<String>, bad: PermCatPresentation| {
        cov.record(&label, &touched, &validate_permcat(&bad, &B));
    };
    for &x in &objects {
        for &m in mors.iter().filter(|m| **m != c.identity(&x)) {
            check(
                format!("identity of {x:?}"),
                vec![mor_name(c, m)],
                c.clone().with_identity(x, m),
            );
        }
    }
    let entries: Vec<(MorId, MorId, MorId)> = c.composition_entries().collect();
    for (g, f, current) in entries {
        for &r in mors.iter().filter(|r| **r != current) {
            check(
                format!("{g:?}∘{f:?}"),
                vec![mor_name(c, g), mor_name(c, f), mor_name(c, r)],
                c.clone().with_composition(g, f, r).unwrap(),
            );
        }
    }
    for &x in &objects {
        for &y in &objects {
            for &z in objects.iter().filter(|z| **z != c.sum_obj(&x, &y)) {
                check(
                    format!("{x:?}⊕{y:?}"),
                    vec![c.describe_obj(&x), c.describe_obj(&z)],
                    c.clone().with_object_sum(x, y, z),
                );
            }
            for &m in mors.iter().filter(|m| **m != c.symmetry(&x, &y)) {
                check(
                    format!("ξ {x:?},{y:?}"),
                    vec![mor_name(c, m), c.describe_obj(&x), c.describe_obj(&y)],
                    c.clone().with_symmetry(x, y, m),
                );
            }
        }
    }
    for &a in &mors {
        for &b in &mors {
            let current = c.sum_mor(&a, &b).unwrap();
            for &r in mors.iter().filter(|r| **r != current) {
                check(
                    format!("{a:?}⊕{b:?}"),
                    vec![mor_name(c, a), mor_name(c, b), mor_name(c, r)],
                    c.clone().with_morphism_sum(a, b, r),
                );
            }
        }
    }
    for &e in objects.iter().filter(|e| **e != c.unit_obj()) {
        check(format!("unit {e:?}"), vec![c.describe_obj(&e)], c.clone().with_unit(e));
    }
}

/// A presentation that lists one morphism in a hom-set it does not belong to.
#[derive(Debug, PartialEq)]
struct ExtraHom {
    base: PermCatPresentation,
    x: CObj,
    y: CObj,
    extra: MorId,
}

impl PermutativeCategory for ExtraHom {
    type Obj = CObj;
    type Mor = MorId;

    fn objects(&self) -> Vec<CObj> {
        self.base.objects()
    }
    fn hom(&self, x: &CObj, y: &CObj) -> Result<Vec<MorId>> {
        let mut v = self.base.hom(x, y)?;
        if (*x, *y) == (self.x, self.y) {
            v.push(self.extra);
        }
        Ok(v)
    }
    fn source(&self, m: &MorId) -> CObj {
        self.base.source(m)
    }
    fn target(&self, m: &MorId) -> CObj {
        self.base.target(m)
    }
    fn identity(&self, x: &CObj) -> MorId {
        self.base.identity(x)
    }
    fn compose(&self, second: &MorId, first: &MorId) -> Result<MorId> {
        self.base.compose(second, first)
    }
    fn sum_obj(&self, x: &CObj, y: &CObj) -> CObj {
        self.base.sum_obj(x, y)
    }
    fn unit_obj(&self) -> CObj {
        self.base.unit_obj()
    }
    fn sum_mor(&self, a: &MorId, b: &MorId) -> Result<MorId> {
        self.base.sum_mor(a, b)
    }
    fn symmetry(&self, x: &CObj, y: &CObj) -> MorId {
        self.base.symmetry(x, y)
    }
    fn describe_obj(&self, x: &CObj) -> String {
        self.base.describe_obj(x)
    }
    fn describe_mor(&self, m: &MorId) -> String {
        self.base.describe_mor(m)
    }
}

fn z3() -> FiniteMonoid {
    FiniteMonoid::cyclic(3)
}

pub fn permcat_coverage() -> Coverage {
    let mut cov = Coverage::default();
    for c in [group_enriched(2, &z3()).unwrap(), sign_category()] {
        permcat_mutations(&c, &mut cov);
    }
    let c = group_enriched(2, &z3()).unwrap();
    let (zero, one) = (CObj(0), CObj(1));
    let stray = c.hom(&one, &one).unwrap()[1];
    let bad = ExtraHom {
        base: c.clone(),
        x: zero,
        y: one,
        extra: stray,
    };
    cov.record("stray morphism", &[mor_name(&c, stray)], &validate_permcat(&bad, &B));
    cov
}

pub fn multifunctor_coverage() -> Coverage {
    let mut cov = Coverage::default();
    for m in [parity_operad(3), two_object_example(3)] {
        let objects: Vec<ObjId> = m.object_ids().collect();
        let ops: Vec<OpId> = m.op_ids().collect();
        let id = TableMultifunctor::new(&m, &m, objects, ops.clone()).unwrap();
        assert!(validate_multifunctor(&id, &B).passed());
        for &op in &ops {
            for &image in ops.iter().filter(|i| **i != op) {
                let bad = id.with_op_image(op, image).unwrap();
                let touched = [op_name(&m, op), op_name(&m, image)];
                cov.record(&format!("{op:?} ↦ {image:?}"), &touched, &validate_multifunctor(&bad, &B));
            }
        }
    }
    cov
}

pub fn multinat_coverage() -> Coverage {
    let mut cov = Coverage::default();
    for m in [parity_operad(3), two_object_example(3)] {
        let objects: Vec<ObjId> = m.object_ids().collect();
        let ops: Vec<OpId> = m.op_ids().collect();
        let id = TableMultifunctor::new(&m, &m, objects.clone(), ops.clone()).unwrap();
        let theta = MultinatTransformation::identity(id.clone());
        assert!(validate_multinat(&theta, &B).passed());
        for &c in &objects {
            for &op in ops.iter().filter(|op| **op != m.unit(&c)) {
                let Ok(bad) = theta.with_component(c, op) else {
                    continue;
                };
                let touched = [op_name(&m, op)];
                cov.record(&format!("θ_{c:?} = {op:?}"), &touched, &validate_multinat(&bad, &B));
            }
        }
    }
    cov
}

fn identity_table(c: &PermCatPresentation) -> TableFunctor<'_> {
    TableFunctor::new(c, c, c.object_ids().collect(), c.mor_ids().collect()).unwrap()
}

pub fn smfunctor_coverage() -> Coverage {
    let mut cov = Coverage::default();
    for c in [group_enriched(2, &z3()).unwrap(), sign_category()] {
        let id = identity_table(&c);
        assert!(validate_smfunctor(&id, &B).passed());
        for x in c.object_ids() {
            for y in c.object_ids().filter(|y| *y != x) {
                let bad = id.clone().with_object_image(x, y);
                let touched = [c.describe_obj(&x), c.describe_obj(&y)];
                cov.record(&format!("{x:?} ↦ {y:?}"), &touched, &validate_smfunctor(&bad, &B));
            }
        }
        for m in c.mor_ids() {
            for n in c.mor_ids().filter(|n| *n != m) {
                let bad = id.clone().with_mor_image(m, n);
                let touched = [mor_name(&c, m), mor_name(&c, n)];
                cov.record(&format!("{m:?} ↦ {n:?}"), &touched, &validate_smfunctor(&bad, &B));
            }
        }
    }
    cov
}

pub fn monoidal_nat_coverage() -> Coverage {
    let mut cov = Coverage::default();
    for c in [group_enriched(2, &z3()).unwrap(), sign_category()] {
        let id = identity_table(&c);
        let alpha = MonoidalNat::from_fn(id.clone(), id.clone(), |x| Ok(c.identity(x))).unwrap();
        assert!(validate_monoidal_nat(&alpha, &B).passed());
        for x in c.object_ids() {
            for m in c.mor_ids().filter(|m| *m != c.identity(&x)) {
                let bad = alpha.clone().with_component(x, m);
                let touched = [mor_name(&c, m)];
                cov.record(&format!("α_{x:?} = {m:?}"), &touched, &validate_monoidal_nat(&bad, &B));
            }
        }
    }
    cov
}
