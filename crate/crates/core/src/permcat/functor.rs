//! Functors between permutative categories and their strict symmetric
//! monoidal laws.

use crate::error::{Error, Result};
use crate::report::{FamilyRecord, VerificationReport};
use crate::verify::{fan_out, Bounds};

use super::homs::{Compositions, HomIndex, BROKEN};
use super::presentation::{CObj, MorId, PermCatPresentation};
use super::validate::inst;
use super::{PMor, PObj, PermutativeCategory};

pub trait Functor: Sync {
    type Source: PermutativeCategory;
    type Target: PermutativeCategory;

    fn source(&self) -> &Self::Source;

    fn target(&self) -> &Self::Target;

    fn map_obj(&self, x: &PObj<Self::Source>) -> PObj<Self::Target>;

    fn map_mor(&self, m: &PMor<Self::Source>) -> Result<PMor<Self::Target>>;
}

impl<T: Functor> Functor for &T {
    type Source = T::Source;
    type Target = T::Target;

    fn source(&self) -> &Self::Source {
        (**self).source()
    }
    fn target(&self) -> &Self::Target {
        (**self).target()
    }
    fn map_obj(&self, x: &PObj<Self::Source>) -> PObj<Self::Target> {
        (**self).map_obj(x)
    }
    fn map_mor(&self, m: &PMor<Self::Source>) -> Result<PMor<Self::Target>> {
        (**self).map_mor(m)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityFunctor<C> {
    cat: C,
}

impl<C: PermutativeCategory> IdentityFunctor<C> {
    pub fn new(cat: C) -> Self {
        Self { cat }
    }
}

impl<C: PermutativeCategory> Functor for IdentityFunctor<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.cat
    }
    fn target(&self) -> &C {
        &self.cat
    }
    fn map_obj(&self, x: &C::Obj) -> C::Obj {
        x.clone()
    }
    fn map_mor(&self, m: &C::Mor) -> Result<C::Mor> {
        Ok(m.clone())
    }
}

/// A functor between table presentations, given by object and morphism maps.
#[derive(Debug, Clone, PartialEq)]
pub struct TableFunctor<'a> {
    source: &'a PermCatPresentation,
    target: &'a PermCatPresentation,
    object_map: Vec<CObj>,
    mor_map: Vec<MorId>,
}

impl<'a> TableFunctor<'a> {
    pub fn new(
        source: &'a PermCatPresentation,
        target: &'a PermCatPresentation,
        object_map: Vec<CObj>,
        mor_map: Vec<MorId>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count() || mor_map.len() != source.morphism_count() {
            return Err(Error::Structural(
                "functor tables must cover every source object and morphism".into(),
            ));
        }
        if object_map.iter().any(|x| x.0 >= target.object_count())
            || mor_map.iter().any(|m| m.0 >= target.morphism_count())
        {
            return Err(Error::Structural("functor table names a dangling target id".into()));
        }
        Ok(Self {
            source,
            target,
            object_map,
            mor_map,
        })
    }

    pub fn object_map(&self) -> &[CObj] {
        &self.object_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    pub fn with_object_image(mut self, x: CObj, image: CObj) -> Self {
        self.object_map[x.0] = image;
        self
    }

    pub fn with_mor_image(mut self, m: MorId, image: MorId) -> Self {
        self.mor_map[m.0] = image;
        self
    }
}

impl Functor for TableFunctor<'_> {
    type Source = PermCatPresentation;
    type Target = PermCatPresentation;

    fn source(&self) -> &PermCatPresentation {
        self.source
    }
    fn target(&self) -> &PermCatPresentation {
        self.target
    }
    fn map_obj(&self, x: &CObj) -> CObj {
        self.object_map[x.0]
    }
    fn map_mor(&self, m: &MorId) -> Result<MorId> {
        Ok(self.mor_map[m.0])
    }
}

/// `outer ∘ inner`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComposedFunctor<G, F> {
    outer: G,
    inner: F,
}

impl<G, F> ComposedFunctor<G, F> {
    pub fn outer(&self) -> &G {
        &self.outer
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }
}

pub fn compose_functors<G, F>(outer: G, inner: F) -> Result<ComposedFunctor<G, F>>
where
    F: Functor,
    G: Functor<Source = F::Target>,
{
    if outer.source() != inner.target() {
        return Err(Error::EndpointMismatch(
            "source of the outer functor is not the target of the inner one".into(),
        ));
    }
    Ok(ComposedFunctor { outer, inner })
}

impl<G, F> Functor for ComposedFunctor<G, F>
where
    F: Functor,
    G: Functor<Source = F::Target>,
{
    type Source = F::Source;
    type Target = G::Target;

    fn source(&self) -> &F::Source {
        self.inner.source()
    }
    fn target(&self) -> &G::Target {
        self.outer.target()
    }
    fn map_obj(&self, x: &PObj<F::Source>) -> PObj<G::Target> {
        self.outer.map_obj(&self.inner.map_obj(x))
    }
    fn map_mor(&self, m: &PMor<F::Source>) -> Result<PMor<G::Target>> {
        self.outer.map_mor(&self.inner.map_mor(m)?)
    }
}

pub const FUNCTOR_FAMILIES: &[&str] = &["morphism-typing", "identities", "composition"];

pub const SMFUNCTOR_FAMILIES: &[&str] = &[
    "morphism-typing",
    "identities",
    "composition",
    "unit",
    "sum-objects",
    "sum-morphisms",
    "symmetry",
];

/// Functor laws over the enumerated part of the source.
pub fn validate_functor<P: Functor>(p: &P, bounds: &Bounds) -> VerificationReport {
    let mut report = VerificationReport::with_families("functor", FUNCTOR_FAMILIES);
    functor_laws(p, bounds, &mut report);
    report.finish()
}

/// Functor laws plus `P(x⊕y) = Px⊕Py`, `Pe = e`, `P(a⊕b) = Pa⊕Pb` and
/// `Pξ_{x,y} = ξ_{Px,Py}`, all as exact equalities.
pub fn validate_smfunctor<P: Functor>(p: &P, bounds: &Bounds) -> VerificationReport {
    let mut report = VerificationReport::with_families("strict symmetric monoidal functor", SMFUNCTOR_FAMILIES);
    let homs = functor_laws(p, bounds, &mut report);
    let (s, t) = (p.source(), p.target());
    let show_obj = |x: &PObj<P::Target>| t.describe_obj(x);
    let show_mor = |m: &PMor<P::Target>| t.describe_mor(m);

    report.family("unit").check_eq(
        Ok(p.map_obj(&s.unit_obj())),
        Ok(t.unit_obj()),
        || inst(&[("e", s.describe_obj(&s.unit_obj()))]),
        show_obj,
    );
    for x in &homs.objects {
        for y in &homs.objects {
            let xy = s.sum_obj(x, y);
            let w = || inst(&[("x", s.describe_obj(x)), ("y", s.describe_obj(y))]);
            if !s.enumerates(&xy) {
                report.family("sum-objects").skip();
                report.family("symmetry").skip();
                continue;
            }
            let (px, py) = (p.map_obj(x), p.map_obj(y));
            report
                .family("sum-objects")
                .check_eq(Ok(p.map_obj(&xy)), Ok(t.sum_obj(&px, &py)), w, show_obj);
            report.family("symmetry").check_eq(
                p.map_mor(&s.symmetry(x, y)),
                Ok(t.symmetry(&px, &py)),
                w,
                show_mor,
            );
        }
    }

    let mors = homs.all_morphisms();
    let template = VerificationReport::with_families("", &["sum-morphisms"]);
    let sums = fan_out(bounds.parallel, &mors, &template, |(ax, ay, a), part| {
        let fam = part.family("sum-morphisms");
        for (bx, by, b) in &mors {
            let src = s.sum_obj(&homs.objects[*ax], &homs.objects[*bx]);
            let tgt = s.sum_obj(&homs.objects[*ay], &homs.objects[*by]);
            if !s.enumerates(&src) || !s.enumerates(&tgt) {
                fam.skip();
                continue;
            }
            let lhs = s.sum_mor(a, b).and_then(|ab| p.map_mor(&ab));
            let rhs = p
                .map_mor(a)
                .and_then(|pa| p.map_mor(b).and_then(|pb| t.sum_mor(&pa, &pb)));
            fam.check_eq(
                lhs,
                rhs,
                || inst(&[("a", s.describe_mor(a)), ("b", s.describe_mor(b))]),
                show_mor,
            );
        }
    });
    report.absorb(sums);
    report.finish()
}

fn functor_laws<P: Functor>(
    p: &P,
    bounds: &Bounds,
    report: &mut VerificationReport,
) -> HomIndex<P::Source> {
    let (s, t) = (p.source(), p.target());
    let show_mor = |m: &PMor<P::Target>| t.describe_mor(m);
    let homs = HomIndex::build(s, bounds.parallel, &mut FamilyRecord::new("homs"));

    for x in &homs.objects {
        report.family("identities").check_eq(
            p.map_mor(&s.identity(x)),
            Ok(t.identity(&p.map_obj(x))),
            || inst(&[("x", s.describe_obj(x))]),
            show_mor,
        );
    }

    let mors = homs.all_morphisms();
    let template = VerificationReport::with_families("", &["morphism-typing"]);
    let typing = fan_out(bounds.parallel, &mors, &template, |(_, _, m), part| {
        let fam = part.family("morphism-typing");
        let w = || inst(&[("f", s.describe_mor(m))]);
        match p.map_mor(m) {
            Ok(pm) => {
                let expected = (p.map_obj(&s.source(m)), p.map_obj(&s.target(m)));
                let found = (t.source(&pm), t.target(&pm));
                fam.check(found == expected, w, || {
                    format!(
                        "{} has endpoints {} → {}, expected {} → {}",
                        t.describe_mor(&pm),
                        t.describe_obj(&found.0),
                        t.describe_obj(&found.1),
                        t.describe_obj(&expected.0),
                        t.describe_obj(&expected.1)
                    )
                });
            }
            Err(e) => fam.error(e, w),
        }
    });
    report.absorb(typing);

    // the composition table of the source supplies every composable pair
    let mut scratch = FamilyRecord::new("scratch");
    let comps = Compositions::build(s, &homs, bounds.parallel, &mut scratch);
    let n = homs.len();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
        .filter(|&(x, y, z)| comps.table(x, y, z).is_some())
        .collect();
    let template = VerificationReport::with_families("", &["composition"]);
    let composition = fan_out(bounds.parallel, &triples, &template, |&(x, y, z), part| {
        let fam = part.family("composition");
        let Some(table) = comps.table(x, y, z) else { return };
        let fs = homs.mors(x, y).unwrap_or(&[]);
        let gs = homs.mors(y, z).unwrap_or(&[]);
        let hs = homs.mors(x, z);
        for (gi, g) in gs.iter().enumerate() {
            for (fi, f) in fs.iter().enumerate() {
                let w = || inst(&[("g", s.describe_mor(g)), ("f", s.describe_mor(f))]);
                let idx = table.get(gi as u32, fi as u32);
                let gf = match (idx, hs) {
                    (i, Some(hs)) if i < BROKEN => Ok(hs[i as usize].clone()),
                    _ => s.compose(g, f),
                };
                let lhs = gf.and_then(|gf| p.map_mor(&gf));
                let rhs = p
                    .map_mor(g)
                    .and_then(|pg| p.map_mor(f).and_then(|pf| t.compose(&pg, &pf)));
                fam.check_eq(lhs, rhs, w, show_mor);
            }
        }
    });
    report.absorb(composition);
    homs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteMonoid;
    use crate::permcat::builtin::{discrete_commutative_monoid, group_enriched};

    #[test]
    fn identity_functor_passes() {
        let c = group_enriched(2, &FiniteMonoid::cyclic(3)).unwrap();
        let r = validate_smfunctor(&IdentityFunctor::new(&c), &Bounds::default());
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn monoid_homomorphism_passes_and_unit_mutation_fails() {
        let c = discrete_commutative_monoid(&FiniteMonoid::cyclic(2)).unwrap();
        let ids: Vec<CObj> = c.object_ids().collect();
        let mors: Vec<MorId> = c.mor_ids().collect();
        let p = TableFunctor::new(&c, &c, ids.clone(), mors.clone()).unwrap();
        assert!(validate_smfunctor(&p, &Bounds::default()).passed());

        // sends e to the other object; the morphism map follows along
        let swapped = TableFunctor::new(&c, &c, vec![ids[1], ids[0]], vec![mors[1], mors[0]]).unwrap();
        let r = validate_smfunctor(&swapped, &Bounds::default());
        assert!(!r.passed());
        assert_eq!(r.witness("unit").unwrap().get("e"), Some("0"));
        assert!(r.get("identities").unwrap().failed == 0);
    }

    #[test]
    fn composition_checks_endpoints() {
        let a = group_enriched(1, &FiniteMonoid::cyclic(2)).unwrap();
        let b = group_enriched(2, &FiniteMonoid::cyclic(2)).unwrap();
        let ia = IdentityFunctor::new(&a);
        let ib = IdentityFunctor::new(&b);
        assert!(compose_functors(&ib, &ia).is_err());
        assert!(compose_functors(&ia, &ia).is_ok());
    }
}
