//! Natural and monoidal natural transformations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::verify::{fan_out, Bounds};

use super::functor::Functor;
use super::homs::HomIndex;
use super::validate::inst;
use super::{PMor, PObj, PermutativeCategory};

type Src<F> = <F as Functor>::Source;
type Tgt<F> = <F as Functor>::Target;

pub trait NaturalTransformation: Sync {
    type From: Functor;
    type To: Functor<Source = Src<Self::From>, Target = Tgt<Self::From>>;

    fn from_functor(&self) -> &Self::From;

    fn to_functor(&self) -> &Self::To;

    fn component(&self, x: &PObj<Src<Self::From>>) -> Result<PMor<Tgt<Self::From>>>;
}

/// A transformation given by its components on the enumerated source objects.
#[derive(Debug, Clone)]
pub struct MonoidalNat<F: Functor, G> {
    from: F,
    to: G,
    components: BTreeMap<PObj<Src<F>>, PMor<Tgt<F>>>,
}

impl<F, G> MonoidalNat<F, G>
where
    F: Functor,
    G: Functor<Source = Src<F>, Target = Tgt<F>>,
{
    pub fn new(from: F, to: G, components: BTreeMap<PObj<Src<F>>, PMor<Tgt<F>>>) -> Result<Self> {
        if from.source() != to.source() || from.target() != to.target() {
            return Err(Error::EndpointMismatch(
                "the two functors do not share source and target".into(),
            ));
        }
        let objects = from.source().objects();
        if components.len() != objects.len() || objects.iter().any(|x| !components.contains_key(x)) {
            return Err(Error::Structural(
                "components must be given exactly on the source objects".into(),
            ));
        }
        Ok(Self { from, to, components })
    }

    pub fn from_fn(
        from: F,
        to: G,
        mut f: impl FnMut(&PObj<Src<F>>) -> Result<PMor<Tgt<F>>>,
    ) -> Result<Self> {
        let components = from
            .source()
            .objects()
            .iter()
            .map(|x| f(x).map(|m| (x.clone(), m)))
            .collect::<Result<_>>()?;
        Self::new(from, to, components)
    }

    pub fn components(&self) -> &BTreeMap<PObj<Src<F>>, PMor<Tgt<F>>> {
        &self.components
    }

    pub fn with_component(mut self, x: PObj<Src<F>>, m: PMor<Tgt<F>>) -> Self {
        self.components.insert(x, m);
        self
    }
}

impl<F> MonoidalNat<F, F>
where
    F: Functor + Clone,
{
    pub fn identity(f: F) -> Result<Self> {
        let g = f.clone();
        let t = |x: &PObj<Src<F>>| Ok(f.target().identity(&f.map_obj(x)));
        let components = f
            .source()
            .objects()
            .iter()
            .map(|x| t(x).map(|m| (x.clone(), m)))
            .collect::<Result<_>>()?;
        Ok(Self {
            from: f,
            to: g,
            components,
        })
    }
}

impl<F, G> NaturalTransformation for MonoidalNat<F, G>
where
    F: Functor,
    G: Functor<Source = Src<F>, Target = Tgt<F>>,
{
    type From = F;
    type To = G;

    fn from_functor(&self) -> &F {
        &self.from
    }

    fn to_functor(&self) -> &G {
        &self.to
    }

    fn component(&self, x: &PObj<Src<F>>) -> Result<PMor<Tgt<F>>> {
        self.components
            .get(x)
            .cloned()
            .ok_or_else(|| Error::Structural(format!("no component at {x:?}")))
    }
}

/// `(β·α)_x = β_x ∘ α_x`.
pub fn vcomp_monoidal<F, G, H>(
    beta: &MonoidalNat<G, H>,
    alpha: &MonoidalNat<F, G>,
) -> Result<MonoidalNat<F, H>>
where
    F: Functor + Clone,
    G: Functor<Source = Src<F>, Target = Tgt<F>> + PartialEq,
    H: Functor<Source = Src<F>, Target = Tgt<F>> + Clone,
{
    if alpha.to != beta.from {
        return Err(Error::EndpointMismatch(
            "the first transformation does not end where the second starts".into(),
        ));
    }
    let t = alpha.from.target();
    let components = alpha
        .components
        .iter()
        .map(|(x, a)| {
            let b = beta.component(x)?;
            Ok((x.clone(), t.compose(&b, a)?))
        })
        .collect::<Result<_>>()?;
    MonoidalNat::new(alpha.from.clone(), beta.to.clone(), components)
}

pub const NATURAL_FAMILIES: &[&str] = &["component-typing", "naturality"];

pub const MONOIDAL_NAT_FAMILIES: &[&str] = &["component-typing", "naturality", "monoidal", "unit"];

/// Component typing `α_x: Fx → Gx` and naturality `Gf ∘ α_x = α_y ∘ Ff`.
pub fn validate_natural<A: NaturalTransformation>(alpha: &A, bounds: &Bounds) -> VerificationReport {
    let mut report = VerificationReport::with_families("natural transformation", NATURAL_FAMILIES);
    natural_laws(alpha, bounds, &mut report);
    report.finish()
}

/// Naturality plus `α_{x⊕y} = α_x ⊕ α_y` and `α_e = 1_e`.
pub fn validate_monoidal_nat<A: NaturalTransformation>(alpha: &A, bounds: &Bounds) -> VerificationReport {
    let mut report =
        VerificationReport::with_families("monoidal natural transformation", MONOIDAL_NAT_FAMILIES);
    let objects = natural_laws(alpha, bounds, &mut report);
    let f = alpha.from_functor();
    let (s, t) = (f.source(), f.target());
    let show = |m: &PMor<Tgt<A::From>>| t.describe_mor(m);
    let e = s.unit_obj();
    report.family("unit").check_eq(
        alpha.component(&e),
        Ok(t.identity(&t.unit_obj())),
        || inst(&[("e", s.describe_obj(&e))]),
        show,
    );
    for x in &objects {
        for y in &objects {
            let xy = s.sum_obj(x, y);
            if !s.enumerates(&xy) {
                report.family("monoidal").skip();
                continue;
            }
            let rhs = alpha
                .component(x)
                .and_then(|ax| alpha.component(y).and_then(|ay| t.sum_mor(&ax, &ay)));
            report.family("monoidal").check_eq(
                alpha.component(&xy),
                rhs,
                || inst(&[("x", s.describe_obj(x)), ("y", s.describe_obj(y))]),
                show,
            );
        }
    }
    report.finish()
}

fn natural_laws<A: NaturalTransformation>(
    alpha: &A,
    bounds: &Bounds,
    report: &mut VerificationReport,
) -> Vec<PObj<Src<A::From>>> {
    let (f, g) = (alpha.from_functor(), alpha.to_functor());
    let (s, t) = (f.source(), f.target());
    let show = |m: &PMor<Tgt<A::From>>| t.describe_mor(m);
    let homs = HomIndex::build(s, bounds.parallel, &mut crate::report::FamilyRecord::new("homs"));

    for x in &homs.objects {
        let w = || inst(&[("x", s.describe_obj(x))]);
        let fam = report.family("component-typing");
        match alpha.component(x) {
            Ok(a) => {
                let expected = (f.map_obj(x), g.map_obj(x));
                let found = (t.source(&a), t.target(&a));
                fam.check(found == expected, w, || {
                    format!(
                        "{} has endpoints {} → {}, expected {} → {}",
                        t.describe_mor(&a),
                        t.describe_obj(&found.0),
                        t.describe_obj(&found.1),
                        t.describe_obj(&expected.0),
                        t.describe_obj(&expected.1)
                    )
                });
            }
            Err(e) => fam.error(e, w),
        }
    }

    let mors = homs.all_morphisms();
    let template = VerificationReport::with_families("", &["naturality"]);
    let nat = fan_out(bounds.parallel, &mors, &template, |(x, y, m), part| {
        let (x, y) = (&homs.objects[*x], &homs.objects[*y]);
        let lhs = g
            .map_mor(m)
            .and_then(|gm| alpha.component(x).and_then(|ax| t.compose(&gm, &ax)));
        let rhs = f
            .map_mor(m)
            .and_then(|fm| alpha.component(y).and_then(|ay| t.compose(&ay, &fm)));
        part.family("naturality")
            .check_eq(lhs, rhs, || inst(&[("f", s.describe_mor(m))]), show);
    });
    report.absorb(nat);
    homs.objects
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteMonoid;
    use crate::permcat::builtin::group_enriched;
    use crate::permcat::functor::IdentityFunctor;
    use crate::permcat::presentation::MorId;
    use crate::permcat::PermutativeCategory;

    #[test]
    fn identity_transformation_passes() {
        let c = group_enriched(2, &FiniteMonoid::cyclic(3)).unwrap();
        let id = MonoidalNat::identity(IdentityFunctor::new(&c)).unwrap();
        let r = validate_monoidal_nat(&id, &Bounds::default());
        assert!(r.passed(), "{}", r.render_text());
    }

    // α_x = g at every object: α_{x⊕y} = g, α_x ⊕ α_y = g², so monoidal iff g = g²
    #[test]
    fn constant_components_monoidal_iff_idempotent() {
        let group = FiniteMonoid::cyclic(3);
        let c = group_enriched(2, &group).unwrap();
        for g in 0..group.order() {
            let alpha = MonoidalNat::from_fn(IdentityFunctor::new(&c), IdentityFunctor::new(&c), |x| {
                Ok(MorId(x.0 * group.order() + g))
            })
            .unwrap();
            let r = validate_monoidal_nat(&alpha, &Bounds::default());
            assert_eq!(r.get("naturality").unwrap().failed, 0);
            assert_eq!(r.passed(), group.mul(g, g) == g, "g = {g}");
        }
    }

    #[test]
    fn non_identity_unit_component_detected() {
        let c = group_enriched(1, &FiniteMonoid::cyclic(2)).unwrap();
        let id = MonoidalNat::identity(IdentityFunctor::new(&c)).unwrap();
        let e = c.unit_obj();
        let bad = id.with_component(e, c.mor_id("1@0").unwrap());
        let r = validate_monoidal_nat(&bad, &Bounds::default());
        assert_eq!(r.witness("unit").unwrap().get("e"), Some("0"));
    }

    #[test]
    fn vertical_composition_of_constants() {
        let group = FiniteMonoid::cyclic(3);
        let c = group_enriched(1, &group).unwrap();
        let k = |g: usize| {
            MonoidalNat::from_fn(IdentityFunctor::new(&c), IdentityFunctor::new(&c), move |_| {
                Ok(MorId(g))
            })
            .unwrap()
        };
        let v = vcomp_monoidal(&k(1), &k(1)).unwrap();
        assert_eq!(v.component(&c.unit_obj()).unwrap(), MorId(2));
    }
}
