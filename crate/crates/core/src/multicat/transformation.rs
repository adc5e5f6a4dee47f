//! Multinatural transformations and their vertical and horizontal composites.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::verify::{fan_out, Bounds};

use super::catalog::Catalog;
use super::functor::{advance, compose_multifunctors, ComposedMultifunctor, Multifunctor};
use super::{Multicategory, ObjOf, OpOf};

/// `θ: F → G` with components `θ_c ∈ N⟨Gc; Fc⟩`, one per object of the
/// source multicategory.
#[derive(Debug, Clone, PartialEq)]
pub struct MultinatTransformation<F, G>
where
    F: Multifunctor,
    G: Multifunctor<Source = F::Source, Target = F::Target>,
{
    from: F,
    to: G,
    components: BTreeMap<ObjOf<F::Source>, OpOf<F::Target>>,
}

impl<F, G> MultinatTransformation<F, G>
where
    F: Multifunctor,
    G: Multifunctor<Source = F::Source, Target = F::Target>,
{
    pub fn new(
        from: F,
        to: G,
        components: BTreeMap<ObjOf<F::Source>, OpOf<F::Target>>,
    ) -> Result<Self> {
        if from.source() != to.source() || from.target() != to.target() {
            return Err(Error::EndpointMismatch(
                "the two multifunctors have different endpoints".into(),
            ));
        }
        let objects = from.source().objects();
        if objects.len() != components.len() || objects.iter().any(|c| !components.contains_key(c)) {
            return Err(Error::Structural(
                "components must be given for exactly the source objects".into(),
            ));
        }
        Ok(Self {
            from,
            to,
            components,
        })
    }

    pub fn from_fn(
        from: F,
        to: G,
        component: impl Fn(&ObjOf<F::Source>) -> OpOf<F::Target>,
    ) -> Result<Self> {
        let components = from
            .source()
            .objects()
            .into_iter()
            .map(|c| {
                let op = component(&c);
                (c, op)
            })
            .collect();
        Self::new(from, to, components)
    }

    pub fn from_functor(&self) -> &F {
        &self.from
    }

    pub fn to_functor(&self) -> &G {
        &self.to
    }

    pub fn component(&self, c: &ObjOf<F::Source>) -> Option<&OpOf<F::Target>> {
        self.components.get(c)
    }

    pub fn components(&self) -> &BTreeMap<ObjOf<F::Source>, OpOf<F::Target>> {
        &self.components
    }

    /// A copy with the component at `c` replaced.
    pub fn with_component(&self, c: ObjOf<F::Source>, op: OpOf<F::Target>) -> Result<Self>
    where
        F: Clone,
        G: Clone,
    {
        let mut components = self.components.clone();
        components.insert(c, op);
        Self::new(self.from.clone(), self.to.clone(), components)
    }
}

impl<F: Multifunctor + Clone> MultinatTransformation<F, F> {
    /// `1_F`, with components the units `1_{Fc}`.
    pub fn identity(f: F) -> Self {
        let tgt = f.target();
        let components = f
            .source()
            .objects()
            .into_iter()
            .map(|c| {
                let u = tgt.unit(&f.map_obj(&c));
                (c, u)
            })
            .collect();
        Self {
            from: f.clone(),
            to: f,
            components,
        }
    }
}

/// Vertical composite `βθ: F → H`, `(βθ)_c = γ(β_c; θ_c)`.
pub fn vcomp_multinat<F, G, H>(
    beta: &MultinatTransformation<G, H>,
    theta: &MultinatTransformation<F, G>,
) -> Result<MultinatTransformation<F, H>>
where
    F: Multifunctor + Clone,
    G: Multifunctor<Source = F::Source, Target = F::Target> + PartialEq,
    H: Multifunctor<Source = F::Source, Target = F::Target> + Clone,
{
    if theta.to != beta.from {
        return Err(Error::EndpointMismatch(
            "target of θ differs from the source of β".into(),
        ));
    }
    let n = theta.from.target();
    let mut components = BTreeMap::new();
    for (c, t) in &theta.components {
        let b = &beta.components[c];
        components.insert(c.clone(), n.gamma(b, std::slice::from_ref(t))?);
    }
    MultinatTransformation::new(theta.from.clone(), beta.to.clone(), components)
}

/// Horizontal composite `θ′ ∗ θ: F′F → G′G`, `(θ′∗θ)_c = γ(θ′_{Gc}; F′θ_c)`.
#[allow(clippy::type_complexity)]
pub fn hcomp_multinat<F, G, F2, G2>(
    theta2: &MultinatTransformation<F2, G2>,
    theta: &MultinatTransformation<F, G>,
) -> Result<MultinatTransformation<ComposedMultifunctor<F2, F>, ComposedMultifunctor<G2, G>>>
where
    F: Multifunctor + Clone,
    G: Multifunctor<Source = F::Source, Target = F::Target> + Clone,
    F2: Multifunctor<Source = F::Target> + Clone,
    G2: Multifunctor<Source = F::Target, Target = F2::Target> + Clone,
{
    let outer_from = compose_multifunctors(theta2.from.clone(), theta.from.clone())?;
    let outer_to = compose_multifunctors(theta2.to.clone(), theta.to.clone())?;
    let p = theta2.from.target();
    let mut components = BTreeMap::new();
    for (c, t) in &theta.components {
        let gc = theta.to.map_obj(c);
        let t2 = theta2.components.get(&gc).ok_or_else(|| {
            Error::Structural("missing component of the outer transformation".into())
        })?;
        let f2t = theta2.from.map_op(t)?;
        components.insert(c.clone(), p.gamma(t2, &[f2t])?);
    }
    MultinatTransformation::new(outer_from, outer_to, components)
}

pub const MULTINAT_FAMILIES: &[&str] = &["component-typing", "naturality"];

/// Checks component signatures and `γ(θ_{c′}; Fφ) = γ(Gφ; θ_{c_1}, …, θ_{c_n})`
/// for every operation `φ` within `bounds.arity`.
pub fn validate_multinat<F, G>(theta: &MultinatTransformation<F, G>, bounds: &Bounds) -> VerificationReport
where
    F: Multifunctor,
    G: Multifunctor<Source = F::Source, Target = F::Target>,
{
    let src = theta.from.source();
    let tgt = theta.from.target();
    let template = VerificationReport::with_families("multinat", MULTINAT_FAMILIES);
    let mut report = template.clone();
    for (c, t) in &theta.components {
        let sig = tgt.signature(t);
        report.family("component-typing").check(
            sig.output == theta.to.map_obj(c) && sig.inputs == [theta.from.map_obj(c)],
            || {
                vec![
                    ("object".into(), src.describe_obj(c)),
                    ("component".into(), tgt.describe_op(t)),
                ]
            },
            || format!("component has signature {sig:?}"),
        );
    }
    let cat = Catalog::build(src, bounds.arity);
    report.family("naturality").skip_many(cat.truncated);
    let nat = fan_out(bounds.parallel, &cat.ops, &template, |phi, r| {
        let sig = src.signature(phi);
        let lhs = theta
            .from
            .map_op(phi)
            .and_then(|fphi| tgt.gamma(&theta.components[&sig.output], &[fphi]));
        let thetas: Vec<_> = sig.inputs.iter().map(|c| theta.components[c].clone()).collect();
        let rhs = theta.to.map_op(phi).and_then(|gphi| tgt.gamma(&gphi, &thetas));
        r.family("naturality").check_eq(
            lhs,
            rhs,
            || vec![("op".into(), src.describe_op(phi))],
            |o| tgt.describe_op(o),
        );
    });
    report.absorb(nat);
    report.finish()
}

/// Every multinatural transformation `F → G`, by brute force over component
/// choices, keeping those that validate.
pub fn enumerate_multinats<F, G>(from: &F, to: &G, bounds: &Bounds) -> Result<Vec<MultinatTransformation<F, G>>>
where
    F: Multifunctor + Clone,
    G: Multifunctor<Source = F::Source, Target = F::Target> + Clone,
{
    let objects = from.source().objects();
    let tgt = from.target();
    let mut choices = Vec::with_capacity(objects.len());
    for c in &objects {
        choices.push(tgt.ops(&to.map_obj(c), &[from.map_obj(c)])?);
    }
    let mut out = Vec::new();
    if choices.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut pick = vec![0usize; objects.len()];
    loop {
        let components = objects
            .iter()
            .zip(&pick)
            .zip(&choices)
            .map(|((c, &i), ch)| (c.clone(), ch[i].clone()))
            .collect();
        let theta = MultinatTransformation::new(from.clone(), to.clone(), components)?;
        if validate_multinat(&theta, bounds).passed() {
            out.push(theta);
        }
        if !advance(&mut pick, |i| choices[i].len()) {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multicat::builtin::{initial_operad, terminal_multicategory};
    use crate::multicat::functor::{enumerate_multifunctors, IdentityMultifunctor};

    #[test]
    fn identity_is_natural_and_unital() {
        let m = terminal_multicategory(3);
        let id = MultinatTransformation::identity(IdentityMultifunctor::new(&m));
        assert!(validate_multinat(&id, &Bounds::default()).passed());
        let twice = vcomp_multinat(&id, &id).unwrap();
        assert_eq!(twice, id);
    }

    #[test]
    fn unique_transformation_into_terminal() {
        let mtu = initial_operad();
        let mterm = terminal_multicategory(3);
        let fs = enumerate_multifunctors(&mtu, &mterm, &Bounds::default()).unwrap();
        let nats = enumerate_multinats(&fs[0], &fs[0], &Bounds::default()).unwrap();
        assert_eq!(nats.len(), 1);
    }
}
