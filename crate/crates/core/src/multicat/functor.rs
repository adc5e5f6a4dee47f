//! Multifunctors: maps of multicategories preserving action, units and `γ`.

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::verify::{fan_out, Bounds};

use super::catalog::Catalog;
use super::presentation::{MulticategoryPresentation, ObjId, OpId};
use super::{describe_ops, Multicategory, ObjOf, OpOf};

pub trait Multifunctor: Sync {
    type Source: Multicategory;
    type Target: Multicategory;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn map_obj(&self, c: &ObjOf<Self::Source>) -> ObjOf<Self::Target>;
    fn map_op(&self, op: &OpOf<Self::Source>) -> Result<OpOf<Self::Target>>;
}

impl<T: Multifunctor> Multifunctor for &T {
    type Source = T::Source;
    type Target = T::Target;

    fn source(&self) -> &Self::Source {
        (**self).source()
    }
    fn target(&self) -> &Self::Target {
        (**self).target()
    }
    fn map_obj(&self, c: &ObjOf<Self::Source>) -> ObjOf<Self::Target> {
        (**self).map_obj(c)
    }
    fn map_op(&self, op: &OpOf<Self::Source>) -> Result<OpOf<Self::Target>> {
        (**self).map_op(op)
    }
}

/// `1_M`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityMultifunctor<M> {
    cat: M,
}

impl<M: Multicategory> IdentityMultifunctor<M> {
    pub fn new(cat: M) -> Self {
        Self { cat }
    }
}

impl<M: Multicategory> Multifunctor for IdentityMultifunctor<M> {
    type Source = M;
    type Target = M;

    fn source(&self) -> &M {
        &self.cat
    }
    fn target(&self) -> &M {
        &self.cat
    }
    fn map_obj(&self, c: &M::Obj) -> M::Obj {
        c.clone()
    }
    fn map_op(&self, op: &M::Op) -> Result<M::Op> {
        Ok(op.clone())
    }
}

/// A multifunctor between table presentations, given by its object and
/// operation maps.
#[derive(Debug, Clone, PartialEq)]
pub struct TableMultifunctor<'a> {
    source: &'a MulticategoryPresentation,
    target: &'a MulticategoryPresentation,
    object_map: Vec<ObjId>,
    op_map: Vec<OpId>,
}

impl<'a> TableMultifunctor<'a> {
    pub fn new(
        source: &'a MulticategoryPresentation,
        target: &'a MulticategoryPresentation,
        object_map: Vec<ObjId>,
        op_map: Vec<OpId>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count() {
            return Err(Error::Structural(format!(
                "object map has {} entries for {} objects",
                object_map.len(),
                source.object_count()
            )));
        }
        if op_map.len() != source.op_count() {
            return Err(Error::Structural(format!(
                "operation map has {} entries for {} operations",
                op_map.len(),
                source.op_count()
            )));
        }
        if let Some(c) = object_map.iter().find(|c| c.0 >= target.object_count()) {
            return Err(Error::Structural(format!("object map sends to dangling id {}", c.0)));
        }
        if let Some(o) = op_map.iter().find(|o| o.0 >= target.op_count()) {
            return Err(Error::Structural(format!("operation map sends to dangling id {}", o.0)));
        }
        Ok(Self {
            source,
            target,
            object_map,
            op_map,
        })
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.object_map
    }

    pub fn op_map(&self) -> &[OpId] {
        &self.op_map
    }

    /// A copy with the image of `op` replaced.
    pub fn with_op_image(&self, op: OpId, image: OpId) -> Result<Self> {
        let mut map = self.op_map.clone();
        *map.get_mut(op.0)
            .ok_or_else(|| Error::Structural(format!("dangling operation id {}", op.0)))? = image;
        Self::new(self.source, self.target, self.object_map.clone(), map)
    }
}

impl Multifunctor for TableMultifunctor<'_> {
    type Source = MulticategoryPresentation;
    type Target = MulticategoryPresentation;

    fn source(&self) -> &MulticategoryPresentation {
        self.source
    }
    fn target(&self) -> &MulticategoryPresentation {
        self.target
    }
    fn map_obj(&self, c: &ObjId) -> ObjId {
        self.object_map[c.0]
    }
    fn map_op(&self, op: &OpId) -> Result<OpId> {
        Ok(self.op_map[op.0])
    }
}

/// `G ∘ H`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComposedMultifunctor<G, H> {
    outer: G,
    inner: H,
}

impl<G, H> ComposedMultifunctor<G, H> {
    pub fn outer(&self) -> &G {
        &self.outer
    }

    pub fn inner(&self) -> &H {
        &self.inner
    }
}

/// `G ∘ H`; requires `target(H) = source(G)`.
pub fn compose_multifunctors<G, H>(g: G, h: H) -> Result<ComposedMultifunctor<G, H>>
where
    H: Multifunctor,
    G: Multifunctor<Source = H::Target>,
{
    if g.source() != h.target() {
        return Err(Error::EndpointMismatch(
            "target of the first multifunctor differs from the source of the second".into(),
        ));
    }
    Ok(ComposedMultifunctor { outer: g, inner: h })
}

impl<G, H> Multifunctor for ComposedMultifunctor<G, H>
where
    H: Multifunctor,
    G: Multifunctor<Source = H::Target>,
{
    type Source = H::Source;
    type Target = G::Target;

    fn source(&self) -> &H::Source {
        self.inner.source()
    }
    fn target(&self) -> &G::Target {
        self.outer.target()
    }
    fn map_obj(&self, c: &ObjOf<H::Source>) -> ObjOf<G::Target> {
        self.outer.map_obj(&self.inner.map_obj(c))
    }
    fn map_op(&self, op: &OpOf<H::Source>) -> Result<OpOf<G::Target>> {
        self.outer.map_op(&self.inner.map_op(op)?)
    }
}

pub const MULTIFUNCTOR_FAMILIES: &[&str] = &[
    "op-typing",
    "equivariance",
    "units",
    "composition",
];

/// Checks that `h` preserves signatures, the action, units and `γ` on every
/// instance within `bounds.arity`.
pub fn validate_multifunctor<H: Multifunctor>(h: &H, bounds: &Bounds) -> VerificationReport {
    let src = h.source();
    let tgt = h.target();
    let cat = Catalog::build(src, bounds.arity);
    let template = VerificationReport::with_families("multifunctor", MULTIFUNCTOR_FAMILIES);
    let mut report = template.clone();
    let perms: Vec<Vec<crate::combinatorics::Permutation>> = (0..=cat.bound)
        .map(crate::combinatorics::Permutation::all)
        .collect();

    for c in &cat.objects {
        let lhs = h.map_op(&src.unit(c));
        let rhs = Ok(tgt.unit(&h.map_obj(c)));
        report.family("units").check_eq(
            lhs,
            rhs,
            || vec![("object".into(), src.describe_obj(c))],
            |o| tgt.describe_op(o),
        );
    }

    let per_op = fan_out(bounds.parallel, &cat.ops, &template, |op, r| {
        let inst = || vec![("op".into(), src.describe_op(op))];
        let image = match h.map_op(op) {
            Ok(i) => i,
            Err(e) => {
                r.family("op-typing").error(e, inst);
                return;
            }
        };
        let sig = src.signature(op);
        let isig = tgt.signature(&image);
        let expected_inputs: Vec<_> = sig.inputs.iter().map(|c| h.map_obj(c)).collect();
        r.family("op-typing").check(
            isig.output == h.map_obj(&sig.output) && isig.inputs == expected_inputs,
            inst,
            || format!("{} has signature {:?}", tgt.describe_op(&image), isig),
        );
        for sigma in &perms[sig.inputs.len()] {
            let lhs = src.act(op, sigma).and_then(|a| h.map_op(&a));
            let rhs = tgt.act(&image, sigma);
            r.family("equivariance").check_eq(
                lhs,
                rhs,
                || vec![("op".into(), src.describe_op(op)), ("sigma".into(), format!("{sigma:?}"))],
                |o| tgt.describe_op(o),
            );
        }
    });
    report.absorb(per_op);

    let mut instances = Vec::new();
    for psi in &cat.ops {
        let slots = src.inputs(psi);
        cat.for_each_tuple(&slots, cat.bound, &mut |phis| instances.push((psi.clone(), phis.to_vec())));
        report
            .family("composition")
            .skip_many(cat.overflow_shapes(&slots, cat.bound));
    }
    let comp = fan_out(bounds.parallel, &instances, &template, |(psi, phis), r| {
        let lhs = src.gamma(psi, phis).and_then(|g| h.map_op(&g));
        let rhs = phis
            .iter()
            .map(|p| h.map_op(p))
            .collect::<Result<Vec<_>>>()
            .and_then(|hp| h.map_op(psi).and_then(|hpsi| tgt.gamma(&hpsi, &hp)));
        r.family("composition").check_eq(
            lhs,
            rhs,
            || {
                vec![
                    ("psi".into(), src.describe_op(psi)),
                    ("phi".into(), describe_ops(src, phis)),
                ]
            },
            |o| tgt.describe_op(o),
        );
    });
    report.absorb(comp);
    report.finish()
}

/// Every multifunctor between two table presentations, by brute force over
/// object maps and operation choices, keeping those that validate.
pub fn enumerate_multifunctors<'a>(
    source: &'a MulticategoryPresentation,
    target: &'a MulticategoryPresentation,
    bounds: &Bounds,
) -> Result<Vec<TableMultifunctor<'a>>> {
    let n_obj = source.object_count();
    let t_obj = target.object_count();
    let mut out = Vec::new();
    let mut object_map = vec![ObjId(0); n_obj];
    if n_obj > 0 && t_obj == 0 {
        return Ok(out);
    }
    loop {
        let mut choices = Vec::with_capacity(source.op_count());
        for op in source.op_ids() {
            let sig = source.signature(&op);
            let inputs: Vec<ObjId> = sig.inputs.iter().map(|c| object_map[c.0]).collect();
            choices.push(target.ops(&object_map[sig.output.0], &inputs)?);
        }
        let mut pick = vec![0usize; choices.len()];
        if choices.iter().all(|c| !c.is_empty()) {
            loop {
                let op_map: Vec<OpId> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
                let h = TableMultifunctor::new(source, target, object_map.clone(), op_map)?;
                if validate_multifunctor(&h, bounds).passed() {
                    out.push(h);
                }
                if !advance(&mut pick, |i| choices[i].len()) {
                    break;
                }
            }
        }
        let mut digits: Vec<usize> = object_map.iter().map(|c| c.0).collect();
        if !advance(&mut digits, |_| t_obj) {
            break;
        }
        object_map = digits.into_iter().map(ObjId).collect();
    }
    Ok(out)
}

/// Odometer increment; false once every digit has wrapped.
pub(crate) fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multicat::builtin::{initial_operad, terminal_multicategory};

    #[test]
    fn unique_functor_from_initial_to_terminal() {
        let mtu = initial_operad();
        let mterm = terminal_multicategory(3);
        let all = enumerate_multifunctors(&mtu, &mterm, &Bounds::default()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].op_map(), &[mterm.op_id("iota1").unwrap()]);
    }

    #[test]
    fn identity_validates() {
        let m = terminal_multicategory(3);
        let report = validate_multifunctor(&IdentityMultifunctor::new(&m), &Bounds::default());
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn composition_checks_endpoints() {
        let a = terminal_multicategory(3);
        let b = terminal_multicategory(2);
        assert!(compose_multifunctors(IdentityMultifunctor::new(&a), IdentityMultifunctor::new(&b)).is_err());
        assert!(compose_multifunctors(IdentityMultifunctor::new(&a), IdentityMultifunctor::new(&a)).is_ok());
    }
}
