//! The 2-adjunction `F ⊣ End` between multicategories and permutative
//! categories.
//!
//! The unit `η_M: M → End(F(M))` sends `φ` to `(ι_r, (φ))`, the counit
//! `ε_C: F(End(C)) → C` sends `(f, ⟨φ⟩)` to `(⊕φ_j) ∘ ξ_f`, and `ρ_C: C → F(End(C))`
//! includes length-one profiles. All checks compare values structurally on
//! every enumerated instance.


use crate::combinatorics::{perm_of_indexmap, FinSetMap};
use crate::endo::{end_of_permcat, end_on_functor, end_on_nat, EndOp, EndOpOf, EndView, Profile};
use crate::error::{Error, Result};
use crate::free::{free_morphism, free_on_multifunctor, free_on_multinat, free_view, FreeMor, FreeView};
use crate::multicat::catalog::Catalog;
use crate::multicat::{
    validate_multifunctor, Multicategory, Multifunctor, MultinatTransformation,
};
use crate::permcat::homs::HomIndex;
use crate::permcat::validate::inst;
use crate::permcat::{
    coherence_morphism, compose_functors, sum_morphisms, sum_objects, validate_functor,
    validate_natural, validate_smfunctor, ComposedFunctor, Functor, IdentityFunctor, MonoidalNat,
    NaturalTransformation, PermutativeCategory,
};
use crate::report::{FamilyRecord, VerificationReport};
use crate::verify::{fan_out, Bounds};

/// `η_M: M → End(F(M))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eta<M> {
    source: M,
    target: EndView<FreeView<M>>,
}

pub fn eta_component<M: Multicategory + Clone>(m: M, profile_bound: usize) -> Eta<M> {
    Eta {
        target: end_of_permcat(free_view(m.clone(), profile_bound)),
        source: m,
    }
}

impl<M: Multicategory> Multifunctor for Eta<M> {
    type Source = M;
    type Target = EndView<FreeView<M>>;

    fn source(&self) -> &M {
        &self.source
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn map_obj(&self, c: &M::Obj) -> Vec<M::Obj> {
        vec![c.clone()]
    }

    fn map_op(&self, op: &M::Op) -> Result<EndOpOf<FreeView<M>>> {
        let m = &self.source;
        let inputs = m.inputs(op);
        let r = inputs.len();
        let mor = free_morphism(m, inputs.clone(), FinSetMap::collapse(r), vec![op.clone()])?;
        Ok(EndOp {
            inputs: inputs.into_iter().map(|x| vec![x]).collect(),
            output: vec![m.output(op)],
            mor,
        })
    }
}

/// `ε_C: F(End(C)) → C`.
#[derive(Debug, Clone, PartialEq)]
pub struct Epsilon<C> {
    source: FreeView<EndView<C>>,
    skip_symmetry: bool,
}

pub fn epsilon_component<C: PermutativeCategory>(c: C, profile_bound: usize) -> Epsilon<C> {
    Epsilon {
        source: free_view(end_of_permcat(c), profile_bound),
        skip_symmetry: false,
    }
}

impl<C> Epsilon<C> {
    /// A deliberately wrong counit that drops `ξ_f`. Only useful for showing
    /// that the triangle checks can fail.
    #[doc(hidden)]
    pub fn skipping_symmetry(mut self) -> Self {
        self.skip_symmetry = true;
        self
    }
}

impl<C: PermutativeCategory> Functor for Epsilon<C> {
    type Source = FreeView<EndView<C>>;
    type Target = C;

    fn source(&self) -> &Self::Source {
        &self.source
    }

    fn target(&self) -> &C {
        self.source.base().base()
    }

    fn map_obj(&self, x: &Vec<C::Obj>) -> C::Obj {
        sum_objects(self.target(), x)
    }

    fn map_mor(&self, m: &FreeMor<EndView<C>>) -> Result<C::Mor> {
        let c = self.target();
        let mors: Vec<C::Mor> = m.ops().iter().map(|op| op.mor.clone()).collect();
        let sum = sum_morphisms(c, &mors)?;
        if self.skip_symmetry {
            return Ok(sum);
        }
        let xi = coherence_morphism(c, m.source(), &perm_of_indexmap(m.index_map()))?;
        c.compose(&sum, &xi)
    }
}

/// `ρ_C: C → F(End(C))`, `x ↦ (x)`, `φ ↦ (1, (φ))`. A plain functor.
#[derive(Debug, Clone, PartialEq)]
pub struct Rho<C> {
    target: FreeView<EndView<C>>,
}

pub fn rho_component<C: PermutativeCategory>(c: C, profile_bound: usize) -> Rho<C> {
    Rho {
        target: free_view(end_of_permcat(c), profile_bound),
    }
}

impl<C: PermutativeCategory> Functor for Rho<C> {
    type Source = C;
    type Target = FreeView<EndView<C>>;

    fn source(&self) -> &C {
        self.target.base().base()
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn map_obj(&self, x: &C::Obj) -> Vec<C::Obj> {
        vec![x.clone()]
    }

    fn map_mor(&self, m: &C::Mor) -> Result<FreeMor<EndView<C>>> {
        let c = self.source();
        let (s, t) = (c.source(m), c.target(m));
        let op = EndOp {
            inputs: Profile::from_iter([s.clone()]),
            output: t,
            mor: m.clone(),
        };
        free_morphism(self.target.base(), vec![s], FinSetMap::identity(1), vec![op])
    }
}

/// `α: 1 → ρε` on `F(End(C))`.
pub type Alpha<C> =
    MonoidalNat<IdentityFunctor<FreeView<EndView<C>>>, ComposedFunctor<Rho<C>, Epsilon<C>>>;

/// `ρ_C` together with `α_{⟨x⟩} = (ι_r, 1_{⊕x_i})`.
pub fn counit_right_adjoint<C: PermutativeCategory + Clone>(
    c: C,
    profile_bound: usize,
) -> Result<(Rho<C>, Alpha<C>)> {
    let rho = rho_component(c.clone(), profile_bound);
    let eps = epsilon_component(c.clone(), profile_bound);
    let fe = eps.source().clone();
    let rho_eps = compose_functors(rho.clone(), eps)?;
    let alpha = MonoidalNat::from_fn(IdentityFunctor::new(fe.clone()), rho_eps, |xs| {
        alpha_component(&fe, xs)
    })?;
    Ok((rho, alpha))
}

fn alpha_component<C: PermutativeCategory>(
    fe: &FreeView<EndView<C>>,
    xs: &[C::Obj],
) -> Result<FreeMor<EndView<C>>> {
    let c = fe.base().base();
    let sum = sum_objects(c, xs);
    let op = EndOp {
        inputs: xs.iter().cloned().collect(),
        output: sum.clone(),
        mor: c.identity(&sum),
    };
    free_morphism(fe.base(), xs.to_vec(), FinSetMap::collapse(xs.len()), vec![op])
}

fn listed_morphisms<C: PermutativeCategory>(
    c: &C,
    parallel: usize,
    record: &mut FamilyRecord,
) -> Vec<C::Mor> {
    let homs = HomIndex::build(c, parallel, record);
    homs.all_morphisms().into_iter().map(|(_, _, m)| m).collect()
}

fn catalog_ops<M: Multicategory>(m: &M, arity: usize, record: &mut FamilyRecord) -> Vec<M::Op> {
    let cat = Catalog::build(m, arity);
    record.skip_many(cat.truncated);
    for (sig, e) in cat.errors {
        record.error(e, || inst(&[("signature", sig)]));
    }
    cat.ops
}

/// `ε_{F(M)} ∘ F(η_M) = 1` on every object and morphism of `F(M)` with
/// profiles of length at most `bounds.profile`.
pub fn check_free_triangle<M: Multicategory + Clone>(m: M, bounds: &Bounds) -> VerificationReport {
    free_triangle(m, bounds, false)
}

/// The same check against the corrupted counit of [`Epsilon::skipping_symmetry`].
#[doc(hidden)]
pub fn check_free_triangle_corrupted<M: Multicategory + Clone>(
    m: M,
    bounds: &Bounds,
) -> VerificationReport {
    free_triangle(m, bounds, true)
}

fn free_triangle<M: Multicategory + Clone>(m: M, bounds: &Bounds, corrupt: bool) -> VerificationReport {
    let family = "free-triangle";
    let mut report = VerificationReport::with_families("triangle identity for F", &[family]);
    let l = bounds.profile;
    let eta = eta_component(m.clone(), l);
    let f_eta = free_on_multifunctor(&eta, l);
    let mut eps = epsilon_component(free_view(m, l), l);
    if corrupt {
        eps = eps.skipping_symmetry();
    }
    let fm = f_eta.source();
    for x in fm.objects() {
        report.family(family).check_eq(
            Ok(eps.map_obj(&f_eta.map_obj(&x))),
            Ok(x.clone()),
            || inst(&[("x", fm.describe_obj(&x))]),
            |y| fm.describe_obj(y),
        );
    }
    let mors = listed_morphisms(fm, bounds.parallel, report.family(family));
    let template = VerificationReport::with_families("", &[family]);
    let part = fan_out(bounds.parallel, &mors, &template, |m, part| {
        part.family(family).check_eq(
            f_eta.map_mor(m).and_then(|n| eps.map_mor(&n)),
            Ok(m.clone()),
            || inst(&[("f", fm.describe_mor(m))]),
            |n| fm.describe_mor(n),
        );
    });
    report.absorb(part);
    report.finish()
}

/// `End(ε_C) ∘ η_{End(C)} = 1` on every object and on every operation of
/// `End(C)` of arity at most `bounds.arity`.
pub fn check_end_triangle<C: PermutativeCategory + Clone>(c: C, bounds: &Bounds) -> VerificationReport {
    let family = "end-triangle";
    let mut report = VerificationReport::with_families("triangle identity for End", &[family]);
    let l = bounds.profile.max(bounds.arity);
    let ec = end_of_permcat(c.clone());
    let eta = eta_component(ec.clone(), l);
    let eps = epsilon_component(c, l);
    let e_eps = end_on_functor(&eps);
    for x in ec.objects() {
        report.family(family).check_eq(
            Ok(e_eps.map_obj(&eta.map_obj(&x))),
            Ok(x.clone()),
            || inst(&[("x", ec.describe_obj(&x))]),
            |y| ec.describe_obj(y),
        );
    }
    let ops = catalog_ops(&ec, bounds.arity, report.family(family));
    let template = VerificationReport::with_families("", &[family]);
    let part = fan_out(bounds.parallel, &ops, &template, |op, part| {
        part.family(family).check_eq(
            eta.map_op(op).and_then(|o| e_eps.map_op(&o)),
            Ok(op.clone()),
            || inst(&[("op", ec.describe_op(op))]),
            |o| ec.describe_op(o),
        );
    });
    report.absorb(part);
    report.finish()
}

/// Both triangle identities of `F ⊣ End`.
pub fn check_triangle_identities<M, C>(m: M, c: C, bounds: &Bounds) -> VerificationReport
where
    M: Multicategory + Clone,
    C: PermutativeCategory + Clone,
{
    let mut report = VerificationReport::new("triangle identities");
    report.absorb(check_free_triangle(m, bounds));
    report.absorb(check_end_triangle(c, bounds));
    report.finish()
}

pub const RIGHT_ADJOINT_FAMILIES: &[&str] = &["epsilon-rho", "alpha-epsilon", "alpha-rho"];

/// `ερ = 1`, the functor laws for `ρ`, naturality of `α: 1 → ρε`, and the
/// triangle identities `εα = 1_ε`, `αρ = 1_ρ`.
pub fn check_right_adjoint<C: PermutativeCategory + Clone>(c: C, bounds: &Bounds) -> VerificationReport {
    let mut report = VerificationReport::with_families("counit and its right adjoint", RIGHT_ADJOINT_FAMILIES);
    let l = bounds.profile;
    let (rho, alpha) = match counit_right_adjoint(c.clone(), l) {
        Ok(pair) => pair,
        Err(e) => {
            report.family("alpha-rho").error(e, Vec::new);
            return report.finish();
        }
    };
    let eps = epsilon_component(c.clone(), l);
    let fe = eps.source();

    report.include("rho-functor", validate_functor(&rho, bounds));
    report.include("alpha", validate_natural(&alpha, bounds));

    let mors = listed_morphisms(&c, bounds.parallel, report.family("epsilon-rho"));
    for x in c.objects() {
        let w = || inst(&[("x", c.describe_obj(&x))]);
        report.family("epsilon-rho").check_eq(
            Ok(eps.map_obj(&rho.map_obj(&x))),
            Ok(x.clone()),
            w,
            |y| c.describe_obj(y),
        );
        report.family("alpha-rho").check_eq(
            alpha.component(&rho.map_obj(&x)),
            Ok(fe.identity(&rho.map_obj(&x))),
            w,
            |m| fe.describe_mor(m),
        );
    }
    for m in &mors {
        report.family("epsilon-rho").check_eq(
            rho.map_mor(m).and_then(|n| eps.map_mor(&n)),
            Ok(m.clone()),
            || inst(&[("f", c.describe_mor(m))]),
            |n| c.describe_mor(n),
        );
    }
    for xs in fe.objects() {
        report.family("alpha-epsilon").check_eq(
            alpha.component(&xs).and_then(|a| eps.map_mor(&a)),
            Ok(c.identity(&eps.map_obj(&xs))),
            || inst(&[("x", fe.describe_obj(&xs))]),
            |n| c.describe_mor(n),
        );
    }
    report.finish()
}

/// `η_N ∘ H = End(F(H)) ∘ η_M` on objects and on operations up to `bounds.arity`.
pub fn check_eta_naturality<H: Multifunctor>(h: &H, bounds: &Bounds) -> VerificationReport {
    let family = "eta-naturality";
    let mut report = VerificationReport::with_families("naturality of the unit", &[family]);
    let l = bounds.profile.max(bounds.arity);
    let (src, tgt) = (h.source(), h.target());
    let eta_m = eta_component(src, l);
    let eta_n = eta_component(tgt, l);
    let fh = free_on_multifunctor(h, l);
    let efh = end_on_functor(&fh);
    let show = |o: &EndOpOf<FreeView<&H::Target>>| eta_n.target().describe_op(o);
    for c in src.objects() {
        report.family(family).check_eq(
            Ok(eta_n.map_obj(&h.map_obj(&c))),
            Ok(efh.map_obj(&eta_m.map_obj(&c))),
            || inst(&[("c", src.describe_obj(&c))]),
            |v| format!("{v:?}"),
        );
    }
    let ops = catalog_ops(src, bounds.arity, report.family(family));
    let template = VerificationReport::with_families("", &[family]);
    let part = fan_out(bounds.parallel, &ops, &template, |op, part| {
        part.family(family).check_eq(
            h.map_op(op).and_then(|o| eta_n.map_op(&o)),
            eta_m.map_op(op).and_then(|o| efh.map_op(&o)),
            || inst(&[("op", src.describe_op(op))]),
            show,
        );
    });
    report.absorb(part);
    report.finish()
}

/// `η_N θ = End(F(θ)) η_M`: the two whiskerings agree at every object.
pub fn check_eta_2naturality<F, G>(theta: &MultinatTransformation<F, G>, bounds: &Bounds) -> VerificationReport
where
    F: Multifunctor,
    G: Multifunctor<Source = F::Source, Target = F::Target>,
{
    let family = "eta-2-naturality";
    let mut report = VerificationReport::with_families("2-naturality of the unit", &[family]);
    let l = bounds.profile.max(bounds.arity);
    let (src, tgt) = (theta.from_functor().source(), theta.from_functor().target());
    let eta_m = eta_component(src, l);
    let eta_n = eta_component(tgt, l);
    let f_theta = match free_on_multinat(theta, l) {
        Ok(t) => t,
        Err(e) => {
            report.family(family).error(e, Vec::new);
            return report.finish();
        }
    };
    let ef_theta = match end_on_nat(&f_theta) {
        Ok(t) => t,
        Err(e) => {
            report.family(family).error(e, Vec::new);
            return report.finish();
        }
    };
    for c in src.objects() {
        let lhs = theta
            .component(&c)
            .ok_or_else(|| Error::Structural(format!("no component at {}", src.describe_obj(&c))))
            .and_then(|op| eta_n.map_op(op));
        let rhs = ef_theta
            .component(&eta_m.map_obj(&c))
            .cloned()
            .ok_or_else(|| Error::Structural(format!("no component at ({})", src.describe_obj(&c))));
        report.family(family).check_eq(
            lhs,
            rhs,
            || inst(&[("c", src.describe_obj(&c))]),
            |o| eta_n.target().describe_op(o),
        );
    }
    report.finish()
}

/// `P ∘ ε_C = ε_D ∘ F(End(P))` on every object and morphism of `F(End(C))`
/// within `bounds.profile`.
pub fn check_epsilon_naturality<P: Functor>(p: &P, bounds: &Bounds) -> VerificationReport {
    let family = "epsilon-naturality";
    let mut report = VerificationReport::with_families("naturality of the counit", &[family]);
    let l = bounds.profile;
    let eps_c = epsilon_component(p.source(), l);
    let eps_d = epsilon_component(p.target(), l);
    let ep = end_on_functor(p);
    let fep = free_on_multifunctor(&ep, l);
    let (fe, d) = (fep.source(), p.target());
    for xs in fe.objects() {
        report.family(family).check_eq(
            Ok(eps_d.map_obj(&fep.map_obj(&xs))),
            Ok(p.map_obj(&eps_c.map_obj(&xs))),
            || inst(&[("x", fe.describe_obj(&xs))]),
            |y| d.describe_obj(y),
        );
    }
    let mors = listed_morphisms(fe, bounds.parallel, report.family(family));
    let template = VerificationReport::with_families("", &[family]);
    let part = fan_out(bounds.parallel, &mors, &template, |m, part| {
        part.family(family).check_eq(
            fep.map_mor(m).and_then(|n| eps_d.map_mor(&n)),
            eps_c.map_mor(m).and_then(|n| p.map_mor(&n)),
            || inst(&[("f", fe.describe_mor(m))]),
            |n| d.describe_mor(n),
        );
    });
    report.absorb(part);
    report.finish()
}

/// `ε_D(F(End(α))_{⟨x⟩}) = α_{⊕x_i}` at every enumerated profile.
pub fn check_epsilon_2naturality<A: NaturalTransformation>(alpha: &A, bounds: &Bounds) -> VerificationReport {
    let family = "epsilon-2-naturality";
    let mut report = VerificationReport::with_families("2-naturality of the counit", &[family]);
    let l = bounds.profile;
    let p = alpha.from_functor();
    let eps_c = epsilon_component(p.source(), l);
    let eps_d = epsilon_component(p.target(), l);
    let e_alpha = match end_on_nat(alpha) {
        Ok(t) => t,
        Err(e) => {
            report.family(family).error(e, Vec::new);
            return report.finish();
        }
    };
    let fe_alpha = match free_on_multinat(&e_alpha, l) {
        Ok(t) => t,
        Err(e) => {
            report.family(family).error(e, Vec::new);
            return report.finish();
        }
    };
    let (fe, d) = (eps_c.source(), p.target());
    for xs in fe.objects() {
        report.family(family).check_eq(
            fe_alpha.component(&xs).and_then(|m| eps_d.map_mor(&m)),
            alpha.component(&eps_c.map_obj(&xs)),
            || inst(&[("x", fe.describe_obj(&xs))]),
            |n| d.describe_mor(n),
        );
    }
    report.finish()
}

/// The reports that together establish `F ⊣ End` on a pair `(M, C)` within bounds.
#[derive(Debug, Clone)]
pub struct AdjunctionWitness {
    pub bounds: Bounds,
    pub unit: VerificationReport,
    pub counit: VerificationReport,
    pub triangles: VerificationReport,
    pub right_adjoint: VerificationReport,
}

impl AdjunctionWitness {
    pub fn reports(&self) -> [&VerificationReport; 4] {
        [&self.unit, &self.counit, &self.triangles, &self.right_adjoint]
    }

    /// All four reports in one, families prefixed by `eta`, `epsilon`,
    /// `triangle` and `rho`.
    pub fn consolidated(&self) -> VerificationReport {
        let mut report = VerificationReport::new("F ⊣ End");
        for (prefix, r) in ["eta", "epsilon", "triangle", "rho"].iter().zip(self.reports()) {
            report.include(prefix, r.clone());
        }
        report.finish()
    }

    pub fn passed(&self) -> bool {
        self.reports().iter().all(|r| r.passed())
    }
}

/// Runs every check on `(M, C)`: `η_M` is a multifunctor, `ε_C` a strict
/// symmetric monoidal functor, both triangle identities, and `ε_C ⊣ ρ_C`.
pub fn check_adjunction<M, C>(m: M, c: C, bounds: &Bounds) -> AdjunctionWitness
where
    M: Multicategory + Clone,
    C: PermutativeCategory + Clone,
{
    adjunction(m, c, bounds, false)
}

#[doc(hidden)]
pub fn check_adjunction_corrupted<M, C>(m: M, c: C, bounds: &Bounds) -> AdjunctionWitness
where
    M: Multicategory + Clone,
    C: PermutativeCategory + Clone,
{
    adjunction(m, c, bounds, true)
}

fn adjunction<M, C>(m: M, c: C, bounds: &Bounds, corrupt: bool) -> AdjunctionWitness
where
    M: Multicategory + Clone,
    C: PermutativeCategory + Clone,
{
    let l = bounds.profile;
    let unit = validate_multifunctor(&eta_component(m.clone(), l.max(bounds.arity)), bounds);
    let mut eps = epsilon_component(c.clone(), l);
    if corrupt {
        eps = eps.skipping_symmetry();
    }
    let counit = validate_smfunctor(&eps, bounds);
    let mut triangles = VerificationReport::new("triangle identities");
    triangles.absorb(free_triangle(m, bounds, corrupt));
    triangles.absorb(check_end_triangle(c.clone(), bounds));
    let right_adjoint = check_right_adjoint(c, bounds);
    AdjunctionWitness {
        bounds: *bounds,
        unit,
        counit,
        triangles: triangles.finish(),
        right_adjoint,
    }
}
