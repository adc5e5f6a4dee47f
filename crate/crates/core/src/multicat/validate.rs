//! Exhaustive axiom checks for multicategories up to an arity bound.

use std::collections::HashMap;

use crate::combinatorics::{block_permutation, block_sum, Permutation};
use crate::report::{FamilyRecord, VerificationReport};
use crate::verify::{fan_out, Bounds};

use super::catalog::Catalog;
use super::{describe_objs, describe_ops, Multicategory};

pub const MULTICATEGORY_FAMILIES: &[&str] = &[
    "signatures",
    "units",
    "action-typing",
    "action-identity",
    "action-composition",
    "gamma-typing",
    "right-unity",
    "left-unity",
    "associativity",
    "top-equivariance",
    "bottom-equivariance",
];

/// Checks every axiom instance whose operations and composites have arity at
/// most `bounds.arity` (and at most the multicategory's own bound).
pub fn validate_multicategory<M: Multicategory>(m: &M, bounds: &Bounds) -> VerificationReport {
    validate_named(m, bounds, "multicategory")
}

pub(crate) fn validate_named<M: Multicategory>(
    m: &M,
    bounds: &Bounds,
    subject: &str,
) -> VerificationReport {
    let cat = Catalog::build(m, bounds.arity);
    let template = VerificationReport::with_families(subject, MULTICATEGORY_FAMILIES);
    let mut report = template.clone();
    let perms: Vec<Vec<Permutation>> = (0..=cat.bound).map(Permutation::all).collect();

    {
        let fam = report.family("signatures");
        fam.skip_many(cat.truncated);
        for (sig, e) in &cat.errors {
            let sig = sig.clone();
            fam.error(e.clone(), || vec![("signature".into(), sig)]);
        }
        for _ in 0..cat.filed {
            fam.pass();
        }
        for (sig, op) in &cat.misfiled {
            fam.fail(crate::report::Witness::new(
                vec![("signature".into(), sig.clone()), ("op".into(), op.clone())],
                "operation listed under a signature it does not have",
            ));
        }
    }
    {
        let objects = cat.objects.clone();
        let fam = report.family("units");
        for c in &objects {
            let u = m.unit(c);
            let sig = m.signature(&u);
            fam.check(
                sig.output == *c && sig.inputs == [c.clone()],
                || {
                    vec![
                        ("object".into(), m.describe_obj(c)),
                        ("unit".into(), m.describe_op(&u)),
                    ]
                },
                || {
                    format!(
                        "unit has signature {}; {}",
                        m.describe_obj(&sig.output),
                        describe_objs(m, &sig.inputs)
                    )
                },
            );
        }
    }

    let per_op = fan_out(bounds.parallel, &cat.ops, &template, |op, r| {
        check_op_laws(m, op, &perms, r);
    });
    report.absorb(per_op);

    let mut instances: Vec<(M::Op, Vec<M::Op>)> = Vec::new();
    let mut shape_overflow = 0;
    for psi in &cat.ops {
        let slots = m.inputs(psi);
        cat.for_each_tuple(&slots, cat.bound, &mut |phis| {
            instances.push((psi.clone(), phis.to_vec()));
        });
        shape_overflow += cat.overflow_shapes(&slots, cat.bound);
    }
    for name in [
        "gamma-typing",
        "associativity",
        "top-equivariance",
        "bottom-equivariance",
    ] {
        report.family(name).skip_many(shape_overflow);
    }

    // Inner composites γ(φ; χ-block) are shared by every instance using φ.
    let blocks: HashMap<M::Op, Vec<Block<M>>> = cat
        .ops
        .iter()
        .map(|phi| (phi.clone(), blocks_over(m, &cat, phi)))
        .collect();
    let composites = fan_out(bounds.parallel, &instances, &template, |(psi, phis), r| {
        check_composite_laws(m, &cat, &blocks, psi, phis, &perms, r);
    });
    report.absorb(composites);
    report.finish()
}

fn check_op_laws<M: Multicategory>(
    m: &M,
    op: &M::Op,
    perms: &[Vec<Permutation>],
    r: &mut VerificationReport,
) {
    let sig = m.signature(op);
    let n = sig.inputs.len();
    let d = |o: &M::Op| m.describe_op(o);
    for sigma in &perms[n] {
        let inst = || vec![("op".into(), d(op)), ("sigma".into(), format!("{sigma:?}"))];
        match m.act(op, sigma) {
            Ok(acted) => {
                let asig = m.signature(&acted);
                let expected = sigma.act(&sig.inputs).unwrap_or_default();
                r.family("action-typing").check(
                    asig.output == sig.output && asig.inputs == expected,
                    inst,
                    || format!("{} has signature {:?}", d(&acted), asig),
                );
                if sigma.is_identity() {
                    r.family("action-identity").check(
                        acted == *op,
                        inst,
                        || format!("op·1 = {}", d(&acted)),
                    );
                }
                for tau in &perms[n] {
                    let inst = || {
                        vec![
                            ("op".into(), d(op)),
                            ("sigma".into(), format!("{sigma:?}")),
                            ("tau".into(), format!("{tau:?}")),
                        ]
                    };
                    let lhs = m.act(&acted, tau);
                    let rhs = sigma.then(tau).and_then(|st| m.act(op, &st));
                    r.family("action-composition").check_eq(lhs, rhs, inst, d);
                }
            }
            Err(e) => r.family("action-typing").error(e, inst),
        }
    }

    let units: Vec<M::Op> = sig.inputs.iter().map(|c| m.unit(c)).collect();
    r.family("right-unity").check_eq(
        m.gamma(op, &units),
        Ok(op.clone()),
        || vec![("op".into(), d(op))],
        d,
    );
    r.family("left-unity").check_eq(
        m.gamma(&m.unit(&sig.output), std::slice::from_ref(op)),
        Ok(op.clone()),
        || vec![("op".into(), d(op))],
        d,
    );
}

/// Every χ-block over the inputs of `phi` with its arity and `γ(φ; block)`.
fn blocks_over<M: Multicategory>(m: &M, cat: &Catalog<M>, phi: &M::Op) -> Vec<Block<M>> {
    let mut v = Vec::new();
    cat.for_each_tuple(&m.inputs(phi), cat.bound, &mut |chis| {
        let arity = chis.iter().map(|c| m.arity(c)).sum();
        v.push((chis.to_vec(), arity, m.gamma(phi, chis)));
    });
    v
}

#[allow(clippy::too_many_arguments)]
fn check_composite_laws<M: Multicategory>(
    m: &M,
    cat: &Catalog<M>,
    blocks: &HashMap<M::Op, Vec<Block<M>>>,
    psi: &M::Op,
    phis: &[M::Op],
    perms: &[Vec<Permutation>],
    r: &mut VerificationReport,
) {
    let d = |o: &M::Op| m.describe_op(o);
    let base = || vec![("psi".into(), d(psi)), ("phi".into(), describe_ops(m, phis))];
    let composite = match m.gamma(psi, phis) {
        Ok(c) => c,
        Err(e) => {
            for name in ["gamma-typing", "top-equivariance", "bottom-equivariance"] {
                r.family(name).error(e.clone(), base);
            }
            return;
        }
    };

    let arities: Vec<usize> = phis.iter().map(|p| m.arity(p)).collect();
    let concat: Vec<M::Obj> = phis.iter().flat_map(|p| m.inputs(p)).collect();
    let csig = m.signature(&composite);
    r.family("gamma-typing").check(
        csig.output == m.output(psi) && csig.inputs == concat,
        base,
        || format!("{} has signature {:?}", d(&composite), csig),
    );

    let n = phis.len();
    for sigma in &perms[n] {
        let inst = || {
            let mut v = base();
            v.push(("sigma".into(), format!("{sigma:?}")));
            v
        };
        let permuted_phis = sigma.act(phis).unwrap_or_default();
        let permuted_lengths = sigma.act(&arities).unwrap_or_default();
        let lhs = m.act(psi, sigma).and_then(|p| m.gamma(&p, &permuted_phis));
        let rhs = block_permutation(sigma, &permuted_lengths).and_then(|b| m.act(&composite, &b));
        r.family("top-equivariance").check_eq(lhs, rhs, inst, d);
    }

    let mut taus: Vec<Permutation> = Vec::with_capacity(n);
    bottom_rec(m, psi, phis, &composite, perms, &mut taus, r, &base);

    let total: usize = arities.iter().sum();
    if total == 0 {
        return;
    }
    r.family("associativity")
        .skip_many(cat.overflow_shapes(&concat, cat.bound));
    let empty = Vec::new();
    let blocks: Vec<&[Block<M>]> = phis
        .iter()
        .map(|phi| blocks.get(phi).unwrap_or(&empty).as_slice())
        .collect();
    let mut chis = Vec::with_capacity(concat.len());
    let mut inner = Vec::with_capacity(n);
    let ctx = AssocCtx {
        m,
        psi,
        composite: &composite,
        blocks: &blocks,
        base: &base,
    };
    assoc_rec(&ctx, cat.bound, &mut chis, &mut inner, None, r.family("associativity"));
}

type Block<M> = (Vec<<M as Multicategory>::Op>, usize, crate::error::Result<<M as Multicategory>::Op>);

struct AssocCtx<'a, M: Multicategory> {
    m: &'a M,
    psi: &'a M::Op,
    composite: &'a M::Op,
    blocks: &'a [&'a [Block<M>]],
    base: &'a dyn Fn() -> Vec<(String, String)>,
}

fn assoc_rec<M: Multicategory>(
    ctx: &AssocCtx<'_, M>,
    budget: usize,
    chis: &mut Vec<M::Op>,
    inner: &mut Vec<M::Op>,
    poisoned: Option<&crate::error::Error>,
    fam: &mut FamilyRecord,
) {
    let j = inner.len();
    let m = ctx.m;
    if j == ctx.blocks.len() {
        let inst = || {
            let mut v = (ctx.base)();
            v.push(("chi".into(), describe_ops(m, chis)));
            v
        };
        let lhs = m.gamma(ctx.composite, chis);
        let rhs = match poisoned {
            Some(e) => Err(e.clone()),
            None => m.gamma(ctx.psi, inner),
        };
        fam.check_eq(lhs, rhs, inst, |o| m.describe_op(o));
        return;
    }
    for (block, arity, composed) in ctx.blocks[j] {
        if *arity > budget {
            continue;
        }
        let len = chis.len();
        chis.extend(block.iter().cloned());
        // A failed block composite still occupies its slot so that every
        // completion is reported.
        let (op, poison) = match composed {
            Ok(op) => (op.clone(), poisoned),
            Err(e) => (block.first().cloned().unwrap_or_else(|| ctx.psi.clone()), poisoned.or(Some(e))),
        };
        inner.push(op);
        assoc_rec(ctx, budget - arity, chis, inner, poison, fam);
        inner.pop();
        chis.truncate(len);
    }
}

#[allow(clippy::too_many_arguments)]
fn bottom_rec<M: Multicategory>(
    m: &M,
    psi: &M::Op,
    phis: &[M::Op],
    composite: &M::Op,
    perms: &[Vec<Permutation>],
    taus: &mut Vec<Permutation>,
    r: &mut VerificationReport,
    base: &dyn Fn() -> Vec<(String, String)>,
) {
    let j = taus.len();
    if j == phis.len() {
        let lhs = phis
            .iter()
            .zip(taus.iter())
            .map(|(p, t)| m.act(p, t))
            .collect::<crate::error::Result<Vec<_>>>()
            .and_then(|acted| m.gamma(psi, &acted));
        let rhs = m.act(composite, &block_sum(taus));
        let inst = || {
            let mut v = base();
            let ts: Vec<String> = taus.iter().map(|t| format!("{t:?}")).collect();
            v.push(("tau".into(), format!("[{}]", ts.join(", "))));
            v
        };
        r.family("bottom-equivariance")
            .check_eq(lhs, rhs, inst, |o| m.describe_op(o));
        return;
    }
    let k = m.arity(&phis[j]);
    for tau in &perms[k] {
        taus.push(tau.clone());
        bottom_rec(m, psi, phis, composite, perms, taus, r, base);
        taus.pop();
    }
}
