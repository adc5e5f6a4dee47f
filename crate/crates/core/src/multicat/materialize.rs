//! Tabulating a multicategory up to an arity bound.

use std::collections::HashMap;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

use super::catalog::Catalog;
use super::presentation::{MulticategoryPresentation, ObjId, OpId, PresentationBuilder};
use super::Multicategory;

/// The presentation of `m` truncated at arity `arity`: every operation of
/// arity at most `arity`, the full action on them, and `γ` on every tuple
/// whose composite stays within the bound. Objects and operations are named
/// by `describe_obj` / `describe_op`, which must be injective.
pub fn materialize<M: Multicategory>(
    m: &M,
    name: impl Into<String>,
    arity: usize,
) -> Result<MulticategoryPresentation> {
    let cat = Catalog::build(m, arity);
    if let Some((sig, e)) = cat.errors.first() {
        return Err(Error::Structural(format!("cannot list {sig}: {e}")));
    }
    let mut b = PresentationBuilder::new(name, cat.bound);
    let mut obj_ids: HashMap<M::Obj, ObjId> = HashMap::new();
    for c in &cat.objects {
        obj_ids.insert(c.clone(), b.object(m.describe_obj(c))?);
    }
    let obj = |c: &M::Obj| {
        obj_ids
            .get(c)
            .copied()
            .ok_or_else(|| Error::Structural(format!("unknown object {}", m.describe_obj(c))))
    };
    let mut op_ids: HashMap<M::Op, OpId> = HashMap::new();
    for op in &cat.ops {
        let inputs = m.inputs(op).iter().map(obj).collect::<Result<Vec<_>>>()?;
        let id = b.operation(m.describe_op(op), obj(&m.output(op))?, &inputs)?;
        op_ids.insert(op.clone(), id);
    }
    let lookup = |op: &M::Op| {
        op_ids.get(op).copied().ok_or_else(|| {
            Error::Structural(format!("{} is not among the listed operations", m.describe_op(op)))
        })
    };
    for c in &cat.objects {
        b.unit(obj(c)?, lookup(&m.unit(c))?)?;
    }
    let perms: Vec<Vec<Permutation>> = (0..=cat.bound).map(Permutation::all).collect();
    for op in &cat.ops {
        for sigma in &perms[m.arity(op)] {
            if !sigma.is_identity() {
                b.action(lookup(op)?, sigma.clone(), lookup(&m.act(op, sigma)?)?)?;
            }
        }
    }
    for op in &cat.ops {
        let outer = lookup(op)?;
        let mut failure = None;
        cat.for_each_tuple(&m.inputs(op), cat.bound, &mut |inner| {
            if failure.is_some() {
                return;
            }
            let entry = (|| {
                let ids = inner.iter().map(&lookup).collect::<Result<Vec<_>>>()?;
                let result = lookup(&m.gamma(op, inner)?)?;
                b.composition(outer, &ids, result)
            })();
            if let Err(e) = entry {
                failure = Some(e);
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    b.build()
}
