//! Finite multicategories given by explicit tables.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

use super::Multicategory;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpId(pub usize);

impl fmt::Debug for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

impl fmt::Debug for OpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpDecl {
    pub name: String,
    pub output: ObjId,
    pub inputs: Vec<ObjId>,
}

/// A multicategory truncated at arity `A`: every operation has arity at most
/// `A`, and `γ` is tabulated for every composable tuple whose composite has
/// arity at most `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticategoryPresentation {
    name: String,
    arity_bound: usize,
    objects: Vec<String>,
    ops: Vec<OpDecl>,
    // indexed by output object
    signatures: Vec<BTreeMap<Vec<ObjId>, Vec<OpId>>>,
    units: Vec<OpId>,
    // indexed by operation; identity entries are optional
    action: Vec<BTreeMap<Permutation, OpId>>,
    // indexed by outer operation
    gamma: Vec<BTreeMap<Vec<OpId>, OpId>>,
}

impl MulticategoryPresentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn presented_arity(&self) -> usize {
        self.arity_bound
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn op_count(&self) -> usize {
        self.ops.len()
    }

    pub fn object_name(&self, c: ObjId) -> &str {
        &self.objects[c.0]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn op_decl(&self, op: OpId) -> &OpDecl {
        &self.ops[op.0]
    }

    pub fn op_decls(&self) -> &[OpDecl] {
        &self.ops
    }

    pub fn object_id(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|n| n == name).map(ObjId)
    }

    pub fn op_id(&self, name: &str) -> Option<OpId> {
        self.ops.iter().position(|d| d.name == name).map(OpId)
    }

    pub fn op_ids(&self) -> impl Iterator<Item = OpId> {
        (0..self.ops.len()).map(OpId)
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }

    /// Explicit action entries of `op`, ordered by permutation.
    pub fn action_entries(&self, op: OpId) -> impl Iterator<Item = (&Permutation, OpId)> {
        self.action[op.0].iter().map(|(p, r)| (p, *r))
    }

    /// All composition entries, ordered by outer operation then inner tuple.
    pub fn composition_entries(&self) -> impl Iterator<Item = (OpId, &[OpId], OpId)> {
        self.gamma.iter().enumerate().flat_map(|(o, table)| {
            table.iter().map(move |(inner, r)| (OpId(o), inner.as_slice(), *r))
        })
    }

    /// A copy with the unit of `c` replaced.
    pub fn with_unit(&self, c: ObjId, op: OpId) -> Result<Self> {
        self.check_obj(c)?;
        self.check_op(op)?;
        let mut out = self.clone();
        out.units[c.0] = op;
        Ok(out)
    }

    /// A copy with `op·sigma` replaced.
    pub fn with_action(&self, op: OpId, sigma: &Permutation, result: OpId) -> Result<Self> {
        self.check_op(op)?;
        self.check_op(result)?;
        if sigma.len() != self.ops[op.0].inputs.len() {
            return Err(Error::Structural(format!(
                "permutation of length {} for `{}` of arity {}",
                sigma.len(),
                self.ops[op.0].name,
                self.ops[op.0].inputs.len()
            )));
        }
        let mut out = self.clone();
        out.action[op.0].insert(sigma.clone(), result);
        Ok(out)
    }

    /// A copy with `γ(outer; inner)` replaced. The entry must already exist.
    pub fn with_composition(&self, outer: OpId, inner: &[OpId], result: OpId) -> Result<Self> {
        self.check_op(outer)?;
        self.check_op(result)?;
        let mut out = self.clone();
        match out.gamma[outer.0].get_mut(inner) {
            Some(slot) => *slot = result,
            None => {
                return Err(Error::Structural(format!(
                    "no composition entry for `{}` with {} inner operations",
                    self.ops[outer.0].name,
                    inner.len()
                )))
            }
        }
        Ok(out)
    }

    fn check_obj(&self, c: ObjId) -> Result<()> {
        if c.0 < self.objects.len() {
            Ok(())
        } else {
            Err(Error::Structural(format!("dangling object id {}", c.0)))
        }
    }

    fn check_op(&self, op: OpId) -> Result<()> {
        if op.0 < self.ops.len() {
            Ok(())
        } else {
            Err(Error::Structural(format!("dangling operation id {}", op.0)))
        }
    }
}

impl Multicategory for MulticategoryPresentation {
    type Obj = ObjId;
    type Op = OpId;

    fn objects(&self) -> Vec<ObjId> {
        self.object_ids().collect()
    }

    fn arity_bound(&self) -> Option<usize> {
        Some(self.arity_bound)
    }

    fn ops(&self, output: &ObjId, inputs: &[ObjId]) -> Result<Vec<OpId>> {
        if inputs.len() > self.arity_bound {
            return Err(Error::ArityOverflow {
                arity: inputs.len(),
                bound: self.arity_bound,
            });
        }
        Ok(self
            .signatures
            .get(output.0)
            .and_then(|t| t.get(inputs))
            .cloned()
            .unwrap_or_default())
    }

    fn output(&self, op: &OpId) -> ObjId {
        self.ops[op.0].output
    }

    fn inputs(&self, op: &OpId) -> Vec<ObjId> {
        self.ops[op.0].inputs.clone()
    }

    fn arity(&self, op: &OpId) -> usize {
        self.ops[op.0].inputs.len()
    }

    fn act(&self, op: &OpId, sigma: &Permutation) -> Result<OpId> {
        let n = self.arity(op);
        if sigma.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: sigma.len(),
            });
        }
        match self.action[op.0].get(sigma) {
            Some(r) => Ok(*r),
            None if sigma.is_identity() => Ok(*op),
            None => Err(Error::Structural(format!(
                "missing action entry {}·{:?}",
                self.ops[op.0].name, sigma
            ))),
        }
    }

    fn unit(&self, c: &ObjId) -> OpId {
        self.units[c.0]
    }

    fn gamma(&self, outer: &OpId, inner: &[OpId]) -> Result<OpId> {
        let decl = &self.ops[outer.0];
        if inner.len() != decl.inputs.len() {
            return Err(Error::SignatureMismatch(format!(
                "`{}` has arity {} but {} operations were supplied",
                decl.name,
                decl.inputs.len(),
                inner.len()
            )));
        }
        let mut total = 0;
        for (j, phi) in inner.iter().enumerate() {
            let d = &self.ops[phi.0];
            if d.output != decl.inputs[j] {
                return Err(Error::SignatureMismatch(format!(
                    "input {} of `{}` is `{}` but `{}` outputs `{}`",
                    j + 1,
                    decl.name,
                    self.objects[decl.inputs[j].0],
                    d.name,
                    self.objects[d.output.0]
                )));
            }
            total += d.inputs.len();
        }
        if total > self.arity_bound {
            return Err(Error::ArityOverflow {
                arity: total,
                bound: self.arity_bound,
            });
        }
        self.gamma[outer.0].get(inner).copied().ok_or_else(|| {
            Error::Structural(format!("missing composition entry for `{}`", decl.name))
        })
    }

    fn describe_obj(&self, c: &ObjId) -> String {
        self.objects[c.0].clone()
    }

    fn describe_op(&self, op: &OpId) -> String {
        self.ops[op.0].name.clone()
    }
}

/// Incremental construction of a [`MulticategoryPresentation`].
///
/// Entries are checked as they are added; `build` checks completeness.
#[derive(Debug, Clone)]
pub struct PresentationBuilder {
    name: String,
    arity_bound: usize,
    objects: Vec<String>,
    ops: Vec<OpDecl>,
    units: Vec<Option<OpId>>,
    action: Vec<BTreeMap<Permutation, OpId>>,
    gamma: Vec<BTreeMap<Vec<OpId>, OpId>>,
}

impl PresentationBuilder {
    pub fn new(name: impl Into<String>, arity_bound: usize) -> Self {
        Self {
            name: name.into(),
            arity_bound,
            objects: Vec::new(),
            ops: Vec::new(),
            units: Vec::new(),
            action: Vec::new(),
            gamma: Vec::new(),
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> Result<ObjId> {
        let name = name.into();
        if self.objects.contains(&name) {
            return Err(Error::Structural(format!("duplicate object `{name}`")));
        }
        self.objects.push(name);
        self.units.push(None);
        Ok(ObjId(self.objects.len() - 1))
    }

    pub fn operation(
        &mut self,
        name: impl Into<String>,
        output: ObjId,
        inputs: &[ObjId],
    ) -> Result<OpId> {
        let name = name.into();
        if self.ops.iter().any(|d| d.name == name) {
            return Err(Error::Structural(format!("duplicate operation `{name}`")));
        }
        for c in std::iter::once(&output).chain(inputs) {
            self.check_obj(*c)?;
        }
        if inputs.len() > self.arity_bound {
            return Err(Error::Structural(format!(
                "operation `{name}` has arity {} above the presented bound {}",
                inputs.len(),
                self.arity_bound
            )));
        }
        self.ops.push(OpDecl {
            name,
            output,
            inputs: inputs.to_vec(),
        });
        self.action.push(BTreeMap::new());
        self.gamma.push(BTreeMap::new());
        Ok(OpId(self.ops.len() - 1))
    }

    pub fn unit(&mut self, c: ObjId, op: OpId) -> Result<()> {
        self.check_obj(c)?;
        self.check_op(op)?;
        if self.units[c.0].is_some() {
            return Err(Error::Structural(format!(
                "duplicate unit for `{}`",
                self.objects[c.0]
            )));
        }
        self.units[c.0] = Some(op);
        Ok(())
    }

    pub fn action(&mut self, op: OpId, sigma: Permutation, result: OpId) -> Result<()> {
        self.check_op(op)?;
        self.check_op(result)?;
        let decl = &self.ops[op.0];
        if sigma.len() != decl.inputs.len() {
            return Err(Error::Structural(format!(
                "action key for `{}` has a permutation of length {}, arity is {}",
                decl.name,
                sigma.len(),
                decl.inputs.len()
            )));
        }
        if self.action[op.0].contains_key(&sigma) {
            return Err(Error::Structural(format!(
                "duplicate action entry {}·{:?}",
                decl.name, sigma
            )));
        }
        self.action[op.0].insert(sigma, result);
        Ok(())
    }

    pub fn composition(&mut self, outer: OpId, inner: &[OpId], result: OpId) -> Result<()> {
        self.check_op(outer)?;
        self.check_op(result)?;
        for phi in inner {
            self.check_op(*phi)?;
        }
        let decl = &self.ops[outer.0];
        if inner.len() != decl.inputs.len() {
            return Err(Error::Structural(format!(
                "composition key for `{}` lists {} inner operations, arity is {}",
                decl.name,
                inner.len(),
                decl.inputs.len()
            )));
        }
        let mut total = 0;
        for (j, phi) in inner.iter().enumerate() {
            let d = &self.ops[phi.0];
            if d.output != decl.inputs[j] {
                return Err(Error::Structural(format!(
                    "composition key for `{}`: `{}` does not output input {}",
                    decl.name,
                    d.name,
                    j + 1
                )));
            }
            total += d.inputs.len();
        }
        if total > self.arity_bound {
            return Err(Error::Structural(format!(
                "composition key for `{}` has composite arity {} above the presented bound {}",
                decl.name, total, self.arity_bound
            )));
        }
        if self.gamma[outer.0].contains_key(inner) {
            return Err(Error::Structural(format!(
                "duplicate composition entry for `{}`",
                decl.name
            )));
        }
        self.gamma[outer.0].insert(inner.to_vec(), result);
        Ok(())
    }

    pub fn object_id(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|n| n == name).map(ObjId)
    }

    pub fn op_id(&self, name: &str) -> Option<OpId> {
        self.ops.iter().position(|d| d.name == name).map(OpId)
    }

    pub fn op_decl(&self, op: OpId) -> &OpDecl {
        &self.ops[op.0]
    }

    pub fn op_count(&self) -> usize {
        self.ops.len()
    }

    /// Checks completeness and seals the presentation.
    pub fn build(self) -> Result<MulticategoryPresentation> {
        let mut units = Vec::with_capacity(self.units.len());
        for (c, u) in self.units.iter().enumerate() {
            match u {
                Some(op) => units.push(*op),
                None => {
                    return Err(Error::Structural(format!(
                        "missing unit for `{}`",
                        self.objects[c]
                    )))
                }
            }
        }
        for (o, decl) in self.ops.iter().enumerate() {
            for sigma in Permutation::all(decl.inputs.len()) {
                if !sigma.is_identity() && !self.action[o].contains_key(&sigma) {
                    return Err(Error::Structural(format!(
                        "missing action entry {}·{:?}",
                        decl.name, sigma
                    )));
                }
            }
        }

        let mut signatures = vec![BTreeMap::<Vec<ObjId>, Vec<OpId>>::new(); self.objects.len()];
        let mut by_output = vec![Vec::new(); self.objects.len()];
        for (o, decl) in self.ops.iter().enumerate() {
            signatures[decl.output.0]
                .entry(decl.inputs.clone())
                .or_default()
                .push(OpId(o));
            by_output[decl.output.0].push(OpId(o));
        }

        for (o, decl) in self.ops.iter().enumerate() {
            let mut missing = None;
            let mut cur = Vec::with_capacity(decl.inputs.len());
            composable_tuples(
                &self.ops,
                &by_output,
                &decl.inputs,
                self.arity_bound,
                &mut cur,
                &mut |inner| {
                    if missing.is_none() && !self.gamma[o].contains_key(inner) {
                        missing = Some(inner.to_vec());
                    }
                },
            );
            if let Some(inner) = missing {
                let listed: Vec<&str> = inner.iter().map(|p| self.ops[p.0].name.as_str()).collect();
                return Err(Error::Structural(format!(
                    "missing composition entry for `{}` with ({})",
                    decl.name,
                    listed.join(", ")
                )));
            }
        }

        Ok(MulticategoryPresentation {
            name: self.name,
            arity_bound: self.arity_bound,
            objects: self.objects,
            ops: self.ops,
            signatures,
            units,
            action: self.action,
            gamma: self.gamma,
        })
    }

    fn check_obj(&self, c: ObjId) -> Result<()> {
        if c.0 < self.objects.len() {
            Ok(())
        } else {
            Err(Error::Structural(format!("dangling object id {}", c.0)))
        }
    }

    fn check_op(&self, op: OpId) -> Result<()> {
        if op.0 < self.ops.len() {
            Ok(())
        } else {
            Err(Error::Structural(format!("dangling operation id {}", op.0)))
        }
    }
}

fn composable_tuples(
    ops: &[OpDecl],
    by_output: &[Vec<OpId>],
    slots: &[ObjId],
    budget: usize,
    cur: &mut Vec<OpId>,
    f: &mut dyn FnMut(&[OpId]),
) {
    if cur.len() == slots.len() {
        f(cur);
        return;
    }
    for &phi in &by_output[slots[cur.len()].0] {
        let k = ops[phi.0].inputs.len();
        if k <= budget {
            cur.push(phi);
            composable_tuples(ops, by_output, slots, budget - k, cur, f);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial_operad(bound: usize) -> PresentationBuilder {
        let mut b = PresentationBuilder::new("t", bound);
        let c = b.object("*").unwrap();
        let mut ids = Vec::new();
        for k in 0..=bound {
            ids.push(b.operation(format!("m{k}"), c, &vec![c; k]).unwrap());
        }
        b.unit(c, ids[1]).unwrap();
        for (k, &op) in ids.iter().enumerate() {
            for sigma in Permutation::all(k) {
                if !sigma.is_identity() {
                    b.action(op, sigma, op).unwrap();
                }
            }
        }
        b
    }

    #[test]
    fn incomplete_gamma_is_structural() {
        let b = trivial_operad(2);
        let err = b.build().unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn malformed_keys_are_rejected() {
        let mut b = trivial_operad(2);
        let m2 = b.op_id("m2").unwrap();
        let m1 = b.op_id("m1").unwrap();
        assert!(b.composition(m2, &[m1], m1).is_err());
        assert!(b.composition(m2, &[m2, m1], m1).is_err());
        assert!(b.action(m2, Permutation::identity(3), m2).is_err());
        assert!(b.unit(ObjId(7), m1).is_err());
    }

    #[test]
    fn identity_action_may_be_omitted() {
        let mut b = trivial_operad(1);
        let m0 = b.op_id("m0").unwrap();
        let m1 = b.op_id("m1").unwrap();
        b.composition(m0, &[], m0).unwrap();
        b.composition(m1, &[m0], m0).unwrap();
        b.composition(m1, &[m1], m1).unwrap();
        let p = b.build().unwrap();
        assert_eq!(p.act(&m1, &Permutation::identity(1)).unwrap(), m1);
        assert_eq!(p.gamma(&m1, &[m1]).unwrap(), m1);
        assert!(matches!(
            p.ops(&ObjId(0), &[ObjId(0), ObjId(0)]),
            Err(Error::ArityOverflow { .. })
        ));
    }
}
