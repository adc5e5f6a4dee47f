//! Built-in multicategories.

use std::str::FromStr;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

use super::presentation::{MulticategoryPresentation, ObjId, OpId, PresentationBuilder};
use super::Multicategory;

/// Arity bound used for builtins whose operation sets are finite at every
/// arity but which still need a presented bound.
pub const DEFAULT_ARITY_BOUND: usize = 4;

/// `Mtu`: one object `*` and only its unit operation.
pub fn initial_operad() -> MulticategoryPresentation {
    let mut b = PresentationBuilder::new("initial_operad", DEFAULT_ARITY_BOUND);
    let star = b.object("*").expect("fresh builder");
    let one = b.operation("1", star, &[star]).expect("fresh builder");
    b.unit(star, one).expect("fresh builder");
    b.composition(one, &[one], one).expect("fresh builder");
    b.build().expect("initial operad is complete")
}

/// `Mterm` truncated at arity `a`: one object and one operation `ι_n` per
/// arity `n ≤ a`. The bound is raised to 1 if needed so the unit exists.
pub fn terminal_multicategory(a: usize) -> MulticategoryPresentation {
    let a = a.max(1);
    let mut b = PresentationBuilder::new(format!("terminal_multicategory({a})"), a);
    let star = b.object("*").expect("fresh builder");
    let iotas: Vec<OpId> = (0..=a)
        .map(|n| b.operation(format!("iota{n}"), star, &vec![star; n]).expect("fresh builder"))
        .collect();
    b.unit(star, iotas[1]).expect("fresh builder");
    for (n, &op) in iotas.iter().enumerate() {
        for sigma in Permutation::all(n) {
            if !sigma.is_identity() {
                b.action(op, sigma, op).expect("fresh builder");
            }
        }
    }
    for (n, &outer) in iotas.iter().enumerate() {
        let mut inner = Vec::with_capacity(n);
        fill_terminal(&mut b, &iotas, outer, n, a, &mut inner);
    }
    b.build().expect("terminal multicategory is complete")
}

fn fill_terminal(
    b: &mut PresentationBuilder,
    iotas: &[OpId],
    outer: OpId,
    n: usize,
    budget: usize,
    inner: &mut Vec<OpId>,
) {
    if inner.len() == n {
        let total: usize = inner.iter().map(|o| o.0).sum();
        b.composition(outer, inner, iotas[total]).expect("well-formed key");
        return;
    }
    for k in 0..=budget {
        inner.push(iotas[k]);
        fill_terminal(b, iotas, outer, n, budget - k, inner);
        inner.pop();
    }
}

/// The multicategory with no objects.
pub fn empty_multicategory() -> MulticategoryPresentation {
    PresentationBuilder::new("empty_multicategory", 0)
        .build()
        .expect("empty presentation is complete")
}

/// Names of the table builtins, parsed by [`builtin_multicategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinMulticategory {
    InitialOperad,
    TerminalMulticategory(usize),
    EmptyMulticategory,
}

impl FromStr for BuiltinMulticategory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "initial_operad" | "initial_operad()" => return Ok(Self::InitialOperad),
            "empty_multicategory" | "empty_multicategory()" => {
                return Ok(Self::EmptyMulticategory)
            }
            _ => {}
        }
        if let Some(rest) = s
            .strip_prefix("terminal_multicategory(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let a = rest
                .trim()
                .parse()
                .map_err(|_| Error::UnknownKind(s.to_string()))?;
            return Ok(Self::TerminalMulticategory(a));
        }
        Err(Error::UnknownKind(s.to_string()))
    }
}

impl BuiltinMulticategory {
    pub fn build(self) -> MulticategoryPresentation {
        match self {
            Self::InitialOperad => initial_operad(),
            Self::TerminalMulticategory(a) => terminal_multicategory(a),
            Self::EmptyMulticategory => empty_multicategory(),
        }
    }
}

/// Builds a table builtin from its name, e.g. `terminal_multicategory(3)`.
pub fn builtin_multicategory(kind: &str) -> Result<MulticategoryPresentation> {
    kind.parse::<BuiltinMulticategory>().map(BuiltinMulticategory::build)
}

/// The endomorphism operad `End(c)` of an object `c`: the one-object
/// multicategory with `End(c)_n = M⟨c; c, …, c⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct EndomorphismOperad<M: Multicategory> {
    base: M,
    object: M::Obj,
}

pub fn endomorphism_operad<M: Multicategory>(base: M, object: M::Obj) -> Result<EndomorphismOperad<M>> {
    if !base.objects().contains(&object) {
        return Err(Error::Invalid(format!(
            "object {object:?} does not belong to the multicategory"
        )));
    }
    Ok(EndomorphismOperad { base, object })
}

impl<M: Multicategory> EndomorphismOperad<M> {
    pub fn base(&self) -> &M {
        &self.base
    }

    pub fn object(&self) -> &M::Obj {
        &self.object
    }
}

impl<M: Multicategory> Multicategory for EndomorphismOperad<M> {
    type Obj = M::Obj;
    type Op = M::Op;

    fn objects(&self) -> Vec<M::Obj> {
        vec![self.object.clone()]
    }

    fn arity_bound(&self) -> Option<usize> {
        self.base.arity_bound()
    }

    fn ops(&self, output: &M::Obj, inputs: &[M::Obj]) -> Result<Vec<M::Op>> {
        if *output != self.object || inputs.iter().any(|c| *c != self.object) {
            return Ok(Vec::new());
        }
        self.base.ops(output, inputs)
    }

    fn output(&self, op: &M::Op) -> M::Obj {
        self.base.output(op)
    }

    fn inputs(&self, op: &M::Op) -> Vec<M::Obj> {
        self.base.inputs(op)
    }

    fn arity(&self, op: &M::Op) -> usize {
        self.base.arity(op)
    }

    fn act(&self, op: &M::Op, sigma: &Permutation) -> Result<M::Op> {
        self.base.act(op, sigma)
    }

    fn unit(&self, c: &M::Obj) -> M::Op {
        self.base.unit(c)
    }

    fn gamma(&self, outer: &M::Op, inner: &[M::Op]) -> Result<M::Op> {
        self.base.gamma(outer, inner)
    }

    fn describe_obj(&self, c: &M::Obj) -> String {
        self.base.describe_obj(c)
    }

    fn describe_op(&self, op: &M::Op) -> String {
        self.base.describe_op(op)
    }
}

/// The first object of a presentation, for one-object builtins.
pub fn sole_object(p: &MulticategoryPresentation) -> ObjId {
    p.object_ids().next().expect("presentation has an object")
}
