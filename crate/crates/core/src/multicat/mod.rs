//! Small symmetric multicategories.
//!
//! A multicategory is accessed through [`Multicategory`]: objects, operation
//! sets per signature, the right symmetric-group action, units and the
//! composition `γ`. Table presentations, builtins and the endomorphism
//! multicategory of a permutative category all implement it.

use std::fmt::Debug;
use std::hash::Hash;

use crate::combinatorics::Permutation;
use crate::error::Result;

pub mod builtin;
pub mod fixtures;
pub mod functor;
pub mod materialize;
pub mod presentation;
pub mod transformation;
pub mod underlying;
pub mod validate;

pub(crate) mod catalog;

pub use builtin::{
    builtin_multicategory, empty_multicategory, endomorphism_operad, initial_operad,
    terminal_multicategory, BuiltinMulticategory, EndomorphismOperad,
};
pub use functor::{
    compose_multifunctors, enumerate_multifunctors, validate_multifunctor, ComposedMultifunctor,
    IdentityMultifunctor, Multifunctor, TableMultifunctor,
};
pub use presentation::{MulticategoryPresentation, ObjId, OpDecl, OpId, PresentationBuilder};
pub use transformation::{
    enumerate_multinats, hcomp_multinat, validate_multinat, vcomp_multinat,
    MultinatTransformation,
};
pub use underlying::{underlying_category, UnderlyingCategory};
pub use materialize::materialize;
pub use validate::validate_multicategory;

/// Object type of a multicategory.
pub type ObjOf<M> = <M as Multicategory>::Obj;
/// Operation type of a multicategory.
pub type OpOf<M> = <M as Multicategory>::Op;

/// Output and input profile of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature<O> {
    pub output: O,
    pub inputs: Vec<O>,
}

pub trait Multicategory: PartialEq + Sync {
    type Obj: Clone + Eq + Ord + Hash + Debug + Send + Sync;
    type Op: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    /// The objects, in a fixed order. Every multicategory handled here has
    /// finitely many objects.
    fn objects(&self) -> Vec<Self::Obj>;

    /// Largest arity this multicategory can answer for, if it is truncated.
    fn arity_bound(&self) -> Option<usize> {
        None
    }

    /// `M⟨output; inputs⟩`. Fails with `ArityOverflow` past the arity bound.
    fn ops(&self, output: &Self::Obj, inputs: &[Self::Obj]) -> Result<Vec<Self::Op>>;

    fn output(&self, op: &Self::Op) -> Self::Obj;

    fn inputs(&self, op: &Self::Op) -> Vec<Self::Obj>;

    fn arity(&self, op: &Self::Op) -> usize {
        self.inputs(op).len()
    }

    fn signature(&self, op: &Self::Op) -> Signature<Self::Obj> {
        Signature {
            output: self.output(op),
            inputs: self.inputs(op),
        }
    }

    /// `op·σ`, an operation with inputs `inputs(op)·σ`.
    fn act(&self, op: &Self::Op, sigma: &Permutation) -> Result<Self::Op>;

    fn unit(&self, c: &Self::Obj) -> Self::Op;

    /// `γ(outer; inner_1, …, inner_n)`.
    fn gamma(&self, outer: &Self::Op, inner: &[Self::Op]) -> Result<Self::Op>;

    fn describe_obj(&self, c: &Self::Obj) -> String {
        format!("{c:?}")
    }

    fn describe_op(&self, op: &Self::Op) -> String {
        format!("{op:?}")
    }
}

impl<T: Multicategory> Multicategory for &T {
    type Obj = T::Obj;
    type Op = T::Op;

    fn objects(&self) -> Vec<Self::Obj> {
        (**self).objects()
    }
    fn arity_bound(&self) -> Option<usize> {
        (**self).arity_bound()
    }
    fn ops(&self, output: &Self::Obj, inputs: &[Self::Obj]) -> Result<Vec<Self::Op>> {
        (**self).ops(output, inputs)
    }
    fn output(&self, op: &Self::Op) -> Self::Obj {
        (**self).output(op)
    }
    fn inputs(&self, op: &Self::Op) -> Vec<Self::Obj> {
        (**self).inputs(op)
    }
    fn arity(&self, op: &Self::Op) -> usize {
        (**self).arity(op)
    }
    fn act(&self, op: &Self::Op, sigma: &Permutation) -> Result<Self::Op> {
        (**self).act(op, sigma)
    }
    fn unit(&self, c: &Self::Obj) -> Self::Op {
        (**self).unit(c)
    }
    fn gamma(&self, outer: &Self::Op, inner: &[Self::Op]) -> Result<Self::Op> {
        (**self).gamma(outer, inner)
    }
    fn describe_obj(&self, c: &Self::Obj) -> String {
        (**self).describe_obj(c)
    }
    fn describe_op(&self, op: &Self::Op) -> String {
        (**self).describe_op(op)
    }
}

/// `γ(ψ; φ_1, …, φ_n)` in `m`.
pub fn gamma_eval<M: Multicategory>(m: &M, psi: &M::Op, phis: &[M::Op]) -> Result<M::Op> {
    m.gamma(psi, phis)
}

/// `φ·σ` in `m`.
pub fn act_eval<M: Multicategory>(m: &M, phi: &M::Op, sigma: &Permutation) -> Result<M::Op> {
    m.act(phi, sigma)
}

/// Renders a list of operations as `[a, b, …]`.
pub(crate) fn describe_ops<M: Multicategory>(m: &M, ops: &[M::Op]) -> String {
    let parts: Vec<String> = ops.iter().map(|o| m.describe_op(o)).collect();
    format!("[{}]", parts.join(", "))
}

pub(crate) fn describe_objs<M: Multicategory>(m: &M, objs: &[M::Obj]) -> String {
    let parts: Vec<String> = objs.iter().map(|o| m.describe_obj(o)).collect();
    format!("({})", parts.join(", "))
}
