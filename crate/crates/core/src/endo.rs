//! The endomorphism multicategory `End(C)` of a permutative category, with
//! `End(C)⟨y; x_1, …, x_n⟩ = C(x_1 ⊕ ⋯ ⊕ x_n, y)`.
//!
//! The symmetric action precomposes with the coherence morphism that undoes
//! the permutation of summands, and `γ(ψ; φ_1, …, φ_n) = ψ ∘ (φ_1 ⊕ ⋯ ⊕ φ_n)`.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::multicat::{Multicategory, Multifunctor, MultinatTransformation};
use crate::permcat::{
    coherence_morphism, sum_objects, Functor, NaturalTransformation,
    PermutativeCategory,
};

/// Input profile of an [`EndOp`], stored inline for small arities.
pub type Profile<O> = SmallVec<[O; 4]>;

/// An operation of `End(C)`: a morphism `⊕ inputs → output` of `C`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndOp<O, M> {
    pub inputs: Profile<O>,
    pub output: O,
    pub mor: M,
}

impl<O: fmt::Debug, M: fmt::Debug> fmt::Debug for EndOp<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.mor, self.inputs)
    }
}

pub type EndOpOf<C> = EndOp<<C as PermutativeCategory>::Obj, <C as PermutativeCategory>::Mor>;

#[derive(Debug, Clone, PartialEq)]
pub struct EndView<C> {
    base: C,
}

pub fn end_of_permcat<C: PermutativeCategory>(base: C) -> EndView<C> {
    EndView { base }
}

impl<C: PermutativeCategory> EndView<C> {
    pub fn base(&self) -> &C {
        &self.base
    }
}

impl<C: PermutativeCategory> Multicategory for EndView<C> {
    type Obj = C::Obj;
    type Op = EndOpOf<C>;

    fn objects(&self) -> Vec<C::Obj> {
        self.base.objects()
    }

    fn ops(&self, output: &C::Obj, inputs: &[C::Obj]) -> Result<Vec<EndOpOf<C>>> {
        let source = sum_objects(&self.base, inputs);
        Ok(self
            .base
            .hom(&source, output)?
            .into_iter()
            .map(|mor| EndOp {
                inputs: inputs.iter().cloned().collect(),
                output: output.clone(),
                mor,
            })
            .collect())
    }

    fn output(&self, op: &EndOpOf<C>) -> C::Obj {
        op.output.clone()
    }

    fn inputs(&self, op: &EndOpOf<C>) -> Vec<C::Obj> {
        op.inputs.to_vec()
    }

    fn arity(&self, op: &EndOpOf<C>) -> usize {
        op.inputs.len()
    }

    /// `h·σ = h ∘ ξ`, where `ξ: ⊕(⟨x⟩·σ) → ⊕⟨x⟩` is the coherence morphism for `σ⁻¹`.
    fn act(&self, op: &EndOpOf<C>, sigma: &Permutation) -> Result<EndOpOf<C>> {
        let permuted = sigma.act(&op.inputs)?;
        let xi = coherence_morphism(&self.base, &permuted, &sigma.inverse())?;
        Ok(EndOp {
            mor: self.base.compose(&op.mor, &xi)?,
            inputs: permuted.into_iter().collect(),
            output: op.output.clone(),
        })
    }

    fn unit(&self, c: &C::Obj) -> EndOpOf<C> {
        EndOp {
            inputs: Profile::from_iter([c.clone()]),
            output: c.clone(),
            mor: self.base.identity(c),
        }
    }

    fn gamma(&self, outer: &EndOpOf<C>, inner: &[EndOpOf<C>]) -> Result<EndOpOf<C>> {
        if outer.inputs.len() != inner.len() {
            return Err(Error::SignatureMismatch(format!(
                "{} takes {} inputs, got {}",
                self.describe_op(outer),
                outer.inputs.len(),
                inner.len()
            )));
        }
        for (j, (x, phi)) in outer.inputs.iter().zip(inner).enumerate() {
            if &phi.output != x {
                return Err(Error::SignatureMismatch(format!(
                    "input {} of {} is not the output of {}",
                    j + 1,
                    self.describe_op(outer),
                    self.describe_op(phi)
                )));
            }
        }
        let sum = match inner.split_first() {
            None => self.base.identity(&self.base.unit_obj()),
            Some((first, rest)) => {
                let mut acc = first.mor.clone();
                for phi in rest {
                    acc = self.base.sum_mor(&acc, &phi.mor)?;
                }
                acc
            }
        };
        let mut inputs = Profile::with_capacity(inner.iter().map(|phi| phi.inputs.len()).sum());
        for phi in inner {
            for x in phi.inputs.iter() {
                inputs.push(x.clone());
            }
        }
        Ok(EndOp {
            inputs,
            output: outer.output.clone(),
            mor: self.base.compose(&outer.mor, &sum)?,
        })
    }

    fn describe_obj(&self, c: &C::Obj) -> String {
        self.base.describe_obj(c)
    }

    fn describe_op(&self, op: &EndOpOf<C>) -> String {
        let ins: Vec<String> = op.inputs.iter().map(|x| self.base.describe_obj(x)).collect();
        format!("{}[{}]", self.base.describe_mor(&op.mor), ins.join(","))
    }
}

/// `End(P)`: applies `P` to objects and to the underlying morphisms.
pub struct EndFunctor<'a, P: Functor> {
    p: &'a P,
    source: EndView<&'a P::Source>,
    target: EndView<&'a P::Target>,
}

impl<P: Functor> Clone for EndFunctor<'_, P> {
    fn clone(&self) -> Self {
        Self {
            p: self.p,
            source: self.source.clone(),
            target: self.target.clone(),
        }
    }
}

impl<P: Functor> PartialEq for EndFunctor<'_, P> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.p, other.p)
    }
}

impl<P: Functor> fmt::Debug for EndFunctor<'_, P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("EndFunctor")
    }
}

pub fn end_on_functor<P: Functor>(p: &P) -> EndFunctor<'_, P> {
    EndFunctor {
        p,
        source: end_of_permcat(p.source()),
        target: end_of_permcat(p.target()),
    }
}

impl<'a, P: Functor> Multifunctor for EndFunctor<'a, P> {
    type Source = EndView<&'a P::Source>;
    type Target = EndView<&'a P::Target>;

    fn source(&self) -> &Self::Source {
        &self.source
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn map_obj(&self, c: &<P::Source as PermutativeCategory>::Obj) -> <P::Target as PermutativeCategory>::Obj {
        self.p.map_obj(c)
    }

    fn map_op(&self, op: &EndOpOf<P::Source>) -> Result<EndOpOf<P::Target>> {
        Ok(EndOp {
            inputs: op.inputs.iter().map(|x| self.p.map_obj(x)).collect(),
            output: self.p.map_obj(&op.output),
            mor: self.p.map_mor(&op.mor)?,
        })
    }
}

/// `End(α)`, with component at `c` the unary operation `α_c`.
pub fn end_on_nat<A: NaturalTransformation>(
    alpha: &A,
) -> Result<MultinatTransformation<EndFunctor<'_, A::From>, EndFunctor<'_, A::To>>> {
    let from = end_on_functor(alpha.from_functor());
    let to = end_on_functor(alpha.to_functor());
    let (f, g) = (alpha.from_functor(), alpha.to_functor());
    let components = f
        .source()
        .objects()
        .into_iter()
        .map(|c| {
            let op = EndOp {
                inputs: Profile::from_iter([f.map_obj(&c)]),
                output: g.map_obj(&c),
                mor: alpha.component(&c)?,
            };
            Ok((c, op))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    MultinatTransformation::new(from, to, components)
}
