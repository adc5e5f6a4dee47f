//! Permutative categories: categories with a strictly associative and unital
//! monoidal sum `⊕`, unit object `e`, and a symmetry `ξ`.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

pub mod builtin;
pub mod coherence;
pub mod functor;
pub mod presentation;
pub mod transformation;
pub mod validate;

pub(crate) mod homs;

pub use builtin::{
    builtin_permcat, discrete_commutative_monoid, group_enriched, sign_category, BuiltinPermcat,
};
pub use coherence::{coherence_morphism, coherence_morphism_with, Decomposition};
pub use functor::{
    compose_functors, validate_functor, validate_smfunctor, ComposedFunctor, Functor,
    IdentityFunctor, TableFunctor,
};
pub use presentation::{CObj, MorDecl, MorId, PermCatBuilder, PermCatPresentation};
pub use transformation::{
    validate_monoidal_nat, validate_natural, vcomp_monoidal, MonoidalNat, NaturalTransformation,
};
pub use validate::validate_permcat;

/// Object type of a permutative category.
pub type PObj<C> = <C as PermutativeCategory>::Obj;
/// Morphism type of a permutative category.
pub type PMor<C> = <C as PermutativeCategory>::Mor;

pub trait PermutativeCategory: PartialEq + Sync {
    type Obj: Clone + Eq + Ord + Hash + Debug + Send + Sync;
    type Mor: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    /// Objects to enumerate, in a fixed order. Finite categories list all of
    /// them; free categories list those within their profile bound.
    fn objects(&self) -> Vec<Self::Obj>;

    /// Whether `x` lies within the enumerated part of the category.
    fn enumerates(&self, x: &Self::Obj) -> bool {
        let _ = x;
        true
    }

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Vec<Self::Mor>>;

    fn source(&self, m: &Self::Mor) -> Self::Obj;

    fn target(&self, m: &Self::Mor) -> Self::Obj;

    fn identity(&self, x: &Self::Obj) -> Self::Mor;

    /// `second ∘ first`.
    fn compose(&self, second: &Self::Mor, first: &Self::Mor) -> Result<Self::Mor>;

    fn sum_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;

    fn unit_obj(&self) -> Self::Obj;

    fn sum_mor(&self, a: &Self::Mor, b: &Self::Mor) -> Result<Self::Mor>;

    /// `ξ_{x,y}: x ⊕ y → y ⊕ x`.
    fn symmetry(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;

    fn describe_obj(&self, x: &Self::Obj) -> String {
        format!("{x:?}")
    }

    fn describe_mor(&self, m: &Self::Mor) -> String {
        format!("{m:?}")
    }
}

impl<T: PermutativeCategory> PermutativeCategory for &T {
    type Obj = T::Obj;
    type Mor = T::Mor;

    fn objects(&self) -> Vec<Self::Obj> {
        (**self).objects()
    }
    fn enumerates(&self, x: &Self::Obj) -> bool {
        (**self).enumerates(x)
    }
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Vec<Self::Mor>> {
        (**self).hom(x, y)
    }
    fn source(&self, m: &Self::Mor) -> Self::Obj {
        (**self).source(m)
    }
    fn target(&self, m: &Self::Mor) -> Self::Obj {
        (**self).target(m)
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        (**self).identity(x)
    }
    fn compose(&self, second: &Self::Mor, first: &Self::Mor) -> Result<Self::Mor> {
        (**self).compose(second, first)
    }
    fn sum_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj {
        (**self).sum_obj(x, y)
    }
    fn unit_obj(&self) -> Self::Obj {
        (**self).unit_obj()
    }
    fn sum_mor(&self, a: &Self::Mor, b: &Self::Mor) -> Result<Self::Mor> {
        (**self).sum_mor(a, b)
    }
    fn symmetry(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor {
        (**self).symmetry(x, y)
    }
    fn describe_obj(&self, x: &Self::Obj) -> String {
        (**self).describe_obj(x)
    }
    fn describe_mor(&self, m: &Self::Mor) -> String {
        (**self).describe_mor(m)
    }
}

/// `x_1 ⊕ ⋯ ⊕ x_n`, with the empty sum `e`.
pub fn sum_objects<C: PermutativeCategory>(c: &C, xs: &[C::Obj]) -> C::Obj {
    let mut acc = c.unit_obj();
    for x in xs {
        acc = c.sum_obj(&acc, x);
    }
    acc
}

/// `a_1 ⊕ ⋯ ⊕ a_n`, with the empty sum `1_e`.
pub fn sum_morphisms<C: PermutativeCategory>(c: &C, ms: &[C::Mor]) -> Result<C::Mor> {
    match ms.split_first() {
        None => Ok(c.identity(&c.unit_obj())),
        Some((first, rest)) => {
            let mut acc = first.clone();
            for m in rest {
                acc = c.sum_mor(&acc, m)?;
            }
            Ok(acc)
        }
    }
}
