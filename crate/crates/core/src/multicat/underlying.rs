//! The underlying category of a multicategory: unary operations only.

use std::collections::BTreeMap;

use crate::error::Result;

use super::Multicategory;

/// Objects of `M`, morphisms `a → b` the unary operations `M⟨b; a⟩`,
/// identities the colored units and composition `γ`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnderlyingCategory<M> {
    base: M,
}

pub fn underlying_category<M: Multicategory>(base: M) -> UnderlyingCategory<M> {
    UnderlyingCategory { base }
}

impl<M: Multicategory> UnderlyingCategory<M> {
    pub fn base(&self) -> &M {
        &self.base
    }

    pub fn objects(&self) -> Vec<M::Obj> {
        self.base.objects()
    }

    pub fn hom(&self, a: &M::Obj, b: &M::Obj) -> Result<Vec<M::Op>> {
        self.base.ops(b, std::slice::from_ref(a))
    }

    pub fn identity(&self, a: &M::Obj) -> M::Op {
        self.base.unit(a)
    }

    /// `g ∘ f = γ(g; f)`.
    pub fn compose(&self, g: &M::Op, f: &M::Op) -> Result<M::Op> {
        self.base.gamma(g, std::slice::from_ref(f))
    }

    /// `|hom(a, b)|` for every ordered pair of objects.
    pub fn hom_sizes(&self) -> Result<BTreeMap<(M::Obj, M::Obj), usize>> {
        let objects = self.objects();
        let mut out = BTreeMap::new();
        for a in &objects {
            for b in &objects {
                out.insert((a.clone(), b.clone()), self.hom(a, b)?.len());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multicat::builtin::{initial_operad, terminal_multicategory};

    #[test]
    fn initial_and_terminal() {
        for m in [initial_operad(), terminal_multicategory(3)] {
            let u = underlying_category(&m);
            let sizes = u.hom_sizes().unwrap();
            assert_eq!(sizes.len(), 1);
            assert_eq!(sizes.values().copied().collect::<Vec<_>>(), vec![1]);
            let c = u.objects()[0];
            let id = u.identity(&c);
            assert_eq!(u.compose(&id, &id).unwrap(), id);
        }
    }
}
