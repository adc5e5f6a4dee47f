//! The free permutative category `F(M)` on a multicategory `M`.
//!
//! Objects are profiles of `M`-objects. A morphism `⟨x⟩ → ⟨y⟩` is an index
//! map `f: r → s` together with operations `φ_j ∈ M⟨y_j; ⟨x⟩_{f⁻¹(j)}⟩`.
//! [`FreeView`] exposes `F(M)` through [`PermutativeCategory`], enumerating
//! objects up to a profile-length bound.

use std::fmt;

use crate::combinatorics::{disjoint_sum_maps, profiles, sigma_from_fibers, FinSetMap};
use crate::error::{Error, Result};
use crate::multicat::functor::advance;
use crate::multicat::{Multicategory, Multifunctor, MultinatTransformation};
use crate::permcat::{Functor, MonoidalNat, PermutativeCategory};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeMorphism<O, P> {
    index_map: FinSetMap,
    ops: Vec<P>,
    source: Vec<O>,
    target: Vec<O>,
}

impl<O, P> FreeMorphism<O, P> {
    pub fn index_map(&self) -> &FinSetMap {
        &self.index_map
    }

    pub fn ops(&self) -> &[P] {
        &self.ops
    }

    pub fn source(&self) -> &[O] {
        &self.source
    }

    pub fn target(&self) -> &[O] {
        &self.target
    }
}

impl<O: fmt::Debug, P: fmt::Debug> fmt::Debug for FreeMorphism<O, P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.index_map, self.ops)
    }
}

pub type FreeMor<M> = FreeMorphism<<M as Multicategory>::Obj, <M as Multicategory>::Op>;

/// Checks the signature of every `φ_j` and assembles a morphism.
pub fn free_morphism<M: Multicategory>(
    m: &M,
    source: Vec<M::Obj>,
    index_map: FinSetMap,
    ops: Vec<M::Op>,
) -> Result<FreeMor<M>> {
    if index_map.dom_size() != source.len() || index_map.cod_size() != ops.len() {
        return Err(Error::SizeMismatch(format!(
            "index map {index_map:?} does not match {} inputs and {} operations",
            source.len(),
            ops.len()
        )));
    }
    for (j, fiber) in index_map.fibers0().iter().enumerate() {
        let expected: Vec<M::Obj> = fiber.iter().map(|&i| source[i].clone()).collect();
        if m.inputs(&ops[j]) != expected {
            return Err(Error::SignatureMismatch(format!(
                "operation {} at position {} does not take the inputs over its fiber",
                m.describe_op(&ops[j]),
                j + 1
            )));
        }
    }
    let target = ops.iter().map(|op| m.output(op)).collect();
    Ok(FreeMorphism {
        index_map,
        ops,
        source,
        target,
    })
}

/// `F(M)(⟨x⟩, ⟨y⟩)`, ordered lexicographically by index map values and then
/// by the operation chosen at each position.
pub fn free_hom<M: Multicategory>(m: &M, xs: &[M::Obj], ys: &[M::Obj]) -> Result<Vec<FreeMor<M>>> {
    let mut out = Vec::new();
    for f in FinSetMap::all(xs.len(), ys.len()) {
        let mut choices = Vec::with_capacity(ys.len());
        for (j, fiber) in f.fibers0().iter().enumerate() {
            let inputs: Vec<M::Obj> = fiber.iter().map(|&i| xs[i].clone()).collect();
            choices.push(m.ops(&ys[j], &inputs)?);
        }
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        let radix: Vec<usize> = choices.iter().map(Vec::len).collect();
        let mut pick = vec![0usize; ys.len()];
        loop {
            out.push(FreeMorphism {
                index_map: f.clone(),
                ops: pick.iter().zip(&choices).map(|(&k, c)| c[k].clone()).collect(),
                source: xs.to_vec(),
                target: ys.to_vec(),
            });
            if !advance(&mut pick, |i| radix[i]) {
                break;
            }
        }
    }
    Ok(out)
}

/// `(1_r, ⟨1_{x_i}⟩)`.
pub fn free_identity<M: Multicategory>(m: &M, xs: &[M::Obj]) -> FreeMor<M> {
    FreeMorphism {
        index_map: FinSetMap::identity(xs.len()),
        ops: xs.iter().map(|x| m.unit(x)).collect(),
        source: xs.to_vec(),
        target: xs.to_vec(),
    }
}

/// `(g, ⟨ψ⟩) ∘ (f, ⟨φ⟩) = (gf, ⟨θ_k · σ^k_{g,f}⟩)` with
/// `θ_k = γ(ψ_k; ⟨φ_j⟩_{j ∈ g⁻¹(k)})`.
pub fn free_compose<M: Multicategory>(
    m: &M,
    second: &FreeMor<M>,
    first: &FreeMor<M>,
) -> Result<FreeMor<M>> {
    if first.target != second.source {
        return Err(Error::NotComposable(format!(
            "target {:?} of the first morphism is not the source {:?} of the second",
            first.target, second.source
        )));
    }
    let f_fibers = first.index_map.fibers0();
    let g_fibers = second.index_map.fibers0();
    let mut ops = Vec::with_capacity(g_fibers.len());
    for (k, g_fiber) in g_fibers.iter().enumerate() {
        let inner: Vec<M::Op> = g_fiber.iter().map(|&j| first.ops[j].clone()).collect();
        let theta = m.gamma(&second.ops[k], &inner)?;
        ops.push(m.act(&theta, &sigma_from_fibers(&f_fibers, g_fiber))?);
    }
    let images = first
        .index_map
        .images0()
        .iter()
        .map(|&j| second.index_map.images0()[j])
        .collect();
    Ok(FreeMorphism {
        index_map: FinSetMap::from_zero_based(second.index_map.cod_size(), images)?,
        ops,
        source: first.source.clone(),
        target: second.target.clone(),
    })
}

/// `(f ⊕ f′, ⟨φ⟩ ⊕ ⟨φ′⟩)`.
pub fn free_sum<O: Clone, P: Clone>(a: &FreeMorphism<O, P>, b: &FreeMorphism<O, P>) -> FreeMorphism<O, P> {
    let cat = |u: &[O], v: &[O]| u.iter().chain(v).cloned().collect::<Vec<O>>();
    FreeMorphism {
        index_map: disjoint_sum_maps(&a.index_map, &b.index_map),
        ops: a.ops.iter().chain(&b.ops).cloned().collect(),
        source: cat(&a.source, &b.source),
        target: cat(&a.target, &b.target),
    }
}

/// `ξ_{⟨x⟩,⟨x′⟩}: ⟨x⟩⊕⟨x′⟩ → ⟨x′⟩⊕⟨x⟩`, moving each entry to its position in
/// the swapped profile, with unit operations.
pub fn free_symmetry<M: Multicategory>(m: &M, xs: &[M::Obj], xs2: &[M::Obj]) -> FreeMor<M> {
    let (r, r2) = (xs.len(), xs2.len());
    let images: Vec<usize> = (r2..r2 + r).chain(0..r2).collect();
    let target: Vec<M::Obj> = xs2.iter().chain(xs).cloned().collect();
    FreeMorphism {
        index_map: FinSetMap::from_zero_based(r + r2, images).expect("a bijection"),
        ops: target.iter().map(|y| m.unit(y)).collect(),
        source: xs.iter().chain(xs2).cloned().collect(),
        target,
    }
}

/// `F(M)` with objects enumerated up to profile length `profile_bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeView<M> {
    base: M,
    profile_bound: usize,
}

pub fn free_view<M: Multicategory>(base: M, profile_bound: usize) -> FreeView<M> {
    FreeView { base, profile_bound }
}

impl<M: Multicategory> FreeView<M> {
    pub fn base(&self) -> &M {
        &self.base
    }

    pub fn profile_bound(&self) -> usize {
        self.profile_bound
    }
}

impl<M: Multicategory> PermutativeCategory for FreeView<M> {
    type Obj = Vec<M::Obj>;
    type Mor = FreeMor<M>;

    /// Profiles by length, then lexicographically.
    fn objects(&self) -> Vec<Vec<M::Obj>> {
        let objs = self.base.objects();
        (0..=self.profile_bound).flat_map(|k| profiles(&objs, k)).collect()
    }

    fn enumerates(&self, x: &Vec<M::Obj>) -> bool {
        x.len() <= self.profile_bound
    }

    fn hom(&self, x: &Vec<M::Obj>, y: &Vec<M::Obj>) -> Result<Vec<FreeMor<M>>> {
        free_hom(&self.base, x, y)
    }

    fn source(&self, m: &FreeMor<M>) -> Vec<M::Obj> {
        m.source.clone()
    }

    fn target(&self, m: &FreeMor<M>) -> Vec<M::Obj> {
        m.target.clone()
    }

    fn identity(&self, x: &Vec<M::Obj>) -> FreeMor<M> {
        free_identity(&self.base, x)
    }

    fn compose(&self, second: &FreeMor<M>, first: &FreeMor<M>) -> Result<FreeMor<M>> {
        free_compose(&self.base, second, first)
    }

    fn sum_obj(&self, x: &Vec<M::Obj>, y: &Vec<M::Obj>) -> Vec<M::Obj> {
        x.iter().chain(y).cloned().collect()
    }

    fn unit_obj(&self) -> Vec<M::Obj> {
        Vec::new()
    }

    fn sum_mor(&self, a: &FreeMor<M>, b: &FreeMor<M>) -> Result<FreeMor<M>> {
        Ok(free_sum(a, b))
    }

    fn symmetry(&self, x: &Vec<M::Obj>, y: &Vec<M::Obj>) -> FreeMor<M> {
        free_symmetry(&self.base, x, y)
    }

    fn describe_obj(&self, x: &Vec<M::Obj>) -> String {
        let parts: Vec<String> = x.iter().map(|c| self.base.describe_obj(c)).collect();
        format!("⟨{}⟩", parts.join(","))
    }

    fn describe_mor(&self, m: &FreeMor<M>) -> String {
        let ops: Vec<String> = m.ops.iter().map(|op| self.base.describe_op(op)).collect();
        format!("({:?}; {})", m.index_map.values(), ops.join(", "))
    }
}

/// `FH: F(M) → F(N)`, acting entrywise on profiles and operation sequences.
pub struct FreeFunctor<'a, H: Multifunctor> {
    h: &'a H,
    source: FreeView<&'a H::Source>,
    target: FreeView<&'a H::Target>,
}

impl<H: Multifunctor> Clone for FreeFunctor<'_, H> {
    fn clone(&self) -> Self {
        Self {
            h: self.h,
            source: self.source.clone(),
            target: self.target.clone(),
        }
    }
}

impl<H: Multifunctor> PartialEq for FreeFunctor<'_, H> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.h, other.h) && self.source == other.source && self.target == other.target
    }
}

impl<H: Multifunctor> fmt::Debug for FreeFunctor<'_, H> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeFunctor(L = {})", self.source.profile_bound)
    }
}

pub fn free_on_multifunctor<H: Multifunctor>(h: &H, profile_bound: usize) -> FreeFunctor<'_, H> {
    FreeFunctor {
        h,
        source: free_view(h.source(), profile_bound),
        target: free_view(h.target(), profile_bound),
    }
}

impl<'a, H: Multifunctor> Functor for FreeFunctor<'a, H> {
    type Source = FreeView<&'a H::Source>;
    type Target = FreeView<&'a H::Target>;

    fn source(&self) -> &Self::Source {
        &self.source
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn map_obj(&self, x: &Vec<<H::Source as Multicategory>::Obj>) -> Vec<<H::Target as Multicategory>::Obj> {
        x.iter().map(|c| self.h.map_obj(c)).collect()
    }

    fn map_mor(&self, m: &FreeMor<&'a H::Source>) -> Result<FreeMor<&'a H::Target>> {
        Ok(FreeMorphism {
            index_map: m.index_map.clone(),
            ops: m.ops.iter().map(|op| self.h.map_op(op)).collect::<Result<_>>()?,
            source: self.map_obj(&m.source),
            target: self.map_obj(&m.target),
        })
    }
}

/// `Fκ: FH → FH′` with `(Fκ)_{⟨x⟩} = (1_r, ⟨κ_{x_i}⟩)`.
pub fn free_on_multinat<'a, F, G>(
    kappa: &'a MultinatTransformation<F, G>,
    profile_bound: usize,
) -> Result<MonoidalNat<FreeFunctor<'a, F>, FreeFunctor<'a, G>>>
where
    F: Multifunctor,
    G: Multifunctor<Source = F::Source, Target = F::Target>,
{
    let from = free_on_multifunctor(kappa.from_functor(), profile_bound);
    let to = free_on_multifunctor(kappa.to_functor(), profile_bound);
    let (fh, gh) = (kappa.from_functor(), kappa.to_functor());
    MonoidalNat::from_fn(from, to, |xs| {
        let ops = xs
            .iter()
            .map(|c| {
                kappa
                    .component(c)
                    .cloned()
                    .ok_or_else(|| Error::Structural(format!("no component at {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeMorphism {
            index_map: FinSetMap::identity(xs.len()),
            ops,
            source: xs.iter().map(|c| fh.map_obj(c)).collect(),
            target: xs.iter().map(|c| gh.map_obj(c)).collect(),
        })
    })
}
