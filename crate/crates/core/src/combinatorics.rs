//! Finite ordinals, index maps, and permutations.
//!
//! Every public interface speaks 1-based indices, so the ordinal of size `r`
//! is `{1, ..., r}`. Storage is 0-based; accessors ending in `0` expose the
//! raw 0-based form for hot loops inside the crate.
//!
//! Permutations act on the **right** and there is no left-action interface:
//! for a profile `p` and a permutation `s`, `(p·s)[k] = p[s(k)]`. With that
//! convention `(p·s)·t = p·(st)`, where `st` is the function `k ↦ s(t(k))`
//! (see [`Permutation::then`]).

use std::fmt;

use crate::error::{Error, Result};

/// A finite ordered sequence; the input shape of an operation, or an object
/// of a free permutative category.
pub type Profile<T> = Vec<T>;

/// A function `{1..r} → {1..s}` between finite ordinals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSetMap {
    cod: usize,
    images: Vec<usize>,
}

impl FinSetMap {
    /// Builds a map from its 1-based value sequence.
    pub fn new(cod_size: usize, values: &[usize]) -> Result<Self> {
        let images = values
            .iter()
            .map(|&v| {
                if v == 0 || v > cod_size {
                    Err(Error::OutOfRange {
                        index: v,
                        bound: cod_size,
                    })
                } else {
                    Ok(v - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cod: cod_size,
            images,
        })
    }

    /// Builds a map from 0-based images.
    pub fn from_zero_based(cod_size: usize, images: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&v| v >= cod_size) {
            return Err(Error::OutOfRange {
                index: bad + 1,
                bound: cod_size,
            });
        }
        Ok(Self {
            cod: cod_size,
            images,
        })
    }

    pub fn identity(r: usize) -> Self {
        Self {
            cod: r,
            images: (0..r).collect(),
        }
    }

    /// The unique map `ι_r: {1..r} → {1}`.
    pub fn collapse(r: usize) -> Self {
        Self {
            cod: 1,
            images: vec![0; r],
        }
    }

    pub fn dom_size(&self) -> usize {
        self.images.len()
    }

    pub fn cod_size(&self) -> usize {
        self.cod
    }

    /// `f(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.images.len() {
            return Err(Error::OutOfRange {
                index: i,
                bound: self.images.len(),
            });
        }
        Ok(self.images[i - 1] + 1)
    }

    pub fn values(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.images.len() && self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Ascending 1-based list of `i` with `f(i) = j`.
    pub fn preimage(&self, j: usize) -> Result<Vec<usize>> {
        if j == 0 || j > self.cod {
            return Err(Error::OutOfRange {
                index: j,
                bound: self.cod,
            });
        }
        Ok(self.preimage0(j - 1).into_iter().map(|i| i + 1).collect())
    }

    /// 0-based preimage of the 0-based codomain element `j`.
    pub fn preimage0(&self, j: usize) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter_map(|(i, &v)| (v == j).then_some(i))
            .collect()
    }

    /// All 0-based preimages, indexed by codomain element.
    pub fn fibers0(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.cod];
        for (i, &v) in self.images.iter().enumerate() {
            fibers[v].push(i);
        }
        fibers
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.cod];
        for &v in &self.images {
            sizes[v] += 1;
        }
        sizes
    }

    /// Enumerates every map `{1..r} → {1..s}` in lexicographic order of value
    /// sequences.
    pub fn all(r: usize, s: usize) -> AllMaps {
        AllMaps {
            cod: s,
            next: if r > 0 && s == 0 {
                None
            } else {
                Some(vec![0; r])
            },
        }
    }
}

impl fmt::Debug for FinSetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}→{}", self.values(), self.dom_size(), self.cod)
    }
}

/// Iterator returned by [`FinSetMap::all`].
pub struct AllMaps {
    cod: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllMaps {
    type Item = FinSetMap;

    fn next(&mut self) -> Option<FinSetMap> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        let mut advanced = false;
        while pos > 0 {
            pos -= 1;
            if succ[pos] + 1 < self.cod {
                succ[pos] += 1;
                advanced = true;
                break;
            }
            succ[pos] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(FinSetMap {
            cod: self.cod,
            images: current,
        })
    }
}

/// The identity on `{1..r}`.
pub fn identity_map(r: usize) -> FinSetMap {
    FinSetMap::identity(r)
}

/// `g ∘ f`, defined when `f.cod_size() == g.dom_size()`.
pub fn compose_maps(g: &FinSetMap, f: &FinSetMap) -> Result<FinSetMap> {
    if f.cod != g.images.len() {
        return Err(Error::SizeMismatch(format!(
            "cannot compose {g:?} after {f:?}: codomain {} vs domain {}",
            f.cod,
            g.images.len()
        )));
    }
    Ok(FinSetMap {
        cod: g.cod,
        images: f.images.iter().map(|&i| g.images[i]).collect(),
    })
}

/// `f ⊕ f′`: the disjoint union with both sides placed in order.
pub fn disjoint_sum_maps(f: &FinSetMap, f2: &FinSetMap) -> FinSetMap {
    let mut images = f.images.clone();
    images.extend(f2.images.iter().map(|&v| v + f.cod));
    FinSetMap {
        cod: f.cod + f2.cod,
        images,
    }
}

/// The ascending 1-based preimage `f⁻¹(j)`.
pub fn preimage_ordered(f: &FinSetMap, j: usize) -> Result<Vec<usize>> {
    f.preimage(j)
}

/// A bijection of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(FinSetMap);

impl Permutation {
    pub fn new(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let map = FinSetMap::new(n, values).map_err(|_| Error::NotAPermutation(values.to_vec()))?;
        Self::from_map(map)
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let map = FinSetMap::from_zero_based(n, images.clone())
            .map_err(|_| Error::NotAPermutation(images.iter().map(|v| v + 1).collect()))?;
        Self::from_map(map)
    }

    /// Accepts a map only if it is a bijection onto its own domain.
    pub fn from_map(map: FinSetMap) -> Result<Self> {
        let n = map.dom_size();
        let mut seen = vec![false; n];
        let ok = map.cod == n
            && map.images.iter().all(|&v| {
                let fresh = !seen[v];
                seen[v] = true;
                fresh
            });
        if ok {
            Ok(Self(map))
        } else {
            Err(Error::NotAPermutation(map.values()))
        }
    }

    pub fn identity(n: usize) -> Self {
        Self(FinSetMap::identity(n))
    }

    pub fn len(&self) -> usize {
        self.0.dom_size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn apply(&self, k: usize) -> Result<usize> {
        self.0.apply(k)
    }

    pub fn values(&self) -> Vec<usize> {
        self.0.values()
    }

    pub fn images0(&self) -> &[usize] {
        self.0.images0()
    }

    pub fn as_map(&self) -> &FinSetMap {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (k, &v) in self.0.images.iter().enumerate() {
            inv[v] = k;
        }
        Self(FinSetMap {
            cod: inv.len(),
            images: inv,
        })
    }

    /// The product `self·rhs`: acting by it equals acting by `self`, then by
    /// `rhs`. As functions this is `k ↦ self(rhs(k))`.
    pub fn then(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.len() != rhs.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: rhs.len(),
            });
        }
        Ok(Self(compose_maps(&self.0, &rhs.0)?))
    }

    /// Right action on a profile: entry `k` of the result is `p[self(k)]`.
    pub fn act<T: Clone>(&self, profile: &[T]) -> Result<Vec<T>> {
        if profile.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: profile.len(),
            });
        }
        Ok(self.0.images.iter().map(|&i| profile[i].clone()).collect())
    }

    /// All permutations of `{1..n}` in lexicographic order of value sequences.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Self(FinSetMap {
                cod: n,
                images: current.clone(),
            }));
            if !next_lexicographic(&mut current) {
                break;
            }
        }
        out
    }

    /// Positions `p` (0-based, meaning "swap entries p and p+1") whose
    /// successive right actions realize `self`. Produced by bubble sort.
    pub fn bubble_sort_word(&self) -> Vec<usize> {
        let key = self.inverse();
        let mut cur: Vec<usize> = (0..self.len()).collect();
        let mut word = Vec::new();
        let n = cur.len();
        for pass in 0..n {
            let mut swapped = false;
            for p in 0..n.saturating_sub(1 + pass) {
                if key.0.images[cur[p]] > key.0.images[cur[p + 1]] {
                    cur.swap(p, p + 1);
                    word.push(p);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word
    }

    /// Same contract as [`Self::bubble_sort_word`], produced by insertion sort.
    pub fn insertion_sort_word(&self) -> Vec<usize> {
        let key = self.inverse();
        let mut cur: Vec<usize> = (0..self.len()).collect();
        let mut word = Vec::new();
        for i in 1..cur.len() {
            let mut p = i;
            while p > 0 && key.0.images[cur[p - 1]] > key.0.images[cur[p]] {
                cur.swap(p - 1, p);
                word.push(p - 1);
                p -= 1;
            }
        }
        word
    }

    /// Same contract as [`Self::bubble_sort_word`], built by selection with
    /// arbitrary transpositions, each expanded into adjacent ones. The word
    /// is usually not reduced.
    pub fn transposition_word(&self) -> Vec<usize> {
        let mut cur: Vec<usize> = (0..self.len()).collect();
        let mut word = Vec::new();
        for k in 0..cur.len() {
            let target = self.0.images[k];
            let q = cur.iter().position(|&v| v == target).expect("bijection");
            if q == k {
                continue;
            }
            // (k q) = s_k s_{k+1} .. s_{q-1} s_{q-2} .. s_k
            for p in k..q {
                word.push(p);
            }
            for p in (k..q - 1).rev() {
                word.push(p);
            }
            cur.swap(k, q);
        }
        word
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values())
    }
}

fn next_lexicographic(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Right action `p·σ` of a permutation on a profile.
pub fn right_action_profile<T: Clone>(p: &[T], sigma: &Permutation) -> Result<Vec<T>> {
    sigma.act(p)
}

/// The block permutation `σ⟨k_{σ(1)}, …, k_{σ(n)}⟩`.
///
/// `permuted_lengths` lists the block lengths in the permuted order, as in the
/// notation. Acting on `⟨c_1⟩⊕…⊕⟨c_n⟩` with `|⟨c_j⟩| = k_j`, the result yields
/// `⟨c_{σ(1)}⟩⊕…⊕⟨c_{σ(n)}⟩` and keeps the order within each block.
pub fn block_permutation(sigma: &Permutation, permuted_lengths: &[usize]) -> Result<Permutation> {
    let n = sigma.len();
    if permuted_lengths.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: permuted_lengths.len(),
        });
    }
    let mut lengths = vec![0; n];
    for (m, &b) in sigma.images0().iter().enumerate() {
        lengths[b] = permuted_lengths[m];
    }
    let offsets = prefix_offsets(&lengths);
    let mut images = Vec::with_capacity(offsets[n]);
    for &b in sigma.images0() {
        images.extend(offsets[b]..offsets[b] + lengths[b]);
    }
    Ok(Permutation(FinSetMap {
        cod: images.len(),
        images,
    }))
}

/// The block sum `τ_1 × ⋯ × τ_n`, acting as `τ_j` inside the `j`-th block.
pub fn block_sum(taus: &[Permutation]) -> Permutation {
    let mut images = Vec::new();
    for tau in taus {
        let off = images.len();
        images.extend(tau.images0().iter().map(|&v| v + off));
    }
    Permutation(FinSetMap {
        cod: images.len(),
        images,
    })
}

/// `τ_{r,r′}`: acting on `⟨x⟩⊕⟨x′⟩` (lengths `r`, `r′`) it yields `⟨x′⟩⊕⟨x⟩`.
pub fn block_transposition(r: usize, r2: usize) -> Permutation {
    let images: Vec<usize> = (r..r + r2).chain(0..r).collect();
    Permutation(FinSetMap {
        cod: images.len(),
        images,
    })
}

/// `π_f`: its right action on `⟨x⟩` is the concatenation `⊕_j ⟨x⟩_{f⁻¹(j)}`,
/// i.e. the stable sort of `⟨x⟩` by `f`.
pub fn perm_of_indexmap(f: &FinSetMap) -> Permutation {
    let images: Vec<usize> = f.fibers0().into_iter().flatten().collect();
    Permutation(FinSetMap {
        cod: images.len(),
        images,
    })
}

/// `σ^k_{g,f}`: the unique permutation with
/// `[⊕_{j∈g⁻¹(k)} ⟨x⟩_{f⁻¹(j)}]·σ = ⟨x⟩_{(gf)⁻¹(k)}`. `k` is 1-based.
pub fn sigma_kgf(f: &FinSetMap, g: &FinSetMap, k: usize) -> Result<Permutation> {
    if f.cod_size() != g.dom_size() {
        return Err(Error::SizeMismatch(format!(
            "σ^k_(g,f) needs cod(f) = dom(g), got {} and {}",
            f.cod_size(),
            g.dom_size()
        )));
    }
    if k == 0 || k > g.cod_size() {
        return Err(Error::OutOfRange {
            index: k,
            bound: g.cod_size(),
        });
    }
    let f_fibers = f.fibers0();
    Ok(sigma_from_fibers(&f_fibers, &g.preimage0(k - 1)))
}

/// Core of [`sigma_kgf`] given the fibers of `f` and the 0-based `g⁻¹(k)`.
pub(crate) fn sigma_from_fibers(f_fibers: &[Vec<usize>], g_fiber: &[usize]) -> Permutation {
    let concat: Vec<usize> = g_fiber
        .iter()
        .flat_map(|&j| f_fibers[j].iter().copied())
        .collect();
    let mut order: Vec<usize> = (0..concat.len()).collect();
    order.sort_by_key(|&p| concat[p]);
    Permutation(FinSetMap {
        cod: order.len(),
        images: order,
    })
}

/// All profiles of length `k` over `objects`, lexicographic in the given order.
pub fn profiles<T: Clone>(objects: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(k)];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * objects.len());
        for prefix in &out {
            for o in objects {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

pub(crate) fn prefix_offsets(lengths: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(lengths.len() + 1);
    let mut acc = 0;
    offsets.push(0);
    for &l in lengths {
        acc += l;
        offsets.push(acc);
    }
    offsets
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(cod: usize, values: &[usize]) -> FinSetMap {
        FinSetMap::new(cod, values).unwrap()
    }

    fn perm(values: &[usize]) -> Permutation {
        Permutation::new(values).unwrap()
    }

    #[test]
    fn identity_maps() {
        assert_eq!(identity_map(0).dom_size(), 0);
        assert_eq!(identity_map(3).values(), vec![1, 2, 3]);
        assert_eq!(identity_map(1).values(), vec![1]);
    }

    #[test]
    fn composition_examples() {
        let g = map(1, &[1, 1]);
        let f = map(2, &[2, 1]);
        assert_eq!(compose_maps(&g, &f).unwrap().values(), vec![1, 1]);

        let f = map(3, &[3, 1]);
        assert_eq!(compose_maps(&identity_map(3), &f).unwrap().values(), vec![3, 1]);

        let g = map(2, &[2, 1]);
        let f = map(2, &[2]);
        assert_eq!(compose_maps(&g, &f).unwrap().values(), vec![1]);
    }

    #[test]
    fn composition_rejects_size_mismatch() {
        let g = map(1, &[1, 1, 1]);
        let f = map(2, &[1]);
        assert!(matches!(compose_maps(&g, &f), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn out_of_range_values_rejected() {
        assert!(FinSetMap::new(2, &[3]).is_err());
        assert!(FinSetMap::new(2, &[0]).is_err());
        assert!(Permutation::new(&[1, 1]).is_err());
    }

    #[test]
    fn disjoint_sums() {
        let s = disjoint_sum_maps(&map(1, &[1]), &map(1, &[1]));
        assert_eq!((s.values(), s.cod_size()), (vec![1, 2], 2));
        let s = disjoint_sum_maps(&map(2, &[2, 1]), &map(1, &[1, 1]));
        assert_eq!((s.values(), s.cod_size()), (vec![2, 1, 3, 3], 3));
        let s = disjoint_sum_maps(&identity_map(0), &map(1, &[1]));
        assert_eq!(s, map(1, &[1]));
    }

    #[test]
    fn preimages() {
        let f = map(2, &[2, 1, 2]);
        assert_eq!(preimage_ordered(&f, 2).unwrap(), vec![1, 3]);
        assert_eq!(preimage_ordered(&f, 1).unwrap(), vec![2]);
        assert_eq!(preimage_ordered(&FinSetMap::collapse(3), 1).unwrap(), vec![1, 2, 3]);
        assert!(preimage_ordered(&f, 3).is_err());
        assert!(preimage_ordered(&f, 0).is_err());
        // empty preimages are legal
        assert_eq!(preimage_ordered(&map(3, &[1]), 2).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn right_action_examples() {
        assert_eq!(right_action_profile(&['a', 'b'], &perm(&[2, 1])).unwrap(), vec!['b', 'a']);
        assert_eq!(right_action_profile(&['a', 'b'], &perm(&[1, 2])).unwrap(), vec!['a', 'b']);
        assert_eq!(
            right_action_profile(&['a', 'b', 'c'], &perm(&[3, 1, 2])).unwrap(),
            vec!['c', 'a', 'b']
        );
        assert!(matches!(
            right_action_profile(&['a'], &perm(&[2, 1])),
            Err(Error::LengthMismatch { .. })
        ));
        let empty: [char; 0] = [];
        assert!(right_action_profile(&empty, &Permutation::identity(0)).unwrap().is_empty());
    }

    #[test]
    fn block_permutation_examples() {
        let id = block_permutation(&Permutation::identity(3), &[2, 0, 1]).unwrap();
        assert!(id.is_identity());
        // σ = (2,1), k₁ = 2, k₂ = 1; permuted lengths are (k₂, k₁)
        let bp = block_permutation(&perm(&[2, 1]), &[1, 2]).unwrap();
        assert_eq!(bp.act(&['a', 'b', 'c']).unwrap(), vec!['c', 'a', 'b']);
        // k₁ = 0, k₂ = 2
        let bp = block_permutation(&perm(&[2, 1]), &[2, 0]).unwrap();
        assert!(bp.is_identity());
    }

    #[test]
    fn block_sum_examples() {
        assert!(block_sum(&[Permutation::identity(2), Permutation::identity(1)]).is_identity());
        assert_eq!(block_sum(&[perm(&[2, 1]), perm(&[1])]).values(), vec![2, 1, 3]);
        assert_eq!(block_sum(&[perm(&[3, 1, 2])]), perm(&[3, 1, 2]));
        assert!(block_sum(&[]).is_empty());
    }

    #[test]
    fn block_transposition_examples() {
        assert!(block_transposition(0, 3).is_identity());
        assert!(block_transposition(2, 0).is_identity());
        assert_eq!(block_transposition(1, 1).values(), vec![2, 1]);
        let t = block_transposition(2, 1);
        assert_eq!(t.act(&['a', 'b', 'c']).unwrap(), vec!['c', 'a', 'b']);
    }

    #[test]
    fn block_transposition_involution() {
        for r in 0..5 {
            for r2 in 0..5 {
                let there = block_transposition(r, r2);
                let back = block_transposition(r2, r);
                assert!(there.then(&back).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn perm_of_indexmap_examples() {
        assert!(perm_of_indexmap(&FinSetMap::collapse(4)).is_identity());
        assert!(perm_of_indexmap(&identity_map(3)).is_identity());
        let pi = perm_of_indexmap(&map(2, &[2, 1, 2]));
        assert_eq!(pi.act(&["x1", "x2", "x3"]).unwrap(), vec!["x2", "x1", "x3"]);
    }

    #[test]
    fn sigma_examples() {
        let f = map(2, &[2, 1, 2]);
        let g = FinSetMap::collapse(2);
        assert_eq!(sigma_kgf(&f, &g, 1).unwrap().values(), vec![2, 1, 3]);
        assert!(sigma_kgf(&identity_map(2), &map(3, &[3, 1]), 3).unwrap().is_identity());
        assert!(sigma_kgf(&f, &identity_map(2), 2).unwrap().is_identity());
        assert!(matches!(sigma_kgf(&f, &g, 2), Err(Error::OutOfRange { .. })));
        assert!(matches!(
            sigma_kgf(&f, &identity_map(3), 1),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn all_maps_counts_and_order() {
        for r in 0..4 {
            for s in 0..4 {
                let maps: Vec<_> = FinSetMap::all(r, s).collect();
                assert_eq!(maps.len(), s.pow(r as u32), "r={r} s={s}");
                assert!(maps.windows(2).all(|w| w[0].values() < w[1].values()));
            }
        }
    }

    #[test]
    fn all_permutations_are_lexicographic() {
        let perms = Permutation::all(4);
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0].values() < w[1].values()));
        assert_eq!(Permutation::all(0).len(), 1);
    }

    fn realize(n: usize, word: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(n);
        for &p in word {
            let mut images: Vec<usize> = (0..n).collect();
            images.swap(p, p + 1);
            let s = Permutation::from_zero_based(images).unwrap();
            acc = acc.then(&s).unwrap();
        }
        acc
    }

    #[test]
    fn transposition_words_realize_the_permutation() {
        for n in 0..6 {
            for sigma in Permutation::all(n) {
                assert_eq!(realize(n, &sigma.bubble_sort_word()), sigma);
                assert_eq!(realize(n, &sigma.insertion_sort_word()), sigma);
                assert_eq!(realize(n, &sigma.transposition_word()), sigma);
            }
        }
    }

    #[test]
    fn transposition_word_differs_from_bubble_sort() {
        // the 3-cycle has a unique reduced word; the expansion is longer
        let sigma = perm(&[3, 1, 2]);
        assert_ne!(sigma.bubble_sort_word(), sigma.transposition_word());
    }
}
