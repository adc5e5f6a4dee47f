//! Canonical morphisms `⊕_i x_i → ⊕_k x_{σ(k)}` built from components of `ξ`.

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

use super::{sum_objects, PermutativeCategory};

/// How a permutation is split into adjacent transpositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Decomposition {
    #[default]
    BubbleSort,
    InsertionSort,
    /// Each transposition `(k q)` expanded into adjacent swaps. Not reduced.
    Transpositions,
}

impl Decomposition {
    pub fn word(self, sigma: &Permutation) -> Vec<usize> {
        match self {
            Self::BubbleSort => sigma.bubble_sort_word(),
            Self::InsertionSort => sigma.insertion_sort_word(),
            Self::Transpositions => sigma.transposition_word(),
        }
    }
}

/// The morphism `x_1 ⊕ ⋯ ⊕ x_n → x_{σ(1)} ⊕ ⋯ ⊕ x_{σ(n)}` that permutes the
/// summands by `σ`, via the bubble-sort decomposition.
pub fn coherence_morphism<C: PermutativeCategory>(
    c: &C,
    xs: &[C::Obj],
    sigma: &Permutation,
) -> Result<C::Mor> {
    coherence_morphism_with(c, xs, sigma, Decomposition::BubbleSort)
}

pub fn coherence_morphism_with<C: PermutativeCategory>(
    c: &C,
    xs: &[C::Obj],
    sigma: &Permutation,
    decomposition: Decomposition,
) -> Result<C::Mor> {
    if xs.len() != sigma.len() {
        return Err(Error::LengthMismatch {
            expected: sigma.len(),
            found: xs.len(),
        });
    }
    if sigma.is_identity() {
        return Ok(c.identity(&sum_objects(c, xs)));
    }
    coherence_from_word(c, xs, &decomposition.word(sigma))
}

/// Composite of the steps `1 ⊕ ξ_{x_p, x_{p+1}} ⊕ 1`, one per swap position
/// `p` of `word`, applied left to right to the running profile.
pub fn coherence_from_word<C: PermutativeCategory>(
    c: &C,
    xs: &[C::Obj],
    word: &[usize],
) -> Result<C::Mor> {
    let mut cur = xs.to_vec();
    let mut acc = c.identity(&sum_objects(c, &cur));
    for &p in word {
        if p + 1 >= cur.len() {
            return Err(Error::OutOfRange {
                index: p + 1,
                bound: cur.len(),
            });
        }
        let left = c.identity(&sum_objects(c, &cur[..p]));
        let right = c.identity(&sum_objects(c, &cur[p + 2..]));
        let xi = c.symmetry(&cur[p], &cur[p + 1]);
        let step = c.sum_mor(&c.sum_mor(&left, &xi)?, &right)?;
        acc = c.compose(&step, &acc)?;
        cur.swap(p, p + 1);
    }
    Ok(acc)
}
