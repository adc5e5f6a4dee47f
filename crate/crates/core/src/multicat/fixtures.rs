//! Further table multicategories used as test material: the associative
//! operad, multicategories graded by a commutative monoid, and a seeded
//! generator of random ones.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{block_permutation, block_sum, profiles, Permutation};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

use super::presentation::{MulticategoryPresentation, ObjId, OpId, PresentationBuilder};

/// The associative operad truncated at arity `a`: `As(n) = Σ_n`, with
/// `μ·σ = μσ` and `γ(μ; λ_1, …, λ_n) = (λ_{μ⁻¹(1)} × ⋯ × λ_{μ⁻¹(n)})·μ⟨|λ_1|, …, |λ_n|⟩`.
pub fn associative_operad(a: usize) -> MulticategoryPresentation {
    let a = a.max(1);
    let mut b = PresentationBuilder::new(format!("associative_operad({a})"), a);
    let star = b.object("*").expect("fresh builder");
    let mut ids: HashMap<Permutation, OpId> = HashMap::new();
    let mut by_arity: Vec<Vec<Permutation>> = Vec::new();
    for n in 0..=a {
        let perms = Permutation::all(n);
        for p in &perms {
            let id = b
                .operation(format!("as{:?}", p), star, &vec![star; n])
                .expect("fresh builder");
            ids.insert(p.clone(), id);
        }
        by_arity.push(perms);
    }
    b.unit(star, ids[&Permutation::identity(1)]).expect("fresh builder");
    for perms in &by_arity {
        for mu in perms {
            for sigma in perms {
                if !sigma.is_identity() {
                    let r = mu.then(sigma).expect("same length");
                    b.action(ids[mu], sigma.clone(), ids[&r]).expect("fresh builder");
                }
            }
        }
    }
    for perms in &by_arity {
        for mu in perms {
            let mut inner = Vec::new();
            fill_associative(&mut b, &ids, &by_arity, mu, a, &mut inner);
        }
    }
    b.build().expect("associative operad is complete")
}

fn fill_associative(
    b: &mut PresentationBuilder,
    ids: &HashMap<Permutation, OpId>,
    by_arity: &[Vec<Permutation>],
    mu: &Permutation,
    budget: usize,
    inner: &mut Vec<Permutation>,
) {
    if inner.len() == mu.len() {
        let inv = mu.inverse();
        let reordered: Vec<Permutation> = inv.images0().iter().map(|&j| inner[j].clone()).collect();
        let lengths: Vec<usize> = inner.iter().map(Permutation::len).collect();
        let result = block_sum(&reordered)
            .then(&block_permutation(mu, &lengths).expect("lengths match"))
            .expect("same length");
        let keys: Vec<OpId> = inner.iter().map(|p| ids[p]).collect();
        b.composition(ids[mu], &keys, ids[&result]).expect("well-formed key");
        return;
    }
    for (k, perms) in by_arity.iter().enumerate().take(budget + 1) {
        for p in perms {
            inner.push(p.clone());
            fill_associative(b, ids, by_arity, mu, budget - k, inner);
            inner.pop();
        }
    }
}

/// The multicategory on objects with parities `weights` in which
/// `M⟨y; x_1, …, x_n⟩` is a copy of the commutative monoid `labels` when
/// `w(y) = Σ w(x_i)` mod 2 and is empty otherwise. Composition multiplies
/// labels, units carry the identity label, and the action keeps the label.
pub fn graded_multicategory(
    name: impl Into<String>,
    weights: &[u8],
    labels: &FiniteMonoid,
    a: usize,
) -> Result<MulticategoryPresentation> {
    if !labels.is_commutative() {
        return Err(Error::Invalid(format!(
            "label monoid {} is not commutative",
            labels.name()
        )));
    }
    let mut b = PresentationBuilder::new(name, a);
    let objects: Vec<ObjId> = if weights.len() == 1 {
        vec![b.object("*")?]
    } else {
        (0..weights.len())
            .map(|i| b.object(format!("c{i}")))
            .collect::<Result<_>>()?
    };
    let w = |c: ObjId| u32::from(weights[c.0] % 2);
    let mut ids: HashMap<(usize, ObjId, Vec<ObjId>), OpId> = HashMap::new();
    let mut decls: Vec<(usize, ObjId, Vec<ObjId>)> = Vec::new();
    for n in 0..=a {
        for inputs in profiles(&objects, n) {
            let total: u32 = inputs.iter().map(|&c| w(c)).sum();
            for &y in &objects {
                if w(y) % 2 != total % 2 {
                    continue;
                }
                for label in 0..labels.order() {
                    let name = op_name(labels, label, y, &inputs);
                    let id = b.operation(name, y, &inputs)?;
                    ids.insert((label, y, inputs.clone()), id);
                    decls.push((label, y, inputs.clone()));
                }
            }
        }
    }
    for &c in &objects {
        b.unit(c, ids[&(labels.identity(), c, vec![c])])?;
    }
    for (label, y, inputs) in &decls {
        let id = ids[&(*label, *y, inputs.clone())];
        for sigma in Permutation::all(inputs.len()) {
            if !sigma.is_identity() {
                let permuted = sigma.act(inputs)?;
                b.action(id, sigma, ids[&(*label, *y, permuted)])?;
            }
        }
    }
    let by_output: HashMap<ObjId, Vec<usize>> = objects
        .iter()
        .map(|&c| {
            (
                c,
                decls
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| d.1 == c)
                    .map(|(i, _)| i)
                    .collect(),
            )
        })
        .collect();
    for (outer, (label, y, inputs)) in decls.iter().enumerate() {
        let mut inner = Vec::new();
        fill_graded(
            &mut b,
            &ids,
            &decls,
            &by_output,
            labels,
            (outer, *label, *y, inputs),
            a,
            &mut inner,
        )?;
    }
    b.build()
}

fn op_name(labels: &FiniteMonoid, label: usize, y: ObjId, inputs: &[ObjId]) -> String {
    let ins: Vec<String> = inputs.iter().map(|c| c.0.to_string()).collect();
    format!("{}:{}<{}", labels.element_name(label), y.0, ins.join(","))
}

#[allow(clippy::too_many_arguments)]
fn fill_graded(
    b: &mut PresentationBuilder,
    ids: &HashMap<(usize, ObjId, Vec<ObjId>), OpId>,
    decls: &[(usize, ObjId, Vec<ObjId>)],
    by_output: &HashMap<ObjId, Vec<usize>>,
    labels: &FiniteMonoid,
    outer: (usize, usize, ObjId, &Vec<ObjId>),
    budget: usize,
    inner: &mut Vec<usize>,
) -> Result<()> {
    let (outer_idx, label, y, slots) = outer;
    if inner.len() == slots.len() {
        let product = labels.product(std::iter::once(label).chain(inner.iter().map(|&i| decls[i].0)));
        let concat: Vec<ObjId> = inner.iter().flat_map(|&i| decls[i].2.iter().copied()).collect();
        let keys: Vec<OpId> = inner.iter().map(|&i| ids[&decls[i].clone()]).collect();
        let outer_id = ids[&decls[outer_idx].clone()];
        return b.composition(outer_id, &keys, ids[&(product, y, concat)]);
    }
    for &i in &by_output[&slots[inner.len()]] {
        let k = decls[i].2.len();
        if k <= budget {
            inner.push(i);
            fill_graded(b, ids, decls, by_output, labels, outer, budget - k, inner)?;
            inner.pop();
        }
    }
    Ok(())
}

/// A one-object operad with an even and an odd operation in every arity.
pub fn parity_operad(a: usize) -> MulticategoryPresentation {
    graded_multicategory(format!("parity_operad({a})"), &[0], &FiniteMonoid::cyclic(2), a)
        .expect("Z/2 is commutative")
}

/// A two-object multicategory with one operation in each signature whose
/// output parity matches the parity of its inputs (`c0` even, `c1` odd).
pub fn two_object_example(a: usize) -> MulticategoryPresentation {
    graded_multicategory(format!("two_object_example({a})"), &[0, 1], &FiniteMonoid::trivial(), a)
        .expect("trivial monoid is commutative")
}

/// A random graded multicategory: one or two objects with random parities,
/// labels drawn from the trivial monoid, `ℤ/2`, `({0,1},max)` or
/// `({0,1},min)`, presented up to arity `a`.
///
/// Two even objects are only paired with the trivial label monoid: with two
/// labels that combination has too many composable triples at profile
/// length 3 to enumerate.
pub fn random_multicategory(seed: u64, a: usize) -> MulticategoryPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_obj = rng.gen_range(1..=2);
    let weights: Vec<u8> = (0..n_obj).map(|_| rng.gen_range(0..=1)).collect();
    let mut labels = match rng.gen_range(0..4) {
        0 => FiniteMonoid::trivial(),
        1 => FiniteMonoid::cyclic(2),
        2 => FiniteMonoid::boolean_or(),
        _ => FiniteMonoid::boolean_and(),
    };
    if n_obj == 2 && weights.iter().all(|&w| w == 0) {
        labels = FiniteMonoid::trivial();
    }
    graded_multicategory(format!("random_{seed}"), &weights, &labels, a)
        .expect("label monoids are commutative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multicat::validate::validate_multicategory;
    use crate::multicat::Multicategory;
    use crate::verify::Bounds;

    #[test]
    fn associative_operad_validates() {
        let m = associative_operad(3);
        assert_eq!(m.op_count(), 1 + 1 + 2 + 6);
        let report = validate_multicategory(&m, &Bounds::new(3, 3));
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn graded_examples_validate() {
        for m in [parity_operad(3), two_object_example(3), random_multicategory(7, 3)] {
            let report = validate_multicategory(&m, &Bounds::new(3, 3));
            assert!(report.passed(), "{}", report.render_text());
        }
    }

    #[test]
    fn random_is_reproducible() {
        assert_eq!(random_multicategory(3, 3), random_multicategory(3, 3));
    }

    #[test]
    fn parity_signature_sizes() {
        let m = parity_operad(2);
        let star = m.object_ids().next().unwrap();
        for n in 0..=2 {
            assert_eq!(m.ops(&star, &vec![star; n]).unwrap().len(), 2);
        }
    }
}
