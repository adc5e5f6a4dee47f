//! Builtins and brute-force oracles shared by the integration suites.
#![allow(dead_code)]

pub mod mutation;
pub mod two_cell;

use freeperm::monoid::FiniteMonoid;
use freeperm::multicat::fixtures::two_object_example;
use freeperm::multicat::{empty_multicategory, initial_operad, terminal_multicategory, MulticategoryPresentation};
use freeperm::permcat::{discrete_commutative_monoid, group_enriched, sign_category, PermCatPresentation};

pub fn builtin_multicategories() -> Vec<MulticategoryPresentation> {
    vec![
        initial_operad(),
        terminal_multicategory(3),
        terminal_multicategory(4),
        empty_multicategory(),
        two_object_example(3),
    ]
}

pub fn builtin_permcats() -> Vec<PermCatPresentation> {
    let z2 = FiniteMonoid::cyclic(2);
    let z3 = FiniteMonoid::cyclic(3);
    vec![
        discrete_commutative_monoid(&z2).unwrap(),
        discrete_commutative_monoid(&FiniteMonoid::boolean_or()).unwrap(),
        group_enriched(1, &z2).unwrap(),
        group_enriched(2, &z3).unwrap(),
        sign_category(),
    ]
}

/// Every map `{0..r} → {0..s}` as a vector of 0-based images.
pub fn maps(r: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..s).map(move |j| {
                    let mut w = v.clone();
                    w.push(j);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every `σ` (0-based) with `concat·σ = target` under `(p·σ)[m] = p[σ(m)]`.
pub fn brute_sigma(f: &[usize], g: &[usize], k: usize) -> Vec<Vec<usize>> {
    let s = g.len();
    let mut concat = Vec::new();
    for j in 0..s {
        if g[j] == k {
            concat.extend((0..f.len()).filter(|&i| f[i] == j));
        }
    }
    let target: Vec<usize> = (0..f.len()).filter(|&i| g[f[i]] == k).collect();
    perms(concat.len())
        .into_iter()
        .filter(|sig| sig.iter().map(|&m| concat[m]).collect::<Vec<_>>() == target)
        .collect()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
