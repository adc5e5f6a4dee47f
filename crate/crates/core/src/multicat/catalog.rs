//! Bounded enumeration of the operations of a multicategory.

use std::collections::HashMap;

use crate::combinatorics::profiles;
use crate::error::Error;

use super::Multicategory;

pub(crate) struct Catalog<M: Multicategory> {
    pub bound: usize,
    pub objects: Vec<M::Obj>,
    /// Operations of arity at most `bound`, by arity, then input profile,
    /// then output.
    pub ops: Vec<M::Op>,
    by_output: HashMap<M::Obj, Vec<Vec<M::Op>>>,
    /// Signatures the multicategory refused as beyond its own bound.
    pub truncated: u64,
    /// Listed operations whose signature matched the query, and those that did not.
    pub filed: u64,
    pub misfiled: Vec<(String, String)>,
    pub errors: Vec<(String, Error)>,
}

impl<M: Multicategory> Catalog<M> {
    pub fn build(m: &M, requested: usize) -> Self {
        let bound = m.arity_bound().map_or(requested, |a| a.min(requested));
        let objects = m.objects();
        let mut by_output: HashMap<M::Obj, Vec<Vec<M::Op>>> = objects
            .iter()
            .map(|c| (c.clone(), vec![Vec::new(); bound + 1]))
            .collect();
        let mut ops = Vec::new();
        let mut truncated = 0;
        let mut errors = Vec::new();
        let mut filed = 0;
        let mut misfiled = Vec::new();
        for k in 0..=bound {
            for inputs in profiles(&objects, k) {
                for c in &objects {
                    match m.ops(c, &inputs) {
                        Ok(list) => {
                            for op in &list {
                                let sig = m.signature(op);
                                if sig.output == *c && sig.inputs == inputs {
                                    filed += 1;
                                } else {
                                    misfiled.push((
                                        format!(
                                            "{}; {}",
                                            m.describe_obj(c),
                                            super::describe_objs(m, &inputs)
                                        ),
                                        m.describe_op(op),
                                    ));
                                }
                            }
                            if let Some(levels) = by_output.get_mut(c) {
                                levels[k].extend(list.iter().cloned());
                            }
                            ops.extend(list);
                        }
                        Err(e) if e.is_truncation() => truncated += 1,
                        Err(e) => errors.push((
                            format!("{}; {}", m.describe_obj(c), super::describe_objs(m, &inputs)),
                            e,
                        )),
                    }
                }
            }
        }
        Self {
            bound,
            objects,
            ops,
            by_output,
            truncated,
            filed,
            misfiled,
            errors,
        }
    }

    pub fn with_output(&self, c: &M::Obj, arity: usize) -> &[M::Op] {
        self.by_output
            .get(c)
            .and_then(|levels| levels.get(arity))
            .map_or(&[], Vec::as_slice)
    }

    /// Calls `f` on every tuple `(χ_1, …, χ_K)` with `χ_s` outputting
    /// `slots[s]` and total arity at most `budget`.
    pub fn for_each_tuple(&self, slots: &[M::Obj], budget: usize, f: &mut dyn FnMut(&[M::Op])) {
        let mut cur = Vec::with_capacity(slots.len());
        self.tuples_rec(slots, budget, &mut cur, f);
    }

    fn tuples_rec(
        &self,
        slots: &[M::Obj],
        budget: usize,
        cur: &mut Vec<M::Op>,
        f: &mut dyn FnMut(&[M::Op]),
    ) {
        if cur.len() == slots.len() {
            f(cur);
            return;
        }
        let Some(levels) = self.by_output.get(&slots[cur.len()]) else {
            return;
        };
        for (l, ops) in levels.iter().enumerate().take(budget + 1) {
            for op in ops {
                cur.push(op.clone());
                self.tuples_rec(slots, budget - l, cur, f);
                cur.pop();
            }
        }
    }

    /// Number of arity shapes `(l_1, …, l_K)` realised by catalog operations
    /// over `slots` whose total exceeds `budget`.
    pub fn overflow_shapes(&self, slots: &[M::Obj], budget: usize) -> u64 {
        let mut ways = vec![1u64];
        for c in slots {
            let avail: Vec<usize> = (0..=self.bound)
                .filter(|&l| !self.with_output(c, l).is_empty())
                .collect();
            let mut next = vec![0u64; ways.len() + self.bound];
            for (t, &w) in ways.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                for &l in &avail {
                    next[t + l] += w;
                }
            }
            ways = next;
        }
        ways.iter().skip(budget + 1).sum()
    }
}
