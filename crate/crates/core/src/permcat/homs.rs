//! Enumerated hom sets and memoized composition tables.
//!
//! Law checks that quantify over composable pairs or triples look composites
//! up by index instead of recomposing, which keeps associativity over free
//! categories with a few hundred morphisms per hom set affordable.

use std::collections::HashMap;

use crate::report::{FamilyRecord, Witness};
use crate::verify::par_map;

use super::PermutativeCategory;

/// Composite lies beyond the enumeration bound.
pub(crate) const TRUNCATED: u32 = u32::MAX;
/// Composite could not be computed or is not in its hom set.
pub(crate) const BROKEN: u32 = u32::MAX - 1;

pub(crate) enum HomSet<M> {
    Listed { mors: Vec<M>, index: HashMap<M, u32> },
    Truncated,
    Failed,
}

impl<M> HomSet<M> {
    pub fn mors(&self) -> Option<&[M]> {
        match self {
            HomSet::Listed { mors, .. } => Some(mors),
            _ => None,
        }
    }
}

pub(crate) struct HomIndex<C: PermutativeCategory> {
    pub objects: Vec<C::Obj>,
    pub obj_index: HashMap<C::Obj, usize>,
    homs: Vec<Vec<HomSet<C::Mor>>>,
}

impl<C: PermutativeCategory> HomIndex<C> {
    /// Enumerates every hom set between enumerated objects. Listing problems
    /// (wrong endpoints, duplicates, evaluation errors) go to `record`.
    pub fn build(c: &C, parallel: usize, record: &mut FamilyRecord) -> Self {
        let objects = c.objects();
        let obj_index: HashMap<C::Obj, usize> =
            objects.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let pairs: Vec<(usize, usize)> = (0..objects.len())
            .flat_map(|x| (0..objects.len()).map(move |y| (x, y)))
            .collect();
        let listed = par_map(parallel, &pairs, |&(x, y)| {
            let mut rec = FamilyRecord::new(record.name.clone());
            let set = match c.hom(&objects[x], &objects[y]) {
                Ok(mors) => {
                    let mut index = HashMap::with_capacity(mors.len());
                    for (i, m) in mors.iter().enumerate() {
                        let (s, t) = (c.source(m), c.target(m));
                        let inst = || {
                            vec![
                                ("x".to_string(), c.describe_obj(&objects[x])),
                                ("y".to_string(), c.describe_obj(&objects[y])),
                                ("f".to_string(), c.describe_mor(m)),
                            ]
                        };
                        rec.check(s == objects[x] && t == objects[y], inst, || {
                            format!("listed with endpoints {} → {}", c.describe_obj(&s), c.describe_obj(&t))
                        });
                        if index.insert(m.clone(), i as u32).is_some() {
                            rec.fail(Witness::new(inst(), "listed twice"));
                        }
                    }
                    HomSet::Listed { mors, index }
                }
                Err(e) if e.is_truncation() => {
                    rec.skip();
                    HomSet::Truncated
                }
                Err(e) => {
                    rec.error(e, || {
                        vec![
                            ("x".to_string(), c.describe_obj(&objects[x])),
                            ("y".to_string(), c.describe_obj(&objects[y])),
                        ]
                    });
                    HomSet::Failed
                }
            };
            (set, rec)
        });
        let n = objects.len();
        let mut homs: Vec<Vec<HomSet<C::Mor>>> = (0..n).map(|_| Vec::with_capacity(n)).collect();
        for ((x, _), (set, rec)) in pairs.iter().zip(listed) {
            record.merge(rec);
            homs[*x].push(set);
        }
        Self {
            objects,
            obj_index,
            homs,
        }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn mors(&self, x: usize, y: usize) -> Option<&[C::Mor]> {
        self.homs[x][y].mors()
    }

    /// Index of `m` in `hom(x, y)`: `TRUNCATED` if that hom set was not
    /// listed, `BROKEN` if `m` is not in it.
    pub fn index_of(&self, x: usize, y: usize, m: &C::Mor) -> u32 {
        match &self.homs[x][y] {
            HomSet::Listed { index, .. } => index.get(m).copied().unwrap_or(BROKEN),
            HomSet::Truncated => TRUNCATED,
            HomSet::Failed => BROKEN,
        }
    }

    pub fn position(&self, x: &C::Obj) -> Option<usize> {
        self.obj_index.get(x).copied()
    }

    /// All morphisms between enumerated objects, with their endpoint indices.
    pub fn all_morphisms(&self) -> Vec<(usize, usize, C::Mor)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if let Some(ms) = self.mors(x, y) {
                    out.extend(ms.iter().map(|m| (x, y, m.clone())));
                }
            }
        }
        out
    }
}

/// Composites `g ∘ f` for `f ∈ hom(x, y)`, `g ∈ hom(y, z)`, stored as
/// indices into `hom(x, z)`.
pub(crate) struct CompositionTable {
    pub n_first: usize,
    pub entries: Vec<u32>,
}

impl CompositionTable {
    pub fn get(&self, second: u32, first: u32) -> u32 {
        self.entries[second as usize * self.n_first + first as usize]
    }
}

pub(crate) struct Compositions {
    n: usize,
    tables: Vec<Option<CompositionTable>>,
}

impl Compositions {
    /// Composes every composable pair once. Composites that fail, have the
    /// wrong endpoints, or are missing from their hom set are recorded in
    /// `record` and stored as `BROKEN`.
    pub fn build<C: PermutativeCategory>(
        c: &C,
        homs: &HomIndex<C>,
        parallel: usize,
        record: &mut FamilyRecord,
    ) -> Self {
        let n = homs.len();
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
            .filter(|&(x, y, z)| {
                homs.mors(x, y).is_some_and(|m| !m.is_empty())
                    && homs.mors(y, z).is_some_and(|m| !m.is_empty())
            })
            .collect();
        let built = par_map(parallel, &triples, |&(x, y, z)| {
            let mut rec = FamilyRecord::new(record.name.clone());
            let fs = homs.mors(x, y).unwrap_or(&[]);
            let gs = homs.mors(y, z).unwrap_or(&[]);
            let mut entries = Vec::with_capacity(fs.len() * gs.len());
            for g in gs {
                for f in fs {
                    let inst = || {
                        vec![
                            ("g".to_string(), c.describe_mor(g)),
                            ("f".to_string(), c.describe_mor(f)),
                        ]
                    };
                    let entry = match c.compose(g, f) {
                        Ok(r) => {
                            let (s, t) = (c.source(&r), c.target(&r));
                            if s != homs.objects[x] || t != homs.objects[z] {
                                rec.fail(Witness::new(
                                    inst(),
                                    format!(
                                        "composite {} has endpoints {} → {}",
                                        c.describe_mor(&r),
                                        c.describe_obj(&s),
                                        c.describe_obj(&t)
                                    ),
                                ));
                                BROKEN
                            } else {
                                let idx = homs.index_of(x, z, &r);
                                match idx {
                                    TRUNCATED => rec.skip(),
                                    BROKEN => rec.fail(Witness::new(
                                        inst(),
                                        format!("composite {} is not in its hom set", c.describe_mor(&r)),
                                    )),
                                    _ => rec.pass(),
                                }
                                idx
                            }
                        }
                        Err(e) => {
                            let truncated = e.is_truncation();
                            rec.error(e, inst);
                            if truncated {
                                TRUNCATED
                            } else {
                                BROKEN
                            }
                        }
                    };
                    entries.push(entry);
                }
            }
            (
                CompositionTable {
                    n_first: fs.len(),
                    entries,
                },
                rec,
            )
        });
        let mut tables: Vec<Option<CompositionTable>> = (0..n * n * n).map(|_| None).collect();
        for ((x, y, z), (table, rec)) in triples.iter().zip(built) {
            record.merge(rec);
            tables[(x * n + y) * n + z] = Some(table);
        }
        Self { n, tables }
    }

    pub fn table(&self, x: usize, y: usize, z: usize) -> Option<&CompositionTable> {
        self.tables[(x * self.n + y) * self.n + z].as_ref()
    }
}
