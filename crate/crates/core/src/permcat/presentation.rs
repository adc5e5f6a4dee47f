//! Finite permutative categories given by tables.

use std::fmt;

use crate::error::{Error, Result};

use super::PermutativeCategory;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CObj(pub usize);

impl fmt::Debug for CObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub usize);

impl fmt::Debug for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorDecl {
    pub name: String,
    pub source: CObj,
    pub target: CObj,
}

/// A sealed finite permutative category. All tables are total: composition
/// on composable pairs, `⊕` on all pairs of objects and of morphisms, and
/// `ξ` on all pairs of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermCatPresentation {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<MorDecl>,
    homs: Vec<Vec<Vec<MorId>>>,
    identities: Vec<MorId>,
    // indexed [second][first]; None for non-composable pairs
    compose: Vec<Vec<Option<MorId>>>,
    unit: CObj,
    sum_obj: Vec<Vec<CObj>>,
    sum_mor: Vec<Vec<MorId>>,
    symmetry: Vec<Vec<MorId>>,
}

impl PermCatPresentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, x: CObj) -> &str {
        &self.objects[x.0]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn mor_decl(&self, m: MorId) -> &MorDecl {
        &self.morphisms[m.0]
    }

    pub fn mor_decls(&self) -> &[MorDecl] {
        &self.morphisms
    }

    pub fn object_id(&self, name: &str) -> Option<CObj> {
        self.objects.iter().position(|o| o == name).map(CObj)
    }

    pub fn mor_id(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorId)
    }

    pub fn object_ids(&self) -> impl Iterator<Item = CObj> {
        (0..self.objects.len()).map(CObj)
    }

    pub fn mor_ids(&self) -> impl Iterator<Item = MorId> {
        (0..self.morphisms.len()).map(MorId)
    }

    /// Composable pairs `(second, first)` with their composite.
    pub fn composition_entries(&self) -> impl Iterator<Item = (MorId, MorId, MorId)> + '_ {
        self.compose.iter().enumerate().flat_map(|(g, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(f, r)| r.map(|r| (MorId(g), MorId(f), r)))
        })
    }

    pub fn rename(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn with_identity(mut self, x: CObj, m: MorId) -> Self {
        self.identities[x.0] = m;
        self
    }

    /// Overwrites a composition entry. The pair must be composable.
    pub fn with_composition(mut self, second: MorId, first: MorId, result: MorId) -> Result<Self> {
        if self.compose[second.0][first.0].is_none() {
            return Err(Error::Structural(format!(
                "`{}` and `{}` are not composable",
                self.morphisms[second.0].name, self.morphisms[first.0].name
            )));
        }
        self.compose[second.0][first.0] = Some(result);
        Ok(self)
    }

    pub fn with_object_sum(mut self, x: CObj, y: CObj, result: CObj) -> Self {
        self.sum_obj[x.0][y.0] = result;
        self
    }

    pub fn with_morphism_sum(mut self, a: MorId, b: MorId, result: MorId) -> Self {
        self.sum_mor[a.0][b.0] = result;
        self
    }

    pub fn with_symmetry(mut self, x: CObj, y: CObj, m: MorId) -> Self {
        self.symmetry[x.0][y.0] = m;
        self
    }

    pub fn with_unit(mut self, e: CObj) -> Self {
        self.unit = e;
        self
    }
}

impl PermutativeCategory for PermCatPresentation {
    type Obj = CObj;
    type Mor = MorId;

    fn objects(&self) -> Vec<CObj> {
        self.object_ids().collect()
    }

    fn hom(&self, x: &CObj, y: &CObj) -> Result<Vec<MorId>> {
        Ok(self.homs[x.0][y.0].clone())
    }

    fn source(&self, m: &MorId) -> CObj {
        self.morphisms[m.0].source
    }

    fn target(&self, m: &MorId) -> CObj {
        self.morphisms[m.0].target
    }

    fn identity(&self, x: &CObj) -> MorId {
        self.identities[x.0]
    }

    fn compose(&self, second: &MorId, first: &MorId) -> Result<MorId> {
        self.compose[second.0][first.0].ok_or_else(|| {
            Error::NotComposable(format!(
                "`{}` after `{}`",
                self.morphisms[second.0].name, self.morphisms[first.0].name
            ))
        })
    }

    fn sum_obj(&self, x: &CObj, y: &CObj) -> CObj {
        self.sum_obj[x.0][y.0]
    }

    fn unit_obj(&self) -> CObj {
        self.unit
    }

    fn sum_mor(&self, a: &MorId, b: &MorId) -> Result<MorId> {
        Ok(self.sum_mor[a.0][b.0])
    }

    fn symmetry(&self, x: &CObj, y: &CObj) -> MorId {
        self.symmetry[x.0][y.0]
    }

    fn describe_obj(&self, x: &CObj) -> String {
        self.objects[x.0].clone()
    }

    fn describe_mor(&self, m: &MorId) -> String {
        self.morphisms[m.0].name.clone()
    }
}

/// Incremental construction of a [`PermCatPresentation`]. `build` rejects
/// incomplete tables; the laws themselves are left to `validate_permcat`.
#[derive(Debug, Clone, Default)]
pub struct PermCatBuilder {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<MorDecl>,
    identities: Vec<Option<MorId>>,
    compose: Vec<((MorId, MorId), MorId)>,
    unit: Option<CObj>,
    sum_obj: Vec<((CObj, CObj), CObj)>,
    sum_mor: Vec<((MorId, MorId), MorId)>,
    symmetry: Vec<((CObj, CObj), MorId)>,
}

impl PermCatBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> Result<CObj> {
        let name = name.into();
        if self.objects.contains(&name) {
            return Err(Error::Structural(format!("duplicate object `{name}`")));
        }
        self.objects.push(name);
        self.identities.push(None);
        Ok(CObj(self.objects.len() - 1))
    }

    pub fn morphism(&mut self, name: impl Into<String>, source: CObj, target: CObj) -> Result<MorId> {
        let name = name.into();
        self.check_obj(source)?;
        self.check_obj(target)?;
        if self.morphisms.iter().any(|m| m.name == name) {
            return Err(Error::Structural(format!("duplicate morphism `{name}`")));
        }
        self.morphisms.push(MorDecl { name, source, target });
        Ok(MorId(self.morphisms.len() - 1))
    }

    pub fn identity(&mut self, x: CObj, m: MorId) -> Result<()> {
        self.check_obj(x)?;
        self.check_mor(m)?;
        if self.identities[x.0].replace(m).is_some() {
            return Err(Error::Structural(format!("duplicate identity for `{}`", self.objects[x.0])));
        }
        Ok(())
    }

    pub fn composition(&mut self, second: MorId, first: MorId, result: MorId) -> Result<()> {
        self.check_mor(second)?;
        self.check_mor(first)?;
        self.check_mor(result)?;
        if self.morphisms[first.0].target != self.morphisms[second.0].source {
            return Err(Error::Structural(format!(
                "composition key `{}` after `{}` is not composable",
                self.morphisms[second.0].name, self.morphisms[first.0].name
            )));
        }
        insert_once(&mut self.compose, (second, first), result, || {
            format!(
                "duplicate composition `{}` after `{}`",
                self.morphisms[second.0].name, self.morphisms[first.0].name
            )
        })
    }

    pub fn unit_object(&mut self, e: CObj) -> Result<()> {
        self.check_obj(e)?;
        if self.unit.replace(e).is_some() {
            return Err(Error::Structural("duplicate unit object".into()));
        }
        Ok(())
    }

    pub fn object_sum(&mut self, x: CObj, y: CObj, result: CObj) -> Result<()> {
        self.check_obj(x)?;
        self.check_obj(y)?;
        self.check_obj(result)?;
        insert_once(&mut self.sum_obj, (x, y), result, || {
            format!("duplicate sum `{}` ⊕ `{}`", self.objects[x.0], self.objects[y.0])
        })
    }

    pub fn morphism_sum(&mut self, a: MorId, b: MorId, result: MorId) -> Result<()> {
        self.check_mor(a)?;
        self.check_mor(b)?;
        self.check_mor(result)?;
        insert_once(&mut self.sum_mor, (a, b), result, || {
            format!(
                "duplicate sum `{}` ⊕ `{}`",
                self.morphisms[a.0].name, self.morphisms[b.0].name
            )
        })
    }

    pub fn symmetry(&mut self, x: CObj, y: CObj, m: MorId) -> Result<()> {
        self.check_obj(x)?;
        self.check_obj(y)?;
        self.check_mor(m)?;
        insert_once(&mut self.symmetry, (x, y), m, || {
            format!("duplicate symmetry for `{}`, `{}`", self.objects[x.0], self.objects[y.0])
        })
    }

    pub fn object_id(&self, name: &str) -> Option<CObj> {
        self.objects.iter().position(|o| o == name).map(CObj)
    }

    pub fn mor_id(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorId)
    }

    pub fn mor_decl(&self, m: MorId) -> &MorDecl {
        &self.morphisms[m.0]
    }

    pub fn build(self) -> Result<PermCatPresentation> {
        let n = self.objects.len();
        let m = self.morphisms.len();
        let unit = self
            .unit
            .ok_or_else(|| Error::Structural("missing unit object".into()))?;
        let identities = self
            .identities
            .iter()
            .enumerate()
            .map(|(x, id)| {
                id.ok_or_else(|| Error::Structural(format!("missing identity for `{}`", self.objects[x])))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut homs = vec![vec![Vec::new(); n]; n];
        for (i, d) in self.morphisms.iter().enumerate() {
            homs[d.source.0][d.target.0].push(MorId(i));
        }

        let mut compose = vec![vec![None; m]; m];
        for ((g, f), r) in &self.compose {
            compose[g.0][f.0] = Some(*r);
        }
        for (g, dg) in self.morphisms.iter().enumerate() {
            for (f, df) in self.morphisms.iter().enumerate() {
                if df.target == dg.source && compose[g][f].is_none() {
                    return Err(Error::Structural(format!(
                        "missing composition `{}` after `{}`",
                        dg.name, df.name
                    )));
                }
            }
        }

        let sum_obj = fill_square(n, &self.sum_obj, |x, y| {
            format!("missing sum `{}` ⊕ `{}`", self.objects[x], self.objects[y])
        })?;
        let sum_mor = fill_square(m, &self.sum_mor, |a, b| {
            format!(
                "missing sum `{}` ⊕ `{}`",
                self.morphisms[a].name, self.morphisms[b].name
            )
        })?;
        let symmetry = fill_square(n, &self.symmetry, |x, y| {
            format!("missing symmetry for `{}`, `{}`", self.objects[x], self.objects[y])
        })?;

        Ok(PermCatPresentation {
            name: self.name,
            objects: self.objects,
            morphisms: self.morphisms,
            homs,
            identities,
            compose,
            unit,
            sum_obj: sum_obj.into_iter().map(|r| r.into_iter().map(CObj).collect()).collect(),
            sum_mor: sum_mor.into_iter().map(|r| r.into_iter().map(MorId).collect()).collect(),
            symmetry: symmetry.into_iter().map(|r| r.into_iter().map(MorId).collect()).collect(),
        })
    }

    fn check_obj(&self, x: CObj) -> Result<()> {
        if x.0 >= self.objects.len() {
            return Err(Error::Structural(format!("dangling object id {x:?}")));
        }
        Ok(())
    }

    fn check_mor(&self, m: MorId) -> Result<()> {
        if m.0 >= self.morphisms.len() {
            return Err(Error::Structural(format!("dangling morphism id {m:?}")));
        }
        Ok(())
    }
}

fn insert_once<K: PartialEq, V>(
    entries: &mut Vec<(K, V)>,
    key: K,
    value: V,
    duplicate: impl FnOnce() -> String,
) -> Result<()> {
    if entries.iter().any(|(k, _)| *k == key) {
        return Err(Error::Structural(duplicate()));
    }
    entries.push((key, value));
    Ok(())
}

trait Index0 {
    fn index0(&self) -> usize;
}

impl Index0 for CObj {
    fn index0(&self) -> usize {
        self.0
    }
}

impl Index0 for MorId {
    fn index0(&self) -> usize {
        self.0
    }
}

fn fill_square<K: Index0, V: Index0>(
    size: usize,
    entries: &[((K, K), V)],
    missing: impl Fn(usize, usize) -> String,
) -> Result<Vec<Vec<usize>>> {
    let mut table = vec![vec![None; size]; size];
    for ((a, b), v) in entries {
        table[a.index0()][b.index0()] = Some(v.index0());
    }
    table
        .into_iter()
        .enumerate()
        .map(|(a, row)| {
            row.into_iter()
                .enumerate()
                .map(|(b, v)| v.ok_or_else(|| Error::Structural(missing(a, b))))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_object() -> PermCatBuilder {
        let mut b = PermCatBuilder::new("point");
        let e = b.object("e").unwrap();
        let id = b.morphism("1", e, e).unwrap();
        b.identity(e, id).unwrap();
        b.unit_object(e).unwrap();
        b.object_sum(e, e, e).unwrap();
        b.morphism_sum(id, id, id).unwrap();
        b.symmetry(e, e, id).unwrap();
        b
    }

    #[test]
    fn incomplete_composition_is_structural() {
        let err = one_object().build().unwrap_err();
        assert!(matches!(err, Error::Structural(ref s) if s.contains("missing composition")));
        let mut b = one_object();
        b.composition(MorId(0), MorId(0), MorId(0)).unwrap();
        let c = b.build().unwrap();
        assert_eq!(c.hom(&CObj(0), &CObj(0)).unwrap(), vec![MorId(0)]);
    }

    #[test]
    fn rejects_dangling_and_duplicates() {
        let mut b = one_object();
        assert!(b.morphism("f", CObj(0), CObj(4)).is_err());
        assert!(b.symmetry(CObj(0), CObj(0), MorId(0)).is_err());
        assert!(b.object("e").is_err());
    }

    #[test]
    fn non_composable_key_rejected() {
        let mut b = PermCatBuilder::new("two");
        let x = b.object("x").unwrap();
        let y = b.object("y").unwrap();
        let f = b.morphism("f", x, y).unwrap();
        assert!(b.composition(f, f, f).is_err());
    }
}
