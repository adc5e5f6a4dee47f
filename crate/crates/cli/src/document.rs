//! JSON documents for presentations, functors and transformations.
//!
//! Every document is an object with `kind`, `version` and `name`; the rest of
//! the fields depend on the kind. Ids are names, permutations are value
//! sequences. Parsing reads `kind` first and then decodes the body with a
//! strict schema for that kind.

use std::collections::BTreeMap;

use freeperm::combinatorics::Permutation;
use freeperm::multicat::{
    MulticategoryPresentation, MultinatTransformation, ObjId, OpId, PresentationBuilder,
    TableMultifunctor,
};
use freeperm::permcat::{CObj, MonoidalNat, MorId, PermCatBuilder, PermCatPresentation, TableFunctor};
use freeperm::multicat::Multicategory as _;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const VERSION: &str = "1";

pub const KINDS: &[&str] = &[
    "multicategory",
    "permcat",
    "multifunctor",
    "smfunctor",
    "multinat",
    "monoidalnat",
    "free_truncation",
];

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Multicategory(MulticategoryPresentation),
    Permcat(PermCatPresentation),
    Multifunctor(MultifunctorData),
    SmFunctor(SmFunctorData),
    Multinat(MultinatData),
    MonoidalNat(MonoidalNatData),
    Free(FreeTruncationDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Multicategory(_) => "multicategory",
            Document::Permcat(_) => "permcat",
            Document::Multifunctor(_) => "multifunctor",
            Document::SmFunctor(_) => "smfunctor",
            Document::Multinat(_) => "multinat",
            Document::MonoidalNat(_) => "monoidalnat",
            Document::Free(_) => "free_truncation",
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Document::Multicategory(m) => m.name(),
            Document::Permcat(c) => c.name(),
            Document::Multifunctor(d) => &d.name,
            Document::SmFunctor(d) => &d.name,
            Document::Multinat(d) => &d.name,
            Document::MonoidalNat(d) => &d.name,
            Document::Free(d) => &d.name,
        }
    }
}

/// A multifunctor between two table presentations, stored by its tables.
#[derive(Debug, Clone, PartialEq)]
pub struct MultifunctorData {
    pub name: String,
    pub source: MulticategoryPresentation,
    pub target: MulticategoryPresentation,
    pub object_map: Vec<ObjId>,
    pub op_map: Vec<OpId>,
}

impl MultifunctorData {
    pub fn functor(&self) -> Result<TableMultifunctor<'_>, CliError> {
        Ok(TableMultifunctor::new(
            &self.source,
            &self.target,
            self.object_map.clone(),
            self.op_map.clone(),
        )?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmFunctorData {
    pub name: String,
    pub source: PermCatPresentation,
    pub target: PermCatPresentation,
    pub object_map: Vec<CObj>,
    pub mor_map: Vec<MorId>,
}

impl SmFunctorData {
    pub fn functor(&self) -> Result<TableFunctor<'_>, CliError> {
        Ok(TableFunctor::new(
            &self.source,
            &self.target,
            self.object_map.clone(),
            self.mor_map.clone(),
        )?)
    }
}

/// `θ: F → G` between table multifunctors, with one component per source object.
#[derive(Debug, Clone, PartialEq)]
pub struct MultinatData {
    pub name: String,
    pub source: MulticategoryPresentation,
    pub target: MulticategoryPresentation,
    pub from: (Vec<ObjId>, Vec<OpId>),
    pub to: (Vec<ObjId>, Vec<OpId>),
    pub components: Vec<OpId>,
}

impl MultinatData {
    pub fn transformation(
        &self,
    ) -> Result<MultinatTransformation<TableMultifunctor<'_>, TableMultifunctor<'_>>, CliError> {
        let f = TableMultifunctor::new(&self.source, &self.target, self.from.0.clone(), self.from.1.clone())?;
        let g = TableMultifunctor::new(&self.source, &self.target, self.to.0.clone(), self.to.1.clone())?;
        let components = self
            .source
            .object_ids()
            .zip(self.components.iter().copied())
            .collect();
        Ok(MultinatTransformation::new(f, g, components)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonoidalNatData {
    pub name: String,
    pub source: PermCatPresentation,
    pub target: PermCatPresentation,
    pub from: (Vec<CObj>, Vec<MorId>),
    pub to: (Vec<CObj>, Vec<MorId>),
    pub components: Vec<MorId>,
}

impl MonoidalNatData {
    pub fn transformation(&self) -> Result<MonoidalNat<TableFunctor<'_>, TableFunctor<'_>>, CliError> {
        let f = TableFunctor::new(&self.source, &self.target, self.from.0.clone(), self.from.1.clone())?;
        let g = TableFunctor::new(&self.source, &self.target, self.to.0.clone(), self.to.1.clone())?;
        let components = self
            .source
            .object_ids()
            .zip(self.components.iter().copied())
            .collect();
        Ok(MonoidalNat::new(f, g, components)?)
    }
}

// ---- wire formats ----

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MulticategoryDoc {
    pub kind: String,
    pub version: String,
    pub name: String,
    pub arity_bound: usize,
    pub objects: Vec<String>,
    pub operations: Vec<OperationDoc>,
    pub units: Vec<UnitDoc>,
    pub action: Vec<ActionDoc>,
    pub composition: Vec<CompositionDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperationDoc {
    pub name: String,
    pub output: String,
    pub inputs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitDoc {
    pub object: String,
    pub operation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub operation: String,
    pub permutation: Vec<usize>,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionDoc {
    pub outer: String,
    pub inner: Vec<String>,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermcatDoc {
    pub kind: String,
    pub version: String,
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub unit: String,
    pub identities: Vec<IdentityDoc>,
    pub composition: Vec<MorCompositionDoc>,
    pub object_sum: Vec<ObjectSumDoc>,
    pub morphism_sum: Vec<MorphismSumDoc>,
    pub symmetry: Vec<SymmetryDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityDoc {
    pub object: String,
    pub morphism: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorCompositionDoc {
    pub second: String,
    pub first: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSumDoc {
    pub left: String,
    pub right: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSumDoc {
    pub left: String,
    pub right: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetryDoc {
    pub left: String,
    pub right: String,
    pub morphism: String,
}

/// Object and arrow tables of a functor, keyed by source names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub objects: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultifunctorDoc {
    pub kind: String,
    pub version: String,
    pub name: String,
    pub source: MulticategoryDoc,
    pub target: MulticategoryDoc,
    pub map: MapDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmFunctorDoc {
    pub kind: String,
    pub version: String,
    pub name: String,
    pub source: PermcatDoc,
    pub target: PermcatDoc,
    pub map: MapDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultinatDoc {
    pub kind: String,
    pub version: String,
    pub name: String,
    pub source: MulticategoryDoc,
    pub target: MulticategoryDoc,
    pub from: MapDoc,
    pub to: MapDoc,
    pub components: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalNatDoc {
    pub kind: String,
    pub version: String,
    pub name: String,
    pub source: PermcatDoc,
    pub target: PermcatDoc,
    pub from: MapDoc,
    pub to: MapDoc,
    pub components: BTreeMap<String, String>,
}

/// `F(M)` listed up to a profile-length bound. Output only: it is not a
/// complete permutative category, since sums may leave the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FreeTruncationDoc {
    pub kind: String,
    pub version: String,
    pub name: String,
    pub base: String,
    pub profile_bound: usize,
    pub objects: Vec<Vec<String>>,
    /// `counts_by_length[r][s]`: morphisms from length-`r` to length-`s`
    /// profiles, summed over profiles.
    pub counts_by_length: Vec<Vec<usize>>,
    pub homs: Vec<FreeHomDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FreeHomDoc {
    pub source: usize,
    pub target: usize,
    pub morphisms: Vec<FreeMorphismDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FreeMorphismDoc {
    pub index_map: Vec<usize>,
    pub ops: Vec<String>,
}

// ---- parsing ----

#[derive(Deserialize)]
struct Header {
    kind: Option<serde_json::Value>,
    version: Option<serde_json::Value>,
}

/// Parses a document, reporting the location of syntax and schema errors.
pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let header: Header = serde_json::from_str(text).map_err(CliError::parse)?;
    let kind = match header.kind {
        Some(serde_json::Value::String(k)) => k,
        Some(_) => return Err(CliError::Schema("`kind` must be a string".into())),
        None => return Err(CliError::Schema("missing `kind`".into())),
    };
    match header.version {
        Some(serde_json::Value::String(v)) if v == VERSION => {}
        Some(v) => {
            return Err(CliError::Schema(format!(
                "unsupported version {v}, expected \"{VERSION}\""
            )))
        }
        None => return Err(CliError::Schema("missing `version`".into())),
    }
    match kind.as_str() {
        "multicategory" => {
            let doc: MulticategoryDoc = serde_json::from_str(text).map_err(CliError::parse)?;
            Ok(Document::Multicategory(multicategory_from_doc(&doc)?))
        }
        "permcat" => {
            let doc: PermcatDoc = serde_json::from_str(text).map_err(CliError::parse)?;
            Ok(Document::Permcat(permcat_from_doc(&doc)?))
        }
        "multifunctor" => {
            let doc: MultifunctorDoc = serde_json::from_str(text).map_err(CliError::parse)?;
            let source = multicategory_from_doc(&doc.source)?;
            let target = multicategory_from_doc(&doc.target)?;
            let (object_map, op_map) = multi_map_from_doc(&doc.map, &source, &target)?;
            Ok(Document::Multifunctor(MultifunctorData {
                name: doc.name,
                source,
                target,
                object_map,
                op_map,
            }))
        }
        "smfunctor" => {
            let doc: SmFunctorDoc = serde_json::from_str(text).map_err(CliError::parse)?;
            let source = permcat_from_doc(&doc.source)?;
            let target = permcat_from_doc(&doc.target)?;
            let (object_map, mor_map) = perm_map_from_doc(&doc.map, &source, &target)?;
            Ok(Document::SmFunctor(SmFunctorData {
                name: doc.name,
                source,
                target,
                object_map,
                mor_map,
            }))
        }
        "multinat" => {
            let doc: MultinatDoc = serde_json::from_str(text).map_err(CliError::parse)?;
            let source = multicategory_from_doc(&doc.source)?;
            let target = multicategory_from_doc(&doc.target)?;
            let from = multi_map_from_doc(&doc.from, &source, &target)?;
            let to = multi_map_from_doc(&doc.to, &source, &target)?;
            let components = keyed_table(
                &doc.components,
                "components",
                source.object_names(),
                |n| target.op_id(n),
            )?;
            Ok(Document::Multinat(MultinatData {
                name: doc.name,
                source,
                target,
                from,
                to,
                components,
            }))
        }
        "monoidalnat" => {
            let doc: MonoidalNatDoc = serde_json::from_str(text).map_err(CliError::parse)?;
            let source = permcat_from_doc(&doc.source)?;
            let target = permcat_from_doc(&doc.target)?;
            let from = perm_map_from_doc(&doc.from, &source, &target)?;
            let to = perm_map_from_doc(&doc.to, &source, &target)?;
            let components = keyed_table(
                &doc.components,
                "components",
                source.object_names(),
                |n| target.mor_id(n),
            )?;
            Ok(Document::MonoidalNat(MonoidalNatData {
                name: doc.name,
                source,
                target,
                from,
                to,
                components,
            }))
        }
        "free_truncation" => {
            let doc: FreeTruncationDoc = serde_json::from_str(text).map_err(CliError::parse)?;
            Ok(Document::Free(doc))
        }
        other => Err(CliError::Schema(format!(
            "unknown kind `{other}`, expected one of {}",
            KINDS.join(", ")
        ))),
    }
}

fn resolve<T>(found: Option<T>, what: &str, name: &str) -> Result<T, CliError> {
    found.ok_or_else(|| CliError::Structural(format!("unknown {what} `{name}`")))
}

/// Reads a table keyed by source names into a vector in source order.
fn keyed_table<T>(
    table: &BTreeMap<String, String>,
    what: &str,
    keys: &[impl AsRef<str>],
    lookup: impl Fn(&str) -> Option<T>,
) -> Result<Vec<T>, CliError> {
    for k in table.keys() {
        if !keys.iter().any(|n| n.as_ref() == k) {
            return Err(CliError::Structural(format!("{what} names unknown source entry `{k}`")));
        }
    }
    keys.iter()
        .map(|k| {
            let k = k.as_ref();
            let v = table
                .get(k)
                .ok_or_else(|| CliError::Structural(format!("{what} has no entry for `{k}`")))?;
            resolve(lookup(v), "target entry", v)
        })
        .collect()
}

fn multi_map_from_doc(
    doc: &MapDoc,
    source: &MulticategoryPresentation,
    target: &MulticategoryPresentation,
) -> Result<(Vec<ObjId>, Vec<OpId>), CliError> {
    let objects = keyed_table(&doc.objects, "object map", source.object_names(), |n| target.object_id(n))?;
    let op_names: Vec<&str> = source.op_decls().iter().map(|d| d.name.as_str()).collect();
    let ops = keyed_table(&doc.arrows, "operation map", &op_names, |n| target.op_id(n))?;
    Ok((objects, ops))
}

fn perm_map_from_doc(
    doc: &MapDoc,
    source: &PermCatPresentation,
    target: &PermCatPresentation,
) -> Result<(Vec<CObj>, Vec<MorId>), CliError> {
    let objects = keyed_table(&doc.objects, "object map", source.object_names(), |n| target.object_id(n))?;
    let mor_names: Vec<&str> = source.mor_decls().iter().map(|d| d.name.as_str()).collect();
    let mors = keyed_table(&doc.arrows, "morphism map", &mor_names, |n| target.mor_id(n))?;
    Ok((objects, mors))
}

pub fn multicategory_from_doc(doc: &MulticategoryDoc) -> Result<MulticategoryPresentation, CliError> {
    expect_kind(&doc.kind, "multicategory")?;
    let mut b = PresentationBuilder::new(doc.name.clone(), doc.arity_bound);
    for name in &doc.objects {
        b.object(name.clone())?;
    }
    let obj = |b: &PresentationBuilder, n: &str| resolve(b.object_id(n), "object", n);
    for op in &doc.operations {
        let output = obj(&b, &op.output)?;
        let inputs = op.inputs.iter().map(|n| obj(&b, n)).collect::<Result<Vec<_>, _>>()?;
        b.operation(op.name.clone(), output, &inputs)?;
    }
    let op = |b: &PresentationBuilder, n: &str| resolve(b.op_id(n), "operation", n);
    for u in &doc.units {
        let (c, o) = (obj(&b, &u.object)?, op(&b, &u.operation)?);
        b.unit(c, o)?;
    }
    for a in &doc.action {
        let sigma = Permutation::new(&a.permutation)?;
        let (o, r) = (op(&b, &a.operation)?, op(&b, &a.result)?);
        b.action(o, sigma, r)?;
    }
    for g in &doc.composition {
        let outer = op(&b, &g.outer)?;
        let inner = g.inner.iter().map(|n| op(&b, n)).collect::<Result<Vec<_>, _>>()?;
        let result = op(&b, &g.result)?;
        b.composition(outer, &inner, result)?;
    }
    Ok(b.build()?)
}

pub fn permcat_from_doc(doc: &PermcatDoc) -> Result<PermCatPresentation, CliError> {
    expect_kind(&doc.kind, "permcat")?;
    let mut b = PermCatBuilder::new(doc.name.clone());
    for name in &doc.objects {
        b.object(name.clone())?;
    }
    let obj = |b: &PermCatBuilder, n: &str| resolve(b.object_id(n), "object", n);
    for m in &doc.morphisms {
        let (s, t) = (obj(&b, &m.source)?, obj(&b, &m.target)?);
        b.morphism(m.name.clone(), s, t)?;
    }
    let mor = |b: &PermCatBuilder, n: &str| resolve(b.mor_id(n), "morphism", n);
    let e = obj(&b, &doc.unit)?;
    b.unit_object(e)?;
    for i in &doc.identities {
        let (x, m) = (obj(&b, &i.object)?, mor(&b, &i.morphism)?);
        b.identity(x, m)?;
    }
    for c in &doc.composition {
        let (g, f, r) = (mor(&b, &c.second)?, mor(&b, &c.first)?, mor(&b, &c.result)?);
        b.composition(g, f, r)?;
    }
    for s in &doc.object_sum {
        let (x, y, r) = (obj(&b, &s.left)?, obj(&b, &s.right)?, obj(&b, &s.result)?);
        b.object_sum(x, y, r)?;
    }
    for s in &doc.morphism_sum {
        let (x, y, r) = (mor(&b, &s.left)?, mor(&b, &s.right)?, mor(&b, &s.result)?);
        b.morphism_sum(x, y, r)?;
    }
    for s in &doc.symmetry {
        let (x, y, m) = (obj(&b, &s.left)?, obj(&b, &s.right)?, mor(&b, &s.morphism)?);
        b.symmetry(x, y, m)?;
    }
    Ok(b.build()?)
}

fn expect_kind(found: &str, expected: &str) -> Result<(), CliError> {
    if found == expected {
        Ok(())
    } else {
        Err(CliError::Schema(format!("expected kind `{expected}`, found `{found}`")))
    }
}

// ---- serialization ----

pub fn multicategory_doc(m: &MulticategoryPresentation) -> MulticategoryDoc {
    let obj = |c: &ObjId| m.object_name(*c).to_string();
    let op = |o: &OpId| m.op_decl(*o).name.clone();
    MulticategoryDoc {
        kind: "multicategory".into(),
        version: VERSION.into(),
        name: m.name().to_string(),
        arity_bound: m.presented_arity(),
        objects: m.object_names().to_vec(),
        operations: m
            .op_decls()
            .iter()
            .map(|d| OperationDoc {
                name: d.name.clone(),
                output: obj(&d.output),
                inputs: d.inputs.iter().map(obj).collect(),
            })
            .collect(),
        units: m
            .object_ids()
            .map(|c| UnitDoc {
                object: obj(&c),
                operation: op(&m.unit(&c)),
            })
            .collect(),
        action: m
            .op_ids()
            .flat_map(|o| {
                m.action_entries(o)
                    .map(|(sigma, r)| ActionDoc {
                        operation: op(&o),
                        permutation: sigma.values(),
                        result: op(&r),
                    })
                    .collect::<Vec<_>>()
            })
            .collect(),
        composition: m
            .composition_entries()
            .map(|(outer, inner, r)| CompositionDoc {
                outer: op(&outer),
                inner: inner.iter().map(op).collect(),
                result: op(&r),
            })
            .collect(),
    }
}

pub fn permcat_doc(c: &PermCatPresentation) -> PermcatDoc {
    use freeperm::permcat::PermutativeCategory;
    let obj = |x: CObj| c.object_name(x).to_string();
    let mor = |m: MorId| c.mor_decl(m).name.clone();
    let objects: Vec<CObj> = c.object_ids().collect();
    let mors: Vec<MorId> = c.mor_ids().collect();
    let mut object_sum = Vec::new();
    let mut symmetry = Vec::new();
    for &x in &objects {
        for &y in &objects {
            object_sum.push(ObjectSumDoc {
                left: obj(x),
                right: obj(y),
                result: obj(c.sum_obj(&x, &y)),
            });
            symmetry.push(SymmetryDoc {
                left: obj(x),
                right: obj(y),
                morphism: mor(c.symmetry(&x, &y)),
            });
        }
    }
    let mut morphism_sum = Vec::new();
    for &a in &mors {
        for &b in &mors {
            if let Ok(r) = c.sum_mor(&a, &b) {
                morphism_sum.push(MorphismSumDoc {
                    left: mor(a),
                    right: mor(b),
                    result: mor(r),
                });
            }
        }
    }
    PermcatDoc {
        kind: "permcat".into(),
        version: VERSION.into(),
        name: c.name().to_string(),
        objects: c.object_names().to_vec(),
        morphisms: c
            .mor_decls()
            .iter()
            .map(|d| MorphismDoc {
                name: d.name.clone(),
                source: obj(d.source),
                target: obj(d.target),
            })
            .collect(),
        unit: obj(c.unit_obj()),
        identities: objects
            .iter()
            .map(|&x| IdentityDoc {
                object: obj(x),
                morphism: mor(c.identity(&x)),
            })
            .collect(),
        composition: c
            .composition_entries()
            .map(|(g, f, r)| MorCompositionDoc {
                second: mor(g),
                first: mor(f),
                result: mor(r),
            })
            .collect(),
        object_sum,
        morphism_sum,
        symmetry,
    }
}

fn multi_map_doc(
    source: &MulticategoryPresentation,
    target: &MulticategoryPresentation,
    objects: &[ObjId],
    ops: &[OpId],
) -> MapDoc {
    MapDoc {
        objects: source
            .object_ids()
            .map(|c| (source.object_name(c).to_string(), target.object_name(objects[c.0]).to_string()))
            .collect(),
        arrows: source
            .op_ids()
            .map(|o| (source.op_decl(o).name.clone(), target.op_decl(ops[o.0]).name.clone()))
            .collect(),
    }
}

fn perm_map_doc(
    source: &PermCatPresentation,
    target: &PermCatPresentation,
    objects: &[CObj],
    mors: &[MorId],
) -> MapDoc {
    MapDoc {
        objects: source
            .object_ids()
            .map(|x| (source.object_name(x).to_string(), target.object_name(objects[x.0]).to_string()))
            .collect(),
        arrows: source
            .mor_ids()
            .map(|m| (source.mor_decl(m).name.clone(), target.mor_decl(mors[m.0]).name.clone()))
            .collect(),
    }
}

/// The wire form of a document.
pub fn to_value(doc: &Document) -> serde_json::Value {
    let v = match doc {
        Document::Multicategory(m) => serde_json::to_value(multicategory_doc(m)),
        Document::Permcat(c) => serde_json::to_value(permcat_doc(c)),
        Document::Multifunctor(d) => serde_json::to_value(MultifunctorDoc {
            kind: "multifunctor".into(),
            version: VERSION.into(),
            name: d.name.clone(),
            source: multicategory_doc(&d.source),
            target: multicategory_doc(&d.target),
            map: multi_map_doc(&d.source, &d.target, &d.object_map, &d.op_map),
        }),
        Document::SmFunctor(d) => serde_json::to_value(SmFunctorDoc {
            kind: "smfunctor".into(),
            version: VERSION.into(),
            name: d.name.clone(),
            source: permcat_doc(&d.source),
            target: permcat_doc(&d.target),
            map: perm_map_doc(&d.source, &d.target, &d.object_map, &d.mor_map),
        }),
        Document::Multinat(d) => serde_json::to_value(MultinatDoc {
            kind: "multinat".into(),
            version: VERSION.into(),
            name: d.name.clone(),
            source: multicategory_doc(&d.source),
            target: multicategory_doc(&d.target),
            from: multi_map_doc(&d.source, &d.target, &d.from.0, &d.from.1),
            to: multi_map_doc(&d.source, &d.target, &d.to.0, &d.to.1),
            components: d
                .source
                .object_ids()
                .map(|c| {
                    (
                        d.source.object_name(c).to_string(),
                        d.target.op_decl(d.components[c.0]).name.clone(),
                    )
                })
                .collect(),
        }),
        Document::MonoidalNat(d) => serde_json::to_value(MonoidalNatDoc {
            kind: "monoidalnat".into(),
            version: VERSION.into(),
            name: d.name.clone(),
            source: permcat_doc(&d.source),
            target: permcat_doc(&d.target),
            from: perm_map_doc(&d.source, &d.target, &d.from.0, &d.from.1),
            to: perm_map_doc(&d.source, &d.target, &d.to.0, &d.to.1),
            components: d
                .source
                .object_ids()
                .map(|x| {
                    (
                        d.source.object_name(x).to_string(),
                        d.target.mor_decl(d.components[x.0]).name.clone(),
                    )
                })
                .collect(),
        }),
        Document::Free(d) => serde_json::to_value(d),
    };
    v.expect("documents serialize to JSON")
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(doc)).expect("documents serialize to JSON");
    s.push('\n');
    s
}
