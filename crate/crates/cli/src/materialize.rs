//! Finite tables for `F(M)` and `End(C)` within bounds.

use freeperm::endo::end_of_permcat;
use freeperm::free::{free_view, FreeView};
use freeperm::multicat::{materialize, MulticategoryPresentation, Multicategory};
use freeperm::permcat::{PermCatPresentation, PermutativeCategory};

use crate::document::{FreeHomDoc, FreeMorphismDoc, FreeTruncationDoc, VERSION};
use crate::error::CliError;

/// Objects of `F(M)` up to length `profile_bound` and every hom set between
/// them. Hom sets that need operations beyond the arity `M` presents are
/// left out and reported as warnings.
pub fn free_document(
    m: &MulticategoryPresentation,
    profile_bound: usize,
) -> Result<(FreeTruncationDoc, Vec<String>), CliError> {
    let fm: FreeView<&MulticategoryPresentation> = free_view(m, profile_bound);
    let objects = fm.objects();
    let mut counts = vec![vec![0usize; profile_bound + 1]; profile_bound + 1];
    let mut homs = Vec::new();
    let mut warnings = Vec::new();
    for (i, xs) in objects.iter().enumerate() {
        for (j, ys) in objects.iter().enumerate() {
            let hom = match fm.hom(xs, ys) {
                Ok(h) => h,
                Err(e) if e.is_truncation() => {
                    warnings.push(format!(
                        "hom({}, {}) not listed: {e}",
                        fm.describe_obj(xs),
                        fm.describe_obj(ys)
                    ));
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            counts[xs.len()][ys.len()] += hom.len();
            if hom.is_empty() {
                continue;
            }
            homs.push(FreeHomDoc {
                source: i,
                target: j,
                morphisms: hom
                    .iter()
                    .map(|f| FreeMorphismDoc {
                        index_map: f.index_map().values(),
                        ops: f.ops().iter().map(|op| m.describe_op(op)).collect(),
                    })
                    .collect(),
            });
        }
    }
    let doc = FreeTruncationDoc {
        kind: "free_truncation".into(),
        version: VERSION.into(),
        name: format!("F({})", m.name()),
        base: m.name().to_string(),
        profile_bound,
        objects: objects
            .iter()
            .map(|xs| xs.iter().map(|c| m.describe_obj(c)).collect())
            .collect(),
        counts_by_length: counts,
        homs,
    };
    Ok((doc, warnings))
}

/// `End(C)` as a table presentation up to arity `arity`.
pub fn end_document(c: &PermCatPresentation, arity: usize) -> Result<MulticategoryPresentation, CliError> {
    Ok(materialize(&end_of_permcat(c), format!("End({})", c.name()), arity)?)
}
