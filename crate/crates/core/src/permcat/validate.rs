//! Exhaustive law checks for permutative categories.

use crate::report::{FamilyRecord, VerificationReport, Witness};
use crate::verify::{fan_out, Bounds};

use super::homs::{Compositions, HomIndex, BROKEN, TRUNCATED};
use super::PermutativeCategory;

pub const CATEGORY_FAMILIES: &[&str] = &[
    "hom-sets",
    "identity-typing",
    "composition-typing",
    "left-unity",
    "right-unity",
    "associativity",
];

pub const PERMCAT_FAMILIES: &[&str] = &[
    "hom-sets",
    "identity-typing",
    "composition-typing",
    "left-unity",
    "right-unity",
    "associativity",
    "object-sum",
    "sum-typing",
    "sum-strictness",
    "sum-functoriality",
    "symmetry-typing",
    "symmetry-naturality",
    "symmetry-involution",
    "hexagon",
    "unit-symmetry",
];

pub(crate) fn inst(entries: &[(&str, String)]) -> Vec<(String, String)> {
    entries.iter().map(|(r, v)| (r.to_string(), v.clone())).collect()
}

/// Category laws only: hom sets, identities, composition typing, unity and
/// associativity over every composable triple of enumerated objects.
pub fn validate_category_laws<C: PermutativeCategory>(c: &C, bounds: &Bounds) -> VerificationReport {
    let mut report = VerificationReport::with_families(subject(c), CATEGORY_FAMILIES);
    category_laws(c, bounds, &mut report);
    report.finish()
}

/// Every permutative-category law, exhaustively over the enumerated objects.
/// Instances whose sums leave the enumerated part are counted as unchecked.
pub fn validate_permcat<C: PermutativeCategory>(c: &C, bounds: &Bounds) -> VerificationReport {
    let mut report = VerificationReport::with_families(subject(c), PERMCAT_FAMILIES);
    let (homs, comps) = category_laws(c, bounds, &mut report);
    monoidal_laws(c, bounds, &homs, &comps, &mut report);
    report.finish()
}

fn subject<C: PermutativeCategory>(_c: &C) -> &'static str {
    "permutative category"
}

/// Compares two composite indices in the same hom set.
fn law_by_index<C: PermutativeCategory>(
    fam: &mut FamilyRecord,
    c: &C,
    target: Option<&[C::Mor]>,
    lhs: u32,
    rhs: u32,
    instance: impl FnOnce() -> Vec<(String, String)>,
) {
    if lhs == TRUNCATED || rhs == TRUNCATED {
        fam.skip();
    } else if lhs == BROKEN || rhs == BROKEN {
        fam.fail(Witness::new(instance(), "a composite is undefined"));
    } else if lhs != rhs {
        let show = |i: u32| {
            target
                .and_then(|ms| ms.get(i as usize))
                .map_or_else(|| format!("#{i}"), |m| c.describe_mor(m))
        };
        fam.fail(Witness::new(instance(), format!("{} ≠ {}", show(lhs), show(rhs))));
    } else {
        fam.pass();
    }
}

pub(crate) fn category_laws<C: PermutativeCategory>(
    c: &C,
    bounds: &Bounds,
    report: &mut VerificationReport,
) -> (HomIndex<C>, Compositions) {
    let p = bounds.parallel;
    let homs = HomIndex::build(c, p, report.family("hom-sets"));
    let n = homs.len();

    let mut ids = Vec::with_capacity(n);
    {
        let fam = report.family("identity-typing");
        for i in 0..n {
            let x = &homs.objects[i];
            let id = c.identity(x);
            let idx = homs.index_of(i, i, &id);
            match idx {
                TRUNCATED => fam.skip(),
                BROKEN => fam.fail(Witness::new(
                    inst(&[("x", c.describe_obj(x)), ("id", c.describe_mor(&id))]),
                    "identity is not in hom(x, x)",
                )),
                _ => fam.pass(),
            }
            ids.push(idx);
        }
    }

    let comps = Compositions::build(c, &homs, p, report.family("composition-typing"));

    for x in 0..n {
        for y in 0..n {
            let Some(fs) = homs.mors(x, y) else { continue };
            for (fi, f) in fs.iter().enumerate() {
                let fi = fi as u32;
                let describe = || inst(&[("f", c.describe_mor(f))]);
                let left = if ids[y] >= BROKEN {
                    ids[y]
                } else {
                    comps.table(x, y, y).map_or(BROKEN, |t| t.get(ids[y], fi))
                };
                law_by_index(report.family("left-unity"), c, Some(fs), left, fi, describe);
                let right = if ids[x] >= BROKEN {
                    ids[x]
                } else {
                    comps.table(x, x, y).map_or(BROKEN, |t| t.get(fi, ids[x]))
                };
                law_by_index(report.family("right-unity"), c, Some(fs), right, fi, describe);
            }
        }
    }

    let nonempty = |a: usize, b: usize| homs.mors(a, b).is_some_and(|m| !m.is_empty());
    let mut quads = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if !nonempty(x, y) {
                continue;
            }
            for z in 0..n {
                if !nonempty(y, z) {
                    continue;
                }
                for w in 0..n {
                    if nonempty(z, w) {
                        quads.push((x, y, z, w));
                    }
                }
            }
        }
    }
    let template = VerificationReport::with_families("", &["associativity"]);
    let assoc = fan_out(p, &quads, &template, |&(x, y, z, w), part| {
        let fam = part.family("associativity");
        let (Some(t_xyz), Some(t_yzw)) = (comps.table(x, y, z), comps.table(y, z, w)) else {
            return;
        };
        let t_xyw = comps.table(x, y, w);
        let t_xzw = comps.table(x, z, w);
        let fs = homs.mors(x, y).unwrap_or(&[]);
        let gs = homs.mors(y, z).unwrap_or(&[]);
        let hs = homs.mors(z, w).unwrap_or(&[]);
        for hi in 0..hs.len() as u32 {
            for gi in 0..gs.len() as u32 {
                let hg = t_yzw.get(hi, gi);
                for fi in 0..fs.len() as u32 {
                    let gf = t_xyz.get(gi, fi);
                    let lhs = compose_index(t_xyw, hg, fi);
                    let rhs = compose_index(t_xzw, hi, gf);
                    law_by_index(fam, c, homs.mors(x, w), lhs, rhs, || {
                        inst(&[
                            ("h", c.describe_mor(&hs[hi as usize])),
                            ("g", c.describe_mor(&gs[gi as usize])),
                            ("f", c.describe_mor(&fs[fi as usize])),
                        ])
                    });
                }
            }
        }
    });
    report.absorb(assoc);
    (homs, comps)
}

fn compose_index(table: Option<&super::homs::CompositionTable>, second: u32, first: u32) -> u32 {
    if second >= BROKEN {
        return second;
    }
    if first >= BROKEN {
        return first;
    }
    table.map_or(BROKEN, |t| t.get(second, first))
}

fn monoidal_laws<C: PermutativeCategory>(
    c: &C,
    bounds: &Bounds,
    homs: &HomIndex<C>,
    comps: &Compositions,
    report: &mut VerificationReport,
) {
    let objs = &homs.objects;
    let e = c.unit_obj();
    let show_obj = |x: &C::Obj| c.describe_obj(x);
    let show_mor = |m: &C::Mor| c.describe_mor(m);

    // objects
    {
        let fam = report.family("object-sum");
        if !c.enumerates(&e) {
            fam.skip();
        }
        for x in objs {
            fam.check_eq(Ok(c.sum_obj(&e, x)), Ok(x.clone()), || inst(&[("x", show_obj(x))]), show_obj);
            fam.check_eq(Ok(c.sum_obj(x, &e)), Ok(x.clone()), || inst(&[("x", show_obj(x))]), show_obj);
            for y in objs {
                let xy = c.sum_obj(x, y);
                for z in objs {
                    let yz = c.sum_obj(y, z);
                    let lhs = c.sum_obj(&xy, z);
                    if !c.enumerates(&lhs) {
                        fam.skip();
                        continue;
                    }
                    fam.check_eq(
                        Ok(lhs),
                        Ok(c.sum_obj(x, &yz)),
                        || inst(&[("x", show_obj(x)), ("y", show_obj(y)), ("z", show_obj(z))]),
                        show_obj,
                    );
                }
            }
        }
    }

    let mors = homs.all_morphisms();
    let p = bounds.parallel;

    // morphism sums: typing, unit strictness, associativity
    let id_e = c.identity(&e);
    let template = VerificationReport::with_families("", &["sum-typing", "sum-strictness"]);
    let sums = fan_out(p, &mors, &template, |(ax, ay, a), part| {
        let (sa, ta) = (&objs[*ax], &objs[*ay]);
        {
            let fam = part.family("sum-strictness");
            let w = || inst(&[("a", show_mor(a))]);
            fam.check_eq(c.sum_mor(&id_e, a), Ok(a.clone()), w, show_mor);
            fam.check_eq(c.sum_mor(a, &id_e), Ok(a.clone()), w, show_mor);
        }
        for (bx, by, b) in &mors {
            let (s_ab, t_ab) = (c.sum_obj(sa, &objs[*bx]), c.sum_obj(ta, &objs[*by]));
            let (Some(si), Some(ti)) = (homs.position(&s_ab), homs.position(&t_ab)) else {
                part.family("sum-typing").skip();
                continue;
            };
            let ab = match c.sum_mor(a, b) {
                Ok(ab) => ab,
                Err(err) => {
                    part.family("sum-typing")
                        .error(err, || inst(&[("a", show_mor(a)), ("b", show_mor(b))]));
                    continue;
                }
            };
            let idx = homs.index_of(si, ti, &ab);
            match idx {
                TRUNCATED => part.family("sum-typing").skip(),
                BROKEN => part.family("sum-typing").fail(Witness::new(
                    inst(&[("a", show_mor(a)), ("b", show_mor(b))]),
                    format!(
                        "{} is not in hom({}, {})",
                        show_mor(&ab),
                        show_obj(&s_ab),
                        show_obj(&t_ab)
                    ),
                )),
                _ => part.family("sum-typing").pass(),
            }
            for (cx, cy, m) in &mors {
                let s = c.sum_obj(&s_ab, &objs[*cx]);
                let t = c.sum_obj(&t_ab, &objs[*cy]);
                if !c.enumerates(&s) || !c.enumerates(&t) {
                    continue;
                }
                let lhs = c.sum_mor(&ab, m);
                let rhs = c.sum_mor(b, m).and_then(|bc| c.sum_mor(a, &bc));
                part.family("sum-strictness").check_eq(
                    lhs,
                    rhs,
                    || inst(&[("a", show_mor(a)), ("b", show_mor(b)), ("c", show_mor(m))]),
                    show_mor,
                );
            }
        }
    });
    report.absorb(sums);

    // ⊕ as a functor
    {
        let fam = report.family("sum-functoriality");
        for x in objs {
            for y in objs {
                let xy = c.sum_obj(x, y);
                if !c.enumerates(&xy) {
                    fam.skip();
                    continue;
                }
                fam.check_eq(
                    c.sum_mor(&c.identity(x), &c.identity(y)),
                    Ok(c.identity(&xy)),
                    || inst(&[("x", show_obj(x)), ("y", show_obj(y))]),
                    show_mor,
                );
            }
        }
    }
    let n = homs.len();
    let mut shapes: Vec<(usize, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if comps.table(x, y, z).is_some() {
                    shapes.push((x, y, z));
                }
            }
        }
    }
    let template = VerificationReport::with_families("", &["sum-functoriality"]);
    let functoriality = fan_out(p, &shapes, &template, |&(x, y, z), part| {
        let fam = part.family("sum-functoriality");
        for &(x2, y2, z2) in &shapes {
            let sx = c.sum_obj(&objs[x], &objs[x2]);
            let sy = c.sum_obj(&objs[y], &objs[y2]);
            let sz = c.sum_obj(&objs[z], &objs[z2]);
            if !(c.enumerates(&sx) && c.enumerates(&sy) && c.enumerates(&sz)) {
                continue;
            }
            let (t1, t2) = (comps.table(x, y, z), comps.table(x2, y2, z2));
            let (Some(t1), Some(t2)) = (t1, t2) else { continue };
            let fs = homs.mors(x, y).unwrap_or(&[]);
            let gs = homs.mors(y, z).unwrap_or(&[]);
            let fs2 = homs.mors(x2, y2).unwrap_or(&[]);
            let gs2 = homs.mors(y2, z2).unwrap_or(&[]);
            let (Some(h1), Some(h2)) = (homs.mors(x, z), homs.mors(x2, z2)) else {
                fam.skip();
                continue;
            };
            for (gi, g) in gs.iter().enumerate() {
                for (fi, f) in fs.iter().enumerate() {
                    let gf = t1.get(gi as u32, fi as u32);
                    if gf >= BROKEN {
                        continue;
                    }
                    for (gi2, g2) in gs2.iter().enumerate() {
                        for (fi2, f2) in fs2.iter().enumerate() {
                            let gf2 = t2.get(gi2 as u32, fi2 as u32);
                            if gf2 >= BROKEN {
                                continue;
                            }
                            let lhs = c
                                .sum_mor(g, g2)
                                .and_then(|gg| c.sum_mor(f, f2).and_then(|ff| c.compose(&gg, &ff)));
                            let rhs = c.sum_mor(&h1[gf as usize], &h2[gf2 as usize]);
                            fam.check_eq(
                                lhs,
                                rhs,
                                || {
                                    inst(&[
                                        ("g", show_mor(g)),
                                        ("f", show_mor(f)),
                                        ("g'", show_mor(g2)),
                                        ("f'", show_mor(f2)),
                                    ])
                                },
                                show_mor,
                            );
                        }
                    }
                }
            }
        }
    });
    report.absorb(functoriality);

    // symmetry on objects
    for x in objs {
        for y in objs {
            let (xy, yx) = (c.sum_obj(x, y), c.sum_obj(y, x));
            let w = || inst(&[("x", show_obj(x)), ("y", show_obj(y))]);
            let (Some(i), Some(j)) = (homs.position(&xy), homs.position(&yx)) else {
                report.family("symmetry-typing").skip();
                report.family("symmetry-involution").skip();
                continue;
            };
            let xi = c.symmetry(x, y);
            match homs.index_of(i, j, &xi) {
                TRUNCATED => report.family("symmetry-typing").skip(),
                BROKEN => report.family("symmetry-typing").fail(Witness::new(
                    w(),
                    format!("{} is not in hom({}, {})", show_mor(&xi), show_obj(&xy), show_obj(&yx)),
                )),
                _ => report.family("symmetry-typing").pass(),
            }
            report.family("symmetry-involution").check_eq(
                c.compose(&c.symmetry(y, x), &xi),
                Ok(c.identity(&xy)),
                w,
                show_mor,
            );
            for z in objs {
                let yz = c.sum_obj(y, z);
                let all = c.sum_obj(&xy, z);
                if !c.enumerates(&all) {
                    report.family("hexagon").skip();
                    continue;
                }
                let lhs = Ok(c.symmetry(x, &yz));
                let rhs = c
                    .sum_mor(&c.identity(y), &c.symmetry(x, z))
                    .and_then(|right| {
                        c.sum_mor(&xi, &c.identity(z))
                            .and_then(|left| c.compose(&right, &left))
                    });
                report.family("hexagon").check_eq(
                    lhs,
                    rhs,
                    || inst(&[("x", show_obj(x)), ("y", show_obj(y)), ("z", show_obj(z))]),
                    show_mor,
                );
            }
        }
        let fam = report.family("unit-symmetry");
        let w = || inst(&[("x", show_obj(x))]);
        fam.check_eq(Ok(c.symmetry(x, &e)), Ok(c.identity(x)), w, show_mor);
        fam.check_eq(Ok(c.symmetry(&e, x)), Ok(c.identity(x)), w, show_mor);
    }

    // naturality of ξ
    let template = VerificationReport::with_families("", &["symmetry-naturality"]);
    let naturality = fan_out(p, &mors, &template, |(ax, ay, a), part| {
        let fam = part.family("symmetry-naturality");
        let (x, x2) = (&objs[*ax], &objs[*ay]);
        for (bx, by, b) in &mors {
            let (y, y2) = (&objs[*bx], &objs[*by]);
            if !c.enumerates(&c.sum_obj(x, y)) || !c.enumerates(&c.sum_obj(x2, y2)) {
                fam.skip();
                continue;
            }
            let lhs = c.sum_mor(b, a).and_then(|ba| c.compose(&ba, &c.symmetry(x, y)));
            let rhs = c.sum_mor(a, b).and_then(|ab| c.compose(&c.symmetry(x2, y2), &ab));
            fam.check_eq(
                lhs,
                rhs,
                || inst(&[("a", show_mor(a)), ("b", show_mor(b))]),
                show_mor,
            );
        }
    });
    report.absorb(naturality);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteMonoid;
    use crate::permcat::builtin::{builtin_permcat, discrete_commutative_monoid, sign_category};
    use crate::permcat::presentation::CObj;

    #[test]
    fn builtins_validate() {
        for kind in [
            "discrete_commutative_monoid(Z/2)",
            "discrete_commutative_monoid(max)",
            "group_enriched(2,Z/3)",
            "group_enriched(1,Z/2)",
            "group_enriched(3,Z/2)",
        ] {
            let c = builtin_permcat(kind).unwrap();
            let r = validate_permcat(&c, &Bounds::default());
            assert!(r.passed(), "{kind}\n{}", r.render_text());
            assert_eq!(r.status, crate::report::Status::Pass);
        }
        let r = validate_permcat(&sign_category(), &Bounds::default());
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn non_inverse_symmetry_detected() {
        let c = sign_category();
        let one = c.object_id("1").unwrap();
        let zero = c.object_id("0").unwrap();
        let minus1 = c.mor_id("1@1").unwrap();
        let bad = c.with_symmetry(zero, one, minus1);
        let r = validate_permcat(&bad, &Bounds::default());
        let w = r.witness("symmetry-involution").expect("detected");
        assert_eq!(w.get("x"), Some("0"));
        assert_eq!(w.get("y"), Some("1"));
    }

    #[test]
    fn parallel_report_matches_sequential() {
        let c = discrete_commutative_monoid(&FiniteMonoid::cyclic(3)).unwrap();
        let a = validate_permcat(&c, &Bounds::default());
        let b = validate_permcat(&c, &Bounds::default().with_parallel(4));
        assert_eq!(a, b);
        assert_eq!(c.objects(), vec![CObj(0), CObj(1), CObj(2)]);
    }
}
