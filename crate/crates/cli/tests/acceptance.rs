//! The acceptance checklist. Prints one PASS/FAIL line per criterion to
//! stderr; every comparison is exact.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::fs;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;

use freeperm::adjunction::{check_end_triangle, check_free_triangle, check_right_adjoint};
use freeperm::combinatorics::{profiles, sigma_kgf, FinSetMap, Permutation};
use freeperm::endo::end_of_permcat;
use freeperm::free::free_view;
use freeperm::multicat::fixtures::{random_multicategory, two_object_example};
use freeperm::multicat::functor::MULTIFUNCTOR_FAMILIES;
use freeperm::multicat::transformation::MULTINAT_FAMILIES;
use freeperm::multicat::validate::MULTICATEGORY_FAMILIES;
use freeperm::multicat::{
    empty_multicategory, endomorphism_operad, enumerate_multifunctors, initial_operad, terminal_multicategory,
    validate_multicategory, Multicategory,
};
use freeperm::permcat::functor::SMFUNCTOR_FAMILIES;
use freeperm::permcat::transformation::MONOIDAL_NAT_FAMILIES;
use freeperm::permcat::validate::{validate_category_laws, PERMCAT_FAMILIES};
use freeperm::permcat::{coherence_morphism_with, Decomposition, PermutativeCategory};
use freeperm::{Bounds, VerificationReport};
use freeperm_cli::commands::{self, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};
use freeperm_cli::examples::builtin_documents;
use freeperm_cli::{parse_document, to_json, Document, Format, Options};
use support::{brute_sigma, builtin_multicategories, builtin_permcats, factorial, maps, mutation, two_cell};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn failures(r: &VerificationReport) -> u64 {
    r.families.iter().map(|f| f.failed).sum()
}

fn clean(label: &str, r: &VerificationReport) -> Result<u64, String> {
    ensure(r.passed() && failures(r) == 0 && r.total_checked() > 0, || {
        format!("{label}: {} failures\n{}", failures(r), r.render_text())
    })?;
    Ok(r.total_checked())
}

fn multicategory_axioms() -> Outcome {
    let b = Bounds::new(4, 4);
    let mut checked = 0;
    checked += clean("Mtu", &validate_multicategory(&initial_operad(), &b))?;
    checked += clean("Mterm(4)", &validate_multicategory(&terminal_multicategory(4), &b))?;
    for c in builtin_permcats() {
        let end = end_of_permcat(&c);
        checked += clean(&format!("End({})", c.name()), &validate_multicategory(&end, &b))?;
        for x in end.objects() {
            let op = endomorphism_operad(&end, x).map_err(|e| e.to_string())?;
            checked += clean(&format!("End({}) at {x:?}", c.name()), &validate_multicategory(&op, &b))?;
        }
    }
    Ok(format!("{checked} instances, 0 failures"))
}

fn sigma_oracle() -> Outcome {
    let mut triples = 0;
    for r in 0..=4 {
        for s in 0..=4 {
            for t in 0..=4 {
                for fv in maps(r, s) {
                    for gv in maps(s, t) {
                        let f = FinSetMap::from_zero_based(s, fv.clone()).map_err(|e| e.to_string())?;
                        let g = FinSetMap::from_zero_based(t, gv.clone()).map_err(|e| e.to_string())?;
                        for k in 0..t {
                            let found = brute_sigma(&fv, &gv, k);
                            let direct = sigma_kgf(&f, &g, k + 1).map_err(|e| e.to_string())?;
                            ensure(found.len() == 1 && direct.images0() == &found[0][..], || {
                                format!("f={fv:?} g={gv:?} k={}", k + 1)
                            })?;
                            triples += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{triples} triples"))
}

fn free_counts() -> Outcome {
    let mterm = terminal_multicategory(4);
    let star = mterm.object_ids().next().unwrap();
    let mtu = initial_operad();
    let one = mtu.object_ids().next().unwrap();
    let fterm = free_view(&mterm, 4);
    let ftu = free_view(&mtu, 4);
    for r in 0..=4 {
        for s in 0..=4 {
            let n = fterm.hom(&vec![star; r], &vec![star; s]).map_err(|e| e.to_string())?.len();
            ensure(n == s.pow(r as u32), || format!("|F(Mterm)({r},{s})| = {n}"))?;
            let n = ftu.hom(&vec![one; r], &vec![one; s]).map_err(|e| e.to_string())?.len();
            let expected = if r == s { factorial(r) } else { 0 };
            ensure(n == expected, || format!("|F(Mtu)({r},{s})| = {n}"))?;
        }
    }
    let empty = empty_multicategory();
    let fe = free_view(&empty, 4);
    let objects = fe.objects();
    ensure(objects.len() == 1, || format!("F(empty) has {} objects", objects.len()))?;
    let mors: usize = objects
        .iter()
        .flat_map(|x| objects.iter().map(move |y| (x, y)))
        .map(|(x, y)| fe.hom(x, y).map(|h| h.len()).unwrap_or(0))
        .sum();
    ensure(mors == 1, || format!("F(empty) has {mors} morphisms"))?;
    Ok("50 hom-set counts and F(empty) exact".into())
}

fn free_associativity() -> Outcome {
    let b = Bounds::new(3, 3);
    let mut ms = vec![initial_operad(), terminal_multicategory(3)];
    ms.extend((0..20).map(|seed| random_multicategory(seed, 3)));
    let mut triples = 0;
    for m in &ms {
        ensure(m.objects().len() <= 2, || format!("{} has too many objects", m.name()))?;
        let r = validate_category_laws(&free_view(m, 3), &b);
        clean(m.name(), &r)?;
        triples += r.families.iter().find(|f| f.name == "associativity").map_or(0, |f| f.checked);
    }
    ensure(triples > 0, || "no composable triples".into())?;
    Ok(format!("{} multicategories, {triples} triples", ms.len()))
}

fn triangles() -> Outcome {
    let b = Bounds::new(3, 3);
    let mut checked = 0;
    for m in builtin_multicategories() {
        checked += clean(&format!("free triangle on {}", m.name()), &check_free_triangle(m.clone(), &b))?;
    }
    for c in builtin_permcats() {
        checked += clean(&format!("End triangle on {}", c.name()), &check_end_triangle(c.clone(), &b))?;
    }
    Ok(format!("{checked} instances"))
}

fn right_adjoint() -> Outcome {
    let b = Bounds::new(3, 3);
    let mut checked = 0;
    for c in builtin_permcats() {
        let r = check_right_adjoint(c.clone(), &b);
        checked += clean(c.name(), &r)?;
        for fam in ["epsilon-rho", "alpha-epsilon", "alpha-rho", "alpha/naturality"] {
            ensure(r.families.iter().any(|f| f.name == fam && f.checked > 0), || {
                format!("{}: family {fam} not exercised", c.name())
            })?;
        }
    }
    Ok(format!("{checked} instances"))
}

fn coherence() -> Outcome {
    let mut checked = 0;
    for c in builtin_permcats() {
        let objects = c.objects();
        for n in 0..=4 {
            for xs in profiles(&objects, n) {
                for sigma in Permutation::all(n) {
                    let a = coherence_morphism_with(&c, &xs, &sigma, Decomposition::BubbleSort)
                        .map_err(|e| e.to_string())?;
                    for d in [Decomposition::InsertionSort, Decomposition::Transpositions] {
                        let b = coherence_morphism_with(&c, &xs, &sigma, d).map_err(|e| e.to_string())?;
                        ensure(a == b, || format!("{}: {xs:?} {sigma:?} {d:?}", c.name()))?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} permutations"))
}

fn two_category() -> Outcome {
    let mterm = terminal_multicategory(3);
    let mut count = 0;
    for m in [initial_operad(), two_object_example(3)] {
        let fs = enumerate_multifunctors(&m, &mterm, &two_cell::B).map_err(|e| e.to_string())?;
        ensure((1..=2).contains(&fs.len()), || format!("{} multifunctors", fs.len()))?;
        count += two_cell::laws(&m, &mterm, &mterm);
    }
    Ok(format!("{count} instances"))
}

fn mutation_sensitivity() -> Outcome {
    let runs: [(&str, fn() -> mutation::Coverage, &[&str]); 6] = [
        ("multicategory", mutation::multicategory_coverage, MULTICATEGORY_FAMILIES),
        ("permcat", mutation::permcat_coverage, PERMCAT_FAMILIES),
        ("multifunctor", mutation::multifunctor_coverage, MULTIFUNCTOR_FAMILIES),
        ("multinat", mutation::multinat_coverage, MULTINAT_FAMILIES),
        ("smfunctor", mutation::smfunctor_coverage, SMFUNCTOR_FAMILIES),
        ("monoidal nat", mutation::monoidal_nat_coverage, MONOIDAL_NAT_FAMILIES),
    ];
    let mut families = 0;
    for (kind, run, names) in runs {
        let missing = run().missing(names);
        ensure(missing.is_empty(), || format!("{kind}: uncaught {missing:?}"))?;
        families += names.len();
    }
    Ok(format!("{families} families"))
}

fn cli_contract() -> Outcome {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let opts = |format| Options {
        format,
        bounds: Bounds::new(3, 3),
    };
    let docs = builtin_documents();
    for (stem, doc) in &docs {
        let text = to_json(doc);
        let back = parse_document(&text).map_err(|e| format!("{stem}: {e}"))?;
        ensure(&back == doc && to_json(&back) == text, || format!("{stem}: round trip"))?;
        let stored = fs::read_to_string(golden.join(format!("{stem}.json"))).map_err(|e| format!("{stem}: {e}"))?;
        ensure(stored == text, || format!("{stem}: golden document differs"))?;
        if matches!(doc, Document::Free(_)) {
            continue;
        }
        for (format, ext) in [(Format::Text, "txt"), (Format::Json, "json")] {
            let a = commands::validate(&text, &opts(format)).map_err(|e| e.to_string())?;
            let b = commands::validate(&text, &opts(format)).map_err(|e| e.to_string())?;
            let stored = fs::read_to_string(golden.join(format!("{stem}.report.{ext}"))).map_err(|e| e.to_string())?;
            ensure(a.code == EXIT_PASS && a.stdout == b.stdout && a.stdout == stored, || {
                format!("{stem}: {ext} report not stable")
            })?;
        }
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).map(|_| p).map_err(|e| e.to_string())
    };
    let doc = |stem: &str| to_json(&docs.iter().find(|(s, _)| s == stem).unwrap().1);
    let pass = write("pass.json", &doc("terminal_multicategory_3"))?;
    let Document::Multicategory(m) = parse_document(&doc("terminal_multicategory_3")).unwrap() else {
        unreachable!()
    };
    let (iota1, iota2) = (m.op_id("iota1").unwrap(), m.op_id("iota2").unwrap());
    let broken = m.with_composition(iota2, &[iota1, iota2], iota2).map_err(|e| e.to_string())?;
    let fail = write("fail.json", &to_json(&Document::Multicategory(broken)))?;
    let malformed = write("malformed.json", "{\n  \"kind\": \"multicategory\",,\n}\n")?;
    let run = |path: &Path| {
        Command::new(env!("CARGO_BIN_EXE_freeperm"))
            .env_remove("FREEPERM_FORMAT")
            .arg("validate")
            .arg(path)
            .output()
            .map_err(|e| e.to_string())
    };
    for (path, code) in [(&pass, EXIT_PASS), (&fail, EXIT_FAIL), (&malformed, EXIT_ERROR)] {
        let out = run(path)?;
        ensure(out.status.code() == Some(code), || {
            format!("{}: exit {:?}, expected {code}", path.display(), out.status.code())
        })?;
    }
    ensure(String::from_utf8_lossy(&run(&malformed)?.stderr).contains("line 2"), || {
        "malformed input error lacks its line".into()
    })?;
    Ok(format!("{} builtins", docs.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("multicategory axiom suite", multicategory_axioms),
        ("sigma oracle equivalence", sigma_oracle),
        ("free-construction counts", free_counts),
        ("free composition associativity", free_associativity),
        ("triangle identities", triangles),
        ("counit and its right adjoint", right_adjoint),
        ("coherence well-definedness", coherence),
        ("2-category laws", two_category),
        ("mutation sensitivity", mutation_sensitivity),
        ("CLI contract", cli_contract),
    ];
    // Written past the test harness's capture so the lines show in every run.
    let mut err = std::io::stderr();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => writeln!(err, "criterion {:>2} PASS  {name}: {detail}", i + 1).unwrap(),
            Err(why) => {
                writeln!(err, "criterion {:>2} FAIL  {name}: {why}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
