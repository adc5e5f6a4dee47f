//! Golden documents and reports for every builtin, and the exit-code contract.
//!
//! Run with `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use freeperm::Bounds;
use freeperm_cli::commands::{self, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};
use freeperm_cli::examples::builtin_documents;
use freeperm_cli::{parse_document, to_json, CliError, Document, Format, Options};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn updating() -> bool {
    std::env::var_os("UPDATE_GOLDEN").is_some()
}

fn check_golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if updating() {
        fs::create_dir_all(golden_dir()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} differs from its golden file");
}

fn opts(format: Format) -> Options {
    Options {
        format,
        bounds: Bounds::new(3, 3),
    }
}

#[test]
fn documents_round_trip() {
    for (stem, doc) in builtin_documents() {
        let text = to_json(&doc);
        let back = parse_document(&text).unwrap_or_else(|e| panic!("{stem}: {e}"));
        assert_eq!(back, doc, "{stem}");
        assert_eq!(to_json(&back), text, "{stem}");
        check_golden(&format!("{stem}.json"), &text);
    }
}

#[test]
fn golden_documents_parse() {
    for (stem, doc) in builtin_documents() {
        let text = fs::read_to_string(golden_dir().join(format!("{stem}.json"))).unwrap();
        assert_eq!(parse_document(&text).unwrap(), doc, "{stem}");
    }
}

#[test]
fn reports_are_byte_stable() {
    for (stem, doc) in builtin_documents() {
        if matches!(doc, Document::Free(_)) {
            continue;
        }
        let text = to_json(&doc);
        for (format, ext) in [(Format::Text, "txt"), (Format::Json, "json")] {
            let first = commands::validate(&text, &opts(format)).unwrap();
            let second = commands::validate(&text, &opts(format)).unwrap();
            assert_eq!(first.stdout, second.stdout, "{stem}");
            assert_eq!(first.code, EXIT_PASS, "{stem}: {}", first.stdout);
            check_golden(&format!("{stem}.report.{ext}"), &first.stdout);
        }
    }
}

#[test]
fn constructions_are_byte_stable() {
    // End(C) at arity 3 runs to megabytes for the larger builtins.
    let o = Options {
        format: Format::Text,
        bounds: Bounds::new(2, 3),
    };
    for (stem, doc) in builtin_documents() {
        let text = to_json(&doc);
        let build = || match doc {
            Document::Multicategory(_) => Some(commands::free(&text, &o).unwrap()),
            Document::Permcat(_) => Some(commands::end(&text, &o).unwrap()),
            _ => None,
        };
        let Some(out) = build() else {
            continue;
        };
        assert_eq!(out.code, EXIT_PASS);
        let again = build().unwrap();
        assert_eq!(out.stdout, again.stdout, "{stem}");
        let back = parse_document(&out.stdout).unwrap();
        assert_eq!(to_json(&back), out.stdout, "{stem}");
        check_golden(&format!("{stem}.construction.json"), &out.stdout);
    }
}

fn document(stem: &str) -> Document {
    builtin_documents()
        .into_iter()
        .find(|(s, _)| s == stem)
        .unwrap_or_else(|| panic!("no builtin {stem}"))
        .1
}

fn broken_terminal() -> Document {
    let Document::Multicategory(m) = document("terminal_multicategory_3") else {
        unreachable!()
    };
    let iota1 = m.op_id("iota1").unwrap();
    let iota2 = m.op_id("iota2").unwrap();
    Document::Multicategory(m.with_composition(iota2, &[iota1, iota2], iota2).unwrap())
}

#[test]
fn library_exit_codes() {
    let o = opts(Format::Text);
    let bad = to_json(&broken_terminal());
    assert_eq!(commands::validate(&bad, &o).unwrap().code, EXIT_FAIL);
    assert!(matches!(
        commands::validate("{\n  \"kind\": ", &o),
        Err(CliError::Parse { line: 2, .. })
    ));
    let free = to_json(&document("initial_operad"));
    let free_doc = commands::free(&free, &o).unwrap().stdout;
    assert!(commands::validate(&free_doc, &o).is_err());
}

struct Fixtures {
    dir: tempfile::TempDir,
}

impl Fixtures {
    fn new() -> Self {
        let f = Fixtures {
            dir: tempfile::tempdir().unwrap(),
        };
        for stem in ["terminal_multicategory_3", "initial_operad", "sign_category", "discrete_z2"] {
            f.write(&format!("{stem}.json"), &to_json(&document(stem)));
        }
        f.write("broken.json", &to_json(&broken_terminal()));
        f.write("malformed.json", "{\n  \"version\": \"1\",\n  \"kind\": \"multicategory\",,\n}\n");
        let mut value: serde_json::Value =
            serde_json::from_str(&to_json(&document("initial_operad"))).unwrap();
        value["colour"] = serde_json::json!("red");
        f.write("unknown_field.json", &serde_json::to_string_pretty(&value).unwrap());
        let dangling = to_json(&document("initial_operad")).replacen("\"1\"", "\"nowhere\"", 1);
        f.write("dangling.json", &dangling);
        f
    }

    fn write(&self, name: &str, text: &str) {
        fs::write(self.dir.path().join(name), text).unwrap();
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn freeperm(args: &[&str], files: &[PathBuf]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeperm"))
        .env_remove("FREEPERM_FORMAT")
        .env_remove("FREEPERM_BOUND_PROFILE")
        .env_remove("FREEPERM_BOUND_ARITY")
        .env_remove("FREEPERM_PARALLEL")
        .args(args)
        .args(files)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn binary_exit_codes() {
    let f = Fixtures::new();
    let pass = freeperm(&["validate"], &[f.path("terminal_multicategory_3.json")]);
    assert_eq!(code(&pass), EXIT_PASS, "{}", String::from_utf8_lossy(&pass.stdout));

    let fail = freeperm(&["validate"], &[f.path("broken.json")]);
    assert_eq!(code(&fail), EXIT_FAIL);
    assert!(String::from_utf8_lossy(&fail.stdout).contains("FAIL"));

    let malformed = freeperm(&["validate"], &[f.path("malformed.json")]);
    assert_eq!(code(&malformed), EXIT_ERROR);
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 3"));

    for name in ["unknown_field.json", "dangling.json"] {
        let o = freeperm(&["validate"], &[f.path(name)]);
        assert_eq!(code(&o), EXIT_ERROR, "{name}: {}", String::from_utf8_lossy(&o.stderr));
    }

    let missing = freeperm(&["validate"], &[f.path("absent.json")]);
    assert_eq!(code(&missing), EXIT_ERROR);

    let adj = freeperm(
        &["check-adjunction"],
        &[f.path("initial_operad.json"), f.path("sign_category.json")],
    );
    assert_eq!(code(&adj), EXIT_PASS, "{}", String::from_utf8_lossy(&adj.stdout));

    let corrupt = freeperm(
        &["check-adjunction", "--corrupt-counit"],
        &[f.path("terminal_multicategory_3.json"), f.path("discrete_z2.json")],
    );
    assert_eq!(code(&corrupt), EXIT_FAIL);

    let wrong_kind = freeperm(&["end"], &[f.path("initial_operad.json")]);
    assert_eq!(code(&wrong_kind), EXIT_ERROR);
}

#[test]
fn binary_output_is_byte_stable() {
    let f = Fixtures::new();
    for args in [&["validate"][..], &["--format", "json", "validate"][..], &["free"][..]] {
        let a = freeperm(args, &[f.path("terminal_multicategory_3.json")]);
        let b = freeperm(args, &[f.path("terminal_multicategory_3.json")]);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(code(&a), EXIT_PASS);
    }
}

#[test]
fn flags_override_environment() {
    let f = Fixtures::new();
    let file = f.path("initial_operad.json");
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_freeperm"));
        cmd.env_remove("FREEPERM_FORMAT");
        if let Some(v) = env {
            cmd.env("FREEPERM_FORMAT", v);
        }
        if let Some(v) = flag {
            cmd.args(["--format", v]);
        }
        cmd.arg("validate").arg(&file);
        String::from_utf8(cmd.output().unwrap().stdout).unwrap()
    };
    let json = run(Some("json"), None);
    assert!(serde_json::from_str::<serde_json::Value>(&json).is_ok());
    let text = run(Some("json"), Some("text"));
    assert!(serde_json::from_str::<serde_json::Value>(&text).is_err());
    assert_eq!(text, run(None, None));
}
