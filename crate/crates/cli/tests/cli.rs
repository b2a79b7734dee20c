use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bihom_cli::format::{parse_algebra_file, serialize, serialize_instance, AlgebraDocument, NamedOperator};
use bihom_core::catalog::{catalog_get, catalog_list, uptri2_rota_baxter};
use serde_json::Value;

fn bihom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bihom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON report")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn export(dir: &Path, id: &str) -> PathBuf {
    let o = bihom(&["catalog", "export", id]);
    assert_eq!(code(&o), 0);
    write(dir, &format!("{id}.json"), &stdout(&o))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn catalog_list_and_export_round_trip() {
    let o = bihom(&["catalog", "list"]);
    let ids: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(ids, catalog_list());
    for id in catalog_list() {
        let text = stdout(&bihom(&["catalog", "export", id]));
        assert_eq!(
            parse_algebra_file(&text).unwrap().instance,
            catalog_get(id).unwrap().instance,
            "{id}"
        );
    }
    assert_eq!(code(&bihom(&["catalog", "export", "nosuch"])), 2);
}

#[test]
fn check_passes_catalog_files() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<PathBuf> = catalog_list().into_iter().map(|id| export(dir.path(), id)).collect();
    let mut args = vec!["--json", "check"];
    args.extend(paths.iter().map(|p| s(p)));
    let o = bihom(&args);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let r = json(&o);
    assert_eq!(r["status"], "pass");
    assert_eq!(r["sections"].as_array().unwrap().len(), paths.len());
    assert!(r["inputs"]
        .as_array()
        .unwrap()
        .iter()
        .all(|i| i["sha256"].as_str().unwrap().len() == 64));
}

#[test]
fn mutated_sl2_fails_with_named_witness() {
    let dir = tempfile::tempdir().unwrap();
    // [h,e] = 3e
    let text =
        serialize_instance(&catalog_get("sl2").unwrap().instance).replace("[0, 1, 1, \"2\"]", "[0, 1, 1, \"3\"]");
    let p = write(dir.path(), "bad.json", &text);
    let o = bihom(&["--json", "check", s(&p)]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    let verdicts = r["sections"][0]["verdicts"].as_array().unwrap();
    let failing: Vec<&Value> = verdicts.iter().filter(|v| v["pass"] == false).collect();
    assert!(failing.iter().any(|v| v["label"] == "BHskewsym"));
    let jacobi = verdicts.iter().find(|v| v["label"] == "BiHomJacobi").unwrap();
    assert!(jacobi["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .any(|w| w["at"] == serde_json::json!(["h", "e", "f"])));

    let text = stdout(&bihom(&["check", s(&p)]));
    assert!(text.contains("at (h, e, f)"), "{text}");
}

#[test]
fn malformed_and_missing_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "broken.json", "{\"name\": \"x\",,}");
    let o = bihom(&["--json", "check", s(&p)]);
    assert_eq!(code(&o), 2);
    let msg = json(&o)["sections"][0]["messages"][0].as_str().unwrap().to_string();
    assert!(msg.contains("line 1"), "{msg}");
    assert_eq!(code(&bihom(&["check", "/nonexistent/file.json"])), 2);

    let good = export(dir.path(), "aff1");
    let bad_index = std::fs::read_to_string(&good)
        .unwrap()
        .replace("[1, 0, 1,", "[1, 0, 2,");
    let p = write(dir.path(), "index.json", &bad_index);
    let o = bihom(&["check", s(&p)]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("products.bracket[1]"));

    // input errors outrank violations
    let sl2 = serialize_instance(&catalog_get("sl2").unwrap().instance).replace("\"2\"]", "\"3\"]");
    let v = write(dir.path(), "viol.json", &sl2);
    assert_eq!(code(&bihom(&["check", s(&v), s(&p)])), 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = export(dir.path(), "heis3");
    for args in [
        vec!["check", s(&p)],
        vec!["--json", "check", s(&p)],
        vec!["--json", "rb-search", s(&p), "--ansatz", "upper-triangular", "--lift"],
    ] {
        let a = bihom(&args);
        let b = bihom(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!stdout(&a).contains("timestamp"));
    }
    let o = bihom(&["--json", "--timestamps", "check", s(&p)]);
    assert!(json(&o)["timestamp"].as_u64().is_some());
}

#[test]
fn twist_by_identity_keeps_tensor() {
    let dir = tempfile::tempdir().unwrap();
    let p = export(dir.path(), "aff1");
    let id = write(dir.path(), "id.json", "[[\"1\", \"0\"], [\"0\", \"1\"]]");
    let o = bihom(&["--json", "twist", s(&p), "--alpha2", s(&id), "--beta2", s(&id)]);
    assert_eq!(code(&o), 0);
    let out = json(&o)["sections"][0]["output"].as_str().unwrap().to_string();
    let t = parse_algebra_file(&out).unwrap().instance;
    let a = catalog_get("aff1").unwrap().instance;
    assert_eq!(t.products(), a.products());

    let a2 = write(dir.path(), "a2.json", "[[\"1\", \"0\"], [\"0\", \"2\"]]");
    let b2 = write(dir.path(), "b2.json", "[[\"1\", \"0\"], [\"0\", \"3\"]]");
    let o = bihom(&["--json", "twist", s(&p), "--alpha2", s(&a2), "--beta2", s(&b2)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["sections"][0]["kind"], "BiHomLie");

    let shear = write(dir.path(), "shear.json", "[[\"1\", \"1\"], [\"0\", \"1\"]]");
    let o = bihom(&["--json", "twist", s(&p), "--alpha2", s(&shear), "--beta2", s(&id)]);
    assert_eq!(code(&o), 1);
    let o = bihom(&[
        "--json",
        "twist",
        s(&p),
        "--alpha2",
        s(&shear),
        "--beta2",
        s(&id),
        "--unchecked",
    ]);
    let r = json(&o);
    assert_eq!(r["sections"][0]["unverified"], true);
    assert_eq!(code(&o), 1, "the unchecked output fails its own re-check");

    let wrong_dim = write(dir.path(), "w.json", "[[\"1\"]]");
    assert_eq!(
        code(&bihom(&["twist", s(&p), "--alpha2", s(&wrong_dim), "--beta2", s(&id)])),
        2
    );
}

#[test]
fn derive_examples() {
    let dir = tempfile::tempdir().unwrap();
    let aff = export(dir.path(), "aff1");
    let o = bihom(&[
        "--json",
        "derive",
        s(&aff),
        "--construction",
        "rb-bracket",
        "--operator",
        "zero",
        "--weight",
        "0",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = json(&o)["sections"][0]["output"].as_str().unwrap().to_string();
    assert!(parse_algebra_file(&out)
        .unwrap()
        .instance
        .sole_product()
        .unwrap()
        .1
        .is_zero());

    let o = bihom(&[
        "derive",
        s(&aff),
        "--construction",
        "rb-bracket",
        "--operator",
        "identity",
        "--weight",
        "-1",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("Rgraf"));

    let o = bihom(&[
        "--json",
        "derive",
        s(&aff),
        "--construction",
        "rb-bracket",
        "--operator",
        "identity",
    ]);
    assert_eq!(code(&o), 1);
    assert!(
        json(&o)["sections"][0]["verdicts"][0]["witnesses"]
            .as_array()
            .unwrap()
            .len()
            == 2
    );

    let pre = export(dir.path(), "prelie2");
    let o = bihom(&["--json", "derive", s(&pre), "--construction", "prelie-bracket"]);
    assert_eq!(code(&o), 0);
    let out = json(&o)["sections"][0]["output"].as_str().unwrap().to_string();
    assert!(parse_algebra_file(&out)
        .unwrap()
        .instance
        .sole_product()
        .unwrap()
        .1
        .is_zero());

    let dend = export(dir.path(), "dend3");
    let o = bihom(&["--json", "derive", s(&dend), "--construction", "dendriform-split"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let kinds: Vec<&str> = r["sections"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["LeftBiHomPreLie", "RightBiHomPreLie"]);

    // rb-prelie-left needs a left-tagged input and a weight-0 operator
    let o = bihom(&[
        "derive",
        s(&aff),
        "--construction",
        "rb-prelie-left",
        "--operator",
        "zero",
        "--weight",
        "-1",
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(
        code(&bihom(&["derive", s(&aff), "--construction", "rb-prelie-left"])),
        2
    );
    assert_eq!(
        code(&bihom(&[
            "derive",
            s(&aff),
            "--construction",
            "rb-bracket",
            "--operator",
            "R"
        ])),
        2
    );
    let o = bihom(&[
        "derive",
        s(&aff),
        "--construction",
        "rb-prelie-left",
        "--operator",
        "zero",
        "--kind-override",
        "LeftBiHomLie",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&bihom(&["derive", s(&aff), "--construction", "nonsense"])), 2);
}

#[test]
fn derive_uses_operators_from_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc = AlgebraDocument::new(catalog_get("uptri2").unwrap().instance);
    doc.operators.push(NamedOperator {
        name: "R".into(),
        matrix: uptri2_rota_baxter(),
        weight: doc.instance.field().zero(),
    });
    let with_op = serialize(&doc);
    let p = write(dir.path(), "uptri.json", &with_op);
    let o = bihom(&[
        "--json",
        "derive",
        s(&p),
        "--construction",
        "rb-assoc",
        "--operator",
        "R",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(
        json(&o)["sections"][0]["verdicts"].as_array().unwrap().last().unwrap()["label"],
        "RBrel (weight 0) on output"
    );
}

#[test]
fn rb_search_examples() {
    let dir = tempfile::tempdir().unwrap();
    let ab = export(dir.path(), "abelian2");
    let o = bihom(&["--json", "rb-search", s(&ab), "--mod", "3"]);
    assert_eq!(code(&o), 0);
    let ops = json(&o)["sections"][0]["operators"].as_array().unwrap().clone();
    assert_eq!(ops.len(), 81);
    assert_eq!(ops[0]["matrix"], serde_json::json!([["0", "0"], ["0", "0"]]));

    let aff = export(dir.path(), "aff1");
    let o = bihom(&["--json", "rb-search", s(&aff), "--lift"]);
    assert_eq!(code(&o), 0);
    let ops = json(&o)["sections"][0]["operators"].as_array().unwrap().clone();
    assert!(!ops.is_empty() && ops.iter().all(|op| op["verified"] == true));
    let lifted: Vec<&Value> = ops.iter().filter(|op| op["lift"]["status"] == "found").collect();
    assert!(!lifted.is_empty() && lifted.iter().all(|op| op["lift"]["verified"] == true));

    let o = bihom(&["--json", "rb-search", s(&aff), "--weight", "-1", "--max", "3"]);
    assert_eq!(json(&o)["sections"][0]["operators"].as_array().unwrap().len(), 3);

    // 7^9 > 2^25
    let sl2 = export(dir.path(), "sl2");
    let o = bihom(&["rb-search", s(&sl2), "--mod", "7"]);
    assert_eq!(code(&o), 3);
    assert_eq!(
        code(&bihom(&["rb-search", s(&sl2), "--mod", "7", "--ansatz", "diagonal"])),
        0
    );
    assert_eq!(code(&bihom(&["rb-search", s(&sl2), "--mod", "4"])), 2);
    assert_eq!(code(&bihom(&["rb-search", s(&sl2), "--weight", "1/5"])), 2);
    assert_eq!(code(&bihom(&["rb-search", s(&sl2), "--max", "0"])), 2);
}

#[test]
fn rb_search_over_fp_input() {
    let dir = tempfile::tempdir().unwrap();
    let text = serialize_instance(&catalog_get("aff1").unwrap().instance.reduce_mod(5).unwrap());
    let p = write(dir.path(), "aff1-f5.json", &text);
    assert_eq!(code(&bihom(&["rb-search", s(&p)])), 0);
    assert_eq!(code(&bihom(&["rb-search", s(&p), "--mod", "3"])), 2);
    assert_eq!(code(&bihom(&["rb-search", s(&p), "--lift"])), 2);
}
