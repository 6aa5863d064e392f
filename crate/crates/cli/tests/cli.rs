use std::process::{Command, Output};

use minrep_core::registry::notation::{latex_to_cell, parse_weight, parse_word};
use minrep_core::registry::FAMILIES;
use minrep_core::verify::fixtures::mutated;
use minrep_core::{as_element, equal_elements, CheckId, Registry};

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_minrep"));
    cmd.args(args).env_remove("MINREP_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("run minrep")
}

fn minrep(args: &[&str]) -> Output {
    run(args, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

#[test]
fn verify_builtin_record_passes() {
    let o = minrep(&["verify", "--record", "g2_2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    assert_eq!(doc["schema"], "minrep-report/1");
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["summary"]["pass"], 11);
    assert_eq!(doc["summary"]["skipped"], 1);
    for r in doc["reports"].as_array().unwrap() {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["check", "evidence", "record", "status"]);
    }
}

#[test]
fn verify_family_instance() {
    let o = minrep(&["verify", "--family", "so_even_even", "--params", "3,2", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.starts_with("| record | check | status | evidence |\n"));
    assert!(text.contains("| so_even_even(3,2) | w0_table | pass |"), "{text}");
    assert!(text.ends_with("overall: pass (11 pass, 0 fail, 1 skipped)\n"), "{text}");
}

#[test]
fn verify_family_without_params_uses_registry_instances() {
    let o = minrep(&["verify", "--family", "sp_R", "--check", "period"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let records: Vec<&str> = doc["reports"].as_array().unwrap().iter().map(|r| r["record"].as_str().unwrap()).collect();
    assert_eq!(records, ["sp_R(2)", "sp_R(3)", "sp_R(5)"]);
}

#[test]
fn usage_errors_exit_2_with_valid_names() {
    let o = minrep(&["verify", "--record", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("known: g2_2, f4_4"), "{}", stderr(&o));

    let o = minrep(&["verify", "--check", "w0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("rho, p_dimension, ladder_wellformed"), "{}", stderr(&o));

    let o = minrep(&["verify", "--family", "so_even_even", "--params", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n>=m>=2"), "{}", stderr(&o));

    let o = minrep(&["verify", "--params", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let o = minrep(&["verify", "--strategy", "clever"]);
    assert_eq!(o.status.code(), Some(2));

    let o = minrep(&["table", "table7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("numbers, infchar, hermitian, nonhermitian, data1, data2"));

    let o = minrep(&["weyl", "subsystem", "E8", "--orthogonal-to", "1,1/0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = minrep(&["weyl", "subsystem", "E8", "--orthogonal-to", "1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = minrep(&["weyl", "order", "H3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_registry_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"schema\": \"minrep-registry/1\", \"records\": [").unwrap();
    let o = minrep(&["verify", "--registry", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column"), "{}", stderr(&o));
}

#[test]
fn forced_failure_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixture.json");
    let mut reg = Registry::builtin();
    reg.records.retain(|r| r.name == "g2_2");
    reg.records.push(mutated(CheckId::Rho));
    reg.save(&path).unwrap();
    let o = minrep(&["verify", "--registry", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let doc = json(&o);
    assert_eq!(doc["status"], "fail");
    assert_eq!(doc["summary"]["fail"], 1);
    let failing: Vec<_> = doc["reports"].as_array().unwrap().iter().filter(|r| r["status"] == "fail").collect();
    assert_eq!(failing[0]["record"], "e6_6~rho");
    assert_eq!(failing[0]["check"], "rho");

    let o = minrep(&["verify", "--registry", path.to_str().unwrap(), "--record", "g2_2"]);
    assert_eq!(o.status.code(), Some(0));

    let o = minrep(&["table", "data1", "--registry", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "rows without records are unverified");
}

#[test]
fn output_is_reproducible_across_jobs() {
    let a = minrep(&["verify", "--record", "e6_6", "--record", "sp_R(3)", "--jobs", "1"]);
    let b = minrep(&["verify", "--record", "e6_6", "--record", "sp_R(3)", "--jobs", "4"]);
    let c = minrep(&["verify", "--record", "e6_6", "--record", "sp_R(3)"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(!stdout(&a).contains("duration_ms"));
    let t = minrep(&["verify", "--record", "g2_2", "--timings"]);
    assert!(stdout(&t).contains("duration_ms"));
}

#[test]
fn budget_flag_and_environment() {
    let args = ["verify", "--record", "e6_6", "--check", "w0_unique", "--strategy", "brute"];
    let o = run(&args, &[("MINREP_BUDGET", "100")]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["reports"][0]["status"], "skipped");
    assert_eq!(doc["reports"][0]["evidence"], "budget: 384 candidates exceed 100");

    let o = run(&[&args[..], &["--budget", "1000"]].concat(), &[("MINREP_BUDGET", "100")]);
    assert_eq!(json(&o)["reports"][0]["status"], "pass");

    let o = run(&["verify", "--record", "e8_-24", "--check", "w0_unique", "--strategy", "brute"], &[("MINREP_BUDGET", "1000000")]);
    assert_eq!(json(&o)["reports"][0]["status"], "skipped");
}

#[test]
fn weyl_golden_outputs() {
    let o = minrep(&["weyl", "order", "F4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1152\n");
    assert!(stderr(&o).contains("agrees"));

    let o = minrep(&["weyl", "order", "E8"]);
    assert_eq!(stdout(&o), "696729600\n");
    assert!(stderr(&o).contains("closed form only"));

    let o = minrep(&["weyl", "longest", "C4"]);
    let text = stdout(&o);
    assert!(text.contains("length: 16\nelement: -identity\n"), "{text}");

    let o = minrep(&["weyl", "longest", "A2"]);
    assert_eq!(
        stdout(&o),
        "word: s(e1-e2)s(e2-e3)s(e1-e2)\nlength: 3\nelement:\n  (0,0,1)\n  (0,1,0)\n  (1,0,0)\n"
    );

    let o = minrep(&["weyl", "subsystem", "E8", "--orthogonal-to", "0,0,0,0,0,0,1,1"]);
    assert!(stdout(&o).starts_with("type: E7\nroots: 126\npositive roots: 63\nweyl order: 2903040\n"));

    let o = minrep(&["weyl", "subsystem", "C4", "--orthogonal-to", "1,1,1,1"]);
    assert!(stdout(&o).starts_with("type: A3\nroots: 12\n"), "{}", stdout(&o));
}

#[test]
fn numbers_table_csv() {
    let o = minrep(&["table", "numbers", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("g,number,row,status"));
    assert_eq!(lines.next(), Some("\"sp(n,R) n>=2\",4,1,verified"));
}

#[test]
fn infchar_table_json() {
    let o = minrep(&["table", "infchar", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let g2 = doc["rows"].as_array().unwrap().iter().find(|r| r["cells"][0]["text"] == "g2(C)").unwrap();
    assert_eq!(g2["instances"][0]["type"], "G2");
    assert_eq!(g2["instances"][0]["coefficients"], serde_json::json!(["1", "1/3"]));
    assert_eq!(g2["cells"][1]["status"], "verified");
}

/// Cells of a rendered data table, in row order, with the `g` column first.
fn markdown_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| l.starts_with("| ") && !l.starts_with("| g "))
        .map(|l| {
            let inner = l.trim_start_matches("| ").trim_end_matches(" |");
            inner.split(" | ").map(|c| c.trim_matches('`').to_string()).collect()
        })
        .collect()
}

fn latex_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| l.ends_with(" \\\\") && !l.starts_with("$\\mathfrak{g}$"))
        .map(|l| {
            let cells: Vec<&str> = l.trim_end_matches(" \\\\").split(" & ").collect();
            let mut out = vec![cells[0].replace("$\\ge$", ">=")];
            out.extend(cells[1..].iter().map(|c| if c.starts_with('$') { latex_to_cell(c) } else { c.to_string() }));
            out
        })
        .collect()
}

/// Checks rendered rows against registry values: family rows against their
/// patterns, fixed rows by parsing each cell back into a value.
fn assert_round_trip(rows: &[Vec<String>], second: bool) {
    let reg = Registry::builtin();
    assert_eq!(rows.len(), 11);
    for id in ["so_even_even", "so_odd_odd", "so_2n_3"] {
        let spec = FAMILIES.iter().find(|f| f.id == id).unwrap();
        let pattern = spec.pattern.unwrap();
        let row = rows.iter().find(|r| r[0].starts_with(&format!("{} ", spec.display))).unwrap();
        let want: Vec<&str> = if second { pattern[3..].to_vec() } else { pattern[..3].to_vec() };
        assert_eq!(&row[1..=want.len()], want.as_slice());
    }
    for r in reg.records.iter().filter(|r| r.cells.is_some() && r.family.is_none() && !r.is_complex()) {
        let row = rows.iter().find(|row| row[0] == r.display).unwrap_or_else(|| panic!("{}", r.display));
        let s = &r.k_space;
        let w = |c: &str| parse_weight(c, s).unwrap();
        if second {
            assert_eq!(Some(w(&row[1])), r.xi0_table, "{}", r.name);
            let word = parse_word(&row[2], s, &r.named_roots).unwrap();
            let e = |x| as_element(s, x).unwrap();
            assert!(equal_elements(&e(&word), &e(r.w0_word.as_ref().unwrap())), "{}", r.name);
        } else {
            assert_eq!(Some(w(&row[1])), r.rho_table, "{}", r.name);
            assert_eq!(w(&row[2]), r.modules[0].mu0, "{}", r.name);
            assert_eq!(w(&row[3]), r.modules[0].beta, "{}", r.name);
        }
        assert_eq!(row.last().unwrap(), "verified");
    }
}

#[test]
fn data_tables_round_trip() {
    for (id, second) in [("data1", false), ("data2", true)] {
        let md = minrep(&["table", id]);
        assert_eq!(md.status.code(), Some(0));
        assert_round_trip(&markdown_rows(&stdout(&md)), second);
        let tex = minrep(&["table", id, "--format", "latex"]);
        assert_eq!(tex.status.code(), Some(0));
        let text = stdout(&tex);
        assert!(text.contains("\\begin{tabular}") && text.contains("\\end{tabular}"));
        assert_round_trip(&latex_rows(&text), second);
    }
}

#[test]
fn data2_latex_cells() {
    let text = stdout(&minrep(&["table", "data2", "--format", "latex"]));
    assert!(text.contains("e8(-24) & $((0,1,2,3,4,-4,-4,4),0)$ & $s(e_{5}+e_{6})s(\\eta_{2})s(\\eta_{1})s(f_{1}-f_{2})$ & verified \\\\"), "{text}");
    assert!(text.contains("$s(e_{1}+e_{n})s(e_{1}-e_{n})s(f_{1}+f_{m})s(f_{1}-f_{m})$"));
}

#[test]
fn classification_tables_render() {
    for id in ["hermitian", "nonhermitian"] {
        for format in ["markdown", "csv", "json", "latex"] {
            let o = minrep(&["table", id, "--format", format]);
            assert_eq!(o.status.code(), Some(0), "{id} {format}: {}", stderr(&o));
        }
    }
    let text = stdout(&minrep(&["table", "hermitian"]));
    assert!(text.contains("| e7(-25) | E6 x R | V(ω1)⊠C_1⊕V(ω6)⊠C_-1 | C⊠C_±6 | verified |"), "{text}");
}

#[test]
fn registry_dump_round_trips() {
    let o = minrep(&["registry", "dump"]);
    assert_eq!(o.status.code(), Some(0));
    let reg = Registry::from_json(&stdout(&o)).unwrap();
    assert_eq!(reg, Registry::builtin());
    let names = stdout(&minrep(&["registry", "list"]));
    assert_eq!(names.lines().count(), reg.records.len());
}
