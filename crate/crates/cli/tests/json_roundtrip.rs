//! The JSON and markdown renderings carry the same data: markdown rows are
//! rebuilt from the parsed JSON and must occur verbatim.

use std::path::PathBuf;

use motdec_cli::run;
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn both(cmd: &str, name: &str) -> (String, Value) {
    let md = run(["motdec", cmd, &fixture(name)]);
    let json = run(["motdec", cmd, &fixture(name), "--format", "json"]);
    assert_eq!((md.code, json.code), (0, 0));
    (md.stdout, serde_json::from_str(&json.stdout).unwrap())
}

fn ints(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.to_string()).collect()
}

/// A single-factor class: a list of per-embedding tuples.
fn class(v: &Value) -> String {
    let tuples = v.as_array().unwrap();
    if tuples.len() == 1 {
        return format!("({})", ints(&tuples[0]).join(","));
    }
    let parts: Vec<String> = tuples
        .iter()
        .map(|t| {
            let e = ints(t);
            if e.len() == 1 {
                e[0].clone()
            } else {
                format!("({})", e.join(","))
            }
        })
        .collect();
    format!("[{}]", parts.join(","))
}

fn decompose_rows(name: &str) {
    let (md, json) = both("decompose", name);
    let records = json["records"].as_array().unwrap();
    for r in records {
        let row = format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            class(&r["xi"]),
            r["weight"],
            class(&r["dual"]),
            class(&r["fourier"]),
            r["twist"],
            r["dim_closure"],
            r["d_lambda"].as_str().map_or_else(|| r["d_lambda"].to_string(), str::to_string),
            r["mult"]
        );
        assert!(md.contains(&format!("{row}\n")), "missing {row}");
    }
    let table = md.lines().filter(|l| l.starts_with("| (") || l.starts_with("| [")).count();
    assert_eq!(table, records.len());
    let totals = &json["totals"];
    assert!(md.contains(&format!(
        "{} classes; Σ mult · dim = {} (expected {})",
        totals["classes"], totals["realization_dim"], totals["expected_dim"]
    )));
}

#[test]
fn decompose_quaternion() {
    decompose_rows("quaternion_g2");
    decompose_rows("quaternion_g4");
}

#[test]
fn decompose_totally_real() {
    decompose_rows("real_quadratic_g2");
    decompose_rows("rational_g1");
}

#[test]
fn lefschetz_components() {
    let (md, json) = both("lefschetz", "quaternion_g4");
    for c in json["components"].as_array().unwrap() {
        let dims: Vec<String> = c["levels"].as_array().unwrap().iter().map(|l| l["dim"].to_string()).collect();
        let prefix = format!(
            "| {} | {} | ({}) |",
            ints(&c["psi"]).join(","),
            c["depth"],
            dims.join(",")
        );
        let row = md.lines().find(|l| l.starts_with(&prefix)).unwrap_or_else(|| panic!("missing {prefix}"));
        assert!(row.contains(&format!("| {} |", c["core"]["shape"].as_str().unwrap())));
        assert!(row.contains(&format!("| {} |", c["core"]["rank"])));
        let xis: usize = c["refined"].as_object().unwrap().values().map(|v| v.as_array().unwrap().len()).sum();
        let head = format!("- R_{{{}}} = ", ints(&c["psi"]).join(","));
        let line = md.lines().find(|l| l.starts_with(&head)).unwrap();
        assert_eq!(line.matches('⊕').count() + 1, xis);
        for group in c["refined"].as_object().unwrap().values() {
            for xi in group.as_array().unwrap() {
                assert!(line.contains(&class(xi)), "{} not in {line}", class(xi));
            }
        }
    }
}
