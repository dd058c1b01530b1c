use std::path::PathBuf;

use motdec_cli::run;

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(format!("{name}.json")).to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(dir("golden").join(format!("{name}.md"))).unwrap()
}

fn check(args: &[&str], name: &str) {
    let mut full = vec!["motdec".to_string()];
    full.extend(args.iter().map(|a| {
        if a.ends_with(".json") {
            fixture(a.trim_end_matches(".json"))
        } else {
            a.to_string()
        }
    }));
    let out = run(&full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, golden(name), "output of {args:?} differs from {name}.md");
}

#[test]
fn quaternion_genus_two() {
    check(&["decompose", "quaternion_g2.json"], "quaternion_g2_decompose");
    check(&["lefschetz", "quaternion_g2.json"], "quaternion_g2_lefschetz");
    check(&["beauville", "quaternion_g2.json", "--codim", "1"], "quaternion_g2_beauville_1");
    check(&["verify-sp", "quaternion_g2.json"], "quaternion_g2_verify");
}

#[test]
fn quaternion_genus_four() {
    check(&["decompose", "quaternion_g4.json"], "quaternion_g4_decompose");
    check(&["lefschetz", "quaternion_g4.json"], "quaternion_g4_lefschetz");
}

#[test]
fn rational_and_totally_real() {
    check(&["decompose", "rational_g1.json"], "rational_g1_decompose");
    check(&["lefschetz", "rational_g2.json"], "rational_g2_lefschetz");
    check(&["decompose", "real_quadratic_g2.json"], "real_quadratic_g2_decompose");
    check(&["lefschetz", "real_quadratic_g2.json"], "real_quadratic_g2_lefschetz");
}

#[test]
fn product_indices() {
    check(&["product", "--dims", "1,1"], "product_1_1");
}

fn table_rows(md: &str) -> usize {
    md.lines().filter(|l| l.starts_with("| (") || l.starts_with("| [")).count()
}

#[test]
fn table_sizes() {
    assert_eq!(table_rows(&golden("rational_g1_decompose")), 3);
    assert_eq!(table_rows(&golden("real_quadratic_g2_decompose")), 6);
    assert_eq!(table_rows(&golden("product_1_1")), 9);
}

#[test]
fn byte_stable() {
    let args = ["motdec", "lefschetz", &fixture("quaternion_g4"), "--format", "json"];
    assert_eq!(run(args), run(args));
}

#[test]
fn exit_codes() {
    for (name, code) in [
        ("cm_imaginary_quadratic", 2),
        ("definite_quaternion", 2),
        ("index_three", 2),
        ("indivisible", 1),
    ] {
        let out = run(["motdec", "lefschetz", &fixture(name)]);
        assert_eq!(out.code, code, "{name}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }
    let out = run(["motdec", "verify-sp", &fixture("cm_imaginary_quadratic")]);
    assert_eq!(out.code, 2);
    let out = run(["motdec", "beauville", &fixture("quaternion_g2"), "--codim", "3"]);
    assert_eq!(out.code, 1);
}
