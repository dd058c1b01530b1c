//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use serde_json::Value;

use motdec_cli::run;
use motdec_core::char_engine::{branch_sp4_to_gl2, gl_dimension, sp4_dimension, SpFourIrrepLabel};
use motdec_core::lefschetz::xi_of_mu;
use motdec_core::motivic::{decompose, dim_over_closure, dual_class};
use motdec_core::weight_lattice::{
    enumerate_adm_orbits, AbelianDescriptor, BrauerTag, DualityConvention, InvolutionTag, MultiWeight, Permutation,
    PermutationGroup, SimpleFactorDescriptor,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(format!("{name}.json")).to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(root().join("golden").join(format!("{name}.md"))).unwrap_or_default()
}

fn cli(args: &[&str]) -> motdec_cli::Outcome {
    run(std::iter::once("motdec").chain(args.iter().copied()))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn component_lines(md: &str) -> BTreeSet<&str> {
    md.lines().filter_map(|l| l.strip_prefix("- ")).filter(|l| l.starts_with("R_{")).collect()
}

fn genus_two_golden() -> Check {
    let start = Instant::now();
    let q = fixture("quaternion_g2");
    let dec = cli(&["decompose", &q]);
    let lef = cli(&["lefschetz", &q]);
    let secs = start.elapsed().as_secs_f64();
    ensure(dec.code == 0 && lef.code == 0, || format!("exit codes {} and {}", dec.code, lef.code))?;
    ensure(dec.stdout == golden("quaternion_g2_decompose"), || "decompose differs from its golden file".into())?;
    ensure(lef.stdout == golden("quaternion_g2_lefschetz"), || "lefschetz differs from its golden file".into())?;
    for line in ["R_{0,0} = R^{(1,1)}", "R_{0,1} = R⁰ ⊕ R^{(2,0)} ⊕ R⁴", "R_{1,0} = R¹ ⊕ R³"] {
        ensure(lef.stdout.lines().any(|l| l == format!("- {line}")), || format!("missing \"{line}\""))?;
    }
    ensure(secs < 1.0, || format!("took {secs:.3} s"))?;
    Ok(format!("three component lists byte-exact, {secs:.3} s"))
}

fn genus_four_golden() -> Check {
    let start = Instant::now();
    let q = fixture("quaternion_g4");
    let lef = cli(&["lefschetz", &q]);
    let json = cli(&["lefschetz", &q, "--format", "json"]);
    let secs = start.elapsed().as_secs_f64();
    ensure(lef.code == 0 && json.code == 0, || lef.stderr.clone())?;
    ensure(lef.stdout == golden("quaternion_g4_lefschetz"), || "lefschetz differs from its golden file".into())?;
    let expected = [
        "R_{1,0} = R_{1,0}^{(2,1)} ⊕ R_{1,0}^{(3,2)}",
        "R_{1,1} = R_{1,1}^{(1,0)} ⊕ R_{1,1}^{(3,0)} ⊕ R_{1,1}^{(2,1)} ⊕ R_{1,1}^{(4,1)} ⊕ R_{1,1}^{(3,2)} ⊕ R_{1,1}^{(4,3)}",
        "R_{0,0} = R_{0,0}^{(2,2)}",
        "R_{2,0} = R_{2,0}^{(2,0)} ⊕ R_{2,0}^{(3,1)} ⊕ R_{2,0}^{(2,2)} ⊕ R_{2,0}^{(4,2)}",
        "R_{0,1} = R_{0,1}^{(1,1)} ⊕ R_{0,1}^{(3,1)} ⊕ R_{0,1}^{(3,3)}",
        "R_{0,2} = R_{0,2}^{(0,0)} ⊕ R_{0,2}^{(2,0)} ⊕ R_{0,2}^{(4,0)} ⊕ R_{0,2}^{(2,2)} ⊕ R_{0,2}^{(4,2)} ⊕ R_{0,2}^{(4,4)}",
    ];
    let got = component_lines(&lef.stdout);
    ensure(got.len() == 6, || format!("{} components", got.len()))?;
    for line in expected {
        ensure(got.contains(line), || format!("missing \"{line}\""))?;
    }
    let v: Value = serde_json::from_str(&json.stdout).map_err(|e| e.to_string())?;
    let adj = v["components"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["psi"] == serde_json::json!([2, 0])))
        .ok_or("no (2,0) component")?;
    let dims: Vec<i64> = adj["levels"].as_array().unwrap().iter().map(|l| l["dim"].as_i64().unwrap()).collect();
    ensure(dims == [3, 4, 3], || format!("graded dims {dims:?}"))?;
    let shape = adj["core"]["shape"].as_str().unwrap_or_default();
    ensure(shape == "P⊕3 ⊕ P(−1)⊕4 ⊕ P(−2)⊕3", || format!("core shape {shape}"))?;
    ensure(adj["core"]["rank"] == 5, || format!("core rank {}", adj["core"]["rank"]))?;
    ensure(secs < 5.0, || format!("took {secs:.3} s"))?;
    Ok(format!("six refined tables, dims (3,4,3), core rank 5, {secs:.3} s"))
}

fn galois_choices(n: usize) -> Vec<Vec<Permutation>> {
    let mut out = vec![PermutationGroup::symmetric_generators(n)];
    if n >= 3 {
        out.push(vec![(0..n).map(|i| (i + 1) % n).collect()]);
    }
    if n == 4 {
        out.push(vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]);
    }
    out
}

/// Every simple descriptor with n ≤ 4, d ≤ 2, g ≤ 8 and nd | 2g, over several Galois actions and involutions.
fn sweep() -> Vec<AbelianDescriptor> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        for d in 1..=2usize {
            for g in 1..=8u32 {
                if !(2 * g as usize).is_multiple_of(n * d) {
                    continue;
                }
                for gens in galois_choices(n) {
                    let brauer = match (d, n) {
                        (1, _) => BrauerTag::Split,
                        (2, 1) => BrauerTag::QuaternionIndefinite,
                        _ => BrauerTag::Unspecified,
                    };
                    let mut f = SimpleFactorDescriptor::new(n, d, gens.clone(), brauer, InvolutionTag::TotallyReal);
                    out.push(AbelianDescriptor::simple(f.clone(), g).unwrap());
                    if n % 2 == 0 {
                        f.involution = InvolutionTag::Cm;
                        f.conjugation = Some((0..n).map(|i| i ^ 1).collect());
                        out.push(AbelianDescriptor::simple(f, g).unwrap());
                    }
                }
            }
        }
    }
    out
}

fn duality_suite() -> Check {
    let descs = sweep();
    let mut orbits = 0usize;
    for desc in &descs {
        let g = desc.g as u64;
        let all = enumerate_adm_orbits(desc).map_err(|e| e.to_string())?;
        let mut counts = vec![0u64; 2 * g as usize + 1];
        for xi in &all {
            let dual = dual_class(xi, desc, DualityConvention::DualScheme).map_err(|e| e.to_string())?;
            let (w, wd) = (xi.weight().unwrap(), dual.weight().unwrap());
            ensure(wd == 2 * g - w, || format!("wt of the dual of {xi} is {wd}"))?;
            let back = dual_class(&dual, desc, DualityConvention::DualScheme).map_err(|e| e.to_string())?;
            ensure(&back == xi, || format!("dual is not an involution at {xi}"))?;
            counts[w as usize] += 1;
        }
        let mut rev = counts.clone();
        rev.reverse();
        ensure(counts == rev, || format!("weight counts {counts:?} are not palindromic"))?;
        orbits += all.len();
    }
    Ok(format!("{} descriptors, {orbits} orbits", descs.len()))
}

fn branching_closure() -> Check {
    let mut count = 0;
    for b in 0..=4u32 {
        for a in 0..=(8 - 2 * b) {
            let label = SpFourIrrepLabel::new(a, b);
            let parts = branch_sp4_to_gl2(label).map_err(|e| e.to_string())?;
            let total: BigInt = parts.iter().map(|(l, c)| c * gl_dimension(l)).sum();
            ensure(total == sp4_dimension(label), || format!("({a},{b}): {total} vs {}", sp4_dimension(label)))?;
            count += 1;
        }
    }
    let table: [((u32, u32), &[&str]); 5] = [
        ((1, 1), &["(1,0)", "(2,1)", "(3,0)", "(3,2)", "(4,1)", "(4,3)"]),
        ((2, 0), &["(2,0)", "(2,2)", "(3,1)", "(4,2)"]),
        ((0, 1), &["(1,1)", "(3,1)", "(3,3)"]),
        ((1, 0), &["(2,1)", "(3,2)"]),
        ((0, 2), &["(0,0)", "(2,0)", "(2,2)", "(4,0)", "(4,2)", "(4,4)"]),
    ];
    for ((a, b), expected) in table {
        let mut got = Vec::new();
        for (mu, c) in branch_sp4_to_gl2(SpFourIrrepLabel::new(a, b)).map_err(|e| e.to_string())? {
            ensure(c == BigInt::from(1), || format!("({a},{b}) has multiplicity {c} at {mu}"))?;
            let xi = xi_of_mu(&MultiWeight::from_rows(vec![mu.entries().to_vec()]).unwrap(), 2).unwrap();
            got.push(xi.to_string());
        }
        got.sort();
        ensure(got == expected, || format!("({a},{b}) translates to {got:?}"))?;
    }
    Ok(format!("{count} irreducibles closed, five translations match"))
}

fn relation_verification() -> Check {
    let mut slowest = 0.0f64;
    let cases = [
        "rational_g1",
        "rational_g2",
        "rational_g3",
        "real_quadratic_g2",
        "real_quadratic_g4",
        "quaternion_g2",
        "quaternion_g4",
    ];
    for name in cases {
        let start = Instant::now();
        let out = cli(&["verify-sp", &fixture(name), "--format", "json"]);
        let secs = start.elapsed().as_secs_f64();
        slowest = slowest.max(secs);
        ensure(out.code == 0, || format!("{name}: exit {} {}", out.code, out.stderr.trim()))?;
        let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
        let rels = v["relations"].as_array().unwrap();
        ensure(rels.len() == 6, || format!("{name}: {} relations", rels.len()))?;
        for r in rels {
            ensure(r["passed"] == true && r["max_discrepancy"] == "0", || format!("{name}: relation {}", r["relation"]))?;
        }
        ensure(v["trace_pairing"]["passed"] == true, || format!("{name}: trace pairing"))?;
        ensure(secs < 60.0, || format!("{name}: took {secs:.1} s"))?;
    }
    Ok(format!("{} presets, discrepancy 0, slowest {slowest:.3} s", cases.len()))
}

fn oracle_equivalence() -> Check {
    for name in ["rational_g2", "rational_g3", "real_quadratic_g2", "quaternion_g2", "quaternion_g4"] {
        let out = cli(&["compare", &fixture(name), "--format", "json"]);
        ensure(out.code == 0, || format!("{name}: exit {} {}", out.code, out.stderr.trim()))?;
        let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
        if name.starts_with("rational") {
            let b = v["binomial"].as_array().ok_or_else(|| format!("{name}: no binomial check"))?;
            let g = if name.ends_with("g2") { 2 } else { 3 };
            ensure(b.len() == g + 1, || format!("{name}: {} values of k", b.len()))?;
        }
    }
    Ok("classical, totally real and quaternion families agree".into())
}

fn completeness() -> Check {
    let descs = sweep();
    for desc in &descs {
        let report = decompose(desc).map_err(|e| e.to_string())?;
        let total: BigInt = report.records.iter().map(|r| &r.mult * dim_over_closure(&r.xi)).sum();
        ensure(total == BigInt::from(1) << (2 * desc.g), || {
            format!("g = {}, n = {}: total {total}", desc.g, desc.factors[0].factor.n)
        })?;
    }
    Ok(format!("Σ mult · dim = 2^(2g) for {} descriptors", descs.len()))
}

fn gates() -> Check {
    for name in ["cm_imaginary_quadratic", "definite_quaternion", "index_three"] {
        let out = cli(&["lefschetz", &fixture(name)]);
        ensure(out.code == 2, || format!("{name}: exit {}", out.code))?;
        ensure(out.stderr.contains("unsupported family") && out.stderr.contains("only implemented for"), || {
            format!("{name}: message {}", out.stderr.trim())
        })?;
    }
    for cmd in ["decompose", "lefschetz"] {
        let out = cli(&[cmd, &fixture("indivisible")]);
        ensure(out.code == 1, || format!("{cmd} on nd ∤ 2g: exit {}", out.code))?;
    }
    Ok("CM, definite quaternion, d = 3 exit 2; nd ∤ 2g exits 1".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("quaternion g=2 golden lists", genus_two_golden),
        ("quaternion g=4 refined tables", genus_four_golden),
        ("duality suite", duality_suite),
        ("branching closure", branching_closure),
        ("relation verification", relation_verification),
        ("oracle equivalence", oracle_equivalence),
        ("completeness identity", completeness),
        ("gate behavior", gates),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
