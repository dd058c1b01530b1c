//! Markdown renderings of the engine reports. JSON goes straight through serde.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use motdec_core::lefschetz::{LefschetzLabel, LefschetzReport, Level};
use motdec_core::motivic::{DecompositionReport, DescriptorEcho, ProductIndex};
use motdec_core::realization::{ComparisonReport, VerificationReport};
use motdec_core::weight_lattice::ProductClass;

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

pub fn superscript(n: u64) -> String {
    n.to_string().chars().map(|c| SUPERSCRIPTS[c.to_digit(10).unwrap() as usize]).collect()
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn descriptor_line(d: &DescriptorEcho) -> String {
    let factors: Vec<String> = d
        .factors
        .iter()
        .map(|f| {
            format!(
                "n = {}, d = {}, g = {}, {}, {} center, |Γ| = {}, weights bounded by {}",
                f.n, f.d, f.g, f.brauer, f.involution, f.galois_order, f.weight_bound
            )
        })
        .collect();
    format!("g = {}; {}", d.g, factors.join("; "))
}

fn summand(xi: &ProductClass) -> String {
    format!("R^{{{xi}}}")
}

/// Within one degree, classes are listed in descending order.
fn descending(xis: &[ProductClass]) -> Vec<&ProductClass> {
    let mut v: Vec<&ProductClass> = xis.iter().collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

pub fn decompose_md(r: &DecompositionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Motivic decomposition\n");
    let _ = writeln!(out, "{}\n", descriptor_line(&r.descriptor));
    let _ = writeln!(out, "| ξ | wt | ξ^∨ | Fourier partner | twist | dim over Q̄ | d(λ) | mult |");
    let _ = writeln!(out, "|---|---|---|---|---|---|---|---|");
    for x in &r.records {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            x.xi, x.weight, x.dual, x.fourier, x.twist, x.dim_closure, x.d_lambda, x.mult
        );
    }
    let _ = writeln!(out, "\n## By degree\n");
    for d in &r.degrees {
        let parts: Vec<String> = descending(&d.xis).into_iter().map(summand).collect();
        let _ = writeln!(out, "- R{} = {}", superscript(d.degree), parts.join(" ⊕ "));
    }
    let _ = writeln!(
        out,
        "\n{} classes; Σ mult · dim = {} (expected {})",
        r.totals.classes, r.totals.realization_dim, r.totals.expected_dim
    );
    notes(&mut out, &r.notes);
    out
}

fn notes(out: &mut String, notes: &[String]) {
    if notes.is_empty() {
        return;
    }
    let _ = writeln!(out, "\n## Notes\n");
    for n in notes {
        let _ = writeln!(out, "- {n}");
    }
}

fn psi_sub(psi: &LefschetzLabel) -> String {
    format!("R_{{{psi}}}")
}

/// One line per component. When no class is shared between components, a
/// class alone in its degree is written R^i and others R^{(ξ)}; otherwise
/// every summand carries its component label.
pub fn component_lines(r: &LefschetzReport) -> Vec<String> {
    let mut owners: BTreeMap<&ProductClass, usize> = BTreeMap::new();
    let mut per_degree: BTreeMap<u64, BTreeSet<&ProductClass>> = BTreeMap::new();
    for c in &r.components {
        for (deg, xis) in &c.refined {
            for xi in xis {
                *owners.entry(xi).or_default() += 1;
                per_degree.entry(*deg).or_default().insert(xi);
            }
        }
    }
    let shared = owners.values().any(|&n| n > 1);
    r.components
        .iter()
        .map(|c| {
            let head = psi_sub(&c.psi);
            let parts: Vec<String> = c
                .refined
                .iter()
                .flat_map(|(deg, xis)| {
                    let head = &head;
                    let alone = per_degree[deg].len() == 1;
                    descending(xis).into_iter().map(move |xi| {
                        if shared {
                            format!("{head}^{{{xi}}}")
                        } else if alone {
                            format!("R{}", superscript(*deg))
                        } else {
                            summand(xi)
                        }
                    })
                })
                .collect();
            format!("{head} = {}", parts.join(" ⊕ "))
        })
        .collect()
}

fn level_dims(levels: &[Level]) -> String {
    format!("({})", join(&levels.iter().map(|l| &l.dim).collect::<Vec<_>>(), ","))
}

pub fn lefschetz_md(r: &LefschetzReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Lefschetz decomposition\n");
    let _ = writeln!(out, "{}\n", descriptor_line(&r.descriptor));
    let _ = writeln!(out, "family: {}; h = {}\n", r.family.as_str(), r.h);
    let heads: Vec<String> = r.components.iter().map(|c| psi_sub(&c.psi)).collect();
    let _ = writeln!(out, "R = {}\n", heads.join(" ⊕ "));
    let _ = writeln!(out, "## Components\n");
    for line in component_lines(r) {
        let _ = writeln!(out, "- {line}");
    }
    let _ = writeln!(out, "\nalgebraic part: {}; odd part: {}\n", psi_sub(&r.algebraic_part), psi_sub(&r.odd_part));
    let _ = writeln!(
        out,
        "| ψ | depth | graded dims | core algebra | core shape | core rank | mult in cohomology | Fourier-stable |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|---|---|---|");
    for c in &r.components {
        let rank = c.core.rank.map_or_else(|| "?".to_string(), |x| x.to_string());
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            c.psi,
            c.depth,
            level_dims(&c.levels),
            c.core.algebra,
            c.core.shape,
            rank,
            c.realization_mult,
            if c.fourier_fixed { "yes" } else { "no" }
        );
    }
    let _ = writeln!(out, "\n## Branching");
    for c in &r.components {
        let _ = writeln!(out, "\n### {}\n", psi_sub(&c.psi));
        for l in &c.levels {
            let parts: Vec<String> = l
                .constituents
                .iter()
                .map(|x| {
                    if x.mult == 1.into() {
                        format!("U^{{{}}}", x.mu)
                    } else {
                        format!("{}·U^{{{}}}", x.mult, x.mu)
                    }
                })
                .collect();
            let _ = writeln!(out, "- ħ = {}: {} (dim {})", l.level, parts.join(" ⊕ "), l.dim);
        }
    }
    notes(&mut out, &r.notes);
    out
}

pub fn beauville_md(codim: u32, table: &BTreeMap<i64, Vec<ProductClass>>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Beauville grading in codimension {codim}\n");
    let _ = writeln!(out, "| s | summands |");
    let _ = writeln!(out, "|---|---|");
    for (s, xis) in table {
        let parts: Vec<String> = descending(xis).into_iter().map(summand).collect();
        let _ = writeln!(out, "| {s} | {} |", parts.join(" ⊕ "));
    }
    out
}

pub fn product_md(dims: &[u32], indices: &[ProductIndex]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Index set for dimensions ({})\n", join(dims, ","));
    let _ = writeln!(out, "| index | action |");
    let _ = writeln!(out, "|---|---|");
    for p in indices {
        let _ = writeln!(out, "| ({}) | {} |", join(&p.index, ","), p.action);
    }
    let _ = writeln!(out, "\n{} indices", indices.len());
    out
}

pub fn verify_md(r: &VerificationReport) -> String {
    let p = &r.preset;
    let mut out = String::new();
    let _ = writeln!(out, "# Relation check\n");
    let _ = writeln!(
        out,
        "algebra {}, g = {}, H₁ of rank {} over D, dim D = {}, dim D^sym = {}, Lie algebra of dimension {}\n",
        p.algebra, p.g, p.module_rank, p.dim_d, p.dim_dsym, p.lie_dimension
    );
    let _ = writeln!(out, "D^sym basis: {}", p.dsym_basis.join(", "));
    let _ = writeln!(out, "κ = {}; h_1 acts by g − i on Λ^i: {}\n", r.kappa, pass(r.identity_spectrum));
    let _ = writeln!(out, "| relation | identity | pairs | max discrepancy | result |");
    let _ = writeln!(out, "|---|---|---|---|---|");
    for x in &r.relations {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            x.relation,
            x.identity,
            x.pairs_checked,
            x.max_discrepancy,
            pass(x.passed)
        );
    }
    let tp = &r.trace_pairing;
    let _ = writeln!(out, "\ntrace pairing: {} pairs, {}", tp.pairs_checked, pass(tp.passed));
    for f in &tp.failures {
        let _ = writeln!(out, "- ({}, {}): expected {}, found {}", f.left, f.right, f.expected, f.found);
    }
    let _ = writeln!(out, "\n## sl₂ triples\n");
    for s in &r.sl2_triples {
        let _ = writeln!(out, "- c = {}: t = {}, {}", s.c, s.t, pass(s.passed));
    }
    if let Some(summary) = r.failure_summary() {
        let _ = writeln!(out, "\n## Failures\n");
        for line in summary.split("; ") {
            let _ = writeln!(out, "- {line}");
        }
    }
    let _ = writeln!(out, "\nresult: {}", pass(r.passed));
    out
}

pub fn compare_md(r: &ComparisonReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Oracle comparison\n");
    let _ = writeln!(out, "family: {}\n", r.family.as_str());
    let _ = writeln!(out, "| ξ | oracle | predicted | result |");
    let _ = writeln!(out, "|---|---|---|---|");
    for x in &r.xi {
        let _ = writeln!(out, "| {} | {} | {} | {} |", x.xi, x.oracle, x.predicted, pass(x.passed));
    }
    let _ = writeln!(out, "\n| ψ | oracle | predicted | degrees | result |");
    let _ = writeln!(out, "|---|---|---|---|---|");
    for s in &r.strings {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            s.psi,
            s.oracle,
            s.predicted,
            join(&s.oracle_degrees, ","),
            pass(s.passed)
        );
    }
    if let Some(b) = &r.binomial {
        let _ = writeln!(out, "\n| k | oracle | C(2g,g−k) − C(2g,g−k−2) | result |");
        let _ = writeln!(out, "|---|---|---|---|");
        for x in b {
            let _ = writeln!(out, "| {} | {} | {} | {} |", x.k, x.oracle, x.binomial, pass(x.passed));
        }
    }
    if let Some(p) = &r.primitive {
        let _ = writeln!(out, "\n| degree | dim ⋂ ker Λ | predicted | result |");
        let _ = writeln!(out, "|---|---|---|---|");
        for x in p {
            let _ = writeln!(out, "| {} | {} | {} | {} |", x.degree, x.kernel_dim, x.predicted, pass(x.passed));
        }
    }
    let mismatches = r.mismatches();
    if !mismatches.is_empty() {
        let _ = writeln!(out, "\n## Mismatches\n");
        for m in mismatches {
            let _ = writeln!(out, "- {m}");
        }
    }
    notes(&mut out, &r.notes);
    let _ = writeln!(out, "\nresult: {}", pass(r.passed));
    out
}
