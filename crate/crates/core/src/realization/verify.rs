//! Exact checks of the commutation relations between h, L and Λ.

use num_traits::Zero;
use serde::Serialize;

use super::algebra::AlgebraPreset;
use super::linalg::{q, QMat, Q};
use super::operators::{identity_spectrum_ok, OperatorSet};
use super::sparse::{ExtOp, Mask};
use crate::error::{Error, Result};

/// Reads off coordinates of an operator in the span of a fixed list, from
/// a set of entries on which the list is linearly independent.
struct SpanSolver<'a> {
    ops: &'a [ExtOp],
    positions: Vec<(Mask, Mask)>,
    inverse: QMat,
}

impl<'a> SpanSolver<'a> {
    fn new(ops: &'a [ExtOp]) -> Result<Self> {
        let n = ops.len();
        let mut candidates: Vec<(Mask, Mask)> = ops.iter().flat_map(|o| o.support()).collect();
        candidates.sort_unstable();
        candidates.dedup();
        let mut positions = Vec::new();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for (c, r) in candidates {
            if positions.len() == n {
                break;
            }
            let row: Vec<Q> = ops.iter().map(|o| o.entry(r, c)).collect();
            let mut trial = rows.clone();
            trial.push(row);
            if QMat::from_rows(trial.clone()).rank() == trial.len() {
                rows = trial;
                positions.push((c, r));
            }
        }
        if positions.len() < n {
            return Err(Error::Verification("operator family is linearly dependent".into()));
        }
        let inverse = QMat::from_rows(rows).inverse().expect("independent rows");
        Ok(SpanSolver { ops, positions, inverse })
    }

    fn coordinates(&self, x: &ExtOp) -> Vec<Q> {
        let rhs: Vec<Q> = self.positions.iter().map(|&(c, r)| x.entry(r, c)).collect();
        self.inverse.mul_vec(&rhs)
    }

    fn combination(&self, t: &[Q]) -> Result<ExtOp> {
        let dim = self.ops[0].dim();
        let terms: Vec<(Q, &ExtOp)> = t.iter().cloned().zip(self.ops.iter()).collect();
        ExtOp::linear_combination(dim, &terms)
    }
}

fn fmt_q(x: &Q) -> String {
    x.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationFailure {
    pub left: usize,
    pub right: usize,
    /// Largest entry of (commutator − prediction); zero when only the solved element is off.
    pub discrepancy: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub relation: char,
    pub identity: String,
    pub pairs_checked: usize,
    pub passed: bool,
    pub max_discrepancy: String,
    pub failures: Vec<RelationFailure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairingFailure {
    pub left: usize,
    pub right: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairingReport {
    pub pairs_checked: usize,
    pub passed: bool,
    pub failures: Vec<PairingFailure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sl2Report {
    pub c: String,
    /// [Λ_c, L_c] = h_{c²}; then [h_{c²}, L_c] = t·L_c and [h_{c²}, Λ_c] = −t·Λ_c.
    pub t: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresetSummary {
    pub algebra: String,
    pub g: u32,
    pub module_rank: usize,
    pub dim_d: usize,
    pub dim_dsym: usize,
    pub lie_dimension: usize,
    pub dsym_basis: Vec<String>,
    pub base_form: Vec<Vec<String>>,
}

impl PresetSummary {
    pub fn new(p: &AlgebraPreset) -> Self {
        PresetSummary {
            algebra: p.kind.name(),
            g: p.g,
            module_rank: p.k,
            dim_d: p.dim(),
            dim_dsym: p.dsym.len(),
            lie_dimension: p.lie_dimension(),
            dsym_basis: p.dsym.iter().map(|c| p.element_name(c)).collect(),
            base_form: (0..p.two_g())
                .map(|i| (0..p.two_g()).map(|j| p.form[(i, j)].to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub preset: PresetSummary,
    pub kappa: String,
    pub identity_spectrum: bool,
    pub relations: Vec<RelationReport>,
    pub trace_pairing: PairingReport,
    pub sl2_triples: Vec<Sl2Report>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn failure_summary(&self) -> Option<String> {
        if self.passed {
            return None;
        }
        let mut parts = Vec::new();
        if !self.identity_spectrum {
            parts.push("h_1 is not g − i on Λ^i".to_string());
        }
        for r in self.relations.iter().filter(|r| !r.passed) {
            let f = &r.failures[0];
            parts.push(format!("relation {}) fails at basis pair ({}, {}): {}", r.relation, f.left, f.right, f.detail));
        }
        if let Some(f) = self.trace_pairing.failures.first() {
            parts.push(format!(
                "trace pairing fails at ({}, {}): expected {}, found {}",
                f.left, f.right, f.expected, f.found
            ));
        }
        for s in self.sl2_triples.iter().filter(|s| !s.passed) {
            parts.push(format!("no sl₂-triple through c = {}", s.c));
        }
        Some(parts.join("; "))
    }
}

/// Checks commutator = Σ t·target with t solved from the commutator, and t = predicted.
fn check_against(
    commutator: &ExtOp,
    solver: &SpanSolver,
    predicted: &[Q],
) -> Result<(Q, Option<String>)> {
    let solved = solver.coordinates(commutator);
    let realized = solver.combination(&solved)?;
    if &realized != commutator {
        let gap = commutator.sub(&solver.combination(predicted)?)?.max_abs();
        return Ok((gap, Some("commutator leaves the predicted span".into())));
    }
    let gap = commutator.sub(&solver.combination(predicted)?)?.max_abs();
    if solved != predicted {
        let s: Vec<String> = solved.iter().map(fmt_q).collect();
        let p: Vec<String> = predicted.iter().map(fmt_q).collect();
        return Ok((gap, Some(format!("solved coordinates [{}] differ from predicted [{}]", s.join(", "), p.join(", ")))));
    }
    Ok((gap, None))
}

struct Collector {
    relation: char,
    identity: String,
    pairs: usize,
    max: Q,
    failures: Vec<RelationFailure>,
}

impl Collector {
    fn new(relation: char, identity: &str) -> Self {
        Collector { relation, identity: identity.into(), pairs: 0, max: Q::zero(), failures: Vec::new() }
    }

    fn record(&mut self, left: usize, right: usize, gap: Q, problem: Option<String>) {
        self.pairs += 1;
        if gap > self.max {
            self.max = gap.clone();
        }
        if let Some(detail) = problem {
            self.failures.push(RelationFailure { left, right, discrepancy: fmt_q(&gap), detail });
        } else if !gap.is_zero() {
            self.failures.push(RelationFailure {
                left,
                right,
                discrepancy: fmt_q(&gap),
                detail: "nonzero residual".into(),
            });
        }
    }

    fn finish(self) -> RelationReport {
        RelationReport {
            relation: self.relation,
            identity: self.identity,
            pairs_checked: self.pairs,
            passed: self.failures.is_empty(),
            max_discrepancy: fmt_q(&self.max),
            failures: self.failures,
        }
    }
}

pub fn verify_relations(ops: &OperatorSet) -> Result<Vec<RelationReport>> {
    let p = &ops.preset;
    let r = p.dim();
    let s = p.dsym.len();
    let h_solver = SpanSolver::new(&ops.h)?;
    let l_solver = SpanSolver::new(&ops.l)?;
    let lam_solver = SpanSolver::new(&ops.lambda)?;
    let sym_coords = |x: &[Q]| {
        p.dsym_coordinates(x)
            .ok_or_else(|| Error::Verification(format!("{} is not †-symmetric", p.element_name(x))))
    };
    let mut out = Vec::new();

    let mut a = Collector::new('a', "[h_α, h_β] = h_{αβ−βα}");
    for i in 0..r {
        for j in 0..r {
            let c = ops.h[i].commutator(&ops.h[j])?;
            let (ei, ej) = (p.basis(i), p.basis(j));
            let pred: Vec<Q> = p.mul(&ei, &ej).iter().zip(p.mul(&ej, &ei)).map(|(x, y)| x - y).collect();
            let (gap, problem) = check_against(&c, &h_solver, &pred)?;
            a.record(i, j, gap, problem);
        }
    }
    out.push(a.finish());

    for (tag, family, identity) in [('b', &ops.l, "[L_c, L_c'] = 0"), ('c', &ops.lambda, "[Λ_c, Λ_c'] = 0")] {
        let mut col = Collector::new(tag, identity);
        for i in 0..s {
            for j in 0..s {
                let gap = family[i].commutator(&family[j])?.max_abs();
                col.record(i, j, gap, None);
            }
        }
        out.push(col.finish());
    }

    let mut d = Collector::new('d', "[h_α, L_c] = L_{−α†c−cα}");
    let mut e = Collector::new('e', "[h_α, Λ_c] = Λ_{αc+cα†}");
    for i in 0..r {
        let alpha = p.basis(i);
        let alpha_dag = p.dagger_of(&alpha);
        for j in 0..s {
            let c = &p.dsym[j];
            let lower: Vec<Q> = p.mul(&alpha_dag, c).iter().zip(p.mul(c, &alpha)).map(|(x, y)| -(x + y)).collect();
            let comm = ops.h[i].commutator(&ops.l[j])?;
            let (gap, problem) = check_against(&comm, &l_solver, &sym_coords(&lower)?)?;
            d.record(i, j, gap, problem);

            let raise: Vec<Q> = p.mul(&alpha, c).iter().zip(p.mul(c, &alpha_dag)).map(|(x, y)| x + y).collect();
            let comm = ops.h[i].commutator(&ops.lambda[j])?;
            let (gap, problem) = check_against(&comm, &lam_solver, &sym_coords(&raise)?)?;
            e.record(i, j, gap, problem);
        }
    }
    out.push(d.finish());
    out.push(e.finish());

    let mut f = Collector::new('f', "[Λ_b, L_c] = h_{bc}");
    for i in 0..s {
        for j in 0..s {
            let comm = ops.lambda[i].commutator(&ops.l[j])?;
            let pred = p.mul(&p.dsym[i], &p.dsym[j]);
            let (gap, problem) = check_against(&comm, &h_solver, &pred)?;
            f.record(i, j, gap, problem);
        }
    }
    out.push(f.finish());
    Ok(out)
}

/// Top-degree coefficient of L_c Λ_b(vol), against trace(bc)/2.
pub fn trace_pairing_check(ops: &OperatorSet) -> Result<PairingReport> {
    let p = &ops.preset;
    let vol = ops.volume();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for (i, b) in p.dsym.iter().enumerate() {
        let lowered = ops.lambda[i].column(vol);
        for (j, c) in p.dsym.iter().enumerate() {
            pairs += 1;
            let found: Q = lowered.iter().map(|(m, v)| v * ops.l[j].entry(vol, *m)).sum();
            let expected = p.trace_v(&p.mul(b, c)) / q(2);
            if found != expected {
                failures.push(PairingFailure { left: i, right: j, expected: fmt_q(&expected), found: fmt_q(&found) });
            }
        }
    }
    Ok(PairingReport { pairs_checked: pairs, passed: failures.is_empty(), failures })
}

/// For each basis element c of D^sym, closure of span{L_c, [Λ_c, L_c], Λ_c} under brackets.
pub fn sl2_check(ops: &OperatorSet) -> Result<Vec<Sl2Report>> {
    let p = &ops.preset;
    let mut out = Vec::new();
    for (j, c) in p.dsym.iter().enumerate() {
        let (l, lam) = (&ops.l[j], &ops.lambda[j]);
        let hh = lam.commutator(l)?;
        let up = hh.commutator(l)?;
        let down = hh.commutator(lam)?;
        let ratio = |x: &ExtOp, base: &ExtOp| -> Option<Q> {
            let (c0, r0) = base.support().next()?;
            let t = x.entry(r0, c0) / base.entry(r0, c0);
            let check = ExtOp::linear_combination(base.dim(), &[(t.clone(), base)]).ok()?;
            (&check == x).then_some(t)
        };
        let (passed, t) = match (ratio(&up, l), ratio(&down, lam)) {
            (Some(t), Some(t2)) => (!t.is_zero() && t2 == -t.clone(), t),
            _ => (false, Q::zero()),
        };
        out.push(Sl2Report { c: p.element_name(c), t: fmt_q(&t), passed });
    }
    Ok(out)
}

pub fn verify(ops: &OperatorSet) -> Result<VerificationReport> {
    let relations = verify_relations(ops)?;
    let trace_pairing = trace_pairing_check(ops)?;
    let sl2_triples = sl2_check(ops)?;
    let identity_spectrum = identity_spectrum_ok(ops);
    let passed = identity_spectrum
        && relations.iter().all(|r| r.passed)
        && trace_pairing.passed
        && sl2_triples.iter().all(|s| s.passed);
    Ok(VerificationReport {
        preset: PresetSummary::new(&ops.preset),
        kappa: fmt_q(&ops.kappa),
        identity_spectrum,
        relations,
        trace_pairing,
        sl2_triples,
        passed,
    })
}
