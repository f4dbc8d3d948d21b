use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::assaf::{assaf_graph, cached_standard_graph, VertexFilter};
use super::{isomorphism, SignedColoredGraph};
use crate::error::Result;
use crate::limits;
use crate::qsym_schur::{schur_from_f, QSymPolynomial, SchurPolynomial};
use crate::rsk_yam::{permutation_jams, rsk, superstandard};
use crate::shapes::{Diagram, Partition};
use crate::words::{strict_pattern_find, Permutation};

/// The unique `λ` with `C ≅ 𝒢_λ`, for a connected `C`.
pub fn deg_type(c: &SignedColoredGraph) -> Option<Partition> {
    let sigs = c.signature_multiset();
    Partition::all(c.degree()).into_iter().find(|lambda| {
        let g = cached_standard_graph(lambda);
        g.len() == c.len() && g.signature_multiset() == sigs && isomorphism(c, &g).is_some()
    })
}

/// Every component of every width-6 window restriction is a standard graph.
pub fn is_locally_standard(g: &SignedColoredGraph) -> bool {
    let n = g.degree() as i64;
    let windows: BTreeSet<(usize, usize)> = (-4..=n)
        .filter_map(|a| {
            let lo = a.max(1);
            let hi = (a + 5).min(n);
            (lo <= hi).then_some((lo as usize, hi as usize))
        })
        .collect();
    windows.into_iter().all(|(lo, hi)| {
        let r = g.restrict_clipped(lo, hi);
        r.component_graphs().iter().all(|c| deg_type(c).is_some())
    })
}

/// Triples `(i, j, v)` where `|i - j| > 2` and the `i`-then-`j` path from `v`
/// does not close into a square.
pub fn commuting_violations(g: &SignedColoredGraph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in g.colors() {
        for j in g.colors() {
            if i.abs_diff(j) <= 2 {
                continue;
            }
            for v in 0..g.len() {
                let Some(w) = g.partner(i, v) else { continue };
                let Some(x) = g.partner(j, w) else { continue };
                let y = g.partner(j, v);
                if y.is_none() || y != g.partner(i, x) {
                    out.push((i, j, v));
                }
            }
        }
    }
    out
}

/// Locally Standard and Commuting properties, checked directly.
pub fn is_deg_by_definition(g: &SignedColoredGraph) -> bool {
    commuting_violations(g).is_empty() && is_locally_standard(g)
}

fn pistoled(delta: &Diagram, idx: &[usize]) -> bool {
    delta.is_pistoled(idx)
}

/// The pattern test for a component of `ℋ_δ`: no `δ`-strict 1342 or 2431, and
/// every strict 12543 or 34521 has its five indices pistoled or one of its
/// four-index ends not pistoled.
pub fn pattern_criterion(c: &SignedColoredGraph, delta: &Diagram) -> bool {
    c.keys().iter().all(|pi| vertex_pattern_ok(pi, delta))
}

pub(crate) fn vertex_pattern_ok(pi: &[u32], delta: &Diagram) -> bool {
    for p in [[1, 3, 4, 2], [2, 4, 3, 1]] {
        if strict_pattern_find(pi, &p).iter().any(|o| pistoled(delta, &o.indices)) {
            return false;
        }
    }
    for p in [[1, 2, 5, 4, 3], [3, 4, 5, 2, 1]] {
        for o in strict_pattern_find(pi, &p) {
            let idx = &o.indices;
            if !(pistoled(delta, idx) || !pistoled(delta, &idx[..4]) || !pistoled(delta, &idx[1..])) {
                return false;
            }
        }
    }
    true
}

/// Outcome of checking that each dual equivalence component of `ℋ_δ` of type `λ`
/// meets `SYam_δ(λ)` exactly once and no other `SYam_δ(μ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YamDecompositionReport {
    pub components: usize,
    pub deg_components: usize,
    pub violations: Vec<String>,
}

impl YamDecompositionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The shape `μ` with `π ∈ SYam_δ(μ)`, if any.
fn syam_shape(pi: &[u32], delta: &Diagram) -> Result<Option<Partition>> {
    let p = rsk(pi).0;
    let mu = p.shape();
    if p != superstandard(&mu) {
        return Ok(None);
    }
    let perm = Permutation::new(pi.to_vec())?;
    Ok((!permutation_jams(&perm, delta)?).then_some(mu))
}

pub fn yam_decomposition_check(delta: &Diagram) -> Result<YamDecompositionReport> {
    let h = assaf_graph(delta, &VertexFilter::All)?;
    let comps = h.components();
    let per: Vec<Result<(bool, Option<String>)>> = comps
        .par_iter()
        .map(|comp| {
            let g = h.induced(comp);
            let Some(lambda) = deg_type(&g) else {
                return Ok((false, None));
            };
            let mut hits = 0;
            let mut stray = Vec::new();
            for key in g.keys() {
                if let Some(mu) = syam_shape(key, delta)? {
                    if mu == lambda {
                        hits += 1;
                    } else {
                        stray.push(format!("{}∈SYam({mu})", crate::words::Word::new(key.clone())?));
                    }
                }
            }
            let first = crate::words::Word::new(g.key(0).to_vec())?;
            let msg = (hits != 1 || !stray.is_empty()).then(|| {
                format!("component of {first} (type {lambda}): {hits} vertices in SYam({lambda}); others {stray:?}")
            });
            Ok((true, msg))
        })
        .collect();
    let mut report = YamDecompositionReport { components: comps.len(), ..Default::default() };
    for r in per {
        let (is_deg, msg) = r?;
        report.deg_components += usize::from(is_deg);
        report.violations.extend(msg);
    }
    Ok(report)
}

/// Per-component Schur expansion of `Σ_v F_σ(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub id: usize,
    pub size: usize,
    /// Smallest vertex key of the component.
    pub representative: Vec<u32>,
    pub deg_type: Option<Partition>,
    pub schur: std::result::Result<SchurPolynomial, String>,
}

impl ComponentReport {
    /// Expansion exists and has nonnegative integer coefficients.
    pub fn is_positive(&self) -> bool {
        self.schur.as_ref().is_ok_and(|s| s.is_positive())
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "componentId": self.id,
            "size": self.size,
            "representative": crate::words::Word::new(self.representative.clone()).map(|w| w.to_string()).unwrap_or_default(),
            "degType": self.deg_type.as_ref().map(|l| l.parts().to_vec()),
        });
        match &self.schur {
            Ok(s) => v["schur"] = s.to_json(),
            Err(e) => v["failure"] = json!(e),
        }
        v
    }
}

pub fn component_schur_report(delta: &Diagram) -> Result<Vec<ComponentReport>> {
    limits::check_graph(delta.len())?;
    let h = assaf_graph(delta, &VertexFilter::All)?;
    component_reports(&h)
}

/// Per-component report for an already built graph.
pub fn component_reports(h: &SignedColoredGraph) -> Result<Vec<ComponentReport>> {
    let comps = h.components();
    Ok(comps
        .par_iter()
        .enumerate()
        .map(|(id, comp)| {
            let g = h.induced(comp);
            let mut f = QSymPolynomial::zero(h.degree());
            for &s in g.signatures() {
                f.add_term(s, &crate::qsym_schur::BivariatePoly::one());
            }
            ComponentReport {
                id,
                size: comp.len(),
                representative: g.key(0).to_vec(),
                deg_type: deg_type(&g),
                schur: schur_from_f(&f).map_err(|e| e.to_string()),
            }
        })
        .collect())
}
