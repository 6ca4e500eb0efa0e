//! Report assembly: run the full pipeline on one diagram and collect every
//! section into a schema-stable, deterministic document.

use std::collections::BTreeMap;

use serde::Serialize;

use knotvol::bounds::{
    bounds_report, first_residual, prop_residuals, BoundsReport, DiagramFacts,
};
use knotvol::checkerboard::{
    build_graphs, multiplicity_profile, n_identity_holds, reduce_graph, ReducedGraph,
};
use knotvol::diagram::{validate, LinkDiagram, ValidationReport};
use knotvol::error::DiagramError;
use knotvol::jones::{
    colored_jones3_with_budget, head_tail, jones2, HeadTail, CABLE_BUDGET,
};
use knotvol::poly::JonesPoly;
use knotvol::twist::{ambiguous_delta_faces, augment, count_delta, detect_twists, twist_profile};

pub const SCHEMA_VERSION: u32 = 1;
/// Comparison tolerance for reference-volume soundness checks.
pub const VOLUME_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub name: Option<String>,
    pub crossings: usize,
    pub components: usize,
    pub writhe: i64,
    pub validation: ValidationSection,
    pub twist: Option<TwistSection>,
    pub delta: Option<usize>,
    pub augmented: Option<AugmentedSection>,
    pub checkerboard: Option<CheckerboardSection>,
    pub polynomials: Option<PolySection>,
    pub bounds: Option<BoundsReport>,
    pub prop31_residuals: Option<ResidualSection>,
    pub reference_volume: Option<f64>,
    pub slack: Option<f64>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationSection {
    pub is_alternating: bool,
    pub is_reduced: bool,
    pub is_connected: bool,
    pub is_prime: bool,
    pub passes_torus_gate: bool,
    pub messages: Vec<String>,
}

impl From<&ValidationReport> for ValidationSection {
    fn from(r: &ValidationReport) -> Self {
        ValidationSection {
            is_alternating: r.is_alternating,
            is_reduced: r.is_reduced,
            is_connected: r.is_connected,
            is_prime: r.is_prime,
            passes_torus_gate: r.passes_torus_gate,
            messages: r.messages.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistSection {
    pub twist_number: usize,
    pub lengths: Vec<usize>,
    /// i -> t_i.
    pub exact_counts: BTreeMap<usize, usize>,
    /// i -> g_i.
    pub at_least_counts: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AugmentedSection {
    pub circle_count: usize,
    pub residual_crossings: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckerboardSection {
    pub black: GraphSide,
    pub white: GraphSide,
    /// n_B(i) + n_W(i) = g_i for all i >= 2.
    pub n_identity_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSide {
    pub vertices: usize,
    pub edges: usize,
    pub reduced_edges: usize,
    pub multiplicities: Vec<usize>,
    pub triangles: usize,
    /// i -> edges of multiplicity >= i.
    pub n_at_least: BTreeMap<usize, usize>,
}

fn graph_side(vertices: usize, edges: usize, reduced: &ReducedGraph, triangles: usize) -> GraphSide {
    let max = reduced.edges.values().max().copied().unwrap_or(0);
    GraphSide {
        vertices,
        edges,
        reduced_edges: reduced.edge_count(),
        multiplicities: reduced.multiplicities(),
        triangles,
        n_at_least: (1..=max).map(|i| (i, reduced.edges_at_least(i))).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyOut {
    pub text: String,
    /// Ascending (exponent, coefficient) pairs.
    pub pairs: Vec<(i64, String)>,
}

impl PolyOut {
    fn new(p: &JonesPoly) -> Self {
        PolyOut { text: p.canonical_text(), pairs: p.exponent_pairs() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HeadTailOut {
    pub n: u8,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub gamma: i64,
    pub beta: i64,
    pub alpha: i64,
    pub top_exponent: i64,
    pub span: i64,
}

impl From<&HeadTail> for HeadTailOut {
    fn from(h: &HeadTail) -> Self {
        HeadTailOut {
            n: h.n,
            a: h.a,
            b: h.b,
            c: h.c,
            gamma: h.gamma,
            beta: h.beta,
            alpha: h.alpha,
            top_exponent: h.k,
            span: h.r,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolySection {
    pub jones2: PolyOut,
    pub jones2_head_tail: Option<HeadTailOut>,
    pub jones3: Option<PolyOut>,
    pub jones3_head_tail: Option<HeadTailOut>,
    /// Why the n=3 polynomial is absent, when it is.
    pub jones3_skipped: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualSection {
    pub identity1: i64,
    pub identity2: Option<i64>,
    pub identity3: Option<i64>,
    pub all_computed_zero: bool,
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub color3: bool,
    /// Base-crossing budget for the cabled n=3 computation.
    pub max_crossings: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { color3: false, max_crossings: CABLE_BUDGET }
    }
}

/// Pipeline outcome: a report plus how the run should terminate.
pub enum Outcome {
    Ok(Box<ReportDocument>),
    /// A validation gate failed; the partial report names it.
    Rejected(Box<ReportDocument>),
    /// A resource limit was hit (exit code 3 in the CLI).
    Resource(String),
}

pub fn analyze_diagram(
    name: Option<&str>,
    d: &LinkDiagram,
    reference_volume: Option<f64>,
    opts: &AnalyzeOptions,
) -> Outcome {
    let mut warnings = Vec::new();
    let validation = validate(d);
    let mut report = ReportDocument {
        schema_version: SCHEMA_VERSION,
        name: name.map(str::to_string),
        crossings: d.crossing_count(),
        components: d.components().len(),
        writhe: d.writhe(),
        validation: ValidationSection::from(&validation),
        twist: None,
        delta: None,
        augmented: None,
        checkerboard: None,
        polynomials: None,
        bounds: None,
        prop31_residuals: None,
        reference_volume,
        slack: None,
        warnings: Vec::new(),
    };

    // Twist structure is reported whenever detectable, even if other gates
    // fail; bounds require the full gate set.
    let regions = if validation.is_alternating && validation.is_reduced {
        match detect_twists(d) {
            Ok(r) => Some(r),
            Err(e) => {
                warnings.push(format!("twist detection failed: {e}"));
                None
            }
        }
    } else {
        None
    };
    let profile = regions.as_ref().map(|r| twist_profile(r));
    if let Some(p) = &profile {
        report.twist = Some(TwistSection {
            twist_number: p.twist_number(),
            lengths: p.lengths.clone(),
            exact_counts: p.exact_counts(),
            at_least_counts: p.at_least_counts(),
        });
    }

    let augmented = match (&regions, &profile) {
        (Some(r), Some(_)) => match augment(d, r) {
            Ok(a) => Some(a),
            Err(e) => {
                warnings.push(format!("augmentation failed: {e}"));
                None
            }
        },
        _ => None,
    };
    if let Some(a) = &augmented {
        report.augmented = Some(AugmentedSection {
            circle_count: a.circles.len(),
            residual_crossings: a.residual_crossings.len(),
        });
        report.delta = Some(count_delta(a));
        let ambiguous = ambiguous_delta_faces(a);
        if ambiguous > 0 {
            warnings.push(format!(
                "{ambiguous} face(s) have three segments and a piercing circle; \
                 not counted toward delta"
            ));
        }
    }

    let stats = if validation.is_alternating {
        match build_graphs(d) {
            Ok(pair) => {
                let black = reduce_graph(&pair.black);
                let white = reduce_graph(&pair.white);
                let stats = multiplicity_profile(&black, &white);
                let identity_ok = profile
                    .as_ref()
                    .map(|p| n_identity_holds(&stats, p))
                    .unwrap_or(false);
                if !identity_ok && profile.is_some() {
                    warnings.push(
                        "n_B(i)+n_W(i) != g_i for some i >= 2; diagram may not be twist reduced"
                            .to_string(),
                    );
                }
                report.checkerboard = Some(CheckerboardSection {
                    black: graph_side(
                        pair.black.vertex_count(),
                        pair.black.edge_count(),
                        &black,
                        stats.tau_black,
                    ),
                    white: graph_side(
                        pair.white.vertex_count(),
                        pair.white.edge_count(),
                        &white,
                        stats.tau_white,
                    ),
                    n_identity_ok: identity_ok,
                });
                Some(stats)
            }
            Err(e) => {
                warnings.push(format!("checkerboard graphs unavailable: {e}"));
                None
            }
        }
    } else {
        None
    };

    // Polynomials.
    let mut h2: Option<HeadTail> = None;
    let mut h3: Option<HeadTail> = None;
    match jones2(d) {
        Ok(v) => {
            let ht2 = match head_tail(&v, 2) {
                Ok(h) => {
                    if h.a != 1 || h.alpha != 1 {
                        warnings.push(format!(
                            "extreme Jones coefficients are not units: a={} alpha={}",
                            h.a, h.alpha
                        ));
                    }
                    h2 = Some(h.clone());
                    Some(HeadTailOut::from(&h))
                }
                Err(e) => {
                    warnings.push(format!("head/tail extraction failed for n=2: {e}"));
                    None
                }
            };
            let mut section = PolySection {
                jones2: PolyOut::new(&v),
                jones2_head_tail: ht2,
                jones3: None,
                jones3_head_tail: None,
                jones3_skipped: None,
            };
            if opts.color3 {
                match colored_jones3_with_budget(d, opts.max_crossings) {
                    Ok(j3) => {
                        match head_tail(&j3, 3) {
                            Ok(h) => {
                                if let Some(h2v) = &h2 {
                                    if h.b.abs() != h2v.b.abs() || h.beta.abs() != h2v.beta.abs() {
                                        warnings.push(format!(
                                            "stability check failed: |b3|={} vs |b2|={}, \
                                             |beta3|={} vs |beta2|={}",
                                            h.b, h2v.b, h.beta, h2v.beta
                                        ));
                                    }
                                }
                                h3 = Some(h.clone());
                                section.jones3_head_tail = Some(HeadTailOut::from(&h));
                            }
                            Err(e) => warnings
                                .push(format!("head/tail extraction failed for n=3: {e}")),
                        }
                        section.jones3 = Some(PolyOut::new(&j3));
                    }
                    Err(DiagramError::CrossingBudget { crossings, limit }) => {
                        return Outcome::Resource(format!(
                            "n=3 colored Jones needs {crossings} base crossings, budget is {limit} \
                             (raise --max-crossings)"
                        ));
                    }
                    Err(e) => warnings.push(format!("n=3 colored Jones unavailable: {e}")),
                }
            } else {
                section.jones3_skipped = Some("n=3 computation is opt-in (--color3)".to_string());
            }
            report.polynomials = Some(section);
        }
        Err(DiagramError::CrossingBudget { crossings, limit }) => {
            return Outcome::Resource(format!(
                "bracket evaluation needs {crossings} crossings, budget is {limit}"
            ));
        }
        Err(e) => warnings.push(format!("Jones polynomial unavailable: {e}")),
    }

    // Residuals.
    if let (Some(p), Some(h2v)) = (&profile, &h2) {
        let identity1 = first_residual(p, h2v);
        let (identity2, identity3) = match (&stats, &h3) {
            (Some(s), Some(h3v)) => {
                let r = prop_residuals(p, s, h2v, h3v);
                (Some(r[1]), Some(r[2]))
            }
            _ => (None, None),
        };
        let all_zero = identity1 == 0
            && identity2.unwrap_or(0) == 0
            && identity3.unwrap_or(0) == 0;
        if !all_zero {
            warnings.push(
                "nonzero coefficient-identity residual; diagram may not be twist reduced"
                    .to_string(),
            );
        }
        report.prop31_residuals = Some(ResidualSection {
            identity1,
            identity2,
            identity3,
            all_computed_zero: all_zero,
        });
    }

    // Bounds apply only behind the full gate set.
    if validation.all_pass() {
        let p = profile.as_ref().expect("gates passed implies twists detected");
        let facts = DiagramFacts {
            crossings: d.crossing_count(),
            is_knot: d.is_knot(),
            is_figure_eight: d.is_knot() && d.crossing_count() == 4,
        };
        let section = bounds_report(facts, p, report.delta, h2.as_ref(), h3.as_ref());
        // Algebraic cross-check: via the identities, the coefficient bound
        // equals 4 t1 + 10 g2 - a whenever both data sources agree.
        if let (Some(m), Some(a), true) = (
            section.coefficient.v3_multiple,
            section.coefficient.additive_constant,
            report
                .prop31_residuals
                .as_ref()
                .is_some_and(|r| r.all_computed_zero),
        ) {
            let expected = 4 * p.exactly(1) as i64 + 10 * p.at_least(2) as i64 - a;
            if m != expected {
                warnings.push(format!(
                    "coefficient bound {m} disagrees with twist form {expected}"
                ));
            }
        }
        if let Some(vol) = reference_volume {
            for b in section.below_reference(vol, VOLUME_TOLERANCE) {
                warnings.push(format!(
                    "bound {} = {} lies below the reference volume {vol}",
                    b.name,
                    b.numeric.unwrap_or(f64::NAN)
                ));
            }
            report.slack = section.best.as_ref().map(|b| b.numeric - vol);
        }
        report.bounds = Some(section);
    }

    report.warnings = warnings;
    if report.validation.is_alternating
        && report.validation.is_reduced
        && report.validation.is_connected
        && report.validation.is_prime
        && report.validation.passes_torus_gate
    {
        Outcome::Ok(Box::new(report))
    } else {
        Outcome::Rejected(Box::new(report))
    }
}

/// Human-readable rendering.
pub fn render_text(r: &ReportDocument) -> String {
    let mut out = String::new();
    let name = r.name.as_deref().unwrap_or("(unnamed)");
    out.push_str(&format!(
        "{name}: {} crossings, {} component(s), writhe {}\n",
        r.crossings, r.components, r.writhe
    ));
    let v = &r.validation;
    out.push_str(&format!(
        "gates: alternating={} reduced={} connected={} prime={} torus_gate={}\n",
        v.is_alternating, v.is_reduced, v.is_connected, v.is_prime, v.passes_torus_gate
    ));
    for m in &v.messages {
        out.push_str(&format!("  note: {m}\n"));
    }
    if let Some(t) = &r.twist {
        out.push_str(&format!(
            "twists: t = {}, lengths {:?}\n",
            t.twist_number, t.lengths
        ));
    }
    if let Some(d) = r.delta {
        out.push_str(&format!("triangular regions: delta = {d}\n"));
    }
    if let Some(c) = &r.checkerboard {
        out.push_str(&format!(
            "checkerboard: B {}v/{}e (tau={}, mult {:?}), W {}v/{}e (tau={}, mult {:?})\n",
            c.black.vertices,
            c.black.edges,
            c.black.triangles,
            c.black.multiplicities,
            c.white.vertices,
            c.white.edges,
            c.white.triangles,
            c.white.multiplicities
        ));
    }
    if let Some(p) = &r.polynomials {
        out.push_str(&format!("J(2) = {}\n", p.jones2.text));
        if let Some(j3) = &p.jones3 {
            out.push_str(&format!("J(3) = {}\n", j3.text));
        } else if let Some(reason) = &p.jones3_skipped {
            out.push_str(&format!("J(3): skipped ({reason})\n"));
        }
    }
    if let Some(res) = &r.prop31_residuals {
        out.push_str(&format!(
            "identity residuals: {} {} {}\n",
            res.identity1,
            res.identity2.map_or("-".to_string(), |x| x.to_string()),
            res.identity3.map_or("-".to_string(), |x| x.to_string())
        ));
    }
    if let Some(b) = &r.bounds {
        for bound in b.all() {
            match (bound.v3_multiple, bound.numeric) {
                (Some(m), Some(n)) => out.push_str(&format!(
                    "bound {:<13} = {m:>3} * v3 = {n:.6}\n",
                    bound.name
                )),
                _ => out.push_str(&format!(
                    "bound {:<13} : not applicable ({})\n",
                    bound.name,
                    bound.reason.as_deref().unwrap_or("")
                )),
            }
        }
        if let Some(best) = &b.best {
            out.push_str(&format!(
                "best bound: {} = {} * v3 = {:.6}\n",
                best.name, best.v3_multiple, best.numeric
            ));
        }
    }
    if let Some(vol) = r.reference_volume {
        out.push_str(&format!("reference volume: {vol:.10}\n"));
        if let Some(slack) = r.slack {
            out.push_str(&format!("slack (best - reference): {slack:.10}\n"));
        }
    }
    for w in &r.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

/// One-line CSV summary (shared by `analyze --format csv` and batch).
pub fn summary_header() -> &'static str {
    "name,crossings,status,twist_number,best_bound,best_multiple,best_numeric,reference_volume,slack,residuals_ok,warnings"
}

pub fn summary_row(name: &str, status: &str, r: Option<&ReportDocument>) -> String {
    match r {
        None => format!("{name},,{status},,,,,,,,"),
        Some(r) => {
            let t = r
                .twist
                .as_ref()
                .map(|t| t.twist_number.to_string())
                .unwrap_or_default();
            let (bn, bm, bv) = r
                .bounds
                .as_ref()
                .and_then(|b| b.best.as_ref())
                .map(|b| (b.name.to_string(), b.v3_multiple.to_string(), format!("{:.10}", b.numeric)))
                .unwrap_or_default();
            let vol = r
                .reference_volume
                .map(|v| format!("{v:.10}"))
                .unwrap_or_default();
            let slack = r.slack.map(|s| format!("{s:.10}")).unwrap_or_default();
            let res = r
                .prop31_residuals
                .as_ref()
                .map(|x| x.all_computed_zero.to_string())
                .unwrap_or_default();
            format!(
                "{name},{},{status},{t},{bn},{bm},{bv},{vol},{slack},{res},{}",
                r.crossings,
                r.warnings.len()
            )
        }
    }
}
