//! Volume upper bounds for hyperbolic alternating links, and the
//! coefficient identities that tie them to the colored Jones polynomial.
//!
//! All bounds are integer multiples of v3, the volume of the regular ideal
//! hyperbolic tetrahedron; integer arithmetic everywhere, floating point
//! only at the final multiplication by v3.

use serde::Serialize;

use crate::checkerboard::GraphStats;
use crate::jones::HeadTail;
use crate::twist::TwistProfile;

/// v3 = 3 * Λ(pi/3), computed from the zeta series of the Lobachevsky
/// function Λ(θ) = θ - θ ln(2θ) + Σ_{m>=1} ζ(2m) θ^{2m+1} / (m (2m+1) π^{2m}).
pub fn v3() -> f64 {
    3.0 * lobachevsky(std::f64::consts::PI / 3.0)
}

/// Reference value of v3 to 17 digits, for cross-checks.
pub const V3_REFERENCE: f64 = 1.014_941_606_409_653_6;

fn lobachevsky(theta: f64) -> f64 {
    let mut sum = theta - theta * (2.0 * theta).ln();
    let ratio = theta / std::f64::consts::PI;
    let ratio2 = ratio * ratio;
    let mut power = ratio2;
    for m in 1..60 {
        let term = zeta_even(2 * m) * power * theta / (m as f64 * (2 * m + 1) as f64);
        sum += term;
        if term < 1e-18 {
            break;
        }
        power *= ratio2;
    }
    sum
}

/// ζ(s) for even s: closed forms for small s, direct summation beyond
/// (for s >= 12 the truncation error after k = 100 is below 1e-23).
fn zeta_even(s: u32) -> f64 {
    let pi = std::f64::consts::PI;
    match s {
        2 => pi.powi(2) / 6.0,
        4 => pi.powi(4) / 90.0,
        6 => pi.powi(6) / 945.0,
        8 => pi.powi(8) / 9450.0,
        10 => pi.powi(10) / 93555.0,
        _ => (1..=100u64).map(|k| (k as f64).powi(-(s as i32))).sum(),
    }
}

/// One volume bound, always an integer multiple of v3.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bound {
    pub name: &'static str,
    /// The integer multiple of v3, when the bound applies.
    pub v3_multiple: Option<i64>,
    /// `v3_multiple * v3`, when applicable.
    pub numeric: Option<f64>,
    /// The additive constant actually used by the case split, if any.
    pub additive_constant: Option<i64>,
    pub applicable: bool,
    pub reason: Option<String>,
}

impl Bound {
    fn applicable(name: &'static str, multiple: i64, constant: Option<i64>) -> Self {
        Bound {
            name,
            v3_multiple: Some(multiple),
            numeric: Some(multiple as f64 * v3()),
            additive_constant: constant,
            applicable: true,
            reason: None,
        }
    }

    fn not_applicable(name: &'static str, reason: impl Into<String>) -> Self {
        Bound {
            name,
            v3_multiple: None,
            numeric: None,
            additive_constant: None,
            applicable: false,
            reason: Some(reason.into()),
        }
    }

    /// Non-positive multiples mean the theorem gives no information.
    fn gated(name: &'static str, multiple: i64, constant: Option<i64>) -> Self {
        if multiple > 0 {
            Bound::applicable(name, multiple, constant)
        } else {
            Bound::not_applicable(
                name,
                format!("multiple {multiple} is not positive; outside the useful range"),
            )
        }
    }
}

/// Crossing-number bound (4c - 16) v3 for hyperbolic knots other than the
/// figure-eight.
pub fn adams_bound(crossings: usize, is_knot: bool, is_figure_eight: bool) -> Bound {
    const NAME: &str = "adams";
    if !is_knot {
        return Bound::not_applicable(NAME, "stated for knots only");
    }
    if is_figure_eight {
        return Bound::not_applicable(NAME, "excluded for the figure-eight knot");
    }
    Bound::gated(NAME, 4 * crossings as i64 - 16, None)
}

/// Twist-number bound 10 (t - 1) v3.
pub fn agol_thurston_bound(twist_number: usize) -> Bound {
    Bound::gated("agol_thurston", 10 * (twist_number as i64 - 1), None)
}

/// Refined twist bound (10 g4 + 8 t3 + 6 t2 + 4 t1 - a) v3 with
/// a = 10 if g4 > 0, 7 if t3 > 0, 6 otherwise (tested in that order).
pub fn refined_bound(p: &TwistProfile) -> Bound {
    let (g4, t3, t2, t1) = profile_counts(p);
    let a = if g4 > 0 {
        10
    } else if t3 > 0 {
        7
    } else {
        6
    };
    let multiple = 10 * g4 + 8 * t3 + 6 * t2 + 4 * t1 - a;
    Bound::gated("refined", multiple, Some(a))
}

/// The refinement subtracting the triangular-region count:
/// (10 g4 + 8 t3 + 6 t2 + 4 t1 - a - Δ) v3 with a = 8 / 6 / 4 by the same
/// case split.
pub fn refined_delta_bound(p: &TwistProfile, delta: usize) -> Bound {
    let (g4, t3, t2, t1) = profile_counts(p);
    let a = if g4 > 0 {
        8
    } else if t3 > 0 {
        6
    } else {
        4
    };
    let multiple = 10 * g4 + 8 * t3 + 6 * t2 + 4 * t1 - a - delta as i64;
    Bound::gated("refined_delta", multiple, Some(a))
}

fn profile_counts(p: &TwistProfile) -> (i64, i64, i64, i64) {
    (
        p.at_least(4) as i64,
        p.exactly(3) as i64,
        p.exactly(2) as i64,
        p.exactly(1) as i64,
    )
}

/// Coefficient-based bounds: the refined bound
/// (6((c2+γ2) - (c3+γ3)) - 2(b2+β2) - a) v3 with a = 10 unless
/// b2+β2 = (c2-c3)+(γ2-γ3) in which case a = 4, and the coarser
/// 10 (b2+β2-1) v3. The first never exceeds the second.
pub fn coefficient_bound(h2: &HeadTail, h3: &HeadTail) -> (Bound, Bound) {
    let b_sum = h2.b + h2.beta;
    let volumish = Bound::gated("volumish", 10 * (b_sum - 1), None);
    if h2.b.abs() != h3.b.abs() || h2.beta.abs() != h3.beta.abs() {
        let refined = Bound::not_applicable(
            "coefficient",
            format!(
                "second-coefficient stability violated: |b2|={} |b3|={} |beta2|={} |beta3|={}",
                h2.b, h3.b, h2.beta, h3.beta
            ),
        );
        return (refined, volumish);
    }
    let lead_diff = (h2.c + h2.gamma) - (h3.c + h3.gamma);
    let a = if b_sum != (h2.c - h3.c) + (h2.gamma - h3.gamma) { 10 } else { 4 };
    let multiple = 6 * lead_diff - 2 * b_sum - a;
    let refined = Bound::gated("coefficient", multiple, Some(a));
    if let (Some(r), Some(v)) = (refined.v3_multiple, volumish.v3_multiple) {
        debug_assert!(r <= v, "coefficient bound must not exceed the volumish bound");
    }
    (refined, volumish)
}

/// Residuals (left minus right) of the three coefficient identities:
///   b2 + β2 = t(D)
///   (c2+γ2) - (c3+γ3) = t(D) + g2(D)
///   (c2+c3) + (γ2+γ3) - (b2² + β2²) = g2 - 2 (τ_W + τ_B)
/// τ_A is read as the white triangle count, pinned by the worked 9_20
/// example. All three vanish on twist-reduced alternating diagrams.
pub fn prop_residuals(
    p: &TwistProfile,
    s: &GraphStats,
    h2: &HeadTail,
    h3: &HeadTail,
) -> [i64; 3] {
    let t = p.twist_number() as i64;
    let g2 = p.at_least(2) as i64;
    let r1 = (h2.b + h2.beta) - t;
    let r2 = ((h2.c + h2.gamma) - (h3.c + h3.gamma)) - (t + g2);
    let r3 = ((h2.c + h3.c) + (h2.gamma + h3.gamma) - (h2.b * h2.b + h2.beta * h2.beta))
        - (g2 - 2 * (s.tau_white as i64 + s.tau_black as i64));
    [r1, r2, r3]
}

/// First identity alone (needs only the Jones polynomial).
pub fn first_residual(p: &TwistProfile, h2: &HeadTail) -> i64 {
    (h2.b + h2.beta) - p.twist_number() as i64
}

/// All six bounds for one diagram, plus the smallest applicable one.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub adams: Bound,
    pub agol_thurston: Bound,
    pub refined: Bound,
    pub refined_delta: Bound,
    pub coefficient: Bound,
    pub volumish: Bound,
    pub best: Option<BestBound>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BestBound {
    pub name: &'static str,
    pub v3_multiple: i64,
    pub numeric: f64,
}

impl BoundsReport {
    pub fn all(&self) -> [&Bound; 6] {
        [
            &self.adams,
            &self.agol_thurston,
            &self.refined,
            &self.refined_delta,
            &self.coefficient,
            &self.volumish,
        ]
    }

    /// Applicable bounds lying below `volume - tolerance` (soundness
    /// violations against a reference volume).
    pub fn below_reference(&self, volume: f64, tolerance: f64) -> Vec<&Bound> {
        self.all()
            .into_iter()
            .filter(|b| b.numeric.is_some_and(|n| n < volume - tolerance))
            .collect()
    }
}

/// Diagram-level facts needed by the crossing-number bound.
#[derive(Clone, Copy, Debug)]
pub struct DiagramFacts {
    pub crossings: usize,
    pub is_knot: bool,
    pub is_figure_eight: bool,
}

/// Assemble every bound that the available data supports. `delta` gates
/// the triangular-region refinement; the coefficient bounds need head/tail
/// data, with the n=3 side required only for the sharper of the two.
pub fn bounds_report(
    facts: DiagramFacts,
    profile: &TwistProfile,
    delta: Option<usize>,
    h2: Option<&HeadTail>,
    h3: Option<&HeadTail>,
) -> BoundsReport {
    let adams = adams_bound(facts.crossings, facts.is_knot, facts.is_figure_eight);
    let agol_thurston = agol_thurston_bound(profile.twist_number());
    let refined = refined_bound(profile);
    let refined_delta = match delta {
        Some(delta) => refined_delta_bound(profile, delta),
        None => Bound::not_applicable("refined_delta", "triangular-region count unavailable"),
    };
    let (coefficient, volumish) = match (h2, h3) {
        (Some(h2), Some(h3)) => coefficient_bound(h2, h3),
        (Some(h2), None) => (
            Bound::not_applicable(
                "coefficient",
                "requires the n=3 colored Jones polynomial",
            ),
            Bound::gated("volumish", 10 * (h2.b + h2.beta - 1), None),
        ),
        _ => (
            Bound::not_applicable("coefficient", "Jones coefficients unavailable"),
            Bound::not_applicable("volumish", "Jones coefficients unavailable"),
        ),
    };
    let mut report = BoundsReport {
        adams,
        agol_thurston,
        refined,
        refined_delta,
        coefficient,
        volumish,
        best: None,
    };
    report.best = report
        .all()
        .into_iter()
        .filter_map(|b| Some((b.name, b.v3_multiple?, b.numeric?)))
        .min_by_key(|&(_, m, _)| m)
        .map(|(name, v3_multiple, numeric)| BestBound { name, v3_multiple, numeric });
    report
}
