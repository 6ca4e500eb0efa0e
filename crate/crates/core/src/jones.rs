//! Exact Kauffman bracket, Jones polynomial, and the n=3 colored Jones
//! polynomial via 2-cabling.
//!
//! Two bracket evaluators are provided: a brute-force state sum kept as a
//! reference oracle, and a frontier contraction that processes crossings in
//! a greedy order while tracking how open strand-ends pair up through the
//! processed part. States are keyed by that pairing, so the work scales
//! with the frontier width instead of 2^c.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::diagram::LinkDiagram;
use crate::error::{DiagramError, ExtractError, PolyError};
use crate::poly::{BracketPoly, JonesPoly};

/// Soft limit for direct bracket evaluation.
pub const BRACKET_BUDGET: usize = 24;
/// Default base-crossing budget for the cabled n=3 computation.
pub const CABLE_BUDGET: usize = 10;

/// The loop value -A^2 - A^{-2}.
pub fn loop_value() -> BracketPoly {
    BracketPoly::from_terms([(2i64, -1i64), (-2, -1)])
}

/// Crossing list for bracket evaluation: four arc ids in counterclockwise
/// order rooted at an under-strand port, so the A-smoothing joins ports
/// (0,1) and (2,3).
#[derive(Clone, Debug)]
pub struct SkeinInput {
    crossings: Vec<[usize; 4]>,
}

impl SkeinInput {
    pub fn from_diagram(d: &LinkDiagram) -> Self {
        SkeinInput { crossings: d.crossings().to_vec() }
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Arc id -> its two (crossing, port) slots in scan order.
    fn slots(&self) -> HashMap<usize, Vec<(usize, u8)>> {
        let mut m: HashMap<usize, Vec<(usize, u8)>> = HashMap::new();
        for (x, t) in self.crossings.iter().enumerate() {
            for (p, &a) in t.iter().enumerate() {
                m.entry(a).or_default().push((x, p as u8));
            }
        }
        m
    }
}

/// Reference oracle: enumerate all 2^c smoothing states.
pub fn bracket_bruteforce_unreduced(input: &SkeinInput) -> BracketPoly {
    let c = input.len();
    if c == 0 {
        return BracketPoly::one();
    }
    assert!(c <= 20, "brute force oracle is for small diagrams");
    let slots = input.slots();
    let delta = loop_value();
    // Precompute arc-end adjacency: end token = 4*crossing + port.
    let mut arc_mate = vec![usize::MAX; 4 * c];
    for ends in slots.values() {
        let [s0, s1] = [ends[0], ends[1]];
        let (e0, e1) = (4 * s0.0 + s0.1 as usize, 4 * s1.0 + s1.1 as usize);
        arc_mate[e0] = e1;
        arc_mate[e1] = e0;
    }
    let mut total = BracketPoly::zero();
    for mask in 0u64..(1u64 << c) {
        let mut uf: Vec<usize> = (0..4 * c).collect();
        fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        let union = |uf: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(uf, a), find(uf, b));
            if ra != rb {
                uf[ra] = rb;
            }
        };
        for e in 0..4 * c {
            union(&mut uf, e, arc_mate[e]);
        }
        let mut exponent = 0i64;
        for x in 0..c {
            let base = 4 * x;
            if mask >> x & 1 == 0 {
                exponent += 1;
                union(&mut uf, base, base + 1);
                union(&mut uf, base + 2, base + 3);
            } else {
                exponent -= 1;
                union(&mut uf, base, base + 3);
                union(&mut uf, base + 1, base + 2);
            }
        }
        let mut loops = 0u32;
        for e in 0..4 * c {
            if find(&mut uf, e) == e {
                loops += 1;
            }
        }
        total += &delta.pow(loops).shifted(exponent);
    }
    total
}

/// End token for the frontier pairing: a (crossing, port) slot.
type Token = u32;

fn token(x: usize, p: u8) -> Token {
    (x as u32) << 2 | p as u32
}

/// Frontier contraction over an explicit crossing order. The state maps
/// each pending strand-end to the pending end it connects to through the
/// processed region; untouched arcs are implicit.
pub fn bracket_frontier_unreduced(input: &SkeinInput) -> BracketPoly {
    let c = input.len();
    if c == 0 {
        return BracketPoly::one();
    }
    let slots = input.slots();
    let mate = |t: Token| -> Token {
        let (x, p) = ((t >> 2) as usize, (t & 3) as u8);
        let arc = input.crossings[x][p as usize];
        let ends = &slots[&arc];
        let other = if ends[0] == (x, p) { ends[1] } else { ends[0] };
        token(other.0, other.1)
    };
    let order = greedy_order(input, &slots);
    let delta = loop_value();

    type State = Vec<(Token, Token)>;
    let mut states: HashMap<State, BracketPoly> = HashMap::new();
    states.insert(Vec::new(), BracketPoly::one());

    for &x in &order {
        let t: Vec<Token> = (0..4u8).map(|p| token(x, p)).collect();
        let mut next: HashMap<State, BracketPoly> = HashMap::new();
        for (state, poly) in &states {
            for (joins, exp) in [([(0, 1), (2, 3)], 1i64), ([(0, 3), (1, 2)], -1)] {
                let mut pairing: HashMap<Token, Token> =
                    state.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
                let mut loops = 0u32;
                for (i, j) in joins {
                    let ta = t[i];
                    let tb = t[j];
                    let pa = pairing.remove(&ta).unwrap_or_else(|| mate(ta));
                    if pa == tb {
                        // ta was paired straight to tb: closing a loop.
                        pairing.remove(&tb);
                        loops += 1;
                        continue;
                    }
                    let pb = pairing.remove(&tb).unwrap_or_else(|| mate(tb));
                    pairing.remove(&pa);
                    pairing.remove(&pb);
                    pairing.insert(pa, pb);
                    pairing.insert(pb, pa);
                }
                let mut key: State = pairing
                    .iter()
                    .filter(|(a, b)| a < b)
                    .map(|(&a, &b)| (a, b))
                    .collect();
                key.sort_unstable();
                let contrib = poly.shifted(exp);
                let contrib = if loops > 0 { &contrib * &delta.pow(loops) } else { contrib };
                match next.get_mut(&key) {
                    Some(acc) => *acc += &contrib,
                    None => {
                        next.insert(key, contrib);
                    }
                }
            }
        }
        states = next;
    }
    debug_assert_eq!(states.len(), 1);
    states.remove(&Vec::new()).expect("all strands must close up")
}

/// Process crossings so that as many ports as possible attach to the
/// already-processed region; keeps the pending frontier narrow.
fn greedy_order(input: &SkeinInput, slots: &HashMap<usize, Vec<(usize, u8)>>) -> Vec<usize> {
    let c = input.len();
    let mut processed = vec![false; c];
    let mut order = Vec::with_capacity(c);
    for step in 0..c {
        let mut best: Option<(usize, usize)> = None; // (score, crossing)
        for x in 0..c {
            if processed[x] {
                continue;
            }
            let mut score = 0;
            for p in 0..4u8 {
                let arc = input.crossings[x][p as usize];
                let ends = &slots[&arc];
                let other = if ends[0] == (x, p) { ends[1] } else { ends[0] };
                if other.0 == x || processed[other.0] {
                    score += 1;
                }
            }
            // Prefer connected growth after the seed crossing.
            if step > 0 && score == 0 {
                continue;
            }
            if best.is_none_or(|(s, bx)| score > s || (score == s && x < bx)) {
                best = Some((score, x));
            }
        }
        let (_, x) = best
            .or_else(|| (0..c).find(|&x| !processed[x]).map(|x| (0, x)))
            .expect("some crossing remains");
        processed[x] = true;
        order.push(x);
    }
    order
}

/// The bracket with the reduced normalization (unknot -> 1).
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<BracketPoly, DiagramError> {
    kauffman_bracket_with_budget(d, BRACKET_BUDGET)
}

pub fn kauffman_bracket_with_budget(
    d: &LinkDiagram,
    limit: usize,
) -> Result<BracketPoly, DiagramError> {
    if d.crossing_count() > limit {
        return Err(DiagramError::CrossingBudget { crossings: d.crossing_count(), limit });
    }
    if d.crossing_count() == 0 {
        return Ok(BracketPoly::one());
    }
    let unreduced = bracket_frontier_unreduced(&SkeinInput::from_diagram(d));
    Ok(unreduced
        .checked_div(&loop_value())
        .expect("unreduced bracket is divisible by the loop value"))
}

/// Brute-force reduced bracket, for oracle comparisons.
pub fn kauffman_bracket_bruteforce(d: &LinkDiagram) -> BracketPoly {
    if d.crossing_count() == 0 {
        return BracketPoly::one();
    }
    bracket_bruteforce_unreduced(&SkeinInput::from_diagram(d))
        .checked_div(&loop_value())
        .expect("unreduced bracket is divisible by the loop value")
}

/// Writhe correction (-A^3)^{-w} applied to a bracket-side polynomial.
fn writhe_correct(p: &BracketPoly, writhe: i64) -> BracketPoly {
    let shifted = p.shifted(-3 * writhe);
    if writhe % 2 == 0 {
        shifted
    } else {
        -&shifted
    }
}

/// The Jones polynomial (n = 2 colored Jones), reduced so the unknot maps
/// to 1, in the variable q = A^{-4}.
pub fn jones2(d: &LinkDiagram) -> Result<JonesPoly, DiagramError> {
    jones2_with_budget(d, BRACKET_BUDGET)
}

pub fn jones2_with_budget(d: &LinkDiagram, limit: usize) -> Result<JonesPoly, DiagramError> {
    let bracket = kauffman_bracket_with_budget(d, limit)?;
    let corrected = writhe_correct(&bracket, d.writhe());
    corrected.change_variable::<'q'>(-4).map_err(half_integer)
}

fn half_integer(e: PolyError) -> DiagramError {
    match e {
        PolyError::ExponentNotDivisible { .. } => DiagramError::HalfIntegerExponents,
        _ => DiagramError::HalfIntegerExponents,
    }
}

/// Blackboard 2-parallel of a diagram, as skein input: every arc doubles,
/// every crossing becomes a 2x2 block of four crossings.
pub fn cable2(d: &LinkDiagram) -> SkeinInput {
    let c = d.crossing_count();
    let base_arcs = d.arc_count();
    // Cable arc ids: copies 2(a-1)+side for base arc a; internals follow.
    let copy_id = |a: usize, copy: usize| 2 * (a - 1) + copy + 1;
    let internal_id = |x: usize, k: usize| 2 * base_arcs + 4 * x + k + 1;
    // End of base arc `a` at slot (x,p), cable side s (s = 0 is the first of
    // the two parallel ends in counterclockwise order at the crossing).
    let cable_end = |a: usize, slot: (usize, u8), side: usize| -> usize {
        let slots = d.slots_of(a);
        let copy = if slots[0] == slot { side } else { 1 - side };
        copy_id(a, copy)
    };
    let mut crossings = Vec::with_capacity(4 * c);
    for x in 0..c {
        let t = d.tuple(x);
        let (a, b, cc, dd) = (t[0], t[1], t[2], t[3]);
        let a0 = cable_end(a, (x, 0), 0);
        let a1 = cable_end(a, (x, 0), 1);
        let b0 = cable_end(b, (x, 1), 0);
        let b1 = cable_end(b, (x, 1), 1);
        let c0 = cable_end(cc, (x, 2), 0);
        let c1 = cable_end(cc, (x, 2), 1);
        let d0 = cable_end(dd, (x, 3), 0);
        let d1 = cable_end(dd, (x, 3), 1);
        let (i_se, i_ne, i_nw, i_ns) = (
            internal_id(x, 0), // between SW.E and SE.W
            internal_id(x, 1), // between NW.E and NE.W
            internal_id(x, 2), // between SW.N and NW.S
            internal_id(x, 3), // between SE.N and NE.S
        );
        // Each sub-crossing's tuple is (W, S, E, N): counterclockwise from
        // an under-strand port, since the under-copies run W -> E.
        crossings.push([a1, b0, i_se, i_nw]); // SW
        crossings.push([i_se, b1, c0, i_ns]); // SE
        crossings.push([a0, i_nw, i_ne, d1]); // NW
        crossings.push([i_ne, i_ns, c1, d0]); // NE
    }
    SkeinInput { crossings }
}

/// Denominator of the reduced n=3 invariant: the 2-strand colored unknot
/// value delta^2 - 1 = A^4 + 1 + A^{-4}.
fn colored_unknot3() -> BracketPoly {
    BracketPoly::from_terms([(4i64, 1i64), (0, 1), (-4, 1)])
}

/// The n = 3 colored Jones polynomial via the Chebyshev expansion of the
/// 2-cable, reduced (unknot -> 1), in q = A^{-4}. The framing twist of the
/// color-3 component is A^8 per unit writhe.
pub fn colored_jones3(d: &LinkDiagram) -> Result<JonesPoly, DiagramError> {
    colored_jones3_with_budget(d, CABLE_BUDGET)
}

pub fn colored_jones3_with_budget(
    d: &LinkDiagram,
    base_budget: usize,
) -> Result<JonesPoly, DiagramError> {
    if d.crossing_count() > base_budget {
        return Err(DiagramError::CrossingBudget {
            crossings: d.crossing_count(),
            limit: base_budget,
        });
    }
    if d.crossing_count() == 0 {
        return Ok(JonesPoly::one());
    }
    let cable = cable2(d);
    let two_parallel = bracket_frontier_unreduced(&cable);
    let chebyshev = &two_parallel - &BracketPoly::one();
    let framed = chebyshev.shifted(-8 * d.writhe());
    let reduced = framed
        .checked_div(&colored_unknot3())
        .expect("colored bracket is divisible by the colored unknot value");
    reduced.change_variable::<'q'>(-4).map_err(half_integer)
}

/// The leading and trailing coefficient triples of a colored Jones
/// polynomial, following the sign pattern
/// `±(a q^k - b q^{k-1} + c q^{k-2}) ... ±(γ q^{k-r+2} - β q^{k-r+1} + α q^{k-r})`
/// with `a` and `α` positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadTail {
    pub n: u8,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub gamma: i64,
    pub beta: i64,
    pub alpha: i64,
    /// Top exponent k_n.
    pub k: i64,
    /// Degree span r_n.
    pub r: i64,
    pub leading_sign: i8,
    pub trailing_sign: i8,
}

pub fn head_tail(p: &JonesPoly, n: u8) -> Result<HeadTail, ExtractError> {
    let span = p.span().ok_or(ExtractError::ZeroPolynomial)?;
    if span < 2 {
        return Err(ExtractError::SpanTooSmall { span });
    }
    let k = p.max_exp().unwrap();
    let m = p.min_exp().unwrap();
    let to_i64 = |v: BigInt| -> Result<i64, ExtractError> {
        v.to_i64().ok_or(ExtractError::SignPattern)
    };
    let leading_sign: i8 = if p.coeff(k).is_positive() { 1 } else { -1 };
    let trailing_sign: i8 = if p.coeff(m).is_positive() { 1 } else { -1 };
    let s_h = BigInt::from(leading_sign);
    let s_t = BigInt::from(trailing_sign);
    let a = to_i64(&s_h * p.coeff(k))?;
    let b = to_i64(-&s_h * p.coeff(k - 1))?;
    let c = to_i64(&s_h * p.coeff(k - 2))?;
    let alpha = to_i64(&s_t * p.coeff(m))?;
    let beta = to_i64(-&s_t * p.coeff(m + 1))?;
    let gamma = to_i64(&s_t * p.coeff(m + 2))?;
    // Alternation must hold through the second coefficient for every color,
    // and through the third for the Jones polynomial itself.
    if b < 0 || beta < 0 || (n == 2 && (c < 0 || gamma < 0)) {
        return Err(ExtractError::SignPattern);
    }
    Ok(HeadTail { n, a, b, c, gamma, beta, alpha, k, r: span, leading_sign, trailing_sign })
}
