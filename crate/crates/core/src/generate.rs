//! Diagram generators. Two-bridge knots and links are built as plat
//! closures of alternating 4-strand braid words, one twist block per
//! continued-fraction quotient. The output is a normalized PD diagram, so
//! every structural invariant is re-checked on construction.

use std::collections::HashMap;

use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::error::ParseError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("quotient list must be non-empty")]
    Empty,
    #[error("quotients must be positive")]
    ZeroQuotient,
    #[error("construction left a closed strand with no crossings")]
    FreeCircle,
    #[error("generated tuples failed validation: {0}")]
    Invalid(#[from] ParseError),
}

/// Port indices, counterclockwise.
const NE: u8 = 0;
const NW: u8 = 1;
const SW: u8 = 2;
const SE: u8 = 3;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Node {
    Cross(usize),
    Virt(usize),
}

type End = (Node, u8);

#[derive(Default)]
struct PortGraph {
    /// Per crossing: true when the NW-SE diagonal is the under-strand.
    under_nw_se: Vec<bool>,
    virtuals: usize,
    links: Vec<(End, End)>,
}

impl PortGraph {
    fn crossing(&mut self, under_nw_se: bool) -> usize {
        self.under_nw_se.push(under_nw_se);
        self.under_nw_se.len() - 1
    }

    fn virt(&mut self) -> usize {
        self.virtuals += 1;
        self.virtuals - 1
    }

    fn link(&mut self, a: End, b: End) {
        self.links.push((a, b));
    }

    /// Convert to a PD diagram: smooth out the 2-valent virtual bends,
    /// trace components, and number the arcs along orientation.
    fn into_diagram(self) -> Result<LinkDiagram, GenerateError> {
        let n = self.under_nw_se.len();
        let mut link_map: HashMap<End, End> = HashMap::new();
        for &(a, b) in &self.links {
            link_map.insert(a, b);
            link_map.insert(b, a);
        }
        // Resolve a crossing slot to the crossing slot it connects to,
        // hopping through virtual bends.
        let resolve = |start: End| -> Result<(usize, u8), GenerateError> {
            let mut end = link_map[&start];
            let mut hops = 0;
            loop {
                match end {
                    (Node::Cross(x), p) => return Ok((x, p)),
                    (Node::Virt(v), p) => {
                        end = link_map[&(Node::Virt(v), 1 - p)];
                        hops += 1;
                        if hops > 2 * self.virtuals {
                            return Err(GenerateError::FreeCircle);
                        }
                    }
                }
            }
        };
        let mut conn: HashMap<(usize, u8), (usize, u8)> = HashMap::new();
        for x in 0..n {
            for p in 0..4u8 {
                conn.insert((x, p), resolve((Node::Cross(x), p))?);
            }
        }
        // Trace strands, assigning arc labels in walk order.
        let mut arc_at: HashMap<(usize, u8), usize> = HashMap::new();
        let mut incoming = vec![[false; 4]; n];
        let mut next_label = 1usize;
        for x0 in 0..n {
            for p0 in 0..4u8 {
                if arc_at.contains_key(&(x0, p0)) {
                    continue;
                }
                // New component; declare the strand to leave (x0, p0).
                let mut out = (x0, p0);
                loop {
                    let label = next_label;
                    next_label += 1;
                    let inn = conn[&out];
                    arc_at.insert(out, label);
                    arc_at.insert(inn, label);
                    incoming[inn.0][inn.1 as usize] = true;
                    let continue_out = (inn.0, (inn.1 + 2) % 4);
                    if continue_out == (x0, p0) {
                        break;
                    }
                    out = continue_out;
                }
            }
        }
        // Emit tuples rooted at each crossing's incoming under-strand port.
        let mut tuples = Vec::with_capacity(n);
        for x in 0..n {
            let under_ports: [u8; 2] = if self.under_nw_se[x] { [NW, SE] } else { [NE, SW] };
            let u = *under_ports
                .iter()
                .find(|&&p| incoming[x][p as usize])
                .expect("one under port must be incoming");
            let tuple = [
                arc_at[&(x, u)],
                arc_at[&(x, (u + 1) % 4)],
                arc_at[&(x, (u + 2) % 4)],
                arc_at[&(x, (u + 3) % 4)],
            ];
            tuples.push(tuple);
        }
        Ok(LinkDiagram::from_tuples(tuples)?)
    }
}

/// The standard alternating diagram of the two-bridge link with continued
/// fraction `[a_1, ..., a_k]`: starting from the innermost quotient `a_k`,
/// twist blocks are added alternately on the right (horizontal) and at the
/// bottom (vertical) of a rational tangle, then the numerator closure caps
/// the four ends. A single under-diagonal choice keeps the result
/// alternating throughout.
pub fn two_bridge_plat(quotients: &[u32]) -> Result<LinkDiagram, GenerateError> {
    if quotients.is_empty() {
        return Err(GenerateError::Empty);
    }
    if quotients.contains(&0) {
        return Err(GenerateError::ZeroQuotient);
    }
    let mut g = PortGraph::default();
    // Start from the 0 tangle (horizontal strands) when the innermost
    // block twists horizontally (odd k), else from the infinity tangle:
    // twisting the wrong pair of a trivial tangle only coils one strand.
    let va = g.virt();
    let vb = g.virt();
    let (nw, mut ne, mut sw, mut se) = if quotients.len() % 2 == 1 {
        (
            (Node::Virt(va), 0),
            (Node::Virt(va), 1),
            (Node::Virt(vb), 0),
            (Node::Virt(vb), 1),
        )
    } else {
        (
            (Node::Virt(va), 0),
            (Node::Virt(vb), 0),
            (Node::Virt(va), 1),
            (Node::Virt(vb), 1),
        )
    };
    // Innermost quotient first; whether it starts horizontal or vertical is
    // anchored so the outermost block a_1 always twists horizontally.
    for (i, &a) in quotients.iter().enumerate().rev() {
        let horizontal = i % 2 == 0;
        for _ in 0..a {
            let x = g.crossing(true);
            if horizontal {
                g.link(ne, (Node::Cross(x), NW));
                g.link(se, (Node::Cross(x), SW));
                ne = (Node::Cross(x), NE);
                se = (Node::Cross(x), SE);
            } else {
                g.link(sw, (Node::Cross(x), NW));
                g.link(se, (Node::Cross(x), NE));
                sw = (Node::Cross(x), SW);
                se = (Node::Cross(x), SE);
            }
        }
    }
    let cap_top = g.virt();
    g.link(nw, (Node::Virt(cap_top), 0));
    g.link(ne, (Node::Virt(cap_top), 1));
    let cap_bot = g.virt();
    g.link(sw, (Node::Virt(cap_bot), 0));
    g.link(se, (Node::Virt(cap_bot), 1));
    g.into_diagram()
}
