//! Checkerboard (Tait) graphs of an alternating diagram, their reductions,
//! and the triangle / multiplicity statistics.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagram::LinkDiagram;
use crate::error::DiagramError;
use crate::twist::TwistProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

/// One checkerboard graph: vertices are the faces of one color, one edge
/// per crossing (a plane multigraph).
#[derive(Clone, Debug)]
pub struct TaitGraph {
    pub color: Color,
    /// Face ids serving as vertices.
    pub vertices: Vec<usize>,
    /// One entry per crossing: (face, face, crossing id).
    pub edges: Vec<(usize, usize, usize)>,
}

impl TaitGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Both checkerboard graphs. Which of the two face classes is "black" is
/// anchored by the worked 9_20 example: its black graph is the 4-vertex
/// side carrying the edge multiplicities, with two triangles after
/// reduction. That puts black at tuple quadrants 1 and 3.
#[derive(Clone, Debug)]
pub struct CheckerboardPair {
    pub black: TaitGraph,
    pub white: TaitGraph,
    /// Face id -> color.
    pub coloring: Vec<Color>,
}

pub fn build_graphs(d: &LinkDiagram) -> Result<CheckerboardPair, DiagramError> {
    if !d.is_alternating() {
        return Err(DiagramError::NotAlternating);
    }
    let faces = d.faces();
    let mut coloring = vec![None; faces.len()];
    for f in faces.iter() {
        for c in &f.corners {
            let color = if c.quadrant % 2 == 1 { Color::Black } else { Color::White };
            match coloring[f.id] {
                None => coloring[f.id] = Some(color),
                Some(prev) if prev != color => return Err(DiagramError::NotAlternating),
                _ => {}
            }
        }
    }
    // Faces with no corners only occur on the 0-crossing unknot.
    let coloring: Vec<Color> = coloring
        .into_iter()
        .map(|c| c.unwrap_or(Color::White))
        .collect();

    let mut black_edges = Vec::new();
    let mut white_edges = Vec::new();
    for x in 0..d.crossing_count() {
        let b = (faces.at_quadrant(x, 1), faces.at_quadrant(x, 3), x);
        let w = (faces.at_quadrant(x, 0), faces.at_quadrant(x, 2), x);
        black_edges.push(b);
        white_edges.push(w);
    }
    let vertices_of = |color: Color| -> Vec<usize> {
        coloring
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .map(|(i, _)| i)
            .collect()
    };
    Ok(CheckerboardPair {
        black: TaitGraph { color: Color::Black, vertices: vertices_of(Color::Black), edges: black_edges },
        white: TaitGraph { color: Color::White, vertices: vertices_of(Color::White), edges: white_edges },
        coloring,
    })
}

/// A checkerboard graph with parallel edges collapsed; each kept edge
/// remembers how many originals it stands for.
#[derive(Clone, Debug)]
pub struct ReducedGraph {
    pub color: Color,
    pub vertices: Vec<usize>,
    /// Unordered vertex pair -> multiplicity.
    pub edges: BTreeMap<(usize, usize), usize>,
}

impl ReducedGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity_total(&self) -> usize {
        self.edges.values().sum()
    }

    /// Sorted multiset of edge multiplicities.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.edges.values().copied().collect();
        m.sort_unstable();
        m.reverse();
        m
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges.keys().any(|(u, v)| u == v)
    }

    /// Edges of multiplicity at least `i`.
    pub fn edges_at_least(&self, i: usize) -> usize {
        self.edges.values().filter(|&&m| m >= i).count()
    }
}

pub fn reduce_graph(g: &TaitGraph) -> ReducedGraph {
    let mut edges = BTreeMap::new();
    for &(u, v, _) in &g.edges {
        let key = if u <= v { (u, v) } else { (v, u) };
        *edges.entry(key).or_insert(0) += 1;
    }
    ReducedGraph { color: g.color, vertices: g.vertices.clone(), edges }
}

/// Unordered vertex triples with all three edges present.
pub fn triangle_count(g: &ReducedGraph) -> usize {
    let mut adjacency: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(u, v) in g.edges.keys() {
        if u == v {
            continue;
        }
        adjacency.entry(u).or_default().insert(v);
        adjacency.entry(v).or_default().insert(u);
    }
    let mut count = 0;
    for (&u, nu) in &adjacency {
        for &v in nu.iter().filter(|&&v| v > u) {
            let nv = &adjacency[&v];
            count += nu.iter().filter(|&&w| w > v && nv.contains(&w)).count();
        }
    }
    count
}

/// Triangle counts and multiplicity profiles of both reduced graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub tau_black: usize,
    pub tau_white: usize,
    /// i -> number of black reduced edges of multiplicity >= i.
    pub n_black: BTreeMap<usize, usize>,
    pub n_white: BTreeMap<usize, usize>,
}

impl GraphStats {
    pub fn n_black_at(&self, i: usize) -> usize {
        self.n_black.get(&i).copied().unwrap_or(0)
    }

    pub fn n_white_at(&self, i: usize) -> usize {
        self.n_white.get(&i).copied().unwrap_or(0)
    }
}

pub fn multiplicity_profile(black: &ReducedGraph, white: &ReducedGraph) -> GraphStats {
    let profile = |g: &ReducedGraph| -> BTreeMap<usize, usize> {
        let max = g.edges.values().max().copied().unwrap_or(0);
        (1..=max).map(|i| (i, g.edges_at_least(i))).collect()
    };
    GraphStats {
        tau_black: triangle_count(black),
        tau_white: triangle_count(white),
        n_black: profile(black),
        n_white: profile(white),
    }
}

/// Cross-check n_B(i) + n_W(i) = g_i for i >= 2. A mismatch signals a
/// diagram that is not twist reduced; it is a diagnostic, not an error.
pub fn n_identity_holds(stats: &GraphStats, profile: &TwistProfile) -> bool {
    let max = profile.lengths.last().copied().unwrap_or(0).max(
        stats.n_black.keys().chain(stats.n_white.keys()).max().copied().unwrap_or(0),
    );
    (2..=max.max(2)).all(|i| stats.n_black_at(i) + stats.n_white_at(i) == profile.at_least(i))
}
