//! Twist regions, twist statistics, combinatorial augmentation, and the
//! triangular-region count Δ.

use std::collections::BTreeMap;

use crate::diagram::{is_reduced, Faces, LinkDiagram};
use crate::error::DiagramError;

/// A maximal chain of crossings connected through bigons, or a lone
/// crossing adjacent to no bigon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistRegion {
    /// Crossings in row order (ends first and last). For the cyclic rows of
    /// (2,n)-torus diagrams the starting point is arbitrary.
    pub crossing_ids: Vec<usize>,
    /// Face ids of the bigons linking consecutive crossings.
    pub bigons: Vec<usize>,
    /// True when the bigon chain closes into a cycle ((2,n) torus rows).
    pub cyclic: bool,
}

impl TwistRegion {
    pub fn len(&self) -> usize {
        self.crossing_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossing_ids.is_empty()
    }
}

/// The multiset of twist-region lengths and the derived counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistProfile {
    /// Region lengths, sorted ascending.
    pub lengths: Vec<usize>,
}

impl TwistProfile {
    pub fn new(regions: &[TwistRegion]) -> Self {
        let mut lengths: Vec<usize> = regions.iter().map(|r| r.len()).collect();
        lengths.sort_unstable();
        TwistProfile { lengths }
    }

    pub fn from_lengths(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable();
        TwistProfile { lengths }
    }

    /// The twist number t(D).
    pub fn twist_number(&self) -> usize {
        self.lengths.len()
    }

    /// t_i(D): regions with exactly `i` crossings.
    pub fn exactly(&self, i: usize) -> usize {
        self.lengths.iter().filter(|&&l| l == i).count()
    }

    /// g_i(D): regions with at least `i` crossings.
    pub fn at_least(&self, i: usize) -> usize {
        self.lengths.iter().filter(|&&l| l >= i).count()
    }

    pub fn crossing_total(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Map i -> t_i for every length present.
    pub fn exact_counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &l in &self.lengths {
            *m.entry(l).or_insert(0) += 1;
        }
        m
    }

    /// Map i -> g_i for 1..=max length.
    pub fn at_least_counts(&self) -> BTreeMap<usize, usize> {
        let max = self.lengths.last().copied().unwrap_or(0);
        (1..=max).map(|i| (i, self.at_least(i))).collect()
    }
}

/// Partition the crossings into twist regions via bigon adjacency.
pub fn detect_twists(d: &LinkDiagram) -> Result<Vec<TwistRegion>, DiagramError> {
    let faces = d.faces();
    if !is_reduced(d, &faces) {
        return Err(DiagramError::NotReduced);
    }
    let n = d.crossing_count();
    // Union-find over crossings, merged through bigons.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut bigon_links: Vec<(usize, usize, usize)> = Vec::new();
    for f in faces.iter().filter(|f| f.is_bigon()) {
        let a = f.corners[0].crossing;
        let b = f.corners[1].crossing;
        bigon_links.push((a, b, f.id));
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    let mut regions = Vec::new();
    for (_, crossings) in groups {
        regions.push(order_region(crossings, &bigon_links)?);
    }
    // Deterministic order: by smallest crossing id.
    regions.sort_by_key(|r| r.crossing_ids.iter().min().copied());
    Ok(regions)
}

/// Arrange a region's crossings into row order using its bigon links.
fn order_region(
    crossings: Vec<usize>,
    bigon_links: &[(usize, usize, usize)],
) -> Result<TwistRegion, DiagramError> {
    let links: Vec<&(usize, usize, usize)> = bigon_links
        .iter()
        .filter(|(a, b, _)| crossings.contains(a) || crossings.contains(b))
        .collect();
    if crossings.len() == 1 {
        let cyclic = !links.is_empty();
        let bigons = links.iter().map(|(_, _, f)| *f).collect();
        // A lone crossing with a self-bigon would be nugatory; the reduced
        // gate upstream prevents it, but (2,2)-torus rows reach here.
        return Ok(TwistRegion { crossing_ids: crossings, bigons, cyclic });
    }
    // Count bigon-neighbors per crossing.
    let mut deg: BTreeMap<usize, usize> = crossings.iter().map(|&c| (c, 0)).collect();
    for (a, b, _) in links.iter() {
        *deg.get_mut(a).unwrap() += 1;
        *deg.get_mut(b).unwrap() += 1;
    }
    let ends: Vec<usize> = deg.iter().filter(|(_, &d)| d == 1).map(|(&c, _)| c).collect();
    let cyclic = ends.is_empty();
    let start = if cyclic { *crossings.iter().min().unwrap() } else { ends.into_iter().min().unwrap() };
    // Walk the chain.
    let mut order = vec![start];
    let mut bigons = Vec::new();
    let mut prev_face = usize::MAX;
    while order.len() < crossings.len() {
        let cur = *order.last().unwrap();
        let next = links.iter().find(|(a, b, f)| {
            *f != prev_face
                && ((*a == cur && !order.contains(b)) || (*b == cur && !order.contains(a)))
        });
        match next {
            Some((a, b, f)) => {
                let other = if *a == cur { *b } else { *a };
                order.push(other);
                bigons.push(*f);
                prev_face = *f;
            }
            None => return Err(DiagramError::CyclicTwist { region: start }),
        }
    }
    if cyclic {
        // Collect the remaining closing bigons for bookkeeping.
        for (a, b, f) in links.iter() {
            if !bigons.contains(f) && crossings.contains(a) && crossings.contains(b) {
                bigons.push(*f);
            }
        }
    }
    Ok(TwistRegion { crossing_ids: order, bigons, cyclic })
}

pub fn twist_profile(regions: &[TwistRegion]) -> TwistProfile {
    TwistProfile::new(regions)
}

/// A crossing circle introduced by augmenting one long twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingCircle {
    /// Index into the region list of the twist it encircles.
    pub twist: usize,
    /// The two faces of D pierced by the circle (the lateral faces along
    /// the long sides of the twist).
    pub pierced_faces: (usize, usize),
}

/// Boundary marker of an augmented face, in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundaryMark {
    /// Corner at a residual crossing.
    Corner(usize),
    /// Side running along a twisting disk (the disk chord that cuts the
    /// merged middle region of an augmented twist).
    DiskChord(usize),
    /// A twisting-disk slit poking into the face from a circle puncture.
    Slit(usize),
}

/// A face of the augmented diagram with its classification data.
#[derive(Clone, Debug)]
pub struct AugFace {
    pub marks: Vec<BoundaryMark>,
    /// Strand segments on the boundary: every corner, chord side, and slit
    /// terminates a segment.
    pub segments: usize,
    /// Number of disk-chord sides (crossing circles bounding the face).
    pub bounding_circles: usize,
    /// Number of circle punctures inside the face (circles piercing it).
    pub piercing_circles: usize,
}

/// The combinatorial augmented diagram D_a: twists of length >= 4 replaced
/// by crossing circles, with faces annotated for the Δ count.
#[derive(Clone, Debug)]
pub struct AugmentedDiagram {
    pub residual_crossings: Vec<usize>,
    pub circles: Vec<CrossingCircle>,
    pub faces: Vec<AugFace>,
}

impl AugmentedDiagram {
    /// Total boundary segments over all faces (each segment borders two).
    pub fn segment_total(&self) -> usize {
        self.faces.iter().map(|f| f.segments).sum::<usize>() / 2
    }
}

/// Encircle every twist with at least four crossings and delete its
/// crossings, tracking the induced face structure.
pub fn augment(d: &LinkDiagram, regions: &[TwistRegion]) -> Result<AugmentedDiagram, DiagramError> {
    let faces = d.faces();
    // Working face boundaries as editable mark lists; indices track D's
    // face ids until merging.
    let mut work: Vec<Option<Vec<BoundaryMark>>> = faces
        .iter()
        .map(|f| {
            Some(
                f.corners
                    .iter()
                    .map(|c| BoundaryMark::Corner(c.crossing))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let mut piercings: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
    let mut circles = Vec::new();
    let mut residual: Vec<usize> = Vec::new();

    for (ri, region) in regions.iter().enumerate() {
        if region.len() < 4 {
            residual.extend(region.crossing_ids.iter().copied());
            continue;
        }
        if region.cyclic {
            return Err(DiagramError::CyclicTwist { region: ri });
        }
        let anatomy = row_anatomy(d, region, &faces)?;
        let circle_id = circles.len();
        circles.push(CrossingCircle {
            twist: ri,
            pierced_faces: (anatomy.lateral_a, anatomy.lateral_b),
        });

        // Lateral faces: the run of this twist's corners collapses to a slit.
        for lateral in [anatomy.lateral_a, anatomy.lateral_b] {
            let marks = work[lateral]
                .as_mut()
                .expect("lateral face of a live twist cannot be merged away");
            replace_run_with(marks, &region.crossing_ids, BoundaryMark::Slit(circle_id));
            piercings[lateral].push(circle_id);
        }

        // End faces: the end-crossing corner becomes a disk chord; interior
        // bigons disappear entirely.
        for (end_face, end_crossing) in
            [(anatomy.end_left, anatomy.first), (anatomy.end_right, anatomy.last)]
        {
            let marks = work[end_face]
                .as_mut()
                .expect("end face of a live twist cannot be merged away");
            replace_run_with(marks, &[end_crossing], BoundaryMark::DiskChord(circle_id));
        }
        for &b in &region.bigons {
            work[b] = None;
        }
    }

    let mut out_faces = Vec::new();
    for (id, marks) in work.into_iter().enumerate() {
        let Some(marks) = marks else { continue };
        let segments = if marks.is_empty() { 1 } else { marks.len() };
        let bounding = marks
            .iter()
            .filter(|m| matches!(m, BoundaryMark::DiskChord(_)))
            .count();
        let piercing = piercings[id].len();
        out_faces.push(AugFace {
            marks,
            segments,
            bounding_circles: bounding,
            piercing_circles: piercing,
        });
    }
    residual.sort_unstable();
    Ok(AugmentedDiagram { residual_crossings: residual, circles, faces: out_faces })
}

struct RowAnatomy {
    first: usize,
    last: usize,
    end_left: usize,
    end_right: usize,
    lateral_a: usize,
    lateral_b: usize,
}

/// Identify the faces around a twist row: the two end faces past the first
/// and last crossings, and the two lateral faces running along the row.
fn row_anatomy(
    _d: &LinkDiagram,
    region: &TwistRegion,
    faces: &Faces,
) -> Result<RowAnatomy, DiagramError> {
    let first = *region.crossing_ids.first().unwrap();
    let last = *region.crossing_ids.last().unwrap();
    let end_face = |x: usize, bigons: &[usize]| -> Option<(usize, usize, usize)> {
        // Find the quadrant holding a region bigon; the opposite quadrant is
        // the end face, the remaining two are lateral.
        for q in 0..4u8 {
            let f = faces.at_quadrant(x, q);
            if bigons.contains(&f) {
                let end = faces.at_quadrant(x, (q + 2) % 4);
                let lat1 = faces.at_quadrant(x, (q + 1) % 4);
                let lat2 = faces.at_quadrant(x, (q + 3) % 4);
                return Some((end, lat1, lat2));
            }
        }
        None
    };
    let (end_left, la, lb) = end_face(first, &region.bigons)
        .ok_or(DiagramError::CyclicTwist { region: first })?;
    let (end_right, ra, rb) = end_face(last, &region.bigons)
        .ok_or(DiagramError::CyclicTwist { region: first })?;
    // The lateral pair must agree from both ends.
    let mut lats = [la, lb];
    lats.sort_unstable();
    let mut rats = [ra, rb];
    rats.sort_unstable();
    if lats != rats || end_left == end_right || lats.contains(&end_left) {
        return Err(DiagramError::CyclicTwist { region: first });
    }
    Ok(RowAnatomy {
        first,
        last,
        end_left,
        end_right,
        lateral_a: lats[0],
        lateral_b: lats[1],
    })
}

/// Replace the (cyclically contiguous) run of corners at the given
/// crossings by a single marker.
fn replace_run_with(marks: &mut Vec<BoundaryMark>, crossings: &[usize], replacement: BoundaryMark) {
    let hit = |m: &BoundaryMark| match m {
        BoundaryMark::Corner(c) => crossings.contains(c),
        _ => false,
    };
    let n = marks.len();
    debug_assert!(marks.iter().filter(|m| hit(m)).count() == crossings.len());
    // Rotate so the run does not straddle the seam.
    let offset = (0..n)
        .find(|&i| !hit(&marks[i]) && hit(&marks[(i + 1) % n]))
        .unwrap_or(0);
    let mut rotated: Vec<BoundaryMark> = Vec::with_capacity(n);
    rotated.extend(marks.iter().skip(offset + 1).cloned());
    rotated.extend(marks.iter().take(offset + 1).cloned());
    let start = rotated.iter().position(hit).unwrap();
    let len = crossings.len();
    debug_assert!(rotated[start..start + len].iter().all(hit));
    rotated.splice(start..start + len, [replacement]);
    *marks = rotated;
}

/// Δ: the number of regions of D_a yielding triangular regions in the
/// polyhedral decomposition. Type 1: exactly three boundary segments and no
/// piercing circle. Type 2: exactly two boundary segments, at most one
/// bounding circle, and exactly one piercing circle.
pub fn count_delta(a: &AugmentedDiagram) -> usize {
    a.faces.iter().filter(|f| is_delta_face(f)).count()
}

pub fn is_delta_face(f: &AugFace) -> bool {
    let type1 = f.segments == 3 && f.piercing_circles == 0;
    let type2 = f.segments == 2 && f.piercing_circles == 1 && f.bounding_circles <= 1;
    type1 || type2
}

/// Faces with three segments and a piercing circle are not counted; they
/// are surfaced so reports can flag them.
pub fn ambiguous_delta_faces(a: &AugmentedDiagram) -> usize {
    a.faces
        .iter()
        .filter(|f| f.segments == 3 && f.piercing_circles > 0)
        .count()
}
