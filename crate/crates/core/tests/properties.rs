//! Structural properties checked over randomly generated two-bridge
//! diagrams. These exercise the parser, face tracing, twist detection, and
//! checkerboard machinery on a family far larger than the bundled table.

use proptest::prelude::*;

use knotvol::checkerboard::{build_graphs, multiplicity_profile, n_identity_holds, reduce_graph};
use knotvol::diagram::{is_reduced, LinkDiagram};
use knotvol::generate::two_bridge_plat;
use knotvol::jones::{head_tail, jones2};
use knotvol::twist::{detect_twists, twist_profile};

/// Quotient lists whose plat closures stay comfortably inside the bracket
/// budget. First and last entries at least 2 keep the diagram twist
/// reduced (an outer single twist could absorb into its neighbour).
fn quotients() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..4, 0..3).prop_flat_map(|middle| {
        (2u32..5, 2u32..5).prop_map(move |(first, last)| {
            let mut q = vec![first];
            q.extend(middle.iter().copied());
            q.push(last);
            q
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_diagrams_validate(q in quotients()) {
        let d = two_bridge_plat(&q).unwrap();
        let total: u32 = q.iter().sum();
        prop_assert_eq!(d.crossing_count(), total as usize);
        prop_assert!(d.is_alternating());
        let faces = d.faces();
        prop_assert_eq!(faces.len(), d.crossing_count() + 2);
        prop_assert!(is_reduced(&d, &faces));
        // Round trip through the normalized text form.
        let again = LinkDiagram::parse_pd(&d.serialize()).unwrap();
        prop_assert_eq!(&again, &d);
        // Mirroring is an involution.
        prop_assert_eq!(d.mirror().mirror(), d);
    }

    #[test]
    fn generated_twist_blocks_match_quotients(q in quotients()) {
        let d = two_bridge_plat(&q).unwrap();
        let profile = twist_profile(&detect_twists(&d).unwrap());
        let mut expected: Vec<usize> = q.iter().map(|&a| a as usize).collect();
        expected.sort_unstable();
        prop_assert_eq!(profile.lengths, expected);
    }

    #[test]
    fn generated_checkerboard_identities(q in quotients()) {
        let d = two_bridge_plat(&q).unwrap();
        let profile = twist_profile(&detect_twists(&d).unwrap());
        let pair = build_graphs(&d).unwrap();
        prop_assert_eq!(
            pair.black.vertex_count() + pair.white.vertex_count(),
            d.crossing_count() + 2
        );
        let black = reduce_graph(&pair.black);
        let white = reduce_graph(&pair.white);
        prop_assert!(!black.has_self_loop());
        prop_assert!(!white.has_self_loop());
        prop_assert_eq!(
            black.multiplicity_total() + white.multiplicity_total(),
            2 * d.crossing_count()
        );
        let stats = multiplicity_profile(&black, &white);
        prop_assert!(n_identity_holds(&stats, &profile));
        // Collapsed parallels account exactly for the bigons.
        let collapsed: usize = black
            .edges
            .values()
            .chain(white.edges.values())
            .map(|&m| m - 1)
            .sum();
        let bigons: usize = profile.lengths.iter().map(|&l| l - 1).sum();
        prop_assert_eq!(collapsed, bigons);
    }

    #[test]
    fn generated_jones_properties(q in quotients()) {
        let d = two_bridge_plat(&q).unwrap();
        if !d.is_knot() {
            // Even-component two-bridge links have half-integer exponents.
            return Ok(());
        }
        let v = jones2(&d).unwrap();
        prop_assert_eq!(v.span(), Some(d.crossing_count() as i64));
        let h = head_tail(&v, 2).unwrap();
        prop_assert_eq!((h.a, h.alpha), (1, 1));
        // Second coefficients count the twists.
        let profile = twist_profile(&detect_twists(&d).unwrap());
        prop_assert_eq!((h.b + h.beta) as usize, profile.twist_number());
    }
}
