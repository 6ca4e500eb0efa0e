//! Cross-module worked examples anchored on the bundled diagrams,
//! especially the 9_20 reference values.

use knotvol::checkerboard::{build_graphs, multiplicity_profile, reduce_graph, triangle_count};
use knotvol::diagram::{validate, LinkDiagram};
use knotvol::jones::{colored_jones3, head_tail, jones2};
use knotvol::knotbase::bundled_table;
use knotvol::twist::{augment, count_delta, detect_twists, twist_profile};

fn diagram(name: &str) -> LinkDiagram {
    bundled_table().find(name).unwrap().diagram().unwrap()
}

#[test]
fn nine_twenty_structure() {
    let d = diagram("9_20");
    assert_eq!(d.crossing_count(), 9);
    assert_eq!(d.arc_count(), 18);
    assert!(d.is_knot());
    assert_eq!(d.faces().len(), 11);
    assert!(validate(&d).all_pass());
}

#[test]
fn nine_twenty_twists() {
    let d = diagram("9_20");
    let regions = detect_twists(&d).unwrap();
    let profile = twist_profile(&regions);
    assert_eq!(profile.lengths, vec![1, 1, 2, 2, 3]);
    assert_eq!(profile.twist_number(), 5);
    assert_eq!(profile.exactly(1), 2);
    assert_eq!(profile.exactly(2), 2);
    assert_eq!(profile.exactly(3), 1);
    assert_eq!(profile.at_least(2), 3);
    assert_eq!(profile.at_least(3), 1);
    assert_eq!(profile.at_least(4), 0);
    // No twist reaches four crossings, so augmentation changes nothing.
    let aug = augment(&d, &regions).unwrap();
    assert!(aug.circles.is_empty());
    assert_eq!(aug.residual_crossings.len(), 9);
}

/// Golden value from the face-enumeration oracle: classify all 11 faces of
/// the unaugmented diagram; exactly the 3-corner faces count.
#[test]
fn nine_twenty_delta() {
    let d = diagram("9_20");
    let oracle = d.faces().iter().filter(|f| f.degree() == 3).count();
    assert_eq!(oracle, 3);
    let regions = detect_twists(&d).unwrap();
    let aug = augment(&d, &regions).unwrap();
    assert_eq!(count_delta(&aug), oracle);
}

#[test]
fn nine_twenty_checkerboard_graphs() {
    let d = diagram("9_20");
    let pair = build_graphs(&d).unwrap();
    assert_eq!(pair.white.vertex_count(), 7);
    assert_eq!(pair.white.edge_count(), 9);
    assert_eq!(pair.black.vertex_count(), 4);
    assert_eq!(pair.black.edge_count(), 9);

    // W(D) already has no multiple edges; B(D) reduces to five edges.
    let white = reduce_graph(&pair.white);
    assert_eq!(white.edge_count(), 9);
    assert!(white.multiplicities().iter().all(|&m| m == 1));
    let black = reduce_graph(&pair.black);
    assert_eq!(black.edge_count(), 5);
    assert_eq!(black.multiplicities(), vec![3, 2, 2, 1, 1]);

    assert_eq!(triangle_count(&black), 2);
    assert_eq!(triangle_count(&white), 1);

    let stats = multiplicity_profile(&black, &white);
    assert_eq!(stats.n_black_at(2) + stats.n_white_at(2), 3);
    assert_eq!(stats.n_black_at(3) + stats.n_white_at(3), 1);
    assert_eq!(stats.n_black_at(4) + stats.n_white_at(4), 0);
}

#[test]
fn nine_twenty_head_tail_values() {
    let d = diagram("9_20");
    let h2 = head_tail(&jones2(&d).unwrap(), 2).unwrap();
    assert_eq!(h2.a, 1);
    assert_eq!(h2.b, 2);
    assert_eq!(h2.c, 4);
    assert_eq!(h2.beta, 3);
    assert_eq!(h2.gamma, 5);
    assert_eq!(h2.alpha, 1);
    assert_eq!(h2.k, 0);
    assert_eq!(h2.r, 9);
    let h3 = head_tail(&colored_jones3(&d).unwrap(), 3).unwrap();
    assert_eq!(h3.b, 2);
    assert_eq!(h3.c, -1);
    assert_eq!(h3.beta, 3);
    assert_eq!(h3.gamma, 2);
}

#[test]
fn six_one_augments_to_one_circle() {
    let d = diagram("6_1");
    let regions = detect_twists(&d).unwrap();
    let profile = twist_profile(&regions);
    assert_eq!(profile.lengths, vec![2, 4]);
    let aug = augment(&d, &regions).unwrap();
    assert_eq!(aug.circles.len(), 1);
    assert_eq!(aug.residual_crossings.len(), 2);
    // The circle pierces the two faces flanking the long twist.
    let (fa, fb) = aug.circles[0].pierced_faces;
    assert_ne!(fa, fb);
    // Both lateral faces keep one residual corner and gain the slit,
    // which is the two-segment / one-piercing triangular shape; the two
    // merged end regions give the three-segment shape. Together: delta 4.
    assert_eq!(count_delta(&aug), 4);
    // Only the three interior bigons of the long twist disappear; the end
    // regions survive as the two disk-chord halves.
    assert_eq!(aug.faces.len(), d.faces().len() - 3);
}

#[test]
fn eight_three_augments_to_two_circles() {
    let d = diagram("8_3");
    let regions = detect_twists(&d).unwrap();
    let profile = twist_profile(&regions);
    assert_eq!(profile.lengths, vec![4, 4]);
    assert_eq!(profile.at_least(4), 2);
    let aug = augment(&d, &regions).unwrap();
    assert_eq!(aug.circles.len(), 2);
    assert!(aug.residual_crossings.is_empty());
}

#[test]
fn figure_eight_from_table_matches_module_examples() {
    let d = diagram("4_1");
    assert_eq!(d.faces().len(), 6);
    assert_eq!(d.faces().bigons().count(), 2);
    let regions = detect_twists(&d).unwrap();
    assert_eq!(twist_profile(&regions).lengths, vec![2, 2]);
    let aug = augment(&d, &regions).unwrap();
    assert_eq!(count_delta(&aug), 4);
}
