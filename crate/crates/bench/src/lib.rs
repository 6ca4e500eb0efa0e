//! Shared fixtures for the benchmark targets.

use knotvol::diagram::LinkDiagram;
use knotvol::knotbase::bundled_table;

pub fn fixture(name: &str) -> LinkDiagram {
    bundled_table()
        .find(name)
        .unwrap_or_else(|| panic!("{name} not bundled"))
        .diagram()
        .unwrap()
}
