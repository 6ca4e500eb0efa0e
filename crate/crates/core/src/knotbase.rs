//! Reference knot data: the bundled table of named diagrams with known
//! hyperbolic volumes, plus CSV ingestion for user-supplied tables.

use std::collections::BTreeSet;
use std::io::Read;
use std::path::Path;

use crate::diagram::LinkDiagram;
use crate::error::TableError;

/// One reference entry. The PD text must parse to a diagram with the
/// stated crossing number.
#[derive(Clone, Debug, PartialEq)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: usize,
    pub pd: String,
    pub reference_volume: Option<f64>,
    pub provenance: String,
}

impl KnotRecord {
    pub fn diagram(&self) -> Result<LinkDiagram, crate::error::ParseError> {
        LinkDiagram::parse_pd(&self.pd)
    }
}

/// A loaded table plus the rows that failed to parse (collected, never
/// silently dropped).
#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    pub records: Vec<KnotRecord>,
    pub errors: Vec<String>,
}

impl KnotTable {
    pub fn find(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn reference_volume(&self, name: &str) -> Option<f64> {
        self.find(name).and_then(|r| r.reference_volume)
    }
}

const HEADER: [&str; 5] = ["name", "crossings", "pd", "volume", "provenance"];

pub fn load_table(path: &Path) -> Result<KnotTable, TableError> {
    let mut text = String::new();
    std::fs::File::open(path)?.read_to_string(&mut text)?;
    parse_table(&text)
}

pub fn parse_table(text: &str) -> Result<KnotTable, TableError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    {
        let headers = reader.headers()?;
        if headers.len() != HEADER.len()
            || headers.iter().zip(HEADER).any(|(h, want)| h != want)
        {
            return Err(TableError::BadHeader);
        }
    }
    let mut table = KnotTable::default();
    let mut names = BTreeSet::new();
    for row in reader.records() {
        let row = row?;
        let name = row.get(0).unwrap_or("").to_string();
        if !names.insert(name.clone()) {
            return Err(TableError::DuplicateName(name));
        }
        let record = KnotRecord {
            name: name.clone(),
            crossings: row.get(1).and_then(|s| s.parse().ok()).unwrap_or(0),
            pd: row.get(2).unwrap_or("").to_string(),
            reference_volume: row.get(3).and_then(|s| {
                if s.is_empty() {
                    None
                } else {
                    s.parse::<f64>().ok()
                }
            }),
            provenance: row.get(4).unwrap_or("").to_string(),
        };
        match record.diagram() {
            Ok(d) if d.crossing_count() == record.crossings => table.records.push(record),
            Ok(d) => table.errors.push(format!(
                "{name}: PD has {} crossings, row says {}",
                d.crossing_count(),
                record.crossings
            )),
            Err(e) => table.errors.push(format!("{name}: {e}")),
        }
    }
    Ok(table)
}

pub fn save_table(table: &KnotTable) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(HEADER).expect("csv write");
    for r in &table.records {
        let vol = r
            .reference_volume
            .map(|v| format!("{v:.13}"))
            .unwrap_or_default();
        w.write_record([
            r.name.as_str(),
            &r.crossings.to_string(),
            r.pd.as_str(),
            &vol,
            r.provenance.as_str(),
        ])
        .expect("csv write");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
}

/// The bundled reference table.
pub const BUNDLED_TABLE_CSV: &str = include_str!("../data/knots.csv");

pub fn bundled_table() -> KnotTable {
    let table = parse_table(BUNDLED_TABLE_CSV).expect("bundled table is well-formed");
    assert!(table.errors.is_empty(), "bundled table rows must parse: {:?}", table.errors);
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::v3;
    use crate::diagram::validate;

    #[test]
    fn bundled_table_parses_and_validates() {
        let table = bundled_table();
        assert!(table.records.len() >= 15);
        for r in &table.records {
            let d = r.diagram().unwrap();
            assert_eq!(d.crossing_count(), r.crossings, "{}", r.name);
            let report = validate(&d);
            assert!(report.is_alternating, "{}", r.name);
            assert!(report.is_reduced, "{}", r.name);
            assert!(report.is_prime, "{}", r.name);
        }
    }

    #[test]
    fn figure_eight_volume_is_two_tetrahedra() {
        let table = bundled_table();
        let vol = table.reference_volume("4_1").unwrap();
        assert!((vol - 2.0 * v3()).abs() < 1e-10);
        assert!((vol - 2.0298832128).abs() < 1e-9);
    }

    #[test]
    fn lookups() {
        let table = bundled_table();
        assert!(table.reference_volume("3_1").is_none()); // torus knot: no volume
        assert!(table.find("3_1").is_some());
        assert!(table.find("unknown_knot").is_none());
        assert!(table.reference_volume("unknown_knot").is_none());
    }

    #[test]
    fn round_trip_save_load() {
        let table = bundled_table();
        let text = save_table(&table);
        let again = parse_table(&text).unwrap();
        assert_eq!(again.records.len(), table.records.len());
        for (a, b) in table.records.iter().zip(&again.records) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.pd, b.pd);
            match (a.reference_volume, b.reference_volume) {
                (Some(x), Some(y)) => assert!((x - y).abs() < 1e-12),
                (None, None) => {}
                other => panic!("volume mismatch for {}: {other:?}", a.name),
            }
        }
    }

    #[test]
    fn malformed_header_is_rejected() {
        assert!(matches!(
            parse_table("name,pd,volume\n"),
            Err(TableError::BadHeader)
        ));
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let text = "name,crossings,pd,volume,provenance\n\
                    a,3,\"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\",,x\n\
                    a,3,\"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\",,x\n";
        assert!(matches!(parse_table(text), Err(TableError::DuplicateName(_))));
    }

    #[test]
    fn bad_pd_rows_are_collected_not_dropped() {
        let text = "name,crossings,pd,volume,provenance\n\
                    good,3,\"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\",,x\n\
                    bad,3,\"PD[X[1,4,2,5]]\",,x\n";
        let table = parse_table(text).unwrap();
        assert_eq!(table.records.len(), 1);
        assert_eq!(table.errors.len(), 1);
        assert!(table.errors[0].starts_with("bad:"));
    }

    #[test]
    fn empty_volume_field_means_absent() {
        let text = "name,crossings,pd,volume,provenance\n\
                    t,3,\"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\",,torus\n";
        let table = parse_table(text).unwrap();
        assert_eq!(table.records[0].reference_volume, None);
    }
}
