//! JSON report shapes. Field order is fixed by the struct layout so output is
//! byte-for-byte reproducible.

use cage_spectra::regularity::IntersectionArray;
use cage_spectra::surd::SurdJson;
use serde::Serialize;

#[derive(Serialize)]
pub struct ConstructSummary {
    pub family: String,
    pub subdivided: bool,
    pub vertices: usize,
    pub edges: usize,
    pub girth: Option<usize>,
    pub regularity: Option<usize>,
}

#[derive(Serialize)]
pub struct ArrayReport {
    pub notation: String,
    #[serde(flatten)]
    pub array: IntersectionArray,
}

impl From<IntersectionArray> for ArrayReport {
    fn from(array: IntersectionArray) -> Self {
        Self {
            notation: array.to_string(),
            array,
        }
    }
}

#[derive(Serialize)]
pub struct DbrReport {
    pub part1: ArrayReport,
    pub part2: ArrayReport,
    pub part_sizes: [usize; 2],
}

/// Integer entries print as numbers, anything else as `"p/q"`.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Ratio(String),
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub regularity: Option<usize>,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub bipartite: bool,
    pub distance_regular: Option<ArrayReport>,
    pub distance_biregular: Option<DbrReport>,
    pub transmission_regular: Option<i64>,
    pub quotient: Option<Vec<Vec<Entry>>>,
    pub quotient_equitable: Option<bool>,
}

#[derive(Serialize)]
pub struct GraphDescriptor {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    pub regularity: Option<usize>,
    pub girth: Option<usize>,
    /// `(k, g)` when the graph meets the Moore bound.
    pub moore: Option<[u64; 2]>,
}

#[derive(Serialize)]
pub struct NumericEntry {
    pub value: f64,
    pub mult: usize,
}

#[derive(Serialize)]
pub struct Verdicts {
    pub spectrum_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly_matches: Option<bool>,
}

#[derive(Serialize)]
pub struct SpectrumReport {
    pub graph: GraphDescriptor,
    pub matrix: &'static str,
    pub numeric: Vec<NumericEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<SurdJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_notation: Option<String>,
    /// Integer coefficients, constant term first, as decimal strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Verdicts>,
}

#[derive(Serialize)]
pub struct TableRow {
    pub k: u64,
    pub g: u64,
    pub d: u64,
    pub n0: String,
    pub existence: String,
    pub constructible: bool,
    pub dr_radius: Option<String>,
    pub distance_spectrum: Option<String>,
    pub subdivision_radius: Option<String>,
    pub note: String,
}
