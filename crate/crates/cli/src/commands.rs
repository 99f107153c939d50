use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use cage_spectra::cages::{construct_from, moore_bound, moore_exists, CageFamily, Existence};
use cage_spectra::closed_forms::{
    cage_adjacency_spectrum, cage_distance_spectrum, dr_radius, subdivision_radius,
};
use cage_spectra::regularity::{
    dbr_arrays, dr_intersection_array, is_transmission_regular, quotient_matrix, QuotientMatrix,
};
use cage_spectra::spectra::{char_poly_exact, numeric_spectrum, spectrum_matches};
use cage_spectra::verify::{verify as run_battery, Check, VerifyOptions};
use cage_spectra::{Error, ExactSpectrum, Graph};
use serde::Serialize;

use crate::report::{
    AnalyzeReport, ConstructSummary, DbrReport, Entry, GraphDescriptor, NumericEntry, SpectrumReport, TableRow,
    Verdicts,
};
use crate::MatrixKind;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(io) => Failure::Io(io.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// A degree or an inclusive range `a..b`.
#[derive(Clone, Debug)]
pub struct KRange(pub Vec<u64>);

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad degree `{t}`: {e}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range {s}"));
                }
                Ok(KRange((a..=b).collect()))
            }
            None => Ok(KRange(vec![num(s)?])),
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io(format!("stdout: {e}")))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(Graph::from_edge_list(&text)?)
}

pub fn construct(spec: &str, subdivide: bool, out: Option<&Path>, json: bool) -> Result<u8, Failure> {
    let family: CageFamily = spec.parse()?;
    let mut graph = construct_from(family, crate::data_dir().as_deref())?;
    if subdivide {
        graph = graph.subdivision();
    }
    let summary = ConstructSummary {
        family: family.to_string(),
        subdivided: subdivide,
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        girth: graph.girth(),
        regularity: graph.regularity(),
    };
    let text = if json {
        to_json(&summary)
    } else {
        let girth = summary.girth.map_or("none".to_string(), |g| g.to_string());
        let reg = summary
            .regularity
            .map_or("irregular".to_string(), |k| format!("{k}-regular"));
        let prefix = if subdivide { "S(" } else { "" };
        let suffix = if subdivide { ")" } else { "" };
        format!(
            "{prefix}{}{suffix}: {} vertices, {} edges, girth {girth}, {reg}\n",
            summary.family, summary.vertices, summary.edges
        )
    };
    match out {
        Some(path) => {
            emit(Some(path), &graph.to_edge_list())?;
            emit(None, &text)?;
        }
        None => {
            emit(None, &graph.to_edge_list())?;
            eprint!("{text}");
        }
    }
    Ok(EXIT_PASS)
}

fn quotient_entries(q: &QuotientMatrix) -> Vec<Vec<Entry>> {
    match q.to_i64() {
        Some(rows) => rows.into_iter().map(|r| r.into_iter().map(Entry::Int).collect()).collect(),
        None => (0..q.parts())
            .map(|i| q.q.row(i).iter().map(|v| Entry::Ratio(v.to_string())).collect())
            .collect(),
    }
}

pub fn analyze(input: &Path, out: Option<&Path>) -> Result<u8, Failure> {
    let graph = read_graph(input)?;
    let connected = graph.is_connected();
    let mut report = AnalyzeReport {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        connected,
        regularity: graph.regularity(),
        girth: graph.girth(),
        diameter: None,
        bipartite: graph.is_bipartite(),
        distance_regular: None,
        distance_biregular: None,
        transmission_regular: None,
        quotient: None,
        quotient_equitable: None,
    };
    if connected {
        report.diameter = Some(graph.diameter()?);
        report.distance_regular = dr_intersection_array(&graph)?.map(Into::into);
        report.transmission_regular = is_transmission_regular(&graph)?;
        if let Some(arrays) = dbr_arrays(&graph)? {
            let q = quotient_matrix(&graph.distance_matrix()?, &[arrays.v1.clone(), arrays.v2.clone()])?;
            report.quotient = Some(quotient_entries(&q));
            report.quotient_equitable = Some(q.equitable);
            report.distance_biregular = Some(DbrReport {
                part_sizes: [arrays.v1.len(), arrays.v2.len()],
                part1: arrays.part1.into(),
                part2: arrays.part2.into(),
            });
        }
    }
    emit(out, &to_json(&report))?;
    Ok(EXIT_PASS)
}

/// `(k, g)` when the graph is `k`-regular of girth `g` on exactly the Moore
/// bound and the parameters admit the closed forms.
fn moore_params(graph: &Graph) -> Option<(u64, u64)> {
    let k = graph.regularity()? as u64;
    let g = graph.girth()? as u64;
    (k >= 2 && moore_bound(k, g) == graph.vertex_count() as u128 && moore_exists(k, g).formula_ok())
        .then_some((k, g))
}

/// Rounded to 1e-9 so that solver noise never reaches the report.
fn clean(v: f64) -> f64 {
    let r = (v * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn spectrum(
    input: &Path,
    matrix: MatrixKind,
    exact_charpoly: bool,
    cap: usize,
    tol: f64,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let graph = read_graph(input)?;
    let m = match matrix {
        MatrixKind::Adjacency => graph.adjacency_matrix(),
        MatrixKind::Distance => graph.distance_matrix()?,
    };
    let numeric = numeric_spectrum(&m)?;
    let moore = moore_params(&graph);
    let exact: Option<ExactSpectrum> = moore.and_then(|(k, g)| match matrix {
        MatrixKind::Adjacency => cage_adjacency_spectrum(k, g).ok(),
        MatrixKind::Distance => cage_distance_spectrum(k, g).ok(),
    });
    let char_poly = if exact_charpoly { Some(char_poly_exact(&m, cap)?) } else { None };
    let verdicts = match &exact {
        Some(spec) => Some(Verdicts {
            spectrum_matches: spectrum_matches(&numeric, spec, tol),
            char_poly_matches: match &char_poly {
                Some(p) => Some(spec.char_poly()? == p.to_rational()),
                None => None,
            },
        }),
        None => None,
    };
    let passed = verdicts
        .as_ref()
        .is_none_or(|v| v.spectrum_matches && v.char_poly_matches != Some(false));
    let report = SpectrumReport {
        graph: GraphDescriptor {
            source: input.display().to_string(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            regularity: graph.regularity(),
            girth: graph.girth(),
            moore: moore.map(|(k, g)| [k, g]),
        },
        matrix: match matrix {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Distance => "distance",
        },
        numeric: numeric
            .entries()
            .iter()
            .map(|&(value, mult)| NumericEntry { value: clean(value), mult })
            .collect(),
        exact_notation: exact.as_ref().map(|s| s.to_string()),
        exact: exact.as_ref().map(|s| s.to_json()).transpose()?,
        char_poly: char_poly.map(|p| p.coeffs().iter().map(|c| c.to_string()).collect()),
        verdicts,
    };
    emit(out, &to_json(&report))?;
    Ok(if passed { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct Discrepancies<'a> {
    k: u64,
    g: u64,
    failures: Vec<&'a Check>,
}

pub fn verify(k: u64, g: u64, opts: &VerifyOptions, json: bool, out: Option<&Path>) -> Result<u8, Failure> {
    let report = run_battery(k, g, opts)?;
    let text = if json { to_json(&report) } else { report.to_string() };
    emit(out, &text)?;
    if report.passed() {
        return Ok(EXIT_PASS);
    }
    if !json {
        eprint!(
            "{}",
            to_json(&Discrepancies {
                k,
                g,
                failures: report.failures().collect(),
            })
        );
    }
    Ok(EXIT_FAIL)
}

fn table_row(k: u64, g: u64) -> TableRow {
    let verdict = moore_exists(k, g);
    let constructible = CageFamily::for_params(k, g).is_ok();
    let mut notes = Vec::new();
    let mut row = TableRow {
        k,
        g,
        d: g / 2,
        n0: moore_bound(k, g).to_string(),
        existence: match verdict.status {
            Existence::Exists => "exists",
            Existence::DoesNotExist => "does-not-exist",
            Existence::Unknown => "unknown",
        }
        .to_string(),
        constructible,
        dr_radius: None,
        distance_spectrum: None,
        subdivision_radius: None,
        note: String::new(),
    };
    if !verdict.formula_ok() {
        row.note = format!("not a Moore parameter set: {}", verdict.reason);
        return row;
    }
    let mut record = |what: &str, r: Result<String, Error>| match r {
        Ok(v) => Some(v),
        Err(e) => {
            notes.push(format!("{what}: {e}"));
            None
        }
    };
    if k >= 3 {
        row.dr_radius = record("dr_radius", dr_radius(k, g).map(|r| r.to_string()));
    }
    row.distance_spectrum = record("spectrum", cage_distance_spectrum(k, g).map(|s| s.to_string()));
    row.subdivision_radius = record("subdivision", subdivision_radius(k, g).map(|s| s.to_string()));
    if !constructible {
        notes.insert(0, "formula only (no construction)".to_string());
    }
    row.note = notes.join("; ");
    row
}

pub fn table(g: u64, ks: &[KRange], json: bool, out: Option<&Path>) -> Result<u8, Failure> {
    let ks: Vec<u64> = ks.iter().flat_map(|r| r.0.iter().copied()).collect();
    if let Some(bad) = ks.iter().find(|&&k| k < 2) {
        return Err(Failure::Usage(format!("degree must be at least 2, got {bad}")));
    }
    if g < 3 {
        return Err(Failure::Usage(format!("girth must be at least 3, got {g}")));
    }
    let rows: Vec<TableRow> = ks.iter().map(|&k| table_row(k, g)).collect();
    let text = if json {
        to_json(&rows)
    } else {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &rows {
            w.serialize(row).map_err(|e| Failure::Io(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
        String::from_utf8(bytes).expect("csv output is utf-8")
    };
    emit(out, &text)?;
    Ok(EXIT_PASS)
}
