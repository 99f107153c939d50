//! The full verification battery for one `(k,g)`: every closed form is
//! evaluated, and — when a cage can be built — compared against BFS distance
//! matrices, the numeric eigensolver and the exact characteristic polynomial.

use std::fmt;
use std::path::PathBuf;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cages::{construct_from, moore_bound, moore_exists, CageFamily, ExistenceVerdict};
use crate::closed_forms::{
    cage_adjacency_spectrum, cage_distance_spectrum, coefficient_table, distance_polynomial, dr_radius,
    equidistance_matrix, max_distance_indicator, printed_bound_diagnostic, printed_distance_polynomial,
    printed_subdivision_char_poly, shell_polynomials, sub_complete_bipartite_spectrum, sub_complete_spectrum,
    subdivision_distance_blocks, subdivision_quotient, subdivision_radius, Parity,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::regularity::{
    dbr_arrays, dbr_quotient_from_arrays, dr_intersection_array, is_transmission_regular, quotient_matrix,
    IntersectionArray,
};
use crate::spectra::{
    char_poly_exact, numeric_spectrum, poly_matrix_equals, roots_contained_in, spectrum_matches, Spectrum,
    DEFAULT_CHARPOLY_CAP, DEFAULT_MATCH_TOL,
};
use crate::surd::ExactSpectrum;
use crate::{IntMatrix, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub k: u64,
    pub g: u64,
    pub d: u64,
    pub n0: u128,
    pub existence: ExistenceVerdict,
    pub constructed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    /// No check failed (skipped checks do not count against a pass).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "({},{}) d={} n0={} existence={:?}", self.k, self.g, self.d, self.n0, self.existence.status)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            writeln!(f, "  {tag} {:<32} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub tol: f64,
    pub charpoly_cap: usize,
    pub data_dir: Option<PathBuf>,
    /// Run the subdivision checks (the numeric part dominates runtime).
    pub subdivision: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_MATCH_TOL,
            charpoly_cap: DEFAULT_CHARPOLY_CAP,
            data_dir: None,
            subdivision: true,
        }
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn verdict(ok: bool, detail: impl Into<String>) -> Outcome {
    if ok {
        Outcome::Pass(detail.into())
    } else {
        Outcome::Fail(detail.into())
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<Outcome>) {
        let (status, detail) = match f() {
            Ok(Outcome::Pass(d)) => (Status::Pass, d),
            Ok(Outcome::Fail(d)) => (Status::Fail, d),
            Ok(Outcome::Skip(d)) => (Status::Skipped, d),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            detail,
        });
    }

    fn skip(&mut self, names: &[&str], why: &str) {
        for name in names {
            self.run(name, || Ok(Outcome::Skip(why.to_string())));
        }
    }
}

/// Girths whose spectra are quadratic surds. Every admissible `k ≥ 3`
/// lands here; only long cycles fall outside.
fn surd_girth(g: u64) -> bool {
    matches!(g, 3 | 4 | 5 | 6 | 8 | 12)
}

/// The `d+1` distinct-eigenvalue count holds for `k ≥ 3`; among cycles only
/// `C_3` and `C_4` satisfy it.
fn distinct_count_applies(k: u64, g: u64) -> bool {
    k >= 3 || g <= 4
}

const CONSTRUCTION_CHECKS: &[&str] = &[
    "construction",
    "intersection-array",
    "shell-sum-identity",
    "shell-recurrence",
    "incidence-identities",
    "shell-polynomials-on-graph",
    "distance-polynomial-on-graph",
    "numeric-adjacency-spectrum",
    "numeric-distance-spectrum",
    "radius-transmission",
    "numeric-distinct-count",
    "exact-char-poly",
];

const SUBDIVISION_CHECKS: &[&str] = &[
    "subdivision-dbr",
    "subdivision-quotient-arrays",
    "subdivision-equitable",
    "subdivision-quotient-formula",
    "subdivision-radius-numeric",
    "subdivision-quotient-roots",
    "subdivision-block-identity",
    "subdivision-spectrum",
    "subdivision-char-poly",
];

/// Runs every check for `(k,g)`. Fails with `NotMoore` when the parameters
/// cannot be a minimal cage; unbuildable but admissible parameters get the
/// formula checks only.
pub fn verify(k: u64, g: u64, opts: &VerifyOptions) -> Result<VerifyReport> {
    let existence = moore_exists(k, g);
    if !existence.formula_ok() {
        return Err(Error::NotMoore {
            k,
            g,
            reason: existence.reason,
        });
    }
    let d = g / 2;
    let mut rec = Recorder::default();
    formula_checks(&mut rec, k, g);

    let family = match CageFamily::for_params(k, g) {
        Ok(f) => Some(f),
        Err(Error::NotConstructible { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut constructed = false;
    match family {
        None => {
            rec.skip(CONSTRUCTION_CHECKS, "not constructible");
            rec.skip(SUBDIVISION_CHECKS, "not constructible");
        }
        Some(family) => match construct_from(family, opts.data_dir.as_deref()) {
            Err(e) => {
                rec.run("construction", || Err(e));
            }
            Ok(graph) => {
                constructed = true;
                rec.run("construction", || {
                    Ok(Outcome::Pass(format!(
                        "{family}: {} vertices, {} edges",
                        graph.vertex_count(),
                        graph.edge_count()
                    )))
                });
                construction_checks(&mut rec, k, g, &graph, opts)?;
                if opts.subdivision {
                    subdivision_checks(&mut rec, k, g, &graph, opts)?;
                } else {
                    rec.skip(SUBDIVISION_CHECKS, "subdivision checks disabled");
                }
            }
        },
    }
    Ok(VerifyReport {
        k,
        g,
        d,
        n0: moore_bound(k, g),
        existence,
        constructed,
        checks: rec.checks,
    })
}

fn formula_checks(rec: &mut Recorder, k: u64, g: u64) {
    let d = g / 2;
    rec.run("coefficient-lemma", || {
        coefficient_table(k as i64, d as usize)?;
        Ok(Outcome::Pass("recurrence, partial sums and g·k−h agree".into()))
    });
    rec.run("shell-polynomials", || {
        let s = shell_polynomials(k, g)?;
        Ok(Outcome::Pass(format!("closed form = recurrence for A_0..A_{}", s.len() - 1)))
    });
    rec.run("printed-distance-polynomial", || {
        let p = distance_polynomial(k, g)?.p;
        Ok(match printed_distance_polynomial(k, g) {
            Some(printed) => verdict(printed == p, format!("p(x) = {p}")),
            None => Outcome::Skip(format!("no printed form for g={g}; p(x) = {p}")),
        })
    });
    rec.run("printed-sum-bound", || {
        if g % 2 != 0 {
            return Ok(Outcome::Skip("odd girth".into()));
        }
        let diag = printed_bound_diagnostic(k, g)?;
        Ok(verdict(
            diag.floor_matches,
            format!("floor matches: {}, ceil matches: {}", diag.floor_matches, diag.ceil_matches),
        ))
    });
    rec.run("dr-radius", || {
        if k < 3 {
            return Ok(Outcome::Skip("closed form needs k >= 3".into()));
        }
        let r = dr_radius(k, g)?;
        let pk = crate::surd::QuadSurd::int(k as i64).eval(&distance_polynomial(k, g)?.p);
        Ok(verdict(pk.to_integer() == Some(r.clone()), format!("{r}; p(k) = {pk}")))
    });
    let spectra_ok = surd_girth(g);
    rec.run("adjacency-spectrum", || {
        if !spectra_ok {
            return Ok(Outcome::Skip(format!("C_{g} spectrum is not quadratic")));
        }
        Ok(Outcome::Pass(cage_adjacency_spectrum(k, g)?.to_string()))
    });
    rec.run("distance-spectrum", || {
        if !spectra_ok {
            return Ok(Outcome::Skip(format!("C_{g} spectrum is not quadratic")));
        }
        let spec = cage_distance_spectrum(k, g)?;
        let total = spec.total_multiplicity() as u128 == moore_bound(k, g);
        Ok(verdict(total && spec.trace_is_zero(), spec.to_string()))
    });
    rec.run("distinct-count", || {
        if !spectra_ok || !distinct_count_applies(k, g) {
            return Ok(Outcome::Skip("does not hold for cycles beyond C_4".into()));
        }
        let n = cage_distance_spectrum(k, g)?.distinct_count();
        Ok(verdict(n as u64 == d + 1, format!("{n} distinct, d+1 = {}", d + 1)))
    });
    rec.run("radius-is-largest", || {
        if k < 3 {
            return Ok(Outcome::Skip("closed form needs k >= 3".into()));
        }
        let r = dr_radius(k, g)?;
        let spec = cage_distance_spectrum(k, g)?;
        let top = spec.largest().and_then(|v| v.to_integer());
        Ok(verdict(top.as_ref() == Some(&r), format!("radius {r}, largest {top:?}")))
    });
    rec.run("subdivision-quotient", || {
        if g % 2 == 1 && g > 5 {
            return Ok(Outcome::Skip(format!("no formula for odd girth {g}")));
        }
        let q = subdivision_quotient(k, g)?;
        Ok(Outcome::Pass(format_matrix(&q.q)))
    });
    rec.run("subdivision-radius", || {
        if g % 2 == 1 && g > 5 {
            return Ok(Outcome::Skip(format!("no formula for odd girth {g}")));
        }
        Ok(Outcome::Pass(subdivision_radius(k, g)?.to_string()))
    });
    rec.run("subdivision-family-spectrum", || {
        let spec = match g {
            3 => sub_complete_spectrum(k)?,
            4 => sub_complete_bipartite_spectrum(k)?,
            _ => return Ok(Outcome::Skip("closed form only for g = 3, 4".into())),
        };
        let expected = moore_bound(k, g) + moore_bound(k, g) * k as u128 / 2;
        Ok(verdict(
            spec.total_multiplicity() as u128 == expected && spec.trace_is_zero(),
            spec.to_string(),
        ))
    });
}

fn shell_recurrence_holds(a: &IntMatrix, shells: &[IntMatrix], array: &IntersectionArray) -> Option<usize> {
    let n = a.rows();
    let zero = IntMatrix::zeros(n, n);
    let d = shells.len() - 1;
    (0..=d).find(|&i| {
        let lhs = a.matmul(&shells[i]);
        let next = if i < d { shells[i + 1].scale(&(array.c_at(i + 1) as i64)) } else { zero.clone() };
        let prev = if i > 0 { shells[i - 1].scale(&(array.b_at(i - 1) as i64)) } else { zero.clone() };
        let a_i = array.a_at(i).map_or(-1, |v| v as i64);
        let rhs = &(&next + &shells[i].scale(&a_i)) + &prev;
        lhs != rhs
    })
}

fn construction_checks(rec: &mut Recorder, k: u64, g: u64, graph: &Graph, opts: &VerifyOptions) -> Result<()> {
    let d = g / 2;
    let n = graph.vertex_count();
    let a = graph.adjacency_matrix();
    let dist = graph.distance_matrix()?;
    let moore = IntersectionArray::moore(k, g);
    rec.run("intersection-array", || {
        let found = dr_intersection_array(graph)?;
        Ok(verdict(
            found.as_ref() == Some(&moore),
            format!("found {}, expected {moore}", found.map_or("none".to_string(), |a| a.to_string())),
        ))
    });
    let shells: Vec<IntMatrix> = (0..=d as usize).map(|i| crate::graph::shell_of(&dist, i)).collect();
    rec.run("shell-sum-identity", || {
        let sum = shells
            .iter()
            .enumerate()
            .fold(IntMatrix::zeros(n, n), |acc, (i, s)| &acc + &s.scale(&(i as i64)));
        Ok(verdict(sum == dist, "D = Σ i·A_i"))
    });
    rec.run("shell-recurrence", || {
        Ok(match shell_recurrence_holds(&a, &shells, &moore) {
            None => Outcome::Pass(format!("A·A_i identity for i = 0..{d}")),
            Some(i) => Outcome::Fail(format!("A·A_{i} identity fails")),
        })
    });
    rec.run("incidence-identities", || {
        let r = graph.incidence_matrix();
        let rrt = r.matmul(&r.transpose());
        let rtr = r.transpose().matmul(&r);
        let lhs1 = &a + &IntMatrix::identity(n).scale(&(k as i64));
        let al = graph.line_graph().adjacency_matrix();
        let lhs2 = &al + &IntMatrix::identity(graph.edge_count()).scale(&2);
        Ok(verdict(rrt == lhs1 && rtr == lhs2, "RRᵀ = A + kI, RᵀR = A(L) + 2I"))
    });
    rec.run("shell-polynomials-on-graph", || {
        for s in shell_polynomials(k, g)? {
            if !poly_matrix_equals(&s.poly, &a, &shells[s.i])? {
                return Ok(Outcome::Fail(format!("A_{} ≠ {}", s.i, s.poly)));
            }
        }
        Ok(Outcome::Pass(format!("A_i = poly_i(A) for i = 0..{d}")))
    });
    rec.run("distance-polynomial-on-graph", || {
        let p = distance_polynomial(k, g)?.p;
        Ok(verdict(poly_matrix_equals(&p, &a, &dist)?, format!("D = {p} at A")))
    });
    let spectra_ok = surd_girth(g);
    rec.run("numeric-adjacency-spectrum", || {
        if !spectra_ok {
            return Ok(Outcome::Skip(format!("C_{g} spectrum is not quadratic")));
        }
        let num = numeric_spectrum(&a)?;
        Ok(verdict(
            spectrum_matches(&num, &cage_adjacency_spectrum(k, g)?, opts.tol),
            format!("{} distinct", num.distinct_count()),
        ))
    });
    let dnum = numeric_spectrum(&dist)?;
    rec.run("numeric-distance-spectrum", || {
        if !spectra_ok {
            return Ok(Outcome::Skip(format!("C_{g} spectrum is not quadratic")));
        }
        Ok(verdict(
            spectrum_matches(&dnum, &cage_distance_spectrum(k, g)?, opts.tol),
            format_numeric(&dnum),
        ))
    });
    rec.run("radius-transmission", || {
        let Some(t) = is_transmission_regular(graph)? else {
            return Ok(Outcome::Fail("not transmission regular".into()));
        };
        let top = dnum.largest().unwrap_or(f64::NAN);
        let numeric_ok = (top - t as f64).abs() <= opts.tol;
        if k < 3 {
            return Ok(verdict(numeric_ok, format!("transmission {t}, numeric max {top}")));
        }
        let r = dr_radius(k, g)?;
        Ok(verdict(
            numeric_ok && r == BigInt::from(t),
            format!("closed form {r}, transmission {t}, numeric max {top}"),
        ))
    });
    rec.run("numeric-distinct-count", || {
        if !distinct_count_applies(k, g) {
            return Ok(Outcome::Skip("does not hold for cycles beyond C_4".into()));
        }
        let c = dnum.distinct_count();
        Ok(verdict(c as u64 == d + 1, format!("{c} distinct, d+1 = {}", d + 1)))
    });
    rec.run("exact-char-poly", || {
        if n > opts.charpoly_cap {
            return Ok(Outcome::Skip(format!("n = {n} exceeds cap {}", opts.charpoly_cap)));
        }
        if !spectra_ok {
            return Ok(Outcome::Skip(format!("C_{g} spectrum is not quadratic")));
        }
        let exact = char_poly_exact(&dist, opts.charpoly_cap)?.to_rational();
        let expected = cage_distance_spectrum(k, g)?.char_poly()?;
        Ok(verdict(exact == expected, "det(xI − D) = Π(x − λ)^m"))
    });
    Ok(())
}

fn format_matrix(m: &RatMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn format_numeric(s: &Spectrum<f64>) -> String {
    let parts: Vec<String> = s.entries().iter().map(|(v, m)| format!("{v:.6}^{m}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn subdivision_checks(rec: &mut Recorder, k: u64, g: u64, graph: &Graph, opts: &VerifyOptions) -> Result<()> {
    let n = graph.vertex_count();
    let sub = graph.subdivision();
    let ns = sub.vertex_count();
    let ds = sub.distance_matrix()?;
    let partition = vec![(0..n).collect::<Vec<_>>(), (n..ns).collect()];
    let direct = quotient_matrix(&ds, &partition)?;
    let formula_ok = g % 2 == 0 || g <= 5;

    rec.run("subdivision-dbr", || {
        Ok(match dbr_arrays(&sub)? {
            Some(arr) => Outcome::Pass(format!("{} / {}", arr.part1, arr.part2)),
            None => Outcome::Fail("S(G) is not distance-biregular".into()),
        })
    });
    rec.run("subdivision-quotient-arrays", || {
        let Some(arr) = dbr_arrays(&sub)? else {
            return Ok(Outcome::Fail("no DBR arrays".into()));
        };
        let from_arrays = dbr_quotient_from_arrays(&arr)?;
        Ok(verdict(from_arrays.q == direct.q, format_matrix(&direct.q)))
    });
    rec.run("subdivision-equitable", || {
        Ok(verdict(direct.equitable, "vertex/edge bipartition of D(S(G))"))
    });
    rec.run("subdivision-quotient-formula", || {
        if !formula_ok {
            return Ok(Outcome::Skip(format!("no formula for odd girth {g}")));
        }
        let q = subdivision_quotient(k, g)?;
        Ok(verdict(q.q == direct.q, format!("formula {}, graph {}", format_matrix(&q.q), format_matrix(&direct.q))))
    });
    let snum = numeric_spectrum(&ds)?;
    rec.run("subdivision-radius-numeric", || {
        let top = snum.largest().unwrap_or(f64::NAN);
        let root = if formula_ok {
            subdivision_radius(k, g)?
        } else {
            direct.larger_root()?
        };
        Ok(verdict(
            (root.to_f64() - top).abs() <= opts.tol,
            format!("{root} ≈ {:.9}, numeric max {top:.9}", root.to_f64()),
        ))
    });
    rec.run("subdivision-quotient-roots", || {
        Ok(verdict(
            roots_contained_in(&direct.char_poly(), &snum, opts.tol),
            "quotient eigenvalues lie in spec D(S(G))",
        ))
    });
    rec.run("subdivision-block-identity", || {
        let parity = Parity::of_girth(g);
        let blocks = subdivision_distance_blocks(graph, parity)?;
        if blocks != ds {
            let at = blocks.first_difference(&ds);
            return Ok(Outcome::Fail(format!("block form differs from BFS at {at:?}")));
        }
        if parity == Parity::Odd {
            let dist = graph.distance_matrix()?;
            if equidistance_matrix(graph, &dist) != max_distance_indicator(graph)? {
                return Ok(Outcome::Fail("equidistance E differs from the max-distance E".into()));
            }
        }
        Ok(Outcome::Pass(format!("{parity:?} girth block form = BFS")))
    });
    rec.run("subdivision-spectrum", || {
        let exact: ExactSpectrum = match g {
            3 => sub_complete_spectrum(k)?,
            4 => sub_complete_bipartite_spectrum(k)?,
            _ => return Ok(Outcome::Skip("closed form only for g = 3, 4".into())),
        };
        Ok(verdict(spectrum_matches(&snum, &exact, opts.tol), exact.to_string()))
    });
    rec.run("subdivision-char-poly", || {
        let Some(printed) = printed_subdivision_char_poly(k, g) else {
            return Ok(Outcome::Skip("no printed factorisation".into()));
        };
        if ns > opts.charpoly_cap {
            return Ok(Outcome::Skip(format!("n = {ns} exceeds cap {}", opts.charpoly_cap)));
        }
        let exact = char_poly_exact(&ds, opts.charpoly_cap)?;
        Ok(verdict(exact == printed, format!("det(xI − D(S(G))) = {exact}")))
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn petersen_battery_passes() {
        let r = verify(3, 5, &quick()).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.constructed);
        assert_eq!(r.check("subdivision-char-poly").unwrap().status, Status::Pass);
        assert_eq!(r.check("exact-char-poly").unwrap().status, Status::Pass);
    }

    #[test]
    fn formula_only_parameters() {
        let r = verify(57, 5, &quick()).unwrap();
        assert!(r.passed(), "{r}");
        assert!(!r.constructed);
        let c = r.check("construction").unwrap();
        assert_eq!((c.status, c.detail.as_str()), (Status::Skipped, "not constructible"));
        assert_eq!(r.check("distance-spectrum").unwrap().status, Status::Pass);
    }

    #[test]
    fn non_moore_parameters_are_errors() {
        assert!(matches!(verify(3, 7, &quick()), Err(Error::NotMoore { .. })));
    }

    #[test]
    fn long_cycles_skip_surd_checks() {
        let r = verify(2, 7, &quick()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.check("distance-spectrum").unwrap().status, Status::Skipped);
        assert_eq!(r.check("subdivision-block-identity").unwrap().status, Status::Pass);
    }
}
