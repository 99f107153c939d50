//! Moore bound, the existence lemma for Moore graphs, and constructors for
//! every minimal cage family shipped with the crate.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{named, Graph};
use crate::regularity::{dr_intersection_array, IntersectionArray};

/// File name of the bundled (3,12)-cage inside a data directory.
pub const TUTTE_12CAGE_FILE: &str = "tutte_12cage.edges";

const TUTTE_12CAGE_DATA: &str = include_str!("../data/tutte_12cage.edges");

/// `k`, `g`, the diameter `d = ⌊g/2⌋` and the Moore bound `n0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CageParams {
    pub k: u64,
    pub g: u64,
    pub d: u64,
    pub n0: u128,
}

impl CageParams {
    pub fn new(k: u64, g: u64) -> Self {
        Self {
            k,
            g,
            d: g / 2,
            n0: moore_bound(k, g),
        }
    }
}

/// `n0(k,g)`: `1 + k + k(k-1) + … + k(k-1)^{d-1}` for odd `g`; for even `g`
/// the last term is `(k-1)^{d-1}` instead. Saturates at `u128::MAX`.
pub fn moore_bound(k: u64, g: u64) -> u128 {
    let d = (g / 2) as u32;
    let (k, h) = (u128::from(k), u128::from(k.saturating_sub(1)));
    let mut total: u128 = 1;
    let mut power: u128 = 1; // (k-1)^i
    for i in 0..d {
        let term = if g % 2 == 0 && i + 1 == d {
            power
        } else {
            k.saturating_mul(power)
        };
        total = total.saturating_add(term);
        power = power.saturating_mul(h);
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Existence {
    Exists,
    DoesNotExist,
    /// Open case, e.g. `(57,5)`: closed forms still evaluate.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistenceVerdict {
    pub status: Existence,
    pub reason: String,
}

impl ExistenceVerdict {
    fn new(status: Existence, reason: impl Into<String>) -> Self {
        Self {
            status,
            reason: reason.into(),
        }
    }

    pub fn exists(&self) -> bool {
        self.status == Existence::Exists
    }

    /// Whether the closed forms are meaningful for these parameters.
    pub fn formula_ok(&self) -> bool {
        self.status != Existence::DoesNotExist
    }
}

/// Existence of a Moore graph of degree `k` and girth `g`.
pub fn moore_exists(k: u64, g: u64) -> ExistenceVerdict {
    use Existence::*;
    if k < 2 || g < 3 {
        return ExistenceVerdict::new(DoesNotExist, "requires k >= 2 and g >= 3");
    }
    if k == 2 {
        return ExistenceVerdict::new(Exists, format!("cycle C_{g}"));
    }
    match g {
        3 => ExistenceVerdict::new(Exists, format!("complete graph K_{}", k + 1)),
        4 => ExistenceVerdict::new(Exists, format!("complete bipartite graph K_{{{k},{k}}}")),
        5 => match k {
            3 => ExistenceVerdict::new(Exists, "Petersen graph"),
            7 => ExistenceVerdict::new(Exists, "Hoffman-Singleton graph"),
            57 => ExistenceVerdict::new(Unknown, "k = 57 is open"),
            _ => ExistenceVerdict::new(DoesNotExist, "girth 5 allows only k in {2, 3, 7, 57}"),
        },
        6 | 8 | 12 => {
            let order = k - 1;
            let polygon = match g {
                6 => "projective plane",
                8 => "generalized quadrangle",
                _ => "generalized hexagon",
            };
            if is_prime_power(order) {
                ExistenceVerdict::new(Exists, format!("{polygon} of order {order}"))
            } else if g == 6 && (order == 10 || bruck_ryser_excludes(order)) {
                ExistenceVerdict::new(DoesNotExist, format!("no {polygon} of order {order}"))
            } else {
                ExistenceVerdict::new(Unknown, format!("{polygon} of order {order} is open"))
            }
        }
        _ => ExistenceVerdict::new(
            DoesNotExist,
            "for k >= 3 Moore graphs have girth 3, 4, 5, 6, 8 or 12",
        ),
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|p| n % p == 0).expect("n >= 2 has a prime factor");
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

/// Bruck–Ryser: no projective plane of order `n ≡ 1, 2 (mod 4)` unless `n` is
/// a sum of two squares.
fn bruck_ryser_excludes(n: u64) -> bool {
    matches!(n % 4, 1 | 2) && !is_sum_of_two_squares(n)
}

fn is_sum_of_two_squares(n: u64) -> bool {
    (0..).take_while(|a| a * a <= n).any(|a| {
        let rest = n - a * a;
        let b = (rest as f64).sqrt() as u64;
        (b.saturating_sub(1)..=b + 1).any(|b| b * b == rest)
    })
}

/// A constructible minimal cage family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CageFamily {
    /// `C_n`, the minimal `(2,n)`-cage.
    Cycle(usize),
    /// `K_n`, the minimal `(n-1,3)`-cage.
    Complete(usize),
    /// `K_{k,k}`, the minimal `(k,4)`-cage.
    CompleteBipartite(usize),
    Petersen,
    HoffmanSingleton,
    /// Incidence graph of PG(2,q), q prime: the minimal `(q+1,6)`-cage.
    Pg2(u64),
    TutteCoxeter,
    Tutte12Cage,
}

impl CageFamily {
    /// The shipped family realising `(k,g)`, if any.
    pub fn for_params(k: u64, g: u64) -> Result<Self> {
        let verdict = moore_exists(k, g);
        if !verdict.formula_ok() {
            return Err(Error::NotMoore {
                k,
                g,
                reason: verdict.reason,
            });
        }
        let family = match (k, g) {
            (2, g) => Some(Self::Cycle(g as usize)),
            (k, 3) => Some(Self::Complete(k as usize + 1)),
            (k, 4) => Some(Self::CompleteBipartite(k as usize)),
            (3, 5) => Some(Self::Petersen),
            (7, 5) => Some(Self::HoffmanSingleton),
            (k, 6) if is_prime(k - 1) => Some(Self::Pg2(k - 1)),
            (3, 8) => Some(Self::TutteCoxeter),
            (3, 12) => Some(Self::Tutte12Cage),
            _ => None,
        };
        family.ok_or_else(|| Error::NotConstructible {
            k,
            g,
            reason: if verdict.exists() {
                format!("{}; no constructor shipped", verdict.reason)
            } else {
                verdict.reason
            },
        })
    }

    /// `(k, g)` of the cage this family builds.
    pub fn params(&self) -> (u64, u64) {
        match *self {
            Self::Cycle(n) => (2, n as u64),
            Self::Complete(n) => (n as u64 - 1, 3),
            Self::CompleteBipartite(k) => (k as u64, 4),
            Self::Petersen => (3, 5),
            Self::HoffmanSingleton => (7, 5),
            Self::Pg2(q) => (q + 1, 6),
            Self::TutteCoxeter => (3, 8),
            Self::Tutte12Cage => (3, 12),
        }
    }

    fn check_admissible(&self) -> Result<()> {
        let bad = |reason: &str| {
            let (k, g) = self.params();
            Err(Error::NotMoore {
                k,
                g,
                reason: reason.into(),
            })
        };
        match *self {
            Self::Cycle(n) if n < 3 => bad("a cycle needs at least 3 vertices"),
            Self::Complete(n) if n < 3 => bad("K_n has a cycle only for n >= 3"),
            Self::CompleteBipartite(k) if k < 2 => bad("K_{k,k} has a cycle only for k >= 2"),
            Self::Pg2(q) if !is_prime(q) => Err(Error::NotPrime(q)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CageFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Complete(n) => write!(f, "complete:{n}"),
            Self::CompleteBipartite(k) => write!(f, "complete-bipartite:{k}"),
            Self::Petersen => f.write_str("petersen"),
            Self::HoffmanSingleton => f.write_str("hoffman-singleton"),
            Self::Pg2(q) => write!(f, "pg2:{q}"),
            Self::TutteCoxeter => f.write_str("tutte-coxeter"),
            Self::Tutte12Cage => f.write_str("tutte-12cage"),
        }
    }
}

/// Grammar: `name(:param)*`.
impl FromStr for CageFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        let spec_err = || Error::FamilySpec(s.to_string());
        let one = || -> Result<usize> {
            match params.as_slice() {
                [p] => p.parse().map_err(|_| spec_err()),
                _ => Err(spec_err()),
            }
        };
        let none = |f: Self| if params.is_empty() { Ok(f) } else { Err(spec_err()) };
        match name {
            "cycle" => Ok(Self::Cycle(one()?)),
            "complete" => Ok(Self::Complete(one()?)),
            "complete-bipartite" => Ok(Self::CompleteBipartite(one()?)),
            "pg2" => Ok(Self::Pg2(one()? as u64)),
            "petersen" => none(Self::Petersen),
            "hoffman-singleton" => none(Self::HoffmanSingleton),
            "tutte-coxeter" => none(Self::TutteCoxeter),
            "tutte-12cage" => none(Self::Tutte12Cage),
            _ => Err(spec_err()),
        }
    }
}

/// Builds and validates a cage using the bundled data files.
pub fn construct(family: CageFamily) -> Result<Graph> {
    construct_from(family, None)
}

/// Like [`construct`], reading data files from `data_dir` when given.
pub fn construct_from(family: CageFamily, data_dir: Option<&Path>) -> Result<Graph> {
    family.check_admissible()?;
    let g = match family {
        CageFamily::Cycle(n) => named::cycle(n),
        CageFamily::Complete(n) => named::complete(n),
        CageFamily::CompleteBipartite(k) => named::complete_bipartite(k, k),
        CageFamily::Petersen => petersen(),
        CageFamily::HoffmanSingleton => hoffman_singleton(),
        CageFamily::Pg2(q) => pg2_incidence(q)?,
        CageFamily::TutteCoxeter => tutte_coxeter(),
        CageFamily::Tutte12Cage => tutte_12cage(data_dir)?,
    };
    let (k, girth) = family.params();
    validate_cage(&g, k, girth)?;
    if family == CageFamily::Tutte12Cage {
        if !g.is_bipartite() {
            return Err(Error::Validation("12-cage data is not bipartite".into()));
        }
        if dr_intersection_array(&g)? != Some(IntersectionArray::moore(3, 12)) {
            return Err(Error::Validation(
                "12-cage data does not have the expected intersection array".into(),
            ));
        }
    }
    Ok(g)
}

/// Checks vertex count against the Moore bound, `k`-regularity, girth and
/// connectivity.
pub fn validate_cage(g: &Graph, k: u64, girth: u64) -> Result<()> {
    let n0 = moore_bound(k, girth);
    if g.vertex_count() as u128 != n0 {
        return Err(Error::Validation(format!(
            "{} vertices, Moore bound is {n0}",
            g.vertex_count()
        )));
    }
    if g.regularity() != Some(k as usize) {
        return Err(Error::Validation(format!("not {k}-regular")));
    }
    match g.girth() {
        Some(x) if x as u64 == girth => {}
        other => {
            return Err(Error::Validation(format!("girth {other:?}, expected {girth}")));
        }
    }
    g.ensure_connected()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Kneser graph on the 2-subsets of a 5-set.
pub fn petersen() -> Graph {
    let duads = pairs(5);
    let edges = pairs(duads.len()).into_iter().filter(|&(i, j)| {
        let (a, b) = (duads[i], duads[j]);
        a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
    });
    Graph::from_edges(duads.len(), edges).expect("Kneser construction is simple")
}

/// Pentagons `P_h` (vertex `5h + j`) and pentagrams `Q_i` (vertex
/// `25 + 5i + j`); vertex `j` of `P_h` is joined to vertex `h·i + j` of `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    Graph::from_edges(50, edges).expect("Hoffman-Singleton construction is simple")
}

/// Normalised projective points of PG(2,q): first nonzero coordinate 1.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut pts = Vec::new();
    for b in 0..q {
        for c in 0..q {
            pts.push([1, b, c]);
        }
    }
    for c in 0..q {
        pts.push([0, 1, c]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// Point–line incidence graph of PG(2,q) for prime `q`. Points are vertices
/// `0..N`, lines `N..2N` with `N = q²+q+1`.
pub fn pg2_incidence(q: u64) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let pts = projective_points(q);
    let n = pts.len();
    let mut edges = Vec::with_capacity(n * (q as usize + 1));
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                edges.push((i, n + j));
            }
        }
    }
    Graph::from_edges(2 * n, edges)
}

/// Duads of a 6-set (vertices `0..15`) against synthemes (`15..30`), joined
/// by containment.
pub fn tutte_coxeter() -> Graph {
    let duads = pairs(6);
    let mut synthemes: Vec<[(usize, usize); 3]> = Vec::new();
    for (i, &a) in duads.iter().enumerate() {
        for (j, &b) in duads.iter().enumerate().skip(i + 1) {
            for &c in &duads[j + 1..] {
                let mut seen = [false; 6];
                let disjoint = [a, b, c].iter().all(|&(x, y)| {
                    !std::mem::replace(&mut seen[x], true) && !std::mem::replace(&mut seen[y], true)
                });
                if disjoint && a.0 == 0 {
                    synthemes.push([a, b, c]);
                }
            }
        }
    }
    let mut edges = Vec::with_capacity(45);
    for (s, syn) in synthemes.iter().enumerate() {
        for duad in syn {
            let d = duads.iter().position(|x| x == duad).expect("duad of a 6-set");
            edges.push((d, duads.len() + s));
        }
    }
    Graph::from_edges(duads.len() + synthemes.len(), edges)
        .expect("duad/syntheme construction is simple")
}

/// The (3,12)-cage from `data_dir/tutte_12cage.edges`, or the bundled copy.
pub fn tutte_12cage(data_dir: Option<&Path>) -> Result<Graph> {
    match data_dir {
        Some(dir) => Graph::from_edge_list(&std::fs::read_to_string(dir.join(TUTTE_12CAGE_FILE))?),
        None => Graph::from_edge_list(TUTTE_12CAGE_DATA),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moore_bounds() {
        assert_eq!(moore_bound(3, 5), 10);
        assert_eq!(moore_bound(3, 6), 14);
        assert_eq!(moore_bound(7, 5), 50);
        assert_eq!(moore_bound(57, 5), 3250);
        assert_eq!(moore_bound(3, 8), 30);
        assert_eq!(moore_bound(3, 12), 126);
        for g in 3..20 {
            assert_eq!(moore_bound(2, g), g as u128);
        }
        assert_eq!(moore_bound(5, 3), 6);
        assert_eq!(moore_bound(5, 4), 10);
    }

    #[test]
    fn existence_lemma() {
        assert!(moore_exists(7, 5).exists());
        assert_eq!(moore_exists(4, 5).status, Existence::DoesNotExist);
        assert!(moore_exists(5, 6).exists());
        let v = moore_exists(57, 5);
        assert!(!v.exists() && v.formula_ok());
        assert_eq!(moore_exists(3, 7).status, Existence::DoesNotExist);
        assert_eq!(moore_exists(7, 6).status, Existence::DoesNotExist); // order 6
        assert_eq!(moore_exists(11, 6).status, Existence::DoesNotExist); // order 10
        assert_eq!(moore_exists(13, 6).status, Existence::Unknown); // order 12
        assert!(moore_exists(10, 8).exists()); // order 9
        assert!(moore_exists(2, 3).exists());
        assert_eq!(moore_exists(3, 10).status, Existence::DoesNotExist);
    }

    #[test]
    fn family_specs_round_trip() {
        for s in [
            "cycle:7",
            "complete:4",
            "complete-bipartite:3",
            "petersen",
            "hoffman-singleton",
            "pg2:5",
            "tutte-coxeter",
            "tutte-12cage",
        ] {
            assert_eq!(s.parse::<CageFamily>().unwrap().to_string(), s);
        }
        for bad in ["", "petersen:3", "cycle", "cycle:x", "pg2:3:4", "heawood"] {
            assert!(bad.parse::<CageFamily>().is_err(), "{bad}");
        }
    }

    #[test]
    fn constructions_validate() {
        for fam in [
            CageFamily::Petersen,
            CageFamily::HoffmanSingleton,
            CageFamily::Pg2(2),
            CageFamily::Pg2(3),
            CageFamily::TutteCoxeter,
            CageFamily::Tutte12Cage,
            CageFamily::Cycle(7),
            CageFamily::Complete(5),
            CageFamily::CompleteBipartite(4),
        ] {
            let g = construct(fam).unwrap_or_else(|e| panic!("{fam}: {e}"));
            let (k, girth) = fam.params();
            assert_eq!(g.vertex_count() as u128, moore_bound(k, girth));
            let arr = dr_intersection_array(&g).unwrap().unwrap();
            assert_eq!(arr, IntersectionArray::moore(k, girth), "{fam}");
        }
    }

    #[test]
    fn pg2_is_bipartite_of_expected_size() {
        for q in [2, 3, 5] {
            let g = pg2_incidence(q).unwrap();
            assert_eq!(g.vertex_count() as u64, 2 * (q * q + q + 1));
            assert!(g.is_bipartite());
        }
        assert!(matches!(pg2_incidence(4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn family_lookup() {
        assert_eq!(CageFamily::for_params(4, 6).unwrap(), CageFamily::Pg2(3));
        assert_eq!(CageFamily::for_params(2, 9).unwrap(), CageFamily::Cycle(9));
        assert!(matches!(
            CageFamily::for_params(57, 5),
            Err(Error::NotConstructible { .. })
        ));
        assert!(matches!(
            CageFamily::for_params(5, 6),
            Err(Error::NotConstructible { .. })
        ));
        assert!(matches!(CageFamily::for_params(3, 7), Err(Error::NotMoore { .. })));
    }

    #[test]
    fn corrupted_data_is_rejected() {
        let dir = std::env::temp_dir().join(format!("cage-data-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let mut text = TUTTE_12CAGE_DATA.replace("126 189", "126 188");
        let last = text.trim_end().rfind('\n').unwrap();
        text.truncate(last + 1);
        std::fs::write(dir.join(TUTTE_12CAGE_FILE), text).unwrap();
        let err = construct_from(CageFamily::Tutte12Cage, Some(&dir)).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
