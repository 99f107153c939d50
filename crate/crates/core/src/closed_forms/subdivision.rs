//! Distance structure of the subdivision `S(G)` of a minimal cage: the 2×2
//! quotient, its radius, the block form of `D(S(G))`, and closed-form spectra
//! for the `g = 3, 4` families.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::closed_forms::ensure_formula_ok;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{rat, ratio};
use crate::spectra::expand_factored;
use crate::surd::{ExactSpectrum, QuadSurd};
use crate::{IntMatrix, IntPolynomial, RatMatrix};

fn pow(base: i64, e: u64) -> BigRational {
    num_traits::pow(rat(base), e as usize)
}

/// Quotient of `D(S(G))` over the partition {original vertices, edge
/// vertices}. The `S'` sums are present for even `g` only.
#[derive(Clone, Debug, PartialEq)]
pub struct SubdivisionQuotient {
    pub k: u64,
    pub g: u64,
    pub q: RatMatrix,
    pub s1_prime: Option<BigRational>,
    pub s2_prime: Option<BigRational>,
}

/// `S1' = Σ_{i=1}^{d-1} i(k-1)^{i-1}` and `S2' = Σ_{i=1}^{d} (2i-1)(k-1)^{i-1}`
/// as finite sums.
pub fn s_prime_sums(k: u64, d: u64) -> (BigRational, BigRational) {
    let h = k as i64 - 1;
    let s1 = (1..d).fold(BigRational::zero(), |acc, i| acc + rat(i as i64) * pow(h, i - 1));
    let s2 = (1..=d).fold(BigRational::zero(), |acc, i| acc + rat(2 * i as i64 - 1) * pow(h, i - 1));
    (s1, s2)
}

/// Closed forms of the two sums; undefined at `k = 2`.
pub fn s_prime_closed(k: u64, d: u64) -> Option<(BigRational, BigRational)> {
    if k == 2 {
        return None;
    }
    let (ki, di) = (k as i64, d as i64);
    let den = rat((2 - ki) * (2 - ki));
    let s1 = (rat(ki * di - 2 * di - ki + 1) * pow(ki - 1, d - 1) + BigRational::one()) / &den;
    let s2 = (rat(2 * ki * di - 4 * di - ki) * pow(ki - 1, d) + rat(ki)) / &den;
    Some((s1, s2))
}

pub fn subdivision_quotient(k: u64, g: u64) -> Result<SubdivisionQuotient> {
    ensure_formula_ok(k, g)?;
    let kr = rat(k as i64);
    let (entries, s1_prime, s2_prime) = if g % 2 == 0 {
        let d = g / 2;
        let (s1, s2) = s_prime_sums(k, d);
        if let Some((c1, c2)) = s_prime_closed(k, d) {
            if c1 != s1 || c2 != s2 {
                return Err(Error::Formula(format!(
                    "({k},{g}) S' closed forms ({c1}, {c2}) disagree with sums ({s1}, {s2})"
                )));
            }
        }
        let h = k as i64 - 1;
        let two_d = rat(2 * d as i64);
        let entries = [
            rat(2) * &kr * &s1 + &two_d * pow(h, d - 1),
            &kr * &s2,
            rat(2) * &s2,
            rat(4 * h) * &s1 + &two_d * pow(h, d),
        ];
        (entries, Some(s1), Some(s2))
    } else {
        let ki = k as i64;
        let entries = match g {
            3 => [rat(2 * ki), ratio(ki * (3 * ki - 1), 2), rat(3 * ki - 1), rat(2 * ki * (ki - 1))],
            5 => {
                let c = 5 * ki * ki - 4 * ki + 1;
                [rat(2 * ki * (2 * ki - 1)), ratio(ki * c, 2), rat(c), rat((ki - 1) * (3 * ki * ki - ki + 2))]
            }
            _ => {
                return Err(Error::Formula(format!(
                    "no subdivision quotient formula for odd girth {g}"
                )))
            }
        };
        (entries, None, None)
    };
    let [a, b, c, d] = entries;
    Ok(SubdivisionQuotient {
        k,
        g,
        q: RatMatrix::from_rows(vec![vec![a, b], vec![c, d]]),
        s1_prime,
        s2_prime,
    })
}

impl SubdivisionQuotient {
    /// Larger eigenvalue of the 2×2 quotient.
    pub fn larger_root(&self) -> Result<QuadSurd> {
        let q = &self.q;
        let t = &q[(0, 0)] + &q[(1, 1)];
        let det = &q[(0, 0)] * &q[(1, 1)] - &q[(0, 1)] * &q[(1, 0)];
        let half = ratio(1, 2);
        let root = QuadSurd::sqrt(&(&t * &t - det * rat(4)))?.scale(&half);
        QuadSurd::rational(t * half).checked_add(&root)
    }
}

/// The printed radius expressions for `S(G)`.
pub fn printed_subdivision_radius(k: u64, g: u64) -> Option<Result<QuadSurd>> {
    let ki = k as i64;
    let half = ratio(1, 2);
    let build = |a: BigRational, radicand: BigRational, scale: &BigRational| -> Result<QuadSurd> {
        QuadSurd::rational(a).checked_add(&QuadSurd::sqrt(&radicand)?).map(|s| s.scale(scale))
    };
    let one = BigRational::one();
    match g {
        3 => Some(build(
            rat(2 * ki * ki),
            rat(2 * ki * (2 * ki + 1) * (ki * ki + 1)),
            &half,
        )),
        5 => {
            let radicand = 9 * ki.pow(6) + 2 * ki.pow(5) + 14 * ki.pow(4) - 40 * ki.pow(3) + 41 * ki * ki
                - 18 * ki
                + 4;
            Some(build(rat(3 * ki.pow(3) + ki - 2), rat(radicand), &half))
        }
        g if g % 2 == 0 => {
            let d = g / 2;
            let (s1, s2) = s_prime_sums(k, d);
            let di = d as i64;
            let km2 = rat((ki - 2) * (ki - 2));
            let hd1 = pow(ki - 1, d - 1);
            let a = rat(3 * ki - 2) * &s1 + rat(di * ki) * &hd1;
            let radicand = &km2 * &s1 * &s1
                + rat(2 * ki) * &s2 * &s2
                + rat(2 * di) * &km2 * &hd1 * &s1
                + rat(di * di) * &km2 * &hd1 * &hd1;
            Some(build(a, radicand, &one))
        }
        _ => None,
    }
}

/// Spectral radius of `D(S(G))` for a minimal `(k,g)`-cage, checked against
/// the printed expression.
pub fn subdivision_radius(k: u64, g: u64) -> Result<QuadSurd> {
    let root = subdivision_quotient(k, g)?.larger_root()?;
    if let Some(printed) = printed_subdivision_radius(k, g) {
        let printed = printed?;
        if printed != root {
            return Err(Error::Formula(format!(
                "({k},{g}) printed radius {printed} disagrees with quotient root {root}"
            )));
        }
    }
    Ok(root)
}

/// Distance spectrum of `S(K_{k+1})`.
pub fn sub_complete_spectrum(k: u64) -> Result<ExactSpectrum> {
    let ki = k as i64;
    let k2 = rat(ki * ki);
    let root = QuadSurd::sqrt(&ratio(ki * (ki * ki + 1) * (2 * ki + 1), 2))?;
    let c = (k * (k + 1) / 2) as usize;
    Ok(ExactSpectrum::new([
        (QuadSurd::rational(k2.clone()).checked_add(&root)?, 1),
        (QuadSurd::rational(k2).checked_sub(&root)?, 1),
        (QuadSurd::int(-2 * ki), k as usize),
        (QuadSurd::int(0), c - 1),
    ]))
}

/// Distance spectrum of `S(K_{k,k})`.
pub fn sub_complete_bipartite_spectrum(k: u64) -> Result<ExactSpectrum> {
    let ki = k as i64;
    let top = QuadSurd::sqrt(&rat(4 * ki.pow(4) - 2 * ki.pow(3) + 9 * ki * ki - 12 * ki + 4))?;
    let low = QuadSurd::sqrt(&rat(ki * ki + 4))?;
    let a = QuadSurd::int(2 * ki * ki + ki - 2);
    let b = QuadSurd::int(-(ki + 2));
    let m = 2 * k as usize - 2;
    Ok(ExactSpectrum::new([
        (a.checked_add(&top)?, 1),
        (a.checked_sub(&top)?, 1),
        (QuadSurd::int(2 * ki - 4), 1),
        (QuadSurd::int(0), ((k - 1) * (k - 1)) as usize),
        (b.checked_add(&low)?, m),
        (b.checked_sub(&low)?, m),
    ]))
}

/// Girth parity of the base graph; selects whether the `E` correction enters
/// the block form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_girth(g: u64) -> Self {
        if g % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `E[v][j] = 1` iff `v` is equidistant from both ends of `edges()[j]`.
pub fn equidistance_matrix(graph: &Graph, d: &IntMatrix) -> IntMatrix {
    let edges = graph.edges();
    IntMatrix::from_fn(graph.vertex_count(), edges.len(), |v, j| {
        let (a, b) = edges[j];
        i64::from(d[(v, a)] == d[(v, b)])
    })
}

/// Indicator of vertex/edge pairs realising the largest vertex-to-edge
/// distance in `S(G)`, read off the BFS distance matrix of `S(G)`.
pub fn max_distance_indicator(graph: &Graph) -> Result<IntMatrix> {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    let ds = graph.subdivision().distance_matrix()?;
    let top = (0..n)
        .flat_map(|v| (0..m).map(move |j| (v, j)))
        .map(|(v, j)| ds[(v, n + j)])
        .max()
        .unwrap_or(0);
    Ok(IntMatrix::from_fn(n, m, |v, j| i64::from(ds[(v, n + j)] == top)))
}

/// `D(S(G)) = [[2D, DR + E], [RᵀD + Eᵀ, 2D_L]]`, with `E` only for odd girth.
pub fn subdivision_distance_blocks(graph: &Graph, parity: Parity) -> Result<IntMatrix> {
    let d = graph.distance_matrix()?;
    let r = graph.incidence_matrix();
    let dl = graph.line_graph().distance_matrix()?;
    let mut dr = d.matmul(&r);
    if parity == Parity::Odd {
        dr = &dr + &equidistance_matrix(graph, &d);
    }
    let (n, m) = (graph.vertex_count(), graph.edge_count());
    let mut out = IntMatrix::zeros(n + m, n + m);
    out.set_block(0, 0, &d.scale(&2));
    out.set_block(0, n, &dr);
    out.set_block(n, 0, &dr.transpose());
    out.set_block(n, n, &dl.scale(&2));
    Ok(out)
}

/// The block form with the `½` factor on the `DR` blocks, as printed.
pub fn printed_half_blocks(graph: &Graph, parity: Parity) -> Result<RatMatrix> {
    let d = graph.distance_matrix()?;
    let r = graph.incidence_matrix();
    let dl = graph.line_graph().distance_matrix()?;
    let to_rat = |m: &IntMatrix| m.map(|&v| rat(v));
    let mut dr = to_rat(&d.matmul(&r)).scale(&ratio(1, 2));
    if parity == Parity::Odd {
        dr = &dr + &to_rat(&equidistance_matrix(graph, &d));
    }
    let (n, m) = (graph.vertex_count(), graph.edge_count());
    let mut out = RatMatrix::zeros(n + m, n + m);
    out.set_block(0, 0, &to_rat(&d.scale(&2)));
    out.set_block(0, n, &dr);
    out.set_block(n, 0, &dr.transpose());
    out.set_block(n, n, &to_rat(&dl.scale(&2)));
    Ok(out)
}

/// Printed factored characteristic polynomials of `D(S(G))` for the
/// Petersen (`(3,5)`) and Heawood (`(3,6)`) cages.
pub fn printed_subdivision_char_poly(k: u64, g: u64) -> Option<IntPolynomial> {
    let p = IntPolynomial::from_ints;
    let factors = match (k, g) {
        (3, 5) => vec![
            (p(&[-174, -82, 1]), 1),
            (p(&[-4, 16, 1]), 5),
            (p(&[-4, -2, 1]), 4),
            (p(&[2, 1]), 5),
        ],
        (3, 6) => vec![
            (p(&[378, -142, 1]), 1),
            (p(&[2, 1]), 8),
            (p(&[6, 1]), 1),
            (p(&[112, -80, -60, 20, 1]), 6),
        ],
        _ => return None,
    };
    Some(expand_factored(&factors))
}
