//! Distance-regular and distance-biregular structure, transmissions, and
//! quotient matrices of distance matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::scalar::rat;
use crate::spectra::char_poly;
use crate::surd::QuadSurd;
use crate::{IntMatrix, RatMatrix};

/// `{b_0, …, b_{d-1}; c_1, …, c_d}` as seen from one vertex (or from every
/// vertex, for a distance-regular graph).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.len() != c.len() || b.is_empty() {
            return Err(Error::Formula(format!(
                "intersection array needs equal nonempty b/c lists, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        if c[0] != 1 {
            return Err(Error::Formula(format!("c_1 must be 1, got {}", c[0])));
        }
        Ok(Self { b, c })
    }

    /// Array of a minimal `(k,g)`-cage:
    /// `{k, k-1, …, k-1; 1, …, 1, c_d}` with `c_d = k` for even `g`.
    pub fn moore(k: u64, g: u64) -> Self {
        let d = (g / 2) as usize;
        let mut b = vec![k.saturating_sub(1); d];
        b[0] = k;
        let mut c = vec![1; d];
        if g % 2 == 0 {
            c[d - 1] = k;
        }
        Self { b, c }
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn c(&self) -> &[u64] {
        &self.c
    }

    /// `b_i`, zero for `i ≥ d`.
    pub fn b_at(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, zero for `i = 0` and `i > d`.
    pub fn c_at(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn degree(&self) -> u64 {
        self.b[0]
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// `a_i = k - b_i - c_i`; `None` if negative.
    pub fn a_at(&self, i: usize) -> Option<u64> {
        self.degree().checked_sub(self.b_at(i) + self.c_at(i))
    }

    /// Shell sizes `k_0 = 1`, `k_{i+1} = k_i b_i / c_{i+1}`.
    pub fn shell_sizes(&self) -> Result<Vec<u64>> {
        let mut sizes = vec![1u64];
        for i in 0..self.diameter() {
            let num = sizes[i] * self.b[i];
            let den = self.c[i];
            if den == 0 || num % den != 0 {
                return Err(Error::Formula(format!(
                    "k_{} = {num}/{den} is not an integer",
                    i + 1
                )));
            }
            sizes.push(num / den);
        }
        Ok(sizes)
    }

    /// `Σ i·k_i`.
    pub fn transmission(&self) -> Result<u64> {
        Ok(self
            .shell_sizes()?
            .iter()
            .enumerate()
            .map(|(i, &k)| i as u64 * k)
            .sum())
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{}; {}}}", join(&self.b), join(&self.c))
    }
}

/// Intersection array seen from `u`, if the counts are constant on every
/// distance shell of `u`.
pub fn vertex_array(g: &Graph, d: &IntMatrix, u: usize) -> Option<IntersectionArray> {
    let n = g.vertex_count();
    let ecc = (0..n).map(|y| d[(u, y)]).max().unwrap_or(0) as usize;
    if ecc == 0 {
        return None;
    }
    let mut b: Vec<Option<u64>> = vec![None; ecc];
    let mut c: Vec<Option<u64>> = vec![None; ecc];
    for y in 0..n {
        let i = d[(u, y)] as usize;
        let (mut back, mut fwd) = (0u64, 0u64);
        for &z in g.neighbors(y) {
            let dz = d[(u, z)] as usize;
            if dz + 1 == i {
                back += 1;
            } else if dz == i + 1 {
                fwd += 1;
            }
        }
        if i < ecc && *b[i].get_or_insert(fwd) != fwd {
            return None;
        }
        if i > 0 && *c[i - 1].get_or_insert(back) != back {
            return None;
        }
    }
    let b = b.into_iter().collect::<Option<Vec<_>>>()?;
    let c = c.into_iter().collect::<Option<Vec<_>>>()?;
    IntersectionArray::new(b, c).ok()
}

/// The common intersection array, if `g` is distance-regular.
pub fn dr_intersection_array(g: &Graph) -> Result<Option<IntersectionArray>> {
    let d = g.distance_matrix()?;
    if g.regularity().is_none() || g.vertex_count() < 2 {
        return Ok(None);
    }
    let first = match vertex_array(g, &d, 0) {
        Some(a) => a,
        None => return Ok(None),
    };
    for u in 1..g.vertex_count() {
        if vertex_array(g, &d, u).as_ref() != Some(&first) {
            return Ok(None);
        }
    }
    Ok(Some(first))
}

/// Per-part arrays of a distance-biregular graph. `part1` contains vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DbrArrays {
    pub part1: IntersectionArray,
    pub part2: IntersectionArray,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

impl DbrArrays {
    /// `l_i` for the first part (`l_{i+1} f_{i+1} = l_i e_i`).
    pub fn shell_sizes1(&self) -> Result<Vec<u64>> {
        self.part1.shell_sizes()
    }

    /// `l'_i` for the second part.
    pub fn shell_sizes2(&self) -> Result<Vec<u64>> {
        self.part2.shell_sizes()
    }
}

pub fn dbr_arrays(g: &Graph) -> Result<Option<DbrArrays>> {
    let d = g.distance_matrix()?;
    let Some((v1, v2)) = g.bipartition() else {
        return Ok(None);
    };
    if v2.is_empty() {
        return Ok(None);
    }
    let common = |part: &[usize]| -> Option<IntersectionArray> {
        let first = vertex_array(g, &d, part[0])?;
        part[1..]
            .iter()
            .all(|&u| vertex_array(g, &d, u).as_ref() == Some(&first))
            .then_some(first)
    };
    let (Some(part1), Some(part2)) = (common(&v1), common(&v2)) else {
        return Ok(None);
    };
    Ok(Some(DbrArrays { part1, part2, v1, v2 }))
}

pub fn transmission(d: &IntMatrix, v: usize) -> i64 {
    d.row(v).iter().sum()
}

/// `Some(p)` iff every vertex has transmission `p`.
pub fn is_transmission_regular(g: &Graph) -> Result<Option<i64>> {
    let d = g.distance_matrix()?;
    let sums = d.row_sums();
    let p = sums.first().copied().unwrap_or(0);
    Ok(sums.iter().all(|&s| s == p).then_some(p))
}

/// Block-average row sums of a matrix under a vertex partition.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    pub q: RatMatrix,
    pub partition: Vec<Vec<usize>>,
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn parts(&self) -> usize {
        self.q.rows()
    }

    /// Integer entries, if every entry is integral.
    pub fn to_integer(&self) -> Option<Vec<Vec<BigInt>>> {
        (0..self.parts())
            .map(|i| {
                (0..self.parts())
                    .map(|j| {
                        let v = &self.q[(i, j)];
                        v.is_integer().then(|| v.to_integer())
                    })
                    .collect()
            })
            .collect()
    }

    /// Integer entries as `i64`, for reporting.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.to_integer().and_then(|rows| {
            rows.into_iter()
                .map(|r| r.iter().map(ToPrimitive::to_i64).collect())
                .collect()
        })
    }

    pub fn char_poly(&self) -> Polynomial<BigRational> {
        char_poly(&self.q).expect("quotient matrices are square")
    }

    /// Larger root of a 2×2 quotient's characteristic polynomial.
    pub fn larger_root(&self) -> Result<QuadSurd> {
        if self.parts() != 2 {
            return Err(Error::Formula("larger_root needs a 2x2 quotient".into()));
        }
        let t = &self.q[(0, 0)] + &self.q[(1, 1)];
        let det = &self.q[(0, 0)] * &self.q[(1, 1)] - &self.q[(0, 1)] * &self.q[(1, 0)];
        let disc = &t * &t - det * rat(4);
        let half = BigRational::new(1.into(), 2.into());
        let root = QuadSurd::sqrt(&disc)?.scale(&half);
        QuadSurd::rational(t * half).checked_add(&root)
    }
}

/// Quotient of `m` under `partition`; `equitable` is exact.
pub fn quotient_matrix(m: &IntMatrix, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = m.rows();
    let mut seen = vec![false; n];
    for part in partition {
        if part.is_empty() {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        for &v in part {
            if v >= n {
                return Err(Error::InvalidPartition(format!("index {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPartition(format!("index {v} repeated")));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidPartition(format!("index {v} not covered")));
    }
    let t = partition.len();
    let mut q = RatMatrix::zeros(t, t);
    let mut equitable = true;
    for (i, rows) in partition.iter().enumerate() {
        for (j, cols) in partition.iter().enumerate() {
            let sums: Vec<i64> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m[(r, c)]).sum())
                .collect();
            equitable &= sums.iter().all(|&s| s == sums[0]);
            let total: i64 = sums.iter().sum();
            q[(i, j)] = BigRational::new(BigInt::from(total), BigInt::from(rows.len()));
        }
    }
    Ok(QuotientMatrix {
        q,
        partition: partition.to_vec(),
        equitable,
    })
}

/// The 2×2 distance quotient of a DBR graph, computed from shell sizes only:
/// same-part distances are the even shells, cross-part distances the odd ones.
pub fn dbr_quotient_from_arrays(arrays: &DbrArrays) -> Result<QuotientMatrix> {
    let split = |sizes: &[u64]| -> (u64, u64) {
        sizes.iter().enumerate().fold((0, 0), |(even, odd), (i, &l)| {
            if i % 2 == 0 {
                (even + i as u64 * l, odd)
            } else {
                (even, odd + i as u64 * l)
            }
        })
    };
    let (q11, q12) = split(&arrays.shell_sizes1()?);
    let (q22, q21) = split(&arrays.shell_sizes2()?);
    let mut q = RatMatrix::zeros(2, 2);
    for (slot, v) in [((0, 0), q11), ((0, 1), q12), ((1, 0), q21), ((1, 1), q22)] {
        q[slot] = rat(v as i64);
    }
    Ok(QuotientMatrix {
        q,
        partition: vec![arrays.v1.clone(), arrays.v2.clone()],
        equitable: true,
    })
}
