//! The integer recurrence `a_i^j` behind the shell polynomials, with its
//! `g/h` closed form.

use serde::Serialize;

use crate::error::{Error, Result};

/// `a[i][j]`, `g[i][j]`, `h[i][j]` for `0 ≤ j ≤ ⌊i/2⌋`, `0 ≤ i ≤ d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientTable {
    pub k: i64,
    pub d: usize,
    pub a: Vec<Vec<i64>>,
    pub g: Vec<Vec<i64>>,
    pub h: Vec<Vec<i64>>,
}

impl CoefficientTable {
    /// `a_i^j`, zero outside `0 ≤ j ≤ ⌊i/2⌋`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a.get(i).and_then(|row| row.get(j)).copied().unwrap_or(0)
    }

    /// Re-checks both clauses of the lemma against the recurrence values.
    pub fn check_lemma(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Formula(msg));
        for j in 1..=self.d / 2 {
            if self.a(2 * j, j) != self.k {
                return fail(format!("a_{}^{} = {} != k", 2 * j, j, self.a(2 * j, j)));
            }
            // a_{2j+b}^j = k + a_{2j-1}^{j-1} + … + a_{2j+b-2}^{j-1}
            for i in 2 * j + 1..=self.d {
                let sum: i64 = self.k + (2 * j - 1..=i - 2).map(|m| self.a(m, j - 1)).sum::<i64>();
                if self.a(i, j) != sum {
                    return fail(format!("a_{i}^{j} = {} but the partial sum is {sum}", self.a(i, j)));
                }
            }
        }
        for i in 2..=self.d {
            for j in 1..=i / 2 {
                let closed = self.g[i][j] * self.k - self.h[i][j];
                if self.a(i, j) != closed {
                    return fail(format!(
                        "a_{i}^{j} = {} but g·k - h = {closed}",
                        self.a(i, j)
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Fills the table by the recurrence `a_i^j = a_{i-1}^j + a_{i-2}^{j-1}` and
/// verifies the lemma's closed forms.
pub fn coefficient_table(k: i64, d: usize) -> Result<CoefficientTable> {
    if k < 2 || d < 1 {
        return Err(Error::Formula(format!("coefficient table needs k >= 2, d >= 1 (got {k}, {d})")));
    }
    let mut a: Vec<Vec<i64>> = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut row = vec![if i == 0 { k } else { k - 1 }];
        for j in 1..=i / 2 {
            let prev = a[i - 1].get(j).copied().unwrap_or(0);
            row.push(prev + a[i - 2][j - 1]);
        }
        a.push(row);
    }
    let mut g: Vec<Vec<i64>> = Vec::with_capacity(d + 1);
    let mut h: Vec<Vec<i64>> = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let (mut grow, mut hrow) = (vec![1], vec![1]);
        for j in 1..=i / 2 {
            if j == 1 {
                grow.push(i as i64 - 1);
                hrow.push(i as i64 - 2);
            } else {
                grow.push(1 + (2 * j - 1..=i - 2).map(|m| g[m][j - 1]).sum::<i64>());
                hrow.push((2 * j - 1..=i - 2).map(|m| h[m][j - 1]).sum::<i64>());
            }
        }
        g.push(grow);
        h.push(hrow);
    }
    let table = CoefficientTable { k, d, a, g, h };
    table.check_lemma()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_entries() {
        for k in 2..9 {
            let t = coefficient_table(k, 6).unwrap();
            assert_eq!(t.a(2, 1), k);
            assert_eq!(t.a(3, 1), 2 * k - 1);
            assert_eq!(t.a(4, 1), 3 * k - 2);
            assert_eq!((t.g[4][1], t.h[4][1]), (3, 2));
            assert_eq!(t.a(6, 3), k);
            assert_eq!(t.a(5, 3), 0);
        }
        assert_eq!(coefficient_table(3, 6).unwrap().a(6, 3), 3);
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(coefficient_table(1, 3).is_err());
        assert!(coefficient_table(3, 0).is_err());
    }
}
