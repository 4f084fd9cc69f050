//! Exact linear algebra over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Incremental row reduction of an augmented system `M x = b`.
///
/// Rows are reduced against the pivots seen so far as they arrive, so only
/// independent rows are stored.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    /// (pivot column, row normalized so the pivot entry is 1, rhs)
    rows: Vec<(usize, Vec<BigRational>, BigRational)>,
    inconsistent: bool,
    seen: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome {
    Unique(Vec<BigRational>),
    Inconsistent,
    Underdetermined { kernel_dim: usize },
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, rows: Vec::new(), inconsistent: false, seen: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows_seen(&self) -> usize {
        self.seen
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Adds one equation; returns true when it was independent of the earlier ones.
    pub fn add_row(&mut self, mut row: Vec<BigRational>, mut rhs: BigRational) -> bool {
        assert_eq!(row.len(), self.ncols);
        self.seen += 1;
        for (pc, prow, prhs) in &self.rows {
            let f = row[*pc].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            rhs -= &f * prhs;
        }
        match row.iter().position(|x| !x.is_zero()) {
            None => {
                if !rhs.is_zero() {
                    self.inconsistent = true;
                }
                false
            }
            Some(pc) => {
                let inv = row[pc].recip();
                for x in row.iter_mut() {
                    *x *= &inv;
                }
                rhs *= &inv;
                self.rows.push((pc, row, rhs));
                true
            }
        }
    }

    pub fn solve(&self) -> SolveOutcome {
        if self.inconsistent {
            return SolveOutcome::Inconsistent;
        }
        if self.rows.len() < self.ncols {
            return SolveOutcome::Underdetermined { kernel_dim: self.ncols - self.rows.len() };
        }
        // back substitution in reverse insertion order: each later row is
        // already reduced against earlier pivots, not the other way round
        let mut x = vec![BigRational::zero(); self.ncols];
        let mut done = vec![false; self.ncols];
        for (pc, row, rhs) in self.rows.iter().rev() {
            let mut v = rhs.clone();
            for (j, a) in row.iter().enumerate() {
                if j != *pc && !a.is_zero() {
                    debug_assert!(done[j], "column {j} unresolved");
                    v -= a * &x[j];
                }
            }
            x[*pc] = v;
            done[*pc] = true;
        }
        SolveOutcome::Unique(x)
    }
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of the right kernel of `m` (each vector has length `ncols`).
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::arith::int;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn unique_solution() {
        let mut r = RowReducer::new(2);
        assert!(r.add_row(v(&[1, 1]), int(3)));
        assert!(r.add_row(v(&[1, -1]), int(1)));
        assert!(!r.add_row(v(&[2, 0]), int(4)));
        assert_eq!(r.solve(), SolveOutcome::Unique(v(&[2, 1])));
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let mut r = RowReducer::new(2);
        r.add_row(v(&[1, 1]), int(3));
        assert_eq!(r.solve(), SolveOutcome::Underdetermined { kernel_dim: 1 });
        r.add_row(v(&[2, 2]), int(5));
        assert_eq!(r.solve(), SolveOutcome::Inconsistent);
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = nullspace(&[v(&[1, 2, 3])], 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            let dot: BigRational = x.iter().zip(v(&[1, 2, 3])).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }
}
