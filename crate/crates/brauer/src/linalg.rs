//! Exact sparse linear algebra over ℚ.
//!
//! Elimination first runs on checked `Ratio<i64>` and restarts on
//! `BigRational` if any intermediate overflows, so results are always exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

/// Sparse row: `(column, coefficient)` pairs, any order, no repeats needed.
pub type SparseRow = Vec<(usize, i64)>;

trait Scalar: Clone + PartialEq + Zero + One + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn sub_c(&self, o: &Self) -> Option<Self>;
    fn mul_c(&self, o: &Self) -> Option<Self>;
    fn div_c(&self, o: &Self) -> Option<Self>;
    fn to_big(&self) -> BigRational;
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div_c(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_c(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn to_big(&self) -> BigRational {
        self.clone()
    }
}

/// Row echelon form held as pivot column -> normalised row (pivot coefficient 1).
struct Echelon<T> {
    pivots: BTreeMap<usize, BTreeMap<usize, T>>,
}

impl<T: Scalar> Echelon<T> {
    fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    /// Reduce and insert; returns `None` on overflow, `Some(true)` if the
    /// row was independent.
    fn insert(&mut self, row: &[(usize, i64)]) -> Option<bool> {
        let mut r: BTreeMap<usize, T> = BTreeMap::new();
        for &(c, v) in row {
            if v == 0 {
                continue;
            }
            let e = r.entry(c).or_insert_with(T::zero);
            *e = e.sub_c(&T::from_i64(-v))?;
            if e.is_zero() {
                r.remove(&c);
            }
        }
        loop {
            let Some((&lead, coef)) = r.iter().next() else { return Some(false) };
            let coef = coef.clone();
            match self.pivots.get(&lead) {
                Some(p) => {
                    for (c, v) in p {
                        let e = r.entry(*c).or_insert_with(T::zero);
                        *e = e.sub_c(&coef.mul_c(v)?)?;
                        if e.is_zero() {
                            r.remove(c);
                        }
                    }
                }
                None => {
                    let mut norm = BTreeMap::new();
                    for (c, v) in r {
                        norm.insert(c, v.div_c(&coef)?);
                    }
                    self.pivots.insert(lead, norm);
                    return Some(true);
                }
            }
        }
    }

    /// Back-substitute to reduced row echelon form.
    fn reduce(&mut self) -> Option<()> {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &pc in &cols {
            let prow = self.pivots[&pc].clone();
            for (&oc, orow) in self.pivots.iter_mut() {
                if oc >= pc {
                    continue;
                }
                if let Some(f) = orow.get(&pc).cloned() {
                    for (c, v) in &prow {
                        let e = orow.entry(*c).or_insert_with(T::zero);
                        *e = e.sub_c(&f.mul_c(v)?)?;
                        if e.is_zero() {
                            orow.remove(c);
                        }
                    }
                }
            }
        }
        Some(())
    }
}

fn rank_in<T: Scalar>(rows: &[SparseRow]) -> Option<usize> {
    let mut ech = Echelon::<T>::new();
    let mut r = 0;
    for row in rows {
        if ech.insert(row)? {
            r += 1;
        }
    }
    Some(r)
}

/// Rank of the matrix with the given sparse integer rows.
pub fn rank(rows: &[SparseRow]) -> usize {
    rank_in::<Ratio<i64>>(rows).unwrap_or_else(|| rank_in::<BigRational>(rows).expect("big rationals never overflow"))
}

/// Rank of a dense integer matrix.
pub fn rank_dense(m: &[Vec<i64>]) -> usize {
    rank(&dense_to_sparse(m))
}

pub fn dense_to_sparse(m: &[Vec<i64>]) -> Vec<SparseRow> {
    m.iter()
        .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c, *v)).collect())
        .collect()
}

/// Dimension of `{x : A x = 0}` for `A` with `ncols` columns.
pub fn nullity(ncols: usize, rows: &[SparseRow]) -> usize {
    ncols - rank(rows)
}

fn nullspace_in<T: Scalar>(ncols: usize, rows: &[SparseRow]) -> Option<Vec<Vec<BigRational>>> {
    let mut ech = Echelon::<T>::new();
    for row in rows {
        ech.insert(row)?;
    }
    ech.reduce()?;
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !ech.pivots.contains_key(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (&pc, prow) in &ech.pivots {
            if let Some(x) = prow.get(&free) {
                v[pc] = -x.to_big();
            }
        }
        basis.push(v);
    }
    Some(basis)
}

/// A basis of the nullspace, one dense vector per free column.
pub fn nullspace(ncols: usize, rows: &[SparseRow]) -> Vec<Vec<BigRational>> {
    nullspace_in::<Ratio<i64>>(ncols, rows)
        .unwrap_or_else(|| nullspace_in::<BigRational>(ncols, rows).expect("big rationals never overflow"))
}

/// Rank of a dense rational matrix.
pub fn rank_rational(m: &[Vec<BigRational>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> = m.to_vec();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let piv = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &piv;
                for k in c..ncols {
                    let d = &f * &rows[rank][k];
                    rows[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Product of dense integer matrices.
pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![0i64; n];
            for (k, &x) in row.iter().enumerate() {
                if x != 0 {
                    for (j, &y) in b[k].iter().enumerate() {
                        out[j] += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

/// True if every entry is zero.
pub fn is_zero(m: &[Vec<i64>]) -> bool {
    m.iter().all(|r| r.iter().all(|v| *v == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_dependent_rows() {
        assert_eq!(rank_dense(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank_dense(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_dense(&[vec![0, 0]]), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = dense_to_sparse(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let ns = nullspace(3, &rows);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(v[0], v[1]);
        assert_eq!(v[1], v[2]);
    }

    #[test]
    fn overflow_falls_back_to_big() {
        let big = i64::MAX / 3;
        let rows = vec![vec![(0, big), (1, 7)], vec![(0, 7), (1, big)], vec![(0, 3), (1, big - 1)]];
        assert_eq!(rank(&rows), 2);
    }
}
