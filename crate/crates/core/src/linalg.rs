//! Dense exact matrices with canonical row forms and kernels.
//!
//! Over `Z` the canonical row form is the Hermite normal form; over `Z/m` it
//! is the Howell form, which (unlike an echelon form) represents a row module
//! uniquely even when the ring has zero divisors. Both forms drop zero rows,
//! so two generating sets span the same module iff their forms are equal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{xgcd, Integers, Ring, ZMod};

/// A ring with canonical row forms for finitely generated submodules of `R^c`.
pub trait LinearRing: Ring {
    /// Canonical generating set of the row module of `rows` (each of length `ncols`).
    fn canonical_rows(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize) -> Vec<Vec<Self::Elem>>;

    /// Canonical generating set of `{v : rows · v = 0}` for a matrix with `ncols` columns.
    fn kernel_rows(&self, rows: &[Vec<Self::Elem>], ncols: usize) -> Vec<Vec<Self::Elem>> {
        // Row-reduce [Aᵀ | I]; rows with vanishing left block carry the kernel.
        let nrows = rows.len();
        let aug: Vec<Vec<Self::Elem>> = (0..ncols)
            .map(|j| {
                let mut row = Vec::with_capacity(nrows + ncols);
                row.extend(rows.iter().map(|r| r[j].clone()));
                row.extend((0..ncols).map(|i| if i == j { self.one() } else { self.zero() }));
                row
            })
            .collect();
        let form = self.canonical_rows(aug, nrows + ncols);
        let kernel = form
            .into_iter()
            .filter(|row| row[..nrows].iter().all(|x| self.is_zero(x)))
            .map(|row| row[nrows..].to_vec())
            .collect();
        self.canonical_rows(kernel, ncols)
    }
}

impl LinearRing for Integers {
    fn canonical_rows(&self, rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
        hermite_form(rows, ncols)
    }
}

impl LinearRing for ZMod {
    fn canonical_rows(&self, rows: Vec<Vec<u64>>, ncols: usize) -> Vec<Vec<u64>> {
        howell_form(self, rows, ncols)
    }
}

/// Row-style Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, zero rows removed.
pub fn hermite_form(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    let mut prow = 0;
    for col in 0..ncols {
        if prow == a.len() {
            break;
        }
        loop {
            // Smallest nonzero entry in this column becomes the pivot candidate.
            let best = (prow..a.len())
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(best) = best else { break };
            a.swap(prow, best);
            let mut clean = true;
            for i in prow + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[prow][col]);
                let (top, rest) = a.split_at_mut(prow + 1);
                sub_multiple(&mut rest[i - prow - 1], &top[prow], &q, col);
                if !rest[i - prow - 1][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if prow == a.len() || a[prow][col].is_zero() {
            continue;
        }
        if a[prow][col].is_negative() {
            for x in a[prow][col..].iter_mut() {
                *x = -&*x;
            }
        }
        let (top, rest) = a.split_at_mut(prow);
        let pivot = &rest[0];
        for row in top.iter_mut() {
            let q = row[col].div_floor(&pivot[col]);
            if !q.is_zero() {
                sub_multiple(row, pivot, &q, col);
            }
        }
        prow += 1;
    }
    a.truncate(prow);
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    a
}

fn sub_multiple(row: &mut [BigInt], pivot: &[BigInt], q: &BigInt, from: usize) {
    for (x, p) in row[from..].iter_mut().zip(&pivot[from..]) {
        if !p.is_zero() {
            *x -= q * p;
        }
    }
}

/// Howell form over `Z/m`.
///
/// Echelon form with every pivot a divisor of `m`, entries above a pivot
/// reduced below it, and for each pivot row the annihilator multiple
/// `(m / pivot) · row` folded back into the rows below, so that the rows with
/// leading zeros in the first `j` columns generate every module element with
/// that property.
pub fn howell_form(ring: &ZMod, rows: Vec<Vec<u64>>, ncols: usize) -> Vec<Vec<u64>> {
    let m = ring.modulus();
    let mut work: Vec<Vec<u64>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    for col in 0..ncols {
        if work.is_empty() {
            break;
        }
        let mut pivot: Option<Vec<u64>> = None;
        let mut rest = Vec::with_capacity(work.len() + 1);
        for mut row in work.drain(..) {
            if row[col] == 0 {
                rest.push(row);
                continue;
            }
            match pivot.as_mut() {
                None => pivot = Some(row),
                Some(p) => {
                    let (a, b) = (p[col] as i64, row[col] as i64);
                    let (g, s, t) = xgcd(a, b);
                    let s = ring.reduce_i64(s);
                    let t = ring.reduce_i64(t);
                    let u = ring.reduce_i64(-(b / g));
                    let v = ring.reduce_i64(a / g);
                    for c in col..ncols {
                        let (pc, rc) = (p[c], row[c]);
                        p[c] = (s * pc % m + t * rc % m) % m;
                        row[c] = (u * pc % m + v * rc % m) % m;
                    }
                    debug_assert_eq!(row[col], 0);
                    if row.iter().any(|&x| x != 0) {
                        rest.push(row);
                    }
                }
            }
        }
        if let Some(mut p) = pivot {
            let unit = ring.normalizing_unit(p[col]);
            if unit != 1 {
                for x in p[col..].iter_mut() {
                    *x = ring.mul(x, &unit);
                }
            }
            let g = p[col];
            let factor = m / g;
            if factor != m {
                let ann: Vec<u64> = p.iter().map(|x| ring.mul(x, &factor)).collect();
                if ann.iter().any(|&x| x != 0) {
                    rest.push(ann);
                }
            }
            for row in out.iter_mut() {
                let q = row[col] / g;
                if q != 0 {
                    let q = ring.neg(&q);
                    for c in col..ncols {
                        row[c] = (row[c] + q * p[c] % m) % m;
                    }
                }
            }
            out.push(p);
        }
        work = rest;
    }
    out
}

/// Dense row-major matrix over a base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

impl<R: LinearRing> ExactMatrix<R> {
    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let entries = vec![ring.zero(); rows * cols];
        ExactMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = m.ring.one();
        }
        m
    }

    pub fn from_rows(ring: R, cols: usize, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let nrows = rows.len();
        Ok(ExactMatrix {
            ring,
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(ring: R, rows: usize, columns: &[Vec<R::Elem>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(ring, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in a matrix with {rows} rows",
                    c.len()
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m.entries[i * cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<R::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == self.ring.one()
                    } else {
                        self.ring.is_zero(x)
                    }
                })
            })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = &self.ring;
        let mut out = Self::zeros(r.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !r.is_zero(b) {
                        r.add_mul_assign(&mut out.entries[i * other.cols + j], a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let r = &self.ring;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = r.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    r.add_mul_assign(&mut acc, a, b);
                }
                acc
            })
            .collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix difference".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect();
        Ok(ExactMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ring.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(ring: R, cols: usize, blocks: &[Self]) -> Result<Self> {
        let mut rows = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch("vstack column count".into()));
            }
            rows.extend(b.to_rows());
        }
        Self::from_rows(ring, cols, rows)
    }

    /// Hermite form over `Z`, Howell form over `Z/m`.
    pub fn canonical_row_form(&self) -> Self {
        let rows = self.ring.canonical_rows(self.to_rows(), self.cols);
        Self::from_rows(self.ring.clone(), self.cols, rows).expect("row lengths preserved")
    }

    /// Canonical generating set of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<R::Elem>> {
        self.ring.kernel_rows(&self.to_rows(), self.cols)
    }
}

/// Whether two lists of vectors span the same submodule.
pub fn module_equal<R: LinearRing>(
    ring: &R,
    a: &[Vec<R::Elem>],
    b: &[Vec<R::Elem>],
) -> Result<bool> {
    let dim = match a.first().or(b.first()) {
        Some(v) => v.len(),
        None => return Ok(true),
    };
    if let Some(bad) = a.iter().chain(b).find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} among vectors of length {dim}",
            bad.len()
        )));
    }
    Ok(ring.canonical_rows(a.to_vec(), dim) == ring.canonical_rows(b.to_vec(), dim))
}

/// Whether `v` lies in the span of `gens`.
pub fn span_contains<R: LinearRing>(ring: &R, gens: &[Vec<R::Elem>], v: &[R::Elem]) -> bool {
    let dim = v.len();
    let base = ring.canonical_rows(gens.to_vec(), dim);
    let mut with = base.clone();
    with.push(v.to_vec());
    ring.canonical_rows(with, dim) == base
}

/// Integer determinant by Laplace expansion along the first row.
pub fn laplace_determinant<T>(m: &[Vec<T>]) -> T
where
    T: Clone + Zero + num_traits::One + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
{
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let cols: Vec<usize> = (0..n).collect();
    laplace_rec(m, 0, &cols)
}

fn laplace_rec<T>(m: &[Vec<T>], row: usize, cols: &[usize]) -> T
where
    T: Clone + Zero + num_traits::One + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
{
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = T::zero();
    let mut neg = T::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.clone() * laplace_rec(m, row + 1, &minor);
        if k % 2 == 0 {
            acc = acc + term;
        } else {
            neg = neg + term;
        }
    }
    acc - neg
}

/// Fraction-free Bareiss elimination over the integers.
pub fn bareiss_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zm(m: u64) -> ZMod {
        ZMod::new(m).unwrap()
    }

    /// Every vector in the row span, by enumerating all coefficient tuples.
    fn span_set(m: u64, rows: &[Vec<u64>], dim: usize) -> Vec<Vec<u64>> {
        let mut out = std::collections::BTreeSet::new();
        let k = rows.len();
        let total = (m as usize).pow(k as u32);
        for idx in 0..total {
            let mut c = idx;
            let mut v = vec![0u64; dim];
            for row in rows {
                let coef = (c % m as usize) as u64;
                c /= m as usize;
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + coef * r) % m;
                }
            }
            out.insert(v);
        }
        out.into_iter().collect()
    }

    fn all_vectors(m: u64, dim: usize) -> Vec<Vec<u64>> {
        let total = (m as usize).pow(dim as u32);
        (0..total)
            .map(|mut idx| {
                (0..dim)
                    .map(|_| {
                        let x = (idx % m as usize) as u64;
                        idx /= m as usize;
                        x
                    })
                    .collect()
            })
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    #[test]
    fn identity_is_canonical() {
        let r = zm(6);
        let id = ExactMatrix::identity(r, 4);
        assert_eq!(id.canonical_row_form(), id);
        let idz = ExactMatrix::identity(Integers, 3);
        assert_eq!(idz.canonical_row_form(), idz);
        assert!(id.kernel().is_empty());
        assert!(idz.kernel().is_empty());
    }

    #[test]
    fn single_entry_mod4() {
        let r = zm(4);
        let m = ExactMatrix::from_rows(r, 1, vec![vec![2]]).unwrap();
        assert_eq!(m.canonical_row_form().to_rows(), vec![vec![2]]);
        assert_eq!(m.kernel(), vec![vec![2]]);
    }

    #[test]
    fn howell_of_two_by_two_mod4() {
        let r = zm(4);
        let m = ExactMatrix::from_rows(r, 2, vec![vec![2, 2], vec![0, 2]]).unwrap();
        let h = m.canonical_row_form();
        // Span {(0,0),(2,2),(0,2),(2,0)} = 2·(Z/4)^2.
        assert_eq!(h.to_rows(), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(
            span_set(4, &h.to_rows(), 2),
            span_set(4, &m.to_rows(), 2)
        );
    }

    #[test]
    fn howell_includes_annihilator_rows() {
        // Row (2, 1) over Z/4: 2·(2,1) = (0,2) must appear as its own row.
        let r = zm(4);
        let h = r.canonical_rows(vec![vec![2, 1]], 2);
        assert_eq!(h, vec![vec![2, 1], vec![0, 2]]);
    }

    #[test]
    fn kernel_of_row_mod4_exhaustive() {
        let r = zm(4);
        let m = ExactMatrix::from_rows(r, 2, vec![vec![2, 2]]).unwrap();
        let ker = m.kernel();
        let brute: Vec<Vec<u64>> = all_vectors(4, 2)
            .into_iter()
            .filter(|v| (2 * v[0] + 2 * v[1]) % 4 == 0)
            .collect();
        assert_eq!(span_set(4, &ker, 2), brute);
    }

    #[test]
    fn module_equality_examples() {
        let z = Integers;
        let a = vec![vec![BigInt::from(1), BigInt::from(0)]];
        let b = vec![
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(2), BigInt::from(0)],
        ];
        assert!(module_equal(&z, &a, &b).unwrap());
        let r = zm(4);
        assert!(!module_equal(&r, &[vec![2, 0]], &[vec![1, 0]]).unwrap());
        // span{(1,1),(0,2)} vs span{(1,3)}: (1,3) = (1,1)+(0,2), but (1,1) ∉ span{(1,3)}.
        let lhs = vec![vec![1, 1], vec![0, 2]];
        let rhs = vec![vec![1, 3]];
        let brute = span_set(4, &lhs, 2) == span_set(4, &rhs, 2);
        assert_eq!(module_equal(&r, &lhs, &rhs).unwrap(), brute);
        assert!(!brute);
        assert!(module_equal(&r, &lhs, &[vec![1, 3], vec![0, 2]]).unwrap());
        assert!(module_equal(&r, &[vec![1, 0]], &[vec![1, 0, 0]]).is_err());
    }

    #[test]
    fn hermite_small() {
        let z = Integers;
        let rows = vec![
            vec![BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(6), BigInt::from(9)],
        ];
        let h = z.canonical_rows(rows, 2);
        assert_eq!(h, vec![vec![BigInt::from(2), BigInt::from(3)]]);
        let rows = vec![
            vec![BigInt::from(3), BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(5)],
            vec![BigInt::from(-2), BigInt::from(7)],
        ];
        // The 2x2 minors 15, 23, 10 are coprime, so the rows generate Z^2.
        let h = z.canonical_rows(rows, 2);
        let one = BigInt::from(1);
        assert_eq!(h, vec![vec![one.clone(), BigInt::zero()], vec![BigInt::zero(), one]]);
    }

    #[test]
    fn integer_kernel() {
        let z = Integers;
        let m = ExactMatrix::from_rows(
            z,
            3,
            vec![vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)]],
        )
        .unwrap();
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
        // The kernel lattice is saturated: (−2, 1, 0) and (−3, 0, 1) both lie in it.
        for v in [[-2, 1, 0], [-3, 0, 1]] {
            let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            assert!(span_contains(&z, &ker, &v));
        }
    }

    #[test]
    fn determinants_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 0..7 {
            for _ in 0..20 {
                let m: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect())
                    .collect();
                assert_eq!(laplace_determinant(&m), bareiss_determinant(&m));
            }
        }
    }

    /// Kernel mod m via the integer lattice of [A | m·I], projected and reduced.
    fn lifted_kernel(m: u64, rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
        let nrows = rows.len();
        let lifted: Vec<Vec<BigInt>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
                v.extend((0..nrows).map(|j| BigInt::from(if i == j { m } else { 0 })));
                v
            })
            .collect();
        let ker = Integers.kernel_rows(&lifted, ncols + nrows);
        let r = zm(m);
        let projected = ker
            .into_iter()
            .map(|v| v[..ncols].iter().map(|x| r.from_bigint(x)).collect())
            .collect();
        r.canonical_rows(projected, ncols)
    }

    fn small_matrix() -> impl Strategy<Value = (u64, usize, Vec<Vec<u64>>)> {
        (prop::sample::select(vec![2u64, 3, 4, 6, 8, 9, 12]), 1usize..=3, 1usize..=3).prop_flat_map(
            |(m, r, c)| {
                (
                    Just(m),
                    Just(c),
                    prop::collection::vec(prop::collection::vec(0..m, c), r),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn howell_is_span_preserving_and_idempotent((m, c, rows) in small_matrix()) {
            let r = zm(m);
            let h = r.canonical_rows(rows.clone(), c);
            prop_assert_eq!(r.canonical_rows(h.clone(), c), h.clone());
            if m.pow((rows.len().max(h.len())) as u32) <= 20_000 {
                prop_assert_eq!(span_set(m, &h, c), span_set(m, &rows, c));
            }
        }

        #[test]
        fn howell_is_canonical((m, c, rows) in small_matrix(), shuffle in any::<u64>(), mix in 0u64..12) {
            // A different generating set of the same module: permute rows, add
            // a multiple of one row to another, append a redundant combination.
            let r = zm(m);
            let mut other = rows.clone();
            let k = other.len();
            other.rotate_left((shuffle as usize) % k);
            if k > 1 {
                let src = other[0].clone();
                for (x, s) in other[1].iter_mut().zip(&src) {
                    *x = (*x + mix * s) % m;
                }
            }
            let extra: Vec<u64> = (0..c).map(|j| rows.iter().map(|row| row[j]).sum::<u64>() % m).collect();
            other.push(extra);
            prop_assert_eq!(r.canonical_rows(rows, c), r.canonical_rows(other, c));
        }

        #[test]
        fn kernel_matches_enumeration((m, c, rows) in small_matrix()) {
            prop_assume!(m <= 4 && rows.len() * c <= 16);
            let r = zm(m);
            let mat = ExactMatrix::from_rows(r, c, rows.clone()).unwrap();
            let ker = mat.kernel();
            for v in &ker {
                prop_assert!(mat.mul_vec(v).unwrap().iter().all(|&x| x == 0));
            }
            let brute: Vec<Vec<u64>> = all_vectors(m, c)
                .into_iter()
                .filter(|v| mat.mul_vec(v).unwrap().iter().all(|&x| x == 0))
                .collect();
            prop_assert_eq!(span_set(m, &ker, c), brute);
        }

        #[test]
        fn kernel_agrees_with_integer_lift((m, c, rows) in small_matrix()) {
            let r = zm(m);
            let mat = ExactMatrix::from_rows(r, c, rows.clone()).unwrap();
            prop_assert_eq!(mat.kernel(), lifted_kernel(m, &rows, c));
        }

        #[test]
        fn module_equal_symmetric_under_permutation((m, c, rows) in small_matrix(), (_, _, other) in small_matrix()) {
            let r = zm(m);
            let other: Vec<Vec<u64>> = other.into_iter().map(|v| {
                let mut v: Vec<u64> = v.into_iter().map(|x| x % m).collect();
                v.resize(c, 0);
                v
            }).collect();
            prop_assert!(module_equal(&r, &rows, &rows).unwrap());
            prop_assert_eq!(module_equal(&r, &rows, &other).unwrap(), module_equal(&r, &other, &rows).unwrap());
            let mut rev = rows.clone();
            rev.reverse();
            prop_assert!(module_equal(&r, &rows, &rev).unwrap());
        }

        #[test]
        fn hermite_idempotent_and_span_preserving(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..5)) {
            let z = Integers;
            let rows: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            let h = z.canonical_rows(rows.clone(), 3);
            prop_assert_eq!(z.canonical_rows(h.clone(), 3), h.clone());
            for row in &rows {
                prop_assert!(span_contains(&z, &h, row));
            }
            for row in &h {
                prop_assert!(span_contains(&z, &rows, row));
            }
        }
    }
}
