//! Hermite and Smith normal forms of integer matrices.
//!
//! Matrices act on row vectors: a lattice is the row span of its generator
//! matrix, and `hnf` returns `(H, U)` with `U·M = H`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())).finish()
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { cols, rows: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows, which must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged integer matrix");
        IntMatrix { cols, rows }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.nrows());
        let mut out = IntMatrix::zero(self.nrows(), other.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.rows[k].iter().enumerate() {
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant of a square matrix by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        let n = self.nrows();
        assert_eq!(n, self.cols, "determinant of a non-square matrix");
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// True when every row other than the zero rows is in Hermite form.
    pub fn is_hnf(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut seen_zero = false;
        for (r, row) in self.rows.iter().enumerate() {
            match row.iter().position(|x| !x.is_zero()) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last.is_some_and(|l| c <= l) || !row[c].is_positive() {
                        return false;
                    }
                    for above in &self.rows[..r] {
                        if above[c].is_negative() || above[c] >= row[c] {
                            return false;
                        }
                    }
                    last = Some(c);
                }
            }
        }
        true
    }
}

fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

fn combine(a: &[BigInt], ca: &BigInt, b: &[BigInt], cb: &BigInt) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| ca * x + cb * y).collect()
}

fn sub_multiple(target: &mut [BigInt], row: &[BigInt], k: &BigInt) {
    if k.is_zero() {
        return;
    }
    for (t, r) in target.iter_mut().zip(row) {
        if !r.is_zero() {
            *t -= k * r;
        }
    }
}

/// Row-style Hermite normal form with transform: `U·M = H`, `U` unimodular,
/// pivots positive, entries above each pivot reduced into `[0, pivot)`, zero
/// rows last.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let n = m.nrows();
    let mut h = m.rows.clone();
    let mut u = IntMatrix::identity(n).rows;
    let mut r = 0;
    for c in 0..m.cols {
        if r == n {
            break;
        }
        for i in r + 1..n {
            if h[i][c].is_zero() {
                continue;
            }
            if h[r][c].is_zero() {
                h.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let (g, s, t) = egcd(&h[r][c], &h[i][c]);
            let a = &h[r][c] / &g;
            let b = &h[i][c] / &g;
            let new_r = combine(&h[r], &s, &h[i], &t);
            let new_i = combine(&h[r], &-&b, &h[i], &a);
            h[r] = new_r;
            h[i] = new_i;
            let new_ur = combine(&u[r], &s, &u[i], &t);
            let new_ui = combine(&u[r], &-&b, &u[i], &a);
            u[r] = new_ur;
            u[i] = new_ui;
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            h[r].iter_mut().for_each(|x| *x = -core::mem::take(x));
            u[r].iter_mut().for_each(|x| *x = -core::mem::take(x));
        }
        for i in 0..r {
            let k = h[i][c].div_floor(&h[r][c]);
            if !k.is_zero() {
                let (hr, ur) = (h[r].clone(), u[r].clone());
                sub_multiple(&mut h[i], &hr, &k);
                sub_multiple(&mut u[i], &ur, &k);
            }
        }
        r += 1;
    }
    (IntMatrix { cols: m.cols, rows: h }, IntMatrix { cols: n, rows: u })
}

/// Hermite basis of the lattice spanned by `vectors`, without a transform.
/// Inserts one vector at a time, so it stays cheap for many generators.
pub fn lattice_basis(vectors: impl IntoIterator<Item = Vec<BigInt>>, cols: usize) -> IntMatrix {
    let mut by_pivot: Vec<Option<Vec<BigInt>>> = vec![None; cols];
    for mut v in vectors {
        assert_eq!(v.len(), cols);
        for c in 0..cols {
            if v[c].is_zero() {
                continue;
            }
            match &mut by_pivot[c] {
                slot @ None => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -core::mem::take(x));
                    }
                    *slot = Some(v);
                    break;
                }
                Some(b) => {
                    if v[c].is_multiple_of(&b[c]) {
                        let k = &v[c] / &b[c];
                        sub_multiple(&mut v, b, &k);
                    } else {
                        let (g, s, t) = egcd(&b[c], &v[c]);
                        let a = &b[c] / &g;
                        let bb = &v[c] / &g;
                        let new_b = combine(b, &s, &v, &t);
                        v = combine(b, &-&bb, &v, &a);
                        *b = new_b;
                    }
                }
            }
        }
    }
    let mut rows: Vec<Vec<BigInt>> = by_pivot.into_iter().flatten().collect();
    reduce_above(&mut rows);
    IntMatrix { cols, rows }
}

fn reduce_above(rows: &mut [Vec<BigInt>]) {
    for r in 0..rows.len() {
        let c = rows[r].iter().position(|x| !x.is_zero()).expect("nonzero basis row");
        for i in 0..r {
            let k = rows[i][c].div_floor(&rows[r][c]);
            if !k.is_zero() {
                let pivot_row = rows[r].clone();
                sub_multiple(&mut rows[i], &pivot_row, &k);
            }
        }
    }
}

/// Nonzero rows of a Hermite form.
pub fn nonzero_rows(h: &IntMatrix) -> Vec<Vec<BigInt>> {
    h.rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect()
}

/// Membership of `v` in the row lattice of a Hermite basis, by back-substitution.
/// Returns the coefficients over the basis rows.
pub fn hnf_coordinates(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.nrows());
    for row in &basis.rows {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            coords.push(BigInt::zero());
            continue;
        };
        if rest[..c].iter().any(|x| !x.is_zero()) {
            return None;
        }
        if !rest[c].is_multiple_of(&row[c]) {
            return None;
        }
        let k = &rest[c] / &row[c];
        sub_multiple(&mut rest, row, &k);
        coords.push(k);
    }
    if rest.iter().all(Zero::is_zero) {
        Some(coords)
    } else {
        None
    }
}

pub fn lattice_contains(basis: &IntMatrix, v: &[BigInt]) -> bool {
    hnf_coordinates(basis, v).is_some()
}

/// Integer coefficients `c` with `Σ c_i g_i = v`, if `v` lies in the span of
/// the generators `g_i`.
pub fn solve_integer(generators: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let cols = v.len();
    let m = IntMatrix::from_rows(cols, generators.to_vec());
    let (h, u) = hnf(&m);
    let coords = hnf_coordinates(&h, v)?;
    let mut out = vec![BigInt::zero(); generators.len()];
    for (k, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(&u.rows[k]) {
            *o += c * x;
        }
    }
    Some(out)
}

/// Index of a full-rank lattice given by a Hermite basis, `None` if the rank
/// is deficient.
pub fn lattice_index(basis: &IntMatrix) -> Option<BigInt> {
    let rows = nonzero_rows(basis);
    if rows.len() != basis.ncols() {
        return None;
    }
    let mut idx = BigInt::one();
    for r in &rows {
        let c = r.iter().position(|x| !x.is_zero()).expect("nonzero row");
        idx *= &r[c];
    }
    Some(idx.abs())
}

/// Smith normal form: returns the diagonal `d` (length `min(rows, cols)`,
/// each entry dividing the next, zeros last) and a unimodular `V` with
/// `P·M·V = diag(d)` for some unimodular `P`.
pub fn snf(m: &IntMatrix) -> (Vec<BigInt>, IntMatrix) {
    let (nr, nc) = (m.nrows(), m.cols);
    let mut a = m.rows.clone();
    let mut v = IntMatrix::identity(nc).rows;
    let steps = core::cmp::min(nr, nc);
    let col_swap = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            row.swap(i, j);
        }
    };
    // column j -= k * column i
    let col_sub = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, j: usize, i: usize, k: &BigInt| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            let t = k * &row[i];
            row[j] -= t;
        }
    };
    for t in 0..steps {
        loop {
            // smallest nonzero entry of the remaining block goes to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..nr {
                for j in t..nc {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish_snf(a, v, steps, nc);
            };
            a.swap(t, bi);
            col_swap(&mut a, &mut v, t, bj);
            let mut clean = true;
            for i in t + 1..nr {
                let k = a[i][t].div_floor(&a[t][t]);
                if !k.is_zero() {
                    let pivot_row = a[t].clone();
                    sub_multiple(&mut a[i], &pivot_row, &k);
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..nc {
                let k = a[t][j].div_floor(&a[t][t]);
                if !k.is_zero() {
                    col_sub(&mut a, &mut v, j, t, &k);
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility of the rest of the block
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            a[t][t] = -core::mem::take(&mut a[t][t]);
        }
    }
    finish_snf(a, v, steps, nc)
}

fn finish_snf(a: Vec<Vec<BigInt>>, v: Vec<Vec<BigInt>>, steps: usize, nc: usize) -> (Vec<BigInt>, IntMatrix) {
    let d = (0..steps).map(|t| a[t][t].abs()).collect();
    (d, IntMatrix { cols: nc, rows: v })
}
