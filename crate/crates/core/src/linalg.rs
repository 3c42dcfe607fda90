//! Dense linear algebra over a cyclotomic field: row reduction, rank and
//! nullspaces.

use alloc::vec::Vec;

use crate::arith::{Field, Scalar};

/// Row-reduces `rows` in place to reduced echelon form and returns the pivot
/// columns. All rows must have `cols` entries.
pub fn rref(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Scalar>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// A basis of `{v : M v = 0}` where `M` is given by its rows.
pub fn nullspace(rows: &[Vec<Scalar>], cols: usize, field: &Field) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Scalar::zero(field); cols];
        v[free] = Scalar::one(field);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[r][free];
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b`; `None` if the system is inconsistent. Picks the solution
/// with free variables set to zero.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar], cols: usize, field: &Field) -> Option<Vec<Scalar>> {
    let mut aug: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = alloc::vec![Scalar::zero(field); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::make_field;

    #[test]
    fn rank_and_kernel() {
        let f = make_field(3).unwrap();
        let s = |v: i64| Scalar::from_int(&f, v);
        let q = Scalar::q(&f);
        let m = alloc::vec![
            alloc::vec![s(1), q.clone(), s(0)],
            alloc::vec![q.clone(), &q * &q, s(0)],
        ];
        assert_eq!(rank(&m, 3), 1);
        let ker = nullspace(&m, 3, &f);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &m {
                let dot = row.iter().zip(v).fold(s(0), |acc, (a, b)| &acc + &(a * b));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solving() {
        let f = make_field(1).unwrap();
        let s = |v: i64| Scalar::from_int(&f, v);
        let a = alloc::vec![alloc::vec![s(2), s(1)], alloc::vec![s(1), s(3)]];
        let x = solve(&a, &[s(3), s(4)], 2, &f).unwrap();
        assert_eq!(x, [s(1), s(1)]);
        let singular = alloc::vec![alloc::vec![s(1), s(1)], alloc::vec![s(2), s(2)]];
        assert!(solve(&singular, &[s(1), s(3)], 2, &f).is_none());
    }
}
