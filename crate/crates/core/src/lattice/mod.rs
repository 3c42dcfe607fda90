//! The lattice `Y_G ⊂ Z^G` of exponent vectors of degree-zero Laurent
//! monomials in the variables `t_g`, together with the integer normal forms
//! used to handle it.
//!
//! A vector `v ∈ Z^G` stands for the monomial `Π t_g^{v_g}`; it lies in `Y_G`
//! when `Σ v_g·ḡ` vanishes in `G_ab`.

pub mod normal_form;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup};
use crate::report::Report;
pub use normal_form::{hnf, lattice_basis, lattice_contains, snf, solve_integer, IntMatrix};

/// Default bound on `|G|` for lattice computations.
pub const DEFAULT_GROUP_CAP: usize = 24;

#[derive(Clone, Debug)]
pub struct YLattice {
    pub group: FiniteGroup,
    /// Hermite basis, one row per basis vector, columns indexed by `G`.
    pub basis: IntMatrix,
    pub index: u64,
}

impl YLattice {
    pub fn contains(&self, v: &[BigInt]) -> bool {
        lattice_contains(&self.basis, v)
    }
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// `e_g + e_h - e_{gh}`, the exponent vector of `t_g t_h / t_{gh}`.
pub fn sigma_vector(g: &FiniteGroup, a: usize, b: usize) -> Vec<BigInt> {
    let mut v = unit(g.order(), a);
    v[b] += 1;
    v[g.mul(a, b)] -= 1;
    v
}

/// `Y_G` from the generators `t_g t_h / t_{gh}`, with its index checked
/// against `|G_ab|`.
pub fn y_group(g: &FiniteGroup, cap: usize) -> Result<YLattice> {
    let n = g.order();
    if n > cap {
        return Err(Error::GroupTooLarge { order: n, cap });
    }
    let basis = lattice_basis(y_generators(g), n);
    let expected = g.abelianization().group.order() as usize;
    let index = normal_form::lattice_index(&basis);
    match index.as_ref().and_then(ToPrimitive::to_u64) {
        Some(i) if i as usize == expected => Ok(YLattice { group: g.clone(), basis, index: i }),
        _ => Err(Error::IndexMismatch {
            found: index.map_or_else(|| String::from("rank deficient"), |i| format!("{i}")),
            expected,
        }),
    }
}

/// The generator vectors `t_e`, `t_g t_h / t_{gh}` in the order used by
/// [`y_group`].
pub fn y_generators(g: &FiniteGroup) -> Vec<Vec<BigInt>> {
    let n = g.order();
    core::iter::once(unit(n, 0))
        .chain((0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| sigma_vector(g, a, b)))
        .collect()
}

/// A basis of `Y_G` whose first element is `t_e`: `t_e` together with a
/// basis of the vectors with vanishing `e`-coordinate.
pub fn basis_with_unit(y: &YLattice) -> Vec<Vec<BigInt>> {
    let n = y.group.order();
    let mut out = vec![unit(n, 0)];
    // t_e ∈ Y_G makes the first Hermite pivot 1 in column e
    out.extend(y.basis.rows().iter().filter(|r| r[0].is_zero()).cloned());
    out
}

/// Families of explicit bases.
#[derive(Clone, Debug)]
pub enum BasisKind {
    /// `Z/N` with `t_e, t_{a^k}/t_a^k (2 ≤ k < N), t_e/t_a^N`.
    Cyclic(usize),
    /// `Z/m × Z/n` with generators `a = (a,e)` and `b = (e,a)`.
    Product(usize, usize),
    /// `H ⋊ K` for an action given as in [`group::semidirect_product`]; requires
    /// `K` to act trivially on `H_ab`.
    Semidirect { h: FiniteGroup, k: FiniteGroup, action: Vec<Vec<usize>> },
    /// `S_n` through its commutator subgroup and the involution `(1 2)`.
    Symmetric(usize),
}

#[derive(Clone, Debug)]
pub struct NamedBasis {
    pub group: FiniteGroup,
    pub vectors: Vec<Vec<BigInt>>,
    /// `|det|` of the basis matrix.
    pub det: BigInt,
    pub abelianization_order: u64,
}

/// Builds the explicit basis of the given kind and verifies it: every vector
/// lies in `Y_G` and the determinant is `±|G_ab|`.
pub fn named_basis(kind: &BasisKind) -> Result<NamedBasis> {
    let (group, vectors) = match kind {
        BasisKind::Cyclic(n) => {
            let g = group::cyclic(*n);
            let v = cyclic_basis(&g, 1);
            (g, v)
        }
        BasisKind::Product(m, n) => {
            let g = group::direct_product(&group::cyclic(*m), &group::cyclic(*n));
            let v = product_basis(&g, *m, *n);
            (g, v)
        }
        BasisKind::Semidirect { h, k, action } => {
            let g = group::semidirect_product(h, k, action)?;
            let v = semidirect_basis(h, k, action, &g)?;
            (g, v)
        }
        BasisKind::Symmetric(n) => {
            if *n < 2 {
                return Err(Error::UnsupportedKind(format!("symmetric({n})")));
            }
            let g = group::symmetric(*n);
            let tau = g.index_of("(1 2)").expect("transposition");
            let v = index_two_basis(&g, tau)?;
            (g, v)
        }
    };
    verify_basis(group, vectors)
}

fn verify_basis(group: FiniteGroup, vectors: Vec<Vec<BigInt>>) -> Result<NamedBasis> {
    let y = y_group(&group, usize::MAX)?;
    if let Some(bad) = vectors.iter().find(|v| !y.contains(v)) {
        return Err(Error::IndexMismatch { found: format!("vector {} outside Y_G", vector_text(&group, bad)), expected: y.index as usize });
    }
    let n = group.order();
    if vectors.len() != n {
        return Err(Error::IndexMismatch { found: format!("{} vectors for rank {n}", vectors.len()), expected: y.index as usize });
    }
    let det = IntMatrix::from_rows(n, vectors.clone()).det().abs();
    if det != BigInt::from(y.index) {
        return Err(Error::IndexMismatch { found: format!("{det}"), expected: y.index as usize });
    }
    Ok(NamedBasis { group, vectors, det, abelianization_order: y.index })
}

/// `t_e, t_{a^k}/t_a^k` for `2 ≤ k < N` and `t_e/t_a^N`, for the generator
/// `a` at index `gen` of a cyclic group.
fn cyclic_basis(g: &FiniteGroup, gen: usize) -> Vec<Vec<BigInt>> {
    let n = g.order();
    let mut out = vec![unit(n, 0)];
    if n == 1 {
        return out;
    }
    for k in 2..=n {
        let mut v = unit(n, g.pow(gen, k as i64));
        v[gen] -= k as i64;
        out.push(v);
    }
    out
}

fn product_basis(g: &FiniteGroup, m: usize, n: usize) -> Vec<Vec<BigInt>> {
    let size = g.order();
    // (h,k) sits at index h*n + k
    let elem = |i: usize, j: usize| i * n + j;
    let (a, b) = (elem(1 % m, 0), elem(0, 1 % n));
    let mut out = vec![unit(size, 0)];
    let mut side = |gen: usize, ord: usize, at: &dyn Fn(usize) -> usize| {
        if ord == 1 {
            return;
        }
        let mut v = vec![BigInt::zero(); size];
        v[gen] = BigInt::from(ord);
        out.push(v);
        for k in 2..ord {
            let mut v = unit(size, at(k));
            v[gen] -= k as i64;
            out.push(v);
        }
    };
    side(a, m, &|k| elem(k, 0));
    side(b, n, &|k| elem(0, k));
    for i in 1..m {
        for j in 1..n {
            let mut v = unit(size, elem(i, j));
            v[elem(i, 0)] -= 1;
            v[elem(0, j)] -= 1;
            out.push(v);
        }
    }
    out
}

fn semidirect_basis(h: &FiniteGroup, k: &FiniteGroup, action: &[Vec<usize>], g: &FiniteGroup) -> Result<Vec<Vec<BigInt>>> {
    let h_ab = h.abelianization();
    for phi in action {
        if (0..h.order()).any(|x| h_ab.projection[phi[x]] != h_ab.projection[x]) {
            return Err(Error::TrivialActionViolated);
        }
    }
    let (nh, nk) = (h.order(), k.order());
    let elem = |hi: usize, ki: usize| hi * nk + ki;
    let size = g.order();
    let embed = |v: &[BigInt], at: &dyn Fn(usize) -> usize| {
        let mut w = vec![BigInt::zero(); size];
        for (i, x) in v.iter().enumerate() {
            w[at(i)] += x;
        }
        w
    };
    let yh = basis_with_unit(&y_group(h, usize::MAX)?);
    let yk = basis_with_unit(&y_group(k, usize::MAX)?);
    let mut out = vec![unit(size, 0)];
    out.extend(yh[1..].iter().map(|v| embed(v, &|i| elem(i, 0))));
    out.extend(yk[1..].iter().map(|v| embed(v, &|i| elem(0, i))));
    for hi in 1..nh {
        for ki in 1..nk {
            let mut v = unit(size, elem(hi, ki));
            v[elem(hi, 0)] -= 1;
            v[elem(0, ki)] -= 1;
            out.push(v);
        }
    }
    Ok(out)
}

/// For `[G : G'] = 2` and an involution `τ ∉ G'`: `t_e`, `t_τ^2`, `t_σ` and
/// `t_{στ}/(t_σ t_τ)` for `σ ∈ G' \ {e}`.
pub fn index_two_basis(g: &FiniteGroup, tau: usize) -> Result<Vec<Vec<BigInt>>> {
    let derived = g.commutator_subgroup();
    if 2 * derived.len() != g.order() {
        return Err(Error::UnsupportedKind(format!("commutator subgroup has index {}", g.order() / derived.len())));
    }
    if g.mul(tau, tau) != 0 || derived.contains(&tau) {
        return Err(Error::UnsupportedKind(format!("`{}` is not an involution outside G'", g.label(tau))));
    }
    let n = g.order();
    let mut out = vec![unit(n, 0)];
    let mut sq = vec![BigInt::zero(); n];
    sq[tau] = BigInt::from(2);
    out.push(sq);
    for &s in derived.iter().filter(|&&s| s != 0) {
        out.push(unit(n, s));
    }
    for &s in derived.iter().filter(|&&s| s != 0) {
        let mut v = unit(n, g.mul(s, tau));
        v[s] -= 1;
        v[tau] -= 1;
        out.push(v);
    }
    Ok(out)
}

/// Checks that the vectors of `P_g = t_g t_{g^{-1}}` and
/// `Q_{g,h} = t_g t_h t_{(gh)^{-1}}` span exactly `Y_G`.
pub fn pq_generation_check(g: &FiniteGroup, cap: usize) -> Result<Report> {
    let n = g.order();
    let y = y_group(g, cap)?;
    let pq = pq_vectors(g);
    let span = lattice_basis(pq.iter().map(|(_, v)| v.clone()), n);
    let mut report = Report::new(format!("P/Q generation for a group of order {n}"));
    let inside = pq.iter().find(|(_, v)| !y.contains(v));
    report.push(
        "pq_in_y",
        inside.is_none(),
        inside.map_or_else(String::new, |(name, _)| format!("{name} is not of degree zero")),
    );
    report.push("pq_span_equals_y", span == y.basis, format!("index {}", y.index));
    Ok(report)
}

/// `(name, vector)` for every `P_g` and `Q_{g,h}`.
pub fn pq_vectors(g: &FiniteGroup) -> Vec<(String, Vec<BigInt>)> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        let mut v = unit(n, a);
        v[g.inv(a)] += 1;
        out.push((format!("P[{}]", g.label(a)), v));
    }
    for a in 0..n {
        for b in 0..n {
            let mut v = unit(n, a);
            v[b] += 1;
            v[g.inv(g.mul(a, b))] += 1;
            out.push((format!("Q[{},{}]", g.label(a), g.label(b)), v));
        }
    }
    out
}

/// `t[g]^k*...` text for an exponent vector; `1` for the zero vector.
pub fn vector_text(g: &FiniteGroup, v: &[BigInt]) -> String {
    let mut parts = Vec::new();
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if x.is_one() {
            parts.push(format!("t[{}]", g.label(i)));
        } else {
            parts.push(format!("t[{}]^{}", g.label(i), x));
        }
    }
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_indices() {
        assert_eq!(y_group(&group::cyclic(1), 24).unwrap().index, 1);
        assert_eq!(y_group(&group::cyclic(2), 24).unwrap().index, 2);
        assert_eq!(y_group(&group::symmetric(3), 24).unwrap().index, 2);
        assert_eq!(y_generators(&group::symmetric(3)).len(), 37);
        assert!(matches!(y_group(&group::symmetric(5), 24), Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn cyclic_example() {
        let b = named_basis(&BasisKind::Cyclic(4)).unwrap();
        assert_eq!(b.vectors[0], big(&[1, 0, 0, 0]));
        assert_eq!(b.vectors[1], big(&[0, -2, 1, 0]));
        assert_eq!(b.vectors[3], big(&[1, -4, 0, 0]));
        assert_eq!(b.det, BigInt::from(4));
    }

    #[test]
    fn explicit_bases() {
        assert_eq!(named_basis(&BasisKind::Product(2, 2)).unwrap().det, BigInt::from(4));
        assert_eq!(named_basis(&BasisKind::Product(2, 3)).unwrap().det, BigInt::from(6));
        assert_eq!(named_basis(&BasisKind::Symmetric(3)).unwrap().det, BigInt::from(2));
        assert_eq!(named_basis(&BasisKind::Symmetric(4)).unwrap().det, BigInt::from(2));
    }

    #[test]
    fn nontrivial_action_rejected() {
        // Z/3 ⋊ Z/2 by inversion is S_3, but the action on Z/3 is not trivial
        let action = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let kind = BasisKind::Semidirect { h: group::cyclic(3), k: group::cyclic(2), action };
        assert!(matches!(named_basis(&kind), Err(Error::TrivialActionViolated)));
    }

    #[test]
    fn pq_small() {
        assert!(pq_generation_check(&group::cyclic(2), 24).unwrap().all_passed());
        assert!(pq_generation_check(&group::cyclic(1), 24).unwrap().all_passed());
    }
}
