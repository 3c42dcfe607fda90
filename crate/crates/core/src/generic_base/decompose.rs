//! Writing a degree-zero Laurent monomial as a product of generators of `B_H`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::hopf::{Family, HopfAlgebra};
use crate::lattice::solve_integer;
use crate::tring::{hab_degree, TMonomial};

use super::GammaPresentation;

/// Exponents of the generators (integers on invertible ones, nonnegative on
/// plain ones) and of the torus lifts, such that the product reproduces the
/// input monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionWitness {
    pub invertible: Vec<i64>,
    pub plain: Vec<u32>,
    /// Exponent of each lift in [`torus_lifts`]; all zero for degree-zero input.
    pub residue: Vec<i64>,
}

impl DecompositionWitness {
    pub fn remultiply(&self, p: &GammaPresentation, lifts: &[usize]) -> TMonomial {
        let mut m = TMonomial::one();
        for (g, &e) in p.invertible.iter().zip(&self.invertible) {
            m = m.mul(&g.pow(e as i32));
        }
        for (g, &e) in p.plain.iter().zip(&self.plain) {
            m = m.mul(&g.pow(e as i32));
        }
        for (&b, &e) in lifts.iter().zip(&self.residue) {
            m = m.mul(&TMonomial::power(b, e as i32));
        }
        m
    }

    /// Text such as `(t[x]*t[x^2])^-1*(t[x^2]*t[y])`.
    pub fn text(&self, p: &GammaPresentation, lifts: &[usize], labels: &[String]) -> String {
        let mut parts = Vec::new();
        let mut push = |m: &TMonomial, e: i64| {
            if e == 0 {
                return;
            }
            let body = format!("({})", m.text(labels));
            parts.push(if e == 1 { body } else { format!("{body}^{e}") });
        };
        for (g, &e) in p.invertible.iter().zip(&self.invertible) {
            push(g, e);
        }
        for (g, &e) in p.plain.iter().zip(&self.plain) {
            push(g, e as i64);
        }
        for (&b, &e) in lifts.iter().zip(&self.residue) {
            push(&TMonomial::var(b), e);
        }
        if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        }
    }
}

/// Group-like basis elements whose images generate the invariant factors of
/// `H_ab`, one per factor.
pub fn torus_lifts(h: &HopfAlgebra) -> Result<Vec<usize>> {
    let (group, degs) = h.hab_grading()?;
    let mut out = Vec::new();
    for i in 0..group.factors().len() {
        let mut target = group.zero();
        target[i] = 1;
        let g = h
            .grouplikes()
            .iter()
            .copied()
            .find(|&g| degs[g] == target)
            .ok_or_else(|| Error::InvalidStructure(String::from("no group-like lifts a generator of H_ab")))?;
        out.push(g);
    }
    Ok(out)
}

fn check_localization(h: &HopfAlgebra, m: &TMonomial) -> Result<()> {
    if m.pairs().any(|(b, k)| k < 0 && !h.is_grouplike(b)) {
        return Err(Error::OutOfLocalization(m.text(h.labels())));
    }
    Ok(())
}

/// Decomposes a degree-zero monomial over the presentation.
pub fn decompose(h: &HopfAlgebra, p: &GammaPresentation, m: &TMonomial) -> Result<DecompositionWitness> {
    check_localization(h, m)?;
    let grading = h.hab_grading()?;
    if !grading.0.is_zero(&hab_degree(&grading, m)) {
        return Err(Error::NotDegreeZero(m.text(h.labels())));
    }
    let mut w = decompose_degree_zero(h, p, m)?;
    w.residue = vec![0; grading.0.factors().len()];
    Ok(w)
}

/// Writes any monomial as `b · Π t_{g_i}^{k_i}` with `b ∈ B_H`, `g_i` the
/// lifts of [`torus_lifts`] and `0 ≤ k_i` below the order of the `i`-th
/// invariant factor.
pub fn decompose_with_residue(h: &HopfAlgebra, p: &GammaPresentation, m: &TMonomial) -> Result<DecompositionWitness> {
    check_localization(h, m)?;
    let grading = h.hab_grading()?;
    let lifts = torus_lifts(h)?;
    let deg = hab_degree(&grading, m);
    let residue: Vec<i64> = deg.iter().map(|&d| d as i64).collect();
    let mut rest = m.clone();
    for (&g, &k) in lifts.iter().zip(&residue) {
        rest = rest.mul(&TMonomial::power(g, -(k as i32)));
    }
    let mut w = decompose_degree_zero(h, p, &rest)?;
    w.residue = residue;
    Ok(w)
}

fn decompose_degree_zero(h: &HopfAlgebra, p: &GammaPresentation, m: &TMonomial) -> Result<DecompositionWitness> {
    let mut plain = vec![0u32; p.plain.len()];
    let mut rest = m.clone();
    for (b, e) in m.pairs().filter(|&(b, _)| !h.is_grouplike(b)) {
        let k = p.pairing[b].ok_or_else(|| Error::InvalidStructure(format!("{} is unpaired", h.label(b))))?;
        plain[k] = e as u32;
        rest = rest.mul(&p.plain[k].pow(-e));
    }
    if rest.pairs().any(|(b, _)| !h.is_grouplike(b)) {
        return Err(Error::InvalidStructure(String::from("plain generators share a variable")));
    }
    let invertible = match h.family() {
        Family::Taft(n) if *n >= 3 => {
            let exps: Vec<i64> = (0..*n as usize).map(|i| rest.exponent(i) as i64).collect();
            taft_torus_decomposition(*n as usize, &exps)?
        }
        _ => torus_solve(h, p, &rest)?,
    };
    Ok(DecompositionWitness { invertible, plain, residue: Vec::new() })
}

/// Integer solve of the torus residual over the invertible generators.
pub(crate) fn torus_solve(h: &HopfAlgebra, p: &GammaPresentation, rest: &TMonomial) -> Result<Vec<i64>> {
    let dim = h.dim();
    let to_big = |m: &TMonomial| -> Vec<BigInt> { m.exponent_vector(dim).into_iter().map(BigInt::from).collect() };
    let gens: Vec<Vec<BigInt>> = p.invertible.iter().map(to_big).collect();
    let sol = solve_integer(&gens, &to_big(rest)).ok_or_else(|| Error::NotDegreeZero(rest.text(h.labels())))?;
    sol.iter().map(|c| c.to_i64().ok_or_else(|| Error::Range(String::from("exponent overflow")))).collect()
}

/// The rewriting of a degree-zero Laurent monomial `Π t_{x^i}^{e_i}` of a
/// Taft algebra (`n ≥ 3`) over `Γ₀ = [t_x t_{x^{n-1}}, t_1, t_{x^2}/t_x^2, …,
/// t_{x^{n-1}}/t_x^{n-1}]`: pull out `t_{x^i}/t_x^i` for `i ≠ 1`, leaving
/// `t_x^{nk}`, then use `t_x^n = (t_{x^{n-1}}/t_x^{n-1})^{-1} (t_x t_{x^{n-1}})`.
pub fn taft_torus_decomposition(n: usize, exps: &[i64]) -> Result<Vec<i64>> {
    let weighted: i64 = exps.iter().enumerate().map(|(i, &e)| i as i64 * e).sum();
    if weighted.rem_euclid(n as i64) != 0 {
        return Err(Error::NotDegreeZero(format!("{exps:?}")));
    }
    let k = weighted / n as i64;
    let mut out = vec![0i64; n];
    out[0] = k;
    // slot of t_{x^i}/t_x^i: i = 0 at 1, i ≥ 2 at i
    out[1] = exps[0];
    for (i, &e) in exps.iter().enumerate().skip(2) {
        out[i] = e;
    }
    out[n - 1] -= k;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generic_base::gamma_generators;
    use crate::hopf::{e_algebra, taft};

    #[test]
    fn taft3_example() {
        let h = taft(3).unwrap();
        let p = gamma_generators(&h).unwrap();
        let (x, x2, y) = (1, 2, 3);
        let m = TMonomial::from_pairs([(x2, 1), (y, 1), (x, -3)]);
        let w = decompose(&h, &p, &m).unwrap();
        assert_eq!(w.remultiply(&p, &[]), m);
        assert_eq!(w.text(&p, &[], h.labels()), "(t[x]*t[x^2])^-1*(t[x]^-2*t[x^2])*(t[x^2]*t[y])");
    }

    #[test]
    fn explicit_and_lattice_solutions_agree() {
        for n in 3..=5 {
            let h = taft(n).unwrap();
            let p = gamma_generators(&h).unwrap();
            for seed in 0..40i64 {
                let mut exps: Vec<i64> = (0..n as i64).map(|i| (seed * 7 + i * 13) % 9 - 4).collect();
                let w: i64 = exps.iter().enumerate().map(|(i, e)| i as i64 * e).sum();
                exps[1] -= w.rem_euclid(n as i64);
                let m = TMonomial::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i, e as i32)));
                let a = taft_torus_decomposition(n as usize, &exps).unwrap();
                let b = torus_solve(&h, &p, &m).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn residues() {
        let h = taft(2).unwrap();
        let p = gamma_generators(&h).unwrap();
        let lifts = torus_lifts(&h).unwrap();
        assert_eq!(lifts, [1]);
        let m = TMonomial::from_pairs([(3, 1), (2, 1), (0, -1)]);
        assert!(matches!(decompose(&h, &p, &m), Err(Error::NotDegreeZero(_))));
        let w = decompose_with_residue(&h, &p, &m).unwrap();
        assert_eq!(w.residue, [1]);
        assert_eq!(w.remultiply(&p, &lifts), m);
        let e = e_algebra(2).unwrap();
        let p = gamma_generators(&e).unwrap();
        let m = TMonomial::from_pairs([(2, 2), (5, 1), (1, -1)]);
        let w = decompose_with_residue(&e, &p, &m).unwrap();
        assert_eq!(w.remultiply(&p, &torus_lifts(&e).unwrap()), m);
    }

    #[test]
    fn errors() {
        let h = taft(3).unwrap();
        let p = gamma_generators(&h).unwrap();
        let m = TMonomial::from_pairs([(3, -1), (1, 1)]);
        assert!(matches!(decompose(&h, &p, &m), Err(Error::OutOfLocalization(_))));
        let m = TMonomial::var(1);
        assert!(matches!(decompose(&h, &p, &m), Err(Error::NotDegreeZero(_))));
    }
}
