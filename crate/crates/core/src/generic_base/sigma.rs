//! The generic cocycle `σ_α(x,y) = Σ t_{x1} t_{y1} α(x2,y2) t⁻¹_{x3y3}` and
//! its convolution inverse.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cocycle::{cotwist_hopf, is_lazy, TwoCocycle};
use crate::error::Result;
use crate::hopf::{Family, HopfAlgebra};
use crate::lattice::{lattice_basis, y_group, DEFAULT_GROUP_CAP};
use crate::report::Report;
use crate::tring::{TElement, TMonomial, TRing};

use super::gamma_generators;

/// `σ_α` and `σ_α⁻¹` on all basis pairs.
#[derive(Clone, Debug)]
pub struct SigmaTables {
    sigma: Vec<Vec<TElement>>,
    sigma_inv: Vec<Vec<TElement>>,
}

impl SigmaTables {
    pub fn new(h: &HopfAlgebra, alpha: &TwoCocycle, ring: &TRing) -> Self {
        let dim = h.dim();
        let f = h.field();
        let linear_t = |e: &[(usize, crate::arith::Scalar)], inverse: bool| {
            let mut out = TElement::zero(f);
            for (k, c) in e {
                let t = if inverse { ring.t_inv(*k).clone() } else { ring.t(*k) };
                out = out.add(&t.scale(c));
            }
            out
        };
        // τ(u, v) = Σ α(u1, v1) t⁻¹_{u2v2}
        let mut tau = Vec::with_capacity(dim);
        // ρ(u, v) = Σ α⁻¹(u1, v1) t⁻¹_{u2} t⁻¹_{v2}
        let mut rho = Vec::with_capacity(dim);
        for u in 0..dim {
            let mut tau_row = Vec::with_capacity(dim);
            let mut rho_row = Vec::with_capacity(dim);
            for v in 0..dim {
                let mut t = TElement::zero(f);
                let mut r = TElement::zero(f);
                for (u1, u2, c) in h.coproduct(u) {
                    for (v1, v2, d) in h.coproduct(v) {
                        let cd = c * d;
                        let a = alpha.value(*u1, *v1);
                        if !a.is_zero() {
                            t = t.add(&linear_t(&h.mult_table()[*u2][*v2], true).scale(&(a * &cd)));
                        }
                        let ai = alpha.inverse_value(*u1, *v1);
                        if !ai.is_zero() {
                            r = r.add(&ring.t_inv(*u2).mul(ring.t_inv(*v2)).scale(&(ai * &cd)));
                        }
                    }
                }
                tau_row.push(t);
                rho_row.push(r);
            }
            tau.push(tau_row);
            rho.push(rho_row);
        }
        let mut sigma = Vec::with_capacity(dim);
        let mut sigma_inv = Vec::with_capacity(dim);
        for x in 0..dim {
            let mut s_row = Vec::with_capacity(dim);
            let mut si_row = Vec::with_capacity(dim);
            for y in 0..dim {
                let mut s = TElement::zero(f);
                let mut si = TElement::zero(f);
                for (x1, x2, c) in h.coproduct(x) {
                    for (y1, y2, d) in h.coproduct(y) {
                        let cd = c * d;
                        let lead = TMonomial::var(*x1).mul(&TMonomial::var(*y1));
                        s = s.add(&tau[*x2][*y2].mul_monomial(&lead).scale(&cd));
                        let prod = linear_t(&h.mult_table()[*x1][*y1], false);
                        si = si.add(&prod.mul(&rho[*x2][*y2]).scale(&cd));
                    }
                }
                s_row.push(s);
                si_row.push(si);
            }
            sigma.push(s_row);
            sigma_inv.push(si_row);
        }
        SigmaTables { sigma, sigma_inv }
    }

    pub fn sigma(&self, x: usize, y: usize) -> &TElement {
        &self.sigma[x][y]
    }

    pub fn sigma_inv(&self, x: usize, y: usize) -> &TElement {
        &self.sigma_inv[x][y]
    }

    /// `Σ α(x1,y1) (x2y2)_k` collected by `k`, for a table of values.
    fn left_sums(h: &HopfAlgebra, table: &[Vec<TElement>]) -> Vec<Vec<BTreeMap<usize, TElement>>> {
        let dim = h.dim();
        (0..dim)
            .map(|x| {
                (0..dim)
                    .map(|y| {
                        let mut acc: BTreeMap<usize, TElement> = BTreeMap::new();
                        for (x1, x2, c) in h.coproduct(x) {
                            for (y1, y2, d) in h.coproduct(y) {
                                let base = &table[*x1][*y1];
                                if base.is_zero() {
                                    continue;
                                }
                                for (k, m) in &h.mult_table()[*x2][*y2] {
                                    let term = base.scale(&(&(c * d) * m));
                                    let slot = acc.entry(*k).or_insert_with(|| TElement::zero(h.field()));
                                    *slot = slot.add(&term);
                                }
                            }
                        }
                        acc.retain(|_, v| !v.is_zero());
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}

fn convolve(h: &HopfAlgebra, a: &[Vec<TElement>], b: &[Vec<TElement>], x: usize, y: usize) -> TElement {
    let mut acc = TElement::zero(h.field());
    for (x1, x2, c) in h.coproduct(x) {
        for (y1, y2, d) in h.coproduct(y) {
            let l = &a[*x1][*y1];
            let r = &b[*x2][*y2];
            if l.is_zero() || r.is_zero() {
                continue;
            }
            acc = acc.add(&l.mul(r).scale(&(c * d)));
        }
    }
    acc
}

/// Checks the cocycle condition and normalization of `σ_α` in `S(t_H)_Θ`,
/// `σ*σ⁻¹ = σ⁻¹*σ = ε⊗ε`, and that `t_b ↦ ε(b)` sends `σ_α` to `α`.
pub fn verify_sigma(h: &HopfAlgebra, alpha: &TwoCocycle) -> Report {
    let mut report = Report::new(format!("generic cocycle of {}", h.family().tag()));
    let ring = match TRing::new(h) {
        Ok(r) => r,
        Err(e) => {
            report.push("t_inverse", false, format!("{e}"));
            return report;
        }
    };
    let tables = SigmaTables::new(h, alpha, &ring);
    let dim = h.dim();
    let unit = h.unit();
    let label = |i: usize| String::from(h.label(i));

    // σ(1,b) = σ(b,1) = ε(b)·t_1
    let eps = |b: usize| ring.t(unit).scale(h.counit(b));
    let bad = (0..dim).find(|&b| *tables.sigma(unit, b) != eps(b) || *tables.sigma(b, unit) != eps(b));
    report.push("normalization", bad.is_none(), bad.map_or(String::new(), |b| format!("fails at {}", label(b))));

    let sums = SigmaTables::left_sums(h, &tables.sigma);
    let mut failure = None;
    'outer: for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                let mut lhs = TElement::zero(h.field());
                for (k, c) in &sums[x][y] {
                    lhs = lhs.add(&c.mul(tables.sigma(*k, z)));
                }
                let mut rhs = TElement::zero(h.field());
                for (k, c) in &sums[y][z] {
                    rhs = rhs.add(&c.mul(tables.sigma(x, *k)));
                }
                if lhs != rhs {
                    failure = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    report.push(
        "cocycle_condition",
        failure.is_none(),
        failure.map_or(String::new(), |(x, y, z)| format!("fails at ({}, {}, {})", label(x), label(y), label(z))),
    );

    let mut failure = None;
    'conv: for x in 0..dim {
        for y in 0..dim {
            let expect = TElement::constant(h.counit(x) * h.counit(y));
            if convolve(h, &tables.sigma, &tables.sigma_inv, x, y) != expect
                || convolve(h, &tables.sigma_inv, &tables.sigma, x, y) != expect
            {
                failure = Some((x, y));
                break 'conv;
            }
        }
    }
    report.push(
        "convolution_inverse",
        failure.is_none(),
        failure.map_or(String::new(), |(x, y)| format!("fails at ({}, {})", label(x), label(y))),
    );

    let mut failure = None;
    'spec: for x in 0..dim {
        for y in 0..dim {
            match ring.specialize_counit(h, tables.sigma(x, y)) {
                Ok(v) if v == *alpha.value(x, y) => {}
                _ => {
                    failure = Some((x, y));
                    break 'spec;
                }
            }
        }
    }
    report.push(
        "counit_specialization",
        failure.is_none(),
        failure.map_or(String::new(), |(x, y)| format!("fails at ({}, {})", label(x), label(y))),
    );
    report
}

/// For a lazy cocycle: the cotwisted algebra equals `H`, so the generator
/// sets for `α` and for the trivial cocycle agree. On group algebras the
/// exponent lattice of the values of `σ_α` is also compared with `Y_G`.
pub fn lazy_gamma_check(h: &HopfAlgebra, alpha: &TwoCocycle) -> Result<Report> {
    let mut report = Report::new(format!("lazy cocycle on {}", h.family().tag()));
    report.push("lazy", is_lazy(h, alpha), "");
    let l = cotwist_hopf(h, alpha)?;
    report.push("cotwist_equals_h", l.same_structure(h), "");
    let same = match (gamma_generators(&l), gamma_generators(h)) {
        (Ok(a), Ok(b)) => a.generator_set() == b.generator_set(),
        _ => false,
    };
    report.push("gamma_sets_equal", same, "");
    if let Family::Group(g) = h.family() {
        let ring = TRing::new(h)?;
        let n = g.order();
        let support = |tables: &SigmaTables| -> Option<Vec<Vec<BigInt>>> {
            let mut out = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    let (m, _) = tables.sigma(x, y).as_monomial()?;
                    out.push(m.exponent_vector(n).into_iter().map(BigInt::from).collect());
                }
            }
            Some(out)
        };
        let twisted = support(&SigmaTables::new(h, alpha, &ring));
        let trivial = support(&SigmaTables::new(h, &TwoCocycle::trivial(h), &ring));
        let y = y_group(g, DEFAULT_GROUP_CAP.max(n))?;
        let ok = match (twisted, trivial) {
            (Some(a), Some(b)) => {
                let unit = {
                    let mut v = alloc::vec![BigInt::from(0); n];
                    v[0] = BigInt::from(1);
                    v
                };
                let la = lattice_basis(a.into_iter().chain(core::iter::once(unit.clone())), n);
                let lb = lattice_basis(b.into_iter().chain(core::iter::once(unit)), n);
                la == lb && la == y.basis
            }
            _ => false,
        };
        report.push("sigma_lattice_equals_y", ok, format!("index {}", y.index));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;
    use crate::group::{cyclic, symmetric};
    use crate::hopf::{e_algebra, group_algebra, taft};
    use crate::make_field;

    #[test]
    fn sweedler_sigma() {
        let h = taft(2).unwrap();
        let ring = TRing::new(&h).unwrap();
        let t = SigmaTables::new(&h, &TwoCocycle::trivial(&h), &ring);
        let x = h.index_of("x").unwrap();
        assert_eq!(ring.text(t.sigma(x, x)), "t[1]^-1*t[x]^2");
        assert!(verify_sigma(&h, &TwoCocycle::trivial(&h)).all_passed());
    }

    #[test]
    fn group_sigma_values() {
        let g = symmetric(3);
        let h = group_algebra(&g, &make_field(1).unwrap()).unwrap();
        let ring = TRing::new(&h).unwrap();
        let t = SigmaTables::new(&h, &TwoCocycle::trivial(&h), &ring);
        for a in 0..6 {
            for b in 0..6 {
                let m = TMonomial::from_pairs([(a, 1), (b, 1), (g.mul(a, b), -1)]);
                assert_eq!(t.sigma(a, b), &TElement::monomial(m, h.field()));
            }
        }
        assert!(verify_sigma(&h, &TwoCocycle::trivial(&h)).all_passed());
    }

    #[test]
    fn sigma_for_small_algebras() {
        for h in [taft(3).unwrap(), e_algebra(1).unwrap(), e_algebra(2).unwrap()] {
            let r = verify_sigma(&h, &TwoCocycle::trivial(&h));
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn sigma_for_a_coboundary() {
        let h = taft(2).unwrap();
        let f = h.field();
        let gamma: Vec<Scalar> = [1, 1, 2, -1].iter().map(|&v| Scalar::from_int(f, v)).collect();
        let a = TwoCocycle::coboundary(&h, &gamma).unwrap();
        let r = verify_sigma(&h, &a);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn lazy_group_cocycle() {
        let g = cyclic(6);
        let f = make_field(1).unwrap();
        let h = group_algebra(&g, &f).unwrap();
        let gamma: Vec<Scalar> = [1, 3, -2, 5, 7, -1].iter().map(|&v| Scalar::from_int(&f, v)).collect();
        let a = TwoCocycle::coboundary(&h, &gamma).unwrap();
        let r = lazy_gamma_check(&h, &a).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
