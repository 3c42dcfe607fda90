//! The subalgebra generated by the images of the group-likes and of the
//! skew-primitive generators: defining relations and a PBW basis.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::hopf::{families::subset_order, Family, HopfAlgebra};
use crate::identities::Mu;
use crate::report::Report;
use crate::tring::{TElement, TMonomial, TTensorH};

use super::e_index;

struct Ctx<'a> {
    h: &'a HopfAlgebra,
    mu: Mu,
}

impl Ctx<'_> {
    fn mul(&self, a: &TTensorH, b: &TTensorH) -> TTensorH {
        a.mul(b, self.mu.algebra())
    }

    fn pow(&self, a: &TTensorH, k: usize) -> TTensorH {
        (0..k).fold(TTensorH::one(self.h.field()), |acc, _| self.mul(&acc, a))
    }

    fn image(&self, b: usize) -> TTensorH {
        self.mu.generator_image(b).clone()
    }

    /// `μ₀(X_y) - (t_y/t_g)·μ₀(X_g)`, which should be `t_1⊗y`.
    fn skew(&self, y: usize, g: usize) -> TTensorH {
        let ratio = TMonomial::var(y).mul(&TMonomial::var(g).inv());
        self.image(y).sub(&self.image(g).scale_t(&TElement::monomial(ratio, self.h.field())))
    }

    fn t1(&self, b: usize) -> TTensorH {
        TTensorH::simple(TMonomial::var(self.h.unit()), b, Scalar::one(self.h.field()))
    }
}

/// Basis indices of a family of single-term elements, if they are distinct
/// and cover `H`.
fn pbw(h: &HopfAlgebra, elems: &[TTensorH]) -> (bool, String) {
    let mut seen = BTreeSet::new();
    for e in elems {
        if e.len() != 1 {
            return (false, format!("{} is not a single term", e.text(h.labels(), h.labels())));
        }
        let (_, b) = e.terms().keys().next().expect("one term");
        seen.insert(*b);
    }
    (seen.len() == h.dim() && elems.len() == h.dim(), format!("{} of {} basis elements", seen.len(), h.dim()))
}

pub fn uprime_relations_check(h: &HopfAlgebra) -> Result<Report> {
    let cx = Ctx { h, mu: Mu::trivial(h) };
    let f = h.field();
    let mut report = Report::new(format!("U' relations for {}", h.family().tag()));
    let zero = TTensorH::zero(f);
    match h.family() {
        Family::Taft(_) | Family::Monomial { .. } => {
            let (xi_index, y_index, n, q, order) = match h.family() {
                Family::Taft(n) => (1, *n as usize, *n as usize, Scalar::q(f), 1),
                Family::Monomial { group, x, chi } => {
                    (*x, group.order() + group.identity(), group.element_order(*x), chi.value(*x).clone(), group.order())
                }
                _ => unreachable!(),
            };
            let xi = cx.image(xi_index);
            let eta = cx.skew(y_index, xi_index);
            report.push("eta_is_t1_y", eta == cx.t1(y_index), "");
            let xi_n = TTensorH::simple(TMonomial::power(xi_index, n as i32), h.unit(), Scalar::one(f));
            report.push("xi_power", cx.pow(&xi, n) == xi_n, "");
            report.push("eta_nilpotent", cx.pow(&eta, n) == zero && !cx.pow(&eta, n - 1).is_zero(), "");
            report.push("skew_commutation", cx.mul(&eta, &xi) == cx.mul(&xi, &eta).scale(&q), "");
            if let Family::Monomial { chi, .. } = h.family() {
                let bad = h.grouplikes().iter().find(|&&g| {
                    let xg = cx.image(g);
                    cx.mul(&eta, &xg) != cx.mul(&xg, &eta).scale(chi.value(g))
                });
                report.push("character_commutation", bad.is_none(), bad.map_or_else(String::new, |&g| h.label(g).into()));
            }
            let mut elems = Vec::new();
            for j in 0..n {
                let ej = cx.pow(&eta, j);
                if order == 1 {
                    for i in 0..n {
                        elems.push(cx.mul(&cx.pow(&xi, i), &ej));
                    }
                } else {
                    for &g in h.grouplikes() {
                        elems.push(cx.mul(&cx.image(g), &ej));
                    }
                }
            }
            let (ok, detail) = pbw(h, &elems);
            report.push("pbw_basis", ok, detail);
        }
        Family::E(n) => {
            let order = subset_order(*n);
            let gx = e_index(&order, 1, 0);
            let xi = cx.image(gx);
            let etas: Vec<TTensorH> = (0..*n).map(|i| cx.skew(e_index(&order, 0, 1 << i), gx)).collect();
            let ok = (0..*n as usize).all(|i| etas[i] == cx.t1(e_index(&order, 0, 1 << i)));
            report.push("eta_is_t1_y", ok, "");
            let xi2 = TTensorH::simple(TMonomial::power(gx, 2), h.unit(), Scalar::one(f));
            report.push("xi_power", cx.pow(&xi, 2) == xi2, "");
            report.push("eta_nilpotent", etas.iter().all(|e| cx.pow(e, 2) == zero), "");
            report.push("skew_commutation", etas.iter().all(|e| cx.mul(e, &xi).add(&cx.mul(&xi, e)).is_zero()), "");
            let mut anti = true;
            for i in 0..etas.len() {
                for j in i + 1..etas.len() {
                    anti &= cx.mul(&etas[i], &etas[j]).add(&cx.mul(&etas[j], &etas[i])).is_zero();
                }
            }
            report.push("eta_anticommute", anti, "");
            let mut elems = Vec::new();
            for &mask in &order {
                let eta_i = (0..etas.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(TTensorH::one(f), |acc, i| cx.mul(&acc, &etas[i]));
                for a in 0..2 {
                    elems.push(cx.mul(&cx.pow(&xi, a), &eta_i));
                }
            }
            let (ok, detail) = pbw(h, &elems);
            report.push("pbw_basis", ok, detail);
        }
        Family::Group(_) => {
            let elems: Vec<TTensorH> = h.grouplikes().iter().map(|&g| cx.image(g)).collect();
            let (ok, detail) = pbw(h, &elems);
            report.push("pbw_basis", ok, detail);
        }
        Family::Generic => return Err(Error::UnsupportedFamily(String::from("generic"))),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{e_algebra, taft};

    #[test]
    fn relations_hold() {
        let hs = [taft(2).unwrap(), taft(4).unwrap(), e_algebra(1).unwrap(), e_algebra(3).unwrap(), super::super::tests::klein_monomial()];
        for h in hs {
            let r = uprime_relations_check(&h).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }
}
