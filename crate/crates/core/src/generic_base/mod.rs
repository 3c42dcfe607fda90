//! Generic cocycles and the generic base algebra `B_H ⊂ S(t_H)_Θ`: generator
//! presentations, decomposition of degree-zero monomials, and the checks
//! that certify the presentations.

mod decompose;
mod jacobian;
mod nice;
mod quotient;
mod sigma;
mod uprime;

pub use decompose::{decompose, decompose_with_residue, taft_torus_decomposition, torus_lifts, DecompositionWitness};
pub use jacobian::{jacobian_check, sparse_determinant, JacobianResult};
pub use nice::{niceness_witnesses, verify_witness, Frac, Witness};
pub use quotient::quotient_presentation_check;
pub use sigma::{lazy_gamma_check, verify_sigma, SigmaTables};
pub use uprime::uprime_relations_check;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::hopf::{families::subset_order, Family, HopfAlgebra};
use crate::lattice::{basis_with_unit, y_group, DEFAULT_GROUP_CAP};
use crate::tring::{hab_degree, TElement, TMonomial};

/// Generators of `B_H`: Laurent generators (`Γ₀`, or a basis of `Y_G`) and
/// polynomial generators (`Γ₁`, or `Γ`). Every generator is a monomial with
/// coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaPresentation {
    pub invertible: Vec<TMonomial>,
    pub plain: Vec<TMonomial>,
    pub family_tag: String,
    /// The hard-coded presentation used for the four-dimensional Taft algebra.
    pub special: bool,
    /// For each basis variable, the plain generator that contains it, if it
    /// is not group-like.
    pub pairing: Vec<Option<usize>>,
}

impl GammaPresentation {
    pub fn invertible_elements(&self, field: &Field) -> Vec<TElement> {
        self.invertible.iter().map(|m| TElement::monomial(m.clone(), field)).collect()
    }

    pub fn plain_elements(&self, field: &Field) -> Vec<TElement> {
        self.plain.iter().map(|m| TElement::monomial(m.clone(), field)).collect()
    }

    /// Invertible generators, their inverses and the plain generators.
    pub fn generator_set(&self) -> BTreeSet<TMonomial> {
        self.invertible
            .iter()
            .flat_map(|m| [m.clone(), m.inv()])
            .chain(self.plain.iter().cloned())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.invertible.len() + self.plain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn build(h: &HopfAlgebra, invertible: Vec<TMonomial>, plain: Vec<TMonomial>, special: bool) -> Result<GammaPresentation> {
    let mut pairing = vec![None; h.dim()];
    for (k, m) in plain.iter().enumerate() {
        for (b, _) in m.pairs().filter(|&(b, _)| !h.is_grouplike(b)) {
            if pairing[b].replace(k).is_some() {
                return Err(Error::InvalidStructure(format!("{} occurs in two generators", h.label(b))));
            }
        }
    }
    if let Some(b) = (0..h.dim()).find(|&b| !h.is_grouplike(b) && pairing[b].is_none()) {
        return Err(Error::InvalidStructure(format!("{} occurs in no generator", h.label(b))));
    }
    Ok(GammaPresentation { invertible, plain, family_tag: h.family().tag(), special, pairing })
}

fn taft_index(n: usize, i: usize, j: usize) -> usize {
    j * n + i % n
}

/// Index of `x^a y_I` in `E(n)`.
pub(crate) fn e_index(order: &[u32], a: usize, mask: u32) -> usize {
    2 * order.iter().position(|&m| m == mask).expect("subset of {1..n}") + a
}

/// The generator presentation of `B_H` for the trivial cocycle.
pub fn gamma_generators(h: &HopfAlgebra) -> Result<GammaPresentation> {
    let p = match h.family() {
        Family::Taft(n) => taft_gamma(h, *n as usize)?,
        Family::E(n) => {
            let order = subset_order(*n);
            let x = e_index(&order, 1, 0);
            let invertible = vec![TMonomial::var(0), TMonomial::power(x, 2)];
            let mut plain = Vec::new();
            for &mask in order.iter().filter(|&&m| m != 0) {
                let (y, xy) = (e_index(&order, 0, mask), e_index(&order, 1, mask));
                let tx = TMonomial::var(x);
                if mask.count_ones() % 2 == 0 {
                    plain.push(TMonomial::var(y));
                    plain.push(tx.mul(&TMonomial::var(xy)));
                } else {
                    plain.push(tx.mul(&TMonomial::var(y)));
                    plain.push(TMonomial::var(xy));
                }
            }
            if invertible.len() + plain.len() != 1 << (*n + 1) {
                return Err(Error::InvalidStructure(String::from("generator count differs from 2^(n+1)")));
            }
            build(h, invertible, plain, false)?
        }
        Family::Monomial { group, x, .. } => {
            let order = group.order();
            let n = group.element_order(*x);
            let invertible = group_lattice_basis(group)?;
            let mut plain = Vec::new();
            for i in 1..n {
                for g in 0..order {
                    let gx = group.mul(g, group.pow(*x, i as i64));
                    plain.push(TMonomial::from_pairs([(i * order + g, 1), (gx, -1)]));
                }
            }
            build(h, invertible, plain, false)?
        }
        Family::Group(group) => build(h, group_lattice_basis(group)?, Vec::new(), false)?,
        Family::Generic => return Err(Error::UnsupportedFamily(String::from("generic"))),
    };
    let grading = h.hab_grading()?;
    for m in p.invertible.iter().chain(&p.plain) {
        if !grading.0.is_zero(&hab_degree(&grading, m)) {
            return Err(Error::InvalidStructure(format!("generator {} is not of degree zero", m.text(h.labels()))));
        }
    }
    Ok(p)
}

fn taft_gamma(h: &HopfAlgebra, n: usize) -> Result<GammaPresentation> {
    let t = |i: usize, j: usize| TMonomial::var(taft_index(n, i, j));
    if n == 2 {
        let invertible = vec![t(0, 0), TMonomial::power(1, 2)];
        let plain = vec![t(1, 0).mul(&t(0, 1)), t(1, 1)];
        return build(h, invertible, plain, true);
    }
    let mut invertible = vec![t(1, 0).mul(&t(n - 1, 0))];
    for i in (0..n).filter(|&i| i != 1) {
        invertible.push(t(i, 0).mul(&TMonomial::power(1, -(i as i32))));
    }
    let mut plain = Vec::new();
    for j in 1..n {
        for i in 0..n {
            let k = (2 * n - (i + j) % n) % n;
            plain.push(t(i, j).mul(&t(k, 0)));
        }
    }
    build(h, invertible, plain, false)
}

/// A basis of `Y_G` starting with `t_e`, as monomials in the group-like
/// variables (basis index = group element index).
fn group_lattice_basis(group: &crate::group::FiniteGroup) -> Result<Vec<TMonomial>> {
    let y = y_group(group, DEFAULT_GROUP_CAP.max(group.order()))?;
    Ok(basis_with_unit(&y)
        .into_iter()
        .map(|v| TMonomial::from_pairs(v.iter().enumerate().map(|(g, c)| (g, c.to_i32().expect("small exponent")))))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, symmetric, Character};
    use crate::hopf::{e_algebra, group_algebra, monomial_type_i, taft};
    use crate::make_field;

    pub(crate) fn klein_monomial() -> HopfAlgebra {
        let g = direct_product(&cyclic(2), &cyclic(2));
        let f = make_field(2).unwrap();
        let x = g.index_of("(a,e)").unwrap();
        let chi = Character::from_exponents(&f, &[0, 0, 1, 1]);
        monomial_type_i(&g, x, &chi, &f).unwrap()
    }

    #[test]
    fn sweedler_presentation() {
        let h = taft(2).unwrap();
        let p = gamma_generators(&h).unwrap();
        assert!(p.special);
        let lab = |m: &TMonomial| m.text(h.labels());
        let inv: Vec<_> = p.invertible.iter().map(lab).collect();
        let plain: Vec<_> = p.plain.iter().map(lab).collect();
        assert_eq!(inv, ["t[1]", "t[x]^2"]);
        assert_eq!(plain, ["t[x]*t[y]", "t[xy]"]);
    }

    #[test]
    fn counts() {
        for n in 3..=5 {
            let p = gamma_generators(&taft(n).unwrap()).unwrap();
            assert_eq!((p.invertible.len(), p.plain.len()), (n as usize, (n * (n - 1)) as usize));
        }
        for n in 1..=4 {
            let p = gamma_generators(&e_algebra(n).unwrap()).unwrap();
            assert_eq!((p.invertible.len(), p.plain.len()), (2, (1 << (n + 1)) - 2));
        }
        let p = gamma_generators(&klein_monomial()).unwrap();
        assert_eq!(p.plain.len(), 4);
        assert_eq!(p.invertible.len(), 4);
        let s3 = group_algebra(&symmetric(3), &make_field(1).unwrap()).unwrap();
        let p = gamma_generators(&s3).unwrap();
        assert_eq!(p.invertible.len(), 6);
        assert_eq!(p.invertible[0], TMonomial::var(0));
    }

    #[test]
    fn taft3_generators() {
        let h = taft(3).unwrap();
        let p = gamma_generators(&h).unwrap();
        let inv: Vec<_> = p.invertible.iter().map(|m| m.text(h.labels())).collect();
        assert_eq!(inv, ["t[x]*t[x^2]", "t[1]", "t[x]^-2*t[x^2]"]);
        assert!(p.plain.iter().any(|m| m.text(h.labels()) == "t[x^2]*t[y]"));
        assert!(p.plain.iter().any(|m| m.text(h.labels()) == "t[1]*t[xy^2]"));
    }
}
