//! The universal comodule algebra map `μ_α: T(X_H) → S(t_H)_Θ ⊗ ᵅH`,
//! detection of `H`-identities, and push-forwards along Hopf maps.

mod ncpoly;

pub use ncpoly::{parse_ncpoly, NCPoly, Word};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::Scalar;
use crate::cocycle::{twisted_algebra, TwistedAlgebra, TwoCocycle};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hopf::{accumulate, group_algebra, BasisProduct, Element, Family, HopfAlgebra, HopfMap};
use crate::tring::{TElement, TMonomial, TTensorH};

/// Longest word `μ_α` expands by default.
pub const DEFAULT_WORD_CAP: usize = 64;

/// `μ_α`, determined by `X_x ↦ Σ t_{x1} ⊗ u_{x2}`.
#[derive(Clone, Debug)]
pub struct Mu {
    algebra: TwistedAlgebra,
    images: Vec<TTensorH>,
    cap: usize,
    center_dim: usize,
}

impl Mu {
    pub fn new(h: &HopfAlgebra, alpha: &TwoCocycle) -> Self {
        let algebra = twisted_algebra(h, alpha);
        let images = (0..h.dim())
            .map(|x| {
                let mut t = TTensorH::zero(h.field());
                for (x1, x2, c) in h.coproduct(x) {
                    t.add_term(TMonomial::var(*x1), *x2, c.clone());
                }
                t
            })
            .collect();
        let center_dim = if alpha.is_trivial(h) { h.center().len() } else { usize::MAX };
        Mu { algebra, images, cap: DEFAULT_WORD_CAP, center_dim }
    }

    /// `μ₀`, for the trivial cocycle.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        Self::new(h, &TwoCocycle::trivial(h))
    }

    pub fn with_word_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn algebra(&self) -> &TwistedAlgebra {
        &self.algebra
    }

    pub fn generator_image(&self, b: usize) -> &TTensorH {
        &self.images[b]
    }

    pub fn word(&self, w: &[usize]) -> Result<TTensorH> {
        if w.len() > self.cap {
            return Err(Error::WordTooLong { len: w.len(), cap: self.cap });
        }
        let mut acc = TTensorH::one(self.algebra.field());
        for &b in w {
            acc = acc.mul(&self.images[b], &self.algebra);
        }
        Ok(acc)
    }

    pub fn apply(&self, p: &NCPoly) -> Result<TTensorH> {
        let mut out = TTensorH::zero(p.field());
        for (w, c) in p.terms() {
            out = out.add(&self.word(w)?.scale(c));
        }
        Ok(out)
    }

    /// `P` is an identity exactly when `μ_α(P) = 0`.
    pub fn is_identity(&self, p: &NCPoly) -> Result<bool> {
        Ok(self.apply(p)?.is_zero())
    }

    pub fn classify(&self, p: &NCPoly) -> Result<Classification> {
        let image = self.apply(p)?;
        let coinvariant = image.is_coinvariant();
        let central = image.is_central(&self.algebra);
        if coinvariant && self.center_dim == 1 {
            debug_assert!(central, "coinvariant images are central when the center is trivial");
        }
        Ok(Classification { identity: image.is_zero(), coinvariant, central, image })
    }

    /// Compares `δ(μ_α(w))` with `(μ_α ⊗ id)(δ_T(w))` for a word `w`, where
    /// `δ_T(X_x) = X_{x1} ⊗ x2`.
    pub fn intertwines_coaction(&self, h: &HopfAlgebra, w: &[usize]) -> Result<bool> {
        type Triple = BTreeMap<(TMonomial, usize, usize), Scalar>;
        let mut lhs = Triple::new();
        for ((m, b), c) in self.word(w)?.terms() {
            for (b1, b2, d) in h.coproduct(*b) {
                accumulate(&mut lhs, (m.clone(), *b1, *b2), c * d);
            }
        }
        // Expand δ_T(w) as pairs (word, element of H).
        let mut branches: Vec<(Word, Element)> = alloc::vec![(Word::new(), h.basis_element(h.unit()))];
        for &x in w {
            let mut next = Vec::new();
            for (word, elem) in &branches {
                for (x1, x2, c) in h.coproduct(x) {
                    let mut wd = word.clone();
                    wd.push(*x1);
                    let scaled: Element = elem.iter().map(|(k, v)| (*k, v * c)).collect();
                    next.push((wd, h.mul(&scaled, &h.basis_element(*x2))));
                }
            }
            branches = next;
        }
        let mut rhs = Triple::new();
        for (word, elem) in &branches {
            let img = self.word(word)?;
            for ((m, b), c) in img.terms() {
                for (k, v) in elem {
                    accumulate(&mut rhs, (m.clone(), *b, *k), c * v);
                }
            }
        }
        Ok(lhs == rhs)
    }
}

/// Properties of `μ_α(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub identity: bool,
    pub coinvariant: bool,
    pub central: bool,
    pub image: TTensorH,
}

/// A multiset of inverted central elements of `T(X_H)`, restricted to the
/// ones each family allows: `X_1` and `X_{x^i}^n` for Taft, `X_1` and `X_x²`
/// for `E(n)`, and the group products `P_g`, `Q_{g,h}` for monomial algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedDenominator {
    factors: Vec<NCPoly>,
}

impl LocalizedDenominator {
    pub fn empty() -> Self {
        LocalizedDenominator { factors: Vec::new() }
    }

    pub fn new(h: &HopfAlgebra, factors: Vec<NCPoly>) -> Result<Self> {
        for f in &factors {
            if !denominator_allowed(h, f) {
                return Err(Error::WitnessFailure(format!("denominator {} is not allowed", f.text(h.labels()))));
            }
        }
        Ok(LocalizedDenominator { factors })
    }

    pub fn factors(&self) -> &[NCPoly] {
        &self.factors
    }

    /// The product of the factors.
    pub fn product(&self, field: &crate::arith::Field) -> NCPoly {
        self.factors.iter().fold(NCPoly::one(field), |acc, f| acc.mul(f))
    }
}

fn denominator_allowed(h: &HopfAlgebra, f: &NCPoly) -> bool {
    let Some((w, c)) = single_term(f) else { return false };
    if !c.is_one() || w.is_empty() {
        return false;
    }
    let same = w.iter().all(|&b| b == w[0]);
    match h.family() {
        Family::Taft(n) => same && h.is_grouplike(w[0]) && (w[..] == [h.unit()] || w.len() == *n as usize),
        Family::E(_) => {
            let x = h.index_of("x");
            same && (w[..] == [h.unit()] || (Some(w[0]) == x && w.len() == 2))
        }
        // words in group-like symbols whose product is the unit, like P_g and Q_{g,h}
        Family::Monomial { .. } | Family::Group(_) => {
            w.iter().all(|&b| h.is_grouplike(b))
                && w.iter().try_fold(h.unit(), |acc, &b| h.product_term(acc, b).map(|(k, _)| k)) == Some(h.unit())
        }
        Family::Generic => false,
    }
}

fn single_term(f: &NCPoly) -> Option<(&Word, &Scalar)> {
    let mut it = f.terms().iter();
    match (it.next(), it.next()) {
        (Some(t), None) => Some(t),
        _ => None,
    }
}

/// `X_b ↦ X_{φ(b)}`, extended linearly and multiplicatively.
pub fn push_forward(phi: &HopfMap, p: &NCPoly) -> NCPoly {
    let f = p.field();
    let mut out = NCPoly::zero(f);
    for (w, c) in p.terms() {
        let mut acc = NCPoly::constant(c.clone());
        for &b in w {
            let mut img = NCPoly::zero(f);
            for (k, v) in &phi.images[b] {
                img.add_term(alloc::vec![*k], v.clone());
            }
            acc = acc.mul(&img);
        }
        out = out.add(&acc);
    }
    out
}

/// `t_b ↦ t_{φ(b)}` on `S(t_H)_Θ`; inverted variables need group-like images.
pub fn push_t(phi: &HopfMap, source: &HopfAlgebra, e: &TElement) -> Result<TElement> {
    let f = e.field().clone();
    let mut out = TElement::zero(&f);
    for (m, c) in e.terms() {
        let mut acc = TElement::constant(c.clone());
        for (b, k) in m.pairs() {
            if k < 0 {
                let g = phi
                    .basis_image(b)
                    .filter(|_| source.is_grouplike(b))
                    .ok_or_else(|| Error::OutOfLocalization(String::from(source.label(b))))?;
                acc = acc.mul_monomial(&TMonomial::power(g, k));
            } else {
                let mut img = TElement::zero(&f);
                for (j, v) in &phi.images[b] {
                    img.add_assign_term(TMonomial::var(*j), v.clone());
                }
                acc = acc.mul(&img.pow(k as u32));
            }
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// `α' ∘ (φ × φ) = α` on all basis pairs.
pub fn check_cocycle_compatible(phi: &HopfMap, alpha: &TwoCocycle, alpha_target: &TwoCocycle) -> Result<()> {
    let dim = alpha.dim();
    for i in 0..dim {
        for j in 0..dim {
            let mut v = Scalar::zero(alpha.value(0, 0).field());
            for (a, c) in &phi.images[i] {
                for (b, d) in &phi.images[j] {
                    v += &(&(c * d) * alpha_target.value(*a, *b));
                }
            }
            if v != *alpha.value(i, j) {
                return Err(Error::CocycleMismatch);
            }
        }
    }
    Ok(())
}

/// Push-forward of a polynomial after checking cocycle compatibility.
pub fn push_forward_checked(phi: &HopfMap, alpha: &TwoCocycle, alpha_target: &TwoCocycle, p: &NCPoly) -> Result<NCPoly> {
    check_cocycle_compatible(phi, alpha, alpha_target)?;
    Ok(push_forward(phi, p))
}

/// The Hopf maps `ι: kG → H` and `π: H → kG` of a monomial algebra, with
/// `π ∘ ι = id`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub group_algebra: HopfAlgebra,
    pub iota: HopfMap,
    pub pi: HopfMap,
}

pub fn monomial_splitting(h: &HopfAlgebra) -> Result<Splitting> {
    let Family::Monomial { group, .. } = h.family() else {
        return Err(Error::UnsupportedFamily(h.family().tag()));
    };
    let group: &FiniteGroup = group;
    let kg = group_algebra(group, h.field())?;
    let order = group.order();
    let iota = HopfMap::verified((0..order).map(|g| h.basis_element(g)).collect(), &kg, h)?;
    let pi_images = (0..h.dim()).map(|b| if b < order { kg.basis_element(b) } else { Element::new() }).collect();
    let pi = HopfMap::verified(pi_images, h, &kg)?;
    Ok(Splitting { group_algebra: kg, iota, pi })
}
