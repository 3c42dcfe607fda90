//! Witnesses that `B_H` is nice: every generator `γ` has `γ⊗1 = μ₀(P)/μ₀(D)`
//! with `P` in the tensor algebra and `D` a product of allowed central
//! denominators.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::hopf::{families::subset_order, Family, HopfAlgebra};
use crate::identities::{LocalizedDenominator, Mu, NCPoly, Word};
use crate::lattice::{normal_form::solve_integer, pq_vectors};
use crate::tring::{TElement, TMonomial};

use super::{e_index, gamma_generators};

/// A fraction `num / Π den` whose denominators are single central words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: NCPoly,
    /// Sorted multiset of denominator words.
    pub den: Vec<Word>,
}

impl Frac {
    pub fn poly(num: NCPoly) -> Self {
        Frac { num, den: Vec::new() }
    }

    pub fn var(b: usize, field: &Field) -> Self {
        Self::poly(NCPoly::var(b, field))
    }

    pub fn one(field: &Field) -> Self {
        Self::poly(NCPoly::one(field))
    }

    pub fn over(mut self, w: Word) -> Self {
        self.den.push(w);
        self.den.sort();
        self
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        den.sort();
        Frac { num: self.num.mul(&other.num), den }
    }

    pub fn pow(&self, k: usize) -> Frac {
        (0..k).fold(Frac::one(self.num.field()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, s: &Scalar) -> Frac {
        Frac { num: self.num.scale(s), den: self.den.clone() }
    }

    /// Brings both fractions to the smallest common denominator. The
    /// denominators are central, so the extra factors go on the right.
    pub fn add(&self, other: &Frac) -> Frac {
        let f = self.num.field();
        let mut count: BTreeMap<&Word, (usize, usize)> = BTreeMap::new();
        for w in &self.den {
            count.entry(w).or_default().0 += 1;
        }
        for w in &other.den {
            count.entry(w).or_default().1 += 1;
        }
        let mut den = Vec::new();
        let (mut a, mut b) = (self.num.clone(), other.num.clone());
        for (w, (i, j)) in count {
            for _ in 0..i.max(j) {
                den.push(w.clone());
            }
            let pad = NCPoly::word(w.clone(), Scalar::one(f));
            for _ in i..j {
                a = a.mul(&pad);
            }
            for _ in j..i {
                b = b.mul(&pad);
            }
        }
        Frac { num: a.add(&b), den }
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add(&other.scale(&Scalar::from_int(self.num.field(), -1)))
    }
}

/// `γ⊗1 = μ₀(numerator) / μ₀(denominator)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub generator: TMonomial,
    pub numerator: NCPoly,
    pub denominator: LocalizedDenominator,
}

impl Witness {
    fn from_frac(h: &HopfAlgebra, generator: TMonomial, frac: Frac) -> Result<Self> {
        let f = h.field();
        let factors = frac.den.into_iter().map(|w| NCPoly::word(w, Scalar::one(f))).collect();
        Ok(Witness { generator, numerator: frac.num, denominator: LocalizedDenominator::new(h, factors)? })
    }

    pub fn text(&self, h: &HopfAlgebra) -> String {
        let den: Vec<String> = self.denominator.factors().iter().map(|d| d.text(h.labels())).collect();
        let den = if den.is_empty() { String::from("1") } else { den.join(" * ") };
        format!("{} = ({}) / ({})", self.generator.text(h.labels()), self.numerator.text(h.labels()), den)
    }
}

/// Checks `μ₀(P) = (γ⊗1)·μ₀(D)`.
pub fn verify_witness(h: &HopfAlgebra, mu: &Mu, w: &Witness) -> Result<bool> {
    let lhs = mu.apply(&w.numerator)?;
    let den = mu.apply(&w.denominator.product(h.field()))?;
    let rhs = den.scale_t(&TElement::monomial(w.generator.clone(), h.field()));
    Ok(lhs == rhs)
}

/// One verified witness for each generator of `B_H` and each inverse of an
/// invertible generator.
pub fn niceness_witnesses(h: &HopfAlgebra) -> Result<Vec<Witness>> {
    let p = gamma_generators(h)?;
    let mut b = Builder::new(h)?;
    let mut out = Vec::new();
    for g in &p.invertible {
        let (fwd, back) = b.invertible(g)?;
        out.push(Witness::from_frac(h, g.clone(), fwd)?);
        out.push(Witness::from_frac(h, g.inv(), back)?);
    }
    for g in &p.plain {
        let frac = b.plain(g)?;
        out.push(Witness::from_frac(h, g.clone(), frac)?);
    }
    let mu = Mu::trivial(h).with_word_cap(usize::MAX);
    for w in &out {
        if !verify_witness(h, &mu, w)? {
            return Err(Error::WitnessFailure(w.generator.text(h.labels())));
        }
    }
    Ok(out)
}

/// The family data that produces `1⊗y` from the generators.
enum Legs {
    /// `1⊗y^m = Y^m`.
    Cyclic { y: Frac, y_index: usize, step: usize },
    /// `1⊗y_K = Π_{i∈K} Y_i` in increasing order.
    Exterior { ys: Vec<Frac>, order: Vec<u32> },
    None,
}

struct Builder<'a> {
    h: &'a HopfAlgebra,
    f: Field,
    legs: Legs,
    cache: BTreeMap<usize, Frac>,
}

impl<'a> Builder<'a> {
    fn new(h: &'a HopfAlgebra) -> Result<Self> {
        let f = h.field().clone();
        let x = |b| Frac::var(b, &f);
        let commutator = |a: usize, b: usize| Frac::poly(NCPoly::var(a, &f).mul(&NCPoly::var(b, &f)).sub(&NCPoly::var(b, &f).mul(&NCPoly::var(a, &f))));
        let cyclic = |gx: usize, gy: usize, n: usize, q: Scalar| -> Result<Legs> {
            // X_x^{n-1}(X_y X_x - X_x X_y) = (q-1)·t_1 t_x^n ⊗ y
            let c = (&q - &Scalar::one(&f)).inv()?;
            let y = x(gx).pow(n - 1).mul(&commutator(gy, gx)).scale(&c).over(vec![h.unit()]).over(vec![gx; n]);
            Ok(Legs::Cyclic { y, y_index: gy, step: gy })
        };
        let legs = match h.family() {
            Family::Taft(n) => cyclic(1, *n as usize, *n as usize, Scalar::q(&f))?,
            Family::Monomial { group, x: gx, chi } => {
                let gy = group.order() + group.identity();
                cyclic(*gx, gy, group.element_order(*gx), chi.value(*gx).clone())?
            }
            Family::E(n) => {
                let order = subset_order(*n);
                let gx = e_index(&order, 1, 0);
                let half = Scalar::ratio(&f, 1, 2);
                let ys = (0..*n)
                    .map(|i| {
                        let gy = e_index(&order, 0, 1 << i);
                        x(gx).mul(&commutator(gx, gy)).scale(&half).over(vec![h.unit()]).over(vec![gx, gx])
                    })
                    .collect();
                Legs::Exterior { ys, order }
            }
            _ => Legs::None,
        };
        Ok(Builder { h, f, legs, cache: BTreeMap::new() })
    }

    /// `1⊗b` for a basis element in the span of the `y`-monomials.
    fn unit_leg(&self, b: usize) -> Result<Frac> {
        let fail = || Error::InvalidStructure(format!("no unit leg for {}", self.h.label(b)));
        match &self.legs {
            Legs::Cyclic { y, y_index, step } => {
                let base = y_index - step;
                if b < base || (b - base) % step != 0 {
                    return Err(fail());
                }
                Ok(y.pow((b - base) / step))
            }
            Legs::Exterior { ys, order } => {
                let mask = order.get(b / 2).filter(|_| b % 2 == 0).ok_or_else(fail)?;
                Ok((0..ys.len()).filter(|i| mask >> i & 1 == 1).fold(Frac::one(&self.f), |acc, i| acc.mul(&ys[i])))
            }
            Legs::None => Err(fail()),
        }
    }

    /// A fraction with image `t_b ⊗ g_b`, where `b⊗g_b` is the right lead of `Δ(b)`.
    fn lead(&mut self, b: usize) -> Result<Frac> {
        if let Some(fr) = self.cache.get(&b) {
            return Ok(fr.clone());
        }
        let h = self.h;
        let (g, c) = h.right_lead(b)?;
        let mut acc = Frac::var(b, &self.f);
        for (b1, b2, coef) in h.coproduct(b) {
            if *b1 == b && *b2 == g {
                continue;
            }
            let (g1, _) = h.right_lead(*b1)?;
            let rest = h.mul(&h.basis_element(h.grouplike_inverse(g1)), &h.basis_element(*b2));
            let lower = self.lead(*b1)?;
            for (k, v) in rest {
                let term = lower.mul(&self.unit_leg(k)?).scale(&(coef * &v));
                acc = acc.sub(&term);
            }
        }
        let fr = acc.scale(&c.inv()?);
        self.cache.insert(b, fr.clone());
        Ok(fr)
    }

    /// `τ⊗g` for a monomial `τ` in group-like variables; `g` must be the
    /// product of the bases in the order they appear.
    fn torus(&self, tau: &TMonomial) -> Frac {
        let h = self.h;
        let mut acc = Frac::one(&self.f);
        for (b, e) in tau.pairs() {
            let step = if e > 0 {
                Frac::var(b, &self.f)
            } else {
                let binv = h.grouplike_inverse(b);
                Frac::var(binv, &self.f).over(vec![b, binv])
            };
            acc = acc.mul(&step.pow(e.unsigned_abs() as usize));
        }
        acc
    }

    fn plain(&mut self, gamma: &TMonomial) -> Result<Frac> {
        let h = self.h;
        let (b, _) = gamma
            .pairs()
            .find(|&(b, _)| !h.is_grouplike(b))
            .ok_or_else(|| Error::InvalidStructure(gamma.text(h.labels())))?;
        let rest = gamma.mul(&TMonomial::var(b).inv());
        Ok(self.lead(b)?.mul(&self.torus(&rest)))
    }

    /// Witness fractions for `γ` and `γ⁻¹`.
    fn invertible(&self, gamma: &TMonomial) -> Result<(Frac, Frac)> {
        let h = self.h;
        let f = &self.f;
        let x = |b| Frac::var(b, f);
        let unit_only = |b: usize, k: usize| Frac::one(f).over(vec![b; k]);
        match h.family() {
            Family::Taft(n) if *n > 2 => {
                let n = *n as usize;
                let last = n - 1;
                if *gamma == TMonomial::var(1).mul(&TMonomial::var(last)) {
                    let fwd = x(1).mul(&x(last));
                    let back = x(1).pow(last).mul(&x(last).pow(last)).over(vec![1; n]).over(vec![last; n]);
                    return Ok((fwd, back));
                }
                // t_{x^i} / t_x^i
                let i = (0..n).find(|&i| i != 1 && *gamma == TMonomial::var(i).mul(&TMonomial::power(1, -(i as i32))));
                match i {
                    Some(0) => Ok((x(0), unit_only(0, 1))),
                    Some(i) => {
                        let fwd = x(i).mul(&x(1).pow(n - i)).over(vec![1; n]);
                        let back = x(i).pow(last).mul(&x(1).pow(i)).over(vec![i; n]);
                        Ok((fwd, back))
                    }
                    None => Err(Error::InvalidStructure(gamma.text(h.labels()))),
                }
            }
            Family::Taft(_) | Family::E(_) => {
                if *gamma == TMonomial::var(h.unit()) {
                    return Ok((x(h.unit()), unit_only(h.unit(), 1)));
                }
                let (gx, _) = gamma.pairs().next().ok_or_else(|| Error::InvalidStructure(String::from("1")))?;
                Ok((x(gx).pow(2), unit_only(gx, 2)))
            }
            Family::Monomial { group, .. } | Family::Group(group) => {
                let vectors = pq_vectors(group);
                let gens: Vec<Vec<BigInt>> = vectors.iter().map(|(_, v)| v.clone()).collect();
                let target: Vec<BigInt> = gamma.exponent_vector(group.order()).into_iter().map(BigInt::from).collect();
                let coeffs = solve_integer(&gens, &target)
                    .ok_or_else(|| Error::WitnessFailure(format!("{} is not a P/Q combination", gamma.text(h.labels()))))?;
                let words: Vec<Word> = vectors.iter().map(|(_, v)| pq_word(group, v)).collect();
                let (mut pos, mut neg) = (Frac::one(f), Frac::one(f));
                for (c, w) in coeffs.iter().zip(&words) {
                    if c.is_zero() {
                        continue;
                    }
                    let k = c.abs().to_usize().ok_or_else(|| Error::Range(String::from("coefficient too large")))?;
                    let wf = Frac::poly(NCPoly::word(w.clone(), Scalar::one(f)));
                    if c.is_positive() {
                        pos = pos.mul(&wf.pow(k));
                    } else {
                        for _ in 0..k {
                            neg = neg.over(w.clone());
                        }
                    }
                }
                // γ = pos/neg and γ⁻¹ = neg/pos, with the words as denominators.
                let mut back = Frac::one(f);
                for (c, w) in coeffs.iter().zip(&words) {
                    if c.is_negative() {
                        back = back.mul(&Frac::poly(NCPoly::word(w.clone(), Scalar::one(f))).pow(c.abs().to_usize().unwrap_or(0)));
                    } else {
                        for _ in 0..c.to_usize().unwrap_or(0) {
                            back = back.over(w.clone());
                        }
                    }
                }
                Ok((pos.mul(&neg), back))
            }
            Family::Generic => Err(Error::UnsupportedFamily(String::from("generic"))),
        }
    }
}

/// The word `X_g X_{g⁻¹}` or `X_a X_b X_{(ab)⁻¹}` behind a `P`/`Q` vector.
fn pq_word(group: &crate::group::FiniteGroup, v: &[BigInt]) -> Word {
    let mut w = Vec::new();
    for (g, c) in v.iter().enumerate() {
        for _ in 0..c.to_usize().unwrap_or(0) {
            w.push(g);
        }
    }
    // reorder so that the product is the identity
    let perms: &[&[usize]] = match w.len() {
        2 => &[&[0, 1]],
        _ => &[&[0, 1, 2], &[0, 2, 1], &[1, 0, 2], &[1, 2, 0], &[2, 0, 1], &[2, 1, 0]],
    };
    for p in perms {
        let cand: Word = p.iter().map(|&i| w[i]).collect();
        if cand.iter().fold(group.identity(), |acc, &g| group.mul(acc, g)) == group.identity() {
            return cand;
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric;
    use crate::hopf::{e_algebra, group_algebra, taft};
    use crate::make_field;

    fn check(h: &HopfAlgebra) -> usize {
        let p = gamma_generators(h).unwrap();
        let ws = niceness_witnesses(h).unwrap();
        assert_eq!(ws.len(), 2 * p.invertible.len() + p.plain.len());
        ws.len()
    }

    #[test]
    fn taft_witnesses() {
        for n in 2..=4 {
            check(&taft(n).unwrap());
        }
    }

    #[test]
    fn e_witnesses() {
        for n in 1..=3 {
            check(&e_algebra(n).unwrap());
        }
    }

    #[test]
    fn monomial_and_group_witnesses() {
        check(&super::super::tests::klein_monomial());
        check(&group_algebra(&symmetric(3), &make_field(1).unwrap()).unwrap());
    }

    #[test]
    fn sweedler_text() {
        let h = taft(2).unwrap();
        let ws = niceness_witnesses(&h).unwrap();
        assert_eq!(ws[1].text(&h), "t[1]^-1 = (1) / (X[1])");
    }

    #[test]
    fn wrong_witness_rejected() {
        let h = taft(3).unwrap();
        let mut ws = niceness_witnesses(&h).unwrap();
        let mu = Mu::trivial(&h);
        ws[0].generator = TMonomial::var(0);
        assert!(!verify_witness(&h, &mu, &ws[0]).unwrap());
    }

    #[test]
    fn fraction_sum_uses_common_denominator() {
        let f = make_field(1).unwrap();
        let a = Frac::var(0, &f).over(vec![1]);
        let b = Frac::var(2, &f);
        let s = a.add(&b);
        assert_eq!(s.den, vec![vec![1]]);
        assert_eq!(s.num.terms().len(), 2);
    }
}
