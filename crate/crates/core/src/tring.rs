//! The commutative algebra `S(t_H)_Θ`: polynomials in variables `t_b` (one
//! per basis element) with the group-like variables inverted, its Hopf
//! structure, the `t⁻¹` map, and the tensor ring `S(t_H)_Θ ⊗ H`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::hopf::{BasisProduct, HopfAlgebra};

/// A Laurent monomial `Π t_b^{k_b}` as sorted `(b, k_b)` pairs, `k_b ≠ 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TMonomial(Vec<(u32, i32)>);

impl TMonomial {
    pub fn one() -> Self {
        TMonomial(Vec::new())
    }

    pub fn var(b: usize) -> Self {
        TMonomial(vec![(b as u32, 1)])
    }

    pub fn power(b: usize, k: i32) -> Self {
        if k == 0 {
            Self::one()
        } else {
            TMonomial(vec![(b as u32, k)])
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i32)>) -> Self {
        let mut map: BTreeMap<u32, i32> = BTreeMap::new();
        for (b, k) in pairs {
            *map.entry(b as u32).or_insert(0) += k;
        }
        TMonomial(map.into_iter().filter(|&(_, k)| k != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.0.iter().map(|&(b, k)| (b as usize, k))
    }

    pub fn exponent(&self, b: usize) -> i32 {
        self.0.iter().find(|&&(v, _)| v as usize == b).map_or(0, |&(_, k)| k)
    }

    pub fn mul(&self, other: &TMonomial) -> TMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let k = a[i].1 + b[j].1;
                    if k != 0 {
                        out.push((a[i].0, k));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        TMonomial(out)
    }

    pub fn pow(&self, k: i32) -> TMonomial {
        TMonomial(if k == 0 { Vec::new() } else { self.0.iter().map(|&(b, e)| (b, e * k)).collect() })
    }

    /// The inverse monomial; the caller is responsible for the localization.
    pub fn inv(&self) -> TMonomial {
        self.pow(-1)
    }

    /// Total degree counting only non-group-like variables is what the
    /// generic-base code needs; here just the plain total degree.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, k)| k as i64).sum()
    }

    /// Dense exponent vector of length `dim`.
    pub fn exponent_vector(&self, dim: usize) -> Vec<i64> {
        let mut v = vec![0; dim];
        for &(b, k) in &self.0 {
            v[b as usize] = k as i64;
        }
        v
    }

    pub fn from_exponent_vector(v: &[i64]) -> TMonomial {
        TMonomial(v.iter().enumerate().filter(|(_, &k)| k != 0).map(|(b, &k)| (b as u32, k as i32)).collect())
    }

    /// `t[x]*t[y]^-2` style text; `1` for the empty monomial.
    pub fn text(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return String::from("1");
        }
        let mut out = String::new();
        for (i, &(b, k)) in self.0.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            let _ = write!(out, "t[{}]", labels[b as usize]);
            if k != 1 {
                let _ = write!(out, "^{k}");
            }
        }
        out
    }
}

/// An element of `S(t_H)_Θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TElement {
    field: Field,
    terms: BTreeMap<TMonomial, Scalar>,
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    crate::hopf::accumulate(terms, key, c);
}

impl TElement {
    pub fn zero(field: &Field) -> Self {
        TElement { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field().clone();
        Self::term(TMonomial::one(), c).with_field(field)
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(Scalar::one(field))
    }

    fn with_field(mut self, field: Field) -> Self {
        self.field = field;
        self
    }

    pub fn term(m: TMonomial, c: Scalar) -> Self {
        let field = c.field().clone();
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, c);
        TElement { field, terms }
    }

    pub fn monomial(m: TMonomial, field: &Field) -> Self {
        Self::term(m, Scalar::one(field))
    }

    pub fn var(b: usize, field: &Field) -> Self {
        Self::monomial(TMonomial::var(b), field)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<TMonomial, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if the element is a scaled monomial.
    pub fn as_monomial(&self) -> Option<(&TMonomial, &Scalar)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some(t), None) => Some(t),
            _ => None,
        }
    }

    pub fn add_assign_term(&mut self, m: TMonomial, c: Scalar) {
        add_term(&mut self.terms, m, c);
    }

    pub fn add(&self, other: &TElement) -> TElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TElement) -> TElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> TElement {
        TElement { field: self.field.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> TElement {
        if s.is_zero() {
            return TElement::zero(&self.field);
        }
        TElement { field: self.field.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn mul_monomial(&self, m: &TMonomial) -> TElement {
        TElement { field: self.field.clone(), terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn mul(&self, other: &TElement) -> TElement {
        let mut out = TElement::zero(&self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut out.terms, m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> TElement {
        (0..k).fold(TElement::one(&self.field), |acc, _| acc.mul(self))
    }

    /// Evaluates at a point given by the value of each variable; variables
    /// with a negative exponent must have invertible values.
    pub fn eval(&self, value: &dyn Fn(usize) -> Scalar) -> Result<Scalar> {
        let mut acc = Scalar::zero(&self.field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (b, k) in m.pairs() {
                t = &t * &value(b).pow(k as i64)?;
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Applies the ring map sending each monomial to an element.
    pub fn map_monomials(&self, f: &mut dyn FnMut(&TMonomial) -> TElement) -> TElement {
        let mut out = TElement::zero(&self.field);
        for (m, c) in &self.terms {
            let image = f(m).scale(c);
            out = out.add(&image);
        }
        out
    }

    /// Text form such as `3/2*t[x^2y]*t[x]^-3 - t[1]`.
    pub fn text(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count() == 1
                && c.to_text().starts_with('-')
            {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let coef = if mag.is_compound() { format!("({})", mag.to_text()) } else { mag.to_text() };
            let body = match (m.is_one(), mag.is_one()) {
                (true, _) => coef,
                (false, true) => m.text(labels),
                (false, false) => format!("{coef}*{}", m.text(labels)),
            };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

/// `S(t_H)_Θ ⊗ S(t_H)_Θ`, the target of the coproduct.
pub type TTensor2 = BTreeMap<(TMonomial, TMonomial), Scalar>;

/// Context for computations in `S(t_H)_Θ` attached to a Hopf algebra.
#[derive(Clone, Debug)]
pub struct TRing {
    field: Field,
    labels: Vec<String>,
    grouplike: Vec<bool>,
    t_inverse: Vec<TElement>,
}

impl TRing {
    pub fn new(h: &HopfAlgebra) -> Result<TRing> {
        let t_inverse = t_inverse_map(h)?;
        let mut grouplike = vec![false; h.dim()];
        for &g in h.grouplikes() {
            grouplike[g] = true;
        }
        Ok(TRing { field: h.field().clone(), labels: h.labels().to_vec(), grouplike, t_inverse })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_grouplike(&self, b: usize) -> bool {
        self.grouplike[b]
    }

    pub fn t(&self, b: usize) -> TElement {
        TElement::var(b, &self.field)
    }

    pub fn t_inv(&self, b: usize) -> &TElement {
        &self.t_inverse[b]
    }

    pub fn t_inverse_map(&self) -> &[TElement] {
        &self.t_inverse
    }

    pub fn one(&self) -> TElement {
        TElement::one(&self.field)
    }

    pub fn zero(&self) -> TElement {
        TElement::zero(&self.field)
    }

    pub fn constant(&self, c: Scalar) -> TElement {
        TElement::constant(c)
    }

    /// Inverse of a monomial, allowed when only group-like variables occur.
    pub fn inv_monomial(&self, m: &TMonomial) -> Result<TMonomial> {
        self.check_monomial(&m.inv()).map(|_| m.inv())
    }

    pub fn check_monomial(&self, m: &TMonomial) -> Result<()> {
        if m.pairs().any(|(b, k)| k < 0 && !self.grouplike[b]) {
            return Err(Error::OutOfLocalization(m.text(&self.labels)));
        }
        Ok(())
    }

    /// Every monomial respects the localization.
    pub fn check(&self, e: &TElement) -> Result<()> {
        e.terms().keys().try_for_each(|m| self.check_monomial(m))
    }

    pub fn text(&self, e: &TElement) -> String {
        e.text(&self.labels)
    }

    pub fn monomial_text(&self, m: &TMonomial) -> String {
        m.text(&self.labels)
    }

    /// `t_b ↦ ε(b)`.
    pub fn specialize_counit(&self, h: &HopfAlgebra, e: &TElement) -> Result<Scalar> {
        e.eval(&|b| h.counit(b).clone())
    }
}

/// The map `b ↦ t⁻¹_b` with `Σ t_{b1} t⁻¹_{b2} = ε(b)`, solved in basis order:
/// for the lead term `c·g⊗b` of `Δ(b)`,
/// `t⁻¹_b = (ε(b) - Σ_rest t_{b1} t⁻¹_{b2}) / (c·t_g)`.
pub fn t_inverse_map(h: &HopfAlgebra) -> Result<Vec<TElement>> {
    let field = h.field();
    let mut out: Vec<TElement> = Vec::with_capacity(h.dim());
    for b in 0..h.dim() {
        let (g, c) = h.left_lead(b)?;
        let mut rhs = TElement::constant(h.counit(b).clone());
        for (l, r, coef) in h.coproduct(b) {
            if *r == b && *l == g {
                continue;
            }
            let term = out[*r].mul_monomial(&TMonomial::var(*l)).scale(coef);
            rhs = rhs.sub(&term);
        }
        let cinv = c.inv().map_err(|_| Error::NotPointedOrder(h.label(b).into()))?;
        let value = rhs.mul_monomial(&TMonomial::power(g, -1)).scale(&cinv);
        let _ = field;
        out.push(value);
    }
    Ok(out)
}

/// Checks both identities `Σ t_{b1} t⁻¹_{b2} = ε(b) = Σ t⁻¹_{b1} t_{b2}`;
/// returns the first basis label where one fails.
pub fn verify_t_inverse(h: &HopfAlgebra, ring: &TRing) -> core::result::Result<(), String> {
    for b in 0..h.dim() {
        let mut left = ring.zero();
        let mut right = ring.zero();
        for (l, r, c) in h.coproduct(b) {
            left = left.add(&ring.t_inv(*r).mul_monomial(&TMonomial::var(*l)).scale(c));
            right = right.add(&ring.t_inv(*l).mul_monomial(&TMonomial::var(*r)).scale(c));
        }
        let expect = TElement::constant(h.counit(b).clone());
        if left != expect || right != expect {
            return Err(String::from(h.label(b)));
        }
    }
    Ok(())
}

/// The coproduct of `S(t_H)_Θ`: `Δ(t_b) = Σ t_{b1} ⊗ t_{b2}`, extended
/// multiplicatively, with `Δ(t_g^{-1}) = t_g^{-1} ⊗ t_g^{-1}`.
pub fn s_coproduct(h: &HopfAlgebra, e: &TElement) -> Result<TTensor2> {
    let mut out = TTensor2::new();
    for (m, c) in e.terms() {
        let mut acc: TTensor2 = TTensor2::new();
        acc.insert((TMonomial::one(), TMonomial::one()), c.clone());
        for (b, k) in m.pairs() {
            if k < 0 {
                if !h.is_grouplike(b) {
                    return Err(Error::OutOfLocalization(m.text(h.labels())));
                }
                let f = TMonomial::power(b, k);
                acc = acc.into_iter().map(|((l, r), v)| ((l.mul(&f), r.mul(&f)), v)).collect();
                continue;
            }
            for _ in 0..k {
                let mut next = TTensor2::new();
                for ((l, r), v) in &acc {
                    for (b1, b2, cc) in h.coproduct(b) {
                        add_term(&mut next, (l.mul(&TMonomial::var(*b1)), r.mul(&TMonomial::var(*b2))), v * cc);
                    }
                }
                acc = next;
            }
        }
        for (key, v) in acc {
            add_term(&mut out, key, v);
        }
    }
    Ok(out)
}

/// `H_ab`-degree of a monomial: the exponent-weighted sum of the degrees of
/// its variables.
pub fn hab_degree(grading: &(FiniteAbelianGroup, Vec<Vec<u64>>), m: &TMonomial) -> Vec<u64> {
    let (group, degs) = grading;
    m.pairs().fold(group.zero(), |acc, (b, k)| group.add(&acc, &group.scale(&degs[b], k as i64)))
}

/// An element of `S(t_H)_Θ ⊗ H` (or `⊗ ᵅH`), collected by `(monomial, basis index)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TTensorH {
    field: Field,
    terms: BTreeMap<(TMonomial, usize), Scalar>,
}

impl TTensorH {
    pub fn zero(field: &Field) -> Self {
        TTensorH { field: field.clone(), terms: BTreeMap::new() }
    }

    /// `1 ⊗ 1`, with the unit at basis index 0.
    pub fn one(field: &Field) -> Self {
        Self::simple(TMonomial::one(), 0, Scalar::one(field))
    }

    pub fn simple(m: TMonomial, b: usize, c: Scalar) -> Self {
        let field = c.field().clone();
        let mut terms = BTreeMap::new();
        add_term(&mut terms, (m, b), c);
        TTensorH { field, terms }
    }

    /// `e ⊗ b`.
    pub fn from_element(e: &TElement, b: usize) -> Self {
        let mut out = Self::zero(e.field());
        for (m, c) in e.terms() {
            add_term(&mut out.terms, (m.clone(), b), c.clone());
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(TMonomial, usize), Scalar> {
        &self.terms
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: TMonomial, b: usize, c: Scalar) {
        add_term(&mut self.terms, (m, b), c);
    }

    pub fn add(&self, other: &TTensorH) -> TTensorH {
        let mut out = self.clone();
        for ((m, b), c) in &other.terms {
            add_term(&mut out.terms, (m.clone(), *b), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TTensorH) -> TTensorH {
        let mut out = self.clone();
        for ((m, b), c) in &other.terms {
            add_term(&mut out.terms, (m.clone(), *b), -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TTensorH {
        let mut out = Self::zero(&self.field);
        for ((m, b), c) in &self.terms {
            add_term(&mut out.terms, (m.clone(), *b), c * s);
        }
        out
    }

    /// `(e ⊗ 1)·self`.
    pub fn scale_t(&self, e: &TElement) -> TTensorH {
        let mut out = Self::zero(&self.field);
        for ((m, b), c) in &self.terms {
            for (m2, c2) in e.terms() {
                add_term(&mut out.terms, (m.mul(m2), *b), c * c2);
            }
        }
        out
    }

    /// Product using the commutative `t`-multiplication and the basis product of `alg`.
    pub fn mul<A: BasisProduct + ?Sized>(&self, other: &TTensorH, alg: &A) -> TTensorH {
        let mut out = Self::zero(&self.field);
        for ((m1, b1), c1) in &self.terms {
            for ((m2, b2), c2) in &other.terms {
                let prod = alg.product(*b1, *b2);
                if prod.is_empty() {
                    continue;
                }
                let m = m1.mul(m2);
                let c = c1 * c2;
                for (k, ck) in prod {
                    add_term(&mut out.terms, (m.clone(), *k), &c * ck);
                }
            }
        }
        out
    }

    /// The `S(t_H)_Θ` coefficient of basis element `b`.
    pub fn component(&self, b: usize) -> TElement {
        let mut out = TElement::zero(&self.field);
        for ((m, k), c) in &self.terms {
            if *k == b {
                out.add_assign_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Lies in `S(t_H)_Θ ⊗ 1`.
    pub fn is_coinvariant(&self) -> bool {
        self.terms.keys().all(|(_, b)| *b == 0)
    }

    /// Commutes with `1 ⊗ b` for every basis element `b`, i.e. the `H`-parts
    /// lie in the center.
    pub fn is_central<A: BasisProduct + ?Sized>(&self, alg: &A) -> bool {
        (0..alg.dim()).all(|b| {
            let probe = TTensorH::simple(TMonomial::one(), b, Scalar::one(&self.field));
            self.mul(&probe, alg) == probe.mul(self, alg)
        })
    }

    /// Text form `(e1)⊗b1 + (e2)⊗b2`.
    pub fn text(&self, t_labels: &[String], h_labels: &[String]) -> String {
        let mut by_index: BTreeMap<usize, TElement> = BTreeMap::new();
        for ((m, b), c) in &self.terms {
            by_index.entry(*b).or_insert_with(|| TElement::zero(&self.field)).add_assign_term(m.clone(), c.clone());
        }
        if by_index.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = by_index
            .iter()
            .map(|(b, e)| {
                let inner = e.text(t_labels);
                if e.len() == 1 {
                    format!("{inner}⊗{}", h_labels[*b])
                } else {
                    format!("({inner})⊗{}", h_labels[*b])
                }
            })
            .collect();
        parts.join(" + ")
    }
}
