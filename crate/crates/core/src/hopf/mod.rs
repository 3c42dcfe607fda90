//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Basis elements are addressed by index. Family-built algebras list the
//! group-likes first (the unit at index 0) and then the remaining basis
//! elements by increasing coradical level, which is what the triangular
//! solves for the antipode and for the various convolution inverses rely on.

mod checks;
pub mod families;
mod maps;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::group::{Character, FiniteAbelianGroup, FiniteGroup};
use crate::linalg;

pub use checks::verify_hopf_axioms;
pub use families::{e_algebra, group_algebra, monomial_type_i, taft};
pub use maps::HopfMap;

/// Sparse linear combination of basis elements.
pub type Element = BTreeMap<usize, Scalar>;
/// Sparse element of `H ⊗ H`.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;
/// Sparse element of `H ⊗ H ⊗ H`.
pub type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

/// Adds `c` to the coefficient of `key`, dropping the entry if it cancels.
pub fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Which construction produced an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Taft(u32),
    E(u32),
    Monomial { group: FiniteGroup, x: usize, chi: Character },
    Group(FiniteGroup),
    Generic,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Taft(_) => "taft",
            Family::E(_) => "e",
            Family::Monomial { .. } => "monomial",
            Family::Group(_) => "group",
            Family::Generic => "generic",
        }
    }

    /// Short description such as `taft(3)`.
    pub fn tag(&self) -> String {
        match self {
            Family::Taft(n) => format!("taft({n})"),
            Family::E(n) => format!("e({n})"),
            Family::Monomial { group, x, .. } => format!("monomial(|G|={}, x={})", group.order(), group.label(*x)),
            Family::Group(g) => format!("group(|G|={})", g.order()),
            Family::Generic => String::from("generic"),
        }
    }
}

/// A multiplication given on a fixed basis.
pub trait BasisProduct {
    fn field(&self) -> &Field;
    fn dim(&self) -> usize;
    /// `b_i · b_j` as a list of `(k, coefficient)`.
    fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)];
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: Field,
    labels: Vec<String>,
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    /// `antipode[i][k]` is the coefficient of `b_k` in `S(b_i)`.
    antipode: Vec<Vec<Scalar>>,
    grouplikes: Vec<usize>,
    family: Family,
}

/// Raw structure constants, used to assemble an algebra.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    /// Computed by a triangular solve when absent.
    pub antipode: Option<Vec<Vec<Scalar>>>,
    pub grouplikes: Vec<usize>,
}

impl HopfAlgebra {
    /// Assembles an algebra. Shapes are validated, the unit must be basis
    /// element 0 and the declared group-likes must be group-like; the Hopf
    /// axioms themselves are left to [`verify_hopf_axioms`].
    pub fn from_constants(field: &Field, sc: StructureConstants, family: Family) -> Result<Self> {
        let dim = sc.labels.len();
        let bad = |msg: String| Err(Error::InvalidStructure(msg));
        if dim == 0 {
            return bad("empty basis".into());
        }
        if sc.mult.len() != dim || sc.mult.iter().any(|r| r.len() != dim) {
            return bad("multiplication table has the wrong shape".into());
        }
        if sc.comult.len() != dim || sc.counit.len() != dim {
            return bad("comultiplication or counit has the wrong length".into());
        }
        let in_range = |k: usize| k < dim;
        if sc.mult.iter().flatten().flatten().any(|(k, _)| !in_range(*k))
            || sc.comult.iter().flatten().any(|(a, b, _)| !in_range(*a) || !in_range(*b))
        {
            return bad("basis index out of range".into());
        }
        if sc.grouplikes.first() != Some(&0) || sc.grouplikes.iter().any(|&g| !in_range(g)) {
            return bad("the unit must be basis element 0 and listed first among the group-likes".into());
        }
        for &g in &sc.grouplikes {
            let ok = sc.counit[g].is_one() && sc.comult[g].len() == 1 && {
                let (a, b, c) = &sc.comult[g][0];
                *a == g && *b == g && c.is_one()
            };
            if !ok {
                return bad(format!("`{}` is not group-like", sc.labels[g]));
            }
        }
        for i in 0..dim {
            let unit_left = sc.mult[0][i].len() == 1 && sc.mult[0][i][0].0 == i && sc.mult[0][i][0].1.is_one();
            let unit_right = sc.mult[i][0].len() == 1 && sc.mult[i][0][0].0 == i && sc.mult[i][0][0].1.is_one();
            if !unit_left || !unit_right {
                return bad(format!("basis element 0 is not a unit for `{}`", sc.labels[i]));
            }
        }
        let mut h = HopfAlgebra {
            field: field.clone(),
            labels: sc.labels,
            mult: sc.mult,
            comult: sc.comult,
            counit: sc.counit,
            antipode: Vec::new(),
            grouplikes: sc.grouplikes,
            family,
        };
        h.antipode = match sc.antipode {
            Some(s) => {
                if s.len() != dim || s.iter().any(|r| r.len() != dim) {
                    return bad("antipode matrix has the wrong shape".into());
                }
                s
            }
            None => h.triangular_antipode()?,
        };
        Ok(h)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn unit(&self) -> usize {
        0
    }

    pub fn grouplikes(&self) -> &[usize] {
        &self.grouplikes
    }

    pub fn is_grouplike(&self, i: usize) -> bool {
        self.grouplikes.contains(&i)
    }

    pub fn mult_table(&self) -> &[Vec<Vec<(usize, Scalar)>>] {
        &self.mult
    }

    pub fn coproduct(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn counits(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &[Vec<Scalar>] {
        &self.antipode
    }

    pub fn antipode(&self, i: usize) -> Element {
        let mut e = Element::new();
        for (k, c) in self.antipode[i].iter().enumerate() {
            accumulate(&mut e, k, c.clone());
        }
        e
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(&self.field)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(&self.field)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = Element::new();
        e.insert(i, self.one());
        e
    }

    /// The product of basis elements when it is a single scaled basis element
    /// (always the case for the built-in families).
    pub fn product_term(&self, i: usize, j: usize) -> Option<(usize, &Scalar)> {
        match self.mult[i][j].as_slice() {
            [(k, c)] => Some((*k, c)),
            _ => None,
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::new();
        for (&i, x) in a {
            for (&j, y) in b {
                let xy = x * y;
                for (k, c) in &self.mult[i][j] {
                    accumulate(&mut out, *k, &xy * c);
                }
            }
        }
        out
    }

    pub fn coproduct_element(&self, a: &Element) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&i, x) in a {
            for (l, r, c) in &self.comult[i] {
                accumulate(&mut out, (*l, *r), x * c);
            }
        }
        out
    }

    pub fn counit_element(&self, a: &Element) -> Scalar {
        a.iter().fold(self.zero(), |acc, (&i, x)| &acc + &(x * &self.counit[i]))
    }

    pub fn mul_tensor2(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a1, a2), x) in a {
            for (&(b1, b2), y) in b {
                let xy = x * y;
                for (k1, c1) in &self.mult[a1][b1] {
                    let xyc = &xy * c1;
                    for (k2, c2) in &self.mult[a2][b2] {
                        accumulate(&mut out, (*k1, *k2), &xyc * c2);
                    }
                }
            }
        }
        out
    }

    /// Inverse of a group-like element.
    pub fn grouplike_inverse(&self, g: usize) -> usize {
        *self
            .grouplikes
            .iter()
            .find(|&&h| self.product_term(g, h).is_some_and(|(k, c)| k == 0 && c.is_one()))
            .expect("group-likes of a finite-dimensional Hopf algebra are invertible")
    }

    /// The term `c·g⊗b` of `Δ(b)` with `g` group-like such that every other
    /// term `b1⊗b2` has `b2` earlier than `b`.
    pub fn left_lead(&self, b: usize) -> Result<(usize, Scalar)> {
        let mut lead = None;
        for (l, r, c) in &self.comult[b] {
            if *r == b && self.is_grouplike(*l) && lead.is_none() {
                lead = Some((*l, c.clone()));
            } else if *r >= b {
                return Err(Error::NotPointedOrder(self.labels[b].clone()));
            }
        }
        lead.ok_or_else(|| Error::NotPointedOrder(self.labels[b].clone()))
    }

    /// Mirror image of [`HopfAlgebra::left_lead`]: the term `c·b⊗g`.
    pub fn right_lead(&self, b: usize) -> Result<(usize, Scalar)> {
        let mut lead = None;
        for (l, r, c) in &self.comult[b] {
            if *l == b && self.is_grouplike(*r) && lead.is_none() {
                lead = Some((*r, c.clone()));
            } else if *l >= b {
                return Err(Error::NotPointedOrder(self.labels[b].clone()));
            }
        }
        lead.ok_or_else(|| Error::NotPointedOrder(self.labels[b].clone()))
    }

    /// Antipode from `Σ b1 S(b2) = ε(b)1`, solved in basis order.
    fn triangular_antipode(&self) -> Result<Vec<Vec<Scalar>>> {
        let dim = self.dim();
        let mut s: Vec<Element> = Vec::with_capacity(dim);
        for b in 0..dim {
            let (g, c) = self.left_lead(b)?;
            let mut rhs = Element::new();
            accumulate(&mut rhs, 0, self.counit[b].clone());
            for (l, r, coef) in &self.comult[b] {
                if *r == b && *l == g {
                    continue;
                }
                let term = self.mul(&self.basis_element(*l), &s[*r]);
                for (k, v) in term {
                    accumulate(&mut rhs, k, -(&v * coef));
                }
            }
            let ginv = self.basis_element(self.grouplike_inverse(g));
            let cinv = c.inv().map_err(|_| Error::NotPointedOrder(self.labels[b].clone()))?;
            let sb: Element = self.mul(&ginv, &rhs).into_iter().map(|(k, v)| (k, &v * &cinv)).collect();
            s.push(sb);
        }
        Ok(s.into_iter()
            .map(|e| {
                let mut row = vec![self.zero(); dim];
                for (k, v) in e {
                    row[k] = v;
                }
                row
            })
            .collect())
    }

    /// Same structure with a different product; the antipode is recomputed.
    pub(crate) fn with_product(&self, mult: Vec<Vec<Vec<(usize, Scalar)>>>, family: Family) -> Result<HopfAlgebra> {
        let sc = StructureConstants {
            labels: self.labels.clone(),
            mult,
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: None,
            grouplikes: self.grouplikes.clone(),
        };
        HopfAlgebra::from_constants(&self.field, sc, family)
    }

    pub fn structure_constants(&self) -> StructureConstants {
        StructureConstants {
            labels: self.labels.clone(),
            mult: self.mult.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: Some(self.antipode.clone()),
            grouplikes: self.grouplikes.clone(),
        }
    }

    /// Equality of every structure constant (labels, product, coproduct,
    /// counit, antipode, group-likes).
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        let norm = |h: &HopfAlgebra| -> (Vec<Vec<Element>>, Vec<Tensor2>) {
            let m = h
                .mult
                .iter()
                .map(|row| row.iter().map(|l| l.iter().fold(Element::new(), |mut e, (k, c)| {
                    accumulate(&mut e, *k, c.clone());
                    e
                })).collect())
                .collect();
            let c = (0..h.dim()).map(|i| h.coproduct_element(&h.basis_element(i))).collect();
            (m, c)
        };
        self.dim() == other.dim()
            && self.field.n() == other.field.n()
            && self.labels == other.labels
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.grouplikes == other.grouplikes
            && norm(self) == norm(other)
    }

    /// Basis of the center, from the linear system `[z, b_j] = 0`.
    pub fn center(&self) -> Vec<Element> {
        let dim = self.dim();
        let mut rows = Vec::new();
        for j in 0..dim {
            // coefficient of b_m in [Σ z_k b_k, b_j]
            let mut block = vec![vec![self.zero(); dim]; dim];
            for k in 0..dim {
                for (m, c) in &self.mult[k][j] {
                    block[*m][k] += c;
                }
                for (m, c) in &self.mult[j][k] {
                    block[*m][k] -= c;
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
        }
        linalg::nullspace(&rows, dim, &self.field)
            .into_iter()
            .map(|v| {
                let mut e = Element::new();
                for (k, c) in v.into_iter().enumerate() {
                    accumulate(&mut e, k, c);
                }
                e
            })
            .collect()
    }

    /// True when `z` commutes with every basis element.
    pub fn is_central(&self, z: &Element) -> bool {
        (0..self.dim()).all(|j| {
            let b = self.basis_element(j);
            self.mul(z, &b) == self.mul(&b, z)
        })
    }

    /// `H_ab` and the degree of each basis element under `H → k[H_ab]`.
    pub fn hab_grading(&self) -> Result<(FiniteAbelianGroup, Vec<Vec<u64>>)> {
        let dim = self.dim();
        match &self.family {
            Family::Taft(n) => {
                let n = *n as usize;
                let a = FiniteAbelianGroup::cyclic(n as u64);
                Ok((a, (0..dim).map(|b| vec![((b % n + b / n) % n) as u64]).collect()))
            }
            Family::E(n) => {
                let a = FiniteAbelianGroup::cyclic(2);
                let order = families::subset_order(*n);
                Ok((a, (0..dim).map(|b| vec![((b % 2 + order[b / 2].count_ones() as usize) % 2) as u64]).collect()))
            }
            Family::Monomial { group, x, .. } => {
                let ab = group.abelianization();
                let order = group.order();
                let degs = (0..dim)
                    .map(|b| {
                        let (g, i) = (b % order, b / order);
                        ab.projection[group.mul(g, group.pow(*x, i as i64))].clone()
                    })
                    .collect();
                Ok((ab.group, degs))
            }
            Family::Group(group) => {
                let ab = group.abelianization();
                Ok((ab.group, ab.projection))
            }
            Family::Generic => Err(Error::UnsupportedFamily("generic".into())),
        }
    }

    /// Text form of an element, e.g. `x + (1 + q)*xy`.
    pub fn element_text(&self, e: &Element) -> String {
        if e.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (&k, c)) in e.iter().enumerate() {
            let coef = c.to_text();
            let term = if c.is_one() {
                self.labels[k].clone()
            } else if coef == "-1" {
                format!("-{}", self.labels[k])
            } else if c.is_compound() {
                format!("({coef})*{}", self.labels[k])
            } else {
                format!("{coef}*{}", self.labels[k])
            };
            if i > 0 {
                match term.strip_prefix('-') {
                    Some(rest) => {
                        out.push_str(" - ");
                        out.push_str(rest);
                    }
                    None => {
                        out.push_str(" + ");
                        out.push_str(&term);
                    }
                }
            } else {
                out.push_str(&term);
            }
        }
        out
    }
}

impl BasisProduct for HopfAlgebra {
    fn field(&self) -> &Field {
        &self.field
    }

    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }
}
