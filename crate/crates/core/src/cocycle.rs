//! Two-cocycles on a Hopf algebra, the twisted comodule algebra `ᵅH` and the
//! cotwisted Hopf algebra `ᵅHᵅ⁻¹`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::hopf::{accumulate, BasisProduct, Element, Family, HopfAlgebra, Tensor2};
use crate::linalg;
use crate::report::Report;

/// A normalized, convolution-invertible two-cocycle stored as dense basis
/// matrices `α(b_i, b_j)` and `α⁻¹(b_i, b_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    values: Vec<Vec<Scalar>>,
    inverse: Vec<Vec<Scalar>>,
}

impl TwoCocycle {
    /// Checks normalization and the cocycle condition, then inverts.
    pub fn new(h: &HopfAlgebra, values: Vec<Vec<Scalar>>) -> Result<Self> {
        let report = verify_cocycle_condition(h, &values);
        if let Some(bad) = report.failures().next() {
            return Err(Error::InvalidStructure(format!("{}: {}", bad.name, bad.detail)));
        }
        Self::unchecked(h, values)
    }

    /// Only computes the inverse; the cocycle condition is not checked.
    pub fn unchecked(h: &HopfAlgebra, values: Vec<Vec<Scalar>>) -> Result<Self> {
        check_shape(h, &values)?;
        let inverse = convolution_inverse(h, &values)?;
        Ok(TwoCocycle { values, inverse })
    }

    /// `α₀(x, y) = ε(x)ε(y)`.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        let values: Vec<Vec<Scalar>> =
            (0..h.dim()).map(|i| (0..h.dim()).map(|j| h.counit(i) * h.counit(j)).collect()).collect();
        TwoCocycle { inverse: values.clone(), values }
    }

    /// The coboundary `∂γ(x, y) = γ(x1)γ(y1)γ⁻¹(x2y2)` of a linear form with
    /// `γ(1) = 1` and `γ(g) ≠ 0` on group-likes.
    pub fn coboundary(h: &HopfAlgebra, gamma: &[Scalar]) -> Result<Self> {
        if gamma.len() != h.dim() {
            return Err(Error::InvalidStructure(String::from("form has the wrong length")));
        }
        if !gamma[h.unit()].is_one() {
            return Err(Error::InvalidStructure(String::from("form is not normalized")));
        }
        let gamma_inv = form_inverse(h, gamma)?;
        let dim = h.dim();
        let mut values = vec![vec![h.zero(); dim]; dim];
        for x in 0..dim {
            for y in 0..dim {
                let mut acc = h.zero();
                for (x1, x2, c) in h.coproduct(x) {
                    for (y1, y2, d) in h.coproduct(y) {
                        let f = &(&gamma[*x1] * &gamma[*y1]) * &(c * d);
                        if f.is_zero() {
                            continue;
                        }
                        for (k, e) in &h.mult_table()[*x2][*y2] {
                            acc += &(&f * &(e * &gamma_inv[*k]));
                        }
                    }
                }
                values[x][y] = acc;
            }
        }
        Self::unchecked(h, values)
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        &self.values[i][j]
    }

    pub fn inverse_value(&self, i: usize, j: usize) -> &Scalar {
        &self.inverse[i][j]
    }

    pub fn values(&self) -> &[Vec<Scalar>] {
        &self.values
    }

    pub fn inverse_values(&self) -> &[Vec<Scalar>] {
        &self.inverse
    }

    /// Equal to `ε⊗ε`.
    pub fn is_trivial(&self, h: &HopfAlgebra) -> bool {
        self.values == TwoCocycle::trivial(h).values
    }
}

fn check_shape(h: &HopfAlgebra, values: &[Vec<Scalar>]) -> Result<()> {
    let dim = h.dim();
    if values.len() != dim || values.iter().any(|r| r.len() != dim) {
        return Err(Error::InvalidStructure(format!("cocycle matrix must be {dim}x{dim}")));
    }
    if values.iter().flatten().any(|s| s.field().n() != h.field().n()) {
        return Err(Error::FieldMismatch(values[0][0].field().n(), h.field().n()));
    }
    Ok(())
}

/// Convolution inverse of a linear form on `H`, solved in basis order.
fn form_inverse(h: &HopfAlgebra, gamma: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut out: Vec<Scalar> = Vec::with_capacity(h.dim());
    for b in 0..h.dim() {
        let (g, c) = h.left_lead(b)?;
        let mut rhs = h.counit(b).clone();
        for (l, r, coef) in h.coproduct(b) {
            if *r == b && *l == g {
                continue;
            }
            rhs -= &(&(coef * &gamma[*l]) * &out[*r]);
        }
        let lead = &c * &gamma[g];
        out.push(rhs.try_div(&lead).map_err(|_| Error::NotInvertible)?);
    }
    Ok(out)
}

/// `L(x, y) = Σ α(x1, y1) x2y2` for every basis pair.
fn left_products(h: &HopfAlgebra, alpha: &[Vec<Scalar>]) -> Vec<Vec<Element>> {
    let dim = h.dim();
    (0..dim)
        .map(|x| {
            (0..dim)
                .map(|y| {
                    let mut e = Element::new();
                    for (x1, x2, c) in h.coproduct(x) {
                        for (y1, y2, d) in h.coproduct(y) {
                            let f = &alpha[*x1][*y1] * &(c * d);
                            if f.is_zero() {
                                continue;
                            }
                            for (k, m) in &h.mult_table()[*x2][*y2] {
                                accumulate(&mut e, *k, &f * m);
                            }
                        }
                    }
                    e
                })
                .collect()
        })
        .collect()
}

/// `R(x, y) = Σ x1y1 α(x2, y2)` for every basis pair.
fn right_products(h: &HopfAlgebra, alpha: &[Vec<Scalar>]) -> Vec<Vec<Element>> {
    let dim = h.dim();
    (0..dim)
        .map(|x| {
            (0..dim)
                .map(|y| {
                    let mut e = Element::new();
                    for (x1, x2, c) in h.coproduct(x) {
                        for (y1, y2, d) in h.coproduct(y) {
                            let f = &alpha[*x2][*y2] * &(c * d);
                            if f.is_zero() {
                                continue;
                            }
                            for (k, m) in &h.mult_table()[*x1][*y1] {
                                accumulate(&mut e, *k, &f * m);
                            }
                        }
                    }
                    e
                })
                .collect()
        })
        .collect()
}

fn pair_against(e: &Element, alpha: &[Vec<Scalar>], z: usize, left: bool, field: &Field) -> Scalar {
    let mut acc = Scalar::zero(field);
    for (k, c) in e {
        let a = if left { &alpha[*k][z] } else { &alpha[z][*k] };
        if !a.is_zero() {
            acc += &(c * a);
        }
    }
    acc
}

/// Checks normalization `α(b,1) = α(1,b) = ε(b)` and the cocycle condition
/// `α(x1,y1)α(x2y2,z) = α(y1,z1)α(x,y2z2)` on all basis triples.
pub fn verify_cocycle_condition(h: &HopfAlgebra, alpha: &[Vec<Scalar>]) -> Report {
    let mut report = Report::new("cocycle");
    if let Err(e) = check_shape(h, alpha) {
        report.push("normalization", false, format!("{e}"));
        report.push("cocycle_condition", false, "not checked");
        return report;
    }
    let dim = h.dim();
    let unit = h.unit();
    let bad_norm = (0..dim).find(|&b| alpha[b][unit] != *h.counit(b) || alpha[unit][b] != *h.counit(b));
    report.push(
        "normalization",
        bad_norm.is_none(),
        bad_norm.map_or(String::new(), |b| format!("fails at {}", h.label(b))),
    );
    let left = left_products(h, alpha);
    let mut counterexample = None;
    'outer: for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                let lhs = pair_against(&left[x][y], alpha, z, true, h.field());
                let rhs = pair_against(&left[y][z], alpha, x, false, h.field());
                if lhs != rhs {
                    counterexample = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    report.push(
        "cocycle_condition",
        counterexample.is_none(),
        counterexample.map_or(String::new(), |(x, y, z)| {
            format!("fails at ({}, {}, {})", h.label(x), h.label(y), h.label(z))
        }),
    );
    report
}

/// Solves `Σ α(x1,y1)β(x2,y2) = ε(x)ε(y)`. Pairs are processed in
/// lexicographic order using the group-like lead terms of the coproduct;
/// without such an order the full linear system is solved.
pub fn convolution_inverse(h: &HopfAlgebra, alpha: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    check_shape(h, alpha)?;
    let leads: Result<Vec<_>> = (0..h.dim()).map(|b| h.left_lead(b)).collect();
    match leads {
        Ok(leads) => triangular_inverse(h, alpha, &leads),
        Err(_) => dense_inverse(h, alpha),
    }
}

fn triangular_inverse(h: &HopfAlgebra, alpha: &[Vec<Scalar>], leads: &[(usize, Scalar)]) -> Result<Vec<Vec<Scalar>>> {
    let dim = h.dim();
    let mut beta = vec![vec![h.zero(); dim]; dim];
    for x in 0..dim {
        for y in 0..dim {
            let (gx, cx) = &leads[x];
            let (gy, cy) = &leads[y];
            let mut rhs = h.counit(x) * h.counit(y);
            for (x1, x2, c) in h.coproduct(x) {
                for (y1, y2, d) in h.coproduct(y) {
                    if *x2 == x && *y2 == y {
                        continue;
                    }
                    let a = &alpha[*x1][*y1];
                    if a.is_zero() || beta[*x2][*y2].is_zero() {
                        continue;
                    }
                    rhs -= &(&(a * &(c * d)) * &beta[*x2][*y2]);
                }
            }
            let lead = &(cx * cy) * &alpha[*gx][*gy];
            beta[x][y] = rhs.try_div(&lead).map_err(|_| Error::NotInvertible)?;
        }
    }
    Ok(beta)
}

fn dense_inverse(h: &HopfAlgebra, alpha: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let dim = h.dim();
    let n = dim * dim;
    let mut rows = vec![vec![h.zero(); n]; n];
    let mut rhs = vec![h.zero(); n];
    for x in 0..dim {
        for y in 0..dim {
            let row = &mut rows[x * dim + y];
            for (x1, x2, c) in h.coproduct(x) {
                for (y1, y2, d) in h.coproduct(y) {
                    row[x2 * dim + y2] += &(&alpha[*x1][*y1] * &(c * d));
                }
            }
            rhs[x * dim + y] = h.counit(x) * h.counit(y);
        }
    }
    if linalg::rank(&rows, n) < n {
        return Err(Error::NotInvertible);
    }
    let sol = linalg::solve(&rows, &rhs, n, h.field()).ok_or(Error::NotInvertible)?;
    Ok(sol.chunks(dim).map(|c| c.to_vec()).collect())
}

/// Convolution product of two bilinear forms, `(α*β)(x,y) = Σ α(x1,y1)β(x2,y2)`.
pub fn convolve(h: &HopfAlgebra, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let dim = h.dim();
    let mut out = vec![vec![h.zero(); dim]; dim];
    for x in 0..dim {
        for y in 0..dim {
            let mut acc = h.zero();
            for (x1, x2, c) in h.coproduct(x) {
                for (y1, y2, d) in h.coproduct(y) {
                    let f = &a[*x1][*y1];
                    if f.is_zero() || b[*x2][*y2].is_zero() {
                        continue;
                    }
                    acc += &(&(f * &b[*x2][*y2]) * &(c * d));
                }
            }
            out[x][y] = acc;
        }
    }
    out
}

/// `Σ α(x1,y1) x2y2 = Σ x1y1 α(x2,y2)` for all basis pairs.
pub fn is_lazy(h: &HopfAlgebra, alpha: &TwoCocycle) -> bool {
    left_products(h, alpha.values()) == right_products(h, alpha.values())
}

/// The twisted comodule algebra `ᵅH` on the basis `u_b`, with product
/// `u_x u_y = α(x1,y1) u_{x2y2}` and coaction `δ(u_x) = u_{x1} ⊗ x2`.
#[derive(Clone, Debug)]
pub struct TwistedAlgebra {
    field: Field,
    labels: Vec<String>,
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl TwistedAlgebra {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::new();
        for (i, c) in a {
            for (j, d) in b {
                for (k, m) in &self.mult[*i][*j] {
                    accumulate(&mut out, *k, &(c * d) * m);
                }
            }
        }
        out
    }

    /// Checks unit, associativity and multiplicativity of the coaction.
    pub fn verify(&self, h: &HopfAlgebra) -> Report {
        let dim = self.mult.len();
        let mut report = Report::new("twisted algebra");
        let basis = |i: usize| Element::from([(i, Scalar::one(&self.field))]);
        let unit = h.unit();
        let unit_ok = (0..dim).all(|b| self.mul(&basis(unit), &basis(b)) == basis(b) && self.mul(&basis(b), &basis(unit)) == basis(b));
        report.push("unit", unit_ok, "");
        let mut assoc = None;
        'a: for x in 0..dim {
            for y in 0..dim {
                let xy = self.mul(&basis(x), &basis(y));
                for z in 0..dim {
                    let yz = self.mul(&basis(y), &basis(z));
                    if self.mul(&xy, &basis(z)) != self.mul(&basis(x), &yz) {
                        assoc = Some((x, y, z));
                        break 'a;
                    }
                }
            }
        }
        report.push(
            "associativity",
            assoc.is_none(),
            assoc.map_or(String::new(), |(x, y, z)| format!("fails at ({}, {}, {})", h.label(x), h.label(y), h.label(z))),
        );
        let coaction = |e: &Element| -> Tensor2 { h.coproduct_element(e) };
        let mut comod = None;
        'c: for x in 0..dim {
            for y in 0..dim {
                let lhs = coaction(&self.mul(&basis(x), &basis(y)));
                let mut rhs = Tensor2::new();
                for (a1, a2, c) in h.coproduct(x) {
                    for (b1, b2, d) in h.coproduct(y) {
                        let cd = c * d;
                        for (k, m) in &self.mult[*a1][*b1] {
                            for (l, n) in &h.mult_table()[*a2][*b2] {
                                accumulate(&mut rhs, (*k, *l), &(&cd * m) * n);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    comod = Some((x, y));
                    break 'c;
                }
            }
        }
        report.push(
            "coaction_multiplicative",
            comod.is_none(),
            comod.map_or(String::new(), |(x, y)| format!("fails at ({}, {})", h.label(x), h.label(y))),
        );
        report
    }

    /// Basis of the coinvariants `{a : δ(a) = a⊗1}`.
    pub fn coinvariants(&self, h: &HopfAlgebra) -> Vec<Element> {
        let dim = h.dim();
        // One equation per pair (k, l) of δ(a) - a⊗1.
        let mut rows = vec![vec![h.zero(); dim]; dim * dim];
        for b in 0..dim {
            for (l, r, c) in h.coproduct(b) {
                rows[l * dim + r][b] += c;
            }
            rows[b * dim + h.unit()][b] -= &h.one();
        }
        linalg::nullspace(&rows, dim, h.field())
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            .collect()
    }
}

impl BasisProduct for TwistedAlgebra {
    fn field(&self) -> &Field {
        &self.field
    }

    fn dim(&self) -> usize {
        self.mult.len()
    }

    fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }
}

fn to_table(products: Vec<Vec<Element>>) -> Vec<Vec<Vec<(usize, Scalar)>>> {
    products.into_iter().map(|row| row.into_iter().map(|e| e.into_iter().collect()).collect()).collect()
}

pub fn twisted_algebra(h: &HopfAlgebra, alpha: &TwoCocycle) -> TwistedAlgebra {
    TwistedAlgebra {
        field: h.field().clone(),
        labels: h.labels().iter().map(|l| format!("u[{l}]")).collect(),
        mult: to_table(left_products(h, alpha.values())),
    }
}

/// The Hopf algebra `L = ᵅHᵅ⁻¹`: the coalgebra of `H` with the product
/// `x*y = α(x1,y1) x2y2 α⁻¹(x3,y3)`. The family is kept when the product
/// does not change.
pub fn cotwist_hopf(h: &HopfAlgebra, alpha: &TwoCocycle) -> Result<HopfAlgebra> {
    let dim = h.dim();
    // B(u, v) = Σ u1v1 α⁻¹(u2, v2).
    let b = right_products(h, alpha.inverse_values());
    let mut mult = Vec::with_capacity(dim);
    for x in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for y in 0..dim {
            let mut e = Element::new();
            for (x1, x2, c) in h.coproduct(x) {
                for (y1, y2, d) in h.coproduct(y) {
                    let f = &alpha.values()[*x1][*y1] * &(c * d);
                    if f.is_zero() {
                        continue;
                    }
                    for (k, m) in &b[*x2][*y2] {
                        accumulate(&mut e, *k, &f * m);
                    }
                }
            }
            row.push(e);
        }
        mult.push(row);
    }
    let unchanged = (0..dim).all(|x| {
        (0..dim).all(|y| {
            let mut old = Element::new();
            for (k, c) in &h.mult_table()[x][y] {
                accumulate(&mut old, *k, c.clone());
            }
            old == mult[x][y]
        })
    });
    let family = if unchanged { h.family().clone() } else { Family::Generic };
    h.with_product(to_table(mult), family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;
    use crate::hopf::{e_algebra, group_algebra, taft, verify_hopf_axioms};
    use crate::make_field;

    fn sweedler_gamma(h: &HopfAlgebra, a: i64) -> Vec<Scalar> {
        let f = h.field();
        // γ(1) = 1, γ(x) = 1, γ(y) = a, γ(xy) = 0.
        [1, 1, a, 0].iter().map(|&v| Scalar::from_int(f, v)).collect()
    }

    #[test]
    fn trivial_cocycle() {
        let h = taft(3).unwrap();
        let a = TwoCocycle::trivial(&h);
        assert!(verify_cocycle_condition(&h, a.values()).all_passed());
        assert_eq!(convolution_inverse(&h, a.values()).unwrap(), a.values());
        assert!(is_lazy(&h, &a));
        let y = h.index_of("y").unwrap();
        let x = h.index_of("x").unwrap();
        assert!(a.value(x, y).is_zero());
        assert!(a.value(0, 0).is_one());
    }

    #[test]
    fn non_normalized_form_is_reported() {
        let h = taft(2).unwrap();
        let mut v = TwoCocycle::trivial(&h).values().to_vec();
        v[0][2] = Scalar::from_int(h.field(), 5);
        let r = verify_cocycle_condition(&h, &v);
        assert!(!r.get("normalization").unwrap().passed);
        assert!(matches!(TwoCocycle::new(&h, v), Err(Error::InvalidStructure(_))));
    }

    #[test]
    fn zero_form_is_not_invertible() {
        let h = taft(2).unwrap();
        let zero = vec![vec![h.zero(); 4]; 4];
        assert_eq!(convolution_inverse(&h, &zero), Err(Error::NotInvertible));
    }

    #[test]
    fn coboundary_on_sweedler_is_a_non_lazy_cocycle() {
        let h = taft(2).unwrap();
        let a = TwoCocycle::coboundary(&h, &sweedler_gamma(&h, 1)).unwrap();
        assert!(verify_cocycle_condition(&h, a.values()).all_passed());
        assert!(!is_lazy(&h, &a));
        let eps = TwoCocycle::trivial(&h);
        assert_eq!(convolve(&h, a.values(), a.inverse_values()), eps.values());
        assert_eq!(convolve(&h, a.inverse_values(), a.values()), eps.values());
        let l = cotwist_hopf(&h, &a).unwrap();
        assert!(verify_hopf_axioms(&l).all_passed());
    }

    #[test]
    fn dense_and_triangular_inverses_agree() {
        let h = taft(2).unwrap();
        let a = TwoCocycle::coboundary(&h, &sweedler_gamma(&h, 3)).unwrap();
        assert_eq!(dense_inverse(&h, a.values()).unwrap(), a.inverse_values());
    }

    #[test]
    fn twisted_algebra_by_trivial_cocycle_is_h() {
        for h in [taft(2).unwrap(), e_algebra(1).unwrap()] {
            let a = TwoCocycle::trivial(&h);
            let t = twisted_algebra(&h, &a);
            assert!(t.verify(&h).all_passed());
            for i in 0..h.dim() {
                for j in 0..h.dim() {
                    let mut e = Element::new();
                    for (k, c) in &h.mult_table()[i][j] {
                        accumulate(&mut e, *k, c.clone());
                    }
                    assert_eq!(t.mul(&h.basis_element(i), &h.basis_element(j)), e);
                }
            }
            let co = t.coinvariants(&h);
            assert_eq!(co.len(), 1);
            assert_eq!(co[0].keys().collect::<Vec<_>>(), [&0]);
        }
    }

    #[test]
    fn twisted_algebra_of_coboundary() {
        let h = taft(2).unwrap();
        let a = TwoCocycle::coboundary(&h, &sweedler_gamma(&h, 2)).unwrap();
        let t = twisted_algebra(&h, &a);
        assert!(t.verify(&h).all_passed());
        assert_eq!(t.coinvariants(&h).len(), 1);
    }

    #[test]
    fn group_cocycles_are_lazy_and_cotwist_trivially() {
        let g = cyclic(4);
        let f = make_field(1).unwrap();
        let h = group_algebra(&g, &f).unwrap();
        let gamma: Vec<Scalar> = [1, 2, -3, 5].iter().map(|&v| Scalar::from_int(&f, v)).collect();
        let a = TwoCocycle::coboundary(&h, &gamma).unwrap();
        assert!(!a.is_trivial(&h));
        assert!(is_lazy(&h, &a));
        let l = cotwist_hopf(&h, &a).unwrap();
        assert!(l.same_structure(&h));
        assert_eq!(l.family().name(), h.family().name());
    }

    #[test]
    fn cotwist_by_trivial_is_identity() {
        let h = e_algebra(2).unwrap();
        let l = cotwist_hopf(&h, &TwoCocycle::trivial(&h)).unwrap();
        assert!(l.same_structure(&h));
    }
}
