//! The concrete families: Taft algebras, `E(n)`, monomial Hopf algebras of
//! type I and group algebras.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{Family, HopfAlgebra, StructureConstants};
use crate::arith::{make_field, q_binomial, Field, Scalar};
use crate::error::{Error, Result};
use crate::group::{validate_monomial_datum, Character, FiniteGroup};

fn power(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// Label of `x^i y^j`, e.g. `1`, `x^2`, `xy^2`.
pub fn taft_label(i: usize, j: usize) -> String {
    let s = format!("{}{}", power("x", i), power("y", j));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// The Taft algebra of dimension `n²`: `x^n = 1`, `y^n = 0`, `yx = qxy`,
/// `Δ(x) = x⊗x`, `Δ(y) = 1⊗y + y⊗x`. Basis `x^i y^j` at index `j·n + i`.
pub fn taft(n: u32) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::Range(format!("taft({n}) needs n >= 2")));
    }
    let field = make_field(n)?;
    let n = n as usize;
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let mut labels = vec![String::new(); dim];
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    let mut comult = vec![Vec::new(); dim];
    let mut counit = vec![Scalar::zero(&field); dim];
    for j in 0..n {
        for i in 0..n {
            let b = idx(i, j);
            labels[b] = taft_label(i, j);
            if j == 0 {
                counit[b] = Scalar::one(&field);
            }
            for r in 0..=j {
                let c = q_binomial(j as i64, r as i64, &field)?;
                comult[b].push((idx(i, r), idx((i + r) % n, j - r), c));
            }
            for d in 0..n - j {
                for c in 0..n {
                    // x^i y^j · x^c y^d = q^{jc} x^{i+c} y^{j+d}
                    mult[b][idx(c, d)] = vec![(idx((i + c) % n, j + d), Scalar::q_pow(&field, (j * c) as i64))];
                }
            }
        }
    }
    let sc = StructureConstants { labels, mult, comult, counit, antipode: None, grouplikes: (0..n).collect() };
    HopfAlgebra::from_constants(&field, sc, Family::Taft(n as u32))
}

/// Subsets of `{1..n}` as bitmasks, ordered by size and then by mask.
pub fn subset_order(n: u32) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks
}

fn subset_label(mask: u32) -> String {
    (0..32).filter(|k| mask >> k & 1 == 1).map(|k| format!("y{}", k + 1)).collect()
}

/// `y_I y_J` as a sign, or `None` when `I ∩ J ≠ ∅`.
fn exterior_sign(i: u32, j: u32) -> Option<bool> {
    if i & j != 0 {
        return None;
    }
    // pairs a ∈ I, b ∈ J with a > b
    let mut inversions = 0;
    for b in 0..32 {
        if j >> b & 1 == 1 {
            inversions += (i >> (b + 1)).count_ones();
        }
    }
    Some(inversions % 2 == 1)
}

/// The exponent `m_J`: for each `i ∈ J`, the number of `j ∈ I \ J` below it.
pub fn coproduct_sign_exponent(j: u32, rest: u32) -> u32 {
    (0..32).filter(|k| j >> k & 1 == 1).map(|k| (rest & ((1u32 << k) - 1)).count_ones()).sum()
}

/// The algebra `E(n)` of dimension `2^{n+1}` over `Q`: `x² = 1`, `y_i² = 0`,
/// `x y_i = -y_i x`, `y_i y_j = -y_j y_i`, `Δ(y_i) = 1⊗y_i + y_i⊗x`.
/// Basis `x^a y_I` at index `2·pos(I) + a`, subsets ordered by size.
pub fn e_algebra(n: u32) -> Result<HopfAlgebra> {
    if !(1..=12).contains(&n) {
        return Err(Error::Range(format!("e_algebra({n}) needs 1 <= n <= 12")));
    }
    let field = make_field(2)?;
    let order = subset_order(n);
    let mut pos = vec![0usize; order.len()];
    for (p, &m) in order.iter().enumerate() {
        pos[m as usize] = p;
    }
    let dim = 2 * order.len();
    let idx = |a: usize, mask: u32| 2 * pos[mask as usize] + a;
    let sign = |neg: bool| if neg { Scalar::from_int(&field, -1) } else { Scalar::one(&field) };
    let mut labels = vec![String::new(); dim];
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    let mut comult = vec![Vec::new(); dim];
    let mut counit = vec![Scalar::zero(&field); dim];
    for &mi in &order {
        for a in 0..2 {
            let b = idx(a, mi);
            let ys = subset_label(mi);
            labels[b] = match (a, ys.is_empty()) {
                (0, true) => "1".into(),
                (1, true) => "x".into(),
                (0, false) => ys,
                _ => format!("x{ys}"),
            };
            if mi == 0 {
                counit[b] = Scalar::one(&field);
            }
            for &mj in &order {
                for c in 0..2 {
                    if let Some(neg) = exterior_sign(mi, mj) {
                        // y_I x^c = (-1)^{c|I|} x^c y_I
                        let flip = c == 1 && mi.count_ones() % 2 == 1;
                        mult[b][idx(c, mj)] = vec![(idx((a + c) % 2, mi | mj), sign(neg ^ flip))];
                    }
                }
            }
            // J runs over the subsets of I
            let mut j = mi;
            loop {
                let rest = mi & !j;
                let neg = coproduct_sign_exponent(j, rest) % 2 == 1;
                let xpow = (j.count_ones() as usize + a) % 2;
                comult[b].push((idx(a, j), idx(xpow, rest), sign(neg)));
                if j == 0 {
                    break;
                }
                j = (j - 1) & mi;
            }
            comult[b].sort_by_key(|t| (t.0, t.1));
        }
    }
    let sc = StructureConstants { labels, mult, comult, counit, antipode: None, grouplikes: vec![0, 1] };
    HopfAlgebra::from_constants(&field, sc, Family::E(n))
}

/// The monomial Hopf algebra of type I for a datum `(G, x, χ)` over `Q(q)`,
/// `q` of order `n = ord(x)`: basis `g y^i`, `y^n = 0`, `yg = χ(g)gy`,
/// `Δ(y) = 1⊗y + y⊗x`. Basis `g y^i` at index `i·|G| + g`.
pub fn monomial_type_i(group: &FiniteGroup, x: usize, chi: &Character, field: &Field) -> Result<HopfAlgebra> {
    validate_monomial_datum(group, x, chi, field)?;
    let n = field.n() as usize;
    let order = group.order();
    let dim = n * order;
    let idx = |g: usize, i: usize| i * order + g;
    let mut labels = vec![String::new(); dim];
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    let mut comult = vec![Vec::new(); dim];
    let mut counit = vec![Scalar::zero(field); dim];
    let chi_pow: Vec<Vec<Scalar>> =
        (0..order).map(|h| (0..n).map(|a| chi.value(h).pow(a as i64).expect("root of unity")).collect()).collect();
    for i in 0..n {
        for g in 0..order {
            let b = idx(g, i);
            labels[b] = match (g, i) {
                (_, 0) => group.label(g).to_string(),
                (0, _) => power("y", i),
                _ => format!("{}{}", group.label(g), power("y", i)),
            };
            if i == 0 {
                counit[b] = Scalar::one(field);
            }
            for r in 0..=i {
                let c = q_binomial(i as i64, r as i64, field)?;
                comult[b].push((idx(g, r), idx(group.mul(g, group.pow(x, r as i64)), i - r), c));
            }
            for d in 0..n - i {
                for h in 0..order {
                    // g y^i · h y^d = χ(h)^i gh y^{i+d}
                    mult[b][idx(h, d)] = vec![(idx(group.mul(g, h), i + d), chi_pow[h][i].clone())];
                }
            }
        }
    }
    let sc = StructureConstants { labels, mult, comult, counit, antipode: None, grouplikes: (0..order).collect() };
    let family = Family::Monomial { group: group.clone(), x, chi: chi.clone() };
    HopfAlgebra::from_constants(field, sc, family)
}

/// The group algebra `kG` with `Δ(g) = g⊗g`, `ε(g) = 1`.
pub fn group_algebra(group: &FiniteGroup, field: &Field) -> Result<HopfAlgebra> {
    let order = group.order();
    let one = Scalar::one(field);
    let mult = (0..order).map(|a| (0..order).map(|b| vec![(group.mul(a, b), one.clone())]).collect()).collect();
    let sc = StructureConstants {
        labels: group.labels().to_vec(),
        mult,
        comult: (0..order).map(|g| vec![(g, g, one.clone())]).collect(),
        counit: vec![one.clone(); order],
        antipode: None,
        grouplikes: (0..order).collect(),
    };
    HopfAlgebra::from_constants(field, sc, Family::Group(group.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;
    use crate::hopf::{accumulate, Element, Tensor2};

    fn coproduct(h: &HopfAlgebra, label: &str) -> Tensor2 {
        let b = h.index_of(label).unwrap();
        h.coproduct_element(&h.basis_element(b))
    }

    #[test]
    fn sweedler_shape() {
        let h = taft(2).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.labels(), ["1", "x", "y", "xy"]);
        assert_eq!(h.grouplikes(), [0, 1]);
    }

    #[test]
    fn taft_relations() {
        let h = taft(3).unwrap();
        let f = h.field().clone();
        let (y, x, xy) = (h.index_of("y").unwrap(), h.index_of("x").unwrap(), h.index_of("xy").unwrap());
        assert_eq!(h.product_term(y, x), Some((xy, &Scalar::q(&f))));
        let y2 = h.index_of("y^2").unwrap();
        assert!(h.mult_table()[y2][y].is_empty());
        let mut expect = Tensor2::new();
        let one_plus_q = &Scalar::one(&f) + &Scalar::q(&f);
        accumulate(&mut expect, (0, y2), Scalar::one(&f));
        accumulate(&mut expect, (y, xy), one_plus_q);
        accumulate(&mut expect, (y2, h.index_of("x^2").unwrap()), Scalar::one(&f));
        assert_eq!(coproduct(&h, "y^2"), expect);
    }

    #[test]
    fn e2_coproduct_signs() {
        let h = e_algebra(2).unwrap();
        let f = h.field().clone();
        let i = |l: &str| h.index_of(l).unwrap();
        let mut expect = Tensor2::new();
        accumulate(&mut expect, (0, i("y1y2")), Scalar::one(&f));
        accumulate(&mut expect, (i("y1"), i("xy2")), Scalar::one(&f));
        accumulate(&mut expect, (i("y2"), i("xy1")), Scalar::from_int(&f, -1));
        accumulate(&mut expect, (i("y1y2"), 0), Scalar::one(&f));
        assert_eq!(coproduct(&h, "y1y2"), expect);
        assert_eq!(h.product_term(i("y2"), i("y1")), Some((i("y1y2"), &Scalar::from_int(&f, -1))));
    }

    // the counting formula for the signs against Δ(x^a)Δ(y_i1)...Δ(y_ir)
    #[test]
    fn e_signs_match_expansion() {
        for n in 1..=4 {
            let h = e_algebra(n).unwrap();
            for b in 0..h.dim() {
                let a = b % 2;
                let mask = subset_order(n)[b / 2];
                let mut acc = coproduct(&h, if a == 1 { "x" } else { "1" });
                for k in 0..n {
                    if mask >> k & 1 == 1 {
                        acc = h.mul_tensor2(&acc, &coproduct(&h, &format!("y{}", k + 1)));
                    }
                }
                assert_eq!(acc, h.coproduct_element(&h.basis_element(b)), "{}", h.label(b));
            }
        }
    }

    #[test]
    fn monomial_over_cyclic_is_taft() {
        for n in 2..=4u32 {
            let f = make_field(n).unwrap();
            let g = cyclic(n as usize);
            let chi = Character::from_exponents(&f, &(0..n as i64).collect::<Vec<_>>());
            let m = monomial_type_i(&g, 1, &chi, &f).unwrap();
            let t = taft(n).unwrap();
            assert_eq!(m.mult_table(), t.mult_table());
            for b in 0..t.dim() {
                assert_eq!(m.coproduct(b), t.coproduct(b));
            }
            assert_eq!(m.antipode_matrix(), t.antipode_matrix());
        }
    }

    #[test]
    fn monomial_antipode_of_y() {
        let f = make_field(3).unwrap();
        let g = cyclic(3);
        let chi = Character::from_exponents(&f, &[0, 1, 2]);
        let h = monomial_type_i(&g, 1, &chi, &f).unwrap();
        let y = h.index_of("y").unwrap();
        let x2 = h.index_of("a^2").unwrap();
        // S(y) = -y x^{n-1}
        let expect: Element = h.mul(&h.basis_element(y), &h.basis_element(x2)).into_iter().map(|(k, c)| (k, -c)).collect();
        assert_eq!(h.antipode(y), expect);
    }

    #[test]
    fn group_antipode_inverts() {
        let g = crate::group::symmetric(3);
        let h = group_algebra(&g, &make_field(1).unwrap()).unwrap();
        for a in 0..6 {
            assert_eq!(h.antipode(a), h.basis_element(g.inv(a)));
        }
    }

    #[test]
    fn range_errors() {
        assert!(matches!(taft(1), Err(Error::Range(_))));
        assert!(matches!(e_algebra(0), Err(Error::Range(_))));
    }
}
