//! Exhaustive verification of the Hopf algebra axioms on the basis.

use alloc::format;
use alloc::string::String;

use super::{accumulate, Element, HopfAlgebra, Tensor2, Tensor3};
use crate::report::Report;

/// Runs every axiom on all basis elements (pairs, triples where needed) and
/// records the first counterexample of each failing check.
pub fn verify_hopf_axioms(h: &HopfAlgebra) -> Report {
    let mut report = Report::new(format!("Hopf axioms for {}", h.family().tag()));
    let dim = h.dim();
    let basis: alloc::vec::Vec<Element> = (0..dim).map(|i| h.basis_element(i)).collect();
    let coproducts: alloc::vec::Vec<Tensor2> = basis.iter().map(|b| h.coproduct_element(b)).collect();

    let mut unit = None;
    for i in 0..dim {
        if h.mul(&basis[0], &basis[i]) != basis[i] || h.mul(&basis[i], &basis[0]) != basis[i] {
            unit = Some(format!("1·{0} or {0}·1", h.label(i)));
            break;
        }
    }
    push(&mut report, "unit", unit);

    let mut assoc = None;
    'outer: for i in 0..dim {
        for j in 0..dim {
            let ij = h.mul(&basis[i], &basis[j]);
            for k in 0..dim {
                let jk = h.mul(&basis[j], &basis[k]);
                if h.mul(&ij, &basis[k]) != h.mul(&basis[i], &jk) {
                    assoc = Some(format!("({}, {}, {})", h.label(i), h.label(j), h.label(k)));
                    break 'outer;
                }
            }
        }
    }
    push(&mut report, "associativity", assoc);

    let mut coassoc = None;
    for (b, d) in coproducts.iter().enumerate() {
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for (&(l, r), c) in d {
            for (&(l1, l2), c1) in &coproducts[l] {
                accumulate(&mut left, (l1, l2, r), c * c1);
            }
            for (&(r1, r2), c2) in &coproducts[r] {
                accumulate(&mut right, (l, r1, r2), c * c2);
            }
        }
        if left != right {
            coassoc = Some(String::from(h.label(b)));
            break;
        }
    }
    push(&mut report, "coassociativity", coassoc);

    let mut counit = None;
    for (b, d) in coproducts.iter().enumerate() {
        let mut left = Element::new();
        let mut right = Element::new();
        for (&(l, r), c) in d {
            accumulate(&mut left, r, c * h.counit(l));
            accumulate(&mut right, l, c * h.counit(r));
        }
        if left != basis[b] || right != basis[b] {
            counit = Some(String::from(h.label(b)));
            break;
        }
    }
    push(&mut report, "counit", counit);

    let mut comult_mult = None;
    let mut counit_mult = None;
    for i in 0..dim {
        for j in 0..dim {
            let ij = h.mul(&basis[i], &basis[j]);
            if comult_mult.is_none() && h.coproduct_element(&ij) != h.mul_tensor2(&coproducts[i], &coproducts[j]) {
                comult_mult = Some(format!("({}, {})", h.label(i), h.label(j)));
            }
            if counit_mult.is_none() && h.counit_element(&ij) != h.counit(i) * h.counit(j) {
                counit_mult = Some(format!("({}, {})", h.label(i), h.label(j)));
            }
        }
    }
    push(&mut report, "comult_multiplicative", comult_mult);
    push(&mut report, "counit_multiplicative", counit_mult);

    let antipodes: alloc::vec::Vec<Element> = (0..dim).map(|i| h.antipode(i)).collect();
    let mut antipode = None;
    for (b, d) in coproducts.iter().enumerate() {
        let mut left = Element::new();
        let mut right = Element::new();
        for (&(l, r), c) in d {
            for (k, v) in h.mul(&antipodes[l], &basis[r]) {
                accumulate(&mut left, k, &v * c);
            }
            for (k, v) in h.mul(&basis[l], &antipodes[r]) {
                accumulate(&mut right, k, &v * c);
            }
        }
        let mut expect = Element::new();
        accumulate(&mut expect, 0, h.counit(b).clone());
        if left != expect || right != expect {
            antipode = Some(String::from(h.label(b)));
            break;
        }
    }
    push(&mut report, "antipode", antipode);
    report
}

fn push(report: &mut Report, name: &str, failure: Option<String>) {
    match failure {
        None => report.push(name, true, ""),
        Some(at) => report.push(name, false, format!("fails at {at}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{e_algebra, taft, Family, StructureConstants};
    use crate::Scalar;

    #[test]
    fn families_pass() {
        for n in 2..=4 {
            let r = verify_hopf_axioms(&taft(n).unwrap());
            assert!(r.all_passed(), "{r}");
        }
        for n in 1..=3 {
            let r = verify_hopf_axioms(&e_algebra(n).unwrap());
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn corrupted_table_is_caught() {
        let h = taft(3).unwrap();
        let mut sc: StructureConstants = h.structure_constants();
        let (y, x) = (h.index_of("y").unwrap(), h.index_of("x").unwrap());
        // yx = xy instead of qxy
        sc.mult[y][x][0].1 = Scalar::one(h.field());
        let bad = HopfAlgebra::from_constants(h.field(), sc, Family::Generic).unwrap();
        let r = verify_hopf_axioms(&bad);
        assert!(!r.all_passed());
        assert!(!r.get("comult_multiplicative").unwrap().passed || !r.get("associativity").unwrap().passed);
    }
}
