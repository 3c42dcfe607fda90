//! The morphism `S(t_H)_Θ → k[H_ab]` that certifies a presentation of `B_H`:
//! it kills `B⁺`, is onto, and `B` is a left coideal.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::report::Report;
use crate::tring::{hab_degree, s_coproduct, TElement, TMonomial};

use super::{decompose, gamma_generators};

pub fn quotient_presentation_check(h: &HopfAlgebra) -> Result<Report> {
    let p = gamma_generators(h)?;
    let grading = h.hab_grading()?;
    let (group, degs) = &grading;
    let f = h.field();
    let mut report = Report::new(format!("quotient presentation of {}", h.family().tag()));

    // t_b ↦ 0 off the group-likes, t_g ↦ ḡ; `None` is the zero element.
    let image = |m: &TMonomial| -> Option<Vec<u64>> {
        if m.pairs().any(|(b, _)| !h.is_grouplike(b)) {
            None
        } else {
            Some(hab_degree(&grading, m))
        }
    };
    let counit = |m: &TMonomial| -> bool { m.pairs().all(|(b, _)| h.is_grouplike(b)) };

    let gens: Vec<TMonomial> = p.generator_set().into_iter().collect();
    let mut bad = None;
    for m in &gens {
        // image(γ - ε(γ)·1) = image(γ) - ε(γ)·[0]
        let killed = match (image(m), counit(m)) {
            (None, false) => true,
            (Some(d), true) => group.is_zero(&d),
            _ => false,
        };
        if !killed {
            bad = Some(m.text(h.labels()));
            break;
        }
    }
    report.push("kills_b_plus", bad.is_none(), bad.unwrap_or_default());

    let hit: BTreeSet<Vec<u64>> = h.grouplikes().iter().map(|&g| degs[g].clone()).collect();
    let all: BTreeSet<Vec<u64>> = group.elements().into_iter().collect();
    report.push(
        "surjective",
        hit == all,
        format!("quotient k[H_ab] with invariant factors {:?}", group.factors()),
    );

    let mut bad = None;
    'gens: for m in &gens {
        let delta = s_coproduct(h, &TElement::monomial(m.clone(), f))?;
        for (_, right) in delta.keys() {
            if decompose(h, &p, right).is_err() {
                bad = Some(format!("{} has right leg {}", m.text(h.labels()), right.text(h.labels())));
                break 'gens;
            }
        }
    }
    report.push("left_coideal", bad.is_none(), bad.unwrap_or_default());

    let plain_grouplike = p.plain.iter().find(|m| counit(m));
    report.push(
        "grouplikes_closed_under_inverse",
        plain_grouplike.is_none(),
        plain_grouplike.map_or_else(String::new, |m| m.text(h.labels())),
    );
    if p.special {
        report.push("special_presentation", true, "hard-coded presentation for n = 2");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{e_algebra, taft};

    #[test]
    fn passes_for_taft_and_e() {
        for h in [taft(2).unwrap(), taft(3).unwrap(), e_algebra(2).unwrap()] {
            let r = quotient_presentation_check(&h).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }
}
