use proptest::prelude::*;

use hopfgen_core::cocycle::{twisted_algebra, TwoCocycle};
use hopfgen_core::generic_base::{decompose, decompose_with_residue, gamma_generators, torus_lifts, verify_sigma};
use hopfgen_core::group::{cyclic, direct_product, Character};
use hopfgen_core::hopf::{e_algebra, monomial_type_i, taft, verify_hopf_axioms};
use hopfgen_core::identities::{parse_ncpoly, Mu, NCPoly};
use hopfgen_core::lattice::{hnf, IntMatrix};
use hopfgen_core::tring::{hab_degree, TElement, TMonomial};
use hopfgen_core::{make_field, HopfAlgebra, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

fn scalar(n: u32, coeffs: &[i64]) -> Scalar {
    let f = make_field(n).unwrap();
    let poly: Vec<BigRational> = coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect();
    Scalar::from_poly(&f, &poly)
}

fn klein_monomial() -> HopfAlgebra {
    let g = direct_product(&cyclic(2), &cyclic(2));
    let f = make_field(2).unwrap();
    let x = g.index_of("(a,e)").unwrap();
    let chi = Character::from_exponents(&f, &[0, 0, 1, 1]);
    monomial_type_i(&g, x, &chi, &f).unwrap()
}

fn instances() -> Vec<HopfAlgebra> {
    vec![
        taft(2).unwrap(),
        taft(3).unwrap(),
        taft(4).unwrap(),
        e_algebra(1).unwrap(),
        e_algebra(2).unwrap(),
        e_algebra(3).unwrap(),
        klein_monomial(),
    ]
}

/// A Laurent monomial with negative exponents only on group-likes.
fn random_monomial(h: &HopfAlgebra, raw: &[i32]) -> TMonomial {
    TMonomial::from_pairs(
        raw.iter().enumerate().take(h.dim()).map(|(b, &e)| (b, if h.is_grouplike(b) { e } else { e.abs() })),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_operations(n in 1u32..=8, a in prop::collection::vec(-5i64..=5, 8), b in prop::collection::vec(-5i64..=5, 8), c in prop::collection::vec(-5i64..=5, 8)) {
        let (a, b, c) = (scalar(n, &a), scalar(n, &b), scalar(n, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(Scalar::parse(&a.to_text(), a.field()).unwrap(), a);
    }

    #[test]
    fn hermite_form(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 1..5)) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = IntMatrix::from_i64(&refs);
        let (h, u) = hnf(&m);
        prop_assert!(h.is_hnf());
        prop_assert_eq!(u.mul(&m), h.clone());
        prop_assert_eq!(u.det().abs(), BigInt::from(1));
        prop_assert_eq!(hnf(&h).0, h);
    }

    #[test]
    fn decomposition_round_trip(which in 0usize..7, raw in prop::collection::vec(-4i32..=4, 16)) {
        let h = &instances()[which];
        let p = gamma_generators(h).unwrap();
        let lifts = torus_lifts(h).unwrap();
        let m = random_monomial(h, &raw);
        let w = decompose_with_residue(h, &p, &m).unwrap();
        prop_assert_eq!(w.remultiply(&p, &lifts), m.clone());
        let grading = h.hab_grading().unwrap();
        for (k, order) in w.residue.iter().zip(grading.0.factors()) {
            prop_assert!(0 <= *k && (*k as u64) < *order);
        }
        // strip the residue to get a degree-zero monomial
        let mut zero = m;
        for (&g, &k) in lifts.iter().zip(&w.residue) {
            zero = zero.mul(&TMonomial::power(g, -(k as i32)));
        }
        prop_assert!(grading.0.is_zero(&hab_degree(&grading, &zero)));
        let w0 = decompose(h, &p, &zero).unwrap();
        prop_assert!(w0.residue.iter().all(|&k| k == 0));
        prop_assert_eq!(w0.remultiply(&p, &lifts), zero);
    }

    #[test]
    fn laurent_ring_laws(raw in prop::collection::vec((prop::collection::vec(-2i32..=2, 4), -3i64..=3), 1..4 * 3)) {
        let h = taft(2).unwrap();
        let f = h.field().clone();
        let elems: Vec<TElement> = raw
            .chunks(3)
            .map(|chunk| chunk.iter().fold(TElement::zero(&f), |acc, (e, c)| {
                acc.add(&TElement::term(random_monomial(&h, e), Scalar::from_int(&f, *c)))
            }))
            .collect();
        let get = |i: usize| elems.get(i).cloned().unwrap_or_else(|| TElement::one(&f));
        let (a, b, c) = (get(0), get(1), get(2));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn mu_is_multiplicative(w1 in prop::collection::vec(0usize..9, 0..4), w2 in prop::collection::vec(0usize..9, 0..4), c in -3i64..=3) {
        let h = taft(3).unwrap();
        let f = h.field().clone();
        let mu = Mu::trivial(&h);
        let p = NCPoly::word(w1.clone(), Scalar::from_int(&f, c)).add(&NCPoly::var(4, &f));
        let q = NCPoly::word(w2, Scalar::q(&f));
        let lhs = mu.apply(&p.mul(&q)).unwrap();
        let rhs = mu.apply(&p).unwrap().mul(&mu.apply(&q).unwrap(), mu.algebra());
        prop_assert_eq!(lhs, rhs);
        prop_assert!(mu.intertwines_coaction(&h, &w1).unwrap());
    }

    #[test]
    fn ncpoly_text_round_trip(words in prop::collection::vec((prop::collection::vec(0usize..8, 0..4), -4i64..=4), 0..5)) {
        let h = e_algebra(2).unwrap();
        let f = h.field().clone();
        let p = words.iter().fold(NCPoly::zero(&f), |acc, (w, c)| acc.add(&NCPoly::word(w.clone(), Scalar::from_int(&f, *c))));
        prop_assert_eq!(parse_ncpoly(&p.text(h.labels()), &h).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    // A coboundary of a random normalized form is a cocycle; its twisted
    // algebra is associative and its generic cocycle passes every check.
    #[test]
    fn coboundaries_on_sweedler(values in prop::collection::vec(-4i64..=4, 3), d in 1i64..=3) {
        let h = taft(2).unwrap();
        let f = h.field().clone();
        let mut gamma = vec![Scalar::one(&f)];
        gamma.push(Scalar::ratio(&f, values[0].abs() + 1, d));
        gamma.push(Scalar::from_int(&f, values[1]));
        gamma.push(Scalar::ratio(&f, values[2], d));
        let alpha = TwoCocycle::coboundary(&h, &gamma).unwrap();
        prop_assert!(TwoCocycle::new(&h, alpha.values().to_vec()).is_ok());
        prop_assert!(twisted_algebra(&h, &alpha).verify(&h).all_passed());
        prop_assert!(verify_sigma(&h, &alpha).all_passed());
    }
}

#[test]
fn every_generator_has_degree_zero() {
    for h in instances() {
        let p = gamma_generators(&h).unwrap();
        let grading = h.hab_grading().unwrap();
        for m in p.generator_set() {
            assert!(grading.0.is_zero(&hab_degree(&grading, &m)), "{}", m.text(h.labels()));
        }
    }
}

#[test]
fn family_axioms() {
    for h in instances() {
        let r = verify_hopf_axioms(&h);
        assert!(r.all_passed(), "{r}");
    }
}
