//! Values checked against oracles computed independently in this file:
//! floating-point embeddings of the cyclotomic fields, hand-built
//! permutation groups, and exact Gaussian elimination over Q.

use std::collections::BTreeSet;

use hopfgen_core::arith::{q_binomial, q_int};
use hopfgen_core::generic_base::{decompose, gamma_generators, jacobian_check, torus_lifts};
use hopfgen_core::group::{alternating, cyclic, semidirect_product, symmetric, FiniteGroup};
use hopfgen_core::hopf::{e_algebra, group_algebra, taft};
use hopfgen_core::identities::{parse_ncpoly, Mu};
use hopfgen_core::lattice::{hnf, y_group, IntMatrix};
use hopfgen_core::tring::{hab_degree, TMonomial, TRing};
use hopfgen_core::{make_field, HopfAlgebra, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Copy, Debug)]
struct C(f64, f64);

impl C {
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn root(n: u32) -> C {
        let a = 2.0 * std::f64::consts::PI / n as f64;
        C(a.cos(), a.sin())
    }
    fn close(self, o: C) -> bool {
        (self.0 - o.0).abs() < 1e-9 && (self.1 - o.1).abs() < 1e-9
    }
}

/// The image of a scalar under `q ↦ e^{2πi/n}`.
fn embed(s: &Scalar) -> C {
    let z = C::root(s.field().n());
    let mut acc = C(0.0, 0.0);
    let mut pw = C(1.0, 0.0);
    for c in s.coeffs() {
        acc = acc.add(pw.mul(C(c.to_f64().unwrap(), 0.0)));
        pw = pw.mul(z);
    }
    acc
}

#[test]
fn cyclotomic_values_match_the_complex_embedding() {
    let f = make_field(3).unwrap();
    let strings: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    assert_eq!(strings, ["1", "1", "1"]);
    let z = C::root(3);
    let one_plus_q = &Scalar::one(&f) + &Scalar::q(&f);
    let inv = one_plus_q.inv().unwrap();
    // 1/(1+ζ) = -ζ for a primitive cube root of unity
    assert!(embed(&inv).close(C(-z.0, -z.1)));
    assert_eq!(inv, -Scalar::q(&f));
    assert!(embed(&q_binomial(2, 1, &f).unwrap()).close(C(1.0, 0.0).add(z)));
    assert!(q_int(3, &f).is_zero());
}

#[test]
fn q_binomials_match_the_product_formula() {
    for n in 2..=7u32 {
        let f = make_field(n).unwrap();
        let z = C::root(n);
        let qint = |k: u32| (0..k).fold((C(0.0, 0.0), C(1.0, 0.0)), |(s, p), _| (s.add(p), p.mul(z))).0;
        let qfact = |k: u32| (1..=k).fold(C(1.0, 0.0), |acc, i| acc.mul(qint(i)));
        for j in 0..n {
            for r in 0..=j {
                let num = qfact(j);
                let den = qfact(r).mul(qfact(j - r));
                let got = embed(&q_binomial(j as i64, r as i64, &f).unwrap());
                // compare got·den with num to avoid complex division
                assert!(got.mul(den).close(num), "n={n} j={j} r={r}");
            }
        }
    }
}

fn permutation_group(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    fn perms(prefix: Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix);
            return;
        }
        for k in 0..n {
            if !prefix.contains(&k) {
                let mut p = prefix.clone();
                p.push(k);
                perms(p, n, out);
            }
        }
    }
    let mut all = Vec::new();
    perms(Vec::new(), n, &mut all);
    let index = |p: &Vec<usize>| all.iter().position(|q| q == p).unwrap();
    let table = all.iter().map(|a| all.iter().map(|b| index(&b.iter().map(|&i| a[i]).collect())).collect()).collect();
    (all.clone(), table)
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut v: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    v.sort();
    v
}

/// Size of the commutator subgroup by closing the set of commutators.
fn commutator_closure(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    let e = (0..n).find(|&a| (0..n).all(|b| table[a][b] == b)).unwrap();
    let inv = |a: usize| (0..n).find(|&b| table[a][b] == e).unwrap();
    let mut set: BTreeSet<usize> = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            set.insert(table[table[table[a][b]][inv(a)]][inv(b)]);
        }
    }
    loop {
        let next: BTreeSet<usize> = set.iter().flat_map(|&a| set.iter().map(move |&b| (a, b))).map(|(a, b)| table[a][b]).collect();
        if next.is_subset(&set) {
            return set.len();
        }
        set.extend(next);
    }
}

#[test]
fn groups_against_permutation_oracles() {
    let (perms, table) = permutation_group(3);
    let s3 = symmetric(3);
    assert_eq!(s3.order(), perms.len());
    assert!(!s3.is_abelian());
    let oracle = FiniteGroup::from_table((0..6).map(|i| i.to_string()).collect(), table.clone()).unwrap();
    assert!(s3.find_isomorphism(&oracle).is_some());
    assert_eq!(order_profile(&s3), order_profile(&oracle));
    // |S3_ab| = 6 / |A3|
    assert_eq!(6 / commutator_closure(&table), 2);
    assert_eq!(s3.abelianization().group.order(), 2);

    let (_, t4) = permutation_group(4);
    assert_eq!(24 / commutator_closure(&t4), 2);
    let a4 = alternating(4);
    let s4 = FiniteGroup::from_table((0..24).map(|i| i.to_string()).collect(), t4).unwrap();
    assert_eq!(order_profile(&symmetric(4)), order_profile(&s4));
    let sd = semidirect_product(&a4, &cyclic(2), &a4_conjugation(&a4)).unwrap();
    assert_eq!(sd.order(), 24);
    assert!(sd.find_isomorphism(&s4).is_some());
}

/// The action of `Z/2` on `A4` by conjugation with the transposition
/// `(1 2)`, transported from the permutation model.
fn a4_conjugation(a4: &FiniteGroup) -> Vec<Vec<usize>> {
    let (perms, table) = permutation_group(4);
    let sign = |p: &Vec<usize>| {
        let mut s = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if p[i] > p[j] {
                    s += 1;
                }
            }
        }
        s % 2
    };
    let even: Vec<usize> = (0..24).filter(|&i| sign(&perms[i]) == 0).collect();
    let model = FiniteGroup::from_table(
        (0..12).map(|i| i.to_string()).collect(),
        even.iter().map(|&a| even.iter().map(|&b| even.iter().position(|&c| c == table[a][b]).unwrap()).collect()).collect(),
    )
    .unwrap();
    let iso = a4.find_isomorphism(&model).unwrap();
    let back = |m: usize| iso.iter().position(|&k| k == m).unwrap();
    let t = perms.iter().position(|p| *p == vec![1, 0, 2, 3]).unwrap();
    let conj: Vec<usize> = (0..12)
        .map(|g| {
            let s = even[iso[g]];
            let c = table[table[t][s]][t];
            back(even.iter().position(|&k| k == c).unwrap())
        })
        .collect();
    vec![(0..12).collect(), conj]
}

#[test]
fn taft_coproduct_of_y_squared() {
    let h = taft(3).unwrap();
    let f = h.field().clone();
    let i = |l: &str| h.index_of(l).unwrap();
    let mut got: Vec<(usize, usize, Scalar)> = h.coproduct(i("y^2")).to_vec();
    got.sort_by_key(|t| (t.0, t.1));
    let one = Scalar::one(&f);
    let mut expect = vec![(0, i("y^2"), one.clone()), (i("y"), i("xy"), &one + &Scalar::q(&f)), (i("y^2"), i("x^2"), one)];
    expect.sort_by_key(|t| (t.0, t.1));
    assert_eq!(got, expect);
}

#[test]
fn taft_antipode_of_y() {
    for n in 2..=5u32 {
        let h = taft(n).unwrap();
        let y = h.index_of("y").unwrap();
        let yx = h.index_of(&if n == 2 { "xy".to_string() } else { format!("x^{}y", n - 1) }).unwrap();
        // S(y) = -y x^{n-1} = -q^{n-1} x^{n-1} y
        let s = h.antipode(y);
        assert_eq!(s.len(), 1);
        let c = s.get(&yx).unwrap();
        assert!(embed(c).close({
            let z = C::root(n);
            let mut p = C(-1.0, 0.0);
            for _ in 0..n - 1 {
                p = p.mul(z);
            }
            p
        }));
    }
}

/// Rank of a rational matrix by fraction-exact elimination.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = &rows[i][c] / &pivot;
                for j in c..cols {
                    let d = &k * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Q-dimension of the center, treating each `q^j b` as a Q-basis vector.
fn center_q_dimension(h: &HopfAlgebra) -> usize {
    let f = h.field();
    let phi = f.degree();
    let dim = h.dim();
    let mut rows = Vec::new();
    for b in 0..dim {
        for j in 0..phi {
            let qj = Scalar::q_pow(f, j as i64);
            let mut row = Vec::new();
            for g in 0..dim {
                let mut out = vec![Scalar::zero(f); dim];
                for (k, c) in &h.mult_table()[b][g] {
                    out[*k] += &(&qj * c);
                }
                for (k, c) in &h.mult_table()[g][b] {
                    out[*k] -= &(&qj * c);
                }
                for s in out {
                    let mut coeffs = s.coeffs().to_vec();
                    coeffs.resize(phi, BigRational::zero());
                    row.extend(coeffs);
                }
            }
            rows.push(row);
        }
    }
    dim * phi - rank(rows)
}

#[test]
fn centers_by_elimination() {
    for n in 1..=4 {
        let h = e_algebra(n).unwrap();
        // y_I for |I| even, and x·y_{1..n} when n is even
        let expected = (1 << (n - 1)) + usize::from(n % 2 == 0);
        assert_eq!(center_q_dimension(&h), expected);
        assert_eq!(h.center().len(), expected);
        let mut full = std::collections::BTreeMap::new();
        full.insert(h.dim() - 1, Scalar::one(h.field()));
        assert_eq!(h.is_central(&full), n % 2 == 0, "{}", h.label(h.dim() - 1));
    }
    for n in 2..=4 {
        let h = taft(n).unwrap();
        assert_eq!(center_q_dimension(&h), make_field(n).unwrap().degree());
        assert_eq!(h.center().len(), 1);
    }
}

#[test]
fn sweedler_t_inverse_and_sigma() {
    let h = taft(2).unwrap();
    let ring = TRing::new(&h).unwrap();
    let y = h.index_of("y").unwrap();
    assert_eq!(ring.text(ring.t_inv(y)), "-t[1]^-1*t[x]^-1*t[y]");
    let grading = h.hab_grading().unwrap();
    let t3 = taft(3).unwrap();
    let g3 = t3.hab_grading().unwrap();
    let m = TMonomial::from_pairs([(t3.index_of("x^2y").unwrap(), 1), (1, -3)]);
    assert!(g3.0.is_zero(&hab_degree(&g3, &m)));
    let m = TMonomial::from_pairs([(1, 1)]);
    assert!(!grading.0.is_zero(&hab_degree(&grading, &m)));
}

#[test]
fn commutator_image_in_taft3() {
    let h = taft(3).unwrap();
    let f = h.field().clone();
    let mu = Mu::trivial(&h);
    let p = parse_ncpoly("X[y]*X[x] - X[x]*X[y]", &h).unwrap();
    let img = mu.apply(&p).unwrap();
    let xy = h.index_of("xy").unwrap();
    let mut expect = hopfgen_core::tring::TTensorH::zero(&f);
    expect.add_term(TMonomial::from_pairs([(0, 1), (1, 1)]), xy, &Scalar::q(&f) - &Scalar::one(&f));
    assert_eq!(img, expect);
    assert!(mu.is_identity(&parse_ncpoly("X[1]*X[x] - X[x]*X[1]", &h).unwrap()).unwrap());
    let g = group_algebra(&cyclic(6), &make_field(1).unwrap()).unwrap();
    let mu = Mu::trivial(&g);
    let (a, b) = (g.label(2).to_string(), g.label(5).to_string());
    assert!(mu.is_identity(&parse_ncpoly(&format!("X[{a}]*X[{b}] - X[{b}]*X[{a}]"), &g).unwrap()).unwrap());
}

/// Evaluates the Jacobian minor of `(t_1, t_x t_{x^{n-1}}, t_{x^i}/t_x^i)`
/// at a rational point from the exponent vectors, by Leibniz expansion.
fn minor_at(n: usize, point: &[BigRational]) -> BigRational {
    let mut gens: Vec<Vec<i64>> = vec![vec![0; n]; n];
    gens[0][0] = 1;
    gens[1][1] = 1;
    gens[1][n - 1] = 1;
    for i in 2..n {
        gens[i][i] = 1;
        gens[i][1] = -(i as i64);
    }
    let value = |e: &[i64]| {
        e.iter().enumerate().fold(BigRational::from_integer(1.into()), |acc, (k, &p)| {
            let base = &point[k];
            let pw = if p >= 0 { num_traits::pow(base.clone(), p as usize) } else { num_traits::pow(base.recip(), (-p) as usize) };
            acc * pw
        })
    };
    let entry = |r: usize, c: usize| {
        let e = gens[r][c];
        if e == 0 {
            return BigRational::zero();
        }
        let mut d = gens[r].clone();
        d[c] -= 1;
        BigRational::from_integer(e.into()) * value(&d)
    };
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
    let mut det = BigRational::zero();
    for p in permutations(n) {
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        let term = (0..n).fold(BigRational::from_integer(1.into()), |acc, r| acc * entry(r, p[r]));
        det = if inv % 2 == 0 { det + term } else { det - term };
    }
    det
}

#[test]
fn taft_jacobian_minor_against_leibniz() {
    for n in 3..=4usize {
        let h = taft(n as u32).unwrap();
        let r = jacobian_check(&h, 7).unwrap();
        let minor = r.minor.unwrap();
        let point: Vec<BigRational> = (0..n).map(|i| BigRational::new(BigInt::from(2 * i as i64 + 3), BigInt::from(i as i64 + 2))).collect();
        let f = h.field().clone();
        let got = minor
            .eval(&|b| if b < n { Scalar::from_rational(&f, point[b].clone()) } else { Scalar::one(&f) })
            .unwrap();
        assert_eq!(got.to_rational().unwrap(), minor_at(n, &point), "n = {n}");
    }
    let h = taft(3).unwrap();
    assert_eq!(jacobian_check(&h, 1).unwrap().minor.unwrap().text(h.labels()), "3*t[x]^-2*t[x^2]");
}

#[test]
fn hnf_small_matrix() {
    let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
    let (hm, u) = hnf(&m);
    assert_eq!(hm, IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));
    // 2·8 - 4·6 = -8
    assert_eq!(hm.det(), BigInt::from(8));
    assert_eq!(u.mul(&m), hm);
}

#[test]
fn y_group_index_is_the_abelianization_order() {
    let (_, table) = permutation_group(3);
    let expected = 6 / commutator_closure(&table);
    let y = y_group(&symmetric(3), 24).unwrap();
    assert_eq!(y.index as usize, expected);
}

#[test]
fn taft3_decomposition_remultiplies() {
    let h = taft(3).unwrap();
    let p = gamma_generators(&h).unwrap();
    let lifts = torus_lifts(&h).unwrap();
    let m = TMonomial::from_pairs([(h.index_of("x^2").unwrap(), 1), (h.index_of("y").unwrap(), 1), (1, -3)]);
    let w = decompose(&h, &p, &m).unwrap();
    assert_eq!(w.remultiply(&p, &lifts), m);
    assert_eq!(w.text(&p, &lifts, h.labels()), "(t[x]*t[x^2])^-1*(t[x]^-2*t[x^2])*(t[x^2]*t[y])");
}
