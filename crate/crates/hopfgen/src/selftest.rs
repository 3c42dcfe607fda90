//! The fourteen end-to-end acceptance checks, run by `hopfgen selftest` and by
//! the `acceptance` test target. Each check returns a one-line detail on
//! success and the first counterexample on failure.

use std::panic::{self, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfgen_core::cocycle::{cotwist_hopf, TwoCocycle};
use hopfgen_core::generic_base::{
    decompose, decompose_with_residue, gamma_generators, jacobian_check, lazy_gamma_check, niceness_witnesses,
    quotient_presentation_check, torus_lifts, uprime_relations_check, verify_sigma,
};
use hopfgen_core::group::{alternating, cyclic, dihedral, direct_product, symmetric, Character, FiniteGroup};
use hopfgen_core::hopf::families::subset_order;
use hopfgen_core::hopf::{e_algebra, group_algebra, monomial_type_i, taft, verify_hopf_axioms};
use hopfgen_core::identities::{monomial_splitting, parse_ncpoly, push_forward, push_forward_checked, Mu, NCPoly};
use hopfgen_core::lattice::{named_basis, pq_generation_check, y_group, BasisKind};
use hopfgen_core::tring::{hab_degree, verify_t_inverse, TElement, TMonomial, TRing, TTensorH};
use hopfgen_core::{make_field, HopfAlgebra, Scalar};

type Outcome<T = String> = Result<T, String>;

/// A named check taking the run seed.
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    run: fn(u64) -> Outcome,
}

pub const CRITERIA: [Criterion; 14] = [
    Criterion { id: 1, title: "Hopf axioms", run: hopf_axioms },
    Criterion { id: 2, title: "t-inverse identities", run: t_inverse },
    Criterion { id: 3, title: "generic cocycle suite", run: sigma_suite },
    Criterion { id: 4, title: "Sweedler presentation", run: sweedler },
    Criterion { id: 5, title: "Jacobian", run: jacobian },
    Criterion { id: 6, title: "decomposition", run: decomposition },
    Criterion { id: 7, title: "quotient presentation", run: quotient },
    Criterion { id: 8, title: "niceness witnesses", run: niceness },
    Criterion { id: 9, title: "U' presentations", run: uprime },
    Criterion { id: 10, title: "center", run: center },
    Criterion { id: 11, title: "lattice", run: lattice },
    Criterion { id: 12, title: "identity detection", run: identities },
    Criterion { id: 13, title: "cotwist", run: cotwist },
    Criterion { id: 14, title: "splitting", run: splitting },
];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2}: {} {} ({}; {:.1}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

fn run_one(c: &Criterion, seed: u64) -> CriterionResult {
    let start = Instant::now();
    let out = panic::catch_unwind(AssertUnwindSafe(|| (c.run)(seed)));
    let (passed, detail) = match out {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        }
    };
    CriterionResult { id: c.id, title: c.title, passed, detail, elapsed: start.elapsed() }
}

/// Runs the selected criteria (all when `ids` is empty) on `jobs` worker
/// threads. Results come back ordered by id.
pub fn run(ids: &[usize], seed: u64, jobs: usize) -> Vec<CriterionResult> {
    let picked: Vec<&Criterion> = CRITERIA.iter().filter(|c| ids.is_empty() || ids.contains(&c.id)).collect();
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..jobs.clamp(1, picked.len().max(1)) {
            std::thread::Builder::new()
                .stack_size(64 << 20)
                .spawn_scoped(s, || loop {
                    let k = next.fetch_add(1, Ordering::Relaxed);
                    let Some(c) = picked.get(k) else { break };
                    let r = run_one(c, seed);
                    results.lock().unwrap().push(r);
                })
                .expect("spawn worker");
        }
    });
    let mut out = results.into_inner().unwrap();
    out.sort_by_key(|r| r.id);
    out
}

fn core<T>(what: &str, r: hopfgen_core::Result<T>) -> Outcome<T> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn first_failure(r: &hopfgen_core::Report) -> Option<String> {
    r.failures().next().map(|c| if c.detail.is_empty() { format!("{} fails", c.name) } else { format!("{} fails ({})", c.name, c.detail) })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome<()> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `Z/2 × Z/2` with `x = (a,e)` and `χ` sending `(e,a)` to `-1`.
pub fn klein_monomial() -> HopfAlgebra {
    let g = direct_product(&cyclic(2), &cyclic(2));
    let f = make_field(2).unwrap();
    let x = g.index_of("(a,e)").unwrap();
    let chi = Character::from_exponents(&f, &[0, 0, 1, 1]);
    monomial_type_i(&g, x, &chi, &f).unwrap()
}

pub fn test_groups() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = (1..=12).map(|n| (format!("Z/{n}"), cyclic(n))).collect();
    out.push(("Z/2xZ/2".into(), direct_product(&cyclic(2), &cyclic(2))));
    out.push(("S3".into(), symmetric(3)));
    out.push(("S4".into(), symmetric(4)));
    out.push(("D4".into(), dihedral(4)));
    out.push(("A4".into(), alternating(4)));
    out
}

fn named(name: &str, h: hopfgen_core::Result<HopfAlgebra>) -> (String, HopfAlgebra) {
    (name.to_string(), h.unwrap_or_else(|e| panic!("{name}: {e}")))
}

/// Taft algebras of the given orders, `E(n)` for the given `n`, and the
/// monomial instance.
fn pointed(tafts: std::ops::RangeInclusive<u32>, es: std::ops::RangeInclusive<u32>) -> Vec<(String, HopfAlgebra)> {
    let mut out: Vec<_> = tafts.map(|n| named(&format!("taft({n})"), taft(n))).collect();
    out.extend(es.map(|n| named(&format!("E({n})"), e_algebra(n))));
    out.push(("monomial".into(), klein_monomial()));
    out
}

fn group_algebras() -> Vec<(String, HopfAlgebra)> {
    let f = make_field(1).unwrap();
    test_groups().into_iter().map(|(name, g)| named(&format!("k[{name}]"), group_algebra(&g, &f))).collect()
}

pub fn all_instances() -> Vec<(String, HopfAlgebra)> {
    let mut out = pointed(2..=5, 1..=4);
    out.extend(group_algebras());
    out
}

fn hopf_axioms(_: u64) -> Outcome {
    let all = all_instances();
    for (name, h) in &all {
        let r = verify_hopf_axioms(h);
        ensure(r.checks.len() >= 5, || format!("{name}: only {} checks", r.checks.len()))?;
        if let Some(c) = first_failure(&r) {
            return Err(format!("{name}: {c}"));
        }
    }
    Ok(format!("{} algebras", all.len()))
}

fn t_inverse(_: u64) -> Outcome {
    let all = all_instances();
    for (name, h) in &all {
        let ring = core(name, TRing::new(h))?;
        verify_t_inverse(h, &ring).map_err(|b| format!("{name}: fails at basis element {b}"))?;
    }
    Ok(format!("{} algebras", all.len()))
}

fn sigma_suite(_: u64) -> Outcome {
    let start = Instant::now();
    let mut list = pointed(2..=3, 1..=2);
    list.retain(|(name, _)| name != "monomial");
    list.push(named("k[S3]", group_algebra(&symmetric(3), &make_field(1).unwrap())));
    for (name, h) in &list {
        let r = verify_sigma(h, &TwoCocycle::trivial(h));
        if let Some(c) = first_failure(&r) {
            return Err(format!("{name}: {c}"));
        }
    }
    let t = start.elapsed();
    ensure(t <= Duration::from_secs(30), || format!("took {:.1}s, over 30s", t.as_secs_f64()))?;
    Ok(format!("{} algebras", list.len()))
}

fn sweedler(_: u64) -> Outcome {
    let h = taft(2).unwrap();
    let p = core("taft(2)", gamma_generators(&h))?;
    let i = |l: &str| h.index_of(l).unwrap();
    let t = TMonomial::var;
    let expected: std::collections::BTreeSet<TMonomial> = [
        t(i("1")),
        t(i("1")).inv(),
        TMonomial::power(i("x"), 2),
        TMonomial::power(i("x"), -2),
        t(i("x")).mul(&t(i("y"))),
        t(i("xy")),
    ]
    .into_iter()
    .collect();
    let got = p.generator_set();
    let text = |s: &std::collections::BTreeSet<TMonomial>| s.iter().map(|m| m.text(h.labels())).collect::<Vec<_>>().join(", ");
    ensure(got == expected, || format!("got {{{}}}", text(&got)))?;
    Ok(format!("{{{}}}", text(&got)))
}

fn jacobian(seed: u64) -> Outcome {
    let mut notes = Vec::new();
    let mut bad = Vec::new();
    for (n, coef, den) in [(3u32, 3i64, 2i32), (4, -2, 5)] {
        let h = taft(n).unwrap();
        let r = core(&format!("taft({n})"), jacobian_check(&h, seed))?;
        let minor = r.minor.ok_or_else(|| format!("taft({n}): no minor"))?;
        let top = h.index_of(&format!("x^{}", n - 1)).unwrap();
        let x = h.index_of("x").unwrap();
        let claimed = TElement::term(
            TMonomial::var(top).mul(&TMonomial::power(x, -den)),
            Scalar::from_int(h.field(), coef),
        );
        let text = minor.text(h.labels());
        if minor == claimed || minor == claimed.neg() {
            notes.push(format!("taft({n}) J = {text}"));
        } else {
            bad.push(format!("taft({n}) J = {text}, expected ±({})", claimed.text(h.labels())));
        }
    }
    for (name, h) in [named("taft(5)", taft(5)), named("E(3)", e_algebra(3))] {
        let r = core(&name, jacobian_check(&h, seed))?;
        match r.rank_at_point {
            Some((rank, size)) if r.independent && rank == size => notes.push(format!("{name} rank {rank}")),
            other => bad.push(format!("{name}: rank certificate {other:?}")),
        }
    }
    if bad.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(bad.join("; "))
    }
}

fn random_monomial(h: &HopfAlgebra, rng: &mut ChaCha8Rng) -> TMonomial {
    TMonomial::from_pairs((0..h.dim()).map(|b| {
        let lo = if h.is_grouplike(b) { -4 } else { 0 };
        (b, rng.gen_range(lo..=4))
    }))
}

fn decomposition(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let list = pointed(2..=4, 1..=3);
    for (name, h) in &list {
        let p = core(name, gamma_generators(h))?;
        let lifts = core(name, torus_lifts(h))?;
        let grading = core(name, h.hab_grading())?;
        for _ in 0..200 {
            let m = random_monomial(h, &mut rng);
            let w = core(name, decompose_with_residue(h, &p, &m))?;
            let mut zero = m;
            for (&g, &k) in lifts.iter().zip(&w.residue) {
                zero = zero.mul(&TMonomial::power(g, -(k as i32)));
            }
            ensure(grading.0.is_zero(&hab_degree(&grading, &zero)), || format!("{name}: residue does not reach degree zero"))?;
            let w0 = core(name, decompose(h, &p, &zero))?;
            ensure(w0.remultiply(&p, &lifts) == zero, || format!("{name}: {} does not round-trip", zero.text(h.labels())))?;
        }
    }
    for n in 2..=4u32 {
        let h = taft(n).unwrap();
        let p = core("taft", gamma_generators(&h))?;
        let lifts = core("taft", torus_lifts(&h))?;
        let x = h.index_of("x").unwrap();
        ensure(lifts == [x], || format!("taft({n}): lifts {lifts:?}"))?;
        for _ in 0..50 {
            let m = random_monomial(&h, &mut rng);
            let w = core("taft", decompose_with_residue(&h, &p, &m))?;
            let k = w.residue[0];
            ensure((0..n as i64).contains(&k) && w.remultiply(&p, &lifts) == m, || {
                format!("taft({n}): {} gives residue {k}", m.text(h.labels()))
            })?;
        }
    }
    Ok(format!("{} instances x 200, taft(2..4) x 50 with residue", list.len()))
}

fn quotient(_: u64) -> Outcome {
    let mut list = pointed(2..=4, 1..=3);
    list.extend(group_algebras());
    for (name, h) in &list {
        let r = core(name, quotient_presentation_check(h))?;
        if let Some(c) = first_failure(&r) {
            return Err(format!("{name}: {c}"));
        }
    }
    Ok(format!("{} algebras", list.len()))
}

fn niceness(_: u64) -> Outcome {
    let list = pointed(2..=4, 1..=3);
    let mut total = 0;
    for (name, h) in &list {
        let p = core(name, gamma_generators(h))?;
        let w = core(name, niceness_witnesses(h))?;
        ensure(w.len() == 2 * p.invertible.len() + p.plain.len(), || format!("{name}: {} witnesses", w.len()))?;
        total += w.len();
    }
    Ok(format!("{total} verified witnesses"))
}

fn uprime(_: u64) -> Outcome {
    let list = pointed(2..=4, 1..=3);
    for (name, h) in &list {
        let r = core(name, uprime_relations_check(h))?;
        if let Some(c) = first_failure(&r) {
            return Err(format!("{name}: {c}"));
        }
    }
    Ok(format!("{} algebras", list.len()))
}

fn center(_: u64) -> Outcome {
    let mut notes = Vec::new();
    let mut bad = Vec::new();
    for n in 1..=4u32 {
        let h = e_algebra(n).unwrap();
        let dim = h.center().len();
        let even: Vec<usize> =
            subset_order(n).iter().enumerate().filter(|(_, m)| m.count_ones() % 2 == 0).map(|(k, _)| 2 * k).collect();
        let all_central = even.iter().all(|&b| h.is_central(&h.basis_element(b)));
        if dim == 1 << (n - 1) && all_central {
            notes.push(format!("E({n}) {dim}"));
        } else {
            bad.push(format!("E({n}) has center of dimension {dim}, expected {}", 1 << (n - 1)));
        }
    }
    for n in 2..=4u32 {
        let dim = taft(n).unwrap().center().len();
        if dim != 1 {
            bad.push(format!("taft({n}) has center of dimension {dim}"));
        }
    }
    if bad.is_empty() {
        Ok(notes.join(", "))
    } else {
        Err(bad.join("; "))
    }
}

fn lattice(_: u64) -> Outcome {
    let groups = test_groups();
    for (name, g) in &groups {
        let ab = g.abelianization().group.order();
        let y = core(name, y_group(g, g.order()))?;
        ensure(y.index == ab, || format!("{name}: index {} but |G_ab| = {ab}", y.index))?;
        let r = core(name, pq_generation_check(g, g.order()))?;
        if let Some(c) = first_failure(&r) {
            return Err(format!("{name}: {c}"));
        }
    }
    let mut kinds: Vec<BasisKind> = (2..=12).map(BasisKind::Cyclic).collect();
    kinds.extend([BasisKind::Product(2, 3), BasisKind::Product(2, 2), BasisKind::Symmetric(3), BasisKind::Symmetric(4)]);
    for kind in &kinds {
        let b = core(&format!("{kind:?}"), named_basis(kind))?;
        ensure(b.det == b.abelianization_order.into(), || format!("{kind:?}: |det| {} vs {}", b.det, b.abelianization_order))?;
    }
    Ok(format!("{} groups, {} named bases", groups.len(), kinds.len()))
}

fn identities(_: u64) -> Outcome {
    let h = taft(3).unwrap();
    let mu = Mu::trivial(&h);
    let commuting = core("parse", parse_ncpoly("X[1]*X[x]-X[x]*X[1]", &h))?;
    ensure(core("taft(3)", mu.is_identity(&commuting))?, || "X_1X_x - X_xX_1 is not an identity of taft(3)".into())?;

    let g = group_algebra(&cyclic(6), &make_field(1).unwrap()).unwrap();
    let mu_g = Mu::trivial(&g);
    let f = g.field();
    for a in 0..6 {
        for b in 0..6 {
            let (xa, xb) = (NCPoly::var(a, f), NCPoly::var(b, f));
            let p = xa.mul(&xb).sub(&xb.mul(&xa));
            ensure(core("k[Z/6]", mu_g.is_identity(&p))?, || format!("X_{a}X_{b} - X_{b}X_{a} is not an identity"))?;
        }
    }

    let skew = core("parse", parse_ncpoly("X[y]*X[x]-X[x]*X[y]", &h))?;
    let c = core("taft(3)", mu.classify(&skew))?;
    let f = h.field();
    let mut expected = TTensorH::zero(f);
    let (one, x, xy) = (h.index_of("1").unwrap(), h.index_of("x").unwrap(), h.index_of("xy").unwrap());
    expected.add_term(TMonomial::var(one).mul(&TMonomial::var(x)), xy, &Scalar::q(f) - &Scalar::one(f));
    ensure(!c.identity && c.image == expected, || format!("image of X_yX_x - X_xX_y is {}", c.image.text(h.labels(), h.labels())))?;
    Ok(format!("image {}", c.image.text(h.labels(), h.labels())))
}

fn cotwist(seed: u64) -> Outcome {
    let all = all_instances();
    for (name, h) in &all {
        let l = core(name, cotwist_hopf(h, &TwoCocycle::trivial(h)))?;
        ensure(l.same_structure(h), || format!("{name}: cotwist by the trivial cocycle changes the structure"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = group_algebra(&symmetric(3), &make_field(1).unwrap()).unwrap();
    let gamma: Vec<Scalar> = (0..h.dim())
        .map(|b| {
            if b == h.unit() {
                return h.one();
            }
            let k = rng.gen_range(1..=5i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
            Scalar::ratio(h.field(), k, rng.gen_range(1..=4))
        })
        .collect();
    let alpha = core("k[S3]", TwoCocycle::coboundary(&h, &gamma))?;
    let r = core("k[S3]", lazy_gamma_check(&h, &alpha))?;
    if let Some(c) = first_failure(&r) {
        return Err(format!("lazy cocycle on k[S3]: {c}"));
    }
    Ok(format!("{} algebras, lazy cocycle on k[S3]", all.len()))
}

fn splitting(seed: u64) -> Outcome {
    let h = klein_monomial();
    let s = core("splitting", monomial_splitting(&h))?;
    let kg = &s.group_algebra;
    let f = kg.field();
    let trivial_h = TwoCocycle::trivial(&h);
    let trivial_g = TwoCocycle::trivial(kg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let mut p = NCPoly::zero(f);
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(0..=4);
            let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..kg.dim())).collect();
            p = p.add(&NCPoly::word(w, Scalar::from_int(f, rng.gen_range(-5..=5))));
        }
        let up = core("iota", push_forward_checked(&s.iota, &trivial_g, &trivial_h, &p))?;
        let back = core("pi", push_forward_checked(&s.pi, &trivial_h, &trivial_g, &up))?;
        ensure(back == p && push_forward(&s.pi, &push_forward(&s.iota, &p)) == p, || {
            format!("pi(iota(P)) differs from P = {}", p.text(kg.labels()))
        })?;
    }
    Ok("50 polynomials".into())
}
