//! Finite groups as Cayley tables, their abelianizations, and characters.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::lattice::normal_form::{lattice_basis, snf};

/// A finite group given by its multiplication table. The identity is always
/// element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table (closure, identity, inverses, associativity on
    /// all triples, distinct labels) and moves the identity to index 0.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table shape does not match the labels".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidGroup("labels are not distinct".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == e)
                .ok_or_else(|| Error::InvalidGroup(format!("`{}` has no inverse", labels[g])))?;
        }
        let group = FiniteGroup { labels, table, inverse };
        if e == 0 {
            return Ok(group);
        }
        // relabel so that the identity comes first
        let mut order: Vec<usize> = (0..n).collect();
        order.swap(0, e);
        Ok(group.permuted(&order))
    }

    /// The same group with elements listed in `order` (old indices).
    fn permuted(&self, order: &[usize]) -> Self {
        let n = order.len();
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        let table = order
            .iter()
            .map(|&a| order.iter().map(|&b| position[self.table[a][b]]).collect())
            .collect();
        let inverse = order.iter().map(|&a| position[self.inverse[a]]).collect();
        FiniteGroup { labels, table, inverse }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|g| self.mul(a, g) == self.mul(g, a))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| self.is_central(a))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// Smallest subgroup containing `gens`, as a sorted list of elements.
    pub fn generated(&self, gens: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(0);
        let gens: Vec<usize> = gens.into_iter().collect();
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let comms: BTreeSet<usize> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        self.generated(comms)
    }

    /// A closed subset as a group in its own right, with the embedding.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut embed: Vec<usize> = elements.to_vec();
        embed.sort_unstable();
        embed.dedup();
        let position: BTreeMap<usize, usize> = embed.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut table = Vec::with_capacity(embed.len());
        for &a in &embed {
            let mut row = Vec::with_capacity(embed.len());
            for &b in &embed {
                let p = position
                    .get(&self.mul(a, b))
                    .ok_or_else(|| Error::InvalidGroup("subset is not closed under multiplication".into()))?;
                row.push(*p);
            }
            table.push(row);
        }
        let labels = embed.iter().map(|&g| self.labels[g].clone()).collect();
        let sub = FiniteGroup::from_table(labels, table)?;
        // from_table keeps the order when the identity already leads
        let embed = sub.labels.iter().map(|l| self.index_of(l).expect("label from parent")).collect();
        Ok((sub, embed))
    }

    /// An isomorphism `self → other` as an index map, by backtracking over
    /// images of a generating set.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let gens = self.small_generating_set();
        let mut images = Vec::new();
        self.extend_images(other, &gens, &mut images)
    }

    fn small_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0];
        // prefer elements of large order
        let mut candidates: Vec<usize> = (1..self.order()).collect();
        candidates.sort_by_key(|&g| core::cmp::Reverse(self.element_order(g)));
        for g in candidates {
            if span.len() == self.order() {
                break;
            }
            if span.binary_search(&g).is_err() {
                gens.push(g);
                span = self.generated(gens.iter().copied());
            }
        }
        gens
    }

    fn extend_images(&self, other: &FiniteGroup, gens: &[usize], images: &mut Vec<usize>) -> Option<Vec<usize>> {
        if images.len() == gens.len() {
            return self.homomorphism_from_images(other, gens, images);
        }
        let g = gens[images.len()];
        let ord = self.element_order(g);
        for h in 0..other.order() {
            if other.element_order(h) != ord {
                continue;
            }
            images.push(h);
            if let Some(map) = self.extend_images(other, gens, images) {
                return Some(map);
            }
            images.pop();
        }
        None
    }

    fn homomorphism_from_images(&self, other: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map: Vec<Option<usize>> = vec![None; n];
        map[0] = Some(0);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            let fx = map[x].expect("visited");
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = other.mul(fx, h);
                match map[y] {
                    None => {
                        map[y] = Some(fy);
                        frontier.push(y);
                    }
                    Some(v) if v != fy => return None,
                    Some(_) => {}
                }
            }
        }
        let map: Vec<usize> = map.into_iter().map(|m| m.expect("generating set")).collect();
        let injective = map.iter().collect::<BTreeSet<_>>().len() == n;
        let hom = (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])));
        (injective && hom).then_some(map)
    }

    /// `G/[G,G]` with its invariant factors and the projection of each element.
    pub fn abelianization(&self) -> Abelianization {
        let n = self.order();
        let derived = self.commutator_subgroup();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &c in &derived {
                coset_of[self.mul(g, c)] = id;
            }
        }
        let m = reps.len();
        let unit = |i: usize| {
            let mut v = vec![BigInt::zero(); m];
            v[i] += 1;
            v
        };
        let mut relations = vec![unit(coset_of[0])];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                let mut v = unit(i);
                v[j] += 1;
                v[coset_of[self.mul(a, b)]] -= 1;
                relations.push(v);
            }
        }
        let basis = lattice_basis(relations, m);
        let (diag, v) = snf(&basis);
        let kept: Vec<(usize, u64)> = diag
            .iter()
            .enumerate()
            .map(|(k, d)| (k, d.to_u64().expect("factor fits")))
            .filter(|&(_, d)| d > 1)
            .collect();
        let group = FiniteAbelianGroup::new(kept.iter().map(|&(_, d)| d).collect());
        let coset_image: Vec<Vec<u64>> = (0..m)
            .map(|c| {
                kept.iter()
                    .map(|&(k, d)| v.get(c, k).mod_floor(&BigInt::from(d)).to_u64().expect("reduced"))
                    .collect()
            })
            .collect();
        let projection = (0..n).map(|g| coset_image[coset_of[g]].clone()).collect();
        Abelianization { group, projection }
    }
}

/// `Z/d_1 × ... × Z/d_k`, elements stored as residue tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<u64>) -> Self {
        assert!(factors.iter().all(|&d| d >= 1), "invariant factors must be positive");
        FiniteAbelianGroup { factors }
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 1 {
            Self::new(Vec::new())
        } else {
            Self::new(vec![n])
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), d)| (x + y) % d).collect()
    }

    /// `k·a` for any integer `k`.
    pub fn scale(&self, a: &[u64], k: i64) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| ((x as i128 * k as i128).rem_euclid(d as i128)) as u64)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        self.scale(a, -1)
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// All elements in mixed-radix order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.factors {
            out = out.into_iter().flat_map(|p| (0..d).map(move |x| {
                let mut q = p.clone();
                q.push(x);
                q
            })).collect();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub group: FiniteAbelianGroup,
    /// Image of each element of `G`.
    pub projection: Vec<Vec<u64>>,
}

/// A homomorphism `G → k^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<Scalar>,
}

impl Character {
    /// `g ↦ q^{e_g}` for a list of exponents indexed like the group.
    pub fn from_exponents(field: &Field, exponents: &[i64]) -> Self {
        Character { values: exponents.iter().map(|&e| Scalar::q_pow(field, e)).collect() }
    }

    pub fn trivial(g: &FiniteGroup, field: &Field) -> Self {
        Character { values: vec![Scalar::one(field); g.order()] }
    }

    pub fn value(&self, g: usize) -> &Scalar {
        &self.values[g]
    }

    pub fn is_homomorphism(&self, g: &FiniteGroup) -> bool {
        self.values.len() == g.order()
            && self.values[0].is_one()
            && (0..g.order()).all(|a| (0..g.order()).all(|b| self.values[g.mul(a, b)] == &self.values[a] * &self.values[b]))
    }
}

/// Checks the conditions on a datum `(G, x, χ)` for a monomial Hopf algebra
/// of type I: `x` central of order `n ≥ 2`, `χ` a character with `χ^n = 1`
/// and `χ(x) = q`.
pub fn validate_monomial_datum(g: &FiniteGroup, x: usize, chi: &Character, field: &Field) -> Result<()> {
    if x >= g.order() {
        return Err(Error::Datum("element"));
    }
    if !g.is_central(x) {
        return Err(Error::Datum("central"));
    }
    let n = field.n() as usize;
    if n < 2 || g.element_order(x) != n {
        return Err(Error::Datum("order_of_x"));
    }
    if !chi.is_homomorphism(g) {
        return Err(Error::Datum("character"));
    }
    if chi.values.iter().any(|v| !v.pow(n as i64).map(|p| p.is_one()).unwrap_or(false)) {
        return Err(Error::Datum("chi_order"));
    }
    if chi.values[x] != Scalar::q(field) {
        return Err(Error::Datum("chi_of_x"));
    }
    Ok(())
}

/// `Z/n` with elements `e, a, a^2, ...`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group of order zero");
    let labels = (0..n).map(power_label("a")).collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(labels, table).expect("cyclic table")
}

fn power_label(base: &'static str) -> impl Fn(usize) -> String {
    move |i| match i {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{i}"),
    }
}

/// `H × K` with elements `(h,k)`.
pub fn direct_product(h: &FiniteGroup, k: &FiniteGroup) -> FiniteGroup {
    let trivial: Vec<Vec<usize>> = vec![(0..h.order()).collect(); k.order()];
    semidirect_product(h, k, &trivial).expect("trivial action")
}

/// `H ⋊ K` where `action[k]` is the automorphism of `H` by which `k` acts,
/// as an index map. The product is `(h1,k1)(h2,k2) = (h1·φ_{k1}(h2), k1k2)`.
pub fn semidirect_product(h: &FiniteGroup, k: &FiniteGroup, action: &[Vec<usize>]) -> Result<FiniteGroup> {
    let (nh, nk) = (h.order(), k.order());
    if action.len() != nk || action.iter().any(|a| a.len() != nh) {
        return Err(Error::InvalidAction("action table has the wrong shape".into()));
    }
    for (ki, phi) in action.iter().enumerate() {
        let image: BTreeSet<usize> = phi.iter().copied().collect();
        if image.len() != nh || phi.iter().any(|&x| x >= nh) {
            return Err(Error::InvalidAction(format!("action of `{}` is not bijective", k.label(ki))));
        }
        if (0..nh).any(|a| (0..nh).any(|b| phi[h.mul(a, b)] != h.mul(phi[a], phi[b]))) {
            return Err(Error::InvalidAction(format!("action of `{}` is not multiplicative", k.label(ki))));
        }
    }
    for a in 0..nk {
        for b in 0..nk {
            let ab = &action[k.mul(a, b)];
            if (0..nh).any(|x| ab[x] != action[a][action[b][x]]) {
                return Err(Error::InvalidAction(format!(
                    "action is not a homomorphism at ({}, {})",
                    k.label(a),
                    k.label(b)
                )));
            }
        }
    }
    let idx = |hi: usize, ki: usize| hi * nk + ki;
    let mut labels = Vec::with_capacity(nh * nk);
    for hi in 0..nh {
        for ki in 0..nk {
            labels.push(format!("({},{})", h.label(hi), k.label(ki)));
        }
    }
    let mut table = vec![vec![0; nh * nk]; nh * nk];
    for h1 in 0..nh {
        for k1 in 0..nk {
            for h2 in 0..nh {
                for k2 in 0..nk {
                    table[idx(h1, k1)][idx(h2, k2)] = idx(h.mul(h1, action[k1][h2]), k.mul(k1, k2));
                }
            }
        }
    }
    FiniteGroup::from_table(labels, table)
}

/// Permutations of `{1..n}` composed right to left, labelled in cycle notation.
fn permutation_group(n: usize, keep: impl Fn(&[usize]) -> bool) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        if keep(&current) {
            perms.push(current.clone());
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    let position: BTreeMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = perms
        .iter()
        .map(|a| perms.iter().map(|b| position[&compose(a, b)]).collect())
        .collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    FiniteGroup::from_table(labels, table).expect("permutation table")
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(i + 1).to_string());
            first = false;
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// The symmetric group on `{1..n}`.
pub fn symmetric(n: usize) -> FiniteGroup {
    permutation_group(n, |_| true)
}

/// The alternating group on `{1..n}`.
pub fn alternating(n: usize) -> FiniteGroup {
    permutation_group(n, is_even)
}

/// The dihedral group of order `2n`, elements `r^i` then `r^i s`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let idx = |i: usize, s: usize| s * n + i;
    let mut labels = Vec::with_capacity(2 * n);
    for s in 0..2 {
        for i in 0..n {
            labels.push(match (i, s) {
                (0, 0) => "e".to_string(),
                (0, _) => "s".to_string(),
                (_, 0) => power_label("r")(i),
                _ => format!("{}s", power_label("r")(i)),
            });
        }
    }
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for s1 in 0..2 {
        for i1 in 0..n {
            for s2 in 0..2 {
                for i2 in 0..n {
                    // r^a s^b r^c s^d = r^(a ± c) s^(b + d)
                    let i = if s1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
                    table[idx(i1, s1)][idx(i2, s2)] = idx(i, (s1 + s2) % 2);
                }
            }
        }
    }
    FiniteGroup::from_table(labels, table).expect("dihedral table")
}

/// The quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> FiniteGroup {
    // unit index u in 0..4 for 1, i, j, k; element = (sign, unit)
    const PRODUCT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let names = ["1", "i", "j", "k"];
    let idx = |neg: bool, u: usize| 2 * u + neg as usize;
    let mut labels = vec![String::new(); 8];
    for (u, name) in names.iter().enumerate() {
        labels[idx(false, u)] = name.to_string();
        labels[idx(true, u)] = format!("-{name}");
    }
    let mut table = vec![vec![0; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (na, ua) = (a % 2 == 1, a / 2);
            let (nb, ub) = (b % 2 == 1, b / 2);
            let (nc, uc) = PRODUCT[ua][ub];
            table[a][b] = idx(na ^ nb ^ nc, uc);
        }
    }
    FiniteGroup::from_table(labels, table).expect("quaternion table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::make_field;

    #[test]
    fn constructors() {
        assert_eq!(cyclic(1).order(), 1);
        let s3 = symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.label(0), "e");
        assert!(s3.index_of("(1 2 3)").is_some());
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(direct_product(&cyclic(2), &cyclic(3)).label(0), "(e,e)");
    }

    #[test]
    fn rejects_bad_tables() {
        let labels: Vec<String> = ["e", "a", "b"].iter().map(|s| s.to_string()).collect();
        let table = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(matches!(FiniteGroup::from_table(labels, table), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn identity_moved_first() {
        let labels: Vec<String> = ["a", "e"].iter().map(|s| s.to_string()).collect();
        let g = FiniteGroup::from_table(labels, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.label(0), "e");
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn abelianizations() {
        assert_eq!(cyclic(6).abelianization().group.order(), 6);
        assert_eq!(symmetric(3).abelianization().group.factors(), &[2]);
        assert_eq!(alternating(5).abelianization().group.order(), 1);
        assert_eq!(quaternion().abelianization().group.factors(), &[2, 2]);
        assert_eq!(alternating(4).abelianization().group.factors(), &[3]);
    }

    #[test]
    fn projection_is_homomorphism() {
        let g = direct_product(&dihedral(4), &cyclic(3));
        let ab = g.abelianization();
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(ab.projection[g.mul(a, b)], ab.group.add(&ab.projection[a], &ab.projection[b]));
            }
        }
    }

    #[test]
    fn bad_action() {
        let z3 = cyclic(3);
        let z2 = cyclic(2);
        // swapping e and a is not an automorphism
        let action = vec![vec![0, 1, 2], vec![1, 0, 2]];
        assert!(matches!(semidirect_product(&z3, &z2, &action), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn datum_conditions() {
        let f = make_field(3).unwrap();
        let z3 = cyclic(3);
        let chi = Character::from_exponents(&f, &[0, 1, 2]);
        assert_eq!(validate_monomial_datum(&z3, 1, &chi, &f), Ok(()));
        let chi2 = Character::from_exponents(&f, &[0, 2, 1]);
        assert_eq!(validate_monomial_datum(&z3, 1, &chi2, &f), Err(Error::Datum("chi_of_x")));
        let s3 = symmetric(3);
        let f2 = make_field(2).unwrap();
        let chi = Character::trivial(&s3, &f2);
        for x in 1..6 {
            assert_eq!(validate_monomial_datum(&s3, x, &chi, &f2), Err(Error::Datum("central")));
        }
    }
}
