//! Symmetric groups and their products S_n1 x S_n2 x S_n3 x S_n4:
//! permutations, conjugacy classes, irreducible character values, exact
//! rational group-algebra arithmetic, essential idempotents e_T of a tableau,
//! and central idempotents E_lambda.
//!
//! Character values come from the Murnaghan-Nakayama rule on beta-sets
//! (first-column hook lengths), memoized by (shape, cycle type). S_0 and S_1
//! are both the trivial group.

use crate::combinat::{
    character_degree, multi_character_degree, partitions_of, MultiPartition, MultiTableau,
    Partition, Tableau,
};
use crate::rat::{rat, Rat};
use itertools::Itertools;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, RwLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymGroupError {
    #[error("size mismatch: |lambda| = {0} but |class| = {1}")]
    SizeMismatch(usize, usize),
    #[error("degree mismatch between group-algebra elements")]
    DegreeMismatch,
    #[error("resource bound exceeded: {0}")]
    Resource(String),
}

/// A permutation of {1,...,n} in one-line image notation:
/// `images[i-1] = sigma(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, String> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(format!("not a bijection on 1..={n}: {images:?}"));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds the product of the given disjoint cycles inside S_n.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self, String> {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        let mut moved = vec![false; n + 1];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                if a == 0 || a as usize > n {
                    return Err(format!("cycle entry {a} out of range 1..={n}"));
                }
                if moved[a as usize] {
                    return Err(format!("cycles are not disjoint at {a}"));
                }
                moved[a as usize] = true;
                let b = cycle[(pos + 1) % cycle.len()];
                images[a as usize - 1] = b;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// sigma(i), 1-based.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    /// (self o other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Cycle type as a partition of n, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur as usize] {
                seen[cur as usize] = true;
                cur = self.apply(cur);
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn sign(&self) -> i64 {
        let transpositions = self.degree() - self.cycle_type().height();
        if transpositions % 2 == 0 { 1 } else { -1 }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|v| v.to_string()).join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All of S_n in lexicographic image order. S_0 has one element.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n as u32)
        .permutations(n)
        .map(|images| Permutation { images })
        .collect()
}

/// An element of S_n1 x S_n2 x S_n3 x S_n4.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPermutation {
    comps: [Permutation; 4],
}

impl MultiPermutation {
    pub fn new(comps: [Permutation; 4]) -> Self {
        MultiPermutation { comps }
    }

    pub fn identity(nd: [usize; 4]) -> Self {
        MultiPermutation {
            comps: [
                Permutation::identity(nd[0]),
                Permutation::identity(nd[1]),
                Permutation::identity(nd[2]),
                Permutation::identity(nd[3]),
            ],
        }
    }

    pub fn comps(&self) -> &[Permutation; 4] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &Permutation {
        assert!((1..=4).contains(&i), "component index is 1-based");
        &self.comps[i - 1]
    }

    pub fn multidegree(&self) -> [usize; 4] {
        [
            self.comps[0].degree(),
            self.comps[1].degree(),
            self.comps[2].degree(),
            self.comps[3].degree(),
        ]
    }

    pub fn compose(&self, other: &MultiPermutation) -> MultiPermutation {
        MultiPermutation {
            comps: std::array::from_fn(|i| self.comps[i].compose(&other.comps[i])),
        }
    }

    pub fn inverse(&self) -> MultiPermutation {
        MultiPermutation { comps: std::array::from_fn(|i| self.comps[i].inverse()) }
    }

    pub fn is_identity(&self) -> bool {
        self.comps.iter().all(Permutation::is_identity)
    }

    pub fn cycle_types(&self) -> [Partition; 4] {
        std::array::from_fn(|i| self.comps[i].cycle_type())
    }
}

impl fmt::Display for MultiPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.comps[0], self.comps[1], self.comps[2], self.comps[3]
        )
    }
}

impl fmt::Debug for MultiPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All of S_<n> in lexicographic order, fourth component fastest.
pub fn all_multipermutations(nd: [usize; 4]) -> Vec<MultiPermutation> {
    let lists: [Vec<Permutation>; 4] = std::array::from_fn(|i| all_permutations(nd[i]));
    let mut out = Vec::new();
    for a in &lists[0] {
        for b in &lists[1] {
            for c in &lists[2] {
                for d in &lists[3] {
                    out.push(MultiPermutation {
                        comps: [a.clone(), b.clone(), c.clone(), d.clone()],
                    });
                }
            }
        }
    }
    out
}

/// Group structure shared by `Permutation` and `MultiPermutation`, so the
/// group algebra below works for S_n and S_<n> alike.
pub trait GroupElement: Clone + Ord {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;
    /// Same underlying group (equal degrees)?
    fn compatible(&self, other: &Self) -> bool;
}

impl GroupElement for Permutation {
    fn compose(&self, other: &Self) -> Self {
        Permutation::compose(self, other)
    }
    fn inverse(&self) -> Self {
        Permutation::inverse(self)
    }
    fn is_identity(&self) -> bool {
        Permutation::is_identity(self)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }
}

impl GroupElement for MultiPermutation {
    fn compose(&self, other: &Self) -> Self {
        MultiPermutation::compose(self, other)
    }
    fn inverse(&self) -> Self {
        MultiPermutation::inverse(self)
    }
    fn is_identity(&self) -> bool {
        MultiPermutation::is_identity(self)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.multidegree() == other.multidegree()
    }
}

/// Sparse exact-rational combination of group elements. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement<G: GroupElement> {
    terms: BTreeMap<G, Rat>,
}

impl<G: GroupElement> GroupAlgebraElement<G> {
    pub fn zero() -> Self {
        GroupAlgebraElement { terms: BTreeMap::new() }
    }

    pub fn single(g: G, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(g, c);
        }
        GroupAlgebraElement { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (G, Rat)>) -> Self {
        let mut a = GroupAlgebraElement::zero();
        for (g, c) in it {
            a.add_term(g, c);
        }
        a
    }

    fn add_term(&mut self, g: G, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &G) -> Rat {
        self.terms.get(g).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SymGroupError> {
        match (self.terms.keys().next(), other.terms.keys().next()) {
            (Some(a), Some(b)) if !a.compatible(b) => Err(SymGroupError::DegreeMismatch),
            _ => Ok(()),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymGroupError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return GroupAlgebraElement::zero();
        }
        GroupAlgebraElement {
            terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self, SymGroupError> {
        self.check_compatible(other)?;
        let mut out = GroupAlgebraElement::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.compose(h), a * b);
            }
        }
        Ok(out)
    }

    /// sigma * self * sigma^{-1}.
    pub fn conjugate_by(&self, sigma: &G) -> Self {
        let inv = sigma.inverse();
        GroupAlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (sigma.compose(g).compose(&inv), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for GroupAlgebraElement<Permutation> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(g, c)| format!("({g}, {c})")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// One conjugacy class of S_n.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub representative: Permutation,
    pub size: u64,
}

/// Conjugacy classes of S_n, one per partition of n in reverse-lexicographic
/// order, with canonical representatives (cycles filled consecutively).
pub fn conjugacy_classes(n: usize) -> Vec<ConjugacyClass> {
    partitions_of(n)
        .into_iter()
        .map(|ct| {
            let mut cycles: Vec<Vec<u32>> = Vec::new();
            let mut next = 1u32;
            for &len in ct.parts() {
                cycles.push((next..next + len).collect());
                next += len;
            }
            let cycle_refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
            let representative = Permutation::from_cycles(n, &cycle_refs).unwrap();
            ConjugacyClass { size: class_size(&ct), cycle_type: ct, representative }
        })
        .collect()
}

/// |class| = n! / prod_j j^{m_j} m_j!  where m_j is the number of parts
/// equal to j.
pub fn class_size(cycle_type: &Partition) -> u64 {
    let n = cycle_type.n();
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &p in cycle_type.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut centralizer: u128 = 1;
    for (&j, &m) in &mult {
        centralizer *= (j as u128).pow(m);
        centralizer *= (1..=m as u128).product::<u128>();
    }
    let fact: u128 = (1..=n as u128).product();
    u64::try_from(fact / centralizer).expect("class size exceeds u64")
}

static CHARACTER_MEMO: LazyLock<RwLock<HashMap<(Vec<u32>, Vec<u32>), i64>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// chi_lambda at a permutation of the given cycle type, by the
/// Murnaghan-Nakayama rule.
pub fn character_value(lambda: &Partition, class: &Partition) -> Result<i64, SymGroupError> {
    if lambda.n() != class.n() {
        return Err(SymGroupError::SizeMismatch(lambda.n(), class.n()));
    }
    Ok(mn(lambda.parts(), class.parts()))
}

fn mn(lambda: &[u32], rho: &[u32]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = CHARACTER_MEMO.read().unwrap().get(&key) {
        return v;
    }
    // Beta-set of first-column hook lengths: strictly decreasing.
    let k = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (k - 1 - i) as i64)
        .collect();
    let r = rho[0] as i64;
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        // Height of the removed border strip = number of beta entries
        // strictly between the old and new values.
        let height = beta.iter().filter(|&&e| target < e && e < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let m = nb.len();
        let mut new_lambda: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(i, &e)| (e - (m - 1 - i) as i64) as u32)
            .collect();
        while new_lambda.last() == Some(&0) {
            new_lambda.pop();
        }
        total += sign * mn(&new_lambda, &rho[1..]);
    }
    CHARACTER_MEMO.write().unwrap().insert(key, total);
    total
}

/// Product of the four component character values.
pub fn multi_character_value(
    lambda: &MultiPartition,
    classes: &[Partition; 4],
) -> Result<i64, SymGroupError> {
    let mut prod = 1i64;
    for i in 0..4 {
        prod *= character_value(&lambda.comps()[i], &classes[i])?;
        if prod == 0 {
            // Still validate the remaining sizes.
            for j in i + 1..4 {
                if lambda.comps()[j].n() != classes[j].n() {
                    return Err(SymGroupError::SizeMismatch(
                        lambda.comps()[j].n(),
                        classes[j].n(),
                    ));
                }
            }
            return Ok(0);
        }
    }
    Ok(prod)
}

/// All permutations of S_n that stabilize each of the given disjoint entry
/// sets (as sets), i.e. the direct product of the symmetric groups on them.
fn set_stabilizer(n: usize, sets: &[Vec<u32>]) -> Vec<Permutation> {
    let mut acc = vec![Permutation::identity(n)];
    for set in sets {
        if set.len() <= 1 {
            continue;
        }
        let mut next = Vec::with_capacity(acc.len() * (1..=set.len()).product::<usize>());
        for arrangement in set.iter().copied().permutations(set.len()) {
            let mut images: Vec<u32> = (1..=n as u32).collect();
            for (&from, &to) in set.iter().zip(&arrangement) {
                images[from as usize - 1] = to;
            }
            let block = Permutation { images };
            for sigma in &acc {
                next.push(sigma.compose(&block));
            }
        }
        acc = next;
    }
    acc
}

/// e_T = sum over sigma in R_T, tau in C_T of sgn(tau) sigma tau,
/// where R_T / C_T are the row / column stabilizers of T.
pub fn essential_idempotent(t: &Tableau) -> GroupAlgebraElement<Permutation> {
    let n = t.n();
    let rows = set_stabilizer(n, t.rows());
    let cols = set_stabilizer(n, &t.columns());
    let mut out = GroupAlgebraElement::zero();
    for sigma in &rows {
        for tau in &cols {
            out.add_term(sigma.compose(tau), rat(tau.sign()));
        }
    }
    out
}

/// Outer (tensor) product of the four component idempotents as an element of
/// the group algebra of S_<n>.
pub fn multi_essential_idempotent(t: &MultiTableau) -> GroupAlgebraElement<MultiPermutation> {
    let comps: [GroupAlgebraElement<Permutation>; 4] =
        std::array::from_fn(|i| essential_idempotent(&t.comps()[i]));
    let mut out = GroupAlgebraElement::zero();
    for (a, ca) in comps[0].terms() {
        for (b, cb) in comps[1].terms() {
            for (c, cc) in comps[2].terms() {
                for (d, cd) in comps[3].terms() {
                    out.add_term(
                        MultiPermutation::new([a.clone(), b.clone(), c.clone(), d.clone()]),
                        ca * cb * cc * cd,
                    );
                }
            }
        }
    }
    out
}

/// E_lambda = sum over sigma in S_n of chi_lambda(sigma) sigma.
pub fn central_idempotent(lambda: &Partition) -> GroupAlgebraElement<Permutation> {
    let n = lambda.n();
    let chi_by_class: HashMap<Vec<u32>, i64> = partitions_of(n)
        .into_iter()
        .map(|ct| {
            let v = character_value(lambda, &ct).expect("matching sizes");
            (ct.parts().to_vec(), v)
        })
        .collect();
    let mut out = GroupAlgebraElement::zero();
    for sigma in all_permutations(n) {
        let chi = chi_by_class[sigma.cycle_type().parts()];
        out.add_term(sigma, rat(chi));
    }
    out
}

/// Verifies sum over lambda of (d_lambda / n!) E_lambda = identity,
/// the central orthogonal decomposition of the group algebra.
pub fn decompose_check(n: usize) -> Result<bool, SymGroupError> {
    if n > 5 {
        return Err(SymGroupError::Resource(format!(
            "decompose_check materializes all of S_n; n = {n} > 5"
        )));
    }
    let fact: i64 = (1..=n as i64).product::<i64>().max(1);
    let mut sum: GroupAlgebraElement<Permutation> = GroupAlgebraElement::zero();
    for lambda in partitions_of(n) {
        let d = character_degree(&lambda) as i64;
        let e = central_idempotent(&lambda).scale(&crate::rat::rat_frac(d, fact));
        sum = sum.add(&e)?;
    }
    let id = GroupAlgebraElement::single(Permutation::identity(n), rat(1));
    Ok(sum == id)
}

/// Scalar c with e_T^2 = c e_T for the multi idempotent:
/// prod_i n_i! / d_{lambda(i)}.
pub fn idempotent_scalar(shape: &MultiPartition) -> Rat {
    let mut num = 1i64;
    for &ni in &shape.multidegree() {
        num *= (1..=ni as i64).product::<i64>().max(1);
    }
    crate::rat::rat_frac(num, multi_character_degree(shape) as i64)
}
