//! Partitions, multipartitions, Young tableaux, hooks.
//!
//! Conventions used throughout:
//! * partitions store weakly decreasing positive parts; the empty partition
//!   is the empty list,
//! * `part(i)` is 1-based and returns 0 past the last row,
//! * enumeration orders are deterministic: partitions in reverse-lexicographic
//!   order ((n) first, (1,...,1) last), multipartitions as the Cartesian
//!   product with the fourth component varying fastest.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatError {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, CombinatError> {
        let parts = parts.into();
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from an arbitrary multiset of part sizes,
    /// sorting and dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// 1-based row length; 0 beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "part index is 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cellwise diagram containment: self_i <= other_i for every row.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.height()).all(|i| self.part(i) <= other.part(i))
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    comps: [Partition; 4],
}

impl MultiPartition {
    pub fn new(comps: [Partition; 4]) -> Self {
        MultiPartition { comps }
    }

    pub fn comps(&self) -> &[Partition; 4] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &Partition {
        assert!((1..=4).contains(&i), "component index is 1-based");
        &self.comps[i - 1]
    }

    pub fn multidegree(&self) -> [usize; 4] {
        [self.comps[0].n(), self.comps[1].n(), self.comps[2].n(), self.comps[3].n()]
    }

    pub fn n(&self) -> usize {
        self.comps.iter().map(Partition::n).sum()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.comps[0], self.comps[1], self.comps[2], self.comps[3])
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.comps.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let comps = <[Partition; 4]>::deserialize(d)?;
        Ok(MultiPartition { comps })
    }
}

/// All multipartitions of the given multidegree: Cartesian product of the
/// component partition lists, fourth component varying fastest.
pub fn multipartitions_of(nd: [usize; 4]) -> Vec<MultiPartition> {
    let lists: Vec<Vec<Partition>> = nd.iter().map(|&n| partitions_of(n)).collect();
    let mut out = Vec::new();
    for a in &lists[0] {
        for b in &lists[1] {
            for c in &lists[2] {
                for d in &lists[3] {
                    out.push(MultiPartition {
                        comps: [a.clone(), b.clone(), c.clone(), d.clone()],
                    });
                }
            }
        }
    }
    out
}

/// The hook H(d,l): partitions whose rows below the d-th all have length <= l.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HookSpec {
    pub d: u32,
    pub l: u32,
}

impl HookSpec {
    pub fn new(d: u32, l: u32) -> Self {
        HookSpec { d, l }
    }
}

impl fmt::Display for HookSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{})", self.d, self.l)
    }
}

pub fn hook_contains(h: HookSpec, lambda: &Partition) -> bool {
    lambda.part(h.d as usize + 1) <= h.l
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuadHookSpec(pub [HookSpec; 4]);

impl QuadHookSpec {
    /// Flat representation (d1,l1,d2,l2,d3,l3,d4,l4), the serialization and
    /// lexicographic-comparison form.
    pub fn flat(&self) -> [u32; 8] {
        let [a, b, c, d] = self.0;
        [a.d, a.l, b.d, b.l, c.d, c.l, d.d, d.l]
    }

    pub fn from_flat(v: [u32; 8]) -> Self {
        QuadHookSpec([
            HookSpec::new(v[0], v[1]),
            HookSpec::new(v[2], v[3]),
            HookSpec::new(v[4], v[5]),
            HookSpec::new(v[6], v[7]),
        ])
    }
}

impl fmt::Display for QuadHookSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({},{};{},{};{},{};{},{})", a.d, a.l, b.d, b.l, c.d, c.l, d.d, d.l)
    }
}

impl Serialize for QuadHookSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.flat().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadHookSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(QuadHookSpec::from_flat(<[u32; 8]>::deserialize(d)?))
    }
}

pub fn quad_hook_contains(h: &QuadHookSpec, lambda: &MultiPartition) -> bool {
    (0..4).all(|i| hook_contains(h.0[i], &lambda.comps()[i]))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self, CombinatError> {
        if rows.len() != shape.height() {
            return Err(CombinatError::InvalidTableau(format!(
                "expected {} rows, got {}",
                shape.height(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i + 1) as usize {
                return Err(CombinatError::InvalidTableau(format!(
                    "row {} has length {}, shape wants {}",
                    i + 1,
                    row.len(),
                    shape.part(i + 1)
                )));
            }
        }
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e as usize > n || seen[e as usize] {
                return Err(CombinatError::InvalidTableau(format!(
                    "entries must be a bijection onto 1..={n}"
                )));
            }
            seen[e as usize] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// The row-major filling 1,2,...,n.
    pub fn first_by_rows(shape: Partition) -> Self {
        let mut next = 1u32;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<u32> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        let cols = self.shape.part(1) as usize;
        (0..cols)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn is_standard(&self) -> bool {
        let row_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let col_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        row_ok && col_ok
    }

    /// Applies `f` to every entry. `f` must be injective on 1..=n.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Tableau {
        let rows = self.rows.iter().map(|r| r.iter().map(|&e| f(e)).collect()).collect();
        Tableau { shape: self.shape.clone(), rows }
    }

    /// Entry at 1-based (row, column).
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiTableau {
    comps: [Tableau; 4],
}

impl MultiTableau {
    /// Component i is filled with 1..=n_i independently.
    pub fn new(comps: [Tableau; 4]) -> Self {
        MultiTableau { comps }
    }

    pub fn first_by_rows(shape: &MultiPartition) -> Self {
        let c = shape.comps();
        MultiTableau {
            comps: [
                Tableau::first_by_rows(c[0].clone()),
                Tableau::first_by_rows(c[1].clone()),
                Tableau::first_by_rows(c[2].clone()),
                Tableau::first_by_rows(c[3].clone()),
            ],
        }
    }

    pub fn comps(&self) -> &[Tableau; 4] {
        &self.comps
    }

    pub fn shape(&self) -> MultiPartition {
        MultiPartition::new([
            self.comps[0].shape().clone(),
            self.comps[1].shape().clone(),
            self.comps[2].shape().clone(),
            self.comps[3].shape().clone(),
        ])
    }
}

/// All standard tableaux of shape `lambda`, by depth-first placement of
/// 1,...,n into the leftmost open cell of each admissible row.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.n();
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut fill: Vec<Vec<u32>> = shape.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();
    fn go(
        k: u32,
        n: usize,
        shape: &[usize],
        fill: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
        lambda: &Partition,
    ) {
        if k as usize > n {
            out.push(Tableau {
                shape: lambda.clone(),
                rows: fill.clone(),
            });
            return;
        }
        for i in 0..shape.len() {
            let c = fill[i].len();
            if c < shape[i] && (i == 0 || fill[i - 1].len() > c) {
                fill[i].push(k);
                go(k + 1, n, shape, fill, out, lambda);
                fill[i].pop();
            }
        }
    }
    go(1, n, &shape, &mut fill, &mut out, lambda);
    out
}

/// d_lambda via the hook-length formula. The degree of the empty partition
/// is 1.
pub fn character_degree(lambda: &Partition) -> u64 {
    let n = lambda.n();
    assert!(n <= 30, "character_degree limited to n <= 30");
    let conj = lambda.conjugate();
    let mut hooks: u128 = 1;
    for i in 1..=lambda.height() {
        for j in 1..=lambda.part(i) as usize {
            let arm = lambda.part(i) as usize - j;
            let leg = conj.part(j) as usize - i;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    let fact: u128 = (1..=n as u128).product();
    u64::try_from(fact / hooks).expect("degree exceeds u64")
}

pub fn multi_character_degree(lambda: &MultiPartition) -> u64 {
    lambda.comps().iter().map(character_degree).product()
}

pub fn factorial(n: usize) -> u128 {
    assert!(n <= 33, "factorial limited to n <= 33");
    (1..=n as u128).product()
}

/// n! / (n1! n2! n3! n4!) for a multidegree summing to n.
pub fn multinomial(nd: [usize; 4]) -> u128 {
    let n: usize = nd.iter().sum();
    let mut num = factorial(n);
    for k in nd {
        num /= factorial(k);
    }
    num
}

/// All multidegrees (n1,n2,n3,n4) with n1+n2+n3+n4 = n, ascending in
/// (n1,n2,n3); starts at (0,0,0,n).
pub fn multidegrees_of_total(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for n1 in 0..=n {
        for n2 in 0..=n - n1 {
            for n3 in 0..=n - n1 - n2 {
                out.push([n1, n2, n3, n - n1 - n2 - n3]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1]).is_ok());
        assert!(Partition::new(vec![]).is_ok());
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn partitions_enumeration_order() {
        let got = partitions_of(3);
        assert_eq!(got, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn partition_counts() {
        // p(0..9) = 1,1,2,3,5,7,11,15,22
        let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(partitions_of(n).len(), e, "p({n})");
        }
        assert!(partitions_of(11).contains(&p(&[5, 3, 2, 1])));
    }

    #[test]
    fn multipartition_enumeration() {
        let got = multipartitions_of([0, 0, 0, 2]);
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].comps()[3], p(&[2]));
        assert_eq!(got[1].comps()[3], p(&[1, 1]));
        assert_eq!(multipartitions_of([1, 0, 0, 1]).len(), 1);
        assert_eq!(multipartitions_of([2, 1, 0, 0]).len(), 2);
    }

    #[test]
    fn hook_membership() {
        assert!(hook_contains(HookSpec::new(2, 2), &p(&[5, 3, 2, 1])));
        assert!(!hook_contains(HookSpec::new(1, 1), &p(&[5, 3, 2, 1])));
        assert!(hook_contains(HookSpec::new(0, 0), &Partition::empty()));
    }

    #[test]
    fn quad_hook_membership() {
        let h = QuadHookSpec::from_flat([1, 0, 0, 0, 0, 0, 0, 1]);
        let inside = MultiPartition::new([
            p(&[1]),
            Partition::empty(),
            Partition::empty(),
            p(&[1, 1]),
        ]);
        assert!(quad_hook_contains(&h, &inside));

        let h2 = QuadHookSpec::from_flat([1, 0, 0, 0, 0, 0, 0, 0]);
        let outside = MultiPartition::new([
            Partition::empty(),
            Partition::empty(),
            Partition::empty(),
            p(&[1]),
        ]);
        assert!(!quad_hook_contains(&h2, &outside));

        let all_empty = MultiPartition::new([
            Partition::empty(),
            Partition::empty(),
            Partition::empty(),
            Partition::empty(),
        ]);
        assert!(quad_hook_contains(&QuadHookSpec::from_flat([0; 8]), &all_empty));
    }

    #[test]
    fn hook_monotone_under_containment() {
        // If mu is in the hook and lambda is contained in mu, lambda is too.
        for h in [HookSpec::new(1, 1), HookSpec::new(0, 2), HookSpec::new(2, 0)] {
            for mu in partitions_of(5) {
                if !hook_contains(h, &mu) {
                    continue;
                }
                for k in 0..=5 {
                    for lam in partitions_of(k) {
                        if lam.contained_in(&mu) {
                            assert!(hook_contains(h, &lam), "{h} {lam} in {mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn standard_tableaux_small_shapes() {
        assert_eq!(standard_tableaux(&p(&[4])).len(), 1);
        assert_eq!(standard_tableaux(&p(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), 2);
        assert_eq!(standard_tableaux(&Partition::empty()).len(), 1);
        for t in standard_tableaux(&p(&[3, 2, 1])) {
            assert!(t.is_standard());
        }
    }

    #[test]
    fn degree_formula_examples() {
        assert_eq!(character_degree(&p(&[1, 1, 1])), 1);
        assert_eq!(character_degree(&p(&[2, 2])), 2);
        assert_eq!(character_degree(&p(&[2, 1])), 2);
        assert_eq!(character_degree(&Partition::empty()), 1);
        assert_eq!(character_degree(&p(&[5, 3, 2, 1])), 2310);
    }

    #[test]
    fn degree_matches_tableau_count_and_square_sum() {
        for n in 0..=6 {
            let mut sq = 0u64;
            for lam in partitions_of(n) {
                let d = character_degree(&lam);
                assert_eq!(d, standard_tableaux(&lam).len() as u64, "{lam}");
                sq += d * d;
            }
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(sq, fact.max(1), "sum of squares at n={n}");
        }
    }

    #[test]
    fn multi_degree_is_product() {
        let m = MultiPartition::new([p(&[2]), p(&[1, 1]), Partition::empty(), p(&[2, 1])]);
        assert_eq!(multi_character_degree(&m), 1 * 1 * 1 * 2);
        assert_eq!(m.multidegree(), [2, 2, 0, 3]);
    }

    #[test]
    fn first_by_rows_is_standard() {
        let t = Tableau::first_by_rows(p(&[3, 2]));
        assert!(t.is_standard());
        assert_eq!(t.rows(), &[vec![1, 2, 3], vec![4, 5]]);
        assert_eq!(t.columns(), vec![vec![1, 4], vec![2, 5], vec![3]]);
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(p(&[2, 1]), vec![vec![1, 2], vec![3]]).is_ok());
        assert!(Tableau::new(p(&[2, 1]), vec![vec![1, 2], vec![2]]).is_err());
        assert!(Tableau::new(p(&[2, 1]), vec![vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn factorials_and_multinomials() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
        assert_eq!(multinomial([2, 0, 0, 0]), 1);
        assert_eq!(multinomial([1, 0, 0, 1]), 2);
        assert_eq!(multinomial([1, 1, 1, 1]), 24);
        assert_eq!(multinomial([2, 2, 0, 0]), 6);
    }

    #[test]
    fn multidegree_enumeration() {
        let ds = multidegrees_of_total(2);
        assert_eq!(ds.len(), 10);
        assert_eq!(ds[0], [0, 0, 0, 2]);
        assert_eq!(ds[ds.len() - 1], [2, 0, 0, 0]);
        for d in &ds {
            assert_eq!(d.iter().sum::<usize>(), 2);
        }
        // Multinomial weights over all compositions sum to 4^n.
        let total: u128 = multidegrees_of_total(3).iter().map(|&d| multinomial(d)).sum();
        assert_eq!(total, 64);
    }

    #[test]
    fn serde_shapes() {
        let m = MultiPartition::new([p(&[3, 1]), Partition::empty(), p(&[1]), p(&[2, 2])]);
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, "[[3,1],[],[1],[2,2]]");
        let back: MultiPartition = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());

        let h = QuadHookSpec::from_flat([1, 0, 0, 0, 0, 0, 2, 0]);
        assert_eq!(serde_json::to_string(&h).unwrap(), "[1,0,0,0,0,0,2,0]");
    }
}
