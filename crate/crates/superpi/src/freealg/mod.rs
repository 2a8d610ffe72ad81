//! The free algebra on the four families of #-variables y_{0,i} (even
//! symmetric), z_{0,i} (even skew), y_{1,i} (odd symmetric), z_{1,i} (odd
//! skew); polynomials with exact rational coefficients; the involution #,
//! the re-indexing action of S_<n>, polarization, standard polynomials, and
//! the Amitsur-style alternating polynomials.
//!
//! The algebra is non-unitary: the empty word is never stored. "Omitted"
//! frame positions in the Amitsur construction are handled by omission.

mod parser;

pub use parser::{parse, ParseError};

use crate::combinat::{partitions_of, Partition};
use crate::rat::{rat, Rat};
use crate::symgroup::{
    all_permutations, character_value, GroupAlgebraElement, MultiPermutation,
};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("cannot mix superinvolution and graded-involution polynomials")]
    ModeMismatch,
    #[error("polynomial is not multilinear on a canonical variable set")]
    NotMultilinear,
    #[error("multidegree mismatch: action has {action:?}, polynomial has {poly:?}")]
    MultidegreeMismatch { action: [usize; 4], poly: [usize; 4] },
    #[error("polynomial is not multihomogeneous")]
    NotHomogeneous,
}

/// The four variable families, in component order: even symmetric, even
/// skew, odd symmetric, odd skew.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarType {
    Y0,
    Z0,
    Y1,
    Z1,
}

impl VarType {
    pub const ALL: [VarType; 4] = [VarType::Y0, VarType::Z0, VarType::Y1, VarType::Z1];

    /// Z2-degree: 0 for even variables, 1 for odd.
    pub fn parity(self) -> u32 {
        match self {
            VarType::Y0 | VarType::Z0 => 0,
            VarType::Y1 | VarType::Z1 => 1,
        }
    }

    pub fn is_skew(self) -> bool {
        matches!(self, VarType::Z0 | VarType::Z1)
    }

    /// 0-based position in the multidegree tuple.
    pub fn component(self) -> usize {
        match self {
            VarType::Y0 => 0,
            VarType::Z0 => 1,
            VarType::Y1 => 2,
            VarType::Z1 => 3,
        }
    }

    pub fn from_component(c: usize) -> VarType {
        VarType::ALL[c]
    }

    pub fn token(self) -> &'static str {
        match self {
            VarType::Y0 => "y0",
            VarType::Z0 => "z0",
            VarType::Y1 => "y1",
            VarType::Z1 => "z1",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub vtype: VarType,
    pub index: u32,
}

impl Variable {
    pub fn new(vtype: VarType, index: u32) -> Self {
        assert!(index >= 1, "variable indices are 1-based");
        Variable { vtype, index }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.vtype.token(), self.index)
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A non-empty product of variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Variable>,
}

impl Word {
    pub fn new(letters: Vec<Variable>) -> Self {
        assert!(!letters.is_empty(), "the free algebra is non-unitary");
        Word { letters }
    }

    pub fn letters(&self) -> &[Variable] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().map(|v| v.to_string()).join("*"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which sign rule # follows when reversing a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Superinvolution,
    GradedInvolution,
}

/// (sign, reversal) of w under #. Superinvolution: sign =
/// (-1)^{s(s-1)/2} (-1)^t with s odd letters and t skew letters; graded
/// involution: sign = (-1)^t.
pub fn sharp_word(w: &Word, mode: Mode) -> (i64, Word) {
    let s = w.letters.iter().filter(|v| v.vtype.parity() == 1).count();
    let t = w.letters.iter().filter(|v| v.vtype.is_skew()).count();
    let mut exponent = t;
    if mode == Mode::Superinvolution && s >= 2 {
        exponent += s * (s - 1) / 2;
    }
    let sign = if exponent % 2 == 0 { 1 } else { -1 };
    let mut letters = w.letters.clone();
    letters.reverse();
    (sign, Word { letters })
}

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// canonical sorted word order; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPolynomial {
    mode: Mode,
    terms: BTreeMap<Word, Rat>,
}

impl SuperPolynomial {
    pub fn zero(mode: Mode) -> Self {
        SuperPolynomial { mode, terms: BTreeMap::new() }
    }

    pub fn monomial(mode: Mode, word: Word, coeff: Rat) -> Self {
        let mut p = SuperPolynomial::zero(mode);
        p.add_term(word, coeff);
        p
    }

    pub fn variable(mode: Mode, v: Variable) -> Self {
        SuperPolynomial::monomial(mode, Word::new(vec![v]), rat(1))
    }

    pub fn from_terms(mode: Mode, it: impl IntoIterator<Item = (Word, Rat)>) -> Self {
        let mut p = SuperPolynomial::zero(mode);
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    fn add_term(&mut self, w: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_mode(&self, other: &Self) -> Result<(), FreeAlgError> {
        if self.mode != other.mode {
            return Err(FreeAlgError::ModeMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.check_mode(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return SuperPolynomial::zero(self.mode);
        }
        SuperPolynomial {
            mode: self.mode,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    /// Free-algebra product (word concatenation, bilinear).
    pub fn mul(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.check_mode(other)?;
        let mut out = SuperPolynomial::zero(self.mode);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// Linear extension of the involution to polynomials.
    pub fn sharp(&self) -> Self {
        let mut out = SuperPolynomial::zero(self.mode);
        for (w, c) in &self.terms {
            let (sign, rev) = sharp_word(w, self.mode);
            out.add_term(rev, c * rat(sign));
        }
        out
    }

    /// All distinct variables appearing in any term.
    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|w| w.letters.iter().copied())
            .collect()
    }

    /// True when every term is a permutation of one common repetition-free
    /// variable set.
    pub fn is_multilinear(&self) -> bool {
        let mut common: Option<BTreeSet<Variable>> = None;
        for w in self.terms.keys() {
            let set: BTreeSet<Variable> = w.letters.iter().copied().collect();
            if set.len() != w.len() {
                return false;
            }
            match &common {
                None => common = Some(set),
                Some(c) => {
                    if *c != set {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// If the polynomial is multilinear on exactly the variables
    /// y_{0,1..n1}, z_{0,1..n2}, y_{1,1..n3}, z_{1,1..n4}, returns
    /// (n1,n2,n3,n4). Zero and non-canonical polynomials return None.
    pub fn canonical_multidegree(&self) -> Option<[usize; 4]> {
        if self.is_zero() || !self.is_multilinear() {
            return None;
        }
        let vars = self.variables();
        let mut nd = [0usize; 4];
        for v in &vars {
            nd[v.vtype.component()] += 1;
        }
        for t in VarType::ALL {
            for i in 1..=nd[t.component()] {
                if !vars.contains(&Variable::new(t, i as u32)) {
                    return None;
                }
            }
        }
        Some(nd)
    }

    /// Applies a word map termwise (words may merge).
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        let mut out = SuperPolynomial::zero(self.mode);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }
}

/// Renames variables termwise; the map may merge distinct variables.
pub fn rename_variables(
    f: &SuperPolynomial,
    map: impl Fn(Variable) -> Variable,
) -> SuperPolynomial {
    f.map_words(|w| Word::new(w.letters().iter().map(|&v| map(v)).collect()))
}

/// Re-indexing action of S_<n>: component i permutes the indices of the
/// i-th variable family. Requires f multilinear on the canonical variable
/// set matching sigma's multidegree.
pub fn act(
    sigma: &MultiPermutation,
    f: &SuperPolynomial,
) -> Result<SuperPolynomial, FreeAlgError> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    let nd = f.canonical_multidegree().ok_or(FreeAlgError::NotMultilinear)?;
    if sigma.multidegree() != nd {
        return Err(FreeAlgError::MultidegreeMismatch {
            action: sigma.multidegree(),
            poly: nd,
        });
    }
    Ok(rename_variables(f, |v| {
        Variable::new(v.vtype, sigma.comps()[v.vtype.component()].apply(v.index))
    }))
}

/// Linear extension of `act` to group-algebra elements.
pub fn ga_act(
    a: &GroupAlgebraElement<MultiPermutation>,
    f: &SuperPolynomial,
) -> Result<SuperPolynomial, FreeAlgError> {
    let mut out = SuperPolynomial::zero(f.mode());
    for (sigma, c) in a.terms() {
        out = out.add(&act(sigma, f)?.scale(c))?;
    }
    Ok(out)
}

/// St_k = sum over sigma in S_k of sgn(sigma) x_{sigma(1)} ... x_{sigma(k)}
/// on variables of the given type, indices 1..k.
pub fn standard_poly(k: usize, vtype: VarType, mode: Mode) -> SuperPolynomial {
    assert!(k >= 1);
    let mut out = SuperPolynomial::zero(mode);
    for sigma in all_permutations(k) {
        let letters =
            (1..=k as u32).map(|i| Variable::new(vtype, sigma.apply(i))).collect();
        out.add_term(Word::new(letters), rat(sigma.sign()));
    }
    out
}

/// m-fold product of f with itself.
pub fn poly_power(f: &SuperPolynomial, m: usize) -> SuperPolynomial {
    assert!(m >= 1);
    let mut out = f.clone();
    for _ in 1..m {
        out = out.mul(f).expect("same mode");
    }
    out
}

/// Full polarization: every variable occurring m times is replaced by m
/// indexed copies (the original plus m-1 fresh ones), summed over all ways
/// to assign the copies to its occurrences. Requires a multihomogeneous
/// input; the result is multilinear.
pub fn multilinearize(f: &SuperPolynomial) -> Result<SuperPolynomial, FreeAlgError> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    let mut counts_per_word: Vec<BTreeMap<Variable, usize>> = Vec::new();
    for (w, _) in f.terms() {
        let mut m = BTreeMap::new();
        for &v in w.letters() {
            *m.entry(v).or_insert(0) += 1;
        }
        counts_per_word.push(m);
    }
    if counts_per_word.windows(2).any(|p| p[0] != p[1]) {
        return Err(FreeAlgError::NotHomogeneous);
    }
    let counts = counts_per_word.remove(0);

    let mut next_index = [0u32; 4];
    for v in f.variables() {
        let c = v.vtype.component();
        next_index[c] = next_index[c].max(v.index + 1);
    }
    for n in &mut next_index {
        *n = (*n).max(1);
    }

    let mut out = f.clone();
    for (&v, &m) in &counts {
        if m < 2 {
            continue;
        }
        let mut copies = vec![v];
        for _ in 1..m {
            let c = v.vtype.component();
            copies.push(Variable::new(v.vtype, next_index[c]));
            next_index[c] += 1;
        }
        let mut next = SuperPolynomial::zero(f.mode());
        for (w, coeff) in out.terms() {
            let positions: Vec<usize> = w
                .letters()
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x == v)
                .map(|(i, _)| i)
                .collect();
            for perm in copies.iter().copied().permutations(m) {
                let mut letters = w.letters().to_vec();
                for (&p, &copy) in positions.iter().zip(&perm) {
                    letters[p] = copy;
                }
                next.add_term(Word::new(letters), coeff.clone());
            }
        }
        out = next;
    }
    Ok(out)
}

/// How an Amitsur frame position x_j is filled: omitted (x_j = 1) or a
/// fresh variable of the given type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameSlot {
    Omit,
    Fresh(VarType),
}

/// Alternating-symmetrized polynomial
/// sum over sigma in S_k of chi(sigma) x_1 a_{sigma(1)} x_2 ... a_{sigma(k)} x_{k+1},
/// where chi is the character of the (d+1) x (l+1) rectangle, the special
/// variables a_1..a_k have the i-th type (i in 1..4), and the frame decides
/// each x_j. k = (d+1)(l+1); frame variables are pairwise distinct, with
/// indices chosen not to collide with the special ones.
pub fn amitsur_poly(
    i: usize,
    d: u32,
    l: u32,
    frame: &[FrameSlot],
    mode: Mode,
) -> SuperPolynomial {
    assert!((1..=4).contains(&i), "variable family index is 1-based");
    let k = ((d + 1) * (l + 1)) as usize;
    assert_eq!(frame.len(), k + 1, "frame must assign x_1..x_{{k+1}}");
    let special = VarType::from_component(i - 1);

    let mut next_index = [1u32; 4];
    next_index[special.component()] = k as u32 + 1;
    let frame_vars: Vec<Option<Variable>> = frame
        .iter()
        .map(|slot| match slot {
            FrameSlot::Omit => None,
            FrameSlot::Fresh(t) => {
                let idx = next_index[t.component()];
                next_index[t.component()] += 1;
                Some(Variable::new(*t, idx))
            }
        })
        .collect();

    let rectangle = Partition::new(vec![l + 1; (d + 1) as usize]).unwrap();
    let chi: HashMap<Vec<u32>, i64> = partitions_of(k)
        .into_iter()
        .map(|ct| {
            let v = character_value(&rectangle, &ct).expect("matching sizes");
            (ct.parts().to_vec(), v)
        })
        .collect();

    let mut out = SuperPolynomial::zero(mode);
    for sigma in all_permutations(k) {
        let c = chi[sigma.cycle_type().parts()];
        if c == 0 {
            continue;
        }
        let mut letters = Vec::new();
        for j in 1..=k {
            if let Some(v) = frame_vars[j - 1] {
                letters.push(v);
            }
            letters.push(Variable::new(special, sigma.apply(j as u32)));
        }
        if let Some(v) = frame_vars[k] {
            letters.push(v);
        }
        out.add_term(Word::new(letters), rat(c));
    }
    out
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}
