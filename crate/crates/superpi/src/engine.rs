//! Evaluation of multilinear #-superpolynomials on finite-dimensional
//! #-superalgebras, and the invariants built on top of it: codimensions,
//! quotient-module traces, cocharacter multiplicities, and spans of
//! substitution ideals in a fixed multidegree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebras::{AlgebraError, SuperAlgebra};
use crate::combinat::{
    factorial, multi_character_degree, multidegrees_of_total, multinomial, multipartitions_of,
    MultiPartition, MultiTableau, Partition,
};
use crate::freealg::{
    ga_act, multilinearize, sharp_word, FreeAlgError, Mode, SuperPolynomial, VarType, Variable,
    Word,
};
use crate::linalg::RowEchelon;
use crate::rat::{is_nonneg_integer, rat, Rat};
use crate::symgroup::{
    conjugacy_classes, multi_character_value, multi_essential_idempotent, MultiPermutation,
    SymGroupError,
};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("polynomial is not multilinear")]
    NotMultilinear,
    #[error("polynomial mode {poly:?} does not match algebra mode {algebra:?}")]
    ModeMismatch { poly: Mode, algebra: Mode },
    #[error("no vector assigned to {0}")]
    MissingAssignment(Variable),
    #[error("vector assigned to {0} is not in its component")]
    ComponentMismatch(Variable),
    #[error("multidegree {got:?} does not match {want:?}")]
    MultidegreeMismatch { want: [usize; 4], got: [usize; 4] },
    #[error("computation needs {needed} matrix entries but the budget allows {budget}")]
    Resource { needed: u128, budget: u128 },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    SymGroup(#[from] SymGroupError),
}

/// Size cap for rank computations, counted in matrix entries
/// (roughly n! * frames * dim). Exceeding it is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_entries: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_entries: 100_000_000 }
    }
}

impl Budget {
    pub fn new(max_entries: u128) -> Self {
        Budget { max_entries }
    }

    fn charge(&self, needed: u128) -> Result<(), EngineError> {
        if needed > self.max_entries {
            Err(EngineError::Resource { needed, budget: self.max_entries })
        } else {
            Ok(())
        }
    }
}

/// Assignment of algebra elements (coordinate vectors) to variables.
pub type EvaluationFrame = BTreeMap<Variable, Vec<Rat>>;

/// The canonical letters of multidegree nd: y0_1..y0_{n1}, z0_1..z0_{n2},
/// y1_1..y1_{n3}, z1_1..z1_{n4}, in that order.
pub fn canonical_letters(nd: [usize; 4]) -> Vec<Variable> {
    let mut out = Vec::new();
    for t in VarType::ALL {
        for i in 1..=nd[t.component()] {
            out.push(Variable::new(t, i as u32));
        }
    }
    out
}

/// All n! multilinear monomials of multidegree nd, as permutations of the
/// canonical letters in lexicographic order.
pub fn canonical_monomials(nd: [usize; 4]) -> Vec<Word> {
    use itertools::Itertools;
    let letters = canonical_letters(nd);
    let n = letters.len();
    if n == 0 {
        return Vec::new();
    }
    letters.iter().copied().permutations(n).map(Word::new).collect()
}

fn eval_terms<'a>(
    a: &SuperAlgebra,
    f: &SuperPolynomial,
    look: impl Fn(Variable) -> &'a [Rat],
) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.dim()];
    for (w, c) in f.terms() {
        let letters = w.letters();
        let mut acc: Vec<Rat> = look(letters[0]).to_vec();
        for &l in &letters[1..] {
            if acc.iter().all(Rat::is_zero) {
                break;
            }
            acc = a.element_mul(&acc, look(l)).expect("frame vectors match the algebra dimension");
        }
        for (o, x) in out.iter_mut().zip(acc) {
            *o += c * &x;
        }
    }
    out
}

/// Evaluate f at the given frame. Every variable of f must carry a vector
/// lying in the component its type names.
pub fn evaluate(
    a: &SuperAlgebra,
    f: &SuperPolynomial,
    frame: &EvaluationFrame,
) -> Result<Vec<Rat>, EngineError> {
    if f.mode() != a.mode() {
        return Err(EngineError::ModeMismatch { poly: f.mode(), algebra: a.mode() });
    }
    let comps = a.component_bases()?;
    let mut membership: [Option<RowEchelon>; 4] = [None, None, None, None];
    for v in f.variables() {
        let vec = frame.get(&v).ok_or(EngineError::MissingAssignment(v))?;
        if vec.len() != a.dim() {
            return Err(EngineError::ComponentMismatch(v));
        }
        let c = v.vtype.component();
        let ech = membership[c].get_or_insert_with(|| {
            let mut e = RowEchelon::new(a.dim());
            for b in &comps.comps[c] {
                e.insert(b.clone());
            }
            e
        });
        if !ech.contains(vec) {
            return Err(EngineError::ComponentMismatch(v));
        }
    }
    Ok(eval_terms(a, f, |v| frame[&v].as_slice()))
}

/// Whether the multilinear f vanishes under every substitution of algebra
/// elements. By multilinearity it suffices to run over component basis
/// vectors, which is what this does.
pub fn is_identity(a: &SuperAlgebra, f: &SuperPolynomial) -> Result<bool, EngineError> {
    if f.mode() != a.mode() {
        return Err(EngineError::ModeMismatch { poly: f.mode(), algebra: a.mode() });
    }
    if !f.is_multilinear() {
        return Err(EngineError::NotMultilinear);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let comps = a.component_bases()?;
    let vars: Vec<Variable> = f.variables().into_iter().collect();
    let choices: Vec<&[Vec<Rat>]> =
        vars.iter().map(|v| comps.comps[v.vtype.component()].as_slice()).collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(true);
    }
    let mut counters = vec![0usize; vars.len()];
    loop {
        let val = eval_terms(a, f, |v| {
            let i = vars.iter().position(|&x| x == v).expect("variable of f");
            choices[i][counters[i]].as_slice()
        });
        if val.iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
        let mut i = vars.len();
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            counters[i] += 1;
            if counters[i] < choices[i].len() {
                break;
            }
            counters[i] = 0;
        }
    }
}

/// Identity test for a multihomogeneous f, via multilinearization. In
/// characteristic zero the result equals the identity status of f itself.
pub fn is_identity_general(a: &SuperAlgebra, f: &SuperPolynomial) -> Result<bool, EngineError> {
    let ml = multilinearize(f)?;
    is_identity(a, &ml)
}

/// One frame's worth of columns of the evaluation matrix, transposed:
/// rows indexed by output coordinate, columns by monomial. Products are
/// shared along common prefixes, and a vanishing prefix skips its whole
/// subtree of monomials.
fn frame_rows(a: &SuperAlgebra, choices: &[&[Vec<Rat>]], fi: usize, facts: &[usize]) -> Vec<Vec<Rat>> {
    let n = choices.len();
    let nfact = facts[n];
    let mut idxs = vec![0usize; n];
    let mut rem = fi;
    for i in (0..n).rev() {
        let r = choices[i].len();
        idxs[i] = rem % r;
        rem /= r;
    }
    let assign: Vec<&Vec<Rat>> = (0..n).map(|i| &choices[i][idxs[i]]).collect();
    let mut out = vec![vec![Rat::zero(); nfact]; a.dim()];
    let mut used = vec![false; n];
    let mut col = 0usize;
    dfs_eval(a, &assign, &mut used, None, 0, &mut col, &mut out, facts);
    debug_assert_eq!(col, nfact);
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs_eval(
    a: &SuperAlgebra,
    assign: &[&Vec<Rat>],
    used: &mut [bool],
    prefix: Option<&Vec<Rat>>,
    depth: usize,
    col: &mut usize,
    out: &mut [Vec<Rat>],
    facts: &[usize],
) {
    let n = assign.len();
    if depth == n {
        let p = prefix.expect("nonempty word");
        for (row, x) in out.iter_mut().zip(p) {
            if !x.is_zero() {
                row[*col] = x.clone();
            }
        }
        *col += 1;
        return;
    }
    for i in 0..n {
        if used[i] {
            continue;
        }
        let next: Vec<Rat> = match prefix {
            None => assign[i].clone(),
            Some(p) => a.element_mul(p, assign[i]).expect("basis vectors match the dimension"),
        };
        if next.iter().all(Rat::is_zero) {
            *col += facts[n - depth - 1];
            continue;
        }
        used[i] = true;
        dfs_eval(a, assign, used, Some(&next), depth + 1, col, out, facts);
        used[i] = false;
    }
}

/// Row space of the transposed evaluation matrix: width n!, one inserted
/// row per (frame, output coordinate). Frames are evaluated in parallel in
/// fixed-size chunks; insertion order is by frame index, so the result is
/// independent of the worker count. Stops early once the rank reaches n!.
fn evaluation_echelon(
    a: &SuperAlgebra,
    choices: &[&[Vec<Rat>]],
    budget: &Budget,
) -> Result<RowEchelon, EngineError> {
    let n = choices.len();
    assert!(n >= 1);
    if n > 20 {
        return Err(EngineError::Resource { needed: u128::MAX, budget: budget.max_entries });
    }
    let nfact_u = factorial(n);
    let mut frames: u128 = 1;
    for c in choices {
        frames = frames.saturating_mul(c.len() as u128);
    }
    let needed = nfact_u
        .saturating_mul(frames.saturating_mul(a.dim() as u128).saturating_add(1));
    budget.charge(needed)?;
    let nfact = nfact_u as usize;
    let mut ech = RowEchelon::new(nfact);
    if frames == 0 {
        return Ok(ech);
    }
    let total = frames as usize;
    let facts: Vec<usize> = (0..=n).map(|k| factorial(k) as usize).collect();
    const CHUNK: usize = 64;
    let mut start = 0usize;
    while start < total {
        let end = (start + CHUNK).min(total);
        let blocks: Vec<Vec<Vec<Rat>>> = (start..end)
            .into_par_iter()
            .map(|fi| frame_rows(a, choices, fi, &facts))
            .collect();
        for rows in blocks {
            for row in rows {
                ech.insert(row);
            }
            if ech.rank() == nfact {
                return Ok(ech);
            }
        }
        start = end;
    }
    Ok(ech)
}

/// The multilinear quotient P / (P ∩ Id) at one multidegree, presented on
/// the monomial basis: reduced row space of the evaluation functionals,
/// whose pivot monomials form a basis of the quotient.
pub struct QuotientStructure {
    nd: [usize; 4],
    words: Vec<Word>,
    index: BTreeMap<Word, usize>,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl QuotientStructure {
    pub fn multidegree(&self) -> [usize; 4] {
        self.nd
    }

    pub fn codimension(&self) -> usize {
        self.pivots.len()
    }

    /// Monomials whose classes form a basis of the quotient.
    pub fn basis_words(&self) -> Vec<&Word> {
        self.pivots.iter().map(|&p| &self.words[p]).collect()
    }

    /// Trace of sigma's permutation action on the quotient. Row i expresses
    /// every monomial class in the pivot basis, so the diagonal entry for
    /// basis element i is row i evaluated at the relabeled pivot monomial.
    pub fn trace(&self, sigma: &MultiPermutation) -> Result<Rat, EngineError> {
        if sigma.multidegree() != self.nd {
            return Err(EngineError::MultidegreeMismatch {
                want: self.nd,
                got: sigma.multidegree(),
            });
        }
        let mut tr = Rat::zero();
        for (i, &p) in self.pivots.iter().enumerate() {
            let moved = relabel_word(&self.words[p], sigma);
            let j = self.index[&moved];
            tr += &self.rows[i][j];
        }
        Ok(tr)
    }
}

fn relabel_word(w: &Word, sigma: &MultiPermutation) -> Word {
    Word::new(
        w.letters()
            .iter()
            .map(|&v| {
                Variable::new(v.vtype, sigma.comps()[v.vtype.component()].apply(v.index))
            })
            .collect(),
    )
}

pub fn quotient_structure(
    a: &SuperAlgebra,
    nd: [usize; 4],
    budget: &Budget,
) -> Result<QuotientStructure, EngineError> {
    let letters = canonical_letters(nd);
    if letters.is_empty() {
        return Ok(QuotientStructure {
            nd,
            words: Vec::new(),
            index: BTreeMap::new(),
            rows: Vec::new(),
            pivots: Vec::new(),
        });
    }
    let comps = a.component_bases()?;
    let choices: Vec<&[Vec<Rat>]> =
        letters.iter().map(|v| comps.comps[v.vtype.component()].as_slice()).collect();
    let ech = evaluation_echelon(a, &choices, budget)?;
    let words = canonical_monomials(nd);
    let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    Ok(QuotientStructure {
        nd,
        words,
        index,
        rows: ech.rows().to_vec(),
        pivots: ech.pivots().to_vec(),
    })
}

/// c_nd(A): dimension of the multilinear component of multidegree nd
/// modulo the identities of A.
pub fn codimension(a: &SuperAlgebra, nd: [usize; 4], budget: &Budget) -> Result<usize, EngineError> {
    Ok(quotient_structure(a, nd, budget)?.codimension())
}

/// Trace of sigma on P / (P ∩ Id) at sigma's multidegree.
pub fn quotient_trace(
    a: &SuperAlgebra,
    nd: [usize; 4],
    sigma: &MultiPermutation,
    budget: &Budget,
) -> Result<Rat, EngineError> {
    quotient_structure(a, nd, budget)?.trace(sigma)
}

/// Ordinary codimension c_n(A): same rank computation with all n letters
/// ranging over the full basis of A, ignoring grading and involution.
pub fn ordinary_codimension(a: &SuperAlgebra, n: usize, budget: &Budget) -> Result<usize, EngineError> {
    if n == 0 {
        return Ok(0);
    }
    let basis: Vec<Vec<Rat>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    let choices: Vec<&[Vec<Rat>]> = (0..n).map(|_| basis.as_slice()).collect();
    Ok(evaluation_echelon(a, &choices, budget)?.rank())
}

/// Graded codimension: sum of multinomial(n; nd) * c_nd(A) over all
/// multidegrees of total n.
pub fn graded_codimension(a: &SuperAlgebra, n: usize, budget: &Budget) -> Result<u128, EngineError> {
    assert!(n >= 1);
    let mut total: u128 = 0;
    for nd in multidegrees_of_total(n) {
        let c = codimension(a, nd, budget)?;
        total += multinomial(nd) * c as u128;
    }
    Ok(total)
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityEntry {
    pub lambda: MultiPartition,
    pub m: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CocharacterReport {
    pub multidegree: [usize; 4],
    pub codim: usize,
    pub mults: Vec<MultiplicityEntry>,
}

/// Multiplicities of the irreducible characters in the quotient module at
/// multidegree nd, extracted from traces of class representatives:
/// m = (1 / prod n_i!) * sum over classes of |class| * chi(class) * trace.
/// Only nonzero multiplicities are reported. Two consistency gates are
/// enforced: every m is a non-negative integer, and sum m * d equals the
/// codimension.
pub fn cocharacter(
    a: &SuperAlgebra,
    nd: [usize; 4],
    budget: &Budget,
) -> Result<CocharacterReport, EngineError> {
    use itertools::iproduct;
    let qs = quotient_structure(a, nd, budget)?;
    let codim = qs.codimension();
    let classes: [Vec<_>; 4] = std::array::from_fn(|i| conjugacy_classes(nd[i]));

    struct Combo {
        cts: [Partition; 4],
        size: u128,
        trace: Rat,
    }
    let mut combos: Vec<Combo> = Vec::new();
    for (c1, c2, c3, c4) in iproduct!(&classes[0], &classes[1], &classes[2], &classes[3]) {
        let rep = MultiPermutation::new([
            c1.representative.clone(),
            c2.representative.clone(),
            c3.representative.clone(),
            c4.representative.clone(),
        ]);
        let trace = qs.trace(&rep)?;
        combos.push(Combo {
            cts: [
                c1.cycle_type.clone(),
                c2.cycle_type.clone(),
                c3.cycle_type.clone(),
                c4.cycle_type.clone(),
            ],
            size: c1.size as u128 * c2.size as u128 * c3.size as u128 * c4.size as u128,
            trace,
        });
    }

    let order: u128 = nd.iter().map(|&k| factorial(k)).product();
    let order_rat = Rat::from_integer(BigInt::from(order));
    let mut mults = Vec::new();
    let mut dim_sum: u128 = 0;
    for lambda in multipartitions_of(nd) {
        let mut s = Rat::zero();
        for cb in &combos {
            if cb.trace.is_zero() {
                continue;
            }
            let chi = multi_character_value(&lambda, &cb.cts)?;
            if chi == 0 {
                continue;
            }
            s += rat(chi) * Rat::from_integer(BigInt::from(cb.size)) * &cb.trace;
        }
        let m = s / &order_rat;
        if m.is_zero() {
            continue;
        }
        if !is_nonneg_integer(&m) {
            return Err(EngineError::Internal(format!(
                "multiplicity of {lambda} is {m}, not a non-negative integer"
            )));
        }
        let m_u = m.to_integer().to_u64().ok_or_else(|| {
            EngineError::Internal(format!("multiplicity of {lambda} overflows u64"))
        })?;
        dim_sum += m_u as u128 * multi_character_degree(&lambda) as u128;
        mults.push(MultiplicityEntry { lambda, m: m_u });
    }
    if dim_sum != codim as u128 {
        return Err(EngineError::Internal(format!(
            "multiplicities account for dimension {dim_sum}, codimension is {codim}"
        )));
    }
    Ok(CocharacterReport { multidegree: nd, codim, mults })
}

/// True iff the multiplicity of mu in the cocharacter vanishes. Decided
/// without character arithmetic: m_mu = 0 exactly when applying the
/// essential idempotent of one row-filled multitableau of shape mu to
/// every monomial of the multidegree yields identities of A.
pub fn multiplicity_oracle(
    a: &SuperAlgebra,
    mu: &MultiPartition,
    budget: &Budget,
) -> Result<bool, EngineError> {
    let nd = mu.multidegree();
    let n: usize = nd.iter().sum();
    if n == 0 {
        return Ok(true);
    }
    if n > 20 {
        return Err(EngineError::Resource { needed: u128::MAX, budget: budget.max_entries });
    }
    let comps = a.component_bases()?;
    let letters = canonical_letters(nd);
    let mut frames: u128 = 1;
    for v in &letters {
        frames = frames.saturating_mul(comps.comps[v.vtype.component()].len() as u128);
    }
    let t = MultiTableau::first_by_rows(mu);
    let e = multi_essential_idempotent(&t);
    let nfact = factorial(n);
    let per_word = (e.support_len() as u128)
        .saturating_mul(frames)
        .saturating_mul(a.dim() as u128);
    budget.charge(nfact.saturating_mul(per_word.saturating_add(1)))?;
    for w in canonical_monomials(nd) {
        let f = ga_act(&e, &SuperPolynomial::monomial(a.mode(), w, rat(1)))?;
        if !is_identity(a, &f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone)]
pub struct TidealSpan {
    pub dim: usize,
    pub basis: Vec<SuperPolynomial>,
}

/// Length-0-or-more prefix, then one nonempty block per generator
/// variable, inside a sequence of n letters. cuts[0] is the prefix
/// length, cuts[1..] the block lengths; the suffix takes the rest.
fn block_cuts(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(slot: usize, k: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slot == k + 1 {
            out.push(cur.clone());
            return;
        }
        let min = if slot == 0 { 0 } else { 1 };
        let blocks_after = k - slot;
        if rem < min + blocks_after {
            return;
        }
        for len in min..=rem - blocks_after {
            cur.push(len);
            go(slot + 1, k, rem - len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, k, n, &mut Vec::with_capacity(k + 1), &mut out);
    }
    out
}

/// Span inside P_nd of the substitution ideal generated by multilinear
/// generators: all u * g(s_1..s_k) * v, where the canonical letters are
/// ordered arbitrarily and cut into a prefix u, one nonempty block w_j per
/// generator variable, and a suffix v; a Y-variable receives w_j + w_j^#,
/// a Z-variable receives w_j - w_j^#, and blocks must match the variable's
/// parity. Returns the dimension and a reduced basis.
pub fn tideal_span(
    gens: &[SuperPolynomial],
    nd: [usize; 4],
    budget: &Budget,
) -> Result<TidealSpan, EngineError> {
    use itertools::Itertools;
    let live: Vec<&SuperPolynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let n: usize = nd.iter().sum();
    if live.is_empty() || n == 0 {
        return Ok(TidealSpan { dim: 0, basis: Vec::new() });
    }
    let mode = live[0].mode();
    for g in &live {
        if g.mode() != mode {
            return Err(EngineError::FreeAlg(FreeAlgError::ModeMismatch));
        }
        if !g.is_multilinear() {
            return Err(EngineError::NotMultilinear);
        }
    }
    if n > 20 {
        return Err(EngineError::Resource { needed: u128::MAX, budget: budget.max_entries });
    }
    let nfact = factorial(n);
    let gen_vars: Vec<Vec<Variable>> =
        live.iter().map(|g| g.variables().into_iter().collect()).collect();
    let gen_cuts: Vec<Vec<Vec<usize>>> =
        gen_vars.iter().map(|vs| block_cuts(n, vs.len())).collect();
    let elements: u128 = gen_cuts
        .iter()
        .map(|cs| nfact.saturating_mul(cs.len() as u128))
        .fold(0u128, u128::saturating_add);
    budget.charge(nfact.saturating_mul(elements.saturating_add(1)))?;

    let letters = canonical_letters(nd);
    let words = canonical_monomials(nd);
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut ech = RowEchelon::new(words.len());

    'gens: for (gi, g) in live.iter().enumerate() {
        let gvars = &gen_vars[gi];
        let k = gvars.len();
        for perm in letters.iter().copied().permutations(n) {
            if ech.rank() == words.len() {
                break 'gens;
            }
            'cuts: for cut in &gen_cuts[gi] {
                let mut pos = cut[0];
                let mut subs: Vec<SuperPolynomial> = Vec::with_capacity(k);
                for j in 0..k {
                    let block = &perm[pos..pos + cut[j + 1]];
                    pos += cut[j + 1];
                    let parity: u32 =
                        block.iter().map(|v| v.vtype.parity()).sum::<u32>() % 2;
                    if parity != gvars[j].vtype.parity() {
                        continue 'cuts;
                    }
                    let w = Word::new(block.to_vec());
                    let (sign, rev) = sharp_word(&w, mode);
                    let c = if gvars[j].vtype.is_skew() { rat(-sign) } else { rat(sign) };
                    let s = SuperPolynomial::from_terms(mode, [(w, rat(1)), (rev, c)]);
                    if s.is_zero() {
                        continue 'cuts;
                    }
                    subs.push(s);
                }
                let mut sub = SuperPolynomial::zero(mode);
                for (gw, gc) in g.terms() {
                    let mut acc: Option<SuperPolynomial> = None;
                    for l in gw.letters() {
                        let j = gvars.iter().position(|x| x == l).expect("generator variable");
                        acc = Some(match acc {
                            None => subs[j].clone(),
                            Some(p) => p.mul(&subs[j])?,
                        });
                    }
                    sub = sub.add(&acc.expect("nonempty word").scale(gc))?;
                }
                let mut elem = sub;
                if cut[0] > 0 {
                    let u = SuperPolynomial::monomial(mode, Word::new(perm[..cut[0]].to_vec()), rat(1));
                    elem = u.mul(&elem)?;
                }
                if pos < n {
                    let v = SuperPolynomial::monomial(mode, Word::new(perm[pos..].to_vec()), rat(1));
                    elem = elem.mul(&v)?;
                }
                let mut row = vec![Rat::zero(); words.len()];
                for (w, c) in elem.terms() {
                    row[index[w]] = c.clone();
                }
                ech.insert(row);
            }
        }
    }

    let basis = ech
        .rows()
        .iter()
        .map(|row| {
            SuperPolynomial::from_terms(
                mode,
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (words[j].clone(), c.clone())),
            )
        })
        .collect();
    Ok(TidealSpan { dim: ech.rank(), basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{grassmann2, grassmann_trunc, matrix, matrix_super};
    use crate::freealg::{act, parse};
    use crate::rat::rat_frac;
    use crate::symgroup::{all_multipermutations, Permutation};

    fn budget() -> Budget {
        Budget::default()
    }

    fn pol(a: &SuperAlgebra, s: &str) -> SuperPolynomial {
        parse(s, a.mode()).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(c: [&[u32]; 4]) -> MultiPartition {
        MultiPartition::new(std::array::from_fn(|i| part(c[i])))
    }

    fn zero_vec(d: usize) -> Vec<Rat> {
        vec![Rat::zero(); d]
    }

    #[test]
    fn canonical_monomials_order() {
        let ws = canonical_monomials([1, 0, 0, 1]);
        let shown: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, vec!["y0_1*z1_1", "z1_1*y0_1"]);
        assert_eq!(canonical_monomials([1, 1, 1, 1]).len(), 24);
        assert!(canonical_monomials([0, 0, 0, 0]).is_empty());
    }

    #[test]
    fn evaluate_on_grassmann_generators() {
        let a = grassmann2();
        let mut frame = EvaluationFrame::new();
        frame.insert(Variable::new(VarType::Z1, 1), a.basis_vector(0));
        frame.insert(Variable::new(VarType::Z1, 2), a.basis_vector(1));

        let f = pol(&a, "z1_1*z1_2 + z1_2*z1_1");
        assert_eq!(evaluate(&a, &f, &frame).unwrap(), zero_vec(3));

        let g = pol(&a, "z1_1*z1_2");
        assert_eq!(evaluate(&a, &g, &frame).unwrap(), vec![rat(0), rat(0), rat(1)]);

        let zero_frame: EvaluationFrame = frame
            .keys()
            .map(|&v| (v, zero_vec(3)))
            .collect();
        assert_eq!(evaluate(&a, &g, &zero_frame).unwrap(), zero_vec(3));
    }

    #[test]
    fn evaluate_accepts_any_vector_in_the_component() {
        let a = grassmann2();
        let mut frame = EvaluationFrame::new();
        let e1_plus_e2: Vec<Rat> = vec![rat(1), rat(1), rat(0)];
        frame.insert(Variable::new(VarType::Z1, 1), e1_plus_e2);
        frame.insert(Variable::new(VarType::Z1, 2), a.basis_vector(0));
        let g = pol(&a, "z1_1*z1_2");
        // (e1 + e2) e1 = e2 e1 = -e1e2.
        assert_eq!(evaluate(&a, &g, &frame).unwrap(), vec![rat(0), rat(0), rat(-1)]);

        let mut scaled = EvaluationFrame::new();
        scaled.insert(Variable::new(VarType::Z1, 1), vec![rat_frac(1, 2), rat(0), rat(0)]);
        scaled.insert(Variable::new(VarType::Z1, 2), a.basis_vector(1));
        assert_eq!(
            evaluate(&a, &g, &scaled).unwrap(),
            vec![rat(0), rat(0), rat_frac(1, 2)]
        );
    }

    #[test]
    fn evaluate_rejects_bad_frames() {
        let a = grassmann2();
        let g = pol(&a, "z1_1*z1_2");
        let empty = EvaluationFrame::new();
        assert!(matches!(
            evaluate(&a, &g, &empty),
            Err(EngineError::MissingAssignment(_))
        ));

        // e1 is odd, so it cannot be assigned to an even symmetric variable.
        let mut frame = EvaluationFrame::new();
        frame.insert(Variable::new(VarType::Y0, 1), a.basis_vector(0));
        let f = pol(&a, "y0_1");
        assert!(matches!(
            evaluate(&a, &f, &frame),
            Err(EngineError::ComponentMismatch(_))
        ));

        let wrong_mode = SuperPolynomial::variable(
            Mode::GradedInvolution,
            Variable::new(VarType::Y0, 1),
        );
        assert!(matches!(
            evaluate(&a, &wrong_mode, &frame),
            Err(EngineError::ModeMismatch { .. })
        ));
    }

    #[test]
    fn grassmann_identities_and_non_identities() {
        let a = grassmann2();
        for s in ["y1_1", "y0_1*y0_2", "z1_1*z1_2 + z1_2*z1_1", "z0_1"] {
            assert!(is_identity(&a, &pol(&a, s)).unwrap(), "{s} should vanish");
        }
        for s in ["y0_1", "z1_1", "z1_1*z1_2", "z1_1*z1_2 - z1_2*z1_1"] {
            assert!(!is_identity(&a, &pol(&a, s)).unwrap(), "{s} should not vanish");
        }
        assert!(is_identity(&a, &SuperPolynomial::zero(a.mode())).unwrap());
        assert!(matches!(
            is_identity(&a, &pol(&a, "z1_1*z1_1")),
            Err(EngineError::NotMultilinear)
        ));
    }

    #[test]
    fn identity_status_is_stable_under_relabeling_and_sharp() {
        let a = grassmann2();
        for s in ["z1_1*z1_2 + z1_2*z1_1", "z1_1*z1_2"] {
            let f = pol(&a, s);
            let expect = is_identity(&a, &f).unwrap();
            for sigma in all_multipermutations(f.canonical_multidegree().unwrap()) {
                let moved = act(&sigma, &f).unwrap();
                assert_eq!(is_identity(&a, &moved).unwrap(), expect);
            }
            assert_eq!(is_identity(&a, &f.sharp()).unwrap(), expect);
        }
    }

    #[test]
    fn homogeneous_identity_testing_via_multilinearization() {
        let a = grassmann2();
        assert!(is_identity_general(&a, &pol(&a, "z1_1*z1_1")).unwrap());
        let st3 = crate::freealg::standard_poly(3, VarType::Z1, a.mode());
        assert!(is_identity_general(&a, &st3).unwrap());

        let m2 = matrix(2);
        let st2 = crate::freealg::standard_poly(2, VarType::Y0, m2.mode());
        assert!(!is_identity_general(&m2, &st2).unwrap());
        let st4 = crate::freealg::standard_poly(4, VarType::Y0, m2.mode());
        assert!(is_identity_general(&m2, &st4).unwrap());
    }

    #[test]
    fn grassmann_codimension_table() {
        let a = grassmann2();
        assert_eq!(codimension(&a, [1, 0, 0, 0], &budget()).unwrap(), 1);
        assert_eq!(codimension(&a, [0, 0, 0, 1], &budget()).unwrap(), 1);
        assert_eq!(codimension(&a, [0, 0, 0, 2], &budget()).unwrap(), 1);
        assert_eq!(codimension(&a, [2, 0, 0, 0], &budget()).unwrap(), 0);
        assert_eq!(codimension(&a, [1, 0, 0, 1], &budget()).unwrap(), 0);
        assert_eq!(codimension(&a, [0, 1, 0, 0], &budget()).unwrap(), 0);
        assert_eq!(codimension(&a, [0, 0, 1, 0], &budget()).unwrap(), 0);
        assert_eq!(codimension(&a, [0, 0, 0, 3], &budget()).unwrap(), 0);
        assert_eq!(codimension(&a, [1, 0, 0, 2], &budget()).unwrap(), 0);
        assert_eq!(codimension(&a, [0, 0, 0, 0], &budget()).unwrap(), 0);
    }

    #[test]
    fn split_matrix_codimensions() {
        // On M_{1,1}, even symmetric elements are the scalar matrices, so
        // both orderings of y0_1 y0_2 evaluate equal: codimension 1. The
        // odd skew component is spanned by E12, which squares to zero.
        let a = matrix_super(1);
        assert_eq!(codimension(&a, [2, 0, 0, 0], &budget()).unwrap(), 1);
        assert_eq!(codimension(&a, [0, 0, 0, 2], &budget()).unwrap(), 0);
    }

    #[test]
    fn codimension_is_bounded_by_factorial() {
        let a = grassmann_trunc(2, true);
        for n in 0..=3 {
            for nd in multidegrees_of_total(n) {
                let c = codimension(&a, nd, &budget()).unwrap();
                assert!(c <= factorial(n) as usize);
            }
        }
    }

    #[test]
    fn budget_refusal_reports_sizes() {
        let a = grassmann2();
        match codimension(&a, [0, 0, 0, 2], &Budget::new(10)) {
            Err(EngineError::Resource { needed, budget }) => {
                assert_eq!(budget, 10);
                // 2! * (4 frames * dim 3 + 1)
                assert_eq!(needed, 26);
            }
            other => panic!("expected a resource refusal, got {other:?}"),
        }
    }

    #[test]
    fn graded_codimensions_of_grassmann() {
        let a = grassmann2();
        assert_eq!(graded_codimension(&a, 1, &budget()).unwrap(), 2);
        assert_eq!(graded_codimension(&a, 2, &budget()).unwrap(), 1);
        assert_eq!(graded_codimension(&a, 3, &budget()).unwrap(), 0);
        assert_eq!(graded_codimension(&a, 4, &budget()).unwrap(), 0);
    }

    #[test]
    fn graded_codimension_at_most_4n_times_ordinary() {
        let a = grassmann2();
        let ordinary: Vec<usize> = (1..=4)
            .map(|n| ordinary_codimension(&a, n, &budget()).unwrap())
            .collect();
        assert_eq!(ordinary, vec![1, 1, 0, 0]);
        for n in 1..=4usize {
            let grs = graded_codimension(&a, n, &budget()).unwrap();
            assert!(grs <= 4u128.pow(n as u32) * ordinary[n - 1] as u128);
        }
    }

    #[test]
    fn ordinary_codimension_sees_the_unit() {
        let a = grassmann_trunc(2, true);
        assert_eq!(ordinary_codimension(&a, 0, &budget()).unwrap(), 0);
        assert_eq!(ordinary_codimension(&a, 1, &budget()).unwrap(), 1);
        assert_eq!(ordinary_codimension(&a, 2, &budget()).unwrap(), 2);
    }

    #[test]
    fn prefix_sharing_matches_direct_evaluation() {
        let a = grassmann_trunc(2, true);
        let comps = a.component_bases().unwrap();
        let letters = canonical_letters([1, 0, 0, 2]);
        let choices: Vec<&[Vec<Rat>]> = letters
            .iter()
            .map(|v| comps.comps[v.vtype.component()].as_slice())
            .collect();
        let words = canonical_monomials([1, 0, 0, 2]);
        let n = letters.len();
        let facts: Vec<usize> = (0..=n).map(|k| factorial(k) as usize).collect();
        let total: usize = choices.iter().map(|c| c.len()).product();
        for fi in 0..total {
            let rows = frame_rows(&a, &choices, fi, &facts);
            let mut idxs = vec![0usize; n];
            let mut rem = fi;
            for i in (0..n).rev() {
                idxs[i] = rem % choices[i].len();
                rem /= choices[i].len();
            }
            let frame: EvaluationFrame = letters
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, choices[i][idxs[i]].clone()))
                .collect();
            for (j, w) in words.iter().enumerate() {
                let direct = evaluate(
                    &a,
                    &SuperPolynomial::monomial(a.mode(), w.clone(), rat(1)),
                    &frame,
                )
                .unwrap();
                let from_rows: Vec<Rat> = (0..a.dim()).map(|d| rows[d][j].clone()).collect();
                assert_eq!(from_rows, direct, "frame {fi}, word {w}");
            }
        }
    }

    #[test]
    fn relabeling_a_word_agrees_with_the_polynomial_action() {
        let a = grassmann2();
        for w in canonical_monomials([1, 0, 0, 2]) {
            let f = SuperPolynomial::monomial(a.mode(), w.clone(), rat(1));
            for sigma in all_multipermutations([1, 0, 0, 2]) {
                let moved = act(&sigma, &f).unwrap();
                let terms: Vec<(Word, Rat)> =
                    moved.terms().map(|(x, c)| (x.clone(), c.clone())).collect();
                assert_eq!(terms, vec![(relabel_word(&w, &sigma), rat(1))]);
            }
        }
    }

    #[test]
    fn quotient_basis_and_traces_of_grassmann() {
        let a = grassmann2();
        let qs = quotient_structure(&a, [0, 0, 0, 2], &budget()).unwrap();
        assert_eq!(qs.codimension(), 1);
        let shown: Vec<String> = qs.basis_words().iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, vec!["z1_1*z1_2"]);

        let id = MultiPermutation::identity([0, 0, 0, 2]);
        assert_eq!(qs.trace(&id).unwrap(), rat(1));
        let swap = MultiPermutation::new([
            Permutation::identity(0),
            Permutation::identity(0),
            Permutation::identity(0),
            Permutation::from_cycles(2, &[&[1, 2]]).unwrap(),
        ]);
        // The quotient is the sign module.
        assert_eq!(qs.trace(&swap).unwrap(), rat(-1));

        let wrong = MultiPermutation::identity([0, 0, 0, 1]);
        assert!(matches!(
            qs.trace(&wrong),
            Err(EngineError::MultidegreeMismatch { .. })
        ));
        assert_eq!(
            quotient_trace(&a, [0, 0, 0, 2], &swap, &budget()).unwrap(),
            rat(-1)
        );
    }

    #[test]
    fn trace_at_identity_is_the_codimension() {
        let a = grassmann_trunc(2, true);
        for n in 0..=3 {
            for nd in multidegrees_of_total(n) {
                let qs = quotient_structure(&a, nd, &budget()).unwrap();
                let id = MultiPermutation::identity(nd);
                assert_eq!(qs.trace(&id).unwrap(), rat(qs.codimension() as i64));
            }
        }
    }

    #[test]
    fn trace_is_a_class_function() {
        let m2 = matrix(2);
        let qs = quotient_structure(&m2, [3, 0, 0, 0], &budget()).unwrap();
        assert!(qs.codimension() > 0);
        let all = all_multipermutations([3, 0, 0, 0]);
        for sigma in &all {
            let t = qs.trace(sigma).unwrap();
            for tau in &all {
                let conj = tau.compose(sigma).compose(&tau.inverse());
                assert_eq!(qs.trace(&conj).unwrap(), t);
            }
        }
    }

    #[test]
    fn grassmann_cocharacters() {
        let a = grassmann2();

        let r = cocharacter(&a, [1, 0, 0, 0], &budget()).unwrap();
        assert_eq!(r.codim, 1);
        assert_eq!(r.mults.len(), 1);
        assert_eq!(r.mults[0].lambda, mp([&[1], &[], &[], &[]]));
        assert_eq!(r.mults[0].m, 1);

        let r = cocharacter(&a, [0, 0, 1, 0], &budget()).unwrap();
        assert_eq!(r.codim, 0);
        assert!(r.mults.is_empty());

        let r = cocharacter(&a, [0, 0, 0, 2], &budget()).unwrap();
        assert_eq!(r.codim, 1);
        assert_eq!(r.mults.len(), 1);
        assert_eq!(r.mults[0].lambda, mp([&[], &[], &[], &[1, 1]]));
        assert_eq!(r.mults[0].m, 1);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"multidegree":[0,0,0,2],"codim":1,"mults":[{"lambda":[[],[],[],[1,1]],"m":1}]}"#
        );

        let r = cocharacter(&a, [0, 0, 0, 0], &budget()).unwrap();
        assert_eq!(r.codim, 0);
        assert!(r.mults.is_empty());
    }

    #[test]
    fn vanishing_oracle_on_grassmann() {
        let a = grassmann2();
        assert!(!multiplicity_oracle(&a, &mp([&[1], &[], &[], &[]]), &budget()).unwrap());
        assert!(multiplicity_oracle(&a, &mp([&[2], &[], &[], &[]]), &budget()).unwrap());
        assert!(multiplicity_oracle(&a, &mp([&[1, 1], &[], &[], &[]]), &budget()).unwrap());
        assert!(!multiplicity_oracle(&a, &mp([&[], &[], &[], &[1, 1]]), &budget()).unwrap());
        assert!(multiplicity_oracle(&a, &mp([&[], &[], &[], &[2]]), &budget()).unwrap());

        assert!(matches!(
            multiplicity_oracle(&a, &mp([&[], &[], &[], &[1, 1]]), &Budget::new(1)),
            Err(EngineError::Resource { .. })
        ));
    }

    #[test]
    fn character_extraction_agrees_with_the_vanishing_oracle() {
        let algebras = vec![grassmann2(), matrix_super(1), grassmann_trunc(2, true)];
        for a in &algebras {
            for n in 0..=3 {
                for nd in multidegrees_of_total(n) {
                    let report = cocharacter(a, nd, &budget()).unwrap();
                    let mut dims: u128 = 0;
                    for e in &report.mults {
                        assert!(e.m > 0);
                        dims += e.m as u128 * multi_character_degree(&e.lambda) as u128;
                    }
                    assert_eq!(dims, report.codim as u128);
                    for lambda in multipartitions_of(nd) {
                        let m = report
                            .mults
                            .iter()
                            .find(|e| e.lambda == lambda)
                            .map(|e| e.m)
                            .unwrap_or(0);
                        let vanished = multiplicity_oracle(a, &lambda, &budget()).unwrap();
                        assert_eq!(vanished, m == 0, "{lambda} on dim-{} algebra", a.dim());
                    }
                }
            }
        }
    }

    fn grassmann_generators(a: &SuperAlgebra) -> Vec<SuperPolynomial> {
        [
            "y1_1",
            "z0_1",
            "y0_1*y0_2",
            "z1_1*y0_1",
            "y0_1*z1_1",
            "z1_1*z1_2 + z1_2*z1_1",
        ]
        .iter()
        .map(|s| pol(a, s))
        .collect()
    }

    #[test]
    fn ideal_span_within_a_multidegree() {
        let a = grassmann2();
        let gens = grassmann_generators(&a);

        let span = tideal_span(&gens, [0, 0, 0, 2], &budget()).unwrap();
        assert_eq!(span.dim, 1);
        assert_eq!(span.basis, vec![pol(&a, "z1_1*z1_2 + z1_2*z1_1")]);

        let span = tideal_span(&gens, [0, 1, 0, 0], &budget()).unwrap();
        assert_eq!(span.dim, 1);
        assert_eq!(span.basis, vec![pol(&a, "z0_1")]);

        let span = tideal_span(&[], [0, 0, 0, 2], &budget()).unwrap();
        assert_eq!(span.dim, 0);
        assert!(span.basis.is_empty());

        assert!(matches!(
            tideal_span(&gens, [0, 0, 0, 2], &Budget::new(1)),
            Err(EngineError::Resource { .. })
        ));
    }

    #[test]
    fn ideal_span_complements_the_codimension() {
        let a = grassmann2();
        let gens = grassmann_generators(&a);
        for n in 1..=3usize {
            for nd in multidegrees_of_total(n) {
                let span = tideal_span(&gens, nd, &budget()).unwrap();
                let c = codimension(&a, nd, &budget()).unwrap();
                assert_eq!(
                    span.dim + c,
                    factorial(n) as usize,
                    "multidegree {nd:?}"
                );
                for f in &span.basis {
                    assert!(is_identity(&a, f).unwrap(), "basis element {f} at {nd:?}");
                }
            }
        }
    }

    #[test]
    fn results_do_not_depend_on_worker_count() {
        let a = grassmann_trunc(2, true);
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                let qs = quotient_structure(&a, [2, 0, 0, 1], &budget()).unwrap();
                (qs.codimension(), qs.rows.clone(), qs.pivots.clone())
            })
        };
        assert_eq!(run(1), run(4));
    }
}
