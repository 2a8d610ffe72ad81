//! Hook capture of cocharacters and the standard / Amitsur-style identity
//! checks built on top of the evaluation engine.
//!
//! `hook_report` summarizes all nonzero cocharacter multiplicities up to a
//! degree bound by the componentwise-minimal quadruples of hooks containing
//! them. `check_standard_powers` and `amitsur_check` test the corresponding
//! families of identities directly on an algebra, and
//! `amitsur_equivalence_check` confronts the two views.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebras::SuperAlgebra;
use crate::combinat::{
    factorial, hook_contains, multidegrees_of_total, quad_hook_contains, HookSpec, Partition,
    QuadHookSpec, Tableau,
};
use crate::engine::{
    cocharacter, is_identity, is_identity_general, Budget, CocharacterReport, EngineError,
};
use crate::freealg::{
    amitsur_poly, poly_power, rename_variables, standard_poly, FrameSlot, Mode, SuperPolynomial,
    VarType, Variable, Word,
};
use crate::rat::rat;
use crate::symgroup::essential_idempotent;

/// Nonzero cocharacter multiplicities of an algebra for all multidegrees of
/// total degree 1..=max_degree, together with the minimal hook quadruples
/// containing every one of them.
#[derive(Debug, Clone, Serialize)]
pub struct HookReport {
    pub max_degree: usize,
    /// One report per multidegree, ascending in total degree and then in the
    /// `multidegrees_of_total` order.
    pub reports: Vec<CocharacterReport>,
    /// All componentwise-minimal hook quadruples containing every observed
    /// multipartition with nonzero multiplicity; an antichain, sorted by the
    /// flat (d1,l1,..,d4,l4) tuple.
    pub minimal_hooks: Vec<QuadHookSpec>,
    /// The lexicographically least member of `minimal_hooks`.
    pub canonical: QuadHookSpec,
}

/// The minimal hooks containing every partition of `observed`, as an
/// antichain sorted by (d, l). Candidates are searched in 0..=cap, which is
/// enough whenever the partitions have at most `cap` boxes.
fn minimal_covering_hooks(observed: &BTreeSet<Partition>, cap: u32) -> Vec<HookSpec> {
    let mut covering = Vec::new();
    for d in 0..=cap {
        for l in 0..=cap {
            let h = HookSpec::new(d, l);
            if observed.iter().all(|p| hook_contains(h, p)) {
                covering.push(h);
            }
        }
    }
    covering
        .iter()
        .filter(|h| !covering.iter().any(|g| g.d <= h.d && g.l <= h.l && *g != **h))
        .copied()
        .collect()
}

/// Computes the cocharacters of all multidegrees with total degree up to
/// `max_degree` and the minimal hook quadruples containing every
/// multipartition with nonzero multiplicity.
///
/// A quadruple contains all observations exactly when its i-th hook contains
/// every i-th component observed, so the minimal quadruples are the product
/// of the per-component minimal sets. With no observations at all the single
/// minimal quadruple is all-zero.
pub fn hook_report(
    a: &SuperAlgebra,
    max_degree: usize,
    budget: &Budget,
) -> Result<HookReport, EngineError> {
    let mut reports = Vec::new();
    let mut observed: [BTreeSet<Partition>; 4] = Default::default();
    for n in 1..=max_degree {
        for nd in multidegrees_of_total(n) {
            let rep = cocharacter(a, nd, budget)?;
            for entry in &rep.mults {
                for i in 0..4 {
                    observed[i].insert(entry.lambda.comps()[i].clone());
                }
            }
            reports.push(rep);
        }
    }
    let per_component: [Vec<HookSpec>; 4] =
        std::array::from_fn(|i| minimal_covering_hooks(&observed[i], max_degree as u32));
    let mut minimal_hooks = Vec::new();
    for h1 in &per_component[0] {
        for h2 in &per_component[1] {
            for h3 in &per_component[2] {
                for h4 in &per_component[3] {
                    minimal_hooks.push(QuadHookSpec([*h1, *h2, *h3, *h4]));
                }
            }
        }
    }
    minimal_hooks.sort_by_key(|q| q.flat());
    let canonical = minimal_hooks[0];
    Ok(HookReport { max_degree, reports, minimal_hooks, canonical })
}

fn sat_factorial(n: usize) -> u128 {
    if n > 33 { u128::MAX } else { factorial(n) }
}

fn sat_pow(base: u128, exp: usize) -> u128 {
    let mut out = 1u128;
    for _ in 0..exp {
        out = out.saturating_mul(base);
    }
    out
}

/// Tests, for each variable family, whether the m_i-th power of the standard
/// polynomial St_{k_i} in k_i variables of that family is an identity.
/// Returns the four answers in family order.
pub fn check_standard_powers(
    a: &SuperAlgebra,
    pairs: [(usize, usize); 4],
    budget: &Budget,
) -> Result<[bool; 4], EngineError> {
    let cd = a.component_bases()?.dims();
    let mut needed = 0u128;
    for (i, &(k, m)) in pairs.iter().enumerate() {
        assert!(k >= 1 && m >= 1, "standard power parameters are positive");
        // Support of the multilinearized power times the evaluation frames.
        let support = sat_pow(sat_factorial(k), m).saturating_mul(sat_pow(sat_factorial(m), k));
        let frames = sat_pow(cd[i] as u128, k * m);
        needed = needed.saturating_add(
            support.saturating_mul(frames.max(1)).saturating_mul(a.dim() as u128),
        );
    }
    if needed > budget.max_entries {
        return Err(EngineError::Resource { needed, budget: budget.max_entries });
    }
    let mut out = [false; 4];
    for (i, &(k, m)) in pairs.iter().enumerate() {
        let f = poly_power(&standard_poly(k, VarType::ALL[i], a.mode()), m);
        out[i] = is_identity_general(a, &f)?;
    }
    Ok(out)
}

/// The column-filled standard tableau of the k x m rectangle: entry
/// (c-1)k + r in row r, column c.
fn column_filled_rectangle(k: usize, m: usize) -> Tableau {
    let shape = Partition::new(vec![m as u32; k]).expect("rectangle shape");
    let t = Tableau::first_by_rows(shape)
        .relabel(|e| ((e - 1) % m as u32) * k as u32 + (e - 1) / m as u32 + 1);
    debug_assert!(t.is_standard());
    t
}

/// Symbolic check that applying the symmetrizer of the column-filled k x m
/// rectangle tableau to x_1 ... x_{km} and then identifying x_{jk+i} with x_i
/// yields (m!)^k times the m-th power of the standard polynomial St_k.
/// Refuses km > 8.
pub fn lemma_identification_check(k: usize, m: usize) -> Result<bool, EngineError> {
    assert!(k >= 1 && m >= 1, "rectangle dimensions are positive");
    let n = k * m;
    if n > 8 {
        return Err(EngineError::Resource { needed: sat_factorial(n), budget: factorial(8) });
    }
    let mode = Mode::Superinvolution;
    let e = essential_idempotent(&column_filled_rectangle(k, m));
    let f = SuperPolynomial::from_terms(
        mode,
        e.terms().map(|(sigma, c)| {
            let letters = (1..=n as u32)
                .map(|j| Variable::new(VarType::Y0, sigma.apply(j)))
                .collect();
            (Word::new(letters), c.clone())
        }),
    );
    let identified =
        rename_variables(&f, |v| Variable::new(v.vtype, (v.index - 1) % k as u32 + 1));
    let factor = rat(sat_pow(factorial(m), k) as i64);
    let rhs = poly_power(&standard_poly(k, VarType::Y0, mode), m).scale(&factor);
    Ok(identified.sub(&rhs)?.is_zero())
}

/// Substitution making an Amitsur-style alternating polynomial nonzero on
/// the algebra: the variable family (1..=4) and the frame choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmitsurWitness {
    pub family: usize,
    pub frame: Vec<FrameSlot>,
}

const FRAME_CHOICES: [FrameSlot; 5] = [
    FrameSlot::Omit,
    FrameSlot::Fresh(VarType::Y0),
    FrameSlot::Fresh(VarType::Z0),
    FrameSlot::Fresh(VarType::Y1),
    FrameSlot::Fresh(VarType::Z1),
];

/// Tests whether the algebra satisfies, for every family i and every frame,
/// the alternating polynomial of the (d_i+1) x (l_i+1) rectangle on
/// k_i = (d_i+1)(l_i+1) variables of the i-th family. Each of the k_i+1 frame
/// positions ranges over omission and one fresh variable of each family;
/// omission also covers substituting the unit. Returns the first failing
/// (family, frame) pair, scanning families in order and frames with x_1
/// varying fastest, or None when every polynomial is an identity.
pub fn amitsur_check(
    a: &SuperAlgebra,
    hooks: &QuadHookSpec,
    budget: &Budget,
) -> Result<Option<AmitsurWitness>, EngineError> {
    let cd = a.component_bases()?.dims();
    let total_cd: u128 = cd.iter().map(|&d| d as u128).sum();
    let mut needed = 0u128;
    for (i, h) in hooks.0.iter().enumerate() {
        let k = ((h.d + 1) * (h.l + 1)) as usize;
        let evals = (a.dim() as u128)
            .saturating_mul(sat_pow(cd[i] as u128, k))
            .saturating_mul(sat_pow(1 + total_cd, k + 1));
        needed = needed
            .saturating_add(sat_factorial(k).saturating_mul(sat_pow(5, k + 1).saturating_add(evals)));
    }
    if needed > budget.max_entries {
        return Err(EngineError::Resource { needed, budget: budget.max_entries });
    }
    for (i, h) in hooks.0.iter().enumerate() {
        let k = ((h.d + 1) * (h.l + 1)) as usize;
        for code in 0..sat_pow(5, k + 1) {
            let mut c = code;
            let frame: Vec<FrameSlot> = (0..=k)
                .map(|_| {
                    let slot = FRAME_CHOICES[(c % 5) as usize];
                    c /= 5;
                    slot
                })
                .collect();
            let f = amitsur_poly(i + 1, h.d, h.l, &frame, a.mode());
            if !is_identity(a, &f)? {
                return Ok(Some(AmitsurWitness { family: i + 1, frame }));
            }
        }
    }
    Ok(None)
}

/// Side-by-side result of the two views of a hook quadruple: whether the
/// alternating identities all hold, and whether every nonzero cocharacter
/// multiplicity up to the degree bound lies inside the hooks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub amitsur_satisfied: bool,
    pub hooks_contain: bool,
    pub agree: bool,
}

/// Runs `amitsur_check` and, independently, tests containment of every
/// multipartition with nonzero multiplicity at total degree <= max_degree in
/// the hook quadruple, reporting whether the two answers agree.
pub fn amitsur_equivalence_check(
    a: &SuperAlgebra,
    hooks: &QuadHookSpec,
    max_degree: usize,
    budget: &Budget,
) -> Result<EquivalenceReport, EngineError> {
    let amitsur_satisfied = amitsur_check(a, hooks, budget)?.is_none();
    let mut hooks_contain = true;
    for n in 1..=max_degree {
        for nd in multidegrees_of_total(n) {
            let rep = cocharacter(a, nd, budget)?;
            for entry in &rep.mults {
                if !quad_hook_contains(hooks, &entry.lambda) {
                    hooks_contain = false;
                }
            }
        }
    }
    Ok(EquivalenceReport {
        amitsur_satisfied,
        hooks_contain,
        agree: amitsur_satisfied == hooks_contain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{grassmann2, grassmann_trunc, matrix, matrix_super};
    use crate::engine::Budget;

    fn b() -> Budget {
        Budget::default()
    }

    fn quad(v: [u32; 8]) -> QuadHookSpec {
        QuadHookSpec::from_flat(v)
    }

    #[test]
    fn lemma_identification_holds_for_small_rectangles() {
        for k in 1..=6 {
            for m in 1..=6 {
                if k * m <= 6 {
                    assert!(
                        lemma_identification_check(k, m).unwrap(),
                        "rectangle {}x{}",
                        k,
                        m
                    );
                }
            }
        }
    }

    #[test]
    fn identified_symmetrizer_carries_the_scaling_factor() {
        // For the 2x2 rectangle the factor (m!)^k is 4, and dropping it
        // breaks the comparison.
        assert!(lemma_identification_check(2, 2).unwrap());
        let mode = Mode::Superinvolution;
        let e = essential_idempotent(&column_filled_rectangle(2, 2));
        let f = SuperPolynomial::from_terms(
            mode,
            e.terms().map(|(sigma, c)| {
                let letters =
                    (1..=4).map(|j| Variable::new(VarType::Y0, sigma.apply(j))).collect();
                (Word::new(letters), c.clone())
            }),
        );
        let identified = rename_variables(&f, |v| Variable::new(v.vtype, (v.index - 1) % 2 + 1));
        let unscaled = poly_power(&standard_poly(2, VarType::Y0, mode), 2);
        assert_eq!(identified, unscaled.scale(&rat(4)));
        assert!(!identified.sub(&unscaled).unwrap().is_zero());
    }

    #[test]
    fn lemma_identification_refuses_large_rectangles() {
        match lemma_identification_check(3, 3) {
            Err(EngineError::Resource { .. }) => {}
            other => panic!("expected a resource refusal, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn standard_powers_on_the_one_by_one_matrix_superalgebra() {
        let a = matrix_super(1);
        assert_eq!(
            check_standard_powers(&a, [(2, 1); 4], &b()).unwrap(),
            [true; 4],
            "St_2 holds in each variable family"
        );
        assert_eq!(
            check_standard_powers(&a, [(1, 1); 4], &b()).unwrap(),
            [false; 4],
            "no single variable family vanishes"
        );
    }

    #[test]
    fn standard_powers_on_the_grassmann_kernel() {
        let a = grassmann2();
        assert_eq!(
            check_standard_powers(&a, [(2, 1), (1, 1), (1, 1), (1, 2)], &b()).unwrap(),
            [true; 4]
        );
    }

    #[test]
    fn standard_power_detects_a_nonzero_unital_even_part() {
        let a = grassmann_trunc(2, true);
        assert_eq!(
            check_standard_powers(&a, [(1, 1); 4], &b()).unwrap(),
            [false, true, true, false]
        );
    }

    #[test]
    fn amitsur_identities_hold_at_both_grassmann_hooks() {
        let a = grassmann2();
        assert_eq!(amitsur_check(&a, &quad([1, 0, 0, 0, 0, 0, 0, 1]), &b()).unwrap(), None);
        assert_eq!(amitsur_check(&a, &quad([1, 0, 0, 0, 0, 0, 2, 0]), &b()).unwrap(), None);
    }

    #[test]
    fn amitsur_witness_in_the_even_symmetric_family() {
        let a = grassmann2();
        let w = amitsur_check(&a, &quad([0, 0, 0, 0, 0, 0, 0, 1]), &b()).unwrap().unwrap();
        assert_eq!(w.family, 1);
        assert_eq!(w.frame, vec![FrameSlot::Omit, FrameSlot::Omit]);
    }

    #[test]
    fn amitsur_witness_in_the_odd_skew_family() {
        let a = grassmann2();
        let w = amitsur_check(&a, &quad([1, 0, 0, 0, 0, 0, 0, 0]), &b()).unwrap().unwrap();
        assert_eq!(w.family, 4);
        assert_eq!(w.frame, vec![FrameSlot::Omit, FrameSlot::Omit]);
    }

    #[test]
    fn amitsur_satisfaction_is_monotone_under_hook_growth() {
        let a = grassmann2();
        assert_eq!(amitsur_check(&a, &quad([2, 0, 0, 0, 0, 0, 0, 1]), &b()).unwrap(), None);
        assert_eq!(amitsur_check(&a, &quad([1, 0, 0, 0, 0, 0, 0, 2]), &b()).unwrap(), None);
    }

    #[test]
    fn amitsur_refuses_an_oversized_rank() {
        let a = grassmann2();
        match amitsur_check(&a, &quad([3, 3, 0, 0, 0, 0, 0, 0]), &b()) {
            Err(EngineError::Resource { needed, budget }) => {
                assert!(needed > budget);
            }
            other => panic!("expected a resource refusal, got {:?}", other),
        }
    }

    #[test]
    fn equivalence_on_the_grassmann_hooks() {
        let r =
            amitsur_equivalence_check(&grassmann2(), &quad([1, 0, 0, 0, 0, 0, 0, 1]), 3, &b())
                .unwrap();
        assert!(r.amitsur_satisfied && r.hooks_contain && r.agree);
    }

    #[test]
    fn equivalence_on_the_zero_rank() {
        let r = amitsur_equivalence_check(&grassmann2(), &quad([0; 8]), 2, &b()).unwrap();
        assert!(!r.amitsur_satisfied && !r.hooks_contain && r.agree);
    }

    #[test]
    fn equivalence_on_a_truncated_grassmann_algebra() {
        let r = amitsur_equivalence_check(
            &grassmann_trunc(3, true),
            &quad([1, 0, 0, 0, 0, 0, 0, 1]),
            3,
            &b(),
        )
        .unwrap();
        assert!(r.amitsur_satisfied && r.hooks_contain && r.agree);
    }

    #[test]
    fn hook_report_on_the_grassmann_kernel() {
        let r = hook_report(&grassmann2(), 3, &b()).unwrap();
        assert_eq!(r.max_degree, 3);
        assert_eq!(r.reports.len(), 4 + 10 + 20);
        assert!(r.minimal_hooks.contains(&quad([1, 0, 0, 0, 0, 0, 0, 1])));
        assert!(r.minimal_hooks.contains(&quad([1, 0, 0, 0, 0, 0, 2, 0])));
        assert_eq!(r.minimal_hooks.len(), 4);
        assert_eq!(r.canonical, quad([0, 1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn hook_report_on_a_truncated_grassmann_algebra() {
        let r = hook_report(&grassmann_trunc(4, true), 3, &b()).unwrap();
        assert_eq!(r.canonical, quad([0, 3, 0, 0, 0, 0, 0, 1]));
        for q in &r.minimal_hooks {
            let h4 = q.0[3];
            assert!(
                h4 == HookSpec::new(0, 1) || h4 == HookSpec::new(3, 0),
                "fourth component must capture the odd skew columns, got {:?}",
                h4
            );
        }
    }

    #[test]
    fn hook_report_at_degree_zero_is_empty() {
        let r = hook_report(&grassmann2(), 0, &b()).unwrap();
        assert!(r.reports.is_empty());
        assert_eq!(r.minimal_hooks, vec![quad([0; 8])]);
        assert_eq!(r.canonical, quad([0; 8]));
    }

    #[test]
    fn minimal_hooks_cover_everything_and_form_an_antichain() {
        for a in [grassmann2(), matrix_super(1)] {
            let r = hook_report(&a, 3, &b()).unwrap();
            for rep in &r.reports {
                for entry in &rep.mults {
                    for q in &r.minimal_hooks {
                        assert!(quad_hook_contains(q, &entry.lambda));
                    }
                }
            }
            for x in &r.minimal_hooks {
                for y in &r.minimal_hooks {
                    if x != y {
                        let dominated =
                            x.0.iter().zip(y.0.iter()).all(|(h, g)| h.d <= g.d && h.l <= g.l);
                        assert!(!dominated, "{:?} dominates {:?}", x, y);
                    }
                }
            }
        }
    }

    #[test]
    fn gallery_hook_reports_terminate() {
        for a in [grassmann2(), grassmann_trunc(2, true), matrix_super(1), matrix(2)] {
            let r = hook_report(&a, 4, &b()).unwrap();
            assert!(!r.minimal_hooks.is_empty());
        }
    }
}
