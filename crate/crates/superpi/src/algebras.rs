//! Finite-dimensional algebras with a Z2-grading and an involution,
//! presented by exact rational structure constants: axiom validation, the
//! four-component decomposition A0+ / A0- / A1+ / A1-, and a gallery of
//! standard examples (Grassmann algebras, matrix algebras with transpose
//! involutions).

use crate::freealg::Mode;
use crate::linalg::RowEchelon;
use crate::rat::{format_rat, parse_rat, rat, Rat};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("vector length {got} does not match dimension {dim}")]
    LengthMismatch { dim: usize, got: usize },
    #[error("unknown algebra name: {0}")]
    UnknownName(String),
    #[error("cannot read algebra file {path}: {reason}")]
    Io { path: String, reason: String },
}

/// A finite-dimensional algebra over Q with a Z2-grading on its basis and a
/// grading-preserving involution #, together with the sign rule (mode) that
/// # obeys on products.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    grading: Vec<u8>,
    /// mult[i * dim + j] lists (k, c) with e_i e_j = sum c e_k.
    mult: Vec<Vec<(usize, Rat)>>,
    /// inv[i][j] = coefficient of e_i in e_j^#.
    inv: Vec<Vec<Rat>>,
    mode: Mode,
    unit: Option<Vec<Rat>>,
}

/// Outcome of one axiom check.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Bases of the four components, in the order A0+, A0-, A1+, A1-.
#[derive(Clone, Debug)]
pub struct ComponentBases {
    pub comps: [Vec<Vec<Rat>>; 4],
}

impl ComponentBases {
    pub fn dims(&self) -> [usize; 4] {
        std::array::from_fn(|i| self.comps[i].len())
    }
}

impl SuperAlgebra {
    /// Structural construction: checks shapes and index ranges, not the
    /// algebra axioms (see `validate`). Zero-dimensional input is rejected.
    pub fn new(
        basis_names: Vec<String>,
        grading: Vec<u8>,
        mult_entries: &[(usize, usize, usize, Rat)],
        inv: Vec<Vec<Rat>>,
        mode: Mode,
        unit: Option<Vec<Rat>>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(AlgebraError::Malformed("dimension must be at least 1".into()));
        }
        if grading.len() != dim {
            return Err(AlgebraError::Malformed(format!(
                "grading has {} entries for dimension {dim}",
                grading.len()
            )));
        }
        if let Some(&bad) = grading.iter().find(|&&g| g > 1) {
            return Err(AlgebraError::Malformed(format!("grading value {bad} is not 0 or 1")));
        }
        if inv.len() != dim || inv.iter().any(|row| row.len() != dim) {
            return Err(AlgebraError::Malformed(format!("inv must be a {dim}x{dim} matrix")));
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(AlgebraError::Malformed(format!(
                    "unit has {} entries for dimension {dim}",
                    u.len()
                )));
            }
        }
        let mut mult = vec![Vec::new(); dim * dim];
        for &(i, j, k, ref c) in mult_entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::Malformed(format!(
                    "structure constant index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if c.is_zero() {
                continue;
            }
            let cell = &mut mult[i * dim + j];
            match cell.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, existing)) => {
                    *existing += c.clone();
                }
                None => cell.push((k, c.clone())),
            }
        }
        for cell in &mut mult {
            cell.retain(|(_, c)| !c.is_zero());
            cell.sort_by_key(|&(k, _)| k);
        }
        Ok(SuperAlgebra { dim, basis_names, grading, mult, inv, mode, unit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn grading(&self) -> &[u8] {
        &self.grading
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn unit(&self) -> Option<&Vec<Rat>> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = rat(1);
        v
    }

    /// Bilinear product through the structure constants.
    pub fn element_mul(&self, v: &[Rat], w: &[Rat]) -> Result<Vec<Rat>, AlgebraError> {
        for x in [v, w] {
            if x.len() != self.dim {
                return Err(AlgebraError::LengthMismatch { dim: self.dim, got: x.len() });
            }
        }
        let mut out = vec![Rat::zero(); self.dim];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, wj) in w.iter().enumerate() {
                if wj.is_zero() {
                    continue;
                }
                let scale = vi * wj;
                for (k, c) in &self.mult[i * self.dim + j] {
                    out[*k] += &scale * c;
                }
            }
        }
        Ok(out)
    }

    /// Applies # to a coordinate vector.
    pub fn apply_inv(&self, v: &[Rat]) -> Result<Vec<Rat>, AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::LengthMismatch { dim: self.dim, got: v.len() });
        }
        let mut out = vec![Rat::zero(); self.dim];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, row) in self.inv.iter().enumerate() {
                if !row[j].is_zero() {
                    out[i] += &row[j] * vj;
                }
            }
        }
        Ok(out)
    }

    fn parity_of_vector(&self, v: &[Rat]) -> Option<u8> {
        let mut parity = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match parity {
                None => parity = Some(self.grading[i]),
                Some(p) if p != self.grading[i] => return None,
                _ => {}
            }
        }
        parity.or(Some(0))
    }

    fn describe(&self, v: &[Rat]) -> String {
        let mut s = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let _ = write!(s, "{}*{}", format_rat(c), self.basis_names[i]);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Checks every axiom, reporting the first counterexample per axiom.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let names = &self.basis_names;
        let basis: Vec<Vec<Rat>> = (0..self.dim).map(|i| self.basis_vector(i)).collect();

        let mut assoc = AxiomCheck { name: "associativity", passed: true, counterexample: None };
        'assoc: for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.element_mul(&basis[i], &basis[j]).unwrap();
                for k in 0..self.dim {
                    let left = self.element_mul(&ij, &basis[k]).unwrap();
                    let jk = self.element_mul(&basis[j], &basis[k]).unwrap();
                    let right = self.element_mul(&basis[i], &jk).unwrap();
                    if left != right {
                        assoc.passed = false;
                        assoc.counterexample = Some(format!(
                            "({}*{})*{} = {} but {}*({}*{}) = {}",
                            names[i],
                            names[j],
                            names[k],
                            self.describe(&left),
                            names[i],
                            names[j],
                            names[k],
                            self.describe(&right)
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(assoc);

        let mut graded =
            AxiomCheck { name: "graded multiplication", passed: true, counterexample: None };
        'grading: for i in 0..self.dim {
            for j in 0..self.dim {
                let want = (self.grading[i] + self.grading[j]) % 2;
                let prod = self.element_mul(&basis[i], &basis[j]).unwrap();
                for (k, c) in prod.iter().enumerate() {
                    if !c.is_zero() && self.grading[k] != want {
                        graded.passed = false;
                        graded.counterexample = Some(format!(
                            "{}*{} = {} leaves parity {}",
                            names[i],
                            names[j],
                            self.describe(&prod),
                            want
                        ));
                        break 'grading;
                    }
                }
            }
        }
        checks.push(graded);

        let mut invol =
            AxiomCheck { name: "involution squares to identity", passed: true, counterexample: None };
        for j in 0..self.dim {
            let twice = self.apply_inv(&self.apply_inv(&basis[j]).unwrap()).unwrap();
            if twice != basis[j] {
                invol.passed = false;
                invol.counterexample = Some(format!(
                    "({}^#)^# = {}",
                    names[j],
                    self.describe(&twice)
                ));
                break;
            }
        }
        checks.push(invol);

        let mut inv_graded =
            AxiomCheck { name: "involution preserves grading", passed: true, counterexample: None };
        for j in 0..self.dim {
            let image = self.apply_inv(&basis[j]).unwrap();
            if self.parity_of_vector(&image) != Some(self.grading[j]) {
                inv_graded.passed = false;
                inv_graded.counterexample = Some(format!(
                    "{}^# = {} is not parity {}",
                    names[j],
                    self.describe(&image),
                    self.grading[j]
                ));
                break;
            }
        }
        checks.push(inv_graded);

        let mut anti =
            AxiomCheck { name: "anti-multiplicativity", passed: true, counterexample: None };
        'anti: for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self
                    .apply_inv(&self.element_mul(&basis[i], &basis[j]).unwrap())
                    .unwrap();
                let mut rhs = self
                    .element_mul(
                        &self.apply_inv(&basis[j]).unwrap(),
                        &self.apply_inv(&basis[i]).unwrap(),
                    )
                    .unwrap();
                let negate = self.mode == Mode::Superinvolution
                    && self.grading[i] == 1
                    && self.grading[j] == 1;
                if negate {
                    for c in &mut rhs {
                        *c = -c.clone();
                    }
                }
                if lhs != rhs {
                    anti.passed = false;
                    anti.counterexample = Some(format!(
                        "({}*{})^# = {} but the sign rule gives {}",
                        names[i],
                        names[j],
                        self.describe(&lhs),
                        self.describe(&rhs)
                    ));
                    break 'anti;
                }
            }
        }
        checks.push(anti);

        if let Some(u) = &self.unit {
            let mut unit_check = AxiomCheck { name: "unit", passed: true, counterexample: None };
            for i in 0..self.dim {
                let left = self.element_mul(u, &basis[i]).unwrap();
                let right = self.element_mul(&basis[i], u).unwrap();
                if left != basis[i] || right != basis[i] {
                    unit_check.passed = false;
                    unit_check.counterexample = Some(format!(
                        "1*{} = {}, {}*1 = {}",
                        names[i],
                        self.describe(&left),
                        names[i],
                        self.describe(&right)
                    ));
                    break;
                }
            }
            if unit_check.passed && self.parity_of_vector(u) != Some(0) {
                unit_check.passed = false;
                unit_check.counterexample = Some("unit is not even".into());
            }
            if unit_check.passed && self.apply_inv(u).unwrap() != *u {
                unit_check.passed = false;
                unit_check.counterexample = Some("unit is not fixed by #".into());
            }
            checks.push(unit_check);
        }

        ValidationReport { checks }
    }

    /// Splits each parity subspace into the +1 and -1 eigenspaces of #.
    /// Fails when the algebra does not validate.
    pub fn component_bases(&self) -> Result<ComponentBases, AlgebraError> {
        let report = self.validate();
        if let Some(fail) = report.first_failure() {
            return Err(AlgebraError::AxiomFailure(format!(
                "{}: {}",
                fail.name,
                fail.counterexample.clone().unwrap_or_default()
            )));
        }
        let mut comps: [Vec<Vec<Rat>>; 4] = Default::default();
        for parity in 0..2u8 {
            let indices: Vec<usize> =
                (0..self.dim).filter(|&i| self.grading[i] == parity).collect();
            for (slot, sign) in [(0usize, 1i64), (1, -1)] {
                // Solve (inv - sign I) x = 0 inside the parity subspace.
                let mut ech = RowEchelon::new(indices.len());
                for &r in &indices {
                    let row: Vec<Rat> = indices
                        .iter()
                        .map(|&c| {
                            let mut v = self.inv[r][c].clone();
                            if r == c {
                                v -= rat(sign);
                            }
                            v
                        })
                        .collect();
                    ech.insert(row);
                }
                for small in ech.kernel_basis() {
                    let mut full = vec![Rat::zero(); self.dim];
                    for (pos, &i) in indices.iter().enumerate() {
                        full[i] = small[pos].clone();
                    }
                    comps[2 * parity as usize + slot].push(full);
                }
            }
        }
        Ok(ComponentBases { comps })
    }
}

/// The 3-dimensional non-unitary Grassmann algebra on two generators, with
/// basis (e1, e2, e1e2), odd generators, and the superinvolution that
/// negates the generators.
pub fn grassmann2() -> SuperAlgebra {
    let names = vec!["e1".into(), "e2".into(), "e1e2".into()];
    let grading = vec![1, 1, 0];
    let mult = [(0usize, 1usize, 2usize, rat(1)), (1, 0, 2, rat(-1))];
    let inv = vec![
        vec![rat(-1), rat(0), rat(0)],
        vec![rat(0), rat(-1), rat(0)],
        vec![rat(0), rat(0), rat(1)],
    ];
    let a = SuperAlgebra::new(names, grading, &mult, inv, Mode::Superinvolution, None).unwrap();
    debug_assert!(a.validate().all_passed());
    a
}

fn subset_name(s: &[usize]) -> String {
    if s.is_empty() {
        "1".into()
    } else {
        s.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join("")
    }
}

/// Unitary (or non-unitary) Grassmann algebra truncated to m generators:
/// basis e_S over subsets S of {1..m} ordered by (|S|, lexicographic),
/// canonical grading |S| mod 2, superinvolution e_S -> (-1)^{|S|} e_S.
/// With `unital` false the empty subset is dropped.
pub fn grassmann_trunc(m: usize, unital: bool) -> SuperAlgebra {
    assert!(m >= 1, "need at least one generator");
    let mut subsets: Vec<Vec<usize>> = (0..1u32 << m)
        .map(|mask| (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
    if !unital {
        subsets.retain(|s| !s.is_empty());
    }
    let index_of = |s: &[usize]| subsets.iter().position(|t| t == s).unwrap();

    let names = subsets.iter().map(|s| subset_name(s)).collect();
    let grading: Vec<u8> = subsets.iter().map(|s| (s.len() % 2) as u8).collect();

    let mut mult = Vec::new();
    for (i, s) in subsets.iter().enumerate() {
        for (j, t) in subsets.iter().enumerate() {
            if s.iter().any(|x| t.contains(x)) {
                continue;
            }
            // Sign of sorting the concatenation s ++ t.
            let inversions =
                s.iter().map(|&x| t.iter().filter(|&&y| y < x).count()).sum::<usize>();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let mut union: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
            union.sort_unstable();
            mult.push((i, j, index_of(&union), rat(sign)));
        }
    }

    let dim = subsets.len();
    let mut inv = vec![vec![Rat::zero(); dim]; dim];
    for (i, s) in subsets.iter().enumerate() {
        inv[i][i] = rat(if s.len() % 2 == 0 { 1 } else { -1 });
    }

    let unit = unital.then(|| {
        let mut u = vec![Rat::zero(); dim];
        u[index_of(&[])] = rat(1);
        u
    });

    let a = SuperAlgebra::new(names, grading, &mult, inv, Mode::Superinvolution, unit).unwrap();
    debug_assert!(a.validate().all_passed());
    a
}

/// M_{2k}(Q) with the elementary grading (0^k, 1^k) and the transpose
/// superinvolution (A B; C D)^# = (D^t, -B^t; C^t, A^t). Basis E_{ij} in
/// row-major order.
pub fn matrix_super(k: usize) -> SuperAlgebra {
    assert!(k >= 1);
    let n = 2 * k;
    let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let names = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| format!("E{i}{j}")))
        .collect::<Vec<_>>();
    let grading: Vec<u8> = (1..=n)
        .flat_map(|i| {
            (1..=n).map(move |j| {
                let gi = if i <= k { 0u8 } else { 1 };
                let gj = if j <= k { 0u8 } else { 1 };
                (gi + gj) % 2
            })
        })
        .collect();

    let mut mult = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for l in 1..=n {
                mult.push((idx(i, j), idx(j, l), idx(i, l), rat(1)));
            }
        }
    }

    let mut inv = vec![vec![Rat::zero(); n * n]; n * n];
    for i in 1..=n {
        for j in 1..=n {
            let (ti, tj, sign) = if i <= k && j <= k {
                (j + k, i + k, 1)
            } else if i > k && j > k {
                (j - k, i - k, 1)
            } else if i <= k {
                (j - k, i + k, -1)
            } else {
                (j + k, i - k, 1)
            };
            inv[idx(ti, tj)][idx(i, j)] = rat(sign);
        }
    }

    let mut unit = vec![Rat::zero(); n * n];
    for i in 1..=n {
        unit[idx(i, i)] = rat(1);
    }

    let a = SuperAlgebra::new(names, grading, &mult, inv, Mode::Superinvolution, Some(unit))
        .unwrap();
    debug_assert!(a.validate().all_passed());
    a
}

/// M_n(Q) with the trivial grading and the transpose graded involution.
pub fn matrix(n: usize) -> SuperAlgebra {
    assert!(n >= 1);
    let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let names = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| format!("E{i}{j}")))
        .collect::<Vec<_>>();
    let grading = vec![0u8; n * n];

    let mut mult = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for l in 1..=n {
                mult.push((idx(i, j), idx(j, l), idx(i, l), rat(1)));
            }
        }
    }

    let mut inv = vec![vec![Rat::zero(); n * n]; n * n];
    for i in 1..=n {
        for j in 1..=n {
            inv[idx(j, i)][idx(i, j)] = rat(1);
        }
    }

    let mut unit = vec![Rat::zero(); n * n];
    for i in 1..=n {
        unit[idx(i, i)] = rat(1);
    }

    let a = SuperAlgebra::new(names, grading, &mult, inv, Mode::GradedInvolution, Some(unit))
        .unwrap();
    debug_assert!(a.validate().all_passed());
    a
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    basis: Vec<String>,
    grading: Vec<u8>,
    mode: String,
    unit: Option<Vec<String>>,
    mult: Vec<(usize, usize, usize, String)>,
    inv: Vec<Vec<String>>,
}

/// Reads the JSON algebra format. Structural errors are reported here; the
/// axioms are checked separately by `validate`.
pub fn from_json(text: &str) -> Result<SuperAlgebra, AlgebraError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| AlgebraError::Malformed(e.to_string()))?;
    if file.basis.len() != file.dim {
        return Err(AlgebraError::Malformed(format!(
            "dim is {} but basis lists {} names",
            file.dim,
            file.basis.len()
        )));
    }
    let mode = match file.mode.as_str() {
        "superinvolution" => Mode::Superinvolution,
        "graded_involution" => Mode::GradedInvolution,
        other => {
            return Err(AlgebraError::Malformed(format!(
                "mode must be \"superinvolution\" or \"graded_involution\", got {other:?}"
            )));
        }
    };
    let parse = |s: &str| parse_rat(s).map_err(AlgebraError::Malformed);
    let mut mult = Vec::with_capacity(file.mult.len());
    for (i, j, k, c) in &file.mult {
        mult.push((*i, *j, *k, parse(c)?));
    }
    let mut inv = Vec::with_capacity(file.inv.len());
    for row in &file.inv {
        inv.push(row.iter().map(|c| parse(c)).collect::<Result<Vec<_>, _>>()?);
    }
    let unit = match &file.unit {
        None => None,
        Some(u) => Some(u.iter().map(|c| parse(c)).collect::<Result<Vec<_>, _>>()?),
    };
    SuperAlgebra::new(file.basis, file.grading, &mult, inv, mode, unit)
}

/// Serializes to the JSON algebra format (sorted structure constants,
/// rationals as strings).
pub fn to_json(a: &SuperAlgebra) -> String {
    let mut mult = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            for (k, c) in &a.mult[i * a.dim + j] {
                mult.push((i, j, *k, format_rat(c)));
            }
        }
    }
    let file = AlgebraFile {
        dim: a.dim,
        basis: a.basis_names.clone(),
        grading: a.grading.clone(),
        mode: match a.mode {
            Mode::Superinvolution => "superinvolution".into(),
            Mode::GradedInvolution => "graded_involution".into(),
        },
        unit: a.unit.as_ref().map(|u| u.iter().map(format_rat).collect()),
        mult,
        inv: a.inv.iter().map(|row| row.iter().map(format_rat).collect()).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

/// Resolves an algebra specification string: a gallery name with optional
/// parameters, or a path to a JSON file (recognized by a '/' or a .json
/// suffix). File-loaded algebras must pass validation.
pub fn from_spec(spec: &str) -> Result<SuperAlgebra, AlgebraError> {
    let s = spec.trim();
    if s.contains('/') || s.ends_with(".json") {
        let text = std::fs::read_to_string(s)
            .map_err(|e| AlgebraError::Io { path: s.into(), reason: e.to_string() })?;
        let a = from_json(&text)?;
        let report = a.validate();
        if let Some(fail) = report.first_failure() {
            return Err(AlgebraError::AxiomFailure(format!(
                "{} in {s}: {}",
                fail.name,
                fail.counterexample.clone().unwrap_or_default()
            )));
        }
        return Ok(a);
    }
    if s == "grassmann2" {
        return Ok(grassmann2());
    }
    if let Some(args) = s.strip_prefix("grassmann_trunc(").and_then(|r| r.strip_suffix(")")) {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        let m: usize = parts[0]
            .parse()
            .map_err(|_| AlgebraError::UnknownName(format!("bad generator count in {s:?}")))?;
        let unital = match parts.len() {
            1 => true,
            2 if parts[1] == "nonunital" => false,
            _ => return Err(AlgebraError::UnknownName(format!("bad arguments in {s:?}"))),
        };
        if m == 0 || m > 12 {
            return Err(AlgebraError::UnknownName(format!(
                "generator count in {s:?} must be between 1 and 12"
            )));
        }
        return Ok(grassmann_trunc(m, unital));
    }
    if let Some(arg) = s.strip_prefix("matrix_super(").and_then(|r| r.strip_suffix(")")) {
        let k: usize = arg
            .trim()
            .parse()
            .map_err(|_| AlgebraError::UnknownName(format!("bad block size in {s:?}")))?;
        if k == 0 || k > 8 {
            return Err(AlgebraError::UnknownName(format!(
                "block size in {s:?} must be between 1 and 8"
            )));
        }
        return Ok(matrix_super(k));
    }
    if let Some(arg) = s.strip_prefix("matrix(").and_then(|r| r.strip_suffix(")")) {
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| AlgebraError::UnknownName(format!("bad size in {s:?}")))?;
        if n == 0 || n > 16 {
            return Err(AlgebraError::UnknownName(format!(
                "size in {s:?} must be between 1 and 16"
            )));
        }
        return Ok(matrix(n));
    }
    Err(AlgebraError::UnknownName(s.into()))
}
