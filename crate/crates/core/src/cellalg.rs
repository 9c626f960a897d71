//! Cell layers as generalized matrix algebras over `R(G)[q^±½]`.
//!
//! A layer is described by a [`CellDatum`]: the block shape of `G = ∏ GL(m_i)`,
//! an ordered label set, weight data for the `q`-exponents, and the Gram
//! form `Ψ(b, b′)` with block-symmetric Laurent polynomial values. Elements
//! are finite sums of triples `(b, s, b′)` with `s ∈ R(G)[q^±½]`, multiplied by
//!
//! ```text
//! (b₁, s₁, b₁′) · (b₂, s₂, b₂′) = q^{n(b₁′)} (b₁, s₁ s₂ Ψ(b₂, b₁′), b₂′)
//! n(b) = (wt b, 2λ + wt b) / 2
//! ```
//!
//! and the anti-involution `#` sends `(b, s, b′)` to `(b′, σ(s), b)` where `σ`
//! dualizes every Schur class.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::{BlockShape, LaurentPoly};
use crate::sample;
use crate::symfunc::{is_block_symmetric, schur_expand, SchurExpansion};
use crate::Rational;

pub type Label = String;

/// Weight lattice data: a symmetric form, the dominant weight `λ`, and a
/// weight vector for each label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    form: Vec<Vec<Rational>>,
    lambda: Vec<i64>,
    wt: BTreeMap<Label, Vec<i64>>,
}

impl WeightData {
    pub fn new(
        form: Vec<Vec<Rational>>,
        lambda: Vec<i64>,
        wt: impl IntoIterator<Item = (Label, Vec<i64>)>,
    ) -> Result<Self> {
        let rank = lambda.len();
        if rank == 0 {
            return Err(Error::InvalidWeights("rank must be positive".into()));
        }
        if form.len() != rank || form.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidWeights(format!("form must be {0}x{0}", rank)));
        }
        for (i, row) in form.iter().enumerate() {
            if let Some(j) = (0..i).find(|&j| row[j] != form[j][i]) {
                return Err(Error::InvalidWeights(format!("form not symmetric at ({}, {})", i + 1, j + 1)));
            }
        }
        let mut map = BTreeMap::new();
        for (label, v) in wt {
            if v.len() != rank {
                return Err(Error::InvalidWeights(format!("weight of {} has length {}", label, v.len())));
            }
            if map.insert(label.clone(), v).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
        }
        Ok(WeightData { form, lambda, wt: map })
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn weight(&self, label: &str) -> Option<&[i64]> {
        self.wt.get(label).map(Vec::as_slice)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Label, &Vec<i64>)> {
        self.wt.iter()
    }

    /// The bilinear form on integer vectors.
    pub fn pair(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc += &self.form[i][j] * Rational::from_integer((ai * bj).into());
                }
            }
        }
        acc
    }

    /// `2n = (wt b, 2λ + wt b)`, the exponent of `q` in half-units.
    pub fn q_exponent(&self, label: &str) -> Result<i32> {
        let w = self.weight(label).ok_or_else(|| Error::MissingWeight(label.to_string()))?;
        let shifted: Vec<i64> = w.iter().zip(&self.lambda).map(|(a, l)| a + 2 * l).collect();
        let twice_n = self.pair(w, &shifted);
        if !twice_n.denom().is_one() {
            return Err(Error::NonHalfIntegralExponent(label.to_string()));
        }
        twice_n
            .numer()
            .to_i32()
            .ok_or_else(|| Error::NonHalfIntegralExponent(label.to_string()))
    }
}

/// `q`-exponent `n(b)` in half-units.
pub fn q_exponent(b: &str, wd: &WeightData) -> Result<i32> {
    wd.q_exponent(b)
}

/// A failed datum invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingWeight(Label),
    Exponent(Label, String),
    NotBlockSymmetric(Label, Label),
    Support(Label, Label),
    UnitGram(String),
    UnitExponent(i32),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingWeight(b) => write!(f, "missing weight for label {}", b),
            Violation::Exponent(b, e) => write!(f, "q exponent of {}: {}", b, e),
            Violation::NotBlockSymmetric(b, c) => write!(f, "gram not block-symmetric at ({}, {})", b, c),
            Violation::Support(b, c) => {
                write!(f, "gram nonzero between labels of different weight at ({}, {})", b, c)
            }
            Violation::UnitGram(v) => write!(f, "gram at the unit label is {}, expected 1", v),
            Violation::UnitExponent(n) => write!(f, "unit label has q exponent {}/2, expected 0", n),
        }
    }
}

/// Input describing one layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDatum {
    shape: BlockShape,
    labels: Vec<Label>,
    weights: WeightData,
    gram: BTreeMap<(Label, Label), LaurentPoly>,
    unit: Option<Label>,
}

impl CellDatum {
    /// Assembles a datum checking only structure (known labels, matching
    /// shapes). Use [`CellDatum::violations`] or [`CellDatum::new`] for the
    /// algebraic invariants.
    pub fn from_parts(
        shape: BlockShape,
        labels: Vec<Label>,
        weights: WeightData,
        gram: impl IntoIterator<Item = ((Label, Label), LaurentPoly)>,
        unit: Option<Label>,
    ) -> Result<Self> {
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let known = |l: &Label| -> Result<()> {
            if labels.contains(l) {
                Ok(())
            } else {
                Err(Error::UnknownLabel(l.clone()))
            }
        };
        let mut map = BTreeMap::new();
        for ((b, c), v) in gram {
            known(&b)?;
            known(&c)?;
            if v.shape() != &shape {
                return Err(Error::ShapeMismatch(format!("gram value at ({}, {})", b, c)));
            }
            let entry = map.entry((b, c)).or_insert_with(|| LaurentPoly::zero(&shape));
            *entry = &*entry + &v;
        }
        map.retain(|_, v: &mut LaurentPoly| !v.is_zero());
        if let Some(u) = &unit {
            known(u)?;
        }
        for (l, _) in weights.weights() {
            known(l)?;
        }
        Ok(CellDatum { shape, labels, weights, gram: map, unit })
    }

    /// Assembles and validates: every label has a weight, Gram values are
    /// block-symmetric, vanish between labels of different weight, and the
    /// unit label (if any) has `Ψ(b₀, b₀) = 1` and `n(b₀) = 0`.
    pub fn new(
        shape: BlockShape,
        labels: Vec<Label>,
        weights: WeightData,
        gram: impl IntoIterator<Item = ((Label, Label), LaurentPoly)>,
        unit: Option<Label>,
    ) -> Result<Self> {
        let d = Self::from_parts(shape, labels, weights, gram, unit)?;
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match self.violations().into_iter().next() {
            None => Ok(()),
            Some(Violation::MissingWeight(b)) => Err(Error::MissingWeight(b)),
            Some(v) => Err(Error::InvalidDatum(v.to_string())),
        }
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for l in &self.labels {
            match self.weights.q_exponent(l) {
                Ok(_) => {}
                Err(Error::MissingWeight(_)) => out.push(Violation::MissingWeight(l.clone())),
                Err(e) => out.push(Violation::Exponent(l.clone(), e.to_string())),
            }
        }
        for ((b, c), v) in &self.gram {
            if !is_block_symmetric(v) {
                out.push(Violation::NotBlockSymmetric(b.clone(), c.clone()));
            }
        }
        out.extend(self.support_violations());
        if let Some(u) = &self.unit {
            let g = self.gram(u, u);
            if !g.is_one() {
                out.push(Violation::UnitGram(g.to_string()));
            }
            if let Ok(n) = self.weights.q_exponent(u) {
                if n != 0 {
                    out.push(Violation::UnitExponent(n));
                }
            }
        }
        out
    }

    fn support_violations(&self) -> Vec<Violation> {
        self.gram
            .keys()
            .filter(|(b, c)| match (self.weights.weight(b), self.weights.weight(c)) {
                (Some(x), Some(y)) => x != y,
                _ => false,
            })
            .map(|(b, c)| Violation::Support(b.clone(), c.clone()))
            .collect()
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn contains(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }

    pub fn weights(&self) -> &WeightData {
        &self.weights
    }

    pub fn unit_label(&self) -> Option<&Label> {
        self.unit.as_ref()
    }

    /// `Ψ(b, b′)`, zero when absent.
    pub fn gram(&self, b: &str, c: &str) -> LaurentPoly {
        self.gram
            .get(&(b.to_string(), c.to_string()))
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(&self.shape))
    }

    /// Nonzero Gram entries in key order.
    pub fn gram_entries(&self) -> impl Iterator<Item = (&(Label, Label), &LaurentPoly)> {
        self.gram.iter()
    }

    pub fn gram_expansion(&self, b: &str, c: &str) -> Result<SchurExpansion> {
        schur_expand(&self.gram(b, c))
    }

    pub fn q_exponent(&self, b: &str) -> Result<i32> {
        self.weights.q_exponent(b)
    }

    fn label_index(&self, l: &str) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }
}

/// An element `Σ (b, s, b′)` of the layer.
#[derive(Clone, Debug)]
pub struct CellElement {
    datum: Arc<CellDatum>,
    terms: BTreeMap<(Label, Label), SchurExpansion>,
}

impl PartialEq for CellElement {
    fn eq(&self, other: &Self) -> bool {
        same_datum(&self.datum, &other.datum) && self.terms == other.terms
    }
}

fn same_datum(a: &Arc<CellDatum>, b: &Arc<CellDatum>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl CellElement {
    pub fn zero(datum: &Arc<CellDatum>) -> Self {
        CellElement { datum: datum.clone(), terms: BTreeMap::new() }
    }

    /// The triple `(b, s, b′)`.
    pub fn basis(datum: &Arc<CellDatum>, b: &str, s: SchurExpansion, c: &str) -> Result<Self> {
        for l in [b, c] {
            if !datum.contains(l) {
                return Err(Error::UnknownLabel(l.to_string()));
            }
        }
        if s.shape() != datum.shape() {
            return Err(Error::ShapeMismatch(format!("coefficient of ({}, {})", b, c)));
        }
        let mut e = Self::zero(datum);
        if !s.is_zero() {
            e.terms.insert((b.to_string(), c.to_string()), s);
        }
        Ok(e)
    }

    /// `(b₀, 1, b₀)` for the datum's unit label.
    pub fn unit(datum: &Arc<CellDatum>) -> Option<Self> {
        let u = datum.unit_label()?;
        Self::basis(datum, u, SchurExpansion::one(datum.shape()), u).ok()
    }

    pub fn datum(&self) -> &Arc<CellDatum> {
        &self.datum
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Label, Label), &SchurExpansion)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &CellElement) -> Result<()> {
        if same_datum(&self.datum, &other.datum) {
            Ok(())
        } else {
            Err(Error::DatumMismatch)
        }
    }

    pub fn checked_add(&self, other: &CellElement) -> Result<CellElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, s) in &other.terms {
            let merged = match out.terms.get(k) {
                Some(prev) => prev.checked_add(s)?,
                None => s.clone(),
            };
            if merged.is_zero() {
                out.terms.remove(k);
            } else {
                out.terms.insert(k.clone(), merged);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> CellElement {
        CellElement {
            datum: self.datum.clone(),
            terms: self.terms.iter().map(|(k, s)| (k.clone(), s.neg())).collect(),
        }
    }

    /// Multiplies every coefficient by a scalar of ℚ[q^±½].
    pub fn scale(&self, c: &LaurentPoly) -> Result<CellElement> {
        let mut terms = BTreeMap::new();
        for (k, s) in &self.terms {
            let t = s.scale(c)?;
            if !t.is_zero() {
                terms.insert(k.clone(), t);
            }
        }
        Ok(CellElement { datum: self.datum.clone(), terms })
    }

    /// Product in the layer.
    pub fn mul(&self, other: &CellElement) -> Result<CellElement> {
        self.check(other)?;
        let d = &self.datum;
        let shape = d.shape();
        let left: Vec<_> = self
            .terms
            .iter()
            .map(|(k, s)| Ok((k, s.to_laurent()?)))
            .collect::<Result<_>>()?;
        let right: Vec<_> = other
            .terms
            .iter()
            .map(|(k, s)| Ok((k, s.to_laurent()?)))
            .collect::<Result<_>>()?;
        let mut acc: BTreeMap<(Label, Label), LaurentPoly> = BTreeMap::new();
        for ((b1, b1p), s1) in &left {
            let n = d.q_exponent(b1p)?;
            for ((b2, b2p), s2) in &right {
                let psi = d.gram(b2, b1p);
                if psi.is_zero() {
                    continue;
                }
                let value = (&(s1 * s2) * &psi).shift(&crate::laurent::Monomial::q_power(n));
                let slot = acc
                    .entry((b1.clone(), b2p.clone()))
                    .or_insert_with(|| LaurentPoly::zero(shape));
                *slot = &*slot + &value;
            }
        }
        let mut terms = BTreeMap::new();
        for (k, v) in acc {
            let e = schur_expand(&v)?;
            if !e.is_zero() {
                terms.insert(k, e);
            }
        }
        Ok(CellElement { datum: d.clone(), terms })
    }

    /// The anti-involution `#`.
    pub fn sharp(&self) -> CellElement {
        CellElement {
            datum: self.datum.clone(),
            terms: self
                .terms
                .iter()
                .map(|((b, c), s)| ((c.clone(), b.clone()), s.dual()))
                .collect(),
        }
    }
}

impl fmt::Display for CellElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((b, c), s)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{}; {}; {}]", b, s, c)?;
        }
        Ok(())
    }
}

/// `cell_mul(x, y)`.
pub fn cell_mul(x: &CellElement, y: &CellElement) -> Result<CellElement> {
    x.mul(y)
}

/// `sharp(x)`.
pub fn sharp(x: &CellElement) -> CellElement {
    x.sharp()
}

/// `Σ_b f_b(z) · G(b)u` in the module attached to a datum.
#[derive(Clone, Debug)]
pub struct ModuleVector {
    datum: Arc<CellDatum>,
    coords: BTreeMap<Label, LaurentPoly>,
}

impl ModuleVector {
    pub fn zero(datum: &Arc<CellDatum>) -> Self {
        ModuleVector { datum: datum.clone(), coords: BTreeMap::new() }
    }

    pub fn unit(datum: &Arc<CellDatum>, b: &str) -> Result<Self> {
        Self::zero(datum).with_coord(b, LaurentPoly::one(datum.shape()))
    }

    /// Adds `f · G(b)u`.
    pub fn with_coord(mut self, b: &str, f: LaurentPoly) -> Result<Self> {
        if !self.datum.contains(b) {
            return Err(Error::UnknownLabel(b.to_string()));
        }
        let entry = self
            .coords
            .entry(b.to_string())
            .or_insert_with(|| LaurentPoly::zero(self.datum.shape()));
        *entry = entry.checked_add(&f)?;
        if entry.is_zero() {
            self.coords.remove(b);
        }
        Ok(self)
    }

    pub fn coord(&self, b: &str) -> LaurentPoly {
        self.coords
            .get(b)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.datum.shape()))
    }

    /// `f · x`.
    pub fn scale(&self, f: &LaurentPoly) -> Result<ModuleVector> {
        let mut coords = BTreeMap::new();
        for (b, g) in &self.coords {
            let v = f.checked_mul(g)?;
            if !v.is_zero() {
                coords.insert(b.clone(), v);
            }
        }
        Ok(ModuleVector { datum: self.datum.clone(), coords })
    }

    pub fn checked_add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        if !same_datum(&self.datum, &other.datum) {
            return Err(Error::DatumMismatch);
        }
        let mut out = self.clone();
        for (b, f) in &other.coords {
            out = out.with_coord(b, f.clone())?;
        }
        Ok(out)
    }
}

/// `((x, y)) = Σ x_b · bar(y_{b′}) · Ψ(b, b′)`.
pub fn module_pairing(x: &ModuleVector, y: &ModuleVector) -> Result<LaurentPoly> {
    if !same_datum(&x.datum, &y.datum) {
        return Err(Error::DatumMismatch);
    }
    let d = &x.datum;
    let mut acc = LaurentPoly::zero(d.shape());
    for (b, f) in &x.coords {
        for (c, g) in &y.coords {
            let psi = d.gram(b, c);
            if !psi.is_zero() {
                acc = &acc + &(&(f * &g.bar()) * &psi);
            }
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub key: &'static str,
    pub description: &'static str,
    pub status: CheckStatus,
}

/// Outcome of [`verify_cell_axioms`]; failures are entries, not errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.status, CheckStatus::Fail(_)))
    }

    pub fn status(&self, key: &str) -> Option<&CheckStatus> {
        self.checks.iter().find(|c| c.key == key).map(|c| &c.status)
    }
}

const SWEEP_LIMIT: usize = 4096;

fn basis_triples(d: &Arc<CellDatum>) -> Vec<CellElement> {
    let one = SchurExpansion::one(d.shape());
    let mut out = Vec::new();
    for b in d.labels() {
        for c in d.labels() {
            out.push(CellElement::basis(d, b, one.clone(), c).expect("labels come from the datum"));
        }
    }
    out
}

fn check_associativity(d: &Arc<CellDatum>, samples: usize, seed: u64, bound: i32) -> CheckStatus {
    let assoc = |x: &CellElement, y: &CellElement, z: &CellElement| -> Result<Option<String>> {
        let lhs = x.mul(y)?.mul(z)?;
        let rhs = x.mul(&y.mul(z)?)?;
        Ok((lhs != rhs).then(|| format!("(xy)z != x(yz) for x = {}, y = {}, z = {}", x, y, z)))
    };
    let basis = basis_triples(d);
    let mut cases: Vec<(CellElement, CellElement, CellElement)> = Vec::new();
    if basis.len().pow(3) <= SWEEP_LIMIT {
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    cases.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    let mut rng = sample::rng(seed);
    for _ in 0..samples {
        let x = sample::random_element(&mut rng, d, 2, bound);
        let y = sample::random_element(&mut rng, d, 2, bound);
        let z = sample::random_element(&mut rng, d, 2, bound);
        cases.push((x, y, z));
    }
    for (x, y, z) in &cases {
        match assoc(x, y, z) {
            Ok(None) => {}
            Ok(Some(msg)) => return CheckStatus::Fail(msg),
            Err(e) => return CheckStatus::Fail(e.to_string()),
        }
    }
    CheckStatus::Pass
}

fn check_anti_multiplicativity(d: &Arc<CellDatum>, samples: usize, seed: u64, bound: i32) -> CheckStatus {
    let anti = |x: &CellElement, y: &CellElement| -> Result<Option<String>> {
        let lhs = x.mul(y)?.sharp();
        let rhs = y.sharp().mul(&x.sharp())?;
        Ok((lhs != rhs).then(|| format!("#(xy) = {} but #y #x = {} for x = {}, y = {}", lhs, rhs, x, y)))
    };
    let basis = basis_triples(d);
    let mut cases = Vec::new();
    if basis.len().pow(2) <= SWEEP_LIMIT {
        for x in &basis {
            for y in &basis {
                cases.push((x.clone(), y.clone()));
            }
        }
    }
    let mut rng = sample::rng(seed ^ 0x5eed);
    for _ in 0..samples {
        let x = sample::random_element(&mut rng, d, 2, bound);
        let y = sample::random_element(&mut rng, d, 2, bound);
        cases.push((x, y));
    }
    for (x, y) in &cases {
        match anti(x, y) {
            Ok(None) => {}
            Ok(Some(msg)) => return CheckStatus::Fail(msg),
            Err(e) => return CheckStatus::Fail(e.to_string()),
        }
    }
    CheckStatus::Pass
}

fn check_unit(d: &Arc<CellDatum>) -> CheckStatus {
    let Some(u) = d.unit_label() else {
        return CheckStatus::NotApplicable;
    };
    let g = d.gram(u, u);
    if !g.is_one() {
        return CheckStatus::Fail(format!("gram({0}, {0}) = {1}, expected 1", u, g));
    }
    match d.q_exponent(u) {
        Ok(0) => {}
        Ok(n) => return CheckStatus::Fail(format!("n({}) = {}/2, expected 0", u, n)),
        Err(e) => return CheckStatus::Fail(e.to_string()),
    }
    let e = CellElement::unit(d).expect("unit label belongs to the datum");
    match e.mul(&e) {
        Ok(ee) if ee == e => {}
        Ok(ee) => return CheckStatus::Fail(format!("e*e = {}", ee)),
        Err(err) => return CheckStatus::Fail(err.to_string()),
    }
    if e.sharp() != e {
        return CheckStatus::Fail(format!("#e = {}", e.sharp()));
    }
    CheckStatus::Pass
}

/// Runs the generalized-matrix-algebra checks on a datum.
///
/// `samples` random triples (and pairs) are drawn from a generator seeded
/// with `seed`, on top of an exhaustive sweep over basis triples `(b, 1, b′)`
/// when the label set is small. Sampled Schur weights have parts in `-1..=1`.
pub fn verify_cell_axioms(d: &Arc<CellDatum>, samples: usize, seed: u64) -> AxiomReport {
    verify_cell_axioms_bounded(d, samples, seed, 1)
}

/// [`verify_cell_axioms`] with sampled Schur parts in `-bound..=bound`.
pub fn verify_cell_axioms_bounded(d: &Arc<CellDatum>, samples: usize, seed: u64, bound: i32) -> AxiomReport {
    let mut checks = Vec::new();

    let asym: Vec<_> = d
        .gram_entries()
        .filter(|(_, v)| !is_block_symmetric(v))
        .map(|((b, c), _)| format!("({}, {})", b, c))
        .collect();
    checks.push(AxiomCheck {
        key: "block_symmetry",
        description: "gram values are symmetric in each block",
        status: if asym.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(format!("not block-symmetric at {}", asym.join(", ")))
        },
    });

    let mut sigma = Vec::new();
    for b in d.labels() {
        for c in d.labels() {
            if d.label_index(b) <= d.label_index(c) && d.gram(b, c).bar() != d.gram(c, b) {
                sigma.push(format!("({}, {})", b, c));
            }
        }
    }
    checks.push(AxiomCheck {
        key: "sigma_symmetry",
        description: "bar(gram(b, b')) = gram(b', b)",
        status: if sigma.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(format!("fails at {}", sigma.join(", ")))
        },
    });

    let mut support: Vec<String> = d
        .support_violations()
        .into_iter()
        .map(|v| v.to_string())
        .collect();
    for l in d.labels() {
        if d.weights().weight(l).is_none() {
            support.push(format!("missing weight for label {}", l));
        }
    }
    checks.push(AxiomCheck {
        key: "support",
        description: "gram vanishes between labels of different weight",
        status: if support.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(support.join("; "))
        },
    });

    checks.push(AxiomCheck {
        key: "associativity",
        description: "(xy)z = x(yz)",
        status: check_associativity(d, samples, seed, bound),
    });
    checks.push(AxiomCheck {
        key: "anti_multiplicativity",
        description: "#(xy) = #(y) #(x)",
        status: check_anti_multiplicativity(d, samples, seed, bound),
    });
    checks.push(AxiomCheck {
        key: "unit",
        description: "unit label: gram = 1, n = 0, e*e = e, #e = e",
        status: check_unit(d),
    });
    AxiomReport { checks }
}

/// Result of [`layer_idempotent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LayerIdempotency {
    /// `Ψ(b, b′)` is a unit of `R(G)[q^±½]`.
    Yes { witness: (Label, Label) },
    Inconclusive,
}

/// Whether some Gram value is a unit (`±q^{k/2}` times a product of
/// determinant characters), which makes the layer's ideal idempotent.
pub fn layer_idempotent(d: &CellDatum) -> LayerIdempotency {
    let mut keys: Vec<&(Label, Label)> = d.gram.keys().collect();
    if let Some(u) = d.unit_label() {
        keys.sort_by_key(|(b, c)| !(b == u && c == u));
    }
    for (b, c) in keys {
        if let Ok(e) = d.gram_expansion(b, c) {
            if e.is_unit() {
                return LayerIdempotency::Yes { witness: (b.clone(), c.clone()) };
            }
        }
    }
    LayerIdempotency::Inconclusive
}

/// For a unit `Ψ(b, b′) = u`, the idempotent `(b′, q^{-n(b)} u⁻¹, b)`.
pub fn idempotent_from_witness(d: &Arc<CellDatum>, b: &str, c: &str) -> Result<Option<CellElement>> {
    let e = d.gram_expansion(b, c)?;
    if !e.is_unit() {
        return Ok(None);
    }
    let (weights, coeff) = e.terms().next().expect("unit has one term");
    let (sign, q_half) = coeff.as_q_monomial().expect("unit coefficient is a q-monomial");
    let n = d.q_exponent(b)?;
    let inv_weights = weights.iter().map(|w| w.dual()).collect();
    // ±1 is its own inverse
    let inv_coeff = LaurentPoly::q_power(&BlockShape::empty(), -q_half - n).scale(sign);
    let s = SchurExpansion::term(d.shape(), inv_weights, inv_coeff)?;
    CellElement::basis(d, c, s, b).map(Some)
}

/// A finite chain of layers, listed from the top of the ideal chain down.
#[derive(Clone, Debug, Default)]
pub struct LayerChain {
    layers: Vec<Arc<CellDatum>>,
}

impl LayerChain {
    pub fn new(layers: Vec<Arc<CellDatum>>) -> Self {
        LayerChain { layers }
    }

    pub fn layers(&self) -> &[Arc<CellDatum>] {
        &self.layers
    }

    pub fn verify(&self, samples: usize, seed: u64) -> Vec<AxiomReport> {
        self.layers
            .iter()
            .enumerate()
            .map(|(k, d)| verify_cell_axioms(d, samples, seed.wrapping_add(k as u64)))
            .collect()
    }

    /// Every layer has an idempotent ideal.
    pub fn all_idempotent(&self) -> bool {
        self.layers
            .iter()
            .all(|d| matches!(layer_idempotent(d), LayerIdempotency::Yes { .. }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{Monomial, Var};
    use crate::symfunc::{schur_in, GLWeight};
    use crate::{rat, ratio};
    use alloc::vec;

    fn w(parts: &[i32]) -> GLWeight {
        GLWeight::new(parts.to_vec()).unwrap()
    }

    fn lbl(s: &str) -> Label {
        s.to_string()
    }

    fn unit_datum() -> Arc<CellDatum> {
        let shape = BlockShape::single(1);
        let wd = WeightData::new(vec![vec![rat(1)]], vec![1], [(lbl("b0"), vec![0])]).unwrap();
        Arc::new(
            CellDatum::new(
                shape.clone(),
                vec![lbl("b0")],
                wd,
                [((lbl("b0"), lbl("b0")), LaurentPoly::one(&shape))],
                Some(lbl("b0")),
            )
            .unwrap(),
        )
    }

    fn two_label_datum(c: i64) -> Arc<CellDatum> {
        let shape = BlockShape::single(1);
        let wd = WeightData::new(
            vec![vec![rat(1)]],
            vec![2],
            [(lbl("b0"), vec![0]), (lbl("b1"), vec![1])],
        )
        .unwrap();
        Arc::new(
            CellDatum::new(
                shape.clone(),
                vec![lbl("b0"), lbl("b1")],
                wd,
                [
                    ((lbl("b0"), lbl("b0")), LaurentPoly::one(&shape)),
                    ((lbl("b1"), lbl("b1")), LaurentPoly::constant(&shape, rat(c))),
                ],
                Some(lbl("b0")),
            )
            .unwrap(),
        )
    }

    #[test]
    fn q_exponent_examples() {
        let wd = WeightData::new(vec![vec![rat(1)]], vec![2], [(lbl("a"), vec![0]), (lbl("b"), vec![1]), (lbl("c"), vec![-4])])
            .unwrap();
        assert_eq!(q_exponent("a", &wd), Ok(0));
        assert_eq!(q_exponent("b", &wd), Ok(5));
        assert_eq!(q_exponent("c", &wd), Ok(0));
        assert_eq!(q_exponent("d", &wd), Err(Error::MissingWeight(lbl("d"))));

        let third = WeightData::new(vec![vec![ratio(1, 3)]], vec![0], [(lbl("a"), vec![1])]).unwrap();
        assert_eq!(third.q_exponent("a"), Err(Error::NonHalfIntegralExponent(lbl("a"))));
    }

    #[test]
    fn weight_data_validation() {
        assert!(WeightData::new(vec![vec![rat(1), rat(2)], vec![rat(3), rat(1)]], vec![0, 0], []).is_err());
        assert!(WeightData::new(vec![vec![rat(1)]], vec![0], [(lbl("a"), vec![1, 2])]).is_err());
        assert!(WeightData::new(vec![], vec![], []).is_err());
    }

    #[test]
    fn datum_invariants() {
        let shape = BlockShape::single(2);
        let wd = || WeightData::new(vec![vec![rat(1)]], vec![0], [(lbl("b"), vec![0]), (lbl("c"), vec![1])]).unwrap();
        let z1 = LaurentPoly::var(&shape, Var::new(1, 1)).unwrap();
        let z2 = LaurentPoly::var(&shape, Var::new(1, 2)).unwrap();
        let asym = CellDatum::new(shape.clone(), vec![lbl("b")], WeightData::new(vec![vec![rat(1)]], vec![0], [(lbl("b"), vec![0])]).unwrap(),
            [((lbl("b"), lbl("b")), &z1 - &z2)], None);
        assert_eq!(asym, Err(Error::InvalidDatum("gram not block-symmetric at (b, b)".into())));

        let missing = CellDatum::new(shape.clone(), vec![lbl("b"), lbl("c"), lbl("d")], wd(), [], None);
        assert_eq!(missing, Err(Error::MissingWeight(lbl("d"))));

        let support = CellDatum::new(shape.clone(), vec![lbl("b"), lbl("c")], wd(), [((lbl("b"), lbl("c")), LaurentPoly::one(&shape))], None);
        assert!(matches!(support, Err(Error::InvalidDatum(_))));

        let bad_unit = CellDatum::new(shape.clone(), vec![lbl("b"), lbl("c")], wd(), [((lbl("c"), lbl("c")), LaurentPoly::one(&shape))], Some(lbl("c")));
        assert_eq!(bad_unit, Err(Error::InvalidDatum("unit label has q exponent 1/2, expected 0".into())));

        let unknown = CellDatum::from_parts(shape.clone(), vec![lbl("b")], wd(), [((lbl("b"), lbl("x")), LaurentPoly::one(&shape))], None);
        assert_eq!(unknown.err(), Some(Error::UnknownLabel(lbl("x"))));
    }

    #[test]
    fn unit_is_idempotent() {
        let d = unit_datum();
        let e = CellElement::unit(&d).unwrap();
        assert_eq!(e.mul(&e).unwrap(), e);
        assert_eq!(e.sharp(), e);
        assert!(e.mul(&CellElement::zero(&d)).unwrap().is_zero());
    }

    #[test]
    fn two_label_product() {
        let d = two_label_datum(7);
        let one = SchurExpansion::one(d.shape());
        let x = CellElement::basis(&d, "b0", one.clone(), "b1").unwrap();
        let y = CellElement::basis(&d, "b1", one.clone(), "b0").unwrap();
        let expected_coeff = LaurentPoly::q_power(&BlockShape::empty(), 5).scale(&rat(7));
        let expected = CellElement::basis(&d, "b0", one.scale(&expected_coeff).unwrap(), "b0").unwrap();
        assert_eq!(x.mul(&y).unwrap(), expected);
        // Ψ(b0, b1) = 0, so the other order vanishes
        assert!(CellElement::basis(&d, "b1", one.clone(), "b1").unwrap().mul(&x).unwrap().is_zero());
    }

    #[test]
    fn sharp_examples() {
        let shape = BlockShape::single(2);
        let wd = WeightData::new(vec![vec![rat(1)]], vec![0], [(lbl("b1"), vec![0]), (lbl("b2"), vec![0])]).unwrap();
        let d = Arc::new(CellDatum::new(shape.clone(), vec![lbl("b1"), lbl("b2")], wd, [], None).unwrap());
        let x = CellElement::basis(&d, "b1", SchurExpansion::basis(&shape, vec![w(&[1, 0])]).unwrap(), "b2").unwrap();
        let y = CellElement::basis(&d, "b2", SchurExpansion::basis(&shape, vec![w(&[0, -1])]).unwrap(), "b1").unwrap();
        assert_eq!(x.sharp(), y);
        assert_eq!(x.sharp().sharp(), x);
        assert_eq!(x.to_string(), "[b1; s(1,0); b2]");
    }

    #[test]
    fn module_pairing_examples() {
        let d = two_label_datum(3);
        let shape = d.shape().clone();
        let u0 = ModuleVector::unit(&d, "b0").unwrap();
        assert!(module_pairing(&u0, &u0).unwrap().is_one());

        let z = LaurentPoly::var(&shape, Var::new(1, 1)).unwrap();
        let f = &(&z + &LaurentPoly::q_power(&shape, 1)) + &LaurentPoly::one(&shape);
        let g = &z.pow(2) - &LaurentPoly::constant(&shape, rat(2));
        let x = u0.checked_add(&ModuleVector::unit(&d, "b1").unwrap().scale(&z).unwrap()).unwrap();
        let y = ModuleVector::unit(&d, "b1").unwrap().checked_add(&u0.scale(&g).unwrap()).unwrap();
        let base = module_pairing(&x, &y).unwrap();
        assert_eq!(module_pairing(&x.scale(&f).unwrap(), &y).unwrap(), &f * &base);
        assert_eq!(module_pairing(&x, &y.scale(&g).unwrap()).unwrap(), &g.bar() * &base);
        assert_eq!(module_pairing(&ModuleVector::unit(&d, "b1").unwrap(), &ModuleVector::unit(&d, "b1").unwrap()).unwrap(), d.gram("b1", "b1"));
    }

    #[test]
    fn verify_unit_datum_passes() {
        let report = verify_cell_axioms(&unit_datum(), 10, 1);
        assert!(report.all_passed(), "{:?}", report);
        assert_eq!(report.status("unit"), Some(&CheckStatus::Pass));
    }

    #[test]
    fn verify_reports_asymmetric_gram() {
        let shape = BlockShape::single(2);
        let wd = WeightData::new(vec![vec![rat(1)]], vec![0], [(lbl("b"), vec![0])]).unwrap();
        let z1 = LaurentPoly::var(&shape, Var::new(1, 1)).unwrap();
        let z2 = LaurentPoly::var(&shape, Var::new(1, 2)).unwrap();
        let d = Arc::new(CellDatum::from_parts(shape, vec![lbl("b")], wd, [((lbl("b"), lbl("b")), &z1 - &z2)], None).unwrap());
        let report = verify_cell_axioms(&d, 2, 0);
        assert!(matches!(report.status("block_symmetry"), Some(CheckStatus::Fail(_))));
        assert_eq!(report.status("unit"), Some(&CheckStatus::NotApplicable));
    }

    #[test]
    fn verify_reports_sigma_failure() {
        let shape = BlockShape::single(2);
        let wd = WeightData::new(vec![vec![rat(1)]], vec![0], [(lbl("b"), vec![0]), (lbl("c"), vec![0])]).unwrap();
        let s10 = schur_in(&shape, 1, &w(&[1, 0])).unwrap();
        let d = Arc::new(
            CellDatum::new(shape, vec![lbl("b"), lbl("c")], wd, [((lbl("b"), lbl("c")), s10.clone()), ((lbl("c"), lbl("b")), s10)], None)
                .unwrap(),
        );
        let report = verify_cell_axioms(&d, 0, 0);
        assert!(matches!(report.status("sigma_symmetry"), Some(CheckStatus::Fail(_))));
        assert!(matches!(report.status("anti_multiplicativity"), Some(CheckStatus::Fail(_))));
        assert_eq!(report.status("associativity"), Some(&CheckStatus::Pass));
    }

    #[test]
    fn layer_idempotent_examples() {
        assert!(matches!(layer_idempotent(&unit_datum()), LayerIdempotency::Yes { .. }));

        let shape = BlockShape::single(2);
        let wd = WeightData::new(vec![vec![rat(1)]], vec![0], [(lbl("b"), vec![0]), (lbl("c"), vec![0])]).unwrap();
        let s10 = schur_in(&shape, 1, &w(&[1, 0])).unwrap();
        let mut all = Vec::new();
        for b in ["b", "c"] {
            for c in ["b", "c"] {
                all.push(((lbl(b), lbl(c)), s10.clone()));
            }
        }
        let d = CellDatum::from_parts(shape.clone(), vec![lbl("b"), lbl("c")], wd.clone(), all, None).unwrap();
        assert_eq!(layer_idempotent(&d), LayerIdempotency::Inconclusive);

        let det = schur_in(&shape, 1, &w(&[1, 1])).unwrap().shift(&Monomial::q_power(2));
        let d = Arc::new(CellDatum::new(shape, vec![lbl("b"), lbl("c")], wd, [((lbl("b"), lbl("b")), det)], None).unwrap());
        assert_eq!(layer_idempotent(&d), LayerIdempotency::Yes { witness: (lbl("b"), lbl("b")) });
        let e = idempotent_from_witness(&d, "b", "b").unwrap().unwrap();
        assert_eq!(e.mul(&e).unwrap(), e);
    }

    #[test]
    fn datum_mismatch() {
        let a = CellElement::unit(&unit_datum()).unwrap();
        let b = CellElement::unit(&two_label_datum(1)).unwrap();
        assert_eq!(a.mul(&b), Err(Error::DatumMismatch));
    }
}
