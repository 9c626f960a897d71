//! Sparse Laurent polynomials over ℚ.
//!
//! Variables come in blocks: block `i` of size `m_i` carries `z[i][1..=m_i]`.
//! A distinguished parameter `q` is stored with exponents in half-units, so
//! `q^{1/2}` has stored exponent `1`. Polynomials are kept in canonical form:
//! no zero coefficients and no zero exponents.
//!
//! Monomials are ordered by their dense exponent vector (variables in
//! `(block, index)` order, missing exponents read as zero), then by the `q`
//! exponent. Printing lists terms from the largest monomial down.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

pub type BlockId = u32;

/// A variable `z[block][index]`, with `index` counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub block: BlockId,
    pub index: u32,
}

impl Var {
    pub const fn new(block: BlockId, index: u32) -> Self {
        Var { block, index }
    }
}

/// Ordered list of `(block id, size)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BlockShape {
    blocks: Vec<(BlockId, usize)>,
}

impl BlockShape {
    pub fn new(blocks: impl IntoIterator<Item = (BlockId, usize)>) -> Result<Self> {
        let blocks: Vec<_> = blocks.into_iter().collect();
        for (k, (id, _)) in blocks.iter().enumerate() {
            if blocks[..k].iter().any(|(other, _)| other == id) {
                return Err(Error::DuplicateBlock(*id));
            }
        }
        Ok(BlockShape { blocks })
    }

    /// The shape with no variables; polynomials over it live in ℚ[q^±½].
    pub fn empty() -> Self {
        BlockShape { blocks: Vec::new() }
    }

    /// One block, id 1, of size `m`.
    pub fn single(m: usize) -> Self {
        BlockShape { blocks: alloc::vec![(1, m)] }
    }

    /// Blocks numbered `1..=sizes.len()`.
    pub fn from_sizes(sizes: &[usize]) -> Self {
        BlockShape {
            blocks: sizes.iter().enumerate().map(|(k, &m)| (k as BlockId + 1, m)).collect(),
        }
    }

    pub fn blocks(&self) -> &[(BlockId, usize)] {
        &self.blocks
    }

    pub fn size_of(&self, block: BlockId) -> Option<usize> {
        self.blocks.iter().find(|(id, _)| *id == block).map(|&(_, m)| m)
    }

    pub fn total_vars(&self) -> usize {
        self.blocks.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total_vars() == 0
    }

    pub fn contains(&self, var: Var) -> bool {
        match self.size_of(var.block) {
            Some(m) => var.index >= 1 && var.index as usize <= m,
            None => false,
        }
    }

    /// Variables of one block, in index order.
    pub fn block_vars(&self, block: BlockId) -> Vec<Var> {
        let m = self.size_of(block).unwrap_or(0);
        (1..=m as u32).map(|index| Var::new(block, index)).collect()
    }

    /// All variables in canonical order.
    pub fn vars(&self) -> Vec<Var> {
        self.blocks.iter().flat_map(|&(b, _)| self.block_vars(b)).collect()
    }

    /// Variable name used when printing: `z{mu}` for single-block shapes,
    /// `z[i][mu]` otherwise.
    pub fn var_name(&self, var: Var) -> String {
        if self.blocks.len() == 1 {
            format!("z{}", var.index)
        } else {
            format!("z[{}][{}]", var.block, var.index)
        }
    }

    fn check(&self, other: &BlockShape) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("{:?} vs {:?}", self.blocks, other.blocks)))
        }
    }
}

/// A monomial `q^{q2/2} ∏ z_v^{e_v}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    z: Vec<(Var, i32)>,
    q2: i32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds a canonical monomial; repeated variables have their exponents added.
    pub fn new(z: impl IntoIterator<Item = (Var, i32)>, q_half: i32) -> Self {
        let mut acc: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in z {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial {
            z: acc.into_iter().filter(|&(_, e)| e != 0).collect(),
            q2: q_half,
        }
    }

    pub fn var(v: Var, e: i32) -> Self {
        Monomial::new([(v, e)], 0)
    }

    pub fn q_power(q_half: i32) -> Self {
        Monomial { z: Vec::new(), q2: q_half }
    }

    /// Exponent of `q` in half-units.
    pub fn q_half(&self) -> i32 {
        self.q2
    }

    pub fn z_exponent(&self, v: Var) -> i32 {
        self.z
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|k| self.z[k].1)
            .unwrap_or(0)
    }

    /// Nonzero `z` exponents in variable order.
    pub fn z_part(&self) -> &[(Var, i32)] {
        &self.z
    }

    pub fn is_z_free(&self) -> bool {
        self.z.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut z = Vec::with_capacity(self.z.len() + other.z.len());
        let (mut i, mut j) = (0, 0);
        while i < self.z.len() || j < other.z.len() {
            match (self.z.get(i), other.z.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        z.push((va, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        z.push((vb, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        if ea + eb != 0 {
                            z.push((va, ea + eb));
                        }
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&t), None) => {
                    z.push(t);
                    i += 1;
                }
                (None, Some(&t)) => {
                    z.push(t);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { z, q2: self.q2 + other.q2 }
    }

    /// `z ↦ z⁻¹` on every variable; `q` is fixed.
    pub fn bar(&self) -> Monomial {
        Monomial {
            z: self.z.iter().map(|&(v, e)| (v, -e)).collect(),
            q2: self.q2,
        }
    }

    /// Exchanges the exponents of `a` and `b`.
    pub fn swap(&self, a: Var, b: Var) -> Monomial {
        let ea = self.z_exponent(a);
        let eb = self.z_exponent(b);
        let rest = self.z.iter().copied().filter(|&(v, _)| v != a && v != b);
        Monomial::new(rest.chain([(a, eb), (b, ea)]), self.q2)
    }

    fn without_q(&self) -> Monomial {
        Monomial { z: self.z.clone(), q2: 0 }
    }

    fn write(&self, shape: &BlockShape, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str("*")
            }
        };
        if self.q2 != 0 {
            sep(f)?;
            write_q(self.q2, f)?;
        }
        for &(v, e) in &self.z {
            sep(f)?;
            f.write_str(&shape.var_name(v))?;
            if e != 1 {
                write!(f, "^{}", e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn write_q(q2: i32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q2 % 2 != 0 {
        write!(f, "q^{{{}/2}}", q2)
    } else if q2 == 2 {
        f.write_str("q")
    } else {
        write!(f, "q^{}", q2 / 2)
    }
}

fn cmp_dense(a: &[(Var, i32)], b: &[(Var, i32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(&(_, ea)), None) => return ea.cmp(&0),
            (None, Some(&(_, eb))) => return 0.cmp(&eb),
            (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                Ordering::Less => return ea.cmp(&0),
                Ordering::Greater => return 0.cmp(&eb),
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_dense(&self.z, &other.z).then(self.q2.cmp(&other.q2))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in the variables of a [`BlockShape`] and `q^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    shape: BlockShape,
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero(shape: &BlockShape) -> Self {
        LaurentPoly { shape: shape.clone(), terms: BTreeMap::new() }
    }

    pub fn one(shape: &BlockShape) -> Self {
        Self::constant(shape, Rational::one())
    }

    pub fn constant(shape: &BlockShape, c: Rational) -> Self {
        let mut p = Self::zero(shape);
        p.add_term(Monomial::one(), c);
        p
    }

    /// Element of the coefficient ring ℚ[q^±½] (empty shape).
    pub fn scalar(c: Rational) -> Self {
        Self::constant(&BlockShape::empty(), c)
    }

    pub fn var(shape: &BlockShape, v: Var) -> Result<Self> {
        Self::from_monomial(shape, Monomial::var(v, 1), Rational::one())
    }

    /// `q^{q_half/2}`.
    pub fn q_power(shape: &BlockShape, q_half: i32) -> Self {
        let mut p = Self::zero(shape);
        p.add_term(Monomial::q_power(q_half), Rational::one());
        p
    }

    pub fn from_monomial(shape: &BlockShape, m: Monomial, c: Rational) -> Result<Self> {
        if let Some(&(v, _)) = m.z.iter().find(|(v, _)| !shape.contains(*v)) {
            return Err(Error::VariableOutOfRange(v));
        }
        let mut p = Self::zero(shape);
        p.add_term(m, c);
        Ok(p)
    }

    pub fn from_terms(
        shape: &BlockShape,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(shape);
        for (m, c) in terms {
            if let Some(&(v, _)) = m.z.iter().find(|(v, _)| !shape.contains(*v)) {
                return Err(Error::VariableOutOfRange(v));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when no `z` variable occurs, i.e. the value lies in ℚ[q^±½].
    pub fn is_z_free(&self) -> bool {
        self.terms.keys().all(Monomial::is_z_free)
    }

    /// Largest monomial under the canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.shape.check(&other.shape)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.shape.check(&other.shape)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.shape.check(&other.shape)?;
        Ok(self.mul_unchecked(other, &self.shape))
    }

    fn mul_unchecked(&self, other: &LaurentPoly, shape: &BlockShape) -> LaurentPoly {
        let mut out = LaurentPoly::zero(shape);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multiplies by a `z`-free polynomial of any shape (an element of ℚ[q^±½]).
    pub fn mul_scalar(&self, s: &LaurentPoly) -> Result<LaurentPoly> {
        if !s.is_z_free() {
            return Err(Error::ShapeMismatch(String::from("scalar factor contains z variables")));
        }
        Ok(self.mul_unchecked(s, &self.shape))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.shape);
        }
        LaurentPoly {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(&self.shape);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces every `z` by `z⁻¹`. `q` is left alone.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.bar(), c.clone())).collect(),
        }
    }

    /// The `z`-free part `[f]₁`; keeps the shape.
    pub fn constant_term(&self) -> LaurentPoly {
        LaurentPoly {
            shape: self.shape.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.is_z_free())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `[self · other]₁` without forming the full product.
    pub fn constant_term_of_product(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.shape.check(&other.shape)?;
        type QTerms<'a> = Vec<(i32, &'a Rational)>;
        let mut by_z: BTreeMap<&[(Var, i32)], QTerms> = BTreeMap::new();
        for (m, c) in &other.terms {
            by_z.entry(m.z_part()).or_default().push((m.q2, c));
        }
        let mut out = LaurentPoly::zero(&self.shape);
        for (m, c) in &self.terms {
            let wanted: Vec<(Var, i32)> = m.z.iter().map(|&(v, e)| (v, -e)).collect();
            if let Some(partners) = by_z.get(wanted.as_slice()) {
                for &(q2, d) in partners {
                    out.add_term(Monomial::q_power(m.q2 + q2), c * d);
                }
            }
        }
        Ok(out)
    }

    /// Moves a `z`-free polynomial into the coefficient ring (empty shape).
    pub fn into_scalar(self) -> Result<LaurentPoly> {
        self.with_shape(&BlockShape::empty())
    }

    /// Reinterprets the polynomial over another shape containing all of its variables.
    pub fn with_shape(self, shape: &BlockShape) -> Result<LaurentPoly> {
        for m in self.terms.keys() {
            if let Some(&(v, _)) = m.z.iter().find(|(v, _)| !shape.contains(*v)) {
                return Err(Error::VariableOutOfRange(v));
            }
        }
        Ok(LaurentPoly { shape: shape.clone(), terms: self.terms })
    }

    /// Substitutes rational values for the `z` variables and returns an
    /// element of ℚ[q^±½].
    pub fn evaluate(&self, values: &BTreeMap<Var, Rational>) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(&BlockShape::empty());
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in &m.z {
                let x = values.get(&var).ok_or(Error::MissingAssignment(var))?;
                if x.is_zero() {
                    return Err(Error::ZeroAssignment(var));
                }
                v *= x.pow(e);
            }
            out.add_term(Monomial::q_power(m.q2), v);
        }
        Ok(out)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> LaurentPoly {
        LaurentPoly {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.swap(a, b), c.clone())).collect(),
        }
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    /// Groups terms by their `z` part; each group's coefficient is an element
    /// of ℚ[q^±½] (empty shape). Groups are in ascending canonical order.
    pub fn z_groups(&self) -> Vec<(Monomial, LaurentPoly)> {
        let mut out: Vec<(Monomial, LaurentPoly)> = Vec::new();
        let empty = BlockShape::empty();
        for (m, c) in &self.terms {
            let key = m.without_q();
            match out.last_mut() {
                Some((k, p)) if *k == key => p.add_term(Monomial::q_power(m.q2), c.clone()),
                _ => {
                    let mut p = LaurentPoly::zero(&empty);
                    p.add_term(Monomial::q_power(m.q2), c.clone());
                    out.push((key, p));
                }
            }
        }
        out
    }

    /// If the polynomial is `c·q^{k/2}` returns `(c, k)`.
    pub fn as_q_monomial(&self) -> Option<(&Rational, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        m.is_z_free().then_some((c, m.q2))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::one() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                m.write(&self.shape, f)?;
            }
        }
        Ok(())
    }
}

fn expect_same(a: &LaurentPoly, b: &LaurentPoly) {
    if let Err(e) = a.shape.check(&b.shape) {
        panic!("{}", e);
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on shape mismatch; see [`LaurentPoly::checked_add`].
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        expect_same(self, rhs);
        self.checked_add(rhs).unwrap()
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        expect_same(self, rhs);
        self.checked_sub(rhs).unwrap()
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        expect_same(self, rhs);
        self.mul_unchecked(rhs, &self.shape)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
