//! Schur characters of `GL_m` and the representation ring `R(∏ GL(m_i))`.
//!
//! A rational representation of `GL_m` is labelled by a [`GLWeight`], a weakly
//! decreasing integer tuple whose entries may be negative. Its character is
//! the Schur Laurent polynomial `s_w(z_1, …, z_m)`, computed here from the
//! bialternant after twisting by a power of the determinant so that all parts
//! are nonnegative.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::laurent::{BlockId, BlockShape, LaurentPoly, Monomial, Var};
use crate::Rational;

/// Highest weight of an irreducible rational `GL_m` representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GLWeight(Vec<i32>);

impl GLWeight {
    pub fn new(parts: impl Into<Vec<i32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(format!("{:?}", parts)));
        }
        Ok(GLWeight(parts))
    }

    /// The trivial representation of `GL_m`.
    pub fn zero(m: usize) -> Self {
        GLWeight(alloc::vec![0; m])
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Adds `k` to every part (tensoring with `det^k`).
    pub fn twist(&self, k: i32) -> GLWeight {
        GLWeight(self.0.iter().map(|p| p + k).collect())
    }

    /// `(c, …, c)` returns `Some(c)`; these are exactly the powers of the determinant.
    pub fn rectangular(&self) -> Option<i32> {
        match self.0.first() {
            None => Some(0),
            Some(&c) => self.0.iter().all(|&p| p == c).then_some(c),
        }
    }

    /// Highest weight of the dual representation.
    pub fn dual(&self) -> GLWeight {
        dual_weight(self)
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str(")")
    }
}

/// `(w_1, …, w_m) ↦ (−w_m, …, −w_1)`.
pub fn dual_weight(w: &GLWeight) -> GLWeight {
    GLWeight(w.0.iter().rev().map(|p| -p).collect())
}

/// All weights of length `m` with parts in `lo..=hi`, in increasing order.
pub fn dominant_weights(m: usize, lo: i32, hi: i32) -> Vec<GLWeight> {
    fn go(prefix: &mut Vec<i32>, m: usize, lo: i32, hi: i32, out: &mut Vec<GLWeight>) {
        if prefix.len() == m {
            out.push(GLWeight(prefix.clone()));
            return;
        }
        let top = prefix.last().copied().unwrap_or(hi);
        for p in lo..=top {
            prefix.push(p);
            go(prefix, m, lo, hi, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 || lo <= hi {
        go(&mut Vec::with_capacity(m), m, lo, hi, &mut out);
    }
    out
}

/// Schur Laurent polynomial `s_w(z_1, …, z_m)` over [`BlockShape::single`].
pub fn schur(m: usize, w: &GLWeight) -> Result<LaurentPoly> {
    schur_in(&BlockShape::single(m), 1, w)
}

/// Schur polynomial of `w` in the variables of one block of `shape`.
pub fn schur_in(shape: &BlockShape, block: BlockId, w: &GLWeight) -> Result<LaurentPoly> {
    let m = shape.size_of(block).ok_or(Error::UnknownBlock(block))?;
    if w.len() != m {
        return Err(Error::WeightLength { expected: m, found: w.len() });
    }
    if m == 0 {
        return Ok(LaurentPoly::one(shape));
    }
    let vars = shape.block_vars(block);
    let k = (-w.0[m - 1]).max(0);
    let shifted: Vec<i32> = w.0.iter().enumerate().map(|(i, p)| p + k + (m - 1 - i) as i32).collect();

    let mut numerator = LaurentPoly::zero(shape);
    for (perm, sign) in permutations(m) {
        let mono = Monomial::new(perm.iter().zip(&shifted).map(|(&j, &e)| (vars[j], e)), 0);
        numerator.add_term(mono, if sign { Rational::one() } else { -Rational::one() });
    }

    let mut quotient = numerator;
    for a in 0..m {
        for b in a + 1..m {
            quotient = divide_by_difference(&quotient, vars[a], vars[b])?;
        }
    }
    Ok(quotient.shift(&Monomial::new(vars.iter().map(|&v| (v, -k)), 0)))
}

/// Product of one Schur polynomial per block, weights given in block order.
pub fn schur_product(shape: &BlockShape, weights: &[GLWeight]) -> Result<LaurentPoly> {
    if weights.len() != shape.blocks().len() {
        return Err(Error::ShapeMismatch(format!(
            "{} weights for {} blocks",
            weights.len(),
            shape.blocks().len()
        )));
    }
    let mut acc = LaurentPoly::one(shape);
    for (&(block, _), w) in shape.blocks().iter().zip(weights) {
        let s = schur_in(shape, block, w)?;
        acc = &acc * &s;
    }
    Ok(acc)
}

/// All permutations of `0..m` with their parity (`true` for even).
fn permutations(m: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, bool)>) {
        let m = used.len();
        if prefix.len() == m {
            let inversions = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), inversions % 2 == 0));
            return;
        }
        for j in 0..m {
            if !used[j] {
                used[j] = true;
                prefix.push(j);
                go(prefix, used, out);
                prefix.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(m), &mut alloc::vec![false; m], &mut out);
    out
}

/// Exact quotient `f / (z_a − z_b)` by synthetic division in `z_a`.
fn divide_by_difference(f: &LaurentPoly, a: Var, b: Var) -> Result<LaurentPoly> {
    let shape = f.shape();
    let mut by_power: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
    for (m, c) in f.terms() {
        let e = m.z_exponent(a);
        let rest = m.mul(&Monomial::var(a, -e));
        by_power
            .entry(e)
            .or_insert_with(|| LaurentPoly::zero(shape))
            .add_term(rest, c.clone());
    }
    let (Some(&lo), Some(&hi)) = (by_power.keys().next(), by_power.keys().next_back()) else {
        return Ok(LaurentPoly::zero(shape));
    };
    let zb = Monomial::var(b, 1);
    let mut quotient = LaurentPoly::zero(shape);
    let mut carry = LaurentPoly::zero(shape);
    for k in (lo + 1..=hi).rev() {
        carry = match by_power.get(&k) {
            Some(ak) => ak + &carry.shift(&zb),
            None => carry.shift(&zb),
        };
        quotient = &quotient + &carry.shift(&Monomial::var(a, k - 1));
    }
    let remainder = &by_power[&lo] + &carry.shift(&zb);
    if !remainder.is_zero() {
        return Err(Error::NotDivisible(format!(
            "{} by z[{}][{}] - z[{}][{}]",
            f, a.block, a.index, b.block, b.index
        )));
    }
    Ok(quotient)
}

/// Whether `f` is invariant under permutations of the variables of `block`.
/// A block that is absent from the shape has nothing to permute.
pub fn is_symmetric(f: &LaurentPoly, block: BlockId) -> bool {
    let vars = f.shape().block_vars(block);
    vars.windows(2).all(|p| f.swap_vars(p[0], p[1]) == *f)
}

/// Symmetric in every block of its shape.
pub fn is_block_symmetric(f: &LaurentPoly) -> bool {
    f.shape().blocks().iter().all(|&(b, _)| is_symmetric(f, b))
}

fn check_block_symmetric(f: &LaurentPoly) -> Result<()> {
    match f.shape().blocks().iter().find(|&&(b, _)| !is_symmetric(f, b)) {
        Some(&(b, _)) => Err(Error::NotSymmetric(b)),
        None => Ok(()),
    }
}

/// Finite combination `Σ c_w · ∏_i s_{w_i}` with coefficients in ℚ[q^±½].
///
/// Keys hold one weight per block, in block order. Coefficients are stored
/// over the empty shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurExpansion {
    shape: BlockShape,
    terms: BTreeMap<Vec<GLWeight>, LaurentPoly>,
}

impl SchurExpansion {
    pub fn zero(shape: &BlockShape) -> Self {
        SchurExpansion { shape: shape.clone(), terms: BTreeMap::new() }
    }

    /// The class of the trivial representation.
    pub fn one(shape: &BlockShape) -> Self {
        let weights = shape.blocks().iter().map(|&(_, m)| GLWeight::zero(m)).collect();
        let mut e = Self::zero(shape);
        e.add_term(weights, LaurentPoly::scalar(Rational::one()));
        e
    }

    /// `coeff · ∏ s_{w_i}`. The coefficient must be `z`-free.
    pub fn term(shape: &BlockShape, weights: Vec<GLWeight>, coeff: LaurentPoly) -> Result<Self> {
        check_weights(shape, &weights)?;
        let coeff = coeff.into_scalar()?;
        let mut e = Self::zero(shape);
        e.add_term(weights, coeff);
        Ok(e)
    }

    /// A single Schur class with coefficient 1.
    pub fn basis(shape: &BlockShape, weights: Vec<GLWeight>) -> Result<Self> {
        Self::term(shape, weights, LaurentPoly::scalar(Rational::one()))
    }

    fn add_term(&mut self, weights: Vec<GLWeight>, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(weights)
            .or_insert_with(|| LaurentPoly::zero(&BlockShape::empty()));
        *slot = &*slot + &coeff;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<GLWeight>, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, weights: &[GLWeight]) -> LaurentPoly {
        self.terms
            .get(weights)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(&BlockShape::empty()))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The underlying block-symmetric Laurent polynomial.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(&self.shape);
        for (w, c) in &self.terms {
            acc = &acc + &schur_product(&self.shape, w)?.mul_scalar(c)?;
        }
        Ok(acc)
    }

    pub fn checked_add(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        same_shape(&self.shape, &other.shape)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SchurExpansion {
        SchurExpansion {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// Multiplies every coefficient by a `z`-free scalar.
    pub fn scale(&self, s: &LaurentPoly) -> Result<SchurExpansion> {
        let s = s.clone().into_scalar()?;
        let mut out = SchurExpansion::zero(&self.shape);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * &s);
        }
        Ok(out)
    }

    /// The involution `σ`: every Schur class goes to its dual, `q` is fixed.
    pub fn dual(&self) -> SchurExpansion {
        SchurExpansion {
            shape: self.shape.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.iter().map(dual_weight).collect(), c.clone()))
                .collect(),
        }
    }

    /// If the expansion is `c·q^{k/2}·∏ s_{w_i}` with `c = ±1` and every `w_i`
    /// rectangular, it is a unit of `R(G)[q^±½]`.
    pub fn is_unit(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let (w, c) = self.terms.iter().next().unwrap();
        let unit_coeff = c.as_q_monomial().is_some_and(|(a, _)| a.abs().is_one());
        unit_coeff && w.iter().all(|w| w.rectangular().is_some())
    }

    /// Text of the basis element for `weights`: `s(2,0)` for one block,
    /// `s[1](2,0)*s[2](1)` otherwise.
    pub fn basis_name(&self, weights: &[GLWeight]) -> String {
        if self.shape.blocks().len() == 1 {
            return format!("s{}", weights[0]);
        }
        let mut out = String::new();
        for (k, (&(b, _), w)) in self.shape.blocks().iter().zip(weights).enumerate() {
            if k > 0 {
                out.push('*');
            }
            out.push_str(&format!("s[{}]{}", b, w));
        }
        out
    }
}

fn check_weights(shape: &BlockShape, weights: &[GLWeight]) -> Result<()> {
    if weights.len() != shape.blocks().len() {
        return Err(Error::ShapeMismatch(format!(
            "{} weights for {} blocks",
            weights.len(),
            shape.blocks().len()
        )));
    }
    for (&(_, m), w) in shape.blocks().iter().zip(weights) {
        if w.len() != m {
            return Err(Error::WeightLength { expected: m, found: w.len() });
        }
    }
    Ok(())
}

fn same_shape(a: &BlockShape, b: &BlockShape) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("{:?} vs {:?}", a.blocks(), b.blocks())))
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let basis = self.basis_name(w);
            let (negative, body) = match c.as_q_monomial() {
                Some((a, _)) => {
                    let negative = a.is_negative();
                    let abs = if negative { -c } else { c.clone() };
                    let body = if basis.is_empty() {
                        format!("{}", abs)
                    } else if abs.is_one() {
                        basis
                    } else {
                        format!("{}*{}", abs, basis)
                    };
                    (negative, body)
                }
                None if basis.is_empty() => (false, format!("({})", c)),
                None => (false, format!("({})*{}", c, basis)),
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

/// Dense exponent vector of a monomial restricted to one block.
fn block_exponents(m: &Monomial, vars: &[Var]) -> Vec<i32> {
    vars.iter().map(|&v| m.z_exponent(v)).collect()
}

/// Expands a block-symmetric polynomial in the Schur basis by repeatedly
/// peeling off the Schur term of the lexicographically leading monomial.
pub fn schur_expand(f: &LaurentPoly) -> Result<SchurExpansion> {
    check_block_symmetric(f)?;
    let shape = f.shape().clone();
    let block_vars: Vec<Vec<Var>> =
        shape.blocks().iter().map(|&(b, _)| shape.block_vars(b)).collect();
    let mut rest = f.clone();
    let mut out = SchurExpansion::zero(&shape);
    while let Some((lead, _)) = rest.leading() {
        let lead_z = lead.z_part().to_vec();
        let coeff = {
            let mut c = LaurentPoly::zero(&BlockShape::empty());
            for (m, a) in rest.terms().rev() {
                if m.z_part() != lead_z.as_slice() {
                    break;
                }
                c.add_term(Monomial::q_power(m.q_half()), a.clone());
            }
            c
        };
        let lead = lead.clone();
        let weights = block_vars
            .iter()
            .map(|vars| GLWeight::new(block_exponents(&lead, vars)))
            .collect::<Result<Vec<_>>>()?;
        let s = schur_product(&shape, &weights)?.mul_scalar(&coeff)?;
        rest = &rest - &s;
        out.add_term(weights, coeff);
    }
    Ok(out)
}

/// Product in `R(G)[q^±½]`: multiply the characters and re-expand.
pub fn lr_mul(a: &SchurExpansion, b: &SchurExpansion) -> Result<SchurExpansion> {
    same_shape(&a.shape, &b.shape)?;
    if a.is_zero() || b.is_zero() {
        return Ok(SchurExpansion::zero(&a.shape));
    }
    let product = &a.to_laurent()? * &b.to_laurent()?;
    schur_expand(&product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(parts: &[i32]) -> GLWeight {
        GLWeight::new(parts.to_vec()).unwrap()
    }

    fn z(shape: &BlockShape, i: u32, e: i32) -> LaurentPoly {
        LaurentPoly::from_monomial(shape, Monomial::var(Var::new(1, i), e), rat(1)).unwrap()
    }

    /// Semistandard tableaux oracle for partitions: Σ_T z^T.
    fn ssyt_schur(m: usize, partition: &[i32]) -> LaurentPoly {
        let shape = BlockShape::single(m);
        let cells: Vec<(usize, usize)> = partition
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        let mut out = LaurentPoly::zero(&shape);
        let mut filling = vec![0usize; cells.len()];
        fn fill(
            k: usize,
            cells: &[(usize, usize)],
            filling: &mut Vec<usize>,
            m: usize,
            out: &mut LaurentPoly,
        ) {
            if k == cells.len() {
                let mono = Monomial::new(filling.iter().map(|&e| (Var::new(1, e as u32 + 1), 1)), 0);
                out.add_term(mono, rat(1));
                return;
            }
            let (r, c) = cells[k];
            for e in 0..m {
                let left_ok = c == 0 || {
                    let j = cells.iter().position(|&x| x == (r, c - 1)).unwrap();
                    filling[j] <= e
                };
                let up_ok = r == 0 || {
                    let j = cells.iter().position(|&x| x == (r - 1, c)).unwrap();
                    filling[j] < e
                };
                if left_ok && up_ok {
                    filling[k] = e;
                    fill(k + 1, cells, filling, m, out);
                }
            }
        }
        fill(0, &cells, &mut filling, m, &mut out);
        out
    }

    #[test]
    fn schur_examples() {
        let s = BlockShape::single(2);
        assert_eq!(schur(2, &w(&[1, 0])).unwrap(), &z(&s, 1, 1) + &z(&s, 2, 1));
        assert_eq!(schur(2, &w(&[1, 1])).unwrap(), &z(&s, 1, 1) * &z(&s, 2, 1));
        let s20 = &(&z(&s, 1, 2) + &(&z(&s, 1, 1) * &z(&s, 2, 1))) + &z(&s, 2, 2);
        assert_eq!(schur(2, &w(&[2, 0])).unwrap(), s20);
        assert_eq!(schur(2, &w(&[0, -1])).unwrap(), &z(&s, 1, -1) + &z(&s, 2, -1));
    }

    #[test]
    fn schur_matches_tableaux() {
        for m in 1..=4usize {
            for lam in dominant_weights(m, 0, 3) {
                assert_eq!(schur(m, &lam).unwrap(), ssyt_schur(m, lam.parts()), "{}", lam);
            }
        }
    }

    #[test]
    fn dominant_weight_enumeration() {
        assert_eq!(dominant_weights(3, -2, 2).len(), 35);
        assert_eq!(dominant_weights(2, -2, 2).len(), 15);
        assert_eq!(dominant_weights(0, -2, 2), vec![GLWeight::zero(0)]);
        assert!(dominant_weights(2, 1, 0).is_empty());
    }

    #[test]
    fn schur_rejects_bad_weights() {
        assert!(matches!(GLWeight::new(vec![0, 1]), Err(Error::NotDominant(_))));
        assert_eq!(
            schur(3, &w(&[1, 0])),
            Err(Error::WeightLength { expected: 3, found: 2 })
        );
    }

    #[test]
    fn symmetry_examples() {
        let s = BlockShape::single(2);
        assert!(is_symmetric(&(&z(&s, 1, 1) + &z(&s, 2, 1)), 1));
        assert!(!is_symmetric(&(&z(&s, 1, 1) - &z(&s, 2, 1)), 1));
        let one = LaurentPoly::one(&s);
        let k = &(&one - &(&z(&s, 1, 1) * &z(&s, 2, -1))) * &(&one - &(&z(&s, 2, 1) * &z(&s, 1, -1)));
        assert!(is_symmetric(&k, 1));
    }

    #[test]
    fn expand_examples() {
        let s = BlockShape::single(2);
        let e = schur_expand(&schur(2, &w(&[2, 0])).unwrap()).unwrap();
        assert_eq!(e, SchurExpansion::basis(&s, vec![w(&[2, 0])]).unwrap());

        let sq = (&z(&s, 1, 1) + &z(&s, 2, 1)).pow(2);
        let e = schur_expand(&sq).unwrap();
        assert_eq!(e.num_terms(), 2);
        assert!(e.coeff(&[w(&[2, 0])]).is_one());
        assert!(e.coeff(&[w(&[1, 1])]).is_one());
        assert_eq!(e.to_string(), "s(2,0) + s(1,1)");
        assert_eq!(e.to_laurent().unwrap(), sq);

        assert_eq!(schur_expand(&(&z(&s, 1, 1) - &z(&s, 2, 1))), Err(Error::NotSymmetric(1)));
    }

    #[test]
    fn expand_keeps_q_in_coefficients() {
        let s = BlockShape::single(2);
        let f = &schur(2, &w(&[1, 0])).unwrap().mul_scalar(&LaurentPoly::q_power(&s, 1)).unwrap()
            - &schur(2, &w(&[0, -1])).unwrap().scale(&rat(3));
        let e = schur_expand(&f).unwrap();
        assert_eq!(e.to_string(), "q^{1/2}*s(1,0) - 3*s(0,-1)");
    }

    #[test]
    fn dual_weight_examples() {
        assert_eq!(dual_weight(&w(&[2, 0])), w(&[0, -2]));
        assert_eq!(dual_weight(&w(&[1, 1])), w(&[-1, -1]));
        assert_eq!(dual_weight(&w(&[0, 0])), w(&[0, 0]));
    }

    #[test]
    fn lr_examples() {
        let s2 = BlockShape::single(2);
        let a = SchurExpansion::basis(&s2, vec![w(&[1, 0])]).unwrap();
        let p = lr_mul(&a, &a).unwrap();
        assert_eq!(p.to_string(), "s(2,0) + s(1,1)");
        assert_eq!(lr_mul(&SchurExpansion::one(&s2), &p).unwrap(), p);

        let s1 = BlockShape::single(1);
        let b = SchurExpansion::basis(&s1, vec![w(&[1])]).unwrap();
        assert_eq!(lr_mul(&b, &b).unwrap(), SchurExpansion::basis(&s1, vec![w(&[2])]).unwrap());
    }

    #[test]
    fn multi_block_expansion_and_display() {
        let shape = BlockShape::from_sizes(&[2, 1]);
        let weights = vec![w(&[1, 0]), w(&[-1])];
        let f = schur_product(&shape, &weights).unwrap();
        let e = schur_expand(&f).unwrap();
        assert_eq!(e, SchurExpansion::basis(&shape, weights).unwrap());
        assert_eq!(e.to_string(), "s[1](1,0)*s[2](-1)");
        assert_eq!(e.dual().to_string(), "s[1](0,-1)*s[2](1)");
    }

    #[test]
    fn unit_recognition() {
        let s = BlockShape::single(2);
        let q = LaurentPoly::q_power(&BlockShape::empty(), 2);
        assert!(SchurExpansion::one(&s).is_unit());
        assert!(SchurExpansion::term(&s, vec![w(&[1, 1])], q.clone()).unwrap().is_unit());
        assert!(!SchurExpansion::basis(&s, vec![w(&[1, 0])]).unwrap().is_unit());
        let two = LaurentPoly::scalar(rat(2));
        assert!(!SchurExpansion::term(&s, vec![w(&[0, 0])], two).unwrap().is_unit());
    }
}
