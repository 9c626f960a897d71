//! Constant-term inner products.
//!
//! For symmetric `f`, `g` in the blocks of a shape,
//!
//! ```text
//! ⟨f, g⟩ = ∏_i 1/m_i! · [ f(z) · g(z⁻¹) · ∏_i ∏_{μ≠ν} (1 − z_{i,μ} z_{i,ν}⁻¹) ]₁
//! ```
//!
//! Schur characters are orthonormal for this pairing, which gives a second,
//! independent route to Schur expansions ([`schur_projection`]).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{BlockShape, LaurentPoly, Monomial, Var};
use crate::symfunc::{dominant_weights, is_symmetric, schur_product, GLWeight, SchurExpansion};
use crate::Rational;

/// `∏_{μ≠ν} (1 − z_μ z_ν⁻¹)` in the variables of one block.
fn kernel_for(shape: &BlockShape, vars: &[Var]) -> LaurentPoly {
    let one = LaurentPoly::one(shape);
    let mut acc = one.clone();
    for &a in vars {
        for &b in vars {
            if a != b {
                let ratio = LaurentPoly::from_monomial(
                    shape,
                    Monomial::new([(a, 1), (b, -1)], 0),
                    Rational::from_integer(1.into()),
                )
                .expect("variables belong to the shape");
                acc = &acc * &(&one - &ratio);
            }
        }
    }
    acc
}

/// Macdonald kernel `∏_{μ≠ν} (1 − z_μ z_ν⁻¹)` for `m` variables.
pub fn macdonald_kernel(m: usize) -> LaurentPoly {
    let shape = BlockShape::single(m);
    kernel_for(&shape, &shape.block_vars(1))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// Precomputed kernel and normalization for one block shape.
#[derive(Clone, Debug)]
pub struct PairingContext {
    shape: BlockShape,
    kernel: LaurentPoly,
    norm: Rational,
}

impl PairingContext {
    pub fn new(shape: &BlockShape) -> Self {
        let mut kernel = LaurentPoly::one(shape);
        let mut denom = BigInt::from(1);
        for &(b, m) in shape.blocks() {
            kernel = &kernel * &kernel_for(shape, &shape.block_vars(b));
            denom *= factorial(m);
        }
        PairingContext {
            shape: shape.clone(),
            kernel,
            norm: Rational::new(1.into(), denom),
        }
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    /// Product of the kernels of all blocks.
    pub fn kernel(&self) -> &LaurentPoly {
        &self.kernel
    }

    fn check(&self, f: &LaurentPoly) -> Result<()> {
        if f.shape() != &self.shape {
            return Err(Error::ShapeMismatch(alloc::format!(
                "{:?} vs context {:?}",
                f.shape().blocks(),
                self.shape.blocks()
            )));
        }
        Ok(())
    }

    fn check_symmetric(&self, f: &LaurentPoly) -> Result<()> {
        self.check(f)?;
        for &(b, _) in self.shape.blocks() {
            if !is_symmetric(f, b) {
                return Err(Error::NotSymmetric(b));
            }
        }
        Ok(())
    }

    /// `[F · ∏ 1/m_i! · ∏ kernel]₁` for a precomputed value `F` of the
    /// Laurent-valued form. Returns an element of ℚ[q^±½].
    pub fn scalar_pairing(&self, value: &LaurentPoly) -> Result<LaurentPoly> {
        self.check(value)?;
        let ct = value.constant_term_of_product(&self.kernel)?;
        ct.scale(&self.norm).into_scalar()
    }

    /// The normalized inner product `⟨f, g⟩`, bar-twisted in the second slot.
    pub fn inner(&self, f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_symmetric(f)?;
        self.check_symmetric(g)?;
        self.inner_unchecked(f, g)
    }

    fn inner_unchecked(&self, f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
        let weighted = &g.bar() * &self.kernel;
        let ct = f.constant_term_of_product(&weighted)?;
        ct.scale(&self.norm).into_scalar()
    }

    /// Expansion of a symmetric `f` with coefficients `⟨f, s_w⟩`.
    ///
    /// Candidate weights in each block have parts within the exponent range
    /// of `f` in that block and a total equal to one of the block degrees
    /// occurring in `f`; every Schur term of `f` lies in that set.
    pub fn project(&self, f: &LaurentPoly) -> Result<SchurExpansion> {
        self.check_symmetric(f)?;
        let mut per_block: Vec<Vec<GLWeight>> = Vec::new();
        for &(b, m) in self.shape.blocks() {
            let vars = self.shape.block_vars(b);
            let mut lo = i32::MAX;
            let mut hi = i32::MIN;
            let mut degrees = BTreeSet::new();
            for (mono, _) in f.terms() {
                let exps: Vec<i32> = vars.iter().map(|&v| mono.z_exponent(v)).collect();
                lo = lo.min(exps.iter().copied().min().unwrap_or(0));
                hi = hi.max(exps.iter().copied().max().unwrap_or(0));
                degrees.insert(exps.iter().sum::<i32>());
            }
            per_block.push(
                dominant_weights(m, lo, hi)
                    .into_iter()
                    .filter(|w| degrees.contains(&w.parts().iter().sum::<i32>()))
                    .collect(),
            );
        }
        let mut out = SchurExpansion::zero(&self.shape);
        if f.is_zero() {
            return Ok(out);
        }
        for weights in cartesian(&per_block) {
            let s = schur_product(&self.shape, &weights)?;
            let c = self.inner_unchecked(f, &s)?;
            if !c.is_zero() {
                out = out.checked_add(&SchurExpansion::term(&self.shape, weights, c)?)?;
            }
        }
        Ok(out)
    }
}

fn cartesian(lists: &[Vec<GLWeight>]) -> Vec<Vec<GLWeight>> {
    let mut out: Vec<Vec<GLWeight>> = alloc::vec![Vec::new()];
    for list in lists {
        out = out
            .iter()
            .flat_map(|prefix| {
                list.iter().map(move |w| {
                    let mut p = prefix.clone();
                    p.push(w.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// `⟨f, g⟩` over the context's shape.
pub fn sf_inner(f: &LaurentPoly, g: &LaurentPoly, ctx: &PairingContext) -> Result<LaurentPoly> {
    ctx.inner(f, g)
}

/// Turns a value of the Laurent-valued form into the scalar form.
pub fn scalar_pairing(value: &LaurentPoly, ctx: &PairingContext) -> Result<LaurentPoly> {
    ctx.scalar_pairing(value)
}

/// Schur expansion through inner products.
pub fn schur_projection(f: &LaurentPoly, ctx: &PairingContext) -> Result<SchurExpansion> {
    ctx.project(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::symfunc::{schur, schur_expand};
    use alloc::vec;

    fn w(parts: &[i32]) -> GLWeight {
        GLWeight::new(parts.to_vec()).unwrap()
    }

    fn z(shape: &BlockShape, i: u32, e: i32) -> LaurentPoly {
        LaurentPoly::from_monomial(shape, Monomial::var(Var::new(1, i), e), rat(1)).unwrap()
    }

    /// Brute-force oracle: expand `∏ (1 − z_μ/z_ν)` by summing over all
    /// subsets of the factor list, then read off the constant term.
    fn kernel_constant_term_by_subsets(m: usize) -> i64 {
        let pairs: Vec<(usize, usize)> =
            (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        let mut total = 0i64;
        for mask in 0u32..(1 << pairs.len()) {
            let mut exps = vec![0i32; m];
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    exps[a] += 1;
                    exps[b] -= 1;
                }
            }
            if exps.iter().all(|&e| e == 0) {
                total += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
        total
    }

    #[test]
    fn kernel_examples() {
        assert!(macdonald_kernel(1).is_one());
        let s = BlockShape::single(2);
        let k2 = &(&LaurentPoly::constant(&s, rat(2)) - &(&z(&s, 1, 1) * &z(&s, 2, -1)))
            - &(&z(&s, 2, 1) * &z(&s, 1, -1));
        assert_eq!(macdonald_kernel(2), k2);
        assert_eq!(macdonald_kernel(3).constant_term(), LaurentPoly::constant(&BlockShape::single(3), rat(6)));
    }

    #[test]
    fn kernel_constant_term_matches_subset_oracle() {
        // frozen oracle values: 1, 2, 6, 24
        let frozen = [1i64, 2, 6, 24];
        for m in 1..=4 {
            assert_eq!(kernel_constant_term_by_subsets(m), frozen[m - 1]);
            let ct = macdonald_kernel(m).constant_term();
            assert_eq!(ct, LaurentPoly::constant(&BlockShape::single(m), rat(frozen[m - 1])));
        }
    }

    #[test]
    fn inner_examples() {
        let one = BlockShape::single(1);
        let ctx1 = PairingContext::new(&one);
        assert!(ctx1.inner(&LaurentPoly::one(&one), &LaurentPoly::one(&one)).unwrap().is_one());

        let ctx = PairingContext::new(&BlockShape::single(2));
        let s10 = schur(2, &w(&[1, 0])).unwrap();
        let s20 = schur(2, &w(&[2, 0])).unwrap();
        let s11 = schur(2, &w(&[1, 1])).unwrap();
        assert!(ctx.inner(&s10, &s10).unwrap().is_one());
        assert!(ctx.inner(&s20, &s11).unwrap().is_zero());
    }

    #[test]
    fn inner_rejects_asymmetric() {
        let s = BlockShape::single(2);
        let ctx = PairingContext::new(&s);
        let f = &z(&s, 1, 1) - &z(&s, 2, 1);
        assert_eq!(ctx.inner(&f, &LaurentPoly::one(&s)), Err(Error::NotSymmetric(1)));
        assert_eq!(ctx.project(&f), Err(Error::NotSymmetric(1)));
    }

    #[test]
    fn scalar_pairing_examples() {
        let s = BlockShape::single(1);
        let ctx = PairingContext::new(&s);
        assert!(ctx.scalar_pairing(&LaurentPoly::one(&s)).unwrap().is_one());
        let zz = &z(&s, 1, 1) * &z(&s, 1, 1).bar();
        assert!(ctx.scalar_pairing(&zz).unwrap().is_one());
        assert!(ctx.scalar_pairing(&z(&s, 1, 1)).unwrap().is_zero());
    }

    #[test]
    fn projection_examples() {
        let s = BlockShape::single(2);
        let ctx = PairingContext::new(&s);
        let s20 = schur(2, &w(&[2, 0])).unwrap();
        assert_eq!(ctx.project(&s20).unwrap(), SchurExpansion::basis(&s, vec![w(&[2, 0])]).unwrap());

        let sq = (&z(&s, 1, 1) + &z(&s, 2, 1)).pow(2);
        assert_eq!(ctx.project(&sq).unwrap(), schur_expand(&sq).unwrap());

        let neg = &z(&s, 1, -1) + &z(&s, 2, -1);
        assert_eq!(ctx.project(&neg).unwrap(), SchurExpansion::basis(&s, vec![w(&[0, -1])]).unwrap());
    }

    #[test]
    fn projection_multi_block_with_q() {
        let shape = BlockShape::from_sizes(&[2, 1]);
        let ctx = PairingContext::new(&shape);
        let a = schur_product(&shape, &[w(&[1, -1]), w(&[2])]).unwrap();
        let b = schur_product(&shape, &[w(&[0, 0]), w(&[-1])]).unwrap();
        let f = &a.mul_scalar(&LaurentPoly::q_power(&BlockShape::empty(), 3)).unwrap() + &b.scale(&rat(-4));
        assert_eq!(ctx.project(&f).unwrap(), schur_expand(&f).unwrap());
    }
}
