//! Specialization of the Gram form at maximal ideals of `R(G)`.
//!
//! A rational maximal ideal of `R(∏ GL(m_i))` is a multiset of `m_i` nonzero
//! values per block (the eigenvalues `z_{i,μ}`), equivalently a monic
//! polynomial per block with nonzero constant term. Evaluating the Gram
//! form there gives a matrix over ℚ[q^±½] whose rank over the fraction field
//! decides whether the point carries a simple module.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cellalg::CellDatum;
use crate::error::{Error, Result};
use crate::laurent::{BlockShape, LaurentPoly, Var};
use crate::Rational;

/// Per-block multisets of nonzero rationals; stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DrinfeldPoint {
    shape: BlockShape,
    values: Vec<Vec<Rational>>,
}

impl DrinfeldPoint {
    /// Values for each block of `shape`, in block order.
    pub fn new(shape: &BlockShape, values: Vec<Vec<Rational>>) -> Result<Self> {
        if values.len() != shape.blocks().len() {
            return Err(Error::InvalidPoint(format!(
                "{} value lists for {} blocks",
                values.len(),
                shape.blocks().len()
            )));
        }
        let mut sorted = Vec::with_capacity(values.len());
        for (&(b, m), mut vs) in shape.blocks().iter().zip(values) {
            if vs.len() != m {
                return Err(Error::InvalidPoint(format!(
                    "block {} needs {} values, got {}",
                    b,
                    m,
                    vs.len()
                )));
            }
            if vs.iter().any(Zero::is_zero) {
                return Err(Error::InvalidPoint(format!("zero value in block {}", b)));
            }
            vs.sort();
            sorted.push(vs);
        }
        Ok(DrinfeldPoint { shape: shape.clone(), values: sorted })
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    /// `z_{i,μ} ↦ value`, the multiset of each block read in sorted order.
    pub fn assignment(&self) -> BTreeMap<Var, Rational> {
        let mut out = BTreeMap::new();
        for (&(b, _), vs) in self.shape.blocks().iter().zip(&self.values) {
            for (k, v) in vs.iter().enumerate() {
                out.insert(Var::new(b, k as u32 + 1), v.clone());
            }
        }
        out
    }
}

impl fmt::Display for DrinfeldPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, vs) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            for (j, v) in vs.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", v)?;
            }
        }
        Ok(())
    }
}

/// One monic polynomial per block, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DrinfeldPolynomial {
    shape: BlockShape,
    polys: Vec<Vec<Rational>>,
}

impl DrinfeldPolynomial {
    pub fn new(shape: &BlockShape, polys: Vec<Vec<Rational>>) -> Result<Self> {
        if polys.len() != shape.blocks().len() {
            return Err(Error::InvalidPolynomial(format!(
                "{} polynomials for {} blocks",
                polys.len(),
                shape.blocks().len()
            )));
        }
        let mut out = Vec::with_capacity(polys.len());
        for (&(b, m), mut p) in shape.blocks().iter().zip(polys) {
            while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
                p.pop();
            }
            if p.len() != m + 1 {
                return Err(Error::InvalidPolynomial(format!(
                    "block {} needs degree {}, got {}",
                    b,
                    m,
                    p.len().saturating_sub(1)
                )));
            }
            if !p[m].is_one() {
                return Err(Error::InvalidPolynomial(format!("block {} polynomial is not monic", b)));
            }
            if p[0].is_zero() {
                return Err(Error::InvalidPolynomial(format!("block {} has zero constant term", b)));
            }
            out.push(p);
        }
        Ok(DrinfeldPolynomial { shape: shape.clone(), polys: out })
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    /// Coefficients per block, lowest degree first.
    pub fn coefficients(&self) -> &[Vec<Rational>] {
        &self.polys
    }
}

fn write_univariate(p: &[Rational], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (deg, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        match (first, c.is_negative()) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if deg == 0 {
            write!(f, "{}", abs)?;
            continue;
        }
        if !abs.is_one() {
            write!(f, "{}*", abs)?;
        }
        if deg == 1 {
            f.write_str("u")?;
        } else {
            write!(f, "u^{}", deg)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for DrinfeldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.polys.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write_univariate(p, f)?;
        }
        Ok(())
    }
}

/// The Gram matrix evaluated at a point; entries lie in ℚ[q^±½].
pub fn specialize_gram(d: &CellDatum, p: &DrinfeldPoint) -> Result<Vec<Vec<LaurentPoly>>> {
    if d.shape() != p.shape() {
        return Err(Error::ShapeMismatch(format!(
            "datum {:?} vs point {:?}",
            d.shape().blocks(),
            p.shape().blocks()
        )));
    }
    let values = p.assignment();
    d.labels()
        .iter()
        .map(|b| d.labels().iter().map(|c| d.gram(b, c).evaluate(&values)).collect())
        .collect()
}

/// Rank over the fraction field of ℚ[q^±½], by fraction-free elimination.
pub fn rank_over_fraction_field(matrix: &[Vec<LaurentPoly>]) -> usize {
    let mut rows: Vec<Vec<LaurentPoly>> = matrix.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for k in col..ncols {
                row[k] = &(&pivot_row[col] * &row[k]) - &(&factor * &pivot_row[k]);
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub has_simple: bool,
    pub rank: usize,
}

/// Rank of the specialized Gram matrix; a simple module exists iff it is positive.
pub fn classify_point(d: &CellDatum, p: &DrinfeldPoint) -> Result<Classification> {
    let m = specialize_gram(d, p)?;
    let rank = rank_over_fraction_field(&m);
    Ok(Classification { has_simple: rank > 0, rank })
}

/// Elementary symmetric functions of each block: `∏ (u − a_ν)`.
pub fn point_to_polynomial(p: &DrinfeldPoint) -> DrinfeldPolynomial {
    let polys = p
        .values
        .iter()
        .map(|vs| {
            let mut poly = alloc::vec![Rational::one()];
            for a in vs {
                // multiply by (u - a)
                let mut next = alloc::vec![Rational::zero(); poly.len() + 1];
                for (k, c) in poly.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * a;
                }
                poly = next;
            }
            poly
        })
        .collect();
    DrinfeldPolynomial { shape: p.shape.clone(), polys }
}

const ROOT_SEARCH_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&n| n <= ROOT_SEARCH_LIMIT)
        .ok_or_else(|| Error::InvalidPolynomial(String::from("coefficients too large for rational root search")))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Divides by `(u − r)`, assuming `r` is a root.
fn deflate(p: &[Rational], r: &Rational) -> Vec<Rational> {
    let n = p.len() - 1;
    let mut q = alloc::vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for k in (1..=n).rev() {
        carry = &p[k] + carry * r;
        q[k - 1] = carry.clone();
    }
    q
}

fn rational_root(p: &[Rational]) -> Result<Option<Rational>> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let lead = ints.last().expect("nonconstant polynomial");
    for den in divisors(lead)? {
        for num in divisors(&ints[0])? {
            for sign in [1i64, -1] {
                let r = Rational::new(BigInt::from(num) * sign, BigInt::from(den));
                if eval(p, &r).is_zero() {
                    return Ok(Some(r));
                }
            }
        }
    }
    Ok(None)
}

/// Root multisets of rational-split Drinfeld polynomials.
pub fn polynomial_to_point(poly: &DrinfeldPolynomial) -> Result<DrinfeldPoint> {
    let mut values = Vec::with_capacity(poly.polys.len());
    for p in &poly.polys {
        let mut rest = p.clone();
        let mut roots = Vec::new();
        while rest.len() > 1 {
            match rational_root(&rest)? {
                Some(r) => {
                    rest = deflate(&rest, &r);
                    roots.push(r);
                }
                None => {
                    let mut text = String::new();
                    let _ = fmt::write(&mut text, format_args!("{}", Univariate(&rest)));
                    return Err(Error::NoRationalRoots(text));
                }
            }
        }
        values.push(roots);
    }
    DrinfeldPoint::new(&poly.shape, values)
}

struct Univariate<'a>(&'a [Rational]);

impl fmt::Display for Univariate<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellalg::WeightData;
    use crate::laurent::Monomial;
    use crate::rat;
    use alloc::string::ToString;
    use alloc::vec;

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn datum(shape: &BlockShape, labels: &[&str], gram: Vec<((&str, &str), LaurentPoly)>, unit: Option<&str>) -> CellDatum {
        let wd = WeightData::new(vec![vec![rat(1)]], vec![0], labels.iter().map(|l| (l.to_string(), vec![0]))).unwrap();
        CellDatum::new(
            shape.clone(),
            labels.iter().map(|l| l.to_string()).collect(),
            wd,
            gram.into_iter().map(|((b, c), v)| ((b.to_string(), c.to_string()), v)),
            unit.map(|u| u.to_string()),
        )
        .unwrap()
    }

    #[test]
    fn unit_datum_classification() {
        let shape = BlockShape::single(1);
        let d = datum(&shape, &["b0"], vec![(("b0", "b0"), LaurentPoly::one(&shape))], Some("b0"));
        let p = DrinfeldPoint::new(&shape, vec![rats(&[7])]).unwrap();
        assert_eq!(specialize_gram(&d, &p).unwrap(), vec![vec![LaurentPoly::scalar(rat(1))]]);
        assert_eq!(classify_point(&d, &p).unwrap(), Classification { has_simple: true, rank: 1 });
    }

    #[test]
    fn specialization_examples() {
        let shape = BlockShape::single(2);
        let z1 = LaurentPoly::var(&shape, Var::new(1, 1)).unwrap();
        let z2 = LaurentPoly::var(&shape, Var::new(1, 2)).unwrap();
        let d = datum(&shape, &["b"], vec![(("b", "b"), &z1 + &z2)], None);
        let a = DrinfeldPoint::new(&shape, vec![rats(&[2, 3])]).unwrap();
        let b = DrinfeldPoint::new(&shape, vec![rats(&[3, 2])]).unwrap();
        assert_eq!(specialize_gram(&d, &a).unwrap(), vec![vec![LaurentPoly::scalar(rat(5))]]);
        assert_eq!(specialize_gram(&d, &a).unwrap(), specialize_gram(&d, &b).unwrap());
    }

    #[test]
    fn rank_one_by_hand() {
        let shape = BlockShape::single(1);
        let z = LaurentPoly::var(&shape, Var::new(1, 1)).unwrap();
        let d = datum(
            &shape,
            &["a", "b"],
            vec![
                (("a", "a"), LaurentPoly::one(&shape)),
                (("a", "b"), z.clone()),
                (("b", "a"), z.clone()),
                (("b", "b"), z.pow(2)),
            ],
            None,
        );
        let p = DrinfeldPoint::new(&shape, vec![rats(&[5])]).unwrap();
        let m = specialize_gram(&d, &p).unwrap();
        assert_eq!(m[0][1], LaurentPoly::scalar(rat(5)));
        assert_eq!(m[1][1], LaurentPoly::scalar(rat(25)));
        assert_eq!(classify_point(&d, &p).unwrap(), Classification { has_simple: true, rank: 1 });
    }

    #[test]
    fn zero_gram_has_no_simple() {
        let shape = BlockShape::single(1);
        let d = datum(&shape, &["a", "b"], vec![], None);
        let p = DrinfeldPoint::new(&shape, vec![rats(&[2])]).unwrap();
        assert_eq!(classify_point(&d, &p).unwrap(), Classification { has_simple: false, rank: 0 });
    }

    #[test]
    fn rank_is_taken_over_the_fraction_field() {
        let s = BlockShape::empty();
        let q = LaurentPoly::q_power(&s, 2);
        let one = LaurentPoly::one(&s);
        // [[1, q], [q, q^2]] has rank 1; [[1, q], [q, 1]] has rank 2 (det 1 - q^2 ≠ 0)
        let singular = vec![vec![one.clone(), q.clone()], vec![q.clone(), &q * &q]];
        assert_eq!(rank_over_fraction_field(&singular), 1);
        let regular = vec![vec![one.clone(), q.clone()], vec![q.clone(), one.clone()]];
        assert_eq!(rank_over_fraction_field(&regular), 2);
        let half = LaurentPoly::from_monomial(&s, Monomial::q_power(1), rat(1)).unwrap();
        let m = vec![vec![half, one.clone()], vec![one, q]];
        assert_eq!(rank_over_fraction_field(&m), 2);
    }

    #[test]
    fn point_polynomial_examples() {
        let s1 = BlockShape::single(1);
        let s2 = BlockShape::single(2);
        let p = point_to_polynomial(&DrinfeldPoint::new(&s1, vec![rats(&[2])]).unwrap());
        assert_eq!(p.to_string(), "u - 2");
        let p = point_to_polynomial(&DrinfeldPoint::new(&s2, vec![rats(&[1, 1])]).unwrap());
        assert_eq!(p.to_string(), "u^2 - 2*u + 1");
        let p = point_to_polynomial(&DrinfeldPoint::new(&s2, vec![rats(&[2, 3])]).unwrap());
        assert_eq!(p.coefficients(), &[rats(&[6, -5, 1])]);

        let back = polynomial_to_point(&DrinfeldPolynomial::new(&s2, vec![rats(&[6, -5, 1])]).unwrap()).unwrap();
        assert_eq!(back, DrinfeldPoint::new(&s2, vec![rats(&[2, 3])]).unwrap());
        let lin = polynomial_to_point(&DrinfeldPolynomial::new(&s1, vec![rats(&[-2, 1])]).unwrap()).unwrap();
        assert_eq!(lin, DrinfeldPoint::new(&s1, vec![rats(&[2])]).unwrap());

        let irreducible = DrinfeldPolynomial::new(&s2, vec![rats(&[1, 0, 1])]).unwrap();
        assert_eq!(polynomial_to_point(&irreducible), Err(Error::NoRationalRoots("u^2 + 1".into())));
    }

    #[test]
    fn invalid_points_and_polynomials() {
        let s2 = BlockShape::single(2);
        assert!(DrinfeldPoint::new(&s2, vec![rats(&[1, 0])]).is_err());
        assert!(DrinfeldPoint::new(&s2, vec![rats(&[1])]).is_err());
        assert!(DrinfeldPolynomial::new(&s2, vec![rats(&[1, 1])]).is_err());
        assert!(DrinfeldPolynomial::new(&s2, vec![rats(&[0, 1, 1])]).is_err());
        assert!(DrinfeldPolynomial::new(&s2, vec![rats(&[1, 1, 2])]).is_err());
    }

    #[test]
    fn rational_roots_with_fractions() {
        let s = BlockShape::single(3);
        let point = DrinfeldPoint::new(&s, vec![vec![crate::ratio(-3, 4), crate::ratio(5, 2), crate::ratio(5, 2)]]).unwrap();
        let poly = point_to_polynomial(&point);
        assert_eq!(polynomial_to_point(&poly).unwrap(), point);
    }
}
