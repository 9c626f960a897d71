//! Seeded random data for property checks and sweeps.
//!
//! Everything here is deterministic given the seed.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cellalg::{CellDatum, CellElement, Label, WeightData};
use crate::laurent::{BlockShape, LaurentPoly};
use crate::simples::DrinfeldPoint;
use crate::symfunc::{GLWeight, SchurExpansion};
use crate::{rat, Rational};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform weight of length `m` with parts in `-bound..=bound`.
pub fn random_weight<R: Rng>(rng: &mut R, m: usize, bound: i32) -> GLWeight {
    let mut parts: Vec<i32> = (0..m).map(|_| rng.random_range(-bound..=bound)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    GLWeight::new(parts).expect("sorted parts are dominant")
}

fn random_weights<R: Rng>(rng: &mut R, shape: &BlockShape, bound: i32) -> Vec<GLWeight> {
    shape.blocks().iter().map(|&(_, m)| random_weight(rng, m, bound)).collect()
}

/// `±c · q^{k/2}` with `c ∈ 1..=3` and `|k| ≤ 2`.
fn random_scalar<R: Rng>(rng: &mut R) -> LaurentPoly {
    let c = rng.random_range(1..=3i64) * if rng.random_bool(0.5) { 1 } else { -1 };
    let k = rng.random_range(-2..=2);
    LaurentPoly::q_power(&BlockShape::empty(), k).scale(&rat(c))
}

/// Random element of `R(G)[q^±½]` with at most `max_terms` Schur terms.
pub fn random_expansion<R: Rng>(rng: &mut R, shape: &BlockShape, bound: i32, max_terms: usize) -> SchurExpansion {
    let n = rng.random_range(1..=max_terms.max(1));
    let mut acc = SchurExpansion::zero(shape);
    for _ in 0..n {
        let t = SchurExpansion::term(shape, random_weights(rng, shape, bound), random_scalar(rng))
            .expect("weights match the shape");
        acc = acc.checked_add(&t).expect("same shape");
    }
    acc
}

/// Random block-symmetric Laurent polynomial (a combination of Schur products).
pub fn random_symmetric<R: Rng>(rng: &mut R, shape: &BlockShape, bound: i32, max_terms: usize) -> LaurentPoly {
    random_expansion(rng, shape, bound, max_terms)
        .to_laurent()
        .expect("weights match the shape")
}

/// Random element with up to `max_terms` triples, Schur parts in `-bound..=bound`.
pub fn random_element<R: Rng>(rng: &mut R, d: &Arc<CellDatum>, max_terms: usize, bound: i32) -> CellElement {
    let labels = d.labels();
    let mut acc = CellElement::zero(d);
    if labels.is_empty() {
        return acc;
    }
    let n = rng.random_range(1..=max_terms.max(1));
    for _ in 0..n {
        let b = &labels[rng.random_range(0..labels.len())];
        let c = &labels[rng.random_range(0..labels.len())];
        let s = random_expansion(rng, d.shape(), bound, 2);
        let t = CellElement::basis(d, b, s, c).expect("labels come from the datum");
        acc = acc.checked_add(&t).expect("same datum");
    }
    acc
}

/// Nonzero rational `±p/r` with `p ∈ 1..=9`, `r ∈ 1..=4`.
pub fn random_nonzero<R: Rng>(rng: &mut R) -> Rational {
    let p = rng.random_range(1..=9i64) * if rng.random_bool(0.5) { 1 } else { -1 };
    let r = rng.random_range(1..=4i64);
    crate::ratio(p, r)
}

pub fn random_point<R: Rng>(rng: &mut R, shape: &BlockShape) -> DrinfeldPoint {
    let values = shape
        .blocks()
        .iter()
        .map(|&(_, m)| (0..m).map(|_| random_nonzero(rng)).collect())
        .collect();
    DrinfeldPoint::new(shape, values).expect("values are nonzero and sized per block")
}

/// Size limits for [`random_datum`].
#[derive(Clone, Copy, Debug)]
pub struct DatumParams {
    pub max_labels: usize,
    pub max_blocks: usize,
    pub max_block_size: usize,
    pub with_unit: bool,
}

impl Default for DatumParams {
    fn default() -> Self {
        DatumParams { max_labels: 3, max_blocks: 2, max_block_size: 2, with_unit: true }
    }
}

/// A datum satisfying every loader invariant and `bar(Ψ(b, b′)) = Ψ(b′, b)`.
///
/// With `with_unit`, label `b0` has weight zero and `Ψ(b0, b0) = 1`.
pub fn random_datum<R: Rng>(rng: &mut R, params: DatumParams) -> CellDatum {
    let nblocks = rng.random_range(1..=params.max_blocks.max(1));
    let sizes: Vec<usize> = (0..nblocks)
        .map(|_| rng.random_range(1..=params.max_block_size.max(1)))
        .collect();
    let shape = BlockShape::from_sizes(&sizes);

    let rank = rng.random_range(1..=2usize);
    let lower: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..=i).map(|_| rng.random_range(-2..=2)).collect())
        .collect();
    let form: Vec<Vec<Rational>> = (0..rank)
        .map(|i| (0..rank).map(|j| rat(lower[i.max(j)][i.min(j)])).collect())
        .collect();
    let lambda: Vec<i64> = (0..rank).map(|_| rng.random_range(0..=2)).collect();

    let nlabels = rng.random_range(1..=params.max_labels.max(1));
    let labels: Vec<Label> = (0..nlabels).map(|k| format!("b{}", k)).collect();
    // at most two weight classes
    let other: Vec<i64> = (0..rank).map(|_| rng.random_range(-1..=1)).collect();
    let weights: Vec<Vec<i64>> = (0..nlabels)
        .map(|k| {
            if (k == 0 && params.with_unit) || rng.random_bool(0.6) {
                alloc::vec![0; rank]
            } else {
                other.clone()
            }
        })
        .collect();

    let mut gram: Vec<((Label, Label), LaurentPoly)> = Vec::new();
    for i in 0..nlabels {
        for j in i..nlabels {
            if weights[i] != weights[j] {
                continue;
            }
            if i == 0 && j == 0 && params.with_unit {
                gram.push(((labels[0].clone(), labels[0].clone()), LaurentPoly::one(&shape)));
                continue;
            }
            if rng.random_bool(0.25) {
                continue;
            }
            let p = random_symmetric(rng, &shape, 1, 2);
            if i == j {
                gram.push(((labels[i].clone(), labels[i].clone()), &p + &p.bar()));
            } else {
                gram.push(((labels[i].clone(), labels[j].clone()), p.bar()));
                gram.push(((labels[j].clone(), labels[i].clone()), p));
            }
        }
    }

    let wd = WeightData::new(form, lambda, labels.iter().cloned().zip(weights)).expect("well-formed weights");
    let unit = params.with_unit.then(|| labels[0].clone());
    CellDatum::new(shape, labels, wd, gram, unit).expect("generated datum satisfies the invariants")
}
