//! Dominant weights, the trace-zero coordinate map, and the
//! tensor-invariant dimension oracle.
//!
//! Weights are always stored normalized with last entry zero; trace-zero
//! points are exact rationals. The invariant dimension reduces an s-fold
//! invariant space to a single unbounded Littlewood-Richardson multiplicity
//! after stripping full columns, so no case analysis on determinant twists
//! is needed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ratlinalg::{primitive, Rational};
use crate::schubert::{lr_coefficient, schur_product_terms};

/// An irreducible SL(n) representation label: weakly decreasing integers
/// normalized so the last entry is zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    entries: Vec<u32>,
}

impl DominantWeight {
    /// Accepts any weakly decreasing integer vector and normalizes it by
    /// subtracting the last entry, which does not change the SL(n) class.
    pub fn new(entries: &[i64]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotWeaklyDecreasing(entries.to_vec()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(entries.to_vec()));
        }
        let last = entries[entries.len() - 1];
        let entries = entries
            .iter()
            .map(|&e| u32::try_from(e - last).map_err(|_| Error::Overflow("weight entry")))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Self { entries })
    }

    pub fn zero(n: u32) -> Self {
        Self {
            entries: vec![0; n as usize],
        }
    }

    /// The fundamental weight `omega_b = (1^b, 0^(n-b))`, `1 <= b <= n-1`.
    pub fn fundamental(n: u32, b: u32) -> Result<Self> {
        if b == 0 || b >= n {
            return Err(Error::DimensionMismatch(format!(
                "fundamental weight index {b} outside 1..={}",
                n - 1
            )));
        }
        let entries = (0..n).map(|a| u32::from(a < b)).collect();
        Ok(Self { entries })
    }

    pub fn n(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// `|lambda|`, the number of boxes of the associated partition.
    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn scaled(&self, m: u32) -> Self {
        Self {
            entries: self.entries.iter().map(|&e| e * m).collect(),
        }
    }

    /// The entries as a partition with trailing zeros dropped.
    pub fn to_partition(&self) -> Vec<u32> {
        let len = self
            .entries
            .iter()
            .rposition(|&e| e != 0)
            .map_or(0, |i| i + 1);
        self.entries[..len].to_vec()
    }
}

impl std::fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A rational vector with exact zero sum; a point of the trace-zero Cartan
/// space. Dominance (weak decrease) is a property, not an invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaPoint {
    entries: Vec<Rational>,
}

impl KappaPoint {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch("empty kappa point".into()));
        }
        let total: Rational = entries.iter().sum();
        if !total.is_zero() {
            return Err(Error::NonZeroTrace);
        }
        Ok(Self { entries })
    }

    pub fn zero(n: u32) -> Self {
        Self {
            entries: vec![Rational::zero(); n as usize],
        }
    }

    pub fn n(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `x^(a)` with `a` in `1..=n`.
    pub fn entry(&self, a: u32) -> &Rational {
        &self.entries[(a - 1) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Whether the entries are weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "kappa points of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { entries })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }
}

/// An s-tuple of trace-zero points sharing the same n; the ambient
/// coordinates of the eigencone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaTuple {
    points: Vec<KappaPoint>,
}

impl KappaTuple {
    pub fn new(points: Vec<KappaPoint>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::DimensionMismatch("empty kappa tuple".into()));
        };
        let n = first.n();
        if points.iter().any(|p| p.n() != n) {
            return Err(Error::DimensionMismatch(
                "kappa tuple components have mixed sizes".into(),
            ));
        }
        Ok(Self { points })
    }

    pub fn zero(n: u32, s: u32) -> Self {
        Self {
            points: vec![KappaPoint::zero(n); s as usize],
        }
    }

    pub fn from_weights(weights: &[DominantWeight]) -> Result<Self> {
        let points = weights.iter().map(kappa).collect();
        Self::new(points)
    }

    pub fn n(&self) -> u32 {
        self.points[0].n()
    }

    pub fn s(&self) -> u32 {
        self.points.len() as u32
    }

    pub fn points(&self) -> &[KappaPoint] {
        &self.points
    }

    /// The i-th coordinate, `i` in `1..=s`.
    pub fn point(&self, i: usize) -> &KappaPoint {
        &self.points[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.points.iter().all(KappaPoint::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.s() != other.s() {
            return Err(Error::DimensionMismatch(
                "kappa tuples of different lengths".into(),
            ));
        }
        let points = self
            .points
            .iter()
            .zip(&other.points)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            points: self.points.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Index of the first non-dominant coordinate (1-based), if any.
    pub fn first_non_dominant(&self) -> Option<usize> {
        self.points
            .iter()
            .position(|p| !p.is_dominant())
            .map(|i| i + 1)
    }
}

/// The trace-zero coordinates of a weight: `x^(a) = lambda^(a) - |lambda|/n`.
pub fn kappa(weight: &DominantWeight) -> KappaPoint {
    let n = weight.n();
    let shift = Rational::new(BigInt::from(weight.size()), BigInt::from(n));
    let entries = weight
        .entries
        .iter()
        .map(|&e| Rational::from_integer(BigInt::from(e)) - &shift)
        .collect();
    KappaPoint { entries }
}

/// Inverts `kappa` up to positive scale: the unique primitive integral
/// dominant weight whose trace-zero coordinates are a positive rational
/// multiple of `x`, together with the multiplier `t` such that
/// `kappa(weight) = t * x`. The zero point maps to the zero weight with
/// multiplier one.
pub fn weight_of_kappa(x: &KappaPoint) -> Result<(DominantWeight, Rational)> {
    if !x.is_dominant() {
        return Err(Error::NonDominant { coordinate: 1 });
    }
    if x.is_zero() {
        return Ok((DominantWeight::zero(x.n()), Rational::from_integer(1.into())));
    }
    // Successive differences determine a trace-zero vector; make them
    // integral and coprime, then rebuild the weight from the right.
    let gaps: Vec<Rational> = x
        .entries
        .windows(2)
        .map(|w| &w[0] - &w[1])
        .collect();
    let scaled = primitive(&gaps)?;
    let mut entries = vec![0i64; x.n() as usize];
    for a in (0..scaled.len()).rev() {
        let gap = scaled[a]
            .to_i64()
            .ok_or(Error::Overflow("weight reconstruction"))?;
        entries[a] = entries[a + 1] + gap;
    }
    let weight = DominantWeight::new(&entries)?;
    // kappa(weight) and x have proportional gaps; the multiplier is the
    // ratio along any nonzero gap.
    let k = gaps
        .iter()
        .position(|g| !g.is_zero())
        .expect("nonzero dominant point has a nonzero gap");
    let t = Rational::from_integer(scaled[k].clone()) / &gaps[k];
    Ok((weight, t))
}

/// Coefficients of the expansion into fundamental weights:
/// `lambda = sum_b c_b omega_b` with `c_b = lambda^(b) - lambda^(b+1)`.
/// Zero coefficients are omitted.
pub fn fundamental_decomposition(weight: &DominantWeight) -> BTreeMap<u32, u32> {
    let mut out = BTreeMap::new();
    for (b, w) in (1..).zip(weight.entries.windows(2)) {
        if w[0] > w[1] {
            out.insert(b, w[0] - w[1]);
        }
    }
    out
}

/// The dual representation label: `lambda*^(a) = lambda^(1) - lambda^(n+1-a)`.
pub fn dual_weight(weight: &DominantWeight) -> DominantWeight {
    let first = weight.entries[0];
    let entries = weight.entries.iter().rev().map(|&e| first - e).collect();
    DominantWeight { entries }
}

/// Dimension of the SL(n)-invariant subspace of the tensor product of the
/// given irreducibles: the multiplicity, in the product of the first s-1
/// factors, of the unique partition of the right total size congruent to the
/// dual of the last factor modulo full columns. Returns 0 when the size
/// obstruction fails.
pub fn invariant_dimension(weights: &[DominantWeight]) -> Result<u64> {
    let Some(first) = weights.first() else {
        return Err(Error::DimensionMismatch("empty weight tuple".into()));
    };
    let n = first.n();
    if weights.iter().any(|w| w.n() != n) {
        return Err(Error::DimensionMismatch(
            "weights have mixed ranks".into(),
        ));
    }
    if weights.len() == 1 {
        return Ok(u64::from(first.is_zero()));
    }
    let total: u64 = weights.iter().map(DominantWeight::size).sum();
    if !total.is_multiple_of(u64::from(n)) {
        return Ok(0);
    }
    let s = weights.len();
    let last = &weights[s - 1];
    let columns = total / u64::from(n);
    // Pairing target: dual of the last factor, padded by full columns so
    // the total size matches the product of the remaining factors.
    let Some(pad) = columns.checked_sub(u64::from(last.entries[0])) else {
        return Ok(0);
    };
    let pad = u32::try_from(pad).map_err(|_| Error::Overflow("column padding"))?;
    let target: Vec<u32> = dual_weight(last)
        .entries
        .iter()
        .map(|&e| e + pad)
        .collect();

    // Expand all but the final lefthand factor, then extract a single
    // Littlewood-Richardson multiplicity per surviving term.
    let mut product: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    if s == 2 {
        product.insert(Vec::new(), 1);
    } else {
        product.insert(weights[0].to_partition(), 1);
        for weight in &weights[1..s - 2] {
            let q = weight.to_partition();
            let mut next: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for (shape, c) in &product {
                for (grown, lr) in schur_product_terms(shape, &q, n as usize, None) {
                    *next.entry(grown).or_insert(0) += c * lr;
                }
            }
            product = next;
        }
    }
    let pairing = weights[s - 2].to_partition();
    let mut dim = 0u64;
    for (shape, c) in &product {
        dim += c * lr_coefficient(&target, shape, &pairing);
    }
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlinalg::{int, rat};

    fn weight(entries: &[i64]) -> DominantWeight {
        DominantWeight::new(entries).unwrap()
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(
            kappa(&weight(&[2, 1, 1, 0])).entries(),
            &[int(1), int(0), int(0), int(-1)]
        );
        assert_eq!(
            kappa(&weight(&[1, 1, 0, 0])).entries(),
            &[rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2)]
        );
        assert!(kappa(&DominantWeight::zero(5)).is_zero());
    }

    #[test]
    fn weight_normalization() {
        assert_eq!(weight(&[3, 2, 1]).entries(), &[2, 1, 0]);
        assert_eq!(weight(&[0, -1, -2]).entries(), &[2, 1, 0]);
        assert!(DominantWeight::new(&[1, 2]).is_err());
        assert!(DominantWeight::new(&[]).is_err());
    }

    #[test]
    fn weight_of_kappa_inverts_kappa() {
        let x = KappaPoint::new(vec![int(1), int(0), int(0), int(-1)]).unwrap();
        let (w, t) = weight_of_kappa(&x).unwrap();
        assert_eq!(w, weight(&[2, 1, 1, 0]));
        assert_eq!(t, int(1));

        let x = KappaPoint::new(vec![rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2)]).unwrap();
        let (w, t) = weight_of_kappa(&x).unwrap();
        assert_eq!(w, weight(&[1, 1, 0, 0]));
        assert_eq!(t, int(1));

        // Doubling the point halves the multiplier.
        let x = KappaPoint::new(vec![int(1), int(1), int(-1), int(-1)]).unwrap();
        let (w, t) = weight_of_kappa(&x).unwrap();
        assert_eq!(w, weight(&[1, 1, 0, 0]));
        assert_eq!(t, rat(1, 2));

        let (w, t) = weight_of_kappa(&KappaPoint::zero(3)).unwrap();
        assert_eq!(w, DominantWeight::zero(3));
        assert_eq!(t, int(1));

        let x = KappaPoint::new(vec![int(-1), int(1), int(0)]).unwrap();
        assert!(weight_of_kappa(&x).is_err());
    }

    #[test]
    fn kappa_round_trip_is_positive_multiple() {
        for entries in [
            vec![5, 3, 3, 1, 0],
            vec![2, 2, 2, 0, 0],
            vec![7, 1, 0, 0, 0],
        ] {
            let w = weight(&entries);
            let x = kappa(&w).scale(&rat(3, 7));
            let (back, t) = weight_of_kappa(&x).unwrap();
            assert_eq!(kappa(&back), x.scale(&t));
        }
    }

    #[test]
    fn fundamental_decomposition_examples() {
        let d = fundamental_decomposition(&weight(&[2, 1, 1, 0]));
        assert_eq!(d, BTreeMap::from([(1, 1), (3, 1)]));

        let d = fundamental_decomposition(&weight(&[3, 3, 2, 2, 2, 0, 0, 0]));
        assert_eq!(d, BTreeMap::from([(2, 1), (5, 2)]));

        assert!(fundamental_decomposition(&DominantWeight::zero(4)).is_empty());

        // Rebuild from the decomposition.
        let w = weight(&[4, 4, 4, 2, 2, 2, 0, 0]);
        let mut rebuilt = DominantWeight::zero(8);
        for (b, c) in fundamental_decomposition(&w) {
            for _ in 0..c {
                rebuilt = DominantWeight::new(
                    &rebuilt
                        .entries()
                        .iter()
                        .zip(DominantWeight::fundamental(8, b).unwrap().entries())
                        .map(|(&x, &y)| i64::from(x + y))
                        .collect::<Vec<_>>(),
                )
                .unwrap();
            }
        }
        assert_eq!(rebuilt, w);
    }

    #[test]
    fn dual_weight_examples() {
        assert_eq!(dual_weight(&weight(&[1, 0, 0])), weight(&[1, 1, 0]));
        assert_eq!(dual_weight(&DominantWeight::zero(4)), DominantWeight::zero(4));
        for entries in [vec![4, 2, 1, 0], vec![3, 3, 0, 0], vec![5, 0, 0, 0]] {
            let w = weight(&entries);
            assert_eq!(dual_weight(&dual_weight(&w)), w);
        }
    }

    #[test]
    fn invariant_dimension_examples() {
        let w = weight(&[1, 1, 0]);
        assert_eq!(
            invariant_dimension(&[w.clone(), w.clone(), w.clone()]).unwrap(),
            1
        );

        let zero = DominantWeight::zero(4);
        assert_eq!(
            invariant_dimension(&[zero.clone(), zero.clone(), zero.clone()]).unwrap(),
            1
        );

        // Two-dimensional invariant space on the rank-nine example.
        let l1 = weight(&[3, 3, 3, 2, 2, 2, 2, 1, 0]);
        let l2 = weight(&[2, 2, 2, 1, 1, 1, 0, 0, 0]);
        assert_eq!(invariant_dimension(&[l1, l2.clone(), l2]).unwrap(), 2);

        // Size obstruction.
        let w = weight(&[1, 0, 0]);
        assert_eq!(
            invariant_dimension(&[w.clone(), w.clone(), w.clone()]).unwrap(),
            1
        );
        let w2 = weight(&[1, 1, 0]);
        assert_eq!(
            invariant_dimension(&[w.clone(), w.clone(), w2]).unwrap(),
            0
        );
    }

    #[test]
    fn invariant_dimension_nonzero_needs_size_divisible_by_n() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.random_range(2..=4u32);
            let tuple: Vec<DominantWeight> = (0..3)
                .map(|_| {
                    let mut e: Vec<i64> = (0..n).map(|_| rng.random_range(0..3)).collect();
                    e.sort_unstable_by(|a, b| b.cmp(a));
                    DominantWeight::new(&e).unwrap()
                })
                .collect();
            let dim = invariant_dimension(&tuple).unwrap();
            if dim > 0 {
                let total: u64 = tuple.iter().map(DominantWeight::size).sum();
                assert_eq!(total % u64::from(n), 0);
            }
        }
    }

    #[test]
    fn invariant_dimension_symmetries() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let n = rng.random_range(2..=4u32);
            let tuple: Vec<DominantWeight> = (0..3)
                .map(|_| {
                    let mut e: Vec<i64> = (0..n).map(|_| rng.random_range(0..3)).collect();
                    e.sort_unstable_by(|a, b| b.cmp(a));
                    DominantWeight::new(&e).unwrap()
                })
                .collect();
            let dim = invariant_dimension(&tuple).unwrap();

            let mut perm = tuple.clone();
            perm.rotate_left(1);
            assert_eq!(invariant_dimension(&perm).unwrap(), dim);
            perm.swap(0, 1);
            assert_eq!(invariant_dimension(&perm).unwrap(), dim);

            let duals: Vec<DominantWeight> = tuple.iter().map(dual_weight).collect();
            assert_eq!(invariant_dimension(&duals).unwrap(), dim);
        }
    }

    #[test]
    fn dominance_checks() {
        let x = KappaPoint::new(vec![int(1), int(0), int(0), int(-1)]).unwrap();
        assert!(x.is_dominant());
        let x = KappaPoint::new(vec![int(0), int(1), int(-1)]).unwrap();
        assert!(!x.is_dominant());
        assert!(KappaPoint::zero(4).is_dominant());
        assert!(KappaPoint::new(vec![int(1), int(1)]).is_err());
    }

    #[test]
    fn kappa_identifies_weights_up_to_constant_shift() {
        // Weights differing by a constant vector normalize identically.
        assert_eq!(weight(&[3, 2, 2, 1]), weight(&[2, 1, 1, 0]));
        assert_ne!(weight(&[2, 1, 0, 0]), weight(&[2, 1, 1, 0]));
        assert_eq!(
            kappa(&weight(&[3, 2, 2, 1])),
            kappa(&weight(&[2, 1, 1, 0]))
        );
    }
}
