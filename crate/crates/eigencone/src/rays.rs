//! Extremal rays of the eigencone: basic rays attached to a facet and a
//! removable pair, the divisor-class formula behind them, the linear
//! induction map from the product of two smaller eigencones onto the
//! gap-free subface of a facet, its section, and the recursive enumeration
//! of the full extremal-ray list.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{ToPrimitive, Zero};

use crate::cone::{
    enumerate_facets, in_f2, klyachko_value, on_facet, wall_tight_set, FacetDescriptor,
};
use crate::error::{Error, Result};
use crate::ratlinalg::{primitive, RatMatrix, Rational};
use crate::schubert::{intersection_number, SchubertIndex};
use crate::weights::{invariant_dimension, DominantWeight, KappaPoint, KappaTuple};

/// How a ray was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Divisor-class ray of a facet at the removable pair `(j0, a0)`.
    Basic {
        facet: FacetDescriptor,
        j0: usize,
        a0: u32,
    },
    /// Image under induction of a product-cone ray through a facet.
    Induced {
        facet: FacetDescriptor,
        left: Vec<DominantWeight>,
        right: Vec<DominantWeight>,
    },
    /// Supplied from outside rather than derived.
    Imported,
}

impl Provenance {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Basic { .. } => "basic",
            Self::Induced { .. } => "induced",
            Self::Imported => "imported",
        }
    }
}

/// An extremal-ray representative: the primitive integral weight tuple and
/// its trace-zero coordinates, which are a positive multiple of any other
/// representative of the same ray.
#[derive(Clone, Debug)]
pub struct Ray {
    weight_tuple: Vec<DominantWeight>,
    direction: KappaTuple,
    provenance: Provenance,
}

impl Ray {
    /// Canonicalizes a nonzero dominant direction: the fundamental-weight
    /// coordinates of all components are jointly scaled to integers with
    /// overall gcd one, and the direction is rebuilt from that weight tuple.
    pub fn from_direction(direction: &KappaTuple, provenance: Provenance) -> Result<Self> {
        if direction.is_zero() {
            return Err(Error::ZeroVector);
        }
        if let Some(coordinate) = direction.first_non_dominant() {
            return Err(Error::NonDominant { coordinate });
        }
        let n = direction.n() as usize;
        let mut gaps: Vec<Rational> = Vec::with_capacity(direction.points().len() * (n - 1));
        for point in direction.points() {
            for w in point.entries().windows(2) {
                gaps.push(&w[0] - &w[1]);
            }
        }
        let scaled = primitive(&gaps)?;
        let mut weight_tuple = Vec::with_capacity(direction.points().len());
        for (i, _) in direction.points().iter().enumerate() {
            let mut entries = vec![0i64; n];
            for a in (0..n - 1).rev() {
                let gap = scaled[i * (n - 1) + a]
                    .to_i64()
                    .ok_or(Error::Overflow("ray weight entry"))?;
                entries[a] = entries[a + 1] + gap;
            }
            weight_tuple.push(DominantWeight::new(&entries)?);
        }
        let direction = KappaTuple::from_weights(&weight_tuple)?;
        Ok(Self {
            weight_tuple,
            direction,
            provenance,
        })
    }

    pub fn from_weights(weights: &[DominantWeight], provenance: Provenance) -> Result<Self> {
        Self::from_direction(&KappaTuple::from_weights(weights)?, provenance)
    }

    pub fn weight_tuple(&self) -> &[DominantWeight] {
        &self.weight_tuple
    }

    pub fn direction(&self) -> &KappaTuple {
        &self.direction
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Deduplication and sorting key: the flattened weight entries.
    pub fn key(&self) -> Vec<Vec<u32>> {
        self.weight_tuple
            .iter()
            .map(|w| w.entries().to_vec())
            .collect()
    }
}

impl PartialEq for Ray {
    fn eq(&self, other: &Self) -> bool {
        self.weight_tuple == other.weight_tuple
    }
}

impl Eq for Ray {}

impl std::fmt::Display for Ray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, w) in self.weight_tuple.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// The weight tuple of the divisor class attached to index sets with
/// codimensions summing to `r(n-r) + 1`: coordinate `i` carries `c_{i,b}`
/// copies of the b-th fundamental weight for every removable-from-below
/// `b` of `A_i`, where `c_{i,b}` is the intersection number of the tuple
/// with `A_i` lowered at `b`. May be the zero tuple.
pub fn divisor_class_weights(indices: &[SchubertIndex]) -> Result<Vec<DominantWeight>> {
    let Some(first) = indices.first() else {
        return Err(Error::MixedShapes);
    };
    let (r, n) = (first.r(), first.n());
    if indices.iter().any(|i| i.r() != r || i.n() != n) {
        return Err(Error::MixedShapes);
    }
    let expected = r * (n - r) + 1;
    let actual: u32 = indices.iter().map(SchubertIndex::codim).sum();
    if actual != expected {
        return Err(Error::CodimensionSum { expected, actual });
    }
    let mut weights = Vec::with_capacity(indices.len());
    for (i, index) in indices.iter().enumerate() {
        let mut entries = vec![0i64; n as usize];
        for &b in index.elements() {
            if b >= n || index.contains(b + 1) {
                continue;
            }
            let mut lowered = indices.to_vec();
            lowered[i] = index.lower(b)?;
            let c = intersection_number(&lowered)?;
            if c > 0 {
                let c = i64::try_from(c).map_err(|_| Error::Overflow("divisor coefficient"))?;
                for entry in entries.iter_mut().take(b as usize) {
                    *entry += c;
                }
            }
        }
        weights.push(DominantWeight::new(&entries)?);
    }
    Ok(weights)
}

/// The divisor class as a trace-zero tuple.
pub fn divisor_class(indices: &[SchubertIndex]) -> Result<KappaTuple> {
    KappaTuple::from_weights(&divisor_class_weights(indices)?)
}

/// The basic extremal ray of a facet at a removable pair: coordinate `j0`
/// is raised at `a0` and the divisor-class formula is applied.
pub fn basic_ray(facet: &FacetDescriptor, j0: usize, a0: u32) -> Result<Ray> {
    if !facet.type1_pairs().contains(&(j0, a0)) {
        return Err(Error::IllegalPair { j0, a0 });
    }
    let mut raised: Vec<SchubertIndex> = facet.indices().to_vec();
    raised[j0 - 1] = facet.index_set(j0).raise(a0)?;
    let weights = divisor_class_weights(&raised)?;
    Ray::from_weights(
        &weights,
        Provenance::Basic {
            facet: facet.clone(),
            j0,
            a0,
        },
    )
}

/// A point of the product of the two smaller eigencones attached to a
/// facet: an s-tuple for Gamma_r paired with an s-tuple for Gamma_{n-r}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductPoint {
    left: KappaTuple,
    right: KappaTuple,
}

impl ProductPoint {
    pub fn new(left: KappaTuple, right: KappaTuple) -> Result<Self> {
        if left.s() != right.s() {
            return Err(Error::DimensionMismatch(
                "product point factors have different lengths".into(),
            ));
        }
        Ok(Self { left, right })
    }

    pub fn zero(r: u32, n_minus_r: u32, s: u32) -> Self {
        Self {
            left: KappaTuple::zero(r, s),
            right: KappaTuple::zero(n_minus_r, s),
        }
    }

    pub fn left(&self) -> &KappaTuple {
        &self.left
    }

    pub fn right(&self) -> &KappaTuple {
        &self.right
    }

    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            left: self.left.add(&other.left)?,
            right: self.right.add(&other.right)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            left: self.left.scale(c),
            right: self.right.scale(c),
        }
    }

    fn check_facet(&self, facet: &FacetDescriptor) -> Result<()> {
        if self.left.n() != facet.r()
            || self.right.n() != facet.n() - facet.r()
            || self.left.s() != facet.s()
        {
            return Err(Error::DimensionMismatch(format!(
                "product point for (r={}, n-r={}, s={}) against facet with (r={}, n={}, s={})",
                self.left.n(),
                self.right.n(),
                self.left.s(),
                facet.r(),
                facet.n(),
                facet.s()
            )));
        }
        Ok(())
    }
}

/// Placement of a product point into the big Cartan space along the facet's
/// permutations: `y_i^(b) = x_i^(w_{I_i}^{-1}(b))` where `x_i` concatenates
/// the two factors. The output need not be dominant.
pub fn naive_induct(facet: &FacetDescriptor, p: &ProductPoint) -> Result<KappaTuple> {
    p.check_facet(facet)?;
    let n = facet.n();
    let mut points = Vec::with_capacity(facet.s() as usize);
    for (i, index) in (1..).zip(facet.indices()) {
        let inverse = index.permutation_inverse();
        let concat: Vec<&Rational> = p
            .left
            .point(i)
            .entries()
            .iter()
            .chain(p.right.point(i).entries())
            .collect();
        let entries = (1..=n)
            .map(|b| concat[(inverse[(b - 1) as usize] - 1) as usize].clone())
            .collect();
        points.push(KappaPoint::new(entries)?);
    }
    KappaTuple::new(points)
}

/// One correction term of the induction formula.
#[derive(Clone, Debug)]
pub struct InductionTerm {
    /// Coordinate whose index set was raised, 1-based.
    pub i: usize,
    /// The removable entry the gap is read across.
    pub b: u32,
    /// Exact gap `y_i^(b) - y_i^(b-1)`.
    pub gap: Rational,
    /// Weight tuple of the divisor class being added.
    pub class_weights: Vec<DominantWeight>,
}

/// The induction map with its intermediate terms: the naive placement plus
/// every gap-scaled divisor class.
pub fn induct_terms(
    facet: &FacetDescriptor,
    p: &ProductPoint,
) -> Result<(KappaTuple, Vec<InductionTerm>)> {
    let naive = naive_induct(facet, p)?;
    let mut terms = Vec::new();
    for (i, index) in (1..).zip(facet.indices()) {
        for &b in index.elements() {
            if b <= 1 || index.contains(b - 1) {
                continue;
            }
            let gap = naive.point(i).entry(b) - naive.point(i).entry(b - 1);
            if gap.is_zero() {
                continue;
            }
            let mut raised = facet.indices().to_vec();
            raised[i - 1] = index.raise(b)?;
            terms.push(InductionTerm {
                i,
                b,
                gap,
                class_weights: divisor_class_weights(&raised)?,
            });
        }
    }
    let mut total = naive;
    for term in &terms {
        let class = KappaTuple::from_weights(&term.class_weights)?;
        total = total.add(&class.scale(&term.gap))?;
    }
    Ok((total, terms))
}

/// The linear induction map from the product cone onto the gap-free
/// subface of the facet.
pub fn induct(facet: &FacetDescriptor, p: &ProductPoint) -> Result<KappaTuple> {
    Ok(induct_terms(facet, p)?.0)
}

/// Section of the induction map on the gap-free subface: each coordinate is
/// read back along the facet's permutation and each factor recentered to
/// trace zero. Defined only on points of the subface.
pub fn restrict_section(facet: &FacetDescriptor, z: &KappaTuple) -> Result<ProductPoint> {
    if !on_facet(facet, z)? {
        return Err(Error::NotOnFacet);
    }
    if !in_f2(facet, z)? {
        return Err(Error::NotInSubface);
    }
    let r = facet.r() as usize;
    let mut left_points = Vec::with_capacity(facet.s() as usize);
    let mut right_points = Vec::with_capacity(facet.s() as usize);
    for (i, index) in (1..).zip(facet.indices()) {
        let w = index.permutation();
        let pick = |range: std::ops::Range<usize>| -> Vec<Rational> {
            let values: Vec<Rational> = range
                .map(|a| z.point(i).entry(w[a]).clone())
                .collect();
            let mean: Rational = values.iter().sum::<Rational>()
                / Rational::from_integer((values.len() as i64).into());
            values.into_iter().map(|v| v - &mean).collect()
        };
        left_points.push(KappaPoint::new(pick(0..r))?);
        right_points.push(KappaPoint::new(pick(r..facet.n() as usize))?);
    }
    ProductPoint::new(KappaTuple::new(left_points)?, KappaTuple::new(right_points)?)
}

/// Exact extremality test: a nonzero member spans an extremal ray exactly
/// when the facet equalities and chamber-wall equalities tight at it, taken
/// together with the trace-zero conditions, cut out a one-dimensional
/// solution space.
pub fn is_extremal(x: &KappaTuple, budget: u64) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !crate::cone::is_member(x, budget)? {
        return Err(Error::NotAMember);
    }
    let (n, s) = (x.n() as usize, x.s() as usize);
    let cols = n * s;
    let mut rows: Vec<Vec<Rational>> = Vec::new();

    for i in 0..s {
        let mut row = vec![Rational::zero(); cols];
        for a in 0..n {
            row[i * n + a] = Rational::from_integer(1.into());
        }
        rows.push(row);
    }
    for facet in enumerate_facets(x.n(), x.s(), budget)?.iter() {
        if !klyachko_value(facet, x)?.is_zero() {
            continue;
        }
        let mut row = vec![Rational::zero(); cols];
        for (j, index) in facet.indices().iter().enumerate() {
            for &a in index.elements() {
                row[j * n + (a - 1) as usize] = Rational::from_integer(1.into());
            }
        }
        rows.push(row);
    }
    for (i, a) in wall_tight_set(x)? {
        let mut row = vec![Rational::zero(); cols];
        row[(i - 1) * n + (a - 1) as usize] = Rational::from_integer(1.into());
        row[(i - 1) * n + a as usize] = Rational::from_integer((-1).into());
        rows.push(row);
    }
    Ok(RatMatrix::from_rows(rows)?.nullspace_dimension() == 1)
}

/// Default number of scalings checked by [`is_f_ray`].
pub const DEFAULT_F_RAY_SCALINGS: u32 = 3;

/// Whether the invariant space on the ray stays one-dimensional for all
/// scalings up to `n_max` (a finite certificate of the scaling property).
pub fn is_f_ray(ray: &Ray, n_max: u32) -> Result<bool> {
    for m in 1..=n_max {
        let scaled: Vec<DominantWeight> =
            ray.weight_tuple().iter().map(|w| w.scaled(m)).collect();
        if invariant_dimension(&scaled)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every extremal-ray candidate a facet contributes: its basic rays, plus
/// the inductions of the product-cone extremal rays, which are exactly the
/// smaller-cone rays placed on one factor with zero on the other. Zero
/// induction images are dropped.
pub fn facet_ray_candidates(
    facet: &FacetDescriptor,
    left_rays: &[Ray],
    right_rays: &[Ray],
) -> Result<Vec<Ray>> {
    let s = facet.s();
    let (r, nr) = (facet.r(), facet.n() - facet.r());
    let mut out = Vec::new();
    for (j0, a0) in facet.type1_pairs() {
        out.push(basic_ray(facet, j0, a0)?);
    }
    let zero_weights = |n: u32| vec![DominantWeight::zero(n); s as usize];
    for ray in left_rays {
        let p = ProductPoint::new(ray.direction().clone(), KappaTuple::zero(nr, s))?;
        let z = induct(facet, &p)?;
        if !z.is_zero() {
            out.push(Ray::from_direction(
                &z,
                Provenance::Induced {
                    facet: facet.clone(),
                    left: ray.weight_tuple().to_vec(),
                    right: zero_weights(nr),
                },
            )?);
        }
    }
    for ray in right_rays {
        let p = ProductPoint::new(KappaTuple::zero(r, s), ray.direction().clone())?;
        let z = induct(facet, &p)?;
        if !z.is_zero() {
            out.push(Ray::from_direction(
                &z,
                Provenance::Induced {
                    facet: facet.clone(),
                    left: zero_weights(r),
                    right: ray.weight_tuple().to_vec(),
                },
            )?);
        }
    }
    debug_assert!(out
        .iter()
        .all(|ray| on_facet(facet, ray.direction()).unwrap()));
    Ok(out)
}

type RaySplit = (Arc<Vec<Ray>>, Arc<Vec<Ray>>);

fn ray_cache() -> &'static Mutex<HashMap<(u32, u32), RaySplit>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), RaySplit>>> = OnceLock::new();
    CACHE.get_or_init(Mutex::default)
}

/// All extremal rays of Gamma_n(s), recursively: candidates are collected
/// facet by facet, deduplicated by primitive weight tuple, and filtered by
/// the exact extremality test. Deterministically sorted by weight tuple.
/// Memoized per (n, s).
pub fn all_extremal_rays(n: u32, s: u32, budget: u64) -> Result<Arc<Vec<Ray>>> {
    Ok(extremal_rays_inner(n, s, budget)?.0)
}

/// Like [`all_extremal_rays`], also returning the deduplicated candidates
/// that failed the extremality test (induction images need not stay
/// extremal).
pub fn all_extremal_rays_with_diagnostics(n: u32, s: u32, budget: u64) -> Result<RaySplit> {
    extremal_rays_inner(n, s, budget)
}

fn extremal_rays_inner(n: u32, s: u32, budget: u64) -> Result<RaySplit> {
    if n == 0 || s < 3 {
        return Err(Error::BadConeParameters { n, s });
    }
    if n == 1 {
        // Gamma_1 is the origin.
        return Ok((Arc::new(Vec::new()), Arc::new(Vec::new())));
    }
    if let Some(hit) = ray_cache().lock().unwrap().get(&(n, s)) {
        return Ok(hit.clone());
    }

    let facets = enumerate_facets(n, s, budget)?;
    let mut smaller: Vec<Arc<Vec<Ray>>> = Vec::with_capacity(n as usize);
    smaller.push(Arc::new(Vec::new()));
    for r in 1..n {
        smaller.push(all_extremal_rays(r, s, budget)?);
    }

    let mut unique: BTreeMap<Vec<Vec<u32>>, Ray> = BTreeMap::new();
    for facet in facets.iter() {
        let r = facet.r() as usize;
        let candidates =
            facet_ray_candidates(facet, &smaller[r], &smaller[n as usize - r])?;
        for candidate in candidates {
            unique.entry(candidate.key()).or_insert(candidate);
        }
    }

    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    for (_, ray) in unique {
        if is_extremal(ray.direction(), budget)? {
            accepted.push(ray);
        } else {
            rejected.push(ray);
        }
    }
    let split = (Arc::new(accepted), Arc::new(rejected));
    let mut cache = ray_cache().lock().unwrap();
    let split = cache.entry((n, s)).or_insert(split);
    Ok(split.clone())
}
