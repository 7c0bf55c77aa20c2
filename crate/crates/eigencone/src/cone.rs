//! The inequality description of the eigencone Gamma_n(s): regular facets
//! from intersection-number-one Schubert problems, exact membership, the
//! removable-pair count of a facet, and its gap-free subface.
//!
//! Facet lists are memoized per (n, s) in a shared table; population is
//! idempotent, so concurrent callers at worst duplicate work once.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ratlinalg::Rational;
use crate::schubert::{enumerate_point_tuples, intersection_number, SchubertIndex};
use crate::weights::KappaTuple;

/// Default ceiling on `C(n, n/2)^s`, the number of candidate index tuples
/// scanned per rank during facet enumeration.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Estimated worst-case number of candidate tuples for (n, s):
/// `C(n, floor(n/2))^s`, saturating.
pub fn tuple_estimate(n: u32, s: u32) -> u128 {
    let c = binomial(n, n / 2);
    let mut acc: u128 = 1;
    for _ in 0..s {
        acc = acc.saturating_mul(c);
    }
    acc
}

fn binomial(n: u32, k: u32) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.saturating_mul(u128::from(n - i)) / u128::from(i + 1);
    }
    acc
}

fn check_budget(n: u32, s: u32, budget: u64) -> Result<()> {
    let estimate = tuple_estimate(n, s);
    if estimate > u128::from(budget) {
        return Err(Error::BudgetExceeded {
            n,
            s,
            estimate,
            budget,
        });
    }
    Ok(())
}

/// One regular facet of Gamma_n(s): a tuple `(r, I_1, ..., I_s)` of
/// Schubert indices in Gr(r, n) with s-fold intersection number one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetDescriptor {
    indices: Vec<SchubertIndex>,
}

impl FacetDescriptor {
    /// Validates the defining conditions: shared (r, n), codimension sum
    /// `r(n-r)`, and intersection number exactly one.
    pub fn new(indices: Vec<SchubertIndex>) -> Result<Self> {
        let value = intersection_number(&indices)?;
        if value != 1 {
            let label = indices
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            return Err(Error::NotAFacet(label, value));
        }
        Ok(Self { indices })
    }

    pub fn n(&self) -> u32 {
        self.indices[0].n()
    }

    pub fn r(&self) -> u32 {
        self.indices[0].r()
    }

    pub fn s(&self) -> u32 {
        self.indices.len() as u32
    }

    pub fn indices(&self) -> &[SchubertIndex] {
        &self.indices
    }

    /// The j-th index set, `j` in `1..=s`.
    pub fn index_set(&self, j: usize) -> &SchubertIndex {
        &self.indices[j - 1]
    }

    /// All pairs `(j0, a0)` with `a0` in `I_{j0}`, `a0 > 1`, `a0 - 1` not in
    /// `I_{j0}`, in lexicographic order. Each names a removable index and
    /// hence a basic ray of this facet; the count is the `q` of the facet's
    /// product decomposition.
    pub fn type1_pairs(&self) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for (j, index) in (1..).zip(&self.indices) {
            for &a in index.elements() {
                if a > 1 && !index.contains(a - 1) {
                    out.push((j, a));
                }
            }
        }
        out
    }

    pub fn q(&self) -> usize {
        self.type1_pairs().len()
    }

    fn check_tuple(&self, x: &KappaTuple) -> Result<()> {
        if x.n() != self.n() || x.s() != self.s() {
            return Err(Error::DimensionMismatch(format!(
                "facet for (n={}, s={}) against tuple with (n={}, s={})",
                self.n(),
                self.s(),
                x.n(),
                x.s()
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for FacetDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "r={}", self.r())?;
        for (j, index) in (1..).zip(&self.indices) {
            write!(f, ";I{j}=")?;
            for (k, e) in index.elements().iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

type FacetCache = Mutex<HashMap<(u32, u32), Arc<Vec<FacetDescriptor>>>>;

fn facet_cache() -> &'static FacetCache {
    static CACHE: OnceLock<FacetCache> = OnceLock::new();
    CACHE.get_or_init(Mutex::default)
}

/// The full irredundant list of regular facets of Gamma_n(s): the union over
/// `r = 1..n-1` of all intersection-number-one tuples, in lexicographic
/// order on `(r, I_1, ..., I_s)`. Cached per (n, s).
pub fn enumerate_facets(n: u32, s: u32, budget: u64) -> Result<Arc<Vec<FacetDescriptor>>> {
    if n < 2 || s < 3 {
        return Err(Error::BadConeParameters { n, s });
    }
    if let Some(hit) = facet_cache().lock().unwrap().get(&(n, s)) {
        return Ok(Arc::clone(hit));
    }
    check_budget(n, s, budget)?;
    let mut facets = Vec::new();
    for r in 1..n {
        for indices in enumerate_point_tuples(n, s, r)? {
            facets.push(FacetDescriptor { indices });
        }
    }
    let facets = Arc::new(facets);
    facet_cache()
        .lock()
        .unwrap()
        .entry((n, s))
        .or_insert_with(|| Arc::clone(&facets));
    Ok(facets)
}

/// The lefthand side `sum_j sum_{a in I_j} x_j^(a)` of the facet's
/// inequality; membership requires it to be at most zero.
pub fn klyachko_value(facet: &FacetDescriptor, x: &KappaTuple) -> Result<Rational> {
    facet.check_tuple(x)?;
    let mut total = Rational::zero();
    for (j, index) in (1..).zip(facet.indices()) {
        for &a in index.elements() {
            total += x.point(j).entry(a);
        }
    }
    Ok(total)
}

/// Exact membership in Gamma_n(s): every facet inequality must hold. The
/// input must be coordinatewise dominant; the first offending coordinate is
/// reported otherwise.
pub fn is_member(x: &KappaTuple, budget: u64) -> Result<bool> {
    if let Some(coordinate) = x.first_non_dominant() {
        return Err(Error::NonDominant { coordinate });
    }
    for facet in enumerate_facets(x.n(), x.s(), budget)?.iter() {
        if klyachko_value(facet, x)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All facets whose inequality `x` violates, with the offending values.
pub fn violated_facets(
    x: &KappaTuple,
    budget: u64,
) -> Result<Vec<(FacetDescriptor, Rational)>> {
    if let Some(coordinate) = x.first_non_dominant() {
        return Err(Error::NonDominant { coordinate });
    }
    let mut out = Vec::new();
    for facet in enumerate_facets(x.n(), x.s(), budget)?.iter() {
        let value = klyachko_value(facet, x)?;
        if value.is_positive() {
            out.push((facet.clone(), value));
        }
    }
    Ok(out)
}

/// Whether a member lies on the facet, i.e. satisfies its inequality with
/// equality. Callers are expected to have checked membership.
pub fn on_facet(facet: &FacetDescriptor, x: &KappaTuple) -> Result<bool> {
    Ok(klyachko_value(facet, x)?.is_zero())
}

/// Whether a facet point lies in the gap-free subface: for every coordinate
/// `i` and every removable `b` of `I_i`, the entries across the removable
/// position agree, `x_i^(b) = x_i^(b-1)`. Callers are expected to have
/// checked `on_facet`.
pub fn in_f2(facet: &FacetDescriptor, x: &KappaTuple) -> Result<bool> {
    facet.check_tuple(x)?;
    for (i, index) in (1..).zip(facet.indices()) {
        for &b in index.elements() {
            if b > 1 && !index.contains(b - 1) && x.point(i).entry(b) != x.point(i).entry(b - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All chamber-wall equalities satisfied at `x`: pairs `(i, a)` with
/// `x_i^(a) = x_i^(a+1)`, 1-based, in lexicographic order. Requires a
/// coordinatewise dominant input.
pub fn wall_tight_set(x: &KappaTuple) -> Result<Vec<(usize, u32)>> {
    if let Some(coordinate) = x.first_non_dominant() {
        return Err(Error::NonDominant { coordinate });
    }
    let mut out = Vec::new();
    for (i, point) in (1..).zip(x.points()) {
        for a in 1..x.n() {
            if point.entry(a) == point.entry(a + 1) {
                out.push((i, a));
            }
        }
    }
    Ok(out)
}

/// The complete inequality description of Gamma_n(s): the facet list plus
/// the chamber walls `x_i^(a) >= x_i^(a+1)`.
pub struct InequalitySystem {
    pub facets: Arc<Vec<FacetDescriptor>>,
    pub walls: Vec<(usize, u32)>,
}

pub fn inequality_system(n: u32, s: u32, budget: u64) -> Result<InequalitySystem> {
    let facets = enumerate_facets(n, s, budget)?;
    let walls = (1..=s as usize)
        .flat_map(|i| (1..n).map(move |a| (i, a)))
        .collect();
    Ok(InequalitySystem { facets, walls })
}
