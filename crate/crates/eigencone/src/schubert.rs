//! Schubert indices and exact Littlewood-Richardson computation in the
//! cohomology of the Grassmannian Gr(r, n).
//!
//! Two independent backends compute Schur-basis products:
//!
//! * [`lr_multiply`] counts Littlewood-Richardson skew tableaux directly;
//! * [`pieri_multiply`] expands through the Jacobi-Trudi determinant and
//!   iterated Pieri (horizontal strip) steps.
//!
//! The second exists purely as an oracle for the first; all production
//! paths go through tableau counting.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A cardinality-`r` subset of `{1, ..., n}` naming the Schubert class
/// `sigma_I` of Gr(r, n).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertIndex {
    n: u32,
    elements: Vec<u32>,
}

impl SchubertIndex {
    /// Validates that `elements` is strictly increasing inside `1..=n` with
    /// `1 <= r <= n - 1`.
    pub fn new(n: u32, elements: Vec<u32>) -> Result<Self> {
        let r = elements.len();
        let strictly_increasing = elements.windows(2).all(|w| w[0] < w[1]);
        let in_range = elements.iter().all(|&e| (1..=n).contains(&e));
        if n < 2 || r == 0 || r as u32 > n - 1 || !strictly_increasing || !in_range {
            return Err(Error::InvalidIndex { n, elements });
        }
        Ok(Self { n, elements })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.elements.len() as u32
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, b: u32) -> bool {
        self.elements.binary_search(&b).is_ok()
    }

    /// `sum_a (n - r + a - i_a)`, the codimension of the Schubert class.
    pub fn codim(&self) -> u32 {
        let (n, r) = (self.n, self.r());
        self.elements
            .iter()
            .zip(1..)
            .map(|(&i, a)| n - r + a - i)
            .sum()
    }

    /// The partition `mu_a = n - r + a - i_a` in the r x (n-r) box.
    pub fn partition(&self) -> BoxPartition {
        let (n, r) = (self.n, self.r());
        let parts = self
            .elements
            .iter()
            .zip(1..)
            .map(|(&i, a)| n - r + a - i)
            .collect();
        BoxPartition {
            rows: r,
            cols: n - r,
            parts,
        }
    }

    /// Inverse of [`SchubertIndex::partition`]: `i_a = n - r + a - mu_a`.
    pub fn from_partition(p: &BoxPartition, n: u32) -> Result<Self> {
        if p.rows + p.cols != n {
            return Err(Error::DimensionMismatch(format!(
                "a {}x{} box does not belong to Gr({}, {n})",
                p.rows, p.cols, p.rows
            )));
        }
        let elements = p
            .parts
            .iter()
            .zip(1..)
            .map(|(&m, a)| n - p.rows + a - m)
            .collect();
        Self::new(n, elements)
    }

    /// The transpose of the box complement of `partition()`, a partition in
    /// the (n-r) x r box.
    pub fn dual_partition(&self) -> BoxPartition {
        self.partition().complement().transpose()
    }

    /// The permutation `w_I` of `{1, ..., n}`: images of `1..=n`, sending
    /// `a <= r` to `i_a` and `r < a` to the `(a-r)`-th complement element.
    pub fn permutation(&self) -> Vec<u32> {
        let mut w = self.elements.clone();
        w.extend((1..=self.n).filter(|b| !self.contains(*b)));
        w
    }

    /// Positions `w_I^{-1}(b)` for `b = 1..=n`.
    pub fn permutation_inverse(&self) -> Vec<u32> {
        let w = self.permutation();
        let mut inv = vec![0u32; w.len()];
        for (a, &b) in w.iter().enumerate() {
            inv[(b - 1) as usize] = a as u32 + 1;
        }
        inv
    }

    /// `I^{+,b} = (I - {b}) u {b-1}`; raises codimension by one.
    pub fn raise(&self, b: u32) -> Result<Self> {
        if !self.contains(b) {
            return Err(self.bad_move(b, "b is not an element of I"));
        }
        if b <= 1 {
            return Err(self.bad_move(b, "b must exceed 1"));
        }
        if self.contains(b - 1) {
            return Err(self.bad_move(b, "b - 1 already lies in I"));
        }
        let mut elements = self.elements.clone();
        elements.retain(|&e| e != b);
        elements.push(b - 1);
        elements.sort_unstable();
        Ok(Self {
            n: self.n,
            elements,
        })
    }

    /// `I^{-,b} = (I - {b}) u {b+1}`; lowers codimension by one.
    pub fn lower(&self, b: u32) -> Result<Self> {
        if !self.contains(b) {
            return Err(self.bad_move(b, "b is not an element of I"));
        }
        if b >= self.n {
            return Err(self.bad_move(b, "b must be below n"));
        }
        if self.contains(b + 1) {
            return Err(self.bad_move(b, "b + 1 already lies in I"));
        }
        let mut elements: Vec<u32> = self.elements.clone();
        elements.retain(|&e| e != b);
        elements.push(b + 1);
        elements.sort_unstable();
        Ok(Self {
            n: self.n,
            elements,
        })
    }

    /// The Grassmann-dual index `{n + 1 - j : j in [n] - I}` in Gr(n-r, n).
    /// Its partition is the transpose of this index's partition, so
    /// intersection numbers are preserved when every factor is dualized.
    pub fn dual(&self) -> Self {
        let mut elements: Vec<u32> = (1..=self.n)
            .filter(|b| !self.contains(*b))
            .map(|j| self.n + 1 - j)
            .collect();
        elements.sort_unstable();
        Self {
            n: self.n,
            elements,
        }
    }

    fn bad_move(&self, b: u32, reason: &'static str) -> Error {
        Error::InvalidMove {
            elements: self.elements.clone(),
            b,
            reason,
        }
    }
}

impl std::fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elements.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A weakly decreasing sequence fitting in a `rows x cols` box. Stored
/// padded with zeros to length `rows`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxPartition {
    rows: u32,
    cols: u32,
    parts: Vec<u32>,
}

impl BoxPartition {
    pub fn new(rows: u32, cols: u32, parts: &[u32]) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let fits = parts.len() <= rows as usize && parts.iter().all(|&p| p <= cols);
        if !decreasing || !fits {
            return Err(Error::InvalidPartition {
                rows,
                cols,
                parts: parts.to_vec(),
            });
        }
        let mut parts = parts.to_vec();
        parts.resize(rows as usize, 0);
        Ok(Self { rows, cols, parts })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The reversed box complement `(cols - mu_r, ..., cols - mu_1)`.
    pub fn complement(&self) -> Self {
        let parts = self.parts.iter().rev().map(|&p| self.cols - p).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            parts,
        }
    }

    /// The conjugate partition, living in the transposed box.
    pub fn transpose(&self) -> Self {
        let parts = (1..=self.cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Self {
            rows: self.cols,
            cols: self.rows,
            parts,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Whether this is the full box, i.e. the class of a point.
    pub fn is_point(&self) -> bool {
        self.parts.iter().all(|&p| p == self.cols)
    }

    /// Parts with trailing zeros removed.
    pub fn trimmed(&self) -> Vec<u32> {
        trim(&self.parts)
    }

    fn from_trimmed(rows: u32, cols: u32, trimmed: &[u32]) -> Self {
        let mut parts = trimmed.to_vec();
        parts.resize(rows as usize, 0);
        Self { rows, cols, parts }
    }
}

/// An element of the cohomology ring in the Schubert basis: a finite map
/// from box partitions to nonnegative coefficients, zeros absent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchubertClassVector {
    rows: u32,
    cols: u32,
    terms: BTreeMap<BoxPartition, u64>,
}

impl SchubertClassVector {
    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn terms(&self) -> &BTreeMap<BoxPartition, u64> {
        &self.terms
    }

    pub fn coefficient(&self, p: &BoxPartition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }
}

fn trim(parts: &[u32]) -> Vec<u32> {
    let len = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
    parts[..len].to_vec()
}

fn sum(parts: &[u32]) -> u32 {
    parts.iter().sum()
}

/// Counts Littlewood-Richardson skew tableaux of shape `outer/inner` with
/// content `content`: column-strict, row-weak fillings whose reverse reading
/// word is a lattice word. All arguments are weakly decreasing; trailing
/// zeros are ignored.
pub(crate) fn lr_coefficient(outer: &[u32], inner: &[u32], content: &[u32]) -> u64 {
    let outer = trim(outer);
    let inner = trim(inner);
    let content = trim(content);
    if inner.len() > outer.len() {
        return 0;
    }
    if sum(&outer) != sum(&inner) + sum(&content) {
        return 0;
    }
    let contains = inner
        .iter()
        .zip(outer.iter())
        .all(|(&i, &o)| i <= o);
    if !contains {
        return 0;
    }
    if content.is_empty() {
        return 1;
    }

    // Cells in reverse reading order: rows top to bottom, right to left
    // within a row. Placing in this order makes the lattice-word prefix
    // condition checkable incrementally.
    struct Cell {
        row: usize,
        right: Option<usize>,
        above: Option<usize>,
    }
    let mut cells: Vec<Cell> = Vec::new();
    let mut cell_at: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    for (row, &end) in outer.iter().enumerate() {
        let start = inner.get(row).copied().unwrap_or(0);
        for col in (start..end).rev() {
            let idx = cells.len();
            cells.push(Cell {
                row,
                right: cell_at.get(&(row, col + 1)).copied(),
                above: row
                    .checked_sub(1)
                    .and_then(|r| cell_at.get(&(r, col)).copied()),
            });
            cell_at.insert((row, col), idx);
        }
    }

    let letters = content.len();
    let mut counts = vec![0u32; letters];
    let mut entries = vec![0usize; cells.len()];
    let mut total = 0u64;

    fn fill(
        pos: usize,
        cells: &[Cell],
        content: &[u32],
        counts: &mut [u32],
        entries: &mut [usize],
        total: &mut u64,
    ) {
        if pos == cells.len() {
            *total += 1;
            return;
        }
        let cell = &cells[pos];
        // Entries in skew row i are at most i (1-based).
        let mut hi = (cell.row + 1).min(content.len());
        if let Some(r) = cell.right {
            hi = hi.min(entries[r]);
        }
        let lo = cell.above.map_or(1, |a| entries[a] + 1);
        for t in lo..=hi {
            if counts[t - 1] >= content[t - 1] {
                continue;
            }
            if t > 1 && counts[t - 2] <= counts[t - 1] {
                continue;
            }
            counts[t - 1] += 1;
            entries[pos] = t;
            fill(pos + 1, cells, content, counts, entries, total);
            counts[t - 1] -= 1;
        }
    }

    fill(0, &cells, &content, &mut counts, &mut entries, &mut total);
    total
}

/// Expands `s_p * s_q` in the Schur basis by enumerating candidate outer
/// shapes and counting tableaux. `max_rows` truncates to partitions with at
/// most that many rows; `max_col` additionally truncates column length.
pub(crate) fn schur_product_terms(
    p: &[u32],
    q: &[u32],
    max_rows: usize,
    max_col: Option<u32>,
) -> BTreeMap<Vec<u32>, u64> {
    let p = trim(p);
    let q = trim(q);
    let total = sum(&p) + sum(&q);
    let row_cap = max_rows.min(p.len() + q.len());
    let width_cap = {
        let w = p.first().copied().unwrap_or(0) + q.first().copied().unwrap_or(0);
        max_col.map_or(w, |c| w.min(c))
    };

    let mut out = BTreeMap::new();
    let mut shape: Vec<u32> = Vec::new();
    enumerate_outers(&p, total, row_cap, width_cap, &mut shape, &mut |outer| {
        let c = lr_coefficient(outer, &p, &q);
        if c > 0 {
            out.insert(outer.to_vec(), c);
        }
    });
    out
}

fn enumerate_outers(
    p: &[u32],
    total: u32,
    row_cap: usize,
    width_cap: u32,
    shape: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    let placed: u32 = shape.iter().sum();
    if placed == total && shape.len() >= p.len() {
        emit(shape);
        if placed == 0 {
            return;
        }
    }
    if shape.len() == row_cap || placed >= total {
        return;
    }
    let row = shape.len();
    let lo = p.get(row).copied().unwrap_or(0);
    let hi = shape
        .last()
        .copied()
        .unwrap_or(width_cap)
        .min(total - placed);
    let lo = lo.max(u32::from(row >= p.len()));
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        shape.push(v);
        enumerate_outers(p, total, row_cap, width_cap, shape, emit);
        shape.pop();
    }
}

/// Littlewood-Richardson product of two box partitions, truncated to the
/// box. This is the production backend.
pub fn lr_multiply(p: &BoxPartition, q: &BoxPartition) -> Result<SchubertClassVector> {
    check_box(p, q)?;
    let terms = schur_product_terms(
        &p.trimmed(),
        &q.trimmed(),
        p.rows as usize,
        Some(p.cols),
    );
    Ok(collect_box_terms(p.rows, p.cols, terms.into_iter()))
}

/// The same product computed through the Jacobi-Trudi determinant and
/// repeated horizontal-strip (Pieri) expansions; the oracle backend.
pub fn pieri_multiply(p: &BoxPartition, q: &BoxPartition) -> Result<SchubertClassVector> {
    check_box(p, q)?;
    let full = schur_product_pieri(&p.trimmed(), &q.trimmed(), p.rows as usize, p.cols);
    let terms = full.into_iter().filter_map(|(shape, c)| {
        let in_box = shape.len() <= p.rows as usize && shape.iter().all(|&v| v <= p.cols);
        in_box.then(|| {
            assert!(c >= 0, "signed Pieri expansion left a negative coefficient");
            (shape, c as u64)
        })
    });
    Ok(collect_box_terms(p.rows, p.cols, terms))
}

fn check_box(p: &BoxPartition, q: &BoxPartition) -> Result<()> {
    if (p.rows, p.cols) != (q.rows, q.cols) {
        return Err(Error::BoxMismatch(p.rows, p.cols, q.rows, q.cols));
    }
    Ok(())
}

fn collect_box_terms(
    rows: u32,
    cols: u32,
    terms: impl Iterator<Item = (Vec<u32>, u64)>,
) -> SchubertClassVector {
    let terms = terms
        .filter(|(_, c)| *c > 0)
        .map(|(shape, c)| (BoxPartition::from_trimmed(rows, cols, &shape), c))
        .collect();
    SchubertClassVector { rows, cols, terms }
}

/// Signed Schur expansion of `s_p * s_q` via `s_q = det(h_{q_i - i + j})`,
/// each monomial in the determinant applied to `p` by Pieri steps.
///
/// Strip additions never shrink a shape, so intermediates that already
/// exceed `max_rows` rows or `max_col` columns can only grow into terms
/// outside those bounds; pruning them is exact for the bounded result.
pub(crate) fn schur_product_pieri(
    p: &[u32],
    q: &[u32],
    max_rows: usize,
    max_col: u32,
) -> BTreeMap<Vec<u32>, i64> {
    let p = trim(p);
    let q = trim(q);
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    if q.is_empty() {
        acc.insert(p, 1);
        return acc;
    }
    for (perm, sign) in permutations_with_sign(q.len()) {
        let mut strips: Vec<i64> = Vec::with_capacity(q.len());
        let mut ok = true;
        for (i, &s) in perm.iter().enumerate() {
            let m = i64::from(q[i]) - i as i64 + s as i64;
            if m < 0 {
                ok = false;
                break;
            }
            strips.push(m);
        }
        if !ok {
            continue;
        }
        let mut layer: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        layer.insert(p.clone(), 1);
        for m in strips {
            let mut next: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
            for (shape, c) in &layer {
                for grown in horizontal_strips(shape, m as u32, max_rows, max_col) {
                    *next.entry(grown).or_insert(0) += c;
                }
            }
            layer = next;
        }
        for (shape, c) in layer {
            let entry = acc.entry(shape).or_insert(0);
            *entry += sign * c;
        }
    }
    acc.retain(|_, c| *c != 0);
    acc
}

/// All partitions within a `max_rows` x `max_col` bound obtained from `p`
/// by adding a horizontal strip of `m` boxes (no two in the same column).
fn horizontal_strips(p: &[u32], m: u32, max_rows: usize, max_col: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if p.len() > max_rows || p.first().copied().unwrap_or(0) > max_col {
        return out;
    }
    let stop = (p.len() + 1).min(max_rows);
    let mut shape = Vec::with_capacity(stop);
    fn rec(
        p: &[u32],
        row: usize,
        stop: usize,
        left: u32,
        max_col: u32,
        shape: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if row == stop {
            if left == 0 {
                out.push(trim(shape));
            }
            return;
        }
        let base = p.get(row).copied().unwrap_or(0);
        // Interlacing: p_row <= new_row <= p_{row-1}.
        let cap = if row == 0 {
            (base + left).min(max_col)
        } else {
            p[row - 1].min(base + left)
        };
        for v in base..=cap {
            shape.push(v);
            rec(p, row + 1, stop, left - (v - base), max_col, shape, out);
            shape.pop();
        }
    }
    rec(p, 0, stop, m, max_col, &mut shape, &mut out);
    out
}

/// Permutations of `0..k` with their signs, in a deterministic order.
fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    fn heap(k: usize, current: &mut Vec<usize>, sign: &mut i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == 1 {
            out.push((current.clone(), *sign));
            return;
        }
        for i in 0..k {
            heap(k - 1, current, sign, out);
            if i < k - 1 {
                if k.is_multiple_of(2) {
                    current.swap(i, k - 1);
                } else {
                    current.swap(0, k - 1);
                }
                *sign = -*sign;
            }
        }
    }
    let mut sign = 1;
    heap(k, &mut current, &mut sign, &mut out);
    out
}

/// Coefficient of the point class in `sigma_{I_1} ... sigma_{I_s}`; zero
/// whenever the codimensions do not sum to `r(n-r)`.
pub fn intersection_number(indices: &[SchubertIndex]) -> Result<u64> {
    let Some(first) = indices.first() else {
        return Err(Error::MixedShapes);
    };
    let (r, n) = (first.r(), first.n());
    if indices.iter().any(|i| i.r() != r || i.n() != n) {
        return Err(Error::MixedShapes);
    }
    let target = r * (n - r);
    let total: u32 = indices.iter().map(SchubertIndex::codim).sum();
    if total != target {
        return Ok(0);
    }
    if indices.len() == 1 {
        return Ok(u64::from(indices[0].partition().is_point()));
    }
    let mut product: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    product.insert(indices[0].partition().trimmed(), 1);
    for index in &indices[1..indices.len() - 1] {
        let q = index.partition().trimmed();
        let mut next: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for (shape, c) in &product {
            for (grown, lr) in schur_product_terms(shape, &q, r as usize, Some(n - r)) {
                *next.entry(grown).or_insert(0) += c * lr;
            }
        }
        product = next;
    }
    // Poincare duality: the point-class coefficient of P * sigma_J is the
    // coefficient of the box complement of mu(J) in P.
    let complement = indices[indices.len() - 1].partition().complement().trimmed();
    Ok(product.get(&complement).copied().unwrap_or(0))
}

/// All `s`-tuples of cardinality-`r` Schubert indices in Gr(r, n) whose
/// product is exactly the point class, in lexicographic order.
pub fn enumerate_point_tuples(n: u32, s: u32, r: u32) -> Result<Vec<Vec<SchubertIndex>>> {
    if n < 2 || r == 0 || r > n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "Gr({r}, {n}) requires 1 <= r <= n - 1"
        )));
    }
    if s == 0 {
        return Err(Error::BadConeParameters { n, s });
    }
    let subsets = all_subsets(n, r);
    let target = r * (n - r);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut seed = BTreeMap::new();
    seed.insert(Vec::new(), 1u64);

    struct Ctx<'a> {
        subsets: &'a [SchubertIndex],
        r: u32,
        n: u32,
        s: u32,
        target: u32,
        out: &'a mut Vec<Vec<SchubertIndex>>,
    }
    fn rec(ctx: &mut Ctx, chosen: &mut Vec<usize>, used: u32, product: &BTreeMap<Vec<u32>, u64>) {
        if chosen.len() as u32 == ctx.s - 1 {
            for index in ctx.subsets.iter() {
                if used + index.codim() != ctx.target {
                    continue;
                }
                let complement = index.partition().complement().trimmed();
                if product.get(&complement).copied().unwrap_or(0) == 1 {
                    let mut tuple: Vec<SchubertIndex> =
                        chosen.iter().map(|&i| ctx.subsets[i].clone()).collect();
                    tuple.push(index.clone());
                    ctx.out.push(tuple);
                }
            }
            return;
        }
        for (k, index) in ctx.subsets.iter().enumerate() {
            let codim = index.codim();
            if used + codim > ctx.target {
                continue;
            }
            let q = index.partition().trimmed();
            let mut next: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for (shape, c) in product {
                for (grown, lr) in
                    schur_product_terms(shape, &q, ctx.r as usize, Some(ctx.n - ctx.r))
                {
                    *next.entry(grown).or_insert(0) += c * lr;
                }
            }
            if next.is_empty() {
                continue;
            }
            chosen.push(k);
            rec(ctx, chosen, used + codim, &next);
            chosen.pop();
        }
    }

    let mut ctx = Ctx {
        subsets: &subsets,
        r,
        n,
        s,
        target,
        out: &mut out,
    };
    rec(&mut ctx, &mut chosen, 0, &seed);
    Ok(out)
}

/// All r-subsets of `{1, ..., n}` in lexicographic order.
fn all_subsets(n: u32, r: u32) -> Vec<SchubertIndex> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(n: u32, r: u32, start: u32, current: &mut Vec<u32>, out: &mut Vec<SchubertIndex>) {
        if current.len() as u32 == r {
            out.push(SchubertIndex::new(n, current.clone()).expect("subset is valid"));
            return;
        }
        let needed = r - current.len() as u32;
        for e in start..=(n - needed + 1) {
            current.push(e);
            rec(n, r, e + 1, current, out);
            current.pop();
        }
    }
    rec(n, r, 1, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u32, elements: &[u32]) -> SchubertIndex {
        SchubertIndex::new(n, elements.to_vec()).unwrap()
    }

    fn part(rows: u32, cols: u32, parts: &[u32]) -> BoxPartition {
        BoxPartition::new(rows, cols, parts).unwrap()
    }

    #[test]
    fn codim_examples() {
        assert_eq!(idx(5, &[1, 2]).codim(), 2 * 3);
        assert_eq!(idx(5, &[4, 5]).codim(), 0);
        assert_eq!(idx(4, &[2, 3]).codim(), 2);
    }

    #[test]
    fn partition_examples() {
        assert_eq!(idx(4, &[2, 3]).partition().parts(), &[1, 1]);
        assert_eq!(idx(4, &[2, 4]).partition().parts(), &[1, 0]);
        assert_eq!(idx(6, &[5, 6]).partition().parts(), &[0, 0]);
    }

    #[test]
    fn partition_bijection_round_trip() {
        for n in 2..=8 {
            for r in 1..n {
                for index in all_subsets(n, r) {
                    let back = SchubertIndex::from_partition(&index.partition(), n).unwrap();
                    assert_eq!(back, index);
                }
            }
        }
    }

    #[test]
    fn dual_partition_size_identity() {
        for n in 2..=6 {
            for r in 1..n {
                for index in all_subsets(n, r) {
                    let dual = index.dual_partition();
                    assert_eq!(dual.rows(), n - r);
                    assert_eq!(dual.cols(), r);
                    assert_eq!(dual.size(), r * (n - r) - index.codim());
                }
            }
        }
    }

    #[test]
    fn dual_partition_of_extremes() {
        let fundamental = idx(5, &[4, 5]);
        assert_eq!(fundamental.dual_partition().parts(), &[2, 2, 2]);
        let point = idx(5, &[1, 2]);
        assert!(point.dual_partition().is_zero());
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(
            idx(9, &[3, 7, 8]).permutation(),
            vec![3, 7, 8, 1, 2, 4, 5, 6, 9]
        );
        assert_eq!(idx(4, &[1, 2]).permutation(), vec![1, 2, 3, 4]);
        assert_eq!(idx(5, &[4, 5]).permutation(), vec![4, 5, 1, 2, 3]);
        let index = idx(9, &[3, 6, 9]);
        let w = index.permutation();
        let inv = index.permutation_inverse();
        for b in 1..=9u32 {
            assert_eq!(w[inv[b as usize - 1] as usize - 1], b);
        }
    }

    #[test]
    fn raise_and_lower() {
        assert_eq!(idx(4, &[2, 3]).raise(2).unwrap(), idx(4, &[1, 3]));
        assert_eq!(idx(9, &[3, 7, 8]).raise(3).unwrap(), idx(9, &[2, 7, 8]));
        assert!(idx(4, &[2, 3]).raise(3).is_err());
        assert!(idx(4, &[2, 3]).raise(4).is_err());

        assert_eq!(idx(4, &[1, 3]).lower(1).unwrap(), idx(4, &[2, 3]));
        assert_eq!(idx(4, &[1, 3]).lower(3).unwrap(), idx(4, &[1, 4]));
        assert!(idx(4, &[1, 4]).lower(4).is_err());

        // Inverse moves.
        for index in all_subsets(6, 3) {
            for b in 2..=6u32 {
                if let Ok(raised) = index.raise(b) {
                    assert_eq!(raised.lower(b - 1).unwrap(), index);
                    assert_eq!(raised.codim(), index.codim() + 1);
                }
            }
        }
    }

    #[test]
    fn lr_multiply_examples() {
        let product = lr_multiply(&part(2, 2, &[1, 1]), &part(2, 2, &[1, 0])).unwrap();
        assert_eq!(product.terms().len(), 1);
        assert_eq!(product.coefficient(&part(2, 2, &[2, 1])), 1);

        let product = lr_multiply(&part(2, 2, &[2, 1]), &part(2, 2, &[1, 0])).unwrap();
        assert_eq!(product.terms().len(), 1);
        assert_eq!(product.coefficient(&part(2, 2, &[2, 2])), 1);

        let p = part(3, 2, &[2, 1, 0]);
        let product = lr_multiply(&p, &part(3, 2, &[0, 0, 0])).unwrap();
        assert_eq!(product.terms().len(), 1);
        assert_eq!(product.coefficient(&p), 1);

        assert!(lr_multiply(&part(2, 2, &[1, 1]), &part(2, 3, &[1, 0])).is_err());
    }

    #[test]
    fn lr_degree_grading() {
        let p = part(3, 3, &[2, 1, 0]);
        let q = part(3, 3, &[2, 2, 1]);
        for nu in lr_multiply(&p, &q).unwrap().terms().keys() {
            assert_eq!(nu.size(), p.size() + q.size());
        }
    }

    #[test]
    fn backends_agree_on_small_boxes() {
        for rows in 1..=3u32 {
            for cols in 1..=3u32 {
                let shapes = all_box_partitions(rows, cols);
                for p in &shapes {
                    for q in &shapes {
                        assert_eq!(
                            lr_multiply(p, q).unwrap(),
                            pieri_multiply(p, q).unwrap(),
                            "disagreement at {:?} * {:?}",
                            p.parts(),
                            q.parts()
                        );
                    }
                }
            }
        }
    }

    fn all_box_partitions(rows: u32, cols: u32) -> Vec<BoxPartition> {
        let mut out = Vec::new();
        let mut parts = Vec::new();
        fn rec(rows: u32, cols: u32, max: u32, parts: &mut Vec<u32>, out: &mut Vec<BoxPartition>) {
            if parts.len() as u32 == rows {
                out.push(BoxPartition::new(rows, cols, parts).unwrap());
                return;
            }
            for v in (0..=max).rev() {
                parts.push(v);
                rec(rows, cols, v, parts, out);
                parts.pop();
            }
        }
        rec(rows, cols, cols, &mut parts, &mut out);
        out
    }

    #[test]
    fn product_commutes_and_associates() {
        let shapes = all_box_partitions(3, 3);
        let step = 7;
        for (i, p) in shapes.iter().enumerate().step_by(step) {
            for (j, q) in shapes.iter().enumerate().step_by(step) {
                assert_eq!(lr_multiply(p, q).unwrap(), lr_multiply(q, p).unwrap());
                let r = &shapes[(i * 13 + j * 5) % shapes.len()];
                let left = multiply_vector(&lr_multiply(p, q).unwrap(), r);
                let right = multiply_vector(&lr_multiply(q, r).unwrap(), p);
                assert_eq!(left, right);
            }
        }
    }

    fn multiply_vector(v: &SchubertClassVector, q: &BoxPartition) -> BTreeMap<BoxPartition, u64> {
        let mut out = BTreeMap::new();
        for (p, c) in v.terms() {
            for (nu, lr) in lr_multiply(p, q).unwrap().terms() {
                *out.entry(nu.clone()).or_insert(0) += c * lr;
            }
        }
        out
    }

    #[test]
    fn intersection_number_examples() {
        let triple = [idx(4, &[2, 3]), idx(4, &[2, 4]), idx(4, &[2, 4])];
        assert_eq!(intersection_number(&triple).unwrap(), 1);

        let triple = [idx(9, &[3, 7, 8]), idx(9, &[3, 6, 9]), idx(9, &[3, 6, 9])];
        assert_eq!(intersection_number(&triple).unwrap(), 1);

        let triple = [
            idx(8, &[3, 4, 5, 7, 8]),
            idx(8, &[2, 3, 5, 6, 8]),
            idx(8, &[2, 3, 5, 6, 8]),
        ];
        assert_eq!(intersection_number(&triple).unwrap(), 1);

        // Degree obstruction.
        let triple = [idx(4, &[2, 3]), idx(4, &[2, 3]), idx(4, &[2, 4])];
        assert_eq!(intersection_number(&triple).unwrap(), 0);

        // Mixed shapes rejected.
        assert!(intersection_number(&[idx(4, &[2, 3]), idx(5, &[2, 3])]).is_err());
    }

    #[test]
    fn intersection_number_permutation_and_duality_invariance() {
        for n in 2..=4u32 {
            for r in 1..n {
                let subsets = all_subsets(n, r);
                for a in &subsets {
                    for b in &subsets {
                        for c in &subsets {
                            if a.codim() + b.codim() + c.codim() != r * (n - r) {
                                continue;
                            }
                            let v = intersection_number(&[a.clone(), b.clone(), c.clone()])
                                .unwrap();
                            let perms = [
                                [b.clone(), a.clone(), c.clone()],
                                [c.clone(), b.clone(), a.clone()],
                                [b.clone(), c.clone(), a.clone()],
                            ];
                            for perm in perms {
                                assert_eq!(intersection_number(&perm).unwrap(), v);
                            }
                            let duals = [a.dual(), b.dual(), c.dual()];
                            assert_eq!(intersection_number(&duals).unwrap(), v);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_index_examples() {
        // In Gr(1,2) duality fixes both classes.
        assert_eq!(idx(2, &[1]).dual(), idx(2, &[1]));
        // The dual partition is the transpose.
        for n in 2..=6 {
            for r in 1..n {
                for index in all_subsets(n, r) {
                    let dual = index.dual();
                    assert_eq!(dual.dual(), index);
                    assert_eq!(
                        dual.partition(),
                        index.partition().transpose(),
                        "dual of {index} in n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn point_tuples_for_projective_line() {
        let tuples = enumerate_point_tuples(2, 3, 1).unwrap();
        let expected = vec![
            vec![idx(2, &[1]), idx(2, &[2]), idx(2, &[2])],
            vec![idx(2, &[2]), idx(2, &[1]), idx(2, &[2])],
            vec![idx(2, &[2]), idx(2, &[2]), idx(2, &[1])],
        ];
        assert_eq!(tuples, expected);
    }

    #[test]
    fn point_tuples_for_projective_plane() {
        let tuples = enumerate_point_tuples(3, 3, 1).unwrap();
        assert!(tuples.contains(&vec![idx(3, &[1]), idx(3, &[3]), idx(3, &[3])]));
        assert!(tuples.contains(&vec![idx(3, &[3]), idx(3, &[2]), idx(3, &[2])]));
        assert_eq!(tuples.len(), 6);
        for tuple in &tuples {
            let total: u32 = tuple.iter().map(SchubertIndex::codim).sum();
            assert_eq!(total, 2);
            assert_eq!(intersection_number(tuple).unwrap(), 1);
        }
    }

    #[test]
    fn point_tuples_deterministic() {
        assert_eq!(
            enumerate_point_tuples(4, 3, 2).unwrap(),
            enumerate_point_tuples(4, 3, 2).unwrap()
        );
    }
}
