//! Characters of `GL(m)` and `GL(m) × GL(n)`.
//!
//! Irreducible rational representations are indexed by their dominant
//! highest weight ([`GLWeight`]). A [`VirtualCharacter`] is a finitely
//! supported signed combination of pairs of such weights, one for each
//! factor. Tensor products are decomposed with Littlewood–Richardson
//! coefficients, which are counted directly from LR skew tableaux and
//! memoized in a process-wide table.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::linalg;
use crate::partitions::{Partition, SkewShape};

/// Dominant weight of a rational irreducible `GL(m)`-representation.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GLWeight(Vec<i64>);

impl GLWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("weight {entries:?} is not weakly decreasing")));
        }
        Ok(GLWeight(entries))
    }

    /// The zero weight of `GL(m)`.
    pub fn zero(m: usize) -> Self {
        GLWeight(vec![0; m])
    }

    /// `λ` padded with zeros to length `m`, if it fits.
    pub fn from_partition(lambda: &Partition, m: usize) -> Option<Self> {
        lambda
            .padded(m)
            .map(|v| GLWeight(v.into_iter().map(|x| x as i64).collect()))
    }

    /// Highest weight of `S_λ(W*)` for `dim W = m`: `λ` negated and reversed.
    pub fn dual_of_partition(lambda: &Partition, m: usize) -> Option<Self> {
        Self::from_partition(lambda, m).map(|w| w.dual())
    }

    /// Highest weight of the classical rational Schur functor `S_[α;β](C^m)`:
    /// `(α_1, …, α_r, 0, …, 0, −β_s, …, −β_1)`. `None` unless `ℓ(α) + ℓ(β) <= m`.
    pub fn mixed(alpha: &Partition, beta: &Partition, m: usize) -> Option<Self> {
        if alpha.len() + beta.len() > m {
            return None;
        }
        let mut v = vec![0i64; m];
        for (i, &a) in alpha.parts().iter().enumerate() {
            v[i] = a as i64;
        }
        for (i, &b) in beta.parts().iter().enumerate() {
            v[m - 1 - i] = -(b as i64);
        }
        Some(GLWeight(v))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Weight of the dual representation.
    pub fn dual(&self) -> GLWeight {
        GLWeight(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Twist by `det^k`.
    pub fn shift(&self, k: i64) -> GLWeight {
        GLWeight(self.0.iter().map(|x| x + k).collect())
    }

    pub fn last(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    /// The weight as a partition, if all entries are nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.last() < 0 {
            return None;
        }
        Partition::new(self.0.iter().map(|&x| x as usize).collect()).ok()
    }

    /// Sum of the entries (the degree of the determinant twist on scalars).
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Littlewood–Richardson fillings

/// Walks every semistandard filling of `shape` whose reverse reading word is
/// a lattice word, calling `visit` with the content of each. When `content`
/// is given, only fillings of exactly that content are produced.
fn for_each_lr_filling(shape: &SkewShape, content: Option<&[usize]>, visit: &mut dyn FnMut(&[usize])) {
    let rows = shape.rows();
    let mut cells = Vec::with_capacity(shape.size());
    for r in 0..rows {
        let (start, end) = shape.row_range(r);
        for c in (start..end).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; shape.outer().get(r)]).collect();
    let labels = content.map_or(cells.len(), |c| c.len());
    let mut counts = vec![0usize; labels + 1];
    let mut walker = LrWalker {
        shape,
        cells: &cells,
        grid: &mut grid,
        counts: &mut counts,
        content,
        visit,
    };
    walker.step(0, 0);
}

struct LrWalker<'a> {
    shape: &'a SkewShape,
    cells: &'a [(usize, usize)],
    grid: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
    content: Option<&'a [usize]>,
    visit: &'a mut dyn FnMut(&[usize]),
}

impl LrWalker<'_> {
    /// `used` is the number of distinct labels placed so far.
    fn step(&mut self, idx: usize, used: usize) {
        if idx == self.cells.len() {
            let content: Vec<usize> = self.counts[..used].to_vec();
            (self.visit)(&content);
            return;
        }
        let (r, c) = self.cells[idx];
        let mut hi = used + 1;
        if c + 1 < self.shape.outer().get(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        let mut lo = 1;
        if r > 0 && c >= self.shape.inner().get(r - 1) {
            lo = self.grid[r - 1][c] + 1;
        }
        if let Some(content) = self.content {
            hi = hi.min(content.len());
        }
        for v in lo..=hi {
            let k = v - 1;
            if k > 0 && self.counts[k] + 1 > self.counts[k - 1] {
                continue;
            }
            if let Some(content) = self.content {
                if self.counts[k] + 1 > content[k] {
                    continue;
                }
            }
            self.counts[k] += 1;
            self.grid[r][c] = v;
            self.step(idx + 1, used.max(v));
            self.counts[k] -= 1;
        }
        self.grid[r][c] = 0;
    }
}

type LrKey = (Partition, Partition, Partition);
type Expansion<K> = Arc<BTreeMap<K, u64>>;

static LR_MEMO: Lazy<DashMap<LrKey, u64>> = Lazy::new(DashMap::new);
static SKEW_MEMO: Lazy<DashMap<(Partition, Partition), Expansion<Partition>>> = Lazy::new(DashMap::new);
static TENSOR_MEMO: Lazy<DashMap<(GLWeight, GLWeight), Expansion<GLWeight>>> = Lazy::new(DashMap::new);

/// The Littlewood–Richardson coefficient `c^ν_{λ,μ}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if lambda.is_empty() || mu.is_empty() {
        return 1;
    }
    // symmetric in λ, μ; canonical key halves the table
    let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    let key = (a.clone(), b.clone(), nu.clone());
    if let Some(v) = LR_MEMO.get(&key) {
        return *v;
    }
    let shape = SkewShape::new(nu.clone(), a.clone()).expect("containment checked above");
    let mut count = 0u64;
    for_each_lr_filling(&shape, Some(b.parts()), &mut |_| count += 1);
    LR_MEMO.insert(key, count);
    count
}

/// `S_λ ⊗ S_μ = ⊕ S_ν^{c^ν_{λ,μ}}`, restricted to `ℓ(ν) <= max_length`.
pub fn schur_product(lambda: &Partition, mu: &Partition, max_length: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let total = lambda.size() + mu.size();
    let max_len = max_length.min(lambda.len() + mu.len());
    let cap = lambda.first() + mu.first();
    let mut cur = Vec::new();
    product_candidates(lambda, mu, total, max_len, cap, &mut cur, &mut |nu| {
        let c = lr_coefficient(lambda, mu, nu);
        if c != 0 {
            out.insert(nu.clone(), c);
        }
    });
    out
}

/// Enumerates partitions `ν ⊇ λ ∪ μ` of the given size with bounded length and first part.
fn product_candidates(
    lambda: &Partition,
    mu: &Partition,
    rest: usize,
    max_len: usize,
    cap: usize,
    cur: &mut Vec<usize>,
    visit: &mut dyn FnMut(&Partition),
) {
    let i = cur.len();
    let floor = lambda.get(i).max(mu.get(i));
    if rest == 0 {
        if floor == 0 {
            let nu = Partition::new(cur.clone()).expect("weakly decreasing by construction");
            visit(&nu);
        }
        return;
    }
    if i == max_len || floor > cap {
        return;
    }
    // the remaining rows must still be able to cover λ and μ below row i
    let lower_need: usize = (i + 1..max_len.max(i + 1))
        .map(|j| lambda.get(j).max(mu.get(j)))
        .sum();
    for v in (floor.max(1)..=cap.min(rest)).rev() {
        if rest - v < lower_need {
            continue;
        }
        cur.push(v);
        product_candidates(lambda, mu, rest - v, max_len, v, cur, visit);
        cur.pop();
    }
}

/// Expansion of the skew Schur functor `S_{outer/inner}` into straight shapes:
/// `{ν ↦ c^{outer}_{inner,ν}}`.
pub fn skew_expand(shape: &SkewShape) -> Arc<BTreeMap<Partition, u64>> {
    let key = (shape.outer().clone(), shape.inner().clone());
    if let Some(v) = SKEW_MEMO.get(&key) {
        return Arc::clone(&v);
    }
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    if shape.inner().is_empty() {
        out.insert(shape.outer().clone(), 1);
    } else {
        for_each_lr_filling(shape, None, &mut |content| {
            let nu = Partition::new(content.to_vec()).expect("lattice words have partition content");
            *out.entry(nu).or_insert(0) += 1;
        });
    }
    let out = Arc::new(out);
    SKEW_MEMO.insert(key, Arc::clone(&out));
    out
}

/// Convenience wrapper: expansion of `outer/inner`, erroring if `inner ⊄ outer`.
pub fn skew_expand_parts(outer: &Partition, inner: &Partition) -> Result<Arc<BTreeMap<Partition, u64>>> {
    Ok(skew_expand(&SkewShape::new(outer.clone(), inner.clone())?))
}

/// Decomposition of the tensor product of two rational `GL(m)` irreducibles.
pub fn rational_tensor(a: &GLWeight, b: &GLWeight) -> Result<Arc<BTreeMap<GLWeight, u64>>> {
    if a.rank() != b.rank() {
        return Err(Error::LengthMismatch {
            expected: a.rank(),
            got: b.rank(),
        });
    }
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(v) = TENSOR_MEMO.get(&key) {
        return Ok(Arc::clone(&v));
    }
    let k = 0.max(-a.last()).max(-b.last());
    let out = Arc::new(rational_tensor_with_shift(a, b, k)?);
    TENSOR_MEMO.insert(key, Arc::clone(&out));
    Ok(out)
}

/// `rational_tensor` computed with an explicit determinant twist `k`; any `k`
/// making both shifted weights nonnegative gives the same answer.
pub fn rational_tensor_with_shift(a: &GLWeight, b: &GLWeight, k: i64) -> Result<BTreeMap<GLWeight, u64>> {
    if a.rank() != b.rank() {
        return Err(Error::LengthMismatch {
            expected: a.rank(),
            got: b.rank(),
        });
    }
    let m = a.rank();
    let (Some(pa), Some(pb)) = (a.shift(k).to_partition(), b.shift(k).to_partition()) else {
        return Err(Error::Internal(format!("shift {k} does not make {a} and {b} polynomial")));
    };
    let mut out = BTreeMap::new();
    for (nu, c) in schur_product(&pa, &pb, m) {
        let w = GLWeight::from_partition(&nu, m).expect("length truncated to m").shift(-2 * k);
        out.insert(w, c);
    }
    Ok(out)
}

/// Weyl dimension formula `∏_{i<j} (w_i − w_j + j − i)/(j − i)`.
pub fn weyl_dim(w: &GLWeight) -> BigInt {
    let e = w.entries();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            num *= BigInt::from(e[i] - e[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    num / den
}

/// Value of the irreducible `GL(m)` character with highest weight `w` at the
/// diagonal matrix `x` (all entries nonzero), via Jacobi–Trudi.
pub fn schur_eval(w: &GLWeight, x: &[BigRational]) -> Result<BigRational> {
    if w.rank() != x.len() {
        return Err(Error::LengthMismatch {
            expected: w.rank(),
            got: x.len(),
        });
    }
    if x.iter().any(|v| v.is_zero()) {
        return Err(Error::SingularEvaluation);
    }
    let k = 0.max(-w.last());
    let lambda = w.shift(k).to_partition().expect("shifted to nonnegative");
    let l = lambda.len();
    let h = linalg::complete_homogeneous(x, lambda.first() + l);
    let matrix: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda.get(i) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        BigRational::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    let mut value = linalg::determinant(matrix);
    if k > 0 {
        let det: BigRational = x.iter().fold(BigRational::one(), |acc, v| acc * v);
        value /= num_traits::pow(det, k as usize);
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// Virtual characters

/// Signed combination of irreducibles of `GL(m) × GL(n)`.
///
/// A character of `GL(m)` alone is stored with `n = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VirtualCharacter {
    m: usize,
    n: usize,
    terms: BTreeMap<(GLWeight, GLWeight), i64>,
}

impl VirtualCharacter {
    pub fn zero(m: usize, n: usize) -> Self {
        VirtualCharacter {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn trivial(m: usize, n: usize) -> Self {
        let mut c = Self::zero(m, n);
        c.terms.insert((GLWeight::zero(m), GLWeight::zero(n)), 1);
        c
    }

    /// Single irreducible `w0 ⊠ w1`.
    pub fn irreducible(w0: GLWeight, w1: GLWeight) -> Self {
        let mut c = Self::zero(w0.rank(), w1.rank());
        c.terms.insert((w0, w1), 1);
        c
    }

    /// A `GL(m)` character (second factor trivial of rank zero).
    pub fn classical(w: GLWeight) -> Self {
        Self::irreducible(w, GLWeight::default())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ranks(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> &BTreeMap<(GLWeight, GLWeight), i64> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GLWeight, &GLWeight, i64)> {
        self.terms.iter().map(|((a, b), &c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, w0: &GLWeight, w1: &GLWeight) -> i64 {
        self.terms.get(&(w0.clone(), w1.clone())).copied().unwrap_or(0)
    }

    /// Adds `mult` copies of `w0 ⊠ w1`.
    pub fn add_term(&mut self, w0: GLWeight, w1: GLWeight, mult: i64) -> Result<()> {
        if w0.rank() != self.m || w1.rank() != self.n {
            return Err(Error::RankMismatch(self.m, self.n, w0.rank(), w1.rank()));
        }
        self.add_term_unchecked(w0, w1, mult);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, w0: GLWeight, w1: GLWeight, mult: i64) {
        if mult == 0 {
            return;
        }
        let key = (w0, w1);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    fn check_ranks(&self, other: &VirtualCharacter) -> Result<()> {
        if self.ranks() != other.ranks() {
            return Err(Error::RankMismatch(self.m, self.n, other.m, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &VirtualCharacter) -> Result<()> {
        self.add_scaled(other, 1)
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &VirtualCharacter, k: i64) -> Result<()> {
        self.check_ranks(other)?;
        for ((a, b), &c) in &other.terms {
            self.add_term_unchecked(a.clone(), b.clone(), c * k);
        }
        Ok(())
    }

    pub fn sub(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> VirtualCharacter {
        if k == 0 {
            return Self::zero(self.m, self.n);
        }
        VirtualCharacter {
            m: self.m,
            n: self.n,
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Character of the tensor product (both factors decomposed with LR coefficients).
    pub fn tensor(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        self.check_ranks(other)?;
        let mut out = Self::zero(self.m, self.n);
        for ((a0, a1), &ca) in &self.terms {
            for ((b0, b1), &cb) in &other.terms {
                let t0 = rational_tensor(a0, b0)?;
                let t1 = rational_tensor(a1, b1)?;
                for (w0, &c0) in t0.iter() {
                    for (w1, &c1) in t1.iter() {
                        out.add_term_unchecked(w0.clone(), w1.clone(), ca * cb * (c0 * c1) as i64);
                    }
                }
            }
        }
        Ok(out)
    }

    /// External product of a `GL(m)` character and a `GL(n)` character.
    pub fn external_product(a: &VirtualCharacter, b: &VirtualCharacter) -> Result<VirtualCharacter> {
        if a.n != 0 || b.n != 0 {
            return Err(Error::RankMismatch(a.m, a.n, b.m, b.n));
        }
        let mut out = Self::zero(a.m, b.m);
        for ((w0, _), &ca) in &a.terms {
            for ((w1, _), &cb) in &b.terms {
                out.add_term_unchecked(w0.clone(), w1.clone(), ca * cb);
            }
        }
        Ok(out)
    }

    /// Character of the dual representation.
    pub fn dual(&self) -> VirtualCharacter {
        VirtualCharacter {
            m: self.m,
            n: self.n,
            terms: self.terms.iter().map(|((a, b), &c)| ((a.dual(), b.dual()), c)).collect(),
        }
    }

    /// Exchanges the two factors: a `GL(m) × GL(n)` character becomes a `GL(n) × GL(m)` one.
    pub fn swap(&self) -> VirtualCharacter {
        VirtualCharacter {
            m: self.n,
            n: self.m,
            terms: self.terms.iter().map(|((a, b), &c)| ((b.clone(), a.clone()), c)).collect(),
        }
    }

    /// `Σ mult · dim(w0) · dim(w1)`; negative for some virtual characters.
    pub fn total_dim(&self) -> BigInt {
        self.terms
            .iter()
            .map(|((a, b), &c)| BigInt::from(c) * weyl_dim(a) * weyl_dim(b))
            .sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Value at `diag(x) × diag(y)`.
    pub fn specialize(&self, x: &[BigRational], y: &[BigRational]) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for ((a, b), &c) in &self.terms {
            let v = schur_eval(a, x)? * schur_eval(b, y)?;
            total += v * BigRational::from_integer(BigInt::from(c));
        }
        Ok(total)
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}·", c.abs())?;
            }
            write!(f, "{a}|{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VirtualCharacter[{}|{}]({self})", self.m, self.n)
    }
}

/// A cohomologically graded character: degree `k` ↦ character of `H^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    m: usize,
    n: usize,
    by_degree: BTreeMap<usize, VirtualCharacter>,
}

impl GradedCharacter {
    pub fn zero(m: usize, n: usize) -> Self {
        GradedCharacter {
            m,
            n,
            by_degree: BTreeMap::new(),
        }
    }

    /// `c` placed in degree `degree`.
    pub fn concentrated(degree: usize, c: VirtualCharacter) -> Self {
        let mut g = Self::zero(c.m(), c.n());
        g.add_in_degree(degree, &c).expect("ranks agree by construction");
        g
    }

    pub fn ranks(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn add_in_degree(&mut self, degree: usize, c: &VirtualCharacter) -> Result<()> {
        if c.ranks() != (self.m, self.n) {
            return Err(Error::RankMismatch(self.m, self.n, c.m(), c.n()));
        }
        let slot = self
            .by_degree
            .entry(degree)
            .or_insert_with(|| VirtualCharacter::zero(self.m, self.n));
        slot.add_assign(c)?;
        if slot.is_zero() {
            self.by_degree.remove(&degree);
        }
        Ok(())
    }

    pub fn add_assign(&mut self, other: &GradedCharacter) -> Result<()> {
        for (&d, c) in &other.by_degree {
            self.add_in_degree(d, c)?;
        }
        Ok(())
    }

    /// Character in degree `k` (zero if absent).
    pub fn degree(&self, k: usize) -> VirtualCharacter {
        self.by_degree
            .get(&k)
            .cloned()
            .unwrap_or_else(|| VirtualCharacter::zero(self.m, self.n))
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_degree.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &VirtualCharacter)> {
        self.by_degree.iter().map(|(&d, c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.by_degree.is_empty()
    }

    /// True iff every nonzero degree is even.
    pub fn is_even_supported(&self) -> bool {
        self.by_degree.keys().all(|d| d % 2 == 0)
    }

    pub fn total_dim(&self) -> BigInt {
        self.by_degree.values().map(|c| c.total_dim()).sum()
    }

    /// `Σ_k (−1)^k [H^k]`.
    pub fn euler_characteristic(&self) -> VirtualCharacter {
        let mut out = VirtualCharacter::zero(self.m, self.n);
        for (&d, c) in &self.by_degree {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            out.add_scaled(c, sign).expect("ranks agree");
        }
        out
    }

    /// Per-degree `self − other`, listing only degrees where they differ.
    pub fn diff(&self, other: &GradedCharacter) -> Result<BTreeMap<usize, VirtualCharacter>> {
        if self.ranks() != other.ranks() {
            return Err(Error::RankMismatch(self.m, self.n, other.m, other.n));
        }
        let mut out = BTreeMap::new();
        let degrees: std::collections::BTreeSet<usize> = self.degrees().chain(other.degrees()).collect();
        for d in degrees {
            let delta = self.degree(d).sub(&other.degree(d))?;
            if !delta.is_zero() {
                out.insert(d, delta);
            }
        }
        Ok(out)
    }

    pub fn swap(&self) -> GradedCharacter {
        GradedCharacter {
            m: self.n,
            n: self.m,
            by_degree: self.by_degree.iter().map(|(&d, c)| (d, c.swap())).collect(),
        }
    }
}

impl fmt::Debug for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.by_degree.iter()).finish()
    }
}
