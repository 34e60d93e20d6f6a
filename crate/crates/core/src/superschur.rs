//! Schur functors of super vector spaces `V = V0|V1`, restricted to
//! `GL(V0) × GL(V1)`, and the rational Schur functors `S_[λ;μ](V)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;

use crate::characters::{rational_tensor, skew_expand, skew_expand_parts, GLWeight, VirtualCharacter};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partitions::{partitions_in_box, Partition, SkewShape};

/// Super dimension `m|n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperDim {
    pub m: usize,
    pub n: usize,
}

impl SuperDim {
    pub fn new(m: usize, n: usize) -> Self {
        SuperDim { m, n }
    }

    /// Parity shift `V[1]`: dimension `n|m`.
    pub fn shifted(self) -> Self {
        SuperDim { m: self.n, n: self.m }
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.m, self.n)
    }
}

/// Weight `(a_1, …, a_m | a_{m+1}, …, a_{m+n})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperWeight {
    pub even: GLWeight,
    pub odd: GLWeight,
}

impl fmt::Display for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |w: &GLWeight| w.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.even), join(&self.odd))
    }
}

static SUPER_SCHUR_MEMO: Lazy<DashMap<(Partition, SuperDim), Arc<VirtualCharacter>>> = Lazy::new(DashMap::new);

/// `S_λ(V0|V1) = ⊕_{μ ⊆ λ} S_μ(V0) ⊠ S_{λᵀ/μᵀ}(V1)`.
pub fn super_schur_decompose(lambda: &Partition, d: SuperDim) -> Arc<VirtualCharacter> {
    let key = (lambda.clone(), d);
    if let Some(v) = SUPER_SCHUR_MEMO.get(&key) {
        return Arc::clone(&v);
    }
    let mut out = VirtualCharacter::zero(d.m, d.n);
    let lt = lambda.transpose();
    for mu in lambda.subpartitions() {
        let Some(w0) = GLWeight::from_partition(&mu, d.m) else {
            continue;
        };
        let skew = SkewShape::new(lt.clone(), mu.transpose()).expect("μ ⊆ λ");
        for (nu, &c) in skew_expand(&skew).iter() {
            if let Some(w1) = GLWeight::from_partition(nu, d.n) {
                out.add_term_unchecked(w0.clone(), w1, c as i64);
            }
        }
    }
    let out = Arc::new(out);
    SUPER_SCHUR_MEMO.insert(key, Arc::clone(&out));
    out
}

/// `S_λ(V*)` for a super space `V` of dimension `d`.
pub fn super_schur_dual(lambda: &Partition, d: SuperDim) -> VirtualCharacter {
    super_schur_decompose(lambda, d).dual()
}

/// Character of `S_{outer/inner}(V)` (or of `S_{outer/inner}(V*)` when `dual`).
pub fn super_skew_char(outer: &Partition, inner: &Partition, d: SuperDim, dual: bool) -> Result<VirtualCharacter> {
    let mut out = VirtualCharacter::zero(d.m, d.n);
    for (nu, &c) in skew_expand_parts(outer, inner)?.iter() {
        out.add_scaled(&super_schur_decompose(nu, d), c as i64)?;
    }
    Ok(if dual { out.dual() } else { out })
}

/// Degree-`k` piece of `Sym(A ⊗ B)`: `λ ↦ (S_λ A, S_λ B)` over `|λ| = k`, dropping vanishing pairs.
pub fn cauchy_sym(k: usize, a: SuperDim, b: SuperDim) -> BTreeMap<Partition, (VirtualCharacter, VirtualCharacter)> {
    cauchy(k, a, b, false)
}

/// Degree-`k` piece of `⋀(A ⊗ B)`: `λ ↦ (S_λ A, S_{λᵀ} B)` over `|λ| = k`, dropping vanishing pairs.
pub fn cauchy_ext(k: usize, a: SuperDim, b: SuperDim) -> BTreeMap<Partition, (VirtualCharacter, VirtualCharacter)> {
    cauchy(k, a, b, true)
}

fn cauchy(k: usize, a: SuperDim, b: SuperDim, exterior: bool) -> BTreeMap<Partition, (VirtualCharacter, VirtualCharacter)> {
    let mut out = BTreeMap::new();
    for lambda in crate::partitions::partitions_of(k) {
        let ca = super_schur_decompose(&lambda, a);
        let other = if exterior { lambda.transpose() } else { lambda.clone() };
        let cb = super_schur_decompose(&other, b);
        if !ca.is_zero() && !cb.is_zero() {
            out.insert(lambda, ((*ca).clone(), (*cb).clone()));
        }
    }
    out
}

/// Character of `S_[λ;μ](V)` as a `GL(V0) × GL(V1)`-representation,
/// summed over `(α, β, γ, δ)` with multiplicity `c^μ_{β,γᵀ} c^λ_{α,δᵀ}`.
///
/// Requires `m >= ℓ(λ) + ℓ(μ) − 1`.
pub fn rational_schur_char(lambda: &Partition, mu: &Partition, d: SuperDim) -> Result<VirtualCharacter> {
    if d.m + 1 < lambda.len() + mu.len() {
        return Err(Error::BelowCompleteIntersectionBound {
            m: d.m,
            len_lambda: lambda.len(),
            len_mu: mu.len(),
        });
    }
    // (α, δ) and (β, γ) pairs together with their LR multiplicities
    let left: Vec<(Partition, Partition, u64)> = skew_pairs(lambda);
    let right: Vec<(Partition, Partition, u64)> = skew_pairs(mu);
    let partials: Vec<VirtualCharacter> = left
        .par_iter()
        .map(|(alpha, delta, ca)| -> Result<VirtualCharacter> {
            let mut acc = VirtualCharacter::zero(d.m, d.n);
            let Some(wd) = GLWeight::from_partition(delta, d.n) else {
                return Ok(acc);
            };
            for (beta, gamma, cb) in &right {
                let Some(w0) = GLWeight::mixed(alpha, beta, d.m) else {
                    continue;
                };
                let Some(wg) = GLWeight::dual_of_partition(gamma, d.n) else {
                    continue;
                };
                let mult = (ca * cb) as i64;
                for (w1, &c) in rational_tensor(&wg, &wd)?.iter() {
                    acc.add_term_unchecked(w0.clone(), w1.clone(), mult * c as i64);
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let mut out = VirtualCharacter::zero(d.m, d.n);
    for p in &partials {
        out.add_assign(p)?;
    }
    Ok(out)
}

/// All `(α, τᵀ, c^λ_{α,τ})` with `α ⊆ λ` and `τ` in the expansion of `λ/α`.
fn skew_pairs(lambda: &Partition) -> Vec<(Partition, Partition, u64)> {
    let mut out = Vec::new();
    for alpha in lambda.subpartitions() {
        let shape = SkewShape::new(lambda.clone(), alpha.clone()).expect("α ⊆ λ");
        for (tau, &c) in skew_expand(&shape).iter() {
            out.push((alpha.clone(), tau.transpose(), c));
        }
    }
    out
}

/// The signed sum `Σ_{γ ⊆ q×p} (−1)^{|γ|} [S_{μ/γ}(V*)][S_{λ/γᵀ}(V)]`.
///
/// `p` and `q` default to `ℓ(λ)` and `ℓ(μ)`; larger values give the same result.
pub fn composite_euler_char(
    lambda: &Partition,
    mu: &Partition,
    d: SuperDim,
    p: Option<usize>,
    q: Option<usize>,
) -> Result<VirtualCharacter> {
    let p = p.unwrap_or(lambda.len());
    let q = q.unwrap_or(mu.len());
    if p < lambda.len() || q < mu.len() {
        return Err(Error::PaddingTooSmall {
            p,
            q,
            len_lambda: lambda.len(),
            len_mu: mu.len(),
        });
    }
    let gammas: Vec<Partition> = partitions_in_box(q, p)
        .into_iter()
        .filter(|g| mu.contains(g) && lambda.contains(&g.transpose()))
        .collect();
    let partials: Vec<VirtualCharacter> = gammas
        .par_iter()
        .map(|g| -> Result<VirtualCharacter> {
            let left = super_skew_char(mu, g, d, true)?;
            let right = super_skew_char(lambda, &g.transpose(), d, false)?;
            let sign = if g.size() % 2 == 0 { 1 } else { -1 };
            Ok(left.tensor(&right)?.scale(sign))
        })
        .collect::<Result<_>>()?;
    let mut out = VirtualCharacter::zero(d.m, d.n);
    for c in &partials {
        out.add_assign(c)?;
    }
    Ok(out)
}

/// Super complete homogeneous characters `h(0..=max)` at `x|y`:
/// `h(k) = Σ_j h_j(x) e_{k−j}(y)`.
fn super_h(x: &[BigRational], y: &[BigRational], max: usize) -> Vec<BigRational> {
    let h = linalg::complete_homogeneous(x, max);
    let e = linalg::elementary(y, max);
    (0..=max)
        .map(|k| (0..=k).fold(BigRational::zero(), |acc, j| acc + &h[j] * &e[k - j]))
        .collect()
}

/// The composite supersymmetric Schur determinant `det(M|L)` evaluated at
/// `diag(x) × diag(y)`, with
/// `M_{i,j} = h̄(μ_{q+1−j} − i + j)` for `j <= q` and
/// `L_{i,j} = h(λ_j + i − q − j)` for `j <= p`.
pub fn composite_det_specialized(
    lambda: &Partition,
    mu: &Partition,
    x: &[BigRational],
    y: &[BigRational],
    p: Option<usize>,
    q: Option<usize>,
) -> Result<BigRational> {
    let p = p.unwrap_or(lambda.len());
    let q = q.unwrap_or(mu.len());
    if p < lambda.len() || q < mu.len() {
        return Err(Error::PaddingTooSmall {
            p,
            q,
            len_lambda: lambda.len(),
            len_mu: mu.len(),
        });
    }
    if x.iter().chain(y).any(|v| v.is_zero()) {
        return Err(Error::SingularEvaluation);
    }
    let size = p + q;
    let max = lambda.first().max(mu.first()) + size;
    let h = super_h(x, y, max);
    let xi: Vec<BigRational> = x.iter().map(|v| v.recip()).collect();
    let yi: Vec<BigRational> = y.iter().map(|v| v.recip()).collect();
    let hbar = super_h(&xi, &yi, max);
    let at = |table: &[BigRational], k: i64| -> BigRational {
        if k < 0 {
            BigRational::zero()
        } else {
            table[k as usize].clone()
        }
    };
    let (p, q) = (p as i64, q as i64);
    let matrix: Vec<Vec<BigRational>> = (1..=size as i64)
        .map(|i| {
            (1..=size as i64)
                .map(|j| {
                    if j <= q {
                        let part = mu.get((q - j) as usize) as i64;
                        at(&hbar, part - i + j)
                    } else {
                        let jj = j - q;
                        let part = lambda.get((jj - 1) as usize) as i64;
                        at(&h, part + i - q - jj)
                    }
                })
                .collect()
        })
        .collect();
    debug_assert_eq!(matrix.len() as i64, p + q);
    Ok(linalg::determinant(matrix))
}

/// Highest weight `w(λ) + w(μ*)` of `S_λ(V) ⊗ S_μ(V*)` for the standard Borel.
pub fn highest_weight(lambda: &Partition, mu: &Partition, d: SuperDim) -> Result<SuperWeight> {
    let mt = mu.transpose();
    let t = mt.get(d.n);
    let r = lambda.len();
    if r + t > d.m {
        return Err(Error::WeightBlocksCollide(format!(
            "l(lambda) = {r} and t = {t} do not fit in m = {}",
            d.m
        )));
    }
    let mut even = vec![0i64; d.m];
    for i in 0..r {
        even[i] = lambda.get(i) as i64;
    }
    for i in 0..t {
        even[d.m - 1 - i] = -((mu.get(i) - d.n) as i64);
    }
    let odd: Vec<i64> = (0..d.n).rev().map(|j| -(mt.get(j) as i64)).collect();
    Ok(SuperWeight {
        even: GLWeight::new(even).expect("dominant by construction"),
        odd: GLWeight::new(odd).expect("dominant by construction"),
    })
}

/// `m − n >= ℓ(λ) + ℓ(μ)`, or both partitions empty (the trivial representation).
pub fn is_irreducible_case(lambda: &Partition, mu: &Partition, d: SuperDim) -> bool {
    (lambda.is_empty() && mu.is_empty()) || d.m as i64 - d.n as i64 >= (lambda.len() + mu.len()) as i64
}

/// Evaluates `c` at all-ones; equals the dimension.
pub fn eval_at_ones(c: &VirtualCharacter) -> Result<BigRational> {
    let (m, n) = c.ranks();
    c.specialize(&vec![BigRational::one(); m], &vec![BigRational::one(); n])
}
