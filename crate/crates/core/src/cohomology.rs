//! Cohomology of `S_α Q ⊗ S_β(R*)` on the super Grassmannian `Gr(p|q, V)`
//! and on super partial flag varieties.
//!
//! Two independent routes are provided. [`e1_page`] expands the associated
//! graded bundle over the bosonic reduction `Gr(p, C^m) × Gr(q, C^n)` into
//! irreducible homogeneous pieces and applies Borel–Weil–Bott to each.
//! [`main_theorem_char`] assembles the closed form `H•(O) ⊗ S_[α;β](V)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::bott::BottContext;
use crate::characters::{rational_tensor, GLWeight, GradedCharacter, VirtualCharacter};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qseries::{flag_poincare, gaussian_binomial, HilbertSeries};
use crate::superschur::{cauchy_ext, rational_schur_char, super_schur_decompose, SuperDim};

/// Default cap on the number of expansion tuples in [`e1_page`].
pub const DEFAULT_MAX_TERMS: u128 = 10_000_000;

/// The bundle `S_α Q ⊗ S_β(R*)` on `Gr(p|q, C^{m|n})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleSpec {
    pub p: usize,
    pub q: usize,
    pub d: SuperDim,
    pub alpha: Partition,
    pub beta: Partition,
}

impl BundleSpec {
    pub fn new(p: usize, q: usize, d: SuperDim, alpha: Partition, beta: Partition) -> Result<Self> {
        if p > d.m || q > d.n {
            return Err(Error::InvalidRanks(format!("{p}|{q} does not fit in {d}")));
        }
        Ok(BundleSpec { p, q, d, alpha, beta })
    }

    /// The same bundle viewed on `Gr(q|p, V[1])`.
    pub fn shifted(&self) -> BundleSpec {
        BundleSpec {
            p: self.q,
            q: self.p,
            d: self.d.shifted(),
            alpha: self.alpha.transpose(),
            beta: self.beta.transpose(),
        }
    }

    /// Super rank of `Q`.
    pub fn quotient_dim(&self) -> SuperDim {
        SuperDim::new(self.d.m - self.p, self.d.n - self.q)
    }

    /// Super rank of `R`.
    pub fn sub_dim(&self) -> SuperDim {
        SuperDim::new(self.p, self.q)
    }

    /// True iff `S_α Q` and `S_β(R*)` are both nonzero.
    pub fn is_nonzero(&self) -> bool {
        self.alpha.fits_in_hook(self.d.m - self.p, self.d.n - self.q) && self.beta.fits_in_hook(self.p, self.q)
    }
}

impl fmt::Display for BundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Gr({}|{}, {}), alpha = {}, beta = {}",
            self.p, self.q, self.d, self.alpha, self.beta
        )
    }
}

/// Which of the two sufficient conditions of the closed form holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HypothesisCase {
    /// `m − n − ℓ(α) >= p − q >= ℓ(β)`.
    Case1,
    /// `n − m − α_1 >= q − p >= β_1`.
    Case2,
    None,
}

impl fmt::Display for HypothesisCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisCase::Case1 => "case1",
            HypothesisCase::Case2 => "case2",
            HypothesisCase::None => "none",
        })
    }
}

pub fn hypothesis_case(spec: &BundleSpec) -> HypothesisCase {
    let (m, n, p, q) = (spec.d.m as i64, spec.d.n as i64, spec.p as i64, spec.q as i64);
    let la = spec.alpha.len() as i64;
    let lb = spec.beta.len() as i64;
    let a1 = spec.alpha.first() as i64;
    let b1 = spec.beta.first() as i64;
    if m - n - la >= p - q && p - q >= lb {
        HypothesisCase::Case1
    } else if n - m - a1 >= q - p && q - p >= b1 {
        HypothesisCase::Case2
    } else {
        HypothesisCase::None
    }
}

fn hypothesis_error(spec: &BundleSpec) -> Error {
    Error::HypothesisNotSatisfied(format!(
        "neither m - n - l(alpha) >= p - q >= l(beta) nor n - m - alpha_1 >= q - p >= beta_1 holds for {spec}"
    ))
}

/// Hilbert series of `H•(Gr(p|q, V); O)`: the Poincaré polynomial of
/// `Gr_q(C^n)` in case 1, of `Gr_p(C^m)` in case 2.
pub fn structure_sheaf_hilbert(spec: &BundleSpec) -> Result<HilbertSeries> {
    match hypothesis_case(spec) {
        HypothesisCase::Case1 => gaussian_binomial(spec.d.n, spec.q),
        HypothesisCase::Case2 => gaussian_binomial(spec.d.m, spec.p),
        HypothesisCase::None => Err(hypothesis_error(spec)),
    }
}

/// `Σ_k coeff_k(h) · c` placed in degree `k`.
fn graded_multiple(h: &HilbertSeries, c: &VirtualCharacter) -> Result<GradedCharacter> {
    let mut out = GradedCharacter::zero(c.m(), c.n());
    for (k, coeff) in h.terms() {
        let mult = i64::try_from(coeff).map_err(|_| Error::Internal(format!("coefficient {coeff} overflows")))?;
        out.add_in_degree(k, &c.scale(mult))?;
    }
    Ok(out)
}

/// Closed-form cohomology `H•(X; O_X) ⊗ S_[α;β](V)`.
pub fn main_theorem_char(spec: &BundleSpec) -> Result<GradedCharacter> {
    match hypothesis_case(spec) {
        HypothesisCase::Case1 => {
            let h = gaussian_binomial(spec.d.n, spec.q)?;
            let c = rational_schur_char(&spec.alpha, &spec.beta, spec.d)?;
            graded_multiple(&h, &c)
        }
        HypothesisCase::Case2 => {
            let shifted = spec.shifted();
            debug_assert_eq!(hypothesis_case(&shifted), HypothesisCase::Case1);
            Ok(main_theorem_char(&shifted)?.swap())
        }
        HypothesisCase::None => Err(hypothesis_error(spec)),
    }
}

/// Controls for [`e1_page_detailed`].
#[derive(Clone, Copy, Debug)]
pub struct E1Options {
    pub max_terms: u128,
}

impl Default for E1Options {
    fn default() -> Self {
        E1Options {
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

/// One irreducible summand of the E1 page.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct E1Term {
    /// Total degree `|λ| + |θ|` of the exterior-algebra factor it came from.
    pub exterior_degree: usize,
    /// Cohomological degree on `Gr(p, C^m) × Gr(q, C^n)`.
    pub degree: usize,
    pub w0: GLWeight,
    pub w1: GLWeight,
    pub mult: i64,
}

/// The E1 page with per-summand bookkeeping.
#[derive(Clone, Debug)]
pub struct E1Page {
    pub total: GradedCharacter,
    pub terms: Vec<E1Term>,
}

impl E1Page {
    /// True when some summand sits in odd degree, so differentials may not vanish.
    pub fn possibly_nondegenerate(&self) -> bool {
        !self.total.is_even_supported()
    }
}

/// Cohomology on the bosonic reduction of the associated graded bundle,
/// graded by total cohomological degree.
pub fn e1_page(spec: &BundleSpec) -> Result<GradedCharacter> {
    Ok(e1_page_detailed(spec, E1Options::default())?.total)
}

type Piece = (GLWeight, GLWeight, i64);

/// Classical weights `(Q_0, R_0 | Q_1, R_1)` with multiplicities of one
/// exterior-algebra summand `S_λ(R0) ⊠ S_{λᵀ}(Q1*) ⊗ S_θ(Q0*) ⊠ S_{θᵀ}(R1)`.
struct ExteriorPiece {
    degree: usize,
    r0: Vec<Piece>,
    q1: Vec<Piece>,
    q0: Vec<Piece>,
    r1: Vec<Piece>,
}

fn classical_terms(c: &VirtualCharacter) -> Vec<Piece> {
    c.iter().map(|(a, b, k)| (a.clone(), b.clone(), k)).collect()
}

pub fn e1_page_detailed(spec: &BundleSpec, opts: E1Options) -> Result<E1Page> {
    let (m, n) = (spec.d.m, spec.d.n);
    let (p, q) = (spec.p, spec.q);
    let (q0, r0, q1, r1) = (m - p, p, n - q, q);

    let a_char = super_schur_decompose(&spec.alpha, spec.quotient_dim());
    let b_char = super_schur_decompose(&spec.beta, spec.sub_dim()).dual();
    if a_char.is_zero() || b_char.is_zero() {
        return Ok(E1Page {
            total: GradedCharacter::zero(m, n),
            terms: Vec::new(),
        });
    }

    // ⋀(R0 ⊗ Q1*) and ⋀(Q0* ⊗ R1), paired up degree by degree
    let mut lam_side = Vec::new();
    for k in 0..=r0 * q1 {
        for (_, (sr0, sq1)) in cauchy_ext(k, SuperDim::new(r0, 0), SuperDim::new(q1, 0)) {
            lam_side.push((k, classical_terms(&sr0), classical_terms(&sq1.dual())));
        }
    }
    let mut theta_side = Vec::new();
    for k in 0..=q0 * r1 {
        for (_, (sq0, sr1)) in cauchy_ext(k, SuperDim::new(q0, 0), SuperDim::new(r1, 0)) {
            theta_side.push((k, classical_terms(&sq0.dual()), classical_terms(&sr1)));
        }
    }
    let pieces: Vec<ExteriorPiece> = lam_side
        .iter()
        .flat_map(|(kl, sr0, sq1)| {
            theta_side.iter().map(move |(kt, sq0, sr1)| ExteriorPiece {
                degree: kl + kt,
                r0: sr0.clone(),
                q1: sq1.clone(),
                q0: sq0.clone(),
                r1: sr1.clone(),
            })
        })
        .collect();

    let estimate = (a_char.len() as u128) * (b_char.len() as u128) * (pieces.len() as u128);
    if estimate > opts.max_terms {
        return Err(Error::TooManyTerms {
            terms: estimate,
            limit: opts.max_terms,
        });
    }

    let a_terms = classical_terms(&a_char);
    let b_terms = classical_terms(&b_char);
    let bott_m = BottContext::new(m);
    let bott_n = BottContext::new(n);

    let results: Vec<BTreeMap<(usize, usize, GLWeight, GLWeight), i64>> = pieces
        .par_iter()
        .map(|piece| -> Result<_> {
            let mut acc = BTreeMap::new();
            for (aq0, aq1, ca) in &a_terms {
                for (br0, br1, cb) in &b_terms {
                    let even = side_cohomology(&bott_m, aq0, &piece.q0, br0, &piece.r0)?;
                    if even.is_empty() {
                        continue;
                    }
                    let odd = side_cohomology(&bott_n, aq1, &piece.q1, br1, &piece.r1)?;
                    for ((d0, w0), c0) in &even {
                        for ((d1, w1), c1) in &odd {
                            let key = (piece.degree, d0 + d1, w0.clone(), w1.clone());
                            *acc.entry(key).or_insert(0) += ca * cb * c0 * c1;
                        }
                    }
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;

    let mut merged: BTreeMap<(usize, usize, GLWeight, GLWeight), i64> = BTreeMap::new();
    for r in results {
        for (k, v) in r {
            *merged.entry(k).or_insert(0) += v;
        }
    }
    let mut total = GradedCharacter::zero(m, n);
    let mut terms = Vec::new();
    for ((exterior_degree, degree, w0, w1), mult) in merged {
        if mult == 0 {
            continue;
        }
        let mut c = VirtualCharacter::zero(m, n);
        c.add_term_unchecked(w0.clone(), w1.clone(), mult);
        total.add_in_degree(degree, &c)?;
        terms.push(E1Term {
            exterior_degree,
            degree,
            w0,
            w1,
            mult,
        });
    }
    Ok(E1Page { total, terms })
}

/// Bott applied to every Levi constituent of
/// `(a_q ⊗ x_q) on the quotient block, (b_r ⊗ x_r) on the sub block`.
fn side_cohomology(
    ctx: &BottContext,
    a_q: &GLWeight,
    x_q: &[Piece],
    b_r: &GLWeight,
    x_r: &[Piece],
) -> Result<BTreeMap<(usize, GLWeight), i64>> {
    let mut out = BTreeMap::new();
    for (wq, _, cq) in x_q {
        let tq = rational_tensor(a_q, wq)?;
        for (wr, _, cr) in x_r {
            let tr = rational_tensor(b_r, wr)?;
            for (u, &cu) in tq.iter() {
                for (v, &cv) in tr.iter() {
                    let mut full = u.entries().to_vec();
                    full.extend_from_slice(v.entries());
                    if let Some((deg, hw)) = ctx.apply(&full)? {
                        *out.entry((deg, hw)).or_insert(0) += cq * cr * (cu * cv) as i64;
                    }
                }
            }
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Outcome of comparing [`e1_page`] with [`main_theorem_char`].
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub case: HypothesisCase,
    pub e1: GradedCharacter,
    pub closed_form: GradedCharacter,
    /// `e1 − closed_form` in each degree where they differ.
    pub diffs: BTreeMap<usize, VirtualCharacter>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

/// Computes both pipelines and reports per-degree differences.
pub fn verify_main_theorem(spec: &BundleSpec) -> Result<VerifyReport> {
    verify_main_theorem_with(spec, E1Options::default())
}

pub fn verify_main_theorem_with(spec: &BundleSpec, opts: E1Options) -> Result<VerifyReport> {
    let case = hypothesis_case(spec);
    let closed_form = main_theorem_char(spec)?;
    let e1 = e1_page_detailed(spec, opts)?.total;
    let diffs = e1.diff(&closed_form)?;
    Ok(VerifyReport {
        case,
        e1,
        closed_form,
        diffs,
    })
}

// ---------------------------------------------------------------------------
// Partial flags

/// `S_α(Q_r) ⊗ S_β(R_1*)` on `Fl(p_1|q_1 < ⋯ < p_r|q_r, C^{m|n})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagSpec {
    pub steps: Vec<(usize, usize)>,
    pub d: SuperDim,
    pub alpha: Partition,
    pub beta: Partition,
}

impl FlagSpec {
    pub fn new(steps: Vec<(usize, usize)>, d: SuperDim, alpha: Partition, beta: Partition) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidRanks("a flag needs at least one step".into()));
        }
        let mut prev: Option<(usize, usize)> = None;
        for &(p, q) in &steps {
            if let Some((pp, pq)) = prev {
                if p < pp || q < pq || (p, q) == (pp, pq) {
                    return Err(Error::InvalidRanks(format!(
                        "steps must strictly increase: {pp}|{pq} then {p}|{q}"
                    )));
                }
            }
            prev = Some((p, q));
        }
        let (pr, qr) = *steps.last().expect("nonempty");
        if pr > d.m || qr > d.n || (pr, qr) == (d.m, d.n) {
            return Err(Error::InvalidRanks(format!("last step {pr}|{qr} must lie below {d}")));
        }
        Ok(FlagSpec { steps, d, alpha, beta })
    }

    /// Block sizes `(q_1, q_2 − q_1, …, n − q_r)`.
    pub fn odd_blocks(&self) -> Vec<usize> {
        blocks(self.steps.iter().map(|s| s.1), self.d.n)
    }

    /// Block sizes `(p_1, p_2 − p_1, …, m − p_r)`.
    pub fn even_blocks(&self) -> Vec<usize> {
        blocks(self.steps.iter().map(|s| s.0), self.d.m)
    }

    /// The single-step flag, as a Grassmannian bundle.
    pub fn as_grassmannian(&self) -> Option<BundleSpec> {
        match self.steps.as_slice() {
            &[(p, q)] => BundleSpec::new(p, q, self.d, self.alpha.clone(), self.beta.clone()).ok(),
            _ => None,
        }
    }
}

fn blocks(dims: impl Iterator<Item = usize>, total: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut prev = 0;
    for d in dims.chain(std::iter::once(total)) {
        out.push(d - prev);
        prev = d;
    }
    out
}

/// `upper >= x_r >= ⋯ >= x_1 >= lower` for `x_i = a_i − b_i`.
fn chain_holds(diffs: &[i64], upper: i64, lower: i64) -> bool {
    let Some(&last) = diffs.last() else {
        return true;
    };
    upper >= last && diffs.windows(2).all(|w| w[1] >= w[0]) && diffs[0] >= lower
}

/// Which mirror of the chain condition holds, given the outer bounds.
fn flag_case(flag: &FlagSpec, with_bundle: bool) -> HypothesisCase {
    let (m, n) = (flag.d.m as i64, flag.d.n as i64);
    let pq: Vec<i64> = flag.steps.iter().map(|&(p, q)| p as i64 - q as i64).collect();
    let qp: Vec<i64> = pq.iter().map(|x| -x).collect();
    let (la, lb, a1, b1) = if with_bundle {
        (
            flag.alpha.len() as i64,
            flag.beta.len() as i64,
            flag.alpha.first() as i64,
            flag.beta.first() as i64,
        )
    } else {
        (0, 0, 0, 0)
    };
    if chain_holds(&pq, m - n - la, lb) {
        HypothesisCase::Case1
    } else if chain_holds(&qp, n - m - a1, b1) {
        HypothesisCase::Case2
    } else {
        HypothesisCase::None
    }
}

/// Hilbert series of `H•(Fl; O)`: `[n]! / ∏ [d_i]!` over the odd blocks
/// (or `[m]! / ∏ [d_i]!` over the even blocks in the mirrored case).
pub fn partial_flag_hilbert(flag: &FlagSpec) -> Result<HilbertSeries> {
    match flag_case(flag, false) {
        HypothesisCase::Case1 => flag_poincare(&flag.odd_blocks()),
        HypothesisCase::Case2 => flag_poincare(&flag.even_blocks()),
        HypothesisCase::None => Err(Error::ChainConditionFailed(format!(
            "neither m - n >= p_r - q_r >= ... >= p_1 - q_1 >= 0 nor its mirror holds for steps {:?} in {}",
            flag.steps, flag.d
        ))),
    }
}

/// Product `A(1) ⋯ A(r)` of Grassmannian Poincaré polynomials
/// `A(i) = P(Gr(x_i − x_{i−1}, C^{N − x_{i−1}}))`.
fn stepwise_hilbert(dims: &[usize], total: usize) -> Result<HilbertSeries> {
    let mut acc = HilbertSeries::one();
    let mut prev = 0;
    for &x in dims {
        acc = acc.mul(&gaussian_binomial(total - prev, x - prev)?);
        prev = x;
    }
    Ok(acc)
}

/// Closed-form cohomology of `S_α(Q_r) ⊗ S_β(R_1*)` on a super partial flag variety.
pub fn partial_flag_char(flag: &FlagSpec) -> Result<GradedCharacter> {
    let case = flag_case(flag, true);
    let (dims, total): (Vec<usize>, usize) = match case {
        HypothesisCase::Case1 => (flag.steps.iter().map(|s| s.1).collect(), flag.d.n),
        HypothesisCase::Case2 => (flag.steps.iter().map(|s| s.0).collect(), flag.d.m),
        HypothesisCase::None => {
            return Err(Error::ChainConditionFailed(format!(
                "neither m - n - l(alpha) >= p_r - q_r >= ... >= p_1 - q_1 >= l(beta) nor its mirror holds for steps {:?} in {}",
                flag.steps, flag.d
            )))
        }
    };
    let h = partial_flag_hilbert(flag)?;
    let stepwise = stepwise_hilbert(&dims, total)?;
    if stepwise != h {
        return Err(Error::Internal(format!(
            "stepwise product {stepwise} disagrees with flag Poincaré polynomial {h}"
        )));
    }
    let c = match case {
        HypothesisCase::Case1 => rational_schur_char(&flag.alpha, &flag.beta, flag.d)?,
        _ => rational_schur_char(&flag.alpha.transpose(), &flag.beta.transpose(), flag.d.shifted())?.swap(),
    };
    graded_multiple(&h, &c)
}
