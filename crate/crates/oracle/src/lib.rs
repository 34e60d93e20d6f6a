//! Slow reference implementations used to check `superbott-core`.
//!
//! Everything here is deliberately naive: tableaux are enumerated one by
//! one, Littlewood–Richardson coefficients are read off from monomial
//! expansions, and Schur polynomials are evaluated by Jacobi–Trudi with a
//! local determinant routine. Inputs are guarded to `|λ| <= 8`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use superbott_core::{Partition, SkewShape};

/// Largest shape the enumerators accept.
pub const MAX_SIZE: usize = 8;

/// A semistandard filling of a skew shape, stored row by row
/// (each row lists the entries of columns `inner_i..outer_i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub shape: SkewShape,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Number of occurrences of each label `1..=bound`.
    pub fn content(&self, bound: usize) -> Vec<usize> {
        let mut c = vec![0; bound];
        for row in &self.rows {
            for &v in row {
                c[v - 1] += 1;
            }
        }
        c
    }

    pub fn is_semistandard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r == 0 {
                continue;
            }
            let (start, _) = self.shape.row_range(r);
            let (pstart, pend) = self.shape.row_range(r - 1);
            for (i, &v) in row.iter().enumerate() {
                let col = start + i;
                if col >= pstart && col < pend && self.rows[r - 1][col - pstart] >= v {
                    return false;
                }
            }
        }
        true
    }
}

fn guard(size: usize) {
    assert!(size <= 2 * MAX_SIZE, "oracle input too large: size {size}");
}

/// All semistandard tableaux of `shape` with entries in `1..=bound`.
pub fn ssyt(shape: &SkewShape, bound: usize) -> Vec<Tableau> {
    guard(shape.size());
    let rows = shape.rows();
    let mut cells = Vec::new();
    for r in 0..rows {
        let (s, e) = shape.row_range(r);
        for c in s..e {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; shape.outer().get(r)]).collect();
    let mut out = Vec::new();
    fill(shape, &cells, 0, bound, &mut grid, &mut out);
    out
}

fn fill(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    idx: usize,
    bound: usize,
    grid: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        let rows = (0..shape.rows())
            .map(|r| {
                let (s, e) = shape.row_range(r);
                grid[r][s..e].to_vec()
            })
            .collect();
        out.push(Tableau {
            shape: shape.clone(),
            rows,
        });
        return;
    }
    let (r, c) = cells[idx];
    let mut lo = 1;
    if c > shape.inner().get(r) {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 && c >= shape.inner().get(r - 1) {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for v in lo..=bound {
        grid[r][c] = v;
        fill(shape, cells, idx + 1, bound, grid, out);
    }
    grid[r][c] = 0;
}

pub fn ssyt_count(shape: &SkewShape, bound: usize) -> usize {
    ssyt(shape, bound).len()
}

/// Content multiset of all SSYT of `shape` with entries `<= bound`:
/// composition ↦ number of tableaux (the monomial expansion of `s_shape`).
pub fn monomial_expansion(shape: &SkewShape, bound: usize) -> HashMap<Vec<usize>, i64> {
    let mut out = HashMap::new();
    for t in ssyt(shape, bound) {
        *out.entry(t.content(bound)).or_insert(0) += 1;
    }
    out
}

static KOSTKA: Mutex<Option<HashMap<(Partition, Vec<usize>), i64>>> = Mutex::new(None);

/// Kostka number `K_{λ,κ}`: tableaux of shape `λ` and content `κ`, counted
/// by peeling off the cells labelled with the largest value as a horizontal strip.
pub fn kostka(lambda: &Partition, content: &[usize]) -> i64 {
    let key = (lambda.clone(), content.to_vec());
    if let Some(v) = KOSTKA.lock().unwrap().get_or_insert_with(HashMap::new).get(&key) {
        return *v;
    }
    let v = strip_count(lambda.parts(), content);
    KOSTKA.lock().unwrap().get_or_insert_with(HashMap::new).insert(key, v);
    v
}

fn strip_count(shape: &[usize], content: &[usize]) -> i64 {
    let Some((&k, rest)) = content.split_last() else {
        return i64::from(shape.is_empty());
    };
    if shape.iter().sum::<usize>() != content.iter().sum::<usize>() {
        return 0;
    }
    // choose how many cells to drop from each row: a horizontal strip of size k
    let mut total = 0;
    let mut inner = shape.to_vec();
    strips(shape, 0, k, &mut inner, rest, &mut total);
    total
}

fn strips(shape: &[usize], row: usize, left: usize, inner: &mut Vec<usize>, rest: &[usize], total: &mut i64) {
    if row == shape.len() {
        if left == 0 {
            let trimmed: Vec<usize> = inner.iter().copied().filter(|&x| x > 0).collect();
            *total += strip_count(&trimmed, rest);
        }
        return;
    }
    // the strip may not stack two cells in a column: inner_row >= shape_{row+1}
    let floor = shape.get(row + 1).copied().unwrap_or(0);
    let most = (shape[row] - floor).min(left);
    for take in 0..=most {
        inner[row] = shape[row] - take;
        strips(shape, row + 1, left - take, inner, rest, total);
    }
    inner[row] = shape[row];
}

/// Partitions of `n` with at most `len` parts, in decreasing lexicographic order.
fn partitions_lex_desc(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == len {
            return;
        }
        for v in (1..=max.min(rest)).rev() {
            cur.push(v);
            rec(rest - v, v, len, cur, out);
            cur.pop();
        }
    }
    rec(n, n, len, &mut cur, &mut out);
    out
}

/// `s_λ s_μ = Σ c_ν s_ν`, found by expanding both factors into monomials in
/// `ℓ(λ) + ℓ(μ)` variables and peeling off Schur polynomials from the
/// dominance-largest monomial down.
pub fn schur_product_bruteforce(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    guard(lambda.size() + mu.size());
    let nvars = (lambda.len() + mu.len()).max(1);
    let el = monomial_expansion(&SkewShape::straight(lambda.clone()), nvars);
    let em = monomial_expansion(&SkewShape::straight(mu.clone()), nvars);
    let total = lambda.size() + mu.size();
    let mut coeffs: Vec<(Vec<usize>, i64)> = Vec::new();
    for kappa in partitions_lex_desc(total, nvars) {
        let mut padded = kappa.clone();
        padded.resize(nvars, 0);
        let mut coeff = 0i64;
        for (a, ca) in &el {
            if a.iter().zip(&padded).all(|(x, y)| x <= y) {
                let b: Vec<usize> = a.iter().zip(&padded).map(|(x, y)| y - x).collect();
                coeff += ca * em.get(&b).copied().unwrap_or(0);
            }
        }
        for (rho, c) in &coeffs {
            coeff -= c * kostka(&Partition::new(rho.clone()).unwrap(), &padded);
        }
        if coeff != 0 {
            coeffs.push((kappa, coeff));
        }
    }
    coeffs
        .into_iter()
        .map(|(k, c)| (Partition::new(k).unwrap(), c))
        .collect()
}

/// `c^ν_{λ,μ}` by brute force.
pub fn lr_bruteforce(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    schur_product_bruteforce(lambda, mu).get(nu).copied().unwrap_or(0)
}

fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    // cofactor-free elimination, kept separate from the library routine
    let n = a.len();
    let mut sign = BigRational::one();
    let mut acc = BigRational::one();
    for i in 0..n {
        let Some(k) = (i..n).find(|&k| !a[k][i].is_zero()) else {
            return BigRational::zero();
        };
        if k != i {
            a.swap(k, i);
            sign = -sign;
        }
        let piv = a[i][i].clone();
        acc *= &piv;
        for r in i + 1..n {
            let f = &a[r][i] / &piv;
            for c in i..n {
                let t = &f * &a[i][c];
                a[r][c] -= t;
            }
        }
    }
    sign * acc
}

/// `h_0..=h_max` at `values` by summing all monomials of each degree.
fn h_table(values: &[BigRational], max: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(max + 1);
    for k in 0..=max {
        out.push(monomials(values, k, 0));
    }
    out
}

fn monomials(values: &[BigRational], k: usize, from: usize) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for i in from..values.len() {
        total += &values[i] * monomials(values, k - 1, i);
    }
    total
}

/// `s_{λ/μ}(values) = det(h(λ_i − μ_j − i + j))`.
pub fn specialize_schur(shape: &SkewShape, values: &[BigRational]) -> BigRational {
    guard(shape.size());
    let n = shape.outer().len();
    let h = h_table(values, shape.outer().first() + n);
    let m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = shape.outer().get(i) as i64 - shape.inner().get(j) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        BigRational::zero()
                    } else {
                        h[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    det(m)
}

/// Jacobi–Trudi determinant `det(h_{γ_i − i + j}) · (∏ x)^{−k}` for an
/// arbitrary integer sequence `γ`, after shifting every entry by `k`.
/// By the Weyl character formula this is the Euler characteristic of the
/// homogeneous line-bundle weight `γ` on the full flag variety.
pub fn jacobi_trudi_sequence(gamma: &[i64], values: &[BigRational]) -> BigRational {
    assert_eq!(gamma.len(), values.len());
    let n = gamma.len();
    let k = gamma.iter().map(|&g| -g).max().unwrap_or(0).max(0) + n as i64;
    let shifted: Vec<i64> = gamma.iter().map(|g| g + k).collect();
    let max = shifted.iter().copied().max().unwrap_or(0) as usize + n;
    let h = h_table(values, max);
    let m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let idx = shifted[i] - i as i64 + j as i64;
                    if idx < 0 {
                        BigRational::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    let prod: BigRational = values.iter().fold(BigRational::one(), |a, v| a * v);
    let mut out = det(m);
    for _ in 0..k {
        out /= &prod;
    }
    out
}

/// `dim S_λ(C^m)` by counting tableaux.
pub fn schur_dim(lambda: &Partition, m: usize) -> BigInt {
    BigInt::from(ssyt_count(&SkewShape::straight(lambda.clone()), m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn counts() {
        assert_eq!(ssyt_count(&SkewShape::straight(p("[1]")), 4), 4);
        assert_eq!(ssyt_count(&SkewShape::straight(p("[1,1]")), 3), 3);
        assert_eq!(ssyt_count(&SkewShape::straight(p("[2]")), 2), 3);
        let skew = SkewShape::new(p("[2,1]"), p("[1]")).unwrap();
        assert!(ssyt(&skew, 3).iter().all(|t| t.is_semistandard()));
        assert_eq!(ssyt_count(&skew, 2), 4);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_bruteforce(&p("[2,1]"), &p("[]"), &p("[2,1]")), 1);
        assert_eq!(lr_bruteforce(&p("[1]"), &p("[1]"), &p("[2]")), 1);
        assert_eq!(lr_bruteforce(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")), 2);
        assert_eq!(lr_bruteforce(&p("[1]"), &p("[1]"), &p("[3]")), 0);
        assert_eq!(kostka(&p("[2,1]"), &[1, 1, 1]), 2);
        assert_eq!(kostka(&p("[3,2]"), &[2, 2, 1]), 2);
        assert_eq!(kostka(&p("[2,2]"), &[3, 1]), 0);
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(specialize_schur(&SkewShape::straight(p("[]")), &[r(3)]), r(1));
        assert_eq!(specialize_schur(&SkewShape::straight(p("[1]")), &[r(1), r(1)]), r(2));
        assert_eq!(specialize_schur(&SkewShape::straight(p("[2,1]")), &[r(1), r(1), r(1)]), r(8));
    }

    #[test]
    fn sequence_jacobi_trudi() {
        let ones = [r(1), r(1)];
        // (0, −1) + ρ has a repeat: Euler characteristic zero
        assert_eq!(jacobi_trudi_sequence(&[-1, 0], &ones), r(0));
        // (0, 2) straightens to −(1, 1)
        assert_eq!(jacobi_trudi_sequence(&[0, 2], &ones), r(-1));
        assert_eq!(jacobi_trudi_sequence(&[2, 0], &ones), r(3));
    }
}
