//! Borel–Weil–Bott for `GL(m)`-homogeneous bundles on `Gr(p, C^m)`, and
//! Künneth products over a product of two Grassmannians.
//!
//! A homogeneous bundle whose fibre is an irreducible Levi representation
//! is recorded by a [`LeviWeight`]: the quotient block of length `m − p`
//! comes first, the sub block of length `p` last. `S_α Q ⊗ S_β(R*)` has
//! quotient block `α` and sub block `β` negated and reversed.

use std::collections::BTreeMap;

use crate::characters::{GLWeight, GradedCharacter, VirtualCharacter};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `ρ = (m−1, …, 1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottContext {
    m: usize,
    rho: Vec<i64>,
}

impl BottContext {
    pub fn new(m: usize) -> Self {
        BottContext {
            m,
            rho: (0..m).rev().map(|i| i as i64).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    /// Cohomological degree and highest weight of the unique nonvanishing
    /// cohomology group of the line-bundle-type weight `γ`, or `None` if
    /// everything vanishes.
    pub fn apply(&self, gamma: &[i64]) -> Result<Option<(usize, GLWeight)>> {
        if gamma.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                got: gamma.len(),
            });
        }
        let mut v: Vec<i64> = gamma.iter().zip(&self.rho).map(|(g, r)| g + r).collect();
        let mut inversions = 0;
        // insertion sort into strictly decreasing order, counting swaps
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] <= v[j] {
                if v[j - 1] == v[j] {
                    return Ok(None);
                }
                v.swap(j - 1, j);
                inversions += 1;
                j -= 1;
            }
            if j > 0 && v[j - 1] == v[j] {
                return Ok(None);
            }
        }
        let w = v.iter().zip(&self.rho).map(|(x, r)| x - r).collect();
        Ok(Some((inversions, GLWeight::new(w).expect("sorted minus rho is dominant"))))
    }
}

/// Borel–Weil–Bott on `GL(m)` with `m = γ.len()`.
pub fn bott(gamma: &[i64]) -> Option<(usize, GLWeight)> {
    BottContext::new(gamma.len())
        .apply(gamma)
        .expect("length matches by construction")
}

/// Irreducible homogeneous bundle on `Gr(p, C^m)` given by its Levi weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviWeight {
    pub q_block: GLWeight,
    pub r_block: GLWeight,
}

impl LeviWeight {
    pub fn new(q_block: GLWeight, r_block: GLWeight) -> Self {
        LeviWeight { q_block, r_block }
    }

    /// `S_α Q ⊗ S_β(R*)` on `Gr(p, C^m)`; `None` if the bundle is zero.
    pub fn schur_bundle(alpha: &Partition, beta: &Partition, p: usize, m: usize) -> Option<Self> {
        let q_block = GLWeight::from_partition(alpha, m.checked_sub(p)?)?;
        let r_block = GLWeight::dual_of_partition(beta, p)?;
        Some(LeviWeight { q_block, r_block })
    }
}

/// Concatenation `(q_block, r_block)` after checking block lengths `m − p` and `p`.
pub fn levi_to_full(w: &LeviWeight, p: usize, m: usize) -> Result<Vec<i64>> {
    if p > m {
        return Err(Error::InvalidRanks(format!("p = {p} exceeds m = {m}")));
    }
    if w.q_block.rank() != m - p {
        return Err(Error::LengthMismatch {
            expected: m - p,
            got: w.q_block.rank(),
        });
    }
    if w.r_block.rank() != p {
        return Err(Error::LengthMismatch {
            expected: p,
            got: w.r_block.rank(),
        });
    }
    let mut out = w.q_block.entries().to_vec();
    out.extend_from_slice(w.r_block.entries());
    Ok(out)
}

/// Cohomology of `⊕ terms` on `Gr(p, C^m)` as a graded `GL(m)`-character.
pub fn grassmannian_cohomology(p: usize, m: usize, terms: &BTreeMap<LeviWeight, i64>) -> Result<GradedCharacter> {
    let ctx = BottContext::new(m);
    let mut out = GradedCharacter::zero(m, 0);
    for (w, &mult) in terms {
        if let Some((deg, hw)) = ctx.apply(&levi_to_full(w, p, m)?)? {
            let mut c = VirtualCharacter::zero(m, 0);
            c.add_term_unchecked(hw, GLWeight::default(), mult);
            out.add_in_degree(deg, &c)?;
        }
    }
    Ok(out)
}

/// Degree-wise convolution of a graded `GL(m)` character with a graded `GL(n)` character.
pub fn kunneth(a: &GradedCharacter, b: &GradedCharacter) -> Result<GradedCharacter> {
    let (m, an) = a.ranks();
    let (n, bn) = b.ranks();
    if an != 0 || bn != 0 {
        return Err(Error::RankMismatch(m, an, n, bn));
    }
    let mut out = GradedCharacter::zero(m, n);
    for (i, ca) in a.iter() {
        for (j, cb) in b.iter() {
            out.add_in_degree(i + j, &VirtualCharacter::external_product(ca, cb)?)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w(v: &[i64]) -> GLWeight {
        GLWeight::new(v.to_vec()).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn bott_examples() {
        assert_eq!(bott(&[0, 0, 0]), Some((0, w(&[0, 0, 0]))));
        assert_eq!(bott(&[-1, 0]), None);
        assert_eq!(bott(&[0, 2]), Some((1, w(&[1, 1]))));
        assert_eq!(bott(&[]), Some((0, GLWeight::default())));
    }

    #[test]
    fn levi_examples() {
        let l = LeviWeight::new(w(&[3]), w(&[-2]));
        assert_eq!(levi_to_full(&l, 1, 2).unwrap(), vec![3, -2]);
        let l = LeviWeight::schur_bundle(&p("[4]"), &p("[]"), 1, 3).unwrap();
        assert_eq!(levi_to_full(&l, 1, 3).unwrap(), vec![4, 0, 0]);
        let l = LeviWeight::schur_bundle(&p("[]"), &p("[4]"), 1, 2).unwrap();
        assert_eq!(levi_to_full(&l, 1, 2).unwrap(), vec![0, -4]);
        assert!(levi_to_full(&l, 2, 2).is_err());
    }

    #[test]
    fn sections_of_line_bundles_on_p1() {
        for d in 0..6 {
            let l = LeviWeight::schur_bundle(&p("[]"), &Partition::row(d), 1, 2).unwrap();
            let h = grassmannian_cohomology(1, 2, &BTreeMap::from([(l, 1)])).unwrap();
            assert_eq!(h.degrees().collect::<Vec<_>>(), vec![0]);
            assert_eq!(h.total_dim(), BigInt::from(d + 1));
        }
    }

    #[test]
    fn borel_weil_on_p2() {
        for d in 0..5 {
            let l = LeviWeight::schur_bundle(&Partition::row(d), &p("[]"), 1, 3).unwrap();
            let h = grassmannian_cohomology(1, 3, &BTreeMap::from([(l, 1)])).unwrap();
            let expected = VirtualCharacter::classical(w(&[d as i64, 0, 0]));
            assert_eq!(h, GradedCharacter::concentrated(0, expected));
            assert_eq!(h.total_dim(), BigInt::from((d + 2) * (d + 1) / 2));
        }
    }

    #[test]
    fn structure_sheaf_is_trivial() {
        let l = LeviWeight::schur_bundle(&p("[]"), &p("[]"), 2, 4).unwrap();
        let h = grassmannian_cohomology(2, 4, &BTreeMap::from([(l, 1)])).unwrap();
        assert_eq!(h, GradedCharacter::concentrated(0, VirtualCharacter::trivial(4, 0)));
    }

    #[test]
    fn kunneth_degrees_add() {
        let a = GradedCharacter::concentrated(1, VirtualCharacter::classical(w(&[1, 0])));
        let b = GradedCharacter::concentrated(1, VirtualCharacter::classical(w(&[2, 0, 0])));
        let k = kunneth(&a, &b).unwrap();
        assert_eq!(k.degrees().collect::<Vec<_>>(), vec![2]);
        assert_eq!(k.total_dim(), BigInt::from(12));
        let unit = GradedCharacter::concentrated(0, VirtualCharacter::trivial(0, 0));
        let k = kunneth(&a, &unit).unwrap();
        assert_eq!(k.degree(1).multiplicity(&w(&[1, 0]), &GLWeight::default()), 1);
    }
}
