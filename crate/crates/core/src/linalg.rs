use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant of a square matrix by Gaussian elimination over the rationals.
pub(crate) fn determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Complete homogeneous symmetric polynomials `h_0..=h_max` evaluated at `x`.
pub(crate) fn complete_homogeneous(x: &[BigRational], max: usize) -> Vec<BigRational> {
    let mut h = vec![BigRational::zero(); max + 1];
    h[0] = BigRational::one();
    for xi in x {
        // multiply the generating series by 1/(1 - xi t)
        for k in 1..=max {
            let prev = &h[k - 1] * xi;
            h[k] += prev;
        }
    }
    h
}

/// Elementary symmetric polynomials `e_0..=e_max` evaluated at `x`.
pub(crate) fn elementary(x: &[BigRational], max: usize) -> Vec<BigRational> {
    let mut e = vec![BigRational::zero(); max + 1];
    e[0] = BigRational::one();
    for xi in x {
        for k in (1..=max).rev() {
            let prev = &e[k - 1] * xi;
            e[k] += prev;
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(vec![]), r(1));
        assert_eq!(determinant(vec![vec![r(0), r(1)], vec![r(1), r(0)]]), r(-1));
        let m = vec![
            vec![r(2), r(0), r(1)],
            vec![r(1), r(3), r(2)],
            vec![r(1), r(1), r(2)],
        ];
        assert_eq!(determinant(m), r(6));
    }

    #[test]
    fn symmetric_functions_at_ones() {
        let ones = vec![r(1); 3];
        let h = complete_homogeneous(&ones, 3);
        assert_eq!(h, vec![r(1), r(3), r(6), r(10)]);
        let e = elementary(&ones, 4);
        assert_eq!(e, vec![r(1), r(3), r(3), r(1), r(0)]);
    }
}
