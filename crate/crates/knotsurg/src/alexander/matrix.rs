//! Square matrices over the Laurent ring, just enough for the two
//! determinant pipelines.

use crate::error::Result;
use crate::laurent::LaurentPoly;

pub(crate) type Matrix = Vec<Vec<LaurentPoly>>;

pub(crate) fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = &out[i][j] + &(aik * &b[k][j]);
            }
        }
    }
    out
}

/// Fraction-free determinant by Bareiss elimination with row pivoting.
/// Every interior division is exact by the Sylvester identity, so a
/// nonzero remainder surfaces as [`crate::Error::InexactDivision`] and
/// means a corrupted input, never rounding.
pub(crate) fn det_bareiss(mut m: Matrix) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for p in 0..n - 1 {
        let pivot = (p..n).find(|&r| !m[r][p].is_zero());
        let Some(r) = pivot else {
            return Ok(LaurentPoly::zero());
        };
        if r != p {
            m.swap(r, p);
            negate = !negate;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let num = &(&m[i][j] * &m[p][p]) - &(&m[i][p] * &m[p][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][p] = LaurentPoly::zero();
        }
        prev = m[p][p].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(v: i64) -> LaurentPoly {
        LaurentPoly::constant(v)
    }

    /// Cofactor expansion along the first row; the independent check for
    /// the Bareiss route.
    fn det_naive(m: &Matrix) -> LaurentPoly {
        let n = m.len();
        if n == 0 {
            return LaurentPoly::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = LaurentPoly::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Matrix = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &det_naive(&minor);
            acc = if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        assert_eq!(det_bareiss(Vec::new()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn integer_two_by_two() {
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(det_bareiss(m).unwrap(), c(-2));
    }

    #[test]
    fn singular_matrix() {
        let m = vec![vec![c(1), c(2)], vec![c(2), c(4)]];
        assert_eq!(det_bareiss(m).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(det_bareiss(m).unwrap(), c(-1));
    }

    fn arb_entry() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-2i64..=2, -3i64..=3), 0..3).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor_expansion(
            n in 1usize..=4,
            entries in prop::collection::vec(arb_entry(), 16),
        ) {
            let m: Matrix = (0..n)
                .map(|i| entries[i * 4..i * 4 + n].to_vec())
                .collect();
            prop_assert_eq!(det_bareiss(m.clone()).unwrap(), det_naive(&m));
        }
    }
}
