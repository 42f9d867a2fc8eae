//! Reduced Burau representation of the braid group over the Laurent ring.

use crate::braid::{Braid, Sign};
use crate::error::Result;
use crate::laurent::LaurentPoly;

use super::matrix::{det_bareiss, identity, mat_mul, Matrix};

/// Matrix of one generator on the `(n-1)`-dimensional reduced module.
///
/// `s_i` acts by `e_{i-1} -> e_{i-1} + t e_i`, `e_i -> -t e_i`,
/// `e_{i+1} -> e_i + e_{i+1}`; the inverse by `e_{i-1} -> e_{i-1} + e_i`,
/// `e_i -> -t^-1 e_i`, `e_{i+1} -> t^-1 e_i + e_{i+1}`.
fn generator_matrix(n: usize, index: usize, sign: Sign) -> Matrix {
    let mut m = identity(n - 1);
    let i = index - 1; // 0-based column of e_{index}
    let t = LaurentPoly::variable();
    let t_inv = LaurentPoly::monomial(1, -1);
    match sign {
        Sign::Positive => {
            m[i][i] = -&t;
            if index >= 2 {
                m[i][i - 1] = t;
            }
            if index <= n - 2 {
                m[i][i + 1] = LaurentPoly::one();
            }
        }
        Sign::Negative => {
            m[i][i] = -&t_inv;
            if index >= 2 {
                m[i][i - 1] = LaurentPoly::one();
            }
            if index <= n - 2 {
                m[i][i + 1] = t_inv;
            }
        }
    }
    m
}

/// Product of the generator matrices over the braid word.
pub(crate) fn reduced_burau(b: &Braid) -> Matrix {
    let n = b.strands();
    let mut acc = identity(n - 1);
    for letter in b.word() {
        acc = mat_mul(&acc, &generator_matrix(n, letter.index, letter.sign));
    }
    acc
}

/// `det(burau(b) - I)`, the raw quantity the Alexander normalization
/// starts from.
pub(crate) fn burau_determinant(b: &Braid) -> Result<LaurentPoly> {
    let mut m = reduced_burau(b);
    let one = LaurentPoly::one();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = &row[i] - &one;
    }
    det_bareiss(m)
}
