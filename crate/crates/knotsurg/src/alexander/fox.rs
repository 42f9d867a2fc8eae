//! Fox free differential calculus on the closure's knot group.
//!
//! The braid group acts on the free group generated by one meridian per
//! strand; the closure's group is presented by `beta(x_j) = x_j`. Fox
//! derivatives of those relations, abelianized by sending every meridian
//! to `t`, give the Alexander matrix. This route shares nothing with the
//! reduced Burau pipeline past the Laurent ring, which is what makes it
//! a usable cross-check.

use crate::braid::{Braid, Sign};
use crate::error::Result;
use crate::laurent::LaurentPoly;

use super::matrix::{det_bareiss, Matrix};

/// Freely reduced word in the meridian generators `x_1 .. x_n`;
/// each entry is `(generator, +1 | -1)`.
type Word = Vec<(usize, i8)>;

fn push_reduced(word: &mut Word, letter: (usize, i8)) {
    match word.last() {
        Some(&(g, e)) if g == letter.0 && e == -letter.1 => {
            word.pop();
        }
        _ => word.push(letter),
    }
}

/// Replaces each letter of `word` by its image under `images`, reducing
/// as it goes.
fn substitute(word: &Word, images: &[Word]) -> Word {
    let mut out = Word::new();
    for &(g, e) in word {
        let image = &images[g - 1];
        if e > 0 {
            for &l in image {
                push_reduced(&mut out, l);
            }
        } else {
            for &(h, f) in image.iter().rev() {
                push_reduced(&mut out, (h, -f));
            }
        }
    }
    out
}

/// Images of the meridians under one braid generator.
///
/// `s_i` maps `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`; its inverse
/// maps `x_i -> x_{i+1}`, `x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}`.
fn generator_images(n: usize, index: usize, sign: Sign) -> Vec<Word> {
    let mut images: Vec<Word> = (1..=n).map(|j| vec![(j, 1)]).collect();
    let i = index;
    match sign {
        Sign::Positive => {
            images[i - 1] = vec![(i, 1), (i + 1, 1), (i, -1)];
            images[i] = vec![(i, 1)];
        }
        Sign::Negative => {
            images[i - 1] = vec![(i + 1, 1)];
            images[i] = vec![(i + 1, -1), (i, 1), (i + 1, 1)];
        }
    }
    images
}

/// The automorphism of the free group induced by the whole braid word.
fn braid_automorphism(b: &Braid) -> Vec<Word> {
    let n = b.strands();
    let mut images: Vec<Word> = (1..=n).map(|j| vec![(j, 1)]).collect();
    for letter in b.word().iter().rev() {
        let step = generator_images(n, letter.index, letter.sign);
        images = images.iter().map(|w| substitute(w, &step)).collect();
    }
    images
}

/// Abelianized Fox derivatives of `word` with respect to every generator:
/// a positive occurrence of `x_j` after a prefix of total exponent `s`
/// contributes `t^s` to column `j`, a negative one contributes `-t^(s-1)`.
fn fox_row(word: &Word, n: usize) -> Vec<LaurentPoly> {
    let mut row = vec![LaurentPoly::zero(); n];
    let mut s: i64 = 0;
    for &(g, e) in word {
        if e > 0 {
            row[g - 1] = &row[g - 1] + &LaurentPoly::monomial(1, s);
            s += 1;
        } else {
            s -= 1;
            row[g - 1] = &row[g - 1] - &LaurentPoly::monomial(1, s);
        }
    }
    row
}

/// Determinant of a maximal minor of the Alexander matrix of the closure:
/// one relation `beta(x_j) x_j^-1` per strand, last row and last column
/// deleted. Equals the Alexander polynomial up to a unit.
pub(crate) fn fox_minor_det(b: &Braid) -> Result<LaurentPoly> {
    let n = b.strands();
    let images = braid_automorphism(b);
    let mut minor: Matrix = Vec::with_capacity(n - 1);
    for (j, image) in images.iter().enumerate().take(n - 1) {
        let mut relation = image.clone();
        push_reduced(&mut relation, (j + 1, -1));
        let mut row = fox_row(&relation, n);
        row.pop();
        minor.push(row);
    }
    det_bareiss(minor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Letter;

    fn braid(s: &str) -> Braid {
        s.parse().unwrap()
    }

    #[test]
    fn automorphism_of_one_crossing() {
        let b = braid("B2: s1");
        let images = braid_automorphism(&b);
        assert_eq!(images[0], vec![(1, 1), (2, 1), (1, -1)]);
        assert_eq!(images[1], vec![(1, 1)]);
    }

    #[test]
    fn automorphism_inverse_cancels() {
        let b = Braid::new(2, vec![Letter::positive(1), Letter::negative(1)]).unwrap();
        let images = braid_automorphism(&b);
        assert_eq!(images[0], vec![(1, 1)]);
        assert_eq!(images[1], vec![(2, 1)]);
    }

    #[test]
    fn automorphism_preserves_full_product() {
        // Braid automorphisms fix x_1 x_2 ... x_n.
        for text in [
            "B2: s1 s1 s1",
            "B3: s1 s2^-1 s1 s2^-1",
            "B3: s1 s1 s1 s2 s2 s2",
        ] {
            let b = braid(text);
            let n = b.strands();
            let images = braid_automorphism(&b);
            let product: Word = (1..=n).map(|j| (j, 1)).collect();
            assert_eq!(substitute(&product, &images), product, "failed for {text}");
        }
    }

    #[test]
    fn fox_row_of_single_letters() {
        let row = fox_row(&vec![(1, 1)], 2);
        assert_eq!(row[0], LaurentPoly::one());
        assert!(row[1].is_zero());

        let row = fox_row(&vec![(1, -1)], 2);
        assert_eq!(row[0], -LaurentPoly::monomial(1, -1));
    }

    #[test]
    fn fox_row_of_conjugate() {
        // d/dx1 (x1 x2 x1^-1) = 1 - t, d/dx2 = t
        let row = fox_row(&vec![(1, 1), (2, 1), (1, -1)], 2);
        assert_eq!(row[0], "1 - t^1".parse().unwrap());
        assert_eq!(row[1], "t^1".parse().unwrap());
    }

    #[test]
    fn minor_of_two_strand_unknot() {
        // Worked by hand: the single relation x1 x2 x1^-2 differentiates
        // to -t in the first column.
        let det = fox_minor_det(&braid("B2: s1")).unwrap();
        assert_eq!(det, "-t^1".parse().unwrap());
    }

    #[test]
    fn minor_of_three_strand_unknot() {
        let det = fox_minor_det(&braid("B3: s1 s2")).unwrap();
        assert_eq!(det, "t^2".parse().unwrap());
    }
}
