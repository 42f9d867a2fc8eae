//! Bounded search for a Fox-Milnor factorization `f(t) f(t^-1)`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::laurent::LaurentPoly;

use super::AlexanderPolynomial;

/// Outcome of [`fox_milnor`]. `NoFactorization` is conclusive: the degree
/// of a factor is forced by the support spread, so an exhausted search
/// rules the factorization out. `Inconclusive` means the search was not
/// run to exhaustion (degree bound below the forced degree, or the
/// coefficient space too large to enumerate).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoxMilnor {
    Factors(LaurentPoly),
    NoFactorization,
    Inconclusive,
}

/// True iff `a = f(t) * f(t^-1)` for some integer polynomial `f` of
/// degree at most `degree_bound`, up to units. A `false` is a proof only
/// when [`fox_milnor`] reports `NoFactorization`.
pub fn fox_milnor_check(a: &AlexanderPolynomial, degree_bound: u32) -> bool {
    matches!(fox_milnor(a, degree_bound), FoxMilnor::Factors(_))
}

pub fn fox_milnor(a: &AlexanderPolynomial, degree_bound: u32) -> FoxMilnor {
    let poly = a.poly();
    let m = poly.max_exp().expect("normalized polynomial is nonzero");
    if m == 0 {
        // The only normalized constant is 1 = 1 * 1.
        return FoxMilnor::Factors(LaurentPoly::one());
    }

    // For f = c_0 + .. + c_d t^d with c_0, c_d nonzero, f(t) f(t^-1) has
    // support exactly [-d, d] and central coefficient sum(c_i^2). So the
    // factor degree is forced to be m, and a center <= 0 excludes factors
    // of every degree.
    let center = poly.coeff(0);
    if !center.is_positive() {
        return FoxMilnor::NoFactorization;
    }
    if (degree_bound as i64) < m {
        return FoxMilnor::Inconclusive;
    }
    let Some(budget) = center.to_i64() else {
        return FoxMilnor::Inconclusive;
    };

    let top = poly.coeff(m);
    if top.abs() > center {
        // |c_0 c_m| <= sum(c_i^2) for any integer factor.
        return FoxMilnor::NoFactorization;
    }

    let mut search = Search {
        target: poly,
        top,
        len: (m + 1) as usize,
        coeffs: vec![0i64; (m + 1) as usize],
        nodes_left: 20_000_000,
    };
    match search.dfs(0, budget) {
        Some(f) => FoxMilnor::Factors(f),
        None if search.nodes_left == 0 => FoxMilnor::Inconclusive,
        None => FoxMilnor::NoFactorization,
    }
}

struct Search<'a> {
    target: &'a LaurentPoly,
    top: BigInt,
    len: usize,
    coeffs: Vec<i64>,
    nodes_left: u64,
}

impl Search<'_> {
    /// Depth-first enumeration of coefficient vectors with
    /// `sum(c_i^2) = center`, pruned by the remaining square budget and
    /// the endpoint constraint `c_0 c_m = top`.
    fn dfs(&mut self, i: usize, budget: i64) -> Option<LaurentPoly> {
        if self.nodes_left == 0 {
            return None;
        }
        self.nodes_left -= 1;

        if i + 1 == self.len {
            // Last coefficient: must consume the entire budget, be
            // positive (f and -f give the same product), and satisfy
            // c_0 * c_m = top.
            let c = isqrt(budget)?;
            if c == 0 || c * c != budget {
                return None;
            }
            if BigInt::from(self.coeffs[0]) * BigInt::from(c) != self.top {
                return None;
            }
            self.coeffs[i] = c;
            return self.verify();
        }

        let bound = isqrt(budget).unwrap_or(0);
        for c in -bound..=bound {
            if i == 0 {
                if c == 0 {
                    continue;
                }
                if !(&self.top % BigInt::from(c)).is_zero() {
                    continue;
                }
            }
            self.coeffs[i] = c;
            if let Some(f) = self.dfs(i + 1, budget - c * c) {
                return Some(f);
            }
            if self.nodes_left == 0 {
                return None;
            }
        }
        None
    }

    fn verify(&self) -> Option<LaurentPoly> {
        let f =
            LaurentPoly::from_terms(self.coeffs.iter().enumerate().map(|(k, &c)| (k as i64, c)));
        let reflected = LaurentPoly::from_terms(f.terms().map(|(e, c)| (-e, c.clone())));
        if &(&f * &reflected) == self.target {
            Some(f)
        } else {
            None
        }
    }
}

fn isqrt(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    // float estimate, corrected exactly in i128
    let mut r = (v as f64).sqrt() as i64;
    while r > 0 && (r as i128) * (r as i128) > v as i128 {
        r -= 1;
    }
    while ((r + 1) as i128) * ((r + 1) as i128) <= v as i128 {
        r += 1;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alex(s: &str) -> AlexanderPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_polynomial_factors() {
        assert_eq!(
            fox_milnor(&AlexanderPolynomial::one(), 0),
            FoxMilnor::Factors(LaurentPoly::one())
        );
    }

    #[test]
    fn trefoil_square_factors() {
        let a = alex("t^2 - 2t^1 + 3 - 2t^-1 + t^-2");
        let FoxMilnor::Factors(f) = fox_milnor(&a, 2) else {
            panic!("expected a factorization");
        };
        // t^2 - t + 1 is t - 1 + t^-1 up to a unit
        assert_eq!(f, "t^2 - t^1 + 1".parse().unwrap());
        assert!(fox_milnor_check(&a, 2));
    }

    #[test]
    fn trefoil_is_conclusively_not_slice() {
        let a = alex("t^1 - 1 + t^-1");
        // The center coefficient is negative, so no bound can help.
        assert_eq!(fox_milnor(&a, 0), FoxMilnor::NoFactorization);
        assert_eq!(fox_milnor(&a, 1), FoxMilnor::NoFactorization);
        assert_eq!(fox_milnor(&a, 10), FoxMilnor::NoFactorization);
        assert!(!fox_milnor_check(&a, 10));
    }

    #[test]
    fn figure_eight_is_not_slice() {
        let a = alex("-t^1 + 3 - t^-1");
        assert_eq!(fox_milnor(&a, 5), FoxMilnor::NoFactorization);
    }

    #[test]
    fn small_bound_is_inconclusive() {
        let a = alex("t^2 - 2t^1 + 3 - 2t^-1 + t^-2");
        assert_eq!(fox_milnor(&a, 1), FoxMilnor::Inconclusive);
        assert!(!fox_milnor_check(&a, 1));
    }

    #[test]
    fn figure_eight_square_factors() {
        // (-t + 3 - t^-1)^2
        let a = alex("t^2 - 6t^1 + 11 - 6t^-1 + t^-2");
        let FoxMilnor::Factors(f) = fox_milnor(&a, 2) else {
            panic!("expected a factorization");
        };
        let reflected = LaurentPoly::from_terms(f.terms().map(|(e, c)| (-e, c.clone())));
        assert_eq!(&f * &reflected, *a.poly());
    }

    #[test]
    fn isqrt_edges() {
        assert_eq!(isqrt(-1), None);
        assert_eq!(isqrt(0), Some(0));
        assert_eq!(isqrt(1), Some(1));
        assert_eq!(isqrt(3), Some(1));
        assert_eq!(isqrt(4), Some(2));
        assert_eq!(isqrt(i64::MAX), Some(3037000499));
    }
}
