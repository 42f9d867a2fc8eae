//! Seiberg-Witten invariants as finitely supported lattice functions, and
//! the knot-surgery action on them.
//!
//! An invariant is stored as its basic classes: a map from vectors in a
//! rank-`b` integer lattice to nonzero integer coefficients. Surgery along
//! a torus class `[T]` by an Alexander polynomial is group-ring
//! multiplication under the substitution `t = exp(2[T])`: the term
//! `a_k t^k` translates the whole invariant by `2k [T]` and scales it by
//! `a_k`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::alexander::{alexander, AlexanderPolynomial};
use crate::braid::Braid;
use crate::error::{Error, Result};

/// A finitely supported integer-valued function on `Z^rank`.
///
/// Charge-conjugation symmetry of the basic classes (`SW(-a) = ±SW(a)`)
/// is not an invariant of the type: both sign conventions occur in the
/// wild, so ingestion surfaces violations as warnings via
/// [`SWInvariant::symmetry_violations`] instead of rejecting them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SWInvariant {
    rank: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl SWInvariant {
    /// The zero invariant on a rank-`rank` lattice.
    pub fn zero(rank: usize) -> Self {
        SWInvariant {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(class, coefficient)` pairs, summing duplicates and
    /// dropping zeros. Every class must have length `rank`.
    pub fn from_terms<I>(rank: usize, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (class, coeff) in iter {
            if class.len() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: class.len(),
                });
            }
            *terms.entry(class).or_insert_with(BigInt::zero) += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SWInvariant { rank, terms })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, class: &[i64]) -> BigInt {
        self.terms.get(class).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic class order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    /// Total coefficient sum; surgery by a normalized polynomial
    /// preserves it.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Pointwise sum of invariants of equal rank.
    pub fn add(&self, other: &SWInvariant) -> Result<SWInvariant> {
        check_rank(self.rank, other.rank)?;
        let mut terms = self.terms.clone();
        for (class, coeff) in other.terms() {
            *terms.entry(class.clone()).or_insert_with(BigInt::zero) += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SWInvariant {
            rank: self.rank,
            terms,
        })
    }

    /// Classes violating `|SW(-a)| = |SW(a)|`, one representative per
    /// unordered pair. Empty for every invariant that satisfies the usual
    /// basic-class symmetry in either sign convention.
    pub fn symmetry_violations(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for (class, coeff) in &self.terms {
            let negated: Vec<i64> = class.iter().map(|&c| -c).collect();
            let partner = self.coeff(&negated);
            if partner.magnitude() == coeff.magnitude() {
                continue;
            }
            // when both sides are stored the pair shows up twice;
            // report the lexicographically smaller class only
            if !partner.is_zero() && *class > negated {
                continue;
            }
            out.push(class.clone());
        }
        out
    }
}

/// The homology class of the surgery torus, with an optional intersection
/// form for the `[T]^2 = 0` sanity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusClass {
    vector: Vec<i64>,
    form: Option<Vec<Vec<i64>>>,
}

impl TorusClass {
    pub fn new(vector: Vec<i64>) -> Self {
        TorusClass { vector, form: None }
    }

    /// Attaches a symmetric intersection form and checks that the class
    /// is isotropic: a torus with a cusp neighborhood has square zero.
    pub fn with_form(vector: Vec<i64>, form: Vec<Vec<i64>>) -> Result<Self> {
        let b = vector.len();
        if form.len() != b || form.iter().any(|row| row.len() != b) {
            return Err(Error::RankMismatch {
                left: b,
                right: form.len(),
            });
        }
        for (i, row) in form.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate().take(i) {
                if entry != form[j][i] {
                    return Err(Error::Schema(format!(
                        "intersection form is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        let mut square: i128 = 0;
        for (vi, row) in vector.iter().zip(&form) {
            for (vj, entry) in vector.iter().zip(row) {
                square += *vi as i128 * *entry as i128 * *vj as i128;
            }
        }
        if square != 0 {
            return Err(Error::NotIsotropic { square });
        }
        Ok(TorusClass {
            vector,
            form: Some(form),
        })
    }

    pub fn rank(&self) -> usize {
        self.vector.len()
    }

    pub fn vector(&self) -> &[i64] {
        &self.vector
    }

    pub fn form(&self) -> Option<&Vec<Vec<i64>>> {
        self.form.as_ref()
    }
}

/// Which concordance of `K # -K` to itself acts on the invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Concordance {
    /// The product concordance; acts by surgery along the slice knot
    /// `K # -K`, which changes the invariant whenever its polynomial does.
    Product,
    /// The concordance built from the two slice disks; the surgery it
    /// induces preserves the smooth structure, so the invariant is
    /// returned unchanged.
    SliceSum,
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::RankMismatch { left, right });
    }
    Ok(())
}

fn translated(class: &[i64], torus: &[i64], k: i64) -> Result<Vec<i64>> {
    class
        .iter()
        .zip(torus)
        .map(|(&c, &t)| {
            2i64.checked_mul(k)
                .and_then(|kk| kk.checked_mul(t))
                .and_then(|shift| c.checked_add(shift))
                .ok_or(Error::CoordinateOverflow)
        })
        .collect()
}

/// Knot surgery on the invariant level: the group-ring product of `sw`
/// with `delta` under `t = exp(2[T])`, i.e.
/// `result(b) = sum_k a_k sw(b - 2k[T])`.
pub fn knot_surgery(
    sw: &SWInvariant,
    torus: &TorusClass,
    delta: &AlexanderPolynomial,
) -> Result<SWInvariant> {
    check_rank(sw.rank(), torus.rank())?;
    let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (class, coeff) in sw.terms() {
        for (k, a) in delta.poly().terms() {
            let shifted = translated(class, torus.vector(), k)?;
            *terms.entry(shifted).or_insert_with(BigInt::zero) += coeff * a;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(SWInvariant {
        rank: sw.rank(),
        terms,
    })
}

/// Surgering by `d1` then `d2` must equal surgering by `d1 * d2`; always
/// true because `t -> exp(2[T])` is a ring homomorphism.
pub fn surgery_composition_check(
    sw: &SWInvariant,
    torus: &TorusClass,
    d1: &AlexanderPolynomial,
    d2: &AlexanderPolynomial,
) -> Result<bool> {
    let twice = knot_surgery(&knot_surgery(sw, torus, d1)?, torus, d2)?;
    let once = knot_surgery(sw, torus, &(d1 * d2))?;
    Ok(twice == once)
}

/// The two concordance actions on the invariant, for the slice knot
/// `K # -K` built from `k`. They differ whenever `sw` is nonzero and the
/// polynomial of `k` is nontrivial, which is what makes concordances
/// distinguishable by this invariant.
pub fn concordance_surgery(
    sw: &SWInvariant,
    torus: &TorusClass,
    k: &Braid,
    concordance: Concordance,
) -> Result<SWInvariant> {
    let components = k.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    check_rank(sw.rank(), torus.rank())?;
    match concordance {
        Concordance::Product => {
            let slice_sum = k.connected_sum(&k.concordance_inverse())?;
            knot_surgery(sw, torus, &alexander(&slice_sum)?)
        }
        Concordance::SliceSum => Ok(sw.clone()),
    }
}

/// Exact equality of canonicalized invariants of equal rank.
pub fn sw_equal(a: &SWInvariant, b: &SWInvariant) -> Result<bool> {
    check_rank(a.rank(), b.rank())?;
    Ok(a == b)
}

/// Whether the lifted surgery changes the double cover's invariant; true
/// certifies that the twisted surgery changed the smooth structure
/// downstairs. A zero `sw_cover` or a trivial polynomial yields false:
/// no conclusion.
pub fn twisted_surgery_changes(
    sw_cover: &SWInvariant,
    torus: &TorusClass,
    delta: &AlexanderPolynomial,
) -> Result<bool> {
    let surgered = knot_surgery(sw_cover, torus, delta)?;
    Ok(!sw_equal(&surgered, sw_cover)?)
}
