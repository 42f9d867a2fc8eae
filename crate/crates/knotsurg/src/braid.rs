//! Braid words and the combinatorial moves the surgery calculus needs.
//!
//! A braid on `n` strands is a word in the generators `s1 .. s{n-1}` and
//! their inverses. Closures of braids are the knot inputs everywhere else
//! in this crate; multi-component closures are rejected at the Alexander
//! boundary, not here.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One letter of a braid word: the generator `s{index}` or its inverse.
/// Indices are 1-based; a braid on `n` strands uses indices `1..=n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn positive(index: usize) -> Letter {
        Letter {
            index,
            sign: Sign::Positive,
        }
    }

    pub fn negative(index: usize) -> Letter {
        Letter {
            index,
            sign: Sign::Negative,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flipped(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Braid {
    strands: usize,
    word: Vec<Letter>,
}

impl Braid {
    /// Validates that every generator index lies in `1..=strands-1`.
    pub fn new(strands: usize, word: Vec<Letter>) -> Result<Braid> {
        if strands == 0 {
            return Err(Error::Syntax("strand count must be positive".into()));
        }
        for letter in &word {
            if letter.index == 0 || letter.index >= strands {
                return Err(Error::GeneratorIndex {
                    index: letter.index,
                    strands,
                });
            }
        }
        Ok(Braid { strands, word })
    }

    /// The empty word on one strand; its closure is the unknot.
    pub fn unknot() -> Braid {
        Braid {
            strands: 1,
            word: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    /// Number of link components of the braid closure: the cycle count of
    /// the underlying permutation.
    pub fn closure_components(&self) -> usize {
        // strand_at[p] = which top strand currently sits at position p
        let mut strand_at: Vec<usize> = (0..self.strands).collect();
        for letter in &self.word {
            strand_at.swap(letter.index - 1, letter.index);
        }
        let mut end_position = vec![0usize; self.strands];
        for (pos, &strand) in strand_at.iter().enumerate() {
            end_position[strand] = pos;
        }

        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                s = end_position[s];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Inverts the sign of every letter; the closure becomes the mirror
    /// image of the closure of `self`.
    pub fn mirror(&self) -> Braid {
        Braid {
            strands: self.strands,
            word: self.word.iter().map(|l| l.inverse()).collect(),
        }
    }

    /// Reverses the word order; the closure becomes the reverse of the
    /// closure of `self`.
    pub fn reverse(&self) -> Braid {
        Braid {
            strands: self.strands,
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// The reversed mirror `-K`, the inverse in the knot concordance
    /// group: `K # -K` bounds the obvious slice disk.
    pub fn concordance_inverse(&self) -> Braid {
        self.reverse().mirror()
    }

    /// Connected sum of closures. Both inputs must close to knots; the
    /// result lives on `a.strands + b.strands - 1` strands, with the word
    /// of `b` shifted past the strands of `a`.
    pub fn connected_sum(&self, other: &Braid) -> Result<Braid> {
        for b in [self, other] {
            let components = b.closure_components();
            if components != 1 {
                return Err(Error::NotAKnot { components });
            }
        }
        let shift = self.strands - 1;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|l| Letter {
            index: l.index + shift,
            sign: l.sign,
        }));
        Ok(Braid {
            strands: self.strands + other.strands - 1,
            word,
        })
    }
}

/// Renders in the grammar accepted by [`FromStr`]: `B3: s1 s2^-1`.
impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for letter in &self.word {
            write!(f, " s{}", letter.index)?;
            if letter.sign == Sign::Negative {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Grammar: a `B<n>:` prefix giving the strand count, then
/// whitespace-separated letters `s<i>` or `s<i>^-1`.
impl FromStr for Braid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Braid> {
        let text = s.trim();
        let rest = text
            .strip_prefix('B')
            .ok_or_else(|| Error::Syntax(format!("expected 'B<n>:' prefix in '{text}'")))?;
        let colon = rest
            .find(':')
            .ok_or_else(|| Error::Syntax(format!("expected ':' after strand count in '{text}'")))?;
        let strands: usize = rest[..colon]
            .parse()
            .map_err(|_| Error::Syntax(format!("bad strand count '{}'", &rest[..colon])))?;
        if strands == 0 {
            return Err(Error::Syntax("strand count must be positive".into()));
        }

        let mut word = Vec::new();
        for token in rest[colon + 1..].split_whitespace() {
            let body = token
                .strip_prefix('s')
                .ok_or_else(|| Error::Syntax(format!("bad letter '{token}'")))?;
            let (digits, sign) = match body.strip_suffix("^-1") {
                Some(d) => (d, Sign::Negative),
                None => (body, Sign::Positive),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Syntax(format!("bad letter '{token}'")));
            }
            let index: usize = digits
                .parse()
                .map_err(|_| Error::Syntax(format!("bad letter '{token}'")))?;
            word.push(Letter { index, sign });
        }
        Braid::new(strands, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn braid(s: &str) -> Braid {
        s.parse().unwrap()
    }

    #[test]
    fn parse_trefoil() {
        let b = braid("B2: s1 s1 s1");
        assert_eq!(b.strands(), 2);
        assert_eq!(b.word(), &[Letter::positive(1); 3]);
    }

    #[test]
    fn parse_figure_eight() {
        let b = braid("B3: s1 s2^-1 s1 s2^-1");
        assert_eq!(b.strands(), 3);
        assert_eq!(
            b.word(),
            &[
                Letter::positive(1),
                Letter::negative(2),
                Letter::positive(1),
                Letter::negative(2),
            ]
        );
    }

    #[test]
    fn parse_rejects_out_of_range_index() {
        assert!(matches!(
            "B2: s3".parse::<Braid>(),
            Err(Error::GeneratorIndex {
                index: 3,
                strands: 2
            })
        ));
        assert!(matches!(
            "B2: s0".parse::<Braid>(),
            Err(Error::GeneratorIndex {
                index: 0,
                strands: 2
            })
        ));
        assert!(matches!(
            "B1: s1".parse::<Braid>(),
            Err(Error::GeneratorIndex {
                index: 1,
                strands: 1
            })
        ));
    }

    #[test]
    fn parse_rejects_malformed_tokens() {
        assert!("B2: x1".parse::<Braid>().is_err());
        assert!("B2: s1^2".parse::<Braid>().is_err());
        assert!("B2: s1^-2".parse::<Braid>().is_err());
        assert!("B2: s-1".parse::<Braid>().is_err());
        assert!("2: s1".parse::<Braid>().is_err());
        assert!("B0:".parse::<Braid>().is_err());
        assert!("Bx:".parse::<Braid>().is_err());
    }

    #[test]
    fn parse_unknot() {
        assert_eq!(braid("B1:"), Braid::unknot());
    }

    #[test]
    fn closure_component_counts() {
        assert_eq!(braid("B1:").closure_components(), 1);
        assert_eq!(braid("B2: s1").closure_components(), 1);
        assert_eq!(braid("B2:").closure_components(), 2);
        assert_eq!(braid("B3: s1").closure_components(), 2);
        assert_eq!(braid("B2: s1 s1 s1").closure_components(), 1);
        assert_eq!(braid("B3: s1 s2^-1 s1 s2^-1").closure_components(), 1);
        assert_eq!(braid("B2: s1 s1").closure_components(), 2);
    }

    #[test]
    fn mirror_flips_signs() {
        assert_eq!(
            braid("B2: s1 s1 s1").mirror(),
            braid("B2: s1^-1 s1^-1 s1^-1")
        );
        assert_eq!(Braid::unknot().mirror(), Braid::unknot());
    }

    #[test]
    fn reverse_reverses_order() {
        assert_eq!(braid("B3: s1 s2^-1").reverse(), braid("B3: s2^-1 s1"));
        assert_eq!(Braid::unknot().reverse(), Braid::unknot());
    }

    #[test]
    fn connected_sum_shifts_indices() {
        let trefoil = braid("B2: s1 s1 s1");
        let sum = trefoil.connected_sum(&trefoil.mirror()).unwrap();
        assert_eq!(sum, braid("B3: s1 s1 s1 s2^-1 s2^-1 s2^-1"));
        assert_eq!(sum.closure_components(), 1);
    }

    #[test]
    fn connected_sum_with_unknot() {
        let trefoil = braid("B2: s1 s1 s1");
        let sum = Braid::unknot().connected_sum(&trefoil).unwrap();
        assert_eq!(sum, trefoil);
    }

    #[test]
    fn connected_sum_rejects_links() {
        let link = braid("B2:");
        let trefoil = braid("B2: s1 s1 s1");
        assert!(matches!(
            trefoil.connected_sum(&link),
            Err(Error::NotAKnot { components: 2 })
        ));
    }

    prop_compose! {
        fn arb_braid()(strands in 1usize..=5)(
            strands in Just(strands),
            word in prop::collection::vec(
                (1usize..=strands.max(2) - 1, prop::bool::ANY),
                0..12,
            ),
        ) -> Braid {
            let word = if strands == 1 {
                Vec::new()
            } else {
                word.into_iter()
                    .map(|(i, neg)| if neg { Letter::negative(i) } else { Letter::positive(i) })
                    .collect()
            };
            Braid::new(strands, word).unwrap()
        }
    }

    proptest! {
        #[test]
        fn mirror_and_reverse_are_involutions(b in arb_braid()) {
            prop_assert_eq!(b.mirror().mirror(), b.clone());
            prop_assert_eq!(b.reverse().reverse(), b.clone());
        }

        #[test]
        fn components_invariant_under_mirror_and_reverse(b in arb_braid()) {
            let c = b.closure_components();
            prop_assert_eq!(b.mirror().closure_components(), c);
            prop_assert_eq!(b.reverse().closure_components(), c);
        }

        #[test]
        fn format_parse_round_trip(b in arb_braid()) {
            let rendered = b.to_string();
            prop_assert_eq!(rendered.parse::<Braid>().unwrap(), b);
        }

        #[test]
        fn connected_sum_of_knots_is_a_knot(
            a in arb_braid().prop_filter("knot", Braid::is_knot),
            b in arb_braid().prop_filter("knot", Braid::is_knot),
        ) {
            let sum = a.connected_sum(&b).unwrap();
            prop_assert_eq!(sum.closure_components(), 1);
            prop_assert_eq!(sum.strands(), a.strands() + b.strands() - 1);
        }
    }
}
