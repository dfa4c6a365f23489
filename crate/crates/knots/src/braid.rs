//! Braid words, their Temperley-Lieb images and the Jones polynomial of
//! the braid closure.
//!
//! Conventions, with `s = q^{1/2}` and loop value `δ = s + s^{-1}`:
//! `g_i ↦ s·ε_i − 1` and `g_i^{-1} ↦ s^{-1}·ε_i − 1`, where `s` is the root
//! of `t² − δt + 1 = 0`. For a braid on `k` strands with exponent sum `w`,
//! `V = (−δ)^{k−1} s^w tr(β)`, which is `(−1)^{k−1} s^w Σ c_D δ^{loops − 1}`.
//! This gives `V = 1` for the unknot, `−q^{1/2} − q^{-1/2}` for the
//! two-component unlink and `q + q³ − q⁴` for the closure of `g_1³`, and
//! satisfies `q^{-1}V_+ − qV_- = (q^{1/2} − q^{-1/2})V_0`.

use std::fmt;

use gsym_core::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::laurent::LaurentPoly;
use crate::tl::{closure_loops, TLElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Letters are `±i` for `g_i^{±1}`, `1 ≤ i < strands`.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parameter("a braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::Parameter(format!("letter {bad} out of range for {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Whitespace-separated signed generator indices, e.g. `"1 -2 1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| Error::parse(1, format!("bad braid letter `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i32 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::Contract("concatenated braids differ in strand count".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `α β α^{-1}`.
    pub fn conjugate(&self, alpha: &BraidWord) -> Result<Self> {
        alpha.concat(self)?.concat(&alpha.inverse())
    }

    /// Adds a strand and appends `g_k^{±1}`, `k` the old strand count.
    pub fn stabilize(&self, positive: bool) -> Self {
        let k = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { k } else { -k });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// The same braid with letter `index` replaced by its inverse, or
    /// deleted when `delete` is set.
    pub fn switch_letter(&self, index: usize, delete: bool) -> Result<Self> {
        if index >= self.letters.len() {
            return Err(Error::Parameter(format!("no letter at position {index}")));
        }
        let mut letters = self.letters.clone();
        if delete {
            letters.remove(index);
        } else {
            letters[index] = -letters[index];
        }
        Ok(BraidWord { strands: self.strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "[{}] {}", self.strands, letters.join(" "))
    }
}

/// `δ = s + s^{-1}`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, 1)])
}

fn letter_image(strands: usize, letter: i32) -> Result<TLElement<LaurentPoly>> {
    let eps = TLElement::<LaurentPoly>::generator(strands, letter.unsigned_abs() as usize)?;
    let coeff = LaurentPoly::monomial(letter.signum(), BigInt::one());
    eps.scale(&coeff).sub(&TLElement::identity(strands))
}

/// Image of the braid in `TL(k)` over Laurent polynomials in `s`.
pub fn braid_to_tl(beta: &BraidWord) -> Result<TLElement<LaurentPoly>> {
    let delta = loop_value();
    let mut acc = TLElement::identity(beta.strands);
    for &l in &beta.letters {
        acc = acc.compose(&letter_image(beta.strands, l)?, &delta)?;
    }
    Ok(acc)
}

/// Jones polynomial of the closure, as a Laurent polynomial in `q^{1/2}`.
pub fn jones_polynomial(beta: &BraidWord) -> Result<LaurentPoly> {
    let delta = loop_value();
    let image = braid_to_tl(beta)?;
    let mut powers = vec![LaurentPoly::one()];
    let mut sum = LaurentPoly::zero();
    for (d, c) in image.terms() {
        let loops = closure_loops(d)?;
        while powers.len() < loops {
            let next = powers.last().expect("nonempty") * &delta;
            powers.push(next);
        }
        sum = &sum + &(c * &powers[loops - 1]);
    }
    let sign = if beta.strands % 2 == 1 { 1 } else { -1 };
    Ok(sum.shift(beta.writhe()) * LaurentPoly::constant(BigInt::from(sign)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(strands: usize, word: &str) -> LaurentPoly {
        jones_polynomial(&BraidWord::parse(strands, word).unwrap()).unwrap()
    }

    #[test]
    fn book_values() {
        assert_eq!(v(1, ""), LaurentPoly::one());
        assert_eq!(v(2, ""), LaurentPoly::from_terms([(-1, -1), (1, -1)]));
        assert_eq!(v(2, "1 1 1"), LaurentPoly::from_terms([(2, 1), (6, 1), (8, -1)]));
        assert_eq!(v(2, "1"), LaurentPoly::one());
        assert_eq!(v(2, "-1"), LaurentPoly::one());
        assert_eq!(v(3, "1 -2 1 -2"), LaurentPoly::from_terms([(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)]));
    }

    #[test]
    fn braid_relations() {
        for k in 3..=5 {
            for i in 1..k as i32 - 1 {
                for (a, b) in [(i, i + 1), (-i, -(i + 1))] {
                    let lhs = braid_to_tl(&BraidWord::new(k, vec![a, b, a]).unwrap()).unwrap();
                    let rhs = braid_to_tl(&BraidWord::new(k, vec![b, a, b]).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
                let id = braid_to_tl(&BraidWord::new(k, vec![i, -i]).unwrap()).unwrap();
                assert_eq!(id, TLElement::identity(k));
            }
            let far = |a: i32, b: i32| braid_to_tl(&BraidWord::new(k, vec![a, b]).unwrap()).unwrap();
            if k >= 4 {
                assert_eq!(far(1, 3), far(3, 1));
                assert_eq!(far(1, -3), far(-3, 1));
            }
        }
    }

    #[test]
    fn parsing() {
        assert!(BraidWord::parse(2, "1 2").is_err());
        assert!(BraidWord::parse(2, "x").is_err());
        assert!(BraidWord::parse(3, "1 0").is_err());
        assert_eq!(BraidWord::parse(3, " 1 -2 ").unwrap().writhe(), 0);
    }
}
