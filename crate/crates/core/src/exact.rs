//! Exact integer and rational linear algebra: fraction-free Bareiss
//! determinants, rational Gauss-Jordan inversion, integer polynomials and a
//! few combinatorial helpers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Contract("matrix must be square".into()));
    }
    Ok(n)
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
/// Every intermediate division is exact.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&p| !a[p][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

pub fn det_i64(m: &[Vec<i64>]) -> Result<BigInt> {
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    det_bareiss(&big)
}

/// Determinant over the rationals. Denominators are cleared row by row and
/// the integer determinant is taken by Bareiss.
pub fn det_rational(m: &[Vec<BigRational>]) -> Result<BigRational> {
    check_square(m)?;
    let mut scale = BigRational::one();
    let mut rows = Vec::with_capacity(m.len());
    for row in m {
        let l = row.iter().fold(BigInt::one(), |l, x| num_integer::Integer::lcm(&l, x.denom()));
        scale /= BigRational::from_integer(l.clone());
        rows.push(row.iter().map(|x| (x * &l).to_integer()).collect::<Vec<_>>());
    }
    Ok(BigRational::from_integer(det_bareiss(&rows)?) * scale)
}

/// Inverse over the rationals by Gauss-Jordan elimination, `None` if singular.
pub fn inverse_rational(m: &[Vec<BigRational>]) -> Result<Option<Vec<Vec<BigRational>>>> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for c in 0..n {
        let Some(p) = (c..n).find(|&p| !a[p][c].is_zero()) else {
            return Ok(None);
        };
        a.swap(c, p);
        inv.swap(c, p);
        let piv = a[c][c].recip();
        for x in a[c].iter_mut().chain(inv[c].iter_mut()) {
            *x *= &piv;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for j in 0..n {
                let t = &f * &a[c][j];
                a[r][j] -= t;
                let t = &f * &inv[c][j];
                inv[r][j] -= t;
            }
        }
    }
    Ok(Some(inv))
}

/// Polynomial with big-integer coefficients, lowest degree first, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let a = c.abs();
            let unit = a.is_one() && k > 0;
            if !unit {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Leibniz expansion, for cross-checking at small sizes.
    fn det_leibniz(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0i64;
        permute(&mut perm, 0, &mut |p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let term: i64 = (0..n).map(|i| m[i][p[i]]).product();
            total += if inversions % 2 == 0 { term } else { -term };
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_i64(&[]).unwrap(), BigInt::one());
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]).unwrap(), BigInt::from(-1));
        assert_eq!(det_i64(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap(), BigInt::from(4));
        assert!(det_i64(&[vec![1, 2]]).is_err());
    }

    #[test]
    fn rational_inverse() {
        let m = vec![vec![rat(1, 1), rat(1, 2)], vec![rat(1, 3), rat(1, 4)]];
        let inv = inverse_rational(&m).unwrap().unwrap();
        assert_eq!(inv, vec![vec![rat(3, 1), rat(-6, 1)], vec![rat(-4, 1), rat(12, 1)]]);
        assert_eq!(det_rational(&m).unwrap(), rat(1, 12));
        let sing = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert!(inverse_rational(&sing).unwrap().is_none());
    }

    #[test]
    fn polynomials() {
        let p = IntPoly::from_i64(&[1, 0, -3, 0, 1]);
        assert_eq!(p.to_string(), "x^4 - 3x^2 + 1");
        assert_eq!(IntPoly::from_i64(&[0, -1]).to_string(), "-x");
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(5));
        let sq = (&IntPoly::x() + &IntPoly::constant(1)).pow(2);
        assert_eq!(sq, IntPoly::from_i64(&[1, 2, 1]));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(factorial(11), BigInt::from(39_916_800));
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(n in 1usize..6, vals in proptest::collection::vec(-5i64..6, 36)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| vals[i * n..(i + 1) * n].to_vec()).collect();
            prop_assert_eq!(det_i64(&m).unwrap(), BigInt::from(det_leibniz(&m)));
        }
    }
}
