//! Gram matrices `n^{|π ∨ σ|}` on `NC_2(2k)`, `NC(k)` and `P(k)`, the
//! Möbius matrix of `P(k)`, and the closed-form determinants.

use std::str::FromStr;

use gsym_core::exact::{binomial, det_bareiss, inverse_rational, IntPoly};
use gsym_core::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagram::enumerate_nc2;
use crate::partitions::{enumerate_nc, enumerate_partitions, fatten, SetPartition};

/// Largest `k` for direct Gram matrices (42 × 42 on `NC_2(10)`, 52 × 52 on `P(5)`).
pub const GRAM_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Noncrossing pairings of `2k` points; joins count loops.
    Nc2,
    /// Noncrossing partitions of `k` points.
    Nc,
    /// All partitions of `k` points.
    P,
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nc2" => Ok(Basis::Nc2),
            "nc" => Ok(Basis::Nc),
            "p" => Ok(Basis::P),
            _ => Err(Error::Parameter(format!("unknown basis `{s}` (nc2, nc, p)"))),
        }
    }
}

/// Basis elements as partitions; pairings of `2k` points become partitions
/// into pairs.
pub fn basis_elements(basis: Basis, k: usize) -> Result<Vec<SetPartition>> {
    if k > GRAM_CAP {
        return Err(Error::Refused(format!("Gram matrices capped at k = {GRAM_CAP}")));
    }
    match basis {
        Basis::Nc2 => enumerate_nc2(2 * k, 0)?
            .iter()
            .map(|q| {
                let labels: Vec<usize> = (0..2 * k).map(|i| i.min(q.mate(i))).collect();
                Ok(SetPartition::from_labels(&labels))
            })
            .collect(),
        Basis::Nc => enumerate_nc(k),
        Basis::P => enumerate_partitions(k),
    }
}

/// Exponents `|π ∨ σ|`, the symbolic form of the Gram matrix. The join is
/// taken in `P`; on `NC(k)` this is the join under which fattening relates
/// the `NC(k)` and `NC_2(2k)` Gram matrices (the `NC(k)` lattice join is
/// coarser from `k = 4` on and breaks that relation).
pub fn gram_exponents(basis: Basis, k: usize) -> Result<Vec<Vec<usize>>> {
    let elems = basis_elements(basis, k)?;
    elems.iter().map(|a| elems.iter().map(|b| Ok(a.join(b)?.block_count())).collect()).collect()
}

pub fn gram_matrix(basis: Basis, k: usize, n: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    Ok(gram_exponents(basis, k)?.into_iter().map(|row| row.into_iter().map(|e| n.pow(e as u32)).collect()).collect())
}

/// `A(π, σ) = 1` iff `π ≤ σ`, over `P(k)` ordered finest first.
pub fn order_matrix(k: usize) -> Result<Vec<Vec<BigInt>>> {
    let elems = basis_elements(Basis::P, k)?;
    Ok(elems.iter().map(|a| elems.iter().map(|b| BigInt::from(u8::from(a.refines(b)))).collect()).collect())
}

/// `μ(π, σ)` as the inverse of [`order_matrix`].
pub fn mobius_matrix(k: usize) -> Result<Vec<Vec<BigInt>>> {
    let a: Vec<Vec<BigRational>> =
        order_matrix(k)?.into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect();
    let inv = inverse_rational(&a)?.ok_or_else(|| Error::Domain("order matrix is singular".into()))?;
    Ok(inv.into_iter().map(|r| r.into_iter().map(|x| x.to_integer()).collect()).collect())
}

fn falling(n: &BigInt, m: usize) -> BigInt {
    (0..m).fold(BigInt::one(), |acc, i| acc * (n - BigInt::from(i)))
}

/// `Π_{π ∈ P(k)} n(n−1)…(n−|π|+1)`, zero when `n < k`.
pub fn lindstrom_det(k: usize, n: &BigInt) -> Result<BigInt> {
    let elems = basis_elements(Basis::P, k)?;
    Ok(elems.iter().map(|p| falling(n, p.block_count())).product())
}

/// `P_0 = 1`, `P_1 = X`, `P_{r+1} = X P_r − P_{r−1}`.
pub fn chebyshev(r: usize) -> IntPoly {
    let (mut a, mut b) = (IntPoly::constant(1), IntPoly::x());
    if r == 0 {
        return a;
    }
    for _ in 1..r {
        let next = &(&IntPoly::x() * &b) - &a;
        a = b;
        b = next;
    }
    b
}

/// `f_{kr} = C(2k, k−r) − C(2k, k−r−1)`, zero off range.
fn f(k: usize, r: usize) -> BigInt {
    let c = |m: i64| if m < 0 || m as usize > 2 * k { BigInt::zero() } else { binomial(2 * k as u64, m as u64) };
    let (k, r) = (k as i64, r as i64);
    c(k - r) - c(k - r - 1)
}

fn exponent(d: BigInt) -> Result<i64> {
    i64::try_from(d).map_err(|_| Error::Domain("exponent overflow".into()))
}

/// `Π_{r=1}^{k} P_r(x)^{d_{kr}}` with `d_{kr} = f_{kr} − f_{k,r+1}`, as a
/// rational function evaluated at `x`.
fn chebyshev_product(k: usize, x: &BigRational) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for r in 1..=k {
        let d = exponent(f(k, r) - f(k, r + 1))?;
        let p = chebyshev(r);
        let val =
            p.coeffs().iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()));
        if d < 0 && val.is_zero() {
            return Err(Error::Domain(format!("P_{r} vanishes with negative exponent")));
        }
        acc *= num_traits::pow::Pow::pow(&val, d as i32);
    }
    Ok(acc)
}

fn chebyshev_product_poly(k: usize) -> Result<IntPoly> {
    let mut acc = IntPoly::constant(1);
    for r in 1..=k {
        let d = exponent(f(k, r) - f(k, r + 1))?;
        if d < 0 {
            return Err(Error::Domain("negative exponent in the product formula".into()));
        }
        acc = &acc * &chebyshev(r).pow(d as u32);
    }
    Ok(acc)
}

/// Closed-form Gram determinant. The `NC_2` product runs over `r ≤ k` with
/// `k` half the number of points (checked against direct determinants).
/// The `NC` product is a polynomial in `√n` times `√n^{a_k}`, with
/// `a_k = Σ_{π ∈ NC(k)} (2|π| − k)`; it must involve only integer powers of `n`.
pub fn meander_det(basis: Basis, k: usize, n: &BigInt) -> Result<BigInt> {
    match basis {
        Basis::P => lindstrom_det(k, n),
        Basis::Nc2 => {
            let v = chebyshev_product(k, &BigRational::from_integer(n.clone()))?;
            if !v.is_integer() {
                return Err(Error::Domain("product formula is not integral".into()));
            }
            Ok(v.to_integer())
        }
        Basis::Nc => {
            let a: i64 = enumerate_nc(k)?.iter().map(|p| 2 * p.block_count() as i64 - k as i64).sum();
            if a < 0 {
                return Err(Error::Domain("negative power of the square root".into()));
            }
            let poly = &chebyshev_product_poly(k)? * &IntPoly::x().pow(a as u32);
            let coeffs = poly.coeffs();
            if coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
                return Err(Error::Domain("product formula has odd powers of the square root".into()));
            }
            Ok(coeffs.iter().step_by(2).rev().fold(BigInt::zero(), |acc, c| acc * n + c))
        }
    }
}

/// Direct determinant of the Gram matrix by Bareiss elimination.
pub fn gram_det(basis: Basis, k: usize, n: &BigInt) -> Result<BigInt> {
    det_bareiss(&gram_matrix(basis, k, n)?)
}

/// Checks `G_{2k,n}(π̃, σ̃) = n^k (Δ^{-1} G_{k,n²} Δ^{-1})(π, σ)` entrywise,
/// with `π̃` the fattening of `π ∈ NC(k)` and `Δ` the diagonal of `G_{k,n}`.
pub fn fattening_gram_relation(k: usize, n: &BigInt) -> Result<bool> {
    if n.is_zero() || n.is_negative() {
        return Err(Error::Parameter("n must be positive".into()));
    }
    let nc = basis_elements(Basis::Nc, k)?;
    let fat: Vec<SetPartition> = nc
        .iter()
        .map(|p| {
            let q = fatten(p)?;
            let labels: Vec<usize> = (0..2 * k).map(|i| i.min(q.mate(i))).collect();
            Ok(SetPartition::from_labels(&labels))
        })
        .collect::<Result<_>>()?;
    let n2 = n * n;
    for (i, a) in nc.iter().enumerate() {
        for (j, b) in nc.iter().enumerate() {
            let lhs = n.pow(fat[i].join(&fat[j])?.block_count() as u32);
            let scaled = n.pow(k as u32) * n2.pow(a.join(b)?.block_count() as u32);
            let diag = n.pow((a.block_count() + b.block_count()) as u32);
            if lhs * diag != scaled {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn small_gram_determinants() {
        for n in [2, 3, 5] {
            let nn = big(n);
            let n2 = &nn * &nn;
            assert_eq!(gram_det(Basis::Nc2, 2, &nn).unwrap(), &n2 * (&n2 - big(1)));
            let expected = nn.pow(5) * (&n2 - big(1)).pow(4) * (&n2 - big(2));
            assert_eq!(gram_det(Basis::Nc2, 3, &nn).unwrap(), expected);
        }
        let g = gram_matrix(Basis::Nc2, 2, &big(7)).unwrap();
        assert_eq!(g, vec![vec![big(49), big(7)], vec![big(7), big(49)]]);
    }

    #[test]
    fn product_formulas_match_direct() {
        for k in 1..=GRAM_CAP {
            for n in [2, 3, 5] {
                assert_eq!(
                    meander_det(Basis::Nc2, k, &big(n)).unwrap(),
                    gram_det(Basis::Nc2, k, &big(n)).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
        for k in 1..=4 {
            for n in [2, 3, 5, 7] {
                assert_eq!(lindstrom_det(k, &big(n)).unwrap(), gram_det(Basis::P, k, &big(n)).unwrap());
            }
        }
    }

    #[test]
    fn nc_product_formula() {
        for k in 1..=GRAM_CAP {
            for n in [2, 3, 4, 5, 9] {
                let direct = gram_det(Basis::Nc, k, &big(n)).unwrap();
                match meander_det(Basis::Nc, k, &big(n)) {
                    Ok(v) => assert_eq!(v, direct, "k={k} n={n}"),
                    Err(e) => panic!("k={k} n={n}: {e} (direct {direct})"),
                }
            }
        }
    }

    #[test]
    fn mobius() {
        assert_eq!(mobius_matrix(2).unwrap(), vec![vec![big(1), big(-1)], vec![big(0), big(1)]]);
        let m3 = mobius_matrix(3).unwrap();
        assert_eq!(m3[0][4], big(2));
        for k in 1..=4 {
            let a = order_matrix(k).unwrap();
            assert!((0..a.len()).all(|i| (0..i).all(|j| a[i][j].is_zero())));
        }
    }

    #[test]
    fn fattening() {
        for k in 1..=GRAM_CAP {
            for n in [2, 3] {
                assert!(fattening_gram_relation(k, &big(n)).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn chebyshev_values() {
        assert_eq!(chebyshev(2), IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(chebyshev(3), IntPoly::from_i64(&[0, -2, 0, 1]));
    }
}
