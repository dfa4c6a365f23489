//! Exact truncated power series, cyclotomic series, and the theta / T
//! transforms of a Poincaré series.

use std::fmt;
use std::str::FromStr;

use gsym_core::exact::binomial;
use gsym_core::{AdeTag, Error, Graph, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::loops::loop_counts;

/// Largest truncation order for cyclotomic series.
pub const MAX_ORDER: usize = 48;

/// Largest truncation order for Poincaré series.
pub const MAX_POINCARE_ORDER: usize = 24;

/// Power series `c_0 + c_1 q + … + c_R q^R` with exact rational coefficients,
/// truncated at order `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigRational::one())
    }

    pub fn monomial(order: usize, k: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads or truncates `coeffs` to order `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_integers(order: usize, coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|c| BigRational::from_integer(c.clone())))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(order, (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(order, (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.order(), self.coeffs.iter().map(|x| x * c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::Domain("series with zero constant term has no inverse".into()));
        }
        let order = self.order();
        let c0 = self.coeffs[0].recip();
        let mut out = Self::zero(order);
        out.coeffs[0] = c0.clone();
        for n in 1..=order {
            let s = (1..=n).fold(BigRational::zero(), |acc, k| acc + &self.coeffs[k] * &out.coeffs[n - k]);
            out.coeffs[n] = -s * &c0;
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Composition `self(g(q))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::Domain("inner series must vanish at 0".into()));
        }
        let order = self.order().min(g.order());
        let mut out = Self::zero(order);
        let mut power = Self::one(order);
        for c in self.coeffs.iter().take(order + 1) {
            if !c.is_zero() {
                out = out.add(&power.scale(c));
            }
            power = power.mul(g);
        }
        Ok(out)
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// A factor `1 − q^n`, or `1 + q^n` when `plus` is set (written `n⁺`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycloFactor {
    pub n: usize,
    pub plus: bool,
}

impl CycloFactor {
    pub fn minus(n: usize) -> Self {
        CycloFactor { n, plus: false }
    }

    pub fn plus(n: usize) -> Self {
        CycloFactor { n, plus: true }
    }

    fn series(self, order: usize) -> PowerSeries {
        let mut s = PowerSeries::one(order);
        if self.n <= order {
            s.coeffs[self.n] += rat(if self.plus { 1 } else { -1 });
        }
        s
    }
}

/// Cyclotomic expression `ξ(n_1,…:m_1,…) = Π(1 ∓ q^{n_i}) / Π(1 ∓ q^{m_j})`,
/// optionally divided by `1 − q` (one prime) or `1 − q²` (two primes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    pub numerator: Vec<CycloFactor>,
    pub denominator: Vec<CycloFactor>,
    pub primes: u8,
}

impl Cyclotomic {
    pub fn new(numerator: Vec<CycloFactor>, denominator: Vec<CycloFactor>, primes: u8) -> Self {
        Cyclotomic { numerator, denominator, primes }
    }

    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        cyclotomic_series(&self.numerator, &self.denominator, self.primes, order)
    }
}

pub fn cyclotomic_series(
    numerator: &[CycloFactor],
    denominator: &[CycloFactor],
    primes: u8,
    order: usize,
) -> Result<PowerSeries> {
    if order > MAX_ORDER {
        return Err(Error::Refused(format!("series order capped at {MAX_ORDER}")));
    }
    if numerator.iter().chain(denominator).any(|f| f.n == 0) {
        return Err(Error::Parameter("cyclotomic factors need n >= 1".into()));
    }
    let mut s = PowerSeries::one(order);
    for f in numerator {
        s = s.mul(&f.series(order));
    }
    for f in denominator {
        s = s.div(&f.series(order))?;
    }
    match primes {
        0 => {}
        1 => s = s.div(&CycloFactor::minus(1).series(order))?,
        2 => s = s.div(&CycloFactor::minus(2).series(order))?,
        _ => return Err(Error::Parameter("at most two prime marks".into())),
    }
    Ok(s)
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |fs: &[CycloFactor]| {
            fs.iter().map(|c| format!("{}{}", c.n, if c.plus { "+" } else { "" })).collect::<Vec<_>>().join(",")
        };
        write!(f, "xi{}({}:{})", "'".repeat(self.primes as usize), list(&self.numerator), list(&self.denominator))
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    /// Parses `xi''(3+:2)` or the bare form `3+:2` (primes as a leading `'`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s.strip_prefix("xi").unwrap_or(s);
        let primes = body.chars().take_while(|&c| c == '\'').count();
        let body = body[primes..].trim_start_matches('(').trim_end_matches(')');
        let (num, den) =
            body.split_once(':').ok_or_else(|| Error::Parameter(format!("expected `num:den` in `{s}`")))?;
        let factors = |t: &str| -> Result<Vec<CycloFactor>> {
            t.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| {
                    let x = x.trim();
                    let (digits, plus) = match x.strip_suffix('+') {
                        Some(d) => (d, true),
                        None => (x, false),
                    };
                    let n = digits.parse().map_err(|_| Error::Parameter(format!("bad factor `{x}`")))?;
                    Ok(CycloFactor { n, plus })
                })
                .collect()
        };
        Ok(Cyclotomic { numerator: factors(num)?, denominator: factors(den)?, primes: primes as u8 })
    }
}

/// Poincaré series `f(q) = Σ_k L_{2k} q^k` of a rooted bipartite graph.
pub fn poincare_series(g: &Graph, order: usize) -> Result<PowerSeries> {
    if order > MAX_POINCARE_ORDER {
        return Err(Error::Refused(format!("Poincaré order capped at {MAX_POINCARE_ORDER}")));
    }
    let root = g.root().ok_or_else(|| Error::Contract("Poincaré series needs a rooted graph".into()))?;
    if !g.is_bipartite() {
        return Err(Error::Contract("Poincaré series needs a bipartite graph".into()));
    }
    let loops = loop_counts(g, root, 2 * order)?;
    Ok(PowerSeries::from_integers(order, &loops.into_iter().step_by(2).collect::<Vec<_>>()))
}

/// Theta series by the closed coefficient formula
/// `a_r = Σ_k (−1)^{r−k} (2r/(r+k)) C(r+k, r−k) c_k` (with `a_0 = c_0`),
/// plus the `q` term that the formula leaves out.
pub fn theta_from_poincare(f: &PowerSeries) -> PowerSeries {
    let order = f.order();
    let coeffs = (0..=order).map(|r| {
        if r == 0 {
            return f.coeff(0);
        }
        let mut a = BigRational::zero();
        for k in 0..=r {
            let c = f.coeff(k);
            if c.is_zero() {
                continue;
            }
            let b =
                BigRational::new(BigInt::from(2 * r) * binomial((r + k) as u64, (r - k) as u64), BigInt::from(r + k));
            let term = b * c;
            if (r - k) % 2 == 0 {
                a += term;
            } else {
                a -= term;
            }
        }
        a
    });
    let theta = PowerSeries::from_coeffs(order, coeffs);
    theta.add(&PowerSeries::monomial(order, 1, BigRational::one()))
}

/// Theta series by substitution, `Θ(q) = q + (1−q)/(1+q) · f(q/(1+q)²)`.
pub fn theta_by_substitution(f: &PowerSeries) -> Result<PowerSeries> {
    let order = f.order();
    let one_plus = CycloFactor::plus(1).series(order);
    let q = PowerSeries::monomial(order, 1, BigRational::one());
    let z = q.div(&one_plus.mul(&one_plus))?;
    let ratio = CycloFactor::minus(1).series(order).div(&one_plus)?;
    Ok(q.add(&ratio.mul(&f.compose(&z)?)))
}

/// `T(q) = (Θ(q) − q) / (1 − q)`.
pub fn t_series(theta: &PowerSeries) -> Result<PowerSeries> {
    let order = theta.order();
    let q = PowerSeries::monomial(order, 1, BigRational::one());
    theta.sub(&q).div(&CycloFactor::minus(1).series(order))
}

/// The cyclotomic closed form of the T-series of an ADE graph with the
/// size convention of [`gsym_core::GraphFamily::Ade`].
pub fn ade_t_series(tag: AdeTag, size: usize) -> Option<Cyclotomic> {
    use CycloFactor as F;
    let (p, m) = (F::plus, F::minus);
    let c = match tag {
        AdeTag::A if size >= 2 => Cyclotomic::new(vec![m(size)], vec![m(size + 1)], 0),
        AdeTag::D if size >= 3 => Cyclotomic::new(vec![p(size - 2)], vec![p(size - 1)], 0),
        AdeTag::AffineA if size >= 4 && size.is_multiple_of(2) => {
            Cyclotomic::new(vec![p(size / 2)], vec![m(size / 2)], 1)
        }
        AdeTag::AffineD if size >= 4 => Cyclotomic::new(vec![p(size - 1)], vec![m(size - 2)], 2),
        AdeTag::E6 => Cyclotomic::new(vec![m(8)], vec![m(3), p(6)], 0),
        AdeTag::E7 => Cyclotomic::new(vec![m(12)], vec![m(4), p(9)], 0),
        AdeTag::E8 => Cyclotomic::new(vec![p(5), p(9)], vec![p(15)], 0),
        AdeTag::AffineE6 => Cyclotomic::new(vec![p(6)], vec![m(3), m(4)], 0),
        AdeTag::AffineE7 => Cyclotomic::new(vec![p(9)], vec![m(4), m(6)], 0),
        AdeTag::AffineE8 => Cyclotomic::new(vec![p(15)], vec![m(6), m(10)], 0),
        _ => return None,
    };
    Some(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct TSeriesCheck {
    pub poincare: PowerSeries,
    pub theta: PowerSeries,
    pub t_series: PowerSeries,
    pub expected: Option<PowerSeries>,
    pub theta_integral: bool,
    pub theta_paths_agree: bool,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

/// Loop counts → Poincaré → theta (both paths) → T, compared with `expected`.
pub fn check_t_series(g: &Graph, order: usize, expected: Option<&Cyclotomic>) -> Result<TSeriesCheck> {
    let poincare = poincare_series(g, order)?;
    let theta = theta_from_poincare(&poincare);
    let theta_paths_agree = theta_by_substitution(&poincare)? == theta;
    let t = t_series(&theta)?;
    let expected = expected.map(|c| c.series(order)).transpose()?;
    let matches = expected.as_ref().map(|e| *e == t);
    Ok(TSeriesCheck {
        theta_integral: theta.is_integral(),
        poincare,
        theta,
        t_series: t,
        expected,
        theta_paths_agree,
        matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsym_core::GraphFamily;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn arithmetic() {
        let one_minus = CycloFactor::minus(1).series(6);
        let geo = one_minus.inverse().unwrap();
        assert_eq!(ints(&geo), vec![1; 7]);
        assert_eq!(geo.mul(&one_minus), PowerSeries::one(6));
        let q = PowerSeries::monomial(6, 1, BigRational::one());
        assert_eq!(ints(&geo.compose(&q.mul(&q)).unwrap()), vec![1, 0, 1, 0, 1, 0, 1]);
        assert!(q.inverse().is_err());
    }

    #[test]
    fn cyclotomic_identities() {
        let a: Cyclotomic = "2+:3".parse().unwrap();
        let b: Cyclotomic = "xi(4:2,3)".parse().unwrap();
        assert_eq!(a.series(48).unwrap(), b.series(48).unwrap());
        for n in 1..10 {
            let c = Cyclotomic::new(vec![CycloFactor::minus(n)], vec![CycloFactor::minus(n)], 0);
            assert_eq!(c.series(20).unwrap(), PowerSeries::one(20));
        }
        let c: Cyclotomic = "xi''(3+:2)".parse().unwrap();
        assert_eq!(c.primes, 2);
        assert_eq!(c.to_string(), "xi''(3+:2)");
        assert!(cyclotomic_series(&[], &[], 0, 49).is_err());
    }

    #[test]
    fn segment_theta() {
        let g = GraphFamily::Ade(AdeTag::A, 3).build().unwrap();
        let f = poincare_series(&g, 12).unwrap();
        assert_eq!(ints(&f)[..4], [1, 1, 2, 4]);
        let theta = theta_from_poincare(&f);
        assert_eq!(theta, theta_by_substitution(&f).unwrap());
        assert!(theta.is_integral());
    }

    #[test]
    fn non_bipartite_rejected() {
        let g = GraphFamily::K(3).build().unwrap().with_root(0).unwrap();
        assert!(matches!(poincare_series(&g, 4), Err(Error::Contract(_))));
        assert!(matches!(poincare_series(&GraphFamily::C(4).build().unwrap(), 4), Err(Error::Contract(_))));
    }

    #[test]
    fn ade_examples() {
        for (tag, size) in [(AdeTag::A, 5), (AdeTag::E6, 6), (AdeTag::AffineA, 8), (AdeTag::AffineE8, 8)] {
            let g = GraphFamily::Ade(tag, size).build().unwrap();
            let r = check_t_series(&g, 12, ade_t_series(tag, size).as_ref()).unwrap();
            assert_eq!(r.matches, Some(true), "{tag}{size}");
            assert!(r.theta_integral && r.theta_paths_agree);
        }
    }
}
