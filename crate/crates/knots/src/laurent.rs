//! Exact Laurent polynomials in one variable `s`, used with `s = q^{1/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::Serialize;

/// `Σ c_p s^p` with rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigRational>,
}

impl LaurentPoly {
    pub fn monomial(power: i32, coeff: impl Into<BigRational>) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(power, coeff.into());
        p
    }

    /// `s`.
    pub fn var() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn constant(c: impl Into<BigRational>) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in terms {
            p.add_term(e, BigRational::from_integer(c.into()));
        }
        p
    }

    fn add_term(&mut self, power: i32, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(power).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i32, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, power: i32) -> BigRational {
        self.terms.get(&power).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `self · s^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, s: f64) -> f64 {
        self.terms.iter().map(|(&e, c)| c.to_f64().unwrap_or(f64::NAN) * s.powi(e)).sum()
    }

    /// Whether only even powers of `s` occur, i.e. a Laurent polynomial in `q`.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(BigInt::one())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &-rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Renders in `q`, with half-integer exponents as `q^(k/2)`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let var = match (e % 2 == 0, e / 2) {
                (true, 0) => String::new(),
                (true, 1) => "q".into(),
                (true, h) => format!("q^{h}"),
                (false, _) => format!("q^({e}/2)"),
            };
            if var.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{var}")?;
        }
        Ok(())
    }
}

/// A map from the power of `q^{1/2}` to the coefficient; integral
/// coefficients are numbers, others strings.
impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.is_integer().then(|| c.to_integer().to_i64()).flatten() {
                Some(v) => map.serialize_entry(&e.to_string(), &v)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}
