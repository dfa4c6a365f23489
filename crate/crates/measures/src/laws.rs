//! The four classical densities on `[−2,2]` and `[0,4]`: closed-form
//! densities, Cauchy transforms, Stieltjes inversion and quadrature moments.

use std::f64::consts::PI;
use std::str::FromStr;

use gsym_core::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use crate::loops::MomentOracle;

/// Largest moment order accepted by [`DensityLaw::moment`].
pub const MAX_MOMENT: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityLaw {
    /// `√(4 − x²) / 2π` on `[−2,2]`.
    Semicircle,
    /// `√(4x − x²) / 2πx` on `[0,4]`.
    MarchenkoPastur,
    /// `1 / π√(x(4 − x))` on `[0,4]`.
    Arcsine,
    /// `√((2 + x)/(2 − x)) / 2π` on `[−2,2]`.
    ModifiedArcsine,
}

impl DensityLaw {
    pub const ALL: [DensityLaw; 4] = [Self::Semicircle, Self::MarchenkoPastur, Self::Arcsine, Self::ModifiedArcsine];

    pub fn support(self) -> (f64, f64) {
        match self {
            Self::Semicircle | Self::ModifiedArcsine => (-2.0, 2.0),
            Self::MarchenkoPastur | Self::Arcsine => (0.0, 4.0),
        }
    }

    /// Density at `x`; zero off the support, infinite at integrable
    /// endpoint singularities.
    pub fn density(self, x: f64) -> f64 {
        let (lo, hi) = self.support();
        if !(lo..=hi).contains(&x) {
            return 0.0;
        }
        match self {
            Self::Semicircle => (4.0 - x * x).sqrt() / (2.0 * PI),
            Self::MarchenkoPastur => (4.0 * x - x * x).sqrt() / (2.0 * PI * x),
            Self::Arcsine => 1.0 / (PI * (x * (4.0 - x)).sqrt()),
            Self::ModifiedArcsine => ((2.0 + x) / (2.0 - x)).sqrt() / (2.0 * PI),
        }
    }

    /// Closed-form Cauchy transform `G(ξ) = ∫ dμ(x) / (ξ − x)`. Square roots
    /// are taken as products of principal branches, which are analytic off
    /// the support and give `G(ξ) ~ 1/ξ` at infinity.
    pub fn cauchy(self, xi: Complex64) -> Result<Complex64> {
        let (lo, hi) = self.support();
        if xi.im == 0.0 && (lo..=hi).contains(&xi.re) {
            return Err(Error::Domain(format!("Cauchy transform undefined on the support at {}", xi.re)));
        }
        let g = match self {
            Self::Semicircle => (xi - (xi - 2.0).sqrt() * (xi + 2.0).sqrt()) / 2.0,
            Self::MarchenkoPastur => (xi - xi.sqrt() * (xi - 4.0).sqrt()) / (2.0 * xi),
            Self::Arcsine => 1.0 / (xi.sqrt() * (xi - 4.0).sqrt()),
            Self::ModifiedArcsine => ((xi + 2.0) / ((xi + 2.0).sqrt() * (xi - 2.0).sqrt()) - 1.0) / 2.0,
        };
        Ok(g)
    }

    /// `−Im G(x + it) / π`, which tends to the density as `t → 0⁺`.
    pub fn stieltjes_density(self, x: f64, t: f64) -> Result<f64> {
        if t.is_nan() || t <= 0.0 {
            return Err(Error::Parameter("Stieltjes inversion needs t > 0".into()));
        }
        Ok(-self.cauchy(Complex64::new(x, t))?.im / PI)
    }

    /// `∫ x^k dμ` by adaptive Gauss-Kronrod quadrature after an angular
    /// substitution that removes the endpoint singularities.
    pub fn moment(self, k: u32) -> Result<f64> {
        if k > MAX_MOMENT {
            return Err(Error::Parameter(format!("moment order capped at {MAX_MOMENT}")));
        }
        let k = k as i32;
        let f = move |t: f64| -> f64 {
            let c = t.cos();
            match self {
                Self::Semicircle => (2.0 * c).powi(k) * 2.0 * t.sin().powi(2) / PI,
                Self::MarchenkoPastur => (2.0 - 2.0 * c).powi(k) * (1.0 + c) / PI,
                Self::Arcsine => (2.0 - 2.0 * c).powi(k) / PI,
                Self::ModifiedArcsine => (2.0 * c).powi(k) * (1.0 + c) / PI,
            }
        };
        Ok(integrate(f, 0.0, PI, 1e-13))
    }

    /// The combinatorial sequence these moments are known to equal.
    pub fn oracle_moment(self, k: usize) -> BigInt {
        match self {
            Self::Semicircle if k % 2 == 1 => BigInt::zero(),
            Self::Semicircle => MomentOracle::Catalan.value(k / 2),
            Self::MarchenkoPastur => MomentOracle::Catalan.value(k),
            Self::Arcsine => MomentOracle::Central.value(k),
            Self::ModifiedArcsine => MomentOracle::Middle.value(k),
        }
    }
}

impl FromStr for DensityLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "semicircle" => Ok(Self::Semicircle),
            "marchenkopastur" | "mp" => Ok(Self::MarchenkoPastur),
            "arcsine" => Ok(Self::Arcsine),
            "modifiedarcsine" => Ok(Self::ModifiedArcsine),
            _ => Err(Error::Parameter(format!("unknown density law `{s}`"))),
        }
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// Kronrod estimate and its difference from the embedded Gauss rule.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let s = f(c - h * XGK[i]) + f(c + h * XGK[i]);
        kronrod += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    (kronrod * h, (kronrod - gauss).abs() * h)
}

/// Adaptive G7-K15 quadrature to absolute tolerance `tol`, or to roughly
/// machine precision relative to each panel when that is coarser.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn rec(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (value, err) = gk15(f, a, b);
        if err <= tol || err <= 50.0 * f64::EPSILON * value.abs() || depth == 0 {
            return value;
        }
        let m = 0.5 * (a + b);
        rec(f, a, m, tol / 2.0, depth - 1) + rec(f, m, b, tol / 2.0, depth - 1)
    }
    rec(&f, a, b, tol, 24)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn moments_match_oracles() {
        for law in DensityLaw::ALL {
            for k in 0..=MAX_MOMENT {
                let m = law.moment(k).unwrap();
                let e = law.oracle_moment(k as usize).to_f64().unwrap();
                let tol = if k <= 8 { 1e-8 } else { 1e-12 * e.max(1e2) };
                assert!((m - e).abs() <= tol, "{law:?} k={k}: {m} vs {e}");
            }
        }
        assert!(DensityLaw::Semicircle.moment(17).is_err());
    }

    #[test]
    fn quadrature_matches_direct_density() {
        for law in DensityLaw::ALL {
            let (lo, hi) = law.support();
            let mass = integrate(|x| law.density(x), lo + 1e-9, hi - 1e-9, 1e-10);
            assert!((mass - 1.0).abs() < 1e-3, "{law:?} {mass}");
        }
    }

    #[test]
    fn stieltjes_inversion() {
        let s = DensityLaw::Semicircle.stieltjes_density(0.0, 1e-3).unwrap();
        assert!((s - 1.0 / PI).abs() < 2e-2);
        let a = DensityLaw::Arcsine.stieltjes_density(2.0, 1e-3).unwrap();
        assert!((a - 1.0 / (2.0 * PI)).abs() < 2e-2);
        for law in DensityLaw::ALL {
            let (lo, hi) = law.support();
            for j in 1..=5 {
                let x = lo + (hi - lo) * j as f64 / 6.0;
                let d = law.stieltjes_density(x, 1e-3).unwrap();
                assert!((d - law.density(x)).abs() < 2e-2, "{law:?} at {x}: {d}");
            }
            assert!(matches!(law.cauchy(Complex64::new(lo, 0.0)), Err(Error::Domain(_))));
            assert!(law.stieltjes_density(0.5, 0.0).is_err());
        }
    }

    #[test]
    fn cauchy_decays_like_inverse() {
        for law in DensityLaw::ALL {
            for xi in [Complex64::new(1e4, 3.0), Complex64::new(-2e4, -1.0), Complex64::new(0.0, 1e4)] {
                let g = law.cauchy(xi).unwrap();
                assert!((g * xi - 1.0).norm() < 1e-2, "{law:?} {xi}");
            }
        }
    }
}
