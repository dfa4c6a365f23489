//! Walk counting and the measures it produces: loop counts, spectral and
//! circular measures, classical density laws, Hankel positivity and the
//! Poincaré, theta and T series of rooted bipartite graphs.

pub mod circular;
pub mod laws;
pub mod loops;
pub mod series;

pub use circular::{circular_measure, circular_moment, spectral_radius};
pub use laws::{integrate, DensityLaw};
pub use loops::{
    bell_numbers, hankel_positive, loop_counts, moments_match, spectral_measure, AtomicMeasure, HankelReport,
    MomentOracle, MomentSequence,
};
pub use series::{
    ade_t_series, check_t_series, cyclotomic_series, poincare_series, t_series, theta_by_substitution,
    theta_from_poincare, CycloFactor, Cyclotomic, PowerSeries, TSeriesCheck,
};
