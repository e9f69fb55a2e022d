//! Exact arithmetic: rationals, slopes modulo 1, unimodular 2×2 matrices and
//! continued fractions.

mod cf;
mod matrix;
mod rational;

pub use cf::{
    cf_eval, cf_eval_matrix, cf_matrix, conway_representative, expand_all_even,
    expand_odd_numerator, mod_inverse, AllEvenCF, EvenOddCF,
};
pub use matrix::Mat2;
pub(crate) use rational::checked;
pub use rational::{ExtRational, Rational, SimpleSlope};
