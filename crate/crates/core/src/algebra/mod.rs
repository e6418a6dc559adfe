//! Exact arithmetic: rationals, polynomials, truncated series and the formal
//! moment-polynomial ring.

mod bernoulli;
mod moment;
mod polynomial;
mod rational;
mod series;

pub use bernoulli::{bernoulli_number, bernoulli_numbers, faulhaber_polynomial, summation_operator};
pub use moment::{MomentPolynomial, MomentSymbol, Monomial};
pub use polynomial::Polynomial;
pub use rational::{
    binomial, factorial, format_rational, format_rationals, int, parse_rational, parse_rational_json, rat, Rational,
};
pub use series::TruncatedSeries;
