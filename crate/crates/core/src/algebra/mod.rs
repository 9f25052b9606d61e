//! Exact coefficient ring and truncated-series arithmetic.
//!
//! - [`scalar::ExactScalar`]: Q[γ, ζ2, ζ3, …] with auxiliary symbols
//! - [`poly::Poly`]: dense polynomials (the variable is E in spectral use)
//! - [`laurent::Laurent`]: truncated Laurent series (residue in O(1))
//! - [`gseries::GSeries`]: truncated series in g with order tracking
//! - [`gamma`]: exact Γ-expansions around poles
//! - [`json`]: canonical serialization

pub mod gamma;
pub mod gseries;
pub mod json;
pub mod laurent;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use gseries::GSeries;
pub use laurent::Laurent;
pub use poly::{Poly, QPoly};
pub use ring::Ring;
pub use scalar::{ExactScalar, Monomial, Sym};

use crate::error::Result;

/// Polynomial in E with exact-scalar coefficients.
pub type EPoly = Poly<ExactScalar>;

/// Truncated series in g with polynomial-in-E coefficients: B(E,g), A(E,g).
pub type SeriesInG = GSeries<EPoly>;

/// Fast-path variant over plain rationals for the deep recursions.
pub type QSeriesInG = GSeries<QPoly>;

/// The binary/unary series operations exposed as one entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Div,
    Compose,
    Exp,
    Log,
    Pow(i64),
}

/// Dispatch a series operation; `b` is ignored by the unary ops.
pub fn series_arith(a: &SeriesInG, b: Option<&SeriesInG>, op: SeriesOp) -> Result<SeriesInG> {
    use crate::error::Error;
    let need_b = || {
        b.ok_or_else(|| Error::InvalidArgument("binary series op needs two operands".into()))
    };
    Ok(match op {
        SeriesOp::Add => a.add(need_b()?),
        SeriesOp::Mul => a.mul(need_b()?),
        SeriesOp::Div => a.div(need_b()?)?,
        SeriesOp::Compose => a.compose(need_b()?)?,
        SeriesOp::Exp => a.exp()?,
        SeriesOp::Log => a.log()?,
        SeriesOp::Pow(n) => a.pow(n)?,
    })
}

/// Lift a rational-coefficient series into the exact-scalar presentation.
pub fn lift_qseries(s: &QSeriesInG) -> SeriesInG {
    s.map(|p| p.map(|q| ExactScalar::from_q(q.clone())))
}
