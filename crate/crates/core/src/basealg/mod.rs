//! Exact arithmetic: `F_q`, `A = F_q[T]`, `F = F_q(T)`, residue rings,
//! truncated Laurent series and quotient-ring norms.

mod fq;
mod parse;
mod poly;
mod quotient;
mod ratfun;
mod residue;
mod ring;
mod series;

pub use fq::{prime_power, FqElem, GaloisField};
pub use parse::{parse_a_poly, parse_ratfun, parse_x_poly, Render};
pub use poly::{APoly, Poly, PolyRing, Var};
pub use quotient::{multiplication_matrix, quotient_norm, QuotientRing};
pub use ratfun::RatFun;
pub use residue::{ResidueElem, ResidueRing};
pub use ring::{binomial_mod_p, determinant, solve_columns, Field, Ring};
pub use series::{SeriesRing, TruncSeries};
