//! Exact arithmetic for the Carlitz module over `F_q(T)`: cyclotomic
//! function fields, Coleman norms, Coates-Wiles homomorphisms,
//! Bernoulli-Carlitz numbers, Stickelberger elements and zeta values.

pub mod basealg;
pub mod carlitz;
pub mod checks;
pub mod coateswiles;
pub mod coleman;
pub mod cyclotomic;
mod error;
pub mod lfun;

pub use basealg::{APoly, FqElem, GaloisField, Poly, RatFun, Render, TruncSeries, Var};
pub use error::{Error, ErrorKind, Result};
