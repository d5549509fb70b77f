//! Polynomial arithmetic: exact rationals, multivariate and univariate
//! polynomials, algebraic extensions, resultants, gcds and numeric roots.

pub mod ext;
pub mod factor;
pub mod gcd;
pub mod mpoly;
pub mod parse;
pub mod rat;
pub mod resultant;
pub mod roots;
pub mod upoly;

pub use ext::{gcd_over_extension, ExtElem, ExtField};
pub use gcd::{gcd_many, gcd_pair};
pub use mpoly::{homogenize, MPoly, Monomial};
pub use parse::{parse_poly, parse_upoly};
pub use rat::Rat;
pub use resultant::{resultant_idx, resultant_wrt};
pub use roots::roots_numeric;
pub use upoly::{Coeff, FieldCoeff, UPoly};
