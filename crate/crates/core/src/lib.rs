//! Approximate rational parametrization of real space curves.
//!
//! A space curve given by implicit equations is projected to a plane, the
//! plane curve is parametrized (within a tolerance), and the parametrization
//! is lifted back to space so that the result has the same degree and the
//! same points at infinity as the input.

pub mod assumptions;
pub mod curve;
pub mod error;
pub mod groebner;
pub mod implicit;
pub mod io;
pub mod lift;
pub mod numeric;
pub mod pipeline;
pub mod plane_param;
pub mod poly;
pub mod projection;
pub mod report;
pub mod slice;
pub mod verify;

pub use curve::{PlaneCurve, SpaceCurve};
pub use error::{Error, Result};
