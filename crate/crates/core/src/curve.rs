//! Space and plane curve containers.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, TermOrder};
use crate::numeric::FPoly;
use crate::poly::{MPoly, Rat};

pub const SPACE_VARS: [&str; 3] = ["x", "y", "z"];
pub const PROJ_VARS: [&str; 4] = ["x", "y", "z", "w"];

/// An affine space curve given by generators in `x, y, z`, with lazily
/// computed and cached graded-lex Gröbner basis and homogenization.
#[derive(Debug)]
pub struct SpaceCurve {
    generators: Vec<MPoly>,
    basis: OnceLock<Vec<MPoly>>,
    homogenized: OnceLock<Vec<MPoly>>,
    floats: OnceLock<Vec<FPoly>>,
}

impl Clone for SpaceCurve {
    fn clone(&self) -> Self {
        let c = SpaceCurve::from_parts(self.generators.clone());
        if let Some(b) = self.basis.get() {
            let _ = c.basis.set(b.clone());
        }
        c
    }
}

impl SpaceCurve {
    fn from_parts(generators: Vec<MPoly>) -> Self {
        SpaceCurve { generators, basis: OnceLock::new(), homogenized: OnceLock::new(), floats: OnceLock::new() }
    }

    /// Builds a curve from nonzero generators; they are re-expressed in the
    /// ring `x, y, z`.
    pub fn new(generators: &[MPoly]) -> Result<Self> {
        let gens = generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_vars(&SPACE_VARS))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(Error::AllZero);
        }
        Ok(Self::from_parts(gens))
    }

    pub fn parse(lines: &[&str]) -> Result<Self> {
        let gens = lines.iter().map(|s| crate::poly::parse_poly(s, &SPACE_VARS)).collect::<Result<Vec<_>>>()?;
        Self::new(&gens)
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn order() -> TermOrder {
        TermOrder::grlex(&SPACE_VARS)
    }

    /// Reduced graded-lex Gröbner basis (`x < y < z`).
    pub fn groebner(&self) -> &[MPoly] {
        self.basis.get_or_init(|| buchberger(&self.generators, &Self::order()).expect("generators live in x,y,z"))
    }

    /// Homogenized basis in `x, y, z, w`; it defines the projective closure.
    pub fn homogenized_basis(&self) -> &[MPoly] {
        self.homogenized.get_or_init(|| {
            self.groebner().iter().map(|g| g.homogenize("w").expect("basis elements are nonzero")).collect()
        })
    }

    /// Top-degree forms of the basis elements: the equations of the points
    /// at infinity (`w = 0`), in `x, y, z`.
    pub fn top_forms(&self) -> Vec<MPoly> {
        self.groebner().iter().map(|g| g.homogeneous_part(g.total_degree())).filter(|h| h.total_degree() > 0).collect()
    }

    pub fn float_generators(&self) -> &[FPoly] {
        self.floats.get_or_init(|| self.generators.iter().map(FPoly::from_mpoly).collect())
    }

    /// Largest normalized residual of the generators at a real point.
    pub fn residual(&self, p: &[f64]) -> f64 {
        self.float_generators().iter().map(|f| f.normalized_residual(p)).fold(0.0, f64::max)
    }

    /// True when the basis is `{1}` (empty variety).
    pub fn is_empty_variety(&self) -> bool {
        self.groebner().iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Applies the linear substitution `x_i ↦ Σ_j m[i][j] x_j` to every
    /// generator.
    pub fn substitute_linear(&self, m: &[[Rat; 3]; 3]) -> Result<SpaceCurve> {
        let vars = SPACE_VARS;
        let xs: Vec<MPoly> = (0..3).map(|i| MPoly::var(&vars, vars[i])).collect::<Result<_>>()?;
        let images: Vec<MPoly> = m
            .iter()
            .map(|row| row.iter().zip(&xs).fold(MPoly::zero(&vars), |acc, (c, x)| &acc + &x.scale(c)))
            .collect();
        SpaceCurve::new(&self.generators.iter().map(|g| g.compose(&images)).collect::<Vec<_>>())
    }
}

/// A plane curve `f(u, v) = 0`. Variable names follow the projection plane,
/// e.g. `(x, y)` for the projection along `z` and `(x, z)` along `y`.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    pub poly: MPoly,
    pub tolerance: Option<f64>,
}

impl PlaneCurve {
    pub fn new(poly: MPoly) -> Self {
        assert_eq!(poly.nvars(), 2, "plane curves have two variables");
        PlaneCurve { poly, tolerance: None }
    }

    pub fn with_tolerance(mut self, eps: f64) -> Self {
        self.tolerance = Some(eps);
        self
    }

    pub fn parse(src: &str, vars: [&str; 2]) -> Result<Self> {
        Ok(Self::new(crate::poly::parse_poly(src, &vars)?))
    }

    pub fn degree(&self) -> u32 {
        self.poly.total_degree()
    }

    pub fn var_names(&self) -> [&str; 2] {
        [self.poly.vars()[0].as_str(), self.poly.vars()[1].as_str()]
    }

    /// Leading form `f_d`.
    pub fn leading_form(&self) -> MPoly {
        self.poly.homogeneous_part(self.degree())
    }

    pub fn float(&self) -> FPoly {
        FPoly::from_mpoly(&self.poly)
    }

    /// Coefficients normalized so that the `u^d` coefficient is 1.
    pub fn normalized_by_pure_power(&self) -> Option<MPoly> {
        let d = self.degree();
        let c = self.poly.coeff(&crate::poly::Monomial(vec![d, 0]));
        if num_traits::Zero::is_zero(&c) {
            return None;
        }
        Some(self.poly.scale(&(Rat::from_integer(1.into()) / c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_infinity_forms() {
        let c = SpaceCurve::parse(&["y - x^2", "z - x^3"]).unwrap();
        let tops = c.top_forms();
        assert!(!tops.is_empty());
        for h in &tops {
            assert!(h.is_homogeneous());
            assert_eq!(h.eval(&[Rat::from_integer(0.into()), Rat::from_integer(0.into()), Rat::from_integer(1.into())]), Rat::from_integer(0.into()));
        }
    }

    #[test]
    fn homogenized_basis_dehomogenizes_back() {
        let c = SpaceCurve::parse(&["x^2 + y^2 - 1", "z - x*y"]).unwrap();
        for (g, h) in c.groebner().iter().zip(c.homogenized_basis()) {
            let back = h.substitute(3, &Rat::from_integer(1.into())).drop_var(3).unwrap();
            assert_eq!(&back, g);
        }
    }
}
