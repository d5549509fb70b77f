//! Lifting a plane parametrization back to space.
//!
//! Every root `ξ` of the denominator maps to a point at infinity
//! `(1 : y : χ : 0)` of the space curve with `y = p2(ξ)/p1(ξ)`. The third
//! numerator is the polynomial of degree below
//! `deg q` with `p3(ξ) = p1(ξ) χ` at every root, built either by
//! Chinese remaindering over the irreducible factors of `q` (exact) or by
//! interpolation at the numeric roots.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::assumptions::{match_point_sets, point_set_gap, InfinityPoint, COINCIDENCE_TOL};
use crate::curve::{PlaneCurve, SpaceCurve};
use crate::error::{Error, Result};
use crate::numeric::FPoly;
use crate::plane_param::{projective_residual, sample_parameters, PlaneParam};
use crate::poly::factor::{factor_square_free, refine};
use crate::poly::rat::{from_f64_exact, rat, to_f64};
use crate::poly::roots::{roots_complex, roots_numeric};
use crate::poly::upoly::FieldCoeff;
use crate::poly::{gcd_over_extension, ExtElem, ExtField, MPoly, Rat, UPoly};
use crate::projection::ProjectionFrame;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftMode {
    Exact,
    Numeric,
}

impl FromStr for LiftMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(LiftMode::Exact),
            "numeric" => Ok(LiftMode::Numeric),
            other => Err(Error::Config(format!("unknown lift mode `{other}`"))),
        }
    }
}

impl fmt::Display for LiftMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftMode::Exact => "exact",
            LiftMode::Numeric => "numeric",
        })
    }
}

/// Largest normalized residual accepted for a numeric `χ`.
pub const CHI_RESIDUAL: f64 = 1e-6;
const TIE_TOL: f64 = 1e-9;

/// Target at one numeric root of the denominator.
#[derive(Clone, Debug, Serialize)]
pub struct RootTarget {
    #[serde(serialize_with = "crate::report::ser_complex")]
    pub pole: Complex64,
    #[serde(serialize_with = "crate::report::ser_complex")]
    pub slope: Complex64,
    #[serde(serialize_with = "crate::report::ser_complex")]
    pub chi: Complex64,
    pub residual: f64,
}

/// Target over one irreducible factor `q_j`, with `μ` a root of it:
/// the forms at infinity share the factor `(z - χ(μ))^multiplicity`.
#[derive(Clone, Debug)]
pub struct FactorTarget {
    pub factor: UPoly<Rat>,
    pub multiplicity: usize,
    /// `χ` as a polynomial in `μ` reduced modulo the factor.
    pub chi: UPoly<Rat>,
    /// `χ(μ) p1(μ)` reduced modulo the factor.
    pub value: UPoly<Rat>,
}

#[derive(Clone, Debug)]
pub enum LiftTargets {
    Exact(Vec<FactorTarget>),
    Numeric(Vec<RootTarget>),
}

/// `H(1, y, z)` as coefficients in `z`, each a polynomial in `y`.
fn chart_coefficients(form: &MPoly) -> Result<Vec<UPoly<Rat>>> {
    form.substitute(0, &Rat::one()).coeffs_in(2).iter().map(|c| c.to_upoly(1)).collect()
}

fn slope_at(param: &PlaneParam, xi: Complex64) -> Result<Complex64> {
    let [a, b] = param.point_at_infinity(xi);
    let scale = param.numerators.iter().map(|p| p.to_f64().max_abs_coeff()).fold(0.0, f64::max) * (1.0 + xi.norm()).powi(param.degree() as i32);
    if a.norm() <= 1e-10 * scale {
        return Err(Error::IllConditioned(format!(
            "p1 nearly vanishes at the root {xi:.6} of q (|p1| = {:.2e}); the point at infinity has no (1 : y) chart",
            a.norm()
        )));
    }
    Ok(b / a)
}

/// `χ` per numeric root: among the roots in `z` of the first form at
/// infinity, the one minimizing the largest residual over all forms.
pub fn numeric_targets(forms: &[MPoly], param: &PlaneParam) -> Result<Vec<RootTarget>> {
    let floats: Vec<FPoly> = forms.iter().map(FPoly::from_mpoly).collect();
    let first = forms.iter().find(|h| h.degree_in(2) > 0).ok_or_else(|| Error::NoCommonRoot("no form at infinity involves z".into()))?;
    let zcoeffs: Vec<FPoly> = first.coeffs_in(2).iter().map(FPoly::from_mpoly).collect();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::new();
    for xi in param.poles()? {
        let slope = slope_at(param, xi)?;
        let coeffs: Vec<Complex64> = zcoeffs.iter().map(|c| c.eval_c(&[one, slope, zero])).collect();
        let mut scored: Vec<(Complex64, f64)> = roots_complex(&coeffs)?
            .into_iter()
            .map(|z| (z, floats.iter().map(|h| h.normalized_residual_c(&[one, slope, z])).fold(0.0, f64::max)))
            .collect();
        scored.sort_by(|a, b| a.1.total_cmp(&b.1));
        let Some(&(chi, residual)) = scored.first() else {
            return Err(Error::NoCommonRoot(format!("no root in z at ξ = {xi:.6}")));
        };
        if residual > CHI_RESIDUAL {
            return Err(Error::NoCommonRoot(format!("best χ at ξ = {xi:.6} has residual {residual:.2e}")));
        }
        if let Some(&(other, r2)) = scored.get(1) {
            if r2 - residual < TIE_TOL && (other - chi).norm() > COINCIDENCE_TOL * (1.0 + chi.norm()) {
                return Err(Error::NoCommonRoot(format!("two values of χ fit at ξ = {xi:.6}: {chi:.6} and {other:.6}")));
            }
        }
        out.push(RootTarget { pole: xi, slope, chi, residual });
    }
    Ok(out)
}

/// Exact target over one factor, or `None` when the forms at infinity have
/// no common root over `Q[μ]/(factor)` (the plane parametrization is only
/// approximate).
fn factor_target(forms: &[MPoly], param: &PlaneParam, factor: &UPoly<Rat>) -> Result<Option<FactorTarget>> {
    let field = ExtField::new(factor)?;
    let p1 = field.elem(&param.numerators[0]);
    let p2 = field.elem(&param.numerators[1]);
    let slope = p2 * p1.inv()?;
    let mut polys = Vec::new();
    for h in forms {
        let zc = chart_coefficients(h)?;
        let coeffs: Vec<ExtElem> = zc.iter().map(|c| field.embed_poly(c).eval(&slope)).collect();
        let p = UPoly::new("z", coeffs);
        if !p.is_zero() {
            polys.push(p);
        }
    }
    let g = gcd_over_extension(&polys)?;
    let u = g.deg();
    if u == 0 {
        return Ok(None);
    }
    let chi = -(g.coeff(u - 1) * ExtElem::constant(rat(u as i64)).inv()?);
    let linear = UPoly::new("z", vec![-chi.clone(), ExtElem::constant(Rat::one())]);
    if linear.pow(u as u32) != g {
        return Err(Error::NoCommonRoot(format!("common factor {g} at infinity is not a power of a linear form")));
    }
    let value = (chi.clone() * p1).rep().clone().with_var("t");
    Ok(Some(FactorTarget { factor: factor.clone(), multiplicity: u, chi: chi.rep().clone().with_var("t"), value }))
}

/// Exact targets for every factor of `q`, refining the factorization when
/// extension arithmetic meets a zero divisor.
pub fn exact_targets(forms: &[MPoly], param: &PlaneParam) -> Result<Option<Vec<FactorTarget>>> {
    let mut factors = factor_square_free(&param.denominator)?;
    'restart: loop {
        let mut out = Vec::with_capacity(factors.len());
        for j in 0..factors.len() {
            match factor_target(forms, param, &factors[j]) {
                Ok(Some(t)) => out.push(t),
                Ok(None) => return Ok(None),
                Err(Error::ReducibleModulus { factor }) => {
                    refine(&mut factors, j, &factor)?;
                    continue 'restart;
                }
                Err(e) => return Err(e),
            }
        }
        return Ok(Some(out));
    }
}

/// `A mod q` with `A = Σ_j c_j Π_{i≠j} u_{i,j} q_i`, where
/// `u_{i,j} q_i ≡ 1 (mod q_j)`.
pub fn lift_exact(targets: &[FactorTarget], param: &PlaneParam) -> Result<UPoly<Rat>> {
    let n = targets.len();
    let mut acc = UPoly::zero("t");
    for j in 0..n {
        let mut term = targets[j].value.clone();
        for i in (0..n).filter(|&i| i != j) {
            let (g, u, _) = UPoly::extended_gcd(&targets[i].factor, &targets[j].factor)?;
            if g.deg() > 0 {
                return Err(Error::FactorsNotCoprime);
            }
            let u = u.scale(&(Rat::one() / g.coeff(0)));
            term = &(&term * &u) * &targets[i].factor;
        }
        acc = &acc + &term;
    }
    let p3 = acc.rem(&param.denominator)?;
    Ok(p3.with_var("t"))
}

/// Interpolates `(ξ_i, p1(ξ_i) χ_i)` at the numeric roots.
pub fn lift_numeric(targets: &[RootTarget], param: &PlaneParam) -> Result<UPoly<Rat>> {
    let d = param.degree();
    if targets.len() != d {
        return Err(Error::NotSquareFree(format!("{} targets for deg(q) = {d}", targets.len())));
    }
    for (i, a) in targets.iter().enumerate() {
        for b in &targets[i + 1..] {
            if (a.pole - b.pole).norm() < 1e-7 {
                return Err(Error::NotSquareFree(format!("roots {:.6} and {:.6} of q nearly coincide", a.pole, b.pole)));
            }
        }
    }
    let q = param.denominator.to_complex();
    let dq = q.derivative();
    let mut coeffs = vec![Complex64::zero(); d];
    for t in targets {
        let p1 = param.numerators[0].eval_complex(t.pole);
        let w = p1 * t.chi / dq.eval(&t.pole);
        // q(t) / (t - ξ) by synthetic division
        let mut carry = Complex64::zero();
        let mut quotient = vec![Complex64::zero(); d];
        for k in (1..=d).rev() {
            carry = q.coeff(k) + carry * t.pole;
            quotient[k - 1] = carry;
        }
        for (c, qk) in coeffs.iter_mut().zip(&quotient) {
            *c += w * qk;
        }
    }
    let scale = coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max);
    if let Some(c) = coeffs.iter().find(|c| c.im.abs() >= 1e-9 * scale) {
        return Err(Error::IllConditioned(format!("interpolated coefficient {c:.3e} is not real")));
    }
    Ok(UPoly::new("t", coeffs.iter().map(|c| from_f64_exact(c.re)).collect()))
}

/// Worst `|p3(ξ) - p1(ξ)χ| / (1 + |p1(ξ)χ|)` over the targets.
pub fn interpolation_defect(p3: &UPoly<Rat>, param: &PlaneParam, targets: &[RootTarget]) -> f64 {
    targets
        .iter()
        .map(|t| {
            let want = param.numerators[0].eval_complex(t.pole) * t.chi;
            (p3.eval_complex(t.pole) - want).norm() / (1.0 + want.norm())
        })
        .fold(0.0, f64::max)
}

/// Numeric view of exact targets: `χ(ξ)` at each root of each factor.
pub fn exact_as_roots(targets: &[FactorTarget], param: &PlaneParam) -> Result<Vec<RootTarget>> {
    let mut out = Vec::new();
    for t in targets {
        for xi in roots_numeric(&t.factor)? {
            let chi = t.chi.eval_complex(xi);
            out.push(RootTarget { pole: xi, slope: slope_at(param, xi)?, chi, residual: 0.0 });
        }
    }
    Ok(out)
}

/// Result of lifting within a frame.
#[derive(Clone, Debug)]
pub struct Lift {
    pub lifted: UPoly<Rat>,
    pub mode: LiftMode,
    pub targets: LiftTargets,
    /// Per-root view of the targets (numeric, or exact evaluated).
    pub roots: Vec<RootTarget>,
    pub interpolation_defect: f64,
    pub warnings: Vec<String>,
}

/// Targets for the frame curve (whose third coordinate is eliminated).
pub fn chi_targets(frame_curve: &SpaceCurve, param: &PlaneParam, mode: LiftMode) -> Result<LiftTargets> {
    let forms = frame_curve.top_forms();
    match mode {
        LiftMode::Numeric => Ok(LiftTargets::Numeric(numeric_targets(&forms, param)?)),
        LiftMode::Exact => match exact_targets(&forms, param)? {
            Some(t) => Ok(LiftTargets::Exact(t)),
            None => Err(Error::NoCommonRoot("forms at infinity have no exact common root".into())),
        },
    }
}

/// Computes the third numerator, falling back from exact to numeric
/// targets (with a warning) when the exact gcd is trivial.
pub fn lift(frame_curve: &SpaceCurve, param: &PlaneParam, mode: LiftMode) -> Result<Lift> {
    let forms = frame_curve.top_forms();
    let mut warnings = Vec::new();
    if mode == LiftMode::Exact {
        match exact_targets(&forms, param)? {
            Some(targets) => {
                let lifted = lift_exact(&targets, param)?;
                let roots = exact_as_roots(&targets, param)?;
                let defect = interpolation_defect(&lifted, param, &roots);
                return Ok(Lift { lifted, mode, targets: LiftTargets::Exact(targets), roots, interpolation_defect: defect, warnings });
            }
            None => warnings.push(
                "exact lift unavailable: the forms at infinity have no common root over Q[μ]/(q_j), \
                 so the plane parametrization is approximate; using numeric targets"
                    .to_string(),
            ),
        }
    }
    let roots = numeric_targets(&forms, param)?;
    let lifted = lift_numeric(&roots, param)?;
    let defect = interpolation_defect(&lifted, param, &roots);
    Ok(Lift { lifted, mode: LiftMode::Numeric, targets: LiftTargets::Numeric(roots.clone()), roots, interpolation_defect: defect, warnings })
}

/// A rational space curve `(p1, p2, p3) / q`.
#[derive(Clone, Debug)]
pub struct RationalParam3 {
    pub components: [UPoly<Rat>; 3],
    pub denominator: UPoly<Rat>,
    pub mode: LiftMode,
}

impl RationalParam3 {
    pub fn degree_bound(&self) -> usize {
        self.denominator.deg()
    }

    pub fn eval(&self, t: f64) -> [f64; 3] {
        let q = self.denominator.eval_f64(t);
        self.components.clone().map(|p| p.eval_f64(t) / q)
    }

    pub fn homogeneous_at_complex(&self, t: Complex64) -> [Complex64; 4] {
        let c = |p: &UPoly<Rat>| p.eval_complex(t);
        [c(&self.components[0]), c(&self.components[1]), c(&self.components[2]), c(&self.denominator)]
    }

    pub fn poles(&self) -> Result<Vec<Complex64>> {
        if self.denominator.is_constant() {
            return Ok(Vec::new());
        }
        roots_numeric(&self.denominator)
    }

    /// Points `(p1(ξ) : p2(ξ) : p3(ξ) : 0)` at the roots of `q`, plus the
    /// limit at `t → ∞` when some numerator outgrows `q`.
    pub fn infinity_points(&self) -> Result<Vec<InfinityPoint>> {
        let mut out: Vec<InfinityPoint> = Vec::new();
        let mut push = |p: InfinityPoint| {
            if !out.iter().any(|o| o.distance(&p) < COINCIDENCE_TOL) {
                out.push(p);
            }
        };
        for xi in self.poles()? {
            let h = self.homogeneous_at_complex(xi);
            if let Some(p) = InfinityPoint::new([h[0], h[1], h[2]]) {
                push(p);
            }
        }
        let top = self.components.iter().map(|p| p.deg()).max().unwrap_or(0);
        if top > self.denominator.deg() {
            let lead = self.components.clone().map(|p| Complex64::new(to_f64(&p.coeff(top)), 0.0));
            if let Some(p) = InfinityPoint::new(lead) {
                push(p);
            }
        }
        Ok(out)
    }

    /// Number of parameter values mapping to a generic curve point.
    pub fn index(&self) -> Result<usize> {
        let mut s = rat(3) / rat(7);
        while self.denominator.eval(&s).is_zero() {
            s += rat(1);
        }
        let qs = self.denominator.eval(&s);
        let mut g: Option<UPoly<Rat>> = None;
        for p in &self.components {
            let h = &p.scale(&qs) - &self.denominator.scale(&p.eval(&s));
            if h.is_zero() {
                continue;
            }
            g = Some(match g {
                None => h.monic()?,
                Some(g) => g.gcd(&h)?,
            });
        }
        Ok(g.map(|g| g.deg()).unwrap_or(0))
    }

    /// Degree of the image curve, `deg q / index`.
    pub fn curve_degree(&self) -> Result<usize> {
        let k = self.index()?;
        if k == 0 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(self.degree_bound() / k)
    }

    pub fn sample_parameters(&self, n: usize) -> Result<Vec<f64>> {
        sample_parameters(&self.denominator, n)
    }

    /// Components applied through a linear map `X ↦ M X` (exact).
    pub fn transformed(&self, m: &[[Rat; 3]; 3]) -> RationalParam3 {
        let comps = std::array::from_fn(|i| {
            (0..3).fold(UPoly::zero("t"), |acc, j| &acc + &self.components[j].scale(&m[i][j]))
        });
        RationalParam3 { components: comps, denominator: self.denominator.clone(), mode: self.mode }
    }
}

/// Places the lifted numerator as the eliminated coordinate of the frame
/// and maps back to the original coordinates. Structural invariants are
/// enforced here.
pub fn assemble(param: &PlaneParam, lifted: &UPoly<Rat>, frame: &ProjectionFrame, mode: LiftMode) -> Result<(RationalParam3, RationalParam3)> {
    let q = &param.denominator;
    let d = q.deg();
    if lifted.degree().is_some_and(|k| k >= d) {
        return Err(Error::Postcondition { clause: "deg(p3) < deg(q)".into(), detail: format!("deg(p3) = {} ≥ {d}", lifted.deg()) });
    }
    if !q.is_square_free()? {
        return Err(Error::Postcondition { clause: "q square-free".into(), detail: format!("{q}") });
    }
    for (i, p) in param.numerators.iter().enumerate() {
        if p.degree().unwrap_or(0) > d {
            return Err(Error::Postcondition { clause: format!("deg(p{}) ≤ deg(q)", i + 1), detail: String::new() });
        }
    }
    let g = [&param.numerators[0], &param.numerators[1], lifted].iter().try_fold(q.clone(), |g, p| g.gcd(p))?;
    if g.deg() > 0 {
        return Err(Error::Postcondition { clause: "gcd(p1, p2, p3, q) = 1".into(), detail: format!("common factor {g}") });
    }
    let in_frame = RationalParam3 {
        components: [param.numerators[0].clone(), param.numerators[1].clone(), lifted.clone().with_var("t")],
        denominator: q.clone(),
        mode,
    };
    let original = in_frame.transformed(&frame.from_frame_matrix());
    Ok((in_frame, original))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClauseCheck {
    pub pass: bool,
    pub detail: String,
}

impl ClauseCheck {
    fn new(pass: bool, detail: String) -> Self {
        ClauseCheck { pass, detail }
    }
}

/// Postconditions of the lifted curve against the input curve.
#[derive(Clone, Debug, Serialize)]
pub struct LiftChecks {
    pub degree_equal: ClauseCheck,
    pub infinity_cardinality: ClauseCheck,
    pub infinity_equal: ClauseCheck,
    /// Largest distance between matched points at infinity.
    pub infinity_gap: f64,
    pub projection_recovers_plane_curve: ClauseCheck,
    pub projection_residual: f64,
    /// `|f(Q(t))|` against the projected input (tolerance closeness).
    pub input_projection_residual: f64,
    pub interpolation: ClauseCheck,
}

impl LiftChecks {
    pub fn all_pass(&self) -> bool {
        [&self.degree_equal, &self.infinity_cardinality, &self.infinity_equal, &self.projection_recovers_plane_curve, &self.interpolation]
            .iter()
            .all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<String> {
        [
            ("deg", &self.degree_equal),
            ("card(C̄∞)", &self.infinity_cardinality),
            ("C∞ = C̄∞", &self.infinity_equal),
            ("projection", &self.projection_recovers_plane_curve),
            ("interpolation", &self.interpolation),
        ]
        .iter()
        .filter(|(_, c)| !c.pass)
        .map(|(n, c)| format!("{n}: {}", c.detail))
        .collect()
    }
}

pub const INFINITY_MATCH_TOL: f64 = 1e-7;
pub const PROJECTION_TOL: f64 = 1e-8;
pub const INTERPOLATION_TOL: f64 = 1e-8;

/// Runs the postconditions in frame coordinates. `curve_points` are the
/// points at infinity of the input curve in the same frame.
pub fn lift_checks(
    in_frame: &RationalParam3,
    param: &PlaneParam,
    projected: &PlaneCurve,
    curve_degree: usize,
    curve_points: &[InfinityPoint],
    interpolation_defect: f64,
    samples: usize,
) -> Result<LiftChecks> {
    let deg = in_frame.curve_degree()?;
    let degree_equal = ClauseCheck::new(deg == curve_degree, format!("deg(C̄) = {deg}, deg(C) = {curve_degree}"));
    let lifted_points = in_frame.infinity_points()?;
    let infinity_cardinality =
        ClauseCheck::new(lifted_points.len() == curve_degree, format!("{} points at infinity", lifted_points.len()));
    let (infinity_equal, gap) = match match_point_sets(curve_points, &lifted_points, INFINITY_MATCH_TOL) {
        Some(g) => (ClauseCheck::new(true, format!("matched within {g:.2e}")), g),
        None => {
            let g = point_set_gap(curve_points, &lifted_points).max(point_set_gap(&lifted_points, curve_points));
            (ClauseCheck::new(false, format!("largest gap {g:.2e} exceeds {INFINITY_MATCH_TOL:.0e}")), g)
        }
    };
    let plane = PlaneCurve::new(param.implicitize(projected.var_names())?);
    let projection_residual = in_frame
        .sample_parameters(samples)?
        .into_iter()
        .map(|t| {
            let h = [in_frame.components[0].eval_f64(t), in_frame.components[1].eval_f64(t), in_frame.denominator.eval_f64(t)];
            projective_residual(&plane, &h)
        })
        .fold(0.0, f64::max);
    let projection_recovers_plane_curve =
        ClauseCheck::new(projection_residual < PROJECTION_TOL, format!("residual {projection_residual:.2e} on the parametrized plane curve"));
    let input_projection_residual = param.residual_on(projected, samples)?;
    let interpolation =
        ClauseCheck::new(interpolation_defect < INTERPOLATION_TOL, format!("p3(ξ) - p1(ξ)χ defect {interpolation_defect:.2e}"));
    Ok(LiftChecks {
        degree_equal,
        infinity_cardinality,
        infinity_equal,
        infinity_gap: gap,
        projection_recovers_plane_curve,
        projection_residual,
        input_projection_residual,
        interpolation,
    })
}

/// Floats of an exact polynomial, for comparisons.
pub fn coefficients_f64(p: &UPoly<Rat>) -> Vec<f64> {
    p.coeffs().iter().map(to_f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_param::Provenance;
    use crate::poly::parse_upoly;
    use crate::projection::Axis;

    fn up(s: &str) -> UPoly<Rat> {
        parse_upoly(s, "t").unwrap()
    }

    #[test]
    fn two_point_line_interpolation() {
        // q = t^2 - 1, p1 = 1 at both roots, χ(1) = 2, χ(-1) = 0: p3 = t + 1
        let param = PlaneParam::new(up("1"), up("t"), up("t^2 - 1"), Provenance::Oracle).unwrap();
        let targets = vec![
            RootTarget { pole: Complex64::new(1.0, 0.0), slope: Complex64::new(1.0, 0.0), chi: Complex64::new(2.0, 0.0), residual: 0.0 },
            RootTarget { pole: Complex64::new(-1.0, 0.0), slope: Complex64::new(-1.0, 0.0), chi: Complex64::new(0.0, 0.0), residual: 0.0 },
        ];
        let p3 = lift_numeric(&targets, &param).unwrap();
        let c = coefficients_f64(&p3);
        assert!((c[0] - 1.0).abs() < 1e-12 && (c[1] - 1.0).abs() < 1e-12);
        let exact = vec![
            FactorTarget { factor: up("t - 1"), multiplicity: 1, chi: up("2"), value: up("2") },
            FactorTarget { factor: up("t + 1"), multiplicity: 1, chi: up("0"), value: up("0") },
        ];
        assert_eq!(lift_exact(&exact, &param).unwrap(), up("t + 1"));
    }

    #[test]
    fn irreducible_denominator_reduces_the_single_target() {
        let param = PlaneParam::new(up("1"), up("t"), up("t^2 + 1"), Provenance::Oracle).unwrap();
        let exact = vec![FactorTarget { factor: up("t^2 + 1"), multiplicity: 1, chi: up("t"), value: up("3*t + 5") }];
        assert_eq!(lift_exact(&exact, &param).unwrap(), up("3*t + 5"));
    }

    /// A conic in the plane `z = 2x + 3y + 1`. The lift only sees the
    /// points at infinity, so it lands in a parallel plane.
    #[test]
    fn lift_of_a_planar_section_stays_parallel() {
        let curve = SpaceCurve::parse(&["x*y - 1 + x^2 - 4*y^2", "z - 2*x - 3*y - 1"]).unwrap();
        let frame = ProjectionFrame::axis(Axis::Z);
        let f = crate::projection::project_affine(&curve, &frame).unwrap();
        let crate::plane_param::PlaneOutcome::Param(param) =
            crate::plane_param::parametrize_baseline(&f, 1e-3, &Default::default()).unwrap()
        else {
            panic!("conic should parametrize")
        };
        let mut lifts = Vec::new();
        for mode in [LiftMode::Exact, LiftMode::Numeric] {
            let l = lift(&curve, &param, mode).unwrap();
            assert_eq!(l.mode, mode);
            assert!(l.interpolation_defect < 1e-10);
            let (_, p) = assemble(&param, &l.lifted, &frame, mode).unwrap();
            let offsets: Vec<f64> = [-0.3, 0.2, 1.7].iter().map(|&t| {
                let x = p.eval(t);
                x[2] - 2.0 * x[0] - 3.0 * x[1]
            }).collect();
            assert!(offsets.iter().all(|o| (o - offsets[0]).abs() < 1e-9), "{mode}: {offsets:?}");
            lifts.push(coefficients_f64(&l.lifted));
        }
        for (a, b) in lifts[0].iter().zip(&lifts[1]) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn assemble_rejects_full_degree_lift() {
        let param = PlaneParam::new(up("1"), up("t"), up("t^2 - 1"), Provenance::Oracle).unwrap();
        let e = assemble(&param, &up("t^2"), &ProjectionFrame::axis(Axis::Z), LiftMode::Exact).unwrap_err();
        assert!(matches!(e, Error::Postcondition { ref clause, .. } if clause == "deg(p3) < deg(q)"), "{e}");
    }

    #[test]
    fn axis_y_places_the_lift_in_the_middle() {
        let param = PlaneParam::new(up("1"), up("t"), up("t^2 - 1"), Provenance::Oracle).unwrap();
        let (_, p) = assemble(&param, &up("t + 1"), &ProjectionFrame::axis(Axis::Y), LiftMode::Exact).unwrap();
        assert_eq!(p.components[0], up("1"));
        assert_eq!(p.components[1], up("t + 1"));
        assert_eq!(p.components[2], up("t"));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("exact".parse::<LiftMode>().unwrap(), LiftMode::Exact);
        assert!("fast".parse::<LiftMode>().is_err());
    }
}
