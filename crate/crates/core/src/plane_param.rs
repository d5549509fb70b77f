//! Rational parametrizations `(u, v) = (a(t)/q(t), b(t)/q(t))` of plane curves.
//!
//! Two sources are supported: a pencil-of-lines baseline through a point of
//! multiplicity `d - 1` (exact or within tolerance), and an externally
//! computed parametrization loaded from a file.

use std::path::Path;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::curve::PlaneCurve;
use crate::error::{Error, Result};
use crate::io::{read_param, ParamFile};
use crate::numeric::{gauss_newton, FPoly};
use crate::poly::rat::{approximate, from_f64_exact, rat, to_f64};
use crate::poly::roots::{real_roots, roots_numeric, scaled_f64_coeffs};
use crate::poly::{resultant_wrt, MPoly, Monomial, Rat, UPoly};
use crate::projection::Axis;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Baseline,
    Oracle,
}

/// A plane parametrization with a common denominator.
#[derive(Clone, Debug)]
pub struct PlaneParam {
    pub numerators: [UPoly<Rat>; 2],
    pub denominator: UPoly<Rat>,
    pub tolerance: Option<f64>,
    pub provenance: Provenance,
}

/// Samples within this parameter distance of a real pole are skipped.
pub const POLE_MARGIN: f64 = 0.05;

impl PlaneParam {
    /// Builds and validates a parametrization. The denominator is made monic.
    pub fn new(first: UPoly<Rat>, second: UPoly<Rat>, denominator: UPoly<Rat>, provenance: Provenance) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ContractViolation("q is zero".into()));
        }
        let lead = denominator.lead();
        let inv = Rat::one() / lead;
        let p = PlaneParam {
            numerators: [first.with_var("t").scale(&inv), second.with_var("t").scale(&inv)],
            denominator: denominator.with_var("t").scale(&inv),
            tolerance: None,
            provenance,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_tolerance(mut self, eps: f64) -> Self {
        self.tolerance = Some(eps);
        self
    }

    pub fn degree(&self) -> usize {
        self.denominator.deg()
    }

    /// Checks the structural contract; the error names the violated clause.
    pub fn validate(&self) -> Result<()> {
        let q = &self.denominator;
        let d = q.deg();
        if d == 0 {
            return Err(Error::ContractViolation("deg(q) = 0".into()));
        }
        for (i, p) in self.numerators.iter().enumerate() {
            if p.degree().unwrap_or(0) > d {
                return Err(Error::ContractViolation(format!("deg(p{}) > deg(q)", i + 1)));
            }
            if p.gcd(q)?.deg() > 0 {
                return Err(Error::ContractViolation(format!("gcd(p{}, q) ≠ 1", i + 1)));
            }
        }
        if !q.is_square_free()? {
            return Err(Error::ContractViolation("q not square-free".into()));
        }
        for xi in self.poles()? {
            let a = self.numerators[0].eval_complex(xi);
            let b = self.numerators[1].eval_complex(xi);
            let scale = self.numerators.iter().map(|p| p.to_f64().max_abs_coeff()).fold(0.0, f64::max) * (1.0 + xi.norm()).powi(d as i32);
            if a.norm() + b.norm() <= 1e-12 * scale {
                return Err(Error::ContractViolation(format!("(p1:p2) vanishes at the root {xi:.6} of q")));
            }
        }
        Ok(())
    }

    /// Checks the contract against a target curve (degree match).
    pub fn validate_for(&self, f: &PlaneCurve) -> Result<()> {
        self.validate()?;
        if self.degree() != f.degree() as usize {
            return Err(Error::ContractViolation(format!("deg(q) = {} but deg(f) = {}", self.degree(), f.degree())));
        }
        Ok(())
    }

    /// Complex roots of the denominator.
    pub fn poles(&self) -> Result<Vec<Complex64>> {
        if self.denominator.is_constant() {
            return Ok(Vec::new());
        }
        roots_numeric(&self.denominator)
    }

    pub fn real_poles(&self) -> Result<Vec<f64>> {
        real_roots(&scaled_f64_coeffs(&self.denominator))
    }

    pub fn eval(&self, t: f64) -> [f64; 2] {
        let q = self.denominator.eval_f64(t);
        [self.numerators[0].eval_f64(t) / q, self.numerators[1].eval_f64(t) / q]
    }

    /// Point at infinity `(p1(ξ) : p2(ξ) : 0)` reached at a root `ξ`.
    pub fn point_at_infinity(&self, xi: Complex64) -> [Complex64; 2] {
        [self.numerators[0].eval_complex(xi), self.numerators[1].eval_complex(xi)]
    }

    /// `n` real parameters avoiding the poles, see [`sample_parameters`].
    pub fn sample_parameters(&self, n: usize) -> Result<Vec<f64>> {
        sample_parameters(&self.denominator, n)
    }

    /// Largest projective residual `|F(a, b, q)| / (‖f‖ ‖(a, b, q)‖∞^d)`
    /// over `n` sampled parameters, `F` the homogenization of `f`.
    pub fn residual_on(&self, f: &PlaneCurve, n: usize) -> Result<f64> {
        Ok(self.sample_parameters(n)?.into_iter().map(|t| projective_residual(f, &self.homogeneous_at(t))).fold(0.0, f64::max))
    }

    /// `(a(t), b(t), q(t))`.
    pub fn homogeneous_at(&self, t: f64) -> [f64; 3] {
        [self.numerators[0].eval_f64(t), self.numerators[1].eval_f64(t), self.denominator.eval_f64(t)]
    }

    /// True when `f(a(t), b(t), q(t))` vanishes identically (exact).
    pub fn satisfies_exactly(&self, f: &PlaneCurve) -> bool {
        let d = f.degree();
        let [a, b] = &self.numerators;
        let q = &self.denominator;
        let mut acc = UPoly::zero("t");
        for (m, c) in f.poly.terms() {
            let (i, j) = (m.0[0], m.0[1]);
            let term = &(&a.pow(i) * &b.pow(j)) * &q.pow(d - i - j);
            acc = &acc + &term.scale(c);
        }
        acc.is_zero()
    }

    /// Implicit equation of the parametrized curve, in `vars`.
    pub fn implicitize(&self, vars: [&str; 2]) -> Result<MPoly> {
        let ring = [vars[0], vars[1], "t"];
        let q = MPoly::from_upoly(&ring, 2, &self.denominator);
        let comps: Vec<MPoly> = (0..2)
            .map(|k| {
                let var = MPoly::var(&ring, vars[k])?;
                Ok(&(&q * &var) - &MPoly::from_upoly(&ring, 2, &self.numerators[k]))
            })
            .collect::<Result<_>>()?;
        Ok(resultant_wrt(&comps[0], &comps[1], "t")?.primitive_normalized())
    }
}

/// `n` real parameters spread over the whole line (`t = tan θ`), keeping
/// [`POLE_MARGIN`] away from the real roots of `den`.
pub fn sample_parameters(den: &UPoly<Rat>, n: usize) -> Result<Vec<f64>> {
    let poles = real_roots(&scaled_f64_coeffs(den))?;
    let mut out = Vec::with_capacity(n);
    let mut m = n.max(1);
    while out.len() < n {
        out.clear();
        for k in 0..m {
            let theta = std::f64::consts::PI * ((k as f64 + 0.5) / m as f64 - 0.5);
            let t = theta.tan();
            if poles.iter().all(|p| (t - p).abs() > POLE_MARGIN) {
                out.push(t);
            }
            if out.len() == n {
                break;
            }
        }
        m += n / 2 + 1;
    }
    Ok(out)
}

/// `|F(X)| / (‖f‖ ‖X‖∞^d)` for a homogeneous point `X = (u, v, w)`.
pub fn projective_residual(f: &PlaneCurve, x: &[f64; 3]) -> f64 {
    let d = f.degree() as i32;
    let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    let [u, v, w] = x.map(|c| c / scale);
    let mut acc = 0.0;
    let mut norm = 0.0;
    for (m, c) in f.poly.terms() {
        let c = to_f64(c);
        norm += c * c;
        acc += c * u.powi(m.0[0] as i32) * v.powi(m.0[1] as i32) * w.powi(d - m.degree() as i32);
    }
    acc.abs() / norm.sqrt()
}

/// An oracle file together with the projection axis its labels imply.
#[derive(Clone, Debug)]
pub struct OracleParam {
    pub axis: Option<Axis>,
    pub labels: [String; 2],
    pub param: PlaneParam,
}

/// Axis eliminated by a parametrization whose components carry `labels`.
pub fn axis_for_labels(a: &str, b: &str) -> Option<Axis> {
    match (a, b) {
        ("p1", "p2") => Some(Axis::Z),
        ("p1", "p3") => Some(Axis::Y),
        ("p2", "p3") => Some(Axis::X),
        _ => None,
    }
}

pub fn oracle_from_file(file: &ParamFile) -> Result<OracleParam> {
    let labels: Vec<&String> = file.entries.keys().filter(|k| k.as_str() != "q").collect();
    if labels.len() != 2 {
        return Err(Error::ContractViolation(format!("expected two numerators, found {}", labels.len())));
    }
    let (la, lb) = (labels[0].clone(), labels[1].clone());
    let q = file.get("q").cloned().ok_or(Error::MissingOracle)?;
    let param = PlaneParam::new(file.entries[&la].clone(), file.entries[&lb].clone(), q, Provenance::Oracle)?;
    Ok(OracleParam { axis: axis_for_labels(&la, &lb), labels: [la, lb], param })
}

/// Reads and validates a parametrization file.
pub fn load_oracle_param(path: &Path) -> Result<OracleParam> {
    oracle_from_file(&read_param(path)?)
}

/// Why no parametrization was produced.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "kebab-case")]
pub enum NegativeReason {
    /// The baseline does not apply; this is not a certified negative.
    BaselineIncomplete(String),
    /// A candidate was built but misses the tolerance.
    ResidualAboveTolerance(f64),
}

impl std::fmt::Display for NegativeReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NegativeReason::BaselineIncomplete(s) => write!(f, "baseline-incomplete: {s}"),
            NegativeReason::ResidualAboveTolerance(r) => write!(f, "residual {r:.3e} above tolerance"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum PlaneOutcome {
    Param(PlaneParam),
    NotEpsilonRational(NegativeReason),
}

#[derive(Clone, Copy, Debug)]
pub struct BaselineConfig {
    pub half_width: f64,
    pub grid: usize,
    pub samples: usize,
}

impl Default for BaselineConfig {
    fn default() -> Self {
        BaselineConfig { half_width: 2.0, grid: 41, samples: 100 }
    }
}

/// A point where `f` vanishes to order `multiplicity` within tolerance.
#[derive(Clone, Debug)]
pub struct Cluster {
    pub point: [f64; 2],
    /// Set when the point snapped to a rational one where the defect is 0.
    pub exact: Option<[Rat; 2]>,
    pub multiplicity: u32,
    /// Largest normalized Taylor coefficient of order below `multiplicity`.
    pub defect: f64,
}

/// Taylor coefficients of order `< m` of `f`, as polynomials in the
/// expansion point.
fn taylor_equations(f: &MPoly, m: u32) -> Vec<MPoly> {
    let mut out = Vec::new();
    for k in 0..m {
        for i in 0..=k {
            let j = k - i;
            let mut g = f.clone();
            for _ in 0..i {
                g = g.derivative(0);
            }
            for _ in 0..j {
                g = g.derivative(1);
            }
            let fact = (1..=i).chain(1..=j).fold(Rat::one(), |acc, n| acc * rat(n as i64));
            if !g.is_zero() {
                out.push(g.scale(&(Rat::one() / fact)));
            }
        }
    }
    out
}

fn snap(point: [f64; 2], eqs: &[MPoly]) -> Option<[Rat; 2]> {
    let s = [approximate(point[0], 64)?, approximate(point[1], 64)?];
    if (to_f64(&s[0]) - point[0]).abs() > 1e-6 || (to_f64(&s[1]) - point[1]).abs() > 1e-6 {
        return None;
    }
    eqs.iter().all(|e| e.eval(&s).is_zero()).then_some(s)
}

/// Searches for a point of multiplicity `d - 1` within tolerance `eps`.
pub fn detect_cluster(f: &PlaneCurve, eps: f64) -> Option<Cluster> {
    detect_cluster_with(f, eps, &BaselineConfig::default())
}

pub fn detect_cluster_with(f: &PlaneCurve, eps: f64, cfg: &BaselineConfig) -> Option<Cluster> {
    let d = f.degree();
    if d < 2 {
        return None;
    }
    let m = d - 1;
    let eqs = taylor_equations(&f.poly, m);
    let norm = f.float().norm();
    let feqs: Vec<FPoly> = eqs.iter().map(|e| FPoly::from_mpoly(e).scaled(1.0 / norm)).collect();
    let defect = |p: &[f64]| feqs.iter().map(|e| e.eval(p).abs()).fold(0.0, f64::max);
    let cost = |p: &[f64]| feqs.iter().map(|e| e.eval(p).powi(2)).sum::<f64>();

    let n = cfg.grid.max(2);
    let step = 2.0 * cfg.half_width / (n - 1) as f64;
    let coord = |i: usize| -cfg.half_width + step * i as f64;
    let grid: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| cost(&[coord(i), coord(j)])).collect()).collect();
    let mut minima = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = grid[i][j];
            let is_min = (i.saturating_sub(1)..=(i + 1).min(n - 1))
                .flat_map(|a| (j.saturating_sub(1)..=(j + 1).min(n - 1)).map(move |b| (a, b)))
                .all(|(a, b)| grid[a][b] >= c);
            if is_min {
                minima.push((c, [coord(i), coord(j)]));
            }
        }
    }
    minima.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut best: Option<Cluster> = None;
    for (_, start) in minima.into_iter().take(8) {
        let refined = gauss_newton(&feqs, &start, 60);
        let p = [refined[0], refined[1]];
        let exact = snap(p, &eqs);
        let (p, dft) = match &exact {
            Some(s) => ([to_f64(&s[0]), to_f64(&s[1])], 0.0),
            None => (p, defect(&p)),
        };
        if best.as_ref().is_none_or(|b| dft < b.defect) {
            best = Some(Cluster { point: p, exact, multiplicity: m, defect: dft });
        }
    }
    best.filter(|c| c.defect < eps)
}

/// A real point of a conic: the smallest real root on a horizontal line.
fn conic_point(f: &PlaneCurve) -> Option<[Rat; 2]> {
    for v in [0i64, 1, -1, 2, -2, 3, -3] {
        let line = f.poly.substitute(1, &rat(v));
        let Ok(u) = line.to_upoly(0) else { continue };
        if u.deg() == 0 {
            continue;
        }
        let roots = real_roots(&scaled_f64_coeffs(&u)).ok()?;
        if let Some(&r) = roots.iter().min_by(|a, b| a.total_cmp(b)) {
            let exact = approximate(r, 1000).filter(|s| u.eval(s).is_zero());
            return Some([exact.unwrap_or_else(|| from_f64_exact(r)), rat(v)]);
        }
    }
    None
}

/// Lines through `center`: `(a q - h, b q - t h) / q` with `q = f_d(1, t)`
/// and `h` the degree `d - 1` part of `f` around the center at `(1, t)`.
pub fn pencil_param(f: &PlaneCurve, center: &[Rat; 2]) -> Result<PlaneParam> {
    let d = f.degree();
    let vars = f.poly.var_refs();
    let shifted = f.poly.compose(&[
        &MPoly::var(&vars, vars[0])? + &MPoly::constant(&vars, center[0].clone()),
        &MPoly::var(&vars, vars[1])? + &MPoly::constant(&vars, center[1].clone()),
    ]);
    let at_1t = |p: MPoly| p.substitute(0, &Rat::one()).to_upoly(1);
    let q = at_1t(shifted.homogeneous_part(d))?.with_var("t");
    let h = if d >= 1 { at_1t(shifted.homogeneous_part(d - 1))?.with_var("t") } else { UPoly::zero("t") };
    let t = UPoly::identity("t");
    let a = q.scale(&center[0]) - h.clone();
    let b = q.scale(&center[1]) - t * h;
    let g = a.gcd(&b)?.gcd(&q)?;
    let (a, b, q) = if g.deg() > 0 {
        let div = |p: &UPoly<Rat>| p.exact_div(&g).map(|o| o.expect("common factor divides"));
        (div(&a)?, div(&b)?, div(&q)?)
    } else {
        (a, b, q)
    };
    if q.deg() != d as usize {
        return Err(Error::ContractViolation(format!("pencil gives deg(q) = {} for a curve of degree {d}", q.deg())));
    }
    PlaneParam::new(a, b, q, Provenance::Baseline)
}

/// Baseline parametrizer: lines for `d = 1`, a real point for conics, and
/// a `(d-1)`-fold cluster otherwise.
pub fn parametrize_baseline(f: &PlaneCurve, eps: f64, cfg: &BaselineConfig) -> Result<PlaneOutcome> {
    if !(0.0 < eps && eps < 1.0) {
        return Err(Error::Config(format!("tolerance {eps} outside (0, 1)")));
    }
    let d = f.degree();
    let center = match d {
        0 => return Err(Error::ConstantPolynomial),
        1 => [Rat::zero(), Rat::zero()],
        _ => {
            let from_conic = if d == 2 { conic_point(f) } else { None };
            match from_conic {
                Some(c) => c,
                None => match detect_cluster_with(f, eps, cfg) {
                    Some(c) => c.exact.unwrap_or_else(|| c.point.map(from_f64_exact)),
                    None => {
                        return Ok(PlaneOutcome::NotEpsilonRational(NegativeReason::BaselineIncomplete(format!(
                            "no point of multiplicity {} within tolerance in [-{w}, {w}]²",
                            d - 1,
                            w = cfg.half_width
                        ))))
                    }
                },
            }
        }
    };
    let param = match pencil_param(f, &center) {
        Ok(p) => p,
        Err(Error::ContractViolation(why)) => {
            return Ok(PlaneOutcome::NotEpsilonRational(NegativeReason::BaselineIncomplete(why)))
        }
        Err(e) => return Err(e),
    };
    let residual = param.residual_on(f, cfg.samples)?;
    if residual >= eps {
        return Ok(PlaneOutcome::NotEpsilonRational(NegativeReason::ResidualAboveTolerance(residual)));
    }
    Ok(PlaneOutcome::Param(param.with_tolerance(eps)))
}

/// Accepts an externally computed parametrization for `f` after checking
/// the contract and the residual against `eps`.
pub fn accept_oracle(f: &PlaneCurve, oracle: &PlaneParam, eps: f64, samples: usize) -> Result<PlaneParam> {
    oracle.validate_for(f)?;
    let residual = oracle.residual_on(f, samples)?;
    if residual >= eps {
        return Err(Error::ContractViolation(format!("oracle residual {residual:.3e} ≥ tolerance {eps}")));
    }
    Ok(oracle.clone().with_tolerance(eps))
}

/// Leading coefficients `f_d(1,0)` and `f_d(0,1)`; both must be nonzero.
pub fn pure_power_coefficients(f: &PlaneCurve) -> (Rat, Rat) {
    let d = f.degree();
    (f.poly.coeff(&Monomial(vec![d, 0])), f.poly.coeff(&Monomial(vec![0, d])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_param;
    use crate::poly::parse_upoly;
    use crate::poly::rat::ratio;

    fn up(s: &str) -> UPoly<Rat> {
        parse_upoly(s, "t").unwrap()
    }

    #[test]
    fn conic_through_its_leftmost_point() {
        let f = PlaneCurve::parse("x^2 + y^2 - 1", ["x", "y"]).unwrap();
        let PlaneOutcome::Param(p) = parametrize_baseline(&f, 1e-2, &BaselineConfig::default()).unwrap() else { panic!() };
        assert_eq!(p.denominator, up("1 + t^2"));
        assert_eq!(p.numerators[0], up("1 - t^2"));
        assert_eq!(p.numerators[1], up("2*t"));
        assert!(p.satisfies_exactly(&f));
    }

    #[test]
    fn folium_from_its_double_point() {
        let f = PlaneCurve::parse("x^3 + y^3 - x*y", ["x", "y"]).unwrap();
        let c = detect_cluster(&f, 1e-2).unwrap();
        assert_eq!(c.exact, Some([rat(0), rat(0)]));
        assert_eq!(c.multiplicity, 2);
        let PlaneOutcome::Param(p) = parametrize_baseline(&f, 1e-2, &BaselineConfig::default()).unwrap() else { panic!() };
        assert_eq!(p.numerators[0], up("t"));
        assert_eq!(p.numerators[1], up("t^2"));
        assert_eq!(p.denominator, up("1 + t^3"));
        assert!(p.satisfies_exactly(&f));
        assert!(p.residual_on(&f, 100).unwrap() < 1e-12);
    }

    #[test]
    fn smooth_conic_has_no_cluster_of_order_two() {
        let f = PlaneCurve::parse("x^2 + y^2 - 1", ["x", "y"]).unwrap();
        // for a conic the cluster is any curve point; a smooth cubic has none
        assert!(detect_cluster(&f, 1e-2).is_some());
        let cubic = PlaneCurve::parse("y^2 - x^3 - x - 1 + y^3", ["x", "y"]).unwrap();
        assert!(detect_cluster(&cubic, 1e-3).is_none());
    }

    #[test]
    fn line_parametrization() {
        let f = PlaneCurve::parse("x + 2*y - 3", ["x", "y"]).unwrap();
        let PlaneOutcome::Param(p) = parametrize_baseline(&f, 1e-2, &BaselineConfig::default()).unwrap() else { panic!() };
        assert!(p.satisfies_exactly(&f));
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn contract_clauses() {
        let e = PlaneParam::new(up("t"), up("1"), up("(t - 1)^2"), Provenance::Oracle).unwrap_err();
        assert!(e.to_string().contains("q not square-free"), "{e}");
        let e = PlaneParam::new(up("t^3"), up("1"), up("t^2 + 1"), Provenance::Oracle).unwrap_err();
        assert!(e.to_string().contains("deg(p1) > deg(q)"), "{e}");
        let e = PlaneParam::new(up("t - 1"), up("1"), up("t^2 - 1"), Provenance::Oracle).unwrap_err();
        assert!(e.to_string().contains("gcd(p1, q)"), "{e}");
    }

    #[test]
    fn oracle_labels_select_axis() {
        let o = oracle_from_file(&parse_param("p1: 1 - t^2\np3: 2*t\nq: 1 + t^2\n").unwrap()).unwrap();
        assert_eq!(o.axis, Some(Axis::Y));
        assert_eq!(o.labels, ["p1".to_string(), "p3".to_string()]);
    }

    #[test]
    fn implicit_equation_of_the_circle() {
        let p = PlaneParam::new(up("1 - t^2"), up("2*t"), up("1 + t^2"), Provenance::Oracle).unwrap();
        let f = p.implicitize(["x", "y"]).unwrap();
        let expect = crate::poly::parse_poly("x^2 + y^2 - 1", &["x", "y"]).unwrap().primitive_normalized();
        assert_eq!(f, expect);
        assert_eq!(p.numerators[0].eval(&ratio(1, 1)), rat(0));
    }

    #[test]
    fn sample_parameters_avoid_poles() {
        let p = PlaneParam::new(up("t"), up("t^2"), up("t^3 + 1"), Provenance::Oracle).unwrap();
        let ts = p.sample_parameters(100).unwrap();
        assert_eq!(ts.len(), 100);
        assert!(ts.iter().all(|t| (t + 1.0).abs() > POLE_MARGIN));
    }
}
