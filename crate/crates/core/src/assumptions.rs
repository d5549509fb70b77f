//! Degree, points at infinity and the general position checks.
//!
//! The checks, in the coordinates of a projection frame (elimination of `z`):
//!
//! 1. the curve has exactly `deg C` distinct points at infinity;
//! 2. the projection is birational onto its image (only partially decidable
//!    here: degree equality plus a sampled fibre check);
//! 3. no point at infinity has the form `(1:0:λ:0)`, `(0:1:μ:0)` or `(0:0:1:0)`;
//! 4. two points at infinity `(1:λ:μ:0)`, `(1:λ:μ*:0)` with the same `λ` coincide;
//! 5. some generator has a nonzero constant coefficient at `z^{tdeg}`.

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use crate::curve::{PlaneCurve, SpaceCurve};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, TermOrder};
use crate::poly::rat::rat;
use crate::poly::roots::{roots_numeric, CONJUGATE_TOL};
use crate::poly::{gcd_many, MPoly, Monomial, Rat, UPoly};
use crate::projection::{leading_z_generator, project_affine_frame, ProjectionFrame};
use crate::slice::{rng_from, solve_planar_system, SliceFamily};

pub const INFINITY_RESIDUAL: f64 = 1e-8;
pub const COINCIDENCE_TOL: f64 = 1e-7;

/// A point `(a:b:c:0)` normalized so the first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InfinityPoint {
    #[serde(serialize_with = "crate::report::ser_complex3")]
    pub coords: [Complex64; 3],
    pub is_real: bool,
}

impl InfinityPoint {
    pub fn new(coords: [Complex64; 3]) -> Option<Self> {
        let scale = coords.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return None;
        }
        let k = coords.iter().position(|z| z.norm() > 1e-12 * scale)?;
        let lead = coords[k];
        let mut c = coords.map(|z| z / lead);
        for (i, z) in c.iter_mut().enumerate() {
            if i < k {
                *z = Complex64::zero();
            }
        }
        c[k] = Complex64::new(1.0, 0.0);
        let is_real = c.iter().all(|z| z.im.abs() < CONJUGATE_TOL * 1.0f64.max(z.norm()));
        if is_real {
            for z in c.iter_mut() {
                z.im = 0.0;
            }
        }
        Some(InfinityPoint { coords: c, is_real })
    }

    pub fn distance(&self, other: &InfinityPoint) -> f64 {
        self.coords.iter().zip(&other.coords).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
    }

    /// Coordinates after the linear map `c ↦ A c`.
    pub fn transformed(&self, a: &[[f64; 3]; 3]) -> Option<InfinityPoint> {
        let c = self.coords;
        InfinityPoint::new(std::array::from_fn(|i| (0..3).map(|j| c[j] * a[i][j]).sum()))
    }
}

/// Matches two point sets within `tol`; returns the largest matched
/// distance, or `None` when the sets differ in size or a point is unmatched.
pub fn match_point_sets(a: &[InfinityPoint], b: &[InfinityPoint], tol: f64) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for p in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, q)| (j, p.distance(q)))
            .min_by(|x, y| x.1.total_cmp(&y.1))?;
        if d > tol {
            return None;
        }
        used[j] = true;
        worst = worst.max(d);
    }
    Some(worst)
}

/// Largest distance from a point of `a` to its nearest point of `b`.
pub fn point_set_gap(a: &[InfinityPoint], b: &[InfinityPoint]) -> f64 {
    a.iter()
        .map(|p| b.iter().map(|q| p.distance(q)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

fn dedup_points(mut pts: Vec<InfinityPoint>) -> Vec<InfinityPoint> {
    let mut out: Vec<InfinityPoint> = Vec::new();
    for p in pts.drain(..) {
        if !out.iter().any(|q| q.distance(&p) < COINCIDENCE_TOL) {
            out.push(p);
        }
    }
    out
}

/// `gcd_k H_k(a, b, z)` as a univariate polynomial in `z`.
fn top_forms_gcd_at(tops: &[MPoly], a: i64, b: i64) -> Result<UPoly<Rat>> {
    let specs: Vec<MPoly> = tops.iter().map(|h| h.substitute(0, &rat(a)).substitute(1, &rat(b))).collect();
    if specs.iter().all(|p| p.is_zero()) {
        return Ok(UPoly::zero("z"));
    }
    gcd_many(&specs)?.to_upoly(2)
}

/// Points of the curve at infinity, from the top-degree forms of the
/// graded-lex basis.
pub fn infinity_points(curve: &SpaceCurve) -> Result<Vec<InfinityPoint>> {
    let tops = curve.top_forms();
    if tops.is_empty() {
        return Ok(Vec::new());
    }
    if gcd_many(&tops)?.total_degree() > 0 {
        return Err(Error::ClosureFailure("the forms at infinity share a common factor".into()));
    }
    let mut pts = Vec::new();
    // chart x = 1
    let chart: Vec<MPoly> = tops
        .iter()
        .map(|h| h.substitute(0, &rat(1)).drop_var(0))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|h| !h.is_zero())
        .collect();
    if chart.iter().all(|h| !h.is_constant()) {
        for p in solve_planar_system(&chart, 11)? {
            let c = [Complex64::new(1.0, 0.0), p[0], p[1]];
            if let Some(ip) = InfinityPoint::new(c) {
                pts.push(ip);
            }
        }
    }
    // x = 0, y = 1
    let g = top_forms_gcd_at(&tops, 0, 1)?;
    if g.is_zero() {
        return Err(Error::ClosureFailure("every (0:1:μ:0) lies on the curve".into()));
    }
    if g.deg() > 0 {
        for r in roots_numeric(&g)? {
            pts.extend(InfinityPoint::new([Complex64::zero(), Complex64::new(1.0, 0.0), r]));
        }
    }
    if tops.iter().all(|h| h.eval(&[rat(0), rat(0), rat(1)]).is_zero()) {
        pts.extend(InfinityPoint::new([Complex64::zero(), Complex64::zero(), Complex64::new(1.0, 0.0)]));
    }
    let tf: Vec<crate::numeric::FPoly> = tops.iter().map(crate::numeric::FPoly::from_mpoly).collect();
    let pts: Vec<InfinityPoint> = pts
        .into_iter()
        .filter(|p| tf.iter().all(|h| h.normalized_residual_c(&p.coords) < INFINITY_RESIDUAL))
        .collect();
    Ok(dedup_points(pts))
}

/// Number of standard monomials of a zero-dimensional graded basis in two
/// variables, or `None` if the quotient is infinite.
fn quotient_dimension(basis: &[MPoly]) -> Option<usize> {
    let leads: Vec<Monomial> = basis.iter().filter_map(|g| g.leading_term().map(|(m, _)| m.clone())).collect();
    if leads.iter().any(|m| m.degree() == 0) {
        return Some(0);
    }
    let px = leads.iter().filter(|m| m.0[1] == 0).map(|m| m.0[0]).min()?;
    let py = leads.iter().filter(|m| m.0[0] == 0).map(|m| m.0[1]).min()?;
    let mut count = 0;
    for i in 0..px {
        for j in 0..py {
            let m = Monomial(vec![i, j]);
            if !leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
        }
    }
    Some(count)
}

/// Number of intersections (with multiplicity) of the curve with the plane
/// `z = a x + b y + c`, or `None` if the plane contains a component.
pub fn plane_intersection_count(curve: &SpaceCurve, a: i64, b: i64, c: i64) -> Result<Option<usize>> {
    let v2 = ["x", "y"];
    let x = MPoly::var(&v2, "x")?;
    let y = MPoly::var(&v2, "y")?;
    let plane = &(&x.scale(&rat(a)) + &y.scale(&rat(b))) + &MPoly::constant(&v2, rat(c));
    let images = [x, y, plane];
    let gens: Vec<MPoly> = curve.generators().iter().map(|g| g.compose(&images)).collect();
    let basis = buchberger(&gens, &TermOrder::grlex(&v2))?;
    Ok(quotient_dimension(&basis))
}

/// Degree by intersecting with random planes: the maximum over three
/// draws; more draws are made when they disagree.
pub fn degree_space_curve(curve: &SpaceCurve, seed: u64) -> Result<usize> {
    use rand::Rng;
    let mut rng = rng_from(seed);
    let mut counts = Vec::new();
    let mut draws = 0;
    while draws < 5 {
        let (a, b, c) = (rng.random_range(-9..=9), rng.random_range(-9..=9), rng.random_range(-9..=9));
        draws += 1;
        if let Some(n) = plane_intersection_count(curve, a, b, c)? {
            counts.push(n);
        }
        if draws >= 3 && !counts.is_empty() && counts.iter().all(|&n| n == counts[0]) && counts.len() >= 3 {
            return Ok(counts[0]);
        }
    }
    let max = counts.iter().copied().max().ok_or_else(|| Error::InconsistentDegree(counts.clone()))?;
    if counts.iter().filter(|&&n| n == max).count() * 2 > counts.len() {
        Ok(max)
    } else {
        Err(Error::InconsistentDegree(counts))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn pass(detail: impl Into<String>) -> Self {
        Check { status: Status::Pass, detail: detail.into() }
    }
    fn fail(detail: impl Into<String>) -> Self {
        Check { status: Status::Fail, detail: detail.into() }
    }
    fn unknown(detail: impl Into<String>) -> Self {
        Check { status: Status::Unknown, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AssumptionReport {
    pub frame: String,
    pub degree: usize,
    pub infinity_points: Vec<InfinityPoint>,
    pub cardinality_at_infinity: Check,
    pub birational_projection: Check,
    pub forbidden_infinity_points: Check,
    pub injective_at_infinity: Check,
    pub leading_z_generator: Check,
    /// Generator (1-based) used as `F₁` for the projection.
    pub first_generator: Option<usize>,
    pub irreducibility: Check,
    pub non_planar: Check,
    pub notes: Vec<String>,
}

impl AssumptionReport {
    /// True when no hard check failed (unknown is tolerated).
    pub fn ok(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.status != Status::Fail)
    }

    pub fn checks(&self) -> Vec<(&'static str, &Check)> {
        vec![
            ("(1) card(C∞) = deg C", &self.cardinality_at_infinity),
            ("(2) birational projection", &self.birational_projection),
            ("(3) no forbidden points at infinity", &self.forbidden_infinity_points),
            ("(4) injective at infinity", &self.injective_at_infinity),
            ("(5) constant leading z-power", &self.leading_z_generator),
            ("irreducibility heuristic", &self.irreducibility),
            ("non-planarity", &self.non_planar),
        ]
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks()
            .into_iter()
            .filter(|(_, c)| c.status == Status::Fail)
            .map(|(n, c)| format!("{n}: {}", c.detail))
            .collect()
    }
}

fn fmt_point(p: &InfinityPoint) -> String {
    let f = |z: Complex64| {
        if z.im == 0.0 {
            format!("{:.6}", z.re)
        } else {
            format!("{:.6}{:+.6}i", z.re, z.im)
        }
    };
    format!("({}:{}:{}:0)", f(p.coords[0]), f(p.coords[1]), f(p.coords[2]))
}

fn forbidden_points(tops: &[MPoly]) -> Result<Check> {
    let mut witnesses = Vec::new();
    let g = top_forms_gcd_at(tops, 1, 0)?;
    if g.is_zero() || g.deg() > 0 {
        witnesses.push(format!("(1:0:λ:0) with λ a root of {g}"));
    }
    let g = top_forms_gcd_at(tops, 0, 1)?;
    if g.is_zero() || g.deg() > 0 {
        witnesses.push(format!("(0:1:μ:0) with μ a root of {g}"));
    }
    if tops.iter().all(|h| h.eval(&[rat(0), rat(0), rat(1)]).is_zero()) {
        witnesses.push("(0:0:1:0)".to_string());
    }
    Ok(if witnesses.is_empty() { Check::pass("exact check on the forms at infinity") } else { Check::fail(witnesses.join("; ")) })
}

fn injectivity(points: &[InfinityPoint], notes: &mut Vec<String>) -> Check {
    let affine: Vec<&InfinityPoint> = points.iter().filter(|p| p.coords[0].norm() > 0.5).collect();
    for (i, p) in affine.iter().enumerate() {
        for q in &affine[i + 1..] {
            let dl = (p.coords[1] - q.coords[1]).norm();
            let dm = (p.coords[2] - q.coords[2]).norm();
            if dl < COINCIDENCE_TOL && dm >= COINCIDENCE_TOL {
                return Check::fail(format!("{} and {} share λ", fmt_point(p), fmt_point(q)));
            }
            if dl < 1e-4 {
                notes.push(format!("near-coincident λ at infinity: {} and {}", fmt_point(p), fmt_point(q)));
            }
        }
    }
    Check::pass(format!("{} points with distinct λ", affine.len()))
}

/// Linear-trace test over three random slice families. A proper subset of
/// the witness points with a linear trace hints at a reducible curve.
pub fn irreducibility_heuristic(curve: &SpaceCurve, seed: u64) -> Status {
    let mut rng = rng_from(seed ^ 0x7ACE);
    for _ in 0..3 {
        let Ok(fam) = SliceFamily::random(curve, &mut rng) else { return Status::Unknown };
        let s0 = 0.37;
        let delta = 1e-2;
        let substeps = 10;
        let start = fam.section(s0);
        let n = start.len();
        if n == 0 || n > 16 {
            return Status::Unknown;
        }
        let mut tracks: Vec<Vec<[Complex64; 3]>> = start.iter().map(|p| vec![*p]).collect();
        let mut current = start;
        for k in 1..=2 * substeps {
            let s = s0 + delta * k as f64 / substeps as f64;
            let next = fam.section(s);
            if next.len() != n {
                return Status::Unknown;
            }
            let mut used = vec![false; n];
            let mut moved = current.clone();
            for (i, p) in current.iter().enumerate() {
                let Some(j) = (0..n)
                    .filter(|&j| !used[j])
                    .min_by(|&a, &b| crate::numeric::dist_c(p, &next[a]).total_cmp(&crate::numeric::dist_c(p, &next[b])))
                else {
                    return Status::Unknown;
                };
                used[j] = true;
                moved[i] = next[j];
            }
            current = moved;
            if k % substeps == 0 {
                for (t, p) in tracks.iter_mut().zip(&current) {
                    t.push(*p);
                }
            }
        }
        // second differences of a linear functional of each track
        let w = [0.31, -0.57, 0.76];
        let d: Vec<Complex64> = tracks
            .iter()
            .map(|t| {
                let f = |p: &[Complex64; 3]| p[0] * w[0] + p[1] * w[1] + p[2] * w[2];
                f(&t[2]) - f(&t[1]) * 2.0 + f(&t[0])
            })
            .collect();
        let scale: f64 = d.iter().map(|z| z.norm()).sum::<f64>().max(1e-300);
        let total: Complex64 = d.iter().sum();
        if total.norm() > 1e-6 * scale.max(1e-8) && total.norm() > 1e-12 {
            return Status::Unknown;
        }
        if n > 1 {
            for mask in 1u32..(1u32 << n) - 1 {
                let sub: Complex64 = (0..n).filter(|k| mask & (1 << k) != 0).map(|k| d[k]).sum();
                if sub.norm() <= 1e-6 * scale.max(1e-8) {
                    return Status::Unknown;
                }
            }
        }
    }
    Status::Pass
}

/// Sampled check that distinct curve points have distinct projections.
fn fibre_check(curve: &SpaceCurve, seed: u64, samples: usize) -> Option<String> {
    let mut rng = rng_from(seed ^ 0xF1BE);
    let mut pts = Vec::new();
    let mut tries = 0;
    while pts.len() < samples && tries < 8 {
        tries += 1;
        let Ok(fam) = SliceFamily::random(curve, &mut rng) else { continue };
        for k in 0..6 {
            pts.extend(fam.section(-0.9 + 0.31 * k as f64));
        }
    }
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let dp = ((p[0] - q[0]).norm_sqr() + (p[1] - q[1]).norm_sqr()).sqrt();
            let dz = (p[2] - q[2]).norm();
            let scale = 1.0 + p.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if dp < 1e-9 * scale && dz > 1e-6 * scale {
                return Some(format!("two curve points share the projection ({:.6}, {:.6})", p[0], p[1]));
            }
        }
    }
    None
}

/// Runs every check on a curve expressed in frame coordinates.
pub fn check_general_assumptions_frame(
    curve: &SpaceCurve,
    frame: &ProjectionFrame,
    projected: Option<&PlaneCurve>,
    seed: u64,
) -> Result<AssumptionReport> {
    let mut notes = Vec::new();
    let degree = degree_space_curve(curve, seed)?;
    let tops = curve.top_forms();
    let (points, card) = match infinity_points(curve) {
        Ok(pts) => {
            let c = if pts.len() == degree {
                Check::pass(format!("{} points at infinity, degree {}", pts.len(), degree))
            } else {
                Check::fail(format!("{} points at infinity but degree {}", pts.len(), degree))
            };
            (pts, c)
        }
        Err(e) => (Vec::new(), Check::fail(e.to_string())),
    };
    let forbidden = forbidden_points(&tops)?;
    let injective = injectivity(&points, &mut notes);
    let first = leading_z_generator(curve.generators());
    let leading = match first {
        Some(0) => Check::pass("F1 has a constant leading z-power"),
        Some(i) => {
            notes.push(format!("F1 lacks a constant z^tdeg coefficient; F{} is used as first generator", i + 1));
            Check::pass(format!("F{} has a constant leading z-power", i + 1))
        }
        None => Check::fail("no generator has a nonzero constant z^tdeg coefficient"),
    };
    let owned;
    let projected = match projected {
        Some(p) => Some(p),
        None if first.is_some() => {
            owned = project_affine_frame(curve, frame).ok();
            owned.as_ref()
        }
        None => None,
    };
    let birational = match projected {
        None => Check::unknown("projection unavailable"),
        Some(f) if f.degree() as usize != degree => {
            Check::fail(format!("deg of projection {} differs from deg C = {}", f.degree(), degree))
        }
        Some(_) => match fibre_check(curve, seed, 50) {
            Some(w) => Check::fail(w),
            None => Check::unknown("degrees agree and 50 sampled fibres are single points"),
        },
    };
    let irreducibility = match irreducibility_heuristic(curve, seed) {
        Status::Pass => Check::pass("linear trace test over three slice families"),
        _ => Check::unknown("trace test inconclusive"),
    };
    let basis = curve.groebner();
    let non_planar = match basis.iter().find(|g| g.total_degree() == 1) {
        Some(l) => Check::fail(format!("curve lies in the plane {l} = 0")),
        None => Check::pass("no linear form in the ideal"),
    };
    Ok(AssumptionReport {
        frame: frame.describe(),
        degree,
        infinity_points: points,
        cardinality_at_infinity: card,
        birational_projection: birational,
        forbidden_infinity_points: forbidden,
        injective_at_infinity: injective,
        leading_z_generator: leading,
        first_generator: first.map(|i| i + 1),
        irreducibility,
        non_planar,
        notes,
    })
}

/// Checks on the curve given in original coordinates.
pub fn check_general_assumptions(curve: &SpaceCurve, frame: &ProjectionFrame, seed: u64) -> Result<AssumptionReport> {
    let fc = frame.curve_in_frame(curve)?;
    check_general_assumptions_frame(&fc, frame, None, seed)
}

/// Hypotheses on the projected curve: `deg f` distinct points at infinity,
/// none of them `(1:0:0)` or `(0:1:0)`.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectedReport {
    pub degree: u32,
    pub points_at_infinity: usize,
    pub contains_1_0_0: bool,
    pub contains_0_1_0: bool,
    pub pass: bool,
}

pub fn check_projected_hypotheses(f: &PlaneCurve) -> Result<ProjectedReport> {
    let d = f.degree();
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let lf = f.leading_form();
    let at_1t = lf.substitute(0, &rat(1)).to_upoly(1)?;
    let c_ud = lf.coeff(&Monomial(vec![d, 0]));
    let c_vd = lf.coeff(&Monomial(vec![0, d]));
    let finite = if at_1t.deg() == 0 { 0 } else { at_1t.square_free_part()?.deg() };
    let count = finite + usize::from(c_vd.is_zero());
    let contains_1_0_0 = c_ud.is_zero();
    let contains_0_1_0 = c_vd.is_zero();
    Ok(ProjectedReport {
        degree: d,
        points_at_infinity: count,
        contains_1_0_0,
        contains_0_1_0,
        pass: count == d as usize && !contains_1_0_0 && !contains_0_1_0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projection::Axis;

    #[test]
    fn x_axis_has_one_point_at_infinity() {
        let c = SpaceCurve::parse(&["y", "z"]).unwrap();
        let pts = infinity_points(&c).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].coords[0], Complex64::new(1.0, 0.0));
        assert!(pts[0].coords[1].norm() < 1e-12 && pts[0].coords[2].norm() < 1e-12);
        assert_eq!(degree_space_curve(&c, 1).unwrap(), 1);
    }

    #[test]
    fn twisted_cubic_at_infinity_and_degree() {
        let c = SpaceCurve::parse(&["y - x^2", "z - x^3"]).unwrap();
        let pts = infinity_points(&c).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].coords, [Complex64::zero(), Complex64::zero(), Complex64::new(1.0, 0.0)]);
        assert_eq!(degree_space_curve(&c, 5).unwrap(), 3);
        let r = check_general_assumptions(&c, &ProjectionFrame::axis(Axis::Z), 1).unwrap();
        assert_eq!(r.forbidden_infinity_points.status, Status::Fail);
        assert!(r.forbidden_infinity_points.detail.contains("(0:0:1:0)"));
    }

    #[test]
    fn missing_leading_z_power_fails() {
        let c = SpaceCurve::parse(&["x*z - 1", "y"]).unwrap();
        let r = check_general_assumptions(&c, &ProjectionFrame::axis(Axis::Z), 1).unwrap();
        assert_eq!(r.leading_z_generator.status, Status::Fail);
    }

    #[test]
    fn projected_hypotheses() {
        let circle = PlaneCurve::parse("x^2 + y^2 - 1", ["x", "y"]).unwrap();
        let r = check_projected_hypotheses(&circle).unwrap();
        assert!(r.pass);
        assert_eq!(r.points_at_infinity, 2);
        let parabola = PlaneCurve::parse("y - x^2", ["x", "y"]).unwrap();
        let r = check_projected_hypotheses(&parabola).unwrap();
        assert!(!r.pass && r.contains_0_1_0);
    }

    #[test]
    fn trace_test() {
        let line = SpaceCurve::parse(&["y", "z"]).unwrap();
        assert_eq!(irreducibility_heuristic(&line, 1), Status::Pass);
        let pair = SpaceCurve::parse(&["x*y", "z"]).unwrap();
        assert_eq!(irreducibility_heuristic(&pair, 1), Status::Unknown);
        let cubic = SpaceCurve::parse(&["y - x^2", "z - x^3"]).unwrap();
        assert_eq!(irreducibility_heuristic(&cubic, 2), Status::Pass);
    }

    #[test]
    fn normalization_is_idempotent() {
        let p = InfinityPoint::new([Complex64::new(2.0, 1.0), Complex64::new(0.5, 0.0), Complex64::new(-1.0, 3.0)]).unwrap();
        let q = InfinityPoint::new(p.coords).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.coords[0], Complex64::new(1.0, 0.0));
    }
}
