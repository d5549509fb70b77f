//! Asymptotes, their pairing, and sampled distances between an implicit
//! curve and a rational one.

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;
use serde::Serialize;

use crate::assumptions::{infinity_points, match_point_sets, InfinityPoint};
use crate::curve::SpaceCurve;
use crate::error::{Error, Result};
use crate::lift::{RationalParam3, INFINITY_MATCH_TOL};
use crate::numeric::{dist, gauss_newton, FPoly};
use crate::slice::{sample_real_points, Point3};

/// Directions closer than this (cross product of unit vectors) are parallel.
pub const PARALLEL_TOL: f64 = 1e-7;

type C3 = [Complex64; 3];

fn dot_h(a: &C3, b: &C3) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

fn norm3(a: &C3) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn cross(a: &C3, b: &C3) -> C3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn unit(a: &C3) -> C3 {
    let n = norm3(a);
    a.map(|z| z / n)
}

#[derive(Clone, Debug, Serialize)]
pub struct Asymptote {
    #[serde(serialize_with = "crate::report::ser_complex3")]
    pub anchor: C3,
    #[serde(serialize_with = "crate::report::ser_complex3")]
    pub direction: C3,
    pub source: InfinityPoint,
    pub is_real: bool,
}

impl Asymptote {
    fn new(anchor: C3, source: InfinityPoint) -> Self {
        let direction = source.coords.map(|z| z.conj());
        Asymptote { anchor, direction, is_real: source.is_real, source }
    }

    /// `|u × v|` of the unit directions.
    pub fn parallel_defect(&self, other: &Asymptote) -> f64 {
        norm3(&cross(&unit(&self.direction), &unit(&other.direction)))
    }

    /// Distance from a real point to the (real part of the) line.
    pub fn distance_to(&self, p: &Point3) -> f64 {
        let a = self.anchor.map(|z| z.re);
        let d = unit(&self.direction).map(|z| z.re);
        let v = [p[0] - a[0], p[1] - a[1], p[2] - a[2]];
        let s: f64 = v.iter().zip(&d).map(|(x, y)| x * y).sum();
        let w = [v[0] - s * d[0], v[1] - s * d[1], v[2] - s * d[2]];
        w.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// The point of the line closest to `p`.
    pub fn nearest_point(&self, p: &Point3) -> Point3 {
        let a = self.anchor.map(|z| z.re);
        let d = unit(&self.direction).map(|z| z.re);
        let s: f64 = (0..3).map(|i| (p[i] - a[i]) * d[i]).sum();
        [a[0] + s * d[0], a[1] + s * d[1], a[2] + s * d[2]]
    }
}

/// Asymptotes of an implicit curve: the affine parts of the tangent lines
/// at its points at infinity, each cut out by the gradient planes of the
/// homogenized basis.
pub fn asymptotes_implicit(curve: &SpaceCurve) -> Result<Vec<Asymptote>> {
    let forms: Vec<FPoly> = curve.homogenized_basis().iter().map(FPoly::from_mpoly).collect();
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::new();
    for p in infinity_points(curve)? {
        let at = [p.coords[0], p.coords[1], p.coords[2], zero];
        let rows: Vec<(C3, Complex64)> = forms
            .iter()
            .map(|h| {
                let g = h.gradient_c(&at);
                let s = g.iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
                ([g[0] / s, g[1] / s, g[2] / s], g[3] / s)
            })
            .collect();
        // best-conditioned pair of gradient planes
        let mut best: Option<(f64, f64, usize, usize)> = None;
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let c = norm3(&cross(&rows[i].0, &rows[j].0));
                let prod = norm3(&rows[i].0) * norm3(&rows[j].0);
                let better = match best {
                    None => true,
                    Some((bc, bp, _, _)) => c > bc * (1.0 + 1e-9) || ((c - bc).abs() <= 1e-9 * bc && prod > bp),
                };
                if better {
                    best = Some((c, prod, i, j));
                }
            }
        }
        let full_rank = |tol: f64| best.is_some_and(|(c, ..)| c > tol);
        if !full_rank(1e-9) {
            let any_w = rows.iter().any(|r| r.1.norm() > 1e-9);
            let singular = !any_w || rows.iter().filter(|r| norm3(&r.0) > 1e-9).count() == 0;
            let name = format!("{:?}", p.coords);
            return Err(if singular { Error::SingularAtInfinity(name) } else { Error::TangentAtInfinity(name) });
        }
        let (_, _, i, j) = best.expect("checked above");
        // minimum-norm point of {g_i·X = -h_i, g_j·X = -h_j}
        let (gi, gj) = (rows[i].0, rows[j].0);
        let gram = Matrix2::new(dot_h(&gi, &gi), dot_h(&gi, &gj), dot_h(&gj, &gi), dot_h(&gj, &gj));
        let rhs = Vector2::new(-rows[i].1, -rows[j].1);
        let Some(coef) = gram.lu().solve(&rhs) else {
            return Err(Error::TangentAtInfinity(format!("{:?}", p.coords)));
        };
        let anchor = std::array::from_fn(|k| coef[0] * gi[k].conj() + coef[1] * gj[k].conj());
        out.push(Asymptote::new(anchor, p));
    }
    Ok(out)
}

/// Asymptotes of a rational curve from the expansion at each simple pole:
/// `P(t) = p(ξ)/(q'(ξ)(t-ξ)) + (p'(ξ) - p(ξ)q''(ξ)/(2q'(ξ)))/q'(ξ) + O(t-ξ)`.
pub fn asymptotes_parametric(param: &RationalParam3) -> Result<Vec<Asymptote>> {
    let q = param.denominator.to_complex();
    let dq = q.derivative();
    let ddq = dq.derivative();
    let comps: Vec<_> = param.components.iter().map(|p| p.to_complex()).collect();
    let mut out: Vec<Asymptote> = Vec::new();
    for xi in param.poles()? {
        let q1 = dq.eval(&xi);
        if q1.norm() < 1e-12 {
            return Err(Error::SingularAtInfinity(format!("pole {xi:.6} is not simple")));
        }
        let q2 = ddq.eval(&xi);
        let val: C3 = std::array::from_fn(|k| comps[k].eval(&xi));
        let der: C3 = std::array::from_fn(|k| comps[k].derivative().eval(&xi));
        let anchor = std::array::from_fn(|k| (der[k] - val[k] * q2 / (q1 * 2.0)) / q1);
        let Some(src) = InfinityPoint::new(val) else {
            return Err(Error::SingularAtInfinity(format!("P vanishes at the pole {xi:.6}")));
        };
        out.push(Asymptote::new(anchor, src));
    }
    Ok(out)
}

/// One-to-one matching of parallel asymptotes. Returns `(i, j, defect)`.
pub fn pair_asymptotes(a: &[Asymptote], b: &[Asymptote]) -> Result<Vec<(usize, usize, f64)>> {
    if a.len() != b.len() {
        return Err(Error::StructureMismatch(format!("{} asymptotes against {}", a.len(), b.len())));
    }
    let mut used = vec![false; b.len()];
    let mut out = Vec::with_capacity(a.len());
    for (i, la) in a.iter().enumerate() {
        let candidates: Vec<(usize, f64)> =
            b.iter().enumerate().map(|(j, lb)| (j, la.parallel_defect(lb))).filter(|(_, d)| *d < PARALLEL_TOL).collect();
        let [(j, d)] = candidates[..] else {
            return Err(Error::StructureMismatch(format!("asymptote {i} has {} parallel partners", candidates.len())));
        };
        if used[j] || la.is_real != b[j].is_real {
            return Err(Error::StructureMismatch(format!("asymptote {i} pairs with {j} inconsistently")));
        }
        used[j] = true;
        out.push((i, j, d));
    }
    Ok(out)
}

/// True when both curves have the same points at infinity within 1e-7.
pub fn structure_at_infinity_equal(curve: &SpaceCurve, param: &RationalParam3) -> Result<bool> {
    Ok(match_point_sets(&infinity_points(curve)?, &param.infinity_points()?, INFINITY_MATCH_TOL).is_some())
}

/// Distance from a real point to an implicit curve: local descent along the
/// curve from nearby seeds. Without seeds the distance is only known to
/// exceed the sampled region.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Distance {
    Estimate(f64),
    AtLeast(f64),
}

impl Distance {
    pub fn value(&self) -> f64 {
        match *self {
            Distance::Estimate(d) | Distance::AtLeast(d) => d,
        }
    }
}

/// Pre-sampled real points of an implicit curve, used as descent seeds.
pub struct CurveSampler<'a> {
    curve: &'a SpaceCurve,
    pub samples: Vec<Point3>,
    pub half_width: f64,
    extra_seeds: Vec<Asymptote>,
}

impl<'a> CurveSampler<'a> {
    /// Roughly `n` samples inside `[-r, r]³`.
    pub fn new(curve: &'a SpaceCurve, half_width: f64, n: usize, seed: u64) -> Result<Self> {
        let deg_guess = curve.generators().iter().map(|g| g.total_degree()).product::<u32>().max(1) as usize;
        let per_axis = (n / (3 * deg_guess)).max(8);
        let samples = sample_real_points(curve, half_width, per_axis, seed)?;
        Ok(CurveSampler { curve, samples, half_width, extra_seeds: Vec::new() })
    }

    /// Real asymptotes also seed the descent, for points far outside the box.
    pub fn with_asymptotes(mut self, asymptotes: &[Asymptote]) -> Self {
        self.extra_seeds = asymptotes.iter().filter(|a| a.is_real).cloned().collect();
        self
    }

    pub fn distance(&self, p: &Point3) -> Distance {
        let mut seeds: Vec<(f64, Point3)> = self.samples.iter().map(|s| (dist(s, p), *s)).collect();
        seeds.sort_by(|a, b| a.0.total_cmp(&b.0));
        seeds.truncate(4);
        for a in &self.extra_seeds {
            let s = a.nearest_point(p);
            seeds.push((dist(&s, p), s));
        }
        if seeds.is_empty() {
            return Distance::AtLeast((self.half_width - p.iter().fold(0.0f64, |m, c| m.max(c.abs()))).max(0.0));
        }
        let best = seeds.iter().filter_map(|(_, s)| descend(self.curve, p, s)).fold(f64::INFINITY, f64::min);
        if best.is_finite() {
            Distance::Estimate(best)
        } else {
            Distance::AtLeast(seeds[0].0.min(self.half_width))
        }
    }
}

/// Seeds drawn per distance query when no sampler is shared.
pub const SEED_SAMPLES: usize = 1000;

/// One-off distance from `p` to the real part of `curve` inside `[-r, r]³`.
pub fn point_to_curve_distance(p: &Point3, curve: &SpaceCurve, half_width: f64, seed: u64) -> Result<Distance> {
    let asym = asymptotes_implicit(curve).unwrap_or_default();
    Ok(CurveSampler::new(curve, half_width, SEED_SAMPLES, seed)?.with_asymptotes(&asym).distance(p))
}

fn tangent(gens: &[FPoly], x: &Point3) -> Option<Point3> {
    let grads: Vec<Vec<f64>> = gens.iter().map(|g| g.gradient(x)).collect();
    let mut best: Option<(f64, Point3)> = None;
    for i in 0..grads.len() {
        for j in i + 1..grads.len() {
            let (a, b) = (&grads[i], &grads[j]);
            let na = a.iter().map(|v| v * v).sum::<f64>().sqrt();
            let nb = b.iter().map(|v| v * v).sum::<f64>().sqrt();
            let c = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
            let n = c.iter().map(|v| v * v).sum::<f64>().sqrt();
            let rel = n / (na * nb).max(f64::MIN_POSITIVE);
            if best.is_none_or(|(r, _)| rel > r) && n > 0.0 {
                best = Some((rel, c.map(|v| v / n)));
            }
        }
    }
    best.map(|(_, t)| t)
}

/// Walks from `seed` along the curve towards the foot of `p`.
fn descend(curve: &SpaceCurve, p: &Point3, seed: &Point3) -> Option<f64> {
    let gens = curve.float_generators();
    let on = |x: &[f64]| -> Option<Point3> {
        let y = gauss_newton(gens, x, 30);
        let y = [y[0], y[1], y[2]];
        (curve.residual(&y) < 1e-9).then_some(y)
    };
    let mut x = on(seed)?;
    let mut d = dist(&x, p);
    for _ in 0..200 {
        let Some(t) = tangent(gens, &x) else { break };
        let mut s: f64 = (0..3).map(|i| (p[i] - x[i]) * t[i]).sum();
        let mut moved = false;
        for _ in 0..30 {
            if s.abs() < 1e-14 * (1.0 + d) {
                break;
            }
            if let Some(y) = on(&[x[0] + s * t[0], x[1] + s * t[1], x[2] + s * t[2]]) {
                let dy = dist(&y, p);
                if dy < d {
                    x = y;
                    d = dy;
                    moved = true;
                    break;
                }
            }
            s *= 0.5;
        }
        if !moved {
            break;
        }
    }
    Some(d)
}

/// Distance from a point to a rational curve: dense parameter sampling
/// followed by golden-section refinement.
pub fn distance_to_param(param: &RationalParam3, p: &Point3, ts: &[f64]) -> f64 {
    let f = |t: f64| {
        let x = param.eval(t);
        if x.iter().all(|v| v.is_finite()) {
            dist(&x, p)
        } else {
            f64::INFINITY
        }
    };
    let vals: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
    let mut order: Vec<usize> = (0..ts.len()).collect();
    order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    let mut best = f64::INFINITY;
    for &k in order.iter().take(3) {
        let lo = if k > 0 { ts[k - 1] } else { ts[k] - 1.0 };
        let hi = if k + 1 < ts.len() { ts[k + 1] } else { ts[k] + 1.0 };
        best = best.min(golden(&f, lo, hi)).min(vals[k]);
    }
    best
}

fn golden(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..80 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    fc.min(fd)
}

/// Dense parameter grid: `t = tan θ` plus refinement near real poles.
pub fn parameter_grid(param: &RationalParam3, n: usize) -> Result<Vec<f64>> {
    let mut ts: Vec<f64> = (0..n).map(|k| (std::f64::consts::PI * ((k as f64 + 0.5) / n as f64 - 0.5)).tan()).collect();
    for xi in param.poles()?.into_iter().filter(|z| z.im.abs() < 1e-9).map(|z| z.re) {
        for e in 1..=60 {
            let off = 10f64.powf(-(e as f64) / 10.0);
            ts.push(xi - off);
            ts.push(xi + off);
        }
    }
    ts.sort_by(|a, b| a.total_cmp(b));
    Ok(ts)
}

#[derive(Clone, Debug, Serialize)]
pub struct OneSided {
    pub max: f64,
    pub mean: f64,
    pub samples: usize,
}

impl OneSided {
    fn of(ds: &[f64]) -> Self {
        let max = ds.iter().copied().fold(0.0, f64::max);
        let mean = if ds.is_empty() { 0.0 } else { ds.iter().sum::<f64>() / ds.len() as f64 };
        OneSided { max, mean, samples: ds.len() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PoleProbe {
    pub pole: f64,
    /// `-1` or `+1`: the side of the pole the samples approach from.
    pub side: i8,
    pub offsets: [f64; 3],
    pub distances: [f64; 3],
    pub diverging: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Finite,
    Suspect,
}

/// Sampled distances inside a box, kept apart from the escape probe.
#[derive(Clone, Debug, Serialize)]
pub struct DistanceReport {
    pub box_half_width: f64,
    /// From points of the implicit curve to the rational one.
    pub curve_to_param: OneSided,
    /// From points of the rational curve to the implicit one.
    pub param_to_curve: OneSided,
    /// Larger of the two sampled maxima (an estimate, never a bound).
    pub estimate: f64,
    pub pole_probes: Vec<PoleProbe>,
    pub verdict: Verdict,
}

pub const PROBE_OFFSETS: [f64; 3] = [1e-1, 1e-2, 1e-3];

/// Growth below this is numerical noise, not escape.
pub const PROBE_NOISE: f64 = 1e-6;

/// Increasing with non-shrinking increments: growth towards divergence
/// rather than convergence to a finite limit.
pub fn diverging(d: &[f64; 3]) -> bool {
    d[0] < d[1] && d[1] < d[2] && (d[2] - d[1]) >= (d[1] - d[0]) && d[2] - d[0] > PROBE_NOISE
}

#[derive(Clone, Copy, Debug)]
pub struct HausdorffConfig {
    pub half_width: f64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for HausdorffConfig {
    fn default() -> Self {
        HausdorffConfig { half_width: 10.0, samples: 2000, seed: 1 }
    }
}

/// Symmetric sampled distance between the real parts of an implicit and a
/// rational curve inside `[-r, r]³`, with the pole-escape probe.
pub fn sampled_hausdorff(curve: &SpaceCurve, param: &RationalParam3, cfg: &HausdorffConfig) -> Result<DistanceReport> {
    let r = cfg.half_width;
    let curve_asymptotes = asymptotes_implicit(curve)?;
    let sampler = CurveSampler::new(curve, r, cfg.samples, cfg.seed)?.with_asymptotes(&curve_asymptotes);
    let grid = parameter_grid(param, cfg.samples.max(200) * 4)?;

    let mut forward: Vec<f64> = sampler.samples.iter().step_by((sampler.samples.len() / cfg.samples).max(1)).map(|a| distance_to_param(param, a, &grid)).collect();
    forward.retain(|d| d.is_finite());

    let inside: Vec<Point3> = grid.iter().map(|&t| param.eval(t)).filter(|x| x.iter().all(|c| c.is_finite() && c.abs() <= r)).collect();
    let step = (inside.len() / cfg.samples).max(1);
    let backward: Vec<f64> = inside.iter().step_by(step).map(|b| sampler.distance(b).value()).collect();

    let mut probes = Vec::new();
    for xi in param.poles()?.into_iter().filter(|z| z.im.abs() < 1e-9).map(|z| z.re) {
        for side in [-1i8, 1] {
            let distances = PROBE_OFFSETS.map(|o| sampler.distance(&param.eval(xi + side as f64 * o)).value());
            probes.push(PoleProbe { pole: xi, side, offsets: PROBE_OFFSETS, distances, diverging: diverging(&distances) });
        }
    }
    let verdict = if probes.iter().any(|p| p.diverging) { Verdict::Suspect } else { Verdict::Finite };
    let curve_to_param = OneSided::of(&forward);
    let param_to_curve = OneSided::of(&backward);
    Ok(DistanceReport {
        box_half_width: r,
        estimate: curve_to_param.max.max(param_to_curve.max),
        curve_to_param,
        param_to_curve,
        pole_probes: probes,
        verdict,
    })
}

/// Control run: samples of the curve (one seed) against the curve itself
/// (reference samples from another seed).
pub fn self_distance(curve: &SpaceCurve, half_width: f64, samples: usize, seed: u64) -> Result<OneSided> {
    let sampler = CurveSampler::new(curve, half_width, samples, seed)?;
    let probe = sample_real_points(curve, half_width * 0.9, (samples / 12).max(4), seed.wrapping_add(7919))?;
    let ds: Vec<f64> = probe.iter().map(|p| sampler.distance(p).value()).collect();
    Ok(OneSided::of(&ds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::LiftMode;
    use crate::poly::parse_upoly;

    fn up(s: &str) -> crate::poly::UPoly<crate::poly::Rat> {
        parse_upoly(s, "t").unwrap()
    }

    #[test]
    fn the_x_axis_is_its_own_asymptote() {
        let c = SpaceCurve::parse(&["y", "z"]).unwrap();
        let a = asymptotes_implicit(&c).unwrap();
        assert_eq!(a.len(), 1);
        assert!(a[0].is_real);
        assert!(a[0].parallel_defect(&a[0]) < 1e-15);
        assert!(a[0].direction[0].re == 1.0 && a[0].direction[1].norm() < 1e-15);
        assert!(a[0].distance_to(&[5.0, 0.0, 0.0]) < 1e-12);
    }

    #[test]
    fn hyperbola_asymptotes_both_ways() {
        // x y = 1 in the plane z = 0 has the coordinate axes as asymptotes
        let c = SpaceCurve::parse(&["x*y - 1 + z", "z"]).unwrap();
        let a = asymptotes_implicit(&c).unwrap();
        assert_eq!(a.len(), 2);
        let p = RationalParam3 { components: [up("t^2"), up("1"), up("0")], denominator: up("t"), mode: LiftMode::Exact };
        // (t, 1/t, 0): one pole at 0; the other branch escapes as t → ∞ and is not a pole
        let b = asymptotes_parametric(&p).unwrap();
        assert_eq!(b.len(), 1);
        assert!(b[0].anchor.iter().all(|z| z.norm() < 1e-12));
        assert!(a.iter().any(|l| l.parallel_defect(&b[0]) < 1e-12));
    }

    #[test]
    fn pairing_identity_and_mismatch() {
        let c = SpaceCurve::parse(&["x^2 - y^2 - 1", "z - x"]).unwrap();
        let a = asymptotes_implicit(&c).unwrap();
        let pairs = pair_asymptotes(&a, &a).unwrap();
        assert!(pairs.iter().all(|(i, j, _)| i == j));
        assert!(matches!(pair_asymptotes(&a, &a[..1]), Err(Error::StructureMismatch(_))));
    }

    #[test]
    fn distances_to_the_x_axis() {
        let c = SpaceCurve::parse(&["y", "z"]).unwrap();
        let s = CurveSampler::new(&c, 5.0, 200, 1).unwrap();
        assert!(s.distance(&[0.3, 0.0, 0.0]).value() < 1e-6);
        assert!((s.distance(&[0.0, 1.0, 0.0]).value() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn parallel_lines_are_one_apart() {
        let c = SpaceCurve::parse(&["y - 1", "z"]).unwrap();
        // x = t/(t-1) runs over the whole x-axis
        let p = RationalParam3 { components: [up("t"), up("0"), up("0")], denominator: up("t - 1"), mode: LiftMode::Exact };
        let r = sampled_hausdorff(&c, &p, &HausdorffConfig { half_width: 5.0, samples: 200, seed: 3 }).unwrap();
        assert!((r.estimate - 1.0).abs() < 1e-6, "{r:?}");
        assert_eq!(r.verdict, Verdict::Finite);
    }

    #[test]
    fn divergence_rule() {
        assert!(diverging(&[1.0, 10.0, 100.0]));
        assert!(!diverging(&[0.5, 0.9, 0.95]));
        assert!(!diverging(&[1.0, 0.5, 0.4]));
        assert!(!diverging(&[1e-12, 2e-12, 4e-12]));
    }
}
