//! Numeric plane sections of space curves and line sections of plane curves.
//!
//! A slice family is the pencil of parallel planes `X = s·n + α·e₁ + β·e₂`.
//! Substituting the plane into two combinations of the generators and
//! eliminating `β` exactly gives a resultant `R(s, α)` once per family; each
//! section then only needs univariate root finding, back-substitution and a
//! Gauss-Newton polish on all generators.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::SpaceCurve;
use crate::error::{Error, Result};
use crate::numeric::{dist_c, gauss_newton_c, FPoly};
use crate::poly::rat::rat;
use crate::poly::resultant::resultant_idx;
use crate::poly::roots::{roots_complex, scaled_f64_coeffs};
use crate::poly::{MPoly, Rat, UPoly};

const SLICE_VARS: [&str; 3] = ["s", "a", "b"];
pub const POINT_TOL: f64 = 1e-9;

pub type Point3 = [f64; 3];
pub type CPoint3 = [Complex64; 3];

pub fn is_real_point(p: &CPoint3) -> bool {
    let scale = 1.0 + p.iter().map(|z| z.norm()).fold(0.0, f64::max);
    p.iter().all(|z| z.im.abs() < 1e-7 * scale)
}

pub fn real_part(p: &CPoint3) -> Point3 {
    [p[0].re, p[1].re, p[2].re]
}

pub fn to_complex(p: &Point3) -> CPoint3 {
    [Complex64::new(p[0], 0.0), Complex64::new(p[1], 0.0), Complex64::new(p[2], 0.0)]
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[derive(Clone, Debug)]
pub struct SliceFamily {
    normal: [i64; 3],
    e1: [i64; 3],
    e2: [i64; 3],
    /// `res[j][i]`: coefficient of `α^j s^i` (commonly scaled).
    res: Vec<Vec<f64>>,
    /// Coefficients in `β` of the first combination, as floats in `(s, α)`.
    beta_coeffs: Vec<FPoly>,
    gens: Vec<FPoly>,
}

impl SliceFamily {
    /// Builds the family for the given directions. `weights` choose the two
    /// generator combinations that are intersected.
    pub fn new(curve: &SpaceCurve, normal: [i64; 3], e1: [i64; 3], e2: [i64; 3], weights: (&[i64], &[i64])) -> Result<Self> {
        let ring = SLICE_VARS;
        let sv = MPoly::var(&ring, "s")?;
        let av = MPoly::var(&ring, "a")?;
        let bv = MPoly::var(&ring, "b")?;
        let images: Vec<MPoly> = (0..3)
            .map(|k| &(&sv.scale(&rat(normal[k])) + &av.scale(&rat(e1[k]))) + &bv.scale(&rat(e2[k])))
            .collect();
        let subs: Vec<MPoly> = curve.generators().iter().map(|g| g.compose(&images)).collect();
        let combo = |w: &[i64]| subs.iter().zip(w.iter().cycle()).fold(MPoly::zero(&ring), |acc, (g, &c)| &acc + &g.scale(&rat(c)));
        let (first, second) = if subs.len() == 2 && weights.0.is_empty() {
            (subs[0].clone(), subs[1].clone())
        } else {
            (combo(weights.0), combo(weights.1))
        };
        if first.degree_in(2) == 0 || second.degree_in(2) == 0 {
            return Err(Error::DegreeZeroIn { var: "b".into() });
        }
        let r = resultant_idx(&first, &second, 2)?;
        if r.is_zero() || r.degree_in(1) == 0 {
            return Err(Error::VanishingResultant);
        }
        let da = r.degree_in(1) as usize;
        let ds = r.degree_in(0) as usize;
        // common power-of-two scaling of all resultant coefficients
        let flat: Vec<Rat> = r.terms().map(|(_, c)| c.clone()).collect();
        let scaled = scaled_f64_coeffs(&UPoly::new("c", flat));
        let mut res = vec![vec![0.0; ds + 1]; da + 1];
        for ((m, _), c) in r.terms().zip(scaled) {
            res[m.0[1] as usize][m.0[0] as usize] = c;
        }
        let beta_coeffs = first.coeffs_in(2).iter().map(FPoly::from_mpoly).collect();
        Ok(SliceFamily { normal, e1, e2, res, beta_coeffs, gens: curve.float_generators().to_vec() })
    }

    /// A family with random small-integer directions; retries on degenerate
    /// choices.
    pub fn random(curve: &SpaceCurve, rng: &mut ChaCha8Rng) -> Result<Self> {
        let mut last = Error::VanishingResultant;
        for _ in 0..8 {
            let mut v = || [rng.random_range(-5..=5), rng.random_range(-5..=5), rng.random_range(-5..=5)];
            let (n, e1, e2) = (v(), v(), v());
            if dot(n, cross(e1, e2)) == 0 {
                continue;
            }
            let ng = curve.generators().len();
            let w1: Vec<i64> = (0..ng).map(|_| rng.random_range(1..=7)).collect();
            let w2: Vec<i64> = (0..ng).map(|_| rng.random_range(-7..=7)).collect();
            let weights = if ng == 2 { (&[][..], &[][..]) } else { (&w1[..], &w2[..]) };
            match Self::new(curve, n, e1, e2, weights) {
                Ok(f) => return Ok(f),
                Err(e) => last = e,
            }
        }
        Err(last)
    }

    /// The family of planes `x_axis = s`, spanned by the other two axes.
    pub fn axis(curve: &SpaceCurve, axis: usize, rng: &mut ChaCha8Rng) -> Result<Self> {
        let mut n = [0i64; 3];
        n[axis] = 1;
        let mut e1 = [0i64; 3];
        let mut e2 = [0i64; 3];
        e1[(axis + 1) % 3] = 1;
        e2[(axis + 2) % 3] = 1;
        let ng = curve.generators().len();
        if ng == 2 {
            if let Ok(f) = Self::new(curve, n, e1, e2, (&[], &[])) {
                return Ok(f);
            }
        }
        let mut last = Error::VanishingResultant;
        for _ in 0..8 {
            let w1: Vec<i64> = (0..ng).map(|_| rng.random_range(1..=7)).collect();
            let w2: Vec<i64> = (0..ng).map(|_| rng.random_range(-7..=7)).collect();
            // a skewed in-plane basis avoids vertical fibres of the elimination
            let mut e2s = e2;
            e2s[(axis + 1) % 3] = rng.random_range(-3..=3);
            match Self::new(curve, n, e1, e2s, (&w1, &w2)) {
                Ok(f) => return Ok(f),
                Err(e) => last = e,
            }
        }
        Err(last)
    }

    pub fn normal(&self) -> [i64; 3] {
        self.normal
    }

    /// Point of the plane with parameters `(s, α, β)`.
    pub fn point(&self, s: Complex64, a: Complex64, b: Complex64) -> CPoint3 {
        let f = |k: usize| s * self.normal[k] as f64 + a * self.e1[k] as f64 + b * self.e2[k] as f64;
        [f(0), f(1), f(2)]
    }

    fn plane_equation(&self, s: f64) -> FPoly {
        let nu = cross(self.e1, self.e2);
        let c = dot(nu, self.normal) as f64 * s;
        let vars = ["x", "y", "z"];
        let mut p = MPoly::zero(&vars);
        for k in 0..3 {
            let mut e = vec![0; 3];
            e[k] = 1;
            p.add_term(crate::poly::Monomial(e), rat(nu[k]));
        }
        p.add_term(crate::poly::Monomial(vec![0, 0, 0]), crate::poly::rat::from_f64_exact(-c));
        FPoly::from_mpoly(&p)
    }

    /// All (complex) intersection points of the curve with the plane at
    /// offset `s`, each polished and checked against every generator.
    pub fn section(&self, s: f64) -> Vec<CPoint3> {
        let sc = Complex64::new(s, 0.0);
        let coeffs: Vec<Complex64> =
            self.res.iter().map(|row| Complex64::new(row.iter().rev().fold(0.0, |acc, c| acc * s + c), 0.0)).collect();
        let Ok(alphas) = roots_complex(&coeffs) else { return Vec::new() };
        let mut eqs = self.gens.clone();
        eqs.push(self.plane_equation(s));
        let mut out: Vec<CPoint3> = Vec::new();
        for a in alphas {
            let bc: Vec<Complex64> = self.beta_coeffs.iter().map(|f| f.eval_c(&[sc, a, Complex64::new(0.0, 0.0)])).collect();
            let betas = roots_complex(&bc).unwrap_or_default();
            for b in betas {
                let polished = gauss_newton_c(&eqs, &self.point(sc, a, b), 30);
                let p = [polished[0], polished[1], polished[2]];
                let r = self.gens.iter().map(|g| g.normalized_residual_c(&p)).fold(0.0, f64::max);
                if r > POINT_TOL {
                    continue;
                }
                let scale = 1.0 + p.iter().map(|z| z.norm()).fold(0.0, f64::max);
                if out.iter().any(|q| dist_c(q, &p) < 1e-6 * scale) {
                    continue;
                }
                out.push(p);
            }
        }
        out
    }

    /// Real intersection points at offset `s`.
    pub fn real_section(&self, s: f64) -> Vec<Point3> {
        self.section(s).iter().filter(|p| is_real_point(p)).map(real_part).collect()
    }
}

/// Deterministic RNG from a seed.
pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Real sample points of a space curve inside the box `[-r, r]³`, gathered
/// from sections by coordinate planes.
pub fn sample_real_points(curve: &SpaceCurve, half_width: f64, per_axis: usize, seed: u64) -> Result<Vec<Point3>> {
    let mut rng = rng_from(seed);
    let mut pts = Vec::new();
    let mut families = Vec::new();
    let mut last = None;
    // a curve inside a coordinate plane has no section family along that axis
    for axis in 0..3 {
        match SliceFamily::axis(curve, axis, &mut rng) {
            Ok(f) => families.push(f),
            Err(e) => last = Some(e),
        }
    }
    if families.is_empty() {
        return Err(last.unwrap_or(Error::VanishingResultant));
    }
    for fam in families {
        for k in 0..per_axis {
            let s = -half_width + 2.0 * half_width * (k as f64 + 0.5) / per_axis as f64;
            for p in fam.real_section(s) {
                if p.iter().all(|c| c.abs() <= half_width) {
                    pts.push(p);
                }
            }
        }
    }
    Ok(pts)
}

/// Real points of a plane curve on vertical and horizontal lines through a
/// grid, within `[-r, r]²`.
pub fn sample_plane_curve(f: &MPoly, half_width: f64, lines: usize) -> Vec<[f64; 2]> {
    let mut out = Vec::new();
    for axis in 0..2 {
        let other = 1 - axis;
        let coeffs: Vec<FPoly> = f.coeffs_in(other).iter().map(FPoly::from_mpoly).collect();
        for k in 0..lines {
            let c = -half_width + 2.0 * half_width * (k as f64 + 0.5) / lines as f64;
            let mut at = [0.0, 0.0];
            at[axis] = c;
            let uc: Vec<f64> = coeffs.iter().map(|p| p.eval(&at)).collect();
            if let Ok(rs) = crate::poly::roots::real_roots(&uc) {
                for r in rs.into_iter().filter(|r| r.abs() <= half_width) {
                    let mut p = [0.0, 0.0];
                    p[axis] = c;
                    p[other] = r;
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Common zeros of polynomials in two variables (a zero-dimensional system).
/// A random shear makes the elimination generic; the points are polished
/// on all equations and returned without multiplicity.
pub fn solve_planar_system(eqs: &[MPoly], seed: u64) -> Result<Vec<[Complex64; 2]>> {
    let eqs: Vec<MPoly> = eqs.iter().filter(|e| !e.is_zero()).cloned().collect();
    if eqs.is_empty() {
        return Err(Error::AllZero);
    }
    if eqs.iter().any(|e| e.is_constant()) {
        return Ok(Vec::new());
    }
    let vars = eqs[0].var_refs();
    let mut rng = rng_from(seed);
    let floats: Vec<FPoly> = eqs.iter().map(FPoly::from_mpoly).collect();
    let av = MPoly::var(&vars, vars[0])?;
    let bv = MPoly::var(&vars, vars[1])?;
    let mut by_degree: Vec<usize> = (0..eqs.len()).collect();
    by_degree.sort_by_key(|&i| (eqs[i].total_degree(), eqs[i].num_terms()));
    for attempt in 0..10 {
        let k = if attempt == 0 { 0 } else { rng.random_range(-6i64..=6) };
        let images = [&av + &bv.scale(&rat(k)), bv.clone()];
        let sheared: Vec<MPoly> = eqs.iter().map(|e| e.compose(&images)).collect();
        let combo = |w: &[i64]| sheared.iter().zip(w.iter()).fold(sheared[0].zero_like(), |acc, (g, &c)| &acc + &g.scale(&rat(c)));
        let (first, second) = if attempt < 3 && sheared.len() >= 2 {
            // the two lowest-degree equations already cut out a finite superset
            (sheared[by_degree[0]].clone(), sheared[by_degree[1]].clone())
        } else if sheared.len() == 1 {
            return Err(Error::ClosureFailure("a single equation defines a curve, not points".into()));
        } else {
            let w1: Vec<i64> = (0..sheared.len()).map(|_| rng.random_range(1..=9)).collect();
            let w2: Vec<i64> = (0..sheared.len()).map(|_| rng.random_range(-9..=9)).collect();
            (combo(&w1), combo(&w2))
        };
        if first.degree_in(1) == 0 || second.degree_in(1) == 0 {
            continue;
        }
        // a non-constant leading coefficient in b would hide solutions at infinity of the fibre
        if !first.coeffs_in(1).last().unwrap().is_constant() {
            continue;
        }
        let r = resultant_idx(&first, &second, 1)?;
        if r.is_zero() {
            continue;
        }
        let ru = r.to_upoly(0)?;
        if ru.deg() == 0 {
            return Ok(Vec::new());
        }
        let Ok(alphas) = crate::poly::roots::roots_numeric(&ru.square_free_part()?) else { continue };
        let bcoef: Vec<FPoly> = first.coeffs_in(1).iter().map(FPoly::from_mpoly).collect();
        let sfloats: Vec<FPoly> = sheared.iter().map(FPoly::from_mpoly).collect();
        let mut out: Vec<[Complex64; 2]> = Vec::new();
        for a in alphas {
            let zero = Complex64::new(0.0, 0.0);
            let bc: Vec<Complex64> = bcoef.iter().map(|f| f.eval_c(&[a, zero])).collect();
            let Ok(betas) = roots_complex(&bc) else { continue };
            let best = betas
                .into_iter()
                .map(|b| {
                    let r = sfloats.iter().map(|g| g.normalized_residual_c(&[a, b])).fold(0.0, f64::max);
                    (b, r)
                })
                .min_by(|x, y| x.1.total_cmp(&y.1));
            let Some((b, _)) = best else { continue };
            let pt = gauss_newton_c(&sfloats, &[a, b], 20);
            let p = [pt[0] + pt[1] * k as f64, pt[1]];
            let res = floats.iter().map(|g| g.normalized_residual_c(&p)).fold(0.0, f64::max);
            if res > 1e-8 {
                continue;
            }
            let scale = 1.0 + p[0].norm().max(p[1].norm());
            if out.iter().any(|q| dist_c(q, &p) < 1e-7 * scale) {
                continue;
            }
            out.push(p);
        }
        out.sort_by(|x, y| x[0].re.total_cmp(&y[0].re).then(x[0].im.total_cmp(&y[0].im)).then(x[1].re.total_cmp(&y[1].re)).then(x[1].im.total_cmp(&y[1].im)));
        return Ok(out);
    }
    Err(Error::ClosureFailure("elimination vanished for every shear".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_sections_have_three_points() {
        let c = SpaceCurve::parse(&["y - x^2", "z - x^3"]).unwrap();
        let mut rng = rng_from(7);
        let fam = SliceFamily::random(&c, &mut rng).unwrap();
        for s in [0.3, -0.7, 1.1] {
            let pts = fam.section(s);
            assert_eq!(pts.len(), 3, "offset {s}");
            for p in &pts {
                assert!(c.float_generators().iter().all(|g| g.normalized_residual_c(p) < 1e-9));
            }
        }
    }

    #[test]
    fn real_samples_lie_on_curve() {
        let c = SpaceCurve::parse(&["x^2 + y^2 - 1", "z - x"]).unwrap();
        let pts = sample_real_points(&c, 2.0, 10, 3).unwrap();
        assert!(pts.len() > 10);
        for p in pts {
            assert!((p[0] * p[0] + p[1] * p[1] - 1.0).abs() < 1e-9);
            assert!((p[2] - p[0]).abs() < 1e-9);
        }
    }

    #[test]
    fn planar_system_circle_and_line() {
        let v = ["y", "z"];
        let eqs = [crate::poly::parse_poly("y^2 + z^2 - 2", &v).unwrap(), crate::poly::parse_poly("y - z", &v).unwrap()];
        let pts = solve_planar_system(&eqs, 1).unwrap();
        assert_eq!(pts.len(), 2);
        for p in pts {
            assert!((p[0].norm() - 1.0).abs() < 1e-12 && (p[0] - p[1]).norm() < 1e-12);
        }
    }

    #[test]
    fn plane_samples_on_circle() {
        let f = crate::poly::parse_poly("x^2 + y^2 - 1", &["x", "y"]).unwrap();
        let pts = sample_plane_curve(&f, 1.5, 8);
        assert!(!pts.is_empty());
        for p in pts {
            assert!((p[0].hypot(p[1]) - 1.0).abs() < 1e-12);
        }
    }
}
