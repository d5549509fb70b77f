//! Projection of a space curve onto a coordinate plane through generalized
//! resultants, and the choice of projection frame.
//!
//! Inside a frame the curve is rewritten in coordinates `(u, v, e)` stored in
//! the variables `x, y, z`; projection always eliminates `z`.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::curve::{PlaneCurve, SpaceCurve, SPACE_VARS};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, pure_last_power_index, TermOrder};
use crate::poly::rat::{rat, ratio};
use crate::poly::{gcd_many, MPoly, Rat};
use crate::slice::rng_from;

pub const DELTA: &str = "Δ";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    /// Original coordinate index placed at frame position `k` (`u, v, e`).
    pub fn permutation(self) -> [usize; 3] {
        match self {
            Axis::Z => [0, 1, 2],
            Axis::Y => [0, 2, 1],
            Axis::X => [1, 2, 0],
        }
    }

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn parse(s: &str) -> Option<Axis> {
        match s {
            "x" => Some(Axis::X),
            "y" => Some(Axis::Y),
            "z" => Some(Axis::Z),
            _ => None,
        }
    }

    /// Labels of the two plane coordinates and the eliminated one.
    pub fn labels(self) -> [&'static str; 3] {
        let p = self.permutation();
        [SPACE_VARS[p[0]], SPACE_VARS[p[1]], SPACE_VARS[p[2]]]
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", SPACE_VARS[self.index()])
    }
}

/// An exact orthogonal matrix `M / n` built from an integer quaternion,
/// where `Mᵀ M = n² I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rotation {
    pub quaternion: [i64; 4],
    pub matrix: [[i64; 3]; 3],
    pub scale: i64,
}

impl Rotation {
    pub fn from_quaternion(q: [i64; 4]) -> Self {
        let [a, b, c, d] = q;
        let n = a * a + b * b + c * c + d * d;
        let matrix = [
            [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
            [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
            [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
        ];
        Rotation { quaternion: q, matrix, scale: n }
    }

    pub fn random(rng: &mut impl Rng) -> Self {
        loop {
            let q = [rng.random_range(1..=4), rng.random_range(-3..=3), rng.random_range(-3..=3), rng.random_range(-3..=3)];
            let r = Self::from_quaternion(q);
            // skip rotations that keep a coordinate axis fixed
            if r.matrix.iter().flatten().filter(|&&v| v == 0).count() == 0 {
                return r;
            }
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Rat {
        ratio(self.matrix[i][j], self.scale)
    }

    pub fn entry_f64(&self, i: usize, j: usize) -> f64 {
        self.matrix[i][j] as f64 / self.scale as f64
    }
}

/// Coordinates used for one projection: an optional rotation followed by an
/// axis permutation. Frame coordinates are `c = P · R · X`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionFrame {
    pub axis: Axis,
    pub rotation: Option<Rotation>,
}

impl ProjectionFrame {
    pub fn axis(axis: Axis) -> Self {
        ProjectionFrame { axis, rotation: None }
    }

    pub fn rotated(rotation: Rotation) -> Self {
        ProjectionFrame { axis: Axis::Z, rotation: Some(rotation) }
    }

    /// Plane coordinate names: `(x, y)`, `(x, z)`, `(y, z)`, or `(u, v)` for
    /// rotated frames.
    pub fn plane_vars(&self) -> [&'static str; 2] {
        if self.rotation.is_some() {
            return ["u", "v"];
        }
        let l = self.axis.labels();
        [l[0], l[1]]
    }

    pub fn eliminated_var(&self) -> &'static str {
        if self.rotation.is_some() {
            "e"
        } else {
            self.axis.labels()[2]
        }
    }

    /// Matrix `A` with frame coordinates `c = A X` (rational, orthogonal).
    pub fn to_frame_matrix(&self) -> [[Rat; 3]; 3] {
        let perm = self.axis.permutation();
        let rot = |i: usize, j: usize| match &self.rotation {
            Some(r) => r.entry(i, j),
            None => {
                if i == j {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            }
        };
        std::array::from_fn(|k| std::array::from_fn(|j| rot(perm[k], j)))
    }

    /// Inverse (= transpose) of [`to_frame_matrix`](Self::to_frame_matrix).
    pub fn from_frame_matrix(&self) -> [[Rat; 3]; 3] {
        let a = self.to_frame_matrix();
        std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
    }

    pub fn to_frame_f64(&self) -> [[f64; 3]; 3] {
        let a = self.to_frame_matrix();
        std::array::from_fn(|i| std::array::from_fn(|j| crate::poly::rat::to_f64(&a[i][j])))
    }

    pub fn point_to_frame(&self, p: &[f64; 3]) -> [f64; 3] {
        let a = self.to_frame_f64();
        std::array::from_fn(|i| (0..3).map(|j| a[i][j] * p[j]).sum())
    }

    pub fn point_from_frame(&self, c: &[f64; 3]) -> [f64; 3] {
        let a = self.to_frame_f64();
        std::array::from_fn(|j| (0..3).map(|i| a[i][j] * c[i]).sum())
    }

    /// The curve rewritten in frame coordinates (stored as `x, y, z`).
    pub fn curve_in_frame(&self, curve: &SpaceCurve) -> Result<SpaceCurve> {
        if self.rotation.is_none() && self.axis == Axis::Z {
            return Ok(curve.clone());
        }
        curve.substitute_linear(&self.from_frame_matrix())
    }

    /// Distances are preserved exactly (the matrix is orthogonal).
    pub fn distance_scale(&self) -> f64 {
        1.0
    }

    pub fn describe(&self) -> String {
        match &self.rotation {
            None => format!("axis {}", self.axis),
            Some(r) => format!("rotation by quaternion {:?}", r.quaternion),
        }
    }
}

/// Frames in the order they are tried: axes `z, y, x`, then one random
/// rotation drawn from `seed`.
pub fn candidate_frames(seed: u64) -> Vec<ProjectionFrame> {
    let mut rng = rng_from(seed ^ 0x5EED_F4A3);
    vec![
        ProjectionFrame::axis(Axis::Z),
        ProjectionFrame::axis(Axis::Y),
        ProjectionFrame::axis(Axis::X),
        ProjectionFrame::rotated(Rotation::random(&mut rng)),
    ]
}

/// `F₂ + Δ·F₃ + … + Δ^{s−2}·F_s` in the ring `x, y, z, Δ` (with optional
/// integer weights on the summands).
pub fn build_f_delta(generators: &[MPoly], weights: Option<&[i64]>) -> Result<MPoly> {
    if generators.len() < 2 {
        return Err(Error::TooFewGenerators(generators.len()));
    }
    let mut vars = generators[0].var_refs();
    vars.push(DELTA);
    let delta = MPoly::var(&vars, DELTA)?;
    let mut acc = MPoly::zero(&vars);
    let mut power = MPoly::constant(&vars, Rat::one());
    for (k, g) in generators[1..].iter().enumerate() {
        let g = g.with_vars(&vars)?;
        let w = weights.and_then(|w| w.get(k)).copied().unwrap_or(1);
        acc = &acc + &(&g * &power).scale(&rat(w));
        power = &power * &delta;
    }
    Ok(acc)
}

/// `R = Σ α_j Δ^j` together with its Δ-coefficients; for the projective
/// version `S = Σ β_i Δ^i` lives in `x, y, w, Δ`.
#[derive(Clone, Debug)]
pub struct GeneralizedResultant {
    pub resultant: MPoly,
    pub coefficients: Vec<MPoly>,
}

impl GeneralizedResultant {
    /// Eliminates `z` between `first` and `F_Δ` built from `rest`.
    pub fn compute(first: &MPoly, rest: &[MPoly], weights: Option<&[i64]>) -> Result<Self> {
        let mut all = vec![first.clone()];
        all.extend_from_slice(rest);
        let fd = build_f_delta(&all, weights)?;
        let vars = fd.var_refs();
        let f1 = first.with_vars(&vars)?;
        let zi = fd.index_of("z")?;
        let r = if fd.degree_in(zi) == 0 && f1.degree_in(zi) > 0 {
            // resultant against a z-free polynomial is its deg_z(F₁)-th power
            fd.pow(f1.degree_in(zi)).drop_var(zi)?
        } else {
            crate::poly::resultant_wrt(&f1, &fd, "z")?
        };
        if r.is_zero() {
            return Err(Error::VanishingResultant);
        }
        let di = r.index_of(DELTA)?;
        let coefficients = r.coeffs_in(di).into_iter().map(|c| c.drop_var(di)).collect::<Result<Vec<_>>>()?;
        Ok(GeneralizedResultant { resultant: r, coefficients })
    }

    /// Δ-degree.
    pub fn m(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn gcd(&self) -> Result<MPoly> {
        gcd_many(&self.coefficients)
    }
}

/// Index of a generator whose `z^{tdeg}` coefficient is a nonzero constant.
pub fn leading_z_generator(gens: &[MPoly]) -> Option<usize> {
    gens.iter().position(|g| {
        let d = g.total_degree();
        let mut e = vec![0; g.nvars()];
        e[2] = d;
        d > 0 && !g.coeff(&crate::poly::Monomial(e)).is_zero()
    })
}

fn with_first(gens: &[MPoly], i: usize) -> (MPoly, Vec<MPoly>) {
    let rest = gens.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
    (gens[i].clone(), rest)
}

fn resultant_with_retries(first: &MPoly, rest: &[MPoly]) -> Result<GeneralizedResultant> {
    match GeneralizedResultant::compute(first, rest, None) {
        Err(Error::VanishingResultant) if rest.len() > 1 => {
            let mut rng = rng_from(17);
            for _ in 0..4 {
                let w: Vec<i64> = rest.iter().map(|_| rng.random_range(1..=9)).collect();
                if let Ok(g) = GeneralizedResultant::compute(first, rest, Some(&w)) {
                    return Ok(g);
                }
            }
            Err(Error::VanishingResultant)
        }
        other => other,
    }
}

/// Affine projection of a curve already expressed in frame coordinates:
/// the gcd of the Δ-coefficients of `res_z(F₁, F_Δ)`, normalized.
pub fn project_affine_frame(curve: &SpaceCurve, frame: &ProjectionFrame) -> Result<PlaneCurve> {
    let gens = curve.generators();
    let i = leading_z_generator(gens)
        .ok_or_else(|| Error::AssumptionFailed("no generator has a constant leading z-power".into()))?;
    let (first, rest) = with_first(gens, i);
    let gr = resultant_with_retries(&first, &rest)?;
    let f = gr.gcd()?;
    Ok(PlaneCurve::new(f.renamed(&frame.plane_vars())))
}

/// Affine projection of `curve` (original coordinates) in `frame`.
pub fn project_affine(curve: &SpaceCurve, frame: &ProjectionFrame) -> Result<PlaneCurve> {
    project_affine_frame(&frame.curve_in_frame(curve)?, frame)
}

/// Result of the projective projection with its certificates.
#[derive(Clone, Debug)]
pub struct ProjectiveProjection {
    /// Homogeneous polynomial in `(u, v, w)`.
    pub poly: MPoly,
    pub betas_homogeneous: bool,
    pub betas_common_degree: Option<u32>,
    /// True when `w` does not divide `S`.
    pub w_free: bool,
    pub delta_degree: usize,
}

/// Projective projection in frame coordinates, computed from the graded-lex
/// basis with the degree witness placed first.
pub fn project_projective_frame(curve: &SpaceCurve, frame: &ProjectionFrame) -> Result<ProjectiveProjection> {
    let order = TermOrder::grlex(&SPACE_VARS);
    let basis = buchberger(curve.generators(), &order)?;
    let i = pure_last_power_index(&basis, &order)
        .ok_or_else(|| Error::AssumptionFailed("basis has no element with total degree carried by z".into()))?;
    let hom = basis.iter().map(|g| g.homogenize_over(&[0, 1, 2], "w")).collect::<Result<Vec<_>>>()?;
    let (first, rest) = with_first(&hom, i);
    if rest.is_empty() {
        return Err(Error::TooFewGenerators(1));
    }
    let gr = resultant_with_retries(&first, &rest)?;
    let w_idx = gr.resultant.index_of("w")?;
    let w = MPoly::var(&gr.resultant.var_refs(), "w")?;
    let w_free = gr.resultant.exact_div(&w).is_none();
    let degs: Vec<u32> = gr.coefficients.iter().filter(|b| !b.is_zero()).map(|b| b.total_degree()).collect();
    let betas_homogeneous = gr.coefficients.iter().all(|b| b.is_homogeneous());
    let common = degs.first().copied().filter(|d| degs.iter().all(|e| e == d));
    let g = gr.gcd()?;
    let _ = w_idx;
    let [u, v] = frame.plane_vars();
    Ok(ProjectiveProjection {
        poly: g.renamed(&[u, v, "w"]),
        betas_homogeneous,
        betas_common_degree: common,
        w_free,
        delta_degree: gr.m(),
    })
}

pub fn project_projective(curve: &SpaceCurve, frame: &ProjectionFrame) -> Result<ProjectiveProjection> {
    project_projective_frame(&frame.curve_in_frame(curve)?, frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s, &SPACE_VARS).unwrap()
    }

    #[test]
    fn f_delta_shapes() {
        let (f1, f2, f3, f4) = (p("x"), p("y"), p("z"), p("x*y"));
        assert_eq!(build_f_delta(&[f1.clone(), f2.clone()], None).unwrap(), f2.with_vars(&["x", "y", "z", DELTA]).unwrap());
        let v = ["x", "y", "z", DELTA];
        let three = build_f_delta(&[f1.clone(), f2.clone(), f3.clone()], None).unwrap();
        assert_eq!(three, parse_poly("y + Δ*z", &v).unwrap());
        let four = build_f_delta(&[f1.clone(), f2, f3, f4], None).unwrap();
        assert_eq!(four, parse_poly("y + Δ*z + Δ^2*x*y", &v).unwrap());
        assert!(matches!(build_f_delta(&[f1], None), Err(Error::TooFewGenerators(1))));
    }

    #[test]
    fn machinery_projection_of_a_line() {
        let c = SpaceCurve::parse(&["z - x", "z - y"]).unwrap();
        let frame = ProjectionFrame::axis(Axis::Z);
        let f = project_affine(&c, &frame).unwrap();
        assert_eq!(f.poly, parse_poly("y - x", &["x", "y"]).unwrap());
        let pp = project_projective(&c, &frame).unwrap();
        let h = pp.poly.clone();
        assert!(h == parse_poly("x - y", &["x", "y", "w"]).unwrap() || h == parse_poly("y - x", &["x", "y", "w"]).unwrap());
        assert!(pp.w_free);
    }

    #[test]
    fn three_generators_use_delta() {
        let c = SpaceCurve::parse(&["z - x", "y - x", "z - y"]).unwrap();
        let f = project_affine(&c, &ProjectionFrame::axis(Axis::Z)).unwrap();
        assert_eq!(f.poly, parse_poly("y - x", &["x", "y"]).unwrap());
    }

    #[test]
    fn frames_are_orthogonal_and_invertible() {
        for frame in candidate_frames(3) {
            let a = frame.to_frame_matrix();
            let b = frame.from_frame_matrix();
            for i in 0..3 {
                for j in 0..3 {
                    let s: Rat = (0..3).map(|k| &a[i][k] * &b[k][j]).sum();
                    assert_eq!(s, if i == j { Rat::one() } else { Rat::zero() });
                }
            }
            let p = [0.3, -1.2, 2.5];
            let back = frame.point_from_frame(&frame.point_to_frame(&p));
            assert!(crate::numeric::dist(&p, &back) < 1e-12);
        }
    }

    #[test]
    fn axis_y_frame_swaps_coordinates() {
        let c = SpaceCurve::parse(&["z - x^2 - 1", "y - x"]).unwrap();
        let frame = ProjectionFrame::axis(Axis::Y);
        let fc = frame.curve_in_frame(&c).unwrap();
        // frame coordinates (x, z, y): the second frame coordinate is z
        assert_eq!(fc.generators()[0], p("y - x^2 - 1"));
        let f = project_affine(&c, &frame).unwrap();
        assert_eq!(f.var_names(), ["x", "z"]);
    }

    #[test]
    fn seeded_frames_are_deterministic() {
        assert_eq!(candidate_frames(9), candidate_frames(9));
    }
}
