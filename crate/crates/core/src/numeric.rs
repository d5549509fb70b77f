//! Floating-point views of exact polynomials and small dense solvers.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::poly::rat::to_f64;
use crate::poly::MPoly;

/// A multivariate polynomial with `f64` coefficients for fast evaluation.
#[derive(Clone, Debug)]
pub struct FPoly {
    nvars: usize,
    terms: Vec<(Vec<u32>, f64)>,
}

impl FPoly {
    pub fn from_mpoly(p: &MPoly) -> Self {
        FPoly { nvars: p.nvars(), terms: p.terms().map(|(m, c)| (m.0.clone(), to_f64(c))).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficient 2-norm.
    pub fn norm(&self) -> f64 {
        self.terms.iter().map(|(_, c)| c * c).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, s: f64) -> FPoly {
        FPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    fn powers<T: Copy + std::ops::Mul<Output = T>>(x: &[T], one: T, maxdeg: &[u32]) -> Vec<Vec<T>> {
        x.iter()
            .zip(maxdeg)
            .map(|(&v, &d)| {
                let mut out = Vec::with_capacity(d as usize + 1);
                out.push(one);
                for k in 0..d as usize {
                    out.push(out[k] * v);
                }
                out
            })
            .collect()
    }

    fn max_degrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.nvars];
        for (m, _) in &self.terms {
            for (a, b) in d.iter_mut().zip(m) {
                *a = (*a).max(*b);
            }
        }
        d
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let pw = Self::powers(x, 1.0, &self.max_degrees());
        self.terms
            .iter()
            .map(|(m, c)| m.iter().enumerate().fold(*c, |acc, (i, &e)| acc * pw[i][e as usize]))
            .sum()
    }

    pub fn eval_c(&self, x: &[Complex64]) -> Complex64 {
        let pw = Self::powers(x, Complex64::new(1.0, 0.0), &self.max_degrees());
        self.terms
            .iter()
            .map(|(m, c)| m.iter().enumerate().fold(Complex64::new(*c, 0.0), |acc, (i, &e)| acc * pw[i][e as usize]))
            .sum()
    }

    /// `Σ |c_m| |x^m|`, the natural scale of `eval` at `x`.
    pub fn abs_scale_c(&self, x: &[Complex64]) -> f64 {
        let r: Vec<f64> = x.iter().map(|z| z.norm()).collect();
        let pw = Self::powers(&r, 1.0, &self.max_degrees());
        self.terms
            .iter()
            .map(|(m, c)| m.iter().enumerate().fold(c.abs(), |acc, (i, &e)| acc * pw[i][e as usize]))
            .sum()
    }

    /// `|F(x)| / Σ |c_m||x^m|`.
    pub fn normalized_residual_c(&self, x: &[Complex64]) -> f64 {
        let s = self.abs_scale_c(x);
        if s == 0.0 {
            0.0
        } else {
            self.eval_c(x).norm() / s
        }
    }

    pub fn normalized_residual(&self, x: &[f64]) -> f64 {
        let xc: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.normalized_residual_c(&xc)
    }

    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let pw = Self::powers(x, 1.0, &self.max_degrees());
        let mut g = vec![0.0; self.nvars];
        for (m, c) in &self.terms {
            for (j, gj) in g.iter_mut().enumerate() {
                if m[j] == 0 {
                    continue;
                }
                let mut t = c * m[j] as f64;
                for (i, &e) in m.iter().enumerate() {
                    let e = if i == j { e - 1 } else { e };
                    t *= pw[i][e as usize];
                }
                *gj += t;
            }
        }
        g
    }

    pub fn gradient_c(&self, x: &[Complex64]) -> Vec<Complex64> {
        let pw = Self::powers(x, Complex64::new(1.0, 0.0), &self.max_degrees());
        let mut g = vec![Complex64::new(0.0, 0.0); self.nvars];
        for (m, c) in &self.terms {
            for (j, gj) in g.iter_mut().enumerate() {
                if m[j] == 0 {
                    continue;
                }
                let mut t = Complex64::new(c * m[j] as f64, 0.0);
                for (i, &e) in m.iter().enumerate() {
                    let e = if i == j { e - 1 } else { e };
                    t *= pw[i][e as usize];
                }
                *gj += t;
            }
        }
        g
    }
}

/// Gauss-Newton refinement of a complex point towards the common zero set of
/// `eqs`, using the minimum-norm step. Returns the refined point.
pub fn gauss_newton_c(eqs: &[FPoly], start: &[Complex64], steps: usize) -> Vec<Complex64> {
    let n = start.len();
    let mut x = start.to_vec();
    let scales: Vec<f64> = eqs.iter().map(|e| e.norm().max(f64::MIN_POSITIVE)).collect();
    let resid = |x: &[Complex64]| eqs.iter().map(|e| e.normalized_residual_c(x)).fold(0.0, f64::max);
    let mut best = resid(&x);
    for _ in 0..steps {
        if best < 1e-15 {
            break;
        }
        let mut jac = DMatrix::<Complex64>::zeros(eqs.len(), n);
        let mut rhs = DVector::<Complex64>::zeros(eqs.len());
        for (i, e) in eqs.iter().enumerate() {
            let g = e.gradient_c(&x);
            for j in 0..n {
                jac[(i, j)] = g[j] / scales[i];
            }
            rhs[i] = -e.eval_c(&x) / scales[i];
        }
        let svd = jac.svd(true, true);
        let Ok(dx) = svd.solve(&rhs, 1e-12) else { break };
        let cand: Vec<Complex64> = x.iter().zip(dx.iter()).map(|(a, b)| a + b).collect();
        if cand.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            break;
        }
        let r = resid(&cand);
        if r < best {
            best = r;
            x = cand;
        } else {
            break;
        }
    }
    x
}

/// Real Gauss-Newton with the minimum-norm step.
pub fn gauss_newton(eqs: &[FPoly], start: &[f64], steps: usize) -> Vec<f64> {
    let xc: Vec<Complex64> = start.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    gauss_newton_c(eqs, &xc, steps).into_iter().map(|z| z.re).collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

pub fn dist_c(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}
