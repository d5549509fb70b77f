//! Numeric roots by companion-matrix eigenvalues plus Newton polishing.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rat::{to_f64, Rat};
use super::upoly::UPoly;
use crate::error::{Error, Result};

const MAX_ITER: usize = 500;
const RESIDUAL_TOL: f64 = 1e-10;
pub const CONJUGATE_TOL: f64 = 1e-9;

/// Backward-error residual `|p(ξ)| / Σ |c_k| |ξ|^k`.
pub fn relative_residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let mut val = Complex64::zero();
    let mut mag = 0.0;
    let r = z.norm();
    for c in coeffs.iter().rev() {
        val = val * z + c;
        mag = mag * r + c.norm();
    }
    if mag == 0.0 {
        0.0
    } else {
        val.norm() / mag
    }
}

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn newton_polish(coeffs: &[Complex64], z: Complex64, steps: usize) -> Complex64 {
    let mut best = z;
    let mut best_res = relative_residual(coeffs, z);
    let mut cur = z;
    for _ in 0..steps {
        let (p, dp) = eval_with_derivative(coeffs, cur);
        if dp.norm() == 0.0 {
            break;
        }
        let next = cur - p / dp;
        if !next.re.is_finite() || !next.im.is_finite() {
            break;
        }
        let res = relative_residual(coeffs, next);
        cur = next;
        if res < best_res {
            best = next;
            best_res = res;
        }
        if best_res < 1e-15 {
            break;
        }
    }
    best
}

/// All complex roots of the polynomial with coefficients `coeffs` (constant
/// term first). Roots come back sorted by real then imaginary part.
pub fn roots_complex(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    if c.len() < 2 {
        return Err(Error::ConstantPolynomial);
    }
    let mut roots = Vec::new();
    let zeros = c.iter().take_while(|x| x.norm() == 0.0).count();
    roots.extend(std::iter::repeat_n(Complex64::zero(), zeros));
    let reduced: Vec<Complex64> = c[zeros..].to_vec();
    let n = reduced.len() - 1;
    if n > 0 {
        let lead = reduced[n];
        let monic: Vec<Complex64> = reduced.iter().map(|x| x / lead).collect();
        // scale t = s·u so the monic coefficients are of comparable size
        let s = (0..n)
            .filter(|&k| monic[k].norm() > 0.0)
            .map(|k| monic[k].norm().powf(1.0 / (n - k) as f64))
            .fold(0.0f64, f64::max)
            .max(f64::MIN_POSITIVE);
        let scaled: Vec<Complex64> = (0..=n).map(|k| monic[k] / s.powi((n - k) as i32)).collect();
        let mut m = DMatrix::<Complex64>::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = Complex64::one();
        }
        for i in 0..n {
            m[(i, n - 1)] = -scaled[i];
        }
        let schur = nalgebra::Schur::try_new(m, 1e-15, MAX_ITER)
            .ok_or(Error::RootsNonConvergence { residual: f64::INFINITY })?;
        let t = schur.unpack().1;
        for i in 0..n {
            let z = newton_polish(&reduced, t[(i, i)] * s, 3);
            roots.push(z);
        }
    }
    let worst = roots.iter().map(|&z| relative_residual(&c, z)).fold(0.0, f64::max);
    if !(worst < RESIDUAL_TOL) {
        let mut polished = Vec::with_capacity(roots.len());
        for &z in &roots {
            polished.push(newton_polish(&c, z, MAX_ITER / 10));
        }
        let worst2 = polished.iter().map(|&z| relative_residual(&c, z)).fold(0.0, f64::max);
        // multiple roots converge slowly but their eigenvalue cluster is already accurate
        if worst2 < worst {
            roots = polished;
        }
        let w = worst.min(worst2);
        if !(w < 1e-6) {
            return Err(Error::RootsNonConvergence { residual: w });
        }
    }
    sort_roots(&mut roots);
    Ok(roots)
}

pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Roots of a real polynomial with conjugate pairs matched and real roots
/// snapped to the real axis.
pub fn roots_real_poly(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut roots = roots_complex(&c)?;
    snap_conjugates(&mut roots);
    Ok(roots)
}

/// Pairs each non-real root with its closest conjugate partner and averages
/// the pair into an exact conjugate pair.
pub fn snap_conjugates(roots: &mut [Complex64]) {
    let n = roots.len();
    let mut done = vec![false; n];
    for i in 0..n {
        if done[i] {
            continue;
        }
        let scale = 1.0f64.max(roots[i].norm());
        if roots[i].im.abs() <= CONJUGATE_TOL * scale {
            roots[i].im = 0.0;
            done[i] = true;
            continue;
        }
        let partner = (0..n)
            .filter(|&j| j != i && !done[j])
            .min_by(|&a, &b| (roots[a] - roots[i].conj()).norm().total_cmp(&(roots[b] - roots[i].conj()).norm()));
        if let Some(j) = partner {
            if (roots[j] - roots[i].conj()).norm() <= 1e-6 * scale {
                let avg = (roots[i] + roots[j].conj()) * 0.5;
                let (hi, lo) = if avg.im > 0.0 { (avg, avg.conj()) } else { (avg.conj(), avg) };
                roots[i] = lo;
                roots[j] = hi;
                done[j] = true;
            }
        }
        done[i] = true;
    }
    sort_roots(roots);
}

/// Rescales the coefficients by a common power of two so the largest is
/// near 1 before converting to doubles. Roots are unaffected.
pub fn scaled_f64_coeffs(p: &UPoly<Rat>) -> Vec<f64> {
    let bits = p
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.numer().bits() as i64 - c.denom().bits() as i64)
        .max()
        .unwrap_or(0);
    let factor = if bits >= 0 {
        Rat::new(BigInt::one(), BigInt::one() << (bits as usize))
    } else {
        Rat::from_integer(BigInt::one() << ((-bits) as usize))
    };
    p.coeffs().iter().map(|c| to_f64(&(c * &factor))).collect()
}

/// Complex roots of a rational polynomial (conjugates matched).
pub fn roots_numeric(p: &UPoly<Rat>) -> Result<Vec<Complex64>> {
    roots_real_poly(&scaled_f64_coeffs(p))
}

/// Real roots only (imaginary part exactly zero after snapping).
pub fn real_roots(coeffs: &[f64]) -> Result<Vec<f64>> {
    Ok(roots_real_poly(coeffs)?.into_iter().filter(|z| z.im == 0.0).map(|z| z.re).collect())
}

pub fn is_real(z: Complex64) -> bool {
    z.im.abs() <= CONJUGATE_TOL * 1.0f64.max(z.norm())
}

pub fn any_negative(p: &UPoly<Rat>) -> bool {
    p.coeffs().iter().any(|c| c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_upoly;

    #[test]
    fn difference_of_squares() {
        let r = roots_numeric(&parse_upoly("t^2 - 1", "t").unwrap()).unwrap();
        assert!((r[0].re + 1.0).abs() < 1e-14 && r[0].im == 0.0);
        assert!((r[1].re - 1.0).abs() < 1e-14 && r[1].im == 0.0);
    }

    #[test]
    fn quartic_root_product_matches_constant_term() {
        let q = parse_upoly("3.555348439*t^3 + t^4 + 4.622830832*t^2 + 2.625458073*t + 0.5529230644", "t").unwrap();
        let r = roots_numeric(&q).unwrap();
        assert_eq!(r.len(), 4);
        let prod = r.iter().fold(Complex64::one(), |a, b| a * b);
        assert!((prod.re - 0.5529230644).abs() < 1e-8);
        assert!(prod.im.abs() < 1e-8);
        let sum: Complex64 = r.iter().sum();
        assert!((sum.re + 3.555348439).abs() < 1e-8);
    }

    #[test]
    fn double_root_cluster() {
        let r = roots_numeric(&parse_upoly("(t - 2)^2", "t").unwrap()).unwrap();
        assert_eq!(r.len(), 2);
        for z in &r {
            assert!((z - Complex64::new(2.0, 0.0)).norm() < 1e-5);
        }
    }

    #[test]
    fn residuals_below_tolerance() {
        let p = parse_upoly("t^5 - 3*t^4 + 1/7*t^2 - 11*t + 2", "t").unwrap();
        let c: Vec<Complex64> = scaled_f64_coeffs(&p).into_iter().map(|x| Complex64::new(x, 0.0)).collect();
        for z in roots_numeric(&p).unwrap() {
            assert!(relative_residual(&c, z) < 1e-10);
        }
    }

    #[test]
    fn constant_is_rejected() {
        assert!(matches!(roots_numeric(&parse_upoly("4", "t").unwrap()), Err(Error::ConstantPolynomial)));
    }
}
