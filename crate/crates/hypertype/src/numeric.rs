//! Complex arithmetic helpers: principal branches, the Gamma function,
//! Pochhammer symbols and the error-tracked series summation kernels that
//! every family evaluator is built on.

use crate::{Error, Result};
use num_complex::Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Convergence status of a summed series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SeriesStatus {
    Converged,
    OptimallyTruncated,
    Failed,
}

/// Value of a summed series together with an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct SeriesResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub terms_used: usize,
    pub status: SeriesStatus,
}

impl SeriesResult {
    pub fn exact(value: Complex64) -> Self {
        SeriesResult {
            value,
            err_estimate: 0.0,
            terms_used: 1,
            status: SeriesStatus::Converged,
        }
    }

    /// Map the value, keeping the bookkeeping. The error estimate is scaled
    /// by the same factor, which is correct for multiplicative prefactors.
    pub fn scaled(self, factor: Complex64) -> Self {
        SeriesResult {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.norm(),
            ..self
        }
    }

    pub fn converged(&self) -> bool {
        self.status == SeriesStatus::Converged
    }
}

/// Principal branch of the logarithm, imaginary part in (-pi, pi].
///
/// The only subtlety is the negative real axis: a negative-zero imaginary
/// part would put us on the lower edge of the cut, while the convention
/// closes the cut from above.
pub fn log_principal(z: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("log of zero".into()));
    }
    let z = if z.im == 0.0 { c64(z.re, 0.0) } else { z };
    Ok(z.ln())
}

fn is_integer(x: f64) -> bool {
    x.fract() == 0.0 && x.is_finite()
}

/// True when `z` is an exactly representable integer on the real axis.
pub fn is_real_integer(z: Complex64) -> bool {
    z.im == 0.0 && is_integer(z.re)
}

/// z^n for integer n by repeated squaring (no branch cut involved).
pub fn pow_int(z: Complex64, n: i64) -> Complex64 {
    if n < 0 {
        return pow_int(z, -n).inv();
    }
    let mut acc = c64(1.0, 0.0);
    let mut base = z;
    let mut k = n as u64;
    while k > 0 {
        if k & 1 == 1 {
            acc *= base;
        }
        base *= base;
        k >>= 1;
    }
    acc
}

/// Principal power `z^mu = exp(mu log z)`.
///
/// Integer exponents are computed directly (valid on the cut); otherwise a
/// point on the cut `(-inf, 0]` is rejected.
pub fn pow_principal(z: Complex64, mu: Complex64) -> Result<Complex64> {
    if mu.im == 0.0 && is_integer(mu.re) {
        if z.re == 0.0 && z.im == 0.0 {
            return if mu.re > 0.0 {
                Ok(c64(0.0, 0.0))
            } else if mu.re == 0.0 {
                Ok(c64(1.0, 0.0))
            } else {
                Err(Error::Domain("0 to a negative power".into()))
            };
        }
        return Ok(pow_int(z, mu.re as i64));
    }
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::BranchCut);
    }
    Ok((mu * z.ln()).exp())
}

/// Unchecked principal power; used internally by prefactors whose branch is
/// chosen by the caller (the upper edge of the cut is taken on the cut).
pub fn zp(z: Complex64, mu: Complex64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        if mu.im == 0.0 && mu.re == 0.0 {
            return c64(1.0, 0.0);
        }
        return c64(0.0, 0.0);
    }
    let z = if z.im == 0.0 { c64(z.re, 0.0) } else { z };
    (mu * z.ln()).exp()
}

// Lanczos approximation, g = 7, 9 coefficients. Roughly 14 correct digits
// on Re z > 0, which leaves headroom over every 1e-10 tolerance used by the
// identity suites.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn gamma_lanczos_pos(z: Complex64) -> Complex64 {
    // valid for Re z >= 0.5
    let zm1 = z - 1.0;
    let mut x = c64(LANCZOS_P[0], 0.0);
    for (i, &p) in LANCZOS_P.iter().enumerate().skip(1) {
        x += p / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    let sqrt_two_pi = (2.0 * std::f64::consts::PI).sqrt();
    sqrt_two_pi * (( zm1 + 0.5) * t.ln()).exp() * (-t).exp() * x
}

/// Gamma function on the complex plane, poles rejected.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && is_integer(z.re) {
        return Err(Error::GammaPole(format!("{}", z.re)));
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        gamma_lanczos_pos(z)
    } else {
        // reflection formula
        let pi = std::f64::consts::PI;
        pi / ((pi * z).sin() * gamma_lanczos_pos(1.0 - z))
    }
}

/// Reciprocal Gamma function; entire, returns 0 at the poles of Gamma.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re <= 0.0 && is_integer(z.re) {
        return c64(0.0, 0.0);
    }
    gamma_unchecked(z).inv()
}

/// Pochhammer symbol (a)_n for integer n of either sign:
/// (a)_0 = 1, (a)_n = a(a+1)...(a+n-1), (a)_{-n} = 1/((a-1)...(a-n)).
pub fn pochhammer(a: Complex64, n: i64) -> Result<Complex64> {
    let mut acc = c64(1.0, 0.0);
    if n >= 0 {
        for k in 0..n {
            acc *= a + k as f64;
        }
    } else {
        for k in 1..=(-n) {
            let f = a - k as f64;
            if f.re == 0.0 && f.im == 0.0 {
                return Err(Error::Division);
            }
            acc /= f;
        }
    }
    Ok(acc)
}

/// Default cap on the number of summed terms.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Sum a power series sum_n c_n z^n with c_0 = 1 and the coefficient ratio
/// rule `ratio(n) = c_{n+1} / c_n`.
///
/// Converged status is granted once the magnitude of the term ratio
/// (including the factor z) has stayed below q < 1 for three consecutive
/// terms and the geometric tail bound |term| q/(1-q) is below `tol`.
pub fn sum_power_series(
    mut ratio: impl FnMut(usize) -> Complex64,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> SeriesResult {
    let mut term = c64(1.0, 0.0);
    let mut sum = term;
    if z.re == 0.0 && z.im == 0.0 {
        return SeriesResult {
            value: sum,
            err_estimate: 0.0,
            terms_used: 1,
            status: SeriesStatus::Converged,
        };
    }
    let mut recent: [f64; 3] = [f64::INFINITY; 3];
    for n in 0..max_terms {
        let r = ratio(n) * z;
        term *= r;
        sum += term;
        recent[n % 3] = r.norm();
        if term.re == 0.0 && term.im == 0.0 {
            // terminating series
            return SeriesResult {
                value: sum,
                err_estimate: 0.0,
                terms_used: n + 2,
                status: SeriesStatus::Converged,
            };
        }
        let q = recent[0].max(recent[1]).max(recent[2]);
        if q < 0.999 {
            let tail = term.norm() * q / (1.0 - q);
            if tail <= tol {
                return SeriesResult {
                    value: sum,
                    err_estimate: tail,
                    terms_used: n + 2,
                    status: SeriesStatus::Converged,
                };
            }
        }
    }
    SeriesResult {
        value: sum,
        err_estimate: f64::INFINITY,
        terms_used: max_terms + 1,
        status: SeriesStatus::Failed,
    }
}

/// Sum an asymptotic series sum_n c_n z^n (c_0 = 1, `ratio` as above) by
/// optimal truncation: stop in front of the smallest-magnitude term, which
/// also serves as the error estimate.
pub fn sum_asymptotic_series(
    mut ratio: impl FnMut(usize) -> Complex64,
    z: Complex64,
) -> SeriesResult {
    let mut term = c64(1.0, 0.0);
    let mut sum = term;
    if z.re == 0.0 && z.im == 0.0 {
        return SeriesResult {
            value: sum,
            err_estimate: 0.0,
            terms_used: 1,
            status: SeriesStatus::OptimallyTruncated,
        };
    }
    let mut used = 1usize;
    for n in 0..1000 {
        let next = term * ratio(n) * z;
        if next.norm() >= term.norm() || next.norm() == 0.0 {
            if next.re == 0.0 && next.im == 0.0 {
                // terminating (polynomial) case: the value is exact
                return SeriesResult {
                    value: sum,
                    err_estimate: 0.0,
                    terms_used: used,
                    status: SeriesStatus::OptimallyTruncated,
                };
            }
            return SeriesResult {
                value: sum,
                err_estimate: next.norm(),
                terms_used: used,
                status: SeriesStatus::OptimallyTruncated,
            };
        }
        term = next;
        sum += term;
        used += 1;
    }
    SeriesResult {
        value: sum,
        err_estimate: term.norm(),
        terms_used: used,
        status: SeriesStatus::OptimallyTruncated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn log_principal_basics() {
        assert_eq!(log_principal(c64(1.0, 0.0)).unwrap(), c64(0.0, 0.0));
        let l = log_principal(c64(-1.0, 0.0)).unwrap();
        assert!(close(l, c64(0.0, PI), 1e-15), "branch closes at +pi");
        let l = log_principal(c64(0.0, 1.0)).unwrap();
        assert!(close(l, c64(0.0, PI / 2.0), 1e-15));
        assert!(log_principal(c64(0.0, 0.0)).is_err());
        // lower edge of the cut still reports +pi
        let l = log_principal(c64(-2.0, -0.0)).unwrap();
        assert!((l.im - PI).abs() < 1e-15);
    }

    #[test]
    fn pow_principal_basics() {
        assert!(close(
            pow_principal(c64(4.0, 0.0), c64(0.5, 0.0)).unwrap(),
            c64(2.0, 0.0),
            1e-15
        ));
        assert_eq!(
            pow_principal(c64(3.0, 7.0), c64(0.0, 0.0)).unwrap(),
            c64(1.0, 0.0)
        );
        // e^{i pi} = -1 through exp(mu log z)
        let e = c64(std::f64::consts::E, 0.0);
        assert!(close(
            pow_principal(e, c64(0.0, PI)).unwrap(),
            c64(-1.0, 0.0),
            1e-14
        ));
        assert_eq!(
            pow_principal(c64(-2.0, 0.0), c64(0.5, 0.0)),
            Err(Error::BranchCut)
        );
        // integer exponent allowed on the cut
        assert!(close(
            pow_principal(c64(-2.0, 0.0), c64(3.0, 0.0)).unwrap(),
            c64(-8.0, 0.0),
            1e-15
        ));
    }

    #[test]
    fn gamma_small_integers_and_half() {
        assert!(close(gamma(c64(5.0, 0.0)).unwrap(), c64(24.0, 0.0), 1e-13));
        assert!(close(gamma(c64(1.0, 0.0)).unwrap(), c64(1.0, 0.0), 1e-13));
        assert!(close(
            gamma(c64(0.5, 0.0)).unwrap(),
            c64(PI.sqrt(), 0.0),
            1e-13
        ));
        assert!(matches!(gamma(c64(0.0, 0.0)), Err(Error::GammaPole(_))));
        assert!(matches!(gamma(c64(-3.0, 0.0)), Err(Error::GammaPole(_))));
    }

    #[test]
    fn gamma_recurrence_reflection_duplication() {
        let samples = [
            c64(0.3, 1.7),
            c64(2.2, -3.1),
            c64(4.9, 0.01),
            c64(0.11, -4.7),
            c64(1.5, 2.5),
        ];
        for &z in &samples {
            let g = gamma(z).unwrap();
            let g1 = gamma(z + 1.0).unwrap();
            assert!(close(g1, z * g, 1e-12), "recurrence at {z}");
            let refl = gamma(z).unwrap() * gamma(1.0 - z).unwrap() * (PI * z).sin() / PI;
            assert!(close(refl, c64(1.0, 0.0), 1e-10), "reflection at {z}");
            let dup = zp(c64(2.0, 0.0), 2.0 * z - 1.0) * gamma(z).unwrap()
                * gamma(z + 0.5).unwrap()
                / (PI.sqrt() * gamma(2.0 * z).unwrap());
            assert!(close(dup, c64(1.0, 0.0), 1e-10), "duplication at {z}");
        }
    }

    #[test]
    fn recip_gamma_zero_at_poles() {
        assert_eq!(recip_gamma(c64(-2.0, 0.0)), c64(0.0, 0.0));
        assert!(close(
            recip_gamma(c64(3.0, 0.0)),
            c64(0.5, 0.0),
            1e-13
        ));
    }

    #[test]
    fn pochhammer_cases() {
        assert_eq!(pochhammer(c64(2.5, 1.0), 0).unwrap(), c64(1.0, 0.0));
        assert!(close(
            pochhammer(c64(3.0, 0.0), 4).unwrap(),
            c64(360.0, 0.0),
            1e-14
        ));
        // (1/2)_2 * 2! = 4!/2^4
        let v = pochhammer(c64(0.5, 0.0), 2).unwrap() * 2.0;
        assert!(close(v, c64(1.5, 0.0), 1e-14));
        // (a)_n = (-1)^n (1-n-a)_n
        let a = c64(0.7, 0.3);
        for n in 0..6i64 {
            let lhs = pochhammer(a, n).unwrap();
            let rhs = pow_int(c64(-1.0, 0.0), n)
                * pochhammer(c64(1.0 - n as f64, 0.0) - a, n).unwrap();
            assert!(close(lhs, rhs, 1e-13));
        }
        // negative n
        let v = pochhammer(c64(3.0, 0.0), -2).unwrap();
        assert!(close(v, c64(0.5, 0.0), 1e-14)); // 1/((3-1)(3-2)) = 1/2
        assert_eq!(pochhammer(c64(1.0, 0.0), -1), Err(Error::Division));
        // splitting identity (a)_{m+n} = (a)_m (a+m)_n
        for (m, n) in [(2i64, 3i64), (0, 4), (3, -2), (-1, -2)] {
            let lhs = pochhammer(a, m + n).unwrap();
            let rhs = pochhammer(a, m).unwrap() * pochhammer(a + m as f64, n).unwrap();
            assert!(close(lhs, rhs, 1e-13), "m={m} n={n}");
        }
    }

    #[test]
    fn power_series_exp_and_geometric() {
        // exp: ratio c_{n+1}/c_n = 1/(n+1)
        let r = sum_power_series(|n| c64(1.0 / (n as f64 + 1.0), 0.0), c64(1.0, 0.0), 1e-12, 100);
        assert!(r.converged());
        assert!(close(r.value, c64(std::f64::consts::E, 0.0), 1e-12));
        // geometric at |z| <= 0.9
        for &x in &[0.5, -0.9, 0.9] {
            let r = sum_power_series(|_| c64(1.0, 0.0), c64(x, 0.1 * x), 1e-12, 2000);
            assert!(r.converged());
            let z = c64(x, 0.1 * x);
            assert!(close(r.value, (c64(1.0, 0.0) - z).inv(), 1e-11));
        }
        // z = 0
        let r = sum_power_series(|_| c64(7.0, 0.0), c64(0.0, 0.0), 1e-12, 10);
        assert_eq!(r.value, c64(1.0, 0.0));
        assert_eq!(r.terms_used, 1);
        // divergent: 2F1(1,1;1;z) = geometric at z = 2
        let r = sum_power_series(|_| c64(1.0, 0.0), c64(2.0, 0.0), 1e-12, 500);
        assert_eq!(r.status, SeriesStatus::Failed);
    }

    #[test]
    fn asymptotic_series_basics() {
        let r = sum_asymptotic_series(|_| c64(1.0, 0.0), c64(0.0, 0.0));
        assert_eq!(r.value, c64(1.0, 0.0));
        assert_eq!(r.status, SeriesStatus::OptimallyTruncated);
        // 2F0-type ratio at large z: error estimate must be large
        let a = c64(0.5, 0.0);
        let b = c64(0.5, 0.0);
        let ratio = move |n: usize| (a + n as f64) * (b + n as f64) / (n as f64 + 1.0);
        let r = sum_asymptotic_series(ratio, c64(1.0, 0.0));
        assert!(r.err_estimate >= 0.2, "no accuracy pretended at z=1");
        let r = sum_asymptotic_series(ratio, c64(0.01, 0.0));
        assert!(r.err_estimate < 1e-20);
    }
}
