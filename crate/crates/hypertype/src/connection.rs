//! Connection coefficients: decompositions of the standard solutions in a
//! distinguished two-dimensional basis, plus the integer-parameter degenerate
//! series and their generating functions.
//!
//! For the Gauss, Kummer and Bessel-type families the basis consists of the
//! two solutions with power behavior at the origin (`At0Index0` and
//! `At0IndexAlpha`, bold normalization); for the reflection-symmetric families
//! it consists of the even and odd solutions. The coefficients are closed
//! Gamma/sine expressions.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::numeric::{
    c64, pochhammer, pow_principal, recip_gamma, zp, SeriesResult, SeriesStatus, DEFAULT_MAX_TERMS,
};
use crate::operators::HTOperator;
use crate::params::{Family, FamilyParams};
use crate::recurrence::{plain_jet, two_f0_jet};
use crate::series::{standard_solution, Normalization, SolutionKind, DEFAULT_TOL};
use crate::{Error, Result};

/// Decomposition `lhs = c1 * basis1 + c2 * basis2` of a standard solution.
///
/// `basis1`/`basis2` are the origin solutions (bold) for the confluent chain
/// and the even/odd pair for Gegenbauer and Hermite. For the solutions tied
/// to the point at infinity the second basis vector carries the prefactor
/// `(-z)^{-alpha}` instead of `z^{-alpha}` (2F1 `AtInf*`, 1F1 `AtMinusInf`).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ConnectionCoefficients {
    pub family: Family,
    pub lhs: SolutionKind,
    pub c1: Complex64,
    pub c2: Complex64,
}

fn sin_pi(a: Complex64) -> Complex64 {
    (PI * a).sin()
}

/// `pi / sin(-pi alpha)` and `pi / sin(pi alpha)`, rejecting the degenerate
/// integer cases where the decomposition has a pole.
fn reflection_pair(alpha: Complex64) -> Result<(Complex64, Complex64)> {
    let s = sin_pi(alpha);
    if s.norm() < 1e-6 {
        return Err(Error::DegenerateParameters(format!(
            "sin(pi alpha) = {s} vanishes: the origin basis degenerates"
        )));
    }
    Ok((-c64(PI, 0.0) / s, c64(PI, 0.0) / s))
}

/// Closed-form connection coefficients of the standard solution `lhs`.
pub fn connection_coeffs(lhs: SolutionKind, params: &FamilyParams) -> Result<ConnectionCoefficients> {
    let rg = recip_gamma;
    let sq = c64(PI.sqrt(), 0.0);
    let (c1, c2) = match *params {
        FamilyParams::TwoF1 { alpha, beta, mu } => {
            let (m1, p1) = reflection_pair(alpha)?;
            // Gamma arguments of the two coefficients for each solution.
            let (x1, y1, x2, y2) = match lhs {
                SolutionKind::At1Index0 => (
                    (1.0 - alpha + beta - mu) / 2.0,
                    (1.0 - alpha + beta + mu) / 2.0,
                    (1.0 + alpha + beta - mu) / 2.0,
                    (1.0 + alpha + beta + mu) / 2.0,
                ),
                SolutionKind::At1IndexBeta => (
                    (1.0 - alpha - beta + mu) / 2.0,
                    (1.0 - alpha - beta - mu) / 2.0,
                    (1.0 + alpha - beta + mu) / 2.0,
                    (1.0 + alpha - beta - mu) / 2.0,
                ),
                SolutionKind::AtInfA => (
                    (1.0 - alpha - beta - mu) / 2.0,
                    (1.0 - alpha + beta - mu) / 2.0,
                    (1.0 + alpha + beta - mu) / 2.0,
                    (1.0 + alpha - beta - mu) / 2.0,
                ),
                SolutionKind::AtInfB => (
                    (1.0 - alpha - beta + mu) / 2.0,
                    (1.0 - alpha + beta + mu) / 2.0,
                    (1.0 + alpha + beta + mu) / 2.0,
                    (1.0 + alpha - beta + mu) / 2.0,
                ),
                _ => return no_formula(params.family(), lhs),
            };
            (m1 * rg(x1) * rg(y1), p1 * rg(x2) * rg(y2))
        }
        FamilyParams::OneF1 { theta, alpha } => {
            let (m1, p1) = reflection_pair(alpha)?;
            match lhs {
                SolutionKind::AtPlusInf => (
                    m1 * rg((1.0 + theta - alpha) / 2.0),
                    p1 * rg((1.0 + theta + alpha) / 2.0),
                ),
                SolutionKind::AtMinusInf => (
                    m1 * rg((1.0 - theta - alpha) / 2.0),
                    p1 * rg((1.0 - theta + alpha) / 2.0),
                ),
                _ => return no_formula(params.family(), lhs),
            }
        }
        FamilyParams::ZeroF1 { alpha } => {
            let (m1, p1) = reflection_pair(alpha)?;
            match lhs {
                SolutionKind::TildeAtInf => (m1 / c64(PI.sqrt(), 0.0), p1 / c64(PI.sqrt(), 0.0)),
                _ => return no_formula(params.family(), lhs),
            }
        }
        FamilyParams::Gegenbauer { alpha, lambda } => {
            let a2 = alpha / 2.0;
            let l2 = lambda / 2.0;
            match lhs {
                SolutionKind::At1Index0 => (
                    sq * rg(0.75 + a2 - l2) * rg(0.75 + a2 + l2),
                    -sq * rg(0.25 + a2 - l2) * rg(0.25 + a2 + l2),
                ),
                SolutionKind::At1IndexAlpha => (
                    sq * rg(0.75 - a2 + l2) * rg(0.75 - a2 - l2),
                    -sq * rg(0.25 - a2 + l2) * rg(0.25 - a2 - l2),
                ),
                SolutionKind::AtInfA => (
                    sq * rg(0.75 - a2 - l2) * rg(0.75 + a2 - l2),
                    c64(0.0, PI.sqrt()) * rg(0.25 - a2 - l2) * rg(0.25 + a2 - l2),
                ),
                SolutionKind::AtInfB => (
                    sq * rg(0.75 - a2 + l2) * rg(0.75 + a2 + l2),
                    c64(0.0, PI.sqrt()) * rg(0.25 - a2 + l2) * rg(0.25 + a2 + l2),
                ),
                _ => return no_formula(params.family(), lhs),
            }
        }
        FamilyParams::Hermite { lambda } => match lhs {
            SolutionKind::AtPlusInf => (
                sq * rg((2.0 * lambda + 3.0) / 4.0),
                -sq * rg((2.0 * lambda + 1.0) / 4.0),
            ),
            SolutionKind::AtPlusIInf => (
                sq * rg((3.0 - 2.0 * lambda) / 4.0),
                c64(0.0, PI.sqrt()) * rg((1.0 - 2.0 * lambda) / 4.0),
            ),
            _ => return no_formula(params.family(), lhs),
        },
        FamilyParams::TwoF0 { .. } => {
            return Err(Error::Domain(
                "the 2F0 equation has no distinguished origin basis".into(),
            ))
        }
    };
    Ok(ConnectionCoefficients {
        family: params.family(),
        lhs,
        c1,
        c2,
    })
}

fn no_formula(family: Family, lhs: SolutionKind) -> Result<ConnectionCoefficients> {
    Err(Error::InvalidOperator(format!(
        "no connection formula for {:?} of {}",
        lhs,
        family.name()
    )))
}

// ---------------------------------------------------------------------------
// Numerical verification
// ---------------------------------------------------------------------------

/// One fourth-order Runge-Kutta sweep of `sigma f'' + tau f' + eta f = 0`
/// along the straight segment from `z0` to `z1`.
fn ode_jet(
    op: &HTOperator,
    z0: Complex64,
    jet: (Complex64, Complex64),
    z1: Complex64,
    steps: usize,
) -> (Complex64, Complex64) {
    let h = (z1 - z0) / steps as f64;
    let rhs = |z: Complex64, f: Complex64, fp: Complex64| -> (Complex64, Complex64) {
        (fp, -(op.tau.eval(z) * fp + op.eta * f) / op.sigma.eval(z))
    };
    let (mut f, mut fp) = jet;
    let mut z = z0;
    for _ in 0..steps {
        let (k1f, k1p) = rhs(z, f, fp);
        let (k2f, k2p) = rhs(z + h / 2.0, f + k1f * h / 2.0, fp + k1p * h / 2.0);
        let (k3f, k3p) = rhs(z + h / 2.0, f + k2f * h / 2.0, fp + k2p * h / 2.0);
        let (k4f, k4p) = rhs(z + h, f + k3f * h, fp + k3p * h);
        f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        fp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        z += h;
    }
    (f, fp)
}

/// Value of an asymptotic-normalized solution at moderate `z`, obtained by
/// integrating inward along the ray through `z` from an anchor where the
/// optimally truncated asymptotic series is accurate. `anchor_jet` must
/// return the jet of the solution at the anchor point.
fn continue_inward(
    params: &FamilyParams,
    z: Complex64,
    anchor_abs: f64,
    step: f64,
    anchor_jet: impl Fn(Complex64) -> Result<(Complex64, Complex64)>,
) -> Result<Complex64> {
    let z0 = z / z.norm() * anchor_abs;
    let jet = anchor_jet(z0)?;
    if z.norm() >= anchor_abs {
        return Ok(jet.0);
    }
    let op = HTOperator::from_params(params);
    let steps = ((z0 - z).norm() / step).ceil() as usize + 1;
    Ok(ode_jet(&op, z0, jet, z, steps).0)
}

fn bold_hyp1f1(theta: Complex64, alpha: Complex64, w: Complex64) -> Result<Complex64> {
    let p = FamilyParams::OneF1 { theta, alpha };
    let (f, _) = plain_jet(&p, w)?;
    Ok(f * recip_gamma(alpha + 1.0))
}

/// Verify a connection formula at a point: the absolute defect
/// `|lhs(z) - c1 basis1(z) - c2 basis2(z)|`.
///
/// The left-hand solution and the basis are evaluated independently: by their
/// defining series where those converge, and otherwise by integrating the
/// differential equation from an asymptotic anchor (see `continue_inward`).
/// The admissible `z` region is documented per family below; outside it the
/// function returns `OutOfDomain`.
pub fn verify_connection(
    lhs: SolutionKind,
    params: &FamilyParams,
    z: Complex64,
    tol: f64,
) -> Result<f64> {
    let cc = connection_coeffs(lhs, params)?;
    let _ = tol;
    let (lv, b1, b2) = match *params {
        // Admissible: the lens |z| < 0.8, |1-z| < 0.8 off the real axis for
        // the solutions at 1; the annulus 1.25 < |z| < 2.4 with
        // 0.35 < |arg z| < pi - 0.35 for the solutions at infinity.
        FamilyParams::TwoF1 { alpha, .. } => match lhs {
            SolutionKind::At1Index0 | SolutionKind::At1IndexBeta => {
                if z.norm() > 0.8 || (1.0 - z).norm() > 0.8 || z.im.abs() < 0.01 {
                    return Err(Error::OutOfDomain(format!(
                        "z = {z} is outside the two-disk lens"
                    )));
                }
                let lv = standard_solution(params, lhs, Normalization::Bold, z)?.value;
                let b1 = standard_solution(params, SolutionKind::At0Index0, Normalization::Bold, z)?
                    .value;
                let b2 =
                    standard_solution(params, SolutionKind::At0IndexAlpha, Normalization::Bold, z)?
                        .value;
                (lv, b1, b2)
            }
            SolutionKind::AtInfA | SolutionKind::AtInfB => {
                let arg = z.arg().abs();
                if z.norm() < 1.25 || z.norm() > 2.4 || !(0.35..=PI - 0.35).contains(&arg) {
                    return Err(Error::OutOfDomain(format!(
                        "z = {z} is outside the admissible annulus sector"
                    )));
                }
                let lv = standard_solution(params, lhs, Normalization::Bold, z)?.value;
                // The origin basis does not converge here; carry it outward
                // along the ray from an interior anchor.
                let op = HTOperator::from_params(params);
                let za = z / z.norm() * 0.45;
                let steps = ((z - za).norm() / 0.001).ceil() as usize;
                let rga = recip_gamma(alpha + 1.0);
                let (f, fp) = plain_jet(params, za)?;
                let b1 = ode_jet(&op, za, (f * rga, fp * rga), z, steps).0;
                let flip = params_with(params, &[-1.0, 1.0, -1.0]);
                let (g, gp) = plain_jet(&flip, za)?;
                let rgb = recip_gamma(1.0 - alpha);
                let pre = zp(-za, -alpha);
                let jet2 = (
                    pre * g * rgb,
                    pre * (gp - alpha / za * g) * rgb,
                );
                let b2 = ode_jet(&op, za, jet2, z, steps).0;
                (lv, b1, b2)
            }
            _ => unreachable!(),
        },
        // Admissible: 1 <= |z| <= 20 in the sector |arg z| < 1 (AtPlusInf)
        // or |arg(-z)| < 1 (AtMinusInf).
        FamilyParams::OneF1 { theta, alpha } => {
            let a = (1.0 + theta + alpha) / 2.0;
            let lv = match lhs {
                SolutionKind::AtPlusInf => {
                    if z.arg().abs() > 1.0 || !(1.0..=20.0).contains(&z.norm()) {
                        return Err(Error::OutOfDomain(format!("z = {z} outside the sector")));
                    }
                    continue_inward(params, z, 32.0, 0.002, |z0| {
                        let (g, gw) = two_f0_jet(theta, alpha, -1.0 / z0);
                        let pre = zp(z0, -a);
                        Ok((pre * g, pre * (gw / (z0 * z0) - a / z0 * g)))
                    })?
                }
                SolutionKind::AtMinusInf => {
                    if (-z).arg().abs() > 1.0 || !(1.0..=20.0).contains(&z.norm()) {
                        return Err(Error::OutOfDomain(format!("z = {z} outside the sector")));
                    }
                    let e = (-1.0 + theta - alpha) / 2.0;
                    continue_inward(params, z, 32.0, 0.002, |z0| {
                        let (g, gw) = two_f0_jet(-theta, alpha, 1.0 / z0);
                        let pre = z0.exp() * zp(-z0, e);
                        Ok((pre * g, pre * (g + e / z0 * g - gw / (z0 * z0))))
                    })?
                }
                _ => unreachable!(),
            };
            let b1 = bold_hyp1f1(theta, alpha, z)?;
            let b2 = match lhs {
                SolutionKind::AtPlusInf => zp(z, -alpha) * bold_hyp1f1(theta, -alpha, z)?,
                _ => zp(-z, -alpha) * bold_hyp1f1(theta, -alpha, z)?,
            };
            (lv, b1, b2)
        }
        // Admissible: 0.5 <= |z| <= 300, |arg z| < 2.6.
        FamilyParams::ZeroF1 { alpha } => {
            if z.arg().abs() > 2.6 || !(0.5..=300.0).contains(&z.norm()) {
                return Err(Error::OutOfDomain(format!("z = {z} outside the cut annulus")));
            }
            let lv = continue_inward(params, z, 70.0, 0.002, |z0| Ok(tilde_jet(alpha, z0)))?;
            let b1 = standard_solution(params, SolutionKind::At0Index0, Normalization::Bold, z)?
                .value;
            let b2 =
                standard_solution(params, SolutionKind::At0IndexAlpha, Normalization::Bold, z)?
                    .value;
            (lv, b1, b2)
        }
        // Admissible: |z| < 0.85; the Whipple-type solutions additionally
        // require Re(z) Im(z) > 0 (the principal branches of sqrt(z^2-1) and
        // the power prefactor flip the odd coefficient in the other quadrants).
        FamilyParams::Gegenbauer { alpha, lambda } => {
            if z.norm() > 0.85 {
                return Err(Error::OutOfDomain(format!("|z| = {} > 0.85", z.norm())));
            }
            let lv = match lhs {
                SolutionKind::At1Index0 | SolutionKind::At1IndexAlpha => {
                    standard_solution(params, lhs, Normalization::Bold, z)?.value
                }
                SolutionKind::AtInfA | SolutionKind::AtInfB => {
                    if z.re * z.im <= 0.0 {
                        return Err(Error::OutOfDomain(format!(
                            "z = {z}: Whipple-type decomposition needs Re(z) Im(z) > 0"
                        )));
                    }
                    let w = z / (z * z - 1.0).sqrt();
                    let (sa, sl, expo) = if lhs == SolutionKind::AtInfA {
                        (-lambda, -alpha, -0.25 - alpha / 2.0 + lambda / 2.0)
                    } else {
                        (lambda, alpha, -0.25 - alpha / 2.0 - lambda / 2.0)
                    };
                    let p = FamilyParams::Gegenbauer { alpha: sa, lambda: sl };
                    let (f, _) = plain_jet(&p, w)?;
                    pow_principal(1.0 - z * z, expo)? * f * recip_gamma(sa + 1.0)
                }
                _ => unreachable!(),
            };
            let b1 = standard_solution(params, SolutionKind::Even, Normalization::Plain, z)?.value;
            let b2 = standard_solution(params, SolutionKind::Odd, Normalization::Plain, z)?.value;
            (lv, b1, b2)
        }
        // Admissible: 0.7 <= |z| <= 3 with |arg z| < 0.3 (AtPlusInf) or
        // pi/4 + 0.2 < arg z < 3pi/4 - 0.2 (AtPlusIInf).
        FamilyParams::Hermite { lambda } => {
            let lv = match lhs {
                SolutionKind::AtPlusInf => {
                    if z.arg().abs() > 0.3 || !(0.7..=3.0).contains(&z.norm()) {
                        return Err(Error::OutOfDomain(format!("z = {z} outside the sector")));
                    }
                    continue_inward(params, z, 6.5, 0.001, |z0| plain_jet(params, z0))?
                }
                SolutionKind::AtPlusIInf => {
                    if !(PI / 4.0 + 0.2..=3.0 * PI / 4.0 - 0.2).contains(&z.arg())
                        || !(0.7..=3.0).contains(&z.norm())
                    {
                        return Err(Error::OutOfDomain(format!("z = {z} outside the sector")));
                    }
                    continue_inward(params, z, 6.5, 0.001, |z0| {
                        let v = c64(0.0, -1.0) * z0;
                        let a = -lambda + 0.5;
                        let (g, gw) = two_f0_jet(-lambda, c64(-0.5, 0.0), -1.0 / (v * v));
                        let e = (z0 * z0).exp();
                        let pre = e * zp(v, -a);
                        let dv = pre * (gw * 2.0 / (v * v * v) - a / v * g);
                        Ok((pre * g, 2.0 * z0 * pre * g + c64(0.0, -1.0) * dv))
                    })?
                }
                _ => unreachable!(),
            };
            let b1 = standard_solution(params, SolutionKind::Even, Normalization::Plain, z)?.value;
            let b2 = standard_solution(params, SolutionKind::Odd, Normalization::Plain, z)?.value;
            (lv, b1, b2)
        }
        FamilyParams::TwoF0 { .. } => unreachable!(),
    };
    Ok((lv - cc.c1 * b1 - cc.c2 * b2).norm())
}

fn params_with(params: &FamilyParams, signs: &[f64]) -> FamilyParams {
    let lie: Vec<Complex64> = params
        .lie()
        .iter()
        .zip(signs)
        .map(|(p, s)| p * *s)
        .collect();
    FamilyParams::from_lie(params.family(), &lie)
}

/// Jet of the recessive Bessel-type solution
/// `e^{-2 sqrt z} z^{-alpha/2 - 1/4} F(1/2+alpha, 1/2-alpha; -; -1/(4 sqrt z))`.
fn tilde_jet(alpha: Complex64, z: Complex64) -> (Complex64, Complex64) {
    let s = z.sqrt();
    let (g, gw) = two_f0_jet(c64(0.0, 0.0), 2.0 * alpha, -1.0 / (4.0 * s));
    let pre = (-2.0 * s).exp() * zp(z, -alpha / 2.0 - 0.25);
    let f = pre * g;
    let fp = f * (-1.0 / s) + f * (-alpha / 2.0 - 0.25) / z + pre * gw / (8.0 * s * s * s);
    (f, fp)
}

/// Dominant part of the continuation of the tilde solution once around the
/// origin: `F~_alpha(e^{-+ 2 pi i} z) = e^{+- i pi (alpha + 1/2)}
/// e^{2 sqrt z} z^{-alpha/2-1/4} F(1/2+alpha,1/2-alpha; -; 1/(4 sqrt z))`
/// up to a recessive admixture that is negligible for large `|z|`.
pub fn tilde_continued(alpha: Complex64, z: Complex64, turns: i32) -> Result<Complex64> {
    if turns == 0 {
        return Ok(tilde_jet(alpha, z).0);
    }
    if turns.abs() != 1 {
        return Err(Error::OutOfDomain("only single turns are supported".into()));
    }
    let s = z.sqrt();
    let (g, _) = two_f0_jet(c64(0.0, 0.0), 2.0 * alpha, 1.0 / (4.0 * s));
    let phase = (c64(0.0, -PI * turns as f64) * (alpha + 0.5)).exp();
    Ok(phase * (2.0 * s).exp() * zp(z, -alpha / 2.0 - 0.25) * g)
}

// ---------------------------------------------------------------------------
// Degenerate (integer) parameters
// ---------------------------------------------------------------------------

/// The bold series with an integer bottom parameter `1 + m`:
/// `sum_{n >= max(0,-m)} (a_1)_n ... (a_p)_n / (n! (m+n)!) z^n`.
fn degenerate_series(upper: &[Complex64], m: i64, z: Complex64, tol: f64) -> (Complex64, usize) {
    let n0 = (-m).max(0);
    // leading term: prod (a)_{n0} z^{n0} / (n0! (m+n0)!)
    let mut term = c64(1.0, 0.0);
    for a in upper {
        term *= pochhammer(*a, n0).unwrap_or(c64(0.0, 0.0));
    }
    for k in 1..=n0 {
        term *= z / k as f64;
    }
    for k in 1..=(m + n0) {
        term /= k as f64;
    }
    let mut sum = term;
    let mut n = n0;
    let mut used = 1;
    while used < DEFAULT_MAX_TERMS {
        let mut next = term * z / ((n + 1) as f64 * (m + n + 1) as f64);
        for a in upper {
            next *= a + n as f64;
        }
        sum += next;
        term = next;
        n += 1;
        used += 1;
        if term.norm() <= tol * sum.norm().max(1e-280) {
            break;
        }
    }
    (sum, used)
}

/// Evaluate the integer-degenerate bold function and check the proportionality
/// between the two (now linearly dependent) origin solutions:
/// `prod_j (a_j - m)_m  *  F(a; 1+m; z)  =  z^{-m} F(a - m; 1-m; z)`
/// (with the obvious confluent specializations). The returned value is the
/// left series; the error estimate is the defect of the identity.
pub fn degenerate_value(
    family: Family,
    upper: &[Complex64],
    m: i64,
    z: Complex64,
    tol: f64,
) -> Result<SeriesResult> {
    let expected = match family {
        Family::TwoF1 => 2,
        Family::OneF1 => 1,
        Family::ZeroF1 => 0,
        _ => {
            return Err(Error::Domain(format!(
                "{} has no integer-degenerate origin case",
                family.name()
            )))
        }
    };
    if upper.len() != expected {
        return Err(Error::Domain(format!(
            "{} takes {expected} upper parameters, got {}",
            family.name(),
            upper.len()
        )));
    }
    let (value, used) = degenerate_series(upper, m, z, tol);
    if z.norm() == 0.0 {
        return Ok(SeriesResult {
            value,
            err_estimate: 0.0,
            terms_used: used,
            status: SeriesStatus::Converged,
        });
    }
    let mut factor = c64(1.0, 0.0);
    let shifted: Vec<Complex64> = upper.iter().map(|a| a - m as f64).collect();
    for a in &shifted {
        factor *= pochhammer(*a, m)?;
    }
    let (mirror, _) = degenerate_series(&shifted, -m, z, tol);
    let defect = (factor * value - z.powi(-m as i32) * mirror).norm();
    Ok(SeriesResult {
        value,
        err_estimate: defect,
        terms_used: used,
        status: if defect <= tol * value.norm().max(1.0) {
            SeriesStatus::Converged
        } else {
            SeriesStatus::Failed
        },
    })
}

/// Defect of the generating function of the integer-degenerate functions,
/// with the bilateral sum truncated symmetrically:
///
/// * 2F1: `(1-t)^{-a} (1-z/t)^{-b} - sum_m t^m (a)_m F(a+m, b; 1+m; z)`
///   (requires `|z| < |t| < 1`),
/// * 1F1: `e^t (1-z/t)^{-a} - sum_m t^m F(a; 1+m; z)` (requires `|z| < |t|`),
/// * 0F1: `e^{t + z/t} - sum_m t^m F(1+m; z)` (requires `t != 0`).
pub fn degenerate_generating_series(
    family: Family,
    upper: &[Complex64],
    t: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    if t.norm() == 0.0 {
        return Err(Error::OutOfDomain("t = 0".into()));
    }
    // The bilateral sum converges geometrically: like t^m for m -> +inf
    // (2F1; faster for the confluent cases) and like (z/t)^{-m} for
    // m -> -inf. Truncate where the slower ratio reaches ~1e-14.
    let mut q: f64 = (z / t).norm().max(0.2);
    if family == Family::TwoF1 {
        q = q.max(t.norm());
    }
    let m_cut = (-32.0 / q.ln()).ceil() as i64;
    let m_cut = m_cut.clamp(40, 400);
    let lhs = match family {
        Family::TwoF1 => {
            let (a, b) = (upper[0], upper[1]);
            if z.norm() >= t.norm() || t.norm() >= 1.0 {
                return Err(Error::OutOfDomain(format!(
                    "need |z| < |t| < 1, got |z| = {}, |t| = {}",
                    z.norm(),
                    t.norm()
                )));
            }
            pow_principal(1.0 - t, -a)? * pow_principal(1.0 - z / t, -b)?
        }
        Family::OneF1 => {
            let a = upper[0];
            if z.norm() >= t.norm() {
                return Err(Error::OutOfDomain("need |z| < |t|".into()));
            }
            t.exp() * pow_principal(1.0 - z / t, -a)?
        }
        Family::ZeroF1 => (t + z / t).exp(),
        _ => {
            return Err(Error::Domain(format!(
                "{} has no integer-degenerate generating function",
                family.name()
            )))
        }
    };
    let mut rhs = c64(0.0, 0.0);
    for m in -m_cut..=m_cut {
        let coeff = match family {
            Family::TwoF1 => {
                let (a, b) = (upper[0], upper[1]);
                pochhammer(a, m)? * degenerate_series(&[a + m as f64, b], m, z, DEFAULT_TOL).0
            }
            Family::OneF1 => degenerate_series(&[upper[0]], m, z, DEFAULT_TOL).0,
            Family::ZeroF1 => degenerate_series(&[], m, z, DEFAULT_TOL).0,
            _ => unreachable!(),
        };
        rhs += t.powi(m as i32) * coeff;
    }
    Ok(lhs - rhs)
}
