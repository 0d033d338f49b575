//! Hypergeometric-type operators: classification, canonical data, balanced
//! and Schrödinger forms, indicial equations, and the factorization /
//! commutation catalogs of the five operator families.
//!
//! An operator is `sigma(z) d² + tau(z) d + eta` with `deg sigma <= 2`,
//! `deg tau <= 1`, constant `eta`.  Every such operator reduces, by an
//! affine substitution and division by a constant, to one of nine templates;
//! six of them carry the function families of this crate, the remaining
//! three (Euler-type and constant-coefficient) are elementary.

use num_complex::Complex64;

use crate::numeric::c64;
use crate::params::{Family, FamilyParams};
use crate::poly::{FirstOrder, Poly, SecondOrder, ThirdOrder};
use crate::{Error, Result};

/// `sigma(z) d² + tau(z) d + eta`.
#[derive(Debug, Clone, PartialEq)]
pub struct HTOperator {
    pub sigma: Poly,
    pub tau: Poly,
    pub eta: Complex64,
}

impl HTOperator {
    pub fn new(sigma: Poly, tau: Poly, eta: Complex64) -> Result<Self> {
        if sigma.is_zero() {
            return Err(Error::InvalidOperator("sigma is identically zero".into()));
        }
        if sigma.degree().unwrap_or(0) > 2 {
            return Err(Error::InvalidOperator("deg sigma > 2".into()));
        }
        if tau.degree().unwrap_or(0) > 1 {
            return Err(Error::InvalidOperator("deg tau > 1".into()));
        }
        Ok(HTOperator { sigma, tau, eta })
    }

    /// The family operator in Lie-algebraic parameters.
    pub fn from_params(p: &FamilyParams) -> HTOperator {
        let one = c64(1.0, 0.0);
        match *p {
            FamilyParams::TwoF1 { alpha, beta, mu } => HTOperator {
                // z(1-z) d² + ((1+alpha)(1-z) - (1+beta)z) d + (mu² - (alpha+beta+1)²)/4
                sigma: Poly::new(&[c64(0.0, 0.0), one, -one]),
                tau: Poly::new(&[one + alpha, -(alpha + beta + 2.0)]),
                eta: (mu * mu - (alpha + beta + one) * (alpha + beta + one)) / 4.0,
            },
            FamilyParams::OneF1 { theta, alpha } => HTOperator {
                // z d² + (1+alpha-z) d - (1+theta+alpha)/2
                sigma: Poly::new(&[c64(0.0, 0.0), one]),
                tau: Poly::new(&[one + alpha, -one]),
                eta: -(one + theta + alpha) / 2.0,
            },
            FamilyParams::TwoF0 { theta, alpha } => HTOperator {
                // z² d² + (-1 + (2+theta)z) d + ((1+theta)² - alpha²)/4
                sigma: Poly::new(&[c64(0.0, 0.0), c64(0.0, 0.0), one]),
                tau: Poly::new(&[-one, theta + 2.0]),
                eta: ((one + theta) * (one + theta) - alpha * alpha) / 4.0,
            },
            FamilyParams::ZeroF1 { alpha } => HTOperator {
                // z d² + (alpha+1) d - 1
                sigma: Poly::new(&[c64(0.0, 0.0), one]),
                tau: Poly::new(&[alpha + 1.0]),
                eta: -one,
            },
            FamilyParams::Gegenbauer { alpha, lambda } => HTOperator {
                // (1-z²) d² - 2(1+alpha)z d + lambda² - (alpha+1/2)²
                sigma: Poly::new(&[one, c64(0.0, 0.0), -one]),
                tau: Poly::new(&[c64(0.0, 0.0), -2.0 * (one + alpha)]),
                eta: lambda * lambda - (alpha + 0.5) * (alpha + 0.5),
            },
            FamilyParams::Hermite { lambda } => HTOperator {
                // d² - 2z d - (2 lambda + 1)
                sigma: Poly::new(&[one]),
                tau: Poly::new(&[c64(0.0, 0.0), c64(-2.0, 0.0)]),
                eta: -(2.0 * lambda + one),
            },
        }
    }

    pub fn as_second_order(&self) -> SecondOrder {
        SecondOrder {
            s: self.sigma.clone(),
            t: self.tau.clone(),
            u: Poly::constant(self.eta),
        }
    }

    /// Apply to a jet (f, f', f'') at z.
    pub fn apply_jet(&self, z: Complex64, f: Complex64, fp: Complex64, fpp: Complex64) -> Complex64 {
        self.sigma.eval(z) * fpp + self.tau.eval(z) * fp + self.eta * f
    }
}

/// The nine template classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ClassTag {
    Hypergeometric2F1,
    TwoF0,
    Confluent1F1,
    ZeroF1,
    Gegenbauer,
    Hermite,
    Euler2,
    EulerDeriv,
    ConstCoeff,
}

/// Parameters attached to a classified operator.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassParams {
    Family(FamilyParams),
    /// Coefficients of the elementary template in its documented order:
    /// Euler2 (a, b) for z²d²+bz d+a; EulerDeriv (c) for z d²+c d;
    /// ConstCoeff (c, a) for d²+c d+a.
    Elementary(Vec<Complex64>),
}

/// Result of `classify`: input = constant · Template(w) under z = scale·w + shift.
#[derive(Debug, Clone, PartialEq)]
pub struct EquationClass {
    pub tag: ClassTag,
    /// Affine map from the template coordinate w to the input coordinate z.
    pub scale: Complex64,
    pub shift: Complex64,
    /// Overall constant multiplying the template operator.
    pub constant: Complex64,
    pub params: ClassParams,
}

impl EquationClass {
    /// Rebuild the operator in the input coordinate from the template;
    /// inverse of `classify`, used for round-trip checks.
    pub fn reconstruct(&self) -> HTOperator {
        let t = self.template();
        // Template acts in w with z = scale·w + shift, i.e. w = (z - shift)/scale.
        // sigma_z(z) = constant · scale² · sigma_w((z-shift)/scale), etc.
        let inv = 1.0 / self.scale;
        let w_of_z_scale = inv;
        let w_of_z_shift = -self.shift / self.scale;
        let sub = |p: &Poly| p.compose_affine(w_of_z_scale, w_of_z_shift);
        HTOperator {
            sigma: sub(&t.sigma).scale(self.constant * self.scale * self.scale),
            tau: sub(&t.tau).scale(self.constant * self.scale),
            eta: self.constant * t.eta,
        }
    }

    fn template(&self) -> HTOperator {
        match (&self.params, self.tag) {
            (ClassParams::Family(p), _) => HTOperator::from_params(p),
            (ClassParams::Elementary(v), ClassTag::Euler2) => HTOperator {
                sigma: Poly::new(&[c64(0.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0)]),
                tau: Poly::new(&[c64(0.0, 0.0), v[1]]),
                eta: v[0],
            },
            (ClassParams::Elementary(v), ClassTag::EulerDeriv) => HTOperator {
                sigma: Poly::new(&[c64(0.0, 0.0), c64(1.0, 0.0)]),
                tau: Poly::constant(v[0]),
                eta: c64(0.0, 0.0),
            },
            (ClassParams::Elementary(v), ClassTag::ConstCoeff) => HTOperator {
                sigma: Poly::new(&[c64(1.0, 0.0)]),
                tau: Poly::constant(v[0]),
                eta: v[1],
            },
            _ => unreachable!("elementary params paired with family tag"),
        }
    }
}

fn near_zero(x: Complex64, scale: f64) -> bool {
    x.norm() <= 1e-9 * scale.max(1.0)
}

/// Classify into one of the nine classes, producing the affine normalization.
pub fn classify(op: &HTOperator) -> Result<EquationClass> {
    if op.sigma.is_zero() {
        return Err(Error::InvalidOperator("sigma is identically zero".into()));
    }
    let scale_ref = op.sigma.max_coeff_norm().max(op.tau.max_coeff_norm()).max(op.eta.norm());
    let one = c64(1.0, 0.0);
    match op.sigma.degree().unwrap() {
        2 => {
            let s2 = op.sigma.coeff(2);
            let (s1, s0) = (op.sigma.coeff(1), op.sigma.coeff(0));
            let disc = s1 * s1 - 4.0 * s2 * s0;
            // discriminant-based double-root test: computing the two roots and
            // comparing them would only be accurate to sqrt(eps)
            if disc.norm() <= 1e-12 * (s1.norm() * s1.norm()).max(4.0 * (s2 * s0).norm()).max(1e-300) {
                // double root: 2F0 or Euler²
                let r = -s1 / (2.0 * s2);
                let tau_r = op.tau.eval(r);
                let tau1 = op.tau.coeff(1);
                if near_zero(tau_r, scale_ref) {
                    // z² d² + b z d + a after shifting the root to 0
                    return Ok(EquationClass {
                        tag: ClassTag::Euler2,
                        scale: one,
                        shift: r,
                        constant: s2,
                        params: ClassParams::Elementary(vec![op.eta / s2, tau1 / s2]),
                    });
                }
                // scale so the constant part of tau becomes -1
                let mu_s = -tau_r / s2;
                let sum_ab = tau1 / s2 - one; // 1+a+b = tau1/s2
                let prod_ab = op.eta / s2;
                let (a, b) = split_quadratic(sum_ab, prod_ab);
                return Ok(EquationClass {
                    tag: ClassTag::TwoF0,
                    scale: mu_s,
                    shift: r,
                    constant: s2,
                    params: ClassParams::Family(FamilyParams::two_f0(a, b)),
                });
            }
            // distinct roots; Gegenbauer when tau vanishes at the midpoint
            let mut roots = op.sigma.roots_quadratic();
            roots.sort_by(|x, y| (x.re, x.im).partial_cmp(&(y.re, y.im)).unwrap());
            let (r1, r2) = (roots[0], roots[1]);
            let mid = (r1 + r2) / 2.0;
            let sum_ab = op.tau.coeff(1) / s2 - one; // a+b
            let prod_ab = op.eta / s2; // ab
            let (a, b) = split_quadratic(sum_ab, prod_ab);
            if near_zero(op.tau.eval(mid), scale_ref * (1.0 + mid.norm())) {
                // map w = ±1 to the roots: z = mu_s w + mid
                let mu_s = (r2 - r1) / 2.0;
                return Ok(EquationClass {
                    tag: ClassTag::Gegenbauer,
                    scale: mu_s,
                    shift: mid,
                    constant: -s2,
                    params: ClassParams::Family(FamilyParams::from_classical(
                        Family::Gegenbauer,
                        &[a, b],
                    )),
                });
            }
            // generic 2F1: z = (r2 - r1) w + r1 puts the roots at w = 0, 1
            let mu_s = r2 - r1;
            let c = op.tau.eval(r1) / (mu_s * -s2);
            Ok(EquationClass {
                tag: ClassTag::Hypergeometric2F1,
                scale: mu_s,
                shift: r1,
                constant: -s2,
                params: ClassParams::Family(FamilyParams::two_f1(a, b, c)),
            })
        }
        1 => {
            let s1 = op.sigma.coeff(1);
            let r = -op.sigma.coeff(0) / s1;
            let tau1 = op.tau.coeff(1);
            let tau_r = op.tau.eval(r);
            if !near_zero(tau1, scale_ref) {
                // 1F1: scale so the slope of tau becomes -1
                let mu_s = -s1 / tau1;
                let c = tau_r / s1;
                let a = op.eta / tau1;
                return Ok(EquationClass {
                    tag: ClassTag::Confluent1F1,
                    scale: mu_s,
                    shift: r,
                    constant: s1 / mu_s,
                    params: ClassParams::Family(FamilyParams::one_f1(a, c)),
                });
            }
            if !near_zero(op.eta, scale_ref) {
                // 0F1: scale so eta becomes -1
                let mu_s = -s1 / op.eta;
                let c = tau_r / s1;
                return Ok(EquationClass {
                    tag: ClassTag::ZeroF1,
                    scale: mu_s,
                    shift: r,
                    constant: s1 / mu_s,
                    params: ClassParams::Family(FamilyParams::zero_f1(c)),
                });
            }
            Ok(EquationClass {
                tag: ClassTag::EulerDeriv,
                scale: one,
                shift: r,
                constant: s1,
                params: ClassParams::Elementary(vec![tau_r / s1]),
            })
        }
        _ => {
            let s0 = op.sigma.coeff(0);
            let tau1 = op.tau.coeff(1);
            if !near_zero(tau1, scale_ref) {
                // Hermite: shift tau's root to 0, scale so tau becomes -2z
                let z0 = -op.tau.coeff(0) / tau1;
                let mu_s = (-2.0 * s0 / tau1).sqrt();
                let a = op.eta / tau1;
                return Ok(EquationClass {
                    tag: ClassTag::Hermite,
                    scale: mu_s,
                    shift: z0,
                    constant: s0 / (mu_s * mu_s),
                    params: ClassParams::Family(FamilyParams::hermite_classical(a)),
                });
            }
            Ok(EquationClass {
                tag: ClassTag::ConstCoeff,
                scale: one,
                shift: c64(0.0, 0.0),
                constant: s0,
                params: ClassParams::Elementary(vec![op.tau.coeff(0) / s0, op.eta / s0]),
            })
        }
    }
}

/// Solve x² - s x + p = 0 for the pair {a, b}, deterministically ordered.
fn split_quadratic(s: Complex64, p: Complex64) -> (Complex64, Complex64) {
    let disc = (s * s - 4.0 * p).sqrt();
    let a = (s - disc) / 2.0;
    let b = (s + disc) / 2.0;
    (a, b)
}

/// Closed form of the natural weight rho solving sigma rho' = kappa rho.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightDescriptor {
    /// z^alpha (1-z)^beta
    TwoF1 { alpha: Complex64, beta: Complex64 },
    /// z^alpha e^{-z}
    OneF1 { alpha: Complex64 },
    /// z^theta e^{1/z}
    TwoF0 { theta: Complex64 },
    /// z^alpha
    ZeroF1 { alpha: Complex64 },
    /// (z²-1)^alpha
    Gegenbauer { alpha: Complex64 },
    /// e^{-z²}
    Hermite,
    /// no recognized closed form (elementary classes, shifted operators, ...)
    Generic,
}

/// Canonical (sigma, kappa, lambda) data with the weight in closed form.
#[derive(Debug, Clone)]
pub struct CanonicalData {
    pub kappa: Poly,
    pub lambda: Complex64,
    pub weight: WeightDescriptor,
}

pub fn canonical_data(op: &HTOperator) -> CanonicalData {
    let kappa = op.tau.sub(&op.sigma.derivative());
    let lambda = op.eta - kappa.coeff(1) / 2.0;
    let weight = match classify(op) {
        Ok(EquationClass {
            params: ClassParams::Family(p),
            scale,
            shift,
            ..
        }) if scale == c64(1.0, 0.0) && shift == c64(0.0, 0.0) => match p {
            FamilyParams::TwoF1 { alpha, beta, .. } => WeightDescriptor::TwoF1 { alpha, beta },
            FamilyParams::OneF1 { alpha, .. } => WeightDescriptor::OneF1 { alpha },
            FamilyParams::TwoF0 { theta, .. } => WeightDescriptor::TwoF0 { theta },
            FamilyParams::ZeroF1 { alpha } => WeightDescriptor::ZeroF1 { alpha },
            FamilyParams::Gegenbauer { alpha, .. } => WeightDescriptor::Gegenbauer { alpha },
            FamilyParams::Hermite { .. } => WeightDescriptor::Hermite,
        },
        _ => WeightDescriptor::Generic,
    };
    CanonicalData { kappa, lambda, weight }
}

impl WeightDescriptor {
    /// Evaluate the weight off its singular set (principal branches).
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        use crate::numeric::pow_principal;
        match *self {
            WeightDescriptor::TwoF1 { alpha, beta } => {
                Ok(pow_principal(z, alpha)? * pow_principal(c64(1.0, 0.0) - z, beta)?)
            }
            WeightDescriptor::OneF1 { alpha } => Ok(pow_principal(z, alpha)? * (-z).exp()),
            WeightDescriptor::TwoF0 { theta } => Ok(pow_principal(z, theta)? * (1.0 / z).exp()),
            WeightDescriptor::ZeroF1 { alpha } => pow_principal(z, alpha),
            WeightDescriptor::Gegenbauer { alpha } => pow_principal(z * z - 1.0, alpha),
            WeightDescriptor::Hermite => Ok((-z * z).exp()),
            WeightDescriptor::Generic => Err(Error::Domain("no closed-form weight".into())),
        }
    }
}

/// A ratio of polynomials num/den.
#[derive(Debug, Clone)]
pub struct RationalFn {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFn {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }
}

/// The balanced form d sigma d + potential, potential = lambda - kappa²/(4 sigma).
#[derive(Debug, Clone)]
pub struct BalancedForm {
    pub sigma: Poly,
    pub potential: RationalFn,
}

pub fn balanced_form(op: &HTOperator) -> BalancedForm {
    let cd = canonical_data(op);
    // (4 sigma lambda - kappa²) / (4 sigma)
    let num = op
        .sigma
        .scale(4.0 * cd.lambda)
        .sub(&cd.kappa.mul(&cd.kappa));
    let den = op.sigma.scale(c64(4.0, 0.0));
    BalancedForm {
        sigma: op.sigma.clone(),
        potential: RationalFn { num, den },
    }
}

/// V in the Schrödinger form d² - V: V = (sigma sigma''/2 - sigma'²/4 + kappa²/4 - lambda sigma)/sigma².
pub fn schrodinger_potential(op: &HTOperator) -> RationalFn {
    let cd = canonical_data(op);
    let sp = op.sigma.derivative();
    let spp = sp.derivative();
    let num = op
        .sigma
        .mul(&spp)
        .scale(c64(0.5, 0.0))
        .sub(&sp.mul(&sp).scale(c64(0.25, 0.0)))
        .add(&cd.kappa.mul(&cd.kappa).scale(c64(0.25, 0.0)))
        .sub(&op.sigma.scale(cd.lambda));
    RationalFn {
        num,
        den: op.sigma.mul(&op.sigma),
    }
}

/// A singular point of the equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Finite(Complex64),
    Infinity,
}

/// Indices of a regular singular point.
#[derive(Debug, Clone)]
pub struct IndicialData {
    pub point: Point,
    pub index1: Complex64,
    pub index2: Complex64,
    pub degenerate: bool,
}

fn is_int_diff(d: Complex64) -> bool {
    d.im.abs() < 1e-9 && (d.re - d.re.round()).abs() < 1e-9
}

pub fn indices(op: &HTOperator, point: Point) -> Result<IndicialData> {
    let scale_ref = op.sigma.max_coeff_norm().max(op.tau.max_coeff_norm());
    match point {
        Point::Finite(z0) => {
            let s = op.sigma.eval(z0);
            if !near_zero(s, scale_ref * (1.0 + z0.norm()).powi(2)) {
                // ordinary point: analytic solutions with indices 0, 1
                return Ok(IndicialData {
                    point,
                    index1: c64(0.0, 0.0),
                    index2: c64(1.0, 0.0),
                    degenerate: true,
                });
            }
            let sp = op.sigma.derivative().eval(z0);
            if !near_zero(sp, scale_ref * (1.0 + z0.norm())) {
                // simple root: b0 = tau(z0)/sigma'(z0), c0 = 0
                let b0 = op.tau.eval(z0) / sp;
                let (i1, i2) = (c64(0.0, 0.0), c64(1.0, 0.0) - b0);
                return Ok(IndicialData {
                    point,
                    index1: i1,
                    index2: i2,
                    degenerate: is_int_diff(i1 - i2),
                });
            }
            // double root: regular singular only if tau also vanishes there
            if !near_zero(op.tau.eval(z0), scale_ref * (1.0 + z0.norm())) {
                return Err(Error::IrregularPoint);
            }
            let s2 = op.sigma.coeff(2);
            let b0 = op.tau.coeff(1) / s2;
            let c0 = op.eta / s2;
            let (i1, i2) = indicial_roots(b0, c0);
            Ok(IndicialData {
                point,
                index1: i1,
                index2: i2,
                degenerate: is_int_diff(i1 - i2),
            })
        }
        Point::Infinity => {
            if op.sigma.degree() != Some(2) {
                return Err(Error::IrregularPoint);
            }
            let s2 = op.sigma.coeff(2);
            let b0 = op.tau.coeff(1) / s2;
            let c0 = op.eta / s2;
            // lam(lam+1) - b0 lam + c0 = 0
            let (i1, i2) = indicial_roots(2.0 * c64(1.0, 0.0) - b0, c0);
            Ok(IndicialData {
                point,
                index1: i1,
                index2: i2,
                degenerate: is_int_diff(i1 - i2),
            })
        }
    }
}

/// Roots of lam(lam-1) + b0 lam + c0 = 0.
fn indicial_roots(b0: Complex64, c0: Complex64) -> (Complex64, Complex64) {
    let s = c64(1.0, 0.0) - b0;
    let disc = (s * s - 4.0 * c0).sqrt();
    ((s - disc) / 2.0, (s + disc) / 2.0)
}

/// One catalog factorization: multiplier·Op = left ∘ right + constant.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub multiplier: Poly,
    pub left: FirstOrder,
    pub right: FirstOrder,
    pub constant: Complex64,
}

/// One catalog commutation relation:
/// `left ∘ (multiplier·Op(params)) = (multiplier·Op(params + shift)) ∘ left`.
#[derive(Debug, Clone)]
pub struct Commutation {
    pub left: FirstOrder,
    pub multiplier: Poly,
    /// Integer shift on the Lie parameters, in `lie_param_names` order.
    pub shift: Vec<i64>,
}

fn fo(p: &[Complex64], q: &[Complex64]) -> FirstOrder {
    FirstOrder::new(Poly::new(p), Poly::new(q))
}

fn zero() -> Complex64 {
    c64(0.0, 0.0)
}
fn one() -> Complex64 {
    c64(1.0, 0.0)
}

/// The catalog of first-order factorizations of a family operator.
pub fn factorizations(params: &FamilyParams) -> Vec<Factorization> {
    let z01 = [zero(), one()]; // the polynomial z
    let z_poly = &z01[..];
    match *params {
        FamilyParams::TwoF1 { alpha, beta, mu } => {
            let h = |x: Complex64| x / 2.0;
            let quarter = |x: Complex64, y: Complex64| -x * y / 4.0;
            let (a_, b_, m_) = (alpha, beta, mu);
            // z(1-z) d = (0 + z - z²) d
            let zz = [zero(), one(), -one()];
            let m_one = Poly::constant(one());
            let m_z = Poly::new(z_poly);
            let m_zm1 = Poly::new(&[-one(), one()]); // z - 1
            vec![
                Factorization {
                    multiplier: m_one.clone(),
                    left: fo(&zz, &[(one() + a_), -(a_ + b_ + 2.0)]),
                    right: fo(&[one()], &[]),
                    constant: quarter(a_ + b_ + m_ + 1.0, a_ + b_ - m_ + 1.0),
                },
                Factorization {
                    multiplier: m_one.clone(),
                    left: fo(&[one()], &[]),
                    right: fo(&zz, &[a_, -(a_ + b_)]),
                    constant: quarter(a_ + b_ + m_ - 1.0, a_ + b_ - m_ - 1.0),
                },
                Factorization {
                    multiplier: m_one.clone(),
                    left: fo(&[one(), -one()], &[-b_ - 1.0]),
                    right: fo(z_poly, &[a_]),
                    constant: quarter(-a_ + b_ + m_ + 1.0, -a_ + b_ - m_ + 1.0),
                },
                Factorization {
                    multiplier: m_one,
                    left: fo(z_poly, &[a_ + 1.0]),
                    right: fo(&[one(), -one()], &[-b_]),
                    constant: quarter(a_ - b_ + m_ + 1.0, a_ - b_ - m_ + 1.0),
                },
                Factorization {
                    multiplier: m_z.clone(),
                    left: fo(z_poly, &[h(a_ + b_ + m_ - 1.0)]),
                    right: fo(&zz, &[h(a_ + b_ - m_ + 1.0) - b_, -h(a_ + b_ - m_ + 1.0)]),
                    constant: quarter(a_ + b_ + m_ - 1.0, a_ - b_ - m_ + 1.0),
                },
                Factorization {
                    multiplier: m_z.clone(),
                    left: fo(&zz, &[h(a_ + b_ - m_ + 1.0) - b_ - 1.0, -h(a_ + b_ - m_ + 1.0)]),
                    right: fo(z_poly, &[h(a_ + b_ + m_ + 1.0)]),
                    constant: quarter(a_ + b_ + m_ + 1.0, a_ - b_ - m_ - 1.0),
                },
                Factorization {
                    multiplier: m_z.clone(),
                    left: fo(z_poly, &[h(a_ + b_ - m_ - 1.0)]),
                    right: fo(&zz, &[h(a_ + b_ + m_ + 1.0) - b_, -h(a_ + b_ + m_ + 1.0)]),
                    constant: quarter(a_ + b_ - m_ - 1.0, a_ - b_ + m_ + 1.0),
                },
                Factorization {
                    multiplier: m_z,
                    left: fo(&zz, &[h(a_ + b_ + m_ + 1.0) - b_ - 1.0, -h(a_ + b_ + m_ + 1.0)]),
                    right: fo(z_poly, &[h(a_ + b_ - m_ + 1.0)]),
                    constant: quarter(a_ + b_ - m_ + 1.0, a_ - b_ + m_ - 1.0),
                },
                Factorization {
                    multiplier: m_zm1.clone(),
                    left: fo(&[-one(), one()], &[h(a_ + b_ + m_ - 1.0)]),
                    right: fo(&zz, &[a_, h(-a_ - b_ + m_ - 1.0)]),
                    constant: quarter(a_ + b_ + m_ - 1.0, a_ - b_ + m_ - 1.0),
                },
                Factorization {
                    multiplier: m_zm1.clone(),
                    left: fo(&zz, &[a_ + 1.0, h(-a_ - b_ + m_ - 1.0)]),
                    right: fo(&[-one(), one()], &[h(a_ + b_ + m_ + 1.0)]),
                    constant: quarter(a_ + b_ + m_ + 1.0, a_ - b_ + m_ + 1.0),
                },
                Factorization {
                    multiplier: m_zm1.clone(),
                    left: fo(&[-one(), one()], &[h(a_ + b_ - m_ - 1.0)]),
                    right: fo(&zz, &[a_, h(-a_ - b_ - m_ - 1.0)]),
                    constant: quarter(a_ + b_ - m_ - 1.0, a_ - b_ - m_ - 1.0),
                },
                Factorization {
                    multiplier: m_zm1,
                    left: fo(&zz, &[a_ + 1.0, h(-a_ - b_ - m_ - 1.0)]),
                    right: fo(&[-one(), one()], &[h(a_ + b_ - m_ + 1.0)]),
                    constant: quarter(a_ + b_ - m_ + 1.0, a_ - b_ - m_ + 1.0),
                },
            ]
        }
        FamilyParams::OneF1 { theta, alpha } => {
            let (t_, a_) = (theta, alpha);
            let m_one = Poly::constant(one());
            let m_z = Poly::new(z_poly);
            vec![
                Factorization {
                    multiplier: m_one.clone(),
                    left: fo(z_poly, &[one() + a_, -one()]),
                    right: fo(&[one()], &[]),
                    constant: -(t_ + a_ + 1.0) / 2.0,
                },
                Factorization {
                    multiplier: m_one.clone(),
                    left: fo(&[one()], &[]),
                    right: fo(z_poly, &[a_, -one()]),
                    constant: -(t_ + a_ - 1.0) / 2.0,
                },
                Factorization {
                    multiplier: m_one.clone(),
                    left: fo(z_poly, &[one() + a_]),
                    right: fo(&[one()], &[-one()]),
                    constant: (-t_ + a_ + 1.0) / 2.0,
                },
                Factorization {
                    multiplier: m_one,
                    left: fo(&[one()], &[-one()]),
                    right: fo(z_poly, &[a_]),
                    constant: (-t_ + a_ - 1.0) / 2.0,
                },
                Factorization {
                    multiplier: m_z.clone(),
                    left: fo(z_poly, &[(t_ + a_ - 1.0) / 2.0]),
                    right: fo(z_poly, &[(-t_ + a_ + 1.0) / 2.0, -one()]),
                    constant: -(-t_ + a_ + 1.0) * (t_ + a_ - 1.0) / 4.0,
                },
                Factorization {
                    multiplier: m_z,
                    left: fo(z_poly, &[(-t_ + a_ - 1.0) / 2.0, -one()]),
                    right: fo(z_poly, &[(t_ + a_ + 1.0) / 2.0]),
                    constant: -(-t_ + a_ - 1.0) * (t_ + a_ + 1.0) / 4.0,
                },
            ]
        }
        FamilyParams::ZeroF1 { alpha } => {
            vec![
                Factorization {
                    multiplier: Poly::constant(one()),
                    left: fo(z_poly, &[alpha + 1.0]),
                    right: fo(&[one()], &[]),
                    constant: -one(),
                },
                Factorization {
                    multiplier: Poly::constant(one()),
                    left: fo(&[one()], &[]),
                    right: fo(z_poly, &[alpha]),
                    constant: -one(),
                },
            ]
        }
        FamilyParams::Gegenbauer { alpha, lambda } => {
            let (a_, l_) = (alpha, lambda);
            // 1 - z² and z(1-z²) = z - z³... but FirstOrder p has unrestricted degree.
            let omz2 = [one(), zero(), -one()];
            let zomz2 = [zero(), one(), zero(), -one()];
            let m_one = Poly::constant(one());
            let m_omz2 = Poly::new(&omz2);
            let m_z2 = Poly::new(&[zero(), zero(), one()]);
            vec![
                Factorization {
                    multiplier: m_one.clone(),
                    left: fo(&omz2, &[zero(), -2.0 * (one() + a_)]),
                    right: fo(&[one()], &[]),
                    constant: (a_ + l_ + 0.5) * (-a_ + l_ - 0.5),
                },
                Factorization {
                    multiplier: m_one,
                    left: fo(&[one()], &[]),
                    right: fo(&omz2, &[zero(), -2.0 * a_]),
                    constant: (a_ + l_ - 0.5) * (-a_ + l_ + 0.5),
                },
                Factorization {
                    multiplier: m_omz2.clone(),
                    left: fo(&omz2, &[zero(), -a_ + l_ + 0.5]),
                    right: fo(&omz2, &[zero(), -a_ - l_ - 0.5]),
                    constant: (a_ + l_ + 0.5) * (l_ - a_ + 0.5),
                },
                Factorization {
                    multiplier: m_omz2,
                    left: fo(&omz2, &[zero(), -a_ - l_ + 0.5]),
                    right: fo(&omz2, &[zero(), -a_ + l_ - 0.5]),
                    constant: (l_ - a_ - 0.5) * (l_ + a_ - 0.5),
                },
                Factorization {
                    multiplier: m_z2.clone(),
                    left: fo(&zomz2, &[-a_ - l_ - 1.5, zero(), -a_ + l_ - 0.5]),
                    right: fo(z_poly, &[a_ + l_ + 0.5]),
                    constant: (a_ + l_ + 0.5) * (a_ + l_ + 1.5),
                },
                Factorization {
                    multiplier: m_z2.clone(),
                    left: fo(z_poly, &[a_ + l_ - 1.5]),
                    right: fo(&zomz2, &[-a_ - l_ + 0.5, zero(), -a_ + l_ - 0.5]),
                    constant: (a_ + l_ - 0.5) * (a_ + l_ - 1.5),
                },
                Factorization {
                    multiplier: m_z2.clone(),
                    left: fo(&zomz2, &[-a_ + l_ - 1.5, zero(), -a_ - l_ - 0.5]),
                    right: fo(z_poly, &[a_ - l_ + 0.5]),
                    constant: (a_ - l_ + 0.5) * (a_ - l_ + 1.5),
                },
                Factorization {
                    multiplier: m_z2,
                    left: fo(z_poly, &[a_ - l_ - 1.5]),
                    right: fo(&zomz2, &[-a_ + l_ + 0.5, zero(), -a_ - l_ - 0.5]),
                    constant: (a_ - l_ - 0.5) * (a_ - l_ - 1.5),
                },
            ]
        }
        FamilyParams::Hermite { lambda } => {
            let l_ = lambda;
            let m_one = Poly::constant(one());
            let m_z2 = Poly::new(&[zero(), zero(), one()]);
            vec![
                Factorization {
                    multiplier: m_one.clone(),
                    left: fo(&[one()], &[zero(), -c64(2.0, 0.0)]),
                    right: fo(&[one()], &[]),
                    constant: -2.0 * l_ - one(),
                },
                Factorization {
                    multiplier: m_one,
                    left: fo(&[one()], &[]),
                    right: fo(&[one()], &[zero(), -c64(2.0, 0.0)]),
                    constant: -2.0 * l_ + one(),
                },
                Factorization {
                    multiplier: m_z2.clone(),
                    left: fo(z_poly, &[l_ - 1.5]),
                    right: fo(z_poly, &[-l_ + 0.5, zero(), -c64(2.0, 0.0)]),
                    constant: (l_ - 1.5) * (l_ - 0.5),
                },
                Factorization {
                    multiplier: m_z2,
                    left: fo(z_poly, &[-l_ - 1.5, zero(), -c64(2.0, 0.0)]),
                    right: fo(z_poly, &[l_ + 0.5]),
                    constant: (l_ + 1.5) * (l_ + 0.5),
                },
            ]
        }
        FamilyParams::TwoF0 { .. } => vec![],
    }
}

/// The catalog of basic commutation relations of a family operator.
pub fn commutations(params: &FamilyParams) -> Vec<Commutation> {
    let z_poly = [zero(), one()];
    match *params {
        FamilyParams::TwoF1 { alpha, beta, mu } => {
            let (a_, b_, m_) = (alpha, beta, mu);
            let zz = [zero(), one(), -one()]; // z(1-z)
            let m_one = Poly::constant(one());
            let m_z = Poly::new(&z_poly);
            let m_omz = Poly::new(&[one(), -one()]); // 1 - z
            vec![
                Commutation { left: fo(&[one()], &[]), multiplier: m_one.clone(), shift: vec![1, 1, 0] },
                Commutation {
                    left: fo(&zz, &[a_, -(a_ + b_)]),
                    multiplier: m_one.clone(),
                    shift: vec![-1, -1, 0],
                },
                Commutation {
                    left: fo(&[one(), -one()], &[-b_]),
                    multiplier: m_one.clone(),
                    shift: vec![1, -1, 0],
                },
                Commutation {
                    left: fo(&z_poly, &[a_]),
                    multiplier: m_one,
                    shift: vec![-1, 1, 0],
                },
                Commutation {
                    left: fo(&z_poly, &[(a_ + b_ + m_ + 1.0) / 2.0]),
                    multiplier: m_z.clone(),
                    shift: vec![0, 1, 1],
                },
                Commutation {
                    left: fo(&zz, &[(a_ + b_ - m_ + 1.0) / 2.0 - b_, -(a_ + b_ - m_ + 1.0) / 2.0]),
                    multiplier: m_z.clone(),
                    shift: vec![0, -1, -1],
                },
                Commutation {
                    left: fo(&z_poly, &[(a_ + b_ - m_ + 1.0) / 2.0]),
                    multiplier: m_z.clone(),
                    shift: vec![0, 1, -1],
                },
                Commutation {
                    // z(z-1) d - (1-z)(a+b+m+1)/2 + b
                    left: fo(&[zero(), -one(), one()], &[b_ - (a_ + b_ + m_ + 1.0) / 2.0, (a_ + b_ + m_ + 1.0) / 2.0]),
                    multiplier: m_z,
                    shift: vec![0, -1, 1],
                },
                Commutation {
                    left: fo(&[-one(), one()], &[(a_ + b_ + m_ + 1.0) / 2.0]),
                    multiplier: m_omz.clone(),
                    shift: vec![1, 0, 1],
                },
                Commutation {
                    left: fo(&zz, &[a_, -(a_ + b_ - m_ + 1.0) / 2.0]),
                    multiplier: m_omz.clone(),
                    shift: vec![-1, 0, -1],
                },
                Commutation {
                    left: fo(&[-one(), one()], &[(a_ + b_ - m_ + 1.0) / 2.0]),
                    multiplier: m_omz.clone(),
                    shift: vec![1, 0, -1],
                },
                Commutation {
                    // z(z-1) d + z(a+b+m+1)/2 - a
                    left: fo(&[zero(), -one(), one()], &[-a_, (a_ + b_ + m_ + 1.0) / 2.0]),
                    multiplier: m_omz,
                    shift: vec![-1, 0, 1],
                },
            ]
        }
        FamilyParams::OneF1 { theta, alpha } => {
            let (t_, a_) = (theta, alpha);
            let m_one = Poly::constant(one());
            let m_z = Poly::new(&z_poly);
            vec![
                Commutation { left: fo(&[one()], &[]), multiplier: m_one.clone(), shift: vec![1, 1] },
                Commutation {
                    left: fo(&z_poly, &[a_, -one()]),
                    multiplier: m_one.clone(),
                    shift: vec![-1, -1],
                },
                Commutation {
                    left: fo(&z_poly, &[a_]),
                    multiplier: m_one.clone(),
                    shift: vec![1, -1],
                },
                Commutation {
                    left: fo(&[one()], &[-one()]),
                    multiplier: m_one,
                    shift: vec![-1, 1],
                },
                Commutation {
                    left: fo(&z_poly, &[(t_ + a_ + 1.0) / 2.0]),
                    multiplier: m_z.clone(),
                    shift: vec![2, 0],
                },
                Commutation {
                    left: fo(&z_poly, &[(-t_ + a_ + 1.0) / 2.0, -one()]),
                    multiplier: m_z,
                    shift: vec![-2, 0],
                },
            ]
        }
        FamilyParams::ZeroF1 { alpha } => {
            let m_one = Poly::constant(one());
            vec![
                Commutation { left: fo(&[one()], &[]), multiplier: m_one.clone(), shift: vec![1] },
                Commutation {
                    left: fo(&z_poly, &[alpha]),
                    multiplier: m_one,
                    shift: vec![-1],
                },
            ]
        }
        FamilyParams::Gegenbauer { alpha, lambda } => {
            let (a_, l_) = (alpha, lambda);
            let omz2 = [one(), zero(), -one()];
            let zomz2 = [zero(), one(), zero(), -one()];
            let m_one = Poly::constant(one());
            let m_omz2 = Poly::new(&omz2);
            let m_z2 = Poly::new(&[zero(), zero(), one()]);
            vec![
                Commutation { left: fo(&[one()], &[]), multiplier: m_one.clone(), shift: vec![1, 0] },
                Commutation {
                    left: fo(&omz2, &[zero(), -2.0 * a_]),
                    multiplier: m_one,
                    shift: vec![-1, 0],
                },
                Commutation {
                    left: fo(&omz2, &[zero(), -(a_ + l_ + 0.5)]),
                    multiplier: m_omz2.clone(),
                    shift: vec![0, 1],
                },
                Commutation {
                    left: fo(&omz2, &[zero(), -(a_ - l_ + 0.5)]),
                    multiplier: m_omz2,
                    shift: vec![0, -1],
                },
                Commutation {
                    left: fo(&z_poly, &[a_ - l_ + 0.5]),
                    multiplier: m_z2.clone(),
                    shift: vec![1, -1],
                },
                Commutation {
                    left: fo(&zomz2, &[-a_ + l_ + 0.5, zero(), -(a_ + l_ + 0.5)]),
                    multiplier: m_z2.clone(),
                    shift: vec![-1, 1],
                },
                Commutation {
                    left: fo(&z_poly, &[a_ + l_ + 0.5]),
                    multiplier: m_z2.clone(),
                    shift: vec![1, 1],
                },
                Commutation {
                    left: fo(&zomz2, &[-a_ - l_ + 0.5, zero(), -(a_ - l_ + 0.5)]),
                    multiplier: m_z2,
                    shift: vec![-1, -1],
                },
            ]
        }
        FamilyParams::Hermite { lambda } => {
            let l_ = lambda;
            let m_one = Poly::constant(one());
            let m_z2 = Poly::new(&[zero(), zero(), one()]);
            vec![
                Commutation { left: fo(&[one()], &[]), multiplier: m_one.clone(), shift: vec![1] },
                Commutation {
                    left: fo(&[one()], &[zero(), -c64(2.0, 0.0)]),
                    multiplier: m_one,
                    shift: vec![-1],
                },
                Commutation {
                    left: fo(&z_poly, &[l_ + 0.5]),
                    multiplier: m_z2.clone(),
                    shift: vec![2],
                },
                Commutation {
                    left: fo(&z_poly, &[-l_ + 0.5, zero(), -c64(2.0, 0.0)]),
                    multiplier: m_z2,
                    shift: vec![-2],
                },
            ]
        }
        FamilyParams::TwoF0 { .. } => vec![],
    }
}

/// Residual of catalog factorization `id` (max coefficient magnitude of the
/// difference multiplier·Op − (left ∘ right + constant)); 0 up to roundoff.
pub fn verify_factorization(params: &FamilyParams, id: usize) -> Result<f64> {
    let cat = factorizations(params);
    let f = cat.get(id).ok_or(Error::UnknownFactorization(id))?;
    let target = HTOperator::from_params(params)
        .as_second_order()
        .scale_poly(&f.multiplier);
    let product = SecondOrder::compose(&f.left, &f.right).add_constant(f.constant);
    Ok(target.sub(&product).max_coeff_norm())
}

/// Residual of catalog commutation `id`:
/// max coefficient magnitude of left∘(M·Op) − (M·Op_shifted)∘left.
pub fn verify_commutation(params: &FamilyParams, id: usize) -> Result<f64> {
    let cat = commutations(params);
    let c = cat.get(id).ok_or(Error::UnknownFactorization(id))?;
    let src = HTOperator::from_params(params)
        .as_second_order()
        .scale_poly(&c.multiplier);
    let shifted_params = shift_params(params, &c.shift);
    let dst = HTOperator::from_params(&shifted_params)
        .as_second_order()
        .scale_poly(&c.multiplier);
    let lhs = src.left_first_order(&c.left);
    let rhs = dst.right_first_order(&c.left);
    Ok(lhs.sub(&rhs).max_coeff_norm())
}

/// Shift the Lie parameters by an integer vector.
pub fn shift_params(params: &FamilyParams, shift: &[i64]) -> FamilyParams {
    let lie: Vec<Complex64> = params
        .lie()
        .iter()
        .zip(shift.iter())
        .map(|(&v, &s)| v + c64(s as f64, 0.0))
        .collect();
    FamilyParams::from_lie(params.family(), &lie)
}

/// Helper used by ladder/commutation property tests.
pub fn residual_third_order(lhs: &ThirdOrder, rhs: &ThirdOrder) -> f64 {
    lhs.sub(rhs).max_coeff_norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn all_family_params(rng: &mut impl Rng) -> Vec<FamilyParams> {
        let r = |rng: &mut dyn rand::RngCore| c64(rng.gen_range(-2.0..2.0), rng.gen_range(-1.0..1.0));
        vec![
            FamilyParams::TwoF1 { alpha: r(rng), beta: r(rng), mu: r(rng) },
            FamilyParams::OneF1 { theta: r(rng), alpha: r(rng) },
            FamilyParams::TwoF0 { theta: r(rng), alpha: r(rng) },
            FamilyParams::ZeroF1 { alpha: r(rng) },
            FamilyParams::Gegenbauer { alpha: r(rng), lambda: r(rng) },
            FamilyParams::Hermite { lambda: r(rng) },
        ]
    }

    #[test]
    fn classify_templates_identity_map() {
        // template operators classify to themselves with identity affine map
        let p = FamilyParams::two_f1(c64(0.7, 0.0), c64(1.3, 0.0), c64(1.9, 0.0));
        let cls = classify(&HTOperator::from_params(&p)).unwrap();
        assert_eq!(cls.tag, ClassTag::Hypergeometric2F1);
        assert!((cls.scale - one()).norm() < 1e-9);
        assert!(cls.shift.norm() < 1e-9);

        let g = FamilyParams::gegenbauer_lie(c64(0.4, 0.0), c64(0.9, 0.0));
        let cls = classify(&HTOperator::from_params(&g)).unwrap();
        assert_eq!(cls.tag, ClassTag::Gegenbauer);

        let h = FamilyParams::hermite_classical(c64(0.8, 0.0));
        let cls = classify(&HTOperator::from_params(&h)).unwrap();
        assert_eq!(cls.tag, ClassTag::Hermite);
    }

    #[test]
    fn classify_round_trip_random_affine() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            for p in all_family_params(&mut rng) {
                let base = HTOperator::from_params(&p);
                let scale = c64(rng.gen_range(0.3..2.0), rng.gen_range(-0.5..0.5));
                let shift = c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let k = c64(rng.gen_range(0.5..2.0), rng.gen_range(-0.5..0.5));
                // substitute z = scale·w + shift into the template, multiply by k
                let moved = EquationClass {
                    tag: ClassTag::Hypergeometric2F1, // tag unused by reconstruct-for-family
                    scale,
                    shift,
                    constant: k,
                    params: ClassParams::Family(p),
                }
                .reconstruct();
                let _ = base;
                let cls = classify(&moved).unwrap();
                let rebuilt = cls.reconstruct();
                let diff = rebuilt.as_second_order().sub(&moved.as_second_order()).max_coeff_norm()
                    + (rebuilt.eta - moved.eta).norm();
                let scale_norm = moved.as_second_order().max_coeff_norm().max(1.0);
                assert!(diff / scale_norm < 1e-8, "{p:?} diff {diff}");
            }
        }
    }

    #[test]
    fn canonical_data_round_trip() {
        let p = FamilyParams::one_f1(c64(0.7, 0.2), c64(1.4, -0.1));
        let op = HTOperator::from_params(&p);
        let cd = canonical_data(&op);
        // tau = sigma' + kappa and eta = kappa'/2 + lambda
        assert!(op.tau.sub(&op.sigma.derivative().add(&cd.kappa)).max_coeff_norm() < 1e-14);
        assert!((op.eta - (cd.kappa.coeff(1) / 2.0 + cd.lambda)).norm() < 1e-14);
        assert!(matches!(cd.weight, WeightDescriptor::OneF1 { .. }));
    }

    #[test]
    fn weight_solves_sigma_rho_prime_eq_kappa_rho() {
        // numerically check sigma * rho'/rho = kappa at a sample point
        let samples: Vec<FamilyParams> = vec![
            FamilyParams::two_f1(c64(0.7, 0.0), c64(1.1, 0.0), c64(1.6, 0.0)),
            FamilyParams::one_f1(c64(0.7, 0.0), c64(1.6, 0.0)),
            FamilyParams::two_f0(c64(0.7, 0.0), c64(0.4, 0.0)),
            FamilyParams::zero_f1(c64(1.6, 0.0)),
            FamilyParams::gegenbauer_lie(c64(0.3, 0.0), c64(0.8, 0.0)),
            FamilyParams::hermite_classical(c64(0.4, 0.0)),
        ];
        for p in samples {
            let op = HTOperator::from_params(&p);
            let cd = canonical_data(&op);
            let z = match p.family() {
                Family::Gegenbauer => c64(2.3, 0.4),
                _ => c64(0.37, 0.21),
            };
            let h = 1e-6;
            let rho = |w: Complex64| cd.weight.eval(w).unwrap();
            let drho = (rho(z + c64(h, 0.0)) - rho(z - c64(h, 0.0))) / (2.0 * h);
            let lhs = op.sigma.eval(z) * drho / rho(z);
            let rhs = cd.kappa.eval(z);
            assert!((lhs - rhs).norm() < 1e-5, "{p:?}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn balanced_and_schrodinger_forms() {
        // 0F1: d z d - 1 - alpha²/(4z)
        let alpha = c64(0.7, 0.0);
        let op = HTOperator::from_params(&FamilyParams::ZeroF1 { alpha });
        let b = balanced_form(&op);
        let z = c64(0.9, 0.3);
        let expect = -one() - alpha * alpha / (4.0 * z);
        assert!((b.potential.eval(z) - expect).norm() < 1e-12);

        // Gegenbauer: potential lambda² - 1/4 - alpha²/(1-z²)
        let (a_, l_) = (c64(0.4, 0.0), c64(1.1, 0.0));
        let op = HTOperator::from_params(&FamilyParams::Gegenbauer { alpha: a_, lambda: l_ });
        let b = balanced_form(&op);
        let expect = l_ * l_ - 0.25 - a_ * a_ / (one() - z * z);
        assert!((b.potential.eval(z) - expect).norm() < 1e-12);

        // Hermite Schrödinger potential: z² + 2 lambda
        let l_ = c64(0.3, 0.0);
        let op = HTOperator::from_params(&FamilyParams::Hermite { lambda: l_ });
        let v = schrodinger_potential(&op);
        assert!((v.eval(z) - (z * z + 2.0 * l_)).norm() < 1e-12);

        // 1F1 Whittaker potential: 1/4 + theta/(2z) + (alpha²/4 - 1/4)/z²
        let (t_, a_) = (c64(0.5, 0.0), c64(0.8, 0.0));
        let op = HTOperator::from_params(&FamilyParams::OneF1 { theta: t_, alpha: a_ });
        let v = schrodinger_potential(&op);
        let expect = c64(0.25, 0.0) + t_ / (2.0 * z) + (a_ * a_ / 4.0 - 0.25) / (z * z);
        assert!((v.eval(z) - expect).norm() < 1e-12);
    }

    #[test]
    fn indices_match_lie_parameters() {
        let (al, be, mu) = (c64(0.3, 0.1), c64(0.7, -0.2), c64(1.1, 0.0));
        let p = FamilyParams::TwoF1 { alpha: al, beta: be, mu };
        let op = HTOperator::from_params(&p);
        let cl = p.classical();
        let (a, b, c) = (cl[0], cl[1], cl[2]);

        let i0 = indices(&op, Point::Finite(c64(0.0, 0.0))).unwrap();
        assert!((i0.index2 - (one() - c)).norm() < 1e-12);
        let i1 = indices(&op, Point::Finite(one())).unwrap();
        // indices at 1: {0, c - a - b} = {0, -beta}
        assert!((i1.index2 - (c - a - b)).norm() < 1e-12 || (i1.index1 - (c - a - b)).norm() < 1e-12);
        let ii = indices(&op, Point::Infinity).unwrap();
        let mut got = [ii.index1, ii.index2];
        got.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        let mut want = [a, b];
        want.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert!((got[0] - want[0]).norm() < 1e-10 && (got[1] - want[1]).norm() < 1e-10);

        // 1F1 at infinity is irregular
        let op = HTOperator::from_params(&FamilyParams::one_f1(c64(0.7, 0.0), c64(1.5, 0.0)));
        assert!(matches!(indices(&op, Point::Infinity), Err(Error::IrregularPoint)));
        // 2F0 at 0 is irregular
        let op = HTOperator::from_params(&FamilyParams::two_f0(c64(0.7, 0.0), c64(0.2, 0.0)));
        assert!(matches!(indices(&op, Point::Finite(c64(0.0, 0.0))), Err(Error::IrregularPoint)));
    }

    #[test]
    fn factorization_catalog_is_exact() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            for p in all_family_params(&mut rng) {
                let n = factorizations(&p).len();
                let expected = match p.family() {
                    Family::TwoF1 => 12,
                    Family::OneF1 => 6,
                    Family::TwoF0 => 0,
                    Family::ZeroF1 => 2,
                    Family::Gegenbauer => 8,
                    Family::Hermite => 4,
                };
                assert_eq!(n, expected, "{:?}", p.family());
                for id in 0..n {
                    let r = verify_factorization(&p, id).unwrap();
                    assert!(r < 1e-10, "{:?} factorization {id}: residual {r}", p.family());
                }
            }
        }
    }

    #[test]
    fn commutation_catalog_is_exact() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            for p in all_family_params(&mut rng) {
                let n = commutations(&p).len();
                let expected = match p.family() {
                    Family::TwoF1 => 12,
                    Family::OneF1 => 6,
                    Family::TwoF0 => 0,
                    Family::ZeroF1 => 2,
                    Family::Gegenbauer => 8,
                    Family::Hermite => 4,
                };
                assert_eq!(n, expected, "{:?}", p.family());
                for id in 0..n {
                    let r = verify_commutation(&p, id).unwrap();
                    assert!(r < 1e-10, "{:?} commutation {id}: residual {r}", p.family());
                }
            }
        }
    }

    #[test]
    fn unknown_factorization_errors() {
        let p = FamilyParams::zero_f1(c64(1.5, 0.0));
        assert!(matches!(verify_factorization(&p, 5), Err(Error::UnknownFactorization(5))));
    }
}
