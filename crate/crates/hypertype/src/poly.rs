//! Dense polynomials over the complex numbers, used for operator algebra.
//!
//! Degrees stay tiny (products of two first-order operators at most), so a
//! plain coefficient vector in the monomial basis is all we need.

use num_complex::Complex64;

use crate::numeric::c64;

#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<Complex64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn constant(c: Complex64) -> Self {
        if c.re == 0.0 && c.im == 0.0 {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    /// Build from low-to-high coefficients.
    pub fn new(coeffs: &[Complex64]) -> Self {
        let mut p = Poly(coeffs.to_vec());
        p.trim();
        p
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly::new(&coeffs.iter().map(|&x| c64(x, 0.0)).collect::<Vec<_>>())
    }

    fn trim(&mut self) {
        while let Some(last) = self.0.last() {
            if last.norm() == 0.0 {
                self.0.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.0.get(k).copied().unwrap_or_else(|| c64(0.0, 0.0))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = c64(0.0, 0.0);
        for &c in self.0.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            &self.0[1..]
                .iter()
                .enumerate()
                .map(|(k, &c)| c * (k as f64 + 1.0))
                .collect::<Vec<_>>(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![c64(0.0, 0.0); n];
        for (k, slot) in v.iter_mut().enumerate() {
            *slot = self.coeff(k) + other.coeff(k);
        }
        Poly::new(&v)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(c64(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> Poly {
        Poly::new(&self.0.iter().map(|&c| c * s).collect::<Vec<_>>())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![c64(0.0, 0.0); self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(&v)
    }

    /// Substitute z = scale*w + shift, returning the polynomial in w.
    pub fn compose_affine(&self, scale: Complex64, shift: Complex64) -> Poly {
        let lin = Poly::new(&[shift, scale]);
        let mut acc = Poly::zero();
        for &c in self.0.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c));
        }
        acc
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn max_coeff_norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Roots of a degree <= 2 polynomial.
    pub fn roots_quadratic(&self) -> Vec<Complex64> {
        match self.degree() {
            None | Some(0) => vec![],
            Some(1) => vec![-self.0[0] / self.0[1]],
            Some(2) => {
                let (c, b, a) = (self.0[0], self.0[1], self.0[2]);
                let disc = (b * b - 4.0 * a * c).sqrt();
                // pick the numerically stable pairing
                let q = if (b + disc).norm() >= (b - disc).norm() {
                    -(b + disc) / 2.0
                } else {
                    -(b - disc) / 2.0
                };
                if q.norm() == 0.0 {
                    vec![c64(0.0, 0.0), c64(0.0, 0.0)]
                } else {
                    vec![q / a, c / q]
                }
            }
            _ => panic!("roots_quadratic on degree > 2"),
        }
    }
}

/// A first-order differential operator p(z) d/dz + q(z).
#[derive(Debug, Clone)]
pub struct FirstOrder {
    pub p: Poly,
    pub q: Poly,
}

impl FirstOrder {
    pub fn new(p: Poly, q: Poly) -> Self {
        FirstOrder { p, q }
    }
}

/// A second-order operator s(z) d² + t(z) d + u(z) with polynomial
/// coefficients; the common currency of composition and residual checks.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondOrder {
    pub s: Poly,
    pub t: Poly,
    pub u: Poly,
}

impl SecondOrder {
    /// Compose two first-order operators: (p1 d + q1)(p2 d + q2).
    pub fn compose(l: &FirstOrder, r: &FirstOrder) -> SecondOrder {
        SecondOrder {
            s: l.p.mul(&r.p),
            t: l.p.mul(&r.p.derivative()).add(&l.p.mul(&r.q)).add(&l.q.mul(&r.p)),
            u: l.p.mul(&r.q.derivative()).add(&l.q.mul(&r.q)),
        }
    }

    pub fn add_constant(mut self, k: Complex64) -> SecondOrder {
        self.u = self.u.add(&Poly::constant(k));
        self
    }

    pub fn sub(&self, other: &SecondOrder) -> SecondOrder {
        SecondOrder {
            s: self.s.sub(&other.s),
            t: self.t.sub(&other.t),
            u: self.u.sub(&other.u),
        }
    }

    /// Multiply on the left by a polynomial.
    pub fn scale_poly(&self, m: &Poly) -> SecondOrder {
        SecondOrder {
            s: m.mul(&self.s),
            t: m.mul(&self.t),
            u: m.mul(&self.u),
        }
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.s
            .max_coeff_norm()
            .max(self.t.max_coeff_norm())
            .max(self.u.max_coeff_norm())
    }

    /// Compose a first-order operator with a second-order one (first order on
    /// the left): (p d + q)(s d² + t d + u).
    pub fn left_first_order(&self, l: &FirstOrder) -> ThirdOrder {
        ThirdOrder {
            c3: l.p.mul(&self.s),
            c2: l.p.mul(&self.s.derivative()).add(&l.p.mul(&self.t)).add(&l.q.mul(&self.s)),
            c1: l.p.mul(&self.t.derivative()).add(&l.p.mul(&self.u)).add(&l.q.mul(&self.t)),
            c0: l.p.mul(&self.u.derivative()).add(&l.q.mul(&self.u)),
        }
    }

    /// (s d² + t d + u)(p d + q).
    pub fn right_first_order(&self, r: &FirstOrder) -> ThirdOrder {
        // expand s d²(p d + q) + t d (p d + q) + u (p d + q)
        let p = &r.p;
        let q = &r.q;
        let dp = p.derivative();
        let ddp = dp.derivative();
        let dq = q.derivative();
        let ddq = dq.derivative();
        ThirdOrder {
            c3: self.s.mul(p),
            c2: self
                .s
                .mul(&dp.scale(c64(2.0, 0.0)))
                .add(&self.s.mul(q))
                .add(&self.t.mul(p)),
            c1: self
                .s
                .mul(&ddp)
                .add(&self.s.mul(&dq.scale(c64(2.0, 0.0))))
                .add(&self.t.mul(&dp))
                .add(&self.t.mul(q))
                .add(&self.u.mul(p)),
            c0: self.s.mul(&ddq).add(&self.t.mul(&dq)).add(&self.u.mul(q)),
        }
    }
}

/// Third-order operator coefficients, produced by ladder/commutation checks.
#[derive(Debug, Clone)]
pub struct ThirdOrder {
    pub c3: Poly,
    pub c2: Poly,
    pub c1: Poly,
    pub c0: Poly,
}

impl ThirdOrder {
    pub fn sub(&self, other: &ThirdOrder) -> ThirdOrder {
        ThirdOrder {
            c3: self.c3.sub(&other.c3),
            c2: self.c2.sub(&other.c2),
            c1: self.c1.sub(&other.c1),
            c0: self.c0.sub(&other.c0),
        }
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.c3
            .max_coeff_norm()
            .max(self.c2.max_coeff_norm())
            .max(self.c1.max_coeff_norm())
            .max(self.c0.max_coeff_norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_derivative() {
        let p = Poly::from_real(&[1.0, -3.0, 2.0]); // 1 - 3z + 2z²
        assert_eq!(p.eval(c64(2.0, 0.0)), c64(3.0, 0.0));
        assert_eq!(p.derivative(), Poly::from_real(&[-3.0, 4.0]));
    }

    #[test]
    fn composition_matches_product_rule() {
        // (z d + 1)(d + z) = z d² + (z² + 1) d + (z + z)?  expand by hand:
        // z d(d f + z f) + (d f + z f) = z f'' + z z f' + z f + f' + z f
        let l = FirstOrder::new(Poly::from_real(&[0.0, 1.0]), Poly::from_real(&[1.0]));
        let r = FirstOrder::new(Poly::from_real(&[1.0]), Poly::from_real(&[0.0, 1.0]));
        let c = SecondOrder::compose(&l, &r);
        assert_eq!(c.s, Poly::from_real(&[0.0, 1.0]));
        assert_eq!(c.t, Poly::from_real(&[1.0, 0.0, 1.0]));
        assert_eq!(c.u, Poly::from_real(&[0.0, 2.0]));
    }

    #[test]
    fn affine_composition() {
        let p = Poly::from_real(&[0.0, 0.0, 1.0]); // z²
        let q = p.compose_affine(c64(2.0, 0.0), c64(1.0, 0.0)); // (2w+1)²
        assert_eq!(q, Poly::from_real(&[1.0, 4.0, 4.0]));
    }

    #[test]
    fn quadratic_roots() {
        let p = Poly::from_real(&[2.0, -3.0, 1.0]); // (z-1)(z-2)
        let mut roots: Vec<f64> = p.roots_quadratic().iter().map(|r| r.re).collect();
        roots.sort_by(f64::total_cmp);
        assert!((roots[0] - 1.0).abs() < 1e-14);
        assert!((roots[1] - 2.0).abs() < 1e-14);
    }
}
