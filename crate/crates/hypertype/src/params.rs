//! Family tags and the two coordinate systems on parameter space.
//!
//! Each family carries "classical" parameters (the ones indexing the series
//! coefficients, like (a, b, c) for ₂F₁) and "Lie-algebraic" parameters
//! (differences of indices at the singular points, like (alpha, beta, mu)).
//! The Lie parameters are stored; the classical ones are derived, so the
//! two views can never drift apart.

use num_complex::Complex64;

use crate::numeric::c64;

/// The six function families with series evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Family {
    TwoF1,
    OneF1,
    TwoF0,
    ZeroF1,
    Gegenbauer,
    Hermite,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::TwoF1 => "2f1",
            Family::OneF1 => "1f1",
            Family::TwoF0 => "2f0",
            Family::ZeroF1 => "0f1",
            Family::Gegenbauer => "gegenbauer",
            Family::Hermite => "hermite",
        }
    }

    pub fn lie_param_names(self) -> &'static [&'static str] {
        match self {
            Family::TwoF1 => &["alpha", "beta", "mu"],
            Family::OneF1 | Family::TwoF0 => &["theta", "alpha"],
            Family::ZeroF1 => &["alpha"],
            Family::Gegenbauer => &["alpha", "lambda"],
            Family::Hermite => &["lambda"],
        }
    }

    pub fn classical_param_names(self) -> &'static [&'static str] {
        match self {
            Family::TwoF1 => &["a", "b", "c"],
            Family::OneF1 => &["a", "c"],
            Family::TwoF0 | Family::Gegenbauer => &["a", "b"],
            Family::ZeroF1 => &["c"],
            Family::Hermite => &["a"],
        }
    }
}

/// Parameters of one family, held in Lie-algebraic coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyParams {
    /// alpha = c - 1, beta = a + b - c, mu = b - a
    TwoF1 {
        alpha: Complex64,
        beta: Complex64,
        mu: Complex64,
    },
    /// theta = -c + 2a, alpha = c - 1
    OneF1 { theta: Complex64, alpha: Complex64 },
    /// theta = -1 + a + b, alpha = a - b
    TwoF0 { theta: Complex64, alpha: Complex64 },
    /// alpha = c - 1
    ZeroF1 { alpha: Complex64 },
    /// alpha = (a + b - 1)/2, lambda = (b - a)/2
    Gegenbauer { alpha: Complex64, lambda: Complex64 },
    /// lambda = a - 1/2
    Hermite { lambda: Complex64 },
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::TwoF1 { .. } => Family::TwoF1,
            FamilyParams::OneF1 { .. } => Family::OneF1,
            FamilyParams::TwoF0 { .. } => Family::TwoF0,
            FamilyParams::ZeroF1 { .. } => Family::ZeroF1,
            FamilyParams::Gegenbauer { .. } => Family::Gegenbauer,
            FamilyParams::Hermite { .. } => Family::Hermite,
        }
    }

    /// Lie parameters as a vector, in the order of `lie_param_names`.
    pub fn lie(&self) -> Vec<Complex64> {
        match *self {
            FamilyParams::TwoF1 { alpha, beta, mu } => vec![alpha, beta, mu],
            FamilyParams::OneF1 { theta, alpha } => vec![theta, alpha],
            FamilyParams::TwoF0 { theta, alpha } => vec![theta, alpha],
            FamilyParams::ZeroF1 { alpha } => vec![alpha],
            FamilyParams::Gegenbauer { alpha, lambda } => vec![alpha, lambda],
            FamilyParams::Hermite { lambda } => vec![lambda],
        }
    }

    pub fn from_lie(family: Family, v: &[Complex64]) -> Self {
        match family {
            Family::TwoF1 => FamilyParams::TwoF1 {
                alpha: v[0],
                beta: v[1],
                mu: v[2],
            },
            Family::OneF1 => FamilyParams::OneF1 {
                theta: v[0],
                alpha: v[1],
            },
            Family::TwoF0 => FamilyParams::TwoF0 {
                theta: v[0],
                alpha: v[1],
            },
            Family::ZeroF1 => FamilyParams::ZeroF1 { alpha: v[0] },
            Family::Gegenbauer => FamilyParams::Gegenbauer {
                alpha: v[0],
                lambda: v[1],
            },
            Family::Hermite => FamilyParams::Hermite { lambda: v[0] },
        }
    }

    /// Classical parameters, in the order of `classical_param_names`.
    pub fn classical(&self) -> Vec<Complex64> {
        let one = c64(1.0, 0.0);
        match *self {
            FamilyParams::TwoF1 { alpha, beta, mu } => {
                let a = (one + alpha + beta - mu) / 2.0;
                let b = (one + alpha + beta + mu) / 2.0;
                let c = one + alpha;
                vec![a, b, c]
            }
            FamilyParams::OneF1 { theta, alpha } => {
                let a = (one + alpha + theta) / 2.0;
                let c = one + alpha;
                vec![a, c]
            }
            FamilyParams::TwoF0 { theta, alpha } => {
                let a = (one + theta + alpha) / 2.0;
                let b = (one + theta - alpha) / 2.0;
                vec![a, b]
            }
            FamilyParams::ZeroF1 { alpha } => vec![one + alpha],
            FamilyParams::Gegenbauer { alpha, lambda } => {
                let a = c64(0.5, 0.0) + alpha - lambda;
                let b = c64(0.5, 0.0) + alpha + lambda;
                vec![a, b]
            }
            FamilyParams::Hermite { lambda } => vec![lambda + 0.5],
        }
    }

    pub fn from_classical(family: Family, v: &[Complex64]) -> Self {
        let one = c64(1.0, 0.0);
        match family {
            Family::TwoF1 => {
                let (a, b, c) = (v[0], v[1], v[2]);
                FamilyParams::TwoF1 {
                    alpha: c - one,
                    beta: a + b - c,
                    mu: b - a,
                }
            }
            Family::OneF1 => {
                let (a, c) = (v[0], v[1]);
                FamilyParams::OneF1 {
                    theta: 2.0 * a - c,
                    alpha: c - one,
                }
            }
            Family::TwoF0 => {
                let (a, b) = (v[0], v[1]);
                FamilyParams::TwoF0 {
                    theta: a + b - one,
                    alpha: a - b,
                }
            }
            Family::ZeroF1 => FamilyParams::ZeroF1 { alpha: v[0] - one },
            Family::Gegenbauer => {
                let (a, b) = (v[0], v[1]);
                FamilyParams::Gegenbauer {
                    alpha: (a + b - one) / 2.0,
                    lambda: (b - a) / 2.0,
                }
            }
            Family::Hermite => FamilyParams::Hermite {
                lambda: v[0] - 0.5,
            },
        }
    }

    /// Convenience constructors in classical coordinates.
    pub fn two_f1(a: Complex64, b: Complex64, c: Complex64) -> Self {
        Self::from_classical(Family::TwoF1, &[a, b, c])
    }
    pub fn one_f1(a: Complex64, c: Complex64) -> Self {
        Self::from_classical(Family::OneF1, &[a, c])
    }
    pub fn two_f0(a: Complex64, b: Complex64) -> Self {
        Self::from_classical(Family::TwoF0, &[a, b])
    }
    pub fn zero_f1(c: Complex64) -> Self {
        Self::from_classical(Family::ZeroF1, &[c])
    }
    pub fn gegenbauer_lie(alpha: Complex64, lambda: Complex64) -> Self {
        FamilyParams::Gegenbauer { alpha, lambda }
    }
    pub fn hermite_classical(a: Complex64) -> Self {
        Self::from_classical(Family::Hermite, &[a])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_lie_round_trip() {
        let fams = [
            Family::TwoF1,
            Family::OneF1,
            Family::TwoF0,
            Family::ZeroF1,
            Family::Gegenbauer,
            Family::Hermite,
        ];
        for fam in fams {
            let n = fam.lie_param_names().len();
            let lie: Vec<Complex64> = (0..n).map(|k| c64(0.3 + k as f64, 0.1 * k as f64)).collect();
            let p = FamilyParams::from_lie(fam, &lie);
            let back = FamilyParams::from_classical(fam, &p.classical());
            for (x, y) in p.lie().iter().zip(back.lie().iter()) {
                assert!((x - y).norm() < 1e-14, "{fam:?}");
            }
        }
    }

    #[test]
    fn table_spot_values() {
        // 2F1: a=(1+alpha+beta-mu)/2 etc.
        let p = FamilyParams::two_f1(c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0));
        match p {
            FamilyParams::TwoF1 { alpha, beta, mu } => {
                assert_eq!(alpha, c64(2.0, 0.0));
                assert_eq!(beta, c64(0.0, 0.0));
                assert_eq!(mu, c64(1.0, 0.0));
            }
            _ => unreachable!(),
        }
        // Gegenbauer a = 1/2 + alpha - lambda, b = 1/2 + alpha + lambda
        let p = FamilyParams::gegenbauer_lie(c64(1.0, 0.0), c64(0.5, 0.0));
        let cl = p.classical();
        assert_eq!(cl[0], c64(1.0, 0.0));
        assert_eq!(cl[1], c64(2.0, 0.0));
    }
}
