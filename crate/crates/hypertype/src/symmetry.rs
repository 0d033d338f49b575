//! Discrete symmetry groups of the six families, as executable
//! transformations: signed permutation of the Lie parameters, an admissible
//! point substitution, and a structural prefactor. The 2F1 group also
//! carries the full table of 24 expressions for the six standard solutions.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::numeric::{c64, pow_principal};
use crate::params::{Family, FamilyParams};
use crate::poly::Poly;
use crate::series::{hyp2f1_opt, SolutionKind};
use crate::{Error, Result};

/// Linear expression konst + sum coeffs[i] * p[i] over the Lie parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct LinExpr {
    pub konst: f64,
    pub coeffs: Vec<f64>,
}

impl LinExpr {
    pub fn new(konst: f64, coeffs: &[f64]) -> Self {
        LinExpr { konst, coeffs: coeffs.to_vec() }
    }

    pub fn eval(&self, p: &[Complex64]) -> Complex64 {
        let mut v = c64(self.konst, 0.0);
        for (c, x) in self.coeffs.iter().zip(p) {
            v += c * x;
        }
        v
    }
}

/// A factor base(z)^{exponent(params)}; the base is a polynomial of degree <= 2.
#[derive(Debug, Clone)]
pub struct PrefactorTerm {
    pub base: Poly,
    pub exponent: LinExpr,
}

/// Product of power terms times exp(exp_part(z)); exponents are linear in
/// the source Lie parameters, so the log-derivative is rational.
#[derive(Debug, Clone)]
pub struct Prefactor {
    pub terms: Vec<PrefactorTerm>,
    pub exp_part: Poly,
}

impl Prefactor {
    pub fn one() -> Self {
        Prefactor { terms: vec![], exp_part: Poly::zero() }
    }

    fn power(base: Poly, exponent: LinExpr) -> Self {
        Prefactor { terms: vec![PrefactorTerm { base, exponent }], exp_part: Poly::zero() }
    }

    fn and_power(mut self, base: Poly, exponent: LinExpr) -> Self {
        self.terms.push(PrefactorTerm { base, exponent });
        self
    }

    fn exponential(exp_part: Poly) -> Self {
        Prefactor { terms: vec![], exp_part }
    }

    fn and_exp(mut self, exp_part: Poly) -> Self {
        self.exp_part = self.exp_part.add(&exp_part);
        self
    }

    /// Principal-branch value; errors if a base lands on its branch cut.
    pub fn eval(&self, p: &[Complex64], z: Complex64) -> Result<Complex64> {
        let mut v = self.exp_part.eval(z).exp();
        for t in &self.terms {
            v *= pow_principal(t.base.eval(z), t.exponent.eval(p))?;
        }
        Ok(v)
    }

    /// d/dz log(prefactor): rational, branch-independent.
    pub fn log_deriv(&self, p: &[Complex64], z: Complex64) -> Complex64 {
        let mut v = self.exp_part.derivative().eval(z);
        for t in &self.terms {
            v += t.exponent.eval(p) * t.base.derivative().eval(z) / t.base.eval(z);
        }
        v
    }

    /// d²/dz² log(prefactor).
    fn log_deriv2(&self, p: &[Complex64], z: Complex64) -> Complex64 {
        let d2 = self.exp_part.derivative().derivative();
        let mut v = d2.eval(z);
        for t in &self.terms {
            let b = t.base.eval(z);
            let b1 = t.base.derivative().eval(z);
            let b2 = t.base.derivative().derivative().eval(z);
            v += t.exponent.eval(p) * (b2 * b - b1 * b1) / (b * b);
        }
        v
    }
}

/// Point substitutions appearing in the symmetry tables.
#[derive(Debug, Clone, PartialEq)]
pub enum PointMap {
    /// (m0 z + m1)/(m2 z + m3)
    Mobius([Complex64; 4]),
    /// sign · z / sqrt(z² - 1)
    Whipple { sign: f64 },
}

impl PointMap {
    pub fn identity() -> Self {
        PointMap::mobius(1.0, 0.0, 0.0, 1.0)
    }

    fn mobius(a: f64, b: f64, c: f64, d: f64) -> Self {
        PointMap::Mobius([c64(a, 0.0), c64(b, 0.0), c64(c, 0.0), c64(d, 0.0)])
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            PointMap::Mobius(m) => (m[0] * z + m[1]) / (m[2] * z + m[3]),
            PointMap::Whipple { sign } => sign * z / (z * z - 1.0).sqrt(),
        }
    }

    /// First two derivatives of the map.
    pub fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        match self {
            PointMap::Mobius(m) => {
                let det = m[0] * m[3] - m[1] * m[2];
                let den = m[2] * z + m[3];
                let w = (m[0] * z + m[1]) / den;
                (w, det / (den * den), -2.0 * m[2] * det / (den * den * den))
            }
            PointMap::Whipple { sign } => {
                let s = (z * z - 1.0).sqrt();
                let w = sign * z / s;
                let w1 = -sign / (s * s * s);
                let w2 = 3.0 * sign * z / (s * s * s * s * s);
                (w, w1, w2)
            }
        }
    }
}

/// One element of a family's discrete symmetry group. If f solves the
/// equation with parameters p, then prefactor(z; p) · f(point_map(z))
/// solves the equation with parameters apply(self, p).
#[derive(Debug, Clone)]
pub struct SymmetryElement {
    pub family: Family,
    pub label: String,
    /// target[i] = signs[i] · source[perm[i]]
    pub perm: Vec<usize>,
    pub signs: Vec<f64>,
    pub point_map: PointMap,
    pub prefactor: Prefactor,
    /// the rational cofactor c(z) in the operator conjugation identity
    pub cofactor: Poly,
}

#[derive(Debug, Clone)]
pub struct SymmetryGroup {
    pub family: Family,
    pub elements: Vec<SymmetryElement>,
}

/// Signed-permutation action of an element on the Lie parameters.
pub fn apply(elem: &SymmetryElement, params: &FamilyParams) -> FamilyParams {
    let p = params.lie();
    let q: Vec<Complex64> = elem
        .perm
        .iter()
        .zip(&elem.signs)
        .map(|(&j, &s)| s * p[j])
        .collect();
    FamilyParams::from_lie(elem.family, &q)
}

/// Descriptor of a transformed solution: prefactor(z)·F_{params}(argument)
/// solves the equation the element was applied to.
#[derive(Debug, Clone, Copy)]
pub struct TransformedSolution {
    pub params: FamilyParams,
    pub prefactor: Complex64,
    pub argument: Complex64,
}

/// Transform a solution of the equation with `params` through `elem`,
/// evaluated at the point z. The result describes a solution of the
/// equation with the mapped parameters.
pub fn transform_solution(
    elem: &SymmetryElement,
    params: &FamilyParams,
    z: Complex64,
) -> Result<TransformedSolution> {
    if params.family() != elem.family {
        return Err(Error::Domain("element and parameters belong to different families".into()));
    }
    let p = params.lie();
    Ok(TransformedSolution {
        params: apply(elem, params),
        prefactor: elem.prefactor.eval(&p, z)?,
        argument: elem.point_map.eval(z),
    })
}

fn lin(konst: f64, coeffs: &[f64]) -> LinExpr {
    LinExpr::new(konst, coeffs)
}

fn elem(
    family: Family,
    label: &str,
    perm: &[usize],
    signs: &[f64],
    point_map: PointMap,
    prefactor: Prefactor,
    cofactor: Poly,
) -> SymmetryElement {
    SymmetryElement {
        family,
        label: label.to_string(),
        perm: perm.to_vec(),
        signs: signs.to_vec(),
        point_map,
        prefactor,
        cofactor,
    }
}

fn minus_z() -> Poly {
    Poly::from_real(&[0.0, -1.0])
}

fn z_poly() -> Poly {
    Poly::from_real(&[0.0, 1.0])
}

fn z_minus_1() -> Poly {
    Poly::from_real(&[-1.0, 1.0])
}

fn one_minus_z() -> Poly {
    Poly::from_real(&[1.0, -1.0])
}

fn z2_minus_1() -> Poly {
    Poly::from_real(&[-1.0, 0.0, 1.0])
}

fn one() -> Poly {
    Poly::from_real(&[1.0])
}

fn two_f1_group() -> Vec<SymmetryElement> {
    let fam = Family::TwoF1;
    let mut v = Vec::with_capacity(48);
    // (label, perm, signs, mobius (a,b,c,d), prefactor terms, cofactor)
    // prefactor exponents are over (alpha, beta, mu) of the source
    struct Row {
        label: &'static str,
        perm: [usize; 3],
        signs: [f64; 3],
        map: (f64, f64, f64, f64),
        pre: Vec<(Poly, LinExpr)>,
        cof: Poly,
    }
    let half = 0.5;
    let rows = vec![
        // w = z
        Row { label: "z: id", perm: [0, 1, 2], signs: [1.0, 1.0, 1.0], map: (1.0, 0.0, 0.0, 1.0), pre: vec![], cof: one() },
        Row { label: "z: (-a,-b,m)", perm: [0, 1, 2], signs: [-1.0, -1.0, 1.0], map: (1.0, 0.0, 0.0, 1.0),
            pre: vec![(minus_z(), lin(0.0, &[1.0, 0.0, 0.0])), (z_minus_1(), lin(0.0, &[0.0, 1.0, 0.0]))], cof: one() },
        Row { label: "z: (a,-b,-m)", perm: [0, 1, 2], signs: [1.0, -1.0, -1.0], map: (1.0, 0.0, 0.0, 1.0),
            pre: vec![(z_minus_1(), lin(0.0, &[0.0, 1.0, 0.0]))], cof: one() },
        Row { label: "z: (-a,b,-m)", perm: [0, 1, 2], signs: [-1.0, 1.0, -1.0], map: (1.0, 0.0, 0.0, 1.0),
            pre: vec![(minus_z(), lin(0.0, &[1.0, 0.0, 0.0]))], cof: one() },
        // w = 1 - z
        Row { label: "1-z: (b,a,m)", perm: [1, 0, 2], signs: [1.0, 1.0, 1.0], map: (-1.0, 1.0, 0.0, 1.0), pre: vec![], cof: one() },
        Row { label: "1-z: (-b,-a,m)", perm: [1, 0, 2], signs: [-1.0, -1.0, 1.0], map: (-1.0, 1.0, 0.0, 1.0),
            pre: vec![(z_minus_1(), lin(0.0, &[1.0, 0.0, 0.0])), (minus_z(), lin(0.0, &[0.0, 1.0, 0.0]))], cof: one() },
        Row { label: "1-z: (b,-a,-m)", perm: [1, 0, 2], signs: [1.0, -1.0, -1.0], map: (-1.0, 1.0, 0.0, 1.0),
            pre: vec![(z_minus_1(), lin(0.0, &[1.0, 0.0, 0.0]))], cof: one() },
        Row { label: "1-z: (-b,a,-m)", perm: [1, 0, 2], signs: [-1.0, 1.0, -1.0], map: (-1.0, 1.0, 0.0, 1.0),
            pre: vec![(minus_z(), lin(0.0, &[0.0, 1.0, 0.0]))], cof: one() },
        // w = 1/z, cofactor -z
        Row { label: "1/z: (m,b,a)", perm: [2, 1, 0], signs: [1.0, 1.0, 1.0], map: (0.0, 1.0, 1.0, 0.0),
            pre: vec![(minus_z(), lin(-half, &[-half, -half, -half]))], cof: minus_z() },
        Row { label: "1/z: (-m,-b,a)", perm: [2, 1, 0], signs: [-1.0, -1.0, 1.0], map: (0.0, 1.0, 1.0, 0.0),
            pre: vec![(minus_z(), lin(-half, &[-half, -half, half])), (z_minus_1(), lin(0.0, &[0.0, 1.0, 0.0]))], cof: minus_z() },
        Row { label: "1/z: (m,-b,-a)", perm: [2, 1, 0], signs: [1.0, -1.0, -1.0], map: (0.0, 1.0, 1.0, 0.0),
            pre: vec![(minus_z(), lin(-half, &[-half, -half, -half])), (z_minus_1(), lin(0.0, &[0.0, 1.0, 0.0]))], cof: minus_z() },
        Row { label: "1/z: (-m,b,-a)", perm: [2, 1, 0], signs: [-1.0, 1.0, -1.0], map: (0.0, 1.0, 1.0, 0.0),
            pre: vec![(minus_z(), lin(-half, &[-half, -half, half]))], cof: minus_z() },
        // w = 1 - 1/z, cofactor -z
        Row { label: "1-1/z: (m,a,b)", perm: [2, 0, 1], signs: [1.0, 1.0, 1.0], map: (1.0, -1.0, 1.0, 0.0),
            pre: vec![(minus_z(), lin(-half, &[-half, -half, -half]))], cof: minus_z() },
        Row { label: "1-1/z: (-m,-a,b)", perm: [2, 0, 1], signs: [-1.0, -1.0, 1.0], map: (1.0, -1.0, 1.0, 0.0),
            pre: vec![(minus_z(), lin(-half, &[-half, -half, half])), (z_minus_1(), lin(0.0, &[1.0, 0.0, 0.0]))], cof: minus_z() },
        Row { label: "1-1/z: (m,-a,-b)", perm: [2, 0, 1], signs: [1.0, -1.0, -1.0], map: (1.0, -1.0, 1.0, 0.0),
            pre: vec![(minus_z(), lin(-half, &[-half, -half, -half])), (z_minus_1(), lin(0.0, &[1.0, 0.0, 0.0]))], cof: minus_z() },
        Row { label: "1-1/z: (-m,a,-b)", perm: [2, 0, 1], signs: [-1.0, 1.0, -1.0], map: (1.0, -1.0, 1.0, 0.0),
            pre: vec![(minus_z(), lin(-half, &[-half, -half, half]))], cof: minus_z() },
        // w = 1/(1-z), cofactor z-1
        Row { label: "1/(1-z): (b,m,a)", perm: [1, 2, 0], signs: [1.0, 1.0, 1.0], map: (0.0, 1.0, -1.0, 1.0),
            pre: vec![(z_minus_1(), lin(-half, &[-half, -half, -half]))], cof: z_minus_1() },
        Row { label: "1/(1-z): (-b,-m,a)", perm: [1, 2, 0], signs: [-1.0, -1.0, 1.0], map: (0.0, 1.0, -1.0, 1.0),
            pre: vec![(minus_z(), lin(0.0, &[0.0, 1.0, 0.0])), (z_minus_1(), lin(-half, &[-half, -half, half]))], cof: z_minus_1() },
        Row { label: "1/(1-z): (b,-m,-a)", perm: [1, 2, 0], signs: [1.0, -1.0, -1.0], map: (0.0, 1.0, -1.0, 1.0),
            pre: vec![(z_minus_1(), lin(-half, &[-half, -half, half]))], cof: z_minus_1() },
        Row { label: "1/(1-z): (-b,m,-a)", perm: [1, 2, 0], signs: [-1.0, 1.0, -1.0], map: (0.0, 1.0, -1.0, 1.0),
            pre: vec![(minus_z(), lin(0.0, &[0.0, 1.0, 0.0])), (z_minus_1(), lin(-half, &[-half, -half, -half]))], cof: z_minus_1() },
        // w = z/(z-1), cofactor z-1
        Row { label: "z/(z-1): (a,m,b)", perm: [0, 2, 1], signs: [1.0, 1.0, 1.0], map: (1.0, 0.0, 1.0, -1.0),
            pre: vec![(z_minus_1(), lin(-half, &[-half, -half, -half]))], cof: z_minus_1() },
        Row { label: "z/(z-1): (-a,-m,b)", perm: [0, 2, 1], signs: [-1.0, -1.0, 1.0], map: (1.0, 0.0, 1.0, -1.0),
            pre: vec![(minus_z(), lin(0.0, &[1.0, 0.0, 0.0])), (z_minus_1(), lin(-half, &[-half, -half, half]))], cof: z_minus_1() },
        Row { label: "z/(z-1): (a,-m,-b)", perm: [0, 2, 1], signs: [1.0, -1.0, -1.0], map: (1.0, 0.0, 1.0, -1.0),
            pre: vec![(z_minus_1(), lin(-half, &[-half, -half, half]))], cof: z_minus_1() },
        Row { label: "z/(z-1): (-a,m,-b)", perm: [0, 2, 1], signs: [-1.0, 1.0, -1.0], map: (1.0, 0.0, 1.0, -1.0),
            pre: vec![(minus_z(), lin(0.0, &[1.0, 0.0, 0.0])), (z_minus_1(), lin(-half, &[-half, -half, -half]))], cof: z_minus_1() },
    ];
    for flip in [1.0_f64, -1.0] {
        for r in &rows {
            let mut pre = Prefactor::one();
            for (base, exp) in &r.pre {
                pre = pre.and_power(base.clone(), exp.clone());
            }
            let signs = [r.signs[0], r.signs[1], r.signs[2] * flip];
            let label = if flip > 0.0 {
                r.label.to_string()
            } else {
                format!("{} * mu-flip", r.label)
            };
            v.push(SymmetryElement {
                family: fam,
                label,
                perm: r.perm.to_vec(),
                signs: signs.to_vec(),
                point_map: PointMap::mobius(r.map.0, r.map.1, r.map.2, r.map.3),
                prefactor: pre,
                cofactor: r.cof.clone(),
            });
        }
    }
    v
}

fn one_f1_group() -> Vec<SymmetryElement> {
    let fam = Family::OneF1;
    vec![
        elem(fam, "z: id", &[0, 1], &[1.0, 1.0], PointMap::identity(), Prefactor::one(), one()),
        elem(
            fam,
            "z: alpha -> -alpha",
            &[0, 1],
            &[1.0, -1.0],
            PointMap::identity(),
            Prefactor::power(z_poly(), lin(0.0, &[0.0, 1.0])),
            one(),
        ),
        elem(
            fam,
            "-z: theta -> -theta",
            &[0, 1],
            &[-1.0, 1.0],
            PointMap::mobius(-1.0, 0.0, 0.0, 1.0),
            Prefactor::exponential(z_poly()),
            Poly::from_real(&[-1.0]),
        ),
        elem(
            fam,
            "-z: both flipped",
            &[0, 1],
            &[-1.0, -1.0],
            PointMap::mobius(-1.0, 0.0, 0.0, 1.0),
            Prefactor::exponential(z_poly()).and_power(z_poly(), lin(0.0, &[0.0, 1.0])),
            Poly::from_real(&[-1.0]),
        ),
    ]
}

fn zero_f1_group() -> Vec<SymmetryElement> {
    let fam = Family::ZeroF1;
    vec![
        elem(fam, "id", &[0], &[1.0], PointMap::identity(), Prefactor::one(), one()),
        elem(
            fam,
            "alpha -> -alpha",
            &[0],
            &[-1.0],
            PointMap::identity(),
            Prefactor::power(z_poly(), lin(0.0, &[1.0])),
            one(),
        ),
    ]
}

fn gegenbauer_group() -> Vec<SymmetryElement> {
    let fam = Family::Gegenbauer;
    let mut v = Vec::with_capacity(8);
    for s in [1.0_f64, -1.0] {
        let w = PointMap::mobius(s, 0.0, 0.0, 1.0);
        let sl = format!("{}z", if s > 0.0 { "" } else { "-" });
        v.push(elem(fam, &format!("{sl}: (a, {s}l)"), &[0, 1], &[1.0, s], w.clone(), Prefactor::one(), one()));
        v.push(elem(
            fam,
            &format!("{sl}: (-a, {s}l) weight-conjugated"),
            &[0, 1],
            &[-1.0, s],
            w,
            Prefactor::power(z2_minus_1(), lin(0.0, &[1.0, 0.0])),
            one(),
        ));
        // Whipple substitutions swap alpha and lambda
        let w = PointMap::Whipple { sign: s };
        v.push(elem(
            fam,
            &format!("whipple {sl}: (l, {s}a)"),
            &[1, 0],
            &[1.0, s],
            w.clone(),
            Prefactor::power(z2_minus_1(), lin(-0.25, &[-0.5, -0.5])),
            z2_minus_1(),
        ));
        v.push(elem(
            fam,
            &format!("whipple {sl}: (-l, {s}a)"),
            &[1, 0],
            &[-1.0, s],
            w,
            Prefactor::power(z2_minus_1(), lin(-0.25, &[-0.5, 0.5])),
            z2_minus_1(),
        ));
    }
    v
}

fn hermite_group() -> Vec<SymmetryElement> {
    let fam = Family::Hermite;
    let i = c64(0.0, 1.0);
    let mk_mobius = |a: Complex64| PointMap::Mobius([a, c64(0.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0)]);
    let z_sq = Poly::from_real(&[0.0, 0.0, 1.0]);
    vec![
        elem(fam, "z", &[0], &[1.0], mk_mobius(c64(1.0, 0.0)), Prefactor::one(), one()),
        elem(fam, "-z", &[0], &[1.0], mk_mobius(c64(-1.0, 0.0)), Prefactor::one(), one()),
        elem(
            fam,
            "iz: lambda flipped",
            &[0],
            &[-1.0],
            mk_mobius(i),
            Prefactor::exponential(z_sq.clone()),
            Poly::from_real(&[-1.0]),
        ),
        elem(
            fam,
            "-iz: lambda flipped",
            &[0],
            &[-1.0],
            mk_mobius(-i),
            Prefactor::exponential(z_sq),
            Poly::from_real(&[-1.0]),
        ),
    ]
}

static GROUPS: OnceLock<Vec<SymmetryGroup>> = OnceLock::new();

/// The complete discrete symmetry group of a family. 2F0 shares the 1F1
/// group through the at-infinity solutions and has the trivial group here.
pub fn enumerate_group(family: Family) -> &'static SymmetryGroup {
    let groups = GROUPS.get_or_init(|| {
        vec![
            SymmetryGroup { family: Family::TwoF1, elements: two_f1_group() },
            SymmetryGroup { family: Family::OneF1, elements: one_f1_group() },
            SymmetryGroup {
                family: Family::TwoF0,
                elements: vec![elem(
                    Family::TwoF0,
                    "id",
                    &[0, 1],
                    &[1.0, 1.0],
                    PointMap::identity(),
                    Prefactor::one(),
                    one(),
                )],
            },
            SymmetryGroup { family: Family::ZeroF1, elements: zero_f1_group() },
            SymmetryGroup { family: Family::Gegenbauer, elements: gegenbauer_group() },
            SymmetryGroup { family: Family::Hermite, elements: hermite_group() },
        ]
    });
    groups.iter().find(|g| g.family == family).unwrap()
}

/// One entry of the table of standard-solution expressions:
/// prefactor(z) · F_{triple}(argument(z)).
#[derive(Debug, Clone)]
pub struct SolutionExpression {
    pub prefactor: Prefactor,
    pub triple: [LinExpr; 3],
    pub argument: PointMap,
}

impl SolutionExpression {
    /// Evaluate by direct series summation (argument must satisfy |w| < 0.95).
    pub fn eval(&self, params: &FamilyParams, z: Complex64) -> Result<Complex64> {
        let p = params.lie();
        let alpha = self.triple[0].eval(&p);
        let beta = self.triple[1].eval(&p);
        let mu = self.triple[2].eval(&p);
        let a = (1.0 + alpha + beta - mu) / 2.0;
        let b = (1.0 + alpha + beta + mu) / 2.0;
        let c = alpha + 1.0;
        let w = self.argument.eval(z);
        let f = hyp2f1_opt(a, b, c, w, 1e-15, crate::numeric::DEFAULT_MAX_TERMS)?;
        Ok(self.prefactor.eval(&p, z)? * f.value)
    }
}

/// The four equivalent expressions for one 2F1 standard solution.
pub fn kummer_table(kind: SolutionKind) -> Result<Vec<SolutionExpression>> {
    // triples and prefactor exponents over source (alpha, beta, mu)
    let id = PointMap::identity();
    let z_over_zm1 = PointMap::mobius(1.0, 0.0, 1.0, -1.0);
    let one_m_z = PointMap::mobius(-1.0, 1.0, 0.0, 1.0);
    let one_m_inv = PointMap::mobius(1.0, -1.0, 1.0, 0.0);
    let inv = PointMap::mobius(0.0, 1.0, 1.0, 0.0);
    let inv_one_m = PointMap::mobius(0.0, 1.0, -1.0, 1.0);
    let t = |a: (f64, [f64; 3]), b: (f64, [f64; 3]), m: (f64, [f64; 3])| {
        [lin(a.0, &a.1), lin(b.0, &b.1), lin(m.0, &m.1)]
    };
    let expr = |prefactor: Prefactor, triple: [LinExpr; 3], argument: PointMap| SolutionExpression {
        prefactor,
        triple,
        argument,
    };
    let h = 0.5;
    let rows = match kind {
        SolutionKind::At0Index0 => vec![
            expr(Prefactor::one(), t((0.0, [1., 0., 0.]), (0.0, [0., 1., 0.]), (0.0, [0., 0., 1.])), id.clone()),
            expr(Prefactor::power(one_minus_z(), lin(0.0, &[0., -1., 0.])),
                t((0.0, [1., 0., 0.]), (0.0, [0., -1., 0.]), (0.0, [0., 0., -1.])), id.clone()),
            expr(Prefactor::power(one_minus_z(), lin(-h, &[-h, -h, h])),
                t((0.0, [1., 0., 0.]), (0.0, [0., 0., -1.]), (0.0, [0., -1., 0.])), z_over_zm1.clone()),
            expr(Prefactor::power(one_minus_z(), lin(-h, &[-h, -h, -h])),
                t((0.0, [1., 0., 0.]), (0.0, [0., 0., 1.]), (0.0, [0., 1., 0.])), z_over_zm1),
        ],
        SolutionKind::At0IndexAlpha => vec![
            expr(Prefactor::power(z_poly(), lin(0.0, &[-1., 0., 0.])),
                t((0.0, [-1., 0., 0.]), (0.0, [0., 1., 0.]), (0.0, [0., 0., -1.])), id.clone()),
            expr(Prefactor::power(z_poly(), lin(0.0, &[-1., 0., 0.])).and_power(one_minus_z(), lin(0.0, &[0., -1., 0.])),
                t((0.0, [-1., 0., 0.]), (0.0, [0., -1., 0.]), (0.0, [0., 0., 1.])), id.clone()),
            expr(Prefactor::power(z_poly(), lin(0.0, &[-1., 0., 0.])).and_power(one_minus_z(), lin(-h, &[h, -h, h])),
                t((0.0, [-1., 0., 0.]), (0.0, [0., 0., -1.]), (0.0, [0., 1., 0.])), z_over_zm1.clone()),
            expr(Prefactor::power(z_poly(), lin(0.0, &[-1., 0., 0.])).and_power(one_minus_z(), lin(-h, &[h, -h, -h])),
                t((0.0, [-1., 0., 0.]), (0.0, [0., 0., 1.]), (0.0, [0., -1., 0.])), z_over_zm1),
        ],
        SolutionKind::At1Index0 => vec![
            expr(Prefactor::one(), t((0.0, [0., 1., 0.]), (0.0, [1., 0., 0.]), (0.0, [0., 0., 1.])), one_m_z.clone()),
            expr(Prefactor::power(z_poly(), lin(0.0, &[-1., 0., 0.])),
                t((0.0, [0., 1., 0.]), (0.0, [-1., 0., 0.]), (0.0, [0., 0., -1.])), one_m_z),
            expr(Prefactor::power(z_poly(), lin(-h, &[-h, -h, h])),
                t((0.0, [0., 1., 0.]), (0.0, [0., 0., -1.]), (0.0, [-1., 0., 0.])), one_m_inv.clone()),
            expr(Prefactor::power(z_poly(), lin(-h, &[-h, -h, -h])),
                t((0.0, [0., 1., 0.]), (0.0, [0., 0., 1.]), (0.0, [1., 0., 0.])), one_m_inv),
        ],
        SolutionKind::At1IndexBeta => vec![
            expr(Prefactor::power(one_minus_z(), lin(0.0, &[0., -1., 0.])),
                t((0.0, [0., -1., 0.]), (0.0, [1., 0., 0.]), (0.0, [0., 0., -1.])), one_m_z.clone()),
            expr(Prefactor::power(z_poly(), lin(0.0, &[-1., 0., 0.])).and_power(one_minus_z(), lin(0.0, &[0., -1., 0.])),
                t((0.0, [0., -1., 0.]), (0.0, [-1., 0., 0.]), (0.0, [0., 0., 1.])), one_m_z),
            expr(Prefactor::power(z_poly(), lin(-h, &[-h, h, -h])).and_power(one_minus_z(), lin(0.0, &[0., -1., 0.])),
                t((0.0, [0., -1., 0.]), (0.0, [0., 0., 1.]), (0.0, [-1., 0., 0.])), one_m_inv.clone()),
            expr(Prefactor::power(z_poly(), lin(-h, &[-h, h, h])).and_power(one_minus_z(), lin(0.0, &[0., -1., 0.])),
                t((0.0, [0., -1., 0.]), (0.0, [0., 0., -1.]), (0.0, [1., 0., 0.])), one_m_inv),
        ],
        SolutionKind::AtInfA => vec![
            expr(Prefactor::power(minus_z(), lin(-h, &[-h, -h, h])),
                t((0.0, [0., 0., -1.]), (0.0, [0., 1., 0.]), (0.0, [-1., 0., 0.])), inv.clone()),
            expr(Prefactor::power(minus_z(), lin(-h, &[-h, h, h])).and_power(one_minus_z(), lin(0.0, &[0., -1., 0.])),
                t((0.0, [0., 0., -1.]), (0.0, [0., -1., 0.]), (0.0, [1., 0., 0.])), inv),
            expr(Prefactor::power(one_minus_z(), lin(-h, &[-h, -h, h])),
                t((0.0, [0., 0., -1.]), (0.0, [1., 0., 0.]), (0.0, [0., -1., 0.])), inv_one_m.clone()),
            expr(Prefactor::power(minus_z(), lin(0.0, &[-1., 0., 0.])).and_power(one_minus_z(), lin(-h, &[h, -h, h])),
                t((0.0, [0., 0., -1.]), (0.0, [-1., 0., 0.]), (0.0, [0., 1., 0.])), inv_one_m),
        ],
        SolutionKind::AtInfB => vec![
            expr(Prefactor::power(minus_z(), lin(-h, &[-h, -h, -h])),
                t((0.0, [0., 0., 1.]), (0.0, [0., 1., 0.]), (0.0, [1., 0., 0.])), inv.clone()),
            expr(Prefactor::power(minus_z(), lin(-h, &[-h, h, -h])).and_power(one_minus_z(), lin(0.0, &[0., -1., 0.])),
                t((0.0, [0., 0., 1.]), (0.0, [0., -1., 0.]), (0.0, [-1., 0., 0.])), inv),
            expr(Prefactor::power(one_minus_z(), lin(-h, &[-h, -h, -h])),
                t((0.0, [0., 0., 1.]), (0.0, [1., 0., 0.]), (0.0, [0., 1., 0.])), inv_one_m.clone()),
            expr(Prefactor::power(minus_z(), lin(0.0, &[-1., 0., 0.])).and_power(one_minus_z(), lin(-h, &[h, -h, -h])),
                t((0.0, [0., 0., 1.]), (0.0, [-1., 0., 0.]), (0.0, [0., -1., 0.])), inv_one_m),
        ],
        _ => return Err(Error::Domain(format!("{kind:?} is not a 2F1 solution"))),
    };
    Ok(rows)
}

/// Residual of the operator conjugation identity of an element, tested by
/// applying both sides to a cubic polynomial at the point z with generic
/// parameters p. Zero (to rounding) for every catalogued element.
pub fn conjugation_residual(elem: &SymmetryElement, p: &[Complex64], z: Complex64) -> f64 {
    use crate::operators::HTOperator;
    let params = FamilyParams::from_lie(elem.family, p);
    let target = apply(elem, &params);
    let op_src = HTOperator::from_params(&params);
    let op_tgt = HTOperator::from_params(&target);

    // test function u(w) = w^3 + (2+i) w - 1
    let u = |w: Complex64| w * w * w + c64(2.0, 1.0) * w - 1.0;
    let u1 = |w: Complex64| 3.0 * w * w + c64(2.0, 1.0);
    let u2 = |w: Complex64| 6.0 * w;

    let (w, w1, w2) = elem.point_map.jet(z);
    let l = elem.prefactor.log_deriv(p, z);
    let l1 = elem.prefactor.log_deriv2(p, z);
    // g = pre·(u∘w), computed relative to pre (the operator identity is
    // homogeneous in pre, so divide it out and work with g/pre)
    let g0 = u(w);
    let g1 = l * u(w) + u1(w) * w1;
    let g2 = (l1 + l * l) * u(w) + 2.0 * l * u1(w) * w1 + u2(w) * w1 * w1 + u1(w) * w2;
    let lhs = op_tgt.apply_jet(z, g0, g1, g2) * elem.cofactor.eval(z);
    let rhs = op_src.apply_jet(w, u(w), u1(w), u2(w));
    (lhs - rhs).norm() / (1.0 + rhs.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{standard_solution, Normalization};

    fn generic(family: Family) -> Vec<Complex64> {
        let base = [c64(0.31, 0.07), c64(0.57, -0.13), c64(0.83, 0.19)];
        base[..family.lie_param_names().len()].to_vec()
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(Family::TwoF1).elements.len(), 48);
        assert_eq!(enumerate_group(Family::OneF1).elements.len(), 4);
        assert_eq!(enumerate_group(Family::ZeroF1).elements.len(), 2);
        assert_eq!(enumerate_group(Family::Gegenbauer).elements.len(), 8);
        assert_eq!(enumerate_group(Family::Hermite).elements.len(), 4);
    }

    #[test]
    fn conjugation_identity_all_elements() {
        for family in [
            Family::TwoF1,
            Family::OneF1,
            Family::ZeroF1,
            Family::Gegenbauer,
            Family::Hermite,
        ] {
            let p = generic(family);
            let g = enumerate_group(family);
            for e in &g.elements {
                for z in [c64(1.7, 0.9), c64(2.3, -1.1)] {
                    let r = conjugation_residual(e, &p, z);
                    assert!(r < 1e-10, "{family:?} '{}' at {z}: residual {r}", e.label);
                }
            }
        }
    }

    /// target[i] = signs[i]·source[perm[i]] composed across two elements.
    fn compose_perm(e2: &SymmetryElement, e1: &SymmetryElement) -> (Vec<usize>, Vec<f64>) {
        let n = e1.perm.len();
        let mut perm = vec![0; n];
        let mut signs = vec![0.0; n];
        for i in 0..n {
            perm[i] = e1.perm[e2.perm[i]];
            signs[i] = e2.signs[i] * e1.signs[e2.perm[i]];
        }
        (perm, signs)
    }

    #[test]
    fn groups_are_closed_with_inverses() {
        let samples = [c64(1.9, 0.8), c64(2.7, -0.6), c64(1.3, 1.5)];
        for family in [
            Family::TwoF1,
            Family::OneF1,
            Family::ZeroF1,
            Family::Gegenbauer,
            Family::Hermite,
        ] {
            let g = enumerate_group(family);
            let p = generic(family);
            for e1 in &g.elements {
                let q = apply(e1, &FamilyParams::from_lie(family, &p)).lie();
                for e2 in &g.elements {
                    // composite transformation: first e1 (source params p),
                    // then e2 (source params q = apply(e1, p)); the composite
                    // acts as pre2(z;q)·pre1(w2(z);p)·f(w1(w2(z)))
                    let (perm, signs) = compose_perm(e2, e1);
                    let comp_map = |z: Complex64| {
                        let w2 = e2.point_map.eval(z);
                        e1.point_map.eval(w2)
                    };
                    let comp_logd = |z: Complex64| {
                        let (w2, d2, _) = e2.point_map.jet(z);
                        e2.prefactor.log_deriv(&q, z) + e1.prefactor.log_deriv(&p, w2) * d2
                    };
                    // find a matching element (up to a constant prefactor)
                    // Gegenbauer equations are even in z, so the point maps
                    // of its table are only determined up to an overall sign
                    // and composition closes modulo the reflection z -> -z.
                    let map_matches = |e3: &SymmetryElement, z: Complex64| {
                        let d = (e3.point_map.eval(z) - comp_map(z)).norm();
                        if family == Family::Gegenbauer {
                            d < 1e-9 || (e3.point_map.eval(z) + comp_map(z)).norm() < 1e-9
                        } else {
                            d < 1e-9
                        }
                    };
                    let hit = g.elements.iter().any(|e3| {
                        e3.perm == perm
                            && e3.signs == signs
                            && samples.iter().all(|&z| {
                                map_matches(e3, z)
                                    && (e3.prefactor.log_deriv(&p, z) - comp_logd(z)).norm()
                                        < 1e-9
                            })
                    });
                    assert!(
                        hit,
                        "{family:?}: composition of '{}' then '{}' not in group",
                        e1.label, e2.label
                    );
                }
            }
        }
    }

    #[test]
    fn kummer_expressions_agree_pairwise() {
        let p = FamilyParams::TwoF1 {
            alpha: c64(0.31, 0.07),
            beta: c64(0.57, -0.13),
            mu: c64(0.83, 0.19),
        };
        let pts_near_0 = [c64(0.2, 0.15), c64(-0.1, 0.3)];
        let pts_near_1 = [c64(0.8, 0.15), c64(1.1, 0.3)];
        let pts_large = [c64(2.5, 2.0), c64(-1.5, 2.5)];
        for (kind, pts) in [
            (SolutionKind::At0Index0, pts_near_0),
            (SolutionKind::At0IndexAlpha, pts_near_0),
            (SolutionKind::At1Index0, pts_near_1),
            (SolutionKind::At1IndexBeta, pts_near_1),
            (SolutionKind::AtInfA, pts_large),
            (SolutionKind::AtInfB, pts_large),
        ] {
            let exprs = kummer_table(kind).unwrap();
            assert_eq!(exprs.len(), 4);
            for &z in &pts {
                let vals: Vec<Complex64> =
                    exprs.iter().map(|e| e.eval(&p, z).unwrap()).collect();
                for v in &vals[1..] {
                    assert!(
                        (v - vals[0]).norm() < 1e-10 * (1.0 + vals[0].norm()),
                        "{kind:?} at {z}: {v} vs {}",
                        vals[0]
                    );
                }
                // the table's first row matches the standard solution itself
                let s = standard_solution(&p, kind, Normalization::Plain, z);
                if let Ok(s) = s {
                    assert!(
                        (s.value - vals[0]).norm() < 1e-9 * (1.0 + s.value.norm()),
                        "{kind:?} at {z}: series {} vs table {}",
                        s.value,
                        vals[0]
                    );
                }
            }
        }
    }

    #[test]
    fn orbit_of_regular_solution_covers_kummer_table() {
        // Each group element, applied backwards from the regular solution,
        // produces one Kummer-table expression; all 24 appear, twice each
        // (once per sign of the third parameter).
        let p = c64(0.31, 0.07);
        let pvals = [p, c64(0.57, -0.13), c64(0.83, 0.19)];
        let all: Vec<SolutionExpression> = [
            SolutionKind::At0Index0,
            SolutionKind::At0IndexAlpha,
            SolutionKind::At1Index0,
            SolutionKind::At1IndexBeta,
            SolutionKind::AtInfA,
            SolutionKind::AtInfB,
        ]
        .iter()
        .flat_map(|&k| kummer_table(k).unwrap())
        .collect();
        assert_eq!(all.len(), 24);
        let g = enumerate_group(Family::TwoF1);
        let zs = [c64(0.3, 0.4), c64(0.45, -0.35)];
        let mut hits = vec![0usize; 24];
        for e in &g.elements {
            // source params r with apply(e, r) = pvals; the generated
            // expression is prefactor(z; r) · F_r(w(z))
            let mut r = vec![c64(0.0, 0.0); 3];
            for i in 0..3 {
                r[e.perm[i]] = pvals[i] / e.signs[i];
            }
            // structural match against a table entry: same inner parameters
            // (up to the trivial sign of the third one), same argument map,
            // same prefactor up to a multiplicative constant
            let mut matched = false;
            for (i, expr) in all.iter().enumerate() {
                let t: Vec<Complex64> = expr.triple.iter().map(|l| l.eval(&pvals)).collect();
                let triple_ok = (r[0] - t[0]).norm() < 1e-12
                    && (r[1] - t[1]).norm() < 1e-12
                    && ((r[2] - t[2]).norm() < 1e-12 || (r[2] + t[2]).norm() < 1e-12);
                let shape_ok = triple_ok
                    && zs.iter().all(|&z| {
                        (e.point_map.eval(z) - expr.argument.eval(z)).norm() < 1e-10
                            && (e.prefactor.log_deriv(&r, z)
                                - expr.prefactor.log_deriv(&pvals, z))
                                .norm()
                                < 1e-10
                    });
                if shape_ok {
                    hits[i] += 1;
                    matched = true;
                    break;
                }
            }
            assert!(matched, "element '{}' generates no table entry", e.label);
        }
        assert!(hits.iter().all(|&h| h == 2), "hits: {hits:?}");
    }

    #[test]
    fn transformed_solutions_satisfy_target_equation() {
        use crate::operators::HTOperator;
        for family in [
            Family::TwoF1,
            Family::OneF1,
            Family::ZeroF1,
            Family::Gegenbauer,
            Family::Hermite,
        ] {
            let p = generic(family);
            let params = FamilyParams::from_lie(family, &p);
            let g = enumerate_group(family);
            // base solution: a series that converges near the mapped argument
            let kind = match family {
                Family::TwoF1 | Family::OneF1 | Family::ZeroF1 => SolutionKind::At0Index0,
                Family::Gegenbauer => SolutionKind::At1Index0,
                Family::Hermite => SolutionKind::Even,
                Family::TwoF0 => unreachable!(),
            };
            for e in &g.elements {
                let target = apply(e, &params);
                // pick z so that the mapped argument stays in the series domain
                let z = match (&e.point_map, family) {
                    (PointMap::Mobius(m), Family::TwoF1) => {
                        // z = map⁻¹(w0) keeps the hypergeometric argument small
                        let w0 = c64(0.28, 0.22);
                        (m[3] * w0 - m[1]) / (-m[2] * w0 + m[0])
                    }
                    // every Gegenbauer point map is an involution: take z as
                    // the image of a point where the series at 1 converges
                    (_, Family::Gegenbauer) => e.point_map.eval(c64(1.3, 0.3)),
                    _ => c64(0.6, 0.45),
                };
                let f = |zz: Complex64| {
                    let d = transform_solution(e, &params, zz).unwrap();
                    let s = standard_solution(&params, kind, Normalization::Plain, d.argument)
                        .unwrap();
                    d.prefactor * s.value
                };
                let h = 1e-5;
                let (fm, f0, fp) = (f(z - h), f(z), f(z + h));
                let d1 = (fp - fm) / (2.0 * h);
                let d2 = (fp - 2.0 * f0 + fm) / (h * h);
                let op = HTOperator::from_params(&target);
                let r = op.apply_jet(z, f0, d1, d2);
                assert!(
                    r.norm() < 1e-4 * (1.0 + f0.norm()),
                    "{family:?} '{}': residual {}",
                    e.label,
                    r.norm()
                );
            }
        }
    }

    #[test]
    fn whipple_applied_twice_is_identity() {
        let g = enumerate_group(Family::Gegenbauer);
        let tau = g
            .elements
            .iter()
            .find(|e| matches!(e.point_map, PointMap::Whipple { sign } if sign > 0.0) && e.signs == [1.0, 1.0])
            .unwrap();
        let params = FamilyParams::Gegenbauer { alpha: c64(0.31, 0.07), lambda: c64(0.57, -0.13) };
        let z = c64(1.6, 0.4);
        let d1 = transform_solution(tau, &params, z).unwrap();
        let d2 = transform_solution(tau, &d1.params, d1.argument).unwrap();
        assert_eq!(d2.params, params);
        assert!((d2.argument - z).norm() < 1e-12);
        // net prefactor of the double application is 1
        let net = d1.prefactor * d2.prefactor;
        assert!((net - 1.0).norm() < 1e-10, "net prefactor {net}");
    }

    #[test]
    fn kummer_first_transformation_identity() {
        // e^z F(c-a; c; -z) = F(a; c; z), via the 1F1 theta-flip element
        let g = enumerate_group(Family::OneF1);
        let e = g.elements.iter().find(|e| e.signs == [-1.0, 1.0]).unwrap();
        let params = FamilyParams::OneF1 { theta: c64(0.6, 0.2), alpha: c64(0.8, -0.1) };
        let z = c64(0.7, 0.4);
        let d = transform_solution(e, &params, z).unwrap();
        let lhs = d.prefactor
            * standard_solution(&params, SolutionKind::At0Index0, Normalization::Plain, d.argument)
                .unwrap()
                .value;
        let rhs = standard_solution(&d.params, SolutionKind::At0Index0, Normalization::Plain, z)
            .unwrap()
            .value;
        assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
    }
}
