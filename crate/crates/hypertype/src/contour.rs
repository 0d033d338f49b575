//! Contour integration for branched integrands.
//!
//! The integrands that show up in the integral representations all have the
//! shape  prefactor * prod_k q_k(t)^{e_k} * exp(g(t))  with polynomial bases
//! q_k of degree at most two and g a polynomial plus finitely many pole
//! terms.  Powers are multivalued, so the argument of every base is tracked
//! continuously along the contour instead of being cut to a principal branch.
//!
//! Contours are described by a small notation: lists of anchor points,
//! bypass arcs written `u^+` / `u^-` (counterclockwise / clockwise), group
//! bypasses `(u1,u2)^+`, rays to infinity, and the kidney-shaped loop
//! `(u-0)^+` that leaves and re-enters a point at a fixed angle.  A contour
//! compiles, given the singularities of the integrand, into line, arc, ray
//! and cardioid pieces which are then integrated by adaptive Gauss-Legendre
//! quadrature with endpoint substitutions for integrable power
//! singularities.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::numeric::{c64, SeriesResult, SeriesStatus};
use crate::poly::Poly;
use crate::{Error, Result};

/// Quadrature tolerance used when the caller has no reason to pick one.
pub const DEFAULT_QUAD_TOL: f64 = 1e-11;

// ---------------------------------------------------------------------------
// contour description
// ---------------------------------------------------------------------------

/// One stop in a contour description.
#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    /// A finite anchor point the contour passes through.
    Point(Complex64),
    /// Small circular detour around one point, or around a group of points
    /// on a common circle.  `ccw` is the traversal sense.
    Bypass { points: Vec<Complex64>, ccw: bool },
    /// The contour starts or ends at infinity in the direction `angle`.
    Infinity { angle: f64 },
    /// Closed loop that leaves `point` at direction `angle`, bulges out to
    /// the opposite side, and returns at the same angle (a cardioid).  Used
    /// for essential singularities where both ends of the loop must sink
    /// into the decaying sector.
    Kidney { point: Complex64, angle: f64, ccw: bool },
}

/// A contour: the node list plus an optional bypass radius override.
#[derive(Debug, Clone, PartialEq)]
pub struct Contour {
    pub nodes: Vec<Node>,
    pub radius: Option<f64>,
}

impl Contour {
    pub fn new(nodes: Vec<Node>) -> Self {
        Contour { nodes, radius: None }
    }

    pub fn with_radius(mut self, r: f64) -> Self {
        self.radius = Some(r);
        self
    }
}

/// Concrete geometry a contour compiles to.
#[derive(Debug, Clone)]
pub enum Piece {
    Line { a: Complex64, b: Complex64 },
    /// t = center + radius e^{i psi}, psi from a0 to a1 (sign = orientation).
    Arc { center: Complex64, radius: f64, a0: f64, a1: f64 },
    /// t = center + (r/2)(1+cos th) e^{i(th + phi - pi)}, th in [-pi, pi].
    Cardioid { center: Complex64, phi: f64, radius: f64, ccw: bool },
    /// Travels from infinity (direction `angle`) down to `to`.
    RayIn { to: Complex64, angle: f64 },
    /// Travels from `from` out to infinity in direction `angle`.
    RayOut { from: Complex64, angle: f64 },
}

impl Piece {
    fn is_ray(&self) -> bool {
        matches!(self, Piece::RayIn { .. } | Piece::RayOut { .. })
    }

    /// Point at local parameter lam in (0,1); rays use a rational map with
    /// the given length scale so that lam -> 1 approaches the finite end of
    /// a RayIn and infinity for a RayOut.
    fn at(&self, lam: f64, ray_scale: f64) -> Complex64 {
        match *self {
            Piece::Line { a, b } => a + (b - a) * lam,
            Piece::Arc { center, radius, a0, a1 } => {
                let psi = a0 + (a1 - a0) * lam;
                center + radius * c64(psi.cos(), psi.sin())
            }
            Piece::Cardioid { center, phi, radius, ccw } => {
                let th = if ccw { -PI + 2.0 * PI * lam } else { PI - 2.0 * PI * lam };
                cardioid_point(center, phi, radius, th)
            }
            Piece::RayIn { to, angle } => {
                let u = ray_scale * (1.0 - lam) / lam.max(1e-12);
                to + u * c64(angle.cos(), angle.sin())
            }
            Piece::RayOut { from, angle } => {
                let u = ray_scale * lam / (1.0 - lam).max(1e-12);
                from + u * c64(angle.cos(), angle.sin())
            }
        }
    }
}

fn cardioid_point(center: Complex64, phi: f64, radius: f64, th: f64) -> Complex64 {
    let dir = c64(0.0, th + phi - PI).exp();
    center + (radius / 2.0) * (1.0 + th.cos()) * dir
}

/// Derivative dt/dth on the cardioid.
fn cardioid_velocity(phi: f64, radius: f64, th: f64) -> Complex64 {
    let dir = c64(0.0, th + phi - PI).exp();
    (radius / 2.0) * dir * (c64(-th.sin(), 0.0) + c64(0.0, 1.0) * (1.0 + th.cos()))
}

#[derive(Debug, Clone)]
pub struct Compiled {
    pub pieces: Vec<Piece>,
    ray_scale: f64,
}

fn unit(v: Complex64) -> Complex64 {
    let n = v.norm();
    if n == 0.0 { c64(1.0, 0.0) } else { v / n }
}

impl Contour {
    /// Resolve the contour into concrete pieces.  Bypass radii default to a
    /// quarter of the distance to the nearest singularity not being
    /// bypassed.
    pub fn compile(&self, singularities: &[Complex64]) -> Result<Compiled> {
        if self.nodes.is_empty() {
            return Err(Error::Domain("empty contour".into()));
        }
        // standalone kidney
        if let [Node::Kidney { point, angle, ccw }] = self.nodes.as_slice() {
            let r = self.radius.unwrap_or_else(|| {
                let d = singularities
                    .iter()
                    .map(|s| (s - point).norm())
                    .filter(|d| *d > 1e-12)
                    .fold(f64::INFINITY, f64::min);
                if d.is_finite() { 0.25 * d } else { 0.25 }
            });
            let pieces = vec![Piece::Cardioid { center: *point, phi: *angle, radius: r, ccw: *ccw }];
            let ray_scale = ray_scale_for(&pieces_extent(&pieces), singularities);
            return Ok(Compiled { pieces, ray_scale });
        }
        if self.nodes.iter().any(|n| matches!(n, Node::Kidney { .. })) {
            return Err(Error::Domain("kidney loops must stand alone".into()));
        }

        // representative point / direction of each node, for aiming bypass arcs
        let rep = |n: &Node| -> Complex64 {
            match n {
                Node::Point(p) => *p,
                Node::Bypass { points, .. } => mean(points),
                Node::Infinity { angle } => 1e8 * c64(angle.cos(), angle.sin()),
                Node::Kidney { point, .. } => *point,
            }
        };

        // entry/exit anchor of each node and the arc it contributes
        struct Stop {
            entry: Complex64,
            exit: Complex64,
            arc: Option<Piece>,
        }
        let mut stops: Vec<Stop> = Vec::new();
        let n = self.nodes.len();
        for (i, node) in self.nodes.iter().enumerate() {
            match node {
                Node::Point(p) => stops.push(Stop { entry: *p, exit: *p, arc: None }),
                Node::Infinity { .. } => {
                    if i != 0 && i != n - 1 {
                        return Err(Error::Domain("infinity in the middle of a contour".into()));
                    }
                    // placeholder; replaced by a ray below
                    stops.push(Stop { entry: rep(node), exit: rep(node), arc: None });
                }
                Node::Bypass { points, ccw } => {
                    let center = mean(points);
                    let base = points.iter().map(|p| (p - center).norm()).fold(0.0, f64::max);
                    let pad = self.radius.unwrap_or_else(|| {
                        let d = singularities
                            .iter()
                            .filter(|s| points.iter().all(|p| (*s - p).norm() > 1e-12))
                            .map(|s| (s - center).norm() - base)
                            .filter(|d| *d > 1e-12)
                            .fold(f64::INFINITY, f64::min);
                        if d.is_finite() { 0.25 * d } else { 0.25 * (base + 1.0) }
                    });
                    if pad <= 0.0 {
                        return Err(Error::Domain("bypass radius pinched by a singularity".into()));
                    }
                    let radius = base + pad;
                    if n == 1 {
                        // standalone loop: full circle from angle 0
                        let a1 = if *ccw { 2.0 * PI } else { -2.0 * PI };
                        stops.push(Stop {
                            entry: center + radius,
                            exit: center + radius,
                            arc: Some(Piece::Arc { center, radius, a0: 0.0, a1 }),
                        });
                        continue;
                    }
                    let from = rep(&self.nodes[if i == 0 { i + 1 } else { i - 1 }]);
                    let to = rep(&self.nodes[if i == n - 1 { i - 1 } else { i + 1 }]);
                    let entry = center + radius * unit(from - center);
                    let exit = center + radius * unit(to - center);
                    let a0 = (entry - center).arg();
                    let mut a1 = (exit - center).arg();
                    if *ccw {
                        while a1 <= a0 + 1e-9 {
                            a1 += 2.0 * PI;
                        }
                    } else {
                        while a1 >= a0 - 1e-9 {
                            a1 -= 2.0 * PI;
                        }
                    }
                    stops.push(Stop { entry, exit, arc: Some(Piece::Arc { center, radius, a0, a1 }) });
                }
                Node::Kidney { .. } => unreachable!(),
            }
        }

        let mut pieces: Vec<Piece> = Vec::new();
        for (i, node) in self.nodes.iter().enumerate() {
            // connector from the previous stop
            if i > 0 {
                let prev = &self.nodes[i - 1];
                match (prev, node) {
                    (Node::Infinity { angle }, _) => {
                        pieces.push(Piece::RayIn { to: stops[i].entry, angle: *angle });
                    }
                    (_, Node::Infinity { angle }) => {
                        pieces.push(Piece::RayOut { from: stops[i - 1].exit, angle: *angle });
                    }
                    _ => {
                        let a = stops[i - 1].exit;
                        let b = stops[i].entry;
                        if (a - b).norm() > 1e-13 * (1.0 + a.norm()) {
                            pieces.push(Piece::Line { a, b });
                        }
                    }
                }
            }
            if let Some(arc) = &stops[i].arc {
                pieces.push(arc.clone());
            }
        }
        if pieces.is_empty() {
            return Err(Error::Domain("contour has no extent".into()));
        }
        let scale = ray_scale_for(&pieces_extent(&pieces), singularities);
        Ok(Compiled { pieces, ray_scale: scale })
    }
}

fn mean(pts: &[Complex64]) -> Complex64 {
    pts.iter().sum::<Complex64>() / pts.len() as f64
}

fn pieces_extent(pieces: &[Piece]) -> Vec<Complex64> {
    let mut v = Vec::new();
    for p in pieces {
        match *p {
            Piece::Line { a, b } => {
                v.push(a);
                v.push(b);
            }
            Piece::Arc { center, radius, .. } => v.push(center + radius),
            Piece::Cardioid { center, radius, .. } => v.push(center + radius),
            Piece::RayIn { to, .. } => v.push(to),
            Piece::RayOut { from, .. } => v.push(from),
        }
    }
    v
}

fn ray_scale_for(anchors: &[Complex64], singularities: &[Complex64]) -> f64 {
    let m = anchors
        .iter()
        .chain(singularities.iter())
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    2.0 * (1.0 + m)
}

// ---------------------------------------------------------------------------
// contour notation parser
// ---------------------------------------------------------------------------

/// Parse contour notation such as `[1, 0^+, 1]`, `]-inf, 0^+, -inf[`,
/// `[0^+]`, `[(0,0.5)^+]`, `[1,+inf[` or `[(0-0)^+]`.
pub fn parse_contour(text: &str) -> Result<Contour> {
    let bytes = text.as_bytes();
    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.into() };
    let mut start = 0;
    while start < bytes.len() && bytes[start].is_ascii_whitespace() {
        start += 1;
    }
    let mut end = bytes.len();
    while end > start && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    if start >= end {
        return Err(err(0, "empty contour"));
    }
    if !matches!(bytes[start], b'[' | b']') {
        return Err(err(start, "expected '[' or ']'"));
    }
    if !matches!(bytes[end - 1], b'[' | b']') {
        return Err(err(end - 1, "expected closing '[' or ']'"));
    }
    let inner_start = start + 1;
    let inner_end = end - 1;

    // split at top-level commas
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    let mut depth = 0usize;
    let mut tok_start = inner_start;
    for i in inner_start..inner_end {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => {
                depth = depth.checked_sub(1).ok_or_else(|| err(i, "unbalanced ')'"))?;
            }
            b',' if depth == 0 => {
                tokens.push((tok_start, text[tok_start..i].trim()));
                tok_start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(err(inner_end, "unbalanced '('"));
    }
    tokens.push((tok_start, text[tok_start..inner_end].trim()));

    let mut nodes = Vec::new();
    for (pos, tok) in tokens {
        if tok.is_empty() {
            return Err(err(pos, "empty contour element"));
        }
        nodes.push(parse_node(tok, pos)?);
    }
    Ok(Contour::new(nodes))
}

fn parse_node(tok: &str, pos: usize) -> Result<Node> {
    let err = |msg: &str| Error::Parse { pos, msg: msg.into() };
    // bypass / loop suffix
    if let Some(body) = tok.strip_suffix("^+").or_else(|| tok.strip_suffix("^-")) {
        let ccw = tok.ends_with("^+");
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            // kidney: (u+0) or (u-0)
            if let Some(head) = inner.strip_suffix("+0") {
                if let Ok(p) = parse_complex(head) {
                    return Ok(Node::Kidney { point: p, angle: 0.0, ccw });
                }
            }
            if let Some(head) = inner.strip_suffix("-0") {
                if let Ok(p) = parse_complex(head) {
                    return Ok(Node::Kidney { point: p, angle: PI, ccw });
                }
            }
            let mut points = Vec::new();
            for part in inner.split(',') {
                points.push(parse_complex(part.trim()).map_err(|m| err(&m))?);
            }
            return Ok(Node::Bypass { points, ccw });
        }
        let p = parse_complex(body.trim()).map_err(|m| err(&m))?;
        return Ok(Node::Bypass { points: vec![p], ccw });
    }
    // infinity
    let squeezed: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
    match squeezed.as_str() {
        "inf" | "+inf" => return Ok(Node::Infinity { angle: 0.0 }),
        "-inf" => return Ok(Node::Infinity { angle: PI }),
        "i*inf" | "+i*inf" => return Ok(Node::Infinity { angle: PI / 2.0 }),
        "-i*inf" => return Ok(Node::Infinity { angle: -PI / 2.0 }),
        _ => {}
    }
    let p = parse_complex(tok).map_err(|m| err(&m))?;
    Ok(Node::Point(p))
}

/// Parse a complex literal: `1`, `-0.5`, `2i`, `-i`, `1+2i`, `0.3-0.4i`.
pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty number".into());
    }
    // find the split point of `a+bi` / `a-bi`: a sign that is not the leading
    // one and not part of an exponent
    let b = s.as_bytes();
    let mut split = None;
    for i in (1..b.len()).rev() {
        if (b[i] == b'+' || b[i] == b'-') && !matches!(b[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    let parse_imag = |t: &str| -> std::result::Result<f64, String> {
        let head = &t[..t.len() - 1];
        match head {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => head.parse::<f64>().map_err(|_| format!("bad number '{t}'")),
        }
    };
    if s.ends_with('i') {
        if let Some(k) = split {
            let re: f64 = s[..k].parse().map_err(|_| format!("bad number '{s}'"))?;
            let im = parse_imag(&s[k..])?;
            return Ok(c64(re, im));
        }
        return Ok(c64(0.0, parse_imag(&s)?));
    }
    let re: f64 = s.parse().map_err(|_| format!("bad number '{s}'"))?;
    Ok(c64(re, 0.0))
}

// ---------------------------------------------------------------------------
// branched integrands
// ---------------------------------------------------------------------------

/// prefactor * prod_k q_k(t)^{e_k} * exp(g(t)), where g is a polynomial plus
/// pole terms sum_j c_j (t-p)^{-j}.  The argument of every q_k is continued
/// along the contour; `start_args` optionally pins the argument of a factor
/// at the start of the contour (needed for loop contours, where the branch
/// on the incoming leg is part of the identity being encoded).
#[derive(Debug, Clone)]
pub struct BranchedIntegrand {
    pub factors: Vec<(Poly, Complex64)>,
    pub exp_poly: Poly,
    pub exp_poles: Vec<(Complex64, Vec<Complex64>)>,
    pub prefactor: Complex64,
    pub start_args: Vec<Option<f64>>,
}

impl BranchedIntegrand {
    pub fn new(factors: Vec<(Poly, Complex64)>) -> Self {
        let n = factors.len();
        BranchedIntegrand {
            factors,
            exp_poly: Poly::zero(),
            exp_poles: Vec::new(),
            prefactor: c64(1.0, 0.0),
            start_args: vec![None; n],
        }
    }

    pub fn with_exp(mut self, g: Poly) -> Self {
        self.exp_poly = g;
        self
    }

    pub fn with_exp_pole(mut self, p: Complex64, coeffs: Vec<Complex64>) -> Self {
        self.exp_poles.push((p, coeffs));
        self
    }

    pub fn with_prefactor(mut self, c: Complex64) -> Self {
        self.prefactor = c;
        self
    }

    pub fn with_start_arg(mut self, k: usize, arg: f64) -> Self {
        self.start_args[k] = Some(arg);
        self
    }

    /// Branch points of the power factors plus essential singularities.
    pub fn singularities(&self) -> Vec<Complex64> {
        let mut v = Vec::new();
        for (q, _) in &self.factors {
            v.extend(q.roots_quadratic());
        }
        for (p, _) in &self.exp_poles {
            v.push(*p);
        }
        v
    }

    fn roots(&self) -> Vec<Complex64> {
        let mut v = Vec::new();
        for (q, _) in &self.factors {
            v.extend(q.roots_quadratic());
        }
        v
    }

    fn gval(&self, t: Complex64) -> Complex64 {
        let mut g = self.exp_poly.eval(t);
        for (p, cs) in &self.exp_poles {
            let d = t - p;
            let mut pw = c64(1.0, 0.0);
            for c in cs {
                pw /= d;
                g += c * pw;
            }
        }
        g
    }

    /// log of the integrand given the continued arguments of the factors.
    fn log_eval(&self, t: Complex64, args: &[f64]) -> Option<Complex64> {
        let mut lg = self.prefactor.ln();
        for (k, (q, e)) in self.factors.iter().enumerate() {
            let v = q.eval(t);
            let m = v.norm();
            if m < 1e-290 {
                // only reachable at flat endpoints that were already
                // verified to decay
                return None;
            }
            lg += e * c64(m.ln(), args[k]);
        }
        lg += self.gval(t);
        Some(lg)
    }

    fn eval(&self, t: Complex64, args: &[f64]) -> Complex64 {
        match self.log_eval(t, args) {
            None => c64(0.0, 0.0),
            Some(lg) => {
                if !lg.re.is_finite() || lg.re < -700.0 {
                    c64(0.0, 0.0)
                } else {
                    lg.exp()
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// continuous argument tracking
// ---------------------------------------------------------------------------

struct PhaseTable {
    /// global parameter (piece index + local lambda), increasing
    s: Vec<f64>,
    /// per sample point, the continued argument of every factor
    args: Vec<Vec<f64>>,
}

fn wrap_pi(x: f64) -> f64 {
    let mut y = x % (2.0 * PI);
    if y > PI {
        y -= 2.0 * PI;
    }
    if y <= -PI {
        y += 2.0 * PI;
    }
    y
}

impl PhaseTable {
    fn build(f: &BranchedIntegrand, comp: &Compiled) -> Result<PhaseTable> {
        let roots = f.roots();
        let nf = f.factors.len();
        let mut s = Vec::new();
        let mut args: Vec<Vec<f64>> = Vec::new();

        let continue_args = |t: Complex64, prev: &[f64]| -> Vec<f64> {
            f.factors
                .iter()
                .enumerate()
                .map(|(k, (q, _))| {
                    let a = q.eval(t).arg();
                    prev[k] + wrap_pi(a - prev[k])
                })
                .collect()
        };

        for (i, piece) in comp.pieces.iter().enumerate() {
            let l0 = if i == 0 { start_offset(piece, f, comp.ray_scale) } else { 0.0 };
            let l1 = if i + 1 == comp.pieces.len() {
                1.0 - start_offset_end(piece, f, comp.ray_scale)
            } else {
                1.0
            };
            let t0 = piece.at(l0, comp.ray_scale);
            let a0: Vec<f64> = if args.is_empty() {
                f.factors.iter().map(|(q, _)| q.eval(t0).arg()).collect()
            } else {
                continue_args(t0, args.last().unwrap())
            };
            s.push(i as f64 + l0);
            args.push(a0);

            // refine until consecutive samples are close relative to every root
            let mut stack = vec![l1];
            let mut cur_l = l0;
            while let Some(next_l) = stack.pop() {
                let t_cur = piece.at(cur_l, comp.ray_scale);
                let t_next = piece.at(next_l, comp.ray_scale);
                let dist = roots
                    .iter()
                    .map(|r| (t_cur - r).norm())
                    .fold(f64::INFINITY, f64::min);
                let step_ok = (t_next - t_cur).norm() <= 0.5 * dist || (next_l - cur_l) < 1e-9;
                let lam_ok = (next_l - cur_l) <= 0.26 || piece.is_ray();
                if (step_ok && lam_ok) || nf == 0 {
                    let a = continue_args(t_next, args.last().unwrap());
                    s.push(i as f64 + next_l);
                    args.push(a);
                    cur_l = next_l;
                } else {
                    stack.push(next_l);
                    stack.push(0.5 * (cur_l + next_l));
                }
            }
        }

        // apply requested start arguments as rigid shifts
        if !args.is_empty() {
            let first = args[0].clone();
            for k in 0..nf {
                if let Some(a) = f.start_args[k] {
                    let shift = a - first[k];
                    if shift.abs() > 1e-12 {
                        for row in args.iter_mut() {
                            row[k] += shift;
                        }
                    }
                }
            }
        }
        Ok(PhaseTable { s, args })
    }

    /// Arguments at a point t with global parameter s, unwrapped from the
    /// nearest table sample.
    fn lookup(&self, f: &BranchedIntegrand, s: f64, t: Complex64) -> Vec<f64> {
        let idx = match self.s.binary_search_by(|x| x.partial_cmp(&s).unwrap()) {
            Ok(i) => i,
            Err(i) => {
                if i == 0 {
                    0
                } else if i >= self.s.len() {
                    self.s.len() - 1
                } else if (self.s[i] - s).abs() < (s - self.s[i - 1]).abs() {
                    i
                } else {
                    i - 1
                }
            }
        };
        f.factors
            .iter()
            .enumerate()
            .map(|(k, (q, _))| {
                let base = self.args[idx][k];
                base + wrap_pi(q.eval(t).arg() - base)
            })
            .collect()
    }

    fn first(&self) -> (f64, &[f64]) {
        (self.s[0], &self.args[0])
    }

    fn last(&self) -> (f64, &[f64]) {
        (*self.s.last().unwrap(), self.args.last().unwrap())
    }
}

/// Nudge the table start off a singular contour endpoint.
fn start_offset(piece: &Piece, f: &BranchedIntegrand, ray_scale: f64) -> f64 {
    let t = piece.at(0.0, ray_scale);
    if piece.is_ray() {
        return 1e-6;
    }
    if is_singular_point(f, t) { 1e-7 } else { 0.0 }
}

fn start_offset_end(piece: &Piece, f: &BranchedIntegrand, ray_scale: f64) -> f64 {
    let t = piece.at(1.0, ray_scale);
    if piece.is_ray() {
        return 1e-6;
    }
    if is_singular_point(f, t) { 1e-7 } else { 0.0 }
}

fn is_singular_point(f: &BranchedIntegrand, t: Complex64) -> bool {
    let eps = 1e-9 * (1.0 + t.norm());
    f.singularities().iter().any(|s| (s - t).norm() < eps)
}

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature
// ---------------------------------------------------------------------------

const GL_N: usize = 20;

fn gl_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| {
        // nodes of P_20 by Newton iteration from the Chebyshev initial guess
        let n = GL_N;
        let mut xs = Vec::with_capacity(n);
        let mut ws = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            xs.push(x);
            ws.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        (xs, ws)
    })
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0_f64;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gl20(f: &mut dyn FnMut(f64) -> Complex64, a: f64, b: f64, evals: &mut usize) -> Complex64 {
    let (xs, ws) = gl_rule();
    let h = 0.5 * (b - a);
    let m = 0.5 * (a + b);
    let mut acc = c64(0.0, 0.0);
    for (x, w) in xs.iter().zip(ws) {
        acc += *w * f(m + h * x);
    }
    *evals += GL_N;
    acc * h
}

struct AdaptState {
    evals: usize,
    converged: bool,
}

fn adapt(
    f: &mut dyn FnMut(f64) -> Complex64,
    a: f64,
    b: f64,
    whole: Complex64,
    tol: f64,
    depth: usize,
    st: &mut AdaptState,
) -> (Complex64, f64) {
    let m = 0.5 * (a + b);
    let left = gl20(f, a, m, &mut st.evals);
    let right = gl20(f, m, b, &mut st.evals);
    let d = (left + right - whole).norm();
    if d <= tol || d <= 1e-15 * (left.norm() + right.norm()) {
        return (left + right, d * 0.1);
    }
    if depth == 0 {
        st.converged = false;
        return (left + right, d);
    }
    let (lv, le) = adapt(f, a, m, left, 0.5 * tol, depth - 1, st);
    let (rv, re) = adapt(f, m, b, right, 0.5 * tol, depth - 1, st);
    (lv + rv, le + re)
}

fn quad(f: &mut dyn FnMut(f64) -> Complex64, a: f64, b: f64, tol: f64, st: &mut AdaptState) -> (Complex64, f64) {
    let whole = gl20(f, a, b, &mut st.evals);
    adapt(f, a, b, whole, tol, 24, st)
}

// ---------------------------------------------------------------------------
// endpoint analysis
// ---------------------------------------------------------------------------

enum EndKind {
    Plain,
    /// Sum of Re(e_k) * multiplicity over factors vanishing at the point.
    Root(f64),
    EssentialDecay,
}

/// Classify a finite contour endpoint; `toward` is a nearby interior point.
fn classify_endpoint(
    f: &BranchedIntegrand,
    point: Complex64,
    toward: Complex64,
) -> Result<EndKind> {
    let eps = 1e-9 * (1.0 + point.norm());
    let at_pole = f.exp_poles.iter().any(|(p, _)| (p - point).norm() < eps);
    if at_pole {
        // test exponential decay into the contour
        let dir = unit(toward - point);
        let len = (toward - point).norm().max(1e-6);
        let g1 = f.gval(point + dir * (1e-4 * len)).re;
        let g2 = f.gval(point + dir * (2.5e-5 * len)).re;
        if g2 < g1 - 1.0 && g2 < -30.0 {
            return Ok(EndKind::EssentialDecay);
        }
        return Err(Error::NonIntegrableEndpoint);
    }
    let mut mu = 0.0;
    let mut hit = false;
    for (q, e) in &f.factors {
        let mult = q.roots_quadratic().iter().filter(|r| (*r - point).norm() < eps).count();
        if mult > 0 {
            hit = true;
            mu += e.re * mult as f64;
        }
    }
    if !hit {
        return Ok(EndKind::Plain);
    }
    if mu <= -1.0 + 1e-12 {
        return Err(Error::NonIntegrableEndpoint);
    }
    Ok(EndKind::Root(mu))
}

/// Substitution exponent for an endpoint of kind `Root(mu)`: integrate in
/// sigma with t = end + (dir) sigma^p so the pushforward is smooth.
fn subst_exponent(mu: f64) -> f64 {
    if mu < 0.0 {
        2.0 / (1.0 + mu)
    } else if (mu - mu.round()).abs() > 1e-9 {
        2.0
    } else {
        1.0
    }
}

// ---------------------------------------------------------------------------
// integration of compiled pieces
// ---------------------------------------------------------------------------

struct Integrator<'a> {
    f: &'a BranchedIntegrand,
    comp: &'a Compiled,
    table: &'a PhaseTable,
    tol: f64,
    st: AdaptState,
    trunc_err: f64,
}

impl<'a> Integrator<'a> {
    fn piece(&mut self, i: usize) -> Result<(Complex64, f64)> {
        match self.comp.pieces[i].clone() {
            Piece::Line { a, b } => self.line(i, a, b),
            Piece::Arc { center, radius, a0, a1 } => Ok(self.arc(i, center, radius, a0, a1)),
            Piece::Cardioid { center, phi, radius, ccw } => {
                Ok(self.cardioid(i, center, phi, radius, ccw))
            }
            Piece::RayIn { to, angle } => {
                let (v, e) = self.ray(i, to, angle, false)?;
                Ok((-v, e))
            }
            Piece::RayOut { from, angle } => self.ray(i, from, angle, true),
        }
    }

    fn line(&mut self, i: usize, a: Complex64, b: Complex64) -> Result<(Complex64, f64)> {
        let mid = 0.5 * (a + b);
        let ka = classify_endpoint(self.f, a, mid)?;
        let kb = classify_endpoint(self.f, b, mid)?;
        let special = |k: &EndKind| !matches!(k, EndKind::Plain);
        if special(&ka) && special(&kb) {
            let (v1, e1) = self.half_line(i, a, mid, &ka)?;
            let (v2, e2) = self.half_line(i, b, mid, &kb)?;
            Ok((v1 - v2, e1 + e2))
        } else if special(&kb) {
            let (v, e) = self.half_line(i, b, a, &kb)?;
            Ok((-v, e))
        } else {
            self.half_line(i, a, b, &ka)
        }
    }

    /// Integral from `from` (possibly singular) to `to`.  A power
    /// singularity at `from` is handled with the substitution t = from +
    /// span e^{-w}: the integrand then decays like e^{-(mu+1)w} while a
    /// complex exponent only contributes a bounded oscillation frequency.
    fn half_line(
        &mut self,
        i: usize,
        from: Complex64,
        to: Complex64,
        kind: &EndKind,
    ) -> Result<(Complex64, f64)> {
        let span = to - from;
        let piece = self.comp.pieces[i].clone();
        let (pa, pb) = match piece {
            Piece::Line { a, b } => (a, b),
            _ => unreachable!(),
        };
        let plen = (pb - pa).norm();
        let tol = self.tol;
        let mut st = AdaptState { evals: 0, converged: true };
        let table = self.table;
        let f = self.f;
        let eval_at = |t: Complex64| {
            let lam = ((t - pa).norm() / plen).clamp(0.0, 1.0);
            let args = table.lookup(f, i as f64 + lam, t);
            f.eval(t, &args)
        };
        let out = match kind {
            EndKind::Root(mu) if *mu > -1.0 && (mu - mu.round()).abs() > 1e-12 => {
                let rate = mu + 1.0;
                let lg0 = {
                    let v = eval_at(to) * span;
                    let n = v.norm();
                    if n > 0.0 { n.ln() } else { 0.0 }
                };
                let w_end = ((lg0 - (self.tol * 1e-3).ln()) / rate).max(5.0);
                if w_end > 2e4 {
                    return Err(Error::Truncation);
                }
                self.trunc_err += self.tol * 1e-3;
                let mut g = |w: f64| {
                    let s = (-w).exp();
                    eval_at(from + span * s) * span * s
                };
                let panels = (w_end / 1.5).ceil().max(1.0);
                let ptol = tol / panels;
                let mut acc = c64(0.0, 0.0);
                let mut errs = 0.0;
                let mut lo = 0.0;
                while lo < w_end - 1e-12 {
                    let up = (lo + w_end / panels).min(w_end);
                    let (v, e) = quad(&mut g, lo, up, ptol, &mut st);
                    acc += v;
                    errs += e;
                    lo = up;
                }
                (acc, errs)
            }
            _ => {
                let mut g = |sig: f64| eval_at(from + span * sig) * span;
                quad(&mut g, 0.0, 1.0, tol, &mut st)
            }
        };
        self.st.evals += st.evals;
        self.st.converged &= st.converged;
        Ok(out)
    }

    fn arc(&mut self, i: usize, center: Complex64, radius: f64, a0: f64, a1: f64) -> (Complex64, f64) {
        let tol = self.tol;
        let mut st = AdaptState { evals: 0, converged: true };
        let table = self.table;
        let f = self.f;
        let mut g = |lam: f64| {
            let psi = a0 + (a1 - a0) * lam;
            let t = center + radius * c64(psi.cos(), psi.sin());
            let dt = c64(0.0, a1 - a0) * radius * c64(psi.cos(), psi.sin());
            let args = table.lookup(f, i as f64 + lam, t);
            f.eval(t, &args) * dt
        };
        let panels = ((a1 - a0).abs() / 1.2).ceil().max(1.0) as usize;
        let mut acc = c64(0.0, 0.0);
        let mut err = 0.0;
        for k in 0..panels {
            let (v, e) = quad(
                &mut g,
                k as f64 / panels as f64,
                (k + 1) as f64 / panels as f64,
                tol / panels as f64,
                &mut st,
            );
            acc += v;
            err += e;
        }
        self.st.evals += st.evals;
        self.st.converged &= st.converged;
        (acc, err)
    }

    fn cardioid(&mut self, i: usize, center: Complex64, phi: f64, radius: f64, ccw: bool) -> (Complex64, f64) {
        let tol = self.tol;
        let mut st = AdaptState { evals: 0, converged: true };
        let table = self.table;
        let f = self.f;
        let mut g = |lam: f64| {
            let th = if ccw { -PI + 2.0 * PI * lam } else { PI - 2.0 * PI * lam };
            let dth = if ccw { 2.0 * PI } else { -2.0 * PI };
            let t = cardioid_point(center, phi, radius, th);
            let dt = cardioid_velocity(phi, radius, th) * dth;
            let args = table.lookup(f, i as f64 + lam, t);
            f.eval(t, &args) * dt
        };
        let mut acc = c64(0.0, 0.0);
        let mut err = 0.0;
        for k in 0..4 {
            let (v, e) = quad(&mut g, k as f64 * 0.25, (k + 1) as f64 * 0.25, tol * 0.25, &mut st);
            acc += v;
            err += e;
        }
        self.st.evals += st.evals;
        self.st.converged &= st.converged;
        (acc, err)
    }

    /// Integral outward from `anchor` to infinity in direction `angle`;
    /// RayIn pieces negate the result.  `outward` tells which orientation
    /// the piece itself has, for mapping u to the piece-local lambda.
    fn ray(&mut self, i: usize, anchor: Complex64, angle: f64, outward: bool) -> Result<(Complex64, f64)> {
        let dir = c64(angle.cos(), angle.sin());
        let scale = self.comp.ray_scale;
        let lam_of_u = move |u: f64| -> f64 {
            let l = u / (u + scale);
            if outward { l } else { 1.0 - l }
        };

        // behaviour at infinity
        let dg = self.f.exp_poly.degree().unwrap_or(0);
        let exp_rate = if dg >= 1 {
            let lead = self.f.exp_poly.coeff(dg);
            (lead * c64(0.0, dg as f64 * angle).exp()).re
        } else {
            0.0
        };
        let nu: f64 = self
            .f
            .factors
            .iter()
            .map(|(q, e)| e.re * q.degree().unwrap_or(0) as f64)
            .sum();

        // near part [0, u0]
        let u0 = 2.0 * scale;
        let kind = classify_endpoint(self.f, anchor, anchor + dir * (0.1 * u0))?;
        let tol = self.tol;
        let table = self.table;
        let f = self.f;
        let mut st = AdaptState { evals: 0, converged: true };
        let mut acc = c64(0.0, 0.0);
        let mut err = 0.0;
        match kind {
            EndKind::Root(mu) if (mu - mu.round()).abs() > 1e-12 => {
                // u = u0 e^{-w}: see half_line for why
                let rate = mu + 1.0;
                let lg0 = {
                    let t = anchor + dir * u0;
                    let args = table.lookup(f, i as f64 + lam_of_u(u0), t);
                    f.log_eval(t, &args).map(|l| l.re).unwrap_or(0.0) + u0.ln()
                };
                let w_end = ((lg0 - (self.tol * 1e-3).ln()) / rate).max(5.0);
                if w_end > 2e4 {
                    return Err(Error::Truncation);
                }
                self.trunc_err += self.tol * 1e-3;
                let mut g = |w: f64| {
                    let u = u0 * (-w).exp();
                    let t = anchor + dir * u;
                    let args = table.lookup(f, i as f64 + lam_of_u(u), t);
                    f.eval(t, &args) * dir * u
                };
                let panels = (w_end / 1.5).ceil().max(1.0);
                let mut lo = 0.0;
                while lo < w_end - 1e-12 {
                    let up = (lo + w_end / panels).min(w_end);
                    let (v, e) = quad(&mut g, lo, up, tol / panels, &mut st);
                    acc += v;
                    err += e;
                    lo = up;
                }
            }
            _ => {
                let mut g = |u: f64| {
                    let t = anchor + dir * u;
                    let args = table.lookup(f, i as f64 + lam_of_u(u), t);
                    f.eval(t, &args) * dir
                };
                // geometric panels toward the (possibly essential) anchor
                let cuts = [0.0, 1e-4, 1e-3, 1e-2, 0.1, 0.3, 0.6, 1.0];
                for w in cuts.windows(2) {
                    let (v, e) = quad(&mut g, w[0] * u0, w[1] * u0, tol / 8.0, &mut st);
                    acc += v;
                    err += e;
                }
            }
        }

        // far part [u0, infinity)
        if exp_rate > 1e-12 {
            return Err(Error::NonIntegrableEndpoint);
        }
        if exp_rate < -1e-12 {
            // exponential decay: truncate
            let mut hi = u0;
            let log_cut = (self.tol * 1e-3).ln();
            let mut found = false;
            while hi <= 1e5 {
                let t = anchor + dir * hi;
                let args = table.lookup(f, i as f64 + lam_of_u(hi), t);
                let lg = f.log_eval(t, &args).map(|l| l.re).unwrap_or(f64::NEG_INFINITY);
                if lg + (hi + 1.0).ln() < log_cut {
                    found = true;
                    break;
                }
                hi *= 2.0;
            }
            if !found {
                return Err(Error::Truncation);
            }
            self.trunc_err += self.tol * 1e-3;
            let mut g = |u: f64| {
                let t = anchor + dir * u;
                let args = table.lookup(f, i as f64 + lam_of_u(u), t);
                f.eval(t, &args) * dir
            };
            let mut lo = u0;
            let mut span = u0;
            while lo < hi {
                let up = (lo + span).min(hi);
                let (v, e) = quad(&mut g, lo, up, tol / 8.0, &mut st);
                acc += v;
                err += e;
                lo = up;
                span *= 2.0;
            }
        } else {
            // Power decay.  Substituting u = e^w turns the algebraic tail
            // into exponential decay with bounded oscillation frequency
            // (a complex exponent oscillates in log u, not in u).
            if nu >= -1.0 - 1e-9 {
                return Err(Error::NonIntegrableEndpoint);
            }
            let rate = nu + 1.0;
            let w0 = u0.ln();
            let t0m = anchor + dir * u0;
            let args0 = table.lookup(f, i as f64 + lam_of_u(u0), t0m);
            let lg0 = f
                .log_eval(t0m, &args0)
                .map(|l| l.re)
                .unwrap_or(f64::NEG_INFINITY)
                + w0;
            let target = (self.tol * 1e-3).ln();
            let span = if lg0 <= target { 1.0 } else { (target - lg0) / rate };
            if !(0.0..=2e4).contains(&span) {
                return Err(Error::Truncation);
            }
            let w_end = w0 + span;
            self.trunc_err += self.tol * 1e-3;
            let mut g = |w: f64| {
                let u = w.exp();
                let t = anchor + dir * u;
                let args = table.lookup(f, i as f64 + lam_of_u(u), t);
                f.eval(t, &args) * dir * u
            };
            let panels = ((w_end - w0) / 1.5).ceil().max(1.0);
            let ptol = tol / panels;
            let mut lo = w0;
            while lo < w_end - 1e-12 {
                let up = (lo + (w_end - w0) / panels).min(w_end);
                let (v, e) = quad(&mut g, lo, up, ptol, &mut st);
                acc += v;
                err += e;
                lo = up;
            }
        }
        self.st.evals += st.evals;
        self.st.converged &= st.converged;
        Ok((acc, err))
    }
}

/// Integrate a branched integrand over a contour.
pub fn integrate(f: &BranchedIntegrand, gamma: &Contour, tol: f64) -> Result<SeriesResult> {
    let comp = gamma.compile(&f.singularities())?;
    let table = PhaseTable::build(f, &comp)?;
    let mut ig = Integrator {
        f,
        comp: &comp,
        table: &table,
        tol,
        st: AdaptState { evals: 0, converged: true },
        trunc_err: 0.0,
    };
    let mut total = c64(0.0, 0.0);
    let mut err = 0.0;
    for i in 0..comp.pieces.len() {
        let (v, e) = ig.piece(i)?;
        total += v;
        err += e;
    }
    Ok(SeriesResult {
        value: total,
        err_estimate: err + ig.trunc_err,
        terms_used: ig.st.evals,
        status: if ig.st.converged { SeriesStatus::Converged } else { SeriesStatus::Failed },
    })
}

// ---------------------------------------------------------------------------
// boundary terms
// ---------------------------------------------------------------------------

/// Value of `witness(end) - witness(start)` along the contour, with branch
/// continuation.  A contour is admissible for an integration-by-parts
/// identity precisely when this vanishes; endpoint limits are taken
/// analytically (a vanishing power or decaying essential factor gives an
/// exact zero, a divergent one reports the large sampled value).
pub fn boundary_term(witness: &BranchedIntegrand, gamma: &Contour) -> Result<Complex64> {
    let comp = gamma.compile(&witness.singularities())?;
    let table = PhaseTable::build(witness, &comp)?;
    let v0 = endpoint_limit(witness, &comp, &table, true);
    let v1 = endpoint_limit(witness, &comp, &table, false);
    Ok(v1 - v0)
}

fn endpoint_limit(
    f: &BranchedIntegrand,
    comp: &Compiled,
    table: &PhaseTable,
    start: bool,
) -> Complex64 {
    let piece = if start { comp.pieces.first().unwrap() } else { comp.pieces.last().unwrap() };
    // infinite ends
    let far = match piece {
        Piece::RayIn { angle, .. } if start => Some(*angle),
        Piece::RayOut { angle, .. } if !start => Some(*angle),
        _ => None,
    };
    if let Some(angle) = far {
        let dg = f.exp_poly.degree().unwrap_or(0);
        let exp_rate = if dg >= 1 {
            (f.exp_poly.coeff(dg) * c64(0.0, dg as f64 * angle).exp()).re
        } else {
            0.0
        };
        let nu: f64 = f
            .factors
            .iter()
            .map(|(q, e)| e.re * q.degree().unwrap_or(0) as f64)
            .sum();
        if exp_rate < -1e-12 || (exp_rate.abs() <= 1e-12 && nu < -1e-9) {
            return c64(0.0, 0.0);
        }
        // divergent or non-decaying: report a far sample
        let (s, _) = if start { table.first() } else { table.last() };
        let lam = if start { 1e-9 } else { 1.0 - 1e-9 };
        let t = piece.at(lam, comp.ray_scale * 1e3);
        let args = table.lookup(f, s, t);
        return f.eval(t, &args);
    }

    let (endpoint, inward_lam) = if start {
        (piece.at(0.0, comp.ray_scale), 1e-3)
    } else {
        (piece.at(1.0, comp.ray_scale), 1.0 - 1e-3)
    };
    let toward = piece.at(inward_lam, comp.ray_scale);
    match classify_endpoint(f, endpoint, toward) {
        Ok(EndKind::Plain) => {
            let (s, _) = if start { table.first() } else { table.last() };
            let args = table.lookup(f, s, endpoint);
            f.eval(endpoint, &args)
        }
        Ok(EndKind::Root(mu)) if mu > 1e-9 => c64(0.0, 0.0),
        Ok(EndKind::EssentialDecay) => c64(0.0, 0.0),
        // divergent or marginal: sample near the endpoint
        _ => {
            let (s, _) = if start { table.first() } else { table.last() };
            let lam = if start { 1e-6 } else { 1.0 - 1e-6 };
            let t = piece.at(lam, comp.ray_scale);
            let args = table.lookup(f, s, t);
            f.eval(t, &args)
        }
    }
}

// ---------------------------------------------------------------------------
// representation catalog
// ---------------------------------------------------------------------------

/// Outcome of checking one integral representation at a point.
#[derive(Debug, Clone, Copy)]
pub struct Verification {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub evals: usize,
}

fn poly1(c0: Complex64, c1: Complex64) -> Poly {
    Poly::new(&[c0, c1])
}

fn poly2(c0: Complex64, c1: Complex64, c2: Complex64) -> Poly {
    Poly::new(&[c0, c1, c2])
}

fn tpoly() -> Poly {
    poly1(c64(0.0, 0.0), c64(1.0, 0.0))
}

fn one() -> Complex64 {
    c64(1.0, 0.0)
}

fn i_c() -> Complex64 {
    c64(0.0, 1.0)
}

/// 1/(2 pi i)
fn inv_2pii() -> Complex64 {
    c64(0.0, -0.5 / PI)
}

/// Evaluate one representation: integrate the left-hand side and compare to
/// the series/gamma reference of the right-hand side.  The residual is
/// |lhs - rhs| / (1 + |rhs|).
pub fn verify_representation(
    id: &str,
    params: &[Complex64],
    z: Complex64,
    tol: f64,
) -> Result<Verification> {
    let (f, gamma_path, rhs) = rep_parts(id, params, z)?;
    let quad_tol = (tol * 1e-2).clamp(1e-13, 1e-10);
    let r = integrate(&f, &gamma_path, quad_tol)?;
    Ok(Verification {
        lhs: r.value,
        rhs,
        residual: (r.value - rhs).norm() / (1.0 + rhs.norm()),
        evals: r.terms_used,
    })
}

/// Low-discrepancy sequence in (0,1), used for deterministic sample points.
fn hseq(k: usize, dim: usize) -> f64 {
    const IRR: [f64; 8] = [
        1.4142135623730951,
        1.7320508075688772,
        2.23606797749979,
        2.6457513110645907,
        3.3166247903554,
        3.605551275463989,
        4.123105625617661,
        4.358898943540674,
    ];
    let x = (k as f64 + 1.0) * IRR[dim % 8];
    x - x.floor()
}

/// All representation ids known to `verify_representation`, grouped roughly
/// by the function family they belong to.
pub fn representation_ids() -> Vec<&'static str> {
    REP_IDS.to_vec()
}

const REP_IDS: &[&str] = &[
    "gamma-euler",
    "gamma-hankel",
    "beta-interval",
    "beta-exterior",
    "beta-loop-left",
    "beta-loop-right",
    "beta-loop-inner",
    "beta-even-interval",
    "beta-even-exterior",
];

/// Deterministic admissible sample point number `k` for a representation:
/// parameter vector plus argument.  Identities without an argument return 0.
pub fn admissible_sample(id: &str, k: usize) -> Result<(Vec<Complex64>, Complex64)> {
    let h = |d: usize| hseq(k, d);
    let zero = c64(0.0, 0.0);
    let pt = match id {
        "gamma-euler" => (vec![c64(0.3 + 2.2 * h(0), 0.8 * (h(1) - 0.5))], zero),
        "gamma-hankel" => (vec![c64(-1.2 + 2.4 * h(0), 1.5 * (h(1) - 0.5))], zero),
        "beta-interval" => (vec![c64(0.3 + 2.7 * h(0), 0.0), c64(0.3 + 2.7 * h(1), 0.0)], zero),
        "beta-exterior" | "beta-loop-left" | "beta-loop-right" => (
            vec![
                c64(0.1 + 0.4 * h(0), 0.4 * (h(2) - 0.5)),
                c64(0.1 + 0.35 * h(1), 0.4 * (h(3) - 0.5)),
            ],
            zero,
        ),
        "beta-loop-inner" => (
            vec![
                c64(-0.7 + 1.4 * h(0), 0.6 * (h(2) - 0.5)),
                c64(0.2 + 1.3 * h(1), 0.6 * (h(3) - 0.5)),
            ],
            zero,
        ),
        "beta-even-interval" => (vec![c64(0.2 + 1.8 * h(0), 0.5 * (h(1) - 0.5))], zero),
        "beta-even-exterior" => (vec![c64(0.07 + 0.36 * h(0), 0.1 * (h(1) - 0.5))], zero),
        _ => return Err(Error::Domain(format!("unknown representation '{id}'"))),
    };
    Ok(pt)
}

fn need(params: &[Complex64], n: usize, id: &str) -> Result<()> {
    if params.len() != n {
        return Err(Error::Domain(format!(
            "representation '{id}' takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// Integrand, contour and reference value of a representation.
pub(crate) fn rep_parts(
    id: &str,
    params: &[Complex64],
    z: Complex64,
    ) -> Result<(BranchedIntegrand, Contour, Complex64)> {
    use crate::numeric::{gamma, recip_gamma};
    let _ = z;
    match id {
        // Gamma function and beta integrals
        "gamma-euler" => {
            need(params, 1, id)?;
            let u = params[0];
            let f = BranchedIntegrand::new(vec![(tpoly(), u - 1.0)])
                .with_exp(poly1(c64(0.0, 0.0), -one()));
            let path = Contour::new(vec![Node::Point(c64(0.0, 0.0)), Node::Infinity { angle: 0.0 }]);
            Ok((f, path, gamma(u)?))
        }
        "gamma-hankel" => {
            // 1/(2 pi i) over ]-inf,0^+,-inf[ of e^t t^{u-1} = 1/Gamma(1-u).
            // The incoming leg carries arg t = -pi, the outgoing +pi.
            need(params, 1, id)?;
            let u = params[0];
            let f = BranchedIntegrand::new(vec![(tpoly(), u - 1.0)])
                .with_exp(tpoly())
                .with_prefactor(inv_2pii())
                .with_start_arg(0, -PI);
            let path = Contour::new(vec![
                Node::Infinity { angle: PI },
                Node::Bypass { points: vec![c64(0.0, 0.0)], ccw: true },
                Node::Infinity { angle: PI },
            ]);
            Ok((f, path, recip_gamma(1.0 - u)))
        }
        "beta-interval" => {
            need(params, 2, id)?;
            let (u, v) = (params[0], params[1]);
            let f = BranchedIntegrand::new(vec![
                (tpoly(), u - 1.0),
                (poly1(one(), -one()), v - 1.0),
            ]);
            let path = Contour::new(vec![Node::Point(c64(0.0, 0.0)), Node::Point(one())]);
            Ok((f, path, gamma(u)? * gamma(v)? / gamma(u + v)?))
        }
        "beta-exterior" => {
            need(params, 2, id)?;
            let (u, v) = (params[0], params[1]);
            let f = BranchedIntegrand::new(vec![
                (tpoly(), u - 1.0),
                (poly1(-one(), one()), v - 1.0),
            ]);
            let path = Contour::new(vec![Node::Point(one()), Node::Infinity { angle: 0.0 }]);
            Ok((f, path, gamma(1.0 - u - v)? * gamma(v)? * recip_gamma(1.0 - u)))
        }
        "beta-loop-left" => {
            need(params, 2, id)?;
            let (u, v) = (params[0], params[1]);
            let f = BranchedIntegrand::new(vec![
                (tpoly(), u - 1.0),
                (poly1(one(), -one()), v - 1.0),
            ])
            .with_prefactor(inv_2pii())
            .with_start_arg(0, -PI);
            let path = Contour::new(vec![
                Node::Infinity { angle: PI },
                Node::Bypass { points: vec![c64(0.0, 0.0)], ccw: true },
                Node::Infinity { angle: PI },
            ]);
            Ok((f, path, gamma(1.0 - u - v)? * recip_gamma(1.0 - u) * recip_gamma(1.0 - v)))
        }
        "beta-loop-right" => {
            need(params, 2, id)?;
            let (u, v) = (params[0], params[1]);
            let f = BranchedIntegrand::new(vec![
                (tpoly(), u - 1.0),
                (poly1(one(), -one()), v - 1.0),
            ])
            .with_prefactor(inv_2pii());
            let path = Contour::new(vec![
                Node::Infinity { angle: 0.0 },
                Node::Bypass { points: vec![one()], ccw: false },
                Node::Infinity { angle: 0.0 },
            ]);
            Ok((f, path, gamma(1.0 - u - v)? * recip_gamma(1.0 - u) * recip_gamma(1.0 - v)))
        }
        "beta-loop-inner" => {
            // 1/(2 pi i) over [1,0^+,1] of t^{u-1}(1-t)^{v-1}
            //   = Gamma(v) / (Gamma(1-u) Gamma(u+v)).
            // With the loop drawn counterclockwise the legs must carry
            // arg t = -pi in and +pi out, and the printed value is the
            // negative of that reading (equivalently, the identity holds
            // verbatim for the clockwise traversal).
            need(params, 2, id)?;
            let (u, v) = (params[0], params[1]);
            let f = BranchedIntegrand::new(vec![
                (tpoly(), u - 1.0),
                (poly1(one(), -one()), v - 1.0),
            ])
            .with_prefactor(-inv_2pii())
            .with_start_arg(0, -PI);
            let path = Contour::new(vec![
                Node::Point(one()),
                Node::Bypass { points: vec![c64(0.0, 0.0)], ccw: true },
                Node::Point(one()),
            ]);
            Ok((f, path, gamma(v)? * recip_gamma(1.0 - u) * recip_gamma(u + v)))
        }
        "beta-even-interval" => {
            // integral_{-1}^{1} (1-s^2)^{u-1} ds = Gamma(u) sqrt(pi) / Gamma(u+1/2)
            need(params, 1, id)?;
            let u = params[0];
            let f = BranchedIntegrand::new(vec![(poly2(one(), c64(0.0, 0.0), -one()), u - 1.0)]);
            let path = Contour::new(vec![Node::Point(-one()), Node::Point(one())]);
            Ok((f, path, gamma(u)? * PI.sqrt() * recip_gamma(u + 0.5)))
        }
        "beta-even-exterior" => {
            // integral_1^inf (s^2-1)^{u-1} ds = Gamma(u) sqrt(pi) /
            //   (2 cos(pi u) Gamma(u+1/2)), 0 < Re u < 1/2
            need(params, 1, id)?;
            let u = params[0];
            let f = BranchedIntegrand::new(vec![(poly2(-one(), c64(0.0, 0.0), one()), u - 1.0)]);
            let path = Contour::new(vec![Node::Point(one()), Node::Infinity { angle: 0.0 }]);
            let rhs = gamma(u)? * PI.sqrt() * recip_gamma(u + 0.5) / (2.0 * (PI * u).cos());
            Ok((f, path, rhs))
        }
        _ => Err(Error::Domain(format!("unknown representation '{id}'"))),
    }
}

#[cfg(test)]
mod smoke {
    use super::*;
    use crate::numeric::gamma;

    #[test]
    fn euler_gamma_integral() {
        // integral_0^inf e^{-t} t^{u-1} dt = Gamma(u)
        let u = c64(0.7, 0.3);
        let f = BranchedIntegrand::new(vec![(Poly::new(&[c64(0.0, 0.0), c64(1.0, 0.0)]), u - 1.0)])
            .with_exp(Poly::new(&[c64(0.0, 0.0), c64(-1.0, 0.0)]));
        let gamma_path = Contour::new(vec![Node::Point(c64(0.0, 0.0)), Node::Infinity { angle: 0.0 }]);
        let v = integrate(&f, &gamma_path, 1e-12).unwrap();
        let expect = gamma(u).unwrap();
        println!("lhs {} rhs {} err {:.2e} evals {}", v.value, expect, (v.value - expect).norm(), v.terms_used);
        assert!((v.value - expect).norm() < 1e-9);
    }

    #[test]
    fn beta_integral() {
        let (u, v) = (c64(0.35, 0.0), c64(0.6, 0.0));
        let f = BranchedIntegrand::new(vec![
            (Poly::new(&[c64(0.0, 0.0), c64(1.0, 0.0)]), u - 1.0),
            (Poly::new(&[c64(1.0, 0.0), c64(-1.0, 0.0)]), v - 1.0),
        ]);
        let path = Contour::new(vec![Node::Point(c64(0.0, 0.0)), Node::Point(c64(1.0, 0.0))]);
        let r = integrate(&f, &path, 1e-12).unwrap();
        let expect = gamma(u).unwrap() * gamma(v).unwrap() / gamma(u + v).unwrap();
        println!("lhs {} rhs {} err {:.2e} evals {}", r.value, expect, (r.value - expect).norm(), r.terms_used);
        assert!((r.value - expect).norm() < 1e-10);
    }

    #[test]
    fn hankel_loop() {
        // (1/2pi i) over ]-inf, 0^+, -inf[ of e^t t^{u-1} = 1/Gamma(1-u),
        // incoming leg carrying arg t = -pi
        let u = c64(0.4, 0.2);
        let f = BranchedIntegrand::new(vec![(Poly::new(&[c64(0.0, 0.0), c64(1.0, 0.0)]), u - 1.0)])
            .with_exp(Poly::new(&[c64(0.0, 0.0), c64(1.0, 0.0)]))
            .with_prefactor(c64(0.0, -0.5 / PI))
            .with_start_arg(0, -PI);
        let path = parse_contour("]-inf, 0^+, -inf[").unwrap();
        let r = integrate(&f, &path, 1e-12).unwrap();
        let expect = crate::numeric::recip_gamma(1.0 - u);
        println!("lhs {} rhs {} err {:.2e} evals {}", r.value, expect, (r.value - expect).norm(), r.terms_used);
        assert!((r.value - expect).norm() < 1e-9);
    }
}

#[cfg(test)]
mod catalog_tests {
    use super::*;

    #[test]
    fn all_representations_verify() {
        for id in representation_ids() {
            for k in 0..5 {
                let (params, z) = admissible_sample(id, k).unwrap();
                let v = verify_representation(id, &params, z, 1e-7)
                    .unwrap_or_else(|e| panic!("{id} sample {k}: {e}"));
                assert!(
                    v.residual < 1e-7,
                    "{id} sample {k}: residual {:.3e} lhs {} rhs {}",
                    v.residual,
                    v.lhs,
                    v.rhs
                );
            }
        }
    }
}
