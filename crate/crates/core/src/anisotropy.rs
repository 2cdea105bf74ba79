//! Uniformly elliptic, regular anisotropic integrands Φ(x, ν).
//!
//! The registry is restricted to three closed-form kinds: the Euclidean
//! norm, a constant quadratic form Φ(ν) = √(νᵀAν), and a bump-modulated
//! quadratic form Φ(x,ν) = (1 + β·g(x))·√(νᵀAν). All are C² in ν away
//! from 0 and carry computable ellipticity constants; the sampling
//! validator reports the tightest (λ, ℓ) observed and flags the binding
//! inequality, since a single λ bounds several distinct quantities.

use crate::geom::{pt2, pt3, sym_eig_range, sym_spectral_norm, Pt};
use crate::{Error, Result};
use nalgebra::Matrix3;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnisotropyKind {
    Euclidean,
    Quadratic,
    Modulated,
}

/// Spatial modulation (1 + β·g(x)) with g a C^{1,1} bump supported in
/// the ball of radius `radius` around `center`:
/// g(x) = (1 - (|x-c|/ρ)²)² for |x-c| ≤ ρ, else 0, so 0 ≤ g ≤ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulation {
    pub beta: f64,
    pub center: Pt,
    pub radius: f64,
}

impl Modulation {
    pub fn bump(&self, x: Pt) -> f64 {
        let s2 = (x - self.center).norm_squared() / (self.radius * self.radius);
        if s2 >= 1.0 {
            0.0
        } else {
            let t = 1.0 - s2;
            t * t
        }
    }

    pub fn factor(&self, x: Pt) -> f64 {
        1.0 + self.beta * self.bump(x)
    }
}

#[derive(Debug, Clone)]
pub struct Anisotropy {
    pub n: usize,
    pub kind: AnisotropyKind,
    /// Symmetric positive definite coefficient matrix (leading n×n block;
    /// the unused 3D slot is identity so in-plane algebra stays in-plane).
    matrix: Matrix3<f64>,
    pub modulation: Option<Modulation>,
    /// Declared ellipticity constant λ ≥ 1.
    pub lambda: f64,
    /// Declared spatial Lipschitz constant ℓ ≥ 0.
    pub ell: f64,
}

impl Anisotropy {
    pub fn euclidean(n: usize) -> Anisotropy {
        Anisotropy {
            n,
            kind: AnisotropyKind::Euclidean,
            matrix: Matrix3::identity(),
            modulation: None,
            lambda: 1.0,
            ell: 0.0,
        }
    }

    /// Constant quadratic form from the upper-triangle coefficients
    /// (a11,a12,a22 for n = 2; a11,a12,a13,a22,a23,a33 for n = 3).
    pub fn quadratic(n: usize, coeffs: &[f64]) -> Result<Anisotropy> {
        let matrix = matrix_from_upper(n, coeffs)?;
        let (emin, _) = sym_eig_range(&matrix, n);
        if emin <= 0.0 {
            return Err(Error::Invalid(format!(
                "quadratic form must be positive definite (min eigenvalue {emin})"
            )));
        }
        let mut a = Anisotropy {
            n,
            kind: AnisotropyKind::Quadratic,
            matrix,
            modulation: None,
            lambda: 1.0,
            ell: 0.0,
        };
        let (lam, ell) = a.tight_constants(4096, 0x5eed);
        a.lambda = lam * (1.0 + 1e-9);
        a.ell = ell;
        Ok(a)
    }

    pub fn modulated(base: Anisotropy, beta: f64, center: Pt, radius: f64) -> Result<Anisotropy> {
        if beta < 0.0 || radius <= 0.0 {
            return Err(Error::Invalid("modulation needs beta >= 0 and radius > 0".into()));
        }
        let mut a = Anisotropy {
            n: base.n,
            kind: AnisotropyKind::Modulated,
            matrix: base.matrix,
            modulation: Some(Modulation { beta, center, radius }),
            lambda: 1.0,
            ell: 0.0,
        };
        let (lam, ell) = a.tight_constants(4096, 0x5eed);
        a.lambda = lam * (1.0 + 1e-9);
        a.ell = ell * (1.0 + 1e-9);
        Ok(a)
    }

    /// Parse a config string: `euclidean`, `quadratic:a11,a12,...`,
    /// `modulated:<base>;beta=<b>;center=<x,y[,z]>;radius=<r>`.
    pub fn parse(spec: &str, n: usize) -> Result<Anisotropy> {
        let spec = spec.trim();
        if spec == "euclidean" {
            return Ok(Anisotropy::euclidean(n));
        }
        if let Some(rest) = spec.strip_prefix("quadratic:") {
            let coeffs: Vec<f64> = rest
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse(format!("quadratic coefficients: {e}")))?;
            return Anisotropy::quadratic(n, &coeffs);
        }
        if let Some(rest) = spec.strip_prefix("modulated:") {
            let mut parts = rest.split(';');
            let base_spec = parts
                .next()
                .ok_or_else(|| Error::Parse("modulated: missing base".into()))?;
            let base = Anisotropy::parse(base_spec, n)?;
            let mut beta = None;
            let mut center = None;
            let mut radius = None;
            for kv in parts {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("modulated: bad field `{kv}`")))?;
                match k.trim() {
                    "beta" => beta = Some(v.trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string()))?),
                    "radius" => radius = Some(v.trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string()))?),
                    "center" => {
                        let c: Vec<f64> = v
                            .split(',')
                            .map(|s| s.trim().parse::<f64>())
                            .collect::<std::result::Result<_, _>>()
                            .map_err(|e| Error::Parse(e.to_string()))?;
                        center = Some(match c.len() {
                            2 => pt2(c[0], c[1]),
                            3 => pt3(c[0], c[1], c[2]),
                            k => return Err(Error::Parse(format!("center needs 2 or 3 coords, got {k}"))),
                        });
                    }
                    other => return Err(Error::Parse(format!("modulated: unknown field `{other}`"))),
                }
            }
            let beta = beta.ok_or_else(|| Error::Parse("modulated: missing beta".into()))?;
            let center = center.ok_or_else(|| Error::Parse("modulated: missing center".into()))?;
            let radius = radius.ok_or_else(|| Error::Parse("modulated: missing radius".into()))?;
            return Anisotropy::modulated(base, beta, center, radius);
        }
        Err(Error::Parse(format!("unknown anisotropy spec `{spec}`")))
    }

    fn quad_value(&self, nu: Pt) -> f64 {
        if self.kind == AnisotropyKind::Euclidean {
            nu.norm()
        } else {
            (nu.dot(&(self.matrix * nu))).sqrt()
        }
    }

    fn spatial_factor(&self, x: Pt) -> f64 {
        match &self.modulation {
            Some(m) => m.factor(x),
            None => 1.0,
        }
    }

    /// Φ(x, ν). Positively 1-homogeneous in ν; errors on ν = 0.
    pub fn phi(&self, x: Pt, nu: Pt) -> Result<f64> {
        if nu.norm_squared() == 0.0 {
            return Err(Error::Degenerate("phi evaluated on the zero vector".into()));
        }
        Ok(self.spatial_factor(x) * self.quad_value(nu))
    }

    /// Φ(x, ν) for ν already known to be nonzero (internal hot path).
    pub fn phi_unchecked(&self, x: Pt, nu: Pt) -> f64 {
        self.spatial_factor(x) * self.quad_value(nu)
    }

    /// ∇_ν Φ(x, ν): 0-homogeneous; input normalized internally.
    pub fn grad(&self, x: Pt, nu: Pt) -> Result<Pt> {
        if nu.norm_squared() == 0.0 {
            return Err(Error::Degenerate("grad evaluated on the zero vector".into()));
        }
        let nu = nu.normalize();
        let anu = self.matrix * nu;
        let phi0 = self.quad_value(nu);
        Ok(self.spatial_factor(x) * anu / phi0)
    }

    /// ∇²_ν Φ(x, ν) as a symmetric matrix on the leading n×n block;
    /// annihilates ν (Euler identity for 1-homogeneous functions).
    pub fn hess(&self, x: Pt, nu: Pt) -> Result<Matrix3<f64>> {
        if nu.norm_squared() == 0.0 {
            return Err(Error::Degenerate("hess evaluated on the zero vector".into()));
        }
        let nu = nu.normalize();
        let anu = self.matrix * nu;
        let phi0 = self.quad_value(nu);
        let mut h = self.matrix / phi0 - anu * anu.transpose() / (phi0 * phi0 * phi0);
        h *= self.spatial_factor(x);
        if self.n == 2 {
            // keep the unused slot inert
            h[(0, 2)] = 0.0;
            h[(2, 0)] = 0.0;
            h[(1, 2)] = 0.0;
            h[(2, 1)] = 0.0;
            h[(2, 2)] = 0.0;
        }
        Ok(h)
    }

    /// Tightest (λ, ℓ) observed on a deterministic sample; used to seed
    /// the declared constants at construction.
    fn tight_constants(&self, samples: usize, seed: u64) -> (f64, f64) {
        let r = validate_ellipticity(self, samples, seed);
        (r.lambda_min, r.ell_min)
    }
}

fn matrix_from_upper(n: usize, coeffs: &[f64]) -> Result<Matrix3<f64>> {
    let mut m = Matrix3::identity();
    match (n, coeffs.len()) {
        (2, 3) => {
            m[(0, 0)] = coeffs[0];
            m[(0, 1)] = coeffs[1];
            m[(1, 0)] = coeffs[1];
            m[(1, 1)] = coeffs[2];
        }
        (3, 6) => {
            m[(0, 0)] = coeffs[0];
            m[(0, 1)] = coeffs[1];
            m[(1, 0)] = coeffs[1];
            m[(0, 2)] = coeffs[2];
            m[(2, 0)] = coeffs[2];
            m[(1, 1)] = coeffs[3];
            m[(1, 2)] = coeffs[4];
            m[(2, 1)] = coeffs[4];
            m[(2, 2)] = coeffs[5];
        }
        (n, k) => {
            return Err(Error::Invalid(format!(
                "dimension {n} expects {} coefficients, got {k}",
                if n == 2 { 3 } else { 6 }
            )))
        }
    }
    Ok(m)
}

/// One inequality of the ellipticity system with its tightest observed
/// constant and the witnessing sample.
#[derive(Debug, Clone)]
pub struct LineReport {
    pub name: &'static str,
    pub tight: f64,
    pub witness: String,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub pass: bool,
    pub lambda_declared: f64,
    pub ell_declared: f64,
    /// Tightest λ satisfying every λ-controlled inequality on the sample.
    pub lambda_min: f64,
    /// Tightest ℓ satisfying both spatial-Lipschitz inequalities.
    pub ell_min: f64,
    pub lines: Vec<LineReport>,
    pub grad_fd_max_rel_err: f64,
    pub violations: Vec<String>,
}

impl ValidationReport {
    /// Name of the λ-line with the largest tight constant.
    pub fn binding_line(&self) -> &'static str {
        self.lines
            .iter()
            .filter(|l| l.name != "x-lipschitz-phi" && l.name != "x-lipschitz-grad")
            .max_by(|a, b| a.tight.total_cmp(&b.tight))
            .map(|l| l.name)
            .unwrap_or("bounds")
    }
}

fn unit_vector<R: Rng>(rng: &mut R, n: usize) -> Pt {
    if n == 2 {
        let th = rng.random::<f64>() * std::f64::consts::TAU;
        pt2(th.cos(), th.sin())
    } else {
        loop {
            // Box-Muller triple
            let u1: f64 = rng.random::<f64>().max(1e-300);
            let u2: f64 = rng.random();
            let u3: f64 = rng.random::<f64>().max(1e-300);
            let u4: f64 = rng.random();
            let g1 = (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
            let g2 = (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).sin();
            let g3 = (-2.0 * u3.ln()).sqrt() * (std::f64::consts::TAU * u4).cos();
            let v = pt3(g1, g2, g3);
            if v.norm_squared() > 1e-12 {
                return v.normalize();
            }
        }
    }
}

fn sample_position<R: Rng>(rng: &mut R, a: &Anisotropy) -> Pt {
    // Cover the bump support (where the spatial variation lives) plus a
    // margin; a unit box handles the constant kinds.
    let (c, half) = match &a.modulation {
        Some(m) => (m.center, 1.5 * m.radius),
        None => (Pt::zeros(), 1.0),
    };
    let mut p = c;
    p.x += (2.0 * rng.random::<f64>() - 1.0) * half;
    p.y += (2.0 * rng.random::<f64>() - 1.0) * half;
    if a.n == 3 {
        p.z += (2.0 * rng.random::<f64>() - 1.0) * half;
    }
    p
}

/// Deterministically sample (x, y, ν, ν′, e) tuples and report the
/// tightest constants satisfying each inequality of the ellipticity
/// system, each addend validated separately, plus a central
/// finite-difference check of the closed-form gradient
/// (step 1e-5, relative tolerance 1e-4).
pub fn validate_ellipticity(a: &Anisotropy, sample_count: usize, seed: u64) -> ValidationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = a.n;

    let mut bounds = (0.0f64, String::new());
    let mut grad_norm = (0.0f64, String::new());
    let mut hess_norm = (0.0f64, String::new());
    let mut hess_lip = (0.0f64, String::new());
    let mut convexity = (0.0f64, String::new());
    let mut lip_phi = (0.0f64, String::new());
    let mut lip_grad = (0.0f64, String::new());
    let mut fd_err = 0.0f64;

    let mut track = |slot: &mut (f64, String), v: f64, wit: String| {
        if v > slot.0 {
            *slot = (v, wit);
        }
    };

    for _ in 0..sample_count.max(1) {
        let x = sample_position(&mut rng, a);
        let nu = unit_vector(&mut rng, n);
        let phi = a.phi_unchecked(x, nu);
        track(&mut bounds, phi.max(1.0 / phi), format!("x={:?} nu={:?}", x, nu));

        let g = a.grad(x, nu).expect("unit nu");
        track(&mut grad_norm, g.norm(), format!("x={:?} nu={:?}", x, nu));

        let h = a.hess(x, nu).expect("unit nu");
        track(&mut hess_norm, sym_spectral_norm(&h, n), format!("x={:?} nu={:?}", x, nu));

        // ν-Lipschitz constant of the Hessian: a far pair and a near pair.
        for scale in [1.0, 1e-3] {
            let nu2 = if scale == 1.0 {
                unit_vector(&mut rng, n)
            } else {
                (nu + scale * unit_vector(&mut rng, n)).normalize()
            };
            let dn = (nu2 - nu).norm();
            if dn > 1e-9 {
                let h2 = a.hess(x, nu2).expect("unit nu");
                let q = sym_spectral_norm(&(h2 - h), n) / dn;
                track(&mut hess_lip, q, format!("x={:?} nu={:?} nu'={:?}", x, nu, nu2));
            }
        }

        // Tangential convexity: λ with ∇²Φ(x,ν)e·e ≥ |e-(e·ν)ν|²/λ;
        // only the tangential part of e matters since ∇²Φ ν = 0.
        let e = {
            let raw = unit_vector(&mut rng, n);
            let t = raw - raw.dot(&nu) * nu;
            if t.norm_squared() < 1e-12 {
                continue;
            }
            t.normalize()
        };
        let hee = (h * e).dot(&e);
        if hee <= 0.0 {
            track(&mut convexity, f64::INFINITY, format!("x={:?} nu={:?} e={:?}", x, nu, e));
        } else {
            track(&mut convexity, 1.0 / hee, format!("x={:?} nu={:?} e={:?}", x, nu, e));
        }

        // Spatial Lipschitz lines: a far pair and a near pair.
        for scale in [1.0, 1e-4] {
            let y = if scale == 1.0 {
                sample_position(&mut rng, a)
            } else {
                x + scale * unit_vector(&mut rng, n)
            };
            let dxy = (y - x).norm();
            if dxy > 1e-12 {
                let dphi = (a.phi_unchecked(x, nu) - a.phi_unchecked(y, nu)).abs();
                track(&mut lip_phi, dphi / dxy, format!("x={:?} y={:?} nu={:?}", x, y, nu));
                let dgrad = (a.grad(x, nu).expect("unit") - a.grad(y, nu).expect("unit")).norm();
                track(&mut lip_grad, dgrad / dxy, format!("x={:?} y={:?} nu={:?}", x, y, nu));
            }
        }

        // Central finite-difference check of the gradient.
        let step = 1e-5;
        let mut fd = Pt::zeros();
        for i in 0..n {
            let mut np = nu;
            let mut nm = nu;
            np[i] += step;
            nm[i] -= step;
            fd[i] = (a.phi_unchecked(x, np) - a.phi_unchecked(x, nm)) / (2.0 * step);
        }
        let rel = (fd - g).norm() / g.norm().max(1e-30);
        fd_err = fd_err.max(rel);
    }

    let lines = vec![
        LineReport { name: "bounds", tight: bounds.0, witness: bounds.1 },
        LineReport { name: "x-lipschitz-phi", tight: lip_phi.0, witness: lip_phi.1 },
        LineReport { name: "x-lipschitz-grad", tight: lip_grad.0, witness: lip_grad.1 },
        LineReport { name: "grad-norm", tight: grad_norm.0, witness: grad_norm.1 },
        LineReport { name: "hess-norm", tight: hess_norm.0, witness: hess_norm.1 },
        LineReport { name: "hess-lipschitz", tight: hess_lip.0, witness: hess_lip.1 },
        LineReport { name: "tangential-convexity", tight: convexity.0, witness: convexity.1 },
    ];
    let lambda_min = [bounds.0, grad_norm.0, hess_norm.0, hess_lip.0, convexity.0]
        .into_iter()
        .fold(0.0f64, f64::max);
    let ell_min = lip_phi.0.max(lip_grad.0);

    let slack = 1.0 + 1e-12;
    let mut violations = Vec::new();
    for l in &lines {
        let declared = match l.name {
            "x-lipschitz-phi" | "x-lipschitz-grad" => a.ell,
            _ => a.lambda,
        };
        if l.tight > declared * slack + 1e-15 {
            violations.push(format!(
                "{}: needs {} > declared {} (witness {})",
                l.name, l.tight, declared, l.witness
            ));
        }
    }
    if fd_err > 1e-4 {
        violations.push(format!("gradient finite-difference mismatch: rel err {fd_err}"));
    }

    ValidationReport {
        pass: violations.is_empty(),
        lambda_declared: a.lambda,
        ell_declared: a.ell,
        lambda_min,
        ell_min,
        lines,
        grad_fd_max_rel_err: fd_err,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use nalgebra::Vector3;

    #[test]
    fn phi_euclidean_unit() {
        let a = Anisotropy::euclidean(2);
        assert_relative_eq!(a.phi(pt2(3.0, -1.0), Vector3::x()).unwrap(), 1.0);
    }

    #[test]
    fn phi_quadratic_axis() {
        let a = Anisotropy::quadratic(2, &[1.0, 0.0, 4.0]).unwrap();
        assert_relative_eq!(a.phi(Pt::zeros(), Vector3::y()).unwrap(), 2.0, max_relative = 1e-14);
    }

    #[test]
    fn phi_one_homogeneous() {
        let a = Anisotropy::quadratic(2, &[2.0, 0.3, 1.5]).unwrap();
        let nu = pt2(0.3, -0.8);
        let p1 = a.phi(Pt::zeros(), nu).unwrap();
        let p2 = a.phi(Pt::zeros(), 2.0 * nu).unwrap();
        assert!((p2 - 2.0 * p1).abs() <= 1e-12 * 2.0 * p1);
    }

    #[test]
    fn phi_zero_vector_rejected() {
        let a = Anisotropy::euclidean(2);
        assert!(a.phi(Pt::zeros(), Pt::zeros()).is_err());
    }

    #[test]
    fn grad_euclidean_is_direction() {
        let a = Anisotropy::euclidean(3);
        let g = a.grad(Pt::zeros(), Vector3::x()).unwrap();
        assert_relative_eq!((g - Vector3::x()).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn euler_identities() {
        for a in [
            Anisotropy::euclidean(2),
            Anisotropy::quadratic(2, &[1.0, 0.0, 4.0]).unwrap(),
            Anisotropy::modulated(Anisotropy::euclidean(2), 0.1, pt2(0.2, 0.0), 0.5).unwrap(),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..64 {
                let nu = unit_vector(&mut rng, 2);
                let x = sample_position(&mut rng, &a);
                let phi = a.phi(x, nu).unwrap();
                let g = a.grad(x, nu).unwrap();
                let h = a.hess(x, nu).unwrap();
                assert!((g.dot(&nu) - phi).abs() < 1e-8, "grad·nu = phi");
                assert!((h * nu).norm() < 1e-8, "hess annihilates nu");
            }
        }
    }

    #[test]
    fn hess_quadratic_matches_finite_difference() {
        // d²/dt² sqrt(1 + 4 t²) at t = 0 equals 4 for A = diag(1,4) at e1.
        let a = Anisotropy::quadratic(2, &[1.0, 0.0, 4.0]).unwrap();
        let h = a.hess(Pt::zeros(), Vector3::x()).unwrap();
        let hee = (h * Vector3::y()).dot(&Vector3::y());
        assert_relative_eq!(hee, 4.0, max_relative = 1e-12);
        let step = 1e-5;
        let f = |t: f64| a.phi_unchecked(Pt::zeros(), pt2(1.0, t));
        let fd = (f(step) - 2.0 * f(0.0) + f(-step)) / (step * step);
        assert_relative_eq!(hee, fd, max_relative = 1e-4);
    }

    #[test]
    fn validator_accepts_euclidean() {
        let a = Anisotropy::euclidean(2);
        let r = validate_ellipticity(&a, 2000, 42);
        assert!(r.pass, "violations: {:?}", r.violations);
        assert!(r.lambda_min <= 1.0 + 1e-9);
        assert!(r.ell_min <= 1e-12);
    }

    #[test]
    fn validator_rejects_understated_lambda() {
        // |∇²Φ| reaches 4 somewhere for diag(1,4); λ = 2 must fail on the
        // Hessian-norm line.
        let mut a = Anisotropy::quadratic(2, &[1.0, 0.0, 4.0]).unwrap();
        a.lambda = 2.0;
        let r = validate_ellipticity(&a, 4000, 42);
        assert!(!r.pass);
        assert!(r.violations.iter().any(|v| v.contains("hess-norm")));
        let hess_line = r.lines.iter().find(|l| l.name == "hess-norm").unwrap();
        assert!(hess_line.tight > 3.9 && hess_line.tight <= 4.0 + 1e-9);
    }

    #[test]
    fn validator_quadratic_passes_with_constructed_constants() {
        let a = Anisotropy::quadratic(2, &[1.0, 0.0, 4.0]).unwrap();
        let r = validate_ellipticity(&a, 4000, 43);
        assert!(r.pass, "violations: {:?}", r.violations);
    }

    #[test]
    fn modulated_ell_matches_bump_lipschitz() {
        // For a Euclidean base, each spatial-Lipschitz addend is
        // β·|Δg|·max(Φ₀, |∇Φ₀|) = β·|Δg|, so ℓ_min → β·Lip(g) with
        // Lip(g) = 8/(3√3)/ρ.
        let rho = 0.5;
        let beta = 0.1;
        let a = Anisotropy::modulated(Anisotropy::euclidean(2), beta, pt2(0.0, 0.0), rho).unwrap();
        let r = validate_ellipticity(&a, 20000, 4242);
        let lip_g = 8.0 / (3.0 * 3.0f64.sqrt()) / rho;
        assert_relative_eq!(r.ell_min, beta * lip_g, max_relative = 2e-3);
    }

    #[test]
    fn parse_roundtrip() {
        assert!(Anisotropy::parse("euclidean", 2).is_ok());
        let q = Anisotropy::parse("quadratic:1,0,4", 2).unwrap();
        assert_eq!(q.kind, AnisotropyKind::Quadratic);
        let m = Anisotropy::parse("modulated:euclidean;beta=0.1;center=0.2,0.0;radius=0.5", 2).unwrap();
        assert_eq!(m.kind, AnisotropyKind::Modulated);
        assert!(Anisotropy::parse("fancy", 2).is_err());
        assert!(Anisotropy::parse("quadratic:1,0", 2).is_err());
        assert!(Anisotropy::parse("quadratic:-1,0,1", 2).is_err());
    }
}
