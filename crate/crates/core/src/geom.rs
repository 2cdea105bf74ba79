//! Small geometric toolbox shared by every module.
//!
//! Points and vectors are `nalgebra::Vector3<f64>` throughout; planar
//! (n = 2) data lives in the z = 0 slice and the ambient dimension is
//! carried by the owning set or patch.

use nalgebra::{Matrix3, Vector3};

pub type Pt = Vector3<f64>;

pub fn pt2(x: f64, y: f64) -> Pt {
    Vector3::new(x, y, 0.0)
}

pub fn pt3(x: f64, y: f64, z: f64) -> Pt {
    Vector3::new(x, y, z)
}

/// 2D cross product (z-component of the 3D cross).
pub fn cross2(a: Pt, b: Pt) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Signed angle swept from `a` to `b` as seen from the origin, in (-π, π].
pub fn signed_angle(a: Pt, b: Pt) -> f64 {
    cross2(a, b).atan2(a.dot(&b))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ball {
    pub center: Pt,
    pub r: f64,
}

impl Ball {
    pub fn new(center: Pt, r: f64) -> Self {
        Ball { center, r }
    }

    pub fn contains(&self, p: Pt) -> bool {
        (p - self.center).norm_squared() < self.r * self.r
    }
}

/// Cylinder C_ν(x, r): |(y-x)·ν| < r and |y-x-((y-x)·ν)ν| < r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cylinder {
    pub center: Pt,
    pub axis: Pt,
    pub r: f64,
}

impl Cylinder {
    pub fn new(center: Pt, axis: Pt, r: f64) -> Self {
        Cylinder {
            center,
            axis: axis.normalize(),
            r,
        }
    }

    pub fn contains(&self, p: Pt) -> bool {
        let d = p - self.center;
        let h = d.dot(&self.axis);
        if h.abs() >= self.r {
            return false;
        }
        (d - h * self.axis).norm_squared() < self.r * self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    Ball(Ball),
    Cylinder(Cylinder),
}

impl Region {
    pub fn contains(&self, p: Pt) -> bool {
        match self {
            Region::Ball(b) => b.contains(p),
            Region::Cylinder(c) => c.contains(p),
        }
    }

    /// A ball that contains the region (used for candidate pre-filtering).
    pub fn bounding_ball(&self) -> Ball {
        match self {
            Region::Ball(b) => *b,
            Region::Cylinder(c) => Ball::new(c.center, c.r * std::f64::consts::SQRT_2 + 1e-12),
        }
    }
}

/// Orthonormal frame adapted to a unit direction `axis` (the last axis).
///
/// In 2D the single tangent is the +90° rotation of the axis, so the
/// frame is deterministic; in 3D the tangent pair is picked from the
/// least-aligned coordinate axis.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    pub t1: Pt,
    pub t2: Pt,
    pub axis: Pt,
    pub n: usize,
}

impl Frame {
    pub fn from_axis(axis: Pt, n: usize) -> Frame {
        let axis = axis.normalize();
        if n == 2 {
            Frame {
                t1: pt2(axis.y, -axis.x),
                t2: Vector3::z(),
                axis,
                n,
            }
        } else {
            let a = if axis.x.abs() <= axis.y.abs() && axis.x.abs() <= axis.z.abs() {
                Vector3::x()
            } else if axis.y.abs() <= axis.z.abs() {
                Vector3::y()
            } else {
                Vector3::z()
            };
            let t1 = axis.cross(&a).normalize();
            let t2 = axis.cross(&t1);
            Frame { t1, t2, axis, n }
        }
    }

    /// World point -> (tangential..., height) coordinates relative to `origin`.
    pub fn to_local(&self, origin: Pt, p: Pt) -> Pt {
        let d = p - origin;
        Vector3::new(d.dot(&self.t1), d.dot(&self.t2), d.dot(&self.axis))
    }

    pub fn to_world(&self, origin: Pt, local: Pt) -> Pt {
        origin + local.x * self.t1 + local.y * self.t2 + local.z * self.axis
    }

    /// Height of `p` above the plane through `origin` orthogonal to the axis.
    pub fn height(&self, origin: Pt, p: Pt) -> f64 {
        (p - origin).dot(&self.axis)
    }

    /// Lateral (tangential) offset vector of `p`.
    pub fn lateral(&self, origin: Pt, p: Pt) -> Pt {
        let d = p - origin;
        d - d.dot(&self.axis) * self.axis
    }
}

/// Rotation-free symmetric matrix helpers on the leading n×n block.
pub fn sym_spectral_norm(m: &Matrix3<f64>, n: usize) -> f64 {
    if n == 2 {
        let a = m[(0, 0)];
        let b = m[(0, 1)];
        let c = m[(1, 1)];
        let t = 0.5 * (a + c);
        let d = (0.25 * (a - c) * (a - c) + b * b).sqrt();
        (t + d).abs().max((t - d).abs())
    } else {
        m.symmetric_eigenvalues().iter().fold(0.0, |acc, &e| acc.max(e.abs()))
    }
}

/// Eigenvalue range of the leading n×n block of a symmetric matrix.
pub fn sym_eig_range(m: &Matrix3<f64>, n: usize) -> (f64, f64) {
    if n == 2 {
        let a = m[(0, 0)];
        let b = m[(0, 1)];
        let c = m[(1, 1)];
        let t = 0.5 * (a + c);
        let d = (0.25 * (a - c) * (a - c) + b * b).sqrt();
        (t - d, t + d)
    } else {
        let ev = m.symmetric_eigenvalues();
        (ev.min(), ev.max())
    }
}

/// Intersection interval of the segment a + t(b-a), t in [0,1], with an
/// open disk/ball around `center`: returns the sub-interval (t0, t1) whose
/// interior lies inside, or None.
pub fn segment_ball_interval(a: Pt, b: Pt, ball: &Ball) -> Option<(f64, f64)> {
    let d = b - a;
    let f = a - ball.center;
    let qa = d.norm_squared();
    if qa == 0.0 {
        return None;
    }
    let qb = f.dot(&d);
    let qc = f.norm_squared() - ball.r * ball.r;
    let disc = qb * qb - qa * qc;
    if disc <= 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    let t0 = ((-qb - sq) / qa).max(0.0);
    let t1 = ((-qb + sq) / qa).min(1.0);
    if t1 <= t0 {
        None
    } else {
        Some((t0, t1))
    }
}

/// Liang-Barsky clip of a segment to the axis box |u| < r, |v| < r in the
/// 2D local frame coordinates (u = lateral, v = height). Inputs are local.
pub fn segment_box_interval(a: Pt, b: Pt, r: f64) -> Option<(f64, f64)> {
    let mut t0 = 0.0f64;
    let mut t1 = 1.0f64;
    let d = b - a;
    for (p, q) in [
        (-d.x, a.x + r), // u > -r
        (d.x, r - a.x),  // u < r
        (-d.z, a.z + r), // v > -r
        (d.z, r - a.z),  // v < r
    ] {
        if p == 0.0 {
            if q <= 0.0 {
                return None;
            }
        } else {
            let t = q / p;
            if p < 0.0 {
                t0 = t0.max(t);
            } else {
                t1 = t1.min(t);
            }
        }
    }
    if t1 <= t0 {
        None
    } else {
        Some((t0, t1))
    }
}

/// Even-odd point-in-polygon test over a list of loops (z ignored).
pub fn point_in_loops(loops: &[Vec<Pt>], p: Pt) -> bool {
    let mut inside = false;
    for lp in loops {
        let k = lp.len();
        for i in 0..k {
            let a = lp[i];
            let b = lp[(i + 1) % k];
            if (a.y > p.y) != (b.y > p.y) {
                let xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if p.x < xint {
                    inside = !inside;
                }
            }
        }
    }
    inside
}

/// Signed area of a loop (CCW positive).
pub fn loop_signed_area(lp: &[Pt]) -> f64 {
    let k = lp.len();
    let mut s = 0.0;
    for i in 0..k {
        s += cross2(lp[i], lp[(i + 1) % k]);
    }
    0.5 * s
}

/// Exact area of (polygon ∩ disk) by per-edge Green's-theorem
/// accumulation: portions of an edge inside the disk contribute triangle
/// terms, portions outside contribute circular-sector terms. Signed loops
/// (holes clockwise) subtract automatically; a loop enclosing the whole
/// disk contributes the full disk area through the winding of its sector
/// terms.
pub fn loops_disk_area(loops: &[Vec<Pt>], ball: &Ball) -> f64 {
    let r2 = ball.r * ball.r;
    let mut area = 0.0;
    for lp in loops {
        let k = lp.len();
        for i in 0..k {
            let a = lp[i] - ball.center;
            let b = lp[(i + 1) % k] - ball.center;
            match segment_ball_interval(lp[i], lp[(i + 1) % k], ball) {
                None => {
                    area += 0.5 * r2 * signed_angle(a, b);
                }
                Some((t0, t1)) => {
                    let d = b - a;
                    let p0 = a + t0 * d;
                    let p1 = a + t1 * d;
                    if t0 > 0.0 {
                        area += 0.5 * r2 * signed_angle(a, p0);
                    }
                    area += 0.5 * cross2(p0, p1);
                    if t1 < 1.0 {
                        area += 0.5 * r2 * signed_angle(p1, b);
                    }
                }
            }
        }
    }
    area
}

/// Clip a polygon loop against the half-plane {p : p·normal <= offset}
/// (one Sutherland-Hodgman pass). Used by the set generators.
pub fn clip_loop_halfplane(lp: &[Pt], normal: Pt, offset: f64) -> Vec<Pt> {
    let mut out = Vec::with_capacity(lp.len() + 2);
    let k = lp.len();
    let side = |p: &Pt| p.dot(&normal) - offset;
    for i in 0..k {
        let cur = lp[i];
        let nxt = lp[(i + 1) % k];
        let sc = side(&cur);
        let sn = side(&nxt);
        if sc <= 0.0 {
            out.push(cur);
            if sn > 0.0 {
                let t = sc / (sc - sn);
                out.push(cur + t * (nxt - cur));
            }
        } else if sn <= 0.0 {
            let t = sc / (sc - sn);
            out.push(cur + t * (nxt - cur));
        }
    }
    out
}

/// Volume of the unit ball in dimension n.
pub fn unit_ball_volume(n: usize) -> f64 {
    match n {
        1 => 2.0,
        2 => std::f64::consts::PI,
        3 => 4.0 * std::f64::consts::PI / 3.0,
        _ => panic!("unsupported dimension {n}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn square(side: f64) -> Vec<Pt> {
        let s = side / 2.0;
        vec![pt2(-s, -s), pt2(s, -s), pt2(s, s), pt2(-s, s)]
    }

    #[test]
    fn disk_area_disk_inside_polygon() {
        let loops = vec![square(10.0)];
        let b = Ball::new(pt2(0.3, -0.2), 1.0);
        assert_relative_eq!(loops_disk_area(&loops, &b), PI, max_relative = 1e-12);
    }

    #[test]
    fn disk_area_polygon_inside_disk() {
        let loops = vec![square(1.0)];
        let b = Ball::new(pt2(0.0, 0.0), 5.0);
        assert_relative_eq!(loops_disk_area(&loops, &b), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn disk_area_halfplane() {
        // Big square acting as the half-plane y <= 0; ball centered on the
        // boundary: exactly half the disk.
        let loops = vec![vec![pt2(-50.0, -50.0), pt2(50.0, -50.0), pt2(50.0, 0.0), pt2(-50.0, 0.0)]];
        let b = Ball::new(pt2(1.0, 0.0), 2.0);
        assert_relative_eq!(loops_disk_area(&loops, &b), 0.5 * PI * 4.0, max_relative = 1e-12);
    }

    #[test]
    fn disk_area_with_hole() {
        let outer = square(4.0);
        let mut inner = square(2.0);
        inner.reverse(); // hole, clockwise
        let b = Ball::new(pt2(0.0, 0.0), 10.0);
        assert_relative_eq!(loops_disk_area(&[outer, inner], &b), 16.0 - 4.0, max_relative = 1e-12);
    }

    #[test]
    fn disk_area_disjoint() {
        let loops = vec![square(1.0)];
        let b = Ball::new(pt2(10.0, 0.0), 1.0);
        assert_relative_eq!(loops_disk_area(&loops, &b), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn segment_ball_clip() {
        let b = Ball::new(pt2(0.0, 0.0), 1.0);
        let (t0, t1) = segment_ball_interval(pt2(-2.0, 0.0), pt2(2.0, 0.0), &b).unwrap();
        assert_relative_eq!(t0, 0.25, max_relative = 1e-12);
        assert_relative_eq!(t1, 0.75, max_relative = 1e-12);
        assert!(segment_ball_interval(pt2(-2.0, 2.0), pt2(2.0, 2.0), &b).is_none());
    }

    #[test]
    fn point_in_polygon_even_odd() {
        let outer = square(4.0);
        let mut inner = square(2.0);
        inner.reverse();
        let loops = vec![outer, inner];
        assert!(!point_in_loops(&loops, pt2(0.0, 0.0))); // inside the hole
        assert!(point_in_loops(&loops, pt2(1.5, 0.0)));
        assert!(!point_in_loops(&loops, pt2(3.0, 0.0)));
    }

    #[test]
    fn frame_roundtrip() {
        let f = Frame::from_axis(pt3(0.3, -0.4, 0.9), 3);
        let p = pt3(0.2, 0.7, -0.1);
        let origin = pt3(1.0, 2.0, 3.0);
        let back = f.to_world(origin, f.to_local(origin, p));
        assert_relative_eq!((back - p).norm(), 0.0, epsilon = 1e-12);
        // Orthonormality
        assert_relative_eq!(f.t1.dot(&f.t2), 0.0, epsilon = 1e-12);
        assert_relative_eq!(f.t1.dot(&f.axis), 0.0, epsilon = 1e-12);
        assert_relative_eq!(f.t1.norm(), 1.0, epsilon = 1e-12);
    }
}
