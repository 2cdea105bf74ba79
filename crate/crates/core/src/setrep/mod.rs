//! Discrete sets of finite perimeter (n ∈ {2,3}) and their reduced
//! boundaries.
//!
//! Two representations: an exact 2D polygonal region (`PolyCurveSet`)
//! and a 2D/3D voxel indicator (`VoxelSet`). Every estimator is
//! validated on the exact representation first; voxel tolerances are
//! calibrated from that comparison.

mod extract;
mod poly;
mod voxel;

pub use poly::PolyCurveSet;
pub use voxel::{rasterize, VoxelSet};

use crate::geom::{segment_ball_interval, segment_box_interval, Ball, Cylinder, Frame, Pt, Region};
use crate::{Error, Result};

/// Geometry backing a boundary facet; kept alongside the (centroid,
/// normal, measure) triple so clipping can split segments exactly.
#[derive(Debug, Clone, Copy)]
pub enum FacetGeom {
    Segment { a: Pt, b: Pt },
    Tri { a: Pt, b: Pt, c: Pt },
}

#[derive(Debug, Clone, Copy)]
pub struct Facet {
    pub centroid: Pt,
    /// Outward unit normal (E to E^c).
    pub normal: Pt,
    /// H^{n-1} measure of the facet.
    pub measure: f64,
    pub geom: FacetGeom,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Provenance {
    Exact,
    Extracted { smoothing: f64, h: f64 },
}

/// Extracted reduced boundary as facets.
#[derive(Debug, Clone)]
pub struct BoundaryPatch {
    pub n: usize,
    pub facets: Vec<Facet>,
    pub provenance: Provenance,
    /// Set when extraction saw an empty or full indicator.
    pub empty_or_full: bool,
}

impl BoundaryPatch {
    pub fn total_measure(&self) -> f64 {
        self.facets.iter().map(|f| f.measure).sum()
    }

    /// ∮ ν_E dH^{n-1}; zero for a closed boundary.
    pub fn normal_integral(&self) -> Pt {
        self.facets
            .iter()
            .fold(Pt::zeros(), |acc, f| acc + f.measure * f.normal)
    }

    /// Length scale of the discretization: extraction grid pitch when
    /// known, otherwise the median facet size.
    pub fn h_hint(&self) -> f64 {
        if let Provenance::Extracted { h, .. } = self.provenance {
            return h;
        }
        let mut sizes: Vec<f64> = self
            .facets
            .iter()
            .map(|f| if self.n == 2 { f.measure } else { f.measure.sqrt() })
            .collect();
        if sizes.is_empty() {
            return 0.0;
        }
        sizes.sort_by(f64::total_cmp);
        sizes[sizes.len() / 2]
    }

    /// Closedness tolerance from the patch invariant: 1e-9 for exact
    /// patches, 3h·total measure for extracted ones.
    pub fn closedness_tolerance(&self) -> f64 {
        match self.provenance {
            Provenance::Exact => 1e-9,
            Provenance::Extracted { h, .. } => 3.0 * h * self.total_measure(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for f in &self.facets {
            if (f.normal.norm() - 1.0).abs() > 1e-9 {
                return Err(Error::Degenerate(format!(
                    "non-unit facet normal {:?}",
                    f.normal
                )));
            }
            if f.measure <= 0.0 {
                return Err(Error::Degenerate("non-positive facet measure".into()));
            }
        }
        let net = self.normal_integral().norm();
        if !self.facets.is_empty() && net > self.closedness_tolerance() {
            return Err(Error::Degenerate(format!(
                "boundary not closed: |∮ν| = {net}"
            )));
        }
        Ok(())
    }

    /// Exact geometric clipping of facets against a ball or cylinder.
    /// In n = 2 segments are split at the region boundary; in n = 3 a
    /// facet is kept with weight equal to the fraction of its area inside
    /// the region, estimated by 3-point (edge midpoint) subsampling.
    pub fn clip(&self, region: &Region) -> BoundaryPatch {
        let mut out = Vec::new();
        for f in &self.facets {
            match f.geom {
                FacetGeom::Segment { a, b } => {
                    let interval = match region {
                        Region::Ball(ball) => segment_ball_interval(a, b, ball),
                        Region::Cylinder(cyl) => {
                            let fr = Frame::from_axis(cyl.axis, 2);
                            let la = fr.to_local(cyl.center, a);
                            let lb = fr.to_local(cyl.center, b);
                            segment_box_interval(la, lb, cyl.r)
                        }
                    };
                    if let Some((t0, t1)) = interval {
                        let d = b - a;
                        let pa = a + t0 * d;
                        let pb = a + t1 * d;
                        let measure = (t1 - t0) * f.measure;
                        if measure > 0.0 {
                            out.push(Facet {
                                centroid: 0.5 * (pa + pb),
                                normal: f.normal,
                                measure,
                                geom: FacetGeom::Segment { a: pa, b: pb },
                            });
                        }
                    }
                }
                FacetGeom::Tri { a, b, c } => {
                    let samples = [0.5 * (a + b), 0.5 * (b + c), 0.5 * (c + a)];
                    let inside: Vec<Pt> =
                        samples.into_iter().filter(|p| region.contains(*p)).collect();
                    if !inside.is_empty() {
                        let frac = inside.len() as f64 / 3.0;
                        let centroid =
                            inside.iter().fold(Pt::zeros(), |s, p| s + p) / inside.len() as f64;
                        out.push(Facet {
                            centroid,
                            normal: f.normal,
                            measure: frac * f.measure,
                            geom: f.geom,
                        });
                    }
                }
            }
        }
        BoundaryPatch {
            n: self.n,
            facets: out,
            provenance: self.provenance,
            empty_or_full: false,
        }
    }

    /// Complement clip (facet parts outside the region); together with
    /// `clip` this partitions the total measure exactly in n = 2.
    pub fn clip_ball_complement(&self, ball: &Ball) -> BoundaryPatch {
        let mut out = Vec::new();
        for f in &self.facets {
            match f.geom {
                FacetGeom::Segment { a, b } => {
                    let d = b - a;
                    let mut push = |t0: f64, t1: f64| {
                        if t1 > t0 {
                            let pa = a + t0 * d;
                            let pb = a + t1 * d;
                            out.push(Facet {
                                centroid: 0.5 * (pa + pb),
                                normal: f.normal,
                                measure: (t1 - t0) * f.measure,
                                geom: FacetGeom::Segment { a: pa, b: pb },
                            });
                        }
                    };
                    match segment_ball_interval(a, b, ball) {
                        None => push(0.0, 1.0),
                        Some((t0, t1)) => {
                            push(0.0, t0);
                            push(t1, 1.0);
                        }
                    }
                }
                FacetGeom::Tri { a, b, c } => {
                    let samples = [0.5 * (a + b), 0.5 * (b + c), 0.5 * (c + a)];
                    let outside: Vec<Pt> = samples
                        .into_iter()
                        .filter(|p| !ball.contains(*p))
                        .collect();
                    if !outside.is_empty() {
                        let frac = outside.len() as f64 / 3.0;
                        let centroid =
                            outside.iter().fold(Pt::zeros(), |s, p| s + p) / outside.len() as f64;
                        out.push(Facet {
                            centroid,
                            normal: f.normal,
                            measure: frac * f.measure,
                            geom: f.geom,
                        });
                    }
                }
            }
        }
        BoundaryPatch {
            n: self.n,
            facets: out,
            provenance: self.provenance,
            empty_or_full: false,
        }
    }

    /// Distance from `x` to the nearest facet (segment distance in 2D,
    /// centroid distance in 3D).
    pub fn distance_to_boundary(&self, x: Pt) -> f64 {
        let mut best = f64::INFINITY;
        for f in &self.facets {
            let d = match f.geom {
                FacetGeom::Segment { a, b } => {
                    let ab = b - a;
                    let t = ((x - a).dot(&ab) / ab.norm_squared()).clamp(0.0, 1.0);
                    (x - (a + t * ab)).norm()
                }
                FacetGeom::Tri { .. } => (x - f.centroid).norm(),
            };
            best = best.min(d);
        }
        best
    }
}

/// A discrete set of finite perimeter in either representation.
#[derive(Debug, Clone)]
pub enum DiscreteSet {
    Poly(PolyCurveSet),
    Voxel(VoxelSet),
}

impl DiscreteSet {
    pub fn dim(&self) -> usize {
        match self {
            DiscreteSet::Poly(_) => 2,
            DiscreteSet::Voxel(v) => v.n,
        }
    }

    /// Extract the reduced boundary. `smoothing` (length units, a
    /// multiple of h in [0, 4h]) applies to voxel sets only; the
    /// polygonal boundary is exact.
    pub fn boundary(&self, smoothing: f64) -> Result<BoundaryPatch> {
        match self {
            DiscreteSet::Poly(p) => p.boundary(),
            DiscreteSet::Voxel(v) => extract::extract_boundary(v, smoothing),
        }
    }

    pub fn contains(&self, p: Pt) -> bool {
        match self {
            DiscreteSet::Poly(s) => s.contains(p),
            DiscreteSet::Voxel(v) => v.contains(p),
        }
    }

    /// |E ∩ B_r(x)|: exact polygon clipping in 2D, cell-center counting
    /// times hⁿ for voxels.
    pub fn volume_in(&self, ball: &Ball) -> f64 {
        match self {
            DiscreteSet::Poly(s) => s.volume_in(ball),
            DiscreteSet::Voxel(v) => v.volume_in(ball),
        }
    }

    /// Discretization length scale (h for voxels, median edge length for
    /// polygons).
    pub fn h_hint(&self) -> f64 {
        match self {
            DiscreteSet::Poly(p) => p.h_hint(),
            DiscreteSet::Voxel(v) => v.spacing,
        }
    }
}

/// Exact geometric clipping of a patch against a region (free-function
/// form of [`BoundaryPatch::clip`]).
pub fn clip_to_region(b: &BoundaryPatch, region: &Region) -> BoundaryPatch {
    b.clip(region)
}

pub use extract::extract_boundary;

#[allow(unused)]
fn cylinder_for_tests(center: Pt, axis: Pt, r: f64) -> Cylinder {
    Cylinder::new(center, axis, r)
}
