//! Planar primitives: points, polylines, convex regions and hulls, support
//! functions, and the line/strip/half-plane predicates the survivability model
//! is built on.
//!
//! Lines are parameterized by `(p, θ)`: the set `{x : x·(cos θ, sin θ) = p}`.
//! The half-plane associated with a line is always the closed side
//! `{x : x·(cos θ, sin θ) ≥ p}`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance used for vertex dedupe and collinearity tests.
pub const RELATIVE_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Projection onto a unit direction.
    #[inline]
    pub fn dot(&self, dir: Direction) -> f64 {
        self.x * dir.cos + self.y * dir.sin
    }

    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point::new(x, y)
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// z-component of (b − a) × (c − a).
#[inline]
fn cross(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// `RELATIVE_EPS` times the bounding-box diagonal of `points`.
pub fn geometric_tolerance(points: &[Point]) -> f64 {
    let mut it = points.iter();
    let Some(first) = it.next() else {
        return 0.0;
    };
    let (mut lo, mut hi) = (*first, *first);
    for p in it {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    RELATIVE_EPS * hi.sub(lo).norm()
}

/// Largest pairwise distance in a point set.
pub fn diameter(points: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            best = best.max(a.dist(*b));
        }
    }
    best
}

/// Unit vector `(cos θ, sin θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub cos: f64,
    pub sin: f64,
}

impl Direction {
    pub fn new(theta: f64) -> Self {
        let (sin, cos) = theta.sin_cos();
        Direction { cos, sin }
    }

    pub fn opposite(self) -> Self {
        Direction {
            cos: -self.cos,
            sin: -self.sin,
        }
    }

    /// The direction rotated a quarter turn counterclockwise.
    pub fn normal(self) -> Self {
        Direction {
            cos: -self.sin,
            sin: self.cos,
        }
    }
}

/// A line `{x : x·(cos θ, sin θ) = p}`; `p` is signed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub p: f64,
    pub theta: f64,
}

impl Line {
    pub fn new(p: f64, theta: f64) -> Self {
        Line { p, theta }
    }

    /// The closed half-plane on the positive side of the line.
    pub fn half_plane(&self) -> HalfPlane {
        HalfPlane {
            dir: Direction::new(self.theta),
            offset: self.p,
        }
    }
}

/// Closed half-plane `{x : x·dir ≥ offset}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub dir: Direction,
    pub offset: f64,
}

impl HalfPlane {
    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        p.dot(self.dir) >= self.offset
    }

    pub fn intersects<S: Support + ?Sized>(&self, shape: &S) -> bool {
        shape.support(self.dir) >= self.offset
    }
}

/// Strip of breadth `w` whose midparallel line is `(p, θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Strip {
    pub p: f64,
    pub theta: f64,
    pub w: f64,
}

impl Strip {
    pub fn new(p: f64, theta: f64, w: f64) -> Self {
        Strip { p, theta, w }
    }
}

/// Support function `h(θ) = max_{x ∈ shape} x·(cos θ, sin θ)`.
pub trait Support {
    fn support(&self, dir: Direction) -> f64;
}

impl Support for Point {
    fn support(&self, dir: Direction) -> f64 {
        self.dot(dir)
    }
}

impl Support for [Point] {
    fn support(&self, dir: Direction) -> f64 {
        self.iter().map(|p| p.dot(dir)).fold(f64::NEG_INFINITY, f64::max)
    }
}

impl Support for Vec<Point> {
    fn support(&self, dir: Direction) -> f64 {
        self.as_slice().support(dir)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<Point>,
}

impl Polyline {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyGeometry);
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite("polyline".into()));
        }
        let tol = geometric_tolerance(&vertices);
        if vertices.windows(2).any(|w| w[0].dist(w[1]) <= tol) {
            return Err(Error::DegeneratePolyline("consecutive vertices coincide".into()));
        }
        Ok(Polyline { vertices })
    }

    /// A polyline made of a single point.
    pub fn point(p: Point) -> Self {
        Polyline { vertices: vec![p] }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn first(&self) -> Point {
        self.vertices[0]
    }

    pub fn last(&self) -> Point {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn length(&self) -> f64 {
        self.vertices.windows(2).map(|w| w[0].dist(w[1])).sum()
    }

    pub fn reversed(&self) -> Polyline {
        let mut v = self.vertices.clone();
        v.reverse();
        Polyline { vertices: v }
    }

    /// Concatenates polylines whose ends meet, merging each shared vertex.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Polyline>) -> Result<Polyline> {
        let mut out: Vec<Point> = Vec::new();
        for part in parts {
            match out.last() {
                None => out.extend_from_slice(&part.vertices),
                Some(&end) => {
                    let start = part.first();
                    let tol = geometric_tolerance(&[end, start, part.last()])
                        .max(RELATIVE_EPS * end.x.abs().max(end.y.abs()).max(1.0));
                    if end.dist(start) > tol {
                        return Err(Error::DegeneratePolyline("concatenated parts do not meet".into()));
                    }
                    out.extend_from_slice(&part.vertices[1..]);
                }
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyGeometry);
        }
        Ok(Polyline { vertices: out })
    }
}

impl Support for Polyline {
    fn support(&self, dir: Direction) -> f64 {
        self.vertices.support(dir)
    }
}

/// Convex hull in canonical form: counterclockwise, starting at the
/// lexicographically smallest vertex. Two vertices mean a segment, one a point.
#[derive(Debug, Clone, PartialEq)]
pub struct Hull {
    vertices: Vec<Point>,
}

impl Hull {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Perimeter; a segment counts both sides (2·length), a point is 0.
    pub fn perimeter(&self) -> f64 {
        closed_perimeter(&self.vertices)
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }
}

impl Support for Hull {
    fn support(&self, dir: Direction) -> f64 {
        self.vertices.support(dir)
    }
}

fn closed_perimeter(v: &[Point]) -> f64 {
    if v.len() < 2 {
        return 0.0;
    }
    let n = v.len();
    (0..n).map(|i| v[i].dist(v[(i + 1) % n])).sum()
}

/// Signed distance of `c` from the directed line `a → b` (positive on the left).
fn left_distance(a: Point, b: Point, c: Point) -> f64 {
    let len = a.dist(b);
    if len == 0.0 {
        return c.dist(a);
    }
    cross(a, b, c) / len
}

/// Smallest convex set containing `points` (Andrew's monotone chain).
pub fn convex_hull(points: &[Point]) -> Result<Hull> {
    if points.is_empty() {
        return Err(Error::EmptyGeometry);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite("hull input".into()));
    }
    let tol = geometric_tolerance(points);
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup_by(|b, a| a.dist(*b) <= tol);
    if pts.len() == 1 {
        return Ok(Hull { vertices: pts });
    }

    let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && left_distance(lower[lower.len() - 2], lower[lower.len() - 1], p) <= tol {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && left_distance(upper[upper.len() - 2], upper[upper.len() - 1], p) <= tol {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let mut hull = lower;

    // wrap-around vertices are not re-checked by the chains
    loop {
        let n = hull.len();
        if n < 3 {
            break;
        }
        let drop = (0..n).find(|&i| {
            let a = hull[(i + n - 1) % n];
            let b = hull[i];
            let c = hull[(i + 1) % n];
            a.dist(b) <= tol || left_distance(a, c, b) >= -tol
        });
        match drop {
            Some(i) => {
                hull.remove(i);
            }
            None => break,
        }
    }
    if hull.len() == 2 && hull[0].dist(hull[1]) <= tol {
        hull.truncate(1);
    }
    let start = hull
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)))
        .map(|(i, _)| i)
        .unwrap_or(0);
    hull.rotate_left(start);
    Ok(Hull { vertices: hull })
}

pub fn hull_perimeter(h: &Hull) -> f64 {
    h.perimeter()
}

/// Convenience: `hull_perimeter(convex_hull(points))`.
pub fn hull_perimeter_of(points: &[Point]) -> Result<f64> {
    Ok(convex_hull(points)?.perimeter())
}

/// Bounded convex area: a counterclockwise polygon or a disk.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexRegion {
    Polygon(Vec<Point>),
    Disk { center: Point, radius: f64 },
}

impl ConvexRegion {
    /// Builds a polygon region. Vertices may come in either orientation but
    /// must already be in convex position (collinear points are dropped).
    pub fn polygon(vertices: Vec<Point>) -> Result<Self> {
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite("polygon".into()));
        }
        let hull = convex_hull(&vertices)?;
        if hull.is_degenerate() {
            return Err(Error::InvalidRegion("polygon has no interior".into()));
        }
        let tol = geometric_tolerance(&vertices);
        let on_boundary = |p: &Point| {
            let v = hull.vertices();
            let n = v.len();
            (0..n).any(|i| {
                let (a, b) = (v[i], v[(i + 1) % n]);
                left_distance(a, b, *p).abs() <= tol && p.dist(a) + p.dist(b) <= a.dist(b) + 2.0 * tol
            })
        };
        if !vertices.iter().all(on_boundary) {
            return Err(Error::InvalidRegion("polygon is not convex".into()));
        }
        Ok(ConvexRegion::Polygon(hull.vertices))
    }

    pub fn disk(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::NonFinite("disk".into()));
        }
        if radius <= 0.0 {
            return Err(Error::InvalidRegion("disk radius must be positive".into()));
        }
        Ok(ConvexRegion::Disk { center, radius })
    }

    pub fn perimeter(&self) -> f64 {
        match self {
            ConvexRegion::Polygon(v) => closed_perimeter(v),
            ConvexRegion::Disk { radius, .. } => 2.0 * PI * radius,
        }
    }

    /// `max_θ h(θ)`: the radius of the smallest origin-centred disk containing
    /// the region.
    pub fn max_support(&self) -> f64 {
        match self {
            ConvexRegion::Polygon(v) => v.iter().map(|p| p.norm()).fold(0.0, f64::max),
            ConvexRegion::Disk { center, radius } => center.norm() + radius,
        }
    }

    fn tolerance(&self) -> f64 {
        match self {
            ConvexRegion::Polygon(v) => geometric_tolerance(v),
            ConvexRegion::Disk { radius, .. } => RELATIVE_EPS * 2.0 * radius,
        }
    }

    /// Closed containment with the region's geometric tolerance.
    pub fn contains(&self, p: Point) -> bool {
        let tol = self.tolerance();
        match self {
            ConvexRegion::Polygon(v) => {
                let n = v.len();
                (0..n).all(|i| left_distance(v[i], v[(i + 1) % n], p) >= -tol)
            }
            ConvexRegion::Disk { center, radius } => p.dist(*center) <= radius + tol,
        }
    }

    /// Whether the closed disk of `radius` around `center` lies inside.
    pub fn contains_disk(&self, center: Point, radius: f64) -> bool {
        let tol = self.tolerance();
        match self {
            ConvexRegion::Polygon(v) => {
                let n = v.len();
                (0..n).all(|i| left_distance(v[i], v[(i + 1) % n], center) >= radius - tol)
            }
            ConvexRegion::Disk { center: c, radius: r } => center.dist(*c) + radius <= r + tol,
        }
    }
}

impl Support for ConvexRegion {
    fn support(&self, dir: Direction) -> f64 {
        match self {
            ConvexRegion::Polygon(v) => v.support(dir),
            ConvexRegion::Disk { center, radius } => center.dot(dir) + radius,
        }
    }
}

/// `h(θ)` for any supported shape.
pub fn support_function<S: Support + ?Sized>(shape: &S, theta: f64) -> f64 {
    shape.support(Direction::new(theta))
}

/// True iff some point of `shape` lies in the closed half-plane `x·u ≥ p`.
pub fn halfplane_intersects<S: Support + ?Sized>(shape: &S, line: Line) -> bool {
    line.half_plane().intersects(shape)
}

/// True iff the strip meets the region:
/// `−h(θ+π) − w/2 ≤ p ≤ h(θ) + w/2`.
pub fn strip_intersects(region: &ConvexRegion, strip: Strip) -> bool {
    let dir = Direction::new(strip.theta);
    strip_meets(region, dir, strip.p, strip.w)
}

#[inline]
pub(crate) fn strip_meets<S: Support + ?Sized>(shape: &S, dir: Direction, p: f64, w: f64) -> bool {
    let half = 0.5 * w;
    p <= shape.support(dir) + half && p >= -shape.support(dir.opposite()) - half
}

/// Whether a closed polyline bounds a convex area: every turn has the same
/// sign (up to `eps`, measured as the sine of the turn angle) and the cycle
/// winds exactly once.
pub fn is_convex_cycle(cycle: &Polyline, eps: f64) -> Result<bool> {
    let v = cycle.vertices();
    let tol = geometric_tolerance(v);
    if v.len() < 2 || v[0].dist(v[v.len() - 1]) > tol {
        return Err(Error::NotACycle);
    }
    let mut pts: Vec<Point> = Vec::with_capacity(v.len());
    for &p in &v[..v.len() - 1] {
        if pts.last().is_none_or(|q: &Point| q.dist(p) > tol) {
            pts.push(p);
        }
    }
    while pts.len() > 1 && pts[0].dist(pts[pts.len() - 1]) <= tol {
        pts.pop();
    }
    let n = pts.len();
    if n < 3 {
        return Ok(false);
    }
    let (mut pos, mut neg) = (false, false);
    let mut turning = 0.0;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        let c = pts[(i + 2) % n];
        let e1 = b.sub(a);
        let e2 = c.sub(b);
        let cr = e1.x * e2.y - e1.y * e2.x;
        let dt = e1.x * e2.x + e1.y * e2.y;
        let s = cr / (e1.norm() * e2.norm());
        if s > eps {
            pos = true;
        } else if s < -eps {
            neg = true;
        }
        turning += cr.atan2(dt);
    }
    if pos && neg {
        return Ok(false);
    }
    Ok(((turning.abs() - 2.0 * PI).abs()) < 1e-6)
}

/// Twice the signed area of a closed vertex ring (positive when counterclockwise).
pub fn signed_area2(v: &[Point]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            a.x * b.y - b.x * a.y
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(f64, f64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn hull_drops_interior_point() {
        let h = convex_hull(&pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.), (0.5, 0.5)])).unwrap();
        assert_eq!(
            h.vertices(),
            pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).as_slice()
        );
        assert_eq!(h.perimeter(), 4.0);
    }

    #[test]
    fn collinear_input_gives_segment_hull() {
        let h = convex_hull(&pts(&[(1., 0.), (0., 0.), (2., 0.)])).unwrap();
        assert_eq!(h.vertices(), pts(&[(0., 0.), (2., 0.)]).as_slice());
        let seg = convex_hull(&pts(&[(0., 0.), (3., 0.)])).unwrap();
        assert_eq!(seg.perimeter(), 6.0);
    }

    #[test]
    fn single_point_and_duplicates() {
        let h = convex_hull(&pts(&[(2., 3.), (2., 3.), (2., 3.)])).unwrap();
        assert_eq!(h.vertices().len(), 1);
        assert_eq!(h.perimeter(), 0.0);
    }

    #[test]
    fn empty_hull_is_an_error() {
        let err = convex_hull(&[]).unwrap_err();
        assert_eq!(err.to_string(), "empty geometry");
    }

    #[test]
    fn hull_is_canonical_regardless_of_input_order() {
        let a = convex_hull(&pts(&[(1., 1.), (0., 1.), (1., 0.), (0., 0.)])).unwrap();
        let b = convex_hull(&pts(&[(0., 0.), (0., 1.), (1., 1.), (1., 0.)])).unwrap();
        assert_eq!(a, b);
        assert!(signed_area2(a.vertices()) > 0.0);
    }

    #[test]
    fn support_of_disk_and_square() {
        let d = ConvexRegion::disk(Point::new(0., 0.), 2.0).unwrap();
        assert!((support_function(&d, 1.234) - 2.0).abs() < 1e-15);
        let sq = ConvexRegion::polygon(pts(&[(0., 0.), (10., 0.), (10., 10.), (0., 10.)])).unwrap();
        assert_eq!(support_function(&sq, 0.0), 10.0);
    }

    #[test]
    fn halfplane_examples() {
        let line = Line::new(1.0, 0.0);
        assert!(!halfplane_intersects(&Point::new(0., 0.), line));
        let seg = Polyline::new(pts(&[(0., 0.), (2., 0.)])).unwrap();
        assert!(halfplane_intersects(&seg, line));
    }

    #[test]
    fn hull_touches_its_own_support_line() {
        let h = convex_hull(&pts(&[(0.3, 0.1), (2.2, 0.7), (1.1, 1.9), (-0.4, 1.2)])).unwrap();
        for k in 0..64 {
            let theta = -PI + k as f64 * PI / 32.0;
            let line = Line::new(support_function(&h, theta), theta);
            assert!(halfplane_intersects(&h, line));
        }
    }

    #[test]
    fn strip_against_unit_disk() {
        let d = ConvexRegion::disk(Point::new(0., 0.), 1.0).unwrap();
        for theta in [-3.0, -1.0, 0.0, 0.7, 2.5] {
            assert!(strip_intersects(&d, Strip::new(1.4, theta, 1.0)));
            assert!(!strip_intersects(&d, Strip::new(1.6, theta, 1.0)));
            assert!(strip_intersects(&d, Strip::new(-1.4, theta, 1.0)));
            assert!(!strip_intersects(&d, Strip::new(-1.6, theta, 1.0)));
        }
    }

    #[test]
    fn convex_cycle_checks() {
        let sq = Polyline::new(pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.), (0., 0.)])).unwrap();
        assert!(is_convex_cycle(&sq, 1e-9).unwrap());
        let l_shape = Polyline::new(pts(&[
            (0., 0.),
            (2., 0.),
            (2., 1.),
            (1., 1.),
            (1., 2.),
            (0., 2.),
            (0., 0.),
        ]))
        .unwrap();
        assert!(!is_convex_cycle(&l_shape, 1e-9).unwrap());
        let open = Polyline::new(pts(&[(0., 0.), (1., 0.), (1., 1.)])).unwrap();
        assert_eq!(
            is_convex_cycle(&open, 1e-9).unwrap_err().to_string(),
            "not a cycle"
        );
    }

    #[test]
    fn collinear_ring_nodes_stay_convex() {
        let sq = Polyline::new(pts(&[
            (0., 0.),
            (0.5, 0.),
            (1., 0.),
            (1., 1.),
            (0., 1.),
            (0., 0.5),
            (0., 0.),
        ]))
        .unwrap();
        assert!(is_convex_cycle(&sq, 1e-9).unwrap());
    }

    #[test]
    fn pentagram_is_not_convex() {
        let star: Vec<Point> = (0..=5)
            .map(|k| {
                let a = (k * 2 % 5) as f64 * 2.0 * PI / 5.0;
                Point::new(a.cos(), a.sin())
            })
            .collect();
        assert!(!is_convex_cycle(&Polyline::new(star).unwrap(), 1e-9).unwrap());
    }

    #[test]
    fn jittered_64_gon_is_convex() {
        let mut v: Vec<Point> = (0..64)
            .map(|k| {
                let a = k as f64 * 2.0 * PI / 64.0;
                let j = if k % 2 == 0 { 1e-12 } else { -1e-12 };
                Point::new(a.cos() + j, a.sin() - j)
            })
            .collect();
        v.push(v[0]);
        assert!(is_convex_cycle(&Polyline::new(v).unwrap(), 1e-9).unwrap());
    }

    #[test]
    fn non_convex_polygon_region_rejected() {
        let r = ConvexRegion::polygon(pts(&[(0., 0.), (2., 0.), (1., 0.5), (2., 2.), (0., 2.)]));
        assert!(r.is_err());
    }

    #[test]
    fn region_containment() {
        let sq = ConvexRegion::polygon(pts(&[(0., 0.), (10., 0.), (10., 10.), (0., 10.)])).unwrap();
        assert!(sq.contains(Point::new(10.0, 5.0)));
        assert!(!sq.contains(Point::new(10.1, 5.0)));
        assert!(sq.contains_disk(Point::new(5., 5.), 5.0));
        assert!(!sq.contains_disk(Point::new(5., 5.), 5.1));
        assert_eq!(sq.perimeter(), 40.0);
        assert_eq!(sq.max_support(), 200f64.sqrt());
    }

    #[test]
    fn polyline_rejects_repeated_vertices() {
        assert!(Polyline::new(pts(&[(0., 0.), (0., 0.)])).is_err());
        assert!(Polyline::new(vec![]).is_err());
        assert!(Polyline::new(pts(&[(0., f64::NAN)])).is_err());
    }
}
