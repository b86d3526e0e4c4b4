//! Closed-form connectivity probabilities.
//!
//! Every value has the shape `(L(A₀) − L(hull X)) / (2·L(A₀) + 2πw)` for some
//! point set `X` derived from the path configurations involved, or an
//! inclusion–exclusion combination of such terms. `L` is always the
//! perimeter of the convex hull, so a segment counts twice its length.

mod compose;

pub use compose::{compose_pair, terminals, PairComposition, PairValues};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{diameter, hull_perimeter_of, Point};
use crate::network::{ConfigKind, Network, PathConfiguration};

/// Shape of the random disaster.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StripMode {
    /// Everything on one side of the strip is destroyed.
    HalfPlane,
    /// Only the strip itself (of this breadth) is destroyed.
    WideStrip { breadth: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisasterParams {
    pub w: f64,
    pub mode: StripMode,
}

impl DisasterParams {
    pub fn half_plane(w: f64) -> Self {
        DisasterParams {
            w,
            mode: StripMode::HalfPlane,
        }
    }

    pub fn wide_strip(w: f64, breadth: f64) -> Self {
        DisasterParams {
            w,
            mode: StripMode::WideStrip { breadth },
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.w.is_finite() && self.w >= 0.0) {
            return Err(Error::param(format!(
                "w must be finite and nonnegative, got {}",
                self.w
            )));
        }
        if let StripMode::WideStrip { breadth } = self.mode {
            if !(breadth.is_finite() && breadth > 0.0) {
                return Err(Error::param(format!(
                    "wide strip breadth must be positive, got {breadth}"
                )));
            }
        }
        Ok(())
    }

    /// Breadth of the sampled strip: `w`, or `W` for the wide strip.
    pub fn sampled_breadth(&self) -> f64 {
        match self.mode {
            StripMode::HalfPlane => self.w,
            StripMode::WideStrip { breadth } => breadth,
        }
    }

    /// Measure of all strips meeting a region of perimeter `l0`.
    pub fn denominator(&self, l0: f64) -> f64 {
        2.0 * l0 + 2.0 * PI * self.sampled_breadth()
    }
}

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(Error::param(format!("probability out of range: {value}")))
        }
    }

    /// Rounding can push a vanishing numerator a few ulps below zero.
    fn from_ratio(value: f64) -> Self {
        Probability(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

/// A single-route feeder between a ring node (`attach`) and an off-ring node
/// (`end`). Without a configuration the feeder is empty and `end == attach`.
#[derive(Debug, Clone, Copy)]
pub struct Stub<'a> {
    pub attach: usize,
    pub end: usize,
    pub config: Option<&'a PathConfiguration>,
}

impl<'a> Stub<'a> {
    pub fn at(node: usize) -> Self {
        Stub {
            attach: node,
            end: node,
            config: None,
        }
    }

    pub fn route(net: &Network, cfg: &'a PathConfiguration, attach: usize) -> Result<Self> {
        let end = cfg.other_end(attach).ok_or_else(|| {
            Error::NodeMismatch(format!(
                "{} is not an end of {}",
                net.node_id(attach),
                net.config_label(cfg)
            ))
        })?;
        Ok(Stub {
            attach,
            end,
            config: Some(cfg),
        })
    }
}

/// Evaluator for one network under fixed disaster parameters.
#[derive(Debug, Clone)]
pub struct ClosedForm<'a> {
    net: &'a Network,
    params: DisasterParams,
    l0: f64,
    denom: f64,
    /// A directed wide strip and its reverse are the same set, so each
    /// missing placement is counted twice.
    scale: f64,
}

impl<'a> ClosedForm<'a> {
    pub fn new(net: &'a Network, params: DisasterParams) -> Result<Self> {
        params.validate()?;
        let l0 = net.area().perimeter();
        let scale = match params.mode {
            StripMode::HalfPlane => 1.0,
            StripMode::WideStrip { .. } => 2.0,
        };
        Ok(ClosedForm {
            net,
            params,
            l0,
            denom: params.denominator(l0),
            scale,
        })
    }

    pub fn network(&self) -> &'a Network {
        self.net
    }

    pub fn params(&self) -> DisasterParams {
        self.params
    }

    pub fn area_perimeter(&self) -> f64 {
        self.l0
    }

    pub fn denominator(&self) -> f64 {
        self.denom
    }

    fn check_breadth(&self, involved: &[Point]) -> Result<()> {
        if let StripMode::WideStrip { breadth } = self.params.mode {
            let d_max = diameter(involved);
            if breadth <= d_max {
                return Err(Error::WideStripTooNarrow { breadth, d_max });
            }
        }
        Ok(())
    }

    /// Probability that a disaster misses every point of `hull_of`; the
    /// wide-strip precondition is checked against all of `involved`.
    fn miss(&self, hull_of: &[Point], involved: &[Point]) -> Result<Probability> {
        self.check_breadth(involved)?;
        Ok(Probability::from_ratio(self.numerator(hull_of)? / self.denom))
    }

    fn numerator(&self, points: &[Point]) -> Result<f64> {
        Ok(self.scale * (self.l0 - hull_perimeter_of(points)?))
    }

    fn single_points(&self, cfg: &PathConfiguration) -> Result<Vec<Point>> {
        if cfg.kind != ConfigKind::Single {
            return Err(Error::WrongKind {
                id: self.net.config_label(cfg),
                expected: "single",
            });
        }
        self.net.config_points(cfg)
    }

    fn stub_points(&self, stub: &Stub<'_>) -> Result<Vec<Point>> {
        match stub.config {
            Some(cfg) => {
                if cfg.other_end(stub.attach) != Some(stub.end) {
                    return Err(Error::NodeMismatch(format!(
                        "stub {} does not join {} and {}",
                        self.net.config_label(cfg),
                        self.net.node_id(stub.attach),
                        self.net.node_id(stub.end)
                    )));
                }
                self.single_points(cfg)
            }
            None if stub.end == stub.attach => Ok(vec![self.net.position(stub.attach)]),
            None => Err(Error::NodeMismatch(format!(
                "empty stub joins distinct nodes {} and {}",
                self.net.node_id(stub.attach),
                self.net.node_id(stub.end)
            ))),
        }
    }

    /// Ring node order plus every vertex of the cycle.
    fn ring(&self, ring: &PathConfiguration) -> Result<(&'a [usize], Vec<Point>)> {
        let order = self.net.ring_order(ring)?;
        Ok((order, self.net.config_points(ring)?))
    }

    fn ring_position(&self, ring: &PathConfiguration, order: &[usize], node: usize) -> Result<usize> {
        order
            .iter()
            .position(|&n| n == node)
            .ok_or_else(|| Error::NotOnRing {
                ring: self.net.config_label(ring),
                node: self.net.node_id(node).to_string(),
            })
    }

    /// Probability that the disaster misses the point set `c`.
    pub fn pr_miss(&self, c: &[Point]) -> Result<Probability> {
        if c.iter().any(|&p| !self.net.area().region.contains(p)) {
            return Err(Error::NotContained);
        }
        self.miss(c, c)
    }

    pub fn pr_single_route(&self, cfg: &PathConfiguration) -> Result<Probability> {
        let pts = self.single_points(cfg)?;
        self.miss(&pts, &pts)
    }

    /// Probability that `source` stays connected to every destination of the
    /// given single-route configurations at once.
    pub fn pr_all_destinations(&self, source: usize, cfgs: &[&PathConfiguration]) -> Result<Probability> {
        let mut pts = vec![self.net.position(source)];
        for cfg in cfgs {
            if cfg.other_end(source).is_none() {
                return Err(Error::NodeMismatch(format!(
                    "{} does not start at {}",
                    self.net.config_label(cfg),
                    self.net.node_id(source)
                )));
            }
            pts.extend(self.single_points(cfg)?);
        }
        self.miss(&pts, &pts)
    }

    /// Depends only on the positions of the two ring ends.
    pub fn pr_ring(&self, ring: &PathConfiguration) -> Result<Probability> {
        let (_, cycle) = self.ring(ring)?;
        let chord = [self.net.position(ring.source), self.net.position(ring.dest)];
        self.miss(&chord, &cycle)
    }

    /// Single route `i → k` followed by the ring `k → j`.
    pub fn pr_stub_then_ring(&self, stub: Stub<'_>, ring: &PathConfiguration) -> Result<Probability> {
        let far = ring.other_end(stub.attach).ok_or_else(|| Error::NotOnRing {
            ring: self.net.config_label(ring),
            node: self.net.node_id(stub.attach).to_string(),
        })?;
        let (_, cycle) = self.ring(ring)?;
        let mut pts = self.stub_points(&stub)?;
        pts.push(self.net.position(far));
        let mut involved = cycle;
        involved.extend_from_slice(&pts);
        self.miss(&pts, &involved)
    }

    /// Stub `i → k₁`, ring arcs `k₁ → k → k₂`, stub `k₂ → j`: connectivity of
    /// `i` and `j` through the ring node `k`.
    pub fn pr_route_ring_route(
        &self,
        stub1: Stub<'_>,
        ring: &PathConfiguration,
        k: usize,
        stub2: Stub<'_>,
    ) -> Result<Probability> {
        self.pr_backup_centers(stub1, stub2, ring, (k, k))
    }

    /// Connectivity of the hub `i` (on the ring) to the far end of every stub
    /// at once.
    pub fn pr_ring_hub_stars(
        &self,
        ring: &PathConfiguration,
        hub: usize,
        stubs: &[Stub<'_>],
    ) -> Result<Probability> {
        let (order, cycle) = self.ring(ring)?;
        self.ring_position(ring, order, hub)?;
        let mut pts = vec![self.net.position(hub)];
        for s in stubs {
            self.ring_position(ring, order, s.attach)?;
            pts.extend(self.stub_points(s)?);
        }
        let mut involved = cycle;
        involved.extend_from_slice(&pts);
        self.miss(&pts, &involved)
    }

    /// Connectivity of `i` (via the stub to ring node `k`) to at least one of
    /// the ring destinations. Only the nearest destination on each side of
    /// `k` matters, so longer lists reduce to those two.
    pub fn pr_backup_destinations(
        &self,
        stub: Stub<'_>,
        ring: &PathConfiguration,
        dests: &[usize],
    ) -> Result<Probability> {
        let (order, cycle) = self.ring(ring)?;
        let k = self.ring_position(ring, order, stub.attach)?;
        let n = order.len();
        let mut offsets = Vec::with_capacity(dests.len());
        for &d in dests {
            offsets.push(((self.ring_position(ring, order, d)? + n - k) % n, d));
        }
        let (j1, j2) = match offsets.len() {
            0 => return Err(Error::param("no backup destinations")),
            1 => (offsets[0].1, offsets[0].1),
            2 => (offsets[0].1, offsets[1].1),
            _ => {
                if let Some(&(_, d)) = offsets.iter().find(|o| o.0 == 0) {
                    (d, d)
                } else {
                    // counterclockwise-nearest has the smallest offset,
                    // clockwise-nearest the largest
                    let ccw = offsets.iter().min_by_key(|o| o.0).unwrap().1;
                    let cw = offsets.iter().max_by_key(|o| o.0).unwrap().1;
                    (cw, ccw)
                }
            }
        };
        let base = self.stub_points(&stub)?;
        let mut involved = cycle;
        involved.extend_from_slice(&base);
        self.inclusion_exclusion(&base, j1, j2, &involved)
    }

    /// Connectivity of `i` and `j` through at least one of two ring centers.
    pub fn pr_backup_centers(
        &self,
        stub1: Stub<'_>,
        stub2: Stub<'_>,
        ring: &PathConfiguration,
        centers: (usize, usize),
    ) -> Result<Probability> {
        let (order, cycle) = self.ring(ring)?;
        for node in [stub1.attach, stub2.attach, centers.0, centers.1] {
            self.ring_position(ring, order, node)?;
        }
        let mut base = self.stub_points(&stub1)?;
        base.extend(self.stub_points(&stub2)?);
        let mut involved = cycle;
        involved.extend_from_slice(&base);
        self.inclusion_exclusion(&base, centers.0, centers.1, &involved)
    }

    fn inclusion_exclusion(
        &self,
        base: &[Point],
        k1: usize,
        k2: usize,
        involved: &[Point],
    ) -> Result<Probability> {
        self.check_breadth(involved)?;
        let with = |extra: &[usize]| -> Result<f64> {
            let mut pts = base.to_vec();
            pts.extend(extra.iter().map(|&k| self.net.position(k)));
            hull_perimeter_of(&pts)
        };
        let num = if k1 == k2 {
            self.l0 - with(&[k1])?
        } else {
            self.l0 - with(&[k1])? - with(&[k2])? + with(&[k1, k2])?
        };
        Ok(Probability::from_ratio(self.scale * num / self.denom))
    }

    /// Expected number of configured destinations cut off from `source`.
    pub fn expected_disconnected(&self, source: usize, cfgs: &[&PathConfiguration]) -> Result<f64> {
        let mut total = 0.0;
        for cfg in cfgs {
            if cfg.other_end(source).is_none() {
                return Err(Error::NodeMismatch(format!(
                    "{} does not start at {}",
                    self.net.config_label(cfg),
                    self.net.node_id(source)
                )));
            }
            let p = match cfg.kind {
                ConfigKind::Single => self.pr_single_route(cfg)?,
                ConfigKind::Ring => self.pr_ring(cfg)?,
            };
            total += 1.0 - p.value();
        }
        Ok(total)
    }

    /// Straight-segment ("flybird") probability between two nodes.
    pub fn pr_straight(&self, a: usize, b: usize) -> Result<Probability> {
        let pts = [self.net.position(a), self.net.position(b)];
        self.miss(&pts, &pts)
    }
}
