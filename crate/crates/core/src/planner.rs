//! Design rules built on the closed forms: picking a physical route, ranking
//! node pairs, and placing a regional center plus a backup on a ring.

use std::cmp::Ordering;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{ConvexRegion, Point};
use crate::montecarlo::{estimate_event, Estimate, EventSpec, SimConfig};
use crate::network::{Network, PathConfiguration};
use crate::survivability::{compose_pair, terminals, ClosedForm, DisasterParams, Probability};

#[derive(Debug, Clone, PartialEq)]
pub struct RouteChoice {
    pub best: usize,
    pub probabilities: Vec<Probability>,
}

/// Picks the candidate route most likely to survive. Ties go to the shorter
/// route, then to the earlier candidate.
pub fn select_route(cf: &ClosedForm<'_>, candidates: &[&PathConfiguration]) -> Result<RouteChoice> {
    let net = cf.network();
    let first = candidates
        .first()
        .ok_or_else(|| Error::param("no candidate routes"))?;
    let mut scored = Vec::with_capacity(candidates.len());
    for c in candidates {
        if c.other_end(first.source) != Some(first.dest) {
            return Err(Error::NodeMismatch(format!(
                "{} does not join {}",
                net.config_label(c),
                net.config_label(first)
            )));
        }
        let length: f64 = net.config_geometry(c)?.iter().map(|p| p.length()).sum();
        scored.push((cf.pr_single_route(c)?, length));
    }
    let mut best = 0;
    for i in 1..scored.len() {
        let (p, len) = scored[i];
        let (bp, blen) = scored[best];
        if p > bp || (p == bp && len < blen) {
            best = i;
        }
    }
    Ok(RouteChoice {
        best,
        probabilities: scored.into_iter().map(|s| s.0).collect(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum RankStatus {
    Exact,
    /// No closed form applies; the value comes from simulation.
    Simulated,
    Unsupported(String),
}

impl RankStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RankStatus::Exact => "exact",
            RankStatus::Simulated => "simulated",
            RankStatus::Unsupported(_) => "unsupported",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairRank {
    pub a: usize,
    pub b: usize,
    pub status: RankStatus,
    pub exact: Option<f64>,
    pub independent: Option<f64>,
    pub line: Option<f64>,
    pub simulated: Option<Estimate>,
}

impl PairRank {
    /// Value the table is sorted by.
    pub fn value(&self) -> Option<f64> {
        self.exact.or(self.simulated.map(|e| e.mean))
    }
}

/// Connectivity probability of every pair of terminal nodes, best first.
/// Pairs without a closed form are simulated when `fallback` is given and
/// flagged otherwise.
pub fn rank_pairs(net: &Network, dp: DisasterParams, fallback: Option<&SimConfig>) -> Result<Vec<PairRank>> {
    let cf = ClosedForm::new(net, dp)?;
    let terms = terminals(net);
    let mut rows = Vec::new();
    for (x, &a) in terms.iter().enumerate() {
        for &b in &terms[x + 1..] {
            let mut row = PairRank {
                a,
                b,
                status: RankStatus::Exact,
                exact: None,
                independent: None,
                line: None,
                simulated: None,
            };
            match compose_pair(net, a, b).and_then(|c| cf.pair_values(&c)) {
                Ok(v) => {
                    row.exact = Some(v.exact.value());
                    row.independent = Some(v.independent.value());
                    row.line = Some(v.line.value());
                }
                Err(e @ (Error::Unsupported(_) | Error::WrongKind { .. })) => {
                    row.line = Some(cf.pr_straight(a, b)?.value());
                    match fallback {
                        Some(cfg) => {
                            row.status = RankStatus::Simulated;
                            row.simulated = Some(estimate_event(net, &EventSpec::Pair(a, b), dp, cfg)?);
                        }
                        None => row.status = RankStatus::Unsupported(e.to_string()),
                    }
                }
                Err(e) => return Err(e),
            }
            rows.push(row);
        }
    }
    rows.sort_by(|x, y| match (x.value(), y.value()) {
        (Some(p), Some(q)) => q.partial_cmp(&p).unwrap_or(Ordering::Equal),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    });
    Ok(rows)
}

/// Nodes evenly spaced on a circle around the origin, served by a regional
/// center somewhere on the same circle.
#[derive(Debug, Clone, PartialEq)]
pub struct RingPlanModel {
    pub ring_radius: f64,
    /// Angle between consecutive nodes.
    pub gamma: f64,
    pub node_count: usize,
    pub area: ConvexRegion,
    pub grid_step: f64,
    pub w: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlacementResult {
    /// Best angle for a lone center.
    pub alpha1: f64,
    pub e1: f64,
    /// Best `(center, backup)` angles.
    pub pair: Option<(f64, f64)>,
    pub e2: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlacementCell {
    pub alpha1: f64,
    pub alpha2: f64,
    pub e1: f64,
    pub e2: f64,
}

impl RingPlanModel {
    /// Area of interest defaults to the concentric disk of three ring radii.
    pub fn new(ring_radius: f64, gamma: f64, node_count: usize) -> Result<Self> {
        let area = ConvexRegion::disk(Point::new(0.0, 0.0), 3.0 * ring_radius)?;
        let model = RingPlanModel {
            ring_radius,
            gamma,
            node_count,
            area,
            grid_step: PI / 180.0,
            w: 0.0,
        };
        model.validate()?;
        Ok(model)
    }

    /// `n` nodes spread evenly over the whole circle.
    pub fn full_circle(ring_radius: f64, node_count: usize) -> Result<Self> {
        Self::new(ring_radius, 2.0 * PI / node_count.max(1) as f64, node_count)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.ring_radius) || !positive(self.gamma) || !positive(self.grid_step) {
            return Err(Error::param(
                "ring radius, node spacing and grid step must be positive",
            ));
        }
        if self.node_count == 0 {
            return Err(Error::param("node count must be positive"));
        }
        if self.node_count as f64 * self.gamma > 2.0 * PI * (1.0 + 1e-12) {
            return Err(Error::param("nodes wrap around the ring more than once"));
        }
        if !(self.w.is_finite() && self.w >= 0.0) {
            return Err(Error::param("w must be nonnegative"));
        }
        if !self.area.contains_disk(Point::new(0.0, 0.0), self.ring_radius) {
            return Err(Error::param("ring not inside A0"));
        }
        Ok(())
    }

    pub fn point_at(&self, angle: f64) -> Point {
        Point::new(self.ring_radius * angle.cos(), self.ring_radius * angle.sin())
    }

    pub fn nodes(&self) -> Vec<Point> {
        (0..self.node_count)
            .map(|j| self.point_at(j as f64 * self.gamma))
            .collect()
    }

    fn denominator(&self) -> f64 {
        2.0 * self.area.perimeter() + 2.0 * PI * self.w
    }

    /// Grid angles in `[0, 2π)`.
    pub fn grid(&self) -> Vec<f64> {
        let steps = ((2.0 * PI / self.grid_step) - 1e-9).ceil().max(1.0) as usize;
        (0..steps).map(|k| k as f64 * self.grid_step).collect()
    }

    /// Expected number of nodes cut off from a center at angle `alpha`.
    pub fn e1(&self, alpha: f64) -> f64 {
        self.e1_at(&self.nodes(), self.point_at(alpha))
    }

    fn e1_at(&self, nodes: &[Point], center: Point) -> f64 {
        let (l0, denom) = (self.area.perimeter(), self.denominator());
        nodes
            .iter()
            .map(|n| 1.0 - (l0 - 2.0 * n.dist(center)) / denom)
            .sum()
    }

    /// Expected number of nodes reaching neither center.
    pub fn e2(&self, alpha1: f64, alpha2: f64) -> f64 {
        self.e2_at(&self.nodes(), self.point_at(alpha1), self.point_at(alpha2))
    }

    fn e2_at(&self, nodes: &[Point], c1: Point, c2: Point) -> f64 {
        let (l0, denom) = (self.area.perimeter(), self.denominator());
        let between = c1.dist(c2);
        nodes
            .iter()
            .map(|n| {
                let (d1, d2) = (n.dist(c1), n.dist(c2));
                // hull perimeters of {n,c1}, {n,c2} and {n,c1,c2}; three points
                // always have a hull perimeter equal to their triangle's
                1.0 - (l0 - 2.0 * d1 - 2.0 * d2 + (d1 + d2 + between)) / denom
            })
            .sum()
    }

    /// Every grid cell `(α₁, α₂)` with both objectives.
    pub fn placement_grid(&self) -> Result<Vec<PlacementCell>> {
        self.validate()?;
        let nodes = self.nodes();
        let grid = self.grid();
        let pts: Vec<Point> = grid.iter().map(|&a| self.point_at(a)).collect();
        let e1: Vec<f64> = pts.iter().map(|&p| self.e1_at(&nodes, p)).collect();
        let mut cells = Vec::with_capacity(grid.len() * grid.len());
        for (i, &a1) in grid.iter().enumerate() {
            for (j, &a2) in grid.iter().enumerate() {
                cells.push(PlacementCell {
                    alpha1: a1,
                    alpha2: a2,
                    e1: e1[i],
                    e2: self.e2_at(&nodes, pts[i], pts[j]),
                });
            }
        }
        Ok(cells)
    }
}

/// Grid search for the best single center and the best center/backup pair.
/// Ties keep the first grid point.
pub fn optimize_backup(model: &RingPlanModel) -> Result<PlacementResult> {
    model.validate()?;
    let nodes = model.nodes();
    let grid = model.grid();
    let pts: Vec<Point> = grid.iter().map(|&a| model.point_at(a)).collect();

    let (mut a1, mut e1) = (grid[0], f64::INFINITY);
    for (k, &p) in pts.iter().enumerate() {
        let v = model.e1_at(&nodes, p);
        if v < e1 {
            (a1, e1) = (grid[k], v);
        }
    }
    let (mut best, mut e2) = ((grid[0], grid[0]), f64::INFINITY);
    for i in 0..grid.len() {
        for j in 0..grid.len() {
            let v = model.e2_at(&nodes, pts[i], pts[j]);
            if v < e2 {
                (best, e2) = ((grid[i], grid[j]), v);
            }
        }
    }
    // the degenerate pair (α₁*, α₁*) is on the grid, so E2* ≤ E1*
    Ok(PlacementResult {
        alpha1: a1,
        e1,
        pair: Some(best),
        e2: Some(e2),
    })
}
