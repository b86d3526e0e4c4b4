//! Synthetic subscriber networks.
//!
//! * `tree`: a local center at the bottom-left corner, a trunk along the
//!   bottom edge and one column of subscribers hanging off every trunk node.
//! * `loop`: the same subscriber columns, but the trunk is closed into a
//!   rectangular loop through the center.
//! * `ring-hub`: a circular ring with a hub on it and leaves fanning out
//!   from the other ring nodes.
//! * `random-subscriber`: a random tree of bent feeders grown from a center.
//!
//! Every node is configured against the center, which is recorded in the
//! document, and the area of interest is a disk around the bounding box.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::network::{AreaDoc, ConfigDoc, ConfigKind, LinkDoc, Network, NetworkDocument, NodeDoc, RouteDoc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Template {
    Tree,
    Loop,
    RingHub,
    RandomSubscriber,
}

impl Template {
    pub const ALL: [Template; 4] = [
        Template::Tree,
        Template::Loop,
        Template::RingHub,
        Template::RandomSubscriber,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Template::Tree => "tree",
            Template::Loop => "loop",
            Template::RingHub => "ring-hub",
            Template::RandomSubscriber => "random-subscriber",
        }
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Template {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Template::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::param(format!("unknown template: {s}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub seed: u64,
    /// Subscriber columns (tree, loop).
    pub cols: usize,
    /// Subscribers per column (tree, loop).
    pub rows: usize,
    pub spacing: f64,
    /// Subscriber displacement as a fraction of `spacing`.
    pub jitter: f64,
    /// Radius of the area of interest in half-diagonals of the bounding box.
    pub area_scale: f64,
    /// Node count (random-subscriber).
    pub nodes: usize,
    /// Ring size (ring-hub).
    pub ring_nodes: usize,
    /// Leaves per ring node (ring-hub).
    pub fanout: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            seed: 0,
            cols: 4,
            rows: 4,
            spacing: 1.0,
            jitter: 0.2,
            area_scale: 2.0,
            nodes: 50,
            ring_nodes: 8,
            fanout: 2,
        }
    }
}

impl GenParams {
    fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.spacing) {
            return Err(Error::param("spacing must be positive"));
        }
        if !(self.jitter.is_finite() && (0.0..0.5).contains(&self.jitter)) {
            return Err(Error::param("jitter must lie in [0, 0.5)"));
        }
        if !(self.area_scale.is_finite() && self.area_scale >= 1.0) {
            return Err(Error::param("area scale must be at least 1"));
        }
        Ok(())
    }
}

pub fn generate(template: Template, params: &GenParams) -> Result<Network> {
    params.validate()?;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(params.seed);
    let mut b = Builder::default();
    match template {
        Template::Tree => tree(&mut b, params, &mut rng)?,
        Template::Loop => looped(&mut b, params, &mut rng)?,
        Template::RingHub => ring_hub(&mut b, params)?,
        Template::RandomSubscriber => random_subscriber(&mut b, params, &mut rng)?,
    }
    b.finish(params.area_scale)
}

#[derive(Default)]
struct Builder {
    nodes: Vec<NodeDoc>,
    links: Vec<LinkDoc>,
    routes: Vec<RouteDoc>,
    configs: Vec<ConfigDoc>,
    center: Option<String>,
    extra_points: Vec<Point>,
}

impl Builder {
    fn node(&mut self, id: String, p: Point) -> String {
        self.nodes.push(NodeDoc {
            id: id.clone(),
            x: p.x,
            y: p.y,
        });
        id
    }

    fn position(&self, id: &str) -> Point {
        let n = self.nodes.iter().find(|n| n.id == id).expect("node exists");
        Point::new(n.x, n.y)
    }

    fn link(&mut self, from: &str, to: &str, bend: Option<Point>) -> String {
        let id = format!("{from}-{to}");
        let polyline = bend.map(|m| vec![self.position(from).into(), m.into(), self.position(to).into()]);
        if let Some(m) = bend {
            self.extra_points.push(m);
        }
        self.links.push(LinkDoc {
            id: id.clone(),
            from: from.to_string(),
            to: to.to_string(),
            polyline,
        });
        id
    }

    fn route(&mut self, id: String, links: Vec<String>) -> String {
        self.routes.push(RouteDoc {
            id: id.clone(),
            links,
        });
        id
    }

    fn config(&mut self, source: &str, dest: &str, kind: ConfigKind, routes: Vec<String>) {
        self.configs.push(ConfigDoc {
            source: source.to_string(),
            dest: dest.to_string(),
            kind,
            routes,
        });
    }

    fn finish(self, area_scale: f64) -> Result<Network> {
        let pts: Vec<Point> = self
            .nodes
            .iter()
            .map(|n| Point::new(n.x, n.y))
            .chain(self.extra_points.iter().copied())
            .collect();
        let (lo, hi) = pts.iter().fold(
            (
                Point::new(f64::INFINITY, f64::INFINITY),
                Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
            ),
            |(lo, hi), p| {
                (
                    Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                    Point::new(hi.x.max(p.x), hi.y.max(p.y)),
                )
            },
        );
        let center = Point::new(0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
        let half_diag = (0.5 * lo.dist(hi)).max(1e-9);
        let doc = NetworkDocument {
            area: AreaDoc::Disk {
                center: center.into(),
                radius: area_scale * half_diag,
            },
            center: self.center,
            nodes: self.nodes,
            links: self.links,
            routes: Some(self.routes),
            configs: Some(self.configs),
        };
        Network::from_document(doc)
    }
}

fn jittered<R: Rng>(rng: &mut R, p: Point, amount: f64) -> Point {
    Point::new(
        p.x + amount * rng.random_range(-1.0..1.0),
        p.y + amount * rng.random_range(-1.0..1.0),
    )
}

/// Subscriber columns above trunk nodes `T1..Tc`; returns, per column, the
/// subscriber ids and the links climbing the column.
fn columns<R: Rng>(b: &mut Builder, p: &GenParams, rng: &mut R) -> Vec<Vec<(String, Vec<String>)>> {
    let s = p.spacing;
    let mut out = Vec::new();
    for c in 1..=p.cols {
        let mut prev = format!("T{c}");
        let mut climb: Vec<String> = Vec::new();
        let mut col = Vec::new();
        for r in 1..=p.rows {
            let pos = jittered(rng, Point::new(c as f64 * s, r as f64 * s), p.jitter * s);
            let id = b.node(format!("S{c}_{r}"), pos);
            climb.push(b.link(&prev, &id, None));
            col.push((id.clone(), climb.clone()));
            prev = id;
        }
        out.push(col);
    }
    out
}

fn tree<R: Rng>(b: &mut Builder, p: &GenParams, rng: &mut R) -> Result<()> {
    if p.cols == 0 || p.rows == 0 {
        return Err(Error::param("tree needs at least one column and row"));
    }
    let lc = b.node("lc".into(), Point::new(0.0, 0.0));
    b.center = Some(lc.clone());
    let mut trunk = Vec::new();
    let mut prev = lc.clone();
    for c in 1..=p.cols {
        let id = b.node(format!("T{c}"), Point::new(c as f64 * p.spacing, 0.0));
        trunk.push(b.link(&prev, &id, None));
        prev = id;
    }
    for (c, col) in columns(b, p, rng).into_iter().enumerate() {
        for (sub, climb) in col {
            let mut links = trunk[..=c].to_vec();
            links.extend(climb);
            let r = b.route(format!("lc~{sub}"), links);
            b.config(&lc, &sub, ConfigKind::Single, vec![r]);
        }
    }
    Ok(())
}

fn looped<R: Rng>(b: &mut Builder, p: &GenParams, rng: &mut R) -> Result<()> {
    if p.cols == 0 || p.rows == 0 {
        return Err(Error::param("loop needs at least one column and row"));
    }
    let s = p.spacing;
    let top = (p.rows as f64 + 1.0) * s;
    let lc = b.node("lc".into(), Point::new(0.0, 0.0));
    b.center = Some(lc.clone());
    // ring: lc, T1..Tc along the bottom, U_c..U_0 along the top
    let mut ring = vec![lc.clone()];
    for c in 1..=p.cols {
        ring.push(b.node(format!("T{c}"), Point::new(c as f64 * s, 0.0)));
    }
    for c in (0..=p.cols).rev() {
        ring.push(b.node(format!("U{c}"), Point::new(c as f64 * s, top)));
    }
    let n = ring.len();
    let ring_links: Vec<String> = (0..n)
        .map(|i| b.link(&ring[i], &ring[(i + 1) % n], None))
        .collect();
    for c in 1..=p.cols {
        let ccw = b.route(format!("lc~T{c}:a"), ring_links[..c].to_vec());
        let mut back = ring_links[c..].to_vec();
        back.reverse();
        let cw = b.route(format!("lc~T{c}:b"), back);
        b.config(&lc, &format!("T{c}"), ConfigKind::Ring, vec![ccw, cw]);
    }
    for (c, col) in columns(b, p, rng).into_iter().enumerate() {
        let base = format!("T{}", c + 1);
        for (sub, climb) in col {
            let r = b.route(format!("{base}~{sub}"), climb);
            b.config(&base, &sub, ConfigKind::Single, vec![r]);
        }
    }
    Ok(())
}

fn ring_hub(b: &mut Builder, p: &GenParams) -> Result<()> {
    if p.ring_nodes < 3 {
        return Err(Error::param("ring-hub needs at least three ring nodes"));
    }
    let (radius, n) = (p.spacing * p.ring_nodes as f64 / (2.0 * PI), p.ring_nodes);
    let ring: Vec<String> = (0..n)
        .map(|k| {
            let a = 2.0 * PI * k as f64 / n as f64;
            b.node(format!("R{k}"), Point::new(radius * a.cos(), radius * a.sin()))
        })
        .collect();
    b.center = Some(ring[0].clone());
    let ring_links: Vec<String> = (0..n)
        .map(|i| b.link(&ring[i], &ring[(i + 1) % n], None))
        .collect();
    for k in 1..n {
        let ccw = b.route(format!("R0~R{k}:a"), ring_links[..k].to_vec());
        let mut back = ring_links[k..].to_vec();
        back.reverse();
        let cw = b.route(format!("R0~R{k}:b"), back);
        b.config(&ring[0], &ring[k], ConfigKind::Ring, vec![ccw, cw]);
    }
    for (k, r) in ring.iter().enumerate().skip(1) {
        let a = 2.0 * PI * k as f64 / n as f64;
        for f in 0..p.fanout {
            let spread = (f as f64 - 0.5 * (p.fanout as f64 - 1.0)) * 0.5 * PI / n as f64;
            let len = p.spacing * (1.0 + 0.5 * (f % 2) as f64);
            let pos = Point::new(
                (radius + len) * (a + spread).cos(),
                (radius + len) * (a + spread).sin(),
            );
            let leaf = b.node(format!("L{k}_{f}"), pos);
            let l = b.link(r, &leaf, None);
            let route = b.route(format!("{r}~{leaf}"), vec![l]);
            b.config(r, &leaf, ConfigKind::Single, vec![route]);
        }
    }
    Ok(())
}

fn random_subscriber<R: Rng>(b: &mut Builder, p: &GenParams, rng: &mut R) -> Result<()> {
    if p.nodes < 2 {
        return Err(Error::param("random-subscriber needs at least two nodes"));
    }
    let side = p.spacing * (p.nodes as f64).sqrt();
    let c = b.node("c".into(), Point::new(0.5 * side, 0.5 * side));
    b.center = Some(c.clone());
    let mut ids = vec![c.clone()];
    let mut pos = vec![b.position(&c)];
    // path of links from the center to each node
    let mut paths: Vec<Vec<String>> = vec![Vec::new()];
    let min_gap = 0.05 * p.spacing;
    while ids.len() < p.nodes {
        let q = Point::new(side * rng.random::<f64>(), side * rng.random::<f64>());
        let (parent, d) = pos
            .iter()
            .enumerate()
            .map(|(i, &x)| (i, x.dist(q)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("center exists");
        if d < min_gap {
            continue;
        }
        let id = b.node(format!("n{}", ids.len()), q);
        // feeders follow streets, so bend them sideways by a random amount
        let from = pos[parent];
        let bend = rng.random_range(-0.3..0.3);
        let mid = Point::new(
            0.5 * (from.x + q.x) - bend * (q.y - from.y),
            0.5 * (from.y + q.y) + bend * (q.x - from.x),
        );
        let l = b.link(&ids[parent], &id, Some(mid));
        let mut path = paths[parent].clone();
        path.push(l);
        paths.push(path);
        ids.push(id);
        pos.push(q);
    }
    for (id, path) in ids.iter().zip(&paths).skip(1) {
        let r = b.route(format!("c~{id}"), path.clone());
        b.config(&c, id, ConfigKind::Single, vec![r]);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::is_convex_cycle;
    use crate::network::{parse_network, Element, SurvivalState};
    use crate::survivability::{compose_pair, terminals};

    #[test]
    fn templates_parse_and_round_trip() {
        for t in Template::ALL {
            let net = generate(t, &GenParams::default()).unwrap();
            let again = parse_network(&net.to_json()).unwrap();
            assert_eq!(again.to_json(), net.to_json(), "{t}");
        }
    }

    #[test]
    fn generation_is_deterministic_per_seed() {
        let p = GenParams {
            seed: 17,
            ..GenParams::default()
        };
        for t in Template::ALL {
            assert_eq!(
                generate(t, &p).unwrap().to_json(),
                generate(t, &p).unwrap().to_json()
            );
        }
        let q = GenParams {
            seed: 18,
            ..p.clone()
        };
        assert_ne!(
            generate(Template::Tree, &p).unwrap().to_json(),
            generate(Template::Tree, &q).unwrap().to_json()
        );
    }

    #[test]
    fn tree_pairs_reach_each_other_through_center() {
        let net = generate(Template::Tree, &GenParams::default()).unwrap();
        let terms = terminals(&net);
        assert_eq!(terms.len(), 16);
        let intact = SurvivalState::evaluate(&net, &|_: Element<'_>| false);
        let lc = net.center().unwrap();
        for &a in &terms {
            for &b in &terms {
                if a != b {
                    let comp = compose_pair(&net, a, b).unwrap();
                    assert!(comp.nodes.contains(&lc));
                    assert!(intact.connected(a, b));
                }
            }
        }
    }

    #[test]
    fn loop_rings_are_convex() {
        let net = generate(Template::Loop, &GenParams::default()).unwrap();
        let mut rings = 0;
        for c in net.configs().iter().filter(|c| c.kind == ConfigKind::Ring) {
            let g = net.config_geometry(c).unwrap();
            assert!(is_convex_cycle(&g[0], 1e-9).unwrap());
            rings += 1;
        }
        assert_eq!(rings, 4);
    }

    #[test]
    fn random_subscriber_with_fifty_nodes_validates() {
        let p = GenParams {
            nodes: 50,
            seed: 3,
            ..GenParams::default()
        };
        let net = generate(Template::RandomSubscriber, &p).unwrap();
        assert_eq!(net.nodes().len(), 50);
        assert_eq!(terminals(&net).len(), 49);
    }

    #[test]
    fn unknown_template_is_rejected() {
        assert!("star".parse::<Template>().is_err());
        assert_eq!("ring-hub".parse::<Template>().unwrap(), Template::RingHub);
    }
}
