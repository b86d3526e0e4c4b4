//! Random instances for the closed forms, each paired with the Monte Carlo
//! event that the closed form claims to compute. Networks hold only the
//! configured geometry, so physical connectivity is exactly the event.
#![allow(dead_code)]

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use survnet::geometry::{convex_hull, diameter, ConvexRegion, Point};
use survnet::montecarlo::{estimate_event, estimate_miss, Estimate, EventSpec, SimConfig};
use survnet::network::{
    AreaDoc, ConfigDoc, ConfigKind, LinkDoc, Network, NetworkDocument, NodeDoc, RouteDoc,
};
use survnet::survivability::{ClosedForm, DisasterParams, Stub};

pub type Rng64 = Xoshiro256PlusPlus;

pub fn rng(seed: u64) -> Rng64 {
    Rng64::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    Miss,
    SingleRoute,
    AllDestinations,
    Ring,
    StubThenRing,
    RouteRingRoute,
    RingHubStars,
    BackupDestinations,
    BackupCenters,
    ExpectedDisconnected,
}

impl Formula {
    pub const ALL: [Formula; 10] = [
        Formula::Miss,
        Formula::SingleRoute,
        Formula::AllDestinations,
        Formula::Ring,
        Formula::StubThenRing,
        Formula::RouteRingRoute,
        Formula::RingHubStars,
        Formula::BackupDestinations,
        Formula::BackupCenters,
        Formula::ExpectedDisconnected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Miss => "pr_miss",
            Formula::SingleRoute => "pr_single_route",
            Formula::AllDestinations => "pr_all_destinations",
            Formula::Ring => "pr_ring",
            Formula::StubThenRing => "pr_stub_then_ring",
            Formula::RouteRingRoute => "pr_route_ring_route",
            Formula::RingHubStars => "pr_ring_hub_stars",
            Formula::BackupDestinations => "pr_backup_destinations",
            Formula::BackupCenters => "pr_backup_centers",
            Formula::ExpectedDisconnected => "expected_disconnected",
        }
    }
}

#[allow(clippy::large_enum_variant)]
pub enum Oracle {
    Miss(ConvexRegion, Vec<Point>),
    Event(Network, EventSpec),
}

type Evaluator = Box<dyn Fn(&ClosedForm) -> f64>;

pub struct Instance {
    pub closed: f64,
    pub params: DisasterParams,
    pub oracle: Oracle,
}

impl Instance {
    pub fn simulate(&self, cfg: &SimConfig) -> Estimate {
        match &self.oracle {
            Oracle::Miss(region, pts) => estimate_miss(region, pts, self.params, cfg).unwrap(),
            Oracle::Event(net, event) => estimate_event(net, event, self.params, cfg).unwrap(),
        }
    }
}

fn uniform(rng: &mut Rng64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.random::<f64>()
}

fn in_disk(rng: &mut Rng64, r: f64) -> Point {
    let t = uniform(rng, 0.0, 2.0 * PI);
    let s = r * rng.random::<f64>().sqrt();
    Point::new(s * t.cos(), s * t.sin())
}

/// Convex area containing the disk of radius 7 about the origin.
pub fn random_area(rng: &mut Rng64) -> AreaDoc {
    if rng.random_bool(0.5) {
        let c = in_disk(rng, 0.5);
        AreaDoc::Disk {
            center: [c.x, c.y],
            radius: uniform(rng, 8.0, 12.0),
        }
    } else {
        let n = rng.random_range(7..13);
        let pts: Vec<Point> = (0..n)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / n as f64 + uniform(rng, -0.15, 0.15);
                let r = uniform(rng, 9.0, 12.0);
                Point::new(r * t.cos(), r * t.sin())
            })
            .collect();
        let hull = convex_hull(&pts).unwrap();
        AreaDoc::Polygon(hull.vertices().iter().map(|&p| p.into()).collect())
    }
}

/// Counterclockwise convex polygon with `min..=max` vertices, within radius 3.5
/// of the origin.
pub fn random_convex(rng: &mut Rng64, min: usize, max: usize) -> Vec<Point> {
    loop {
        let c = in_disk(rng, 0.5);
        let pts: Vec<Point> = (0..max + 3)
            .map(|_| {
                let q = in_disk(rng, 3.0);
                Point::new(c.x + q.x, c.y + q.y)
            })
            .collect();
        let v = convex_hull(&pts).unwrap().vertices().to_vec();
        let short = (0..v.len()).any(|i| v[i].dist(v[(i + 1) % v.len()]) < 0.3);
        if v.len() >= min && v.len() <= max && !short {
            return v;
        }
    }
}

/// Builds a network document one piece at a time.
pub struct Builder {
    doc: NetworkDocument,
    links: usize,
    routes: usize,
}

impl Builder {
    pub fn new(area: AreaDoc) -> Self {
        Builder {
            doc: NetworkDocument {
                area,
                center: None,
                nodes: Vec::new(),
                links: Vec::new(),
                routes: Some(Vec::new()),
                configs: Some(Vec::new()),
            },
            links: 0,
            routes: 0,
        }
    }

    pub fn node(&mut self, id: &str, p: Point) -> &mut Self {
        self.doc.nodes.push(NodeDoc {
            id: id.into(),
            x: p.x,
            y: p.y,
        });
        self
    }

    fn position(&self, id: &str) -> Point {
        let n = self.doc.nodes.iter().find(|n| n.id == id).unwrap();
        Point::new(n.x, n.y)
    }

    fn link(&mut self, from: &str, to: &str, bends: &[Point]) -> String {
        self.links += 1;
        let id = format!("l{}", self.links);
        let polyline = (!bends.is_empty()).then(|| {
            let mut v = vec![self.position(from).into()];
            v.extend(bends.iter().map(|&p| <[f64; 2]>::from(p)));
            v.push(self.position(to).into());
            v
        });
        self.doc.links.push(LinkDoc {
            id: id.clone(),
            from: from.into(),
            to: to.into(),
            polyline,
        });
        id
    }

    fn route(&mut self, links: Vec<String>) -> String {
        self.routes += 1;
        let id = format!("r{}", self.routes);
        self.doc.routes.as_mut().unwrap().push(RouteDoc {
            id: id.clone(),
            links,
        });
        id
    }

    fn config(&mut self, source: &str, dest: &str, kind: ConfigKind, routes: Vec<String>) {
        self.doc.configs.as_mut().unwrap().push(ConfigDoc {
            source: source.into(),
            dest: dest.into(),
            kind,
            routes,
        });
    }

    /// One link `a → b` bent through `bends`, configured as a single route.
    pub fn single(&mut self, a: &str, b: &str, bends: &[Point]) -> &mut Self {
        let l = self.link(a, b, bends);
        let r = self.route(vec![l]);
        self.config(a, b, ConfigKind::Single, vec![r]);
        self
    }

    /// Links around the cycle `ids` (already declared as nodes).
    pub fn cycle(&mut self, ids: &[String]) -> Vec<String> {
        let n = ids.len();
        (0..n)
            .map(|i| self.link(&ids[i], &ids[(i + 1) % n], &[]))
            .collect()
    }

    /// Ring configuration between cycle positions `s` and `d`, using the
    /// links returned by [`Builder::cycle`].
    pub fn ring(&mut self, ids: &[String], links: &[String], s: usize, d: usize) -> &mut Self {
        let n = ids.len();
        let forward: Vec<String> = (0..(d + n - s) % n).map(|k| links[(s + k) % n].clone()).collect();
        let backward: Vec<String> = (0..(s + n - d) % n)
            .map(|k| links[(s + n - 1 - k) % n].clone())
            .collect();
        let r1 = self.route(forward);
        let r2 = self.route(backward);
        self.config(&ids[s], &ids[d], ConfigKind::Ring, vec![r1, r2]);
        self
    }

    pub fn center(&mut self, id: &str) -> &mut Self {
        self.doc.center = Some(id.into());
        self
    }

    pub fn build(&self) -> Network {
        Network::from_document(self.doc.clone()).unwrap()
    }
}

/// Random polyline interior vertices between `a` and `b`.
fn bends(rng: &mut Rng64, a: Point, b: Point, max: usize) -> Vec<Point> {
    let k = rng.random_range(0..=max);
    (1..=k)
        .map(|i| {
            let t = i as f64 / (k + 1) as f64;
            let j = in_disk(rng, 0.8);
            Point::new(a.x + t * (b.x - a.x) + j.x, a.y + t * (b.y - a.y) + j.y)
        })
        .collect()
}

/// Far end and bends of a feeder leaving the ring vertex `at` outward.
fn feeder(rng: &mut Rng64, ring: &[Point], at: Point) -> (Point, Vec<Point>) {
    let c = Point::new(
        ring.iter().map(|p| p.x).sum::<f64>() / ring.len() as f64,
        ring.iter().map(|p| p.y).sum::<f64>() / ring.len() as f64,
    );
    let t = (at.y - c.y).atan2(at.x - c.x) + uniform(rng, -0.6, 0.6);
    let len = uniform(rng, 0.8, 2.5);
    let end = Point::new(at.x + len * t.cos(), at.y + len * t.sin());
    (end, bends(rng, at, end, 1))
}

/// Ring of `min..=max` nodes named `k0, k1, …`, its positions and links.
fn ring_nodes(
    b: &mut Builder,
    rng: &mut Rng64,
    min: usize,
    max: usize,
) -> (Vec<String>, Vec<Point>, Vec<String>) {
    let pts = random_convex(rng, min, max);
    let ids: Vec<String> = (0..pts.len()).map(|i| format!("k{i}")).collect();
    for (id, &p) in ids.iter().zip(&pts) {
        b.node(id, p);
    }
    let links = b.cycle(&ids);
    (ids, pts, links)
}

/// `count` distinct indices below `n`.
fn distinct(rng: &mut Rng64, n: usize, count: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    for i in 0..count {
        let j = rng.random_range(i..n);
        all.swap(i, j);
    }
    all.truncate(count);
    all
}

/// Half-plane with a random boundary breadth, or on every fourth seed a
/// wide strip just broader than the network.
fn random_params(rng: &mut Rng64, seed: u64, extent: &[Point]) -> DisasterParams {
    if seed % 4 == 3 {
        DisasterParams::wide_strip(0.0, diameter(extent) + uniform(rng, 0.5, 3.0))
    } else if rng.random_bool(0.3) {
        DisasterParams::half_plane(0.0)
    } else {
        DisasterParams::half_plane(uniform(rng, 0.0, 2.0))
    }
}

pub fn instance(f: Formula, seed: u64) -> Instance {
    let mut rng = rng(seed.wrapping_mul(0x9E37_79B9).wrapping_add(f as u64));
    let area = random_area(&mut rng);
    let mut b = Builder::new(area.clone());
    let node = |n: &Network, id: &str| n.node_idx(id).unwrap();

    if f == Formula::Miss {
        let k = rng.random_range(1..7);
        let pts: Vec<Point> = (0..k).map(|_| in_disk(&mut rng, 4.0)).collect();
        b.node("x", pts[0]);
        let net = b.build();
        let params = random_params(&mut rng, seed, &pts);
        let closed = ClosedForm::new(&net, params)
            .unwrap()
            .pr_miss(&pts)
            .unwrap()
            .value();
        return Instance {
            closed,
            params,
            oracle: Oracle::Miss(net.area().region.clone(), pts),
        };
    }

    let (net, event, eval): (Network, EventSpec, Evaluator) = match f {
        Formula::Miss => unreachable!(),
        Formula::SingleRoute => {
            let (p, q) = (in_disk(&mut rng, 4.0), in_disk(&mut rng, 4.0));
            let bend = bends(&mut rng, p, q, 3);
            b.node("a", p).node("b", q).single("a", "b", &bend);
            let net = b.build();
            let ev = EventSpec::Pair(node(&net, "a"), node(&net, "b"));
            (
                net,
                ev,
                Box::new(|cf: &ClosedForm| cf.pr_single_route(&cf.network().configs()[0]).unwrap().value()),
            )
        }
        Formula::AllDestinations => {
            let s = in_disk(&mut rng, 1.5);
            b.node("s", s);
            let k = rng.random_range(2..6);
            for i in 0..k {
                let q = in_disk(&mut rng, 4.0);
                let id = format!("d{i}");
                let bend = bends(&mut rng, s, q, 2);
                b.node(&id, q).single("s", &id, &bend);
            }
            let net = b.build();
            let src = node(&net, "s");
            let ev = EventSpec::AllOf(net.configs().iter().map(|c| (src, c.dest)).collect());
            (
                net,
                ev,
                Box::new(move |cf: &ClosedForm| {
                    let cfgs: Vec<_> = cf.network().configs().iter().collect();
                    cf.pr_all_destinations(src, &cfgs).unwrap().value()
                }),
            )
        }
        Formula::Ring => {
            let (ids, _, links) = ring_nodes(&mut b, &mut rng, 4, 7);
            let p = distinct(&mut rng, ids.len(), 2);
            b.ring(&ids, &links, p[0], p[1]);
            let net = b.build();
            let ev = EventSpec::Pair(node(&net, &ids[p[0]]), node(&net, &ids[p[1]]));
            (
                net,
                ev,
                Box::new(|cf: &ClosedForm| cf.pr_ring(&cf.network().configs()[0]).unwrap().value()),
            )
        }
        Formula::StubThenRing => {
            let (ids, pts, links) = ring_nodes(&mut b, &mut rng, 4, 7);
            let p = distinct(&mut rng, ids.len(), 2);
            let (end, bend) = feeder(&mut rng, &pts, pts[p[0]]);
            b.ring(&ids, &links, p[0], p[1])
                .node("i", end)
                .single("i", &ids[p[0]], &bend);
            let net = b.build();
            let k = node(&net, &ids[p[0]]);
            let ev = EventSpec::Pair(node(&net, "i"), node(&net, &ids[p[1]]));
            (
                net,
                ev,
                Box::new(move |cf: &ClosedForm| {
                    let c = cf.network().configs();
                    cf.pr_stub_then_ring(Stub::route(cf.network(), &c[1], k).unwrap(), &c[0])
                        .unwrap()
                        .value()
                }),
            )
        }
        Formula::RouteRingRoute => {
            let (ids, pts, links) = ring_nodes(&mut b, &mut rng, 5, 8);
            let p = distinct(&mut rng, ids.len(), 3);
            let (e1, b1) = feeder(&mut rng, &pts, pts[p[0]]);
            let (e2, b2) = feeder(&mut rng, &pts, pts[p[2]]);
            b.ring(&ids, &links, p[0], p[2]);
            b.node("i", e1).single("i", &ids[p[0]], &b1);
            b.node("j", e2).single(&ids[p[2]], "j", &b2);
            let net = b.build();
            let (k1, k, k2) = (
                node(&net, &ids[p[0]]),
                node(&net, &ids[p[1]]),
                node(&net, &ids[p[2]]),
            );
            let ev = EventSpec::ThroughAny(node(&net, "i"), node(&net, "j"), vec![k]);
            (
                net,
                ev,
                Box::new(move |cf: &ClosedForm| {
                    let (n, c) = (cf.network(), cf.network().configs());
                    let s1 = Stub::route(n, &c[1], k1).unwrap();
                    let s2 = Stub::route(n, &c[2], k2).unwrap();
                    cf.pr_route_ring_route(s1, &c[0], k, s2).unwrap().value()
                }),
            )
        }
        Formula::RingHubStars => {
            let (ids, pts, links) = ring_nodes(&mut b, &mut rng, 5, 8);
            let count = rng.random_range(2..5);
            let p = distinct(&mut rng, ids.len(), count + 1);
            b.ring(&ids, &links, p[0], p[1]);
            let mut leaves = Vec::new();
            for (x, &at) in p[1..].iter().enumerate() {
                if rng.random_bool(0.25) {
                    leaves.push((ids[at].clone(), None));
                } else {
                    let (end, bend) = feeder(&mut rng, &pts, pts[at]);
                    let id = format!("j{x}");
                    b.node(&id, end).single(&ids[at], &id, &bend);
                    leaves.push((id, Some(ids[at].clone())));
                }
            }
            let net = b.build();
            let hub = node(&net, &ids[p[0]]);
            let ev = EventSpec::AllOf(leaves.iter().map(|(j, _)| (hub, node(&net, j))).collect());
            let stubs: Vec<(usize, Option<usize>)> = leaves
                .iter()
                .map(|(j, at)| match at {
                    None => (node(&net, j), None),
                    Some(at) => {
                        let at = node(&net, at);
                        let ci = net
                            .configs()
                            .iter()
                            .position(|c| c.source == at && c.kind == ConfigKind::Single);
                        (at, ci)
                    }
                })
                .collect();
            (
                net,
                ev,
                Box::new(move |cf: &ClosedForm| {
                    let (n, c) = (cf.network(), cf.network().configs());
                    let s: Vec<Stub> = stubs
                        .iter()
                        .map(|&(at, ci)| match ci {
                            None => Stub::at(at),
                            Some(ci) => Stub::route(n, &c[ci], at).unwrap(),
                        })
                        .collect();
                    cf.pr_ring_hub_stars(&c[0], hub, &s).unwrap().value()
                }),
            )
        }
        Formula::BackupDestinations => {
            let (ids, pts, links) = ring_nodes(&mut b, &mut rng, 5, 8);
            let p = distinct(&mut rng, ids.len(), 3);
            let (end, bend) = feeder(&mut rng, &pts, pts[p[0]]);
            b.ring(&ids, &links, p[0], p[1])
                .node("i", end)
                .single("i", &ids[p[0]], &bend);
            let net = b.build();
            let k = node(&net, &ids[p[0]]);
            let dests = vec![node(&net, &ids[p[1]]), node(&net, &ids[p[2]])];
            let ev = EventSpec::AnyDest(node(&net, "i"), dests.clone());
            (
                net,
                ev,
                Box::new(move |cf: &ClosedForm| {
                    let (n, c) = (cf.network(), cf.network().configs());
                    cf.pr_backup_destinations(Stub::route(n, &c[1], k).unwrap(), &c[0], &dests)
                        .unwrap()
                        .value()
                }),
            )
        }
        Formula::BackupCenters => {
            let (ids, pts, links) = ring_nodes(&mut b, &mut rng, 6, 8);
            let p = distinct(&mut rng, ids.len(), 4);
            let (e1, b1) = feeder(&mut rng, &pts, pts[p[0]]);
            let (e2, b2) = feeder(&mut rng, &pts, pts[p[1]]);
            b.ring(&ids, &links, p[0], p[1]);
            b.node("i", e1).single("i", &ids[p[0]], &b1);
            b.node("j", e2).single("j", &ids[p[1]], &b2);
            let net = b.build();
            let (i0, j0) = (node(&net, &ids[p[0]]), node(&net, &ids[p[1]]));
            let (k1, k2) = (node(&net, &ids[p[2]]), node(&net, &ids[p[3]]));
            let ev = EventSpec::ThroughAny(node(&net, "i"), node(&net, "j"), vec![k1, k2]);
            (
                net,
                ev,
                Box::new(move |cf: &ClosedForm| {
                    let (n, c) = (cf.network(), cf.network().configs());
                    let s1 = Stub::route(n, &c[1], i0).unwrap();
                    let s2 = Stub::route(n, &c[2], j0).unwrap();
                    cf.pr_backup_centers(s1, s2, &c[0], (k1, k2)).unwrap().value()
                }),
            )
        }
        Formula::ExpectedDisconnected => {
            let (ids, pts, links) = ring_nodes(&mut b, &mut rng, 4, 7);
            let rings = rng.random_range(1..3);
            let p = distinct(&mut rng, ids.len(), rings + 1);
            for &d in &p[1..] {
                b.ring(&ids, &links, p[0], d);
            }
            for x in 0..rng.random_range(1..4) {
                let (end, bend) = feeder(&mut rng, &pts, pts[p[0]]);
                let id = format!("j{x}");
                b.node(&id, end).single(&ids[p[0]], &id, &bend);
            }
            let net = b.build();
            let s = node(&net, &ids[p[0]]);
            let dests: Vec<usize> = net.configs().iter().map(|c| c.dest).collect();
            let ev = EventSpec::DisconnectedCount(s, dests);
            (
                net,
                ev,
                Box::new(move |cf: &ClosedForm| {
                    let cfgs: Vec<_> = cf.network().configs().iter().collect();
                    cf.expected_disconnected(s, &cfgs).unwrap()
                }),
            )
        }
    };
    let params = random_params(&mut rng, seed, net.extent());
    let closed = eval(&ClosedForm::new(&net, params).unwrap());
    Instance {
        closed,
        params,
        oracle: Oracle::Event(net, event),
    }
}
