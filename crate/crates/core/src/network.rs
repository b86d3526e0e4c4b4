//! Network data model, document parsing/validation, and reachability under an
//! arbitrary disaster predicate.
//!
//! Every node whose position lies in the disaster area fails, and every link
//! with any point in the area fails as a whole. Surviving links only carry
//! traffic when both endpoint nodes survive.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull, diameter, geometric_tolerance, is_convex_cycle, signed_area2, ConvexRegion, Point, Polyline,
    RELATIVE_EPS,
};

/// Turn-sine tolerance for ring convexity.
pub const RING_CONVEXITY_EPS: f64 = 1e-9;

// ---------------------------------------------------------------------------
// Document schema
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkDocument {
    pub area: AreaDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<String>,
    pub nodes: Vec<NodeDoc>,
    pub links: Vec<LinkDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub routes: Option<Vec<RouteDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub configs: Option<Vec<ConfigDoc>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum AreaDoc {
    Polygon(Vec<[f64; 2]>),
    Disk { center: [f64; 2], radius: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeDoc {
    pub id: String,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkDoc {
    pub id: String,
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polyline: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RouteDoc {
    pub id: String,
    pub links: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigKind {
    Single,
    Ring,
}

impl ConfigKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConfigKind::Single => "single",
            ConfigKind::Ring => "ring",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDoc {
    pub source: String,
    pub dest: String,
    pub kind: ConfigKind,
    pub routes: Vec<String>,
}

// ---------------------------------------------------------------------------
// Validated model
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct AreaOfInterest {
    pub region: ConvexRegion,
}

impl AreaOfInterest {
    pub fn new(region: ConvexRegion) -> Self {
        AreaOfInterest { region }
    }

    pub fn perimeter(&self) -> f64 {
        self.region.perimeter()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: String,
    pub position: Point,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Link {
    pub id: String,
    pub from: usize,
    pub to: usize,
    pub geometry: Polyline,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Route {
    pub id: String,
    pub links: Vec<usize>,
    /// Node sequence visited from one end of the route to the other.
    pub nodes: Vec<usize>,
}

impl Route {
    pub fn start(&self) -> usize {
        self.nodes[0]
    }

    pub fn end(&self) -> usize {
        self.nodes[self.nodes.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathConfiguration {
    pub source: usize,
    pub dest: usize,
    pub kind: ConfigKind,
    pub routes: Vec<usize>,
    /// Position of this configuration in the network's list.
    pub index: usize,
}

impl PathConfiguration {
    pub fn other_end(&self, node: usize) -> Option<usize> {
        if node == self.source {
            Some(self.dest)
        } else if node == self.dest {
            Some(self.source)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    area: AreaOfInterest,
    center: Option<usize>,
    nodes: Vec<Node>,
    links: Vec<Link>,
    routes: Vec<Route>,
    configs: Vec<PathConfiguration>,
    node_index: HashMap<String, usize>,
    /// Cyclic node order of each ring configuration, keyed by config index.
    ring_orders: HashMap<usize, Vec<usize>>,
    /// Neighbour and link index for each node.
    adjacency: Vec<Vec<(usize, usize)>>,
    /// Convex hull vertices of all nodes and link geometry.
    extent: Vec<Point>,
    /// Component representative of each node with nothing destroyed.
    base_roots: Vec<usize>,
}

pub fn parse_network(text: &str) -> Result<Network> {
    let doc: NetworkDocument = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    Network::from_document(doc)
}

fn point_of(xy: [f64; 2], what: &str) -> Result<Point> {
    let p = Point::from(xy);
    if !p.is_finite() {
        return Err(Error::NonFinite(what.to_string()));
    }
    Ok(p)
}

impl Network {
    pub fn from_document(doc: NetworkDocument) -> Result<Network> {
        let region = match &doc.area {
            AreaDoc::Polygon(v) => {
                let pts = v
                    .iter()
                    .map(|&xy| point_of(xy, "area"))
                    .collect::<Result<Vec<_>>>()?;
                ConvexRegion::polygon(pts)?
            }
            AreaDoc::Disk { center, radius } => ConvexRegion::disk(point_of(*center, "area")?, *radius)?,
        };
        let area = AreaOfInterest::new(region);

        let mut node_index = HashMap::new();
        let mut nodes = Vec::with_capacity(doc.nodes.len());
        for nd in &doc.nodes {
            if node_index.insert(nd.id.clone(), nodes.len()).is_some() {
                return Err(Error::DuplicateId(nd.id.clone()));
            }
            let position = point_of([nd.x, nd.y], &nd.id)?;
            if !area.region.contains(position) {
                return Err(Error::OutsideArea(nd.id.clone()));
            }
            nodes.push(Node {
                id: nd.id.clone(),
                position,
            });
        }
        let lookup_node = |id: &str| {
            node_index
                .get(id)
                .copied()
                .ok_or_else(|| Error::DanglingId(id.to_string()))
        };

        let mut all_points: Vec<Point> = nodes.iter().map(|n| n.position).collect();
        for ld in &doc.links {
            if let Some(v) = &ld.polyline {
                all_points.extend(v.iter().map(|&xy| Point::from(xy)));
            }
        }
        let tol = geometric_tolerance(&all_points).max(RELATIVE_EPS);

        let mut link_index = HashMap::new();
        let mut links = Vec::with_capacity(doc.links.len());
        for ld in &doc.links {
            if link_index.insert(ld.id.clone(), links.len()).is_some() {
                return Err(Error::DuplicateId(ld.id.clone()));
            }
            let from = lookup_node(&ld.from)?;
            let to = lookup_node(&ld.to)?;
            if from == to {
                return Err(Error::LinkEndpoints(ld.id.clone()));
            }
            let verts = match &ld.polyline {
                Some(v) => v
                    .iter()
                    .map(|&xy| point_of(xy, &ld.id))
                    .collect::<Result<Vec<_>>>()?,
                None => vec![nodes[from].position, nodes[to].position],
            };
            let geometry = Polyline::new(verts).map_err(|e| match e {
                Error::DegeneratePolyline(m) => Error::DegeneratePolyline(format!("{}: {m}", ld.id)),
                other => other,
            })?;
            if geometry.first().dist(nodes[from].position) > tol
                || geometry.last().dist(nodes[to].position) > tol
            {
                return Err(Error::LinkEndpoints(ld.id.clone()));
            }
            if !geometry.vertices().iter().all(|p| area.region.contains(*p)) {
                return Err(Error::OutsideArea(ld.id.clone()));
            }
            links.push(Link {
                id: ld.id.clone(),
                from,
                to,
                geometry,
            });
        }

        // A bare link list gets one single-link route and configuration per link.
        let (route_docs, config_docs) = match (&doc.routes, &doc.configs) {
            (None, None) => (
                doc.links
                    .iter()
                    .map(|l| RouteDoc {
                        id: l.id.clone(),
                        links: vec![l.id.clone()],
                    })
                    .collect(),
                doc.links
                    .iter()
                    .map(|l| ConfigDoc {
                        source: l.from.clone(),
                        dest: l.to.clone(),
                        kind: ConfigKind::Single,
                        routes: vec![l.id.clone()],
                    })
                    .collect(),
            ),
            (r, c) => (r.clone().unwrap_or_default(), c.clone().unwrap_or_default()),
        };

        let mut route_index = HashMap::new();
        let mut routes = Vec::with_capacity(route_docs.len());
        for rd in &route_docs {
            if route_index.insert(rd.id.clone(), routes.len()).is_some() {
                return Err(Error::DuplicateId(rd.id.clone()));
            }
            let link_ids = rd
                .links
                .iter()
                .map(|l| {
                    link_index
                        .get(l)
                        .copied()
                        .ok_or_else(|| Error::DanglingId(l.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            let node_seq =
                chain_route(&links, &link_ids).ok_or_else(|| Error::RouteNotConnected(rd.id.clone()))?;
            routes.push(Route {
                id: rd.id.clone(),
                links: link_ids,
                nodes: node_seq,
            });
        }

        let center = doc.center.as_deref().map(lookup_node).transpose()?;

        let mut net = Network {
            area,
            center,
            nodes,
            links,
            routes,
            configs: Vec::new(),
            node_index: node_index.clone(),
            ring_orders: HashMap::new(),
            adjacency: Vec::new(),
            extent: Vec::new(),
            base_roots: Vec::new(),
        };
        net.adjacency = vec![Vec::new(); net.nodes.len()];
        for (li, l) in net.links.iter().enumerate() {
            net.adjacency[l.from].push((l.to, li));
            net.adjacency[l.to].push((l.from, li));
        }
        if !all_points.is_empty() {
            net.extent = convex_hull(&all_points)?.vertices().to_vec();
        }
        let mut intact = SurvivalState::new();
        intact.update_elements(&net, &|_: Element<'_>| false);
        net.base_roots = (0..net.nodes.len()).map(|n| intact.root(n)).collect();

        for cd in &config_docs {
            let source = lookup_node(&cd.source)?;
            let dest = lookup_node(&cd.dest)?;
            let id = format!("{}->{}", cd.source, cd.dest);
            let bad = |reason: &str| Error::InvalidConfig {
                id: id.clone(),
                reason: reason.to_string(),
            };
            if source == dest {
                return Err(bad("source and dest coincide"));
            }
            let route_ids = cd
                .routes
                .iter()
                .map(|r| {
                    route_index
                        .get(r)
                        .copied()
                        .ok_or_else(|| Error::DanglingId(r.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            for &r in &route_ids {
                let route = &net.routes[r];
                let ends = (route.start(), route.end());
                if ends != (source, dest) && ends != (dest, source) {
                    return Err(bad(&format!(
                        "route {} does not join {} and {}",
                        route.id, cd.source, cd.dest
                    )));
                }
            }
            let index = net.configs.len();
            match cd.kind {
                ConfigKind::Single => {
                    if route_ids.len() != 1 {
                        return Err(bad("single configuration needs exactly one route"));
                    }
                }
                ConfigKind::Ring => {
                    if route_ids.len() != 2 {
                        return Err(bad("ring configuration needs exactly two routes"));
                    }
                    let (a, b) = (&net.routes[route_ids[0]], &net.routes[route_ids[1]]);
                    let links_a: HashSet<usize> = a.links.iter().copied().collect();
                    if b.links.iter().any(|l| links_a.contains(l)) {
                        return Err(bad("ring routes share a link"));
                    }
                    let inner = |r: &Route| -> HashSet<usize> {
                        r.nodes[1..r.nodes.len() - 1].iter().copied().collect()
                    };
                    let inner_a = inner(a);
                    if inner(b).iter().any(|n| inner_a.contains(n))
                        || inner_a.contains(&source)
                        || inner_a.contains(&dest)
                    {
                        return Err(bad("ring routes overlap"));
                    }
                    let fwd = net.route_polyline(route_ids[0], source)?;
                    let back = net.route_polyline(route_ids[1], dest)?;
                    let cycle = Polyline::concat([&fwd, &back])?;
                    if !is_convex_cycle(&cycle, RING_CONVEXITY_EPS)? {
                        return Err(Error::RingNotConvex(id.clone()));
                    }
                    let mut order = net.route_nodes_from(route_ids[0], source);
                    order.pop();
                    let mut back_nodes = net.route_nodes_from(route_ids[1], dest);
                    back_nodes.pop();
                    order.extend(back_nodes);
                    let ring_pts: Vec<Point> = order.iter().map(|&n| net.nodes[n].position).collect();
                    // store in counterclockwise order
                    if signed_area2(&ring_pts) < 0.0 {
                        order[1..].reverse();
                    }
                    net.ring_orders.insert(index, order);
                }
            }
            net.configs.push(PathConfiguration {
                source,
                dest,
                kind: cd.kind,
                routes: route_ids,
                index,
            });
        }
        Ok(net)
    }

    pub fn to_document(&self) -> NetworkDocument {
        let area = match &self.area.region {
            ConvexRegion::Polygon(v) => AreaDoc::Polygon(v.iter().map(|&p| p.into()).collect()),
            ConvexRegion::Disk { center, radius } => AreaDoc::Disk {
                center: (*center).into(),
                radius: *radius,
            },
        };
        NetworkDocument {
            area,
            center: self.center.map(|c| self.nodes[c].id.clone()),
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeDoc {
                    id: n.id.clone(),
                    x: n.position.x,
                    y: n.position.y,
                })
                .collect(),
            links: self
                .links
                .iter()
                .map(|l| LinkDoc {
                    id: l.id.clone(),
                    from: self.nodes[l.from].id.clone(),
                    to: self.nodes[l.to].id.clone(),
                    polyline: Some(l.geometry.vertices().iter().map(|&p| p.into()).collect()),
                })
                .collect(),
            routes: Some(
                self.routes
                    .iter()
                    .map(|r| RouteDoc {
                        id: r.id.clone(),
                        links: r.links.iter().map(|&l| self.links[l].id.clone()).collect(),
                    })
                    .collect(),
            ),
            configs: Some(
                self.configs
                    .iter()
                    .map(|c| ConfigDoc {
                        source: self.nodes[c.source].id.clone(),
                        dest: self.nodes[c.dest].id.clone(),
                        kind: c.kind,
                        routes: c.routes.iter().map(|&r| self.routes[r].id.clone()).collect(),
                    })
                    .collect(),
            ),
        }
    }

    /// Canonical JSON encoding of the network.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes")
    }

    pub fn area(&self) -> &AreaOfInterest {
        &self.area
    }

    pub fn center(&self) -> Option<usize> {
        self.center
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn routes(&self) -> &[Route] {
        &self.routes
    }

    pub fn configs(&self) -> &[PathConfiguration] {
        &self.configs
    }

    pub fn node(&self, idx: usize) -> &Node {
        &self.nodes[idx]
    }

    pub fn position(&self, idx: usize) -> Point {
        self.nodes[idx].position
    }

    pub fn node_id(&self, idx: usize) -> &str {
        &self.nodes[idx].id
    }

    pub fn node_idx(&self, id: &str) -> Result<usize> {
        self.node_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownNode(id.to_string()))
    }

    pub fn incident_links(&self, node: usize) -> &[(usize, usize)] {
        &self.adjacency[node]
    }

    /// Hull vertices of everything in the network.
    pub fn extent(&self) -> &[Point] {
        &self.extent
    }

    pub fn config_label(&self, cfg: &PathConfiguration) -> String {
        format!("{}->{}", self.node_id(cfg.source), self.node_id(cfg.dest))
    }

    /// First configuration joining the two nodes, in either orientation.
    pub fn find_config(&self, a: &str, b: &str) -> Result<&PathConfiguration> {
        let (a, b) = (self.node_idx(a)?, self.node_idx(b)?);
        self.configs
            .iter()
            .find(|c| (c.source, c.dest) == (a, b) || (c.source, c.dest) == (b, a))
            .ok_or_else(|| {
                Error::Unsupported(format!(
                    "no configuration between {} and {}",
                    self.node_id(a),
                    self.node_id(b)
                ))
            })
    }

    fn route_nodes_from(&self, route: usize, start: usize) -> Vec<usize> {
        let r = &self.routes[route];
        let mut v = r.nodes.clone();
        if r.start() != start {
            v.reverse();
        }
        v
    }

    /// Geometry of a route oriented to begin at node `start`.
    pub fn route_polyline(&self, route: usize, start: usize) -> Result<Polyline> {
        let r = &self.routes[route];
        let nodes = self.route_nodes_from(route, start);
        let parts: Vec<Polyline> = {
            let mut links = r.links.clone();
            if r.start() != start {
                links.reverse();
            }
            links
                .iter()
                .zip(nodes.windows(2))
                .map(|(&li, w)| {
                    let l = &self.links[li];
                    if l.from == w[0] {
                        l.geometry.clone()
                    } else {
                        l.geometry.reversed()
                    }
                })
                .collect()
        };
        Polyline::concat(parts.iter())
    }

    /// Polylines of a configuration: one per route for a single route, the
    /// closed cycle for a ring.
    pub fn config_geometry(&self, cfg: &PathConfiguration) -> Result<Vec<Polyline>> {
        match cfg.kind {
            ConfigKind::Single => Ok(vec![self.route_polyline(cfg.routes[0], cfg.source)?]),
            ConfigKind::Ring => {
                let fwd = self.route_polyline(cfg.routes[0], cfg.source)?;
                let back = self.route_polyline(cfg.routes[1], cfg.dest)?;
                Ok(vec![Polyline::concat([&fwd, &back])?])
            }
        }
    }

    /// All vertices of a configuration's geometry.
    pub fn config_points(&self, cfg: &PathConfiguration) -> Result<Vec<Point>> {
        Ok(self
            .config_geometry(cfg)?
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .collect())
    }

    /// Maximum pairwise distance within a configuration's geometry.
    pub fn d_max(&self, cfg: &PathConfiguration) -> Result<f64> {
        Ok(diameter(&self.config_points(cfg)?))
    }

    /// Counterclockwise cyclic node order of a ring configuration, starting at
    /// its source.
    pub fn ring_order(&self, cfg: &PathConfiguration) -> Result<&[usize]> {
        self.ring_orders
            .get(&cfg.index)
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::WrongKind {
                id: self.config_label(cfg),
                expected: "ring",
            })
    }
}

/// Walks a link list and returns the visited node sequence, or `None` when
/// consecutive links do not share a node.
fn chain_route(links: &[Link], ids: &[usize]) -> Option<Vec<usize>> {
    let first = &links[*ids.first()?];
    let mut seq = if ids.len() == 1 {
        vec![first.from, first.to]
    } else {
        let next = &links[ids[1]];
        if first.to == next.from || first.to == next.to {
            vec![first.from, first.to]
        } else if first.from == next.from || first.from == next.to {
            vec![first.to, first.from]
        } else {
            return None;
        }
    };
    for &li in &ids[1..] {
        let l = &links[li];
        let cur = *seq.last()?;
        if l.from == cur {
            seq.push(l.to);
        } else if l.to == cur {
            seq.push(l.from);
        } else {
            return None;
        }
    }
    Some(seq)
}

// ---------------------------------------------------------------------------
// Connectivity under a disaster
// ---------------------------------------------------------------------------

/// A network element offered to a disaster predicate.
#[derive(Debug, Clone, Copy)]
pub enum Element<'a> {
    Point(Point),
    Polyline(&'a Polyline),
}

/// How a disaster relates to a convex set as a whole.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    /// Nothing in the set is hit.
    Clear,
    /// Every point of the set is hit.
    Covered,
    Partial,
}

/// Decides which elements a disaster destroys.
pub trait Disaster {
    fn hits(&self, element: Element<'_>) -> bool;

    /// Conservative classification of the convex hull of `extent`; `Partial`
    /// is always a safe answer.
    fn coverage(&self, _extent: &[Point]) -> Coverage {
        Coverage::Partial
    }
}

impl<F> Disaster for F
where
    F: Fn(Element<'_>) -> bool,
{
    fn hits(&self, element: Element<'_>) -> bool {
        self(element)
    }
}

/// Which elements survived one disaster, with connected components of the
/// surviving graph. Buffers are reused across evaluations.
#[derive(Debug, Clone, Default)]
pub struct SurvivalState {
    alive: Vec<bool>,
    parent: Vec<usize>,
    any_failed: bool,
}

impl SurvivalState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn evaluate<D: Disaster + ?Sized>(net: &Network, disaster: &D) -> Self {
        let mut s = Self::new();
        s.update(net, disaster);
        s
    }

    pub fn update<D: Disaster + ?Sized>(&mut self, net: &Network, disaster: &D) {
        let n = net.nodes.len();
        match disaster.coverage(&net.extent) {
            Coverage::Clear => {
                self.alive.clear();
                self.alive.resize(n, true);
                self.parent.clear();
                self.parent.extend_from_slice(&net.base_roots);
                self.any_failed = false;
            }
            Coverage::Covered => {
                self.alive.clear();
                self.alive.resize(n, false);
                self.parent.clear();
                self.parent.extend(0..n);
                self.any_failed = n > 0;
            }
            Coverage::Partial => self.update_elements(net, disaster),
        }
    }

    fn update_elements<D: Disaster + ?Sized>(&mut self, net: &Network, disaster: &D) {
        let n = net.nodes.len();
        self.alive.clear();
        self.parent.clear();
        self.any_failed = false;
        for (i, node) in net.nodes.iter().enumerate() {
            let hit = disaster.hits(Element::Point(node.position));
            self.any_failed |= hit;
            self.alive.push(!hit);
            self.parent.push(i);
        }
        debug_assert_eq!(self.parent.len(), n);
        for link in &net.links {
            if !(self.alive[link.from] && self.alive[link.to]) {
                continue;
            }
            if disaster.hits(Element::Polyline(&link.geometry)) {
                self.any_failed = true;
                continue;
            }
            let (a, b) = (self.find(link.from), self.find(link.to));
            if a != b {
                self.parent[a.max(b)] = a.min(b);
            }
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn root(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Whether every element survived.
    pub fn intact(&self) -> bool {
        !self.any_failed
    }

    pub fn alive(&self, node: usize) -> bool {
        self.alive[node]
    }

    pub fn connected(&self, a: usize, b: usize) -> bool {
        self.alive[a] && self.alive[b] && self.root(a) == self.root(b)
    }

    /// Whether all listed nodes survive in one component.
    pub fn all_connected(&self, nodes: &[usize]) -> bool {
        let Some(&first) = nodes.first() else {
            return true;
        };
        if !self.alive[first] {
            return false;
        }
        let r = self.root(first);
        nodes[1..].iter().all(|&n| self.alive[n] && self.root(n) == r)
    }
}

/// Whether `j` is reachable from `i` after removing everything `disaster` hits.
pub fn surviving_connectivity<D: Disaster + ?Sized>(
    net: &Network,
    disaster: &D,
    i: &str,
    j: &str,
) -> Result<bool> {
    let (i, j) = (net.node_idx(i)?, net.node_idx(j)?);
    Ok(SurvivalState::evaluate(net, disaster).connected(i, j))
}
