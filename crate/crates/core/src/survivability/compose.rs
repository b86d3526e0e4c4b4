//! Resolves a node pair into the chain of configurations that joins it, so
//! pairwise probabilities can be assembled from the per-configuration forms.

use std::collections::VecDeque;

use super::{ClosedForm, Probability};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::network::{ConfigKind, Network};

/// The unique chain of configurations joining two nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct PairComposition {
    pub a: usize,
    pub b: usize,
    /// Nodes along the chain, from `a` to `b`.
    pub nodes: Vec<usize>,
    /// Configuration indices, `configs[i]` joining `nodes[i]` and `nodes[i+1]`.
    pub configs: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairValues {
    pub exact: Probability,
    /// Legs treated as independent, split at the network center.
    pub independent: Probability,
    /// Straight segment between the two ends.
    pub line: Probability,
}

fn overlay(net: &Network) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); net.nodes().len()];
    for (ci, c) in net.configs().iter().enumerate() {
        adj[c.source].push((c.dest, ci));
        adj[c.dest].push((c.source, ci));
    }
    adj
}

/// End points of the configuration overlay: nodes touched by exactly one
/// configuration, other than the center. Falls back to every configured node
/// when the overlay has no leaves.
pub fn terminals(net: &Network) -> Vec<usize> {
    let adj = overlay(net);
    let leaves: Vec<usize> = (0..adj.len())
        .filter(|&n| adj[n].len() == 1 && Some(n) != net.center())
        .collect();
    if leaves.is_empty() {
        (0..adj.len()).filter(|&n| !adj[n].is_empty()).collect()
    } else {
        leaves
    }
}

/// Chain of configurations joining `a` and `b`. When the network declares a
/// center, the chain is forced through it.
pub fn compose_pair(net: &Network, a: usize, b: usize) -> Result<PairComposition> {
    let adj = overlay(net);
    let unsupported =
        |why: &str| Error::Unsupported(format!("{} - {}: {why}", net.node_id(a), net.node_id(b)));
    if a == b {
        return Err(unsupported("identical nodes"));
    }
    let (nodes, configs) = match net.center() {
        Some(c) if c != a && c != b => {
            let (mut n1, mut c1) = chain(&adj, a, c).map_err(&unsupported)?;
            let (n2, c2) = chain(&adj, c, b).map_err(&unsupported)?;
            n1.extend_from_slice(&n2[1..]);
            c1.extend(c2);
            (n1, c1)
        }
        _ => chain(&adj, a, b).map_err(&unsupported)?,
    };
    Ok(PairComposition { a, b, nodes, configs })
}

/// Unique overlay path from `a` to `b`; the component must be a tree.
fn chain(
    adj: &[Vec<(usize, usize)>],
    a: usize,
    b: usize,
) -> std::result::Result<(Vec<usize>, Vec<usize>), &'static str> {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([a]);
    seen[a] = true;
    let (mut comp_nodes, mut comp_degree) = (0usize, 0usize);
    while let Some(n) = queue.pop_front() {
        comp_nodes += 1;
        comp_degree += adj[n].len();
        for &(m, ci) in &adj[n] {
            if !seen[m] {
                seen[m] = true;
                parent[m] = Some((n, ci));
                queue.push_back(m);
            }
        }
    }
    if !seen[b] {
        return Err("no configuration chain");
    }
    if comp_degree / 2 != comp_nodes - 1 {
        return Err("configurations form a cycle");
    }
    let (mut nodes, mut configs) = (vec![b], Vec::new());
    let mut cur = b;
    while let Some((prev, ci)) = parent[cur] {
        nodes.push(prev);
        configs.push(ci);
        cur = prev;
    }
    nodes.reverse();
    configs.reverse();
    Ok((nodes, configs))
}

impl ClosedForm<'_> {
    /// Points whose hull the disaster must miss for every configuration in
    /// `configs` to hold, plus all geometry involved.
    fn chain_points(&self, configs: &[usize]) -> Result<(Vec<Point>, Vec<Point>)> {
        let net = self.network();
        let (mut hull, mut involved) = (Vec::new(), Vec::new());
        for &ci in configs {
            let c = &net.configs()[ci];
            let pts = net.config_points(c)?;
            match c.kind {
                ConfigKind::Single => hull.extend_from_slice(&pts),
                ConfigKind::Ring => {
                    net.ring_order(c)?;
                    hull.push(net.position(c.source));
                    hull.push(net.position(c.dest));
                }
            }
            involved.extend(pts);
        }
        Ok((hull, involved))
    }

    fn chain_probability(&self, configs: &[usize]) -> Result<Probability> {
        let (hull, involved) = self.chain_points(configs)?;
        self.miss(&hull, &involved)
    }

    pub fn pair_values(&self, comp: &PairComposition) -> Result<PairValues> {
        let exact = self.chain_probability(&comp.configs)?;
        let split = self
            .network()
            .center()
            .and_then(|c| comp.nodes[1..comp.nodes.len() - 1].iter().position(|&n| n == c));
        let independent = match split {
            Some(i) => {
                let (left, right) = comp.configs.split_at(i + 1);
                self.chain_probability(left)?.value() * self.chain_probability(right)?.value()
            }
            None => {
                let mut prod = 1.0;
                for &ci in &comp.configs {
                    prod *= self.chain_probability(&[ci])?.value();
                }
                prod
            }
        };
        Ok(PairValues {
            exact,
            independent: Probability::from_ratio(independent),
            line: self.pr_straight(comp.a, comp.b)?,
        })
    }
}
