//! Monte Carlo estimation of connectivity events under random disasters.
//!
//! Strips are drawn uniformly (in the kinematic measure `dp dθ`) among all
//! strips that meet the area of interest, by rejection from a bounding
//! rectangle in `(p, θ)`. Each trial owns a random stream derived from the
//! seed and the trial index, and results are reduced as integer sums, so an
//! estimate does not depend on how trials are spread over threads.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::geometry::{strip_meets, ConvexRegion, Direction, HalfPlane, Point, Polyline, Support};
use crate::network::{Coverage, Disaster, Element, Network, SurvivalState};
use crate::survivability::{compose_pair, terminals, ClosedForm, DisasterParams, StripMode};

pub const MIN_TRIALS: u64 = 100;
const CHUNK: u64 = 8192;

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
    pub confidence: f64,
    pub parallelism: usize,
    /// Sine boundaries: polyline samples per wavelength.
    pub steps_per_wavelength: usize,
}

impl SimConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        SimConfig {
            trials,
            seed,
            confidence: 0.95,
            parallelism: 1,
            steps_per_wavelength: 20,
        }
    }

    pub fn with_parallelism(mut self, threads: usize) -> Self {
        self.parallelism = threads;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < MIN_TRIALS {
            return Err(Error::param(format!(
                "trials must be at least {MIN_TRIALS}, got {}",
                self.trials
            )));
        }
        if !(self.confidence > 0.0 && self.confidence < 1.0) {
            return Err(Error::param(format!(
                "confidence must lie in (0, 1), got {}",
                self.confidence
            )));
        }
        if self.parallelism == 0 {
            return Err(Error::param("parallelism must be positive"));
        }
        if self.steps_per_wavelength == 0 {
            return Err(Error::param("steps per wavelength must be positive"));
        }
        Ok(())
    }

    fn z(&self) -> f64 {
        Normal::standard().inverse_cdf(0.5 + 0.5 * self.confidence)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub ci_halfwidth: f64,
    pub trials: u64,
}

impl Estimate {
    fn bernoulli(successes: u64, trials: u64, z: f64) -> Self {
        let n = trials as f64;
        let mean = successes as f64 / n;
        let stderr = (mean * (1.0 - mean) / n).sqrt();
        Estimate {
            mean,
            stderr,
            ci_halfwidth: z * stderr,
            trials,
        }
    }

    fn counts(sum: u64, sumsq: u64, trials: u64, z: f64) -> Self {
        let n = trials as f64;
        let mean = sum as f64 / n;
        let var = ((sumsq as f64 - sum as f64 * mean) / (n - 1.0)).max(0.0);
        let stderr = (var / n).sqrt();
        Estimate {
            mean,
            stderr,
            ci_halfwidth: z * stderr,
            trials,
        }
    }

    pub fn ci_low(&self) -> f64 {
        self.mean - self.ci_halfwidth
    }

    pub fn ci_high(&self) -> f64 {
        self.mean + self.ci_halfwidth
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Random stream of one trial.
pub fn trial_rng(seed: u64, trial: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(splitmix64(seed) ^ trial)
}

/// One strip: midparallel line `(p, θ)` and breadth `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisasterSample {
    pub p: f64,
    pub theta: f64,
    pub w: f64,
}

impl DisasterSample {
    pub fn direction(&self) -> Direction {
        Direction::new(self.theta)
    }
}

/// Rejection sampler for strips meeting a convex region.
#[derive(Debug, Clone)]
pub struct StripSampler<'a> {
    region: &'a ConvexRegion,
    w: f64,
    reach: f64,
}

impl<'a> StripSampler<'a> {
    pub fn new(region: &'a ConvexRegion, w: f64) -> Self {
        StripSampler {
            region,
            w,
            reach: region.max_support() + 0.5 * w,
        }
    }

    /// Sample plus the number of proposals it took.
    pub fn sample_counted<R: Rng + ?Sized>(&self, rng: &mut R) -> (DisasterSample, u64) {
        let mut proposals = 0;
        loop {
            proposals += 1;
            let theta = rng.random_range(-PI..PI);
            let p = self.reach * (2.0 * rng.random::<f64>() - 1.0);
            if strip_meets(self.region, Direction::new(theta), p, self.w) {
                return (DisasterSample { p, theta, w: self.w }, proposals);
            }
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> DisasterSample {
        self.sample_counted(rng).0
    }

    /// Probability that a single proposal is accepted.
    pub fn acceptance_probability(&self) -> f64 {
        (2.0 * self.region.perimeter() + 2.0 * PI * self.w) / (2.0 * PI * 2.0 * self.reach)
    }
}

pub fn sample_strip<R: Rng + ?Sized>(region: &ConvexRegion, w: f64, rng: &mut R) -> DisasterSample {
    StripSampler::new(region, w).sample(rng)
}

/// Destroyed region for one sampled strip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StripDisaster {
    /// The side of the strip's far boundary line, `x·u ≥ p − w/2`.
    HalfPlane(HalfPlane),
    /// The strip itself, `lo ≤ x·u ≤ hi`.
    Band { dir: Direction, lo: f64, hi: f64 },
}

impl StripDisaster {
    pub fn new(sample: &DisasterSample, mode: StripMode) -> Self {
        let dir = sample.direction();
        match mode {
            StripMode::HalfPlane => StripDisaster::HalfPlane(HalfPlane {
                dir,
                offset: sample.p - 0.5 * sample.w,
            }),
            StripMode::WideStrip { .. } => StripDisaster::Band {
                dir,
                lo: sample.p - 0.5 * sample.w,
                hi: sample.p + 0.5 * sample.w,
            },
        }
    }

    /// Whether the convex hull of `points` escapes the disaster.
    pub fn misses(&self, points: &[Point]) -> bool {
        match *self {
            StripDisaster::HalfPlane(hp) => !hp.intersects(points),
            StripDisaster::Band { dir, lo, hi } => {
                points.support(dir) < lo || -points.support(dir.opposite()) > hi
            }
        }
    }
}

impl Disaster for StripDisaster {
    fn hits(&self, element: Element<'_>) -> bool {
        match (self, element) {
            (StripDisaster::HalfPlane(hp), Element::Point(p)) => hp.contains(p),
            (StripDisaster::HalfPlane(hp), Element::Polyline(l)) => hp.intersects(l),
            (&StripDisaster::Band { dir, lo, hi }, Element::Point(p)) => {
                let t = p.dot(dir);
                lo <= t && t <= hi
            }
            (&StripDisaster::Band { dir, lo, hi }, Element::Polyline(l)) => {
                l.vertices().windows(2).any(|s| {
                    let (a, b) = (s[0].dot(dir), s[1].dot(dir));
                    a.min(b) <= hi && a.max(b) >= lo
                }) || (l.vertices().len() == 1 && self.hits(Element::Point(l.first())))
            }
        }
    }

    fn coverage(&self, extent: &[Point]) -> Coverage {
        if extent.is_empty() || self.misses(extent) {
            return Coverage::Clear;
        }
        let inside = match *self {
            StripDisaster::HalfPlane(hp) => extent.iter().all(|&p| hp.contains(p)),
            StripDisaster::Band { dir, lo, hi } => extent.iter().all(|&p| {
                let t = p.dot(dir);
                lo <= t && t <= hi
            }),
        };
        if inside {
            Coverage::Covered
        } else {
            Coverage::Partial
        }
    }
}

/// Disaster bounded by a sine wave around the midparallel of a strip: a
/// point is destroyed when its offset beyond the line is at least
/// `amplitude · sin(2π (s + phase) / wavelength)`, `s` being the coordinate
/// along the line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineBoundary {
    pub amplitude: f64,
    pub wavelength: f64,
    pub phase: f64,
    pub p: f64,
    pub theta: f64,
    dir: Direction,
    tangent: Direction,
    steps_per_wavelength: usize,
}

impl SineBoundary {
    pub fn new(sample: &DisasterSample, wavelength: f64, phase: f64, steps_per_wavelength: usize) -> Self {
        let dir = sample.direction();
        SineBoundary {
            amplitude: 0.5 * sample.w,
            wavelength,
            phase,
            p: sample.p,
            theta: sample.theta,
            dir,
            tangent: dir.normal(),
            steps_per_wavelength,
        }
    }

    fn offset(&self, x: Point) -> f64 {
        x.dot(self.dir) - self.p
    }

    pub fn contains(&self, x: Point) -> bool {
        let offset = self.offset(x);
        if offset >= self.amplitude {
            return true;
        }
        if offset < -self.amplitude {
            return false;
        }
        let s = x.dot(self.tangent);
        offset >= self.amplitude * (2.0 * PI * (s + self.phase) / self.wavelength).sin()
    }

    fn hits_polyline(&self, line: &Polyline) -> bool {
        let v = line.vertices();
        let mut top = f64::NEG_INFINITY;
        for &x in v {
            let o = self.offset(x);
            if o >= self.amplitude {
                return true;
            }
            top = top.max(o);
        }
        if top < -self.amplitude {
            return false;
        }
        if v.iter().any(|&x| self.contains(x)) {
            return true;
        }
        let step = (self.wavelength / self.steps_per_wavelength as f64).min(line.length() / 10.0);
        v.windows(2).any(|s| {
            let (a, b) = (s[0], s[1]);
            if self.offset(a).max(self.offset(b)) < -self.amplitude {
                return false;
            }
            let n = (a.dist(b) / step).ceil().max(1.0) as usize;
            (1..n).any(|k| {
                let t = k as f64 / n as f64;
                self.contains(Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
            })
        })
    }
}

impl Disaster for SineBoundary {
    fn hits(&self, element: Element<'_>) -> bool {
        match element {
            Element::Point(x) => self.contains(x),
            Element::Polyline(l) => self.hits_polyline(l),
        }
    }

    fn coverage(&self, extent: &[Point]) -> Coverage {
        if extent.is_empty() {
            return Coverage::Clear;
        }
        let (lo, hi) = extent
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                let o = self.offset(x);
                (lo.min(o), hi.max(o))
            });
        if hi < -self.amplitude {
            Coverage::Clear
        } else if lo >= self.amplitude {
            Coverage::Covered
        } else {
            Coverage::Partial
        }
    }
}

/// A connectivity event evaluated on the surviving network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventSpec {
    Pair(usize, usize),
    /// Every listed pair connected.
    AllOf(Vec<(usize, usize)>),
    /// Source connected to at least one destination.
    AnyDest(usize, Vec<usize>),
    /// `i` and `j` connected through at least one of the given nodes.
    ThroughAny(usize, usize, Vec<usize>),
    /// Number of destinations cut off from the source.
    DisconnectedCount(usize, Vec<usize>),
}

impl EventSpec {
    pub fn is_count(&self) -> bool {
        matches!(self, EventSpec::DisconnectedCount(..))
    }

    pub fn outcome(&self, s: &SurvivalState) -> u64 {
        let hit = match self {
            EventSpec::Pair(i, j) => s.connected(*i, *j),
            EventSpec::AllOf(pairs) => pairs.iter().all(|&(i, j)| s.connected(i, j)),
            EventSpec::AnyDest(i, js) => js.iter().any(|&j| s.connected(*i, j)),
            EventSpec::ThroughAny(i, j, ks) => ks.iter().any(|&k| s.all_connected(&[*i, k, *j])),
            EventSpec::DisconnectedCount(i, js) => {
                return js.iter().filter(|&&j| !s.connected(*i, j)).count() as u64
            }
        };
        hit as u64
    }

    fn nodes(&self) -> Vec<usize> {
        match self {
            EventSpec::Pair(i, j) => vec![*i, *j],
            EventSpec::AllOf(p) => p.iter().flat_map(|&(i, j)| [i, j]).collect(),
            EventSpec::AnyDest(i, js) | EventSpec::DisconnectedCount(i, js) => {
                std::iter::once(*i).chain(js.iter().copied()).collect()
            }
            EventSpec::ThroughAny(i, j, ks) => [*i, *j].into_iter().chain(ks.iter().copied()).collect(),
        }
    }

    fn check(&self, net: &Network) -> Result<()> {
        match self.nodes().into_iter().find(|&n| n >= net.nodes().len()) {
            Some(n) => Err(Error::UnknownNode(format!("#{n}"))),
            None => Ok(()),
        }
    }

    /// Parses `pair:i,j`, `all:i-j;k-l`, `any:i:j1,j2`, `through:i:j:k1,k2`
    /// or `count:i:j1,j2` with node ids.
    pub fn parse(net: &Network, text: &str) -> Result<EventSpec> {
        let bad = || Error::param(format!("malformed event: {text}"));
        let (kind, rest) = text.split_once(':').ok_or_else(bad)?;
        let id = |s: &str| net.node_idx(s.trim());
        let list = |s: &str| s.split(',').map(id).collect::<Result<Vec<_>>>();
        let parts: Vec<&str> = rest.split(':').collect();
        match (kind, parts.as_slice()) {
            ("pair", [p]) => {
                let (a, b) = p.split_once(',').ok_or_else(bad)?;
                Ok(EventSpec::Pair(id(a)?, id(b)?))
            }
            ("all", [p]) => {
                let pairs = p
                    .split(';')
                    .map(|q| {
                        let (a, b) = q.split_once('-').ok_or_else(bad)?;
                        Ok((id(a)?, id(b)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(EventSpec::AllOf(pairs))
            }
            ("any", [i, js]) => Ok(EventSpec::AnyDest(id(i)?, list(js)?)),
            ("count", [i, js]) => Ok(EventSpec::DisconnectedCount(id(i)?, list(js)?)),
            ("through", [i, j, ks]) => Ok(EventSpec::ThroughAny(id(i)?, id(j)?, list(ks)?)),
            _ => Err(bad()),
        }
    }

    /// Inverse of [`EventSpec::parse`].
    pub fn label(&self, net: &Network) -> String {
        let id = |n: usize| net.node_id(n).to_string();
        let list = |v: &[usize]| v.iter().map(|&n| id(n)).collect::<Vec<_>>().join(",");
        match self {
            EventSpec::Pair(i, j) => format!("pair:{},{}", id(*i), id(*j)),
            EventSpec::AllOf(p) => format!(
                "all:{}",
                p.iter()
                    .map(|&(i, j)| format!("{}-{}", id(i), id(j)))
                    .collect::<Vec<_>>()
                    .join(";")
            ),
            EventSpec::AnyDest(i, js) => format!("any:{}:{}", id(*i), list(js)),
            EventSpec::ThroughAny(i, j, ks) => format!("through:{}:{}:{}", id(*i), id(*j), list(ks)),
            EventSpec::DisconnectedCount(i, js) => format!("count:{}:{}", id(*i), list(js)),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    sum: u64,
    sumsq: u64,
}

/// Runs `cfg.trials` trials; each writes one count per output into its
/// buffer. Chunks are fixed-size and sums are exact, so the totals do not
/// depend on the thread count.
fn run_trials<S, I, F>(cfg: &SimConfig, outputs: usize, init: I, trial: F) -> Result<Vec<Tally>>
where
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &mut Xoshiro256PlusPlus, &mut [u64]) + Sync + Send,
{
    cfg.validate()?;
    let chunks = cfg.trials.div_ceil(CHUNK);
    let run_chunk = |state: &mut (S, Vec<u64>), c: u64| {
        let mut tallies = vec![Tally::default(); outputs];
        let end = ((c + 1) * CHUNK).min(cfg.trials);
        for t in c * CHUNK..end {
            let mut rng = trial_rng(cfg.seed, t);
            state.1.iter_mut().for_each(|x| *x = 0);
            trial(&mut state.0, &mut rng, &mut state.1);
            for (tally, &x) in tallies.iter_mut().zip(&state.1) {
                tally.sum += x;
                tally.sumsq += x * x;
            }
        }
        tallies
    };
    let merge = |mut a: Vec<Tally>, b: Vec<Tally>| {
        for (x, y) in a.iter_mut().zip(b) {
            x.sum += y.sum;
            x.sumsq += y.sumsq;
        }
        a
    };
    let init_state = || (init(), vec![0u64; outputs]);
    if cfg.parallelism == 1 {
        let mut state = init_state();
        return Ok((0..chunks)
            .map(|c| run_chunk(&mut state, c))
            .fold(vec![Tally::default(); outputs], merge));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::param(format!("thread pool: {e}")))?;
    Ok(pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map_init(init_state, run_chunk)
            .reduce(|| vec![Tally::default(); outputs], merge)
    }))
}

fn finish(cfg: &SimConfig, events: &[EventSpec], tallies: &[Tally]) -> Vec<Estimate> {
    let z = cfg.z();
    events
        .iter()
        .zip(tallies)
        .map(|(e, t)| {
            if e.is_count() {
                Estimate::counts(t.sum, t.sumsq, cfg.trials, z)
            } else {
                Estimate::bernoulli(t.sum, cfg.trials, z)
            }
        })
        .collect()
}

/// Estimates several events on the same sequence of disasters.
pub fn estimate_events(
    net: &Network,
    events: &[EventSpec],
    dp: DisasterParams,
    cfg: &SimConfig,
) -> Result<Vec<Estimate>> {
    dp.validate()?;
    for e in events {
        e.check(net)?;
    }
    let sampler = StripSampler::new(&net.area().region, dp.sampled_breadth());
    let tallies = run_trials(cfg, events.len(), SurvivalState::new, |state, rng, out| {
        let disaster = StripDisaster::new(&sampler.sample(rng), dp.mode);
        state.update(net, &disaster);
        for (o, e) in out.iter_mut().zip(events) {
            *o = e.outcome(state);
        }
    })?;
    Ok(finish(cfg, events, &tallies))
}

pub fn estimate_event(
    net: &Network,
    event: &EventSpec,
    dp: DisasterParams,
    cfg: &SimConfig,
) -> Result<Estimate> {
    Ok(estimate_events(net, std::slice::from_ref(event), dp, cfg)?[0])
}

/// Probability that a disaster misses the convex hull of `points`.
pub fn estimate_miss(
    region: &ConvexRegion,
    points: &[Point],
    dp: DisasterParams,
    cfg: &SimConfig,
) -> Result<Estimate> {
    dp.validate()?;
    if points.is_empty() {
        return Err(Error::EmptyGeometry);
    }
    let sampler = StripSampler::new(region, dp.sampled_breadth());
    let tallies = run_trials(
        cfg,
        1,
        || (),
        |_, rng, out| {
            out[0] = StripDisaster::new(&sampler.sample(rng), dp.mode).misses(points) as u64;
        },
    )?;
    Ok(Estimate::bernoulli(tallies[0].sum, cfg.trials, cfg.z()))
}

/// Estimates events when the disaster edge is a sine wave of amplitude `w/2`
/// and wavelength `lambda`.
pub fn estimate_sine_events(
    net: &Network,
    lambda: f64,
    w: f64,
    events: &[EventSpec],
    cfg: &SimConfig,
) -> Result<Vec<Estimate>> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::param(format!("wavelength must be positive, got {lambda}")));
    }
    DisasterParams::half_plane(w).validate()?;
    for e in events {
        e.check(net)?;
    }
    let sampler = StripSampler::new(&net.area().region, w);
    let tallies = run_trials(cfg, events.len(), SurvivalState::new, |state, rng, out| {
        let sample = sampler.sample(rng);
        let phase = lambda * rng.random::<f64>();
        let disaster = SineBoundary::new(&sample, lambda, phase, cfg.steps_per_wavelength);
        state.update(net, &disaster);
        for (o, e) in out.iter_mut().zip(events) {
            *o = e.outcome(state);
        }
    })?;
    Ok(finish(cfg, events, &tallies))
}

pub fn estimate_sine(
    net: &Network,
    lambda: f64,
    w: f64,
    pair: (usize, usize),
    cfg: &SimConfig,
) -> Result<Estimate> {
    Ok(estimate_sine_events(net, lambda, w, &[EventSpec::Pair(pair.0, pair.1)], cfg)?[0])
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidityRow {
    pub lambda: f64,
    pub w: f64,
    pub mean_rel_abs_error: f64,
    pub pairs_used: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidityReport {
    /// Mean distance between distinct terminals; λ and w are in this unit.
    pub unit: f64,
    pub rows: Vec<ValidityRow>,
    /// Pairs left out of a cell because the strip model gives them zero
    /// probability, as `(lambda, w, a, b)`.
    pub excluded: Vec<(f64, f64, String, String)>,
}

/// Compares sine-edged disasters against the straight strip model over a grid
/// of wavelengths and amplitudes, pairing every two terminals of the network.
pub fn validity_study(net: &Network, lambdas: &[f64], ws: &[f64], cfg: &SimConfig) -> Result<ValidityReport> {
    if lambdas.is_empty() || ws.is_empty() {
        return Err(Error::param("wavelength and breadth grids must be non-empty"));
    }
    if let Some(l) = lambdas.iter().find(|&&l| !(l.is_finite() && l > 0.0)) {
        return Err(Error::param(format!("wavelengths must be positive, got {l}")));
    }
    let terms = terminals(net);
    if terms.len() < 2 {
        return Err(Error::param("validity study needs at least two terminal nodes"));
    }
    let mut comps = Vec::new();
    let (mut total, mut count) = (0.0, 0usize);
    for (x, &a) in terms.iter().enumerate() {
        for &b in &terms[x + 1..] {
            total += net.position(a).dist(net.position(b));
            count += 1;
            comps.push(compose_pair(net, a, b)?);
        }
    }
    let unit = total / count as f64;
    if unit <= 0.0 {
        return Err(Error::param("terminal nodes coincide"));
    }
    let events: Vec<EventSpec> = comps
        .iter()
        .map(|c| EventSpec::AllOf(c.nodes.windows(2).map(|s| (s[0], s[1])).collect()))
        .collect();

    let mut report = ValidityReport {
        unit,
        rows: Vec::new(),
        excluded: Vec::new(),
    };
    for &lambda in lambdas {
        for &w in ws {
            let w_real = w * unit;
            let cf = ClosedForm::new(net, DisasterParams::half_plane(w_real))?;
            let sims = estimate_sine_events(net, lambda * unit, w_real, &events, cfg)?;
            let (mut err, mut used) = (0.0, 0usize);
            for (comp, sim) in comps.iter().zip(&sims) {
                let theory = cf.pair_values(comp)?.exact.value();
                if theory > 0.0 {
                    err += (sim.mean - theory).abs() / theory;
                    used += 1;
                } else {
                    report.excluded.push((
                        lambda,
                        w,
                        net.node_id(comp.a).to_string(),
                        net.node_id(comp.b).to_string(),
                    ));
                }
            }
            report.rows.push(ValidityRow {
                lambda,
                w,
                mean_rel_abs_error: if used > 0 { err / used as f64 } else { f64::NAN },
                pairs_used: used,
            });
        }
    }
    Ok(report)
}
