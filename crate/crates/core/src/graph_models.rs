//! Random network models: the complete graph with iid capacities, Erdős–Rényi
//! binary graphs, random bipartite graphs, relay networks, and the capacity
//! quantization that reduces general capacities to stacked binary layers.
//!
//! All generators are pure functions of their parameters and a seed. Draws are
//! consumed in a fixed lexicographic order so the same seed always produces
//! the same structure, edge for edge.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{input_err, param_err, Result};
use crate::math;
use crate::rng::DrawStream;

/// A capacity law with closed-form CDF and mean.
///
/// Sampling is by inverse CDF from a single uniform draw per edge, so every
/// distribution consumes the draw stream at the same rate.
#[derive(Debug, Clone, PartialEq)]
pub enum CapacityDistribution {
    /// Capacity 1 with probability `p`, else 0.
    Bernoulli(f64),
    /// Uniform on [a, b] with 0 <= a <= b.
    Uniform(f64, f64),
    /// Exponential with the given mean.
    Exponential(f64),
    /// Finite support: `values[i]` with probability `probs[i]`.
    Discrete(Vec<f64>, Vec<f64>),
}

impl CapacityDistribution {
    pub fn validate(&self) -> Result<()> {
        match self {
            CapacityDistribution::Bernoulli(p) => {
                if !(0.0..=1.0).contains(p) {
                    return Err(param_err!("p must be in [0, 1] (got {p})"));
                }
            }
            CapacityDistribution::Uniform(a, b) => {
                if !a.is_finite() || !b.is_finite() || a > b {
                    return Err(param_err!("uniform bounds need a <= b (got a={a}, b={b})"));
                }
                if *a < 0.0 {
                    return Err(param_err!("capacities are nonnegative; a={a} < 0"));
                }
            }
            CapacityDistribution::Exponential(mean) => {
                if !(*mean > 0.0) || !mean.is_finite() {
                    return Err(param_err!("exponential mean must be positive (got {mean})"));
                }
            }
            CapacityDistribution::Discrete(values, probs) => {
                if values.is_empty() || values.len() != probs.len() {
                    return Err(param_err!(
                        "discrete values/probs must be nonempty and equal length"
                    ));
                }
                if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
                    return Err(param_err!("discrete values must be finite and nonnegative"));
                }
                if probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
                    return Err(param_err!("discrete probabilities must be in [0, 1]"));
                }
                let total: f64 = probs.iter().sum();
                if math::abs(total - 1.0) > 1e-12 {
                    return Err(param_err!(
                        "discrete probabilities must sum to 1 within 1e-12 (got {total})"
                    ));
                }
            }
        }
        Ok(())
    }

    /// E[C], in closed form.
    pub fn mean(&self) -> f64 {
        match self {
            CapacityDistribution::Bernoulli(p) => *p,
            CapacityDistribution::Uniform(a, b) => 0.5 * (a + b),
            CapacityDistribution::Exponential(mean) => *mean,
            CapacityDistribution::Discrete(values, probs) => {
                values.iter().zip(probs).map(|(v, p)| v * p).sum()
            }
        }
    }

    /// F(x) = P(C <= x), in closed form.
    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            CapacityDistribution::Bernoulli(p) => {
                if x < 0.0 {
                    0.0
                } else if x < 1.0 {
                    1.0 - p
                } else {
                    1.0
                }
            }
            CapacityDistribution::Uniform(a, b) => {
                if x < *a {
                    0.0
                } else if x >= *b {
                    1.0
                } else {
                    (x - a) / (b - a)
                }
            }
            CapacityDistribution::Exponential(mean) => {
                if x < 0.0 {
                    0.0
                } else {
                    1.0 - math::exp(-x / mean)
                }
            }
            CapacityDistribution::Discrete(values, probs) => values
                .iter()
                .zip(probs)
                .filter(|(v, _)| **v <= x)
                .map(|(_, p)| p)
                .sum(),
        }
    }

    /// Largest point of support, `None` when unbounded.
    pub fn max_support(&self) -> Option<f64> {
        match self {
            CapacityDistribution::Bernoulli(_) => Some(1.0),
            CapacityDistribution::Uniform(_, b) => Some(*b),
            CapacityDistribution::Exponential(_) => None,
            CapacityDistribution::Discrete(values, probs) => values
                .iter()
                .zip(probs)
                .filter(|(_, p)| **p > 0.0)
                .map(|(v, _)| *v)
                .fold(None, |acc: Option<f64>, v| {
                    Some(acc.map_or(v, |a| if v > a { v } else { a }))
                }),
        }
    }

    /// Inverse-CDF sample from one uniform draw u in [0, 1).
    fn sample(&self, u: f64) -> f64 {
        match self {
            CapacityDistribution::Bernoulli(p) => {
                if u < *p {
                    1.0
                } else {
                    0.0
                }
            }
            CapacityDistribution::Uniform(a, b) => a + u * (b - a),
            CapacityDistribution::Exponential(mean) => -mean * math::ln(1.0 - u),
            CapacityDistribution::Discrete(values, probs) => {
                let mut cum = 0.0;
                for (v, p) in values.iter().zip(probs) {
                    cum += p;
                    if u < cum {
                        return *v;
                    }
                }
                // u can exceed the accumulated sum only through float slack.
                *values.last().expect("validated nonempty")
            }
        }
    }
}

/// Undirected graph on vertices `0..n` with nonnegative real edge capacities.
///
/// Only positive-capacity edges are stored; an absent pair has capacity 0.
/// The edge list is sorted by `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq)]
pub struct CapGraph {
    n: usize,
    edges: Vec<(u32, u32, f64)>,
}

impl CapGraph {
    /// Builds a graph from an explicit edge list, validating indices,
    /// ordering, duplicates, and nonnegativity. Zero-capacity entries are
    /// dropped.
    pub fn from_edges(n: usize, mut edges: Vec<(u32, u32, f64)>) -> Result<Self> {
        if n < 1 {
            return Err(input_err!("graph needs at least one vertex"));
        }
        edges.retain(|&(_, _, c)| c != 0.0);
        for &(i, j, c) in &edges {
            if i >= j {
                return Err(input_err!("edge ({i}, {j}) must have i < j"));
            }
            if j as usize >= n {
                return Err(input_err!("edge ({i}, {j}) out of range for n = {n}"));
            }
            if !(c > 0.0) || !c.is_finite() {
                return Err(input_err!("edge ({i}, {j}) has invalid capacity {c}"));
            }
        }
        edges.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        if edges.windows(2).any(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(input_err!("duplicate edge in edge list"));
        }
        Ok(CapGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Present edges, sorted lexicographically.
    pub fn edges(&self) -> &[(u32, u32, f64)] {
        &self.edges
    }

    /// Capacity of the pair `{i, j}`; 0 for absent pairs.
    pub fn capacity(&self, i: u32, j: u32) -> f64 {
        let key = if i < j { (i, j) } else { (j, i) };
        match self
            .edges
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&key))
        {
            Ok(idx) => self.edges[idx].2,
            Err(_) => 0.0,
        }
    }

    pub fn has_edge(&self, i: u32, j: u32) -> bool {
        self.capacity(i, j) > 0.0
    }

    pub fn total_capacity(&self) -> f64 {
        self.edges.iter().map(|&(_, _, c)| c).sum()
    }

    /// True when every stored capacity is exactly 1.0.
    pub fn is_binary(&self) -> bool {
        self.edges.iter().all(|&(_, _, c)| c == 1.0)
    }

    /// Neighbor lists (ascending) paired with the index of each edge in
    /// `edges()`. Entry `(v, e)` at vertex `u` means `edges()[e]` joins
    /// `{u, v}`.
    pub fn adjacency(&self) -> Vec<Vec<(u32, u32)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(i, j, _)) in self.edges.iter().enumerate() {
            adj[i as usize].push((j, e as u32));
            adj[j as usize].push((i, e as u32));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j, _)| i == v || j == v)
            .count()
    }
}

/// Bipartite graph with `left` and `right` vertex classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: Vec<(u32, u32)>,
}

impl BipartiteGraph {
    pub fn from_edges(left: usize, right: usize, mut edges: Vec<(u32, u32)>) -> Result<Self> {
        for &(l, r) in &edges {
            if l as usize >= left || r as usize >= right {
                return Err(input_err!(
                    "edge ({l}, {r}) out of range for {left}x{right} bipartite graph"
                ));
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(input_err!("duplicate edge in bipartite edge list"));
        }
        Ok(BipartiteGraph { left, right, edges })
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Per-left-vertex neighbor lists, ascending.
    pub fn left_adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.left];
        for &(l, r) in &self.edges {
            adj[l as usize].push(r);
        }
        adj
    }

    /// Per-right-vertex neighbor lists, ascending.
    pub fn right_adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.right];
        for &(l, r) in &self.edges {
            adj[r as usize].push(l);
        }
        adj
    }
}

/// One source and `k - 1` sinks joined only through `n` relays: the session
/// side has no internal links by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelayNetwork {
    session_size: usize,
    relay_count: usize,
    /// Relays adjacent to the source, ascending.
    source_relay: Vec<u32>,
    /// Per sink (0-based sink index, `session_size - 1` lists), adjacent
    /// relays ascending.
    sink_relay: Vec<Vec<u32>>,
    /// Relay-relay links with i < j, sorted.
    relay_relay: Vec<(u32, u32)>,
}

impl RelayNetwork {
    pub fn from_parts(
        k: usize,
        n: usize,
        source_relay: Vec<u32>,
        sink_relay: Vec<Vec<u32>>,
        relay_relay: Vec<(u32, u32)>,
    ) -> Result<Self> {
        if k < 2 {
            return Err(param_err!("session size k must be at least 2 (got {k})"));
        }
        if n < 1 {
            return Err(param_err!(
                "relay count n must be at least 1 (got {n}); the session sides are never linked directly"
            ));
        }
        if sink_relay.len() != k - 1 {
            return Err(input_err!(
                "expected {} sink adjacency lists, got {}",
                k - 1,
                sink_relay.len()
            ));
        }
        let check_list = |list: &[u32], what: &str| -> Result<()> {
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(input_err!("{what} adjacency must be strictly ascending"));
                }
            }
            if list.iter().any(|&r| r as usize >= n) {
                return Err(input_err!("{what} adjacency references a relay >= {n}"));
            }
            Ok(())
        };
        check_list(&source_relay, "source")?;
        for list in &sink_relay {
            check_list(list, "sink")?;
        }
        let mut rr = relay_relay;
        for &(a, b) in &rr {
            if a >= b || b as usize >= n {
                return Err(input_err!("relay-relay edge ({a}, {b}) invalid for n = {n}"));
            }
        }
        rr.sort_unstable();
        if rr.windows(2).any(|w| w[0] == w[1]) {
            return Err(input_err!("duplicate relay-relay edge"));
        }
        Ok(RelayNetwork {
            session_size: k,
            relay_count: n,
            source_relay,
            sink_relay,
            relay_relay: rr,
        })
    }

    pub fn session_size(&self) -> usize {
        self.session_size
    }

    pub fn relay_count(&self) -> usize {
        self.relay_count
    }

    pub fn source_relay(&self) -> &[u32] {
        &self.source_relay
    }

    pub fn sink_relay(&self) -> &[Vec<u32>] {
        &self.sink_relay
    }

    pub fn relay_relay(&self) -> &[(u32, u32)] {
        &self.relay_relay
    }

    /// Relay-relay neighbor lists, ascending.
    pub fn relay_adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.relay_count];
        for &(a, b) in &self.relay_relay {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// Complete graph on `n` vertices with iid capacities from `dist`.
///
/// Draws are consumed in lexicographic pair order (0,1), (0,2), ...,
/// (n-2, n-1), one uniform per pair.
pub fn gen_complete_capacitated(
    n: usize,
    dist: &CapacityDistribution,
    seed: u64,
) -> Result<CapGraph> {
    if n < 2 {
        return Err(param_err!("n must be at least 2 (got {n})"));
    }
    dist.validate()?;
    let mut stream = DrawStream::derived(seed, "cap-edges", &[]);
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            let c = dist.sample(stream.unit());
            if c > 0.0 {
                edges.push((i, j, c));
            }
        }
    }
    Ok(CapGraph { n, edges })
}

/// Erdős–Rényi G(n, p): binary capacities, identical edge-for-edge to
/// `gen_complete_capacitated` with a Bernoulli(p) law and the same seed.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<CapGraph> {
    gen_complete_capacitated(n, &CapacityDistribution::Bernoulli(p), seed)
}

/// Random bipartite graph: each of the `left x right` pairs is present
/// independently with probability `p`, drawn in row-major order.
pub fn gen_bipartite(left: usize, right: usize, p: f64, seed: u64) -> Result<BipartiteGraph> {
    if left < 1 || right < 1 {
        return Err(param_err!(
            "bipartite sides must be nonempty (got {left}x{right})"
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(param_err!("p must be in [0, 1] (got {p})"));
    }
    let mut stream = DrawStream::derived(seed, "bipartite-edges", &[]);
    let mut edges = Vec::new();
    for l in 0..left as u32 {
        for r in 0..right as u32 {
            if stream.unit() < p {
                edges.push((l, r));
            }
        }
    }
    Ok(BipartiteGraph { left, right, edges })
}

/// Random relay network: source-relay, sink-relay, and relay-relay links are
/// each iid Bernoulli(p). Draw order: the source row over relays, then each
/// sink row, then relay pairs lexicographically.
pub fn gen_relay_network(k: usize, n: usize, p: f64, seed: u64) -> Result<RelayNetwork> {
    if k < 2 {
        return Err(param_err!("session size k must be at least 2 (got {k})"));
    }
    if n < 1 {
        return Err(param_err!(
            "relay count n must be at least 1 (got {n}); a relay network without relays is disconnected"
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(param_err!("p must be in [0, 1] (got {p})"));
    }
    let mut stream = DrawStream::derived(seed, "relay-edges", &[]);
    let mut source_relay = Vec::new();
    for r in 0..n as u32 {
        if stream.unit() < p {
            source_relay.push(r);
        }
    }
    let mut sink_relay = Vec::with_capacity(k - 1);
    for _ in 0..k - 1 {
        let mut list = Vec::new();
        for r in 0..n as u32 {
            if stream.unit() < p {
                list.push(r);
            }
        }
        sink_relay.push(list);
    }
    let mut relay_relay = Vec::new();
    for a in 0..n as u32 {
        for b in (a + 1)..n as u32 {
            if stream.unit() < p {
                relay_relay.push((a, b));
            }
        }
    }
    Ok(RelayNetwork {
        session_size: k,
        relay_count: n,
        source_relay,
        sink_relay,
        relay_relay,
    })
}

/// Threshold layering of a capacitated graph: layer `k` (1-indexed) keeps an
/// edge with unit capacity iff its capacity exceeds `k * delta`. Layers are
/// nested by construction.
pub fn quantize_layers(g: &CapGraph, delta: f64, m: usize) -> Result<Vec<CapGraph>> {
    if !(delta > 0.0) {
        return Err(param_err!("delta must be positive (got {delta})"));
    }
    if m < 1 {
        return Err(param_err!("m must be at least 1 (got {m})"));
    }
    let mut layers = Vec::with_capacity(m);
    for k in 1..=m {
        let threshold = k as f64 * delta;
        let edges: Vec<(u32, u32, f64)> = g
            .edges
            .iter()
            .filter(|&&(_, _, c)| c > threshold)
            .map(|&(i, j, _)| (i, j, 1.0))
            .collect();
        layers.push(CapGraph { n: g.n, edges });
    }
    Ok(layers)
}

/// Picks a quantization step `delta` and layer count `m` such that the
/// layered approximation retains at least a `(1 - eps)` fraction of the mean
/// capacity:
///
///   sum_{k=1..m} delta * (1 - F(k * delta)) >= E[C] * (1 - eps).
///
/// Search: start with delta equal to the support horizon and m = 1, halve
/// delta (doubling the horizon coverage m = ceil(horizon / delta)) until the
/// sum clears the threshold, then drop trailing all-zero layers. For unbounded
/// support the horizon is chosen so the tail beyond it is at most half the
/// allowed loss.
pub fn choose_quantization(dist: &CapacityDistribution, eps: f64) -> Result<(f64, usize)> {
    dist.validate()?;
    if !(0.0 < eps && eps < 1.0) {
        return Err(param_err!("eps must be in (0, 1) (got {eps})"));
    }
    let mean = dist.mean();
    if !(mean > 0.0) {
        return Err(param_err!(
            "distribution mean must be positive for quantization (E[C] = {mean})"
        ));
    }
    let target = mean * (1.0 - eps);
    let horizon = match dist.max_support() {
        Some(b) => b,
        // Exponential tail beyond mean*ln(2/eps) integrates to mean*eps/2.
        None => mean * math::ln(2.0 / eps),
    };
    let retained = |delta: f64, m: usize| -> f64 {
        (1..=m)
            .map(|k| delta * (1.0 - dist.cdf(k as f64 * delta)))
            .sum()
    };
    let mut delta = horizon;
    for _ in 0..60 {
        let m = libm::ceil(horizon / delta) as usize;
        if retained(delta, m) >= target {
            // Trailing layers with no mass above their threshold contribute
            // nothing; drop them.
            let mut m_trim = m;
            while m_trim > 1 && 1.0 - dist.cdf(m_trim as f64 * delta) <= 0.0 {
                m_trim -= 1;
            }
            debug_assert!(retained(delta, m_trim) >= target);
            return Ok((delta, m_trim));
        }
        delta *= 0.5;
    }
    Err(param_err!(
        "quantization search failed to reach E[C](1 - eps) = {target}; distribution too heavy-tailed for eps = {eps}"
    ))
}

/// Formats a distribution for diagnostics.
impl core::fmt::Display for CapacityDistribution {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CapacityDistribution::Bernoulli(p) => write!(f, "bernoulli({p})"),
            CapacityDistribution::Uniform(a, b) => write!(f, "uniform({a}, {b})"),
            CapacityDistribution::Exponential(m) => write!(f, "exponential({m})"),
            CapacityDistribution::Discrete(values, probs) => {
                write!(f, "discrete(")?;
                for (idx, (v, p)) in values.iter().zip(probs).enumerate() {
                    if idx > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}:{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

pub(crate) fn format_session(session: &[u32]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, v) in session.iter().enumerate() {
        if i > 0 {
            let _ = write!(s, ",");
        }
        let _ = write!(s, "{v}");
    }
    s
}
