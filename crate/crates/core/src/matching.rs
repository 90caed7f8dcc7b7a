//! Maximum bipartite matching, certificates for the absence of a complete
//! matching, and analytic upper bounds on the probability that a random
//! bipartite graph has no complete matching.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{param_err, Result};
use crate::graph_models::{gen_bipartite, BipartiteGraph};
use crate::math;
use crate::rng::derive_seed;

/// A matching: vertex-disjoint left-right pairs, each an edge of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(u32, u32)>,
    /// True iff every left vertex is matched.
    pub complete: bool,
}

/// Witness that no complete matching exists: a set `A` on one side whose
/// neighborhood has exactly `|A| - 1` vertices, spanning a connected
/// subgraph, with `2 <= |A| <= (n + 1) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallCertificate {
    pub side: Side,
    pub set: Vec<u32>,
    pub neighborhood: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

const UNMATCHED: u32 = u32::MAX;

/// Hopcroft-Karp over an adjacency-slice view, with deterministic
/// tie-breaking: free left vertices are scanned in ascending index and
/// neighbor lists are explored in stored order (callers keep them ascending),
/// so the same input always produces the same matching.
///
/// `adj(l)` yields the right-neighbors of left vertex `l`. Returns
/// `(match_of_left, match_of_right)` with `u32::MAX` for unmatched.
pub(crate) fn hopcroft_karp<'a, F>(
    left: usize,
    right: usize,
    adj: F,
) -> (Vec<u32>, Vec<u32>)
where
    F: Fn(usize) -> &'a [u32],
{
    let mut match_l = vec![UNMATCHED; left];
    let mut match_r = vec![UNMATCHED; right];
    let mut dist = vec![u32::MAX; left];
    let mut queue = Vec::with_capacity(left);

    loop {
        // BFS layering from free left vertices.
        queue.clear();
        for l in 0..left {
            if match_l[l] == UNMATCHED {
                dist[l] = 0;
                queue.push(l as u32);
            } else {
                dist[l] = u32::MAX;
            }
        }
        let mut found_free_right = false;
        let mut head = 0;
        while head < queue.len() {
            let l = queue[head] as usize;
            head += 1;
            for &r in adj(l) {
                let l2 = match_r[r as usize];
                if l2 == UNMATCHED {
                    found_free_right = true;
                } else if dist[l2 as usize] == u32::MAX {
                    dist[l2 as usize] = dist[l] + 1;
                    queue.push(l2);
                }
            }
        }
        if !found_free_right {
            break;
        }
        // DFS along the layering, ascending free-left order.
        for l in 0..left {
            if match_l[l] == UNMATCHED {
                augment(l, &adj, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }
    (match_l, match_r)
}

fn augment<'a, F>(
    l: usize,
    adj: &F,
    match_l: &mut [u32],
    match_r: &mut [u32],
    dist: &mut [u32],
) -> bool
where
    F: Fn(usize) -> &'a [u32],
{
    let d = dist[l];
    dist[l] = u32::MAX;
    for &r in adj(l) {
        let l2 = match_r[r as usize];
        if l2 == UNMATCHED
            || (dist[l2 as usize] == d + 1
                && augment(l2 as usize, adj, match_l, match_r, dist))
        {
            match_l[l] = r;
            match_r[r as usize] = l as u32;
            return true;
        }
    }
    false
}

/// Maximum-cardinality matching of a bipartite graph.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let adj = g.left_adjacency();
    let (match_l, _) = hopcroft_karp(g.left_size(), g.right_size(), |l| &adj[l]);
    let pairs: Vec<(u32, u32)> = match_l
        .iter()
        .enumerate()
        .filter(|(_, &r)| r != UNMATCHED)
        .map(|(l, &r)| (l as u32, r))
        .collect();
    let complete = pairs.len() == g.left_size();
    Matching { pairs, complete }
}

/// Admissible violator sizes: 2 ..= floor((n + 1) / 2), except that at n = 2
/// (where that range is empty) a pair is accepted so the degenerate
/// two-lefts-one-right graph still yields a certificate.
fn violator_size_bound(n: usize) -> usize {
    ((n + 1) / 2).max(2)
}

/// Finds a Hall violator certificate on a square bipartite graph with no
/// complete matching; `None` when the matching is complete or no structured
/// violator exists (the certificate is a diagnostic, not a control path).
///
/// Construction: from each unmatched vertex of a maximum matching, the
/// alternating-reachability set `A` on that vertex's side has exactly
/// `|Gamma(A)| = |A| - 1` neighbors and spans a connected subgraph. Among all
/// candidates the smallest one also satisfies the size bound; a left-side
/// certificate is preferred when both sides qualify. Isolated vertices on the
/// opposite side do not block a certificate; an isolated unmatched vertex
/// simply produces no candidate of its own.
pub fn hall_violator(g: &BipartiteGraph) -> Option<HallCertificate> {
    let n = g.left_size();
    if n != g.right_size() || n == 0 {
        return None;
    }
    let left_adj = g.left_adjacency();
    let right_adj = g.right_adjacency();
    let (match_l, match_r) = hopcroft_karp(n, n, |l| &left_adj[l]);
    if match_l.iter().all(|&r| r != UNMATCHED) {
        return None;
    }
    let bound = violator_size_bound(n);

    let candidates_for = |side: Side| -> Vec<(Vec<u32>, Vec<u32>)> {
        let (own_adj, own_match, other_match): (&[Vec<u32>], &[u32], &[u32]) = match side {
            Side::Left => (&left_adj, &match_l, &match_r),
            Side::Right => (&right_adj, &match_r, &match_l),
        };
        let mut out = Vec::new();
        for start in 0..n {
            if own_match[start] != UNMATCHED {
                continue;
            }
            // Alternating reachability: non-matching edge out, matching edge
            // back. Every reached opposite vertex is matched into the set.
            let mut in_set = vec![false; n];
            let mut in_nbhd = vec![false; n];
            in_set[start] = true;
            let mut stack = vec![start as u32];
            let mut set = vec![start as u32];
            let mut nbhd = Vec::new();
            while let Some(v) = stack.pop() {
                for &w in &own_adj[v as usize] {
                    if in_nbhd[w as usize] {
                        continue;
                    }
                    in_nbhd[w as usize] = true;
                    nbhd.push(w);
                    let back = other_match[w as usize];
                    debug_assert_ne!(back, UNMATCHED, "augmenting path left unmatched");
                    if !in_set[back as usize] {
                        in_set[back as usize] = true;
                        set.push(back);
                        stack.push(back);
                    }
                }
            }
            set.sort_unstable();
            nbhd.sort_unstable();
            out.push((set, nbhd));
        }
        out
    };

    let mut best: Option<(Side, Vec<u32>, Vec<u32>)> = None;
    for side in [Side::Left, Side::Right] {
        for (set, nbhd) in candidates_for(side) {
            if set.len() < 2 || set.len() > bound {
                continue;
            }
            let better = match &best {
                None => true,
                // Prefer the left side; among same-side candidates, the
                // smallest set, then lexicographic for determinism.
                Some((bs, bset, _)) => match (side, bs) {
                    (Side::Left, Side::Right) => true,
                    (Side::Right, Side::Left) => false,
                    _ => (set.len(), &set) < (bset.len(), bset),
                },
            };
            if better {
                best = Some((side, set, nbhd));
            }
        }
    }
    best.map(|(side, set, neighborhood)| HallCertificate {
        side,
        set,
        neighborhood,
    })
}

/// Checks the three certificate conditions against the graph directly.
pub fn certificate_holds(g: &BipartiteGraph, cert: &HallCertificate) -> bool {
    let n = g.left_size();
    if n != g.right_size() {
        return false;
    }
    let (own_adj, other_adj) = match cert.side {
        Side::Left => (g.left_adjacency(), g.right_adjacency()),
        Side::Right => (g.right_adjacency(), g.left_adjacency()),
    };
    let a = cert.set.len();
    if a < 2 || a > violator_size_bound(n) {
        return false;
    }
    // (i) the neighborhood is exactly Gamma(A) and has |A| - 1 elements.
    let mut gamma: Vec<u32> = cert
        .set
        .iter()
        .flat_map(|&v| own_adj[v as usize].iter().copied())
        .collect();
    gamma.sort_unstable();
    gamma.dedup();
    if gamma != cert.neighborhood || gamma.len() != a - 1 {
        return false;
    }
    // (ii) the subgraph spanned by A and Gamma(A) is connected.
    let in_set = |list: &[u32], v: u32| list.binary_search(&v).is_ok();
    let total = a + gamma.len();
    let mut seen_set = vec![false; n];
    let mut seen_gamma = vec![false; n];
    let first = cert.set[0] as usize;
    seen_set[first] = true;
    // Stack entries: (vertex, lives_on_certificate_side).
    let mut stack = vec![(cert.set[0], true)];
    let mut reached = 1usize;
    while let Some((v, on_side)) = stack.pop() {
        let adj = if on_side { &own_adj } else { &other_adj };
        for &w in &adj[v as usize] {
            let (valid, seen) = if on_side {
                (in_set(&cert.neighborhood, w), &mut seen_gamma)
            } else {
                (in_set(&cert.set, w), &mut seen_set)
            };
            if valid && !seen[w as usize] {
                seen[w as usize] = true;
                reached += 1;
                stack.push((w, !on_side));
            }
        }
    }
    reached == total
}

/// Upper bound on the probability that a set violating Hall's condition in
/// the structured form above exists in G(n, n, p): the clamped sum
/// `2 sum_{a=2..floor((n+1)/2)} n^(2a-1) (1-p)^(an) (1-p)^(-a^2)`, evaluated
/// in log space because `n^(2a-1)` overflows quickly.
pub fn epsilon_bound(n: usize, p: f64) -> Result<f64> {
    if n < 2 {
        return Err(param_err!("n must be at least 2 (got {n})"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(param_err!("p must be in [0, 1] (got {p})"));
    }
    if p >= 1.0 {
        return Ok(0.0);
    }
    if p <= 0.0 {
        return Ok(1.0);
    }
    let a_max = (n + 1) / 2;
    let ln_n = math::ln(n as f64);
    let ln_q = math::ln(1.0 - p);
    let mut terms = Vec::with_capacity(a_max.saturating_sub(1));
    for a in 2..=a_max {
        let a = a as f64;
        let n_f = n as f64;
        terms.push((2.0 * a - 1.0) * ln_n + (a * n_f - a * a) * ln_q);
    }
    if terms.is_empty() {
        return Ok(0.0);
    }
    let ln_sum = math::ln(2.0) + math::log_sum_exp(&terms);
    if ln_sum >= 0.0 {
        Ok(1.0)
    } else {
        Ok(math::exp(ln_sum))
    }
}

/// Upper bound on the probability that G(n, n, p) has no complete matching:
/// `min(1, 2n(1-p)^n + epsilon_bound(n, p))`. The first term covers isolated
/// vertices, the second covers structured Hall violators. Returns 1.0 where
/// the bound is vacuous.
pub fn gamma_bound(n: usize, p: f64) -> Result<f64> {
    if n < 2 {
        return Err(param_err!("n must be at least 2 (got {n})"));
    }
    if !(0.0 < p && p <= 1.0) {
        return Err(param_err!("p must be in (0, 1] (got {p})"));
    }
    if p >= 1.0 {
        return Ok(0.0);
    }
    let isolated = math::exp(math::ln(2.0 * n as f64) + n as f64 * math::ln(1.0 - p));
    Ok((isolated + epsilon_bound(n, p)?).min(1.0))
}

/// Floor of `c * n`, the side length of the residual pull subproblem.
pub fn beta_sequence(n: usize, c: f64) -> Result<usize> {
    if !(0.0 < c && c < 1.0) {
        return Err(param_err!("c must be in (0, 1) (got {c})"));
    }
    Ok(math::floor(c * n as f64) as usize)
}

/// Monte Carlo estimate of the no-complete-matching probability for
/// G(n, n, p), with a Wilson 95% interval and the analytic bound attached.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchingFrequency {
    pub n: usize,
    pub p: f64,
    pub trials: u64,
    pub failures: u64,
    pub frequency: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
    pub gamma_bound: f64,
}

/// Samples `trials` independent G(n, n, p) graphs (per-trial derived seeds)
/// and counts those with no complete matching.
pub fn matching_failure_frequency(
    n: usize,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<MatchingFrequency> {
    if trials < 1 {
        return Err(param_err!("trials must be at least 1"));
    }
    let mut failures = 0u64;
    for t in 0..trials {
        let g = gen_bipartite(n, n, p, derive_seed(seed, "match-trial", &[t]))?;
        if !max_matching(&g).complete {
            failures += 1;
        }
    }
    let frequency = failures as f64 / trials as f64;
    let (wilson_low, wilson_high) = math::wilson_interval(failures, trials);
    Ok(MatchingFrequency {
        n,
        p,
        trials,
        failures,
        frequency,
        wilson_low,
        wilson_high,
        gamma_bound: if p > 0.0 { gamma_bound(n, p)? } else { 1.0 },
    })
}

/// Validity check used by tests and audits: pairs are vertex-disjoint on both
/// sides and every pair is an edge of `g`.
pub fn matching_is_valid(g: &BipartiteGraph, m: &Matching) -> bool {
    let mut seen_l = vec![false; g.left_size()];
    let mut seen_r = vec![false; g.right_size()];
    for &(l, r) in &m.pairs {
        if l as usize >= g.left_size() || r as usize >= g.right_size() {
            return false;
        }
        if seen_l[l as usize] || seen_r[r as usize] {
            return false;
        }
        seen_l[l as usize] = true;
        seen_r[r as usize] = true;
        if g.edges().binary_search(&(l, r)).is_err() {
            return false;
        }
    }
    true
}
