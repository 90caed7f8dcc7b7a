//! Exact small-instance ground truth: network strength by partition
//! enumeration, closed-form upper bounds, spanning/Steiner tree enumeration,
//! and fractional tree packing by LP. These are the references the
//! dissemination algorithms are validated against.

mod simplex;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{input_err, param_err, Error, Result};
use crate::graph_models::{format_session, CapGraph};
use crate::math;
use simplex::{maximize_unit_sum, PackingLp};

/// Partition enumeration is Bell-number sized; 12 vertices is the cap
/// (Bell(12) = 4,213,597).
pub const MAX_STRENGTH_VERTICES: usize = 12;
/// Tree enumeration cap: 7 labeled vertices give at most 7^5 = 16807
/// spanning trees.
pub const MAX_TREE_VERTICES: usize = 7;

/// A set partition of the vertex set `0..n`, blocks ordered by their minimum
/// element, each block ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<u32>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(input_err!("partition blocks must be nonempty"));
            }
            for &v in block {
                if v as usize >= n || seen[v as usize] {
                    return Err(input_err!("partition must cover 0..{n} exactly once"));
                }
                seen[v as usize] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(input_err!("partition must cover 0..{n} exactly once"));
        }
        let mut blocks: Vec<Vec<u32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { n, blocks })
    }

    fn from_assignment(assignment: &[u32], num_blocks: usize) -> Self {
        let mut blocks = vec![Vec::new(); num_blocks];
        for (v, &b) in assignment.iter().enumerate() {
            blocks[b as usize].push(v as u32);
        }
        Partition {
            n: assignment.len(),
            blocks,
        }
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Edges of `g` whose endpoints lie in different blocks.
    pub fn boundary_edges(&self, g: &CapGraph) -> Vec<(u32, u32)> {
        let assignment = self.assignment();
        g.edges()
            .iter()
            .filter(|&&(i, j, _)| assignment[i as usize] != assignment[j as usize])
            .map(|&(i, j, _)| (i, j))
            .collect()
    }

    /// Total capacity crossing between blocks.
    pub fn cross_capacity(&self, g: &CapGraph) -> f64 {
        let assignment = self.assignment();
        g.edges()
            .iter()
            .filter(|&&(i, j, _)| assignment[i as usize] != assignment[j as usize])
            .map(|&(_, _, c)| c)
            .sum()
    }

    fn assignment(&self) -> Vec<u32> {
        let mut a = vec![0u32; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                a[v as usize] = b as u32;
            }
        }
        a
    }
}

/// Visits every set partition of `0..n` as a restricted growth string
/// (canonical block ids in first-appearance order), in lexicographic order.
fn for_each_partition<F: FnMut(&[u32], usize)>(n: usize, mut visit: F) {
    let mut a = vec![0u32; n]; // assignment
    let mut m = vec![0u32; n]; // m[i] = max(a[0..=i])
    loop {
        let blocks = (m[n - 1] + 1) as usize;
        visit(&a, blocks);
        // Advance: find the rightmost position that can still grow.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            if a[i] <= m[i - 1] {
                break;
            }
            i -= 1;
        }
        a[i] += 1;
        m[i] = m[i - 1].max(a[i]);
        for j in i + 1..n {
            a[j] = 0;
            m[j] = m[j - 1];
        }
    }
}

fn check_strength_size(g: &CapGraph) -> Result<()> {
    if g.n() < 2 {
        return Err(param_err!("strength needs at least 2 vertices"));
    }
    if g.n() > MAX_STRENGTH_VERTICES {
        return Err(Error::TooLarge(alloc::format!(
            "strength enumeration capped at n = {MAX_STRENGTH_VERTICES} (got {})",
            g.n()
        )));
    }
    Ok(())
}

/// Exact network strength: the minimum over all partitions with at least two
/// blocks of (cross capacity) / (block count - 1), with the first minimizer
/// in enumeration order.
pub fn strength_exact(g: &CapGraph) -> Result<(f64, Partition)> {
    check_strength_size(g)?;
    strength_over_partitions(g, |_| true)
}

/// Strength restricted to partitions where every block contains at least one
/// session vertex.
pub fn strength_multicast_exact(g: &CapGraph, session: &[u32]) -> Result<f64> {
    check_strength_size(g)?;
    let session = validate_session(g, session)?;
    let mut in_session = vec![false; g.n()];
    for &v in &session {
        in_session[v as usize] = true;
    }
    let (value, _) = strength_over_partitions(g, |assignment| {
        let blocks = assignment.iter().copied().max().unwrap_or(0) as usize + 1;
        let mut hit = vec![false; blocks];
        for (v, &b) in assignment.iter().enumerate() {
            if in_session[v] {
                hit[b as usize] = true;
            }
        }
        hit.into_iter().all(|h| h)
    })?;
    Ok(value)
}

fn strength_over_partitions<F: Fn(&[u32]) -> bool>(
    g: &CapGraph,
    admissible: F,
) -> Result<(f64, Partition)> {
    let n = g.n();
    let edges = g.edges();
    let mut best = f64::INFINITY;
    let mut best_assignment: Option<(Vec<u32>, usize)> = None;
    for_each_partition(n, |assignment, blocks| {
        if blocks < 2 || !admissible(assignment) {
            return;
        }
        let mut cross = 0.0;
        for &(i, j, c) in edges {
            if assignment[i as usize] != assignment[j as usize] {
                cross += c;
            }
        }
        let value = cross / (blocks - 1) as f64;
        if value < best {
            best = value;
            best_assignment = Some((assignment.to_vec(), blocks));
        }
    });
    let (assignment, blocks) =
        best_assignment.ok_or_else(|| input_err!("no admissible partition with >= 2 blocks"))?;
    Ok((best, Partition::from_assignment(&assignment, blocks)))
}

fn validate_session(g: &CapGraph, session: &[u32]) -> Result<Vec<u32>> {
    let mut s: Vec<u32> = session.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() < 2 {
        return Err(param_err!("session needs at least 2 distinct vertices"));
    }
    if s.iter().any(|&v| v as usize >= g.n()) {
        return Err(input_err!(
            "session [{}] not contained in vertices 0..{}",
            format_session(&s),
            g.n()
        ));
    }
    Ok(s)
}

/// Closed-form upper bound on allcast strength: total capacity over (n - 1),
/// from the all-singletons partition.
pub fn upper_bound_allcast(g: &CapGraph) -> Result<f64> {
    if g.n() < 2 {
        return Err(param_err!("upper bound needs at least 2 vertices"));
    }
    Ok(g.total_capacity() / (g.n() - 1) as f64)
}

/// Closed-form upper bound on multicast strength for the session `0..k`:
/// the partition that isolates each of the first k - 1 session vertices and
/// pools everything else. Its boundary is exactly the edges whose lower
/// endpoint is below k - 1, and on a unit complete graph it has
/// (k - 1)(n - k/2) edges.
pub fn upper_bound_multicast(g: &CapGraph, k: usize) -> Result<f64> {
    let n = g.n();
    if !(2 <= k && k <= n) {
        return Err(param_err!("k must satisfy 2 <= k <= n (got k={k}, n={n})"));
    }
    let cross: f64 = g
        .edges()
        .iter()
        .filter(|&&(i, _, _)| (i as usize) < k - 1)
        .map(|&(_, _, c)| c)
        .sum();
    Ok(cross / (k - 1) as f64)
}

/// Integer tree-packing count implied by dense random graphs: the floor of
/// the allcast upper bound (Catlin's formula).
pub fn catlin_bound(g: &CapGraph) -> Result<u64> {
    Ok(math::floor(upper_bound_allcast(g)?) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeKind {
    Spanning,
    Steiner(Vec<u32>),
}

/// An enumerated family of trees, each an edge set sorted lexicographically;
/// the family itself is in enumeration order (lexicographic by support edge
/// indices), which makes packing results deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSet {
    pub kind: TreeKind,
    pub trees: Vec<Vec<(u32, u32)>>,
}

struct DisjointSet {
    parent: Vec<u32>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    /// False when both endpoints were already connected.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra as usize] = rb;
            true
        }
    }
}

/// Enumerates spanning trees of the positive-capacity support (session =
/// `None`) or all pruned Steiner trees containing the session (every leaf a
/// session vertex). A support disconnected with respect to the requirement
/// yields an empty family, not an error.
pub fn enumerate_trees(g: &CapGraph, session: Option<&[u32]>) -> Result<TreeSet> {
    if g.n() > MAX_TREE_VERTICES {
        return Err(Error::TooLarge(alloc::format!(
            "tree enumeration capped at n = {MAX_TREE_VERTICES} (got {})",
            g.n()
        )));
    }
    let support: Vec<(u32, u32)> = g.edges().iter().map(|&(i, j, _)| (i, j)).collect();
    match session {
        None => {
            let n = g.n();
            if n < 2 {
                return Err(param_err!("spanning trees need at least 2 vertices"));
            }
            let mut trees = Vec::new();
            for_each_combination(support.len(), n - 1, |combo| {
                let mut ds = DisjointSet::new(n);
                for &e in combo {
                    let (i, j) = support[e];
                    if !ds.union(i, j) {
                        return;
                    }
                }
                // Acyclic with n - 1 edges on n vertices is a spanning tree.
                trees.push(combo.iter().map(|&e| support[e]).collect());
            });
            Ok(TreeSet {
                kind: TreeKind::Spanning,
                trees,
            })
        }
        Some(session) => {
            let session = validate_session(g, session)?;
            let n = g.n();
            let mut in_session = vec![false; n];
            for &v in &session {
                in_session[v as usize] = true;
            }
            let mut trees = Vec::new();
            for size in session.len() - 1..n {
                for_each_combination(support.len(), size, |combo| {
                    let mut ds = DisjointSet::new(n);
                    let mut degree = vec![0u8; n];
                    for &e in combo {
                        let (i, j) = support[e];
                        if !ds.union(i, j) {
                            return;
                        }
                        degree[i as usize] += 1;
                        degree[j as usize] += 1;
                    }
                    // Acyclic; spanned vertices form a tree iff they are all
                    // in one component, which holds exactly when
                    // touched = size + 1.
                    let touched = degree.iter().filter(|&&d| d > 0).count();
                    if touched != size + 1 {
                        return;
                    }
                    let mut ds2 = ds;
                    let root = combo.first().map(|&e| support[e].0);
                    if let Some(root) = root {
                        let root = ds2.find(root);
                        for v in 0..n as u32 {
                            if degree[v as usize] > 0 && ds2.find(v) != root {
                                return;
                            }
                        }
                    }
                    // Session containment and pruned form.
                    if session
                        .iter()
                        .any(|&s| degree[s as usize] == 0)
                    {
                        return;
                    }
                    if (0..n).any(|v| degree[v] == 1 && !in_session[v]) {
                        return;
                    }
                    trees.push(combo.iter().map(|&e| support[e]).collect());
                });
            }
            Ok(TreeSet {
                kind: TreeKind::Steiner(session),
                trees,
            })
        }
    }
}

/// Visits every `size`-subset of `0..total` in lexicographic order.
fn for_each_combination<F: FnMut(&[usize])>(total: usize, size: usize, mut visit: F) {
    if size > total {
        return;
    }
    if size == 0 {
        visit(&[]);
        return;
    }
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        visit(&combo);
        // Advance.
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if combo[i] != i + total - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        combo[i] += 1;
        for j in i + 1..size {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Optimal fractional tree packing.
#[derive(Debug, Clone, PartialEq)]
pub struct PackingResult {
    /// Optimal total weight.
    pub value: f64,
    /// Nonzero tree weights as (tree index, weight), ascending by index.
    pub weights: Vec<(usize, f64)>,
    /// Edges whose capacity constraint binds at the optimum (within 1e-9).
    pub tight_edges: Vec<(u32, u32)>,
}

/// Maximizes total tree weight subject to per-edge capacity, over the given
/// tree family. Feasible at zero and bounded by the capacities, so the solve
/// cannot legitimately fail.
pub fn tree_pack_lp(g: &CapGraph, trees: &TreeSet) -> Result<PackingResult> {
    if trees.trees.is_empty() {
        return Err(param_err!("tree family is empty"));
    }
    // Rows: support edges that appear in at least one tree.
    let support: Vec<(u32, u32)> = g.edges().iter().map(|&(i, j, _)| (i, j)).collect();
    let edge_row = |i: u32, j: u32| support.binary_search(&(i, j));
    let mut used_row = vec![false; support.len()];
    for tree in &trees.trees {
        for &(i, j) in tree {
            match edge_row(i, j) {
                Ok(r) => used_row[r] = true,
                Err(_) => {
                    return Err(input_err!(
                        "tree edge ({i}, {j}) is not in the graph's support"
                    ))
                }
            }
        }
    }
    let row_ids: Vec<usize> = (0..support.len()).filter(|&r| used_row[r]).collect();
    let mut row_of = vec![u32::MAX; support.len()];
    for (new, &old) in row_ids.iter().enumerate() {
        row_of[old] = new as u32;
    }
    let rhs: Vec<f64> = row_ids
        .iter()
        .map(|&r| {
            let (i, j) = support[r];
            g.capacity(i, j)
        })
        .collect();
    let cols: Vec<Vec<u32>> = trees
        .trees
        .iter()
        .map(|tree| {
            tree.iter()
                .map(|&(i, j)| row_of[edge_row(i, j).expect("checked above")])
                .collect()
        })
        .collect();
    let lp = PackingLp {
        num_rows: row_ids.len(),
        rhs: rhs.clone(),
        cols,
    };
    let sol = maximize_unit_sum(&lp)?;

    // Audit feasibility of the returned weights.
    let mut usage = vec![0.0f64; row_ids.len()];
    for (tree, &w) in trees.trees.iter().zip(&sol.x) {
        if w > 0.0 {
            for &(i, j) in tree {
                usage[row_of[edge_row(i, j).expect("checked")] as usize] += w;
            }
        }
    }
    debug_assert!(usage
        .iter()
        .zip(&rhs)
        .all(|(&u, &b)| u <= b + 1e-9));

    let weights: Vec<(usize, f64)> = sol
        .x
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > 0.0)
        .map(|(idx, &w)| (idx, w))
        .collect();
    let tight_edges: Vec<(u32, u32)> = row_ids
        .iter()
        .enumerate()
        .filter(|&(new, _)| usage[new] >= rhs[new] - 1e-9)
        .map(|(_, &old)| support[old])
        .collect();
    Ok(PackingResult {
        value: sol.objective,
        weights,
        tight_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_models::{gen_gnp, CapacityDistribution};
    use crate::rng::{derive_seed, DrawStream};

    fn unit_complete(n: usize) -> CapGraph {
        let mut edges = Vec::new();
        for i in 0..n as u32 {
            for j in i + 1..n as u32 {
                edges.push((i, j, 1.0));
            }
        }
        CapGraph::from_edges(n, edges).unwrap()
    }

    fn unit_path(n: usize) -> CapGraph {
        let edges = (0..n as u32 - 1).map(|i| (i, i + 1, 1.0)).collect();
        CapGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn strength_hand_checkable_values() {
        let (v, argmin) = strength_exact(&unit_complete(3)).unwrap();
        assert!((v - 1.5).abs() < 1e-12);
        assert_eq!(argmin.block_count(), 3);

        let (v, _) = strength_exact(&unit_path(3)).unwrap();
        assert!((v - 1.0).abs() < 1e-12);

        let (v, _) = strength_exact(&unit_complete(4)).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn strength_argmin_is_consistent_with_value() {
        let g = unit_complete(4);
        let (v, argmin) = strength_exact(&g).unwrap();
        let recomputed = argmin.cross_capacity(&g) / (argmin.block_count() - 1) as f64;
        assert!((v - recomputed).abs() < 1e-12);
        assert_eq!(
            argmin.boundary_edges(&g).len(),
            6,
            "all-singleton partition crosses every edge"
        );
    }

    #[test]
    fn strength_size_limits() {
        assert!(matches!(
            strength_exact(&unit_complete(13)),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn multicast_strength_examples() {
        let v = strength_multicast_exact(&unit_path(3), &[0, 2]).unwrap();
        assert!((v - 1.0).abs() < 1e-12);

        let v = strength_multicast_exact(&unit_complete(3), &[0, 1]).unwrap();
        assert!((v - 2.0).abs() < 1e-12);

        // Session = all vertices coincides with the allcast strength.
        for seed in 0..10u64 {
            let g = gen_gnp(5, 0.7, derive_seed(33, "ms", &[seed])).unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            let all: Vec<u32> = (0..5).collect();
            let a = strength_exact(&g).unwrap().0;
            let b = strength_multicast_exact(&g, &all).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn multicast_strength_rejects_bad_session() {
        let g = unit_complete(3);
        assert!(strength_multicast_exact(&g, &[0, 7]).is_err());
        assert!(strength_multicast_exact(&g, &[1]).is_err());
    }

    #[test]
    fn upper_bounds_trivial_values() {
        assert!((upper_bound_allcast(&unit_complete(3)).unwrap() - 1.5).abs() < 1e-12);
        assert!((upper_bound_allcast(&unit_complete(4)).unwrap() - 2.0).abs() < 1e-12);
        // Session {0, 1} on K4: the bound partition isolates vertex 0 only,
        // crossing its three unit edges.
        assert!((upper_bound_multicast(&unit_complete(4), 2).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn multicast_bound_reduces_to_allcast_at_full_session() {
        for n in 3..=6 {
            let g = unit_complete(n);
            let a = upper_bound_allcast(&g).unwrap();
            let b = upper_bound_multicast(&g, n).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn multicast_bound_on_unit_complete_graphs() {
        // Value n - k/2 and boundary size (k - 1)(n - k/2).
        for n in 4..=7usize {
            let g = unit_complete(n);
            for k in 2..=n {
                let v = upper_bound_multicast(&g, k).unwrap();
                let expected = n as f64 - k as f64 / 2.0;
                assert!((v - expected).abs() < 1e-12, "n={n} k={k} v={v}");
                let boundary = g
                    .edges()
                    .iter()
                    .filter(|&&(i, _, _)| (i as usize) < k - 1)
                    .count() as f64;
                assert!((boundary - (k - 1) as f64 * expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn bounds_dominate_exact_strengths() {
        let mut stream = DrawStream::new(77);
        let mut tested = 0;
        while tested < 200 {
            let n = 3 + (stream.unit() * 4.0) as usize; // 3..=6
            let p = 0.4 + stream.unit() * 0.5;
            let seed = (stream.unit() * 1e9) as u64;
            let g = gen_gnp(n, p, seed).unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            let (s, _) = strength_exact(&g).unwrap();
            assert!(upper_bound_allcast(&g).unwrap() >= s - 1e-9);
            let k = 2 + (stream.unit() * (n - 1) as f64) as usize;
            let session: Vec<u32> = (0..k as u32).collect();
            let sm = strength_multicast_exact(&g, &session).unwrap();
            assert!(upper_bound_multicast(&g, k).unwrap() >= sm - 1e-9);
            tested += 1;
        }
    }

    #[test]
    fn catlin_bound_arithmetic() {
        // Total capacity 10 over n = 4 gives floor(10/3) = 3.
        let g = CapGraph::from_edges(
            4,
            vec![(0, 1, 4.0), (0, 2, 3.0), (1, 2, 2.0), (2, 3, 1.0)],
        )
        .unwrap();
        assert_eq!(catlin_bound(&g).unwrap(), 3);
        assert_eq!(catlin_bound(&unit_complete(3)).unwrap(), 1);
    }

    #[test]
    fn catlin_bound_envelope_on_sampled_graph() {
        let g = gen_gnp(7, 0.6, 5).unwrap();
        let (s, _) = strength_exact(&g).unwrap();
        let c = catlin_bound(&g).unwrap() as f64;
        assert!(c + 1.0 >= math::floor(s));
        assert!(c <= math::floor(upper_bound_allcast(&g).unwrap()));
    }

    #[test]
    fn cayley_counts_on_complete_graphs() {
        for n in 3..=6usize {
            let trees = enumerate_trees(&unit_complete(n), None).unwrap();
            let expected = (n as u64).pow(n as u32 - 2);
            assert_eq!(trees.trees.len() as u64, expected, "n = {n}");
        }
    }

    #[test]
    fn steiner_enumeration_small_cases() {
        let trees = enumerate_trees(&unit_complete(3), Some(&[0, 1])).unwrap();
        assert_eq!(trees.trees.len(), 2);
        assert!(trees.trees.contains(&vec![(0, 1)]));
        assert!(trees.trees.contains(&vec![(0, 2), (1, 2)]));

        let trees = enumerate_trees(&unit_path(3), Some(&[0, 2])).unwrap();
        assert_eq!(trees.trees, vec![vec![(0, 1), (1, 2)]]);
    }

    #[test]
    fn steiner_trees_are_pruned_and_span_session() {
        let g = unit_complete(5);
        let session = [0u32, 3];
        let trees = enumerate_trees(&g, Some(&session)).unwrap();
        assert!(!trees.trees.is_empty());
        for tree in &trees.trees {
            let mut degree = [0u8; 5];
            for &(i, j) in tree {
                degree[i as usize] += 1;
                degree[j as usize] += 1;
            }
            assert!(degree[0] > 0 && degree[3] > 0);
            for (v, &d) in degree.iter().enumerate() {
                if d == 1 {
                    assert!(session.contains(&(v as u32)), "non-session leaf {v}");
                }
            }
        }
    }

    #[test]
    fn disconnected_support_yields_empty_family() {
        let g = CapGraph::from_edges(4, vec![(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        assert!(enumerate_trees(&g, None).unwrap().trees.is_empty());
        assert!(enumerate_trees(&g, Some(&[0, 2])).unwrap().trees.is_empty());
    }

    #[test]
    fn tree_enumeration_size_limit() {
        assert!(matches!(
            enumerate_trees(&unit_complete(8), None),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn packing_matches_strength_on_small_unit_graphs() {
        for (g, expected) in [(unit_complete(3), 1.5f64), (unit_complete(4), 2.0)] {
            let trees = enumerate_trees(&g, None).unwrap();
            let packed = tree_pack_lp(&g, &trees).unwrap();
            assert!((packed.value - expected).abs() < 1e-9);
        }
    }

    #[test]
    fn steiner_packing_k3_session_pair() {
        let g = unit_complete(3);
        let trees = enumerate_trees(&g, Some(&[0, 1])).unwrap();
        let packed = tree_pack_lp(&g, &trees).unwrap();
        assert!((packed.value - 2.0).abs() < 1e-9);
        let sm = strength_multicast_exact(&g, &[0, 1]).unwrap();
        assert!((packed.value - sm).abs() < 1e-9);
    }

    #[test]
    fn packing_weights_respect_capacities() {
        let dist = CapacityDistribution::Discrete(
            vec![1.0, 2.0, 3.0],
            vec![0.5, 0.3, 0.2],
        );
        let mut checked = 0;
        let mut seed = 0u64;
        while checked < 25 {
            seed += 1;
            let g = crate::graph_models::gen_complete_capacitated(5, &dist, seed).unwrap();
            let trees = enumerate_trees(&g, None).unwrap();
            if trees.trees.is_empty() {
                continue;
            }
            let packed = tree_pack_lp(&g, &trees).unwrap();
            let mut usage: alloc::collections::BTreeMap<(u32, u32), f64> =
                alloc::collections::BTreeMap::new();
            for &(idx, w) in &packed.weights {
                assert!(w >= -1e-12);
                for &e in &trees.trees[idx] {
                    *usage.entry(e).or_insert(0.0) += w;
                }
            }
            for (&(i, j), &u) in &usage {
                assert!(u <= g.capacity(i, j) + 1e-9);
            }
            let total: f64 = packed.weights.iter().map(|&(_, w)| w).sum();
            assert!((total - packed.value).abs() < 1e-9);
            checked += 1;
        }
    }

    #[test]
    fn packing_equals_strength_on_random_connected_graphs() {
        // The LP route and the partition-enumeration route must agree.
        let mut stream = DrawStream::new(4242);
        let mut tested = 0;
        while tested < 60 {
            let n = 3 + (stream.unit() * 4.0) as usize;
            let seed = (stream.unit() * 1e9) as u64;
            let caps = CapacityDistribution::Discrete(
                vec![1.0, 2.0, 3.0],
                vec![1.0 / 3.0, 1.0 / 3.0, 1.0 - 2.0 / 3.0],
            );
            let g = crate::graph_models::gen_complete_capacitated(n, &caps, seed).unwrap();
            let trees = enumerate_trees(&g, None).unwrap();
            if trees.trees.is_empty() {
                continue;
            }
            let packed = tree_pack_lp(&g, &trees).unwrap();
            let (s, _) = strength_exact(&g).unwrap();
            assert!(
                (packed.value - s).abs() <= 1e-6,
                "n={n} seed={seed}: lp={} strength={s}",
                packed.value
            );
            tested += 1;
        }
    }
}
