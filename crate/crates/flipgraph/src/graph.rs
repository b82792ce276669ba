//! The coloured flip graph: one node per coloured triangulation, one edge
//! per coloured flip. Builds the full graph for a polygon, decomposes it
//! into connected components, and computes the component statistics
//! (census, leaves, girth, shape, bipartiteness) together with the
//! hypercube-subgraph machinery.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::colour::{count_coloured, ColourScheme, ColouredTriangulation};
use crate::error::{Error, Result};
use crate::polygon::{enumerate_triangulations, Diagonal, Triangulation};

/// Stable node identifier inside the flip graph of one `(n, m)` pair.
pub type NodeId = u64;

/// Budget and worker configuration for graph construction.
#[derive(Clone, Copy, Debug)]
pub struct BuildConfig {
    /// Hard cap on the number of graph nodes; exceeding it is a clean error.
    pub node_budget: u64,
    /// Worker threads for the adjacency sweep. Results are byte-identical
    /// for any worker count.
    pub workers: usize,
}

impl Default for BuildConfig {
    fn default() -> Self {
        Self {
            node_budget: 10_000_000,
            workers: 1,
        }
    }
}

/// Dense indexing of every coloured triangulation of an `n`-gon with `m`
/// colours: triangulations sorted by their canonical key, colour words in
/// lexicographic order within a triangulation. Node ids produced here are
/// shared by [`FlipGraph`] and [`component_of`].
pub struct NodeIndex {
    n: usize,
    m: usize,
    tris: Vec<Triangulation>,
    rank: HashMap<Vec<Diagonal>, usize>,
    words: u64,
}

impl NodeIndex {
    pub fn new(n_vertices: usize, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoColours);
        }
        let mut tris = enumerate_triangulations(n_vertices)?;
        tris.sort();
        let faces = n_vertices - 2;
        let mut words: u64 = 1;
        for _ in 0..faces {
            words = words
                .checked_mul(m as u64)
                .ok_or(Error::StateSpaceTooLarge { n: n_vertices, m })?;
        }
        (tris.len() as u64)
            .checked_mul(words)
            .ok_or(Error::StateSpaceTooLarge { n: n_vertices, m })?;
        let rank = tris
            .iter()
            .enumerate()
            .map(|(i, t)| (t.diagonals().to_vec(), i))
            .collect();
        Ok(Self {
            n: n_vertices,
            m,
            tris,
            rank,
            words,
        })
    }

    pub fn total_nodes(&self) -> u64 {
        self.tris.len() as u64 * self.words
    }

    pub fn triangulations(&self) -> &[Triangulation] {
        &self.tris
    }

    fn word_of(&self, colours: &[usize]) -> u64 {
        colours
            .iter()
            .fold(0u64, |w, &c| w * self.m as u64 + c as u64)
    }

    pub fn id_of(&self, ct: &ColouredTriangulation) -> Result<NodeId> {
        if ct.n_vertices() != self.n {
            return Err(Error::PolygonMismatch(self.n, ct.n_vertices()));
        }
        if ct.m() != self.m {
            return Err(Error::ColourCountMismatch(self.m, ct.m()));
        }
        let rank = self.rank[&ct.triangulation().diagonals().to_vec()];
        Ok(rank as u64 * self.words + self.word_of(ct.colours()))
    }

    pub fn node(&self, id: NodeId) -> ColouredTriangulation {
        assert!(id < self.total_nodes(), "node id out of range");
        let t = &self.tris[(id / self.words) as usize];
        let mut word = id % self.words;
        let faces = self.n - 2;
        let mut colours = vec![0usize; faces];
        for slot in colours.iter_mut().rev() {
            *slot = (word % self.m as u64) as usize;
            word /= self.m as u64;
        }
        ColouredTriangulation::new(t.clone(), self.m, colours).expect("decoded node")
    }

    pub fn key(&self, id: NodeId) -> String {
        self.node(id).canonical_key()
    }
}

/// One uncoloured flip, tabulated: flipping diagonal `j` of triangulation
/// `rank` lands on `target`, removes the two faces `removed`, and every
/// surviving face of the target pulls its colour from `source[face]`
/// (`usize::MAX` marks the two created faces).
struct FlipArc {
    target: usize,
    removed: (usize, usize),
    source: Vec<usize>,
}

const CREATED: usize = usize::MAX;

/// The sigma-flip graph of a polygon. Adjacency is symmetric: for a
/// non-involutive sigma an edge is present when a flip links its endpoints
/// in either direction.
pub struct FlipGraph {
    scheme: ColourScheme,
    index: NodeIndex,
    adjacency: Vec<Vec<NodeId>>,
    components: Vec<Component>,
    component_of_node: Vec<u32>,
}

impl FlipGraph {
    pub fn build(n_vertices: usize, scheme: &ColourScheme, config: &BuildConfig) -> Result<Self> {
        let m = scheme.m();
        let count = count_coloured(n_vertices, m)?;
        if count > BigUint::from(config.node_budget) {
            let needed = u128::try_from(&count).unwrap_or(u128::MAX);
            return Err(Error::BudgetExceeded {
                needed,
                budget: config.node_budget,
            });
        }
        let index = NodeIndex::new(n_vertices, m)?;
        let arcs = flip_arcs(&index)?;
        let total = index.total_nodes() as usize;

        // out-arcs per node, swept in parallel over contiguous id chunks;
        // chunk results are concatenated in order, so the adjacency below is
        // independent of the worker count
        let workers = config.workers.max(1).min(total.max(1));
        let chunk = total.div_ceil(workers.max(1)).max(1);
        let mut out_arcs: Vec<Vec<(NodeId, NodeId)>> = Vec::new();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..workers {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(total);
                if lo >= hi {
                    break;
                }
                let index = &index;
                let arcs = &arcs;
                handles.push(scope.spawn(move || sweep_out_arcs(index, scheme, arcs, lo, hi)));
            }
            for h in handles {
                out_arcs.push(h.join().expect("worker panicked"));
            }
        });

        let mut adjacency: Vec<Vec<NodeId>> = vec![Vec::new(); total];
        for pairs in out_arcs {
            for (u, v) in pairs {
                adjacency[u as usize].push(v);
                adjacency[v as usize].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }

        let (components, component_of_node) = split_components(&adjacency, &index, scheme.m() == 2);
        Ok(Self {
            scheme: scheme.clone(),
            index,
            adjacency,
            components,
            component_of_node,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.index.n
    }

    pub fn scheme(&self) -> &ColourScheme {
        &self.scheme
    }

    pub fn node_count(&self) -> u64 {
        self.index.total_nodes()
    }

    pub fn edge_count(&self) -> u64 {
        self.adjacency.iter().map(|l| l.len() as u64).sum::<u64>() / 2
    }

    pub fn neighbours(&self, id: NodeId) -> &[NodeId] {
        &self.adjacency[id as usize]
    }

    pub fn degree(&self, id: NodeId) -> usize {
        self.adjacency[id as usize].len()
    }

    pub fn node(&self, id: NodeId) -> ColouredTriangulation {
        self.index.node(id)
    }

    pub fn node_key(&self, id: NodeId) -> String {
        self.index.key(id)
    }

    pub fn id_of(&self, ct: &ColouredTriangulation) -> Result<NodeId> {
        self.index.id_of(ct)
    }

    /// Connected components, ordered by smallest member id.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_containing(&self, ct: &ColouredTriangulation) -> Result<&Component> {
        let id = self.index.id_of(ct)?;
        Ok(&self.components[self.component_of_node[id as usize] as usize])
    }

    /// Histogram of component sizes.
    pub fn census(&self) -> BTreeMap<u64, u64> {
        let mut hist = BTreeMap::new();
        for c in &self.components {
            *hist.entry(c.size).or_insert(0) += 1;
        }
        hist
    }

    /// Smallest component of size above one. Checks the lower bound
    /// `n_vertices - 2` on its way out; a smaller component would contradict
    /// the eventual-flippability argument and is reported as an error.
    pub fn min_nontrivial_size(&self) -> Result<Option<u64>> {
        let min = self
            .components
            .iter()
            .map(|c| c.size)
            .filter(|&s| s > 1)
            .min();
        if let Some(s) = min {
            let bound = self.index.n as u64 - 2;
            if self.scheme.m() == 2 && self.scheme.is_cyclic() && s < bound {
                return Err(Error::InvariantViolated(format!(
                    "component of size {s} below the bound {bound}"
                )));
            }
        }
        Ok(min)
    }

    /// Checks a component bipartite via the explicit witness: the parity of
    /// half the colour-0 face count. Each flip moves the colour-0 count by
    /// exactly 2, so the witness alternates along every edge; the returned
    /// flag confirms it against the actual adjacency.
    pub fn bipartite_witness(&self, comp: &Component) -> Result<(bool, Vec<bool>)> {
        if self.scheme.m() != 2 {
            return Err(Error::TwoColoursRequired(self.scheme.m()));
        }
        let side = |id: &NodeId| (self.index.node(*id).colour_count(0) / 2) % 2 == 1;
        let parity: Vec<bool> = comp.ids.iter().map(side).collect();
        let pos: HashMap<NodeId, usize> = comp
            .ids
            .iter()
            .enumerate()
            .map(|(i, &id)| (id, i))
            .collect();
        let ok = comp.ids.iter().enumerate().all(|(i, &id)| {
            self.adjacency[id as usize]
                .iter()
                .all(|v| parity[pos[v]] != parity[i])
        });
        Ok((ok, parity))
    }

    /// Colour conflicts inside one component: vertex triples that occur as a
    /// face of some member with two different colours. Expected empty; any
    /// hit is reported, not asserted away.
    pub fn conjecture_violations(&self, comp: &Component) -> Result<Vec<ConjectureViolation>> {
        if self.scheme.m() != 2 {
            return Err(Error::TwoColoursRequired(self.scheme.m()));
        }
        let mut seen: BTreeMap<[usize; 3], BTreeSet<usize>> = BTreeMap::new();
        for &id in &comp.ids {
            let ct = self.index.node(id);
            for (face, &c) in ct.triangulation().faces().iter().zip(ct.colours()) {
                seen.entry(*face).or_default().insert(c);
            }
        }
        Ok(seen
            .into_iter()
            .filter(|(_, colours)| colours.len() > 1)
            .map(|(face, colours)| ConjectureViolation {
                face,
                colours: colours.into_iter().collect(),
            })
            .collect())
    }
}

fn flip_arcs(index: &NodeIndex) -> Result<Vec<Vec<FlipArc>>> {
    index
        .tris
        .iter()
        .map(|t| {
            t.diagonals()
                .iter()
                .map(|&d| {
                    let removed = t.faces_of(d)?;
                    let (t2, _) = t.flip(d)?;
                    let target = index.rank[&t2.diagonals().to_vec()];
                    let source = t2
                        .faces()
                        .iter()
                        .map(|f| t.face_index(f).unwrap_or(CREATED))
                        .collect();
                    Ok(FlipArc {
                        target,
                        removed,
                        source,
                    })
                })
                .collect()
        })
        .collect()
}

fn sweep_out_arcs(
    index: &NodeIndex,
    scheme: &ColourScheme,
    arcs: &[Vec<FlipArc>],
    lo: usize,
    hi: usize,
) -> Vec<(NodeId, NodeId)> {
    let m = index.m as u64;
    let faces = index.n - 2;
    let mut colours = vec![0usize; faces];
    let mut out = Vec::new();
    for id in lo as u64..hi as u64 {
        let rank = (id / index.words) as usize;
        let mut word = id % index.words;
        for slot in colours.iter_mut().rev() {
            *slot = (word % m) as usize;
            word /= m;
        }
        for arc in &arcs[rank] {
            let i = colours[arc.removed.0];
            if i != colours[arc.removed.1] {
                continue;
            }
            let recoloured = scheme.apply(i) as u64;
            let mut target_word = 0u64;
            for &src in &arc.source {
                let c = if src == CREATED {
                    recoloured
                } else {
                    colours[src] as u64
                };
                target_word = target_word * m + c;
            }
            out.push((id, arc.target as u64 * index.words + target_word));
        }
    }
    out
}

/// A connected component of the flip graph with its statistics.
#[derive(Clone, Debug)]
pub struct Component {
    /// Member node ids, sorted.
    pub ids: Vec<NodeId>,
    pub size: u64,
    /// Nodes of degree 1.
    pub leaf_count: u64,
    /// Length of a shortest cycle; `None` when acyclic.
    pub girth: Option<u64>,
    /// Set for two-colour graphs, `None` otherwise.
    pub bipartite: Option<bool>,
    pub shape: ShapeClass,
}

/// Coarse classification of a component's shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeClass {
    Isolated,
    Path,
    Tree,
    FourCycleWithLeaves,
    Other,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ShapeClass::Isolated => "isolated",
            ShapeClass::Path => "path",
            ShapeClass::Tree => "tree",
            ShapeClass::FourCycleWithLeaves => "four_cycle_with_leaves",
            ShapeClass::Other => "other",
        };
        f.write_str(s)
    }
}

/// A colour conflict found by the conjecture check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureViolation {
    pub face: [usize; 3],
    pub colours: Vec<usize>,
}

fn split_components(
    adjacency: &[Vec<NodeId>],
    index: &NodeIndex,
    two_colours: bool,
) -> (Vec<Component>, Vec<u32>) {
    let total = adjacency.len();
    let mut comp_of = vec![u32::MAX; total];
    let mut components = Vec::new();
    for start in 0..total {
        if comp_of[start] != u32::MAX {
            continue;
        }
        let cid = components.len() as u32;
        let mut ids = vec![start as NodeId];
        comp_of[start] = cid;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                if comp_of[v as usize] == u32::MAX {
                    comp_of[v as usize] = cid;
                    ids.push(v);
                    queue.push_back(v as usize);
                }
            }
        }
        ids.sort_unstable();
        let degrees: Vec<usize> = ids.iter().map(|&u| adjacency[u as usize].len()).collect();
        let local: HashMap<NodeId, usize> = ids.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let local_adj: Vec<Vec<usize>> = ids
            .iter()
            .map(|&u| adjacency[u as usize].iter().map(|v| local[v]).collect())
            .collect();
        let girth = subgraph_girth(&local_adj);
        let bipartite = two_colours.then(|| {
            let side: Vec<bool> = ids
                .iter()
                .map(|&u| (index.node(u).colour_count(0) / 2) % 2 == 1)
                .collect();
            local_adj
                .iter()
                .enumerate()
                .all(|(i, nbrs)| nbrs.iter().all(|&j| side[j] != side[i]))
        });
        components.push(Component {
            size: ids.len() as u64,
            leaf_count: degrees.iter().filter(|&&d| d == 1).count() as u64,
            shape: classify_shape(&degrees, girth),
            girth: girth.map(|g| g as u64),
            bipartite,
            ids,
        });
    }
    (components, comp_of)
}

/// Shortest cycle length via one BFS per start node; exact because for a
/// shortest cycle the BFS from any of its nodes closes it at full length.
fn subgraph_girth(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let edge_count: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edge_count < n {
        return None; // a connected graph with fewer edges than nodes is a tree
    }
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

fn classify_shape(degrees: &[usize], girth: Option<usize>) -> ShapeClass {
    let size = degrees.len();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    if size == 1 {
        return ShapeClass::Isolated;
    }
    if edges == size - 1 {
        return if degrees.iter().all(|&d| d <= 2) {
            ShapeClass::Path
        } else {
            ShapeClass::Tree
        };
    }
    if edges == size && girth == Some(4) {
        return ShapeClass::FourCycleWithLeaves;
    }
    ShapeClass::Other
}

/// Undirected flip-graph neighbours of one coloured triangulation: for each
/// flippable diagonal, the forward flip, plus the backward flip when sigma
/// is not an involution on that colour.
pub fn neighbours(
    ct: &ColouredTriangulation,
    scheme: &ColourScheme,
) -> Result<Vec<ColouredTriangulation>> {
    let mut out = Vec::new();
    for d in ct.flippable_diagonals() {
        let i = ct.shared_colour(d)?;
        let fwd = scheme.apply(i);
        let back = scheme.apply_inverse(i);
        out.push(ct.flip_recoloured(d, i, fwd, scheme.m())?);
        if back != fwd {
            out.push(ct.flip_recoloured(d, i, back, scheme.m())?);
        }
    }
    Ok(out)
}

/// A component delivered by [`component_of`]: the statistics plus the
/// members themselves, sorted by node id, and the induced edges as sorted
/// `(low, high)` pairs.
pub struct ComponentView {
    pub component: Component,
    pub members: Vec<ColouredTriangulation>,
    pub edges: Vec<(NodeId, NodeId)>,
}

/// The connected component containing `ct`, found by a direct breadth-first
/// search that never materialises the rest of the graph. Member ids match
/// [`FlipGraph::build`] for the same `(n, m)`.
pub fn component_of(
    ct: &ColouredTriangulation,
    scheme: &ColourScheme,
    node_budget: u64,
) -> Result<ComponentView> {
    if scheme.m() != ct.m() {
        return Err(Error::ColourCountMismatch(ct.m(), scheme.m()));
    }
    let index = NodeIndex::new(ct.n_vertices(), ct.m())?;
    let start = index.id_of(ct)?;
    let mut members: BTreeMap<NodeId, ColouredTriangulation> = BTreeMap::new();
    members.insert(start, ct.clone());
    let mut queue = VecDeque::from([start]);
    let mut adj: BTreeMap<NodeId, BTreeSet<NodeId>> = BTreeMap::new();
    while let Some(u) = queue.pop_front() {
        let cur = members[&u].clone();
        for next in neighbours(&cur, scheme)? {
            let v = index.id_of(&next)?;
            adj.entry(u).or_default().insert(v);
            adj.entry(v).or_default().insert(u);
            if !members.contains_key(&v) {
                if members.len() as u64 >= node_budget {
                    return Err(Error::BudgetExceeded {
                        needed: members.len() as u128 + 1,
                        budget: node_budget,
                    });
                }
                members.insert(v, next);
                queue.push_back(v);
            }
        }
    }

    let ids: Vec<NodeId> = members.keys().copied().collect();
    let local: HashMap<NodeId, usize> = ids.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let local_adj: Vec<Vec<usize>> = ids
        .iter()
        .map(|u| {
            adj.get(u)
                .map(|s| s.iter().map(|v| local[v]).collect())
                .unwrap_or_default()
        })
        .collect();
    let degrees: Vec<usize> = local_adj.iter().map(Vec::len).collect();
    let girth = subgraph_girth(&local_adj);
    let bipartite = (ct.m() == 2).then(|| {
        let side: Vec<bool> = ids
            .iter()
            .map(|u| (members[u].colour_count(0) / 2) % 2 == 1)
            .collect();
        local_adj
            .iter()
            .enumerate()
            .all(|(i, nbrs)| nbrs.iter().all(|&j| side[j] != side[i]))
    });
    let mut edges: Vec<(NodeId, NodeId)> = adj
        .iter()
        .flat_map(|(&u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    edges.sort_unstable();
    let component = Component {
        size: ids.len() as u64,
        leaf_count: degrees.iter().filter(|&&d| d == 1).count() as u64,
        shape: classify_shape(&degrees, girth),
        girth: girth.map(|g| g as u64),
        bipartite,
        ids,
    };
    Ok(ComponentView {
        members: members.into_values().collect(),
        component,
        edges,
    })
}

/// Diagonals of `ct` that become flippable somewhere in its component while
/// still present: for the two-colour cyclic scheme this is every diagonal on
/// a non-frozen node and none on a frozen one.
pub fn eventually_flippable(
    ct: &ColouredTriangulation,
    scheme: &ColourScheme,
    node_budget: u64,
) -> Result<BTreeSet<Diagonal>> {
    if scheme.m() != 2 {
        return Err(Error::TwoColoursRequired(scheme.m()));
    }
    let view = component_of(ct, scheme, node_budget)?;
    let mut out = BTreeSet::new();
    for member in &view.members {
        for d in member.flippable_diagonals() {
            if ct.triangulation().has_diagonal(d) {
                out.insert(d);
            }
        }
    }
    Ok(out)
}

/// Face-index pairs of the quadrilateral of each flippable diagonal.
fn flippable_quads(ct: &ColouredTriangulation) -> Vec<(Diagonal, (usize, usize))> {
    ct.flippable_diagonals()
        .into_iter()
        .map(|d| {
            (
                d,
                ct.triangulation().faces_of(d).expect("flippable diagonal"),
            )
        })
        .collect()
}

fn quads_disjoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// A maximum-size set of flippable diagonals whose quadrilaterals are
/// pairwise face-disjoint, by exhaustive search; ties resolve to the
/// lexicographically smallest set.
pub fn max_independent_flippable_set(ct: &ColouredTriangulation) -> Vec<Diagonal> {
    let cands = flippable_quads(ct);
    let mut best: Vec<usize> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        cands: &[(Diagonal, (usize, usize))],
        from: usize,
        cur: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        for i in from..cands.len() {
            if cur.iter().all(|&j| quads_disjoint(cands[j].1, cands[i].1)) {
                cur.push(i);
                rec(cands, i + 1, cur, best);
                cur.pop();
            }
        }
    }
    rec(&cands, 0, &mut cur, &mut best);
    best.into_iter().map(|i| cands[i].0).collect()
}

/// A verified hypercube subgraph: the `2^k` states reached by flipping the
/// subsets of `k` independent diagonals, plus the edges between states at
/// Hamming distance one. `states[mask]` is the state after flipping exactly
/// the diagonals whose bits are set in `mask`.
pub struct HypercubeWitness {
    pub dimension: usize,
    pub flips: Vec<Diagonal>,
    pub states: Vec<ColouredTriangulation>,
    pub edges: Vec<(usize, usize)>,
}

impl HypercubeWitness {
    pub fn node_keys(&self) -> Vec<String> {
        self.states.iter().map(|s| s.canonical_key()).collect()
    }

    pub fn node_key_set(&self) -> BTreeSet<String> {
        self.node_keys().into_iter().collect()
    }
}

/// Flips every subset of `independent_set` and checks that the results form
/// a `k`-dimensional hypercube inside the flip graph: `2^k` distinct states
/// and an edge wherever two subsets differ in one diagonal. A failure of
/// either check is an error; with genuinely disjoint quadrilaterals it
/// cannot happen.
pub fn verify_hypercube(
    ct: &ColouredTriangulation,
    independent_set: &[Diagonal],
    scheme: &ColourScheme,
) -> Result<HypercubeWitness> {
    let k = independent_set.len();
    let quads: Vec<(usize, usize)> = independent_set
        .iter()
        .map(|&d| {
            ct.shared_colour(d)?;
            ct.triangulation().faces_of(d)
        })
        .collect::<Result<_>>()?;
    for i in 0..k {
        for j in i + 1..k {
            if !quads_disjoint(quads[i], quads[j]) {
                return Err(Error::NotIndependent(
                    independent_set[i],
                    independent_set[j],
                ));
            }
        }
    }

    let mut states: Vec<ColouredTriangulation> = Vec::with_capacity(1 << k);
    states.push(ct.clone());
    for mask in 1usize..1 << k {
        let low = mask.trailing_zeros() as usize;
        let prev = &states[mask & !(1 << low)];
        let next = prev
            .coloured_flip(independent_set[low], scheme)
            .map_err(|e| Error::CommutationFailure(format!("flipping subset {mask:#b}: {e}")))?;
        states.push(next);
    }

    let distinct: BTreeSet<_> = states.iter().collect();
    if distinct.len() != states.len() {
        return Err(Error::CommutationFailure("hypercube states collide".into()));
    }

    let mut edges = Vec::with_capacity(k << k.saturating_sub(1));
    for mask in 0usize..1 << k {
        for bit in 0..k {
            if mask & (1 << bit) != 0 {
                continue;
            }
            let other = mask | (1 << bit);
            let stepped = states[mask]
                .coloured_flip(independent_set[bit], scheme)
                .map_err(|e| {
                    Error::CommutationFailure(format!("edge {mask:#b}->{other:#b}: {e}"))
                })?;
            if stepped != states[other] {
                return Err(Error::CommutationFailure(format!(
                    "flips do not commute between {mask:#b} and {other:#b}"
                )));
            }
            edges.push((mask, other));
        }
    }

    Ok(HypercubeWitness {
        dimension: k,
        flips: independent_set.to_vec(),
        states,
        edges,
    })
}

/// The two hypercubes the monochromatic fan component always carries. For a
/// fan with `f` faces the sweep pairs adjacent faces starting either at the
/// first face or at the second: `f` even gives dimensions `f/2` and
/// `f/2 - 1`, `f` odd gives two distinct witnesses of dimension
/// `(f - 1) / 2`.
pub struct FanHypercubes {
    pub dims: (usize, usize),
    pub witnesses: (HypercubeWitness, HypercubeWitness),
    /// Node keys common to both witnesses, kept for inspection.
    pub shared_nodes: Vec<String>,
    /// True when the two witnesses differ as node sets.
    pub distinct: bool,
}

pub fn fan_hypercubes(n_vertices: usize) -> Result<FanHypercubes> {
    if n_vertices < 5 {
        return Err(Error::PolygonTooSmall(n_vertices));
    }
    let t = Triangulation::fan(crate::polygon::Polygon::new(n_vertices)?, 0)?;
    let ct = ColouredTriangulation::monochromatic(t, 2, 0)?;
    let scheme = ColourScheme::cyclic(2)?;
    let f = n_vertices - 2;
    let diag = |k: usize| Diagonal::new(0, k, n_vertices).expect("fan diagonal");
    // quadrilateral of (0, k) covers faces k-2 and k-1
    let (first, second): (Vec<Diagonal>, Vec<Diagonal>) = if f % 2 == 0 {
        (
            (2..=f).step_by(2).map(diag).collect(),
            (3..f).step_by(2).map(diag).collect(),
        )
    } else {
        (
            (2..f).step_by(2).map(diag).collect(),
            (3..=f).step_by(2).map(diag).collect(),
        )
    };
    let w1 = verify_hypercube(&ct, &first, &scheme)?;
    let w2 = verify_hypercube(&ct, &second, &scheme)?;
    let keys1 = w1.node_key_set();
    let keys2 = w2.node_key_set();
    let shared_nodes = keys1.intersection(&keys2).cloned().collect();
    let distinct = keys1 != keys2;
    Ok(FanHypercubes {
        dims: (w1.dimension, w2.dimension),
        witnesses: (w1, w2),
        shared_nodes,
        distinct,
    })
}
