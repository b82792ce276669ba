//! Uncoloured triangulations of a convex polygon: representation,
//! enumeration, and plain flips.
//!
//! Vertices are labelled `0..n` counterclockwise. A triangulation of an
//! `n`-gon is stored canonically as its sorted list of `n - 3` pairwise
//! non-crossing diagonals; the `n - 2` triangular faces are derived from the
//! diagonals and never taken on trust. Two values compare equal exactly when
//! they denote the same triangulation.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Polygon vertex label in `0..n`.
pub type Vertex = usize;

/// A convex polygon with `n >= 3` vertices in cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Polygon {
    n: usize,
}

impl Polygon {
    pub fn new(n_vertices: usize) -> Result<Self> {
        if n_vertices < 3 {
            return Err(Error::PolygonTooSmall(n_vertices));
        }
        Ok(Self { n: n_vertices })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Every diagonal of the polygon, in sorted order.
    pub fn all_diagonals(&self) -> Vec<Diagonal> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 2..self.n {
                if let Ok(d) = Diagonal::new(a, b, self.n) {
                    out.push(d);
                }
            }
        }
        out
    }
}

/// A chord between two non-adjacent vertices, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    a: Vertex,
    b: Vertex,
}

impl Diagonal {
    /// Builds the diagonal `{a, b}` of an `n_vertices`-gon. The endpoints may
    /// be given in either order; adjacent or equal endpoints are rejected.
    pub fn new(a: Vertex, b: Vertex, n_vertices: usize) -> Result<Self> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if b >= n_vertices || b - a < 2 || (a == 0 && b == n_vertices - 1) {
            return Err(Error::InvalidDiagonal {
                a,
                b,
                n: n_vertices,
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> Vertex {
        self.a
    }

    pub fn b(&self) -> Vertex {
        self.b
    }

    pub fn pair(&self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }

    /// Cyclic interleaving test: two diagonals with four distinct endpoints
    /// cross iff exactly one endpoint of `other` lies strictly inside the
    /// arc `a..b`. Diagonals sharing an endpoint never cross.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        if self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b {
            return false;
        }
        let inside = |x: Vertex| self.a < x && x < self.b;
        inside(other.a) != inside(other.b)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A triangulation of a convex polygon.
///
/// `diagonals` is sorted and `faces` is the sorted list of vertex triples cut
/// out by the diagonals, both fixed at construction time.
#[derive(Clone, Debug)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Diagonal>,
    faces: Vec<[Vertex; 3]>,
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.diagonals == other.diagonals
    }
}

impl Eq for Triangulation {}

impl PartialOrd for Triangulation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Triangulation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.diagonals).cmp(&(other.n, &other.diagonals))
    }
}

impl std::hash::Hash for Triangulation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.diagonals.hash(state);
    }
}

impl Triangulation {
    pub fn new(polygon: Polygon, mut diagonals: Vec<Diagonal>) -> Result<Self> {
        let n = polygon.n_vertices();
        let expected = n - 3;
        if diagonals.len() != expected {
            return Err(Error::WrongDiagonalCount {
                n,
                expected,
                got: diagonals.len(),
            });
        }
        diagonals.sort();
        for w in diagonals.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateDiagonal(w[0]));
            }
        }
        for d in &diagonals {
            // re-validate against this polygon; a Diagonal may have been
            // built for a different vertex count
            Diagonal::new(d.a, d.b, n)?;
        }
        for i in 0..diagonals.len() {
            for j in i + 1..diagonals.len() {
                if diagonals[i].crosses(&diagonals[j]) {
                    return Err(Error::CrossingDiagonals(diagonals[i], diagonals[j]));
                }
            }
        }
        let faces = derive_faces(n, &diagonals);
        debug_assert_eq!(faces.len(), n - 2);
        Ok(Self {
            n,
            diagonals,
            faces,
        })
    }

    /// Convenience constructor from raw endpoint pairs.
    pub fn from_pairs(n_vertices: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let polygon = Polygon::new(n_vertices)?;
        let diagonals = pairs
            .iter()
            .map(|&(a, b)| Diagonal::new(a, b, n_vertices))
            .collect::<Result<Vec<_>>>()?;
        Self::new(polygon, diagonals)
    }

    /// The fan triangulation with every diagonal incident to `apex`.
    pub fn fan(polygon: Polygon, apex: Vertex) -> Result<Self> {
        let n = polygon.n_vertices();
        if apex >= n {
            return Err(Error::InvalidVertex { vertex: apex, n });
        }
        let diagonals = (2..n - 1)
            .map(|k| Diagonal::new(apex, (apex + k) % n, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(polygon, diagonals)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn polygon(&self) -> Polygon {
        Polygon { n: self.n }
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn faces(&self) -> &[[Vertex; 3]] {
        &self.faces
    }

    pub fn has_diagonal(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    pub fn diagonal_index(&self, d: Diagonal) -> Option<usize> {
        self.diagonals.binary_search(&d).ok()
    }

    pub fn face_index(&self, face: &[Vertex; 3]) -> Option<usize> {
        self.faces.binary_search(face).ok()
    }

    /// Indices of the two faces incident with `d`.
    pub fn faces_of(&self, d: Diagonal) -> Result<(usize, usize)> {
        if !self.has_diagonal(d) {
            return Err(Error::UnknownDiagonal(d));
        }
        let mut found = [0usize; 2];
        let mut k = 0;
        for (i, f) in self.faces.iter().enumerate() {
            if f.contains(&d.a) && f.contains(&d.b) {
                found[k] = i;
                k += 1;
                if k == 2 {
                    break;
                }
            }
        }
        debug_assert_eq!(k, 2);
        Ok((found[0], found[1]))
    }

    /// The four vertices of the two triangles containing `d`, in cyclic order
    /// starting at `d.a()`, so that `d` joins positions 0 and 2.
    pub fn quadrilateral_of(&self, d: Diagonal) -> Result<[Vertex; 4]> {
        let (f1, f2) = self.faces_of(d)?;
        let apex = |f: &[Vertex; 3]| *f.iter().find(|&&v| v != d.a && v != d.b).unwrap();
        let u = apex(&self.faces[f1]);
        let w = apex(&self.faces[f2]);
        // exactly one of the two apexes lies strictly between a and b
        let (inner, outer) = if d.a < u && u < d.b { (u, w) } else { (w, u) };
        Ok([d.a, inner, d.b, outer])
    }

    /// Replaces `d` by the other diagonal of its quadrilateral. Returns the
    /// new triangulation together with the new diagonal; flipping that
    /// diagonal again restores `self`.
    pub fn flip(&self, d: Diagonal) -> Result<(Triangulation, Diagonal)> {
        let [_, u, _, w] = self.quadrilateral_of(d)?;
        let new_d = Diagonal::new(u, w, self.n)?;
        let mut diagonals = self.diagonals.clone();
        diagonals.retain(|&x| x != d);
        diagonals.push(new_d);
        let t = Triangulation::new(self.polygon(), diagonals)?;
        Ok((t, new_d))
    }

    /// The dual graph on faces, with an edge wherever two faces share a
    /// diagonal. For a polygon this is always a tree.
    pub fn dual_tree(&self) -> DualTree {
        let mut edges = Vec::with_capacity(self.diagonals.len());
        for &d in &self.diagonals {
            let (f1, f2) = self.faces_of(d).expect("own diagonal");
            edges.push((f1.min(f2), f1.max(f2)));
        }
        edges.sort();
        DualTree {
            face_count: self.faces.len(),
            edges,
        }
    }
}

fn derive_faces(n: usize, diagonals: &[Diagonal]) -> Vec<[Vertex; 3]> {
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        let j = (i + 1) % n;
        adj[i][j] = true;
        adj[j][i] = true;
    }
    for d in diagonals {
        adj[d.a][d.b] = true;
        adj[d.b][d.a] = true;
    }
    // in a triangulated convex polygon every 3-clique bounds a face
    let mut faces = Vec::with_capacity(n - 2);
    for i in 0..n {
        for j in i + 1..n {
            if !adj[i][j] {
                continue;
            }
            for k in j + 1..n {
                if adj[j][k] && adj[i][k] {
                    faces.push([i, j, k]);
                }
            }
        }
    }
    faces
}

/// Dual tree of a triangulation: nodes are face indices, edges join faces
/// sharing a diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTree {
    face_count: usize,
    edges: Vec<(usize, usize)>,
}

impl DualTree {
    pub fn face_count(&self) -> usize {
        self.face_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, face: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == face || b == face)
            .count()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.face_count)
            .filter(|&f| self.degree(f) == 1)
            .count()
    }

    pub fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.face_count {
            return false;
        }
        let mut seen = vec![false; self.face_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut visited = 1;
        while let Some(f) = queue.pop_front() {
            for &(a, b) in &self.edges {
                let other = if a == f {
                    b
                } else if b == f {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    visited += 1;
                    queue.push_back(other);
                }
            }
        }
        visited == self.face_count
    }
}

/// The `k`-th Catalan number, `binom(2k, k) / (k + 1)`, exactly.
pub fn catalan(k: u64) -> BigUint {
    // C_{i+1} = C_i * 2(2i + 1) / (i + 2); each division is exact
    let mut c = BigUint::from(1u32);
    for i in 0..k {
        c = c * BigUint::from(2 * (2 * i + 1)) / BigUint::from(i + 2);
    }
    c
}

/// All triangulations of an `n_vertices`-gon, in the order produced by
/// recursing on the apex of the triangle over edge `(0, n-1)`, apex
/// ascending. The list has exactly `catalan(n_vertices - 2)` entries.
pub fn enumerate_triangulations(n_vertices: usize) -> Result<Vec<Triangulation>> {
    let polygon = Polygon::new(n_vertices)?;
    fn sub(lo: usize, hi: usize, n: usize) -> Vec<Vec<Diagonal>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for apex in lo + 1..hi {
            let lefts = sub(lo, apex, n);
            let rights = sub(apex, hi, n);
            for l in &lefts {
                for r in &rights {
                    let mut set = Vec::with_capacity(hi - lo - 2);
                    set.extend_from_slice(l);
                    set.extend_from_slice(r);
                    if apex - lo >= 2 {
                        set.push(Diagonal::new(lo, apex, n).unwrap());
                    }
                    if hi - apex >= 2 {
                        set.push(Diagonal::new(apex, hi, n).unwrap());
                    }
                    out.push(set);
                }
            }
        }
        out
    }
    sub(0, n_vertices - 1, n_vertices)
        .into_iter()
        .map(|set| Triangulation::new(polygon, set))
        .collect()
}
