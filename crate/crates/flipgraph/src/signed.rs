//! Equivalent encodings of a two-coloured ("signed") triangulation and the
//! flip-equivalence decision built on them.
//!
//! For two colours we read colour 0 as sign `+1` and colour 1 as sign `-1`.
//! A signed triangulation admits three equivalent descriptions:
//!
//! * a **weighting**: per vertex, the sum of incident face signs mod 3,
//!   written in `{-1, 0, +1}` (residue 2 is written `-1`). Flips preserve it.
//! * a **valuation**: per diagonal, bit 0 when the two incident faces share
//!   a sign and 1 otherwise. A diagonal is flippable exactly when its bit
//!   is 0.
//! * a **vertex colouring**: a proper 4-colouring of the polygon vertices
//!   (letters `a..d`), considered up to permutation of the letters. It is
//!   produced from a valuation by seeding one ear triangle with three
//!   distinct letters and propagating across quadrilaterals: the two
//!   off-diagonal vertices get equal letters iff the diagonal is valued 1.
//!
//! Weightings determine the signs exactly (an ear-peeling reconstruction);
//! valuations determine them up to the global sign swap; canonical vertex
//! colourings using all four letters determine the whole flip-graph
//! component (`decide_equivalence`).

use std::collections::VecDeque;
use std::fmt;

use crate::colour::ColouredTriangulation;
use crate::error::{Error, Result};
use crate::polygon::Triangulation;

/// Per-vertex values in `{-1, 0, +1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weighting(pub Vec<i8>);

impl Weighting {
    pub fn values(&self) -> &[i8] {
        &self.0
    }

    /// The weighting of the globally sign-swapped triangulation.
    pub fn negated(&self) -> Weighting {
        Weighting(self.0.iter().map(|&v| -v).collect())
    }
}

/// Per-diagonal bits, aligned with the sorted diagonal order of the
/// triangulation they were computed from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Valuation(pub Vec<u8>);

impl Valuation {
    pub fn bits(&self) -> &[u8] {
        &self.0
    }
}

/// A proper 4-colouring of the polygon vertices, stored canonically: the
/// letter of vertex 0 is `a` and each later letter first appears in
/// alphabetical order. Equality of canonical forms realises "up to
/// permutation of colours".
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexColouring(Vec<u8>);

impl VertexColouring {
    fn canonicalise(raw: Vec<u8>) -> Self {
        let mut map = [u8::MAX; 4];
        let mut next = 0u8;
        let mut out = Vec::with_capacity(raw.len());
        for c in raw {
            let slot = &mut map[c as usize];
            if *slot == u8::MAX {
                *slot = next;
                next += 1;
            }
            out.push(*slot);
        }
        VertexColouring(out)
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn letters(&self) -> Vec<char> {
        self.0.iter().map(|&c| (b'a' + c) as char).collect()
    }

    pub fn uses_four_colours(&self) -> bool {
        let mut seen = [false; 4];
        for &c in &self.0 {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count() == 4
    }

    /// True when no two vertices adjacent under `t` (boundary edges and
    /// diagonals) share a letter.
    pub fn proper_for(&self, t: &Triangulation) -> bool {
        let n = t.n_vertices();
        if self.0.len() != n {
            return false;
        }
        for v in 0..n {
            if self.0[v] == self.0[(v + 1) % n] {
                return false;
            }
        }
        t.diagonals().iter().all(|d| self.0[d.a()] != self.0[d.b()])
    }
}

impl fmt::Display for VertexColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.letters() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn ensure_two_colours(ct: &ColouredTriangulation) -> Result<()> {
    if ct.m() != 2 {
        return Err(Error::TwoColoursRequired(ct.m()));
    }
    Ok(())
}

fn sign_of(colour: usize) -> i8 {
    if colour == 0 {
        1
    } else {
        -1
    }
}

fn mod3(x: i32) -> i8 {
    match x.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Sum of incident face signs mod 3 at every vertex.
pub fn weighting(ct: &ColouredTriangulation) -> Result<Weighting> {
    ensure_two_colours(ct)?;
    let n = ct.n_vertices();
    let mut sums = vec![0i32; n];
    for (face, &c) in ct.triangulation().faces().iter().zip(ct.colours()) {
        for &v in face {
            sums[v] += i32::from(sign_of(c));
        }
    }
    Ok(Weighting(sums.into_iter().map(mod3).collect()))
}

/// Bit 0 on each diagonal whose two incident faces share a sign.
pub fn valuation(ct: &ColouredTriangulation) -> Result<Valuation> {
    ensure_two_colours(ct)?;
    let t = ct.triangulation();
    let bits = t
        .diagonals()
        .iter()
        .map(|&d| {
            let (f1, f2) = t.faces_of(d).expect("own diagonal");
            u8::from(ct.colour_of_face(f1) != ct.colour_of_face(f2))
        })
        .collect();
    Ok(Valuation(bits))
}

/// The two sign assignments realising a valuation, propagated over the dual
/// tree with face 0 fixed to `+`. The second entry is the global swap of the
/// first. Every bit assignment on the diagonals of a triangulation is
/// realisable.
pub fn signs_from_valuation(
    t: &Triangulation,
    v: &Valuation,
) -> Result<(ColouredTriangulation, ColouredTriangulation)> {
    let diagonals = t.diagonals();
    if v.0.len() != diagonals.len() {
        return Err(Error::WrongLength {
            what: "diagonal",
            expected: diagonals.len(),
            got: v.0.len(),
        });
    }
    let faces = t.faces().len();
    let mut colours = vec![usize::MAX; faces];
    colours[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for (j, &d) in diagonals.iter().enumerate() {
            let (f1, f2) = t.faces_of(d)?;
            let g = if f1 == f {
                f2
            } else if f2 == f {
                f1
            } else {
                continue;
            };
            if colours[g] == usize::MAX {
                colours[g] = colours[f] ^ usize::from(v.0[j]);
                queue.push_back(g);
            }
        }
    }
    let plus = ColouredTriangulation::new(t.clone(), 2, colours)?;
    let minus = sign_swapped(&plus)?;
    Ok((plus, minus))
}

/// Swaps the two colours everywhere.
pub fn sign_swapped(ct: &ColouredTriangulation) -> Result<ColouredTriangulation> {
    ensure_two_colours(ct)?;
    ColouredTriangulation::new(
        ct.triangulation().clone(),
        2,
        ct.colours().iter().map(|&c| 1 - c).collect(),
    )
}

/// A two-coloured triangulation up to the global sign swap, represented by
/// the member with the lexicographically smaller colour word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedClass {
    representative: ColouredTriangulation,
}

impl SignedClass {
    pub fn of(ct: &ColouredTriangulation) -> Result<Self> {
        let swapped = sign_swapped(ct)?;
        let representative = if ct.colours() <= swapped.colours() {
            ct.clone()
        } else {
            swapped
        };
        Ok(Self { representative })
    }

    pub fn representative(&self) -> &ColouredTriangulation {
        &self.representative
    }
}

/// Dual-tree traversal order rooted at `root`: yields
/// `(face, parent_face, shared_diagonal_index)` with the root first (parent
/// and diagonal meaningless for the root).
fn rooted_order(t: &Triangulation, root: usize) -> Vec<(usize, usize, usize)> {
    let faces = t.faces();
    let mut order = vec![(root, root, usize::MAX)];
    let mut visited = vec![false; faces.len()];
    visited[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(f) = queue.pop_front() {
        for (j, &d) in t.diagonals().iter().enumerate() {
            let (f1, f2) = t.faces_of(d).expect("own diagonal");
            let g = if f1 == f {
                f2
            } else if f2 == f {
                f1
            } else {
                continue;
            };
            if !visited[g] {
                visited[g] = true;
                order.push((g, f, j));
                queue.push_back(g);
            }
        }
    }
    order
}

/// Index of the face at the first ear vertex, scanning vertices in the given
/// direction.
fn ear_face(t: &Triangulation, from_highest: bool) -> usize {
    let n = t.n_vertices();
    let faces = t.faces();
    let mut incident = vec![0usize; n];
    for f in faces {
        for &v in f {
            incident[v] += 1;
        }
    }
    let pick = |v: &usize| incident[*v] == 1;
    let ear = if from_highest {
        (0..n).rev().find(pick)
    } else {
        (0..n).find(pick)
    }
    .expect("every triangulation has an ear");
    faces.iter().position(|f| f.contains(&ear)).unwrap()
}

/// Builds the canonical vertex colouring determined by a valuation: the
/// lowest-index ear triangle is seeded with three distinct letters (in
/// vertex-index order) and letters propagate across each quadrilateral, the
/// opposite vertices equal iff the shared diagonal is valued 1. The seed
/// choice washes out under canonicalisation.
pub fn colouring_from_valuation(t: &Triangulation, v: &Valuation) -> Result<VertexColouring> {
    colouring_from_valuation_seeded(t, v, false)
}

/// Same construction, optionally rooted at the highest-index ear instead;
/// used to check that the seed does not matter.
pub fn colouring_from_valuation_seeded(
    t: &Triangulation,
    v: &Valuation,
    seed_from_highest_ear: bool,
) -> Result<VertexColouring> {
    let diagonals = t.diagonals();
    if v.0.len() != diagonals.len() {
        return Err(Error::WrongLength {
            what: "diagonal",
            expected: diagonals.len(),
            got: v.0.len(),
        });
    }
    let n = t.n_vertices();
    let faces = t.faces();
    let order = rooted_order(t, ear_face(t, seed_from_highest_ear));

    let mut col = vec![u8::MAX; n];
    let (root, _, _) = order[0];
    for (letter, &vx) in faces[root].iter().enumerate() {
        col[vx] = letter as u8;
    }
    for &(g, f, j) in &order[1..] {
        let d = diagonals[j];
        let x = *faces[f]
            .iter()
            .find(|&&vx| vx != d.a() && vx != d.b())
            .unwrap();
        let z = *faces[g]
            .iter()
            .find(|&&vx| vx != d.a() && vx != d.b())
            .unwrap();
        debug_assert_eq!(col[z], u8::MAX, "each new face adds a fresh vertex");
        col[z] = if v.0[j] == 1 {
            col[x]
        } else {
            let used = [col[x], col[d.a()], col[d.b()]];
            (0..4u8).find(|c| !used.contains(c)).unwrap()
        };
    }
    Ok(VertexColouring::canonicalise(col))
}

/// Reads a valuation back off a vertex colouring: a diagonal is valued 0 iff
/// the four vertices of its quadrilateral all carry distinct letters.
pub fn valuation_from_colouring(t: &Triangulation, col: &VertexColouring) -> Result<Valuation> {
    if col.0.len() != t.n_vertices() {
        return Err(Error::WrongLength {
            what: "vertex",
            expected: t.n_vertices(),
            got: col.0.len(),
        });
    }
    let bits = t
        .diagonals()
        .iter()
        .map(|&d| {
            let [_, u, _, w] = t.quadrilateral_of(d).expect("own diagonal");
            u8::from(col.0[u] == col.0[w])
        })
        .collect();
    Ok(Valuation(bits))
}

/// Canonical colouring of a signed triangulation.
pub fn canonical_colouring(ct: &ColouredTriangulation) -> Result<VertexColouring> {
    colouring_from_valuation(ct.triangulation(), &valuation(ct)?)
}

/// Reconstructs the unique sign assignment matching a weighting, if any:
/// peel ears from the lowest-index degree-2 vertex outward; a zero residue
/// at an ear rules a colouring out, a `+-1` residue forces the ear's sign,
/// which is then subtracted (mod 3) from the two surviving vertices.
pub fn signs_from_weighting(
    t: &Triangulation,
    p: &Weighting,
) -> Result<Option<ColouredTriangulation>> {
    let n = t.n_vertices();
    if p.0.len() != n {
        return Err(Error::WrongLength {
            what: "vertex",
            expected: n,
            got: p.0.len(),
        });
    }
    if p.0.iter().any(|x| !(-1..=1).contains(x)) {
        return Err(Error::InvariantViolated(
            "weighting values must be -1, 0 or +1".into(),
        ));
    }
    let faces = t.faces();
    let mut residue: Vec<i8> = p.0.clone();
    let mut alive_faces = vec![true; faces.len()];
    let mut incident = vec![0usize; n];
    for f in faces {
        for &v in f {
            incident[v] += 1;
        }
    }
    let mut signs: Vec<i8> = vec![0; faces.len()];
    let mut remaining = faces.len();

    while remaining > 1 {
        let ear = (0..n)
            .find(|&v| incident[v] == 1)
            .expect("a triangulated polygon always has an ear");
        let f = (0..faces.len())
            .find(|&f| alive_faces[f] && faces[f].contains(&ear))
            .unwrap();
        let s = residue[ear];
        if s == 0 {
            return Ok(None);
        }
        signs[f] = s;
        for &v in &faces[f] {
            incident[v] -= 1;
            if v != ear {
                residue[v] = mod3(i32::from(residue[v]) - i32::from(s));
            }
        }
        alive_faces[f] = false;
        remaining -= 1;
    }

    let f = (0..faces.len()).find(|&f| alive_faces[f]).unwrap();
    let s = residue[faces[f][0]];
    if s == 0 || faces[f].iter().any(|&v| residue[v] != s) {
        return Ok(None);
    }
    signs[f] = s;

    let colours = signs.iter().map(|&s| usize::from(s < 0)).collect();
    Ok(Some(ColouredTriangulation::new(t.clone(), 2, colours)?))
}

/// All diagonals valued 1; equivalently, for two colours, frozen. Such
/// triangulations admit a proper 3-colouring of the vertices and sit as
/// isolated nodes in the flip graph.
pub fn is_alternating(ct: &ColouredTriangulation) -> Result<bool> {
    Ok(valuation(ct)?.0.iter().all(|&b| b == 1))
}

/// Decides whether two signed triangulations of the same polygon are linked
/// by a sequence of coloured flips, at the level of sign classes (a
/// triangulation is identified with its global sign swap): equal classes are
/// equivalent via the empty sequence; distinct ones are equivalent exactly
/// when their canonical colourings agree and use all four letters.
pub fn decide_equivalence(
    ct1: &ColouredTriangulation,
    ct2: &ColouredTriangulation,
) -> Result<bool> {
    if ct1.n_vertices() != ct2.n_vertices() {
        return Err(Error::PolygonMismatch(ct1.n_vertices(), ct2.n_vertices()));
    }
    ensure_two_colours(ct1)?;
    ensure_two_colours(ct2)?;
    if SignedClass::of(ct1)? == SignedClass::of(ct2)? {
        return Ok(true);
    }
    let col1 = canonical_colouring(ct1)?;
    let col2 = canonical_colouring(ct2)?;
    Ok(col1 == col2 && col1.uses_four_colours())
}
