//! Coloured triangulations and the coloured flip move.
//!
//! Each face carries a colour in `0..m`. A diagonal can be flipped only when
//! its two faces share a colour `i`; the flip replaces the diagonal as in the
//! plain move and recolours both new faces `sigma(i)`. Colours are 0-based;
//! for two colours we identify colour 0 with `+` and colour 1 with `-`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::polygon::{catalan, enumerate_triangulations, Diagonal, Triangulation};

/// A colour count `m >= 1` together with a permutation of `0..m` driving the
/// recolouring on each flip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColourScheme {
    sigma: Vec<usize>,
}

impl ColourScheme {
    /// Builds a scheme from the image array `sigma` (`sigma[i]` is the colour
    /// written after a flip out of colour `i`). Must be a bijection.
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let m = sigma.len();
        if m == 0 {
            return Err(Error::NoColours);
        }
        let mut seen = vec![false; m];
        for &c in &sigma {
            if c >= m || seen[c] {
                return Err(Error::InvalidPermutation(sigma.clone(), m));
            }
            seen[c] = true;
        }
        Ok(Self { sigma })
    }

    /// The cycle `i -> i + 1 (mod m)`, the default scheme.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoColours);
        }
        Self::new((0..m).map(|i| (i + 1) % m).collect())
    }

    /// Parses `"cyclic"` or an explicit image array such as `"1,0,3,2"`.
    /// An explicit array must have length `m`.
    pub fn parse(spec: &str, m: usize) -> Result<Self> {
        if spec.trim() == "cyclic" {
            return Self::cyclic(m);
        }
        let images = spec
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPermutation(Vec::new(), m))?;
        if images.len() != m {
            return Err(Error::InvalidPermutation(images, m));
        }
        Self::new(images)
    }

    pub fn m(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn apply(&self, colour: usize) -> usize {
        self.sigma[colour]
    }

    pub fn apply_inverse(&self, colour: usize) -> usize {
        self.sigma.iter().position(|&c| c == colour).unwrap()
    }

    pub fn is_single_cycle(&self) -> bool {
        let mut c = 0usize;
        for steps in 1..=self.m() {
            c = self.sigma[c];
            if c == 0 {
                return steps == self.m();
            }
        }
        false
    }

    /// True for the default `i -> i + 1 (mod m)` cycle.
    pub fn is_cyclic(&self) -> bool {
        self.sigma
            .iter()
            .enumerate()
            .all(|(i, &c)| c == (i + 1) % self.m())
    }

    /// Smallest colour in the sigma-cycle containing `colour`.
    pub fn cycle_representative(&self, colour: usize) -> usize {
        let mut min = colour;
        let mut c = self.sigma[colour];
        while c != colour {
            min = min.min(c);
            c = self.sigma[c];
        }
        min
    }
}

/// A triangulation with one colour per face, aligned with the canonical
/// (sorted) face order of the underlying triangulation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColouredTriangulation {
    triangulation: Triangulation,
    m: usize,
    colours: Vec<usize>,
}

impl ColouredTriangulation {
    pub fn new(triangulation: Triangulation, m: usize, colours: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoColours);
        }
        let expected = triangulation.faces().len();
        if colours.len() != expected {
            return Err(Error::WrongColourCount {
                expected,
                got: colours.len(),
            });
        }
        if let Some(&c) = colours.iter().find(|&&c| c >= m) {
            return Err(Error::ColourOutOfRange { colour: c, m });
        }
        Ok(Self {
            triangulation,
            m,
            colours,
        })
    }

    pub fn monochromatic(triangulation: Triangulation, m: usize, colour: usize) -> Result<Self> {
        let k = triangulation.faces().len();
        Self::new(triangulation, m, vec![colour; k])
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.triangulation
    }

    pub fn n_vertices(&self) -> usize {
        self.triangulation.n_vertices()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour_of_face(&self, face_index: usize) -> usize {
        self.colours[face_index]
    }

    /// Number of faces carrying `colour`.
    pub fn colour_count(&self, colour: usize) -> usize {
        self.colours.iter().filter(|&&c| c == colour).count()
    }

    /// Re-encodes the same colouring into a palette of `m_new >= m` colours.
    pub fn with_colour_count(&self, m_new: usize) -> Result<Self> {
        if m_new < self.m {
            return Err(Error::ColourCountMismatch(self.m, m_new));
        }
        Self::new(self.triangulation.clone(), m_new, self.colours.clone())
    }

    /// Canonical string form `"n;diagonals;colour-word"`, e.g.
    /// `"6;0-2,0-3,0-4;0010"`. Used as graph-node key and DOT label. The
    /// colour word is digit-concatenated for `m <= 10` and dot-separated
    /// otherwise.
    pub fn canonical_key(&self) -> String {
        let diagonals = self
            .triangulation
            .diagonals()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let sep = if self.m <= 10 { "" } else { "." };
        let word = self
            .colours
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(sep);
        format!("{};{};{}", self.n_vertices(), diagonals, word)
    }

    /// The shared colour of the two faces incident with `d`, or an error if
    /// `d` is absent or its faces disagree.
    pub fn shared_colour(&self, d: Diagonal) -> Result<usize> {
        let (f1, f2) = self.triangulation.faces_of(d)?;
        if self.colours[f1] != self.colours[f2] {
            return Err(Error::NotFlippable(d));
        }
        Ok(self.colours[f1])
    }

    /// Exactly the diagonals whose two incident faces share a colour.
    pub fn flippable_diagonals(&self) -> Vec<Diagonal> {
        self.triangulation
            .diagonals()
            .iter()
            .copied()
            .filter(|&d| self.shared_colour(d).is_ok())
            .collect()
    }

    pub fn is_frozen(&self) -> bool {
        self.flippable_diagonals().is_empty()
    }

    /// The coloured flip at `d`: the underlying triangulation is flipped, the
    /// two new faces both get colour `sigma(i)` where `i` is the shared
    /// colour at `d`, and every other face keeps its colour (faces persist by
    /// vertex triple).
    pub fn coloured_flip(&self, d: Diagonal, scheme: &ColourScheme) -> Result<Self> {
        let i = self.shared_colour(d)?;
        self.flip_recoloured(d, i, scheme.apply(i), scheme.m())
    }

    /// Flip with an explicit colour for the two new faces. `i` must be the
    /// shared colour at `d`. This is the move that also walks flip-graph
    /// edges backwards when sigma is not an involution.
    pub(crate) fn flip_recoloured(
        &self,
        d: Diagonal,
        i: usize,
        new_colour: usize,
        m: usize,
    ) -> Result<Self> {
        if m != self.m {
            return Err(Error::ColourCountMismatch(self.m, m));
        }
        debug_assert_eq!(self.shared_colour(d).ok(), Some(i));
        let (t2, _) = self.triangulation.flip(d)?;
        let colours = t2
            .faces()
            .iter()
            .map(|f| match self.triangulation.face_index(f) {
                Some(k) => self.colours[k],
                None => new_colour,
            })
            .collect();
        Self::new(t2, self.m, colours)
    }

    /// Left-to-right composition of coloured flips. The first invalid step is
    /// reported with its index.
    pub fn apply_sequence(&self, seq: &FlipSequence, scheme: &ColourScheme) -> Result<Self> {
        let mut ct = self.clone();
        for (index, &d) in seq.steps.iter().enumerate() {
            ct = ct
                .coloured_flip(d, scheme)
                .map_err(|e| Error::InvalidStep {
                    index,
                    source: Box::new(e),
                })?;
        }
        Ok(ct)
    }
}

/// An ordered list of diagonals to flip, one per step.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlipSequence {
    pub steps: Vec<Diagonal>,
}

impl FlipSequence {
    pub fn new(steps: Vec<Diagonal>) -> Self {
        Self { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// `C_{n-2} * m^{n-2}`: the number of coloured triangulations of an `n`-gon.
pub fn count_coloured(n_vertices: usize, m: usize) -> Result<BigUint> {
    if n_vertices < 3 {
        return Err(Error::PolygonTooSmall(n_vertices));
    }
    if m == 0 {
        return Err(Error::NoColours);
    }
    let k = (n_vertices - 2) as u64;
    Ok(catalan(k) * BigUint::from(m).pow(k as u32))
}

/// `C_{n-2} * m * (m-1)^{n-3}`: the number of coloured triangulations in
/// which no diagonal can be flipped. For `n = 3` the formula gives `m`, the
/// single-face case, which is frozen by convention.
pub fn count_frozen(n_vertices: usize, m: usize) -> Result<BigUint> {
    if n_vertices < 3 {
        return Err(Error::PolygonTooSmall(n_vertices));
    }
    if m == 0 {
        return Err(Error::NoColours);
    }
    let k = (n_vertices - 2) as u64;
    Ok(catalan(k) * BigUint::from(m) * BigUint::from(m - 1).pow((n_vertices - 3) as u32))
}

/// Yields every coloured triangulation of the `n`-gon exactly once:
/// triangulations in enumeration order, colour words in lexicographic order
/// within each triangulation.
pub fn enumerate_coloured(
    n_vertices: usize,
    m: usize,
) -> Result<impl Iterator<Item = ColouredTriangulation>> {
    if m == 0 {
        return Err(Error::NoColours);
    }
    let tris = enumerate_triangulations(n_vertices)?;
    let faces = n_vertices - 2;
    Ok(tris.into_iter().flat_map(move |t| {
        ColourWords::new(m, faces)
            .map(move |w| ColouredTriangulation::new(t.clone(), m, w).expect("valid word"))
    }))
}

/// Odometer over colour words of a fixed length, lexicographic.
struct ColourWords {
    m: usize,
    next: Option<Vec<usize>>,
}

impl ColourWords {
    fn new(m: usize, len: usize) -> Self {
        Self {
            m,
            next: Some(vec![0; len]),
        }
    }
}

impl Iterator for ColourWords {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let word = self.next.take()?;
        let mut succ = word.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break; // wrapped: this was the last word
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.m {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(word)
    }
}

/// Translates a flip sequence valid for two cyclic colours into one valid
/// for `m` cyclic colours (`m` even) on the start state re-encoded with
/// colours `{0, 1}` inside `0..m`: a flip out of colour 0 stays a single
/// flip, a flip out of colour 1 becomes `m - 1` flips alternating between
/// the two diagonals of its quadrilateral.
pub fn translate_sequence(
    start: &ColouredTriangulation,
    seq: &FlipSequence,
    m: usize,
) -> Result<FlipSequence> {
    if m % 2 != 0 || m == 0 {
        return Err(Error::EvenColoursRequired(m));
    }
    if start.m() != 2 {
        return Err(Error::TwoColoursRequired(start.m()));
    }
    let two = ColourScheme::cyclic(2)?;
    let wide = ColourScheme::cyclic(m)?;
    let mut cur2 = start.clone();
    let mut curm = start.with_colour_count(m)?;
    let mut steps = Vec::new();
    for (index, &d) in seq.steps.iter().enumerate() {
        let wrap = |e: Error| Error::InvalidStep {
            index,
            source: Box::new(e),
        };
        let i = cur2.shared_colour(d).map_err(wrap)?;
        cur2 = cur2.coloured_flip(d, &two).map_err(wrap)?;
        if i == 0 {
            curm = curm.coloured_flip(d, &wide).map_err(wrap)?;
            steps.push(d);
        } else {
            let mut cd = d;
            for _ in 0..m - 1 {
                let quad = curm.triangulation().quadrilateral_of(cd).map_err(wrap)?;
                let other = Diagonal::new(quad[1], quad[3], curm.n_vertices()).map_err(wrap)?;
                curm = curm.coloured_flip(cd, &wide).map_err(wrap)?;
                steps.push(cd);
                cd = other;
            }
        }
    }
    debug_assert_eq!(curm, cur2.with_colour_count(m)?);
    Ok(FlipSequence::new(steps))
}

/// Groups face indices by the sigma-cycle containing each face's colour,
/// ordered by the smallest colour in the cycle. This partition is invariant
/// under coloured flips (with faces tracked through the flip's face
/// replacement).
pub fn cycle_regions(ct: &ColouredTriangulation, scheme: &ColourScheme) -> Result<Vec<Vec<usize>>> {
    if scheme.m() != ct.m() {
        return Err(Error::ColourCountMismatch(ct.m(), scheme.m()));
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (face, &c) in ct.colours().iter().enumerate() {
        groups
            .entry(scheme.cycle_representative(c))
            .or_default()
            .push(face);
    }
    Ok(groups.into_values().collect())
}

/// The boundary edge `(i, i+1 mod n)` of the polygon belongs to exactly one
/// face; labelling each boundary edge by its face's sigma-cycle gives a
/// description of the cycle regions that is stable across flips.
pub fn boundary_edge_regions(
    ct: &ColouredTriangulation,
    scheme: &ColourScheme,
) -> Result<Vec<usize>> {
    if scheme.m() != ct.m() {
        return Err(Error::ColourCountMismatch(ct.m(), scheme.m()));
    }
    let n = ct.n_vertices();
    let mut labels = vec![0usize; n];
    for (v, label) in labels.iter_mut().enumerate() {
        let w = (v + 1) % n;
        let face = ct
            .triangulation()
            .faces()
            .iter()
            .position(|f| f.contains(&v) && f.contains(&w))
            .expect("boundary edge lies in one face");
        *label = scheme.cycle_representative(ct.colour_of_face(face));
    }
    Ok(labels)
}

/// The fan at `apex` coloured alternately except at the apex-adjacent end,
/// where the first two faces share colour 0. Its component is a path.
pub fn fan_with_one_repeat(n_vertices: usize, m: usize) -> Result<ColouredTriangulation> {
    let t = Triangulation::fan(crate::polygon::Polygon::new(n_vertices)?, 0)?;
    let faces = n_vertices - 2;
    let colours: Vec<usize> = (0..faces)
        .map(|i| if i == 0 { 0 } else { (i - 1) % 2 })
        .collect();
    ColouredTriangulation::new(t, m, colours)
}
