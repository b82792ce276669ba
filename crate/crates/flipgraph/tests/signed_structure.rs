//! Structural facts about signed triangulations, checked exhaustively for
//! small polygons and on seeded random walks for larger ones.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use flipgraph::colour::{enumerate_coloured, ColourScheme, ColouredTriangulation};
use flipgraph::polygon::{enumerate_triangulations, Diagonal};
use flipgraph::signed::{canonical_colouring, valuation, weighting};

/// Neighbours of a vertex: the two along the boundary plus diagonal ends.
fn neighbours_of(ct: &ColouredTriangulation, x: usize) -> Vec<usize> {
    let n = ct.n_vertices();
    let mut out = vec![(x + n - 1) % n, (x + 1) % n];
    for d in ct.triangulation().diagonals() {
        if d.a() == x {
            out.push(d.b());
        } else if d.b() == x {
            out.push(d.a());
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[test]
fn vertex_degree_facts() {
    for n in 4..=7usize {
        for ct in enumerate_coloured(n, 2).unwrap() {
            let col = canonical_colouring(&ct).unwrap();
            let p = weighting(&ct).unwrap();
            for x in 0..n {
                let nbrs = neighbours_of(&ct, x);
                let mut same_pairs: Vec<(usize, usize)> = Vec::new();
                for (i, &u) in nbrs.iter().enumerate() {
                    for &v in &nbrs[i + 1..] {
                        if col.indices()[u] == col.indices()[v] {
                            same_pairs.push((u, v));
                        }
                    }
                }
                let boundary = {
                    let (a, b) = ((x + n - 1) % n, (x + 1) % n);
                    (a.min(b), a.max(b))
                };
                if same_pairs.is_empty() {
                    // no two neighbours alike: degree 2 or 3, weight nonzero
                    assert!(nbrs.len() == 2 || nbrs.len() == 3, "n={n}, x={x}");
                    assert_ne!(p.values()[x], 0, "n={n}, x={x}");
                } else if same_pairs == [boundary] {
                    // only the boundary pair alike: degree 3 or 4, weight zero
                    assert!(nbrs.len() == 3 || nbrs.len() == 4, "n={n}, x={x}");
                    assert_eq!(p.values()[x], 0, "n={n}, x={x}");
                }
            }
        }
    }
}

#[test]
fn zero_weight_iff_boundary_neighbours_match() {
    for n in 4..=7usize {
        for ct in enumerate_coloured(n, 2).unwrap() {
            let col = canonical_colouring(&ct).unwrap();
            let p = weighting(&ct).unwrap();
            for x in 0..n {
                let same = col.indices()[(x + n - 1) % n] == col.indices()[(x + 1) % n];
                assert_eq!(p.values()[x] == 0, same, "n={n}, x={x}");
            }
        }
    }
}

/// One coloured flip: the new diagonal is valued 0, the quadrilateral's
/// boundary diagonals toggle, everything else keeps its bit, and both the
/// weighting and the canonical colouring are untouched.
fn check_flip_effect(ct: &ColouredTriangulation, d: Diagonal, scheme: &ColourScheme) {
    let n = ct.n_vertices();
    let t = ct.triangulation();
    let quad = t.quadrilateral_of(d).unwrap();
    let quad_sides: Vec<Diagonal> = (0..4)
        .filter_map(|i| Diagonal::new(quad[i], quad[(i + 1) % 4], n).ok())
        .filter(|side| t.has_diagonal(*side))
        .collect();

    let before = valuation(ct).unwrap();
    let bit_before = |e: Diagonal| before.bits()[t.diagonal_index(e).unwrap()];

    let next = ct.coloured_flip(d, scheme).unwrap();
    let t2 = next.triangulation();
    let after = valuation(&next).unwrap();
    let bit_after = |e: Diagonal| after.bits()[t2.diagonal_index(e).unwrap()];

    for &e in t2.diagonals() {
        if !t.has_diagonal(e) {
            assert_eq!(bit_after(e), 0, "fresh diagonal must be flippable");
        } else if quad_sides.contains(&e) {
            assert_eq!(
                bit_after(e),
                1 - bit_before(e),
                "quadrilateral side must toggle"
            );
        } else {
            assert_eq!(
                bit_after(e),
                bit_before(e),
                "far diagonal must keep its bit"
            );
        }
    }
    assert_eq!(weighting(&next).unwrap(), weighting(ct).unwrap());
    assert_eq!(
        canonical_colouring(&next).unwrap(),
        canonical_colouring(ct).unwrap()
    );
}

#[test]
fn flip_effects_exhaustive_small() {
    let scheme = ColourScheme::cyclic(2).unwrap();
    for n in 4..=7usize {
        for ct in enumerate_coloured(n, 2).unwrap() {
            for d in ct.flippable_diagonals() {
                check_flip_effect(&ct, d, &scheme);
            }
        }
    }
}

#[test]
fn flip_effects_random_large() {
    let scheme = ColourScheme::cyclic(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for n in [8usize, 9] {
        let tris = enumerate_triangulations(n).unwrap();
        for _ in 0..250 {
            let t = tris[rng.gen_range(0..tris.len())].clone();
            let colours = (0..n - 2).map(|_| rng.gen_range(0..2)).collect();
            let mut ct = ColouredTriangulation::new(t, 2, colours).unwrap();
            for _ in 0..6 {
                let flippable = ct.flippable_diagonals();
                if flippable.is_empty() {
                    break;
                }
                let d = flippable[rng.gen_range(0..flippable.len())];
                check_flip_effect(&ct, d, &scheme);
                ct = ct.coloured_flip(d, &scheme).unwrap();
            }
        }
    }
}
