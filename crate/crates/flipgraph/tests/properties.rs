//! Randomised invariants over triangulations, colourings and flip walks.

use proptest::prelude::*;

use flipgraph::colour::{
    boundary_edge_regions, translate_sequence, ColourScheme, ColouredTriangulation, FlipSequence,
};
use flipgraph::json::{coloured_from_json, coloured_to_json};
use flipgraph::polygon::{enumerate_triangulations, Triangulation};

fn pick_triangulation(n: usize, pick: usize) -> Triangulation {
    let all = enumerate_triangulations(n).unwrap();
    all[pick % all.len()].clone()
}

fn pick_coloured(n: usize, m: usize, pick: usize, word: &[usize]) -> ColouredTriangulation {
    let t = pick_triangulation(n, pick);
    let colours = word.iter().map(|&w| w % m).collect();
    ColouredTriangulation::new(t, m, colours).unwrap()
}

/// Walks a coloured triangulation along `choices`, flipping one flippable
/// diagonal per step; stops early when frozen. Returns the stepwise-valid
/// sequence taken.
fn walk(ct: &ColouredTriangulation, scheme: &ColourScheme, choices: &[usize]) -> FlipSequence {
    let mut cur = ct.clone();
    let mut steps = Vec::new();
    for &pick in choices {
        let flippable = cur.flippable_diagonals();
        if flippable.is_empty() {
            break;
        }
        let d = flippable[pick % flippable.len()];
        cur = cur.coloured_flip(d, scheme).unwrap();
        steps.push(d);
    }
    FlipSequence::new(steps)
}

fn case() -> impl Strategy<Value = (usize, usize, Vec<usize>, Vec<usize>)> {
    (4usize..=8).prop_flat_map(|n| {
        (
            Just(n),
            any::<usize>(),
            proptest::collection::vec(any::<usize>(), n - 2),
            proptest::collection::vec(any::<usize>(), 0..8),
        )
    })
}

proptest! {
    #[test]
    fn plain_flip_is_an_involution((n, pick, _, choices) in case()) {
        let t = pick_triangulation(n, pick);
        if let Some(&raw) = choices.first() {
            let d = t.diagonals()[raw % t.diagonals().len()];
            let (t2, nd) = t.flip(d).unwrap();
            prop_assert_eq!(t2.diagonals().len(), t.diagonals().len());
            prop_assert_eq!(t2.faces().len(), t.faces().len());
            let (t3, back) = t2.flip(nd).unwrap();
            prop_assert_eq!(t3, t);
            prop_assert_eq!(back, d);
        }
    }

    #[test]
    fn coloured_flip_touches_two_faces((n, pick, word, choices) in case()) {
        let scheme = ColourScheme::cyclic(2).unwrap();
        let ct = pick_coloured(n, 2, pick, &word);
        let flippable = ct.flippable_diagonals();
        if let (Some(&raw), false) = (choices.first(), flippable.is_empty()) {
            let d = flippable[raw % flippable.len()];
            let i = ct.shared_colour(d).unwrap();
            let next = ct.coloured_flip(d, &scheme).unwrap();
            // exactly the two faces of the quadrilateral changed colour
            let mut changed = 0usize;
            for (face, &c) in next.triangulation().faces().iter().zip(next.colours()) {
                match ct.triangulation().face_index(face) {
                    Some(k) => prop_assert_eq!(ct.colour_of_face(k), c),
                    None => {
                        prop_assert_eq!(c, scheme.apply(i));
                        changed += 1;
                    }
                }
            }
            prop_assert_eq!(changed, 2);
            // the colour multiset shifts by two
            let before = ct.colour_count(i);
            let after = next.colour_count(i);
            prop_assert_eq!(after + 2, before);
        }
    }

    #[test]
    fn translated_sequences_stay_valid((n, pick, word, choices) in case()) {
        let two = ColourScheme::cyclic(2).unwrap();
        let start = pick_coloured(n, 2, pick, &word);
        let seq = walk(&start, &two, &choices);
        let end = start.apply_sequence(&seq, &two).unwrap();
        for m in [4usize, 6] {
            let wide_scheme = ColourScheme::cyclic(m).unwrap();
            let wide_start = start.with_colour_count(m).unwrap();
            let wide_seq = translate_sequence(&start, &seq, m).unwrap();
            // stepwise validity: apply_sequence fails on any bad step
            let wide_end = wide_start.apply_sequence(&wide_seq, &wide_scheme).unwrap();
            prop_assert_eq!(wide_end, end.with_colour_count(m).unwrap());
        }
    }

    #[test]
    fn cycle_regions_survive_walks((n, pick, word, choices) in case()) {
        // a two-cycle permutation on four colours keeps two separate regions
        let scheme = ColourScheme::new(vec![1, 0, 3, 2]).unwrap();
        let ct = pick_coloured(n, 4, pick, &word);
        let before = boundary_edge_regions(&ct, &scheme).unwrap();
        let mut cur = ct;
        for &raw in &choices {
            let flippable = cur.flippable_diagonals();
            if flippable.is_empty() {
                break;
            }
            let d = flippable[raw % flippable.len()];
            cur = cur.coloured_flip(d, &scheme).unwrap();
            prop_assert_eq!(boundary_edge_regions(&cur, &scheme).unwrap(), before.clone());
        }
    }

    #[test]
    fn json_roundtrip((n, pick, word, _) in case()) {
        for m in [1usize, 2, 3] {
            let ct = pick_coloured(n, m, pick, &word);
            let text = coloured_to_json(&ct);
            prop_assert_eq!(coloured_from_json(&text).unwrap(), ct);
        }
    }
}
