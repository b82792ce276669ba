//! JSON wire formats. Faces are always recomputed from the diagonals on
//! load, never read from the input; unknown fields are ignored.
//!
//! Triangulation: `{"n": 6, "diagonals": [[0,2],[0,3],[0,4]]}`
//! Coloured:      `{"n": 6, "m": 2, "diagonals": [...], "colours": [0,0,1,0]}`

use serde::{Deserialize, Serialize};

use crate::colour::ColouredTriangulation;
use crate::error::Result;
use crate::polygon::Triangulation;

#[derive(Serialize, Deserialize)]
struct TriangulationWire {
    n: usize,
    diagonals: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ColouredWire {
    n: usize,
    m: usize,
    diagonals: Vec<[usize; 2]>,
    colours: Vec<usize>,
}

pub fn triangulation_to_json(t: &Triangulation) -> String {
    let wire = TriangulationWire {
        n: t.n_vertices(),
        diagonals: t.diagonals().iter().map(|d| [d.a(), d.b()]).collect(),
    };
    serde_json::to_string(&wire).expect("serialisable")
}

pub fn triangulation_from_json(text: &str) -> Result<Triangulation> {
    let wire: TriangulationWire = serde_json::from_str(text)?;
    let pairs: Vec<(usize, usize)> = wire.diagonals.iter().map(|d| (d[0], d[1])).collect();
    Triangulation::from_pairs(wire.n, &pairs)
}

pub fn coloured_to_json(ct: &ColouredTriangulation) -> String {
    let wire = ColouredWire {
        n: ct.n_vertices(),
        m: ct.m(),
        diagonals: ct
            .triangulation()
            .diagonals()
            .iter()
            .map(|d| [d.a(), d.b()])
            .collect(),
        colours: ct.colours().to_vec(),
    };
    serde_json::to_string(&wire).expect("serialisable")
}

pub fn coloured_from_json(text: &str) -> Result<ColouredTriangulation> {
    let wire: ColouredWire = serde_json::from_str(text)?;
    let pairs: Vec<(usize, usize)> = wire.diagonals.iter().map(|d| (d[0], d[1])).collect();
    let t = Triangulation::from_pairs(wire.n, &pairs)?;
    ColouredTriangulation::new(t, wire.m, wire.colours)
}
