#![allow(dead_code)]

use std::collections::BTreeSet;

use cstiling::{collect_tilings, Multiplicities, SearchConfig, Sweep, TilingComplex};

/// A decomposition as a set of tiles, each tile given by the positions of
/// its corners. A vertex position is the set of edge classes separating it
/// from the first boundary vertex, as a bitmask. Independent of ids and of
/// the order tiles were placed.
pub type TileKey = Vec<Vec<u64>>;

pub fn tile_key(c: &TilingComplex) -> TileKey {
    let n = c.num_vertices as usize;
    let mut adj = vec![Vec::new(); n];
    for e in &c.edges {
        adj[e.v[0] as usize].push((e.v[1] as usize, e.wire));
        adj[e.v[1] as usize].push((e.v[0] as usize, e.wire));
    }
    let start = c.edges[c.boundary_sides[0][0] as usize].v[0] as usize;
    let mut pos: Vec<Option<u64>> = vec![None; n];
    pos[start] = Some(0);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(w, wire) in &adj[v] {
            if pos[w].is_none() {
                pos[w] = Some(pos[v].unwrap() ^ (1 << wire));
                stack.push(w);
            }
        }
    }
    let mut key: TileKey = c
        .faces
        .iter()
        .map(|f| {
            let corners: BTreeSet<u64> =
                f.boundary.iter().flat_map(|&e| c.edges[e as usize].v).map(|v| pos[v as usize].unwrap()).collect();
            corners.into_iter().collect()
        })
        .collect();
    key.sort();
    key
}

/// Reference enumeration: every sequence of admissible moves, with no
/// ordering rule and no pruning, deduplicated by tile set.
pub fn oracle_keys(m: &[usize]) -> BTreeSet<TileKey> {
    fn walk(sweep: &mut Sweep, out: &mut BTreeSet<TileKey>) {
        if sweep.is_complete() {
            if sweep.face_count() >= 2 {
                out.insert(tile_key(&sweep.to_complex().unwrap()));
            }
            return;
        }
        for mv in sweep.admissible_moves() {
            sweep.apply(&mv).unwrap();
            walk(sweep, out);
            sweep.undo();
        }
    }
    let mut sweep = Sweep::new(&Multiplicities::new(m.to_vec()).unwrap()).unwrap();
    let mut out = BTreeSet::new();
    walk(&mut sweep, &mut out);
    out
}

pub fn exhaustive(m: &[usize]) -> Vec<TilingComplex> {
    collect_tilings(&Multiplicities::new(m.to_vec()).unwrap(), &SearchConfig::exhaustive()).unwrap()
}

pub fn pruned(m: &[usize]) -> Vec<TilingComplex> {
    collect_tilings(&Multiplicities::new(m.to_vec()).unwrap(), &SearchConfig::default()).unwrap()
}

pub fn hexagon_rhombi() -> Vec<TilingComplex> {
    exhaustive(&[1, 1, 1])
}
