mod common;

use common::{exhaustive, pruned};
use cstiling::complex::{side_cap, DirectionIndex, TilingComplex};
use cstiling::enumerate::multiplicity_orbits;
use cstiling::{boundary_paths, boundary_signature, slope_rank, zonogon_angles, Error, Multiplicities};
use proptest::prelude::*;

fn dirs(ds: &[usize], k: usize) -> Vec<DirectionIndex> {
    ds.iter().map(|&d| DirectionIndex::new(d, k).unwrap()).collect()
}

fn corpus() -> Vec<TilingComplex> {
    let mut out: Vec<_> = multiplicity_orbits(3).unwrap().iter().flat_map(|m| exhaustive(m.as_slice())).collect();
    for m in [[1, 1, 1, 1], [2, 1, 2, 1], [2, 2, 2, 2], [3, 2, 2, 3]] {
        out.extend(pruned(&m));
    }
    out
}

#[test]
fn slope_orders() {
    let order = |k| slope_rank(k).unwrap().order().iter().map(|d| d.get()).collect::<Vec<_>>();
    assert_eq!(order(2), [2, 1]);
    assert_eq!(order(3), [3, 1, 2]);
    assert_eq!(order(4), [3, 4, 1, 2]);
    assert!(matches!(slope_rank(1), Err(Error::InvalidParameter(_))));
}

#[test]
fn octagon_boundary_chains() {
    let m = Multiplicities::new(vec![1, 1, 1, 1]).unwrap();
    let wires = m.wires();
    let (lower, upper) = boundary_paths(&m).unwrap();
    let d = |f: &[u32]| f.iter().map(|&w| wires[w as usize].dir.get()).collect::<Vec<_>>();
    assert_eq!(d(&lower.steps), [3, 4, 1, 2]);
    assert_eq!(d(&upper.steps), [2, 1, 4, 3]);
    assert_eq!(lower.vertex_ids.first(), upper.vertex_ids.first());
    assert_eq!(lower.vertex_ids.last(), upper.vertex_ids.last());
}

#[test]
fn zonogon_examples() {
    assert_eq!(zonogon_angles(&dirs(&[1, 3], 4), 4).unwrap(), [2, 2, 2, 2]);
    assert_eq!(zonogon_angles(&dirs(&[1, 2, 3, 4], 4), 4).unwrap(), [3; 8]);
    assert!(matches!(zonogon_angles(&dirs(&[2], 4), 4), Err(Error::DegenerateTile(_))));
}

#[test]
fn signatures_are_mirrored_and_capped() {
    for c in corpus() {
        let sig = boundary_signature(&c).unwrap();
        let k = c.k();
        for i in 0..k {
            assert_eq!(sig[i], sig[i + k]);
            assert_eq!(sig[i], c.mult.as_slice()[i]);
            assert!(sig[i] <= side_cap(k));
        }
    }
}

#[test]
fn angle_and_euler_conservation() {
    for c in corpus() {
        let topo = c.topology().unwrap();
        let k = c.k() as u32;
        let corners: Vec<u32> = c.boundary_sides.iter().enumerate().map(|(j, s)| {
            let e = &c.edges[s[0] as usize];
            if j < c.k() { e.v[0] } else { e.v[1] }
        }).collect();
        for v in 0..c.num_vertices {
            let expected = if corners.contains(&v) {
                k - 1
            } else if topo.is_boundary_vertex[v as usize] {
                k
            } else {
                2 * k
            };
            assert_eq!(topo.angle_sum(v), expected);
        }
        assert_eq!(c.num_vertices as i64 - c.edges.len() as i64 + c.faces.len() as i64, 1);
        for (f, face) in c.faces.iter().enumerate() {
            let s = face.dirs.len() as u32;
            assert_eq!(topo.face_angles[f].iter().sum::<u32>(), (2 * s - 2) * k);
            assert!(topo.face_angles[f].iter().all(|&a| (1..=k).contains(&a)));
        }
    }
}

#[test]
fn edge_classes_are_chains_across_the_polygon() {
    for c in corpus() {
        let topo = c.topology().unwrap();
        for w in &c.wires {
            let edges: Vec<u32> = (0..c.edges.len() as u32).filter(|&e| c.edges[e as usize].wire == w.id).collect();
            let boundary: Vec<u32> = edges.iter().copied().filter(|&e| topo.faces_of_edge(e).count() == 1).collect();
            assert_eq!(boundary.len(), 2, "class {} must start and end on the boundary", w.id);
            // Walk from one boundary edge through opposite sides of faces.
            let mut seen = vec![boundary[0]];
            let mut at = boundary[0];
            let mut from_face = None;
            loop {
                let next_face = topo.faces_of_edge(at).find(|&f| Some(f) != from_face);
                let Some(f) = next_face else { break };
                let face = &c.faces[f as usize];
                let i = face.boundary.iter().position(|&e| e == at).unwrap();
                let opposite = face.boundary[(i + face.sides() / 2) % face.sides()];
                assert_eq!(c.edges[opposite as usize].wire, w.id);
                seen.push(opposite);
                at = opposite;
                from_face = Some(f);
            }
            assert_eq!(at, boundary[1]);
            seen.sort();
            assert_eq!(seen, edges);
        }
    }
}

proptest! {
    #[test]
    fn slope_rank_is_a_permutation(k in 2usize..=32) {
        let r = slope_rank(k).unwrap();
        let mut ranks: Vec<usize> = (1..=k).map(|i| r.rank(DirectionIndex::new(i, k).unwrap())).collect();
        ranks.sort();
        prop_assert_eq!(ranks, (0..k).collect::<Vec<_>>());
    }

    #[test]
    fn zonogon_angles_sum(k in 3usize..=12, mask in 1u32..4096) {
        let ds: Vec<usize> = (1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        prop_assume!(ds.len() >= 2);
        let a = zonogon_angles(&dirs(&ds, k), k).unwrap();
        prop_assert_eq!(a.len(), 2 * ds.len());
        prop_assert_eq!(a.iter().sum::<u32>() as usize, (2 * ds.len() - 2) * k);
        prop_assert!(a.iter().all(|&x| x >= 1 && x as usize <= k));
    }
}
