//! Combinatorial model of an edge-to-edge decomposition of a centrally
//! symmetric `2k`-gon.
//!
//! Every edge is parallel to one of the `k` side directions of the polygon,
//! so a direction is just an index `1..=k`; direction `i` points at angle
//! `(i-1)·π/k`. All angles are integers in units of `π/k`, which makes the
//! whole model exact. Edges of one direction share a common implicit length,
//! so no coordinates are ever stored.
//!
//! A [`TilingComplex`] is a plain incidence record. Derived data (face
//! corners, vertex stars, rotation systems) lives in [`Topology`], which is
//! rebuilt and checked on demand.

use crate::error::{integrity, Error, Result};

pub type VertexId = u32;
pub type EdgeId = u32;
pub type FaceId = u32;
pub type WireId = u32;

/// Bit mask over the `2k` unit sectors around a vertex; bit `a` covers the
/// angular range `[a, a+1)·π/k`.
pub type AngleMask = u64;

/// Largest `k` whose angle masks fit in an [`AngleMask`].
pub const MAX_K: usize = 32;

/// One of the `k` edge directions, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectionIndex(u16);

impl DirectionIndex {
    pub fn new(i: usize, k: usize) -> Result<Self> {
        if i == 0 || i > k {
            return Err(Error::InvalidParameter(format!(
                "direction {i} outside 1..={k}"
            )));
        }
        Ok(DirectionIndex(i as u16))
    }

    pub(crate) const fn from_zero_based(i: usize) -> Self {
        DirectionIndex(i as u16 + 1)
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    pub fn zero_based(self) -> usize {
        self.0 as usize - 1
    }

    /// Angle of the positive direction vector, in units of `π/k`.
    pub fn angle(self) -> u32 {
        self.0 as u32 - 1
    }

    /// Representative angle in `[-k/2, k/2)` used by the sweep. The
    /// direction at exactly `π/2` is mapped to `-π/2`.
    pub fn representative_angle(self, k: usize) -> i32 {
        let a = self.angle() as i32;
        if 2 * a < k as i32 {
            a
        } else {
            a - k as i32
        }
    }
}

impl std::fmt::Display for DirectionIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    if k > MAX_K {
        return Err(Error::InvalidParameter(format!(
            "k = {k} exceeds the supported maximum {MAX_K}"
        )));
    }
    Ok(())
}

/// Mask with the low `2k` bits set.
pub fn full_mask(k: usize) -> AngleMask {
    if 2 * k >= 64 {
        u64::MAX
    } else {
        (1u64 << (2 * k)) - 1
    }
}

/// Mask of the sector `[start, start+width)` on a circle of `2k` units.
pub fn sector_mask(start: u32, width: u32, k: usize) -> AngleMask {
    let two_k = 2 * k as u32;
    let mut m = 0u64;
    for t in 0..width {
        m |= 1u64 << ((start + t) % two_k);
    }
    m
}

/// Order of the directions by representative angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeRank {
    k: usize,
    order: Vec<DirectionIndex>,
    rank: Vec<usize>,
}

impl SlopeRank {
    /// Directions listed by ascending representative angle.
    pub fn order(&self) -> &[DirectionIndex] {
        &self.order
    }

    /// Zero-based position of `dir` in [`SlopeRank::order`].
    pub fn rank(&self, dir: DirectionIndex) -> usize {
        self.rank[dir.zero_based()]
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

pub fn slope_rank(k: usize) -> Result<SlopeRank> {
    check_k(k)?;
    let mut order: Vec<DirectionIndex> = (0..k).map(DirectionIndex::from_zero_based).collect();
    order.sort_by_key(|d| d.representative_angle(k));
    let mut rank = vec![0; k];
    for (r, d) in order.iter().enumerate() {
        rank[d.zero_based()] = r;
    }
    Ok(SlopeRank { k, order, rank })
}

/// Number of edge classes per direction; also the number of edges on each
/// of the two sides of the polygon parallel to that direction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiplicities {
    k: usize,
    m: Vec<usize>,
}

impl Multiplicities {
    /// Validates `1 <= m_i <= 2k-3` (or `m_i = 1` when `k = 2`).
    pub fn new(m: Vec<usize>) -> Result<Self> {
        let k = m.len();
        check_k(k)?;
        let cap = side_cap(k);
        if let Some(bad) = m.iter().find(|&&x| x == 0 || x > cap) {
            return Err(Error::InvalidParameter(format!(
                "multiplicity {bad} outside 1..={cap} for k = {k}"
            )));
        }
        Ok(Multiplicities { k, m })
    }

    /// Like [`Multiplicities::new`] but without the side cap. Used for
    /// reducible test inputs whose sides carry more than `2k-3` edges.
    pub fn uncapped(m: Vec<usize>) -> Result<Self> {
        let k = m.len();
        check_k(k)?;
        if m.contains(&0) {
            return Err(Error::InvalidParameter("multiplicities must be positive".into()));
        }
        Ok(Multiplicities { k, m })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.m
    }

    pub fn get(&self, dir: DirectionIndex) -> usize {
        self.m[dir.zero_based()]
    }

    /// Total number of wires.
    pub fn total(&self) -> usize {
        self.m.iter().sum()
    }

    /// All wires, grouped by direction and ordered by class index.
    pub fn wires(&self) -> Vec<Wire> {
        let mut out = Vec::with_capacity(self.total());
        for (d, &count) in self.m.iter().enumerate() {
            for c in 1..=count {
                out.push(Wire {
                    id: out.len() as WireId,
                    dir: DirectionIndex::from_zero_based(d),
                    class_index: c as u32,
                });
            }
        }
        out
    }
}

/// Largest admissible number of edges on one side of an irreducible tiling.
pub fn side_cap(k: usize) -> usize {
    if k <= 2 {
        1
    } else {
        2 * k - 3
    }
}

/// One edge class: a chain of parallel edges crossing the polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wire {
    pub id: WireId,
    pub dir: DirectionIndex,
    pub class_index: u32,
}

/// A monotone path of wire-labelled steps from the leftmost to the
/// rightmost boundary vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Front {
    pub steps: Vec<WireId>,
    pub vertex_ids: Vec<VertexId>,
}

/// Lower and upper boundary chains of the polygon for the given
/// multiplicities. Vertex ids of the lower chain are `0..=n`; the upper
/// chain shares its two end vertices with it and numbers its interior
/// vertices `n+1..2n`.
pub fn boundary_paths(mult: &Multiplicities) -> Result<(Front, Front)> {
    let rank = slope_rank(mult.k())?;
    let wires = mult.wires();
    let n = wires.len() as u32;
    let by_dir = |d: DirectionIndex| wires.iter().filter(move |w| w.dir == d).map(|w| w.id);

    let lower: Vec<WireId> = rank.order().iter().flat_map(|&d| by_dir(d)).collect();
    let upper: Vec<WireId> = rank.order().iter().rev().flat_map(|&d| by_dir(d)).collect();

    let lower_vertices = (0..=n).collect();
    let mut upper_vertices = vec![0];
    upper_vertices.extend(n + 1..2 * n);
    upper_vertices.push(n);
    Ok((
        Front { steps: lower, vertex_ids: lower_vertices },
        Front { steps: upper, vertex_ids: upper_vertices },
    ))
}

/// Interior angles of the zonogon spanned by one segment per direction,
/// in counterclockwise order. Edges are taken by increasing angle starting
/// with the smallest direction; entry `j` is the angle between edge `j` and
/// edge `j+1`.
pub fn zonogon_angles(dirs: &[DirectionIndex], k: usize) -> Result<Vec<u32>> {
    let mut sorted: Vec<DirectionIndex> = dirs.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() < 2 {
        return Err(Error::DegenerateTile(format!(
            "a tile needs at least two distinct directions, got {}",
            sorted.len()
        )));
    }
    if let Some(d) = sorted.iter().find(|d| d.get() > k) {
        return Err(Error::InvalidParameter(format!("direction {d} outside 1..={k}")));
    }
    let k32 = k as u32;
    let edge_angles: Vec<u32> = sorted
        .iter()
        .map(|d| d.angle())
        .chain(sorted.iter().map(|d| d.angle() + k32))
        .collect();
    let len = edge_angles.len();
    Ok((0..len)
        .map(|j| {
            let a = edge_angles[j];
            let b = edge_angles[(j + 1) % len];
            let turn = (b + 2 * k32 - a) % (2 * k32);
            k32 - turn
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub dir: DirectionIndex,
    pub wire: WireId,
    /// `v[0] -> v[1]` points along the positive direction vector.
    pub v: [VertexId; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    /// Distinct directions of the tile, ascending.
    pub dirs: Vec<DirectionIndex>,
    /// Boundary edges in counterclockwise order.
    pub boundary: Vec<EdgeId>,
}

impl Face {
    /// Number of sides of the tile.
    pub fn sides(&self) -> usize {
        self.boundary.len()
    }
}

/// The cell complex of one decomposition. The derived order compares
/// multiplicities first, then the raw incidence tables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TilingComplex {
    pub mult: Multiplicities,
    pub num_vertices: u32,
    pub wires: Vec<Wire>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    /// Sides `E_1..E_2k` in counterclockwise order, each listing its edges
    /// counterclockwise. Side `E_j` is parallel to direction `((j-1) mod k)+1`.
    pub boundary_sides: Vec<Vec<EdgeId>>,
}

impl TilingComplex {
    pub fn k(&self) -> usize {
        self.mult.k()
    }

    pub fn topology(&self) -> Result<Topology> {
        Topology::build(self)
    }

    /// Mirror image under the reflection fixing direction 1.
    pub fn mirrored(&self) -> TilingComplex {
        let k = self.k();
        let map_dir = |d: DirectionIndex| DirectionIndex::from_zero_based((k - d.zero_based()) % k);
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                dir: map_dir(e.dir),
                wire: e.wire,
                v: if e.dir.get() == 1 { e.v } else { [e.v[1], e.v[0]] },
            })
            .collect();
        let faces = self
            .faces
            .iter()
            .map(|f| {
                let mut dirs: Vec<_> = f.dirs.iter().map(|&d| map_dir(d)).collect();
                dirs.sort();
                Face { dirs, boundary: f.boundary.iter().rev().copied().collect() }
            })
            .collect();
        let two_k = 2 * k;
        let mut boundary_sides = vec![Vec::new(); two_k];
        for (j, side) in self.boundary_sides.iter().enumerate() {
            boundary_sides[(two_k - j) % two_k] = side.iter().rev().copied().collect();
        }
        let mut m = vec![0; k];
        for d in 0..k {
            m[map_dir(DirectionIndex::from_zero_based(d)).zero_based()] = self.mult.m[d];
        }
        let wires = self
            .wires
            .iter()
            .map(|w| Wire { dir: map_dir(w.dir), ..*w })
            .collect();
        TilingComplex {
            mult: Multiplicities { k, m },
            num_vertices: self.num_vertices,
            wires,
            edges,
            faces,
            boundary_sides,
        }
    }

    /// Copy with vertex, edge and face identifiers permuted. Each
    /// permutation maps an old id to a new id.
    pub fn relabeled(&self, vperm: &[u32], eperm: &[u32], fperm: &[u32]) -> TilingComplex {
        let mut edges = self.edges.clone();
        for (old, e) in self.edges.iter().enumerate() {
            edges[eperm[old] as usize] = Edge {
                v: [vperm[e.v[0] as usize], vperm[e.v[1] as usize]],
                ..e.clone()
            };
        }
        let mut faces = self.faces.clone();
        for (old, f) in self.faces.iter().enumerate() {
            let mut boundary: Vec<EdgeId> = f.boundary.iter().map(|&e| eperm[e as usize]).collect();
            // Start the cycle elsewhere too.
            let shift = old % boundary.len();
            boundary.rotate_left(shift);
            faces[fperm[old] as usize] = Face { dirs: f.dirs.clone(), boundary };
        }
        let boundary_sides = self
            .boundary_sides
            .iter()
            .map(|s| s.iter().map(|&e| eperm[e as usize]).collect())
            .collect();
        TilingComplex { edges, faces, boundary_sides, ..self.clone() }
    }
}

/// Number of edges on each side `E_1..E_2k`.
pub fn boundary_signature(c: &TilingComplex) -> Result<Vec<usize>> {
    let k = c.k();
    if c.boundary_sides.len() != 2 * k {
        return Err(integrity!(
            "expected {} boundary sides, found {}",
            2 * k,
            c.boundary_sides.len()
        ));
    }
    let sig: Vec<usize> = c.boundary_sides.iter().map(Vec::len).collect();
    for i in 0..k {
        if sig[i] != sig[i + k] {
            return Err(integrity!(
                "opposite sides E_{} and E_{} carry {} and {} edges",
                i + 1,
                i + k + 1,
                sig[i],
                sig[i + k]
            ));
        }
    }
    Ok(sig)
}

/// Interior sector of one face at one of its vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub face: FaceId,
    /// Absolute angle of the face's outgoing edge, in `0..2k`.
    pub start: u32,
    /// Interior angle, in `1..k`.
    pub width: u32,
    pub mask: AngleMask,
}

/// Derived incidence data of a complex.
#[derive(Debug, Clone)]
pub struct Topology {
    pub k: usize,
    /// Vertex `j` of a face is the tail of its `j`-th boundary edge.
    pub face_vertices: Vec<Vec<VertexId>>,
    /// Whether the `j`-th boundary edge is traversed along its positive
    /// direction.
    pub face_forward: Vec<Vec<bool>>,
    /// Interior angle at each face vertex.
    pub face_angles: Vec<Vec<u32>>,
    /// Corners around each vertex, sorted by start angle.
    pub vertex_corners: Vec<Vec<Corner>>,
    /// Faces to the left and right of each edge (relative to its positive
    /// direction).
    pub edge_faces: Vec<[Option<FaceId>; 2]>,
    pub is_boundary_vertex: Vec<bool>,
    /// Directed edges leaving each vertex, sorted counterclockwise by angle.
    /// Each entry is `(edge, leaves_from_v0)`.
    pub rotation: Vec<Vec<(EdgeId, bool)>>,
}

impl Topology {
    pub fn build(c: &TilingComplex) -> Result<Topology> {
        let k = c.k();
        check_k(k)?;
        let two_k = 2 * k as u32;
        let nv = c.num_vertices as usize;
        for (id, e) in c.edges.iter().enumerate() {
            if e.dir.get() == 0 || e.dir.get() > k {
                return Err(integrity!("edge {id} has direction {} outside 1..={k}", e.dir));
            }
            if e.v.iter().any(|&v| v as usize >= nv) || e.v[0] == e.v[1] {
                return Err(integrity!("edge {id} has bad endpoints {:?}", e.v));
            }
        }

        let mut face_vertices = Vec::with_capacity(c.faces.len());
        let mut face_forward = Vec::with_capacity(c.faces.len());
        let mut face_angles = Vec::with_capacity(c.faces.len());
        let mut vertex_corners = vec![Vec::new(); nv];
        let mut edge_faces = vec![[None, None]; c.edges.len()];

        for (fid, f) in c.faces.iter().enumerate() {
            let len = f.boundary.len();
            if len < 4 {
                return Err(integrity!("face {fid} has only {len} edges"));
            }
            if f.boundary.iter().any(|&e| e as usize >= c.edges.len()) {
                return Err(integrity!("face {fid} references a missing edge"));
            }
            let forward = walk_orientation(c, &f.boundary)
                .ok_or_else(|| integrity!("boundary of face {fid} is not a closed walk"))?;
            let tails: Vec<VertexId> = f
                .boundary
                .iter()
                .zip(&forward)
                .map(|(&e, &fw)| {
                    let e = &c.edges[e as usize];
                    if fw { e.v[0] } else { e.v[1] }
                })
                .collect();
            let travel: Vec<u32> = f
                .boundary
                .iter()
                .zip(&forward)
                .map(|(&e, &fw)| c.edges[e as usize].dir.angle() + if fw { 0 } else { k as u32 })
                .collect();
            let mut angles = Vec::with_capacity(len);
            for j in 0..len {
                let incoming = travel[(j + len - 1) % len];
                let outgoing = travel[j];
                let turn = (outgoing + two_k - incoming) % two_k;
                if turn == 0 || turn >= k as u32 {
                    return Err(integrity!("face {fid} is not a convex counterclockwise polygon"));
                }
                let width = k as u32 - turn;
                angles.push(width);
                vertex_corners[tails[j] as usize].push(Corner {
                    face: fid as FaceId,
                    start: outgoing,
                    width,
                    mask: sector_mask(outgoing, width, k),
                });
            }
            for (&e, &fw) in f.boundary.iter().zip(&forward) {
                let slot = &mut edge_faces[e as usize][if fw { 0 } else { 1 }];
                if slot.is_some() {
                    return Err(integrity!("edge {e} has two faces on the same side"));
                }
                *slot = Some(fid as FaceId);
            }
            face_vertices.push(tails);
            face_forward.push(forward);
            face_angles.push(angles);
        }
        for corners in &mut vertex_corners {
            corners.sort_by_key(|c| c.start);
        }

        let mut is_boundary_vertex = vec![false; nv];
        for side in &c.boundary_sides {
            for &e in side {
                let e = c
                    .edges
                    .get(e as usize)
                    .ok_or_else(|| integrity!("boundary side references missing edge {e}"))?;
                is_boundary_vertex[e.v[0] as usize] = true;
                is_boundary_vertex[e.v[1] as usize] = true;
            }
        }

        let mut rotation = vec![Vec::new(); nv];
        for (id, e) in c.edges.iter().enumerate() {
            rotation[e.v[0] as usize].push((id as EdgeId, true));
            rotation[e.v[1] as usize].push((id as EdgeId, false));
        }
        for darts in &mut rotation {
            darts.sort_by_key(|&(e, from_v0)| {
                c.edges[e as usize].dir.angle() + if from_v0 { 0 } else { k as u32 }
            });
        }

        Ok(Topology {
            k,
            face_vertices,
            face_forward,
            face_angles,
            vertex_corners,
            edge_faces,
            is_boundary_vertex,
            rotation,
        })
    }

    /// Faces on either side of an edge.
    pub fn faces_of_edge(&self, e: EdgeId) -> impl Iterator<Item = FaceId> + '_ {
        self.edge_faces[e as usize].iter().flatten().copied()
    }

    /// Sum of the face angles at a vertex.
    pub fn angle_sum(&self, v: VertexId) -> u32 {
        self.vertex_corners[v as usize].iter().map(|c| c.width).sum()
    }
}

/// Orientation of each edge along a closed walk, or `None` if consecutive
/// edges do not connect.
pub(crate) fn walk_orientation(c: &TilingComplex, boundary: &[EdgeId]) -> Option<Vec<bool>> {
    let len = boundary.len();
    'first: for first in [true, false] {
        let mut forward = Vec::with_capacity(len);
        forward.push(first);
        let e0 = &c.edges[boundary[0] as usize];
        let start = if first { e0.v[0] } else { e0.v[1] };
        let mut head = if first { e0.v[1] } else { e0.v[0] };
        for &eid in &boundary[1..] {
            let e = &c.edges[eid as usize];
            if e.v[0] == head {
                forward.push(true);
                head = e.v[1];
            } else if e.v[1] == head {
                forward.push(false);
                head = e.v[0];
            } else {
                continue 'first;
            }
        }
        if head == start {
            return Some(forward);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dirs(ds: &[usize], k: usize) -> Vec<DirectionIndex> {
        ds.iter().map(|&d| DirectionIndex::new(d, k).unwrap()).collect()
    }

    fn order(k: usize) -> Vec<usize> {
        slope_rank(k).unwrap().order().iter().map(|d| d.get()).collect()
    }

    #[test]
    fn slope_rank_orders() {
        assert_eq!(order(4), vec![3, 4, 1, 2]);
        assert_eq!(order(3), vec![3, 1, 2]);
        assert_eq!(order(2), vec![2, 1]);
        assert!(slope_rank(1).is_err());
    }

    #[test]
    fn slope_rank_is_a_bijection() {
        for k in 2..=12 {
            let r = slope_rank(k).unwrap();
            let mut seen = vec![false; k];
            for d in 0..k {
                seen[r.rank(DirectionIndex::from_zero_based(d))] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    fn dir_steps(mult: &Multiplicities, f: &Front) -> Vec<usize> {
        let wires = mult.wires();
        f.steps.iter().map(|&w| wires[w as usize].dir.get()).collect()
    }

    #[test]
    fn boundary_paths_examples() {
        let m = Multiplicities::new(vec![1, 1, 1]).unwrap();
        let (lo, hi) = boundary_paths(&m).unwrap();
        assert_eq!(dir_steps(&m, &lo), vec![3, 1, 2]);
        assert_eq!(dir_steps(&m, &hi), vec![2, 1, 3]);

        let m = Multiplicities::new(vec![2, 1, 1, 1]).unwrap();
        let (lo, _) = boundary_paths(&m).unwrap();
        assert_eq!(dir_steps(&m, &lo), vec![3, 4, 1, 1, 2]);
        let wires = m.wires();
        assert_eq!(wires[lo.steps[2] as usize].class_index, 1);
        assert_eq!(wires[lo.steps[3] as usize].class_index, 2);

        let m = Multiplicities::new(vec![1, 1, 1, 1]).unwrap();
        let (lo, hi) = boundary_paths(&m).unwrap();
        assert_eq!(dir_steps(&m, &lo), vec![3, 4, 1, 2]);
        assert_eq!(dir_steps(&m, &hi), vec![2, 1, 4, 3]);
        assert_eq!(lo.vertex_ids.first(), hi.vertex_ids.first());
        assert_eq!(lo.vertex_ids.last(), hi.vertex_ids.last());
    }

    #[test]
    fn final_front_keeps_class_order() {
        let m = Multiplicities::new(vec![3, 2, 1, 2]).unwrap();
        let (_, hi) = boundary_paths(&m).unwrap();
        let wires = m.wires();
        for pair in hi.steps.windows(2) {
            let (a, b) = (wires[pair[0] as usize], wires[pair[1] as usize]);
            if a.dir == b.dir {
                assert!(a.class_index < b.class_index);
            }
        }
    }

    #[test]
    fn zonogon_angle_examples() {
        assert_eq!(zonogon_angles(&dirs(&[1, 3], 4), 4).unwrap(), vec![2, 2, 2, 2]);
        assert_eq!(zonogon_angles(&dirs(&[1, 2, 3], 4), 4).unwrap(), vec![3, 3, 2, 3, 3, 2]);
        assert_eq!(zonogon_angles(&dirs(&[1, 2, 3, 4], 4), 4).unwrap(), vec![3; 8]);
        assert!(matches!(
            zonogon_angles(&dirs(&[2], 4), 4),
            Err(Error::DegenerateTile(_))
        ));
    }

    #[test]
    fn zonogon_angles_sum_and_range() {
        for k in 2..=8usize {
            for set in 1u32..(1 << k) {
                let ds: Vec<usize> = (0..k).filter(|i| set >> i & 1 == 1).map(|i| i + 1).collect();
                if ds.len() < 2 {
                    continue;
                }
                let a = zonogon_angles(&dirs(&ds, k), k).unwrap();
                let s = ds.len() as u32;
                assert_eq!(a.len(), 2 * ds.len());
                assert_eq!(a.iter().sum::<u32>(), (2 * s - 2) * k as u32);
                assert!(a.iter().all(|&x| x >= 1 && x <= k as u32));
            }
        }
    }

    #[test]
    fn multiplicity_cap() {
        assert!(Multiplicities::new(vec![5, 1, 1, 1]).is_ok());
        assert!(Multiplicities::new(vec![6, 1, 1, 1]).is_err());
        assert!(Multiplicities::new(vec![2, 1]).is_err());
        assert!(Multiplicities::new(vec![0, 1, 1]).is_err());
        assert!(Multiplicities::uncapped(vec![6, 1, 1, 1]).is_ok());
    }

    #[test]
    fn sector_masks_wrap() {
        assert_eq!(sector_mask(7, 2, 4), 0b1000_0001);
        assert_eq!(full_mask(4), 0xff);
        assert_eq!(full_mask(32), u64::MAX);
    }
}
