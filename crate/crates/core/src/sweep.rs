//! Incremental partial complex driven by tile-placement moves.
//!
//! The front starts as the lower boundary chain of the polygon. A move
//! takes a block of consecutive front steps whose directions have strictly
//! increasing slope rank, places the zonogon whose lower boundary is that
//! block, and replaces the block by the tile's upper boundary (the same
//! wires in reverse order). Each pair of wires in the block is thereby
//! crossed. The sweep ends when the front equals the upper boundary chain.
//!
//! All storage is stack-like so that moves can be undone in reverse order.

use crate::complex::{
    boundary_paths, full_mask, sector_mask, AngleMask, Corner, DirectionIndex, Edge, EdgeId,
    Face, FaceId, Front, Multiplicities, TilingComplex, VertexId, Wire, WireId,
};
use crate::error::{Error, Result};
use crate::irreducible::AngularView;

/// One tile placement: the block `start..start+len` of the front.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub start: usize,
    /// Directions of the block, left to right (strictly increasing rank).
    pub dirs: Vec<DirectionIndex>,
}

impl Move {
    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn end(&self) -> usize {
        self.start + self.dirs.len()
    }
}

/// Every block of length at least two with strictly increasing slope rank,
/// ordered by start position and then length.
pub fn admissible_moves(front: &Front, mult: &Multiplicities) -> Result<Vec<Move>> {
    let k = mult.k();
    let rank = crate::complex::slope_rank(k)?;
    let wires = mult.wires();
    let dir_of = |w: WireId| -> Result<DirectionIndex> {
        wires
            .get(w as usize)
            .map(|w| w.dir)
            .ok_or_else(|| Error::InvalidParameter(format!("front names unknown wire {w}")))
    };
    let dirs: Vec<DirectionIndex> = front.steps.iter().map(|&w| dir_of(w)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for s in 0..dirs.len() {
        let mut end = s + 1;
        while end < dirs.len() && rank.rank(dirs[end]) > rank.rank(dirs[end - 1]) {
            end += 1;
            out.push(Move { start: s, dirs: dirs[s..end].to_vec() });
        }
    }
    Ok(out)
}

/// Partial complex of an ongoing sweep.
#[derive(Debug, Clone)]
pub struct Sweep {
    k: usize,
    full: AngleMask,
    mult: Multiplicities,
    wires: Vec<Wire>,
    wire_rank: Vec<u8>,
    wire_phi: Vec<i32>,
    total_crossings: usize,
    crossings: usize,

    front: Vec<WireId>,
    front_edges: Vec<EdgeId>,
    front_verts: Vec<VertexId>,
    initial_front: Vec<WireId>,

    edges: Vec<Edge>,
    /// Face whose upper boundary created the edge.
    edge_below: Vec<Option<FaceId>>,

    face_start: Vec<usize>,
    face_edges: Vec<EdgeId>,
    face_verts: Vec<VertexId>,
    face_blocks: Vec<(u32, u32)>,

    num_vertices: usize,
    vertex_corners: Vec<Vec<Corner>>,
    vertex_outside: Vec<AngleMask>,
}

impl Sweep {
    pub fn new(mult: &Multiplicities) -> Result<Sweep> {
        let k = mult.k();
        let rank = crate::complex::slope_rank(k)?;
        let (lower, _) = boundary_paths(mult)?;
        let wires = mult.wires();
        let n = wires.len();
        let wire_rank = wires.iter().map(|w| rank.rank(w.dir) as u8).collect();
        let wire_phi: Vec<i32> = wires.iter().map(|w| w.dir.representative_angle(k)).collect();
        let mut total_crossings = 0;
        for a in 0..n {
            for b in a + 1..n {
                if wires[a].dir != wires[b].dir {
                    total_crossings += 1;
                }
            }
        }

        let mut sweep = Sweep {
            k,
            full: full_mask(k),
            mult: mult.clone(),
            wire_rank,
            wire_phi,
            total_crossings,
            crossings: 0,
            front: lower.steps.clone(),
            front_edges: Vec::with_capacity(n),
            front_verts: lower.vertex_ids.clone(),
            initial_front: lower.steps,
            edges: Vec::new(),
            edge_below: Vec::new(),
            face_start: vec![0],
            face_edges: Vec::new(),
            face_verts: Vec::new(),
            face_blocks: Vec::new(),
            num_vertices: n + 1,
            vertex_corners: vec![Vec::new(); n + 1],
            vertex_outside: vec![0; n + 1],
            wires,
        };

        // Lower chain edges, left to right.
        for (j, &w) in sweep.front.clone().iter().enumerate() {
            let (a, b) = (j as VertexId, j as VertexId + 1);
            let e = sweep.new_edge(w, a, b);
            sweep.front_edges.push(e);
            sweep.edge_below.push(None);
        }

        // Region outside the polygon at each lower-chain vertex.
        let k32 = k as i32;
        let two_k = 2 * k32;
        let phi = |w: WireId| sweep.wire_phi[w as usize];
        let first = phi(sweep.front[0]);
        let last = phi(sweep.front[n - 1]);
        let span = (last - first) as u32;
        let mut interior = vec![0; n + 1];
        interior[0] = sector_mask(first.rem_euclid(two_k) as u32, span, k);
        interior[n] = sector_mask((first + k32).rem_euclid(two_k) as u32, span, k);
        for j in 1..n {
            let (a, b) = (phi(sweep.front[j - 1]), phi(sweep.front[j]));
            interior[j] = sector_mask(b.rem_euclid(two_k) as u32, (k32 - (b - a)) as u32, k);
        }
        for (v, m) in interior.into_iter().enumerate() {
            sweep.vertex_outside[v] = sweep.full & !m;
        }
        Ok(sweep)
    }

    fn new_edge(&mut self, w: WireId, left: VertexId, right: VertexId) -> EdgeId {
        let id = self.edges.len() as EdgeId;
        let v = if self.wire_phi[w as usize] >= 0 { [left, right] } else { [right, left] };
        self.edges.push(Edge { dir: self.wires[w as usize].dir, wire: w, v });
        id
    }

    fn new_vertex(&mut self) -> VertexId {
        let id = self.num_vertices;
        self.num_vertices += 1;
        if self.vertex_corners.len() < self.num_vertices {
            self.vertex_corners.push(Vec::new());
            self.vertex_outside.push(0);
        } else {
            self.vertex_corners[id].clear();
            self.vertex_outside[id] = 0;
        }
        id as VertexId
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn multiplicities(&self) -> &Multiplicities {
        &self.mult
    }

    pub fn front(&self) -> Front {
        Front { steps: self.front.clone(), vertex_ids: self.front_verts.clone() }
    }

    pub fn face_count(&self) -> usize {
        self.face_blocks.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.num_vertices
    }

    pub fn is_complete(&self) -> bool {
        self.crossings == self.total_crossings
    }

    pub(crate) fn front_len(&self) -> usize {
        self.front.len()
    }

    /// Whether the front steps `s` and `s+1` can belong to one move.
    #[inline]
    pub(crate) fn ascending_at(&self, s: usize) -> bool {
        self.wire_rank[self.front[s + 1] as usize] > self.wire_rank[self.front[s] as usize]
    }

    /// Lower boundary edges of a face.
    pub(crate) fn lower_edges(&self, f: FaceId) -> &[EdgeId] {
        let start = self.face_start[f as usize];
        let len = self.face_blocks[f as usize].1 as usize;
        &self.face_edges[start..start + len]
    }

    pub(crate) fn face_below(&self, e: EdgeId) -> Option<FaceId> {
        self.edge_below[e as usize]
    }

    pub fn admissible_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for s in 0..self.front.len() {
            let mut end = s + 1;
            while end < self.front.len() && self.ascending_at(end - 1) {
                end += 1;
                out.push(self.move_at(s, end - s));
            }
        }
        out
    }

    pub(crate) fn move_at(&self, start: usize, len: usize) -> Move {
        Move {
            start,
            dirs: self.front[start..start + len]
                .iter()
                .map(|&w| self.wires[w as usize].dir)
                .collect(),
        }
    }

    /// Places the tile for `mv`, returning the new face.
    pub fn apply(&mut self, mv: &Move) -> Result<FaceId> {
        let (s, len) = (mv.start, mv.len());
        let admissible = len >= 2
            && s + len <= self.front.len()
            && (s..s + len - 1).all(|j| self.ascending_at(j))
            && self.front[s..s + len]
                .iter()
                .zip(&mv.dirs)
                .all(|(&w, &d)| self.wires[w as usize].dir == d);
        if !admissible {
            return Err(Error::ContractViolation(format!("move {mv:?} is not admissible")));
        }
        Ok(self.apply_block(s, len))
    }

    /// Places the tile on the front block `s..s+len`, which must be
    /// admissible.
    pub(crate) fn apply_block(&mut self, s: usize, len: usize) -> FaceId {
        let k = self.k as i32;
        let two_k = 2 * k;
        let face = self.face_blocks.len() as FaceId;

        // Upper path, left to right: p_0, q_1..q_{len-1}, p_len.
        let mut upper_verts = [0 as VertexId; 2 * crate::complex::MAX_K + 1];
        upper_verts[0] = self.front_verts[s];
        for t in 1..len {
            upper_verts[t] = self.new_vertex();
        }
        upper_verts[len] = self.front_verts[s + len];

        // Counterclockwise boundary: lower edges left to right, then the
        // upper edges right to left.
        let base = self.face_edges.len();
        for j in 0..len {
            self.face_edges.push(self.front_edges[s + j]);
            self.face_verts.push(self.front_verts[s + j]);
        }
        let mut upper_edges = [0 as EdgeId; 2 * crate::complex::MAX_K];
        for t in 0..len {
            let w = self.front[s + len - 1 - t];
            upper_edges[t] = self.new_edge(w, upper_verts[t], upper_verts[t + 1]);
            self.edge_below.push(Some(face));
        }
        for t in (0..len).rev() {
            self.face_edges.push(upper_edges[t]);
            self.face_verts.push(upper_verts[t + 1]);
        }
        self.face_start.push(self.face_edges.len());
        self.face_blocks.push((s as u32, len as u32));

        // Travel angles around the face: phi_j, then phi_j + k.
        let size = 2 * len;
        let mut travel = [0i32; 2 * crate::complex::MAX_K];
        for (j, t) in travel.iter_mut().enumerate().take(size) {
            let phi = self.wire_phi[self.front[s + j % len] as usize];
            *t = (if j < len { phi } else { phi + k }).rem_euclid(two_k);
        }
        for j in 0..size {
            let incoming = travel[(j + size - 1) % size];
            let outgoing = travel[j];
            let width = (k - (outgoing - incoming).rem_euclid(two_k)) as u32;
            let v = self.face_verts[base + j];
            self.vertex_corners[v as usize].push(Corner {
                face,
                start: outgoing as u32,
                width,
                mask: sector_mask(outgoing as u32, width, self.k),
            });
        }

        // New front.
        self.front[s..s + len].reverse();
        for t in 0..len {
            self.front_edges[s + t] = upper_edges[t];
        }
        for t in 1..len {
            self.front_verts[s + t] = upper_verts[t];
        }
        self.crossings += len * (len - 1) / 2;
        face
    }

    /// Removes the most recently placed face.
    pub fn undo(&mut self) {
        let face = self.face_blocks.len() - 1;
        let (s, len) = self.face_blocks.pop().expect("no face to undo");
        let (s, len) = (s as usize, len as usize);
        let base = self.face_start[face];
        self.face_start.pop();
        for j in 0..2 * len {
            let v = self.face_verts[base + j];
            self.vertex_corners[v as usize].pop();
        }
        for j in 0..len {
            self.front_edges[s + j] = self.face_edges[base + j];
            self.front_verts[s + j] = self.face_verts[base + j];
        }
        self.front[s..s + len].reverse();
        self.face_edges.truncate(base);
        self.face_verts.truncate(base);
        self.edges.truncate(self.edges.len() - len);
        self.edge_below.truncate(self.edges.len());
        self.num_vertices -= len - 1;
        self.crossings -= len * (len - 1) / 2;
    }

    /// Snapshot of a finished sweep as a complex.
    pub fn to_complex(&self) -> Result<TilingComplex> {
        if !self.is_complete() {
            return Err(Error::ContractViolation("sweep is not complete".into()));
        }
        let k = self.k;
        let faces = (0..self.face_blocks.len())
            .map(|f| {
                let boundary = self.face_edges[self.face_start[f]..self.face_start[f + 1]].to_vec();
                let mut dirs: Vec<DirectionIndex> =
                    boundary.iter().map(|&e| self.edges[e as usize].dir).collect();
                dirs.sort();
                dirs.dedup();
                Face { dirs, boundary }
            })
            .collect();

        let side_of = |w: WireId, lower: bool| -> usize {
            let d = self.wires[w as usize].dir.zero_based();
            let lower_side = if self.wire_phi[w as usize] >= 0 { d } else { d + k };
            if lower { lower_side } else { (lower_side + k) % (2 * k) }
        };
        let mut boundary_sides = vec![Vec::new(); 2 * k];
        for (j, &w) in self.initial_front.iter().enumerate() {
            boundary_sides[side_of(w, true)].push(j as EdgeId);
        }
        for (&w, &e) in self.front.iter().zip(&self.front_edges).rev() {
            boundary_sides[side_of(w, false)].push(e);
        }

        Ok(TilingComplex {
            mult: self.mult.clone(),
            num_vertices: self.num_vertices as u32,
            wires: self.wires.clone(),
            edges: self.edges.clone(),
            faces,
            boundary_sides,
        })
    }
}

impl AngularView for Sweep {
    fn k(&self) -> usize {
        self.k
    }

    fn face_count(&self) -> usize {
        self.face_blocks.len()
    }

    fn corners_at(&self, v: VertexId) -> &[Corner] {
        &self.vertex_corners[v as usize]
    }

    fn face_vertices(&self, f: FaceId) -> &[VertexId] {
        &self.face_verts[self.face_start[f as usize]..self.face_start[f as usize + 1]]
    }

    fn unresolved(&self, v: VertexId) -> AngleMask {
        let occupied = self.vertex_corners[v as usize].iter().fold(0, |m, c| m | c.mask);
        self.full & !(occupied | self.vertex_outside[v as usize])
    }
}
