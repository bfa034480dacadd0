//! Irreducibility: no proper subfamily of at least two tiles may have a
//! convex union.
//!
//! The decision procedure grows the smallest convex tile union containing
//! an adjacent pair. Around a vertex, the union occupies some angular
//! sectors; the convex hull of those sectors is either the whole
//! neighbourhood (span above `π`) or the cone they span, and every tile
//! meeting that hull must belong to any convex superset. Repeating until no
//! vertex forces anything yields a union that is locally convex everywhere,
//! hence convex. Holes need no separate treatment: a hole has convex
//! corners, which are reflex for the union and get filled.

use std::collections::VecDeque;

use crate::complex::{AngleMask, Corner, FaceId, TilingComplex, Topology, VertexId};
use crate::error::{Error, Result};

/// Angular data the closure needs. Implemented by finished complexes and by
/// the partial complexes of the sweep.
pub(crate) trait AngularView {
    fn k(&self) -> usize;
    fn face_count(&self) -> usize;
    fn corners_at(&self, v: VertexId) -> &[Corner];
    fn face_vertices(&self, f: FaceId) -> &[VertexId];
    /// Sectors at `v` that are neither outside the polygon nor covered by a
    /// placed face.
    fn unresolved(&self, v: VertexId) -> AngleMask;
}

impl AngularView for Topology {
    fn k(&self) -> usize {
        self.k
    }
    fn face_count(&self) -> usize {
        self.face_vertices.len()
    }
    fn corners_at(&self, v: VertexId) -> &[Corner] {
        &self.vertex_corners[v as usize]
    }
    fn face_vertices(&self, f: FaceId) -> &[VertexId] {
        &self.face_vertices[f as usize]
    }
    fn unresolved(&self, _v: VertexId) -> AngleMask {
        0
    }
}

/// Outcome of [`convex_closure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexClosureResult {
    /// Faces of the closure, ascending.
    pub tiles: Vec<FaceId>,
    pub convex: bool,
    pub is_whole: bool,
}

impl ConvexClosureResult {
    /// A convex proper union of at least two tiles.
    pub fn is_witness(&self) -> bool {
        self.convex && !self.is_whole && self.tiles.len() >= 2
    }
}

/// Reusable buffers for repeated closures over one view.
#[derive(Debug, Default)]
pub(crate) struct ClosureScratch {
    stamp: u32,
    face_mark: Vec<u32>,
    vertex_mark: Vec<u32>,
    queue: VecDeque<VertexId>,
    pub members: Vec<FaceId>,
}

impl ClosureScratch {
    fn reset(&mut self, faces: usize, vertices: usize) {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.face_mark.iter_mut().for_each(|m| *m = 0);
            self.vertex_mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        if self.face_mark.len() < faces {
            self.face_mark.resize(faces, 0);
        }
        if self.vertex_mark.len() < vertices {
            self.vertex_mark.resize(vertices, 0);
        }
        self.queue.clear();
        self.members.clear();
    }

    fn contains(&self, f: FaceId) -> bool {
        self.face_mark[f as usize] == self.stamp
    }

    fn add<V: AngularView>(&mut self, view: &V, f: FaceId) {
        self.face_mark[f as usize] = self.stamp;
        self.members.push(f);
        for &v in view.face_vertices(f) {
            if self.vertex_mark[v as usize] != self.stamp {
                self.vertex_mark[v as usize] = self.stamp;
                self.queue.push_back(v);
            }
        }
    }

    fn requeue(&mut self, v: VertexId) {
        self.vertex_mark[v as usize] = self.stamp.wrapping_sub(1);
    }
}

/// Longest cyclic run of set bits of `free` on a circle of `n` bits, as a
/// mask, together with its length. `free` must not be full.
fn longest_free_run(free: AngleMask, n: u32) -> (AngleMask, u32) {
    let start = (0..n).find(|&b| free >> b & 1 == 0).expect("free mask is full");
    let mut best = (0, 0);
    let mut run = (0u64, 0u32);
    for t in 1..=n {
        let b = (start + t) % n;
        if free >> b & 1 == 1 {
            run.0 |= 1 << b;
            run.1 += 1;
            if run.1 > best.1 {
                best = run;
            }
        } else {
            run = (0, 0);
        }
    }
    best
}

/// Sectors at a vertex that any convex superset of the union must cover,
/// given the union's occupancy `occupied`.
pub(crate) fn forced_sectors(occupied: AngleMask, k: usize) -> AngleMask {
    let n = 2 * k as u32;
    let full = crate::complex::full_mask(k);
    if occupied == 0 || occupied == full {
        return 0;
    }
    let free = full & !occupied;
    let (gap, gap_len) = longest_free_run(free, n);
    if n - gap_len > k as u32 {
        free
    } else {
        free & !gap
    }
}

/// Grows `members` (already seeded in `scratch`) to the minimal convex
/// union. Returns `false` if the growth reached an unresolved sector.
fn grow<V: AngularView>(view: &V, scratch: &mut ClosureScratch) -> bool {
    let k = view.k();
    while let Some(v) = scratch.queue.pop_front() {
        // Allow the vertex to be queued again by later additions.
        scratch.requeue(v);
        let corners = view.corners_at(v);
        let occupied = corners
            .iter()
            .filter(|c| scratch.contains(c.face))
            .fold(0, |m, c| m | c.mask);
        let forced = forced_sectors(occupied, k);
        if forced == 0 {
            continue;
        }
        if forced & view.unresolved(v) != 0 {
            return false;
        }
        for c in corners {
            if c.mask & forced != 0 && !scratch.contains(c.face) {
                scratch.add(view, c.face);
            }
        }
    }
    true
}

/// Minimal convex union containing `seed`, or `None` when it cannot be
/// decided from the placed faces.
pub(crate) fn closure_in<V: AngularView>(
    view: &V,
    seed: &[FaceId],
    vertices: usize,
    scratch: &mut ClosureScratch,
) -> Option<usize> {
    scratch.reset(view.face_count(), vertices);
    for &f in seed {
        if !scratch.contains(f) {
            scratch.add(view, f);
        }
    }
    grow(view, scratch).then_some(scratch.members.len())
}

/// Whether the seed faces alone form a convex union (no growth).
pub(crate) fn seed_is_convex<V: AngularView>(
    view: &V,
    seed: &[FaceId],
    vertices: usize,
    scratch: &mut ClosureScratch,
) -> bool {
    scratch.reset(view.face_count(), vertices);
    for &f in seed {
        scratch.add(view, f);
    }
    let k = view.k();
    while let Some(v) = scratch.queue.pop_front() {
        let occupied = view
            .corners_at(v)
            .iter()
            .filter(|c| scratch.contains(c.face))
            .fold(0, |m, c| m | c.mask);
        if forced_sectors(occupied, k) != 0 {
            return false;
        }
    }
    true
}

fn check_tiles(c: &TilingComplex, tiles: &[FaceId]) -> Result<()> {
    if tiles.is_empty() {
        return Err(Error::ContractViolation("empty tile set".into()));
    }
    if let Some(f) = tiles.iter().find(|&&f| f as usize >= c.faces.len()) {
        return Err(Error::ContractViolation(format!("face {f} does not exist")));
    }
    Ok(())
}

fn shared_edge(c: &TilingComplex, a: FaceId, b: FaceId) -> bool {
    let fa = &c.faces[a as usize].boundary;
    c.faces[b as usize].boundary.iter().any(|e| fa.contains(e))
}

/// Whether the union of `tiles` is convex: its boundary is one simple
/// cycle and every boundary vertex carries at most `k` units of the union.
pub fn union_is_convex(c: &TilingComplex, tiles: &[FaceId]) -> Result<bool> {
    check_tiles(c, tiles)?;
    let topo = c.topology()?;
    let mut member = vec![false; c.faces.len()];
    for &f in tiles {
        member[f as usize] = true;
    }
    if !edge_connected(c, &member) {
        return Err(Error::ContractViolation("tile set is not edge-connected".into()));
    }
    Ok(union_is_convex_with(c, &topo, &member))
}

fn edge_connected(c: &TilingComplex, member: &[bool]) -> bool {
    let tiles: Vec<FaceId> = (0..member.len() as FaceId).filter(|&f| member[f as usize]).collect();
    let Some(&first) = tiles.first() else { return true };
    let mut seen = vec![false; member.len()];
    seen[first as usize] = true;
    let mut stack = vec![first];
    while let Some(f) = stack.pop() {
        for &g in &tiles {
            if !seen[g as usize] && shared_edge(c, f, g) {
                seen[g as usize] = true;
                stack.push(g);
            }
        }
    }
    tiles.iter().all(|&f| seen[f as usize])
}

/// Boundary-cycle form of the convexity test, independent of the closure.
pub(crate) fn union_is_convex_with(c: &TilingComplex, topo: &Topology, member: &[bool]) -> bool {
    let k = c.k() as u32;
    let nv = c.num_vertices as usize;
    let mut degree = vec![0u32; nv];
    let mut boundary_edges = Vec::new();
    for (e, faces) in topo.edge_faces.iter().enumerate() {
        let inside = faces.iter().flatten().filter(|&&f| member[f as usize]).count();
        if inside == 1 {
            let edge = &c.edges[e];
            degree[edge.v[0] as usize] += 1;
            degree[edge.v[1] as usize] += 1;
            boundary_edges.push(e);
        }
    }
    if boundary_edges.is_empty() {
        return false;
    }
    for v in 0..nv {
        match degree[v] {
            0 => {}
            2 => {
                let sum: u32 = topo.vertex_corners[v]
                    .iter()
                    .filter(|cn| member[cn.face as usize])
                    .map(|cn| cn.width)
                    .sum();
                if sum > k {
                    return false;
                }
            }
            _ => return false,
        }
    }
    // Single cycle: walk from one boundary edge and count.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for &e in &boundary_edges {
        let edge = &c.edges[e];
        adj[edge.v[0] as usize].push(e);
        adj[edge.v[1] as usize].push(e);
    }
    let first = boundary_edges[0];
    let start = c.edges[first].v[0];
    let mut prev = first;
    let mut at = c.edges[first].v[1];
    let mut steps = 1;
    while at != start {
        let next = *adj[at as usize].iter().find(|&&e| e != prev).expect("degree two");
        let edge = &c.edges[next];
        at = if edge.v[0] == at { edge.v[1] } else { edge.v[0] };
        prev = next;
        steps += 1;
    }
    steps == boundary_edges.len()
}

/// Minimal convex tile union containing two adjacent faces.
pub fn convex_closure(c: &TilingComplex, seed: (FaceId, FaceId)) -> Result<ConvexClosureResult> {
    check_tiles(c, &[seed.0, seed.1])?;
    if seed.0 == seed.1 || !shared_edge(c, seed.0, seed.1) {
        return Err(Error::ContractViolation(format!(
            "faces {} and {} do not share an edge",
            seed.0, seed.1
        )));
    }
    let topo = c.topology()?;
    let mut scratch = ClosureScratch::default();
    closure_in(&topo, &[seed.0, seed.1], c.num_vertices as usize, &mut scratch)
        .expect("finished complexes have no unresolved sectors");
    let mut tiles = scratch.members.clone();
    tiles.sort_unstable();
    let is_whole = tiles.len() == c.faces.len();
    Ok(ConvexClosureResult { tiles, convex: true, is_whole })
}

/// Decides irreducibility. Returns the first reducibility witness found,
/// if any.
pub fn is_irreducible(c: &TilingComplex) -> Result<(bool, Option<Vec<FaceId>>)> {
    if c.faces.len() < 2 {
        return Err(Error::ContractViolation(
            "a decomposition needs at least two tiles".into(),
        ));
    }
    let topo = c.topology()?;
    Ok(match find_witness(c, &topo) {
        Some(w) => (false, Some(w)),
        None => (true, None),
    })
}

pub(crate) fn find_witness(c: &TilingComplex, topo: &Topology) -> Option<Vec<FaceId>> {
    let mut scratch = ClosureScratch::default();
    for faces in &topo.edge_faces {
        if let [Some(a), Some(b)] = *faces {
            let size = closure_in(topo, &[a, b], c.num_vertices as usize, &mut scratch)
                .expect("finished complexes have no unresolved sectors");
            if size < c.faces.len() {
                let mut w = scratch.members.clone();
                w.sort_unstable();
                return Some(w);
            }
        }
    }
    None
}

/// Exhaustive reference check over every edge-connected tile subset of
/// size `2..|faces|`. Exponential; meant for complexes with at most
/// [`BRUTE_FORCE_MAX_FACES`] faces.
pub fn brute_force_irreducible(c: &TilingComplex) -> Result<bool> {
    let n = c.faces.len();
    if n < 2 {
        return Err(Error::ContractViolation(
            "a decomposition needs at least two tiles".into(),
        ));
    }
    if n > BRUTE_FORCE_MAX_FACES {
        return Err(Error::InvalidParameter(format!(
            "brute force limited to {BRUTE_FORCE_MAX_FACES} faces, got {n}"
        )));
    }
    let topo = c.topology()?;
    let mut adj = vec![0u32; n];
    for faces in &topo.edge_faces {
        if let [Some(a), Some(b)] = *faces {
            adj[a as usize] |= 1 << b;
            adj[b as usize] |= 1 << a;
        }
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut member = vec![false; n];
    for set in 1..full {
        if set.count_ones() < 2 {
            continue;
        }
        // Connectivity by flood fill over the adjacency masks.
        let mut reach = set & set.wrapping_neg();
        loop {
            let mut next = reach;
            let mut bits = reach;
            while bits != 0 {
                let f = bits.trailing_zeros();
                next |= adj[f as usize] & set;
                bits &= bits - 1;
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        if reach != set {
            continue;
        }
        for (f, m) in member.iter_mut().enumerate() {
            *m = set >> f & 1 == 1;
        }
        if union_is_convex_with(c, &topo, &member) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const BRUTE_FORCE_MAX_FACES: usize = 22;
