//! Independent re-check of a complex against the definitions.
//!
//! Nothing here uses [`Topology`](crate::complex::Topology) or the sweep;
//! every quantity is recomputed from the raw incidence tables so that a
//! generator bug cannot hide behind a shared helper. Irreducibility is the
//! one check delegated to [`crate::irreducible`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complex::{side_cap, DirectionIndex, Edge, EdgeId, Face, TilingComplex, Wire};
use crate::irreducible::is_irreducible;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    FaceClosure,
    ZonogonShape,
    EdgeToEdge,
    VertexAngles,
    Euler,
    Boundary,
    SideCap,
    CrossingEdges,
    Irreducible,
    PerpendicularEdges,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::FaceClosure,
        Check::ZonogonShape,
        Check::EdgeToEdge,
        Check::VertexAngles,
        Check::Euler,
        Check::Boundary,
        Check::SideCap,
        Check::CrossingEdges,
        Check::Irreducible,
        Check::PerpendicularEdges,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::FaceClosure => "face-closure",
            Check::ZonogonShape => "zonogon-shape",
            Check::EdgeToEdge => "edge-to-edge",
            Check::VertexAngles => "vertex-angles",
            Check::Euler => "euler",
            Check::Boundary => "boundary",
            Check::SideCap => "side-cap",
            Check::CrossingEdges => "crossing-edges",
            Check::Irreducible => "irreducible",
            Check::PerpendicularEdges => "perpendicular-edges",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub check: Check,
    pub passed: bool,
    /// First problem found, empty when the check passed.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.findings.iter().all(|f| f.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| !f.passed)
    }

    pub fn get(&self, check: Check) -> Option<&Finding> {
        self.findings.iter().find(|f| f.check == check)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for finding in &self.findings {
            let status = if finding.passed { "ok" } else { "FAIL" };
            write!(f, "{status:>4} {}", finding.check)?;
            if !finding.passed {
                write!(f, ": {}", finding.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type Outcome = std::result::Result<(), String>;

/// One face boundary walked counterclockwise.
struct Walk {
    /// Vertex at the start of each boundary edge.
    tails: Vec<u32>,
    forward: Vec<bool>,
    /// Travel angle of each edge in `0..2k`.
    angles: Vec<u32>,
}

impl Walk {
    fn head(&self, j: usize) -> u32 {
        self.tails[(j + 1) % self.tails.len()]
    }
}

fn walk_face(edges: &[Edge], face: &Face, k: usize) -> std::result::Result<Walk, String> {
    let n = face.boundary.len();
    if n < 2 {
        return Err(format!("face with {n} edges"));
    }
    let ends = |j: usize, fwd: bool| {
        let v = edges[face.boundary[j] as usize].v;
        if fwd {
            (v[0], v[1])
        } else {
            (v[1], v[0])
        }
    };
    'first: for first in [true, false] {
        let mut forward = vec![first; n];
        let (start, mut at) = ends(0, first);
        for j in 1..n {
            let v = edges[face.boundary[j] as usize].v;
            forward[j] = if v[0] == at && v[1] != at {
                true
            } else if v[1] == at && v[0] != at {
                false
            } else {
                continue 'first;
            };
            at = ends(j, forward[j]).1;
        }
        if at != start {
            continue;
        }
        let tails = (0..n).map(|j| ends(j, forward[j]).0).collect();
        let angles = (0..n)
            .map(|j| {
                let a = edges[face.boundary[j] as usize].dir.angle();
                if forward[j] {
                    a
                } else {
                    a + k as u32
                }
            })
            .collect();
        return Ok(Walk { tails, forward, angles });
    }
    Err("boundary is not a closed walk".into())
}

fn turn(a: u32, b: u32, k: usize) -> u32 {
    let two_k = 2 * k as u32;
    (b + two_k - a) % two_k
}

struct Ctx<'a> {
    c: &'a TilingComplex,
    k: usize,
    walks: Vec<Option<Walk>>,
    boundary_edges: BTreeSet<EdgeId>,
}

fn indices_in_range(c: &TilingComplex) -> Outcome {
    let k = c.k();
    let nv = c.num_vertices;
    for (e, edge) in c.edges.iter().enumerate() {
        if edge.dir.get() == 0 || edge.dir.get() > k {
            return Err(format!("edge {e} has direction {} outside 1..={k}", edge.dir.get()));
        }
        if edge.v.iter().any(|&v| v >= nv) {
            return Err(format!("edge {e} has an endpoint outside 0..{nv}"));
        }
        if edge.v[0] == edge.v[1] {
            return Err(format!("edge {e} is a loop"));
        }
    }
    let ne = c.edges.len() as u32;
    for (f, face) in c.faces.iter().enumerate() {
        if face.boundary.iter().any(|&e| e >= ne) {
            return Err(format!("face {f} lists a missing edge"));
        }
        if face.dirs.iter().any(|d| d.get() == 0 || d.get() > k) {
            return Err(format!("face {f} has a direction outside 1..={k}"));
        }
    }
    for side in &c.boundary_sides {
        if side.iter().any(|&e| e >= ne) {
            return Err("boundary side lists a missing edge".into());
        }
    }
    Ok(())
}

fn face_closure(ctx: &Ctx) -> Outcome {
    for (f, face) in ctx.c.faces.iter().enumerate() {
        let walk = ctx.walks[f].as_ref().ok_or_else(|| format!("face {f} is not a closed walk"))?;
        let mut net = vec![0i64; ctx.k];
        for (j, &e) in face.boundary.iter().enumerate() {
            net[ctx.c.edges[e as usize].dir.zero_based()] += if walk.forward[j] { 1 } else { -1 };
        }
        if let Some(d) = net.iter().position(|&x| x != 0) {
            return Err(format!("face {f} does not close in direction {}", d + 1));
        }
    }
    Ok(())
}

fn zonogon_shape(ctx: &Ctx) -> Outcome {
    let k = ctx.k;
    for (f, face) in ctx.c.faces.iter().enumerate() {
        let walk = ctx.walks[f].as_ref().ok_or_else(|| format!("face {f} is not a closed walk"))?;
        let n = face.boundary.len();
        let mut total = 0;
        for j in 0..n {
            let t = turn(walk.angles[j], walk.angles[(j + 1) % n], k);
            if t == 0 || t >= k as u32 {
                return Err(format!("face {f} is not strictly convex at its vertex {}", (j + 1) % n));
            }
            total += t;
        }
        if total != 2 * k as u32 {
            return Err(format!("face {f} turns by {total} units instead of {}", 2 * k));
        }
        if n % 2 != 0 {
            return Err(format!("face {f} has an odd number of edges"));
        }
        let s = n / 2;
        for j in 0..s {
            let (a, b) = (&ctx.c.edges[face.boundary[j] as usize], &ctx.c.edges[face.boundary[j + s] as usize]);
            if a.dir != b.dir || walk.forward[j] == walk.forward[j + s] {
                return Err(format!("face {f} is not centrally symmetric"));
            }
            if a.wire != b.wire {
                return Err(format!("opposite edges of face {f} lie in different classes"));
            }
        }
        let dirs: BTreeSet<DirectionIndex> = face.boundary[..s].iter().map(|&e| ctx.c.edges[e as usize].dir).collect();
        if dirs.len() != s || dirs.iter().copied().collect::<Vec<_>>() != face.dirs {
            return Err(format!("face {f} directions do not match its edges"));
        }
    }
    Ok(())
}

fn edge_to_edge(ctx: &Ctx) -> Outcome {
    let c = ctx.c;
    let mut uses: Vec<Vec<(usize, bool)>> = vec![Vec::new(); c.edges.len()];
    for (f, face) in c.faces.iter().enumerate() {
        let walk = ctx.walks[f].as_ref().ok_or_else(|| format!("face {f} is not a closed walk"))?;
        for (j, &e) in face.boundary.iter().enumerate() {
            uses[e as usize].push((f, walk.forward[j]));
        }
    }
    let mut listed = BTreeSet::new();
    for side in &c.boundary_sides {
        for &e in side {
            if !listed.insert(e) {
                return Err(format!("edge {e} is listed on the boundary twice"));
            }
        }
    }
    for (e, u) in uses.iter().enumerate() {
        let on_boundary = ctx.boundary_edges.contains(&(e as EdgeId));
        match (on_boundary, &u[..]) {
            (true, [_]) => {}
            (false, [(f, a), (g, b)]) if f != g && a != b => {}
            (true, _) => return Err(format!("boundary edge {e} bounds {} faces", u.len())),
            (false, _) => return Err(format!("interior edge {e} is not shared by exactly two faces")),
        }
    }
    let mut pairs = BTreeSet::new();
    for (e, edge) in c.edges.iter().enumerate() {
        if !pairs.insert((edge.v[0].min(edge.v[1]), edge.v[0].max(edge.v[1]))) {
            return Err(format!("edge {e} duplicates another edge"));
        }
        match c.wires.get(edge.wire as usize) {
            Some(w) if w.dir == edge.dir => {}
            _ => return Err(format!("edge {e} has an inconsistent edge class")),
        }
    }
    Ok(())
}

/// Corner vertices of the polygon, if the boundary is well formed.
fn corners(ctx: &Ctx) -> Option<BTreeSet<u32>> {
    let c = ctx.c;
    let k = ctx.k;
    if c.boundary_sides.len() != 2 * k || c.boundary_sides.iter().any(Vec::is_empty) {
        return None;
    }
    let mut out = BTreeSet::new();
    for (j, side) in c.boundary_sides.iter().enumerate() {
        let e = &c.edges[side[0] as usize];
        out.insert(if j < k { e.v[0] } else { e.v[1] });
    }
    Some(out)
}

fn vertex_angles(ctx: &Ctx) -> Outcome {
    let c = ctx.c;
    let k = ctx.k as u32;
    let corners = corners(ctx).ok_or("boundary sides are malformed")?;
    let mut on_boundary = vec![false; c.num_vertices as usize];
    for &e in &ctx.boundary_edges {
        for v in c.edges[e as usize].v {
            on_boundary[v as usize] = true;
        }
    }
    let mut sums = vec![0u32; c.num_vertices as usize];
    for (f, face) in c.faces.iter().enumerate() {
        let walk = ctx.walks[f].as_ref().ok_or_else(|| format!("face {f} is not a closed walk"))?;
        let n = face.boundary.len();
        for j in 0..n {
            let t = turn(walk.angles[j], walk.angles[(j + 1) % n], ctx.k);
            sums[walk.head(j) as usize] += k.saturating_sub(t);
        }
    }
    for (v, &sum) in sums.iter().enumerate() {
        let expected = if corners.contains(&(v as u32)) {
            k - 1
        } else if on_boundary[v] {
            k
        } else {
            2 * k
        };
        if sum != expected {
            return Err(format!("angles at vertex {v} sum to {sum} units, expected {expected}"));
        }
    }
    Ok(())
}

fn euler(ctx: &Ctx) -> Outcome {
    let c = ctx.c;
    let mut used = vec![false; c.num_vertices as usize];
    for e in &c.edges {
        for v in e.v {
            used[v as usize] = true;
        }
    }
    if let Some(v) = used.iter().position(|&u| !u) {
        return Err(format!("vertex {v} has no edges"));
    }
    let chi = c.num_vertices as i64 - c.edges.len() as i64 + c.faces.len() as i64;
    if chi != 1 {
        return Err(format!("V - E + F = {chi}"));
    }
    Ok(())
}

fn boundary(ctx: &Ctx) -> Outcome {
    let c = ctx.c;
    let k = ctx.k;
    if c.boundary_sides.len() != 2 * k {
        return Err(format!("{} boundary sides instead of {}", c.boundary_sides.len(), 2 * k));
    }
    let mut class_count = vec![0usize; k];
    for w in &c.wires {
        class_count[w.dir.zero_based()] += 1;
    }
    if class_count != c.mult.as_slice() {
        return Err("edge classes do not match the multiplicities".into());
    }
    let mut chain: Vec<(u32, u32)> = Vec::new();
    for (j, side) in c.boundary_sides.iter().enumerate() {
        let dir = j % k;
        if side.len() != c.mult.as_slice()[dir] {
            return Err(format!("side E_{} has {} edges, expected {}", j + 1, side.len(), c.mult.as_slice()[dir]));
        }
        for &e in side {
            let edge = &c.edges[e as usize];
            if edge.dir.zero_based() != dir {
                return Err(format!("edge {e} on side E_{} has the wrong direction", j + 1));
            }
            chain.push(if j < k { (edge.v[0], edge.v[1]) } else { (edge.v[1], edge.v[0]) });
        }
        let opposite = &c.boundary_sides[(j + k) % (2 * k)];
        for (i, &e) in side.iter().enumerate() {
            let mirror = opposite.get(opposite.len().wrapping_sub(1 + i));
            if mirror.map(|&o| c.edges[o as usize].wire) != Some(c.edges[e as usize].wire) {
                return Err(format!("sides E_{} and E_{} are not mirrored", j + 1, (j + k) % (2 * k) + 1));
            }
        }
        let wires: BTreeSet<u32> = side.iter().map(|&e| c.edges[e as usize].wire).collect();
        if wires.len() != side.len() {
            return Err(format!("side E_{} meets an edge class twice", j + 1));
        }
    }
    for i in 0..chain.len() {
        if chain[i].1 != chain[(i + 1) % chain.len()].0 {
            return Err("boundary is not a closed counterclockwise walk".into());
        }
    }
    let visited: BTreeSet<u32> = chain.iter().map(|p| p.0).collect();
    if visited.len() != chain.len() {
        return Err("boundary walk is not simple".into());
    }
    Ok(())
}

fn side_cap_check(ctx: &Ctx) -> Outcome {
    let cap = side_cap(ctx.k);
    for (j, side) in ctx.c.boundary_sides.iter().enumerate() {
        if side.len() > cap {
            return Err(format!("side E_{} has {} edges, more than {cap}", j + 1, side.len()));
        }
    }
    Ok(())
}

fn incident_edges(c: &TilingComplex) -> Vec<Vec<EdgeId>> {
    let mut out = vec![Vec::new(); c.num_vertices as usize];
    for (e, edge) in c.edges.iter().enumerate() {
        for v in edge.v {
            out[v as usize].push(e as EdgeId);
        }
    }
    out
}

fn crossing_edges(ctx: &Ctx) -> Outcome {
    let c = ctx.c;
    let incident = incident_edges(c);
    for (j, side) in c.boundary_sides.iter().enumerate() {
        let own: BTreeSet<EdgeId> = side.iter().copied().collect();
        let verts: BTreeSet<u32> = side.iter().flat_map(|&e| c.edges[e as usize].v).collect();
        let crossing: BTreeSet<EdgeId> = verts
            .iter()
            .flat_map(|&v| incident[v as usize].iter().copied())
            .filter(|e| !own.contains(e))
            .collect();
        let mut per_dir: BTreeMap<DirectionIndex, usize> = BTreeMap::new();
        for e in crossing {
            *per_dir.entry(c.edges[e as usize].dir).or_default() += 1;
        }
        if let Some((d, n)) = per_dir.iter().find(|(_, &n)| n > 2) {
            return Err(format!("side E_{} meets {n} edges of direction {}", j + 1, d.get()));
        }
    }
    Ok(())
}

fn irreducible(ctx: &Ctx) -> Outcome {
    if ctx.c.faces.len() < 2 {
        return Err("a decomposition needs at least two tiles".into());
    }
    match is_irreducible(ctx.c) {
        Ok((true, _)) => Ok(()),
        Ok((false, witness)) => Err(format!("tiles {:?} have a convex union", witness.unwrap_or_default())),
        Err(e) => Err(format!("not evaluated: {e}")),
    }
}

fn perpendicular_edges(ctx: &Ctx) -> Outcome {
    let c = ctx.c;
    let k = ctx.k;
    if !k.is_multiple_of(2) {
        return Ok(());
    }
    let incident = incident_edges(c);
    let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); c.edges.len()];
    for (f, face) in c.faces.iter().enumerate() {
        for &e in &face.boundary {
            faces_of[e as usize].push(f);
        }
    }
    for (v, edges) in incident.iter().enumerate() {
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                let (da, db) = (c.edges[a as usize].dir.zero_based(), c.edges[b as usize].dir.zero_based());
                if (da + k - db) % k != k / 2 {
                    continue;
                }
                let ok = faces_of[a as usize]
                    .iter()
                    .any(|&f| faces_of[b as usize].contains(&f) && matches!(c.faces[f].sides(), 4 | 6));
                if !ok {
                    return Err(format!("perpendicular edges {a} and {b} at vertex {v} share no rectangle or hexagon"));
                }
            }
        }
    }
    Ok(())
}

/// Runs every check and reports each as a finding.
pub fn validate_complex(c: &TilingComplex) -> ValidationReport {
    if let Err(detail) = indices_in_range(c) {
        let findings = Check::ALL
            .iter()
            .map(|&check| Finding { check, passed: false, detail: detail.clone() })
            .collect();
        return ValidationReport { findings };
    }
    let k = c.k();
    let walks = c.faces.iter().map(|f| walk_face(&c.edges, f, k).ok()).collect();
    let boundary_edges = c.boundary_sides.iter().flatten().copied().collect();
    let ctx = Ctx { c, k, walks, boundary_edges };
    let mut findings = Vec::new();
    let mut structural_ok = true;
    for check in Check::ALL {
        let outcome = match check {
            Check::FaceClosure => face_closure(&ctx),
            Check::ZonogonShape => zonogon_shape(&ctx),
            Check::EdgeToEdge => edge_to_edge(&ctx),
            Check::VertexAngles => vertex_angles(&ctx),
            Check::Euler => euler(&ctx),
            Check::Boundary => boundary(&ctx),
            Check::SideCap => side_cap_check(&ctx),
            Check::CrossingEdges => crossing_edges(&ctx),
            Check::Irreducible if !structural_ok => Err("not evaluated: structure is invalid".into()),
            Check::Irreducible => irreducible(&ctx),
            Check::PerpendicularEdges => perpendicular_edges(&ctx),
        };
        if matches!(
            check,
            Check::FaceClosure
                | Check::ZonogonShape
                | Check::EdgeToEdge
                | Check::VertexAngles
                | Check::Euler
                | Check::Boundary
        ) && outcome.is_err()
        {
            structural_ok = false;
        }
        let (passed, detail) = match outcome {
            Ok(()) => (true, String::new()),
            Err(d) => (false, d),
        };
        findings.push(Finding { check, passed, detail });
    }
    ValidationReport { findings }
}

/// Structural damage applied by [`mutate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Delete an interior edge and merge the two faces on either side.
    MergeFaces,
    /// Swap the endpoints of an edge.
    ReverseEdge,
    /// Give an edge a different direction.
    Redirect,
    /// Drop a face.
    RemoveFace,
    /// Add a vertex with no edges.
    IsolatedVertex,
    /// Move one endpoint of an edge to another vertex.
    MoveEndpoint,
    /// Swap two edges inside one face boundary.
    SwapBoundaryEdges,
    /// Move the last edge of a side onto the next side.
    ShiftSideEdge,
    /// Put an edge into another class.
    Reclass,
    /// Add an edge parallel to an existing one.
    DuplicateEdge,
}

impl Mutation {
    pub const ALL: [Mutation; 10] = [
        Mutation::MergeFaces,
        Mutation::ReverseEdge,
        Mutation::Redirect,
        Mutation::RemoveFace,
        Mutation::IsolatedVertex,
        Mutation::MoveEndpoint,
        Mutation::SwapBoundaryEdges,
        Mutation::ShiftSideEdge,
        Mutation::Reclass,
        Mutation::DuplicateEdge,
    ];
}

/// Applies `m` at a position chosen by `pick`, or returns `None` when the
/// complex offers no place for it. `pick` is reduced modulo the number of
/// candidates.
pub fn mutate(c: &TilingComplex, m: Mutation, pick: u64) -> Option<TilingComplex> {
    let mut out = c.clone();
    let k = c.k();
    let choose = |n: usize| -> Option<usize> { (n > 0).then(|| (pick % n as u64) as usize) };
    let choose2 = |n: usize| -> Option<usize> { (n > 0).then(|| ((pick / 7919) % n as u64) as usize) };
    match m {
        Mutation::MergeFaces => {
            let boundary: BTreeSet<EdgeId> = c.boundary_sides.iter().flatten().copied().collect();
            let interior: Vec<EdgeId> = (0..c.edges.len() as EdgeId).filter(|e| !boundary.contains(e)).collect();
            let e = interior[choose(interior.len())?];
            let owners: Vec<usize> = (0..c.faces.len()).filter(|&f| c.faces[f].boundary.contains(&e)).collect();
            let [f, g] = owners[..] else { return None };
            let mut merged = Vec::new();
            let rotate = |face: &Face| {
                let i = face.boundary.iter().position(|&x| x == e).expect("edge on face");
                let mut b = face.boundary.clone();
                b.rotate_left(i + 1);
                b.pop();
                b
            };
            merged.extend(rotate(&c.faces[f]));
            merged.extend(rotate(&c.faces[g]));
            let mut dirs: Vec<DirectionIndex> = c.faces[f].dirs.iter().chain(&c.faces[g].dirs).copied().collect();
            dirs.sort();
            dirs.dedup();
            let renumber = |x: EdgeId| if x > e { x - 1 } else { x };
            out.faces[f] = Face { dirs, boundary: merged };
            out.faces.remove(g);
            out.edges.remove(e as usize);
            for face in &mut out.faces {
                face.boundary.iter_mut().for_each(|x| *x = renumber(*x));
            }
            for side in &mut out.boundary_sides {
                side.iter_mut().for_each(|x| *x = renumber(*x));
            }
        }
        Mutation::ReverseEdge => {
            let e = choose(c.edges.len())?;
            out.edges[e].v.swap(0, 1);
        }
        Mutation::Redirect => {
            let e = choose(c.edges.len())?;
            let d = c.edges[e].dir.zero_based();
            let shift = 1 + choose2(k - 1)?;
            out.edges[e].dir = DirectionIndex::from_zero_based((d + shift) % k);
        }
        Mutation::RemoveFace => {
            let f = choose(c.faces.len())?;
            out.faces.remove(f);
        }
        Mutation::IsolatedVertex => {
            out.num_vertices += 1;
        }
        Mutation::MoveEndpoint => {
            let e = choose(c.edges.len())?;
            let end = (pick / 3) as usize % 2;
            let current = c.edges[e].v;
            let n = c.num_vertices as usize;
            let mut target = choose2(n)? as u32;
            while current.contains(&target) {
                target = (target + 1) % n as u32;
            }
            out.edges[e].v[end] = target;
        }
        Mutation::SwapBoundaryEdges => {
            let f = choose(c.faces.len())?;
            let n = c.faces[f].boundary.len();
            let i = choose2(n)?;
            let j = (i + 1 + (pick as usize / 13) % (n - 1)) % n;
            out.faces[f].boundary.swap(i, j);
        }
        Mutation::ShiftSideEdge => {
            let j = choose(c.boundary_sides.len())?;
            let e = out.boundary_sides[j].pop()?;
            let next = (j + 1) % c.boundary_sides.len();
            out.boundary_sides[next].insert(0, e);
        }
        Mutation::Reclass => {
            let e = choose(c.edges.len())?;
            let w = c.edges[e].wire;
            let others: Vec<&Wire> = c.wires.iter().filter(|x| x.id != w).collect();
            out.edges[e].wire = others[choose2(others.len())?].id;
        }
        Mutation::DuplicateEdge => {
            let e = choose(c.edges.len())?;
            out.edges.push(c.edges[e].clone());
        }
    }
    Some(out)
}
