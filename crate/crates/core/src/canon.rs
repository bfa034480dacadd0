//! Canonical codes for complexes and for the tile neighbourhood of a side.
//!
//! A complex is encoded as a planar map: each directed edge (dart) knows
//! its head, its position in the counterclockwise rotation around its tail,
//! and a few flag bits. For a chosen root dart and orientation a
//! breadth-first traversal labels vertices in discovery order and emits,
//! per vertex, its degree followed by `label(head)·8 + flags` for every
//! dart in rotation order starting at the dart it was discovered through.
//! The code is the lexicographic minimum over all roots and both
//! orientations, so it is invariant under relabelling, rotation and
//! reflection, and two codes coincide exactly when the maps are isomorphic
//! with matching flags.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{EdgeId, FaceId, TilingComplex, Topology};
use crate::error::{integrity, Error, Result};

/// Orientation-, root- and label-independent encoding of a complex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<CanonicalCode> {
        if !s.len().is_multiple_of(2) {
            return Err(Error::Parse("odd-length hex code".into()));
        }
        (0..s.len())
            .step_by(2)
            .map(|i| {
                u8::from_str_radix(&s[i..i + 2], 16)
                    .map_err(|e| Error::Parse(format!("bad hex code: {e}")))
            })
            .collect::<Result<Vec<u8>>>()
            .map(CanonicalCode)
    }

    fn from_words(words: &[u32]) -> CanonicalCode {
        let wide = words.iter().any(|&w| w > u16::MAX as u32);
        let mut bytes = Vec::with_capacity(1 + words.len() * if wide { 4 } else { 2 });
        bytes.push(if wide { 4 } else { 2 });
        for &w in words {
            if wide {
                bytes.extend_from_slice(&w.to_be_bytes());
            } else {
                bytes.extend_from_slice(&(w as u16).to_be_bytes());
            }
        }
        CanonicalCode(bytes)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

const FLAG_LEFT: u8 = 1;
const FLAG_RIGHT: u8 = 2;
const FLAG_MARK: u8 = 4;

/// Planar map restricted to a subset of edges. Dart `2e` runs from
/// `edge.v[0]` to `edge.v[1]`, dart `2e+1` the other way.
struct PlanarMap {
    rot: Vec<Vec<u32>>,
    head: Vec<u32>,
    pos: Vec<u32>,
    /// Flags seen in the counterclockwise orientation; the clockwise
    /// orientation swaps left and right.
    flags: Vec<u8>,
    vertices: u32,
    edges: u32,
}

impl PlanarMap {
    fn new(
        c: &TilingComplex,
        topo: &Topology,
        keep_edge: impl Fn(EdgeId) -> bool,
        tile: impl Fn(Option<FaceId>) -> bool,
        marked: impl Fn(EdgeId) -> bool,
    ) -> PlanarMap {
        let darts = 2 * c.edges.len();
        let mut head = vec![0; darts];
        let mut flags = vec![0; darts];
        for (e, edge) in c.edges.iter().enumerate() {
            head[2 * e] = edge.v[1];
            head[2 * e + 1] = edge.v[0];
            let [left, right] = topo.edge_faces[e];
            let mark = if marked(e as EdgeId) { FLAG_MARK } else { 0 };
            let bit = |f: Option<FaceId>, b: u8| if tile(f) { b } else { 0 };
            flags[2 * e] = bit(left, FLAG_LEFT) | bit(right, FLAG_RIGHT) | mark;
            flags[2 * e + 1] = bit(right, FLAG_LEFT) | bit(left, FLAG_RIGHT) | mark;
        }
        let mut rot = vec![Vec::new(); c.num_vertices as usize];
        let mut pos = vec![0; darts];
        let mut vertices = 0;
        let mut edges = 0;
        for (v, darts) in topo.rotation.iter().enumerate() {
            for &(e, from_v0) in darts {
                if keep_edge(e) {
                    let d = 2 * e + if from_v0 { 0 } else { 1 };
                    pos[d as usize] = rot[v].len() as u32;
                    rot[v].push(d);
                    if from_v0 {
                        edges += 1;
                    }
                }
            }
            if !rot[v].is_empty() {
                vertices += 1;
            }
        }
        PlanarMap { rot, head, pos, flags, vertices, edges }
    }

    fn darts(&self) -> impl Iterator<Item = u32> + '_ {
        self.rot.iter().flatten().copied()
    }

    fn tail(&self, d: u32) -> u32 {
        self.head[(d ^ 1) as usize]
    }

    fn dart_flags(&self, d: u32, clockwise: bool) -> u32 {
        let f = self.flags[d as usize];
        let f = if clockwise {
            (f & FLAG_MARK) | (f & FLAG_LEFT) << 1 | (f & FLAG_RIGHT) >> 1
        } else {
            f
        };
        f as u32
    }

    /// Code for one root and orientation, abandoned as soon as it exceeds
    /// `best`. Returns whether `out` now holds a strictly smaller code.
    fn encode(
        &self,
        root: u32,
        clockwise: bool,
        best: Option<&[u32]>,
        out: &mut Vec<u32>,
        labels: &mut [u32],
        start: &mut [u32],
        order: &mut Vec<u32>,
    ) -> bool {
        const UNSEEN: u32 = u32::MAX;
        out.clear();
        order.clear();
        labels.iter_mut().for_each(|l| *l = UNSEEN);
        let mut state = if best.is_some() { Ordering::Equal } else { Ordering::Less };
        let push = |out: &mut Vec<u32>, w: u32, state: &mut Ordering| -> bool {
            if *state == Ordering::Equal {
                let b = best.expect("comparison needs a best code")[out.len()];
                *state = w.cmp(&b);
                if *state == Ordering::Greater {
                    return false;
                }
            }
            out.push(w);
            true
        };
        if !push(out, self.vertices, &mut state) || !push(out, self.edges, &mut state) {
            return false;
        }
        let root_tail = self.tail(root);
        labels[root_tail as usize] = 0;
        start[root_tail as usize] = root;
        order.push(root_tail);
        let mut next = 0;
        while next < order.len() {
            let v = order[next] as usize;
            next += 1;
            let rot = &self.rot[v];
            let deg = rot.len();
            if !push(out, deg as u32, &mut state) {
                return false;
            }
            let first = self.pos[start[v] as usize] as usize;
            for i in 0..deg {
                let idx = if clockwise { (first + deg - i) % deg } else { (first + i) % deg };
                let d = rot[idx];
                let h = self.head[d as usize] as usize;
                if labels[h] == UNSEEN {
                    labels[h] = order.len() as u32;
                    start[h] = d ^ 1;
                    order.push(h as u32);
                }
                if !push(out, labels[h] * 8 + self.dart_flags(d, clockwise), &mut state) {
                    return false;
                }
            }
        }
        state == Ordering::Less
    }

    fn canonical(&self) -> CanonicalCode {
        let n = self.rot.len();
        let mut labels = vec![0; n];
        let mut start = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut best: Option<Vec<u32>> = None;
        let mut buf = Vec::new();
        for root in self.darts() {
            for clockwise in [false, true] {
                let better = self.encode(
                    root,
                    clockwise,
                    best.as_deref(),
                    &mut buf,
                    &mut labels,
                    &mut start,
                    &mut order,
                );
                if better {
                    best = Some(std::mem::take(&mut buf));
                }
            }
        }
        CanonicalCode::from_words(&best.unwrap_or_default())
    }
}

fn check_well_formed(c: &TilingComplex) -> Result<Topology> {
    let topo = c.topology()?;
    if c.faces.is_empty() {
        return Err(integrity!("complex has no faces"));
    }
    for (e, faces) in topo.edge_faces.iter().enumerate() {
        if faces.iter().all(Option::is_none) {
            return Err(integrity!("edge {e} bounds no face"));
        }
    }
    Ok(topo)
}

/// Canonical code of a complex; equal codes mean combinatorially
/// equivalent decompositions.
pub fn canonical_code(c: &TilingComplex) -> Result<CanonicalCode> {
    let topo = check_well_formed(c)?;
    Ok(canonical_code_with(c, &topo))
}

pub(crate) fn canonical_code_with(c: &TilingComplex, topo: &Topology) -> CanonicalCode {
    PlanarMap::new(c, topo, |_| true, |f| f.is_some(), |_| false).canonical()
}

/// Keeps one representative per canonical code: the least complex in the
/// derived order on [`TilingComplex`].
pub fn dedupe<I>(stream: I) -> Result<BTreeMap<CanonicalCode, TilingComplex>>
where
    I: IntoIterator<Item = TilingComplex>,
{
    let mut out: BTreeMap<CanonicalCode, TilingComplex> = BTreeMap::new();
    for c in stream {
        let code = canonical_code(&c)?;
        match out.get_mut(&code) {
            Some(rep) if c < *rep => *rep = c,
            Some(_) => {}
            None => {
                out.insert(code, c);
            }
        }
    }
    Ok(out)
}

/// Canonical code of the tiles meeting one side of the polygon.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SideProfile {
    pub code: CanonicalCode,
}

/// Profile of side `E_side` (1-based): the sub-complex of all tiles sharing
/// at least a point with the side, with the side's edges marked.
pub fn side_profile(c: &TilingComplex, side: usize) -> Result<SideProfile> {
    let topo = check_well_formed(c)?;
    side_profile_with(c, &topo, side)
}

pub(crate) fn side_profile_with(c: &TilingComplex, topo: &Topology, side: usize) -> Result<SideProfile> {
    let k = c.k();
    if side == 0 || side > 2 * k || c.boundary_sides.len() != 2 * k {
        return Err(Error::InvalidParameter(format!("side {side} outside 1..={}", 2 * k)));
    }
    let side_edges = &c.boundary_sides[side - 1];
    let mut on_side = vec![false; c.num_vertices as usize];
    for &e in side_edges {
        for v in c.edges[e as usize].v {
            on_side[v as usize] = true;
        }
    }
    let included: Vec<bool> = topo
        .face_vertices
        .iter()
        .map(|vs| vs.iter().any(|&v| on_side[v as usize]))
        .collect();
    let mut keep = vec![false; c.edges.len()];
    for (f, face) in c.faces.iter().enumerate() {
        if included[f] {
            for &e in &face.boundary {
                keep[e as usize] = true;
            }
        }
    }
    let map = PlanarMap::new(
        c,
        topo,
        |e| keep[e as usize],
        |f| f.is_some_and(|f| included[f as usize]),
        |e| side_edges.contains(&e),
    );
    Ok(SideProfile { code: map.canonical() })
}
