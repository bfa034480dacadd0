//! JSON tiling documents, class summaries and SVG drawings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{case_counts, ClassReport};
use crate::complex::{DirectionIndex, Edge, Face, Multiplicities, TilingComplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileFace {
    pub dirs: Vec<usize>,
    pub boundary: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileEdge {
    pub id: u32,
    pub dir: usize,
    pub wire: u32,
    pub v: [u32; 2],
}

/// On-disk form of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingFile {
    pub k: usize,
    pub multiplicities: Vec<usize>,
    pub faces: Vec<FileFace>,
    pub edges: Vec<FileEdge>,
    pub vertices: Vec<u32>,
    pub boundary_sides: Vec<Vec<u32>>,
}

impl From<&TilingComplex> for TilingFile {
    fn from(c: &TilingComplex) -> TilingFile {
        TilingFile {
            k: c.k(),
            multiplicities: c.mult.as_slice().to_vec(),
            faces: c
                .faces
                .iter()
                .map(|f| FileFace { dirs: f.dirs.iter().map(|d| d.get()).collect(), boundary: f.boundary.clone() })
                .collect(),
            edges: c
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| FileEdge { id: i as u32, dir: e.dir.get(), wire: e.wire, v: e.v })
                .collect(),
            vertices: (0..c.num_vertices).collect(),
            boundary_sides: c.boundary_sides.clone(),
        }
    }
}

impl TryFrom<TilingFile> for TilingComplex {
    type Error = Error;

    /// Decodes the document. Vertex ids may be arbitrary and are renumbered
    /// densely in listed order; edge ids must be exactly `0..E`.
    fn try_from(f: TilingFile) -> Result<TilingComplex> {
        let k = f.k;
        if f.multiplicities.len() != k {
            return Err(Error::Parse(format!("{} multiplicities for k = {k}", f.multiplicities.len())));
        }
        let mult = Multiplicities::uncapped(f.multiplicities).map_err(|e| Error::Parse(e.to_string()))?;
        let dir = |d: usize| DirectionIndex::new(d, k).map_err(|_| Error::Parse(format!("direction {d} outside 1..={k}")));
        let mut vmap = BTreeMap::new();
        for &v in &f.vertices {
            let next = vmap.len() as u32;
            if vmap.insert(v, next).is_some() {
                return Err(Error::Parse(format!("vertex {v} listed twice")));
            }
        }
        let mut edges: Vec<Option<Edge>> = vec![None; f.edges.len()];
        let wires = mult.wires();
        for e in &f.edges {
            let slot = edges
                .get_mut(e.id as usize)
                .ok_or_else(|| Error::Parse(format!("edge id {} out of range", e.id)))?;
            if slot.is_some() {
                return Err(Error::Parse(format!("edge id {} listed twice", e.id)));
            }
            if e.wire as usize >= wires.len() {
                return Err(Error::Parse(format!("edge {} names missing class {}", e.id, e.wire)));
            }
            let v = |x: u32| vmap.get(&x).copied().ok_or_else(|| Error::Parse(format!("edge {} uses unknown vertex {x}", e.id)));
            *slot = Some(Edge { dir: dir(e.dir)?, wire: e.wire, v: [v(e.v[0])?, v(e.v[1])?] });
        }
        let edges: Vec<Edge> = edges.into_iter().map(|e| e.expect("every id filled")).collect();
        let ne = edges.len() as u32;
        let check_ids = |ids: &[u32]| -> Result<()> {
            match ids.iter().find(|&&e| e >= ne) {
                Some(e) => Err(Error::Parse(format!("reference to missing edge {e}"))),
                None => Ok(()),
            }
        };
        let mut faces = Vec::with_capacity(f.faces.len());
        for face in f.faces {
            check_ids(&face.boundary)?;
            let mut dirs = face.dirs.iter().map(|&d| dir(d)).collect::<Result<Vec<_>>>()?;
            dirs.sort();
            faces.push(Face { dirs, boundary: face.boundary });
        }
        for side in &f.boundary_sides {
            check_ids(side)?;
        }
        Ok(TilingComplex {
            mult,
            num_vertices: vmap.len() as u32,
            wires,
            edges,
            faces,
            boundary_sides: f.boundary_sides,
        })
    }
}

pub fn render_json(c: &TilingComplex) -> String {
    serde_json::to_string_pretty(&TilingFile::from(c)).expect("tiling documents serialize")
}

pub fn parse_json(s: &str) -> Result<TilingComplex> {
    let file: TilingFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    TilingComplex::try_from(file)
}

/// One class as listed in `summary.json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub code: String,
    pub type_string: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    /// Tile counts by size: 4-gons, 6-gons, … , `2k`-gons.
    pub census: Vec<usize>,
    pub faces: usize,
    pub file: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub k: usize,
    pub class_count: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub case_counts: BTreeMap<String, usize>,
    pub classes: Vec<ClassSummary>,
}

/// Name of the files written for a class.
pub fn class_file_stem(index: usize) -> String {
    format!("class_{index:04}")
}

/// Summary of a class set; `reports` must be in canonical-code order.
pub fn summary(k: usize, reports: &[ClassReport]) -> Summary {
    let case_counts = if k == 4 {
        case_counts(reports).into_iter().map(|(c, n)| (c.label().to_string(), n)).collect()
    } else {
        BTreeMap::new()
    };
    Summary {
        k,
        class_count: reports.len(),
        case_counts,
        classes: reports
            .iter()
            .enumerate()
            .map(|(i, r)| ClassSummary {
                code: r.code.to_hex(),
                type_string: r.type_string.clone(),
                case: r.case.map(|c| c.label().to_string()),
                census: r.census.clone(),
                faces: r.faces,
                file: format!("{}.json", class_file_stem(i)),
            })
            .collect(),
    }
}

pub fn render_summary(s: &Summary) -> String {
    let mut out = serde_json::to_string_pretty(s).expect("summaries serialize");
    out.push('\n');
    out
}

/// Vertex positions for a complex with unit polygon sides: an edge of
/// direction `i` is the vector of length `1/m_i` at angle `(i−1)π/k`.
pub fn embed(c: &TilingComplex) -> Result<Vec<[f64; 2]>> {
    let k = c.k();
    let n = c.num_vertices as usize;
    let mut adj: Vec<Vec<(usize, [f64; 2])>> = vec![Vec::new(); n];
    for e in &c.edges {
        let a = e.dir.angle() as f64 * std::f64::consts::PI / k as f64;
        let len = 1.0 / c.mult.get(e.dir) as f64;
        let d = [len * a.cos(), len * a.sin()];
        let [p, q] = e.v.map(|v| v as usize);
        if p >= n || q >= n {
            return Err(Error::Integrity("edge endpoint out of range".into()));
        }
        adj[p].push((q, d));
        adj[q].push((p, [-d[0], -d[1]]));
    }
    let mut pos: Vec<Option<[f64; 2]>> = vec![None; n];
    let start = c
        .boundary_sides
        .first()
        .and_then(|s| s.first())
        .map(|&e| c.edges[e as usize].v[0] as usize)
        .unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    pos[start] = Some([0.0, 0.0]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let p = pos[v].expect("placed");
        for &(w, d) in &adj[v] {
            let q = [p[0] + d[0], p[1] + d[1]];
            match pos[w] {
                None => {
                    pos[w] = Some(q);
                    stack.push(w);
                }
                Some(old) if (old[0] - q[0]).hypot(old[1] - q[1]) > 1e-9 => {
                    return Err(Error::Integrity(format!("vertex {w} has inconsistent positions")));
                }
                Some(_) => {}
            }
        }
    }
    pos.into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::Integrity(format!("vertex {v} is not connected"))))
        .collect()
}

/// Face polygons in counterclockwise vertex order.
pub fn face_polygons(c: &TilingComplex, pos: &[[f64; 2]]) -> Result<Vec<Vec<[f64; 2]>>> {
    let topo = c.topology()?;
    Ok(topo.face_vertices.iter().map(|vs| vs.iter().map(|&v| pos[v as usize]).collect()).collect())
}

/// Whether a polygon is simple and strictly convex counterclockwise,
/// with cross products above `-tol`.
pub fn is_convex_polygon(poly: &[[f64; 2]], tol: f64) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    let mut winding = 0.0;
    for i in 0..n {
        let (a, b, c) = (poly[i], poly[(i + 1) % n], poly[(i + 2) % n]);
        let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        if cross < -tol {
            return false;
        }
        let turn = (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]);
        winding += cross.atan2(turn);
    }
    (winding - 2.0 * std::f64::consts::PI).abs() < 1e-6
}

const FILL: [&str; 4] = ["#f4d35e", "#7fb7be", "#ee964b", "#bc4b51"];

/// SVG drawing of a complex; tiles are filled by their number of sides.
pub fn render_svg(c: &TilingComplex) -> Result<String> {
    let pos = embed(c)?;
    let polys = face_polygons(c, &pos)?;
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in &pos {
        min_x = min_x.min(p[0]);
        min_y = min_y.min(p[1]);
        max_x = max_x.max(p[0]);
        max_y = max_y.max(p[1]);
    }
    let scale = 400.0 / (max_x - min_x).max(max_y - min_y).max(1e-9);
    let margin = 10.0;
    let width = (max_x - min_x) * scale + 2.0 * margin;
    let height = (max_y - min_y) * scale + 2.0 * margin;
    let tx = |p: [f64; 2]| ((p[0] - min_x) * scale + margin, (max_y - p[1]) * scale + margin);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    for (f, poly) in polys.iter().enumerate() {
        let points: Vec<String> = poly
            .iter()
            .map(|&p| {
                let (x, y) = tx(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let fill = FILL[(c.faces[f].sides() / 2).saturating_sub(2) % FILL.len()];
        writeln!(
            out,
            r##"  <polygon points="{}" fill="{fill}" stroke="#222" stroke-width="1.5" stroke-linejoin="round"/>"##,
            points.join(" ")
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

