//! Per-class reports: side types, octagon cases, tile census and the
//! configurations seen along each side.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::canon::{canonical_code_with, side_profile_with, CanonicalCode, SideProfile};
use crate::complex::{boundary_signature, EdgeId, TilingComplex, Topology};
use crate::enumerate::dihedral_images;
use crate::error::{integrity, Error, Result};

/// Case of an octagon class, determined by its side types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl Case {
    pub const ALL: [Case; 9] =
        [Case::I, Case::II, Case::III, Case::IV, Case::V, Case::VI, Case::VII, Case::VIII, Case::IX];

    pub fn label(self) -> &'static str {
        match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
            Case::IV => "IV",
            Case::V => "V",
            Case::VI => "VI",
            Case::VII => "VII",
            Case::VIII => "VIII",
            Case::IX => "IX",
        }
    }

    pub fn parse(s: &str) -> Option<Case> {
        Case::ALL.into_iter().find(|c| c.label() == s)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_mirrored(signature: &[usize]) -> Result<usize> {
    if signature.is_empty() || !signature.len().is_multiple_of(2) {
        return Err(integrity!("signature of length {} is not a polygon", signature.len()));
    }
    let k = signature.len() / 2;
    if (0..k).any(|i| signature[i] != signature[i + k]) {
        return Err(integrity!("signature {signature:?} is not mirrored"));
    }
    Ok(k)
}

/// Case of an octagon from its 8-entry side signature.
pub fn case_of(signature: &[usize]) -> Result<Case> {
    let k = check_mirrored(signature)?;
    if k != 4 {
        return Err(Error::InvalidParameter(format!("cases are defined for k = 4, not k = {k}")));
    }
    let types: BTreeSet<usize> = signature[..4].iter().copied().collect();
    if let Some(&t) = types.iter().find(|&&t| t == 0 || t > 5) {
        return Err(integrity!("side type {t} outside 1..=5"));
    }
    let case = if types.contains(&5) {
        Case::I
    } else if types.contains(&4) {
        Case::II
    } else {
        match types.into_iter().collect::<Vec<_>>()[..] {
            [1] => Case::III,
            [2] => Case::IV,
            [3] => Case::V,
            [1, 2] => Case::VI,
            [1, 3] => Case::VII,
            [2, 3] => Case::VIII,
            _ => Case::IX,
        }
    };
    Ok(case)
}

/// Side types `m_1/…/m_k` in the least rotation or reflection.
pub fn type_string(signature: &[usize]) -> Result<String> {
    let k = check_mirrored(signature)?;
    let best = dihedral_images(&signature[..k]).into_iter().min().expect("k ≥ 1");
    Ok(best.iter().map(usize::to_string).collect::<Vec<_>>().join("/"))
}

/// Number of tiles with `2s` sides at index `s − 2`, for `s` in `2..=k`.
pub fn tile_census(c: &TilingComplex) -> Vec<usize> {
    let k = c.k();
    let mut census = vec![0; k.max(2) - 1];
    for f in &c.faces {
        let s = f.sides() / 2;
        if (2..=k).contains(&s) {
            census[s - 2] += 1;
        }
    }
    census
}

/// Pairs of perpendicular edges with a common endpoint that do not lie on
/// a common rectangle or hexagon. Only meaningful for even `k`.
pub fn perpendicular_violations(c: &TilingComplex, topo: &Topology) -> Vec<(EdgeId, EdgeId)> {
    let k = c.k();
    if !k.is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for darts in &topo.rotation {
        for (i, &(a, _)) in darts.iter().enumerate() {
            for &(b, _) in &darts[i + 1..] {
                let (da, db) = (c.edges[a as usize].dir.zero_based(), c.edges[b as usize].dir.zero_based());
                if (da + k - db) % k != k / 2 {
                    continue;
                }
                let shared = topo.faces_of_edge(a).any(|f| {
                    let face = &c.faces[f as usize];
                    matches!(face.sides(), 4 | 6) && face.boundary.contains(&b)
                });
                if !shared {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    out
}

/// Everything reported about one combinatorial class.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub code: CanonicalCode,
    pub k: usize,
    pub signature: Vec<usize>,
    pub type_string: String,
    pub case: Option<Case>,
    pub census: Vec<usize>,
    pub faces: usize,
    pub side_profiles: Vec<SideProfile>,
    pub perpendicular_violations: usize,
}

pub fn class_report(c: &TilingComplex) -> Result<ClassReport> {
    let topo = c.topology()?;
    let signature = boundary_signature(c)?;
    let k = c.k();
    let side_profiles = (1..=2 * k)
        .map(|side| side_profile_with(c, &topo, side))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassReport {
        code: canonical_code_with(c, &topo),
        k,
        type_string: type_string(&signature)?,
        case: if k == 4 { Some(case_of(&signature)?) } else { None },
        census: tile_census(c),
        faces: c.faces.len(),
        side_profiles,
        perpendicular_violations: perpendicular_violations(c, &topo).len(),
        signature,
    })
}

/// Number of classes per case, in case order.
pub fn case_counts(reports: &[ClassReport]) -> BTreeMap<Case, usize> {
    let mut out: BTreeMap<Case, usize> = Case::ALL.into_iter().map(|c| (c, 0)).collect();
    for r in reports {
        if let Some(case) = r.case {
            *out.entry(case).or_default() += 1;
        }
    }
    out
}

/// Distinct side profiles for each side length, numbered by code order.
pub fn profile_labels(reports: &[ClassReport]) -> BTreeMap<(usize, SideProfile), String> {
    let mut by_len: BTreeMap<usize, BTreeSet<SideProfile>> = BTreeMap::new();
    for r in reports {
        for (j, p) in r.side_profiles.iter().enumerate() {
            by_len.entry(r.signature[j]).or_default().insert(p.clone());
        }
    }
    let mut out = BTreeMap::new();
    for (len, profiles) in by_len {
        for (i, p) in profiles.into_iter().enumerate() {
            let suffix = char::from(b'a' + (i % 26) as u8);
            out.insert((len, p), format!("{len}{suffix}"));
        }
    }
    out
}

/// One observed side configuration with the types of the two adjacent sides.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NeighborRow {
    pub side_type: usize,
    pub profile: String,
    /// Types of the two adjacent sides, smaller first.
    pub neighbors: (usize, usize),
}

/// Observed pairs of (side profile, neighbouring side types) for all sides
/// with at least three edges.
pub fn neighbor_table(reports: &[ClassReport]) -> BTreeSet<NeighborRow> {
    let labels = profile_labels(reports);
    let mut out = BTreeSet::new();
    for r in reports {
        let n = r.signature.len();
        for j in 0..n {
            let t = r.signature[j];
            if t < 3 {
                continue;
            }
            let a = r.signature[(j + n - 1) % n];
            let b = r.signature[(j + 1) % n];
            out.insert(NeighborRow {
                side_type: t,
                profile: labels[&(t, r.side_profiles[j].clone())].clone(),
                neighbors: (a.min(b), a.max(b)),
            });
        }
    }
    out
}

/// Number of distinct side profiles for each side length.
pub fn profile_census(reports: &[ClassReport]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for (len, _) in profile_labels(reports).keys() {
        *out.entry(*len).or_default() += 1;
    }
    out
}
