//! Exhaustive generation of decompositions by sweeping tile placements.
//!
//! Two sequences of moves build the same decomposition exactly when one is
//! obtained from the other by swapping adjacent moves on disjoint front
//! blocks. The search therefore only follows sequences in which a move is
//! never entirely to the left of the move before it unless the two overlap;
//! that picks one sequence per decomposition.
//!
//! Pruning relies on the fact that a convex union of already placed tiles
//! stays a convex union in every completion. After each placement the
//! minimal convex union containing the new tile and one of its lower
//! neighbours is grown; if it closes up inside the placed region and is not
//! the whole finished tiling, the branch is reducible. Every minimal
//! reducibility witness is detected this way when its last tile is placed,
//! so no irreducible decomposition is ever cut.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::canon::{canonical_code_with, CanonicalCode};
use crate::complex::{check_k, side_cap, FaceId, Multiplicities, TilingComplex};
use crate::error::{Error, Result};
use crate::irreducible::{closure_in, find_witness, seed_is_convex, ClosureScratch};
use crate::par;
use crate::sweep::Sweep;

/// Counters reported by a search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Tile placements performed.
    pub nodes: u64,
    /// Placements rejected by a prune.
    pub pruned: u64,
    /// Finished decompositions handed to the caller.
    pub emitted: u64,
}

impl SearchStats {
    fn merge(self, other: SearchStats) -> SearchStats {
        SearchStats {
            nodes: self.nodes + other.nodes,
            pruned: self.pruned + other.pruned,
            emitted: self.emitted + other.emitted,
        }
    }
}

/// Called periodically with the running counters of one search task.
pub type ProgressHook = Arc<dyn Fn(&SearchStats) + Send + Sync>;

#[derive(Clone)]
pub struct SearchConfig {
    /// Reject a placement whose tile forms a convex union with a neighbour.
    pub prune_pair_convex: bool,
    /// Reject a placement whose tile closes a convex union of any size.
    /// Subsumes `prune_pair_convex`.
    pub prune_closure: bool,
    /// Stop after this many emitted decompositions.
    pub max_solutions: Option<usize>,
    pub progress_hook: Option<ProgressHook>,
    /// Worker threads for class enumeration; `Some(1)` runs sequentially,
    /// `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            prune_pair_convex: true,
            prune_closure: true,
            max_solutions: None,
            progress_hook: None,
            jobs: None,
        }
    }
}

impl SearchConfig {
    /// No pruning: every decomposition is produced.
    pub fn exhaustive() -> Self {
        SearchConfig { prune_pair_convex: false, prune_closure: false, ..Default::default() }
    }
}

impl std::fmt::Debug for SearchConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SearchConfig")
            .field("prune_pair_convex", &self.prune_pair_convex)
            .field("prune_closure", &self.prune_closure)
            .field("max_solutions", &self.max_solutions)
            .field("progress_hook", &self.progress_hook.is_some())
            .field("jobs", &self.jobs)
            .finish()
    }
}

/// Printed with every `k = 2` count.
pub const SQUARE_NOTE: &str = "note: with at most 2k-3 = 1 edge per side the square admits no \
decomposition, so the count is 0. Without that cap, two rectangles splitting the square would pass \
the irreducibility test, because the whole family is exempt from it.";

const PROGRESS_EVERY: u64 = 1 << 20;

/// Placement sequence as `(start, len)` pairs.
pub type MovePath = Vec<(u32, u32)>;

struct Searcher<'a> {
    sweep: Sweep,
    scratch: ClosureScratch,
    cfg: &'a SearchConfig,
    stats: SearchStats,
    path: MovePath,
    budget: Option<usize>,
}

impl<'a> Searcher<'a> {
    fn new(mult: &Multiplicities, cfg: &'a SearchConfig) -> Result<Self> {
        Ok(Searcher {
            sweep: Sweep::new(mult)?,
            scratch: ClosureScratch::default(),
            cfg,
            stats: SearchStats::default(),
            path: Vec::new(),
            budget: cfg.max_solutions,
        })
    }

    /// Whether the tile just placed closes a proper convex union.
    fn reducible(&mut self, face: FaceId) -> bool {
        if !self.cfg.prune_closure && !self.cfg.prune_pair_convex {
            return false;
        }
        let complete = self.sweep.is_complete();
        let faces = self.sweep.face_count();
        let vertices = self.sweep.vertex_count();
        let lower: Vec<FaceId> = self
            .sweep
            .lower_edges(face)
            .iter()
            .filter_map(|&e| self.sweep.face_below(e))
            .collect();
        for below in lower {
            let seed = [face, below];
            if self.cfg.prune_closure {
                if let Some(size) = closure_in(&self.sweep, &seed, vertices, &mut self.scratch) {
                    if !complete || size < faces {
                        return true;
                    }
                }
            } else if seed_is_convex(&self.sweep, &seed, vertices, &mut self.scratch)
                && (!complete || faces > 2)
            {
                return true;
            }
        }
        false
    }

    fn place(&mut self, start: usize, len: usize) -> bool {
        let face = self.sweep.apply_block(start, len);
        self.stats.nodes += 1;
        if self.stats.nodes.is_multiple_of(PROGRESS_EVERY) {
            if let Some(hook) = &self.cfg.progress_hook {
                hook(&self.stats);
            }
        }
        if self.reducible(face) {
            self.stats.pruned += 1;
            self.sweep.undo();
            return false;
        }
        self.path.push((start as u32, len as u32));
        true
    }

    fn unplace(&mut self) {
        self.sweep.undo();
        self.path.pop();
    }

    /// Block of the last move, or an empty block left of the front.
    fn last_block(&self) -> (usize, usize) {
        match self.path.last() {
            Some(&(s, l)) => (s as usize, (s + l) as usize),
            None => (0, 0),
        }
    }

    /// Depth-first search below the current state. `visit` receives every
    /// finished state; `frontier` (when given) stops the descent at that
    /// many placements and reports the state instead.
    fn dfs(
        &mut self,
        frontier: Option<usize>,
        visit: &mut dyn FnMut(&mut Searcher<'a>) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.sweep.is_complete() || frontier == Some(self.path.len()) {
            return visit(self);
        }
        let n = self.sweep.front_len();
        let (prev_start, _) = self.last_block();
        for s in 0..n - 1 {
            let mut end = s + 1;
            while end < n && self.sweep.ascending_at(end - 1) {
                end += 1;
                // Skip moves strictly left of and disjoint from the last one.
                if end <= prev_start {
                    continue;
                }
                if self.place(s, end - s) {
                    let flow = self.dfs(frontier, visit);
                    self.unplace();
                    flow?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn replay(&mut self, path: &[(u32, u32)]) {
        for &(s, l) in path {
            let face = self.sweep.apply_block(s as usize, l as usize);
            debug_assert!(!self.reducible(face));
            self.path.push((s, l));
        }
    }

    fn emit(&mut self, sink: &mut dyn FnMut(TilingComplex) -> ControlFlow<()>) -> ControlFlow<()> {
        if self.sweep.face_count() < 2 || !self.sweep.is_complete() {
            return ControlFlow::Continue(());
        }
        if self.budget == Some(0) {
            return ControlFlow::Break(());
        }
        let c = self.sweep.to_complex().expect("complete sweep");
        self.stats.emitted += 1;
        if let Some(b) = &mut self.budget {
            *b -= 1;
        }
        sink(c)
    }
}

fn check_mult(mult: &Multiplicities) -> Result<()> {
    let cap = side_cap(mult.k());
    if mult.as_slice().iter().any(|&m| m > cap) {
        return Err(Error::InvalidParameter(format!(
            "multiplicities {:?} exceed the side cap {cap}",
            mult.as_slice()
        )));
    }
    Ok(())
}

/// Runs the sweep for one multiplicity vector and hands every finished
/// decomposition with at least two tiles to `sink`, once per decomposition.
pub fn enumerate_tilings<F>(mult: &Multiplicities, cfg: &SearchConfig, mut sink: F) -> Result<SearchStats>
where
    F: FnMut(TilingComplex) -> ControlFlow<()>,
{
    check_mult(mult)?;
    let mut searcher = Searcher::new(mult, cfg)?;
    let _ = searcher.dfs(None, &mut |s| s.emit(&mut sink));
    Ok(searcher.stats)
}

/// Collecting form of [`enumerate_tilings`].
pub fn collect_tilings(mult: &Multiplicities, cfg: &SearchConfig) -> Result<Vec<TilingComplex>> {
    let mut out = Vec::new();
    enumerate_tilings(mult, cfg, |c| {
        out.push(c);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Orbit representatives of `{1..=cap}^k` under the dihedral action on
/// direction labels: `i -> i+1` and `i -> -i` modulo `k`.
pub fn multiplicity_orbits(k: usize) -> Result<Vec<Multiplicities>> {
    check_k(k)?;
    let cap = side_cap(k);
    let total = (cap as u64).checked_pow(k as u32).filter(|&t| t <= 1 << 32).ok_or_else(|| {
        Error::InvalidParameter(format!("{cap}^{k} multiplicity vectors is too many"))
    })?;
    let mut out = Vec::new();
    let mut m = vec![1usize; k];
    for _ in 0..total {
        if is_orbit_minimum(&m) {
            out.push(Multiplicities::new(m.clone())?);
        }
        for slot in m.iter_mut().rev() {
            if *slot < cap {
                *slot += 1;
                break;
            }
            *slot = 1;
        }
    }
    Ok(out)
}

/// Images of `m` under the dihedral group acting on direction labels.
pub fn dihedral_images(m: &[usize]) -> Vec<Vec<usize>> {
    let k = m.len();
    let mut out = Vec::with_capacity(2 * k);
    for r in 0..k {
        out.push((0..k).map(|i| m[(i + r) % k]).collect());
        out.push((0..k).map(|i| m[(k + r - i) % k]).collect());
    }
    out
}

fn is_orbit_minimum(m: &[usize]) -> bool {
    dihedral_images(m).iter().all(|img| m <= &img[..])
}

/// One combinatorial class with its stored representative.
#[derive(Debug, Clone)]
pub struct ClassEntry {
    pub representative: TilingComplex,
}

/// Result of a class enumeration.
#[derive(Debug, Clone, Default)]
pub struct ClassSet {
    pub k: usize,
    pub classes: BTreeMap<CanonicalCode, ClassEntry>,
    pub stats: SearchStats,
    /// Irreducible decompositions found before deduplication.
    pub irreducible_tilings: u64,
}

impl ClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    fn insert(&mut self, code: CanonicalCode, c: TilingComplex) {
        match self.classes.get_mut(&code) {
            Some(entry) if c < entry.representative => entry.representative = c,
            Some(_) => {}
            None => {
                self.classes.insert(code, ClassEntry { representative: c });
            }
        }
    }

    /// Associative, order-independent merge.
    fn merge(mut self, other: ClassSet) -> ClassSet {
        self.stats = self.stats.merge(other.stats);
        self.irreducible_tilings += other.irreducible_tilings;
        for (code, entry) in other.classes {
            self.insert(code, entry.representative);
        }
        self
    }
}

/// A unit of parallel work: one multiplicity vector and a move prefix.
#[derive(Debug, Clone)]
struct Task {
    mult: Multiplicities,
    prefix: MovePath,
}

const SPLIT_DEPTH: usize = 3;

fn split(mult: &Multiplicities, cfg: &SearchConfig, depth: usize) -> Result<Vec<Task>> {
    let mut searcher = Searcher::new(mult, cfg)?;
    let mut tasks = Vec::new();
    let _ = searcher.dfs(Some(depth), &mut |s| {
        tasks.push(Task { mult: mult.clone(), prefix: s.path.clone() });
        ControlFlow::Continue(())
    });
    Ok(tasks)
}

fn run_task(task: &Task, k: usize, cfg: &SearchConfig) -> ClassSet {
    let mut out = ClassSet { k, ..Default::default() };
    let mut searcher = Searcher::new(&task.mult, cfg).expect("validated multiplicities");
    searcher.replay(&task.prefix);
    let mut found = Vec::new();
    let _ = searcher.dfs(None, &mut |s| s.emit(&mut |c| {
        found.push(c);
        ControlFlow::Continue(())
    }));
    out.stats = searcher.stats;
    for c in found {
        let topo = c.topology().expect("generated complexes are well formed");
        if find_witness(&c, &topo).is_none() {
            out.irreducible_tilings += 1;
            let code = canonical_code_with(&c, &topo);
            out.insert(code, c);
        }
    }
    out
}

/// All combinatorial classes of irreducible decompositions of the
/// `2k`-gon, one representative each.
pub fn enumerate_irreducible_classes(k: usize, cfg: &SearchConfig) -> Result<ClassSet> {
    let orbits = multiplicity_orbits(k)?;
    enumerate_classes_for(k, &orbits, cfg)
}

/// Class enumeration restricted to the given multiplicity vectors.
pub fn enumerate_classes_for(k: usize, mults: &[Multiplicities], cfg: &SearchConfig) -> Result<ClassSet> {
    for m in mults {
        if m.k() != k {
            return Err(Error::InvalidParameter(format!(
                "multiplicities {:?} do not have {k} entries",
                m.as_slice()
            )));
        }
        check_mult(m)?;
    }
    let split_depth = if cfg.jobs == Some(1) { 0 } else { SPLIT_DEPTH };
    let tasks: Vec<Task> = mults
        .iter()
        .map(|m| split(m, cfg, split_depth))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let nodes_done = AtomicU64::new(0);
    let result = par::map_reduce(
        cfg.jobs,
        &tasks,
        |task| {
            let set = run_task(task, k, cfg);
            nodes_done.fetch_add(set.stats.nodes, Ordering::Relaxed);
            set
        },
        || ClassSet { k, ..Default::default() },
        ClassSet::merge,
    );
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_representatives_cover_every_vector() {
        for k in 2..=5 {
            let reps = multiplicity_orbits(k).unwrap();
            let cap = side_cap(k);
            let mut covered = std::collections::BTreeSet::new();
            for r in &reps {
                for img in dihedral_images(r.as_slice()) {
                    covered.insert(img);
                }
            }
            assert_eq!(covered.len() as u64, (cap as u64).pow(k as u32));
        }
    }

    #[test]
    fn square_has_no_multi_tile_decomposition() {
        let m = Multiplicities::new(vec![1, 1]).unwrap();
        let all = collect_tilings(&m, &SearchConfig::exhaustive()).unwrap();
        assert!(all.is_empty());
    }

    #[test]
    fn hexagon_single_classes() {
        let m = Multiplicities::new(vec![1, 1, 1]).unwrap();
        let all = collect_tilings(&m, &SearchConfig::exhaustive()).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|c| c.faces.len() == 3));
    }

    #[test]
    fn cap_is_enforced() {
        let m = Multiplicities::uncapped(vec![4, 1, 1]).unwrap();
        assert!(matches!(
            collect_tilings(&m, &SearchConfig::default()),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn max_solutions_caps_the_stream() {
        let m = Multiplicities::new(vec![2, 1, 1, 1]).unwrap();
        let cfg = SearchConfig { max_solutions: Some(3), ..SearchConfig::exhaustive() };
        assert_eq!(collect_tilings(&m, &cfg).unwrap().len(), 3);
    }
}
