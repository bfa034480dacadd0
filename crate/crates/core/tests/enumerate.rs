mod common;

use std::collections::BTreeSet;

use common::{exhaustive, oracle_keys, pruned, tile_key};
use cstiling::enumerate::{dihedral_images, enumerate_classes_for, multiplicity_orbits};
use cstiling::{
    canonical_code, enumerate_irreducible_classes, is_irreducible, Error, Multiplicities, SearchConfig, Sweep,
};
use proptest::prelude::*;

#[test]
fn stream_matches_move_sequence_oracle() {
    for m in [&[1, 1, 1][..], &[2, 1, 1], &[2, 2, 1], &[2, 2, 2], &[1, 1, 1, 1], &[2, 1, 1, 1], &[2, 1, 2, 1]] {
        let stream = exhaustive(m);
        let keys: BTreeSet<_> = stream.iter().map(tile_key).collect();
        assert_eq!(keys.len(), stream.len(), "{m:?} emitted a tiling twice");
        assert_eq!(keys, oracle_keys(m), "{m:?}");
    }
}

#[test]
fn frozen_tiling_counts() {
    assert_eq!(exhaustive(&[1, 1]).len(), 0);
    assert_eq!(exhaustive(&[1, 1, 1]).len(), 2);
    // Fixed from the move-sequence oracle: 8 rhombus tilings and 8 with a
    // hexagon.
    let octagon = exhaustive(&[1, 1, 1, 1]);
    assert_eq!(octagon.len(), 16);
    assert_eq!(octagon.iter().filter(|c| c.faces.iter().all(|f| f.sides() == 4)).count(), 8);
}

#[test]
fn pruning_keeps_every_irreducible_tiling() {
    for m in [&[2, 2, 2][..], &[3, 2, 1], &[3, 3, 3], &[1, 2, 1, 2], &[2, 2, 1, 1], &[2, 2, 2, 2]] {
        let irreducible: BTreeSet<_> = exhaustive(m)
            .iter()
            .filter(|c| is_irreducible(c).unwrap().0)
            .map(tile_key)
            .collect();
        let kept: BTreeSet<_> = pruned(m).iter().map(tile_key).collect();
        assert!(irreducible.is_subset(&kept), "{m:?}");
    }
}

#[test]
fn pair_prune_alone_is_weaker_but_sound() {
    let m = Multiplicities::new(vec![2, 2, 2]).unwrap();
    let pair = SearchConfig { prune_closure: false, ..SearchConfig::default() };
    let full = SearchConfig::default();
    let a = cstiling::collect_tilings(&m, &pair).unwrap();
    let b = cstiling::collect_tilings(&m, &full).unwrap();
    assert!(a.len() >= b.len());
    let ka: BTreeSet<_> = a.iter().map(tile_key).collect();
    assert!(b.iter().all(|c| ka.contains(&tile_key(c))));
}

#[test]
fn class_counts_for_small_polygons() {
    assert_eq!(enumerate_irreducible_classes(2, &SearchConfig::default()).unwrap().len(), 0);
    assert_eq!(enumerate_irreducible_classes(3, &SearchConfig::default()).unwrap().len(), 6);
}

#[test]
fn sequential_and_parallel_runs_agree() {
    let mults: Vec<_> = multiplicity_orbits(4).unwrap().into_iter().filter(|m| m.total() <= 9).collect();
    let seq = enumerate_classes_for(4, &mults, &SearchConfig { jobs: Some(1), ..Default::default() }).unwrap();
    let par = enumerate_classes_for(4, &mults, &SearchConfig { jobs: Some(3), ..Default::default() }).unwrap();
    assert_eq!(seq.classes.keys().collect::<Vec<_>>(), par.classes.keys().collect::<Vec<_>>());
    for (code, entry) in &seq.classes {
        assert_eq!(entry.representative, par.classes[code].representative);
    }
    assert_eq!(seq.irreducible_tilings, par.irreducible_tilings);
}

#[test]
fn class_representatives_are_least_and_irreducible() {
    let set = enumerate_irreducible_classes(3, &SearchConfig::default()).unwrap();
    for (code, entry) in &set.classes {
        assert_eq!(&canonical_code(&entry.representative).unwrap(), code);
        assert!(is_irreducible(&entry.representative).unwrap().0);
    }
}

#[test]
fn mismatched_multiplicities_are_rejected() {
    let m = Multiplicities::new(vec![1, 1, 1]).unwrap();
    assert!(matches!(enumerate_classes_for(4, &[m], &SearchConfig::default()), Err(Error::InvalidParameter(_))));
}

#[test]
fn progress_hook_is_called_on_long_runs() {
    use std::sync::atomic::{AtomicU64, Ordering};
    use std::sync::Arc;
    let calls = Arc::new(AtomicU64::new(0));
    let seen = calls.clone();
    let cfg = SearchConfig {
        progress_hook: Some(Arc::new(move |_| {
            seen.fetch_add(1, Ordering::Relaxed);
        })),
        ..SearchConfig::default()
    };
    let m = Multiplicities::new(vec![3, 3, 3, 5]).unwrap();
    let stats = cstiling::enumerate_tilings(&m, &cfg, |_| std::ops::ControlFlow::Continue(())).unwrap();
    assert!(stats.nodes >= 1 << 20);
    assert_eq!(calls.load(Ordering::Relaxed), stats.nodes >> 20);
}

fn small_mult() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![prop::collection::vec(1usize..=3, 3), prop::collection::vec(1usize..=2, 4)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disjoint_moves_commute(m in small_mult(), path in prop::collection::vec(any::<prop::sample::Index>(), 0..6), pick in any::<(prop::sample::Index, prop::sample::Index)>()) {
        let mult = Multiplicities::new(m).unwrap();
        let mut sweep = Sweep::new(&mult).unwrap();
        for i in &path {
            let moves = sweep.admissible_moves();
            if moves.is_empty() { break; }
            sweep.apply(&moves[i.index(moves.len())]).unwrap();
        }
        let moves = sweep.admissible_moves();
        let pairs: Vec<_> = moves.iter().flat_map(|a| moves.iter().filter(move |b| a.end() <= b.start).map(move |b| (a.clone(), b.clone()))).collect();
        prop_assume!(!pairs.is_empty());
        let (a, b) = &pairs[pick.0.index(pairs.len())];
        let mut one = sweep.clone();
        one.apply(a).unwrap();
        one.apply(b).unwrap();
        let mut two = sweep.clone();
        two.apply(b).unwrap();
        two.apply(a).unwrap();
        prop_assert_eq!(one.front().steps, two.front().steps);
        // Finish both the same way and compare the tilings.
        while !one.is_complete() {
            let mv = one.admissible_moves().remove(0);
            one.apply(&mv).unwrap();
            two.apply(&mv).unwrap();
        }
        prop_assert_eq!(tile_key(&one.to_complex().unwrap()), tile_key(&two.to_complex().unwrap()));
    }

    #[test]
    fn dihedral_images_preserve_the_multiset(m in prop::collection::vec(1usize..=5, 2..7)) {
        let mut sorted = m.clone();
        sorted.sort();
        for img in dihedral_images(&m) {
            let mut s = img.clone();
            s.sort();
            prop_assert_eq!(&s, &sorted);
        }
    }
}
