mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{exhaustive, hexagon_rhombi, pruned};
use cstiling::classify::type_string;
use cstiling::enumerate::multiplicity_orbits;
use cstiling::{boundary_signature, canonical_code, dedupe, side_profile, CanonicalCode, TilingComplex};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn shuffled(c: &TilingComplex, seed: u64) -> TilingComplex {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut perm = |n: usize| {
        let mut p: Vec<u32> = (0..n as u32).collect();
        p.shuffle(&mut rng);
        p
    };
    let (v, e, f) = (perm(c.num_vertices as usize), perm(c.edges.len()), perm(c.faces.len()));
    c.relabeled(&v, &e, &f)
}

fn corpus() -> Vec<TilingComplex> {
    let mut out: Vec<_> = multiplicity_orbits(3).unwrap().iter().flat_map(|m| pruned(m.as_slice())).collect();
    out.extend(exhaustive(&[1, 1, 1, 1]));
    out.extend(exhaustive(&[2, 1, 1, 1]));
    out
}

#[test]
fn both_rhombus_tilings_share_a_code() {
    let t = hexagon_rhombi();
    assert_eq!(t.len(), 2);
    assert_eq!(canonical_code(&t[0]).unwrap(), canonical_code(&t[1]).unwrap());
    assert_eq!(dedupe(t.clone()).unwrap().len(), 1);
}

#[test]
fn dedupe_keeps_the_least_representative() {
    let t = hexagon_rhombi();
    let least = t.iter().min().unwrap().clone();
    let map = dedupe(t.into_iter().rev()).unwrap();
    assert_eq!(map.values().next().unwrap(), &least);
}

#[test]
fn different_tile_counts_give_different_codes() {
    let rhombi = canonical_code(&hexagon_rhombi()[0]).unwrap();
    for c in exhaustive(&[2, 1, 1]) {
        if c.faces.len() == 4 {
            assert_ne!(canonical_code(&c).unwrap(), rhombi);
        }
    }
}

#[test]
fn mirror_images_share_a_code() {
    for c in corpus() {
        let m = c.mirrored();
        assert_eq!(canonical_code(&c).unwrap(), canonical_code(&m).unwrap());
        assert_eq!(canonical_code(&m.mirrored()).unwrap(), canonical_code(&c).unwrap());
    }
}

#[test]
fn side_profiles_follow_the_mirror() {
    for c in corpus() {
        let k = c.k();
        let m = c.mirrored();
        for side in 1..=2 * k {
            let image = (2 * k - (side - 1)) % (2 * k) + 1;
            assert_eq!(side_profile(&c, side).unwrap(), side_profile(&m, image).unwrap());
        }
    }
}

#[test]
fn side_types_separate_codes() {
    let mut by_code: BTreeMap<CanonicalCode, BTreeSet<String>> = BTreeMap::new();
    for c in corpus() {
        let t = type_string(&boundary_signature(&c).unwrap()).unwrap();
        by_code.entry(canonical_code(&c).unwrap()).or_default().insert(t);
    }
    assert!(by_code.values().all(|types| types.len() == 1));
}

#[test]
fn hex_codes_round_trip() {
    for c in hexagon_rhombi() {
        let code = canonical_code(&c).unwrap();
        assert_eq!(CanonicalCode::from_hex(&code.to_hex()).unwrap(), code);
        assert_eq!(code.to_string(), code.to_hex());
    }
}

#[test]
fn side_index_out_of_range() {
    let c = &hexagon_rhombi()[0];
    assert!(side_profile(c, 0).is_err());
    assert!(side_profile(c, 7).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn codes_ignore_identifiers(which in 0usize..64, seed in any::<u64>()) {
        let all = exhaustive(&[2, 1, 2, 1]);
        let c = &all[which % all.len()];
        let s = shuffled(c, seed);
        prop_assert_eq!(canonical_code(c).unwrap(), canonical_code(&s).unwrap());
        for side in 1..=8 {
            prop_assert_eq!(side_profile(c, side).unwrap(), side_profile(&s, side).unwrap());
        }
    }
}
