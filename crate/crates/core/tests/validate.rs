mod common;

use common::{exhaustive, hexagon_rhombi, pruned};
use cstiling::validate::{mutate, validate_complex, Check, Mutation};
use cstiling::{enumerate_irreducible_classes, SearchConfig};
use proptest::prelude::*;

fn representatives() -> Vec<cstiling::TilingComplex> {
    let set = enumerate_irreducible_classes(3, &SearchConfig::default()).unwrap();
    set.classes.into_values().map(|e| e.representative).collect()
}

#[test]
fn representatives_pass_every_check() {
    for c in representatives() {
        let r = validate_complex(&c);
        assert!(r.passed(), "{r}");
        assert_eq!(r.findings.len(), Check::ALL.len());
    }
}

#[test]
fn reducible_tilings_fail_only_conditional_checks() {
    for c in exhaustive(&[2, 1, 1]) {
        let r = validate_complex(&c);
        let failed: Vec<Check> = r.failures().map(|f| f.check).collect();
        assert!(failed.iter().all(|ch| matches!(ch, Check::Irreducible | Check::CrossingEdges)), "{r}");
        assert_eq!(failed.contains(&Check::Irreducible), !cstiling::is_irreducible(&c).unwrap().0, "{r}");
    }
}

#[test]
fn merged_faces_break_convexity() {
    let c = &hexagon_rhombi()[0];
    let m = mutate(c, Mutation::MergeFaces, 0).unwrap();
    let r = validate_complex(&m);
    assert!(!r.passed());
    assert!(!r.get(Check::ZonogonShape).unwrap().passed);
}

#[test]
fn isolated_vertex_breaks_euler() {
    let m = mutate(&hexagon_rhombi()[0], Mutation::IsolatedVertex, 0).unwrap();
    assert!(!validate_complex(&m).get(Check::Euler).unwrap().passed);
}

#[test]
fn removed_face_is_caught() {
    let m = mutate(&hexagon_rhombi()[0], Mutation::RemoveFace, 1).unwrap();
    let r = validate_complex(&m);
    assert!(!r.passed());
    assert!(r.get(Check::Irreducible).unwrap().detail.contains("not evaluated"));
}

#[test]
fn every_mutation_is_rejected() {
    let base: Vec<_> = representatives().into_iter().chain(pruned(&[2, 2, 2, 2])).collect();
    for c in &base {
        for m in Mutation::ALL {
            for pick in [0, 1, 7, 12345] {
                if let Some(bad) = mutate(c, m, pick) {
                    assert!(!validate_complex(&bad).passed(), "{m:?} {pick}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_mutations_are_rejected(which in 0usize..6, m in 0usize..10, pick in any::<u64>()) {
        let c = &representatives()[which];
        if let Some(bad) = mutate(c, Mutation::ALL[m], pick) {
            prop_assert!(!validate_complex(&bad).passed());
        }
    }
}
