mod common;

use common::{exhaustive, hexagon_rhombi, pruned};
use cstiling::classify::class_report;
use cstiling::io::{
    class_file_stem, embed, face_polygons, is_convex_polygon, parse_json, render_json, render_summary, render_svg,
    summary, TilingFile,
};
use cstiling::{canonical_code, enumerate_irreducible_classes, Error, SearchConfig};

#[test]
fn json_round_trip() {
    for c in exhaustive(&[2, 1, 2, 1]).into_iter().chain(pruned(&[3, 3, 3])) {
        let back = parse_json(&render_json(&c)).unwrap();
        assert_eq!(back, c);
        assert_eq!(canonical_code(&back).unwrap(), canonical_code(&c).unwrap());
    }
}

#[test]
fn vertex_ids_are_renumbered() {
    let c = &hexagon_rhombi()[0];
    let mut f = TilingFile::from(c);
    for v in &mut f.vertices {
        *v += 100;
    }
    for e in &mut f.edges {
        e.v = e.v.map(|v| v + 100);
    }
    let back = cstiling::TilingComplex::try_from(f).unwrap();
    assert_eq!(&back, c);
}

#[test]
fn malformed_documents_are_rejected() {
    let c = &hexagon_rhombi()[0];
    let bad = |edit: &dyn Fn(&mut TilingFile)| {
        let mut f = TilingFile::from(c);
        edit(&mut f);
        matches!(cstiling::TilingComplex::try_from(f), Err(Error::Parse(_)))
    };
    assert!(bad(&|f| f.edges[0].dir = 4));
    assert!(bad(&|f| f.edges[0].dir = 0));
    assert!(bad(&|f| f.edges[0].id = 99));
    assert!(bad(&|f| f.edges[1].id = 0));
    assert!(bad(&|f| f.edges[0].v[0] = 999));
    assert!(bad(&|f| f.edges[0].wire = 9));
    assert!(bad(&|f| f.faces[0].boundary[0] = 99));
    assert!(bad(&|f| f.multiplicities.push(1)));
    assert!(bad(&|f| f.vertices.push(0)));
    assert!(matches!(parse_json("{"), Err(Error::Parse(_))));
}

#[test]
fn drawings_have_convex_tiles() {
    for c in exhaustive(&[2, 1, 2, 1]).into_iter().chain(pruned(&[3, 3, 3])) {
        let pos = embed(&c).unwrap();
        let polys = face_polygons(&c, &pos).unwrap();
        assert_eq!(polys.len(), c.faces.len());
        for p in &polys {
            assert!(is_convex_polygon(p, 1e-9));
        }
        let svg = render_svg(&c).unwrap();
        assert!(svg.starts_with("<?xml"));
        assert_eq!(svg.matches("<polygon").count(), c.faces.len());
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}

#[test]
fn convexity_test_rejects_reflex_and_clockwise() {
    let square = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
    assert!(is_convex_polygon(&square, 1e-9));
    let mut cw = square;
    cw.reverse();
    assert!(!is_convex_polygon(&cw, 1e-9));
    assert!(!is_convex_polygon(&[[0.0, 0.0], [2.0, 0.0], [1.0, 0.5], [2.0, 2.0], [0.0, 2.0]], 1e-9));
}

#[test]
fn summaries_are_deterministic() {
    let render = || {
        let set = enumerate_irreducible_classes(3, &SearchConfig::default()).unwrap();
        let reports: Vec<_> = set.classes.values().map(|e| class_report(&e.representative).unwrap()).collect();
        render_summary(&summary(3, &reports))
    };
    let a = render();
    assert_eq!(a, render());
    let s: cstiling::io::Summary = serde_json::from_str(&a).unwrap();
    assert_eq!(s.class_count, 6);
    assert!(s.case_counts.is_empty());
    assert_eq!(s.classes[0].file, format!("{}.json", class_file_stem(0)));
    assert_eq!(class_file_stem(12), "class_0012");
}
