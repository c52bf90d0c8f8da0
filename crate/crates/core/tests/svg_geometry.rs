mod common;

use common::{random_reduced_word, reduced_words, surface, word};
use curvemin::svg::{emit_svg, point_coordinates, RenderSpec};
use curvemin::{build_initial, intersection_count, minimize, EdgePoint, PointList, SegmentList};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Xy = (f64, f64);

fn orient(a: Xy, b: Xy, c: Xy) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn properly_cross(a: Xy, b: Xy, c: Xy, d: Xy) -> bool {
    orient(a, b, c) * orient(a, b, d) < 0.0 && orient(c, d, a) * orient(c, d, b) < 0.0
}

fn drawn_crossings(p: &PointList, c: &SegmentList) -> usize {
    let coords = point_coordinates(p.surface(), p, &RenderSpec::default());
    let at = |pt: EdgePoint| coords.iter().find(|(q, _)| *q == pt).unwrap().1;
    let chords: Vec<(Xy, Xy)> = c
        .segments()
        .iter()
        .map(|w| (at(w.start), at(w.end)))
        .collect();
    let mut n = 0;
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if properly_cross(chords[i].0, chords[i].1, chords[j].0, chords[j].1) {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn drawn_chords_cross_exactly_when_segments_interleave() {
    let s = surface("abAB");
    for text in reduced_words(&s, 5) {
        let w = word(&s, &text);
        let (p, c) = build_initial(&s, &w);
        assert_eq!(
            drawn_crossings(&p, &c),
            intersection_count(&p, &c),
            "{text}"
        );
        let r = minimize(&s, &w).unwrap();
        assert_eq!(
            drawn_crossings(&r.final_points, &r.final_segments),
            r.final_count,
            "{text}"
        );
    }
}

#[test]
fn drawn_crossings_on_larger_surface() {
    let s = surface("abABcCdD");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for len in 1..=10 {
        let w = word(&s, &random_reduced_word(&mut rng, &s, len));
        let r = minimize(&s, &w).unwrap();
        assert_eq!(
            drawn_crossings(&r.final_points, &r.final_segments),
            r.final_count
        );
    }
}

#[test]
fn points_lie_in_the_canvas() {
    let spec = RenderSpec::default();
    let s = surface("abABcCdD");
    let (p, _) = build_initial(&s, &word(&s, "acbDadcB"));
    let size = 2.0 * (spec.polygon_radius + spec.margin);
    for (_, (x, y)) in point_coordinates(&s, &p, &spec) {
        assert!(x > 0.0 && x < size && y > 0.0 && y < size);
    }
}

#[test]
fn rendering_is_deterministic() {
    let s = surface("abAB");
    let w = word(&s, "bbAAA");
    let r = minimize(&s, &w).unwrap();
    let spec = RenderSpec::default();
    let a = emit_svg(&s, &r.final_points, &r.final_segments, &spec);
    let b = emit_svg(&s, &r.final_points, &r.final_segments, &spec);
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.trim_end().ends_with("</svg>"));
    assert!(!text.contains("-0.00"));
}
