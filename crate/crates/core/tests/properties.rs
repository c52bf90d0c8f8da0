mod common;

use common::{random_reduced_word, surface, word};
use curvemin::bigon::removal_swaps;
use curvemin::minimizer::all_orderings;
use curvemin::{
    apply_removal, build_initial, classify, cyclic_reduce, intersecting_pairs, intersection_count,
    minimize, minimize_from, minimize_observed, parse_surface_word, surface_invariants, PointList,
    SegmentList, SurfaceWord,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn surface_text() -> impl Strategy<Value = &'static str> {
    prop_oneof![
        Just("abAB"),
        Just("abABcCdD"),
        Just("aA"),
        Just("abcABC"),
        Just("abAcBC")
    ]
}

/// (surface, word) with a cyclically reduced word of length 1..=max_len.
fn configuration(max_len: usize) -> impl Strategy<Value = (SurfaceWord, String)> {
    (surface_text(), 1..=max_len, any::<u64>()).prop_map(|(s, len, seed)| {
        let s = surface(s);
        let w = random_reduced_word(&mut ChaCha8Rng::seed_from_u64(seed), &s, len);
        (s, w)
    })
}

fn check_structure(p: &PointList, c: &SegmentList) {
    let derived = p.derived();
    assert_eq!(derived.len(), 2 * c.len());
    for (k, w) in c.segments().iter().enumerate() {
        let next = &c[(k + 1) % c.len()];
        assert_eq!(next.start, w.end.inverse());
    }
    // The block of an inverted symbol mirrors the block of its letter.
    for x in &derived {
        for y in &derived {
            if x.symbol == y.symbol && x != y {
                let forward = p.position(*x).unwrap() < p.position(*y).unwrap();
                let mirrored = p.position(x.inverse()).unwrap() > p.position(y.inverse()).unwrap();
                assert_eq!(forward, mirrored);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn interleave_is_symmetric((s, w) in configuration(8)) {
        let (p, c) = build_initial(&s, &word(&s, &w));
        for i in 0..c.len() {
            for j in 0..c.len() {
                if i != j {
                    prop_assert_eq!(
                        p.interleaves(&c[i], &c[j]).unwrap(),
                        p.interleaves(&c[j], &c[i]).unwrap()
                    );
                }
            }
        }
        prop_assert!(p.interleaves(&c[0], &c[0]).is_err());
    }

    #[test]
    fn initial_configuration_is_consistent((s, w) in configuration(10)) {
        let cw = word(&s, &w);
        let (p, c) = build_initial(&s, &cw);
        prop_assert_eq!(c.len(), cw.len());
        check_structure(&p, &c);
        let pairs = intersecting_pairs(&p, &c);
        prop_assert_eq!(pairs.len(), intersection_count(&p, &c));
        prop_assert!(pairs.iter().all(|&(i, j)| i < j));
    }

    #[test]
    fn removal_keeps_invariants_and_lowers_count((s, w) in configuration(8)) {
        let cw = word(&s, &w);
        let (p, c) = build_initial(&s, &cw);
        let c_before = c.clone();
        let mut checked = 0;
        minimize_observed(&s, &cw, p, c, &mut |e| {
            if e.class.is_removable() && checked < 3 {
                checked += 1;
                let q = apply_removal(e.points, e.segments, e.bigon).unwrap();
                check_structure(&q, e.segments);
                assert!(intersection_count(&q, e.segments) < intersection_count(e.points, e.segments));
                assert_eq!(removal_swaps(e.segments, e.bigon).len(), e.bigon.len() - 1);
            } else if !e.class.is_removable() {
                assert!(apply_removal(e.points, e.segments, e.bigon).is_err());
            }
        })
        .unwrap();
        let r = minimize(&s, &cw).unwrap();
        prop_assert_eq!(&r.final_segments, &c_before);
    }

    #[test]
    fn minimization_is_idempotent((s, w) in configuration(10)) {
        let cw = word(&s, &w);
        let r = minimize(&s, &cw).unwrap();
        prop_assert!(r.final_count <= r.initial_count);
        prop_assert!(2 * r.steps.len() <= r.initial_count);
        prop_assert_eq!(
            r.steps.iter().map(|st| st.count_before - st.count_after).sum::<usize>(),
            r.initial_count - r.final_count
        );
        let again = minimize_from(&s, &cw, r.final_points.clone(), r.final_segments.clone()).unwrap();
        prop_assert!(again.steps.is_empty());
        prop_assert_eq!(again.final_points, r.final_points);
    }

    #[test]
    fn count_ignores_where_the_segment_list_starts((s, w) in configuration(10), k in 0usize..10) {
        let (p, c) = build_initial(&s, &word(&s, &w));
        prop_assert_eq!(intersection_count(&p, &c.rotated(k % c.len())), intersection_count(&p, &c));
    }

    #[test]
    fn final_count_ignores_word_rotation((s, w) in configuration(7), k in 0usize..7) {
        let cw = word(&s, &w);
        let a = minimize(&s, &cw).unwrap().final_count;
        let b = minimize(&s, &cw.rotated(k % cw.len())).unwrap().final_count;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn cyclic_reduction_is_idempotent(raw in "[abAB]{1,12}") {
        let s = surface("abAB");
        match cyclic_reduce(&raw, &s).unwrap() {
            None => {
                // Every letter cancels, so each generator appears as often
                // as its inverse.
                for (x, y) in [('a', 'A'), ('b', 'B')] {
                    prop_assert_eq!(raw.matches(x).count(), raw.matches(y).count());
                }
            }
            Some(w) => {
                prop_assert_eq!(w.len() % 2, raw.len() % 2);
                let again = cyclic_reduce(&w.to_string(), &s).unwrap().unwrap();
                prop_assert_eq!(again, w);
            }
        }
    }

    #[test]
    fn surface_words_pair_every_generator(perm in Just(vec!['a', 'b', 'c', 'A', 'B', 'C']).prop_shuffle()) {
        let text: String = perm.into_iter().collect();
        let s = parse_surface_word(&text).unwrap();
        let inv = surface_invariants(&s);
        prop_assert!(inv.boundary_components >= 1);
        prop_assert_eq!(inv.euler_characteristic, 1 - 3);
        prop_assert_eq!(
            inv.euler_characteristic,
            2 - 2 * inv.genus as i64 - inv.boundary_components as i64
        );
    }
}

#[test]
fn classification_does_not_depend_on_observer() {
    let s = surface("abAB");
    let w = word(&s, "bbAAA");
    let (p, c) = build_initial(&s, &w);
    let mut seen = Vec::new();
    minimize_observed(&s, &w, p, c, &mut |e| {
        seen.push((e.class, classify(e.points, e.segments, e.bigon).unwrap()));
    })
    .unwrap();
    assert!(!seen.is_empty());
    assert!(seen.iter().all(|(a, b)| a == b));
}

#[test]
fn orderings_cover_the_space() {
    let s = surface("abAB");
    let (p, _) = build_initial(&s, &word(&s, "aabbb"));
    let all: Vec<_> = all_orderings(&p).collect();
    assert_eq!(all.len(), 2 * 6);
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            assert_ne!(a, b);
        }
    }
}
