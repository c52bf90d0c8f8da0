//! The find-classify-remove loop and a brute-force reference.

use itertools::Itertools;

use crate::bigon::{
    apply_swaps, classify, removal_swaps, trace, BigonClass, CombinatorialBigon, TraceDirection,
};
use crate::error::{Error, Result};
use crate::representative::{
    build_initial, intersecting_pairs, intersection_count, EdgePoint, PointList, SegmentList,
};
use crate::words::{CyclicWord, SurfaceWord};

/// Default bound on the number of orderings [`oracle_min`] will enumerate.
pub const DEFAULT_ORACLE_CAP: u128 = 10_000_000;

/// One applied bigon removal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalStep {
    /// Intersecting pair the trace started from.
    pub pair: (usize, usize),
    pub direction: TraceDirection,
    pub bigon: CombinatorialBigon,
    pub class: BigonClass,
    pub swaps: Vec<(EdgePoint, EdgePoint)>,
    pub count_before: usize,
    pub count_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimizationReport {
    pub surface: SurfaceWord,
    pub word: CyclicWord,
    pub initial_count: usize,
    pub final_count: usize,
    pub steps: Vec<RemovalStep>,
    pub final_points: PointList,
    pub final_segments: SegmentList,
    /// Improper bigons met (and passed over) during all scans.
    pub skipped_improper: usize,
}

/// A classified bigon, reported to observers before any removal.
#[derive(Debug)]
pub struct Encounter<'a> {
    pub points: &'a PointList,
    pub segments: &'a SegmentList,
    pub pair: (usize, usize),
    pub direction: TraceDirection,
    pub bigon: &'a CombinatorialBigon,
    pub class: BigonClass,
}

pub fn minimize(surface: &SurfaceWord, word: &CyclicWord) -> Result<MinimizationReport> {
    let (p, c) = build_initial(surface, word);
    minimize_observed(surface, word, p, c, &mut |_| {})
}

/// Runs the loop from an arbitrary starting configuration.
pub fn minimize_from(
    surface: &SurfaceWord,
    word: &CyclicWord,
    points: PointList,
    segments: SegmentList,
) -> Result<MinimizationReport> {
    minimize_observed(surface, word, points, segments, &mut |_| {})
}

/// Scans intersecting pairs lexicographically and tries the four trace
/// directions in [`TraceDirection::ALL`] order. The first removable bigon
/// is removed and the scan restarts; improper ones are counted and passed
/// over. Stops when a full scan removes nothing.
pub fn minimize_observed(
    surface: &SurfaceWord,
    word: &CyclicWord,
    points: PointList,
    segments: SegmentList,
    observer: &mut dyn FnMut(&Encounter<'_>),
) -> Result<MinimizationReport> {
    if points.len() != 2 * segments.len() {
        return Err(Error::InvalidOrdering);
    }
    for w in segments.segments() {
        points.position(w.start)?;
        points.position(w.end)?;
    }
    let mut p = points;
    let c = segments;
    let initial_count = intersection_count(&p, &c);
    let mut count = initial_count;
    let mut steps = Vec::new();
    let mut skipped_improper = 0;

    'scan: loop {
        for pair in intersecting_pairs(&p, &c) {
            for direction in TraceDirection::ALL {
                let Some(bigon) = trace(&p, &c, pair.0, pair.1, direction)? else {
                    continue;
                };
                let class = classify(&p, &c, &bigon)?;
                observer(&Encounter {
                    points: &p,
                    segments: &c,
                    pair,
                    direction,
                    bigon: &bigon,
                    class,
                });
                if !class.is_removable() {
                    skipped_improper += 1;
                    continue;
                }
                let swaps = removal_swaps(&c, &bigon);
                let next = apply_swaps(&p, &swaps)?;
                let after = intersection_count(&next, &c);
                if after >= count {
                    return Err(Error::NoProgress {
                        before: count,
                        after,
                    });
                }
                steps.push(RemovalStep {
                    pair,
                    direction,
                    bigon,
                    class,
                    swaps,
                    count_before: count,
                    count_after: after,
                });
                p = next;
                count = after;
                continue 'scan;
            }
        }
        break;
    }

    Ok(MinimizationReport {
        surface: surface.clone(),
        word: word.clone(),
        initial_count,
        final_count: count,
        steps,
        final_points: p,
        final_segments: c,
        skipped_improper,
    })
}

/// Product of `m_e!` over all generators, saturating.
pub fn ordering_space_size(points: &PointList) -> u128 {
    (0..points.surface().rank())
        .map(|e| (1..=points.multiplicity(e) as u128).product::<u128>())
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

/// Every point list over the same surface and multiplicities.
pub fn all_orderings(points: &PointList) -> impl Iterator<Item = PointList> + '_ {
    let surface = points.surface();
    (0..surface.rank())
        .map(|e| {
            let m = points.multiplicity(e);
            (1..=m as u32).permutations(m)
        })
        .multi_cartesian_product()
        .map(move |orders| PointList::from_orders(surface, orders).expect("valid permutation"))
}

/// Least intersection count over every edge ordering, with the canonical
/// segment list held fixed.
pub fn oracle_min(surface: &SurfaceWord, word: &CyclicWord, cap: u128) -> Result<usize> {
    let (p, c) = build_initial(surface, word);
    let size = ordering_space_size(&p);
    if size > cap {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    Ok(all_orderings(&p)
        .map(|q| intersection_count(&q, &c))
        .min()
        .expect("at least one ordering"))
}
