//! Bigon tracing, classification and removal.
//!
//! A bigon is found by walking two strands away from an intersection in
//! one of four directions until they cross again (a bigon) or leave the
//! polygon through different sides (a split, which on a surface with
//! boundary rules that direction out for good).

use std::fmt;

use crate::error::{Error, Result};
use crate::representative::{EdgePoint, PointList, SegmentList};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn step(self, i: usize, n: usize) -> usize {
        match self {
            Sign::Plus => (i + 1) % n,
            Sign::Minus => (i + n - 1) % n,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceDirection {
    pub first: Sign,
    pub second: Sign,
}

impl TraceDirection {
    pub const SAME: TraceDirection = TraceDirection {
        first: Sign::Plus,
        second: Sign::Plus,
    };
    pub const OPPOSITE: TraceDirection = TraceDirection {
        first: Sign::Plus,
        second: Sign::Minus,
    };
    pub const REVERSED_OPPOSITE: TraceDirection = TraceDirection {
        first: Sign::Minus,
        second: Sign::Plus,
    };
    pub const REVERSED: TraceDirection = TraceDirection {
        first: Sign::Minus,
        second: Sign::Minus,
    };

    /// Scan order used by the minimizer.
    pub const ALL: [TraceDirection; 4] = [
        Self::SAME,
        Self::OPPOSITE,
        Self::REVERSED_OPPOSITE,
        Self::REVERSED,
    ];
}

impl fmt::Display for TraceDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |s: Sign| if s == Sign::Plus { '+' } else { '-' };
        write!(f, "({},{})", c(self.first), c(self.second))
    }
}

/// Legs as walked by [`trace`], before normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTrace {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub direction: TraceDirection,
}

/// Two equal-length runs of segment indices bounded by two intersections.
///
/// `leg1` always runs forward. `leg2` runs forward for `(+,+)` and backward
/// for `(+,-)`; in both cases `leg1[m]` and `leg2[m]` were compared at step
/// `m` of the trace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinatorialBigon {
    pub leg1: Vec<usize>,
    pub leg2: Vec<usize>,
    pub orientation: TraceDirection,
}

impl CombinatorialBigon {
    pub fn len(&self) -> usize {
        self.leg1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leg1.is_empty()
    }

    fn swapped_legs(&self) -> CombinatorialBigon {
        CombinatorialBigon {
            leg1: self.leg2.clone(),
            leg2: self.leg1.clone(),
            orientation: self.orientation,
        }
    }
}

impl fmt::Display for CombinatorialBigon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{} [{}; {}]",
            self.orientation,
            join(&self.leg1),
            join(&self.leg2)
        )
    }
}

/// Rewrites a raw trace into `(+,+)` or `(+,-)` form.
pub fn normalize(raw: RawTrace) -> CombinatorialBigon {
    let RawTrace {
        mut first,
        mut second,
        direction,
    } = raw;
    match (direction.first, direction.second) {
        (Sign::Plus, Sign::Plus) => CombinatorialBigon {
            leg1: first,
            leg2: second,
            orientation: TraceDirection::SAME,
        },
        (Sign::Minus, Sign::Minus) => {
            first.reverse();
            second.reverse();
            CombinatorialBigon {
                leg1: first,
                leg2: second,
                orientation: TraceDirection::SAME,
            }
        }
        (Sign::Plus, Sign::Minus) => CombinatorialBigon {
            leg1: first,
            leg2: second,
            orientation: TraceDirection::OPPOSITE,
        },
        (Sign::Minus, Sign::Plus) => CombinatorialBigon {
            leg1: second,
            leg2: first,
            orientation: TraceDirection::OPPOSITE,
        },
    }
}

/// The point where a strand leaves segment `i` when walked in `sign`.
fn exit_point(c: &SegmentList, i: usize, sign: Sign) -> EdgePoint {
    match sign {
        Sign::Plus => c[i].end,
        Sign::Minus => c[i].start,
    }
}

/// Walks from the intersection of segments `k` and `l` in direction `dir`.
pub fn trace(
    p: &PointList,
    c: &SegmentList,
    k: usize,
    l: usize,
    dir: TraceDirection,
) -> Result<Option<CombinatorialBigon>> {
    let n = c.len();
    if k >= n {
        return Err(Error::SegmentOutOfRange(k));
    }
    if l >= n {
        return Err(Error::SegmentOutOfRange(l));
    }
    if k == l {
        return Err(Error::SameSegment);
    }
    if !p.crosses(&c[k], &c[l]) {
        return Err(Error::NotAnIntersection(k, l));
    }
    let (mut a, mut b) = (k, l);
    let mut first = vec![k];
    let mut second = vec![l];
    for _ in 0..n {
        let (x, y) = (exit_point(c, a, dir.first), exit_point(c, b, dir.second));
        if x.symbol != y.symbol {
            return Ok(None);
        }
        a = dir.first.step(a, n);
        b = dir.second.step(b, n);
        if a == b {
            return Ok(None);
        }
        first.push(a);
        second.push(b);
        if p.crosses(&c[a], &c[b]) {
            return Ok(Some(normalize(RawTrace {
                first,
                second,
                direction: dir,
            })));
        }
    }
    Ok(None)
}

/// Segment indices that occur in both legs, in `leg1` order.
///
/// Shared segments must sit at the leg ends: each maximal shared run at the
/// start (end) of one leg equals the run at the end (start) of the other.
pub fn shared_segments(b: &CombinatorialBigon) -> Result<Vec<usize>> {
    let len = b.len();
    if b.leg2.len() != len || len < 2 {
        return Err(Error::StructureViolation(format!(
            "legs of lengths {} and {}",
            len,
            b.leg2.len()
        )));
    }
    let shared: Vec<usize> = b
        .leg1
        .iter()
        .copied()
        .filter(|i| b.leg2.contains(i))
        .collect();
    if shared.is_empty() {
        return Ok(shared);
    }
    let violation = || Error::StructureViolation(format!("shared {shared:?} in bigon {b}"));
    if b.orientation != TraceDirection::SAME {
        return Err(violation());
    }
    // Split leg1 into a shared prefix of length `x` and shared suffix of
    // length `y`; the prefix must close leg2 and the suffix must open it.
    let fits = |x: usize, y: usize| {
        x + y <= len
            && x + y == shared.len()
            && b.leg1[..x] == b.leg2[len - x..]
            && b.leg1[len - y..] == b.leg2[..y]
    };
    let ok = (0..=shared.len()).any(|x| fits(x, shared.len() - x));
    if ok {
        Ok(shared)
    } else {
        Err(violation())
    }
}

/// Outcome of classifying a combinatorial bigon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BigonClass {
    /// Legs share no segment.
    RemovableProper,
    /// One shared segment; the terminal points match a removable row of
    /// the essential-ordering table (1..=5).
    RemovableShared(u8),
    /// Two or more shared segments.
    ImproperSharedTwoPlus,
    /// One shared segment in the sixth essential ordering.
    ImproperCase6,
}

impl BigonClass {
    pub fn is_removable(self) -> bool {
        matches!(
            self,
            BigonClass::RemovableProper | BigonClass::RemovableShared(_)
        )
    }
}

impl fmt::Display for BigonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigonClass::RemovableProper => write!(f, "removable (no shared segments)"),
            BigonClass::RemovableShared(case) => write!(f, "removable (shared, case {case})"),
            BigonClass::ImproperSharedTwoPlus => write!(f, "improper (two or more shared)"),
            BigonClass::ImproperCase6 => write!(f, "improper (shared, case 6)"),
        }
    }
}

/// Endpoints of the three terminal segments of a one-shared bigon, where
/// `k` is the shared segment (first of leg 1, last of leg 2), `l` opens
/// leg 2 and `i` closes leg 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Terminal {
    K1,
    K2,
    L1,
    L2,
    I1,
    I2,
}

use Terminal::*;

/// The six essential cyclic orderings, each read from `K1`. An observed
/// ordering matches a row if it equals the row or its reversal.
pub const ESSENTIAL_ORDERINGS: [[Terminal; 6]; 6] = [
    [K1, I1, L2, K2, I2, L1],
    [K1, I1, L2, K2, L1, I2],
    [K1, L2, I2, K2, L1, I1],
    [K1, I2, L2, K2, L1, I1],
    [K1, I2, L2, K2, I1, L1],
    [K1, L2, I2, K2, I1, L1],
];

/// Crossings among the three terminal segments before and after the
/// removal swaps, per row of [`ESSENTIAL_ORDERINGS`].
pub const TERMINAL_CROSSINGS: [(usize, usize); 6] =
    [(3, 1), (2, 0), (3, 1), (2, 0), (3, 1), (2, 2)];

/// A one-shared bigon arranged so that `k` = first of leg 1 = last of leg 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TerminalSegments {
    pub k: usize,
    pub l: usize,
    pub i: usize,
}

/// Arranges a one-shared bigon so its shared segment opens leg 1.
pub fn orient_one_shared(b: &CombinatorialBigon) -> Result<(CombinatorialBigon, TerminalSegments)> {
    let shared = shared_segments(b)?;
    if shared.len() != 1 {
        return Err(Error::StructureViolation(format!(
            "expected one shared segment, found {}",
            shared.len()
        )));
    }
    let b = if b.leg1[0] == shared[0] {
        b.clone()
    } else {
        b.swapped_legs()
    };
    let len = b.len();
    debug_assert_eq!(b.leg1[0], b.leg2[len - 1]);
    let t = TerminalSegments {
        k: b.leg1[0],
        l: b.leg2[0],
        i: b.leg1[len - 1],
    };
    Ok((b, t))
}

fn terminal_points(c: &SegmentList, t: TerminalSegments) -> [(Terminal, EdgePoint); 6] {
    [
        (K1, c[t.k].start),
        (K2, c[t.k].end),
        (L1, c[t.l].start),
        (L2, c[t.l].end),
        (I1, c[t.i].start),
        (I2, c[t.i].end),
    ]
}

/// Row number (1..=6) of the essential ordering realized in `p`.
pub fn match_ordering(p: &PointList, c: &SegmentList, t: TerminalSegments) -> Result<u8> {
    let mut order = Vec::with_capacity(6);
    for (name, pt) in terminal_points(c, t) {
        order.push((p.position(pt)?, name));
    }
    order.sort_by_key(|&(pos, _)| pos);
    let start = order.iter().position(|&(_, n)| n == K1).unwrap();
    let seq: Vec<Terminal> = (0..6).map(|j| order[(start + j) % 6].1).collect();
    let rev: Vec<Terminal> = (0..6).map(|j| seq[(6 - j) % 6]).collect();
    ESSENTIAL_ORDERINGS
        .iter()
        .position(|row| row[..] == seq[..] || row[..] == rev[..])
        .map(|r| r as u8 + 1)
        .ok_or(Error::UnmatchedOrdering)
}

/// `x` lies on the same side as `y` and `z`, strictly between them.
fn between_on_side(p: &PointList, x: EdgePoint, y: EdgePoint, z: EdgePoint) -> bool {
    if x.symbol != y.symbol || x.symbol != z.symbol {
        return false;
    }
    let (px, py, pz) = (p.pos(x), p.pos(y), p.pos(z));
    py.min(pz) < px && px < py.max(pz)
}

/// The improper-ordering condition stated through betweenness: `l1` between
/// `i1` and `k1`, and `i2` between `l2` and `k2`.
pub fn betweenness_condition(p: &PointList, c: &SegmentList, t: TerminalSegments) -> bool {
    between_on_side(p, c[t.l].start, c[t.i].start, c[t.k].start)
        && between_on_side(p, c[t.i].end, c[t.l].end, c[t.k].end)
}

pub fn classify(p: &PointList, c: &SegmentList, b: &CombinatorialBigon) -> Result<BigonClass> {
    let shared = shared_segments(b)?;
    match shared.len() {
        0 => Ok(BigonClass::RemovableProper),
        1 => {
            let (_, t) = orient_one_shared(b)?;
            let case = match_ordering(p, c, t)?;
            debug_assert_eq!(case == 6, betweenness_condition(p, c, t));
            if case == 6 {
                Ok(BigonClass::ImproperCase6)
            } else {
                Ok(BigonClass::RemovableShared(case))
            }
        }
        _ => Ok(BigonClass::ImproperSharedTwoPlus),
    }
}

/// Transpositions realizing the homotopy across the bigon: for each step
/// `m` in `1..L`, the point where leg 1 passes from its `(m-1)`-th to its
/// `m`-th segment is exchanged with the matching point of leg 2.
pub fn removal_swaps(c: &SegmentList, b: &CombinatorialBigon) -> Vec<(EdgePoint, EdgePoint)> {
    (1..b.len())
        .map(|m| {
            let x = c[b.leg1[m - 1]].end;
            let y = if b.orientation == TraceDirection::SAME {
                c[b.leg2[m - 1]].end
            } else {
                c[b.leg2[m - 1]].start
            };
            (x, y)
        })
        .collect()
}

/// Applies the transpositions of `swaps` to a copy of `p`.
pub fn apply_swaps(p: &PointList, swaps: &[(EdgePoint, EdgePoint)]) -> Result<PointList> {
    let mut q = p.clone();
    for &(x, y) in swaps {
        q.swap(x, y)?;
    }
    Ok(q)
}

/// Removes a removable bigon from `p`. `c` is left untouched.
pub fn apply_removal(p: &PointList, c: &SegmentList, b: &CombinatorialBigon) -> Result<PointList> {
    if !classify(p, c, b)?.is_removable() {
        return Err(Error::NotRemovable);
    }
    apply_swaps(p, &removal_swaps(c, b))
}
