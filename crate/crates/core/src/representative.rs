//! Combinatorial encoding of a segmented representative.
//!
//! A [`PointList`] records, for every generator `e`, the clockwise order of
//! the crossing points on the `e` side of the polygon. The partner side `E`
//! carries the same points in reversed order, so the global cyclic order is
//! derived rather than stored and the mirror constraint cannot be broken.
//! A [`SegmentList`] lists the chords in the order the curve visits them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{CyclicWord, SurfaceWord, Symbol};

/// Crossing point `(symbol, index)`. `(s, k)` and `(S, k)` are the same
/// point on the surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgePoint {
    pub symbol: Symbol,
    pub index: u32,
}

impl EdgePoint {
    pub fn new(symbol: Symbol, index: u32) -> Self {
        EdgePoint { symbol, index }
    }

    pub fn inverse(self) -> Self {
        EdgePoint {
            symbol: self.symbol.inverse(),
            index: self.index,
        }
    }
}

impl fmt::Display for EdgePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.symbol, self.index)
    }
}

impl FromStr for EdgePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let c = chars.next().ok_or(Error::EmptyInput)?;
        let symbol = Symbol::from_char(c)?;
        let rest = chars.as_str();
        match rest.parse::<u32>() {
            Ok(index) if index >= 1 && rest.bytes().all(|b| b.is_ascii_digit()) => {
                Ok(EdgePoint { symbol, index })
            }
            _ => Err(Error::NonLetterCharacter(rest.chars().next().unwrap_or(c))),
        }
    }
}

/// A chord of the polygon, traversed from `start` to `end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WordSegment {
    pub start: EdgePoint,
    pub end: EdgePoint,
}

impl fmt::Display for WordSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointList {
    surface: SurfaceWord,
    /// Per generator: clockwise order of lowercase indices.
    orders: Vec<Vec<u32>>,
    /// Per generator: `rank[e][k - 1]` is the place of index `k` in `orders[e]`.
    rank: Vec<Vec<usize>>,
    /// Per symbol slot: first position of its block in the derived order.
    block_start: Vec<usize>,
    total: usize,
}

impl PointList {
    /// Validates per-generator orders against the surface. `orders[e]` must
    /// be a permutation of `1..=m_e` for the `e`-th generator.
    pub fn from_orders(surface: &SurfaceWord, orders: Vec<Vec<u32>>) -> Result<Self> {
        if orders.len() != surface.rank() {
            return Err(Error::InvalidOrdering);
        }
        let mut rank = Vec::with_capacity(orders.len());
        for order in &orders {
            let mut r = vec![usize::MAX; order.len()];
            for (place, &k) in order.iter().enumerate() {
                let k = k as usize;
                if k == 0 || k > order.len() || r[k - 1] != usize::MAX {
                    return Err(Error::InvalidOrdering);
                }
                r[k - 1] = place;
            }
            rank.push(r);
        }
        let mut block_start = vec![0; 2 * surface.rank()];
        let mut total = 0;
        for &s in surface.symbols() {
            let slot = surface.slot(s).unwrap();
            block_start[slot] = total;
            total += orders[slot / 2].len();
        }
        Ok(PointList {
            surface: surface.clone(),
            orders,
            rank,
            block_start,
            total,
        })
    }

    pub(crate) fn identity(surface: &SurfaceWord, multiplicities: &[usize]) -> Self {
        let orders = multiplicities
            .iter()
            .map(|&m| (1..=m as u32).collect())
            .collect();
        PointList::from_orders(surface, orders).expect("identity orders are valid")
    }

    pub fn surface(&self) -> &SurfaceWord {
        &self.surface
    }

    /// Clockwise order of lowercase indices, one entry per generator.
    pub fn orders(&self) -> &[Vec<u32>] {
        &self.orders
    }

    pub fn multiplicity(&self, letter_index: usize) -> usize {
        self.orders[letter_index].len()
    }

    /// Length of the derived cyclic order (twice the number of segments).
    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Index of `pt` in the derived cyclic order.
    pub fn position(&self, pt: EdgePoint) -> Result<usize> {
        let slot = self
            .surface
            .slot(pt.symbol)
            .ok_or(Error::UnknownPoint(pt))?;
        let e = slot / 2;
        let m = self.orders[e].len();
        let k = pt.index as usize;
        if k == 0 || k > m {
            return Err(Error::UnknownPoint(pt));
        }
        let r = self.rank[e][k - 1];
        let offset = if pt.symbol.is_inverted() {
            m - 1 - r
        } else {
            r
        };
        Ok(self.block_start[slot] + offset)
    }

    pub(crate) fn pos(&self, pt: EdgePoint) -> usize {
        self.position(pt)
            .unwrap_or_else(|_| panic!("point {pt} is not in the point list"))
    }

    /// Every point in derived cyclic order.
    pub fn derived(&self) -> Vec<EdgePoint> {
        let mut out = Vec::with_capacity(self.total);
        for &s in self.surface.symbols() {
            let order = &self.orders[self.surface.slot(s).unwrap() / 2];
            if s.is_inverted() {
                out.extend(order.iter().rev().map(|&k| EdgePoint::new(s, k)));
            } else {
                out.extend(order.iter().map(|&k| EdgePoint::new(s, k)));
            }
        }
        out
    }

    /// True when the endpoints of `t` lie in different open arcs cut out by
    /// the endpoints of `s`.
    pub fn interleaves(&self, s: &WordSegment, t: &WordSegment) -> Result<bool> {
        if s == t {
            return Err(Error::SameSegment);
        }
        let chord = |w: &WordSegment| -> Result<(usize, usize)> {
            Ok((self.position(w.start)?, self.position(w.end)?))
        };
        Ok(chords_cross(chord(s)?, chord(t)?))
    }

    pub(crate) fn crosses(&self, s: &WordSegment, t: &WordSegment) -> bool {
        chords_cross(
            (self.pos(s.start), self.pos(s.end)),
            (self.pos(t.start), self.pos(t.end)),
        )
    }

    /// Exchanges two points on the same side. The mirrored points on the
    /// partner side move with them.
    pub fn swap(&mut self, p: EdgePoint, q: EdgePoint) -> Result<()> {
        if p.symbol != q.symbol {
            return Err(Error::EdgeMismatch(p, q));
        }
        // Validates both labels.
        self.position(p)?;
        self.position(q)?;
        let e = self.surface.slot(p.symbol).unwrap() / 2;
        let (a, b) = (p.index as usize - 1, q.index as usize - 1);
        let (ra, rb) = (self.rank[e][a], self.rank[e][b]);
        self.orders[e].swap(ra, rb);
        self.rank[e][a] = rb;
        self.rank[e][b] = ra;
        Ok(())
    }
}

fn chords_cross(s: (usize, usize), t: (usize, usize)) -> bool {
    let (lo, hi) = if s.0 < s.1 { (s.0, s.1) } else { (s.1, s.0) };
    let inside = |x: usize| lo < x && x < hi;
    inside(t.0) != inside(t.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegmentList {
    segments: Vec<WordSegment>,
}

impl SegmentList {
    /// Checks the chaining law: each segment starts where the previous one
    /// ended, seen from the partner side.
    pub fn new(segments: Vec<WordSegment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = segments.len();
        for i in 0..n {
            let next = &segments[(i + 1) % n];
            if next.start != segments[i].end.inverse() || segments[i].start == segments[i].end {
                return Err(Error::StructureViolation(format!(
                    "segment {} does not chain into segment {}",
                    i,
                    (i + 1) % n
                )));
            }
        }
        Ok(SegmentList { segments })
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn segments(&self) -> &[WordSegment] {
        &self.segments
    }

    pub fn get(&self, i: usize) -> Result<&WordSegment> {
        self.segments.get(i).ok_or(Error::SegmentOutOfRange(i))
    }

    /// Segment at a cyclic index.
    pub fn at(&self, i: usize) -> &WordSegment {
        &self.segments[i % self.segments.len()]
    }

    /// The same cyclic list starting at segment `k`.
    pub fn rotated(&self, k: usize) -> SegmentList {
        let mut segments = self.segments.clone();
        segments.rotate_left(k % self.segments.len());
        SegmentList { segments }
    }
}

impl std::ops::Index<usize> for SegmentList {
    type Output = WordSegment;

    fn index(&self, i: usize) -> &WordSegment {
        &self.segments[i]
    }
}

/// Canonical starting configuration for a curve word.
///
/// The `j`-th crossing of generator `e` (counting both `e` and `E`, in
/// reading order) gets index `m_e - j + 1`. Segment `i` runs from the
/// re-entry point after crossing `w_i` to the crossing of `w_{i+1}`, so the
/// start labels read the word itself once inverted. Every edge order starts
/// as the identity.
pub fn build_initial(surface: &SurfaceWord, word: &CyclicWord) -> (PointList, SegmentList) {
    let mut multiplicity = vec![0usize; surface.rank()];
    for &s in word.letters() {
        multiplicity[surface
            .letter_index(s.letter())
            .expect("letter in alphabet")] += 1;
    }
    let mut seen = vec![0usize; surface.rank()];
    let crossings: Vec<EdgePoint> = word
        .letters()
        .iter()
        .map(|&s| {
            let e = surface.letter_index(s.letter()).unwrap();
            seen[e] += 1;
            EdgePoint::new(s, (multiplicity[e] - seen[e] + 1) as u32)
        })
        .collect();
    let n = crossings.len();
    let segments = (0..n)
        .map(|i| WordSegment {
            start: crossings[i].inverse(),
            end: crossings[(i + 1) % n],
        })
        .collect();
    (
        PointList::identity(surface, &multiplicity),
        SegmentList { segments },
    )
}

fn chord_positions(p: &PointList, c: &SegmentList) -> Vec<(usize, usize)> {
    c.segments()
        .iter()
        .map(|w| (p.pos(w.start), p.pos(w.end)))
        .collect()
}

/// Number of unordered pairs of interleaving segments.
pub fn intersection_count(p: &PointList, c: &SegmentList) -> usize {
    let chords = chord_positions(p, c);
    let mut count = 0;
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if chords_cross(chords[i], chords[j]) {
                count += 1;
            }
        }
    }
    count
}

/// All interleaving pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn intersecting_pairs(p: &PointList, c: &SegmentList) -> Vec<(usize, usize)> {
    let chords = chord_positions(p, c);
    let mut pairs = Vec::new();
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if chords_cross(chords[i], chords[j]) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_cyclic_word, parse_surface_word};

    fn pt(s: &str) -> EdgePoint {
        s.parse().unwrap()
    }

    fn seg(a: &str, b: &str) -> WordSegment {
        WordSegment {
            start: pt(a),
            end: pt(b),
        }
    }

    fn config(surface: &str, word: &str) -> (PointList, SegmentList) {
        let s = parse_surface_word(surface).unwrap();
        let w = parse_cyclic_word(word, &s).unwrap();
        build_initial(&s, &w)
    }

    fn labels(points: &[EdgePoint]) -> Vec<String> {
        points.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn walkthrough_configuration() {
        let (p, c) = config("abAB", "bbAAA");
        assert_eq!(
            labels(&p.derived()),
            ["a1", "a2", "a3", "b1", "b2", "A3", "A2", "A1", "B2", "B1"]
        );
        let expected = [
            seg("B2", "b1"),
            seg("B1", "A3"),
            seg("a3", "A2"),
            seg("a2", "A1"),
            seg("a1", "b2"),
        ];
        assert_eq!(c.segments(), &expected);
        assert_eq!(p.len(), 2 * c.len());
    }

    #[test]
    fn single_letter_is_one_chord() {
        let (p, c) = config("abAB", "a");
        assert_eq!(c.segments(), &[seg("A1", "a1")]);
        assert_eq!(intersection_count(&p, &c), 0);
    }

    #[test]
    fn commutator_chords_are_nested() {
        let (p, c) = config("abAB", "abAB");
        assert_eq!(
            c.segments(),
            &[
                seg("A2", "b2"),
                seg("B2", "A1"),
                seg("a1", "B1"),
                seg("b1", "a2")
            ]
        );
        assert_eq!(intersection_count(&p, &c), 0);
        assert!(intersecting_pairs(&p, &c).is_empty());
    }

    #[test]
    fn positions_in_derived_order() {
        let (p, _) = config("abAB", "bbAAA");
        assert_eq!(p.position(pt("a1")), Ok(0));
        assert_eq!(p.position(pt("A3")), Ok(5));
        assert_eq!(p.position(pt("B1")), Ok(9));
        assert_eq!(p.position(pt("a4")), Err(Error::UnknownPoint(pt("a4"))));
        assert_eq!(p.position(pt("c1")), Err(Error::UnknownPoint(pt("c1"))));
    }

    #[test]
    fn interleave_examples() {
        let (p, _) = config("abAB", "bbAAA");
        assert_eq!(p.interleaves(&seg("a3", "A2"), &seg("B2", "b1")), Ok(true));
        assert_eq!(p.interleaves(&seg("a1", "b2"), &seg("B1", "A3")), Ok(false));
        // nested: {1,6} inside nothing of {0,7}
        assert_eq!(p.interleaves(&seg("a1", "A1"), &seg("a2", "A2")), Ok(false));
        assert_eq!(
            p.interleaves(&seg("a1", "b2"), &seg("a1", "b2")),
            Err(Error::SameSegment)
        );
    }

    #[test]
    fn walkthrough_counts() {
        let (mut p, c) = config("abAB", "bbAAA");
        assert_eq!(intersection_count(&p, &c), 8);
        let pairs = intersecting_pairs(&p, &c);
        assert_eq!(pairs.len(), 8);
        assert_eq!(pairs[0], (0, 1));
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));

        // The final listing a3,a2,a1,b2,b1,...
        p.swap(pt("a1"), pt("a3")).unwrap();
        p.swap(pt("B1"), pt("B2")).unwrap();
        assert_eq!(
            labels(&p.derived()),
            ["a3", "a2", "a1", "b2", "b1", "A1", "A2", "A3", "B1", "B2"]
        );
        assert_eq!(intersection_count(&p, &c), 2);
    }

    #[test]
    fn square_has_one_crossing() {
        let (p, c) = config("abAB", "aa");
        assert_eq!(intersecting_pairs(&p, &c), vec![(0, 1)]);
    }

    #[test]
    fn swap_requires_same_side() {
        let (mut p, _) = config("abAB", "bbAAA");
        assert_eq!(
            p.swap(pt("a1"), pt("A2")),
            Err(Error::EdgeMismatch(pt("a1"), pt("A2")))
        );
        assert!(p.swap(pt("a1"), pt("a9")).is_err());
    }

    #[test]
    fn from_orders_validates() {
        let s = parse_surface_word("abAB").unwrap();
        assert!(PointList::from_orders(&s, vec![vec![2, 1], vec![1]]).is_ok());
        assert_eq!(
            PointList::from_orders(&s, vec![vec![2, 2], vec![1]]),
            Err(Error::InvalidOrdering)
        );
        assert_eq!(
            PointList::from_orders(&s, vec![vec![1]]),
            Err(Error::InvalidOrdering)
        );
    }

    #[test]
    fn segment_list_checks_chaining() {
        assert!(SegmentList::new(vec![seg("A1", "a1")]).is_ok());
        assert!(SegmentList::new(vec![seg("a1", "b1"), seg("a2", "A1")]).is_err());
        assert_eq!(SegmentList::new(vec![]), Err(Error::EmptyInput));
    }

    #[test]
    fn edge_point_labels() {
        assert_eq!(pt("B12").to_string(), "B12");
        assert!("a0".parse::<EdgePoint>().is_err());
        assert!("a".parse::<EdgePoint>().is_err());
        assert!("1a".parse::<EdgePoint>().is_err());
        assert!("a+1".parse::<EdgePoint>().is_err());
    }
}
