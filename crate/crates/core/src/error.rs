use thiserror::Error;

use crate::representative::EdgePoint;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("character {0:?} is not an ASCII letter")]
    NonLetterCharacter(char),
    #[error("symbol {0:?} appears more than once in the surface word")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} has no inverse partner in the surface word")]
    MissingInverse(char),
    #[error("letter {0:?} is not in the surface alphabet")]
    UnknownLetter(char),
    #[error("word is not cyclically reduced: {0:?} is followed by its inverse at position {1}")]
    NotReduced(char, usize),
    #[error("point {0} does not belong to this configuration")]
    UnknownPoint(EdgePoint),
    #[error("points {0} and {1} lie on different polygon edges")]
    EdgeMismatch(EdgePoint, EdgePoint),
    #[error("a segment cannot be compared with itself")]
    SameSegment,
    #[error("segments {0} and {1} do not intersect")]
    NotAnIntersection(usize, usize),
    #[error("shared segments of a bigon are not at the leg ends: {0}")]
    StructureViolation(String),
    #[error("terminal points of a one-shared bigon match no essential ordering")]
    UnmatchedOrdering,
    #[error("bigon is not removable")]
    NotRemovable,
    #[error("removal did not lower the intersection count ({before} -> {after})")]
    NoProgress { before: usize, after: usize },
    #[error("search space of {size} orderings exceeds the cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("segment index {0} out of range")]
    SegmentOutOfRange(usize),
    #[error("edge orders do not match the surface multiplicities")]
    InvalidOrdering,
}
