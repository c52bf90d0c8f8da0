//! Surface words and cyclic curve words.
//!
//! A surface word lists each of the `2n` symbols `s_1..s_n, S_1..S_n`
//! exactly once; lowercase letters are generators and uppercase letters
//! their inverses. Its polygon has `4n` sides: labeled sides alternate with
//! free boundary sides, and each labeled side is glued to its case partner
//! so that the result is orientable.

use std::fmt;

use crate::error::{Error, Result};

/// Largest alphabet a surface word can use (`a`..=`z`).
pub const MAX_LETTERS: usize = 26;

/// A generator or its inverse. `letter` is the lowercase ASCII byte.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    letter: u8,
    inverted: bool,
}

impl Symbol {
    pub fn new(letter: u8, inverted: bool) -> Self {
        debug_assert!(letter.is_ascii_lowercase());
        Symbol { letter, inverted }
    }

    pub fn from_char(c: char) -> Result<Self> {
        if !c.is_ascii_alphabetic() {
            return Err(Error::NonLetterCharacter(c));
        }
        Ok(Symbol {
            letter: c.to_ascii_lowercase() as u8,
            inverted: c.is_ascii_uppercase(),
        })
    }

    pub fn letter(self) -> u8 {
        self.letter
    }

    pub fn is_inverted(self) -> bool {
        self.inverted
    }

    pub fn inverse(self) -> Self {
        Symbol {
            letter: self.letter,
            inverted: !self.inverted,
        }
    }

    pub fn to_char(self) -> char {
        if self.inverted {
            self.letter.to_ascii_uppercase() as char
        } else {
            self.letter as char
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Cyclic gluing pattern of a `4n`-gon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceWord {
    symbols: Vec<Symbol>,
    /// Lowercase letters in order of first appearance.
    letters: Vec<u8>,
    /// `letter - b'a'` -> index into `letters`.
    lookup: [Option<u8>; MAX_LETTERS],
    /// Position of every symbol in `symbols`, indexed by [`SurfaceWord::slot`].
    side_of: Vec<usize>,
}

impl SurfaceWord {
    /// Number of generators `n`.
    pub fn rank(&self) -> usize {
        self.letters.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// 0-based index of a generator in order of first appearance.
    pub fn letter_index(&self, letter: u8) -> Option<usize> {
        if !letter.is_ascii_lowercase() {
            return None;
        }
        self.lookup[(letter - b'a') as usize].map(usize::from)
    }

    /// Dense index in `0..2n` for a symbol of this surface.
    pub fn slot(&self, s: Symbol) -> Option<usize> {
        self.letter_index(s.letter)
            .map(|i| 2 * i + usize::from(s.inverted))
    }

    /// Position of the symbol's side among the labeled sides (0-based,
    /// clockwise).
    pub fn side(&self, s: Symbol) -> Option<usize> {
        self.slot(s).map(|k| self.side_of[k])
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.letter_index(s.letter).is_some()
    }
}

impl fmt::Display for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A nonempty, cyclically reduced word naming a free homotopy class.
///
/// The starting letter is kept as given; no canonical rotation is applied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicWord {
    letters: Vec<Symbol>,
}

impl CyclicWord {
    pub fn letters(&self) -> &[Symbol] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same cyclic word read from position `k`.
    pub fn rotated(&self, k: usize) -> CyclicWord {
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.letters.len());
        CyclicWord { letters }
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.letters {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn parse_surface_word(text: &str) -> Result<SurfaceWord> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut symbols = Vec::with_capacity(text.len());
    let mut seen = [[false; 2]; MAX_LETTERS];
    let mut letters = Vec::new();
    let mut lookup = [None; MAX_LETTERS];
    for c in text.chars() {
        let s = Symbol::from_char(c)?;
        let k = (s.letter - b'a') as usize;
        if seen[k][usize::from(s.inverted)] {
            return Err(Error::DuplicateSymbol(c));
        }
        seen[k][usize::from(s.inverted)] = true;
        if lookup[k].is_none() {
            lookup[k] = Some(letters.len() as u8);
            letters.push(s.letter);
        }
        symbols.push(s);
    }
    for s in &symbols {
        let k = (s.letter - b'a') as usize;
        if !seen[k][usize::from(!s.inverted)] {
            return Err(Error::MissingInverse(s.to_char()));
        }
    }
    let mut side_of = vec![0; symbols.len()];
    for (pos, s) in symbols.iter().enumerate() {
        let idx = lookup[(s.letter - b'a') as usize].unwrap() as usize;
        side_of[2 * idx + usize::from(s.inverted)] = pos;
    }
    Ok(SurfaceWord {
        symbols,
        letters,
        lookup,
        side_of,
    })
}

fn parse_letters(text: &str, surface: &SurfaceWord) -> Result<Vec<Symbol>> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    text.chars()
        .map(|c| {
            let s = Symbol::from_char(c)?;
            if surface.contains(s) {
                Ok(s)
            } else {
                Err(Error::UnknownLetter(c))
            }
        })
        .collect()
}

/// Parses a curve word, rejecting it unless it is already cyclically reduced.
pub fn parse_cyclic_word(text: &str, surface: &SurfaceWord) -> Result<CyclicWord> {
    let letters = parse_letters(text, surface)?;
    let n = letters.len();
    if n > 1 {
        for i in 0..n {
            if letters[(i + 1) % n] == letters[i].inverse() {
                return Err(Error::NotReduced(letters[i].to_char(), i));
            }
        }
    }
    Ok(CyclicWord { letters })
}

/// Cancels adjacent inverse pairs, including across the seam. Returns
/// `None` when the word cancels completely.
pub fn cyclic_reduce(text: &str, surface: &SurfaceWord) -> Result<Option<CyclicWord>> {
    let letters = parse_letters(text, surface)?;
    let mut stack: Vec<Symbol> = Vec::with_capacity(letters.len());
    for s in letters {
        if stack.last() == Some(&s.inverse()) {
            stack.pop();
        } else {
            stack.push(s);
        }
    }
    let (mut lo, mut hi) = (0, stack.len());
    while hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    if lo == hi {
        return Ok(None);
    }
    Ok(Some(CyclicWord {
        letters: stack[lo..hi].to_vec(),
    }))
}

/// Topological type of the surface of a surface word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub euler_characteristic: i64,
    pub boundary_components: usize,
    pub genus: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Glues the `4n`-gon and counts vertex classes and boundary cycles.
///
/// Side `2t` carries the `t`-th symbol and runs from vertex `2t` to `2t+1`
/// clockwise; side `2t+1` is free. A lowercase side points clockwise and an
/// uppercase side counterclockwise, so tails are glued to tails.
pub fn surface_invariants(surface: &SurfaceWord) -> SurfaceInvariants {
    let sides = surface.symbols.len();
    let vertices = 2 * sides;
    let n = surface.rank();
    let mut parent: Vec<usize> = (0..vertices).collect();
    let oriented = |pos: usize, s: Symbol| {
        let (a, b) = (2 * pos, (2 * pos + 1) % vertices);
        if s.inverted {
            (b, a)
        } else {
            (a, b)
        }
    };
    for (t, &s) in surface.symbols.iter().enumerate() {
        if s.inverted {
            continue;
        }
        let u = surface.side(s.inverse()).unwrap();
        let (tail, head) = oriented(t, s);
        let (tail2, head2) = oriented(u, s.inverse());
        union(&mut parent, tail, tail2);
        union(&mut parent, head, head2);
    }
    let mut classes: Vec<usize> = (0..vertices).map(|v| find(&mut parent, v)).collect();
    classes.sort_unstable();
    classes.dedup();
    let vertex_count = classes.len();

    // Free sides join vertex classes into boundary cycles.
    let mut boundary: Vec<usize> = (0..vertices).collect();
    for t in 0..sides {
        let a = find(&mut parent, 2 * t + 1);
        let b = find(&mut parent, (2 * t + 2) % vertices);
        union(&mut boundary, a, b);
    }
    let mut cycles: Vec<usize> = classes.iter().map(|&c| find(&mut boundary, c)).collect();
    cycles.sort_unstable();
    cycles.dedup();

    let chi = vertex_count as i64 - 3 * n as i64 + 1;
    let b = cycles.len();
    let genus = (2 - chi - b as i64) / 2;
    SurfaceInvariants {
        euler_characteristic: chi,
        boundary_components: b,
        genus: genus as usize,
    }
}
