#![allow(dead_code)]

use curvemin::{parse_cyclic_word, parse_surface_word, CyclicWord, SurfaceWord};
use rand::Rng;

pub fn surface(text: &str) -> SurfaceWord {
    parse_surface_word(text).unwrap()
}

pub fn word(s: &SurfaceWord, text: &str) -> CyclicWord {
    parse_cyclic_word(text, s).unwrap()
}

fn inverse(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

fn alphabet(s: &SurfaceWord) -> Vec<char> {
    s.letters()
        .iter()
        .flat_map(|&l| [l as char, (l as char).to_ascii_uppercase()])
        .collect()
}

/// Every cyclically reduced word of length `1..=max_len` over the
/// generators of `s`, as strings.
pub fn reduced_words(s: &SurfaceWord, max_len: usize) -> Vec<String> {
    let alpha = alphabet(s);
    let mut out = Vec::new();
    let mut layer: Vec<String> = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &c in &alpha {
                if w.chars().last().is_some_and(|d| d == inverse(c)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        for w in &next {
            let first = w.chars().next().unwrap();
            let last = w.chars().last().unwrap();
            if w.len() == 1 || first != inverse(last) {
                out.push(w.clone());
            }
        }
        layer = next;
    }
    out
}

/// A uniformly drawn cyclically reduced word of exactly `len` letters.
pub fn random_reduced_word<R: Rng>(rng: &mut R, s: &SurfaceWord, len: usize) -> String {
    let alpha = alphabet(s);
    loop {
        let mut w = String::new();
        while w.len() < len {
            let c = alpha[rng.gen_range(0..alpha.len())];
            if w.chars().last().is_some_and(|d| d == inverse(c)) {
                continue;
            }
            w.push(c);
        }
        let first = w.chars().next().unwrap();
        let last = w.chars().last().unwrap();
        if len == 1 || first != inverse(last) {
            return w;
        }
    }
}
