//! Ordered link-pattern bases and their dimension formulas.

use std::collections::HashMap;

use thiserror::Error;

use crate::pattern::{LinkPattern, Sector, Symbol};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BasisError {
    #[error("site count must be at least 1")]
    ZeroSites,
}

/// An ordered basis of link patterns for one sector.
///
/// Patterns are generated directly in the canonical lexicographic order with
/// `)` < `(` < `|`.
#[derive(Clone, Debug)]
pub struct Basis {
    l: usize,
    sector: Sector,
    patterns: Vec<LinkPattern>,
    index: HashMap<LinkPattern, usize>,
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.l == other.l && self.sector == other.sector && self.patterns == other.patterns
    }
}

impl Eq for Basis {}

impl Basis {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn patterns(&self) -> &[LinkPattern] {
        &self.patterns
    }

    pub fn pattern(&self, i: usize) -> &LinkPattern {
        &self.patterns[i]
    }

    pub fn index_of(&self, p: &LinkPattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LinkPattern> {
        self.patterns.iter()
    }
}

/// Enumerate all valid patterns of a sector in canonical order.
pub fn enumerate_basis(l: usize, sector: Sector) -> Result<Basis, BasisError> {
    if l == 0 {
        return Err(BasisError::ZeroSites);
    }
    let mut patterns = Vec::new();
    let mut word = Vec::with_capacity(l);
    generate(l, sector, &mut word, 0, false, &mut patterns);
    let index = patterns
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    Ok(Basis {
        l,
        sector,
        patterns,
        index,
    })
}

fn generate(
    l: usize,
    sector: Sector,
    word: &mut Vec<Symbol>,
    depth: usize,
    seen_bar: bool,
    out: &mut Vec<LinkPattern>,
) {
    if word.len() == l {
        if depth == 0 {
            out.push(LinkPattern::from_symbols_unchecked(word.clone()));
        }
        return;
    }
    let remaining = l - word.len();
    // Close: matches an open arc, or links to the boundary at depth 0.
    let close_ok = if depth > 0 {
        true
    } else {
        matches!(sector, Sector::Full | Sector::Lp0) && !seen_bar
    };
    if close_ok {
        word.push(Symbol::Close);
        generate(l, sector, word, depth.saturating_sub(1), seen_bar, out);
        word.pop();
    }
    // Open: needs room for its matching close.
    if depth + 1 <= remaining - 1 {
        word.push(Symbol::Open);
        generate(l, sector, word, depth + 1, seen_bar, out);
        word.pop();
    }
    // Bar: depth 0 only, not in the no-bar sector.
    if depth == 0 && matches!(sector, Sector::Full | Sector::LpStar) {
        word.push(Symbol::Bar);
        generate(l, sector, word, depth, true, out);
        word.pop();
    }
}

/// Binomial coefficient as u128; large enough for the sizes tested here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
