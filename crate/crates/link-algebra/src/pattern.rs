//! Link patterns in parenthesis notation.
//!
//! A pattern is a word over `)`, `(` and `|`. Matched parentheses are arcs
//! between sites. An unmatched `)` links its site to the left (or, with
//! identified boundaries, the single) boundary. A `|` links its site to the
//! top of the strip in the full and one-boundary sectors, and to the
//! identified boundary in the `LP*` sector.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One site's symbol. The derived order `)` < `(` < `|` is the canonical
/// order used everywhere for sorting patterns and bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Close,
    Open,
    Bar,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Close => ')',
            Symbol::Open => '(',
            Symbol::Bar => '|',
        }
    }
}

/// Sector of link-pattern space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    /// All patterns; dimension `2^L`.
    Full,
    /// No bars: every site pairs or closes to the boundary. Dimension
    /// `C(L, floor(L/2))`.
    Lp0,
    /// No unmatched closes: bars are links to the identified boundary.
    /// Dimension `C(L, floor(L/2))`.
    LpStar,
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sector::Full => write!(f, "full"),
            Sector::Lp0 => write!(f, "lp0"),
            Sector::LpStar => write!(f, "lp*"),
        }
    }
}

/// What a site is linked to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attach {
    /// Arc to another site (0-based index).
    Site(usize),
    /// Unmatched close: link to the (left or identified) boundary.
    Boundary,
    /// Bar: link to the top of the strip, or to the identified boundary in
    /// the `LP*` sector.
    Bar,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern is empty")]
    Empty,
    #[error("unexpected character `{0}`")]
    BadChar(char),
    #[error("unmatched `(` at site {0}")]
    UnmatchedOpen(usize),
    #[error("`)` at site {0} closes nothing and has a bar to its left")]
    CloseAfterBar(usize),
    #[error("`|` at site {0} sits inside an arc")]
    NestedBar(usize),
    #[error("`)` at site {0} sits inside an arc but closes nothing")]
    NestedClose(usize),
    #[error("pattern `{pattern}` is not in sector {sector}")]
    WrongSector { pattern: String, sector: Sector },
}

/// A link pattern on `L` sites.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkPattern {
    symbols: Vec<Symbol>,
}

impl LinkPattern {
    /// Build from symbols, checking full-sector validity.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, PatternError> {
        let p = LinkPattern { symbols };
        p.check_valid()?;
        Ok(p)
    }

    pub(crate) fn from_symbols_unchecked(symbols: Vec<Symbol>) -> Self {
        let p = LinkPattern { symbols };
        debug_assert!(p.check_valid().is_ok());
        p
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Validity scan: every `(` matched by a later `)`, unmatched closes at
    /// depth 0 with no bar to their left, bars at depth 0.
    fn check_valid(&self) -> Result<(), PatternError> {
        if self.symbols.is_empty() {
            return Err(PatternError::Empty);
        }
        let mut depth = 0usize;
        let mut seen_bar = false;
        for (i, s) in self.symbols.iter().enumerate() {
            match s {
                Symbol::Open => depth += 1,
                Symbol::Close => {
                    if depth > 0 {
                        depth -= 1;
                    } else if seen_bar {
                        return Err(PatternError::CloseAfterBar(i + 1));
                    }
                }
                Symbol::Bar => {
                    if depth > 0 {
                        return Err(PatternError::NestedBar(i + 1));
                    }
                    seen_bar = true;
                }
            }
        }
        if depth > 0 {
            return Err(PatternError::UnmatchedOpen(self.len()));
        }
        Ok(())
    }

    /// True if the pattern lies in the given sector.
    pub fn in_sector(&self, sector: Sector) -> bool {
        match sector {
            Sector::Full => true,
            Sector::Lp0 => !self.symbols.contains(&Symbol::Bar),
            Sector::LpStar => !self
                .attachments()
                .iter()
                .any(|a| matches!(a, Attach::Boundary)),
        }
    }

    pub fn check_sector(&self, sector: Sector) -> Result<(), PatternError> {
        if self.in_sector(sector) {
            Ok(())
        } else {
            Err(PatternError::WrongSector {
                pattern: self.to_string(),
                sector,
            })
        }
    }

    /// The attachment of every site, by a single stack scan.
    pub fn attachments(&self) -> Vec<Attach> {
        let mut out = vec![Attach::Bar; self.len()];
        let mut stack: Vec<usize> = Vec::new();
        for (i, s) in self.symbols.iter().enumerate() {
            match s {
                Symbol::Open => stack.push(i),
                Symbol::Close => match stack.pop() {
                    Some(j) => {
                        out[i] = Attach::Site(j);
                        out[j] = Attach::Site(i);
                    }
                    None => out[i] = Attach::Boundary,
                },
                Symbol::Bar => out[i] = Attach::Bar,
            }
        }
        out
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LinkPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut symbols = Vec::with_capacity(s.len());
        for c in s.chars() {
            symbols.push(match c {
                ')' => Symbol::Close,
                '(' => Symbol::Open,
                '|' => Symbol::Bar,
                other => return Err(PatternError::BadChar(other)),
            });
        }
        LinkPattern::new(symbols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> LinkPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [")(())|()", "))", "()", "||||", ")))"] {
            assert_eq!(pat(s).to_string(), s);
        }
    }

    #[test]
    fn invalid_words_are_rejected() {
        assert_eq!(")(".parse::<LinkPattern>(), Err(PatternError::UnmatchedOpen(2)));
        assert_eq!("|)".parse::<LinkPattern>(), Err(PatternError::CloseAfterBar(2)));
        assert_eq!("(|)".parse::<LinkPattern>(), Err(PatternError::NestedBar(2)));
        assert_eq!("".parse::<LinkPattern>(), Err(PatternError::Empty));
        assert_eq!("(x)".parse::<LinkPattern>(), Err(PatternError::BadChar('x')));
    }

    #[test]
    fn sector_membership() {
        assert!(pat(")()").in_sector(Sector::Lp0));
        assert!(!pat(")()").in_sector(Sector::LpStar));
        assert!(pat("|()").in_sector(Sector::LpStar));
        assert!(!pat("|()").in_sector(Sector::Lp0));
        assert!(pat(")|").in_sector(Sector::Full));
        assert!(!pat(")|").in_sector(Sector::Lp0));
        assert!(!pat(")|").in_sector(Sector::LpStar));
    }

    #[test]
    fn attachments_of_strip_example() {
        // Pattern from an 8 x 2 strip: )(())|()
        let at = pat(")(())|()").attachments();
        assert_eq!(at[0], Attach::Boundary);
        assert_eq!(at[1], Attach::Site(4));
        assert_eq!(at[2], Attach::Site(3));
        assert_eq!(at[3], Attach::Site(2));
        assert_eq!(at[4], Attach::Site(1));
        assert_eq!(at[5], Attach::Bar);
        assert_eq!(at[6], Attach::Site(7));
        assert_eq!(at[7], Attach::Site(6));
    }

    #[test]
    fn canonical_symbol_order() {
        assert!(Symbol::Close < Symbol::Open);
        assert!(Symbol::Open < Symbol::Bar);
        assert!(pat(")))") < pat(")()"));
        assert!(pat(")()") < pat("())"));
    }
}
