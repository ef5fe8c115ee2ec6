//! Action of the bulk and boundary generators on link patterns.
//!
//! All generators are idempotent maps on basis patterns with coefficient 1:
//! every closed loop produced by a reconnection, including loops through the
//! boundaries, carries weight 1.

use std::fmt;

use thiserror::Error;

use crate::basis::Basis;
use crate::pattern::{Attach, LinkPattern, PatternError, Sector, Symbol};

/// A generator of the one- or two-boundary Temperley-Lieb (blob) algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// Bulk generator `e_i` joining sites `i` and `i+1` (1-based,
    /// `1 <= i <= L-1`).
    Bulk(usize),
    /// Left blob generator `f_-` attaching site 1 to the boundary.
    BlobLeft,
    /// Right blob generator `f_+` attaching site `L` to the boundary.
    BlobRight,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Bulk(i) => write!(f, "e_{i}"),
            Generator::BlobLeft => write!(f, "f_-"),
            Generator::BlobRight => write!(f, "f_+"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("generator {gen} is out of range for {l} sites")]
    IndexOutOfRange { gen: String, l: usize },
    #[error("generator f_+ does not act on sector {0} in one-boundary mode")]
    BlobRightUnavailable(Sector),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// Apply one generator to a pattern.
///
/// The sector controls how the blob generators read a bar: in `LP*` a bar is
/// already a boundary link (so `f_-`/`f_+` fix it), while in the full sector
/// it is rewired onto the boundary.
pub fn apply_generator(
    gen: Generator,
    pattern: &LinkPattern,
    sector: Sector,
) -> Result<LinkPattern, ActionError> {
    pattern.check_sector(sector)?;
    let l = pattern.len();
    let at = pattern.attachments();
    let mut syms = pattern.symbols().to_vec();
    match gen {
        Generator::Bulk(i) => {
            if i < 1 || i >= l {
                return Err(ActionError::IndexOutOfRange {
                    gen: gen.to_string(),
                    l,
                });
            }
            let (s, t) = (i - 1, i);
            if at[s] == Attach::Site(t) {
                // Adjacent arc: closing it makes a loop of weight 1.
                return Ok(pattern.clone());
            }
            syms[s] = Symbol::Open;
            syms[t] = Symbol::Close;
            match (at[s], at[t]) {
                (Attach::Site(k), Attach::Site(m)) => {
                    syms[k.min(m)] = Symbol::Open;
                    syms[k.max(m)] = Symbol::Close;
                }
                (Attach::Site(k), other) => syms[k] = attach_symbol(other),
                (other, Attach::Site(m)) => syms[m] = attach_symbol(other),
                // Two non-site ends join into a loop or an upper arc of
                // weight 1; nothing remains in the pattern.
                (_, _) => {}
            }
        }
        Generator::BlobLeft => match at[0] {
            Attach::Boundary => return Ok(pattern.clone()),
            Attach::Bar => {
                if sector == Sector::LpStar {
                    return Ok(pattern.clone());
                }
                syms[0] = Symbol::Close;
            }
            Attach::Site(k) => {
                let sym = boundary_symbol(sector);
                syms[0] = sym;
                syms[k] = sym;
            }
        },
        Generator::BlobRight => {
            if sector == Sector::Lp0 {
                return Err(ActionError::BlobRightUnavailable(sector));
            }
            match at[l - 1] {
                Attach::Bar => return Ok(pattern.clone()),
                Attach::Boundary => {
                    // The left-wall line is pulled to the right wall; the
                    // leftover wall-to-wall line closes with weight 1.
                    syms[l - 1] = Symbol::Bar;
                }
                Attach::Site(k) => {
                    syms[k] = Symbol::Bar;
                    syms[l - 1] = Symbol::Bar;
                }
            }
        }
    }
    let image = LinkPattern::from_symbols_unchecked(syms);
    debug_assert!(image.in_sector(sector), "image {image} left sector {sector}");
    Ok(image)
}

fn attach_symbol(a: Attach) -> Symbol {
    match a {
        Attach::Boundary => Symbol::Close,
        Attach::Bar => Symbol::Bar,
        Attach::Site(_) => unreachable!("site attachments are handled explicitly"),
    }
}

fn boundary_symbol(sector: Sector) -> Symbol {
    match sector {
        Sector::LpStar => Symbol::Bar,
        _ => Symbol::Close,
    }
}

/// Matrix of a generator on an ordered basis.
///
/// Generators map basis patterns to basis patterns with coefficient 1, so
/// the matrix has exactly one unit entry per column; it is stored as the
/// image index per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    gen: Generator,
    images: Vec<usize>,
}

impl OperatorMatrix {
    pub fn gen(&self) -> Generator {
        self.gen
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    /// Image basis index of column `j`.
    pub fn image(&self, j: usize) -> usize {
        self.images[j]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `M * M == M` as a matrix identity.
    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&j| self.images[j] == j)
    }
}

/// Build the matrix of a generator on a basis.
pub fn operator_matrix(gen: Generator, basis: &Basis) -> Result<OperatorMatrix, ActionError> {
    let mut images = Vec::with_capacity(basis.len());
    for p in basis.iter() {
        let image = apply_generator(gen, p, basis.sector())?;
        let idx = basis
            .index_of(&image)
            .unwrap_or_else(|| panic!("image {image} of {p} under {gen} is outside the basis"));
        images.push(idx);
    }
    Ok(OperatorMatrix { gen, images })
}

/// Compose image maps: `(f . g)(x) = f(g(x))`, i.e. the matrix product `F G`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&j| f[j]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::enumerate_basis;

    fn pat(s: &str) -> LinkPattern {
        s.parse().unwrap()
    }

    fn apply(gen: Generator, s: &str, sector: Sector) -> String {
        apply_generator(gen, &pat(s), sector).unwrap().to_string()
    }

    #[test]
    fn bulk_joins_two_bars() {
        assert_eq!(apply(Generator::Bulk(1), "||", Sector::Full), "()");
    }

    #[test]
    fn blob_left_pulls_an_arc_to_the_boundary() {
        assert_eq!(apply(Generator::BlobLeft, "()", Sector::Full), "))");
        assert_eq!(apply(Generator::BlobLeft, "()", Sector::Lp0), "))");
    }

    #[test]
    fn blob_left_fixes_boundary_links() {
        assert_eq!(apply(Generator::BlobLeft, "))", Sector::Lp0), "))");
        assert_eq!(apply(Generator::BlobLeft, "|||", Sector::LpStar), "|||");
    }

    #[test]
    fn blob_right_mirrors_blob_left_on_lpstar() {
        assert_eq!(apply(Generator::BlobRight, "()", Sector::LpStar), "||");
        assert_eq!(apply(Generator::BlobRight, "||", Sector::LpStar), "||");
    }

    #[test]
    fn blob_left_on_full_basis_of_two_sites() {
        // f_- fixes )| and )), maps || to )| and () to )).
        assert_eq!(apply(Generator::BlobLeft, ")|", Sector::Full), ")|");
        assert_eq!(apply(Generator::BlobLeft, "))", Sector::Full), "))");
        assert_eq!(apply(Generator::BlobLeft, "||", Sector::Full), ")|");
        assert_eq!(apply(Generator::BlobLeft, "()", Sector::Full), "))");
    }

    #[test]
    fn bulk_matrix_on_lp0_two_sites() {
        let b = enumerate_basis(2, Sector::Lp0).unwrap();
        assert_eq!(b.pattern(0).to_string(), "))");
        assert_eq!(b.pattern(1).to_string(), "()");
        let m = operator_matrix(Generator::Bulk(1), &b).unwrap();
        // Both patterns map to ().
        assert_eq!(m.images(), &[1, 1]);
        assert!(m.is_idempotent());
    }

    #[test]
    fn out_of_range_index_is_an_error() {
        let err = apply_generator(Generator::Bulk(2), &pat("))"), Sector::Lp0);
        assert!(matches!(err, Err(ActionError::IndexOutOfRange { .. })));
        let err = apply_generator(Generator::Bulk(0), &pat("))"), Sector::Lp0);
        assert!(matches!(err, Err(ActionError::IndexOutOfRange { .. })));
    }

    #[test]
    fn blob_right_needs_a_right_boundary() {
        let err = apply_generator(Generator::BlobRight, &pat("))"), Sector::Lp0);
        assert_eq!(err, Err(ActionError::BlobRightUnavailable(Sector::Lp0)));
    }

    #[test]
    fn all_generators_are_idempotent_matrices() {
        for l in 2..=6 {
            for sector in [Sector::Full, Sector::Lp0, Sector::LpStar] {
                let basis = enumerate_basis(l, sector).unwrap();
                let mut gens = vec![Generator::BlobLeft];
                if sector != Sector::Lp0 {
                    gens.push(Generator::BlobRight);
                }
                for i in 1..l {
                    gens.push(Generator::Bulk(i));
                }
                for gen in gens {
                    let m = operator_matrix(gen, &basis).unwrap();
                    assert!(m.is_idempotent(), "{gen} on {sector} at L={l}");
                }
            }
        }
    }

    #[test]
    fn images_stay_valid_across_sectors() {
        for l in 2..=7 {
            for sector in [Sector::Full, Sector::Lp0, Sector::LpStar] {
                let basis = enumerate_basis(l, sector).unwrap();
                let mut gens = vec![Generator::BlobLeft];
                if sector != Sector::Lp0 {
                    gens.push(Generator::BlobRight);
                }
                for i in 1..l {
                    gens.push(Generator::Bulk(i));
                }
                for gen in &gens {
                    for p in basis.iter() {
                        let image = apply_generator(*gen, p, sector).unwrap();
                        assert!(image.in_sector(sector));
                        assert!(basis.index_of(&image).is_some());
                    }
                }
            }
        }
    }
}
