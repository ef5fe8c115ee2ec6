//! Assembly of the loop Hamiltonians as sparse polynomial matrices.

use exact_core::{MultiPoly, PolyMatrix, Var};
use thiserror::Error;

use crate::basis::{enumerate_basis, Basis, BasisError};
use crate::generator::{operator_matrix, ActionError, Generator};
use crate::pattern::Sector;

/// Which boundary terms the Hamiltonian carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryMode {
    /// `H = a (1 - f_-) + sum_j (1 - e_j)`.
    One,
    /// `H = a (1 - f_-) + b (1 - f_+) + sum_j (1 - e_j)`.
    Two,
}

impl std::fmt::Display for BoundaryMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundaryMode::One => write!(f, "one"),
            BoundaryMode::Two => write!(f, "two"),
        }
    }
}

impl BoundaryMode {
    /// The sector containing the stationary state.
    pub fn ground_sector(&self) -> Sector {
        match self {
            BoundaryMode::One => Sector::Lp0,
            BoundaryMode::Two => Sector::LpStar,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HamiltonianError {
    #[error("sector {sector} is not invariant under the {mode}-boundary Hamiltonian")]
    IncompatibleSector { mode: BoundaryMode, sector: Sector },
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// The generators of a mode together with their fugacities.
pub fn generator_terms(l: usize, mode: BoundaryMode) -> Vec<(Generator, MultiPoly)> {
    let mut terms = vec![(Generator::BlobLeft, MultiPoly::var(Var::A))];
    if mode == BoundaryMode::Two {
        terms.push((Generator::BlobRight, MultiPoly::var(Var::B)));
    }
    for i in 1..l {
        terms.push((Generator::Bulk(i), MultiPoly::one()));
    }
    terms
}

/// Build the Hamiltonian on a basis of the given sector.
///
/// Valid sectors are the full space (either mode), `LP0` for one boundary
/// and `LP*` for two boundaries. Every column sums to zero: the result is
/// the generator of a continuous-time Markov chain.
pub fn build_hamiltonian(
    l: usize,
    mode: BoundaryMode,
    sector: Sector,
) -> Result<PolyMatrix, HamiltonianError> {
    let compatible = matches!(
        (mode, sector),
        (_, Sector::Full) | (BoundaryMode::One, Sector::Lp0) | (BoundaryMode::Two, Sector::LpStar)
    );
    if !compatible {
        return Err(HamiltonianError::IncompatibleSector { mode, sector });
    }
    let basis = enumerate_basis(l, sector)?;
    build_on_basis(&basis, mode)
}

/// Build the Hamiltonian on an already-enumerated basis.
pub fn build_on_basis(basis: &Basis, mode: BoundaryMode) -> Result<PolyMatrix, HamiltonianError> {
    let n = basis.len();
    let mut h = PolyMatrix::new(n, n);
    for (gen, coeff) in generator_terms(basis.l(), mode) {
        let m = operator_matrix(gen, basis)?;
        for j in 0..n {
            let image = m.image(j);
            if image == j {
                continue;
            }
            // coeff * (1 - G) contributes +coeff on the diagonal and -coeff
            // at the image row.
            h.add_to(j, j, &coeff);
            h.add_to(image, j, &(-&coeff));
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn one_boundary_two_sites_on_lp0() {
        // Basis order is )), ().
        let h = build_hamiltonian(2, BoundaryMode::One, Sector::Lp0).unwrap();
        assert_eq!(h.get(0, 0), poly("1"));
        assert_eq!(h.get(0, 1), poly("-a"));
        assert_eq!(h.get(1, 0), poly("-1"));
        assert_eq!(h.get(1, 1), poly("a"));
    }

    #[test]
    fn two_boundary_two_sites_on_lpstar() {
        // Basis order is (), ||.
        let h = build_hamiltonian(2, BoundaryMode::Two, Sector::LpStar).unwrap();
        assert_eq!(h.get(1, 1), poly("1"));
        assert_eq!(h.get(1, 0), poly("-a - b"));
        assert_eq!(h.get(0, 1), poly("-1"));
        assert_eq!(h.get(0, 0), poly("a + b"));
    }

    #[test]
    fn columns_sum_to_zero() {
        for l in 1..=6 {
            for (mode, sector) in [
                (BoundaryMode::One, Sector::Full),
                (BoundaryMode::One, Sector::Lp0),
                (BoundaryMode::Two, Sector::Full),
                (BoundaryMode::Two, Sector::LpStar),
            ] {
                let h = build_hamiltonian(l, mode, sector).unwrap();
                for c in 0..h.cols() {
                    assert!(h.col_sum(c).is_zero(), "L={l} {mode} {sector} column {c}");
                }
            }
        }
    }

    #[test]
    fn incompatible_sector_is_rejected() {
        assert!(matches!(
            build_hamiltonian(3, BoundaryMode::One, Sector::LpStar),
            Err(HamiltonianError::IncompatibleSector { .. })
        ));
        assert!(matches!(
            build_hamiltonian(3, BoundaryMode::Two, Sector::Lp0),
            Err(HamiltonianError::IncompatibleSector { .. })
        ));
    }

    #[test]
    fn off_diagonal_entries_are_nonpositive_combinations() {
        use num_traits::Signed;
        for l in 2..=6 {
            let h = build_hamiltonian(l, BoundaryMode::Two, Sector::Full).unwrap();
            for ((r, c), p) in h.entries() {
                if r == c {
                    continue;
                }
                assert!(p.total_degree() <= 1, "entry degree at ({r},{c})");
                for (_, coeff) in p.terms() {
                    assert!(coeff.is_negative(), "off-diagonal sign at ({r},{c})");
                }
            }
        }
    }
}
