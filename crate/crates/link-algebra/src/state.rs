//! Exact stationary states, normalizations and the boundary defect density.

use std::collections::BTreeMap;

use exact_core::{kernel_one_dim, BigRational, KernelError, MultiPoly, PolyVector, Var};
use thiserror::Error;

use crate::basis::{enumerate_basis, Basis, BasisError};
use crate::hamiltonian::{build_on_basis, BoundaryMode, HamiltonianError};
use crate::pattern::LinkPattern;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateError {
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Hamiltonian(#[from] HamiltonianError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("density is defined for L >= 2, got {0}")]
    DensityTooSmall(usize),
}

/// The exact stationary state of a mode: the content-normalized kernel of
/// the Hamiltonian on its ground-state sector, keyed by link pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundState {
    basis: Basis,
    vector: PolyVector,
}

impl GroundState {
    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn vector(&self) -> &PolyVector {
        &self.vector
    }

    /// Component of one pattern; zero for patterns outside the basis.
    pub fn component(&self, p: &LinkPattern) -> MultiPoly {
        match self.basis.index_of(p) {
            Some(i) => self.vector.get(i).clone(),
            None => MultiPoly::zero(),
        }
    }

    /// The state as an ordered map from pattern to component.
    pub fn as_map(&self) -> BTreeMap<LinkPattern, MultiPoly> {
        self.basis
            .iter()
            .cloned()
            .zip(self.vector.iter().cloned())
            .collect()
    }

    /// Sum of all components.
    pub fn normalization(&self) -> MultiPoly {
        self.vector.sum()
    }
}

/// Compute the stationary state for `L` sites in the given mode.
///
/// The kernel equation `H psi = 0` holds as a polynomial identity; the
/// solver verifies it symbolically before returning.
pub fn ground_state(l: usize, mode: BoundaryMode) -> Result<GroundState, StateError> {
    let basis = enumerate_basis(l, mode.ground_sector())?;
    let h = build_on_basis(&basis, mode)?;
    let vector = kernel_one_dim(&h)?;
    Ok(GroundState { basis, vector })
}

/// Sum of all stationary-state components.
pub fn normalization_z(l: usize, mode: BoundaryMode) -> Result<MultiPoly, StateError> {
    Ok(ground_state(l, mode)?.normalization())
}

/// Exact and closed-form boundary defect densities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityRho {
    /// `(1/L) Z'(1) / Z(1)` computed from the one-boundary normalization.
    pub symbolic: BigRational,
    /// `(3L+8) / (8(2L+3))` for even `L`, `3(L^2-1) / (8L(2L+3))` for odd.
    pub closed_form: BigRational,
}

/// Closed-form density value.
pub fn density_closed_form(l: usize) -> BigRational {
    let l_i = l as i64;
    if l % 2 == 0 {
        exact_core::ratio(3 * l_i + 8, 8 * (2 * l_i + 3))
    } else {
        exact_core::ratio(3 * (l_i * l_i - 1), 8 * l_i * (2 * l_i + 3))
    }
}

/// Average density of boundary defects from the one-boundary normalization,
/// paired with the closed form for comparison.
pub fn density_rho(l: usize) -> Result<DensityRho, StateError> {
    if l < 2 {
        return Err(StateError::DensityTooSmall(l));
    }
    let z = normalization_z(l, BoundaryMode::One)?;
    let at_one = [(Var::A, exact_core::rat(1))];
    let z1 = z.eval(&at_one).expect("univariate in a");
    let dz1 = z.derivative(Var::A).eval(&at_one).expect("univariate in a");
    let symbolic = dz1 / (z1 * exact_core::rat(l as i64));
    Ok(DensityRho {
        symbolic,
        closed_form: density_closed_form(l),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{rat, ratio};

    fn pat(s: &str) -> LinkPattern {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn expect_state(l: usize, mode: BoundaryMode, entries: &[(&str, &str)]) {
        let gs = ground_state(l, mode).unwrap();
        assert_eq!(gs.basis().len(), entries.len());
        for (pattern, component) in entries {
            assert_eq!(
                gs.component(&pat(pattern)),
                poly(component),
                "component of {pattern} at L={l} ({mode})"
            );
        }
    }

    #[test]
    fn one_boundary_l2() {
        expect_state(2, BoundaryMode::One, &[("))", "a"), ("()", "1")]);
    }

    #[test]
    fn one_boundary_l3_printed_vector() {
        expect_state(
            3,
            BoundaryMode::One,
            &[(")))", "a"), ("())", "2"), (")()", "2 + a")],
        );
    }

    #[test]
    fn one_boundary_l4_printed_vector() {
        expect_state(
            4,
            BoundaryMode::One,
            &[
                ("))))", "a^2"),
                ("))()", "6*a + 3*a^2"),
                (")())", "6*a + 2*a^2"),
                ("()))", "3*a"),
                ("()()", "6 + 3*a"),
                ("(())", "3"),
            ],
        );
    }

    #[test]
    fn two_boundary_l3_printed_vector() {
        expect_state(
            3,
            BoundaryMode::Two,
            &[("|||", "a + b + a*b"), ("()|", "2 + b"), ("|()", "2 + a")],
        );
    }

    #[test]
    fn two_boundary_l2_derived_vector() {
        expect_state(2, BoundaryMode::Two, &[("||", "a + b"), ("()", "1")]);
    }

    #[test]
    fn l1_base_cases() {
        expect_state(1, BoundaryMode::One, &[(")", "1")]);
        expect_state(1, BoundaryMode::Two, &[("|", "1")]);
    }

    #[test]
    fn normalizations() {
        assert_eq!(
            normalization_z(3, BoundaryMode::One).unwrap(),
            poly("2*a + 4")
        );
        assert_eq!(
            normalization_z(4, BoundaryMode::One).unwrap(),
            poly("6*a^2 + 18*a + 9")
        );
        assert_eq!(
            normalization_z(3, BoundaryMode::Two).unwrap(),
            poly("a*b + 2*a + 2*b + 4")
        );
    }

    #[test]
    fn density_values() {
        assert_eq!(density_rho(3).unwrap().symbolic, ratio(1, 9));
        assert_eq!(density_rho(3).unwrap().closed_form, ratio(1, 9));
        assert_eq!(density_rho(4).unwrap().symbolic, ratio(5, 22));
        assert_eq!(density_rho(4).unwrap().closed_form, ratio(5, 22));
        assert_eq!(density_rho(2).unwrap().symbolic, ratio(1, 4));
    }

    #[test]
    fn kernel_identity_holds() {
        for (l, mode) in [(5, BoundaryMode::One), (4, BoundaryMode::Two)] {
            let basis = enumerate_basis(l, mode.ground_sector()).unwrap();
            let h = build_on_basis(&basis, mode).unwrap();
            let gs = ground_state(l, mode).unwrap();
            assert!(h.mul_vec(gs.vector()).is_zero());
        }
    }

    #[test]
    fn components_positive_at_sample_points() {
        use num_traits::Signed;
        for (l, mode) in [(4, BoundaryMode::One), (4, BoundaryMode::Two)] {
            let gs = ground_state(l, mode).unwrap();
            for a0 in [ratio(1, 2), rat(1), rat(2)] {
                for b0 in [ratio(1, 2), rat(1), rat(2)] {
                    let pt = [(Var::A, a0.clone()), (Var::B, b0.clone())];
                    for c in gs.vector().iter() {
                        assert!(c.eval(&pt).unwrap().is_positive());
                    }
                }
            }
        }
    }
}
