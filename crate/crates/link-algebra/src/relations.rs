//! Exact checks of the defining algebra relations on the full basis.
//!
//! Each relation is evaluated as a matrix identity: both sides are composed
//! as image maps on the `2^L`-dimensional full basis and compared entrywise.

use thiserror::Error;

use crate::basis::{enumerate_basis, BasisError};
use crate::generator::{compose, operator_matrix, ActionError, Generator};
use crate::hamiltonian::BoundaryMode;
use crate::pattern::Sector;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationError {
    #[error("relation checking needs at least 2 sites, got {0}")]
    TooFewSites(usize),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Outcome of one relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

/// Report of all relation checks for one system size and mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub l: usize,
    pub mode: BoundaryMode,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }
}

/// The words whose equality constitutes the relation set of a mode.
///
/// One-boundary: idempotence of every generator, the braid-like relations
/// `e_i e_{i+1} e_i = e_i`, commutation at distance two or more, and
/// `e_1 f_- e_1 = e_1`. Two-boundary adds the mirrored blob relations and
/// the word relations `IJI = I`, `JIJ = J` with the parity-dependent
/// alternating products `I` and `J`.
pub fn relation_words(l: usize, mode: BoundaryMode) -> Vec<(String, Vec<Generator>, Vec<Generator>)> {
    use Generator::{BlobLeft, BlobRight, Bulk};
    let mut rels: Vec<(String, Vec<Generator>, Vec<Generator>)> = Vec::new();
    for i in 1..l {
        rels.push((format!("e_{i}^2 = e_{i}"), vec![Bulk(i), Bulk(i)], vec![Bulk(i)]));
    }
    for i in 1..l - 1 {
        rels.push((
            format!("e_{i} e_{} e_{i} = e_{i}", i + 1),
            vec![Bulk(i), Bulk(i + 1), Bulk(i)],
            vec![Bulk(i)],
        ));
        rels.push((
            format!("e_{} e_{i} e_{} = e_{}", i + 1, i + 1, i + 1),
            vec![Bulk(i + 1), Bulk(i), Bulk(i + 1)],
            vec![Bulk(i + 1)],
        ));
    }
    for i in 1..l {
        for j in i + 2..l {
            rels.push((
                format!("e_{i} e_{j} = e_{j} e_{i}"),
                vec![Bulk(i), Bulk(j)],
                vec![Bulk(j), Bulk(i)],
            ));
        }
    }
    rels.push(("f_-^2 = f_-".into(), vec![BlobLeft, BlobLeft], vec![BlobLeft]));
    rels.push((
        "e_1 f_- e_1 = e_1".into(),
        vec![Bulk(1), BlobLeft, Bulk(1)],
        vec![Bulk(1)],
    ));
    if mode == BoundaryMode::Two {
        rels.push(("f_+^2 = f_+".into(), vec![BlobRight, BlobRight], vec![BlobRight]));
        rels.push((
            format!("e_{} f_+ e_{} = e_{}", l - 1, l - 1, l - 1),
            vec![Bulk(l - 1), BlobRight, Bulk(l - 1)],
            vec![Bulk(l - 1)],
        ));
        let (i_word, j_word) = boundary_words(l);
        let iji: Vec<Generator> = i_word
            .iter()
            .chain(&j_word)
            .chain(&i_word)
            .copied()
            .collect();
        let jij: Vec<Generator> = j_word
            .iter()
            .chain(&i_word)
            .chain(&j_word)
            .copied()
            .collect();
        rels.push(("IJI = I".into(), iji, i_word.clone()));
        rels.push(("JIJ = J".into(), jij, j_word));
    }
    rels
}

/// The alternating products `I` and `J` for the two-boundary relations.
///
/// Even `L`: `I = e_1 e_3 ... e_{L-1}`, `J = f_- e_2 e_4 ... e_{L-2} f_+`.
/// Odd `L`: `I = f_- e_2 e_4 ... e_{L-1}`, `J = e_1 e_3 ... e_{L-2} f_+`.
pub fn boundary_words(l: usize) -> (Vec<Generator>, Vec<Generator>) {
    use Generator::{BlobLeft, BlobRight, Bulk};
    if l % 2 == 0 {
        let i_word = (0..l / 2).map(|i| Bulk(2 * i + 1)).collect();
        let mut j_word = vec![BlobLeft];
        j_word.extend((1..l / 2).map(|i| Bulk(2 * i)));
        j_word.push(BlobRight);
        (i_word, j_word)
    } else {
        let mut i_word = vec![BlobLeft];
        i_word.extend((1..=(l - 1) / 2).map(|i| Bulk(2 * i)));
        let mut j_word: Vec<Generator> = (1..=(l - 1) / 2).map(|i| Bulk(2 * i - 1)).collect();
        j_word.push(BlobRight);
        (i_word, j_word)
    }
}

/// Evaluate every relation of a mode as an exact matrix identity on the full
/// basis. Failures are report entries, not errors.
pub fn check_relations(l: usize, mode: BoundaryMode) -> Result<RelationReport, RelationError> {
    if l < 2 {
        return Err(RelationError::TooFewSites(l));
    }
    let basis = enumerate_basis(l, Sector::Full)?;
    let mut gens = vec![Generator::BlobLeft];
    if mode == BoundaryMode::Two {
        gens.push(Generator::BlobRight);
    }
    gens.extend((1..l).map(Generator::Bulk));
    let mut matrices = std::collections::HashMap::new();
    for g in gens {
        matrices.insert(g, operator_matrix(g, &basis)?.images().to_vec());
    }
    let identity: Vec<usize> = (0..basis.len()).collect();
    let eval_word = |word: &[Generator]| -> Vec<usize> {
        let mut acc = identity.clone();
        // Rightmost factor acts first.
        for gen in word.iter().rev() {
            acc = compose(&matrices[gen], &acc);
        }
        acc
    };
    let mut checks = Vec::new();
    for (name, lhs, rhs) in relation_words(l, mode) {
        checks.push(RelationCheck {
            name,
            holds: eval_word(&lhs) == eval_word(&rhs),
        });
    }
    checks.sort_by(|x, y| x.name.cmp(&y.name));
    Ok(RelationReport { l, mode, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_boundary_relations_hold_small() {
        for l in 2..=6 {
            let report = check_relations(l, BoundaryMode::One).unwrap();
            assert!(report.all_hold(), "failures at L={l}: {:?}", report.failures());
        }
    }

    #[test]
    fn two_boundary_relations_hold_small() {
        for l in 2..=6 {
            let report = check_relations(l, BoundaryMode::Two).unwrap();
            assert!(report.all_hold(), "failures at L={l}: {:?}", report.failures());
        }
    }

    #[test]
    fn boundary_words_match_both_parities() {
        use Generator::{BlobLeft, BlobRight, Bulk};
        let (i4, j4) = boundary_words(4);
        assert_eq!(i4, vec![Bulk(1), Bulk(3)]);
        assert_eq!(j4, vec![BlobLeft, Bulk(2), BlobRight]);
        let (i5, j5) = boundary_words(5);
        assert_eq!(i5, vec![BlobLeft, Bulk(2), Bulk(4)]);
        assert_eq!(j5, vec![Bulk(1), Bulk(3), BlobRight]);
    }

    #[test]
    fn report_is_sorted_by_relation_name() {
        let report = check_relations(4, BoundaryMode::Two).unwrap();
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn too_few_sites_is_an_error() {
        assert_eq!(
            check_relations(1, BoundaryMode::One),
            Err(RelationError::TooFewSites(1))
        );
    }
}
