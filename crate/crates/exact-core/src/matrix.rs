//! Sparse matrices and dense vectors with polynomial entries.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::MultiPoly;
use crate::{BigInt, BigRational};

/// Sparse matrix over the polynomial ring; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::new(n, n);
        for i in 0..n {
            m.set(i, i, MultiPoly::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Store an entry, dropping it if zero.
    pub fn set(&mut self, r: usize, c: usize, value: MultiPoly) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if value.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), value);
        }
    }

    /// Add into an entry, dropping it if the sum is zero.
    pub fn add_to(&mut self, r: usize, c: usize, value: &MultiPoly) {
        let cur = self.get(r, c);
        self.set(r, c, &cur + value);
    }

    pub fn get(&self, r: usize, c: usize) -> MultiPoly {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(MultiPoly::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &MultiPoly)> {
        self.entries.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let mut out = self.clone();
        for ((r, c), v) in &rhs.entries {
            out.add_to(*r, *c, v);
        }
        out
    }

    pub fn scale(&self, c: &MultiPoly) -> PolyMatrix {
        let mut out = PolyMatrix::new(self.rows, self.cols);
        for ((r, k), v) in &self.entries {
            out.set(*r, *k, c * v);
        }
        out
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        // Group the right factor by row for the sparse product.
        let mut by_row: Vec<Vec<(usize, &MultiPoly)>> = vec![Vec::new(); rhs.rows];
        for ((r, c), v) in &rhs.entries {
            by_row[*r].push((*c, v));
        }
        let mut out = PolyMatrix::new(self.rows, rhs.cols);
        for ((r, k), left) in &self.entries {
            for (c, right) in &by_row[*k] {
                out.add_to(*r, *c, &(left * *right));
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &PolyVector) -> PolyVector {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let mut out = vec![MultiPoly::zero(); self.rows];
        for ((r, c), m) in &self.entries {
            out[*r] += &(m * v.get(*c));
        }
        PolyVector::new(out)
    }

    /// Sum of the entries in one column.
    pub fn col_sum(&self, c: usize) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for r in 0..self.rows {
            if let Some(v) = self.entries.get(&(r, c)) {
                acc += v;
            }
        }
        acc
    }
}

/// Dense vector of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyVector {
    entries: Vec<MultiPoly>,
}

/// Error from content normalization.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("entry sum vanishes at a = b = 1; no sign-normalized scaling exists")]
    ZeroSumAtOne,
}

impl PolyVector {
    pub fn new(entries: Vec<MultiPoly>) -> Self {
        PolyVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &MultiPoly {
        &self.entries[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &MultiPoly> {
        self.entries.iter()
    }

    pub fn into_entries(self) -> Vec<MultiPoly> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MultiPoly::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> PolyVector {
        PolyVector::new(self.entries.iter().map(|p| p.scale(c)).collect())
    }

    /// Sum of all entries as a polynomial.
    pub fn sum(&self) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for p in &self.entries {
            acc += p;
        }
        acc
    }

    /// Rescale into the canonical content-normalized form.
    ///
    /// See [`content_normalize`].
    pub fn content_normalize(&self) -> Result<PolyVector, NormalizeError> {
        content_normalize(self)
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Rescale a nonzero vector by the unique rational so that all coefficients
/// are integers with collective gcd 1 and the entry sum at `a = b = 1` is
/// positive.
pub fn content_normalize(v: &PolyVector) -> Result<PolyVector, NormalizeError> {
    if v.is_zero() {
        return Err(NormalizeError::ZeroVector);
    }
    let mut denom_lcm = BigInt::one();
    for p in v.iter() {
        for (_, c) in p.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
    }
    let mut numer_gcd = BigInt::zero();
    let scale = BigRational::from(denom_lcm.clone());
    for p in v.iter() {
        for (_, c) in p.terms() {
            let n = (c * &scale).to_integer();
            numer_gcd = numer_gcd.gcd(&n);
        }
    }
    debug_assert!(!numer_gcd.is_zero());
    let mut lambda = BigRational::new(denom_lcm, numer_gcd);
    let sum = v.sum().coeff_sum();
    let signed_sum = sum * &lambda;
    if signed_sum.is_zero() {
        return Err(NormalizeError::ZeroSumAtOne);
    }
    if signed_sum.is_negative() {
        lambda = -lambda;
    }
    Ok(v.scale(&lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use crate::rat;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn vector(entries: &[&str]) -> PolyVector {
        PolyVector::new(entries.iter().map(|s| p(s)).collect())
    }

    #[test]
    fn normalize_divides_by_content() {
        let v = vector(&["2*a", "4"]);
        assert_eq!(v.content_normalize().unwrap(), vector(&["a", "2"]));
    }

    #[test]
    fn normalize_fixes_sign() {
        let v = vector(&["-a", "-2", "-2 - a"]);
        assert_eq!(v.content_normalize().unwrap(), vector(&["a", "2", "2 + a"]));
    }

    #[test]
    fn normalize_preserves_canonical_input() {
        let v = vector(&["a", "2", "2 + a"]);
        assert_eq!(v.content_normalize().unwrap(), v);
    }

    #[test]
    fn normalize_clears_denominators() {
        let v = vector(&["1/2*a", "1/3"]);
        assert_eq!(v.content_normalize().unwrap(), vector(&["3*a", "2"]));
    }

    #[test]
    fn normalize_zero_vector_errors() {
        let v = vector(&["0", "0"]);
        assert_eq!(v.content_normalize(), Err(NormalizeError::ZeroVector));
    }

    #[test]
    fn normalize_zero_sum_errors() {
        let v = vector(&["a", "-a"]);
        assert_eq!(v.content_normalize(), Err(NormalizeError::ZeroSumAtOne));
    }

    #[test]
    fn column_sums() {
        let mut m = PolyMatrix::new(2, 2);
        m.set(0, 0, p("1"));
        m.set(1, 0, p("-1"));
        m.set(0, 1, p("-a"));
        m.set(1, 1, p("a"));
        assert!(m.col_sum(0).is_zero());
        assert!(m.col_sum(1).is_zero());
    }

    #[test]
    fn matrix_vector_product() {
        let mut m = PolyMatrix::new(2, 2);
        m.set(0, 0, p("1"));
        m.set(1, 0, p("-1"));
        m.set(0, 1, p("-a"));
        m.set(1, 1, p("a"));
        let v = vector(&["a", "1"]);
        assert!(m.mul_vec(&v).is_zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
            proptest::collection::vec(
                ((0usize..n, 0usize..n), (0u32..2, 0u32..2), -5i64..5),
                0..8,
            )
            .prop_map(move |entries| {
                let mut m = PolyMatrix::new(n, n);
                for ((r, c), (ea, eb), coeff) in entries {
                    m.add_to(
                        r,
                        c,
                        &MultiPoly::monomial(crate::poly::Exp::new(ea, eb), rat(coeff)),
                    );
                }
                m
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn product_is_associative(
                x in arb_matrix(3), y in arb_matrix(3), z in arb_matrix(3)
            ) {
                prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            }

            #[test]
            fn product_distributes_over_sum(
                x in arb_matrix(3), y in arb_matrix(3), z in arb_matrix(3)
            ) {
                prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            }

            #[test]
            fn normalize_is_idempotent_and_scale_invariant(
                v in proptest::collection::vec((0u32..3, -8i64..8), 1..5),
                qn in 1i64..30, qd in 1i64..30, sign in proptest::bool::ANY,
            ) {
                let vec = PolyVector::new(
                    v.iter()
                        .map(|(e, c)| MultiPoly::monomial(crate::poly::Exp::new(*e, 0), rat(*c)))
                        .collect(),
                );
                prop_assume!(!vec.is_zero());
                let q = crate::ratio(if sign { qn } else { -qn }, qd);
                match vec.content_normalize() {
                    Ok(n) => {
                        prop_assert_eq!(n.content_normalize().unwrap(), n.clone());
                        prop_assert_eq!(vec.scale(&q).content_normalize().unwrap(), n);
                    }
                    Err(NormalizeError::ZeroSumAtOne) => {
                        prop_assert_eq!(
                            vec.scale(&q).content_normalize(),
                            Err(NormalizeError::ZeroSumAtOne)
                        );
                    }
                    Err(e) => prop_assert!(false, "unexpected {e:?}"),
                }
            }
        }
    }
}
