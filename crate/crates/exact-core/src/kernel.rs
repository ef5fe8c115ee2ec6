//! One-dimensional nullspace of a square polynomial matrix.
//!
//! The solver is fraction-free elimination in the style of Bareiss over
//! integer-coefficient polynomials with deterministic pivoting (first nonzero
//! entry in canonical order), followed by an exact back substitution. The
//! result is verified symbolically against the input matrix before it is
//! returned, and is rescaled to the canonical content-normalized form.

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::intpoly::{BiPoly, DensePoly, RingElem};
use crate::matrix::{NormalizeError, PolyMatrix, PolyVector};
use crate::poly::{Exp, MultiPoly, Var};
use crate::{BigInt, BigRational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("kernel dimension is {nullity} at generic parameters (rank {rank} of {n}), expected 1")]
    WrongNullity { nullity: usize, rank: usize, n: usize },
    #[error("kernel vector cannot be normalized: {0}")]
    Normalize(#[from] NormalizeError),
}

/// Compute the content-normalized kernel vector of a square matrix whose
/// nullspace over the rational-function field has dimension exactly one.
pub fn kernel_one_dim(m: &PolyMatrix) -> Result<PolyVector, KernelError> {
    if !m.is_square() {
        return Err(KernelError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Err(KernelError::WrongNullity {
            nullity: 0,
            rank: 0,
            n: 0,
        });
    }

    let mut uses_a = false;
    let mut uses_b = false;
    for (_, p) in m.entries() {
        uses_a |= p.degree_in(Var::A) > 0;
        uses_b |= p.degree_in(Var::B) > 0;
    }

    // Univariate matrices run on the dense representation, which is what the
    // one-boundary Hamiltonians produce; genuinely bivariate ones eliminate
    // with the second variable Kronecker-packed into the coefficients.
    let vector = if uses_a && uses_b {
        solve_bivariate(m)?
    } else {
        let var = if uses_b { Var::B } else { Var::A };
        let rows = integer_rows(m, |p| to_dense(p, var));
        let x = bareiss_kernel(rows).map_err(|e| match e {
            Elimination::WrongNullity { nullity, rank, n } => {
                KernelError::WrongNullity { nullity, rank, n }
            }
            Elimination::DivisionFailed => unreachable!("exact division of true minors"),
        })?;
        let x = strip_poly_content(x);
        PolyVector::new(x.iter().map(|p| from_dense(p, var)).collect())
    };

    let vector = vector.content_normalize()?;
    let check = m.mul_vec(&vector);
    assert!(
        check.is_zero(),
        "internal error: kernel vector fails symbolic verification"
    );
    Ok(vector)
}

/// Bivariate elimination with the `b` level packed at `b = 2^(32*w)`.
///
/// Packing is a ring homomorphism, so the fraction-free elimination commutes
/// with it; a window overflow can only corrupt the result, never silently
/// validate it, because the unpacked candidate is checked against the matrix
/// symbolically. The window doubles until the check passes.
fn solve_bivariate(m: &PolyMatrix) -> Result<PolyVector, KernelError> {
    let mut window_limbs = 4usize;
    loop {
        let rows = integer_rows(m, |p| to_bipoly(p).pack_b(window_limbs));
        match bareiss_kernel(rows) {
            Ok(x) => {
                let unpacked: Vec<BiPoly> =
                    x.iter().map(|p| BiPoly::unpack_b(p, window_limbs)).collect();
                let vector = PolyVector::new(unpacked.iter().map(from_bipoly).collect());
                if m.mul_vec(&vector).is_zero() {
                    let stripped = strip_poly_content(unpacked);
                    return Ok(PolyVector::new(stripped.iter().map(from_bipoly).collect()));
                }
            }
            Err(Elimination::DivisionFailed) => {}
            Err(Elimination::WrongNullity { nullity, rank, n }) => {
                // A overflow-corrupted run can misjudge the rank; retry once
                // more before trusting the verdict at a saturated window.
                if window_limbs >= 1024 {
                    return Err(KernelError::WrongNullity { nullity, rank, n });
                }
            }
        }
        assert!(window_limbs <= 1 << 16, "packing window failed to converge");
        window_limbs *= 2;
    }
}

/// Failure modes of one elimination pass.
enum Elimination {
    WrongNullity { nullity: usize, rank: usize, n: usize },
    /// An exact division failed. Impossible for true polynomial rows; in
    /// packed form it signals a coefficient-window overflow.
    DivisionFailed,
}

/// Fraction-free row echelon elimination plus exact back substitution.
///
/// Returns a polynomial kernel vector (up to content) when the nullity is
/// exactly one.
fn bareiss_kernel<P: RingElem>(mut rows: Vec<Vec<P>>) -> Result<Vec<P>, Elimination> {
    let n = rows.len();
    let mut prev = P::one();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut free_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let pivot_row = (r..n).find(|&i| !rows[i][c].is_zero());
        let Some(pr) = pivot_row else {
            free_cols.push(c);
            continue;
        };
        rows.swap(r, pr);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        let plain_rescale = pivot == prev;
        for row in rest.iter_mut() {
            let factor = std::mem::replace(&mut row[c], P::zero());
            if factor.is_zero() {
                if plain_rescale {
                    continue;
                }
                for j in (c + 1)..n {
                    if !row[j].is_zero() {
                        row[j] = pivot
                            .mul(&row[j])
                            .exact_div(&prev)
                            .ok_or(Elimination::DivisionFailed)?;
                    }
                }
            } else {
                for j in (c + 1)..n {
                    let num = pivot.mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                    row[j] = num
                        .exact_div(&prev)
                        .ok_or(Elimination::DivisionFailed)?;
                }
            }
        }
        prev = pivot;
        pivot_cols.push(c);
        r += 1;
    }
    let rank = r;
    if free_cols.len() != 1 {
        return Err(Elimination::WrongNullity {
            nullity: free_cols.len(),
            rank,
            n,
        });
    }
    debug_assert!(rows[rank..].iter().all(|row| row.iter().all(P::is_zero)));

    // Back substitution: the free component is set to the final pivot, which
    // makes every division below exact (the solution entries are maximal
    // minors of the pivot rows).
    let free = free_cols[0];
    let mut x: Vec<P> = vec![P::zero(); n];
    x[free] = prev;
    for (k, &c) in pivot_cols.iter().enumerate().rev() {
        let mut s = P::zero();
        for (j, xj) in x.iter().enumerate().skip(c + 1) {
            if !xj.is_zero() && !rows[k][j].is_zero() {
                s = s.add(&rows[k][j].mul(xj));
            }
        }
        x[c] = s
            .neg()
            .exact_div(&rows[k][c])
            .ok_or(Elimination::DivisionFailed)?;
    }
    Ok(x)
}

/// Divide a polynomial vector by the gcd of its entries, normalizing away the
/// common polynomial and integer content accumulated by the elimination.
fn strip_poly_content<P: RingElem>(x: Vec<P>) -> Vec<P> {
    let debug = std::env::var("KERNEL_DEBUG").is_ok();
    let t0 = std::time::Instant::now();
    let mut g = P::zero();
    for e in &x {
        g = g.gcd(e);
        if g == P::one() {
            return x;
        }
    }
    if debug {
        eprintln!("content gcd done: {:?}", t0.elapsed());
    }
    if g.is_zero() || g == P::one() {
        return x;
    }
    x.iter()
        .map(|e| e.exact_div(&g).expect("content divides"))
        .collect()
}

/// Rescale each row to integer coefficients (kernel-preserving) and convert.
fn integer_rows<P>(m: &PolyMatrix, convert: impl Fn(&ScaledPoly) -> P) -> Vec<Vec<P>> {
    let n = m.rows();
    let mut dense: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::zero(); n]; n];
    for ((r, c), p) in m.entries() {
        dense[*r][*c] = p.clone();
    }
    dense
        .into_iter()
        .map(|row| {
            let mut denom_lcm = BigInt::one();
            let mut numer_gcd = BigInt::zero();
            for p in &row {
                for (_, c) in p.terms() {
                    denom_lcm = denom_lcm.lcm(c.denom());
                }
            }
            let scale = BigRational::from(denom_lcm.clone());
            for p in &row {
                for (_, c) in p.terms() {
                    numer_gcd = numer_gcd.gcd(&(c * &scale).to_integer());
                }
            }
            if numer_gcd.is_zero() {
                numer_gcd = BigInt::one();
            }
            row.iter()
                .map(|p| {
                    convert(&ScaledPoly {
                        poly: p,
                        denom_lcm: &denom_lcm,
                        numer_gcd: &numer_gcd,
                    })
                })
                .collect()
        })
        .collect()
}

struct ScaledPoly<'a> {
    poly: &'a MultiPoly,
    denom_lcm: &'a BigInt,
    numer_gcd: &'a BigInt,
}

impl ScaledPoly<'_> {
    fn int_coeff(&self, c: &BigRational) -> BigInt {
        (c * BigRational::from(self.denom_lcm.clone())).to_integer() / self.numer_gcd
    }
}

fn to_dense(p: &ScaledPoly, var: Var) -> DensePoly {
    let deg = p.poly.degree_in(var) as usize;
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.poly.terms() {
        let idx = match var {
            Var::A => e.a,
            Var::B => e.b,
        } as usize;
        coeffs[idx] = p.int_coeff(c);
    }
    DensePoly::from_coeffs(coeffs)
}

fn from_dense(p: &DensePoly, var: Var) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (i, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let exp = match var {
            Var::A => Exp::new(i as u32, 0),
            Var::B => Exp::new(0, i as u32),
        };
        out += &MultiPoly::monomial(exp, BigRational::from(c.clone()));
    }
    out
}

fn to_bipoly(p: &ScaledPoly) -> BiPoly {
    let mut out = BiPoly::default();
    for (e, c) in p.poly.terms() {
        out.insert((e.a, e.b), p.int_coeff(c));
    }
    out
}

fn from_bipoly(p: &BiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for ((ea, eb), c) in p.terms() {
        out += &MultiPoly::monomial(Exp::new(ea, eb), BigRational::from(c.clone()));
    }
    out
}

/// Nullspace of a rational matrix by plain Gaussian elimination.
///
/// Independent of the fraction-free path; used to cross-check symbolic
/// kernels at sampled parameter values. Returns `None` unless the nullity is
/// exactly one.
pub fn rational_kernel(matrix: &[Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|row| row.len() != n) {
        return None;
    }
    let mut m = matrix.to_vec();
    let mut pivot_cols = Vec::new();
    let mut free_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            free_cols.push(c);
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].clone();
        for j in c..n {
            m[r][j] = &m[r][j] / &inv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..n {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if free_cols.len() != 1 {
        return None;
    }
    let free = free_cols[0];
    let mut x = vec![BigRational::zero(); n];
    x[free] = BigRational::one();
    for (k, &c) in pivot_cols.iter().enumerate() {
        x[c] = -m[k][free].clone();
    }
    Some(x)
}

/// Evaluate every entry of a matrix at a rational point.
pub fn eval_matrix(
    m: &PolyMatrix,
    point: &[(Var, BigRational)],
) -> Result<Vec<Vec<BigRational>>, crate::poly::EvalError> {
    let mut out = vec![vec![BigRational::zero(); m.cols()]; m.rows()];
    for ((r, c), p) in m.entries() {
        out[*r][*c] = p.eval(point)?;
    }
    Ok(out)
}
