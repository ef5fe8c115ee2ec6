//! Bivariate polynomials in the boundary fugacities `a` and `b` with exact
//! rational coefficients.
//!
//! Terms are kept in a sparse map from exponent pairs to nonzero
//! coefficients. The canonical text rendering orders terms by graded
//! lexicographic order with `a` before `b`, e.g. `3*a^2*b + 2*a + 4`, and
//! [`MultiPoly::from_str`] parses the same format back exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::{BigInt, BigRational};

/// A polynomial variable; the full variable set is `{a, b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A => write!(f, "a"),
            Var::B => write!(f, "b"),
        }
    }
}

/// Exponent pair `(j, k)` for the monomial `a^j * b^k`.
///
/// The derived ordering is lexicographic with `a` major, which is a valid
/// monomial order and is what the sparse term map sorts by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp {
    pub a: u32,
    pub b: u32,
}

impl Exp {
    pub const ONE: Exp = Exp { a: 0, b: 0 };

    pub fn new(a: u32, b: u32) -> Self {
        Exp { a, b }
    }

    pub fn total(&self) -> u32 {
        self.a + self.b
    }

    fn mul(&self, other: &Exp) -> Exp {
        Exp::new(self.a + other.a, self.b + other.b)
    }

    /// Graded-lex comparison with `a` before `b`; used for display order.
    fn graded_lex(&self, other: &Exp) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.a.cmp(&other.a))
    }
}

/// A polynomial in `a` and `b` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exp, BigRational>,
}

/// Error from evaluating a polynomial at a partial point.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("no value assigned to variable {0}")]
    MissingVariable(Var),
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::ONE, c);
        }
        MultiPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        MultiPoly::constant(crate::rat(n))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(
            match v {
                Var::A => Exp::new(1, 0),
                Var::B => Exp::new(0, 1),
            },
            BigRational::one(),
        )
    }

    pub fn monomial(exp: Exp, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == Exp::ONE)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `a^j * b^k`, zero if the term is absent.
    pub fn coeff(&self, exp: Exp) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    /// Degree in one variable; the zero polynomial reports 0.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|e| match v {
                Var::A => e.a,
                Var::B => e.b,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Exp::total).max().unwrap_or(0)
    }

    /// The variables actually occurring, in `a < b` order.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars = Vec::new();
        if self.terms.keys().any(|e| e.a > 0) {
            vars.push(Var::A);
        }
        if self.terms.keys().any(|e| e.b > 0) {
            vars.push(Var::B);
        }
        vars
    }

    fn insert_term(&mut self, exp: Exp, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, q)| (*e, q * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at a point assigning every variable that occurs.
    ///
    /// Assignments for absent variables are ignored; a missing assignment for
    /// an occurring variable is an error naming the variable.
    pub fn eval(&self, point: &[(Var, BigRational)]) -> Result<BigRational, EvalError> {
        let lookup = |v: Var| point.iter().find(|(w, _)| *w == v).map(|(_, q)| q.clone());
        let va = lookup(Var::A);
        let vb = lookup(Var::B);
        for v in self.variables() {
            let assigned = match v {
                Var::A => va.is_some(),
                Var::B => vb.is_some(),
            };
            if !assigned {
                return Err(EvalError::MissingVariable(v));
            }
        }
        let va = va.unwrap_or_else(BigRational::one);
        let vb = vb.unwrap_or_else(BigRational::one);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..e.a {
                t *= &va;
            }
            for _ in 0..e.b {
                t *= &vb;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute an exact value for one variable, leaving the other symbolic.
    pub fn eval_var(&self, v: Var, value: &BigRational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let (deg, rest) = match v {
                Var::A => (e.a, Exp::new(0, e.b)),
                Var::B => (e.b, Exp::new(e.a, 0)),
            };
            let mut coeff = c.clone();
            for _ in 0..deg {
                coeff *= value;
            }
            out.insert_term(rest, coeff);
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let (deg, lower) = match v {
                Var::A => (e.a, Exp::new(e.a.saturating_sub(1), e.b)),
                Var::B => (e.b, Exp::new(e.a, e.b.saturating_sub(1))),
            };
            if deg > 0 {
                out.insert_term(lower, c * BigRational::from(BigInt::from(deg)));
            }
        }
        out
    }

    /// Sum of all coefficients, i.e. the value at `a = b = 1`.
    pub fn coeff_sum(&self) -> BigRational {
        self.terms.values().cloned().sum()
    }

    /// True if every coefficient is a nonnegative integer.
    pub fn has_nonneg_int_coeffs(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Terms in descending graded-lex order, as used for rendering.
    fn display_order(&self) -> Vec<(&Exp, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(e1, _), (e2, _)| e2.graded_lex(e1));
        v
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (e, c) in &rhs.terms {
            self.insert_term(*e, c.clone());
        }
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.display_order().into_iter().enumerate() {
            let neg = coeff.is_negative();
            let abs = if neg { -coeff.clone() } else { coeff.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || *exp == Exp::ONE {
                parts.push(fmt_coeff(&abs));
            }
            for (v, d) in [(Var::A, exp.a), (Var::B, exp.b)] {
                match d {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{d}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Error from parsing the canonical polynomial text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePolyError {
    #[error("empty polynomial text")]
    Empty,
    #[error("malformed term `{0}`")]
    BadTerm(String),
    #[error("malformed coefficient `{0}`")]
    BadCoeff(String),
    #[error("malformed exponent `{0}`")]
    BadExponent(String),
}

fn parse_term(text: &str) -> Result<(Exp, BigRational), ParsePolyError> {
    let mut coeff = BigRational::one();
    let mut exp = Exp::ONE;
    let mut saw_factor = false;
    for factor in text.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(ParsePolyError::BadTerm(text.to_string()));
        }
        saw_factor = true;
        let (base, power) = match factor.split_once('^') {
            Some((b, p)) => {
                let power: u32 = p
                    .trim()
                    .parse()
                    .map_err(|_| ParsePolyError::BadExponent(factor.to_string()))?;
                (b.trim(), power)
            }
            None => (factor, 1),
        };
        match base {
            "a" => exp.a += power,
            "b" => exp.b += power,
            _ => {
                // Numeric factor, possibly `p/q`. An exponent on a number is
                // not part of the format.
                if power != 1 {
                    return Err(ParsePolyError::BadTerm(text.to_string()));
                }
                let q = match base.split_once('/') {
                    Some((n, d)) => {
                        let n = BigInt::from_str(n.trim())
                            .map_err(|_| ParsePolyError::BadCoeff(base.to_string()))?;
                        let d = BigInt::from_str(d.trim())
                            .map_err(|_| ParsePolyError::BadCoeff(base.to_string()))?;
                        if d.is_zero() {
                            return Err(ParsePolyError::BadCoeff(base.to_string()));
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from(
                        BigInt::from_str(base)
                            .map_err(|_| ParsePolyError::BadCoeff(base.to_string()))?,
                    ),
                };
                coeff *= q;
            }
        }
    }
    if !saw_factor {
        return Err(ParsePolyError::BadTerm(text.to_string()));
    }
    Ok((exp, coeff))
}

impl FromStr for MultiPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParsePolyError::Empty);
        }
        if s == "0" {
            return Ok(MultiPoly::zero());
        }
        // Split on top-level + and - signs; '-' both separates and negates.
        let mut signed_terms: Vec<(i64, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = 1i64;
        for c in s.chars() {
            match c {
                '+' | '-' => {
                    if cur.trim().is_empty() {
                        // Sign prefix on the upcoming term, possibly stacked.
                        if c == '-' {
                            sign = -sign;
                        }
                    } else {
                        signed_terms.push((sign, std::mem::take(&mut cur)));
                        sign = if c == '-' { -1 } else { 1 };
                    }
                }
                _ => cur.push(c),
            }
        }
        if cur.trim().is_empty() {
            return Err(ParsePolyError::Empty);
        }
        signed_terms.push((sign, cur));
        let mut out = MultiPoly::zero();
        for (sign, term) in signed_terms {
            let (exp, coeff) = parse_term(term.trim())?;
            out.insert_term(exp, coeff * crate::rat(sign));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn eval_identity_polynomial() {
        let a = MultiPoly::var(Var::A);
        assert_eq!(a.eval(&[(Var::A, rat(5))]).unwrap(), rat(5));
    }

    #[test]
    fn eval_one_boundary_normalization_at_one() {
        // 6a^2 + 18a + 9 evaluates to 33 at a = 1.
        let z = p("6*a^2 + 18*a + 9");
        assert_eq!(z.eval(&[(Var::A, rat(1))]).unwrap(), rat(33));
    }

    #[test]
    fn eval_two_boundary_normalization_at_one() {
        // ab + 2a + 2b + 4 evaluates to 9 at a = b = 1.
        let z = p("a*b + 2*a + 2*b + 4");
        assert_eq!(z.eval(&[(Var::A, rat(1)), (Var::B, rat(1))]).unwrap(), rat(9));
    }

    #[test]
    fn eval_missing_variable_is_an_error() {
        let z = p("a*b + 1");
        assert_eq!(
            z.eval(&[(Var::A, rat(1))]),
            Err(EvalError::MissingVariable(Var::B))
        );
    }

    #[test]
    fn display_graded_lex() {
        let q = p("2*a + 4 + 3*a^2*b");
        assert_eq!(q.to_string(), "3*a^2*b + 2*a + 4");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        let r = p("a^2 + a*b + b^2");
        assert_eq!(r.to_string(), "a^2 + a*b + b^2");
    }

    #[test]
    fn display_negative_and_rational_coefficients() {
        let q = p("-a + 1/2");
        assert_eq!(q.to_string(), "-a + 1/2");
        assert_eq!(p(&q.to_string()), q);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<MultiPoly>().is_err());
        assert!("2**a".parse::<MultiPoly>().is_err());
        assert!("c + 1".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn derivative_and_partial_eval() {
        let z = p("6*a^2 + 18*a + 9");
        assert_eq!(z.derivative(Var::A), p("12*a + 18"));
        let zb = p("a*b + 2*a + 2*b + 4");
        assert_eq!(zb.eval_var(Var::B, &rat(1)), p("3*a + 6"));
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let x = p("2*a + 3*b - 1");
        let y = p("a*b - 7");
        let pt = [(Var::A, ratio(3, 2)), (Var::B, ratio(-5, 3))];
        let prod = &x * &y;
        assert_eq!(
            prod.eval(&pt).unwrap(),
            x.eval(&pt).unwrap() * y.eval(&pt).unwrap()
        );
        let sum = &x + &y;
        assert_eq!(
            sum.eval(&pt).unwrap(),
            x.eval(&pt).unwrap() + y.eval(&pt).unwrap()
        );
    }

    #[test]
    fn degrees_and_variables() {
        let q = p("3*a^2*b + 2*a + 4");
        assert_eq!(q.degree_in(Var::A), 2);
        assert_eq!(q.degree_in(Var::B), 1);
        assert_eq!(q.total_degree(), 3);
        assert_eq!(q.variables(), vec![Var::A, Var::B]);
        assert_eq!(MultiPoly::zero().degree_in(Var::A), 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = MultiPoly> {
            proptest::collection::vec(((0u32..4, 0u32..4), -20i64..20), 0..6).prop_map(|terms| {
                let mut q = MultiPoly::zero();
                for ((ea, eb), c) in terms {
                    q.insert_term(Exp::new(ea, eb), rat(c));
                }
                q
            })
        }

        proptest! {
            #[test]
            fn display_round_trip(q in arb_poly()) {
                let text = q.to_string();
                let back: MultiPoly = text.parse().unwrap();
                prop_assert_eq!(back, q);
            }

            // Symbolic equality agrees with evaluation at random rational points.
            #[test]
            fn ring_ops_commute_with_eval(
                x in arb_poly(),
                y in arb_poly(),
                na in -9i64..9, nb in -9i64..9,
            ) {
                let pt = [(Var::A, ratio(na, 7)), (Var::B, ratio(nb, 5))];
                prop_assert_eq!(
                    (&x * &y).eval(&pt).unwrap(),
                    x.eval(&pt).unwrap() * y.eval(&pt).unwrap()
                );
                prop_assert_eq!(
                    (&x - &y).eval(&pt).unwrap(),
                    x.eval(&pt).unwrap() - y.eval(&pt).unwrap()
                );
            }
        }
    }
}
