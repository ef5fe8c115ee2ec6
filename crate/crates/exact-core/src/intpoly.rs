//! Integer-coefficient polynomial arithmetic used by the fraction-free
//! elimination kernel.
//!
//! Two representations implement the same small ring interface: a dense
//! univariate one (the common case for one-boundary Hamiltonians, where only
//! `a` occurs) and a sparse bivariate one. Exact division and gcd are the
//! operations the solver leans on; both detect non-exact division instead of
//! silently rounding.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::BigInt;

/// Term-count product above which multiplication and division switch from
/// schoolbook to Kronecker substitution.
const KRONECKER_THRESHOLD: usize = 1024;

// ---------------------------------------------------------------------------
// Kronecker substitution: polynomial arithmetic through big integers.
//
// Packing at `x = 2^m` is a ring homomorphism, so products and exact
// quotients of packed integers are packed products and quotients. Unpacking
// recovers balanced digits in `(-2^(m-1), 2^(m-1))`, which is lossless as
// long as `m` exceeds the coefficient growth of the result.
// ---------------------------------------------------------------------------

/// Pack coefficients into slots of `m_limbs` 32-bit limbs each, given as
/// `(slot, coefficient)` pairs. Signs are handled by packing the positive
/// and negative parts separately and subtracting once.
fn pack_slots<'a>(
    parts: impl Iterator<Item = (usize, &'a BigInt)>,
    m_limbs: usize,
    total_slots: usize,
) -> BigInt {
    use num_bigint::Sign;
    let mut pos = vec![0u32; total_slots * m_limbs];
    let mut neg = vec![0u32; total_slots * m_limbs];
    let mut any_neg = false;
    for (slot, c) in parts {
        let (sign, digits) = c.to_u32_digits();
        assert!(digits.len() <= m_limbs, "coefficient exceeds slot width");
        let off = slot * m_limbs;
        match sign {
            Sign::NoSign => {}
            Sign::Plus => pos[off..off + digits.len()].copy_from_slice(&digits),
            Sign::Minus => {
                neg[off..off + digits.len()].copy_from_slice(&digits);
                any_neg = true;
            }
        }
    }
    let p = BigInt::from_slice(Sign::Plus, &pos);
    if any_neg {
        p - BigInt::from_slice(Sign::Plus, &neg)
    } else {
        p
    }
}

/// Split a packed integer into balanced digits of `m_limbs` limbs each,
/// with each digit in `(-2^(m-1), 2^(m-1)]` where `m = 32 * m_limbs`.
fn unpack_slots(x: &BigInt, m_limbs: usize) -> Vec<BigInt> {
    use num_bigint::Sign;
    if x.is_zero() {
        return Vec::new();
    }
    let (sign, limbs) = x.to_u32_digits();
    let negate = sign == Sign::Minus;
    let nslots = limbs.len().div_ceil(m_limbs);
    let mut out = Vec::with_capacity(nslots + 1);
    let mut carry = false;
    let mut slot = vec![0u32; m_limbs];
    for k in 0..nslots {
        let lo = k * m_limbs;
        let hi = (lo + m_limbs).min(limbs.len());
        slot[..hi - lo].copy_from_slice(&limbs[lo..hi]);
        slot[hi - lo..].fill(0);
        let mut overflow = false;
        if carry {
            let mut i = 0;
            loop {
                if i == m_limbs {
                    // The slot held 2^m - 1; with the carry it is exactly
                    // 2^m, i.e. digit 0 with carry out.
                    overflow = true;
                    break;
                }
                let (v, ov) = slot[i].overflowing_add(1);
                slot[i] = v;
                if !ov {
                    break;
                }
                i += 1;
            }
        }
        if overflow {
            out.push(BigInt::zero());
            carry = true;
            continue;
        }
        if slot[m_limbs - 1] >= 0x8000_0000 {
            // Negative balanced digit: magnitude is the two's complement.
            let mut mag = vec![0u32; m_limbs];
            let mut add = 1u64;
            for (i, m) in mag.iter_mut().enumerate() {
                let t = (!slot[i]) as u64 + add;
                *m = t as u32;
                add = t >> 32;
            }
            out.push(-BigInt::from_slice(Sign::Plus, &mag));
            carry = true;
        } else {
            out.push(BigInt::from_slice(Sign::Plus, &slot));
            carry = false;
        }
    }
    if carry {
        out.push(BigInt::from(1));
    }
    if negate {
        for d in &mut out {
            *d = -std::mem::take(d);
        }
    }
    out
}

fn slot_limbs(bits: u64) -> usize {
    (bits / 32 + 1) as usize
}

fn max_bits(coeffs: &[BigInt]) -> u64 {
    coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
}

fn log2_ceil(n: usize) -> u64 {
    (usize::BITS - n.saturating_sub(1).leading_zeros()) as u64
}

/// Ring interface required by the Bareiss elimination driver.
pub trait RingElem: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Exact division; `None` when `rhs` does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    /// Gcd including integer content, sign-normalized to a positive leading
    /// coefficient.
    fn gcd(&self, rhs: &Self) -> Self;
    /// (term count, max coefficient bits); diagnostic only.
    fn stats(&self) -> (usize, u64);
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over the integers.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`, no trailing
/// zeros are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    pub coeffs: Vec<BigInt>,
}

impl DensePoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_content(&self, g: &BigInt) -> DensePoly {
        if g.is_one() {
            return self.clone();
        }
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| c / g).collect(),
        }
    }

    fn primitive(&self) -> DensePoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut p = self.div_content(&self.content());
        if p.leading().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Pseudo-remainder of `self` by `rhs` in the variable.
    fn pseudo_rem(&self, rhs: &DensePoly) -> DensePoly {
        let dv = rhs.degree();
        let lcv = rhs.leading().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dv {
            let dr = r.degree();
            let lcr = r.leading().clone();
            let mut next = vec![BigInt::zero(); dr];
            for (i, c) in r.coeffs.iter().enumerate().take(dr) {
                next[i] = c * &lcv;
            }
            for (i, c) in rhs.coeffs.iter().enumerate().take(dv) {
                next[i + dr - dv] -= c * &lcr;
            }
            r = DensePoly::from_coeffs(next);
        }
        r
    }
}

impl RingElem for DensePoly {
    fn stats(&self) -> (usize, u64) {
        let terms = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        let bits = self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
        (terms, bits)
    }

    fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        DensePoly {
            coeffs: vec![BigInt::one()],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn neg(&self) -> Self {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        DensePoly::from_coeffs(out)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        DensePoly::from_coeffs(out)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.coeffs.len() * rhs.coeffs.len() >= KRONECKER_THRESHOLD {
            let terms = self.coeffs.len().min(rhs.coeffs.len());
            let m_limbs = slot_limbs(
                max_bits(&self.coeffs) + max_bits(&rhs.coeffs) + log2_ceil(terms) + 1,
            );
            let slots = self.coeffs.len() + rhs.coeffs.len() - 1;
            let p = pack_slots(self.coeffs.iter().enumerate(), m_limbs, slots);
            let q = pack_slots(rhs.coeffs.iter().enumerate(), m_limbs, slots);
            return DensePoly::from_coeffs(unpack_slots(&(p * q), m_limbs));
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        DensePoly::from_coeffs(out)
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if rhs.coeffs.len() == 1 {
            let d = &rhs.coeffs[0];
            let mut out = Vec::with_capacity(self.coeffs.len());
            for c in &self.coeffs {
                let (q, r) = c.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                out.push(q);
            }
            return Some(DensePoly::from_coeffs(out));
        }
        if self.degree() < rhs.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - rhs.degree();
        let mut quo = vec![BigInt::zero(); dq + 1];
        let lead = rhs.leading();
        for k in (0..=dq).rev() {
            let c = rem[k + rhs.degree()].clone();
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, rc) in rhs.coeffs.iter().enumerate() {
                rem[k + i] -= &q * rc;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(DensePoly::from_coeffs(quo))
    }

    fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.primitive_scaled();
        }
        if rhs.is_zero() {
            return self.primitive_scaled();
        }
        let ca = self.content();
        let cb = rhs.content();
        let c = ca.gcd(&cb);
        let mut u = self.div_content(&ca).primitive();
        let mut v = rhs.div_content(&cb).primitive();
        if u.degree() < v.degree() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_zero() {
            let r = u.pseudo_rem(&v).primitive();
            u = v;
            v = r;
        }
        let mut g = u;
        for coeff in g.coeffs.iter_mut() {
            *coeff *= &c;
        }
        if g.leading().is_negative() {
            g = g.neg();
        }
        g
    }
}

impl DensePoly {
    /// Sign-normalized copy with the full integer content retained.
    fn primitive_scaled(&self) -> DensePoly {
        if self.is_zero() {
            return self.clone();
        }
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

// ---------------------------------------------------------------------------
// Dense bivariate polynomials over the integers.
// ---------------------------------------------------------------------------

/// Bivariate polynomial, dense in `a` with dense `Z[b]` coefficients:
/// `coeffs[i]` is the polynomial in `b` multiplying `a^i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    pub coeffs: Vec<DensePoly>,
}

impl BiPoly {
    pub fn from_coeffs(mut coeffs: Vec<DensePoly>) -> Self {
        while coeffs.last().is_some_and(DensePoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn insert(&mut self, exp: (u32, u32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let (ea, eb) = (exp.0 as usize, exp.1 as usize);
        if self.coeffs.len() <= ea {
            self.coeffs.resize(ea + 1, DensePoly::zero());
        }
        let b = &mut self.coeffs[ea];
        if b.coeffs.len() <= eb {
            b.coeffs.resize(eb + 1, BigInt::zero());
        }
        b.coeffs[eb] += coeff;
        // Re-trim in case of cancellation.
        while b.coeffs.last().is_some_and(Zero::is_zero) {
            b.coeffs.pop();
        }
        while self.coeffs.last().is_some_and(DensePoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.coeffs.iter().enumerate().flat_map(|(ea, b)| {
            b.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(eb, c)| ((ea as u32, eb as u32), c))
        })
    }

    fn deg_a(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn leading_a(&self) -> &DensePoly {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// One past the largest `b`-degree over all `a`-coefficients.
    fn b_len(&self) -> usize {
        self.coeffs.iter().map(|c| c.coeffs.len()).max().unwrap_or(0)
    }

    /// Pack at `(a, b) = (2^(b_slots*m), 2^m)`, laying digits out `a`-major.
    fn pack2(&self, m_limbs: usize, b_slots: usize, a_slots: usize) -> BigInt {
        let parts = self.coeffs.iter().enumerate().flat_map(|(i, bp)| {
            bp.coeffs
                .iter()
                .enumerate()
                .map(move |(j, c)| (i * b_slots + j, c))
        });
        pack_slots(parts, m_limbs, a_slots * b_slots)
    }

    fn unpack2(x: &BigInt, m_limbs: usize, b_slots: usize) -> BiPoly {
        let digits = unpack_slots(x, m_limbs);
        BiPoly::from_coeffs(
            digits
                .chunks(b_slots)
                .map(|chunk| DensePoly::from_coeffs(chunk.to_vec()))
                .collect(),
        )
    }

    /// Pack the `b` level at `b = 2^(32*m_limbs)`, giving a univariate
    /// polynomial in `a` over packed integer coefficients. Packing is a ring
    /// homomorphism, so whole computations can run in packed form; results
    /// are only trustworthy while every intermediate `b`-coefficient stays
    /// within the window, which callers must verify independently.
    pub fn pack_b(&self, m_limbs: usize) -> DensePoly {
        DensePoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|bp| pack_slots(bp.coeffs.iter().enumerate(), m_limbs, bp.coeffs.len()))
                .collect(),
        )
    }

    /// Inverse of [`BiPoly::pack_b`], recovering balanced digits.
    pub fn unpack_b(p: &DensePoly, m_limbs: usize) -> BiPoly {
        BiPoly::from_coeffs(
            p.coeffs
                .iter()
                .map(|c| DensePoly::from_coeffs(unpack_slots(c, m_limbs)))
                .collect(),
        )
    }

    fn from_b_poly(p: DensePoly, a_shift: usize) -> BiPoly {
        if p.is_zero() {
            return BiPoly::default();
        }
        let mut coeffs = vec![DensePoly::zero(); a_shift + 1];
        coeffs[a_shift] = p;
        BiPoly { coeffs }
    }

    /// Content with respect to `a`: the gcd in `Z[b]` of the `a`-coefficients.
    fn content_a(&self) -> DensePoly {
        let mut g = DensePoly::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = g.gcd(c);
            }
            if g.degree() == 0 && !g.is_zero() && g.coeffs[0].is_one() {
                break;
            }
        }
        g
    }

    fn div_b_poly(&self, d: &DensePoly) -> Option<BiPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.exact_div(d)?);
        }
        Some(BiPoly::from_coeffs(out))
    }

    fn primitive_a(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_a();
        self.div_b_poly(&c).expect("content divides").sign_normalized()
    }

    fn sign_normalized(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        if self.leading_a().leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Pseudo-remainder with respect to `a`, coefficients in `Z[b]`.
    fn pseudo_rem_a(&self, rhs: &BiPoly) -> BiPoly {
        let dv = rhs.deg_a();
        let lcv = rhs.leading_a().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.deg_a() >= dv {
            let dr = r.deg_a();
            let lcr = r.leading_a().clone();
            let mut next = vec![DensePoly::zero(); dr];
            for (i, c) in r.coeffs.iter().enumerate().take(dr) {
                next[i] = c.mul(&lcv);
            }
            for (i, c) in rhs.coeffs.iter().enumerate().take(dv) {
                next[i + dr - dv] = next[i + dr - dv].sub(&c.mul(&lcr));
            }
            r = BiPoly::from_coeffs(next);
        }
        r
    }
}

impl RingElem for BiPoly {
    fn stats(&self) -> (usize, u64) {
        let mut terms = 0;
        let mut bits = 0;
        for c in &self.coeffs {
            let s = c.stats();
            terms += s.0;
            bits = bits.max(s.1);
        }
        (terms, bits)
    }

    fn zero() -> Self {
        BiPoly::default()
    }

    fn one() -> Self {
        BiPoly {
            coeffs: vec![DensePoly::one()],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn neg(&self) -> Self {
        BiPoly {
            coeffs: self.coeffs.iter().map(DensePoly::neg).collect(),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![DensePoly::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        BiPoly::from_coeffs(out)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![DensePoly::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = out[i].sub(c);
        }
        BiPoly::from_coeffs(out)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (terms_l, bits_l) = self.stats();
        let (terms_r, bits_r) = rhs.stats();
        if terms_l * terms_r >= KRONECKER_THRESHOLD {
            // Pack at (a, b) = (2^(slots*m), 2^m); the b-slot count covers
            // the product's b-degree so nothing spills between a-slots.
            let b_slots = self.b_len() + rhs.b_len() - 1;
            let a_slots = self.coeffs.len() + rhs.coeffs.len() - 1;
            let m_limbs =
                slot_limbs(bits_l + bits_r + log2_ceil(terms_l.min(terms_r)) + 1);
            let p = self.pack2(m_limbs, b_slots, a_slots);
            let q = rhs.pack2(m_limbs, b_slots, a_slots);
            return BiPoly::unpack2(&(p * q), m_limbs, b_slots);
        }
        let mut out = vec![DensePoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add(&x.mul(y));
                }
            }
        }
        BiPoly::from_coeffs(out)
    }

    /// Two-level synthetic division: divide in `a` first, with exact
    /// univariate divisions in `Z[b]` at the coefficient level.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.deg_a() < rhs.deg_a() {
            return None;
        }
        let lead = rhs.leading_a();
        let dq = self.deg_a() - rhs.deg_a();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![DensePoly::zero(); dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + rhs.deg_a()].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(lead)?;
            for (i, c) in rhs.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&q.mul(c));
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(BiPoly::from_coeffs(quo))
    }

    fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.sign_normalized();
        }
        if rhs.is_zero() {
            return self.sign_normalized();
        }
        let ca = self.content_a();
        let cb = rhs.content_a();
        let cg = ca.gcd(&cb);
        let mut u = self.div_b_poly(&ca).expect("content divides");
        let mut v = rhs.div_b_poly(&cb).expect("content divides");
        if u.deg_a() < v.deg_a() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_zero() {
            if v.deg_a() == 0 {
                // Both arguments are primitive in `a`, so the gcd carries no
                // `a`-free factor beyond the content handled above.
                u = BiPoly::one();
                break;
            }
            let r = u.pseudo_rem_a(&v).primitive_a();
            u = v;
            v = r;
        }
        u.primitive_a()
            .mul(&BiPoly::from_b_poly(cg, 0))
            .sign_normalized()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(coeffs: &[i64]) -> DensePoly {
        DensePoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn sparse(terms: &[(u32, u32, i64)]) -> BiPoly {
        let mut p = BiPoly::default();
        for &(a, b, c) in terms {
            p.insert((a, b), BigInt::from(c));
        }
        p
    }

    #[test]
    fn dense_exact_division() {
        // (x + 2)(3x^2 - x + 5) = 3x^3 + 5x^2 + 3x + 10
        let u = dense(&[10, 3, 5, 3]);
        let d = dense(&[2, 1]);
        assert_eq!(u.exact_div(&d), Some(dense(&[5, -1, 3])));
        assert_eq!(dense(&[1, 1]).exact_div(&d), None);
    }

    #[test]
    fn dense_gcd_with_content() {
        // gcd(2(x+1)(x+2), 4(x+1)) = 2(x+1)
        let u = dense(&[4, 6, 2]);
        let v = dense(&[4, 4]);
        assert_eq!(u.gcd(&v), dense(&[2, 2]));
        assert_eq!(dense(&[0]).gcd(&v), dense(&[4, 4]));
    }

    #[test]
    fn sparse_exact_division() {
        // (a + b)(a - b) = a^2 - b^2
        let prod = sparse(&[(2, 0, 1), (0, 2, -1)]);
        let d = sparse(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(prod.exact_div(&d), Some(sparse(&[(1, 0, 1), (0, 1, -1)])));
        assert_eq!(sparse(&[(1, 0, 1)]).exact_div(&d), None);
    }

    #[test]
    fn sparse_gcd_bivariate() {
        // gcd((a+2)(b+2), 3(a+2)) = a + 2
        let u = sparse(&[(1, 1, 1), (1, 0, 2), (0, 1, 2), (0, 0, 4)]);
        let v = sparse(&[(1, 0, 3), (0, 0, 6)]);
        assert_eq!(u.gcd(&v), sparse(&[(1, 0, 1), (0, 0, 2)]));
    }

    #[test]
    fn sparse_gcd_of_coprime_is_constant() {
        let u = sparse(&[(1, 0, 1), (0, 0, 1)]); // a + 1
        let v = sparse(&[(0, 1, 1), (0, 0, 1)]); // b + 1
        assert_eq!(u.gcd(&v), BiPoly::one());
    }
}
