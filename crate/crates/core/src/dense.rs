//! Dense univariate polynomials over a [`FieldCtx`].
//!
//! Coefficients are little-endian (`coeffs[i]` multiplies `x^i`) and the
//! vector never carries trailing zeros. The field context is passed to every
//! operation rather than stored, so these are cheap to build inside hot loops
//! such as root scans and irreducibility tests.

use crate::fields::{FieldCtx, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<FieldElem>,
}

impl DensePoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn x(ctx: &FieldCtx) -> Self {
        Self::new(vec![ctx.zero(), ctx.one()])
    }

    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn leading(&self) -> Option<FieldElem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self, ctx: &FieldCtx) -> bool {
        self.leading() == Some(ctx.one())
    }

    pub fn add(&self, other: &Self, ctx: &FieldCtx) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| ctx.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self, ctx: &FieldCtx) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| ctx.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: FieldElem, ctx: &FieldCtx) -> Self {
        Self::new(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Self, ctx: &FieldCtx) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self, ctx: &FieldCtx) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = ctx
            .inv(divisor.coeffs[dd])
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![FieldElem::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let f = ctx.mul(c, lead_inv);
            quot[i - dd] = f;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = ctx.sub(rem[idx], ctx.mul(f, b));
            }
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self, ctx: &FieldCtx) -> Self {
        self.div_rem(divisor, ctx).1
    }

    pub fn make_monic(&self, ctx: &FieldCtx) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(ctx.inv(l).expect("nonzero"), ctx),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self, ctx: &FieldCtx) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, ctx);
            a = b;
            b = r;
        }
        a.make_monic(ctx)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self, ctx: &FieldCtx) -> Self {
        let mut base = self.rem(modulus, ctx);
        let mut acc = Self::constant(ctx.one()).rem(modulus, ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ctx).rem(modulus, ctx);
            }
            base = base.mul(&base, ctx).rem(modulus, ctx);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: FieldElem, ctx: &FieldCtx) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    pub fn derivative(&self, ctx: &FieldCtx) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| ctx.mul(c, ctx.from_int(i as i64)))
                .collect(),
        )
    }

    /// Map every coefficient through `f` (e.g. a field embedding).
    pub fn map(&self, mut f: impl FnMut(FieldElem) -> FieldElem) -> Self {
        Self::new(self.coeffs.iter().map(|&c| f(c)).collect())
    }

    /// Smallest degree of a nontrivial irreducible factor, or `None` when the
    /// polynomial is irreducible. Uses `gcd(f, x^{Q^j} - x)` for `j <= deg/2`.
    pub fn smallest_factor_degree(&self, ctx: &FieldCtx) -> Option<usize> {
        let n = self.degree().expect("nonzero polynomial");
        if n <= 1 {
            return None;
        }
        let f = self.make_monic(ctx);
        let x = Self::x(ctx);
        let mut power = x.clone();
        for j in 1..=n / 2 {
            power = power.pow_mod(ctx.size() as u128, &f, ctx);
            let g = f.gcd(&power.sub(&x, ctx), ctx);
            if g.degree() != Some(0) {
                return Some(j);
            }
        }
        None
    }

    pub fn is_irreducible(&self, ctx: &FieldCtx) -> bool {
        matches!(self.degree(), Some(d) if d >= 1) && self.smallest_factor_degree(ctx).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldCtx;

    #[test]
    fn div_rem_reconstructs() {
        let f3 = FieldCtx::prime(3).unwrap();
        let a = DensePoly::new(vec![
            f3.from_int(1),
            f3.from_int(2),
            f3.from_int(0),
            f3.from_int(1),
        ]);
        let b = DensePoly::new(vec![f3.from_int(2), f3.from_int(1)]);
        let (q, r) = a.div_rem(&b, &f3);
        assert_eq!(q.mul(&b, &f3).add(&r, &f3), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn irreducibility_over_f2() {
        let f2 = FieldCtx::prime(2).unwrap();
        let one = f2.one();
        let z = f2.zero();
        // x^2 + x + 1
        assert!(DensePoly::new(vec![one, one, one]).is_irreducible(&f2));
        // x^2 + 1 = (x + 1)^2
        let p = DensePoly::new(vec![one, z, one]);
        assert_eq!(p.smallest_factor_degree(&f2), Some(1));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        let p = DensePoly::new(vec![one, z, one, z, one]);
        assert_eq!(p.smallest_factor_degree(&f2), Some(2));
    }

    #[test]
    fn derivative_in_char_two() {
        let f2 = FieldCtx::prime(2).unwrap();
        let one = f2.one();
        let z = f2.zero();
        // d/ds (s^3 + s + 1) = s^2 + 1
        let f = DensePoly::new(vec![one, one, z, one]);
        assert_eq!(f.derivative(&f2), DensePoly::new(vec![one, z, one]));
    }
}
