//! Fractions of [`MPoly`]s.
//!
//! Normalization is partial: a common monomial factor is removed, a univariate
//! gcd is cancelled when numerator and denominator share their only variable,
//! and the denominator is made monic. Equality never relies on it; it is
//! decided by cross-multiplication.

use std::fmt;

use super::{MPoly, PolyError};
use crate::fields::Field;

#[derive(Clone)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value() == Some(self.den.ctx().one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl From<MPoly> for RatFun {
    fn from(num: MPoly) -> Self {
        let den = MPoly::one(num.ctx());
        RatFun { num, den }
    }
}

impl RatFun {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        num.checked_add(&MPoly::zero(den.ctx()))?;
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MPoly, den: MPoly) -> Self {
        let ctx = den.ctx().clone();
        if num.is_zero() {
            return RatFun {
                num,
                den: MPoly::one(&ctx),
            };
        }
        let content = num.monomial_content().gcd(&den.monomial_content());
        let (mut num, mut den) = if content.is_one() {
            (num, den)
        } else {
            (num.div_monomial(&content), den.div_monomial(&content))
        };
        if let (Ok(Some(a)), Ok(Some(b))) = (num.univariate_var(), den.univariate_var()) {
            if a == b {
                let (dn, dd) = (num.to_dense(a).unwrap(), den.to_dense(a).unwrap());
                let g = dn.gcd(&dd, &ctx);
                if g.degree().unwrap_or(0) > 0 {
                    num = MPoly::from_dense(&ctx, a, &dn.div_rem(&g, &ctx).0);
                    den = MPoly::from_dense(&ctx, a, &dd.div_rem(&g, &ctx).0);
                }
            }
        }
        let (_, lc) = den.leading_term().expect("nonzero denominator");
        if lc != ctx.one() {
            let inv = ctx.inv(lc).expect("nonzero");
            num = num.scale(inv);
            den = den.scale(inv);
        }
        RatFun { num, den }
    }

    pub fn zero(ctx: &Field) -> Self {
        MPoly::zero(ctx).into()
    }

    pub fn one(ctx: &Field) -> Self {
        MPoly::one(ctx).into()
    }

    pub fn ctx(&self) -> &Field {
        self.num.ctx()
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is a constant.
    pub fn as_poly(&self) -> Option<MPoly> {
        let c = self.den.constant_value()?;
        let inv = self.ctx().inv(c).ok()?;
        Some(self.num.scale(inv))
    }

    /// Cross-multiplied equality `a d - b c = 0`.
    pub fn equals(&self, other: &Self) -> Result<bool, PolyError> {
        Ok(self.cross_difference(other)?.is_zero())
    }

    /// `a d - b c` for `self = a/b`, `other = c/d`; the witness of inequality.
    pub fn cross_difference(&self, other: &Self) -> Result<MPoly, PolyError> {
        self.num
            .checked_mul(&other.den)?
            .checked_sub(&self.den.checked_mul(&other.num)?)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.den == other.den {
            return Ok(Self::normalized(
                self.num.checked_add(&other.num)?,
                self.den.clone(),
            ));
        }
        let num = self
            .num
            .checked_mul(&other.den)?
            .checked_add(&self.den.checked_mul(&other.num)?)?;
        Ok(Self::normalized(num, self.den.checked_mul(&other.den)?))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        Ok(Self::normalized(
            self.num.checked_mul(&other.num)?,
            self.den.checked_mul(&other.den)?,
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::normalized(
            self.num.checked_mul(&other.den)?,
            self.den.checked_mul(&other.num)?,
        ))
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                self.$checked(rhs).expect("incompatible rational functions")
            }
        }
        impl std::ops::$trait<RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self)
                    .$checked(&rhs)
                    .expect("incompatible rational functions")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldCtx;

    #[test]
    fn cross_multiplied_equality() {
        let f3 = FieldCtx::prime(3).unwrap();
        let a = RatFun::parse(&f3, "(X^2 - 1)/(X - 1)").unwrap();
        let b = RatFun::parse(&f3, "X + 1").unwrap();
        assert!(a.equals(&b).unwrap());
        // univariate gcd cancelled
        assert_eq!(a.den().constant_value(), Some(f3.one()));
    }

    #[test]
    fn arithmetic_round_trip() {
        let f2 = FieldCtx::prime(2).unwrap();
        let a = RatFun::parse(&f2, "T/(T + 1)").unwrap();
        let b = RatFun::parse(&f2, "X/(T*Y)").unwrap();
        let s = &(&a + &b) - &b;
        assert!(s.equals(&a).unwrap());
        let q = &(&a * &b) / &b;
        assert!(q.equals(&a).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        let f2 = FieldCtx::prime(2).unwrap();
        let err = RatFun::new(MPoly::one(&f2), MPoly::zero(&f2)).unwrap_err();
        assert_eq!(err, PolyError::DivisionByZero);
    }
}
