//! Sparse multivariate polynomials over a finite field.
//!
//! Variables come from a fixed alphabet ([`Var`]), so exponent vectors have a
//! fixed width and unifying two polynomials' variable lists is free. Terms are
//! kept sorted in graded-lexicographic order with no zero coefficients, which
//! makes the representation canonical: equal polynomials have identical term
//! vectors.

mod grammar;
mod ops;
mod ratfun;

use std::cmp::Ordering;
use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::dense::DensePoly;
use crate::fields::{Field, FieldCtx, FieldElem, FieldError};

pub use grammar::format_elem;
pub use ops::{distinct_roots, factor_univariate, Residue, Root};
pub use ratfun::RatFun;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live over different fields ({0} vs {1})")]
    ContextMismatch(String, String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not monic in {0}")]
    NotMonic(Var),
    #[error("expected a univariate polynomial, found variables {0:?}")]
    NotUnivariate(Vec<Var>),
    #[error("the zero polynomial has no root set")]
    ZeroPolynomial,
    #[error("denominator {denominator} vanishes modulo {modulus}")]
    DenominatorVanishes {
        denominator: String,
        modulus: String,
    },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeGuard { degree: usize, limit: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub const NVARS: usize = 12;

/// The variable alphabet, in term-order priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    S,
    LowerT,
    U,
    U0,
    U1,
    V0,
    LowerX,
    X,
    Y,
    Z,
    Xi,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::T,
        Var::S,
        Var::LowerT,
        Var::U,
        Var::U0,
        Var::U1,
        Var::V0,
        Var::LowerX,
        Var::X,
        Var::Y,
        Var::Z,
        Var::Xi,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "T",
            Var::S => "s",
            Var::LowerT => "t",
            Var::U => "u",
            Var::U0 => "u0",
            Var::U1 => "u1",
            Var::V0 => "v0",
            Var::LowerX => "x",
            Var::X => "X",
            Var::Y => "Y",
            Var::Z => "Z",
            Var::Xi => "xi",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by [`Var::index`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: u16) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn exps(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = [0; NVARS];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = self.0[i]
                .checked_add(other.0[i])
                .expect("exponent overflow");
        }
        Monomial(m)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming [`Monomial::divides`].
    pub fn quotient_of(&self, other: &Self) -> Self {
        let mut m = [0; NVARS];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = other.0[i] - self.0[i];
        }
        Monomial(m)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = [0; NVARS];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = self.0[i].min(other.0[i]);
        }
        Monomial(m)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the earlier variable in
    /// [`Var::ALL`] with the larger exponent wins.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct MPoly {
    ctx: Field,
    /// Ascending in the term order, no zero coefficients.
    terms: Vec<(Monomial, FieldElem)>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.ctx, self)
    }
}

fn check_ctx(a: &FieldCtx, b: &FieldCtx) -> Result<(), PolyError> {
    if a == b {
        Ok(())
    } else {
        Err(PolyError::ContextMismatch(
            format!("{a:?}"),
            format!("{b:?}"),
        ))
    }
}

impl MPoly {
    pub fn zero(ctx: &Field) -> Self {
        MPoly {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Field) -> Self {
        Self::constant(ctx, ctx.one())
    }

    pub fn constant(ctx: &Field, c: FieldElem) -> Self {
        Self::monomial(ctx, Monomial::ONE, c)
    }

    pub fn from_int(ctx: &Field, n: i64) -> Self {
        Self::constant(ctx, ctx.from_int(n))
    }

    pub fn var(ctx: &Field, v: Var) -> Self {
        Self::monomial(ctx, Monomial::var(v, 1), ctx.one())
    }

    pub fn monomial(ctx: &Field, m: Monomial, c: FieldElem) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        MPoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Collect arbitrary (possibly repeated) terms into canonical form.
    pub fn from_terms(ctx: &Field, terms: impl IntoIterator<Item = (Monomial, FieldElem)>) -> Self {
        let mut acc: FxHashMap<Monomial, FieldElem> = FxHashMap::default();
        for (m, c) in terms {
            let slot = acc.entry(m).or_insert(FieldElem::ZERO);
            *slot = ctx.add(*slot, c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        MPoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Univariate polynomial in `v` from dense little-endian coefficients.
    pub fn from_dense(ctx: &Field, v: Var, d: &DensePoly) -> Self {
        let terms = d
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (Monomial::var(v, i as u16), c));
        MPoly {
            ctx: ctx.clone(),
            terms: terms.collect(),
        }
    }

    pub fn ctx(&self) -> &Field {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<FieldElem> {
        match self.terms.as_slice() {
            [] => Some(FieldElem::ZERO),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(m))
            .map(|i| self.terms[i].1)
            .unwrap_or(FieldElem::ZERO)
    }

    pub fn leading_term(&self) -> Option<(Monomial, FieldElem)> {
        self.terms.last().copied()
    }

    pub fn degree_in(&self, v: Var) -> usize {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(v) as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Variables that actually occur, in alphabet order.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.iter().any(|(m, _)| m.exp(v) > 0))
            .collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        check_ctx(&self.ctx, &other.ctx)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        check_ctx(&self.ctx, &other.ctx)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let ctx = &self.ctx;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: FieldElem| if negate { ctx.neg(c) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = self.terms[i];
            let (mb, cb) = other.terms[j];
            match ma.cmp(&mb) {
                Ordering::Less => {
                    out.push((ma, ca));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((mb, fix(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ctx.add(ca, fix(cb));
                    if !c.is_zero() {
                        out.push((ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|&(m, c)| (m, fix(c))));
        MPoly {
            ctx: ctx.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        MPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|&(m, c)| (m, self.ctx.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        MPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|&(m, a)| (m, self.ctx.mul(a, c)))
                .collect(),
        }
    }

    /// Multiply by a single term; the term order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        MPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (t.mul(m), self.ctx.mul(a, c)))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        check_ctx(&self.ctx, &other.ctx)?;
        if self.terms.len() == 1 {
            let (m, c) = self.terms[0];
            return Ok(other.mul_term(&m, c));
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            return Ok(self.mul_term(&m, c));
        }
        let ctx = &self.ctx;
        let mut acc: FxHashMap<Monomial, FieldElem> = FxHashMap::default();
        acc.reserve(self.terms.len() * 2 + other.terms.len() * 2);
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let slot = acc.entry(ma.mul(&mb)).or_insert(FieldElem::ZERO);
                *slot = ctx.add(*slot, ctx.mul(ca, cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        Ok(MPoly {
            ctx: ctx.clone(),
            terms,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `a / b`: `Ok(Some(q))` with `a = b q`, `Ok(None)` when
    /// `b` does not divide `a`.
    pub fn exact_divide(&self, b: &Self) -> Result<Option<Self>, PolyError> {
        check_ctx(&self.ctx, &b.ctx)?;
        let (lm, lc) = b.leading_term().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = self.ctx.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = lm.quotient_of(&m);
            let qc = self.ctx.mul(c, lc_inv);
            rem = rem.merge(&b.mul_term(&qm, qc), true);
            quot.push((qm, qc));
        }
        Ok(Some(MPoly::from_terms(&self.ctx, quot)))
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Self {
        let ctx = &self.ctx;
        let terms = self.terms.iter().filter_map(|&(m, c)| {
            let e = m.exp(v);
            if e == 0 {
                return None;
            }
            let c = ctx.mul(c, ctx.from_int(e as i64));
            (!c.is_zero()).then(|| (m.with_exp(v, e - 1), c))
        });
        MPoly::from_terms(ctx, terms)
    }

    /// Replace `v` by the field element `a`.
    pub fn specialize(&self, v: Var, a: FieldElem) -> Self {
        let ctx = &self.ctx;
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| (m.with_exp(v, 0), ctx.mul(c, ctx.pow(a, m.exp(v) as u64))));
        MPoly::from_terms(ctx, terms)
    }

    /// Evaluate with every occurring variable bound; unbound variables are an
    /// error reported as the offending variable list.
    pub fn eval(&self, values: &[(Var, FieldElem)]) -> Result<FieldElem, PolyError> {
        let ctx = &self.ctx;
        let mut acc = FieldElem::ZERO;
        for &(m, c) in &self.terms {
            let mut t = c;
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let x = values
                    .iter()
                    .find(|(w, _)| *w == v)
                    .map(|(_, x)| *x)
                    .ok_or_else(|| PolyError::NotUnivariate(vec![v]))?;
                t = ctx.mul(t, ctx.pow(x, e as u64));
            }
            acc = ctx.add(acc, t);
        }
        Ok(acc)
    }

    /// Coefficients with respect to `v`: entry `i` multiplies `v^i`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let n = self.degree_in(v);
        let mut buckets: Vec<Vec<(Monomial, FieldElem)>> = vec![Vec::new(); n + 1];
        for &(m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.with_exp(v, 0), c));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_unstable_by_key(|a| a.0);
                MPoly {
                    ctx: self.ctx.clone(),
                    terms: t,
                }
            })
            .collect()
    }

    /// Dense form in `v`, if no other variable occurs.
    pub fn to_dense(&self, v: Var) -> Result<DensePoly, PolyError> {
        let others: Vec<Var> = self.vars().into_iter().filter(|&w| w != v).collect();
        if !others.is_empty() {
            return Err(PolyError::NotUnivariate(self.vars()));
        }
        let mut coeffs = vec![FieldElem::ZERO; self.degree_in(v) + 1];
        for &(m, c) in &self.terms {
            coeffs[m.exp(v) as usize] = c;
        }
        Ok(DensePoly::new(coeffs))
    }

    /// The single occurring variable, `None` for constants.
    pub fn univariate_var(&self) -> Result<Option<Var>, PolyError> {
        match self.vars().as_slice() {
            [] => Ok(None),
            [v] => Ok(Some(*v)),
            vs => Err(PolyError::NotUnivariate(vs.to_vec())),
        }
    }

    /// Rename variables; `map` must be injective on the occurring variables.
    pub fn rename(&self, map: &[(Var, Var)]) -> Self {
        let terms = self.terms.iter().map(|&(m, c)| {
            let mut out = Monomial::ONE;
            for v in Var::ALL {
                let target = map
                    .iter()
                    .find(|(a, _)| *a == v)
                    .map(|(_, b)| *b)
                    .unwrap_or(v);
                out.0[target.index()] += m.exp(v);
            }
            (out, c)
        });
        MPoly::from_terms(&self.ctx, terms)
    }

    pub fn swap(&self, a: Var, b: Var) -> Self {
        self.rename(&[(a, b), (b, a)])
    }

    /// Move every coefficient into `target` through `f`.
    pub fn map_coeffs(
        &self,
        target: &Field,
        mut f: impl FnMut(FieldElem) -> Result<FieldElem, FieldError>,
    ) -> Result<Self, PolyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            terms.push((m, f(c)?));
        }
        Ok(MPoly::from_terms(target, terms))
    }

    /// Coefficient-wise embedding into a field that extends this one.
    pub fn lift_to(&self, target: &Field) -> Result<Self, PolyError> {
        let src = self.ctx.clone();
        self.map_coeffs(target, |c| target.lift(&src, c))
    }

    /// Divide by the leading coefficient.
    pub fn make_monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.ctx.inv(c).expect("nonzero")),
        }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some(&(first, _)) => it.fold(first, |acc, (m, _)| acc.gcd(m)),
        }
    }

    /// Divide every term by a monomial that divides all of them.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        MPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|&(t, c)| (m.quotient_of(&t), c))
                .collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$checked(rhs).expect("field context mismatch")
            }
        }
        impl std::ops::$trait<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$checked(&rhs).expect("field context mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(self)
    }
}

impl std::ops::Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(&self)
    }
}
