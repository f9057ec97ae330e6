//! Finite fields `F_{p^k}`.
//!
//! Every field is modelled over its prime field as `F_p[g]/(m(g))` with a
//! monic irreducible modulus `m` of degree `k`. An element is stored as the
//! integer `sum d_i p^i` of its little-endian digit vector, so elements are
//! plain `Copy` handles and all arithmetic goes through the owning context.
//! Subfield relations are recorded as an [`Embedding`]: the image of the
//! parent generator inside the child model.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dense::DensePoly;

/// Shared handle to an immutable field context.
pub type Field = Arc<FieldCtx>;

/// Fields at most this large get exp/log multiplication tables.
const TABLE_LIMIT: u64 = 1 << 16;

/// Upper bound for exhaustive scans over a field.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is outside the supported range (p <= 2^31)")]
    CharacteristicTooLarge(u64),
    #[error("modulus is not monic of positive degree")]
    NotMonic,
    #[error("modulus is reducible: it has an irreducible factor of degree {factor_degree}")]
    Reducible { factor_degree: usize },
    #[error("field of size {size} exceeds the limit {limit}")]
    TooLarge { size: u128, limit: u64 },
    #[error("field context mismatch: {0}")]
    ContextMismatch(String),
    #[error("zero has no inverse")]
    DivisionByZero,
}

/// An element of some [`FieldCtx`], encoded as the base-`p` integer of its
/// coefficient vector. Ordering is numeric on that encoding, so `0 < 1 < g`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    pub fn index(self) -> u64 {
        self.0
    }

    pub fn from_index(i: u64) -> Self {
        FieldElem(i)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug)]
pub struct Embedding {
    parent: Field,
    /// Image of the parent's generator.
    image: FieldElem,
}

impl Embedding {
    pub fn parent(&self) -> &Field {
        &self.parent
    }

    pub fn image(&self) -> FieldElem {
        self.image
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Serialized form of a context: `{p, k, modulus}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub k: usize,
    pub modulus: Vec<u64>,
}

pub struct FieldCtx {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
    size: u64,
    pow_p: Vec<u64>,
    tables: Option<Tables>,
    parent: Option<Embedding>,
    adjoined: Option<FieldElem>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.p, self.k, self.modulus)
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}", self.size)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// The prime field `F_p`, modelled with modulus `g`.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p > 1 << 31 {
            return Err(FieldError::CharacteristicTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Arc::new(Self::build(p, vec![0, 1], None, None)?))
    }

    fn build(
        p: u64,
        modulus: Vec<u64>,
        parent: Option<Embedding>,
        adjoined: Option<FieldElem>,
    ) -> Result<Self, FieldError> {
        let k = modulus.len() - 1;
        let size = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if size > u64::MAX as u128 / 2 {
            return Err(FieldError::TooLarge {
                size,
                limit: u64::MAX / 2,
            });
        }
        let pow_p = (0..=k).map(|i| p.pow(i as u32)).collect();
        let mut ctx = FieldCtx {
            p,
            k,
            modulus,
            size: size as u64,
            pow_p,
            tables: None,
            parent,
            adjoined,
        };
        if k > 1 && ctx.size <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    fn build_tables(&self) -> Tables {
        let order = self.size - 1;
        let factors = prime_factors(order);
        let one = FieldElem(1);
        let primitive = (2..self.size)
            .map(FieldElem)
            .find(|&x| factors.iter().all(|&r| self.pow_slow(x, order / r) != one))
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; self.size as usize];
        let mut cur = one;
        for i in 0..order {
            exp.push(cur.0 as u32);
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow(cur, primitive);
        }
        Tables { exp, log }
    }

    /// A prime-field model from an explicit modulus over `F_p`.
    fn from_prime_modulus(p: u64, modulus: Vec<u64>) -> Result<Field, FieldError> {
        let fp = Self::prime(p)?;
        let poly = DensePoly::new(modulus.iter().map(|&c| fp.from_int(c as i64)).collect());
        if poly.degree().unwrap_or(0) == 0 || !poly.is_monic(&fp) {
            return Err(FieldError::NotMonic);
        }
        if let Some(d) = poly.smallest_factor_degree(&fp) {
            return Err(FieldError::Reducible { factor_degree: d });
        }
        Ok(Arc::new(Self::build(p, modulus, None, None)?))
    }

    /// Adjoin a root of `modulus` (dense, little-endian, over `base`).
    ///
    /// The result is flattened to a single extension of the prime field with a
    /// stored embedding of `base`; the adjoined root is [`FieldCtx::adjoined`].
    pub fn extend(base: &Field, modulus: &DensePoly) -> Result<Field, FieldError> {
        let deg = match modulus.degree() {
            Some(d) if d >= 1 && modulus.is_monic(base) => d,
            _ => return Err(FieldError::NotMonic),
        };
        if let Some(d) = modulus.smallest_factor_degree(base) {
            return Err(FieldError::Reducible { factor_degree: d });
        }
        let identity = Embedding {
            parent: base.clone(),
            image: base.generator(),
        };
        if deg == 1 {
            let root = base.neg(modulus.coeff(0));
            let ctx = Self::build(base.p, base.modulus.clone(), Some(identity), Some(root))?;
            return Ok(Arc::new(ctx));
        }
        if base.k == 1 {
            let m: Vec<u64> = modulus.coeffs().iter().map(|c| c.0).collect();
            let probe = Self::build(base.p, m.clone(), None, None)?;
            let g = probe.generator();
            let ctx = Self::build(base.p, m, Some(identity), Some(g))?;
            return Ok(Arc::new(ctx));
        }
        let fp = Self::prime(base.p)?;
        let flat_mod = find_irreducible(&fp, base.k * deg);
        let model = Self::build(
            base.p,
            flat_mod.coeffs().iter().map(|c| c.0).collect(),
            None,
            None,
        )?;
        let image = model.smallest_root_of_modulus(base)?;
        let emb = Embedding {
            parent: base.clone(),
            image,
        };
        let lifted = modulus.map(|c| model.apply_embedding(&emb, c));
        let alpha = model
            .elements()?
            .find(|&x| lifted.eval(x, &model).is_zero())
            .expect("irreducible modulus splits in the extension of matching degree");
        let mut ctx = model;
        ctx.parent = Some(emb);
        ctx.adjoined = Some(alpha);
        Ok(Arc::new(ctx))
    }

    /// The extension of twice the degree, modulus chosen by
    /// [`find_irreducible`] over the prime field, embedding `ctx` through the
    /// smallest root of its modulus.
    pub fn quadratic_extension(ctx: &Field) -> Result<Field, FieldError> {
        let fp = Self::prime(ctx.p)?;
        let m = find_irreducible(&fp, 2 * ctx.k);
        let mut model = Self::build(ctx.p, m.coeffs().iter().map(|c| c.0).collect(), None, None)?;
        let image = model.smallest_root_of_modulus(ctx)?;
        model.parent = Some(Embedding {
            parent: ctx.clone(),
            image,
        });
        Ok(Arc::new(model))
    }

    fn smallest_root_of_modulus(&self, sub: &FieldCtx) -> Result<FieldElem, FieldError> {
        if self.p != sub.p || !self.k.is_multiple_of(sub.k) {
            return Err(FieldError::ContextMismatch(format!(
                "{sub} does not embed in {self}"
            )));
        }
        let m = DensePoly::new(sub.modulus.iter().map(|&c| FieldElem(c)).collect());
        self.elements()?
            .find(|&x| m.eval(x, self).is_zero())
            .ok_or_else(|| FieldError::ContextMismatch(format!("{sub} does not embed in {self}")))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn parent(&self) -> Option<&Embedding> {
        self.parent.as_ref()
    }

    /// The distinguished root adjoined by [`FieldCtx::extend`].
    pub fn adjoined(&self) -> Option<FieldElem> {
        self.adjoined
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
        }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The class of `g`. In a prime field this is the root of the modulus `g`,
    /// i.e. zero.
    pub fn generator(&self) -> FieldElem {
        if self.k == 1 {
            FieldElem(0)
        } else {
            FieldElem(self.p)
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.p as i64) as u64)
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        x.0 < self.size
    }

    /// Little-endian coefficient vector of length `k`.
    pub fn coeffs(&self, x: FieldElem) -> Vec<u64> {
        let mut v = x.0;
        (0..self.k)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, digits: &[u64]) -> Result<FieldElem, FieldError> {
        if digits.len() > self.k || digits.iter().any(|&d| d >= self.p) {
            return Err(FieldError::ContextMismatch(format!(
                "coefficient vector {digits:?} is not an element of {self}"
            )));
        }
        Ok(FieldElem(
            digits.iter().rev().fold(0, |acc, &d| acc * self.p + d),
        ))
    }

    /// Whether `x` lies in the prime subfield.
    pub fn is_prime_subfield(&self, x: FieldElem) -> bool {
        x.0 < self.p
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        if self.k == 1 {
            return FieldElem((a.0 + b.0) % self.p);
        }
        let (mut x, mut y, mut out) = (a.0, b.0, 0u64);
        for i in 0..self.k {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * self.pow_p[i];
            x /= self.p;
            y /= self.p;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0u64;
        for i in 0..self.k {
            let d = x % self.p;
            out += ((self.p - d) % self.p) * self.pow_p[i];
            x /= self.p;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        if self.k == 1 {
            return FieldElem(((a.0 as u128 * b.0 as u128) % self.p as u128) as u64);
        }
        match &self.tables {
            Some(t) => {
                let order = (self.size - 1) as usize;
                let mut e = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                if e >= order {
                    e -= order;
                }
                FieldElem(t.exp[e] as u64)
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let da = self.coeffs(a);
        let db = self.coeffs(b);
        let p = self.p as u128;
        let mut prod = vec![0u128; 2 * self.k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        for i in (self.k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..self.k {
                let m = self.modulus[j] as u128;
                prod[i - self.k + j] = (prod[i - self.k + j] + (p - c) * m) % p;
            }
        }
        let digits: Vec<u64> = prod[..self.k].iter().map(|&d| d as u64).collect();
        FieldElem(digits.iter().rev().fold(0, |acc, &d| acc * self.p + d))
    }

    fn pow_slow(&self, x: FieldElem, mut e: u64) -> FieldElem {
        let mut base = x;
        let mut acc = FieldElem(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, x: FieldElem, mut e: u64) -> FieldElem {
        if let (Some(t), false) = (&self.tables, x.is_zero()) {
            let order = self.size - 1;
            let l = (t.log[x.0 as usize] as u128 * (e % order) as u128) % order as u128;
            return FieldElem(t.exp[l as usize] as u64);
        }
        let mut base = x;
        let mut acc = FieldElem(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElem) -> Result<FieldElem, FieldError> {
        if x.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(t) = &self.tables {
            let order = (self.size - 1) as usize;
            let l = t.log[x.0 as usize] as usize;
            return Ok(FieldElem(t.exp[(order - l) % order] as u64));
        }
        Ok(self.pow(x, self.size - 2))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^q` with `q = |ctx_of_q|`, for `ctx_of_q` a subfield of `self`.
    pub fn frobenius(&self, x: FieldElem, ctx_of_q: &FieldCtx) -> Result<FieldElem, FieldError> {
        if ctx_of_q.p != self.p || !self.k.is_multiple_of(ctx_of_q.k) {
            return Err(FieldError::ContextMismatch(format!(
                "{ctx_of_q} is not a subfield of {self}"
            )));
        }
        if !self.contains(x) {
            return Err(FieldError::ContextMismatch(format!(
                "element outside {self}"
            )));
        }
        Ok(self.pow(x, ctx_of_q.size))
    }

    /// All elements in increasing [`FieldElem`] order.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElem>, FieldError> {
        if self.size > ENUMERATION_LIMIT {
            return Err(FieldError::TooLarge {
                size: self.size as u128,
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok((0..self.size).map(FieldElem))
    }

    pub fn enumerate(&self) -> Result<Vec<FieldElem>, FieldError> {
        Ok(self.elements()?.collect())
    }

    fn apply_embedding(&self, emb: &Embedding, y: FieldElem) -> FieldElem {
        emb.parent
            .coeffs(y)
            .iter()
            .rev()
            .fold(FieldElem(0), |acc, &d| {
                self.add(self.mul(acc, emb.image), FieldElem(d))
            })
    }

    /// Map `x` from `src` into `self`, following the chain of stored
    /// embeddings. Prime fields embed everywhere of the same characteristic.
    pub fn lift(&self, src: &FieldCtx, x: FieldElem) -> Result<FieldElem, FieldError> {
        if src == self {
            return Ok(x);
        }
        if src.k == 1 && src.p == self.p {
            return Ok(x);
        }
        match &self.parent {
            Some(emb) => {
                let y = emb.parent.lift(src, x)?;
                Ok(self.apply_embedding(emb, y))
            }
            None => Err(FieldError::ContextMismatch(format!(
                "no embedding of {src} into {self}"
            ))),
        }
    }

    /// Whether [`FieldCtx::lift`] from `src` succeeds.
    pub fn embeds(&self, src: &FieldCtx) -> bool {
        src == self
            || (src.k == 1 && src.p == self.p)
            || self.parent.as_ref().is_some_and(|e| e.parent.embeds(src))
    }

    /// Smallest `j >= 1` with `x^{q^j} = x`: the degree of `x` over `F_q`.
    pub fn degree_over(&self, x: FieldElem, ctx_of_q: &FieldCtx) -> Result<usize, FieldError> {
        let mut y = self.frobenius(x, ctx_of_q)?;
        let mut j = 1;
        while y != x {
            y = self.frobenius(y, ctx_of_q)?;
            j += 1;
        }
        Ok(j)
    }
}

/// Lexicographically smallest monic irreducible polynomial of the given
/// degree over `ctx`: coefficient vectors `(c_0, ..., c_{n-1})` are scanned in
/// increasing order of `sum index(c_i) * |ctx|^i`.
pub fn find_irreducible(ctx: &FieldCtx, degree: usize) -> DensePoly {
    assert!(degree >= 1, "degree must be positive");
    let q = ctx.size();
    let mut counter = vec![0u64; degree];
    loop {
        let mut coeffs: Vec<FieldElem> = counter.iter().map(|&c| FieldElem(c)).collect();
        coeffs.push(ctx.one());
        let f = DensePoly::new(coeffs);
        if f.is_irreducible(ctx) {
            return f;
        }
        // increment, least significant first
        let mut i = 0;
        loop {
            counter[i] += 1;
            if counter[i] < q {
                break;
            }
            counter[i] = 0;
            i += 1;
            assert!(i < degree, "irreducible polynomials exist in every degree");
        }
    }
}

/// Monic irreducible polynomials of the given degree in increasing order.
pub fn monic_irreducibles(ctx: &FieldCtx, degree: usize) -> Vec<DensePoly> {
    let q = ctx.size();
    let total = (q as u128).pow(degree as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut v = idx;
        let mut coeffs: Vec<FieldElem> = (0..degree)
            .map(|_| {
                let c = FieldElem((v % q as u128) as u64);
                v /= q as u128;
                c
            })
            .collect();
        coeffs.push(ctx.one());
        let f = DensePoly::new(coeffs);
        if f.is_irreducible(ctx) {
            out.push(f);
        }
    }
    out
}

/// `F_q` for a prime power `q`, built from the smallest irreducible modulus.
pub fn base_field(q: u64) -> Result<Field, FieldError> {
    let (p, m) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
    let fp = FieldCtx::prime(p)?;
    if m == 1 {
        return Ok(fp);
    }
    let modulus = find_irreducible(&fp, m as usize);
    FieldCtx::from_prime_modulus(p, modulus.coeffs().iter().map(|c| c.index()).collect())
}

/// Decompose `q = p^m` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = prime_factors(q)[0];
    let mut m = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(ctx: &FieldCtx, c: &[i64]) -> DensePoly {
        DensePoly::new(c.iter().map(|&x| ctx.from_int(x)).collect())
    }

    #[test]
    fn prime_field_construction() {
        assert_eq!(FieldCtx::prime(2).unwrap().size(), 2);
        assert_eq!(FieldCtx::prime(3).unwrap().degree(), 1);
        assert_eq!(FieldCtx::prime(4).unwrap_err(), FieldError::NotPrime(4));
        assert!(FieldCtx::prime(2_147_483_647).is_ok());
    }

    #[test]
    fn extend_f2_by_t2_t_1() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f4 = FieldCtx::extend(&f2, &poly(&f2, &[1, 1, 1])).unwrap();
        assert_eq!(f4.size(), 4);
        let a = f4.adjoined().unwrap();
        let lhs = f4.add(f4.add(f4.mul(a, a), a), f4.one());
        assert!(lhs.is_zero());
    }

    #[test]
    fn extend_by_linear_modulus() {
        let f2 = FieldCtx::prime(2).unwrap();
        let fl = FieldCtx::extend(&f2, &poly(&f2, &[1, 1])).unwrap();
        assert_eq!(fl.size(), 2);
        assert_eq!(fl.adjoined(), Some(fl.one()));
    }

    #[test]
    fn extend_rejects_reducible() {
        let f2 = FieldCtx::prime(2).unwrap();
        let err = FieldCtx::extend(&f2, &poly(&f2, &[1, 0, 1])).unwrap_err();
        assert_eq!(err, FieldError::Reducible { factor_degree: 1 });
    }

    #[test]
    fn quadratic_extensions() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f3 = FieldCtx::prime(3).unwrap();
        let f4 = FieldCtx::extend(&f2, &poly(&f2, &[1, 1, 1])).unwrap();
        assert_eq!(FieldCtx::quadratic_extension(&f2).unwrap().size(), 4);
        assert_eq!(FieldCtx::quadratic_extension(&f3).unwrap().size(), 9);
        let f16 = FieldCtx::quadratic_extension(&f4).unwrap();
        assert_eq!(f16.size(), 16);
        // the embedding is a ring homomorphism on all of F_4
        for x in f4.elements().unwrap() {
            for y in f4.elements().unwrap() {
                let s = f16.lift(&f4, f4.add(x, y)).unwrap();
                let m = f16.lift(&f4, f4.mul(x, y)).unwrap();
                let (lx, ly) = (f16.lift(&f4, x).unwrap(), f16.lift(&f4, y).unwrap());
                assert_eq!(s, f16.add(lx, ly));
                assert_eq!(m, f16.mul(lx, ly));
            }
        }
        assert_eq!(f16.lift(&f4, f4.one()).unwrap(), f16.one());
    }

    #[test]
    fn find_irreducible_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(find_irreducible(&f2, 2), poly(&f2, &[1, 1, 1]));
        assert_eq!(find_irreducible(&f2, 1), poly(&f2, &[0, 1]));
        assert_eq!(find_irreducible(&f3, 2), poly(&f3, &[1, 0, 1]));
    }

    #[test]
    fn find_irreducible_matches_brute_force_over_f3() {
        // Oracle: a monic quadratic/cubic is irreducible iff it has no root.
        let f3 = FieldCtx::prime(3).unwrap();
        for deg in 2..=3usize {
            let found = find_irreducible(&f3, deg);
            let mut first = None;
            for idx in 0..3u64.pow(deg as u32) {
                let mut c: Vec<i64> = (0..deg)
                    .map(|i| ((idx / 3u64.pow(i as u32)) % 3) as i64)
                    .collect();
                c.push(1);
                let f = poly(&f3, &c);
                if (0..3).all(|x| !f.eval(f3.from_int(x), &f3).is_zero()) {
                    first = Some(f);
                    break;
                }
            }
            assert_eq!(Some(found), first);
        }
    }

    #[test]
    fn enumeration_order() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(f2.enumerate().unwrap(), vec![FieldElem(0), FieldElem(1)]);
        let f16 =
            FieldCtx::quadratic_extension(&FieldCtx::quadratic_extension(&f2).unwrap()).unwrap();
        let all = f16.enumerate().unwrap();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], f16.zero());
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 16);
    }

    #[test]
    fn frobenius_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f4 = FieldCtx::extend(&f2, &poly(&f2, &[1, 1, 1])).unwrap();
        let a = f4.adjoined().unwrap();
        assert_eq!(f4.frobenius(a, &f2).unwrap(), f4.add(a, f4.one()));
        assert_eq!(f4.frobenius(f4.one(), &f2).unwrap(), f4.one());
        let f3 = FieldCtx::prime(3).unwrap();
        assert!(f4.frobenius(a, &f3).is_err());
    }

    #[test]
    fn coefficient_vectors() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f4 = FieldCtx::extend(&f2, &poly(&f2, &[1, 1, 1])).unwrap();
        let a = f4.adjoined().unwrap();
        assert_eq!(f4.coeffs(f4.add(a, f4.one())), vec![1, 1]);
        assert_eq!(f4.from_coeffs(&[1, 1]).unwrap(), f4.add(a, f4.one()));
    }

    #[test]
    fn flattened_extension_over_f4() {
        let f4 = base_field(4).unwrap();
        // T^2 + T + g is irreducible over F_4
        let l = DensePoly::new(vec![f4.generator(), f4.one(), f4.one()]);
        let fl = FieldCtx::extend(&f4, &l).unwrap();
        assert_eq!(fl.size(), 16);
        let a = fl.adjoined().unwrap();
        let lifted = l.map(|c| fl.lift(&f4, c).unwrap());
        assert!(lifted.eval(a, &fl).is_zero());
    }

    #[test]
    fn prime_power_decomposition() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }
}
