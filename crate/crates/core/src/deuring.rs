//! The Deuring-analogue polynomials `p_i(s)` over `F_q(T)`.
//!
//! Every `p_i` is a polynomial in `s` whose coefficients are polynomials in
//! `1/T`, so it is stored as `N(s, T) / T^D` with `N` a polynomial. The
//! two-term recursion defines the family; the one-term recursion, the
//! key substitution identity and the reductions modulo primes are checked
//! against it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{find_irreducible, Field, FieldCtx, FieldDescriptor, FieldElem};
use crate::polys::{distinct_roots, MPoly, Monomial, RatFun, Root, Var};
use crate::primes::Prime;

/// Largest admissible `deg_s p_i`.
pub const DEGREE_LIMIT: u64 = 1 << 14;

/// `N / T^den_t`, with `T` not dividing `N` unless `den_t = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeuringPoly {
    num: MPoly,
    den_t: u32,
}

impl DeuringPoly {
    fn new(num: MPoly, den_t: u32) -> Self {
        let content = num.monomial_content().exp(Var::T) as u32;
        let strip = if num.is_zero() {
            den_t
        } else {
            content.min(den_t)
        };
        let num = if strip > 0 {
            num.div_monomial(&Monomial::var(Var::T, strip as u16))
        } else {
            num
        };
        DeuringPoly {
            num,
            den_t: den_t - strip,
        }
    }

    fn shifted(&self, den: u32) -> MPoly {
        self.num.mul_term(
            &Monomial::var(Var::T, (den - self.den_t) as u16),
            self.num.ctx().one(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        let d = self.den_t.max(other.den_t);
        Self::new(&self.shifted(d) - &other.shifted(d), d)
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    /// Exponent `D` of the denominator `T^D`.
    pub fn t_denominator(&self) -> u32 {
        self.den_t
    }

    pub fn to_ratfun(&self) -> RatFun {
        let ctx = self.num.ctx();
        let den = MPoly::monomial(ctx, Monomial::var(Var::T, self.den_t as u16), ctx.one());
        RatFun::new(self.num.clone(), den).expect("nonzero denominator")
    }

    pub fn degree_s(&self) -> usize {
        self.num.degree_in(Var::S)
    }

    /// Value at `s = 0`, as an element of `F_q(T)`.
    pub fn at_zero(&self) -> RatFun {
        let ctx = self.num.ctx();
        let den = MPoly::monomial(ctx, Monomial::var(Var::T, self.den_t as u16), ctx.one());
        RatFun::new(self.num.specialize(Var::S, ctx.zero()), den).expect("nonzero")
    }

    /// Substitute a rational function for `s`, giving an element of `F_q(T)(s)`.
    pub fn compose(&self, arg: &RatFun) -> Result<RatFun> {
        let inner = self.num.substitute(&[(Var::S, arg.clone())])?;
        let ctx = self.num.ctx();
        let t_pow = MPoly::monomial(ctx, Monomial::var(Var::T, self.den_t as u16), ctx.one());
        Ok(inner.checked_div(&t_pow.into())?)
    }
}

impl std::fmt::Display for DeuringPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_ratfun())
    }
}

/// Which image of `a` is fed to `p_d^(L)` in a splitting-set scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SplitTag {
    /// `p_d(a (a+1)^(q-1)) = 0`
    E,
    /// `p_d((a^q + a)^(q-1)) = 0`
    F,
    /// `p_d(a^q + a) = 0`
    FAlt,
}

impl SplitTag {
    pub fn argument(self, k: &FieldCtx, q: u64, a: FieldElem) -> FieldElem {
        let one = k.one();
        match self {
            SplitTag::E => k.mul(a, k.pow(k.add(a, one), q - 1)),
            SplitTag::F => k.pow(k.add(k.pow(a, q), a), q - 1),
            SplitTag::FAlt => k.add(k.pow(a, q), a),
        }
    }

    /// Predicted size `q m_d`, `q (q-1) m_d` and `q m_d` respectively.
    pub fn predicted(self, q: u64, m_d: u64) -> u64 {
        match self {
            SplitTag::E | SplitTag::FAlt => q * m_d,
            SplitTag::F => q * (q - 1) * m_d,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SplitSet {
    pub prime: String,
    pub q: u64,
    pub tag: SplitTag,
    pub field: Field,
    pub members: Vec<FieldElem>,
    pub predicted: u64,
}

impl SplitSet {
    pub fn actual(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: FieldElem) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn to_json(&self) -> SplitSetJson {
        SplitSetJson {
            l: self.prime.clone(),
            tag: self.tag,
            field: self.field.descriptor(),
            members: self.members.iter().map(|&a| self.field.coeffs(a)).collect(),
            predicted: self.predicted,
            actual: self.members.len(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitSetJson {
    #[serde(rename = "L")]
    pub l: String,
    pub tag: SplitTag,
    pub field: FieldDescriptor,
    pub members: Vec<Vec<u64>>,
    pub predicted: u64,
    pub actual: usize,
}

#[derive(Clone, Debug)]
pub struct ReducedRootsReport {
    pub prime: String,
    pub degree: usize,
    pub m_d: u64,
    pub field: Field,
    pub roots: Vec<Root>,
    pub value_at_zero: FieldElem,
    pub all_simple: bool,
    pub passes: bool,
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Cross-multiplied difference of the two sides when they disagree.
    pub witness: Option<MPoly>,
}

impl IdentityCheck {
    fn compare(lhs: &RatFun, rhs: &RatFun) -> Result<Self> {
        let diff = lhs.cross_difference(rhs)?;
        Ok(if diff.is_zero() {
            IdentityCheck {
                holds: true,
                witness: None,
            }
        } else {
            IdentityCheck {
                holds: false,
                witness: Some(diff),
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct RandomCheck {
    pub field: Field,
    pub points: Vec<(FieldElem, FieldElem)>,
    pub failures: Vec<(FieldElem, FieldElem)>,
}

impl RandomCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

type ReductionKey = (String, usize);

/// The family `p_{-1}, p_0, p_1, ...` for one `q`, with memoized exact
/// polynomials and reductions.
pub struct DeuringFamily {
    field: Field,
    q: u64,
    exact: RwLock<Vec<Arc<DeuringPoly>>>,
    depth1: RwLock<Vec<Arc<DeuringPoly>>>,
    reductions: Mutex<HashMap<ReductionKey, MPoly>>,
}

impl DeuringFamily {
    pub fn new(field: &Field) -> Self {
        let zero = DeuringPoly {
            num: MPoly::zero(field),
            den_t: 0,
        };
        let one = DeuringPoly {
            num: MPoly::one(field),
            den_t: 0,
        };
        DeuringFamily {
            field: field.clone(),
            q: field.size(),
            exact: RwLock::new(vec![Arc::new(zero), Arc::new(one.clone())]),
            depth1: RwLock::new(vec![Arc::new(one)]),
            reductions: Mutex::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `m_i = (q^i - 1)/(q - 1)`, the `s`-degree of `p_i`.
    pub fn expected_degree(&self, i: usize) -> Result<u64> {
        let mut m: u64 = 0;
        for _ in 0..i {
            m = m
                .checked_mul(self.q)
                .and_then(|m| m.checked_add(1))
                .filter(|&m| m <= DEGREE_LIMIT)
                .ok_or(Error::Guard {
                    what: "deg p_i",
                    value: u128::MAX,
                    limit: DEGREE_LIMIT as u128,
                })?;
        }
        Ok(m)
    }

    fn check_guard(&self, i: usize) -> Result<()> {
        self.expected_degree(i).map(|_| ())
    }

    fn s_pow(&self, e: u64) -> MPoly {
        MPoly::monomial(
            &self.field,
            Monomial::var(Var::S, e as u16),
            self.field.one(),
        )
    }

    fn t_pow(&self, e: u64) -> MPoly {
        MPoly::monomial(
            &self.field,
            Monomial::var(Var::T, e as u16),
            self.field.one(),
        )
    }

    /// `p_i` for `i >= -1` from the two-term recursion.
    pub fn p_exact(&self, i: i64) -> Result<Arc<DeuringPoly>> {
        if i < -1 {
            return Err(Error::Invalid(format!("p_{i} is undefined")));
        }
        let idx = (i + 1) as usize;
        if let Some(p) = self.exact.read().unwrap().get(idx) {
            return Ok(p.clone());
        }
        self.check_guard(i as usize)?;
        let mut cache = self.exact.write().unwrap();
        while cache.len() <= idx {
            // cache[j] = p_{j-1}; extend with p_{n+1} where n = len - 2
            let n = cache.len() - 2;
            let (prev, cur) = (&cache[n], &cache[n + 1]);
            let big_q = self.q.pow(n as u32);
            let k = big_q - 1;
            let c = cur.den_t.max(prev.den_t + k as u32);
            let one = MPoly::one(&self.field);
            let s_q = self.s_pow(big_q);
            let term1 = &(&s_q - &one) * &cur.shifted(c);
            let factor = &(&self.t_pow(k) - &one) * &s_q;
            let term2 = &factor * &prev.shifted(c - k as u32);
            let next = DeuringPoly::new(&term1 + &term2, c);
            cache.push(Arc::new(next));
        }
        Ok(cache[idx].clone())
    }

    /// `p_i` for `i >= 0` from the one-term recursion, independently of
    /// [`DeuringFamily::p_exact`].
    pub fn p_exact_depth1(&self, i: usize) -> Result<Arc<DeuringPoly>> {
        if let Some(p) = self.depth1.read().unwrap().get(i) {
            return Ok(p.clone());
        }
        self.check_guard(i)?;
        let mut cache = self.depth1.write().unwrap();
        while cache.len() <= i {
            let n = cache.len();
            let prev = &cache[n - 1];
            let m_prev = self.expected_degree(n - 1)?;
            let m_n = self.expected_degree(n)?;
            let qm1 = (self.q - 1) as u32;
            let ctx = &self.field;
            // s^{m_n} p_{n-1}(1/(T^{q-1} s)): c s^j T^f / T^D  ->  c s^{m_n - j} T^{f + (q-1)(M - j)} / T^{D + (q-1)M}
            let mapped = prev.num.terms().iter().map(|&(m, c)| {
                let j = m.exp(Var::S) as u64;
                let f = m.exp(Var::T) as u64;
                let out = Monomial::ONE
                    .with_exp(Var::S, (m_n - j) as u16)
                    .with_exp(Var::T, (f + (qm1 as u64) * (m_prev - j)) as u16);
                (out, c)
            });
            let mut reflected = DeuringPoly::new(
                MPoly::from_terms(ctx, mapped.collect::<Vec<_>>()),
                prev.den_t + qm1 * m_prev as u32,
            );
            if n.is_multiple_of(2) {
                reflected.num = reflected.num.neg();
            }
            let next = reflected.sub(prev);
            cache.push(Arc::new(next));
        }
        Ok(cache[i].clone())
    }

    /// The substitution identity relating `p_i(s(s+1)^{q-1})` to `p_i` and
    /// `p_{i-1}` at `s^q/(T(s+1))^{q-1}`, checked exactly.
    pub fn verify_substitution_identity(&self, i: usize) -> Result<IdentityCheck> {
        let ctx = &self.field;
        let q = self.q as u32;
        let p_i = self.p_exact(i as i64)?;
        let p_prev = self.p_exact(i as i64 - 1)?;
        let s = MPoly::var(ctx, Var::S);
        let t = MPoly::var(ctx, Var::T);
        let one = MPoly::one(ctx);
        let s1 = &s + &one;
        let arg1: RatFun = (&s * &s1.pow(q - 1)).into();
        let ts1 = &t * &s1;
        let arg2 = RatFun::new(s.pow(q), ts1.pow(q - 1))?;
        let k = self.q.pow(i as u32) - 1;
        let lhs = p_i
            .compose(&arg1)?
            .checked_sub(&RatFun::from(ts1.pow(k as u32)).checked_mul(&p_i.compose(&arg2)?)?)?;
        let coeff = &(&self.t_pow(k) - &one) * &s1.pow(k as u32);
        let rhs = RatFun::from(coeff).checked_mul(&p_prev.compose(&arg2)?)?;
        IdentityCheck::compare(&lhs, &rhs)
    }

    /// The reflected form of the one-term recursion, checked exactly by
    /// substituting `s -> 1/(T^{q-1} s)`.
    pub fn verify_reflected_recursion(&self, i: usize) -> Result<IdentityCheck> {
        if i == 0 {
            return Err(Error::Invalid(
                "the one-term recursion starts at i = 1".into(),
            ));
        }
        let ctx = &self.field;
        let s = MPoly::var(ctx, Var::S);
        let t_q1 = self.t_pow(self.q - 1);
        let refl = RatFun::new(MPoly::one(ctx), &t_q1 * &s)?;
        let p_i = self.p_exact(i as i64)?;
        let p_prev = self.p_exact(i as i64 - 1)?;
        let lhs = p_i.compose(&refl)?;
        let m_i = self.expected_degree(i)? as u32;
        let mut scale = RatFun::new(MPoly::one(ctx), (&s * &t_q1).pow(m_i))?;
        if i.is_multiple_of(2) {
            scale = scale.neg();
        }
        let rhs = scale
            .checked_mul(&p_prev.to_ratfun())?
            .checked_sub(&p_prev.compose(&refl)?)?;
        IdentityCheck::compare(&lhs, &rhs)
    }

    /// The same identity evaluated at random points `(s_0, t_0)` of an
    /// extension of `F_q` with at least 64 elements, with `p_j` evaluated
    /// numerically through the two-term recursion.
    pub fn verify_substitution_identity_random(
        &self,
        i: usize,
        points: usize,
        seed: u64,
    ) -> Result<RandomCheck> {
        let mut m = 1;
        while self.q.pow(m) < 64 {
            m += 1;
        }
        let k = FieldCtx::extend(&self.field, &find_irreducible(&self.field, m as usize))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = self.q;
        let one = k.one();
        let minus_one = k.neg(one);
        let mut sample = Vec::with_capacity(points);
        while sample.len() < points {
            let s0 = FieldElem::from_index(rng.gen_range(0..k.size()));
            let t0 = FieldElem::from_index(rng.gen_range(0..k.size()));
            if t0.is_zero() || s0 == minus_one {
                continue;
            }
            sample.push((s0, t0));
        }
        let mut failures = Vec::new();
        for &(s0, t0) in &sample {
            let s1 = k.add(s0, one);
            let arg1 = k.mul(s0, k.pow(s1, q - 1));
            let ts1 = k.mul(t0, s1);
            let arg2 = k.div(k.pow(s0, q), k.pow(ts1, q - 1))?;
            let big = q.pow(i as u32) - 1;
            let (a_i, _) = p_numeric(&k, q, i, arg1, t0)?;
            let (b_i, b_prev) = p_numeric(&k, q, i, arg2, t0)?;
            let lhs = k.sub(a_i, k.mul(k.pow(ts1, big), b_i));
            let coeff = k.mul(k.sub(k.pow(t0, big), one), k.pow(s1, big));
            let rhs = k.mul(coeff, b_prev);
            if lhs != rhs {
                failures.push((s0, t0));
            }
        }
        Ok(RandomCheck {
            field: k,
            points: sample,
            failures,
        })
    }

    /// `p_i^(L)` over `F_L`.
    pub fn p_mod(&self, prime: &Prime, i: usize) -> Result<MPoly> {
        prime.require_not_t()?;
        let key = (prime.to_string(), i);
        if let Some(p) = self.reductions.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let p = self.p_exact(i as i64)?;
        let res = prime.residue();
        let fl = res.target();
        let num = res.reduce(&p.num)?;
        let inv = fl.inv(fl.pow(res.alpha(), p.den_t as u64))?;
        let reduced = num.scale(inv);
        self.reductions.lock().unwrap().insert(key, reduced.clone());
        Ok(reduced)
    }

    /// Roots, simplicity and the value at 0 of `p_d^(L)` over `F_L^(2)`.
    pub fn check_reduced_roots(&self, prime: &Prime) -> Result<ReducedRootsReport> {
        let d = prime.degree();
        let p = self.p_mod(prime, d)?;
        let k = prime.quadratic().clone();
        let roots = distinct_roots(&p, &k)?;
        let value_at_zero = p
            .specialize(Var::S, prime.residue_field().zero())
            .constant_value()
            .expect("univariate");
        let all_simple = roots.iter().all(|r| r.simple);
        let zero_root = roots.iter().any(|r| r.value.is_zero());
        let passes = all_simple && !zero_root && roots.len() as u64 == prime.m_d();
        Ok(ReducedRootsReport {
            prime: prime.to_string(),
            degree: d,
            m_d: prime.m_d(),
            field: k,
            roots,
            value_at_zero,
            all_simple,
            passes,
        })
    }

    /// Members of `K` (default `F_L^(2)`) whose tag-image is a root of
    /// `p_d^(L)`, in element order.
    pub fn splitting_set(
        &self,
        prime: &Prime,
        tag: SplitTag,
        k: Option<&Field>,
    ) -> Result<SplitSet> {
        let k = k.cloned().unwrap_or_else(|| prime.quadratic().clone());
        let p = self
            .p_mod(prime, prime.degree())?
            .lift_to(&k)?
            .to_dense(Var::S)?;
        let q = self.q;
        let members: Vec<FieldElem> = k
            .enumerate()?
            .into_par_iter()
            .filter(|&a| p.eval(tag.argument(&k, q, a), &k).is_zero())
            .collect();
        Ok(SplitSet {
            prime: prime.to_string(),
            q,
            tag,
            field: k,
            members,
            predicted: tag.predicted(q, prime.m_d()),
        })
    }

    /// Whether every root of `p_d^(L)` and of `p_d^(L)(s(s+1)^{q-1})` in
    /// `F_L^(2)` is a `(q-1)`-st power there.
    pub fn roots_are_powers(&self, prime: &Prime) -> Result<bool> {
        let k = prime.quadratic();
        let exp = (k.size() - 1) / (self.q - 1);
        let is_power = |x: FieldElem| x.is_zero() || k.pow(x, exp) == k.one();
        let roots = distinct_roots(&self.p_mod(prime, prime.degree())?, k)?;
        let set = self.splitting_set(prime, SplitTag::E, None)?;
        Ok(roots.iter().all(|r| is_power(r.value)) && set.members.iter().all(|&a| is_power(a)))
    }
}

/// `(p_i(x), p_{i-1}(x))` at `T = t0` via the two-term recursion in `k`.
pub fn p_numeric(
    k: &FieldCtx,
    q: u64,
    i: usize,
    x: FieldElem,
    t0: FieldElem,
) -> Result<(FieldElem, FieldElem)> {
    let one = k.one();
    let (mut prev, mut cur) = (k.zero(), one);
    for n in 0..i {
        let big_q = q.pow(n as u32);
        let tk = k.pow(t0, big_q - 1);
        let coeff = k.div(k.sub(tk, one), tk)?;
        let xq = k.pow(x, big_q);
        let next = k.add(k.mul(k.sub(xq, one), cur), k.mul(k.mul(coeff, xq), prev));
        prev = cur;
        cur = next;
    }
    Ok((cur, prev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::base_field;

    fn fam(q: u64) -> DeuringFamily {
        DeuringFamily::new(&base_field(q).unwrap())
    }

    fn rf(ctx: &Field, s: &str) -> RatFun {
        RatFun::parse(ctx, s).unwrap()
    }

    #[test]
    fn first_polynomials() {
        for q in [2, 3, 4, 5] {
            let f = fam(q);
            let ctx = f.field().clone();
            assert!(f.p_exact(-1).unwrap().to_ratfun().is_zero());
            assert_eq!(f.p_exact(0).unwrap().to_ratfun(), RatFun::one(&ctx));
            assert_eq!(f.p_exact(1).unwrap().to_ratfun(), rf(&ctx, "s - 1"));
            let p2 = format!("s^{} - s^{}/T^{} - s + 1", q + 1, q, q - 1);
            assert_eq!(f.p_exact(2).unwrap().to_ratfun(), rf(&ctx, &p2));
            let p3 = format!(
                "s^{a} - s^{b}/T^{c} - s^{d}/T^{e} + s^{f}/T^{e} - s^{g} + s^{h}/T^{c} + s - 1",
                a = q * q + q + 1,
                b = q * q + q,
                c = q - 1,
                d = q * q + 1,
                e = q * q - 1,
                f = q * q,
                g = q + 1,
                h = q
            );
            assert_eq!(f.p_exact(3).unwrap().to_ratfun(), rf(&ctx, &p3));
        }
    }

    #[test]
    fn depth_one_matches() {
        let f = fam(2);
        for i in 0..=4 {
            assert_eq!(*f.p_exact(i as i64).unwrap(), *f.p_exact_depth1(i).unwrap());
        }
    }

    #[test]
    fn substitution_identity_small_cases() {
        assert!(fam(2).verify_substitution_identity(0).unwrap().holds);
        assert!(fam(2).verify_substitution_identity(1).unwrap().holds);
        assert!(fam(3).verify_substitution_identity(2).unwrap().holds);
        let r = fam(3).verify_substitution_identity_random(2, 5, 7).unwrap();
        assert_eq!(r.field.size(), 81);
        assert!(r.holds());
    }

    #[test]
    fn reflected_recursion() {
        for i in 1..=3 {
            assert!(fam(2).verify_reflected_recursion(i).unwrap().holds);
        }
    }

    #[test]
    fn reductions() {
        let f = fam(2);
        let ctx = f.field().clone();
        let l = Prime::parse(&ctx, "T + 1").unwrap();
        assert_eq!(
            f.p_mod(&l, 1).unwrap(),
            MPoly::parse(l.residue_field(), "s + 1").unwrap()
        );
        assert_eq!(
            f.p_mod(&l, 2).unwrap(),
            MPoly::parse(l.residue_field(), "(s+1)^3").unwrap()
        );

        let l = Prime::parse(&ctx, "T^2 + T + 1").unwrap();
        let fl = l.residue_field();
        let a2 = fl.pow(l.alpha(), 2);
        let expect = MPoly::parse(fl, "s^3 + s + 1").unwrap()
            + MPoly::monomial(fl, Monomial::var(Var::S, 2), a2);
        assert_eq!(f.p_mod(&l, 2).unwrap(), expect);

        let t = Prime::parse(&ctx, "T").unwrap();
        assert!(matches!(f.p_mod(&t, 1), Err(Error::ExcludedPrime(_))));
    }

    #[test]
    fn reduced_roots_examples() {
        let f = fam(2);
        let ctx = f.field().clone();
        let r = f
            .check_reduced_roots(&Prime::parse(&ctx, "T + 1").unwrap())
            .unwrap();
        assert!(r.passes);
        assert_eq!(r.roots.len(), 1);
        assert_eq!(r.value_at_zero, ctx.one());
        let r = f
            .check_reduced_roots(&Prime::parse(&ctx, "T^2 + T + 1").unwrap())
            .unwrap();
        assert!(r.passes);
        assert_eq!((r.roots.len(), r.field.size()), (3, 16));
        let f3 = fam(3);
        let r = f3
            .check_reduced_roots(&Prime::parse(f3.field(), "T - 1").unwrap())
            .unwrap();
        assert!(r.passes);
        assert_eq!(r.roots[0].value, f3.field().one());
    }

    #[test]
    fn splitting_set_examples() {
        let f = fam(2);
        let l = Prime::parse(f.field(), "T + 1").unwrap();
        let e = f.splitting_set(&l, SplitTag::E, None).unwrap();
        assert_eq!(e.actual(), 2);
        assert!(e.members.iter().all(|&a| !e.field.is_prime_subfield(a)));
        let fs = f.splitting_set(&l, SplitTag::F, None).unwrap();
        assert_eq!(fs.members, e.members);

        let f3 = fam(3);
        let l = Prime::parse(f3.field(), "T - 1").unwrap();
        let s = f3.splitting_set(&l, SplitTag::F, None).unwrap();
        assert_eq!((s.actual() as u64, s.predicted), (6, 6));
    }
}
