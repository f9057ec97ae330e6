//! Substitution, reduction modulo a prime of `F_q[T]`, root scans,
//! pseudo-reduction and small univariate factorization.

use rustc_hash::FxHashMap;

use super::{MPoly, Monomial, PolyError, RatFun, Var};
use crate::fields::{monic_irreducibles, Field, FieldCtx, FieldElem};

/// Largest degree accepted by [`factor_univariate`].
pub const FACTOR_DEGREE_LIMIT: usize = 12;

impl MPoly {
    /// Substitute rational functions for variables. Unbound variables stay
    /// symbolic. The result has denominator `prod d_v^{E_v}` before
    /// normalization, where `E_v` is the degree of `self` in `v`.
    pub fn substitute(&self, bindings: &[(Var, RatFun)]) -> Result<RatFun, PolyError> {
        let ctx = self.ctx().clone();
        for (_, r) in bindings {
            r.num().checked_add(&MPoly::zero(&ctx))?;
            if r.den().is_zero() {
                return Err(PolyError::DivisionByZero);
            }
        }
        let bound: Vec<(Var, &RatFun)> = bindings
            .iter()
            .filter(|(v, _)| self.degree_in(*v) > 0)
            .map(|(v, r)| (*v, r))
            .collect();
        if bound.is_empty() {
            return Ok(self.clone().into());
        }

        // P_v[e] = n_v^e * d_v^(E_v - e)
        let mut tables: Vec<Vec<MPoly>> = Vec::with_capacity(bound.len());
        let mut denominator = MPoly::one(&ctx);
        for (v, r) in &bound {
            let top = self.degree_in(*v);
            let mut num_pows = vec![MPoly::one(&ctx)];
            let mut den_pows = vec![MPoly::one(&ctx)];
            for e in 1..=top {
                num_pows.push(&num_pows[e - 1] * r.num());
                den_pows.push(&den_pows[e - 1] * r.den());
            }
            tables.push(
                (0..=top)
                    .map(|e| &num_pows[e] * &den_pows[top - e])
                    .collect(),
            );
            denominator = &denominator * &den_pows[top];
        }

        let mut groups: FxHashMap<Vec<u16>, Vec<(Monomial, FieldElem)>> = FxHashMap::default();
        for &(m, c) in self.terms() {
            let key: Vec<u16> = bound.iter().map(|(v, _)| m.exp(*v)).collect();
            let rest = bound.iter().fold(m, |acc, (v, _)| acc.with_exp(*v, 0));
            groups.entry(key).or_default().push((rest, c));
        }
        let groups: Vec<(Vec<u16>, MPoly)> = groups
            .into_iter()
            .map(|(k, t)| (k, MPoly::from_terms(&ctx, t)))
            .collect();
        let numerator = combine(&ctx, &tables, 0, groups);
        RatFun::new(numerator, denominator)
    }

    /// Remainder of `self` modulo `g`, which must have leading coefficient 1
    /// in `v` (as a polynomial in the other variables).
    pub fn pseudo_reduce(&self, g: &MPoly, v: Var) -> Result<MPoly, PolyError> {
        self.checked_add(&MPoly::zero(g.ctx()))?;
        let n = g.degree_in(v);
        let g_coeffs = g.coefficients_in(v);
        if g_coeffs[n].constant_value() != Some(g.ctx().one()) {
            return Err(PolyError::NotMonic(v));
        }
        // g = v^n + tail, so v^n == -tail.
        let tail = g - &MPoly::monomial(g.ctx(), Monomial::var(v, n as u16), g.ctx().one());
        let minus_tail = tail.neg();
        if n == 0 {
            return Ok(MPoly::zero(self.ctx()));
        }
        let mut coeffs = self.coefficients_in(v);
        let one = self.ctx().one();
        while coeffs.len() > n {
            let k = coeffs.len() - 1;
            let lead = coeffs.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            // lead * v^k = lead * v^(k-n) * (-tail), of lower degree in v
            let shifted = (&lead * &minus_tail).mul_term(&Monomial::var(v, (k - n) as u16), one);
            for (i, c) in shifted.coefficients_in(v).into_iter().enumerate() {
                if !c.is_zero() {
                    coeffs[i] = &coeffs[i] + &c;
                }
            }
        }
        let mut out = MPoly::zero(self.ctx());
        for (i, c) in coeffs.into_iter().enumerate() {
            out = &out + &c.mul_term(&Monomial::var(v, i as u16), one);
        }
        Ok(out)
    }
}

fn combine(
    ctx: &Field,
    tables: &[Vec<MPoly>],
    level: usize,
    groups: Vec<(Vec<u16>, MPoly)>,
) -> MPoly {
    if level == tables.len() {
        return groups
            .into_iter()
            .fold(MPoly::zero(ctx), |acc, (_, p)| &acc + &p);
    }
    let mut by_exp: Vec<Vec<(Vec<u16>, MPoly)>> = vec![Vec::new(); tables[level].len()];
    for g in groups {
        let e = g.0[level] as usize;
        by_exp[e].push(g);
    }
    let mut acc = MPoly::zero(ctx);
    for (e, sub) in by_exp.into_iter().enumerate() {
        if sub.is_empty() {
            continue;
        }
        let inner = combine(ctx, tables, level + 1, sub);
        acc = &acc + &(&tables[level][e] * &inner);
    }
    acc
}

/// Reduction `F_q[T] -> F_L`, `T -> alpha`, followed by an embedding into
/// `target` (which must contain `F_L`).
#[derive(Clone, Debug)]
pub struct Residue {
    source: Field,
    residue_field: Field,
    target: Field,
    modulus: MPoly,
    alpha: FieldElem,
}

impl Residue {
    /// `l` is a monic irreducible polynomial in `T` over `source`. When
    /// `target` is `None` the residue field itself is used.
    pub fn new(source: &Field, l: &MPoly, target: Option<&Field>) -> Result<Self, PolyError> {
        let dense = l.to_dense(Var::T)?;
        let residue_field = FieldCtx::extend(source, &dense)?;
        let target = target.cloned().unwrap_or_else(|| residue_field.clone());
        let alpha = target.lift(&residue_field, residue_field.adjoined().expect("extension"))?;
        Ok(Residue {
            source: source.clone(),
            residue_field,
            target,
            modulus: l.clone(),
            alpha,
        })
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn residue_field(&self) -> &Field {
        &self.residue_field
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn modulus(&self) -> &MPoly {
        &self.modulus
    }

    /// Image of `T` in the target field.
    pub fn alpha(&self) -> FieldElem {
        self.alpha
    }

    pub fn reduce(&self, f: &MPoly) -> Result<MPoly, PolyError> {
        if **f.ctx() != *self.source {
            return Err(PolyError::ContextMismatch(
                format!("{:?}", f.ctx()),
                format!("{:?}", self.source),
            ));
        }
        let t = &self.target;
        let mut alpha_pows: Vec<FieldElem> = vec![t.one()];
        let terms = f.terms().iter().map(|&(m, c)| {
            let e = m.exp(Var::T) as usize;
            while alpha_pows.len() <= e {
                let last = *alpha_pows.last().unwrap();
                alpha_pows.push(t.mul(last, self.alpha));
            }
            let c = t.lift(&self.source, c).expect("target extends the source");
            (m.with_exp(Var::T, 0), t.mul(c, alpha_pows[e]))
        });
        Ok(MPoly::from_terms(t, terms.collect::<Vec<_>>()))
    }

    pub fn reduce_ratfun(&self, r: &RatFun) -> Result<RatFun, PolyError> {
        let den = self.reduce(r.den())?;
        if den.is_zero() {
            return Err(PolyError::DenominatorVanishes {
                denominator: r.den().to_string(),
                modulus: self.modulus.to_string(),
            });
        }
        RatFun::new(self.reduce(r.num())?, den)
    }

    pub fn reduce_elem(&self, c: FieldElem) -> Result<FieldElem, PolyError> {
        Ok(self.target.lift(&self.source, c)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: FieldElem,
    pub simple: bool,
}

/// All roots in `k` of a univariate polynomial, in element order, each with a
/// simplicity flag.
pub fn distinct_roots(f: &MPoly, k: &Field) -> Result<Vec<Root>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let var = f.univariate_var()?.unwrap_or(Var::X);
    let lifted = f.lift_to(k)?.to_dense(var)?;
    let deriv = lifted.derivative(k);
    let mut roots = Vec::new();
    for a in k.elements()? {
        if lifted.eval(a, k).is_zero() {
            roots.push(Root {
                value: a,
                simple: !deriv.eval(a, k).is_zero(),
            });
        }
    }
    Ok(roots)
}

/// Factorization of a nonzero univariate polynomial over its field into monic
/// irreducibles with multiplicities, by trial division in increasing degree.
/// Factors are listed by degree, then by enumeration order.
pub fn factor_univariate(n: &MPoly) -> Result<Vec<(MPoly, usize)>, PolyError> {
    if n.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let ctx = n.ctx().clone();
    let var = n.univariate_var()?.unwrap_or(Var::T);
    let mut rest = n.to_dense(var)?.make_monic(&ctx);
    let deg = rest.degree().unwrap_or(0);
    if deg > FACTOR_DEGREE_LIMIT {
        return Err(PolyError::DegreeGuard {
            degree: deg,
            limit: FACTOR_DEGREE_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        for p in monic_irreducibles(&ctx, d) {
            let mut mult = 0;
            loop {
                let (q, r) = rest.div_rem(&p, &ctx);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((MPoly::from_dense(&ctx, var, &p), mult));
            }
        }
        d += 1;
    }
    if let Some(rd) = rest.degree().filter(|&rd| rd >= 1) {
        let pos = out
            .iter()
            .position(|(f, _)| f.degree_in(var) > rd)
            .unwrap_or(out.len());
        out.insert(pos, (MPoly::from_dense(&ctx, var, &rest), 1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldCtx;

    fn p(ctx: &Field, s: &str) -> MPoly {
        MPoly::parse(ctx, s).unwrap()
    }

    fn r(ctx: &Field, s: &str) -> RatFun {
        RatFun::parse(ctx, s).unwrap()
    }

    #[test]
    fn substitute_simple_binding() {
        let f2 = FieldCtx::prime(2).unwrap();
        let out = p(&f2, "X")
            .substitute(&[(Var::X, r(&f2, "T/(T+1)"))])
            .unwrap();
        assert!(out.equals(&r(&f2, "T/(T+1)")).unwrap());
    }

    #[test]
    fn residue_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let res = Residue::new(&f2, &p(&f2, "T^2 + T + 1"), None).unwrap();
        let t = res.reduce(&p(&f2, "T")).unwrap();
        assert_eq!(t.constant_value(), Some(res.alpha()));
        assert_eq!(res.alpha(), res.target().generator());

        let res = Residue::new(&f2, &p(&f2, "T + 1"), None).unwrap();
        let inv = res.reduce_ratfun(&r(&f2, "1/T")).unwrap();
        assert!(inv.equals(&RatFun::one(res.target())).unwrap());
        let p2 = r(&f2, "s^3 - s^2/T - s + 1");
        let red = res.reduce_ratfun(&p2).unwrap();
        assert!(red.equals(&r(res.target(), "(s+1)^3")).unwrap());

        let err = res.reduce_ratfun(&r(&f2, "1/(T+1)")).unwrap_err();
        assert!(matches!(err, PolyError::DenominatorVanishes { .. }));
    }

    #[test]
    fn root_scans() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f4 = FieldCtx::quadratic_extension(&f2).unwrap();
        let roots = distinct_roots(&p(&f2, "s^2 + s + 1"), &f4).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots
            .iter()
            .all(|r| r.simple && !f4.is_prime_subfield(r.value)));

        let roots = distinct_roots(&p(&f2, "(s+1)^2"), &f2).unwrap();
        assert_eq!(
            roots,
            vec![Root {
                value: f2.one(),
                simple: false
            }]
        );

        assert_eq!(
            distinct_roots(&MPoly::zero(&f2), &f2).unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn deuring_p2_mod_t2t1_has_three_simple_roots() {
        let f2 = FieldCtx::prime(2).unwrap();
        let res = Residue::new(&f2, &p(&f2, "T^2 + T + 1"), None).unwrap();
        let fl = res.target().clone();
        let k = FieldCtx::quadratic_extension(&fl).unwrap();
        let a2 = fl.pow(res.alpha(), 2);
        let f = MPoly::parse(&fl, "s^3 + s + 1").unwrap()
            + MPoly::monomial(&fl, Monomial::var(Var::S, 2), a2);
        let roots = distinct_roots(&f, &k).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.simple));
    }

    #[test]
    fn pseudo_reduction() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(
            p(&f2, "X^3")
                .pseudo_reduce(&p(&f2, "X - 1"), Var::X)
                .unwrap(),
            MPoly::one(&f2)
        );
        let g = p(&f2, "X^2 + T*X*Y + Y^3");
        assert!(g.pseudo_reduce(&g, Var::X).unwrap().is_zero());
        assert_eq!(
            p(&f2, "X")
                .pseudo_reduce(&p(&f2, "T*X + 1"), Var::X)
                .unwrap_err(),
            PolyError::NotMonic(Var::X)
        );
    }

    #[test]
    fn factorizations() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(
            factor_univariate(&p(&f2, "T^2 + T")).unwrap(),
            vec![(p(&f2, "T"), 1), (p(&f2, "T + 1"), 1)]
        );
        assert_eq!(
            factor_univariate(&p(&f2, "T^2 + T + 1")).unwrap(),
            vec![(p(&f2, "T^2 + T + 1"), 1)]
        );
        assert_eq!(
            factor_univariate(&p(&f2, "T^3")).unwrap(),
            vec![(p(&f2, "T"), 3)]
        );
        assert!(matches!(
            factor_univariate(&p(&f2, "T^13 + 1")),
            Err(PolyError::DegreeGuard { .. })
        ));
    }
}
