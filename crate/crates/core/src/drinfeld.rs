//! Twisted polynomials `K{tau}` and the rank-two family
//! `phi_T = u tau^2 + (u + T) tau + T` reduced at a prime `L`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::deuring::DeuringFamily;
use crate::error::{Error, Result};
use crate::fields::{Field, FieldElem, FieldError};
use crate::polys::{distinct_roots, format_elem, MPoly, Var};
use crate::primes::Prime;

/// `sum c_i tau^i` with `tau c = c^q tau`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    ctx: Field,
    q: u64,
    coeffs: Vec<FieldElem>,
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({self})")
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let c = format_elem(&self.ctx, c);
                match i {
                    0 => c,
                    1 => format!("{c}*tau"),
                    _ => format!("{c}*tau^{i}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl SkewPoly {
    /// `q` is the size of the field of constants fixed by the twist.
    pub fn new(ctx: &Field, q: u64, coeffs: Vec<FieldElem>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly {
            ctx: ctx.clone(),
            q,
            coeffs,
        }
    }

    pub fn zero(ctx: &Field, q: u64) -> Self {
        Self::new(ctx, q, Vec::new())
    }

    pub fn constant(ctx: &Field, q: u64, c: FieldElem) -> Self {
        Self::new(ctx, q, vec![c])
    }

    pub fn tau(ctx: &Field, q: u64) -> Self {
        Self::new(ctx, q, vec![ctx.zero(), ctx.one()])
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    /// Degree in `tau`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if *self.ctx != *other.ctx || self.q != other.q {
            return Err(FieldError::ContextMismatch(format!(
                "{} (twist {}) vs {} (twist {})",
                self.ctx, self.q, other.ctx, other.q
            ))
            .into());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.ctx.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::new(&self.ctx, self.q, c))
    }

    /// `c^{q^i}`.
    fn twist(&self, c: FieldElem, i: usize) -> FieldElem {
        let order = self.ctx.size() - 1;
        let mut e: u64 = 1;
        for _ in 0..i {
            e = ((e as u128 * self.q as u128) % order as u128) as u64;
        }
        if e == 0 {
            e = order;
        }
        self.ctx.pow(c, e)
    }

    /// Twisted product: the coefficient of `tau^k` is `sum a_i b_j^{q^i}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx, self.q));
        }
        let k = &self.ctx;
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, self.twist(b, i)));
            }
        }
        Ok(Self::new(k, self.q, out))
    }
}

/// The module `phi_T = u tau^2 + (u + alpha) tau + alpha` over `K`, where
/// `alpha` is the image of `T` in `F_L` embedded in `K`.
#[derive(Clone, Debug)]
pub struct DrinfeldModule {
    prime: Prime,
    field: Field,
    u: FieldElem,
    alpha: FieldElem,
    phi_t: SkewPoly,
}

impl DrinfeldModule {
    pub fn new(prime: &Prime, field: &Field, u: FieldElem) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::Invalid(
                "u = 0 does not give a rank-two module".into(),
            ));
        }
        let alpha = field.lift(prime.residue_field(), prime.alpha())?;
        let q = prime.q();
        let phi_t = SkewPoly::new(field, q, vec![alpha, field.add(u, alpha), u]);
        Ok(DrinfeldModule {
            prime: prime.clone(),
            field: field.clone(),
            u,
            alpha,
            phi_t,
        })
    }

    pub fn u(&self) -> FieldElem {
        self.u
    }

    pub fn phi_t(&self) -> &SkewPoly {
        &self.phi_t
    }

    /// `(u + alpha)^{q+1} / u`.
    pub fn j_invariant(&self) -> FieldElem {
        let k = &self.field;
        let q = self.prime.q();
        k.div(k.pow(k.add(self.u, self.alpha), q + 1), self.u)
            .expect("u != 0")
    }

    /// `phi_f` for `f` in `F_q[T]`, by Horner's rule.
    pub fn phi_image(&self, f: &MPoly) -> Result<SkewPoly> {
        let dense = f.to_dense(Var::T)?;
        let q = self.prime.q();
        let mut acc = SkewPoly::zero(&self.field, q);
        for &c in dense.coeffs().iter().rev() {
            let c = self.field.lift(f.ctx(), c)?;
            acc = acc
                .mul(&self.phi_t)?
                .add(&SkewPoly::constant(&self.field, q, c))?;
        }
        Ok(acc)
    }

    /// `phi_L` is a pure `tau^{2d}` term.
    pub fn is_supersingular(&self) -> Result<(bool, SkewPoly)> {
        let phi_l = self.phi_image(self.prime.poly())?;
        let top = 2 * self.prime.degree();
        let pure = (0..top).all(|j| phi_l.coeff(j).is_zero());
        Ok((pure, phi_l))
    }
}

#[derive(Clone, Debug)]
pub struct SupersingularReport {
    pub prime: String,
    pub q: u64,
    pub m_d: u64,
    pub field: Field,
    /// From the skew-polynomial height test, scanning `F_L^(2)` minus 0.
    pub oracle: Vec<FieldElem>,
    /// `u = -rho alpha^q` for the roots `rho` of `p_d^(L)`.
    pub via_p_d: Vec<FieldElem>,
}

impl SupersingularReport {
    pub fn agree(&self) -> bool {
        self.oracle == self.via_p_d
    }

    pub fn passes(&self) -> bool {
        self.agree() && self.oracle.len() as u64 == self.m_d
    }

    pub fn to_json(&self) -> SupersingularJson {
        let show = |v: &[FieldElem]| v.iter().map(|&x| format_elem(&self.field, x)).collect();
        SupersingularJson {
            l: self.prime.clone(),
            q: self.q,
            m_d: self.m_d,
            u_values: show(&self.oracle),
            via_p_d: show(&self.via_p_d),
            agree: self.agree(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SupersingularJson {
    #[serde(rename = "L")]
    pub l: String,
    pub q: u64,
    pub m_d: u64,
    pub u_values: Vec<String>,
    pub via_p_d: Vec<String>,
    pub agree: bool,
}

/// Supersingular parameters `u` at `L`, computed by the height oracle and
/// through the roots of `p_d^(L)`.
pub fn supersingular_u_set(family: &DeuringFamily, prime: &Prime) -> Result<SupersingularReport> {
    prime.require_not_t()?;
    let k = prime.quadratic().clone();
    let q = prime.q();
    let oracle: Vec<FieldElem> = k
        .enumerate()?
        .into_par_iter()
        .filter(|u| !u.is_zero())
        .map(|u| Ok((u, DrinfeldModule::new(prime, &k, u)?.is_supersingular()?.0)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(u, ss)| ss.then_some(u))
        .collect();

    let alpha = k.lift(prime.residue_field(), prime.alpha())?;
    let alpha_q = k.pow(alpha, q);
    let minus_one = k.from_int(-1);
    let p_d = family.p_mod(prime, prime.degree())?;
    let mut via_p_d: Vec<FieldElem> = distinct_roots(&p_d, &k)?
        .into_iter()
        .map(|r| k.mul(k.mul(minus_one, r.value), alpha_q))
        .collect();
    via_p_d.sort();
    Ok(SupersingularReport {
        prime: prime.to_string(),
        q,
        m_d: prime.m_d(),
        field: k,
        oracle,
        via_p_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::base_field;

    #[test]
    fn twist_rules() {
        let f2 = base_field(2).unwrap();
        let f16 =
            crate::fields::FieldCtx::extend(&f2, &crate::fields::find_irreducible(&f2, 4)).unwrap();
        let a = f16.generator();
        let tau = SkewPoly::tau(&f16, 2);
        let c = |x| SkewPoly::constant(&f16, 2, x);
        let a_tau = SkewPoly::new(&f16, 2, vec![f16.zero(), a]);
        let lhs = tau.mul(&a_tau).unwrap();
        assert_eq!(
            lhs,
            SkewPoly::new(&f16, 2, vec![f16.zero(), f16.zero(), f16.pow(a, 2)])
        );
        assert_eq!(c(a).mul(&c(a)).unwrap(), c(f16.mul(a, a)));
        let tau2 = tau.mul(&tau).unwrap();
        let lhs = tau2.mul(&c(a)).unwrap();
        assert_eq!(lhs.coeff(2), f16.pow(a, 4));
        assert_eq!(lhs.degree(), Some(2));
    }

    #[test]
    fn phi_of_t_plus_one() {
        let f2 = base_field(2).unwrap();
        let l = Prime::parse(&f2, "T + 1").unwrap();
        let m = DrinfeldModule::new(&l, l.residue_field(), f2.one()).unwrap();
        let img = m.phi_image(&MPoly::parse(&f2, "T + 1").unwrap()).unwrap();
        assert_eq!(img.coeffs(), &[f2.zero(), f2.zero(), f2.one()]);
        assert!(m.is_supersingular().unwrap().0);
        let t = m.phi_image(&MPoly::parse(&f2, "T").unwrap()).unwrap();
        assert_eq!(&t, m.phi_t());
        let t2 = m.phi_image(&MPoly::parse(&f2, "T^2").unwrap()).unwrap();
        assert_eq!(t2, t.mul(&t).unwrap());
    }

    #[test]
    fn u_sets() {
        let f2 = base_field(2).unwrap();
        let fam = DeuringFamily::new(&f2);
        let r = supersingular_u_set(&fam, &Prime::parse(&f2, "T + 1").unwrap()).unwrap();
        assert_eq!(r.oracle, vec![r.field.one()]);
        assert!(r.passes());
        let r = supersingular_u_set(&fam, &Prime::parse(&f2, "T^2 + T + 1").unwrap()).unwrap();
        assert_eq!(r.oracle.len(), 3);
        assert!(r.passes());
        // the three values do not lie in F_4
        assert!(r
            .oracle
            .iter()
            .any(|&u| r.field.degree_over(u, &f2).unwrap() == 4));

        let f3 = base_field(3).unwrap();
        let fam = DeuringFamily::new(&f3);
        let r = supersingular_u_set(&fam, &Prime::parse(&f3, "T - 1").unwrap()).unwrap();
        assert_eq!(r.oracle, vec![r.field.from_int(2)]);
        assert!(r.passes());
    }
}
