//! Exact identities behind the level-T tower equations, and the ways the
//! builtin towers specialize to one another.

use super::{make_tower, TowerKind, TowerSpec};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::fields::base_field;
use crate::polys::{RatFun, Var};
use crate::primes::Prime;

fn subst(r: &RatFun, bindings: &[(Var, RatFun)]) -> Result<RatFun> {
    let num = r.num().substitute(bindings)?;
    let den = r.den().substitute(bindings)?;
    Ok(num.checked_div(&den)?)
}

fn witness(a: &RatFun, b: &RatFun) -> Result<String> {
    let diff = a.cross_difference(b)?;
    let mut s = diff.to_string();
    if s.len() > 160 {
        s.truncate(160);
        s.push_str(" ...");
    }
    Ok(s)
}

fn compare(a: &RatFun, b: &RatFun, what: &str) -> Result<(bool, String)> {
    if a.equals(b)? {
        Ok((true, what.to_string()))
    } else {
        Ok((false, format!("{what} fails; witness {}", witness(a, b)?)))
    }
}

fn parser(q: u64) -> Result<impl Fn(String) -> Result<RatFun>> {
    let k = base_field(q)?;
    Ok(move |s: String| RatFun::parse(&k, &s).map_err(Error::from))
}

/// `j_1(u_0) - j_0(u_1)` equals its displayed two-factor product.
pub fn verify_identity_a(q: u64) -> Result<(bool, String)> {
    let r = parser(q)?;
    let (q1, qm1, qq) = (q + 1, q - 1, q * q);
    let lhs = r(format!("(u0 + T^{q})^{q1}/u0^{q} - (u1 + T)^{q1}/u1"))?;
    let rhs = r(format!(
        "(u0 - T^{q1}/u1)(1 + T^{qq}/u0^{q} - (u1 - T^{q1}/u0)^{qm1}(u1/u0 + T/u0))"
    ))?;
    compare(&lhs, &rhs, "level-T relation factors")
}

/// `u_0 = v_0^{q-1}(v_0+T)`, `u_1 = (v_0+T)^q/v_0^{q-1}` satisfy the
/// level-T relation and `v_0 = (u_0 u_1 - T^{q+1})/(u_0 + T^q)`.
pub fn verify_identity_b(q: u64) -> Result<(bool, String)> {
    let r = parser(q)?;
    let (q1, qm1) = (q + 1, q - 1);
    let rel = r(format!("(u0 + T^{q})^{q1}/u0^{q} - (u1 + T)^{q1}/u1"))?;
    let u0 = r(format!("v0^{qm1}(v0 + T)"))?;
    let u1 = r(format!("(v0 + T)^{q}/v0^{qm1}"))?;
    let bind = [(Var::U0, u0), (Var::U1, u1)];
    let value = subst(&rel, &bind)?;
    if !value.is_zero() {
        return Ok((false, format!("relation does not vanish: {value}")));
    }
    let v0 = subst(&r(format!("(u0 u1 - T^{q1})/(u0 + T^{q})"))?, &bind)?;
    compare(&v0, &r("v0".into())?, "v0 parametrization")
}

/// With `v_0 = -T(xi+1)`: `u_0 = -T^q (xi+1)^{q-1} xi`, `u_1 = -T xi^q/(xi+1)^{q-1}`,
/// and `u_0(xi_i) - u_1(xi_{i-1})` is `-T^q` times the depth-one relation.
pub fn verify_identity_c(q: u64) -> Result<(bool, String)> {
    let r = parser(q)?;
    let qm1 = q - 1;
    let v0 = [(Var::V0, r("-T(xi + 1)".into())?)];
    let u0 = subst(&r(format!("v0^{qm1}(v0 + T)"))?, &v0)?;
    let u1 = subst(&r(format!("(v0 + T)^{q}/v0^{qm1}"))?, &v0)?;
    let (ok0, d0) = compare(&u0, &r(format!("-T^{q}(xi + 1)^{qm1} xi"))?, "u0 in xi")?;
    let (ok1, d1) = compare(&u1, &r(format!("-T xi^{q}/(xi + 1)^{qm1}"))?, "u1 in xi")?;
    if !(ok0 && ok1) {
        return Ok((false, format!("{d0}; {d1}")));
    }
    let at = |v: Var| [(Var::Xi, RatFun::from(crate::polys::MPoly::var(u0.ctx(), v)))];
    let link = subst(&u0, &at(Var::Y))?.checked_sub(&subst(&u1, &at(Var::X))?)?;
    let rel = r(format!(
        "-T^{q}((Y + 1)^{qm1} Y - X^{q}/(T^{qm1}(X + 1)^{qm1}))"
    ))?;
    compare(&link, &rel, "xi substitution and depth-one relation")
}

/// `xi = x^{q-1}` carries the `q-1` power of the F-relation to the E-relation.
pub fn verify_identity_d(q: u64) -> Result<(bool, String)> {
    let r = parser(q)?;
    let qm1 = q - 1;
    let qm1u = qm1 as u32;
    let lhs_f = r(format!("Y^{q} + Y"))?.pow(qm1u);
    let rhs_f = r(format!("X^{q}/(T(X^{qm1} + 1))"))?.pow(qm1u);
    let lhs_e = subst(
        &r(format!("(xi + 1)^{qm1} xi"))?,
        &[(Var::Xi, r(format!("Y^{qm1}"))?)],
    )?;
    let rhs_e = subst(
        &r(format!("xi^{q}/(T^{qm1}(xi + 1)^{qm1})"))?,
        &[(Var::Xi, r(format!("X^{qm1}"))?)],
    )?;
    let (ok_l, d_l) = compare(&lhs_f, &lhs_e, "left sides")?;
    let (ok_r, d_r) = compare(&rhs_f, &rhs_e, "right sides")?;
    Ok((ok_l && ok_r, format!("{d_l}; {d_r}")))
}

/// The chain `j_1(u_1)`, `u_1(v_0)`, `v_0(x)` gives the closed form
/// `-T^q (x^{q^2} - x)^{q+1} / (x^q + x)^{q^2+1}`.
pub fn verify_identity_e(q: u64) -> Result<(bool, String)> {
    let r = parser(q)?;
    let (q1, qm1, qq) = (q + 1, q - 1, q * q);
    let v0 = r(format!("-T(x^{qm1} + 1)"))?;
    let u1 = subst(&r(format!("(v0 + T)^{q}/v0^{qm1}"))?, &[(Var::V0, v0)])?;
    let j1 = subst(&r(format!("(u1 + T)^{q1}/u1"))?, &[(Var::U1, u1)])?;
    let display = r(format!("-T^{q}(x^{qq} - x)^{q1}/(x^{q} + x)^{}", qq + 1))?;
    compare(&j1, &display, "j1 closed form")
}

/// Identities (a) through (e) for one `q`.
pub fn identity_suite(q: u64) -> Vec<Check> {
    let name = |tag: &str| format!("towers/identity-{tag}/q={q}");
    vec![
        Check::run(name("a"), || verify_identity_a(q)),
        Check::run(name("b"), || verify_identity_b(q)),
        Check::run(name("c"), || verify_identity_c(q)),
        Check::run(name("d"), || verify_identity_d(q)),
        Check::run(name("e"), || verify_identity_e(q)),
    ]
}

fn same_relation(a: &TowerSpec, b: &TowerSpec) -> (bool, String) {
    let ok = a.field() == b.field() && a.relation() == b.relation();
    (ok, format!("{} | {}", a.relation(), b.relation()))
}

/// The builtin towers agree where their parameters meet.
pub fn specialization_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for q in [2u64, 3, 4] {
        out.push(Check::run(format!("towers/gs=F(T-1)/q={q}"), || {
            let f = make_tower(TowerKind::F, q, Some("T - 1"), None, None, None)?;
            Ok(same_relation(&TowerSpec::gs(q)?, &f))
        }));
        out.push(Check::run(format!("towers/elkies=E(T-1)/q={q}"), || {
            let e = make_tower(TowerKind::E, q, Some("T - 1"), None, None, None)?;
            Ok(same_relation(&TowerSpec::elkies(q)?, &e))
        }));
    }
    for l in ["T + 1", "T^2 + T + 1"] {
        let tag = l.replace(' ', "");
        out.push(Check::run(
            format!("towers/gamma(1/alpha)=F({tag})/q=2"),
            || {
                let g = make_tower(TowerKind::Gamma, 2, Some(l), Some("1/T"), None, None)?;
                let f = make_tower(TowerKind::F, 2, Some(l), None, None, None)?;
                Ok(same_relation(&g, &f))
            },
        ));
        out.push(Check::run(format!("towers/E=F({tag})/q=2"), || {
            let p = Prime::parse(&base_field(2)?, l)?;
            Ok(same_relation(&TowerSpec::e(&p)?, &TowerSpec::f(&p)?))
        }));
    }
    out
}
