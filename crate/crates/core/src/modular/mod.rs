//! Drinfeld modular polynomials of small level for `q = 2`, their
//! parametrizations and factorizations, and the checks tying them together.

pub mod data;

use sha2::{Digest, Sha256};

use crate::check::Check;
use crate::error::{Error, Result};
use crate::fields::{base_field, Field};
use crate::polys::{factor_univariate, MPoly, PolyError, RatFun, Residue, Var};
use crate::primes::Prime;

/// A uniformizer of `X_0(P)` written in `X = j_0`, `Y = j_1`, possibly only
/// modulo a prime.
#[derive(Clone, Debug)]
pub struct Uniformizer {
    pub expr: RatFun,
    pub modulus: Option<MPoly>,
}

/// Embedded data for one level `P` over `F_2`.
#[derive(Clone, Debug)]
pub struct ModularData {
    level: MPoly,
    phi: MPoly,
    psi: Option<MPoly>,
    j0: RatFun,
    j1: RatFun,
    expanded: MPoly,
    expanded_displayed: bool,
    factors: Vec<MPoly>,
    uniformizers: Vec<Uniformizer>,
    reductions: Vec<(MPoly, String)>,
}

/// The levels with embedded data.
pub const LEVELS: [&str; 3] = ["T", "T^2 + T + 1", "T^2 + T"];

fn checked(name: &str, s: &'static str) -> Result<&'static str> {
    let digest = format!("{:x}", Sha256::digest(s.as_bytes()));
    match data::CHECKSUMS.iter().find(|(n, _)| *n == name) {
        Some((_, expected)) if *expected == digest => Ok(s),
        Some(_) => Err(Error::Invalid(format!(
            "embedded data {name} fails its checksum"
        ))),
        None => Err(Error::Invalid(format!("no checksum recorded for {name}"))),
    }
}

/// Verifies every embedded string against its recorded digest.
pub fn verify_checksums() -> Result<usize> {
    use data::*;
    let mut all: Vec<(String, &'static str)> = vec![
        ("PHI_T".into(), PHI_T),
        ("PSI_T".into(), PSI_T),
        ("U0_T".into(), U0_T),
        ("J0_T".into(), J0_T),
        ("J1_T".into(), J1_T),
        ("EXPANDED_T".into(), EXPANDED_T),
        ("PHI_T2T1".into(), PHI_T2T1),
        ("J0_T2T1".into(), J0_T2T1),
        ("J1_T2T1".into(), J1_T2T1),
        ("EXPANDED_T2T1".into(), EXPANDED_T2T1),
        ("REDUCED_T2T1".into(), REDUCED_T2T1),
        ("U0_T2T1_MOD_T".into(), U0_T2T1_MOD_T),
        ("PHI_T2T".into(), PHI_T2T),
        ("J0_T2T".into(), J0_T2T),
        ("J1_T2T".into(), J1_T2T),
        ("REDUCED_T2T".into(), REDUCED_T2T),
    ];
    let arrays: [(&str, &[&'static str]); 3] = [
        ("FACTORS_T", &FACTORS_T),
        ("FACTORS_T2T1", &FACTORS_T2T1),
        ("FACTORS_T2T", &FACTORS_T2T),
    ];
    for (name, items) in arrays {
        all.extend(
            items
                .iter()
                .enumerate()
                .map(|(i, s)| (format!("{name}[{i}]"), *s)),
        );
    }
    for (name, s) in &all {
        checked(name, s)?;
    }
    Ok(all.len())
}

/// `N_0(Y) D_1(X) - D_0(Y) N_1(X)` for `j_0 = N_0/D_0`, `j_1 = N_1/D_1` in `u`.
pub fn relation_from_parametrization(j0: &RatFun, j1: &RatFun) -> MPoly {
    let y = |p: &MPoly| p.rename(&[(Var::U, Var::Y)]);
    let x = |p: &MPoly| p.rename(&[(Var::U, Var::X)]);
    &y(j0.num()) * &x(j1.den()) - &y(j0.den()) * &x(j1.num())
}

impl ModularData {
    /// Loads the data for `level`, one of [`LEVELS`] (any spelling the
    /// grammar accepts).
    pub fn load(level: &str) -> Result<Self> {
        let f2 = base_field(2)?;
        let wanted = MPoly::parse(&f2, level)?;
        let poly = |name: &str, s: &'static str| -> Result<MPoly> {
            Ok(MPoly::parse(&f2, checked(name, s)?)?)
        };
        let ratfun = |name: &str, s: &'static str| -> Result<RatFun> {
            Ok(RatFun::parse(&f2, checked(name, s)?)?)
        };
        let factors = |name: &str, items: &[&'static str]| -> Result<Vec<MPoly>> {
            items
                .iter()
                .enumerate()
                .map(|(i, s)| poly(&format!("{name}[{i}]"), s))
                .collect()
        };
        let level_poly = |s: &str| MPoly::parse(&f2, s).map_err(Error::from);
        use data::*;

        if wanted == level_poly("T")? {
            Ok(ModularData {
                level: wanted,
                phi: poly("PHI_T", PHI_T)?,
                psi: Some(poly("PSI_T", PSI_T)?),
                j0: ratfun("J0_T", J0_T)?,
                j1: ratfun("J1_T", J1_T)?,
                expanded: poly("EXPANDED_T", EXPANDED_T)?,
                expanded_displayed: true,
                factors: factors("FACTORS_T", &FACTORS_T)?,
                uniformizers: vec![Uniformizer {
                    expr: ratfun("U0_T", U0_T)?,
                    modulus: None,
                }],
                reductions: vec![(level_poly("T + 1")?, "X^2 + XY^2 + XY + Y".to_string())],
            })
        } else if wanted == level_poly("T^2 + T + 1")? {
            let u0 = ratfun("U0_T2T1_MOD_T", U0_T2T1_MOD_T)?;
            let reduced = checked("REDUCED_T2T1", REDUCED_T2T1)?.to_string();
            Ok(ModularData {
                level: wanted,
                phi: poly("PHI_T2T1", PHI_T2T1)?,
                psi: None,
                j0: ratfun("J0_T2T1", J0_T2T1)?,
                j1: ratfun("J1_T2T1", J1_T2T1)?,
                expanded: poly("EXPANDED_T2T1", EXPANDED_T2T1)?,
                expanded_displayed: true,
                factors: factors("FACTORS_T2T1", &FACTORS_T2T1)?,
                uniformizers: vec![
                    Uniformizer {
                        expr: u0.clone(),
                        modulus: Some(level_poly("T")?),
                    },
                    Uniformizer {
                        expr: u0,
                        modulus: Some(level_poly("T + 1")?),
                    },
                ],
                reductions: vec![
                    (level_poly("T")?, reduced.clone()),
                    (level_poly("T + 1")?, reduced),
                ],
            })
        } else if wanted == level_poly("T^2 + T")? {
            let j0 = ratfun("J0_T2T", J0_T2T)?;
            let j1 = ratfun("J1_T2T", J1_T2T)?;
            Ok(ModularData {
                level: wanted,
                phi: poly("PHI_T2T", PHI_T2T)?,
                psi: None,
                expanded: relation_from_parametrization(&j0, &j1),
                expanded_displayed: false,
                j0,
                j1,
                factors: factors("FACTORS_T2T", &FACTORS_T2T)?,
                uniformizers: Vec::new(),
                reductions: vec![(
                    level_poly("T^2 + T + 1")?,
                    checked("REDUCED_T2T", REDUCED_T2T)?.to_string(),
                )],
            })
        } else {
            Err(Error::Invalid(format!(
                "no modular data for level {wanted}; available: {}",
                LEVELS.join(", ")
            )))
        }
    }

    pub fn all() -> Result<Vec<Self>> {
        LEVELS.iter().map(|l| Self::load(l)).collect()
    }

    pub fn ctx(&self) -> &Field {
        self.level.ctx()
    }

    pub fn level(&self) -> &MPoly {
        &self.level
    }

    pub fn phi(&self) -> &MPoly {
        &self.phi
    }

    pub fn psi(&self) -> Option<&MPoly> {
        self.psi.as_ref()
    }

    pub fn j0(&self) -> &RatFun {
        &self.j0
    }

    pub fn j1(&self) -> &RatFun {
        &self.j1
    }

    /// The bivariate polynomial whose factorization yields `f_P`.
    pub fn expanded(&self) -> &MPoly {
        &self.expanded
    }

    /// Whether [`Self::expanded`] was transcribed rather than computed from
    /// the parametrization.
    pub fn expanded_displayed(&self) -> bool {
        self.expanded_displayed
    }

    pub fn factors(&self) -> &[MPoly] {
        &self.factors
    }

    pub fn uniformizers(&self) -> &[Uniformizer] {
        &self.uniformizers
    }

    /// `(L, displayed reduction of f_P mod L)`.
    pub fn reductions(&self) -> &[(MPoly, String)] {
        &self.reductions
    }

    pub fn is_prime_level(&self) -> bool {
        Prime::new(self.ctx(), &self.level).is_ok()
    }

    /// `q^{deg P}`.
    pub fn step_degree(&self) -> usize {
        (self.ctx().size() as usize).pow(self.level.degree_in(Var::T) as u32)
    }

    /// The unique factor of Y-degree `q^{deg P}`.
    pub fn f_p(&self) -> Result<&MPoly> {
        let d = self.step_degree();
        let mut hits = self.factors.iter().filter(|f| f.degree_in(Var::Y) == d);
        match (hits.next(), hits.next()) {
            (Some(f), None) => Ok(f),
            _ => Err(Error::Invalid(format!(
                "level {}: no unique factor of Y-degree {d}",
                self.level
            ))),
        }
    }

    /// `Some(Phi(X,Y) == Phi(Y,X))` for prime levels, `None` otherwise.
    pub fn verify_symmetry(&self) -> Option<bool> {
        self.is_prime_level()
            .then(|| self.phi == self.phi.swap(Var::X, Var::Y))
    }

    /// `Phi_P(j_0(u), j_1(u)) = 0`.
    pub fn verify_parametrization(&self) -> Result<bool> {
        let value = self
            .phi
            .substitute(&[(Var::X, self.j0.clone()), (Var::Y, self.j1.clone())])?;
        Ok(value.is_zero())
    }

    /// The product of the listed factors equals the expanded polynomial and
    /// exactly one factor qualifies as `f_P`.
    pub fn verify_factorization(&self) -> Result<bool> {
        let product = self
            .factors
            .iter()
            .fold(MPoly::one(self.ctx()), |acc, f| &acc * f);
        Ok(product == self.expanded && self.f_p().is_ok())
    }

    /// Like [`Self::verify_factorization`], with a description of the
    /// discrepancy: the exact cofactor of the other listed factors compared
    /// with the listed `f_P`.
    pub fn factorization_report(&self) -> Result<(bool, String)> {
        let f = self.f_p()?;
        if self.verify_factorization()? {
            return Ok((true, format!("f_P = {f}")));
        }
        let others = self
            .factors
            .iter()
            .filter(|g| *g != f)
            .fold(MPoly::one(self.ctx()), |acc, g| &acc * g);
        let detail = match self.expanded.exact_divide(&others)? {
            Some(cofactor) => format!(
                "product differs from the expanded polynomial; exact cofactor minus listed f_P = {}",
                &cofactor - f
            ),
            None => "product differs and the other factors do not divide the expanded polynomial".into(),
        };
        Ok((false, detail))
    }

    /// The expanded polynomial agrees with the one built from `j_0`, `j_1`.
    pub fn verify_expanded_relation(&self) -> bool {
        relation_from_parametrization(&self.j0, &self.j1) == self.expanded
    }

    /// Remainder of `Phi(Y,Z) - (Z - X) psi` modulo `Phi(X,Y)` in `X`.
    pub fn psi_remainder(&self, psi: &MPoly) -> Result<MPoly> {
        let shifted = self.phi.rename(&[(Var::X, Var::Y), (Var::Y, Var::Z)]);
        let z_minus_x = MPoly::var(self.ctx(), Var::Z) - MPoly::var(self.ctx(), Var::X);
        let f = shifted - &z_minus_x * psi;
        Ok(f.pseudo_reduce(&self.phi, Var::X)?)
    }

    /// `Psi_P` is the cofactor of `Z - X` modulo the curve relation, with
    /// Z-degree `q^{deg P}`. `None` when no `Psi_P` is embedded.
    pub fn verify_psi(&self) -> Result<Option<bool>> {
        let Some(psi) = &self.psi else {
            return Ok(None);
        };
        let rem = self.psi_remainder(psi)?;
        Ok(Some(
            rem.is_zero() && psi.degree_in(Var::Z) == self.step_degree(),
        ))
    }

    /// `f_P mod L`, over `F_L`.
    pub fn reduce_example(&self, l: &MPoly) -> Result<MPoly> {
        let residue = Residue::new(self.ctx(), l, None)?;
        Ok(residue.reduce(self.f_p()?)?)
    }

    /// Compares the printed reduction with the printed parse of `display`.
    pub fn check_reduction(&self, l: &MPoly, display: &str) -> Result<(bool, String)> {
        let reduced = self.reduce_example(l)?;
        let expected = MPoly::parse(reduced.ctx(), display)?;
        let (got, want) = (reduced.to_string(), expected.to_string());
        Ok((got == want, got))
    }

    /// Substituting `j_0(u)`, `j_1(u)` (reduced if needed) into the
    /// uniformizer gives back `u`.
    /// Also returns the substituted value.
    pub fn verify_uniformizer(&self, uni: &Uniformizer) -> Result<(bool, RatFun)> {
        let (j0, j1, expr) = match &uni.modulus {
            None => (self.j0.clone(), self.j1.clone(), uni.expr.clone()),
            Some(l) => {
                let r = Residue::new(self.ctx(), l, None)?;
                (
                    r.reduce_ratfun(&self.j0)?,
                    r.reduce_ratfun(&self.j1)?,
                    r.reduce_ratfun(&uni.expr)?,
                )
            }
        };
        let ctx = j0.ctx().clone();
        let num = expr
            .num()
            .substitute(&[(Var::X, j0.clone()), (Var::Y, j1.clone())])?;
        let den = expr.den().substitute(&[(Var::X, j0), (Var::Y, j1)])?;
        let value = num.checked_div(&den)?;
        Ok((value.equals(&MPoly::var(&ctx, Var::U).into())?, value))
    }
}

/// The field-extension degree `q^{deg N} prod_{A | N} (1 + q^{-deg A})`
/// for a nonzero `N` in `F_q[T]`.
pub fn degree_formula(n: &MPoly) -> Result<u64> {
    if n.vars().iter().any(|&v| v != Var::T) {
        return Err(PolyError::NotUnivariate(n.vars()).into());
    }
    let q = n.ctx().size();
    let factors = factor_univariate(n)?;
    let mut exponent = n.degree_in(Var::T);
    let mut value: u64 = 1;
    for (a, _) in &factors {
        let d = a.degree_in(Var::T);
        exponent -= d;
        value = q
            .checked_pow(d as u32)
            .and_then(|x| x.checked_add(1))
            .and_then(|x| x.checked_mul(value))
            .ok_or(Error::Guard {
                what: "degree formula",
                value: u64::MAX as u128,
                limit: u64::MAX as u128,
            })?;
    }
    q.checked_pow(exponent as u32)
        .and_then(|x| x.checked_mul(value))
        .ok_or(Error::Guard {
            what: "degree formula",
            value: u64::MAX as u128,
            limit: u64::MAX as u128,
        })
}

/// The level-T parametrization for general `q`: the displayed factorization
/// of `j_1(u_0) - j_0(u_1)`, and its vanishing under
/// `u_0 = v_0^{q-1}(v_0+T)`, `u_1 = (v_0+T)^q / v_0^{q-1}`.
pub fn verify_level_t_relation(q: u64) -> Result<bool> {
    let k = base_field(q)?;
    let r = |s: String| RatFun::parse(&k, &s).map_err(Error::from);
    let (q1, qm1, qq) = (q + 1, q - 1, q * q);
    let lhs = r(format!("(u0 + T^{q})^{q1}/u0^{q} - (u1 + T)^{q1}/u1"))?;
    let rhs = r(format!(
        "(u0 - T^{q1}/u1)(1 + T^{qq}/u0^{q} - (u1 - T^{q1}/u0)^{qm1}(u1/u0 + T/u0))"
    ))?;
    if !lhs.equals(&rhs)? {
        return Ok(false);
    }
    let u0 = r(format!("v0^{qm1}(v0 + T)"))?;
    let u1 = r(format!("(v0 + T)^{q}/v0^{qm1}"))?;
    let num = lhs
        .num()
        .substitute(&[(Var::U0, u0.clone()), (Var::U1, u1.clone())])?;
    Ok(num.is_zero())
}

/// For `q = 2` the general level-T pair specializes to the embedded one.
pub fn level_t_pair_matches(data: &ModularData) -> Result<bool> {
    let k = data.ctx();
    let q = k.size();
    let j0 = RatFun::parse(k, &format!("(u + T)^{}/u", q + 1))?;
    let j1 = RatFun::parse(k, &format!("(u + T^{q})^{}/u^{q}", q + 1))?;
    Ok(j0.equals(data.j0())? && j1.equals(data.j1())?)
}

/// Checks that fail on the verbatim data because the displayed formulas are
/// mutually inconsistent. See the README for the analysis.
pub const KNOWN_SOURCE_DISCREPANCIES: [&str; 4] = [
    "modular/T^2+T+1/factorization",
    "modular/T^2+T+1/uniformizer-mod-T",
    "modular/T^2+T+1/uniformizer-mod-T+1",
    "modular/T^2+T/parametrization",
];

/// Every modular check, one entry each.
pub fn run_checks(q: u64) -> Result<Vec<Check>> {
    if q != 2 {
        return Err(Error::Invalid(format!(
            "modular data is embedded only for q = 2, not q = {q}"
        )));
    }
    let mut out = vec![Check::run("modular/checksums", || {
        verify_checksums().map(|n| (true, format!("{n} embedded strings")))
    })];
    for data in ModularData::all()? {
        let tag = data.level().to_string().replace(' ', "");
        let name = |s: &str| format!("modular/{tag}/{s}");
        out.push(match data.verify_symmetry() {
            Some(ok) => Check::from_bool(name("symmetry"), ok, "Phi(X,Y) = Phi(Y,X)"),
            None => Check::skipped(name("symmetry"), "skipped: P composite"),
        });
        out.push(Check::run(name("degree"), || {
            let want = degree_formula(data.level())?;
            let got = data.phi().degree_in(Var::Y) as u64;
            Ok((got == want, format!("deg_Y Phi = {got}, formula {want}")))
        }));
        out.push(Check::run(name("degree-square"), || {
            let p2 = data.level().pow(2);
            let ratio = degree_formula(&p2)? / degree_formula(data.level())?;
            Ok((ratio == data.step_degree() as u64, format!("ratio {ratio}")))
        }));
        out.push(Check::run(name("parametrization"), || {
            let value = data
                .phi()
                .substitute(&[(Var::X, data.j0().clone()), (Var::Y, data.j1().clone())])?;
            let detail = if value.is_zero() {
                "Phi(j0(u), j1(u)) = 0".to_string()
            } else {
                format!(
                    "Phi(j0(u), j1(u)) has a numerator with {} terms",
                    value.num().num_terms()
                )
            };
            Ok((value.is_zero(), detail))
        }));
        out.push(Check::run(name("factorization"), || {
            data.factorization_report()
        }));
        if data.expanded_displayed() {
            out.push(Check::from_bool(
                name("expanded-vs-j"),
                data.verify_expanded_relation(),
                "displayed product matches N0(Y)D1(X) - D0(Y)N1(X)",
            ));
        }
        out.push(Check::run(name("f-degree"), || {
            let d = data.f_p()?.degree_in(Var::Y);
            Ok((d == data.step_degree(), format!("deg_Y f_P = {d}")))
        }));
        if data.psi().is_some() {
            out.push(Check::run(name("psi"), || {
                Ok((
                    data.verify_psi()? == Some(true),
                    "remainder 0, deg_Z = q^deg P".into(),
                ))
            }));
            out.push(Check::run(name("psi-perturbed"), || {
                let bumped = data.psi().unwrap() + &MPoly::one(data.ctx());
                let rem = data.psi_remainder(&bumped)?;
                Ok((
                    !rem.is_zero(),
                    format!("remainder witness has {} terms", rem.num_terms()),
                ))
            }));
        }
        for uni in data.uniformizers() {
            let label = match &uni.modulus {
                Some(l) => format!("uniformizer-mod-{}", l.to_string().replace(' ', "")),
                None => "uniformizer".into(),
            };
            out.push(Check::run(name(&label), || {
                let (ok, value) = data.verify_uniformizer(uni)?;
                Ok((ok, format!("u0(j0(u), j1(u)) = {value}")))
            }));
        }
        for (l, display) in data.reductions() {
            out.push(Check::run(
                name(&format!("reduce-mod-{}", l.to_string().replace(' ', ""))),
                || data.check_reduction(l, display),
            ));
        }
        if data.level().degree_in(Var::T) == 1 {
            out.push(Check::run(name("general-q-pair"), || {
                Ok((
                    level_t_pair_matches(&data)?,
                    "general-q pair at q = 2".into(),
                ))
            }));
        }
    }
    for q in [2, 3, 4] {
        out.push(Check::run(
            format!("modular/level-T-relation/q={q}"),
            || {
                Ok((
                    verify_level_t_relation(q)?,
                    "factorization and v0 parametrization".into(),
                ))
            },
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        base_field(2).unwrap()
    }

    #[test]
    fn checksums_hold() {
        assert_eq!(verify_checksums().unwrap(), 24);
    }

    #[test]
    fn degree_formula_values() {
        let d = |s: &str| degree_formula(&MPoly::parse(&f2(), s).unwrap()).unwrap();
        assert_eq!(d("T"), 3);
        assert_eq!(d("T^2 + T + 1"), 5);
        assert_eq!(d("T^2 + T"), 9);
        assert_eq!(d("T^2"), 6);
        assert!(degree_formula(&MPoly::zero(&f2())).is_err());
    }

    #[test]
    fn level_t() {
        let data = ModularData::load("T").unwrap();
        assert_eq!(data.verify_symmetry(), Some(true));
        assert!(data.verify_parametrization().unwrap());
        assert!(data.verify_factorization().unwrap());
        assert_eq!(data.verify_psi().unwrap(), Some(true));
        let (ok, got) = data
            .check_reduction(
                &MPoly::parse(&f2(), "T + 1").unwrap(),
                "X^2 + XY^2 + XY + Y",
            )
            .unwrap();
        assert!(ok, "{got}");
    }

    #[test]
    fn unknown_level() {
        assert!(ModularData::load("T + 1").is_err());
        assert!(run_checks(3).is_err());
    }

    #[test]
    fn outcome_is_frozen() {
        let checks = run_checks(2).unwrap();
        let mut failed: Vec<&str> = checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name.as_str())
            .collect();
        failed.sort();
        assert_eq!(failed, KNOWN_SOURCE_DISCREPANCIES, "{checks:#?}");
    }
}
