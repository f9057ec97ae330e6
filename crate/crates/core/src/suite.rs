//! The verification suites behind `towerforge verify`.

use std::fmt;

use num_rational::Ratio;

use crate::check::Check;
use crate::deuring::{DeuringFamily, SplitTag};
use crate::drinfeld::supersingular_u_set;
use crate::error::{Error, Result};
use crate::fields::{base_field, Field};
use crate::modular;
use crate::polys::RatFun;
use crate::primes::Prime;
use crate::towers::{self, dv_reports, genus_e, make_tower, TowerKind, TowerSpec};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Deuring,
    Drinfeld,
    Modular,
    Towers,
}

impl Scope {
    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "all" => Scope::All,
            "deuring" => Scope::Deuring,
            "drinfeld" => Scope::Drinfeld,
            "modular" => Scope::Modular,
            "towers" => Scope::Towers,
            _ => return None,
        })
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::All => "all",
            Scope::Deuring => "deuring",
            Scope::Drinfeld => "drinfeld",
            Scope::Modular => "modular",
            Scope::Towers => "towers",
        })
    }
}

/// Runs one scope for one `q`. The suites of `all` run in parallel and are
/// reported in the fixed order deuring, drinfeld, modular, towers.
pub fn run(scope: Scope, q: u64, seed: u64) -> Result<Vec<Check>> {
    let base = base_field(q)?;
    match scope {
        Scope::Deuring => deuring_checks(&base, seed),
        Scope::Drinfeld => drinfeld_checks(&base),
        Scope::Modular => modular::run_checks(q),
        Scope::Towers => tower_checks(q),
        Scope::All => {
            let ((d, r), (m, t)) = rayon::join(
                || rayon::join(|| deuring_checks(&base, seed), || drinfeld_checks(&base)),
                || {
                    rayon::join(
                        || {
                            if q == 2 {
                                modular::run_checks(q)
                            } else {
                                Ok(vec![Check::skipped(
                                    "modular",
                                    format!("no modular data for q = {q}"),
                                )])
                            }
                        },
                        || tower_checks(q),
                    )
                },
            );
            Ok([d?, r?, m?, t?].concat())
        }
    }
}

pub fn deuring_checks(base: &Field, seed: u64) -> Result<Vec<Check>> {
    let q = base.size();
    let family = DeuringFamily::new(base);
    let mut out = Vec::new();
    for i in 0..=5usize {
        out.push(Check::run(format!("deuring/consistency/q={q}/i={i}"), || {
            let two_term = family.p_exact(i as i64)?;
            let one_term = family.p_exact_depth1(i)?;
            let sign = RatFun::from(crate::polys::MPoly::from_int(base, if i % 2 == 0 { 1 } else { -1 }));
            let at_zero = two_term.at_zero().equals(&sign)?;
            let m = family.expected_degree(i)?;
            let deg = two_term.degree_s() as u64;
            let same = two_term == one_term;
            Ok((
                same && at_zero && deg == m,
                format!("recursions agree: {same}; p_i(0) = (-1)^i: {at_zero}; deg_s {deg} (expected {m})"),
            ))
        }));
    }
    for i in 1..=4usize {
        out.push(Check::run(format!("deuring/reflected/q={q}/i={i}"), || {
            let c = family.verify_reflected_recursion(i)?;
            Ok((c.holds, witness_detail(c.witness.as_ref())))
        }));
    }
    let exact_max = if q <= 3 { 3 } else { 2 };
    for i in 0..=exact_max {
        out.push(Check::run(
            format!("deuring/substitution/q={q}/i={i}"),
            || {
                let c = family.verify_substitution_identity(i)?;
                Ok((c.holds, witness_detail(c.witness.as_ref())))
            },
        ));
    }
    out.push(Check::run(
        format!("deuring/substitution-random/q={q}/i=4"),
        || {
            let c = family.verify_substitution_identity_random(4, 20, seed)?;
            Ok((
                c.holds(),
                format!(
                    "{} points over F_{}, seed {seed}, {} failures",
                    c.points.len(),
                    c.field.size(),
                    c.failures.len()
                ),
            ))
        },
    ));
    for prime in Prime::envelope(base)? {
        let tag = prime.to_string().replace(' ', "");
        out.push(Check::run(
            format!("deuring/reduced-roots/q={q}/L={tag}"),
            || {
                let r = family.check_reduced_roots(&prime)?;
                Ok((
                    r.passes,
                    format!(
                        "{} roots in F_{}, m_d = {}, all simple: {}",
                        r.roots.len(),
                        r.field.size(),
                        r.m_d,
                        r.all_simple
                    ),
                ))
            },
        ));
        out.push(Check::run(format!("deuring/split-E/q={q}/L={tag}"), || {
            let s = family.splitting_set(&prime, SplitTag::E, None)?;
            Ok((
                s.actual() as u64 == s.predicted,
                format!("|S| = {}, predicted {}", s.actual(), s.predicted),
            ))
        }));
        out.push(Check::run(
            format!("deuring/roots-are-powers/q={q}/L={tag}"),
            || {
                Ok((
                    family.roots_are_powers(&prime)?,
                    "roots of p_d and members of S_E are (q-1)-st powers".into(),
                ))
            },
        ));
    }
    Ok(out)
}

fn witness_detail(w: Option<&crate::polys::MPoly>) -> String {
    match w {
        None => "exact identity".into(),
        Some(p) => format!("difference has {} terms", p.num_terms()),
    }
}

pub fn drinfeld_checks(base: &Field) -> Result<Vec<Check>> {
    let q = base.size();
    let family = DeuringFamily::new(base);
    let mut out = Vec::new();
    for prime in Prime::envelope(base)? {
        let tag = prime.to_string().replace(' ', "");
        out.push(Check::run(
            format!("drinfeld/supersingular/q={q}/L={tag}"),
            || {
                let r = supersingular_u_set(&family, &prime)?;
                Ok((
                    r.passes(),
                    format!(
                        "{} values by height, {} via p_d, m_d = {}",
                        r.oracle.len(),
                        r.via_p_d.len(),
                        r.m_d
                    ),
                ))
            },
        ));
    }
    if q == 2 {
        out.push(Check::run("drinfeld/supersingular/q=2/L=T+1/u=1", || {
            let prime = Prime::parse(base, "T + 1")?;
            let r = supersingular_u_set(&family, &prime)?;
            Ok((
                r.oracle == vec![r.field.one()],
                format!("{:?}", r.to_json().u_values),
            ))
        }));
    }
    Ok(out)
}

/// The primes and certification depth used for one `q`.
fn tower_plan(q: u64) -> (Vec<&'static str>, usize) {
    match q {
        2 => (vec!["T + 1", "T^2 + T + 1"], 6),
        3 => (vec!["T - 1"], 4),
        _ => (vec!["T - 1"], 3),
    }
}

/// Towers, band checks and genus facts for one `q`.
pub fn tower_checks(q: u64) -> Result<Vec<Check>> {
    let base = base_field(q)?;
    let mut out = Vec::new();
    if q <= 4 {
        out.extend(towers::identity_suite(q));
    } else {
        out.push(Check::skipped(
            format!("towers/identities/q={q}"),
            "identity suite runs for q <= 4",
        ));
    }
    out.extend(towers::specialization_checks());

    let (primes, depth) = tower_plan(q);
    let family = DeuringFamily::new(&base);
    for l in &primes {
        let prime = Prime::parse(&base, l)?;
        let tag = l.replace(' ', "");
        for kind in [TowerKind::E, TowerKind::F] {
            let name = |s: &str| format!("towers/{kind}^({tag})/q={q}/{s}");
            out.push(Check::run(name("split-size"), || {
                let t = make_tower(kind, q, Some(l), None, None, None)?;
                let (rule, set) = t.splitting_set()?;
                let split_tag = match rule.as_str() {
                    "deuring-E" => SplitTag::E,
                    "deuring-F" => SplitTag::F,
                    _ => SplitTag::FAlt,
                };
                let predicted = family.splitting_set(&prime, split_tag, None)?.predicted;
                let want = if kind == TowerKind::E {
                    q * prime.m_d()
                } else {
                    predicted
                };
                Ok((
                    set.len() as u64 == want,
                    format!("{rule}: |S| = {}, expected {want}", set.len()),
                ))
            }));
            out.push(Check::run(name(&format!("certify/n={depth}")), || {
                let t = make_tower(kind, q, Some(l), None, None, None)?;
                let (_, set) = t.splitting_set()?;
                let c = t.certify_splitting(&set, depth)?;
                Ok((
                    c.certified() && !set.is_empty(),
                    format!(
                        "{} points x {} chains, complete: {}, closed: {}, N_lb = {}",
                        c.split_size,
                        c.expected,
                        c.complete(),
                        c.closed(),
                        c.n_lb
                    ),
                ))
            }));
        }
    }

    for (kind, l) in dv_plan(q) {
        let tag = l.replace(' ', "");
        out.push(Check::run(
            format!("towers/dv-band/{kind}^({tag})/q={q}/n=10"),
            || {
                let t = make_tower(kind, q, Some(l), None, None, None)?;
                dv_band(&t, 10)
            },
        ));
    }

    out.push(Check::run(format!("towers/genus-E-flags/q={q}"), || {
        let flagged: Vec<u32> = (0..=20).filter(|&n| !genus_e(n, q).is_valid()).collect();
        let (qi, d) = (q as i128, (q * q - 1) as i128);
        let odd: Vec<u32> = (0..=20u32)
            .filter(|&n| {
                let low = |e: i64| if e < 0 { None } else { Some(qi.pow(e as u32)) };
                let tail = low((n as i64 - 1).div_euclid(2));
                let top = qi.pow(n + 2) + qi.pow(n + 1) - (qi + 1) * (2 + qi + qi.pow(2 + n / 2));
                match tail {
                    Some(t) => {
                        let num = top - (qi + 1) * t;
                        num % d != 0 || num / d <= 0
                    }
                    None => true,
                }
            })
            .collect();
        Ok((
            flagged == odd,
            format!("flagged levels {flagged:?}; ratios use unflagged levels >= 3 only"),
        ))
    }));
    out.push(Check::run(format!("towers/genus-bound/q={q}"), || {
        let bad: Vec<u32> = (0..=20)
            .filter(|&n| !towers::genus_bound_holds(n, q))
            .collect();
        Ok((
            bad.is_empty(),
            format!("(g - 1)/q^n <= q for n <= 20; failures {bad:?}"),
        ))
    }));
    out.push(Check::run(
        format!("towers/gamma(1)=F(T-1)/q={q}/N_lb"),
        || {
            let levels = [1, 2, 3];
            let g = make_tower(TowerKind::Gamma, q, None, Some("1"), None, None)?;
            let f = make_tower(TowerKind::F, q, Some("T - 1"), None, None, None)?;
            let col = |t: &TowerSpec| -> Result<Vec<u128>> {
                Ok(dv_reports(t, &levels)?.iter().map(|r| r.n_lb).collect())
            };
            let (a, b) = (col(&g)?, col(&f)?);
            Ok((a == b, format!("gamma {a:?}, F {b:?}")))
        },
    ));
    Ok(out)
}

fn dv_plan(q: u64) -> Vec<(TowerKind, &'static str)> {
    match q {
        2 => vec![
            (TowerKind::E, "T + 1"),
            (TowerKind::E, "T^2 + T + 1"),
            (TowerKind::F, "T + 1"),
        ],
        3 => vec![(TowerKind::F, "T - 1")],
        _ => Vec::new(),
    }
}

/// `N_lb(n) / g_n` within `[0.8, 1.25]` times the bound, compared exactly.
pub fn dv_band(tower: &TowerSpec, n: usize) -> Result<(bool, String)> {
    let report = dv_reports(tower, &[n])?.remove(0);
    let genus = report
        .genus
        .as_deref()
        .ok_or_else(|| Error::Invalid("tower has no genus formula".into()))?;
    if let Some(a) = &report.genus_anomaly {
        return Ok((false, format!("genus {genus} flagged: {a}")));
    }
    let g: Ratio<i128> = genus
        .parse()
        .map_err(|_| Error::Invalid(format!("genus {genus}")))?;
    let ratio = Ratio::from_integer(report.n_lb as i128) / g;
    let size = tower.field().size() as i128;
    let root = (1..=size)
        .find(|r| r * r == size)
        .ok_or_else(|| Error::Invalid("|K| is not a square".into()))?;
    let bound = Ratio::from_integer(root - 1);
    let (lo, hi) = (bound * Ratio::new(4, 5), bound * Ratio::new(5, 4));
    let ok = report.complete && lo <= ratio && ratio <= hi;
    Ok((
        ok,
        format!(
            "N_lb = {}, g = {genus}, ratio {:.4}, bound {}, band [{:.2}, {:.2}]",
            report.n_lb,
            report.ratio.unwrap_or(f64::NAN),
            bound,
            to_f64(lo),
            to_f64(hi)
        ),
    ))
}

fn to_f64(r: Ratio<i128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
