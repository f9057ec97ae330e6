//! Recursive towers over finite fields: step relations, fiber enumeration,
//! splitting certification, genus formulas and point-count reports.

mod genus;
mod identities;
mod report;

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::dense::DensePoly;
use crate::deuring::{DeuringFamily, SplitTag};
use crate::error::{Error, Result};
use crate::fields::{base_field, Field, FieldCtx, FieldElem};
use crate::modular::ModularData;
use crate::polys::{format_elem, MPoly, RatFun, Residue, Root, Var};
use crate::primes::Prime;

pub use genus::{genus_bound_holds, genus_e, genus_f, GenusValue};
pub use identities::{
    identity_suite, specialization_checks, verify_identity_a, verify_identity_b, verify_identity_c,
    verify_identity_d, verify_identity_e,
};
pub use report::{dv_reports, reports_to_csv, SplitReport};

/// Default bound on `n * deg^n` for one fiber enumeration.
pub const DEFAULT_MAX_WORK: u128 = 1 << 22;

/// Environment variable overriding [`DEFAULT_MAX_WORK`].
pub const MAX_WORK_ENV: &str = "TOWERFORGE_MAX_WORK";

pub fn default_max_work() -> u128 {
    std::env::var(MAX_WORK_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_WORK)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TowerKind {
    E,
    F,
    Gamma,
    GammaY,
    Gs,
    Elkies,
    Example,
}

impl TowerKind {
    pub const ALL: [TowerKind; 7] = [
        TowerKind::E,
        TowerKind::F,
        TowerKind::Gamma,
        TowerKind::GammaY,
        TowerKind::Gs,
        TowerKind::Elkies,
        TowerKind::Example,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TowerKind::E => "E",
            TowerKind::F => "F",
            TowerKind::Gamma => "gamma",
            TowerKind::GammaY => "gamma-y",
            TowerKind::Gs => "gs",
            TowerKind::Elkies => "elkies",
            TowerKind::Example => "example",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for TowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusSelector {
    EType,
    FType,
    None,
}

/// `R(X, Y) = B(X) A(Y) - C(X)`, which lets roots be read off a fiber table
/// of `A`.
#[derive(Clone, Debug)]
struct Separated {
    a: DensePoly,
    b: DensePoly,
    c: DensePoly,
}

/// Result of specializing the step relation at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Degenerate,
    Roots(Vec<Root>),
}

/// A depth-one recursive tower `R(x_{i-1}, x_i) = 0` over a finite field.
#[derive(Clone, Debug)]
pub struct TowerSpec {
    kind: TowerKind,
    q: u64,
    field: Field,
    relation: MPoly,
    degree: usize,
    prime: Option<Prime>,
    gamma: Option<String>,
    genus: GenusSelector,
    separated: Option<Separated>,
    max_work: u128,
    table: OnceLock<std::result::Result<Vec<Step>, Error>>,
}

/// A rational point of level `n` over a starting value, by coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain {
    pub elements: Vec<FieldElem>,
}

impl Chain {
    pub fn level(&self) -> usize {
        self.elements.len() - 1
    }
}

#[derive(Clone, Debug)]
pub struct Fiber {
    pub chains: Vec<Chain>,
    pub complete: bool,
}

/// Per-point outcome of the counting walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberStats {
    pub start: FieldElem,
    pub chains: u128,
    pub complete: bool,
    pub closed: bool,
}

#[derive(Clone, Debug)]
pub struct Certification {
    pub level: usize,
    pub split_size: usize,
    /// `deg^level`, the chain count of a fully split point.
    pub expected: u128,
    pub points: Vec<FiberStats>,
    pub n_lb: u128,
}

impl Certification {
    pub fn complete(&self) -> bool {
        self.points
            .iter()
            .all(|p| p.complete && p.chains == self.expected)
    }

    pub fn closed(&self) -> bool {
        self.points.iter().all(|p| p.closed)
    }

    pub fn certified(&self) -> bool {
        self.complete() && self.closed()
    }
}

fn poly_pow(p: &DensePoly, e: u64, k: &FieldCtx) -> DensePoly {
    (0..e).fold(DensePoly::constant(k.one()), |acc, _| acc.mul(p, k))
}

impl TowerSpec {
    fn separated(
        kind: TowerKind,
        field: Field,
        q: u64,
        sep: Separated,
        prime: Option<Prime>,
        gamma: Option<String>,
        genus: GenusSelector,
    ) -> Self {
        let a = MPoly::from_dense(&field, Var::Y, &sep.a);
        let b = MPoly::from_dense(&field, Var::X, &sep.b);
        let c = MPoly::from_dense(&field, Var::X, &sep.c);
        let relation = (&b * &a - c).make_monic();
        let degree = relation.degree_in(Var::Y);
        TowerSpec {
            kind,
            q,
            field,
            relation,
            degree,
            prime,
            gamma,
            genus,
            separated: Some(sep),
            max_work: default_max_work(),
            table: OnceLock::new(),
        }
    }

    /// `(y+1)^{q-1} y = c x^q / (x+1)^{q-1}` over `k`.
    fn e_shape(k: &Field, q: u64, c: FieldElem) -> Result<Separated> {
        let one = k.one();
        let x_plus_1 = DensePoly::new(vec![one, one]);
        let a = poly_pow(&x_plus_1, q - 1, k).mul(&DensePoly::x(k), k);
        let b = poly_pow(&x_plus_1, q - 1, k);
        let c = poly_pow(&DensePoly::x(k), q, k).scale(c, k);
        Ok(Separated { a, b, c })
    }

    /// `y^q + y = c x^q / (x^{q-1} + 1)` over `k`.
    fn f_shape(k: &Field, q: u64, c: FieldElem) -> Result<Separated> {
        let one = k.one();
        let mut a = vec![k.zero(); q as usize + 1];
        a[1] = one;
        a[q as usize] = k.add(a[q as usize], one);
        let mut b = vec![k.zero(); q as usize];
        b[0] = one;
        b[q as usize - 1] = k.add(b[q as usize - 1], one);
        let c = poly_pow(&DensePoly::x(k), q, k).scale(c, k);
        Ok(Separated {
            a: DensePoly::new(a),
            b: DensePoly::new(b),
            c,
        })
    }

    /// `E^(L)` over `F_L^(2)`: `(y+1)^{q-1} y = x^q / (alpha^{q-1} (x+1)^{q-1})`.
    pub fn e(prime: &Prime) -> Result<Self> {
        prime.require_not_t()?;
        let k = prime.quadratic().clone();
        let q = prime.q();
        let alpha = prime.residue_into(&k)?.alpha();
        let c = k.inv(k.pow(alpha, q - 1))?;
        let sep = Self::e_shape(&k, q, c)?;
        Ok(Self::separated(
            TowerKind::E,
            k,
            q,
            sep,
            Some(prime.clone()),
            None,
            GenusSelector::EType,
        ))
    }

    /// `F^(L)` over `F_L^(2)`: `y^q + y = x^q / (alpha (x^{q-1} + 1))`.
    pub fn f(prime: &Prime) -> Result<Self> {
        prime.require_not_t()?;
        let k = prime.quadratic().clone();
        let q = prime.q();
        let alpha = prime.residue_into(&k)?.alpha();
        let sep = Self::f_shape(&k, q, k.inv(alpha)?)?;
        Ok(Self::separated(
            TowerKind::F,
            k,
            q,
            sep,
            Some(prime.clone()),
            None,
            GenusSelector::FType,
        ))
    }

    /// `y^q + y = gamma x^q / (x^{q-1} + 1)` over the quadratic extension of
    /// `gamma_field`, which must extend `F_q`.
    pub fn gamma(q: u64, gamma_field: &Field, gamma: FieldElem) -> Result<Self> {
        let (k, g) = Self::gamma_setup(q, gamma_field, gamma)?;
        let sep = Self::f_shape(&k, q, g)?;
        let label = format_elem(gamma_field, gamma);
        Ok(Self::separated(
            TowerKind::Gamma,
            k,
            q,
            sep,
            None,
            Some(label),
            GenusSelector::FType,
        ))
    }

    /// `(y+1)^{q-1} y = gamma^{q-1} x^q / (x+1)^{q-1}`.
    pub fn gamma_y(q: u64, gamma_field: &Field, gamma: FieldElem) -> Result<Self> {
        let (k, g) = Self::gamma_setup(q, gamma_field, gamma)?;
        let sep = Self::e_shape(&k, q, k.pow(g, q - 1))?;
        let label = format_elem(gamma_field, gamma);
        Ok(Self::separated(
            TowerKind::GammaY,
            k,
            q,
            sep,
            None,
            Some(label),
            GenusSelector::EType,
        ))
    }

    fn gamma_setup(q: u64, gamma_field: &Field, gamma: FieldElem) -> Result<(Field, FieldElem)> {
        if gamma.is_zero() {
            return Err(Error::Invalid("gamma must be nonzero".into()));
        }
        let base = base_field(q)?;
        if !gamma_field.embeds(&base) {
            return Err(Error::Invalid(format!(
                "the field of gamma does not contain F_{q}"
            )));
        }
        let k = FieldCtx::quadratic_extension(gamma_field)?;
        let g = k.lift(gamma_field, gamma)?;
        Ok((k, g))
    }

    /// The tower of Garcia and Stichtenoth over `F_{q^2}`.
    pub fn gs(q: u64) -> Result<Self> {
        let base = base_field(q)?;
        let mut t = Self::gamma(q, &base, base.one())?;
        t.kind = TowerKind::Gs;
        t.gamma = None;
        Ok(t)
    }

    /// Elkies' reduction at `T - 1` over `F_{q^2}`.
    pub fn elkies(q: u64) -> Result<Self> {
        let base = base_field(q)?;
        let mut t = Self::gamma_y(q, &base, base.one())?;
        t.kind = TowerKind::Elkies;
        t.gamma = None;
        Ok(t)
    }

    /// The reduction of `f_P` modulo `L` over `F_L^(2)`, for one of the
    /// embedded `q = 2` levels.
    pub fn example(level: &str, prime: &Prime) -> Result<Self> {
        let data = ModularData::load(level)?;
        if **prime.base() != **data.ctx() {
            return Err(Error::Invalid("example towers exist only for q = 2".into()));
        }
        if data.level().exact_divide(prime.poly())?.is_some() {
            return Err(Error::ExcludedPrime(prime.to_string()));
        }
        let k = prime.quadratic().clone();
        let relation = Residue::new(data.ctx(), prime.poly(), Some(&k))?
            .reduce(data.f_p()?)?
            .make_monic();
        let degree = relation.degree_in(Var::Y);
        Ok(TowerSpec {
            kind: TowerKind::Example,
            q: 2,
            field: k,
            relation,
            degree,
            prime: Some(prime.clone()),
            gamma: None,
            genus: GenusSelector::None,
            separated: None,
            max_work: default_max_work(),
            table: OnceLock::new(),
        })
    }

    pub fn with_max_work(mut self, limit: u128) -> Self {
        self.max_work = limit;
        self
    }

    pub fn kind(&self) -> TowerKind {
        self.kind
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `R(X, Y)` with `X` the previous and `Y` the next coordinate, scaled
    /// so its leading coefficient is 1.
    pub fn relation(&self) -> &MPoly {
        &self.relation
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn prime(&self) -> Option<&Prime> {
        self.prime.as_ref()
    }

    pub fn gamma_label(&self) -> Option<&str> {
        self.gamma.as_deref()
    }

    pub fn genus_selector(&self) -> GenusSelector {
        self.genus
    }

    pub fn max_work(&self) -> u128 {
        self.max_work
    }

    /// `sqrt|K| - 1`.
    pub fn dv_bound(&self) -> f64 {
        (self.field.size() as f64).sqrt() - 1.0
    }

    fn compute_step(&self, a: FieldElem) -> Step {
        let k = &self.field;
        let coeffs: Vec<FieldElem> = self
            .relation
            .coefficients_in(Var::Y)
            .iter()
            .map(|c| c.eval(&[(Var::X, a)]).expect("bivariate relation"))
            .collect();
        let poly = DensePoly::new(coeffs);
        if poly.is_zero() {
            return Step::Degenerate;
        }
        let deriv = poly.derivative(k);
        let roots = k
            .elements()
            .expect("field size checked")
            .filter(|&b| poly.eval(b, k).is_zero())
            .map(|b| Root {
                value: b,
                simple: !deriv.eval(b, k).is_zero(),
            })
            .collect();
        Step::Roots(roots)
    }

    fn build_table(&self) -> Result<Vec<Step>> {
        let k = &self.field;
        let elements = k.enumerate()?;
        let Some(sep) = &self.separated else {
            if k.size() > 1 << 12 {
                return Err(Error::Guard {
                    what: "field size for a generic step table",
                    value: k.size() as u128,
                    limit: 1 << 12,
                });
            }
            return Ok(elements.par_iter().map(|&a| self.compute_step(a)).collect());
        };
        let mut fibers: Vec<Vec<FieldElem>> = vec![Vec::new(); elements.len()];
        for &b in &elements {
            fibers[sep.a.eval(b, k).index() as usize].push(b);
        }
        let da = sep.a.derivative(k);
        Ok(elements
            .par_iter()
            .map(|&a| {
                let (ba, ca) = (sep.b.eval(a, k), sep.c.eval(a, k));
                if ba.is_zero() {
                    return if ca.is_zero() {
                        Step::Degenerate
                    } else {
                        Step::Roots(Vec::new())
                    };
                }
                let target = k.div(ca, ba).expect("nonzero");
                let roots = fibers[target.index() as usize]
                    .iter()
                    .map(|&b| Root {
                        value: b,
                        simple: !da.eval(b, k).is_zero(),
                    })
                    .collect();
                Step::Roots(roots)
            })
            .collect())
    }

    fn table(&self) -> Result<&[Step]> {
        match self.table.get_or_init(|| self.build_table()) {
            Ok(t) => Ok(t),
            Err(e) => Err(e.clone()),
        }
    }

    /// Roots of `R(a, Y)` in `K`, in element order.
    pub fn step_roots(&self, a: FieldElem) -> Result<&[Root]> {
        if !self.field.contains(a) {
            return Err(Error::Invalid(format!(
                "{} is not in the tower's field",
                a.index()
            )));
        }
        match &self.table()?[a.index() as usize] {
            Step::Degenerate => Err(Error::Degenerate(format_elem(&self.field, a))),
            Step::Roots(r) => Ok(r),
        }
    }

    fn step_is_full(&self, roots: &[Root]) -> bool {
        roots.len() == self.degree && roots.iter().all(|r| r.simple)
    }

    fn check_work(&self, n: usize) -> Result<()> {
        let work = (self.degree as u128)
            .checked_pow(n as u32)
            .and_then(|x| x.checked_mul(n as u128))
            .unwrap_or(u128::MAX);
        if work > self.max_work {
            return Err(Error::Guard {
                what: "n * deg^n",
                value: work,
                limit: self.max_work,
            });
        }
        Ok(())
    }

    /// All chains `(a, a_1, ..., a_n)` in lexicographic order.
    pub fn fiber_enumerate(&self, a: FieldElem, n: usize) -> Result<Fiber> {
        self.check_work(n)?;
        let table = self.table()?;
        let mut chains = Vec::new();
        let mut complete = true;
        let mut path = vec![a];
        self.enumerate_from(table, n, &mut path, &mut chains, &mut complete);
        Ok(Fiber { chains, complete })
    }

    fn enumerate_from(
        &self,
        table: &[Step],
        left: usize,
        path: &mut Vec<FieldElem>,
        out: &mut Vec<Chain>,
        complete: &mut bool,
    ) {
        if left == 0 {
            out.push(Chain {
                elements: path.clone(),
            });
            return;
        }
        let here = *path.last().expect("nonempty");
        match &table[here.index() as usize] {
            Step::Degenerate => *complete = false,
            Step::Roots(roots) => {
                *complete &= self.step_is_full(roots);
                for r in roots {
                    path.push(r.value);
                    self.enumerate_from(table, left - 1, path, out, complete);
                    path.pop();
                }
            }
        }
    }

    /// Counts chains of length `n` over `a` without storing them, checking
    /// that every coordinate stays in `members` (sorted).
    pub fn fiber_stats(&self, a: FieldElem, n: usize, members: &[FieldElem]) -> Result<FiberStats> {
        self.check_work(n)?;
        let table = self.table()?;
        let mut stats = FiberStats {
            start: a,
            chains: 0,
            complete: true,
            closed: true,
        };
        self.count_from(table, a, n, members, &mut stats);
        Ok(stats)
    }

    fn count_from(
        &self,
        table: &[Step],
        a: FieldElem,
        left: usize,
        members: &[FieldElem],
        st: &mut FiberStats,
    ) {
        if left == 0 {
            st.chains += 1;
            return;
        }
        match &table[a.index() as usize] {
            Step::Degenerate => st.complete = false,
            Step::Roots(roots) => {
                st.complete &= self.step_is_full(roots);
                for r in roots {
                    st.closed &= members.binary_search(&r.value).is_ok();
                    self.count_from(table, r.value, left - 1, members, st);
                }
            }
        }
    }

    /// Fiber statistics at level `n` for every member of `set` (sorted).
    pub fn certify_splitting(&self, set: &[FieldElem], n: usize) -> Result<Certification> {
        self.check_work(n)?;
        self.table()?;
        let points = set
            .par_iter()
            .map(|&a| self.fiber_stats(a, n, set))
            .collect::<Result<Vec<_>>>()?;
        let n_lb = points.iter().map(|p| p.chains).sum();
        let expected = (self.degree as u128).pow(n as u32);
        Ok(Certification {
            level: n,
            split_size: set.len(),
            expected,
            points,
            n_lb,
        })
    }

    /// The largest `S` in `K` such that every `a` in `S` has `deg` simple
    /// roots, all of them in `S`.
    pub fn closed_split_locus(&self) -> Result<Vec<FieldElem>> {
        let table = self.table()?;
        let mut alive: Vec<bool> = table
            .iter()
            .map(|s| matches!(s, Step::Roots(r) if self.step_is_full(r)))
            .collect();
        loop {
            let mut changed = false;
            for (i, step) in table.iter().enumerate() {
                if !alive[i] {
                    continue;
                }
                if let Step::Roots(r) = step {
                    if r.iter().any(|root| !alive[root.value.index() as usize]) {
                        alive[i] = false;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Ok(self
            .field
            .elements()?
            .filter(|a| alive[a.index() as usize])
            .collect())
    }

    /// The splitting set used for reports, with the name of its rule.
    /// `E` towers use the Deuring set; `F` towers try both candidate sets
    /// and keep the first that certifies at level 1; the rest use the closed
    /// split locus.
    pub fn splitting_set(&self) -> Result<(String, Vec<FieldElem>)> {
        let deuring = |tag: SplitTag| -> Result<Vec<FieldElem>> {
            let prime = self.prime.as_ref().expect("E and F towers carry a prime");
            let family = DeuringFamily::new(prime.base());
            Ok(family.splitting_set(prime, tag, Some(&self.field))?.members)
        };
        match self.kind {
            TowerKind::E => Ok(("deuring-E".into(), deuring(SplitTag::E)?)),
            TowerKind::F => {
                let main = deuring(SplitTag::F)?;
                if self.certify_splitting(&main, 1)?.certified() && !main.is_empty() {
                    return Ok(("deuring-F".into(), main));
                }
                let alt = deuring(SplitTag::FAlt)?;
                if self.certify_splitting(&alt, 1)?.certified() && !alt.is_empty() {
                    return Ok(("deuring-F-alt".into(), alt));
                }
                Ok(("deuring-F".into(), main))
            }
            _ => Ok(("closed-locus".into(), self.closed_split_locus()?)),
        }
    }
}

/// Builds a tower from textual parameters as the command line supplies them.
///
/// * `l`: a prime of `F_q[T]` for `E`, `F` and `example`, and optionally for
///   the gamma towers, where `gamma` is then read in `F_q(T)` and reduced.
/// * `gamma_ext`: read `gamma` in `F_{q^k}` instead of `F_q`.
/// * `level`: the example level (`T`, `T^2 + T + 1` or `T^2 + T`).
pub fn make_tower(
    kind: TowerKind,
    q: u64,
    l: Option<&str>,
    gamma: Option<&str>,
    gamma_ext: Option<usize>,
    level: Option<&str>,
) -> Result<TowerSpec> {
    let base = base_field(q)?;
    let prime = l.map(|s| Prime::parse(&base, s)).transpose()?;
    let need_prime = || {
        prime
            .clone()
            .ok_or_else(|| Error::Invalid(format!("tower {kind} needs a prime L")))
    };
    match kind {
        TowerKind::E => TowerSpec::e(&need_prime()?),
        TowerKind::F => TowerSpec::f(&need_prime()?),
        TowerKind::Gs => TowerSpec::gs(q),
        TowerKind::Elkies => TowerSpec::elkies(q),
        TowerKind::Example => {
            let level =
                level.ok_or_else(|| Error::Invalid("example tower needs a level".into()))?;
            TowerSpec::example(level, &need_prime()?)
        }
        TowerKind::Gamma | TowerKind::GammaY => {
            let src = gamma.ok_or_else(|| Error::Invalid(format!("tower {kind} needs gamma")))?;
            let (field, g) = parse_gamma(&base, prime.as_ref(), src, gamma_ext)?;
            if kind == TowerKind::Gamma {
                TowerSpec::gamma(q, &field, g)
            } else {
                TowerSpec::gamma_y(q, &field, g)
            }
        }
    }
}

/// Reads `gamma` either in `F_q(T)` modulo `L`, in `F_{q^k}`, or in `F_q`.
pub fn parse_gamma(
    base: &Field,
    prime: Option<&Prime>,
    src: &str,
    ext: Option<usize>,
) -> Result<(Field, FieldElem)> {
    let constant = |r: &RatFun| -> Result<FieldElem> {
        let (n, d) = (r.num().constant_value(), r.den().constant_value());
        match (n, d) {
            (Some(n), Some(d)) => Ok(r.ctx().div(n, d)?),
            (None, _) if r.num().is_zero() => Ok(r.ctx().zero()),
            _ => Err(Error::Invalid(format!("gamma = {src} is not a constant"))),
        }
    };
    match (prime, ext) {
        (Some(_), Some(_)) => Err(Error::Invalid(
            "give either L or a gamma extension, not both".into(),
        )),
        (Some(p), None) => {
            let r = RatFun::parse(base, src)?;
            if r.num()
                .vars()
                .iter()
                .chain(r.den().vars().iter())
                .any(|&v| v != Var::T)
            {
                return Err(Error::Invalid(format!(
                    "gamma = {src} must be a function of T"
                )));
            }
            let reduced = p.residue().reduce_ratfun(&r)?;
            Ok((p.residue_field().clone(), constant(&reduced)?))
        }
        (None, ext) => {
            let field = match ext {
                Some(k) if k >= 1 => {
                    let size = base
                        .size()
                        .checked_pow(k as u32)
                        .ok_or_else(|| Error::Invalid("gamma extension too large".into()))?;
                    base_field(size)?
                }
                Some(_) => {
                    return Err(Error::Invalid(
                        "gamma extension degree must be positive".into(),
                    ))
                }
                None => base.clone(),
            };
            let r = RatFun::parse(&field, src)?;
            Ok((field, constant(&r)?))
        }
    }
}
