//! Primes `L` of `F_q[T]` together with their residue fields.

use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{monic_irreducibles, Field, FieldCtx, FieldElem};
use crate::polys::{MPoly, Residue, Var};

/// A monic irreducible `L` in `F_q[T]`, the residue field `F_L`, the image
/// `alpha` of `T` and the quadratic extension `F_L^(2)`.
#[derive(Clone, Debug)]
pub struct Prime {
    poly: MPoly,
    degree: usize,
    residue: Residue,
    quadratic: Field,
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl Prime {
    pub fn new(base: &Field, l: &MPoly) -> Result<Self> {
        if **l.ctx() != **base {
            return Err(Error::Invalid(format!(
                "{l} is not defined over F_{}",
                base.size()
            )));
        }
        let not_prime = || Error::NotPrime(l.to_string());
        if l.vars().iter().any(|&v| v != Var::T) {
            return Err(not_prime());
        }
        let dense = l.to_dense(Var::T)?;
        if !dense.is_monic(base) || !dense.is_irreducible(base) {
            return Err(not_prime());
        }
        let residue = Residue::new(base, l, None)?;
        let quadratic = FieldCtx::quadratic_extension(residue.residue_field())?;
        Ok(Prime {
            poly: l.clone(),
            degree: dense.degree().unwrap_or(0),
            residue,
            quadratic,
        })
    }

    pub fn parse(base: &Field, src: &str) -> Result<Self> {
        Self::new(base, &MPoly::parse(base, src)?)
    }

    /// Monic irreducibles of degree `1..=max_degree`, in enumeration order.
    pub fn all_up_to(base: &Field, max_degree: usize) -> Result<Vec<Prime>> {
        let mut out = Vec::new();
        for d in 1..=max_degree {
            for p in monic_irreducibles(base, d) {
                out.push(Prime::new(base, &MPoly::from_dense(base, Var::T, &p))?);
            }
        }
        Ok(out)
    }

    /// The primes `L != T` with `|F_L^(2)| <= 81`, the desk-scale test set.
    pub fn envelope(base: &Field) -> Result<Vec<Prime>> {
        let q = base.size();
        let mut d = 0;
        while q.pow(2 * (d as u32 + 1)) <= 81 {
            d += 1;
        }
        Ok(Self::all_up_to(base, d)?
            .into_iter()
            .filter(|p| !p.is_t())
            .collect())
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &Field {
        self.residue.source()
    }

    pub fn q(&self) -> u64 {
        self.base().size()
    }

    /// `F_L`.
    pub fn residue_field(&self) -> &Field {
        self.residue.residue_field()
    }

    /// `F_L^(2)`.
    pub fn quadratic(&self) -> &Field {
        &self.quadratic
    }

    /// `T mod L` in `F_L`.
    pub fn alpha(&self) -> FieldElem {
        self.residue.alpha()
    }

    pub fn residue(&self) -> &Residue {
        &self.residue
    }

    /// `m_d = (q^d - 1)/(q - 1)`.
    pub fn m_d(&self) -> u64 {
        (self.q().pow(self.degree as u32) - 1) / (self.q() - 1)
    }

    pub fn is_t(&self) -> bool {
        self.poly == MPoly::var(self.base(), Var::T)
    }

    pub fn require_not_t(&self) -> Result<()> {
        if self.is_t() {
            Err(Error::ExcludedPrime(self.poly.to_string()))
        } else {
            Ok(())
        }
    }

    /// A residue map from `F_q[T]` into `target`, which must contain `F_L`.
    pub fn residue_into(&self, target: &Field) -> Result<Residue> {
        Ok(Residue::new(self.base(), &self.poly, Some(target))?)
    }
}
