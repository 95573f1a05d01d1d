//! Flatness checks for the two one-parameter families of ideals along which
//! a generalized line bundle specializes, with `α` specialized to a nonzero
//! scalar `t` (generic fiber) and to `0` (special fiber).

use serde::Serialize;

use super::field;
use super::ideal::{standard_ideal, EpsIdeal, EpsPoly};
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::report::Check;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeformationReport {
    pub family: String,
    pub b: usize,
    pub p: u64,
    pub t: u64,
    pub generic_fiber: String,
    pub special_fiber: String,
    pub checks: Vec<Check>,
}

impl DeformationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn nonzero_parameter(p: u64, t: i64) -> Result<u64> {
    field::check_prime(p)?;
    let t = field::reduce(t, p);
    if t == 0 {
        return Err(Error::ZeroParameter);
    }
    Ok(t)
}

fn eq_check(name: &str, got: &EpsIdeal, want: &EpsIdeal) -> Check {
    Check::new(name, got == want, format!("{got} vs {want}"))
}

fn value_check(name: &str, got: Result<usize>, want: usize) -> Check {
    match got {
        Ok(v) => Check::new(name, v == want, format!("{v} (expected {want})")),
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

/// Generators of the first family at parameter `α = a`:
/// `ε(s - a)`, `s^b(ε - a^{b+1}(s - a))`, `s^b(s - a)²`, `ε - a·s^b(s - a)`.
pub fn deformation_i_generators(b0: usize, p: u64, a: i64) -> Vec<EpsPoly> {
    let lin = Poly::linear(p, a);
    let s_b = Poly::monomial(p, 1, b0);
    let s_b_lin = &s_b * &lin;
    let a_pow = Poly::constant(p, field::pow(field::reduce(a, p), b0 as u64 + 1, p) as i64);
    vec![
        EpsPoly::new(Poly::zero(p), lin.clone()),
        EpsPoly::new(-&(&a_pow * &s_b_lin), s_b.clone()),
        EpsPoly::from_poly(&s_b_lin * &lin),
        EpsPoly::new(-&(&Poly::constant(p, a) * &s_b_lin), Poly::one(p)),
    ]
}

pub fn verify_deformation_i(b0: usize, p: u64, t: i64) -> Result<DeformationReport> {
    let tv = nonzero_parameter(p, t)?;
    let t = tv as i64;
    let generic = EpsIdeal::from_generators(p, &deformation_i_generators(b0, p, t))?;
    let special = EpsIdeal::from_generators(p, &deformation_i_generators(b0, p, 0))?;

    let t_pow = field::pow(tv, b0 as u64 + 1, p) as i64;
    let curvilinear = EpsIdeal::from_generators(
        p,
        &[
            EpsPoly::new(
                -&(&Poly::constant(p, t_pow) * &Poly::linear(p, t)),
                Poly::one(p),
            ),
            EpsPoly::from_poly(Poly::linear(p, t).pow(2)),
        ],
    )?;
    let expected_generic = standard_ideal(p, b0)?.intersect(&curvilinear)?;
    let model = standard_ideal(p, b0 + 2)?;

    let checks = vec![
        eq_check("generic-fiber-is-intersection", &generic, &expected_generic),
        eq_check("special-fiber-is-model", &special, &model),
        value_check("colength-generic", generic.colength(), b0 + 2),
        value_check("colength-special", special.colength(), b0 + 2),
        value_check("local-index-at-0", generic.local_index_at(0), b0),
        value_check("local-index-at-t", generic.local_index_at(t), 0),
    ];
    Ok(DeformationReport {
        family: "I".into(),
        b: b0,
        p,
        t: tv,
        generic_fiber: generic.to_string(),
        special_fiber: special.to_string(),
        checks,
    })
}

/// Generators of the second family at `α = a`: `ε`, `s^b(s - a)`.
pub fn deformation_ii_generators(b1: usize, p: u64, a: i64) -> Vec<EpsPoly> {
    vec![
        EpsPoly::epsilon(p),
        EpsPoly::from_poly(&Poly::monomial(p, 1, b1) * &Poly::linear(p, a)),
    ]
}

pub fn verify_deformation_ii(b1: usize, p: u64, t: i64) -> Result<DeformationReport> {
    if b1 == 0 {
        return Err(Error::InvalidArgument("b1 must be positive".into()));
    }
    let tv = nonzero_parameter(p, t)?;
    let t = tv as i64;
    let generic = EpsIdeal::from_generators(p, &deformation_ii_generators(b1, p, t))?;
    let special = EpsIdeal::from_generators(p, &deformation_ii_generators(b1, p, 0))?;
    let model = standard_ideal(p, b1 + 1)?;

    let checks = vec![
        eq_check("special-fiber-is-model", &special, &model),
        value_check("colength-generic", generic.colength(), b1 + 1),
        value_check("colength-special", special.colength(), b1 + 1),
        value_check("local-index-at-0", generic.local_index_at(0), b1),
        value_check("local-index-at-t", generic.local_index_at(t), 1),
    ];
    Ok(DeformationReport {
        family: "II".into(),
        b: b1,
        p,
        t: tv,
        generic_fiber: generic.to_string(),
        special_fiber: special.to_string(),
        checks,
    })
}
