use std::fmt;

use num_traits::{One, Zero};

use super::poly::BiPoly;
use super::rational::{format_rational, is_minus_one, parse_rational, q, Q};
use crate::error::{Error, Result};

/// A unit times `z1^a1 z2^a2 z3^a3 z4^a4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZMonomial {
    pub unit: Q,
    pub z: [u32; 4],
}

impl ZMonomial {
    pub fn degree(&self) -> u32 {
        self.z.iter().sum()
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .z
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("z{}", i + 1)
                } else {
                    format!("z{}^{}", i + 1, a)
                }
            })
            .collect();
        if factors.is_empty() {
            return f.write_str(&format_rational(&self.unit));
        }
        let body = factors.join("*");
        if self.unit.is_one() {
            write!(f, "{body}")
        } else if is_minus_one(&self.unit) {
            write!(f, "-{body}")
        } else {
            write!(f, "{}*{}", format_rational(&self.unit), body)
        }
    }
}

/// Curve parameters and the derived linear forms
/// `z1 = y, z2 = x, z3 = x - y, z4 = x - lambda*y`, `F = z1 z2 z3 z4`.
#[derive(Clone, Debug)]
pub struct Context {
    lambda: Q,
    mu: Option<Q>,
    z: [BiPoly; 4],
    f: BiPoly,
}

impl Context {
    pub fn new(lambda: Q, mu: Option<Q>) -> Result<Self> {
        if lambda.is_zero() || lambda.is_one() {
            return Err(Error::InvalidParameter(format!(
                "lambda must avoid 0 and 1, got {}",
                format_rational(&lambda)
            )));
        }
        if let Some(m) = &mu {
            if m.is_zero() || m.is_one() {
                return Err(Error::InvalidEigenvalue(format!(
                    "mu must avoid 0 and 1, got {}",
                    format_rational(m)
                )));
            }
        }
        let x = BiPoly::x();
        let y = BiPoly::y();
        let z = [
            y.clone(),
            x.clone(),
            &x - &y,
            &x - &y.scale(&lambda),
        ];
        let f = &(&z[0] * &z[1]) * &(&z[2] * &z[3]);
        Ok(Context { lambda, mu, z, f })
    }

    /// lambda = 2, mu = 3.
    pub fn standard() -> Self {
        Context::new(q(2), Some(q(3))).expect("standard parameters are valid")
    }

    pub fn lambda(&self) -> &Q {
        &self.lambda
    }

    pub fn mu(&self) -> Option<&Q> {
        self.mu.as_ref()
    }

    pub fn with_mu(&self, mu: Option<Q>) -> Result<Self> {
        Context::new(self.lambda.clone(), mu)
    }

    /// `z_i` for `i` in `1..=4`.
    pub fn z(&self, i: usize) -> &BiPoly {
        assert!((1..=4).contains(&i), "z index out of range: {i}");
        &self.z[i - 1]
    }

    pub fn f(&self) -> &BiPoly {
        &self.f
    }

    pub fn z_monomial(&self, unit: &Q, exps: [u32; 4]) -> BiPoly {
        let mut p = BiPoly::constant(unit.clone());
        for (zi, &a) in self.z.iter().zip(exps.iter()) {
            for _ in 0..a {
                p = &p * zi;
            }
        }
        p
    }

    pub fn expand(&self, m: &ZMonomial) -> BiPoly {
        self.z_monomial(&m.unit, m.z)
    }

    /// Writes `p` as a unit times a product of the `z_i`, if possible.
    pub fn decompose(&self, p: &BiPoly) -> Result<Option<ZMonomial>> {
        if p.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !p.is_homogeneous() {
            return Ok(None);
        }
        let mut rest = p.clone();
        let mut z = [0u32; 4];
        for (i, zi) in self.z.iter().enumerate() {
            while !rest.is_constant() {
                match rest.exact_div(zi) {
                    Ok(quot) => {
                        rest = quot;
                        z[i] += 1;
                    }
                    Err(_) => break,
                }
            }
        }
        if rest.is_constant() {
            Ok(Some(ZMonomial {
                unit: rest.constant_term(),
                z,
            }))
        } else {
            Ok(None)
        }
    }

    /// z-form when `p` is a unit times a z-monomial, expanded form otherwise.
    pub fn render(&self, p: &BiPoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        match self.decompose(p) {
            Ok(Some(m)) => m.to_string(),
            _ => p.to_string(),
        }
    }

    /// Parses the z-form produced by [`Context::render`], e.g. `-2*z1^2*z4`.
    pub fn parse_zform(&self, s: &str) -> Result<BiPoly> {
        self.parse_zmonomial(s).map(|m| match m {
            None => BiPoly::zero(),
            Some(m) => self.expand(&m),
        })
    }

    /// `Ok(None)` for the literal `0`.
    pub fn parse_zmonomial(&self, s: &str) -> Result<Option<ZMonomial>> {
        let t = s.trim();
        if t == "0" {
            return Ok(None);
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(r) => (true, r.trim()),
            None => (false, t),
        };
        let bad = || Error::Parse(format!("not a z-monomial: {s:?}"));
        let mut unit = Q::one();
        let mut z = [0u32; 4];
        let mut saw_factor = false;
        for (k, part) in body.split('*').enumerate() {
            let part = part.trim();
            if let Some(rest) = part.strip_prefix('z') {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                    None => (rest, 1),
                };
                let i: usize = idx.parse().map_err(|_| bad())?;
                if !(1..=4).contains(&i) {
                    return Err(bad());
                }
                z[i - 1] += exp;
                saw_factor = true;
            } else if k == 0 {
                unit = parse_rational(part)?;
            } else {
                return Err(bad());
            }
        }
        if !saw_factor && body.is_empty() {
            return Err(bad());
        }
        if neg {
            unit = -unit;
        }
        if unit.is_zero() {
            return Ok(None);
        }
        Ok(Some(ZMonomial { unit, z }))
    }
}

/// Determinant profile: unit and z-exponents.
pub type DetProfile = ZMonomial;

pub fn ctx_new(lambda: Q, mu: Option<Q>) -> Result<Context> {
    Context::new(lambda, mu)
}

pub fn z_monomial_decompose(ctx: &Context, p: &BiPoly) -> Result<Option<ZMonomial>> {
    ctx.decompose(p)
}
