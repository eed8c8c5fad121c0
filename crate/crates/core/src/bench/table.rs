use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use super::emit::{Cell, Tabular};
use super::grid::GridSpec;
use crate::error::{FaddeevaError, Result};
use crate::params::EvalParams;
use crate::reference::{
    cf_convergent, weideman_eval, weideman_fit_coeffs, zaghloul_eval, WeidemanModel, ZaghloulParams,
};
use crate::trap::plane_unchecked;
use crate::xprec::{w_oracle, XComplex};

/// `trap(N)`, `weideman(N)`, `cf(n)` or `zaghloul(a,K)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MethodSpec {
    Trap(u32),
    Weideman(usize),
    Cf(u32),
    Zaghloul { a: f64, terms: u32 },
}

fn bad(s: &str) -> FaddeevaError {
    FaddeevaError::Parameter(format!(
        "unknown method {s:?}; expected trap(N), weideman(N), cf(n) or zaghloul(a,K)"
    ))
}

fn number<T: FromStr>(s: &str, whole: &str) -> Result<T> {
    s.trim().parse().map_err(|_| bad(whole))
}

impl FromStr for MethodSpec {
    type Err = FaddeevaError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (name, args) = match t.find('(') {
            Some(i) if t.ends_with(')') => (&t[..i], &t[i + 1..t.len() - 1]),
            None => (t, ""),
            _ => return Err(bad(s)),
        };
        let args: Vec<&str> = if args.trim().is_empty() {
            vec![]
        } else {
            args.split(',').collect()
        };
        match (name.trim(), args.as_slice()) {
            ("trap", []) => Ok(Self::Trap(11)),
            ("trap", [n]) => Ok(Self::Trap(number(n, s)?)),
            ("weideman", []) => Ok(Self::Weideman(40)),
            ("weideman", [n]) => Ok(Self::Weideman(number(n, s)?)),
            ("cf", []) => Ok(Self::Cf(9)),
            ("cf", [n]) => Ok(Self::Cf(number(n, s)?)),
            ("zaghloul", []) => Ok(Self::Zaghloul { a: 0.5, terms: 38 }),
            ("zaghloul", [a, k]) => {
                let a = match a.trim().split_once('/') {
                    Some((p, q)) => number::<f64>(p, s)? / number::<f64>(q, s)?,
                    None => number(a, s)?,
                };
                Ok(Self::Zaghloul {
                    a,
                    terms: number(k, s)?,
                })
            }
            _ => Err(bad(s)),
        }
    }
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trap(n) => write!(f, "trap({n})"),
            Self::Weideman(n) => write!(f, "weideman({n})"),
            Self::Cf(n) => write!(f, "cf({n})"),
            Self::Zaghloul { a, terms } => write!(f, "zaghloul({a},{terms})"),
        }
    }
}

/// Splits a comma-separated list, ignoring commas inside parentheses.
pub fn parse_methods(list: &str) -> Result<Vec<MethodSpec>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in list.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(list[start..i].parse()?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !list[start..].trim().is_empty() {
        out.push(list[start..].parse()?);
    }
    if out.is_empty() {
        return Err(FaddeevaError::Parameter("empty method list".into()));
    }
    Ok(out)
}

/// A method ready to evaluate.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum Method {
    Trap(EvalParams),
    Weideman(WeidemanModel),
    Cf(u32),
    Zaghloul(ZaghloulParams),
}

impl Method {
    /// Sets up the method; fits the Weideman coefficients if needed.
    pub fn prepare(spec: MethodSpec) -> Result<Self> {
        Ok(match spec {
            MethodSpec::Trap(n) => Self::Trap(EvalParams::new(n)?),
            MethodSpec::Weideman(n) => Self::Weideman(weideman_fit_coeffs(n, w_oracle)?),
            MethodSpec::Cf(n) => {
                if n == 0 {
                    return Err(FaddeevaError::Parameter("cf(n) needs n >= 1".into()));
                }
                Self::Cf(n)
            }
            MethodSpec::Zaghloul { a, terms } => Self::Zaghloul(ZaghloulParams::new(a, terms)?),
        })
    }

    pub fn spec(&self) -> MethodSpec {
        match self {
            Self::Trap(p) => MethodSpec::Trap(p.n()),
            Self::Weideman(m) => MethodSpec::Weideman(m.n()),
            Self::Cf(n) => MethodSpec::Cf(*n),
            Self::Zaghloul(p) => MethodSpec::Zaghloul {
                a: p.a,
                terms: p.terms,
            },
        }
    }

    /// Whether `z` lies where the method is meant to be used.
    pub fn rated(&self, z: Complex64) -> bool {
        match self {
            Self::Trap(_) => true,
            Self::Weideman(_) => z.im >= 0.0,
            Self::Cf(_) => z.norm() >= 8.0 && z.im >= 0.0,
            Self::Zaghloul(_) => z.re >= 0.0 && z.im >= 0.0,
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            Self::Trap(p) => crate::trap::w_plane(z, p),
            Self::Weideman(m) => weideman_eval(z, m),
            Self::Cf(n) => cf_convergent(z, *n),
            Self::Zaghloul(p) => zaghloul_eval(z, *p),
        }
    }

    /// Evaluation without argument checks, for timing loops over rated points.
    #[inline]
    pub(crate) fn eval_fast(&self, z: Complex64) -> Complex64 {
        match self {
            Self::Trap(p) => plane_unchecked(z, p),
            _ => self.eval(z).unwrap_or(Complex64::new(f64::NAN, f64::NAN)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AccuracyRow {
    pub method: String,
    pub max_abs: f64,
    pub max_rel: f64,
    /// Grid points inside the method's rated domain.
    pub points: usize,
}

impl Tabular for AccuracyRow {
    fn header() -> &'static [&'static str] {
        &["method", "max_abs", "max_rel", "points"]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Text(self.method.clone()),
            Cell::Real(self.max_abs),
            Cell::Real(self.max_rel),
            Cell::Int(self.points as u64),
        ]
    }
}

/// Errors of each method against the oracle over the rated part of `grid`.
/// Relative errors are taken over `Im z >= 0`.
pub fn accuracy_table(methods: &[MethodSpec], grid: &GridSpec) -> Result<Vec<AccuracyRow>> {
    let prepared: Vec<Method> = methods
        .iter()
        .map(|&m| Method::prepare(m))
        .collect::<Result<_>>()?;
    let k = prepared.len();
    let zero = || (vec![0.0f64; k], vec![0.0f64; k], vec![0usize; k]);
    let (abs, rel, pts) = (0..grid.len())
        .into_par_iter()
        .fold(zero, |(mut abs, mut rel, mut pts), i| {
            let z = grid.point(i);
            let exact = match w_oracle(z) {
                Ok(v) if v.is_finite() => v,
                _ => return (abs, rel, pts),
            };
            let norm = exact.norm().to_f64();
            for (j, m) in prepared.iter().enumerate() {
                if !m.rated(z) {
                    continue;
                }
                pts[j] += 1;
                let err = match m.eval(z) {
                    Ok(v) => (XComplex::from_c64(v) - exact).norm().to_f64(),
                    Err(_) => f64::INFINITY,
                };
                let err = if err.is_nan() { f64::INFINITY } else { err };
                abs[j] = abs[j].max(err);
                if z.im >= 0.0 && norm > 0.0 {
                    rel[j] = rel[j].max(err / norm);
                }
            }
            (abs, rel, pts)
        })
        .reduce(zero, |(mut a1, mut r1, mut p1), (a2, r2, p2)| {
            for j in 0..k {
                a1[j] = a1[j].max(a2[j]);
                r1[j] = r1[j].max(r2[j]);
                p1[j] += p2[j];
            }
            (a1, r1, p1)
        });
    prepared
        .iter()
        .enumerate()
        .map(|(j, m)| {
            if pts[j] == 0 {
                return Err(FaddeevaError::Parameter(format!(
                    "no grid points in the rated domain of {}",
                    m.spec()
                )));
            }
            Ok(AccuracyRow {
                method: m.spec().to_string(),
                max_abs: abs[j],
                max_rel: rel[j],
                points: pts[j],
            })
        })
        .collect()
}
