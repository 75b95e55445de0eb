use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Names reserved for the square-zero generator of dual numbers.
pub(crate) const EPSILON_NAMES: [&str; 2] = ["e", "eps"];

/// Describes one of the supported exact coefficient rings.
///
/// The textual form is the one accepted on the command line:
/// `q`, `fp:7`, `dual:q`, `loc:q:s,t:4`, and nestings such as `dual:loc:fp:5:s,t:3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RingDescriptor {
    Rationals,
    PrimeField(u64),
    DualNumbers(Box<RingDescriptor>),
    LocalTruncation {
        base: Box<RingDescriptor>,
        vars: Vec<String>,
        order: u32,
    },
}

impl RingDescriptor {
    pub fn dual(base: RingDescriptor) -> Self {
        RingDescriptor::DualNumbers(Box::new(base))
    }

    pub fn truncation(base: RingDescriptor, vars: &[&str], order: u32) -> Self {
        RingDescriptor::LocalTruncation {
            base: Box::new(base),
            vars: vars.iter().map(|v| v.to_string()).collect(),
            order,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mut names = Vec::new();
        self.validate_inner(&mut names)
    }

    fn validate_inner(&self, names: &mut Vec<String>) -> Result<()> {
        match self {
            RingDescriptor::Rationals => Ok(()),
            RingDescriptor::PrimeField(p) => {
                if super::prime::is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::InvalidDescriptor(format!("{p} is not prime")))
                }
            }
            RingDescriptor::DualNumbers(base) => base.validate_inner(names),
            RingDescriptor::LocalTruncation { base, vars, order } => {
                if *order < 1 {
                    return Err(Error::InvalidDescriptor("truncation order must be at least 1".into()));
                }
                if vars.is_empty() {
                    return Err(Error::InvalidDescriptor(
                        "truncation needs at least one variable".into(),
                    ));
                }
                for v in vars {
                    let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !ok || EPSILON_NAMES.contains(&v.as_str()) || v == "mod" {
                        return Err(Error::InvalidDescriptor(format!("bad variable name {v:?}")));
                    }
                    if names.contains(v) {
                        return Err(Error::InvalidDescriptor(format!("variable {v:?} used twice")));
                    }
                    names.push(v.clone());
                }
                base.validate_inner(names)
            }
        }
    }

    fn parse_tokens<'a, I: Iterator<Item = &'a str>>(tokens: &mut I) -> Result<Self> {
        let bad = |m: &str| Error::InvalidDescriptor(m.to_string());
        match tokens.next() {
            Some("q") => Ok(RingDescriptor::Rationals),
            Some("fp") => {
                let p = tokens
                    .next()
                    .ok_or_else(|| bad("fp needs a prime"))?
                    .parse::<u64>()
                    .map_err(|e| bad(&format!("bad prime: {e}")))?;
                Ok(RingDescriptor::PrimeField(p))
            }
            Some("dual") => Ok(RingDescriptor::dual(Self::parse_tokens(tokens)?)),
            Some("loc") => {
                let base = Self::parse_tokens(tokens)?;
                let vars = tokens
                    .next()
                    .ok_or_else(|| bad("loc needs a variable list"))?
                    .split(',')
                    .map(|v| v.trim().to_string())
                    .collect();
                let order = tokens
                    .next()
                    .ok_or_else(|| bad("loc needs an order"))?
                    .parse::<u32>()
                    .map_err(|e| bad(&format!("bad order: {e}")))?;
                Ok(RingDescriptor::LocalTruncation {
                    base: Box::new(base),
                    vars,
                    order,
                })
            }
            Some(other) => Err(bad(&format!("unknown ring kind {other:?}"))),
            None => Err(bad("empty descriptor")),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.trim().split(':');
        let d = Self::parse_tokens(&mut tokens)?;
        if let Some(extra) = tokens.next() {
            return Err(Error::InvalidDescriptor(format!("trailing component {extra:?}")));
        }
        d.validate()?;
        Ok(d)
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rationals => write!(f, "q"),
            RingDescriptor::PrimeField(p) => write!(f, "fp:{p}"),
            RingDescriptor::DualNumbers(b) => write!(f, "dual:{b}"),
            RingDescriptor::LocalTruncation { base, vars, order } => {
                write!(f, "loc:{base}:{}:{order}", vars.join(","))
            }
        }
    }
}

impl From<RingDescriptor> for String {
    fn from(d: RingDescriptor) -> String {
        d.to_string()
    }
}

impl TryFrom<String> for RingDescriptor {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
