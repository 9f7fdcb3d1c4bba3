//! Exact entropy values `π·A + B` with `A`, `B` log-linear.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::loglinear::LogLinear;
use super::rational::parse_rational;
use crate::{BigFloat, Error, Precision, Rational, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactEntropy {
    pub pi_part: LogLinear,
    pub plain_part: LogLinear,
}

impl ExactEntropy {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pi_part(pi_part: LogLinear) -> Self {
        ExactEntropy {
            pi_part,
            plain_part: LogLinear::zero(),
        }
    }

    pub fn from_plain_part(plain_part: LogLinear) -> Self {
        ExactEntropy {
            pi_part: LogLinear::zero(),
            plain_part,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.pi_part.is_zero() && self.plain_part.is_zero()
    }

    pub fn eval(&self, prec: Precision) -> BigFloat {
        let mut acc = self.plain_part.eval(prec);
        if !self.pi_part.is_zero() {
            acc = acc + self.pi_part.eval(prec) * BigFloat::pi(prec);
        }
        acc
    }

    /// Fixed-point rendering with `places` decimals, evaluated at `prec`.
    pub fn decimal(&self, prec: Precision, places: u32) -> String {
        self.eval(prec).to_fixed(places)
    }

    pub fn to_json_value(&self, prec: Precision, places: u32) -> EntropyJson {
        let terms = |v: &LogLinear| {
            v.logs()
                .iter()
                .map(|(p, c)| LogTerm {
                    prime: *p,
                    coeff: c.to_string(),
                })
                .collect()
        };
        EntropyJson {
            pi_log: terms(&self.pi_part),
            pi_const: self.pi_part.constant().to_string(),
            plain_log: terms(&self.plain_part),
            plain_const: self.plain_part.constant().to_string(),
            decimal: self.decimal(prec, places),
        }
    }

    pub fn to_json(&self, prec: Precision, places: u32) -> String {
        serde_json::to_string(&self.to_json_value(prec, places)).expect("serializable")
    }
}

impl fmt::Display for ExactEntropy {
    /// `-7*pi*log(2) + (119/240)*pi`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.pi_part.write_terms("pi", &mut s);
        self.plain_part.write_terms("", &mut s);
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogTerm {
    pub prime: u64,
    pub coeff: String,
}

/// Machine-readable form of an [`ExactEntropy`]. Rational fields are exact
/// `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntropyJson {
    pub pi_log: Vec<LogTerm>,
    pub pi_const: String,
    pub plain_log: Vec<LogTerm>,
    pub plain_const: String,
    pub decimal: String,
}

impl EntropyJson {
    pub fn to_exact(&self) -> Result<ExactEntropy> {
        let part = |terms: &[LogTerm], constant: &str| -> Result<LogLinear> {
            let mut acc = LogLinear::from(parse_rational(constant)?);
            for t in terms {
                if t.prime < 2 {
                    return Err(Error::invalid(format!("bad prime {}", t.prime)));
                }
                let c = parse_rational(&t.coeff)?;
                if c.is_zero() {
                    return Err(Error::invalid("zero coefficient in canonical form"));
                }
                let term = LogLinear::log_of(&c, &Rational::from_integer(t.prime.into()))?;
                if term.logs().len() != 1 || term.logs().get(&t.prime) != Some(&c) {
                    return Err(Error::invalid(format!("{} is not prime", t.prime)));
                }
                acc += &term;
            }
            Ok(acc)
        };
        Ok(ExactEntropy {
            pi_part: part(&self.pi_log, &self.pi_const)?,
            plain_part: part(&self.plain_log, &self.plain_const)?,
        })
    }
}
